"""Smoke test for the identikit_py extension module.

Build and install first:
    maturin build --release -m crates/py/Cargo.toml -o dist && pip install dist/identikit_py-*.whl
"""

import identikit_py as ik


def main():
    c4 = ik.Graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert (c4.n, c4.m) == (4, 4)
    assert ik.recognize(c4, "chordal") is False

    target, bags = ik.solve(c4, "path", k=1)
    assert ik.recognize(target, "path")
    assert ik.verify_witness(c4, target, bags)
    assert ik.solve(c4, "clique", k=0) is None
    assert ik.oracle_min(c4, "path") == 1

    two_k2 = ik.Graph(4, [(0, 1), (2, 3)])
    p3 = ik.Graph(3, [(0, 1), (1, 2)])
    bags = ik.identify_to_forest(two_k2, p3)
    assert bags is not None and ik.verify_witness(two_k2, p3, bags)

    verdict, _ = ik.kernelize_forest(c4, 1)
    assert verdict in ("yes", "no", "reduced")

    assert ik.Graph.from_text(c4.to_text()) == c4
    merged = c4.identify(0, 2)
    assert merged.n == 3 and merged.m == 2

    try:
        ik.solve(c4, "blob", k=1)
    except ValueError:
        pass
    else:
        raise AssertionError("unknown class accepted")

    code, out, _ = ik.run_cli(["--version"])
    assert code == 0 and out.startswith("identikit")
    print("smoke test passed")


if __name__ == "__main__":
    main()
