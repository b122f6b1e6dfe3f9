//! Set partitions as restricted growth strings.

use crate::graph::Vertex;
use std::collections::BTreeSet;

/// Calls `f(rgs, blocks)` for every set partition of `0..n` whose block count
/// lies in `min_blocks..=max_blocks`, in lexicographic order of restricted
/// growth strings. `f` returns `false` to stop; the return value reports
/// whether enumeration ran to completion.
pub fn visit_partitions<F>(n: usize, min_blocks: usize, max_blocks: usize, mut f: F) -> bool
where
    F: FnMut(&[usize], usize) -> bool,
{
    if n == 0 {
        return if min_blocks == 0 { f(&[], 0) } else { true };
    }
    let mut rgs = vec![0; n];
    rec(&mut rgs, 1, 1, min_blocks, max_blocks, &mut f)
}

fn rec<F>(rgs: &mut [usize], i: usize, blocks: usize, lo: usize, hi: usize, f: &mut F) -> bool
where
    F: FnMut(&[usize], usize) -> bool,
{
    let n = rgs.len();
    if blocks > hi || blocks + (n - i) < lo {
        return true;
    }
    if i == n {
        return f(rgs, blocks);
    }
    for b in 0..=blocks {
        rgs[i] = b;
        let nb = if b == blocks { blocks + 1 } else { blocks };
        if !rec(rgs, i + 1, nb, lo, hi, f) {
            return false;
        }
    }
    true
}

/// Groups `items` by the block labels of a restricted growth string.
pub fn blocks_of(rgs: &[usize], blocks: usize, items: &[Vertex]) -> Vec<BTreeSet<Vertex>> {
    let mut out = vec![BTreeSet::new(); blocks];
    for (i, &b) in rgs.iter().enumerate() {
        out[b].insert(items[i]);
    }
    out
}
