//! Edge packings under the edge geodesic pre-distance.

use alloc::vec;
use alloc::vec::Vec;

use super::{Edge, Graph};
use crate::error::Result;

/// Pairwise pre-distance table for the candidate edges; `None` is infinite.
fn predistance_table(g: &Graph, candidates: &[Edge]) -> Result<Vec<Vec<Option<usize>>>> {
    let n = candidates.len();
    let mut table = vec![vec![None; n]; n];
    for i in 0..n {
        for j in i..n {
            let d = g.edge_geodesic_predistance(candidates[i], candidates[j])?;
            table[i][j] = d;
            table[j][i] = d;
        }
    }
    Ok(table)
}

fn far_enough(d: Option<usize>, r: usize) -> bool {
    d.map_or(true, |x| x >= r)
}

/// Checks that `chosen` is an `r`-packing of candidate edges on `g`.
pub fn is_packing(g: &Graph, chosen: &[Edge], r: usize) -> Result<bool> {
    for i in 0..chosen.len() {
        for j in i + 1..chosen.len() {
            if !far_enough(g.edge_geodesic_predistance(chosen[i], chosen[j])?, r) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Greedy maximal `r`-packing in candidate order.
///
/// Scans the candidates once, keeping an edge whenever it is at pre-distance
/// at least `r` from everything already kept. The result is maximal under
/// inclusion and deterministic given the candidate order; it is the
/// lower-bound construction used by the packing-number arguments.
pub fn greedy_packing(g: &Graph, candidates: &[Edge], r: usize) -> Result<Vec<Edge>> {
    if r == 0 {
        return Ok(candidates.to_vec());
    }
    let table = predistance_table(g, candidates)?;
    let mut kept: Vec<usize> = Vec::new();
    for i in 0..candidates.len() {
        if kept.iter().all(|&k| far_enough(table[k][i], r)) {
            kept.push(i);
        }
    }
    let chosen: Vec<Edge> = kept.iter().map(|&i| candidates[i]).collect();
    debug_assert!(is_packing(g, &chosen, r)?);
    Ok(chosen)
}

/// Exact maximum `r`-packing by branch and bound, for small candidate sets
/// (at most 20 edges). Maximum packing is a maximum independent set in the
/// conflict graph of candidate pairs closer than `r`.
pub fn exact_max_packing(g: &Graph, candidates: &[Edge], r: usize) -> Result<Vec<Edge>> {
    let n = candidates.len();
    if n > 20 {
        return Err(crate::error::Error::Guard { what: "exact packing candidates", limit: 20, got: n });
    }
    if r == 0 {
        return Ok(candidates.to_vec());
    }
    let table = predistance_table(g, candidates)?;
    let mut conflict = vec![0u32; n];
    for i in 0..n {
        for j in 0..n {
            if i != j && !far_enough(table[i][j], r) {
                conflict[i] |= 1 << j;
            }
        }
    }
    let mut best: u32 = 0;
    // branch on the lowest remaining candidate: in or out
    fn rec(idx: usize, n: usize, chosen: u32, forbidden: u32, conflict: &[u32], best: &mut u32) {
        if idx == n {
            if chosen.count_ones() > best.count_ones() {
                *best = chosen;
            }
            return;
        }
        if chosen.count_ones() + (n - idx) as u32 <= best.count_ones() {
            return;
        }
        if forbidden & (1 << idx) == 0 {
            rec(idx + 1, n, chosen | 1 << idx, forbidden | conflict[idx], conflict, best);
        }
        rec(idx + 1, n, chosen, forbidden, conflict, best);
    }
    rec(0, n, 0, 0, &conflict, &mut best);
    Ok((0..n).filter(|&i| best & (1 << i) != 0).map(|i| candidates[i]).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generators::two_cycles_with_rungs;

    #[test]
    fn radius_zero_keeps_everything() {
        let g = Graph::path(6);
        let cands = [(0, 1), (1, 2), (2, 3)];
        assert_eq!(greedy_packing(&g, &cands, 0).unwrap(), cands.to_vec());
    }

    #[test]
    fn mutual_exclusion_at_radius() {
        // two candidate edges at pre-distance r-1: exactly one survives
        let g = Graph::path(8);
        let cands = [(0, 1), (3, 4)]; // pre-distance 2
        let kept = greedy_packing(&g, &cands, 3).unwrap();
        assert_eq!(kept, vec![(0, 1)]);
        assert!(is_packing(&g, &kept, 3).unwrap());
    }

    #[test]
    fn greedy_matches_exact_on_rung_family() {
        let c = two_cycles_with_rungs(20).unwrap();
        for r in 0..4 {
            let greedy = greedy_packing(&c.base, &c.rungs, r).unwrap();
            let exact = exact_max_packing(&c.base, &c.rungs, r).unwrap();
            assert!(is_packing(&c.base, &greedy, r).unwrap());
            assert!(is_packing(&c.base, &exact, r).unwrap());
            assert!(greedy.len() <= exact.len());
        }
    }

    #[test]
    fn exact_guard() {
        let g = Graph::complete(10);
        let cands: Vec<Edge> = g.edges().to_vec(); // 45 > 20
        assert!(exact_max_packing(&g, &cands, 1).is_err());
    }
}
