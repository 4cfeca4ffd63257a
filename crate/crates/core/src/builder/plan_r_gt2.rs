//! Witness plans for passports with more than three branch points, where
//! every valid passport is realizable.
//!
//! The cycle alternates color-1 vertices with arcs of the other colors. With
//! `j` color-1 vertices on the cycle and `L` arc-internal descents (each
//! putting one leaf 1-tip on the interior side), a sunflower has interior
//! size `j + L`; shifting a branch of weight `w` inside adds `w`. Dispatch on
//! the target `s`:
//!
//! * `s < q_2`: short cycle `(1,2)^s`, everything else placed greedily in
//!   exterior trees;
//! * `s <= q_2 + ... + q_r`: full cycle tuned so `j + L = s`, no shifting;
//! * `q_1 <= q_2 + ... + q_r < s`: base at `j + L = q_2 + ... + q_r`, then
//!   shift single-star branches one at a time;
//! * `q_1 > q_2 + ... + q_r < s`: the smallest `q_1 - (q_2 + ... + q_r)`
//!   color-1 valencies become off-cycle branch weights and a bounded
//!   subset-sum over them (slack: single-star branches) picks the interior
//!   set; when the first partition is all 2s every weight is even, and odd
//!   targets drop one cycle 1-vertex next to an ascending color pair,
//!   re-hanging it outside on that cycle star's 1-tip.

use super::plan::SunflowerPlan;
use super::scaffold::{Arena, Digest, Dump, VertexRef};
use super::solve::{solve_bounded_sum, BoundedSumOutcome};
use super::BuildError;
use crate::passport::LaurentPassport;
use std::collections::BTreeSet;

fn internal(detail: impl Into<String>) -> BuildError {
    BuildError::PlanInconsistent { detail: detail.into() }
}

/// Plans a witness for a canonical passport with `q > 3`.
pub fn plan_r_gt2(p: &LaurentPassport) -> Result<SunflowerPlan, BuildError> {
    if p.q() <= 3 {
        return Err(internal("plan_r_gt2 requires q > 3"));
    }
    let d = Digest::of(p);
    if d.s < d.q[1] {
        short_cycle_plan(&d)
    } else {
        long_cycle_plan(p, &d)
    }
}

/// Distributes the non-1 color multiset cyclically over `num_arcs` arcs.
/// Each arc ends up non-empty, strictly ascending, with no color repeated,
/// provided `q_c <= num_arcs <= sum(q_c)`.
fn deal_arcs(d: &Digest, num_arcs: usize) -> Vec<Vec<usize>> {
    let mut arcs = vec![Vec::new(); num_arcs];
    let mut at = 0;
    for color in 2..=d.r {
        for _ in 0..d.q[color - 1] {
            arcs[at % num_arcs].push(color);
            at += 1;
        }
    }
    arcs
}

/// `s < q_2`: cycle `(1,2)^s` carrying the largest valencies of colors 1 and
/// 2; every remaining valency is placed in exterior trees, so the interior
/// count is exactly the `s` cycle 1-vertices.
fn short_cycle_plan(d: &Digest) -> Result<SunflowerPlan, BuildError> {
    let s = d.s;
    let mut cycle = Vec::with_capacity(2 * s);
    for _ in 0..s {
        cycle.push(1);
        cycle.push(2);
    }
    let mut arena = Arena::new(d.r, cycle);
    let mut dump = Dump::new(d.r);
    dump.seed_gap_tips(&arena);

    for t in 0..2 * s {
        let color = arena.cycle[t];
        let on_cycle = s;
        let slot = t / 2; // s slots per color, in node order
        let value = d.b[color - 1][d.q[color - 1] - on_cycle + slot];
        for id in arena.add_stars(VertexRef::Node(t), value - 2) {
            dump.seed_star(&arena, id);
        }
    }

    let mut leftovers: Vec<Vec<usize>> = Vec::with_capacity(d.r);
    leftovers.push(d.b[0][..d.q[0] - s].to_vec());
    leftovers.push(d.b[1][..d.q[1] - s].to_vec());
    for c in 3..=d.r {
        leftovers.push(d.b[c - 1].clone());
    }
    dump.run(&mut arena, &mut leftovers).map_err(internal)?;
    Ok(arena.into_plan(&BTreeSet::new(), s))
}

/// All other cases: full alternating cycle with tuned descents, long branches
/// for off-cycle color-1 valencies, and interior selection by bounded
/// subset-sum.
fn long_cycle_plan(p: &LaurentPassport, d: &Digest) -> Result<SunflowerPlan, BuildError> {
    let (s, q1, sum_rest) = (d.s, d.q[0], d.sum_rest);
    let all_twos = p.colored()[0].is_all(2);

    // Parity repair: with an all-2s first partition every shiftable weight is
    // even, so targets of the wrong parity shorten the cycle by one 1-vertex.
    let shorten = all_twos && q1 > sum_rest && s > sum_rest && (s + sum_rest) % 2 == 1;

    let (num_arcs, l_int) = if shorten {
        (sum_rest - 1, 0)
    } else {
        let j = s.min(q1).min(sum_rest);
        (j, s.min(sum_rest) - j)
    };
    if num_arcs == 0 {
        return Err(internal("cycle needs at least one 1-vertex"));
    }

    let mut arcs = if shorten {
        let mut arcs = deal_arcs(d, sum_rest);
        // Merge the last color-2 arc with the first color-3 arc; the merged
        // (2,3) gap is ascending, so its 1-tip hangs in the exterior face.
        let q2 = d.q[1];
        let moved = arcs.remove(q2);
        arcs[q2 - 1].extend(moved);
        arcs
    } else {
        deal_arcs(d, num_arcs)
    };

    let mut remaining_descents = l_int;
    for arc in arcs.iter_mut() {
        let take = remaining_descents.min(arc.len() - 1);
        let len = arc.len();
        arc[len - 1 - take..].reverse();
        remaining_descents -= take;
    }
    if remaining_descents > 0 {
        return Err(internal("not enough descent capacity for the interior target"));
    }

    let mut cycle = Vec::new();
    for arc in &arcs {
        cycle.push(1);
        cycle.extend(arc);
    }
    let mut arena = Arena::new(d.r, cycle);
    let m = arena.cycle.len();

    // Cycle valencies: each color's largest values, smallest first per slot.
    let mut nodes_of: Vec<Vec<usize>> = vec![Vec::new(); d.r + 1];
    for (t, &c) in arena.cycle.iter().enumerate() {
        nodes_of[c].push(t);
    }
    let mut host_pool: Vec<usize> = Vec::new(); // pendant stars at non-1 vertices
    let mut singles: Vec<usize> = Vec::new();
    for (color, nodes) in nodes_of.iter().enumerate().skip(1) {
        let k = nodes.len();
        let values = &d.b[color - 1][d.q[color - 1] - k..];
        for (slot, &t) in nodes.iter().enumerate() {
            let roots = arena.add_stars(VertexRef::Node(t), values[slot] - 2);
            if color == 1 {
                singles.extend(roots);
            } else {
                host_pool.extend(roots);
            }
        }
    }

    // Off-cycle color-1 valencies, smallest first. The largest go onto
    // exterior 1-tips of ascending non-1 gaps; the rest become long branches
    // hanging at pendant stars of non-1 cycle vertices.
    let off1 = &d.b[0][..q1 - nodes_of[1].len()];
    let ascent_gaps: Vec<usize> = (0..m)
        .filter(|&g| {
            let a = arena.cycle[g];
            let b = arena.cycle[(g + 1) % m];
            a != 1 && b != 1 && a < b
        })
        .collect();
    let to_gaps = off1.len().min(ascent_gaps.len());
    let split = off1.len() - to_gaps;
    for (idx, &value) in off1[split..].iter().enumerate() {
        arena.add_stars(VertexRef::GapTip { gap: ascent_gaps[idx], color: 1 }, value - 1);
    }
    let mut longs: Vec<(usize, usize)> = Vec::new(); // (root id, weight)
    if split > host_pool.len() {
        return Err(internal("too few pendant stars to host long branches"));
    }
    for (host_idx, &value) in off1[..split].iter().enumerate() {
        let host = host_pool[host_idx];
        arena.add_stars(VertexRef::Tip { star: host, color: 1 }, value - 1);
        longs.push((host, value));
    }
    singles.extend(host_pool.into_iter().skip(split));

    // Interior selection.
    let base = num_arcs + l_int;
    let delta = s
        .checked_sub(base)
        .ok_or_else(|| internal("interior base exceeds target"))?;
    let weights: Vec<usize> = longs.iter().map(|&(_, w)| w).collect();
    debug_assert!(weights.windows(2).all(|w| w[0] <= w[1]));
    let outcome = solve_bounded_sum(&weights, singles.len(), delta)
        .map_err(|e| internal(e.to_string()))?;
    let solution = match outcome {
        BoundedSumOutcome::Solved(sol) => sol,
        other => return Err(internal(format!("interior selection failed: {other:?}"))),
    };
    let mut interior = BTreeSet::new();
    for (picked, &(root, _)) in solution.x.iter().zip(&longs) {
        if *picked {
            interior.insert(root);
        }
    }
    for &root in singles.iter().take(solution.y) {
        interior.insert(root);
    }
    Ok(arena.into_plan(&interior, s))
}
