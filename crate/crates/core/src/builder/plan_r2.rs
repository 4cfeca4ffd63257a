//! Witness plans for passports with exactly three branch points (two colors).
//!
//! The cycle must alternate the two colors strictly, which removes the slack
//! available with more colors and is why the exceptional families live here.
//! Dispatch, for a canonical passport already known to be realizable:
//!
//! * both partitions all 2s: the plain `2s`-cycle (forces `s = n/2`);
//! * `s <= q_2`: cycle `(1,2)^s` carrying each color's largest valencies,
//!   everything else in exterior trees;
//! * `q_2 = 1`: cycle is a bigon; the remaining color-1 valencies hang as
//!   branches at pendant stars of the single big color-2 vertex and a bounded
//!   subset-sum picks the interior set;
//! * `q_1 = q_2`: full cycle, shift single-star branches one at a time;
//! * first partition not all 2s: long branches from the smallest
//!   `q_1 - q_2` color-1 valencies plus single-star slack;
//! * first partition all 2s: every branch is an even-weight chain, so even
//!   offsets shift weight-2 branches; odd offsets shorten the cycle by one
//!   color-2 vertex, re-hung off-cycle with valency `b_{2,1}` in a branch of
//!   weight `2 b_{2,1}`.

use super::plan::SunflowerPlan;
use super::scaffold::{Arena, Digest, Dump, VertexRef};
use super::solve::{solve_bounded_sum, BoundedSumOutcome};
use super::BuildError;
use crate::decision::{classify_valid, Verdict};
use crate::passport::LaurentPassport;
use std::collections::BTreeSet;

fn internal(detail: impl Into<String>) -> BuildError {
    BuildError::PlanInconsistent { detail: detail.into() }
}

fn alternating_cycle(pairs: usize) -> Vec<usize> {
    let mut cycle = Vec::with_capacity(2 * pairs);
    for _ in 0..pairs {
        cycle.push(1);
        cycle.push(2);
    }
    cycle
}

/// Plans a witness for a canonical passport with `q = 3`. Exceptional
/// passports are rejected up front (the classifier is the sole authority on
/// impossibility).
pub fn plan_r2(p: &LaurentPassport) -> Result<SunflowerPlan, BuildError> {
    if p.q() != 3 {
        return Err(internal("plan_r2 requires q = 3"));
    }
    match classify_valid(p) {
        Verdict::Realizable => {}
        Verdict::Exceptional(families) => return Err(BuildError::NotRealizable(families)),
        Verdict::Invalid(v) => return Err(BuildError::Invalid(v)),
    }
    let d = Digest::of(p);
    let first_all_twos = p.colored()[0].is_all(2);
    let second_all_twos = p.colored()[1].is_all(2);

    if first_all_twos && second_all_twos {
        // Realizable only at s = n/2: the plain cycle of n stars.
        if d.s * 2 != d.n {
            return Err(internal("all-2s passport escaped the classifier"));
        }
        let arena = Arena::new(2, alternating_cycle(d.s));
        return Ok(arena.into_plan(&BTreeSet::new(), d.s));
    }
    if d.s <= d.q[1] {
        chain_plan(&d)
    } else if d.q[1] == 1 {
        single_big_vertex_plan(&d)
    } else if d.q[0] == d.q[1] {
        equal_counts_plan(&d)
    } else if !first_all_twos {
        long_branch_plan(&d)
    } else {
        even_weight_plan(&d)
    }
}

/// `s <= q_2`: sunflower with `s` vertices of each color on the cycle and all
/// remaining valencies in exterior trees.
fn chain_plan(d: &Digest) -> Result<SunflowerPlan, BuildError> {
    let s = d.s;
    let mut arena = Arena::new(2, alternating_cycle(s));
    let mut dump = Dump::new(2);
    for t in 0..2 * s {
        let color = arena.cycle[t];
        let slot = t / 2;
        let value = d.b[color - 1][d.q[color - 1] - s + slot];
        for id in arena.add_stars(VertexRef::Node(t), value - 2) {
            dump.seed_star(&arena, id);
        }
    }
    let mut leftovers =
        vec![d.b[0][..d.q[0] - s].to_vec(), d.b[1][..d.q[1] - s].to_vec()];
    dump.run(&mut arena, &mut leftovers).map_err(internal)?;
    Ok(arena.into_plan(&BTreeSet::new(), s))
}

/// Shared tail for the shifting cases: solve for the interior offset over
/// the long-branch weights with single-star slack, then mark the selection.
fn select_interior(
    arena: Arena,
    longs: &[(usize, usize)],
    singles: &[usize],
    base: usize,
    s: usize,
) -> Result<SunflowerPlan, BuildError> {
    let delta = s.checked_sub(base).ok_or_else(|| internal("interior base exceeds target"))?;
    let weights: Vec<usize> = longs.iter().map(|&(_, w)| w).collect();
    let outcome =
        solve_bounded_sum(&weights, singles.len(), delta).map_err(|e| internal(e.to_string()))?;
    let solution = match outcome {
        BoundedSumOutcome::Solved(sol) => sol,
        other => return Err(internal(format!("interior selection failed: {other:?}"))),
    };
    let mut interior = BTreeSet::new();
    for (picked, &(root, _)) in solution.x.iter().zip(longs) {
        if *picked {
            interior.insert(root);
        }
    }
    interior.extend(singles.iter().take(solution.y));
    Ok(arena.into_plan(&interior, s))
}

/// `q_2 = 1`, `s > 1`: bigon cycle with the largest color-1 valency and the
/// single color-2 valency; the other color-1 valencies hang at the big
/// vertex's pendant stars.
fn single_big_vertex_plan(d: &Digest) -> Result<SunflowerPlan, BuildError> {
    let q1 = d.q[0];
    let big = d.b[1][0];
    let mut arena = Arena::new(2, alternating_cycle(1));
    let mut singles = arena.add_stars(VertexRef::Node(0), d.b[0][q1 - 1] - 2);
    let hosts = arena.add_stars(VertexRef::Node(1), big - 2);
    if q1 - 1 > hosts.len() {
        return Err(internal("big vertex too small to host the long branches"));
    }
    let mut longs = Vec::new();
    for (idx, &value) in d.b[0][..q1 - 1].iter().enumerate() {
        arena.add_stars(VertexRef::Tip { star: hosts[idx], color: 1 }, value - 1);
        longs.push((hosts[idx], value));
    }
    singles.extend(hosts.into_iter().skip(q1 - 1));
    select_interior(arena, &longs, &singles, 1, d.s)
}

/// `q_1 = q_2`, `s > q_2`: full cycle, every pendant star an independently
/// shiftable weight-1 branch.
fn equal_counts_plan(d: &Digest) -> Result<SunflowerPlan, BuildError> {
    let q2 = d.q[1];
    let mut arena = Arena::new(2, alternating_cycle(q2));
    let mut singles = Vec::new();
    for t in 0..2 * q2 {
        let color = arena.cycle[t];
        let value = d.b[color - 1][t / 2];
        singles.extend(arena.add_stars(VertexRef::Node(t), value - 2));
    }
    select_interior(arena, &[], &singles, q2, d.s)
}

/// `q_1 > q_2 > 1`, first partition not all 2s, `s > q_2`: cycle carries the
/// `q_2` largest color-1 valencies; the rest become long branches at pendant
/// stars of color-2 vertices.
fn long_branch_plan(d: &Digest) -> Result<SunflowerPlan, BuildError> {
    let (q1, q2) = (d.q[0], d.q[1]);
    let l = q1 - q2;
    let mut arena = Arena::new(2, alternating_cycle(q2));
    let mut singles = Vec::new();
    let mut host_pool = Vec::new();
    for t in 0..2 * q2 {
        let color = arena.cycle[t];
        let slot = t / 2;
        let value = if color == 1 { d.b[0][l + slot] } else { d.b[1][slot] };
        let roots = arena.add_stars(VertexRef::Node(t), value - 2);
        if color == 1 {
            singles.extend(roots);
        } else {
            host_pool.extend(roots);
        }
    }
    if l > host_pool.len() {
        return Err(internal("too few pendant stars to host long branches"));
    }
    let mut longs = Vec::new();
    for (idx, &value) in d.b[0][..l].iter().enumerate() {
        arena.add_stars(VertexRef::Tip { star: host_pool[idx], color: 1 }, value - 1);
        longs.push((host_pool[idx], value));
    }
    singles.extend(host_pool.into_iter().skip(l));
    select_interior(arena, &longs, &singles, q2, d.s)
}

/// First partition all 2s (so every color-1 vertex has valency exactly 2 and
/// branches come in even weights), second not all 2s, `q_2 > 1`, `s > q_2`.
fn even_weight_plan(d: &Digest) -> Result<SunflowerPlan, BuildError> {
    let q2 = d.q[1];
    let s = d.s;
    if (s - q2).is_multiple_of(2) {
        // Cycle (1,2)^{q_2}; each pendant star's 1-tip is grown once, giving
        // weight-2 branches; shift (s - q_2)/2 of them.
        let mut arena = Arena::new(2, alternating_cycle(q2));
        let mut trees = Vec::new();
        for t in 0..2 * q2 {
            if arena.cycle[t] == 1 {
                continue; // color-1 valencies are all 2: no pendants
            }
            let value = d.b[1][t / 2];
            for root in arena.add_stars(VertexRef::Node(t), value - 2) {
                arena.add_stars(VertexRef::Tip { star: root, color: 1 }, 1);
                trees.push(root);
            }
        }
        let need = (s - q2) / 2;
        if need > trees.len() {
            return Err(internal("not enough weight-2 branches to shift"));
        }
        let interior: BTreeSet<usize> = trees.into_iter().take(need).collect();
        Ok(arena.into_plan(&interior, s))
    } else {
        // Odd offset: cycle (1,2)^{q_2 - 1} with the largest q_2 - 1 color-2
        // valencies; the smallest, w = b_{2,1}, moves off-cycle into a branch
        // of weight 2w anchored two stars away from a cycle color-2 vertex.
        let w = d.b[1][0];
        let mut arena = Arena::new(2, alternating_cycle(q2 - 1));
        let mut trees: Vec<(usize, usize)> = Vec::new(); // (root, link star at its 1-tip)
        for t in 0..2 * (q2 - 1) {
            if arena.cycle[t] == 1 {
                continue;
            }
            let value = d.b[1][1 + t / 2];
            for root in arena.add_stars(VertexRef::Node(t), value - 2) {
                let link = arena.add_stars(VertexRef::Tip { star: root, color: 1 }, 1)[0];
                trees.push((root, link));
            }
        }
        // The last tree becomes the carrier of the off-cycle vertex: its link
        // star fans out to valency w, and each fan star's 1-tip is grown once
        // to keep every color-1 vertex at valency 2. Total weight 2w.
        let (carrier, link) =
            trees.pop().ok_or_else(|| internal("no pendant star for the carrier"))?;
        let fans = arena.add_stars(VertexRef::Tip { star: link, color: 2 }, w - 1);
        for fan in fans {
            arena.add_stars(VertexRef::Tip { star: fan, color: 1 }, 1);
        }

        let delta = s + 1 - q2; // even by the parity of this arm
        let outcome = solve_bounded_sum(&[w], trees.len(), delta / 2)
            .map_err(|e| internal(e.to_string()))?;
        let solution = match outcome {
            BoundedSumOutcome::Solved(sol) => sol,
            other => return Err(internal(format!("parity selection failed: {other:?}"))),
        };
        let mut interior = BTreeSet::new();
        if solution.x[0] {
            interior.insert(carrier);
        }
        interior.extend(trees.iter().take(solution.y).map(|&(root, _)| root));
        Ok(arena.into_plan(&interior, s))
    }
}
