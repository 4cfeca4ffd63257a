//! Brute-force realizability decision by exhaustive search over permutation
//! tuples with prescribed cycle types; the independent ground truth for the
//! classifier and the builder at small degree.
//!
//! The face permutation is fixed to the canonical representative of its
//! class (cycles on consecutive blocks), which costs nothing by relabeling.
//! Candidates for the first colored permutation are thinned to canonical
//! representatives modulo the face permutation's centralizer whenever the
//! face parts differ; with equal parts the centralizer gains a block swap
//! and the search simply runs unreduced. `NotRealizable` is reported only on
//! full exhaustion; running out of budget is a distinct outcome so callers
//! can never mistake a timeout for impossibility.

use crate::constellation::{reorder_colored, transitive, ConstellationTuple, Perm};
use crate::passport::{Partition, RawPassport, Violation};
use std::time::Instant;
use thiserror::Error;

/// Caps on the exhaustive search.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchBudget {
    pub max_nodes: u64,
    pub max_millis: u64,
}

impl SearchBudget {
    pub fn new(max_nodes: u64, max_millis: u64) -> Self {
        assert!(max_nodes > 0 && max_millis > 0, "budget caps must be positive");
        SearchBudget { max_nodes, max_millis }
    }
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget { max_nodes: u64::MAX, max_millis: u64::MAX }
    }
}

/// Outcome of an oracle run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OracleResult {
    Realizable(ConstellationTuple),
    NotRealizable,
    BudgetExceeded { nodes: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("invalid passport: {0:?}")]
    InvalidPassport(Vec<Violation>),
}

/// Every permutation of `{1..n}` with the given cycle type, each exactly
/// once, in deterministic order.
pub fn class_stream(t: &Partition, n: usize) -> Vec<Perm> {
    assert_eq!(t.sum(), n, "cycle type must sum to the degree");
    let mut lengths = t.parts().to_vec();
    lengths.sort_unstable_by(|a, b| b.cmp(a));
    let mut out = Vec::new();
    let mut images: Vec<usize> = (0..n).collect();
    let mut used = vec![false; n];
    assemble(&mut lengths, &mut images, &mut used, n, &mut out);
    out
}

/// Recursive assembly: anchor the smallest unused point on a cycle of each
/// distinct remaining length, then choose its companions in order.
fn assemble(
    lengths: &mut Vec<usize>,
    images: &mut Vec<usize>,
    used: &mut Vec<bool>,
    n: usize,
    out: &mut Vec<Perm>,
) {
    let Some(anchor) = (0..n).find(|&x| !used[x]) else {
        out.push(Perm::from_images(images.clone()).unwrap());
        return;
    };
    let mut tried = Vec::new();
    for idx in 0..lengths.len() {
        let len = lengths[idx];
        if tried.contains(&len) {
            continue;
        }
        tried.push(len);
        lengths.remove(idx);
        used[anchor] = true;
        let mut cycle = vec![anchor];
        extend_cycle(lengths, images, used, n, &mut cycle, len, out);
        used[anchor] = false;
        lengths.insert(idx, len);
    }
}

fn extend_cycle(
    lengths: &mut Vec<usize>,
    images: &mut Vec<usize>,
    used: &mut Vec<bool>,
    n: usize,
    cycle: &mut Vec<usize>,
    len: usize,
    out: &mut Vec<Perm>,
) {
    if cycle.len() == len {
        let saved: Vec<usize> = cycle.iter().map(|&x| images[x]).collect();
        for w in 0..len {
            images[cycle[w]] = cycle[(w + 1) % len];
        }
        assemble(lengths, images, used, n, out);
        for (w, &img) in saved.iter().enumerate() {
            images[cycle[w]] = img;
        }
        return;
    }
    for x in 0..n {
        if used[x] || x <= cycle[0] {
            continue;
        }
        used[x] = true;
        cycle.push(x);
        extend_cycle(lengths, images, used, n, cycle, len, out);
        cycle.pop();
        used[x] = false;
    }
}

/// Number of permutations with the given cycle type (for search ordering).
fn class_size(t: &Partition, n: usize) -> u128 {
    let mut size: u128 = 1;
    for k in 2..=n {
        size *= k as u128;
    }
    let mut mult = vec![0usize; n + 1];
    for &len in t.parts() {
        size /= len as u128;
        mult[len] += 1;
    }
    for m in mult {
        for k in 2..=m {
            size /= k as u128;
        }
    }
    size
}

/// Canonical face permutation with cycles on consecutive blocks.
fn canonical_of_type(t: &Partition, n: usize) -> Perm {
    let mut images: Vec<usize> = (0..n).collect();
    let mut start = 0;
    for &len in t.parts() {
        for w in 0..len {
            images[start + w] = start + (w + 1) % len;
        }
        start += len;
    }
    debug_assert_eq!(start, n);
    Perm::from_images(images).unwrap()
}

/// Elements of the centralizer of the canonical two-block face permutation,
/// excluding the block swap (only generated by the block rotations).
fn block_rotations(s: usize, n: usize) -> Vec<Perm> {
    let mut out = Vec::new();
    for a in 0..s {
        for b in 0..n - s {
            let mut images = vec![0; n];
            for (i, image) in images.iter_mut().enumerate().take(s) {
                *image = (i + a) % s;
            }
            for (i, image) in images.iter_mut().enumerate().skip(s) {
                *image = s + (i - s + b) % (n - s);
            }
            out.push(Perm::from_images(images).unwrap());
        }
    }
    out
}

fn is_orbit_min(g: &Perm, rotations: &[Perm]) -> bool {
    rotations.iter().all(|z| g.conjugate(z).images() >= g.images())
}

struct Search<'a> {
    budget: SearchBudget,
    start: Instant,
    nodes: u64,
    face: Perm,
    roles: &'a [Partition],
    reduce: Option<Vec<Perm>>,
}

enum Found {
    Witness(Vec<Perm>),
    Exhausted,
    OutOfBudget,
}

impl Search<'_> {
    fn tick(&mut self) -> bool {
        self.nodes += 1;
        self.nodes <= self.budget.max_nodes
            && (!self.nodes.is_multiple_of(1024)
                || (self.start.elapsed().as_millis() as u64) < self.budget.max_millis)
    }

    /// Depth-first assignment of the first `roles.len() - 1` colored classes;
    /// the last colored permutation is forced by the identity product.
    fn assign(&mut self, depth: usize, chosen: &mut Vec<Perm>) -> Found {
        let n = self.face.degree();
        if depth + 1 == self.roles.len() {
            // prefix . g . face = id
            let mut prefix = Perm::identity(n);
            for p in chosen.iter() {
                prefix = prefix.then(p);
            }
            let forced = prefix.inverse().then(&self.face.inverse());
            if forced.cycle_type() != self.roles[depth] {
                return Found::Exhausted;
            }
            let mut all: Vec<Perm> = chosen.clone();
            all.push(forced);
            if !transitive(n, &all) {
                return Found::Exhausted;
            }
            return Found::Witness(all);
        }
        for g in class_stream(&self.roles[depth], n) {
            if !self.tick() {
                return Found::OutOfBudget;
            }
            if depth == 0 {
                if let Some(rotations) = &self.reduce {
                    if !is_orbit_min(&g, rotations) {
                        continue;
                    }
                }
            }
            chosen.push(g);
            match self.assign(depth + 1, chosen) {
                Found::Exhausted => {}
                found => return found,
            }
            chosen.pop();
        }
        Found::Exhausted
    }
}

/// Decides realizability of a (possibly non-Laurent) passport by exhaustive
/// search. Any returned witness verifies against the passport: identity
/// product, matching cycle types with the designated face last, transitivity
/// and genus 0 are all re-checked before returning.
pub fn oracle_decide(raw: &RawPassport, budget: SearchBudget) -> Result<OracleResult, OracleError> {
    oracle_decide_with(raw, budget, true)
}

/// As `oracle_decide`, with the centralizer reduction switchable so tests
/// can compare the reduced and unreduced searches.
pub fn oracle_decide_with(
    raw: &RawPassport,
    budget: SearchBudget,
    reduce: bool,
) -> Result<OracleResult, OracleError> {
    let violations = check_general(raw);
    if !violations.is_empty() {
        return Err(OracleError::InvalidPassport(violations));
    }
    let face_type = &raw.partitions[raw.face];
    let n = face_type.sum();
    let colored: Vec<Partition> = raw
        .partitions
        .iter()
        .enumerate()
        .filter(|(i, _)| *i != raw.face)
        .map(|(_, p)| p.clone())
        .collect();

    // Assign the smaller classes first; the largest is left to be forced by
    // the identity product.
    let mut order: Vec<usize> = (0..colored.len()).collect();
    order.sort_by_key(|&i| (class_size(&colored[i], n), i));
    let roles: Vec<Partition> = order.iter().map(|&i| colored[i].clone()).collect();

    let face = canonical_of_type(face_type, n);
    let reduce_rotations = if reduce && face_type.len() == 2 && face_type.parts()[0] != face_type.parts()[1]
    {
        Some(block_rotations(face_type.parts()[0], n))
    } else {
        None
    };

    let mut search = Search {
        budget,
        start: Instant::now(),
        nodes: 0,
        face: face.clone(),
        roles: &roles,
        reduce: reduce_rotations,
    };
    match search.assign(0, &mut Vec::new()) {
        Found::OutOfBudget => Ok(OracleResult::BudgetExceeded { nodes: search.nodes }),
        Found::Exhausted => Ok(OracleResult::NotRealizable),
        Found::Witness(mut perms) => {
            perms.push(face);
            let tuple = ConstellationTuple::new(n, perms).expect("search output must multiply to id");
            // Restore the passport's colored order.
            let mut pos_of = vec![0; order.len()];
            for (role_pos, &color) in order.iter().enumerate() {
                pos_of[color] = role_pos;
            }
            let witness = reorder_colored(&tuple, &pos_of);
            assert!(
                witness_matches(&witness, &colored, face_type),
                "search produced an invalid witness"
            );
            Ok(OracleResult::Realizable(witness))
        }
    }
}

/// Validity for general passports: consistent sums, fewer parts than the
/// degree, and the part-count total `(q-2)n + 2`. The face needs no 2-part
/// restriction here.
fn check_general(raw: &RawPassport) -> Vec<Violation> {
    let mut violations = Vec::new();
    let q = raw.partitions.len();
    let n = raw.partitions[raw.face].sum();
    if q < 3 {
        violations.push(Violation::TooFewPartitions { q });
    }
    for (index, part) in raw.partitions.iter().enumerate() {
        let got = part.sum();
        if got != n {
            violations.push(Violation::SumMismatch { index, got, expected: n });
        } else if part.len() >= n {
            violations.push(Violation::TrivialPartition { index });
        }
    }
    if q >= 2 {
        let expected = (q - 2) * n + 2;
        let total: usize = raw.partitions.iter().map(Partition::len).sum();
        if total != expected {
            violations.push(Violation::RHViolation { got: total, expected });
        }
    }
    violations
}

fn witness_matches(tuple: &ConstellationTuple, colored: &[Partition], face: &Partition) -> bool {
    tuple.is_transitive()
        && tuple.genus() == Ok(0)
        && tuple.face().cycle_type() == *face
        && tuple
            .colored()
            .iter()
            .zip(colored)
            .all(|(g, want)| g.cycle_type() == *want)
}
