//! Laurent passports: validation, canonical ordering, derived statistics and
//! exhaustive enumeration.
//!
//! Throughout, a passport of degree `n` with `q` branch points consists of
//! `r = q - 1` "colored" partitions and one "face" partition. For a Laurent
//! passport the face partition has exactly two parts `{s, n-s}`, and the
//! Riemann-Hurwitz count pins the total number of parts:
//! `sum(p_i) = (q-2)n + 2`, equivalently `sum over colored = (r-1)n`.

use std::fmt;
use thiserror::Error;

/// Integer partition with multiset semantics. Parts are stored weakly
/// increasing; two partitions are equal iff they are equal as multisets.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition from parts in any order.
    ///
    /// Panics if `parts` is empty or contains a zero; raw text input is
    /// screened before reaching this constructor.
    pub fn new(mut parts: Vec<usize>) -> Self {
        assert!(!parts.is_empty(), "partition must have at least one part");
        assert!(parts.iter().all(|&p| p >= 1), "partition parts must be >= 1");
        parts.sort_unstable();
        Partition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn sum(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of parts (`p_i` in passport formulas). A partition is never
    /// empty, so there is no `is_empty`.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    /// Number of parts greater than 1 (`q_i`).
    pub fn count_gt1(&self) -> usize {
        self.parts.iter().filter(|&&p| p > 1).count()
    }

    /// Number of parts equal to 1 (`e_i`).
    pub fn count_ones(&self) -> usize {
        self.parts.iter().filter(|&&p| p == 1).count()
    }

    /// The parts greater than 1, weakly increasing (`b_{i,1} <= ... <= b_{i,q_i}`).
    pub fn parts_gt1(&self) -> &[usize] {
        let e = self.count_ones();
        &self.parts[e..]
    }

    pub fn max_part(&self) -> usize {
        *self.parts.last().unwrap()
    }

    pub fn min_part(&self) -> usize {
        self.parts[0]
    }

    /// True iff every part equals `v`.
    pub fn is_all(&self, v: usize) -> bool {
        self.parts.iter().all(|&p| p == v)
    }

    /// True iff all parts are equal.
    pub fn is_constant(&self) -> bool {
        self.parts.iter().all(|&p| p == self.parts[0])
    }

    /// Parts in decreasing order, used for canonical tie-breaking.
    fn descending(&self) -> Vec<usize> {
        let mut d = self.parts.clone();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

/// Unvalidated passport data: `q` partitions with one designated as the face.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RawPassport {
    pub partitions: Vec<Partition>,
    /// Index of the face partition within `partitions`.
    pub face: usize,
}

impl RawPassport {
    pub fn new(partitions: Vec<Partition>, face: usize) -> Self {
        assert!(face < partitions.len(), "face index out of range");
        RawPassport { partitions, face }
    }

    /// Convenience constructor: colored partitions in order, then the face.
    pub fn from_colored_face(colored: Vec<Partition>, face: Partition) -> Self {
        let face_idx = colored.len();
        let mut partitions = colored;
        partitions.push(face);
        RawPassport { partitions, face: face_idx }
    }
}

/// A violated passport invariant.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum Violation {
    #[error("partition {index} sums to {got}, expected degree {expected}")]
    SumMismatch { index: usize, got: usize, expected: usize },
    #[error("Riemann-Hurwitz count failed: total part count is {got}, expected {expected}")]
    RHViolation { got: usize, expected: usize },
    #[error("face partition has {got} parts, expected exactly 2")]
    FaceNotTwoParts { got: usize },
    #[error("partition {index} has as many parts as the degree")]
    TrivialPartition { index: usize },
    #[error("passport has {q} partitions, need at least 3")]
    TooFewPartitions { q: usize },
}

/// A validated Laurent passport: `r = q - 1` colored partitions of `n` plus a
/// two-part face `{s, n-s}`, stored with `s <= n-s`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LaurentPassport {
    colored: Vec<Partition>,
    n: usize,
    s: usize,
}

impl LaurentPassport {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of branch points (colored partitions plus the face).
    pub fn q(&self) -> usize {
        self.colored.len() + 1
    }

    /// Number of colored partitions.
    pub fn r(&self) -> usize {
        self.colored.len()
    }

    /// Smaller face part; the face partition is `{s, n-s}`.
    pub fn s(&self) -> usize {
        self.s
    }

    pub fn colored(&self) -> &[Partition] {
        &self.colored
    }

    pub fn face(&self) -> Partition {
        Partition::new(vec![self.s, self.n - self.s])
    }

    pub fn to_raw(&self) -> RawPassport {
        RawPassport::from_colored_face(self.colored.clone(), self.face())
    }
}

impl fmt::Display for LaurentPassport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for part in &self.colored {
            write!(f, "{part};")?;
        }
        write!(f, "{}*", self.face())
    }
}

/// Validates raw passport data against every Laurent passport invariant.
///
/// The degree is taken from the face partition's sum. On failure every
/// violated invariant is reported, not just the first.
pub fn validate(raw: &RawPassport) -> Result<LaurentPassport, Vec<Violation>> {
    let mut violations = Vec::new();
    let q = raw.partitions.len();
    let face = &raw.partitions[raw.face];
    let n = face.sum();

    if q < 3 {
        violations.push(Violation::TooFewPartitions { q });
    }
    if face.len() != 2 {
        violations.push(Violation::FaceNotTwoParts { got: face.len() });
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
        let total_parts: usize = raw.partitions.iter().map(Partition::len).sum();
        if total_parts != expected {
            violations.push(Violation::RHViolation { got: total_parts, expected });
        }
    }

    if !violations.is_empty() {
        return Err(violations);
    }

    let mut colored = Vec::with_capacity(q - 1);
    for (i, part) in raw.partitions.iter().enumerate() {
        if i != raw.face {
            colored.push(part.clone());
        }
    }
    let s = face.min_part();
    Ok(LaurentPassport { colored, n, s })
}

/// Per-color derived quantities `q_i`, `e_i` and the sorted parts `> 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivedStats {
    pub rows: Vec<DerivedRow>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivedRow {
    /// Count of parts greater than 1.
    pub q: usize,
    /// Count of parts equal to 1.
    pub e: usize,
    /// The parts greater than 1, weakly increasing.
    pub b: Vec<usize>,
}

/// Derived statistics for the colored partitions, in stored order.
pub fn derived(p: &LaurentPassport) -> DerivedStats {
    let rows = p
        .colored
        .iter()
        .map(|part| DerivedRow {
            q: part.count_gt1(),
            e: part.count_ones(),
            b: part.parts_gt1().to_vec(),
        })
        .collect();
    DerivedStats { rows }
}

/// Records how `canonicalize` reordered a passport, so the reordering can be
/// undone on anything computed from the canonical form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColorRelabeling {
    /// `source[k]` is the original index of the partition that ended up at
    /// canonical position `k`.
    pub source: Vec<usize>,
    /// Whether the face parts were swapped; always false here because the
    /// face is stored normalized with `s <= n-s`.
    pub face_swapped: bool,
}

impl ColorRelabeling {
    pub fn identity(r: usize) -> Self {
        ColorRelabeling { source: (0..r).collect(), face_swapped: false }
    }

    pub fn is_identity(&self) -> bool {
        !self.face_swapped && self.source.iter().enumerate().all(|(k, &j)| k == j)
    }

    /// Applies the recorded reordering to the original passport, reproducing
    /// the canonical one.
    pub fn apply(&self, original: &LaurentPassport) -> LaurentPassport {
        let colored = self.source.iter().map(|&j| original.colored[j].clone()).collect();
        LaurentPassport { colored, n: original.n, s: original.s }
    }

    /// Undoes the reordering, reproducing the original passport from the
    /// canonical one.
    pub fn restore(&self, canonical: &LaurentPassport) -> LaurentPassport {
        let mut colored = vec![None; self.source.len()];
        for (k, &j) in self.source.iter().enumerate() {
            colored[j] = Some(canonical.colored[k].clone());
        }
        LaurentPassport {
            colored: colored.into_iter().map(Option::unwrap).collect(),
            n: canonical.n,
            s: canonical.s,
        }
    }
}

/// Reorders the colored partitions so that `q_1 >= q_2 >= ... >= q_r`, with
/// ties broken by comparing the partitions as decreasing part lists, larger
/// first. The face is already stored as `{s, n-s}` with `s <= n-s`.
pub fn canonicalize(p: &LaurentPassport) -> (LaurentPassport, ColorRelabeling) {
    let mut order: Vec<usize> = (0..p.colored.len()).collect();
    order.sort_by(|&a, &b| {
        let pa = &p.colored[a];
        let pb = &p.colored[b];
        pb.count_gt1()
            .cmp(&pa.count_gt1())
            .then_with(|| pb.descending().cmp(&pa.descending()))
            .then_with(|| a.cmp(&b))
    });
    let relab = ColorRelabeling { source: order, face_swapped: false };
    (relab.apply(p), relab)
}

/// Both sides of the part-count identity: for any valid passport,
/// `sum_{i>=2} sum_j (b_{i,j} - 2) = e_1 + q_1 - (q_2 + ... + q_r)`,
/// computed on the stored color order.
pub fn gop_sides(p: &LaurentPassport) -> (i64, i64) {
    let stats = derived(p);
    let lhs: i64 = stats.rows[1..]
        .iter()
        .flat_map(|row| row.b.iter().map(|&b| b as i64 - 2))
        .sum();
    let q_rest: i64 = stats.rows[1..].iter().map(|row| row.q as i64).sum();
    let rhs = stats.rows[0].e as i64 + stats.rows[0].q as i64 - q_rest;
    (lhs, rhs)
}

/// All partitions of `n`, in deterministic order.
pub(crate) fn partitions_of(n: usize) -> Vec<Partition> {
    fn rec(remaining: usize, min: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition { parts: prefix.clone() });
            return;
        }
        for part in min..=remaining {
            prefix.push(part);
            rec(remaining - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, 1, &mut Vec::new(), &mut out);
    out
}

/// Enumerates every valid Laurent passport of degree `n` with `q` branch
/// points, each exactly once up to reordering of the colored partitions and
/// up to face part order, in deterministic order.
pub fn enumerate_passports(n: usize, q: usize) -> Vec<LaurentPassport> {
    if n < 2 || q < 3 {
        return Vec::new();
    }
    let r = q - 1;
    // Colored partitions must have fewer than n parts; the all-ones partition
    // is the only one excluded by that bound.
    let pool: Vec<Partition> = partitions_of(n).into_iter().filter(|p| p.len() < n).collect();
    let target_parts = (r - 1) * n;

    fn rec(
        pool: &[Partition],
        start: usize,
        left: usize,
        parts_needed: usize,
        chosen: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if left == 0 {
            if parts_needed == 0 {
                out.push(chosen.clone());
            }
            return;
        }
        for idx in start..pool.len() {
            let p = pool[idx].len();
            if p > parts_needed {
                continue;
            }
            chosen.push(idx);
            rec(pool, idx, left - 1, parts_needed - p, chosen, out);
            chosen.pop();
        }
    }
    let mut combos = Vec::new();
    rec(&pool, 0, r, target_parts, &mut Vec::with_capacity(r), &mut combos);

    let mut out = Vec::new();
    for combo in combos {
        for s in 1..=n / 2 {
            let colored: Vec<Partition> = combo.iter().map(|&i| pool[i].clone()).collect();
            let raw = RawPassport::from_colored_face(colored, Partition::new(vec![s, n - s]));
            // The face can still violate p < n (only at n = 2); skip those.
            if let Ok(p) = validate(&raw) {
                out.push(p);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn part(v: &[usize]) -> Partition {
        Partition::new(v.to_vec())
    }

    fn raw(colored: &[&[usize]], face: &[usize]) -> RawPassport {
        RawPassport::from_colored_face(colored.iter().map(|c| part(c)).collect(), part(face))
    }

    #[test]
    fn validate_accepts_intro_example() {
        let p = validate(&raw(&[&[2, 2], &[2, 2]], &[3, 1])).unwrap();
        assert_eq!(p.n(), 4);
        assert_eq!(p.q(), 3);
        assert_eq!(p.s(), 1);
    }

    #[test]
    fn validate_rejects_three_part_face() {
        // Five partitions of 9; the part-count total 29 = 3*9 + 2 passes, but
        // the designated face has 3 parts.
        let r = raw(
            &[
                &[1, 2, 3, 3],
                &[1, 1, 1, 1, 1, 2, 2],
                &[1, 1, 1, 1, 1, 1, 3],
                &[1, 1, 1, 1, 1, 1, 1, 2],
            ],
            &[1, 2, 6],
        );
        let violations = validate(&r).unwrap_err();
        assert_eq!(violations, vec![Violation::FaceNotTwoParts { got: 3 }]);
    }

    #[test]
    fn validate_rejects_too_few_partitions() {
        let r = raw(&[&[3, 1]], &[2, 2]);
        let violations = validate(&r).unwrap_err();
        assert!(violations.contains(&Violation::TooFewPartitions { q: 2 }));
    }

    #[test]
    fn validate_rejects_sum_mismatch() {
        let r = raw(&[&[2, 2], &[3, 2]], &[3, 1]);
        let violations = validate(&r).unwrap_err();
        assert!(violations
            .iter()
            .any(|v| matches!(v, Violation::SumMismatch { index: 1, got: 5, expected: 4 })));
    }

    #[test]
    fn validate_rejects_all_ones() {
        let r = raw(&[&[1, 1, 1, 1], &[2, 2]], &[2, 2]);
        let violations = validate(&r).unwrap_err();
        assert!(violations.contains(&Violation::TrivialPartition { index: 0 }));
    }

    #[test]
    fn canonicalize_sorts_by_q_descending() {
        let p = validate(&raw(&[&[1, 3], &[2, 2]], &[2, 2])).unwrap();
        let (canon, relab) = canonicalize(&p);
        assert_eq!(canon.colored()[0], part(&[2, 2]));
        assert_eq!(canon.colored()[1], part(&[1, 3]));
        assert_eq!(relab.source, vec![1, 0]);
        assert_eq!(relab.restore(&canon), p);
    }

    #[test]
    fn canonicalize_is_idempotent_on_canonical_input() {
        let p = validate(&raw(&[&[2, 2], &[1, 3]], &[2, 2])).unwrap();
        let (canon, relab) = canonicalize(&p);
        assert_eq!(canon, p);
        assert!(relab.is_identity());
    }

    #[test]
    fn canonicalize_breaks_q_ties_lexicographically() {
        // q is 3 for both; [4,2,2,1,1] beats [3,3,2,1,1] on decreasing-list
        // comparison, so {1,1,2,2,4} sorts first.
        let p = validate(&raw(&[&[1, 1, 2, 3, 3], &[1, 1, 2, 2, 4]], &[5, 5])).unwrap();
        let (canon, _) = canonicalize(&p);
        assert_eq!(canon.colored()[0], part(&[1, 1, 2, 2, 4]));
        assert_eq!(canon.colored()[1], part(&[1, 1, 2, 3, 3]));
    }

    #[test]
    fn face_is_stored_with_small_part_first() {
        let p = validate(&raw(&[&[2, 2], &[2, 2]], &[3, 1])).unwrap();
        assert_eq!(p.s(), 1);
        assert_eq!(p.face(), part(&[1, 3]));
    }

    #[test]
    fn derived_stats_examples() {
        assert_eq!(part(&[2, 2]).count_gt1(), 2);
        assert_eq!(part(&[2, 2]).count_ones(), 0);
        assert_eq!(part(&[2, 2]).parts_gt1(), &[2, 2]);

        let p = part(&[1, 1, 3, 3]);
        assert_eq!((p.count_gt1(), p.count_ones()), (2, 2));
        assert_eq!(p.parts_gt1(), &[3, 3]);

        let p = part(&[1, 2, 3, 3]);
        assert_eq!((p.count_gt1(), p.count_ones()), (3, 1));
        assert_eq!(p.parts_gt1(), &[2, 3, 3]);
    }

    #[test]
    fn gop_sides_examples() {
        // All parts 2 on both sides: (0, 0).
        let p = validate(&raw(&[&[2, 2], &[2, 2]], &[1, 3])).unwrap();
        assert_eq!(gop_sides(&p), (0, 0));

        // {1,2,2}, {2,3} at n = 5: lhs = (3-2)+(2-2) = 1, rhs = 1+2-2 = 1.
        let p = validate(&raw(&[&[1, 2, 2], &[2, 3]], &[1, 4])).unwrap();
        assert_eq!(gop_sides(&p), (1, 1));

        // {2,2,2}, {1,2,3} at n = 6: lhs = 0+1 = 1, rhs = 0+3-2 = 1.
        let p = validate(&raw(&[&[2, 2, 2], &[1, 2, 3]], &[1, 5])).unwrap();
        assert_eq!(gop_sides(&p), (1, 1));
    }

    #[test]
    fn enumerate_small_degree_counts() {
        // n = 4, q = 3: colored pairs {{4},{2,1,1}}, {{3,1},{3,1}},
        // {{3,1},{2,2}}, {{2,2},{2,2}}, each with face {3,1} or {2,2}.
        let all = enumerate_passports(4, 3);
        assert_eq!(all.len(), 8);
        for p in &all {
            assert!(validate(&p.to_raw()).is_ok());
        }
        let with_s2 = all.iter().filter(|p| p.s() == 2).count();
        assert_eq!(with_s2, 4);
        let mut pairs: Vec<Vec<Partition>> =
            all.iter().filter(|p| p.s() == 1).map(|p| p.colored().to_vec()).collect();
        pairs.sort();
        let mut expected = vec![
            vec![part(&[1, 1, 2]), part(&[4])],
            vec![part(&[1, 3]), part(&[1, 3])],
            vec![part(&[1, 3]), part(&[2, 2])],
            vec![part(&[2, 2]), part(&[2, 2])],
        ];
        expected.sort();
        assert_eq!(pairs, expected);

        assert!(enumerate_passports(2, 3).is_empty());

        let q4 = enumerate_passports(3, 4);
        assert_eq!(q4.len(), 1);
        assert_eq!(q4[0].colored(), &[part(&[1, 2]), part(&[1, 2]), part(&[1, 2])]);
        assert_eq!(q4[0].s(), 1);
    }

    #[test]
    fn enumerate_passports_validate_cleanly() {
        for n in 2..=7 {
            for q in 3..=5 {
                for p in enumerate_passports(n, q) {
                    assert!(validate(&p.to_raw()).is_ok(), "{p}");
                }
            }
        }
    }
}
