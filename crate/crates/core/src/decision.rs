//! Realizability classification.
//!
//! Every valid Laurent passport with `q > 3` is realizable. For `q = 3`
//! realizability fails exactly on seven families of triples; `classify`
//! reports all matching family ids since the families may overlap (for
//! example `{2,2,2}, {1,2,3}, {3,3}` matches families 3 and 6, and the
//! `{1,...,1,d,d}` face formulas of families 4 and 5 name the same multiset
//! because the degree is forced to `4d - 4`).

use crate::passport::{validate, LaurentPassport, Partition, RawPassport, Violation};
use std::collections::BTreeSet;
use thiserror::Error;

/// Classification outcome.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Realizable,
    /// Non-realizable; carries every matching family id in `1..=7`.
    Exceptional(BTreeSet<u8>),
    Invalid(Vec<Violation>),
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum DecisionError {
    #[error("family matching applies only to passports with q = 3, got q = {got}")]
    NotQ3 { got: usize },
}

/// True iff `big` is `{1,...,1, x, y}` for the given two parts `> 1`
/// (weakly increasing order), with any number of 1s including zero.
fn two_big_parts(p: &Partition) -> Option<(usize, usize)> {
    let b = p.parts_gt1();
    if b.len() == 2 {
        Some((b[0], b[1]))
    } else {
        None
    }
}

fn face_matches(p: &LaurentPassport, a: i64, b: i64) -> bool {
    if a < 1 || b < 1 {
        return false;
    }
    let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
    p.s() as i64 == lo && (p.n() - p.s()) as i64 == hi
}

/// Family predicate for one assignment of (first, second) colored roles.
fn family_matches(k: u8, first: &Partition, second: &Partition, p: &LaurentPassport) -> bool {
    let n = p.n() as i64;
    let s = p.s();
    match k {
        // {l,...,l}, {1,...,1,d} with d >= 3, l >= 2, s = 0 mod l. The
        // divisibility may be tested on either face part since l divides n.
        1 => {
            let l = first.min_part();
            first.is_constant()
                && l >= 2
                && second.count_gt1() == 1
                && second.max_part() >= 3
                && s.is_multiple_of(l)
        }
        // Both colored partitions all 2s, s distinct from n/2.
        2 => first.is_all(2) && second.is_all(2) && 2 * s != p.n(),
        // All 2s plus {1,...,1,d-1,d}, face {2d-3, n-2d+3}, d >= 3.
        3 => {
            first.is_all(2)
                && matches!(two_big_parts(second), Some((x, y)) if y >= 3 && x == y - 1
                    && face_matches(p, 2 * y as i64 - 3, n - 2 * y as i64 + 3))
        }
        // All 2s plus {1,...,1,d,d}, face {2d-3, n-2d+3}, d >= 3.
        4 => {
            first.is_all(2)
                && matches!(two_big_parts(second), Some((x, y)) if y >= 3 && x == y
                    && face_matches(p, 2 * y as i64 - 3, n - 2 * y as i64 + 3))
        }
        // All 2s plus {1,...,1,d,d}, face {2d-1, n-2d+1}, d >= 3.
        5 => {
            first.is_all(2)
                && matches!(two_big_parts(second), Some((x, y)) if y >= 3 && x == y
                    && face_matches(p, 2 * y as i64 - 1, n - 2 * y as i64 + 1))
        }
        // All 2s plus {1,2,...,2,3} (exactly one 1 and one 3), face {n/2, n/2}.
        6 => {
            let b = second.parts_gt1();
            first.is_all(2)
                && second.count_ones() == 1
                && !b.is_empty()
                && b[b.len() - 1] == 3
                && b[..b.len() - 1].iter().all(|&x| x == 2)
                && 2 * s == p.n()
        }
        // Exactly {2,2,2,2,2,2}, {1,1,1,3,3,3}, {6,6}.
        7 => {
            *first == Partition::new(vec![2; 6])
                && *second == Partition::new(vec![1, 1, 1, 3, 3, 3])
                && s == 6
                && p.n() == 12
        }
        _ => panic!("family id must be in 1..=7, got {k}"),
    }
}

/// Tests whether a valid passport with `q = 3` instantiates exceptional
/// family `k`, over both assignments of the two colored partitions to the
/// family's roles; the face is treated as unordered throughout.
pub fn match_family(p: &LaurentPassport, k: u8) -> Result<bool, DecisionError> {
    if p.q() != 3 {
        return Err(DecisionError::NotQ3 { got: p.q() });
    }
    let a = &p.colored()[0];
    let b = &p.colored()[1];
    Ok(family_matches(k, a, b, p) || family_matches(k, b, a, p))
}

/// Classifies a valid passport. With `q > 3` the answer is always
/// `Realizable`; with `q = 3` the passport is checked against all seven
/// exceptional families.
pub fn classify_valid(p: &LaurentPassport) -> Verdict {
    if p.q() > 3 {
        return Verdict::Realizable;
    }
    let families: BTreeSet<u8> =
        (1..=7).filter(|&k| match_family(p, k).unwrap()).collect();
    if families.is_empty() {
        Verdict::Realizable
    } else {
        Verdict::Exceptional(families)
    }
}

/// Validates and classifies raw passport data.
pub fn classify(raw: &RawPassport) -> Verdict {
    match validate(raw) {
        Ok(p) => classify_valid(&p),
        Err(violations) => Verdict::Invalid(violations),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(v: &[usize]) -> Partition {
        Partition::new(v.to_vec())
    }

    fn passport(colored: &[&[usize]], face: &[usize]) -> LaurentPassport {
        validate(&RawPassport::from_colored_face(
            colored.iter().map(|c| part(c)).collect(),
            part(face),
        ))
        .unwrap()
    }

    fn families(colored: &[&[usize]], face: &[usize]) -> BTreeSet<u8> {
        match classify_valid(&passport(colored, face)) {
            Verdict::Exceptional(f) => f,
            v => panic!("expected exceptional, got {v:?}"),
        }
    }

    #[test]
    fn match_family_examples() {
        // {2,2},{2,2} with s = 1 != n/2 is family 2.
        let p = passport(&[&[2, 2], &[2, 2]], &[3, 1]);
        assert!(match_family(&p, 2).unwrap());

        // {2,2,2},{1,2,3},{3,3}: d = 3 gives face {3,3}; also one 1 and one 3
        // with face {n/2,n/2}.
        let p = passport(&[&[2, 2, 2], &[1, 2, 3]], &[3, 3]);
        assert!(match_family(&p, 3).unwrap());
        assert!(match_family(&p, 6).unwrap());

        // s = n/2 escapes family 2.
        let p = passport(&[&[2, 2], &[2, 2]], &[2, 2]);
        assert!(!match_family(&p, 2).unwrap());
    }

    #[test]
    fn match_family_rejects_q4() {
        let p = passport(&[&[1, 2], &[1, 2], &[1, 2]], &[1, 2]);
        assert_eq!(match_family(&p, 1), Err(DecisionError::NotQ3 { got: 4 }));
    }

    #[test]
    fn classify_examples() {
        assert_eq!(families(&[&[2, 2], &[2, 2]], &[3, 1]), BTreeSet::from([2]));

        let p = passport(&[&[1, 2], &[1, 2], &[1, 2]], &[1, 2]);
        assert_eq!(classify_valid(&p), Verdict::Realizable);

        assert_eq!(
            families(&[&[2, 2, 2, 2, 2, 2], &[1, 1, 1, 3, 3, 3]], &[6, 6]),
            BTreeSet::from([7])
        );

        let p = passport(&[&[3, 1], &[3, 1]], &[2, 2]);
        assert_eq!(classify_valid(&p), Verdict::Realizable);
    }

    #[test]
    fn classify_family_one() {
        // {3,3},{1,1,1,3} with s = 3 = 0 mod 3.
        assert_eq!(families(&[&[3, 3], &[1, 1, 1, 3]], &[3, 3]), BTreeSet::from([1]));
        // Same shapes with s = 1 escape the divisibility condition.
        let p = passport(&[&[3, 3], &[1, 1, 1, 3]], &[1, 5]);
        assert_eq!(classify_valid(&p), Verdict::Realizable);
    }

    #[test]
    fn classify_families_four_and_five_coincide() {
        // {1,...,1,d,d} forces n = 4d-4, so both face formulas name {2d-3, 2d-1}.
        assert_eq!(
            families(&[&[2, 2, 2, 2], &[1, 1, 3, 3]], &[5, 3]),
            BTreeSet::from([4, 5])
        );
    }

    #[test]
    fn classify_reports_invalid() {
        let raw = RawPassport::from_colored_face(vec![part(&[3, 1])], part(&[2, 2]));
        assert!(matches!(classify(&raw), Verdict::Invalid(_)));
    }

    #[test]
    fn classify_is_colored_order_invariant() {
        let a = passport(&[&[2, 2, 2], &[1, 2, 3]], &[3, 3]);
        let b = passport(&[&[1, 2, 3], &[2, 2, 2]], &[3, 3]);
        assert_eq!(classify_valid(&a), classify_valid(&b));
    }
}
