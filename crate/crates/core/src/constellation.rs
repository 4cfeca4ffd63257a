//! Permutation-tuple model of planar constellations.
//!
//! A constellation of degree `n` with `q` branch points is encoded as a
//! sequence of `q` permutations `g_1 .. g_q` of the `n` stars with
//! `g_1 g_2 ... g_q = id` (composition left-to-right, i.e. `g_1` applied
//! first). The group generated must act transitively, and the tuple has
//! genus 0 exactly when `sum_i c(g_i) = (q-2)n + 2` where `c` counts cycles
//! including fixed points. Cycle types of `g_1 .. g_{q-1}` are the colored
//! valencies; the cycle type of `g_q` gives the face sizes.

use crate::passport::{LaurentPassport, Partition};
use std::fmt;
use thiserror::Error;

/// A permutation of `{1..n}`, stored 0-indexed as an image array.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Perm {
    images: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum PermError {
    #[error("image array is not a bijection on 0..{n}")]
    NotABijection { n: usize },
}

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm { images: (0..n).collect() }
    }

    /// Builds a permutation from a 0-indexed image array.
    pub fn from_images(images: Vec<usize>) -> Result<Self, PermError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            if v >= n || seen[v] {
                return Err(PermError::NotABijection { n });
            }
            seen[v] = true;
        }
        Ok(Perm { images })
    }

    /// Builds a permutation of degree `n` from disjoint cycles in 1-indexed
    /// notation, e.g. `&[&[1, 2], &[3, 4]]` for (12)(34).
    pub fn from_cycles_1(n: usize, cycles: &[&[usize]]) -> Self {
        let mut images: Vec<usize> = (0..n).collect();
        for cycle in cycles {
            for w in 0..cycle.len() {
                let from = cycle[w] - 1;
                let to = cycle[(w + 1) % cycle.len()] - 1;
                images[from] = to;
            }
        }
        Perm::from_images(images).expect("cycles must be disjoint and in range")
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// Left-to-right composition: `a.then(b)` applies `a` first, then `b`.
    pub fn then(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), other.degree());
        Perm { images: self.images.iter().map(|&v| other.images[v]).collect() }
    }

    pub fn inverse(&self) -> Perm {
        let mut images = vec![0; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v] = i;
        }
        Perm { images }
    }

    /// Relabels points by `z`: the result maps `z(i)` to `z(self(i))`.
    pub fn conjugate(&self, z: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), z.degree());
        let mut images = vec![0; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            images[z.images[i]] = z.images[v];
        }
        Perm { images }
    }

    /// Disjoint cycles, each rotated to start at its smallest element, sorted
    /// by that element. Fixed points appear as singleton cycles.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.images[start];
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.images[x];
            }
            out.push(cycle);
        }
        out
    }

    /// Multiset of cycle lengths, including fixed points as 1s.
    pub fn cycle_type(&self) -> Partition {
        Partition::new(self.cycles().into_iter().map(|c| c.len()).collect())
    }

    /// Number of cycles, counting fixed points.
    pub fn cycle_count(&self) -> usize {
        self.cycles().len()
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for cycle in self.cycles() {
            if cycle.len() == 1 {
                continue;
            }
            wrote = true;
            write!(f, "(")?;
            for (i, x) in cycle.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", x + 1)?;
            }
            write!(f, ")")?;
        }
        if !wrote {
            write!(f, "()")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum TupleError {
    #[error("permutation degrees disagree: expected {expected}, got {got}")]
    DegreeMismatch { expected: usize, got: usize },
    #[error("product of the permutations is not the identity")]
    ProductNotIdentity,
    #[error("tuple is not transitive")]
    NotTransitive,
    #[error("tuple has {got} permutations, expected {expected}")]
    QMismatch { expected: usize, got: usize },
    #[error("tuple needs at least two permutations")]
    TooShort,
}

/// A sequence of `q` permutations of degree `n` with identity product.
/// `g_1 .. g_{q-1}` are the colored rotations; `g_q` is the face permutation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstellationTuple {
    n: usize,
    perms: Vec<Perm>,
}

/// Cycle types of all `q` permutations of a tuple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValencyDatum {
    pub partitions: Vec<Partition>,
}

impl ConstellationTuple {
    /// Builds a tuple from all `q` permutations, checking degrees and the
    /// identity-product invariant.
    pub fn new(n: usize, perms: Vec<Perm>) -> Result<Self, TupleError> {
        if perms.len() < 2 {
            return Err(TupleError::TooShort);
        }
        for p in &perms {
            if p.degree() != n {
                return Err(TupleError::DegreeMismatch { expected: n, got: p.degree() });
            }
        }
        let mut prod = Perm::identity(n);
        for p in &perms {
            prod = prod.then(p);
        }
        if !prod.is_identity() {
            return Err(TupleError::ProductNotIdentity);
        }
        Ok(ConstellationTuple { n, perms })
    }

    /// Completes colored rotations `g_1 .. g_{q-1}` with the face permutation
    /// `g_q = (g_1 ... g_{q-1})^{-1}`. Neither genus 0 nor transitivity is
    /// required here; callers check what they need.
    pub fn from_rotations(n: usize, rotations: Vec<Perm>) -> Result<Self, TupleError> {
        if rotations.is_empty() {
            return Err(TupleError::TooShort);
        }
        for p in &rotations {
            if p.degree() != n {
                return Err(TupleError::DegreeMismatch { expected: n, got: p.degree() });
            }
        }
        let mut prod = Perm::identity(n);
        for p in &rotations {
            prod = prod.then(p);
        }
        let mut perms = rotations;
        perms.push(prod.inverse());
        Ok(ConstellationTuple { n, perms })
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn q(&self) -> usize {
        self.perms.len()
    }

    pub fn perms(&self) -> &[Perm] {
        &self.perms
    }

    /// The colored rotations `g_1 .. g_{q-1}`.
    pub fn colored(&self) -> &[Perm] {
        &self.perms[..self.perms.len() - 1]
    }

    /// The face permutation `g_q`.
    pub fn face(&self) -> &Perm {
        self.perms.last().unwrap()
    }

    /// True iff the generated group has a single orbit on the stars.
    pub fn is_transitive(&self) -> bool {
        transitive(self.n, &self.perms)
    }

    /// Genus of the underlying surface: `2 - 2g = sum_i c(g_i) - (q-2)n`.
    pub fn genus(&self) -> Result<i64, TupleError> {
        if !self.is_transitive() {
            return Err(TupleError::NotTransitive);
        }
        let c: i64 = self.perms.iter().map(|p| p.cycle_count() as i64).sum();
        let rhs = c - ((self.q() as i64 - 2) * self.n as i64);
        debug_assert_eq!((2 - rhs) % 2, 0);
        Ok((2 - rhs) / 2)
    }

    /// Cycle types of `g_1 .. g_q`.
    pub fn valency_datum(&self) -> ValencyDatum {
        ValencyDatum { partitions: self.perms.iter().map(Perm::cycle_type).collect() }
    }

    /// Relabels all stars simultaneously by `z`.
    pub fn conjugated(&self, z: &Perm) -> ConstellationTuple {
        ConstellationTuple {
            n: self.n,
            perms: self.perms.iter().map(|p| p.conjugate(z)).collect(),
        }
    }

    /// Checks the tuple against a passport: transitivity, genus 0, colored
    /// cycle types as a multiset, and the face cycle type `{s, n-s}`.
    pub fn verify_against(&self, p: &LaurentPassport) -> Result<VerifyReport, TupleError> {
        if self.n != p.n() {
            return Err(TupleError::DegreeMismatch { expected: p.n(), got: self.n });
        }
        if self.q() != p.q() {
            return Err(TupleError::QMismatch { expected: p.q(), got: self.q() });
        }
        let mut failures = Vec::new();
        if !self.is_transitive() {
            failures.push(VerifyFailure::NotTransitive);
        }
        let c: i64 = self.perms.iter().map(|p| p.cycle_count() as i64).sum();
        let two_minus_2g = c - ((self.q() as i64 - 2) * self.n as i64);
        if two_minus_2g != 2 {
            failures.push(VerifyFailure::WrongGenus { genus: (2 - two_minus_2g) / 2 });
        }
        let mut got: Vec<Partition> = self.colored().iter().map(Perm::cycle_type).collect();
        let mut want: Vec<Partition> = p.colored().to_vec();
        got.sort();
        want.sort();
        if got != want {
            failures.push(VerifyFailure::ColoredTypesMismatch);
        }
        let face_type = self.face().cycle_type();
        if face_type != p.face() {
            failures.push(VerifyFailure::FaceTypeMismatch { got: face_type });
        }
        Ok(VerifyReport { failures })
    }
}

/// Outcome of `verify_against`: empty failure list means the tuple realizes
/// the passport.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyReport {
    pub failures: Vec<VerifyFailure>,
}

impl VerifyReport {
    pub fn is_pass(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum VerifyFailure {
    NotTransitive,
    WrongGenus { genus: i64 },
    ColoredTypesMismatch,
    FaceTypeMismatch { got: Partition },
}

impl fmt::Display for VerifyFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VerifyFailure::NotTransitive => write!(f, "not transitive"),
            VerifyFailure::WrongGenus { genus } => write!(f, "genus {genus}, expected 0"),
            VerifyFailure::ColoredTypesMismatch => {
                write!(f, "colored cycle types do not match the passport")
            }
            VerifyFailure::FaceTypeMismatch { got } => {
                write!(f, "face cycle type {{{got}}} does not match")
            }
        }
    }
}

/// Single-orbit check for a set of permutations, by union-find over images.
pub(crate) fn transitive(n: usize, perms: &[Perm]) -> bool {
    if n == 0 {
        return true;
    }
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for p in perms {
        for i in 0..n {
            let (a, b) = (find(&mut parent, i), find(&mut parent, p.apply(i)));
            if a != b {
                parent[a] = b;
            }
        }
    }
    let root = find(&mut parent, 0);
    (0..n).all(|i| find(&mut parent, i) == root)
}

/// Swaps entries `i` and `i+1` of a colored prefix while preserving the
/// left-to-right product: `(a, b) -> (b, b^{-1} a b)`.
pub(crate) fn braid_swap(perms: &mut [Perm], i: usize) {
    let a = perms[i].clone();
    let b = perms[i + 1].clone();
    let new_second = b.inverse().then(&a).then(&b);
    perms[i] = b;
    perms[i + 1] = new_second;
}

/// Reorders the colored permutations of `tuple` so that position `j` receives
/// the entry currently at position `pos_of[j]`, using product-preserving
/// adjacent swaps. Cycle types follow their entries (up to conjugacy), and
/// the face permutation is untouched.
pub(crate) fn reorder_colored(tuple: &ConstellationTuple, pos_of: &[usize]) -> ConstellationTuple {
    let q = tuple.q();
    assert_eq!(pos_of.len(), q - 1);
    let mut perms = tuple.perms.clone();
    // Track where each original entry currently lives.
    let mut current: Vec<usize> = (0..q - 1).collect();
    for (target_pos, &want) in pos_of.iter().enumerate() {
        let mut at = current.iter().position(|&c| c == want).unwrap();
        while at > target_pos {
            braid_swap(&mut perms[..q - 1], at - 1);
            current.swap(at - 1, at);
            at -= 1;
        }
    }
    ConstellationTuple { n: tuple.n, perms }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::passport::{validate, RawPassport};

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

    fn klein() -> ConstellationTuple {
        let g1 = Perm::from_cycles_1(4, &[&[1, 2], &[3, 4]]);
        let g2 = Perm::from_cycles_1(4, &[&[1, 3], &[2, 4]]);
        ConstellationTuple::from_rotations(4, vec![g1, g2]).unwrap()
    }

    #[test]
    fn from_rotations_completes_the_product() {
        // (12)(34) . (13)(24) multiplied by hand gives (14)(23); the face is
        // its inverse, which is itself.
        let t = klein();
        assert_eq!(t.face(), &Perm::from_cycles_1(4, &[&[1, 4], &[2, 3]]));

        let g1 = Perm::from_cycles_1(3, &[&[1, 2, 3]]);
        let g2 = Perm::from_cycles_1(3, &[&[1, 3, 2]]);
        let t = ConstellationTuple::from_rotations(3, vec![g1, g2]).unwrap();
        assert!(t.face().is_identity());

        let t = ConstellationTuple::from_rotations(1, vec![Perm::identity(1), Perm::identity(1)])
            .unwrap();
        assert!(t.face().is_identity());
    }

    #[test]
    fn cycle_type_examples() {
        assert_eq!(Perm::identity(5).cycle_type(), part(&[1, 1, 1, 1, 1]));
        assert_eq!(Perm::from_cycles_1(4, &[&[1, 2], &[3, 4]]).cycle_type(), part(&[2, 2]));
        assert_eq!(Perm::from_cycles_1(6, &[&[1, 2, 3], &[5, 6]]).cycle_type(), part(&[1, 2, 3]));
    }

    #[test]
    fn transitivity_examples() {
        assert!(klein().is_transitive());

        let g1 = Perm::from_cycles_1(4, &[&[1, 2]]);
        let g2 = Perm::from_cycles_1(4, &[&[1, 2]]);
        let t = ConstellationTuple::from_rotations(4, vec![g1, g2]).unwrap();
        assert!(!t.is_transitive());

        let t = ConstellationTuple::from_rotations(1, vec![Perm::identity(1), Perm::identity(1)])
            .unwrap();
        assert!(t.is_transitive());
    }

    #[test]
    fn genus_examples() {
        assert_eq!(klein().genus().unwrap(), 0);

        let g = Perm::from_cycles_1(3, &[&[1, 2, 3]]);
        let t = ConstellationTuple::from_rotations(3, vec![g.clone(), g.clone()]).unwrap();
        assert_eq!(t.perms()[2], g); // (123)^3 = id, so the face is (123) too
        assert_eq!(t.genus().unwrap(), 1);

        let t = ConstellationTuple::from_rotations(1, vec![Perm::identity(1), Perm::identity(1)])
            .unwrap();
        assert_eq!(t.genus().unwrap(), 0);
    }

    #[test]
    fn verify_against_examples() {
        let p = passport(&[&[2, 2], &[2, 2]], &[2, 2]);
        assert!(klein().verify_against(&p).unwrap().is_pass());

        let p = passport(&[&[2, 2], &[2, 2]], &[3, 1]);
        let report = klein().verify_against(&p).unwrap();
        assert!(!report.is_pass());
        assert!(report
            .failures
            .iter()
            .any(|f| matches!(f, VerifyFailure::FaceTypeMismatch { .. })));

        let g1 = Perm::from_cycles_1(4, &[&[1, 2]]);
        let g2 = Perm::from_cycles_1(4, &[&[1, 2]]);
        let t = ConstellationTuple::from_rotations(4, vec![g1, g2]).unwrap();
        let p = passport(&[&[2, 2], &[2, 2]], &[2, 2]);
        let report = t.verify_against(&p).unwrap();
        assert!(report.failures.contains(&VerifyFailure::NotTransitive));
    }

    #[test]
    fn tuple_new_rejects_non_identity_product() {
        let g = Perm::from_cycles_1(3, &[&[1, 2, 3]]);
        let err = ConstellationTuple::new(3, vec![g.clone(), g.clone(), g.clone()]);
        assert!(err.is_ok()); // (123)^3 = id
        let err = ConstellationTuple::new(3, vec![g.clone(), g]);
        assert_eq!(err.unwrap_err(), TupleError::ProductNotIdentity);
    }

    #[test]
    fn braid_reorder_preserves_product_and_types() {
        let t = klein();
        let reordered = reorder_colored(&t, &[1, 0]);
        let mut prod = Perm::identity(4);
        for p in reordered.perms() {
            prod = prod.then(p);
        }
        assert!(prod.is_identity());
        assert_eq!(reordered.face(), t.face());
        assert_eq!(reordered.colored()[0].cycle_type(), t.colored()[1].cycle_type());
    }

    #[test]
    fn braid_reorder_tracks_entries_across_any_permutation() {
        // Four rotations with pairwise distinct cycle types so every entry is
        // identifiable after the reorder.
        let rotations = vec![
            Perm::from_cycles_1(6, &[&[1, 2, 3, 4, 5, 6]]),
            Perm::from_cycles_1(6, &[&[1, 2]]),
            Perm::from_cycles_1(6, &[&[1, 2, 3]]),
            Perm::from_cycles_1(6, &[&[1, 2], &[3, 4]]),
        ];
        let types: Vec<Partition> = rotations.iter().map(Perm::cycle_type).collect();
        let t = ConstellationTuple::from_rotations(6, rotations).unwrap();
        for pos_of in [[3, 1, 0, 2], [2, 3, 1, 0], [1, 0, 3, 2], [0, 1, 2, 3]] {
            let reordered = reorder_colored(&t, &pos_of);
            let mut prod = Perm::identity(6);
            for p in reordered.perms() {
                prod = prod.then(p);
            }
            assert!(prod.is_identity());
            assert_eq!(reordered.face(), t.face());
            for (j, &src) in pos_of.iter().enumerate() {
                assert_eq!(reordered.colored()[j].cycle_type(), types[src]);
            }
        }
    }

    #[test]
    fn conjugation_preserves_verification() {
        let p = passport(&[&[2, 2], &[2, 2]], &[2, 2]);
        let z = Perm::from_cycles_1(4, &[&[1, 3, 2]]);
        let t = klein().conjugated(&z);
        assert!(t.verify_against(&p).unwrap().is_pass());
    }
}
