//! Text and file formats for the command-line frontend.
//!
//! * Passport text: `partition (';' partition)+` where
//!   `partition := int (',' int)* ['*']`, whitespace ignored. At most one
//!   `'*'` marks the face partition. Without a marker the face is the unique
//!   two-part partition; with several two-part candidates the final partition
//!   is accepted when the choice is immaterial (all candidates are equal) or
//!   when it is the value-unique candidate sitting in the conventional face
//!   position. Anything else is ambiguous.
//! * Constellation documents: JSON with 1-indexed image arrays and an
//!   explicit composition convention, rejected on load unless the arrays
//!   multiply to the identity left-to-right.
//! * DOT export: for `q = 3` the bicolored-graph view (black and white
//!   vertices, one edge per star); for `q > 3` star centers appear as
//!   auxiliary nodes.

use constel::passport::{LaurentPassport, Partition, RawPassport};
use constel::{ConstellationTuple, Perm};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error: {0}")]
    Syntax(String),
    #[error("two partitions have exactly two parts and none is marked with '*'")]
    AmbiguousFace,
    #[error("no two-part partition and no '*' marker")]
    NoFace,
}

/// Parses the passport grammar. Partitions keep their listed order; the face
/// designation is resolved here but validation is left to the library.
pub fn parse_passport(text: &str) -> Result<RawPassport, ParseError> {
    let mut partitions = Vec::new();
    let mut starred = Vec::new();
    for (idx, chunk) in text.split(';').enumerate() {
        let mut chunk: String = chunk.chars().filter(|c| !c.is_whitespace()).collect();
        if chunk.is_empty() {
            return Err(ParseError::Syntax(format!("partition {} is empty", idx + 1)));
        }
        if let Some(stripped) = chunk.strip_suffix('*') {
            starred.push(idx);
            chunk = stripped.to_string();
        }
        if chunk.contains('*') {
            return Err(ParseError::Syntax("'*' may only end a partition".into()));
        }
        let mut parts = Vec::new();
        for token in chunk.split(',') {
            let value: usize = token
                .parse()
                .map_err(|_| ParseError::Syntax(format!("bad integer {token:?}")))?;
            if value == 0 {
                return Err(ParseError::Syntax("parts must be positive".into()));
            }
            parts.push(value);
        }
        partitions.push(Partition::new(parts));
    }
    if partitions.len() < 2 {
        return Err(ParseError::Syntax("need at least two partitions".into()));
    }
    let face = match starred.len() {
        0 => {
            let two_part: Vec<usize> = partitions
                .iter()
                .enumerate()
                .filter(|(_, p)| p.len() == 2)
                .map(|(i, _)| i)
                .collect();
            let last = partitions.len() - 1;
            let all_candidates_equal =
                two_part.iter().all(|&i| partitions[i] == partitions[two_part[0]]);
            let last_is_value_unique = two_part.contains(&last)
                && partitions[..last].iter().all(|p| *p != partitions[last]);
            match two_part.len() {
                0 => return Err(ParseError::NoFace),
                1 => two_part[0],
                // Several candidates: take the final partition when the
                // choice cannot matter, or when it is the odd one out in the
                // conventional face position.
                _ if (all_candidates_equal && two_part.contains(&last))
                    || last_is_value_unique =>
                {
                    last
                }
                _ => return Err(ParseError::AmbiguousFace),
            }
        }
        1 => starred[0],
        _ => return Err(ParseError::Syntax("more than one '*' marker".into())),
    };
    Ok(RawPassport::new(partitions, face))
}

/// Formats a raw passport in the grammar, with an explicit face marker so the
/// output round-trips regardless of part counts.
pub fn format_passport(raw: &RawPassport) -> String {
    let mut out = String::new();
    for (idx, part) in raw.partitions.iter().enumerate() {
        if idx > 0 {
            out.push(';');
        }
        out.push_str(&part.to_string());
        if idx == raw.face {
            out.push('*');
        }
    }
    out
}

pub fn format_validated(p: &LaurentPassport) -> String {
    format_passport(&p.to_raw())
}

pub const COMPOSITION_CONVENTION: &str = "left-to-right";

/// On-disk witness format: 1-indexed image arrays `g_1 .. g_q` whose
/// left-to-right product is the identity.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ConstellationDoc {
    pub n: usize,
    pub q: usize,
    pub convention: String,
    pub sigma: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum DocError {
    #[error("unsupported composition convention {0:?}")]
    BadConvention(String),
    #[error("sigma has {got} permutations, header says q = {want}")]
    QMismatch { got: usize, want: usize },
    #[error("permutation {index} is not a 1-indexed bijection on 1..={n}")]
    BadPermutation { index: usize, n: usize },
    #[error("the permutations do not multiply to the identity")]
    ProductNotIdentity,
}

impl ConstellationDoc {
    pub fn from_tuple(tuple: &ConstellationTuple) -> Self {
        ConstellationDoc {
            n: tuple.degree(),
            q: tuple.q(),
            convention: COMPOSITION_CONVENTION.to_string(),
            sigma: tuple
                .perms()
                .iter()
                .map(|p| p.images().iter().map(|&v| v + 1).collect())
                .collect(),
        }
    }

    /// Validates and converts to a tuple; the identity-product check is
    /// bit-exact, any deviation is rejected.
    pub fn into_tuple(&self) -> Result<ConstellationTuple, DocError> {
        if self.convention != COMPOSITION_CONVENTION {
            return Err(DocError::BadConvention(self.convention.clone()));
        }
        if self.sigma.len() != self.q {
            return Err(DocError::QMismatch { got: self.sigma.len(), want: self.q });
        }
        let mut perms = Vec::with_capacity(self.q);
        for (index, images_1) in self.sigma.iter().enumerate() {
            if images_1.len() != self.n || images_1.iter().any(|&v| v < 1 || v > self.n) {
                return Err(DocError::BadPermutation { index, n: self.n });
            }
            let images = images_1.iter().map(|&v| v - 1).collect();
            let perm = Perm::from_images(images)
                .map_err(|_| DocError::BadPermutation { index, n: self.n })?;
            perms.push(perm);
        }
        ConstellationTuple::new(self.n, perms).map_err(|_| DocError::ProductNotIdentity)
    }
}

/// DOT rendering of a witness. For `q = 3` the constellation is a bicolored
/// graph: one black node per cycle of `g_1`, one white node per cycle of
/// `g_2`, and one edge per star. For `q > 3`, star centers become auxiliary
/// point nodes joined to one vertex of each color.
pub fn to_dot(tuple: &ConstellationTuple) -> String {
    let mut out = String::from("graph constellation {\n");
    if tuple.q() == 3 {
        let black = tuple.colored()[0].cycles();
        let white = tuple.colored()[1].cycles();
        let mut black_of = vec![0; tuple.degree()];
        for (v, cycle) in black.iter().enumerate() {
            out.push_str(&format!(
                "  b{v} [shape=circle, style=filled, fillcolor=black, label=\"\"];\n"
            ));
            for &star in cycle {
                black_of[star] = v;
            }
        }
        let mut white_of = vec![0; tuple.degree()];
        for (v, cycle) in white.iter().enumerate() {
            out.push_str(&format!("  w{v} [shape=circle, label=\"\"];\n"));
            for &star in cycle {
                white_of[star] = v;
            }
        }
        for star in 0..tuple.degree() {
            out.push_str(&format!(
                "  b{} -- w{} [label=\"{}\"];\n",
                black_of[star],
                white_of[star],
                star + 1
            ));
        }
    } else {
        for (color, perm) in tuple.colored().iter().enumerate() {
            for (v, _) in perm.cycles().iter().enumerate() {
                out.push_str(&format!("  c{}v{v} [shape=circle, label=\"{}\"];\n", color + 1, color + 1));
            }
        }
        for star in 0..tuple.degree() {
            out.push_str(&format!("  s{} [shape=point];\n", star + 1));
        }
        for (color, perm) in tuple.colored().iter().enumerate() {
            let mut vertex_of = vec![0; tuple.degree()];
            for (v, cycle) in perm.cycles().iter().enumerate() {
                for &star in cycle {
                    vertex_of[star] = v;
                }
            }
            for (star, &v) in vertex_of.iter().enumerate() {
                out.push_str(&format!("  s{} -- c{}v{v};\n", star + 1, color + 1));
            }
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(v: &[usize]) -> Partition {
        Partition::new(v.to_vec())
    }

    #[test]
    fn parse_resolves_unique_two_part_face() {
        let raw = parse_passport("2,2;2,2;3,1").unwrap();
        assert_eq!(raw.face, 2);
        assert_eq!(raw.partitions[2], part(&[3, 1]));
    }

    #[test]
    fn parse_honors_explicit_marker() {
        let raw = parse_passport("3,1;2,2*;3,1").unwrap();
        assert_eq!(raw.face, 1);
        assert_eq!(raw.partitions[raw.face], part(&[2, 2]));
    }

    #[test]
    fn parse_rejects_ambiguous_face() {
        assert_eq!(parse_passport("2,2;3,1;2,2"), Err(ParseError::AmbiguousFace));
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(matches!(parse_passport("2,x;2,2"), Err(ParseError::Syntax(_))));
        assert!(matches!(parse_passport("2,0;2,2"), Err(ParseError::Syntax(_))));
        assert!(matches!(parse_passport("1,1,1,1"), Err(ParseError::Syntax(_))));
    }

    #[test]
    fn parse_requires_some_face() {
        assert_eq!(parse_passport("1,1,2;1,1,2"), Err(ParseError::NoFace));
    }

    #[test]
    fn format_round_trips() {
        for text in ["2,2;2,2;3,1", "3,1;2,2*;3,1", "1,2,3;6*;1,2,3"] {
            let raw = parse_passport(text).unwrap();
            let again = parse_passport(&format_passport(&raw)).unwrap();
            assert_eq!(raw, again);
        }
    }

    #[test]
    fn format_round_trips_over_enumerated_passports() {
        for n in 2..=6 {
            for q in [3, 4] {
                for p in constel::passport::enumerate_passports(n, q) {
                    let raw = p.to_raw();
                    assert_eq!(parse_passport(&format_passport(&raw)), Ok(raw));
                }
            }
        }
    }

    #[test]
    fn identical_two_part_partitions_are_not_ambiguous() {
        // Any choice of face yields the same passport here.
        let raw = parse_passport("2,1;2,1;2,1;2,1").unwrap();
        assert_eq!(raw.face, 3);
    }

    #[test]
    fn doc_round_trips_and_validates() {
        let g1 = Perm::from_cycles_1(4, &[&[1, 2], &[3, 4]]);
        let g2 = Perm::from_cycles_1(4, &[&[1, 3], &[2, 4]]);
        let tuple = ConstellationTuple::from_rotations(4, vec![g1, g2]).unwrap();
        let doc = ConstellationDoc::from_tuple(&tuple);
        let back = doc.into_tuple().unwrap();
        assert_eq!(back, tuple);

        let mut broken = ConstellationDoc::from_tuple(&tuple);
        broken.sigma[0].swap(0, 2);
        assert!(matches!(
            broken.into_tuple(),
            Err(DocError::ProductNotIdentity) | Err(DocError::BadPermutation { .. })
        ));
    }

    #[test]
    fn dot_export_counts_nodes_and_edges() {
        let g1 = Perm::from_cycles_1(4, &[&[1, 2], &[3, 4]]);
        let g2 = Perm::from_cycles_1(4, &[&[1, 3], &[2, 4]]);
        let tuple = ConstellationTuple::from_rotations(4, vec![g1, g2]).unwrap();
        let dot = to_dot(&tuple);
        assert_eq!(dot.matches("fillcolor=black").count(), 2);
        assert_eq!(dot.matches("shape=circle").count(), 4); // 2 black + 2 white
        assert_eq!(dot.matches(" -- ").count(), 4);
    }
}
