//! Witness construction for realizable Laurent passports.
//!
//! `build` validates, canonicalizes and classifies a passport, plans a
//! cycle-with-branches constellation for the realizable cases, synthesizes
//! the permutation tuple, restores the caller's color order, and verifies
//! the result against the input before returning it.

mod plan;
mod plan_r2;
mod plan_r_gt2;
mod scaffold;
mod solve;
mod synth;

pub use plan::{Branch, GapGrowth, PlanNode, Side, StarTree, SunflowerPlan};
pub use plan_r2::plan_r2;
pub use plan_r_gt2::plan_r_gt2;
pub use solve::{criterion_holds, solve_bounded_sum, BoundedSumOutcome, BoundedSumSolution, SolveError};
pub use synth::synthesize;

use crate::constellation::{reorder_colored, ConstellationTuple};
use crate::decision::{classify_valid, Verdict};
use crate::passport::{canonicalize, validate, LaurentPassport, RawPassport, Violation};
use std::collections::BTreeSet;
use thiserror::Error;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum BuildError {
    #[error("invalid passport: {0:?}")]
    Invalid(Vec<Violation>),
    #[error("passport is not realizable (exceptional families {0:?})")]
    NotRealizable(BTreeSet<u8>),
    #[error("construction bug: {detail}")]
    PlanInconsistent { detail: String },
}

/// Builds a witness tuple for raw passport data.
pub fn build(raw: &RawPassport) -> Result<ConstellationTuple, BuildError> {
    let p = validate(raw).map_err(BuildError::Invalid)?;
    build_valid(&p)
}

/// Builds a witness tuple for a validated passport. The returned tuple's
/// colored permutations follow the passport's stored color order, and the
/// result always passes `verify_against` the input.
pub fn build_valid(p: &LaurentPassport) -> Result<ConstellationTuple, BuildError> {
    let (canon, relab) = canonicalize(p);
    match classify_valid(&canon) {
        Verdict::Realizable => {}
        Verdict::Exceptional(families) => return Err(BuildError::NotRealizable(families)),
        Verdict::Invalid(v) => return Err(BuildError::Invalid(v)),
    }
    let plan = if canon.q() > 3 { plan_r_gt2(&canon)? } else { plan_r2(&canon)? };
    let tuple = synthesize(&plan)?;

    // Position j of the output must hold the entry planned for the canonical
    // position that originated from color j.
    let mut pos_of = vec![0; canon.r()];
    for (k, &j) in relab.source.iter().enumerate() {
        pos_of[j] = k;
    }
    let restored = reorder_colored(&tuple, &pos_of);

    let report = restored
        .verify_against(p)
        .map_err(|e| BuildError::PlanInconsistent { detail: e.to_string() })?;
    if !report.is_pass() {
        return Err(BuildError::PlanInconsistent {
            detail: format!("witness failed verification: {:?}", report.failures),
        });
    }
    Ok(restored)
}
