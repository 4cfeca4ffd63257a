//! Bounded subset-sum solver used for interior branch selection.
//!
//! Solves `s = y + x_1 u_1 + ... + x_l u_l` with `x_i` in `{0,1}` and
//! `y` in `{0..t}`, for `1 < u_1 <= ... <= u_l`. Every `s` in
//! `0..=t + sum(u)` is representable iff `t + sum_{i<k} u_i >= u_k - 1`
//! holds for all `k`; when the criterion fails, individual targets may still
//! be representable, so an exact search backs up the greedy construction.

use thiserror::Error;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundedSumSolution {
    /// Selection flags, aligned with the input weights.
    pub x: Vec<bool>,
    /// Residue taken from the slack `0..=t`.
    pub y: usize,
}

/// Result of a solve: a witness, or why none exists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BoundedSumOutcome {
    Solved(BoundedSumSolution),
    /// Target exceeds `t + sum(u)`.
    OutOfRange,
    /// Target is inside the range but not representable.
    Infeasible,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("weights must be sorted weakly increasing with every weight > 1")]
    UnsortedInput,
}

/// True iff `t + sum_{i<k} u_i >= u_k - 1` for every `k`, which is exactly
/// when all targets in `0..=t + sum(u)` are representable.
pub fn criterion_holds(u: &[usize], t: usize) -> bool {
    let mut prefix = t;
    for &uk in u {
        if prefix + 1 < uk {
            return false;
        }
        prefix += uk;
    }
    true
}

/// Finds `(x, y)` with `target = y + sum x_i u_i`, `y <= t`.
///
/// The primary path peels the largest weight whenever the remaining target
/// exceeds what slack plus smaller weights can cover; that construction is
/// complete whenever `criterion_holds(u, t)`. Otherwise an exact subset-sum
/// search decides the specific target.
pub fn solve_bounded_sum(
    u: &[usize],
    t: usize,
    target: usize,
) -> Result<BoundedSumOutcome, SolveError> {
    if u.windows(2).any(|w| w[0] > w[1]) || u.iter().any(|&v| v <= 1) {
        return Err(SolveError::UnsortedInput);
    }
    let total: usize = u.iter().sum();
    if target > t + total {
        return Ok(BoundedSumOutcome::OutOfRange);
    }

    // Greedy peel from the largest weight down.
    let mut prefix_sums = vec![0usize; u.len() + 1];
    for (i, &v) in u.iter().enumerate() {
        prefix_sums[i + 1] = prefix_sums[i] + v;
    }
    let mut x = vec![false; u.len()];
    let mut rest = target;
    let mut ok = true;
    for k in (0..u.len()).rev() {
        if rest > t + prefix_sums[k] {
            if rest < u[k] {
                ok = false;
                break;
            }
            x[k] = true;
            rest -= u[k];
        }
    }
    if ok && rest <= t {
        return Ok(BoundedSumOutcome::Solved(BoundedSumSolution { x, y: rest }));
    }

    // Exact fallback: find a subset summing into [target - t, target].
    let lo = target.saturating_sub(t);
    let mut reachable: Vec<Option<usize>> = vec![None; total + 1];
    reachable[0] = Some(usize::MAX); // sentinel: empty subset
    for (i, &v) in u.iter().enumerate() {
        for sum in (v..=total).rev() {
            if reachable[sum].is_none() && reachable[sum - v].is_some_and(|p| p == usize::MAX || p < i)
            {
                reachable[sum] = Some(i);
            }
        }
    }
    for sum in (lo..=target.min(total)).rev() {
        if reachable[sum].is_some() {
            let mut x = vec![false; u.len()];
            let mut at = sum;
            while at > 0 {
                let i = reachable[at].unwrap();
                x[i] = true;
                at -= u[i];
            }
            return Ok(BoundedSumOutcome::Solved(BoundedSumSolution { x, y: target - sum }));
        }
    }
    Ok(BoundedSumOutcome::Infeasible)
}
