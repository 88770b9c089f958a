//! Dot action, chamber location and generic weights.

use serde::Serialize;

use crate::cartan::WeightVec;
use crate::error::{Error, Result};
use crate::weyl::{WeylElt, WeylGroup};

/// Default cap on the number of reflections [`chamber_of`] may apply.
pub const DEFAULT_CHAMBER_BUDGET: usize = 10_000;

/// Outcome of locating the chamber of a weight.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChamberResult {
    /// The element with `phi . lambda` dominant.
    pub phi: WeylElt,
    /// `phi . lambda`.
    pub dominant_image: WeightVec,
}

/// `w . lambda = w(lambda + rho) - rho`.
pub fn dot_act(w: &WeylElt, lambda: &WeightVec) -> WeightVec {
    let rank = lambda.rank();
    let shifted = lambda.add(&WeightVec::rho(rank));
    w.act_on_weight(&shifted).sub(&WeightVec::rho(rank))
}

/// `s_i . lambda`, without building an element.
pub fn dot_simple(group: &WeylGroup, i: usize, lambda: &WeightVec) -> WeightVec {
    let rank = lambda.rank();
    let shifted = lambda.add(&WeightVec::rho(rank));
    group.reflect_weight(i, &shifted).sub(&WeightVec::rho(rank))
}

/// Finds `phi` with `phi . lambda` dominant by greedy descent: while some
/// simple pairing of the running `lambda + rho` is negative, reflect in the
/// smallest such index.
///
/// Fails with [`Error::Singular`] as soon as a zero pairing shows up, and
/// with [`Error::BudgetExceeded`] after `budget` reflections; the latter means
/// either that `lambda` lies outside the Tits cone or that the cap is too
/// small, and the two cannot be told apart here.
pub fn chamber_of(group: &WeylGroup, lambda: &WeightVec, budget: usize) -> Result<ChamberResult> {
    group.cartan().check_rank(lambda.rank())?;
    let rank = lambda.rank();
    let mut shifted = lambda.add(&WeightVec::rho(rank));
    // phi = s_{ik} ... s_{i1}, collected in application order
    let mut applied = Vec::new();
    loop {
        if let Some(i) = shifted.0.iter().position(|&c| c == 0) {
            return Err(Error::Singular(format!(
                "lambda + rho = {shifted} pairs to zero with alpha_{} after {} reflections",
                i + 1,
                applied.len()
            )));
        }
        let Some(i) = shifted.0.iter().position(|&c| c < 0) else { break };
        if applied.len() >= budget {
            return Err(Error::BudgetExceeded {
                budget,
                context: format!(
                    "chamber descent from {lambda} did not reach the dominant chamber; \
                     the weight is outside the Tits cone or the budget is too small"
                ),
            });
        }
        shifted = group.reflect_weight(i, &shifted);
        applied.push(i);
    }
    applied.reverse();
    let phi = group.element(&applied)?;
    debug_assert_eq!(phi.length(), applied.len());
    Ok(ChamberResult { phi, dominant_image: shifted.sub(&WeightVec::rho(rank)) })
}

/// `M = max { <beta, gamma^vee> : beta in phi(S), gamma in S }`.
pub fn big_m(group: &WeylGroup, phi: &WeylElt) -> i64 {
    let cartan = group.cartan();
    let l = cartan.rank();
    (0..l)
        .flat_map(|i| {
            let beta = phi.image_of_simple(i);
            (0..l).map(move |j| cartan.pairing_unchecked(&beta, j))
        })
        .max()
        .expect("rank is positive")
}

/// A weight in the `phi`-chamber whose dominant image `phi . lambda` has
/// every simple pairing equal to `margin + 1`.
pub fn generic_weight(group: &WeylGroup, phi: &WeylElt, margin: i64) -> WeightVec {
    let mu = WeightVec(vec![margin + 1; group.rank()]);
    weight_from_dominant(group, phi, &mu)
}

/// `phi^{-1} . mu`: the weight in the `phi`-chamber with dominant image `mu`.
pub fn weight_from_dominant(group: &WeylGroup, phi: &WeylElt, mu: &WeightVec) -> WeightVec {
    dot_act(&group.inverse(phi), mu)
}

/// `phi(lambda)` is dominant (linear action).
pub fn dominant_linear(phi: &WeylElt, lambda: &WeightVec) -> bool {
    phi.act_on_weight(lambda).is_dominant()
}

/// `phi . lambda` is dominant (dot action).
pub fn dominant_dot(phi: &WeylElt, lambda: &WeightVec) -> bool {
    dot_act(phi, lambda).is_dominant()
}

/// The effective genericity bounds on `<phi . lambda, gamma^vee>` used by the
/// degree theorems.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum MarginRule {
    /// `l(phi) * M`, the bound for the lower vanishing range.
    #[serde(rename = "l(phi)*M")]
    LengthPhiTimesM,
    /// `l(w0 phi) * M`, the bound for the upper vanishing range (finite type).
    #[serde(rename = "l(w0*phi)*M")]
    LengthW0PhiTimesM,
}

impl MarginRule {
    /// The bound, or `None` for `LengthW0PhiTimesM` outside finite type.
    pub fn bound(self, group: &WeylGroup, phi: &WeylElt) -> Option<i64> {
        let m = big_m(group, phi);
        match self {
            MarginRule::LengthPhiTimesM => Some(phi.length() as i64 * m),
            MarginRule::LengthW0PhiTimesM => {
                let w0 = group.longest_element().ok()?;
                Some(group.mul(&w0, phi).length() as i64 * m)
            }
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            MarginRule::LengthPhiTimesM => "l(phi)*M",
            MarginRule::LengthW0PhiTimesM => "l(w0*phi)*M",
        }
    }
}
