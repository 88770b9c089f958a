//! Relative combinatorics of a pair `(w, phi)`.
//!
//! `W+(w, phi) = { tau <= w : R+(tau) ⊆ R+(phi) }` and
//! `W-(w, phi) = { tau <= w : R+(tau) ∩ R+(phi) = ∅ }` each have a unique
//! Bruhat-maximal element, `tau_plus` and `tau_minus`. They can be found
//! either by brute force over the lower interval of `w` or by a descent
//! recursion on `w`; both are provided so one can check the other.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::cartan::RootVec;
use crate::weyl::{InversionSet, WeylElt, WeylGroup};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Recursive,
    Brute,
}

/// Which of the two relative sets is meant.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    /// `R+(tau) ⊆ R+(phi)`.
    Plus,
    /// `R+(tau) ∩ R+(phi) = ∅`.
    Minus,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelativeData {
    pub tau_plus: WeylElt,
    pub tau_minus: WeylElt,
    pub l_plus: usize,
    pub l_minus: usize,
    pub w_plus: Option<Vec<WeylElt>>,
    pub w_minus: Option<Vec<WeylElt>>,
}

impl RelativeData {
    pub fn compute(group: &WeylGroup, w: &WeylElt, phi: &WeylElt, with_sets: bool) -> Self {
        let tau_plus = tau_plus(group, w, phi, Mode::Recursive);
        let tau_minus = tau_minus(group, w, phi, Mode::Recursive);
        let (w_plus, w_minus) = if with_sets {
            let (p, m) = w_sets(group, w, phi);
            (Some(p), Some(m))
        } else {
            (None, None)
        };
        RelativeData { l_plus: tau_plus.length(), l_minus: tau_minus.length(), tau_plus, tau_minus, w_plus, w_minus }
    }
}

fn qualifies(side: Side, tau_inv: &InversionSet, phi_inv: &InversionSet) -> bool {
    match side {
        Side::Plus => tau_inv.is_subset(phi_inv),
        Side::Minus => tau_inv.is_disjoint(phi_inv),
    }
}

/// `(W+(w, phi), W-(w, phi))`, each ShortLex-sorted.
pub fn w_sets(group: &WeylGroup, w: &WeylElt, phi: &WeylElt) -> (Vec<WeylElt>, Vec<WeylElt>) {
    let phi_inv = group.inversion_set(phi);
    let mut plus = Vec::new();
    let mut minus = Vec::new();
    for tau in group.lower_interval(w) {
        let inv = group.inversion_set(&tau);
        if qualifies(Side::Plus, &inv, &phi_inv) {
            plus.push(tau.clone());
        }
        if qualifies(Side::Minus, &inv, &phi_inv) {
            minus.push(tau);
        }
    }
    (plus, minus)
}

pub fn w_set(group: &WeylGroup, w: &WeylElt, phi: &WeylElt, side: Side) -> Vec<WeylElt> {
    let (plus, minus) = w_sets(group, w, phi);
    match side {
        Side::Plus => plus,
        Side::Minus => minus,
    }
}

/// `phi(alpha_i) > 0`. Never zero: `phi(alpha_i)` is a real root.
fn sends_positive(phi: &WeylElt, i: usize) -> bool {
    !phi.is_right_descent(i)
}

/// One recursion step at the right descent `i` of `w`.
///
/// For `Plus`: if `phi(alpha_i) > 0` then `tau(w, phi) = tau(w s_i, phi)`,
/// otherwise `tau(w, phi) = tau(w s_i, phi s_i) s_i`. `Minus` flips the sign
/// test.
pub fn tau_step(group: &WeylGroup, side: Side, w: &WeylElt, phi: &WeylElt, i: usize) -> WeylElt {
    debug_assert!(w.is_right_descent(i));
    let shorter = group.right_mul(w, i);
    let keep_phi = match side {
        Side::Plus => sends_positive(phi, i),
        Side::Minus => !sends_positive(phi, i),
    };
    if keep_phi {
        tau_recursive(group, side, &shorter, phi)
    } else {
        let inner = tau_recursive(group, side, &shorter, &group.right_mul(phi, i));
        group.right_mul(&inner, i)
    }
}

fn tau_recursive(group: &WeylGroup, side: Side, w: &WeylElt, phi: &WeylElt) -> WeylElt {
    match w.right_descents().first() {
        None => group.identity(),
        Some(&i) => tau_step(group, side, w, phi, i),
    }
}

/// The unique maximal element of `set`: the only element of maximal length,
/// provided it lies above every other element. `None` otherwise.
pub fn unique_maximum(group: &WeylGroup, set: &[WeylElt]) -> Option<WeylElt> {
    let top = set.iter().map(|t| t.length()).max()?;
    let mut tops = set.iter().filter(|t| t.length() == top);
    let candidate = tops.next()?;
    if tops.next().is_some() {
        return None;
    }
    set.iter().all(|t| group.bruhat_leq(t, candidate)).then(|| candidate.clone())
}

fn tau_brute(group: &WeylGroup, side: Side, w: &WeylElt, phi: &WeylElt) -> WeylElt {
    let set = w_set(group, w, phi, side);
    unique_maximum(group, &set).unwrap_or_else(|| {
        // Fall back to a maximal-length element so the comparison with the
        // recursive mode still reports a discrepancy instead of panicking.
        set.iter().max_by_key(|t| t.length()).cloned().unwrap_or_else(|| group.identity())
    })
}

pub fn tau(group: &WeylGroup, side: Side, w: &WeylElt, phi: &WeylElt, mode: Mode) -> WeylElt {
    match mode {
        Mode::Recursive => tau_recursive(group, side, w, phi),
        Mode::Brute => tau_brute(group, side, w, phi),
    }
}

pub fn tau_plus(group: &WeylGroup, w: &WeylElt, phi: &WeylElt, mode: Mode) -> WeylElt {
    tau(group, Side::Plus, w, phi, mode)
}

pub fn tau_minus(group: &WeylGroup, w: &WeylElt, phi: &WeylElt, mode: Mode) -> WeylElt {
    tau(group, Side::Minus, w, phi, mode)
}

pub fn l_plus(group: &WeylGroup, w: &WeylElt, phi: &WeylElt) -> usize {
    tau_plus(group, w, phi, Mode::Recursive).length()
}

pub fn l_minus(group: &WeylGroup, w: &WeylElt, phi: &WeylElt) -> usize {
    tau_minus(group, w, phi, Mode::Recursive).length()
}

/// One failed Bruhat comparison found by [`bruhat_domination_check`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DominationViolation {
    pub side: &'static str,
    pub tau: String,
    pub expected: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DominationReport {
    pub comparisons: usize,
    pub violations: Vec<DominationViolation>,
}

impl DominationReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks `tau_plus phi^{-1} <= tau phi^{-1} <= tau_minus phi^{-1}` for every
/// `tau <= w`.
pub fn bruhat_domination_check(group: &WeylGroup, w: &WeylElt, phi: &WeylElt) -> DominationReport {
    let phi_inv = group.inverse(phi);
    let low = group.mul(&tau_plus(group, w, phi, Mode::Recursive), &phi_inv);
    let high = group.mul(&tau_minus(group, w, phi, Mode::Recursive), &phi_inv);
    let mut report = DominationReport { comparisons: 0, violations: Vec::new() };
    for tau in group.lower_interval(w) {
        let shifted = group.mul(&tau, &phi_inv);
        report.comparisons += 2;
        if !group.bruhat_leq(&low, &shifted) {
            report.violations.push(DominationViolation {
                side: "plus",
                tau: tau.to_string(),
                expected: format!("{low} <= {shifted}"),
            });
        }
        if !group.bruhat_leq(&shifted, &high) {
            report.violations.push(DominationViolation {
                side: "minus",
                tau: tau.to_string(),
                expected: format!("{shifted} <= {high}"),
            });
        }
    }
    report
}

/// Checks the two sign-propagation facts behind the recursion, for the
/// triple `(tau, phi, alpha_i)`:
///
/// * `tau(alpha) > 0`, `phi(alpha) > 0`, `R+(tau) ⊆ R+(phi s_alpha)`
///   imply `R+(tau) ⊆ R+(phi)`;
/// * `tau(alpha) > 0`, `phi(alpha) < 0`, `R+(tau) ∩ R+(phi s_alpha) = ∅`
///   imply `R+(tau) ∩ R+(phi) = ∅`.
///
/// Returns the labels of the implications that fail.
pub fn propagation_failures(group: &WeylGroup, tau: &WeylElt, phi: &WeylElt, i: usize) -> Vec<&'static str> {
    let mut failures = Vec::new();
    if tau.is_right_descent(i) {
        return failures;
    }
    let tau_inv = group.inversion_set(tau);
    let phi_inv = group.inversion_set(phi);
    let phi_s_inv = group.inversion_set(&group.right_mul(phi, i));
    if sends_positive(phi, i) {
        if tau_inv.is_subset(&phi_s_inv) && !tau_inv.is_subset(&phi_inv) {
            failures.push("subset propagation");
        }
    } else if tau_inv.is_disjoint(&phi_s_inv) && !tau_inv.is_disjoint(&phi_inv) {
        failures.push("disjointness propagation");
    }
    failures
}

/// Roots shared by `R+(w)` and `R+(phi)`.
pub fn common_inversions(group: &WeylGroup, w: &WeylElt, phi: &WeylElt) -> BTreeSet<RootVec> {
    let a = group.inversion_set(w);
    let b = group.inversion_set(phi);
    a.intersection(&b).cloned().collect()
}
