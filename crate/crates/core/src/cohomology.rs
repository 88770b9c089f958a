//! Degree predictions for `H^i(w, lambda)` and a partial exact oracle.
//!
//! The oracle [`resolve`] only uses moves that are valid on a Bott-Samelson
//! resolution one `P^1`-fibration at a time, at a right descent `alpha` of
//! `w`:
//!
//! * `<lambda, alpha^vee> = -1` kills every cohomology group;
//! * `<lambda, alpha^vee> <= -2` gives `H^i(w, lambda) = H^{i-1}(w, s_alpha . lambda)`;
//! * a dominant weight has only `H^0`, with the Demazure character.
//!
//! When none of these applies (and the full flag shortcut is not available)
//! the answer is `Indeterminate`, never a guess.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::cartan::WeightVec;
use crate::chamber::{big_m, dot_act, dot_simple, weight_from_dominant, MarginRule};
use crate::demazure::{bwb_full_flag, demazure_character, Character};
use crate::error::{Error, Result};
use crate::relative::{tau_minus, tau_plus, Mode};
use crate::weyl::{WeylElt, WeylGroup};

/// Cap on the number of shift moves in one reduction.
pub const DEFAULT_RESOLVE_BUDGET: usize = 10_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Rule {
    Shift,
    Wall,
    Dominant,
    BwbTerminal,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Step {
    pub rule: Rule,
    /// 1-based in serialized output, `None` for terminal rules.
    #[serde(serialize_with = "serialize_index")]
    pub simple_index: Option<usize>,
    pub weight_before: WeightVec,
}

fn serialize_index<S: serde::Serializer>(v: &Option<usize>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match v {
        Some(i) => s.serialize_some(&(i + 1)),
        None => s.serialize_none(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    /// Every cohomology group vanishes.
    Zero,
    /// Cohomology is concentrated in `degree` with the given character.
    Resolved {
        degree: usize,
        character: Character,
    },
    Indeterminate,
}

impl Outcome {
    pub fn label(&self) -> &'static str {
        match self {
            Outcome::Zero => "zero",
            Outcome::Resolved { .. } => "resolved",
            Outcome::Indeterminate => "indeterminate",
        }
    }

    /// `None` when indeterminate; otherwise the nonvanishing degree, if any.
    pub fn nonzero_degree(&self) -> Option<Option<usize>> {
        match self {
            Outcome::Zero => Some(None),
            Outcome::Resolved { degree, .. } => Some(Some(*degree)),
            Outcome::Indeterminate => None,
        }
    }

    /// `sum_i (-1)^i ch H^i`, when known.
    pub fn euler_characteristic(&self) -> Option<Character> {
        match self {
            Outcome::Zero => Some(Character::zero()),
            Outcome::Resolved { degree, character } => {
                Some(if degree % 2 == 0 { character.clone() } else { character.scaled(-1) })
            }
            Outcome::Indeterminate => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionTrace {
    pub steps: Vec<Step>,
    pub outcome: Outcome,
}

impl ReductionTrace {
    pub fn shifts(&self) -> usize {
        self.steps.iter().filter(|s| s.rule == Rule::Shift).count()
    }
}

impl Serialize for ReductionTrace {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut map = serializer.serialize_map(None)?;
        map.serialize_entry("outcome", self.outcome.label())?;
        if let Outcome::Resolved { degree, character } = &self.outcome {
            map.serialize_entry("degree", degree)?;
            map.serialize_entry("character", character)?;
        }
        map.serialize_entry("steps", &self.steps)?;
        map.end()
    }
}

/// Order in which tied shift candidates are tried.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ShiftChoice {
    Smallest,
    Largest,
}

/// Runs the oracle with smallest-index tie breaking.
pub fn resolve(group: &WeylGroup, w: &WeylElt, lambda: &WeightVec) -> ReductionTrace {
    resolve_with(group, w, lambda, ShiftChoice::Smallest, DEFAULT_RESOLVE_BUDGET)
}

pub fn resolve_with(
    group: &WeylGroup,
    w: &WeylElt,
    lambda: &WeightVec,
    choice: ShiftChoice,
    budget: usize,
) -> ReductionTrace {
    let descents = w.right_descents();
    let is_w0 = group.cartan().is_finite_type() && group.longest_element().map(|w0| &w0 == w).unwrap_or(false);
    let mut steps = Vec::new();
    let mut current = lambda.clone();
    let mut shifts = 0usize;
    loop {
        if current.is_dominant() {
            let character = demazure_character(group, w, &current);
            steps.push(Step { rule: Rule::Dominant, simple_index: None, weight_before: current });
            return ReductionTrace { steps, outcome: Outcome::Resolved { degree: shifts, character } };
        }
        if let Some(&i) = descents.iter().find(|&&i| current.0[i] == -1) {
            steps.push(Step { rule: Rule::Wall, simple_index: Some(i), weight_before: current });
            return ReductionTrace { steps, outcome: Outcome::Zero };
        }
        let mut candidates = descents.iter().copied().filter(|&i| current.0[i] <= -2);
        let pick = match choice {
            ShiftChoice::Smallest => candidates.next(),
            ShiftChoice::Largest => candidates.next_back(),
        };
        if let Some(i) = pick {
            if shifts >= budget {
                return ReductionTrace { steps, outcome: Outcome::Indeterminate };
            }
            let next = dot_simple(group, i, &current);
            steps.push(Step { rule: Rule::Shift, simple_index: Some(i), weight_before: current });
            current = next;
            shifts += 1;
            continue;
        }
        if is_w0 {
            let outcome = match bwb_full_flag(group, &current) {
                Ok(Some((degree, character))) => Outcome::Resolved { degree: shifts + degree, character },
                Ok(None) => Outcome::Zero,
                Err(_) => Outcome::Indeterminate,
            };
            steps.push(Step { rule: Rule::BwbTerminal, simple_index: None, weight_before: current });
            return ReductionTrace { steps, outcome };
        }
        return ReductionTrace { steps, outcome: Outcome::Indeterminate };
    }
}

/// A margin requirement together with its value for a given `phi`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MarginRequirement {
    pub rule: MarginRule,
    /// Every simple pairing of `phi . lambda` must exceed this.
    pub value: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MarginsRequired {
    pub upper: MarginRequirement,
    pub lower: MarginRequirement,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub l_plus_bound: Option<MarginRequirement>,
}

/// Predicted vanishing pattern of `H^*(w, lambda)` for generic `lambda` in
/// the `phi`-chamber.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreePrediction {
    /// `H^0 != 0` iff `R+(w) ∩ R+(phi) = ∅`.
    #[serde(rename = "h0")]
    pub h0_nonzero: bool,
    /// `H^{l(w)} != 0` iff `R+(w) ⊆ R+(phi)`.
    #[serde(rename = "top")]
    pub top_nonzero: bool,
    /// Vanishing above `min(l(w), l(phi))`.
    pub upper: usize,
    /// Vanishing below `l(w) - l_minus(w, phi)`.
    pub lower: usize,
    /// Vanishing above `l_plus(w, phi)`; finite type only.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub l_plus_bound: Option<usize>,
    /// `l_plus(w, phi)`, where the cohomology is predicted nonzero.
    pub nonzero_at: usize,
    pub tau_plus: String,
    pub tau_minus: String,
    pub margins_required: MarginsRequired,
}

pub fn predict_degrees(group: &WeylGroup, w: &WeylElt, phi: &WeylElt) -> DegreePrediction {
    let inv_w = group.inversion_set(w);
    let inv_phi = group.inversion_set(phi);
    let tp = tau_plus(group, w, phi, Mode::Recursive);
    let tm = tau_minus(group, w, phi, Mode::Recursive);
    let requirement = |rule: MarginRule| rule.bound(group, phi).map(|value| MarginRequirement { rule, value });
    let l_plus_bound = requirement(MarginRule::LengthW0PhiTimesM);
    let lphi = requirement(MarginRule::LengthPhiTimesM).expect("defined in every type");
    DegreePrediction {
        h0_nonzero: inv_w.is_disjoint(&inv_phi),
        top_nonzero: inv_w.is_subset(&inv_phi),
        upper: w.length().min(phi.length()),
        lower: w.length() - tm.length(),
        l_plus_bound: l_plus_bound.as_ref().map(|_| tp.length()),
        nonzero_at: tp.length(),
        tau_plus: tp.word_string(),
        tau_minus: tm.word_string(),
        margins_required: MarginsRequired { upper: lphi.clone(), lower: lphi, l_plus_bound },
    }
}

/// One weight tested by [`cross_check`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CrossCheckInstance {
    pub lambda: WeightVec,
    pub dominant_image: WeightVec,
    pub outcome: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub degree: Option<usize>,
    /// Names of the checks that were applicable and evaluated.
    pub checked: Vec<&'static str>,
    pub violations: Vec<CheckViolation>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckViolation {
    pub check: &'static str,
    pub expected: String,
    pub got: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CrossCheckReport {
    pub w: String,
    pub phi: String,
    pub margin: i64,
    pub prediction: DegreePrediction,
    pub resolved: usize,
    pub indeterminate: usize,
    pub instances: Vec<CrossCheckInstance>,
}

impl CrossCheckReport {
    pub fn violation_count(&self) -> usize {
        self.instances.iter().map(|i| i.violations.len()).sum()
    }
}

/// Maximum extra amount added to each pairing of the dominant image when
/// sampling perturbed weights.
pub const PERTURBATION_SPREAD: i64 = 10;

/// The weights [`cross_check`] samples: the base generic weight and
/// `samples` random ones whose dominant image has every pairing > `margin`.
pub fn sample_dominant_images(rank: usize, margin: i64, samples: usize, seed: u64) -> Vec<WeightVec> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = vec![WeightVec(vec![margin + 1; rank])];
    for _ in 0..samples {
        out.push(WeightVec((0..rank).map(|_| margin + 1 + rng.gen_range(0..=PERTURBATION_SPREAD)).collect()));
    }
    out
}

/// Compares the oracle with the degree predictions on generic weights in the
/// `phi`-chamber.
///
/// Checks applied to each `Zero`/`Resolved` outcome:
/// `h0` and `top` (both directions), the Bruhat-order-independent window
/// `[lower, upper]` (when the margin is at least `l(phi) M`), the finite-type
/// `l_plus` bound (when the margin is at least `l(w0 phi) M`), nonvanishing
/// at `l_plus` with `tau_plus . lambda` as a weight, and the extremal weight
/// claims at degrees `0` and `l(w)`.
pub fn cross_check(
    group: &WeylGroup,
    w: &WeylElt,
    phi: &WeylElt,
    margin: i64,
    samples: usize,
    seed: u64,
) -> CrossCheckReport {
    cross_check_with(group, w, phi, margin, samples, seed, |_, _| {})
}

/// [`cross_check`], handing each finished instance and its trace to
/// `inspect` so callers can run further checks without resolving again.
pub fn cross_check_with(
    group: &WeylGroup,
    w: &WeylElt,
    phi: &WeylElt,
    margin: i64,
    samples: usize,
    seed: u64,
    mut inspect: impl FnMut(&CrossCheckInstance, &ReductionTrace),
) -> CrossCheckReport {
    let prediction = predict_degrees(group, w, phi);
    let tp = tau_plus(group, w, phi, Mode::Recursive);
    let window_applies = margin >= prediction.margins_required.lower.value;
    let l_plus_applies = prediction.margins_required.l_plus_bound.as_ref().is_some_and(|r| margin >= r.value);
    // exact multiplicities need weights that pairing coordinates determine
    let faithful = group.cartan().is_nondegenerate();
    let mut report = CrossCheckReport {
        w: w.word_string(),
        phi: phi.word_string(),
        margin,
        prediction: prediction.clone(),
        resolved: 0,
        indeterminate: 0,
        instances: Vec::new(),
    };
    for mu in sample_dominant_images(group.rank(), margin, samples, seed) {
        let lambda = weight_from_dominant(group, phi, &mu);
        debug_assert_eq!(dot_act(phi, &lambda), mu);
        let trace = resolve(group, w, &lambda);
        let mut instance = CrossCheckInstance {
            lambda: lambda.clone(),
            dominant_image: mu,
            outcome: trace.outcome.label(),
            degree: None,
            checked: Vec::new(),
            violations: Vec::new(),
        };
        let Some(degree) = trace.outcome.nonzero_degree() else {
            report.indeterminate += 1;
            inspect(&instance, &trace);
            report.instances.push(instance);
            continue;
        };
        report.resolved += 1;
        instance.degree = degree;
        let mut check = |name: &'static str, ok: bool, expected: String, got: String| {
            instance.checked.push(name);
            if !ok {
                instance.violations.push(CheckViolation { check: name, expected, got });
            }
        };
        let show = |d: Option<usize>| d.map_or("none".to_string(), |d| d.to_string());

        let h0 = degree == Some(0);
        check(
            "h0_nonzero",
            h0 == prediction.h0_nonzero,
            format!("H^0 != 0: {}", prediction.h0_nonzero),
            format!("degree {}", show(degree)),
        );
        let top = degree == Some(w.length());
        check(
            "top_nonzero",
            top == prediction.top_nonzero,
            format!("H^{} != 0: {}", w.length(), prediction.top_nonzero),
            format!("degree {}", show(degree)),
        );
        check(
            "nonzero_at_l_plus",
            degree == Some(prediction.nonzero_at),
            format!("H^{} != 0", prediction.nonzero_at),
            format!("degree {}", show(degree)),
        );
        if window_applies {
            if let Some(d) = degree {
                check("upper", d <= prediction.upper, format!("degree <= {}", prediction.upper), d.to_string());
                check("lower", d >= prediction.lower, format!("degree >= {}", prediction.lower), d.to_string());
            }
        }
        if l_plus_applies {
            if let (Some(d), Some(bound)) = (degree, prediction.l_plus_bound) {
                check("l_plus_bound", d <= bound, format!("degree <= {bound}"), d.to_string());
            }
        }
        if let Outcome::Resolved { degree: d, character } = &trace.outcome {
            let top_weight = dot_act(&tp, &lambda);
            check(
                "tau_plus_weight",
                character.multiplicity(&top_weight) != 0,
                format!("{top_weight} is a weight"),
                format!("multiplicity {}", character.multiplicity(&top_weight)),
            );
            if *d == 0 && faithful {
                let extremal = w.act_on_weight(&lambda);
                let m = character.multiplicity(&extremal);
                check("h0_extremal_weight", m == 1, format!("multiplicity of {extremal} is 1"), m.to_string());
            }
            if *d == w.length() && faithful {
                let extremal = dot_act(w, &lambda);
                let m = character.multiplicity(&extremal);
                check("top_extremal_weight", m == 1, format!("multiplicity of {extremal} is 1"), m.to_string());
            }
        }
        inspect(&instance, &trace);
        report.instances.push(instance);
    }
    report
}

/// One weight outside the predicted interval.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IntervalViolation {
    pub weight: WeightVec,
    pub bound: &'static str,
    pub difference: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IntervalReport {
    pub upper_weight: WeightVec,
    pub lower_weight: WeightVec,
    pub weights_checked: usize,
    pub violations: Vec<IntervalViolation>,
}

impl IntervalReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// `nu >= mu`: `nu - mu` is a nonnegative rational combination of simple
/// roots. Returns the coordinates on failure.
fn dominates(group: &WeylGroup, nu: &WeightVec, mu: &WeightVec) -> Result<std::result::Result<(), String>> {
    let diff = nu.sub(mu);
    let coords = group.cartan().weight_to_root_coords(&diff).ok_or(Error::NotFiniteType)?;
    if coords.iter().all(|c| *c >= 0.into()) {
        Ok(Ok(()))
    } else {
        Ok(Err(coords.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",")))
    }
}

/// Checks `tau_minus . lambda <= mu <= tau_plus . lambda` for every weight
/// `mu` of a resolved trace.
pub fn weight_interval_check(
    group: &WeylGroup,
    trace: &ReductionTrace,
    w: &WeylElt,
    phi: &WeylElt,
    lambda: &WeightVec,
) -> Result<IntervalReport> {
    if !group.cartan().is_finite_type() {
        return Err(Error::NotFiniteType);
    }
    let upper_weight = dot_act(&tau_plus(group, w, phi, Mode::Recursive), lambda);
    let lower_weight = dot_act(&tau_minus(group, w, phi, Mode::Recursive), lambda);
    let mut report = IntervalReport {
        upper_weight: upper_weight.clone(),
        lower_weight: lower_weight.clone(),
        weights_checked: 0,
        violations: Vec::new(),
    };
    let Outcome::Resolved { character, .. } = &trace.outcome else {
        return Ok(report);
    };
    for mu in character.weights() {
        report.weights_checked += 1;
        if let Err(coords) = dominates(group, &upper_weight, mu)? {
            report.violations.push(IntervalViolation { weight: mu.clone(), bound: "upper", difference: coords });
        }
        if let Err(coords) = dominates(group, mu, &lower_weight)? {
            report.violations.push(IntervalViolation { weight: mu.clone(), bound: "lower", difference: coords });
        }
    }
    Ok(report)
}

/// `true` when `w` dominates every simple reflection in Bruhat order.
pub fn above_all_simple(group: &WeylGroup, w: &WeylElt) -> bool {
    (0..group.rank()).all(|i| w.word().contains(&i))
}

/// The pair `(l(w) - l_minus, l_plus)` compared for the window corollary,
/// reported but never asserted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WindowNote {
    pub w: String,
    pub phi: String,
    pub lower: usize,
    pub l_plus: usize,
}

/// Pairs with `w` above every simple reflection, `w != w0`, both extreme
/// degrees predicted nonzero, and `l(w) - l_minus > l_plus`.
pub fn window_notes(group: &WeylGroup, w: &WeylElt, phi: &WeylElt) -> Option<WindowNote> {
    let w0 = group.longest_element().ok()?;
    if w == &w0 || !above_all_simple(group, w) {
        return None;
    }
    let p = predict_degrees(group, w, phi);
    (p.lower > p.nonzero_at).then(|| WindowNote {
        w: w.to_string(),
        phi: phi.to_string(),
        lower: p.lower,
        l_plus: p.nonzero_at,
    })
}

/// `M` for `phi`, re-exported here for reports.
pub fn genericity_constant(group: &WeylGroup, phi: &WeylElt) -> i64 {
    big_m(group, phi)
}
