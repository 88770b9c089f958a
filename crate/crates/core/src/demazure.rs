//! Formal characters and Demazure operators.
//!
//! For a simple index `i` and `c = <mu, alpha_i^vee>`, the operator acts on a
//! single exponential by
//!
//! ```text
//! c >= 0:   e^mu -> e^mu + e^(mu - alpha_i) + ... + e^(mu - c alpha_i)
//! c == -1:  e^mu -> 0
//! c <= -2:  e^mu -> -(e^(mu + alpha_i) + ... + e^(mu + (-c - 1) alpha_i))
//! ```
//!
//! which is `(e^mu - e^(s_i(mu) - alpha_i)) / (1 - e^(-alpha_i))` in closed
//! form. The negative branch keeps virtual characters meaningful, so
//! `D_w(e^lambda)` is the Euler characteristic for every `lambda`.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::cartan::WeightVec;
use crate::chamber::{chamber_of, dot_act, DEFAULT_CHAMBER_BUDGET};
use crate::error::{Error, Result};
use crate::weyl::{WeylElt, WeylGroup};

/// A finitely supported integer combination of weights. Zero coefficients
/// are never stored.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Character {
    terms: BTreeMap<WeightVec, i64>,
}

/// Serialized form of one term.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharacterTerm {
    pub weight: Vec<i64>,
    pub mult: i64,
}

impl Character {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `e^mu`.
    pub fn exp(mu: WeightVec) -> Self {
        let mut c = Self::zero();
        c.add_term(mu, 1);
        c
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, mu: WeightVec, mult: i64) {
        if mult == 0 {
            return;
        }
        match self.terms.entry(mu) {
            Entry::Vacant(slot) => {
                slot.insert(mult);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += mult;
                if *slot.get() == 0 {
                    slot.remove();
                }
            }
        }
    }

    pub fn multiplicity(&self, mu: &WeightVec) -> i64 {
        self.terms.get(mu).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&WeightVec, i64)> {
        self.terms.iter().map(|(w, &m)| (w, m))
    }

    pub fn weights(&self) -> impl Iterator<Item = &WeightVec> {
        self.terms.keys()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Sum of all multiplicities (the dimension, for a genuine module).
    pub fn total_multiplicity(&self) -> i64 {
        self.terms.values().sum()
    }

    pub fn scaled(&self, k: i64) -> Character {
        let mut out = Character::zero();
        for (w, m) in self.terms() {
            out.add_term(w.clone(), m * k);
        }
        out
    }

    pub fn add(&self, other: &Character) -> Character {
        let mut out = self.clone();
        for (w, m) in other.terms() {
            out.add_term(w.clone(), m);
        }
        out
    }

    pub fn sub(&self, other: &Character) -> Character {
        self.add(&other.scaled(-1))
    }

    pub fn to_terms(&self) -> Vec<CharacterTerm> {
        self.terms().map(|(w, m)| CharacterTerm { weight: w.0.clone(), mult: m }).collect()
    }

    pub fn from_terms(terms: &[CharacterTerm]) -> Character {
        let mut c = Character::zero();
        for t in terms {
            c.add_term(WeightVec(t.weight.clone()), t.mult);
        }
        c
    }
}

impl Serialize for Character {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_terms().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Character {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let terms = Vec::<CharacterTerm>::deserialize(deserializer)?;
        Ok(Character::from_terms(&terms))
    }
}

impl fmt::Display for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> =
            self.terms().map(|(w, m)| if m == 1 { format!("e^{w}") } else { format!("{m} e^{w}") }).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// The Demazure operator `D_i` applied to a character.
pub fn demazure_step(group: &WeylGroup, i: usize, c: &Character) -> Character {
    let cartan = group.cartan();
    // pairing coordinates of alpha_i
    let alpha: Vec<i64> = cartan.matrix().column(i);
    let shift = |mu: &WeightVec, k: i64| WeightVec(mu.0.iter().zip(&alpha).map(|(x, a)| x + k * a).collect());
    // accumulate unordered, sort once
    let mut acc: HashMap<WeightVec, i64> = HashMap::with_capacity(c.len() * 2);
    for (mu, mult) in c.terms() {
        let ci = mu.0[i];
        if ci >= 0 {
            for k in 0..=ci {
                *acc.entry(shift(mu, -k)).or_insert(0) += mult;
            }
        } else if ci <= -2 {
            for k in 1..=(-ci - 1) {
                *acc.entry(shift(mu, k)).or_insert(0) -= mult;
            }
        }
    }
    Character { terms: acc.into_iter().filter(|&(_, m)| m != 0).collect() }
}

/// `D_{i1} ... D_{ik} (c)` for a word `[i1, ..., ik]`, rightmost first.
pub fn demazure_word(group: &WeylGroup, word: &[usize], c: &Character) -> Character {
    word.iter().rev().fold(c.clone(), |acc, &i| demazure_step(group, i, &acc))
}

/// `D_w(e^lambda)` along the canonical reduced word of `w`. For dominant
/// `lambda` this is the character of the Demazure module; in general it is
/// the Euler characteristic of the line bundle on the Schubert variety.
pub fn demazure_character(group: &WeylGroup, w: &WeylElt, lambda: &WeightVec) -> Character {
    demazure_word(group, w.word(), &Character::exp(lambda.clone()))
}

/// Full flag cohomology for finite type: `None` when `lambda + rho` is
/// singular, otherwise the single nonvanishing degree `l(phi)` and the
/// character of the irreducible module of highest weight `phi . lambda`.
pub fn bwb_full_flag(group: &WeylGroup, lambda: &WeightVec) -> Result<Option<(usize, Character)>> {
    let w0 = group.longest_element()?;
    match chamber_of(group, lambda, DEFAULT_CHAMBER_BUDGET) {
        Ok(chamber) => {
            debug_assert_eq!(dot_act(&chamber.phi, lambda), chamber.dominant_image);
            let character = demazure_character(group, &w0, &chamber.dominant_image);
            Ok(Some((chamber.phi.length(), character)))
        }
        Err(Error::Singular(_)) => Ok(None),
        Err(e) => Err(e),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(v: &[i64]) -> WeightVec {
        WeightVec(v.to_vec())
    }

    #[test]
    fn step_examples() {
        let g = WeylGroup::preset("A2").unwrap();
        let got = demazure_step(&g, 0, &Character::exp(w(&[1, 0])));
        let mut want = Character::exp(w(&[1, 0]));
        want.add_term(w(&[-1, 1]), 1);
        assert_eq!(got, want);
        assert!(demazure_step(&g, 0, &Character::exp(w(&[-1, 7]))).is_zero());
        assert!(demazure_step(&g, 1, &Character::exp(w(&[3, -1]))).is_zero());

        let a1 = WeylGroup::preset("A1").unwrap();
        let got = demazure_step(&a1, 0, &Character::exp(w(&[-3])));
        let mut want = Character::zero();
        want.add_term(w(&[-1]), -1);
        want.add_term(w(&[1]), -1);
        assert_eq!(got, want);
        // D is idempotent on the result
        assert_eq!(demazure_step(&a1, 0, &got), got);
    }

    #[test]
    fn character_arithmetic_keeps_canonical_form() {
        let mut c = Character::exp(w(&[1, 1]));
        c.add_term(w(&[0, 0]), 2);
        c.add_term(w(&[1, 1]), -1);
        assert_eq!(c.len(), 1);
        assert_eq!(c.multiplicity(&w(&[1, 1])), 0);
        assert!(c.sub(&c).is_zero());
        assert_eq!(c.scaled(0), Character::zero());
        let json = serde_json::to_string(&c).unwrap();
        assert_eq!(json, r#"[{"weight":[0,0],"mult":2}]"#);
        let back: Character = serde_json::from_str(&json).unwrap();
        assert_eq!(back, c);
    }

    #[test]
    fn character_examples() {
        let g = WeylGroup::preset("A2").unwrap();
        let lambda = w(&[2, -5]);
        assert_eq!(demazure_character(&g, &g.identity(), &lambda), Character::exp(lambda));

        let w0 = g.longest_element().unwrap();
        let adjoint = demazure_character(&g, &w0, &w(&[1, 1]));
        assert_eq!(adjoint.total_multiplicity(), 8);
        assert_eq!(adjoint.multiplicity(&w(&[0, 0])), 2);

        let s1 = g.simple(0).unwrap();
        let got = demazure_character(&g, &s1, &w(&[1, 3]));
        let mut want = Character::exp(w(&[1, 3]));
        want.add_term(w(&[-1, 4]), 1);
        assert_eq!(got, want);
    }

    #[test]
    fn weyl_dimension_formula_a2() {
        let g = WeylGroup::preset("A2").unwrap();
        let w0 = g.longest_element().unwrap();
        for a in 0..5i64 {
            for b in 0..5i64 {
                let dim = (a + 1) * (b + 1) * (a + b + 2) / 2;
                let ch = demazure_character(&g, &w0, &w(&[a, b]));
                assert_eq!(ch.total_multiplicity(), dim, "({a},{b})");
                assert!(ch.terms().all(|(_, m)| m > 0));
            }
        }
    }

    #[test]
    fn bwb_examples() {
        let a1 = WeylGroup::preset("A1").unwrap();
        let (deg, ch) = bwb_full_flag(&a1, &w(&[-3])).unwrap().unwrap();
        assert_eq!(deg, 1);
        assert_eq!(ch.total_multiplicity(), 2);
        assert_eq!(bwb_full_flag(&a1, &w(&[-1])).unwrap(), None);

        let a2 = WeylGroup::preset("A2").unwrap();
        let (deg, ch) = bwb_full_flag(&a2, &w(&[-3, 0])).unwrap().unwrap();
        assert_eq!(deg, 2);
        assert_eq!(ch, Character::exp(w(&[0, 0])));

        let aff = WeylGroup::preset("A1~").unwrap();
        assert_eq!(bwb_full_flag(&aff, &w(&[0, 0])).unwrap_err(), Error::NotFiniteType);
    }
}
