//! Generalized Cartan matrices, symmetrizers and the lattices they act on.
//!
//! Conventions: `a[i][j] = <alpha_j, alpha_i^vee>`, so the simple root
//! `alpha_i` has pairing coordinates given by column `i` of the matrix and
//! `<beta, alpha_j^vee> = sum_i k_i a[j][i]` for `beta = sum_i k_i alpha_i`.
//! Simple indices are 0-based throughout the library; the text formats
//! handled in [`crate::io`] are 1-based.

use std::collections::VecDeque;
use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{determinant, Matrix, Rational};

/// A weight in coroot-pairing coordinates `c_i = <lambda, alpha_i^vee>`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct WeightVec(pub Vec<i64>);

/// A root in simple-root coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RootVec(pub Vec<i64>);

impl WeightVec {
    pub fn zero(rank: usize) -> Self {
        WeightVec(vec![0; rank])
    }

    /// The weight rho, pairing to 1 with every simple coroot.
    pub fn rho(rank: usize) -> Self {
        WeightVec(vec![1; rank])
    }

    pub fn pairings(&self) -> &[i64] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    pub fn is_regular_dominant(&self) -> bool {
        self.0.iter().all(|&c| c > 0)
    }

    pub fn add(&self, other: &WeightVec) -> WeightVec {
        WeightVec(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &WeightVec) -> WeightVec {
        WeightVec(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }
}

impl fmt::Display for WeightVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl RootVec {
    pub fn simple(rank: usize, i: usize) -> Self {
        let mut v = vec![0; rank];
        v[i] = 1;
        RootVec(v)
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&k| k >= 0) && self.0.iter().any(|&k| k > 0)
    }

    pub fn is_negative(&self) -> bool {
        self.0.iter().all(|&k| k <= 0) && self.0.iter().any(|&k| k < 0)
    }

    pub fn neg(&self) -> RootVec {
        RootVec(self.0.iter().map(|k| -k).collect())
    }
}

impl fmt::Display for RootVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// A validated symmetrizable generalized Cartan matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CartanData {
    name: Option<String>,
    matrix: Matrix,
    symmetrizer: Vec<i64>,
    finite_type: bool,
}

/// Built-in preset names accepted by [`CartanData::preset`].
pub const PRESETS: &[&str] = &["A1", "A2", "A3", "B2", "G2", "A1~", "A2~"];

impl CartanData {
    /// Validates `matrix` as a symmetrizable GCM and computes its symmetrizer.
    pub fn validate_gcm(rows: &[Vec<i64>]) -> Result<Self> {
        Self::validate_named(None, rows)
    }

    pub fn validate_named(name: Option<String>, rows: &[Vec<i64>]) -> Result<Self> {
        let l = rows.len();
        if l == 0 {
            return Err(Error::NotGcm("empty matrix".into()));
        }
        if let Some(bad) = rows.iter().position(|r| r.len() != l) {
            return Err(Error::NotGcm(format!("row {} has length {}, expected {l}", bad + 1, rows[bad].len())));
        }
        for i in 0..l {
            if rows[i][i] != 2 {
                return Err(Error::NotGcm(format!("diagonal entry a{0}{0} = {1} != 2", i + 1, rows[i][i])));
            }
            for j in 0..l {
                if i == j {
                    continue;
                }
                if rows[i][j] > 0 {
                    return Err(Error::NotGcm(format!(
                        "positive off-diagonal entry a{}{} = {}",
                        i + 1,
                        j + 1,
                        rows[i][j]
                    )));
                }
                if (rows[i][j] == 0) != (rows[j][i] == 0) {
                    return Err(Error::NotGcm(format!(
                        "zero pattern asymmetric at a{0}{1} = {2}, a{1}{0} = {3}",
                        i + 1,
                        j + 1,
                        rows[i][j],
                        rows[j][i]
                    )));
                }
            }
        }
        let symmetrizer = symmetrizer(rows)?;
        let matrix = Matrix::from_rows(rows);
        let finite_type = positive_definite(rows, &symmetrizer);
        Ok(CartanData { name, matrix, symmetrizer, finite_type })
    }

    /// Looks up a built-in matrix by name.
    pub fn preset(name: &str) -> Result<Self> {
        let rows: Vec<Vec<i64>> = match name {
            "A1" => vec![vec![2]],
            "A2" => vec![vec![2, -1], vec![-1, 2]],
            "A3" => vec![vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 2]],
            "B2" => vec![vec![2, -1], vec![-2, 2]],
            "G2" => vec![vec![2, -1], vec![-3, 2]],
            "A1~" => vec![vec![2, -2], vec![-2, 2]],
            "A2~" => vec![vec![2, -1, -1], vec![-1, 2, -1], vec![-1, -1, 2]],
            _ => return Err(Error::UnknownGcm(name.to_string())),
        };
        Self::validate_named(Some(name.to_string()), &rows)
    }

    pub fn rank(&self) -> usize {
        self.matrix.dim()
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    #[inline]
    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.matrix.get(i, j)
    }

    /// Normalized symmetrizer: smallest positive integers (per connected
    /// component) with `d_i a_ij = d_j a_ji`.
    pub fn symmetrizer(&self) -> &[i64] {
        &self.symmetrizer
    }

    /// True when the symmetrized matrix is positive definite, i.e. the Weyl
    /// group is finite.
    pub fn is_finite_type(&self) -> bool {
        self.finite_type
    }

    /// True when `det A != 0`. Only then do pairing coordinates determine a
    /// weight; for affine matrices they forget multiples of the null root,
    /// so distinct weights of a character can collapse to one coordinate.
    pub fn is_nondegenerate(&self) -> bool {
        let rows: Vec<Vec<i128>> = self.rows().iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
        determinant(&rows) != 0
    }

    pub fn check_index(&self, i: usize) -> Result<()> {
        if i < self.rank() {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange { index: i, rank: self.rank() })
        }
    }

    pub fn check_rank(&self, len: usize) -> Result<()> {
        if len == self.rank() {
            Ok(())
        } else {
            Err(Error::RankMismatch { expected: self.rank(), got: len })
        }
    }

    /// `<beta, alpha_j^vee>` computed from root coordinates.
    pub fn coroot_pairing(&self, beta: &RootVec, j: usize) -> Result<i64> {
        self.check_index(j)?;
        self.check_rank(beta.0.len())?;
        Ok(self.pairing_unchecked(beta, j))
    }

    #[inline]
    pub(crate) fn pairing_unchecked(&self, beta: &RootVec, j: usize) -> i64 {
        beta.0.iter().enumerate().map(|(i, k)| k * self.entry(j, i)).sum()
    }

    /// Invariant form on the root lattice, `(alpha_i, alpha_j) = d_i a_ij`.
    pub fn form(&self, x: &RootVec, y: &RootVec) -> i64 {
        let l = self.rank();
        let mut total = 0;
        for i in 0..l {
            for j in 0..l {
                total += x.0[i] * y.0[j] * self.symmetrizer[i] * self.entry(i, j);
            }
        }
        total
    }

    /// The pairing `2 (beta, alpha_j) / (alpha_j, alpha_j)` evaluated through
    /// the symmetrized form, as an exact rational.
    pub fn pairing_via_form(&self, beta: &RootVec, j: usize) -> Rational {
        let simple = RootVec::simple(self.rank(), j);
        Rational::new(2 * self.form(beta, &simple) as i128, self.form(&simple, &simple) as i128)
    }

    /// Pairing coordinates of a root-lattice vector.
    pub fn root_to_weight(&self, beta: &RootVec) -> WeightVec {
        WeightVec((0..self.rank()).map(|j| self.pairing_unchecked(beta, j)).collect())
    }

    /// Simple-root coordinates of a weight, if the matrix is invertible.
    pub fn weight_to_root_coords(&self, mu: &WeightVec) -> Option<Vec<Rational>> {
        crate::linalg::solve(&self.matrix, &mu.0)
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.matrix.rows()
    }
}

/// Propagates `d_j = d_i a_ij / a_ji` over each connected component and
/// checks every edge for consistency.
fn symmetrizer(rows: &[Vec<i64>]) -> Result<Vec<i64>> {
    let l = rows.len();
    let mut d: Vec<Option<Rational>> = vec![None; l];
    let mut result = vec![0i64; l];
    for start in 0..l {
        if d[start].is_some() {
            continue;
        }
        let mut component = vec![start];
        d[start] = Some(Rational::from(1));
        let mut queue = VecDeque::from([start]);
        while let Some(i) = queue.pop_front() {
            let di = d[i].unwrap();
            for j in 0..l {
                if j == i || rows[i][j] == 0 {
                    continue;
                }
                let dj = di * Rational::new(rows[i][j] as i128, rows[j][i] as i128);
                match d[j] {
                    None => {
                        d[j] = Some(dj);
                        component.push(j);
                        queue.push_back(j);
                    }
                    Some(existing) if existing != dj => {
                        return Err(Error::NotSymmetrizable(format!(
                            "d{0} a{0}{1} != d{1} a{1}{0} around the cycle through nodes {0} and {1}",
                            i + 1,
                            j + 1
                        )));
                    }
                    Some(_) => {}
                }
            }
        }
        let lcm = component.iter().fold(1i128, |acc, &i| acc.lcm(d[i].unwrap().denom()));
        let ints: Vec<i128> = component.iter().map(|&i| (d[i].unwrap() * Rational::from(lcm)).to_integer()).collect();
        let g = ints.iter().fold(0i128, |acc, &x| acc.gcd(&x));
        for (&i, v) in component.iter().zip(ints) {
            result[i] = (v / g) as i64;
        }
    }
    Ok(result)
}

/// Sylvester's criterion on `diag(d) A`.
fn positive_definite(rows: &[Vec<i64>], d: &[i64]) -> bool {
    let l = rows.len();
    (1..=l).all(|k| {
        let minor: Vec<Vec<i128>> = (0..k).map(|i| (0..k).map(|j| (d[i] * rows[i][j]) as i128).collect()).collect();
        determinant(&minor) > 0
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validates_a2() {
        let c = CartanData::validate_gcm(&[vec![2, -1], vec![-1, 2]]).unwrap();
        assert_eq!(c.symmetrizer(), &[1, 1]);
        assert!(c.is_finite_type());
    }

    #[test]
    fn rejects_asymmetric_zero_pattern() {
        let err = CartanData::validate_gcm(&[vec![2, -1], vec![0, 2]]).unwrap_err();
        assert!(matches!(err, Error::NotGcm(_)));
    }

    #[test]
    fn rejects_bad_diagonal_and_positive_entries() {
        assert!(matches!(CartanData::validate_gcm(&[vec![1, -1], vec![-1, 2]]), Err(Error::NotGcm(_))));
        assert!(matches!(CartanData::validate_gcm(&[vec![2, 1], vec![-1, 2]]), Err(Error::NotGcm(_))));
        assert!(matches!(CartanData::validate_gcm(&[vec![2, -1]]), Err(Error::NotGcm(_))));
    }

    #[test]
    fn rejects_cycle_obstruction() {
        // a12 a23 a31 = -1 but a21 a32 a13 = -8
        let rows = vec![vec![2, -1, -2], vec![-2, 2, -1], vec![-1, -2, 2]];
        let err = CartanData::validate_gcm(&rows).unwrap_err();
        assert!(matches!(err, Error::NotSymmetrizable(_)));
        // No positive diagonal solves the linear system either: d2 = d1/2
        // and d3 = 2 d1 force d2 a23 = -d1/2 while d3 a32 = -4 d1.
        let d = [Rational::from(1), Rational::new(1, 2), Rational::from(2)];
        assert_ne!(d[1] * Rational::from(-1), d[2] * Rational::from(-2));
    }

    #[test]
    fn symmetrizers_of_presets() {
        assert_eq!(CartanData::preset("B2").unwrap().symmetrizer(), &[2, 1]);
        assert_eq!(CartanData::preset("G2").unwrap().symmetrizer(), &[3, 1]);
        assert_eq!(CartanData::preset("A1~").unwrap().symmetrizer(), &[1, 1]);
        for name in PRESETS {
            let c = CartanData::preset(name).unwrap();
            let d = c.symmetrizer();
            for i in 0..c.rank() {
                for j in 0..c.rank() {
                    assert_eq!(d[i] * c.entry(i, j), d[j] * c.entry(j, i), "{name}");
                }
            }
        }
    }

    #[test]
    fn disconnected_components_normalize_independently() {
        let rows = vec![vec![2, -1, 0, 0], vec![-2, 2, 0, 0], vec![0, 0, 2, -3], vec![0, 0, -1, 2]];
        let c = CartanData::validate_gcm(&rows).unwrap();
        assert_eq!(c.symmetrizer(), &[2, 1, 1, 3]);
        assert!(c.is_finite_type());
    }

    #[test]
    fn finite_type_detection() {
        for (name, finite) in
            [("A1", true), ("A2", true), ("A3", true), ("B2", true), ("G2", true), ("A1~", false), ("A2~", false)]
        {
            assert_eq!(CartanData::preset(name).unwrap().is_finite_type(), finite, "{name}");
        }
        let hyperbolic = CartanData::validate_gcm(&[vec![2, -3], vec![-3, 2]]).unwrap();
        assert!(!hyperbolic.is_finite_type());
        assert!(hyperbolic.is_nondegenerate());
    }

    #[test]
    fn affine_matrices_are_degenerate() {
        assert!(!CartanData::preset("A1~").unwrap().is_nondegenerate());
        assert!(!CartanData::preset("A2~").unwrap().is_nondegenerate());
        assert!(CartanData::preset("G2").unwrap().is_nondegenerate());
    }

    #[test]
    fn coroot_pairing_examples() {
        let a2 = CartanData::preset("A2").unwrap();
        assert_eq!(a2.coroot_pairing(&RootVec(vec![1, 0]), 0).unwrap(), 2);
        assert_eq!(a2.coroot_pairing(&RootVec(vec![1, 1]), 0).unwrap(), 1);
        assert_eq!(a2.pairing_via_form(&RootVec(vec![1, 1]), 0), Rational::from(1));
        let aff = CartanData::preset("A1~").unwrap();
        assert_eq!(aff.coroot_pairing(&RootVec(vec![0, 1]), 0).unwrap(), -2);
        assert!(matches!(a2.coroot_pairing(&RootVec(vec![1, 0]), 2), Err(Error::IndexOutOfRange { .. })));
    }

    #[test]
    fn revalidation_is_idempotent() {
        for name in PRESETS {
            let c = CartanData::preset(name).unwrap();
            let again = CartanData::validate_named(Some(name.to_string()), &c.rows()).unwrap();
            assert_eq!(c, again);
        }
    }
}
