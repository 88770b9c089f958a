//! Small exact linear algebra: square integer matrices, fraction-free
//! determinants, rational solves and a convex-hull membership test.

use num_rational::Ratio;

pub type Rational = Ratio<i128>;

/// Dense square integer matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    n: usize,
    data: Vec<i64>,
}

impl Matrix {
    pub fn zeros(n: usize) -> Self {
        Matrix { n, data: vec![0; n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * n);
        for row in rows {
            assert_eq!(row.len(), n, "matrix must be square");
            data.extend_from_slice(row);
        }
        Matrix { n, data }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.n + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: i64) {
        self.data[i * self.n + j] = v;
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.data.chunks(self.n).map(|r| r.to_vec()).collect()
    }

    pub fn column(&self, j: usize) -> Vec<i64> {
        (0..self.n).map(|i| self.get(i, j)).collect()
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        let n = self.n;
        let mut out = Matrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    out.data[i * n + j] += a * other.get(k, j);
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[i64]) -> Vec<i64> {
        (0..self.n).map(|i| (0..self.n).map(|j| self.get(i, j) * v[j]).sum()).collect()
    }

    pub fn is_identity(&self) -> bool {
        *self == Matrix::identity(self.n)
    }
}

/// Determinant by Bareiss fraction-free elimination.
pub fn determinant(rows: &[Vec<i128>]) -> i128 {
    let n = rows.len();
    if n == 0 {
        return 1;
    }
    let mut m: Vec<Vec<i128>> = rows.to_vec();
    let mut sign = 1;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if m[k][k] == 0 {
            match (k + 1..n).find(|&r| m[r][k] != 0) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    sign * m[n - 1][n - 1]
}

/// Solves `a x = b` exactly. Returns `None` if `a` is singular.
pub fn solve(a: &Matrix, b: &[i64]) -> Option<Vec<Rational>> {
    let n = a.dim();
    let mut m: Vec<Vec<Rational>> = (0..n)
        .map(|i| {
            let mut row: Vec<Rational> = (0..n).map(|j| Rational::from(a.get(i, j) as i128)).collect();
            row.push(Rational::from(b[i] as i128));
            row
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| m[r][col] != Rational::from(0))?;
        m.swap(col, pivot);
        let p = m[col][col];
        for entry in m[col].iter_mut() {
            *entry /= p;
        }
        for r in 0..n {
            if r != col && m[r][col] != Rational::from(0) {
                let f = m[r][col];
                for c in col..=n {
                    let sub = f * m[col][c];
                    m[r][c] -= sub;
                }
            }
        }
    }
    Some(m.into_iter().map(|row| row[n]).collect())
}

/// Exact test whether `target` lies in the convex hull of `points`.
///
/// Runs phase one of the simplex method with Bland's rule on
/// `sum t_k p_k = target, sum t_k = 1, t >= 0`.
pub fn in_convex_hull(points: &[Vec<i64>], target: &[i64]) -> bool {
    if points.is_empty() {
        return false;
    }
    let dim = target.len();
    let zero = Rational::from(0);
    let one = Rational::from(1);
    let rows = dim + 1;
    let vars = points.len();
    // Tableau columns: point weights, then one artificial per row, then rhs.
    let cols = vars + rows + 1;
    let mut tab = vec![vec![zero; cols]; rows];
    for r in 0..rows {
        let (coeffs, rhs): (Vec<Rational>, Rational) = if r < dim {
            (points.iter().map(|p| Rational::from(p[r] as i128)).collect(), Rational::from(target[r] as i128))
        } else {
            (vec![one; vars], one)
        };
        let flip = rhs < zero;
        for (k, c) in coeffs.into_iter().enumerate() {
            tab[r][k] = if flip { -c } else { c };
        }
        tab[r][vars + r] = one;
        tab[r][cols - 1] = if flip { -rhs } else { rhs };
    }
    let mut basis: Vec<usize> = (0..rows).map(|r| vars + r).collect();
    // Phase-one objective: minimize the sum of artificials.
    loop {
        let reduced = |j: usize, tab: &Vec<Vec<Rational>>, basis: &Vec<usize>| -> Rational {
            let cost = |k: usize| if k >= vars { one } else { zero };
            let mut z = cost(j);
            for r in 0..rows {
                z -= cost(basis[r]) * tab[r][j];
            }
            z
        };
        let entering = (0..vars + rows).find(|&j| !basis.contains(&j) && reduced(j, &tab, &basis) < zero);
        let Some(e) = entering else { break };
        let mut leave: Option<(usize, Rational)> = None;
        for r in 0..rows {
            if tab[r][e] > zero {
                let ratio = tab[r][cols - 1] / tab[r][e];
                let better = match leave {
                    None => true,
                    Some((lr, best)) => ratio < best || (ratio == best && basis[r] < basis[lr]),
                };
                if better {
                    leave = Some((r, ratio));
                }
            }
        }
        let Some((lr, _)) = leave else { break };
        let p = tab[lr][e];
        for c in 0..cols {
            tab[lr][c] /= p;
        }
        for r in 0..rows {
            if r != lr && tab[r][e] != zero {
                let f = tab[r][e];
                for c in 0..cols {
                    let sub = f * tab[lr][c];
                    tab[r][c] -= sub;
                }
            }
        }
        basis[lr] = e;
    }
    (0..rows).all(|r| basis[r] < vars || tab[r][cols - 1] == zero)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn determinant_small() {
        assert_eq!(determinant(&[vec![2, -1], vec![-1, 2]]), 3);
        assert_eq!(determinant(&[vec![2, -2], vec![-2, 2]]), 0);
        assert_eq!(determinant(&[vec![0, 1], vec![1, 0]]), -1);
        let a3 = vec![vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 2]];
        assert_eq!(determinant(&a3), 4);
    }

    #[test]
    fn solve_cartan_a2() {
        let a = Matrix::from_rows(&[vec![2, -1], vec![-1, 2]]);
        let x = solve(&a, &[1, 0]).unwrap();
        assert_eq!(x, vec![Rational::new(2, 3), Rational::new(1, 3)]);
        let affine = Matrix::from_rows(&[vec![2, -2], vec![-2, 2]]);
        assert!(solve(&affine, &[1, 0]).is_none());
    }

    #[test]
    fn hull_membership() {
        let square = vec![vec![0, 0], vec![2, 0], vec![0, 2], vec![2, 2]];
        assert!(in_convex_hull(&square, &[1, 1]));
        assert!(in_convex_hull(&square, &[2, 2]));
        assert!(in_convex_hull(&square, &[0, 1]));
        assert!(!in_convex_hull(&square, &[3, 1]));
        assert!(!in_convex_hull(&square, &[-1, 0]));
        let segment = vec![vec![-3, 5], vec![1, 3]];
        assert!(in_convex_hull(&segment, &[-1, 4]));
        assert!(!in_convex_hull(&segment, &[-1, 5]));
    }
}
