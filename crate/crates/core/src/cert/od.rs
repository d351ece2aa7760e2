//! Real orthogonal designs `OD(n; 1, ..., 1)` for `n = 4, 8`.
//!
//! A design is an `n x n` pattern whose entries are signed variables
//! `+-x_i`. Substituting a real vector gives a matrix `V(x)` with
//! `V(x) V(x)^T = |x|^2 I`. Every column is a fixed signed permutation of `x`,
//! so matching columns of `V(x)` and `V(y)` have inner product `<x, y>`.

use std::collections::HashMap;
use std::sync::OnceLock;

/// One entry: variable index and sign.
pub type Term = (usize, i8);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrthogonalDesign {
    rows: Vec<Vec<Term>>,
}

impl OrthogonalDesign {
    pub fn order(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<Term>] {
        &self.rows
    }

    /// `V(x)`; `x.len()` must equal the order.
    pub fn instantiate(&self, x: &[f64]) -> Vec<Vec<f64>> {
        assert_eq!(x.len(), self.order(), "vector length must equal design order");
        self.rows
            .iter()
            .map(|row| row.iter().map(|&(i, s)| f64::from(s) * x[i]).collect())
            .collect()
    }

    /// Symbolic check: every row and column uses each variable exactly once,
    /// and for distinct rows all cross terms `x_a x_b` cancel, so
    /// `V V^T = (sum x_i^2) I` as a polynomial identity.
    pub fn is_orthogonal_design(&self) -> bool {
        let n = self.order();
        let permutation = |vars: Vec<usize>| {
            let mut seen = vec![false; n];
            vars.into_iter()
                .all(|i| i < n && !std::mem::replace(&mut seen[i], true))
        };
        if self
            .rows
            .iter()
            .any(|r| r.len() != n || !permutation(r.iter().map(|t| t.0).collect()))
        {
            return false;
        }
        if !(0..n).all(|j| permutation(self.rows.iter().map(|r| r[j].0).collect())) {
            return false;
        }
        for i in 0..n {
            for k in i + 1..n {
                let mut coeffs: HashMap<(usize, usize), i32> = HashMap::new();
                for j in 0..n {
                    let (a, sa) = self.rows[i][j];
                    let (b, sb) = self.rows[k][j];
                    *coeffs.entry((a.min(b), a.max(b))).or_default() += i32::from(sa * sb);
                }
                if coeffs.values().any(|&c| c != 0) {
                    return false;
                }
            }
        }
        true
    }
}

/// The quaternion-type pattern
/// ```text
///  x1  x2  x3  x4
/// -x2  x1 -x4  x3
/// -x3  x4  x1 -x2
/// -x4 -x3  x2  x1
/// ```
pub fn od4() -> &'static OrthogonalDesign {
    static OD4: OnceLock<OrthogonalDesign> = OnceLock::new();
    OD4.get_or_init(|| {
        let d = OrthogonalDesign {
            rows: vec![
                vec![(0, 1), (1, 1), (2, 1), (3, 1)],
                vec![(1, -1), (0, 1), (3, -1), (2, 1)],
                vec![(2, -1), (3, 1), (0, 1), (1, -1)],
                vec![(3, -1), (2, -1), (1, 1), (0, 1)],
            ],
        };
        assert!(d.is_orthogonal_design(), "OD(4) pattern failed verification");
        d
    })
}

/// Imaginary octonion units multiply as `e_i e_j = e_k` along these oriented
/// lines of the Fano plane (and `e_j e_i = -e_k`).
const FANO: [[usize; 3]; 7] = [
    [1, 2, 3],
    [1, 4, 5],
    [1, 7, 6],
    [2, 4, 6],
    [2, 5, 7],
    [3, 4, 7],
    [3, 6, 5],
];

/// `e_i e_j = sign * e_k`, returned as `(k, sign)`.
fn octonion_product(i: usize, j: usize) -> (usize, i8) {
    match (i, j) {
        (0, j) => (j, 1),
        (i, 0) => (i, 1),
        (i, j) if i == j => (0, -1),
        (i, j) => {
            for line in FANO {
                for r in 0..3 {
                    let (a, b, c) = (line[r], line[(r + 1) % 3], line[(r + 2) % 3]);
                    if (a, b) == (i, j) {
                        return (c, 1);
                    }
                    if (b, a) == (i, j) {
                        return (c, -1);
                    }
                }
            }
            unreachable!("every pair of distinct imaginary units lies on a Fano line")
        }
    }
}

/// Left multiplication by an octonion: column `j` holds the coordinates of `x e_j`.
pub fn od8() -> &'static OrthogonalDesign {
    static OD8: OnceLock<OrthogonalDesign> = OnceLock::new();
    OD8.get_or_init(|| {
        let mut rows = vec![vec![(0, 0); 8]; 8];
        #[allow(clippy::needless_range_loop)]
        for i in 0..8 {
            for j in 0..8 {
                let (k, s) = octonion_product(i, j);
                rows[k][j] = (i, s);
            }
        }
        let d = OrthogonalDesign { rows };
        assert!(
            d.is_orthogonal_design(),
            "octonion table failed orthogonal-design verification"
        );
        d
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gram(m: &[Vec<f64>]) -> Vec<Vec<f64>> {
        let n = m.len();
        (0..n)
            .map(|i| (0..n).map(|k| (0..n).map(|j| m[i][j] * m[k][j]).sum()).collect())
            .collect()
    }

    #[test]
    fn designs_verify_symbolically_and_numerically() {
        for (d, x) in [
            (od4(), vec![0.3, -1.2, 2.0, 0.7]),
            (od8(), vec![0.3, -1.2, 2.0, 0.7, -0.1, 1.5, 0.9, -2.2]),
        ] {
            assert!(d.is_orthogonal_design());
            let norm2: f64 = x.iter().map(|v| v * v).sum();
            let g = gram(&d.instantiate(&x));
            for (i, row) in g.iter().enumerate() {
                for (k, &val) in row.iter().enumerate() {
                    let expect = if i == k { norm2 } else { 0.0 };
                    assert!((val - expect).abs() < 1e-12);
                }
            }
        }
    }

    #[test]
    fn od4_first_basis_vector_gives_identity() {
        let v = od4().instantiate(&[1.0, 0.0, 0.0, 0.0]);
        for (i, row) in v.iter().enumerate() {
            for (j, &e) in row.iter().enumerate() {
                assert_eq!(e, if i == j { 1.0 } else { 0.0 });
            }
        }
        assert_eq!(od4().rows()[1][0], (1, -1));
    }

    #[test]
    fn broken_patterns_are_rejected() {
        let mut rows = od4().rows().to_vec();
        rows[3][3].1 = -1;
        assert!(!OrthogonalDesign { rows }.is_orthogonal_design());
        let mut rows = od4().rows().to_vec();
        rows[0][1] = (0, 1);
        assert!(!OrthogonalDesign { rows }.is_orthogonal_design());
    }

    #[test]
    fn octonion_units_anticommute() {
        for i in 1..8 {
            for j in 1..8 {
                if i != j {
                    let (k1, s1) = octonion_product(i, j);
                    let (k2, s2) = octonion_product(j, i);
                    assert_eq!((k1, s1), (k2, -s2));
                }
            }
        }
    }
}
