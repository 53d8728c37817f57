//! Signed adjacency matrices and their spectra.
//!
//! Eigenpairs come from cyclic Jacobi rotations. The matrices here are
//! dense and small (tens of rows), where Jacobi is accurate and simple.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::signed::SignedCompleteGraph;

/// Stop once the off-diagonal Frobenius norm is below this fraction of ‖A‖_F.
pub const JACOBI_REL_TOL: f64 = 1e-12;
pub const JACOBI_MAX_SWEEPS: usize = 100;
/// λ₁ − λ₂ at or below this is reported as a repeated top eigenvalue.
pub const MULTIPLICITY_TOL: f64 = 1e-9;
/// Entry sums within this of zero fall back to the largest-entry sign rule.
const SIGN_SUM_TOL: f64 = 1e-12;

/// Dense square matrix in row-major order.
#[derive(Debug, Clone, PartialEq)]
pub struct SymMatrix {
    n: usize,
    data: Vec<f64>,
}

impl SymMatrix {
    pub fn zeros(n: usize) -> Self {
        SymMatrix {
            n,
            data: vec![0.0; n * n],
        }
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::MalformedInput(format!(
                    "row {i} has {} entries, expected {n}",
                    row.len()
                )));
            }
            data.extend_from_slice(row);
        }
        Ok(SymMatrix { n, data })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    /// Sets both `(i, j)` and `(j, i)`.
    #[inline]
    pub fn set_sym(&mut self, i: usize, j: usize, value: f64) {
        self.data[i * self.n + j] = value;
        self.data[j * self.n + i] = value;
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    /// First `(i, j)` with `a_ij != a_ji`, if any.
    pub fn asymmetry(&self) -> Option<(usize, usize)> {
        (0..self.n)
            .flat_map(|i| (i + 1..self.n).map(move |j| (i, j)))
            .find(|&(i, j)| self.get(i, j) != self.get(j, i))
    }

    pub fn frobenius_norm(&self) -> f64 {
        libm::sqrt(self.data.iter().map(|x| x * x).sum())
    }

    pub fn trace(&self) -> f64 {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }

    pub fn mul_vec(&self, x: &[f64]) -> Vec<f64> {
        assert_eq!(x.len(), self.n, "dimension mismatch");
        (0..self.n)
            .map(|i| self.row(i).iter().zip(x).map(|(a, b)| a * b).sum())
            .collect()
    }

    /// ‖A·x − λ·x‖₂.
    pub fn residual(&self, lambda: f64, x: &[f64]) -> f64 {
        let ax = self.mul_vec(x);
        libm::sqrt(
            ax.iter()
                .zip(x)
                .map(|(a, b)| (a - lambda * b) * (a - lambda * b))
                .sum(),
        )
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    /// Eigenvalues, descending.
    pub values: Vec<f64>,
    /// `vectors[i]` is a unit eigenvector for `values[i]`; the set is orthonormal.
    pub vectors: Option<Vec<Vec<f64>>>,
    /// Off-diagonal Frobenius norm left when the iteration stopped.
    pub off_norm: f64,
    pub sweeps: usize,
}

impl Spectrum {
    pub fn n(&self) -> usize {
        self.values.len()
    }

    pub fn lambda1(&self) -> f64 {
        self.values[0]
    }

    pub fn lambda_n(&self) -> f64 {
        self.values[self.values.len() - 1]
    }

    /// `max(λ₁, −λ_n)`.
    pub fn radius(&self) -> f64 {
        self.lambda1().max(-self.lambda_n())
    }
}

/// `A(Σ)`: `σ(ij)` off the diagonal, zero on it.
pub fn adjacency_matrix(g: &SignedCompleteGraph) -> SymMatrix {
    let n = g.n();
    SymMatrix {
        n,
        data: g.sign_matrix().into_iter().map(f64::from).collect(),
    }
}

fn off_diagonal_norm(a: &[f64], n: usize) -> f64 {
    let mut sum = 0.0;
    for p in 0..n {
        for q in p + 1..n {
            sum += a[p * n + q] * a[p * n + q];
        }
    }
    libm::sqrt(2.0 * sum)
}

pub fn eigen_decompose(m: &SymMatrix, want_vectors: bool) -> Result<Spectrum> {
    if let Some((row, col)) = m.asymmetry() {
        return Err(Error::NotSymmetric { row, col });
    }
    let n = m.n;
    let mut a = m.data.clone();
    let mut v = if want_vectors {
        let mut id = vec![0.0; n * n];
        for i in 0..n {
            id[i * n + i] = 1.0;
        }
        Some(id)
    } else {
        None
    };
    let threshold = JACOBI_REL_TOL * m.frobenius_norm();
    let mut sweeps = 0;
    let mut off = off_diagonal_norm(&a, n);
    while off > threshold {
        if sweeps == JACOBI_MAX_SWEEPS {
            return Err(Error::NoConvergence {
                sweeps,
                off_norm: off,
            });
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let app = a[p * n + p];
                let aqq = a[q * n + q];
                let theta = (aqq - app) / (2.0 * apq);
                let t = if theta.is_finite() {
                    let t = 1.0 / (theta.abs() + libm::sqrt(1.0 + theta * theta));
                    if theta < 0.0 {
                        -t
                    } else {
                        t
                    }
                } else {
                    // |theta| overflowed: t ≈ 1/(2θ)
                    0.5 / theta
                };
                let c = 1.0 / libm::sqrt(1.0 + t * t);
                let s = t * c;
                for k in 0..n {
                    if k == p || k == q {
                        continue;
                    }
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    let new_kp = c * akp - s * akq;
                    let new_kq = s * akp + c * akq;
                    a[k * n + p] = new_kp;
                    a[p * n + k] = new_kp;
                    a[k * n + q] = new_kq;
                    a[q * n + k] = new_kq;
                }
                a[p * n + p] = app - t * apq;
                a[q * n + q] = aqq + t * apq;
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
                if let Some(v) = v.as_mut() {
                    for k in 0..n {
                        let vkp = v[k * n + p];
                        let vkq = v[k * n + q];
                        v[k * n + p] = c * vkp - s * vkq;
                        v[k * n + q] = s * vkp + c * vkq;
                    }
                }
            }
        }
        sweeps += 1;
        off = off_diagonal_norm(&a, n);
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[j * n + j].total_cmp(&a[i * n + i]).then(i.cmp(&j)));
    let values = order.iter().map(|&i| a[i * n + i]).collect();
    let vectors = v.map(|v| {
        order
            .iter()
            .map(|&col| (0..n).map(|row| v[row * n + col]).collect())
            .collect()
    });
    Ok(Spectrum {
        values,
        vectors,
        off_norm: off,
        sweeps,
    })
}

/// Full spectrum of `A(Σ)` with eigenvectors.
pub fn spectrum(g: &SignedCompleteGraph) -> Result<Spectrum> {
    eigen_decompose(&adjacency_matrix(g), true)
}

fn eigenvalues(g: &SignedCompleteGraph) -> Result<Vec<f64>> {
    Ok(eigen_decompose(&adjacency_matrix(g), false)?.values)
}

/// λ₁, the largest eigenvalue of `A(Σ)`.
pub fn index(g: &SignedCompleteGraph) -> Result<f64> {
    Ok(eigenvalues(g)?[0])
}

pub fn least_eigenvalue(g: &SignedCompleteGraph) -> Result<f64> {
    Ok(*eigenvalues(g)?.last().expect("n >= 1"))
}

pub fn spectral_radius(g: &SignedCompleteGraph) -> Result<f64> {
    let vals = eigenvalues(g)?;
    Ok(vals[0].max(-vals[vals.len() - 1]))
}

/// Unit eigenvector for λ₁ with a fixed sign convention.
#[derive(Debug, Clone, PartialEq)]
pub struct TopEigenvector {
    pub lambda1: f64,
    /// λ₂, absent when `n = 1`.
    pub lambda2: Option<f64>,
    pub vector: Vec<f64>,
    /// λ₁ − λ₂ ≤ [`MULTIPLICITY_TOL`]: the eigenvector is one of many.
    pub degenerate: bool,
}

impl TopEigenvector {
    pub fn gap(&self) -> Option<f64> {
        self.lambda2.map(|l2| self.lambda1 - l2)
    }
}

/// Entry sum made non-negative; if the sum is zero, the largest-magnitude
/// entry (lowest index on ties) made positive.
pub fn normalize_sign(x: &mut [f64]) {
    let sum: f64 = x.iter().sum();
    let flip = if sum.abs() > SIGN_SUM_TOL {
        sum < 0.0
    } else {
        let mut best = 0;
        for (i, xi) in x.iter().enumerate() {
            if xi.abs() > x[best].abs() {
                best = i;
            }
        }
        x.get(best).is_some_and(|&b| b < 0.0)
    };
    if flip {
        for xi in x.iter_mut() {
            *xi = -*xi;
        }
    }
}

pub fn top_eigenvector(g: &SignedCompleteGraph) -> Result<TopEigenvector> {
    let spec = spectrum(g)?;
    let mut vector = spec.vectors.expect("requested")[0].clone();
    normalize_sign(&mut vector);
    let lambda1 = spec.values[0];
    let lambda2 = spec.values.get(1).copied();
    Ok(TopEigenvector {
        lambda1,
        lambda2,
        vector,
        degenerate: lambda2.is_some_and(|l2| lambda1 - l2 <= MULTIPLICITY_TOL),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tree::Tree;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    #[test]
    fn adjacency_of_small_star() {
        let g = SignedCompleteGraph::from_tree(&Tree::star(3).unwrap());
        let a = adjacency_matrix(&g);
        let rows: Vec<Vec<f64>> = (0..3).map(|i| a.row(i).to_vec()).collect();
        assert_eq!(
            rows,
            vec![
                vec![0.0, -1.0, -1.0],
                vec![-1.0, 0.0, 1.0],
                vec![-1.0, 1.0, 0.0]
            ]
        );
    }

    #[test]
    fn adjacency_of_p4() {
        let g = SignedCompleteGraph::from_tree(&Tree::path(4).unwrap());
        let a = adjacency_matrix(&g);
        for (i, j, s) in [(0, 1, -1.0), (1, 2, -1.0), (2, 3, -1.0), (0, 2, 1.0), (0, 3, 1.0), (1, 3, 1.0)] {
            assert_eq!(a.get(i, j), s);
            assert_eq!(a.get(j, i), s);
        }
        assert_eq!(a.trace(), 0.0);
    }

    #[test]
    fn zero_matrix() {
        let spec = eigen_decompose(&SymMatrix::zeros(4), true).unwrap();
        assert_eq!(spec.values, vec![0.0; 4]);
        assert_eq!(spec.sweeps, 0);
    }

    #[test]
    fn rejects_asymmetric_input() {
        let m = SymMatrix::from_rows(&[vec![0.0, 1.0], vec![2.0, 0.0]]).unwrap();
        assert_eq!(
            eigen_decompose(&m, false),
            Err(Error::NotSymmetric { row: 0, col: 1 })
        );
        assert!(SymMatrix::from_rows(&[vec![0.0, 1.0], vec![2.0]]).is_err());
    }

    #[test]
    fn balanced_star_spectrum() {
        for n in 3..20 {
            let g = SignedCompleteGraph::from_tree(&Tree::star(n).unwrap());
            let spec = spectrum(&g).unwrap();
            assert!(close(spec.values[0], (n - 1) as f64, 1e-9));
            for &v in &spec.values[1..] {
                assert!(close(v, -1.0, 1e-9));
            }
        }
        let g = SignedCompleteGraph::from_tree(&Tree::star(6).unwrap());
        assert!(close(index(&g).unwrap(), 5.0, 1e-9));
        assert!(close(least_eigenvalue(&g).unwrap(), -1.0, 1e-9));
        assert!(close(spectral_radius(&g).unwrap(), 5.0, 1e-9));
    }

    #[test]
    fn balanced_star_top_eigenvector() {
        let n = 7;
        let g = SignedCompleteGraph::from_tree(&Tree::star(n).unwrap());
        let top = top_eigenvector(&g).unwrap();
        let mag = 1.0 / libm::sqrt(n as f64);
        assert!(close(top.vector[0], -mag, 1e-10));
        for &x in &top.vector[1..] {
            assert!(close(x, mag, 1e-10));
        }
        assert!(!top.degenerate);
    }

    #[test]
    fn negated_eigenvector_has_same_residual() {
        let g = SignedCompleteGraph::from_tree(&Tree::broom(9, 4).unwrap());
        let a = adjacency_matrix(&g);
        let top = top_eigenvector(&g).unwrap();
        let neg: Vec<f64> = top.vector.iter().map(|x| -x).collect();
        let r1 = a.residual(top.lambda1, &top.vector);
        let r2 = a.residual(top.lambda1, &neg);
        assert!(r1 <= 1e-8);
        assert!(close(r1, r2, 1e-15));
    }

    #[test]
    fn sign_convention() {
        let mut x = vec![-0.5, 0.1, -0.2];
        normalize_sign(&mut x);
        assert_eq!(x, vec![0.5, -0.1, 0.2]);
        let mut x = vec![0.3, -0.6, 0.3];
        normalize_sign(&mut x);
        assert_eq!(x, vec![-0.3, 0.6, -0.3]);
    }

    #[test]
    fn repeated_decomposition_is_bitwise_stable() {
        let g = SignedCompleteGraph::from_tree(&Tree::double_star(3, 4).unwrap());
        assert_eq!(spectrum(&g).unwrap(), spectrum(&g).unwrap());
    }
}
