//! Cyclic Jacobi eigensolver for dense real symmetric matrices.
//!
//! Each rotation annihilates one off-diagonal pair; sweeps visit every pair
//! `(p, q)` with `p < q` in row order. Rotations use Rutishauser's
//! formulation. The eigenvector matrix is accumulated so every returned pair
//! can be checked against the residual bound before it is handed out.

use crate::error::{Error, Result};
use crate::graphs::DenseMatrix;

/// Default largest dimension accepted by [`eigensolver_oracle`].
pub const DEFAULT_EIGEN_CAP: usize = 2000;

/// Convergence threshold on `‖offdiag(A)‖_F / ‖A‖_F`.
const OFFDIAG_TOLERANCE: f64 = 1e-12;

const MAX_SWEEPS: usize = 100;

/// Residual bound on `‖A v - λ v‖ / ‖A‖_F` for each returned pair.
pub const RESIDUAL_TOLERANCE: f64 = 1e-9;

/// Eigenvalues (descending) and the matching unit eigenvectors.
#[derive(Debug, Clone)]
pub struct SymmetricEigen {
    pub values: Vec<f64>,
    /// `vectors[i]` belongs to `values[i]`.
    pub vectors: Vec<Vec<f64>>,
    pub sweeps: usize,
    pub max_residual: f64,
}

fn check_symmetric(a: &DenseMatrix) -> Result<()> {
    let n = a.dim();
    for i in 0..n {
        for j in i + 1..n {
            if a.get(i, j) != a.get(j, i) {
                return Err(Error::NotSymmetric { row: i, col: j });
            }
        }
    }
    Ok(())
}

fn offdiag_norm(a: &[f64], n: usize) -> f64 {
    let mut s = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                s += a[i * n + j] * a[i * n + j];
            }
        }
    }
    s.sqrt()
}

/// Full symmetric eigendecomposition.
pub fn symmetric_eigen(matrix: &DenseMatrix, cap: usize) -> Result<SymmetricEigen> {
    let n = matrix.dim();
    if n > cap {
        return Err(Error::CapExceeded { what: "eigensolver input", size: n, cap });
    }
    check_symmetric(matrix)?;
    let norm = matrix.frobenius_norm();
    let mut a = matrix.clone();
    let a = a.as_mut_slice();
    // v is stored column-major by eigenvector: v[c * n + r]
    let mut v = vec![0.0; n * n];
    for i in 0..n {
        v[i * n + i] = 1.0;
    }

    // Entries below this contribute less than the stopping bound even all
    // together, so rotating them away buys nothing.
    let negligible = OFFDIAG_TOLERANCE * norm / n.max(1) as f64;
    let mut sweeps = 0;
    while offdiag_norm(a, n) > OFFDIAG_TOLERANCE * norm {
        if sweeps == MAX_SWEEPS {
            return Err(Error::NotConverged(format!(
                "off-diagonal norm {:e} after {MAX_SWEEPS} sweeps",
                offdiag_norm(a, n)
            )));
        }
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq.abs() < negligible {
                    continue;
                }
                let app = a[p * n + p];
                let aqq = a[q * n + q];
                let theta = (aqq - app) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;

                a[p * n + p] = app - t * apq;
                a[q * n + q] = aqq + t * apq;
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
                for r in 0..n {
                    if r == p || r == q {
                        continue;
                    }
                    let arp = a[r * n + p];
                    let arq = a[r * n + q];
                    let new_rp = c * arp - s * arq;
                    let new_rq = s * arp + c * arq;
                    a[r * n + p] = new_rp;
                    a[p * n + r] = new_rp;
                    a[r * n + q] = new_rq;
                    a[q * n + r] = new_rq;
                }
                let (vp, vq) = (p * n, q * n);
                for r in 0..n {
                    let x = v[vp + r];
                    let y = v[vq + r];
                    v[vp + r] = c * x - s * y;
                    v[vq + r] = s * x + c * y;
                }
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[j * n + j].total_cmp(&a[i * n + i]));
    let values: Vec<f64> = order.iter().map(|&i| a[i * n + i]).collect();
    let vectors: Vec<Vec<f64>> = order.iter().map(|&i| v[i * n..(i + 1) * n].to_vec()).collect();

    let original = matrix.as_slice();
    let mut max_residual: f64 = 0.0;
    for (lambda, x) in values.iter().zip(&vectors) {
        let mut r2 = 0.0;
        for row in 0..n {
            let ax: f64 = original[row * n..(row + 1) * n].iter().zip(x).map(|(m, y)| m * y).sum();
            let d = ax - lambda * x[row];
            r2 += d * d;
        }
        max_residual = max_residual.max(r2.sqrt());
    }
    if max_residual > RESIDUAL_TOLERANCE * norm {
        return Err(Error::NotConverged(format!("residual {max_residual:e} exceeds {RESIDUAL_TOLERANCE:e}·‖A‖")));
    }
    Ok(SymmetricEigen { values, vectors, sweeps, max_residual })
}

/// Eigenvalues of a dense symmetric matrix, sorted descending.
pub fn eigensolver_oracle(matrix: &DenseMatrix, cap: usize) -> Result<Vec<f64>> {
    symmetric_eigen(matrix, cap).map(|e| e.values)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{build_inclusion_graph, build_johnson_graph, GraphParams};

    #[test]
    fn one_by_one_zero() {
        let m = DenseMatrix::zeros(1);
        assert_eq!(eigensolver_oracle(&m, DEFAULT_EIGEN_CAP).unwrap(), vec![0.0]);
    }

    #[test]
    fn empty_matrix() {
        assert!(eigensolver_oracle(&DenseMatrix::zeros(0), 10).unwrap().is_empty());
    }

    #[test]
    fn complete_graph_k4() {
        let m = build_johnson_graph(4, 1, 0).unwrap().adjacency_matrix();
        let ev = eigensolver_oracle(&m, DEFAULT_EIGEN_CAP).unwrap();
        let expected = [3.0, -1.0, -1.0, -1.0];
        for (a, b) in ev.iter().zip(expected) {
            assert!((a - b).abs() < 1e-9, "{ev:?}");
        }
    }

    #[test]
    fn johnson_alpha_oracles() {
        // J(5,2,1) = triangular graph T(5): eigenvalues 6, 1 (x4), -2 (x5)
        let m = build_johnson_graph(5, 2, 1).unwrap().adjacency_matrix();
        let ev = eigensolver_oracle(&m, DEFAULT_EIGEN_CAP).unwrap();
        assert!((ev[0] - 6.0).abs() < 1e-9);
        assert!(ev[1..5].iter().all(|x| (x - 1.0).abs() < 1e-9));
        assert!(ev[5..].iter().all(|x| (x + 2.0).abs() < 1e-9));
    }

    #[test]
    fn desargues_type_graph() {
        let g = build_inclusion_graph(GraphParams::new(5, 2, 3).unwrap()).unwrap();
        let ev = eigensolver_oracle(&g.graph().adjacency_matrix(), DEFAULT_EIGEN_CAP).unwrap();
        let expected: Vec<f64> = [(3.0, 1), (2.0, 4), (1.0, 5), (-1.0, 5), (-2.0, 4), (-3.0, 1)]
            .iter()
            .flat_map(|&(v, m)| std::iter::repeat_n(v, m))
            .collect();
        for (a, b) in ev.iter().zip(&expected) {
            assert!((a - b).abs() < 1e-8);
        }
    }

    #[test]
    fn rejects_asymmetric_and_oversized() {
        let m = DenseMatrix::from_rows(&[vec![0.0, 1.0], vec![0.0, 0.0]]).unwrap();
        assert!(matches!(eigensolver_oracle(&m, 10), Err(Error::NotSymmetric { .. })));
        assert!(matches!(eigensolver_oracle(&DenseMatrix::zeros(5), 4), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn eigenvectors_are_orthonormal() {
        let rows = vec![
            vec![4.0, 1.0, -2.0, 2.0],
            vec![1.0, 2.0, 0.0, 1.0],
            vec![-2.0, 0.0, 3.0, -2.0],
            vec![2.0, 1.0, -2.0, -1.0],
        ];
        let m = DenseMatrix::from_rows(&rows).unwrap();
        let e = symmetric_eigen(&m, 10).unwrap();
        for i in 0..4 {
            for j in 0..4 {
                let dot: f64 = e.vectors[i].iter().zip(&e.vectors[j]).map(|(a, b)| a * b).sum();
                let want = if i == j { 1.0 } else { 0.0 };
                assert!((dot - want).abs() < 1e-10);
            }
        }
        let trace: f64 = e.values.iter().sum();
        assert!((trace - 8.0).abs() < 1e-10);
    }
}
