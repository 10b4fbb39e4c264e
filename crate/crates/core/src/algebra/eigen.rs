use serde::Serialize;

use super::{matrix::IntMatrix, AlgebraError};

pub const DEFAULT_EIGEN_TOL: f64 = 1e-12;
/// Sorted eigenvalues closer than this belong to one multiplicity cluster.
pub const MULTIPLICITY_GAP: f64 = 1e-7;
const MAX_SWEEPS: usize = 100;

/// Multiset of real eigenvalues, sorted descending.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(transparent)]
pub struct Spectrum {
    values: Vec<f64>,
}

impl Spectrum {
    pub fn from_values(mut values: Vec<f64>) -> Self {
        values.sort_by(|a, b| b.total_cmp(a));
        Spectrum { values }
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// `λ_1 ≥ … ≥ λ_n`, 1-based.
    pub fn lambda(&self, i: usize) -> f64 {
        self.values[i - 1]
    }

    pub fn sum(&self) -> f64 {
        self.values.iter().sum()
    }

    /// Distinct values with multiplicities, merging neighbours closer than
    /// [`MULTIPLICITY_GAP`]. Each cluster is reported by its mean.
    pub fn clusters(&self) -> Vec<(f64, usize)> {
        let mut out: Vec<(f64, usize)> = Vec::new();
        let mut last = f64::NAN;
        for &v in &self.values {
            match out.last_mut() {
                Some((mean, count)) if (last - v).abs() < MULTIPLICITY_GAP => {
                    *mean = (*mean * *count as f64 + v) / (*count + 1) as f64;
                    *count += 1;
                }
                _ => out.push((v, 1)),
            }
            last = v;
        }
        out
    }

    /// Number of values within `tol` of `x`.
    pub fn multiplicity_of(&self, x: f64, tol: f64) -> usize {
        self.values.iter().filter(|v| (*v - x).abs() <= tol).count()
    }

    /// Largest elementwise gap after sorting both sides; `None` when the
    /// lengths differ.
    pub fn max_abs_deviation(&self, other: &Spectrum) -> Option<f64> {
        (self.len() == other.len()).then(|| {
            self.values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| (a - b).abs())
                .fold(0.0, f64::max)
        })
    }

    /// Product of the values with `|λ| > tol`.
    pub fn nonzero_product(&self, tol: f64) -> f64 {
        self.values.iter().filter(|v| v.abs() > tol).product()
    }
}

/// Eigenvalues of a symmetric integer matrix by cyclic Jacobi rotations.
///
/// Iterates until the off-diagonal Frobenius norm is below
/// `tol * max(1, ‖M‖_F)`.
pub fn symmetric_eigenvalues(mat: &IntMatrix, tol: f64) -> Result<Spectrum, AlgebraError> {
    if !mat.is_square() {
        return Err(AlgebraError::NotSquare {
            rows: mat.rows(),
            cols: mat.cols(),
        });
    }
    if !mat.is_symmetric() {
        return Err(AlgebraError::NotSymmetric);
    }
    let n = mat.rows();
    let a = jacobi(mat.to_f64(), n, tol)?;
    Ok(Spectrum::from_values(
        (0..n).map(|i| a[i * n + i]).collect(),
    ))
}

fn jacobi(mut a: Vec<f64>, n: usize, tol: f64) -> Result<Vec<f64>, AlgebraError> {
    let frobenius = a.iter().map(|x| x * x).sum::<f64>().sqrt();
    let threshold = tol * frobenius.max(1.0);
    let off_norm = |a: &[f64]| {
        let mut s = 0.0;
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    s += a[i * n + j] * a[i * n + j];
                }
            }
        }
        s.sqrt()
    };
    for _ in 0..MAX_SWEEPS {
        if off_norm(&a) < threshold {
            return Ok(a);
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
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p * n + k];
                    let aqk = a[q * n + k];
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
            }
        }
    }
    if off_norm(&a) < threshold {
        return Ok(a);
    }
    Err(AlgebraError::ConvergenceFailure { sweeps: MAX_SWEEPS })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::laplacian;
    use crate::graph::GeneratorSpec;

    fn spectrum(s: &str) -> Spectrum {
        let g = s.parse::<GeneratorSpec>().unwrap().generate().unwrap();
        symmetric_eigenvalues(&laplacian(&g), DEFAULT_EIGEN_TOL).unwrap()
    }

    fn assert_close(sp: &Spectrum, expected: &[f64]) {
        let dev = sp
            .max_abs_deviation(&Spectrum::from_values(expected.to_vec()))
            .unwrap();
        assert!(dev < 1e-10, "{:?} vs {expected:?}", sp.values());
    }

    #[test]
    fn small_spectra() {
        assert_close(&spectrum("cycle:4"), &[4.0, 2.0, 2.0, 0.0]);
        assert_close(&spectrum("complete:5"), &[5.0, 5.0, 5.0, 5.0, 0.0]);
        let r5 = 5f64.sqrt();
        let (hi, lo) = ((5.0 + r5) / 2.0, (5.0 - r5) / 2.0);
        assert_close(&spectrum("cycle:5"), &[hi, hi, lo, lo, 0.0]);
    }

    #[test]
    fn trace_and_clusters() {
        let sp = spectrum("petersen");
        assert!((sp.sum() - 30.0).abs() < 10.0 * DEFAULT_EIGEN_TOL * 30.0);
        let clusters = sp.clusters();
        assert_eq!(clusters.len(), 3);
        assert_eq!(
            clusters.iter().map(|c| c.1).collect::<Vec<_>>(),
            vec![4, 5, 1]
        );
        assert!((clusters[0].0 - 5.0).abs() < 1e-10);
        // t(Petersen) = 2000
        assert!((sp.nonzero_product(1e-9) / 10.0 - 2000.0).abs() < 2000.0 * 1e-6);
    }

    #[test]
    fn rejects_asymmetric_input() {
        let m = IntMatrix::from_fn(2, 2, |i, j| (i * 2 + j) as i64);
        assert_eq!(
            symmetric_eigenvalues(&m, 1e-12),
            Err(AlgebraError::NotSymmetric)
        );
    }

    #[test]
    fn empty_matrix() {
        assert!(symmetric_eigenvalues(&IntMatrix::zeros(0, 0), 1e-12)
            .unwrap()
            .is_empty());
    }
}
