//! Exact integer/rational arithmetic on polynomials and matrices, and a
//! numeric symmetric eigensolver.

pub mod eigen;
pub mod matrix;
pub mod poly;

use thiserror::Error;

pub use eigen::{symmetric_eigenvalues, Spectrum, DEFAULT_EIGEN_TOL, MULTIPLICITY_GAP};
pub use matrix::{
    adjacency, char_poly_exact, degree_matrix, det_exact, incidence, laplacian, IntMatrix,
};
pub use num_bigint::BigInt;
pub use num_rational::BigRational as Rational;
pub use poly::{poly_div_exact, resultant, IntPoly};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("polynomial division leaves a remainder or a non-integral quotient")]
    InexactDivision,
    #[error("operation is undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("matrix is {rows}x{cols}, expected square")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("Jacobi iteration did not converge within {sweeps} sweeps")]
    ConvergenceFailure { sweeps: usize },
}

/// Number of spanning trees via the Matrix-Tree theorem: the determinant of
/// the Laplacian with row and column 0 removed.
pub fn matrix_tree_count(g: &crate::graph::Graph) -> BigInt {
    if g.vertex_count() == 0 {
        return BigInt::from(0);
    }
    laplacian(g)
        .minor(0, 0)
        .det()
        .expect("reduced Laplacian is square")
}

/// `t(G) = (-1)^(n-1) [λ^1] L(λ, G) / n`.
pub fn trees_from_char_poly(charpoly: &IntPoly) -> Result<BigInt, AlgebraError> {
    use num_integer::Integer;
    use num_traits::Zero;
    let n = charpoly.degree().ok_or(AlgebraError::ZeroPolynomial)?;
    let c1 = charpoly.coeff(1);
    let signed = if (n - 1) % 2 == 0 { c1 } else { -c1 };
    let (q, r) = signed.div_rem(&BigInt::from(n));
    if !r.is_zero() {
        return Err(AlgebraError::InexactDivision);
    }
    Ok(q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::GeneratorSpec;

    fn gen(s: &str) -> crate::graph::Graph {
        s.parse::<GeneratorSpec>().unwrap().generate().unwrap()
    }

    #[test]
    fn tree_counts_agree() {
        for (spec, t) in [
            ("cycle:6", 6),
            ("complete:4", 16),
            ("complete:5", 125),
            ("petersen", 2000),
            ("matching:4", 0),
        ] {
            let g = gen(spec);
            assert_eq!(matrix_tree_count(&g), BigInt::from(t), "{spec}");
            let cp = char_poly_exact(&laplacian(&g)).unwrap();
            assert_eq!(
                trees_from_char_poly(&cp).unwrap(),
                BigInt::from(t),
                "{spec}"
            );
        }
    }
}
