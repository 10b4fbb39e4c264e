use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{matrix::IntMatrix, AlgebraError};

/// Univariate polynomial with integer coefficients, ascending degree.
///
/// The coefficient vector never has trailing zeros; the zero polynomial is
/// the empty vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::new(vec![c.into()])
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        Self::from_i64(&[0, 1])
    }

    /// `x - root`.
    pub fn linear(root: impl Into<BigInt>) -> Self {
        Self::new(vec![-root.into(), BigInt::one()])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| {
                acc * x + BigRational::from_integer(c.clone())
            })
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        use num_traits::ToPrimitive;
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + c.to_f64().unwrap_or(f64::NAN))
    }

    /// `Σ |c_k| |x|^k`, which bounds the rounding error of [`IntPoly::eval_f64`]
    /// relative to machine epsilon.
    pub fn eval_abs_f64(&self, x: f64) -> f64 {
        use num_traits::ToPrimitive;
        self.coeffs.iter().rev().fold(0.0, |acc, c| {
            acc * x.abs() + c.abs().to_f64().unwrap_or(f64::NAN)
        })
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(IntPoly::constant(1), |acc, _| &acc * self)
    }

    /// `p(a x + b)`.
    pub fn substitute_affine(&self, a: &BigInt, b: &BigInt) -> Self {
        let inner = IntPoly::new(vec![b.clone(), a.clone()]);
        self.coeffs.iter().rev().fold(IntPoly::zero(), |acc, c| {
            &(&acc * &inner) + &IntPoly::constant(c.clone())
        })
    }

    /// Exact quotient `num / den`; any nonzero remainder or non-integral
    /// quotient coefficient is an error.
    pub fn div_exact(&self, den: &IntPoly) -> Result<IntPoly, AlgebraError> {
        let (quotient, remainder) = self.div_rem_rational(den)?;
        if !remainder.iter().all(Zero::is_zero) {
            return Err(AlgebraError::InexactDivision);
        }
        let coeffs = quotient
            .into_iter()
            .map(|q| {
                if q.is_integer() {
                    Ok(q.to_integer())
                } else {
                    Err(AlgebraError::InexactDivision)
                }
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(IntPoly::new(coeffs))
    }

    fn div_rem_rational(
        &self,
        den: &IntPoly,
    ) -> Result<(Vec<BigRational>, Vec<BigRational>), AlgebraError> {
        let Some(dd) = den.degree() else {
            return Err(AlgebraError::ZeroPolynomial);
        };
        let mut rem: Vec<BigRational> = self
            .coeffs
            .iter()
            .cloned()
            .map(BigRational::from_integer)
            .collect();
        let Some(nd) = self.degree() else {
            return Ok((Vec::new(), Vec::new()));
        };
        if nd < dd {
            return Ok((Vec::new(), rem));
        }
        let lead = BigRational::from_integer(den.coeffs[dd].clone());
        let mut quotient = vec![BigRational::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let q = &rem[k + dd] / &lead;
            if !q.is_zero() {
                for (j, c) in den.coeffs.iter().enumerate() {
                    rem[k + j] -= &q * BigRational::from_integer(c.clone());
                }
            }
            quotient[k] = q;
        }
        rem.truncate(dd);
        Ok((quotient, rem))
    }
}

/// Exact division `num / den` for integer polynomials.
pub fn poly_div_exact(num: &IntPoly, den: &IntPoly) -> Result<IntPoly, AlgebraError> {
    num.div_exact(den)
}

/// Resultant via the Sylvester determinant.
///
/// Convention: `res(p, q) = lc(p)^deg(q) * prod q(a_i)` over the roots `a_i`
/// of `p`. Swapping arguments multiplies by `(-1)^(deg p * deg q)`.
pub fn resultant(p: &IntPoly, q: &IntPoly) -> Result<BigInt, AlgebraError> {
    let (Some(dp), Some(dq)) = (p.degree(), q.degree()) else {
        return Err(AlgebraError::ZeroPolynomial);
    };
    let size = dp + dq;
    if size == 0 {
        return Ok(BigInt::one());
    }
    let mut sylvester = IntMatrix::zeros(size, size);
    // rows hold coefficients from the leading one down
    for row in 0..dq {
        for (k, c) in p.coeffs.iter().rev().enumerate() {
            sylvester.set(row, row + k, c.clone());
        }
    }
    for row in 0..dp {
        for (k, c) in q.coeffs.iter().rev().enumerate() {
            sylvester.set(dq + row, row + k, c.clone());
        }
    }
    sylvester.det()
}

impl Add for &IntPoly {
    type Output = IntPoly;

    fn add(self, rhs: &IntPoly) -> IntPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..len).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;

    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..len).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;

    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;

    fn neg(self) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let magnitude = c.abs();
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let show_coeff = k == 0 || !magnitude.is_one();
            match (show_coeff, k) {
                (_, 0) => write!(f, "{magnitude}")?,
                (true, 1) => write!(f, "{magnitude}x")?,
                (false, 1) => write!(f, "x")?,
                (true, _) => write!(f, "{magnitude}x^{k}")?,
                (false, _) => write!(f, "x^{k}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64(c)
    }

    #[test]
    fn normalises_trailing_zeros() {
        assert_eq!(p(&[1, 2, 0, 0]).degree(), Some(1));
        assert_eq!(p(&[0, 0]).degree(), None);
        assert_eq!(p(&[-16, 20, -8, 1]).to_string(), "x^3 - 8x^2 + 20x - 16");
    }

    #[test]
    fn exact_division() {
        assert_eq!(
            poly_div_exact(&p(&[-1, 0, 1]), &p(&[-1, 1])).unwrap(),
            p(&[1, 1])
        );
        assert_eq!(
            poly_div_exact(&p(&[1, 0, 1]), &p(&[-1, 1])),
            Err(AlgebraError::InexactDivision)
        );
        // 2x / (2x + 1) is not a polynomial; x^2 / 2x has a non-integral quotient
        assert_eq!(
            poly_div_exact(&p(&[0, 0, 1]), &p(&[0, 2])),
            Err(AlgebraError::InexactDivision)
        );
        assert_eq!(
            poly_div_exact(&p(&[1]), &IntPoly::zero()),
            Err(AlgebraError::ZeroPolynomial)
        );
        assert_eq!(
            poly_div_exact(&IntPoly::zero(), &p(&[3, 1])).unwrap(),
            IntPoly::zero()
        );
    }

    #[test]
    fn resultant_sign_convention() {
        // res(t - 2, t - 3) = (2 - 3)
        assert_eq!(
            resultant(&p(&[-2, 1]), &p(&[-3, 1])).unwrap(),
            BigInt::from(-1)
        );
        // roots of t^2 - 2 are ±√2; q(t) = t gives √2 · (−√2)
        assert_eq!(
            resultant(&p(&[-2, 0, 1]), &p(&[0, 1])).unwrap(),
            BigInt::from(-2)
        );
        // (t-4)(t-2)^2 against t+1: 5 · 3 · 3
        let c4_reduced = &IntPoly::linear(4) * &IntPoly::linear(2).pow(2);
        assert_eq!(
            resultant(&c4_reduced, &p(&[1, 1])).unwrap(),
            BigInt::from(45)
        );
        assert_eq!(
            resultant(&IntPoly::zero(), &p(&[1, 1])),
            Err(AlgebraError::ZeroPolynomial)
        );
    }

    #[test]
    fn resultant_with_constants() {
        assert_eq!(
            resultant(&p(&[3]), &p(&[1, 0, 1])).unwrap(),
            BigInt::from(9)
        );
        assert_eq!(
            resultant(&p(&[-2, 0, 1]), &p(&[5])).unwrap(),
            BigInt::from(25)
        );
        assert_eq!(resultant(&p(&[7]), &p(&[5])).unwrap(), BigInt::one());
    }

    #[test]
    fn resultant_non_monic_leading_power() {
        // p = 2t - 1 (root 1/2), q = t^2 + 1: lc(p)^2 · q(1/2) = 4 · 5/4
        assert_eq!(
            resultant(&p(&[-1, 2]), &p(&[1, 0, 1])).unwrap(),
            BigInt::from(5)
        );
    }

    #[test]
    fn affine_substitution() {
        // L(n - x) for L = x(x-4)(x-2)^2, n = 4
        let l = &(&IntPoly::x() * &IntPoly::linear(4)) * &IntPoly::linear(2).pow(2);
        let sub = l.substitute_affine(&BigInt::from(-1), &BigInt::from(4));
        for x in -3..6 {
            let x = BigInt::from(x);
            assert_eq!(sub.eval(&x), l.eval(&(BigInt::from(4) - &x)));
        }
    }
}
