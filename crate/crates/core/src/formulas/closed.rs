//! Stand-alone closed forms: the tree-count identities for `G^{00+}`,
//! `G^{0++}` and `G^l`, and the fixed eigenvalues shared by every code with
//! a given `(y, z)`.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use super::{FormulaError, Params};
use crate::transform::{Part, XyzCode};

fn integral(q: BigRational) -> Result<BigInt, FormulaError> {
    if q.is_integer() {
        Ok(q.to_integer())
    } else {
        Err(FormulaError::NonIntegerResult(q.to_string()))
    }
}

fn rat(x: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

/// `t(G^{00+}) = n/(m+n) · 2^{m−n} (r+2) t(G)`.
pub fn trees_subdivision(p: &Params, trees: &BigInt) -> Result<BigInt, FormulaError> {
    let q = rat(p.n) / rat(p.s()) * rat(2).pow((p.m - p.n) as i32) * rat(p.r + 2);
    integral(q * BigRational::from_integer(trees.clone()))
}

/// `t(G^{0++}) = n/(m+n) · 2^{m−n} (r+1)^{m−1} (r+2) t(G)`.
pub fn trees_zero_plus_plus(p: &Params, trees: &BigInt) -> Result<BigInt, FormulaError> {
    let q = rat(p.n) / rat(p.s())
        * rat(2).pow((p.m - p.n) as i32)
        * rat(p.r + 1).pow((p.m - 1) as i32)
        * rat(p.r + 2);
    integral(q * BigRational::from_integer(trees.clone()))
}

/// `t(G^l) = n/m · 2^{m−n} r^{m−n} t(G)`.
pub fn trees_line_graph(p: &Params, trees: &BigInt) -> Result<BigInt, FormulaError> {
    let q = rat(p.n) / rat(p.m) * rat(2 * p.r).pow((p.m - p.n) as i32);
    integral(q * BigRational::from_integer(trees.clone()))
}

/// An eigenvalue every `G^{xyz}` with the given `(y, z)` has, regardless
/// of `x` and of the spectrum of `G`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FixedEigenvalue {
    pub value: i64,
    pub min_multiplicity: i64,
}

/// Fixed eigenvalues for `z ∈ {+, −}`; empty for `z ∈ {0, 1}`.
///
/// For `z = +`: `r + 2` once, and `2, m + 2, 2r + 2, m − 2r + 2` with
/// multiplicity `m − n` for `y = 0, 1, +, −`. The `z = −` values are the
/// complements `s − μ` under the bar code.
pub fn fixed_eigenvalue_claims(code: XyzCode, p: &Params) -> Vec<FixedEigenvalue> {
    let (m, r) = (p.m, p.r);
    let bulk_plus = |y: Part| match y {
        Part::Zero => 2,
        Part::One => m + 2,
        Part::Plus => 2 * r + 2,
        Part::Minus => m - 2 * r + 2,
    };
    let s = p.s();
    let (single, bulk) = match code.z {
        Part::Plus => (r + 2, bulk_plus(code.y)),
        Part::Minus => (s - r - 2, s - bulk_plus(code.y.bar())),
        Part::Zero | Part::One => return Vec::new(),
    };
    vec![
        FixedEigenvalue {
            value: single,
            min_multiplicity: 1,
        },
        FixedEigenvalue {
            value: bulk,
            min_multiplicity: p.m - p.n,
        },
    ]
}
