use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::{FormulaEntry, FormulaError, Params, TreeFormula};
use crate::algebra::{resultant, trees_from_char_poly, IntPoly, Spectrum};

/// A discriminant with `|Δ| ≤ DISCRIMINANT_SNAP · (b² + |4ac|)` is a double
/// root; rounding in `λ_i` would otherwise split it by `O(√ε)`.
pub const DISCRIMINANT_SNAP: f64 = 1e-9;
/// Distance within which a per-eigenvalue root cancels a scalar root of
/// negative multiplicity.
pub const CANCELLATION_TOL: f64 = 1e-6;
/// A per-eigenvalue coefficient within this many ulps of its evaluation
/// bound is rounding noise and is taken as 0.
const COEFF_NOISE_ULPS: f64 = 64.0;
/// Largest `|λ_n|` accepted as the zero eigenvalue of the base graph.
const ZERO_EIGENVALUE_TOL: f64 = 1e-6;

/// Roots of `F(λ, λ_i)` for one base eigenvalue.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EigenRoots {
    pub lambda_i: f64,
    pub roots: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PredictedSpectrum {
    /// Scalar roots with their net multiplicity (after merging equal roots).
    pub fixed: Vec<(i64, usize)>,
    pub per_eigenvalue: Vec<EigenRoots>,
    /// Per-eigenvalue roots removed against negative multiplicities.
    pub cancelled: Vec<f64>,
}

impl PredictedSpectrum {
    pub fn len(&self) -> usize {
        self.fixed.iter().map(|f| f.1).sum::<usize>()
            + self
                .per_eigenvalue
                .iter()
                .map(|e| e.roots.len())
                .sum::<usize>()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn spectrum(&self) -> Spectrum {
        let mut values = Vec::with_capacity(self.len());
        for &(root, mult) in &self.fixed {
            values.extend(std::iter::repeat_n(root as f64, mult));
        }
        for e in &self.per_eigenvalue {
            values.extend_from_slice(&e.roots);
        }
        Spectrum::from_values(values)
    }
}

/// Scalar roots with multiplicities summed over equal roots.
fn scalar_multiplicities(
    entry: &FormulaEntry,
    p: &Params,
) -> Result<BTreeMap<i64, i64>, FormulaError> {
    let mut out = BTreeMap::new();
    for f in &entry.scalar_factors {
        *out.entry(f.root.eval_i64(p)?).or_insert(0) += f.multiplicity.eval_i64(p)?;
    }
    out.retain(|_, mult| *mult != 0);
    Ok(out)
}

/// Real roots of `c[0] + c[1] λ + c[2] λ²` (degree ≤ 2).
fn real_roots(c: &[f64], lambda_i: f64) -> Result<Vec<f64>, FormulaError> {
    match c.len() {
        0 | 1 => Ok(Vec::new()),
        2 => Ok(vec![-c[0] / c[1]]),
        3 => {
            let (a, b, cc) = (c[2], c[1], c[0]);
            let raw = b * b - 4.0 * a * cc;
            let scale = b * b + (4.0 * a * cc).abs();
            let disc = if raw.abs() <= DISCRIMINANT_SNAP * scale.max(1.0) {
                0.0
            } else if raw < 0.0 {
                return Err(FormulaError::ComplexRoots {
                    lambda_i,
                    discriminant: raw,
                });
            } else {
                raw
            };
            // q = -(b + sign(b)√Δ)/2 avoids cancellation; roots q/a and c/q
            let q = -0.5 * (b + b.signum() * disc.sqrt());
            if q == 0.0 {
                return Ok(vec![0.0, 0.0]);
            }
            Ok(vec![q / a, cc / q])
        }
        _ => Err(FormulaError::Parse(
            "per-eigenvalue factor of degree > 2".into(),
        )),
    }
}

fn check_base_spectrum(p: &Params, sp: &Spectrum) -> Result<(), FormulaError> {
    if sp.len() != p.n as usize {
        return Err(FormulaError::InvalidSpectrum(format!(
            "{} values for n = {}",
            sp.len(),
            p.n
        )));
    }
    match sp.values().last() {
        Some(last) if last.abs() <= ZERO_EIGENVALUE_TOL => Ok(()),
        Some(last) => Err(FormulaError::InvalidSpectrum(format!(
            "smallest value {last} is not 0"
        ))),
        None => Err(FormulaError::InvalidSpectrum("empty spectrum".into())),
    }
}

/// Spectrum of `G^{xyz}` predicted from `Sp(G)`.
///
/// `sp` must have `n` values with `λ_n ≈ 0`; `λ_1, …, λ_{n−1}` feed `F`.
pub fn predict_spectrum(
    entry: &FormulaEntry,
    p: &Params,
    sp: &Spectrum,
) -> Result<PredictedSpectrum, FormulaError> {
    check_base_spectrum(p, sp)?;
    let scalars = scalar_multiplicities(entry, p)?;
    let bound = entry.eigen_factor.as_ref().map(|f| f.bind(p));
    let mut per_eigenvalue = Vec::new();
    if let Some(bound) = &bound {
        for &lambda_i in &sp.values()[..sp.len() - 1] {
            let coeffs: Vec<f64> = bound
                .iter()
                .map(|c| {
                    let v = c.eval_f64(lambda_i);
                    let noise = COEFF_NOISE_ULPS * f64::EPSILON * c.eval_abs_f64(lambda_i);
                    if v.abs() <= noise {
                        0.0
                    } else {
                        v
                    }
                })
                .collect();
            per_eigenvalue.push(EigenRoots {
                lambda_i,
                roots: real_roots(&coeffs, lambda_i)?,
            });
        }
    }
    let mut cancelled = Vec::new();
    for (&root, &mult) in scalars.iter().filter(|(_, m)| **m < 0) {
        let target = root as f64;
        for k in 0..mult.unsigned_abs() as usize {
            let nearest = per_eigenvalue
                .iter()
                .enumerate()
                .flat_map(|(i, e)| {
                    e.roots
                        .iter()
                        .enumerate()
                        .map(move |(j, v)| (i, j, (v - target).abs()))
                })
                .min_by(|a, b| a.2.total_cmp(&b.2));
            match nearest {
                Some((i, j, d)) if d <= CANCELLATION_TOL => {
                    cancelled.push(per_eigenvalue[i].roots.remove(j));
                }
                _ => {
                    return Err(FormulaError::CancellationFailure {
                        root: target,
                        missing: mult.unsigned_abs() as usize - k,
                    })
                }
            }
        }
    }
    let fixed = scalars
        .into_iter()
        .filter(|(_, m)| *m > 0)
        .map(|(root, m)| (root, m as usize))
        .collect();
    let out = PredictedSpectrum {
        fixed,
        per_eigenvalue,
        cancelled,
    };
    let expected = (p.n + p.m) as usize;
    if out.len() != expected {
        return Err(FormulaError::InvalidSpectrum(format!(
            "{} predicted values, expected {expected}",
            out.len()
        )));
    }
    Ok(out)
}

/// `P(t) = L(t, G) / t`.
fn reduced_char_poly(charpoly: &IntPoly) -> Result<IntPoly, FormulaError> {
    Ok(charpoly.div_exact(&IntPoly::x())?)
}

/// `∏_{i=1}^{n−1} q(λ_i)` for an integer polynomial `q`, exactly.
fn product_over_base(reduced: &IntPoly, q: &IntPoly) -> Result<BigInt, FormulaError> {
    let k = reduced
        .degree()
        .ok_or(crate::algebra::AlgebraError::ZeroPolynomial)?;
    if k == 0 {
        return Ok(BigInt::one());
    }
    if q.is_zero() {
        return Ok(BigInt::zero());
    }
    let res = resultant(reduced, q)?;
    // res = lc(P)^{deg q} ∏ q(λ_i); P is monic for a characteristic polynomial
    let lc = reduced.leading().cloned().unwrap_or_else(BigInt::one);
    let scale = lc.pow(q.degree().unwrap_or(0) as u32);
    let (quot, rem) = (&res / &scale, &res % &scale);
    if !rem.is_zero() {
        return Err(FormulaError::NonIntegerResult(format!("{res}/{scale}")));
    }
    Ok(quot)
}

/// `L(λ₀, G^{xyz})` from the closed form, exactly.
pub fn eval_l_exact(
    entry: &FormulaEntry,
    charpoly: &IntPoly,
    p: &Params,
    lambda0: &BigRational,
) -> Result<BigRational, FormulaError> {
    let mut value = BigRational::one();
    for (root, mult) in scalar_multiplicities(entry, p)? {
        let base = lambda0 - BigRational::from_integer(BigInt::from(root));
        if mult < 0 && base.is_zero() {
            return Err(FormulaError::PoleEvaluation { root });
        }
        value *= base.pow(mult as i32);
    }
    let Some(f) = &entry.eigen_factor else {
        return Ok(value);
    };
    let bound = f.bind(p);
    let d = bound.len() - 1;
    let (a, b) = (lambda0.numer(), lambda0.denom());
    // b^d F(a/b, t) as an integer polynomial in t
    let mut g = IntPoly::zero();
    for (k, c) in bound.iter().enumerate() {
        let w = a.pow(k as u32) * b.pow((d - k) as u32);
        g = &g + &(c * &IntPoly::constant(w));
    }
    let reduced = reduced_char_poly(charpoly)?;
    let product = product_over_base(&reduced, &g)?;
    let k = reduced.degree().unwrap_or(0);
    let denom = b.pow((d * k) as u32);
    Ok(value * BigRational::new(product, denom))
}

/// `t(G^{xyz})` from the closed form, exactly; 0 for `z = 0`.
pub fn eval_trees(
    entry: &FormulaEntry,
    charpoly: &IntPoly,
    p: &Params,
) -> Result<BigInt, FormulaError> {
    let TreeFormula::Product {
        prefactor,
        base_trees,
        per_eigenvalue,
    } = &entry.tree_formula
    else {
        return Ok(BigInt::zero());
    };
    let mut value = BigRational::one();
    for (base, exp) in prefactor {
        let base = base.eval_int(p)?;
        let exp = exp.eval_i64(p)?;
        if base.is_zero() && exp < 0 {
            return Err(FormulaError::PoleEvaluation { root: 0 });
        }
        value *= BigRational::from_integer(base).pow(exp as i32);
    }
    if *base_trees {
        value *= BigRational::from_integer(trees_from_char_poly(charpoly)?);
    }
    if let Some(g) = per_eigenvalue {
        let g = g.bind(p).into_iter().next().unwrap_or_default();
        let reduced = reduced_char_poly(charpoly)?;
        value *= BigRational::from_integer(product_over_base(&reduced, &g)?);
    }
    if !value.is_integer() {
        return Err(FormulaError::NonIntegerResult(value.to_string()));
    }
    let t = value.to_integer();
    if t.is_negative() {
        return Err(FormulaError::NonIntegerResult(format!(
            "negative tree count {t}"
        )));
    }
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{char_poly_exact, laplacian, symmetric_eigenvalues, DEFAULT_EIGEN_TOL};
    use crate::formulas::registry;
    use crate::graph::{as_regular, GeneratorSpec, RegularGraph};

    fn reg(s: &str) -> RegularGraph {
        as_regular(s.parse::<GeneratorSpec>().unwrap().generate().unwrap()).unwrap()
    }

    fn setup(s: &str) -> (Params, IntPoly, Spectrum) {
        let g = reg(s);
        let l = laplacian(g.graph());
        (
            Params::new(g.n(), g.m(), g.degree()),
            char_poly_exact(&l).unwrap(),
            symmetric_eigenvalues(&l, DEFAULT_EIGEN_TOL).unwrap(),
        )
    }

    fn entry(code: &str) -> &'static FormulaEntry {
        registry(code.parse().unwrap())
    }

    #[test]
    fn noisy_coefficients_dont_split_a_double_zero() {
        // (λ + t − n)(λ + t − m) at n = m = t = 4, with λ_i one ulp below 4
        let (p, _, sp) = setup("cycle:4");
        let pred = predict_spectrum(entry("--0"), &p, &sp).unwrap();
        let direct = Spectrum::from_values(vec![2.0, 2.0, 2.0, 2.0, 0.0, 0.0, 0.0, 0.0]);
        assert!(pred.spectrum().max_abs_deviation(&direct).unwrap() < 1e-12);
    }

    #[test]
    fn quadratic_roots() {
        assert_eq!(real_roots(&[6.0, -5.0, 1.0], 0.0).unwrap(), vec![3.0, 2.0]);
        assert_eq!(real_roots(&[4.0, -4.0, 1.0], 0.0).unwrap(), vec![2.0, 2.0]);
        assert_eq!(real_roots(&[0.0, 0.0, 1.0], 0.0).unwrap(), vec![0.0, 0.0]);
        assert!(matches!(
            real_roots(&[1.0, 0.0, 1.0], 0.0),
            Err(FormulaError::ComplexRoots { .. })
        ));
        assert_eq!(real_roots(&[-3.0, 1.0], 0.0).unwrap(), vec![3.0]);
    }

    #[test]
    fn subdivision_of_square_is_octagon() {
        let (p, _, sp) = setup("cycle:4");
        let pred = predict_spectrum(entry("00+"), &p, &sp).unwrap().spectrum();
        let r2 = 2f64.sqrt();
        let c8 = Spectrum::from_values(vec![
            4.0,
            2.0 + r2,
            2.0 + r2,
            2.0,
            2.0,
            2.0 - r2,
            2.0 - r2,
            0.0,
        ]);
        assert!(
            pred.max_abs_deviation(&c8).unwrap() < 1e-9,
            "{:?}",
            pred.values()
        );
    }

    #[test]
    fn matching_cancellation() {
        let (p, _, sp) = setup("matching:4");
        let pred = predict_spectrum(entry("00+"), &p, &sp).unwrap();
        // 2K2 subdivided is 2P3 with spectrum {3, 3, 1, 1, 0, 0}
        assert_eq!(pred.cancelled.len(), 2);
        let exp = Spectrum::from_values(vec![3.0, 3.0, 1.0, 1.0, 0.0, 0.0]);
        assert!(pred.spectrum().max_abs_deviation(&exp).unwrap() < 1e-9);
    }

    #[test]
    fn rejects_bad_base_spectrum() {
        let (p, _, _) = setup("cycle:4");
        let bad = Spectrum::from_values(vec![4.0, 2.0, 2.0, 1.0]);
        assert!(matches!(
            predict_spectrum(entry("+++"), &p, &bad),
            Err(FormulaError::InvalidSpectrum(_))
        ));
    }

    #[test]
    fn exact_values() {
        let (p, cp, _) = setup("cycle:4");
        let three = BigRational::from_integer(BigInt::from(3));
        assert_eq!(
            eval_l_exact(entry("000"), &cp, &p, &three).unwrap(),
            three.pow(8)
        );
        let zero = BigRational::zero();
        assert!(eval_l_exact(entry("00+"), &cp, &p, &zero)
            .unwrap()
            .is_zero());
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        // L(1/2, C4^{+00}) = (1/2)^5 · ∏(1/2 − λ_i) over {4, 2, 2}
        let expected = half.pow(5) * BigRational::new(BigInt::from(-7 * 9), BigInt::from(8));
        assert_eq!(
            eval_l_exact(entry("+00"), &cp, &p, &half).unwrap(),
            expected
        );
    }

    #[test]
    fn pole_is_reported() {
        let (p, cp, _) = setup("matching:4");
        let two = BigRational::from_integer(BigInt::from(2));
        assert_eq!(
            eval_l_exact(entry("00+"), &cp, &p, &two),
            Err(FormulaError::PoleEvaluation { root: 2 })
        );
    }

    #[test]
    fn tree_examples() {
        let (p, cp, _) = setup("cycle:3");
        assert_eq!(eval_trees(entry("00+"), &cp, &p).unwrap(), BigInt::from(6));
        let (p, cp, _) = setup("cycle:4");
        assert_eq!(
            eval_trees(entry("+++"), &cp, &p).unwrap(),
            BigInt::from(3528)
        );
        assert_eq!(eval_trees(entry("++0"), &cp, &p).unwrap(), BigInt::zero());
    }
}
