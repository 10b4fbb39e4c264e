//! Spectrum of a graph obtained from a regular graph by a sequence of
//! complement, line-graph, `+++` and `−−−` operations, computed from the
//! starting spectrum alone.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::{predict_spectrum, registry, FormulaError, Params};
use crate::algebra::Spectrum;
use crate::transform::{Part, XyzCode};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SeriesOp {
    Complement,
    Line,
    /// `G ↦ G^{+++}`.
    TotalPlus,
    /// `G ↦ G^{−−−}`.
    TotalMinus,
}

impl SeriesOp {
    /// The transformation code the step corresponds to, if any.
    pub fn code(self) -> Option<XyzCode> {
        match self {
            SeriesOp::TotalPlus => Some(XyzCode::new(Part::Plus, Part::Plus, Part::Plus)),
            SeriesOp::TotalMinus => Some(XyzCode::new(Part::Minus, Part::Minus, Part::Minus)),
            SeriesOp::Complement | SeriesOp::Line => None,
        }
    }

    /// Parses a comma-separated list such as `"c,l,+++"`.
    pub fn parse_list(s: &str) -> Result<Vec<SeriesOp>, FormulaError> {
        s.split(',')
            .filter(|t| !t.trim().is_empty())
            .map(|t| t.trim().parse())
            .collect()
    }
}

impl FromStr for SeriesOp {
    type Err = FormulaError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "c" | "complement" => Ok(SeriesOp::Complement),
            "l" | "line" => Ok(SeriesOp::Line),
            "+++" => Ok(SeriesOp::TotalPlus),
            "---" => Ok(SeriesOp::TotalMinus),
            other => Err(FormulaError::Parse(format!(
                "unknown series operation {other:?}"
            ))),
        }
    }
}

impl fmt::Display for SeriesOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SeriesOp::Complement => "c",
            SeriesOp::Line => "l",
            SeriesOp::TotalPlus => "+++",
            SeriesOp::TotalMinus => "---",
        })
    }
}

/// An `r`-regular graph on `n` vertices, known through its spectrum.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SeriesState {
    pub n: usize,
    pub r: usize,
    pub spectrum: Spectrum,
}

fn step(state: &SeriesState, op: SeriesOp) -> Result<(i64, Spectrum), FormulaError> {
    let (n, r) = (state.n as i64, state.r as i64);
    let m = n * r / 2;
    let values = state.spectrum.values();
    match op {
        SeriesOp::Complement => {
            // λ_i(G^c) = n − λ_{n−i}(G), plus λ_n = 0
            let mut out: Vec<f64> = values[..values.len() - 1]
                .iter()
                .map(|v| n as f64 - v)
                .collect();
            out.push(0.0);
            Ok((n - 1 - r, Spectrum::from_values(out)))
        }
        SeriesOp::Line => {
            let mut out = values.to_vec();
            let bulk = (2 * r) as f64;
            if m >= n {
                out.extend(std::iter::repeat_n(bulk, (m - n) as usize));
            } else {
                for k in 0..(n - m) as usize {
                    let pos = out
                        .iter()
                        .position(|v| (v - bulk).abs() <= super::CANCELLATION_TOL)
                        .ok_or(FormulaError::CancellationFailure {
                            root: bulk,
                            missing: (n - m) as usize - k,
                        })?;
                    out.remove(pos);
                }
            }
            Ok((2 * r - 2, Spectrum::from_values(out)))
        }
        SeriesOp::TotalPlus | SeriesOp::TotalMinus => {
            let code = op.code().expect("total operations have codes");
            let p = Params::new(state.n, m as usize, state.r);
            let predicted = predict_spectrum(registry(code), &p, &state.spectrum)?;
            let degree = if op == SeriesOp::TotalPlus {
                2 * r
            } else {
                n + m - 2 * r - 1
            };
            Ok((degree, predicted.spectrum()))
        }
    }
}

pub fn apply_operation_series(
    start: SeriesState,
    ops: &[SeriesOp],
) -> Result<SeriesState, FormulaError> {
    if start.r < 1 {
        return Err(FormulaError::DegenerateDegree {
            step: 0,
            degree: start.r as i64,
        });
    }
    let mut state = start;
    for (i, &op) in ops.iter().enumerate() {
        let (degree, spectrum) = step(&state, op)?;
        if degree < 1 {
            return Err(FormulaError::DegenerateDegree {
                step: i + 1,
                degree,
            });
        }
        state = SeriesState {
            n: spectrum.len(),
            r: degree as usize,
            spectrum,
        };
    }
    Ok(state)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{laplacian, symmetric_eigenvalues, DEFAULT_EIGEN_TOL};
    use crate::graph::GeneratorSpec;

    fn start(s: &str) -> SeriesState {
        let g = s.parse::<GeneratorSpec>().unwrap().generate().unwrap();
        SeriesState {
            n: g.vertex_count(),
            r: g.degree(0),
            spectrum: symmetric_eigenvalues(&laplacian(&g), DEFAULT_EIGEN_TOL).unwrap(),
        }
    }

    #[test]
    fn pentagon_is_self_complementary_spectrally() {
        let s = start("cycle:5");
        let out = apply_operation_series(s.clone(), &[SeriesOp::Complement]).unwrap();
        assert_eq!((out.n, out.r), (5, 2));
        assert!(out.spectrum.max_abs_deviation(&s.spectrum).unwrap() < 1e-12);
    }

    #[test]
    fn line_graph_of_hexagon() {
        let s = start("cycle:6");
        let out = apply_operation_series(s.clone(), &[SeriesOp::Line]).unwrap();
        assert_eq!((out.n, out.r), (6, 2));
        assert!(out.spectrum.max_abs_deviation(&s.spectrum).unwrap() < 1e-12);
    }

    #[test]
    fn degrees_along_a_series() {
        let out = apply_operation_series(
            start("petersen"),
            &[SeriesOp::Complement, SeriesOp::TotalPlus],
        )
        .unwrap();
        assert_eq!((out.n, out.r), (40, 12));
        let out =
            apply_operation_series(start("petersen"), &[SeriesOp::Line, SeriesOp::TotalMinus])
                .unwrap();
        // L(Petersen): n = 15, r = 4, m = 30; then 45 vertices of degree 45 − 8 − 1
        assert_eq!((out.n, out.r), (45, 36));
    }

    #[test]
    fn line_of_matching_degenerates() {
        let err = apply_operation_series(start("matching:6"), &[SeriesOp::Line]).unwrap_err();
        assert_eq!(err, FormulaError::DegenerateDegree { step: 1, degree: 0 });
    }

    #[test]
    fn parses_lists() {
        assert_eq!(
            SeriesOp::parse_list("c, l,+++,---").unwrap(),
            vec![
                SeriesOp::Complement,
                SeriesOp::Line,
                SeriesOp::TotalPlus,
                SeriesOp::TotalMinus
            ]
        );
        assert!(SeriesOp::parse_list("c,x").is_err());
    }
}
