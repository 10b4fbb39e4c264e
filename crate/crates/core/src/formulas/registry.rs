//! The 64 closed forms, one per code, in canonical factored form:
//!
//! `L(λ, G^{xyz}) = ∏ (λ − root)^mult · ∏_{i=1}^{n−1} F(λ, λ_i)`
//!
//! and `t(G^{xyz}) = ∏ base^exp · [t(G)] · ∏_{i=1}^{n−1} g(λ_i)`.
//!
//! Rows whose printed form uses `L(c − λ, G)` or `L(λ − c, G)` are stored
//! with the `λ_n = 0` factor already split off into the scalar list.

use std::sync::OnceLock;

use serde::Serialize;

use super::expr::{SymPoly, Var};
use super::FormulaError;
use crate::transform::XyzCode;

/// `(λ − root)^multiplicity`; the multiplicity may evaluate negative.
#[derive(Debug, Clone)]
pub struct ScalarFactor {
    pub root: SymPoly,
    pub multiplicity: SymPoly,
}

#[derive(Debug, Clone)]
pub enum TreeFormula {
    /// `G^{xyz}` is disconnected for every base graph.
    Disconnected,
    Product {
        /// `∏ base^exponent`; exponents may evaluate negative.
        prefactor: Vec<(SymPoly, SymPoly)>,
        /// Whether `t(G)` is a factor.
        base_trees: bool,
        /// `g(t)`; absent means no per-eigenvalue product.
        per_eigenvalue: Option<SymPoly>,
    },
}

#[derive(Debug, Clone)]
pub struct FormulaEntry {
    pub code: XyzCode,
    pub scalar_factors: Vec<ScalarFactor>,
    /// `F(λ, t)`, at most quadratic in `λ`.
    pub eigen_factor: Option<SymPoly>,
    pub tree_formula: TreeFormula,
}

impl FormulaEntry {
    /// Degree of `F` in `λ` (0 when there is no per-eigenvalue factor).
    pub fn eigen_degree(&self) -> u32 {
        self.eigen_factor
            .as_ref()
            .map_or(0, |f| f.degree_in(Var::Lam))
    }

    /// Total `λ`-degree as a polynomial in the graph symbols; equals `n + m`
    /// after `s` is expanded.
    pub fn total_degree(&self) -> SymPoly {
        let scalars = self
            .scalar_factors
            .iter()
            .fold(SymPoly::default(), |acc, f| acc.add(&f.multiplicity));
        let per =
            SymPoly::constant(self.eigen_degree() as i64).mul(&SymPoly::parse("n-1").unwrap());
        scalars.add(&per)
    }
}

struct Row {
    code: &'static str,
    scalars: &'static [(&'static str, &'static str)],
    f: Option<&'static str>,
    tree: Tree,
}

enum Tree {
    Zero,
    /// prefactor, includes t(G), per-eigenvalue g
    Prod(
        &'static [(&'static str, &'static str)],
        bool,
        Option<&'static str>,
    ),
}

use Tree::{Prod, Zero};

const Z_PLUS: &[(&str, &str)] = &[("0", "1"), ("r+2", "1")];
const Z_MINUS: &[(&str, &str)] = &[("0", "1"), ("s-r-2", "1")];

macro_rules! with_bulk {
    ($head:expr, $bulk:literal) => {
        &[$head[0], $head[1], ($bulk, "m-n")]
    };
}

#[rustfmt::skip]
const ROWS: &[Row] = &[
    // z = 0
    Row { code: "000", scalars: &[("0", "m+n")], f: None, tree: Zero },
    Row { code: "100", scalars: &[("0", "m+1"), ("n", "n-1")], f: None, tree: Zero },
    Row { code: "+00", scalars: &[("0", "m+1")], f: Some("lam-t"), tree: Zero },
    Row { code: "-00", scalars: &[("0", "m+1")], f: Some("lam-n+t"), tree: Zero },
    Row { code: "010", scalars: &[("0", "n+1"), ("m", "m-1")], f: None, tree: Zero },
    Row { code: "110", scalars: &[("0", "2"), ("m", "m-1"), ("n", "n-1")], f: None, tree: Zero },
    Row { code: "+10", scalars: &[("0", "2"), ("m", "m-1")], f: Some("lam-t"), tree: Zero },
    Row { code: "-10", scalars: &[("0", "2"), ("m", "m-1")], f: Some("lam-n+t"), tree: Zero },
    Row { code: "0+0", scalars: &[("0", "n+1"), ("2*r", "m-n")], f: Some("lam-t"), tree: Zero },
    Row { code: "1+0", scalars: &[("0", "2"), ("n", "n-1"), ("2*r", "m-n")], f: Some("lam-t"), tree: Zero },
    Row { code: "++0", scalars: &[("0", "2"), ("2*r", "m-n")], f: Some("(lam-t)^2"), tree: Zero },
    Row { code: "-+0", scalars: &[("0", "2"), ("2*r", "m-n")], f: Some("(lam-n+t)*(lam-t)"), tree: Zero },
    Row { code: "0-0", scalars: &[("0", "n+1"), ("m-2*r", "m-n")], f: Some("lam-m+t"), tree: Zero },
    Row { code: "1-0", scalars: &[("0", "2"), ("n", "n-1"), ("m-2*r", "m-n")], f: Some("lam-m+t"), tree: Zero },
    Row { code: "+-0", scalars: &[("0", "2"), ("m-2*r", "m-n")], f: Some("(lam-m+t)*(lam-t)"), tree: Zero },
    Row { code: "--0", scalars: &[("0", "2"), ("m-2*r", "m-n")], f: Some("(lam-m+t)*(lam-n+t)"), tree: Zero },
    // z = 1
    Row { code: "001", scalars: &[("0", "1"), ("s", "1"), ("n", "m-1"), ("m", "n-1")], f: None,
          tree: Prod(&[("n", "m-1"), ("m", "n-1")], false, None) },
    Row { code: "101", scalars: &[("0", "1"), ("s", "n"), ("n", "m-1")], f: None,
          tree: Prod(&[("n", "m-1"), ("s", "n-1")], false, None) },
    Row { code: "+01", scalars: &[("0", "1"), ("s", "1"), ("n", "m-1")], f: Some("lam-m-t"),
          tree: Prod(&[("n", "m-1")], false, Some("m+t")) },
    Row { code: "-01", scalars: &[("0", "1"), ("s", "1"), ("n", "m-1")], f: Some("lam-s+t"),
          tree: Prod(&[("n", "m-1")], false, Some("s-t")) },
    Row { code: "011", scalars: &[("0", "1"), ("s", "m"), ("m", "n-1")], f: None,
          tree: Prod(&[("s", "m-1"), ("m", "n-1")], false, None) },
    Row { code: "111", scalars: &[("0", "1"), ("s", "s-1")], f: None,
          tree: Prod(&[("s", "s-2")], false, None) },
    Row { code: "+11", scalars: &[("0", "1"), ("s", "m")], f: Some("lam-m-t"),
          tree: Prod(&[("s", "m-1")], false, Some("m+t")) },
    Row { code: "-11", scalars: &[("0", "1"), ("s", "m")], f: Some("lam-s+t"),
          tree: Prod(&[("s", "m-1")], false, Some("s-t")) },
    Row { code: "0+1", scalars: &[("0", "1"), ("s", "1"), ("m", "n-1"), ("n+2*r", "m-n")], f: Some("lam-n-t"),
          tree: Prod(&[("m", "n-1"), ("n+2*r", "m-n")], false, Some("n+t")) },
    Row { code: "1+1", scalars: &[("0", "1"), ("s", "n"), ("n+2*r", "m-n")], f: Some("lam-n-t"),
          tree: Prod(&[("s", "n-1"), ("n+2*r", "m-n")], false, Some("n+t")) },
    Row { code: "++1", scalars: &[("0", "1"), ("s", "1"), ("n+2*r", "m-n")], f: Some("(lam-m-t)*(lam-n-t)"),
          tree: Prod(&[("n+2*r", "m-n")], false, Some("(m+t)*(n+t)")) },
    Row { code: "-+1", scalars: &[("0", "1"), ("s", "1"), ("n+2*r", "m-n")], f: Some("(lam-n-t)*(lam-s+t)"),
          tree: Prod(&[("n+2*r", "m-n")], false, Some("(n+t)*(s-t)")) },
    Row { code: "0-1", scalars: &[("0", "1"), ("s", "1"), ("m", "n-1"), ("s-2*r", "m-n")], f: Some("lam-s+t"),
          tree: Prod(&[("m", "n-1"), ("s-2*r", "m-n")], false, Some("s-t")) },
    Row { code: "1-1", scalars: &[("0", "1"), ("s", "n"), ("s-2*r", "m-n")], f: Some("lam-s+t"),
          tree: Prod(&[("s", "n-1"), ("s-2*r", "m-n")], false, Some("s-t")) },
    Row { code: "+-1", scalars: &[("0", "1"), ("s", "1"), ("s-2*r", "m-n")], f: Some("(lam-s+t)*(lam-m-t)"),
          tree: Prod(&[("s-2*r", "m-n")], false, Some("(s-t)*(m+t)")) },
    Row { code: "--1", scalars: &[("0", "1"), ("s", "1"), ("s-2*r", "m-n")], f: Some("(lam-s+t)^2"),
          tree: Prod(&[("s-2*r", "m-n")], false, Some("(s-t)^2")) },
    // z = +
    Row { code: "00+", scalars: with_bulk!(Z_PLUS, "2"), f: Some("lam^2-lam*(r+2)+t"),
          tree: Prod(&[("n", "1"), ("s", "-1"), ("r+2", "1"), ("2", "m-n")], true, None) },
    Row { code: "10+", scalars: with_bulk!(Z_PLUS, "2"), f: Some("(lam-2)*(lam-n-r)-2*r+t"),
          tree: Prod(&[("s", "-1"), ("r+2", "1"), ("2", "m-n")], false, Some("2*n+t")) },
    Row { code: "+0+", scalars: with_bulk!(Z_PLUS, "2"), f: Some("(lam-2)*(lam-r-t)-2*r+t"),
          tree: Prod(&[("n", "1"), ("s", "-1"), ("r+2", "1"), ("2", "m-n"), ("3", "n-1")], true, None) },
    Row { code: "-0+", scalars: with_bulk!(Z_PLUS, "2"), f: Some("(lam-2)*(lam-n-r+t)-2*r+t"),
          tree: Prod(&[("s", "-1"), ("r+2", "1"), ("2", "m-n")], false, Some("2*n-t")) },
    Row { code: "01+", scalars: with_bulk!(Z_PLUS, "m+2"), f: Some("(lam-r)*(lam-m-2)-2*r+t"),
          tree: Prod(&[("s", "-1"), ("r+2", "1"), ("m+2", "m-n")], false, Some("m*r+t")) },
    Row { code: "11+", scalars: with_bulk!(Z_PLUS, "m+2"), f: Some("(lam-n-r)*(lam-m-2)-2*r+t"),
          tree: Prod(&[("s", "-1"), ("r+2", "1"), ("m+2", "m-n")], false, Some("m*n+2*n+m*r+t")) },
    Row { code: "+1+", scalars: with_bulk!(Z_PLUS, "m+2"), f: Some("(lam-r-t)*(lam-m-2)-2*r+t"),
          tree: Prod(&[("s", "-1"), ("r+2", "1"), ("m+2", "m-n")], false, Some("m*r+m*t+3*t")) },
    Row { code: "-1+", scalars: with_bulk!(Z_PLUS, "m+2"), f: Some("(lam-n-r+t)*(lam-m-2)-2*r+t"),
          tree: Prod(&[("s", "-1"), ("r+2", "1"), ("m+2", "m-n")], false, Some("m*r+m*n+2*n-m*t-t")) },
    Row { code: "0++", scalars: with_bulk!(Z_PLUS, "2*r+2"), f: Some("(lam-r)*(lam-2-t)-2*r+t"),
          tree: Prod(&[("n", "1"), ("s", "-1"), ("r+2", "1"), ("2", "m-n"), ("r+1", "m-1")], true, None) },
    Row { code: "1++", scalars: with_bulk!(Z_PLUS, "2*r+2"), f: Some("(lam-n-r)*(lam-2-t)-2*r+t"),
          tree: Prod(&[("s", "-1"), ("r+2", "1"), ("2*r+2", "m-n")], false, Some("2*n+t*(n+r+1)")) },
    Row { code: "+++", scalars: with_bulk!(Z_PLUS, "2*r+2"), f: Some("(lam-r-t)*(lam-2-t)-2*r+t"),
          tree: Prod(&[("n", "1"), ("s", "-1"), ("r+2", "1"), ("2*r+2", "m-n")], true, Some("r+3+t")) },
    Row { code: "-++", scalars: with_bulk!(Z_PLUS, "2*r+2"), f: Some("(lam-n-r+t)*(lam-2-t)-2*r+t"),
          tree: Prod(&[("s", "-1"), ("r+2", "1"), ("2*r+2", "m-n")], false, Some("2*n+t*(n+r-1-t)")) },
    Row { code: "0-+", scalars: with_bulk!(Z_PLUS, "m-2*r+2"), f: Some("(lam-r)*(lam-m-2+t)-2*r+t"),
          tree: Prod(&[("s", "-1"), ("r+2", "1"), ("m-2*r+2", "m-n")], false, Some("m*r-t*r+t")) },
    Row { code: "1-+", scalars: with_bulk!(Z_PLUS, "m-2*r+2"), f: Some("(lam-n-r)*(lam-m-2+t)-2*r+t"),
          tree: Prod(&[("s", "-1"), ("r+2", "1"), ("m-2*r+2", "m-n")], false, Some("m*n+2*n+m*r-t*(n+r-1)")) },
    Row { code: "+-+", scalars: with_bulk!(Z_PLUS, "m-2*r+2"), f: Some("(lam-r-t)*(lam-m-2+t)-2*r+t"),
          tree: Prod(&[("s", "-1"), ("r+2", "1"), ("m-2*r+2", "m-n")], false, Some("m*r+t*(m-r+3-t)")) },
    Row { code: "--+", scalars: with_bulk!(Z_PLUS, "m-2*r+2"), f: Some("(lam-n-r+t)*(lam-m-2+t)-2*r+t"),
          tree: Prod(&[("s", "-1"), ("r+2", "1"), ("m-2*r+2", "m-n")], false, Some("m*n+2*n+m*r+t*(t-m-n-r-1)")) },
    // z = -
    Row { code: "00-", scalars: with_bulk!(Z_MINUS, "n-2"), f: Some("(lam-m+r)*(lam-n+2)-2*r+t"),
          tree: Prod(&[("s", "-1"), ("s-r-2", "1"), ("n-2", "m-n")], false, Some("m*n-n*r-2*m+t")) },
    Row { code: "10-", scalars: with_bulk!(Z_MINUS, "n-2"), f: Some("(lam-s+r)*(lam-n+2)-2*r+t"),
          tree: Prod(&[("s", "-1"), ("s-r-2", "1"), ("n-2", "m-n")], false, Some("n*s-n*r-2*s+t")) },
    Row { code: "+0-", scalars: with_bulk!(Z_MINUS, "n-2"), f: Some("(lam-m+r-t)*(lam-n+2)-2*r+t"),
          tree: Prod(&[("s", "-1"), ("s-r-2", "1"), ("n-2", "m-n")], false, Some("m*n-n*r-2*m+n*t-t")) },
    Row { code: "-0-", scalars: with_bulk!(Z_MINUS, "n-2"), f: Some("(lam-s+r+t)*(lam-n+2)-2*r+t"),
          tree: Prod(&[("s", "-1"), ("s-r-2", "1"), ("n-2", "m-n")], false, Some("n*s-n*r-2*s-n*t+3*t")) },
    Row { code: "01-", scalars: with_bulk!(Z_MINUS, "s-2"), f: Some("(lam-s+2)*(lam-m+r)-2*r+t"),
          tree: Prod(&[("s", "-1"), ("s-r-2", "1"), ("s-2", "m-n")], false, Some("m*s-r*s-2*m+t")) },
    Row { code: "11-", scalars: with_bulk!(Z_MINUS, "s-2"), f: Some("(lam-s)*(lam-s+r+2)+t"),
          tree: Prod(&[("s", "-1"), ("s-r-2", "1"), ("s-2", "m-n")], false, Some("s*(s-r-2)+t")) },
    Row { code: "+1-", scalars: with_bulk!(Z_MINUS, "s-2"), f: Some("(lam-s+2)*(lam-m+r-t)-2*r+t"),
          tree: Prod(&[("s", "-1"), ("s-r-2", "1"), ("s-2", "m-n")], false, Some("s*(m-r+t)-2*m-t")) },
    Row { code: "-1-", scalars: with_bulk!(Z_MINUS, "s-2"), f: Some("(lam-s+2)*(lam-s+r+t)-2*r+t"),
          tree: Prod(&[("s", "-1"), ("s-r-2", "1"), ("s-2", "m-n")], false, Some("s*(s-r-t-2)+3*t")) },
    Row { code: "0+-", scalars: with_bulk!(Z_MINUS, "n+2*r-2"), f: Some("(lam-m+r)*(lam-n+2-t)-2*r+t"),
          tree: Prod(&[("s", "-1"), ("s-r-2", "1"), ("n+2*r-2", "m-n")], false, Some("(m-r)*(n+t)-2*m+t")) },
    Row { code: "1+-", scalars: with_bulk!(Z_MINUS, "n+2*r-2"), f: Some("(lam-s+r)*(lam-n+2-t)-2*r+t"),
          tree: Prod(&[("s", "-1"), ("s-r-2", "1"), ("n+2*r-2", "m-n")], false, Some("(s-r)*(n+t)-2*s+t")) },
    Row { code: "++-", scalars: with_bulk!(Z_MINUS, "n+2*r-2"), f: Some("(lam-m+r-t)*(lam-n+2-t)-2*r+t"),
          tree: Prod(&[("s", "-1"), ("s-r-2", "1"), ("n+2*r-2", "m-n")], false, Some("(m-r+t)*(n+t)-2*m-t")) },
    Row { code: "-+-", scalars: with_bulk!(Z_MINUS, "n+2*r-2"), f: Some("(lam-s+r+t)*(lam-n+2-t)-2*r+t"),
          tree: Prod(&[("s", "-1"), ("s-r-2", "1"), ("n+2*r-2", "m-n")], false, Some("(s-r-t)*(n+t)-2*s+3*t")) },
    Row { code: "0--", scalars: with_bulk!(Z_MINUS, "s-2*r-2"), f: Some("(lam-m+r)*(lam-s+2+t)-2*r+t"),
          tree: Prod(&[("s", "-1"), ("s-r-2", "1"), ("s-2*r-2", "m-n")], false, Some("(m-r)*(s-t)-2*m+t")) },
    Row { code: "1--", scalars: with_bulk!(Z_MINUS, "s-2*r-2"), f: Some("(lam-s+r)*(lam-s+2+t)-2*r+t"),
          tree: Prod(&[("s", "-1"), ("s-r-2", "1"), ("s-2*r-2", "m-n")], false, Some("(s-r)*(s-t)-2*s+t")) },
    Row { code: "+--", scalars: with_bulk!(Z_MINUS, "s-2*r-2"), f: Some("(lam-m+r-t)*(lam-s+2+t)-2*r+t"),
          tree: Prod(&[("s", "-1"), ("s-r-2", "1"), ("s-2*r-2", "m-n")], false, Some("(m-r+t)*(s-t)-2*m-t")) },
    Row { code: "---", scalars: with_bulk!(Z_MINUS, "s-2*r-2"), f: Some("(lam-s+r+t)*(lam-s+2+t)-2*r+t"),
          tree: Prod(&[("s", "-1"), ("s-r-2", "1"), ("s-2*r-2", "m-n")], false, Some("(s-r-t)*(s-t)-2*s+3*t")) },
];

fn parse(src: &str) -> SymPoly {
    SymPoly::parse(src).unwrap_or_else(|e| panic!("registry expression {src:?}: {e}"))
}

fn build(row: &Row) -> FormulaEntry {
    let tree_formula = match row.tree {
        Zero => TreeFormula::Disconnected,
        Prod(prefactor, base_trees, g) => TreeFormula::Product {
            prefactor: prefactor
                .iter()
                .map(|(b, e)| (parse(b), parse(e)))
                .collect(),
            base_trees,
            per_eigenvalue: g.map(parse),
        },
    };
    FormulaEntry {
        code: row.code.parse().expect("registry codes are well formed"),
        scalar_factors: row
            .scalars
            .iter()
            .map(|&(root, mult)| ScalarFactor {
                root: parse(root),
                multiplicity: parse(mult),
            })
            .collect(),
        eigen_factor: row.f.map(parse),
        tree_formula,
    }
}

fn table() -> &'static [FormulaEntry] {
    static TABLE: OnceLock<Vec<FormulaEntry>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut entries: Vec<FormulaEntry> = ROWS.iter().map(build).collect();
        entries.sort_by_key(|e| e.code.index());
        entries
    })
}

pub fn registry(code: XyzCode) -> &'static FormulaEntry {
    &table()[code.index()]
}

/// All entries in [`XyzCode::all`] order.
pub fn all_entries() -> &'static [FormulaEntry] {
    table()
}

#[derive(Debug, Clone, Serialize)]
pub struct ScalarRecord {
    pub root: String,
    pub multiplicity: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct EntryRecord {
    pub code: XyzCode,
    pub scalar_factors: Vec<ScalarRecord>,
    /// `F` as written, or `null`.
    pub eigen_factor: Option<String>,
    /// Coefficients of `lam^0, lam^1, …` in `t, n, m, r, s`.
    pub eigen_factor_coefficients: Vec<String>,
    pub tree_formula: TreeRecord,
}

#[derive(Debug, Clone, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum TreeRecord {
    Disconnected,
    Product {
        prefactor: Vec<ScalarRecord>,
        base_trees: bool,
        per_eigenvalue: Option<String>,
    },
}

impl FormulaEntry {
    pub fn to_record(&self) -> EntryRecord {
        let scalar = |b: &SymPoly, e: &SymPoly| ScalarRecord {
            root: b.to_string(),
            multiplicity: e.to_string(),
        };
        EntryRecord {
            code: self.code,
            scalar_factors: self
                .scalar_factors
                .iter()
                .map(|f| scalar(&f.root, &f.multiplicity))
                .collect(),
            eigen_factor: self.eigen_factor.as_ref().map(ToString::to_string),
            eigen_factor_coefficients: self
                .eigen_factor
                .as_ref()
                .map(|f| {
                    f.coefficients_in(Var::Lam)
                        .iter()
                        .map(ToString::to_string)
                        .collect()
                })
                .unwrap_or_default(),
            tree_formula: match &self.tree_formula {
                TreeFormula::Disconnected => TreeRecord::Disconnected,
                TreeFormula::Product {
                    prefactor,
                    base_trees,
                    per_eigenvalue,
                    ..
                } => TreeRecord::Product {
                    prefactor: prefactor
                        .iter()
                        .map(|(b, e)| ScalarRecord {
                            root: b.to_string(),
                            multiplicity: e.to_string(),
                        })
                        .collect(),
                    base_trees: *base_trees,
                    per_eigenvalue: per_eigenvalue.as_ref().map(ToString::to_string),
                },
            },
        }
    }
}

/// The full catalogue as JSON records in code order.
pub fn export_json() -> Result<String, FormulaError> {
    let records: Vec<EntryRecord> = all_entries().iter().map(FormulaEntry::to_record).collect();
    serde_json::to_string_pretty(&records).map_err(|e| FormulaError::Parse(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_code_present_once() {
        assert_eq!(ROWS.len(), 64);
        for (i, code) in XyzCode::all().into_iter().enumerate() {
            assert_eq!(all_entries()[i].code, code);
            assert_eq!(registry(code).code, code);
        }
    }

    #[test]
    fn total_degree_is_order() {
        let s = SymPoly::parse("n+m").unwrap();
        for e in all_entries() {
            assert_eq!(e.total_degree().expand_s(), s, "{}", e.code);
            assert!(e.eigen_degree() <= 2, "{}", e.code);
        }
    }

    #[test]
    fn total_graph_row() {
        let e = registry("+++".parse().unwrap());
        assert_eq!(
            e.eigen_factor,
            Some(SymPoly::parse("(lam-r-t)*(lam-2-t)-2*r+t").unwrap())
        );
        let roots: Vec<String> = e
            .scalar_factors
            .iter()
            .map(|f| f.root.to_string())
            .collect();
        assert_eq!(roots, ["0", "r + 2", "2*r + 2"]);
        let e = registry("111".parse().unwrap());
        assert!(e.eigen_factor.is_none());
        assert_eq!(e.scalar_factors[1].multiplicity.to_string(), "s - 1");
    }

    #[test]
    fn disconnected_exactly_for_z_zero() {
        for e in all_entries() {
            let disconnected = matches!(e.tree_formula, TreeFormula::Disconnected);
            assert_eq!(
                disconnected,
                e.code.z == crate::transform::Part::Zero,
                "{}",
                e.code
            );
        }
    }
}
