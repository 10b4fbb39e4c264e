//! Multivariate integer polynomials over the registry symbols, and the small
//! expression language the registry rows are written in.
//!
//! Grammar: `expr := term (('+'|'-') term)*`, `term := unary ('*' unary)*`,
//! `unary := '-' unary | power`, `power := atom ('^' uint)?`,
//! `atom := uint | ident | '(' expr ')'`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::FormulaError;
use crate::algebra::IntPoly;

/// Registry symbols. `t` stands for a base eigenvalue `λ_i`; `s = n + m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Var {
    Lam,
    T,
    N,
    M,
    R,
    S,
}

impl Var {
    const ALL: [Var; 6] = [Var::Lam, Var::T, Var::N, Var::M, Var::R, Var::S];

    fn name(self) -> &'static str {
        match self {
            Var::Lam => "lam",
            Var::T => "t",
            Var::N => "n",
            Var::M => "m",
            Var::R => "r",
            Var::S => "s",
        }
    }

    fn from_name(s: &str) -> Option<Var> {
        Var::ALL.into_iter().find(|v| v.name() == s)
    }

    fn slot(self) -> usize {
        self as usize
    }
}

/// Graph parameters the symbols `n, m, r, s` are bound to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Params {
    pub n: i64,
    pub m: i64,
    pub r: i64,
}

impl Params {
    pub fn new(n: usize, m: usize, r: usize) -> Self {
        Params {
            n: n as i64,
            m: m as i64,
            r: r as i64,
        }
    }

    pub fn s(&self) -> i64 {
        self.n + self.m
    }

    fn value(&self, v: Var) -> Option<i64> {
        match v {
            Var::N => Some(self.n),
            Var::M => Some(self.m),
            Var::R => Some(self.r),
            Var::S => Some(self.s()),
            Var::Lam | Var::T => None,
        }
    }
}

type Exponents = [u32; 6];

/// Sparse polynomial: exponent vector (indexed by [`Var`]) to coefficient.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SymPoly {
    terms: BTreeMap<Exponents, BigInt>,
}

impl SymPoly {
    pub fn constant(c: i64) -> Self {
        let mut p = SymPoly::default();
        p.add_term([0; 6], BigInt::from(c));
        p
    }

    pub fn var(v: Var) -> Self {
        let mut e = [0; 6];
        e[v.slot()] = 1;
        let mut p = SymPoly::default();
        p.add_term(e, BigInt::one());
        p
    }

    pub fn parse(src: &str) -> Result<Self, FormulaError> {
        let tokens = tokenize(src)?;
        let mut parser = Parser {
            tokens: &tokens,
            pos: 0,
            src,
        };
        let p = parser.expr()?;
        if parser.pos != tokens.len() {
            return Err(parser.error("trailing input"));
        }
        Ok(p)
    }

    fn add_term(&mut self, e: Exponents, c: BigInt) {
        let slot = self.terms.entry(e).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree_in(&self, v: Var) -> u32 {
        self.terms.keys().map(|e| e[v.slot()]).max().unwrap_or(0)
    }

    pub fn add(&self, other: &SymPoly) -> SymPoly {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, c.clone());
        }
        out
    }

    pub fn neg(&self) -> SymPoly {
        SymPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }

    pub fn sub(&self, other: &SymPoly) -> SymPoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &SymPoly) -> SymPoly {
        let mut out = SymPoly::default();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let mut e = *ea;
                for k in 0..6 {
                    e[k] += eb[k];
                }
                out.add_term(e, ca * cb);
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> SymPoly {
        (0..k).fold(SymPoly::constant(1), |acc, _| acc.mul(self))
    }

    /// Replaces `s` by `n + m`.
    pub fn expand_s(&self) -> SymPoly {
        let s = SymPoly::var(Var::N).add(&SymPoly::var(Var::M));
        let mut out = SymPoly::default();
        for (e, c) in &self.terms {
            let mut rest = *e;
            rest[Var::S.slot()] = 0;
            let mut term = SymPoly::default();
            term.add_term(rest, c.clone());
            out = out.add(&term.mul(&s.pow(e[Var::S.slot()])));
        }
        out
    }

    /// Coefficients of `v^0, v^1, …` as polynomials in the remaining symbols.
    pub fn coefficients_in(&self, v: Var) -> Vec<SymPoly> {
        let mut out = vec![SymPoly::default(); self.degree_in(v) as usize + 1];
        for (e, c) in &self.terms {
            let mut rest = *e;
            rest[v.slot()] = 0;
            out[e[v.slot()] as usize].add_term(rest, c.clone());
        }
        out
    }

    /// Binds `n, m, r, s`; the result is indexed by the power of `lam`, each
    /// entry an integer polynomial in `t`.
    pub fn bind(&self, p: &Params) -> Vec<IntPoly> {
        let lam_degree = self.degree_in(Var::Lam) as usize;
        let t_degree = self.degree_in(Var::T) as usize;
        let mut grid = vec![vec![BigInt::zero(); t_degree + 1]; lam_degree + 1];
        for (e, c) in &self.terms {
            let mut value = c.clone();
            for v in [Var::N, Var::M, Var::R, Var::S] {
                value *= BigInt::from(p.value(v).unwrap()).pow(e[v.slot()]);
            }
            grid[e[Var::Lam.slot()] as usize][e[Var::T.slot()] as usize] += value;
        }
        grid.into_iter().map(IntPoly::new).collect()
    }

    /// Value of an expression free of `lam` and `t`.
    pub fn eval_int(&self, p: &Params) -> Result<BigInt, FormulaError> {
        if self.degree_in(Var::Lam) > 0 || self.degree_in(Var::T) > 0 {
            return Err(FormulaError::Parse(format!("{self} depends on lam or t")));
        }
        let bound = self.bind(p);
        Ok(bound.first().map(|q| q.coeff(0)).unwrap_or_default())
    }

    pub fn eval_i64(&self, p: &Params) -> Result<i64, FormulaError> {
        self.eval_int(p)?
            .to_i64()
            .ok_or_else(|| FormulaError::Parse(format!("{self} overflows i64")))
    }
}

impl fmt::Display for SymPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // graded order, lam and t first
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|(a, _), (b, _)| {
            let total = |e: &Exponents| e.iter().sum::<u32>();
            total(b).cmp(&total(a)).then_with(|| b.cmp(a))
        });
        for (k, (e, c)) in terms.into_iter().enumerate() {
            let monomial: Vec<String> = Var::ALL
                .iter()
                .filter(|v| e[v.slot()] > 0)
                .map(|v| match e[v.slot()] {
                    1 => v.name().to_string(),
                    p => format!("{}^{p}", v.name()),
                })
                .collect();
            let magnitude = c.abs();
            let body = match (monomial.is_empty(), magnitude.is_one()) {
                (true, _) => magnitude.to_string(),
                (false, true) => monomial.join("*"),
                (false, false) => format!("{magnitude}*{}", monomial.join("*")),
            };
            match (k, c.is_negative()) {
                (0, true) => write!(f, "-{body}")?,
                (0, false) => write!(f, "{body}")?,
                (_, true) => write!(f, " - {body}")?,
                (_, false) => write!(f, " + {body}")?,
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Num(u64),
    Ident(String),
    Op(char),
}

fn tokenize(src: &str) -> Result<Vec<Token>, FormulaError> {
    let mut out = Vec::new();
    let mut chars = src.chars().peekable();
    while let Some(&c) = chars.peek() {
        if c.is_whitespace() {
            chars.next();
        } else if c.is_ascii_digit() {
            let mut v = 0u64;
            while let Some(d) = chars.peek().and_then(|c| c.to_digit(10)) {
                v = v * 10 + d as u64;
                chars.next();
            }
            out.push(Token::Num(v));
        } else if c.is_ascii_alphabetic() {
            let mut name = String::new();
            while let Some(&c) = chars.peek().filter(|c| c.is_ascii_alphanumeric()) {
                name.push(c);
                chars.next();
            }
            out.push(Token::Ident(name));
        } else if "+-*^()".contains(c) {
            out.push(Token::Op(c));
            chars.next();
        } else {
            return Err(FormulaError::Parse(format!("unexpected {c:?} in {src:?}")));
        }
    }
    Ok(out)
}

struct Parser<'a> {
    tokens: &'a [Token],
    pos: usize,
    src: &'a str,
}

impl Parser<'_> {
    fn error(&self, what: &str) -> FormulaError {
        FormulaError::Parse(format!("{what} at token {} in {:?}", self.pos, self.src))
    }

    fn peek_op(&self) -> Option<char> {
        match self.tokens.get(self.pos) {
            Some(Token::Op(c)) => Some(*c),
            _ => None,
        }
    }

    fn expr(&mut self) -> Result<SymPoly, FormulaError> {
        let mut acc = self.term()?;
        while let Some(op @ ('+' | '-')) = self.peek_op() {
            self.pos += 1;
            let rhs = self.term()?;
            acc = if op == '+' {
                acc.add(&rhs)
            } else {
                acc.sub(&rhs)
            };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<SymPoly, FormulaError> {
        let mut acc = self.unary()?;
        while self.peek_op() == Some('*') {
            self.pos += 1;
            acc = acc.mul(&self.unary()?);
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<SymPoly, FormulaError> {
        if self.peek_op() == Some('-') {
            self.pos += 1;
            return Ok(self.unary()?.neg());
        }
        self.power()
    }

    fn power(&mut self) -> Result<SymPoly, FormulaError> {
        let base = self.atom()?;
        if self.peek_op() != Some('^') {
            return Ok(base);
        }
        self.pos += 1;
        match self.tokens.get(self.pos) {
            Some(Token::Num(k)) => {
                self.pos += 1;
                let k = u32::try_from(*k).map_err(|_| self.error("exponent too large"))?;
                Ok(base.pow(k))
            }
            _ => Err(self.error("expected an integer exponent")),
        }
    }

    fn atom(&mut self) -> Result<SymPoly, FormulaError> {
        let token = self.tokens.get(self.pos).cloned();
        self.pos += 1;
        match token {
            Some(Token::Num(v)) => {
                let v = i64::try_from(v).map_err(|_| self.error("literal too large"))?;
                Ok(SymPoly::constant(v))
            }
            Some(Token::Ident(name)) => Var::from_name(&name)
                .map(SymPoly::var)
                .ok_or_else(|| self.error(&format!("unknown symbol {name:?}"))),
            Some(Token::Op('(')) => {
                let inner = self.expr()?;
                if self.peek_op() != Some(')') {
                    return Err(self.error("expected ')'"));
                }
                self.pos += 1;
                Ok(inner)
            }
            _ => {
                self.pos -= 1;
                Err(self.error("expected a number, symbol or '('"))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> SymPoly {
        SymPoly::parse(s).unwrap()
    }

    #[test]
    fn parses_and_normalises() {
        assert_eq!(p("(lam-t)^2"), p("lam*lam - 2*lam*t + t^2"));
        assert_eq!(p("-(r - 2) + r"), SymPoly::constant(2));
        assert_eq!(p("s - n - m").expand_s(), SymPoly::default());
        assert_eq!(p("lam - s + t").to_string(), "lam + t - s");
        assert_eq!(p("2 - 2").to_string(), "0");
    }

    #[test]
    fn rejects_malformed() {
        for bad in ["", "lam +", "(lam", "lam)", "x", "2^lam", "lam $ 2", "3 4"] {
            assert!(SymPoly::parse(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn binds_graph_parameters() {
        // (lam - r - t)(lam - 2 - t) - 2r + t on C4: n = m = 4, r = 2
        let f = p("(lam-r-t)*(lam-2-t)-2*r+t");
        let bound = f.bind(&Params::new(4, 4, 2));
        assert_eq!(bound.len(), 3);
        assert_eq!(bound[2], IntPoly::from_i64(&[1]));
        assert_eq!(bound[1], IntPoly::from_i64(&[-4, -2]));
        assert_eq!(bound[0], IntPoly::from_i64(&[0, 5, 1]));
        assert_eq!(
            p("s^2 - 2*n*r").eval_i64(&Params::new(5, 5, 2)).unwrap(),
            80
        );
        assert!(p("lam").eval_int(&Params::new(3, 3, 2)).is_err());
    }

    #[test]
    fn coefficient_split() {
        let f = p("lam^2 - lam*(r+2) + t");
        let c = f.coefficients_in(Var::Lam);
        assert_eq!(c.len(), 3);
        assert_eq!(c[0], p("t"));
        assert_eq!(c[1], p("-r-2"));
        assert_eq!(c[2], SymPoly::constant(1));
    }
}
