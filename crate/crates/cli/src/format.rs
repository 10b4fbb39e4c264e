//! Text rendering shared by the subcommands.

use std::str::FromStr;

use xyz_spectra::algebra::Spectrum;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Pretty,
    Json,
    Csv,
}

/// Values this close to 0 print as `0`.
const ZERO_SNAP: f64 = 1e-12;

/// `x` rounded to 12 significant digits, without trailing zeros.
pub fn num(x: f64) -> String {
    if !x.is_finite() {
        return x.to_string();
    }
    if x.abs() < ZERO_SNAP {
        return "0".into();
    }
    let rounded = f64::from_str(&format!("{x:.11e}")).expect("formatted float parses");
    let mag = rounded.abs();
    if (1e-4..1e15).contains(&mag) {
        rounded.to_string()
    } else {
        format!("{rounded:e}")
    }
}

/// Deviations and tolerances, always in exponent form.
pub fn sci(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    let rounded = f64::from_str(&format!("{x:.11e}")).expect("formatted float parses");
    format!("{rounded:e}")
}

/// `6 ×2, 5.41421356237, …` from tolerance-clustered values.
pub fn clusters(sp: &Spectrum) -> String {
    sp.clusters()
        .iter()
        .map(|&(v, k)| {
            if k == 1 {
                num(v)
            } else {
                format!("{} ×{k}", num(v))
            }
        })
        .collect::<Vec<_>>()
        .join(", ")
}

/// Quotes a CSV field when needed.
pub fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn twelve_digits() {
        assert_eq!(num(2.0 + 2f64.sqrt()), "3.41421356237");
        assert_eq!(num(6.000000000000001), "6");
        assert_eq!(num(-4.4e-16), "0");
        assert_eq!(num(1234567.891234567), "1234567.89123");
        assert_eq!(sci(1.5e-15), "1.5e-15");
    }

    #[test]
    fn csv_quoting() {
        assert_eq!(csv_field("6 ×2, 4"), "\"6 ×2, 4\"");
        assert_eq!(csv_field("+++"), "+++");
    }
}
