//! Text renderings shared by the subcommands.

use sbo_core::exact::{fmt_pq, to_f64};
use sbo_core::poly::CoeffFormat;
use sbo_core::{AlphaScalar, Poly, PolyFamily, PolySerialization, Rational, Scalar};

/// `digits` significant digits, plain notation for moderate magnitudes.
pub fn fmt_float(x: f64, digits: usize) -> String {
    let digits = digits.max(1);
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let exp = x.abs().log10().floor() as i64;
    if (-5..15).contains(&exp) {
        let decimals = (digits as i64 - 1 - exp).max(0) as usize;
        trim_zeros(format!("{x:.decimals$}"))
    } else {
        let s = format!("{x:.*e}", digits - 1);
        match s.split_once('e') {
            Some((m, e)) => format!("{}e{e}", trim_zeros(m.to_string())),
            None => s,
        }
    }
}

fn trim_zeros(s: String) -> String {
    if !s.contains('.') {
        return s;
    }
    s.trim_end_matches('0').trim_end_matches('.').to_string()
}

/// Integers bare, everything else `p/q`.
pub fn exact_text(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        fmt_pq(r)
    }
}

/// Coefficient types the CLI can print and serialize.
pub trait Coefficient: Scalar + CoeffFormat {
    fn serialize(family: PolyFamily, i: Option<usize>, alpha: Option<&Rational>, p: &Poly<Self>) -> PolySerialization;
    /// Numeric view; `None` for a genuinely symbolic value.
    fn to_float(&self) -> Option<f64>;
    fn text(&self) -> String;
    fn json(&self) -> serde_json::Value;
}

impl Coefficient for Rational {
    fn serialize(family: PolyFamily, i: Option<usize>, alpha: Option<&Rational>, p: &Poly<Self>) -> PolySerialization {
        PolySerialization::rational(family, i, alpha, p)
    }
    fn to_float(&self) -> Option<f64> {
        Some(to_f64(self))
    }
    fn text(&self) -> String {
        exact_text(self)
    }
    fn json(&self) -> serde_json::Value {
        fmt_pq(self).into()
    }
}

impl Coefficient for AlphaScalar {
    fn serialize(family: PolyFamily, i: Option<usize>, _alpha: Option<&Rational>, p: &Poly<Self>) -> PolySerialization {
        PolySerialization::symbolic(family, i, p)
    }
    fn to_float(&self) -> Option<f64> {
        self.as_rational().map(|r| to_f64(&r))
    }
    fn text(&self) -> String {
        self.to_string()
    }
    fn json(&self) -> serde_json::Value {
        self.coeffs().iter().map(fmt_pq).collect::<Vec<_>>().into()
    }
}

/// Label used in pretty output, e.g. `P_{1;2}(x)` or `L_3(x)`.
pub fn label(family: PolyFamily, i: Option<usize>, n: usize) -> String {
    match (family, i) {
        (PolyFamily::HermiteSbo | PolyFamily::LaguerreSbo, Some(i)) => format!("P_{{{i};{n}}}(x)"),
        (PolyFamily::Laguerre, _) => format!("L_{n}(x)"),
        _ => format!("H_{n}(x)"),
    }
}

/// Label used in TeX output.
pub fn latex_label(family: PolyFamily, i: Option<usize>, n: usize) -> String {
    match (family, i) {
        (PolyFamily::HermiteSbo | PolyFamily::LaguerreSbo, Some(i)) => format!("\\widehat P_{{{i};{n}}}"),
        (PolyFamily::Laguerre, _) => format!("L_{{{n}}}^{{(\\alpha)}}"),
        _ => format!("H_{{{n}}}"),
    }
}

/// Display alignment block in the usual two-column table style.
pub fn latex_block(rows: &[(String, String)]) -> String {
    let mut out = String::from("$$\\eqalignno{\n");
    for (lhs, rhs) in rows {
        out.push_str(&format!("{lhs} &={rhs} \\cr\n"));
    }
    out.push_str("}$$\n");
    out
}

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
    use sbo_core::exact::rat;

    #[test]
    fn floats() {
        assert_eq!(fmt_float(0.5, 12), "0.5");
        assert_eq!(fmt_float(-2.5, 12), "-2.5");
        assert_eq!(fmt_float(1.0 / 3.0, 4), "0.3333");
        assert_eq!(fmt_float(123456.0, 3), "123456");
        assert_eq!(fmt_float(1.5e20, 3), "1.5e20");
        assert_eq!(fmt_float(0.0, 12), "0");
    }

    #[test]
    fn exact() {
        assert_eq!(exact_text(&rat(1, 8)), "1/8");
        assert_eq!(exact_text(&rat(19, 1)), "19");
    }

    #[test]
    fn quoting() {
        assert_eq!(csv_field("a,b"), "\"a,b\"");
        assert_eq!(csv_field("x"), "x");
    }
}
