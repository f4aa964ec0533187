//! Lossless interchange format for generated polynomials.
//!
//! Rationals are always written as `"p/q"` strings. A symbolic coefficient
//! is the list of its ascending α-power coefficients.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::exact::fmt_pq;
use crate::{AlphaScalar, Poly, Rational, Result, SboError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PolyFamily {
    HermiteSbo,
    LaguerreSbo,
    Hermite,
    Laguerre,
}

impl PolyFamily {
    pub fn name(self) -> &'static str {
        match self {
            PolyFamily::HermiteSbo => "hermite-sbo",
            PolyFamily::LaguerreSbo => "laguerre-sbo",
            PolyFamily::Hermite => "hermite",
            PolyFamily::Laguerre => "laguerre",
        }
    }

    pub fn is_sbo(self) -> bool {
        matches!(self, PolyFamily::HermiteSbo | PolyFamily::LaguerreSbo)
    }

    pub fn is_laguerre(self) -> bool {
        matches!(self, PolyFamily::LaguerreSbo | PolyFamily::Laguerre)
    }
}

impl fmt::Display for PolyFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for PolyFamily {
    type Err = SboError;

    fn from_str(s: &str) -> Result<Self> {
        [
            PolyFamily::HermiteSbo,
            PolyFamily::LaguerreSbo,
            PolyFamily::Hermite,
            PolyFamily::Laguerre,
        ]
        .into_iter()
        .find(|f| f.name() == s)
        .ok_or_else(|| SboError::InvalidParameter(format!("unknown family '{s}'")))
    }
}

/// One coefficient: a rational, or a polynomial in α.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Coeff {
    Rational(String),
    Symbolic(Vec<String>),
}

pub const SYMBOLIC: &str = "symbolic";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolySerialization {
    pub family: PolyFamily,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub i: Option<usize>,
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha: Option<String>,
    /// Ascending degree.
    pub coeffs: Vec<Coeff>,
}

fn parse_exact(s: &str) -> Result<Rational> {
    s.parse::<Rational>()
        .map_err(|_| SboError::InvalidParameter(format!("not a rational: '{s}'")))
}

impl PolySerialization {
    pub fn rational(family: PolyFamily, i: Option<usize>, alpha: Option<&Rational>, p: &Poly<Rational>) -> Self {
        PolySerialization {
            family,
            i,
            n: p.degree().unwrap_or(0),
            alpha: alpha.map(fmt_pq),
            coeffs: p.coeffs().iter().map(|c| Coeff::Rational(fmt_pq(c))).collect(),
        }
    }

    pub fn symbolic(family: PolyFamily, i: Option<usize>, p: &Poly<AlphaScalar>) -> Self {
        let coeffs = p
            .coeffs()
            .iter()
            .map(|c| Coeff::Symbolic(c.coeffs().iter().map(fmt_pq).collect()))
            .collect();
        PolySerialization {
            family,
            i,
            n: p.degree().unwrap_or(0),
            alpha: Some(SYMBOLIC.into()),
            coeffs,
        }
    }

    pub fn is_symbolic(&self) -> bool {
        self.alpha.as_deref() == Some(SYMBOLIC)
    }

    /// Numeric α, if one was recorded.
    pub fn alpha_value(&self) -> Result<Option<Rational>> {
        match self.alpha.as_deref() {
            None | Some(SYMBOLIC) => Ok(None),
            Some(s) => parse_exact(s).map(Some),
        }
    }

    pub fn to_rational_poly(&self) -> Result<Poly<Rational>> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| match c {
                Coeff::Rational(s) => parse_exact(s),
                Coeff::Symbolic(_) => Err(SboError::InvalidParameter(
                    "symbolic coefficient in numeric polynomial".into(),
                )),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Poly::new(coeffs))
    }

    /// Accepts numeric entries too, as constants in α.
    pub fn to_symbolic_poly(&self) -> Result<Poly<AlphaScalar>> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| match c {
                Coeff::Rational(s) => Ok(AlphaScalar::from_poly(Poly::constant(parse_exact(s)?))),
                Coeff::Symbolic(v) => {
                    let q = v.iter().map(|s| parse_exact(s)).collect::<Result<Vec<_>>>()?;
                    Ok(AlphaScalar::from_poly(Poly::new(q)))
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Poly::new(coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use proptest::prelude::*;

    #[test]
    fn json_shape() {
        let p = Poly::new(vec![rat(-1, 2), rat(0, 1), rat(1, 1)]);
        let s = PolySerialization::rational(PolyFamily::HermiteSbo, Some(1), None, &p);
        let json = serde_json::to_string(&s).unwrap();
        assert_eq!(
            json,
            r#"{"family":"hermite-sbo","i":1,"n":2,"coeffs":["-1/2","0/1","1/1"]}"#
        );
        let back: PolySerialization = serde_json::from_str(&json).unwrap();
        assert_eq!(back.to_rational_poly().unwrap(), p);
    }

    #[test]
    fn symbolic_round_trip() {
        let al = AlphaScalar::alpha();
        let p = crate::sbo_laguerre::closed(1, 3, &al).unwrap();
        let s = PolySerialization::symbolic(PolyFamily::LaguerreSbo, Some(1), &p);
        assert!(s.is_symbolic());
        assert_eq!(s.coeffs.last(), Some(&Coeff::Symbolic(vec!["1/1".into()])));
        let json = serde_json::to_string(&s).unwrap();
        let back: PolySerialization = serde_json::from_str(&json).unwrap();
        assert_eq!(back, s);
        assert_eq!(back.to_symbolic_poly().unwrap(), p);
        assert!(back.to_rational_poly().is_err());
    }

    proptest! {
        #[test]
        fn rational_round_trip(v in proptest::collection::vec((-10_000i64..10_000, 1i64..5_000), 1..12),
                               a in (-50i64..50, 1i64..20)) {
            let p = Poly::new(v.iter().map(|&(n, d)| rat(n, d)).collect());
            let alpha = rat(a.0, a.1);
            let s = PolySerialization::rational(PolyFamily::Laguerre, None, Some(&alpha), &p);
            let json = serde_json::to_string(&s).unwrap();
            let back: PolySerialization = serde_json::from_str(&json).unwrap();
            prop_assert_eq!(serde_json::to_string(&back).unwrap(), json);
            prop_assert_eq!(back.to_rational_poly().unwrap(), p);
            prop_assert_eq!(back.alpha_value().unwrap(), Some(alpha));
        }
    }
}
