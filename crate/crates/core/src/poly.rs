//! Dense univariate polynomials over ℚ and over ℚ[α].

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Result, SboError};
use crate::exact::{rpow, Rational, Scalar};

/// Dense polynomial with ascending coefficients, kept normalized: the last
/// stored coefficient is nonzero, and the zero polynomial stores nothing.
#[derive(Clone, PartialEq, Eq, Debug, Hash, Default)]
pub struct Poly<S> {
    coeffs: Vec<S>,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Parity {
    Even,
    Odd,
    Mixed,
}

/// How [`scale_arg_monic`] rescales the argument.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ScaleMode {
    /// `c^{-n/2} p(√c x)`
    Sqrt,
    /// `c^{-n} p(c x)`
    Linear,
}

impl<S: Scalar> Poly<S> {
    pub fn new(mut coeffs: Vec<S>) -> Self {
        while coeffs.last().is_some_and(Scalar::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(S::one())
    }

    pub fn constant(c: S) -> Self {
        Self::new(vec![c])
    }

    pub fn x() -> Self {
        Self::monomial(S::one(), 1)
    }

    /// `c·x^k`
    pub fn monomial(c: S, k: usize) -> Self {
        let mut v = vec![S::zero(); k];
        v.push(c);
        Self::new(v)
    }

    pub fn from_rationals(coeffs: Vec<Rational>) -> Self {
        Self::new(coeffs.into_iter().map(S::from_rational).collect())
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<S> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&S> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(Scalar::is_one)
    }

    /// Coefficient of `x^k`; zero above the degree.
    pub fn coeff_at(&self, k: usize) -> S {
        self.coeffs.get(k).cloned().unwrap_or_else(S::zero)
    }

    pub fn scale(&self, c: &S) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self::new(self.coeffs.iter().map(|a| a.times(c)).collect())
    }

    pub fn scale_rational(&self, r: &Rational) -> Self {
        if Zero::is_zero(r) {
            return Self::zero();
        }
        Self::new(self.coeffs.iter().map(|a| a.mul_rational(r)).collect())
    }

    /// `x^k · p`
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut v = vec![S::zero(); k];
        v.extend(self.coeffs.iter().cloned());
        Poly { coeffs: v }
    }

    pub fn mul_x(&self) -> Self {
        self.shift(1)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, a)| a.mul_rational(&Rational::from_integer(BigInt::from(k))))
                .collect(),
        )
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &S) -> S {
        let mut acc = S::zero();
        for a in self.coeffs.iter().rev() {
            acc = acc.times(x).plus(a);
        }
        acc
    }

    pub fn eval_rational(&self, x: &Rational) -> S {
        let mut acc = S::zero();
        for a in self.coeffs.iter().rev() {
            acc = acc.mul_rational(x).plus(a);
        }
        acc
    }

    /// `p(x²)`
    pub fn compose_square(&self) -> Self {
        let mut v = vec![S::zero(); (2 * self.coeffs.len()).saturating_sub(1)];
        for (k, a) in self.coeffs.iter().enumerate() {
            v[2 * k] = a.clone();
        }
        Self::new(v)
    }

    /// `p(c·x)`
    pub fn substitute_scale(&self, c: &Rational) -> Self {
        let mut f = <Rational as One>::one();
        let mut v = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            v.push(a.mul_rational(&f));
            f *= c;
        }
        Self::new(v)
    }

    /// General composition `p(q(x))` by Horner.
    pub fn compose(&self, q: &Self) -> Self {
        let mut acc = Self::zero();
        for a in self.coeffs.iter().rev() {
            acc = &(&acc * q) + &Self::constant(a.clone());
        }
        acc
    }

    pub fn parity(&self) -> Parity {
        let odd_vanish = self.coeffs.iter().skip(1).step_by(2).all(Scalar::is_zero);
        let even_vanish = self.coeffs.iter().step_by(2).all(Scalar::is_zero);
        if odd_vanish {
            Parity::Even
        } else if even_vanish {
            Parity::Odd
        } else {
            Parity::Mixed
        }
    }

    /// `p(-x)`
    pub fn reflect(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(k, a)| if k % 2 == 1 { a.negated() } else { a.clone() })
                .collect(),
        )
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> Poly<T> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }

    /// Division with remainder; `None` when the leading coefficient of the
    /// divisor does not divide exactly in `S`.
    pub fn div_rem(&self, d: &Self) -> Option<(Self, Self)> {
        let dd = d.degree()?;
        let lead = d.leading()?.clone();
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return Some((Self::zero(), self.clone()));
        }
        let mut q = vec![S::zero(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let top = r[k + dd].clone();
            if top.is_zero() {
                continue;
            }
            let f = top.div_exact(&lead)?;
            for (t, dc) in d.coeffs.iter().enumerate() {
                r[k + t] = r[k + t].minus(&f.times(dc));
            }
            q[k] = f;
        }
        Some((Self::new(q), Self::new(r)))
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident) => {
        impl<S: Scalar> $tr<Poly<S>> for Poly<S> {
            type Output = Poly<S>;
            fn $m(self, rhs: Poly<S>) -> Poly<S> {
                (&self).$m(&rhs)
            }
        }
        impl<S: Scalar> $tr<&Poly<S>> for Poly<S> {
            type Output = Poly<S>;
            fn $m(self, rhs: &Poly<S>) -> Poly<S> {
                (&self).$m(rhs)
            }
        }
        impl<S: Scalar> $tr<Poly<S>> for &Poly<S> {
            type Output = Poly<S>;
            fn $m(self, rhs: Poly<S>) -> Poly<S> {
                self.$m(&rhs)
            }
        }
    };
}

impl<S: Scalar> Add<&Poly<S>> for &Poly<S> {
    type Output = Poly<S>;
    fn add(self, rhs: &Poly<S>) -> Poly<S> {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut v = long.coeffs.clone();
        for (a, b) in v.iter_mut().zip(&short.coeffs) {
            a.add_assign_ref(b);
        }
        Poly::new(v)
    }
}

impl<S: Scalar> Sub<&Poly<S>> for &Poly<S> {
    type Output = Poly<S>;
    fn sub(self, rhs: &Poly<S>) -> Poly<S> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let v = (0..n)
            .map(|k| match (self.coeffs.get(k), rhs.coeffs.get(k)) {
                (Some(a), Some(b)) => a.minus(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.negated(),
                (None, None) => S::zero(),
            })
            .collect();
        Poly::new(v)
    }
}

impl<S: Scalar> Mul<&Poly<S>> for &Poly<S> {
    type Output = Poly<S>;
    fn mul(self, rhs: &Poly<S>) -> Poly<S> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut v = vec![S::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    v[i + j].add_assign_ref(&a.times(b));
                }
            }
        }
        Poly::new(v)
    }
}

impl<S: Scalar> Neg for &Poly<S> {
    type Output = Poly<S>;
    fn neg(self) -> Poly<S> {
        Poly {
            coeffs: self.coeffs.iter().map(Scalar::negated).collect(),
        }
    }
}

impl<S: Scalar> Neg for Poly<S> {
    type Output = Poly<S>;
    fn neg(self) -> Poly<S> {
        -&self
    }
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

/// Rescale the argument of a monic polynomial and renormalize to monic.
///
/// Sqrt mode multiplies `coeffs[k]` by `c^{(k-n)/2}`, which stays rational
/// either when every nonzero coefficient sits an even distance below the
/// top, or when `c` is the square of a rational.
pub fn scale_arg_monic<S: Scalar>(p: &Poly<S>, c: &Rational, mode: ScaleMode) -> Result<Poly<S>> {
    if !p.is_monic() {
        return Err(SboError::NotMonic);
    }
    if !c.is_positive() {
        return Err(SboError::InvalidParameter(format!("scale must be positive, got {c}")));
    }
    let n = p.degree().unwrap_or(0) as i64;
    let coeffs = p.coeffs();
    let out = match mode {
        ScaleMode::Linear => coeffs
            .iter()
            .enumerate()
            .map(|(k, a)| a.mul_rational(&rpow(c, k as i64 - n)))
            .collect(),
        ScaleMode::Sqrt => {
            let root = rational_sqrt(c);
            let mut v = Vec::with_capacity(coeffs.len());
            for (k, a) in coeffs.iter().enumerate() {
                let gap = n - k as i64;
                if a.is_zero() {
                    v.push(S::zero());
                } else if gap % 2 == 0 {
                    v.push(a.mul_rational(&rpow(c, -gap / 2)));
                } else if let Some(r) = &root {
                    v.push(a.mul_rational(&rpow(r, -gap)));
                } else {
                    return Err(SboError::IrrationalScale(c.to_string()));
                }
            }
            v
        }
    };
    Ok(Poly::new(out))
}

/// Exact square root of a rational, when one exists.
pub fn rational_sqrt(c: &Rational) -> Option<Rational> {
    if c.is_negative() {
        return None;
    }
    let n = c.numer().sqrt();
    let d = c.denom().sqrt();
    (&n * &n == *c.numer() && &d * &d == *c.denom()).then(|| Rational::new(n, d))
}

impl Poly<Rational> {
    /// Divides through by the leading coefficient.
    pub fn monic(&self) -> Result<Self> {
        let lead = self.leading().ok_or(SboError::ZeroPolynomial)?.clone();
        Ok(self.scale_rational(&lead.recip()))
    }

    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("division over a field");
            a = b;
            b = r;
        }
        a.monic().unwrap_or_else(|_| Self::zero())
    }

    /// Largest coefficient magnitude.
    pub fn max_abs_coeff(&self) -> Rational {
        self.coeffs
            .iter()
            .map(|a| a.abs())
            .max()
            .unwrap_or_else(<Rational as Zero>::zero)
    }

    /// The unique polynomial of degree `< xs.len()` through the given
    /// points, by Newton divided differences. Nodes must be distinct.
    pub fn interpolate(xs: &[Rational], ys: &[Rational]) -> Result<Self> {
        if xs.len() != ys.len() {
            return Err(SboError::LengthMismatch {
                expected: xs.len(),
                got: ys.len(),
            });
        }
        let mut dd = ys.to_vec();
        for level in 1..xs.len() {
            for k in (level..xs.len()).rev() {
                let h = &xs[k] - &xs[k - level];
                if Zero::is_zero(&h) {
                    return Err(SboError::Singular);
                }
                dd[k] = (&dd[k] - &dd[k - 1]) / h;
            }
        }
        let mut acc = Self::zero();
        for k in (0..xs.len()).rev() {
            let shift = Poly::new(vec![-xs[k].clone(), <Rational as One>::one()]);
            acc = &(&acc * &shift) + &Self::constant(dd[k].clone());
        }
        Ok(acc)
    }
}

/// An element of ℚ[α], the coefficient ring of the symbolic Laguerre side.
#[derive(Clone, PartialEq, Eq, Debug, Hash, Default)]
pub struct AlphaScalar(Poly<Rational>);

impl AlphaScalar {
    /// The indeterminate α itself.
    pub fn alpha() -> Self {
        AlphaScalar(Poly::x())
    }

    pub fn from_poly(p: Poly<Rational>) -> Self {
        AlphaScalar(p)
    }

    pub fn poly(&self) -> &Poly<Rational> {
        &self.0
    }

    /// Ascending coefficients in α.
    pub fn coeffs(&self) -> &[Rational] {
        self.0.coeffs()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.degree()
    }

    /// Substitute α := α₀.
    pub fn eval(&self, alpha0: &Rational) -> Rational {
        self.0.eval(alpha0)
    }

    /// Splits `self = r · q` with `q` an integer polynomial whose
    /// coefficients are coprime and whose leading coefficient is positive.
    pub fn content_split(&self) -> (Rational, Vec<BigInt>) {
        if self.0.is_zero() {
            return (<Rational as Zero>::zero(), Vec::new());
        }
        let den_lcm = self.coeffs().iter().fold(BigInt::one(), |acc, a| acc.lcm(a.denom()));
        let ints: Vec<BigInt> = self
            .coeffs()
            .iter()
            .map(|a| (a * Rational::from_integer(den_lcm.clone())).to_integer())
            .collect();
        let mut g = ints.iter().fold(BigInt::zero(), |acc, a| acc.gcd(a));
        if ints.last().is_some_and(|l| l.is_negative()) {
            g = -g;
        }
        let q = ints.iter().map(|a| a / &g).collect();
        (Rational::new(g, den_lcm), q)
    }
}

impl Scalar for AlphaScalar {
    fn zero() -> Self {
        AlphaScalar(Poly::zero())
    }
    fn one() -> Self {
        AlphaScalar(Poly::one())
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
    fn is_one(&self) -> bool {
        self.0.coeffs().len() == 1 && One::is_one(&self.0.coeffs()[0])
    }
    fn plus(&self, rhs: &Self) -> Self {
        AlphaScalar(&self.0 + &rhs.0)
    }
    fn minus(&self, rhs: &Self) -> Self {
        AlphaScalar(&self.0 - &rhs.0)
    }
    fn times(&self, rhs: &Self) -> Self {
        AlphaScalar(&self.0 * &rhs.0)
    }
    fn negated(&self) -> Self {
        AlphaScalar(-&self.0)
    }
    fn from_rational(r: Rational) -> Self {
        AlphaScalar(Poly::constant(r))
    }
    fn mul_rational(&self, r: &Rational) -> Self {
        AlphaScalar(self.0.scale_rational(r))
    }
    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        let (q, r) = self.0.div_rem(&rhs.0)?;
        r.is_zero().then_some(AlphaScalar(q))
    }
    fn as_rational(&self) -> Option<Rational> {
        match self.0.coeffs() {
            [] => Some(<Rational as Zero>::zero()),
            [c] => Some(c.clone()),
            _ => None,
        }
    }
    fn add_assign_ref(&mut self, rhs: &Self) {
        self.0 = &self.0 + &rhs.0;
    }
}

impl Poly<AlphaScalar> {
    /// Substitute α := α₀ in every coefficient.
    pub fn eval_alpha(&self, alpha0: &Rational) -> Poly<Rational> {
        self.map(|a| a.eval(alpha0))
    }

    /// Largest α-degree among the coefficients.
    pub fn alpha_degree(&self) -> usize {
        self.coeffs().iter().filter_map(AlphaScalar::degree).max().unwrap_or(0)
    }
}

// ---------------------------------------------------------------------------
// Display

/// How a coefficient renders inside a polynomial.
pub trait CoeffFormat {
    /// Sign, magnitude text, and whether the magnitude is exactly one.
    fn pretty_parts(&self) -> (bool, String, bool);
    fn latex_parts(&self) -> (bool, String, bool);
}

fn rational_pretty(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn rational_latex(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{{{}\\over{}}}", r.numer(), r.denom())
    }
}

impl CoeffFormat for Rational {
    fn pretty_parts(&self) -> (bool, String, bool) {
        (
            self.is_negative(),
            rational_pretty(&self.abs()),
            One::is_one(&self.abs()),
        )
    }
    fn latex_parts(&self) -> (bool, String, bool) {
        (
            self.is_negative(),
            rational_latex(&self.abs()),
            One::is_one(&self.abs()),
        )
    }
}

/// Integer polynomial in α, descending, no spaces: `α^2+3α+4`.
fn int_alpha_poly(q: &[BigInt], var: &str, pow: impl Fn(usize) -> String) -> String {
    let mut out = String::new();
    for (k, c) in q.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        let mag = c.abs();
        if neg {
            out.push('-');
        } else if !out.is_empty() {
            out.push('+');
        }
        if k == 0 || !mag.is_one() {
            out.push_str(&mag.to_string());
        }
        if k >= 1 {
            out.push_str(var);
            if k > 1 {
                out.push_str(&pow(k));
            }
        }
    }
    out
}

fn alpha_parts(a: &AlphaScalar, latex: bool) -> (bool, String, bool) {
    if let Some(r) = a.as_rational() {
        return if latex { r.latex_parts() } else { r.pretty_parts() };
    }
    let (r, q) = a.content_split();
    let terms = q.iter().filter(|c| !c.is_zero()).count();
    let body = if latex {
        int_alpha_poly(&q, "\\alpha", |k| format!("^{k}"))
    } else {
        int_alpha_poly(&q, "α", |k| format!("^{k}"))
    };
    let body = if terms > 1 { format!("({body})") } else { body };
    let mag = r.abs();
    let (num, den) = (mag.numer().clone(), mag.denom().clone());
    let text = if latex {
        let pre = if One::is_one(&mag) {
            String::new()
        } else {
            format!("{}\\,", rational_latex(&mag))
        };
        format!("{pre}{body}")
    } else {
        let pre = if num.is_one() { String::new() } else { num.to_string() };
        let post = if den.is_one() { String::new() } else { format!("/{den}") };
        format!("{pre}{body}{post}")
    };
    (r.is_negative(), text, false)
}

impl CoeffFormat for AlphaScalar {
    fn pretty_parts(&self) -> (bool, String, bool) {
        alpha_parts(self, false)
    }
    fn latex_parts(&self) -> (bool, String, bool) {
        alpha_parts(self, true)
    }
}

impl<S: Scalar + CoeffFormat> Poly<S> {
    /// Human-readable form, descending degree: `x^4 - 7/4 x^2 + 1/8`.
    pub fn pretty(&self) -> String {
        self.pretty_in("x")
    }

    pub fn pretty_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, a) in self.coeffs.iter().enumerate().rev() {
            if a.is_zero() {
                continue;
            }
            let (neg, mag, unit) = a.pretty_parts();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if k == 0 {
                out.push_str(&mag);
                continue;
            }
            if !unit {
                out.push_str(&mag);
                if mag.contains('/') {
                    out.push(' ');
                }
            }
            out.push_str(var);
            if k > 1 {
                out.push_str(&format!("^{k}"));
            }
        }
        out
    }

    /// TeX fragment in the usual table style: `x^4-{7\over4}\,x^2+{1\over8}`.
    pub fn latex(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, a) in self.coeffs.iter().enumerate().rev() {
            if a.is_zero() {
                continue;
            }
            let (neg, mag, unit) = a.latex_parts();
            if neg {
                out.push('-');
            } else if !out.is_empty() {
                out.push('+');
            }
            if k == 0 {
                out.push_str(&mag);
                continue;
            }
            if !unit {
                out.push_str(&mag);
                out.push_str("\\,");
            }
            out.push('x');
            if k > 1 {
                out.push_str(&format!("^{{{k}}}"));
            }
        }
        out
    }
}

impl fmt::Display for AlphaScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.as_rational().is_none() {
            let (r, q) = self.content_split();
            if One::is_one(&r) {
                return f.write_str(&int_alpha_poly(&q, "α", |k| format!("^{k}")));
            }
        }
        let (neg, mag, _) = alpha_parts(self, false);
        write!(f, "{}{}", if neg { "-" } else { "" }, mag)
    }
}

impl<S: Scalar + CoeffFormat> fmt::Display for Poly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.pretty())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};

    fn q(v: &[(i64, i64)]) -> Poly<Rational> {
        Poly::new(v.iter().map(|&(n, d)| rat(n, d)).collect())
    }

    fn a_lin(c0: i64, c1: i64) -> AlphaScalar {
        AlphaScalar::from_poly(q(&[(c0, 1), (c1, 1)]))
    }

    #[test]
    fn evaluation() {
        let p = q(&[(-1, 2), (0, 1), (1, 1)]);
        assert_eq!(p.eval(&int(0)), rat(-1, 2));
        assert_eq!(Poly::<Rational>::zero().eval(&rat(3, 7)), int(0));
        // x - (α+1) at α = 0
        let l = Poly::new(vec![a_lin(-1, -1), AlphaScalar::one()]);
        assert_eq!(l.eval_alpha(&int(0)), q(&[(-1, 1), (1, 1)]));
    }

    #[test]
    fn derivatives() {
        let p = q(&[(-1, 2), (0, 1), (1, 1)]);
        assert_eq!(p.derivative(), q(&[(0, 1), (2, 1)]));
        assert!(q(&[(5, 1)]).derivative().is_zero());
        let e7 = q(&[(1, 8), (0, 1), (-7, 4), (0, 1), (1, 1)]);
        assert_eq!(e7.derivative(), q(&[(0, 1), (-7, 2), (0, 1), (4, 1)]));
    }

    #[test]
    fn scaling() {
        let l = Poly::new(vec![a_lin(-1, -1), AlphaScalar::one()]);
        let s = scale_arg_monic(&l, &int(2), ScaleMode::Linear).unwrap();
        let half = AlphaScalar::from_poly(q(&[(-1, 2), (-1, 2)]));
        assert_eq!(s, Poly::new(vec![half, AlphaScalar::one()]));
        let h2 = q(&[(-1, 2), (0, 1), (1, 1)]);
        assert_eq!(
            scale_arg_monic(&h2, &int(2), ScaleMode::Sqrt).unwrap(),
            q(&[(-1, 4), (0, 1), (1, 1)])
        );
        assert_eq!(scale_arg_monic(&h2, &int(1), ScaleMode::Sqrt).unwrap(), h2);
        let mixed = q(&[(1, 1), (1, 1), (1, 1)]);
        assert!(matches!(
            scale_arg_monic(&mixed, &int(2), ScaleMode::Sqrt),
            Err(SboError::IrrationalScale(_))
        ));
        assert!(scale_arg_monic(&mixed, &int(4), ScaleMode::Sqrt).is_ok());
        assert_eq!(
            scale_arg_monic(&q(&[(1, 1), (2, 1)]), &int(2), ScaleMode::Linear),
            Err(SboError::NotMonic)
        );
    }

    #[test]
    fn parity_and_coefficients() {
        assert_eq!(q(&[(-1, 2), (0, 1), (1, 1)]).parity(), Parity::Even);
        assert_eq!(q(&[(0, 1), (-3, 2), (0, 1), (1, 1)]).parity(), Parity::Odd);
        assert_eq!(q(&[(0, 1), (1, 1), (1, 1)]).parity(), Parity::Mixed);
        assert_eq!(Poly::<Rational>::zero().parity(), Parity::Even);
        let e7 = q(&[(1, 8), (0, 1), (-7, 4), (0, 1), (1, 1)]);
        assert_eq!(e7.coeff_at(3), int(0));
        assert_eq!(e7.coeff_at(2), rat(-7, 4));
        assert_eq!(e7.coeff_at(9), int(0));
    }

    #[test]
    fn alpha_ring() {
        let a1 = a_lin(1, 1);
        let a2 = a_lin(2, 1);
        let prod = a1.times(&a2);
        assert_eq!(prod.div_exact(&a1), Some(a2.clone()));
        assert_eq!(a2.div_exact(&a1), None);
        assert_eq!(prod.eval(&int(1)), int(6));
        assert!(AlphaScalar::one().is_one());
    }

    #[test]
    fn pretty_printing() {
        assert_eq!(q(&[(-1, 2), (0, 1), (1, 1)]).pretty(), "x^2 - 1/2");
        assert_eq!(
            q(&[(1, 8), (0, 1), (-7, 4), (0, 1), (1, 1)]).pretty(),
            "x^4 - 7/4 x^2 + 1/8"
        );
        assert_eq!(
            q(&[(-11, 32), (0, 1), (47, 16), (0, 1), (-4, 1), (0, 1), (1, 1)]).pretty(),
            "x^6 - 4x^4 + 47/16 x^2 - 11/32"
        );
        assert_eq!(Poly::<Rational>::one().pretty(), "1");
        let half = AlphaScalar::from_poly(q(&[(-1, 2), (-1, 2)]));
        assert_eq!(Poly::new(vec![half, AlphaScalar::one()]).pretty(), "x - (α+1)/2");
        let f6_mid = AlphaScalar::from_poly(q(&[(-5, 2), (-3, 2)]));
        assert_eq!(f6_mid.to_string(), "-(3α+5)/2");
        assert_eq!(AlphaScalar::from_poly(q(&[(4, 1), (2, 1)])).to_string(), "2(α+2)");
        assert_eq!(
            q(&[(1, 8), (0, 1), (-7, 4), (0, 1), (1, 1)]).latex(),
            "x^{4}-{7\\over4}\\,x^{2}+{1\\over8}"
        );
    }

    #[test]
    fn gcd_and_division() {
        let a = q(&[(-1, 1), (0, 1), (1, 1)]);
        let b = q(&[(1, 1), (1, 1)]);
        assert_eq!(a.gcd(&b), b);
        let (qq, r) = a.div_rem(&b).unwrap();
        assert_eq!(qq, q(&[(-1, 1), (1, 1)]));
        assert!(r.is_zero());
        assert_eq!(rational_sqrt(&rat(9, 4)), Some(rat(3, 2)));
        assert_eq!(rational_sqrt(&int(2)), None);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn small_rat() -> impl Strategy<Value = Rational> {
            (-9i64..=9, 1i64..=5).prop_map(|(n, d)| rat(n, d))
        }

        fn small_poly() -> impl Strategy<Value = Poly<Rational>> {
            prop::collection::vec(small_rat(), 0..6).prop_map(Poly::new)
        }

        fn monic_poly() -> impl Strategy<Value = Poly<Rational>> {
            prop::collection::vec(small_rat(), 0..6).prop_map(|mut v| {
                v.push(int(1));
                Poly::new(v)
            })
        }

        proptest! {
            #[test]
            fn ring_axioms(a in small_poly(), b in small_poly(), c in small_poly()) {
                prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
                prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
                prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
                prop_assert_eq!(&a * &b, &b * &a);
                prop_assert!((&a - &a).is_zero());
            }

            #[test]
            fn leibniz_rule(a in small_poly(), b in small_poly()) {
                let lhs = (&a * &b).derivative();
                let rhs = &(&a.derivative() * &b) + &(&a * &b.derivative());
                prop_assert_eq!(lhs, rhs);
            }

            #[test]
            fn linear_scale_round_trip(p in monic_poly(), n in 1i64..6, d in 1i64..6) {
                let c = rat(n, d);
                let there = scale_arg_monic(&p, &c, ScaleMode::Linear).unwrap();
                let back = scale_arg_monic(&there, &c.recip(), ScaleMode::Linear).unwrap();
                prop_assert_eq!(back, p);
            }

            #[test]
            fn sqrt_scale_round_trip(p in monic_poly(), n in 1i64..6, d in 1i64..6) {
                let c = rat(n, d);
                let even = Poly::new(
                    p.coeffs().iter().enumerate()
                        .map(|(k, a)| if (p.degree().unwrap() - k) % 2 == 0 { a.clone() } else { int(0) })
                        .collect(),
                );
                let there = scale_arg_monic(&even, &c, ScaleMode::Sqrt).unwrap();
                let back = scale_arg_monic(&there, &c.recip(), ScaleMode::Sqrt).unwrap();
                prop_assert_eq!(back, even);
            }

            #[test]
            fn derivative_flips_parity(p in small_poly()) {
                let even = Poly::new(p.coeffs().iter().enumerate()
                    .map(|(k, a)| if k % 2 == 0 { a.clone() } else { int(0) }).collect());
                let odd = even.mul_x();
                prop_assert_eq!(even.derivative().parity(), if even.degree().unwrap_or(0) == 0 { Parity::Even } else { Parity::Odd });
                prop_assert_eq!(odd.derivative().parity(), Parity::Even);
            }
        }
    }
}
