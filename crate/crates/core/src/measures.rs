//! Moments, metric tensors `γ_{j,k}` and Gram determinants for the Hermite
//! pair `e^{-x²}, e^{-μx²}` and the Laguerre pair `e^{-x}x^α, e^{-μx}x^α`.
//!
//! Every value is reported in a reduced unit: the transcendental factor
//! named by [`Unit`] has been divided out.

use std::fmt;

use crate::classical::{hermite, laguerre_with, Family};
use crate::error::{Result, SboError};
use crate::exact::linalg::{det_bareiss, leading_minors, Matrix};
use crate::exact::{binomial, factorial, int, pochhammer, pow2, rat, rpow, s_func_reduced, sign, Rational, Scalar};
use crate::poly::{AlphaScalar, Poly};
use crate::report::Report;

/// Transcendental factor divided out of a reduced value.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Unit {
    /// `√(π/μ)`; `μ = 1` is plain `√π`.
    SqrtPiOverMu(Rational),
    /// `√(π/μ³)`, the natural unit of odd Hermite products.
    SqrtPiOverMuCubed(Rational),
    /// `Γ(α+1) μ^{-(α+1)}`; `μ = 1` is plain `Γ(α+1)`.
    GammaAlpha1OverMu(Rational),
}

impl fmt::Display for Unit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Unit::SqrtPiOverMu(mu) if Scalar::is_one(mu) => write!(f, "sqrt(pi)"),
            Unit::SqrtPiOverMu(mu) => write!(f, "sqrt(pi/{mu})"),
            Unit::SqrtPiOverMuCubed(mu) => write!(f, "sqrt(pi/({mu})^3)"),
            Unit::GammaAlpha1OverMu(mu) if Scalar::is_one(mu) => write!(f, "Gamma(alpha+1)"),
            Unit::GammaAlpha1OverMu(mu) => write!(f, "Gamma(alpha+1)*({mu})^-(alpha+1)"),
        }
    }
}

/// A scalar in units of `unit^power`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reduced<S> {
    pub value: S,
    pub unit: Unit,
    pub power: u32,
}

impl<S: Scalar> Reduced<S> {
    pub fn new(value: S, unit: Unit) -> Self {
        Reduced { value, unit, power: 1 }
    }

    fn same_unit(&self, other: &Self) -> Result<()> {
        if self.unit == other.unit && self.power == other.power {
            Ok(())
        } else {
            Err(SboError::UnitMismatch(
                format!("{}^{}", self.unit, self.power),
                format!("{}^{}", other.unit, other.power),
            ))
        }
    }

    pub fn plus(&self, other: &Self) -> Result<Self> {
        self.same_unit(other)?;
        Ok(Reduced {
            value: self.value.plus(&other.value),
            ..self.clone()
        })
    }

    /// Equality that refuses to compare across units.
    pub fn equals(&self, other: &Self) -> Result<bool> {
        self.same_unit(other)?;
        Ok(self.value == other.value)
    }

    /// Rewrites a `√(π/μ³)` value in units of `√(π/μ)`; other units pass through.
    pub fn to_sqrt_pi_over_mu(&self) -> Self {
        match &self.unit {
            Unit::SqrtPiOverMuCubed(mu) => Reduced {
                value: self.value.mul_rational(&rpow(mu, -(self.power as i64))),
                unit: Unit::SqrtPiOverMu(mu.clone()),
                power: self.power,
            },
            _ => self.clone(),
        }
    }
}

/// Laguerre parameter: kept symbolic or fixed to an admissible rational.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AlphaMode {
    Symbolic,
    Numeric(Rational),
}

impl AlphaMode {
    pub fn numeric(a: Rational) -> Result<Self> {
        if a <= int(-1) {
            return Err(SboError::InvalidParameter(format!("alpha must exceed -1, got {a}")));
        }
        Ok(AlphaMode::Numeric(a))
    }
}

/// A pair of weights: the first product uses `μ₁`, the second `μ₂`.
/// The standard pair has `μ₁ = 1`, `μ₂ = 2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MeasureSpec {
    pub family: Family,
    pub mu1: Rational,
    pub mu2: Rational,
    /// Only meaningful for Laguerre.
    pub alpha: AlphaMode,
}

fn check_mu(mu: &Rational) -> Result<()> {
    if *mu > int(0) {
        Ok(())
    } else {
        Err(SboError::InvalidParameter(format!("mu must be positive, got {mu}")))
    }
}

impl MeasureSpec {
    /// `e^{-x²}` and `e^{-μx²}`.
    pub fn hermite(mu: Rational) -> Result<Self> {
        check_mu(&mu)?;
        Ok(MeasureSpec {
            family: Family::Hermite,
            mu1: int(1),
            mu2: mu,
            alpha: AlphaMode::Symbolic,
        })
    }

    /// `e^{-x}x^α` and `e^{-μx}x^α`.
    pub fn laguerre(mu: Rational, alpha: AlphaMode) -> Result<Self> {
        check_mu(&mu)?;
        if let AlphaMode::Numeric(a) = &alpha {
            AlphaMode::numeric(a.clone())?;
        }
        Ok(MeasureSpec {
            family: Family::Laguerre,
            mu1: int(1),
            mu2: mu,
            alpha,
        })
    }

    /// Both weights rescaled by `c` in the exponent.
    pub fn rescaled(&self, c: &Rational) -> Result<Self> {
        check_mu(c)?;
        Ok(MeasureSpec {
            mu1: &self.mu1 * c,
            mu2: &self.mu2 * c,
            ..self.clone()
        })
    }
}

/// `∫x^k e^{-μx²}dx` for `k < count`, in units of `√(π/μ)`:
/// `μ^{-m}(1/2)_m` at `k = 2m`, zero for odd `k`.
pub fn hermite_moments(mu: &Rational, count: usize) -> Vec<Rational> {
    let half = rat(1, 2);
    (0..count)
        .map(|k| {
            if k % 2 == 1 {
                int(0)
            } else {
                pochhammer(&half, k / 2) * rpow(mu, -((k / 2) as i64))
            }
        })
        .collect()
}

/// `∫x^p e^{-μx}x^α dx` for `p < count`, in units of `Γ(α+1)μ^{-(α+1)}`:
/// `μ^{-p}(α+1)_p`.
pub fn laguerre_moments<S: Scalar>(mu: &Rational, alpha: &S, count: usize) -> Vec<S> {
    let base = alpha.plus(&S::one());
    let mut out = Vec::with_capacity(count);
    let mut acc = S::one();
    for p in 0..count {
        out.push(acc.clone());
        acc = acc.times(&base.plus(&S::from_int(p as i64))).mul_rational(&mu.recip());
    }
    out
}

/// `v_k = Σ_a p_a M_{a+k}` for `k < count`, so that `(p, q) = Σ_k q_k v_k`.
/// Needs `moments.len() >= deg p + count`.
pub fn moment_image<S: Scalar>(p: &Poly<S>, moments: &[S], count: usize) -> Vec<S> {
    (0..count)
        .map(|k| {
            let mut acc = S::zero();
            for (a, c) in p.coeffs().iter().enumerate() {
                let m = &moments[a + k];
                if !c.is_zero() && !m.is_zero() {
                    acc.add_assign_ref(&c.times(m));
                }
            }
            acc
        })
        .collect()
}

/// Pairs a polynomial with a precomputed moment image.
pub fn pair_with_image<S: Scalar>(q: &Poly<S>, image: &[S]) -> S {
    let mut acc = S::zero();
    for (c, v) in q.coeffs().iter().zip(image) {
        if !c.is_zero() && !v.is_zero() {
            acc.add_assign_ref(&c.times(v));
        }
    }
    acc
}

/// `(p, q) = Σ p_a q_b M_{a+b}`.
pub fn inner_product<S: Scalar>(p: &Poly<S>, q: &Poly<S>, moments: &[S]) -> S {
    pair_with_image(q, &moment_image(p, moments, q.coeffs().len()))
}

/// `γ_{j,k}(μ) = ∫H_jH_k e^{-μx²}`. Even pairs are in `√(π/μ)`, odd pairs
/// in `√(π/μ³)`; mixed parity vanishes (reported in `√(π/μ)`).
pub fn hermite_gamma(j: usize, k: usize, mu: &Rational) -> Result<Reduced<Rational>> {
    check_mu(mu)?;
    if (j + k) % 2 == 1 {
        return Ok(Reduced::new(int(0), Unit::SqrtPiOverMu(mu.clone())));
    }
    let z = -mu.recip();
    let (a, b) = (j / 2, k / 2);
    let s = sign((a + b) as i64);
    if j % 2 == 0 {
        let c = rat(1, 2);
        let sv = s_func_reduced(a, b, &c, &z, &z)?.value;
        let v = s * pow2(2 * (a + b) as i64) * pochhammer(&c, a) * pochhammer(&c, b) * sv;
        Ok(Reduced::new(v, Unit::SqrtPiOverMu(mu.clone())))
    } else {
        let c = rat(3, 2);
        let sv = s_func_reduced(a, b, &c, &z, &z)?.value;
        let v = s * pow2(2 * (a + b) as i64 + 1) * pochhammer(&c, a) * pochhammer(&c, b) * sv;
        Ok(Reduced::new(v, Unit::SqrtPiOverMuCubed(mu.clone())))
    }
}

/// The `μ = 2` closed form of [`hermite_gamma`], same units.
pub fn hermite_gamma_mu2_closed(j: usize, k: usize) -> Reduced<Rational> {
    let two = int(2);
    if (j + k) % 2 == 1 {
        return Reduced::new(int(0), Unit::SqrtPiOverMu(two));
    }
    let (a, b) = (j / 2, k / 2);
    let s = sign((a + b) as i64);
    let half = rat(1, 2);
    if j % 2 == 0 {
        Reduced::new(
            s * pow2((a + b) as i64) * pochhammer(&half, a + b),
            Unit::SqrtPiOverMu(two),
        )
    } else {
        Reduced::new(
            s * pow2((a + b) as i64 + 2) * pochhammer(&half, a + b + 1),
            Unit::SqrtPiOverMuCubed(two),
        )
    }
}

/// `γ_{j,k}(α, μ) = ∫L_jL_k e^{-μx}x^α` in units of `Γ(α+1)μ^{-(α+1)}`,
/// written so that every term is a polynomial in α.
pub fn laguerre_gamma<S: Scalar>(j: usize, k: usize, mu: &Rational, alpha: &S) -> Result<Reduced<S>> {
    check_mu(mu)?;
    let c = alpha.plus(&S::one());
    let z = -mu.recip();
    let one_z = int(1) + &z;
    let ck = pochhammer(&c, k);
    let mut acc = S::zero();
    for p in 0..=j.min(k) {
        let coeff = binomial(j, p)
            * binomial(k, p)
            * factorial(p)
            * rpow(&(&z * &z), p as i64)
            * rpow(&one_z, (j - p) as i64)
            * rpow(&one_z, (k - p) as i64);
        if Scalar::is_zero(&coeff) {
            continue;
        }
        let term = pochhammer(&c.plus(&S::from_int(p as i64)), j - p).times(&ck);
        acc.add_assign_ref(&term.mul_rational(&coeff));
    }
    let v = acc.mul_rational(&(factorial(j) * factorial(k)).recip());
    Ok(Reduced::new(v, Unit::GammaAlpha1OverMu(mu.clone())))
}

/// The `μ = 2` closed form `2^{-(j+k)}(α+1)_{j+k}/(j!k!)`.
pub fn laguerre_gamma_mu2_closed<S: Scalar>(j: usize, k: usize, alpha: &S) -> S {
    pochhammer(&alpha.plus(&S::one()), j + k).mul_rational(&(pow2(-((j + k) as i64)) / (factorial(j) * factorial(k))))
}

/// Symmetric matrix of reduced scalar products with its unit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GramMatrix<S> {
    pub entries: Matrix<S>,
    pub unit: Unit,
}

impl<S: Scalar> GramMatrix<S> {
    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn is_symmetric(&self) -> bool {
        let n = self.size();
        (0..n).all(|j| (0..j).all(|k| self.entries[j][k] == self.entries[k][j]))
    }

    /// Sub-block over rows and columns `idx`.
    pub fn block(&self, idx: &[usize]) -> Matrix<S> {
        idx.iter()
            .map(|&j| idx.iter().map(|&k| self.entries[j][k].clone()).collect())
            .collect()
    }
}

impl GramMatrix<Rational> {
    /// True when every leading principal minor is positive.
    pub fn is_positive_definite(&self) -> bool {
        leading_minors(&self.entries).iter().all(|m| *m > int(0))
    }
}

/// `γ_{j,k}(μ)` for `j, k < size`, all in units of `√(π/μ)`.
pub fn hermite_gram(size: usize, mu: &Rational) -> Result<GramMatrix<Rational>> {
    let mut e = vec![vec![int(0); size]; size];
    for j in 0..size {
        for k in 0..=j {
            let g = hermite_gamma(j, k, mu)?.to_sqrt_pi_over_mu().value;
            e[j][k] = g.clone();
            e[k][j] = g;
        }
    }
    Ok(GramMatrix {
        entries: e,
        unit: Unit::SqrtPiOverMu(mu.clone()),
    })
}

/// `γ_{j,k}(α, μ)` for `j, k < size`.
pub fn laguerre_gram<S: Scalar>(size: usize, mu: &Rational, alpha: &S) -> Result<GramMatrix<S>> {
    let mut e = vec![vec![S::zero(); size]; size];
    for j in 0..size {
        for k in 0..=j {
            let g = laguerre_gamma(j, k, mu, alpha)?.value;
            e[j][k] = g.clone();
            e[k][j] = g;
        }
    }
    Ok(GramMatrix {
        entries: e,
        unit: Unit::GammaAlpha1OverMu(mu.clone()),
    })
}

fn check_z_range(i: usize, n: isize) -> Result<()> {
    if n < i as isize - 1 {
        Err(SboError::Index {
            i,
            n: n.max(0) as usize,
        })
    } else {
        Ok(())
    }
}

/// Determinant of the `(,)₂` Gram block of `H_{2j+p}`, `i <= j <= n`, from
/// its product formula, in units of `√(π/2)^{n-i+1}`.
pub fn z_hermite(i: usize, n: isize, odd: bool) -> Result<Reduced<Rational>> {
    check_z_range(i, n)?;
    let unit = Unit::SqrtPiOverMu(int(2));
    if n < i as isize {
        return Ok(Reduced {
            value: int(1),
            unit,
            power: 0,
        });
    }
    let n = n as usize;
    let s = (n - i + 1) as i64;
    let p = usize::from(odd);
    let half = rat(1, 2);
    let prod: Rational = (i..=n)
        .map(|j| factorial(j - i) * pochhammer(&half, i + j + p))
        .product();
    Ok(Reduced {
        value: pow2((i + n + p) as i64 * s) * prod,
        unit,
        power: s as u32,
    })
}

/// The same quantity as a brute-force determinant of the Gram block.
pub fn z_hermite_det(i: usize, n: usize, odd: bool) -> Result<Reduced<Rational>> {
    let p = usize::from(odd);
    let g = hermite_gram(2 * n + p + 1, &int(2))?;
    let idx: Vec<usize> = (i..=n).map(|j| 2 * j + p).collect();
    Ok(Reduced {
        value: det_bareiss(&g.block(&idx)),
        unit: g.unit,
        power: (n - i + 1) as u32,
    })
}

/// Determinant of the `(,)₂` Gram block of `L_j`, `i <= j <= n`, from its
/// product formula, in units of `(Γ(α+1)2^{-(α+1)})^{n-i+1}`.
pub fn z_laguerre<S: Scalar>(i: usize, n: isize, alpha: &S) -> Result<Reduced<S>> {
    check_z_range(i, n)?;
    let unit = Unit::GammaAlpha1OverMu(int(2));
    if n < i as isize {
        return Ok(Reduced {
            value: S::one(),
            unit,
            power: 0,
        });
    }
    let n = n as usize;
    let s = (n - i + 1) as i64;
    let a1 = alpha.plus(&S::one());
    let mut acc = S::from_rational(pow2(-((i + n) as i64) * s));
    for j in i..=n {
        let f = factorial(j - i) / (factorial(j) * factorial(j));
        acc = acc.times(&pochhammer(&a1, i + j)).mul_rational(&f);
    }
    Ok(Reduced {
        value: acc,
        unit,
        power: s as u32,
    })
}

pub fn z_laguerre_det<S: Scalar>(i: usize, n: usize, alpha: &S) -> Result<Reduced<S>> {
    let g = laguerre_gram(n + 1, &int(2), alpha)?;
    let idx: Vec<usize> = (i..=n).collect();
    Ok(Reduced {
        value: det_bareiss(&g.block(&idx)),
        unit: g.unit,
        power: (n - i + 1) as u32,
    })
}

/// Generating-function cross-check of `γ(2)` for total order `j + k <= order`.
pub fn generating_function_gamma_check(family: Family, order: usize) -> Result<Report> {
    if order > crate::classical::MAX_SERIES_ORDER {
        return Err(SboError::OrderExceeded {
            order,
            limit: crate::classical::MAX_SERIES_ORDER,
        });
    }
    let mut r = Report::new("measures");
    let two = int(2);
    match family {
        Family::Hermite => {
            // e^{-(s-t)²/2}: coefficient of s^j t^k, j+k = 2m
            let gram = hermite_gram(order + 1, &two)?;
            for j in 0..=order {
                for k in 0..=order - j {
                    let coeff = if (j + k) % 2 == 1 {
                        int(0)
                    } else {
                        let m = (j + k) / 2;
                        sign(m as i64) / (pow2(m as i64) * factorial(m)) * binomial(2 * m, j) * sign(k as i64)
                    };
                    let lhs = coeff * factorial(j) * factorial(k);
                    r.record(
                        "hermite.gamma-generating-function",
                        format!("j={j} k={k}"),
                        lhs == gram.entries[j][k],
                    );
                }
            }
        }
        Family::Laguerre => {
            // Σ (α+1)_n/n! ((s+t)/2)^n
            let alpha = AlphaScalar::alpha();
            let a1 = alpha.plus(&AlphaScalar::one());
            for j in 0..=order {
                for k in 0..=order - j {
                    let n = j + k;
                    let coeff = pochhammer(&a1, n).mul_rational(&(binomial(n, j) * pow2(-(n as i64)) / factorial(n)));
                    let g = laguerre_gamma(j, k, &two, &alpha)?.value;
                    r.record("laguerre.gamma-generating-function", format!("j={j} k={k}"), coeff == g);
                }
            }
        }
    }
    Ok(r)
}

/// The admissible numeric α values used by the positivity checks.
pub fn sample_alphas() -> Vec<Rational> {
    vec![rat(-1, 2), int(0), rat(1, 2), rat(3, 2)]
}

/// Structural checks on γ and the Gram matrices.
pub fn verify_measures(size: usize, order: usize) -> Report {
    let mut r = Report::new("measures");
    let two = int(2);
    let one = int(1);
    let alpha = AlphaScalar::alpha();
    let inst = |j: usize, k: usize| format!("j={j} k={k}");

    // against direct moment sums of the classical polynomials
    let hs: Vec<Poly<Rational>> = (0..size).map(hermite).collect();
    let ls: Vec<Poly<AlphaScalar>> = (0..size).map(|n| laguerre_with(n, &alpha)).collect();
    for mu in [one.clone(), two.clone(), int(3), rat(1, 2)] {
        let mom = hermite_moments(&mu, 2 * size);
        let lmom = laguerre_moments(&mu, &alpha, 2 * size);
        for j in 0..size {
            for k in 0..=j {
                let tag = format!("mu={mu} j={j} k={k}");
                match hermite_gamma(j, k, &mu) {
                    Ok(g) => r.record(
                        "hermite.gamma-vs-moments",
                        &tag,
                        g.to_sqrt_pi_over_mu().value == inner_product(&hs[j], &hs[k], &mom),
                    ),
                    Err(e) => r.record_error("hermite.gamma-vs-moments", &tag, &e),
                }
                match laguerre_gamma(j, k, &mu, &alpha) {
                    Ok(g) => r.record(
                        "laguerre.gamma-vs-moments",
                        &tag,
                        g.value == inner_product(&ls[j], &ls[k], &lmom),
                    ),
                    Err(e) => r.record_error("laguerre.gamma-vs-moments", &tag, &e),
                }
            }
        }
    }

    for j in 0..size {
        for k in 0..size {
            let closed = hermite_gamma_mu2_closed(j, k);
            let ok = hermite_gamma(j, k, &two).is_ok_and(|g| g == closed);
            r.record("hermite.gamma-mu2-closed-form", inst(j, k), ok);
            let ok =
                laguerre_gamma(j, k, &two, &alpha).is_ok_and(|g| g.value == laguerre_gamma_mu2_closed(j, k, &alpha));
            r.record("laguerre.gamma-mu2-closed-form", inst(j, k), ok);

            // μ = 1 recovers classical orthogonality
            let diag = if j == k { pow2(j as i64) * factorial(j) } else { int(0) };
            let ok = hermite_gamma(j, k, &one).is_ok_and(|g| g.to_sqrt_pi_over_mu().value == diag);
            r.record("hermite.gamma-classical-limit", inst(j, k), ok);
            let diag = if j == k {
                pochhammer(&alpha.plus(&AlphaScalar::one()), j).mul_rational(&factorial(j).recip())
            } else {
                AlphaScalar::zero()
            };
            let ok = laguerre_gamma(j, k, &one, &alpha).is_ok_and(|g| g.value == diag);
            r.record("laguerre.gamma-classical-limit", inst(j, k), ok);
        }
    }

    match hermite_gram(size, &two) {
        Ok(g) => {
            r.record("hermite.gram-symmetric", format!("size={size}"), g.is_symmetric());
            for s in 1..=size {
                let sub = GramMatrix {
                    entries: g.block(&(0..s).collect::<Vec<_>>()),
                    unit: g.unit.clone(),
                };
                r.record(
                    "hermite.gram-positive-definite",
                    format!("size={s}"),
                    sub.is_positive_definite(),
                );
            }
        }
        Err(e) => r.record_error("hermite.gram-symmetric", format!("size={size}"), &e),
    }
    for a in sample_alphas() {
        match laguerre_gram(size, &two, &a) {
            Ok(g) => {
                r.record("laguerre.gram-symmetric", format!("alpha={a}"), g.is_symmetric());
                r.record(
                    "laguerre.gram-positive-definite",
                    format!("alpha={a} size={size}"),
                    g.is_positive_definite(),
                );
            }
            Err(e) => r.record_error("laguerre.gram-symmetric", format!("alpha={a}"), &e),
        }
    }
    if let Ok(g) = laguerre_gram(size, &two, &alpha) {
        r.record("laguerre.gram-symmetric", "alpha=symbolic", g.is_symmetric());
    }

    // Z product formulas against Gram determinants
    let zmax = size.min(7);
    for i in 0..zmax {
        for n in i..zmax {
            for odd in [false, true] {
                let tag = format!("i={i} n={n} {}", if odd { "odd" } else { "even" });
                let ok = matches!((z_hermite(i, n as isize, odd), z_hermite_det(i, n, odd)),
                    (Ok(a), Ok(b)) if a.equals(&b) == Ok(true));
                r.record("hermite.z-determinant", tag, ok);
            }
            let ok = matches!((z_laguerre(i, n as isize, &alpha), z_laguerre_det(i, n, &alpha)),
                (Ok(a), Ok(b)) if a.equals(&b) == Ok(true));
            r.record("laguerre.z-determinant", format!("i={i} n={n}"), ok);
        }
    }

    for fam in [Family::Hermite, Family::Laguerre] {
        match generating_function_gamma_check(fam, order) {
            Ok(g) => r.extend(g),
            Err(e) => r.record_error("gamma-generating-function", format!("order={order}"), &e),
        }
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hermite_gamma_examples() {
        let one = int(1);
        for j in 0..4 {
            let g = hermite_gamma(2 * j, 2 * j, &one).unwrap();
            assert_eq!(g.value, pow2(2 * j as i64) * factorial(2 * j));
            assert_eq!(g.unit, Unit::SqrtPiOverMu(one.clone()));
        }
        assert_eq!(hermite_gamma(0, 0, &int(2)).unwrap().value, int(1));
        assert_eq!(hermite_gamma(1, 2, &int(2)).unwrap().value, int(0));
        assert!(hermite_gamma(0, 0, &int(0)).is_err());
    }

    #[test]
    fn laguerre_gamma_examples() {
        let a = AlphaScalar::alpha();
        let two = int(2);
        assert_eq!(laguerre_gamma(0, 0, &two, &a).unwrap().value, AlphaScalar::one());
        let g11 = laguerre_gamma(1, 1, &two, &a).unwrap().value;
        let expect = pochhammer(&a.plus(&AlphaScalar::one()), 2).mul_rational(&rat(1, 4));
        assert_eq!(g11, expect);
        // numeric α agrees with the S-function route
        let a0 = rat(1, 3);
        let c = &a0 + int(1);
        let z = rat(-1, 3);
        for (j, k) in [(2, 3), (4, 1), (3, 3)] {
            let direct = laguerre_gamma(j, k, &int(3), &a0).unwrap().value;
            let via_s = pochhammer(&c, j) / factorial(j) * pochhammer(&c, k) / factorial(k)
                * s_func_reduced(j, k, &c, &z, &z).unwrap().value;
            assert_eq!(direct, via_s);
        }
    }

    #[test]
    fn units_do_not_mix() {
        let a = Reduced::new(int(1), Unit::SqrtPiOverMu(int(1)));
        let b = Reduced::new(int(1), Unit::SqrtPiOverMu(int(2)));
        assert!(matches!(a.plus(&b), Err(SboError::UnitMismatch(..))));
        let odd = hermite_gamma(1, 1, &int(2)).unwrap();
        assert_eq!(odd.unit, Unit::SqrtPiOverMuCubed(int(2)));
        assert_eq!(odd.to_sqrt_pi_over_mu().value, &odd.value / int(2));
    }

    #[test]
    fn z_examples() {
        assert_eq!(z_hermite(3, 2, false).unwrap().value, int(1));
        assert_eq!(
            z_laguerre(0, 0, &AlphaScalar::alpha()).unwrap().value,
            AlphaScalar::one()
        );
        assert_eq!(z_hermite(0, 1, false).unwrap(), z_hermite_det(0, 1, false).unwrap());
        assert_eq!(z_hermite(0, 1, false).unwrap().value, int(2));
        assert!(z_hermite(3, 1, false).is_err());
    }

    #[test]
    fn generating_function_examples() {
        let h = generating_function_gamma_check(Family::Hermite, 12).unwrap();
        assert!(h.passed());
        let l = generating_function_gamma_check(Family::Laguerre, 6).unwrap();
        assert!(l.passed());
        assert!(generating_function_gamma_check(Family::Hermite, 13).is_err());
    }

    #[test]
    fn structural_suite() {
        let r = verify_measures(8, 8);
        assert!(r.passed(), "{:?}", r.failures().take(5).collect::<Vec<_>>());
    }
}
