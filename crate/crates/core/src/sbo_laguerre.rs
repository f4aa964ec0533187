//! Laguerre SBO polynomials `P̂_{i;n}` for the pair `e^{-x}x^α`, `e^{-2x}x^α`.
//!
//! Everything is generic over the scalar carrying α: pass
//! `&AlphaScalar::alpha()` for symbolic results in ℚ[α], or a `&Rational`
//! for a numeric parameter.

use rayon::prelude::*;

use crate::classical::{laguerre_monic, laguerre_table};
use crate::error::{Result, SboError};
use crate::exact::linalg::{is_identity, mat_mul};
use crate::exact::{binomial, factorial, int, pochhammer, pow2, rat, sign, Scalar};
use crate::measures::{laguerre_moments, moment_image, pair_with_image, z_laguerre};
use crate::poly::{AlphaScalar, Poly};
use crate::report::Report;
use crate::sbo_hermite;

pub use crate::sbo_hermite::Route;

fn check_index(i: usize, n: usize) -> Result<()> {
    if i > n {
        Err(SboError::Index { i, n })
    } else {
        Ok(())
    }
}

/// `α + k`.
fn ap<S: Scalar>(alpha: &S, k: i64) -> S {
    alpha.plus(&S::from_int(k))
}

/// Coefficient of `L_m` in `P̂_{i;n}`.
fn closed_coeff<S: Scalar>(i: usize, n: usize, m: usize, alpha: &S) -> S {
    let c = sign(m as i64) * pow2(m as i64 - n as i64) * factorial(m) * binomial(n - i, m - i);
    pochhammer(&ap(alpha, (1 + i + m) as i64), n - m).mul_rational(&c)
}

/// Coefficient of `P̂_{i;m}` in `L_n`.
fn inverse_coeff<S: Scalar>(i: usize, n: usize, m: usize, alpha: &S) -> S {
    let c = sign(m as i64) * pow2(m as i64 - n as i64) / factorial(n) * binomial(n - i, m - i);
    pochhammer(&ap(alpha, (1 + i + m) as i64), n - m).mul_rational(&c)
}

fn closed_from<S: Scalar>(i: usize, n: usize, alpha: &S, lag: &[Poly<S>]) -> Poly<S> {
    let mut acc = Poly::zero();
    for m in i..=n {
        acc = &acc + &lag[m].scale(&closed_coeff(i, n, m, alpha));
    }
    acc
}

/// `P̂_{i;n}` as an explicit combination of Laguerre polynomials.
pub fn closed<S: Scalar>(i: usize, n: usize, alpha: &S) -> Result<Poly<S>> {
    check_index(i, n)?;
    Ok(closed_from(i, n, alpha, &laguerre_table(n, alpha)))
}

/// Reduced norm `Ĥ_{i;n} = 2^{-2n}(n-i)!(α+1)_{i+n}`, in units of
/// `Γ(α+1)2^{-(α+1)}`.
pub fn norm<S: Scalar>(i: usize, n: usize, alpha: &S) -> Result<S> {
    check_index(i, n)?;
    Ok(pochhammer(&ap(alpha, 1), i + n).mul_rational(&(pow2(-2 * n as i64) * factorial(n - i))))
}

/// Row writing `L_n` over `P̂_{i;m}`, indexed by degree `m`; zero below `i`.
pub fn laguerre_in_sbo<S: Scalar>(i: usize, n: usize, alpha: &S) -> Result<Vec<S>> {
    check_index(i, n)?;
    Ok((0..=n)
        .map(|m| {
            if m < i {
                S::zero()
            } else {
                inverse_coeff(i, n, m, alpha)
            }
        })
        .collect())
}

/// `κ_{i;n} = ¼(n-i)(α+i+n)`.
pub fn kappa<S: Scalar>(i: usize, n: usize, alpha: &S) -> Result<S> {
    check_index(i, n)?;
    Ok(kappa_unchecked(i, n, alpha))
}

fn kappa_unchecked<S: Scalar>(i: usize, n: usize, alpha: &S) -> S {
    ap(alpha, (i + n) as i64).mul_rational(&rat(n as i64 - i as i64, 4))
}

/// First-order differentiation formula read as a recurrence:
/// `P̂_{n+1} = -xP̂'_n + (x - (α+1)/2)P̂_n + κ_n P̂_{n-1}`.
pub fn via_diff1<S: Scalar>(i: usize, n_max: usize, alpha: &S) -> Result<Vec<Poly<S>>> {
    check_index(i, n_max)?;
    let lin = Poly::new(vec![ap(alpha, 1).mul_rational(&rat(-1, 2)), S::one()]);
    let mut out = vec![laguerre_monic(i, alpha)];
    let mut prev = Poly::zero();
    for n in i..n_max {
        let cur = &out[n - i];
        let next = &(&(&lin * cur) - &cur.derivative().mul_x()) + &prev.scale(&kappa_unchecked(i, n, alpha));
        prev = cur.clone();
        out.push(next);
    }
    Ok(out)
}

/// `P̂_{i;i+1} = L̂_{i+1} + ½(α+1+2i)L̂_i`.
pub fn seed_gap_one<S: Scalar>(i: usize, alpha: &S) -> Poly<S> {
    let c = ap(alpha, 1 + 2 * i as i64).mul_rational(&rat(1, 2));
    &laguerre_monic(i + 1, alpha) + &laguerre_monic(i, alpha).scale(&c)
}

/// `P̂_{i;i+2} = (x-1)L̂_{i+1} + ¼(α²-α-2-2i)L̂_i`.
pub fn seed_gap_two<S: Scalar>(i: usize, alpha: &S) -> Poly<S> {
    let c = alpha
        .times(alpha)
        .minus(alpha)
        .plus(&S::from_int(-2 - 2 * i as i64))
        .mul_rational(&rat(1, 4));
    let xm1 = Poly::new(vec![S::from_int(-1), S::one()]);
    &(&xm1 * &laguerre_monic(i + 1, alpha)) + &laguerre_monic(i, alpha).scale(&c)
}

/// Five-term recurrence in `n`:
/// `P̂_{n+2} = (x-1)P̂_{n+1} - (½(α+1+2n)x - 2κ_n - ¼(α²+α+2n))P̂_n
///            + κ_n(x+1)P̂_{n-1} - κ_nκ_{n-1}P̂_{n-2}`.
pub fn via_five_term<S: Scalar>(i: usize, n_max: usize, alpha: &S) -> Result<Vec<Poly<S>>> {
    five_term_with_sign(i, n_max, alpha, -1)
}

/// The recurrence with a chosen sign on its last term; `+1` is the uncorrected
/// variant, kept to demonstrate that it fails.
pub fn five_term_with_sign<S: Scalar>(i: usize, n_max: usize, alpha: &S, last_sign: i64) -> Result<Vec<Poly<S>>> {
    check_index(i, n_max)?;
    let mut out = vec![laguerre_monic(i, alpha)];
    if n_max > i {
        out.push(seed_gap_one(i, alpha));
    }
    let zero = Poly::zero();
    let a2 = alpha.times(alpha).plus(alpha);
    for n in i..n_max.saturating_sub(1) {
        let k = n - i;
        let kn = kappa_unchecked(i, n, alpha);
        let kn1 = if n > i {
            kappa_unchecked(i, n - 1, alpha)
        } else {
            S::zero()
        };
        let back1 = if k >= 1 { &out[k - 1] } else { &zero };
        let back2 = if k >= 2 { &out[k - 2] } else { &zero };
        let c0 = kn
            .mul_rational(&int(-2))
            .minus(&a2.plus(&S::from_int(2 * n as i64)).mul_rational(&rat(1, 4)));
        let c1 = ap(alpha, 1 + 2 * n as i64).mul_rational(&rat(1, 2));
        let mid = Poly::new(vec![c0, c1]);
        let xm1 = Poly::new(vec![S::from_int(-1), S::one()]);
        let xp1 = Poly::new(vec![S::one(), S::one()]);
        let next = &(&(&(&xm1 * &out[k + 1]) - &(&mid * &out[k])) + &(&xp1 * back1).scale(&kn))
            + &back2.scale(&kn.times(&kn1).mul_rational(&int(last_sign)));
        out.push(next);
    }
    Ok(out)
}

/// Every `P̂_{i;n}` with `0 <= i <= n <= n_max`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaguerreTable<S> {
    rows: Vec<Vec<Poly<S>>>,
}

impl<S: Scalar> LaguerreTable<S> {
    pub fn n_max(&self) -> usize {
        self.rows.len() - 1
    }

    /// `P̂_{i;n}`; panics outside the table.
    pub fn get(&self, i: usize, n: usize) -> &Poly<S> {
        &self.rows[n][i]
    }

    /// Substitutes a numeric α in a symbolic table.
    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T + Copy) -> LaguerreTable<T> {
        LaguerreTable {
            rows: self.rows.iter().map(|r| r.iter().map(|p| p.map(f)).collect()).collect(),
        }
    }
}

/// Production route: the four-term recurrence descending in `i` from
/// `P̂_{n;n} = L̂_n`:
/// `P̂_{i;n} = P̂_{i+1;n} - ((n-i-1)/2)P̂_{i+1;n-1} + ((α+i+n)/2)P̂_{i;n-1}`.
pub fn four_term_table<S: Scalar>(n_max: usize, alpha: &S) -> LaguerreTable<S> {
    let mut rows: Vec<Vec<Poly<S>>> = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let mut row = vec![Poly::zero(); n + 1];
        row[n] = laguerre_monic(n, alpha);
        for i in (0..n).rev() {
            let mut p = row[i + 1].clone();
            if n - i > 1 {
                p = &p - &rows[n - 1][i + 1].scale_rational(&rat((n - i - 1) as i64, 2));
            }
            p = &p + &rows[n - 1][i].scale(&ap(alpha, (i + n) as i64).mul_rational(&rat(1, 2)));
            row[i] = p;
        }
        rows.push(row);
    }
    LaguerreTable { rows }
}

/// `P̂_{i;n}` through the production table.
pub fn sbo<S: Scalar>(i: usize, n: usize, alpha: &S) -> Result<Poly<S>> {
    check_index(i, n)?;
    Ok(four_term_table(n, alpha).get(i, n).clone())
}

/// `P̂_{0;n}(x) = (-1)^n 2^{-n} n! L_n(2x)`.
pub fn row_zero<S: Scalar>(n: usize, alpha: &S) -> Poly<S> {
    laguerre_monic(n, alpha)
        .substitute_scale(&int(2))
        .scale_rational(&pow2(-(n as i64)))
}

/// The four-term recurrence read upwards in `i` from the `i = 0` row:
/// `2P̂_{i+1;n} = 2P̂_{i;n} + (n-i-1)P̂_{i+1;n-1} - (α+i+n)P̂_{i;n-1}`.
pub fn four_term_ascending<S: Scalar>(n_max: usize, alpha: &S) -> LaguerreTable<S> {
    let mut rows: Vec<Vec<Poly<S>>> = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let mut row = vec![Poly::zero(); n + 1];
        row[0] = row_zero(n, alpha);
        for i in 0..n {
            let mut p = row[i].scale_rational(&int(2));
            if i < n - 1 {
                p = &p + &rows[n - 1][i + 1].scale_rational(&int((n - i - 1) as i64));
            }
            p = &p - &rows[n - 1][i].scale(&ap(alpha, (i + n) as i64));
            row[i + 1] = p.scale_rational(&rat(1, 2));
        }
        rows.push(row);
    }
    LaguerreTable { rows }
}

/// A family `P̂_{i;i}..=P̂_{i;n_max}` with its norms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaguerreSboFamily<S> {
    pub i: usize,
    pub polys: Vec<Poly<S>>,
    pub norms: Vec<S>,
    pub route: Route,
}

impl<S: Scalar> LaguerreSboFamily<S> {
    pub fn build(i: usize, n_max: usize, alpha: &S, route: Route) -> Result<Self> {
        check_index(i, n_max)?;
        let polys = match route {
            Route::Closed => {
                let lag = laguerre_table(n_max, alpha);
                (i..=n_max).map(|n| closed_from(i, n, alpha, &lag)).collect()
            }
            Route::Diff1 => via_diff1(i, n_max, alpha)?,
            Route::FiveTerm => via_five_term(i, n_max, alpha)?,
            Route::FourTerm => {
                let t = four_term_table(n_max, alpha);
                (i..=n_max).map(|n| t.get(i, n).clone()).collect()
            }
        };
        let norms = (i..=n_max).map(|n| norm(i, n, alpha)).collect::<Result<_>>()?;
        Ok(LaguerreSboFamily { i, polys, norms, route })
    }

    pub fn get(&self, n: usize) -> Option<&Poly<S>> {
        n.checked_sub(self.i).and_then(|k| self.polys.get(k))
    }
}

/// `p^{(α)}_{i;n}` for `n = i..`, defined by
/// `P̂_{i;n}(0) = (-1)^n 2^{-(n-i)}(α+1)_i p_{i;n}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PAlphaTable<S> {
    pub i: usize,
    pub values: Vec<S>,
}

impl<S: Scalar> PAlphaTable<S> {
    pub fn get(&self, n: usize) -> Option<&S> {
        n.checked_sub(self.i).and_then(|k| self.values.get(k))
    }
}

/// `p_{n+1} = (α+1)p_n + (n-i)(α+i+n)p_{n-1}` from `p_{i;i} = 1`.
pub fn p_alpha_table<S: Scalar>(i: usize, n_max: usize, alpha: &S) -> Result<PAlphaTable<S>> {
    check_index(i, n_max)?;
    let a1 = ap(alpha, 1);
    let mut v = vec![S::one()];
    let mut prev = S::zero();
    for n in i..n_max {
        let cur = &v[n - i];
        let next = a1.times(cur).plus(
            &ap(alpha, (i + n) as i64)
                .times(&prev)
                .mul_rational(&int((n - i) as i64)),
        );
        prev = cur.clone();
        v.push(next);
    }
    Ok(PAlphaTable { i, values: v })
}

/// `P̂_{i;n}(0)` by direct evaluation.
pub fn zero_value<S: Scalar>(i: usize, n: usize, alpha: &S) -> Result<S> {
    Ok(sbo(i, n, alpha)?.eval(&S::zero()))
}

/// `P̂_{i;n}(0)` from the p-recurrence.
pub fn zero_value_recurrence<S: Scalar>(i: usize, n: usize, alpha: &S) -> Result<S> {
    let t = p_alpha_table(i, n, alpha)?;
    let f = sign(n as i64) * pow2(-((n - i) as i64));
    Ok(pochhammer(&ap(alpha, 1), i).times(&t.values[n - i]).mul_rational(&f))
}

/// `P̂_{i;n}(0) = (-1)^i 2^{-(n-i)}(α+1)_i (α+1+2i)_{n-i} F(-(n-i), α+1+i; α+1+2i; 2)`,
/// summed termwise with the denominators of F cleared so that every term
/// stays polynomial in α.
pub fn zero_value_hypergeometric<S: Scalar>(i: usize, n: usize, alpha: &S) -> Result<S> {
    check_index(i, n)?;
    let m = n - i;
    let mut acc = S::zero();
    for q in 0..=m {
        let c = pochhammer(&int(-(m as i64)), q) * pow2(q as i64) / factorial(q);
        let t = pochhammer(&ap(alpha, (1 + i) as i64), q).times(&pochhammer(&ap(alpha, (1 + 2 * i + q) as i64), m - q));
        acc.add_assign_ref(&t.mul_rational(&c));
    }
    let f = sign(i as i64) * pow2(-(m as i64));
    Ok(pochhammer(&ap(alpha, 1), i).times(&acc).mul_rational(&f))
}

/// `R̂_{i;n} = -½(i(α+i) + n(α+n))`.
pub fn subleading_r<S: Scalar>(i: usize, n: usize, alpha: &S) -> S {
    let (ii, nn) = (i as i64, n as i64);
    ap(alpha, ii)
        .mul_rational(&int(ii))
        .plus(&ap(alpha, nn).mul_rational(&int(nn)))
        .mul_rational(&rat(-1, 2))
}

/// `Ŝ_{i;n} = ⅛(i²(α+i)² + (2n²+2(α-3)n-3(α-1))·i(α+i) + n(n-1)(α+n)(α+n-1))`.
pub fn subleading_s<S: Scalar>(i: usize, n: usize, alpha: &S) -> S {
    let (ii, nn) = (i as i64, n as i64);
    let iai = ap(alpha, ii).mul_rational(&int(ii));
    let mid = alpha
        .mul_rational(&int(2 * nn - 3))
        .plus(&S::from_int(2 * nn * nn - 6 * nn + 3));
    let last = ap(alpha, nn)
        .times(&ap(alpha, nn - 1))
        .mul_rational(&int(nn * (nn - 1)));
    iai.times(&iai)
        .plus(&mid.times(&iai))
        .plus(&last)
        .mul_rational(&rat(1, 8))
}

/// The uncorrected variant with `i³(2α+i)` as the first term.
pub fn subleading_s_uncorrected<S: Scalar>(i: usize, n: usize, alpha: &S) -> S {
    let ii = i as i64;
    let head = alpha
        .mul_rational(&int(2))
        .plus(&S::from_int(ii))
        .mul_rational(&int(ii * ii * ii));
    let corrected_head = ap(alpha, ii).mul_rational(&int(ii));
    let corrected_head = corrected_head.times(&corrected_head);
    subleading_s(i, n, alpha).plus(&head.minus(&corrected_head).mul_rational(&rat(1, 8)))
}

/// Hermite/Laguerre SBO bridge at `(i, n)`:
/// `P̂^H_{2i;2n}(x) = P̂^L_{i;n}(x²)|_{α=-1/2}` and
/// `P̂^H_{2i;2n+1}(x) = x P̂^L_{i;n}(x²)|_{α=1/2}`.
pub fn hermite_laguerre_sbo_bridge(i_max: usize, span: usize) -> Report {
    let mut r = Report::new("bridge");
    let n_top = i_max + span;
    let herm = sbo_hermite::four_term_table(2 * n_top + 1);
    let lm = four_term_table(n_top, &rat(-1, 2));
    let lp = four_term_table(n_top, &rat(1, 2));
    for i in 0..=i_max {
        for n in i..=i + span {
            let inst = format!("i={i} n={n}");
            r.record(
                "bridge.sbo-even",
                &inst,
                *herm.get(2 * i, 2 * n) == lm.get(i, n).compose_square(),
            );
            r.record(
                "bridge.sbo-odd",
                &inst,
                *herm.get(2 * i, 2 * n + 1) == lp.get(i, n).compose_square().mul_x(),
            );
            let ok = matches!((sbo_hermite::p_table(i, n), p_alpha_table(i, n, &rat(-1, 2))),
                (Ok(h), Ok(l)) if h.values[n - i] == pow2((n - i) as i64) * &l.values[n - i]);
            r.record("bridge.p-table", &inst, ok);
        }
    }
    r
}

/// Differentiation identities at `n`: the second-order equation, the
/// corrected combination of first and second order, and its uncorrected form.
fn differentiation_identities<S: Scalar>(i: usize, n: usize, alpha: &S, ext: &[Poly<S>]) -> (bool, bool, bool) {
    let zero = Poly::zero();
    let k = n - i;
    let p = &ext[k];
    let prev = if k >= 1 { &ext[k - 1] } else { &zero };
    let next = &ext[k + 1];
    let d = p.derivative();
    let kn = kappa_unchecked(i, n, alpha);
    // xP'' + (α+1-x)P' + nP = 2κP_{n-1}
    let lin = Poly::new(vec![ap(alpha, 1), S::from_int(-1)]);
    let lhs = &(&d.derivative().mul_x() + &(&lin * &d)) + &p.scale(&S::from_int(n as i64));
    let second = lhs == prev.scale(&kn.mul_rational(&int(2)));
    // -P'_{n+1} + ½(α-1)P'_n + (n+1)P_n + κ(P'_{n-1} - 2P_{n-1}) = 0
    let half_am1 = ap(alpha, -1).mul_rational(&rat(1, 2));
    let tail = &prev.derivative() - &prev.scale_rational(&int(2));
    let combo =
        &(&(&d.scale(&half_am1) - &next.derivative()) + &p.scale_rational(&int(n as i64 + 1))) + &tail.scale(&kn);
    // uncorrected: (n+1)P'_n and ¼(n-i)(α+1+i+n)
    let uncorrected_k = ap(alpha, (1 + i + n) as i64).mul_rational(&rat(k as i64, 4));
    let uncorrected = &(&(&d.scale(&half_am1) - &next.derivative()) + &d.scale_rational(&int(n as i64 + 1)))
        + &tail.scale(&uncorrected_k);
    (second, combo.is_zero(), uncorrected.is_zero())
}

/// Constraint orthogonality, mutual orthogonality and norms over `fam`.
pub fn check_orthogonality<S: Scalar>(i: usize, fam: &[Poly<S>], alpha: &S, label: &str, r: &mut Report) {
    let deg = i + fam.len();
    let m1 = laguerre_moments(&int(1), alpha, 2 * deg + 2);
    let m2 = laguerre_moments(&int(2), alpha, 2 * deg + 2);
    for (k, p) in fam.iter().enumerate() {
        let n = i + k;
        let img1 = moment_image(p, &m1, i);
        r.record(
            "laguerre-sbo.constraint-orthogonality",
            format!("{label} i={i} n={n}"),
            img1.iter().all(Scalar::is_zero),
        );
        let img2 = moment_image(p, &m2, deg + 1);
        for (l, q) in fam.iter().enumerate().take(k + 1) {
            let v = pair_with_image(q, &img2);
            let tag = format!("{label} i={i} m={} n={n}", i + l);
            if l == k {
                r.record("laguerre-sbo.norm", tag, norm(i, n, alpha).is_ok_and(|h| h == v));
            } else {
                r.record("laguerre-sbo.mutual-orthogonality", tag, v.is_zero());
            }
        }
    }
}

/// Forward and inverse connection matrices against Laguerre polynomials
/// multiply to the identity for every `i <= n_max`.
pub fn connection_inverse<S: Scalar>(n_max: usize, alpha: &S) -> bool {
    (0..=n_max).into_par_iter().all(|i| {
        let size = n_max - i + 1;
        let mut f = vec![vec![S::zero(); size]; size];
        let mut b = vec![vec![S::zero(); size]; size];
        for col in 0..size {
            for row in 0..=col {
                f[row][col] = closed_coeff(i, i + col, i + row, alpha);
                b[row][col] = inverse_coeff(i, i + col, i + row, alpha);
            }
        }
        is_identity(&mat_mul(&f, &b))
    })
}

/// Argument-doubling relations between `L_m(x)` and `L_m(2x)`, `n <= n_max`.
pub fn doubling_relations<S: Scalar>(n_max: usize, alpha: &S) -> bool {
    let lag = laguerre_table(n_max, alpha);
    let doubled: Vec<Poly<S>> = lag.iter().map(|l| l.substitute_scale(&int(2))).collect();
    (0..=n_max).all(|n| {
        let mut down = Poly::zero();
        let mut up = Poly::zero();
        for m in 0..=n {
            let w = pochhammer(&ap(alpha, 1 + m as i64), n - m).mul_rational(&factorial(n - m).recip());
            down = &down + &lag[m].scale(&w.mul_rational(&(sign((n + m) as i64) * pow2(m as i64))));
            up = &up + &doubled[m].scale(&w.mul_rational(&pow2(-(n as i64))));
        }
        down == doubled[n] && up == lag[n]
    })
}

/// Full symbolic suite over `i <= i_max`, `n <= i + span`.
pub fn verify_sbo_laguerre(i_max: usize, span: usize) -> Report {
    let alpha = AlphaScalar::alpha();
    let n_top = i_max + span;
    let table = four_term_table(n_top + 1, &alpha);
    let ascending = four_term_ascending(n_top, &alpha);
    let lag = laguerre_table(n_top + 1, &alpha);
    let parts: Vec<Report> = (0..=i_max)
        .into_par_iter()
        .map(|i| verify_family(i, i + span, &alpha, &table, &ascending, &lag))
        .collect();
    let mut r = Report::new("sbo-laguerre");
    for p in parts {
        r.extend(p);
    }
    r.record(
        "laguerre-sbo.connection-inverse",
        format!("n<={}", n_top.min(14)),
        connection_inverse(n_top.min(14), &alpha),
    );
    r.record(
        "laguerre-sbo.argument-doubling",
        format!("n<={}", n_top.min(10)),
        doubling_relations(n_top.min(10), &alpha),
    );
    summed_forms(2, n_top, &alpha, &table, &mut r);
    zero_value_tables(i_max.max(6), 8, &alpha, &mut r);
    r.sort();
    r
}

fn verify_family(
    i: usize,
    n_max: usize,
    alpha: &AlphaScalar,
    table: &LaguerreTable<AlphaScalar>,
    ascending: &LaguerreTable<AlphaScalar>,
    lag: &[Poly<AlphaScalar>],
) -> Report {
    let mut r = Report::new("sbo-laguerre");
    let fam: Vec<Poly<AlphaScalar>> = (i..=n_max).map(|n| table.get(i, n).clone()).collect();
    let ext: Vec<Poly<AlphaScalar>> = (i..=n_max + 1).map(|n| table.get(i, n).clone()).collect();
    let diff1 = via_diff1(i, n_max, alpha);
    let five = via_five_term(i, n_max, alpha);
    let uncorrected_five = five_term_with_sign(i, n_max, alpha, 1);
    for (k, p) in fam.iter().enumerate() {
        let n = i + k;
        let inst = format!("i={i} n={n}");
        let c = closed_from(i, n, alpha, lag);
        r.record_with("laguerre-sbo.route-closed-form", &inst, c == *p, || c.pretty());
        r.record(
            "laguerre-sbo.route-diff1",
            &inst,
            diff1.as_ref().is_ok_and(|d| d[k] == *p),
        );
        r.record(
            "laguerre-sbo.route-five-term",
            &inst,
            five.as_ref().is_ok_and(|d| d[k] == *p),
        );
        if k >= 4 {
            r.expect_negative(
                "laguerre-sbo.five-term-uncorrected-sign",
                &inst,
                uncorrected_five.as_ref().is_ok_and(|d| d[k] == *p),
            );
        }
        r.record(
            "laguerre-sbo.route-four-term-ascending",
            &inst,
            ascending.get(i, n) == p,
        );
        r.record("laguerre-sbo.monic", &inst, p.is_monic() && p.degree() == Some(n));
        if n >= 1 {
            r.record(
                "laguerre-sbo.subleading-r",
                &inst,
                p.coeff_at(n - 1) == subleading_r(i, n, alpha),
            );
        }
        if n >= 2 {
            r.record(
                "laguerre-sbo.subleading-s",
                &inst,
                p.coeff_at(n - 2) == subleading_s(i, n, alpha),
            );
            if i >= 1 {
                let uncorrected = subleading_s_uncorrected(i, n, alpha);
                r.expect_negative(
                    "laguerre-sbo.subleading-s-uncorrected",
                    &inst,
                    p.coeff_at(n - 2) == uncorrected,
                );
            }
        }
        if n > i {
            let ok = matches!((kappa(i, n, alpha), norm(i, n, alpha), norm(i, n - 1, alpha)),
                (Ok(kp), Ok(a), Ok(b)) if a.div_exact(&b) == Some(kp.clone()));
            r.record("laguerre-sbo.kappa-norm-ratio", &inst, ok);
        } else {
            r.record(
                "laguerre-sbo.kappa-diagonal",
                &inst,
                kappa(i, n, alpha).is_ok_and(|k| k.is_zero()),
            );
        }
        let (second, combo, uncorrected) = differentiation_identities(i, n, alpha, &ext);
        r.record("laguerre-sbo.second-order", &inst, second);
        r.record("laguerre-sbo.first-second-combination", &inst, combo);
        if n > i {
            r.expect_negative("laguerre-sbo.first-second-combination-uncorrected", &inst, uncorrected);
        }
        if n == i + 1 {
            r.record("laguerre-sbo.seed-gap-one", &inst, seed_gap_one(i, alpha) == *p);
        }
        if n == i + 2 {
            r.record("laguerre-sbo.seed-gap-two", &inst, seed_gap_two(i, alpha) == *p);
        }
        if i == 0 {
            r.record("laguerre-sbo.i0-doubled-argument", &inst, row_zero(n, alpha) == *p);
        }
        let direct = p.eval(&AlphaScalar::zero());
        let ok = zero_value_recurrence(i, n, alpha).is_ok_and(|v| v == direct)
            && zero_value_hypergeometric(i, n, alpha).is_ok_and(|v| v == direct);
        r.record("laguerre-sbo.value-at-zero", &inst, ok);
        let ok = match (
            z_laguerre(i, n as isize, alpha),
            z_laguerre(i, n as isize - 1, alpha),
            norm(i, n, alpha),
        ) {
            (Ok(a), Ok(b), Ok(h)) => {
                let k2 = factorial(n) * factorial(n);
                a.value.mul_rational(&k2) == b.value.times(&h)
            }
            _ => false,
        };
        r.record("laguerre-sbo.z-ratio", &inst, ok);
    }
    check_orthogonality(i, &fam, alpha, "alpha=symbolic", &mut r);
    r
}

/// Summed stepping-in-`i` form for `i <= i_max`, and the `i = 1` row in
/// doubled-argument Laguerre polynomials.
fn summed_forms<S: Scalar>(i_max: usize, n_top: usize, alpha: &S, t: &LaguerreTable<S>, r: &mut Report) {
    for i in 0..=i_max {
        for n in i + 1..=n_top {
            let mut sum = Poly::zero();
            for l in i..n {
                sum = &sum + &t.get(i, l).scale_rational(&(pow2(l as i64) / factorial(l - i)));
            }
            let c = ap(alpha, 1 + 2 * i as i64).mul_rational(&(pow2(-(n as i64)) * factorial(n - i - 1)));
            let rhs = t.get(i, n) - &sum.scale(&c);
            r.record(
                "laguerre-sbo.summed-step",
                format!("i={i} n={n}"),
                *t.get(i + 1, n) == rhs,
            );
        }
    }
    let lag = laguerre_table(n_top, alpha);
    let doubled: Vec<Poly<S>> = lag.iter().map(|l| l.substitute_scale(&int(2))).collect();
    for n in 1..=n_top {
        let mut sum = Poly::zero();
        for (l, d) in doubled.iter().enumerate().take(n) {
            sum = &sum + &d.scale_rational(&sign(l as i64));
        }
        let head = doubled[n].scale_rational(&(sign(n as i64) * pow2(-(n as i64)) * factorial(n)));
        let rhs = &head - &sum.scale(&ap(alpha, 1).mul_rational(&(pow2(-(n as i64)) * factorial(n - 1))));
        r.record("laguerre-sbo.summed-i1-doubled", format!("n={n}"), *t.get(1, n) == rhs);
        let uncorrected_head = doubled[n].scale_rational(&(sign(n as i64) * pow2(-(n as i64))));
        let uncorrected =
            &uncorrected_head - &sum.scale(&ap(alpha, 1).mul_rational(&(pow2(-(n as i64)) * factorial(n - 1))));
        if n >= 2 {
            r.expect_negative(
                "laguerre-sbo.summed-i1-doubled-uncorrected",
                format!("n={n}"),
                *t.get(1, n) == uncorrected,
            );
        }
    }
}

/// p-table boundary values, the first rows as explicit polynomials in α,
/// positivity of coefficients, the cross recurrence and the recurrences
/// at `x = 0`.
fn zero_value_tables(i_max: usize, span: usize, alpha: &AlphaScalar, r: &mut Report) {
    let a = |c: &[i64]| AlphaScalar::from_poly(Poly::new(c.iter().map(|&v| int(v)).collect()));
    let a1 = ap(alpha, 1);
    let table = four_term_table(i_max + span, alpha);
    for i in 0..=i_max {
        let Ok(t) = p_alpha_table(i, i + span, alpha) else {
            continue;
        };
        let ii = i as i64;
        let inst = format!("i={i}");
        r.record("laguerre-sbo.p-diagonal", &inst, t.values[0].is_one());
        r.record("laguerre-sbo.p-gap-one", &inst, t.values[1] == a1);
        r.record("laguerre-sbo.p-gap-two", &inst, t.values[2] == a(&[2 + 2 * ii, 3, 1]));
        r.record(
            "laguerre-sbo.p-gap-three",
            &inst,
            t.values[3] == a1.times(&a(&[6 + 6 * ii, 5, 1])),
        );
        let g4 = a(&[12 * (1 + ii) * (2 + ii), 2 * (25 + 18 * ii), 35 + 12 * ii, 10, 1]);
        r.record("laguerre-sbo.p-gap-four", &inst, t.values[4] == g4);
        let shape = t.values.iter().enumerate().take(7).all(|(m, v)| {
            v.degree().unwrap_or(0) == m
                && v.coeffs().last().is_some_and(Scalar::is_one)
                && v.coeffs().iter().all(|c| c.is_integer() && *c > int(0))
        });
        r.record("laguerre-sbo.p-monic-positive", &inst, shape);
        let diag = pochhammer(&a1, i).mul_rational(&sign(ii));
        r.record(
            "laguerre-sbo.diagonal-value-at-zero",
            &inst,
            table.get(i, i).eval(&AlphaScalar::zero()) == diag,
        );
        // x = 0 in the first-order formula: 4P_{n+1}(0) + 2(α+1)P_n(0) - (n-i)(α+i+n)P_{n-1}(0) = 0
        for n in i..i + span {
            let z = |m: usize| {
                if m < i {
                    AlphaScalar::zero()
                } else {
                    table.get(i, m).eval(&AlphaScalar::zero())
                }
            };
            let lhs = z(n + 1)
                .mul_rational(&int(4))
                .plus(&a1.times(&z(n)).mul_rational(&int(2)))
                .minus(
                    &ap(alpha, (i + n) as i64)
                        .times(&z(n.saturating_sub(1).max(i.saturating_sub(1))))
                        .mul_rational(&int((n - i) as i64)),
                );
            r.record(
                "laguerre-sbo.value-at-zero-recurrence",
                format!("i={i} n={n}"),
                lhs.is_zero(),
            );
        }
    }
    for n in 0..=span {
        let Ok(t) = p_alpha_table(0, n, alpha) else { continue };
        r.record(
            "laguerre-sbo.p-row-zero",
            format!("n={n}"),
            t.values[n] == pochhammer(&a1, n),
        );
        let v = table.get(0, n).eval(&AlphaScalar::zero());
        let corrected = pochhammer(&a1, n).mul_rational(&(sign(n as i64) * pow2(-(n as i64))));
        r.record("laguerre-sbo.i0-value-at-zero", format!("n={n}"), v == corrected);
        if n >= 1 {
            let uncorrected = pochhammer(&a1, n).mul_rational(&(sign(n as i64) * pow2(n as i64)));
            r.expect_negative(
                "laguerre-sbo.i0-value-at-zero-uncorrected",
                format!("n={n}"),
                v == uncorrected,
            );
        }
    }
    for i in 0..i_max {
        for n in i + 1..=i + span {
            let (Ok(pa), Ok(pb)) = (p_alpha_table(i, n, alpha), p_alpha_table(i + 1, n, alpha)) else {
                continue;
            };
            let p_a = |m: usize| pa.get(m).cloned().unwrap_or_else(AlphaScalar::zero);
            let p_b = |m: usize| pb.get(m).cloned().unwrap_or_else(AlphaScalar::zero);
            let c = ap(alpha, 1 + i as i64).mul_rational(&int(2));
            let corrected = c
                .times(&p_b(n))
                .minus(&p_a(n))
                .plus(&c.times(&p_b(n - 1)).mul_rational(&int((n - i - 1) as i64)))
                .minus(&ap(alpha, (i + n) as i64).times(&p_a(n - 1)));
            r.record(
                "laguerre-sbo.p-cross-recurrence",
                format!("i={i} n={n}"),
                corrected.is_zero(),
            );
            let uncorrected_c = alpha.mul_rational(&int(2)).plus(&AlphaScalar::from_int(1 + i as i64));
            let uncorrected = uncorrected_c
                .times(&p_b(n))
                .minus(&p_a(n))
                .plus(&c.times(&p_b(n - 1)).mul_rational(&int((n - i - 1) as i64)))
                .minus(&ap(alpha, (i + n) as i64).times(&p_a(n - 1)));
            r.expect_negative(
                "laguerre-sbo.p-cross-recurrence-uncorrected",
                format!("i={i} n={n}"),
                uncorrected.is_zero(),
            );
            // x = 0 in the four-term recurrence
            let z = |ii: usize, m: usize| {
                if ii > m {
                    AlphaScalar::zero()
                } else {
                    table.get(ii, m).eval(&AlphaScalar::zero())
                }
            };
            let lhs = z(i + 1, n)
                .minus(&z(i, n))
                .mul_rational(&int(2))
                .minus(&z(i + 1, n - 1).mul_rational(&int((n - i - 1) as i64)))
                .plus(&ap(alpha, (i + n) as i64).times(&z(i, n - 1)));
            r.record(
                "laguerre-sbo.value-at-zero-cross",
                format!("i={i} n={n}"),
                lhs.is_zero(),
            );
        }
    }
}
