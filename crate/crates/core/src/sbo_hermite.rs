//! Hermite SBO polynomials `P̂_{i;n}` for the pair `e^{-x²}`, `e^{-2x²}`.
//!
//! Indices follow the natural convention: `i` counts the moment constraints
//! and `n` is the degree. Because even and odd polynomials decouple,
//! `P̂_{i-1;n} = P̂_{i;n}` whenever `i+n` is even, so every pair reduces to a
//! canonical pair with `i+n` even. Closed forms are written in half indices
//! `(h, m)` with `n = 2m + p`, `p` the parity of `n`.

use rayon::prelude::*;

use crate::classical::{hermite, hermite_monic, hermite_table};
use crate::error::{Result, SboError};
use crate::exact::linalg::{is_identity, mat_mul};
use crate::exact::{binomial, factorial, hyp2f1_terminating, int, pochhammer, pow2, rat, sign, Rational, Scalar};
use crate::measures::{hermite_moments, moment_image, pair_with_image, z_hermite};
use crate::poly::{Parity, Poly};
use crate::report::Report;

/// Construction route for a family.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Route {
    Closed,
    Diff1,
    FiveTerm,
    FourTerm,
}

fn check_index(i: usize, n: usize) -> Result<()> {
    if i > n {
        Err(SboError::Index { i, n })
    } else {
        Ok(())
    }
}

/// The equivalent pair with `i + n` even.
pub fn canonical(i: usize, n: usize) -> (usize, usize) {
    if (i + n) % 2 == 1 {
        (i + 1, n)
    } else {
        (i, n)
    }
}

/// Half indices `(h, m, odd)` with `n = 2m + odd`.
pub fn half_indices(i: usize, n: usize) -> (usize, usize, bool) {
    let (ci, _) = canonical(i, n);
    let odd = n % 2 == 1;
    (ci / 2, n / 2, odd)
}

/// Coefficient of `H_{2m+p}` in `P̂_{·;2n+p}` with half index `h`.
fn closed_coeff(h: usize, n: usize, m: usize, odd: bool) -> Rational {
    let (shift, extra) = if odd { (rat(3, 2), 1) } else { (rat(1, 2), 0) };
    let base = shift + int((h + m) as i64);
    pow2(-((n + m + extra) as i64)) * binomial(n - h, m - h) * pochhammer(&base, n - m)
}

/// Coefficient of `P̂_{·;2m+p}` in `H_{2n+p}` with half index `h`.
fn inverse_coeff(h: usize, n: usize, m: usize, odd: bool) -> Rational {
    let (shift, extra) = if odd { (rat(3, 2), 1) } else { (rat(1, 2), 0) };
    let base = shift + int((h + m) as i64);
    sign((n - m) as i64) * pow2((n + m + extra) as i64) * binomial(n - h, m - h) * pochhammer(&base, n - m)
}

/// `P̂_{i;n}` as an explicit combination of Hermite polynomials.
pub fn closed(i: usize, n: usize) -> Result<Poly<Rational>> {
    check_index(i, n)?;
    let (h, m, odd) = half_indices(i, n);
    let p = usize::from(odd);
    let table = hermite_table(n);
    let mut acc = Poly::zero();
    for k in h..=m {
        acc = &acc + &table[2 * k + p].scale_rational(&closed_coeff(h, m, k, odd));
    }
    Ok(acc)
}

/// Reduced norm `Ĥ_{i;n} = (P̂_{i;n}, P̂_{i;n})₂` in units of `√(π/2)`.
pub fn norm(i: usize, n: usize) -> Result<Rational> {
    check_index(i, n)?;
    let (h, m, odd) = half_indices(i, n);
    let half = rat(1, 2);
    Ok(if odd {
        pow2(-(2 * m as i64 + 1)) * factorial(m - h) * pochhammer(&half, h + m + 1)
    } else {
        pow2(-(2 * m as i64)) * factorial(m - h) * pochhammer(&half, h + m)
    })
}

/// Row of coefficients writing `H_n` over `P̂_{i;k}`, indexed by degree `k`.
pub fn hermite_in_sbo(i: usize, n: usize) -> Result<Vec<Rational>> {
    check_index(i, n)?;
    let (h, m, odd) = half_indices(i, n);
    let p = usize::from(odd);
    let mut row = vec![int(0); n + 1];
    for k in h..=m {
        row[2 * k + p] = inverse_coeff(h, m, k, odd);
    }
    Ok(row)
}

/// `κ_{i;n} = (n - (-1)^{i+n} i)/2`.
pub fn kappa(i: usize, n: usize) -> Result<Rational> {
    check_index(i, n)?;
    Ok((int(n as i64) - sign((i + n) as i64) * int(i as i64)) / int(2))
}

fn kappa_unchecked(i: usize, n: usize) -> Rational {
    (int(n as i64) - sign((i + n) as i64) * int(i as i64)) / int(2)
}

/// `P̂_{i;i}..=P̂_{i;n_max}` from the first-order differentiation formula
/// `P̂_{n+1} = (2xP̂_n + κ_n P̂_{n-1} - P̂'_n)/2`.
pub fn via_diff1(i: usize, n_max: usize) -> Result<Vec<Poly<Rational>>> {
    check_index(i, n_max)?;
    let mut out = vec![hermite_monic(i)];
    let mut prev = Poly::zero();
    for n in i..n_max {
        let cur = &out[n - i];
        let two_x = cur.mul_x().scale_rational(&int(2));
        let next =
            (&(&two_x + &prev.scale_rational(&kappa_unchecked(i, n))) - &cur.derivative()).scale_rational(&rat(1, 2));
        prev = cur.clone();
        out.push(next);
    }
    Ok(out)
}

/// `P̂_{i;i}..=P̂_{i;n_max}` from the five-term recurrence
/// `P̂_{n+2} = xP̂_{n+1} - ¼P̂_n - ½κ_n xP̂_{n-1} + ¼κ_nκ_{n-1}P̂_{n-2}`,
/// seeded by `Ĥ_i` and `Ĥ_{i+1}`.
pub fn via_five_term(i: usize, n_max: usize) -> Result<Vec<Poly<Rational>>> {
    check_index(i, n_max)?;
    let mut out = vec![hermite_monic(i)];
    if n_max > i {
        out.push(hermite_monic(i + 1));
    }
    let zero = Poly::zero();
    for n in i..n_max.saturating_sub(1) {
        let k = |d: usize| -> usize { n - i - d };
        let get = |back: usize| -> &Poly<Rational> {
            if back > n - i {
                &zero
            } else {
                &out[k(back)]
            }
        };
        let kn = kappa_unchecked(i, n);
        let kn1 = if n > i { kappa_unchecked(i, n - 1) } else { int(0) };
        let next = &(&(&out[n + 1 - i].mul_x() - &out[n - i].scale_rational(&rat(1, 4)))
            - &get(1).mul_x().scale_rational(&(&kn / int(2))))
            + &get(2).scale_rational(&(&kn * &kn1 / int(4)));
        out.push(next);
    }
    Ok(out)
}

/// Every `P̂_{i;n}` with `0 <= i <= n <= n_max`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SboTable {
    rows: Vec<Vec<Poly<Rational>>>,
}

impl SboTable {
    pub fn n_max(&self) -> usize {
        self.rows.len() - 1
    }

    /// `P̂_{i;n}`; panics outside the table.
    pub fn get(&self, i: usize, n: usize) -> &Poly<Rational> {
        &self.rows[n][i]
    }
}

/// Production route: the four-term recurrence descending in `i` from the
/// diagonal, `P̂_{i;n} = P̂_{i+2;n} - ((n-i-2)/4)P̂_{i+2;n-2} + ((i+n-1)/4)P̂_{i;n-2}`.
pub fn four_term_table(n_max: usize) -> SboTable {
    let mut rows: Vec<Vec<Poly<Rational>>> = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let mut row = vec![Poly::zero(); n + 1];
        row[n] = hermite_monic(n);
        let mut i = n;
        while i >= 2 {
            i -= 2;
            let mut p = row[i + 2].clone();
            if n - i > 2 {
                p = &p - &rows[n - 2][i + 2].scale_rational(&rat((n - i - 2) as i64, 4));
            }
            p = &p + &rows[n - 2][i].scale_rational(&rat((i + n) as i64 - 1, 4));
            row[i] = p;
        }
        for i in (0..n).filter(|i| (i + n) % 2 == 1) {
            row[i] = row[i + 1].clone();
        }
        rows.push(row);
    }
    SboTable { rows }
}

/// `P̂_{i;n}` through the production table.
pub fn sbo(i: usize, n: usize) -> Result<Poly<Rational>> {
    check_index(i, n)?;
    Ok(four_term_table(n).get(i, n).clone())
}

/// The same recurrence read upwards in `i`, starting from the `i = 0` row
/// `P̂_{0;n} = 2^{-n} G_n`.
pub fn four_term_ascending(n_max: usize) -> SboTable {
    let mut rows: Vec<Vec<Poly<Rational>>> = (0..=n_max).map(|n| vec![Poly::zero(); n + 1]).collect();
    for n in 0..=n_max {
        rows[n][0] = scaled_hermite(n).scale_rational(&pow2(-(n as i64)));
        if n >= 1 && n % 2 == 1 {
            rows[n][1] = rows[n][0].clone();
        }
    }
    for n in 0..=n_max {
        let start = n % 2;
        let mut i = start;
        while i + 2 <= n {
            let mut p = rows[n][i].scale_rational(&int(4));
            if n >= 2 && i + 2 <= n - 2 {
                p = &p + &rows[n - 2][i + 2].scale_rational(&int((n - i - 2) as i64));
            }
            if n >= 2 {
                p = &p - &rows[n - 2][i].scale_rational(&int((i + n) as i64 - 1));
            }
            rows[n][i + 2] = p.scale_rational(&rat(1, 4));
            i += 2;
        }
        for i in (0..n).filter(|i| (i + n) % 2 == 1) {
            rows[n][i] = rows[n][i + 1].clone();
        }
    }
    SboTable { rows }
}

/// `G_m(x) = 2^{-m/2} H_m(√2 x)`, which has rational coefficients.
pub fn scaled_hermite(m: usize) -> Poly<Rational> {
    let h = hermite(m);
    Poly::new(
        h.coeffs()
            .iter()
            .enumerate()
            .map(|(k, c)| {
                if Scalar::is_zero(c) {
                    int(0)
                } else {
                    c * pow2((k as i64 - m as i64) / 2)
                }
            })
            .collect(),
    )
}

/// A family `P̂_{i;i}..=P̂_{i;n_max}` with its norms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HermiteSboFamily {
    pub i: usize,
    pub polys: Vec<Poly<Rational>>,
    pub norms: Vec<Rational>,
    pub route: Route,
}

impl HermiteSboFamily {
    pub fn build(i: usize, n_max: usize, route: Route) -> Result<Self> {
        check_index(i, n_max)?;
        let polys = match route {
            Route::Closed => (i..=n_max).map(|n| closed(i, n)).collect::<Result<_>>()?,
            Route::Diff1 => via_diff1(i, n_max)?,
            Route::FiveTerm => via_five_term(i, n_max)?,
            Route::FourTerm => {
                let t = four_term_table(n_max);
                (i..=n_max).map(|n| t.get(i, n).clone()).collect()
            }
        };
        let norms = (i..=n_max).map(|n| norm(i, n)).collect::<Result<_>>()?;
        Ok(HermiteSboFamily { i, polys, norms, route })
    }

    /// `P̂_{i;n}`; `None` outside the built range.
    pub fn get(&self, n: usize) -> Option<&Poly<Rational>> {
        n.checked_sub(self.i).and_then(|k| self.polys.get(k))
    }
}

/// `p_{h;m}` for `m = h..=m_max`, from `P̂_{2h;2m}(0) = (-1)^m 2^{-2(m-h)} (1/2)_h p_{h;m}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PZeroTable {
    pub i: usize,
    pub values: Vec<Rational>,
}

impl PZeroTable {
    pub fn get(&self, n: usize) -> Option<&Rational> {
        n.checked_sub(self.i).and_then(|k| self.values.get(k))
    }
}

/// Three-term recurrence `p_{n+1} = p_n + 2(n-h)(2n+2h-1) p_{n-1}` from
/// `p_{h;h} = p_{h;h+1} = 1`.
pub fn p_table(h: usize, m_max: usize) -> Result<PZeroTable> {
    check_index(h, m_max)?;
    let mut v = vec![int(1)];
    let mut prev = int(0);
    for n in h..m_max {
        let next = &v[n - h] + int(2 * (n - h) as i64 * (2 * (n + h) as i64 - 1)) * &prev;
        prev = v[n - h].clone();
        v.push(next);
    }
    Ok(PZeroTable { i: h, values: v })
}

/// `P̂_{i;n}(0)` from the corrected terminating hypergeometric form.
pub fn zero_value_hypergeometric(i: usize, n: usize) -> Result<Rational> {
    check_index(i, n)?;
    if n % 2 == 1 {
        return Ok(int(0));
    }
    let (h, m, _) = half_indices(i, n);
    zero_value_hyp_with(h, m, &(rat(1, 2) + int(h as i64)))
}

/// The hypergeometric expression with a chosen second parameter `b`.
/// The uncorrected variant uses `b = 1/2`; the consistent one `b = 1/2 + h`.
pub fn zero_value_hyp_with(h: usize, m: usize, b: &Rational) -> Result<Rational> {
    let c = rat(1, 2) + int(2 * h as i64);
    let f = hyp2f1_terminating(m - h, b, &c, &int(2))?;
    Ok(sign(h as i64) * pow2(-((m - h) as i64)) * pochhammer(&rat(1, 2), h) * pochhammer(&c, m - h) * f)
}

/// `P̂_{i;n}(0)` from the p-recurrence.
pub fn zero_value_recurrence(i: usize, n: usize) -> Result<Rational> {
    check_index(i, n)?;
    if n % 2 == 1 {
        return Ok(int(0));
    }
    let (h, m, _) = half_indices(i, n);
    let p = p_table(h, m)?.values[m - h].clone();
    Ok(sign(m as i64) * pow2(-2 * (m - h) as i64) * pochhammer(&rat(1, 2), h) * p)
}

/// `P̂_{i;n}(0)` by direct evaluation.
pub fn zero_value(i: usize, n: usize) -> Result<Rational> {
    Ok(sbo(i, n)?.eval(&int(0)))
}

/// Subleading coefficient `Ŝ_{i;n}` (coefficient of `x^{n-2}`).
pub fn subleading_s(i: usize, n: usize) -> Result<Rational> {
    check_index(i, n)?;
    let (h, m, odd) = half_indices(i, n);
    let (h, m) = (h as i64, m as i64);
    Ok(if odd {
        rat(-1, 4) * int(h * (2 * h + 1) + m * (2 * m + 1))
    } else {
        rat(-1, 4) * int(h * (2 * h - 1) + m * (2 * m - 1))
    })
}

/// Differentiation identities at `n`, given `P̂_{n-2}..=P̂_{n+2}`
/// (missing lower members are zero).
fn differentiation_identities(i: usize, n: usize, fam: &[Poly<Rational>]) -> (bool, bool) {
    let zero = Poly::zero();
    let at = |k: isize| -> &Poly<Rational> {
        let idx = k - i as isize;
        if idx < 0 {
            &zero
        } else {
            &fam[idx as usize]
        }
    };
    let ni = n as isize;
    let p = at(ni);
    let d = p.derivative();
    let kk = if n >= i + 2 {
        kappa_unchecked(i, n) * kappa_unchecked(i, n - 1)
    } else {
        int(0)
    };
    // xP' = -2P_{n+2} + ½(4x²-1)P + ½κ_nκ_{n-1}P_{n-2}
    let quad = Poly::new(vec![int(-1), int(0), int(4)]);
    let rhs = &(&at(ni + 2).scale_rational(&int(-2)) + &(&quad * p).scale_rational(&rat(1, 2)))
        + &at(ni - 2).scale_rational(&(&kk / int(2)));
    let first = d.mul_x() == rhs;
    // P'' - 2xP' + 2nP - 2κ_nκ_{n-1}P_{n-2} = 0
    let lhs = &(&(&d.derivative() - &d.mul_x().scale_rational(&int(2))) + &p.scale_rational(&int(2 * n as i64)))
        - &at(ni - 2).scale_rational(&(&kk * int(2)));
    (first, lhs.is_zero())
}

/// Reduced moments of both products, long enough for degrees up to `deg`.
fn moment_tables(deg: usize) -> (Vec<Rational>, Vec<Rational>) {
    (
        hermite_moments(&int(1), 2 * deg + 2),
        hermite_moments(&int(2), 2 * deg + 2),
    )
}

/// Constraint orthogonality `(x^m, P̂_{i;n}) = 0` for `m < i` and mutual
/// orthogonality plus norms under `(,)₂`, over the family in `fam`.
pub fn check_orthogonality(i: usize, fam: &[Poly<Rational>], r: &mut Report) {
    let deg = i + fam.len();
    let (m1, m2) = moment_tables(deg);
    for (k, p) in fam.iter().enumerate() {
        let n = i + k;
        let img1 = moment_image(p, &m1, i);
        r.record(
            "hermite-sbo.constraint-orthogonality",
            format!("i={i} n={n}"),
            img1.iter().all(Scalar::is_zero),
        );
        let img2 = moment_image(p, &m2, deg + 1);
        for (l, q) in fam.iter().enumerate().take(k + 1) {
            let v = pair_with_image(q, &img2);
            let tag = format!("i={i} m={} n={n}", i + l);
            if l == k {
                let ok = norm(i, n).is_ok_and(|h| h == v);
                r.record_with("hermite-sbo.norm", tag, ok, || format!("quadratic form {v}"));
            } else {
                r.record("hermite-sbo.mutual-orthogonality", tag, Scalar::is_zero(&v));
            }
        }
    }
}

/// Forward and inverse connection matrices against Hermite polynomials
/// multiply to the identity, for every canonical block up to degree `n_max`.
pub fn connection_inverse(n_max: usize) -> bool {
    (0..=n_max).all(|i| {
        let top = if (n_max + i) % 2 == 0 {
            n_max
        } else {
            n_max.saturating_sub(1)
        };
        if top < i {
            return true;
        }
        let (h, m, odd) = half_indices(i, top);
        let size = m - h + 1;
        let mut f = vec![vec![int(0); size]; size];
        let mut b = vec![vec![int(0); size]; size];
        for col in 0..size {
            for row in 0..=col {
                f[row][col] = closed_coeff(h, h + col, h + row, odd);
                b[row][col] = inverse_coeff(h, h + col, h + row, odd);
            }
        }
        is_identity(&mat_mul(&f, &b))
    })
}

/// The `(i, n)` grid `i <= i_max`, `i <= n <= i + span`.
pub fn grid(i_max: usize, span: usize) -> Vec<(usize, usize)> {
    (0..=i_max).flat_map(|i| (i..=i + span).map(move |n| (i, n))).collect()
}

/// Route equivalence, structure, orthogonality, identities and values at
/// zero for every `i <= i_max`, `n <= i + span`.
pub fn verify_sbo_hermite(i_max: usize, span: usize) -> Report {
    let n_top = i_max + span;
    let table = four_term_table(n_top + 2);
    let ascending = four_term_ascending(n_top);
    let parts: Vec<Report> = (0..=i_max)
        .into_par_iter()
        .map(|i| verify_family(i, i + span, &table, &ascending))
        .collect();
    let mut r = Report::new("sbo-hermite");
    for p in parts {
        r.extend(p);
    }
    r.record(
        "hermite-sbo.connection-inverse",
        format!("n<={}", n_top.max(20)),
        connection_inverse(n_top.max(20)),
    );
    summed_forms(2, n_top, &table, &mut r);
    zero_value_tables(i_max.max(6), 8, &mut r);
    r.sort();
    r
}

fn verify_family(i: usize, n_max: usize, table: &SboTable, ascending: &SboTable) -> Report {
    let mut r = Report::new("sbo-hermite");
    let fam: Vec<Poly<Rational>> = (i..=n_max).map(|n| table.get(i, n).clone()).collect();
    let diff1 = via_diff1(i, n_max);
    let five = via_five_term(i, n_max);
    let ext: Vec<Poly<Rational>> = (i..=n_max + 2).map(|n| table.get(i, n).clone()).collect();
    for (k, p) in fam.iter().enumerate() {
        let n = i + k;
        let inst = format!("i={i} n={n}");
        match closed(i, n) {
            Ok(c) => r.record_with("hermite-sbo.route-closed-form", &inst, c == *p, || c.pretty()),
            Err(e) => r.record_error("hermite-sbo.route-closed-form", &inst, &e),
        }
        r.record(
            "hermite-sbo.route-diff1",
            &inst,
            diff1.as_ref().is_ok_and(|d| d[k] == *p),
        );
        r.record(
            "hermite-sbo.route-five-term",
            &inst,
            five.as_ref().is_ok_and(|d| d[k] == *p),
        );
        r.record("hermite-sbo.route-four-term-ascending", &inst, ascending.get(i, n) == p);
        r.record("hermite-sbo.monic", &inst, p.is_monic() && p.degree() == Some(n));
        let parity = if n % 2 == 0 { Parity::Even } else { Parity::Odd };
        r.record("hermite-sbo.parity", &inst, p.parity() == parity);
        if i >= 1 && (i + n) % 2 == 0 {
            r.record("hermite-sbo.index-parity", &inst, table.get(i - 1, n) == p);
        }
        r.record(
            "hermite-sbo.subleading-r",
            &inst,
            n == 0 || Scalar::is_zero(&p.coeff_at(n - 1)),
        );
        if n >= 2 {
            let ok = subleading_s(i, n).is_ok_and(|s| s == p.coeff_at(n - 2));
            r.record("hermite-sbo.subleading-s", &inst, ok);
        }
        if n > i {
            let ok = matches!((kappa(i, n), norm(i, n), norm(i, n - 1)),
                (Ok(kp), Ok(a), Ok(b)) if kp == int(2) * &a / &b);
            r.record("hermite-sbo.kappa-norm-ratio", &inst, ok);
        } else {
            r.record(
                "hermite-sbo.kappa-diagonal",
                &inst,
                kappa(i, n).is_ok_and(|kp| Scalar::is_zero(&kp)),
            );
        }
        let (first, second) = differentiation_identities(i, n, &ext);
        r.record("hermite-sbo.x-derivative", &inst, first);
        r.record("hermite-sbo.second-order", &inst, second);
        if i == 0 {
            let g = scaled_hermite(n).scale_rational(&pow2(-(n as i64)));
            r.record("hermite-sbo.i0-scaled-hermite", &inst, g == *p);
        }
        if i == 1 && n % 2 == 1 {
            r.record("hermite-sbo.i1-odd-equals-i0", &inst, table.get(0, n) == p);
        }
        if n % 2 == 0 {
            let direct = p.eval(&int(0));
            let ok = zero_value_recurrence(i, n).is_ok_and(|v| v == direct)
                && zero_value_hypergeometric(i, n).is_ok_and(|v| v == direct);
            r.record("hermite-sbo.value-at-zero", &inst, ok);
        } else {
            r.record("hermite-sbo.value-at-zero", &inst, Scalar::is_zero(&p.eval(&int(0))));
        }
        // Z ratio: Z_{h;m}/Z_{h;m-1} = Ĥ k², k the leading coefficient of H_n
        let (h, m, odd) = half_indices(i, n);
        let ok = match (
            z_hermite(h, m as isize, odd),
            z_hermite(h, m as isize - 1, odd),
            norm(i, n),
        ) {
            (Ok(a), Ok(b), Ok(hn)) => a.value / b.value == hn * pow2(2 * n as i64),
            _ => false,
        };
        r.record("hermite-sbo.z-ratio", &inst, ok);
    }
    check_orthogonality(i, &fam, &mut r);
    r
}

/// The summed stepping-in-`i` forms, the seeds two and three above the
/// diagonal, and the `G`/`H` connection, for half index `h <= h_max`.
fn summed_forms(h_max: usize, n_top: usize, t: &SboTable, r: &mut Report) {
    let m_top = n_top / 2;
    for h in 0..=h_max {
        for m in h + 1..=m_top {
            for odd in [false, true] {
                let p = usize::from(odd);
                if 2 * m + p > n_top {
                    continue;
                }
                let c0 = if odd { rat(3, 2) } else { rat(1, 2) } + int(2 * h as i64);
                let pref = pow2(-(m as i64)) * c0 * factorial(m - h - 1);
                let mut sum = Poly::zero();
                for l in h..m {
                    let w = pow2(l as i64) / factorial(l - h);
                    sum = &sum + &t.get(2 * h, 2 * l + p).scale_rational(&w);
                }
                let rhs = t.get(2 * h, 2 * m + p) - &sum.scale_rational(&pref);
                let tag = if odd {
                    "hermite-sbo.summed-step-odd"
                } else {
                    "hermite-sbo.summed-step-even"
                };
                r.record(tag, format!("h={h} m={m}"), *t.get(2 * h + 2, 2 * m + p) == rhs);
            }
        }
    }
    for m in 1..=m_top {
        let mut sum = Poly::zero();
        for l in 0..m {
            sum = &sum + &scaled_hermite(2 * l).scale_rational(&(pow2(-(l as i64)) / factorial(l)));
        }
        let rhs = &scaled_hermite(2 * m).scale_rational(&pow2(-2 * m as i64))
            - &sum.scale_rational(&(pow2(-(m as i64 + 1)) * factorial(m - 1)));
        r.record("hermite-sbo.summed-i1-even", format!("m={m}"), *t.get(1, 2 * m) == rhs);
        if 2 * m < n_top {
            let mut sum = Poly::zero();
            for l in 0..m {
                sum = &sum + &scaled_hermite(2 * l + 1).scale_rational(&(pow2(-(l as i64 + 1)) / factorial(l)));
            }
            let rhs = &scaled_hermite(2 * m + 1).scale_rational(&pow2(-(2 * m as i64 + 1)))
                - &sum.scale_rational(&(int(3) * pow2(-(m as i64 + 1)) * factorial(m - 1)));
            r.record(
                "hermite-sbo.summed-i2-odd",
                format!("m={m}"),
                *t.get(2, 2 * m + 1) == rhs,
            );
        }
    }
    for i in 0..=n_top.saturating_sub(3) {
        let h = |k: usize| hermite(k);
        let two = (&h(i + 2) + &h(i).scale_rational(&int(1 + 2 * i as i64))).scale_rational(&pow2(-(i as i64 + 2)));
        r.record("hermite-sbo.seed-gap-two", format!("i={i}"), *t.get(i, i + 2) == two);
        let three =
            (&h(i + 3) + &h(i + 1).scale_rational(&int(3 + 2 * i as i64))).scale_rational(&pow2(-(i as i64 + 3)));
        r.record(
            "hermite-sbo.seed-gap-three",
            format!("i={i}"),
            *t.get(i, i + 3) == three,
        );
    }
    for n in 0..=n_top {
        let mut g = Poly::zero();
        let mut hh = Poly::zero();
        for m in 0..=n / 2 {
            let c = pow2(-(m as i64)) * factorial(n) / (factorial(m) * factorial(n - 2 * m));
            g = &g + &hermite(n - 2 * m).scale_rational(&c);
            hh = &hh + &scaled_hermite(n - 2 * m).scale_rational(&(sign(m as i64) * c));
        }
        let ok = g == scaled_hermite(n) && hh == hermite(n);
        r.record("hermite-sbo.scaled-hermite-connection", format!("n={n}"), ok);
    }
}

/// Values at zero: p-table boundary values, closed forms of the first
/// few rows, the cross recurrence, and the uncorrected-versus-corrected
/// hypergeometric parameter.
fn zero_value_tables(h_max: usize, span: usize, r: &mut Report) {
    let half = rat(1, 2);
    for h in 0..=h_max {
        let Ok(t) = p_table(h, h + span) else { continue };
        let hi = h as i64;
        r.record(
            "hermite-sbo.p-diagonal",
            format!("i={h}"),
            t.values[0] == int(1) && t.values[1] == int(1),
        );
        r.record(
            "hermite-sbo.p-gap-two",
            format!("i={h}"),
            t.values[2] == int(8 * hi + 3),
        );
        r.record(
            "hermite-sbo.p-gap-three",
            format!("i={h}"),
            t.values[3] == int(24 * hi + 15),
        );
        r.record(
            "hermite-sbo.p-gap-four",
            format!("i={h}"),
            t.values[4] == int(192 * hi * hi + 336 * hi + 105),
        );
        r.record(
            "hermite-sbo.p-positive",
            format!("i={h}"),
            t.values.iter().all(|v| *v > int(0)),
        );
        let diag = sign(hi) * pochhammer(&half, h);
        r.record(
            "hermite-sbo.diagonal-value-at-zero",
            format!("i={h}"),
            zero_value(2 * h, 2 * h).is_ok_and(|v| v == diag),
        );
        if h >= 1 {
            continue;
        }
        for m in 0..=span {
            let p0 = pow2(m as i64) * pochhammer(&half, m);
            r.record("hermite-sbo.p-row-zero", format!("n={m}"), t.values[m] == p0);
            let v = sign(m as i64) * pow2(-(m as i64)) * pochhammer(&half, m);
            r.record(
                "hermite-sbo.i0-value-at-zero",
                format!("n={m}"),
                zero_value(0, 2 * m).is_ok_and(|z| z == v),
            );
        }
    }
    // 2(2h+1)p_{h+1;m} - p_{h;m} + 4(2h+1)(m-h-1)p_{h+1;m-1} - (2h+2m-1)p_{h;m-1} = 0
    for h in 0..h_max {
        for m in h + 1..=h + span {
            let (Ok(a), Ok(b)) = (p_table(h, m), p_table(h + 1, m)) else {
                continue;
            };
            let pa = |n: usize| a.get(n).cloned().unwrap_or_else(|| int(0));
            let pb = |n: usize| b.get(n).cloned().unwrap_or_else(|| int(0));
            let c = int(2 * h as i64 + 1);
            let lhs = int(2) * &c * pb(m) - pa(m) + int(4) * &c * int(m as i64 - h as i64 - 1) * pb(m - 1)
                - int(2 * (h + m) as i64 - 1) * pa(m - 1);
            r.record(
                "hermite-sbo.p-cross-recurrence",
                format!("i={h} n={m}"),
                Scalar::is_zero(&lhs),
            );
        }
    }
    let uncorrected = zero_value_hyp_with(1, 2, &half);
    let table = zero_value(2, 4);
    let holds = matches!((&uncorrected, &table), (Ok(a), Ok(b)) if a == b);
    r.expect_negative("hermite-sbo.value-at-zero-uncorrected-parameter", "i=1 n=2", holds);
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: &[(i64, i64)]) -> Poly<Rational> {
        Poly::new(v.iter().map(|&(n, d)| rat(n, d)).collect())
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(closed(2, 2).unwrap(), q(&[(-1, 2), (0, 1), (1, 1)]));
        assert_eq!(closed(1, 2).unwrap(), q(&[(-1, 2), (0, 1), (1, 1)]));
        assert_eq!(closed(2, 4).unwrap(), q(&[(1, 8), (0, 1), (-7, 4), (0, 1), (1, 1)]));
        for i in 0..6 {
            assert_eq!(closed(i, i).unwrap(), hermite_monic(i));
        }
        assert_eq!(closed(3, 2), Err(SboError::Index { i: 3, n: 2 }));
    }

    #[test]
    fn norm_and_kappa_examples() {
        assert_eq!(norm(1, 2).unwrap(), rat(3, 16));
        assert_eq!(norm(0, 0).unwrap(), int(1));
        assert_eq!(kappa(3, 3).unwrap(), int(0));
        assert_eq!(kappa(1, 2).unwrap(), rat(3, 2));
        assert_eq!(kappa(1, 3).unwrap(), int(1));
    }

    #[test]
    fn recurrence_examples() {
        let d = via_diff1(1, 4).unwrap();
        assert_eq!(d[1], q(&[(-1, 2), (0, 1), (1, 1)]));
        assert_eq!(via_diff1(2, 3).unwrap()[1], q(&[(0, 1), (-3, 2), (0, 1), (1, 1)]));
        let f = via_five_term(1, 4).unwrap();
        assert_eq!(f[3], q(&[(1, 8), (0, 1), (-7, 4), (0, 1), (1, 1)]));
        let t = four_term_table(8);
        assert_eq!(*t.get(2, 2), q(&[(-1, 2), (0, 1), (1, 1)]));
        assert_eq!(*t.get(0, 2), q(&[(-1, 4), (0, 1), (1, 1)]));
        assert_eq!(four_term_ascending(8), t);
    }

    #[test]
    fn zero_values() {
        assert_eq!(zero_value(1, 4).unwrap(), rat(1, 8));
        assert_eq!(zero_value_hypergeometric(1, 4).unwrap(), rat(1, 8));
        assert_eq!(zero_value_hyp_with(1, 2, &rat(1, 2)).unwrap(), rat(-3, 8));
        assert_eq!(p_table(2, 4).unwrap().get(4), Some(&int(19)));
        for n in 0..6 {
            let expect = sign(n) * factorial(2 * n as usize) / (pow2(3 * n) * factorial(n as usize));
            assert_eq!(zero_value(0, 2 * n as usize).unwrap(), expect);
        }
    }

    #[test]
    fn subleading_example() {
        assert_eq!(subleading_s(1, 4).unwrap(), rat(-7, 4));
    }

    #[test]
    fn inverse_row_reexpands() {
        let row = hermite_in_sbo(2, 4).unwrap();
        assert_eq!(row[4], int(16));
        let t = four_term_table(4);
        let mut acc = Poly::zero();
        for (k, c) in row.iter().enumerate() {
            acc = &acc + &t.get(2, k.max(2)).scale_rational(c);
        }
        assert_eq!(acc, hermite(4));
        assert!(connection_inverse(12));
    }

    #[test]
    fn small_suite_passes() {
        let r = verify_sbo_hermite(3, 6);
        assert!(r.passed(), "{:#?}", r.failures().take(5).collect::<Vec<_>>());
    }
}
