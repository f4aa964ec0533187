//! Classical Hermite `H_n` and Laguerre `L_n^{(α)}` polynomials: explicit
//! expansions, recurrences, connection coefficients with the monomials,
//! derivative identities, the Hermite/Laguerre interrelation and generating
//! function truncations.
//!
//! Laguerre routines are generic over the scalar so that the same code runs
//! with α symbolic ([`AlphaScalar`]) or numeric ([`Rational`]).

use crate::error::{Result, SboError};
use crate::exact::linalg::{is_identity, mat_mul, Matrix};
use crate::exact::{factorial, int, pochhammer, pow2, rat, sign, Rational, Scalar};
use crate::poly::{AlphaScalar, Parity, Poly};
use crate::report::Report;

/// Largest order accepted by the generating-function expansions.
pub const MAX_SERIES_ORDER: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Hermite,
    Laguerre,
}

/// Leading coefficient `k_n` and reduced norm `h_n` of a classical polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassicalConstants<S> {
    pub k_n: S,
    pub h_n: S,
}

/// Hermite: `k_n = 2^n`, `h_n = 2^n n!` in units of `√π`.
pub fn hermite_constants(n: usize) -> ClassicalConstants<Rational> {
    ClassicalConstants {
        k_n: pow2(n as i64),
        h_n: pow2(n as i64) * factorial(n),
    }
}

/// Laguerre: `k_n = (-1)^n/n!`, `h_n = (α+1)_n/n!` in units of `Γ(α+1)`.
pub fn laguerre_constants<S: Scalar>(n: usize, alpha: &S) -> ClassicalConstants<S> {
    let fact = factorial(n);
    ClassicalConstants {
        k_n: S::from_rational(sign(n as i64) / &fact),
        h_n: pochhammer(&alpha.plus(&S::one()), n).mul_rational(&fact.recip()),
    }
}

/// `H_n` from the explicit sum over `(2x)^{n-2m}`.
pub fn hermite(n: usize) -> Poly<Rational> {
    let mut c = vec![int(0); n + 1];
    for m in 0..=n / 2 {
        let k = n - 2 * m;
        c[k] = sign(m as i64) * factorial(n) / (factorial(m) * factorial(k)) * pow2(k as i64);
    }
    Poly::new(c)
}

/// `H_0..=H_{n_max}` by the three-term recurrence `H_{n+1} = 2xH_n - 2nH_{n-1}`.
pub fn hermite_table(n_max: usize) -> Vec<Poly<Rational>> {
    let mut t = vec![Poly::one()];
    if n_max >= 1 {
        t.push(Poly::monomial(int(2), 1));
    }
    for n in 1..n_max {
        let next = &t[n].mul_x().scale_rational(&int(2)) - &t[n - 1].scale_rational(&int(2 * n as i64));
        t.push(next);
    }
    t
}

/// Monic `Ĥ_n = 2^{-n} H_n`.
pub fn hermite_monic(n: usize) -> Poly<Rational> {
    hermite(n).scale_rational(&pow2(-(n as i64)))
}

/// `L_n^{(α)}` with α symbolic.
pub fn laguerre(n: usize) -> Poly<AlphaScalar> {
    laguerre_with(n, &AlphaScalar::alpha())
}

/// `L_n^{(α)}` from its explicit coefficients for any scalar α.
pub fn laguerre_with<S: Scalar>(n: usize, alpha: &S) -> Poly<S> {
    Poly::new((0..=n).map(|m| laguerre_coeff(m, n, alpha)).collect())
}

/// Coefficient of `x^m` in `L_n^{(α)}`: `(-1)^m/m! · (α+m+1)_{n-m}/(n-m)!`.
pub fn laguerre_coeff<S: Scalar>(m: usize, n: usize, alpha: &S) -> S {
    if m > n {
        return S::zero();
    }
    let base = alpha.plus(&S::from_int(m as i64 + 1));
    pochhammer(&base, n - m).mul_rational(&(sign(m as i64) / (factorial(m) * factorial(n - m))))
}

/// `L_0..=L_{n_max}` by `(n+1)L_{n+1} = (-x+α+2n+1)L_n - (α+n)L_{n-1}`.
pub fn laguerre_table<S: Scalar>(n_max: usize, alpha: &S) -> Vec<Poly<S>> {
    let mut t = vec![Poly::one()];
    if n_max >= 1 {
        t.push(Poly::new(vec![alpha.plus(&S::one()), S::from_int(-1)]));
    }
    for n in 1..n_max {
        let lin = Poly::new(vec![alpha.plus(&S::from_int(2 * n as i64 + 1)), S::from_int(-1)]);
        let rhs = &(&lin * &t[n]) - &t[n - 1].scale(&alpha.plus(&S::from_int(n as i64)));
        t.push(rhs.scale_rational(&rat(1, n as i64 + 1)));
    }
    t
}

/// Monic `L̂_n = (-1)^n n! L_n^{(α)}`.
pub fn laguerre_monic<S: Scalar>(n: usize, alpha: &S) -> Poly<S> {
    laguerre_with(n, alpha).scale_rational(&(sign(n as i64) * factorial(n)))
}

/// Row expanding `(2x)^n` over Hermite polynomials, indexed by degree:
/// `(2x)^n = Σ_m n!/(m!(n-2m)!) H_{n-2m}`.
pub fn monomial_in_hermite(n: usize) -> Vec<Rational> {
    let mut row = vec![int(0); n + 1];
    for m in 0..=n / 2 {
        row[n - 2 * m] = factorial(n) / (factorial(m) * factorial(n - 2 * m));
    }
    row
}

/// Row expanding `x^n` over Laguerre polynomials, indexed by degree:
/// `b_{m,n} = (-1)^m n! C(α+n, n-m)`.
pub fn monomial_in_laguerre<S: Scalar>(n: usize, alpha: &S) -> Vec<S> {
    (0..=n)
        .map(|m| {
            let base = alpha.plus(&S::from_int(m as i64 + 1));
            pochhammer(&base, n - m).mul_rational(&(sign(m as i64) * factorial(n) / factorial(n - m)))
        })
        .collect()
}

/// Parity block of the Hermite connection matrices from their closed forms.
/// Index `(m, n)` refers to degrees `2m+p, 2n+p` with `p` the block parity.
fn hermite_connection_blocks(size: usize, odd: bool) -> (Matrix<Rational>, Matrix<Rational>) {
    let p = usize::from(odd);
    let mut a = vec![vec![int(0); size]; size];
    let mut b = vec![vec![int(0); size]; size];
    for n in 0..size {
        for m in 0..=n {
            let (dm, dn) = (2 * m + p, 2 * n + p);
            // x^{dm} coefficient of H_{dn}
            a[m][n] = sign((n - m) as i64) * pow2(dm as i64) * factorial(dn) / (factorial(dm) * factorial(n - m));
            // H_{dm} coefficient of x^{dn}
            b[m][n] = pow2(-(dn as i64)) * factorial(dn) / (factorial(dm) * factorial(n - m));
        }
    }
    (a, b)
}

/// Hermite connection matrices in both directions are mutually inverse for
/// degrees up to `n_max`, per parity block, and agree with [`hermite`].
pub fn hermite_connection_inverse(n_max: usize) -> bool {
    let table = hermite_table(n_max);
    [false, true].into_iter().all(|odd| {
        let p = usize::from(odd);
        if n_max < p {
            return true;
        }
        let size = (n_max - p) / 2 + 1;
        let (a, b) = hermite_connection_blocks(size, odd);
        let consistent = (0..size).all(|n| (0..=n).all(|m| table[2 * n + p].coeff_at(2 * m + p) == a[m][n]));
        consistent && is_identity(&mat_mul(&a, &b)) && is_identity(&mat_mul(&b, &a))
    })
}

/// Laguerre connection matrices are mutually inverse up to `n_max`.
pub fn laguerre_connection_inverse<S: Scalar>(n_max: usize, alpha: &S) -> bool {
    let size = n_max + 1;
    let mut a: Matrix<S> = vec![vec![S::zero(); size]; size];
    let mut b: Matrix<S> = vec![vec![S::zero(); size]; size];
    for n in 0..size {
        let row = monomial_in_laguerre(n, alpha);
        for m in 0..=n {
            a[m][n] = laguerre_coeff(m, n, alpha);
            b[m][n] = row[m].clone();
        }
    }
    is_identity(&mat_mul(&a, &b)) && is_identity(&mat_mul(&b, &a))
}

/// Monic bridge: `Ĥ_{2n}(x) = L̂_n^{(-1/2)}(x²)` (even) or
/// `Ĥ_{2n+1}(x) = x L̂_n^{(1/2)}(x²)` (odd), plus the unnormalized forms
/// `H_{2n} = (-1)^n 2^{2n} n! L_n^{(-1/2)}(x²)` and
/// `H_{2n+1} = (-1)^n 2^{2n+1} n! x L_n^{(1/2)}(x²)`.
pub fn hermite_laguerre_bridge(n: usize, parity: Parity) -> bool {
    match parity {
        Parity::Even => {
            let a = rat(-1, 2);
            let monic = hermite_monic(2 * n) == laguerre_monic(n, &a).compose_square();
            let scale = sign(n as i64) * pow2(2 * n as i64) * factorial(n);
            let plain = hermite(2 * n) == laguerre_with(n, &a).compose_square().scale_rational(&scale);
            monic && plain
        }
        Parity::Odd => {
            let a = rat(1, 2);
            let monic = hermite_monic(2 * n + 1) == laguerre_monic(n, &a).compose_square().mul_x();
            let scale = sign(n as i64) * pow2(2 * n as i64 + 1) * factorial(n);
            let plain = hermite(2 * n + 1) == laguerre_with(n, &a).compose_square().mul_x().scale_rational(&scale);
            monic && plain
        }
        Parity::Mixed => false,
    }
}

fn series_mul<S: Scalar>(a: &[Poly<S>], b: &[Poly<S>], order: usize) -> Vec<Poly<S>> {
    let mut out = vec![Poly::zero(); order + 1];
    for (i, ai) in a.iter().enumerate().take(order + 1) {
        for (j, bj) in b.iter().enumerate().take(order + 1 - i) {
            out[i + j] = &out[i + j] + &(ai * bj);
        }
    }
    out
}

/// `exp(f)` truncated at `z^order`, for a series with `f(0) = 0`.
fn series_exp<S: Scalar>(f: &[Poly<S>], order: usize) -> Vec<Poly<S>> {
    let mut out = vec![Poly::zero(); order + 1];
    out[0] = Poly::one();
    let mut power = out.clone();
    for k in 1..=order {
        power = series_mul(&power, f, order);
        let inv = factorial(k).recip();
        for (o, p) in out.iter_mut().zip(&power) {
            *o = &*o + &p.scale_rational(&inv);
        }
    }
    out
}

fn check_order(order: usize) -> Result<()> {
    if order > MAX_SERIES_ORDER {
        Err(SboError::OrderExceeded {
            order,
            limit: MAX_SERIES_ORDER,
        })
    } else {
        Ok(())
    }
}

/// Coefficients of `z^0..z^order` in `exp(2xz - z²)`; the `z^n` entry times
/// `n!` is `H_n`.
pub fn hermite_generating(order: usize) -> Result<Vec<Poly<Rational>>> {
    check_order(order)?;
    let mut f = vec![Poly::zero(); order + 1];
    if order >= 1 {
        f[1] = Poly::monomial(int(2), 1);
    }
    if order >= 2 {
        f[2] = Poly::constant(int(-1));
    }
    Ok(series_exp(&f, order))
}

/// Coefficients of `z^0..z^order` in `(1-z)^{-α-1} exp(-xz/(1-z))` with α
/// symbolic; the `z^n` entry is `L_n^{(α)}`.
pub fn laguerre_generating(order: usize) -> Result<Vec<Poly<AlphaScalar>>> {
    check_order(order)?;
    let a1 = AlphaScalar::alpha().plus(&AlphaScalar::one());
    let binom: Vec<Poly<AlphaScalar>> = (0..=order)
        .map(|n| Poly::constant(pochhammer(&a1, n).mul_rational(&factorial(n).recip())))
        .collect();
    let mut f = vec![Poly::zero(); order + 1];
    for fk in f.iter_mut().skip(1) {
        *fk = Poly::monomial(AlphaScalar::from_int(-1), 1);
    }
    Ok(series_mul(&binom, &series_exp(&f, order), order))
}

/// Checks every Hermite identity for `n <= n_max`.
fn hermite_identities(n_max: usize, r: &mut Report) {
    let h = hermite_table(n_max + 2);
    let x = Poly::<Rational>::x();
    let x2 = Poly::monomial(int(1), 2);
    let zero = Poly::zero();
    let at = |k: isize| -> &Poly<Rational> {
        if k < 0 {
            &zero
        } else {
            &h[k as usize]
        }
    };
    for n in 0..=n_max {
        let ni = n as isize;
        let q = |v: i64| int(v);
        let hn = &h[n];
        let d = hn.derivative();
        let inst = format!("n={n}");
        r.record("hermite.explicit-vs-recurrence", &inst, hermite(n) == *hn);
        r.record(
            "hermite.parity",
            &inst,
            hn.reflect() == hn.scale_rational(&sign(ni as i64)),
        );
        if n % 2 == 0 {
            let expected = sign(ni as i64 / 2) * pow2(ni as i64) * pochhammer(&rat(1, 2), n / 2);
            r.record("hermite.value-at-zero", &inst, hn.eval(&int(0)) == expected);
        }
        if n >= 1 && n < n_max {
            let rhs = &x.scale_rational(&q(2)) * hn - at(ni - 1).scale_rational(&q(2 * ni as i64));
            r.record("hermite.three-term", &inst, h[n + 1] == rhs);
        }
        r.record(
            "hermite.derivative",
            &inst,
            d == at(ni - 1).scale_rational(&q(2 * ni as i64)),
        );
        let xd = &x * &d;
        let rhs = &hn.scale_rational(&q(ni as i64)) + &at(ni - 2).scale_rational(&q(2 * ni as i64 * (ni as i64 - 1)));
        r.record("hermite.x-derivative", &inst, xd == rhs);
        let ode = &(&d.derivative() - &(&x * &d).scale_rational(&q(2))) + &hn.scale_rational(&q(2 * ni as i64));
        r.record("hermite.differential-equation", &inst, ode.is_zero());
        r.record(
            "hermite.raising",
            &inst,
            &d - &(&x * hn).scale_rational(&q(2)) == -&h[n + 1],
        );
        let quad = &x2.scale_rational(&q(2)) - &Poly::constant(q(1 + ni as i64));
        let rhs = &h[n + 2].scale_rational(&rat(-1, 2)) + &(&quad * hn);
        r.record("hermite.x-derivative-raising", &inst, xd == rhs);
        let quad = &x2.scale_rational(&q(4)) - &Poly::constant(q(4 * ni as i64 + 2));
        let rhs = &(&quad * hn) - &at(ni - 2).scale_rational(&q(4 * ni as i64 * (ni as i64 - 1)));
        r.record("hermite.two-step", &inst, h[n + 2] == rhs);
    }
}

/// Checks every Laguerre identity for `n <= n_max`, α symbolic.
fn laguerre_identities(n_max: usize, r: &mut Report) {
    let alpha = AlphaScalar::alpha();
    let l = laguerre_table(n_max + 1, &alpha);
    let x = Poly::<AlphaScalar>::x();
    let zero = Poly::zero();
    let c = |v: i64| AlphaScalar::from_int(v);
    let ap = |v: i64| alpha.plus(&c(v));
    for n in 0..=n_max {
        let ni = n as i64;
        let ln = &l[n];
        let prev = if n == 0 { &zero } else { &l[n - 1] };
        let d = ln.derivative();
        let xd = &x * &d;
        let inst = format!("n={n}");
        r.record("laguerre.explicit-vs-recurrence", &inst, laguerre(n) == *ln);
        let at0 = pochhammer(&ap(1), n).mul_rational(&factorial(n).recip());
        r.record("laguerre.value-at-zero", &inst, ln.eval(&AlphaScalar::zero()) == at0);
        let rhs = &ln.scale(&c(ni)) - &prev.scale(&ap(ni));
        r.record("laguerre.x-derivative", &inst, xd == rhs);
        let ode = &(&(&x * &d.derivative()) + &(&Poly::new(vec![ap(1), c(-1)]) * &d)) + &ln.scale(&c(ni));
        r.record("laguerre.differential-equation", &inst, ode.is_zero());
        let lin = Poly::new(vec![ap(1 + ni).negated(), c(1)]);
        let rhs = &l[n + 1].scale(&c(ni + 1)) + &(&lin * ln);
        r.record("laguerre.x-derivative-raising", &inst, xd == rhs);
        let lin = Poly::new(vec![ap(1).negated(), c(1)]);
        let rhs = &(&l[n + 1].scale(&c(ni + 1)) + &(&lin * ln)) - &prev.scale(&ap(ni));
        r.record("laguerre.x-derivative-symmetric", &inst, xd.scale(&c(2)) == rhs);
        if n < n_max {
            let lin = Poly::new(vec![ap(2 * ni + 1), c(-1)]);
            let rhs = &(&lin * ln) - &prev.scale(&ap(ni));
            r.record("laguerre.three-term", &inst, l[n + 1].scale(&c(ni + 1)) == rhs);
        }
    }
}

/// All classical identities of `family` for `n <= n_max`, as a report.
pub fn verify_classical_identities(family: Family, n_max: usize) -> Report {
    let mut r = Report::new("classical");
    match family {
        Family::Hermite => hermite_identities(n_max, &mut r),
        Family::Laguerre => laguerre_identities(n_max, &mut r),
    }
    r
}

/// Generating-function coefficients reproduce the classical polynomials.
pub fn verify_generating_functions(order: usize, r: &mut Report) {
    match hermite_generating(order) {
        Ok(g) => {
            for (n, coeff) in g.iter().enumerate() {
                r.record(
                    "hermite.generating-function",
                    format!("n={n}"),
                    coeff.scale_rational(&factorial(n)) == hermite(n),
                );
            }
        }
        Err(e) => r.record_error("hermite.generating-function", format!("order={order}"), &e),
    }
    match laguerre_generating(order) {
        Ok(g) => {
            for (n, coeff) in g.iter().enumerate() {
                r.record("laguerre.generating-function", format!("n={n}"), *coeff == laguerre(n));
            }
        }
        Err(e) => r.record_error("laguerre.generating-function", format!("order={order}"), &e),
    }
}
