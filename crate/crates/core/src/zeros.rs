//! Real zeros: exact Sturm counting and isolation over ℚ, then exact
//! bisection to width `2^-53` and on until the root's double is determined.

use std::cmp::Ordering;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::classical::{hermite_monic, laguerre_monic};
use crate::error::{Result, SboError};
use crate::exact::{fmt_pq, from_f64, int, pow2, rat, to_f64, Rational};
use crate::measures::sample_alphas;
use crate::poly::Poly;
use crate::report::Report;
use crate::{sbo_hermite, sbo_laguerre};

/// Target width of an isolating interval.
const WIDTH_EXP: i64 = 53;
/// Extra bisections allowed when separating two overlapping intervals.
const MAX_EXTRA_DEPTH: usize = 4096;

fn ser_rational<S: Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&fmt_pq(r))
}

/// One real root: an isolating interval `(lo, hi)` whose endpoints are not
/// roots, or the exact root `lo == hi`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RootInterval {
    #[serde(serialize_with = "ser_rational")]
    pub lo: Rational,
    #[serde(serialize_with = "ser_rational")]
    pub hi: Rational,
    pub approx: f64,
}

impl RootInterval {
    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RootReport {
    pub degree: usize,
    /// Distinct real roots.
    pub real_root_count: usize,
    /// Sorted and pairwise disjoint.
    pub roots: Vec<RootInterval>,
    pub all_simple: bool,
    pub all_nonnegative: bool,
    /// Square-free part, monic; what the intervals refer to.
    #[serde(skip)]
    pub squarefree: Poly<Rational>,
}

/// Integer polynomial with the same sign as a rational one everywhere.
#[derive(Clone, Debug)]
struct IntPoly(Vec<BigInt>);

impl IntPoly {
    /// Positive multiple of `p` with coprime integer coefficients.
    fn primitive(p: &Poly<Rational>) -> Self {
        let den = p.coeffs().iter().fold(BigInt::one(), |acc, a| acc.lcm(a.denom()));
        let ints: Vec<BigInt> = p
            .coeffs()
            .iter()
            .map(|a| (a * Rational::from_integer(den.clone())).to_integer())
            .collect();
        let g = ints.iter().fold(BigInt::zero(), |acc, a| acc.gcd(a));
        IntPoly(if g.is_zero() {
            ints
        } else {
            ints.into_iter().map(|a| a / &g).collect()
        })
    }

    /// Sign of `p(num/den)`: integer Horner on `den^d p(num/den)`, `den > 0`.
    fn sign_at(&self, x: &Rational) -> Ordering {
        let (num, den) = (x.numer(), x.denom());
        let mut it = self.0.iter().rev();
        let Some(lead) = it.next() else { return Ordering::Equal };
        let mut acc = lead.clone();
        let mut dpow = BigInt::one();
        for a in it {
            dpow *= den;
            acc = acc * num + a * &dpow;
        }
        acc.sign_ordering()
    }

    fn sign_at_infinity(&self, positive: bool) -> Ordering {
        let Some(lead) = self.0.last() else {
            return Ordering::Equal;
        };
        let s = lead.sign_ordering();
        if !positive && self.0.len() % 2 == 0 {
            s.reverse()
        } else {
            s
        }
    }
}

trait SignOrdering {
    fn sign_ordering(&self) -> Ordering;
}

impl SignOrdering for BigInt {
    fn sign_ordering(&self) -> Ordering {
        match self.sign() {
            Sign::Minus => Ordering::Less,
            Sign::NoSign => Ordering::Equal,
            Sign::Plus => Ordering::Greater,
        }
    }
}

/// Sturm chain of a square-free polynomial, each member scaled to a
/// primitive integer polynomial (a positive factor does not move signs).
#[derive(Clone, Debug)]
pub struct SturmChain(Vec<IntPoly>);

impl SturmChain {
    pub fn new(p: &Poly<Rational>) -> Self {
        let mut chain = vec![p.clone(), p.derivative()];
        while let [.., a, b] = chain.as_slice() {
            if b.is_zero() {
                chain.pop();
                break;
            }
            let (_, r) = a.div_rem(b).expect("nonzero divisor");
            if r.is_zero() {
                break;
            }
            // keep coefficients small between steps
            let r = IntPoly::primitive(&r);
            chain.push(-Poly::from_rationals(
                r.0.into_iter().map(Rational::from_integer).collect(),
            ));
        }
        SturmChain(chain.iter().map(IntPoly::primitive).collect())
    }

    fn sign_at(&self, x: &Rational) -> Ordering {
        self.0[0].sign_at(x)
    }

    fn variations_at(&self, x: &Rational) -> usize {
        variations(self.0.iter().map(|p| p.sign_at(x)))
    }

    fn variations_inf(&self, positive: bool) -> usize {
        variations(self.0.iter().map(|p| p.sign_at_infinity(positive)))
    }

    /// Distinct real roots in `(lo, hi]`.
    pub fn count_between(&self, lo: &Rational, hi: &Rational) -> usize {
        self.variations_at(lo) - self.variations_at(hi)
    }

    /// Distinct real roots.
    pub fn count_real(&self) -> usize {
        self.variations_inf(false) - self.variations_inf(true)
    }

    /// Distinct real roots in `(-∞, x]`.
    pub fn count_up_to(&self, x: &Rational) -> usize {
        self.variations_inf(false) - self.variations_at(x)
    }
}

fn variations(signs: impl Iterator<Item = Ordering>) -> usize {
    let mut last = Ordering::Equal;
    let mut count = 0;
    for s in signs.filter(|s| *s != Ordering::Equal) {
        if last != Ordering::Equal && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

/// Distinct real roots of `p`.
pub fn count_real_roots(p: &Poly<Rational>) -> Result<usize> {
    Ok(SturmChain::new(&squarefree(p)?).count_real())
}

/// Monic square-free part `p / gcd(p, p')`.
pub fn squarefree(p: &Poly<Rational>) -> Result<Poly<Rational>> {
    if p.is_zero() {
        return Err(SboError::ZeroPolynomial);
    }
    let g = p.gcd(&p.derivative());
    let (q, _) = p.div_rem(&g).expect("gcd is nonzero");
    q.monic()
}

/// A power of two above the Cauchy bound, so every bisection point is
/// dyadic.
fn root_bound(p: &Poly<Rational>) -> Rational {
    let lead = p.leading().expect("nonzero").abs();
    let n = p.degree().unwrap_or(0);
    let cauchy = p.coeffs()[..n]
        .iter()
        .map(|c| c.abs() / &lead)
        .max()
        .unwrap_or_else(|| int(0))
        + int(1);
    let mut b = int(1);
    while b <= cauchy {
        b *= int(2);
    }
    b
}

/// One bisection step on a single-root interval.
fn bisect(chain: &SturmChain, iv: &mut (Rational, Rational)) {
    if iv.0 == iv.1 {
        return;
    }
    let mid = (&iv.0 + &iv.1) * rat(1, 2);
    let sm = chain.sign_at(&mid);
    if sm == Ordering::Equal {
        *iv = (mid.clone(), mid);
    } else if sm == chain.sign_at(&iv.0) {
        iv.0 = mid;
    } else {
        iv.1 = mid;
    }
}

/// Isolates and refines all real roots of `p`.
pub fn isolate_roots(p: &Poly<Rational>) -> Result<RootReport> {
    let sqf = squarefree(p)?;
    let degree = p.degree().unwrap_or(0);
    let chain = SturmChain::new(&sqf);
    let total = chain.count_real();
    let mut pending = Vec::new();
    let mut done: Vec<(Rational, Rational)> = Vec::new();
    if total > 0 {
        let b = root_bound(&sqf);
        pending.push((-b.clone(), b, total));
    }
    // (lo, hi] with a known root count; endpoints are never roots because
    // a rational root found at a midpoint is split off exactly.
    while let Some((lo, hi, count)) = pending.pop() {
        if count == 1 {
            done.push((lo, hi));
            continue;
        }
        let mid = (&lo + &hi) * rat(1, 2);
        if chain.sign_at(&mid) == Ordering::Equal {
            let left = chain.count_between(&lo, &mid) - 1;
            let right = count - left - 1;
            // shrink towards the exact root until it is alone
            let mut step = (&hi - &lo) * pow2(-8);
            let l_end = loop {
                let x = &mid - &step;
                if chain.sign_at(&x) != Ordering::Equal && chain.count_between(&lo, &x) == left {
                    break x;
                }
                step *= rat(1, 2);
            };
            let mut step = (&hi - &lo) * pow2(-8);
            let r_start = loop {
                let x = &mid + &step;
                if chain.sign_at(&x) != Ordering::Equal && chain.count_between(&x, &hi) == right {
                    break x;
                }
                step *= rat(1, 2);
            };
            done.push((mid.clone(), mid));
            if left > 0 {
                pending.push((lo, l_end, left));
            }
            if right > 0 {
                pending.push((r_start, hi, right));
            }
        } else {
            let left = chain.count_between(&lo, &mid);
            if left > 0 {
                pending.push((lo, mid.clone(), left));
            }
            if count > left {
                pending.push((mid, hi, count - left));
            }
        }
    }
    let target = pow2(-WIDTH_EXP);
    let mut roots: Vec<RootInterval> = done
        .into_iter()
        .map(|mut iv| {
            while &iv.1 - &iv.0 > target {
                bisect(&chain, &mut iv);
            }
            // Keep going until both ends round to the same double; rounding
            // is monotone, so that double is the correctly rounded root.
            for _ in 0..MAX_EXTRA_DEPTH {
                if to_f64(&iv.0) == to_f64(&iv.1) {
                    break;
                }
                bisect(&chain, &mut iv);
            }
            let approx = to_f64(&((&iv.0 + &iv.1) * rat(1, 2)));
            RootInterval {
                lo: iv.0,
                hi: iv.1,
                approx,
            }
        })
        .collect();
    roots.sort_by(|a, b| a.lo.cmp(&b.lo));
    // roots in (-∞, 0]; a root at zero is allowed
    let nonpositive = chain.count_up_to(&int(0));
    let zero_root = chain.sign_at(&int(0)) == Ordering::Equal;
    Ok(RootReport {
        degree,
        real_root_count: total,
        all_simple: sqf.degree() == p.degree(),
        all_nonnegative: nonpositive == usize::from(zero_root),
        roots,
        squarefree: sqf,
    })
}

/// Whether each refined float is the double closest to its exact root,
/// decided exactly: the root must lie between the midpoints to the
/// neighbouring doubles.
pub fn nearest_doubles(report: &RootReport) -> Vec<bool> {
    let chain = SturmChain::new(&report.squarefree);
    report
        .roots
        .iter()
        .map(|r| {
            let x = r.approx;
            let cell = (from_f64(x.next_down()), from_f64(x), from_f64(x.next_up()));
            let (Some(dn), Some(c), Some(up)) = cell else {
                return false;
            };
            let lo = (&dn + &c) * rat(1, 2);
            let hi = (&c + &up) * rat(1, 2);
            if r.is_exact() {
                return lo < r.lo && r.lo <= hi;
            }
            // the isolating interval holds only this root
            let a = if r.lo > lo { r.lo.clone() } else { lo };
            let b = if r.hi < hi { r.hi.clone() } else { hi };
            a < b && chain.count_between(&a, &b) == 1
        })
        .collect()
}

/// `|p(x)| / max|coeff|` at each refined root, with `p(x)` evaluated exactly
/// at the double `x`.
pub fn residuals(p: &Poly<Rational>, report: &RootReport) -> Vec<f64> {
    let scale = p.max_abs_coeff();
    report
        .roots
        .iter()
        .map(|r| match from_f64(r.approx) {
            Some(x) => to_f64(&(p.eval(&x).abs() / &scale)),
            None => f64::INFINITY,
        })
        .collect()
}

/// Whether two intervals are separated, refining both until they are.
/// Requires the underlying roots to be distinct.
fn separate(
    pa: &SturmChain,
    a: &mut (Rational, Rational),
    pb: &SturmChain,
    b: &mut (Rational, Rational),
) -> Result<Ordering> {
    for _ in 0..MAX_EXTRA_DEPTH {
        if a.1 < b.0 || (a.1 == b.0 && (a.0 != a.1 || b.0 != b.1)) {
            return Ok(Ordering::Less);
        }
        if b.1 < a.0 || (b.1 == a.0 && (a.0 != a.1 || b.0 != b.1)) {
            return Ok(Ordering::Greater);
        }
        if a.0 == a.1 && b.0 == b.1 {
            return Ok(Ordering::Equal);
        }
        bisect(pa, a);
        bisect(pb, b);
    }
    Err(SboError::UnresolvedOverlap(MAX_EXTRA_DEPTH))
}

/// Root separation in the sense recorded for this crate: `deg b > deg a`,
/// both fully real with simple roots, no common root, every root of `a`
/// strictly inside the hull of the roots of `b`, and at most one root of
/// `a` in each open gap between consecutive roots of `b`. For adjacent
/// degrees this is strict alternation.
pub fn interlacing(a: &RootReport, b: &RootReport) -> Result<bool> {
    if b.degree <= a.degree {
        return Err(SboError::InvalidParameter(format!(
            "interlacing needs deg b > deg a, got {} and {}",
            a.degree, b.degree
        )));
    }
    let full = |r: &RootReport| r.all_simple && r.real_root_count == r.degree;
    if !full(a) || !full(b) {
        return Ok(false);
    }
    let common = a.squarefree.gcd(&b.squarefree);
    if common.degree().unwrap_or(0) > 0 && count_real_roots(&common)? > 0 {
        return Ok(false);
    }
    let mut ra: Vec<(Rational, Rational)> = a.roots.iter().map(|r| (r.lo.clone(), r.hi.clone())).collect();
    let mut rb: Vec<(Rational, Rational)> = b.roots.iter().map(|r| (r.lo.clone(), r.hi.clone())).collect();
    let (ca, cb) = (SturmChain::new(&a.squarefree), SturmChain::new(&b.squarefree));
    // position of each root of a among the roots of b
    let mut slots = Vec::with_capacity(ra.len());
    for x in ra.iter_mut() {
        let mut slot = 0;
        for y in rb.iter_mut() {
            match separate(&ca, x, &cb, y)? {
                Ordering::Greater => slot += 1,
                Ordering::Less => break,
                Ordering::Equal => return Ok(false),
            }
        }
        slots.push(slot);
    }
    let inside = slots.iter().all(|&s| s > 0 && s < rb.len());
    let mut sorted = slots.clone();
    sorted.dedup();
    Ok(inside && sorted.len() == slots.len())
}

/// Dump for a failed zero-structure observation.
pub fn counterexample(p: &Poly<Rational>, r: &RootReport) -> String {
    let ivs: Vec<String> = r
        .roots
        .iter()
        .map(|x| format!("({}, {}) ≈ {:.12}", x.lo, x.hi, x.approx))
        .collect();
    format!(
        "p = {}; sturm count {} of degree {}; simple {}; nonnegative {}; roots [{}]",
        p.pretty(),
        r.real_root_count,
        r.degree,
        r.all_simple,
        r.all_nonnegative,
        ivs.join(", ")
    )
}

/// Residual tolerance after polishing.
pub const RESIDUAL_TOL: f64 = 1e-9;
/// Agreement with reference root values.
pub const ROOT_TOL: f64 = 1e-9;

fn reference_roots(r: &RootReport, expect: &[f64]) -> bool {
    r.roots.len() == expect.len()
        && r.roots
            .iter()
            .zip(expect)
            .all(|(x, e)| (x.approx - e).abs() <= ROOT_TOL)
}

/// Empirical zero-structure suite. Observations on SBO families are
/// recorded as passes when they hold and as failures with a full dump
/// when they do not.
pub fn verify_zeros(hermite_i_max: usize, hermite_span: usize, laguerre_i_max: usize, laguerre_span: usize) -> Report {
    let mut r = Report::new("zeros");
    let herm = sbo_hermite::four_term_table(hermite_i_max + hermite_span);
    let items: Vec<(usize, usize)> = (0..=hermite_i_max)
        .flat_map(|i| (i..=i + hermite_span).map(move |n| (i, n)))
        .collect();
    let results: Vec<_> = items
        .par_iter()
        .map(|&(i, n)| {
            let p = herm.get(i, n);
            (i, n, p, isolate_roots(p))
        })
        .collect();
    for (i, n, p, rep) in results {
        let inst = format!("hermite i={i} n={n}");
        match rep {
            Ok(rep) => {
                let ok = rep.real_root_count == n && rep.all_simple;
                r.record_with("zeros.real-simple", &inst, ok, || counterexample(p, &rep));
                residual_check(&mut r, &inst, p, &rep);
            }
            Err(e) => r.record_error("zeros.real-simple", &inst, &e),
        }
    }
    let alphas = sample_alphas();
    let lag_items: Vec<(Rational, usize, usize)> = alphas
        .iter()
        .flat_map(|a| (0..=laguerre_i_max).flat_map(move |i| (i..=i + laguerre_span).map(move |n| (a.clone(), i, n))))
        .collect();
    let tables: Vec<(Rational, sbo_laguerre::LaguerreTable<Rational>)> = alphas
        .iter()
        .map(|a| {
            (
                a.clone(),
                sbo_laguerre::four_term_table(laguerre_i_max + laguerre_span, a),
            )
        })
        .collect();
    let results: Vec<_> = lag_items
        .par_iter()
        .map(|(a, i, n)| {
            let t = &tables.iter().find(|(b, _)| b == a).expect("table per alpha").1;
            let p = t.get(*i, *n);
            (a, *i, *n, p, isolate_roots(p))
        })
        .collect();
    for (a, i, n, p, rep) in results {
        let inst = format!("laguerre alpha={a} i={i} n={n}");
        match rep {
            Ok(rep) => {
                let ok = rep.real_root_count == n && rep.all_simple && rep.all_nonnegative;
                r.record_with("zeros.real-simple-nonnegative", &inst, ok, || counterexample(p, &rep));
                residual_check(&mut r, &inst, p, &rep);
            }
            Err(e) => r.record_error("zeros.real-simple-nonnegative", &inst, &e),
        }
    }
    laguerre_counterexample(&mut r);
    classical_interlacing(10, &mut r);
    hermite_sbo_interlacing(&mut r);
    r.sort();
    r
}

/// Each refined root meets the residual bound, or is the double nearest
/// to the exact root, in which case no double does better.
fn residual_check(r: &mut Report, inst: &str, p: &Poly<Rational>, rep: &RootReport) {
    let res = residuals(p, rep);
    let nearest = nearest_doubles(rep);
    let ok = res.iter().zip(&nearest).all(|(v, n)| *v <= RESIDUAL_TOL || *n);
    r.record_with("zeros.polish-residual", inst, ok, || {
        let worst = res.iter().copied().fold(0.0, f64::max);
        format!("residual {worst:e}, nearest-double flags {nearest:?}")
    });
    r.record("zeros.nearest-double", inst, nearest.iter().all(|n| *n));
}

/// The `α = 0`, `i = 1` family whose degree 2 and 3 zeros do not alternate.
fn laguerre_counterexample(r: &mut Report) {
    let zero = int(0);
    let s17 = 17f64.sqrt();
    let s3 = 3f64.sqrt();
    let (p2, p3) = match (sbo_laguerre::sbo(1, 2, &zero), sbo_laguerre::sbo(1, 3, &zero)) {
        (Ok(a), Ok(b)) => (a, b),
        (Err(e), _) | (_, Err(e)) => return r.record_error("zeros.laguerre-counterexample", "alpha=0 i=1", &e),
    };
    match (isolate_roots(&p2), isolate_roots(&p3)) {
        (Ok(a), Ok(b)) => {
            let ok2 = reference_roots(&a, &[(5.0 - s17) / 4.0, (5.0 + s17) / 4.0]);
            r.record_with("zeros.laguerre-counterexample", "alpha=0 i=1 n=2", ok2, || {
                counterexample(&p2, &a)
            });
            let ok3 = reference_roots(&b, &[2.0 - s3, 1.0, 2.0 + s3]);
            r.record_with("zeros.laguerre-counterexample", "alpha=0 i=1 n=3", ok3, || {
                counterexample(&p3, &b)
            });
            match interlacing(&a, &b) {
                Ok(v) => r.expect_negative("zeros.laguerre-sbo-interlacing", "alpha=0 i=1 n=2,3", v),
                Err(e) => r.record_error("zeros.laguerre-sbo-interlacing", "alpha=0 i=1 n=2,3", &e),
            }
        }
        (Err(e), _) | (_, Err(e)) => r.record_error("zeros.laguerre-counterexample", "alpha=0 i=1", &e),
    }
}

fn record_interlacing(r: &mut Report, tag: &str, inst: String, a: &Poly<Rational>, b: &Poly<Rational>) {
    match (isolate_roots(a), isolate_roots(b)) {
        (Ok(ra), Ok(rb)) => match interlacing(&ra, &rb) {
            Ok(v) => r.record_with(tag, inst, v, || {
                format!("{} | {}", counterexample(a, &ra), counterexample(b, &rb))
            }),
            Err(e) => r.record_error(tag, inst, &e),
        },
        (Err(e), _) | (_, Err(e)) => r.record_error(tag, inst, &e),
    }
}

/// Consecutive classical polynomials alternate, `n <= n_max`.
fn classical_interlacing(n_max: usize, r: &mut Report) {
    for n in 1..n_max {
        record_interlacing(
            r,
            "zeros.classical-interlacing",
            format!("hermite n={n},{}", n + 1),
            &hermite_monic(n),
            &hermite_monic(n + 1),
        );
        for a in sample_alphas() {
            record_interlacing(
                r,
                "zeros.classical-interlacing",
                format!("laguerre alpha={a} n={n},{}", n + 1),
                &laguerre_monic(n, &a),
                &laguerre_monic(n + 1, &a),
            );
        }
    }
}

/// The Hermite SBO `i = 1` degrees 2 and 4.
fn hermite_sbo_interlacing(r: &mut Report) {
    match (sbo_hermite::sbo(1, 2), sbo_hermite::sbo(1, 4)) {
        (Ok(a), Ok(b)) => record_interlacing(r, "zeros.hermite-sbo-interlacing", "i=1 n=2,4".into(), &a, &b),
        (Err(e), _) | (_, Err(e)) => r.record_error("zeros.hermite-sbo-interlacing", "i=1 n=2,4", &e),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn quadratic_example() {
        let p = Poly::from_rationals(vec![rat(-1, 2), int(0), int(1)]);
        let r = isolate_roots(&p).unwrap();
        assert_eq!(r.real_root_count, 2);
        assert!(r.all_simple && !r.all_nonnegative);
        let h = std::f64::consts::FRAC_1_SQRT_2;
        assert!(reference_roots(&r, &[-h, h]));
        assert!(residuals(&p, &r).iter().all(|v| *v <= RESIDUAL_TOL));
    }

    #[test]
    fn laguerre_counterexample_roots() {
        let p = sbo_laguerre::sbo(1, 3, &int(0)).unwrap();
        assert_eq!(p, Poly::from_rationals(vec![int(-1), int(5), int(-5), int(1)]));
        let r = isolate_roots(&p).unwrap();
        assert!(r.roots[1].lo <= int(1) && int(1) <= r.roots[1].hi);
        assert!(r.all_nonnegative);
        let mut rep = Report::new("zeros");
        laguerre_counterexample(&mut rep);
        assert!(rep.passed(), "{:?}", rep.failures().collect::<Vec<_>>());
    }

    #[test]
    fn multiple_and_complex_roots() {
        // (x-1)^2 (x^2+1)
        let p = Poly::from_rationals(vec![int(1), int(-2), int(2), int(-2), int(1)]);
        let r = isolate_roots(&p).unwrap();
        assert_eq!(r.real_root_count, 1);
        assert!(!r.all_simple);
        assert!(isolate_roots(&Poly::zero()).is_err());
        // shared root makes interlacing false
        let a = isolate_roots(&Poly::from_rationals(vec![int(-1), int(1)])).unwrap();
        let b = isolate_roots(&Poly::from_rationals(vec![int(1), int(0), int(-1)]).scale_rational(&int(-1))).unwrap();
        assert!(!interlacing(&a, &b).unwrap());
        assert!(interlacing(&b, &a).is_err());
    }

    #[test]
    fn interlacing_examples() {
        let h2 = isolate_roots(&hermite_monic(2)).unwrap();
        let h3 = isolate_roots(&hermite_monic(3)).unwrap();
        assert!(interlacing(&h2, &h3).unwrap());
        let a = isolate_roots(&sbo_hermite::sbo(1, 2).unwrap()).unwrap();
        let b = isolate_roots(&sbo_hermite::sbo(1, 4).unwrap()).unwrap();
        assert!(interlacing(&a, &b).unwrap());
    }

    #[test]
    fn small_suite() {
        let r = verify_zeros(2, 4, 2, 4);
        assert!(r.passed(), "{:#?}", r.failures().take(3).collect::<Vec<_>>());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]
        // products of distinct rational linear factors are recovered exactly
        #[test]
        fn recovers_planted_roots(mut roots in proptest::collection::btree_set(-40i64..40, 1..7)) {
            let roots: Vec<Rational> = std::mem::take(&mut roots).into_iter().map(|k| rat(k, 3)).collect();
            let mut p = Poly::one();
            for x in &roots {
                p = &p * &Poly::from_rationals(vec![-x.clone(), int(1)]);
            }
            let r = isolate_roots(&p).unwrap();
            prop_assert_eq!(r.real_root_count, roots.len());
            prop_assert!(r.all_simple);
            for (iv, x) in r.roots.iter().zip(&roots) {
                prop_assert!(iv.lo <= *x && *x <= iv.hi);
                prop_assert!((iv.approx - to_f64(x)).abs() <= 1e-12);
            }
        }
    }
}
