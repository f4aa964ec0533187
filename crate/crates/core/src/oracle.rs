//! Brute-force SBO construction straight from the defining constraints.
//!
//! Each `P̂_{i;n}` is the monic degree-`n` polynomial with `(x^m, P) = 0`
//! for `m < i` and `(P̂_{i;m}, P)₂ = 0` for `i <= m < n`. The system is
//! written in the classical basis `C_k` (Hermite or Laguerre) so that its
//! coefficients are exactly the Gram entries `γ_{j,k}` of the two weights.
//! It is solved over ℚ. Symbolic α is handled by solving at integer
//! sample points, interpolating, and checking the interpolant exactly in ℚ[α].

use rayon::prelude::*;

use crate::classical::{self, hermite_table, laguerre_table, Family};
use crate::error::{Result, SboError};
use crate::exact::linalg::{solve, Matrix};
use crate::exact::{int, rpow, Rational, Scalar};
use crate::measures::{
    hermite_gram, hermite_moments, laguerre_gram, laguerre_moments, moment_image, pair_with_image, sample_alphas,
    AlphaMode, GramMatrix, MeasureSpec, Unit,
};
use crate::poly::{scale_arg_monic, AlphaScalar, Poly, ScaleMode};
use crate::report::Report;
use crate::{sbo_hermite, sbo_laguerre};

/// Gram data and basis for one numeric measure pair, up to a fixed degree.
#[derive(Clone, Debug)]
pub struct Oracle {
    pub spec: MeasureSpec,
    pub gram1: GramMatrix<Rational>,
    pub gram2: GramMatrix<Rational>,
    basis: Vec<Poly<Rational>>,
}

/// Linear system for one degree: unknown basis coordinates `b_0..b_{n-1}`,
/// with `b_n` fixed so the result is monic.
#[derive(Clone, Debug)]
pub struct ConstraintSystem<'a> {
    pub i: usize,
    pub n: usize,
    oracle: &'a Oracle,
    /// Basis coordinates of the accepted `P̂_{i;m}`, `i <= m < n`.
    previously: Vec<Vec<Rational>>,
}

/// A family `P̂_{i;i}..=P̂_{i;n_max}` from the oracle, with `(,)₂` norms in
/// the reduced unit of the second weight.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleFamily<S> {
    pub i: usize,
    pub polys: Vec<Poly<S>>,
    pub norms: Vec<S>,
    pub unit: Unit,
}

impl<S: Scalar> OracleFamily<S> {
    pub fn get(&self, n: usize) -> Option<&Poly<S>> {
        n.checked_sub(self.i).and_then(|k| self.polys.get(k))
    }
}

/// Coordinates of `p` in a triangular basis (`basis[k]` of degree `k`).
fn coordinates(p: &Poly<Rational>, basis: &[Poly<Rational>]) -> Result<Vec<Rational>> {
    let mut rest = p.clone();
    let deg = p.degree().unwrap_or(0);
    if deg >= basis.len() {
        return Err(SboError::OrderExceeded {
            order: deg,
            limit: basis.len() - 1,
        });
    }
    let mut out = vec![int(0); deg + 1];
    for k in (0..=deg).rev() {
        let c = rest.coeff_at(k);
        if c != int(0) {
            let b = &c / basis[k].coeff_at(k);
            rest = &rest - &basis[k].scale_rational(&b);
            out[k] = b;
        }
    }
    Ok(out)
}

fn numeric_alpha(spec: &MeasureSpec) -> Result<Rational> {
    match &spec.alpha {
        AlphaMode::Numeric(a) => Ok(a.clone()),
        AlphaMode::Symbolic => Err(SboError::InvalidParameter(
            "numeric oracle needs a numeric alpha; use the symbolic entry point".into(),
        )),
    }
}

impl Oracle {
    /// Prepares Gram matrices up to degree `n_max`.
    pub fn new(spec: &MeasureSpec, n_max: usize) -> Result<Self> {
        let size = n_max + 1;
        let (gram1, gram2, basis) = match spec.family {
            Family::Hermite => (
                hermite_gram(size, &spec.mu1)?,
                hermite_gram(size, &spec.mu2)?,
                hermite_table(n_max),
            ),
            Family::Laguerre => {
                let a = numeric_alpha(spec)?;
                (
                    laguerre_gram(size, &spec.mu1, &a)?,
                    laguerre_gram(size, &spec.mu2, &a)?,
                    laguerre_table(n_max, &a),
                )
            }
        };
        Ok(Oracle {
            spec: spec.clone(),
            gram1,
            gram2,
            basis,
        })
    }

    pub fn n_max(&self) -> usize {
        self.basis.len() - 1
    }

    /// The system for `P̂_{i;n}` given the accepted lower members.
    pub fn constraint_system(&self, i: usize, n: usize, previously: &[Poly<Rational>]) -> Result<ConstraintSystem<'_>> {
        if i > n {
            return Err(SboError::Index { i, n });
        }
        if n > self.n_max() {
            return Err(SboError::OrderExceeded {
                order: n,
                limit: self.n_max(),
            });
        }
        if previously.len() != n - i {
            return Err(SboError::LengthMismatch {
                expected: n - i,
                got: previously.len(),
            });
        }
        let previously = previously
            .iter()
            .map(|p| coordinates(p, &self.basis))
            .collect::<Result<_>>()?;
        Ok(ConstraintSystem {
            i,
            n,
            oracle: self,
            previously,
        })
    }

    /// Builds the family degree by degree.
    pub fn family(&self, i: usize, n_max: usize) -> Result<OracleFamily<Rational>> {
        let mut polys: Vec<Poly<Rational>> = Vec::new();
        for n in i..=n_max {
            let p = self.constraint_system(i, n, &polys)?.solve()?;
            polys.push(p);
        }
        let norms = polys
            .iter()
            .map(|p| {
                let c = coordinates(p, &self.basis)?;
                Ok(bilinear(&c, &self.gram2.entries, &c))
            })
            .collect::<Result<_>>()?;
        Ok(OracleFamily {
            i,
            polys,
            norms,
            unit: self.gram2.unit.clone(),
        })
    }
}

fn bilinear(a: &[Rational], g: &Matrix<Rational>, b: &[Rational]) -> Rational {
    let mut acc = int(0);
    for (j, aj) in a.iter().enumerate() {
        if aj.is_zero() {
            continue;
        }
        for (k, bk) in b.iter().enumerate() {
            if !bk.is_zero() {
                acc += aj * bk * &g[j][k];
            }
        }
    }
    acc
}

impl ConstraintSystem<'_> {
    /// Square `n × n` matrix and right-hand side.
    pub fn system(&self) -> (Matrix<Rational>, Vec<Rational>) {
        let n = self.n;
        let lead = self.oracle.basis[n].coeff_at(n).recip();
        let g1 = &self.oracle.gram1.entries;
        let g2 = &self.oracle.gram2.entries;
        let mut a = Vec::with_capacity(n);
        let mut b = Vec::with_capacity(n);
        for row in g1.iter().take(self.i) {
            a.push(row[..n].to_vec());
            b.push(-(&lead * &row[n]));
        }
        for prev in &self.previously {
            let r: Vec<Rational> = (0..=n)
                .map(|k| prev.iter().enumerate().map(|(j, c)| c * &g2[j][k]).sum())
                .collect();
            b.push(-(&lead * &r[n]));
            a.push(r[..n].to_vec());
        }
        (a, b)
    }

    /// The unique monic solution.
    pub fn solve(&self) -> Result<Poly<Rational>> {
        let (a, b) = self.system();
        let mut coords = solve(a, b)?;
        coords.push(self.oracle.basis[self.n].coeff_at(self.n).recip());
        let mut p = Poly::zero();
        for (c, basis) in coords.iter().zip(&self.oracle.basis) {
            if !c.is_zero() {
                p = &p + &basis.scale_rational(c);
            }
        }
        Ok(p)
    }
}

/// One SBO polynomial from its lower family members.
pub fn oracle_sbo(spec: &MeasureSpec, i: usize, n: usize, previously: &[Poly<Rational>]) -> Result<Poly<Rational>> {
    Oracle::new(spec, n)?.constraint_system(i, n, previously)?.solve()
}

/// Numeric family for a Hermite spec or a Laguerre spec with fixed α.
pub fn oracle_family(spec: &MeasureSpec, i: usize, n_max: usize) -> Result<OracleFamily<Rational>> {
    Oracle::new(spec, n_max)?.family(i, n_max)
}

/// Symbolic-α Laguerre families for every `i` in `is`, up to degree
/// `n_max`. Solves at `α₀ = 0, 1, 2, ...`, interpolates each coefficient,
/// confirms on two extra nodes and finally proves every constraint as an
/// identity in ℚ[α]. Norms come out of that last step.
pub fn oracle_families_symbolic(
    spec: &MeasureSpec,
    is: &[usize],
    n_max: usize,
) -> Result<Vec<OracleFamily<AlphaScalar>>> {
    if spec.family != Family::Laguerre || spec.alpha != AlphaMode::Symbolic {
        return Err(SboError::InvalidParameter(
            "symbolic oracle needs a Laguerre spec with symbolic alpha".into(),
        ));
    }
    // Entries of P̂_{i;n} have α-degree at most n.
    let mut degree = n_max;
    let limit = 8 * (n_max + 1);
    loop {
        let nodes: Vec<Rational> = (0..degree + 3).map(|k| int(k as i64)).collect();
        let samples: Vec<Vec<OracleFamily<Rational>>> = nodes
            .par_iter()
            .map(|a0| {
                let s = MeasureSpec {
                    alpha: AlphaMode::Numeric(a0.clone()),
                    ..spec.clone()
                };
                let o = Oracle::new(&s, n_max)?;
                is.iter().map(|&i| o.family(i, n_max)).collect()
            })
            .collect::<Result<_>>()?;
        match interpolate_families(spec, is, n_max, &nodes, &samples)? {
            Some(fams) => return Ok(fams),
            None if degree * 2 <= limit => degree *= 2,
            None => {
                return Err(SboError::NonPolynomialSolution(format!(
                    "no interpolant up to alpha-degree {limit}"
                )))
            }
        }
    }
}

/// Interpolates on all but the last two nodes; `None` if the interpolant
/// misses either check node or fails the exact constraint check.
fn interpolate_families(
    spec: &MeasureSpec,
    is: &[usize],
    n_max: usize,
    nodes: &[Rational],
    samples: &[Vec<OracleFamily<Rational>>],
) -> Result<Option<Vec<OracleFamily<AlphaScalar>>>> {
    let fit = nodes.len() - 2;
    let mut out = Vec::with_capacity(is.len());
    for (slot, &i) in is.iter().enumerate() {
        let mut polys = Vec::new();
        for k in 0..=n_max - i {
            let n = i + k;
            let mut coeffs = Vec::with_capacity(n + 1);
            for d in 0..=n {
                let ys: Vec<Rational> = samples.iter().map(|s| s[slot].polys[k].coeff_at(d)).collect();
                coeffs.push(Poly::interpolate(&nodes[..fit], &ys[..fit])?);
            }
            let agrees = nodes[fit..].iter().enumerate().all(|(t, a0)| {
                let p = &samples[fit + t][slot].polys[k];
                coeffs.iter().enumerate().all(|(d, c)| c.eval(a0) == p.coeff_at(d))
            });
            if !agrees {
                return Ok(None);
            }
            polys.push(Poly::new(coeffs.into_iter().map(AlphaScalar::from_poly).collect()));
        }
        match exact_norms(spec, i, &polys)? {
            Some(norms) => out.push(OracleFamily {
                i,
                polys,
                norms,
                unit: Unit::GammaAlpha1OverMu(spec.mu2.clone()),
            }),
            None => return Ok(None),
        }
    }
    Ok(Some(out))
}

/// `max_a (deg_α p_a + a)`: bounds the α-degree of any pairing with `p`,
/// since the `a`-th moment contributes `(α+1)_a`.
fn weight_degree(p: &Poly<AlphaScalar>) -> usize {
    p.coeffs()
        .iter()
        .enumerate()
        .filter_map(|(a, c)| c.degree().map(|d| d + a))
        .max()
        .unwrap_or(0)
}

/// Proves every defining constraint of the family as an identity in ℚ[α]
/// and returns the `(,)₂` norms. Each constraint and each norm is a
/// polynomial in α of degree at most `2·max weight_degree`, so evaluating
/// at one node more than that decides it exactly.
fn exact_norms(spec: &MeasureSpec, i: usize, polys: &[Poly<AlphaScalar>]) -> Result<Option<Vec<AlphaScalar>>> {
    if !polys.iter().all(Poly::is_monic) {
        return Ok(None);
    }
    let top = i + polys.len();
    let bound = 2 * polys.iter().map(weight_degree).max().unwrap_or(0) + i;
    let nodes: Vec<Rational> = (0..=bound).map(|k| int(k as i64)).collect();
    let values: Option<Vec<Vec<Rational>>> = nodes
        .par_iter()
        .map(|a0| {
            let polys: Vec<Poly<Rational>> = polys.iter().map(|p| p.eval_alpha(a0)).collect();
            let m1 = laguerre_moments(&spec.mu1, a0, 2 * top + 1);
            let m2 = laguerre_moments(&spec.mu2, a0, 2 * top + 1);
            let mut norms = Vec::with_capacity(polys.len());
            for (k, p) in polys.iter().enumerate() {
                if !moment_image(p, &m1, i).iter().all(Scalar::is_zero) {
                    return None;
                }
                let img = moment_image(p, &m2, top);
                if !polys[..k].iter().all(|q| pair_with_image(q, &img).is_zero()) {
                    return None;
                }
                norms.push(pair_with_image(p, &img));
            }
            Some(norms)
        })
        .collect();
    let Some(values) = values else { return Ok(None) };
    (0..polys.len())
        .map(|k| {
            let ys: Vec<Rational> = values.iter().map(|v| v[k].clone()).collect();
            Poly::interpolate(&nodes, &ys).map(AlphaScalar::from_poly)
        })
        .collect::<Result<_>>()
        .map(Some)
}

/// `(,)₂` Gram matrix of a numeric family, computed from raw moments rather
/// than from the classical Gram entries used to build it.
pub fn family_gram(spec: &MeasureSpec, fam: &OracleFamily<Rational>) -> Result<Matrix<Rational>> {
    let top = fam.i + fam.polys.len();
    let moments = match spec.family {
        Family::Hermite => hermite_moments(&spec.mu2, 2 * top + 1),
        Family::Laguerre => laguerre_moments(&spec.mu2, &numeric_alpha(spec)?, 2 * top + 1),
    };
    Ok(fam
        .polys
        .iter()
        .map(|p| {
            let img = moment_image(p, &moments, top);
            fam.polys.iter().map(|q| pair_with_image(q, &img)).collect()
        })
        .collect())
}

/// Raw first-weight moments `(x^m, P)` for `m < i`, all of which must vanish.
pub fn constraint_residuals(spec: &MeasureSpec, fam: &OracleFamily<Rational>) -> Result<Vec<Rational>> {
    let top = fam.i + fam.polys.len();
    let moments = match spec.family {
        Family::Hermite => hermite_moments(&spec.mu1, 2 * top + 1),
        Family::Laguerre => laguerre_moments(&spec.mu1, &numeric_alpha(spec)?, 2 * top + 1),
    };
    Ok(fam
        .polys
        .iter()
        .flat_map(|p| moment_image(p, &moments, fam.i))
        .collect())
}

/// Grid sizes for [`verify_oracle`].
#[derive(Clone, Copy, Debug)]
pub struct OracleGrid {
    pub hermite_i_max: usize,
    pub hermite_span: usize,
    pub laguerre_i_max: usize,
    pub laguerre_span: usize,
}

impl Default for OracleGrid {
    fn default() -> Self {
        OracleGrid {
            hermite_i_max: 8,
            hermite_span: 12,
            laguerre_i_max: 6,
            laguerre_span: 10,
        }
    }
}

/// Oracle against the recurrence tables on the grid, at a non-standard
/// `μ = 3`, at unit weights, and under rescaling of both weights.
pub fn verify_oracle(grid: OracleGrid) -> Report {
    let mut r = Report::new("oracle");
    let alpha = AlphaScalar::alpha();

    let h2 = MeasureSpec::hermite(int(2)).expect("valid spec");
    let h_top = grid.hermite_i_max + grid.hermite_span;
    let herm = sbo_hermite::four_term_table(h_top);
    match Oracle::new(&h2, h_top) {
        Ok(o) => {
            let fams: Vec<_> = (0..=grid.hermite_i_max)
                .into_par_iter()
                .map(|i| (i, o.family(i, i + grid.hermite_span)))
                .collect();
            for (i, fam) in fams {
                match fam {
                    Ok(f) => {
                        for (k, p) in f.polys.iter().enumerate() {
                            let n = i + k;
                            let inst = format!("i={i} n={n}");
                            r.record("oracle.hermite-agreement", &inst, p == herm.get(i, n));
                            r.record(
                                "oracle.hermite-norm",
                                &inst,
                                sbo_hermite::norm(i, n).is_ok_and(|h| h == f.norms[k]),
                            );
                        }
                    }
                    Err(e) => r.record_error("oracle.hermite-agreement", format!("i={i}"), &e),
                }
            }
        }
        Err(e) => r.record_error("oracle.hermite-agreement", "setup", &e),
    }

    let l2 = MeasureSpec::laguerre(int(2), AlphaMode::Symbolic).expect("valid spec");
    let l_top = grid.laguerre_i_max + grid.laguerre_span;
    let lag = sbo_laguerre::four_term_table(l_top, &alpha);
    let is: Vec<usize> = (0..=grid.laguerre_i_max).collect();
    match oracle_families_symbolic(&l2, &is, l_top) {
        Ok(fams) => {
            for f in fams {
                let i = f.i;
                for (k, p) in f.polys.iter().enumerate().take(grid.laguerre_span + 1) {
                    let n = i + k;
                    let inst = format!("i={i} n={n} alpha=symbolic");
                    r.record("oracle.laguerre-agreement", &inst, p == lag.get(i, n));
                    let ok = sbo_laguerre::norm(i, n, &alpha).is_ok_and(|h| h == f.norms[k]);
                    r.record("oracle.laguerre-norm", &inst, ok);
                }
            }
        }
        Err(e) => r.record_error("oracle.laguerre-agreement", "symbolic", &e),
    }

    general_mu(&mut r);
    unit_weights(&mut r);
    scaling(&mut r);
    r.sort();
    r
}

fn diagonal_check(spec: &MeasureSpec, i: usize, n_max: usize, label: &str, r: &mut Report) {
    let inst = format!("{label} i={i} n<={n_max}");
    let fam = match oracle_family(spec, i, n_max) {
        Ok(f) => f,
        Err(e) => return r.record_error("oracle.general-mu-diagonal", inst, &e),
    };
    let diag = family_gram(spec, &fam).is_ok_and(|g| {
        g.iter()
            .enumerate()
            .all(|(j, row)| row.iter().enumerate().all(|(k, v)| (j == k) != v.is_zero()))
    });
    r.record("oracle.general-mu-diagonal", &inst, diag);
    let ok = constraint_residuals(spec, &fam).is_ok_and(|v| v.iter().all(Scalar::is_zero));
    r.record("oracle.general-mu-constraints", &inst, ok);
}

/// `μ = 3`, where no closed form exists.
fn general_mu(r: &mut Report) {
    let h = MeasureSpec::hermite(int(3)).expect("valid spec");
    for i in 0..=3 {
        diagonal_check(&h, i, i + 6, "hermite mu=3", r);
    }
    for a in sample_alphas() {
        let l = MeasureSpec::laguerre(int(3), AlphaMode::Numeric(a.clone())).expect("valid spec");
        for i in 0..=3 {
            diagonal_check(&l, i, i + 6, &format!("laguerre mu=3 alpha={a}"), r);
        }
    }
}

/// Equal weights with `i = 0` reduce to ordinary orthogonalization.
fn unit_weights(r: &mut Report) {
    let h = MeasureSpec::hermite(int(1)).expect("valid spec");
    let ok = oracle_family(&h, 0, 12).is_ok_and(|f| (0..=12).all(|n| f.polys[n] == classical::hermite_monic(n)));
    r.record("oracle.unit-weights-classical", "hermite n<=12", ok);
    let l = MeasureSpec::laguerre(int(1), AlphaMode::Symbolic).expect("valid spec");
    let alpha = AlphaScalar::alpha();
    let ok = oracle_families_symbolic(&l, &[0], 10)
        .is_ok_and(|f| (0..=10).all(|n| f[0].polys[n] == classical::laguerre_monic(n, &alpha)));
    r.record("oracle.unit-weights-classical", "laguerre alpha=symbolic n<=10", ok);
}

/// Rescaling both weights by `c` maps `P̂_{i;n}` to `c^{-n/2}P̂(√c x)`
/// (Hermite) or `c^{-n}P̂(cx)` (Laguerre), and the reduced norm picks up
/// `c^{-n}` resp. `c^{-2n}`.
fn scaling(r: &mut Report) {
    let alpha = AlphaScalar::alpha();
    let h2 = MeasureSpec::hermite(int(2)).expect("valid spec");
    let l2 = MeasureSpec::laguerre(int(2), AlphaMode::Symbolic).expect("valid spec");
    for c in [int(2), int(3)] {
        let hs = h2.rescaled(&c).expect("positive scale");
        for i in 0..=3 {
            let inst = format!("hermite c={c} i={i}");
            let ok = oracle_family(&hs, i, i + 6).is_ok_and(|f| {
                f.polys.iter().zip(&f.norms).enumerate().all(|(k, (p, h))| {
                    let n = i + k;
                    let base = sbo_hermite::sbo(i, n).and_then(|b| scale_arg_monic(&b, &c, ScaleMode::Sqrt));
                    let norm = sbo_hermite::norm(i, n).map(|h0| h0 * rpow(&c, -(n as i64)));
                    base.is_ok_and(|b| b == *p) && norm.is_ok_and(|h0| h0 == *h)
                })
            });
            r.record("oracle.scaling-hermite", inst, ok);
        }
        let ls = l2.rescaled(&c).expect("positive scale");
        let is: Vec<usize> = (0..=3).collect();
        match oracle_families_symbolic(&ls, &is, 9) {
            Ok(fams) => {
                for f in fams {
                    let i = f.i;
                    let ok = f.polys.iter().zip(&f.norms).enumerate().all(|(k, (p, h))| {
                        let n = i + k;
                        let base =
                            sbo_laguerre::sbo(i, n, &alpha).and_then(|b| scale_arg_monic(&b, &c, ScaleMode::Linear));
                        let norm = sbo_laguerre::norm(i, n, &alpha).map(|h0| h0.mul_rational(&rpow(&c, -2 * n as i64)));
                        base.is_ok_and(|b| b == *p) && norm.is_ok_and(|h0| h0 == *h)
                    });
                    r.record("oracle.scaling-laguerre", format!("alpha=symbolic c={c} i={i}"), ok);
                }
            }
            Err(e) => r.record_error("oracle.scaling-laguerre", format!("c={c}"), &e),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn small_examples() {
        let h = MeasureSpec::hermite(int(2)).unwrap();
        let f = oracle_family(&h, 1, 2).unwrap();
        assert_eq!(f.polys[1], Poly::from_rationals(vec![rat(-1, 2), int(0), int(1)]));
        assert_eq!(oracle_sbo(&h, 0, 0, &[]).unwrap(), Poly::one());

        let l = MeasureSpec::laguerre(int(2), AlphaMode::Symbolic).unwrap();
        let fams = oracle_families_symbolic(&l, &[1], 1).unwrap();
        let a = AlphaScalar::alpha();
        let expect = Poly::new(vec![a.plus(&AlphaScalar::one()).negated(), AlphaScalar::one()]);
        assert_eq!(fams[0].polys[0], expect);
    }

    #[test]
    fn agrees_with_recurrences() {
        let h = MeasureSpec::hermite(int(2)).unwrap();
        let t = sbo_hermite::four_term_table(9);
        for i in 0..=3 {
            let f = oracle_family(&h, i, 9).unwrap();
            for n in i..=9 {
                assert_eq!(f.get(n).unwrap(), t.get(i, n), "i={i} n={n}");
                assert_eq!(f.norms[n - i], sbo_hermite::norm(i, n).unwrap());
            }
        }
        let l = MeasureSpec::laguerre(int(2), AlphaMode::Symbolic).unwrap();
        let a = AlphaScalar::alpha();
        let lt = sbo_laguerre::four_term_table(6, &a);
        for fam in oracle_families_symbolic(&l, &[0, 1, 2], 6).unwrap() {
            for n in fam.i..=6 {
                assert_eq!(fam.get(n).unwrap(), lt.get(fam.i, n));
                assert_eq!(fam.norms[n - fam.i], sbo_laguerre::norm(fam.i, n, &a).unwrap());
            }
        }
    }

    #[test]
    fn unit_weights_give_classical_polynomials() {
        let h = MeasureSpec::hermite(int(1)).unwrap();
        let f = oracle_family(&h, 0, 8).unwrap();
        for n in 0..=8 {
            assert_eq!(f.polys[n], classical::hermite_monic(n));
        }
        let l = MeasureSpec::laguerre(int(1), AlphaMode::numeric(rat(1, 3)).unwrap()).unwrap();
        let f = oracle_family(&l, 0, 6).unwrap();
        for n in 0..=6 {
            assert_eq!(f.polys[n], classical::laguerre_monic(n, &rat(1, 3)));
        }
    }

    #[test]
    fn general_mu_gives_diagonal_gram() {
        let h = MeasureSpec::hermite(int(3)).unwrap();
        let f = oracle_family(&h, 2, 7).unwrap();
        let g = family_gram(&h, &f).unwrap();
        for (j, row) in g.iter().enumerate() {
            for (k, v) in row.iter().enumerate() {
                assert_eq!(*v == int(0), j != k);
            }
        }
        assert!(constraint_residuals(&h, &f).unwrap().iter().all(|r| *r == int(0)));
    }

    #[test]
    fn small_grid_suite() {
        let r = verify_oracle(OracleGrid {
            hermite_i_max: 2,
            hermite_span: 4,
            laguerre_i_max: 2,
            laguerre_span: 3,
        });
        assert!(r.passed(), "{:#?}", r.failures().take(5).collect::<Vec<_>>());
        assert!(r.with_tag("oracle.scaling-laguerre").count() == 8);
    }

    #[test]
    fn rejects_bad_input() {
        let l = MeasureSpec::laguerre(int(2), AlphaMode::Symbolic).unwrap();
        assert!(oracle_family(&l, 0, 2).is_err());
        let h = MeasureSpec::hermite(int(2)).unwrap();
        let o = Oracle::new(&h, 3).unwrap();
        assert!(matches!(
            o.constraint_system(1, 3, &[]),
            Err(SboError::LengthMismatch { .. })
        ));
        assert!(matches!(
            o.constraint_system(0, 4, &[]),
            Err(SboError::OrderExceeded { .. })
        ));
    }
}
