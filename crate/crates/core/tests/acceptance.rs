//! Acceptance checks: one line per criterion, non-zero exit on any failure.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use sbo_core::classical::{hermite, laguerre_with};
use sbo_core::exact::{factorial, int, pochhammer, pow2, rat};
use sbo_core::measures::sample_alphas;
use sbo_core::zeros::{interlacing, isolate_roots};
use sbo_core::{
    run_suite, sbo_hermite, sbo_laguerre, AlphaScalar, Grid, Poly, Rational, Report, Scalar, Status, Suite,
};

/// Distance allowed between a refined root and its closed form.
const ROOT_TOL: f64 = 1e-9;
const GOLDEN_BUDGET: Duration = Duration::from_secs(5);
const ORTHOGONALITY_BUDGET: Duration = Duration::from_secs(60);
const EXACT_BUDGET: Duration = Duration::from_secs(10);

const HERMITE_I_MAX: usize = 8;
const HERMITE_SPAN: usize = 12;
const LAGUERRE_I_MAX: usize = 6;
const LAGUERRE_SPAN: usize = 10;

type Outcome = Result<String, String>;

// ---------------------------------------------------------------------------
// fixtures

fn q(desc: &[(i64, i64)]) -> Poly<Rational> {
    Poly::new(desc.iter().rev().map(|&(n, d)| rat(n, d)).collect())
}

/// `num/den` times a product of α-polynomials, each listed by descending power.
fn af(num: i64, den: i64, factors: &[&[i64]]) -> AlphaScalar {
    factors
        .iter()
        .fold(AlphaScalar::from_rational(rat(num, den)), |acc, f| {
            let p = Poly::new(f.iter().rev().map(|&c| int(c)).collect());
            acc.times(&AlphaScalar::from_poly(p))
        })
}

fn one() -> AlphaScalar {
    AlphaScalar::one()
}

fn qa(desc: Vec<AlphaScalar>) -> Poly<AlphaScalar> {
    Poly::new(desc.into_iter().rev().collect())
}

fn hermite_golden() -> Vec<(&'static str, usize, usize, Poly<Rational>)> {
    vec![
        ("E.1", 0, 1, q(&[(1, 1), (0, 1)])),
        ("E.2", 0, 2, q(&[(1, 1), (0, 1), (-1, 4)])),
        ("E.3", 0, 3, q(&[(1, 1), (0, 1), (-3, 4), (0, 1)])),
        ("E.4", 0, 4, q(&[(1, 1), (0, 1), (-3, 2), (0, 1), (3, 16)])),
        ("E.5", 0, 5, q(&[(1, 1), (0, 1), (-5, 2), (0, 1), (15, 16), (0, 1)])),
        ("E.6", 1, 2, q(&[(1, 1), (0, 1), (-1, 2)])),
        ("E.7", 1, 4, q(&[(1, 1), (0, 1), (-7, 4), (0, 1), (1, 8)])),
        (
            "E.8",
            1,
            6,
            q(&[(1, 1), (0, 1), (-4, 1), (0, 1), (47, 16), (0, 1), (-11, 32)]),
        ),
        ("E.9", 2, 3, q(&[(1, 1), (0, 1), (-3, 2), (0, 1)])),
        ("E.10", 2, 5, q(&[(1, 1), (0, 1), (-13, 4), (0, 1), (9, 8), (0, 1)])),
    ]
}

fn laguerre_golden() -> Vec<(&'static str, usize, usize, Poly<AlphaScalar>)> {
    let a1: &[i64] = &[1, 1];
    let a2: &[i64] = &[1, 2];
    let a3: &[i64] = &[1, 3];
    let a4: &[i64] = &[1, 4];
    vec![
        ("F.1", 0, 1, qa(vec![one(), af(-1, 2, &[a1])])),
        ("F.2", 0, 2, qa(vec![one(), af(-1, 1, &[a2]), af(1, 4, &[a1, a2])])),
        (
            "F.3",
            0,
            3,
            qa(vec![
                one(),
                af(-3, 2, &[a3]),
                af(3, 4, &[a2, a3]),
                af(-1, 8, &[a1, a2, a3]),
            ]),
        ),
        (
            "F.4",
            0,
            4,
            qa(vec![
                one(),
                af(-2, 1, &[a4]),
                af(3, 2, &[a3, a4]),
                af(-1, 2, &[a2, a3, a4]),
                af(1, 16, &[a1, a2, a3, a4]),
            ]),
        ),
        ("F.5", 1, 1, qa(vec![one(), af(-1, 1, &[a1])])),
        ("F.6", 1, 2, qa(vec![one(), af(-1, 2, &[&[3, 5]]), af(1, 2, &[a1, a1])])),
        (
            "F.7",
            1,
            3,
            qa(vec![
                one(),
                af(-1, 1, &[&[2, 5]]),
                af(1, 4, &[&[5, 19, 20]]),
                af(-1, 4, &[a1, &[1, 3, 4]]),
            ]),
        ),
        (
            "F.8",
            1,
            4,
            qa(vec![
                one(),
                af(-1, 2, &[&[5, 17]]),
                af(3, 4, &[&[3, 17, 26]]),
                af(-1, 8, &[&[7, 48, 125, 108]]),
                af(1, 8, &[a1, a1, &[1, 5, 12]]),
            ]),
        ),
        (
            "F.9",
            1,
            5,
            qa(vec![
                one(),
                af(-1, 1, &[&[3, 13]]),
                af(1, 2, &[&[7, 53, 106]]),
                af(-1, 2, &[&[4, 39, 137, 162]]),
                af(1, 16, &[&[9, 98, 447, 886, 648]]),
                af(-1, 16, &[a1, &[1, 10, 47, 86, 72]]),
            ]),
        ),
        ("F.10", 2, 2, qa(vec![one(), af(-2, 1, &[a2]), af(1, 1, &[a1, a2])])),
        (
            "F.11",
            2,
            3,
            qa(vec![
                one(),
                af(-1, 2, &[&[5, 13]]),
                af(2, 1, &[a2, a2]),
                af(-1, 2, &[a1, a1, a2]),
            ]),
        ),
        (
            "F.12",
            2,
            4,
            qa(vec![
                one(),
                af(-1, 1, &[&[3, 10]]),
                af(1, 4, &[&[13, 71, 102]]),
                af(-1, 2, &[a2, &[3, 13, 18]]),
                af(1, 4, &[a1, a2, &[1, 3, 6]]),
            ]),
        ),
        (
            "F.13",
            2,
            5,
            qa(vec![
                one(),
                af(-1, 2, &[&[7, 29]]),
                af(1, 4, &[&[19, 135, 254]]),
                af(-1, 8, &[&[25, 222, 719, 810]]),
                af(1, 2, &[a2, a2, &[2, 11, 27]]),
                af(-1, 8, &[a1, a1, a2, &[1, 5, 18]]),
            ]),
        ),
        (
            "F.14",
            2,
            6,
            qa(vec![
                one(),
                af(-4, 1, &[&[1, 5]]),
                af(1, 2, &[&[13, 115, 268]]),
                af(-1, 2, &[&[11, 127, 526, 752]]),
                af(1, 16, &[&[41, 538, 2947, 7418, 7056]]),
                af(-1, 8, &[a2, &[5, 58, 319, 770, 720]]),
                af(1, 16, &[a1, a2, &[1, 10, 59, 122, 144]]),
            ]),
        ),
    ]
}

// ---------------------------------------------------------------------------
// helpers

/// Every check whose tag satisfies `select` must pass (or be an expected
/// negative); at least `min` of them must exist.
fn tags_ok(r: &Report, select: impl Fn(&str) -> bool, min: usize) -> Outcome {
    let picked: Vec<_> = r.checks.iter().filter(|c| select(&c.tag)).collect();
    if picked.len() < min {
        return Err(format!(
            "only {} checks selected, expected at least {min}",
            picked.len()
        ));
    }
    let failed: Vec<_> = picked.iter().filter(|c| c.status == Status::Fail).collect();
    if let Some(f) = failed.first() {
        return Err(format!(
            "{} failing, first {} [{}] {}",
            failed.len(),
            f.tag,
            f.instance,
            f.detail.as_deref().unwrap_or("")
        ));
    }
    let neg = picked.iter().filter(|c| c.status == Status::ExpectedNegative).count();
    Ok(format!("{} checks, {neg} expected-negative", picked.len()))
}

/// Each `(i, n)` of the grid appears among the instances of `tag`.
fn covers(r: &Report, tag: &str, i_max: usize, span: usize) -> Outcome {
    let seen: BTreeSet<(String, String)> = r
        .with_tag(tag)
        .filter_map(|c| {
            let mut toks = c.instance.split_whitespace();
            let i = toks.clone().find(|t| t.starts_with("i="))?;
            let n = toks.find(|t| t.starts_with("n="))?;
            Some((i.to_string(), n.to_string()))
        })
        .collect();
    for i in 0..=i_max {
        for n in i..=i + span {
            if !seen.contains(&(format!("i={i}"), format!("n={n}"))) {
                return Err(format!("{tag}: no instance for i={i} n={n}"));
            }
        }
    }
    Ok(String::new())
}

fn within(t: Duration, budget: Duration) -> Outcome {
    if t <= budget {
        Ok(String::new())
    } else {
        Err(format!("took {t:.2?}, budget {budget:?}"))
    }
}

fn all(parts: Vec<Outcome>) -> Outcome {
    let mut notes = Vec::new();
    for p in parts {
        let s = p?;
        if !s.is_empty() {
            notes.push(s);
        }
    }
    Ok(notes.join("; "))
}

fn require(cond: bool, what: impl Into<String>) -> Outcome {
    if cond {
        Ok(String::new())
    } else {
        Err(what.into())
    }
}

struct Suites {
    exact: (Report, Duration),
    classical: Report,
    measures: Report,
    hermite: Report,
    laguerre: Report,
    orthogonality_time: Duration,
    bridge: Report,
    zeros: Report,
    oracle: Report,
}

fn timed(s: Suite) -> (Report, Duration) {
    let t = Instant::now();
    let r = run_suite(s, Grid::default());
    (r, t.elapsed())
}

fn run_all() -> Suites {
    let exact = timed(Suite::Exact);
    let (hermite, th) = timed(Suite::SboHermite);
    let (laguerre, tl) = timed(Suite::SboLaguerre);
    Suites {
        exact,
        classical: timed(Suite::Classical).0,
        measures: timed(Suite::Measures).0,
        hermite,
        laguerre,
        orthogonality_time: th + tl,
        bridge: timed(Suite::Bridge).0,
        zeros: timed(Suite::Zeros).0,
        oracle: timed(Suite::Oracle).0,
    }
}

// ---------------------------------------------------------------------------
// criteria

fn golden_tables() -> Outcome {
    let t = Instant::now();
    let alpha = AlphaScalar::alpha();
    for (name, i, n, want) in hermite_golden() {
        let got = sbo_hermite::sbo(i, n).map_err(|e| format!("{name}: {e}"))?;
        require(got == want, format!("{name}: got {got}, want {want}"))?;
    }
    for (name, i, n, want) in laguerre_golden() {
        let got = sbo_laguerre::sbo(i, n, &alpha).map_err(|e| format!("{name}: {e}"))?;
        require(got == want, format!("{name}: got {got}, want {want}"))?;
    }
    all(vec![
        within(t.elapsed(), GOLDEN_BUDGET),
        Ok(format!("24 tables in {:.2?}", t.elapsed())),
    ])
}

fn constraint_orthogonality(s: &Suites) -> Outcome {
    all(vec![
        tags_ok(&s.hermite, |t| t == "hermite-sbo.constraint-orthogonality", 1),
        tags_ok(&s.laguerre, |t| t == "laguerre-sbo.constraint-orthogonality", 1),
        covers(
            &s.hermite,
            "hermite-sbo.constraint-orthogonality",
            HERMITE_I_MAX,
            HERMITE_SPAN,
        ),
        covers(
            &s.laguerre,
            "laguerre-sbo.constraint-orthogonality",
            LAGUERRE_I_MAX,
            LAGUERRE_SPAN,
        ),
        within(s.orthogonality_time, ORTHOGONALITY_BUDGET),
        Ok(format!("both suites in {:.2?}", s.orthogonality_time)),
    ])
}

fn mutual_orthogonality(s: &Suites) -> Outcome {
    let sel = |t: &str| t.ends_with(".mutual-orthogonality") || t.ends_with("-sbo.norm");
    all(vec![
        tags_ok(&s.hermite, sel, 1),
        tags_ok(&s.laguerre, sel, 1),
        covers(&s.hermite, "hermite-sbo.norm", HERMITE_I_MAX, HERMITE_SPAN),
        covers(&s.laguerre, "laguerre-sbo.norm", LAGUERRE_I_MAX, LAGUERRE_SPAN),
    ])
}

fn route_equivalence(s: &Suites) -> Outcome {
    let routes = |t: &str| t.contains(".route-");
    let mut parts = vec![tags_ok(&s.hermite, routes, 1), tags_ok(&s.laguerre, routes, 1)];
    for tag in ["closed-form", "diff1", "five-term", "four-term-ascending"] {
        parts.push(covers(
            &s.hermite,
            &format!("hermite-sbo.route-{tag}"),
            HERMITE_I_MAX,
            HERMITE_SPAN,
        ));
        parts.push(covers(
            &s.laguerre,
            &format!("laguerre-sbo.route-{tag}"),
            LAGUERRE_I_MAX,
            LAGUERRE_SPAN,
        ));
    }
    parts.push(covers(
        &s.oracle,
        "oracle.hermite-agreement",
        HERMITE_I_MAX,
        HERMITE_SPAN,
    ));
    parts.push(covers(
        &s.oracle,
        "oracle.laguerre-agreement",
        LAGUERRE_I_MAX,
        LAGUERRE_SPAN,
    ));
    parts.push(tags_ok(&s.oracle, |t| t.ends_with("-agreement"), 1));
    parts.push(tags_ok(&s.oracle, |t| t.starts_with("oracle.general-mu"), 1));
    all(parts)
}

fn differentiation(s: &Suites) -> Outcome {
    all(vec![
        tags_ok(
            &s.hermite,
            |t| t == "hermite-sbo.x-derivative" || t == "hermite-sbo.second-order",
            1,
        ),
        tags_ok(
            &s.laguerre,
            |t| t == "laguerre-sbo.second-order" || t.starts_with("laguerre-sbo.first-second-combination"),
            1,
        ),
        covers(&s.hermite, "hermite-sbo.x-derivative", HERMITE_I_MAX, HERMITE_SPAN),
        covers(&s.hermite, "hermite-sbo.second-order", HERMITE_I_MAX, HERMITE_SPAN),
        covers(&s.laguerre, "laguerre-sbo.second-order", LAGUERRE_I_MAX, LAGUERRE_SPAN),
        covers(
            &s.laguerre,
            "laguerre-sbo.first-second-combination",
            LAGUERRE_I_MAX,
            LAGUERRE_SPAN,
        ),
    ])
}

fn connection_inverses(s: &Suites) -> Outcome {
    let sel = |t: &str| t.ends_with("connection-inverse");
    let reaches = |r: &Report, tag: &str, needle: &str| {
        require(
            r.with_tag(tag).any(|c| c.instance.contains(needle)),
            format!("{tag}: no instance with {needle}"),
        )
    };
    all(vec![
        tags_ok(&s.classical, sel, 1),
        tags_ok(&s.hermite, sel, 1),
        tags_ok(&s.laguerre, sel, 1),
        reaches(&s.classical, "hermite.connection-inverse", "n<=20"),
        reaches(&s.classical, "laguerre.connection-inverse", "n<=20 alpha="),
        reaches(&s.classical, "laguerre.connection-inverse", "n<=14 alpha=symbolic"),
        reaches(&s.hermite, "hermite-sbo.connection-inverse", "n<=20"),
        reaches(&s.laguerre, "laguerre-sbo.connection-inverse", "n<=20 alpha="),
        reaches(&s.laguerre, "laguerre-sbo.connection-inverse", "n<=14"),
    ])
}

fn p_hermite_expected(i: i64, m: usize) -> Rational {
    match m {
        0 | 1 => int(1),
        2 => int(8 * i + 3),
        3 => int(24 * i + 15),
        _ => int(192 * i * i + 336 * i + 105),
    }
}

fn p_laguerre_expected(i: i64, m: usize) -> AlphaScalar {
    let a = |c: &[i64]| af(1, 1, &[c]);
    match m {
        0 => one(),
        1 => a(&[1, 1]),
        2 => a(&[1, 3, 2 * (1 + i)]),
        3 => af(1, 1, &[&[1, 1], &[1, 5, 6 * (1 + i)]]),
        _ => a(&[1, 10, 35 + 12 * i, 2 * (25 + 18 * i), 12 * (1 + i) * (2 + i)]),
    }
}

fn values_at_zero(s: &Suites) -> Outcome {
    let alpha = AlphaScalar::alpha();
    let half = rat(1, 2);
    let mut parts = vec![
        tags_ok(&s.hermite, |t| t.contains("value-at-zero") || t.contains(".p-"), 1),
        tags_ok(&s.laguerre, |t| t.contains("value-at-zero") || t.contains(".p-"), 1),
    ];
    for i in 0..=6usize {
        for n in i..=i + 8 {
            let inst = format!("i={i} n={n}");
            let d = sbo_hermite::zero_value(i, n).ok();
            let ok = d.is_some()
                && d == sbo_hermite::zero_value_recurrence(i, n).ok()
                && d == sbo_hermite::zero_value_hypergeometric(i, n).ok();
            parts.push(require(ok, format!("hermite three-way at {inst}")));
            let d = sbo_laguerre::zero_value(i, n, &alpha).ok();
            let ok = d.is_some()
                && d == sbo_laguerre::zero_value_recurrence(i, n, &alpha).ok()
                && d == sbo_laguerre::zero_value_hypergeometric(i, n, &alpha).ok();
            parts.push(require(ok, format!("laguerre three-way at {inst}")));
        }
        let hp = sbo_hermite::p_table(i, i + 4).map_err(|e| e.to_string())?;
        let lp = sbo_laguerre::p_alpha_table(i, i + 4, &alpha).map_err(|e| e.to_string())?;
        for m in 0..=4 {
            parts.push(require(
                hp.values[m] == p_hermite_expected(i as i64, m),
                format!("p table i={i} m={m}"),
            ));
            parts.push(require(
                lp.values[m] == p_laguerre_expected(i as i64, m),
                format!("p alpha table i={i} m={m}"),
            ));
        }
    }
    let h0 = sbo_hermite::p_table(0, 12).map_err(|e| e.to_string())?;
    let l0 = sbo_laguerre::p_alpha_table(0, 12, &alpha).map_err(|e| e.to_string())?;
    for n in 0..=12 {
        parts.push(require(
            h0.values[n] == factorial(2 * n) / (pow2(n as i64) * factorial(n)),
            format!("p row zero n={n}"),
        ));
        parts.push(require(
            l0.values[n] == pochhammer(&alpha.plus(&one()), n),
            format!("p alpha row zero n={n}"),
        ));
    }
    let uncorrected = sbo_hermite::zero_value_hyp_with(1, 2, &half).map_err(|e| e.to_string())?;
    let corrected = sbo_hermite::zero_value_hypergeometric(2, 4).map_err(|e| e.to_string())?;
    let table = sbo_hermite::zero_value(1, 4).map_err(|e| e.to_string())?;
    parts.push(require(table == rat(1, 8), format!("table value {table}, want 1/8")));
    parts.push(require(
        uncorrected == rat(-3, 8),
        format!("uncorrected parameter gives {uncorrected}, want -3/8"),
    ));
    parts.push(require(corrected == table, format!("corrected form gives {corrected}")));
    all(parts)
}

fn bridges(s: &Suites) -> Outcome {
    all(vec![
        tags_ok(&s.bridge, |t| t.starts_with("bridge."), 1),
        covers(&s.bridge, "bridge.sbo-even", 6, 8),
        covers(&s.bridge, "bridge.sbo-odd", 6, 8),
        tags_ok(&s.bridge, |t| t == "bridge.p-table", 1),
        tags_ok(&s.classical, |t| t.starts_with("hermite-laguerre.bridge"), 22),
    ])
}

fn near(x: f64, want: f64) -> bool {
    (x - want).abs() <= ROOT_TOL
}

fn zeros(s: &Suites) -> Outcome {
    let zero = int(0);
    let p2 = sbo_laguerre::sbo(1, 2, &zero).map_err(|e| e.to_string())?;
    let p3 = sbo_laguerre::sbo(1, 3, &zero).map_err(|e| e.to_string())?;
    let r2 = isolate_roots(&p2).map_err(|e| e.to_string())?;
    let r3 = isolate_roots(&p3).map_err(|e| e.to_string())?;
    let s17 = 17f64.sqrt();
    let s3 = 3f64.sqrt();
    let want2 = [(5.0 - s17) / 4.0, (5.0 + s17) / 4.0];
    let want3 = [2.0 - s3, 1.0, 2.0 + s3];
    let got2: Vec<f64> = r2.roots.iter().map(|r| r.approx).collect();
    let got3: Vec<f64> = r3.roots.iter().map(|r| r.approx).collect();
    let mut parts = vec![
        require(p2 == q(&[(1, 1), (-5, 2), (1, 2)]), "degree-2 polynomial at alpha=0"),
        require(
            p3 == q(&[(1, 1), (-5, 1), (5, 1), (-1, 1)]),
            "degree-3 polynomial at alpha=0",
        ),
        require(r2.real_root_count == 2 && r2.all_simple, "degree-2 Sturm count"),
        require(r3.real_root_count == 3 && r3.all_simple, "degree-3 Sturm count"),
        require(
            got2.len() == 2 && got2.iter().zip(want2).all(|(&g, w)| near(g, w)),
            format!("roots {got2:?}"),
        ),
        require(
            got3.len() == 3 && got3.iter().zip(want3).all(|(&g, w)| near(g, w)),
            format!("roots {got3:?}"),
        ),
        require(interlacing(&r2, &r3) == Ok(false), "counterexample must not interlace"),
    ];
    for n in 1..=10 {
        let (a, b) = (isolate_roots(&hermite(n - 1)), isolate_roots(&hermite(n)));
        let ok = matches!((&a, &b), (Ok(a), Ok(b)) if interlacing(a, b) == Ok(true));
        parts.push(require(ok, format!("hermite interlacing n={n}")));
        for al in sample_alphas() {
            let (a, b) = (
                isolate_roots(&laguerre_with(n - 1, &al)),
                isolate_roots(&laguerre_with(n, &al)),
            );
            let ok = matches!((&a, &b), (Ok(a), Ok(b)) if interlacing(a, b) == Ok(true));
            parts.push(require(ok, format!("laguerre interlacing n={n} alpha={al}")));
        }
    }
    let empirical = tags_ok(&s.zeros, |t| t.starts_with("zeros."), 1);
    if empirical.is_err() {
        for f in s.zeros.failures() {
            eprintln!(
                "counterexample: {} [{}] {}",
                f.tag,
                f.instance,
                f.detail.as_deref().unwrap_or("")
            );
        }
    }
    parts.push(empirical);
    all(parts)
}

fn exact_layer(s: &Suites) -> Outcome {
    let (r, t) = &s.exact;
    all(vec![
        tags_ok(r, |t| t.starts_with("exact."), 1),
        within(*t, EXACT_BUDGET),
        Ok(format!("in {t:.2?}")),
    ])
}

fn generating_functions(s: &Suites) -> Outcome {
    all(vec![
        tags_ok(&s.measures, |t| t.ends_with("gamma-generating-function"), 1),
        tags_ok(&s.classical, |t| t.ends_with(".generating-function"), 26),
        require(
            ["j=0 k=12", "j=12 k=0"].iter().all(|k| {
                s.measures
                    .with_tag("hermite.gamma-generating-function")
                    .any(|c| c.instance == *k)
            }),
            "hermite gamma check does not reach order 12",
        ),
        require(
            ["j=0 k=12", "j=12 k=0"].iter().all(|k| {
                s.measures
                    .with_tag("laguerre.gamma-generating-function")
                    .any(|c| c.instance == *k)
            }),
            "laguerre gamma check does not reach order 12",
        ),
    ])
}

fn main() -> ExitCode {
    let golden = golden_tables();
    let s = run_all();
    let results: Vec<(&str, Outcome)> = vec![
        ("golden tables", golden),
        ("constraint orthogonality", constraint_orthogonality(&s)),
        ("mutual orthogonality and norms", mutual_orthogonality(&s)),
        ("route equivalence", route_equivalence(&s)),
        ("differentiation identities", differentiation(&s)),
        ("connection inverses", connection_inverses(&s)),
        ("values at zero", values_at_zero(&s)),
        ("bridges", bridges(&s)),
        ("zeros", zeros(&s)),
        ("exact layer", exact_layer(&s)),
        ("generating functions", generating_functions(&s)),
    ];
    let mut ok = true;
    for (k, (name, res)) in results.iter().enumerate() {
        match res {
            Ok(note) => println!("criterion {:>2} PASS  {name}: {note}", k + 1),
            Err(why) => {
                ok = false;
                println!("criterion {:>2} FAIL  {name}: {why}", k + 1);
            }
        }
    }
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
