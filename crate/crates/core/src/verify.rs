//! Named verification suites and the grids they run on.

use std::fmt;
use std::str::FromStr;

use crate::classical::{
    hermite_connection_inverse, hermite_laguerre_bridge, laguerre_connection_inverse, verify_classical_identities,
    verify_generating_functions, Family,
};
use crate::exact::{fmt_pq, verify_exact};
use crate::measures::{sample_alphas, verify_measures};
use crate::oracle::{verify_oracle, OracleGrid};
use crate::report::Report;
use crate::zeros::verify_zeros;
use crate::{sbo_hermite, sbo_laguerre, AlphaScalar, Parity, SboError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    Exact,
    Classical,
    Measures,
    SboHermite,
    SboLaguerre,
    Bridge,
    Zeros,
    Oracle,
    All,
}

impl Suite {
    /// Every concrete suite, in the order `All` runs them.
    pub const CONCRETE: [Suite; 8] = [
        Suite::Exact,
        Suite::Classical,
        Suite::Measures,
        Suite::SboHermite,
        Suite::SboLaguerre,
        Suite::Bridge,
        Suite::Zeros,
        Suite::Oracle,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Exact => "exact",
            Suite::Classical => "classical",
            Suite::Measures => "measures",
            Suite::SboHermite => "sbo-hermite",
            Suite::SboLaguerre => "sbo-laguerre",
            Suite::Bridge => "bridge",
            Suite::Zeros => "zeros",
            Suite::Oracle => "oracle",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = SboError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::CONCRETE
            .into_iter()
            .chain([Suite::All])
            .find(|x| x.name() == s)
            .ok_or_else(|| SboError::InvalidParameter(format!("unknown suite '{s}'")))
    }
}

/// Optional grid overrides. `i_max` bounds the block index; `span` bounds
/// `n - i` for SBO suites and plays the role of `n_max` for the others.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Grid {
    pub i_max: Option<usize>,
    pub span: Option<usize>,
}

impl Grid {
    fn pick(self, i_max: usize, span: usize) -> (usize, usize) {
        (self.i_max.unwrap_or(i_max), self.span.unwrap_or(span))
    }
}

/// Degree bound for connection-matrix checks with numeric parameters.
pub const CONNECTION_N_NUMERIC: usize = 20;
/// Degree bound for connection-matrix checks with symbolic α.
pub const CONNECTION_N_SYMBOLIC: usize = 14;
/// Degree bound for the classical Hermite/Laguerre bridge.
pub const CLASSICAL_BRIDGE_N: usize = 10;
/// Total order for generating-function cross checks.
pub const GENERATING_ORDER: usize = 12;

fn exact(grid: Grid) -> Report {
    verify_exact(grid.span.unwrap_or(8))
}

fn classical(grid: Grid) -> Report {
    let n_max = grid.span.unwrap_or(CONNECTION_N_NUMERIC);
    let mut r = verify_classical_identities(Family::Hermite, n_max);
    r.extend(verify_classical_identities(
        Family::Laguerre,
        n_max.min(CONNECTION_N_SYMBOLIC),
    ));
    verify_generating_functions(GENERATING_ORDER, &mut r);

    r.record(
        "hermite.connection-inverse",
        format!("n<={n_max}"),
        hermite_connection_inverse(n_max),
    );
    let sym = n_max.min(CONNECTION_N_SYMBOLIC);
    r.record(
        "laguerre.connection-inverse",
        format!("n<={sym} alpha=symbolic"),
        laguerre_connection_inverse(sym, &AlphaScalar::alpha()),
    );
    for a in sample_alphas() {
        r.record(
            "laguerre.connection-inverse",
            format!("n<={n_max} alpha={}", fmt_pq(&a)),
            laguerre_connection_inverse(n_max, &a),
        );
    }
    let bridge_n = n_max.min(CLASSICAL_BRIDGE_N);
    for n in 0..=bridge_n {
        r.record(
            "hermite-laguerre.bridge-even",
            format!("n={n}"),
            hermite_laguerre_bridge(n, Parity::Even),
        );
        r.record(
            "hermite-laguerre.bridge-odd",
            format!("n={n}"),
            hermite_laguerre_bridge(n, Parity::Odd),
        );
    }
    r
}

fn measures(grid: Grid) -> Report {
    verify_measures(grid.span.unwrap_or(10), GENERATING_ORDER)
}

fn sbo_hermite_suite(grid: Grid) -> Report {
    let (i_max, span) = grid.pick(8, 12);
    sbo_hermite::verify_sbo_hermite(i_max, span)
}

fn sbo_laguerre_suite(grid: Grid) -> Report {
    let (i_max, span) = grid.pick(6, 10);
    let mut r = sbo_laguerre::verify_sbo_laguerre(i_max, span);
    let n = grid.span.map_or(CONNECTION_N_NUMERIC, |s| i_max + s);
    for a in sample_alphas() {
        r.record(
            "laguerre-sbo.connection-inverse",
            format!("n<={n} alpha={}", fmt_pq(&a)),
            sbo_laguerre::connection_inverse(n, &a),
        );
    }
    r
}

fn bridge(grid: Grid) -> Report {
    let (i_max, span) = grid.pick(6, 8);
    sbo_laguerre::hermite_laguerre_sbo_bridge(i_max, span)
}

fn zeros(grid: Grid) -> Report {
    let (hi, hs) = grid.pick(6, 10);
    let (li, ls) = grid.pick(6, 8);
    verify_zeros(hi, hs, li, ls)
}

fn oracle(grid: Grid) -> Report {
    let d = OracleGrid::default();
    let (hermite_i_max, hermite_span) = grid.pick(d.hermite_i_max, d.hermite_span);
    let (laguerre_i_max, laguerre_span) = grid.pick(d.laguerre_i_max, d.laguerre_span);
    verify_oracle(OracleGrid {
        hermite_i_max,
        hermite_span,
        laguerre_i_max,
        laguerre_span,
    })
}

/// Runs `suite` and returns its checks in canonical (suite, tag) order.
pub fn run_suite(suite: Suite, grid: Grid) -> Report {
    let mut r = match suite {
        Suite::Exact => exact(grid),
        Suite::Classical => classical(grid),
        Suite::Measures => measures(grid),
        Suite::SboHermite => sbo_hermite_suite(grid),
        Suite::SboLaguerre => sbo_laguerre_suite(grid),
        Suite::Bridge => bridge(grid),
        Suite::Zeros => zeros(grid),
        Suite::Oracle => oracle(grid),
        Suite::All => {
            let mut all = Report::new("all");
            for s in Suite::CONCRETE {
                all.extend(run_suite(s, grid));
            }
            all
        }
    };
    r.sort();
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for s in Suite::CONCRETE.into_iter().chain([Suite::All]) {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn small_grids_pass() {
        let grid = Grid {
            i_max: Some(2),
            span: Some(4),
        };
        for s in [Suite::Exact, Suite::Classical, Suite::Bridge, Suite::SboHermite] {
            let r = run_suite(s, grid);
            assert!(r.passed(), "{s}: {:?}", r.failures().next());
            assert!(!r.checks.is_empty());
        }
    }
}
