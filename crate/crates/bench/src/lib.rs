//! Shared inputs for the criterion benchmarks in `benches/`.

use sbo_core::exact::rat;
use sbo_core::Rational;

/// A representative admissible Laguerre parameter.
pub fn sample_alpha() -> Rational {
    rat(1, 2)
}
