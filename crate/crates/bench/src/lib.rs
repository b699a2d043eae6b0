//! Fixtures shared by the benchmarks.

use axetlab_core::catalog::{self, Construction};
use axetlab_core::{Element, Field, Scalar};

/// Catalog entries that build over the rationals with `α = 1/4`.
pub const RATIONAL_FIXTURES: [&str; 6] = ["2B", "3C", "3C-skew", "3C-12", "Q2", "Q2-skew"];

pub fn fixture(name: &str) -> Construction {
    catalog::by_name(name, &Field::Rational, Some(&Scalar::rational(1, 4)))
        .unwrap_or_else(|e| panic!("fixture {name}: {e}"))
}

/// A dense element with distinct non-zero rational coordinates.
pub fn dense_element(c: &Construction) -> Element {
    let n = c.algebra.dim() as i64;
    Element::new((1..=n).map(|i| Scalar::rational(i, n + i)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_build_with_axes() {
        for name in RATIONAL_FIXTURES {
            let c = fixture(name);
            assert!(!c.axes.is_empty(), "{name}");
            assert_eq!(dense_element(&c).dim(), c.algebra.dim());
        }
    }
}
