//! Moore-type lower bounds on the number of vertices of a graph with given
//! girth, and per-graph audits of the counting facts behind them.
//!
//! For girth `2r + 1` and degree parameter `d` the bound is
//! `1 + d·Σ_{i<r} (d-1)^i`; for girth `2r` it is `2·Σ_{i<r} (d-1)^i`. With the
//! minimum degree this is the classical Moore bound, with the average degree
//! it is the Alon–Hoory–Linial bound. Bipartite graphs get separate bounds
//! per side from the two side-average degrees (Hoory).
//!
//! All values are exact rationals: average degrees are rarely integers and
//! tightness is decided by exact equality.

mod observation;
mod report;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::graph::Girth;
use crate::Rational;

pub use observation::{
    verify_observation_bipartite, verify_observation_even, verify_observation_odd,
    BipartiteObservationCheck, ObservationCheck, ObservationItem,
};
pub use report::{audit_graph, BipartiteSummary, BoundReport, Verdict};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoundError {
    #[error("degree parameter {0} is below 2")]
    DegreeTooSmall(Rational),
    #[error("girth is infinite")]
    InfiniteGirth,
    #[error("girth {0} is below 3")]
    GirthTooSmall(u32),
    #[error("bipartite bound needs even girth, got {0}")]
    OddGirth(u32),
    #[error("observation needs {expected} girth, got {girth}")]
    GirthParity { expected: &'static str, girth: Girth },
    #[error(transparent)]
    Walk(#[from] crate::walks::WalkError),
}

fn check_girth(girth: Girth) -> Result<u32, BoundError> {
    match girth {
        Girth::Infinite => Err(BoundError::InfiniteGirth),
        Girth::Finite(g) if g < 3 => Err(BoundError::GirthTooSmall(g)),
        Girth::Finite(g) => Ok(g),
    }
}

fn check_degree(d: &Rational) -> Result<(), BoundError> {
    if *d < Rational::from_integer(BigInt::from(2)) {
        Err(BoundError::DegreeTooSmall(d.clone()))
    } else {
        Ok(())
    }
}

fn geometric_sum(base: &Rational, terms: u32) -> Rational {
    let mut sum = Rational::zero();
    let mut power = Rational::one();
    for _ in 0..terms {
        sum += &power;
        power *= base;
    }
    sum
}

/// The Moore-type expression with degree parameter `d` at girth `g`.
fn moore_expression(d: &Rational, g: u32) -> Rational {
    let base = d - Rational::one();
    let r = g / 2;
    if g % 2 == 1 {
        Rational::one() + d * geometric_sum(&base, r)
    } else {
        Rational::from_integer(BigInt::from(2)) * geometric_sum(&base, r)
    }
}

/// Moore bound from the minimum degree.
pub fn moore_bound(delta: u64, girth: Girth) -> Result<Rational, BoundError> {
    ahl_bound(&Rational::from_integer(BigInt::from(delta)), girth)
}

/// Alon–Hoory–Linial bound: the Moore expression at the average degree.
pub fn ahl_bound(d_bar: &Rational, girth: Girth) -> Result<Rational, BoundError> {
    check_degree(d_bar)?;
    let g = check_girth(girth)?;
    Ok(moore_expression(d_bar, g))
}

/// Hoory's side bounds `(lb_L, lb_R)` at girth `2r`:
/// `lb_L = Σ_{i<r} (d_R-1)^{⌈i/2⌉} (d_L-1)^{⌊i/2⌋}`, `lb_R` with the sides
/// swapped.
pub fn hoory_bounds(
    d_left: &Rational,
    d_right: &Rational,
    girth: Girth,
) -> Result<(Rational, Rational), BoundError> {
    check_degree(d_left)?;
    check_degree(d_right)?;
    let g = check_girth(girth)?;
    if g % 2 == 1 {
        return Err(BoundError::OddGirth(g));
    }
    let r = g / 2;
    let side = |near: &Rational, far: &Rational| {
        // near: the counted side's own average, far: the opposite side's
        let near_base = near - Rational::one();
        let far_base = far - Rational::one();
        (0..r).fold(Rational::zero(), |acc, i| {
            acc + pow(&far_base, i.div_ceil(2)) * pow(&near_base, i / 2)
        })
    };
    Ok((side(d_left, d_right), side(d_right, d_left)))
}

pub(crate) fn pow(base: &Rational, exp: u32) -> Rational {
    (0..exp).fold(Rational::one(), |acc, _| acc * base)
}

/// Smallest integer at least `r`.
pub fn ceil_integer(r: &Rational) -> BigInt {
    r.ceil().to_integer()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(v: i64) -> Rational {
        Rational::from_integer(v.into())
    }

    fn frac(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn moore_values() {
        assert_eq!(moore_bound(3, Girth::Finite(5)).unwrap(), int(10));
        assert_eq!(moore_bound(3, Girth::Finite(6)).unwrap(), int(14));
        assert_eq!(moore_bound(2, Girth::Finite(7)).unwrap(), int(7));
        assert_eq!(moore_bound(3, Girth::Finite(3)).unwrap(), int(4));
        assert_eq!(moore_bound(3, Girth::Finite(4)).unwrap(), int(6));
    }

    #[test]
    fn ahl_values() {
        assert_eq!(ahl_bound(&int(3), Girth::Finite(5)).unwrap(), int(10));
        assert_eq!(ahl_bound(&frac(14, 5), Girth::Finite(5)).unwrap(), frac(221, 25));
        for g in 3..20 {
            assert_eq!(ahl_bound(&int(2), Girth::Finite(g)).unwrap(), int(g as i64));
        }
    }

    #[test]
    fn hoory_values() {
        assert_eq!(
            hoory_bounds(&int(3), &int(3), Girth::Finite(6)).unwrap(),
            (int(7), int(7))
        );
        assert_eq!(
            hoory_bounds(&int(3), &int(2), Girth::Finite(4)).unwrap(),
            (int(2), int(3))
        );
        for r in 2..10 {
            assert_eq!(
                hoory_bounds(&int(2), &int(2), Girth::Finite(2 * r)).unwrap(),
                (int(r as i64), int(r as i64))
            );
        }
    }

    #[test]
    fn domain_errors() {
        assert!(matches!(
            moore_bound(1, Girth::Finite(5)),
            Err(BoundError::DegreeTooSmall(_))
        ));
        assert_eq!(moore_bound(3, Girth::Infinite), Err(BoundError::InfiniteGirth));
        assert_eq!(moore_bound(3, Girth::Finite(2)), Err(BoundError::GirthTooSmall(2)));
        assert!(matches!(
            ahl_bound(&frac(19, 10), Girth::Finite(5)),
            Err(BoundError::DegreeTooSmall(_))
        ));
        assert_eq!(
            hoory_bounds(&int(3), &int(3), Girth::Finite(5)),
            Err(BoundError::OddGirth(5))
        );
    }

    #[test]
    fn ceiling() {
        assert_eq!(ceil_integer(&frac(221, 25)), BigInt::from(9));
        assert_eq!(ceil_integer(&int(10)), BigInt::from(10));
    }
}
