//! The `epsilon -> (eta, Delta, k, alpha, ell)` parameter chain of the
//! chained-clique construction.
//!
//! Inequalities involving `ln Delta` are evaluated on outward-rounded
//! intervals: a check only counts as satisfied when the whole interval for the
//! left side lies above the whole interval for the right side. A true
//! inequality can be reported as [`Truth::Unknown`] at a razor-thin boundary,
//! but a false one is never accepted.

use core::ops::{Add, Div, Mul, Sub};

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::Rational;

/// Smallest `Delta` the construction allows.
pub const DELTA_FLOOR: u64 = 27;

/// Closed interval of reals with `f64` endpoints.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Interval {
    pub lo: f64,
    pub hi: f64,
}

fn down(x: f64) -> f64 {
    x.next_down()
}

fn up(x: f64) -> f64 {
    x.next_up()
}

impl Interval {
    /// Encloses a non-negative rational; exact integers below 2^53 are kept tight.
    pub fn from_rational(r: Rational) -> Interval {
        let (p, q) = (*r.numer(), *r.denom());
        const EXACT: u64 = 1 << 53;
        if q == 1 && p < EXACT {
            return Interval::point(p as f64);
        }
        let mut x = Interval::point(p as f64);
        if p >= EXACT {
            x = Interval { lo: down(x.lo), hi: up(x.hi) };
        }
        let mut y = Interval::point(q as f64);
        if q >= EXACT {
            y = Interval { lo: down(y.lo), hi: up(y.hi) };
        }
        x / y
    }

    pub fn from_integer(n: u64) -> Interval {
        Interval::from_rational(Rational::from_integer(n))
    }

    fn point(x: f64) -> Interval {
        Interval { lo: x, hi: x }
    }

    /// Natural logarithm; widened by two ulps on each side to cover libm's error.
    pub fn ln(self) -> Interval {
        Interval { lo: down(down(libm::log(self.lo))), hi: up(up(libm::log(self.hi))) }
    }
}

impl Add for Interval {
    type Output = Interval;

    fn add(self, o: Interval) -> Interval {
        Interval { lo: down(self.lo + o.lo), hi: up(self.hi + o.hi) }
    }
}

impl Sub for Interval {
    type Output = Interval;

    fn sub(self, o: Interval) -> Interval {
        Interval { lo: down(self.lo - o.hi), hi: up(self.hi - o.lo) }
    }
}

/// Only for intervals with non-negative endpoints.
impl Mul for Interval {
    type Output = Interval;

    fn mul(self, o: Interval) -> Interval {
        debug_assert!(self.lo >= 0.0 && o.lo >= 0.0);
        Interval { lo: down(self.lo * o.lo), hi: up(self.hi * o.hi) }
    }
}

/// Only for non-negative dividends and positive divisors.
impl Div for Interval {
    type Output = Interval;

    fn div(self, o: Interval) -> Interval {
        debug_assert!(self.lo >= 0.0 && o.lo > 0.0);
        Interval { lo: down(self.lo / o.hi), hi: up(self.hi / o.lo) }
    }
}

/// Outcome of an interval comparison.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Truth {
    True,
    False,
    Unknown,
}

impl Truth {
    pub fn holds(self) -> bool {
        self == Truth::True
    }
}

/// Decides `a >= b`.
pub fn certainly_ge(a: Interval, b: Interval) -> Truth {
    if a.lo >= b.hi {
        Truth::True
    } else if a.hi < b.lo {
        Truth::False
    } else {
        Truth::Unknown
    }
}

/// `1 - 8 ln(Delta)/Delta >= 1/(1+eta)`.
pub fn delta_condition(delta: u64, eta: Rational) -> Truth {
    let d = Interval::from_integer(delta);
    let lhs = Interval::from_integer(1) - Interval::from_integer(8) * d.ln() / d;
    let rhs = Interval::from_rational(Rational::from_integer(1) / (Rational::from_integer(1) + eta));
    certainly_ge(lhs, rhs)
}

/// `Delta / ln Delta` as an interval.
pub fn delta_over_ln(delta: u64) -> Interval {
    let d = Interval::from_integer(delta);
    d / d.ln()
}

/// `eta * k >= 2 Delta`, exactly.
pub fn k_condition_linear(k: u64, delta: u64, eta: Rational) -> bool {
    eta * Rational::from_integer(k) >= Rational::from_integer(2 * delta)
}

/// `(1+eta) * k >= Delta / ln Delta`.
pub fn k_condition_log(k: u64, delta: u64, eta: Rational) -> Truth {
    let lhs = Interval::from_rational((Rational::from_integer(1) + eta) * Rational::from_integer(k));
    certainly_ge(lhs, delta_over_ln(delta))
}

/// `alpha >= Delta / ln Delta`.
pub fn alpha_condition(alpha: u64, delta: u64) -> Truth {
    certainly_ge(Interval::from_integer(alpha), delta_over_ln(delta))
}

fn ceil(r: Rational) -> u64 {
    let (q, rem) = r.numer().div_rem(r.denom());
    q + u64::from(rem != 0)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParameterSet {
    pub epsilon: Rational,
    /// `epsilon / 2`.
    pub eta: Rational,
    /// Minimal `Delta >= 27` with `1 - 8 ln(Delta)/Delta >= 1/(1+eta)`.
    pub delta: u64,
    /// Minimal `k` meeting both `k` conditions for this `Delta`.
    pub k_min: u64,
    /// The `k` the remaining fields were derived for (`k >= k_min`).
    pub k: u64,
    /// `ceil((1+eta) k)`, the clique size of each block.
    pub alpha: u64,
    /// `(1+epsilon) k / 2`.
    pub ell: Rational,
}

/// Named inequality with its verdict.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub truth: Truth,
}

impl ParameterSet {
    /// Re-evaluates every inequality on the stored values.
    pub fn checks(&self) -> [Check; 5] {
        let exact = |b: bool| if b { Truth::True } else { Truth::False };
        [
            Check { name: "1 - 8 ln(Delta)/Delta >= 1/(1+eta)", truth: delta_condition(self.delta, self.eta) },
            Check { name: "Delta >= 27", truth: exact(self.delta >= DELTA_FLOOR) },
            Check { name: "eta k >= 2 Delta", truth: exact(k_condition_linear(self.k, self.delta, self.eta)) },
            Check { name: "(1+eta) k >= Delta/ln(Delta)", truth: k_condition_log(self.k, self.delta, self.eta) },
            Check { name: "alpha >= Delta/ln(Delta)", truth: alpha_condition(self.alpha, self.delta) },
        ]
    }

    pub fn is_valid(&self) -> bool {
        self.checks().iter().all(|c| c.truth.holds())
    }
}

/// Smallest `Delta >= 27` whose condition certainly holds.
pub fn minimal_delta(epsilon: Rational) -> Result<u64> {
    if *epsilon.numer() == 0 {
        return Err(Error::InvalidParameter("epsilon must be positive"));
    }
    let eta = epsilon / Rational::from_integer(2);
    // 1 - 8 ln(D)/D increases for D >= 27 and tends to 1 > 1/(1+eta)
    let mut delta = DELTA_FLOOR;
    while !delta_condition(delta, eta).holds() {
        delta += 1;
    }
    Ok(delta)
}

/// Derives the chain with the minimal `Delta` and the minimal `k`.
pub fn derive_parameters(epsilon: Rational) -> Result<ParameterSet> {
    derive(epsilon, None)
}

/// Same as [`derive_parameters`] but for a caller-chosen `k >= k_min`.
pub fn derive_parameters_for_k(epsilon: Rational, k: u64) -> Result<ParameterSet> {
    derive(epsilon, Some(k))
}

fn derive(epsilon: Rational, k: Option<u64>) -> Result<ParameterSet> {
    let delta = minimal_delta(epsilon)?;
    let eta = epsilon / Rational::from_integer(2);
    let mut k_min = ceil(Rational::from_integer(2 * delta) / eta).max(1);
    while !k_condition_log(k_min, delta, eta).holds() {
        k_min += 1;
    }
    let k = match k {
        Some(k) if k < k_min => return Err(Error::InvalidParameter("k below the minimal admissible k")),
        Some(k) => k,
        None => k_min,
    };
    let one = Rational::from_integer(1);
    let params = ParameterSet {
        epsilon,
        eta,
        delta,
        k_min,
        k,
        alpha: ceil((one + eta) * Rational::from_integer(k)),
        ell: (one + epsilon) * Rational::from_integer(k) / Rational::from_integer(2),
    };
    debug_assert!(params.is_valid());
    Ok(params)
}
