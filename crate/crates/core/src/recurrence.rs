//! The word-length recurrence: stepping G^n -> G^(n+1) in the sphere basis,
//! extracting moments, and emitting the moment series.
//!
//! Everything here follows from the single multiplication rule
//!
//! ```text
//! X_1 * X_0 = X_1
//! X_1 * X_1 = X_2 + 2N * X_0
//! X_1 * X_l = X_(l+1) + (2N-1) * X_(l-1)   for l >= 2
//! ```
//!
//! extended linearly to arbitrary expansions.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::expansion::WordLengthExpansion;
use crate::group::GroupParameter;
use crate::series::{FormalSeries, MomentSequence};

/// One multiplication step: the expansion of G * (the given expansion).
pub fn multiply_by_generator(
    e: &WordLengthExpansion,
    params: GroupParameter,
) -> WordLengthExpansion {
    let mut next: BTreeMap<usize, BigInt> = BTreeMap::new();
    for (len, coeff) in e.iter() {
        // up-step: every word grows by one of the non-cancelling letters
        *next.entry(len + 1).or_default() += coeff;
        // down-step: the cancelling letters shorten the word
        match len {
            0 => {}
            1 => *next.entry(0).or_default() += params.degree_big() * coeff,
            _ => *next.entry(len - 1).or_default() += params.branching_big() * coeff,
        }
    }
    WordLengthExpansion::from_coefficients(e.order() + 1, next)
        .expect("generator step preserves expansion invariants")
}

/// Memoized powers of G in the sphere basis for a fixed N.
///
/// Power n is computed by n applications of [`multiply_by_generator`] starting
/// from the identity; intermediate powers are kept, since the moment series
/// needs all of them anyway.
#[derive(Debug, Clone)]
pub struct GeneratorPowers {
    params: GroupParameter,
    powers: Vec<WordLengthExpansion>,
}

impl GeneratorPowers {
    pub fn new(params: GroupParameter) -> Self {
        GeneratorPowers {
            params,
            powers: vec![WordLengthExpansion::identity()],
        }
    }

    pub fn params(&self) -> GroupParameter {
        self.params
    }

    /// The expansion of G^n, computing and caching any missing powers.
    pub fn power(&mut self, n: usize) -> &WordLengthExpansion {
        while self.powers.len() <= n {
            let next = multiply_by_generator(self.powers.last().unwrap(), self.params);
            self.powers.push(next);
        }
        &self.powers[n]
    }

    /// tau(G^n): the coefficient of the identity in G^n.
    pub fn moment(&mut self, n: usize) -> BigInt {
        if n % 2 == 1 {
            BigInt::zero()
        } else {
            self.power(n).coefficient(0)
        }
    }
}

/// The exact expansion of G^n.
pub fn expand_power(params: GroupParameter, n: usize) -> WordLengthExpansion {
    let mut powers = GeneratorPowers::new(params);
    powers.power(n).clone()
}

/// tau(G^n): 0 for odd n, the identity coefficient of G^n for even n
/// (1 when n = 0).
pub fn moment(params: GroupParameter, n: usize) -> BigInt {
    if n == 0 {
        BigInt::one()
    } else if n % 2 == 1 {
        BigInt::zero()
    } else {
        GeneratorPowers::new(params).moment(n)
    }
}

/// The moment series of G up to z^max_order: coefficient a_n = tau(G^n),
/// zero at every odd index. Computed in one sweep of the recurrence, each
/// power's identity coefficient harvested in passing.
pub fn moment_series(params: GroupParameter, max_order: usize) -> FormalSeries {
    let mut powers = GeneratorPowers::new(params);
    let coefficients = (1..=max_order).map(|n| powers.moment(n)).collect();
    FormalSeries::from_coefficients(coefficients)
}

/// The moments m_1..m_max_order of G as a sequence.
pub fn moment_sequence(params: GroupParameter, max_order: usize) -> MomentSequence {
    let mut powers = GeneratorPowers::new(params);
    MomentSequence::from_values((1..=max_order).map(|n| powers.moment(n)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expansion::mass_check;

    fn params(n: usize) -> GroupParameter {
        GroupParameter::new(n).unwrap()
    }

    fn coeffs(e: &WordLengthExpansion) -> Vec<(usize, i64)> {
        e.iter()
            .map(|(l, c)| (l, i64::try_from(c).unwrap()))
            .collect()
    }

    #[test]
    fn single_steps() {
        let p = params(2);
        let e0 = WordLengthExpansion::identity();
        let e1 = multiply_by_generator(&e0, p);
        assert_eq!(coeffs(&e1), vec![(1, 1)]);
        let e2 = multiply_by_generator(&e1, p);
        assert_eq!(coeffs(&e2), vec![(0, 4), (2, 1)]);
        let e3 = multiply_by_generator(&e2, p);
        assert_eq!(coeffs(&e3), vec![(1, 7), (3, 1)]);
    }

    #[test]
    fn fourth_and_eighth_powers() {
        assert_eq!(
            coeffs(&expand_power(params(2), 4)),
            vec![(0, 28), (2, 10), (4, 1)]
        );
        assert_eq!(
            coeffs(&expand_power(params(2), 8)),
            vec![(0, 2092), (2, 958), (4, 202), (6, 22), (8, 1)]
        );
    }

    #[test]
    fn third_power_for_general_n() {
        for n in 1..=5 {
            let e = expand_power(params(n), 3);
            assert_eq!(coeffs(&e), vec![(1, 4 * n as i64 - 1), (3, 1)]);
        }
    }

    #[test]
    fn invariants_hold_for_all_small_parameters() {
        // parity, bound, leading term, and nonnegativity are enforced by the
        // WordLengthExpansion constructor; mass conservation is checked here.
        for n in 1..=4 {
            let p = params(n);
            let mut powers = GeneratorPowers::new(p);
            for order in 0..=40 {
                assert!(
                    mass_check(powers.power(order), p),
                    "mass conservation failed at N={n}, n={order}"
                );
            }
        }
    }

    #[test]
    fn step_consistency_identities() {
        // Reading consecutive expansions off the recurrence: the identity
        // coefficient of G^(2k) is 2N times the length-1 coefficient of
        // G^(2k-1), and interior coefficients combine one up-step with one
        // weighted down-step.
        for n in 1..=3 {
            let p = params(n);
            let mut powers = GeneratorPowers::new(p);
            for k in 1..=10usize {
                let prev = powers.power(2 * k - 1).clone();
                let cur = powers.power(2 * k).clone();
                assert_eq!(cur.coefficient(0), p.degree_big() * prev.coefficient(1));
                for j in 1..k {
                    assert_eq!(
                        cur.coefficient(2 * j),
                        prev.coefficient(2 * j - 1)
                            + p.branching_big() * prev.coefficient(2 * j + 1)
                    );
                }
            }
        }
    }

    #[test]
    fn moments() {
        assert_eq!(moment(params(2), 0), BigInt::from(1));
        assert_eq!(moment(params(2), 2), BigInt::from(4));
        assert_eq!(moment(params(5), 7), BigInt::from(0));
        assert_eq!(moment(params(2), 6), BigInt::from(232));
    }

    #[test]
    fn moment_series_values() {
        let to_i64 = |s: &FormalSeries| -> Vec<i64> {
            s.coefficients()
                .iter()
                .map(|c| i64::try_from(c).unwrap())
                .collect()
        };
        assert_eq!(
            to_i64(&moment_series(params(2), 6)),
            vec![0, 4, 0, 28, 0, 232]
        );
        assert_eq!(to_i64(&moment_series(params(1), 2)), vec![0, 2]);
        assert_eq!(to_i64(&moment_series(params(3), 4)), vec![0, 6, 0, 66]);
        assert!(moment_series(params(3), 15).is_even());
    }

    #[test]
    fn moment_sandwich_bounds() {
        for n in 1..=3 {
            let p = params(n);
            for k in 1..=8usize {
                let m = moment(p, 2 * k);
                assert!(m <= p.degree_big().pow(2 * k as u32));
                assert!(m >= p.degree_big() * p.branching_big().pow(k as u32 - 1));
            }
        }
    }
}
