//! Independent verification oracles, deliberately sharing no code with the
//! recurrence engine:
//!
//! - [`exhaustive_expansion`] recovers the expansion of G^n by direct
//!   convolution over the Cayley tree of F_N, aggregating the count of
//!   length-n letter sequences reducing to each reduced word.
//! - [`closed_walk_count`] recovers the moment tau(G^n) as a weighted sum
//!   over nonnegative lattice paths (the height profile of a walk on the
//!   2N-regular tree).

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::expansion::{sphere_size, WordLengthExpansion};
use crate::group::GroupParameter;

/// Default ceiling on the oracle's dense state space (one u64 counter per
/// reduced word of length <= n). N=3, n=10 needs 14 648 438 states.
pub const DEFAULT_ORACLE_BUDGET: usize = 16_000_000;

/// One letter of a word in F_N: a generator or its inverse.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter {
    index: usize,
    inverse: bool,
}

impl Letter {
    pub fn new(params: GroupParameter, index: usize, inverse: bool) -> Result<Self> {
        if index == 0 || index > params.n_generators() {
            return Err(Error::InvalidLetter);
        }
        Ok(Letter { index, inverse })
    }

    pub fn index(&self) -> usize {
        self.index
    }

    pub fn is_inverse(&self) -> bool {
        self.inverse
    }

    pub fn inverted(&self) -> Letter {
        Letter {
            index: self.index,
            inverse: !self.inverse,
        }
    }

    pub fn cancels(&self, other: &Letter) -> bool {
        self.index == other.index && self.inverse != other.inverse
    }
}

/// A word of F_N in reduced form: no adjacent cancelling letters.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct ReducedWord {
    letters: Vec<Letter>,
}

impl ReducedWord {
    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }
}

/// Free reduction by stack evaluation: push each letter, cancelling against
/// the top of the stack where possible. The result is the unique reduced form.
pub fn reduce_word<I>(letters: I) -> ReducedWord
where
    I: IntoIterator<Item = Letter>,
{
    let mut stack: Vec<Letter> = Vec::new();
    for letter in letters {
        if stack.last().is_some_and(|top| top.cancels(&letter)) {
            stack.pop();
        } else {
            stack.push(letter);
        }
    }
    ReducedWord { letters: stack }
}

/// The expansion of G^n recovered by brute convolution: one exact counter per
/// reduced word of length <= n, stepped n times by "append one letter".
///
/// Words are indexed without storing letters: level l >= 1 lists words in a
/// fixed mixed-radix order where word i of level l has children
/// i*(2N-1) + r, r = 0..2N-2, at level l+1 (its 2N-1 non-cancelling
/// extensions) and parent i/(2N-1) at level l-1 (its single cancelling
/// extension); level 1 holds the 2N single letters, all children of the root.
/// The tree structure alone determines every transition, so no letter values
/// are ever decoded.
///
/// By vertex-transitivity of the Cayley tree all words of one length must end
/// with identical counts; this independence, and conservation of the total
/// (2N)^n, are asserted before the counts are distilled into an expansion.
pub fn exhaustive_expansion(
    params: GroupParameter,
    n: usize,
    budget: usize,
) -> Result<WordLengthExpansion> {
    let degree = params.degree();
    let branching = params.branching();

    // counters are u64: the largest possible count is the total (2N)^n
    let total_mass = params.degree_big().pow(n as u32);
    if total_mass > BigInt::from(u64::MAX) {
        let mut depth_limit = 0usize;
        while params.degree_big().pow(depth_limit as u32 + 1) <= BigInt::from(u64::MAX) {
            depth_limit += 1;
        }
        return Err(Error::SizeTooLarge {
            size: n,
            limit: depth_limit,
        });
    }

    let states: BigInt = (0..=n).map(|l| sphere_size(params, l)).sum();
    if states > BigInt::from(budget) {
        return Err(Error::OracleBudget {
            required: u128::try_from(&states).unwrap_or(u128::MAX),
            budget,
        });
    }

    // one dense counter array per word length; level sizes fit usize because
    // their sum passed the budget check
    let mut levels: Vec<Vec<u64>> = (0..=n)
        .map(|l| vec![0u64; usize::try_from(&sphere_size(params, l)).unwrap()])
        .collect();
    levels[0][0] = 1;

    for step in 1..=n {
        // parity split: the step writes only lengths of parity step % 2 and
        // reads only the opposite parity, so the update is in place
        for l in (step % 2..=step.min(n)).step_by(2) {
            let (below, rest) = levels.split_at_mut(l);
            let (target, above) = rest.split_first_mut().unwrap();
            target.fill(0);
            // up-steps from length l-1: each word extends to its children
            if l >= 1 {
                let src = &below[l - 1];
                if l == 1 {
                    for slot in target.iter_mut() {
                        *slot += src[0];
                    }
                } else {
                    for (i, &c) in src.iter().enumerate() {
                        if c != 0 {
                            for slot in &mut target[i * branching..(i + 1) * branching] {
                                *slot += c;
                            }
                        }
                    }
                }
            }
            // down-steps from length l+1: each word reduces to its parent
            if l < n && l + 1 < step {
                let src = &above[0];
                if l == 0 {
                    target[0] += src.iter().sum::<u64>();
                } else {
                    for (i, &c) in src.iter().enumerate() {
                        target[i / branching] += c;
                    }
                }
            }
        }
    }

    let mut coefficients = std::collections::BTreeMap::new();
    let mut recovered_mass = BigInt::zero();
    for l in (n % 2..=n).step_by(2) {
        let level = &levels[l];
        let count = level[0];
        assert!(
            level.iter().all(|&c| c == count),
            "walk counts differ across reduced words of length {l}"
        );
        recovered_mass += BigInt::from(count) * sphere_size(params, l);
        coefficients.insert(l, BigInt::from(count));
    }
    assert_eq!(
        recovered_mass, total_mass,
        "walk counts do not conserve the total {degree}^{n}"
    );
    WordLengthExpansion::from_coefficients(n, coefficients)
}

/// The number of length-n closed walks at the root of the 2N-regular tree,
/// i.e. tau(G^n), via the height profile alone: dynamic programming over
/// nonnegative lattice paths where an up-step from height 0 carries weight
/// 2N, an up-step from height >= 1 carries weight 2N-1, and every down-step
/// carries weight 1. Returns 0 for odd n.
pub fn closed_walk_count(params: GroupParameter, n: usize) -> BigInt {
    let mut heights = vec![BigInt::zero(); n + 2];
    heights[0] = BigInt::one();
    for step in 0..n {
        let mut next = vec![BigInt::zero(); n + 2];
        for h in 0..=step {
            if heights[h].is_zero() {
                continue;
            }
            let weight = if h == 0 {
                params.degree_big()
            } else {
                params.branching_big()
            };
            let up = &heights[h] * weight;
            next[h + 1] += up;
            if h >= 1 {
                let down = heights[h].clone();
                next[h - 1] += down;
            }
        }
        heights = next;
    }
    heights[0].clone()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::recurrence::{expand_power, moment};
    use std::collections::BTreeMap;

    fn params(n: usize) -> GroupParameter {
        GroupParameter::new(n).unwrap()
    }

    fn letter(index: usize, inverse: bool) -> Letter {
        Letter::new(params(2), index, inverse).unwrap()
    }

    #[test]
    fn letter_validation() {
        assert!(Letter::new(params(2), 0, false).is_err());
        assert!(Letter::new(params(2), 3, false).is_err());
        assert!(Letter::new(params(2), 2, true).is_ok());
        assert!(letter(1, false).cancels(&letter(1, true)));
        assert!(!letter(1, false).cancels(&letter(2, true)));
        assert!(!letter(1, false).cancels(&letter(1, false)));
        assert_eq!(letter(1, false).inverted(), letter(1, true));
    }

    #[test]
    fn reduction_fixtures() {
        let g = |i: usize| letter(i, false);
        let ginv = |i: usize| letter(i, true);
        assert!(reduce_word([g(1), ginv(1)]).is_empty());
        assert_eq!(
            reduce_word([g(1), g(2), ginv(2), g(1)]).letters(),
            &[g(1), g(1)]
        );
        assert_eq!(
            reduce_word([g(1), ginv(2), g(2), ginv(1), g(2)]).letters(),
            &[g(2)]
        );
    }

    fn expect_expansion(e: &WordLengthExpansion, entries: &[(usize, u64)]) {
        let actual: Vec<(usize, u64)> = e
            .iter()
            .map(|(l, c)| (l, u64::try_from(c).unwrap()))
            .collect();
        assert_eq!(actual, entries);
    }

    #[test]
    fn exhaustive_fixtures() {
        let e = exhaustive_expansion(params(2), 2, DEFAULT_ORACLE_BUDGET).unwrap();
        expect_expansion(&e, &[(0, 4), (2, 1)]);
        let e = exhaustive_expansion(params(2), 4, DEFAULT_ORACLE_BUDGET).unwrap();
        expect_expansion(&e, &[(0, 28), (2, 10), (4, 1)]);
        let e = exhaustive_expansion(params(1), 4, DEFAULT_ORACLE_BUDGET).unwrap();
        expect_expansion(&e, &[(0, 6), (2, 4), (4, 1)]);
    }

    #[test]
    fn exhaustive_budget_is_enforced() {
        assert!(matches!(
            exhaustive_expansion(params(3), 8, 1000),
            Err(Error::OracleBudget { budget: 1000, .. })
        ));
        // N=1 keeps the state space tiny but overflows u64 counts at n=64
        assert!(matches!(
            exhaustive_expansion(params(1), 70, DEFAULT_ORACLE_BUDGET),
            Err(Error::SizeTooLarge {
                size: 70,
                limit: 63
            })
        ));
    }

    #[test]
    fn exhaustive_matches_recurrence_on_small_cases() {
        for n_gen in 1..=2 {
            let p = params(n_gen);
            for n in 0..=7 {
                assert_eq!(
                    exhaustive_expansion(p, n, DEFAULT_ORACLE_BUDGET).unwrap(),
                    expand_power(p, n),
                    "at N={n_gen}, n={n}"
                );
            }
        }
    }

    /// Definitional cross-check of the dense-array convolution: enumerate all
    /// (2N)^n letter sequences, reduce each with the letter-level stack, and
    /// tally counts per reduced word. Shares no mechanism with the indexed
    /// transition scheme.
    #[test]
    fn exhaustive_matches_letter_level_enumeration() {
        let p = params(2);
        let alphabet: Vec<Letter> = (1..=2)
            .flat_map(|i| {
                [
                    Letter::new(p, i, false).unwrap(),
                    Letter::new(p, i, true).unwrap(),
                ]
            })
            .collect();
        for n in 0..=5usize {
            let mut counts: BTreeMap<ReducedWord, u64> = BTreeMap::new();
            let mut word = vec![0usize; n];
            loop {
                let reduced = reduce_word(word.iter().map(|&i| alphabet[i]));
                *counts.entry(reduced).or_default() += 1;
                // odometer over the alphabet
                let mut pos = 0;
                while pos < n {
                    word[pos] += 1;
                    if word[pos] < alphabet.len() {
                        break;
                    }
                    word[pos] = 0;
                    pos += 1;
                }
                if pos == n {
                    break;
                }
            }
            // counts depend only on the reduced word's length...
            let mut by_length: BTreeMap<usize, u64> = BTreeMap::new();
            for (w, c) in &counts {
                let prev = by_length.insert(w.len(), *c);
                assert!(prev.is_none() || prev == Some(*c), "count differs at {w:?}");
            }
            // ...and agree with the dense-array oracle
            let e = exhaustive_expansion(p, n, DEFAULT_ORACLE_BUDGET).unwrap();
            let expected: BTreeMap<usize, u64> = e
                .iter()
                .map(|(l, c)| (l, u64::try_from(c).unwrap()))
                .collect();
            assert_eq!(by_length, expected, "at n={n}");
        }
    }

    #[test]
    fn closed_walk_fixtures() {
        assert_eq!(closed_walk_count(params(2), 0), BigInt::one());
        assert_eq!(closed_walk_count(params(2), 2), BigInt::from(4));
        assert_eq!(closed_walk_count(params(2), 6), BigInt::from(232));
        assert_eq!(closed_walk_count(params(2), 8), BigInt::from(2092));
        assert_eq!(closed_walk_count(params(2), 5), BigInt::zero());
    }

    #[test]
    fn closed_walks_match_moments() {
        for n_gen in 1..=4 {
            let p = params(n_gen);
            for n in (0..=16).step_by(2) {
                assert_eq!(closed_walk_count(p, n), moment(p, n), "at N={n_gen}, n={n}");
            }
        }
    }
}
