//! Moment/cumulant Möbius inversion over the noncrossing-partition lattice,
//! the even-block-type formula for the R-transform coefficients of G, and a
//! fast polynomial-time recursion for orders beyond lattice reach.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::group::GroupParameter;
use crate::nc::{enumerate_even_nc, enumerate_nc, mobius_to_top, NoncrossingPartition};
use crate::recurrence::moment_sequence;
use crate::series::{CumulantSequence, FormalSeries, MomentSequence};

/// Default largest order computed by full lattice enumeration; higher orders
/// use the recursion. NC(12) has 208 012 elements, NC(20) would have ~6.5e9.
pub const DEFAULT_LATTICE_LIMIT: usize = 12;

#[derive(Debug, Clone, Copy)]
pub struct TransformOptions {
    /// Largest order the lattice-enumeration path accepts.
    pub lattice_limit: usize,
    /// Worker count for folding partition chunks; any value yields
    /// bit-identical results.
    pub threads: usize,
}

impl Default for TransformOptions {
    fn default() -> Self {
        TransformOptions {
            lattice_limit: DEFAULT_LATTICE_LIMIT,
            threads: 1,
        }
    }
}

/// Which computation path produced an R-transform series.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RTransformMethod {
    /// Double sum over even noncrossing partitions grouped by block type.
    Lattice,
    /// Moment-cumulant recursion, no enumeration.
    Recursion,
}

impl RTransformMethod {
    pub fn name(self) -> &'static str {
        match self {
            RTransformMethod::Lattice => "lattice",
            RTransformMethod::Recursion => "recursion",
        }
    }
}

/// Splits the items into at most `threads` chunks, folds each chunk (on its
/// own thread when threads > 1), and returns the partial results in chunk
/// order. Callers combine partials with exact integer addition, so the result
/// does not depend on the split.
fn fold_chunks<T, F>(items: &[NoncrossingPartition], threads: usize, fold_chunk: F) -> Vec<T>
where
    T: Send,
    F: Fn(&[NoncrossingPartition]) -> T + Sync,
{
    if threads <= 1 || items.len() < 2 {
        return vec![fold_chunk(items)];
    }
    let chunk_size = items.len().div_ceil(threads);
    std::thread::scope(|scope| {
        let fold_chunk = &fold_chunk;
        let handles: Vec<_> = items
            .chunks(chunk_size)
            .map(|chunk| scope.spawn(move || fold_chunk(chunk)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("fold worker panicked"))
            .collect()
    })
}

/// The partition-indexed moment: the product of m_|V| over the blocks V.
pub fn partition_moment(pi: &NoncrossingPartition, m: &MomentSequence) -> Result<BigInt> {
    block_product(pi, m.values())
}

/// The partition-indexed cumulant: the product of k_|V| over the blocks V.
pub fn partition_cumulant(pi: &NoncrossingPartition, k: &CumulantSequence) -> Result<BigInt> {
    block_product(pi, k.values())
}

fn block_product(pi: &NoncrossingPartition, values: &[BigInt]) -> Result<BigInt> {
    let mut product = BigInt::one();
    for block in pi.blocks() {
        let size = block.len();
        if size > values.len() {
            return Err(Error::InsufficientMoments {
                needed: size,
                available: values.len(),
            });
        }
        product *= &values[size - 1];
    }
    Ok(product)
}

fn check_lattice_order(max_order: usize, opts: &TransformOptions) -> Result<()> {
    if max_order > opts.lattice_limit {
        return Err(Error::SizeTooLarge {
            size: max_order,
            limit: opts.lattice_limit,
        });
    }
    Ok(())
}

fn check_sequence_length(len: usize, max_order: usize) -> Result<()> {
    if len < max_order {
        return Err(Error::InsufficientMoments {
            needed: max_order,
            available: len,
        });
    }
    Ok(())
}

/// Möbius inversion over the full lattice: for each n up to max_order,
/// k_n = sum over pi in NC(n) of partition_moment(pi, m) * mu(pi, 1_n).
/// The reference path; orders beyond the configured lattice limit are
/// rejected (use [`moments_to_cumulants_fast`] there).
pub fn moments_to_cumulants(
    m: &MomentSequence,
    max_order: usize,
    opts: &TransformOptions,
) -> Result<CumulantSequence> {
    check_lattice_order(max_order, opts)?;
    check_sequence_length(m.len(), max_order)?;
    let mut values = Vec::with_capacity(max_order);
    for n in 1..=max_order {
        let lattice = enumerate_nc(n)?;
        let partials = fold_chunks(&lattice, opts.threads, |chunk| {
            chunk
                .iter()
                .map(|pi| {
                    partition_moment(pi, m).expect("block sizes within sequence length")
                        * mobius_to_top(pi)
                })
                .sum::<BigInt>()
        });
        values.push(partials.into_iter().sum());
    }
    Ok(CumulantSequence::from_values(values))
}

/// Zeta summation over the full lattice: for each n up to max_order,
/// m_n = sum over pi in NC(n) of partition_cumulant(pi, k).
pub fn cumulants_to_moments(
    k: &CumulantSequence,
    max_order: usize,
    opts: &TransformOptions,
) -> Result<MomentSequence> {
    check_lattice_order(max_order, opts)?;
    check_sequence_length(k.len(), max_order)?;
    let mut values = Vec::with_capacity(max_order);
    for n in 1..=max_order {
        let lattice = enumerate_nc(n)?;
        let partials = fold_chunks(&lattice, opts.threads, |chunk| {
            chunk
                .iter()
                .map(|pi| partition_cumulant(pi, k).expect("block sizes within sequence length"))
                .sum::<BigInt>()
        });
        values.push(partials.into_iter().sum());
    }
    Ok(MomentSequence::from_values(values))
}

/// Polynomial-time moment-to-cumulant recursion, no lattice enumeration:
/// with m_0 = 1 and A(s, t) = sum over i_1+...+i_s = t of m_(i_1)...m_(i_s),
/// solve m_n = sum over s of k_s * A(s, n-s) for k_n. Produces exactly the
/// values of [`moments_to_cumulants`] wherever both run.
pub fn moments_to_cumulants_fast(m: &MomentSequence, max_order: usize) -> Result<CumulantSequence> {
    check_sequence_length(m.len(), max_order)?;
    if max_order == 0 {
        return Ok(CumulantSequence::from_values(Vec::new()));
    }
    // extended[t] = m_t with m_0 = 1
    let mut extended = Vec::with_capacity(max_order);
    extended.push(BigInt::one());
    extended.extend(m.values()[..max_order - 1].iter().cloned());
    // compositions[s][t] = A(s, t), built by one convolution per row
    let mut compositions = vec![vec![BigInt::zero(); max_order]; max_order + 1];
    compositions[0][0] = BigInt::one();
    for s in 1..=max_order {
        for t in 0..max_order {
            let mut total = BigInt::zero();
            for i in 0..=t {
                if !compositions[s - 1][t - i].is_zero() {
                    total += &extended[i] * &compositions[s - 1][t - i];
                }
            }
            compositions[s][t] = total;
        }
    }
    let mut cumulants: Vec<BigInt> = Vec::with_capacity(max_order);
    for n in 1..=max_order {
        let mut value = m.get(n).expect("length checked").clone();
        for (s, k_s) in cumulants.iter().enumerate().map(|(i, k)| (i + 1, k)) {
            if !k_s.is_zero() {
                value -= k_s * &compositions[s][n - s];
            }
        }
        cumulants.push(value);
    }
    Ok(CumulantSequence::from_values(cumulants))
}

/// R-transform coefficients of G up to z^max_order. Odd coefficients are
/// zero. Even coefficients come from the double sum over even noncrossing
/// partitions grouped by block type,
///
/// ```text
/// a_2n = sum over types (l_1, ..., l_p) summing to 2n of
///        (m_(l_1) * ... * m_(l_p)) * (sum of mu(pi, 1_2n) over pi of that type)
/// ```
///
/// when max_order is within the lattice limit, and from the fast recursion on
/// the moment sequence otherwise; the returned tag names the path taken.
pub fn r_transform(
    params: GroupParameter,
    max_order: usize,
    opts: &TransformOptions,
) -> Result<(FormalSeries, RTransformMethod)> {
    if max_order > opts.lattice_limit {
        let m = moment_sequence(params, max_order);
        let k = moments_to_cumulants_fast(&m, max_order)?;
        return Ok((
            FormalSeries::from_coefficients(k.values().to_vec()),
            RTransformMethod::Recursion,
        ));
    }
    let m = moment_sequence(params, max_order);
    let mut coefficients = vec![BigInt::zero(); max_order];
    for n in 1..=max_order / 2 {
        let lattice = enumerate_even_nc(2 * n)?;
        // mu summed per block-size type, merged across chunks in order
        let partials = fold_chunks(&lattice, opts.threads, |chunk| {
            let mut by_type: BTreeMap<Vec<usize>, BigInt> = BTreeMap::new();
            for pi in chunk {
                *by_type.entry(pi.block_sizes()).or_default() += mobius_to_top(pi);
            }
            by_type
        });
        let mut mu_by_type: BTreeMap<Vec<usize>, BigInt> = BTreeMap::new();
        for partial in partials {
            for (t, mu) in partial {
                *mu_by_type.entry(t).or_default() += mu;
            }
        }
        let mut alpha = BigInt::zero();
        for (t, mu) in mu_by_type {
            let weight: BigInt = t
                .iter()
                .map(|&l| m.get(l).expect("block size within computed moments"))
                .product();
            alpha += weight * mu;
        }
        coefficients[2 * n - 1] = alpha;
    }
    Ok((
        FormalSeries::from_coefficients(coefficients),
        RTransformMethod::Lattice,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::nc::catalan;
    use proptest::prelude::*;

    fn params(n: usize) -> GroupParameter {
        GroupParameter::new(n).unwrap()
    }

    fn seq(values: &[i64]) -> Vec<BigInt> {
        values.iter().map(|&v| BigInt::from(v)).collect()
    }

    fn nc(n: usize, blocks: &[&[usize]]) -> NoncrossingPartition {
        NoncrossingPartition::from_blocks(n, blocks.iter().map(|b| b.to_vec()).collect()).unwrap()
    }

    #[test]
    fn partition_moment_fixtures() {
        let m = MomentSequence::from_values(seq(&[0, 4, 0, 28]));
        assert_eq!(
            partition_moment(&NoncrossingPartition::full(4), &m).unwrap(),
            BigInt::from(28)
        );
        assert_eq!(
            partition_moment(&nc(4, &[&[1, 2], &[3, 4]]), &m).unwrap(),
            BigInt::from(16)
        );
        let ones = MomentSequence::from_values(seq(&[1, 2, 3]));
        assert_eq!(
            partition_moment(&NoncrossingPartition::singletons(3), &ones).unwrap(),
            BigInt::one()
        );
        assert!(matches!(
            partition_moment(&NoncrossingPartition::full(5), &m),
            Err(Error::InsufficientMoments {
                needed: 5,
                available: 4
            })
        ));
    }

    #[test]
    fn partition_cumulant_fixtures() {
        let k = CumulantSequence::from_values(seq(&[0, 7]));
        assert_eq!(
            partition_cumulant(&nc(4, &[&[1, 4], &[2, 3]]), &k).unwrap(),
            BigInt::from(49)
        );
        let k4 = CumulantSequence::from_values(seq(&[0, 4]));
        assert_eq!(
            partition_cumulant(&nc(6, &[&[1, 2], &[3, 4], &[5, 6]]), &k4).unwrap(),
            BigInt::from(64)
        );
    }

    #[test]
    fn cumulants_of_g_via_lattice() {
        let opts = TransformOptions::default();
        let m = moment_sequence(params(2), 8);
        let k = moments_to_cumulants(&m, 8, &opts).unwrap();
        assert_eq!(k.values(), seq(&[0, 4, 0, -4, 0, 8, 0, -20]).as_slice());
    }

    #[test]
    fn all_ones_moments_have_single_cumulant() {
        let opts = TransformOptions::default();
        let m = MomentSequence::from_values(seq(&[1, 1, 1, 1, 1, 1]));
        let k = moments_to_cumulants(&m, 6, &opts).unwrap();
        assert_eq!(k.values(), seq(&[1, 0, 0, 0, 0, 0]).as_slice());
        assert_eq!(cumulants_to_moments(&k, 6, &opts).unwrap(), m);
    }

    #[test]
    fn moments_from_cumulants_fixtures() {
        let opts = TransformOptions::default();
        let k = CumulantSequence::from_values(seq(&[0, 4, 0, -4, 0, 8]));
        let m = cumulants_to_moments(&k, 6, &opts).unwrap();
        assert_eq!(m.values(), seq(&[0, 4, 0, 28, 0, 232]).as_slice());

        // semicircular: k_2 = 1 alone gives the Catalan moments
        let mut semi = vec![BigInt::zero(); 10];
        semi[1] = BigInt::one();
        let m = cumulants_to_moments(&CumulantSequence::from_values(semi), 10, &opts).unwrap();
        for n in 1..=10usize {
            let expected = if n % 2 == 0 {
                catalan(n / 2)
            } else {
                BigInt::zero()
            };
            assert_eq!(m.get(n).unwrap(), &expected, "at n={n}");
        }

        let single = CumulantSequence::from_values(seq(&[9]));
        assert_eq!(
            cumulants_to_moments(&single, 1, &opts).unwrap().values(),
            seq(&[9]).as_slice()
        );
    }

    #[test]
    fn fast_recursion_matches_lattice() {
        let opts = TransformOptions::default();
        for n in 1..=3 {
            let m = moment_sequence(params(n), 8);
            assert_eq!(
                moments_to_cumulants_fast(&m, 8).unwrap(),
                moments_to_cumulants(&m, 8, &opts).unwrap()
            );
        }
        let arbitrary = MomentSequence::from_values(seq(&[3, -1, 4, 1, -5, 9, 2, -6]));
        assert_eq!(
            moments_to_cumulants_fast(&arbitrary, 8).unwrap(),
            moments_to_cumulants(&arbitrary, 8, &opts).unwrap()
        );
        let m2 = MomentSequence::from_values(seq(&[0, 6]));
        assert_eq!(
            moments_to_cumulants_fast(&m2, 2).unwrap().values(),
            seq(&[0, 6]).as_slice()
        );
    }

    #[test]
    fn lattice_path_rejects_orders_beyond_limit() {
        let opts = TransformOptions {
            lattice_limit: 6,
            threads: 1,
        };
        let m = moment_sequence(params(2), 8);
        assert!(matches!(
            moments_to_cumulants(&m, 8, &opts),
            Err(Error::SizeTooLarge { size: 8, limit: 6 })
        ));
        assert!(matches!(
            moments_to_cumulants(&m, 10, &TransformOptions::default()),
            Err(Error::InsufficientMoments {
                needed: 10,
                available: 8
            })
        ));
    }

    #[test]
    fn r_transform_of_g() {
        let opts = TransformOptions::default();
        let (series, method) = r_transform(params(2), 6, &opts).unwrap();
        assert_eq!(method, RTransformMethod::Lattice);
        assert_eq!(series.coefficients(), seq(&[0, 4, 0, -4, 0, 8]).as_slice());
        let (series8, _) = r_transform(params(2), 8, &opts).unwrap();
        assert_eq!(*series8.coefficient(8).unwrap(), BigInt::from(-20));
    }

    #[test]
    fn r_transform_switches_method_beyond_limit() {
        let opts = TransformOptions::default();
        let (series, method) = r_transform(params(2), 14, &opts).unwrap();
        assert_eq!(method, RTransformMethod::Recursion);
        // overlap with the lattice range agrees
        let (lattice, _) = r_transform(params(2), 12, &opts).unwrap();
        assert_eq!(&series.coefficients()[..12], lattice.coefficients());
        assert!(series.is_even());
    }

    #[test]
    fn r_transform_closed_form() {
        let opts = TransformOptions::default();
        for n_gen in 1..=3 {
            let p = params(n_gen);
            let (series, _) = r_transform(p, 12, &opts).unwrap();
            for n in 1..=6usize {
                let magnitude = p.degree_big() * catalan(n - 1);
                let expected = if n % 2 == 1 { magnitude } else { -magnitude };
                assert_eq!(*series.coefficient(2 * n).unwrap(), expected);
            }
        }
    }

    #[test]
    fn even_restricted_sum_equals_full_inversion() {
        let opts = TransformOptions::default();
        for n_gen in 1..=3 {
            let p = params(n_gen);
            let (series, _) = r_transform(p, 10, &opts).unwrap();
            let m = moment_sequence(p, 10);
            let k = moments_to_cumulants(&m, 10, &opts).unwrap();
            for order in 1..=10usize {
                assert_eq!(series.coefficient(order).unwrap(), k.get(order).unwrap());
            }
        }
    }

    #[test]
    fn threaded_fold_is_identical() {
        let sequential = TransformOptions::default();
        let threaded = TransformOptions {
            threads: 4,
            ..TransformOptions::default()
        };
        let m = moment_sequence(params(2), 8);
        assert_eq!(
            moments_to_cumulants(&m, 8, &sequential).unwrap(),
            moments_to_cumulants(&m, 8, &threaded).unwrap()
        );
        assert_eq!(
            r_transform(params(3), 10, &sequential).unwrap().0,
            r_transform(params(3), 10, &threaded).unwrap().0
        );
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(32))]

        #[test]
        fn round_trip_is_identity(values in prop::collection::vec(-50i64..=50, 8)) {
            let opts = TransformOptions::default();
            let m = MomentSequence::from_values(seq(&values));
            let k = moments_to_cumulants(&m, 8, &opts).unwrap();
            prop_assert_eq!(cumulants_to_moments(&k, 8, &opts).unwrap(), m.clone());
            // and the fast path agrees with the lattice path
            prop_assert_eq!(moments_to_cumulants_fast(&m, 8).unwrap(), k);
        }
    }
}
