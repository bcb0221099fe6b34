//! Noncrossing-partition combinatorics: enumeration of NC(n), even and
//! block-type-restricted subfamilies, the Kreweras complement, and the
//! Möbius function mu(pi, 1_n) of the refinement order, by two independent
//! algorithms (a product formula in production, the defining recursion as a
//! cross-check).

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Largest ground-set size accepted by the enumeration operations.
/// |NC(13)| = 742900 partitions; beyond that, materializing the lattice is
/// no longer reasonable.
pub const ENUMERATION_LIMIT: usize = 13;

/// Largest ground-set size accepted by [`mobius_recursive`], which solves the
/// defining recursion over the whole interval [pi, 1_n].
pub const MOBIUS_RECURSION_LIMIT: usize = 9;

/// The n-th Catalan number, binom(2n, n) / (n + 1), exactly.
pub fn catalan(n: usize) -> BigInt {
    let mut c = BigInt::one();
    for k in 0..n {
        c = c * (2 * (2 * k as u64 + 1)) / (k as u64 + 2);
    }
    c
}

/// A noncrossing set partition of {1, ..., n} in canonical form: each block
/// strictly increasing, blocks ordered by minimum element.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NoncrossingPartition {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

impl NoncrossingPartition {
    /// Builds a partition from its blocks, validating that they partition
    /// {1, ..., n} and are noncrossing; blocks are brought to canonical form.
    pub fn from_blocks(n: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        let blocks = normalize_blocks(n, blocks)?;
        if !blocks_are_noncrossing(n, &blocks) {
            return Err(Error::InvalidPartition(
                "blocks cross each other".to_string(),
            ));
        }
        Ok(NoncrossingPartition { n, blocks })
    }

    /// The one-block partition 1_n.
    pub fn full(n: usize) -> Self {
        NoncrossingPartition {
            n,
            blocks: vec![(1..=n).collect()],
        }
    }

    /// The all-singletons partition 0_n.
    pub fn singletons(n: usize) -> Self {
        NoncrossingPartition {
            n,
            blocks: (1..=n).map(|x| vec![x]).collect(),
        }
    }

    pub fn ground_size(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    /// Multiset of block sizes, sorted ascending.
    pub fn block_sizes(&self) -> Vec<usize> {
        let mut sizes: Vec<usize> = self.blocks.iter().map(|b| b.len()).collect();
        sizes.sort_unstable();
        sizes
    }

    /// True iff every block has even size.
    pub fn is_even(&self) -> bool {
        self.blocks.iter().all(|b| b.len() % 2 == 0)
    }

    /// block_of[x] = index into blocks() of the block containing x.
    fn block_index_of_element(&self) -> Vec<usize> {
        let mut id = vec![usize::MAX; self.n + 1];
        for (bi, block) in self.blocks.iter().enumerate() {
            for &x in block {
                id[x] = bi;
            }
        }
        id
    }
}

impl fmt::Display for NoncrossingPartition {
    /// Canonical textual form, e.g. "{1,2}{3,4}".
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for block in &self.blocks {
            write!(f, "{{")?;
            for (i, x) in block.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, "}}")?;
        }
        Ok(())
    }
}

/// A multiset of positive even integers: the block-size type of an
/// even noncrossing partition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockTypeMultiset {
    /// sorted ascending
    parts: Vec<usize>,
}

impl BlockTypeMultiset {
    pub fn from_parts(mut parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidBlockType("no parts given".to_string()));
        }
        for &p in &parts {
            if p == 0 || p % 2 != 0 {
                return Err(Error::InvalidBlockType(format!(
                    "part {p} is not a positive even integer"
                )));
            }
        }
        parts.sort_unstable();
        Ok(BlockTypeMultiset { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn sum(&self) -> usize {
        self.parts.iter().sum()
    }
}

impl fmt::Display for BlockTypeMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

/// Sorts blocks into canonical form and checks that they partition {1..n}.
fn normalize_blocks(n: usize, mut blocks: Vec<Vec<usize>>) -> Result<Vec<Vec<usize>>> {
    if n == 0 {
        return Err(Error::InvalidPartition(
            "ground-set size must be at least 1".to_string(),
        ));
    }
    let mut seen = vec![false; n + 1];
    let mut count = 0usize;
    for block in &mut blocks {
        if block.is_empty() {
            return Err(Error::InvalidPartition("empty block".to_string()));
        }
        block.sort_unstable();
        for &x in block.iter() {
            if x == 0 || x > n {
                return Err(Error::InvalidPartition(format!(
                    "element {x} outside 1..={n}"
                )));
            }
            if seen[x] {
                return Err(Error::InvalidPartition(format!(
                    "element {x} appears twice"
                )));
            }
            seen[x] = true;
            count += 1;
        }
    }
    if count != n {
        return Err(Error::InvalidPartition(format!(
            "blocks cover {count} of {n} elements"
        )));
    }
    blocks.sort();
    Ok(blocks)
}

/// Bracket-matching scan: walking 1..n, a block may only continue when it is
/// the most recently opened unfinished block.
fn blocks_are_noncrossing(n: usize, blocks: &[Vec<usize>]) -> bool {
    let mut id = vec![usize::MAX; n + 1];
    for (bi, block) in blocks.iter().enumerate() {
        for &x in block {
            id[x] = bi;
        }
    }
    let mut stack: Vec<usize> = Vec::new();
    for (x, &b) in id.iter().enumerate().skip(1) {
        let first = blocks[b][0] == x;
        let last = *blocks[b].last().unwrap() == x;
        if first {
            if !last {
                stack.push(b);
            }
        } else {
            if stack.last() != Some(&b) {
                return false;
            }
            if last {
                stack.pop();
            }
        }
    }
    true
}

/// Membership test for NC(n): true iff the given blocks partition {1..n}
/// without crossings.
pub fn is_noncrossing(n: usize, blocks: &[Vec<usize>]) -> Result<bool> {
    let blocks = normalize_blocks(n, blocks.to_vec())?;
    Ok(blocks_are_noncrossing(n, &blocks))
}

/// Whether pi refines sigma: every block of pi lies inside a block of sigma.
pub fn leq(pi: &NoncrossingPartition, sigma: &NoncrossingPartition) -> Result<bool> {
    if pi.ground_size() != sigma.ground_size() {
        return Err(Error::IncompatiblePartitions {
            left: pi.ground_size(),
            right: sigma.ground_size(),
        });
    }
    let id = sigma.block_index_of_element();
    Ok(pi
        .blocks()
        .iter()
        .all(|block| block.iter().all(|&x| id[x] == id[block[0]])))
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum SizeFilter {
    All,
    EvenOnly,
}

/// Recursive gap construction: choose the block of the segment's minimum as
/// the minimum plus any subset of the rest; the chosen elements split the
/// remaining points into independent gaps, each partitioned recursively.
fn generate(
    pending: &mut Vec<Vec<usize>>,
    blocks: &mut Vec<Vec<usize>>,
    filter: SizeFilter,
    n: usize,
    out: &mut Vec<NoncrossingPartition>,
) {
    let segment = match pending.pop() {
        None => {
            let mut b = blocks.clone();
            b.sort();
            out.push(NoncrossingPartition { n, blocks: b });
            return;
        }
        Some(seg) => seg,
    };
    let rest = &segment[1..];
    'subset: for mask in 0u32..(1u32 << rest.len()) {
        let mut block = vec![segment[0]];
        for (i, &x) in rest.iter().enumerate() {
            if mask >> i & 1 == 1 {
                block.push(x);
            }
        }
        if filter == SizeFilter::EvenOnly && block.len() % 2 != 0 {
            continue;
        }
        // gaps between consecutive chosen elements, plus the tail; only
        // nonempty gaps need partitioning, so empty ones are never queued
        let mut gaps: Vec<Vec<usize>> = Vec::new();
        let mut block_pos = 0usize;
        let mut current: Vec<usize> = Vec::new();
        for &x in rest {
            if block_pos + 1 < block.len() && x == block[block_pos + 1] {
                block_pos += 1;
                if !current.is_empty() {
                    gaps.push(std::mem::take(&mut current));
                }
            } else {
                current.push(x);
            }
        }
        if !current.is_empty() {
            gaps.push(current);
        }
        if filter == SizeFilter::EvenOnly && gaps.iter().any(|g| g.len() % 2 != 0) {
            continue 'subset;
        }
        let pushed = gaps.len();
        pending.extend(gaps);
        blocks.push(block);
        generate(pending, blocks, filter, n, out);
        blocks.pop();
        pending.truncate(pending.len() - pushed);
    }
    pending.push(segment);
}

fn enumerate_with_filter(n: usize, filter: SizeFilter) -> Result<Vec<NoncrossingPartition>> {
    if n == 0 {
        return Err(Error::InvalidPartition(
            "ground-set size must be at least 1".to_string(),
        ));
    }
    if n > ENUMERATION_LIMIT {
        return Err(Error::SizeTooLarge {
            size: n,
            limit: ENUMERATION_LIMIT,
        });
    }
    let mut out = Vec::new();
    let mut pending = vec![(1..=n).collect::<Vec<usize>>()];
    let mut blocks = Vec::new();
    generate(&mut pending, &mut blocks, filter, n, &mut out);
    // deterministic public order: lexicographic on the canonical block form
    out.sort();
    Ok(out)
}

/// All of NC(n), in lexicographic order of the canonical block form.
pub fn enumerate_nc(n: usize) -> Result<Vec<NoncrossingPartition>> {
    enumerate_with_filter(n, SizeFilter::All)
}

/// The partitions in NC(n) with every block of even size, in the same
/// lexicographic order.
pub fn enumerate_even_nc(n: usize) -> Result<Vec<NoncrossingPartition>> {
    if !n.is_multiple_of(2) {
        return Err(Error::ParityError(n));
    }
    enumerate_with_filter(n, SizeFilter::EvenOnly)
}

/// The noncrossing partitions of {1..n} whose multiset of block sizes equals
/// the given type, in lexicographic order.
pub fn enumerate_by_block_type(
    n: usize,
    t: &BlockTypeMultiset,
) -> Result<Vec<NoncrossingPartition>> {
    if t.sum() != n {
        return Err(Error::BlockTypeMismatch {
            type_sum: t.sum(),
            size: n,
        });
    }
    Ok(enumerate_even_nc(n)?
        .into_iter()
        .filter(|pi| pi.block_sizes() == t.parts())
        .collect())
}

/// The Kreweras complement K(pi): the coarsest partition of the interleaved
/// points 1', ..., n' (relabeled back to 1..n) keeping pi union K(pi)
/// noncrossing. Computed by permutation composition: with sigma the
/// cycle-within-each-block permutation of pi and c the long cycle
/// x -> x mod n + 1, the blocks of K(pi) are the cycles of
/// x -> sigma_inverse(c(x)).
pub fn kreweras_complement(pi: &NoncrossingPartition) -> NoncrossingPartition {
    let n = pi.ground_size();
    let mut sigma = vec![0usize; n + 1];
    for block in pi.blocks() {
        for i in 0..block.len() {
            sigma[block[i]] = block[(i + 1) % block.len()];
        }
    }
    let mut sigma_inv = vec![0usize; n + 1];
    for x in 1..=n {
        sigma_inv[sigma[x]] = x;
    }
    let mut assigned = vec![false; n + 1];
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    for start in 1..=n {
        if assigned[start] {
            continue;
        }
        let mut cycle = Vec::new();
        let mut x = start;
        while !assigned[x] {
            assigned[x] = true;
            cycle.push(x);
            x = sigma_inv[x % n + 1];
        }
        cycle.sort_unstable();
        blocks.push(cycle);
    }
    blocks.sort();
    NoncrossingPartition { n, blocks }
}

/// mu(pi, 1_n) by the Kreweras product formula:
/// the product over blocks V of K(pi) of (-1)^(|V|-1) * catalan(|V|-1).
pub fn mobius_to_top(pi: &NoncrossingPartition) -> BigInt {
    let mut mu = BigInt::one();
    for block in kreweras_complement(pi).blocks() {
        let c = catalan(block.len() - 1);
        mu *= if (block.len() - 1) % 2 == 0 { c } else { -c };
    }
    mu
}

/// mu(pi, 1_n) by the defining recursion of the incidence algebra:
/// mu(1_n, 1_n) = 1 and the mu-values over any interval [pi, 1_n] sum to
/// zero, solved top-down over the enumerated interval. Independent of
/// [`mobius_to_top`]; exponentially slower, intended as a cross-check.
pub fn mobius_recursive(pi: &NoncrossingPartition) -> Result<BigInt> {
    let n = pi.ground_size();
    if n > MOBIUS_RECURSION_LIMIT {
        return Err(Error::SizeTooLarge {
            size: n,
            limit: MOBIUS_RECURSION_LIMIT,
        });
    }
    let interval: Vec<NoncrossingPartition> = enumerate_nc(n)?
        .into_iter()
        .filter(|sigma| leq(pi, sigma).expect("same ground size"))
        .collect();
    // strictly coarser means strictly fewer blocks, so ascending block count
    // processes every partition after all partitions above it
    let mut order: Vec<usize> = (0..interval.len()).collect();
    order.sort_by_key(|&i| interval[i].num_blocks());
    let mut mu = vec![BigInt::zero(); interval.len()];
    for (pos, &i) in order.iter().enumerate() {
        let sigma = &interval[i];
        let mut value = if sigma.num_blocks() == 1 {
            BigInt::one()
        } else {
            BigInt::zero()
        };
        for &j in &order[..pos] {
            if leq(sigma, &interval[j]).expect("same ground size") {
                value -= &mu[j];
            }
        }
        mu[i] = value;
    }
    let idx = interval
        .iter()
        .position(|sigma| sigma == pi)
        .expect("pi lies in its own interval");
    Ok(mu[idx].clone())
}
