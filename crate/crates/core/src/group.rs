use num_bigint::BigInt;

use crate::error::{Error, Result};

/// The number of free generators N, together with the two constants every
/// recurrence in this crate is built from: the Cayley-graph degree 2N and
/// the branching factor 2N - 1 of the tree away from the root.
///
/// N = 1 is allowed (the group is the integers); all recurrences hold
/// verbatim there even though the operator-algebraic setting needs N >= 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GroupParameter {
    n_generators: usize,
}

impl GroupParameter {
    pub fn new(n_generators: usize) -> Result<Self> {
        if n_generators == 0 {
            return Err(Error::InvalidGeneratorCount);
        }
        Ok(GroupParameter { n_generators })
    }

    pub fn n_generators(self) -> usize {
        self.n_generators
    }

    /// 2N: the number of letters, and the degree of every Cayley-graph vertex.
    pub fn degree(self) -> usize {
        2 * self.n_generators
    }

    /// 2N - 1: the number of neighbours leading away from the root.
    pub fn branching(self) -> usize {
        2 * self.n_generators - 1
    }

    pub fn degree_big(self) -> BigInt {
        BigInt::from(self.degree())
    }

    pub fn branching_big(self) -> BigInt {
        BigInt::from(self.branching())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_zero_generators() {
        assert_eq!(GroupParameter::new(0), Err(Error::InvalidGeneratorCount));
    }

    #[test]
    fn derived_constants() {
        let p = GroupParameter::new(2).unwrap();
        assert_eq!(p.degree(), 4);
        assert_eq!(p.branching(), 3);
        let p1 = GroupParameter::new(1).unwrap();
        assert_eq!(p1.degree(), 2);
        assert_eq!(p1.branching(), 1);
    }
}
