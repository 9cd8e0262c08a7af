//! Partitions of fixed length, with trailing zeros kept.

use std::fmt;

use crate::error::{Error, Result};

/// A weakly decreasing sequence of nonnegative integers.
///
/// The length is part of the value: `(2,0)` and `(2)` are different
/// partitions because flips and dualities depend on the number of rows.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition(parts))
    }

    pub fn zero(len: usize) -> Self {
        Partition(vec![0; len])
    }

    pub fn rectangle(rows: usize, width: usize) -> Self {
        Partition(vec![width; rows])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Largest part, 0 for the empty partition.
    pub fn width(&self) -> usize {
        self.0.first().copied().unwrap_or(0)
    }

    /// Number of nonzero parts.
    pub fn nonzero_len(&self) -> usize {
        self.0.iter().take_while(|&&p| p > 0).count()
    }

    pub fn get(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn trimmed(&self) -> Partition {
        Partition(self.0[..self.nonzero_len()].to_vec())
    }

    /// Pads with zeros (or drops trailing zeros) to exactly `len` parts.
    pub fn with_len(&self, len: usize) -> Result<Partition> {
        if self.nonzero_len() > len {
            return Err(Error::InvalidPartition(format!("{self} has more than {len} nonzero parts")));
        }
        let mut p = self.0.clone();
        p.resize(len, 0);
        Ok(Partition(p))
    }

    /// Transpose of the diagram, with as many parts as the first row is long.
    pub fn conjugate(&self) -> Partition {
        let w = self.width();
        Partition((1..=w).map(|c| self.0.iter().filter(|&&p| p >= c).count()).collect())
    }

    pub fn contains(&self, other: &Partition) -> bool {
        (0..other.len().max(self.len())).all(|i| self.get(i) >= other.get(i))
    }

    /// `(k - mu_r, ..., k - mu_1)`.
    pub fn dual(&self, k: usize) -> Result<Partition> {
        if self.width() > k {
            return Err(Error::InvalidPartition(format!("{self} does not fit in width {k}")));
        }
        Ok(Partition(self.0.iter().rev().map(|&p| k - p).collect()))
    }

    /// Conjugate of `(m - mu_r, ..., m - mu_1)`, returned with `m` parts.
    ///
    /// Applying `flip(_, r)` to the result recovers a length-`r` input.
    pub fn flip(&self, m: usize) -> Result<Partition> {
        self.dual(m)?.conjugate().with_len(m)
    }

    pub fn is_rectangle(&self) -> bool {
        self.0.windows(2).all(|w| w[0] == w[1])
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// All partitions with exactly `len` parts, each at most `width`.
pub fn partitions_in_box(len: usize, width: usize) -> Vec<Partition> {
    fn rec(len: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if cur.len() == len {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (0..=max).rev() {
            cur.push(p);
            rec(len, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(len, width, &mut Vec::new(), &mut out);
    out
}

/// Partitions of `size` with at most `len` parts, padded to `len`.
pub fn partitions_of(size: usize, len: usize) -> Vec<Partition> {
    fn rec(rem: usize, len: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if cur.len() == len {
            if rem == 0 {
                out.push(Partition(cur.clone()));
            }
            return;
        }
        let slots = len - cur.len();
        for p in (0..=max.min(rem)).rev() {
            if p * slots < rem {
                break;
            }
            cur.push(p);
            rec(rem - p, len, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(size, len, size, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
        assert_eq!(p(&[]).conjugate(), p(&[]));
        assert_eq!(p(&[2, 2]).conjugate(), p(&[2, 2]));
    }

    #[test]
    fn flip_examples() {
        assert_eq!(p(&[0, 0, 0]).flip(4).unwrap(), p(&[3, 3, 3, 3]));
        assert_eq!(p(&[2, 0]).flip(2).unwrap(), p(&[1, 1]));
        assert!(p(&[3]).flip(2).is_err());
    }

    #[test]
    fn flip_is_an_involution_with_swapped_widths() {
        for r in 0..=3 {
            for m in 0..=4 {
                for mu in partitions_in_box(r, m) {
                    let lam = mu.flip(m).unwrap();
                    assert_eq!(lam.len(), m);
                    assert!(lam.width() <= r);
                    assert_eq!(lam.flip(r).unwrap(), mu);
                }
            }
        }
    }

    #[test]
    fn dual_example() {
        assert_eq!(p(&[3, 1, 0]).dual(3).unwrap(), p(&[3, 2, 0]));
    }

    #[test]
    fn rejects_increasing() {
        assert!(Partition::new(vec![1, 2]).is_err());
    }

    #[test]
    fn enumeration_counts() {
        // binomial(len + width, len)
        assert_eq!(partitions_in_box(2, 2).len(), 6);
        assert_eq!(partitions_in_box(3, 4).len(), 35);
        assert_eq!(partitions_of(4, 4).len(), 5);
        assert_eq!(partitions_of(4, 2).len(), 3);
    }
}
