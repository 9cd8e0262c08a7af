//! Highest weights in epsilon coordinates.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// A compact group, named by matrix size.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Group {
    /// `SL(N)`, weights with `N` coordinates.
    SL(usize),
    /// `Sp(2n)`, rank `n`.
    Sp(usize),
    /// `SO(2n+1)`, rank `n`.
    SO(usize),
    /// `Spin(2n+1)`, rank `n`.
    Spin(usize),
}

impl Group {
    /// Number of epsilon coordinates.
    pub fn coords(&self) -> usize {
        match *self {
            Group::SL(n) | Group::Sp(n) | Group::SO(n) | Group::Spin(n) => n,
        }
    }

    pub fn rank(&self) -> usize {
        match *self {
            Group::SL(n) => n.saturating_sub(1),
            Group::Sp(n) | Group::SO(n) | Group::Spin(n) => n,
        }
    }

    /// Size of the defining matrices.
    pub fn matrix_size(&self) -> usize {
        match *self {
            Group::SL(n) => n,
            Group::Sp(n) => 2 * n,
            Group::SO(n) | Group::Spin(n) => 2 * n + 1,
        }
    }
}

impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Group::SL(n) => write!(f, "SL{n}"),
            Group::Sp(n) => write!(f, "Sp{}", 2 * n),
            Group::SO(n) => write!(f, "SO{}", 2 * n + 1),
            Group::Spin(n) => write!(f, "Spin{}", 2 * n + 1),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight {
    group: Group,
    coords: Vec<BigRational>,
}

fn is_integer(q: &BigRational) -> bool {
    q.is_integer()
}

fn is_half_odd(q: &BigRational) -> bool {
    !q.is_integer() && (q * BigRational::from_integer(2.into())).is_integer()
}

impl Weight {
    /// Builds a weight and checks that it lies in the group's weight lattice.
    pub fn new(group: Group, coords: Vec<BigRational>) -> Result<Self> {
        if coords.len() != group.coords() {
            return Err(Error::InvalidWeight(format!(
                "{group} expects {} coordinates, got {}",
                group.coords(),
                coords.len()
            )));
        }
        let ok = match group {
            Group::Spin(_) => coords.iter().all(is_integer) || coords.iter().all(is_half_odd),
            _ => coords.iter().all(is_integer),
        };
        if !ok {
            return Err(Error::InvalidWeight(format!("{coords:?} is not a {group} weight")));
        }
        Ok(Weight { group, coords })
    }

    pub fn from_ints(group: Group, coords: &[i64]) -> Result<Self> {
        Weight::new(group, coords.iter().map(|&c| BigRational::from_integer(c.into())).collect())
    }

    pub fn zero(group: Group) -> Self {
        Weight { group, coords: vec![BigRational::zero(); group.coords()] }
    }

    /// `ε_1 + ... + ε_i` (for `SL`, a column of height `i`).
    pub fn fundamental(group: Group, i: usize) -> Result<Self> {
        if i == 0 || i > group.coords() {
            return Err(Error::InvalidWeight(format!("no fundamental weight {i} for {group}")));
        }
        let c = (0..group.coords()).map(|k| if k < i { 1 } else { 0 }).collect::<Vec<i64>>();
        Weight::from_ints(group, &c)
    }

    pub fn group(&self) -> Group {
        self.group
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.coords
    }

    /// Pairings with the simple coroots.
    pub fn coroot_pairings(&self) -> Vec<BigRational> {
        let c = &self.coords;
        let k = c.len();
        let mut out: Vec<BigRational> = (0..k.saturating_sub(1)).map(|i| &c[i] - &c[i + 1]).collect();
        match self.group {
            Group::SL(_) => {}
            Group::Sp(_) => out.push(c[k - 1].clone()),
            Group::SO(_) | Group::Spin(_) => out.push(&c[k - 1] * BigRational::from_integer(2.into())),
        }
        out
    }

    pub fn is_dominant(&self) -> bool {
        self.coroot_pairings().iter().all(|p| !p.is_negative())
    }

    /// Twice the coordinates, as integers.
    pub fn doubled(&self) -> Vec<i64> {
        self.coords
            .iter()
            .map(|q| {
                let d = q * BigRational::from_integer(2.into());
                i64::try_from(d.to_integer()).expect("weight coordinate fits in i64")
            })
            .collect()
    }

    pub fn scaled(&self, k: i64) -> Weight {
        let f = BigRational::from_integer(k.into());
        Weight { group: self.group, coords: self.coords.iter().map(|c| c * &f).collect() }
    }

    /// For `SL(N)`: subtract the last coordinate so the weight ends in zero.
    pub fn normalized(&self) -> Weight {
        match self.group {
            Group::SL(_) if !self.coords.is_empty() => {
                let last = self.coords[self.coords.len() - 1].clone();
                Weight { group: self.group, coords: self.coords.iter().map(|c| c - &last).collect() }
            }
            _ => self.clone(),
        }
    }

    pub fn with_group(&self, group: Group) -> Result<Weight> {
        Weight::new(group, self.coords.clone())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            if c.denom().is_one() {
                write!(f, "{}", c.numer())?;
            } else {
                write!(f, "{}/{}", c.numer(), c.denom())?;
            }
        }
        write!(f, ")")
    }
}

/// Restriction of a dominant `SL(2n)` weight to `Sp(2n)`, or of an `SL(2n+1)`
/// weight to `SO(2n+1)`, in epsilon coordinates.
pub fn restrict_weight(lambda: &Weight) -> Result<Weight> {
    let Group::SL(size) = lambda.group() else {
        return Err(Error::InvalidWeight(format!("restriction needs an SL weight, got {}", lambda.group())));
    };
    if !lambda.is_dominant() {
        return Err(Error::InvalidWeight(format!("{lambda} is not dominant")));
    }
    let n = size / 2;
    let c = lambda.coords();
    let coords: Vec<BigRational> = (0..n).map(|i| &c[i] - &c[size - 1 - i]).collect();
    let group = if size % 2 == 0 { Group::Sp(n) } else { Group::SO(n) };
    Weight::new(group, coords)
}

pub fn rational(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn restriction_examples() {
        let w2 = Weight::fundamental(Group::SL(4), 2).unwrap();
        assert_eq!(restrict_weight(&w2).unwrap(), Weight::fundamental(Group::Sp(2), 2).unwrap());
        let w1 = Weight::fundamental(Group::SL(4), 1).unwrap();
        assert_eq!(restrict_weight(&w1).unwrap(), Weight::fundamental(Group::Sp(2), 1).unwrap());
        let w2 = Weight::fundamental(Group::SL(5), 2).unwrap();
        assert_eq!(restrict_weight(&w2).unwrap(), Weight::from_ints(Group::SO(2), &[1, 1]).unwrap());
    }

    #[test]
    fn restriction_pairs_like_the_folded_coroots() {
        // pairing of the restriction with a folded coroot equals the pairing of
        // the original weight with the sum of the two coroots it folds
        let lam = Weight::from_ints(Group::SL(6), &[5, 4, 4, 2, 1, 0]).unwrap();
        let p = lam.coroot_pairings();
        let res = restrict_weight(&lam).unwrap().coroot_pairings();
        for i in 0..2 {
            assert_eq!(res[i], &p[i] + &p[4 - i]);
        }
        assert_eq!(res[2], p[2].clone());
    }

    #[test]
    fn lattice_checks() {
        assert!(Weight::new(Group::Spin(2), vec![rational(1, 2), rational(1, 2)]).is_ok());
        assert!(Weight::new(Group::Spin(2), vec![rational(1, 2), rational(1, 1)]).is_err());
        assert!(Weight::new(Group::SO(2), vec![rational(1, 2), rational(1, 2)]).is_err());
        assert!(Weight::from_ints(Group::Sp(2), &[0, 1]).unwrap().coroot_pairings()[0] < BigRational::zero());
        assert!(restrict_weight(&Weight::from_ints(Group::SL(4), &[0, 1, 0, 0]).unwrap()).is_err());
    }
}
