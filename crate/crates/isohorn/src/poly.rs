//! Sparse polynomials in `ε_1, ..., ε_n` with exact rational coefficients.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::weyl::{BcType, MAX_RANK};

pub type Exponent = [u8; MAX_RANK];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiPoly {
    n: usize,
    terms: BTreeMap<Exponent, BigRational>,
}

fn mono(exps: &[u8]) -> Exponent {
    let mut e = [0u8; MAX_RANK];
    e[..exps.len()].copy_from_slice(exps);
    e
}

impl MultiPoly {
    pub fn zero(n: usize) -> Self {
        assert!(n <= MAX_RANK, "rank {n} above {MAX_RANK}");
        MultiPoly { n, terms: BTreeMap::new() }
    }

    pub fn constant(n: usize, c: BigRational) -> Self {
        let mut p = MultiPoly::zero(n);
        p.add_term([0; MAX_RANK], c);
        p
    }

    pub fn one(n: usize) -> Self {
        MultiPoly::constant(n, BigRational::one())
    }

    /// `ε_i`, 1-based.
    pub fn var(n: usize, i: usize) -> Self {
        let mut e = [0u8; MAX_RANK];
        e[i - 1] = 1;
        let mut p = MultiPoly::zero(n);
        p.add_term(e, BigRational::one());
        p
    }

    pub fn monomial(n: usize, exps: &[u8], c: BigRational) -> Self {
        let mut p = MultiPoly::zero(n);
        p.add_term(mono(exps), c);
        p
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u8], &BigRational)> {
        self.terms.iter().map(move |(e, c)| (&e[..self.n], c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, e: Exponent, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Total degree of the leading part; `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(|e| e.iter().map(|&x| x as usize).sum()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut d = self.terms.keys().map(|e| e.iter().map(|&x| x as usize).sum::<usize>());
        match d.next() {
            None => true,
            Some(first) => d.all(|x| x == first),
        }
    }

    pub fn homogeneous_part(&self, deg: usize) -> MultiPoly {
        MultiPoly {
            n: self.n,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.iter().map(|&x| x as usize).sum::<usize>() == deg)
                .map(|(e, c)| (*e, c.clone()))
                .collect(),
        }
    }

    pub fn constant_term(&self) -> BigRational {
        self.terms.get(&[0; MAX_RANK]).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn add(&self, other: &MultiPoly) -> MultiPoly {
        let mut p = self.clone();
        for (e, c) in &other.terms {
            p.add_term(*e, c.clone());
        }
        p
    }

    pub fn sub(&self, other: &MultiPoly) -> MultiPoly {
        let mut p = self.clone();
        for (e, c) in &other.terms {
            p.add_term(*e, -c.clone());
        }
        p
    }

    pub fn scale(&self, k: &BigRational) -> MultiPoly {
        let mut p = MultiPoly::zero(self.n);
        for (e, c) in &self.terms {
            p.add_term(*e, c * k);
        }
        p
    }

    pub fn mul(&self, other: &MultiPoly) -> MultiPoly {
        let mut p = MultiPoly::zero(self.n);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let mut e = [0u8; MAX_RANK];
                for k in 0..MAX_RANK {
                    e[k] = e1[k] + e2[k];
                }
                p.add_term(e, c1 * c2);
            }
        }
        p
    }

    pub fn pow(&self, k: u32) -> MultiPoly {
        (0..k).fold(MultiPoly::one(self.n), |acc, _| acc.mul(self))
    }

    /// `s_i f`: swap `ε_i, ε_{i+1}` for `i < n`, negate `ε_n` for `i = n`.
    pub fn reflect(&self, i: usize) -> MultiPoly {
        let n = self.n;
        let mut p = MultiPoly::zero(n);
        for (e, c) in &self.terms {
            let mut f = *e;
            if i < n {
                f.swap(i - 1, i);
                p.add_term(f, c.clone());
            } else if e[n - 1] % 2 == 1 {
                p.add_term(f, -c.clone());
            } else {
                p.add_term(f, c.clone());
            }
        }
        p
    }

    /// `(f - s_i f) / α_i` with the simple roots of the given type.
    pub fn divided_difference(&self, i: usize, ty: BcType) -> MultiPoly {
        let n = self.n;
        assert!(i >= 1 && i <= n, "simple root {i} outside 1..={n}");
        let mut p = MultiPoly::zero(n);
        for (e, c) in &self.terms {
            if i < n {
                let (a, b) = (e[i - 1], e[i]);
                if a == b {
                    continue;
                }
                let (lo, hi, sign) = if a > b { (b, a, 1) } else { (a, b, -1) };
                let c = if sign > 0 { c.clone() } else { -c.clone() };
                for k in 0..hi - lo {
                    let mut f = *e;
                    // a > b: x^(a-1-k) y^(b+k); a < b: the mirror image
                    if a > b {
                        f[i - 1] = hi - 1 - k;
                        f[i] = lo + k;
                    } else {
                        f[i - 1] = lo + k;
                        f[i] = hi - 1 - k;
                    }
                    p.add_term(f, c.clone());
                }
            } else {
                let a = e[n - 1];
                if a % 2 == 0 {
                    continue;
                }
                let mut f = *e;
                f[n - 1] = a - 1;
                match ty {
                    BcType::C => p.add_term(f, c.clone()),
                    BcType::B => p.add_term(f, c * BigRational::from_integer(2.into())),
                }
            }
        }
        p
    }

    /// The simple root `α_i` as a linear form.
    pub fn simple_root(n: usize, i: usize, ty: BcType) -> MultiPoly {
        if i < n {
            MultiPoly::var(n, i).sub(&MultiPoly::var(n, i + 1))
        } else {
            match ty {
                BcType::C => MultiPoly::var(n, n).scale(&BigRational::from_integer(2.into())),
                BcType::B => MultiPoly::var(n, n),
            }
        }
    }

    /// Every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    pub fn max_abs_coefficient(&self) -> BigRational {
        self.terms.values().map(|c| c.abs()).max().unwrap_or_else(BigRational::zero)
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms.iter().rev().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}")?;
            for (i, &x) in e[..self.n].iter().enumerate() {
                match x {
                    0 => {}
                    1 => write!(f, "*e{}", i + 1)?,
                    _ => write!(f, "*e{}^{}", i + 1, x)?,
                }
            }
        }
        Ok(())
    }
}

pub fn int(k: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(k))
}
