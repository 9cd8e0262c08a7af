//! Textual forms used on the command line.
//!
//! * index lists: `[2,4] [1,3]`
//! * partition lists: `2,1 1,1,0` or `(2,1) ()`
//! * rational vectors and weights: `(1,1/2) (0,0)`
//! * groups: `SL4`, `Sp4`, `SO5`, `Spin5` (by matrix size, parentheses allowed)

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::weight::{Group, Weight};

const MAX_LITERAL: usize = 1 << 16;

fn groups(s: &str, open: char, close: char) -> Result<Vec<&str>> {
    if s.len() > MAX_LITERAL {
        return Err(Error::Parse("literal too long".into()));
    }
    let mut out = Vec::new();
    let mut rest = s.trim();
    while !rest.is_empty() {
        let body = rest
            .strip_prefix(open)
            .ok_or_else(|| Error::Parse(format!("expected '{open}' at {rest:?}")))?;
        let end = body.find(close).ok_or_else(|| Error::Parse(format!("missing '{close}'")))?;
        let inner = &body[..end];
        if inner.contains(open) {
            return Err(Error::Parse(format!("nested '{open}'")));
        }
        out.push(inner);
        rest = body[end + 1..].trim_start();
    }
    Ok(out)
}

fn items(inner: &str) -> impl Iterator<Item = &str> {
    inner.split(',').map(str::trim).filter(|t| !t.is_empty())
}

fn parse_usize(t: &str) -> Result<usize> {
    if t.len() > 6 || !t.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::Parse(format!("bad integer {t:?}")));
    }
    t.parse().map_err(|_| Error::Parse(format!("bad integer {t:?}")))
}

/// `[2,4] [1,3]` as raw integer lists; validation is left to the index types.
pub fn parse_index_list(s: &str) -> Result<Vec<Vec<usize>>> {
    let out: Vec<Vec<usize>> =
        groups(s, '[', ']')?.into_iter().map(|g| items(g).map(parse_usize).collect()).collect::<Result<_>>()?;
    if out.is_empty() {
        return Err(Error::Parse("no indices given".into()));
    }
    Ok(out)
}

pub fn parse_partition(s: &str) -> Result<Partition> {
    let t = s.trim();
    let t = t.strip_prefix('(').and_then(|u| u.strip_suffix(')')).unwrap_or(t);
    Partition::new(items(t).map(parse_usize).collect::<Result<_>>()?)
}

/// Whitespace-separated partitions; parentheses are optional.
pub fn parse_partition_list(s: &str) -> Result<Vec<Partition>> {
    if s.len() > MAX_LITERAL {
        return Err(Error::Parse("literal too long".into()));
    }
    let t = s.trim();
    let out: Vec<Partition> = if t.starts_with('(') {
        groups(t, '(', ')')?.into_iter().map(parse_partition).collect::<Result<_>>()?
    } else {
        t.split_whitespace().map(parse_partition).collect::<Result<_>>()?
    };
    if out.is_empty() {
        return Err(Error::Parse("no partitions given".into()));
    }
    Ok(out)
}

pub fn parse_rational(t: &str) -> Result<BigRational> {
    let t = t.trim();
    let bad = || Error::Parse(format!("bad rational {t:?}"));
    let int = |u: &str| -> Result<BigInt> {
        let digits = u.strip_prefix('-').unwrap_or(u);
        if digits.is_empty() || digits.len() > 40 || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        u.parse().map_err(|_| bad())
    };
    match t.split_once('/') {
        Some((a, b)) => {
            let d = int(b)?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(int(a)?, d))
        }
        None => Ok(BigRational::from_integer(int(t)?)),
    }
}

/// `(1,1/2) (0,0)`; bare `1,1/2` is accepted for a single vector.
pub fn parse_rational_list(s: &str) -> Result<Vec<Vec<BigRational>>> {
    let t = s.trim();
    let parts = if t.starts_with('(') { groups(t, '(', ')')? } else { t.split_whitespace().collect() };
    let out: Vec<Vec<BigRational>> =
        parts.into_iter().map(|g| items(g).map(parse_rational).collect()).collect::<Result<_>>()?;
    if out.is_empty() {
        return Err(Error::Parse("no vectors given".into()));
    }
    Ok(out)
}

pub fn parse_weight_list(s: &str, group: Group) -> Result<Vec<Weight>> {
    parse_rational_list(s)?.into_iter().map(|c| Weight::new(group, c)).collect()
}

/// `SL4`, `Sp(4)`, `so5`, `Spin5`.
pub fn parse_group(s: &str) -> Result<Group> {
    let t: String = s.trim().chars().filter(|c| !matches!(c, '(' | ')' | ' ')).collect::<String>().to_lowercase();
    let split = t.find(|c: char| c.is_ascii_digit()).ok_or_else(|| Error::Parse(format!("no size in {s:?}")))?;
    let (name, size) = t.split_at(split);
    let size = parse_usize(size)?;
    let odd = |k: usize| -> Result<usize> {
        if k % 2 == 1 {
            Ok(k / 2)
        } else {
            Err(Error::Parse(format!("{name} needs an odd matrix size, got {k}")))
        }
    };
    let g = match name {
        "sl" | "su" => Group::SL(size),
        "sp" if size % 2 == 0 => Group::Sp(size / 2),
        "sp" => return Err(Error::Parse(format!("Sp needs an even matrix size, got {size}"))),
        "so" => Group::SO(odd(size)?),
        "spin" => Group::Spin(odd(size)?),
        _ => return Err(Error::Parse(format!("unknown group {s:?}"))),
    };
    if g.coords() == 0 {
        return Err(Error::Parse(format!("{s:?} is trivial")));
    }
    Ok(g)
}
