//! Partitions, semistandard tableaux, Weyl dimensions and Schur polynomials.

mod schur;
mod tableau;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

pub use schur::{
    character_of, is_symmetric, schur_decompose, schur_poly, schur_poly_bialternant,
    schur_poly_tableaux,
};
pub use tableau::{ssyt_enumerate, Tableau};

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Partition> {
        if parts.contains(&0) {
            return Err(Error::Partition(format!("zero part in {parts:?}")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Partition(format!(
                "parts not weakly decreasing: {parts:?}"
            )));
        }
        Ok(Partition(parts))
    }

    /// Drops zeros and sorts; for internal construction from exponent vectors.
    pub fn from_exponents(exps: &[u32]) -> Partition {
        let mut v: Vec<u32> = exps.iter().copied().filter(|&e| e > 0).collect();
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition(v)
    }

    pub fn empty() -> Partition {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Number of nonzero parts.
    pub fn rows(&self) -> usize {
        self.0.len()
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Part `i` (0-based), zero beyond the length.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// Column lengths.
    pub fn conjugate(&self) -> Partition {
        let w = self.part(0);
        Partition(
            (1..=w)
                .map(|c| self.0.iter().filter(|&&p| p >= c).count() as u32)
                .collect(),
        )
    }

    /// Parts padded with zeros to length `d`.
    pub fn padded(&self, d: usize) -> Vec<u32> {
        (0..d.max(self.rows())).map(|i| self.part(i)).collect()
    }

    /// Compact rendering with exponents, e.g. `4,1^3`.
    pub fn compact(&self) -> String {
        let mut out = Vec::new();
        let mut i = 0;
        while i < self.0.len() {
            let p = self.0[i];
            let mut j = i;
            while j < self.0.len() && self.0[j] == p {
                j += 1;
            }
            if j - i == 1 {
                out.push(p.to_string());
            } else {
                out.push(format!("{p}^{}", j - i));
            }
            i = j;
        }
        out.join(",")
    }

    /// All partitions of `n` with at most `max_rows` parts, in decreasing
    /// lexicographic order.
    pub fn all_of(n: u32, max_rows: usize) -> Vec<Partition> {
        fn go(
            n: u32,
            max_part: u32,
            rows_left: usize,
            acc: &mut Vec<u32>,
            out: &mut Vec<Partition>,
        ) {
            if n == 0 {
                out.push(Partition(acc.clone()));
                return;
            }
            if rows_left == 0 {
                return;
            }
            for p in (1..=n.min(max_part)).rev() {
                acc.push(p);
                go(n - p, p, rows_left - 1, acc, out);
                acc.pop();
            }
        }
        let mut out = Vec::new();
        go(n, n, max_rows, &mut Vec::new(), &mut out);
        out
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts `INT(,INT)*`, where an item may also be `a^k` for `k` copies
    /// of `a`. The empty string is the empty partition.
    fn from_str(s: &str) -> Result<Partition> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for item in s.split(',') {
            let item = item.trim();
            let (base, count) = match item.split_once('^') {
                Some((b, k)) => (b, k),
                None => (item, "1"),
            };
            let parse = |x: &str| -> Result<u32> {
                if x.is_empty() || !x.bytes().all(|c| c.is_ascii_digit()) {
                    return Err(Error::Partition(format!("bad part {item:?} in {s:?}")));
                }
                x.parse::<u32>()
                    .map_err(|_| Error::Partition(format!("bad part {item:?} in {s:?}")))
            };
            let b = parse(base)?;
            let k = parse(count)?;
            if k == 0 {
                return Err(Error::Partition(format!("zero repetition in {s:?}")));
            }
            parts.extend(std::iter::repeat_n(b, k as usize));
        }
        Partition::new(parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Builds a partition from literal parts; panics on invalid input.
#[macro_export]
macro_rules! part {
    ($($p:expr),* $(,)?) => {
        $crate::partitions::Partition::new(vec![$($p),*]).expect("valid partition")
    };
}

/// Dimension of the irreducible polynomial `GL_d`-module `W_d(lambda)`;
/// zero when `lambda` has more than `d` rows.
pub fn weyl_dim(lambda: &Partition, d: usize) -> u128 {
    if lambda.rows() > d {
        return 0;
    }
    let l = lambda.padded(d);
    let mut num = BigUint::from(1u32);
    let mut den = BigUint::from(1u32);
    for i in 0..d {
        for j in i + 1..d {
            num *= (l[i] - l[j]) as u64 + (j - i) as u64;
            den *= (j - i) as u64;
        }
    }
    (num / den).to_u128().expect("dimension fits in u128")
}

/// Multiset of irreducible modules: partition -> multiplicity.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Decomp(BTreeMap<Partition, u64>);

impl Decomp {
    pub fn new() -> Decomp {
        Decomp(BTreeMap::new())
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (Partition, u64)>) -> Decomp {
        let mut d = Decomp::new();
        for (p, m) in pairs {
            d.add(p, m);
        }
        d
    }

    pub fn add(&mut self, lambda: Partition, mult: u64) {
        if mult > 0 {
            *self.0.entry(lambda).or_insert(0) += mult;
        }
    }

    pub fn merge(&mut self, other: &Decomp) {
        for (p, m) in &other.0 {
            self.add(p.clone(), *m);
        }
    }

    pub fn get(&self, lambda: &Partition) -> u64 {
        self.0.get(lambda).copied().unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// Terms with the lexicographically largest partition first.
    pub fn iter(&self) -> impl Iterator<Item = (&Partition, u64)> {
        self.0.iter().rev().map(|(p, m)| (p, *m))
    }

    /// Drops partitions with more than `d` rows, returning how many
    /// (counted with multiplicity) were removed.
    pub fn truncate_rows(&mut self, d: usize) -> u64 {
        let dropped: u64 = self
            .0
            .iter()
            .filter(|(p, _)| p.rows() > d)
            .map(|(_, m)| *m)
            .sum();
        self.0.retain(|p, _| p.rows() <= d);
        dropped
    }

    pub fn dimension(&self, d: usize) -> u128 {
        self.0
            .iter()
            .map(|(p, m)| weyl_dim(p, d) * *m as u128)
            .sum()
    }

    pub fn total_multiplicity(&self) -> u64 {
        self.0.values().sum()
    }
}

impl fmt::Display for Decomp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "0");
        }
        let items: Vec<String> = self
            .iter()
            .map(|(p, m)| {
                if m == 1 {
                    format!("W({})", p.compact())
                } else {
                    format!("{m}W({})", p.compact())
                }
            })
            .collect();
        write!(f, "{}", items.join(" + "))
    }
}

impl fmt::Debug for Decomp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for Decomp {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut map = s.serialize_map(Some(self.0.len()))?;
        for (p, m) in self.iter() {
            map.serialize_entry(&p.to_string(), &m)?;
        }
        map.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_render() {
        let p: Partition = "4,1,1,1".parse().unwrap();
        assert_eq!(p, part![4, 1, 1, 1]);
        assert_eq!(p.to_string(), "4,1,1,1");
        assert_eq!(p.compact(), "4,1^3");
        assert_eq!("2^2,1".parse::<Partition>().unwrap(), part![2, 2, 1]);
        assert!("1,2".parse::<Partition>().is_err());
        assert!("4,,1".parse::<Partition>().is_err());
        assert!("4,-1".parse::<Partition>().is_err());
        assert!("4,0".parse::<Partition>().is_err());
        assert_eq!("".parse::<Partition>().unwrap(), Partition::empty());
    }

    #[test]
    fn weyl_dimensions() {
        assert_eq!(weyl_dim(&part![2, 2], 3), 6);
        assert_eq!(weyl_dim(&part![4, 3, 1], 3), 15);
        assert_eq!(weyl_dim(&part![2, 1, 1, 1, 1], 4), 0);
        assert_eq!(weyl_dim(&part![3, 2, 2], 3), 3);
        assert_eq!(weyl_dim(&part![4, 1, 1, 1], 4), 20);
        assert_eq!(weyl_dim(&Partition::empty(), 5), 1);
    }

    #[test]
    fn conjugates() {
        assert_eq!(part![4, 1, 1, 1].conjugate(), part![4, 1, 1, 1]);
        assert_eq!(part![3, 2, 2].conjugate(), part![3, 3, 1]);
    }

    #[test]
    fn enumerate_partitions() {
        assert_eq!(Partition::all_of(4, 9).len(), 5);
        assert_eq!(Partition::all_of(8, 3).len(), 10);
        assert_eq!(Partition::all_of(0, 3), vec![Partition::empty()]);
    }

    #[test]
    fn decomp_truncation() {
        let mut d = Decomp::from_pairs([(part![2, 1, 1], 2), (part![4], 1)]);
        assert_eq!(d.truncate_rows(2), 2);
        assert_eq!(d.to_string(), "W(4)");
    }
}
