//! Formal trace expressions: commutative polynomials in the atoms
//! `tr(word)`, with words taken up to rotation.

use std::collections::BTreeMap;
use std::fmt;

use smallvec::SmallVec;

use crate::exactnum::Rat;

/// A word up to cyclic rotation, stored as its lexicographically least
/// rotation. Letters are matrix indices starting at 1.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CyclicWord(SmallVec<[u8; 8]>);

impl CyclicWord {
    pub fn new(word: &[u8]) -> CyclicWord {
        let n = word.len();
        let mut best: SmallVec<[u8; 8]> = SmallVec::from_slice(word);
        let mut cand: SmallVec<[u8; 8]> = SmallVec::with_capacity(n);
        for r in 1..n {
            cand.clear();
            cand.extend_from_slice(&word[r..]);
            cand.extend_from_slice(&word[..r]);
            if cand < best {
                best.clone_from(&cand);
            }
        }
        CyclicWord(best)
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn relabel(&self, f: impl Fn(u8) -> u8) -> CyclicWord {
        let w: SmallVec<[u8; 8]> = self.0.iter().map(|&l| f(l)).collect();
        CyclicWord::new(&w)
    }
}

impl fmt::Display for CyclicWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "tr(")?;
        let mut i = 0;
        while i < self.0.len() {
            let l = self.0[i];
            let mut j = i;
            while j < self.0.len() && self.0[j] == l {
                j += 1;
            }
            if j - i == 1 {
                write!(f, "x{l}")?;
            } else {
                write!(f, "x{l}^{}", j - i)?;
            }
            i = j;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for CyclicWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A product of trace atoms (a sorted multiset); empty means 1.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct TraceMonomial(SmallVec<[CyclicWord; 4]>);

impl TraceMonomial {
    pub fn one() -> TraceMonomial {
        TraceMonomial(SmallVec::new())
    }

    pub fn from_atoms(atoms: impl IntoIterator<Item = CyclicWord>) -> TraceMonomial {
        let mut v: SmallVec<[CyclicWord; 4]> = atoms.into_iter().collect();
        v.sort_unstable();
        TraceMonomial(v)
    }

    pub fn atoms(&self) -> &[CyclicWord] {
        &self.0
    }

    pub fn mul(&self, other: &TraceMonomial) -> TraceMonomial {
        TraceMonomial::from_atoms(self.0.iter().chain(other.0.iter()).cloned())
    }

    pub fn degree(&self) -> usize {
        self.0.iter().map(|w| w.len()).sum()
    }

    /// Number of occurrences of each letter `1..=n`.
    pub fn multidegree(&self, n: usize) -> Vec<u32> {
        let mut deg = vec![0u32; n];
        for w in &self.0 {
            for &l in w.letters() {
                if (l as usize) <= n && l > 0 {
                    deg[l as usize - 1] += 1;
                }
            }
        }
        deg
    }

    pub fn max_letter(&self) -> u8 {
        self.0
            .iter()
            .flat_map(|w| w.letters().iter().copied())
            .max()
            .unwrap_or(0)
    }

    pub fn relabel(&self, f: impl Fn(u8) -> u8 + Copy) -> TraceMonomial {
        TraceMonomial::from_atoms(self.0.iter().map(|w| w.relabel(f)))
    }
}

impl fmt::Display for TraceMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for w in &self.0 {
            write!(f, "{w}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for TraceMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Rational linear combination of trace monomials.
///
/// Traces of single letters are dropped on construction: the matrices are
/// traceless.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct TraceExpr(BTreeMap<TraceMonomial, Rat>);

impl TraceExpr {
    pub fn zero() -> TraceExpr {
        TraceExpr(BTreeMap::new())
    }

    pub fn constant(c: Rat) -> TraceExpr {
        let mut e = TraceExpr::zero();
        e.add_term(TraceMonomial::one(), c);
        e
    }

    /// `tr(word)`.
    pub fn trace(word: &[u8]) -> TraceExpr {
        let mut e = TraceExpr::zero();
        e.add_term(
            TraceMonomial::from_atoms([CyclicWord::new(word)]),
            Rat::one(),
        );
        e
    }

    /// `tr(p)` for a noncommutative polynomial `p`.
    pub fn trace_of(p: &NcPoly) -> TraceExpr {
        let mut e = TraceExpr::zero();
        for (w, c) in p.terms() {
            e.add_term(TraceMonomial::from_atoms([CyclicWord::new(w)]), c.clone());
        }
        e
    }

    pub fn add_term(&mut self, m: TraceMonomial, c: Rat) {
        if c.is_zero() {
            return;
        }
        if m.atoms().iter().any(|w| w.len() == 1) {
            return;
        }
        if m.atoms().iter().any(|w| w.is_empty()) {
            // tr of the identity is 3
            let k = m.atoms().iter().filter(|w| w.is_empty()).count() as u32;
            let rest =
                TraceMonomial::from_atoms(m.atoms().iter().filter(|w| !w.is_empty()).cloned());
            self.add_term(rest, &c * &Rat::from_int(3).pow(k));
            return;
        }
        use std::collections::btree_map::Entry;
        match self.0.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += &c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&TraceMonomial, &Rat)> {
        self.0.iter()
    }

    pub fn coefficient(&self, m: &TraceMonomial) -> Rat {
        self.0.get(m).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn add_scaled(&mut self, other: &TraceExpr, c: &Rat) {
        if c.is_zero() {
            return;
        }
        for (m, a) in &other.0 {
            self.add_term(m.clone(), a * c);
        }
    }

    pub fn add(&self, other: &TraceExpr) -> TraceExpr {
        let mut out = self.clone();
        out.add_scaled(other, &Rat::one());
        out
    }

    pub fn sub(&self, other: &TraceExpr) -> TraceExpr {
        let mut out = self.clone();
        out.add_scaled(other, &Rat::from_int(-1));
        out
    }

    pub fn scale(&self, c: &Rat) -> TraceExpr {
        let mut out = TraceExpr::zero();
        out.add_scaled(self, c);
        out
    }

    pub fn mul(&self, other: &TraceExpr) -> TraceExpr {
        let mut out = TraceExpr::zero();
        for (m, a) in &self.0 {
            for (n, b) in &other.0 {
                out.add_term(m.mul(n), a * b);
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> TraceExpr {
        let mut acc = TraceExpr::constant(Rat::one());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Common multidegree over letters `1..=n`, if every term agrees.
    pub fn multidegree(&self, n: usize) -> Option<Vec<u32>> {
        let mut out: Option<Vec<u32>> = None;
        for m in self.0.keys() {
            let deg = m.multidegree(n);
            match &out {
                None => out = Some(deg),
                Some(prev) if *prev != deg => return None,
                _ => {}
            }
        }
        out
    }

    pub fn max_letter(&self) -> u8 {
        self.0.keys().map(|m| m.max_letter()).max().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.0.keys().map(|m| m.degree()).max().unwrap_or(0)
    }

    /// Renames letters.
    pub fn relabel(&self, f: impl Fn(u8) -> u8 + Copy) -> TraceExpr {
        let mut out = TraceExpr::zero();
        for (m, c) in &self.0 {
            out.add_term(m.relabel(f), c.clone());
        }
        out
    }

    /// Applies `f` to each trace monomial, each returning an expression.
    pub fn map_monomials(&self, f: impl Fn(&TraceMonomial) -> TraceExpr) -> TraceExpr {
        let mut out = TraceExpr::zero();
        for (m, c) in &self.0 {
            out.add_scaled(&f(m), c);
        }
        out
    }

    /// Scales to coprime integer coefficients with a positive leading
    /// coefficient.
    pub fn primitive(&self) -> TraceExpr {
        let coeffs: Vec<Rat> = self.0.values().cloned().collect();
        if coeffs.is_empty() {
            return self.clone();
        }
        let ints = crate::exactnum::normalize_integer_vector(&coeffs);
        TraceExpr(
            self.0
                .keys()
                .cloned()
                .zip(ints.into_iter().map(Rat::from_bigint))
                .collect(),
        )
    }
}

impl fmt::Display for TraceExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.0.iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            if a.is_one() && !m.atoms().is_empty() {
                write!(f, "{m}")?;
            } else if m.atoms().is_empty() {
                write!(f, "{a}")?;
            } else {
                write!(f, "{a}{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for TraceExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Noncommutative polynomial in the letters: word -> coefficient.
#[derive(Clone, PartialEq, Eq, Default, Debug)]
pub struct NcPoly(BTreeMap<SmallVec<[u8; 8]>, Rat>);

impl NcPoly {
    pub fn zero() -> NcPoly {
        NcPoly(BTreeMap::new())
    }

    /// The empty word with coefficient `c`.
    pub fn scalar(c: Rat) -> NcPoly {
        let mut p = NcPoly::zero();
        p.add_term(SmallVec::new(), c);
        p
    }

    pub fn letter(l: u8) -> NcPoly {
        let mut p = NcPoly::zero();
        p.add_term(SmallVec::from_slice(&[l]), Rat::one());
        p
    }

    fn add_term(&mut self, w: SmallVec<[u8; 8]>, c: Rat) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.0.entry(w) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += &c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u8], &Rat)> {
        self.0.iter().map(|(w, c)| (w.as_slice(), c))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn add_scaled(&mut self, other: &NcPoly, c: &Rat) {
        for (w, a) in &other.0 {
            self.add_term(w.clone(), a * c);
        }
    }

    pub fn add(&self, other: &NcPoly) -> NcPoly {
        let mut out = self.clone();
        out.add_scaled(other, &Rat::one());
        out
    }

    pub fn sub(&self, other: &NcPoly) -> NcPoly {
        let mut out = self.clone();
        out.add_scaled(other, &Rat::from_int(-1));
        out
    }

    pub fn scale(&self, c: &Rat) -> NcPoly {
        let mut out = NcPoly::zero();
        out.add_scaled(self, c);
        out
    }

    pub fn mul(&self, other: &NcPoly) -> NcPoly {
        let mut out = NcPoly::zero();
        for (u, a) in &self.0 {
            for (v, b) in &other.0 {
                let mut w = u.clone();
                w.extend_from_slice(v);
                out.add_term(w, a * b);
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> NcPoly {
        let mut acc = NcPoly::scalar(Rat::one());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn commutator(a: &NcPoly, b: &NcPoly) -> NcPoly {
        a.mul(b).sub(&b.mul(a))
    }

    /// Standard polynomial: alternating sum over all orderings of `args`.
    pub fn standard(args: &[NcPoly]) -> NcPoly {
        let mut out = NcPoly::zero();
        for (perm, sign) in crate::genmat::signed_permutations(args.len()) {
            let mut prod = NcPoly::scalar(Rat::one());
            for &i in &perm {
                prod = prod.mul(&args[i]);
            }
            out.add_scaled(&prod, &Rat::from_int(sign));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_canonical_form() {
        assert_eq!(CyclicWord::new(&[2, 1, 3]), CyclicWord::new(&[1, 3, 2]));
        assert_ne!(CyclicWord::new(&[1, 2, 3]), CyclicWord::new(&[1, 3, 2]));
        assert_eq!(CyclicWord::new(&[2, 1, 1]).letters(), &[1, 1, 2]);
    }

    #[test]
    fn single_letter_traces_vanish() {
        assert!(TraceExpr::trace(&[3]).is_zero());
        let e = TraceExpr::trace(&[1, 2]).mul(&TraceExpr::trace(&[1]));
        assert!(e.is_zero());
    }

    #[test]
    fn commutator_square_trace() {
        let c = NcPoly::commutator(&NcPoly::letter(1), &NcPoly::letter(2));
        let e = TraceExpr::trace_of(&c.pow(2));
        // tr([a,b]^2) = 2tr(abab) - 2tr(aabb)
        let mut expect = TraceExpr::trace(&[1, 2, 1, 2]).scale(&Rat::from_int(2));
        expect.add_scaled(&TraceExpr::trace(&[1, 1, 2, 2]), &Rat::from_int(-2));
        assert_eq!(e, expect);
    }

    #[test]
    fn standard_with_repeat_is_zero() {
        let s = NcPoly::standard(&[NcPoly::letter(1), NcPoly::letter(1), NcPoly::letter(2)]);
        assert!(s.is_zero());
    }
}
