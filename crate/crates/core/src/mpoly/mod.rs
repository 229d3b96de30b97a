//! Sparse multivariate polynomials with rational coefficients.
//!
//! Variables are either series variables `t1, t2, ...` or entries of the
//! generic matrices `x_i`. A polynomial never mixes the two kinds.

mod series;

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use rustc_hash::FxHashMap;
use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::exactnum::Rat;

pub use series::{series_expand_rational, Series};

const SERIES_SLOTS: u8 = 32;
/// Largest matrix index representable as an entry variable.
pub const MAX_MATRICES: usize = 9;

/// A variable. Ids below 32 are the series variables `t1..t32`; the rest
/// are the entries `x_i[p][q]` of the matrices `x_1..x_9`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VarId(u8);

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VarKind {
    Series { index: usize },
    Entry { mat: usize, p: usize, q: usize },
}

/// Which of the two variable families a polynomial lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Series,
    Entry,
}

impl VarId {
    /// Series variable `t_index`, `index` starting at 1.
    pub fn series(index: usize) -> VarId {
        assert!(
            (1..=SERIES_SLOTS as usize).contains(&index),
            "series index {index}"
        );
        VarId((index - 1) as u8)
    }

    /// Entry `(p, q)` of matrix `mat`; all indices start at 1.
    pub fn entry(mat: usize, p: usize, q: usize) -> VarId {
        assert!((1..=MAX_MATRICES).contains(&mat) && (1..=3).contains(&p) && (1..=3).contains(&q));
        VarId(SERIES_SLOTS + ((mat - 1) * 9 + (p - 1) * 3 + (q - 1)) as u8)
    }

    pub fn kind(self) -> VarKind {
        if self.0 < SERIES_SLOTS {
            VarKind::Series {
                index: self.0 as usize + 1,
            }
        } else {
            let k = (self.0 - SERIES_SLOTS) as usize;
            VarKind::Entry {
                mat: k / 9 + 1,
                p: (k % 9) / 3 + 1,
                q: k % 3 + 1,
            }
        }
    }

    pub fn family(self) -> Family {
        if self.0 < SERIES_SLOTS {
            Family::Series
        } else {
            Family::Entry
        }
    }

    /// Matrix index of an entry variable.
    pub fn matrix(self) -> Option<usize> {
        match self.kind() {
            VarKind::Entry { mat, .. } => Some(mat),
            VarKind::Series { .. } => None,
        }
    }

    pub fn raw(self) -> u8 {
        self.0
    }
}

impl fmt::Display for VarId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind() {
            VarKind::Series { index } => write!(f, "t{index}"),
            VarKind::Entry { mat, p, q } => write!(f, "x{mat}_{p}{q}"),
        }
    }
}

impl fmt::Debug for VarId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A monomial stored as the sorted multiset of its variables.
///
/// Ordering is graded lexicographic with `t1 > t2 > ...` and entry variables
/// ordered by `(matrix, row, column)`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial(SmallVec<[VarId; 12]>);

impl Monomial {
    pub fn one() -> Monomial {
        Monomial(SmallVec::new())
    }

    pub fn var(v: VarId) -> Monomial {
        let mut s = SmallVec::new();
        s.push(v);
        Monomial(s)
    }

    pub fn from_vars(vars: impl IntoIterator<Item = VarId>) -> Monomial {
        let mut s: SmallVec<[VarId; 12]> = vars.into_iter().collect();
        s.sort_unstable();
        Monomial(s)
    }

    /// Builds `t1^e1 * t2^e2 * ...`.
    pub fn series_exponents(exps: &[u32]) -> Monomial {
        let mut s = SmallVec::new();
        for (i, &e) in exps.iter().enumerate() {
            for _ in 0..e {
                s.push(VarId::series(i + 1));
            }
        }
        Monomial(s)
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn vars(&self) -> &[VarId] {
        &self.0
    }

    pub fn exponent(&self, v: VarId) -> u32 {
        self.0.iter().filter(|&&w| w == v).count() as u32
    }

    /// Distinct variables with their exponents, in increasing id order.
    pub fn powers(&self) -> impl Iterator<Item = (VarId, u32)> + '_ {
        let s = &self.0;
        let mut i = 0;
        std::iter::from_fn(move || {
            if i >= s.len() {
                return None;
            }
            let v = s[i];
            let mut j = i + 1;
            while j < s.len() && s[j] == v {
                j += 1;
            }
            let e = (j - i) as u32;
            i = j;
            Some((v, e))
        })
    }

    /// Exponents of `t1..td`; `None` if another variable occurs.
    pub fn series_exponent_vector(&self, d: usize) -> Option<Vec<u32>> {
        let mut e = vec![0u32; d];
        for v in &self.0 {
            match v.kind() {
                VarKind::Series { index } if index <= d => e[index - 1] += 1,
                _ => return None,
            }
        }
        Some(e)
    }

    pub fn family(&self) -> Option<Family> {
        self.0.first().map(|v| v.family())
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.0, &other.0);
        let mut out: SmallVec<[VarId; 12]> = SmallVec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            if a[i] <= b[j] {
                out.push(a[i]);
                i += 1;
            } else {
                out.push(b[j]);
                j += 1;
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial(out)
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let (a, b) = (&self.0, &other.0);
        let mut out = SmallVec::with_capacity(a.len());
        let mut j = 0;
        for &v in a.iter() {
            if j < b.len() && b[j] == v {
                j += 1;
            } else if j < b.len() && b[j] < v {
                return None;
            } else {
                out.push(v);
            }
        }
        (j == b.len()).then_some(Monomial(out))
    }

    /// Removes one copy of `v`.
    fn without_one(&self, v: VarId) -> Monomial {
        let mut s = self.0.clone();
        let pos = s.iter().position(|&w| w == v).expect("variable present");
        s.remove(pos);
        Monomial(s)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        // For equal degree, a smaller variable list is lexicographically larger
        // as an exponent vector.
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (v, e) in self.powers() {
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Sparse polynomial: terms sorted by decreasing monomial, no zero
/// coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    terms: Vec<(Monomial, Rat)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    /// Multiply the left operand by the right one, which must be constant.
    Scale,
}

/// Checked arithmetic: refuses to combine series and entry polynomials.
pub fn poly_arith(a: &Poly, b: &Poly, op: ArithOp) -> Result<Poly> {
    if let (Some(x), Some(y)) = (a.family(), b.family()) {
        if x != y {
            return Err(Error::MixedVariables);
        }
    }
    Ok(match op {
        ArithOp::Add => a + b,
        ArithOp::Sub => a - b,
        ArithOp::Mul => a * b,
        ArithOp::Scale => match b.constant_value() {
            Some(c) => a.scale(&c),
            None => return Err(Error::OutOfScope("scale factor must be a constant".into())),
        },
    })
}

impl Poly {
    pub fn zero() -> Poly {
        Poly { terms: Vec::new() }
    }

    pub fn one() -> Poly {
        Poly::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Poly {
        if c.is_zero() {
            Poly::zero()
        } else {
            Poly {
                terms: vec![(Monomial::one(), c)],
            }
        }
    }

    pub fn var(v: VarId) -> Poly {
        Poly {
            terms: vec![(Monomial::var(v), Rat::one())],
        }
    }

    pub fn term(m: Monomial, c: Rat) -> Poly {
        if c.is_zero() {
            Poly::zero()
        } else {
            Poly {
                terms: vec![(m, c)],
            }
        }
    }

    /// Collects terms, merging duplicates and dropping zeros.
    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, Rat)>) -> Poly {
        let mut map: FxHashMap<Monomial, Rat> = FxHashMap::default();
        for (m, c) in terms {
            if c.is_zero() {
                continue;
            }
            accumulate(&mut map, m, c);
        }
        Poly::from_map(map)
    }

    fn from_map(map: FxHashMap<Monomial, Rat>) -> Poly {
        let mut terms: Vec<(Monomial, Rat)> =
            map.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        Poly { terms }
    }

    /// Terms already sorted decreasingly, distinct, nonzero.
    fn from_sorted(terms: Vec<(Monomial, Rat)>) -> Poly {
        debug_assert!(terms.windows(2).all(|w| w[0].0 > w[1].0));
        debug_assert!(terms.iter().all(|(_, c)| !c.is_zero()));
        Poly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[(Monomial, Rat)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, Rat)> {
        self.terms
    }

    pub fn leading(&self) -> Option<&(Monomial, Rat)> {
        self.terms.first()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rat {
        match self.terms.binary_search_by(|(t, _)| m.cmp(t)) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => Rat::zero(),
        }
    }

    pub fn constant_value(&self) -> Option<Rat> {
        match self.terms.as_slice() {
            [] => Some(Rat::zero()),
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    pub fn family(&self) -> Option<Family> {
        self.terms.iter().find_map(|(m, _)| m.family())
    }

    pub fn total_degree(&self) -> Option<usize> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m, _)) => self.terms.iter().all(|(t, _)| t.degree() == m.degree()),
        }
    }

    /// Homogeneous piece of the given total degree.
    pub fn graded_piece(&self, degree: usize) -> Poly {
        Poly::from_sorted(
            self.terms
                .iter()
                .filter(|(m, _)| m.degree() == degree)
                .cloned()
                .collect(),
        )
    }

    pub fn scale(&self, c: &Rat) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly::from_sorted(self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect())
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Rat) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        // multiplication by a monomial preserves the term order
        Poly::from_sorted(self.terms.iter().map(|(t, a)| (t.mul(m), a * c)).collect())
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Adds `c * other` in place.
    pub fn add_scaled(&mut self, other: &Poly, c: &Rat) {
        if c.is_zero() || other.is_zero() {
            return;
        }
        let lhs = std::mem::take(&mut self.terms);
        self.terms = merge(lhs, other.terms.iter().map(|(m, a)| (m.clone(), a * c)));
    }

    /// Linear combination `sum c_i p_i`.
    pub fn linear_combination<'a>(items: impl IntoIterator<Item = (&'a Rat, &'a Poly)>) -> Poly {
        let mut map: FxHashMap<Monomial, Rat> = FxHashMap::default();
        for (c, p) in items {
            if c.is_zero() {
                continue;
            }
            for (m, a) in &p.terms {
                accumulate(&mut map, m.clone(), a * c);
            }
        }
        Poly::from_map(map)
    }

    /// Variables occurring in the polynomial, sorted by id.
    pub fn variables(&self) -> Vec<VarId> {
        let mut vs: Vec<VarId> = self
            .terms
            .iter()
            .flat_map(|(m, _)| m.vars().iter().copied())
            .collect();
        vs.sort_unstable();
        vs.dedup();
        vs
    }

    pub fn evaluate(&self, value: impl Fn(VarId) -> Rat) -> Rat {
        let mut cache: FxHashMap<VarId, Rat> = FxHashMap::default();
        let mut total = Rat::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for v in m.vars() {
                let x = cache.entry(*v).or_insert_with(|| value(*v));
                t = &t * &*x;
            }
            total += &t;
        }
        total
    }

    /// Exact quotient `self / divisor`, or `None` if the division leaves a
    /// remainder.
    pub fn div_exact(&self, divisor: &Poly) -> Option<Poly> {
        let (lm, lc) = divisor.leading()?.clone();
        let mut rem = self.clone();
        let mut quotient: Vec<(Monomial, Rat)> = Vec::new();
        while let Some((m, c)) = rem.leading().cloned() {
            let q = m.div(&lm)?;
            let qc = &c / &lc;
            rem = &rem - &divisor.mul_monomial(&q, &qc);
            quotient.push((q, qc));
        }
        Some(Poly::from_terms(quotient))
    }

    /// Applies a substitution of variables; unmapped variables stay.
    pub fn substitute(&self, image: impl Fn(VarId) -> Option<Poly>) -> Poly {
        let mut images: FxHashMap<VarId, Option<Poly>> = FxHashMap::default();
        let mut powers: FxHashMap<(VarId, u32), Poly> = FxHashMap::default();
        let mut map: FxHashMap<Monomial, Rat> = FxHashMap::default();
        for (m, c) in &self.terms {
            let mut fixed = Monomial::one();
            let mut acc = Poly::constant(c.clone());
            for (v, e) in m.powers() {
                let img = images.entry(v).or_insert_with(|| image(v));
                match img {
                    None => {
                        for _ in 0..e {
                            fixed = fixed.mul(&Monomial::var(v));
                        }
                    }
                    Some(p) => {
                        let pw = powers.entry((v, e)).or_insert_with(|| p.pow(e));
                        acc = &acc * &*pw;
                    }
                }
            }
            for (t, a) in acc.terms {
                accumulate(&mut map, t.mul(&fixed), a);
            }
        }
        Poly::from_map(map)
    }

    /// Extends `rule` (image of each variable, zero when `None`) to the
    /// derivation obeying the Leibniz rule.
    pub fn derive(&self, rule: impl Fn(VarId) -> Option<Poly>) -> Poly {
        let mut images: FxHashMap<VarId, Option<Poly>> = FxHashMap::default();
        let mut map: FxHashMap<Monomial, Rat> = FxHashMap::default();
        for (m, c) in &self.terms {
            for (v, e) in m.powers() {
                let img = images.entry(v).or_insert_with(|| rule(v));
                let Some(p) = img else { continue };
                let rest = m.without_one(v);
                let k = c * &Rat::from_int(e as i64);
                for (t, a) in &p.terms {
                    accumulate(&mut map, t.mul(&rest), a * &k);
                }
            }
        }
        Poly::from_map(map)
    }

    /// Terms whose degree in each variable group equals `target`. Variables
    /// with no group are ignored; a group missing from `target` must have
    /// degree 0.
    pub fn multihomogeneous_component(
        &self,
        grading: impl Fn(VarId) -> Option<usize>,
        target: &[u32],
    ) -> Poly {
        let keep = |m: &Monomial| {
            let mut deg = vec![0u32; target.len()];
            for v in m.vars() {
                if let Some(g) = grading(*v) {
                    if g >= deg.len() {
                        return false;
                    }
                    deg[g] += 1;
                }
            }
            deg == target
        };
        Poly::from_sorted(
            self.terms
                .iter()
                .filter(|(m, _)| keep(m))
                .cloned()
                .collect(),
        )
    }

    /// Degree of the monomial `m` in each group `0..groups`.
    pub fn group_degrees(
        m: &Monomial,
        grading: impl Fn(VarId) -> Option<usize>,
        groups: usize,
    ) -> Vec<u32> {
        let mut deg = vec![0u32; groups];
        for v in m.vars() {
            if let Some(g) = grading(*v) {
                if g < groups {
                    deg[g] += 1;
                }
            }
        }
        deg
    }

    /// Degree in the entries of each matrix `1..=d` when every term agrees.
    pub fn matrix_multidegree(&self, d: usize) -> Option<Vec<u32>> {
        let grading = |v: VarId| v.matrix().map(|i| i - 1);
        let mut out: Option<Vec<u32>> = None;
        for (m, _) in &self.terms {
            let deg = Poly::group_degrees(m, grading, d.max(MAX_MATRICES));
            match &out {
                None => out = Some(deg),
                Some(prev) if *prev != deg => return None,
                _ => {}
            }
        }
        out.map(|mut v| {
            v.truncate(d);
            v
        })
    }

    /// Swaps two variables everywhere.
    pub fn swap_vars(&self, a: VarId, b: VarId) -> Poly {
        Poly::from_terms(self.terms.iter().map(|(m, c)| {
            (
                Monomial::from_vars(m.vars().iter().map(|&v| {
                    if v == a {
                        b
                    } else if v == b {
                        a
                    } else {
                        v
                    }
                })),
                c.clone(),
            )
        }))
    }

    /// Multiplies in place by the product, dropping terms above `max_degree`.
    pub fn mul_truncated(&self, other: &Poly, max_degree: usize) -> Poly {
        let mut map: FxHashMap<Monomial, Rat> = FxHashMap::default();
        for (m, a) in &self.terms {
            if m.degree() > max_degree {
                continue;
            }
            for (n, b) in &other.terms {
                if m.degree() + n.degree() > max_degree {
                    continue;
                }
                accumulate(&mut map, m.mul(n), a * b);
            }
        }
        Poly::from_map(map)
    }
}

fn accumulate(map: &mut FxHashMap<Monomial, Rat>, m: Monomial, c: Rat) {
    match map.entry(m) {
        std::collections::hash_map::Entry::Occupied(mut e) => {
            *e.get_mut() += &c;
        }
        std::collections::hash_map::Entry::Vacant(e) => {
            e.insert(c);
        }
    }
}

/// Merges two decreasing term lists.
fn merge(
    a: Vec<(Monomial, Rat)>,
    b: impl IntoIterator<Item = (Monomial, Rat)>,
) -> Vec<(Monomial, Rat)> {
    let mut out = Vec::with_capacity(a.len());
    let mut ai = a.into_iter().peekable();
    let mut bi = b.into_iter().peekable();
    loop {
        let ord = match (ai.peek(), bi.peek()) {
            (None, None) => break,
            (Some(_), None) => Ordering::Greater,
            (None, Some(_)) => Ordering::Less,
            (Some(x), Some(y)) => x.0.cmp(&y.0),
        };
        match ord {
            Ordering::Greater => out.push(ai.next().unwrap()),
            Ordering::Less => out.push(bi.next().unwrap()),
            Ordering::Equal => {
                let (m, x) = ai.next().unwrap();
                let (_, y) = bi.next().unwrap();
                let s = x + y;
                if !s.is_zero() {
                    out.push((m, s));
                }
            }
        }
    }
    out
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        Poly::from_sorted(merge(self.terms.clone(), rhs.terms.iter().cloned()))
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        Poly::from_sorted(merge(
            self.terms.clone(),
            rhs.terms.iter().map(|(m, c)| (m.clone(), -c)),
        ))
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        if self.len() == 1 {
            let (m, c) = &self.terms[0];
            return rhs.mul_monomial(m, c);
        }
        if rhs.len() == 1 {
            let (m, c) = &rhs.terms[0];
            return self.mul_monomial(m, c);
        }
        let mut map: FxHashMap<Monomial, Rat> =
            FxHashMap::with_capacity_and_hasher(self.len().max(rhs.len()) * 2, Default::default());
        for (m, a) in &self.terms {
            for (n, b) in &rhs.terms {
                accumulate(&mut map, m.mul(n), a * b);
            }
        }
        Poly::from_map(map)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::from_sorted(self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect())
    }
}

macro_rules! owned_ops {
    ($($tr:ident $f:ident),*) => {$(
        impl $tr for Poly {
            type Output = Poly;
            fn $f(self, rhs: Poly) -> Poly { (&self).$f(&rhs) }
        }
        impl $tr<&Poly> for Poly {
            type Output = Poly;
            fn $f(self, rhs: &Poly) -> Poly { (&self).$f(rhs) }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            if m.is_one() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{a}*{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `t_i` as a polynomial.
pub fn t(i: usize) -> Poly {
    Poly::var(VarId::series(i))
}

/// Elementary symmetric polynomial `e_k(t1..td)`.
pub fn elementary(k: usize, d: usize) -> Poly {
    fn go(start: usize, k: usize, d: usize, acc: &mut Vec<VarId>, out: &mut Vec<(Monomial, Rat)>) {
        if k == 0 {
            out.push((Monomial::from_vars(acc.iter().copied()), Rat::one()));
            return;
        }
        for i in start..=d {
            acc.push(VarId::series(i));
            go(i + 1, k - 1, d, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    go(1, k, d, &mut Vec::new(), &mut out);
    Poly::from_terms(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x() -> Poly {
        t(1)
    }
    fn y() -> Poly {
        t(2)
    }

    #[test]
    fn difference_of_squares() {
        let p = &(&x() + &y()) * &(&x() - &y());
        assert_eq!(p, &x().pow(2) - &y().pow(2));
    }

    #[test]
    fn e1_times_e2_has_nine_terms() {
        let p = &elementary(1, 3) * &elementary(2, 3);
        assert_eq!(p.len(), 7);
        let m = Monomial::series_exponents(&[1, 1, 1]);
        assert_eq!(p.coefficient(&m), Rat::from_int(3));
        // 6 monomials t_i^2 t_j plus t1t2t3, counted with multiplicity 9
        let total: i64 = p.terms().iter().map(|(_, c)| c.to_i64().unwrap()).sum();
        assert_eq!(total, 9);
    }

    #[test]
    fn multiply_by_zero() {
        assert!((&x() * &Poly::zero()).is_zero());
    }

    #[test]
    fn mixing_families_is_rejected() {
        let a = Poly::var(VarId::entry(1, 1, 2));
        assert_eq!(
            poly_arith(&a, &x(), ArithOp::Add),
            Err(Error::MixedVariables)
        );
        assert!(poly_arith(&a, &Poly::constant(Rat::from_int(2)), ArithOp::Scale).is_ok());
    }

    #[test]
    fn substitution_and_derivation() {
        let sq = x().pow(2);
        let s = sq.substitute(|v| (v == VarId::series(1)).then(|| &x() + &y()));
        assert_eq!(
            s,
            &(&x().pow(2) + &(&x() * &y()).scale(&Rat::from_int(2))) + &y().pow(2)
        );
        assert_eq!(sq.substitute(|_| None), sq);
        let d = y().pow(2).derive(|v| (v == VarId::series(2)).then(x));
        assert_eq!(d, (&x() * &y()).scale(&Rat::from_int(2)));
        assert!(x()
            .pow(3)
            .derive(|v| (v == VarId::series(2)).then(x))
            .is_zero());
    }

    #[test]
    fn component_extraction() {
        let p = (&x() + &y()).pow(2);
        let g = |v: VarId| match v.kind() {
            VarKind::Series { index } => Some(index - 1),
            _ => None,
        };
        assert_eq!(
            p.multihomogeneous_component(g, &[1, 1]),
            (&x() * &y()).scale(&Rat::from_int(2))
        );
        assert!(p.multihomogeneous_component(g, &[3, 0]).is_zero());
    }

    #[test]
    fn order_is_graded_lex() {
        let a = Monomial::series_exponents(&[2, 0, 0]);
        let b = Monomial::series_exponents(&[1, 1, 0]);
        let c = Monomial::series_exponents(&[0, 0, 3]);
        assert!(a > b);
        assert!(c > a);
        let p = Poly::from_terms(vec![(b.clone(), Rat::one()), (a.clone(), Rat::one())]);
        assert_eq!(p.leading().unwrap().0, a);
    }

    #[test]
    fn exact_division() {
        let a = &(&x() + &y()) * &(&x() - &y().scale(&Rat::from_int(3)));
        assert_eq!(
            a.div_exact(&(&x() + &y())).unwrap(),
            &x() - &y().scale(&Rat::from_int(3))
        );
        assert!(x().pow(2).div_exact(&(&x() + &y())).is_none());
    }
}
