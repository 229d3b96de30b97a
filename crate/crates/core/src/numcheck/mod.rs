//! Randomized numeric oracle: traces evaluated at random integer matrices,
//! and ranks of evaluation matrices as lower bounds for dimensions of
//! graded pieces of invariants.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rustc_hash::FxHashMap;

use crate::catalog::{CyclicWord, TraceExpr};
use crate::error::{Error, Result};
use crate::exactnum::{rank, Rat, RatMatrix};

pub const DEFAULT_BOUND: i64 = 5;

type IntMatrix = [[i128; 3]; 3];

/// `d` random integer 3x3 matrices with entries in `[-bound, bound]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SamplePoint {
    pub d: usize,
    pub bound: i64,
    pub seed: u64,
    /// Whether the matrices were drawn with trace zero.
    pub traceless: bool,
    matrices: Vec<IntMatrix>,
}

impl SamplePoint {
    /// Traceless matrices; the last diagonal entry is `-(a11 + a22)` and the
    /// pair `(a11, a22)` is redrawn until that stays within the bound.
    pub fn random(d: usize, bound: i64, seed: u64) -> SamplePoint {
        Self::draw(d, bound, seed, true)
    }

    /// Matrices without the trace condition, for the full trace algebra.
    pub fn random_general(d: usize, bound: i64, seed: u64) -> SamplePoint {
        Self::draw(d, bound, seed, false)
    }

    fn draw(d: usize, bound: i64, seed: u64, traceless: bool) -> SamplePoint {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut matrices = Vec::with_capacity(d);
        for _ in 0..d {
            let mut m = [[0i128; 3]; 3];
            for (p, row) in m.iter_mut().enumerate() {
                for (q, x) in row.iter_mut().enumerate() {
                    if !(traceless && p == 2 && q == 2) {
                        *x = rng.gen_range(-bound..=bound) as i128;
                    }
                }
            }
            if traceless {
                while (m[0][0] + m[1][1]).abs() > bound as i128 {
                    m[0][0] = rng.gen_range(-bound..=bound) as i128;
                    m[1][1] = rng.gen_range(-bound..=bound) as i128;
                }
                m[2][2] = -(m[0][0] + m[1][1]);
            }
            matrices.push(m);
        }
        SamplePoint {
            d,
            bound,
            seed,
            traceless,
            matrices,
        }
    }

    /// Points with seeds `seed, seed + 1, ...`.
    pub fn batch(
        d: usize,
        bound: i64,
        seed: u64,
        count: usize,
        traceless: bool,
    ) -> Vec<SamplePoint> {
        (0..count as u64)
            .map(|i| Self::draw(d, bound, seed.wrapping_add(i), traceless))
            .collect()
    }

    /// Matrix `x_i`, 1-based.
    pub fn matrix(&self, i: usize) -> [[i64; 3]; 3] {
        self.matrices[i - 1].map(|r| r.map(|x| x as i64))
    }

    /// Trace of the product of the matrices named by `word` (1-based).
    pub fn trace_of_word(&self, word: &[u8]) -> i128 {
        if word.is_empty() {
            return 3;
        }
        let mut acc = self.matrices[word[0] as usize - 1];
        for &l in &word[1..] {
            let b = &self.matrices[l as usize - 1];
            let mut next = [[0i128; 3]; 3];
            for (p, row) in next.iter_mut().enumerate() {
                for (q, x) in row.iter_mut().enumerate() {
                    *x = (0..3).map(|r| acc[p][r] * b[r][q]).sum();
                }
            }
            acc = next;
        }
        (0..3).map(|i| acc[i][i]).sum()
    }

    /// Product of traces of several words.
    pub fn trace_product(&self, words: &[Vec<u8>]) -> BigInt {
        words.iter().fold(BigInt::from(1), |acc, w| {
            acc * BigInt::from(self.trace_of_word(w))
        })
    }
}

/// Exact value of a trace expression at a point.
pub fn numeric_eval(e: &TraceExpr, pt: &SamplePoint) -> Result<Rat> {
    let top = e.max_letter() as usize;
    if top > pt.d {
        return Err(Error::IndexOutOfRange {
            index: top,
            d: pt.d,
        });
    }
    let mut cache: FxHashMap<&CyclicWord, BigInt> = FxHashMap::default();
    let mut acc = Rat::zero();
    for (m, c) in e.terms() {
        let mut v = BigInt::from(1);
        for atom in m.atoms() {
            let t = cache
                .entry(atom)
                .or_insert_with(|| BigInt::from(pt.trace_of_word(atom.letters())));
            v *= &*t;
        }
        acc += c * &Rat::from_bigint(v);
    }
    Ok(acc)
}

/// True when `e` vanishes at every point; a `false` is a proof of
/// nonvanishing, a `true` is only evidence.
pub fn vanishes_at(e: &TraceExpr, points: &[SamplePoint]) -> Result<bool> {
    for pt in points {
        if !numeric_eval(e, pt)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

fn multiset_words(content: &[u32]) -> Vec<Vec<u8>> {
    fn go(left: &mut [u32], cur: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if left.iter().all(|&x| x == 0) {
            out.push(cur.clone());
            return;
        }
        for i in 0..left.len() {
            if left[i] > 0 {
                left[i] -= 1;
                cur.push(i as u8 + 1);
                go(left, cur, out);
                cur.pop();
                left[i] += 1;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut content.to_vec(), &mut Vec::new(), &mut out);
    out
}

/// Cyclic words (up to rotation) with the given letter content.
pub fn cyclic_words(content: &[u32]) -> Vec<CyclicWord> {
    let set: BTreeSet<CyclicWord> = multiset_words(content)
        .iter()
        .map(|w| CyclicWord::new(w))
        .collect();
    set.into_iter().collect()
}

fn sub_contents(bound: &[u32]) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    for &b in bound {
        out = out
            .into_iter()
            .flat_map(|v| (0..=b).map(move |x| [v.clone(), vec![x]].concat()))
            .collect();
    }
    out
}

/// All products of traces of words whose letters have exactly the content
/// `multidegree`; with `include_linear = false` traces of single letters
/// are excluded.
pub fn trace_products(multidegree: &[u32], include_linear: bool) -> Vec<Vec<Vec<u8>>> {
    let mut atoms: Vec<(CyclicWord, Vec<u32>)> = Vec::new();
    for c in sub_contents(multidegree) {
        let len: u32 = c.iter().sum();
        if len == 0 || (len == 1 && !include_linear) {
            continue;
        }
        for w in cyclic_words(&c) {
            atoms.push((w, c.clone()));
        }
    }
    fn go(
        start: usize,
        left: &mut Vec<u32>,
        atoms: &[(CyclicWord, Vec<u32>)],
        cur: &mut Vec<Vec<u8>>,
        out: &mut Vec<Vec<Vec<u8>>>,
    ) {
        if left.iter().all(|&x| x == 0) {
            out.push(cur.clone());
            return;
        }
        for (i, (w, c)) in atoms.iter().enumerate().skip(start) {
            if c.iter().zip(left.iter()).all(|(a, b)| a <= b) {
                for (l, a) in left.iter_mut().zip(c) {
                    *l -= a;
                }
                cur.push(w.letters().to_vec());
                go(i, left, atoms, cur, out);
                cur.pop();
                for (l, a) in left.iter_mut().zip(c) {
                    *l += a;
                }
            }
        }
    }
    let mut out = Vec::new();
    go(
        0,
        &mut multidegree.to_vec(),
        &atoms,
        &mut Vec::new(),
        &mut out,
    );
    out
}

/// Rank of the evaluation matrix (spanning products x sample points).
/// Never exceeds the true dimension of their span.
pub fn graded_dimension_estimate(spanning: &[Vec<Vec<u8>>], points: &[SamplePoint]) -> usize {
    if spanning.is_empty() || points.is_empty() {
        return 0;
    }
    let rows: Vec<Vec<Rat>> = spanning
        .iter()
        .map(|prod| {
            points
                .iter()
                .map(|pt| Rat::from_bigint(pt.trace_product(prod)))
                .collect()
        })
        .collect();
    rank(&RatMatrix::from_rows(points.len(), rows))
}

/// Estimated dimension of the multidegree component of the algebra
/// generated by traces of words in `d = multidegree.len()` matrices;
/// `traceless` selects traceless matrices.
pub fn invariant_dimension(multidegree: &[u32], traceless: bool, bound: i64, seed: u64) -> usize {
    let spanning = trace_products(multidegree, !traceless);
    let points = SamplePoint::batch(
        multidegree.len(),
        bound,
        seed,
        spanning.len() + 4,
        traceless,
    );
    graded_dimension_estimate(&spanning, &points)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::trace_expr;

    #[test]
    fn points_are_traceless_and_bounded() {
        for seed in 0..50 {
            let pt = SamplePoint::random(4, DEFAULT_BOUND, seed);
            for i in 1..=4 {
                let m = pt.matrix(i);
                assert_eq!(m[0][0] + m[1][1] + m[2][2], 0);
                assert!(m.iter().flatten().all(|x| x.abs() <= DEFAULT_BOUND));
            }
            assert_eq!(pt, SamplePoint::random(4, DEFAULT_BOUND, seed));
        }
    }

    #[test]
    fn trace_evaluation() {
        let pt = SamplePoint::random(3, DEFAULT_BOUND, 7);
        assert_eq!(pt.trace_of_word(&[1]), 0);
        assert_eq!(pt.trace_of_word(&[1, 2, 3]), pt.trace_of_word(&[2, 3, 1]));
        let e = trace_expr("tr(x1x2)tr(x3^2) - 2tr(x1x2x3)").unwrap();
        let v = numeric_eval(&e, &pt).unwrap();
        let direct = pt.trace_of_word(&[1, 2]) * pt.trace_of_word(&[3, 3])
            - 2 * pt.trace_of_word(&[1, 2, 3]);
        assert_eq!(v, Rat::from_bigint(BigInt::from(direct)));
        assert!(numeric_eval(&trace_expr("tr(x4^2)").unwrap(), &pt).is_err());
    }

    #[test]
    fn cyclic_word_counts() {
        assert_eq!(cyclic_words(&[1, 1, 1]).len(), 2);
        assert_eq!(cyclic_words(&[2, 2]).len(), 2);
        assert_eq!(trace_products(&[1, 1, 1], true).len(), 6);
        assert_eq!(trace_products(&[1, 1, 1], false).len(), 2);
    }

    #[test]
    fn oracle_dimensions() {
        assert_eq!(invariant_dimension(&[1, 1, 1], false, DEFAULT_BOUND, 1), 6);
        let deg2: usize = [
            [2, 0, 0],
            [0, 2, 0],
            [0, 0, 2],
            [1, 1, 0],
            [1, 0, 1],
            [0, 1, 1],
        ]
        .iter()
        .map(|m| invariant_dimension(m, true, DEFAULT_BOUND, 1))
        .sum();
        assert_eq!(deg2, 6);
        assert_eq!(
            graded_dimension_estimate(&[], &SamplePoint::batch(2, 5, 0, 3, true)),
            0
        );
    }
}
