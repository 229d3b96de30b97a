//! Generic traceless 3x3 matrices and traces of words in them.

use std::fmt;
use std::sync::Arc;

use parking_lot::Mutex;
use rustc_hash::FxHashMap;

use crate::catalog::CyclicWord;
use crate::error::{Error, Result};
use crate::exactnum::Rat;
use crate::mpoly::{Poly, VarId, MAX_MATRICES};
use crate::partitions::Partition;

/// How the first matrix is specialized.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mode {
    /// `x1 = diag(a, b, -a-b)`; the others are generic traceless.
    DiagonalFirst,
    /// Every matrix is generic traceless.
    FullGeneric,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::DiagonalFirst => "diag",
            Mode::FullGeneric => "full",
        })
    }
}

/// A 3x3 matrix with polynomial entries.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GenericMatrix {
    entries: [[Poly; 3]; 3],
}

impl GenericMatrix {
    pub fn zero() -> GenericMatrix {
        GenericMatrix {
            entries: Default::default(),
        }
    }

    pub fn identity() -> GenericMatrix {
        let mut m = GenericMatrix::zero();
        for i in 0..3 {
            m.entries[i][i] = Poly::one();
        }
        m
    }

    pub fn from_entries(entries: [[Poly; 3]; 3]) -> GenericMatrix {
        GenericMatrix { entries }
    }

    /// Entry in row `p`, column `q` (0-based).
    pub fn entry(&self, p: usize, q: usize) -> &Poly {
        &self.entries[p][q]
    }

    pub fn trace(&self) -> Poly {
        &(&self.entries[0][0] + &self.entries[1][1]) + &self.entries[2][2]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().flatten().all(|p| p.is_zero())
    }

    pub fn mul(&self, other: &GenericMatrix) -> GenericMatrix {
        let mut out = GenericMatrix::zero();
        for p in 0..3 {
            for q in 0..3 {
                let mut acc = Poly::zero();
                for r in 0..3 {
                    let a = &self.entries[p][r];
                    let b = &other.entries[r][q];
                    if !a.is_zero() && !b.is_zero() {
                        acc.add_scaled(&(a * b), &Rat::one());
                    }
                }
                out.entries[p][q] = acc;
            }
        }
        out
    }

    /// `tr(self * other)` without forming the full product.
    pub fn trace_of_product(&self, other: &GenericMatrix) -> Poly {
        let mut acc = Poly::zero();
        for p in 0..3 {
            for r in 0..3 {
                let a = &self.entries[p][r];
                let b = &other.entries[r][p];
                if !a.is_zero() && !b.is_zero() {
                    acc.add_scaled(&(a * b), &Rat::one());
                }
            }
        }
        acc
    }

    pub fn add(&self, other: &GenericMatrix) -> GenericMatrix {
        let mut out = self.clone();
        out.add_scaled(other, &Rat::one());
        out
    }

    pub fn add_scaled(&mut self, other: &GenericMatrix, c: &Rat) {
        for p in 0..3 {
            for q in 0..3 {
                self.entries[p][q].add_scaled(&other.entries[p][q], c);
            }
        }
    }

    pub fn scale(&self, c: &Rat) -> GenericMatrix {
        let mut out = GenericMatrix::zero();
        out.add_scaled(self, c);
        out
    }
}

/// The matrices `x_1..x_d` together with evaluation caches.
pub struct MatrixContext {
    d: usize,
    mode: Mode,
    matrices: Vec<GenericMatrix>,
    prefixes: Mutex<FxHashMap<Vec<u8>, Arc<GenericMatrix>>>,
    traces: Mutex<FxHashMap<CyclicWord, Arc<Poly>>>,
}

impl fmt::Debug for MatrixContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("MatrixContext")
            .field("d", &self.d)
            .field("mode", &self.mode)
            .finish()
    }
}

/// Positions of the eight free coordinates of a traceless matrix.
pub const FREE_POSITIONS: [(usize, usize); 8] = [
    (0, 0),
    (0, 1),
    (0, 2),
    (1, 0),
    (1, 1),
    (1, 2),
    (2, 0),
    (2, 1),
];

fn traceless_generic(i: usize) -> GenericMatrix {
    let mut m = GenericMatrix::zero();
    for &(p, q) in &FREE_POSITIONS {
        m.entries[p][q] = Poly::var(VarId::entry(i, p + 1, q + 1));
    }
    m.entries[2][2] = -(&m.entries[0][0] + &m.entries[1][1]);
    m
}

fn traceless_diagonal(i: usize) -> GenericMatrix {
    let mut m = GenericMatrix::zero();
    m.entries[0][0] = Poly::var(VarId::entry(i, 1, 1));
    m.entries[1][1] = Poly::var(VarId::entry(i, 2, 2));
    m.entries[2][2] = -(&m.entries[0][0] + &m.entries[1][1]);
    m
}

/// Builds `x_1..x_d` in the requested mode.
pub fn make_context(d: usize, mode: Mode) -> Result<MatrixContext> {
    if d < 2 {
        return Err(Error::TooFewMatrices(d));
    }
    if d > MAX_MATRICES {
        return Err(Error::OutOfScope(format!(
            "at most {MAX_MATRICES} matrices (got {d})"
        )));
    }
    let matrices = (1..=d)
        .map(|i| {
            if i == 1 && mode == Mode::DiagonalFirst {
                traceless_diagonal(i)
            } else {
                traceless_generic(i)
            }
        })
        .collect();
    Ok(MatrixContext {
        d,
        mode,
        matrices,
        prefixes: Mutex::new(FxHashMap::default()),
        traces: Mutex::new(FxHashMap::default()),
    })
}

impl MatrixContext {
    pub fn d(&self) -> usize {
        self.d
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    /// Matrix `x_i`, `i` starting at 1.
    pub fn matrix(&self, i: usize) -> Result<&GenericMatrix> {
        if i == 0 || i > self.d {
            return Err(Error::IndexOutOfRange {
                index: i,
                d: self.d,
            });
        }
        Ok(&self.matrices[i - 1])
    }

    /// Entry variables actually used by the matrices.
    pub fn variables(&self) -> Vec<VarId> {
        let mut vs: Vec<VarId> = self
            .matrices
            .iter()
            .flat_map(|m| m.entries.iter().flatten().flat_map(|p| p.variables()))
            .collect();
        vs.sort_unstable();
        vs.dedup();
        vs
    }

    pub fn variable_count(&self) -> usize {
        self.variables().len()
    }

    fn check_letters(&self, word: &[u8]) -> Result<()> {
        match word.iter().find(|&&l| l == 0 || l as usize > self.d) {
            Some(&l) => Err(Error::IndexOutOfRange {
                index: l as usize,
                d: self.d,
            }),
            None => Ok(()),
        }
    }

    /// Product `x_{w1} ... x_{wk}`, memoized on prefixes.
    pub fn word_product(&self, word: &[u8]) -> Result<Arc<GenericMatrix>> {
        self.check_letters(word)?;
        Ok(self.product_unchecked(word))
    }

    fn product_unchecked(&self, word: &[u8]) -> Arc<GenericMatrix> {
        match word.len() {
            0 => return Arc::new(GenericMatrix::identity()),
            1 => return Arc::new(self.matrices[word[0] as usize - 1].clone()),
            _ => {}
        }
        if let Some(m) = self.prefixes.lock().get(word) {
            return m.clone();
        }
        let head = self.product_unchecked(&word[..word.len() - 1]);
        let last = &self.matrices[word[word.len() - 1] as usize - 1];
        let m = Arc::new(head.mul(last));
        self.prefixes.lock().insert(word.to_vec(), m.clone());
        m
    }

    /// `tr(x_{w1} ... x_{wk})`.
    pub fn trace_of_word(&self, word: &[u8]) -> Result<Poly> {
        self.check_letters(word)?;
        Ok((*self.trace_of_cyclic(&CyclicWord::new(word))).clone())
    }

    /// Trace of a word already in canonical rotation (memoized).
    pub fn trace_of_cyclic(&self, w: &CyclicWord) -> Arc<Poly> {
        if let Some(p) = self.traces.lock().get(w) {
            return p.clone();
        }
        let letters = w.letters();
        let p = match letters.len() {
            0 => Poly::constant(Rat::from_int(3)),
            1 => self.matrices[letters[0] as usize - 1].trace(),
            n => {
                let head = self.product_unchecked(&letters[..n - 1]);
                head.trace_of_product(&self.matrices[letters[n - 1] as usize - 1])
            }
        };
        let p = Arc::new(p);
        self.traces.lock().insert(w.clone(), p.clone());
        p
    }

    /// Drops memoized products and traces.
    pub fn clear_caches(&self) {
        self.prefixes.lock().clear();
        self.traces.lock().clear();
    }
}

/// Sign-alternating sum over all orderings, by expansion along the first
/// position: `s_k(y_1..y_k) = sum_i (-1)^(i-1) y_i s_{k-1}(.. without y_i ..)`.
fn standard_recursive(ctx: &MatrixContext, args: &[u8]) -> GenericMatrix {
    if args.len() == 1 {
        return ctx.matrices[args[0] as usize - 1].clone();
    }
    let mut acc = GenericMatrix::zero();
    for i in 0..args.len() {
        let rest: Vec<u8> = args
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, &a)| a)
            .collect();
        let tail = standard_recursive(ctx, &rest);
        let term = ctx.matrices[args[i] as usize - 1].mul(&tail);
        acc.add_scaled(&term, &Rat::from_int(if i % 2 == 0 { 1 } else { -1 }));
    }
    acc
}

/// All permutations of `0..k` with their signs, in lexicographic order.
pub fn signed_permutations(k: usize) -> Vec<(Vec<usize>, i64)> {
    fn go(
        avail: &mut Vec<usize>,
        cur: &mut Vec<usize>,
        sign: i64,
        out: &mut Vec<(Vec<usize>, i64)>,
    ) {
        if avail.is_empty() {
            out.push((cur.clone(), sign));
            return;
        }
        for i in 0..avail.len() {
            let v = avail.remove(i);
            cur.push(v);
            // choosing the i-th smallest remaining element contributes i inversions
            go(avail, cur, if i % 2 == 0 { sign } else { -sign }, out);
            cur.pop();
            avail.insert(i, v);
        }
    }
    let mut out = Vec::new();
    go(&mut (0..k).collect(), &mut Vec::new(), 1, &mut out);
    out
}

fn standard_literal(ctx: &MatrixContext, args: &[u8]) -> GenericMatrix {
    let mut acc = GenericMatrix::zero();
    for (perm, sign) in signed_permutations(args.len()) {
        let word: Vec<u8> = perm.iter().map(|&i| args[i]).collect();
        acc.add_scaled(&ctx.product_unchecked(&word), &Rat::from_int(sign));
    }
    acc
}

/// Standard polynomial `s_k(x_{a1}, ..., x_{ak})` for `2 <= k <= 5`.
pub fn standard_poly_matrix(ctx: &MatrixContext, k: usize, args: &[u8]) -> Result<GenericMatrix> {
    if !(2..=5).contains(&k) {
        return Err(Error::StandardPolyDegree(k));
    }
    if args.len() != k {
        return Err(Error::OutOfScope(format!(
            "s_{k} needs {k} arguments, got {}",
            args.len()
        )));
    }
    ctx.check_letters(args)?;
    Ok(if k == 5 {
        standard_recursive(ctx, args)
    } else {
        standard_literal(ctx, args)
    })
}

/// The literal alternating sum over all `k!` orderings (reference
/// implementation for testing the recursive expansion).
pub fn standard_poly_matrix_literal(ctx: &MatrixContext, args: &[u8]) -> Result<GenericMatrix> {
    ctx.check_letters(args)?;
    Ok(standard_literal(ctx, args))
}

/// `tr(s_{k1}(x_1..x_{k1}) ... s_{kp}(x_1..x_{kp}))` where `k_j` are the
/// column lengths of `lambda`.
pub fn canonical_hwv_trace(ctx: &MatrixContext, lambda: &Partition) -> Result<Poly> {
    if lambda.rows() > ctx.d() {
        return Err(Error::TooManyRows {
            lambda: lambda.to_string(),
            d: ctx.d(),
        });
    }
    if lambda.rows() > 5 {
        return Err(Error::StandardPolyDegree(lambda.rows()));
    }
    let mut acc = GenericMatrix::identity();
    for &k in lambda.conjugate().parts() {
        let args: Vec<u8> = (1..=k as u8).collect();
        let s = if k == 1 {
            ctx.matrices[0].clone()
        } else {
            standard_poly_matrix(ctx, k as usize, &args)?
        };
        acc = acc.mul(&s);
    }
    Ok(acc.trace())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;

    #[test]
    fn variable_counts() {
        assert_eq!(
            make_context(3, Mode::DiagonalFirst)
                .unwrap()
                .variable_count(),
            18
        );
        assert_eq!(
            make_context(2, Mode::FullGeneric).unwrap().variable_count(),
            16
        );
        assert_eq!(
            make_context(1, Mode::FullGeneric).unwrap_err(),
            Error::TooFewMatrices(1)
        );
    }

    #[test]
    fn traces_basic() {
        let ctx = make_context(3, Mode::DiagonalFirst).unwrap();
        for i in 1..=3u8 {
            assert!(ctx.trace_of_word(&[i]).unwrap().is_zero());
            assert!(ctx.matrix(i as usize).unwrap().trace().is_zero());
        }
        assert_eq!(
            ctx.trace_of_word(&[1, 2]).unwrap(),
            ctx.trace_of_word(&[2, 1]).unwrap()
        );
        let a = Poly::var(VarId::entry(1, 1, 1));
        let b = Poly::var(VarId::entry(1, 2, 2));
        let expect = &(&a.pow(2) + &b.pow(2)) + &(&a + &b).pow(2);
        assert_eq!(ctx.trace_of_word(&[1, 1]).unwrap(), expect);
        assert!(ctx.trace_of_word(&[1, 4]).is_err());
    }

    #[test]
    fn rotation_invariance() {
        let ctx = make_context(3, Mode::FullGeneric).unwrap();
        let w = [1u8, 2, 2, 3, 1];
        let t0 = ctx.trace_of_word(&w).unwrap();
        let direct = ctx.word_product(&w).unwrap().trace();
        assert_eq!(t0, direct);
        for r in 1..w.len() {
            let mut rot = w.to_vec();
            rot.rotate_left(r);
            assert_eq!(ctx.word_product(&rot).unwrap().trace(), t0);
        }
    }

    #[test]
    fn standard_polynomials() {
        let ctx = make_context(4, Mode::FullGeneric).unwrap();
        let s2 = standard_poly_matrix(&ctx, 2, &[1, 2]).unwrap();
        let comm = ctx
            .word_product(&[1, 2])
            .unwrap()
            .add(&ctx.word_product(&[2, 1]).unwrap().scale(&Rat::from_int(-1)));
        assert_eq!(s2, comm);
        assert!(standard_poly_matrix(&ctx, 3, &[1, 1, 2]).unwrap().is_zero());
        assert!(!standard_poly_matrix(&ctx, 3, &[1, 2, 3])
            .unwrap()
            .trace()
            .is_zero());
        for k in 2..=4u8 {
            let args: Vec<u8> = (1..=k).collect();
            assert_eq!(
                standard_recursive(&ctx, &args),
                standard_poly_matrix_literal(&ctx, &args).unwrap()
            );
        }
        assert_eq!(
            standard_poly_matrix(&ctx, 6, &[1, 2, 3, 4, 1, 2]).unwrap_err(),
            Error::StandardPolyDegree(6)
        );
        assert_eq!(signed_permutations(3).iter().map(|p| p.1).sum::<i64>(), 0);
    }

    #[test]
    fn canonical_vectors() {
        let ctx = make_context(3, Mode::DiagonalFirst).unwrap();
        assert_eq!(
            canonical_hwv_trace(&ctx, &part![2]).unwrap(),
            ctx.trace_of_word(&[1, 1]).unwrap()
        );
        let s3 = standard_poly_matrix(&ctx, 3, &[1, 2, 3]).unwrap();
        assert_eq!(
            canonical_hwv_trace(&ctx, &part![1, 1, 1]).unwrap(),
            s3.trace()
        );
        assert_eq!(
            canonical_hwv_trace(&ctx, &part![2, 1, 1]).unwrap(),
            s3.trace_of_product(ctx.matrix(1).unwrap())
        );
        assert!(canonical_hwv_trace(&ctx, &part![1, 1, 1, 1]).is_err());
    }
}
