//! Raising operators of `GL_d`, highest weight tests, the tableau basis of
//! an irreducible module and ansatz solving for highest weight vectors.

use std::fmt;
use std::hash::Hash;

use num_bigint::BigInt;
use rustc_hash::FxHashMap;

use crate::catalog::{expand, CyclicWord, TraceExpr, TraceMonomial};
use crate::error::{Error, Result};
use crate::exactnum::{EchelonBuilder, Rat};
use crate::genmat::{MatrixContext, FREE_POSITIONS};
use crate::mpoly::{Poly, VarId, VarKind};
use crate::partitions::{ssyt_enumerate, Partition};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OpKind {
    /// Derivation sending `x_j` to `x_i`.
    Delta,
    /// Substitution `x_j -> x_i + x_j`.
    G,
}

/// `Delta_ij` or `g_ij` with `1 <= i < j <= d`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PolarizationOp {
    kind: OpKind,
    i: usize,
    j: usize,
}

impl PolarizationOp {
    pub fn new(kind: OpKind, i: usize, j: usize, d: usize) -> Result<PolarizationOp> {
        if i == 0 || i >= j || j > d {
            return Err(Error::OutOfScope(format!(
                "raising operator needs 1 <= i < j <= {d}, got ({i},{j})"
            )));
        }
        Ok(PolarizationOp { kind, i, j })
    }

    pub fn kind(&self) -> OpKind {
        self.kind
    }

    pub fn source(&self) -> usize {
        self.i
    }

    pub fn target(&self) -> usize {
        self.j
    }

    /// All operators of one kind for `d` matrices.
    pub fn all(kind: OpKind, d: usize) -> Vec<PolarizationOp> {
        let mut out = Vec::new();
        for i in 1..=d {
            for j in i + 1..=d {
                out.push(PolarizationOp { kind, i, j });
            }
        }
        out
    }
}

impl fmt::Display for PolarizationOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self.kind {
            OpKind::Delta => "Delta",
            OpKind::G => "g",
        };
        write!(f, "{name}_{}{}", self.i, self.j)
    }
}

/// Image of the free entry variables of `x_j` under the operator, or
/// `None` for variables of other matrices.
fn entry_image(op: &PolarizationOp, v: VarId, ctx: &MatrixContext) -> Option<Poly> {
    let VarKind::Entry { mat, p, q } = v.kind() else {
        return None;
    };
    if mat != op.j {
        return None;
    }
    let src = ctx
        .matrix(op.i)
        .expect("operator indices checked against d")
        .entry(p - 1, q - 1)
        .clone();
    Some(match op.kind {
        OpKind::Delta => src,
        OpKind::G => &src + &Poly::var(v),
    })
}

/// Applies the operator to a polynomial in matrix entries.
pub fn apply_polarization(op: &PolarizationOp, p: &Poly, ctx: &MatrixContext) -> Result<Poly> {
    if op.j > ctx.d() {
        return Err(Error::IndexOutOfRange {
            index: op.j,
            d: ctx.d(),
        });
    }
    debug_assert!(FREE_POSITIONS.len() == 8);
    Ok(match op.kind {
        OpKind::Delta => p.derive(|v| entry_image(op, v, ctx)),
        OpKind::G => p.substitute(|v| entry_image(op, v, ctx)),
    })
}

fn check_multidegree(found: Option<Vec<u32>>, lambda: &Partition, d: usize) -> Result<()> {
    if lambda.rows() > d {
        return Err(Error::TooManyRows {
            lambda: lambda.to_string(),
            d,
        });
    }
    let expected = lambda.padded(d);
    match found {
        None => Err(Error::Multidegree {
            expected: format!("{expected:?}"),
            found: "mixed".into(),
        }),
        Some(f) if f != expected => Err(Error::Multidegree {
            expected: format!("{expected:?}"),
            found: format!("{f:?}"),
        }),
        _ => Ok(()),
    }
}

/// All `Delta_ij p` vanish.
pub fn is_hwv_delta(p: &Poly, ctx: &MatrixContext) -> bool {
    PolarizationOp::all(OpKind::Delta, ctx.d())
        .iter()
        .all(|op| apply_polarization(op, p, ctx).expect("in range").is_zero())
}

/// All `g_ij p = p`.
pub fn is_hwv_g(p: &Poly, ctx: &MatrixContext) -> bool {
    PolarizationOp::all(OpKind::G, ctx.d())
        .iter()
        .all(|op| apply_polarization(op, p, ctx).expect("in range") == *p)
}

/// Highest weight test for an expanded polynomial of multidegree `lambda`.
/// Both criteria are evaluated and must agree.
pub fn is_hwv(p: &Poly, lambda: &Partition, ctx: &MatrixContext) -> Result<bool> {
    if !p.is_zero() {
        check_multidegree(p.matrix_multidegree(ctx.d()), lambda, ctx.d())?;
    }
    let by_delta = is_hwv_delta(p, ctx);
    let by_g = is_hwv_g(p, ctx);
    assert_eq!(
        by_delta, by_g,
        "Delta and g highest weight criteria disagree"
    );
    Ok(by_delta)
}

/// `Delta_ij` on formal trace expressions.
pub fn delta_formal(e: &TraceExpr, i: u8, j: u8) -> TraceExpr {
    e.map_monomials(|m| {
        let mut out = TraceExpr::zero();
        let atoms = m.atoms();
        for (k, w) in atoms.iter().enumerate() {
            let letters = w.letters();
            for (pos, &l) in letters.iter().enumerate() {
                if l != j {
                    continue;
                }
                let mut nw = letters.to_vec();
                nw[pos] = i;
                let new_atoms = atoms.iter().enumerate().map(|(t, a)| {
                    if t == k {
                        CyclicWord::new(&nw)
                    } else {
                        a.clone()
                    }
                });
                out.add_term(TraceMonomial::from_atoms(new_atoms), Rat::one());
            }
        }
        out
    })
}

fn g_atom(w: &CyclicWord, i: u8, j: u8) -> TraceExpr {
    let letters = w.letters();
    let js: Vec<usize> = (0..letters.len()).filter(|&p| letters[p] == j).collect();
    let mut out = TraceExpr::zero();
    for mask in 0u32..(1 << js.len()) {
        let mut nw = letters.to_vec();
        for (b, &p) in js.iter().enumerate() {
            if mask & (1 << b) != 0 {
                nw[p] = i;
            }
        }
        out.add_term(
            TraceMonomial::from_atoms([CyclicWord::new(&nw)]),
            Rat::one(),
        );
    }
    out
}

/// `g_ij` on formal trace expressions.
pub fn g_formal(e: &TraceExpr, i: u8, j: u8) -> TraceExpr {
    let mut cache: FxHashMap<CyclicWord, TraceExpr> = FxHashMap::default();
    let mut out = TraceExpr::zero();
    for (m, c) in e.terms() {
        let mut acc = TraceExpr::constant(Rat::one());
        for w in m.atoms() {
            let img = cache.entry(w.clone()).or_insert_with(|| g_atom(w, i, j));
            acc = acc.mul(img);
        }
        out.add_scaled(&acc, c);
    }
    out
}

/// Formal highest weight test (symmetric-algebra level) for letters
/// `1..=d`. Both criteria are evaluated and must agree.
pub fn is_hwv_formal(e: &TraceExpr, lambda: &Partition, d: usize) -> Result<bool> {
    if !e.is_zero() {
        let n = d.max(e.max_letter() as usize);
        let found = e
            .multidegree(n)
            .and_then(|v| v[d..].iter().all(|&x| x == 0).then(|| v[..d].to_vec()));
        check_multidegree(found, lambda, d)?;
    }
    let mut by_delta = true;
    let mut by_g = true;
    for i in 1..=d as u8 {
        for j in i + 1..=d as u8 {
            by_delta &= delta_formal(e, i, j).is_zero();
            by_g &= g_formal(e, i, j) == *e;
        }
    }
    assert_eq!(
        by_delta, by_g,
        "Delta and g highest weight criteria disagree"
    );
    Ok(by_delta)
}

/// Fresh letter standing for `x_{i,q}`.
fn fresh(i: u8, q: u8) -> u8 {
    10 * i + q
}

/// The component of `w(x_11 + ... + x_1d, x_22 + ... + x_2d, ..., x_dd)`
/// of degree `b[i][q]` in `x_{i,q}`, in fresh letters.
fn substituted_component(e: &TraceExpr, b: &[Vec<u32>]) -> TraceExpr {
    let d = b.first().map_or(0, |r| r.len());
    e.map_monomials(|m| {
        let atoms = m.atoms();
        // occurrences of each letter, as (atom index, position)
        let mut occ: Vec<Vec<(usize, usize)>> = vec![Vec::new(); d + 1];
        for (k, w) in atoms.iter().enumerate() {
            for (p, &l) in w.letters().iter().enumerate() {
                occ[l as usize].push((k, p));
            }
        }
        let mut out = TraceExpr::zero();
        let mut words: Vec<Vec<u8>> = atoms.iter().map(|w| w.letters().to_vec()).collect();
        fn assign(
            letter: usize,
            slot: usize,
            counts: &mut Vec<Vec<u32>>,
            occ: &[Vec<(usize, usize)>],
            words: &mut Vec<Vec<u8>>,
            out: &mut TraceExpr,
        ) {
            let d = counts.len();
            if letter > d {
                let mono = TraceMonomial::from_atoms(words.iter().map(|w| CyclicWord::new(w)));
                out.add_term(mono, Rat::one());
                return;
            }
            if slot == occ[letter].len() {
                if counts[letter - 1].iter().all(|&c| c == 0) {
                    assign(letter + 1, 0, counts, occ, words, out);
                }
                return;
            }
            let (k, p) = occ[letter][slot];
            for q in letter..=d {
                if counts[letter - 1][q - 1] == 0 {
                    continue;
                }
                counts[letter - 1][q - 1] -= 1;
                words[k][p] = fresh(letter as u8, q as u8);
                assign(letter, slot + 1, counts, occ, words, out);
                counts[letter - 1][q - 1] += 1;
            }
            words[k][p] = letter as u8;
        }
        let mut counts: Vec<Vec<u32>> = (0..d)
            .map(|i| b.get(i).cloned().unwrap_or_else(|| vec![0; d]))
            .collect();
        assign(1, 0, &mut counts, &occ, &mut words, &mut out);
        out
    })
}

/// The basis `{v_T}` of the module generated by a highest weight vector,
/// one element per semistandard tableau in `ssyt_enumerate` order.
pub fn tableau_basis(hwv: &TraceExpr, lambda: &Partition, d: usize) -> Result<Vec<TraceExpr>> {
    if d > 9 {
        return Err(Error::OutOfScope(format!(
            "tableau basis supports at most 9 matrices (got {d})"
        )));
    }
    if !is_hwv_formal(hwv, lambda, d)? || hwv.is_zero() {
        return Err(Error::NotHighestWeight);
    }
    Ok(ssyt_enumerate(lambda, d)
        .iter()
        .map(|t| {
            let mut b = t.row_contents(d);
            b.resize(d, vec![0; d]);
            let u = substituted_component(hwv, &b);
            u.relabel(|l| if l >= 10 { l % 10 } else { l })
        })
        .collect())
}

fn solve_columns<K: Ord + Hash + Clone>(
    columns: Vec<FxHashMap<K, Rat>>,
    n: usize,
) -> Vec<Vec<BigInt>> {
    let mut rows: FxHashMap<K, Vec<Rat>> = FxHashMap::default();
    for (k, col) in columns.into_iter().enumerate() {
        for (key, c) in col {
            rows.entry(key).or_insert_with(|| vec![Rat::zero(); n])[k] = c;
        }
    }
    let mut keys: Vec<K> = rows.keys().cloned().collect();
    keys.sort();
    let mut eb = EchelonBuilder::new(n);
    for k in keys {
        if eb.is_full_rank() {
            break;
        }
        eb.push(&rows[&k]);
    }
    eb.nullspace()
}

/// Coefficient vectors `z` such that `sum z_k terms_k` is fixed by every
/// `g_ij`, evaluated on the matrices of `ctx`.
pub fn hwv_ansatz_solve(
    terms: &[TraceExpr],
    lambda: &Partition,
    ctx: &MatrixContext,
) -> Result<Vec<Vec<BigInt>>> {
    let mut columns = Vec::with_capacity(terms.len());
    let ops = PolarizationOp::all(OpKind::G, ctx.d());
    for t in terms {
        let p = expand(t, ctx)?;
        if !p.is_zero() {
            check_multidegree(p.matrix_multidegree(ctx.d()), lambda, ctx.d())?;
        }
        let mut col = FxHashMap::default();
        for (k, op) in ops.iter().enumerate() {
            let diff = &apply_polarization(op, &p, ctx)? - &p;
            for (m, c) in diff.into_terms() {
                col.insert((k, m), c);
            }
        }
        columns.push(col);
    }
    Ok(solve_columns(columns, terms.len()))
}

/// Same as [`hwv_ansatz_solve`] with the trace atoms kept formal.
pub fn hwv_ansatz_solve_formal(
    terms: &[TraceExpr],
    lambda: &Partition,
    d: usize,
) -> Result<Vec<Vec<BigInt>>> {
    let mut columns = Vec::with_capacity(terms.len());
    for t in terms {
        if !t.is_zero() {
            check_multidegree(t.multidegree(d), lambda, d)?;
        }
        let mut col = FxHashMap::default();
        let mut k = 0;
        for i in 1..=d as u8 {
            for j in i + 1..=d as u8 {
                let diff = g_formal(t, i, j).sub(t);
                for (m, c) in diff.terms() {
                    col.insert((k, m.clone()), c.clone());
                }
                k += 1;
            }
        }
        columns.push(col);
    }
    Ok(solve_columns(columns, terms.len()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::trace_expr;
    use crate::genmat::{canonical_hwv_trace, make_context, Mode};
    use crate::part;

    fn expanded(src: &str, ctx: &MatrixContext) -> Poly {
        expand(&trace_expr(src).unwrap(), ctx).unwrap()
    }

    #[test]
    fn guard_rejects_bad_indices() {
        assert!(PolarizationOp::new(OpKind::Delta, 2, 1, 3).is_err());
        assert!(PolarizationOp::new(OpKind::G, 1, 4, 3).is_err());
        assert!(PolarizationOp::new(OpKind::G, 0, 1, 3).is_err());
        assert_eq!(PolarizationOp::all(OpKind::Delta, 4).len(), 6);
    }

    #[test]
    fn polarization_examples() {
        for mode in [Mode::DiagonalFirst, Mode::FullGeneric] {
            let ctx = make_context(2, mode).unwrap();
            let d12 = PolarizationOp::new(OpKind::Delta, 1, 2, 2).unwrap();
            let g12 = PolarizationOp::new(OpKind::G, 1, 2, 2).unwrap();
            let lhs = apply_polarization(&d12, &expanded("tr(x2^2)", &ctx), &ctx).unwrap();
            assert_eq!(lhs, expanded("2tr(x1x2)", &ctx));
            let lhs = apply_polarization(&g12, &expanded("tr(x1x2)", &ctx), &ctx).unwrap();
            assert_eq!(lhs, expanded("tr(x1^2) + tr(x1x2)", &ctx));
        }
    }

    #[test]
    fn canonical_vectors_are_hwv() {
        let ctx = make_context(3, Mode::DiagonalFirst).unwrap();
        for lambda in [
            part![2],
            part![2, 2],
            part![1, 1, 1],
            part![2, 1, 1],
            part![3, 1, 1],
            part![3, 3],
        ] {
            let p = canonical_hwv_trace(&ctx, &lambda).unwrap();
            assert!(!p.is_zero());
            assert!(is_hwv(&p, &lambda, &ctx).unwrap(), "{lambda:?}");
        }
        let p = expanded("tr(x2^2)", &ctx);
        assert!(!is_hwv_delta(&p, &ctx));
        assert!(matches!(
            is_hwv(&p, &part![2], &ctx),
            Err(Error::Multidegree { .. })
        ));
        assert!(is_hwv(&expanded("tr(x1^2)", &ctx), &part![2], &ctx).unwrap());
    }

    #[test]
    fn formal_operators() {
        let e = trace_expr("tr(x2^2)").unwrap();
        assert_eq!(delta_formal(&e, 1, 2), trace_expr("2tr(x1x2)").unwrap());
        assert_eq!(
            g_formal(&e, 1, 2),
            trace_expr("tr(x1^2)+2tr(x1x2)+tr(x2^2)").unwrap()
        );
        let u = trace_expr("tr(x1^2)tr(x2^2) - tr^2(x1x2)").unwrap();
        assert!(is_hwv_formal(&u, &part![2, 2], 2).unwrap());
        assert!(!is_hwv_formal(&trace_expr("tr(x1^2)tr(x2^2)").unwrap(), &part![2, 2], 2).unwrap());
    }

    #[test]
    fn tableau_basis_small() {
        let b = tableau_basis(&trace_expr("tr(x1^2)").unwrap(), &part![2], 2).unwrap();
        let expect: Vec<TraceExpr> = ["tr(x1^2)", "2tr(x1x2)", "tr(x2^2)"]
            .iter()
            .map(|s| trace_expr(s).unwrap())
            .collect();
        assert_eq!(b, expect);
        let s3 = trace_expr("tr(s3(x1,x2,x3))").unwrap();
        let b = tableau_basis(&s3, &part![1, 1, 1], 3).unwrap();
        assert_eq!(b, vec![s3]);
        assert_eq!(
            tableau_basis(&trace_expr("tr(x1x2)").unwrap(), &part![1, 1], 2),
            Err(Error::NotHighestWeight)
        );
    }

    #[test]
    fn zeta_example() {
        let u = |a: u8, b: u8| format!("(tr(x{a}^2)tr(x{b}^2) - tr^2(x{a}x{b}))");
        let v =
            |a: u8, b: u8, c: u8| format!("(tr(x{a}^2)tr(x{b}x{c}) - tr(x{a}x{b})tr(x{a}x{c}))");
        let srcs = [
            format!("tr(x1^3){}", u(2, 3)),
            format!("tr(x1^2x2){}", v(3, 1, 2)),
            format!("tr(x1^2x3){}", v(2, 1, 3)),
            format!("tr(x1x2^2){}", u(1, 3)),
            format!("tr(x1(x2x3+x3x2)){}", v(1, 2, 3)),
            format!("tr(x1x3^2){}", u(1, 2)),
        ];
        let terms: Vec<TraceExpr> = srcs.iter().map(|s| trace_expr(s).unwrap()).collect();
        let expect: Vec<BigInt> = [1, -2, -2, 1, -1, 1]
            .iter()
            .map(|&x| BigInt::from(x))
            .collect();
        assert_eq!(
            hwv_ansatz_solve_formal(&terms, &part![3, 2, 2], 3).unwrap(),
            vec![expect.clone()]
        );
        let ctx = make_context(3, Mode::DiagonalFirst).unwrap();
        assert_eq!(
            hwv_ansatz_solve(&terms, &part![3, 2, 2], &ctx).unwrap(),
            vec![expect]
        );
    }
}
