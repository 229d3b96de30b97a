//! Property bodies and input strategies, shared by the property suites and
//! the acceptance run.

#![allow(dead_code)]

use proptest::prelude::*;
use proptest::test_runner::TestCaseError;
use trace3::catalog::{expand, TraceExpr};
use trace3::exactnum::{nullspace, rank, EchelonBuilder, Rat, RatMatrix};
use trace3::genmat::{make_context, Mode};
use trace3::glaction::{apply_polarization, delta_formal, g_formal, OpKind, PolarizationOp};
use trace3::mpoly::{Monomial, Poly};
use trace3::partitions::{
    schur_poly_bialternant, schur_poly_tableaux, ssyt_enumerate, weyl_dim, Partition,
};

pub const CASES: u32 = 128;

pub fn poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec(((0u32..3, 0u32..3, 0u32..3), -6i64..=6, 1i64..=3), 0..6).prop_map(
        |terms| {
            Poly::from_terms(
                terms.into_iter().map(|((a, b, c), n, d)| {
                    (Monomial::series_exponents(&[a, b, c]), Rat::new(n, d))
                }),
            )
        },
    )
}

fn word() -> impl Strategy<Value = Vec<u8>> {
    prop::collection::vec(1u8..=3, 2..=3)
}

/// Small trace expressions in `x1, x2, x3`.
pub fn trace_expr() -> impl Strategy<Value = TraceExpr> {
    prop::collection::vec((prop::collection::vec(word(), 1..=2), -3i64..=3), 1..=3).prop_map(
        |terms| {
            let mut acc = TraceExpr::zero();
            for (words, c) in terms {
                let mut m = TraceExpr::constant(Rat::one());
                for w in &words {
                    m = m.mul(&TraceExpr::trace(w));
                }
                acc.add_scaled(&m, &Rat::from_int(c));
            }
            acc
        },
    )
}

/// A partition with at most 4 rows and parts at most 4, with `d` between
/// its row count and 4.
pub fn partition_and_d() -> impl Strategy<Value = (Partition, usize)> {
    prop::collection::vec(1u32..=4, 0..=4).prop_flat_map(|mut parts| {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let rows = parts.len().max(1);
        let lambda = Partition::new(parts).expect("sorted parts");
        (Just(lambda), rows..=4usize)
    })
}

pub fn int_matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..=6, 1usize..=7)
        .prop_flat_map(|(r, c)| prop::collection::vec(prop::collection::vec(-4i64..=4, c), r))
}

pub fn ring_axioms(a: &Poly, b: &Poly, c: &Poly) -> Result<(), TestCaseError> {
    prop_assert_eq!(a + b, b + a);
    prop_assert_eq!(a * b, b * a);
    prop_assert_eq!(&(a + b) + c, a + &(b + c));
    prop_assert_eq!(&(a * b) * c, a * &(b * c));
    prop_assert_eq!(a * &(b + c), &(a * b) + &(a * c));
    prop_assert!((a + &(-a)).is_zero());
    prop_assert_eq!(a * &Poly::one(), a.clone());
    prop_assert!((a * &Poly::zero()).is_zero());
    Ok(())
}

/// `g_ij = sum_k Delta_ij^k / k!`, on formal expressions and after
/// expansion at generic matrices.
pub fn exp_delta_is_g(e: &TraceExpr, i: u8, j: u8) -> Result<(), TestCaseError> {
    let mut sum = TraceExpr::zero();
    let mut term = e.clone();
    let mut k = 0i64;
    let mut fact = Rat::one();
    while !term.is_zero() {
        sum.add_scaled(&term, &fact.recip());
        k += 1;
        fact = &fact * &Rat::from_int(k);
        term = delta_formal(&term, i, j);
    }
    prop_assert_eq!(&sum, &g_formal(e, i, j));

    let ctx = make_context(3, Mode::FullGeneric).expect("context");
    let p = expand(e, &ctx).expect("expands");
    let delta = PolarizationOp::new(OpKind::Delta, i as usize, j as usize, 3).expect("op");
    let g = PolarizationOp::new(OpKind::G, i as usize, j as usize, 3).expect("op");
    let mut psum = Poly::zero();
    let mut pterm = p.clone();
    let mut k = 0i64;
    let mut fact = Rat::one();
    while !pterm.is_zero() {
        psum.add_scaled(&pterm, &fact.recip());
        k += 1;
        fact = &fact * &Rat::from_int(k);
        pterm = apply_polarization(&delta, &pterm, &ctx).expect("applies");
    }
    prop_assert_eq!(psum, apply_polarization(&g, &p, &ctx).expect("applies"));
    Ok(())
}

pub fn ssyt_count(lambda: &Partition, d: usize) -> Result<(), TestCaseError> {
    prop_assert_eq!(ssyt_enumerate(lambda, d).len() as u128, weyl_dim(lambda, d));
    Ok(())
}

pub fn bialternant(lambda: &Partition, d: usize) -> Result<(), TestCaseError> {
    prop_assert_eq!(
        schur_poly_bialternant(lambda, d).expect("fits"),
        schur_poly_tableaux(lambda, d)
    );
    Ok(())
}

pub fn nullspace_sound(m: &[Vec<i64>]) -> Result<(), TestCaseError> {
    let cols = m[0].len();
    let rows: Vec<Vec<Rat>> = m
        .iter()
        .map(|r| r.iter().map(|&x| Rat::from_int(x)).collect())
        .collect();
    let mat = RatMatrix::from_rows(cols, rows.clone());
    let ns = nullspace(&mat);
    prop_assert_eq!(ns.len(), cols - rank(&mat));
    for v in &ns {
        let v: Vec<Rat> = v.iter().map(Rat::from).collect();
        prop_assert!(mat.mul_vec(&v).iter().all(|x| x.is_zero()));
        prop_assert!(v.iter().any(|x| !x.is_zero()));
    }
    let mut eb = EchelonBuilder::new(cols);
    for r in &rows {
        eb.push(r);
    }
    prop_assert_eq!(eb.rank(), rank(&mat));
    prop_assert_eq!(eb.nullspace(), ns);
    Ok(())
}
