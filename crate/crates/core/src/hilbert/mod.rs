//! Hilbert series for three matrices: the full trace algebra, its traceless
//! part, the symmetric algebra on the generators and the kernel between
//! them.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::characters::GradedCharacter;
use crate::error::{Error, Result};
use crate::exactnum::Rat;
use crate::mpoly::{elementary, series_expand_rational, t, Monomial, Poly, Series};
use crate::numcheck::{invariant_dimension, DEFAULT_BOUND};
use crate::partitions::{schur_decompose, Decomp, Partition};

/// Reading of the numerator monomial printed as `2e_2e_2e_3^3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    /// `2 e2^2 e3^3`, as printed.
    Verbatim,
    /// `2 e1 e2 e3^3`.
    Corrected,
}

impl Variant {
    pub const ALL: [Variant; 2] = [Variant::Verbatim, Variant::Corrected];
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variant::Verbatim => "verbatim",
            Variant::Corrected => "corrected",
        })
    }
}

impl std::str::FromStr for Variant {
    type Err = Error;
    fn from_str(s: &str) -> Result<Variant> {
        match s {
            "verbatim" => Ok(Variant::Verbatim),
            "corrected" => Ok(Variant::Corrected),
            _ => Err(Error::Parse {
                pos: 0,
                msg: format!("unknown variant {s:?}"),
            }),
        }
    }
}

/// Numerator terms `(coefficient, a, b, c)` for `e1^a e2^b e3^c`, in
/// printed order; the entry at `VARIANT_TERM` depends on the variant.
const NUMERATOR: &[(i64, u32, u32, u32)] = &[
    (1, 0, 0, 0),
    (-1, 0, 1, 0),
    (1, 0, 0, 1),
    (1, 1, 0, 1),
    (1, 0, 2, 0),
    (1, 2, 0, 1),
    (-1, 0, 1, 1),
    (-2, 1, 1, 1),
    (1, 0, 0, 2),
    (1, 0, 2, 1),
    (-1, 2, 1, 1),
    (2, 2, 0, 2),
    (1, 3, 0, 2),
    (1, 0, 2, 2),
    (-1, 2, 1, 2),
    (-1, 1, 0, 3),
    (-2, 1, 2, 2),
    (2, 0, 2, 3),
    (-1, 0, 3, 2),
    (1, 3, 0, 3),
    (2, 2, 1, 3),
    (-2, 1, 0, 4),
    (-1, 2, 0, 4),
    (1, 1, 2, 3),
    (1, 0, 1, 4),
    (-1, 0, 3, 3),
    (-2, 0, 2, 5),
    (1, 1, 2, 4),
    (2, 1, 1, 5),
    (-1, 0, 0, 6),
    (-1, 0, 2, 5),
    (1, 1, 0, 6),
    (-1, 0, 1, 6),
    (-1, 2, 0, 6),
    (-1, 0, 0, 7),
    (1, 1, 0, 7),
    (-1, 0, 0, 8),
];
const VARIANT_TERM: usize = 17;

/// Numerator of the Hilbert series of the trace algebra of three generic
/// 3x3 matrices, as a polynomial in `t1, t2, t3`.
pub fn numerator(variant: Variant) -> Poly {
    let e = [elementary(1, 3), elementary(2, 3), elementary(3, 3)];
    let mut acc = Poly::zero();
    for (i, &(c, a, b, k)) in NUMERATOR.iter().enumerate() {
        let (a, b) = if i == VARIANT_TERM && variant == Variant::Corrected {
            (1, 1)
        } else {
            (a, b)
        };
        let term = &(&e[0].pow(a) * &e[1].pow(b)) * &e[2].pow(k);
        acc.add_scaled(&term, &Rat::from_int(c));
    }
    acc
}

fn one_minus(m: &[u32]) -> Poly {
    &Poly::one() - &Poly::term(Monomial::series_exponents(m), Rat::one())
}

/// Denominator factors `(1 - m, multiplicity)`.
pub fn denominator_factors() -> Vec<(Poly, u32)> {
    let mut out = Vec::new();
    for i in 0..3 {
        for k in 1..=3 {
            let mut e = [0; 3];
            e[i] = k;
            out.push((one_minus(&e), 1));
        }
    }
    for i in 0..3 {
        for j in i + 1..3 {
            let mut e = [0; 3];
            e[i] = 1;
            e[j] = 1;
            out.push((one_minus(&e), 2));
            e[i] = 2;
            out.push((one_minus(&e), 1));
            e[i] = 1;
            e[j] = 2;
            out.push((one_minus(&e), 1));
        }
    }
    out.push((one_minus(&[1, 1, 1]), 1));
    out
}

/// Hilbert series of the trace algebra of three generic 3x3 matrices.
pub fn c33_series(order: usize, variant: Variant) -> Result<Series> {
    series_expand_rational(&numerator(variant), &denominator_factors(), order)
}

/// Hilbert series of the algebra generated by traces of products of
/// traceless matrices: `(1-t1)(1-t2)(1-t3) H(C33)`.
pub fn c0_series(order: usize, variant: Variant) -> Result<Series> {
    let lin = &(&(&Poly::one() - &t(1)) * &(&Poly::one() - &t(2))) * &(&Poly::one() - &t(3));
    let s = Series::new(&lin, order).mul(&c33_series(order, variant)?);
    if let Some((m, c)) = s.body().terms().iter().find(|(_, c)| c.is_negative()) {
        return Err(Error::NegativeCoefficient(format!("H(C0) at {m}: {c}")));
    }
    Ok(s)
}

/// Hilbert series of the symmetric algebra on the generators (d = 3).
pub fn symalg_series(order: usize) -> Result<Series> {
    let g = GradedCharacter::generators(3);
    let mut factors = Vec::new();
    for k in g.degrees() {
        for (m, c) in g.piece(k).terms() {
            let mult = c
                .to_i64()
                .filter(|&n| n >= 0 && c.is_integer())
                .ok_or_else(|| Error::NegativeCoefficient(format!("generator character at {m}")))?;
            factors.push((
                &Poly::one() - &Poly::term(m.clone(), Rat::one()),
                mult as u32,
            ));
        }
    }
    series_expand_rational(&Poly::one(), &factors, order)
}

/// Graded pieces of the Hilbert series of the kernel of `S -> C0`.
#[derive(Clone, Debug, Serialize)]
pub struct KernelSeries {
    pub order: usize,
    pub variant: Variant,
    /// `decomps[k]` is the Schur decomposition of `h_k`.
    pub decomps: Vec<Decomp>,
    #[serde(skip)]
    pub pieces: Vec<Poly>,
}

impl KernelSeries {
    pub fn h(&self, k: usize) -> &Decomp {
        &self.decomps[k]
    }

    /// Dimension of the degree-`k` kernel piece (its character at t = 1).
    pub fn dimension(&self, k: usize) -> u128 {
        self.decomps[k].dimension(3)
    }
}

pub fn kernel_series(order: usize, variant: Variant) -> Result<KernelSeries> {
    let diff = symalg_series(order)?.sub(&c0_series(order, variant)?);
    let mut pieces = Vec::with_capacity(order + 1);
    let mut decomps = Vec::with_capacity(order + 1);
    for k in 0..=order {
        let p = diff.piece(k);
        decomps.push(schur_decompose(&p, 3)?);
        pieces.push(p);
    }
    Ok(KernelSeries {
        order,
        variant,
        decomps,
        pieces,
    })
}

fn decomp_of(pairs: &[(&[u32], u64)]) -> Decomp {
    Decomp::from_pairs(
        pairs
            .iter()
            .map(|(p, m)| (Partition::new(p.to_vec()).expect("valid"), *m)),
    )
}

/// Expected kernel pieces of degrees 7 and 8.
pub fn expected_h7() -> Decomp {
    decomp_of(&[(&[3, 2, 2], 1)])
}

pub fn expected_h8() -> Decomp {
    decomp_of(&[(&[4, 3, 1], 1), (&[4, 2, 2], 2), (&[3, 3, 2], 1)])
}

/// Coefficients of `H(C33)` through total degree `max_degree` from the
/// numeric oracle, keyed by exponent vector.
pub fn oracle_coefficients(max_degree: u32, seed: u64) -> BTreeMap<[u32; 3], usize> {
    let mut out = BTreeMap::new();
    for a in 0..=max_degree {
        for b in 0..=max_degree - a {
            for c in 0..=max_degree - a - b {
                let md = [a, b, c];
                let dim = if a + b + c == 0 {
                    1
                } else {
                    invariant_dimension(&md, false, DEFAULT_BOUND, seed)
                };
                out.insert(md, dim);
            }
        }
    }
    out
}

/// Outcome of the variant criteria for one numerator reading.
#[derive(Clone, Debug, Serialize)]
pub struct VariantCheck {
    pub variant: Variant,
    pub symmetric: bool,
    pub c0_nonnegative: bool,
    pub low_degrees_vanish: bool,
    pub h7_matches: bool,
    pub h8_matches: bool,
    pub oracle_matches: bool,
}

impl VariantCheck {
    pub fn passed(&self) -> bool {
        self.symmetric
            && self.c0_nonnegative
            && self.low_degrees_vanish
            && self.h7_matches
            && self.h8_matches
            && self.oracle_matches
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct VariantSelection {
    /// First passing variant in [`Variant::ALL`] order, if any.
    pub chosen: Option<Variant>,
    pub checks: Vec<VariantCheck>,
    /// More than one variant passed; the criteria do not separate them.
    pub tie: bool,
}

/// Runs every variant through the criteria at order 8 and picks one.
pub fn select_variant(seed: u64) -> Result<VariantSelection> {
    let oracle = oracle_coefficients(4, seed);
    let mut checks = Vec::new();
    for variant in Variant::ALL {
        let c33 = c33_series(8, variant)?;
        let symmetric = crate::partitions::is_symmetric(c33.body(), 3);
        let c0_nonnegative = c0_series(8, variant).is_ok();
        let kernel = if c0_nonnegative {
            kernel_series(8, variant).ok()
        } else {
            None
        };
        let oracle_matches = oracle.iter().all(|(md, &dim)| {
            c33.coefficient(&Monomial::series_exponents(md)) == Rat::from_int(dim as i64)
        });
        checks.push(VariantCheck {
            variant,
            symmetric,
            c0_nonnegative,
            low_degrees_vanish: kernel
                .as_ref()
                .is_some_and(|k| (0..=6).all(|i| k.h(i).is_empty())),
            h7_matches: kernel.as_ref().is_some_and(|k| k.h(7) == &expected_h7()),
            h8_matches: kernel.as_ref().is_some_and(|k| k.h(8) == &expected_h8()),
            oracle_matches,
        });
    }
    let passing: Vec<Variant> = checks
        .iter()
        .filter(|c| c.passed())
        .map(|c| c.variant)
        .collect();
    Ok(VariantSelection {
        chosen: passing.first().copied(),
        tie: passing.len() > 1,
        checks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;
    use crate::partitions::schur_poly;

    #[test]
    fn numerator_variants_differ_in_one_term() {
        let diff = &numerator(Variant::Verbatim) - &numerator(Variant::Corrected);
        let e = |k| elementary(k, 3);
        let expect = (&(&e(2).pow(2) - &(&e(1) * &e(2))) * &e(3).pow(3)).scale(&Rat::from_int(2));
        assert_eq!(diff, expect);
        assert_eq!(
            numerator(Variant::Verbatim).coefficient(&Monomial::one()),
            Rat::one()
        );
    }

    #[test]
    fn c33_low_coefficients() {
        let s = c33_series(4, Variant::Verbatim).unwrap();
        assert_eq!(s.coefficient(&Monomial::one()), Rat::one());
        assert_eq!(s.coefficient(&Monomial::series_exponents(&[1])), Rat::one());
        assert_eq!(
            s.coefficient(&Monomial::series_exponents(&[1, 1, 1])),
            Rat::from_int(6)
        );
        assert!(crate::partitions::is_symmetric(s.body(), 3));
    }

    #[test]
    fn c0_low_pieces() {
        let s = c0_series(4, Variant::Verbatim).unwrap();
        assert!(s.piece(1).is_zero());
        assert_eq!(s.piece(2), schur_poly(&part![2], 3).unwrap());
        assert_eq!(
            s.piece(3),
            &schur_poly(&part![3], 3).unwrap() + &schur_poly(&part![1, 1, 1], 3).unwrap()
        );
    }

    #[test]
    fn symalg_low_pieces() {
        let s = symalg_series(4).unwrap();
        assert_eq!(s.piece(2), schur_poly(&part![2], 3).unwrap());
        let s2 = schur_poly(&part![2], 3).unwrap();
        let deg4 = &(&crate::characters::sym_power_character(&s2, 2).unwrap()
            + &schur_poly(&part![2, 2], 3).unwrap())
            + &schur_poly(&part![2, 1, 1], 3).unwrap();
        assert_eq!(s.piece(4), deg4);
    }

    #[test]
    fn kernel_through_eight() {
        let k = kernel_series(8, Variant::Verbatim).unwrap();
        for i in 0..=6 {
            assert!(k.h(i).is_empty(), "h{i} = {}", k.h(i));
        }
        assert_eq!(k.h(7), &expected_h7());
        assert_eq!(k.h(8), &expected_h8());
        assert_eq!(k.dimension(7), 3);
        assert_eq!(k.dimension(8), 30);
    }
}
