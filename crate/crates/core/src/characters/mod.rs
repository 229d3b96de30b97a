//! Characters of polynomial `GL_d`-modules: Young rules, Thrall formulas,
//! symmetric powers and the graded pieces of the square of the augmentation
//! ideal of the symmetric algebra of the generators.

pub mod tables;

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::One;

use crate::error::{Error, Result};
use crate::exactnum::Rat;
use crate::mpoly::{Monomial, Poly};
use crate::partitions::{character_of, schur_decompose, schur_poly, Decomp, Partition};

/// Irreducible summands `W(lambda)` of the generator module, by degree.
pub const GENERATORS: [(usize, &[u32]); 11] = [
    (1, &[1]),
    (2, &[2]),
    (3, &[3]),
    (3, &[1, 1, 1]),
    (4, &[2, 2]),
    (4, &[2, 1, 1]),
    (5, &[3, 1, 1]),
    (5, &[2, 2, 1]),
    (5, &[1, 1, 1, 1, 1]),
    (6, &[3, 3]),
    (6, &[3, 1, 1, 1]),
];

pub fn generator_partitions(degree: usize) -> Vec<Partition> {
    GENERATORS
        .iter()
        .filter(|(k, _)| *k == degree)
        .map(|(_, p)| Partition::new(p.to_vec()).expect("valid"))
        .collect()
}

/// Graded character: one symmetric polynomial in `t1..td` per degree.
#[derive(Clone, Debug, PartialEq)]
pub struct GradedCharacter {
    pub d: usize,
    pieces: BTreeMap<usize, Poly>,
}

impl GradedCharacter {
    pub fn new(d: usize) -> GradedCharacter {
        GradedCharacter {
            d,
            pieces: BTreeMap::new(),
        }
    }

    /// The generators of the traceless algebra (degrees 2..=6).
    pub fn generators(d: usize) -> GradedCharacter {
        let mut g = GradedCharacter::new(d);
        for k in 2..=6 {
            g.set(k, generator_character(k, d));
        }
        g
    }

    pub fn set(&mut self, degree: usize, p: Poly) {
        if p.is_zero() {
            self.pieces.remove(&degree);
        } else {
            self.pieces.insert(degree, p);
        }
    }

    pub fn piece(&self, degree: usize) -> Poly {
        self.pieces.get(&degree).cloned().unwrap_or_else(Poly::zero)
    }

    pub fn degrees(&self) -> impl Iterator<Item = usize> + '_ {
        self.pieces.keys().copied()
    }

    pub fn decompose(&self, degree: usize) -> Result<Decomp> {
        schur_decompose(&self.piece(degree), self.d)
    }

    /// Total dimension of each piece (the character at `t = 1`).
    pub fn dimensions(&self) -> BTreeMap<usize, Rat> {
        self.pieces
            .iter()
            .map(|(&k, p)| (k, p.evaluate(|_| Rat::one())))
            .collect()
    }
}

/// Character of the degree-`k` generators, restricted to `d` rows.
pub fn generator_character(k: usize, d: usize) -> Poly {
    let decomp = Decomp::from_pairs(generator_partitions(k).into_iter().map(|p| (p, 1)));
    character_of(&decomp, d)
}

/// `W_d(lambda) (x) W_d(p)`: add a horizontal strip of `p` boxes.
pub fn young_rule_row(lambda: &Partition, p: u32, d: usize) -> Decomp {
    let mut out = Decomp::new();
    if lambda.rows() > d {
        return out;
    }
    let l = lambda.padded(d);
    fn go(i: usize, left: u32, l: &[u32], cur: &mut Vec<u32>, out: &mut Decomp) {
        if i == l.len() {
            if left == 0 {
                out.add(Partition::from_exponents(cur), 1);
            }
            return;
        }
        // row i may grow by at most l[i-1] - l[i]
        let cap = if i == 0 {
            left
        } else {
            left.min(l[i - 1] - l[i])
        };
        for add in 0..=cap {
            cur.push(l[i] + add);
            go(i + 1, left - add, l, cur, out);
            cur.pop();
        }
    }
    go(0, p, &l, &mut Vec::with_capacity(d), &mut out);
    out
}

/// `W_d(lambda) (x) W_d(1^p)`: add a vertical strip of `p` boxes.
pub fn young_rule_col(lambda: &Partition, p: u32, d: usize) -> Decomp {
    let mut out = Decomp::new();
    if lambda.rows() > d || p as usize > d {
        return out;
    }
    let l = lambda.padded(d);
    for mask in 0u32..(1 << d) {
        if mask.count_ones() != p {
            continue;
        }
        let v: Vec<u32> = (0..d).map(|i| l[i] + (mask >> i & 1)).collect();
        if v.windows(2).all(|w| w[0] >= w[1]) {
            out.add(Partition::from_exponents(&v), 1);
        }
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Thrall {
    /// `W(p) (x)_s W(p)`
    SymSquareRow(u32),
    /// `W(1^p) (x)_s W(1^p)`
    SymSquareCol(u32),
    /// Degree-`2q` part of the symmetric algebra of `W(2)`.
    SymAlgebraOfW2(u32),
}

/// Closed-form decompositions of a few symmetric powers.
pub fn thrall(kind: Thrall, d: usize) -> Decomp {
    let mut out = Decomp::new();
    match kind {
        Thrall::SymSquareRow(p) => {
            for k in 0..=p / 2 {
                out.add(Partition::from_exponents(&[2 * p - 2 * k, 2 * k]), 1);
            }
        }
        Thrall::SymSquareCol(p) => {
            for k in 0..=p / 2 {
                let mut parts = vec![2; (p - 2 * k) as usize];
                parts.extend(std::iter::repeat_n(1, 4 * k as usize));
                out.add(Partition::from_exponents(&parts), 1);
            }
        }
        Thrall::SymAlgebraOfW2(q) => {
            for lambda in Partition::all_of(q, d) {
                let doubled: Vec<u32> = lambda.parts().iter().map(|x| 2 * x).collect();
                out.add(Partition::from_exponents(&doubled), 1);
            }
        }
    }
    out.truncate_rows(d);
    out
}

fn nonnegative_terms(ch: &Poly) -> Result<Vec<(Monomial, u64)>> {
    ch.terms()
        .iter()
        .map(|(m, c)| match c.to_i64() {
            Some(n) if c.is_integer() && n >= 0 => Ok((m.clone(), n as u64)),
            _ => Err(Error::NegativeCoefficient(format!(
                "character coefficient {c}"
            ))),
        })
        .collect()
}

fn monomial_power(m: &Monomial, k: u32) -> Monomial {
    Monomial::from_vars(
        m.vars()
            .iter()
            .flat_map(|&v| std::iter::repeat_n(v, k as usize)),
    )
}

/// Character of the `q`-th symmetric power of a module with character
/// `ch`: the `u^q` coefficient of `prod_m (1 - u m)^(-c_m)`.
pub fn sym_power_character(ch: &Poly, q: u32) -> Result<Poly> {
    let terms = nonnegative_terms(ch)?;
    let q = q as usize;
    let mut acc: Vec<Poly> = vec![Poly::zero(); q + 1];
    acc[0] = Poly::one();
    for (m, c) in &terms {
        let mut next = vec![Poly::zero(); q + 1];
        for (j, slot) in next.iter_mut().enumerate() {
            for k in 0..=j {
                if acc[j - k].is_zero() {
                    continue;
                }
                let coeff = binomial(BigInt::from(c + k as u64 - 1), BigInt::from(k));
                slot.add_scaled(
                    &acc[j - k]
                        .mul_monomial(&monomial_power(m, k as u32), &Rat::from_bigint(coeff)),
                    &Rat::one(),
                );
            }
        }
        acc = next;
    }
    Ok(acc.swap_remove(q))
}

fn partitions_of(q: u32) -> Vec<Vec<u32>> {
    Partition::all_of(q, q as usize)
        .into_iter()
        .map(|p| p.parts().to_vec())
        .collect()
}

/// Same as [`sym_power_character`] through power sums:
/// `h_q = sum_{mu |- q} p_mu / z_mu` with `p_k[ch](t) = ch(t^k)`.
pub fn sym_power_character_newton(ch: &Poly, q: u32) -> Result<Poly> {
    let terms = nonnegative_terms(ch)?;
    if q == 0 {
        return Ok(Poly::one());
    }
    let adams = |k: u32| -> Poly {
        Poly::from_terms(
            terms
                .iter()
                .map(|(m, c)| (monomial_power(m, k), Rat::from_int(*c as i64))),
        )
    };
    let mut cache: BTreeMap<u32, Poly> = BTreeMap::new();
    let mut acc = Poly::zero();
    for mu in partitions_of(q) {
        let mut z = BigInt::one();
        let mut counts: BTreeMap<u32, u32> = BTreeMap::new();
        for &part in &mu {
            *counts.entry(part).or_insert(0) += 1;
        }
        for (&i, &a) in &counts {
            z *= BigInt::from(i).pow(a);
            for f in 1..=a {
                z *= BigInt::from(f);
            }
        }
        let mut term = Poly::one();
        for &part in &mu {
            let pk = cache.entry(part).or_insert_with(|| adams(part));
            term = &term * &*pk;
        }
        acc.add_scaled(&term, &Rat::from_bigint(z).recip());
    }
    Ok(acc)
}

/// Character-side `A (x) B`.
pub fn tensor_decompose(a: &Decomp, b: &Decomp, d: usize) -> Result<Decomp> {
    schur_decompose(&(&character_of(a, d) * &character_of(b, d)), d)
}

/// Character-side `A^((x)_s q)`.
pub fn sym_power_decompose(a: &Decomp, q: u32, d: usize) -> Result<Decomp> {
    schur_decompose(&sym_power_character(&character_of(a, d), q)?, d)
}

/// Exponent vectors `(q2..q6)` with `sum i q_i = k` and `sum q_i >= 2`.
pub fn omega2_compositions(k: usize) -> Vec<[u32; 5]> {
    let mut out = Vec::new();
    fn go(i: usize, left: usize, cur: &mut [u32; 5], out: &mut Vec<[u32; 5]>) {
        if i == 5 {
            if left == 0 && cur.iter().sum::<u32>() >= 2 {
                out.push(*cur);
            }
            return;
        }
        let w = i + 2;
        for q in 0..=left / w {
            cur[i] = q as u32;
            go(i + 1, left - q * w, cur, out);
        }
        cur[i] = 0;
    }
    go(0, k, &mut [0; 5], &mut out);
    out
}

/// Character of the degree-`k` piece of the square of the augmentation
/// ideal of the symmetric algebra on the generators of degrees 2..=6.
pub fn omega2_character(k: usize, d: usize) -> Result<Poly> {
    let mut acc = Poly::zero();
    for qs in omega2_compositions(k) {
        let mut term = Poly::one();
        for (i, &q) in qs.iter().enumerate() {
            if q > 0 {
                term = &term * &sym_power_character(&generator_character(i + 2, d), q)?;
            }
        }
        acc.add_scaled(&term, &Rat::one());
    }
    Ok(acc)
}

/// Decomposition of the degree-`k` piece of the square of the augmentation
/// ideal, together with the number of summands dropped for having more
/// than `d` rows.
pub fn omega2_component_truncated(k: usize, d: usize) -> Result<(Decomp, u64)> {
    if !(2..=8).contains(&k) {
        return Err(Error::OutOfScope(format!(
            "omega2 degree must be in 2..=8 (got {k})"
        )));
    }
    if k == 8 && d != 3 {
        return Err(Error::OutOfScope(
            "omega2 degree 8 is for d = 3 only".into(),
        ));
    }
    let width = if k == 8 { 3 } else { k };
    let mut decomp = schur_decompose(&omega2_character(k, width)?, width)?;
    let dropped = decomp.truncate_rows(d);
    Ok((decomp, dropped))
}

pub fn omega2_component(k: usize, d: usize) -> Result<Decomp> {
    omega2_component_truncated(k, d).map(|(c, _)| c)
}

/// Schur polynomial of `lambda`, or zero when it has more than `d` rows.
pub fn schur_or_zero(lambda: &Partition, d: usize) -> Poly {
    schur_poly(lambda, d).unwrap_or_else(|_| Poly::zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;

    fn dec(pairs: &[(&[u32], u64)]) -> Decomp {
        Decomp::from_pairs(
            pairs
                .iter()
                .map(|(p, m)| (Partition::new(p.to_vec()).unwrap(), *m)),
        )
    }

    #[test]
    fn young_row_examples() {
        assert_eq!(
            young_rule_row(&part![2, 2], 2, 3),
            dec(&[(&[4, 2], 1), (&[3, 2, 1], 1), (&[2, 2, 2], 1)])
        );
        assert_eq!(
            young_rule_row(&part![3], 2, 2),
            dec(&[(&[5], 1), (&[4, 1], 1), (&[3, 2], 1)])
        );
        assert_eq!(young_rule_row(&part![3, 1], 0, 4), dec(&[(&[3, 1], 1)]));
    }

    #[test]
    fn young_col_examples() {
        assert_eq!(
            young_rule_col(&part![2, 2], 3, 5),
            dec(&[(&[3, 3, 1], 1), (&[3, 2, 1, 1], 1), (&[2, 2, 1, 1, 1], 1)])
        );
        assert_eq!(
            young_rule_col(&part![2, 1, 1], 3, 6),
            dec(&[
                (&[3, 2, 2], 1),
                (&[3, 2, 1, 1], 1),
                (&[3, 1, 1, 1, 1], 1),
                (&[2, 2, 2, 1], 1),
                (&[2, 2, 1, 1, 1], 1),
                (&[2, 1, 1, 1, 1, 1], 1)
            ])
        );
        assert_eq!(young_rule_col(&part![2], 0, 3), dec(&[(&[2], 1)]));
    }

    #[test]
    fn young_rules_match_characters() {
        for d in 2..=4 {
            for n in 1..=4 {
                for lambda in Partition::all_of(n, d) {
                    for p in 0..=3u32 {
                        let row = Decomp::from_pairs([(
                            Partition::new(if p == 0 { vec![] } else { vec![p] }).unwrap(),
                            1,
                        )]);
                        assert_eq!(
                            young_rule_row(&lambda, p, d),
                            tensor_decompose(&dec(&[(lambda.parts(), 1)]), &row, d).unwrap()
                        );
                        if p as usize <= d {
                            let col = Decomp::from_pairs([(
                                Partition::new(vec![1; p as usize]).unwrap(),
                                1,
                            )]);
                            assert_eq!(
                                young_rule_col(&lambda, p, d),
                                tensor_decompose(&dec(&[(lambda.parts(), 1)]), &col, d).unwrap()
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn thrall_examples() {
        assert_eq!(
            thrall(Thrall::SymSquareRow(3), 3),
            dec(&[(&[6], 1), (&[4, 2], 1)])
        );
        assert_eq!(
            thrall(Thrall::SymSquareCol(3), 6),
            dec(&[(&[2, 2, 2], 1), (&[2, 1, 1, 1, 1], 1)])
        );
        assert_eq!(thrall(Thrall::SymSquareRow(1), 3), dec(&[(&[2], 1)]));
        assert_eq!(
            thrall(Thrall::SymAlgebraOfW2(3), 3),
            dec(&[(&[6], 1), (&[4, 2], 1), (&[2, 2, 2], 1)])
        );
    }

    #[test]
    fn thrall_matches_characters() {
        for d in 2..=6 {
            for p in 1..=4u32 {
                let row = dec(&[(&[p], 1)]);
                assert_eq!(
                    thrall(Thrall::SymSquareRow(p), d),
                    sym_power_decompose(&row, 2, d).unwrap()
                );
                if p as usize <= d {
                    let col =
                        Decomp::from_pairs([(Partition::new(vec![1; p as usize]).unwrap(), 1)]);
                    assert_eq!(
                        thrall(Thrall::SymSquareCol(p), d),
                        sym_power_decompose(&col, 2, d).unwrap()
                    );
                }
            }
            for q in 0..=3 {
                assert_eq!(
                    thrall(Thrall::SymAlgebraOfW2(q), d),
                    sym_power_decompose(&dec(&[(&[2], 1)]), q, d).unwrap()
                );
            }
        }
    }

    #[test]
    fn sym_power_examples() {
        let s2 = schur_poly(&part![2], 3).unwrap();
        assert_eq!(
            sym_power_character(&s2, 2).unwrap(),
            &schur_poly(&part![4], 3).unwrap() + &schur_poly(&part![2, 2], 3).unwrap()
        );
        assert_eq!(sym_power_character(&s2, 1).unwrap(), s2);
        let s22 = schur_poly(&part![2, 2], 3).unwrap();
        assert_eq!(
            schur_decompose(&sym_power_character(&s22, 2).unwrap(), 3).unwrap(),
            dec(&[(&[4, 4], 1), (&[4, 2, 2], 1)])
        );
        assert!(sym_power_character(&s2.scale(&Rat::from_int(-1)), 2).is_err());
    }

    #[test]
    fn sym_power_routes_agree() {
        for (lambda, d) in [
            (part![2], 3),
            (part![2, 1, 1], 4),
            (part![3, 1], 3),
            (part![1, 1, 1], 5),
        ] {
            let ch = schur_poly(&lambda, d).unwrap();
            for q in 0..=3 {
                assert_eq!(
                    sym_power_character(&ch, q).unwrap(),
                    sym_power_character_newton(&ch, q).unwrap()
                );
            }
        }
    }

    #[test]
    fn omega2_low_degree() {
        assert!(omega2_component(3, 3).unwrap().is_empty());
        assert_eq!(
            omega2_component(4, 2).unwrap(),
            dec(&[(&[4], 1), (&[2, 2], 1)])
        );
        let (c7, dropped) = omega2_component_truncated(7, 7).unwrap();
        assert_eq!(c7.get(&part![3, 2, 1, 1]), 6);
        assert_eq!(dropped, 0);
        let (c7, dropped) = omega2_component_truncated(7, 3).unwrap();
        assert!(dropped > 0);
        assert!(c7.iter().all(|(p, _)| p.rows() <= 3));
        assert!(omega2_component(8, 4).is_err());
        assert!(omega2_component(9, 3).is_err());
    }

    #[test]
    fn generators_dimensions() {
        let g = GradedCharacter::generators(3);
        let dims: Vec<i64> = (2..=6)
            .map(|k| g.dimensions()[&k].to_i64().unwrap())
            .collect();
        assert_eq!(dims, vec![6, 11, 9, 9, 10]);
    }
}
