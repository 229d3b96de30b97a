use std::sync::OnceLock;

use parking_lot::Mutex;
use rustc_hash::FxHashMap;

use super::{ssyt_enumerate, Decomp, Partition};
use crate::error::{Error, Result};
use crate::exactnum::Rat;
use crate::mpoly::{Family, Monomial, Poly, VarId};

type Cache = Mutex<FxHashMap<(Partition, usize), Poly>>;

fn cache() -> &'static Cache {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(FxHashMap::default()))
}

/// Schur polynomial `S_lambda(t1..td)` as a sum over semistandard tableaux.
pub fn schur_poly_tableaux(lambda: &Partition, d: usize) -> Poly {
    Poly::from_terms(
        ssyt_enumerate(lambda, d)
            .into_iter()
            .map(|t| (Monomial::series_exponents(&t.content(d)), Rat::one())),
    )
}

fn alternant(exps: &[u32]) -> Poly {
    let d = exps.len();
    let mut perm: Vec<usize> = (0..d).collect();
    let mut terms = Vec::new();
    // Heap's algorithm; each swap flips the sign
    let mut c = vec![0usize; d];
    let mut sign = 1i64;
    let push = |perm: &[usize], sign: i64, terms: &mut Vec<(Monomial, Rat)>| {
        let mut e = vec![0u32; d];
        for (i, &j) in perm.iter().enumerate() {
            e[i] = exps[j];
        }
        terms.push((Monomial::series_exponents(&e), Rat::from_int(sign)));
    };
    push(&perm, sign, &mut terms);
    let mut i = 0;
    while i < d {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            sign = -sign;
            push(&perm, sign, &mut terms);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    Poly::from_terms(terms)
}

/// Schur polynomial as the quotient of alternants
/// `a_{lambda + delta} / a_delta`.
pub fn schur_poly_bialternant(lambda: &Partition, d: usize) -> Result<Poly> {
    if lambda.rows() > d {
        return Err(Error::TooManyRows {
            lambda: lambda.to_string(),
            d,
        });
    }
    let l = lambda.padded(d);
    let num: Vec<u32> = (0..d).map(|i| l[i] + (d - 1 - i) as u32).collect();
    let den: Vec<u32> = (0..d).map(|i| (d - 1 - i) as u32).collect();
    Ok(alternant(&num)
        .div_exact(&alternant(&den))
        .expect("alternant quotient is exact"))
}

/// Schur polynomial in `t1..td` (cached).
pub fn schur_poly(lambda: &Partition, d: usize) -> Result<Poly> {
    if lambda.rows() > d {
        return Err(Error::TooManyRows {
            lambda: lambda.to_string(),
            d,
        });
    }
    let key = (lambda.clone(), d);
    if let Some(p) = cache().lock().get(&key) {
        return Ok(p.clone());
    }
    let p = schur_poly_tableaux(lambda, d);
    cache().lock().insert(key, p.clone());
    Ok(p)
}

/// Whether `p` only involves `t1..td` and is invariant under swapping
/// adjacent variables.
pub fn is_symmetric(p: &Poly, d: usize) -> bool {
    if p.family() == Some(Family::Entry) {
        return false;
    }
    if p.variables().iter().any(|v| v.raw() as usize >= d) {
        return false;
    }
    (1..d).all(|i| p.swap_vars(VarId::series(i), VarId::series(i + 1)) == *p)
}

/// Expands a symmetric polynomial in Schur polynomials by repeatedly
/// subtracting the Schur polynomial of the leading exponent.
pub fn schur_decompose(p: &Poly, d: usize) -> Result<Decomp> {
    if !is_symmetric(p, d) {
        return Err(Error::NotSymmetric(d));
    }
    let mut rem = p.clone();
    let mut out = Decomp::new();
    while let Some((m, c)) = rem.leading().cloned() {
        let exps = m.series_exponent_vector(d).expect("series monomial");
        let lambda = Partition::from_exponents(&exps);
        if !c.is_integer() || !c.is_positive() {
            return Err(Error::NotSchurPositive(format!(
                "({lambda}) coefficient {c}"
            )));
        }
        let mult = c.to_i64().expect("integer") as u64;
        rem.add_scaled(&schur_poly(&lambda, d)?, &-c);
        out.add(lambda, mult);
    }
    Ok(out)
}

/// Sum of `m * S_lambda` over a decomposition.
pub fn character_of(decomp: &Decomp, d: usize) -> Poly {
    let mut acc = Poly::zero();
    for (lambda, m) in decomp.iter() {
        if lambda.rows() <= d {
            acc.add_scaled(
                &schur_poly(lambda, d).expect("rows checked"),
                &Rat::from_int(m as i64),
            );
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mpoly::t;
    use crate::part;
    use crate::partitions::weyl_dim;

    #[test]
    fn linear_schur() {
        let s = schur_poly(&part![1], 3).unwrap();
        assert_eq!(s, &(&t(1) + &t(2)) + &t(3));
    }

    #[test]
    fn bialternant_matches_tableaux() {
        for n in 0..=5 {
            for lambda in Partition::all_of(n, 4) {
                for d in lambda.rows().max(1)..=4 {
                    assert_eq!(
                        schur_poly_bialternant(&lambda, d).unwrap(),
                        schur_poly_tableaux(&lambda, d)
                    );
                }
            }
        }
    }

    #[test]
    fn square_of_two_two() {
        let s = schur_poly(&part![2, 2], 3).unwrap();
        let dec = schur_decompose(&(&s * &s), 3).unwrap();
        assert_eq!(
            dec,
            Decomp::from_pairs([(part![4, 4], 1), (part![4, 3, 1], 1), (part![4, 2, 2], 1)])
        );
    }

    #[test]
    fn decompose_constant_and_single() {
        assert_eq!(
            schur_decompose(&Poly::one(), 3).unwrap(),
            Decomp::from_pairs([(Partition::empty(), 1)])
        );
        for n in 0..=8 {
            for lambda in Partition::all_of(n, 3) {
                let s = schur_poly(&lambda, 3).unwrap();
                assert_eq!(
                    schur_decompose(&s, 3).unwrap(),
                    Decomp::from_pairs([(lambda.clone(), 1)])
                );
                let at_one = s.evaluate(|_| Rat::one());
                assert_eq!(at_one, Rat::from_int(weyl_dim(&lambda, 3) as i64));
            }
        }
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(schur_decompose(&t(1), 2), Err(Error::NotSymmetric(2)));
        let neg = (&t(1) + &t(2)).scale(&Rat::from_int(-1));
        assert!(matches!(
            schur_decompose(&neg, 2),
            Err(Error::NotSchurPositive(_))
        ));
        assert!(schur_poly(&part![1, 1, 1], 2).is_err());
    }
}
