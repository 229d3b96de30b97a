use std::fmt;

use super::{Monomial, Poly};
use crate::error::{Error, Result};
use crate::exactnum::Rat;

/// Power series truncated at a total degree.
#[derive(Clone, PartialEq, Eq)]
pub struct Series {
    body: Poly,
    order: usize,
}

impl Series {
    /// Truncates `p` to terms of total degree at most `order`.
    pub fn new(p: &Poly, order: usize) -> Series {
        let body = Poly::from_terms(
            p.terms()
                .iter()
                .filter(|(m, _)| m.degree() <= order)
                .cloned(),
        );
        Series { body, order }
    }

    pub fn one(order: usize) -> Series {
        Series {
            body: Poly::one(),
            order,
        }
    }

    pub fn body(&self) -> &Poly {
        &self.body
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coefficient(&self, m: &Monomial) -> Rat {
        self.body.coefficient(m)
    }

    pub fn piece(&self, degree: usize) -> Poly {
        self.body.graded_piece(degree)
    }

    pub fn mul(&self, other: &Series) -> Series {
        let order = self.order.min(other.order);
        Series {
            body: self.body.mul_truncated(&other.body, order),
            order,
        }
    }

    pub fn add(&self, other: &Series) -> Series {
        let order = self.order.min(other.order);
        Series::new(&(&self.body + &other.body), order)
    }

    pub fn sub(&self, other: &Series) -> Series {
        let order = self.order.min(other.order);
        Series::new(&(&self.body - &other.body), order)
    }

    pub fn pow(&self, e: u32) -> Series {
        let mut acc = Series::one(self.order);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Inverse of a series with constant term 1.
    pub fn inverse(&self) -> Result<Series> {
        if self.body.coefficient(&Monomial::one()) != Rat::one() {
            return Err(Error::BadSeriesFactor);
        }
        // 1/f = sum_n (1 - f)^n, and (1 - f)^n has no terms below degree n
        let g = Series::new(&(&Poly::one() - &self.body), self.order);
        let mut acc = Series::one(self.order);
        let mut pw = Series::one(self.order);
        for _ in 0..self.order {
            pw = pw.mul(&g);
            if pw.body.is_zero() {
                break;
            }
            acc = acc.add(&pw);
        }
        Ok(acc)
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + O(deg {})", self.body, self.order + 1)
    }
}

impl fmt::Debug for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Expands `numer / prod f_i^{m_i}` up to total degree `order`. Every
/// factor must have constant term 1.
pub fn series_expand_rational(
    numer: &Poly,
    denom_factors: &[(Poly, u32)],
    order: usize,
) -> Result<Series> {
    let mut acc = Series::new(numer, order);
    for (f, mult) in denom_factors {
        if f.coefficient(&Monomial::one()) != Rat::one() {
            return Err(Error::BadSeriesFactor);
        }
        if *mult == 0 {
            continue;
        }
        let inv = Series::new(f, order).inverse()?;
        acc = acc.mul(&inv.pow(*mult));
    }
    Ok(acc)
}
