use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::Rat;

/// Dense matrix of rationals, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rat>,
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> RatMatrix {
        RatMatrix {
            rows,
            cols,
            entries: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> RatMatrix {
        let mut m = RatMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rat::one());
        }
        m
    }

    /// Builds a matrix from rows; every row must have length `cols`.
    pub fn from_rows(cols: usize, rows: Vec<Vec<Rat>>) -> RatMatrix {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged row");
            entries.extend(r);
        }
        RatMatrix {
            rows: n,
            cols,
            entries,
        }
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> RatMatrix {
        let cols = rows.first().map_or(0, |r| r.len());
        RatMatrix::from_rows(
            cols,
            rows.iter()
                .map(|r| r.iter().map(|&v| Rat::from_int(v)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rat {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rat) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Rat] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn mul_vec(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|r| self.row(r).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }
}

/// Rows of `m` scaled to integers (denominators cleared row by row).
fn integer_rows(m: &RatMatrix) -> Vec<Vec<BigInt>> {
    (0..m.rows())
        .map(|r| {
            let row = m.row(r);
            let l = Rat::denominator_lcm(row);
            let lr = Rat::from_bigint(l);
            row.iter()
                .map(|v| {
                    let s = v * &lr;
                    debug_assert!(s.is_integer());
                    s.numer()
                })
                .collect()
        })
        .collect()
}

/// Fraction-free (Bareiss) forward elimination. Returns the echelon rows and
/// the pivot column of each.
fn bareiss_echelon(mut a: Vec<Vec<BigInt>>, cols: usize) -> (Vec<Vec<BigInt>>, Vec<usize>) {
    let nrows = a.len();
    let mut pivots = Vec::new();
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..cols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let (top, rest) = a.split_at_mut(r + 1);
        let piv_row = &top[r];
        for row in rest.iter_mut() {
            let f = row[c].clone();
            for j in c..cols {
                // exact division by the previous pivot is the Bareiss invariant
                let v = &row[j] * &piv_row[c] - &f * &piv_row[j];
                row[j] = v / &prev;
            }
            for v in row.iter_mut().take(c) {
                *v = BigInt::zero();
            }
        }
        prev = a[r][c].clone();
        pivots.push(c);
        r += 1;
    }
    a.truncate(r);
    (a, pivots)
}

/// Reduced row echelon form over the rationals from integer echelon rows.
fn rref_from_echelon(ech: &[Vec<BigInt>], pivots: &[usize]) -> Vec<Vec<Rat>> {
    let mut rows: Vec<Vec<Rat>> = ech
        .iter()
        .zip(pivots)
        .map(|(row, &pc)| {
            let p = Rat::from_bigint(row[pc].clone());
            row.iter()
                .map(|v| Rat::from_bigint(v.clone()) / &p)
                .collect()
        })
        .collect();
    for i in (0..rows.len()).rev() {
        let pc = pivots[i];
        let (top, bottom) = rows.split_at_mut(i);
        let pivot_row = &bottom[0];
        for row in top.iter_mut() {
            let f = row[pc].clone();
            if f.is_zero() {
                continue;
            }
            for (x, p) in row[pc..].iter_mut().zip(&pivot_row[pc..]) {
                *x = &*x - &(&f * p);
            }
        }
    }
    rows
}

fn nullspace_from_rref(rref: &[Vec<Rat>], pivots: &[usize], cols: usize) -> Vec<Vec<BigInt>> {
    let mut is_pivot = vec![false; cols];
    for &p in pivots {
        is_pivot[p] = true;
    }
    (0..cols)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = vec![Rat::zero(); cols];
            v[f] = Rat::one();
            for (row, &pc) in rref.iter().zip(pivots) {
                v[pc] = -&row[f];
            }
            normalize_integer_vector(&v)
        })
        .collect()
}

/// Scales a rational vector to coprime integers whose first nonzero entry is
/// positive. The zero vector maps to itself.
pub fn normalize_integer_vector(v: &[Rat]) -> Vec<BigInt> {
    let l = Rat::from_bigint(Rat::denominator_lcm(v));
    let ints: Vec<BigInt> = v.iter().map(|x| (x * &l).numer()).collect();
    normalize_bigint_vector(ints)
}

pub fn normalize_bigint_vector(mut ints: Vec<BigInt>) -> Vec<BigInt> {
    let g = ints.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if g.is_zero() {
        return ints;
    }
    let neg = ints
        .iter()
        .find(|x| !x.is_zero())
        .is_some_and(|x| x.is_negative());
    for x in ints.iter_mut() {
        *x = &*x / &g;
        if neg {
            *x = -&*x;
        }
    }
    ints
}

/// Basis of the right nullspace of `m`, one normalized integer vector per
/// free column (reduced-echelon convention, so the result does not depend on
/// row order).
pub fn nullspace(m: &RatMatrix) -> Vec<Vec<BigInt>> {
    let (ech, pivots) = bareiss_echelon(integer_rows(m), m.cols());
    let rref = rref_from_echelon(&ech, &pivots);
    nullspace_from_rref(&rref, &pivots, m.cols())
}

pub fn rank(m: &RatMatrix) -> usize {
    bareiss_echelon(integer_rows(m), m.cols()).1.len()
}

/// Incremental fraction-free row reduction for tall, narrow systems.
///
/// Rows are pushed one at a time and reduced against the current echelon
/// basis; only rows that raise the rank are stored, so memory stays at
/// `cols x cols` regardless of how many rows stream through.
#[derive(Clone, Debug)]
pub struct EchelonBuilder {
    cols: usize,
    // primitive integer rows, sorted by pivot column
    rows: Vec<(usize, Vec<Rat>)>,
    seen: usize,
}

impl EchelonBuilder {
    pub fn new(cols: usize) -> EchelonBuilder {
        EchelonBuilder {
            cols,
            rows: Vec::new(),
            seen: 0,
        }
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows_seen(&self) -> usize {
        self.seen
    }

    pub fn is_full_rank(&self) -> bool {
        self.rows.len() == self.cols
    }

    /// Reduces `row` and keeps it when independent. Returns whether the rank
    /// increased.
    pub fn push(&mut self, row: &[Rat]) -> bool {
        assert_eq!(row.len(), self.cols);
        self.seen += 1;
        if self.is_full_rank() {
            return false;
        }
        let l = Rat::from_bigint(Rat::denominator_lcm(row));
        let mut cur: Vec<Rat> = if l.is_one() {
            row.to_vec()
        } else {
            row.iter().map(|v| v * &l).collect()
        };
        for (pc, prow) in &self.rows {
            let f = &cur[*pc];
            if f.is_zero() {
                continue;
            }
            let f = f.clone();
            let p = &prow[*pc];
            for j in 0..self.cols {
                if prow[j].is_zero() {
                    if !cur[j].is_zero() && !p.is_one() {
                        cur[j] = &cur[j] * p;
                    }
                    continue;
                }
                cur[j] = &(&cur[j] * p) - &(&f * &prow[j]);
            }
            make_primitive(&mut cur);
        }
        let Some(pc) = cur.iter().position(|v| !v.is_zero()) else {
            return false;
        };
        make_primitive(&mut cur);
        let pos = self.rows.partition_point(|(c, _)| *c < pc);
        self.rows.insert(pos, (pc, cur));
        true
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.rows.iter().map(|(c, _)| *c).collect()
    }

    pub fn nullspace(&self) -> Vec<Vec<BigInt>> {
        let ech: Vec<Vec<BigInt>> = self
            .rows
            .iter()
            .map(|(_, r)| r.iter().map(|v| v.numer()).collect())
            .collect();
        let pivots = self.pivots();
        let rref = rref_from_echelon(&ech, &pivots);
        nullspace_from_rref(&rref, &pivots, self.cols)
    }
}

fn make_primitive(row: &mut [Rat]) {
    let mut g = BigInt::zero();
    for v in row.iter() {
        if !v.is_zero() {
            g = g.gcd(&v.numer());
            if g.is_one() {
                return;
            }
        }
    }
    if g.is_zero() || g.is_one() {
        return;
    }
    let gr = Rat::from_bigint(g);
    for v in row.iter_mut() {
        if !v.is_zero() {
            *v = &*v / &gr;
        }
    }
}

/// Converts a normalized integer vector to `i64` entries when they fit.
pub fn to_i64_vec(v: &[BigInt]) -> Option<Vec<i64>> {
    v.iter().map(|x| i64::try_from(x).ok()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iv(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn two_equation_system_gives_printed_coefficients() {
        let m = RatMatrix::from_i64_rows(&[&[20, -8, 18], &[20, 0, 12]]);
        assert_eq!(nullspace(&m), vec![iv(&[12, -15, -20])]);
        assert_eq!(rank(&m), 2);
    }

    #[test]
    fn identity_has_trivial_kernel() {
        let m = RatMatrix::identity(3);
        assert!(nullspace(&m).is_empty());
        assert_eq!(rank(&m), 3);
    }

    #[test]
    fn zero_matrix_has_full_kernel() {
        let m = RatMatrix::zeros(2, 4);
        let ns = nullspace(&m);
        assert_eq!(ns.len(), 4);
        for (i, v) in ns.iter().enumerate() {
            let mut e = vec![0; 4];
            e[i] = 1;
            assert_eq!(v, &iv(&e));
        }
        assert_eq!(rank(&RatMatrix::zeros(1, 3)), 0);
    }

    #[test]
    fn rational_entries_are_cleared() {
        let m = RatMatrix::from_rows(3, vec![vec![Rat::new(1, 2), Rat::new(1, 3), Rat::zero()]]);
        // x/2 + y/3 = 0  ->  (2,-3,0) and e3
        assert_eq!(nullspace(&m), vec![iv(&[2, -3, 0]), iv(&[0, 0, 1])]);
    }

    #[test]
    fn streaming_matches_dense() {
        let rows: Vec<Vec<i64>> = vec![
            vec![1, 2, 3, 4],
            vec![2, 4, 6, 8],
            vec![0, 1, 1, 0],
            vec![1, 3, 4, 4],
        ];
        let dense = RatMatrix::from_rows(
            4,
            rows.iter()
                .map(|r| r.iter().map(|&v| Rat::from_int(v)).collect())
                .collect(),
        );
        let mut eb = EchelonBuilder::new(4);
        for r in &rows {
            eb.push(&r.iter().map(|&v| Rat::from_int(v)).collect::<Vec<_>>());
        }
        assert_eq!(eb.rank(), rank(&dense));
        assert_eq!(eb.nullspace(), nullspace(&dense));
    }

    #[test]
    fn normalization_makes_leading_entry_positive() {
        let v = normalize_integer_vector(&[Rat::zero(), Rat::new(-2, 3), Rat::new(4, 3)]);
        assert_eq!(v, iv(&[0, 1, -2]));
    }
}
