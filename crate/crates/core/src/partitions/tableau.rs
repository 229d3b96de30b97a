use std::fmt;

use super::Partition;

/// A semistandard tableau: rows weakly increase, columns strictly increase.
/// Entries are 1-based.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Tableau {
    shape: Partition,
    rows: Vec<Vec<u8>>,
}

impl Tableau {
    /// Checks semistandardness and the entry bound.
    pub fn new(rows: Vec<Vec<u8>>, d: usize) -> Option<Tableau> {
        let shape = Partition::new(rows.iter().map(|r| r.len() as u32).collect()).ok()?;
        let ok_entries = rows.iter().flatten().all(|&v| v >= 1 && v as usize <= d);
        let ok_rows = rows.iter().all(|r| r.windows(2).all(|w| w[0] <= w[1]));
        let ok_cols = rows
            .windows(2)
            .all(|w| w[1].iter().zip(&w[0]).all(|(b, a)| b > a));
        (ok_entries && ok_rows && ok_cols).then_some(Tableau { shape, rows })
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<u8>] {
        &self.rows
    }

    /// Number of entries equal to each of `1..=d`.
    pub fn content(&self, d: usize) -> Vec<u32> {
        let mut c = vec![0u32; d];
        for &v in self.rows.iter().flatten() {
            c[v as usize - 1] += 1;
        }
        c
    }

    /// `b[i][q]`: how many entries of row `i` equal `q + 1`.
    pub fn row_contents(&self, d: usize) -> Vec<Vec<u32>> {
        self.rows
            .iter()
            .map(|r| {
                let mut c = vec![0u32; d];
                for &v in r {
                    c[v as usize - 1] += 1;
                }
                c
            })
            .collect()
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|v| v.to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect();
        write!(f, "[{}]", rows.join(" / "))
    }
}

impl fmt::Debug for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// All semistandard tableaux of shape `lambda` with entries in `1..=d`,
/// ordered lexicographically by reading word (rows top to bottom).
pub fn ssyt_enumerate(lambda: &Partition, d: usize) -> Vec<Tableau> {
    let shape: Vec<usize> = lambda.parts().iter().map(|&p| p as usize).collect();
    let cells: Vec<(usize, usize)> = shape
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
        .collect();
    let mut rows: Vec<Vec<u8>> = shape.iter().map(|&len| vec![0u8; len]).collect();
    let mut out = Vec::new();
    if lambda.rows() > d {
        return out;
    }
    fn fill(
        k: usize,
        cells: &[(usize, usize)],
        rows: &mut Vec<Vec<u8>>,
        d: usize,
        shape: &Partition,
        out: &mut Vec<Tableau>,
    ) {
        if k == cells.len() {
            out.push(Tableau {
                shape: shape.clone(),
                rows: rows.clone(),
            });
            return;
        }
        let (r, c) = cells[k];
        let mut lo = 1u8;
        if c > 0 {
            lo = lo.max(rows[r][c - 1]);
        }
        if r > 0 {
            lo = lo.max(rows[r - 1][c] + 1);
        }
        // leave room for the strictly increasing column below
        let below = shape.conjugate().part(c) as usize - 1 - r;
        let hi = d.saturating_sub(below) as u8;
        for v in lo..=hi {
            rows[r][c] = v;
            fill(k + 1, cells, rows, d, shape, out);
        }
        rows[r][c] = 0;
    }
    fill(0, &cells, &mut rows, d, lambda, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;
    use crate::partitions::weyl_dim;

    #[test]
    fn single_column() {
        let ts = ssyt_enumerate(&part![1, 1, 1], 3);
        assert_eq!(ts.len(), 1);
        assert_eq!(ts[0].rows(), &[vec![1], vec![2], vec![3]]);
    }

    #[test]
    fn counts_match_weyl_dimension() {
        for n in 0..=6 {
            for lambda in Partition::all_of(n, 6) {
                for d in 1..=4 {
                    assert_eq!(
                        ssyt_enumerate(&lambda, d).len() as u128,
                        weyl_dim(&lambda, d),
                        "{lambda:?} d={d}"
                    );
                }
            }
        }
    }

    #[test]
    fn order_and_validity() {
        let ts = ssyt_enumerate(&part![2, 2], 3);
        assert_eq!(ts.len(), 6);
        assert_eq!(ts[0].rows(), &[vec![1, 1], vec![2, 2]]);
        for t in &ts {
            assert!(Tableau::new(t.rows().to_vec(), 3).is_some());
        }
        let words: Vec<Vec<u8>> = ts.iter().map(|t| t.rows().concat()).collect();
        assert!(words.windows(2).all(|w| w[0] < w[1]));
    }
}
