//! Exact rank of integer matrices by fraction-free sparse elimination.
//!
//! Rows are reduced against previously accepted pivot rows with
//! `row <- a * row - b * pivot`, and every resulting row is divided by the gcd
//! of its entries. All arithmetic is on arbitrary-precision integers, so the
//! result is the rank over the rationals.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

type Row = Vec<(usize, BigInt)>;

/// Rank over `Q` of a matrix given as sparse rows of `(column, value)`.
///
/// Columns within a row may appear in any order; zero values are ignored and
/// repeated columns are summed.
pub fn rank_sparse<I>(rows: I) -> usize
where
    I: IntoIterator<Item = Vec<(usize, i64)>>,
{
    let mut rows: Vec<Row> = rows.into_iter().map(normalize).filter(|r| !r.is_empty()).collect();
    // Sparse rows first keeps fill-in low.
    rows.sort_by_key(Vec::len);

    let mut pivots: HashMap<usize, Row> = HashMap::new();
    for mut row in rows {
        while let Some((lead, _)) = row.first() {
            match pivots.get(lead) {
                Some(pivot) => row = eliminate(&row, pivot),
                None => {
                    pivots.insert(*lead, row);
                    break;
                }
            }
        }
    }
    pivots.len()
}

/// Rank over `Q` of a dense integer matrix.
pub fn rank_dense(matrix: &[Vec<i64>]) -> usize {
    rank_sparse(matrix.iter().map(|row| {
        row.iter()
            .enumerate()
            .filter(|(_, &x)| x != 0)
            .map(|(c, &x)| (c, x))
            .collect()
    }))
}

fn normalize(mut entries: Vec<(usize, i64)>) -> Row {
    entries.sort_by_key(|&(c, _)| c);
    let mut row: Row = Vec::with_capacity(entries.len());
    for (c, x) in entries {
        match row.last_mut() {
            Some((last, acc)) if *last == c => *acc += x,
            _ => row.push((c, BigInt::from(x))),
        }
    }
    row.retain(|(_, x)| !x.is_zero());
    reduce_content(&mut row);
    row
}

/// `a * row - b * pivot` where `a`, `b` are the leading coefficients of
/// `pivot` and `row`; the leading column cancels.
fn eliminate(row: &Row, pivot: &Row) -> Row {
    let (a, b) = {
        let g = pivot[0].1.gcd(&row[0].1);
        (&pivot[0].1 / &g, &row[0].1 / &g)
    };
    let mut out: Row = Vec::with_capacity(row.len() + pivot.len());
    let (mut i, mut j) = (1, 1);
    while i < row.len() || j < pivot.len() {
        let next = match (row.get(i), pivot.get(j)) {
            (Some((cr, xr)), Some((cp, xp))) if cr == cp => {
                i += 1;
                j += 1;
                (*cr, &a * xr - &b * xp)
            }
            (Some((cr, xr)), Some((cp, _))) if cr < cp => {
                i += 1;
                (*cr, &a * xr)
            }
            (Some((cr, xr)), None) => {
                i += 1;
                (*cr, &a * xr)
            }
            (_, Some((cp, xp))) => {
                j += 1;
                (*cp, -(&b * xp))
            }
            (None, None) => unreachable!(),
        };
        if !next.1.is_zero() {
            out.push(next);
        }
    }
    reduce_content(&mut out);
    out
}

fn reduce_content(row: &mut Row) {
    let mut g = BigInt::zero();
    for (_, x) in row.iter() {
        g = g.gcd(x);
        if g.is_one() {
            return;
        }
    }
    if g.is_zero() || g.abs().is_one() {
        return;
    }
    for (_, x) in row.iter_mut() {
        *x = &*x / &g;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    /// Textbook Gaussian elimination over the rationals.
    fn rational_rank(matrix: &[Vec<i64>]) -> usize {
        let mut m: Vec<Vec<BigRational>> = matrix
            .iter()
            .map(|r| r.iter().map(|&x| BigRational::from_integer(x.into())).collect())
            .collect();
        let cols = m.first().map_or(0, Vec::len);
        let mut rank = 0;
        for c in 0..cols {
            let Some(p) = (rank..m.len()).find(|&r| !m[r][c].is_zero()) else {
                continue;
            };
            m.swap(rank, p);
            for r in 0..m.len() {
                if r != rank && !m[r][c].is_zero() {
                    let f = &m[r][c] / &m[rank][c];
                    for k in 0..cols {
                        let t = &f * &m[rank][k];
                        m[r][k] -= t;
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    #[test]
    fn small_ranks() {
        assert_eq!(rank_dense(&[]), 0);
        assert_eq!(rank_dense(&[vec![0, 0], vec![0, 0]]), 0);
        assert_eq!(rank_dense(&[vec![1, 2], vec![2, 4]]), 1);
        assert_eq!(rank_dense(&[vec![1, 2], vec![3, 4]]), 2);
        assert_eq!(rank_dense(&[vec![2, 4, 6], vec![3, 6, 9], vec![1, 0, 1]]), 2);
    }

    #[test]
    fn repeated_columns_sum() {
        assert_eq!(rank_sparse([vec![(0, 1), (0, -1)]]), 0);
        assert_eq!(rank_sparse([vec![(3, 1), (1, 2)], vec![(1, 4), (3, 2)]]), 1);
    }

    #[test]
    fn large_entries_stay_exact() {
        let big = 1i64 << 40;
        let m = vec![vec![big, big + 1], vec![big - 1, big]];
        // det = big^2 - (big^2 - 1) = 1
        assert_eq!(rank_dense(&m), 2);
    }

    proptest::proptest! {
        #[test]
        fn matches_rational_elimination(
            m in proptest::collection::vec(proptest::collection::vec(-3i64..=3, 5), 0..7)
        ) {
            proptest::prop_assert_eq!(rank_dense(&m), rational_rank(&m));
        }
    }
}
