//! Gauss-Jordan elimination over Q(t).

use crate::coeff::RatFunc;

/// Result of reducing `A x = b`.
#[derive(Debug, Clone)]
pub struct Solution {
    /// Particular solution with every free variable set to zero.
    pub values: Vec<RatFunc>,
    pub pivot_columns: Vec<usize>,
    pub free_columns: Vec<usize>,
}

impl Solution {
    pub fn is_unique(&self) -> bool {
        self.free_columns.is_empty()
    }
}

/// Solves `A x = b` exactly, or returns `None` when inconsistent.
///
/// Columns are processed left to right, so pivots are the earliest linearly
/// independent columns; the returned solution is supported on them. Within a
/// column the pivot row is the one with the smallest entry, which keeps the
/// work in the Laurent ring whenever a monomial pivot is available.
pub fn solve(rows: &[Vec<RatFunc>], rhs: &[RatFunc]) -> Option<Solution> {
    assert_eq!(rows.len(), rhs.len(), "row count mismatch");
    let ncols = rows.first().map_or(0, Vec::len);
    let mut m: Vec<Vec<RatFunc>> = rows
        .iter()
        .zip(rhs)
        .map(|(r, b)| {
            assert_eq!(r.len(), ncols, "ragged matrix");
            let mut row = r.clone();
            row.push(b.clone());
            row
        })
        .collect();

    let mut pivot_columns = Vec::new();
    let mut free_columns = Vec::new();
    let mut next_row = 0;
    for col in 0..ncols {
        let pick = (next_row..m.len())
            .filter(|&r| !m[r][col].is_zero())
            .min_by_key(|&r| (m[r][col].weight(), r));
        let Some(pr) = pick else {
            free_columns.push(col);
            continue;
        };
        m.swap(next_row, pr);
        let inv = m[next_row][col].recip();
        let pivot_row: Vec<RatFunc> = m[next_row].iter().map(|v| v * &inv).collect();
        for (r, row) in m.iter_mut().enumerate() {
            if r == next_row || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (c, pv) in pivot_row.iter().enumerate().skip(col) {
                if !pv.is_zero() {
                    row[c] = &row[c] - &(&factor * pv);
                }
            }
        }
        m[next_row] = pivot_row;
        pivot_columns.push(col);
        next_row += 1;
    }

    if m[next_row..].iter().any(|row| !row[ncols].is_zero()) {
        return None;
    }
    let mut values = vec![RatFunc::zero(); ncols];
    for (i, &col) in pivot_columns.iter().enumerate() {
        values[col] = m[i][ncols].clone();
    }
    Some(Solution { values, pivot_columns, free_columns })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(c: i64) -> RatFunc {
        RatFunc::from_int(c)
    }

    #[test]
    fn solves_square_system() {
        // t x + y = 1 ; x - y = 0  ->  x = y = 1/(t+1)
        let t = RatFunc::t_pow(1);
        let rows = vec![vec![t.clone(), r(1)], vec![r(1), r(-1)]];
        let sol = solve(&rows, &[r(1), r(0)]).unwrap();
        let expected = r(1) / (&t + &r(1));
        assert_eq!(sol.values, vec![expected.clone(), expected]);
        assert!(sol.is_unique());
    }

    #[test]
    fn detects_inconsistency_and_free_columns() {
        let rows = vec![vec![r(1), r(2)], vec![r(2), r(4)]];
        assert!(solve(&rows, &[r(1), r(3)]).is_none());
        let sol = solve(&rows, &[r(1), r(2)]).unwrap();
        assert_eq!(sol.pivot_columns, vec![0]);
        assert_eq!(sol.free_columns, vec![1]);
        assert_eq!(sol.values, vec![r(1), r(0)]);
    }
}
