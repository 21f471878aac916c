//! Reduced simplicial homology over the integers via Smith normal form.
//!
//! Elimination runs in `i64` with checked arithmetic and restarts in
//! arbitrary precision if any entry would overflow.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, One, Signed};

use crate::complex::Face;

/// Invariant factors of a dense integer matrix: nonzero diagonal entries of
/// its Smith normal form, each dividing the next.
pub fn invariant_factors(matrix: &[Vec<i64>]) -> Vec<BigInt> {
    let rows = matrix.len();
    let ncols = matrix.first().map_or(0, Vec::len);
    let cols = (0..ncols)
        .map(|j| {
            (0..rows)
                .filter(|&i| matrix[i][j] != 0)
                .map(|i| (i, matrix[i][j]))
                .collect()
        })
        .collect();
    sparse_invariant_factors(rows, cols)
}

type SparseColumn = Vec<(usize, i64)>;

/// Invariant factors of a sparse matrix given column by column, each column a
/// row-sorted list of nonzero entries.
///
/// Unit pivots are eliminated first: the matrix splits as `[1] ⊕ M'` for each
/// one, so only the residual block goes through dense elimination.
pub fn sparse_invariant_factors(rows: usize, cols: Vec<SparseColumn>) -> Vec<BigInt> {
    if let Some((units, residual)) = eliminate_units(rows, &cols) {
        let mut out = vec![BigInt::one(); units];
        out.extend(dense_factors(residual));
        return out;
    }
    let mut dense = vec![vec![0i64; cols.len()]; rows];
    for (j, col) in cols.iter().enumerate() {
        for &(i, v) in col {
            dense[i][j] = v;
        }
    }
    dense_factors(dense)
}

fn dense_factors(matrix: Vec<Vec<i64>>) -> Vec<BigInt> {
    if let Some(d) = snf_diagonal(matrix.clone()) {
        return d.into_iter().map(BigInt::from).collect();
    }
    let big: Vec<Vec<BigInt>> = matrix
        .iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    snf_diagonal(big).expect("arbitrary precision cannot overflow")
}

/// Column reduction against unit pivots. Returns the pivot count and the
/// residual dense block on non-pivot rows, or `None` on overflow.
fn eliminate_units(rows: usize, cols: &[SparseColumn]) -> Option<(usize, Vec<Vec<i64>>)> {
    let mut pivot_of_row: Vec<Option<usize>> = vec![None; rows];
    let mut pivots: Vec<(i64, SparseColumn)> = Vec::new();
    let mut pending: Vec<SparseColumn> = cols.to_vec();
    loop {
        let mut progress = false;
        let mut deferred = Vec::new();
        for col in pending {
            let col = reduce_column(col, &pivot_of_row, &pivots)?;
            if col.is_empty() {
                continue;
            }
            match col.iter().find(|(_, v)| v.abs() == 1) {
                Some(&(r, v)) => {
                    pivot_of_row[r] = Some(pivots.len());
                    pivots.push((v, col));
                    progress = true;
                }
                None => deferred.push(col),
            }
        }
        pending = deferred;
        if !progress {
            break;
        }
    }
    let free_rows: Vec<usize> = (0..rows).filter(|&r| pivot_of_row[r].is_none()).collect();
    let mut position = vec![usize::MAX; rows];
    for (k, &r) in free_rows.iter().enumerate() {
        position[r] = k;
    }
    let mut residual = vec![vec![0i64; pending.len()]; free_rows.len()];
    for (j, col) in pending.iter().enumerate() {
        for &(r, v) in col {
            residual[position[r]][j] = v;
        }
    }
    Some((pivots.len(), residual))
}

/// Clears every pivot row from `col`, oldest pivot first. Pivot column `k` is
/// zero on the rows of pivots older than `k`, so this terminates.
fn reduce_column(
    mut col: SparseColumn,
    pivot_of_row: &[Option<usize>],
    pivots: &[(i64, SparseColumn)],
) -> Option<SparseColumn> {
    loop {
        let hit = col
            .iter()
            .filter_map(|&(r, v)| pivot_of_row[r].map(|k| (k, v)))
            .min_by_key(|&(k, _)| k);
        let Some((k, v)) = hit else {
            return Some(col);
        };
        let (unit, ref pcol) = pivots[k];
        // unit is ±1, so v * unit is the multiple that cancels the pivot row
        col = axpy(&col, pcol, v.checked_mul(unit)?.checked_neg()?)?;
    }
}

/// `a + s * b` on sorted sparse columns.
fn axpy(a: &SparseColumn, b: &SparseColumn, s: i64) -> Option<SparseColumn> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let take_a = j == b.len() || (i < a.len() && a[i].0 < b[j].0);
        let take_b = i == a.len() || (j < b.len() && b[j].0 < a[i].0);
        let (r, v) = if take_a {
            i += 1;
            a[i - 1]
        } else if take_b {
            j += 1;
            (b[j - 1].0, b[j - 1].1.checked_mul(s)?)
        } else {
            i += 1;
            j += 1;
            (
                a[i - 1].0,
                a[i - 1].1.checked_add(b[j - 1].1.checked_mul(s)?)?,
            )
        };
        if v != 0 {
            out.push((r, v));
        }
    }
    Some(out)
}

/// Returns `None` on overflow.
#[allow(clippy::needless_range_loop)]
fn snf_diagonal<T>(mut a: Vec<Vec<T>>) -> Option<Vec<T>>
where
    T: Clone + Integer + Signed + CheckedAdd + CheckedSub + CheckedMul,
{
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut diag = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        // pivot: smallest nonzero absolute value in the trailing block
        let mut best: Option<(usize, usize)> = None;
        for (i, row) in a.iter().enumerate().skip(t) {
            for (j, x) in row.iter().enumerate().skip(t) {
                if !x.is_zero() && best.is_none_or(|(bi, bj)| x.abs() < a[bi][bj].abs()) {
                    best = Some((i, j));
                    if x.abs().is_one() {
                        break;
                    }
                }
            }
            if best.is_some_and(|(bi, bj)| a[bi][bj].abs().is_one()) {
                break;
            }
        }
        let Some((pi, pj)) = best else { break };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let mut dirty = false;
            // clear column t
            for i in t + 1..rows {
                if a[i][t].is_zero() {
                    continue;
                }
                let q = a[i][t].div_floor(&a[t][t]);
                for j in t..cols {
                    let v = a[i][j].checked_sub(&q.checked_mul(&a[t][j])?)?;
                    a[i][j] = v;
                }
                if !a[i][t].is_zero() {
                    dirty = true;
                    if a[i][t].abs() < a[t][t].abs() {
                        a.swap(t, i);
                    }
                }
            }
            // clear row t
            for j in t + 1..cols {
                if a[t][j].is_zero() {
                    continue;
                }
                let q = a[t][j].div_floor(&a[t][t]);
                for row in a.iter_mut().skip(t) {
                    let v = row[j].checked_sub(&q.checked_mul(&row[t])?)?;
                    row[j] = v;
                }
                if !a[t][j].is_zero() {
                    dirty = true;
                    if a[t][j].abs() < a[t][t].abs() {
                        for row in a.iter_mut() {
                            row.swap(t, j);
                        }
                    }
                }
            }
            if dirty {
                continue;
            }
            // divisibility: fold an offending row into row t
            let p = a[t][t].clone();
            let offending =
                (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !a[i][j].is_multiple_of(&p)));
            match offending {
                Some(i) => {
                    for j in t..cols {
                        let v = a[t][j].checked_add(&a[i][j])?;
                        a[t][j] = v;
                    }
                }
                None => break,
            }
        }
        diag.push(a[t][t].abs());
        t += 1;
    }
    Some(diag)
}

/// Reduced homology of a complex given as a list of faces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedHomology {
    /// Dimension of the complex; -1 for `{∅}`.
    pub dim: i32,
    /// Free ranks in degrees `0..=dim` (empty when `dim < 0`).
    pub betti: Vec<usize>,
    /// Rank of the degree −1 group; 1 exactly for `{∅}`.
    pub betti_minus_one: usize,
    /// Torsion coefficients greater than one, per degree `0..=dim`.
    pub torsion: Vec<Vec<BigInt>>,
}

impl ReducedHomology {
    /// Dimension of `H̃_i(K; F_p)` (or over `Q` for `p = 0`), for `i ≥ 0`.
    pub fn field_rank(&self, degree: usize, characteristic: u64) -> usize {
        let free = self.betti.get(degree).copied().unwrap_or(0);
        if characteristic == 0 {
            return free;
        }
        let p = BigInt::from(characteristic);
        let count = |d: usize| {
            self.torsion
                .get(d)
                .map_or(0, |ts| ts.iter().filter(|t| t.is_multiple_of(&p)).count())
        };
        // universal coefficients: Tor term comes from the degree below
        let below = if degree == 0 { 0 } else { count(degree - 1) };
        free + count(degree) + below
    }

    pub fn is_acyclic_below_top(&self, characteristic: u64) -> Option<usize> {
        (0..self.dim.max(0) as usize).find(|&i| self.field_rank(i, characteristic) != 0)
    }
}

/// Reduced homology of the complex whose faces are exactly `faces`. The set
/// must be closed under taking subsets and contain `∅`.
pub fn reduced_homology(faces: &[Face]) -> ReducedHomology {
    let top = faces.iter().map(|f| f.len()).max().unwrap_or(0);
    let dim = top as i32 - 1;
    // by_size[k] = faces with k vertices, i.e. chain group C_{k-1}
    let mut by_size: Vec<Vec<Face>> = vec![Vec::new(); top + 1];
    for f in faces {
        by_size[f.len()].push(*f);
    }
    for level in &mut by_size {
        level.sort();
    }
    let index: Vec<HashMap<Face, usize>> = by_size
        .iter()
        .map(|l| l.iter().enumerate().map(|(i, f)| (*f, i)).collect())
        .collect();

    // boundary from size k to size k-1, for k = 1..=top
    let mut ranks = vec![0usize; top + 2];
    let mut factors: Vec<Vec<BigInt>> = vec![Vec::new(); top + 2];
    for k in 1..=top {
        let rows = by_size[k - 1].len();
        let cols = by_size[k].len();
        if rows == 0 || cols == 0 {
            continue;
        }
        let mut columns: Vec<SparseColumn> = Vec::with_capacity(cols);
        for f in &by_size[k] {
            let mut col: SparseColumn = f
                .iter()
                .enumerate()
                .map(|(pos, v)| {
                    (
                        index[k - 1][&f.without(v)],
                        if pos % 2 == 0 { 1 } else { -1 },
                    )
                })
                .collect();
            col.sort_unstable();
            columns.push(col);
        }
        let d = sparse_invariant_factors(rows, columns);
        ranks[k] = d.len();
        factors[k] = d.into_iter().filter(|x| !x.is_one()).collect();
    }
    let chain = |k: usize| by_size.get(k).map_or(0, Vec::len);
    let betti_minus_one = chain(0) - ranks[1];
    let mut betti = Vec::new();
    let mut torsion = Vec::new();
    for k in 1..=top {
        // degree k-1: ker ∂ from size k, image from size k+1
        betti.push(chain(k) - ranks[k] - ranks.get(k + 1).copied().unwrap_or(0));
        torsion.push(factors.get(k + 1).cloned().unwrap_or_default());
    }
    ReducedHomology {
        dim,
        betti,
        betti_minus_one,
        torsion,
    }
}

/// All subsets of each generator, i.e. the face set of the complex they span.
pub fn faces_of(facets: &[Face]) -> Vec<Face> {
    let mut seen = std::collections::HashSet::new();
    for f in facets {
        let bits = f.0;
        let mut sub = bits;
        loop {
            seen.insert(Face(sub));
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & bits;
        }
    }
    if facets.is_empty() {
        seen.insert(Face::EMPTY);
    }
    let mut out: Vec<Face> = seen.into_iter().collect();
    out.sort_by(Face::canonical_cmp);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bi(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn snf_small() {
        assert_eq!(
            invariant_factors(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]),
            bi(&[2, 6, 12])
        );
        assert_eq!(invariant_factors(&[vec![0, 0], vec![0, 0]]), bi(&[]));
        assert_eq!(invariant_factors(&[vec![2, 0], vec![0, 3]]), bi(&[1, 6]));
    }

    #[test]
    fn snf_falls_back_to_bigint() {
        let big = i64::MAX / 2;
        let d = invariant_factors(&[vec![big, 3], vec![big - 1, 5]]);
        let det: BigInt = BigInt::from(big) * 5 - BigInt::from(big - 1) * 3;
        assert_eq!(d.len(), 2);
        assert_eq!(&d[0] * &d[1], det.abs());
    }

    #[test]
    fn simplex_boundaries_are_spheres() {
        for n in 2..=6usize {
            let full = Face((1u64 << n) - 1);
            let facets: Vec<Face> = (0..n).map(|v| full.without(v)).collect();
            let h = reduced_homology(&faces_of(&facets));
            for (i, &b) in h.betti.iter().enumerate() {
                assert_eq!(b, usize::from(i == n - 2), "n={n} degree {i}");
            }
        }
    }

    #[test]
    fn point_and_empty() {
        let h = reduced_homology(&faces_of(&[Face(1)]));
        assert_eq!(h.betti, vec![0]);
        let h = reduced_homology(&[Face::EMPTY]);
        assert_eq!(h.dim, -1);
        assert_eq!(h.betti_minus_one, 1);
    }

    #[test]
    fn projective_plane_torsion() {
        // six-vertex triangulation of RP^2
        let tri = [
            [0, 1, 2],
            [0, 2, 3],
            [0, 3, 4],
            [0, 4, 5],
            [0, 5, 1],
            [1, 2, 4],
            [2, 3, 5],
            [3, 4, 1],
            [4, 5, 2],
            [5, 1, 3],
        ];
        let facets: Vec<Face> = tri
            .iter()
            .map(|t| Face::from_indices(t.iter().copied()))
            .collect();
        let h = reduced_homology(&faces_of(&facets));
        assert_eq!(h.betti, vec![0, 0, 0]);
        assert_eq!(h.torsion[1], bi(&[2]));
        assert_eq!(h.field_rank(1, 2), 1);
        assert_eq!(h.field_rank(2, 2), 1);
        assert_eq!(h.field_rank(1, 3), 0);
    }
}
