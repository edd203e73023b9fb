//! Integer matrix kernels: Hermite form, Smith form with transforms, and
//! quotient-lattice invariants.
//!
//! Everything works over `i128` with checked arithmetic; the lattices arising
//! from the case models are tiny (rank <= 128) and entries stay far below the
//! overflow range.

use crate::error::Error;

pub type Row = Vec<i128>;
pub type Mat = Vec<Row>;

fn checked_sub_mul(dst: &mut [i128], src: &[i128], q: i128) {
    for (d, s) in dst.iter_mut().zip(src) {
        *d = d
            .checked_sub(q.checked_mul(*s).expect("integer overflow in matrix op"))
            .expect("integer overflow in matrix op");
    }
}

/// Row-style Hermite normal form of the lattice spanned by `rows`.
///
/// Returns a canonical basis: echelon rows with positive pivots and entries
/// above each pivot reduced into `0..pivot`.
pub fn hnf_rows(rows: &[Row]) -> Mat {
    if rows.is_empty() {
        return Vec::new();
    }
    let ncols = rows[0].len();
    let mut work: Vec<Row> = rows.iter().filter(|r| r.iter().any(|&x| x != 0)).cloned().collect();
    let mut basis: Mat = Vec::new();
    for col in 0..ncols {
        loop {
            let mut idxs: Vec<usize> = (0..work.len()).filter(|&i| work[i][col] != 0).collect();
            if idxs.len() <= 1 {
                break;
            }
            idxs.sort_by_key(|&i| work[i][col].unsigned_abs());
            let piv = idxs[0];
            for &i in &idxs[1..] {
                let q = work[i][col].div_euclid(work[piv][col]);
                let pivot_row = work[piv].clone();
                checked_sub_mul(&mut work[i], &pivot_row, q);
            }
            work.retain(|r| r.iter().any(|&x| x != 0));
        }
        if let Some(i) = (0..work.len()).find(|&i| work[i][col] != 0) {
            let mut row = work.remove(i);
            if row[col] < 0 {
                for x in row.iter_mut() {
                    *x = -*x;
                }
            }
            basis.push(row);
        }
    }
    // reduce entries above each pivot
    for i in (0..basis.len()).rev() {
        let pc = basis[i].iter().position(|&x| x != 0).unwrap();
        let p = basis[i][pc];
        for j in 0..i {
            let q = basis[j][pc].div_euclid(p);
            if q != 0 {
                let lower = basis[i].clone();
                checked_sub_mul(&mut basis[j], &lower, q);
            }
        }
    }
    basis
}

/// Membership of `v` in the lattice spanned by an HNF basis.
pub fn in_lattice(v: &[i128], basis: &Mat) -> bool {
    coords_in(v, basis).is_some()
}

/// Coordinates of `v` with respect to an HNF basis, if `v` lies in its span.
pub fn coords_in(v: &[i128], basis: &Mat) -> Option<Vec<i128>> {
    let mut v = v.to_vec();
    let mut coords = Vec::with_capacity(basis.len());
    for row in basis {
        let pc = row.iter().position(|&x| x != 0).unwrap();
        if v[pc] % row[pc] != 0 {
            return None;
        }
        let q = v[pc] / row[pc];
        coords.push(q);
        checked_sub_mul(&mut v, row, q);
    }
    if v.iter().all(|&x| x == 0) {
        Some(coords)
    } else {
        None
    }
}

/// Result of a Smith normal form computation: `u * m * v = diag(factors)`.
#[derive(Debug, Clone)]
pub struct SmithResult {
    /// Diagonal `d_1 | d_2 | ...` (nonnegative), padded with zeros up to
    /// `min(rows, cols)` when the matrix is rank-deficient.
    pub factors: Vec<i128>,
    pub u: Mat,
    pub v: Mat,
    /// Inverse of `v`, tracked alongside the column operations.
    pub v_inv: Mat,
    pub rank: usize,
}

fn identity(n: usize) -> Mat {
    (0..n)
        .map(|i| (0..n).map(|j| i128::from(i == j)).collect())
        .collect()
}

struct SnfWork {
    a: Mat,
    u: Mat,
    v: Mat,
    v_inv: Mat,
    rows: usize,
    cols: usize,
}

impl SnfWork {
    fn swap_rows(&mut self, i: usize, j: usize) {
        self.a.swap(i, j);
        self.u.swap(i, j);
    }
    fn swap_cols(&mut self, i: usize, j: usize) {
        for row in self.a.iter_mut() {
            row.swap(i, j);
        }
        for row in self.v.iter_mut() {
            row.swap(i, j);
        }
        self.v_inv.swap(i, j);
    }
    /// row_j -= q * row_i
    fn row_op(&mut self, i: usize, j: usize, q: i128) {
        let src = self.a[i].clone();
        checked_sub_mul(&mut self.a[j], &src, q);
        let src = self.u[i].clone();
        checked_sub_mul(&mut self.u[j], &src, q);
    }
    /// col_j -= q * col_i  (v gets the same column op, v_inv the inverse row op)
    fn col_op(&mut self, i: usize, j: usize, q: i128) {
        for row in self.a.iter_mut() {
            let s = row[i];
            row[j] = row[j].checked_sub(q.checked_mul(s).unwrap()).unwrap();
        }
        for row in self.v.iter_mut() {
            let s = row[i];
            row[j] = row[j].checked_sub(q.checked_mul(s).unwrap()).unwrap();
        }
        let src = self.v_inv[j].clone();
        for (d, s) in self.v_inv[i].iter_mut().zip(&src) {
            *d = d.checked_add(q.checked_mul(*s).unwrap()).unwrap();
        }
    }
    fn negate_row(&mut self, i: usize) {
        for x in self.a[i].iter_mut() {
            *x = -*x;
        }
        for x in self.u[i].iter_mut() {
            *x = -*x;
        }
    }

    /// Replace the diagonal pair `(d_i, d_{i+1})` by `(gcd, lcm)`, touching
    /// only rows and columns `i` and `i+1` (both are zero off the 2x2 block).
    fn merge_pair(&mut self, i: usize) {
        let j = i + 1;
        // col_i += col_j puts d_{i+1} below the pivot
        self.col_op(j, i, -1);
        loop {
            if self.a[j][i] != 0 {
                let q = self.a[j][i].div_euclid(self.a[i][i]);
                self.row_op(i, j, q);
                if self.a[j][i] != 0 {
                    self.swap_rows(i, j);
                    continue;
                }
            }
            if self.a[i][j] != 0 {
                let q = self.a[i][j].div_euclid(self.a[i][i]);
                self.col_op(i, j, q);
                if self.a[i][j] != 0 {
                    self.swap_cols(i, j);
                    continue;
                }
            }
            break;
        }
        if self.a[i][i] < 0 {
            self.negate_row(i);
        }
        if self.a[j][j] < 0 {
            self.negate_row(j);
        }
    }

    /// Diagonalize the trailing block starting at `start`.
    ///
    /// Clears the pivot column completely before touching the pivot row, so
    /// the column operations never cause fill-in below the pivot; the pivot
    /// is re-selected as the minimal entry whenever a column swap dirties the
    /// block again (each such swap strictly shrinks the pivot).
    fn eliminate(&mut self, start: usize) -> usize {
        let mut t = start;
        while t < self.rows.min(self.cols) {
            let mut any = false;
            'step: loop {
                let mut best: Option<(usize, usize)> = None;
                for i in t..self.rows {
                    for j in t..self.cols {
                        if self.a[i][j] != 0
                            && best.is_none_or(|(bi, bj)| {
                                self.a[i][j].unsigned_abs() < self.a[bi][bj].unsigned_abs()
                            })
                        {
                            best = Some((i, j));
                        }
                    }
                }
                let Some((bi, bj)) = best else { break 'step };
                any = true;
                self.swap_rows(t, bi);
                self.swap_cols(t, bj);
                // clear the pivot column by Euclid steps
                while let Some(i) = (t + 1..self.rows).find(|&i| self.a[i][t] != 0) {
                    let q = self.a[i][t].div_euclid(self.a[t][t]);
                    self.row_op(t, i, q);
                    if self.a[i][t] != 0 {
                        self.swap_rows(t, i);
                    }
                }
                // clear the pivot row; fill-in below the pivot is impossible
                // now, but a remainder forces a column swap and a restart
                let mut dirty = false;
                for j in t + 1..self.cols {
                    if self.a[t][j] != 0 {
                        let q = self.a[t][j].div_euclid(self.a[t][t]);
                        self.col_op(t, j, q);
                        if self.a[t][j] != 0 {
                            self.swap_cols(t, j);
                            dirty = true;
                            break;
                        }
                    }
                }
                if !dirty {
                    break 'step;
                }
            }
            if !any {
                break;
            }
            if self.a[t][t] < 0 {
                self.negate_row(t);
            }
            t += 1;
        }
        t
    }
}

/// Smith normal form over the integers with unimodular transforms.
pub fn smith_normal_form(m: &Mat) -> SmithResult {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut w = SnfWork {
        a: m.clone(),
        u: identity(rows),
        v: identity(cols),
        v_inv: identity(cols),
        rows,
        cols,
    };
    let rank = w.eliminate(0);
    // enforce divisibility d_i | d_{i+1} by local 2x2 merges: each fix
    // replaces (d_i, d_{i+1}) with (gcd, lcm), strictly shrinking d_i
    loop {
        let mut bad = None;
        for i in 0..rank.saturating_sub(1) {
            let (di, dj) = (w.a[i][i], w.a[i + 1][i + 1]);
            if di != 0 && dj % di != 0 {
                bad = Some(i);
                break;
            }
        }
        let Some(i) = bad else { break };
        w.merge_pair(i);
    }
    let factors: Vec<i128> = (0..rows.min(cols)).map(|i| w.a[i][i].abs()).collect();
    debug_assert!(factors
        .windows(2)
        .all(|p| p[1] == 0 || (p[0] != 0 && p[1] % p[0] == 0) || (p[0] == 0 && p[1] == 0)));
    SmithResult {
        factors,
        u: w.u,
        v: w.v,
        v_inv: w.v_inv,
        rank,
    }
}

/// Determinant by fraction-free (Bareiss) elimination. Square matrices only.
pub fn determinant(m: &Mat) -> Result<i128, Error> {
    let n = m.len();
    if m.iter().any(|r| r.len() != n) {
        return Err(Error::Matrix("determinant needs a square matrix".into()));
    }
    if n == 0 {
        return Ok(1);
    }
    let mut a = m.clone();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if a[k][k] == 0 {
            let Some(s) = (k + 1..n).find(|&i| a[i][k] != 0) else {
                return Ok(0);
            };
            a.swap(k, s);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = a[i][j]
                    .checked_mul(a[k][k])
                    .and_then(|x| x.checked_sub(a[i][k].checked_mul(a[k][j])?))
                    .expect("integer overflow in determinant");
                a[i][j] = num / prev;
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    Ok(sign * a[n - 1][n - 1])
}

/// Invariant factors and generators of `span(sup) / span(sub)`.
///
/// `sup` must be an HNF basis and every row of `sub` must lie in its span.
/// Returns the factor list (torsion factors ascending, then one `0` per free
/// summand; trivial factors dropped) together with a generator of each summand
/// in ambient coordinates.
pub fn quotient_invariants(sup: &Mat, sub: &[Row]) -> Result<(Vec<i128>, Vec<Row>), Error> {
    let r = sup.len();
    if r == 0 {
        return Ok((Vec::new(), Vec::new()));
    }
    let mut rel: Mat = Vec::new();
    for row in sub {
        let c = coords_in(row, sup).ok_or_else(|| {
            Error::Matrix("sublattice row not contained in the ambient lattice".into())
        })?;
        rel.push(c);
    }
    if rel.is_empty() {
        rel.push(vec![0; r]);
    }
    let s = smith_normal_form(&rel);
    // Quotient Z^r / rowspan(rel): in the coordinates y = x * v the relations
    // span diag(d); generator i of the quotient is row i of v_inv, of order d_i.
    let mut ds = vec![0i128; r];
    for (i, &d) in s.factors.iter().enumerate() {
        ds[i] = d;
    }
    let mut summands: Vec<(i128, Row)> = Vec::new();
    for (i, &d) in ds.iter().enumerate() {
        if d == 1 {
            continue;
        }
        let mut amb = vec![0i128; sup[0].len()];
        for (j, &c) in s.v_inv[i].iter().enumerate() {
            for (k, &x) in sup[j].iter().enumerate() {
                amb[k] = amb[k].checked_add(c.checked_mul(x).unwrap()).unwrap();
            }
        }
        summands.push((d, amb));
    }
    summands.sort_by_key(|&(d, _)| (d == 0, d));
    let factors = summands.iter().map(|&(d, _)| d).collect();
    let gens = summands.into_iter().map(|(_, g)| g).collect();
    Ok((factors, gens))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check_transforms(mat: &Mat, s: &SmithResult) {
        let rows = mat.len();
        let cols = mat[0].len();
        for i in 0..rows {
            for j in 0..cols {
                let mut acc = 0i128;
                for k in 0..rows {
                    for l in 0..cols {
                        acc += s.u[i][k] * mat[k][l] * s.v[l][j];
                    }
                }
                if i == j && i < s.factors.len() {
                    assert_eq!(acc.abs(), s.factors[i], "diagonal mismatch at {i}");
                } else {
                    assert_eq!(acc, 0, "nonzero off-diagonal at ({i},{j})");
                }
            }
        }
    }

    fn snf_factors(m: &[&[i128]]) -> Vec<i128> {
        let mat: Mat = m.iter().map(|r| r.to_vec()).collect();
        let s = smith_normal_form(&mat);
        check_transforms(&mat, &s);
        s.factors
    }

    #[test]
    fn snf_diag_examples() {
        assert_eq!(snf_factors(&[&[2, 0], &[0, 3]]), vec![1, 6]);
        assert_eq!(snf_factors(&[&[2, 0], &[0, 4]]), vec![2, 4]);
        // entry gcd 1, determinant 36
        assert_eq!(snf_factors(&[&[4, 6], &[0, 9]]), vec![1, 36]);
    }

    #[test]
    fn snf_v_inverse_tracks() {
        let m: Mat = vec![vec![4, 6, 1], vec![0, 9, -2], vec![3, 3, 3]];
        let s = smith_normal_form(&m);
        let n = 3;
        for i in 0..n {
            for j in 0..n {
                let mut acc = 0i128;
                for k in 0..n {
                    acc += s.v[i][k] * s.v_inv[k][j];
                }
                assert_eq!(acc, i128::from(i == j), "v * v_inv != id");
            }
        }
        assert_eq!(determinant(&s.v).unwrap().abs(), 1);
        assert_eq!(determinant(&s.u).unwrap().abs(), 1);
    }

    #[test]
    fn hnf_membership() {
        let basis = hnf_rows(&[vec![2, 1, 0], vec![0, 2, 0], vec![0, 0, 4]]);
        assert!(in_lattice(&[2, 1, 0], &basis));
        assert!(in_lattice(&[4, 0, 4], &basis));
        assert!(!in_lattice(&[1, 0, 0], &basis));
        assert!(!in_lattice(&[0, 1, 0], &basis));
    }

    #[test]
    fn quotient_of_plane() {
        // Z^2 / <(2,1),(0,2)> = Z/4
        let sup = hnf_rows(&[vec![1, 0], vec![0, 1]]);
        let sub = vec![vec![2, 1], vec![0, 2]];
        let (factors, gens) = quotient_invariants(&sup, &sub).unwrap();
        assert_eq!(factors, vec![4]);
        assert_eq!(gens.len(), 1);
    }

    #[test]
    fn quotient_mixed_free_torsion() {
        // <(3,1),(0,3)> / <(0,3)>: free of rank 1
        let sup = hnf_rows(&[vec![3, 1], vec![0, 3]]);
        let (factors, _) = quotient_invariants(&sup, &[vec![0, 3]]).unwrap();
        assert_eq!(factors, vec![0]);
        // <(3,0),(0,1)> / <(3,1),(0,3)>: Z/3
        let sup = hnf_rows(&[vec![3, 0], vec![0, 1]]);
        let (factors, _) = quotient_invariants(&sup, &[vec![3, 1], vec![0, 3]]).unwrap();
        assert_eq!(factors, vec![3]);
    }
}
