//! Dense matrices over Q(i) and the exact elimination machinery: rank,
//! solve-in-span with a reusable factorization, Sylvester inertia and
//! nullspaces. Everything is exact; a failed solve is a certificate that the
//! target is outside the span, never a tolerance call.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Signed, Zero};

use crate::scalar::{gzero, GaussRat, Rat};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LinalgError {
    DimMismatch,
    NotSquare,
    NotSymmetric,
    NotReal,
}

/// Target vector is not a linear combination of the basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NotInSpan;

/// Dense row-major matrix over the Gaussian rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mat {
    rows: usize,
    cols: usize,
    a: Vec<GaussRat>,
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat { rows, cols, a: vec![gzero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = GaussRat::one();
        }
        m
    }

    /// Matrix unit E_ij (zero-indexed).
    pub fn unit(n: usize, i: usize, j: usize) -> Self {
        let mut m = Mat::zeros(n, n);
        m[(i, j)] = GaussRat::one();
        m
    }

    pub fn from_rows(rows: Vec<Vec<GaussRat>>) -> Self {
        let r = rows.len();
        let c = if r == 0 { 0 } else { rows[0].len() };
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Mat { rows: r, cols: c, a: rows.into_iter().flatten().collect() }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> GaussRat) -> Self {
        let mut a = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                a.push(f(i, j));
            }
        }
        Mat { rows, cols, a }
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[GaussRat] {
        &self.a[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.a.iter().all(|z| z.is_zero())
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn add(&self, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Mat {
            rows: self.rows,
            cols: self.cols,
            a: self.a.iter().zip(&other.a).map(|(x, y)| x + y).collect(),
        }
    }

    pub fn sub(&self, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Mat {
            rows: self.rows,
            cols: self.cols,
            a: self.a.iter().zip(&other.a).map(|(x, y)| x - y).collect(),
        }
    }

    pub fn neg(&self) -> Mat {
        Mat { rows: self.rows, cols: self.cols, a: self.a.iter().map(|x| -x).collect() }
    }

    pub fn scale(&self, c: &GaussRat) -> Mat {
        Mat { rows: self.rows, cols: self.cols, a: self.a.iter().map(|x| x * c).collect() }
    }

    /// In-place `self += c * other`, skipping zero terms.
    pub fn add_scaled(&mut self, c: &GaussRat, other: &Mat) {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        if c.is_zero() {
            return;
        }
        for (x, y) in self.a.iter_mut().zip(&other.a) {
            if !y.is_zero() {
                *x += c * y;
            }
        }
    }

    /// Exact product. Zero entries are skipped, which makes products of the
    /// sparse operator matrices that dominate this crate cheap.
    pub fn mul(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.rows, "inner dimensions differ");
        let mut out = Mat::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let x = &self[(i, k)];
                if x.is_zero() {
                    continue;
                }
                let orow = other.row(k);
                let start = i * other.cols;
                for (j, y) in orow.iter().enumerate() {
                    if !y.is_zero() {
                        out.a[start + j] += x * y;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[GaussRat]) -> Vec<GaussRat> {
        assert_eq!(self.cols, v.len());
        let mut out = vec![gzero(); self.rows];
        for i in 0..self.rows {
            for (x, y) in self.row(i).iter().zip(v) {
                if !x.is_zero() && !y.is_zero() {
                    out[i] += x * y;
                }
            }
        }
        out
    }

    pub fn commutator(&self, other: &Mat) -> Mat {
        self.mul(other).sub(&other.mul(self))
    }

    pub fn transpose(&self) -> Mat {
        Mat::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn trace(&self) -> GaussRat {
        assert!(self.is_square());
        let mut t = gzero();
        for i in 0..self.rows {
            t += &self[(i, i)];
        }
        t
    }

    pub fn flatten(&self) -> Vec<GaussRat> {
        self.a.clone()
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    pub fn is_real(&self) -> bool {
        self.a.iter().all(|z| z.im.is_zero())
    }

    /// Exact inverse of a square matrix, or None if singular.
    pub fn inverse(&self) -> Option<Mat> {
        assert!(self.is_square());
        let n = self.rows;
        let mut work = self.clone();
        let mut inv = Mat::identity(n);
        for col in 0..n {
            let pivot = (col..n).find(|&r| !work[(r, col)].is_zero())?;
            if pivot != col {
                work.swap_rows(pivot, col);
                inv.swap_rows(pivot, col);
            }
            let p = work[(col, col)].clone();
            let pinv = crate::scalar::ginv(&p);
            work.scale_row(col, &pinv);
            inv.scale_row(col, &pinv);
            for r in 0..n {
                if r != col && !work[(r, col)].is_zero() {
                    let c = work[(r, col)].clone();
                    work.sub_scaled_row(r, col, &c);
                    inv.sub_scaled_row(r, col, &c);
                }
            }
        }
        Some(inv)
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for c in 0..self.cols {
            self.a.swap(i * self.cols + c, j * self.cols + c);
        }
    }

    fn scale_row(&mut self, i: usize, c: &GaussRat) {
        for v in &mut self.a[i * self.cols..(i + 1) * self.cols] {
            if !v.is_zero() {
                *v *= c;
            }
        }
    }

    /// row_i -= c * row_j
    fn sub_scaled_row(&mut self, i: usize, j: usize, c: &GaussRat) {
        for col in 0..self.cols {
            let y = self.a[j * self.cols + col].clone();
            if !y.is_zero() {
                self.a[i * self.cols + col] -= c * &y;
            }
        }
    }
}

impl core::ops::Index<(usize, usize)> for Mat {
    type Output = GaussRat;
    fn index(&self, (i, j): (usize, usize)) -> &GaussRat {
        assert!(i < self.rows && j < self.cols, "index out of bounds");
        &self.a[i * self.cols + j]
    }
}

impl core::ops::IndexMut<(usize, usize)> for Mat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut GaussRat {
        assert!(i < self.rows && j < self.cols, "index out of bounds");
        &mut self.a[i * self.cols + j]
    }
}

/// Sparse vector: (index, nonzero value) pairs sorted by index.
type SparseRow = Vec<(u32, GaussRat)>;

fn sparsify(v: &[GaussRat]) -> SparseRow {
    v.iter()
        .enumerate()
        .filter(|(_, z)| !z.is_zero())
        .map(|(i, z)| (i as u32, z.clone()))
        .collect()
}

/// acc -= c * row  (both sparse, sorted merge)
fn sparse_sub_scaled(acc: &SparseRow, c: &GaussRat, row: &SparseRow) -> SparseRow {
    let mut out = Vec::with_capacity(acc.len() + row.len());
    let (mut i, mut j) = (0, 0);
    while i < acc.len() || j < row.len() {
        if j >= row.len() || (i < acc.len() && acc[i].0 < row[j].0) {
            out.push(acc[i].clone());
            i += 1;
        } else if i >= acc.len() || row[j].0 < acc[i].0 {
            let z = c * &row[j].1;
            if !z.is_zero() {
                out.push((row[j].0, -z));
            }
            j += 1;
        } else {
            let z = &acc[i].1 - &(c * &row[j].1);
            if !z.is_zero() {
                out.push((acc[i].0, z));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Incremental reduced row echelon form over Q(i) with provenance tracking.
///
/// Vectors are fed one at a time; each independent one becomes a pivot row
/// (pivot entry 1, that coordinate eliminated from every other row). Each
/// stored row remembers its expression over the fed vectors, so `solve` can
/// return coefficients in terms of the original basis. The factorization is
/// built once and reused across many solves.
pub struct SpanSolver {
    ncols: usize,
    nfed: usize,
    rows: Vec<SparseRow>,
    /// pivot column of rows[r]
    pivots: Vec<u32>,
    /// rows[r] as a combination of fed vectors
    provenance: Vec<SparseRow>,
}

impl SpanSolver {
    pub fn new(ncols: usize) -> Self {
        SpanSolver { ncols, nfed: 0, rows: Vec::new(), pivots: Vec::new(), provenance: Vec::new() }
    }

    pub fn from_basis(basis: &[Vec<GaussRat>]) -> Self {
        let ncols = basis.first().map_or(0, |v| v.len());
        let mut s = SpanSolver::new(ncols);
        for v in basis {
            s.feed(v);
        }
        s
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn num_fed(&self) -> usize {
        self.nfed
    }

    /// Reduce v against the pivot rows. Returns the residual and the
    /// multipliers used, as (row index, coefficient) pairs.
    fn reduce(&self, v: &SparseRow) -> (SparseRow, Vec<(usize, GaussRat)>) {
        let mut residual = v.clone();
        let mut mu = Vec::new();
        // Pivot columns are mutually exclusive across rows (full reduction),
        // so a single pass in any order suffices.
        for (r, &p) in self.pivots.iter().enumerate() {
            if let Ok(pos) = residual.binary_search_by_key(&p, |e| e.0) {
                let c = residual[pos].1.clone();
                residual = sparse_sub_scaled(&residual, &c, &self.rows[r]);
                mu.push((r, c));
            }
        }
        (residual, mu)
    }

    /// Feed one vector; returns true if it enlarged the span.
    pub fn feed(&mut self, v: &[GaussRat]) -> bool {
        assert_eq!(v.len(), self.ncols, "vector length mismatch");
        let fed_index = self.nfed as u32;
        self.nfed += 1;
        let (mut residual, mu) = self.reduce(&sparsify(v));
        if residual.is_empty() {
            return false;
        }
        // Normalize so the pivot entry is 1.
        let lead = residual[0].1.clone();
        let leadinv = crate::scalar::ginv(&lead);
        for e in &mut residual {
            e.1 *= &leadinv;
        }
        // Provenance: (e_fed - sum mu_r * prov_r) / lead.
        let mut prov: SparseRow = vec![(fed_index, leadinv.clone())];
        for (r, c) in &mu {
            prov = sparse_sub_scaled(&prov, &(c * &leadinv), &self.provenance[*r]);
        }
        let pivot = residual[0].0;
        // Eliminate the new pivot column from existing rows.
        for r in 0..self.rows.len() {
            if let Ok(pos) = self.rows[r].binary_search_by_key(&pivot, |e| e.0) {
                let c = self.rows[r][pos].1.clone();
                self.rows[r] = sparse_sub_scaled(&self.rows[r], &c, &residual);
                self.provenance[r] = sparse_sub_scaled(&self.provenance[r], &c, &prov);
            }
        }
        self.rows.push(residual);
        self.pivots.push(pivot);
        self.provenance.push(prov);
        true
    }

    /// Express v over the fed vectors. The coefficient vector has one entry
    /// per fed vector (dependent fed vectors simply get coefficient 0).
    pub fn solve(&self, v: &[GaussRat]) -> Result<Vec<GaussRat>, NotInSpan> {
        assert_eq!(v.len(), self.ncols, "vector length mismatch");
        let (residual, mu) = self.reduce(&sparsify(v));
        if !residual.is_empty() {
            return Err(NotInSpan);
        }
        let mut coeffs = vec![gzero(); self.nfed];
        for (r, c) in &mu {
            for (idx, p) in &self.provenance[*r] {
                coeffs[*idx as usize] += c * p;
            }
        }
        Ok(coeffs)
    }
}

fn flatten_all(mats: &[Mat]) -> Vec<Vec<GaussRat>> {
    mats.iter().map(|m| m.flatten()).collect()
}

/// Rank of the span of a family of equal-shape matrices.
pub fn rank(mats: &[Mat]) -> usize {
    SpanSolver::from_basis(&flatten_all(mats)).rank()
}

/// Exact coefficients expressing `target` over `basis`, or a certificate that
/// no such combination exists.
pub fn solve_in_span(target: &Mat, basis: &[Mat]) -> Result<Vec<GaussRat>, NotInSpan> {
    for b in basis {
        assert_eq!(
            (b.nrows(), b.ncols()),
            (target.nrows(), target.ncols()),
            "basis shape mismatch"
        );
    }
    SpanSolver::from_basis(&flatten_all(basis)).solve(&target.flatten())
}

/// Sylvester inertia (n_plus, n_minus, n_zero) of a real symmetric matrix,
/// by exact symmetric congruence elimination: nonzero diagonal pivots first,
/// hyperbolic 2x2 blocks when the remaining diagonal is all zero.
pub fn inertia(g: &Mat) -> Result<(usize, usize, usize), LinalgError> {
    if !g.is_square() {
        return Err(LinalgError::NotSquare);
    }
    if !g.is_real() {
        return Err(LinalgError::NotReal);
    }
    if !g.is_symmetric() {
        return Err(LinalgError::NotSymmetric);
    }
    let n = g.nrows();
    let mut a: Vec<Vec<Rat>> = (0..n)
        .map(|i| g.row(i).iter().map(|z| z.re.clone()).collect())
        .collect();
    let mut live: Vec<usize> = (0..n).collect();
    let (mut np, mut nm, mut nz) = (0usize, 0usize, 0usize);
    while !live.is_empty() {
        if let Some(&p) = live.iter().find(|&&i| !a[i][i].is_zero()) {
            let d = a[p][p].clone();
            if d.is_positive() {
                np += 1;
            } else {
                nm += 1;
            }
            live.retain(|&i| i != p);
            for &i in &live {
                if a[i][p].is_zero() {
                    continue;
                }
                let ci = &a[i][p] / &d;
                for &j in &live {
                    let t = &ci * &a[p][j];
                    a[i][j] -= t;
                }
            }
            for &i in &live {
                a[i][p] = Rat::zero();
                a[p][i] = Rat::zero();
            }
        } else {
            // All remaining diagonal entries vanish; find an off-diagonal
            // coupling, which contributes one hyperbolic (+1, -1) pair.
            let mut pair = None;
            'search: for (s, &i) in live.iter().enumerate() {
                for &j in &live[s + 1..] {
                    if !a[i][j].is_zero() {
                        pair = Some((i, j));
                        break 'search;
                    }
                }
            }
            let Some((p, q)) = pair else {
                nz += live.len();
                break;
            };
            np += 1;
            nm += 1;
            let b = a[p][q].clone();
            live.retain(|&i| i != p && i != q);
            // Schur complement w.r.t. the block [[0, b], [b, 0]].
            for &i in &live {
                let (gip, giq) = (a[i][p].clone(), a[i][q].clone());
                if gip.is_zero() && giq.is_zero() {
                    continue;
                }
                for &j in &live {
                    let t = (&gip * &a[q][j] + &giq * &a[p][j]) / &b;
                    a[i][j] -= t;
                }
            }
            for &i in &live {
                a[i][p] = Rat::zero();
                a[p][i] = Rat::zero();
                a[i][q] = Rat::zero();
                a[q][i] = Rat::zero();
            }
        }
    }
    Ok((np, nm, nz))
}

/// Basis of the right nullspace of `m` (deterministic: one vector per free
/// column, in column order).
pub fn nullspace(m: &Mat) -> Vec<Vec<GaussRat>> {
    let rows: Vec<Vec<GaussRat>> = (0..m.nrows()).map(|i| m.row(i).to_vec()).collect();
    let solver = SpanSolver::from_basis(&rows);
    let pivot_cols: Vec<u32> = solver.pivots.clone();
    let n = m.ncols();
    let mut out = Vec::new();
    for free in 0..n as u32 {
        if pivot_cols.contains(&free) {
            continue;
        }
        let mut v = vec![gzero(); n];
        v[free as usize] = GaussRat::one();
        for (r, &p) in solver.pivots.iter().enumerate() {
            if let Ok(pos) = solver.rows[r].binary_search_by_key(&free, |e| e.0) {
                v[p as usize] = -solver.rows[r][pos].1.clone();
            }
        }
        out.push(v);
    }
    out
}
