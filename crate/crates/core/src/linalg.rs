//! Exact dense linear algebra over GF(q): reduced row echelon form, rank,
//! kernels, and canonical subspace lattice operations.
//!
//! Subspaces are kept in reduced row-echelon form with no zero rows, so
//! subspace equality is plain data comparison. That canonical form is what
//! makes series stabilization detection and deterministic complements work.

use num::BigUint;

use crate::error::{Error, Result};
use crate::gfq::{Field, FieldElement};
use crate::rational::big_upow;

/// Default guard against accidental q^n blowups in full enumerations.
pub const DEFAULT_ENUMERATION_CAP: u64 = 10_000_000;

pub type Vector = Vec<FieldElement>;

/// Dense row-major matrix over a finite field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<FieldElement>,
}

impl Matrix {
    pub fn zeros(field: &Field, rows: usize, cols: usize) -> Matrix {
        Matrix {
            field: field.clone(),
            rows,
            cols,
            data: vec![FieldElement::default(); rows * cols],
        }
    }

    pub fn identity(field: &Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    /// Build from row vectors; all rows must have length `cols`.
    pub fn from_rows(field: &Field, cols: usize, rows: &[Vector]) -> Result<Matrix> {
        let mut m = Matrix::zeros(field, rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            if r.len() != cols {
                return Err(Error::DimensionMismatch { expected: cols, got: r.len() });
            }
            m.data[i * cols..(i + 1) * cols].copy_from_slice(r);
        }
        Ok(m)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> FieldElement {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: FieldElement) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[FieldElement] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vectors(&self) -> impl Iterator<Item = Vector> + '_ {
        (0..self.rows).map(|i| self.row(i).to_vec())
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(&self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    /// Stack `self` on top of `other` (matching column counts).
    pub fn stack(&self, other: &Matrix) -> Result<Matrix> {
        self.check_field(other)?;
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch { expected: self.cols, got: other.cols });
        }
        let mut m = Matrix::zeros(&self.field, self.rows + other.rows, self.cols);
        m.data[..self.data.len()].copy_from_slice(&self.data);
        m.data[self.data.len()..].copy_from_slice(&other.data);
        Ok(m)
    }

    pub fn matmul(&self, other: &Matrix) -> Result<Matrix> {
        self.check_field(other)?;
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch { expected: self.cols, got: other.rows });
        }
        let f = &self.field;
        let mut m = Matrix::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self.get(i, l);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let prod = f.mul(a, other.get(l, j));
                    m.set(i, j, f.add(m.get(i, j), prod));
                }
            }
        }
        Ok(m)
    }

    /// Matrix-vector product (vector as a column).
    pub fn mul_vec(&self, v: &[FieldElement]) -> Result<Vector> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch { expected: self.cols, got: v.len() });
        }
        let f = &self.field;
        let mut out = vec![f.zero(); self.rows];
        for (i, slot) in out.iter_mut().enumerate() {
            let mut acc = f.zero();
            for j in 0..self.cols {
                let a = self.get(i, j);
                if !a.is_zero() && !v[j].is_zero() {
                    acc = f.add(acc, f.mul(a, v[j]));
                }
            }
            *slot = acc;
        }
        Ok(out)
    }

    /// Unique reduced row-echelon form and the rank.
    pub fn rref(&self) -> (Matrix, usize) {
        let mut m = self.clone();
        let rank = m.rref_in_place();
        (m, rank)
    }

    pub(crate) fn rref_in_place(&mut self) -> usize {
        let f = self.field.clone();
        let mut pivot_row = 0usize;
        for col in 0..self.cols {
            if pivot_row == self.rows {
                break;
            }
            let Some(src) = (pivot_row..self.rows).find(|&r| !self.get(r, col).is_zero()) else {
                continue;
            };
            if src != pivot_row {
                for j in 0..self.cols {
                    let tmp = self.get(pivot_row, j);
                    self.set(pivot_row, j, self.get(src, j));
                    self.set(src, j, tmp);
                }
            }
            let scale = f.inv(self.get(pivot_row, col)).expect("pivot is nonzero");
            for j in col..self.cols {
                self.set(pivot_row, j, f.mul(scale, self.get(pivot_row, j)));
            }
            for r in 0..self.rows {
                if r == pivot_row {
                    continue;
                }
                let factor = self.get(r, col);
                if factor.is_zero() {
                    continue;
                }
                for j in col..self.cols {
                    let sub = f.mul(factor, self.get(pivot_row, j));
                    self.set(r, j, f.sub(self.get(r, j), sub));
                }
            }
            pivot_row += 1;
        }
        pivot_row
    }

    pub fn rank(&self) -> usize {
        self.rref().1
    }

    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }

    /// Inverse via Gauss-Jordan on [M | I].
    pub fn inverse(&self) -> Result<Matrix> {
        if self.rows != self.cols {
            return Err(Error::SingularMatrix);
        }
        let n = self.rows;
        let f = &self.field;
        let mut aug = Matrix::zeros(f, n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j));
            }
            aug.set(i, n + i, f.one());
        }
        let rank = aug.rref_in_place();
        if rank < n || (0..n).any(|i| aug.get(i, i).is_zero()) {
            return Err(Error::SingularMatrix);
        }
        let mut inv = Matrix::zeros(f, n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, aug.get(i, n + j));
            }
        }
        Ok(inv)
    }

    /// Basis of {v : M v = 0} as a canonical subspace of F_q^cols.
    pub fn kernel_basis(&self) -> Subspace {
        let (r, rank) = self.rref();
        let mut pivots = Vec::with_capacity(rank);
        let mut col = 0usize;
        for row in 0..rank {
            while col < self.cols && r.get(row, col).is_zero() {
                col += 1;
            }
            pivots.push(col);
            col += 1;
        }
        let f = &self.field;
        let mut vectors = Vec::with_capacity(self.cols - rank);
        for free in 0..self.cols {
            if pivots.contains(&free) {
                continue;
            }
            let mut v = vec![f.zero(); self.cols];
            v[free] = f.one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = f.neg(r.get(row, free));
            }
            vectors.push(v);
        }
        Subspace::span(f, self.cols, &vectors).expect("kernel vectors share the ambient dim")
    }

    fn check_field(&self, other: &Matrix) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch {
                left: self.field.order(),
                right: other.field.order(),
            });
        }
        Ok(())
    }
}

/// A subspace of F_q^n held as a reduced row-echelon basis with no zero rows.
///
/// The representation is canonical: equal subspaces compare equal as data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    basis: Matrix,
}

impl Subspace {
    pub fn zero(field: &Field, ambient: usize) -> Subspace {
        Subspace { ambient, basis: Matrix::zeros(field, 0, ambient) }
    }

    pub fn full(field: &Field, ambient: usize) -> Subspace {
        Subspace { ambient, basis: Matrix::identity(field, ambient) }
    }

    /// Row space of the given vectors.
    pub fn span(field: &Field, ambient: usize, vectors: &[Vector]) -> Result<Subspace> {
        let m = Matrix::from_rows(field, ambient, vectors)?;
        Ok(Self::row_space(&m))
    }

    /// Row space of a matrix.
    pub fn row_space(m: &Matrix) -> Subspace {
        let (r, rank) = m.rref();
        let rows: Vec<Vector> = (0..rank).map(|i| r.row(i).to_vec()).collect();
        let basis = Matrix::from_rows(&r.field, m.cols, &rows).expect("rows share width");
        Subspace { ambient: m.cols, basis }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn field(&self) -> &Field {
        self.basis.field()
    }

    /// Canonical RREF basis, one row per basis vector.
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_rows(&self) -> impl Iterator<Item = Vector> + '_ {
        self.basis.row_vectors()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    /// Number of elements q^dim.
    pub fn cardinality(&self) -> BigUint {
        big_upow(self.field().order(), self.dim())
    }

    pub fn contains(&self, v: &[FieldElement]) -> Result<bool> {
        if v.len() != self.ambient {
            return Err(Error::AmbientMismatch { left: self.ambient, right: v.len() });
        }
        Ok(self.reduce(v).iter().all(|c| c.is_zero()))
    }

    /// Residual of v after eliminating the pivots of the basis.
    fn reduce(&self, v: &[FieldElement]) -> Vector {
        let f = self.field().clone();
        let mut w = v.to_vec();
        for row in 0..self.basis.rows() {
            let pc = self.pivot_col(row);
            let c = w[pc];
            if c.is_zero() {
                continue;
            }
            for j in pc..self.ambient {
                let sub = f.mul(c, self.basis.get(row, j));
                w[j] = f.sub(w[j], sub);
            }
        }
        w
    }

    /// Coordinates of v in the canonical basis, if v lies in the subspace.
    /// With an RREF basis the coordinate at row t is just v[pivot_t].
    pub fn coordinates(&self, v: &[FieldElement]) -> Result<Option<Vector>> {
        if v.len() != self.ambient {
            return Err(Error::AmbientMismatch { left: self.ambient, right: v.len() });
        }
        if !self.reduce(v).iter().all(|c| c.is_zero()) {
            return Ok(None);
        }
        let coords = (0..self.dim()).map(|t| v[self.pivot_col(t)]).collect();
        Ok(Some(coords))
    }

    fn pivot_col(&self, row: usize) -> usize {
        (0..self.ambient)
            .find(|&j| !self.basis.get(row, j).is_zero())
            .expect("basis has no zero rows")
    }

    pub fn le(&self, other: &Subspace) -> Result<bool> {
        self.check_ambient(other)?;
        for row in self.basis_rows() {
            if !other.contains(&row)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        Ok(Subspace::row_space(&self.basis.stack(&other.basis)?))
    }

    /// Intersection via the kernel of stacked constraints: solve
    /// a^T U = b^T V over coefficient pairs (a, b).
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        let f = self.field().clone();
        let du = self.dim();
        let dv = other.dim();
        let mut constraints = Matrix::zeros(&f, self.ambient, du + dv);
        for j in 0..du {
            for i in 0..self.ambient {
                constraints.set(i, j, self.basis.get(j, i));
            }
        }
        for j in 0..dv {
            for i in 0..self.ambient {
                constraints.set(i, du + j, f.neg(other.basis.get(j, i)));
            }
        }
        let pairs = constraints.kernel_basis();
        let mut vectors = Vec::with_capacity(pairs.dim());
        for w in pairs.basis_rows() {
            let mut v = vec![f.zero(); self.ambient];
            for (j, &coef) in w.iter().take(du).enumerate() {
                if coef.is_zero() {
                    continue;
                }
                for (i, slot) in v.iter_mut().enumerate() {
                    let t = f.mul(coef, self.basis.get(j, i));
                    *slot = f.add(*slot, t);
                }
            }
            vectors.push(v);
        }
        Subspace::span(&f, self.ambient, &vectors)
    }

    /// Deterministic complement of `self` inside `within`: a greedy sweep over
    /// the canonical basis vectors of `within` in index order.
    pub fn complement_in(&self, within: &Subspace) -> Result<Subspace> {
        if !self.le(within)? {
            return Err(Error::NotContained);
        }
        let chosen = greedy_complement(self, within.basis_rows())?;
        Subspace::span(self.field(), self.ambient, &chosen)
    }

    fn check_ambient(&self, other: &Subspace) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch { left: self.ambient, right: other.ambient });
        }
        if self.field() != other.field() {
            return Err(Error::FieldMismatch {
                left: self.field().order(),
                right: other.field().order(),
            });
        }
        Ok(())
    }
}

/// Greedily pick candidates independent from `base` (and from earlier picks),
/// in the order given. Returns the picked vectors verbatim.
pub fn greedy_complement(
    base: &Subspace,
    candidates: impl Iterator<Item = Vector>,
) -> Result<Vec<Vector>> {
    let mut acc = base.clone();
    let mut chosen = Vec::new();
    for cand in candidates {
        if !acc.contains(&cand)? {
            chosen.push(cand.clone());
            acc = acc.sum(&Subspace::span(base.field(), base.ambient_dim(), &[cand])?)?;
        }
    }
    Ok(chosen)
}

/// All q^n vectors of F_q^n in lexicographic canonical-code order (first
/// coordinate most significant), starting at the zero vector.
pub fn enumerate_vectors(field: &Field, n: usize, cap: u64) -> Result<VectorIter> {
    let total = (field.order() as u128)
        .checked_pow(n as u32)
        .ok_or(Error::EnumerationCapExceeded { requested: u128::MAX, cap })?;
    if total > cap as u128 {
        return Err(Error::EnumerationCapExceeded { requested: total, cap });
    }
    Ok(VectorIter { field: field.clone(), current: vec![0; n], done: false })
}

/// Iterator over all vectors of F_q^n; see [`enumerate_vectors`].
#[derive(Debug)]
pub struct VectorIter {
    field: Field,
    current: Vec<u64>,
    done: bool,
}

impl Iterator for VectorIter {
    type Item = Vector;

    fn next(&mut self) -> Option<Vector> {
        if self.done {
            return None;
        }
        let out: Vector = self
            .current
            .iter()
            .map(|&c| self.field.element(c).expect("codes stay below q"))
            .collect();
        // Increment with the last coordinate fastest.
        let q = self.field.order();
        let mut i = self.current.len();
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            self.current[i] += 1;
            if self.current[i] < q {
                break;
            }
            self.current[i] = 0;
        }
        Some(out)
    }
}

/// One representative per line of F_q^n: the nonzero vectors whose first
/// nonzero coordinate equals 1, grouped by that pivot position, tails in
/// lexicographic order. There are (q^n - 1)/(q - 1) of them.
pub fn enumerate_projective_reps(field: &Field, n: usize, cap: u64) -> Result<ProjectiveIter> {
    let total = (field.order() as u128)
        .checked_pow(n as u32)
        .ok_or(Error::EnumerationCapExceeded { requested: u128::MAX, cap })?;
    if total > cap as u128 {
        return Err(Error::EnumerationCapExceeded { requested: total, cap });
    }
    let tail = if n == 0 { None } else { Some(enumerate_vectors(field, n - 1, cap)?) };
    Ok(ProjectiveIter { field: field.clone(), n, pivot: 0, tail, cap })
}

/// Iterator over projective representatives; see [`enumerate_projective_reps`].
#[derive(Debug)]
pub struct ProjectiveIter {
    field: Field,
    n: usize,
    pivot: usize,
    tail: Option<VectorIter>,
    cap: u64,
}

impl Iterator for ProjectiveIter {
    type Item = Vector;

    fn next(&mut self) -> Option<Vector> {
        loop {
            if self.pivot >= self.n {
                return None;
            }
            if let Some(iter) = self.tail.as_mut() {
                if let Some(tail) = iter.next() {
                    let f = &self.field;
                    let mut v = vec![f.zero(); self.pivot];
                    v.push(f.one());
                    v.extend(tail);
                    return Some(v);
                }
            }
            self.pivot += 1;
            if self.pivot < self.n {
                self.tail = Some(
                    enumerate_vectors(&self.field, self.n - self.pivot - 1, self.cap)
                        .expect("tail space is smaller than the checked total"),
                );
            }
        }
    }
}

/// All matrices of the given shape, ordered lexicographically by row-major
/// entry codes. Intended for exhaustive searches that have already been
/// budget-checked.
pub fn enumerate_matrices(field: &Field, rows: usize, cols: usize) -> MatrixIter {
    MatrixIter { field: field.clone(), rows, cols, codes: vec![0; rows * cols], done: false }
}

#[derive(Debug)]
pub struct MatrixIter {
    field: Field,
    rows: usize,
    cols: usize,
    codes: Vec<u64>,
    done: bool,
}

impl Iterator for MatrixIter {
    type Item = Matrix;

    fn next(&mut self) -> Option<Matrix> {
        if self.done {
            return None;
        }
        let mut m = Matrix::zeros(&self.field, self.rows, self.cols);
        for (idx, &c) in self.codes.iter().enumerate() {
            m.data[idx] = self.field.element(c).expect("codes stay below q");
        }
        let q = self.field.order();
        let mut i = self.codes.len();
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            self.codes[i] += 1;
            if self.codes[i] < q {
                break;
            }
            self.codes[i] = 0;
        }
        Some(m)
    }
}

/// |GL(n, q)| = prod_{i<n} (q^n - q^i).
pub fn gl_order(q: u64, n: usize) -> BigUint {
    let qn = big_upow(q, n);
    let mut acc = BigUint::from(1u32);
    for i in 0..n {
        acc *= &qn - big_upow(q, i);
    }
    acc
}
