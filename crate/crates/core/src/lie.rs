//! Structure-constant Lie algebras: validation, bracket evaluation, adjoint
//! maps, canonical structural subobjects, quotients, direct sums, and stem
//! decomposition.
//!
//! An algebra is a dimension n, a field, and a 3-index table c[i][j][k] with
//! [e_i, e_j] = sum_k c[i][j][k] e_k. Construction checks the alternating
//! condition explicitly (in characteristic 2 antisymmetry alone does not force
//! [x, x] = 0) and the Jacobi identity on all basis triples, which suffices by
//! trilinearity.

use num::BigUint;

use crate::error::{Error, Result};
use crate::gfq::{Field, FieldElement};
use crate::linalg::{greedy_complement, Matrix, Subspace, Vector};
use crate::rational::big_upow;

/// A finite-dimensional Lie algebra over GF(q), given by structure constants.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieAlgebra {
    field: Field,
    dim: usize,
    name: Option<String>,
    /// Dense table, entry (i, j, k) at index (i*dim + j)*dim + k.
    table: Vec<FieldElement>,
    /// Nonzero bracket support for i < j: (i, j, nonzero (k, c) list).
    support: Vec<(usize, usize, Vec<(usize, FieldElement)>)>,
}

/// Lower central series L_0 = L, L_k = [L, L_{k-1}].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesResult {
    /// Strictly decreasing terms, ending at the zero subspace (nilpotent) or
    /// just before the first repeat (stabilized non-nilpotent).
    pub terms: Vec<Subspace>,
    /// True when the series stopped shrinking at a nonzero term.
    pub stabilized: bool,
    /// Present iff the last term is the zero subspace; the number of steps
    /// taken to reach it.
    pub nilpotency_class: Option<usize>,
}

/// Splitting L = T + A with T stem (Z(T) inside T^2) and A central abelian.
#[derive(Debug, Clone)]
pub struct StemDecomposition {
    pub stem: LieAlgebra,
    pub abelian_dim: usize,
}

impl LieAlgebra {
    /// Build from sparse bracket entries (i, j, k, coefficient) with 1-based
    /// indices and i < j. The j > i half is derived by antisymmetry; the
    /// alternating and Jacobi conditions are then verified.
    pub fn new(
        field: &Field,
        dim: usize,
        brackets: &[(usize, usize, usize, FieldElement)],
        name: Option<String>,
    ) -> Result<LieAlgebra> {
        let mut table = vec![field.zero(); dim * dim * dim];
        let mut seen = std::collections::HashSet::new();
        for &(i, j, k, c) in brackets {
            if i < 1 || j <= i || j > dim || k < 1 || k > dim {
                return Err(Error::IndexOutOfRange { i, j, k, dim });
            }
            if !seen.insert((i, j, k)) {
                return Err(Error::DuplicateEntry { i, j, k });
            }
            let (i0, j0, k0) = (i - 1, j - 1, k - 1);
            table[(i0 * dim + j0) * dim + k0] = c;
            table[(j0 * dim + i0) * dim + k0] = field.neg(c);
        }
        Self::from_dense(field, dim, table, name)
    }

    /// Build from a dense table, validating the alternating condition and the
    /// Jacobi identity.
    pub fn from_dense(
        field: &Field,
        dim: usize,
        table: Vec<FieldElement>,
        name: Option<String>,
    ) -> Result<LieAlgebra> {
        assert_eq!(table.len(), dim * dim * dim, "table must be dim^3");
        let alg = LieAlgebra {
            field: field.clone(),
            dim,
            name,
            support: build_support(dim, &table),
            table,
        };
        alg.validate_alternating()?;
        alg.validate_jacobi()?;
        Ok(alg)
    }

    fn validate_alternating(&self) -> Result<()> {
        let f = &self.field;
        let n = self.dim;
        for i in 0..n {
            for k in 0..n {
                if !self.c(i, i, k).is_zero() {
                    return Err(Error::AlternatingViolation { i: i + 1, j: i + 1, k: k + 1 });
                }
            }
            for j in 0..n {
                for k in 0..n {
                    if self.c(j, i, k) != f.neg(self.c(i, j, k)) {
                        return Err(Error::AlternatingViolation { i: i + 1, j: j + 1, k: k + 1 });
                    }
                }
            }
        }
        Ok(())
    }

    /// Exhaustive Jacobi check over basis triples i < j < k; trilinearity
    /// makes those sufficient.
    fn validate_jacobi(&self) -> Result<()> {
        let f = &self.field;
        let n = self.dim;
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    for l in 0..n {
                        let mut acc = f.zero();
                        for m in 0..n {
                            let t1 = f.mul(self.c(j, k, m), self.c(i, m, l));
                            let t2 = f.mul(self.c(i, j, m), self.c(k, m, l));
                            let t3 = f.mul(self.c(k, i, m), self.c(j, m, l));
                            acc = f.add(acc, f.add(t1, f.add(t2, t3)));
                        }
                        if !acc.is_zero() {
                            return Err(Error::JacobiViolation {
                                i: i + 1,
                                j: j + 1,
                                k: k + 1,
                                l: l + 1,
                            });
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// Structure constant c_{ij}^k, 0-based indices.
    #[inline]
    pub fn c(&self, i: usize, j: usize, k: usize) -> FieldElement {
        self.table[(i * self.dim + j) * self.dim + k]
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn with_name(mut self, name: impl Into<String>) -> LieAlgebra {
        self.name = Some(name.into());
        self
    }

    /// Number of elements |L| = q^n.
    pub fn cardinality(&self) -> BigUint {
        big_upow(self.field.order(), self.dim)
    }

    /// Nonzero bracket entries with i < j, 1-based, sorted by (i, j, k).
    pub fn sparse_brackets(&self) -> Vec<(usize, usize, usize, FieldElement)> {
        let mut out = Vec::new();
        for &(i, j, ref terms) in &self.support {
            for &(k, c) in terms {
                out.push((i + 1, j + 1, k + 1, c));
            }
        }
        out
    }

    pub fn zero_vector(&self) -> Vector {
        vec![self.field.zero(); self.dim]
    }

    pub fn basis_vector(&self, i: usize) -> Vector {
        let mut v = self.zero_vector();
        v[i] = self.field.one();
        v
    }

    pub fn full_space(&self) -> Subspace {
        Subspace::full(&self.field, self.dim)
    }

    /// [u, v] by bilinear extension of the structure constants.
    pub fn bracket(&self, u: &[FieldElement], v: &[FieldElement]) -> Result<Vector> {
        if u.len() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, got: u.len() });
        }
        if v.len() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, got: v.len() });
        }
        let mut out = self.zero_vector();
        self.bracket_into(u, v, &mut out);
        Ok(out)
    }

    /// Hot-path bracket: callers guarantee lengths.
    #[inline]
    pub(crate) fn bracket_into(&self, u: &[FieldElement], v: &[FieldElement], out: &mut [FieldElement]) {
        let f = &self.field;
        for e in out.iter_mut() {
            *e = f.zero();
        }
        // [u, v] = sum_{i<j} (u_i v_j - u_j v_i) [e_i, e_j].
        for &(i, j, ref terms) in &self.support {
            let a = f.sub(f.mul(u[i], v[j]), f.mul(u[j], v[i]));
            if a.is_zero() {
                continue;
            }
            for &(k, c) in terms {
                out[k] = f.add(out[k], f.mul(a, c));
            }
        }
    }

    /// Matrix of ad_x (y -> [x, y]); the j-th column is [x, e_j].
    pub fn ad_matrix(&self, x: &[FieldElement]) -> Result<Matrix> {
        if x.len() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, got: x.len() });
        }
        let mut m = Matrix::zeros(&self.field, self.dim, self.dim);
        self.ad_into(x, &mut m);
        Ok(m)
    }

    #[inline]
    pub(crate) fn ad_into(&self, x: &[FieldElement], m: &mut Matrix) {
        let f = &self.field;
        for i in 0..self.dim {
            for j in 0..self.dim {
                m.set(i, j, f.zero());
            }
        }
        for &(i, j, ref terms) in &self.support {
            // Column j gets x_i * c, column i gets -x_j * c.
            if !x[i].is_zero() {
                for &(k, c) in terms {
                    m.set(k, j, f.add(m.get(k, j), f.mul(x[i], c)));
                }
            }
            if !x[j].is_zero() {
                for &(k, c) in terms {
                    m.set(k, i, f.sub(m.get(k, i), f.mul(x[j], c)));
                }
            }
        }
    }

    /// C_L(x) = ker ad_x.
    pub fn centralizer(&self, x: &[FieldElement]) -> Result<Subspace> {
        Ok(self.ad_matrix(x)?.kernel_basis())
    }

    /// Z(L): intersection of the kernels of ad over all basis vectors.
    pub fn center(&self) -> Subspace {
        let n = self.dim;
        let mut stacked = Matrix::zeros(&self.field, n * n, n);
        let mut ad = Matrix::zeros(&self.field, n, n);
        for b in 0..n {
            self.ad_into(&self.basis_vector(b), &mut ad);
            for i in 0..n {
                for j in 0..n {
                    stacked.set(b * n + i, j, ad.get(i, j));
                }
            }
        }
        stacked.kernel_basis()
    }

    /// The span of pairwise brackets of basis vectors of I and J. For ideals
    /// this is the product ideal [I, J].
    pub fn product_span(&self, left: &Subspace, right: &Subspace) -> Result<Subspace> {
        if left.ambient_dim() != self.dim {
            return Err(Error::AmbientMismatch { left: self.dim, right: left.ambient_dim() });
        }
        if right.ambient_dim() != self.dim {
            return Err(Error::AmbientMismatch { left: self.dim, right: right.ambient_dim() });
        }
        let mut vectors = Vec::with_capacity(left.dim() * right.dim());
        for a in left.basis_rows() {
            for b in right.basis_rows() {
                vectors.push(self.bracket(&a, &b)?);
            }
        }
        Subspace::span(&self.field, self.dim, &vectors)
    }

    /// Derived subalgebra L^2 = [L, L].
    pub fn derived(&self) -> Subspace {
        let full = self.full_space();
        self.product_span(&full, &full).expect("full space matches ambient dim")
    }

    pub fn is_abelian(&self) -> bool {
        self.support.is_empty()
    }

    /// Lower central series until the term vanishes or repeats.
    pub fn lower_central_series(&self) -> SeriesResult {
        let full = self.full_space();
        let mut terms = vec![full.clone()];
        loop {
            let prev = terms.last().unwrap();
            if prev.is_zero() {
                let class = terms.len() - 1;
                return SeriesResult { terms, stabilized: false, nilpotency_class: Some(class) };
            }
            let next = self.product_span(&full, prev).expect("series terms share ambient dim");
            if &next == prev {
                return SeriesResult { terms, stabilized: true, nilpotency_class: None };
            }
            terms.push(next);
        }
    }

    pub fn is_nilpotent(&self) -> bool {
        self.lower_central_series().nilpotency_class.is_some()
    }

    pub fn nilpotency_class(&self) -> Option<usize> {
        self.lower_central_series().nilpotency_class
    }

    /// Is [U, L] contained in U?
    pub fn is_ideal(&self, u: &Subspace) -> Result<bool> {
        let prod = self.product_span(u, &self.full_space())?;
        prod.le(u)
    }

    /// Is U closed under the bracket?
    pub fn is_subalgebra(&self, u: &Subspace) -> Result<bool> {
        let prod = self.product_span(u, u)?;
        prod.le(u)
    }

    /// External direct sum with block structure constants; the two summands
    /// embed as ideals with zero mutual bracket.
    pub fn direct_sum(&self, other: &LieAlgebra) -> Result<LieAlgebra> {
        if self.field != other.field {
            return Err(Error::FieldMismatch {
                left: self.field.order(),
                right: other.field.order(),
            });
        }
        let n1 = self.dim;
        let n = n1 + other.dim;
        let f = &self.field;
        let mut table = vec![f.zero(); n * n * n];
        for i in 0..n1 {
            for j in 0..n1 {
                for k in 0..n1 {
                    table[(i * n + j) * n + k] = self.c(i, j, k);
                }
            }
        }
        for i in 0..other.dim {
            for j in 0..other.dim {
                for k in 0..other.dim {
                    table[((n1 + i) * n + (n1 + j)) * n + (n1 + k)] = other.c(i, j, k);
                }
            }
        }
        LieAlgebra::from_dense(f, n, table, None)
    }

    /// Quotient L/N by an ideal. Returns the quotient algebra on the
    /// deterministic complement basis together with the projection matrix
    /// taking L-coordinates to quotient coordinates.
    pub fn quotient(&self, ideal: &Subspace) -> Result<(LieAlgebra, Matrix)> {
        if !self.is_ideal(ideal)? {
            return Err(Error::NotAnIdeal);
        }
        let f = &self.field;
        let reps = ideal.complement_in(&self.full_space())?;
        let m = reps.dim();
        // Basis of L: complement reps first, then the ideal. Coordinates in
        // that basis are (B^T)^{-1} v; the projection keeps the first m.
        let rows: Vec<Vector> = reps.basis_rows().chain(ideal.basis_rows()).collect();
        let b = Matrix::from_rows(f, self.dim, &rows)?;
        let binv_t = b.transpose().inverse().expect("basis matrix is invertible");
        let mut projection = Matrix::zeros(f, m, self.dim);
        for i in 0..m {
            for j in 0..self.dim {
                projection.set(i, j, binv_t.get(i, j));
            }
        }
        let rep_rows: Vec<Vector> = reps.basis_rows().collect();
        let mut table = vec![f.zero(); m * m * m];
        for a in 0..m {
            for bb in 0..m {
                let w = self.bracket(&rep_rows[a], &rep_rows[bb])?;
                let coords = projection.mul_vec(&w)?;
                for (k, &ck) in coords.iter().enumerate() {
                    table[(a * m + bb) * m + k] = ck;
                }
            }
        }
        let quotient = LieAlgebra::from_dense(f, m, table, None)?;
        Ok((quotient, projection))
    }

    /// The same algebra expressed in the basis whose vectors are the rows of
    /// P (in old coordinates). Jacobi is re-validated as a self-check.
    pub fn change_basis(&self, p: &Matrix) -> Result<LieAlgebra> {
        if p.rows() != self.dim || p.cols() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, got: p.rows() });
        }
        let pt_inv = p.transpose().inverse().map_err(|_| Error::SingularMatrix)?;
        let f = &self.field;
        let n = self.dim;
        let rows: Vec<Vector> = p.row_vectors().collect();
        let mut table = vec![f.zero(); n * n * n];
        for i in 0..n {
            for j in 0..n {
                if i == j {
                    continue;
                }
                let w = self.bracket(&rows[i], &rows[j])?;
                let coords = pt_inv.mul_vec(&w)?;
                for (k, &ck) in coords.iter().enumerate() {
                    table[(i * n + j) * n + k] = ck;
                }
            }
        }
        LieAlgebra::from_dense(f, n, table, self.name.clone())
    }

    /// Restrict the bracket to a subspace closed under it.
    pub fn subalgebra(&self, h: &Subspace) -> Result<LieAlgebra> {
        if h.ambient_dim() != self.dim {
            return Err(Error::AmbientMismatch { left: self.dim, right: h.ambient_dim() });
        }
        let f = &self.field;
        let d = h.dim();
        let rows: Vec<Vector> = h.basis_rows().collect();
        let mut table = vec![f.zero(); d * d * d];
        for i in 0..d {
            for j in 0..d {
                if i == j {
                    continue;
                }
                let w = self.bracket(&rows[i], &rows[j])?;
                let coords = h.coordinates(&w)?.ok_or(Error::NotASubalgebra)?;
                for (k, &ck) in coords.iter().enumerate() {
                    table[(i * d + j) * d + k] = ck;
                }
            }
        }
        LieAlgebra::from_dense(f, d, table, None)
    }

    /// Is Z(L) contained in L^2?
    pub fn is_stem(&self) -> bool {
        self.center().le(&self.derived()).expect("center and derived share ambient dim")
    }

    /// Split off the largest central abelian direct summand: A is a
    /// complement of Z(L) ∩ L^2 inside Z(L), and the stem part T is the
    /// complement of A grown from a basis containing L^2.
    pub fn stem_decompose(&self) -> StemDecomposition {
        let center = self.center();
        let derived = self.derived();
        let zi = center.intersect(&derived).expect("subobjects share ambient dim");
        let abelian_rows = greedy_complement(&zi, center.basis_rows()).expect("ambient dims match");
        let abelian = Subspace::span(&self.field, self.dim, &abelian_rows)
            .expect("rows share ambient dim");
        let stem_rows = greedy_complement(
            &abelian,
            derived.basis_rows().chain((0..self.dim).map(|i| self.basis_vector(i))),
        )
        .expect("ambient dims match");
        let stem_space = Subspace::span(&self.field, self.dim, &stem_rows)
            .expect("rows share ambient dim");
        let stem = self
            .subalgebra(&stem_space)
            .expect("stem space contains the derived subalgebra, so it is closed");
        StemDecomposition { stem, abelian_dim: abelian.dim() }
    }
}

fn build_support(
    dim: usize,
    table: &[FieldElement],
) -> Vec<(usize, usize, Vec<(usize, FieldElement)>)> {
    let mut support = Vec::new();
    for i in 0..dim {
        for j in i + 1..dim {
            let terms: Vec<(usize, FieldElement)> = (0..dim)
                .filter_map(|k| {
                    let c = table[(i * dim + j) * dim + k];
                    (!c.is_zero()).then_some((k, c))
                })
                .collect();
            if !terms.is_empty() {
                support.push((i, j, terms));
            }
        }
    }
    support
}
