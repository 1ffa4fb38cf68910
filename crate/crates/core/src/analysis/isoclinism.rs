//! Isoclinism of Lie algebras: a pair of invertible linear maps, alpha on
//! L/Z(L) and beta on L^2, making the commutator square commute. Isoclinic
//! algebras share their commutativity degree, so a verified witness doubles
//! as a cross-check on the degree engine.
//!
//! Coordinates are fixed deterministically: coset representatives for L/Z(L)
//! come from the greedy complement of the center, and L^2 carries its
//! canonical echelon basis.

use num::BigUint;

use crate::error::{Error, Result};
use crate::gfq::FieldElement;
use crate::lie::LieAlgebra;
use crate::linalg::{enumerate_matrices, gl_order, Matrix, Subspace, Vector};

/// The two maps of a commuting square; `alpha` acts on L/Z(L) coordinates,
/// `beta` on L^2 coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsoclinismWitness {
    pub alpha: Matrix,
    pub beta: Matrix,
}

/// Fixed coordinates for the commutator pairing of one algebra.
struct Frame {
    /// Coset representatives for L/Z(L), one per quotient coordinate.
    reps: Vec<Vector>,
    /// L^2 with its canonical basis.
    derived: Subspace,
    /// kappa[i][j] = [rep_i, rep_j] in derived coordinates.
    kappa: Vec<Vec<Vector>>,
}

impl Frame {
    fn build(l: &LieAlgebra) -> Frame {
        let center = l.center();
        let reps_space = center
            .complement_in(&l.full_space())
            .expect("center sits inside the full space");
        let reps: Vec<Vector> = reps_space.basis_rows().collect();
        let derived = l.derived();
        let s = reps.len();
        let mut kappa = vec![vec![Vec::new(); s]; s];
        for i in 0..s {
            for j in 0..s {
                let w = l.bracket(&reps[i], &reps[j]).expect("reps have full length");
                kappa[i][j] = derived
                    .coordinates(&w)
                    .expect("ambient dims agree")
                    .expect("brackets land in the derived subalgebra");
            }
        }
        Frame { reps, derived, kappa }
    }

    fn quotient_dim(&self) -> usize {
        self.reps.len()
    }

    /// kappa extended bilinearly to arbitrary quotient coordinates.
    fn pairing(&self, l: &LieAlgebra, a: &[FieldElement], b: &[FieldElement]) -> Vector {
        let f = l.field();
        let n = l.dim();
        let mut u = vec![f.zero(); n];
        let mut v = vec![f.zero(); n];
        for (i, rep) in self.reps.iter().enumerate() {
            for t in 0..n {
                u[t] = f.add(u[t], f.mul(a[i], rep[t]));
                v[t] = f.add(v[t], f.mul(b[i], rep[t]));
            }
        }
        let w = l.bracket(&u, &v).expect("lifted vectors have full length");
        self.derived
            .coordinates(&w)
            .expect("ambient dims agree")
            .expect("brackets land in the derived subalgebra")
    }
}

/// Does the witness make the commutator square commute? Checks the square on
/// every basis pair of L/Z(L); bilinearity makes those sufficient.
pub fn verify_isoclinism(
    l: &LieAlgebra,
    m: &LieAlgebra,
    witness: &IsoclinismWitness,
) -> Result<bool> {
    if l.field() != m.field() {
        return Err(Error::FieldMismatch {
            left: l.field().order(),
            right: m.field().order(),
        });
    }
    let frame_l = Frame::build(l);
    let frame_m = Frame::build(m);
    let s = frame_l.quotient_dim();
    let r = frame_l.derived.dim();
    if frame_m.quotient_dim() != s {
        return Err(Error::DimensionMismatch { expected: s, got: frame_m.quotient_dim() });
    }
    if frame_m.derived.dim() != r {
        return Err(Error::DimensionMismatch { expected: r, got: frame_m.derived.dim() });
    }
    if witness.alpha.rows() != s || witness.alpha.cols() != s {
        return Err(Error::DimensionMismatch { expected: s, got: witness.alpha.rows() });
    }
    if witness.beta.rows() != r || witness.beta.cols() != r {
        return Err(Error::DimensionMismatch { expected: r, got: witness.beta.rows() });
    }
    if !witness.alpha.is_invertible() || !witness.beta.is_invertible() {
        return Err(Error::SingularWitness);
    }
    Ok(square_commutes(m, &frame_l, &frame_m, &witness.alpha, &witness.beta))
}

fn square_commutes(
    m: &LieAlgebra,
    frame_l: &Frame,
    frame_m: &Frame,
    alpha: &Matrix,
    beta: &Matrix,
) -> bool {
    let s = frame_l.quotient_dim();
    for i in 0..s {
        for j in i + 1..s {
            let lhs = beta
                .mul_vec(&frame_l.kappa[i][j])
                .expect("beta matches derived coordinates");
            let ai: Vector = (0..s).map(|t| alpha.get(t, i)).collect();
            let aj: Vector = (0..s).map(|t| alpha.get(t, j)).collect();
            let rhs = frame_m.pairing(m, &ai, &aj);
            if lhs != rhs {
                return false;
            }
        }
    }
    true
}

/// Exhaustive search for a witness, scanning pairs of invertible matrices in
/// lexicographic row-major order (alpha outer, beta inner) and returning the
/// first pair that makes the square commute.
///
/// `Ok(None)` is a definitive negative: either the invariant dimensions
/// already differ, or the whole space was exhausted. A search space larger
/// than `budget` witness pairs is refused instead of silently truncated.
pub fn search_isoclinism(
    l: &LieAlgebra,
    m: &LieAlgebra,
    budget: u64,
) -> Result<Option<IsoclinismWitness>> {
    if l.field() != m.field() {
        return Err(Error::FieldMismatch {
            left: l.field().order(),
            right: m.field().order(),
        });
    }
    let frame_l = Frame::build(l);
    let frame_m = Frame::build(m);
    let s = frame_l.quotient_dim();
    let r = frame_l.derived.dim();
    if frame_m.quotient_dim() != s || frame_m.derived.dim() != r {
        return Ok(None);
    }
    let q = l.field().order();
    let candidates = gl_order(q, s) * gl_order(q, r);
    if candidates > BigUint::from(budget) {
        let approx = candidates.to_string().parse::<u128>().unwrap_or(u128::MAX);
        return Err(Error::BudgetExceeded { candidates: approx, budget });
    }

    let betas: Vec<Matrix> = enumerate_matrices(l.field(), r, r)
        .filter(|b| b.is_invertible())
        .collect();
    for alpha in enumerate_matrices(l.field(), s, s) {
        if !alpha.is_invertible() {
            continue;
        }
        for beta in &betas {
            if square_commutes(m, &frame_l, &frame_m, &alpha, beta) {
                return Ok(Some(IsoclinismWitness { alpha, beta: beta.clone() }));
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::degree::{comm_degree, DegreeMethod};
    use crate::catalog::{make, Family};
    use crate::gfq::Field;
    use crate::linalg::DEFAULT_ENUMERATION_CAP;

    const CAP: u64 = DEFAULT_ENUMERATION_CAP;

    fn gf(p: u64) -> Field {
        Field::new(p, 1, None).unwrap()
    }

    #[test]
    fn identity_witness_on_equal_algebras() {
        let f = gf(2);
        let h = make(&Family::Heisenberg(1), &f).unwrap();
        let w = IsoclinismWitness {
            alpha: Matrix::identity(&f, 2),
            beta: Matrix::identity(&f, 1),
        };
        assert!(verify_isoclinism(&h, &h, &w).unwrap());
    }

    #[test]
    fn dimension_mismatch_is_an_error_for_verify() {
        let f = gf(2);
        let h = make(&Family::Heisenberg(1), &f).unwrap();
        let a3 = make(&Family::Abelian(3), &f).unwrap();
        let w = IsoclinismWitness {
            alpha: Matrix::identity(&f, 2),
            beta: Matrix::identity(&f, 1),
        };
        assert!(matches!(
            verify_isoclinism(&h, &a3, &w).unwrap_err(),
            Error::DimensionMismatch { .. }
        ));
    }

    #[test]
    fn singular_witness_is_rejected() {
        let f = gf(2);
        let h = make(&Family::Heisenberg(1), &f).unwrap();
        let w = IsoclinismWitness {
            alpha: Matrix::zeros(&f, 2, 2),
            beta: Matrix::identity(&f, 1),
        };
        assert_eq!(verify_isoclinism(&h, &h, &w).unwrap_err(), Error::SingularWitness);
    }

    #[test]
    fn search_on_heisenberg_finds_the_lex_first_witness() {
        // Over GF(2) the first invertible 2x2 matrix in lexicographic
        // row-major order is the swap [[0,1],[1,0]], and it passes because
        // beta = [1] absorbs the sign flip in characteristic 2.
        let f = gf(2);
        let h = make(&Family::Heisenberg(1), &f).unwrap();
        let w = search_isoclinism(&h, &h, 10_000_000).unwrap().expect("witness exists");
        assert_eq!(
            (w.alpha.get(0, 0).code(), w.alpha.get(0, 1).code(),
             w.alpha.get(1, 0).code(), w.alpha.get(1, 1).code()),
            (0, 1, 1, 0)
        );
        assert_eq!(w.beta.get(0, 0).code(), 1);
        assert!(verify_isoclinism(&h, &h, &w).unwrap());
    }

    #[test]
    fn search_handles_sign_flips_in_odd_characteristic() {
        let f = gf(3);
        let h = make(&Family::Heisenberg(1), &f).unwrap();
        let w = search_isoclinism(&h, &h, 10_000_000).unwrap().expect("witness exists");
        assert!(verify_isoclinism(&h, &h, &w).unwrap());
    }

    #[test]
    fn non_isoclinic_by_derived_dimension() {
        let f = gf(2);
        let l55 = make(&Family::L55, &f).unwrap();
        let l57 = make(&Family::L57, &f).unwrap();
        // dim L^2 differs (2 vs 3): definitive negative, no search needed.
        assert_eq!(search_isoclinism(&l55, &l57, 10_000_000).unwrap(), None);
        // Their degrees still agree.
        let d55 = comm_degree(&l55, DegreeMethod::RankProjective, CAP).unwrap().degree;
        let d57 = comm_degree(&l57, DegreeMethod::RankProjective, CAP).unwrap().degree;
        assert_eq!(d55, d57);
    }

    #[test]
    fn budget_is_enforced() {
        let f = gf(2);
        let l = make(&Family::Heisenberg(1), &f).unwrap();
        let hh = l.direct_sum(&l).unwrap();
        let err = search_isoclinism(&hh, &hh, 10).unwrap_err();
        assert_eq!(err, Error::BudgetExceeded { candidates: 120960, budget: 10 });
    }

    #[test]
    fn witnesses_connect_equal_degrees() {
        // Theorem check: whenever a witness verifies, the degrees agree.
        let f = gf(2);
        let h1 = make(&Family::Heisenberg(1), &f).unwrap();
        let aff = make(&Family::Affine2, &f).unwrap();
        let pairs = [(&h1, &h1), (&aff, &aff)];
        for (a, b) in pairs {
            if let Some(w) = search_isoclinism(a, b, 10_000_000).unwrap() {
                assert!(verify_isoclinism(a, b, &w).unwrap());
                let da = comm_degree(a, DegreeMethod::RankProjective, CAP).unwrap().degree;
                let db = comm_degree(b, DegreeMethod::RankProjective, CAP).unwrap().degree;
                assert_eq!(da, db);
            }
        }
    }
}
