//! Degree inequalities relating an algebra to its subalgebras, ideals, and
//! quotients, checked exactly.

use num::rational::BigRational;

use crate::error::{Error, Result};
use crate::lie::LieAlgebra;
use crate::linalg::{enumerate_vectors, Subspace};
use crate::rational::big_ratio;

use super::degree::{comm_degree, DegreeMethod};

/// Exact verdicts for the sandwich (|H|^2/|L|^2) d(H) <= d(L) <= d(H).
#[derive(Debug, Clone)]
pub struct SandwichReport {
    pub degree_whole: BigRational,
    pub degree_sub: BigRational,
    /// (|H|^2/|L|^2) d(H).
    pub scaled_lower: BigRational,
    pub lower_holds: bool,
    pub upper_holds: bool,
    /// |H|/|C_H(x)| <= |L|/|C_L(x)| for every x in L (exhaustive).
    pub pointwise_index_holds: bool,
    /// Does H + Z(L) = L, the equality criterion?
    pub spans_with_center: bool,
    /// d(L) = d(H); present only when the criterion applies.
    pub equality_holds: Option<bool>,
}

impl SandwichReport {
    pub fn all_pass(&self) -> bool {
        self.lower_holds
            && self.upper_holds
            && self.pointwise_index_holds
            && self.equality_holds.unwrap_or(true)
    }
}

/// Check the subalgebra sandwich for H a bracket-closed subspace of L.
pub fn check_subalgebra_sandwich(
    l: &LieAlgebra,
    h: &Subspace,
    cap: u64,
) -> Result<SandwichReport> {
    if !l.is_subalgebra(h)? {
        return Err(Error::NotASubalgebra);
    }
    let sub = l.subalgebra(h)?;
    let d_l = comm_degree(l, DegreeMethod::RankProjective, cap)?.degree;
    let d_h = comm_degree(&sub, DegreeMethod::RankProjective, cap)?.degree;
    let q = l.field().order();
    let index_sq = big_ratio(
        crate::rational::big_upow(q, 2 * h.dim()),
        crate::rational::big_upow(q, 2 * l.dim()),
    );
    let scaled_lower = &index_sq * &d_h;

    // Pointwise index inequality: dim H - dim C_H(x) <= dim L - dim C_L(x).
    let mut pointwise = true;
    for x in enumerate_vectors(l.field(), l.dim(), cap)? {
        let cl = l.centralizer(&x)?;
        let ch_dim = cl.intersect(h)?.dim();
        if h.dim() - ch_dim > l.dim() - cl.dim() {
            pointwise = false;
            break;
        }
    }

    let spans_with_center = h.sum(&l.center())? == l.full_space();
    Ok(SandwichReport {
        lower_holds: scaled_lower <= d_l,
        upper_holds: d_l <= d_h,
        pointwise_index_holds: pointwise,
        spans_with_center,
        equality_holds: spans_with_center.then(|| d_l == d_h),
        degree_whole: d_l,
        degree_sub: d_h,
        scaled_lower,
    })
}

/// Exact verdicts for d(L) <= d(L/N) d(N).
#[derive(Debug, Clone)]
pub struct QuotientProductReport {
    pub degree_whole: BigRational,
    pub degree_quotient: BigRational,
    pub degree_ideal: BigRational,
    pub product: BigRational,
    pub inequality_holds: bool,
    /// Does N meet L^2 trivially, the equality criterion?
    pub meets_derived_trivially: bool,
    pub equality_holds: Option<bool>,
}

impl QuotientProductReport {
    pub fn all_pass(&self) -> bool {
        self.inequality_holds && self.equality_holds.unwrap_or(true)
    }
}

/// Check d(L) <= d(L/N) d(N) for an ideal N, with equality when N ∩ L^2 = 0.
pub fn check_quotient_product(
    l: &LieAlgebra,
    ideal: &Subspace,
    cap: u64,
) -> Result<QuotientProductReport> {
    if !l.is_ideal(ideal)? {
        return Err(Error::NotAnIdeal);
    }
    let (quotient, _) = l.quotient(ideal)?;
    let as_algebra = l.subalgebra(ideal)?;
    let d_l = comm_degree(l, DegreeMethod::RankProjective, cap)?.degree;
    let d_q = comm_degree(&quotient, DegreeMethod::RankProjective, cap)?.degree;
    let d_n = comm_degree(&as_algebra, DegreeMethod::RankProjective, cap)?.degree;
    let product = &d_q * &d_n;
    let meets_trivially = ideal.intersect(&l.derived())?.is_zero();
    Ok(QuotientProductReport {
        inequality_holds: d_l <= product,
        meets_derived_trivially: meets_trivially,
        equality_holds: meets_trivially.then(|| d_l == product),
        degree_whole: d_l,
        degree_quotient: d_q,
        degree_ideal: d_n,
        product,
    })
}

/// Exact verdict for d(L/N) <= d(L/M) when N <= M.
#[derive(Debug, Clone)]
pub struct QuotientMonotonicityReport {
    pub degree_mod_small: BigRational,
    pub degree_mod_large: BigRational,
    pub holds: bool,
}

/// Check d(L/N) <= d(L/M) for nested ideals N <= M.
pub fn check_quotient_monotonicity(
    l: &LieAlgebra,
    small: &Subspace,
    large: &Subspace,
    cap: u64,
) -> Result<QuotientMonotonicityReport> {
    if !l.is_ideal(small)? || !l.is_ideal(large)? {
        return Err(Error::NotAnIdeal);
    }
    if !small.le(large)? {
        return Err(Error::NotNested);
    }
    let (mod_small, _) = l.quotient(small)?;
    let (mod_large, _) = l.quotient(large)?;
    let d_small = comm_degree(&mod_small, DegreeMethod::RankProjective, cap)?.degree;
    let d_large = comm_degree(&mod_large, DegreeMethod::RankProjective, cap)?.degree;
    Ok(QuotientMonotonicityReport {
        holds: d_small <= d_large,
        degree_mod_small: d_small,
        degree_mod_large: d_large,
    })
}
