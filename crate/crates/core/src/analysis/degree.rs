//! Exact commutativity degree d(L) = |{(x, y) : [x, y] = 0}| / |L|^2 and the
//! breadth b(L) = max dim Im ad_x.
//!
//! Three routes compute the same number:
//!
//! * `RankFull` sums q^(n - rank ad_x) over every element x, using
//!   |C_L(x)| · |Im ad_x| = |L|.
//! * `RankProjective` does the same over one representative per line, since
//!   ad is linear in x and scaling by a nonzero lambda preserves the rank;
//!   each line carries weight q - 1 and the zero vector contributes q^n.
//! * `NaivePairs` counts commuting pairs directly by evaluating brackets;
//!   it exists as an oracle for the other two.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use num::rational::BigRational;
use num::BigUint;

use crate::error::{Error, Result};
use crate::lie::LieAlgebra;
use crate::linalg::{enumerate_projective_reps, enumerate_vectors, Matrix};
use crate::rational::{big_ratio, big_upow};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DegreeMethod {
    RankFull,
    RankProjective,
    NaivePairs,
}

impl DegreeMethod {
    pub fn as_str(self) -> &'static str {
        match self {
            DegreeMethod::RankFull => "rank",
            DegreeMethod::RankProjective => "projective",
            DegreeMethod::NaivePairs => "naive",
        }
    }
}

impl fmt::Display for DegreeMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for DegreeMethod {
    type Err = Error;

    fn from_str(s: &str) -> Result<DegreeMethod> {
        match s {
            "rank" => Ok(DegreeMethod::RankFull),
            "projective" => Ok(DegreeMethod::RankProjective),
            "naive" => Ok(DegreeMethod::NaivePairs),
            other => Err(Error::Parse(format!("unknown degree method '{other}'"))),
        }
    }
}

/// Everything the degree computation learns about an algebra.
#[derive(Debug, Clone)]
pub struct DegreeReport {
    /// Reduced d(L) in [0, 1].
    pub degree: BigRational,
    /// |B(L)| = number of commuting ordered pairs.
    pub pair_count: BigUint,
    pub center_dim: usize,
    pub derived_dim: usize,
    /// b(L) = max dim Im ad_x; 0 iff abelian.
    pub breadth: usize,
    /// t = dim L/Z(L).
    pub central_quotient_dim: usize,
    /// Index r holds the number of elements x with dim Im ad_x = r.
    pub rank_histogram: Vec<u64>,
    pub method: DegreeMethod,
    pub elapsed: Duration,
}

impl DegreeReport {
    pub fn is_abelian(&self) -> bool {
        self.breadth == 0
    }
}

/// Compute d(L) by the chosen method. Rank methods require q^n <= cap; the
/// pair-counting oracle requires q^(2n) <= cap.
pub fn comm_degree(l: &LieAlgebra, method: DegreeMethod, cap: u64) -> Result<DegreeReport> {
    let start = Instant::now();
    let n = l.dim();
    let q = l.field().order();
    let histogram = match method {
        DegreeMethod::RankFull => rank_histogram_full(l, cap)?,
        DegreeMethod::RankProjective => rank_histogram_projective(l, cap)?,
        DegreeMethod::NaivePairs => rank_histogram_naive(l, cap)?,
    };

    let mut pair_count = BigUint::from(0u32);
    for (rank, &count) in histogram.iter().enumerate() {
        if count > 0 {
            pair_count += BigUint::from(count) * big_upow(q, n - rank);
        }
    }
    let degree = big_ratio(pair_count.clone(), big_upow(q, 2 * n));
    let breadth = histogram.iter().rposition(|&c| c > 0).unwrap_or(0);
    let center_dim = l.center().dim();

    Ok(DegreeReport {
        degree,
        pair_count,
        center_dim,
        derived_dim: l.derived().dim(),
        breadth,
        central_quotient_dim: n - center_dim,
        rank_histogram: histogram,
        method,
        elapsed: start.elapsed(),
    })
}

fn rank_histogram_full(l: &LieAlgebra, cap: u64) -> Result<Vec<u64>> {
    let n = l.dim();
    let mut hist = vec![0u64; n + 1];
    let mut ad = Matrix::zeros(l.field(), n, n);
    for x in enumerate_vectors(l.field(), n, cap)? {
        l.ad_into(&x, &mut ad);
        hist[ad.rref_in_place()] += 1;
    }
    Ok(hist)
}

fn rank_histogram_projective(l: &LieAlgebra, cap: u64) -> Result<Vec<u64>> {
    let n = l.dim();
    let q = l.field().order();
    let mut hist = vec![0u64; n + 1];
    hist[0] = 1; // the zero vector
    let mut ad = Matrix::zeros(l.field(), n, n);
    for rep in enumerate_projective_reps(l.field(), n, cap)? {
        l.ad_into(&rep, &mut ad);
        hist[ad.rref_in_place()] += q - 1;
    }
    Ok(hist)
}

fn rank_histogram_naive(l: &LieAlgebra, cap: u64) -> Result<Vec<u64>> {
    let n = l.dim();
    let q = l.field().order();
    let total_pairs = (q as u128)
        .checked_pow(2 * n as u32)
        .ok_or(Error::EnumerationCapExceeded { requested: u128::MAX, cap })?;
    if total_pairs > cap as u128 {
        return Err(Error::EnumerationCapExceeded { requested: total_pairs, cap });
    }
    let mut hist = vec![0u64; n + 1];
    let mut out = l.zero_vector();
    let elements: Vec<_> = enumerate_vectors(l.field(), n, cap.max(1)).unwrap().collect();
    for x in &elements {
        let mut centralizer_size = 0u64;
        for y in &elements {
            l.bracket_into(x, y, &mut out);
            if out.iter().all(|c| c.is_zero()) {
                centralizer_size += 1;
            }
        }
        // |C_L(x)| = q^(n - rank ad_x); recover the rank from the size.
        let mut s = 0usize;
        let mut c = centralizer_size;
        while c > 1 {
            debug_assert_eq!(c % q, 0, "centralizer size must be a power of q");
            c /= q;
            s += 1;
        }
        hist[n - s] += 1;
    }
    Ok(hist)
}

/// b(L) = max dim Im ad_x over all x, computed over projective
/// representatives (scaling preserves the rank). Stops early once the
/// breadth reaches dim L^2, its maximum possible value.
pub fn breadth(l: &LieAlgebra, cap: u64) -> Result<usize> {
    let n = l.dim();
    let max_possible = l.derived().dim();
    if max_possible == 0 {
        return Ok(0);
    }
    let mut best = 0usize;
    let mut ad = Matrix::zeros(l.field(), n, n);
    for rep in enumerate_projective_reps(l.field(), n, cap)? {
        l.ad_into(&rep, &mut ad);
        best = best.max(ad.rref_in_place());
        if best == max_possible {
            break;
        }
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{closed_form_degree, make, Family};
    use crate::gfq::Field;
    use crate::linalg::DEFAULT_ENUMERATION_CAP;
    use crate::rational::{format_ratio, ratio};

    const CAP: u64 = DEFAULT_ENUMERATION_CAP;

    fn gf(p: u64) -> Field {
        Field::new(p, 1, None).unwrap()
    }

    #[test]
    fn heisenberg_over_gf2() {
        let f = gf(2);
        let h = make(&Family::Heisenberg(1), &f).unwrap();
        let r = comm_degree(&h, DegreeMethod::RankProjective, CAP).unwrap();
        assert_eq!(r.degree, ratio(5, 8));
        assert_eq!(r.pair_count, BigUint::from(40u32));
        assert_eq!(r.rank_histogram, vec![2, 6, 0, 0]);
        assert_eq!(r.breadth, 1);
        assert_eq!(r.central_quotient_dim, 2);
    }

    #[test]
    fn affine_over_gf3() {
        let f = gf(3);
        let l = make(&Family::Affine2, &f).unwrap();
        let r = comm_degree(&l, DegreeMethod::RankFull, CAP).unwrap();
        assert_eq!(format_ratio(&r.degree), "11/27");
    }

    #[test]
    fn l57_over_gf2() {
        let f = gf(2);
        let l = make(&Family::L57, &f).unwrap();
        let r = comm_degree(&l, DegreeMethod::NaivePairs, CAP).unwrap();
        assert_eq!(format_ratio(&r.degree), "11/32");
        assert_eq!(r.breadth, 3);
    }

    #[test]
    fn abelian_degree_is_one() {
        let f = gf(5);
        let a = make(&Family::Abelian(4), &f).unwrap();
        let r = comm_degree(&a, DegreeMethod::RankProjective, CAP).unwrap();
        assert_eq!(r.degree, ratio(1, 1));
        assert!(r.is_abelian());
        assert_eq!(r.breadth, 0);
    }

    #[test]
    fn zero_dimensional_degree() {
        let f = gf(3);
        let zero = make(&Family::Abelian(0), &f).unwrap();
        for method in [DegreeMethod::RankFull, DegreeMethod::RankProjective, DegreeMethod::NaivePairs] {
            let r = comm_degree(&zero, method, CAP).unwrap();
            assert_eq!(r.degree, ratio(1, 1));
            assert_eq!(r.pair_count, BigUint::from(1u32));
        }
    }

    #[test]
    fn three_methods_agree_on_small_algebras() {
        let cases = [
            (Family::Heisenberg(1), 2u64),
            (Family::Heisenberg(1), 3),
            (Family::Heisenberg(2), 2),
            (Family::Affine2, 5),
            (Family::L55, 2),
            (Family::L57, 2),
            (Family::L67_2, 2),
        ];
        for (family, p) in cases {
            let f = gf(p);
            let l = make(&family, &f).unwrap();
            let full = comm_degree(&l, DegreeMethod::RankFull, CAP).unwrap();
            let proj = comm_degree(&l, DegreeMethod::RankProjective, CAP).unwrap();
            let naive = comm_degree(&l, DegreeMethod::NaivePairs, CAP).unwrap();
            assert_eq!(full.degree, proj.degree, "{family} over GF({p})");
            assert_eq!(full.degree, naive.degree, "{family} over GF({p})");
            assert_eq!(full.rank_histogram, proj.rank_histogram);
            assert_eq!(full.rank_histogram, naive.rank_histogram);
            assert_eq!(full.degree, closed_form_degree(&family, p));
        }
    }

    #[test]
    fn histogram_consistency() {
        let f = gf(3);
        let l = make(&Family::L55, &f).unwrap();
        let r = comm_degree(&l, DegreeMethod::RankProjective, CAP).unwrap();
        let q = 3u64;
        let total: u64 = r.rank_histogram.iter().sum();
        assert_eq!(total, q.pow(5));
        assert_eq!(r.rank_histogram[0], q.pow(r.center_dim as u32));
    }

    #[test]
    fn naive_cap_uses_pair_count() {
        let f = gf(2);
        let l = make(&Family::L57, &f).unwrap();
        // q^n = 32 fits but q^2n = 1024 does not.
        let err = comm_degree(&l, DegreeMethod::NaivePairs, 1000).unwrap_err();
        assert_eq!(err, Error::EnumerationCapExceeded { requested: 1024, cap: 1000 });
        assert!(comm_degree(&l, DegreeMethod::RankFull, 1000).is_ok());
    }

    #[test]
    fn breadth_values() {
        let f = gf(2);
        for m in [1, 2] {
            let h = make(&Family::Heisenberg(m), &f).unwrap();
            assert_eq!(breadth(&h, CAP).unwrap(), 1);
        }
        assert_eq!(breadth(&make(&Family::Abelian(5), &f).unwrap(), CAP).unwrap(), 0);
        assert_eq!(breadth(&make(&Family::L57, &f).unwrap(), CAP).unwrap(), 3);
        assert_eq!(breadth(&make(&Family::L55, &f).unwrap(), CAP).unwrap(), 2);
    }

    #[test]
    fn degree_multiplies_over_direct_sums() {
        let f = gf(2);
        for (a, b) in [
            (Family::Heisenberg(1), Family::Heisenberg(1)),
            (Family::Heisenberg(1), Family::Abelian(2)),
            (Family::Affine2, Family::Affine2),
            (Family::Affine2, Family::L55),
        ] {
            let la = make(&a, &f).unwrap();
            let lb = make(&b, &f).unwrap();
            let sum = la.direct_sum(&lb).unwrap();
            let da = comm_degree(&la, DegreeMethod::RankProjective, CAP).unwrap().degree;
            let db = comm_degree(&lb, DegreeMethod::RankProjective, CAP).unwrap().degree;
            let ds = comm_degree(&sum, DegreeMethod::RankProjective, CAP).unwrap().degree;
            assert_eq!(ds, da * db);
        }
    }

    #[test]
    fn stem_part_has_the_same_degree() {
        let f = gf(3);
        let h = make(&Family::Heisenberg(1), &f).unwrap();
        let l = h.direct_sum(&make(&Family::Abelian(2), &f).unwrap()).unwrap();
        let d = l.stem_decompose();
        let dl = comm_degree(&l, DegreeMethod::RankProjective, CAP).unwrap().degree;
        let dt = comm_degree(&d.stem, DegreeMethod::RankProjective, CAP).unwrap().degree;
        assert_eq!(dl, dt);
    }

    #[test]
    fn stem_reconstruction_preserves_invariants() {
        // Rebuilding stem + abelian gives back the center dim, derived dim,
        // and degree of the original.
        let f = gf(2);
        for family in [
            Family::Heisenberg(1),
            Family::L55,
            Family::Affine2,
            Family::DirectSum(Box::new(Family::Heisenberg(1)), Box::new(Family::Abelian(2))),
            Family::DirectSum(Box::new(Family::Affine2), Box::new(Family::Abelian(1))),
            Family::Abelian(3),
        ] {
            let l = make(&family, &f).unwrap();
            let d = l.stem_decompose();
            let rebuilt = d
                .stem
                .direct_sum(&make(&Family::Abelian(d.abelian_dim), &f).unwrap())
                .unwrap();
            assert_eq!(rebuilt.center().dim(), l.center().dim(), "{family}");
            assert_eq!(rebuilt.derived().dim(), l.derived().dim(), "{family}");
            let dl = comm_degree(&l, DegreeMethod::RankProjective, CAP).unwrap().degree;
            let dr = comm_degree(&rebuilt, DegreeMethod::RankProjective, CAP).unwrap().degree;
            assert_eq!(dl, dr, "{family}");
        }
    }

    #[test]
    fn abelian_detection_is_consistent() {
        let f = gf(3);
        for family in [Family::Abelian(0), Family::Abelian(2), Family::Heisenberg(1), Family::L57] {
            let l = make(&family, &f).unwrap();
            let r = comm_degree(&l, DegreeMethod::RankProjective, CAP).unwrap();
            let degree_one = r.degree == ratio(1, 1);
            let center_full = l.center().dim() == l.dim();
            let breadth_zero = breadth(&l, CAP).unwrap() == 0;
            assert_eq!(degree_one, center_full, "{family}");
            assert_eq!(degree_one, breadth_zero, "{family}");
            assert_eq!(degree_one, l.is_abelian(), "{family}");
        }
    }
}
