//! The degree bounds and their equality criteria, checked exactly on a given
//! non-abelian algebra.

use num::rational::BigRational;

use crate::error::{Error, Result};
use crate::lie::LieAlgebra;
use crate::rational::{big_ratio, big_upow, ratio};

use super::degree::{comm_degree, DegreeMethod, DegreeReport};

/// (q^2 + q - 1) / q^3, the upper bound for every non-abelian algebra.
pub fn upper_bound_any(q: u64) -> Result<BigRational> {
    if q < 2 {
        return Err(Error::InvalidParams("q must be at least 2".into()));
    }
    Ok(big_ratio(big_upow(q, 2) + q - 1u32, big_upow(q, 3)))
}

/// (q^n + q - 1) / q^(n+1), the upper bound when the center is trivial.
pub fn upper_bound_centerless(n: usize, q: u64) -> Result<BigRational> {
    if q < 2 || n < 2 {
        return Err(Error::InvalidParams("need q >= 2 and n >= 2".into()));
    }
    Ok(big_ratio(big_upow(q, n) + q - 1u32, big_upow(q, n + 1)))
}

/// 1/q^t + 1/q^(t-1) - 1/q^(2t-1), the lower bound at t = dim L/Z(L).
pub fn lower_bound(t: usize, q: u64) -> Result<BigRational> {
    if q < 2 || t < 2 {
        return Err(Error::InvalidParams("need q >= 2 and t >= 2".into()));
    }
    // Common denominator q^(2t-1): (q^(t-1) + q^t - 1) / q^(2t-1).
    Ok(big_ratio(big_upow(q, t - 1) + big_upow(q, t) - 1u32, big_upow(q, 2 * t - 1)))
}

/// The ceiling 5/8 that no non-abelian algebra exceeds.
pub fn five_eighths() -> BigRational {
    ratio(5, 8)
}

/// One exact comparison with both sides kept as rationals.
#[derive(Debug, Clone)]
pub struct BoundCheck {
    pub name: &'static str,
    pub lhs: BigRational,
    pub rhs: BigRational,
    pub pass: bool,
    pub note: String,
}

/// Result of running every bound against one non-abelian algebra.
#[derive(Debug, Clone)]
pub struct BoundsReport {
    pub degree: DegreeReport,
    pub checks: Vec<BoundCheck>,
}

impl BoundsReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

/// Run every bound check on a non-abelian algebra:
///
/// 1. d(L) <= (q^2 + q - 1)/q^3;
/// 2. if Z(L) = 0: d(L) <= (q^n + q - 1)/q^(n+1), with equality iff
///    dim L^2 = 1;
/// 3. d(L) >= the lower bound at t = dim L/Z(L);
/// 4. d(L) attains (q^2 + q - 1)/q^3 iff t = 2;
/// 5. dim L/Z(L) >= b(L) + 1;
/// 6. d(L) <= 5/8.
pub fn check_bounds(l: &LieAlgebra, cap: u64) -> Result<BoundsReport> {
    let report = comm_degree(l, DegreeMethod::RankProjective, cap)?;
    if report.is_abelian() {
        return Err(Error::AbelianInput);
    }
    let q = l.field().order();
    let n = l.dim();
    let t = report.central_quotient_dim;
    let d = report.degree.clone();
    let mut checks = Vec::new();

    let ub = upper_bound_any(q)?;
    checks.push(BoundCheck {
        name: "general-upper-bound",
        pass: d <= ub,
        note: format!("q = {q}"),
        lhs: d.clone(),
        rhs: ub.clone(),
    });

    if report.center_dim == 0 {
        let cb = upper_bound_centerless(n, q)?;
        checks.push(BoundCheck {
            name: "centerless-upper-bound",
            pass: d <= cb,
            note: format!("n = {n}, trivial center"),
            lhs: d.clone(),
            rhs: cb.clone(),
        });
        let equality = d == cb;
        let line_derived = report.derived_dim == 1;
        checks.push(BoundCheck {
            name: "centerless-equality-iff-dim-derived-1",
            pass: equality == line_derived,
            note: format!(
                "equality {}, dim of the derived subalgebra {}",
                equality, report.derived_dim
            ),
            lhs: d.clone(),
            rhs: cb,
        });
    }

    let lb = lower_bound(t, q)?;
    checks.push(BoundCheck {
        name: "central-quotient-lower-bound",
        pass: d >= lb,
        note: format!("t = {t}"),
        lhs: d.clone(),
        rhs: lb,
    });

    let attains = d == ub;
    checks.push(BoundCheck {
        name: "attains-upper-bound-iff-t-2",
        pass: attains == (t == 2),
        note: format!("equality {attains}, t = {t}"),
        lhs: d.clone(),
        rhs: ub,
    });

    checks.push(BoundCheck {
        name: "breadth-vs-central-quotient",
        pass: t >= report.breadth + 1,
        note: format!("b(L) = {}", report.breadth),
        lhs: ratio(t as i64, 1),
        rhs: ratio(report.breadth as i64 + 1, 1),
    });

    let ceiling = five_eighths();
    checks.push(BoundCheck {
        name: "five-eighths-bound",
        pass: d <= ceiling,
        note: String::new(),
        lhs: d,
        rhs: ceiling,
    });

    Ok(BoundsReport { degree: report, checks })
}
