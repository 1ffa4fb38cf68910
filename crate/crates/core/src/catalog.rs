//! Constructors for the named algebra families and their closed-form
//! commutativity degrees.
//!
//! Basis vectors are ordered exactly as the presentations print them, so a
//! structure table can be read off against the defining relations line by
//! line.

use std::fmt;
use std::str::FromStr;

use num::rational::BigRational;

use crate::error::{Error, Result};
use crate::gfq::Field;
use crate::lie::LieAlgebra;
use crate::rational::{big_ratio, big_upow, ratio};

/// A named family together with its parameters.
///
/// * `Abelian(n)` — A(n), no relations, n >= 0.
/// * `Heisenberg(m)` — H(m), dim 2m+1, basis x1,y1,...,xm,ym,z with
///   [x_i, y_i] = z.
/// * `Affine2` — the 2-dimensional non-nilpotent algebra <x, y | [x, y] = x>.
/// * `L55` — dim 5: [x1,x2]=x3, [x1,x3]=x5, [x2,x4]=x5.
/// * `L57` — dim 5: [x1,x2]=x3, [x1,x3]=x4, [x1,x4]=x5.
/// * `L67_2` — dim 6: [x1,x2]=x5, [x3,x4]=x5+x6, [x1,x3]=x6.
/// * `DirectSum` — external direct sum of two families.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    Abelian(usize),
    Heisenberg(usize),
    Affine2,
    L55,
    L57,
    L67_2,
    DirectSum(Box<Family>, Box<Family>),
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Abelian(n) => write!(f, "A({n})"),
            Family::Heisenberg(m) => write!(f, "H({m})"),
            Family::Affine2 => write!(f, "affine2"),
            Family::L55 => write!(f, "L55"),
            Family::L57 => write!(f, "L57"),
            Family::L67_2 => write!(f, "L67_2"),
            Family::DirectSum(a, b) => write!(f, "{a}+{b}"),
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    /// Parse compact family specs: `abelian:N` (or `a:N`), `heisenberg:M`
    /// (or `h:M`), `affine2`, `l55`, `l57`, `l67_2`, and sums joined by `+`
    /// such as `h:1+a:2`.
    fn from_str(s: &str) -> Result<Family> {
        if let Some((left, right)) = s.split_once('+') {
            return Ok(Family::DirectSum(
                Box::new(left.parse()?),
                Box::new(Family::from_str(right)?),
            ));
        }
        let lower = s.trim().to_ascii_lowercase();
        let parse_param = |text: &str| -> Result<usize> {
            text.parse::<usize>()
                .map_err(|_| Error::Parse(format!("bad family parameter in '{s}'")))
        };
        match lower.split_once(':') {
            Some(("a" | "abelian", n)) => Ok(Family::Abelian(parse_param(n)?)),
            Some(("h" | "heisenberg", m)) => Ok(Family::Heisenberg(parse_param(m)?)),
            None => match lower.as_str() {
                "affine2" | "aff2" => Ok(Family::Affine2),
                "l55" => Ok(Family::L55),
                "l57" => Ok(Family::L57),
                "l67_2" | "l672" => Ok(Family::L67_2),
                other => Err(Error::Parse(format!("unknown family '{other}'"))),
            },
            Some(_) => Err(Error::Parse(format!("unknown family '{s}'"))),
        }
    }
}

/// Build the presented algebra over the given field.
pub fn make(family: &Family, field: &Field) -> Result<LieAlgebra> {
    let one = field.one();
    let alg = match family {
        Family::Abelian(n) => LieAlgebra::new(field, *n, &[], None)?,
        Family::Heisenberg(m) => {
            if *m < 1 {
                return Err(Error::InvalidParams("Heisenberg parameter m must be >= 1".into()));
            }
            let dim = 2 * m + 1;
            let brackets: Vec<_> = (1..=*m).map(|i| (2 * i - 1, 2 * i, dim, one)).collect();
            LieAlgebra::new(field, dim, &brackets, None)?
        }
        Family::Affine2 => LieAlgebra::new(field, 2, &[(1, 2, 1, one)], None)?,
        Family::L55 => LieAlgebra::new(
            field,
            5,
            &[(1, 2, 3, one), (1, 3, 5, one), (2, 4, 5, one)],
            None,
        )?,
        Family::L57 => LieAlgebra::new(
            field,
            5,
            &[(1, 2, 3, one), (1, 3, 4, one), (1, 4, 5, one)],
            None,
        )?,
        Family::L67_2 => LieAlgebra::new(
            field,
            6,
            &[(1, 2, 5, one), (3, 4, 5, one), (3, 4, 6, one), (1, 3, 6, one)],
            None,
        )?,
        Family::DirectSum(a, b) => {
            let left = make(a, field)?;
            let right = make(b, field)?;
            left.direct_sum(&right)?
        }
    };
    Ok(alg.with_name(family.to_string()))
}

/// The published closed-form commutativity degree of a family at a given q.
///
/// `L67_2` uses the same closed form as H(1)+H(1); the rank census over its
/// structure constants gives q^4 + q^2 - 1 + 2(q-1)^2(q+1) commuting-weight
/// numerator over q^6, which expands to (q^2 + q - 1)^2 / q^6 for every q.
pub fn closed_form_degree(family: &Family, q: u64) -> BigRational {
    match family {
        Family::Abelian(_) => ratio(1, 1),
        Family::Heisenberg(m) => {
            let num = big_upow(q, 2 * m) + q - 1u32;
            big_ratio(num, big_upow(q, 2 * m + 1))
        }
        Family::Affine2 => big_ratio(big_upow(q, 2) + q - 1u32, big_upow(q, 3)),
        Family::L55 | Family::L57 => {
            big_ratio(big_upow(q, 3) + big_upow(q, 2) - 1u32, big_upow(q, 5))
        }
        Family::L67_2 => {
            let aff = closed_form_degree(&Family::Affine2, q);
            &aff * &aff
        }
        Family::DirectSum(a, b) => closed_form_degree(a, q) * closed_form_degree(b, q),
    }
}
