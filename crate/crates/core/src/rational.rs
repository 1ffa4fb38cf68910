//! Small helpers around exact big-rational arithmetic.
//!
//! Degrees and bounds are reduced ratios of unbounded integers; q^(2n)
//! overflows machine words at modest parameters, so everything stays in
//! `BigInt` land.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::BigUint;

/// q^e as a big integer.
pub fn big_pow(q: u64, e: usize) -> BigInt {
    BigInt::from(q).pow(e as u32)
}

/// q^e as a big unsigned integer.
pub fn big_upow(q: u64, e: usize) -> BigUint {
    BigUint::from(q).pow(e as u32)
}

/// Reduced rational num/den from machine integers.
pub fn ratio(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Reduced rational from big parts.
pub fn big_ratio(num: BigUint, den: BigUint) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Canonical "num/den" rendering; whole numbers keep an explicit denominator
/// ("1/1", "2/1") so outputs never look like floats or bare counts.
pub fn format_ratio(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Decimal approximation for human-readable output only.
pub fn approx(r: &BigRational) -> f64 {
    use num::ToPrimitive;
    r.to_f64().unwrap_or(f64::NAN)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ratios_reduce() {
        assert_eq!(ratio(40, 64), ratio(5, 8));
        assert_eq!(format_ratio(&ratio(40, 64)), "5/8");
        assert_eq!(format_ratio(&ratio(3, 3)), "1/1");
    }

    #[test]
    fn big_powers() {
        assert_eq!(big_pow(2, 10), BigInt::from(1024));
        assert_eq!(big_upow(9, 20).to_string(), "12157665459056928801");
    }
}
