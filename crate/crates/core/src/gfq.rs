//! Exact arithmetic and canonical enumeration for finite fields GF(p^k).
//!
//! Elements are stored by their canonical integer code in `[0, q)`: the
//! base-p evaluation of their polynomial-basis coefficient vector. Code 0 is
//! the additive identity and code 1 the multiplicative identity.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Largest q for which `Field::new` falls back on the built-in modulus table.
pub const BUILTIN_MODULUS_LIMIT: u64 = 512;

/// Canonical irreducible moduli, ascending coefficients (index i = coefficient
/// of X^i), monic. For each (p, k) this is the lexicographically smallest
/// monic irreducible of degree k over GF(p), smallest meaning the base-p code
/// of the non-leading coefficients. Covers every prime power q = p^k <= 512
/// with k >= 2.
const BUILTIN_MODULI: &[(u64, u32, &[u64])] = &[
    (2, 2, &[1, 1, 1]),
    (2, 3, &[1, 1, 0, 1]),
    (2, 4, &[1, 1, 0, 0, 1]),
    (2, 5, &[1, 0, 1, 0, 0, 1]),
    (2, 6, &[1, 1, 0, 0, 0, 0, 1]),
    (2, 7, &[1, 1, 0, 0, 0, 0, 0, 1]),
    (2, 8, &[1, 1, 0, 1, 1, 0, 0, 0, 1]),
    (2, 9, &[1, 1, 0, 0, 0, 0, 0, 0, 0, 1]),
    (3, 2, &[1, 0, 1]),
    (3, 3, &[1, 2, 0, 1]),
    (3, 4, &[2, 1, 0, 0, 1]),
    (3, 5, &[1, 2, 0, 0, 0, 1]),
    (5, 2, &[2, 0, 1]),
    (5, 3, &[1, 1, 0, 1]),
    (7, 2, &[1, 0, 1]),
    (7, 3, &[2, 0, 0, 1]),
    (11, 2, &[1, 0, 1]),
    (13, 2, &[2, 0, 1]),
    (17, 2, &[3, 0, 1]),
    (19, 2, &[1, 0, 1]),
];

/// Precompute full add/mul tables for extension fields up to this size;
/// beyond it arithmetic reduces polynomials on the fly.
const TABLE_LIMIT: u64 = 512;

/// An element of a finite field, identified by its canonical code.
///
/// Elements carry no field reference; all arithmetic goes through the
/// [`Field`] that produced them.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct FieldElement(u64);

impl FieldElement {
    /// Canonical integer code in `[0, q)`.
    pub fn code(self) -> u64 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Debug)]
struct FieldRepr {
    p: u64,
    k: u32,
    q: u64,
    /// Monic modulus, ascending coefficients, length k+1. `[0, 1]` when k = 1.
    modulus: Vec<u64>,
    /// Full operation tables for small extension fields, empty otherwise.
    add_table: Vec<u64>,
    mul_table: Vec<u64>,
    inv_table: Vec<u64>,
}

/// A finite field GF(p^k) in polynomial-basis representation.
///
/// Cheap to clone (shared immutable representation); equality compares
/// (p, k, modulus).
#[derive(Debug, Clone)]
pub struct Field(Arc<FieldRepr>);

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.p == other.0.p && self.0.k == other.0.k && self.0.modulus == other.0.modulus)
    }
}

impl Eq for Field {}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.k == 1 {
            write!(f, "GF({})", self.0.p)
        } else {
            write!(f, "GF({}^{})", self.0.p, self.0.k)
        }
    }
}

impl Field {
    /// Build GF(p^k). With `modulus` omitted, k = 1 uses residues mod p and
    /// k > 1 consults the built-in table (q <= 512).
    pub fn new(p: u64, k: u32, modulus: Option<&[u64]>) -> Result<Field> {
        if p < 2 || !is_prime(p) {
            return Err(Error::NonPrimeModulus { p });
        }
        if k < 1 {
            return Err(Error::InvalidParams("extension degree k must be >= 1".into()));
        }
        let q = checked_pow(p, k)
            .ok_or_else(|| Error::InvalidParams(format!("field size {p}^{k} overflows")))?;

        let modulus: Vec<u64> = match (k, modulus) {
            (1, None) => vec![0, 1],
            (1, Some(m)) => {
                if m != [0, 1] {
                    return Err(Error::InvalidModulus { expected_degree: 1 });
                }
                vec![0, 1]
            }
            (_, Some(m)) => {
                if m.len() != k as usize + 1
                    || m[k as usize] != 1
                    || m.iter().any(|&c| c >= p)
                {
                    return Err(Error::InvalidModulus { expected_degree: k });
                }
                check_irreducible(m, p)?;
                m.to_vec()
            }
            (_, None) => {
                if q > BUILTIN_MODULUS_LIMIT {
                    return Err(Error::NoBuiltinModulus { p, k });
                }
                BUILTIN_MODULI
                    .iter()
                    .find(|&&(tp, tk, _)| tp == p && tk == k)
                    .map(|&(_, _, m)| m.to_vec())
                    .ok_or(Error::NoBuiltinModulus { p, k })?
            }
        };

        let mut repr = FieldRepr {
            p,
            k,
            q,
            modulus,
            add_table: Vec::new(),
            mul_table: Vec::new(),
            inv_table: Vec::new(),
        };
        if k > 1 && q <= TABLE_LIMIT {
            let n = q as usize;
            let mut add = vec![0u64; n * n];
            let mut mul = vec![0u64; n * n];
            for a in 0..q {
                for b in 0..q {
                    add[(a * q + b) as usize] = poly_add_codes(a, b, &repr);
                    mul[(a * q + b) as usize] = poly_mul_codes(a, b, &repr);
                }
            }
            repr.add_table = add;
            repr.mul_table = mul;
        }
        if q <= TABLE_LIMIT * TABLE_LIMIT {
            let field = Field(Arc::new(repr));
            let mut inv = vec![0u64; field.0.q as usize];
            for a in 1..field.0.q {
                inv[a as usize] = field.inv_uncached(FieldElement(a)).0;
            }
            // Rebuild with the table attached.
            let mut repr = FieldRepr {
                p: field.0.p,
                k: field.0.k,
                q: field.0.q,
                modulus: field.0.modulus.clone(),
                add_table: field.0.add_table.clone(),
                mul_table: field.0.mul_table.clone(),
                inv_table: Vec::new(),
            };
            repr.inv_table = inv;
            return Ok(Field(Arc::new(repr)));
        }
        Ok(Field(Arc::new(repr)))
    }

    pub fn characteristic(&self) -> u64 {
        self.0.p
    }

    pub fn extension_degree(&self) -> u32 {
        self.0.k
    }

    /// Number of elements q = p^k.
    pub fn order(&self) -> u64 {
        self.0.q
    }

    /// Monic modulus polynomial, ascending coefficients (length k+1).
    pub fn modulus(&self) -> &[u64] {
        &self.0.modulus
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement(0)
    }

    pub fn one(&self) -> FieldElement {
        FieldElement(1)
    }

    /// Element with the given canonical code.
    pub fn element(&self, code: u64) -> Result<FieldElement> {
        if code < self.0.q {
            Ok(FieldElement(code))
        } else {
            Err(Error::InvalidParams(format!(
                "element code {code} out of range for {self}"
            )))
        }
    }

    /// Element from polynomial-basis coefficients (index i = coefficient of X^i).
    pub fn element_from_coeffs(&self, coeffs: &[u64]) -> Result<FieldElement> {
        if coeffs.len() > self.0.k as usize || coeffs.iter().any(|&c| c >= self.0.p) {
            return Err(Error::InvalidParams(
                "coefficient vector too long or entries not reduced mod p".into(),
            ));
        }
        let mut code = 0u64;
        for &c in coeffs.iter().rev() {
            code = code * self.0.p + c;
        }
        Ok(FieldElement(code))
    }

    /// Polynomial-basis coefficients of an element, length k.
    pub fn coeffs(&self, a: FieldElement) -> Vec<u64> {
        decompose(a.0, self.0.p, self.0.k)
    }

    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.check(a);
        self.check(b);
        let r = &self.0;
        if r.k == 1 {
            FieldElement((a.0 + b.0) % r.p)
        } else if !r.add_table.is_empty() {
            FieldElement(r.add_table[(a.0 * r.q + b.0) as usize])
        } else {
            FieldElement(poly_add_codes(a.0, b.0, r))
        }
    }

    pub fn neg(&self, a: FieldElement) -> FieldElement {
        self.check(a);
        let r = &self.0;
        if r.k == 1 {
            FieldElement((r.p - a.0) % r.p)
        } else {
            let coeffs: Vec<u64> = decompose(a.0, r.p, r.k)
                .into_iter()
                .map(|c| (r.p - c) % r.p)
                .collect();
            FieldElement(compose(&coeffs, r.p))
        }
    }

    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.check(a);
        self.check(b);
        let r = &self.0;
        if r.k == 1 {
            FieldElement(((a.0 as u128 * b.0 as u128) % r.p as u128) as u64)
        } else if !r.mul_table.is_empty() {
            FieldElement(r.mul_table[(a.0 * r.q + b.0) as usize])
        } else {
            FieldElement(poly_mul_codes(a.0, b.0, r))
        }
    }

    /// Multiplicative inverse; fails on zero.
    pub fn inv(&self, a: FieldElement) -> Result<FieldElement> {
        if a.0 == 0 {
            return Err(Error::DivisionByZero { q: self.0.q });
        }
        if !self.0.inv_table.is_empty() {
            return Ok(FieldElement(self.0.inv_table[a.0 as usize]));
        }
        Ok(self.inv_uncached(a))
    }

    fn inv_uncached(&self, a: FieldElement) -> FieldElement {
        let r = &self.0;
        if r.k == 1 {
            FieldElement(mod_inverse(a.0, r.p))
        } else {
            // a^(q-2) = a^{-1} in GF(q)*.
            self.pow(a, r.q - 2)
        }
    }

    pub fn pow(&self, a: FieldElement, mut e: u64) -> FieldElement {
        let mut base = a;
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// All q elements in increasing canonical-code order, starting at 0.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> {
        (0..self.0.q).map(FieldElement)
    }

    #[inline]
    fn check(&self, a: FieldElement) {
        debug_assert!(a.0 < self.0.q, "element code {} out of range for {self}", a.0);
    }
}

/// Build the field of a given order, factoring q = p^k; the modulus comes
/// from the built-in table. Rejects non-prime-powers.
pub fn field_for_order(q: u64) -> Result<Field> {
    if q < 2 {
        return Err(Error::InvalidParams(format!("field order {q} must be at least 2")));
    }
    let mut p = 2u64;
    while p * p <= q {
        if q % p == 0 {
            let mut k = 0u32;
            let mut rest = q;
            while rest % p == 0 {
                rest /= p;
                k += 1;
            }
            if rest != 1 {
                return Err(Error::InvalidParams(format!("{q} is not a prime power")));
            }
            return Field::new(p, k, None);
        }
        p += 1;
    }
    Field::new(q, 1, None)
}

fn checked_pow(p: u64, k: u32) -> Option<u64> {
    let mut acc = 1u64;
    for _ in 0..k {
        acc = acc.checked_mul(p)?;
    }
    Some(acc)
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    // Extended Euclid on (a, p); p prime and a != 0.
    let (mut t, mut new_t) = (0i128, 1i128);
    let (mut r, mut new_r) = (p as i128, a as i128);
    while new_r != 0 {
        let quot = r / new_r;
        (t, new_t) = (new_t, t - quot * new_t);
        (r, new_r) = (new_r, r - quot * new_r);
    }
    debug_assert_eq!(r, 1);
    (t.rem_euclid(p as i128)) as u64
}

fn decompose(mut code: u64, p: u64, k: u32) -> Vec<u64> {
    let mut coeffs = vec![0u64; k as usize];
    for c in coeffs.iter_mut() {
        *c = code % p;
        code /= p;
    }
    coeffs
}

fn compose(coeffs: &[u64], p: u64) -> u64 {
    let mut code = 0u64;
    for &c in coeffs.iter().rev() {
        code = code * p + c;
    }
    code
}

fn poly_add_codes(a: u64, b: u64, r: &FieldRepr) -> u64 {
    let ca = decompose(a, r.p, r.k);
    let cb = decompose(b, r.p, r.k);
    let sum: Vec<u64> = ca.iter().zip(&cb).map(|(&x, &y)| (x + y) % r.p).collect();
    compose(&sum, r.p)
}

fn poly_mul_codes(a: u64, b: u64, r: &FieldRepr) -> u64 {
    let ca = decompose(a, r.p, r.k);
    let cb = decompose(b, r.p, r.k);
    let k = r.k as usize;
    let mut prod = vec![0u64; 2 * k - 1];
    for (i, &x) in ca.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in cb.iter().enumerate() {
            prod[i + j] = ((prod[i + j] as u128 + x as u128 * y as u128) % r.p as u128) as u64;
        }
    }
    // Reduce by the monic modulus, highest degree first.
    for d in (k..prod.len()).rev() {
        let c = prod[d];
        if c == 0 {
            continue;
        }
        prod[d] = 0;
        for (i, &m) in r.modulus.iter().enumerate().take(k) {
            let idx = d - k + i;
            prod[idx] =
                ((prod[idx] as u128 + c as u128 * (r.p - m) as u128) % r.p as u128) as u64;
        }
    }
    compose(&prod[..k], r.p)
}

/// Trial division by every monic polynomial of degree 1..=k/2 over GF(p).
fn check_irreducible(modulus: &[u64], p: u64) -> Result<()> {
    let k = modulus.len() - 1;
    for d in 1..=k / 2 {
        let count = checked_pow(p, d as u32).expect("trial divisor space fits u64");
        for code in 0..count {
            let mut divisor = decompose(code, p, d as u32);
            divisor.push(1); // monic of degree d
            if poly_divides(&divisor, modulus, p) {
                return Err(Error::ReducibleModulus { factor_degree: d });
            }
        }
    }
    Ok(())
}

/// Does `divisor` divide `poly` over GF(p)? Both monic, ascending coeffs.
fn poly_divides(divisor: &[u64], poly: &[u64], p: u64) -> bool {
    let mut rem: Vec<u64> = poly.to_vec();
    let dd = divisor.len() - 1;
    while rem.len() > dd {
        let lead = *rem.last().unwrap();
        let deg = rem.len() - 1;
        if lead != 0 {
            for (i, &c) in divisor.iter().enumerate() {
                let idx = deg - dd + i;
                rem[idx] =
                    ((rem[idx] as u128 + lead as u128 * (p - c) as u128) % p as u128) as u64;
            }
        }
        rem.pop();
        while rem.len() > dd && *rem.last().unwrap() == 0 {
            rem.pop();
        }
    }
    rem.iter().all(|&c| c == 0)
}
