//! Exact arithmetic in GF(q), q = p^e.
//!
//! Elements are encoded as integers in `[0, q)`: the element with
//! polynomial-basis coefficients `c_0, ..., c_{e-1}` (over GF(p), in the
//! basis `1, x, ..., x^{e-1}` of the stored modulus) is the integer
//! `c_0 + c_1 p + ... + c_{e-1} p^{e-1}`. Matrices and polynomials store these
//! raw indices; [`FieldElement`] is the checked, field-tagged wrapper.

mod poly;

pub use poly::{Poly, DEFAULT_FACTOR_CAP};

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Largest field order accepted.
pub const MAX_FIELD_ORDER: u64 = 1 << 16;

/// Extension fields up to this order get precomputed add/mul tables.
const TABLE_LIMIT: u32 = 256;

/// A finite field GF(p^e). Cheap to clone; immutable after creation.
#[derive(Clone)]
pub struct FieldSpec(Arc<Inner>);

struct Inner {
    p: u32,
    e: u32,
    q: u32,
    /// Prime-field coefficients of the monic modulus, lowest degree first.
    modulus: Option<Vec<u32>>,
    tables: Option<Tables>,
}

struct Tables {
    add: Vec<u32>,
    mul: Vec<u32>,
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl FieldSpec {
    /// The prime field GF(p).
    pub fn prime(p: u64) -> Result<Self> {
        Self::make(p, 1, None)
    }

    /// GF(p^e) with the default modulus (smallest monic irreducible).
    pub fn new(p: u64, e: u32) -> Result<Self> {
        Self::make(p, e, None)
    }

    /// GF(q) for a prime power q, with the default modulus.
    pub fn from_order(q: u64) -> Result<Self> {
        let (p, e) = prime_power(q).ok_or(Error::NotPrimePower(q))?;
        Self::make(p, e, None)
    }

    /// Validated constructor. `modulus`, when given for `e > 1`, must be a
    /// monic irreducible degree-`e` polynomial over GF(p).
    pub fn make(p: u64, e: u32, modulus: Option<&Poly>) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if e == 0 {
            return Err(Error::DegreeMismatch { expected: 1, found: 0 });
        }
        let q = p
            .checked_pow(e)
            .filter(|&q| q <= MAX_FIELD_ORDER)
            .ok_or(Error::FieldTooLarge(p.saturating_pow(e)))?;
        let p = p as u32;
        let base = FieldSpec(Arc::new(Inner {
            p,
            e: 1,
            q: p,
            modulus: None,
            tables: None,
        }));
        if let Some(m) = modulus {
            if m.field().p() != p || m.field().e() != 1 {
                return Err(Error::FieldMismatch);
            }
            let deg = m.degree().unwrap_or(0);
            if deg != e as usize {
                return Err(Error::DegreeMismatch {
                    expected: e as usize,
                    found: deg,
                });
            }
            if !m.is_monic() {
                return Err(Error::NonMonic);
            }
        }
        if e == 1 {
            return Ok(base);
        }
        let modulus = match modulus {
            Some(m) => {
                if !m.is_irreducible()? {
                    return Err(Error::ReducibleModulus);
                }
                m.coeffs().to_vec()
            }
            None => Poly::smallest_irreducible(&base, e as usize)?.coeffs().to_vec(),
        };
        let mut inner = Inner {
            p,
            e,
            q: q as u32,
            modulus: Some(modulus),
            tables: None,
        };
        if inner.q <= TABLE_LIMIT {
            inner.tables = Some(build_tables(&inner));
        }
        Ok(FieldSpec(Arc::new(inner)))
    }

    pub fn p(&self) -> u32 {
        self.0.p
    }

    pub fn e(&self) -> u32 {
        self.0.e
    }

    pub fn q(&self) -> u32 {
        self.0.q
    }

    /// Modulus coefficients over GF(p), lowest degree first (`None` for prime fields).
    pub fn modulus(&self) -> Option<&[u32]> {
        self.0.modulus.as_deref()
    }

    /// The prime subfield GF(p) as its own `FieldSpec`.
    pub fn prime_subfield(&self) -> FieldSpec {
        if self.0.e == 1 {
            self.clone()
        } else {
            FieldSpec(Arc::new(Inner {
                p: self.0.p,
                e: 1,
                q: self.0.p,
                modulus: None,
                tables: None,
            }))
        }
    }

    pub fn contains(&self, a: u32) -> bool {
        a < self.0.q
    }

    pub fn element(&self, value: u32) -> Result<FieldElement> {
        if !self.contains(value) {
            return Err(Error::NotAnElement(value as u64));
        }
        Ok(FieldElement {
            field: self.clone(),
            value,
        })
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement {
            field: self.clone(),
            value: 0,
        }
    }

    pub fn one(&self) -> FieldElement {
        FieldElement {
            field: self.clone(),
            value: 1,
        }
    }

    /// Polynomial-basis coefficients of a raw element.
    pub fn coeffs(&self, mut a: u32) -> Vec<u32> {
        let p = self.0.p;
        (0..self.0.e)
            .map(|_| {
                let c = a % p;
                a /= p;
                c
            })
            .collect()
    }

    fn encode(&self, coeffs: &[u32]) -> u32 {
        coeffs.iter().rev().fold(0, |acc, &c| acc * self.0.p + c)
    }

    // Raw arithmetic on element indices. Callers guarantee membership.

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        let inner = &*self.0;
        if inner.e == 1 {
            let s = a + b;
            if s >= inner.p {
                s - inner.p
            } else {
                s
            }
        } else if let Some(t) = &inner.tables {
            t.add[(a * inner.q + b) as usize]
        } else {
            let (ca, cb) = (self.coeffs(a), self.coeffs(b));
            let c: Vec<u32> = ca.iter().zip(&cb).map(|(x, y)| (x + y) % inner.p).collect();
            self.encode(&c)
        }
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        let inner = &*self.0;
        if inner.e == 1 {
            if a == 0 {
                0
            } else {
                inner.p - a
            }
        } else {
            let c: Vec<u32> = self.coeffs(a).iter().map(|&x| (inner.p - x) % inner.p).collect();
            self.encode(&c)
        }
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        if self.0.p == 2 && self.0.e == 1 {
            return a ^ b;
        }
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        let inner = &*self.0;
        if inner.e == 1 {
            ((a as u64 * b as u64) % inner.p as u64) as u32
        } else if let Some(t) = &inner.tables {
            t.mul[(a * inner.q + b) as usize]
        } else {
            mul_slow(inner, self, a, b)
        }
    }

    pub fn pow(&self, a: u32, mut exp: u64) -> u32 {
        let mut base = a;
        let mut acc = 1;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: u32) -> Option<u32> {
        (a != 0).then(|| self.pow(a, self.0.q as u64 - 2))
    }

    pub fn div(&self, a: u32, b: u32) -> Option<u32> {
        self.inv(b).map(|ib| self.mul(a, ib))
    }

    /// Parses `GF(q)` or `GF(p^e)` and returns the field with the default modulus.
    pub fn parse(text: &str) -> Result<Self> {
        let t = text.trim();
        let inner = t
            .strip_prefix("GF(")
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| Error::Parse(format!("expected GF(q), got `{t}`")))?;
        let num = |s: &str| {
            s.trim()
                .parse::<u64>()
                .map_err(|_| Error::Parse(format!("bad number `{s}`")))
        };
        match inner.split_once('^') {
            Some((p, e)) => Self::new(num(p)?, num(e)? as u32),
            None => Self::from_order(num(inner)?),
        }
    }
}

fn mul_slow(inner: &Inner, f: &FieldSpec, a: u32, b: u32) -> u32 {
    let p = inner.p as u64;
    let e = inner.e as usize;
    let (ca, cb) = (f.coeffs(a), f.coeffs(b));
    let mut prod = vec![0u64; 2 * e - 1];
    for (i, &x) in ca.iter().enumerate() {
        for (j, &y) in cb.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p;
        }
    }
    let m = inner.modulus.as_ref().expect("extension field has a modulus");
    for d in (e..prod.len()).rev() {
        let c = prod[d];
        if c == 0 {
            continue;
        }
        // x^d = x^{d-e} * x^e and x^e = -(m_0 + ... + m_{e-1} x^{e-1})
        for (i, &mi) in m[..e].iter().enumerate() {
            let idx = d - e + i;
            prod[idx] = (prod[idx] + (p - c) * mi as u64) % p;
        }
        prod[d] = 0;
    }
    let c: Vec<u32> = prod[..e].iter().map(|&x| x as u32).collect();
    f.encode(&c)
}

fn build_tables(inner: &Inner) -> Tables {
    let q = inner.q;
    let tmp = FieldSpec(Arc::new(Inner {
        p: inner.p,
        e: inner.e,
        q,
        modulus: inner.modulus.clone(),
        tables: None,
    }));
    let mut add = vec![0; (q * q) as usize];
    let mut mul = vec![0; (q * q) as usize];
    for a in 0..q {
        for b in 0..q {
            add[(a * q + b) as usize] = tmp.add(a, b);
            mul[(a * q + b) as usize] = mul_slow(inner, &tmp, a, b);
        }
    }
    Tables { add, mul }
}

/// Splits `q` as `p^e` with `p` prime.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let mut rest = q;
    let mut e = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        e += 1;
    }
    (rest == 1).then_some((p, e))
}

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.p == other.0.p && self.0.e == other.0.e && self.0.modulus == other.0.modulus)
    }
}

impl Eq for FieldSpec {}

impl std::hash::Hash for FieldSpec {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.p().hash(state);
        self.e().hash(state);
        self.modulus().hash(state);
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.e == 1 {
            write!(f, "GF({})", self.0.p)
        } else {
            write!(f, "GF({}^{})", self.0.p, self.0.e)
        }
    }
}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0.modulus {
            None => write!(f, "{self}"),
            Some(m) => write!(f, "{self} mod {m:?}"),
        }
    }
}

/// A field element tagged with its field; arithmetic checks that both
/// operands come from the same field.
#[derive(Clone, PartialEq, Eq)]
pub struct FieldElement {
    field: FieldSpec,
    value: u32,
}

impl FieldElement {
    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn value(&self) -> u32 {
        self.value
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    pub fn coeffs(&self) -> Vec<u32> {
        self.field.coeffs(self.value)
    }

    fn same(&self, other: &Self) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    fn wrap(&self, value: u32) -> Self {
        FieldElement {
            field: self.field.clone(),
            value,
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same(other)?;
        Ok(self.wrap(self.field.add(self.value, other.value)))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.same(other)?;
        Ok(self.wrap(self.field.sub(self.value, other.value)))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same(other)?;
        Ok(self.wrap(self.field.mul(self.value, other.value)))
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        self.same(other)?;
        self.field
            .div(self.value, other.value)
            .map(|v| self.wrap(v))
            .ok_or(Error::DivisionByZero)
    }

    pub fn neg(&self) -> Self {
        self.wrap(self.field.neg(self.value))
    }

    pub fn inv(&self) -> Result<Self> {
        self.field
            .inv(self.value)
            .map(|v| self.wrap(v))
            .ok_or(Error::DivisionByZero)
    }

    pub fn pow(&self, exp: u64) -> Self {
        self.wrap(self.field.pow(self.value, exp))
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}@{}", self.value, self.field)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_fields() {
        let f2 = FieldSpec::prime(2).unwrap();
        assert_eq!(f2.q(), 2);
        assert_eq!(f2.add(1, 1), 0);
        let f3 = FieldSpec::prime(3).unwrap();
        assert_eq!(f3.inv(2), Some(2));
        assert_eq!(FieldSpec::prime(4).unwrap_err(), Error::NotPrime(4));
    }

    #[test]
    fn gf4_default_modulus_and_mul() {
        let f4 = FieldSpec::new(2, 2).unwrap();
        // x^2 + x + 1, lowest degree first
        assert_eq!(f4.modulus(), Some(&[1, 1, 1][..]));
        // x * x = x + 1, encoded 2 * 2 = 3
        assert_eq!(f4.mul(2, 2), 3);
        let f2 = FieldSpec::prime(2).unwrap();
        let m = Poly::new(&f2, vec![1, 1, 1]).unwrap();
        assert_eq!(FieldSpec::make(2, 2, Some(&m)).unwrap(), f4);
        let bad = Poly::new(&f2, vec![1, 0, 1]).unwrap();
        assert_eq!(FieldSpec::make(2, 2, Some(&bad)).unwrap_err(), Error::ReducibleModulus);
        let cubic = Poly::new(&f2, vec![1, 1, 0, 1]).unwrap();
        assert!(matches!(
            FieldSpec::make(2, 2, Some(&cubic)),
            Err(Error::DegreeMismatch { .. })
        ));
    }

    #[test]
    fn element_wrapper_checks_fields() {
        let f2 = FieldSpec::prime(2).unwrap();
        let f3 = FieldSpec::prime(3).unwrap();
        let one2 = f2.one();
        assert_eq!(one2.add(&one2).unwrap(), f2.zero());
        assert_eq!(one2.add(&f3.one()).unwrap_err(), Error::FieldMismatch);
        assert_eq!(f3.zero().inv().unwrap_err(), Error::DivisionByZero);
        assert_eq!(f3.element(2).unwrap().inv().unwrap().value(), 2);
        assert!(f3.element(3).is_err());
    }

    #[test]
    fn inverse_and_fermat_in_small_fields() {
        for q in [2u64, 3, 4, 5, 7, 8, 9, 16, 25, 27] {
            let f = FieldSpec::from_order(q).unwrap();
            for a in 1..f.q() {
                let ia = f.inv(a).unwrap();
                assert_eq!(f.mul(a, ia), 1, "q={q} a={a}");
                assert_eq!(f.pow(a, q - 1), 1);
                assert_eq!(f.add(a, f.neg(a)), 0);
            }
        }
    }

    #[test]
    fn table_free_path_matches_tables() {
        // GF(3^6) = 729 > TABLE_LIMIT, so arithmetic goes through the slow path.
        let f = FieldSpec::new(3, 6).unwrap();
        for a in [1u32, 2, 5, 100, 728] {
            let ia = f.inv(a).unwrap();
            assert_eq!(f.mul(a, ia), 1);
        }
    }

    #[test]
    fn parse_field_names() {
        assert_eq!(FieldSpec::parse("GF(4)").unwrap(), FieldSpec::new(2, 2).unwrap());
        assert_eq!(FieldSpec::parse("GF(2^2)").unwrap(), FieldSpec::new(2, 2).unwrap());
        assert_eq!(FieldSpec::parse("GF(3)").unwrap().to_string(), "GF(3)");
        assert!(FieldSpec::parse("GF(6)").is_err());
        assert_eq!(prime_power(27), Some((3, 3)));
        assert_eq!(prime_power(12), None);
    }
}
