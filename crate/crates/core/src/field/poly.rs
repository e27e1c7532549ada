//! Univariate polynomials over GF(q): irreducibility, primitivity, and
//! deterministic search for primitive polynomials.

use std::fmt;

use super::FieldSpec;
use crate::error::{Error, Result};

/// Default trial-division bound used when factoring `q^d - 1`.
pub const DEFAULT_FACTOR_CAP: u64 = 1_000_000;

/// A polynomial over GF(q), coefficients lowest degree first, with no
/// trailing zero coefficients (the zero polynomial has no coefficients).
#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    field: FieldSpec,
    coeffs: Vec<u32>,
}

impl Poly {
    pub fn new(field: &FieldSpec, mut coeffs: Vec<u32>) -> Result<Self> {
        if let Some(&bad) = coeffs.iter().find(|&&c| !field.contains(c)) {
            return Err(Error::NotAnElement(bad as u64));
        }
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Ok(Poly {
            field: field.clone(),
            coeffs,
        })
    }

    fn raw(field: &FieldSpec, mut coeffs: Vec<u32>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Poly {
            field: field.clone(),
            coeffs,
        }
    }

    pub fn zero(field: &FieldSpec) -> Self {
        Poly {
            field: field.clone(),
            coeffs: Vec::new(),
        }
    }

    pub fn one(field: &FieldSpec) -> Self {
        Poly {
            field: field.clone(),
            coeffs: vec![1],
        }
    }

    /// The monomial `x`.
    pub fn x(field: &FieldSpec) -> Self {
        Poly {
            field: field.clone(),
            coeffs: vec![0, 1],
        }
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last() == Some(&1)
    }

    fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    fn check(&self, other: &Poly) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn add(&self, other: &Poly) -> Result<Poly> {
        self.check(other)?;
        let f = &self.field;
        let len = self.coeffs.len().max(other.coeffs.len());
        let c = (0..len)
            .map(|i| {
                let a = self.coeffs.get(i).copied().unwrap_or(0);
                let b = other.coeffs.get(i).copied().unwrap_or(0);
                f.add(a, b)
            })
            .collect();
        Ok(Poly::raw(f, c))
    }

    pub fn sub(&self, other: &Poly) -> Result<Poly> {
        self.check(other)?;
        let neg = Poly::raw(&self.field, other.coeffs.iter().map(|&c| self.field.neg(c)).collect());
        self.add(&neg)
    }

    pub fn mul(&self, other: &Poly) -> Result<Poly> {
        self.check(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Poly::zero(&self.field));
        }
        let f = &self.field;
        let mut c = vec![0; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                c[i + j] = f.add(c[i + j], f.mul(a, b));
            }
        }
        Ok(Poly::raw(f, c))
    }

    /// Euclidean division: `(quotient, remainder)`.
    pub fn div_rem(&self, divisor: &Poly) -> Result<(Poly, Poly)> {
        self.check(divisor)?;
        let f = &self.field;
        let dd = divisor.degree().ok_or(Error::DivisionByZero)?;
        let lead_inv = f.inv(divisor.coeffs[dd]).expect("leading coefficient is nonzero");
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Poly::zero(f), self.clone()));
        }
        let mut quot = vec![0; rem.len() - dd];
        for d in (dd..rem.len()).rev() {
            let c = rem[d];
            if c == 0 {
                continue;
            }
            let factor = f.mul(c, lead_inv);
            quot[d - dd] = factor;
            for (i, &b) in divisor.coeffs.iter().enumerate() {
                let idx = d - dd + i;
                rem[idx] = f.sub(rem[idx], f.mul(factor, b));
            }
        }
        rem.truncate(dd);
        Ok((Poly::raw(f, quot), Poly::raw(f, rem)))
    }

    pub fn rem(&self, divisor: &Poly) -> Result<Poly> {
        Ok(self.div_rem(divisor)?.1)
    }

    fn make_monic(&self) -> Poly {
        match self.coeffs.last() {
            None => self.clone(),
            Some(&lead) => {
                let inv = self.field.inv(lead).expect("nonzero leading coefficient");
                Poly::raw(
                    &self.field,
                    self.coeffs.iter().map(|&c| self.field.mul(c, inv)).collect(),
                )
            }
        }
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Poly) -> Result<Poly> {
        self.check(other)?;
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = b;
            b = r;
        }
        Ok(a.make_monic())
    }

    /// `self^exp mod modulus`.
    pub fn pow_mod(&self, mut exp: u128, modulus: &Poly) -> Result<Poly> {
        let mut base = self.rem(modulus)?;
        let mut acc = Poly::one(&self.field).rem(modulus)?;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base)?.rem(modulus)?;
            }
            base = base.mul(&base)?.rem(modulus)?;
            exp >>= 1;
        }
        Ok(acc)
    }

    /// Evaluates at a field element (Horner).
    pub fn eval(&self, a: u32) -> u32 {
        self.coeffs
            .iter()
            .rev()
            .fold(0, |acc, &c| self.field.add(self.field.mul(acc, a), c))
    }

    /// True iff `self` has no nontrivial factorization. Uses
    /// `gcd(f, x^{q^i} - x) = 1` for `1 <= i <= deg/2`.
    pub fn is_irreducible(&self) -> Result<bool> {
        let d = match self.degree() {
            Some(d) if d >= 1 && self.is_monic() => d,
            _ => return Err(Error::NonMonic),
        };
        if d == 1 {
            return Ok(true);
        }
        let q = self.field.q() as u128;
        let x = Poly::x(&self.field);
        let mut frob = x.clone();
        for _ in 1..=d / 2 {
            frob = frob.pow_mod(q, self)?;
            let g = self.gcd(&frob.sub(&x)?)?;
            if !g.is_one() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// True iff `x mod f` has multiplicative order `q^d - 1`.
    ///
    /// Fails with [`Error::Reducible`] on reducible input and
    /// [`Error::FactorizationTooLarge`] if `q^d - 1` cannot be factored by
    /// trial division up to `factor_cap`.
    pub fn is_primitive(&self, factor_cap: u64) -> Result<bool> {
        if !self.is_irreducible()? {
            return Err(Error::Reducible);
        }
        let d = self.degree().expect("nonzero") as u32;
        let group = (self.field.q() as u128)
            .checked_pow(d)
            .map(|v| v - 1)
            .ok_or(Error::FactorizationTooLarge(u128::MAX))?;
        let primes = prime_factors(group, factor_cap)?;
        let x = Poly::x(&self.field);
        if !x.pow_mod(group, self)?.is_one() {
            return Ok(false);
        }
        for r in primes {
            if x.pow_mod(group / r, self)?.is_one() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Monic degree-`d` polynomials in ascending order of the integer
    /// `a_0 + a_1 q + ... + a_{d-1} q^{d-1}` (constant term least significant).
    fn monic_candidates(field: &FieldSpec, d: usize) -> impl Iterator<Item = Poly> + '_ {
        let q = field.q() as u64;
        let count = q.checked_pow(d as u32).unwrap_or(u64::MAX);
        (0..count).map(move |mut idx| {
            let mut c: Vec<u32> = (0..d)
                .map(|_| {
                    let v = (idx % q) as u32;
                    idx /= q;
                    v
                })
                .collect();
            c.push(1);
            Poly {
                field: field.clone(),
                coeffs: c,
            }
        })
    }

    /// Smallest monic irreducible polynomial of degree `d` in candidate order.
    pub fn smallest_irreducible(field: &FieldSpec, d: usize) -> Result<Poly> {
        if d == 0 {
            return Err(Error::DegreeMismatch { expected: 1, found: 0 });
        }
        for cand in Self::monic_candidates(field, d) {
            if cand.is_irreducible()? {
                return Ok(cand);
            }
        }
        unreachable!("irreducible polynomials exist in every degree")
    }

    /// Primitive polynomials of degree `d`, smallest first.
    pub fn primitive_polys(field: &FieldSpec, d: usize, factor_cap: u64) -> impl Iterator<Item = Result<Poly>> + '_ {
        Self::monic_candidates(field, d).filter_map(move |cand| {
            if d > 1 && cand.coeffs[0] == 0 {
                return None;
            }
            match cand.is_irreducible() {
                Ok(true) => {}
                Ok(false) => return None,
                Err(e) => return Some(Err(e)),
            }
            match cand.is_primitive(factor_cap) {
                Ok(true) => Some(Ok(cand)),
                Ok(false) => None,
                Err(e) => Some(Err(e)),
            }
        })
    }

    /// The lexicographically smallest monic primitive polynomial of degree `d`.
    pub fn find_primitive(field: &FieldSpec, d: usize, factor_cap: u64) -> Result<Poly> {
        Self::nth_primitive(field, d, 0, factor_cap)
    }

    /// The `rank`-th primitive polynomial of degree `d` (0 = smallest).
    pub fn nth_primitive(field: &FieldSpec, d: usize, rank: usize, factor_cap: u64) -> Result<Poly> {
        if d == 0 {
            return Err(Error::DegreeMismatch { expected: 1, found: 0 });
        }
        Self::primitive_polys(field, d, factor_cap)
            .nth(rank)
            .unwrap_or_else(|| {
                Err(Error::InvalidParams(format!(
                    "fewer than {} primitive polynomials of degree {d}",
                    rank + 1
                )))
            })
    }

    /// Parses `x^3+x+1 over GF(2)` or `[1,1,0,1] @ GF(2)`.
    pub fn parse(text: &str) -> Result<Poly> {
        let text = text.trim();
        if let Some((list, field)) = text.split_once('@') {
            let field = FieldSpec::parse(field)?;
            let body = list
                .trim()
                .strip_prefix('[')
                .and_then(|s| s.strip_suffix(']'))
                .ok_or_else(|| Error::Parse(format!("expected [c0,c1,...], got `{list}`")))?;
            let coeffs = body
                .split(',')
                .filter(|s| !s.trim().is_empty())
                .map(|s| {
                    s.trim()
                        .parse::<u32>()
                        .map_err(|_| Error::Parse(format!("bad coefficient `{s}`")))
                })
                .collect::<Result<Vec<_>>>()?;
            return Poly::new(&field, coeffs);
        }
        let (expr, field) = text
            .split_once(" over ")
            .ok_or_else(|| Error::Parse(format!("expected `<poly> over GF(q)`, got `{text}`")))?;
        let field = FieldSpec::parse(field)?;
        let mut coeffs: Vec<u32> = Vec::new();
        let compact: String = expr.chars().filter(|c| !c.is_whitespace()).collect();
        for term in compact.split('+').filter(|t| !t.is_empty()) {
            let (coef, power) = parse_term(term)?;
            if coeffs.len() <= power {
                coeffs.resize(power + 1, 0);
            }
            if !field.contains(coef) {
                return Err(Error::NotAnElement(coef as u64));
            }
            coeffs[power] = field.add(coeffs[power], coef);
        }
        Poly::new(&field, coeffs)
    }

    /// Coefficient-list form, e.g. `[1,1,0,1] @ GF(2)`.
    pub fn to_list_string(&self) -> String {
        let items: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        format!("[{}] @ {}", items.join(","), self.field)
    }
}

fn parse_term(term: &str) -> Result<(u32, usize)> {
    let bad = || Error::Parse(format!("bad term `{term}`"));
    match term.find('x') {
        None => Ok((term.parse().map_err(|_| bad())?, 0)),
        Some(pos) => {
            let coef_str = term[..pos].trim_end_matches('*');
            let coef = if coef_str.is_empty() {
                1
            } else {
                coef_str.parse().map_err(|_| bad())?
            };
            let rest = &term[pos + 1..];
            let power = if rest.is_empty() {
                1
            } else {
                rest.strip_prefix('^').ok_or_else(bad)?.parse().map_err(|_| bad())?
            };
            Ok((coef, power))
        }
    }
}

/// Distinct prime factors of `n` by trial division up to `cap`. The cofactor
/// left after dividing out every prime `<= cap` is accepted as prime only if
/// it is below `cap^2`.
pub(crate) fn prime_factors(mut n: u128, cap: u64) -> Result<Vec<u128>> {
    let original = n;
    let mut out = Vec::new();
    let mut d: u128 = 2;
    while d * d <= n {
        if d > cap as u128 {
            return Err(Error::FactorizationTooLarge(original));
        }
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    Ok(out)
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0 over {}", self.field);
        }
        let mut terms = Vec::new();
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let coef = if c == 1 && i > 0 { String::new() } else { c.to_string() };
            terms.push(match i {
                0 => coef,
                1 => format!("{coef}x"),
                _ => format!("{coef}x^{i}"),
            });
        }
        write!(f, "{} over {}", terms.join("+"), self.field)
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
