//! The orbit construction over GF(q)^n with n = sk + h: the group generators
//! G_i, the matrices A_i, B_i and the anti-diagonal M, the resulting set of
//! (n-1)-spaces, and the flag codes read off from their row prefixes.

mod verify;

pub use verify::{verify_all, verify_code, verify_construction, Claim, ParamsSummary, Totals, VerificationReport};

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Poly, DEFAULT_FACTOR_CAP};
use crate::flags::{max_subspace_distance, Flag, FlagCode, TypeVector};
use crate::matgf::{Block, Matrix, RowSlice, DEFAULT_ORDER_CAP};
use crate::subspace::Subspace;

/// Input bundle for the construction.
#[derive(Clone, Debug)]
pub struct ConstructionParams {
    field: FieldSpec,
    k: usize,
    h: usize,
    s: usize,
    order_cap: u64,
    factor_cap: u64,
    poly_rank: usize,
    overrides: BTreeMap<usize, Poly>,
}

impl ConstructionParams {
    pub fn new(field: &FieldSpec, k: usize, h: usize, s: usize) -> Result<Self> {
        Self::with_caps(field, k, h, s, DEFAULT_ORDER_CAP, DEFAULT_FACTOR_CAP)
    }

    /// Like [`ConstructionParams::new`] with explicit budgets for group
    /// orders and for the factorizations behind primitivity tests.
    pub fn with_caps(field: &FieldSpec, k: usize, h: usize, s: usize, order_cap: u64, factor_cap: u64) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidParams("k must be at least 1".into()));
        }
        if h >= k {
            return Err(Error::InvalidParams(format!("h = {h} must be smaller than k = {k}")));
        }
        if s < 2 {
            return Err(Error::InvalidParams(format!("s = {s} must be at least 2")));
        }
        let params = ConstructionParams {
            field: field.clone(),
            k,
            h,
            s,
            order_cap,
            factor_cap,
            poly_rank: 0,
            overrides: BTreeMap::new(),
        };
        params.group_order(s - 1)?;
        Ok(params)
    }

    pub fn from_order(q: u64, k: usize, h: usize, s: usize) -> Result<Self> {
        Self::new(&FieldSpec::from_order(q)?, k, h, s)
    }

    pub fn with_order_cap(mut self, cap: u64) -> Self {
        self.order_cap = cap;
        self
    }

    pub fn with_factor_cap(mut self, cap: u64) -> Self {
        self.factor_cap = cap;
        self
    }

    /// Uses the `rank`-th smallest primitive polynomial of each degree (or
    /// the largest rank available when a degree has fewer).
    pub fn with_poly_rank(mut self, rank: usize) -> Self {
        self.poly_rank = rank;
        self
    }

    /// Fixes the polynomial used for the block of degree `deg(poly)`.
    pub fn with_poly(mut self, poly: Poly) -> Result<Self> {
        if *poly.field() != self.field {
            return Err(Error::FieldMismatch);
        }
        let d = poly.degree().unwrap_or(0);
        if !(1..self.s).any(|i| self.block_degree(i) == d) {
            return Err(Error::InvalidParams(format!("no block of degree {d}")));
        }
        if !poly.is_irreducible()? || !poly.is_primitive(self.factor_cap)? {
            return Err(Error::InvalidParams(format!("{poly} is not primitive")));
        }
        self.overrides.insert(d, poly);
        Ok(self)
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn q(&self) -> u64 {
        u64::from(self.field.q())
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn h(&self) -> usize {
        self.h
    }

    pub fn s(&self) -> usize {
        self.s
    }

    pub fn n(&self) -> usize {
        self.s * self.k + self.h
    }

    pub fn order_cap(&self) -> u64 {
        self.order_cap
    }

    pub fn factor_cap(&self) -> u64 {
        self.factor_cap
    }

    pub fn poly_rank(&self) -> usize {
        self.poly_rank
    }

    /// `ik + h`, the size of the companion block of G_i.
    pub fn block_degree(&self, i: usize) -> usize {
        i * self.k + self.h
    }

    /// `q^{ik+h} - 1`, refusing sizes beyond the order cap.
    pub fn group_order(&self, i: usize) -> Result<u64> {
        let d = u32::try_from(self.block_degree(i)).map_err(|_| Error::OrderCapExceeded(self.order_cap))?;
        match self.q().checked_pow(d) {
            Some(v) if v - 1 <= self.order_cap => Ok(v - 1),
            _ => Err(Error::OrderCapExceeded(self.order_cap)),
        }
    }

    fn check_block(&self, i: usize) -> Result<()> {
        if i == 0 || i >= self.s {
            return Err(Error::InvalidParams(format!(
                "block index {i} outside 1..{}",
                self.s - 1
            )));
        }
        Ok(())
    }

    /// The primitive polynomial of degree `ik + h` used for block `i`.
    pub fn poly(&self, i: usize) -> Result<Poly> {
        self.check_block(i)?;
        let d = self.block_degree(i);
        if let Some(p) = self.overrides.get(&d) {
            return Ok(p.clone());
        }
        let mut chosen = None;
        for p in Poly::primitive_polys(&self.field, d, self.factor_cap).take(self.poly_rank + 1) {
            chosen = Some(p?);
        }
        Ok(chosen.expect("primitive polynomials exist in every degree"))
    }

    /// `sum_{i=1}^{s-1} q^{ik+h} + 1`.
    pub fn cardinality(&self) -> u64 {
        (1..self.s)
            .map(|i| self.group_order(i).expect("checked at construction") + 1)
            .sum::<u64>()
            + 1
    }

    /// `(1, ..., k, n-k, ..., n-1)`.
    pub fn optimum_type(&self) -> TypeVector {
        let n = self.n();
        let mut dims: Vec<usize> = (1..=self.k).chain(n - self.k..n).collect();
        dims.dedup();
        TypeVector::new(n, dims).expect("valid type")
    }

    /// `(1, ..., k+h, 2k+h, ..., (s-2)k+h, n-k, ..., n-1)`.
    pub fn master_type(&self) -> TypeVector {
        let n = self.n();
        let mut dims: Vec<usize> = (1..=self.k + self.h)
            .chain((2..=self.s.saturating_sub(2)).map(|j| j * self.k + self.h))
            .chain(n - self.k..n)
            .collect();
        dims.sort_unstable();
        dims.dedup();
        TypeVector::new(n, dims).expect("valid type")
    }

    /// Dimensions strictly between `k` and `n - k` for which a projected
    /// distance is claimed.
    pub fn middle_levels(&self) -> Vec<usize> {
        let (k, n) = (self.k, self.n());
        if self.s == 2 {
            return (k + 1..n - k).collect();
        }
        self.master_type()
            .dims()
            .iter()
            .copied()
            .filter(|&m| m > k && m < n - k)
            .collect()
    }

    /// Claimed `d_S(C_m)` for the projected code at dimension `m`.
    pub fn expected_projection_distance(&self, m: usize) -> Option<u32> {
        let (k, h, n) = (self.k, self.h, self.n());
        if m == 0 || m >= n {
            return None;
        }
        if m <= k || m >= n - k {
            return Some(max_subspace_distance(m, n));
        }
        if !self.middle_levels().contains(&m) {
            return None;
        }
        if self.s == 4 && m == 2 * k + h {
            return Some(2 * h as u32);
        }
        Some(2 * k as u32)
    }

    /// Claimed minimum distance of the code of type `ty` read off the
    /// generator set; `None` if `ty` has a level without a claim.
    pub fn expected_distance(&self, ty: &TypeVector) -> Option<u32> {
        ty.dims().iter().map(|&m| self.expected_projection_distance(m)).sum()
    }

    pub fn summary(&self) -> Result<ParamsSummary> {
        Ok(ParamsSummary {
            q: self.q(),
            k: self.k,
            h: self.h,
            s: self.s,
            n: self.n(),
            polys: (1..self.s)
                .map(|i| self.poly(i).map(|p| p.to_string()))
                .collect::<Result<_>>()?,
        })
    }
}

impl fmt::Display for ConstructionParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "q={} k={} h={} s={} n={}",
            self.q(),
            self.k,
            self.h,
            self.s,
            self.n()
        )
    }
}

/// `P_i`, the companion matrix of the block-`i` primitive polynomial.
pub fn build_p(params: &ConstructionParams, i: usize) -> Result<Matrix> {
    Matrix::companion(&params.poly(i)?)
}

/// `blockdiag(I_{(s-i-1)k}, I_k, P_i)`.
pub fn build_g_generator(params: &ConstructionParams, i: usize) -> Result<Matrix> {
    let f = params.field();
    let p = build_p(params, i)?;
    Matrix::block_diag(f, &[Matrix::identity(f, (params.s - i) * params.k), p])
}

/// Row and column band sizes shared by A_i, B_i and A_i g.
fn bands(params: &ConstructionParams, i: usize) -> ([usize; 4], [usize; 3]) {
    let (k, d) = (params.k, params.block_degree(i));
    let w0 = (params.s - i - 1) * k;
    ([k, d - k, w0, k - 1], [w0, k, d])
}

/// The block matrix with right column band `(Y^(k); Y^[k]; 0; Y^(k-1))`,
/// where the top band's right block is dropped when `with_top` is false.
fn assemble(params: &ConstructionParams, i: usize, y: &Matrix, with_top: bool) -> Result<Matrix> {
    let f = params.field();
    let (heights, widths) = bands(params, i);
    let k = params.k;
    let top = if with_top {
        Block::Mat(y.slice(RowSlice::First(k))?)
    } else {
        Block::Zero
    };
    let rest = if heights[1] > 0 {
        Block::Mat(y.slice(RowSlice::After(k))?)
    } else {
        Block::Zero
    };
    let tail = if k > 1 {
        Block::Mat(y.slice(RowSlice::First(k - 1))?)
    } else {
        Block::Zero
    };
    Matrix::block(
        f,
        &heights,
        &widths,
        &[
            vec![Block::Zero, Block::Identity, top],
            vec![Block::Zero, Block::Zero, rest],
            vec![Block::Identity, Block::Zero, Block::Zero],
            vec![Block::Zero, Block::Zero, tail],
        ],
    )
}

fn full_rank_or_bug(m: Matrix, what: &str) -> Result<Matrix> {
    if m.rank() != m.nrows() {
        return Err(Error::TheoremViolated(format!("{what} is not of full row rank")));
    }
    Ok(m)
}

/// `A_i`, an `(n-1) x n` matrix of full row rank.
pub fn build_a(params: &ConstructionParams, i: usize) -> Result<Matrix> {
    params.check_block(i)?;
    let id = Matrix::identity(params.field(), params.block_degree(i));
    full_rank_or_bug(assemble(params, i, &id, true)?, "A_i")
}

/// `B_i`: `A_i` with the top-right block replaced by zero.
pub fn build_b(params: &ConstructionParams, i: usize) -> Result<Matrix> {
    params.check_block(i)?;
    let id = Matrix::identity(params.field(), params.block_degree(i));
    full_rank_or_bug(assemble(params, i, &id, false)?, "B_i")
}

/// The `(n-1) x n` anti-diagonal matrix with ones at `(j, n+1-j)`.
pub fn build_m(params: &ConstructionParams) -> Matrix {
    let n = params.n();
    let mut m = Matrix::zeros(params.field(), n - 1, n);
    for j in 0..n - 1 {
        m.set(j, n - 1 - j, 1);
    }
    m
}

/// The block form `A_i g` takes for `g = blockdiag(I, I_k, X)`.
pub fn a_times_block(params: &ConstructionParams, i: usize, x: &Matrix) -> Result<Matrix> {
    params.check_block(i)?;
    assemble(params, i, x, true)
}

/// The two-block matrices `A = [I_k | I^(k); 0 | I^[k]; 0 | I^(k-1)]` and
/// `B` (same with zero top-right) for n = 2k + h, written out entrywise.
pub fn two_block_ab(field: &FieldSpec, k: usize, h: usize) -> (Matrix, Matrix) {
    let n = 2 * k + h;
    let mut a = Matrix::zeros(field, n - 1, n);
    let mut b = Matrix::zeros(field, n - 1, n);
    for r in 0..k {
        a.set(r, r, 1);
        a.set(r, k + r, 1);
        b.set(r, r, 1);
    }
    for r in k..k + h {
        a.set(r, k + r, 1);
        b.set(r, k + r, 1);
    }
    for r in k + h..n - 1 {
        let c = k + (r - k - h);
        a.set(r, c, 1);
        b.set(r, c, 1);
    }
    (a, b)
}

/// Where a generator matrix came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Label {
    /// `A_i g^t` for `1 <= t <= q^{ik+h} - 1`.
    Orbit {
        i: usize,
        t: u64,
    },
    B(usize),
    M,
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Orbit { i, t } => write!(f, "A{i}*g^{t}"),
            Label::B(i) => write!(f, "B{i}"),
            Label::M => f.write_str("M"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Entry {
    pub label: Label,
    pub matrix: Matrix,
    pub space: Subspace,
}

/// The labeled `(n-1) x n` generator matrices and their row spaces.
#[derive(Clone, Debug)]
pub struct GeneratorSet {
    params: ConstructionParams,
    entries: Vec<Entry>,
    generators: Vec<Matrix>,
    block_form_checked: usize,
}

impl GeneratorSet {
    /// Materializes every `A_i g^t`, `B_i` and `M`, checking the block form
    /// of each product and the number of distinct row spaces.
    pub fn build(params: &ConstructionParams) -> Result<Self> {
        let f = params.field();
        let n = params.n();
        let mut entries = Vec::new();
        let mut generators = Vec::new();
        let mut block_form_checked = 0;
        for i in 1..params.s {
            let order = params.group_order(i)?;
            let p = build_p(params, i)?;
            let g = build_g_generator(params, i)?;
            let actual = g.order(params.order_cap)?;
            if actual != order {
                return Err(Error::TheoremViolated(format!(
                    "G_{i} has order {actual}, expected {order}"
                )));
            }
            let a = build_a(params, i)?;
            let mut g_pow = Matrix::identity(f, n);
            let mut x = Matrix::identity(f, params.block_degree(i));
            for t in 1..=order {
                g_pow = g_pow.mul(&g)?;
                x = x.mul(&p)?;
                let product = a.mul(&g_pow)?;
                if product != a_times_block(params, i, &x)? {
                    return Err(Error::TheoremViolated(format!(
                        "A_{i} g^{t} differs from its block form"
                    )));
                }
                block_form_checked += 1;
                entries.push(Entry::new(Label::Orbit { i, t }, product)?);
            }
            generators.push(g);
        }
        for i in 1..params.s {
            entries.push(Entry::new(Label::B(i), build_b(params, i)?)?);
        }
        entries.push(Entry::new(Label::M, build_m(params))?);

        let set = GeneratorSet {
            params: params.clone(),
            entries,
            generators,
            block_form_checked,
        };
        let found = set.distinct_spaces() as u64;
        let expected = params.cardinality();
        if found != expected {
            return Err(Error::CardinalityMismatch { expected, found });
        }
        Ok(set)
    }

    pub fn params(&self) -> &ConstructionParams {
        &self.params
    }

    pub fn entries(&self) -> &[Entry] {
        &self.entries
    }

    /// The generator of `G_i`.
    pub fn group_generator(&self, i: usize) -> &Matrix {
        &self.generators[i - 1]
    }

    /// Number of products whose block form was confirmed during the build.
    pub fn block_form_checked(&self) -> usize {
        self.block_form_checked
    }

    pub fn distinct_spaces(&self) -> usize {
        let mut spaces: Vec<&Subspace> = self.entries.iter().map(|e| &e.space).collect();
        spaces.sort();
        spaces.dedup();
        spaces.len()
    }

    pub fn find(&self, label: Label) -> Option<&Entry> {
        self.entries.iter().find(|e| e.label == label)
    }

    /// The flag code `{ (W^(t_1), ..., W^(t_r)) }` over all generators.
    pub fn flag_code(&self, ty: &TypeVector) -> Result<FlagCode> {
        if ty.n() != self.params.n() {
            return Err(Error::AmbientMismatch(self.params.n(), ty.n()));
        }
        let flags = self
            .entries
            .iter()
            .map(|e| Flag::from_matrix(&e.matrix, ty))
            .collect::<Result<Vec<_>>>()?;
        FlagCode::new(ty, flags)
    }

    pub fn full_flag_code(&self) -> Result<FlagCode> {
        self.flag_code(&TypeVector::full(self.params.n())?)
    }

    pub fn optimum_code(&self) -> Result<FlagCode> {
        self.flag_code(&self.params.optimum_type())
    }

    /// The code of type `ty` (default: the master type), which must be a
    /// subsequence of the master type.
    pub fn longer_type_code(&self, ty: Option<&TypeVector>) -> Result<FlagCode> {
        let master = self.params.master_type();
        let ty = ty.unwrap_or(&master);
        if !ty.is_subsequence_of(&master) {
            return Err(Error::NotASubsequence);
        }
        self.flag_code(ty)
    }
}

impl Entry {
    fn new(label: Label, matrix: Matrix) -> Result<Self> {
        let space = Subspace::from_matrix(&matrix)?;
        if space.dim() != matrix.nrows() {
            return Err(Error::TheoremViolated(format!("{label} is not of full row rank")));
        }
        Ok(Entry { label, matrix, space })
    }
}

/// Which flag code of the construction to build.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Full,
    Optimum,
    Longer,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Full => "full",
            Family::Optimum => "optimum",
            Family::Longer => "longer",
        }
    }

    /// The type of the family's code; `longer` accepts a custom subsequence.
    pub fn type_for(self, params: &ConstructionParams, custom: Option<&TypeVector>) -> Result<TypeVector> {
        match (self, custom) {
            (Family::Longer, Some(t)) => {
                if t.is_subsequence_of(&params.master_type()) {
                    Ok(t.clone())
                } else {
                    Err(Error::NotASubsequence)
                }
            }
            (_, Some(t)) => {
                let expected = self.type_for(params, None)?;
                if *t == expected {
                    Ok(expected)
                } else {
                    Err(Error::InvalidType(format!(
                        "the {} family has type {expected}",
                        self.name()
                    )))
                }
            }
            (Family::Full, None) => TypeVector::full(params.n()),
            (Family::Optimum, None) => Ok(params.optimum_type()),
            (Family::Longer, None) => Ok(params.master_type()),
        }
    }

    pub fn build(self, set: &GeneratorSet, custom: Option<&TypeVector>) -> Result<FlagCode> {
        set.flag_code(&self.type_for(set.params(), custom)?)
    }
}

impl std::str::FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "full" => Ok(Family::Full),
            "optimum" => Ok(Family::Optimum),
            "longer" => Ok(Family::Longer),
            other => Err(Error::Parse(format!("unknown family `{other}`"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(q: u64, k: usize, h: usize, s: usize) -> ConstructionParams {
        ConstructionParams::from_order(q, k, h, s).unwrap()
    }

    fn mat(f: &FieldSpec, rows: &[&[u32]]) -> Matrix {
        Matrix::from_rows(f, &rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn parameter_validation() {
        assert!(ConstructionParams::from_order(2, 2, 2, 2).is_err());
        assert!(ConstructionParams::from_order(2, 2, 0, 1).is_err());
        assert!(ConstructionParams::from_order(2, 0, 0, 2).is_err());
        assert!(ConstructionParams::from_order(6, 2, 0, 2).is_err());
        assert!(matches!(
            ConstructionParams::from_order(2, 5, 0, 6),
            Err(Error::OrderCapExceeded(_))
        ));
        assert_eq!(params(2, 2, 1, 4).n(), 9);
    }

    #[test]
    fn types() {
        assert_eq!(params(2, 2, 1, 3).optimum_type().to_string(), "1,2,5,6");
        assert_eq!(params(2, 2, 0, 3).optimum_type().to_string(), "1,2,4,5");
        assert_eq!(params(2, 2, 0, 2).optimum_type().to_string(), "1,2,3");
        assert_eq!(params(2, 2, 1, 3).master_type().to_string(), "1,2,3,5,6");
        assert_eq!(params(2, 2, 1, 4).master_type().to_string(), "1,2,3,5,7,8");
        assert_eq!(params(2, 2, 1, 5).master_type().to_string(), "1,2,3,5,7,9,10");
        assert_eq!(params(2, 3, 2, 2).master_type(), TypeVector::full(8).unwrap());
    }

    #[test]
    fn expected_distances() {
        let p = params(2, 2, 1, 3);
        assert_eq!(p.expected_distance(&p.master_type()), Some(16));
        assert_eq!(p.expected_distance(&p.optimum_type()), Some(12));
        assert_eq!(
            params(2, 2, 1, 5).expected_distance(&params(2, 2, 1, 5).master_type()),
            Some(24)
        );
        let p4 = params(2, 2, 1, 4);
        assert_eq!(p4.expected_distance(&p4.master_type()), Some(18));
        assert_eq!(p4.expected_projection_distance(5), Some(2));
        let p2 = params(2, 3, 2, 2);
        assert_eq!(p2.expected_distance(&TypeVector::full(8).unwrap()), Some(30));
        assert_eq!(
            params(2, 2, 1, 2).expected_distance(&TypeVector::full(5).unwrap()),
            Some(12)
        );
        assert_eq!(
            params(2, 2, 0, 2).expected_distance(&TypeVector::full(4).unwrap()),
            Some(8)
        );
        // the full type of an s = 3 code has levels without a claim
        assert_eq!(p.expected_distance(&TypeVector::full(7).unwrap()), None);
    }

    #[test]
    fn building_blocks() {
        let p = params(2, 2, 0, 2);
        let f = p.field().clone();
        assert_eq!(build_p(&p, 1).unwrap(), mat(&f, &[&[0, 1], &[1, 1]]));
        let p1 = params(2, 2, 1, 2);
        assert_eq!(build_p(&p1, 1).unwrap(), mat(&f, &[&[0, 1, 0], &[0, 0, 1], &[1, 1, 0]]));
        assert_eq!(
            build_b(&p1, 1).unwrap(),
            mat(
                &f,
                &[&[1, 0, 0, 0, 0], &[0, 1, 0, 0, 0], &[0, 0, 0, 0, 1], &[0, 0, 1, 0, 0]]
            )
        );
        assert_eq!(
            build_a(&p1, 1).unwrap(),
            mat(
                &f,
                &[&[1, 0, 1, 0, 0], &[0, 1, 0, 1, 0], &[0, 0, 0, 0, 1], &[0, 0, 1, 0, 0]]
            )
        );
        let m = build_m(&p1);
        for j in 1..5 {
            let prefix = Subspace::from_matrix(&m.slice(RowSlice::First(j)).unwrap()).unwrap();
            let unit: Vec<Vec<u32>> = (5 - j..5)
                .map(|c| (0..5).map(|x| u32::from(x == c)).collect())
                .collect();
            assert_eq!(
                prefix,
                Subspace::from_matrix(&Matrix::from_rows(&f, &unit).unwrap()).unwrap()
            );
        }
        let p3 = params(2, 2, 1, 3);
        let g = build_g_generator(&p3, 1).unwrap();
        assert_eq!((g.nrows(), g.order(DEFAULT_ORDER_CAP).unwrap()), (7, 7));
        assert_eq!(build_g_generator(&p3, 2).unwrap().order(DEFAULT_ORDER_CAP).unwrap(), 31);
        for i in 1..3 {
            assert_eq!(build_a(&p3, i).unwrap().nrows(), 6);
        }
        assert!(build_a(&p3, 3).is_err());
    }

    #[test]
    fn two_block_case_matches_general_builder() {
        for (k, h) in [(1, 0), (2, 0), (2, 1), (3, 1), (3, 2)] {
            let p = params(2, k, h, 2);
            let (a, b) = two_block_ab(p.field(), k, h);
            assert_eq!(build_a(&p, 1).unwrap(), a, "k={k} h={h}");
            assert_eq!(build_b(&p, 1).unwrap(), b, "k={k} h={h}");
        }
    }

    #[test]
    fn generator_set_sizes() {
        for (q, k, h, s, size) in [
            (2, 2, 0, 2, 5),
            (2, 2, 1, 2, 9),
            (2, 2, 1, 3, 41),
            (3, 1, 0, 2, 4),
            (3, 2, 1, 2, 28),
        ] {
            let set = GeneratorSet::build(&params(q, k, h, s)).unwrap();
            assert_eq!(set.entries().len(), size);
            assert_eq!(set.distinct_spaces(), size);
        }
    }

    #[test]
    fn families() {
        let p = params(2, 2, 1, 3);
        let set = GeneratorSet::build(&p).unwrap();
        let sub = TypeVector::parse(7, "2,5").unwrap();
        assert_eq!(Family::Longer.type_for(&p, Some(&sub)).unwrap(), sub);
        let bad = TypeVector::parse(7, "4").unwrap();
        assert_eq!(
            Family::Longer.type_for(&p, Some(&bad)).unwrap_err(),
            Error::NotASubsequence
        );
        assert!(Family::Optimum.type_for(&p, Some(&sub)).is_err());
        let longer = set.longer_type_code(None).unwrap();
        let restricted = longer.subsequence_code(&p.optimum_type()).unwrap();
        assert_eq!(restricted, set.optimum_code().unwrap());
        assert_eq!("longer".parse::<Family>().unwrap(), Family::Longer);
    }

    #[test]
    fn polynomial_choice() {
        let p = params(2, 2, 1, 3);
        assert_eq!(p.poly(1).unwrap().to_string(), "x^3+x+1 over GF(2)");
        let alt = p.clone().with_poly_rank(1);
        assert_eq!(alt.poly(1).unwrap().to_string(), "x^3+x^2+1 over GF(2)");
        // degree 2 has a single primitive polynomial over GF(2)
        assert_eq!(
            params(2, 2, 0, 2).with_poly_rank(1).poly(1).unwrap().to_string(),
            "x^2+x+1 over GF(2)"
        );
        let fixed = p
            .clone()
            .with_poly(Poly::parse("x^3+x^2+1 over GF(2)").unwrap())
            .unwrap();
        assert_eq!(fixed.poly(1).unwrap(), alt.poly(1).unwrap());
        assert!(p.clone().with_poly(Poly::parse("x^4+x+1 over GF(2)").unwrap()).is_err());
        assert!(p
            .with_poly(Poly::parse("x^5+x^4+x^3+x^2+x+1 over GF(2)").unwrap())
            .is_err());
    }
}
