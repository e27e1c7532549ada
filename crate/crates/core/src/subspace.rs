//! Subspaces of GF(q)^n, the subspace distance, constant dimension codes,
//! and cyclic orbit codes.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::matgf::{next_content_line, Matrix};

/// A subspace of GF(q)^n, stored by its unique reduced row-echelon generator.
#[derive(Clone)]
pub struct Subspace {
    canon: Matrix,
    /// Row bitmasks (bit j = column j) when q = 2 and n <= 128.
    bits: Option<Box<[u128]>>,
}

impl Subspace {
    /// Row space of `a`.
    pub fn from_matrix(a: &Matrix) -> Result<Self> {
        let (mut r, rank) = a.rref();
        if rank == 0 {
            return Err(Error::ZeroRank);
        }
        if rank < r.nrows() {
            r = r.top_rows(rank);
        }
        Ok(Self::from_canonical(r))
    }

    fn from_canonical(canon: Matrix) -> Self {
        let bits = (canon.field().q() == 2 && canon.ncols() <= 128).then(|| {
            canon
                .rows()
                .map(|row| {
                    row.iter()
                        .enumerate()
                        .fold(0u128, |acc, (j, &v)| acc | (u128::from(v) << j))
                })
                .collect()
        });
        Subspace { canon, bits }
    }

    pub fn ambient(&self) -> usize {
        self.canon.ncols()
    }

    pub fn dim(&self) -> usize {
        self.canon.nrows()
    }

    pub fn field(&self) -> &FieldSpec {
        self.canon.field()
    }

    /// The canonical (RREF) generator matrix.
    pub fn canon(&self) -> &Matrix {
        &self.canon
    }

    fn compatible(&self, other: &Subspace) -> Result<()> {
        if self.ambient() != other.ambient() {
            return Err(Error::AmbientMismatch(self.ambient(), other.ambient()));
        }
        if self.field() != other.field() {
            return Err(Error::FieldMismatch);
        }
        Ok(())
    }

    /// `dim(self + other)`, the rank of the stacked generators.
    pub fn sum_dim(&self, other: &Subspace) -> Result<usize> {
        self.compatible(other)?;
        Ok(self.stack_rank(other))
    }

    pub(crate) fn stack_rank(&self, other: &Subspace) -> usize {
        match (&self.bits, &other.bits) {
            (Some(a), Some(b)) => stack_rank_gf2(a, b),
            _ => {
                let stacked = Matrix::vstack(&[&self.canon, &other.canon]).expect("compatible shapes");
                stacked.rank()
            }
        }
    }

    pub fn intersection_dim(&self, other: &Subspace) -> Result<usize> {
        Ok(self.dim() + other.dim() - self.sum_dim(other)?)
    }

    /// Subspace distance `dim(U+V) - dim(U∩V) = 2 dim(U+V) - dim U - dim V`.
    pub fn distance(&self, other: &Subspace) -> Result<u32> {
        self.compatible(other)?;
        Ok(self.distance_unchecked(other))
    }

    #[inline]
    pub(crate) fn distance_unchecked(&self, other: &Subspace) -> u32 {
        if self == other {
            return 0;
        }
        (2 * self.stack_rank(other) - self.dim() - other.dim()) as u32
    }

    /// True iff `other` is a subspace of `self`.
    pub fn contains(&self, other: &Subspace) -> Result<bool> {
        Ok(self.sum_dim(other)? == self.dim())
    }

    /// `rs(U g)` for an invertible `n x n` matrix `g`.
    pub fn act(&self, g: &Matrix) -> Result<Subspace> {
        if g.nrows() != self.ambient() || g.ncols() != self.ambient() {
            return Err(Error::AmbientMismatch(self.ambient(), g.nrows()));
        }
        Subspace::from_matrix(&self.canon.mul(g)?)
    }
}

/// Rank of `[a; b]` where `a` is in RREF (bit j = column j).
fn stack_rank_gf2(a: &[u128], b: &[u128]) -> usize {
    let mut residual: [u128; 128] = [0; 128];
    let mut count = 0;
    for &v in b {
        let mut v = v;
        for &u in a {
            if v >> u.trailing_zeros() & 1 == 1 {
                v ^= u;
            }
        }
        if v != 0 {
            residual[count] = v;
            count += 1;
        }
    }
    let rows = &mut residual[..count];
    let mut rank = 0;
    for i in 0..rows.len() {
        let Some(pos) = (i..rows.len()).find(|&r| rows[r] != 0) else {
            break;
        };
        rows.swap(i, pos);
        let pivot = rows[i];
        let bit = pivot & pivot.wrapping_neg();
        for row in &mut rows[i + 1..] {
            if *row & bit != 0 {
                *row ^= pivot;
            }
        }
        rank += 1;
    }
    a.len() + rank
}

impl PartialEq for Subspace {
    fn eq(&self, other: &Self) -> bool {
        self.canon == other.canon
    }
}

impl Eq for Subspace {}

impl std::hash::Hash for Subspace {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.canon.hash(state);
    }
}

impl PartialOrd for Subspace {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Orders by canonical generator (dimension, then entries); codes never mix fields.
impl Ord for Subspace {
    fn cmp(&self, other: &Self) -> Ordering {
        self.canon.cmp(&other.canon)
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "rs{:?}", self.canon.rows().collect::<Vec<_>>())
    }
}

/// A set of subspaces of a common ambient space, kept in canonical order.
#[derive(Clone, PartialEq, Eq)]
pub struct SubspaceCode {
    field: FieldSpec,
    ambient: usize,
    words: BTreeSet<Subspace>,
}

impl SubspaceCode {
    pub fn new(field: &FieldSpec, ambient: usize) -> Self {
        SubspaceCode {
            field: field.clone(),
            ambient,
            words: BTreeSet::new(),
        }
    }

    pub fn from_words<I: IntoIterator<Item = Subspace>>(field: &FieldSpec, ambient: usize, words: I) -> Result<Self> {
        let mut code = Self::new(field, ambient);
        for w in words {
            code.insert(w)?;
        }
        Ok(code)
    }

    /// Inserts a word; returns false if it was already present.
    pub fn insert(&mut self, w: Subspace) -> Result<bool> {
        if w.ambient() != self.ambient {
            return Err(Error::AmbientMismatch(self.ambient, w.ambient()));
        }
        if *w.field() != self.field {
            return Err(Error::FieldMismatch);
        }
        Ok(self.words.insert(w))
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn contains(&self, w: &Subspace) -> bool {
        self.words.contains(w)
    }

    pub fn words(&self) -> impl Iterator<Item = &Subspace> {
        self.words.iter()
    }

    /// The common dimension, if every word has the same one.
    pub fn constant_dim(&self) -> Option<usize> {
        let mut dims = self.words.iter().map(Subspace::dim);
        let first = dims.next()?;
        dims.all(|d| d == first).then_some(first)
    }

    fn pairwise<T, F, R>(&self, identity: T, map: F, reduce: R) -> T
    where
        T: Send + Sync + Clone,
        F: Fn(T, &Subspace, &Subspace) -> T + Sync + Send,
        R: Fn(T, T) -> T + Sync + Send,
    {
        let words: Vec<&Subspace> = self.words.iter().collect();
        (0..words.len())
            .into_par_iter()
            .fold(
                || identity.clone(),
                |mut acc, i| {
                    for j in i + 1..words.len() {
                        acc = map(acc, words[i], words[j]);
                    }
                    acc
                },
            )
            .reduce(|| identity.clone(), reduce)
    }

    /// Minimum subspace distance over unordered pairs of distinct words.
    pub fn min_distance(&self) -> Result<u32> {
        if self.len() < 2 {
            return Err(Error::TooFewWords);
        }
        Ok(self.pairwise(u32::MAX, |m, a, b| m.min(a.distance_unchecked(b)), u32::min))
    }

    /// Histogram of pairwise distances.
    pub fn distance_spectrum(&self) -> BTreeMap<u32, u64> {
        self.pairwise(
            BTreeMap::new(),
            |mut h, a, b| {
                *h.entry(a.distance_unchecked(b)).or_insert(0) += 1;
                h
            },
            merge_histograms,
        )
    }

    /// True iff every pair of distinct words meets in exactly `c` dimensions.
    pub fn is_equidistant(&self, c: usize) -> Result<bool> {
        let k = self.constant_dim().ok_or(Error::NotConstantDim)?;
        if c > k {
            return Ok(false);
        }
        let target = 2 * (k - c) as u32;
        Ok(self.pairwise(true, |ok, a, b| ok && a.distance_unchecked(b) == target, |x, y| x && y))
    }

    /// Pairwise trivially intersecting constant dimension code.
    pub fn is_partial_spread(&self) -> Result<bool> {
        self.is_equidistant(0)
    }

    /// Text form: header `n k q |C|` (k is `*` for mixed dimensions), then
    /// one canonical matrix per word.
    pub fn to_text(&self) -> String {
        let k = self.constant_dim().map_or_else(|| "*".to_string(), |k| k.to_string());
        let mut s = format!("{} {} {} {}\n", self.ambient, k, self.field.q(), self.len());
        for w in &self.words {
            s.push_str(&w.canon.to_text());
        }
        s
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let mut lines = text.lines();
        let header = next_content_line(&mut lines).ok_or_else(|| Error::Parse("empty code file".into()))?;
        let parts: Vec<&str> = header.split_whitespace().collect();
        if parts.len() != 4 {
            return Err(Error::Parse(format!("bad code header `{header}`")));
        }
        let num = |s: &str| s.parse::<u64>().map_err(|_| Error::Parse(format!("bad number `{s}`")));
        let n = num(parts[0])? as usize;
        let field = FieldSpec::from_order(num(parts[2])?)?;
        let count = num(parts[3])? as usize;
        let mut code = SubspaceCode::new(&field, n);
        for _ in 0..count {
            let m = Matrix::read_text(&mut lines)?;
            if *m.field() != field {
                return Err(Error::FieldMismatch);
            }
            code.insert(Subspace::from_matrix(&m)?)?;
        }
        if code.len() != count {
            return Err(Error::Parse(format!(
                "header declares {count} words, found {} distinct",
                code.len()
            )));
        }
        if parts[1] != "*" && code.constant_dim() != Some(num(parts[1])? as usize) {
            return Err(Error::NotConstantDim);
        }
        Ok(code)
    }
}

impl fmt::Debug for SubspaceCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.words.iter()).finish()
    }
}

pub(crate) fn merge_histograms(mut a: BTreeMap<u32, u64>, b: BTreeMap<u32, u64>) -> BTreeMap<u32, u64> {
    for (k, v) in b {
        *a.entry(k).or_insert(0) += v;
    }
    a
}

/// Evaluates `(q^n - q^{k+h}) / (q^k - 1) + 1` with `h = n mod k`, without
/// checking when it is the maximum partial spread size.
pub fn partial_spread_formula(q: u64, k: usize, n: usize) -> Result<u128> {
    if k == 0 || n < k || q < 2 {
        return Err(Error::InvalidParams(format!("q={q}, k={k}, n={n}")));
    }
    let h = n % k;
    let pow = |e: usize| {
        (q as u128)
            .checked_pow(e as u32)
            .ok_or_else(|| Error::InvalidParams("overflow".into()))
    };
    Ok((pow(n)? - pow(k + h)?) / (pow(k)? - 1) + 1)
}

/// Largest size of a partial k-spread of GF(q)^n, available when
/// `k > (q^h - 1)/(q - 1)` with `h = n mod k`.
pub fn max_partial_spread_size(q: u64, k: usize, n: usize) -> Result<u128> {
    let value = partial_spread_formula(q, k, n)?;
    let h = n % k;
    let threshold = ((q as u128).pow(h as u32) - 1) / (q as u128 - 1);
    if (k as u128) <= threshold {
        return Err(Error::HypothesisUnmet(format!(
            "k = {k} <= (q^h - 1)/(q - 1) = {threshold}"
        )));
    }
    Ok(value)
}

/// The cyclic group generated by an invertible matrix, enumerated lazily as
/// `g^1, g^2, ..., g^order = I`.
#[derive(Clone, Debug)]
pub struct CyclicGroup {
    generator: Matrix,
    order: u64,
}

impl CyclicGroup {
    pub fn new(generator: Matrix, order_cap: u64) -> Result<Self> {
        let order = generator.order(order_cap)?;
        Ok(CyclicGroup { generator, order })
    }

    pub fn generator(&self) -> &Matrix {
        &self.generator
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    /// `U^{g^1}, U^{g^2}, ..., U^{g^order}` in sequence.
    pub fn orbit_sequence<'a>(&'a self, u: &Subspace) -> Result<impl Iterator<Item = Subspace> + 'a> {
        if u.ambient() != self.generator.nrows() {
            return Err(Error::AmbientMismatch(u.ambient(), self.generator.nrows()));
        }
        let mut current = u.clone();
        Ok((0..self.order).map(move |_| {
            current = current.act(&self.generator).expect("shapes checked");
            current.clone()
        }))
    }
}

/// `Orb_G(U) = { rs(U g) : g in G }`.
pub fn orbit_code(u: &Subspace, group: &CyclicGroup) -> Result<SubspaceCode> {
    SubspaceCode::from_words(u.field(), u.ambient(), group.orbit_sequence(u)?)
}

/// `|{ g in G : U^g = U }|`.
pub fn stabilizer_order(u: &Subspace, group: &CyclicGroup) -> Result<u64> {
    Ok(group.orbit_sequence(u)?.filter(|w| w == u).count() as u64)
}
