//! Flags of a given type, flag codes, the flag distance, and the type-vector
//! bookkeeping used to classify codes by their distance deficit.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::{Arc, OnceLock};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::matgf::{next_content_line, Matrix};
use crate::subspace::{Subspace, SubspaceCode};

/// A strictly increasing sequence of dimensions in `[1, n-1]`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TypeVector {
    n: usize,
    dims: Vec<usize>,
}

/// The indices `a = max{i : 2t_i <= n}` and `b = min{i : 2t_i >= n}`, 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AbIndices {
    pub a: Option<usize>,
    pub b: Option<usize>,
}

impl TypeVector {
    pub fn new(n: usize, dims: Vec<usize>) -> Result<Self> {
        if dims.is_empty() {
            return Err(Error::InvalidType("empty".into()));
        }
        if dims.iter().any(|&t| t == 0 || t >= n) {
            return Err(Error::InvalidType(format!(
                "entries must lie in [1, {}]",
                n.saturating_sub(1)
            )));
        }
        if dims.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidType("entries must be strictly increasing".into()));
        }
        Ok(TypeVector { n, dims })
    }

    /// `(1, 2, ..., n-1)`.
    pub fn full(n: usize) -> Result<Self> {
        TypeVector::new(n, (1..n).collect())
    }

    /// Parses `1,2,3` (parentheses optional).
    pub fn parse(n: usize, text: &str) -> Result<Self> {
        let body = text.trim().trim_start_matches('(').trim_end_matches(')');
        let dims = body
            .split(',')
            .map(|s| {
                s.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad type entry `{s}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        TypeVector::new(n, dims)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn len(&self) -> usize {
        self.dims.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn is_full(&self) -> bool {
        self.dims.len() + 1 == self.n
    }

    pub fn contains(&self, t: usize) -> bool {
        self.dims.binary_search(&t).is_ok()
    }

    /// 0-based positions of `sub`'s entries inside `self`.
    pub fn positions_of(&self, sub: &TypeVector) -> Result<Vec<usize>> {
        if sub.n != self.n {
            return Err(Error::NotASubsequence);
        }
        sub.dims
            .iter()
            .map(|t| self.dims.binary_search(t).map_err(|_| Error::NotASubsequence))
            .collect()
    }

    pub fn is_subsequence_of(&self, other: &TypeVector) -> bool {
        other.positions_of(self).is_ok()
    }

    /// `D^{(t,n)} = 2 (sum_{t_i <= n/2} t_i + sum_{t_i > n/2} (n - t_i))`.
    pub fn max_distance(&self) -> u32 {
        self.dims.iter().map(|&t| max_subspace_distance(t, self.n)).sum()
    }

    pub fn ab_indices(&self) -> AbIndices {
        let a = self.dims.iter().rposition(|&t| 2 * t <= self.n).map(|i| i + 1);
        let b = self.dims.iter().position(|&t| 2 * t >= self.n).map(|i| i + 1);
        debug_assert!(a.is_some() || b.is_some());
        AbIndices { a, b }
    }

    /// Largest admissible deficit `ell` for [`TypeVector::split`]; 0 if none.
    pub fn max_split_ell(&self) -> usize {
        let r = self.len();
        match self.ab_indices() {
            AbIndices { a: Some(a), b: Some(b) } => (a - 1).min(r - b),
            AbIndices { a: Some(a), b: None } => a - 1,
            AbIndices { a: None, b: Some(b) } => r - b,
            AbIndices { a: None, b: None } => 0,
        }
    }

    /// Splits the type into the `2 ell` entries nearest the middle (`t'`) and
    /// the remainder (`t^`). When `a = b` the middle entry is counted once,
    /// so the two parts always partition the entries.
    pub fn split(&self, ell: usize) -> Result<(TypeVector, TypeVector)> {
        if ell == 0 || ell > self.max_split_ell() {
            return Err(Error::EllOutOfRange(ell));
        }
        let t = &self.dims;
        let r = t.len();
        // 0-based inclusive ranges of t' on each side of the middle
        let (lo, hi) = match self.ab_indices() {
            AbIndices { a: Some(a), b: Some(b) } => (a - ell, b + ell - 2),
            AbIndices { a: Some(a), b: None } => (a - ell, a - 1),
            AbIndices { a: None, b: Some(b) } => (b - 1, b + ell - 2),
            AbIndices { a: None, b: None } => unreachable!(),
        };
        debug_assert!(hi < r);
        let prime: Vec<usize> = t[lo..=hi].to_vec();
        let hat: Vec<usize> = t[..lo].iter().chain(&t[hi + 1..]).copied().collect();
        Ok((TypeVector::new(self.n, prime)?, TypeVector::new(self.n, hat)?))
    }

    /// `D(t) = D(t') + D(t^)` for the split at `ell`.
    pub fn distance_decomposition_check(&self, ell: usize) -> Result<bool> {
        let (prime, hat) = self.split(ell)?;
        Ok(self.max_distance() == prime.max_distance() + hat.max_distance())
    }

    /// True iff `k` is an entry and every entry is `<= k` or `>= n - k`.
    pub fn is_admissible(&self, k: usize) -> bool {
        self.contains(k) && self.dims.iter().all(|&t| t <= k || t + k >= self.n)
    }
}

/// `min(2d, 2(n - d))`, the largest subspace distance between `d`-spaces of GF(q)^n.
pub fn max_subspace_distance(d: usize, n: usize) -> u32 {
    2 * d.min(n - d) as u32
}

impl fmt::Display for TypeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.dims.iter().map(|t| t.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

impl fmt::Debug for TypeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self}; n={})", self.n)
    }
}

/// A strictly nested sequence of subspaces with prescribed dimensions.
#[derive(Clone)]
pub struct Flag {
    ty: TypeVector,
    parts: Vec<Subspace>,
    /// A matrix whose prefixes generate the parts, when the flag came from one.
    generator: Option<Matrix>,
}

impl Flag {
    /// `(rs(W^(t_1)), ..., rs(W^(t_r)))`.
    pub fn from_matrix(w: &Matrix, ty: &TypeVector) -> Result<Self> {
        if w.ncols() != ty.n() {
            return Err(Error::AmbientMismatch(ty.n(), w.ncols()));
        }
        let needed = *ty.dims().last().expect("nonempty type");
        if w.nrows() < needed {
            return Err(Error::TooFewRows {
                rows: w.nrows(),
                needed,
            });
        }
        let parts = ty
            .dims()
            .iter()
            .map(|&t| {
                let s = Subspace::from_matrix(&w.top_rows(t)).map_err(|_| Error::RankDeficientPrefix(t))?;
                if s.dim() == t {
                    Ok(s)
                } else {
                    Err(Error::RankDeficientPrefix(t))
                }
            })
            .collect::<Result<Vec<_>>>()?;
        let flag = Flag {
            ty: ty.clone(),
            parts,
            generator: Some(w.top_rows(needed)),
        };
        flag.check_nested()?;
        Ok(flag)
    }

    pub fn from_parts(ty: &TypeVector, parts: Vec<Subspace>) -> Result<Self> {
        if parts.len() != ty.len() {
            return Err(Error::InvalidType(format!(
                "{} parts for a type of length {}",
                parts.len(),
                ty.len()
            )));
        }
        for (p, &t) in parts.iter().zip(ty.dims()) {
            if p.ambient() != ty.n() {
                return Err(Error::AmbientMismatch(ty.n(), p.ambient()));
            }
            if p.dim() != t {
                return Err(Error::InvalidType(format!(
                    "part of dimension {} where the type has {t}",
                    p.dim()
                )));
            }
        }
        let flag = Flag {
            ty: ty.clone(),
            parts,
            generator: None,
        };
        flag.check_nested()?;
        Ok(flag)
    }

    fn check_nested(&self) -> Result<()> {
        for w in self.parts.windows(2) {
            if w[0].field() != w[1].field() {
                return Err(Error::FieldMismatch);
            }
            if w[1].stack_rank(&w[0]) != w[1].dim() {
                return Err(Error::NotNested);
            }
        }
        Ok(())
    }

    pub fn ty(&self) -> &TypeVector {
        &self.ty
    }

    pub fn parts(&self) -> &[Subspace] {
        &self.parts
    }

    pub fn field(&self) -> &FieldSpec {
        self.parts[0].field()
    }

    pub fn generator(&self) -> Option<&Matrix> {
        self.generator.as_ref()
    }

    /// The `i`-th component, 1-based.
    pub fn component(&self, i: usize) -> Result<&Subspace> {
        i.checked_sub(1)
            .and_then(|j| self.parts.get(j))
            .ok_or(Error::IndexOutOfRange(i))
    }

    /// `d_f(F, F') = sum_i d_S(F_i, F'_i)`.
    pub fn distance(&self, other: &Flag) -> Result<u32> {
        if self.ty != other.ty {
            return Err(Error::TypeMismatch);
        }
        if self.field() != other.field() {
            return Err(Error::FieldMismatch);
        }
        Ok(self
            .parts
            .iter()
            .zip(&other.parts)
            .map(|(a, b)| a.distance_unchecked(b))
            .sum())
    }

    /// `F^g = (F_1 g, ..., F_r g)` for an invertible `n x n` matrix `g`.
    pub fn act(&self, g: &Matrix) -> Result<Flag> {
        let parts = self.parts.iter().map(|p| p.act(g)).collect::<Result<Vec<_>>>()?;
        let generator = self.generator.as_ref().map(|w| w.mul(g)).transpose()?;
        Ok(Flag {
            ty: self.ty.clone(),
            parts,
            generator,
        })
    }

    /// The components at the positions of `sub` inside this flag's type.
    pub fn restrict(&self, sub: &TypeVector) -> Result<Flag> {
        let pos = self.ty.positions_of(sub)?;
        let needed = *sub.dims().last().expect("nonempty type");
        Ok(Flag {
            ty: sub.clone(),
            parts: pos.iter().map(|&p| self.parts[p].clone()).collect(),
            generator: self.generator.as_ref().map(|g| g.top_rows(needed)),
        })
    }

    /// `type t_1,...,t_r` followed by the generating matrix if known, else
    /// each component's canonical matrix.
    pub fn to_text(&self) -> String {
        let mut s = format!("type {}\n", self.ty);
        match &self.generator {
            Some(g) => s.push_str(&g.to_text()),
            None => {
                for p in &self.parts {
                    s.push_str(&p.canon().to_text());
                }
            }
        }
        s
    }

    pub fn read_text<'a, I: Iterator<Item = &'a str>>(lines: &mut I) -> Result<Flag> {
        let line = next_content_line(lines).ok_or_else(|| Error::Parse("missing type line".into()))?;
        let dims_text = line
            .strip_prefix("type")
            .ok_or_else(|| Error::Parse(format!("expected `type ...`, found `{line}`")))?;
        let first = Matrix::read_text(lines)?;
        let ty = TypeVector::parse(first.ncols(), dims_text)?;
        let last = *ty.dims().last().expect("nonempty type");
        if first.nrows() == last {
            return Flag::from_matrix(&first, &ty);
        }
        let mut parts = vec![Subspace::from_matrix(&first)?];
        for _ in 1..ty.len() {
            parts.push(Subspace::from_matrix(&Matrix::read_text(lines)?)?);
        }
        Flag::from_parts(&ty, parts)
    }

    pub fn from_text(text: &str) -> Result<Flag> {
        Flag::read_text(&mut text.lines())
    }
}

impl PartialEq for Flag {
    fn eq(&self, other: &Self) -> bool {
        self.ty == other.ty && self.parts == other.parts
    }
}

impl Eq for Flag {}

impl PartialOrd for Flag {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Flag {
    fn cmp(&self, other: &Self) -> Ordering {
        (&self.ty, &self.parts).cmp(&(&other.ty, &other.parts))
    }
}

impl fmt::Debug for Flag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.parts).finish()
    }
}

/// Per-pair, per-component subspace distances of a flag code.
#[derive(Debug)]
pub struct PairTable {
    flags: usize,
    width: usize,
    dists: Vec<u16>,
}

impl PairTable {
    fn build(flags: &[Flag]) -> Self {
        let width = flags.first().map_or(0, |f| f.parts.len());
        let rows: Vec<Vec<u16>> = (0..flags.len())
            .into_par_iter()
            .map(|i| {
                let mut row = Vec::with_capacity((flags.len() - i - 1) * width);
                for other in &flags[i + 1..] {
                    for (a, b) in flags[i].parts.iter().zip(&other.parts) {
                        row.push(a.distance_unchecked(b) as u16);
                    }
                }
                row
            })
            .collect();
        PairTable {
            flags: flags.len(),
            width,
            dists: rows.concat(),
        }
    }

    pub fn pair_count(&self) -> usize {
        self.flags * self.flags.saturating_sub(1) / 2
    }

    pub fn pairs(&self) -> impl Iterator<Item = &[u16]> {
        self.dists.chunks_exact(self.width.max(1)).take(self.pair_count())
    }

    /// `(i, j)` indices in pair order.
    pub fn pair_indices(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.flags).flat_map(move |i| (i + 1..self.flags).map(move |j| (i, j)))
    }

    /// Minimum of the summed distance over the selected components, ignoring
    /// pairs that agree on all of them; `None` if every pair agrees.
    pub fn min_over(&self, components: &[usize]) -> Option<u32> {
        self.pairs()
            .map(|p| components.iter().map(|&c| u32::from(p[c])).sum::<u32>())
            .filter(|&d| d > 0)
            .min()
    }

    /// Minimum of the summed distance over the selected components across all
    /// pairs, so pairs that agree there count as 0; `None` without pairs.
    pub fn pair_min(&self, components: &[usize]) -> Option<u32> {
        self.pairs()
            .map(|p| components.iter().map(|&c| u32::from(p[c])).sum::<u32>())
            .min()
    }

    /// True iff no pair agrees on all selected components.
    pub fn separates(&self, components: &[usize]) -> bool {
        self.pairs().all(|p| components.iter().any(|&c| p[c] > 0))
    }

    pub fn spectrum(&self) -> BTreeMap<u32, u64> {
        self.pairs().fold(BTreeMap::new(), |mut h, p| {
            *h.entry(p.iter().map(|&d| u32::from(d)).sum()).or_insert(0) += 1;
            h
        })
    }
}

/// Optimum, quasi-optimum, or a larger even deficit below `D^{(t,n)}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Label {
    Optimum,
    QuasiOptimum,
    General(u32),
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Optimum => f.write_str("optimum"),
            Label::QuasiOptimum => f.write_str("quasi-optimum"),
            Label::General(ell) => write!(f, "general({ell})"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Classification {
    pub min_distance: u32,
    pub max_distance: u32,
    /// `ell` with `d_f = D - 2 ell`.
    pub deficit: u32,
    pub label: Label,
}

/// A set of flags sharing one type, in canonical order.
#[derive(Clone)]
pub struct FlagCode {
    ty: TypeVector,
    flags: Vec<Flag>,
    table: OnceLock<Arc<PairTable>>,
}

impl FlagCode {
    pub fn new<I: IntoIterator<Item = Flag>>(ty: &TypeVector, flags: I) -> Result<Self> {
        let mut flags: Vec<Flag> = flags.into_iter().collect();
        if flags.is_empty() {
            return Err(Error::TooFewFlags);
        }
        let field = flags[0].field().clone();
        for f in &flags {
            if f.ty != *ty {
                return Err(Error::TypeMismatch);
            }
            if *f.field() != field {
                return Err(Error::FieldMismatch);
            }
        }
        flags.sort();
        flags.dedup();
        Ok(FlagCode {
            ty: ty.clone(),
            flags,
            table: OnceLock::new(),
        })
    }

    pub fn ty(&self) -> &TypeVector {
        &self.ty
    }

    pub fn flags(&self) -> &[Flag] {
        &self.flags
    }

    pub fn len(&self) -> usize {
        self.flags.len()
    }

    pub fn is_empty(&self) -> bool {
        self.flags.is_empty()
    }

    pub fn field(&self) -> &FieldSpec {
        self.flags[0].field()
    }

    /// The pairwise distance table, computed on first use.
    pub fn table(&self) -> &PairTable {
        self.table.get_or_init(|| Arc::new(PairTable::build(&self.flags)))
    }

    fn all_components(&self) -> Vec<usize> {
        (0..self.ty.len()).collect()
    }

    pub fn min_distance(&self) -> Result<u32> {
        if self.len() < 2 {
            return Err(Error::TooFewFlags);
        }
        Ok(self.table().min_over(&self.all_components()).expect("distinct flags"))
    }

    /// Histogram of pairwise flag distances; empty for a single flag.
    pub fn spectrum(&self) -> BTreeMap<u32, u64> {
        if self.len() < 2 {
            return BTreeMap::new();
        }
        self.table().spectrum()
    }

    /// `C_i`, the set of `i`-th components (1-based).
    pub fn projected_code(&self, i: usize) -> Result<SubspaceCode> {
        if i == 0 || i > self.ty.len() {
            return Err(Error::IndexOutOfRange(i));
        }
        SubspaceCode::from_words(
            self.field(),
            self.ty.n(),
            self.flags.iter().map(|f| f.parts[i - 1].clone()),
        )
    }

    /// `|C_i|` for every component, 1-based order.
    pub fn projected_sizes(&self) -> Vec<usize> {
        (1..=self.ty.len())
            .map(|i| self.projected_code(i).expect("index in range").len())
            .collect()
    }

    /// `d_S(C_i)`, or `None` when the projected code has a single word.
    pub fn projected_min_distance(&self, i: usize) -> Result<Option<u32>> {
        if i == 0 || i > self.ty.len() {
            return Err(Error::IndexOutOfRange(i));
        }
        if self.len() < 2 {
            return Ok(None);
        }
        Ok(self.table().min_over(&[i - 1]))
    }

    /// True iff `|C_i| = |C|` for the given component (1-based).
    pub fn component_injective(&self, i: usize) -> Result<bool> {
        if i == 0 || i > self.ty.len() {
            return Err(Error::IndexOutOfRange(i));
        }
        Ok(self.len() < 2 || self.table().separates(&[i - 1]))
    }

    pub fn is_cardinality_consistent(&self) -> bool {
        (1..=self.ty.len()).all(|i| self.component_injective(i).expect("index in range"))
    }

    /// True iff `C_i` is injective and attains `min(2t_i, 2(n - t_i))`.
    pub fn projection_is_optimal(&self, i: usize) -> Result<bool> {
        let t = self.ty.dims()[i
            .checked_sub(1)
            .filter(|&j| j < self.ty.len())
            .ok_or(Error::IndexOutOfRange(i))?];
        Ok(self.component_injective(i)?
            && self.projected_min_distance(i)? == Some(max_subspace_distance(t, self.ty.n())))
    }

    pub fn classify(&self) -> Result<Classification> {
        let d = self.min_distance()?;
        let max = self.ty.max_distance();
        if d > max {
            return Err(Error::TheoremViolated(format!(
                "flag distance {d} exceeds the maximum {max}"
            )));
        }
        let gap = max - d;
        if gap % 2 == 1 {
            return Err(Error::TheoremViolated(format!("odd distance deficit {gap}")));
        }
        let ell = gap / 2;
        let label = match ell {
            0 => Label::Optimum,
            1 => Label::QuasiOptimum,
            l => Label::General(l),
        };
        Ok(Classification {
            min_distance: d,
            max_distance: max,
            deficit: ell,
            label,
        })
    }

    /// Optimality decided from the projected codes at `a` and `b` alone; an
    /// error is raised if this disagrees with [`FlagCode::classify`].
    pub fn optimum_check_ab(&self) -> Result<bool> {
        let optimum = self.classify()?.label == Label::Optimum;
        let AbIndices { a, b } = self.ty.ab_indices();
        let mut verdict = true;
        for i in [a, b].into_iter().flatten() {
            verdict &= self.projection_is_optimal(i)?;
        }
        if verdict != optimum {
            return Err(Error::TheoremViolated(format!(
                "projections at a/b give {verdict}, full distance gives {optimum}"
            )));
        }
        Ok(verdict)
    }

    /// Optimality decided from cardinality-consistency and every projected
    /// code; returns `(from projections, from classify)`.
    pub fn projection_characterization(&self) -> Result<(bool, bool)> {
        let optimum = self.classify()?.label == Label::Optimum;
        let mut all = true;
        for i in 1..=self.ty.len() {
            all &= self.projection_is_optimal(i)?;
        }
        Ok((all, optimum))
    }

    /// `C_{t'}`: every flag restricted to `sub`, duplicates merged.
    pub fn subsequence_code(&self, sub: &TypeVector) -> Result<FlagCode> {
        let flags = self.flags.iter().map(|f| f.restrict(sub)).collect::<Result<Vec<_>>>()?;
        FlagCode::new(sub, flags)
    }

    /// Minimum distance of `C_{t'}` and whether restriction kept all flags
    /// distinct, read off the pairwise table.
    pub fn restricted_stats(&self, sub: &TypeVector) -> Result<(Option<u32>, bool)> {
        let pos = self.ty.positions_of(sub)?;
        if self.len() < 2 {
            return Ok((None, true));
        }
        let table = self.table();
        Ok((table.min_over(&pos), table.separates(&pos)))
    }

    /// Both sides of the deficit-`ell` decomposition equivalence:
    /// `d_f(C) = D - 2 ell` against (`C_{t'}` at `D(t') - 2 ell` and `C_{t^}`
    /// optimum). Both restrictions are measured over pairs of flags of `C`,
    /// so flags merged by a restriction count as distance 0.
    pub fn decomposition_equivalence(&self, ell: usize) -> Result<(bool, bool)> {
        let (prime, hat) = self.ty.split(ell)?;
        let lhs = self.min_distance()? + 2 * ell as u32 == self.ty.max_distance();
        let table = self.table();
        let d_prime = table.pair_min(&self.ty.positions_of(&prime)?);
        let d_hat = table.pair_min(&self.ty.positions_of(&hat)?);
        let rhs =
            d_prime.map(|d| d + 2 * ell as u32) == Some(prime.max_distance()) && d_hat == Some(hat.max_distance());
        Ok((lhs, rhs))
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("{} {} {}\n", self.ty.n(), self.field().q(), self.len());
        for f in &self.flags {
            s.push_str(&f.to_text());
        }
        s
    }

    /// Parses a code written by [`FlagCode::to_text`].
    pub fn from_text(text: &str) -> Result<Self> {
        let mut lines = text.lines();
        let header = next_content_line(&mut lines).ok_or_else(|| Error::Parse("empty code file".into()))?;
        let parts: Vec<&str> = header.split_whitespace().collect();
        if parts.len() != 3 {
            return Err(Error::Parse(format!("bad code header `{header}`")));
        }
        let num = |s: &str| s.parse::<u64>().map_err(|_| Error::Parse(format!("bad number `{s}`")));
        let n = num(parts[0])? as usize;
        let q = num(parts[1])?;
        let count = num(parts[2])? as usize;
        if count == 0 {
            return Err(Error::TooFewFlags);
        }
        let mut flags = Vec::with_capacity(count);
        for _ in 0..count {
            let f = Flag::read_text(&mut lines)?;
            if f.ty.n() != n {
                return Err(Error::AmbientMismatch(n, f.ty.n()));
            }
            if u64::from(f.field().q()) != q {
                return Err(Error::FieldMismatch);
            }
            flags.push(f);
        }
        if let Some(extra) = next_content_line(&mut lines) {
            return Err(Error::Parse(format!("trailing content `{extra}`")));
        }
        let ty = flags[0].ty.clone();
        let code = FlagCode::new(&ty, flags)?;
        if code.len() != count {
            return Err(Error::Parse(format!(
                "header declares {count} flags, found {} distinct",
                code.len()
            )));
        }
        Ok(code)
    }
}

impl PartialEq for FlagCode {
    fn eq(&self, other: &Self) -> bool {
        self.ty == other.ty && self.flags == other.flags
    }
}

impl Eq for FlagCode {}

impl fmt::Debug for FlagCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FlagCode")
            .field("type", &self.ty)
            .field("len", &self.flags.len())
            .finish()
    }
}

/// Given a code with `d_f = D - 2 ell` and `1 <= ell <= min(a-1, r-b)`, the
/// first `a` projected codes are injective. `None` when the premise fails.
pub fn leading_projections_injective(code: &FlagCode) -> Result<Option<bool>> {
    let AbIndices { a, b } = code.ty().ab_indices();
    let (Some(a), Some(b)) = (a, b) else { return Ok(None) };
    let ell = code.classify()?.deficit as usize;
    if ell == 0 || ell > (a - 1).min(code.ty().len() - b) {
        return Ok(None);
    }
    for i in 1..=a {
        if !code.component_injective(i)? {
            return Ok(Some(false));
        }
    }
    Ok(Some(true))
}

/// Given a full-type code with `d_f = D - 2 ell` and
/// `1 <= ell <= min(a-1, n-1-b)`, the code is cardinality-consistent.
/// `None` when the premise fails.
pub fn full_type_deficit_implies_consistency(code: &FlagCode) -> Result<Option<bool>> {
    if !code.ty().is_full() {
        return Ok(None);
    }
    leading_projections_injective(code).map(|o| o.map(|_| code.is_cardinality_consistent()))
}
