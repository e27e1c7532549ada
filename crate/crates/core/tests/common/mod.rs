//! Brute-force oracles shared by the property and acceptance tests. Nothing
//! here uses the library's rank or echelon code: subspaces of GF(2)^n are
//! enumerated as explicit sets of vectors.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet};

use flagcode::{FieldSpec, Matrix, Poly, Subspace, TypeVector};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub fn gf(q: u64) -> FieldSpec {
    FieldSpec::from_order(q).unwrap()
}

/// Membership bitmask of the vector set spanned by `mask` together with `v`.
fn extend_span(mask: u64, v: u32) -> u64 {
    let mut out = mask;
    for u in 0..64u32 {
        if mask >> u & 1 == 1 {
            out |= 1 << (u ^ v);
        }
    }
    out
}

/// Every subspace of GF(2)^n (n <= 6), as a membership bitmask over the
/// 2^n vectors paired with the library object built from a greedy basis.
pub fn all_subspaces_gf2(n: usize) -> Vec<(u64, Subspace)> {
    assert!(n <= 6);
    let f = gf(2);
    let mut seen: HashSet<u64> = HashSet::from([1]);
    let mut frontier = vec![1u64];
    while let Some(mask) = frontier.pop() {
        for v in 1..1u32 << n {
            if mask >> v & 1 == 0 {
                let next = extend_span(mask, v);
                if seen.insert(next) {
                    frontier.push(next);
                }
            }
        }
    }
    let mut out = Vec::new();
    for mask in seen.into_iter().filter(|&m| m != 1) {
        let mut basis = Vec::new();
        let mut span = 1u64;
        for v in 1..1u32 << n {
            if mask >> v & 1 == 1 && span >> v & 1 == 0 {
                span = extend_span(span, v);
                basis.push((0..n).map(|c| v >> (n - 1 - c) & 1).collect::<Vec<u32>>());
            }
        }
        out.push((
            mask,
            Subspace::from_matrix(&Matrix::from_rows(&f, &basis).unwrap()).unwrap(),
        ));
    }
    out.sort_by_key(|(m, _)| *m);
    out
}

fn dim_of(mask: u64) -> u32 {
    mask.count_ones().trailing_zeros()
}

/// Symmetry, identity of indiscernibles and the triangle inequality over all
/// nonzero subspaces of GF(2)^4. Returns the number of triples checked.
pub fn metric_axioms_gf2_4() -> Result<usize, String> {
    let spaces = all_subspaces_gf2(4);
    if spaces.len() != 66 {
        return Err(format!(
            "expected 66 nonzero subspaces of GF(2)^4, found {}",
            spaces.len()
        ));
    }
    let n = spaces.len();
    let mut d = vec![0u32; n * n];
    for i in 0..n {
        for j in 0..n {
            d[i * n + j] = spaces[i].1.distance(&spaces[j].1).unwrap();
        }
    }
    for i in 0..n {
        for j in 0..n {
            if d[i * n + j] != d[j * n + i] {
                return Err(format!("asymmetric at {i},{j}"));
            }
            if (d[i * n + j] == 0) != (i == j) {
                return Err(format!("identity of indiscernibles fails at {i},{j}"));
            }
            for k in 0..n {
                if d[i * n + k] > d[i * n + j] + d[j * n + k] {
                    return Err(format!("triangle inequality fails at {i},{j},{k}"));
                }
            }
        }
    }
    Ok(n * n * n)
}

/// Intersection dimensions from vector enumeration against the library's
/// rank formula, and distance against `dim U + dim V - 2 dim(U ∩ V)`, for
/// every pair of nonzero subspaces of GF(2)^n.
pub fn intersection_oracle(n: usize) -> Result<usize, String> {
    let spaces = all_subspaces_gf2(n);
    for (mu, u) in &spaces {
        for (mv, v) in &spaces {
            let inter = dim_of(mu & mv) as usize;
            if u.intersection_dim(v).unwrap() != inter {
                return Err(format!("intersection dimension differs in GF(2)^{n}"));
            }
            let expected = (dim_of(*mu) + dim_of(*mv)) as usize - 2 * inter;
            if u.distance(v).unwrap() as usize != expected {
                return Err(format!("distance differs in GF(2)^{n}"));
            }
        }
    }
    Ok(spaces.len() * spaces.len())
}

/// `(q, k)` pairs with `q^k <= 2^10` used for the companion-matrix checks.
pub fn companion_cases() -> Vec<(u64, usize)> {
    let mut out = Vec::new();
    for q in [2u64, 3, 4, 5, 7, 8, 9, 11, 13, 16, 31, 32] {
        let mut k = 1;
        while q.pow(k as u32) <= 1024 {
            out.push((q, k));
            k += 1;
        }
    }
    out
}

fn unit_row(k: usize, j: usize) -> Vec<u32> {
    (0..k).map(|c| u32::from(c == j)).collect()
}

fn row_times(f: &FieldSpec, row: &[u32], m: &Matrix) -> Vec<u32> {
    (0..m.ncols())
        .map(|c| {
            row.iter()
                .enumerate()
                .fold(0, |acc, (r, &x)| f.add(acc, f.mul(x, m.get(r, c))))
        })
        .collect()
}

/// The row identities of a primitive companion matrix `P` of degree `k`,
/// checked for every power `1 <= i <= q^k - 1` and every row `j`
/// (rows and powers 1-based):
/// row j of P is row j+1 of I; row j of P^i is (row 1 of P^i) P^(j-1) and
/// (row 1 of P) P^(i+j-2); row 1 of P^i is row i+1 of I for i <= k-1.
pub fn companion_identities(q: u64, k: usize) -> Result<u64, String> {
    let f = gf(q);
    let poly = Poly::find_primitive(&f, k, flagcode::field::DEFAULT_FACTOR_CAP).map_err(|e| e.to_string())?;
    let p = Matrix::companion(&poly).unwrap();
    for j in 1..k {
        if p.row(j - 1) != unit_row(k, j).as_slice() {
            return Err(format!("q={q} k={k}: row {j} of P is not row {} of I", j + 1));
        }
    }
    let order = q.pow(k as u32) - 1;
    // powers[e] = P^e for e in 0..=order + k
    let mut powers = vec![Matrix::identity(&f, k)];
    for e in 1..=order + k as u64 {
        let next = powers[e as usize - 1].mul(&p).unwrap();
        powers.push(next);
    }
    if !powers[order as usize].is_identity() || (1..order as usize).any(|e| powers[e].is_identity()) {
        return Err(format!("q={q} k={k}: P does not have order q^k - 1"));
    }
    let row1 = p.row(0).to_vec();
    let mut checks = 0;
    for i in 1..=order as usize {
        let pi = &powers[i];
        for j in 1..=k {
            let via_row1 = row_times(&f, pi.row(0), &powers[j - 1]);
            let via_p = row_times(&f, &row1, &powers[i + j - 2]);
            if pi.row(j - 1) != via_row1.as_slice() || pi.row(j - 1) != via_p.as_slice() {
                return Err(format!("q={q} k={k}: row {j} of P^{i} breaks the shift identity"));
            }
            checks += 1;
        }
        if i < k && pi.row(0) != unit_row(k, i).as_slice() {
            return Err(format!("q={q} k={k}: row 1 of P^{i} is not row {} of I", i + 1));
        }
    }
    Ok(checks)
}

/// Rows `x..=y` (1-based) of `m` as a matrix.
pub fn window(m: &Matrix, x: usize, y: usize) -> Matrix {
    m.slice(flagcode::RowSlice::Range(x, y)).unwrap()
}

/// Every row of `a` lies in the row space of `b`.
pub fn rows_in_span(a: &Matrix, b: &Matrix) -> bool {
    Matrix::vstack(&[b, a]).unwrap().rank() == b.rank()
}

/// Randomized search for window-containment premises between powers of a
/// primitive companion matrix; each premise found must survive extending
/// both windows by one row. Returns the number of premises found.
pub fn window_extension_search(seed: u64, trials: usize) -> Result<usize, String> {
    let mut rng = StdRng::seed_from_u64(seed);
    let cases: Vec<(u64, usize)> = [
        (2u64, 3usize),
        (2, 4),
        (2, 5),
        (2, 6),
        (2, 7),
        (2, 8),
        (3, 3),
        (3, 4),
        (4, 3),
        (4, 4),
        (5, 3),
        (16, 2),
    ]
    .into_iter()
    .collect();
    let mut found = 0;
    for _ in 0..trials {
        let (q, k) = cases[rng.gen_range(0..cases.len())];
        let f = gf(q);
        let rank = rng.gen_range(0..3);
        let poly = Poly::nth_primitive(&f, k, rank, flagcode::field::DEFAULT_FACTOR_CAP)
            .or_else(|_| Poly::find_primitive(&f, k, flagcode::field::DEFAULT_FACTOR_CAP))
            .unwrap();
        let p = Matrix::companion(&poly).unwrap();
        let order = q.pow(k as u32) - 1;
        let a = rng.gen_range(1..order);
        let b = rng.gen_range(a + 1..=order);
        let pa = p.pow(a).unwrap();
        let pb = p.pow(b).unwrap();
        for x in 1..k - 1 {
            for y in x + 1..k {
                for x2 in 1..k - 1 {
                    for y2 in x2 + 1..k {
                        if !rows_in_span(&window(&pa, x, y), &window(&pb, x2, y2)) {
                            continue;
                        }
                        found += 1;
                        if !rows_in_span(&window(&pa, x, y + 1), &window(&pb, x2, y2 + 1)) {
                            return Err(format!(
                                "{poly}: rows {x}..{y} of P^{a} lie in rows {x2}..{y2} of P^{b}, but not after extension"
                            ));
                        }
                    }
                }
            }
        }
    }
    Ok(found)
}

fn oracle_max_distance(n: usize, dims: &[usize]) -> u32 {
    dims.iter().map(|&t| 2 * t.min(n - t) as u32).sum()
}

/// Additivity of the maximum flag distance over the middle split, for
/// every type vector on n <= `max_n` and every admissible deficit. The split
/// is recomputed here from its definition. Returns the number of
/// `(type, ell)` pairs checked.
pub fn additivity_all_types(max_n: usize) -> Result<usize, String> {
    let mut checked = 0;
    for n in 2..=max_n {
        for bits in 1u32..1 << (n - 1) {
            let dims: Vec<usize> = (1..n).filter(|t| bits >> (t - 1) & 1 == 1).collect();
            let ty = TypeVector::new(n, dims.clone()).unwrap();
            let r = dims.len();
            let a = dims.iter().rposition(|&t| 2 * t <= n).map(|i| i + 1);
            let b = dims.iter().position(|&t| 2 * t >= n).map(|i| i + 1);
            let max_ell = match (a, b) {
                (Some(a), Some(b)) => (a - 1).min(r - b),
                (Some(a), None) => a - 1,
                (None, Some(b)) => r - b,
                (None, None) => 0,
            };
            if ty.max_split_ell() != max_ell {
                return Err(format!("type ({ty}): admissible deficit range differs"));
            }
            for ell in 1..=max_ell {
                let mut prime = BTreeSet::new();
                if let Some(a) = a {
                    prime.extend(&dims[a - ell..a]);
                }
                if let Some(b) = b {
                    prime.extend(&dims[b - 1..b - 1 + ell]);
                }
                let hat: Vec<usize> = dims.iter().copied().filter(|t| !prime.contains(t)).collect();
                let prime: Vec<usize> = prime.into_iter().collect();
                let (p, h) = ty.split(ell).map_err(|e| e.to_string())?;
                if p.dims() != prime.as_slice() || h.dims() != hat.as_slice() {
                    return Err(format!("type ({ty}), ell {ell}: split differs from its definition"));
                }
                if oracle_max_distance(n, &dims) != oracle_max_distance(n, &prime) + oracle_max_distance(n, &hat)
                    || !ty.distance_decomposition_check(ell).unwrap()
                    || ty.max_distance() != oracle_max_distance(n, &dims)
                {
                    return Err(format!("type ({ty}), ell {ell}: maximum distance is not additive"));
                }
                checked += 1;
            }
        }
    }
    Ok(checked)
}

pub fn random_matrix(rng: &mut StdRng, f: &FieldSpec, rows: usize, cols: usize) -> Matrix {
    let data: Vec<Vec<u32>> = (0..rows)
        .map(|_| (0..cols).map(|_| rng.gen_range(0..f.q())).collect())
        .collect();
    Matrix::from_rows(f, &data).unwrap()
}

pub fn random_invertible(rng: &mut StdRng, f: &FieldSpec, n: usize) -> Matrix {
    loop {
        let m = random_matrix(rng, f, n, n);
        if m.rank() == n {
            return m;
        }
    }
}

/// The canonical generator of a row space is unchanged by random invertible
/// row mixing. Returns the number of trials run.
pub fn rref_canonical_under_mixing(seed: u64, trials: usize) -> Result<usize, String> {
    let mut rng = StdRng::seed_from_u64(seed);
    for trial in 0..trials {
        let q = [2u64, 3, 4, 5, 7, 8, 9][rng.gen_range(0..7)];
        let f = gf(q);
        let n = rng.gen_range(1..=8);
        let rows = rng.gen_range(1..=n);
        let a = random_matrix(&mut rng, &f, rows, n);
        if a.rank() == 0 {
            continue;
        }
        let mixed = random_invertible(&mut rng, &f, rows).mul(&a).unwrap();
        let u = Subspace::from_matrix(&a).unwrap();
        let v = Subspace::from_matrix(&mixed).unwrap();
        if u != v || u.canon() != v.canon() || u.canon().rref().0 != *u.canon() {
            return Err(format!("trial {trial}: canonical forms differ over GF({q})"));
        }
    }
    Ok(trials)
}
