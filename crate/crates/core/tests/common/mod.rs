//! Independent oracles and random instance generators shared by the
//! integration tests. The oracles use plain dense linear algebra over the
//! rationals and never call the Gröbner engine.

#![allow(dead_code)]

use std::collections::BTreeMap;
use std::sync::Arc;

use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use reesmod::groebner::Ideal;
use reesmod::invariants::ModuleSpec;
use reesmod::poly::{Monomial, PolyRing, Polynomial, Scalar};

pub type Q = BigRational;

fn q(s: &Scalar) -> Q {
    match s {
        Scalar::Q(v) => v.clone(),
        Scalar::Fp { .. } => panic!("oracles work over the rationals"),
    }
}

fn q_int(n: i64) -> Q {
    BigRational::from_integer(n.into())
}

/// Exponent vectors of all monomials of total degree `d` in `n` variables.
pub fn monomials_of_degree(n: usize, d: u32) -> Vec<Vec<u32>> {
    fn go(n: usize, d: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if prefix.len() + 1 == n {
            prefix.push(d);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for k in 0..=d {
            prefix.push(k);
            go(n, d - k, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        if d == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    go(n, d, &mut Vec::new(), &mut out);
    out
}

/// A polynomial as a map from exponent vectors to rationals.
pub fn coeffs(f: &Polynomial) -> BTreeMap<Vec<u32>, Q> {
    f.terms()
        .map(|(m, c)| (m.exponents().to_vec(), q(c)))
        .collect()
}

fn times_monomial(f: &BTreeMap<Vec<u32>, Q>, m: &[u32]) -> BTreeMap<Vec<u32>, Q> {
    f.iter()
        .map(|(e, c)| (e.iter().zip(m).map(|(a, b)| a + b).collect(), c.clone()))
        .collect()
}

/// Row reduction; returns the pivot columns and the reduced rows.
fn row_reduce(mut rows: Vec<Vec<Q>>) -> (Vec<usize>, Vec<Vec<Q>>) {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        for v in rows[r].iter_mut() {
            *v = &*v * &inv;
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                for j in 0..ncols {
                    let t = &f * &rows[r][j];
                    rows[i][j] = &rows[i][j] - &t;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    (pivots, rows)
}

/// Rank of a dense rational matrix given by rows.
pub fn dense_rank(rows: Vec<Vec<Q>>) -> usize {
    row_reduce(rows).0.len()
}

/// A basis of `{x : A x = 0}` for `A` given by rows with `ncols` columns.
pub fn nullspace(rows: Vec<Vec<Q>>, ncols: usize) -> Vec<Vec<Q>> {
    let (pivots, red) = row_reduce(rows);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Q::zero(); ncols];
            v[f] = Q::one();
            for (row, &p) in red.iter().zip(&pivots) {
                v[p] = -row[f].clone();
            }
            v
        })
        .collect()
}

/// Coefficients of a vector keyed by (component, exponents).
fn vector_coeffs(v: &[Polynomial]) -> BTreeMap<(usize, Vec<u32>), Q> {
    v.iter()
        .enumerate()
        .flat_map(|(i, p)| coeffs(p).into_iter().map(move |(e, c)| ((i, e), c)))
        .collect()
}

fn vector_degree(v: &[Polynomial]) -> u32 {
    v.iter()
        .find(|p| !p.is_zero())
        .and_then(Polynomial::homogeneous_degree)
        .expect("homogeneous nonzero generator")
}

fn in_span_keyed(vectors: &[BTreeMap<(usize, Vec<u32>), Q>], target: &BTreeMap<(usize, Vec<u32>), Q>) -> bool {
    let mut keys: Vec<&(usize, Vec<u32>)> = vectors.iter().flat_map(|v| v.keys()).collect();
    keys.extend(target.keys());
    keys.sort();
    keys.dedup();
    let dense = |v: &BTreeMap<(usize, Vec<u32>), Q>| -> Vec<Q> {
        keys.iter().map(|k| v.get(*k).cloned().unwrap_or_else(Q::zero)).collect()
    };
    let rows: Vec<Vec<Q>> = vectors.iter().map(dense).collect();
    let base = dense_rank(rows.clone());
    let mut with = rows;
    with.push(dense(target));
    dense_rank(with) == base
}

/// Membership of `v` in the submodule of `R^s` generated by homogeneous
/// vectors `gens` (all basis vectors in degree 0), decided degree by
/// degree: the degree-`k` part of `v` must lie in the span of `m * g` over
/// monomials `m` of degree `k - deg g`. Exact; `v` may be inhomogeneous.
pub fn linear_algebra_vector_membership(v: &[Polynomial], gens: &[Vec<Polynomial>]) -> bool {
    let n = v[0].ring().nvars();
    let mut by_degree: BTreeMap<u32, BTreeMap<(usize, Vec<u32>), Q>> = BTreeMap::new();
    for ((i, e), c) in vector_coeffs(v) {
        by_degree
            .entry(e.iter().sum())
            .or_default()
            .insert((i, e), c);
    }
    let gens: Vec<(u32, BTreeMap<(usize, Vec<u32>), Q>)> = gens
        .iter()
        .filter(|g| g.iter().any(|p| !p.is_zero()))
        .map(|g| (vector_degree(g), vector_coeffs(g)))
        .collect();
    for (deg, part) in by_degree {
        let mut span = Vec::new();
        for (gd, gc) in &gens {
            if *gd > deg {
                continue;
            }
            for m in monomials_of_degree(n, deg - gd) {
                span.push(
                    gc.iter()
                        .map(|((i, e), c)| ((*i, e.iter().zip(&m).map(|(a, b)| a + b).collect()), c.clone()))
                        .collect(),
                );
            }
        }
        if !in_span_keyed(&span, &part) {
            return false;
        }
    }
    true
}

/// Ideal membership by the same degree-by-degree linear algebra.
pub fn linear_algebra_membership(f: &Polynomial, gens: &[Polynomial]) -> bool {
    let cols: Vec<Vec<Polynomial>> = gens.iter().map(|g| vec![g.clone()]).collect();
    linear_algebra_vector_membership(std::slice::from_ref(f), &cols)
}

/// All kernel elements `(h_1..h_n)` of `h -> sum_j h_j cols[j]` whose
/// entries are homogeneous of degree at most `max_degree`, up to linear
/// combination. Columns must be homogeneous vectors.
pub fn brute_force_kernel(cols: &[Vec<Polynomial>], max_degree: u32) -> Vec<Vec<Polynomial>> {
    let ring = cols[0][0].ring().clone();
    let nv = ring.nvars();
    let degs: Vec<u32> = cols
        .iter()
        .map(|c| {
            c.iter()
                .filter_map(|p| p.homogeneous_degree().filter(|_| !p.is_zero()))
                .next()
                .unwrap_or(0)
        })
        .collect();
    let top = degs.iter().max().copied().unwrap_or(0) + max_degree;
    let mut out = Vec::new();
    for target in 0..=top {
        // unknowns: coefficient of monomial m in h_j
        let mut unknowns: Vec<(usize, Vec<u32>)> = Vec::new();
        for (j, &dj) in degs.iter().enumerate() {
            if target >= dj && target - dj <= max_degree {
                for m in monomials_of_degree(nv, target - dj) {
                    unknowns.push((j, m));
                }
            }
        }
        if unknowns.is_empty() {
            continue;
        }
        // equations: coefficient of (component, monomial) in the image
        let mut eq_index: BTreeMap<(usize, Vec<u32>), usize> = BTreeMap::new();
        let mut columns: Vec<BTreeMap<usize, Q>> = Vec::new();
        for (j, m) in &unknowns {
            let mut col = BTreeMap::new();
            for (i, p) in cols[*j].iter().enumerate() {
                for (e, c) in times_monomial(&coeffs(p), m) {
                    let len = eq_index.len();
                    let row = *eq_index.entry((i, e)).or_insert(len);
                    col.insert(row, c);
                }
            }
            columns.push(col);
        }
        let nrows = eq_index.len();
        let rows: Vec<Vec<Q>> = (0..nrows)
            .map(|r| {
                columns
                    .iter()
                    .map(|c| c.get(&r).cloned().unwrap_or_else(Q::zero))
                    .collect()
            })
            .collect();
        let kernel = if nrows == 0 {
            (0..unknowns.len())
                .map(|k| {
                    let mut v = vec![Q::zero(); unknowns.len()];
                    v[k] = Q::one();
                    v
                })
                .collect()
        } else {
            nullspace(rows, unknowns.len())
        };
        for v in kernel {
            let mut h = vec![Polynomial::zero(&ring); cols.len()];
            for ((j, m), c) in unknowns.iter().zip(&v) {
                if !c.is_zero() {
                    let t = Polynomial::term(
                        &ring,
                        Monomial::from_exponents(m.clone()),
                        Scalar::Q(c.clone()),
                    );
                    h[*j] = &h[*j] + &t;
                }
            }
            out.push(h);
        }
    }
    out
}

/// `binom(n + e - 1, e - 1)` by Pascal's rule.
pub fn rank_of_power(e: usize, n: usize) -> usize {
    let (a, b) = (n + e - 1, e - 1);
    let mut row = vec![1usize];
    for _ in 0..a {
        let mut next = vec![1usize; row.len() + 1];
        for k in 1..row.len() {
            next[k] = row[k - 1] + row[k];
        }
        row = next;
    }
    row[b]
}

/// Rank of a polynomial matrix by evaluation at several integer points;
/// the maximum over points equals the generic rank with overwhelming
/// probability and never exceeds it.
pub fn rank_by_evaluation(m: &ModuleSpec, rng: &mut ChaCha8Rng, points: usize) -> usize {
    let nv = m.ring().nvars();
    let mut best = 0;
    for _ in 0..points {
        let pt: Vec<Q> = (0..nv).map(|_| q_int(rng.gen_range(-50..=50))).collect();
        let rows: Vec<Vec<Q>> = (0..m.ambient_rank())
            .map(|i| {
                m.columns()
                    .iter()
                    .map(|c| evaluate(&c[i], &pt))
                    .collect()
            })
            .collect();
        best = best.max(dense_rank(rows));
    }
    best
}

fn evaluate(f: &Polynomial, pt: &[Q]) -> Q {
    let mut acc = Q::zero();
    for (e, c) in coeffs(f) {
        let mut t = c;
        for (x, &k) in pt.iter().zip(&e) {
            for _ in 0..k {
                t = &t * x;
            }
        }
        acc = &acc + &t;
    }
    acc
}

/// Random monomial of degree `1..=max_degree`.
pub fn random_monomial(rng: &mut ChaCha8Rng, ring: &Arc<PolyRing>, max_degree: u32) -> Polynomial {
    let n = ring.nvars();
    let d = rng.gen_range(1..=max_degree);
    let mut e = vec![0u32; n];
    for _ in 0..d {
        e[rng.gen_range(0..n)] += 1;
    }
    Polynomial::term(ring, Monomial::from_exponents(e), ring.field().one())
}

/// Monomial ideal with `1..=max_gens` generators of degree `1..=max_degree`.
pub fn random_monomial_ideal(
    rng: &mut ChaCha8Rng,
    ring: &Arc<PolyRing>,
    max_gens: usize,
    max_degree: u32,
) -> Vec<Polynomial> {
    let k = rng.gen_range(1..=max_gens);
    let mut gens: Vec<Polynomial> = Vec::new();
    while gens.len() < k {
        let m = random_monomial(rng, ring, max_degree);
        if !gens.contains(&m) {
            gens.push(m);
        }
    }
    gens
}

/// Random homogeneous polynomial of degree `d` with small integer
/// coefficients and at most `terms` terms.
pub fn random_form(rng: &mut ChaCha8Rng, ring: &Arc<PolyRing>, d: u32, terms: usize) -> Polynomial {
    let mons = monomials_of_degree(ring.nvars(), d);
    let mut f = Polynomial::zero(ring);
    for _ in 0..terms {
        let m = &mons[rng.gen_range(0..mons.len())];
        let c = rng.gen_range(-5..=5);
        let t = Polynomial::term(ring, Monomial::from_exponents(m.clone()), ring.field().from_i64(c));
        f = &f + &t;
    }
    f
}

/// Random homogeneous ideal: 1..=3 nonzero forms of degree 1..=max_degree.
pub fn random_homogeneous_ideal(rng: &mut ChaCha8Rng, ring: &Arc<PolyRing>, max_degree: u32) -> Vec<Polynomial> {
    let k = rng.gen_range(1..=3);
    let mut gens = Vec::new();
    while gens.len() < k {
        let d = rng.gen_range(1..=max_degree);
        let f = random_form(rng, ring, d, 3);
        if !f.is_zero() {
            gens.push(f);
        }
    }
    gens
}

/// `I_1 ⊕ I_2 ⊆ R^2`.
pub fn direct_sum(ring: &Arc<PolyRing>, i1: &[Polynomial], i2: &[Polynomial]) -> ModuleSpec {
    let z = Polynomial::zero(ring);
    let mut cols: Vec<Vec<Polynomial>> = i1.iter().map(|g| vec![g.clone(), z.clone()]).collect();
    cols.extend(i2.iter().map(|g| vec![z.clone(), g.clone()]));
    ModuleSpec::new(ring, 2, cols).unwrap()
}

/// Ideal generated by all products `g h`.
pub fn product_generators(i1: &[Polynomial], i2: &[Polynomial]) -> Vec<Polynomial> {
    i1.iter()
        .flat_map(|g| i2.iter().map(move |h| g * h))
        .collect()
}

/// Two ideals are equal when every generator of each reduces to zero
/// modulo the other, tested with the linear-algebra oracle (homogeneous
/// generators only).
pub fn oracle_ideal_equal(a: &[Polynomial], b: &[Polynomial]) -> bool {
    a.iter().all(|f| linear_algebra_membership(f, b)) && b.iter().all(|f| linear_algebra_membership(f, a))
}

pub fn ideal(ring: &Arc<PolyRing>, gens: &[Polynomial]) -> Ideal {
    Ideal::new(ring, gens.to_vec()).unwrap()
}
