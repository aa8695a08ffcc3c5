//! Presentations, Fitting ideals, rank, minimal number of generators and
//! the ideal-module tests for a submodule `E ⊆ R^e`.

use std::collections::{HashMap, HashSet};
use std::sync::{Arc, OnceLock};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::groebner::{minimal_generator_indices, syzygies, Height, Ideal, Matrix, Submodule, VectorElement};
use crate::poly::{parse_polynomial, MonomialOrder, PolyRing, Polynomial, Scalar};

/// Upper limit on the number of minors enumerated for one determinantal ideal.
pub const MAX_MINORS: usize = 250_000;

/// `E ⊆ R^e` given by the columns of an `e x n` matrix `psi`.
#[derive(Clone, Debug)]
pub struct ModuleSpec {
    psi: Matrix,
    generating: OnceLock<Vec<Vec<Polynomial>>>,
    presentation: OnceLock<Matrix>,
}

impl ModuleSpec {
    pub fn new(ring: &Arc<PolyRing>, ambient_rank: usize, columns: Vec<Vec<Polynomial>>) -> Result<Self> {
        if ambient_rank == 0 {
            return Err(Error::Input("ambient rank must be positive".into()));
        }
        if columns.is_empty() {
            return Err(Error::Input("a module needs at least one generator".into()));
        }
        Self::from_matrix(Matrix::from_columns(ring, ambient_rank, columns)?)
    }

    pub fn from_matrix(psi: Matrix) -> Result<Self> {
        if psi.nrows() == 0 || psi.ncols() == 0 {
            return Err(Error::Input("generator matrix must be nonempty".into()));
        }
        Ok(ModuleSpec {
            psi,
            generating: OnceLock::new(),
            presentation: OnceLock::new(),
        })
    }

    /// Parses generator columns written as polynomial strings.
    pub fn parse(ring: &Arc<PolyRing>, ambient_rank: usize, columns: &[Vec<String>]) -> Result<Self> {
        let cols = columns
            .iter()
            .enumerate()
            .map(|(j, c)| {
                if c.len() != ambient_rank {
                    return Err(Error::Input(format!(
                        "generator {j} has {} components, expected {ambient_rank}",
                        c.len()
                    )));
                }
                c.iter().map(|s| parse_polynomial(ring, s)).collect()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(ring, ambient_rank, cols)
    }

    /// `R^e` with the standard basis as generators.
    pub fn free(ring: &Arc<PolyRing>, rank: usize) -> Result<Self> {
        Self::from_matrix(Matrix::identity(ring, rank))
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        self.psi.ring()
    }

    pub fn ambient_rank(&self) -> usize {
        self.psi.nrows()
    }

    pub fn num_generators(&self) -> usize {
        self.psi.ncols()
    }

    pub fn psi(&self) -> &Matrix {
        &self.psi
    }

    pub fn columns(&self) -> &[Vec<Polynomial>] {
        self.psi.columns()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.columns()
            .iter()
            .all(|c| VectorElement::new(c.clone()).and_then(|v| v.graded_degree(&vec![0; c.len()])).is_ok())
    }

    pub fn submodule(&self) -> Submodule {
        Submodule::from_matrix(&self.psi).expect("nonempty matrix")
    }

    /// A generating set used for presentations: the minimal one for
    /// homogeneous input, otherwise the nonzero columns.
    pub fn generating_columns(&self) -> &[Vec<Polynomial>] {
        self.generating.get_or_init(|| {
            let e = self.ambient_rank();
            let zero = vec![0; e];
            match minimal_generator_indices(self.ring(), e, self.columns(), &zero) {
                Ok(keep) => keep.iter().map(|&k| self.columns()[k].clone()).collect(),
                Err(_) => self
                    .columns()
                    .iter()
                    .filter(|c| c.iter().any(|p| !p.is_zero()))
                    .cloned()
                    .collect(),
            }
        })
    }

    /// The syzygy matrix `phi` of [`Self::generating_columns`], so that
    /// `R^m -> R^n -> E -> 0` is exact. For `E = 0` this is the empty
    /// `0 x 0` matrix.
    pub fn presentation(&self) -> &Matrix {
        self.presentation.get_or_init(|| {
            let gens = self.generating_columns();
            if gens.is_empty() {
                Matrix::from_columns(self.ring(), 0, Vec::new()).expect("empty matrix")
            } else {
                syzygies(self.ring(), self.ambient_rank(), gens).expect("nonempty column list")
            }
        })
    }

    /// The module generated by the listed columns.
    pub fn restrict(&self, keep: &[usize]) -> Result<Self> {
        let cols = keep.iter().map(|&k| self.columns()[k].clone()).collect();
        Self::new(self.ring(), self.ambient_rank(), cols)
    }
}

fn combinations(n: usize, k: usize) -> Vec<u64> {
    let mut out = Vec::new();
    fn go(start: usize, n: usize, k: usize, acc: u64, out: &mut Vec<u64>) {
        if k == 0 {
            out.push(acc);
            return;
        }
        for i in start..=n - k {
            go(i + 1, n, k - 1, acc | (1 << i), out);
        }
    }
    if k <= n {
        go(0, n, k, 0, &mut out);
    }
    out
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc.min(usize::MAX as u128) as usize
}

struct MinorTable<'a> {
    m: &'a Matrix,
    memo: HashMap<(u64, u64), Polynomial>,
}

impl MinorTable<'_> {
    fn det(&mut self, rows: u64, cols: u64) -> Polynomial {
        if cols.count_ones() == 1 {
            let i = rows.trailing_zeros() as usize;
            let j = cols.trailing_zeros() as usize;
            return self.m.entry(i, j).clone();
        }
        if let Some(p) = self.memo.get(&(rows, cols)) {
            return p.clone();
        }
        let j = cols.trailing_zeros() as usize;
        let rest_cols = cols & !(1 << j);
        let mut acc = Polynomial::zero(self.m.ring());
        let mut bits = rows;
        let mut sign_positive = true;
        while bits != 0 {
            let i = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let a = self.m.entry(i, j);
            if !a.is_zero() {
                let sub = self.det(rows & !(1 << i), rest_cols);
                if !sub.is_zero() {
                    let t = a * &sub;
                    acc = if sign_positive { &acc + &t } else { &acc - &t };
                }
            }
            sign_positive = !sign_positive;
        }
        self.memo.insert((rows, cols), acc.clone());
        acc
    }
}

/// The distinct nonzero `k x k` minors of `m`, each made monic, in a fixed
/// order. `k = 0` gives `[1]`.
pub fn minors(m: &Matrix, k: usize) -> Result<Vec<Polynomial>> {
    let ring = m.ring();
    if k == 0 {
        return Ok(vec![Polynomial::one(ring)]);
    }
    if k > m.nrows() || k > m.ncols() {
        return Ok(Vec::new());
    }
    if m.nrows() > 64 || m.ncols() > 64 {
        return Err(Error::BoundExceeded(format!(
            "minors of a {} x {} matrix (at most 64 rows and columns)",
            m.nrows(),
            m.ncols()
        )));
    }
    let count = binomial(m.nrows(), k).saturating_mul(binomial(m.ncols(), k));
    if count > MAX_MINORS {
        return Err(Error::BoundExceeded(format!(
            "{count} minors of size {k} (limit {MAX_MINORS})"
        )));
    }
    let mut table = MinorTable {
        m,
        memo: HashMap::new(),
    };
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for cols in combinations(m.ncols(), k) {
        for rows in combinations(m.nrows(), k) {
            let d = table.det(rows, cols);
            if d.is_zero() {
                continue;
            }
            let d = d.monic(MonomialOrder::Grevlex);
            if seen.insert(d.clone()) {
                out.push(d);
            }
        }
    }
    Ok(out)
}

/// `I_k(m)`, the ideal of `k x k` minors.
pub fn minors_ideal(m: &Matrix, k: usize) -> Result<Ideal> {
    Ideal::new(m.ring(), minors(m, k)?)
}

fn numeric_rank(mut rows: Vec<Vec<Scalar>>) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].inv();
        for i in r + 1..rows.len() {
            if rows[i][c].is_zero() {
                continue;
            }
            let f = rows[i][c].mul(&inv);
            for j in c..ncols {
                let t = f.mul(&rows[r][j]);
                rows[i][j] = rows[i][j].sub(&t);
            }
        }
        r += 1;
    }
    r
}

/// Fraction-free elimination; every intermediate entry is a minor of `m`.
fn bareiss_rank(m: &Matrix) -> usize {
    let ring = m.ring();
    let mut a: Vec<Vec<Polynomial>> = (0..m.nrows())
        .map(|i| (0..m.ncols()).map(|j| m.entry(i, j).clone()).collect())
        .collect();
    let mut prev = Polynomial::one(ring);
    let mut r = 0;
    for c in 0..m.ncols() {
        let Some(p) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        for i in r + 1..a.len() {
            for j in c + 1..m.ncols() {
                let num = &(&a[r][c] * &a[i][j]) - &(&a[i][c] * &a[r][j]);
                a[i][j] = num.exact_div(&prev).expect("Bareiss division is exact");
            }
            a[i][c] = Polynomial::zero(ring);
        }
        prev = a[r][c].clone();
        r += 1;
    }
    r
}

/// Rank of a matrix over the fraction field: the largest `k` with
/// `I_k(m) != 0`.
pub fn matrix_rank(m: &Matrix) -> usize {
    let full = m.nrows().min(m.ncols());
    if full == 0 {
        return 0;
    }
    let field = m.ring().field();
    let mut rng = ChaCha8Rng::seed_from_u64(0x7261_6e6b);
    let point: Vec<Scalar> = (0..m.ring().nvars())
        .map(|_| field.from_i64(rng.gen_range(-1000..=1000)))
        .collect();
    let values: Vec<Vec<Scalar>> = (0..m.nrows())
        .map(|i| (0..m.ncols()).map(|j| m.entry(i, j).evaluate(&point)).collect())
        .collect();
    if numeric_rank(values) == full {
        return full;
    }
    bareiss_rank(m)
}

/// Generic rank of `E`.
pub fn rank(module: &ModuleSpec) -> usize {
    matrix_rank(module.psi())
}

/// `F_i(E) = I_{n-i}(phi)` for a presentation `R^m -(phi)-> R^n -> E -> 0`.
pub fn fitting_ideal(module: &ModuleSpec, i: usize) -> Result<Ideal> {
    let ring = module.ring();
    let n = module.generating_columns().len();
    if i >= n {
        return Ok(Ideal::unit(ring));
    }
    let phi = module.presentation();
    if phi.ncols() == 0 {
        return Ok(Ideal::zero(ring));
    }
    minors_ideal(phi, n - i)
}

/// Minimal number of generators over the graded local ring.
pub fn mu_local(module: &ModuleSpec) -> Result<usize> {
    let e = module.ambient_rank();
    Ok(minimal_generator_indices(module.ring(), e, module.columns(), &vec![0; e])?.len())
}

/// `mu(E_p)`: the least `n` with `F_n(E)` not contained in `p`. The caller
/// asserts that `p` is prime.
pub fn mu_at_prime(module: &ModuleSpec, p: &Ideal) -> Result<usize> {
    if p.is_unit() {
        return Err(Error::Input("the prime must be a proper ideal".into()));
    }
    let n = module.generating_columns().len();
    for k in 0..=n {
        let f = fitting_ideal(module, k)?;
        if !p.contains_ideal(&f)? {
            return Ok(k);
        }
    }
    Err(Error::Internal("Fitting chain never leaves the prime".into()))
}

/// `F_0(G/E) = I_e(psi)`.
pub fn quotient_fitting_ideal(module: &ModuleSpec) -> Result<Ideal> {
    minors_ideal(module.psi(), module.ambient_rank())
}

/// `grade G/E = ht I_e(psi)`; infinite when `E = G`.
pub fn grade_quotient(module: &ModuleSpec) -> Result<Height> {
    Ok(quotient_fitting_ideal(module)?.height())
}

/// `grade G/E >= 2` for the given embedding.
pub fn is_ideal_module(module: &ModuleSpec) -> Result<bool> {
    Ok(grade_quotient(module)? >= Height::Finite(2))
}

/// `E_p` is free for every `p != m`: the first nonzero Fitting ideal is
/// `m`-primary or the unit ideal.
pub fn is_free_on_punctured_spectrum(module: &ModuleSpec) -> Result<bool> {
    Ok(fitting_ideal(module, rank(module))?.dimension() <= 0)
}

/// `dim G/E = dim R/F_0(G/E)`; `-1` when `E = G`.
pub fn dim_quotient(module: &ModuleSpec) -> Result<i64> {
    Ok(quotient_fitting_ideal(module)?.dimension())
}
