//! Reductions `U ⊆ E` with `E^(r+1) = U · E^r`, reduction numbers, generic
//! minimal reductions and the explicit two-element construction.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::invariants::{rank, ModuleSpec};
use crate::poly::{PolyRing, Polynomial, Scalar};
use crate::rees::{analytic_spread, product_power, rees_power};

/// Default search bound for reduction numbers.
pub const DEFAULT_RMAX: usize = 10;
/// Default number of random trials for generic reductions.
pub const DEFAULT_TRIALS: u32 = 5;
/// Generic coefficients are drawn from `[-COEFF_RANGE, COEFF_RANGE]`.
pub const COEFF_RANGE: i64 = 100;

/// Result of testing a candidate against `E`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum ReductionOutcome {
    /// `E^(r+1) = U · E^r` with `r` least.
    Reduction { r: usize },
    /// No equality for `r <= rmax`; this does not refute being a reduction.
    NotUpToBound { rmax: usize },
    /// `rank U < rank E`, so `U` is not a reduction.
    RankDeficient { rank_u: usize, rank_e: usize },
    /// `U` is not contained in `E`.
    NotContained,
}

impl ReductionOutcome {
    pub fn reduction_number(&self) -> Option<usize> {
        match self {
            ReductionOutcome::Reduction { r } => Some(*r),
            _ => None,
        }
    }

    pub fn is_reduction(&self) -> bool {
        self.reduction_number().is_some()
    }

    pub fn describe(&self) -> String {
        match self {
            ReductionOutcome::Reduction { r } => format!("reduction with r = {r}"),
            ReductionOutcome::NotUpToBound { rmax } => {
                format!("not a reduction up to bound r = {rmax}")
            }
            ReductionOutcome::RankDeficient { rank_u, rank_e } => {
                format!("not a reduction: rank U = {rank_u} < rank E = {rank_e}")
            }
            ReductionOutcome::NotContained => "not a reduction: U is not contained in E".into(),
        }
    }
}

/// A candidate `U`, written as generator columns, and its verdict.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionCertificate {
    pub generators: Vec<Vec<String>>,
    pub outcome: ReductionOutcome,
    pub verified: bool,
    pub search_bound: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub trial: Option<u32>,
}

impl ReductionCertificate {
    fn new(u: &ModuleSpec, outcome: ReductionOutcome, rmax: usize) -> Self {
        ReductionCertificate {
            generators: column_strings(u),
            verified: outcome.is_reduction(),
            outcome,
            search_bound: rmax,
            seed: None,
            trial: None,
        }
    }

    /// The candidate as a module over `ring`.
    pub fn candidate(&self, ring: &Arc<PolyRing>) -> Result<ModuleSpec> {
        let e = self.generators.first().map_or(0, Vec::len);
        ModuleSpec::parse(ring, e, &self.generators)
    }

    pub fn reduction_number(&self) -> Option<usize> {
        self.outcome.reduction_number()
    }
}

pub(crate) fn column_strings(m: &ModuleSpec) -> Vec<Vec<String>> {
    m.columns()
        .iter()
        .map(|c| c.iter().map(ToString::to_string).collect())
        .collect()
}

// Graded U and E: global containment. Otherwise the equality is tested in
// the local ring at the origin, where generic combinations of generators of
// mixed degree become reductions.
fn equality_at(u: &ModuleSpec, module: &ModuleSpec, r: usize) -> Result<bool> {
    let power = rees_power(module, r + 1)?;
    let prod = product_power(u, module, r)?;
    if u.is_homogeneous() && module.is_homogeneous() {
        prod.submodule().contains_module(&power.submodule())
    } else {
        prod.submodule().contains_module_at_origin(&power.submodule())
    }
}

/// The least `r <= rmax` with `E^(r+1) = U · E^r`.
pub fn reduction_number_wrt(u: &ModuleSpec, module: &ModuleSpec, rmax: usize) -> Result<ReductionOutcome> {
    if u.ambient_rank() != module.ambient_rank() {
        return Err(Error::RankMismatch(u.ambient_rank(), module.ambient_rank()));
    }
    if !module.submodule().contains_module(&u.submodule())? {
        return Ok(ReductionOutcome::NotContained);
    }
    let (rank_u, rank_e) = (rank(u), rank(module));
    if rank_u < rank_e {
        return Ok(ReductionOutcome::RankDeficient { rank_u, rank_e });
    }
    for r in 0..=rmax {
        if equality_at(u, module, r)? {
            if !equality_at(u, module, r + 1)? {
                return Err(Error::Internal(format!(
                    "reduction equality holds at r = {r} but not at r = {}",
                    r + 1
                )));
            }
            return Ok(ReductionOutcome::Reduction { r });
        }
    }
    Ok(ReductionOutcome::NotUpToBound { rmax })
}

/// Tests a candidate and packages the verdict.
pub fn certify(u: &ModuleSpec, module: &ModuleSpec, rmax: usize) -> Result<ReductionCertificate> {
    let outcome = reduction_number_wrt(u, module, rmax)?;
    Ok(ReductionCertificate::new(u, outcome, rmax))
}

/// Options for [`generic_minimal_reduction`].
#[derive(Clone, Copy, Debug)]
pub struct GenericOptions {
    /// Number of generators of `U`; defaults to `ℓ(E)`.
    pub target_mu: Option<usize>,
    pub seed: u64,
    pub trials: u32,
    pub rmax: usize,
}

impl Default for GenericOptions {
    fn default() -> Self {
        GenericOptions {
            target_mu: None,
            seed: 0,
            trials: DEFAULT_TRIALS,
            rmax: DEFAULT_RMAX,
        }
    }
}

/// A reduction generated by random integer combinations of the minimal
/// generators of `E`, verified within the search bound.
pub fn generic_minimal_reduction(module: &ModuleSpec, opts: GenericOptions) -> Result<ReductionCertificate> {
    let ring = module.ring();
    if !ring.field().is_infinite() {
        return Err(Error::Input(
            "generic reductions need an infinite coefficient field".into(),
        ));
    }
    let target = match opts.target_mu {
        Some(t) => t,
        None => analytic_spread(module)?,
    };
    let gens = module.generating_columns().to_vec();
    if gens.is_empty() {
        return Err(Error::Input("the zero module has no generic reduction".into()));
    }
    let e = module.ambient_rank();
    if target >= gens.len() {
        let own = ModuleSpec::new(ring, e, gens)?;
        let mut cert = certify(&own, module, opts.rmax)?;
        cert.seed = Some(opts.seed);
        return Ok(cert);
    }
    if target == 0 {
        return Err(Error::Input("target number of generators must be positive".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    for trial in 0..opts.trials {
        let cols: Vec<Vec<Polynomial>> = (0..target)
            .map(|_| {
                let coeffs: Vec<i64> = (0..gens.len())
                    .map(|_| rng.gen_range(-COEFF_RANGE..=COEFF_RANGE))
                    .collect();
                (0..e)
                    .map(|i| {
                        gens.iter().zip(&coeffs).fold(Polynomial::zero(ring), |acc, (g, &c)| {
                            &acc + &g[i].scale(&ring.field().from_i64(c))
                        })
                    })
                    .collect()
            })
            .collect();
        let u = ModuleSpec::new(ring, e, cols)?;
        let mut cert = certify(&u, module, opts.rmax)?;
        if cert.verified {
            cert.seed = Some(opts.seed);
            cert.trial = Some(trial);
            return Ok(cert);
        }
    }
    Err(Error::ReductionFailure {
        trials: opts.trials,
        rmax: opts.rmax,
    })
}

/// `U = <a_1 ε_1, ..., a_e ε_e, sum_i b_i ε_i>` with `a_1 = a`, `b_1 = b`
/// and `a_i = α_i a + b`, `b_i = a` for `i >= 2`; `alphas = (α_2..α_e)`.
pub fn pe1_construction(a: &Polynomial, b: &Polynomial, e: usize, alphas: &[Scalar]) -> Result<ModuleSpec> {
    let ring = a.ring().clone();
    if e < 2 {
        return Err(Error::Input("the construction needs e >= 2".into()));
    }
    if alphas.len() != e - 1 {
        return Err(Error::Input(format!(
            "expected {} scalars, got {}",
            e - 1,
            alphas.len()
        )));
    }
    for (i, x) in alphas.iter().enumerate() {
        if alphas[i + 1..].iter().any(|y| y == x) {
            return Err(Error::Input(format!("repeated scalar {x}")));
        }
    }
    let mut a_i = vec![a.clone()];
    let mut b_i = vec![b.clone()];
    for alpha in alphas {
        a_i.push(&a.scale(alpha) + b);
        b_i.push(a.clone());
    }
    let zero = Polynomial::zero(&ring);
    let mut cols: Vec<Vec<Polynomial>> = (0..e)
        .map(|i| {
            (0..e)
                .map(|k| if k == i { a_i[i].clone() } else { zero.clone() })
                .collect()
        })
        .collect();
    cols.push(b_i);
    ModuleSpec::new(&ring, e, cols)
}
