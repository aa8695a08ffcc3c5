//! Deviation, analytic deviation and the classification of `E` as complete
//! intersection, equimultiple or generically complete intersection, plus
//! runnable cross-checks of the criteria relating them.
//!
//! Throughout, `e` in the defining formulas is the rank of `E`; it equals
//! the ambient rank whenever `E` has full rank in `R^e`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groebner::{cokernel_depth, Height, Ideal};
use crate::invariants::{
    dim_quotient, fitting_ideal, grade_quotient, is_free_on_punctured_spectrum, mu_at_prime, mu_local, rank,
    ModuleSpec,
};
use crate::monomial_tools::{is_monomial, minimal_primes_monomial};
use crate::reductions::{generic_minimal_reduction, GenericOptions, ReductionCertificate};
use crate::rees::{analytic_spread, is_linear_type, rees_power};

/// Where the generically-complete-intersection verdict comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GciBasis {
    /// All minimal primes of the monomial ideal `F_e(E)` were checked.
    MinimalPrimes,
    /// Only the user-supplied primes (asserted prime and minimal) were checked.
    SuppliedPrimes,
    /// No minimal primes were available.
    Undetermined,
}

/// Three-valued verdict; `value` is absent when undetermined.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenericCi {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub value: Option<bool>,
    pub basis: GciBasis,
    /// Number of primes at which the condition was tested.
    pub primes_checked: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Flags {
    pub trivially_free: bool,
    /// `grade G/E >= 2` for the given embedding `E ⊆ R^e`.
    pub ideal_module: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub complete_intersection: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub equimultiple: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub generically_ci: Option<GenericCi>,
    pub free_punctured_spectrum: bool,
    pub linear_type: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantReport {
    pub nvars: usize,
    pub ambient_rank: usize,
    pub num_generators: usize,
    pub rank: usize,
    pub mu: usize,
    pub ht_fe: Height,
    pub analytic_spread: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub deviation: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub analytic_deviation: Option<i64>,
    pub grade_quotient: Height,
    pub dim_quotient: i64,
    pub flags: Flags,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub reduction: Option<ReductionCertificate>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub notes: Vec<String>,
}

impl InvariantReport {
    pub fn reduction_number(&self) -> Option<usize> {
        self.reduction.as_ref().and_then(ReductionCertificate::reduction_number)
    }
}

#[derive(Clone, Debug, Default)]
pub struct ClassifyOptions {
    /// Primes asserted to be the minimal primes of `F_e(E)`.
    pub primes: Option<Vec<Ideal>>,
    pub reduction: GenericOptions,
    /// Skip the generic reduction.
    pub skip_reduction: bool,
}

fn signed(h: usize) -> i64 {
    h as i64
}

/// `E` is free: its first nonzero Fitting ideal is the unit ideal.
pub fn is_free(module: &ModuleSpec) -> Result<bool> {
    Ok(fitting_ideal(module, rank(module))?.is_unit())
}

fn non_free_fitting_height(module: &ModuleSpec, what: &'static str) -> Result<(usize, usize)> {
    let e = rank(module);
    match fitting_ideal(module, e)?.height() {
        Height::Finite(h) => Ok((e, h)),
        Height::Infinite => Err(Error::FreeModule(what)),
    }
}

/// `de(E) = μ(E) - e + 1 - ht F_e(E)`.
pub fn deviation(module: &ModuleSpec) -> Result<i64> {
    let (e, h) = non_free_fitting_height(module, "deviation")?;
    Ok(signed(mu_local(module)?) - signed(e) + 1 - signed(h))
}

/// `ad(E) = ℓ(E) - e + 1 - ht F_e(E)`.
pub fn analytic_deviation(module: &ModuleSpec) -> Result<i64> {
    let (e, h) = non_free_fitting_height(module, "analytic deviation")?;
    Ok(signed(analytic_spread(module)?) - signed(e) + 1 - signed(h))
}

/// Checks `μ(E_p) = ht F_e(E) + e - 1` at every prime in `primes`.
fn gci_at(module: &ModuleSpec, e: usize, ht: usize, primes: &[Ideal]) -> Result<bool> {
    for p in primes {
        if mu_at_prime(module, p)? != ht + e - 1 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The generically-complete-intersection verdict for a non-free module.
pub fn generically_ci(module: &ModuleSpec, supplied: Option<&[Ideal]>) -> Result<GenericCi> {
    let (e, ht) = non_free_fitting_height(module, "generic complete intersection")?;
    let fe = fitting_ideal(module, e)?;
    if let Some(primes) = supplied {
        for p in primes {
            if !p.contains_ideal(&fe)? {
                return Err(Error::Input(format!("supplied prime {p} does not contain F_e(E)")));
            }
        }
        return Ok(GenericCi {
            value: Some(gci_at(module, e, ht, primes)?),
            basis: GciBasis::SuppliedPrimes,
            primes_checked: primes.len(),
        });
    }
    if is_monomial(&fe) {
        let primes = minimal_primes_monomial(&fe)?;
        return Ok(GenericCi {
            value: Some(gci_at(module, e, ht, &primes)?),
            basis: GciBasis::MinimalPrimes,
            primes_checked: primes.len(),
        });
    }
    Ok(GenericCi {
        value: None,
        basis: GciBasis::Undetermined,
        primes_checked: 0,
    })
}

/// The full invariant report.
pub fn classify(module: &ModuleSpec, opts: &ClassifyOptions) -> Result<InvariantReport> {
    let d = module.ring().nvars();
    let r = rank(module);
    let mu = mu_local(module)?;
    let fe = fitting_ideal(module, r)?;
    let ht_fe = fe.height();
    let spread = analytic_spread(module)?;
    let grade = grade_quotient(module)?;
    let free = fe.is_unit();
    let mut notes = vec!["ideal_module is relative to the embedding E ⊆ R^e".to_string()];
    if r < module.ambient_rank() {
        notes.push(format!(
            "rank {r} is below the ambient rank {}; formulas use e = {r}",
            module.ambient_rank()
        ));
    }

    let (deviation, analytic_deviation, ci, equi, gci) = match ht_fe {
        Height::Finite(h) => {
            let de = signed(mu) - signed(r) + 1 - signed(h);
            let ad = signed(spread) - signed(r) + 1 - signed(h);
            let gci = generically_ci(module, opts.primes.as_deref())?;
            if gci.basis == GciBasis::SuppliedPrimes {
                notes.push("generically_ci is relative to supplied primes".into());
            }
            (Some(de), Some(ad), Some(de == 0), Some(ad == 0), Some(gci))
        }
        Height::Infinite => (None, None, None, None, None),
    };

    let reduction = if opts.skip_reduction {
        None
    } else if !module.ring().field().is_infinite() {
        notes.push("generic reduction skipped: the coefficient field is finite".into());
        None
    } else {
        match generic_minimal_reduction(module, opts.reduction) {
            Ok(cert) => Some(cert),
            Err(Error::ReductionFailure { trials, rmax }) => {
                notes.push(format!(
                    "no verified generic reduction after {trials} trials (r <= {rmax})"
                ));
                None
            }
            Err(e) => return Err(e),
        }
    };

    Ok(InvariantReport {
        nvars: d,
        ambient_rank: module.ambient_rank(),
        num_generators: module.num_generators(),
        rank: r,
        mu,
        ht_fe,
        analytic_spread: spread,
        deviation,
        analytic_deviation,
        grade_quotient: grade,
        dim_quotient: dim_quotient(module)?,
        flags: Flags {
            trivially_free: free,
            ideal_module: grade >= Height::Finite(2),
            complete_intersection: ci,
            equimultiple: equi,
            generically_ci: gci,
            free_punctured_spectrum: is_free_on_punctured_spectrum(module)?,
            linear_type: is_linear_type(module)?,
        },
        reduction,
        notes,
    })
}

/// One flag of a report with the values it was derived from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlagProvenance {
    pub flag: String,
    pub value: String,
    pub reason: String,
}

fn show(v: Option<bool>) -> String {
    match v {
        Some(b) => b.to_string(),
        None => "undetermined".into(),
    }
}

/// Explains how each flag of `report` was obtained.
pub fn flag_provenance(report: &InvariantReport) -> Vec<FlagProvenance> {
    let f = &report.flags;
    let e = report.rank;
    let mut out = vec![
        FlagProvenance {
            flag: "trivially_free".into(),
            value: f.trivially_free.to_string(),
            reason: format!("F_{e}(E) = R iff E is free; ht F_{e}(E) = {}", report.ht_fe),
        },
        FlagProvenance {
            flag: "ideal_module".into(),
            value: f.ideal_module.to_string(),
            reason: format!(
                "grade G/E = ht I_e(psi) = {} (relative to the embedding)",
                report.grade_quotient
            ),
        },
    ];
    if let Some(de) = report.deviation {
        out.push(FlagProvenance {
            flag: "complete_intersection".into(),
            value: show(f.complete_intersection),
            reason: format!(
                "de(E) = mu - e + 1 - ht F_e = {} - {e} + 1 - {} = {de}",
                report.mu, report.ht_fe
            ),
        });
    }
    if let Some(ad) = report.analytic_deviation {
        out.push(FlagProvenance {
            flag: "equimultiple".into(),
            value: show(f.equimultiple),
            reason: format!(
                "ad(E) = l - e + 1 - ht F_e = {} - {e} + 1 - {} = {ad}",
                report.analytic_spread, report.ht_fe
            ),
        });
    }
    if let Some(g) = &f.generically_ci {
        let reason = match g.basis {
            GciBasis::MinimalPrimes => format!(
                "mu(E_p) = ht F_e + e - 1 checked at all {} minimal primes of the monomial ideal F_e(E)",
                g.primes_checked
            ),
            GciBasis::SuppliedPrimes => format!(
                "mu(E_p) = ht F_e + e - 1 checked at {} supplied primes only",
                g.primes_checked
            ),
            GciBasis::Undetermined => "F_e(E) is not monomial and no primes were supplied".into(),
        };
        out.push(FlagProvenance {
            flag: "generically_ci".into(),
            value: show(g.value),
            reason,
        });
    }
    out.push(FlagProvenance {
        flag: "free_punctured_spectrum".into(),
        value: f.free_punctured_spectrum.to_string(),
        reason: format!("true iff F_{e}(E) is m-primary or the unit ideal"),
    });
    out.push(FlagProvenance {
        flag: "linear_type".into(),
        value: f.linear_type.to_string(),
        reason: "true iff the Rees kernel equals the ideal of symmetric-algebra relations".into(),
    });
    out
}

/// `grade F_i(E) >= i - e + 2` for `e <= i <= e + s - 2`.
pub fn gs_tilde(module: &ModuleSpec, s: usize) -> Result<bool> {
    if s == 0 {
        return Err(Error::Input("s must be at least 1".into()));
    }
    let e = rank(module);
    for i in e..=e + s - 2 {
        if fitting_ideal(module, i)?.height() < Height::Finite(i - e + 2) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckStatus {
    Pass,
    Fail,
    /// Hypotheses not met; values are reported but nothing is asserted.
    Informational,
    /// Vacuous for free modules.
    Skipped,
}

impl CheckStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail => "fail",
            CheckStatus::Informational => "informational",
            CheckStatus::Skipped => "skipped",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DepthEntry {
    pub n: usize,
    /// `None` when `G^n = E^n`.
    pub depth: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BurchReport {
    pub status: CheckStatus,
    pub d: usize,
    pub e: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub analytic_spread: Option<usize>,
    pub depths: Vec<DepthEntry>,
    /// `d + e - 1 - min depth`.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub bound: Option<i64>,
    pub equality: bool,
}

/// `ℓ(E) <= d + e - 1 - min_{n <= nmax} depth G^n/E^n` for equimultiple `E`.
pub fn burch_check(module: &ModuleSpec, nmax: usize) -> Result<BurchReport> {
    let d = module.ring().nvars();
    let e = rank(module);
    if is_free(module)? {
        return Ok(BurchReport {
            status: CheckStatus::Skipped,
            d,
            e,
            analytic_spread: None,
            depths: Vec::new(),
            bound: None,
            equality: false,
        });
    }
    let spread = analytic_spread(module)?;
    let equimultiple = analytic_deviation(module)? == 0;
    let mut depths = Vec::new();
    for n in 1..=nmax {
        let power = rees_power(module, n)?;
        depths.push(DepthEntry {
            n,
            depth: cokernel_depth(power.psi())?,
        });
    }
    let min_depth = depths.iter().filter_map(|x| x.depth).min();
    let bound = min_depth.map(|m| signed(d) + signed(e) - 1 - signed(m));
    let holds = bound.is_none_or(|b| signed(spread) <= b);
    let status = match (equimultiple, holds) {
        (false, _) => CheckStatus::Informational,
        (true, true) => CheckStatus::Pass,
        (true, false) => CheckStatus::Fail,
    };
    Ok(BurchReport {
        status,
        d,
        e,
        analytic_spread: Some(spread),
        depths,
        bound,
        equality: bound == Some(signed(spread)),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossCheck {
    pub name: String,
    pub status: CheckStatus,
    pub detail: String,
}

/// Tests the flags of `report` against the two criteria relating complete
/// intersection, equimultiple, linear type and generic complete
/// intersection.
pub fn cieq_crosscheck(report: &InvariantReport) -> Vec<CrossCheck> {
    let f = &report.flags;
    let mut out = Vec::new();
    let status = |ok: bool| if ok { CheckStatus::Pass } else { CheckStatus::Fail };

    let (Some(ci), Some(eq)) = (f.complete_intersection, f.equimultiple) else {
        let skipped = |name: &str| CrossCheck {
            name: name.into(),
            status: CheckStatus::Skipped,
            detail: "free module".into(),
        };
        return vec![skipped("ci_iff_equimultiple"), skipped("ci_iff_equimultiple_and_linear_type")];
    };

    let gci = f.generically_ci.as_ref().and_then(|g| g.value);
    out.push(match gci {
        Some(true) => CrossCheck {
            name: "ci_iff_equimultiple".into(),
            status: status(ci == eq),
            detail: format!("generically ci; ci = {ci}, equimultiple = {eq}"),
        },
        Some(false) => CrossCheck {
            name: "ci_iff_equimultiple".into(),
            status: CheckStatus::Informational,
            detail: "not generically ci; the criterion does not apply".into(),
        },
        None => CrossCheck {
            name: "ci_iff_equimultiple".into(),
            status: CheckStatus::Informational,
            detail: "generically_ci undetermined".into(),
        },
    });

    let lt = f.linear_type;
    out.push(if f.ideal_module {
        CrossCheck {
            name: "ci_iff_equimultiple_and_linear_type".into(),
            status: status(ci == (eq && lt)),
            detail: format!("ci = {ci}, equimultiple = {eq}, linear_type = {lt}"),
        }
    } else {
        CrossCheck {
            name: "ci_iff_equimultiple_and_linear_type".into(),
            status: CheckStatus::Informational,
            detail: "not an ideal module; the criterion does not apply".into(),
        }
    });
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse_polynomial, PolyRing};
    use std::sync::Arc;

    fn spec(vars: &[&str], e: usize, cols: &[&[&str]]) -> ModuleSpec {
        let r = PolyRing::rationals(vars.iter().copied());
        let cols: Vec<Vec<String>> = cols
            .iter()
            .map(|c| c.iter().map(|s| s.to_string()).collect())
            .collect();
        ModuleSpec::parse(&r, e, &cols).unwrap()
    }

    fn prime_sum() -> ModuleSpec {
        spec(
            &["x1", "x2", "x3"],
            2,
            &[&["x1", "0"], &["x2", "0"], &["0", "x1"], &["0", "x3"]],
        )
    }

    fn mm() -> ModuleSpec {
        spec(&["x", "y"], 2, &[&["x", "0"], &["y", "0"], &["0", "x"], &["0", "y"]])
    }

    fn max_ideal() -> ModuleSpec {
        spec(&["x", "y"], 1, &[&["x"], &["y"]])
    }

    fn free_plus_ideal() -> ModuleSpec {
        spec(&["x", "y", "z"], 2, &[&["1", "0"], &["0", "x"], &["0", "y"]])
    }

    fn ideal(r: &Arc<PolyRing>, gens: &[&str]) -> Ideal {
        Ideal::new(r, gens.iter().map(|g| parse_polynomial(r, g).unwrap()).collect()).unwrap()
    }

    #[test]
    fn deviation_examples() {
        assert_eq!(deviation(&prime_sum()).unwrap(), 1);
        assert_eq!(analytic_deviation(&prime_sum()).unwrap(), 1);
        assert_eq!(deviation(&mm()).unwrap(), 1);
        assert_eq!(analytic_deviation(&mm()).unwrap(), 0);
        assert_eq!(deviation(&max_ideal()).unwrap(), 0);
        let r = PolyRing::rationals(["x", "y"]);
        assert!(matches!(
            deviation(&ModuleSpec::free(&r, 2).unwrap()),
            Err(Error::FreeModule(_))
        ));
    }

    #[test]
    fn classify_prime_sum() {
        let rep = classify(&prime_sum(), &ClassifyOptions::default()).unwrap();
        assert_eq!(rep.analytic_spread, 4);
        assert_eq!(rep.analytic_deviation, Some(1));
        assert_eq!(rep.reduction_number(), Some(0));
        assert_eq!(rep.ht_fe, Height::Finite(2));
        assert_eq!(rep.flags.complete_intersection, Some(false));
        assert_eq!(rep.flags.equimultiple, Some(false));
        let gci = rep.flags.generically_ci.clone().unwrap();
        assert_eq!(gci.value, Some(true));
        assert_eq!(gci.basis, GciBasis::MinimalPrimes);
        assert!(cieq_crosscheck(&rep).iter().all(|c| c.status != CheckStatus::Fail));
    }

    #[test]
    fn classify_direct_sum() {
        let rep = classify(&mm(), &ClassifyOptions::default()).unwrap();
        assert_eq!(rep.flags.complete_intersection, Some(false));
        assert_eq!(rep.flags.equimultiple, Some(true));
        assert_eq!(rep.reduction_number(), Some(1));
        assert_eq!(rep.analytic_spread, 3);
        assert!(!rep.flags.linear_type);
        let checks = cieq_crosscheck(&rep);
        assert!(checks.iter().any(|c| c.name == "ci_iff_equimultiple_and_linear_type" && c.status == CheckStatus::Pass));
    }

    #[test]
    fn classify_free_plus_ci_ideal() {
        let rep = classify(&free_plus_ideal(), &ClassifyOptions::default()).unwrap();
        assert_eq!(rep.flags.complete_intersection, Some(true));
        let rep = classify(&max_ideal(), &ClassifyOptions::default()).unwrap();
        assert_eq!(rep.flags.complete_intersection, Some(true));
        assert!(rep.flags.linear_type);
    }

    #[test]
    fn classify_free_module() {
        let r = PolyRing::rationals(["x", "y"]);
        let rep = classify(&ModuleSpec::free(&r, 2).unwrap(), &ClassifyOptions::default()).unwrap();
        assert!(rep.flags.trivially_free);
        assert_eq!(rep.flags.complete_intersection, None);
        assert_eq!(rep.deviation, None);
        assert_eq!(rep.ht_fe, Height::Infinite);
        assert!(cieq_crosscheck(&rep).iter().all(|c| c.status == CheckStatus::Skipped));
    }

    #[test]
    fn supplied_primes() {
        let e = prime_sum();
        let r = e.ring().clone();
        let opts = ClassifyOptions {
            primes: Some(vec![ideal(&r, &["x1", "x2"])]),
            ..ClassifyOptions::default()
        };
        let rep = classify(&e, &opts).unwrap();
        let gci = rep.flags.generically_ci.unwrap();
        assert_eq!(gci.basis, GciBasis::SuppliedPrimes);
        assert_eq!(gci.value, Some(true));
        assert!(rep.notes.iter().any(|n| n.contains("supplied primes")));
        let bad = ClassifyOptions {
            primes: Some(vec![ideal(&r, &["x2"])]),
            ..ClassifyOptions::default()
        };
        assert!(classify(&e, &bad).is_err());
    }

    #[test]
    fn gs_tilde_examples() {
        let r = PolyRing::rationals(["x", "y"]);
        let free = ModuleSpec::free(&r, 2).unwrap();
        for s in 1..5 {
            assert!(gs_tilde(&free, s).unwrap());
        }
        let i = spec(&["x", "y", "z"], 1, &[&["x"], &["y"]]);
        assert!(gs_tilde(&i, 2).unwrap());
        assert!(!gs_tilde(&mm(), 3).unwrap());
    }

    #[test]
    fn burch_examples() {
        let rep = burch_check(&mm(), 3).unwrap();
        assert_eq!(rep.status, CheckStatus::Pass);
        assert!(rep.equality);
        assert_eq!(rep.bound, Some(3));
        assert!(rep.depths.iter().all(|x| x.depth == Some(0)));

        let r = PolyRing::rationals(["x", "y"]);
        assert_eq!(
            burch_check(&ModuleSpec::free(&r, 2).unwrap(), 2).unwrap().status,
            CheckStatus::Skipped
        );
        assert_eq!(burch_check(&prime_sum(), 1).unwrap().status, CheckStatus::Informational);
    }

    #[test]
    fn provenance_lists_every_flag() {
        let rep = classify(&mm(), &ClassifyOptions::default()).unwrap();
        let names: Vec<String> = flag_provenance(&rep).into_iter().map(|p| p.flag).collect();
        assert_eq!(
            names,
            [
                "trivially_free",
                "ideal_module",
                "complete_intersection",
                "equimultiple",
                "generically_ci",
                "free_punctured_spectrum",
                "linear_type"
            ]
        );
    }
}
