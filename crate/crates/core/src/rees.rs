//! Rees algebras of modules: the presentation kernel, fiber cone, analytic
//! spread, Rees powers `E^n` and the linear-type test.
//!
//! `R(E)` is the subalgebra of `R[t_1..t_e]` generated by the linear forms
//! `sum_i psi_ij t_i`. Its degree-`n` piece `E^n` is a submodule of the free
//! module of degree-`n` forms in `t`, whose basis is ordered descending
//! lexicographically (`t_1^n` first).

use std::collections::{BTreeMap, HashSet};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::invariants::ModuleSpec;
use crate::poly::{PolyRing, Polynomial};

/// `R(E) = k[x][y]/J` together with the fiber cone `F(E) = k[y]/J̄`.
#[derive(Clone, Debug)]
pub struct ReesData {
    base: Arc<PolyRing>,
    ring: Arc<PolyRing>,
    fiber_ring: Arc<PolyRing>,
    kernel: Ideal,
    fiber: Ideal,
}

impl ReesData {
    /// `k[x]`.
    pub fn base(&self) -> &Arc<PolyRing> {
        &self.base
    }

    /// `k[x, y_1..y_n]`.
    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    /// `k[y_1..y_n]`.
    pub fn fiber_ring(&self) -> &Arc<PolyRing> {
        &self.fiber_ring
    }

    /// `J`, in `k[x, y]`.
    pub fn kernel(&self) -> &Ideal {
        &self.kernel
    }

    /// `J̄`, in `k[y]`.
    pub fn fiber(&self) -> &Ideal {
        &self.fiber
    }

    /// Reduced Gröbner basis of `J`.
    pub fn kernel_generators(&self) -> Vec<Polynomial> {
        self.kernel.reduced_basis()
    }

    /// `dim k[y]/J̄`.
    pub fn fiber_dimension(&self) -> usize {
        self.fiber.dimension().max(0) as usize
    }
}

/// The kernel of `k[x][y] -> k[x][t]`, `y_j -> sum_i psi_ij t_i`, for the
/// generating set [`ModuleSpec::generating_columns`].
pub fn rees_kernel(module: &ModuleSpec) -> Result<ReesData> {
    let base = module.ring().clone();
    let d = base.nvars();
    let e = module.ambient_rank();
    let gens = module.generating_columns();
    let n = gens.len();

    let y_names = base.fresh_names("y", n);
    let with_y = base.extend(&y_names)?;
    let t_names = with_y.fresh_names("t", e);
    let mut all = t_names.clone();
    all.extend(y_names.iter().cloned());
    let big = base.extend(&all)?;

    let t = |i: usize| Polynomial::var(&big, d + i);
    let y = |j: usize| Polynomial::var(&big, d + e + j);
    let relations: Vec<Polynomial> = gens
        .iter()
        .enumerate()
        .map(|(j, col)| {
            let mut f = y(j);
            for (i, entry) in col.iter().enumerate() {
                if !entry.is_zero() {
                    f = &f - &(&entry.embed(&big) * &t(i));
                }
            }
            f
        })
        .collect();
    let t_block: Vec<usize> = (d..d + e).collect();
    let eliminated = Ideal::new(&big, relations)?.eliminate(&t_block)?;

    let map: Vec<Option<usize>> = (0..d + e + n)
        .map(|v| match v {
            v if v < d => Some(v),
            v if v < d + e => None,
            v => Some(v - e),
        })
        .collect();
    let kernel_gens = eliminated
        .generators()
        .iter()
        .map(|g| g.remap(&with_y, &map))
        .collect::<Result<Vec<_>>>()?;
    let kernel = Ideal::new(&with_y, kernel_gens)?;

    let fiber_ring = PolyRing::new(y_names, base.field())?;
    let to_fiber: Vec<Option<usize>> = (0..d + n)
        .map(|v| if v < d { None } else { Some(v - d) })
        .collect();
    let x_block: Vec<usize> = (0..d).collect();
    let fiber_gens = kernel
        .generators()
        .iter()
        .map(|g| g.substitute_zero(&x_block)?.remap(&fiber_ring, &to_fiber))
        .collect::<Result<Vec<_>>>()?;
    let fiber = Ideal::new(&fiber_ring, fiber_gens)?;

    Ok(ReesData {
        base,
        ring: with_y,
        fiber_ring,
        kernel,
        fiber,
    })
}

/// `ℓ(E) = dim F(E)`, computed in the graded local ring.
pub fn analytic_spread(module: &ModuleSpec) -> Result<usize> {
    if !module.is_homogeneous() {
        return Err(Error::NotHomogeneous(
            "analytic spread needs a homogeneous generator matrix".into(),
        ));
    }
    Ok(rees_kernel(module)?.fiber_dimension())
}

/// The symmetric-algebra relations `sum_j phi_jk y_j` inside `k[x, y]`.
pub fn symmetric_relations(module: &ModuleSpec, rees: &ReesData) -> Result<Ideal> {
    let ring = rees.ring();
    let d = rees.base().nvars();
    let phi = module.presentation();
    let gens = phi
        .columns()
        .iter()
        .map(|col| {
            col.iter().enumerate().fold(Polynomial::zero(ring), |acc, (j, p)| {
                &acc + &(&p.embed(ring) * &Polynomial::var(ring, d + j))
            })
        })
        .collect();
    Ideal::new(ring, gens)
}

/// `R(E) = Sym(E)`: the Rees kernel is generated by its part of degree one
/// in `y`.
pub fn is_linear_type(module: &ModuleSpec) -> Result<bool> {
    let rees = rees_kernel(module)?;
    let sym = symmetric_relations(module, &rees)?;
    sym.contains_ideal(rees.kernel())
}

/// Exponent vectors of the degree-`n` monomials in `e` variables, descending
/// lexicographically.
pub fn degree_basis(e: usize, n: usize) -> Vec<Vec<u32>> {
    fn go(e: usize, n: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if prefix.len() + 1 == e {
            prefix.push(n);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for k in (0..=n).rev() {
            prefix.push(k);
            go(e, n - k, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(e, n as u32, &mut Vec::new(), &mut out);
    out
}

/// `binom(n + e - 1, e - 1)`, the rank of the free module of degree-`n`
/// forms in `e` variables.
pub fn power_rank(e: usize, n: usize) -> usize {
    let mut acc: u128 = 1;
    for i in 0..e.saturating_sub(1) {
        acc = acc * (n + e - 1 - i) as u128 / (i + 1) as u128;
    }
    acc as usize
}

/// Number of products of `count` generators taken `n` at a time with
/// repetition.
pub fn product_count(count: usize, n: usize) -> usize {
    if count == 0 {
        return 0;
    }
    power_rank(count, n)
}

/// A form in `t` with coefficients in `R`.
type Form = BTreeMap<Vec<u32>, Polynomial>;

fn linear_form(col: &[Polynomial]) -> Form {
    let e = col.len();
    col.iter()
        .enumerate()
        .filter(|(_, p)| !p.is_zero())
        .map(|(i, p)| {
            let mut exp = vec![0; e];
            exp[i] = 1;
            (exp, p.clone())
        })
        .collect()
}

fn mul_forms(a: &Form, b: &Form) -> Form {
    let mut out: Form = BTreeMap::new();
    for (ea, pa) in a {
        for (eb, pb) in b {
            let exp: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            let prod = pa * pb;
            let slot = out.entry(exp).or_insert_with(|| Polynomial::zero(pa.ring()));
            *slot = &*slot + &prod;
        }
    }
    out.retain(|_, p| !p.is_zero());
    out
}

fn form_to_column(ring: &Arc<PolyRing>, form: &Form, basis: &[Vec<u32>]) -> Vec<Polynomial> {
    basis
        .iter()
        .map(|m| form.get(m).cloned().unwrap_or_else(|| Polynomial::zero(ring)))
        .collect()
}

fn unit_form(ring: &Arc<PolyRing>, e: usize) -> Form {
    BTreeMap::from([(vec![0; e], Polynomial::one(ring))])
}

/// All products of `n` forms chosen with repetition, in lexicographic order
/// of the index multisets.
fn products(ring: &Arc<PolyRing>, e: usize, forms: &[Form], n: usize) -> Vec<Form> {
    fn go(forms: &[Form], start: usize, left: usize, acc: &Form, out: &mut Vec<Form>) {
        if left == 0 {
            out.push(acc.clone());
            return;
        }
        for k in start..forms.len() {
            let next = mul_forms(acc, &forms[k]);
            go(forms, k, left - 1, &next, out);
        }
    }
    let mut out = Vec::new();
    go(forms, 0, n, &unit_form(ring, e), &mut out);
    out
}

fn module_from_forms(ring: &Arc<PolyRing>, e: usize, degree: usize, forms: Vec<Form>) -> Result<ModuleSpec> {
    let basis = degree_basis(e, degree);
    let mut seen = HashSet::new();
    let mut cols = Vec::new();
    for f in forms {
        if f.is_empty() {
            continue;
        }
        let col = form_to_column(ring, &f, &basis);
        if seen.insert(col.clone()) {
            cols.push(col);
        }
    }
    if cols.is_empty() {
        cols.push(vec![Polynomial::zero(ring); basis.len()]);
    }
    ModuleSpec::new(ring, basis.len(), cols)
}

/// `E^n`, generated by the `n`-fold products of the generator forms.
pub fn rees_power(module: &ModuleSpec, n: usize) -> Result<ModuleSpec> {
    if n == 0 {
        return Err(Error::Input("Rees powers start at n = 1".into()));
    }
    let forms: Vec<Form> = module
        .generating_columns()
        .iter()
        .map(|c| linear_form(c))
        .collect();
    let (ring, e) = (module.ring(), module.ambient_rank());
    module_from_forms(ring, e, n, products(ring, e, &forms, n))
}

/// `U · E^r` inside `E^(r+1)`; `r = 0` gives `U`.
pub fn product_power(u: &ModuleSpec, module: &ModuleSpec, r: usize) -> Result<ModuleSpec> {
    if u.ambient_rank() != module.ambient_rank() {
        return Err(Error::RankMismatch(u.ambient_rank(), module.ambient_rank()));
    }
    let u_forms: Vec<Form> = u.generating_columns().iter().map(|c| linear_form(c)).collect();
    let e_forms: Vec<Form> = module
        .generating_columns()
        .iter()
        .map(|c| linear_form(c))
        .collect();
    let (ring, e) = (module.ring(), module.ambient_rank());
    let powers = products(ring, e, &e_forms, r);
    let mut out = Vec::new();
    for a in &u_forms {
        for b in &powers {
            out.push(mul_forms(a, b));
        }
    }
    module_from_forms(ring, e, r + 1, out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::{matrix_rank, rank};
    use crate::poly::parse_polynomial;

    fn spec(vars: &[&str], e: usize, cols: &[&[&str]]) -> ModuleSpec {
        let r = PolyRing::rationals(vars.iter().copied());
        let cols: Vec<Vec<String>> = cols
            .iter()
            .map(|c| c.iter().map(|s| s.to_string()).collect())
            .collect();
        ModuleSpec::parse(&r, e, &cols).unwrap()
    }

    fn mm() -> ModuleSpec {
        spec(&["x", "y"], 2, &[&["x", "0"], &["y", "0"], &["0", "x"], &["0", "y"]])
    }

    fn prime_sum() -> ModuleSpec {
        spec(
            &["x1", "x2", "x3"],
            2,
            &[&["x1", "0"], &["x2", "0"], &["0", "x1"], &["0", "x3"]],
        )
    }

    fn ideal(r: &Arc<PolyRing>, gens: &[&str]) -> Ideal {
        Ideal::new(r, gens.iter().map(|g| parse_polynomial(r, g).unwrap()).collect()).unwrap()
    }

    #[test]
    fn kernel_of_maximal_ideal() {
        let e = spec(&["x", "y"], 1, &[&["x"], &["y"]]);
        let rees = rees_kernel(&e).unwrap();
        assert_eq!(rees.ring().variables(), ["x", "y", "y1", "y2"]);
        let expected = ideal(rees.ring(), &["y*y1 - x*y2"]);
        assert!(rees.kernel().equals(&expected).unwrap());
        assert_eq!(analytic_spread(&e).unwrap(), 2);
    }

    #[test]
    fn kernel_of_free_module() {
        let r = PolyRing::rationals(["x", "y"]);
        let free = ModuleSpec::free(&r, 3).unwrap();
        let rees = rees_kernel(&free).unwrap();
        assert!(rees.kernel().is_zero());
        assert_eq!(analytic_spread(&free).unwrap(), 3);
    }

    #[test]
    fn kernel_of_direct_sum() {
        let rees = rees_kernel(&mm()).unwrap();
        let expected = ideal(
            rees.ring(),
            &["y*y1 - x*y2", "y*y3 - x*y4", "y1*y4 - y2*y3"],
        );
        assert!(rees.kernel().equals(&expected).unwrap());
        assert_eq!(rees.fiber_dimension(), 3);
    }

    #[test]
    fn kernel_is_sound() {
        for m in [mm(), prime_sum()] {
            let rees = rees_kernel(&m).unwrap();
            let base = m.ring();
            let t_ring = base.extend(&base.fresh_names("t", m.ambient_rank())).unwrap();
            let d = base.nvars();
            let mut images: Vec<Polynomial> = (0..d).map(|v| Polynomial::var(&t_ring, v)).collect();
            for col in m.generating_columns() {
                let f = col.iter().enumerate().fold(Polynomial::zero(&t_ring), |acc, (i, p)| {
                    &acc + &(&p.embed(&t_ring) * &Polynomial::var(&t_ring, d + i))
                });
                images.push(f);
            }
            for g in rees.kernel().generators() {
                assert!(g.substitute(&t_ring, &images).is_zero());
            }
            for g in rees.fiber().generators() {
                assert!(Arc::ptr_eq(g.ring(), rees.fiber_ring()));
            }
        }
    }

    #[test]
    fn spread_examples() {
        assert_eq!(analytic_spread(&prime_sum()).unwrap(), 4);
        assert_eq!(analytic_spread(&mm()).unwrap(), 3);
        let bad = spec(&["x", "y"], 1, &[&["x + y^2"]]);
        assert!(matches!(analytic_spread(&bad), Err(Error::NotHomogeneous(_))));
    }

    #[test]
    fn linear_type_examples() {
        let r = PolyRing::rationals(["x", "y"]);
        assert!(is_linear_type(&ModuleSpec::free(&r, 2).unwrap()).unwrap());
        assert!(is_linear_type(&spec(&["x", "y"], 1, &[&["x"], &["y"]])).unwrap());
        assert!(!is_linear_type(&mm()).unwrap());
    }

    #[test]
    fn degree_basis_order() {
        assert_eq!(
            degree_basis(2, 2),
            vec![vec![2, 0], vec![1, 1], vec![0, 2]]
        );
        assert_eq!(degree_basis(3, 2).len(), 6);
        assert_eq!(degree_basis(3, 2)[0], vec![2, 0, 0]);
        assert_eq!(power_rank(3, 2), 6);
        assert_eq!(power_rank(1, 5), 1);
        assert_eq!(product_count(4, 2), 10);
    }

    #[test]
    fn first_power_is_the_module() {
        let m = mm();
        let p = rees_power(&m, 1).unwrap();
        assert!(p.submodule().equals(&m.submodule()).unwrap());
        assert!(rees_power(&m, 0).is_err());
    }

    #[test]
    fn powers_of_free_plus_ideal() {
        // E = R ⊕ (x,y): E^2 = R t1^2 ⊕ (x,y) t1 t2 ⊕ (x,y)^2 t2^2
        let e = spec(&["x", "y"], 2, &[&["1", "0"], &["0", "x"], &["0", "y"]]);
        let sq = rees_power(&e, 2).unwrap();
        let expected = spec(
            &["x", "y"],
            3,
            &[
                &["1", "0", "0"],
                &["0", "x", "0"],
                &["0", "y", "0"],
                &["0", "0", "x^2"],
                &["0", "0", "x*y"],
                &["0", "0", "y^2"],
            ],
        );
        assert!(sq.submodule().equals(&expected.submodule()).unwrap());
    }

    #[test]
    fn square_of_direct_sum() {
        let sq = rees_power(&mm(), 2).unwrap();
        assert_eq!(sq.ambient_rank(), 3);
        assert_eq!(rank(&sq), 3);
        assert_eq!(matrix_rank(sq.psi()), 3);
    }

    #[test]
    fn product_power_examples() {
        let m = mm();
        assert!(product_power(&m, &m, 0).unwrap().submodule().equals(&m.submodule()).unwrap());
        for r in 1..=2 {
            let ue = product_power(&m, &m, r).unwrap();
            let next = rees_power(&m, r + 1).unwrap();
            assert!(ue.submodule().equals(&next.submodule()).unwrap());
        }
    }
}
