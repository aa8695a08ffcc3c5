//! Ideals of a polynomial ring with a cached reduced Gröbner basis.

use std::fmt;
use std::sync::{Arc, OnceLock};

use super::buchberger::GroebnerBasis;
use super::dimension::{dimension_of_leading_ideal, Height};
use crate::error::{Error, Result};
use crate::poly::{same_ring, ModuleOrder, MonomialOrder, PolyRing, Polynomial};

#[derive(Clone, Debug)]
pub struct Ideal {
    ring: Arc<PolyRing>,
    generators: Vec<Polynomial>,
    gb: OnceLock<GroebnerBasis>,
}

impl Ideal {
    /// The ideal generated by `generators`; zero generators are dropped.
    pub fn new(ring: &Arc<PolyRing>, generators: Vec<Polynomial>) -> Result<Self> {
        if generators.iter().any(|g| !same_ring(g.ring(), ring)) {
            return Err(Error::RingMismatch);
        }
        Ok(Ideal {
            ring: ring.clone(),
            generators: generators.into_iter().filter(|g| !g.is_zero()).collect(),
            gb: OnceLock::new(),
        })
    }

    pub fn zero(ring: &Arc<PolyRing>) -> Self {
        Ideal {
            ring: ring.clone(),
            generators: Vec::new(),
            gb: OnceLock::new(),
        }
    }

    pub fn unit(ring: &Arc<PolyRing>) -> Self {
        Ideal {
            ring: ring.clone(),
            generators: vec![Polynomial::one(ring)],
            gb: OnceLock::new(),
        }
    }

    /// The ideal generated by the listed variables.
    pub fn of_variables(ring: &Arc<PolyRing>, vars: &[usize]) -> Self {
        Ideal {
            ring: ring.clone(),
            generators: vars.iter().map(|&v| Polynomial::var(ring, v)).collect(),
            gb: OnceLock::new(),
        }
    }

    /// The homogeneous maximal ideal `(x_1, ..., x_d)`.
    pub fn maximal(ring: &Arc<PolyRing>) -> Self {
        let vars: Vec<usize> = (0..ring.nvars()).collect();
        Self::of_variables(ring, &vars)
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    fn columns(&self) -> Vec<Vec<Polynomial>> {
        self.generators.iter().map(|g| vec![g.clone()]).collect()
    }

    /// The reduced Gröbner basis under grevlex, computed once.
    pub fn groebner(&self) -> &GroebnerBasis {
        self.gb.get_or_init(|| {
            GroebnerBasis::compute(
                &self.ring,
                1,
                &self.columns(),
                ModuleOrder::top(MonomialOrder::Grevlex),
            )
        })
    }

    pub fn groebner_with(&self, order: MonomialOrder) -> GroebnerBasis {
        if order == MonomialOrder::Grevlex {
            return self.groebner().clone();
        }
        GroebnerBasis::compute(&self.ring, 1, &self.columns(), ModuleOrder::top(order))
    }

    /// Elements of the reduced grevlex basis.
    pub fn reduced_basis(&self) -> Vec<Polynomial> {
        self.groebner()
            .elements()
            .into_iter()
            .map(|mut v| v.remove(0))
            .collect()
    }

    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        if !same_ring(f.ring(), &self.ring) {
            return Err(Error::RingMismatch);
        }
        Ok(self.groebner().normal_form(std::slice::from_ref(f)).remove(0))
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        if !same_ring(f.ring(), &self.ring) {
            return Err(Error::RingMismatch);
        }
        Ok(f.is_zero() || self.groebner().contains(std::slice::from_ref(f)))
    }

    pub fn contains_ideal(&self, other: &Ideal) -> Result<bool> {
        for g in &other.generators {
            if !self.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Equality of ideals by mutual generator membership.
    pub fn equals(&self, other: &Ideal) -> Result<bool> {
        Ok(self.contains_ideal(other)? && other.contains_ideal(self)?)
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.groebner().is_everything()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.generators.iter().all(Polynomial::is_homogeneous)
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        if !same_ring(&self.ring, &other.ring) {
            return Err(Error::RingMismatch);
        }
        Ideal::new(
            &self.ring,
            self.generators.iter().chain(&other.generators).cloned().collect(),
        )
    }

    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        if !same_ring(&self.ring, &other.ring) {
            return Err(Error::RingMismatch);
        }
        let mut gens = Vec::new();
        for a in &self.generators {
            for b in &other.generators {
                gens.push(a * b);
            }
        }
        Ideal::new(&self.ring, gens)
    }

    /// Krull dimension of `R/I`; `-1` for the unit ideal.
    pub fn dimension(&self) -> i64 {
        if self.is_unit() {
            return -1;
        }
        let leads: Vec<_> = self
            .groebner()
            .leading_terms()
            .into_iter()
            .map(|(m, _)| m)
            .collect();
        dimension_of_leading_ideal(self.ring.nvars(), &leads) as i64
    }

    /// `nvars - dim R/I`, or [`Height::Infinite`] for the unit ideal.
    pub fn height(&self) -> Height {
        match self.dimension() {
            d if d < 0 => Height::Infinite,
            d => Height::Finite(self.ring.nvars() - d as usize),
        }
    }

    /// `f` lies in the radical of `I`, decided by testing whether
    /// `I + (1 - z f)` is the unit ideal in `R[z]`.
    pub fn radical_contains(&self, f: &Polynomial) -> Result<bool> {
        if self.contains(f)? {
            return Ok(true);
        }
        let z = self.ring.fresh_names("z", 1);
        let big = self.ring.extend(&z)?;
        let zf = &Polynomial::var(&big, self.ring.nvars()) * &f.embed(&big);
        let mut gens: Vec<Polynomial> = self.generators.iter().map(|g| g.embed(&big)).collect();
        gens.push(&Polynomial::one(&big) - &zf);
        Ok(Ideal::new(&big, gens)?.is_unit())
    }

    /// Every generator of `other` lies in the radical of `self`.
    pub fn radical_contains_ideal(&self, other: &Ideal) -> Result<bool> {
        // the reduced basis is usually shorter than the generator list
        for g in other.reduced_basis() {
            if !self.radical_contains(&g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `sqrt(self) == sqrt(other)`.
    pub fn radical_equals(&self, other: &Ideal) -> Result<bool> {
        Ok(self.radical_contains_ideal(other)? && other.radical_contains_ideal(self)?)
    }

    /// `I ∩ k[variables not in block]`, returned inside the same ring.
    pub fn eliminate(&self, block: &[usize]) -> Result<Ideal> {
        let n = self.ring.nvars();
        if let Some(&bad) = block.iter().find(|&&v| v >= n) {
            return Err(Error::Input(format!("variable index {bad} out of range")));
        }
        if block.is_empty() {
            return Ok(self.clone());
        }
        // Reorder so the block comes first, then use a two-block order.
        let mut in_block = vec![false; n];
        for &v in block {
            in_block[v] = true;
        }
        let order: Vec<usize> = (0..n)
            .filter(|&v| in_block[v])
            .chain((0..n).filter(|&v| !in_block[v]))
            .collect();
        let names: Vec<String> = order
            .iter()
            .map(|&v| self.ring.variables()[v].clone())
            .collect();
        let reordered = PolyRing::new(names, self.ring.field())?;
        let mut forward = vec![None; n];
        let mut backward = vec![None; n];
        for (new, &old) in order.iter().enumerate() {
            forward[old] = Some(new);
            backward[new] = Some(old);
        }
        let gens = self
            .generators
            .iter()
            .map(|g| g.remap(&reordered, &forward))
            .collect::<Result<Vec<_>>>()?;
        let gb = GroebnerBasis::compute(
            &reordered,
            1,
            &gens.into_iter().map(|g| vec![g]).collect::<Vec<_>>(),
            ModuleOrder::top(MonomialOrder::Block {
                split: block.len(),
            }),
        );
        let keep: Vec<bool> = (0..n).map(|i| i >= block.len()).collect();
        let kept = gb
            .elements()
            .into_iter()
            .map(|mut v| v.remove(0))
            .filter(|g| g.uses_only(&keep))
            .map(|g| g.remap(&self.ring, &backward))
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(&self.ring, kept)
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.generators.iter().map(ToString::to_string).collect();
        write!(f, "({})", gens.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_polynomial;

    fn ideal(ring: &Arc<PolyRing>, gens: &[&str]) -> Ideal {
        Ideal::new(
            ring,
            gens.iter().map(|g| parse_polynomial(ring, g).unwrap()).collect(),
        )
        .unwrap()
    }

    fn basis_strings(i: &Ideal) -> Vec<String> {
        i.reduced_basis().iter().map(ToString::to_string).collect()
    }

    #[test]
    fn groebner_examples() {
        let r = PolyRing::rationals(["x", "y"]);
        assert_eq!(basis_strings(&ideal(&r, &["x"])), ["x"]);
        assert_eq!(basis_strings(&ideal(&r, &["x + y", "x - y"])), ["y", "x"]);
    }

    #[test]
    fn three_generator_rees_relations_form_a_basis() {
        let r = PolyRing::rationals(["x", "y", "u1", "u2", "v1", "v2"]);
        let gens = ["y*u1 - x*u2", "y*v1 - x*v2", "u1*v2 - u2*v1"];
        let i = ideal(&r, &gens);
        let gb = i.groebner_with(MonomialOrder::Lex);
        assert!(gb.check_s_pairs());
        // The lex basis is the input (up to sign normalisation).
        let mut got: Vec<String> = gb.elements().into_iter().map(|v| v[0].to_string()).collect();
        got.sort();
        let mut want: Vec<String> = ["-x*u2 + y*u1", "-x*v2 + y*v1", "u1*v2 - u2*v1"]
            .iter()
            .map(|s| parse_polynomial(&r, s).unwrap().monic(MonomialOrder::Lex).to_string())
            .collect();
        want.sort();
        assert_eq!(got, want);
    }

    #[test]
    fn membership_examples() {
        let r = PolyRing::rationals(["x", "y"]);
        let x = ideal(&r, &["x"]);
        let p = |s: &str| parse_polynomial(&r, s).unwrap();
        assert!(x.normal_form(&p("x^2")).unwrap().is_zero());
        assert!(x.contains(&p("x^2")).unwrap());
        assert_eq!(x.normal_form(&p("y")).unwrap(), p("y"));
        assert!(!x.contains(&p("y")).unwrap());
        let j = ideal(&r, &["x^2", "x*y - y^2"]);
        assert!(!j.contains(&p("x*y")).unwrap());
        assert!(j.contains(&p("y^3")).unwrap());
    }

    #[test]
    fn elimination_examples() {
        let r = PolyRing::rationals(["t", "x", "y"]);
        let i = ideal(&r, &["t - x", "y - t^2"]);
        let e = i.eliminate(&[0]).unwrap();
        assert!(e.equals(&ideal(&r, &["y - x^2"])).unwrap());
        let k = ideal(&r, &["x*t"]).eliminate(&[0]).unwrap();
        assert!(k.is_zero());

        let r = PolyRing::rationals(["x", "y", "t", "u", "v"]);
        let rees = ideal(&r, &["u - x*t", "v - y*t"]).eliminate(&[2]).unwrap();
        assert!(rees.equals(&ideal(&r, &["y*u - x*v"])).unwrap());
        for g in rees.generators() {
            assert!(!g.support().contains(&2));
        }
    }

    #[test]
    fn dimension_and_height() {
        let r = PolyRing::rationals(["x1", "x2", "x3"]);
        let i = ideal(&r, &["x1", "x2"]);
        assert_eq!(i.dimension(), 1);
        assert_eq!(i.height(), Height::Finite(2));
        let f2 = ideal(&r, &["x1^2", "x1*x2", "x1*x3", "x2*x3"]);
        assert_eq!(f2.height(), Height::Finite(2));
        let z = Ideal::zero(&r);
        assert_eq!(z.dimension(), 3);
        assert_eq!(z.height(), Height::Finite(0));
        let u = ideal(&r, &["x1 + 1", "x1"]);
        assert_eq!(u.dimension(), -1);
        assert_eq!(u.height(), Height::Infinite);
    }

    #[test]
    fn radical_membership_examples() {
        let r = PolyRing::rationals(["x", "y"]);
        let p = |s: &str| parse_polynomial(&r, s).unwrap();
        assert!(ideal(&r, &["x^2*y^2"]).radical_contains(&p("x*y")).unwrap());
        assert!(!ideal(&r, &["y"]).radical_contains(&p("x")).unwrap());
        let r3 = PolyRing::rationals(["x1", "x2", "x3"]);
        let f2 = ideal(&r3, &["x1^2", "x1*x2", "x1*x3", "x2*x3"]);
        let f = parse_polynomial(&r3, "x1*x2*x3").unwrap();
        assert!(f2.radical_contains(&f).unwrap());
        assert!(!f2.radical_contains(&parse_polynomial(&r3, "x2").unwrap()).unwrap());
    }
}
