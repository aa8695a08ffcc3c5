//! Sparse multivariate polynomials with exact coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use super::field::{FieldSpec, Scalar};
use super::monomial::{Monomial, MonomialOrder};
use crate::error::{Error, Result};

/// `k[v_1, ..., v_n]` with named variables.
#[derive(Debug, PartialEq, Eq, Hash)]
pub struct PolyRing {
    variables: Vec<String>,
    field: FieldSpec,
}

impl PolyRing {
    pub fn new<S: Into<String>>(
        variables: impl IntoIterator<Item = S>,
        field: FieldSpec,
    ) -> Result<Arc<Self>> {
        let variables: Vec<String> = variables.into_iter().map(Into::into).collect();
        if variables.is_empty() {
            return Err(Error::Input("a ring needs at least one variable".into()));
        }
        for (i, v) in variables.iter().enumerate() {
            let valid = v
                .chars()
                .next()
                .is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
                && v.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
            if !valid {
                return Err(Error::Input(format!("invalid variable name {v:?}")));
            }
            if variables[..i].contains(v) {
                return Err(Error::Input(format!("duplicate variable name {v:?}")));
            }
        }
        Ok(Arc::new(PolyRing { variables, field }))
    }

    pub fn rationals<S: Into<String>>(variables: impl IntoIterator<Item = S>) -> Arc<Self> {
        Self::new(variables, FieldSpec::Rationals).expect("valid variable names")
    }

    pub fn nvars(&self) -> usize {
        self.variables.len()
    }

    pub fn variables(&self) -> &[String] {
        &self.variables
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.variables.iter().position(|v| v == name)
    }

    /// Picks `count` fresh variable names `{stem}{i}` that avoid every
    /// existing name (underscores are prepended until they do).
    pub fn fresh_names(&self, stem: &str, count: usize) -> Vec<String> {
        let mut prefix = stem.to_string();
        loop {
            let names: Vec<String> = (1..=count).map(|i| format!("{prefix}{i}")).collect();
            if names.iter().all(|n| !self.variables.contains(n)) {
                return names;
            }
            prefix.insert(0, '_');
        }
    }

    /// A ring with `extra` variables appended after the existing ones.
    pub fn extend(&self, extra: &[String]) -> Result<Arc<PolyRing>> {
        PolyRing::new(
            self.variables.iter().cloned().chain(extra.iter().cloned()),
            self.field,
        )
    }
}

/// Checks that two ring handles describe the same ring.
pub fn same_ring(a: &Arc<PolyRing>, b: &Arc<PolyRing>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

/// A polynomial, stored as a map from monomials to nonzero coefficients.
#[derive(Clone, Debug)]
pub struct Polynomial {
    ring: Arc<PolyRing>,
    terms: BTreeMap<Monomial, Scalar>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl std::hash::Hash for Polynomial {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.terms.hash(state);
    }
}

impl Polynomial {
    pub fn zero(ring: &Arc<PolyRing>) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ring: &Arc<PolyRing>) -> Self {
        Self::constant(ring, ring.field().one())
    }

    pub fn constant(ring: &Arc<PolyRing>, c: Scalar) -> Self {
        Self::term(ring, Monomial::one(ring.nvars()), c)
    }

    pub fn from_i64(ring: &Arc<PolyRing>, n: i64) -> Self {
        Self::constant(ring, ring.field().from_i64(n))
    }

    pub fn var(ring: &Arc<PolyRing>, index: usize) -> Self {
        Self::term(ring, Monomial::variable(ring.nvars(), index), ring.field().one())
    }

    pub fn var_named(ring: &Arc<PolyRing>, name: &str) -> Result<Self> {
        let idx = ring
            .var_index(name)
            .ok_or_else(|| Error::Input(format!("unknown variable {name:?}")))?;
        Ok(Self::var(ring, idx))
    }

    pub fn term(ring: &Arc<PolyRing>, m: Monomial, c: Scalar) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    /// Builds a polynomial from possibly repeated terms, combining and
    /// dropping zeros.
    pub fn from_terms(
        ring: &Arc<PolyRing>,
        terms: impl IntoIterator<Item = (Monomial, Scalar)>,
    ) -> Self {
        let mut map: BTreeMap<Monomial, Scalar> = BTreeMap::new();
        for (m, c) in terms {
            accumulate(&mut map, m, c);
        }
        Polynomial {
            ring: ring.clone(),
            terms: map,
        }
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    /// A nonzero constant, i.e. a unit of the ring.
    pub fn is_unit(&self) -> bool {
        !self.is_zero() && self.is_constant()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Scalar {
        self.terms
            .get(m)
            .cloned()
            .unwrap_or_else(|| self.ring.field().zero())
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// The common degree of all terms, if the polynomial is homogeneous.
    /// The zero polynomial is homogeneous of every degree and returns `None`.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut it = self.terms.keys().map(Monomial::degree);
        let d = it.next()?;
        it.all(|e| e == d).then_some(d)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.homogeneous_degree().is_some()
    }

    pub fn leading_term(&self, order: MonomialOrder) -> Option<(&Monomial, &Scalar)> {
        self.terms
            .iter()
            .max_by(|a, b| order.cmp(a.0, b.0))
    }

    /// Terms sorted descending under `order`.
    pub fn sorted_terms(&self, order: MonomialOrder) -> Vec<(Monomial, Scalar)> {
        let mut v: Vec<(Monomial, Scalar)> =
            self.terms.iter().map(|(m, c)| (m.clone(), c.clone())).collect();
        v.sort_by(|a, b| order.cmp(&b.0, &a.0));
        v
    }

    fn check_ring(&self, other: &Polynomial) -> Result<()> {
        if same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            accumulate(&mut terms, m.clone(), c.clone());
        }
        Ok(Polynomial {
            ring: self.ring.clone(),
            terms,
        })
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.checked_add(&other.neg())
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        let mut terms = BTreeMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                accumulate(&mut terms, m1.mul(m2), c1.mul(c2));
            }
        }
        Ok(Polynomial {
            ring: self.ring.clone(),
            terms,
        })
    }

    pub fn neg(&self) -> Polynomial {
        self.scale(&self.ring.field().from_i64(-1))
    }

    pub fn scale(&self, c: &Scalar) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.clone(), a.mul(c)))
                .collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(t, a)| (t.mul(m), a.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Polynomial {
        let mut acc = Polynomial::one(&self.ring);
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Value at a point of `k^nvars`.
    pub fn evaluate(&self, point: &[Scalar]) -> Scalar {
        let field = self.ring.field();
        let mut acc = field.zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &k) in m.exponents().iter().enumerate() {
                for _ in 0..k {
                    t = t.mul(&point[i]);
                }
            }
            acc = acc.add(&t);
        }
        acc
    }

    /// `self / divisor` when the division is exact, else `None`.
    pub fn exact_div(&self, divisor: &Polynomial) -> Option<Polynomial> {
        let order = MonomialOrder::Grevlex;
        let (dm, dc) = divisor.leading_term(order)?;
        let (dm, dinv) = (dm.clone(), dc.inv());
        let mut rest = self.clone();
        let mut quotient = BTreeMap::new();
        while let Some((m, c)) = rest.leading_term(order) {
            let qm = dm.quotient_of(m)?;
            let qc = c.mul(&dinv);
            let t = Polynomial::term(&self.ring, qm.clone(), qc.clone());
            rest = &rest - &(&t * divisor);
            quotient.insert(qm, qc);
        }
        Some(Polynomial {
            ring: self.ring.clone(),
            terms: quotient,
        })
    }

    /// Scales so that the leading coefficient under `order` is one.
    pub fn monic(&self, order: MonomialOrder) -> Polynomial {
        match self.leading_term(order) {
            Some((_, c)) => self.scale(&c.inv()),
            None => self.clone(),
        }
    }

    /// Sends every listed variable to zero.
    pub fn substitute_zero(&self, vars: &[usize]) -> Result<Polynomial> {
        if let Some(&bad) = vars.iter().find(|&&v| v >= self.ring.nvars()) {
            return Err(Error::Input(format!("variable index {bad} out of range")));
        }
        Ok(Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| vars.iter().all(|&v| m.exponent(v) == 0))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        })
    }

    /// [`Polynomial::substitute_zero`] addressed by variable names.
    pub fn substitute_zero_named(&self, names: &[&str]) -> Result<Polynomial> {
        let idx = names
            .iter()
            .map(|n| {
                self.ring
                    .var_index(n)
                    .ok_or_else(|| Error::Input(format!("unknown variable {n:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        self.substitute_zero(&idx)
    }

    /// Rewrites the polynomial in `target`, sending variable `i` to variable
    /// `map[i]`. Variables mapped to `None` must not occur.
    pub fn remap(&self, target: &Arc<PolyRing>, map: &[Option<usize>]) -> Result<Polynomial> {
        let n = target.nvars();
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut e = vec![0u32; n];
            for (i, &k) in m.exponents().iter().enumerate() {
                if k == 0 {
                    continue;
                }
                match map[i] {
                    Some(j) => e[j] += k,
                    None => {
                        return Err(Error::Internal(format!(
                            "variable {} has no image",
                            self.ring.variables()[i]
                        )))
                    }
                }
            }
            accumulate(&mut terms, Monomial::from_exponents(e), c.clone());
        }
        Ok(Polynomial {
            ring: target.clone(),
            terms,
        })
    }

    /// Embeds into a ring that extends this one by trailing variables.
    pub fn embed(&self, target: &Arc<PolyRing>) -> Polynomial {
        let map: Vec<Option<usize>> = (0..self.ring.nvars()).map(Some).collect();
        self.remap(target, &map).expect("every variable has an image")
    }

    /// Substitutes `images[i]` for variable `i`; all images live in one ring.
    pub fn substitute(&self, target: &Arc<PolyRing>, images: &[Polynomial]) -> Polynomial {
        let mut acc = Polynomial::zero(target);
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(target, c.clone());
            for (i, &k) in m.exponents().iter().enumerate() {
                if k > 0 {
                    t = &t * &images[i].pow(k);
                }
            }
            acc = &acc + &t;
        }
        acc
    }

    /// True when no variable outside `allowed` occurs.
    pub fn uses_only(&self, allowed: &[bool]) -> bool {
        self.terms
            .keys()
            .all(|m| m.support().into_iter().all(|v| allowed[v]))
    }

    /// Variables occurring in the polynomial.
    pub fn support(&self) -> Vec<usize> {
        let mut used = vec![false; self.ring.nvars()];
        for m in self.terms.keys() {
            for v in m.support() {
                used[v] = true;
            }
        }
        (0..used.len()).filter(|&i| used[i]).collect()
    }
}

fn accumulate(map: &mut BTreeMap<Monomial, Scalar>, m: Monomial, c: Scalar) {
    if c.is_zero() {
        return;
    }
    match map.entry(m) {
        std::collections::btree_map::Entry::Vacant(v) => {
            v.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut o) => {
            let s = o.get().add(&c);
            if s.is_zero() {
                o.remove();
            } else {
                *o.get_mut() = s;
            }
        }
    }
}

// Operator forms panic on ring mismatch; use the `checked_*` methods where
// inputs come from different sources.
impl std::ops::Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.checked_add(rhs).expect("ring mismatch in polynomial addition")
    }
}

impl std::ops::Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.checked_sub(rhs).expect("ring mismatch in polynomial subtraction")
    }
}

impl std::ops::Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.checked_mul(rhs).expect("ring mismatch in polynomial multiplication")
    }
}

impl std::ops::Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::neg(self)
    }
}

impl fmt::Display for Polynomial {
    /// Terms in descending grevlex order, e.g. `3*x^2*y - 1/2*z`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let names = self.ring.variables();
        for (i, (m, c)) in self.sorted_terms(MonomialOrder::Grevlex).iter().enumerate() {
            let negative = c.is_negative();
            if i == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if negative { " - " } else { " + " })?;
            }
            let abs = c.abs();
            let mut factors: Vec<String> = Vec::new();
            if !abs.is_one() || m.is_one() {
                factors.push(abs.to_string());
            }
            for (v, &e) in m.exponents().iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(names[v].clone()),
                    _ => factors.push(format!("{}^{}", names[v], e)),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}
