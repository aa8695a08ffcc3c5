//! Submodules of free modules, syzygies, and graded minimalisation.

use std::sync::{Arc, OnceLock};

use super::buchberger::GroebnerBasis;
use super::matrix::{Matrix, VectorElement};
use crate::error::{Error, Result};
use crate::poly::{same_ring, ModuleOrder, Monomial, MonomialOrder, PolyRing, Polynomial, PositionRule};

/// A submodule of `R^rank` given by generators.
#[derive(Clone, Debug)]
pub struct Submodule {
    ring: Arc<PolyRing>,
    rank: usize,
    generators: Vec<VectorElement>,
    gb: OnceLock<GroebnerBasis>,
}

impl Submodule {
    pub fn new(ring: &Arc<PolyRing>, rank: usize, generators: Vec<VectorElement>) -> Result<Self> {
        if rank == 0 {
            return Err(Error::Input("ambient rank must be positive".into()));
        }
        for g in &generators {
            if g.rank() != rank {
                return Err(Error::RankMismatch(g.rank(), rank));
            }
            if !same_ring(g.ring(), ring) {
                return Err(Error::RingMismatch);
            }
        }
        Ok(Submodule {
            ring: ring.clone(),
            rank,
            generators,
            gb: OnceLock::new(),
        })
    }

    /// The submodule generated by the columns of `m`.
    pub fn from_matrix(m: &Matrix) -> Result<Self> {
        let gens = m
            .columns()
            .iter()
            .map(|c| VectorElement::new(c.clone()))
            .collect::<Result<Vec<_>>>()?;
        Submodule::new(m.ring(), m.nrows(), gens)
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn generators(&self) -> &[VectorElement] {
        &self.generators
    }

    pub fn to_matrix(&self) -> Matrix {
        Matrix::from_columns(
            &self.ring,
            self.rank,
            self.generators.iter().map(|g| g.components().to_vec()).collect(),
        )
        .expect("generators have the ambient rank")
    }

    fn columns(&self) -> Vec<Vec<Polynomial>> {
        self.generators.iter().map(|g| g.components().to_vec()).collect()
    }

    /// Reduced Gröbner basis under term-over-position grevlex, computed once.
    pub fn groebner(&self) -> &GroebnerBasis {
        self.gb.get_or_init(|| {
            GroebnerBasis::compute(
                &self.ring,
                self.rank,
                &self.columns(),
                ModuleOrder::top(MonomialOrder::Grevlex),
            )
        })
    }

    pub fn groebner_with(&self, order: ModuleOrder) -> GroebnerBasis {
        GroebnerBasis::compute(&self.ring, self.rank, &self.columns(), order)
    }

    pub fn contains(&self, v: &VectorElement) -> Result<bool> {
        if v.rank() != self.rank {
            return Err(Error::RankMismatch(v.rank(), self.rank));
        }
        if !same_ring(v.ring(), &self.ring) {
            return Err(Error::RingMismatch);
        }
        Ok(v.is_zero() || self.groebner().contains(v.components()))
    }

    pub fn contains_module(&self, other: &Submodule) -> Result<bool> {
        if other.rank != self.rank {
            return Err(Error::RankMismatch(other.rank, self.rank));
        }
        for g in &other.generators {
            if !self.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Equality by two-sided generator membership.
    pub fn equals(&self, other: &Submodule) -> Result<bool> {
        Ok(self.contains_module(other)? && other.contains_module(self)?)
    }

    pub fn is_everything(&self) -> bool {
        self.groebner().is_everything()
    }

    /// Generators of `(self : v) = { f | f v in self }`.
    pub fn colon(&self, v: &VectorElement) -> Result<Vec<Polynomial>> {
        if v.rank() != self.rank {
            return Err(Error::RankMismatch(v.rank(), self.rank));
        }
        let ring = &self.ring;
        let mut lifted = vec![{
            let mut c = v.components().to_vec();
            c.push(Polynomial::one(ring));
            c
        }];
        for g in &self.generators {
            let mut c = g.components().to_vec();
            c.push(Polynomial::zero(ring));
            lifted.push(c);
        }
        let order = ModuleOrder::new(MonomialOrder::Grevlex, PositionRule::Split(self.rank));
        let gb = GroebnerBasis::compute(ring, self.rank + 1, &lifted, order);
        Ok(gb
            .leading_terms()
            .into_iter()
            .zip(gb.elements())
            .filter(|((_, pos), _)| *pos >= self.rank)
            .map(|(_, c)| c[self.rank].clone())
            .collect())
    }

    /// Membership after localising at the origin: some `f` with nonzero
    /// constant term has `f v` in the submodule.
    pub fn contains_at_origin(&self, v: &VectorElement) -> Result<bool> {
        if self.contains(v)? {
            return Ok(true);
        }
        let origin = Monomial::one(self.ring.nvars());
        Ok(self.colon(v)?.iter().any(|f| !f.coefficient(&origin).is_zero()))
    }

    pub fn contains_module_at_origin(&self, other: &Submodule) -> Result<bool> {
        if other.rank != self.rank {
            return Err(Error::RankMismatch(other.rank, self.rank));
        }
        for g in &other.generators {
            if !self.contains_at_origin(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Generators of the kernel of `R^n -> R^rank` sending `e_j` to
/// `columns[j]`, as the columns of an `n x m` matrix.
///
/// Computed by eliminating the first `rank` components from the module
/// generated by `(columns[j], e_j)` in `R^(rank + n)`.
pub fn syzygies(ring: &Arc<PolyRing>, rank: usize, columns: &[Vec<Polynomial>]) -> Result<Matrix> {
    let n = columns.len();
    if n == 0 {
        return Err(Error::Input("syzygies of an empty column list".into()));
    }
    let mut lifted = Vec::with_capacity(n);
    for (j, c) in columns.iter().enumerate() {
        if c.len() != rank {
            return Err(Error::RankMismatch(c.len(), rank));
        }
        let mut v = c.clone();
        v.extend((0..n).map(|k| {
            if k == j {
                Polynomial::one(ring)
            } else {
                Polynomial::zero(ring)
            }
        }));
        lifted.push(v);
    }
    let order = ModuleOrder::new(MonomialOrder::Grevlex, PositionRule::Split(rank));
    let gb = GroebnerBasis::compute(ring, rank + n, &lifted, order);
    let syz: Vec<Vec<Polynomial>> = gb
        .leading_terms()
        .into_iter()
        .zip(gb.elements())
        .filter(|((_, pos), _)| *pos >= rank)
        .map(|(_, v)| v[rank..].to_vec())
        .collect();
    Matrix::from_columns(ring, n, syz)
}

/// Degrees of homogeneous generators relative to the basis `shifts`; fails
/// when a generator is not homogeneous. Zero vectors get `None`.
pub fn generator_degrees(gens: &[Vec<Polynomial>], shifts: &[i64]) -> Result<Vec<Option<i64>>> {
    gens.iter()
        .map(|g| VectorElement::new(g.clone())?.graded_degree(shifts))
        .collect()
}

/// A minimal homogeneous generating set, chosen greedily in degree order:
/// a generator is kept when it is not in the span of those kept before it.
/// Returns the indices of the kept generators (in the original numbering,
/// sorted by degree then index).
pub fn minimal_generator_indices(
    ring: &Arc<PolyRing>,
    rank: usize,
    gens: &[Vec<Polynomial>],
    shifts: &[i64],
) -> Result<Vec<usize>> {
    let degrees = generator_degrees(gens, shifts)?;
    let mut idx: Vec<usize> = (0..gens.len()).filter(|&i| degrees[i].is_some()).collect();
    idx.sort_by_key(|&i| (degrees[i], i));
    let mut kept: Vec<usize> = Vec::new();
    let mut gb: Option<GroebnerBasis> = None;
    for i in idx {
        let redundant = gb.as_ref().is_some_and(|b| b.contains(&gens[i]));
        if !redundant {
            kept.push(i);
            let cols: Vec<Vec<Polynomial>> = kept.iter().map(|&k| gens[k].clone()).collect();
            gb = Some(GroebnerBasis::compute(
                ring,
                rank,
                &cols,
                ModuleOrder::top(MonomialOrder::Grevlex),
            ));
        }
    }
    Ok(kept)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_polynomial;

    fn ring() -> Arc<PolyRing> {
        PolyRing::rationals(["x", "y"])
    }

    fn vecs(r: &Arc<PolyRing>, cols: &[&[&str]]) -> Vec<Vec<Polynomial>> {
        cols.iter()
            .map(|c| c.iter().map(|s| parse_polynomial(r, s).unwrap()).collect())
            .collect()
    }

    fn module(r: &Arc<PolyRing>, rank: usize, cols: &[&[&str]]) -> Submodule {
        let gens = vecs(r, cols)
            .into_iter()
            .map(|c| VectorElement::new(c).unwrap())
            .collect();
        Submodule::new(r, rank, gens).unwrap()
    }

    #[test]
    fn membership_at_origin() {
        let r = ring();
        let n = module(&r, 1, &[&["x + x^2"]]);
        let x = VectorElement::new(vecs(&r, &[&["x"]]).remove(0)).unwrap();
        let y = VectorElement::new(vecs(&r, &[&["y"]]).remove(0)).unwrap();
        assert!(!n.contains(&x).unwrap());
        assert!(n.contains_at_origin(&x).unwrap());
        assert!(!n.contains_at_origin(&y).unwrap());
        let colon = n.colon(&x).unwrap();
        assert_eq!(colon.len(), 1);
        assert_eq!(colon[0], parse_polynomial(&r, "1 + x").unwrap());
    }

    #[test]
    fn vector_membership_examples() {
        let r = ring();
        let m = module(&r, 2, &[&["x", "0"], &["0", "x"]]);
        let v = VectorElement::new(vecs(&r, &[&["x^2", "x*y"]]).remove(0)).unwrap();
        assert!(m.contains(&v).unwrap());
        let m1 = module(&r, 2, &[&["x", "0"]]);
        let w = VectorElement::new(vecs(&r, &[&["0", "x"]]).remove(0)).unwrap();
        assert!(!m1.contains(&w).unwrap());
        let a = module(&r, 2, &[&["x", "y"]]);
        let b = module(&r, 2, &[&["x", "y"], &["x^2", "x*y"]]);
        assert!(a.equals(&b).unwrap());
        let wrong = VectorElement::new(vecs(&r, &[&["x"]]).remove(0)).unwrap();
        assert!(matches!(m.contains(&wrong), Err(Error::RankMismatch(1, 2))));
    }

    #[test]
    fn koszul_syzygy() {
        let r = ring();
        let phi = syzygies(&r, 1, &vecs(&r, &[&["x"], &["y"]])).unwrap();
        assert_eq!(phi.ncols(), 1);
        let col = phi.column(0);
        let expected = vecs(&r, &[&["y", "-x"]]).remove(0);
        let neg: Vec<Polynomial> = expected.iter().map(|p| -p).collect();
        assert!(col == expected.as_slice() || col == neg.as_slice());
    }

    #[test]
    fn free_module_has_no_syzygies() {
        let r = ring();
        let id = Matrix::identity(&r, 2);
        let phi = syzygies(&r, 2, id.columns()).unwrap();
        assert_eq!(phi.ncols(), 0);
    }

    #[test]
    fn syzygies_of_direct_sum() {
        let r = ring();
        let cols = vecs(&r, &[&["x", "0"], &["y", "0"], &["0", "x"], &["0", "y"]]);
        let phi = syzygies(&r, 2, &cols).unwrap();
        let psi = Matrix::from_columns(&r, 2, cols).unwrap();
        assert!(psi.mul(&phi).unwrap().is_zero());
        let s = Submodule::from_matrix(&phi).unwrap();
        let expected = module(&r, 4, &[&["y", "-x", "0", "0"], &["0", "0", "y", "-x"]]);
        assert!(s.equals(&expected).unwrap());
    }

    #[test]
    fn minimalisation_drops_redundant_columns() {
        let r = ring();
        let cols = vecs(&r, &[&["x", "y"], &["x^2", "x*y"], &["0", "0"], &["y", "0"]]);
        let kept = minimal_generator_indices(&r, 2, &cols, &[0, 0]).unwrap();
        assert_eq!(kept, vec![0, 3]);
        let bad = vecs(&r, &[&["x", "1"]]);
        assert!(matches!(
            minimal_generator_indices(&r, 2, &bad, &[0, 0]),
            Err(Error::NotHomogeneous(_))
        ));
    }
}
