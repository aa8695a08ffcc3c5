//! Buchberger's algorithm for submodules of `R^s` (ideals are the case
//! `s = 1`), with normal pair selection and the Gebauer-Moeller criteria.

use std::sync::Arc;

use super::sparse::{SparseVec, Term};
use crate::poly::{ModuleOrder, Monomial, PolyRing, Polynomial};

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    pos: usize,
}

/// A reduced Gröbner basis of a submodule of `R^rank`.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    ring: Arc<PolyRing>,
    rank: usize,
    order: ModuleOrder,
    basis: Vec<SparseVec>,
}

impl GroebnerBasis {
    /// Computes the reduced Gröbner basis of the submodule generated by
    /// `generators` (each a vector of `rank` polynomials).
    pub fn compute(
        ring: &Arc<PolyRing>,
        rank: usize,
        generators: &[Vec<Polynomial>],
        order: ModuleOrder,
    ) -> Self {
        let input: Vec<SparseVec> = generators
            .iter()
            .map(|g| SparseVec::from_components(g, &order))
            .filter(|v| !v.is_zero())
            .collect();
        let basis = buchberger(input, &order, rank == 1);
        GroebnerBasis {
            ring: ring.clone(),
            rank,
            order,
            basis,
        }
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn order(&self) -> ModuleOrder {
        self.order
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    /// Basis elements as component vectors, sorted ascending by leading term.
    pub fn elements(&self) -> Vec<Vec<Polynomial>> {
        self.basis
            .iter()
            .map(|v| v.to_components(&self.ring, self.rank))
            .collect()
    }

    /// Leading monomials with their positions.
    pub fn leading_terms(&self) -> Vec<(Monomial, usize)> {
        self.basis
            .iter()
            .map(|v| {
                let t = v.lead().expect("basis elements are nonzero");
                (t.mono.clone(), t.pos)
            })
            .collect()
    }

    /// True when the basis contains a unit vector `c * e_i` with `c` a
    /// constant for every position, i.e. the submodule is all of `R^rank`.
    pub fn is_everything(&self) -> bool {
        (0..self.rank).all(|p| {
            self.basis
                .iter()
                .any(|v| v.lead().is_some_and(|t| t.pos == p && t.mono.is_one()))
        })
    }

    pub(crate) fn sparse(&self, components: &[Polynomial]) -> SparseVec {
        SparseVec::from_components(components, &self.order)
    }

    pub fn normal_form(&self, components: &[Polynomial]) -> Vec<Polynomial> {
        reduce(self.sparse(components), &self.basis, &self.order)
            .to_components(&self.ring, self.rank)
    }

    pub fn contains(&self, components: &[Polynomial]) -> bool {
        reduce(self.sparse(components), &self.basis, &self.order).is_zero()
    }

    /// Every S-pair of the basis reduces to zero.
    pub fn check_s_pairs(&self) -> bool {
        for i in 0..self.basis.len() {
            for j in i + 1..self.basis.len() {
                if let Some(s) = s_vector(&self.basis[i], &self.basis[j], &self.order) {
                    if !reduce(s, &self.basis, &self.order).is_zero() {
                        return false;
                    }
                }
            }
        }
        true
    }
}

fn find_divisor<'a>(t: &Term, basis: &'a [SparseVec], active: Option<&[usize]>) -> Option<&'a SparseVec> {
    let hit = |g: &SparseVec| {
        let l = g.lead().expect("nonzero basis element");
        l.pos == t.pos && l.mono.divides(&t.mono)
    };
    match active {
        Some(idx) => idx.iter().map(|&k| &basis[k]).find(|g| hit(g)),
        None => basis.iter().find(|g| hit(g)),
    }
}

/// Full reduction of `f` modulo monic `basis`.
pub(crate) fn reduce(f: SparseVec, basis: &[SparseVec], order: &ModuleOrder) -> SparseVec {
    reduce_active(f, basis, None, order)
}

fn reduce_active(
    mut f: SparseVec,
    basis: &[SparseVec],
    active: Option<&[usize]>,
    order: &ModuleOrder,
) -> SparseVec {
    let mut done: Vec<Term> = Vec::new();
    let mut start = 0;
    while start < f.terms.len() {
        let t = &f.terms[start];
        match find_divisor(t, basis, active) {
            Some(g) => {
                let l = g.lead().expect("nonzero");
                let m = l.mono.quotient_of(&t.mono).expect("divides");
                let c = t.coeff.div(&l.coeff);
                // the irreducible prefix already sits in `done`
                f = f.sub_scaled_from(start, &c, &m, g, order);
                start = 0;
            }
            None => {
                done.push(t.clone());
                start += 1;
            }
        }
    }
    SparseVec { terms: done }
}

fn s_vector(f: &SparseVec, g: &SparseVec, order: &ModuleOrder) -> Option<SparseVec> {
    let (lf, lg) = (f.lead()?, g.lead()?);
    if lf.pos != lg.pos {
        return None;
    }
    let lcm = lf.mono.lcm(&lg.mono);
    let mf = lf.mono.quotient_of(&lcm).expect("lcm");
    let mg = lg.mono.quotient_of(&lcm).expect("lcm");
    let a = f.mul_term(&lf.coeff.inv(), &mf);
    Some(a.sub_scaled_from(0, &lg.coeff.inv(), &mg, g, order))
}

fn buchberger(input: Vec<SparseVec>, order: &ModuleOrder, ideal_case: bool) -> Vec<SparseVec> {
    let mut polys: Vec<SparseVec> = Vec::new();
    let mut active: Vec<usize> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();

    let mut input = input;
    // smallest leading terms first keeps early reductions cheap
    input.sort_by(|a, b| {
        let (x, y) = (a.lead().unwrap(), b.lead().unwrap());
        order.cmp((&x.mono, x.pos), (&y.mono, y.pos))
    });
    for f in input {
        let mut h = reduce_active(f, &polys, Some(&active), order);
        if h.is_zero() {
            continue;
        }
        h.make_monic();
        polys.push(h);
        update(&polys, &mut active, &mut pairs, polys.len() - 1, ideal_case);
    }

    while !pairs.is_empty() {
        let best = (0..pairs.len())
            .min_by(|&a, &b| {
                let (p, q) = (&pairs[a], &pairs[b]);
                order
                    .cmp((&p.lcm, p.pos), (&q.lcm, q.pos))
                    .then_with(|| (p.i, p.j).cmp(&(q.i, q.j)))
            })
            .expect("nonempty");
        let pair = pairs.swap_remove(best);
        let s = match s_vector(&polys[pair.i], &polys[pair.j], order) {
            Some(s) => s,
            None => continue,
        };
        let mut h = reduce_active(s, &polys, Some(&active), order);
        if h.is_zero() {
            continue;
        }
        h.make_monic();
        polys.push(h);
        update(&polys, &mut active, &mut pairs, polys.len() - 1, ideal_case);
    }

    // `active` is a minimal basis; interreduce tails.
    let minimal: Vec<SparseVec> = active.iter().map(|&k| polys[k].clone()).collect();
    let mut reduced: Vec<SparseVec> = Vec::with_capacity(minimal.len());
    for (k, g) in minimal.iter().enumerate() {
        let others: Vec<SparseVec> = minimal
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != k)
            .map(|(_, v)| v.clone())
            .collect();
        let mut r = reduce(g.clone(), &others, order);
        r.make_monic();
        reduced.push(r);
    }
    reduced.sort_by(|a, b| {
        let (x, y) = (a.lead().unwrap(), b.lead().unwrap());
        order.cmp((&x.mono, x.pos), (&y.mono, y.pos))
    });
    reduced
}

/// Gebauer-Moeller installation of the new element `h`.
fn update(
    polys: &[SparseVec],
    active: &mut Vec<usize>,
    pairs: &mut Vec<Pair>,
    h: usize,
    ideal_case: bool,
) {
    let lh = polys[h].lead().expect("nonzero").clone();
    let lead = |k: usize| polys[k].lead().expect("nonzero");

    let mut candidates: Vec<Pair> = active
        .iter()
        .filter(|&&g| lead(g).pos == lh.pos)
        .map(|&g| Pair {
            i: g,
            j: h,
            lcm: lead(g).mono.lcm(&lh.mono),
            pos: lh.pos,
        })
        .collect();
    // deterministic processing order
    candidates.reverse();

    let coprime = |p: &Pair| ideal_case && lead(p.i).mono.is_coprime(&lh.mono);
    let mut kept: Vec<Pair> = Vec::new();
    while let Some(p) = candidates.pop() {
        let dominated = candidates.iter().chain(kept.iter()).any(|q| q.lcm.divides(&p.lcm));
        if coprime(&p) || !dominated {
            kept.push(p);
        }
    }
    kept.retain(|p| !coprime(p));

    pairs.retain(|p| {
        if p.pos != lh.pos || !lh.mono.divides(&p.lcm) {
            return true;
        }
        let li = lead(p.i).mono.lcm(&lh.mono);
        let lj = lead(p.j).mono.lcm(&lh.mono);
        li == p.lcm || lj == p.lcm
    });
    pairs.extend(kept);

    active.retain(|&g| {
        let l = lead(g);
        !(l.pos == lh.pos && lh.mono.divides(&l.mono))
    });
    active.push(h);
}
