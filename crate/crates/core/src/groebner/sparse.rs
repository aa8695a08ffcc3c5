//! Internal representation of module elements as ordered term lists.

use std::cmp::Ordering;
use std::sync::Arc;

use crate::poly::{ModuleOrder, Monomial, PolyRing, Polynomial, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Term {
    pub mono: Monomial,
    pub pos: usize,
    pub coeff: Scalar,
}

/// A vector of `R^s` as a list of terms sorted descending under the order
/// it was built with. An ideal element is a vector with every term at
/// position 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct SparseVec {
    pub terms: Vec<Term>,
}

impl SparseVec {
    pub fn from_components(components: &[Polynomial], order: &ModuleOrder) -> Self {
        let mut terms: Vec<Term> = components
            .iter()
            .enumerate()
            .flat_map(|(pos, p)| {
                p.terms().map(move |(m, c)| Term {
                    mono: m.clone(),
                    pos,
                    coeff: c.clone(),
                })
            })
            .collect();
        terms.sort_by(|a, b| order.cmp((&b.mono, b.pos), (&a.mono, a.pos)));
        SparseVec { terms }
    }

    pub fn to_components(&self, ring: &Arc<PolyRing>, rank: usize) -> Vec<Polynomial> {
        let mut buckets: Vec<Vec<(Monomial, Scalar)>> = vec![Vec::new(); rank];
        for t in &self.terms {
            buckets[t.pos].push((t.mono.clone(), t.coeff.clone()));
        }
        buckets
            .into_iter()
            .map(|b| Polynomial::from_terms(ring, b))
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn make_monic(&mut self) {
        if let Some(lc) = self.terms.first().map(|t| t.coeff.clone()) {
            if !lc.is_one() {
                let inv = lc.inv();
                for t in &mut self.terms {
                    t.coeff = t.coeff.mul(&inv);
                }
            }
        }
    }

    /// `self[start..] - c * m * other`, merged in order. Terms of `self`
    /// before `start` are dropped.
    pub fn sub_scaled_from(
        &self,
        start: usize,
        c: &Scalar,
        m: &Monomial,
        other: &SparseVec,
        order: &ModuleOrder,
    ) -> SparseVec {
        let a = &self.terms[start..];
        let neg = c.neg();
        let mut out = Vec::with_capacity(a.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < other.terms.len() {
            if j == other.terms.len() {
                out.extend_from_slice(&a[i..]);
                break;
            }
            let b = &other.terms[j];
            let bm = b.mono.mul(m);
            if i == a.len() {
                out.push(Term {
                    mono: bm,
                    pos: b.pos,
                    coeff: b.coeff.mul(&neg),
                });
                j += 1;
                continue;
            }
            match order.cmp((&a[i].mono, a[i].pos), (&bm, b.pos)) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(Term {
                        mono: bm,
                        pos: b.pos,
                        coeff: b.coeff.mul(&neg),
                    });
                    j += 1;
                }
                Ordering::Equal => {
                    let s = a[i].coeff.add(&b.coeff.mul(&neg));
                    if !s.is_zero() {
                        out.push(Term {
                            mono: bm,
                            pos: b.pos,
                            coeff: s,
                        });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        SparseVec { terms: out }
    }

    pub fn mul_term(&self, c: &Scalar, m: &Monomial) -> SparseVec {
        SparseVec {
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    mono: t.mono.mul(m),
                    pos: t.pos,
                    coeff: t.coeff.mul(c),
                })
                .collect(),
        }
    }
}
