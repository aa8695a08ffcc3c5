//! Column vectors and matrices over a polynomial ring.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::poly::{same_ring, PolyRing, Polynomial};

/// An element of the free module `R^s`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VectorElement {
    components: Vec<Polynomial>,
}

impl VectorElement {
    pub fn new(components: Vec<Polynomial>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::Input("vectors need at least one component".into()));
        }
        let ring = components[0].ring().clone();
        if components.iter().any(|c| !same_ring(c.ring(), &ring)) {
            return Err(Error::RingMismatch);
        }
        Ok(VectorElement { components })
    }

    pub fn zero(ring: &Arc<PolyRing>, rank: usize) -> Self {
        VectorElement {
            components: vec![Polynomial::zero(ring); rank],
        }
    }

    pub fn basis(ring: &Arc<PolyRing>, rank: usize, index: usize) -> Self {
        let mut v = Self::zero(ring, rank);
        v.components[index] = Polynomial::one(ring);
        v
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        self.components[0].ring()
    }

    pub fn rank(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[Polynomial] {
        &self.components
    }

    pub fn into_components(self) -> Vec<Polynomial> {
        self.components
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(Polynomial::is_zero)
    }

    pub fn scale(&self, f: &Polynomial) -> VectorElement {
        VectorElement {
            components: self.components.iter().map(|c| c * f).collect(),
        }
    }

    pub fn add(&self, other: &VectorElement) -> Result<VectorElement> {
        if self.rank() != other.rank() {
            return Err(Error::RankMismatch(self.rank(), other.rank()));
        }
        Ok(VectorElement {
            components: self
                .components
                .iter()
                .zip(&other.components)
                .map(|(a, b)| a.checked_add(b))
                .collect::<Result<_>>()?,
        })
    }

    /// Degree of the vector when every nonzero component `v_i` is
    /// homogeneous of degree `d - shifts[i]`. `Ok(None)` for the zero
    /// vector; an error when the vector is not homogeneous.
    pub fn graded_degree(&self, shifts: &[i64]) -> Result<Option<i64>> {
        let mut deg: Option<i64> = None;
        for (c, s) in self.components.iter().zip(shifts) {
            if c.is_zero() {
                continue;
            }
            let d = c
                .homogeneous_degree()
                .ok_or_else(|| Error::NotHomogeneous(format!("component {c}")))?
                as i64
                + s;
            match deg {
                None => deg = Some(d),
                Some(e) if e != d => {
                    return Err(Error::NotHomogeneous(format!(
                        "vector components of degrees {e} and {d}"
                    )))
                }
                _ => {}
            }
        }
        Ok(deg)
    }
}

/// A matrix stored by columns; column `j` is the image of the `j`-th basis
/// vector of the source.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    ring: Arc<PolyRing>,
    nrows: usize,
    columns: Vec<Vec<Polynomial>>,
}

impl Matrix {
    pub fn from_columns(
        ring: &Arc<PolyRing>,
        nrows: usize,
        columns: Vec<Vec<Polynomial>>,
    ) -> Result<Self> {
        for c in &columns {
            if c.len() != nrows {
                return Err(Error::RankMismatch(c.len(), nrows));
            }
            if c.iter().any(|p| !same_ring(p.ring(), ring)) {
                return Err(Error::RingMismatch);
            }
        }
        Ok(Matrix {
            ring: ring.clone(),
            nrows,
            columns,
        })
    }

    pub fn from_rows(ring: &Arc<PolyRing>, rows: Vec<Vec<Polynomial>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(Error::Input("ragged matrix rows".into()));
        }
        let columns = (0..ncols)
            .map(|j| rows.iter().map(|r| r[j].clone()).collect())
            .collect();
        Self::from_columns(ring, nrows, columns)
    }

    pub fn identity(ring: &Arc<PolyRing>, n: usize) -> Self {
        let columns = (0..n)
            .map(|j| VectorElement::basis(ring, n, j).into_components())
            .collect();
        Matrix {
            ring: ring.clone(),
            nrows: n,
            columns,
        }
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.columns.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> &Polynomial {
        &self.columns[j][i]
    }

    pub fn column(&self, j: usize) -> &[Polynomial] {
        &self.columns[j]
    }

    pub fn columns(&self) -> &[Vec<Polynomial>] {
        &self.columns
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().flatten().all(Polynomial::is_zero)
    }

    /// `self * other`.
    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.ncols() != other.nrows {
            return Err(Error::RankMismatch(self.ncols(), other.nrows));
        }
        let columns = other
            .columns
            .iter()
            .map(|col| {
                (0..self.nrows)
                    .map(|i| {
                        col.iter()
                            .enumerate()
                            .filter(|(_, c)| !c.is_zero())
                            .fold(Polynomial::zero(&self.ring), |acc, (k, c)| {
                                &acc + &(&self.columns[k][i] * c)
                            })
                    })
                    .collect()
            })
            .collect();
        Ok(Matrix {
            ring: self.ring.clone(),
            nrows: self.nrows,
            columns,
        })
    }

    pub fn transpose(&self) -> Matrix {
        let columns = (0..self.nrows)
            .map(|i| self.columns.iter().map(|c| c[i].clone()).collect())
            .collect();
        Matrix {
            ring: self.ring.clone(),
            nrows: self.ncols(),
            columns,
        }
    }
}
