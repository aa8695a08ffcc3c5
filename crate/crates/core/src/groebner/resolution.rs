//! Minimal graded free resolutions, projective dimension and depth.
//!
//! Modules are graded with the standard grading on `k[x_1..x_d]`; a free
//! module carries a shift for each basis vector. Depth is obtained from the
//! projective dimension by Auslander-Buchsbaum: `depth M = d - pd M`.

use std::sync::Arc;

use super::ideal::Ideal;
use super::matrix::Matrix;
use super::submodule::{generator_degrees, minimal_generator_indices, syzygies, Submodule};
use crate::error::{Error, Result};
use crate::poly::{PolyRing, Polynomial};

/// `0 <- F_0 <- F_1 <- ... <- F_p <- 0`, with `maps[i] : F_{i+1} -> F_i`.
#[derive(Clone, Debug)]
pub struct FreeResolution {
    ring: Arc<PolyRing>,
    /// Shifts of the basis of each `F_i`.
    shifts: Vec<Vec<i64>>,
    maps: Vec<Matrix>,
}

impl FreeResolution {
    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn maps(&self) -> &[Matrix] {
        &self.maps
    }

    pub fn shifts(&self) -> &[Vec<i64>] {
        &self.shifts
    }

    /// Ranks of `F_0, F_1, ...`. Empty for the zero module.
    pub fn betti(&self) -> Vec<usize> {
        self.shifts.iter().map(Vec::len).collect()
    }

    /// Length of the resolution; `None` for the zero module.
    pub fn projective_dimension(&self) -> Option<usize> {
        if self.shifts.is_empty() {
            None
        } else {
            Some(self.shifts.len() - 1)
        }
    }

    /// `nvars - pd`; `None` (infinite) for the zero module.
    pub fn depth(&self) -> Option<usize> {
        self.projective_dimension()
            .map(|pd| self.ring.nvars().saturating_sub(pd))
    }

    /// `d_i * d_{i+1} = 0` for all consecutive maps.
    pub fn is_complex(&self) -> bool {
        self.maps
            .windows(2)
            .all(|w| w[0].mul(&w[1]).map(|m| m.is_zero()).unwrap_or(false))
    }

    /// Every matrix entry lies in the irrelevant ideal (no nonzero constants).
    pub fn is_minimal(&self) -> bool {
        self.maps
            .iter()
            .all(|m| m.columns().iter().flatten().all(|p| p.terms().all(|(mono, _)| !mono.is_one())))
    }
}

/// Minimal graded resolution of `coker(presentation)`, where the target of
/// `presentation` has basis shifts `target_shifts`.
pub fn resolve_cokernel(presentation: &Matrix, target_shifts: &[i64]) -> Result<FreeResolution> {
    let ring = presentation.ring().clone();
    if target_shifts.len() != presentation.nrows() {
        return Err(Error::RankMismatch(target_shifts.len(), presentation.nrows()));
    }
    generator_degrees(presentation.columns(), target_shifts)?;

    let mut shifts0 = target_shifts.to_vec();
    let mut cols: Vec<Vec<Polynomial>> = presentation
        .columns()
        .iter()
        .filter(|c| c.iter().any(|p| !p.is_zero()))
        .cloned()
        .collect();

    // Cancel unit entries: each removes one generator of F_0 and one relation.
    while let Some((j, i)) = cols.iter().enumerate().find_map(|(j, c)| {
        c.iter().position(|p| p.is_unit()).map(|i| (j, i))
    }) {
        let pivot = cols.remove(j);
        let c = pivot[i].terms().next().expect("unit").1.clone();
        for col in cols.iter_mut() {
            if col[i].is_zero() {
                continue;
            }
            let factor = col[i].scale(&c.inv());
            for (k, entry) in col.iter_mut().enumerate() {
                *entry = &*entry - &(&factor * &pivot[k]);
            }
        }
        for col in cols.iter_mut() {
            col.remove(i);
        }
        shifts0.remove(i);
        cols.retain(|c| c.iter().any(|p| !p.is_zero()));
    }

    if shifts0.is_empty() {
        return Ok(FreeResolution {
            ring,
            shifts: Vec::new(),
            maps: Vec::new(),
        });
    }

    let mut shifts = vec![shifts0];
    let mut maps = Vec::new();
    let mut current = cols;
    loop {
        let rank = shifts.last().expect("nonempty").len();
        if current.is_empty() {
            break;
        }
        let keep = minimal_generator_indices(&ring, rank, &current, shifts.last().unwrap())?;
        let gens: Vec<Vec<Polynomial>> = keep.iter().map(|&k| current[k].clone()).collect();
        let degs: Vec<i64> = generator_degrees(&gens, shifts.last().unwrap())?
            .into_iter()
            .map(|d| d.expect("nonzero generator"))
            .collect();
        let m = Matrix::from_columns(&ring, rank, gens.clone())?;
        maps.push(m);
        shifts.push(degs);
        let next = syzygies(&ring, rank, &gens)?;
        current = next.columns().to_vec();
    }
    Ok(FreeResolution { ring, shifts, maps })
}

/// Minimal resolution of a homogeneous submodule `E ⊆ R^e` (basis in
/// degree 0).
pub fn resolve_submodule(module: &Submodule) -> Result<FreeResolution> {
    let ring = module.ring().clone();
    let zero_shifts = vec![0; module.rank()];
    let cols: Vec<Vec<Polynomial>> = module
        .generators()
        .iter()
        .map(|g| g.components().to_vec())
        .collect();
    let keep = minimal_generator_indices(&ring, module.rank(), &cols, &zero_shifts)?;
    if keep.is_empty() {
        return Ok(FreeResolution {
            ring,
            shifts: Vec::new(),
            maps: Vec::new(),
        });
    }
    let gens: Vec<Vec<Polynomial>> = keep.iter().map(|&k| cols[k].clone()).collect();
    let degs: Vec<i64> = generator_degrees(&gens, &zero_shifts)?
        .into_iter()
        .map(|d| d.expect("nonzero generator"))
        .collect();
    let phi = syzygies(&ring, module.rank(), &gens)?;
    resolve_cokernel(&phi, &degs)
}

/// Minimal resolution of `R/I` for a homogeneous ideal.
pub fn resolve_quotient_ring(ideal: &Ideal) -> Result<FreeResolution> {
    let ring = ideal.ring().clone();
    let cols: Vec<Vec<Polynomial>> = ideal.generators().iter().map(|g| vec![g.clone()]).collect();
    let m = Matrix::from_columns(&ring, 1, cols)?;
    resolve_cokernel(&m, &[0])
}

/// `pd(coker psi)` and `depth(coker psi)` for a homogeneous `psi` whose
/// target has its basis in degree 0.
pub fn cokernel_depth(psi: &Matrix) -> Result<Option<usize>> {
    let shifts = vec![0; psi.nrows()];
    Ok(resolve_cokernel(psi, &shifts)?.depth())
}
