use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::TAU;

use crate::{cis, Error, Result, C64};

/// Polar sample grid on the open unit disk.
#[derive(Clone, Debug, PartialEq)]
pub struct DiskGrid {
    radii: Vec<f64>,
    angles_per_ring: usize,
}

impl DiskGrid {
    /// Radii must be strictly increasing inside `(0, 1)`.
    pub fn new(radii: Vec<f64>, angles_per_ring: usize) -> Result<Self> {
        if radii.is_empty() || angles_per_ring == 0 {
            return Err(Error::invalid("grid needs at least one ring and one angle"));
        }
        if radii.iter().any(|&r| !(r > 0.0 && r < 1.0)) {
            return Err(Error::invalid("grid radii must lie in (0, 1)"));
        }
        if radii.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::invalid("grid radii must be strictly increasing"));
        }
        Ok(DiskGrid {
            radii,
            angles_per_ring,
        })
    }

    /// Rings `0.1, 0.2, …, 0.9, 0.95, 0.99` with 720 angles each.
    pub fn standard() -> Self {
        Self::standard_with(0.99, 720)
    }

    /// The standard rings cut at `r_max`, with `r_max` itself as the outer ring.
    pub fn standard_with(r_max: f64, angles_per_ring: usize) -> Self {
        let mut radii: Vec<f64> = [0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.95, 0.99]
            .into_iter()
            .filter(|&r| r < r_max)
            .collect();
        radii.push(r_max);
        DiskGrid {
            radii,
            angles_per_ring,
        }
    }

    pub fn radii(&self) -> &[f64] {
        &self.radii
    }

    pub fn angles_per_ring(&self) -> usize {
        self.angles_per_ring
    }

    pub fn r_max(&self) -> f64 {
        *self.radii.last().expect("grid has rings")
    }

    pub fn len(&self) -> usize {
        self.radii.len() * self.angles_per_ring
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn points(&self) -> impl Iterator<Item = C64> + '_ {
        let m = self.angles_per_ring;
        self.radii
            .iter()
            .flat_map(move |&r| (0..m).map(move |j| cis(TAU * j as f64 / m as f64) * r))
    }
}

/// Deterministic scattered points in the disk of radius `r_max` (a Vogel
/// spiral), used wherever a check asks for "random" sample points.
pub fn scatter_points(count: usize, r_max: f64) -> Vec<C64> {
    let golden = core::f64::consts::PI * (3.0 - libm::sqrt(5.0));
    let mut out = vec![C64::new(0.0, 0.0); count];
    for (k, z) in out.iter_mut().enumerate() {
        let r = r_max * libm::sqrt((k as f64 + 0.5) / count as f64);
        *z = cis(golden * k as f64) * r;
    }
    out
}
