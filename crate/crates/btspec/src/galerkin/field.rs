use super::{build_basis, regions, BasisFunction, SpectralProblem, Parity};
use crate::airy1d::BoundaryCondition;
use crate::asympt::U0Moments;
use crate::error::{Error, Result};
use crate::geometry::{DomainSpec, Shape};
use crate::specfun::quad::GaussLegendre;
use crate::Cx;
use serde::{Deserialize, Serialize};

/// Tensor grid in (r, theta); values are stored r-major.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PolarGrid {
    pub r: Vec<f64>,
    pub theta: Vec<f64>,
}

impl PolarGrid {
    pub fn uniform(r0: f64, r1: f64, nr: usize, ntheta: usize) -> Self {
        let r = (0..nr).map(|i| r0 + (r1 - r0) * (i as f64 + 0.5) / nr as f64).collect();
        let theta = (0..ntheta).map(|j| -std::f64::consts::PI + 2.0 * std::f64::consts::PI * (j as f64 + 0.5) / ntheta as f64).collect();
        PolarGrid { r, theta }
    }

    pub fn len(&self) -> usize {
        self.r.len() * self.theta.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Region hosting radius r; the two-layer interface belongs to the disk.
fn region_at(domain: &DomainSpec, r: f64) -> Result<usize> {
    let out = domain.outer_radius();
    let eps = 1e-12 * out;
    match domain.shape {
        Shape::Disk { .. } if (0.0..=out + eps).contains(&r) => Ok(0),
        Shape::Annulus { r1, .. } if r >= r1 - eps && r <= out + eps => Ok(0),
        Shape::TwoLayer { r1, .. } if (0.0..=out + eps).contains(&r) => Ok(if r <= r1 { 0 } else { 1 }),
        _ => Err(Error::Domain(format!("radius {r} outside the domain"))),
    }
}

/// u(r, theta) = sum_j c_j phi_j(r, theta) on the grid.
pub fn eigenfunction_field(problem: &SpectralProblem, coeffs: &[Cx], grid: &PolarGrid) -> Result<Vec<Cx>> {
    if coeffs.len() != problem.size() {
        return Err(Error::Invalid(format!("{} coefficients for a basis of {}", coeffs.len(), problem.size())));
    }
    let regs: Vec<usize> = grid.r.iter().map(|&r| region_at(&problem.domain, r)).collect::<Result<_>>()?;
    let active: Vec<(usize, &BasisFunction)> =
        problem.basis.iter().enumerate().filter(|(i, _)| coeffs[*i] != Cx::new(0.0, 0.0)).collect();
    let nt = grid.theta.len();
    let mut out = vec![Cx::new(0.0, 0.0); grid.len()];
    // angular factors per active function
    let ang: Vec<Vec<f64>> = active.iter().map(|(_, f)| grid.theta.iter().map(|&t| f.angular(t)).collect()).collect();
    for (ir, &r) in grid.r.iter().enumerate() {
        let row = &mut out[ir * nt..(ir + 1) * nt];
        for (a, (i, f)) in active.iter().enumerate() {
            if f.region != regs[ir] {
                continue;
            }
            let c = coeffs[*i] * f.radial(r);
            for (v, &g) in row.iter_mut().zip(&ang[a]) {
                *v += c * g;
            }
        }
    }
    Ok(out)
}

/// Moments of x1 against the Laplace ground state for the small-g expansion.
pub fn u0_moments(domain: &DomainSpec, m_count: usize) -> Result<U0Moments> {
    let plain = |c: &BoundaryCondition| matches!(c, BoundaryCondition::Dirichlet | BoundaryCondition::Neumann);
    if !plain(&domain.outer) || domain.inner.map_or(false, |c| !plain(&c)) {
        return Err(Error::Invalid("ground-state moments need Dirichlet or Neumann conditions".into()));
    }
    let basis = build_basis(domain, m_count)?;
    let mu0 = basis[0].mu;
    let tol = 1e-9 * mu0.max(1.0);
    let multiplicity = basis.iter().filter(|f| (f.mu - mu0).abs() <= tol).count();
    let regs = regions(domain)?;
    let gl = GaussLegendre::new(128);
    let u0 = &basis[0];
    let reg = regs[u0.region];
    let kmax = basis.iter().map(|f| f.wavenumber).fold(0.0, f64::max);
    let panels = ((2.0 * kmax * (reg.r_out - reg.r_in) / 80.0).ceil() as usize).max(2);
    let (r, w) = gl.mapped(reg.r_in, reg.r_out, panels);
    let base: Vec<f64> = r.iter().zip(&w).map(|(&x, &wt)| u0.radial(x) * x * x * wt).collect();
    let coupling = |f: &BasisFunction| -> f64 {
        if f.region != u0.region || f.parity != u0.parity || f.m.abs_diff(u0.m) != 1 {
            return 0.0;
        }
        if u0.parity == Parity::Sin && f.m.min(u0.m) == 0 {
            return 0.0;
        }
        let ang = if f.m.min(u0.m) == 0 { std::f64::consts::FRAC_1_SQRT_2 } else { 0.5 };
        ang * r.iter().zip(&base).map(|(&x, b)| f.radial(x) * b).sum::<f64>()
    };
    let mut sum = 0.0;
    for f in &basis[1..] {
        if (f.mu - mu0).abs() <= tol {
            continue;
        }
        let c = coupling(f);
        if c != 0.0 {
            sum += c * c / (f.mu - mu0);
        }
    }
    Ok(U0Moments { m1: coupling(u0), spectral_sum: sum, multiplicity })
}
