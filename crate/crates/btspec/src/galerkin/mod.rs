//! Galerkin discretization of -h^2 Laplacian + i x1 in the Laplace eigenbasis
//! of disk, annulus and two-layer domains.

mod basis;
mod dump;
mod field;

pub use basis::{build_basis, radial_wavenumbers, regions, BasisFunction, Parity, RadialBc, Region, MAX_BASIS};
pub use dump::{read_matrix_dump, write_matrix_dump, DUMP_MAGIC};
pub use field::{eigenfunction_field, u0_moments, PolarGrid};

use crate::airy1d::BoundaryCondition;
use crate::eig::{eigen_leading, sort_by_real, CMatrix};
use crate::error::{Error, Result};
use crate::geometry::{DomainSpec, Shape};
use crate::specfun::quad::GaussLegendre;
use crate::Cx;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;
use std::sync::OnceLock;

/// Required value of h^2 mu_M / (|Omega|/(4 pi)).
pub const TRUNCATION_FACTOR: f64 = 10.0;
/// Gauss-Legendre nodes per radial panel.
pub const RADIAL_NODES: usize = 128;

fn gl() -> &'static GaussLegendre {
    static G: OnceLock<GaussLegendre> = OnceLock::new();
    G.get_or_init(|| GaussLegendre::new(RADIAL_NODES))
}

/// How Robin/transmission parameters enter the form: K = kappa h^{4/3}, or
/// K = kappa_hat h^2 for every boundary parameter.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "coupling", rename_all = "snake_case")]
pub enum Coupling {
    Fixed,
    Scaled { kappa_hat: f64 },
}

impl Coupling {
    pub fn strength(&self, kappa: f64, h: f64) -> f64 {
        match *self {
            Coupling::Fixed => kappa * h.powf(4.0 / 3.0),
            Coupling::Scaled { kappa_hat } => kappa_hat * h * h,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct AssembleOptions {
    pub coupling: Coupling,
    /// accept a basis that violates the truncation criterion (flagged)
    pub allow_under_resolved: bool,
}

impl Default for AssembleOptions {
    fn default() -> Self {
        AssembleOptions { coupling: Coupling::Fixed, allow_under_resolved: false }
    }
}

/// One parity block of the assembled problem, in local indices.
#[derive(Clone, Debug)]
pub struct Block {
    pub parity: Parity,
    /// positions of the block's functions in the full basis
    pub indices: Vec<usize>,
    pub lambda: Vec<f64>,
    /// potential matrix (real, symmetric)
    pub b: Vec<f64>,
    /// boundary/jump form with the strengths K folded in (real, symmetric)
    pub s: Vec<f64>,
    pub a: CMatrix,
}

impl Block {
    pub fn size(&self) -> usize {
        self.indices.len()
    }
}

#[derive(Clone, Debug)]
pub struct SpectralProblem {
    pub domain: DomainSpec,
    pub h: f64,
    pub basis: Vec<BasisFunction>,
    pub blocks: Vec<Block>,
    /// h^2 mu_M / (|Omega|/(4 pi))
    pub truncation_ratio: f64,
    pub criterion_met: bool,
    pub options: AssembleOptions,
}

/// h^2 mu_M / (|Omega|/(4 pi)) for a basis.
pub fn truncation_ratio(domain: &DomainSpec, basis: &[BasisFunction], h: f64) -> f64 {
    let mu_m = basis.last().map_or(0.0, |b| b.mu);
    h * h * mu_m / (domain.area() / (4.0 * PI))
}

/// Smallest M meeting the truncation criterion. Starts from the Weyl law N(mu) ~ |Omega| mu/(4 pi)
/// and counts the actual level sequence.
pub fn suggested_truncation(domain: &DomainSpec, h: f64) -> usize {
    let a = domain.area() / (4.0 * PI);
    let mu = TRUNCATION_FACTOR * a / (h * h);
    let weyl = (a * mu).ceil() as usize;
    let guess = ((weyl as f64 * 1.3) as usize + 16).min(MAX_BASIS);
    match build_basis(domain, guess) {
        Ok(b) => b.iter().position(|f| f.mu >= mu).map_or(guess, |i| i + 1),
        Err(_) => weyl,
    }
}

struct Nodes {
    r: Vec<f64>,
    w: Vec<f64>,
}

fn region_nodes(reg: &Region, basis: &[BasisFunction]) -> Nodes {
    let ours = basis.iter().filter(|f| f.region == reg.id);
    let (mut mmax, mut kmax) = (0usize, 0.0f64);
    for f in ours {
        mmax = mmax.max(f.m);
        kmax = kmax.max(f.wavenumber);
    }
    let rule = if 2 * mmax + 1 > 60 { 2 } else { 1 };
    let osc = (2.0 * kmax * (reg.r_out - reg.r_in) / 80.0).ceil() as usize;
    let (r, w) = gl().mapped(reg.r_in, reg.r_out, rule.max(osc));
    Nodes { r, w }
}

/// (radius, K, is the interface) for each boundary carrying a form term.
fn boundary_terms(domain: &DomainSpec, h: f64, coupling: &Coupling) -> Vec<(f64, f64, bool)> {
    let mut out = Vec::new();
    let mut add = |c: &BoundaryCondition, r: f64| match c {
        BoundaryCondition::Robin { kappa } => out.push((r, coupling.strength(*kappa, h), false)),
        BoundaryCondition::Transmission { kappa } => out.push((r, coupling.strength(*kappa, h), true)),
        _ => {}
    };
    match domain.shape {
        Shape::Disk { r0 } => add(&domain.outer, r0),
        Shape::Annulus { r1, r2 } | Shape::TwoLayer { r1, r2 } => {
            add(&domain.outer, r2);
            add(&domain.inner.unwrap(), r1);
        }
    }
    out
}

/// Builds A = h^2 Lambda + i B + sum K S per parity block.
pub fn assemble(domain: &DomainSpec, h: f64, m_count: usize, options: AssembleOptions) -> Result<SpectralProblem> {
    if !(h > 0.0 && h.is_finite()) {
        return Err(Error::Invalid(format!("h = {h} must be positive")));
    }
    let basis = build_basis(domain, m_count)?;
    assemble_with_basis(domain, h, basis, options)
}

pub fn assemble_with_basis(
    domain: &DomainSpec,
    h: f64,
    basis: Vec<BasisFunction>,
    options: AssembleOptions,
) -> Result<SpectralProblem> {
    let ratio = truncation_ratio(domain, &basis, h);
    let met = ratio >= TRUNCATION_FACTOR;
    if !met && !options.allow_under_resolved {
        return Err(Error::Truncation { ratio, required: TRUNCATION_FACTOR });
    }
    let regs = regions(domain)?;
    let nodes: Vec<Nodes> = regs.iter().map(|r| region_nodes(r, &basis)).collect();
    // radial values times sqrt(weight) r at the region nodes
    let values: Vec<Vec<f64>> = basis
        .iter()
        .map(|f| {
            let nd = &nodes[f.region];
            nd.r.iter().zip(&nd.w).map(|(&r, &w)| f.radial(r) * r * w.sqrt()).collect()
        })
        .collect();
    let bterms = boundary_terms(domain, h, &options.coupling);
    let is_two_layer = matches!(domain.shape, Shape::TwoLayer { .. });
    let trace = |f: &BasisFunction, r: f64| -> Option<f64> {
        if (f.r_in - r).abs() < 1e-14 || (f.r_out - r).abs() < 1e-14 {
            Some(f.radial(r))
        } else {
            None
        }
    };
    let traces: Vec<Vec<Option<f64>>> = basis.iter().map(|f| bterms.iter().map(|t| trace(f, t.0)).collect()).collect();
    let mut blocks = Vec::new();
    for parity in [Parity::Cos, Parity::Sin] {
        let indices: Vec<usize> = (0..basis.len()).filter(|&i| basis[i].parity == parity).collect();
        let n = indices.len();
        if n == 0 {
            continue;
        }
        let lambda: Vec<f64> = indices.iter().map(|&i| basis[i].mu).collect();
        let mut b = vec![0.0; n * n];
        let mut s = vec![0.0; n * n];
        for (p, &i) in indices.iter().enumerate() {
            let fi = &basis[i];
            for (q, &j) in indices.iter().enumerate().skip(p) {
                let fj = &basis[j];
                if fi.region == fj.region && fi.m.abs_diff(fj.m) == 1 {
                    let ang = if fi.m.min(fj.m) == 0 { std::f64::consts::FRAC_1_SQRT_2 } else { 0.5 };
                    let v = ang * values[i].iter().zip(&values[j]).map(|(a, c)| a * c).sum::<f64>();
                    b[p * n + q] = v;
                    b[q * n + p] = v;
                }
                if fi.m == fj.m {
                    let mut acc = 0.0;
                    for (t, &(r, kk, iface)) in bterms.iter().enumerate() {
                        if let (Some(ti), Some(tj)) = (traces[i][t], traces[j][t]) {
                            let sg = if iface && is_two_layer {
                                let si = if fi.region == 1 { 1.0 } else { -1.0 };
                                let sj = if fj.region == 1 { 1.0 } else { -1.0 };
                                si * sj
                            } else if fi.region != fj.region {
                                0.0
                            } else {
                                1.0
                            };
                            acc += kk * r * sg * ti * tj;
                        }
                    }
                    s[p * n + q] = acc;
                    s[q * n + p] = acc;
                }
            }
        }
        let h2 = h * h;
        let a = CMatrix::from_fn(n, n, |p, q| {
            let d = if p == q { h2 * lambda[p] } else { 0.0 };
            Cx::new(d + s[p * n + q], b[p * n + q])
        });
        blocks.push(Block { parity, indices, lambda, b, s, a });
    }
    Ok(SpectralProblem { domain: *domain, h, basis, blocks, truncation_ratio: ratio, criterion_met: met, options })
}

impl SpectralProblem {
    pub fn size(&self) -> usize {
        self.basis.len()
    }

    /// Full matrix in basis order (block diagonal by parity).
    pub fn full_matrix(&self) -> CMatrix {
        let n = self.size();
        let mut a = CMatrix::zeros(n, n);
        for blk in &self.blocks {
            for (p, &i) in blk.indices.iter().enumerate() {
                for (q, &j) in blk.indices.iter().enumerate() {
                    a[(i, j)] = blk.a[(p, q)];
                }
            }
        }
        a
    }
}

#[derive(Clone, Debug)]
pub struct Spectrum {
    /// ordered by increasing real part
    pub eigenvalues: Vec<Cx>,
    /// parity block each eigenvalue came from
    pub parity: Vec<Parity>,
    /// coefficient vectors over the full basis when requested
    pub vectors: Option<Vec<Vec<Cx>>>,
    pub residuals: Vec<f64>,
}

/// The `count` eigenvalues of smallest real part, merged over parity blocks.
pub fn solve(problem: &SpectralProblem, count: usize, with_vectors: bool) -> Result<Spectrum> {
    let n = problem.size();
    let mut items: Vec<(Cx, Parity, Option<Vec<Cx>>, f64)> = Vec::new();
    for blk in &problem.blocks {
        let c = count.min(blk.size());
        let sol = eigen_leading(&blk.a, c, with_vectors)?;
        for (j, &lam) in sol.eigenvalues.iter().enumerate() {
            let vec = sol.eigenvectors.as_ref().map(|v| {
                let mut full = vec![Cx::new(0.0, 0.0); n];
                for (p, &i) in blk.indices.iter().enumerate() {
                    full[i] = v[(p, j)];
                }
                full
            });
            let r = sol.residuals.get(j).copied().unwrap_or(0.0);
            items.push((lam, blk.parity, vec, r));
        }
    }
    items.sort_by(|a, b| a.0.re.total_cmp(&b.0.re).then(a.0.im.total_cmp(&b.0.im)));
    items.truncate(count);
    let mut ev: Vec<Cx> = items.iter().map(|t| t.0).collect();
    let before = ev.clone();
    sort_by_real(&mut ev);
    debug_assert_eq!(before, ev);
    Ok(Spectrum {
        eigenvalues: ev,
        parity: items.iter().map(|t| t.1).collect(),
        residuals: items.iter().map(|t| t.3).collect(),
        vectors: if with_vectors { Some(items.into_iter().map(|t| t.2.unwrap()).collect()) } else { None },
    })
}

/// First eigenvalue of an ordered list; of a leading conjugate pair the member with Im >= 0.
pub fn leading_eigenvalue(ev: &[Cx]) -> Cx {
    match ev {
        [a, b, ..] if (a - b.conj()).norm() <= 1e-8 * a.norm().max(1.0) => {
            if a.im >= 0.0 {
                *a
            } else {
                *b
            }
        }
        [a, ..] => *a,
        [] => Cx::new(f64::NAN, f64::NAN),
    }
}
