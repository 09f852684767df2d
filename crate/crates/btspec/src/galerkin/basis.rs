use crate::airy1d::BoundaryCondition;
use crate::error::{Error, Result};
use crate::geometry::{DomainSpec, Shape};
use crate::specfun::bessel::{jn_pair, jy_pair};
use crate::specfun::newton::bisect;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

/// Largest basis size accepted.
pub const MAX_BASIS: usize = 5000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Cos,
    Sin,
}

/// Condition imposed at the level of the basis functions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum RadialBc {
    Dirichlet,
    Neumann,
}

impl RadialBc {
    pub fn of(c: &BoundaryCondition) -> Self {
        match c {
            BoundaryCondition::Dirichlet => RadialBc::Dirichlet,
            _ => RadialBc::Neumann,
        }
    }
}

/// A disk (inner = None) or annular region on which basis functions live.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Region {
    pub id: usize,
    pub r_in: f64,
    pub r_out: f64,
    pub inner: Option<RadialBc>,
    pub outer: RadialBc,
}

impl Region {
    pub fn area(&self) -> f64 {
        PI * (self.r_out * self.r_out - self.r_in * self.r_in)
    }

    fn has_constant(&self) -> bool {
        self.outer == RadialBc::Neumann && self.inner.map_or(true, |b| b == RadialBc::Neumann)
    }
}

/// Regions of a domain: one for disk and annulus, two for the two-layer domain
/// (id 0 the inner disk, id 1 the annulus).
pub fn regions(domain: &DomainSpec) -> Result<Vec<Region>> {
    domain.validate()?;
    Ok(match domain.shape {
        Shape::Disk { r0 } => vec![Region { id: 0, r_in: 0.0, r_out: r0, inner: None, outer: RadialBc::of(&domain.outer) }],
        Shape::Annulus { r1, r2 } => vec![Region {
            id: 0,
            r_in: r1,
            r_out: r2,
            inner: Some(RadialBc::of(&domain.inner.unwrap())),
            outer: RadialBc::of(&domain.outer),
        }],
        Shape::TwoLayer { r1, r2 } => vec![
            Region { id: 0, r_in: 0.0, r_out: r1, inner: None, outer: RadialBc::Neumann },
            Region { id: 1, r_in: r1, r_out: r2, inner: Some(RadialBc::Neumann), outer: RadialBc::of(&domain.outer) },
        ],
    })
}

/// phi(r, theta) = norm (cj J_m(k r) + cy Y_m(k r)) Theta(theta) on its region.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct BasisFunction {
    pub m: usize,
    pub parity: Parity,
    /// radial index within (region, m), from 1
    pub k: usize,
    pub region: usize,
    pub wavenumber: f64,
    /// Laplace eigenvalue
    pub mu: f64,
    pub cj: f64,
    pub cy: f64,
    /// factor making the radial part unit in L^2(r dr)
    pub norm: f64,
    pub r_in: f64,
    pub r_out: f64,
}

impl BasisFunction {
    fn z(&self, r: f64) -> (f64, f64) {
        let x = self.wavenumber * r;
        if self.wavenumber == 0.0 {
            return (1.0, 0.0);
        }
        if self.cy == 0.0 {
            jn_pair(self.m, x)
        } else {
            let (j, jd, y, yd) = jy_pair(self.m, x);
            (self.cj * j + self.cy * y, self.cj * jd + self.cy * yd)
        }
    }

    /// Normalized radial profile.
    pub fn radial(&self, r: f64) -> f64 {
        self.norm * self.z(r).0
    }

    /// Derivative of the normalized radial profile in r.
    pub fn radial_prime(&self, r: f64) -> f64 {
        self.norm * self.z(r).1 * self.wavenumber
    }

    pub fn angular(&self, theta: f64) -> f64 {
        let m = self.m as f64;
        match (self.parity, self.m) {
            (Parity::Cos, 0) => 1.0 / (2.0 * PI).sqrt(),
            (Parity::Cos, _) => (m * theta).cos() / PI.sqrt(),
            (Parity::Sin, _) => (m * theta).sin() / PI.sqrt(),
        }
    }

    pub fn eval(&self, r: f64, theta: f64) -> f64 {
        self.radial(r) * self.angular(theta)
    }
}

/// Radial cross-product function whose zeros in k are the eigenvalues.
fn dispersion(reg: &Region, m: usize, k: f64) -> f64 {
    let pick = |bc: RadialBc, v: (f64, f64)| if bc == RadialBc::Dirichlet { v.0 } else { v.1 };
    match reg.inner {
        None => pick(reg.outer, jn_pair(m, k * reg.r_out)),
        Some(ib) => {
            let (ja, jda, ya, yda) = jy_pair(m, k * reg.r_in);
            let (a, b) = (pick(ib, (ya, yda)), -pick(ib, (ja, jda)));
            let (jb, jdb, yb, ydb) = jy_pair(m, k * reg.r_out);
            let s = a.hypot(b);
            (a * pick(reg.outer, (jb, jdb)) + b * pick(reg.outer, (yb, ydb))) / s
        }
    }
}

/// Wavenumbers k <= kmax of the radial problem of order m on the region,
/// k = 0 included when the constant solves it.
pub fn radial_wavenumbers(reg: &Region, m: usize, kmax: f64) -> Vec<f64> {
    let mut out = Vec::new();
    if m == 0 && reg.has_constant() {
        out.push(0.0);
    }
    let step = PI / (20.0 * reg.r_out);
    let k0 = (m as f64 / reg.r_out).max(1e-6 / reg.r_out);
    let mut a = k0;
    let mut fa = dispersion(reg, m, a);
    while a < kmax {
        let b = (a + step).min(kmax);
        let fb = dispersion(reg, m, b);
        if fa == 0.0 {
            out.push(a);
        } else if fa * fb < 0.0 {
            out.push(bisect(|k| dispersion(reg, m, k), a, b, 100));
        }
        if b >= kmax {
            break;
        }
        a = b;
        fa = fb;
    }
    out
}

fn make_function(reg: &Region, m: usize, parity: Parity, kidx: usize, k: f64) -> BasisFunction {
    let (cj, cy) = match reg.inner {
        _ if k == 0.0 => (1.0, 0.0),
        None => (1.0, 0.0),
        Some(ib) => {
            let (ja, jda, ya, yda) = jy_pair(m, k * reg.r_in);
            let (a, b) = if ib == RadialBc::Dirichlet { (ya, -ja) } else { (yda, -jda) };
            let s = a.hypot(b);
            (a / s, b / s)
        }
    };
    let mut f = BasisFunction {
        m,
        parity,
        k: kidx,
        region: reg.id,
        wavenumber: k,
        mu: k * k,
        cj,
        cy,
        norm: 1.0,
        r_in: reg.r_in,
        r_out: reg.r_out,
    };
    let n2 = if k == 0.0 {
        0.5 * (reg.r_out * reg.r_out - reg.r_in * reg.r_in)
    } else {
        // int r Z(kr)^2 dr = [r^2/2 (Z'^2 + (1 - m^2/(kr)^2) Z^2)]
        let bracket = |r: f64| {
            if r == 0.0 {
                return 0.0;
            }
            let (z, zd) = f.z(r);
            let x = k * r;
            0.5 * r * r * (zd * zd + (1.0 - (m * m) as f64 / (x * x)) * z * z)
        };
        bracket(reg.r_out) - bracket(reg.r_in)
    };
    f.norm = 1.0 / n2.sqrt();
    f
}

/// All basis functions with wavenumber <= kmax on the region.
fn region_functions(reg: &Region, kmax: f64) -> Vec<BasisFunction> {
    let mut out = Vec::new();
    let mut m = 0usize;
    loop {
        let ks = radial_wavenumbers(reg, m, kmax);
        if ks.is_empty() && m as f64 > kmax * reg.r_out {
            break;
        }
        for (i, &k) in ks.iter().enumerate() {
            out.push(make_function(reg, m, Parity::Cos, i + 1, k));
            if m > 0 {
                out.push(make_function(reg, m, Parity::Sin, i + 1, k));
            }
        }
        m += 1;
    }
    out
}

fn order_key(a: &BasisFunction, b: &BasisFunction) -> std::cmp::Ordering {
    a.mu.total_cmp(&b.mu)
        .then(a.m.cmp(&b.m))
        .then(a.parity.cmp(&b.parity))
        .then(a.region.cmp(&b.region))
        .then(a.k.cmp(&b.k))
}

/// The `m_count` basis functions of smallest Laplace eigenvalue, ordered by
/// (mu, m, parity, region, k).
pub fn build_basis(domain: &DomainSpec, m_count: usize) -> Result<Vec<BasisFunction>> {
    if m_count == 0 || m_count > MAX_BASIS {
        return Err(Error::Invalid(format!("basis size {m_count} outside 1..={MAX_BASIS}")));
    }
    let regs = regions(domain)?;
    let area: f64 = regs.iter().map(|r| r.area()).sum();
    // Weyl estimate N(k) ~ area k^2/(4 pi)
    let mut kmax = (4.0 * PI * m_count as f64 / area).sqrt() * 1.15 + 4.0;
    for _ in 0..20 {
        let mut all: Vec<BasisFunction> = regs.iter().flat_map(|r| region_functions(r, kmax)).collect();
        if all.len() >= m_count {
            all.sort_by(order_key);
            // make sure nothing below the cut is missing beyond kmax
            if all[m_count - 1].wavenumber < kmax {
                all.truncate(m_count);
                return Ok(all);
            }
        }
        kmax *= 1.3;
    }
    Err(Error::NoConvergence { iterations: 20, residual: kmax })
}
