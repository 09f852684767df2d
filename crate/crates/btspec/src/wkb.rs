//! WKB quasimodes along the boundary: eikonal phases theta0, theta1, the
//! s-dependent transverse eigenvalue mu0(s) and the coefficients mu0, mu1, mu2.

use crate::airy1d::{eigenfunction_1d, eigenvalue_1d, moments_1d, Airy1DEigenpair, BoundaryCondition};
use crate::error::{Error, Result};
use crate::geometry::{LocalModel, Orientation};
use crate::specfun::quad::GaussLegendre;
use crate::Cx;
use serde::{Deserialize, Serialize};
use std::sync::{Arc, OnceLock};

type Fun = Arc<dyn Fn(f64) -> f64 + Send + Sync>;

/// Below this |s'| the theta1 integrand is replaced by its linear Taylor model.
pub const THETA1_CUTOFF: f64 = 1e-3;

fn gl() -> &'static GaussLegendre {
    static G: OnceLock<GaussLegendre> = OnceLock::new();
    G.get_or_init(|| GaussLegendre::new(40))
}

/// v0(s) = V(s, 0), v1(s) = d_rho V(s, 0), curvature c(s) along one boundary
/// component, with s = 0 at the localization point.
#[derive(Clone)]
pub struct BoundaryProfile {
    pub v0: Fun,
    pub v1: Fun,
    pub curvature: Fun,
    pub model: LocalModel,
    /// theta0, theta1 are computed for |s| <= half_width
    pub half_width: f64,
}

impl std::fmt::Debug for BoundaryProfile {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("BoundaryProfile").field("model", &self.model).field("half_width", &self.half_width).finish()
    }
}

impl BoundaryProfile {
    /// V = x1 near (R0, 0) on the disk boundary.
    pub fn disk(r0: f64) -> Self {
        BoundaryProfile {
            v0: Arc::new(move |s| r0 * (s / r0).cos()),
            v1: Arc::new(move |s| -(s / r0).cos()),
            curvature: Arc::new(move |_| 1.0 / r0),
            model: LocalModel::x1_on_circle(r0, Orientation::Interior),
            half_width: 0.9 * (2.0f64 / 3.0).acos() * r0,
        }
    }

    /// Quadratic Taylor profile built from the local model alone.
    pub fn from_model(model: LocalModel) -> Self {
        let m = model;
        let mut half_width = 10.0;
        if m.v11 != 0.0 {
            half_width = f64::min(half_width, 0.9 * (m.v01 / m.v11).abs());
        }
        BoundaryProfile {
            v0: Arc::new(move |s| m.v00 + m.v20 * s * s),
            v1: Arc::new(move |s| m.v01 + m.v11 * s),
            curvature: Arc::new(move |_| m.curvature),
            model,
            half_width,
        }
    }

    pub fn v1hat(&self, s: f64) -> f64 {
        (self.v1)(s) - 2.0 * (self.curvature)(s) * ((self.v0)(s) - (self.v0)(0.0))
    }
}

fn root_re_nonneg(z: Cx) -> Cx {
    let r = z.sqrt();
    if r.re < 0.0 {
        -r
    } else {
        r
    }
}

/// theta0'(s); odd in s so that it is smooth across 0.
fn theta0_prime(v0: &dyn Fn(f64) -> f64, v00: f64, s: f64) -> Cx {
    let r = root_re_nonneg(Cx::new(0.0, v0(s) - v00));
    if s < 0.0 {
        -r
    } else {
        r
    }
}

/// theta0(s) = int_0^s theta0' with Re theta0' >= 0 in the direction of |s|.
pub fn eikonal_theta0(v0: &dyn Fn(f64) -> f64, v0_at_0: f64, s: f64) -> Result<Cx> {
    if s == 0.0 {
        return Ok(Cx::new(0.0, 0.0));
    }
    let panels = ((s.abs() / 0.25).ceil() as usize).max(1);
    let (x, w) = gl().mapped(0.0, s, panels);
    let mut sign = 0.0;
    let mut acc = Cx::new(0.0, 0.0);
    for (&t, &wt) in x.iter().zip(&w) {
        let d = v0(t) - v0_at_0;
        if d != 0.0 {
            if sign != 0.0 && d.signum() != sign {
                return Err(Error::Domain(format!("v0(s) - v0(0) changes sign inside [0, {s}]")));
            }
            sign = d.signum();
        }
        acc += theta0_prime(v0, v0_at_0, t) * wt;
    }
    Ok(acc)
}

/// Transverse eigenvalue of -d^2/dtau^2 + i v1hat tau under the condition.
pub fn mu0_of_s(v1hat: f64, condition: BoundaryCondition, n: usize) -> Result<Cx> {
    if v1hat == 0.0 {
        return Err(Error::Hypothesis("v1hat vanishes".into()));
    }
    Ok(eigenvalue_1d(condition, n, v1hat)?.lambda0)
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct WkbMu {
    pub mu0: Cx,
    pub mu1: Cx,
    pub mu2: Cx,
    /// theta1'(0)
    pub theta1_prime0: Cx,
}

fn lambda0_of(pair: &Airy1DEigenpair, v: f64) -> Result<Cx> {
    match pair.condition {
        BoundaryCondition::Dirichlet | BoundaryCondition::Neumann => {
            let sc = crate::airy1d::Scaling::new(v);
            Ok(-pair.mu * sc.beta * sc.beta)
        }
        c => mu0_of_s(v, c, pair.n),
    }
}

/// mu0, mu1 = theta0''(0), and the solvability value mu2 at s = 0, with
/// theta1'(0) from a fourth-order difference of mu0 in v01.
pub fn wkb_mu_coeffs(model: &LocalModel, condition: BoundaryCondition, n: usize) -> Result<WkbMu> {
    model.validate()?;
    let pair = eigenvalue_1d(condition, n, model.v01)?;
    let mu1 = root_re_nonneg(Cx::new(0.0, model.v20));
    let e = 1e-3 * model.v01.abs();
    let f = |k: f64| lambda0_of(&pair, model.v01 + k * e);
    let dl = (f(-2.0)? - f(2.0)? * 1.0 + (f(1.0)? - f(-1.0)?) * 8.0) / (12.0 * e);
    let theta1_prime0 = dl * model.v11 / (2.0 * mu1);
    let m = moments_1d(&pair)?;
    let mu2 = Cx::i() * model.v02 * m.i2 - theta1_prime0 * theta1_prime0 + model.curvature / 2.0 * m.i0;
    Ok(WkbMu { mu0: pair.lambda0, mu1, mu2, theta1_prime0 })
}

/// WKB data for one boundary profile and transverse mode.
#[derive(Clone, Debug)]
pub struct WkbPhase {
    pub profile: BoundaryProfile,
    pub condition: BoundaryCondition,
    pub n: usize,
    pub mu0: Cx,
    pub mu1: Cx,
    pub mu2: Cx,
    pub valid_range: (f64, f64),
    pair0: Airy1DEigenpair,
}

impl WkbPhase {
    pub fn new(profile: BoundaryProfile, condition: BoundaryCondition, n: usize) -> Result<Self> {
        let v = profile.v1hat(0.0);
        if (v - profile.model.v01).abs() > 1e-12 * v.abs().max(1.0) {
            return Err(Error::Invalid("profile and local model disagree at s = 0".into()));
        }
        let mu = wkb_mu_coeffs(&profile.model, condition, n)?;
        let pair0 = eigenvalue_1d(condition, n, v)?;
        let w = profile.half_width;
        Ok(WkbPhase { profile, condition, n, mu0: mu.mu0, mu1: mu.mu1, mu2: mu.mu2, valid_range: (-w, w), pair0 })
    }

    fn check(&self, s: f64) -> Result<()> {
        if s < self.valid_range.0 || s > self.valid_range.1 {
            return Err(Error::Domain(format!("s = {s} outside {:?}", self.valid_range)));
        }
        Ok(())
    }

    pub fn mu0_at(&self, s: f64) -> Result<Cx> {
        let v = self.profile.v1hat(s);
        if v == 0.0 || v.signum() != self.pair0.v01.signum() {
            return Err(Error::Hypothesis(format!("v1hat changes sign before s = {s}")));
        }
        lambda0_of(&self.pair0, v)
    }

    pub fn theta0(&self, s: f64) -> Result<Cx> {
        self.check(s)?;
        let v0 = self.profile.v0.clone();
        eikonal_theta0(&*v0, v0(0.0), s)
    }

    pub fn theta0_prime(&self, s: f64) -> Cx {
        let v0 = self.profile.v0.clone();
        theta0_prime(&*v0, v0(0.0), s)
    }

    /// Integrand (mu0(s) - mu0)/(2 theta0'(s)) of the second eikonal equation.
    pub fn theta1_integrand(&self, s: f64) -> Result<Cx> {
        if s.abs() < THETA1_CUTOFF {
            let a = self.theta1_integrand_raw(THETA1_CUTOFF)?;
            let b = self.theta1_integrand_raw(-THETA1_CUTOFF)?;
            return Ok((a + b) * 0.5 + (a - b) * (s / (2.0 * THETA1_CUTOFF)));
        }
        self.theta1_integrand_raw(s)
    }

    fn theta1_integrand_raw(&self, s: f64) -> Result<Cx> {
        Ok((self.mu0_at(s)? - self.mu0) / (self.theta0_prime(s) * 2.0))
    }

    pub fn theta1(&self, s: f64) -> Result<Cx> {
        self.check(s)?;
        if s == 0.0 {
            return Ok(Cx::new(0.0, 0.0));
        }
        let c = THETA1_CUTOFF.min(s.abs()) * s.signum();
        let mut acc = Cx::new(0.0, 0.0);
        let mut seg = |a: f64, b: f64, panels: usize| -> Result<()> {
            let (x, w) = gl().mapped(a, b, panels);
            for (&t, &wt) in x.iter().zip(&w) {
                acc += self.theta1_integrand(t)? * wt;
            }
            Ok(())
        };
        seg(0.0, c, 1)?;
        if c != s {
            seg(c, s, ((s.abs() / 0.25).ceil() as usize).max(1))?;
        }
        Ok(acc)
    }

    /// exp(-(theta0 + h^{2/3} theta1)/h), or exp(-theta0/h) without theta1.
    pub fn decay(&self, h: f64, s: f64, with_theta1: bool) -> Result<Cx> {
        let mut th = self.theta0(s)?;
        if with_theta1 {
            th += self.theta1(s)? * h.powf(2.0 / 3.0);
        }
        Ok((-th / h).exp())
    }
}

/// Leading WKB profile f0(s, tau) exp(-(theta0 + h^{2/3} theta1)/h), with
/// f0(s, .) the normalized transverse eigenfunction at v1hat(s).
pub fn wkb_profile(phase: &WkbPhase, pair: &Airy1DEigenpair, h: f64, s: f64, tau: f64) -> Result<Cx> {
    if !(h > 0.0) {
        return Err(Error::Domain(format!("h = {h} must be positive")));
    }
    if pair.condition != phase.condition || pair.n != phase.n {
        return Err(Error::Invalid("pair does not match the phase".into()));
    }
    phase.check(s)?;
    let local = eigenvalue_1d(pair.condition, pair.n, phase.profile.v1hat(s))?;
    Ok(eigenfunction_1d(&local, tau)? * phase.decay(h, s, true)?)
}
