//! Four-term eigenvalue asymptotics near a localization point:
//! lambda = i v00 + h^{2/3} lambda0 + h lambda2 + h^{4/3} lambda4 + O(h^{5/3}).

use crate::airy1d::{eigenvalue_1d, inverse_square_norm, moments_1d, Airy1DEigenpair, BoundaryCondition, Scaling};
use crate::error::{Error, Result};
use crate::geometry::LocalModel;
use crate::specfun::airy::airy_prime_zero;
use crate::Cx;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct OscillatorEigenpair {
    pub k: usize,
    pub gamma: Cx,
    pub lambda2: Cx,
}

/// k-th eigenvalue of the complex oscillator -d^2/dsigma^2 + i v20 sigma^2.
pub fn lambda2(model: &LocalModel, k: usize) -> Result<OscillatorEigenpair> {
    if model.v20 == 0.0 {
        return Err(Error::Hypothesis("v20 = 0".into()));
    }
    if k == 0 {
        return Err(Error::Domain("oscillator index starts at 1".into()));
    }
    let gamma = Cx::from_polar(model.v20.abs().sqrt(), PI / 4.0 * model.v20.signum());
    Ok(OscillatorEigenpair { k, gamma, lambda2: gamma * (2 * k - 1) as f64 })
}

fn check_pair(model: &LocalModel, pair: &Airy1DEigenpair) -> Result<()> {
    model.validate()?;
    if pair.v01 != model.v01 {
        return Err(Error::Invalid(format!("pair built for v01 = {} but model has {}", pair.v01, model.v01)));
    }
    Ok(())
}

/// lambda4 assembled from the moments of the transverse eigenfunction.
pub fn lambda4(model: &LocalModel, pair: &Airy1DEigenpair) -> Result<Cx> {
    check_pair(model, pair)?;
    let m = moments_1d(pair)?;
    let i = Cx::i();
    let v = -i * model.v11 * model.v11 * m.i1 * m.i1 / (4.0 * model.v20)
        + model.curvature / 2.0 * m.i0
        + i * model.v02 * m.i2;
    debug_assert!({
        let c = lambda4_closed(model, pair)?;
        (c - v).norm() <= 1e-9 * (1.0 + v.norm())
    });
    Ok(v)
}

/// Per-condition closed forms of lambda4 written in terms of the Airy
/// shift a and kappa.
pub fn lambda4_closed(model: &LocalModel, pair: &Airy1DEigenpair) -> Result<Cx> {
    check_pair(model, pair)?;
    let sc = Scaling::new(model.v01);
    let (beta, b, delta) = (sc.beta, sc.b, sc.delta);
    let b2 = beta * beta;
    let i = Cx::i();
    let (v11, v20, v02, cu, v01) = (model.v11, model.v20, model.v02, model.curvature, model.v01);
    let a = pair.mu;
    Ok(match pair.condition {
        BoundaryCondition::Dirichlet => i * a * a / b2 * (-v11 * v11 / (9.0 * v20) + 8.0 / 15.0 * v02),
        BoundaryCondition::Neumann => {
            i / b2
                * (-a * a / 9.0 * v11 * v11 / v20 + cu * v01 / (2.0 * a) + (8.0 * a * a * a - 3.0) / (15.0 * a) * v02)
        }
        BoundaryCondition::Robin { kappa } => {
            let l0 = -a * b2;
            let den = kappa * kappa + l0;
            let i1 = 2.0 * l0 / (3.0 * i * v01) - kappa / (3.0 * den);
            let i2 = 1.0 / (5.0 * den) - 8.0 * l0 * l0 / (15.0 * v01 * v01) - 4.0 * kappa * l0 / (15.0 * i * v01 * den);
            -i * v11 * v11 * i1 * i1 / (4.0 * v20) - cu / 2.0 * i * v01 / den + i * v02 * i2
        }
        BoundaryCondition::Transmission { kappa } => {
            let c2 = inverse_square_norm(pair)?.inv();
            let db = delta.conj();
            let i1 = c2 * kappa * i / (12.0 * PI * PI * v01) - 2.0 * a / (3.0 * delta * b);
            let i2 = c2 * kappa * a * db.powi(4) / (15.0 * PI * PI * b.powi(4))
                + (8.0 * a * a * a - 3.0) / (15.0 * a * delta * delta * b * b);
            -i * v11 * v11 * i1 * i1 / (4.0 * v20) + cu * b * delta / (2.0 * a) + i * v02 * i2
        }
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "regime", rename_all = "snake_case")]
pub enum Regime {
    KappaFixed,
    KappaScaled { kappa_hat: f64 },
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct AsymptoticEigenvalue {
    pub offset: Cx,
    pub c23: Cx,
    pub c1: Cx,
    pub c43: Cx,
    pub n: usize,
    pub k: usize,
    pub condition: BoundaryCondition,
    pub regime: Regime,
}

/// Order of the first omitted term, as a power of h.
pub const REMAINDER_ORDER: f64 = 5.0 / 3.0;

impl AsymptoticEigenvalue {
    pub fn evaluate(&self, h: f64) -> Cx {
        let x = h.cbrt();
        self.offset + self.c23 * (x * x) + self.c1 * h + self.c43 * (h * x)
    }

    /// Value without the h^{4/3} term.
    pub fn evaluate_three(&self, h: f64) -> Cx {
        let x = h.cbrt();
        self.offset + self.c23 * (x * x) + self.c1 * h
    }

    /// (lambda - offset)/h^{2/3}
    pub fn rescaled(&self, h: f64) -> Cx {
        let x = h.cbrt();
        self.c23 + self.c1 * x + self.c43 * (x * x)
    }

    pub fn rescaled_three(&self, h: f64) -> Cx {
        self.c23 + self.c1 * h.cbrt()
    }

    pub fn conj(&self) -> Self {
        AsymptoticEigenvalue {
            offset: self.offset.conj(),
            c23: self.c23.conj(),
            c1: self.c1.conj(),
            c43: self.c43.conj(),
            ..*self
        }
    }
}

/// Four-term expansion with kappa fixed.
pub fn four_term(model: &LocalModel, condition: BoundaryCondition, n: usize, k: usize) -> Result<AsymptoticEigenvalue> {
    model.validate()?;
    let pair = eigenvalue_1d(condition, n, model.v01)?;
    let osc = lambda2(model, k)?;
    Ok(AsymptoticEigenvalue {
        offset: Cx::new(0.0, model.v00),
        c23: pair.lambda0,
        c1: osc.lambda2,
        c43: lambda4(model, &pair)?,
        n,
        k,
        condition,
        regime: Regime::KappaFixed,
    })
}

/// Expansion in the regime kappa = kappa_hat h^{2/3}: Neumann terms with the
/// boundary parameter entering only at order h^{4/3}.
pub fn four_term_scaled(
    model: &LocalModel,
    condition: BoundaryCondition,
    kappa_hat: f64,
    n: usize,
    k: usize,
) -> Result<AsymptoticEigenvalue> {
    if !matches!(condition, BoundaryCondition::Robin { .. } | BoundaryCondition::Transmission { .. }) {
        return Err(Error::Invalid("scaled regime needs a Robin or transmission condition".into()));
    }
    if !(kappa_hat >= 0.0 && kappa_hat.is_finite()) {
        return Err(Error::Domain(format!("kappa_hat = {kappa_hat} must be >= 0")));
    }
    let base = four_term(model, BoundaryCondition::Neumann, n, k)?;
    let sc = Scaling::new(model.v01);
    let ap = airy_prime_zero(n)?;
    Ok(AsymptoticEigenvalue {
        c43: base.c43 - kappa_hat * sc.b * sc.delta / ap,
        condition: condition.with_kappa(0.0),
        regime: Regime::KappaScaled { kappa_hat },
        ..base
    })
}

/// Quasimode eigenvalue for -Delta + i S V at a point, via h = S^{-3/2}.
pub fn large_domain(model: &LocalModel, condition: BoundaryCondition, n: usize, k: usize, s: f64) -> Result<Cx> {
    if !(s > 0.0) {
        return Err(Error::Domain(format!("S = {s} must be positive")));
    }
    let e = four_term(model, condition, n, k)?;
    Ok(e.evaluate(s.powf(-1.5)) * s)
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct U0Moments {
    /// <x1 u0, u0>
    pub m1: f64,
    /// sum over m != 0 of <x1 u0, u_m>^2/(mu_m - mu0)
    pub spectral_sum: f64,
    /// multiplicity of mu0 in the basis
    pub multiplicity: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SmallGShift {
    pub lambda1: f64,
    pub lambda2: f64,
}

impl SmallGShift {
    /// Eigenvalue of -Delta + i g x1 to second order in g.
    pub fn eigenvalue(&self, mu0: f64, g: f64) -> Cx {
        Cx::new(mu0 + g * g * self.lambda2, g * self.lambda1)
    }
}

/// Perturbative coefficients for -Delta + i g x1 at small g.
pub fn small_g_shift(mu0: f64, moments: &U0Moments) -> Result<SmallGShift> {
    if moments.multiplicity != 1 {
        return Err(Error::Invalid(format!("mu0 = {mu0} has multiplicity {}", moments.multiplicity)));
    }
    if moments.spectral_sum < 0.0 {
        return Err(Error::Invalid("negative spectral sum: mu0 is not the bottom eigenvalue".into()));
    }
    Ok(SmallGShift { lambda1: moments.m1, lambda2: moments.spectral_sum })
}

/// Semiclassical parameter of the Bloch-Torrey problem D(-Delta) + i gamma g x1.
pub fn nmr_h(d: f64, g: f64, gamma: f64) -> Result<f64> {
    if !(d > 0.0 && g > 0.0 && gamma > 0.0) {
        return Err(Error::Domain("D, g and gamma must be positive".into()));
    }
    Ok((d / (gamma * g)).sqrt())
}

/// Decay rate omega = gamma g lambda_h with h^2 = D/(gamma g).
pub fn nmr_decay(d: f64, g: f64, gamma: f64, lam: &AsymptoticEigenvalue) -> Result<Cx> {
    let h = nmr_h(d, g, gamma)?;
    Ok(lam.evaluate(h) * (gamma * g))
}

/// Same for an eigenvalue already computed at that h.
pub fn nmr_decay_value(d: f64, g: f64, gamma: f64, lam_h: Cx) -> Result<Cx> {
    nmr_h(d, g, gamma)?;
    Ok(lam_h * (gamma * g))
}

/// Term-by-term breakdown of omega: offset, D^{1/3}(gamma g)^{2/3} lambda0,
/// D^{1/2}(gamma g)^{1/2} lambda2, D^{2/3}(gamma g)^{1/3} lambda4.
pub fn nmr_terms(d: f64, g: f64, gamma: f64, lam: &AsymptoticEigenvalue) -> Result<[Cx; 4]> {
    nmr_h(d, g, gamma)?;
    let gg = gamma * g;
    Ok([
        lam.offset * gg,
        lam.c23 * (d.cbrt() * gg.powf(2.0 / 3.0)),
        lam.c1 * (d * gg).sqrt(),
        lam.c43 * (d.powf(2.0 / 3.0) * gg.cbrt()),
    ])
}
