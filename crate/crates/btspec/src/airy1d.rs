//! The 1D complex Airy operator `-d^2/dtau^2 + i v01 tau` on the half-line
//! (Dirichlet, Neumann, Robin) or on the line with a transmission condition
//! at 0. Eigenfunctions are normalized bilinearly, `int psi^2 = 1` with no
//! complex conjugation.

use crate::error::{Error, Result};
use crate::specfun::airy::{airy_pair, airy_prime_zero, airy_zero};
use crate::specfun::newton::{newton_complex_with, NewtonOptions};
use crate::Cx;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

/// Boundary or interface condition. `kappa` is the rescaled parameter.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum BoundaryCondition {
    Dirichlet,
    Neumann,
    Robin { kappa: f64 },
    Transmission { kappa: f64 },
}

impl BoundaryCondition {
    pub fn kappa(&self) -> f64 {
        match *self {
            BoundaryCondition::Robin { kappa } | BoundaryCondition::Transmission { kappa } => kappa,
            _ => 0.0,
        }
    }

    pub fn with_kappa(&self, kappa: f64) -> Self {
        match self {
            BoundaryCondition::Robin { .. } => BoundaryCondition::Robin { kappa },
            BoundaryCondition::Transmission { .. } => BoundaryCondition::Transmission { kappa },
            other => *other,
        }
    }

    pub fn tag(&self) -> &'static str {
        match self {
            BoundaryCondition::Dirichlet => "D",
            BoundaryCondition::Neumann => "N",
            BoundaryCondition::Robin { .. } => "R",
            BoundaryCondition::Transmission { .. } => "T",
        }
    }
}

/// Largest continuation step in kappa.
pub const KAPPA_STEP: f64 = 0.1;
/// Threshold on the unnormalized bilinear norm below which a Jordan block is suspected.
pub const JORDAN_THRESHOLD: f64 = 1e-8;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Airy1DEigenpair {
    pub condition: BoundaryCondition,
    pub n: usize,
    pub v01: f64,
    /// Shift of the Airy argument at tau = 0: a_n, a'_n, a_n^R or a_n^+.
    pub mu: Cx,
    /// a_n^- for transmission, equal to `mu` otherwise.
    pub mu_minus: Cx,
    pub lambda0: Cx,
    pub normalization: Cx,
}

/// Convention constants for a given v01.
#[derive(Clone, Copy, Debug)]
pub struct Scaling {
    pub sign: f64,
    /// |v01|^{1/3}
    pub b: f64,
    /// exp(i pi/6 sign v01)
    pub delta: Cx,
    /// b delta
    pub beta: Cx,
}

impl Scaling {
    pub fn new(v01: f64) -> Self {
        let sign = v01.signum();
        let b = v01.abs().cbrt();
        let delta = Cx::from_polar(1.0, PI / 6.0 * sign);
        Scaling { sign, b, delta, beta: delta * b }
    }
}

fn ai(z: Cx) -> Result<(Cx, Cx)> {
    airy_pair(z)
}

fn newton_opts() -> NewtonOptions {
    NewtonOptions { tol: 1e-13, max_iter: 80, trust_radius: 0.5, ..Default::default() }
}

fn check_args(cond: &BoundaryCondition, n: usize, v01: f64) -> Result<()> {
    if v01 == 0.0 || !v01.is_finite() {
        return Err(Error::Hypothesis("v01 must be nonzero".into()));
    }
    if n == 0 || n > 20 {
        return Err(Error::Domain(format!("index {n} outside 1..=20")));
    }
    let k = cond.kappa();
    if !(k >= 0.0) || !k.is_finite() {
        return Err(Error::Domain(format!("kappa = {k} must be finite and >= 0")));
    }
    Ok(())
}

fn robin_residual(a: Cx, kt: f64, sc: &Scaling) -> Result<(Cx, Cx)> {
    let (f, fp) = ai(a)?;
    Ok((sc.delta * fp - kt * f, sc.delta * a * f - kt * fp))
}

/// Residual of `delta Ai'(a) - kappa/|v01|^{1/3} Ai(a)` at the pair's root.
pub fn robin_determinant(pair: &Airy1DEigenpair) -> Result<Cx> {
    let sc = Scaling::new(pair.v01);
    robin_residual(pair.mu, pair.condition.kappa() / sc.b, &sc).map(|r| r.0)
}

fn rot() -> Cx {
    Cx::from_polar(1.0, 2.0 * PI / 3.0)
}

fn transmission_residual(lam: Cx, kc: f64) -> Result<(Cx, Cx)> {
    let w = rot();
    let wb = w.conj();
    let (a1, d1) = ai(w * lam)?;
    let (a2, d2) = ai(wb * lam)?;
    let g = 2.0 * PI * d1 * d2 + kc;
    let dg = 2.0 * PI * (w * (w * lam) * a1 * d2 + wb * d1 * (wb * lam) * a2);
    Ok((g, dg))
}

/// Residual of `2 pi Ai'(e^{2 pi i/3} l) Ai'(e^{-2 pi i/3} l) + kappa/|v01|^{1/3}`
/// with `l` the line eigenvalue recovered from the pair.
pub fn transmission_determinant(pair: &Airy1DEigenpair) -> Result<Cx> {
    let sc = Scaling::new(pair.v01);
    let lam = pair.mu * Cx::from_polar(1.0, -2.0 * PI / 3.0 * sc.sign);
    transmission_residual(lam, pair.condition.kappa() / sc.b).map(|r| r.0)
}

fn solve_error(e: Error, n: usize) -> Error {
    match e {
        Error::NoConvergence { iterations, residual } => Error::NoConvergence { iterations: iterations + 1000 * n, residual },
        other => other,
    }
}

/// Continues the n-th root from kappa = 0 to the target kappa.
fn track(cond: &BoundaryCondition, n: usize, sc: &Scaling) -> Result<(Cx, Cx)> {
    match *cond {
        BoundaryCondition::Dirichlet => {
            let a = Cx::new(airy_zero(n)?, 0.0);
            Ok((a, a))
        }
        BoundaryCondition::Neumann => {
            let a = Cx::new(airy_prime_zero(n)?, 0.0);
            Ok((a, a))
        }
        BoundaryCondition::Robin { kappa } => {
            let mut a = Cx::new(airy_prime_zero(n)?, 0.0);
            let steps = (kappa / KAPPA_STEP).ceil().max(1.0) as usize;
            let mut kprev = 0.0;
            for j in 1..=steps {
                let k = kappa * j as f64 / steps as f64;
                // first-order predictor da/dkappa = Ai(a)/(b F'(a))
                let (f, _) = ai(a)?;
                let (_, dfa) = robin_residual(a, kprev / sc.b, sc)?;
                if dfa.norm() > 1e-30 {
                    a += f / (sc.b * dfa) * (k - kprev);
                }
                let kt = k / sc.b;
                let r = newton_complex_with(
                    |z| robin_residual(z, kt, sc).map(|p| p.0).unwrap_or(Cx::new(f64::NAN, 0.0)),
                    |z| robin_residual(z, kt, sc).map(|p| p.1).unwrap_or(Cx::new(f64::NAN, 0.0)),
                    a,
                    &newton_opts(),
                )
                .map_err(|e| solve_error(e, n))?;
                a = r.value;
                kprev = k;
            }
            Ok((a, a))
        }
        BoundaryCondition::Transmission { kappa } => {
            let ap = airy_prime_zero(n)?;
            let to_plus = Cx::from_polar(1.0, 2.0 * PI / 3.0 * sc.sign);
            let mut lam = to_plus.conj() * ap;
            let steps = (kappa / KAPPA_STEP).ceil().max(1.0) as usize;
            let mut kprev = 0.0;
            for j in 1..=steps {
                let k = kappa * j as f64 / steps as f64;
                let (_, dg) = transmission_residual(lam, kprev / sc.b)?;
                if dg.norm() > 1e-30 {
                    lam -= (k - kprev) / sc.b / dg;
                }
                let kc = k / sc.b;
                let r = newton_complex_with(
                    |z| transmission_residual(z, kc).map(|p| p.0).unwrap_or(Cx::new(f64::NAN, 0.0)),
                    |z| transmission_residual(z, kc).map(|p| p.1).unwrap_or(Cx::new(f64::NAN, 0.0)),
                    lam,
                    &newton_opts(),
                )
                .map_err(|e| solve_error(e, n))?;
                lam = r.value;
                kprev = k;
            }
            Ok((lam * to_plus, lam * to_plus.conj()))
        }
    }
}

/// n-th eigenpair (n >= 1) for the given condition and normal derivative v01.
pub fn eigenvalue_1d(cond: BoundaryCondition, n: usize, v01: f64) -> Result<Airy1DEigenpair> {
    check_args(&cond, n, v01)?;
    let sc = Scaling::new(v01);
    let (mu, mu_minus) = track(&cond, n, &sc)?;
    if matches!(cond, BoundaryCondition::Robin { .. } | BoundaryCondition::Transmission { .. }) && cond.kappa() > 0.0 {
        for m in [n.wrapping_sub(1), n + 1] {
            if m == 0 || m > 21 {
                continue;
            }
            let (other, _) = track(&cond, m, &sc)?;
            if (other - mu).norm() < 1e-8 * (1.0 + mu.norm()) {
                return Err(Error::BranchCollision(n.min(m), n.max(m)));
            }
        }
    }
    let lambda0 = -mu * sc.beta * sc.beta;
    let mut pair = Airy1DEigenpair { condition: cond, n, v01, mu, mu_minus, lambda0, normalization: Cx::new(1.0, 0.0) };
    pair.normalization = normalization_1d(&pair)?;
    Ok(pair)
}

/// The first `count` eigenpairs, sorted by real part of lambda0.
pub fn spectrum_1d(cond: BoundaryCondition, count: usize, v01: f64) -> Result<Vec<Airy1DEigenpair>> {
    let mut out = Vec::with_capacity(count);
    for n in 1..=count {
        out.push(eigenvalue_1d(cond, n, v01)?);
    }
    for i in 0..out.len() {
        for j in i + 1..out.len() {
            if (out[i].mu - out[j].mu).norm() < 1e-8 * (1.0 + out[i].mu.norm()) {
                return Err(Error::BranchCollision(i + 1, j + 1));
            }
        }
    }
    out.sort_by(|a, b| a.lambda0.re.total_cmp(&b.lambda0.re));
    Ok(out)
}

/// Inverse square of the normalization constant, i.e. the bilinear norm of
/// the unnormalized eigenfunction.
pub fn inverse_square_norm(pair: &Airy1DEigenpair) -> Result<Cx> {
    let sc = Scaling::new(pair.v01);
    let a = pair.mu;
    Ok(match pair.condition {
        BoundaryCondition::Dirichlet => {
            let (_, d) = ai(a)?;
            d * d / sc.beta
        }
        BoundaryCondition::Neumann => {
            let (f, _) = ai(a)?;
            -a * f * f / sc.beta
        }
        BoundaryCondition::Robin { kappa } => {
            let (f, _) = ai(a)?;
            let kh = kappa / (sc.delta * sc.b);
            f * f * (kh * kh - a) / sc.beta
        }
        BoundaryCondition::Transmission { .. } => {
            let (fp, dp) = ai(a)?;
            let (fm, dm) = ai(pair.mu_minus)?;
            let db = sc.delta.conj();
            a * db / (2.0 * PI * sc.b) * (db * dm * fp - sc.delta * dp * fm)
        }
    })
}

/// Normalization constant c with `int psi^2 = 1`.
pub fn normalization_1d(pair: &Airy1DEigenpair) -> Result<Cx> {
    let s = inverse_square_norm(pair)?;
    if s.norm() < JORDAN_THRESHOLD {
        return Err(Error::JordanBlock(s.norm()));
    }
    Ok(s.sqrt().inv())
}

/// Which branch of a transmission eigenfunction to evaluate at tau = 0.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Minus,
    Plus,
}

/// psi and d psi/d tau. For transmission, `side` picks the branch; for the
/// half-line conditions it must be `Plus` and tau >= 0.
pub fn eigenfunction_1d_side(pair: &Airy1DEigenpair, tau: f64, side: Side) -> Result<(Cx, Cx)> {
    let sc = Scaling::new(pair.v01);
    let c = pair.normalization;
    match pair.condition {
        BoundaryCondition::Transmission { .. } => {
            let db = sc.delta.conj();
            match side {
                Side::Plus => {
                    if tau < 0.0 {
                        return Err(Error::Domain(format!("tau = {tau} on the + branch")));
                    }
                    let (_, dm) = ai(pair.mu_minus)?;
                    let (f, d) = ai(pair.mu + sc.beta * tau)?;
                    let k = -c * db * dm;
                    Ok((k * f, k * d * sc.beta))
                }
                Side::Minus => {
                    if tau > 0.0 {
                        return Err(Error::Domain(format!("tau = {tau} on the - branch")));
                    }
                    let (_, dp) = ai(pair.mu)?;
                    let g = sc.b * db;
                    let (f, d) = ai(pair.mu_minus - g * tau)?;
                    let k = c * sc.delta * dp;
                    Ok((k * f, -k * d * g))
                }
            }
        }
        _ => {
            if tau < 0.0 || side == Side::Minus {
                return Err(Error::Domain(format!("tau = {tau} outside the half-line")));
            }
            let (f, d) = ai(pair.mu + sc.beta * tau)?;
            Ok((c * f, c * d * sc.beta))
        }
    }
}

/// psi at tau; transmission uses the - branch for tau < 0 and + otherwise.
pub fn eigenfunction_1d(pair: &Airy1DEigenpair, tau: f64) -> Result<Cx> {
    let side = if tau < 0.0 { Side::Minus } else { Side::Plus };
    eigenfunction_1d_side(pair, tau, side).map(|p| p.0)
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Moments {
    /// int d/dtau (psi^2): -psi(0)^2 on the half-line, psi_-(0)^2 - psi_+(0)^2 for transmission.
    pub i0: Cx,
    /// int tau psi^2
    pub i1: Cx,
    /// int tau^2 psi^2
    pub i2: Cx,
}

/// Closed-form moments of the normalized eigenfunction.
pub fn moments_1d(pair: &Airy1DEigenpair) -> Result<Moments> {
    let sc = Scaling::new(pair.v01);
    let (beta, b, delta) = (sc.beta, sc.b, sc.delta);
    let a = pair.mu;
    let i = Cx::i();
    Ok(match pair.condition {
        BoundaryCondition::Dirichlet => Moments {
            i0: Cx::new(0.0, 0.0),
            i1: -2.0 * a / (3.0 * beta),
            i2: 8.0 * a * a / (15.0 * beta * beta),
        },
        BoundaryCondition::Neumann => Moments {
            i0: beta / a,
            i1: -2.0 * a / (3.0 * beta),
            i2: (8.0 * a * a * a - 3.0) / (15.0 * a * beta * beta),
        },
        BoundaryCondition::Robin { kappa } => {
            let l0 = pair.lambda0;
            let v = pair.v01;
            let den = kappa * kappa + l0;
            Moments {
                i0: -i * v / den,
                i1: 2.0 * l0 / (3.0 * i * v) - kappa / (3.0 * den),
                i2: 1.0 / (5.0 * den) - 8.0 * l0 * l0 / (15.0 * v * v) - 4.0 * kappa * l0 / (15.0 * i * v * den),
            }
        }
        BoundaryCondition::Transmission { kappa } => {
            let c2 = pair.normalization * pair.normalization;
            let v = pair.v01;
            let db = delta.conj();
            Moments {
                i0: beta / a,
                i1: c2 * kappa * i / (12.0 * PI * PI * v) - 2.0 * a / (3.0 * delta * b),
                i2: c2 * kappa * a * db.powi(4) / (15.0 * PI * PI * b.powi(4))
                    + (8.0 * a * a * a - 3.0) / (15.0 * a * delta * delta * b * b),
            }
        }
    })
}

/// int_0^inf of Psi^2, x Psi^2, x^2 Psi^2 for Psi(x) = Ai(alpha + beta x),
/// valid when |arg beta| < pi/3.
pub fn half_line_integrals(alpha: Cx, beta: Cx) -> Result<(Cx, Cx, Cx)> {
    let (f, d) = ai(alpha)?;
    let p0 = (d * d - alpha * f * f) / beta;
    let q = f * d + 2.0 * alpha * d * d - 2.0 * alpha * alpha * f * f;
    let p1 = -q / (3.0 * beta * beta);
    let p2 = (f * f + 4.0 / 3.0 * alpha * q) / (5.0 * beta.powi(3));
    Ok((p0, p1, p2))
}

/// Moments obtained from the half-line integral identities applied to the
/// unnormalized eigenfunction (both branches for transmission).
pub fn moments_from_identities(pair: &Airy1DEigenpair) -> Result<(Cx, Moments)> {
    let sc = Scaling::new(pair.v01);
    match pair.condition {
        BoundaryCondition::Transmission { .. } => {
            let db = sc.delta.conj();
            let (_, dm) = ai(pair.mu_minus)?;
            let (_, dp) = ai(pair.mu)?;
            let kp = -db * dm;
            let km = sc.delta * dp;
            let (p0, p1, p2) = half_line_integrals(pair.mu, sc.beta)?;
            // minus branch: tau = -x with slope b conj(delta)
            let (m0, m1, m2) = half_line_integrals(pair.mu_minus, sc.b * db)?;
            let n0 = kp * kp * p0 + km * km * m0;
            let n1 = kp * kp * p1 - km * km * m1;
            let n2 = kp * kp * p2 + km * km * m2;
            let (fp, _) = ai(pair.mu)?;
            let (fm, _) = ai(pair.mu_minus)?;
            let i0 = (km * km * fm * fm - kp * kp * fp * fp) / n0;
            Ok((n0, Moments { i0, i1: n1 / n0, i2: n2 / n0 }))
        }
        _ => {
            let (p0, p1, p2) = half_line_integrals(pair.mu, sc.beta)?;
            let (f, _) = ai(pair.mu)?;
            Ok((p0, Moments { i0: -f * f / p0, i1: p1 / p0, i2: p2 / p0 }))
        }
    }
}

/// d mu/d kappa at kappa = 0 for Robin and transmission, with mu = -a.
pub fn mu_prime_at_zero(cond: BoundaryCondition, n: usize, v01: f64) -> Result<Cx> {
    if !matches!(cond, BoundaryCondition::Robin { .. } | BoundaryCondition::Transmission { .. }) {
        return Err(Error::Invalid("kappa derivative needs a Robin or transmission condition".into()));
    }
    check_args(&cond.with_kappa(0.0), n, v01)?;
    let sc = Scaling::new(v01);
    let ap = airy_prime_zero(n)?;
    Ok(-Cx::from_polar(1.0, -PI / 6.0 * sc.sign) / (ap * sc.b))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rob(k: f64) -> BoundaryCondition {
        BoundaryCondition::Robin { kappa: k }
    }

    fn tr(k: f64) -> BoundaryCondition {
        BoundaryCondition::Transmission { kappa: k }
    }

    #[test]
    fn neumann_first() {
        let p = eigenvalue_1d(BoundaryCondition::Neumann, 1, -1.0).unwrap();
        assert!((p.mu.re + 1.0188).abs() < 5e-4);
        let want = -p.mu * Cx::from_polar(1.0, -PI / 3.0);
        assert!((p.lambda0 - want).norm() < 1e-14);
    }

    #[test]
    fn zero_kappa_limits() {
        for n in 1..=3 {
            let ap = airy_prime_zero(n).unwrap();
            let r = eigenvalue_1d(rob(0.0), n, 0.7).unwrap();
            assert!((r.mu - ap).norm() < 1e-12);
            let t = eigenvalue_1d(tr(0.0), n, -1.0).unwrap();
            assert!((t.mu - ap).norm() < 1e-12, "{}", t.mu);
        }
    }

    #[test]
    fn determinant_residuals() {
        for k in [0.5, 2.0, 5.0] {
            for v in [-1.0, 2.0] {
                let r = eigenvalue_1d(rob(k), 1, v).unwrap();
                assert!(robin_determinant(&r).unwrap().norm() <= 1e-10);
                let t = eigenvalue_1d(tr(k), 2, v).unwrap();
                assert!(transmission_determinant(&t).unwrap().norm() <= 1e-10);
                let sc = Scaling::new(v);
                let rotated = t.mu * Cx::from_polar(1.0, -4.0 * PI / 3.0 * sc.sign);
                assert!((rotated - t.mu_minus).norm() < 1e-12);
            }
        }
    }

    #[test]
    fn transmission_root_at_half() {
        // 30-digit reference for kappa = 1/2, v01 = -1
        let t = eigenvalue_1d(tr(0.5), 1, -1.0).unwrap();
        let want = Cx::new(0.820_192_919_479_441_5, -1.004_521_657_443_124_3);
        assert!((t.lambda0 - want).norm() < 1e-12, "{}", t.lambda0);
    }

    #[test]
    fn conjugate_under_sign_flip() {
        for c in [BoundaryCondition::Dirichlet, BoundaryCondition::Neumann, rob(1.3), tr(0.8)] {
            let a = eigenvalue_1d(c, 2, 1.5).unwrap();
            let b = eigenvalue_1d(c, 2, -1.5).unwrap();
            assert!((a.lambda0 - b.lambda0.conj()).norm() < 1e-11);
        }
    }

    #[test]
    fn boundary_conditions_hold() {
        let d = eigenvalue_1d(BoundaryCondition::Dirichlet, 1, -1.0).unwrap();
        assert!(eigenfunction_1d(&d, 0.0).unwrap().norm() < 1e-14);
        let n = eigenvalue_1d(BoundaryCondition::Neumann, 1, -1.0).unwrap();
        let h = 1e-5;
        let fd = (eigenfunction_1d(&n, 2.0 * h).unwrap() - eigenfunction_1d(&n, 0.0).unwrap()) / (2.0 * h);
        let cd = (eigenfunction_1d(&n, h).unwrap() * 4.0 - eigenfunction_1d(&n, 2.0 * h).unwrap() * 1.0
            - eigenfunction_1d(&n, 0.0).unwrap() * 3.0)
            / (2.0 * h);
        assert!(cd.norm() < 1e-8, "{fd} {cd}");
        let t = eigenvalue_1d(tr(1.0), 1, -1.0).unwrap();
        let (pp, dpp) = eigenfunction_1d_side(&t, 0.0, Side::Plus).unwrap();
        let (pm, dpm) = eigenfunction_1d_side(&t, 0.0, Side::Minus).unwrap();
        assert!((dpp - dpm).norm() < 1e-12);
        assert!((dpp - (pp - pm) * 1.0).norm() < 1e-8);
    }

    #[test]
    fn closed_form_norms() {
        let n = eigenvalue_1d(BoundaryCondition::Neumann, 2, -1.0).unwrap();
        let sc = Scaling::new(-1.0);
        let f = airy_pair(n.mu).unwrap().0;
        assert!((inverse_square_norm(&n).unwrap() + n.mu * f * f / sc.beta).norm() < 1e-15);
        let d = eigenvalue_1d(BoundaryCondition::Dirichlet, 2, -1.0).unwrap();
        let dd = airy_pair(d.mu).unwrap().1;
        assert!((inverse_square_norm(&d).unwrap() - dd * dd / sc.beta).norm() < 1e-15);
    }

    #[test]
    fn closed_moments_match_identities() {
        for c in [BoundaryCondition::Dirichlet, BoundaryCondition::Neumann, rob(0.5), rob(2.0), tr(0.5), tr(2.0)] {
            for v in [-1.0, 0.4, 3.0] {
                let p = eigenvalue_1d(c, 1, v).unwrap();
                let m = moments_1d(&p).unwrap();
                let (nrm, g) = moments_from_identities(&p).unwrap();
                let c2 = p.normalization * p.normalization;
                assert!((nrm * c2 - 1.0).norm() < 1e-12, "{c:?} norm");
                for (x, y) in [(m.i0, g.i0), (m.i1, g.i1), (m.i2, g.i2)] {
                    assert!((x - y).norm() <= 1e-11 * (1.0 + y.norm()), "{c:?} v01={v}: {x} vs {y}");
                }
            }
        }
    }

    #[test]
    fn derivative_at_zero_matches_difference() {
        for c in [rob(0.0), tr(0.0)] {
            let d = mu_prime_at_zero(c, 1, -1.0).unwrap();
            let want = -Cx::from_polar(1.0, PI / 6.0) / airy_prime_zero(1).unwrap();
            assert!((d - want).norm() < 1e-14);
            let e = 1e-4;
            let m0 = -eigenvalue_1d(c.with_kappa(0.0), 1, -1.0).unwrap().mu;
            let m1 = -eigenvalue_1d(c.with_kappa(e), 1, -1.0).unwrap().mu;
            assert!(((m1 - m0) / e - d).norm() < 1e-3 * d.norm());
        }
    }

    #[test]
    fn kappa_continuity() {
        let nl = eigenvalue_1d(BoundaryCondition::Neumann, 1, -1.0).unwrap().lambda0;
        for c in [rob(0.0), tr(0.0)] {
            let errs: Vec<f64> = [1e-1, 1e-2, 1e-3]
                .iter()
                .map(|&k| (eigenvalue_1d(c.with_kappa(k), 1, -1.0).unwrap().lambda0 - nl).norm())
                .collect();
            assert!(errs[1] * 5.0 <= errs[0] && errs[2] * 5.0 <= errs[1], "{errs:?}");
        }
    }

    #[test]
    fn bad_arguments() {
        assert!(matches!(eigenvalue_1d(BoundaryCondition::Neumann, 1, 0.0), Err(Error::Hypothesis(_))));
        assert!(eigenvalue_1d(BoundaryCondition::Neumann, 21, 1.0).is_err());
        assert!(eigenvalue_1d(rob(-1.0), 1, 1.0).is_err());
        let d = eigenvalue_1d(BoundaryCondition::Dirichlet, 1, 1.0).unwrap();
        assert!(eigenfunction_1d(&d, -0.5).is_err());
    }
}
