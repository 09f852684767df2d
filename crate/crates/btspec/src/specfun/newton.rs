//! Damped Newton iteration for analytic scalar equations.

use crate::error::{Error, Result};
use crate::Cx;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RootResult<T = Cx> {
    pub value: T,
    /// |f(value)|
    pub residual: f64,
    pub iterations: usize,
}

#[derive(Clone, Copy, Debug)]
pub struct NewtonOptions {
    pub tol: f64,
    pub max_iter: usize,
    /// Steps longer than this are shortened to this length.
    pub trust_radius: f64,
    pub min_derivative: f64,
    /// Extra steps taken after the tolerance is met, kept only if they reduce |f|.
    pub polish: usize,
}

impl Default for NewtonOptions {
    fn default() -> Self {
        NewtonOptions { tol: 1e-12, max_iter: 100, trust_radius: 10.0, min_derivative: 1e-30, polish: 2 }
    }
}

pub fn newton_complex<F, D>(f: F, df: D, z0: Cx, tol: f64) -> Result<RootResult>
where
    F: Fn(Cx) -> Cx,
    D: Fn(Cx) -> Cx,
{
    newton_complex_with(f, df, z0, &NewtonOptions { tol, ..Default::default() })
}

pub fn newton_complex_with<F, D>(f: F, df: D, z0: Cx, opt: &NewtonOptions) -> Result<RootResult>
where
    F: Fn(Cx) -> Cx,
    D: Fn(Cx) -> Cx,
{
    let finite = |w: Cx| w.re.is_finite() && w.im.is_finite();
    let mut z = z0;
    let mut fz = f(z);
    if !finite(fz) {
        return Err(Error::Domain(format!("f not finite at starting point {z0}")));
    }
    let mut it = 0;
    while fz.norm() > opt.tol {
        if it >= opt.max_iter {
            return Err(Error::NoConvergence { iterations: it, residual: fz.norm() });
        }
        let d = df(z);
        if !(d.norm() >= opt.min_derivative) {
            return Err(Error::Stationary(d.norm()));
        }
        let mut step = fz / d;
        let len = step.norm();
        if len > opt.trust_radius {
            step *= opt.trust_radius / len;
        }
        let mut zn = z - step;
        let mut fnew = f(zn);
        let mut halvings = 0;
        while (!finite(fnew) || fnew.norm() > 4.0 * fz.norm()) && halvings < 30 {
            step *= 0.5;
            zn = z - step;
            fnew = f(zn);
            halvings += 1;
        }
        if !finite(fnew) {
            return Err(Error::NoConvergence { iterations: it, residual: f64::INFINITY });
        }
        z = zn;
        fz = fnew;
        it += 1;
    }
    for _ in 0..opt.polish {
        let d = df(z);
        if !(d.norm() >= opt.min_derivative) || fz.norm() == 0.0 {
            break;
        }
        let zn = z - fz / d;
        let fnew = f(zn);
        if finite(fnew) && fnew.norm() < fz.norm() {
            z = zn;
            fz = fnew;
        } else {
            break;
        }
    }
    Ok(RootResult { value: z, residual: fz.norm(), iterations: it })
}

/// Real-line specialization used for Airy and Bessel zeros.
pub fn newton_real<F, D>(f: F, df: D, x0: f64, opt: &NewtonOptions) -> Result<RootResult<f64>>
where
    F: Fn(f64) -> f64,
    D: Fn(f64) -> f64,
{
    let r = newton_complex_with(|z| Cx::new(f(z.re), 0.0), |z| Cx::new(df(z.re), 0.0), Cx::new(x0, 0.0), opt)?;
    Ok(RootResult { value: r.value.re, residual: r.residual, iterations: r.iterations })
}

/// Bisection on a sign change, used where Newton needs a safe bracket.
pub fn bisect<F: Fn(f64) -> f64>(f: F, mut a: f64, mut b: f64, max_iter: usize) -> f64 {
    let mut fa = f(a);
    for _ in 0..max_iter {
        let m = 0.5 * (a + b);
        if m <= a || m >= b {
            break;
        }
        let fm = f(m);
        if fm == 0.0 {
            return m;
        }
        if (fa < 0.0) == (fm < 0.0) {
            a = m;
            fa = fm;
        } else {
            b = m;
        }
    }
    0.5 * (a + b)
}
