//! Airy function Ai and its derivative for complex argument.
//!
//! For `|z| <= SERIES_RADIUS` the Maclaurin series is summed in double-double
//! arithmetic, which keeps full relative accuracy on the positive axis where
//! the two series cancel. Outside, the Poincare asymptotic expansion is used
//! for `|arg z| <= 2pi/3` and the connection formula
//! `Ai(-w) = e^{i pi/3} Ai(w e^{i pi/3}) + e^{-i pi/3} Ai(w e^{-i pi/3})`
//! elsewhere. At radius 9 the optimally truncated asymptotic series is
//! accurate to about `e^{-36}`, so the two branches agree to roughly 1e-15.

use super::ddouble::{Cdd, Dd};
use super::newton::{newton_real, NewtonOptions};
use crate::error::{Error, Result};
use crate::Cx;
use std::f64::consts::PI;

/// Switchover radius between series and asymptotic branches.
pub const SERIES_RADIUS: f64 = 9.0;
/// Largest |z| accepted.
pub const MAX_ARGUMENT: f64 = 1.0e4;

const AI0: Dd = Dd::new(0.355_028_053_887_817_2, 2.052_336_324_362_12e-17);
const AIP0: Dd = Dd::new(0.258_819_403_792_806_8, -2.522_243_111_610_832e-17);

/// Ai(z) and Ai'(z).
pub fn airy_pair(z: Cx) -> Result<(Cx, Cx)> {
    if !(z.re.is_finite() && z.im.is_finite()) {
        return Err(Error::Domain(format!("non-finite argument {z}")));
    }
    let r = z.norm();
    if r > MAX_ARGUMENT {
        return Err(Error::Domain(format!("|z| = {r:e} exceeds {MAX_ARGUMENT:e}")));
    }
    if r <= SERIES_RADIUS {
        return Ok(maclaurin(z));
    }
    if z.arg().abs() <= 2.0 * PI / 3.0 {
        asymptotic(z)
    } else {
        connection(z)
    }
}

pub fn airy_ai(z: Cx) -> Result<Cx> {
    airy_pair(z).map(|p| p.0)
}

pub fn airy_ai_prime(z: Cx) -> Result<Cx> {
    airy_pair(z).map(|p| p.1)
}

/// Real-axis convenience wrapper.
pub fn airy_real(x: f64) -> Result<(f64, f64)> {
    let (a, b) = airy_pair(Cx::new(x, 0.0))?;
    Ok((a.re, b.re))
}

pub fn maclaurin(z: Cx) -> (Cx, Cx) {
    if z == Cx::new(0.0, 0.0) {
        return (Cx::new(AI0.to_f64(), 0.0), Cx::new(-AIP0.to_f64(), 0.0));
    }
    let zd = Cdd::from_c64(z);
    let z2 = zd.mul(zd);
    let z3 = z2.mul(zd);

    let one = Cdd::real(Dd::from_f64(1.0));
    let (mut f, mut g) = (one, zd);
    let (mut fp, mut gp) = (z2.div_f64(2.0), one);
    let (mut tf, mut tg, mut tfp, mut tgp) = (one, zd, fp, gp);
    let mut k = 1usize;
    loop {
        let kf = k as f64;
        tf = tf.mul(z3).div_f64((3.0 * kf - 1.0) * (3.0 * kf));
        tg = tg.mul(z3).div_f64((3.0 * kf) * (3.0 * kf + 1.0));
        tgp = tgp.mul(z3).div_f64((3.0 * kf - 2.0) * (3.0 * kf));
        f = f.add(tf);
        g = g.add(tg);
        gp = gp.add(tgp);
        if k >= 2 {
            tfp = tfp.mul(z3).div_f64((3.0 * kf - 3.0) * (3.0 * kf - 1.0));
            fp = fp.add(tfp);
        }
        let tmax = tf.norm_hi().max(tg.norm_hi()).max(tfp.norm_hi()).max(tgp.norm_hi());
        let smax = f.norm_hi().max(g.norm_hi()).max(fp.norm_hi()).max(gp.norm_hi());
        if k > 3 && tmax <= 1e-34 * smax {
            break;
        }
        k += 1;
        if k > 400 {
            break;
        }
    }
    let ai = f.scale_dd(AI0).sub(g.scale_dd(AIP0));
    let aip = fp.scale_dd(AI0).sub(gp.scale_dd(AIP0));
    (ai.to_c64(), aip.to_c64())
}

fn asymptotic(z: Cx) -> Result<(Cx, Cx)> {
    let sz = z.sqrt();
    let zeta = z * sz * (2.0 / 3.0);
    if -zeta.re > 700.0 {
        return Err(Error::Overflow(format!("Ai({z}) grows like exp({:.1})", -zeta.re)));
    }
    let inv = zeta.inv();
    let mut u = 1.0f64;
    let mut sum_u = Cx::new(1.0, 0.0);
    let mut sum_v = Cx::new(1.0, 0.0);
    let mut pw = Cx::new(1.0, 0.0);
    let mut last = f64::INFINITY;
    for k in 1..80usize {
        let kf = k as f64;
        u *= (6.0 * kf - 5.0) * (6.0 * kf - 3.0) * (6.0 * kf - 1.0) / ((2.0 * kf - 1.0) * 216.0 * kf);
        let v = -(6.0 * kf + 1.0) / (6.0 * kf - 1.0) * u;
        pw *= -inv;
        let tu = pw * u;
        let tv = pw * v;
        let mag = tu.norm().max(tv.norm());
        if mag > last {
            break;
        }
        sum_u += tu;
        sum_v += tv;
        last = mag;
        if mag < 1e-17 {
            break;
        }
    }
    let e = (-zeta).exp();
    let q = sz.sqrt();
    let c = 0.5 / PI.sqrt();
    let ai = e * c / q * sum_u;
    let aip = -(e * c * q) * sum_v;
    if !(ai.re.is_finite() && ai.im.is_finite() && aip.re.is_finite() && aip.im.is_finite()) {
        return Err(Error::Overflow(format!("Ai({z}) not representable")));
    }
    Ok((ai, aip))
}

fn connection(z: Cx) -> Result<(Cx, Cx)> {
    let w = -z;
    let ep = Cx::from_polar(1.0, PI / 3.0);
    let em = ep.conj();
    let (a1, d1) = asymptotic(w * ep)?;
    let (a2, d2) = asymptotic(w * em)?;
    let ai = ep * a1 + em * a2;
    let aip = -(ep * ep * d1 + em * em * d2);
    Ok((ai, aip))
}

fn zero_options() -> NewtonOptions {
    NewtonOptions { tol: 5e-13, max_iter: 60, trust_radius: 0.5, ..Default::default() }
}

/// n-th zero of Ai, n >= 1, seeded by `-(3 pi (4n-1)/8)^{2/3}`.
pub fn airy_zero(n: usize) -> Result<f64> {
    if n == 0 || n > 50 {
        return Err(Error::Domain(format!("zero index {n} outside 1..=50")));
    }
    let seed = -(3.0 * PI * (4.0 * n as f64 - 1.0) / 8.0).powf(2.0 / 3.0);
    let r = newton_real(
        |x| airy_real(x).map(|p| p.0).unwrap_or(f64::NAN),
        |x| airy_real(x).map(|p| p.1).unwrap_or(f64::NAN),
        seed,
        &zero_options(),
    )?;
    Ok(r.value)
}

/// n-th zero of Ai', n >= 1, seeded by `-(3 pi (4n-3)/8)^{2/3}`.
pub fn airy_prime_zero(n: usize) -> Result<f64> {
    if n == 0 || n > 50 {
        return Err(Error::Domain(format!("zero index {n} outside 1..=50")));
    }
    let seed = -(3.0 * PI * (4.0 * n as f64 - 3.0) / 8.0).powf(2.0 / 3.0);
    let r = newton_real(
        |x| airy_real(x).map(|p| p.1).unwrap_or(f64::NAN),
        |x| airy_real(x).map(|p| x * p.0).unwrap_or(f64::NAN),
        seed,
        &zero_options(),
    )?;
    Ok(r.value)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel(a: Cx, b: Cx) -> f64 {
        (a - b).norm() / b.norm()
    }

    // Reference values from a 30-digit evaluation.
    #[allow(clippy::excessive_precision)]
    const REF: &[(f64, f64, f64, f64, f64, f64)] = &[
        // z.re, z.im, Ai.re, Ai.im, Ai'.re, Ai'.im
        (1.0, 0.0, 0.13529241631288142, 0.0, -0.15914744129679321, 0.0),
        (-10.0, 0.0, 0.040241238486443191, 0.0, 0.99626504413279006, 0.0),
        (5.0, 0.0, 0.00010834442813607442, 0.0, -0.00024741389086846248, 0.0),
        (2.0, 3.0, 0.008104457809530535, 0.13117838260456603, 0.096658179033112905, -0.23198718538548632),
        (-4.0, -1.5, -1.4422668092252313, 3.7577573444445987, -7.1656386099129885, -4.0630416407556089),
        (0.5, -7.0, -343.95659433498006, -232.77342654439325, 1079.8975022362516, -156.34208819509617),
        (12.0, 5.0, 2.1001897847642027e-13, 7.8727254711601254e-13, -1.952027428958897e-13, -2.9442885933880372e-12),
        (-15.0, 8.0, -4791913258770.4052, 2970217859673.6538, 16589594735804.177, 16203409365453.084),
        (3.0, -14.0, 732916.88464293193, 1612752.7452841131, -5968390.6638163512, -3020961.6852435185),
        (-20.0, -0.1, -0.19433512567559318, -0.092322988955108287, 0.98458891107373384, -0.36438413249887341),
        (9.3, 0.2, 8.1050738824649228e-10, -5.7276639902877729e-10, -2.5116467552750601e-9, 1.7357399621037762e-9),
    ];

    #[test]
    fn reference_values() {
        for &(x, y, ar, ai, dr, di) in REF {
            let (a, d) = airy_pair(Cx::new(x, y)).unwrap();
            assert!(rel(a, Cx::new(ar, ai)) < 1e-13, "Ai({x},{y}) = {a}");
            assert!(rel(d, Cx::new(dr, di)) < 1e-13, "Ai'({x},{y}) = {d}");
        }
    }

    #[test]
    fn origin_value() {
        let a = airy_ai(Cx::new(0.0, 0.0)).unwrap();
        assert!((a.re - 0.355_028_053_887_817_2).abs() < 1e-16);
    }

    #[test]
    fn branches_agree_across_switchover() {
        for i in 0..48 {
            let th = -PI + 2.0 * PI * (i as f64 + 0.5) / 48.0;
            for &r in &[8.5, 9.5, 10.0] {
                let z = Cx::from_polar(r, th);
                let (a, d) = maclaurin(z);
                let (b, e) = if th.abs() <= 2.0 * PI / 3.0 { asymptotic(z).unwrap() } else { connection(z).unwrap() };
                assert!(rel(b, a) < 1e-12, "Ai at {z}: {a} vs {b}");
                assert!(rel(e, d) < 1e-12, "Ai' at {z}: {d} vs {e}");
            }
        }
    }

    #[test]
    fn decays_on_positive_axis() {
        let a: Vec<f64> = [3.0, 4.0, 5.0].iter().map(|&x| airy_real(x).unwrap().0).collect();
        assert!(a[2] < a[1] && a[1] < a[0] && a[2] > 0.0);
    }

    #[test]
    fn overflow_reported() {
        assert!(matches!(airy_ai(Cx::new(-60.0, 300.0)), Err(Error::Overflow(_))));
        assert!(matches!(airy_ai(Cx::new(2e4, 0.0)), Err(Error::Domain(_))));
    }

    #[test]
    fn first_zeros() {
        let a1 = airy_zero(1).unwrap();
        let b1 = airy_prime_zero(1).unwrap();
        assert!((a1 + 2.338_107_410_459_767).abs() < 1e-13);
        assert!((b1 + 1.018_792_971_647_471).abs() < 1e-13);
        assert!(a1 < b1 && b1 < 0.0);
    }

    #[test]
    fn zeros_interlace_and_vanish() {
        for n in 1..=10 {
            let (an, an1) = (airy_zero(n).unwrap(), airy_zero(n + 1).unwrap());
            let bn1 = airy_prime_zero(n + 1).unwrap();
            assert!(an1 < bn1 && bn1 < an);
        }
        for n in [1, 7, 20, 50] {
            let a = airy_zero(n).unwrap();
            let b = airy_prime_zero(n).unwrap();
            assert!(airy_real(a).unwrap().0.abs() <= 1e-12);
            assert!(airy_real(b).unwrap().1.abs() <= 1e-12);
        }
    }
}
