//! Bessel functions of integer order for real argument.
//!
//! J is computed by Miller's downward recurrence normalized with
//! `J_0 + 2 sum J_2k = 1`; Y_0 and Y_1 come from the Neumann series in the
//! same J values and Y_n from upward recurrence.

use crate::error::{Error, Result};
use std::f64::consts::PI;

const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;
pub const DEFAULT_N_MAX: usize = 64;

/// Order limit applied by the checked entry points.
#[derive(Clone, Copy, Debug)]
pub struct BesselConfig {
    pub n_max: usize,
}

impl Default for BesselConfig {
    fn default() -> Self {
        BesselConfig { n_max: DEFAULT_N_MAX }
    }
}

impl BesselConfig {
    fn check(&self, n: usize, x: f64) -> Result<()> {
        if n > self.n_max {
            return Err(Error::Domain(format!("order {n} exceeds n_max = {}", self.n_max)));
        }
        if !(x >= 0.0) || !x.is_finite() {
            return Err(Error::Domain(format!("argument {x} must be finite and >= 0")));
        }
        Ok(())
    }

    pub fn j(&self, n: usize, x: f64) -> Result<f64> {
        self.check(n, x)?;
        Ok(j_upto(n, x)[n])
    }

    pub fn jp(&self, n: usize, x: f64) -> Result<f64> {
        self.check(n, x)?;
        Ok(jn_pair(n, x).1)
    }

    pub fn y(&self, n: usize, x: f64) -> Result<f64> {
        self.check(n, x)?;
        if x == 0.0 {
            return Err(Error::Domain("Y_n is singular at x = 0".into()));
        }
        Ok(jy_pair(n, x).2)
    }

    pub fn yp(&self, n: usize, x: f64) -> Result<f64> {
        self.check(n, x)?;
        if x == 0.0 {
            return Err(Error::Domain("Y_n is singular at x = 0".into()));
        }
        Ok(jy_pair(n, x).3)
    }
}

pub fn bessel_j(n: usize, x: f64) -> Result<f64> {
    BesselConfig::default().j(n, x)
}

pub fn bessel_y(n: usize, x: f64) -> Result<f64> {
    BesselConfig::default().y(n, x)
}

pub fn bessel_jp(n: usize, x: f64) -> Result<f64> {
    BesselConfig::default().jp(n, x)
}

pub fn bessel_yp(n: usize, x: f64) -> Result<f64> {
    BesselConfig::default().yp(n, x)
}

fn start_order(n: usize, x: f64) -> usize {
    let base = (n as f64).max(x.ceil());
    let top = base + 25.0 + (40.0 * base).sqrt();
    2 * ((top as usize + 1) / 2)
}

/// Miller recurrence; returns J_0..=J_top where top >= n is the start order.
fn miller(n: usize, x: f64) -> Vec<f64> {
    let top = start_order(n, x);
    let mut j = vec![0.0; top + 2];
    if x == 0.0 {
        j[0] = 1.0;
        return j;
    }
    let mut jp1 = 0.0f64;
    let mut jk = 1e-30f64;
    j[top] = jk;
    let mut sum = 0.0f64;
    for k in (1..=top).rev() {
        let jm1 = 2.0 * k as f64 / x * jk - jp1;
        jp1 = jk;
        jk = jm1;
        j[k - 1] = jk;
        if (k - 1) % 2 == 0 && k - 1 > 0 {
            sum += 2.0 * jk;
        }
        if jk.abs() > 1e250 {
            for v in j[k - 1..].iter_mut() {
                *v *= 1e-250;
            }
            jp1 *= 1e-250;
            jk *= 1e-250;
            sum *= 1e-250;
        }
    }
    sum += j[0];
    let s = 1.0 / sum;
    for v in j.iter_mut() {
        *v *= s;
    }
    j
}

/// J_0..=J_n (extra entries beyond n may be present).
pub fn j_upto(n: usize, x: f64) -> Vec<f64> {
    let mut j = miller(n + 1, x);
    j.truncate(n + 2);
    j
}

/// (J_n(x), J_n'(x)).
pub fn jn_pair(n: usize, x: f64) -> (f64, f64) {
    let j = miller(n + 1, x);
    let d = if n == 0 { -j[1] } else { 0.5 * (j[n - 1] - j[n + 1]) };
    (j[n], d)
}

/// (J_n, J_n', Y_n, Y_n') at x > 0.
pub fn jy_pair(n: usize, x: f64) -> (f64, f64, f64, f64) {
    let j = miller(n + 1, x);
    let ln = (0.5 * x).ln() + EULER_GAMMA;
    let mut s0 = 0.0;
    let mut s1 = 0.0;
    let mut k = 1;
    while 2 * k + 1 < j.len() {
        let sg = if k % 2 == 1 { 1.0 } else { -1.0 };
        s0 += sg * j[2 * k] / k as f64;
        s1 += -sg * (2.0 * k as f64 + 1.0) / (k as f64 * (k as f64 + 1.0)) * j[2 * k + 1];
        k += 1;
    }
    let y0 = 2.0 / PI * (ln * j[0] + 2.0 * s0);
    let y1 = 2.0 / PI * (-j[0] / x + (ln - 1.0) * j[1] - s1);
    let mut y = vec![y0, y1];
    for k in 1..=n {
        let next = 2.0 * k as f64 / x * y[k] - y[k - 1];
        y.push(next);
    }
    let (jd, yd) = if n == 0 { (-j[1], -y[1]) } else { (0.5 * (j[n - 1] - j[n + 1]), 0.5 * (y[n - 1] - y[n + 1])) };
    (j[n], jd, y[n], yd)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specfun::newton::bisect;

    #[test]
    fn values_at_origin() {
        assert_eq!(bessel_j(0, 0.0).unwrap(), 1.0);
        assert_eq!(bessel_j(1, 0.0).unwrap(), 0.0);
        assert!(bessel_y(0, 0.0).is_err());
    }

    // power series, independent of the recurrence
    fn j_series(n: usize, x: f64) -> f64 {
        let mut term = (0.5 * x).powi(n as i32) / (1..=n).map(|k| k as f64).product::<f64>();
        let mut s = term;
        for k in 1..80 {
            term *= -(0.25 * x * x) / (k as f64 * (k + n) as f64);
            s += term;
        }
        s
    }

    #[test]
    fn matches_power_series() {
        for n in [0usize, 1, 3, 10, 40] {
            for x in [0.1, 1.0, 4.5, 9.0] {
                let a = bessel_j(n, x).unwrap();
                let b = j_series(n, x);
                assert!((a - b).abs() <= 1e-12 * b.abs().max(1e-300) + 1e-15, "J_{n}({x}): {a} vs {b}");
            }
        }
    }

    #[test]
    fn first_zero_of_j0() {
        let z = bisect(|x| j_series(0, x), 2.0, 3.0, 200);
        assert!((z - 2.404_825_557_695_773).abs() < 1e-12);
        assert!(bessel_j(0, z).unwrap().abs() < 1e-14);
    }

    #[test]
    fn wronskian() {
        for (n, x) in [(3usize, 1.7), (0, 0.2), (12, 30.0), (40, 25.0), (5, 80.0)] {
            let (j, jd, y, yd) = jy_pair(n, x);
            let w = j * yd - jd * y;
            let exact = 2.0 / (PI * x);
            assert!((w - exact).abs() < 1e-10 * exact, "n={n} x={x}: {w} vs {exact}");
        }
    }

    // 30-digit references
    #[test]
    fn y_reference_values() {
        let cases = [
            (0usize, 1.0, 0.088_256_964_215_676_96),
            (1, 1.0, -0.781_212_821_300_288_7),
            (5, 2.5, -3.830_176_000_740_751_9),
            (2, 40.0, -0.126_226_092_349_338_41),
        ];
        for (n, x, v) in cases {
            let y = bessel_y(n, x).unwrap();
            assert!((y - v).abs() < 1e-10 * v.abs(), "Y_{n}({x}) = {y}, want {v}");
        }
    }

    #[test]
    fn order_limit_enforced() {
        assert!(bessel_j(65, 1.0).is_err());
        assert!(BesselConfig { n_max: 200 }.j(150, 100.0).is_ok());
    }
}
