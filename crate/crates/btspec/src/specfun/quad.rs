//! Gauss-Legendre quadrature.

use crate::Cx;
use std::f64::consts::PI;

/// Nodes and weights on [-1, 1].
#[derive(Clone, Debug)]
pub struct GaussLegendre {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

impl GaussLegendre {
    pub fn new(n: usize) -> Self {
        assert!(n >= 1);
        let mut nodes = vec![0.0; n];
        let mut weights = vec![0.0; n];
        let m = (n + 1) / 2;
        for i in 0..m {
            let mut x = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
            let mut dp = 0.0;
            for _ in 0..100 {
                let (p, d) = legendre(n, x);
                dp = d;
                let dx = p / d;
                x -= dx;
                if dx.abs() < 1e-16 {
                    break;
                }
            }
            let (_, d) = legendre(n, x);
            if d != 0.0 {
                dp = d;
            }
            let w = 2.0 / ((1.0 - x * x) * dp * dp);
            nodes[i] = -x;
            nodes[n - 1 - i] = x;
            weights[i] = w;
            weights[n - 1 - i] = w;
        }
        GaussLegendre { nodes, weights }
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Nodes and weights mapped to `panels` equal subintervals of [a, b].
    pub fn mapped(&self, a: f64, b: f64, panels: usize) -> (Vec<f64>, Vec<f64>) {
        let panels = panels.max(1);
        let width = (b - a) / panels as f64;
        let mut xs = Vec::with_capacity(self.len() * panels);
        let mut ws = Vec::with_capacity(self.len() * panels);
        for p in 0..panels {
            let lo = a + width * p as f64;
            for (x, w) in self.nodes.iter().zip(&self.weights) {
                xs.push(lo + 0.5 * width * (x + 1.0));
                ws.push(0.5 * width * w);
            }
        }
        (xs, ws)
    }

    pub fn integrate<G: Fn(f64) -> Cx>(&self, g: G, a: f64, b: f64, panels: usize) -> Cx {
        let (xs, ws) = self.mapped(a, b, panels);
        xs.iter().zip(&ws).map(|(&x, &w)| g(x) * w).sum()
    }
}

fn legendre(n: usize, x: f64) -> (f64, f64) {
    let (mut p0, mut p1) = (1.0, x);
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    if n == 0 {
        return (1.0, 0.0);
    }
    let d = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

/// Gauss-Legendre integral of `g` over [a, b] with `nodes` points per panel.
///
/// The number of panels grows when sign changes of the integrand on a
/// sampling grid suggest more oscillations than one panel resolves.
pub fn integrate_gl<G: Fn(f64) -> Cx>(g: G, a: f64, b: f64, nodes: usize) -> Cx {
    let nodes = nodes.clamp(16, 512);
    let samples = 4 * nodes;
    let mut changes = 0usize;
    let mut prev = g(a);
    for i in 1..=samples {
        let x = a + (b - a) * i as f64 / samples as f64;
        let v = g(x);
        if (v.re < 0.0) != (prev.re < 0.0) && v.re != 0.0 && prev.re != 0.0 {
            changes += 1;
        }
        if (v.im < 0.0) != (prev.im < 0.0) && v.im != 0.0 && prev.im != 0.0 {
            changes += 1;
        }
        prev = v;
    }
    // about eight nodes per half-wave keeps the rule in its exact regime
    let panels = (8 * changes).div_ceil(nodes).max(1);
    GaussLegendre::new(nodes).integrate(g, a, b, panels)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polynomial_exactness() {
        for n in [16usize, 33, 64] {
            let gl = GaussLegendre::new(n);
            let deg = 2 * n - 1;
            let v = gl.integrate(|x| Cx::new(x.powi(deg as i32 - 1) + x.powi(deg as i32), 0.0), 0.0, 1.0, 1);
            let exact = 1.0 / deg as f64 + 1.0 / (deg as f64 + 1.0);
            assert!((v.re - exact).abs() < 1e-13, "n = {n}");
        }
    }

    #[test]
    fn square_and_cosine() {
        let v = integrate_gl(|x| Cx::new(x * x, 0.0), 0.0, 1.0, 16);
        assert!((v.re - 1.0 / 3.0).abs() < 1e-14);
        let c = integrate_gl(|x| Cx::new(x.cos(), 0.0), 0.0, PI, 32);
        assert!(c.norm() < 1e-13);
    }

    #[test]
    fn weights_sum_to_two() {
        let gl = GaussLegendre::new(257);
        let s: f64 = gl.weights.iter().sum();
        assert!((s - 2.0).abs() < 1e-13);
    }

    #[test]
    fn oscillatory_integrand_gets_panels() {
        let v = integrate_gl(|x| Cx::new((60.0 * x).cos(), 0.0), 0.0, 10.0, 16);
        assert!((v.re - (600.0f64).sin() / 60.0).abs() < 1e-12);
    }
}
