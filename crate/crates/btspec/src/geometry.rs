//! Boundary-local data at the points of a circle where the gradient of the
//! potential is normal to the boundary, with exact presets for V(x) = x1.

use crate::airy1d::BoundaryCondition;
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

/// Which side of the circle the domain carrying the condition lies on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Orientation {
    /// domain inside the circle (disk, outer boundary of an annulus)
    Interior,
    /// domain outside the circle (inner boundary of an annulus)
    Exterior,
}

impl Orientation {
    fn sigma(self) -> f64 {
        match self {
            Orientation::Interior => 1.0,
            Orientation::Exterior => -1.0,
        }
    }
}

/// Taylor coefficients of V in boundary coordinates (s, rho), rho the
/// distance to the boundary inside the domain:
/// V = v00 + v01 rho + v20 s^2 + v11 s rho + v02 rho^2 + ...
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct LocalModel {
    pub v00: f64,
    pub v01: f64,
    pub v11: f64,
    pub v20: f64,
    pub v02: f64,
    pub curvature: f64,
    pub orientation: Orientation,
}

impl LocalModel {
    pub fn validate(&self) -> Result<()> {
        if self.v01 == 0.0 {
            return Err(Error::Hypothesis("v01 = 0: gradient vanishes at the boundary point".into()));
        }
        if self.v20 == 0.0 {
            return Err(Error::Hypothesis("v20 = 0: degenerate tangential extremum".into()));
        }
        let all = [self.v00, self.v01, self.v11, self.v20, self.v02, self.curvature];
        if all.iter().any(|x| !x.is_finite()) {
            return Err(Error::Invalid("non-finite local coefficient".into()));
        }
        Ok(())
    }

    /// Model at the mirror point: all potential coefficients change sign,
    /// the curvature is geometric and stays.
    pub fn conjugate(&self) -> Self {
        LocalModel {
            v00: -self.v00,
            v01: -self.v01,
            v11: -self.v11,
            v20: -self.v20,
            v02: -self.v02,
            ..*self
        }
    }

    /// V = x1 at (R, 0) on a circle of radius R.
    pub fn x1_on_circle(r: f64, orientation: Orientation) -> Self {
        let sg = orientation.sigma();
        LocalModel {
            v00: r,
            v01: -sg,
            v11: 0.0,
            v20: -1.0 / (2.0 * r),
            v02: 0.0,
            curvature: sg / r,
            orientation,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "shape", rename_all = "lowercase")]
pub enum Shape {
    Disk { r0: f64 },
    Annulus { r1: f64, r2: f64 },
    TwoLayer { r1: f64, r2: f64 },
}

/// Domain and its conditions. `inner` is the inner circle of an annulus;
/// for the two-layer domain it is the interface and must be a transmission
/// condition.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct DomainSpec {
    pub shape: Shape,
    pub outer: BoundaryCondition,
    pub inner: Option<BoundaryCondition>,
}

impl DomainSpec {
    pub fn disk(r0: f64, outer: BoundaryCondition) -> Self {
        DomainSpec { shape: Shape::Disk { r0 }, outer, inner: None }
    }

    pub fn annulus(r1: f64, r2: f64, outer: BoundaryCondition, inner: BoundaryCondition) -> Self {
        DomainSpec { shape: Shape::Annulus { r1, r2 }, outer, inner: Some(inner) }
    }

    pub fn two_layer(r1: f64, r2: f64, outer: BoundaryCondition, kappa: f64) -> Self {
        DomainSpec {
            shape: Shape::TwoLayer { r1, r2 },
            outer,
            inner: Some(BoundaryCondition::Transmission { kappa }),
        }
    }

    pub fn validate(&self) -> Result<()> {
        let chk = |c: &BoundaryCondition| {
            let k = c.kappa();
            if !(k >= 0.0 && k.is_finite()) {
                return Err(Error::Invalid(format!("kappa = {k} must be finite and >= 0")));
            }
            Ok(())
        };
        chk(&self.outer)?;
        if matches!(self.outer, BoundaryCondition::Transmission { .. }) {
            return Err(Error::Invalid("transmission is not allowed on the outer boundary".into()));
        }
        match self.shape {
            Shape::Disk { r0 } => {
                if !(r0 > 0.0 && r0.is_finite()) {
                    return Err(Error::Invalid(format!("disk radius {r0} must be positive")));
                }
                if self.inner.is_some() {
                    return Err(Error::Invalid("a disk has one boundary component".into()));
                }
            }
            Shape::Annulus { r1, r2 } | Shape::TwoLayer { r1, r2 } => {
                if !(0.0 < r1 && r1 < r2 && r2.is_finite()) {
                    return Err(Error::Invalid(format!("radii must satisfy 0 < R1 < R2, got {r1}, {r2}")));
                }
                let inner = self.inner.ok_or_else(|| Error::Invalid("missing inner condition".into()))?;
                chk(&inner)?;
                let is_t = matches!(inner, BoundaryCondition::Transmission { .. });
                match self.shape {
                    Shape::TwoLayer { .. } if !is_t => {
                        return Err(Error::Invalid("two-layer interface needs a transmission condition".into()))
                    }
                    Shape::Annulus { .. } if is_t => {
                        return Err(Error::Invalid("annulus inner boundary cannot carry transmission".into()))
                    }
                    _ => {}
                }
            }
        }
        Ok(())
    }

    pub fn area(&self) -> f64 {
        match self.shape {
            Shape::Disk { r0 } => PI * r0 * r0,
            Shape::Annulus { r1, r2 } => PI * (r2 * r2 - r1 * r1),
            Shape::TwoLayer { r2, .. } => PI * r2 * r2,
        }
    }

    pub fn outer_radius(&self) -> f64 {
        match self.shape {
            Shape::Disk { r0 } => r0,
            Shape::Annulus { r2, .. } | Shape::TwoLayer { r2, .. } => r2,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Component {
    Outer,
    Inner,
    Interface,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct LocalizationPoint {
    pub point: [f64; 2],
    pub component: Component,
    pub condition: BoundaryCondition,
    pub model: LocalModel,
}

/// Points of the boundary where grad V is parallel to the normal, for V = x1.
/// The two-layer interface contributes each point twice, once per side.
pub fn localization_points(domain: &DomainSpec) -> Result<Vec<LocalizationPoint>> {
    domain.validate()?;
    let mut out = Vec::new();
    let mut push = |r: f64, comp: Component, cond: BoundaryCondition, o: Orientation| {
        let m = LocalModel::x1_on_circle(r, o);
        out.push(LocalizationPoint { point: [r, 0.0], component: comp, condition: cond, model: m });
        out.push(LocalizationPoint { point: [-r, 0.0], component: comp, condition: cond, model: m.conjugate() });
    };
    match domain.shape {
        Shape::Disk { r0 } => push(r0, Component::Outer, domain.outer, Orientation::Interior),
        Shape::Annulus { r1, r2 } => {
            push(r2, Component::Outer, domain.outer, Orientation::Interior);
            push(r1, Component::Inner, domain.inner.unwrap(), Orientation::Exterior);
        }
        Shape::TwoLayer { r1, r2 } => {
            push(r2, Component::Outer, domain.outer, Orientation::Interior);
            let t = domain.inner.unwrap();
            push(r1, Component::Interface, t, Orientation::Interior);
            push(r1, Component::Interface, t, Orientation::Exterior);
        }
    }
    Ok(out)
}

/// Second tangential derivative of V along the boundary:
/// <t|H|t> - curvature (grad V . nu), nu the outward normal.
pub fn boundary_second_derivative(
    hessian: [[f64; 2]; 2],
    grad: [f64; 2],
    tangent: [f64; 2],
    normal: [f64; 2],
    curvature: f64,
) -> Result<f64> {
    let norm = |v: [f64; 2]| (v[0] * v[0] + v[1] * v[1]).sqrt();
    if (norm(tangent) - 1.0).abs() > 1e-12 || (norm(normal) - 1.0).abs() > 1e-12 {
        return Err(Error::Invalid("tangent and normal must be unit vectors".into()));
    }
    if (tangent[0] * normal[0] + tangent[1] * normal[1]).abs() > 1e-12 {
        return Err(Error::Invalid("tangent and normal must be orthogonal".into()));
    }
    let ht = [
        hessian[0][0] * tangent[0] + hessian[0][1] * tangent[1],
        hessian[1][0] * tangent[0] + hessian[1][1] * tangent[1],
    ];
    let tht = tangent[0] * ht[0] + tangent[1] * ht[1];
    Ok(tht - curvature * (grad[0] * normal[0] + grad[1] * normal[1]))
}

/// A smooth potential given by value, gradient and Hessian.
pub trait Potential: Sync {
    fn value(&self, x: [f64; 2]) -> f64;
    fn gradient(&self, x: [f64; 2]) -> [f64; 2];
    fn hessian(&self, x: [f64; 2]) -> [[f64; 2]; 2];
}

/// V(x) = x1.
#[derive(Clone, Copy, Debug, Default)]
pub struct LinearX1;

impl Potential for LinearX1 {
    fn value(&self, x: [f64; 2]) -> f64 {
        x[0]
    }
    fn gradient(&self, _x: [f64; 2]) -> [f64; 2] {
        [1.0, 0.0]
    }
    fn hessian(&self, _x: [f64; 2]) -> [[f64; 2]; 2] {
        [[0.0; 2]; 2]
    }
}

/// Local model of a user potential at angle `phi` on a circle of radius `r`.
pub fn circle_model(pot: &dyn Potential, r: f64, phi: f64, orientation: Orientation) -> LocalModel {
    let sg = orientation.sigma();
    let e = [phi.cos(), phi.sin()];
    let t = [-phi.sin(), phi.cos()];
    let x = [r * e[0], r * e[1]];
    let g = pot.gradient(x);
    let h = pot.hessian(x);
    let quad = |a: [f64; 2], b: [f64; 2]| {
        a[0] * (h[0][0] * b[0] + h[0][1] * b[1]) + a[1] * (h[1][0] * b[0] + h[1][1] * b[1])
    };
    let ge = g[0] * e[0] + g[1] * e[1];
    LocalModel {
        v00: pot.value(x),
        v01: -sg * ge,
        v11: -sg * quad(t, e),
        v20: 0.5 * (quad(t, t) - ge / r),
        v02: 0.5 * quad(e, e),
        curvature: sg / r,
        orientation,
    }
}

/// Angles on a circle where grad V is normal to it, by a sign-change scan
/// of the tangential derivative refined by bisection.
pub fn circle_critical_angles(pot: &dyn Potential, r: f64, samples: usize) -> Vec<f64> {
    let g = |phi: f64| {
        let x = [r * phi.cos(), r * phi.sin()];
        let d = pot.gradient(x);
        -d[0] * phi.sin() + d[1] * phi.cos()
    };
    let n = samples.max(16);
    let step = 2.0 * PI / n as f64;
    let mut out = Vec::new();
    // offset grid so that symmetric roots do not sit on nodes
    let start = -PI + 0.5 * step;
    let mut a = start;
    let mut fa = g(a);
    for i in 1..=n {
        let b = start + step * i as f64;
        let fb = g(b);
        if fa == 0.0 {
            out.push(a);
        } else if fa * fb < 0.0 {
            out.push(crate::specfun::newton::bisect(g, a, b, 200));
        }
        a = b;
        fa = fb;
    }
    for v in out.iter_mut() {
        if *v > PI {
            *v -= 2.0 * PI;
        }
    }
    out.sort_by(|x, y| x.total_cmp(y));
    out.dedup_by(|x, y| (*x - *y).abs() < 1e-10);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn disk_preset() {
        let d = DomainSpec::disk(1.0, BoundaryCondition::Neumann);
        let pts = localization_points(&d).unwrap();
        assert_eq!(pts.len(), 2);
        let m = pts[0].model;
        assert_eq!((m.v00, m.v01, m.v20, m.curvature), (1.0, -1.0, -0.5, 1.0));
        assert_eq!(pts[1].model, m.conjugate());
        assert_eq!(pts[1].point, [-1.0, 0.0]);
    }

    #[test]
    fn annulus_and_two_layer() {
        let a = DomainSpec::annulus(1.0, 2.0, BoundaryCondition::Dirichlet, BoundaryCondition::Neumann);
        let pts = localization_points(&a).unwrap();
        assert_eq!(pts.len(), 4);
        let inner = pts.iter().find(|p| p.component == Component::Inner && p.point[0] > 0.0).unwrap();
        assert_eq!(inner.model.v01, 1.0);
        assert_eq!(inner.model.curvature, -1.0);
        let t = DomainSpec::two_layer(1.0, 2.0, BoundaryCondition::Dirichlet, 0.5);
        assert_eq!(localization_points(&t).unwrap().len(), 6);
        assert!(DomainSpec::annulus(2.0, 1.0, BoundaryCondition::Neumann, BoundaryCondition::Neumann).validate().is_err());
    }

    #[test]
    fn second_derivative() {
        let z = [[0.0; 2]; 2];
        let v = boundary_second_derivative(z, [1.0, 0.0], [0.0, 1.0], [1.0, 0.0], 1.0).unwrap();
        assert_eq!(v, -1.0);
        assert_eq!(boundary_second_derivative(z, [0.0, 0.0], [0.0, 1.0], [1.0, 0.0], 0.0).unwrap(), 0.0);
        let h = [[2.0, 0.3], [0.3, 5.0]];
        assert_eq!(boundary_second_derivative(h, [1.0, 0.0], [0.0, 1.0], [1.0, 0.0], 0.0).unwrap(), 5.0);
        assert!(boundary_second_derivative(z, [1.0, 0.0], [0.0, 2.0], [1.0, 0.0], 1.0).is_err());
        for r0 in [0.5, 1.0, 3.0] {
            let m = LocalModel::x1_on_circle(r0, Orientation::Interior);
            let v = boundary_second_derivative(z, [1.0, 0.0], [0.0, 1.0], [1.0, 0.0], m.curvature).unwrap();
            assert!((v - 2.0 * m.v20).abs() < 1e-15);
        }
    }

    #[test]
    fn custom_potential_matches_preset() {
        for o in [Orientation::Interior, Orientation::Exterior] {
            let angles = circle_critical_angles(&LinearX1, 1.5, 360);
            assert_eq!(angles.len(), 2);
            let m = circle_model(&LinearX1, 1.5, 0.0, o);
            let p = LocalModel::x1_on_circle(1.5, o);
            for (a, b) in [(m.v00, p.v00), (m.v01, p.v01), (m.v11, p.v11), (m.v20, p.v20), (m.v02, p.v02), (m.curvature, p.curvature)] {
                assert!((a - b).abs() < 1e-14);
            }
            let q = circle_model(&LinearX1, 1.5, PI, o);
            assert!((q.v01 - p.conjugate().v01).abs() < 1e-14 && (q.v20 - p.conjugate().v20).abs() < 1e-14);
        }
    }

    struct Quad;
    impl Potential for Quad {
        fn value(&self, x: [f64; 2]) -> f64 {
            x[0] + 0.3 * x[0] * x[1] + 0.2 * x[0] * x[0]
        }
        fn gradient(&self, x: [f64; 2]) -> [f64; 2] {
            [1.0 + 0.3 * x[1] + 0.4 * x[0], 0.3 * x[0]]
        }
        fn hessian(&self, _x: [f64; 2]) -> [[f64; 2]; 2] {
            [[0.4, 0.3], [0.3, 0.0]]
        }
    }

    #[test]
    fn custom_model_by_differences() {
        let r = 1.0;
        for phi in circle_critical_angles(&Quad, r, 720) {
            let m = circle_model(&Quad, r, phi, Orientation::Interior);
            let v = |s: f64, rho: f64| {
                let a = phi + s / r;
                Quad.value([(r - rho) * a.cos(), (r - rho) * a.sin()])
            };
            let e = 1e-4;
            let v20 = (v(e, 0.0) - 2.0 * v(0.0, 0.0) + v(-e, 0.0)) / (2.0 * e * e);
            let v02 = (v(0.0, e) - 2.0 * v(0.0, 0.0) + v(0.0, -e)) / (2.0 * e * e);
            let v11 = (v(e, e) - v(e, -e) - v(-e, e) + v(-e, -e)) / (4.0 * e * e);
            let v01 = (v(0.0, e) - v(0.0, -e)) / (2.0 * e);
            assert!((v20 - m.v20).abs() < 1e-6 && (v02 - m.v02).abs() < 1e-6);
            assert!((v11 - m.v11).abs() < 1e-6 && (v01 - m.v01).abs() < 1e-7);
        }
    }
}
