use btspec::specfun::{airy_pair, bessel_j, bessel_jp, bessel_y, bessel_yp};
use btspec::Cx;
use proptest::prelude::*;
use std::f64::consts::PI;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn bessel_wronskian(n in 0usize..20, x in 1.0f64..80.0) {
        let w = bessel_j(n, x).unwrap() * bessel_yp(n, x).unwrap() - bessel_jp(n, x).unwrap() * bessel_y(n, x).unwrap();
        let expect = 2.0 / (PI * x);
        prop_assert!((w - expect).abs() <= 1e-9 * expect, "n={} x={} w={} expect={}", n, x, w, expect);
    }

    #[test]
    fn airy_solves_its_equation(r in 0.0f64..6.0, t in -PI..PI) {
        let z = Cx::from_polar(r, t);
        let d = 1e-4;
        let (a, _) = airy_pair(z).unwrap();
        let (_, dp) = airy_pair(z + d).unwrap();
        let (_, dm) = airy_pair(z - d).unwrap();
        let second = (dp - dm) / (2.0 * d);
        let scale = a.norm().max(second.norm()).max(1e-3);
        prop_assert!((second - z * a).norm() <= 1e-6 * scale, "z={}", z);
    }

    #[test]
    fn airy_conjugate_symmetry(r in 0.0f64..8.0, t in -PI..PI) {
        let z = Cx::from_polar(r, t);
        let (a, d) = airy_pair(z).unwrap();
        let (ac, dc) = airy_pair(z.conj()).unwrap();
        prop_assert!((a.conj() - ac).norm() <= 1e-13 * a.norm().max(1e-300));
        prop_assert!((d.conj() - dc).norm() <= 1e-13 * d.norm().max(1e-300));
    }
}

#[test]
fn airy_reference_values() {
    // Ai(0), Ai'(0)
    let (a, d) = airy_pair(Cx::new(0.0, 0.0)).unwrap();
    assert!((a.re - 0.355_028_053_887_817_2).abs() < 1e-15);
    assert!((d.re + 0.258_819_403_792_806_8).abs() < 1e-15);
    let (a, _) = airy_pair(Cx::new(10.0, 0.0)).unwrap();
    assert!((a.re / 1.104_753_255_289_869e-10 - 1.0).abs() < 1e-12);
}
