use btspec::airy1d::BoundaryCondition as Bc;
use btspec::eig::rescale;
use btspec::galerkin::{assemble, leading_eigenvalue, solve, suggested_truncation, AssembleOptions};
use btspec::geometry::DomainSpec;
use btspec::Cx;

fn leading_rescaled(d: &DomainSpec, h: f64, m: usize) -> Cx {
    let p = assemble(d, h, m, AssembleOptions::default()).unwrap();
    let s = solve(&p, 2, false).unwrap();
    rescale(leading_eigenvalue(&s.eigenvalues), 1.0, h)
}

/// Independent second-order finite-volume computation on a polar grid,
/// extrapolated from 150x400 and 300x800 cells.
#[test]
fn annulus_nd_matches_finite_volume() {
    let d = DomainSpec::annulus(1.0, 1.5, Bc::Dirichlet, Bc::Neumann);
    let lam = leading_rescaled(&d, 0.064, 800);
    let fd = Cx::new(0.691469, 0.721656);
    assert!((lam - fd).norm() < 2e-5, "{lam}");
}

#[test]
fn suggested_truncation_close_to_refined() {
    let h = 0.064;
    for d in [DomainSpec::disk(1.0, Bc::Neumann), DomainSpec::annulus(1.0, 1.5, Bc::Dirichlet, Bc::Neumann)] {
        let coarse = leading_rescaled(&d, h, suggested_truncation(&d, h));
        let fine = leading_rescaled(&d, h, 800);
        assert!((coarse - fine).norm() < 5e-4, "{coarse} vs {fine}");
    }
}
