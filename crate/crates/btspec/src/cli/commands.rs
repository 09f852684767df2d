use super::table::{Cell, Table};
use super::{CommandKind, RunConfig};
use crate::airy1d::BoundaryCondition;
use crate::asympt::{four_term, four_term_scaled, nmr_decay, nmr_h, nmr_terms, small_g_shift, AsymptoticEigenvalue};
use crate::eig::{convergence_study_with, pair_conjugates};
use crate::error::{Error, Result};
use crate::galerkin::{
    assemble, build_basis, eigenfunction_field, leading_eigenvalue, solve, suggested_truncation, u0_moments,
    write_matrix_dump, PolarGrid, SpectralProblem, Spectrum,
};
use crate::geometry::{localization_points, DomainSpec, LocalizationPoint, Shape};
use crate::wkb::{BoundaryProfile, WkbPhase};
use crate::Cx;
use rayon::prelude::*;

fn expansion_at(cfg: &RunConfig, p: &LocalizationPoint) -> Result<AsymptoticEigenvalue> {
    match (cfg.scaled_kappa, p.condition) {
        (Some(kh), BoundaryCondition::Robin { .. } | BoundaryCondition::Transmission { .. }) => {
            four_term_scaled(&p.model, p.condition, kh, cfg.n, cfg.k)
        }
        _ => four_term(&p.model, p.condition, cfg.n, cfg.k),
    }
}

/// Expansions at the localization points with x1 > 0 (offset +iR).
fn positive_expansions(cfg: &RunConfig) -> Result<Vec<(usize, LocalizationPoint, AsymptoticEigenvalue)>> {
    let pts = localization_points(&cfg.domain)?;
    pts.into_iter()
        .enumerate()
        .filter(|(_, p)| p.point[0] > 0.0)
        .map(|(i, p)| Ok((i, p, expansion_at(cfg, &p)?)))
        .collect()
}

/// Candidate for the first eigenvalue: smallest Re c23, then Re c1, then Re c43.
pub fn leading_expansion(cfg: &RunConfig) -> Result<(LocalizationPoint, AsymptoticEigenvalue)> {
    let all = positive_expansions(cfg)?;
    let key = |e: &AsymptoticEigenvalue| [e.c23.re, e.c1.re, e.c43.re];
    let mut best = all[0];
    for cand in &all[1..] {
        let (a, b) = (key(&cand.2), key(&best.2));
        for (x, y) in a.iter().zip(&b) {
            if (x - y).abs() > 1e-9 * x.abs().max(1.0) {
                if x < y {
                    best = *cand;
                }
                break;
            }
        }
    }
    Ok((best.1, best.2))
}

/// Radius R of the offset iR removed in rescaled output.
pub fn offset_radius(cfg: &RunConfig) -> Result<f64> {
    Ok(leading_expansion(cfg)?.0.point[0])
}

/// (lambda - i R sign(Im lambda))/h^{2/3}; real eigenvalues (|Im| <= tol) keep their imaginary part.
pub fn rescale_signed(lam: Cx, r: f64, h: f64, tol: f64) -> Cx {
    let s = if lam.im.abs() <= tol { 0.0 } else { lam.im.signum() };
    (lam - Cx::new(0.0, r * s)) / h.powf(2.0 / 3.0)
}

fn im_out(cfg: &RunConfig, z: Cx) -> f64 {
    if cfg.signed_im {
        z.im
    } else {
        z.im.abs()
    }
}

pub fn cmd_asympt(cfg: &RunConfig) -> Result<Table> {
    let all_points = matches!(cfg.command, CommandKind::Asympt { all_points: true });
    let rows: Vec<(usize, AsymptoticEigenvalue)> = if all_points {
        positive_expansions(cfg)?.into_iter().map(|(i, _, e)| (i, e)).collect()
    } else {
        let (p, e) = leading_expansion(cfg)?;
        let i = localization_points(&cfg.domain)?.iter().position(|q| *q == p).unwrap();
        vec![(i, e)]
    };
    let mut t = Table::new(&["h13", "h", "point", "n", "k", "re4", "im4", "re3", "im3"]);
    for &x in &cfg.h13 {
        let h = x * x * x;
        for (i, e) in &rows {
            let (f, g) = (e.rescaled(h), e.rescaled_three(h));
            t.push(vec![
                x.into(),
                h.into(),
                (*i).into(),
                cfg.n.into(),
                cfg.k.into(),
                f.re.into(),
                im_out(cfg, f).into(),
                g.re.into(),
                im_out(cfg, g).into(),
            ]);
        }
    }
    Ok(t)
}

fn truncation_for(cfg: &RunConfig, d: &DomainSpec, h: f64) -> usize {
    cfg.trunc.unwrap_or_else(|| suggested_truncation(d, h))
}

fn problem_at(cfg: &RunConfig, h: f64) -> Result<SpectralProblem> {
    let d = cfg.domain_at(h);
    assemble(&d, h, truncation_for(cfg, &d, h), cfg.assemble_options())
}

fn dump_path(cfg: &RunConfig, i: usize) -> Option<String> {
    cfg.dump_matrix.as_ref().map(|p| if cfg.h13.len() == 1 { p.clone() } else { format!("{p}.{i}") })
}

fn spectrum_point(cfg: &RunConfig, i: usize, x: f64) -> Result<(SpectralProblem, Spectrum)> {
    let h = x * x * x;
    let p = problem_at(cfg, h)?;
    if let Some(path) = dump_path(cfg, i) {
        let mut buf = Vec::new();
        write_matrix_dump(&p, &mut buf)?;
        std::fs::write(path, buf)?;
    }
    let s = solve(&p, cfg.eigs.min(p.size()), cfg.vectors)?;
    Ok((p, s))
}

pub fn cmd_spectrum(cfg: &RunConfig) -> Result<Table> {
    let r = offset_radius(cfg)?;
    let points: Vec<(usize, f64)> = cfg.h13.iter().copied().enumerate().collect();
    let results: Vec<Result<(SpectralProblem, Spectrum)>> =
        points.par_iter().map(|&(i, x)| spectrum_point(cfg, i, x)).collect();
    let mut t = Table::new(&["h13", "h", "M", "ratio", "j", "re", "im", "partner", "residual", "status"]);
    for (&(_, x), res) in points.iter().zip(results) {
        let h = x * x * x;
        match res {
            Ok((p, s)) => {
                let scale = h.powf(2.0 / 3.0);
                let pairing = pair_conjugates(&s.eigenvalues, cfg.pair_tol * scale);
                for (j, &lam) in s.eigenvalues.iter().enumerate() {
                    let z = rescale_signed(lam, r, h, cfg.pair_tol * scale);
                    let partner = pairing.partner(j).map_or(0, |q| q as i64 + 1);
                    let res = if cfg.vectors { s.residuals[j] } else { f64::NAN };
                    let status = if p.criterion_met { "ok" } else { "under-resolved" };
                    t.push(vec![
                        x.into(),
                        h.into(),
                        p.size().into(),
                        p.truncation_ratio.into(),
                        (j + 1).into(),
                        z.re.into(),
                        im_out(cfg, z).into(),
                        partner.into(),
                        res.into(),
                        status.into(),
                    ]);
                }
            }
            Err(e) => {
                let nan = f64::NAN;
                t.push(vec![
                    x.into(),
                    h.into(),
                    0usize.into(),
                    nan.into(),
                    0usize.into(),
                    nan.into(),
                    nan.into(),
                    0i64.into(),
                    nan.into(),
                    format!("error: {e}").into(),
                ]);
            }
        }
    }
    Ok(t)
}

fn radial_range(d: &DomainSpec) -> (f64, f64) {
    match d.shape {
        Shape::Disk { r0 } => (0.0, r0),
        Shape::Annulus { r1, r2 } => (r1, r2),
        Shape::TwoLayer { r2, .. } => (0.0, r2),
    }
}

/// Eigenvector `index` (1-based) at h, with the problem it belongs to.
fn eigenvector_at(cfg: &RunConfig, h: f64, index: usize) -> Result<(SpectralProblem, Cx, Vec<Cx>)> {
    let p = problem_at(cfg, h)?;
    if index > p.size() {
        return Err(Error::Invalid(format!("index {index} exceeds the basis size {}", p.size())));
    }
    let s = solve(&p, index.max(2).min(p.size()), true)?;
    let mut j = index - 1;
    // of a leading conjugate pair, index 1 is the member with Im >= 0
    if index <= 2 && s.eigenvalues.len() >= 2 {
        let lead = leading_eigenvalue(&s.eigenvalues);
        if lead == s.eigenvalues[1] && lead != s.eigenvalues[0] {
            j = 1 - j;
        }
    }
    let v = s.vectors.unwrap().swap_remove(j);
    Ok((p, s.eigenvalues[j], v))
}

pub fn cmd_field(cfg: &RunConfig) -> Result<Table> {
    let CommandKind::Field { index, nr, ntheta } = cfg.command else { unreachable!() };
    let x = cfg.h13[0];
    let h = x * x * x;
    let (p, _, v) = eigenvector_at(cfg, h, index)?;
    let (r0, r1) = radial_range(&cfg.domain);
    let grid = PolarGrid::uniform(r0, r1, nr, ntheta);
    let u = eigenfunction_field(&p, &v, &grid)?;
    let peak = u.iter().copied().max_by(|a, b| a.norm().total_cmp(&b.norm())).unwrap();
    let mut t = Table::new(&["r", "theta", "re", "im"]);
    for (ir, &r) in grid.r.iter().enumerate() {
        for (it, &th) in grid.theta.iter().enumerate() {
            let w = u[ir * ntheta + it] / peak;
            t.push(vec![r.into(), th.into(), w.re.into(), w.im.into()]);
        }
    }
    Ok(t)
}

pub fn cmd_wkb(cfg: &RunConfig) -> Result<Table> {
    let CommandKind::Wkb { s_max, ns } = cfg.command else { unreachable!() };
    let Shape::Disk { r0 } = cfg.domain.shape else {
        return Err(Error::Invalid("wkb runs on a disk".into()));
    };
    let x = cfg.h13[0];
    let h = x * x * x;
    let cond = cfg.domain_at(h).outer;
    let phase = WkbPhase::new(BoundaryProfile::disk(r0), cond, cfg.n)?;
    let (p, _, v) = eigenvector_at(cfg, h, 1)?;
    let s: Vec<f64> = (0..ns).map(|i| -s_max + 2.0 * s_max * i as f64 / (ns - 1) as f64).collect();
    let mut theta: Vec<f64> = s.iter().map(|&t| t / r0).collect();
    theta.push(0.0);
    let trace = eigenfunction_field(&p, &v, &PolarGrid { r: vec![r0], theta })?;
    let u0 = trace[ns].norm();
    let mut t = Table::new(&["s", "numeric", "wkb", "wkb_theta0"]);
    for (i, &si) in s.iter().enumerate() {
        let full = phase.decay(h, si, true)?.norm();
        let bare = phase.decay(h, si, false)?.norm();
        t.push(vec![si.into(), (trace[i].norm() / u0).into(), full.into(), bare.into()]);
    }
    Ok(t)
}

pub fn cmd_nmr(cfg: &RunConfig) -> Result<Table> {
    let CommandKind::Nmr { diffusivity: d, gamma, ref g } = cfg.command else { unreachable!() };
    let (_, lam) = leading_expansion(cfg)?;
    // small-g branch from the Laplace ground state when available
    let m = cfg.trunc.unwrap_or(200);
    let small = u0_moments(&cfg.domain, m).ok().and_then(|mo| {
        let mu0 = build_basis(&cfg.domain, 1).ok()?[0].mu;
        small_g_shift(mu0, &mo).ok().map(|s| (mu0, s))
    });
    let mut t = Table::new(&[
        "g", "h", "re_omega", "im_omega", "re_offset", "im_offset", "re_t23", "im_t23", "re_t1", "im_t1", "re_t43", "im_t43",
        "re_small", "im_small",
    ]);
    for &gi in g {
        let h = nmr_h(d, gi, gamma)?;
        let w = nmr_decay(d, gi, gamma, &lam)?;
        let terms = nmr_terms(d, gi, gamma, &lam)?;
        let sm = small.map_or(Cx::new(f64::NAN, f64::NAN), |(mu0, s)| s.eigenvalue(mu0, gamma * gi / d) * d);
        let mut row: Vec<Cell> = vec![gi.into(), h.into(), w.re.into(), w.im.into()];
        for z in terms {
            row.push(z.re.into());
            row.push(z.im.into());
        }
        row.push(sm.re.into());
        row.push(sm.im.into());
        t.push(row);
    }
    Ok(t)
}

pub fn cmd_convergence(cfg: &RunConfig) -> Result<Table> {
    let CommandKind::Convergence { ref m_list } = cfg.command else { unreachable!() };
    let x = cfg.h13[0];
    let h = x * x * x;
    let r = offset_radius(cfg)?;
    let st = convergence_study_with(&cfg.domain_at(h), h, m_list, cfg.assemble_options().coupling)?;
    let mut t = Table::new(&["M", "ratio", "re", "im", "re_rescaled", "im_rescaled", "diff"]);
    for row in &st.rows {
        let z = rescale_signed(row.lambda1, r, h, cfg.pair_tol * h.powf(2.0 / 3.0));
        t.push(vec![
            row.m.into(),
            row.ratio.into(),
            row.lambda1.re.into(),
            row.lambda1.im.into(),
            z.re.into(),
            im_out(cfg, z).into(),
            row.diff.unwrap_or(f64::NAN).into(),
        ]);
    }
    Ok(t)
}
