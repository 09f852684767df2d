//! Dense complex non-Hermitian eigensolver with ordering, conjugate pairing
//! and rescaling helpers.

mod hessenberg;
mod matrix;
mod qr;
mod study;

pub use hessenberg::Hessenberg;
pub use matrix::{vec_norm, CMatrix};
pub use qr::{hessenberg_eigenvalues, hessenberg_solve, DEFLATION_EPS, SWEEPS_PER_DIM};
pub use study::{convergence_study, convergence_study_with, ConvergenceRow, ConvergenceStudy};

use crate::error::{Error, Result};
use crate::Cx;
use serde::{Deserialize, Serialize};

/// Largest dimension accepted by the solver.
pub const MAX_DIM: usize = 1500;
/// Residual bound for returned eigenvectors, relative to max(1, ||A||_F).
pub const RESIDUAL_TOL: f64 = 1e-8;

#[derive(Clone, Debug)]
pub struct EigenSolution {
    /// ordered by increasing real part, ties by imaginary part
    pub eigenvalues: Vec<Cx>,
    /// eigenvectors as columns, unit 2-norm, when requested
    pub eigenvectors: Option<CMatrix>,
    /// ||A v - lambda v||/||v|| per returned vector
    pub residuals: Vec<f64>,
    pub iterations: usize,
    pub converged: bool,
}

pub fn sort_by_real(v: &mut [Cx]) {
    v.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
}

fn check(a: &CMatrix) -> Result<()> {
    if !a.is_square() {
        return Err(Error::Invalid(format!("matrix is {}x{}, not square", a.rows(), a.cols())));
    }
    if a.rows() > MAX_DIM {
        return Err(Error::Invalid(format!("dimension {} exceeds {MAX_DIM}", a.rows())));
    }
    if a.data().iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
        return Err(Error::Invalid("matrix has non-finite entries".into()));
    }
    Ok(())
}

/// All eigenvalues.
pub fn eigen_all(a: &CMatrix) -> Result<EigenSolution> {
    check(a)?;
    let mut hs = Hessenberg::new(a);
    let (mut ev, it) = hessenberg_eigenvalues(&mut hs.h)?;
    sort_by_real(&mut ev);
    Ok(EigenSolution { eigenvalues: ev, eigenvectors: None, residuals: Vec::new(), iterations: it, converged: true })
}

/// The `count` eigenvalues of smallest real part, optionally with
/// eigenvectors by inverse iteration on the Hessenberg form.
pub fn eigen_leading(a: &CMatrix, count: usize, with_vectors: bool) -> Result<EigenSolution> {
    check(a)?;
    let n = a.rows();
    if count > n {
        return Err(Error::Invalid(format!("requested {count} eigenvalues of a {n}x{n} matrix")));
    }
    let hs = Hessenberg::new(a);
    let mut work = hs.h.clone();
    let (mut ev, it) = hessenberg_eigenvalues(&mut work)?;
    drop(work);
    sort_by_real(&mut ev);
    ev.truncate(count);
    if !with_vectors {
        return Ok(EigenSolution { eigenvalues: ev, eigenvectors: None, residuals: Vec::new(), iterations: it, converged: true });
    }
    let anorm = a.norm_fro().max(1.0);
    let mut vecs = CMatrix::zeros(n, count);
    let mut res = Vec::with_capacity(count);
    for (j, &lam) in ev.iter().enumerate() {
        let (v, r) = inverse_iteration(a, &hs, lam, anorm)?;
        vecs.set_column(j, &v);
        res.push(r);
    }
    Ok(EigenSolution { eigenvalues: ev, eigenvectors: Some(vecs), residuals: res, iterations: it, converged: true })
}

fn residual(a: &CMatrix, lam: Cx, v: &[Cx]) -> f64 {
    let av = a.mul_vec(v);
    let r: Vec<Cx> = av.iter().zip(v).map(|(x, y)| x - lam * y).collect();
    vec_norm(&r) / vec_norm(v)
}

/// Eigenvector for a computed eigenvalue: two solves on H - lambda I and
/// up to two more when the residual is still above tolerance.
fn inverse_iteration(a: &CMatrix, hs: &Hessenberg, lam: Cx, anorm: f64) -> Result<(Vec<Cx>, f64)> {
    let n = a.rows();
    let tiny = f64::EPSILON * anorm;
    let mut x: Vec<Cx> = (0..n).map(|i| Cx::new(1.0, 0.37 * ((i * 7919 % 101) as f64 / 101.0))).collect();
    let mut best: Option<(Vec<Cx>, f64)> = None;
    for it in 0..4 {
        x = hessenberg_solve(&hs.h, lam, &x, tiny);
        let nx = vec_norm(&x);
        if !(nx.is_finite()) || nx == 0.0 {
            break;
        }
        for z in x.iter_mut() {
            *z /= nx;
        }
        if it >= 1 {
            let mut v = x.clone();
            hs.apply_q(&mut v);
            let r = residual(a, lam, &v);
            if best.as_ref().map_or(true, |b| r < b.1) {
                best = Some((v, r));
            }
            if r <= RESIDUAL_TOL * anorm {
                break;
            }
        }
    }
    match best {
        Some((v, r)) if r <= RESIDUAL_TOL * anorm => Ok((v, r)),
        Some((_, r)) => Err(Error::NoConvergence { iterations: 4, residual: r }),
        None => Err(Error::NoConvergence { iterations: 4, residual: f64::INFINITY }),
    }
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Pairing {
    /// (i, j) with lambda_i close to conj(lambda_j); real values appear as (i, i)
    pub pairs: Vec<(usize, usize)>,
    pub unpaired: Vec<usize>,
}

impl Pairing {
    pub fn partner(&self, i: usize) -> Option<usize> {
        self.pairs.iter().find_map(|&(a, b)| if a == i { Some(b) } else if b == i { Some(a) } else { None })
    }
}

/// Greedy matching of eigenvalues with conjugates of others.
pub fn pair_conjugates(values: &[Cx], tol: f64) -> Pairing {
    let n = values.len();
    let mut used = vec![false; n];
    let mut out = Pairing::default();
    for i in 0..n {
        if values[i].im.abs() < tol {
            used[i] = true;
            out.pairs.push((i, i));
        }
    }
    let mut cand = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if used[i] || used[j] {
                continue;
            }
            let d = (values[i] - values[j].conj()).norm();
            if d < tol {
                cand.push((d, i, j));
            }
        }
    }
    cand.sort_by(|a, b| a.0.total_cmp(&b.0));
    for (_, i, j) in cand {
        if !used[i] && !used[j] {
            used[i] = true;
            used[j] = true;
            out.pairs.push((i, j));
        }
    }
    out.pairs.sort();
    out.unpaired = (0..n).filter(|&i| !used[i]).collect();
    out
}

/// (lambda - i R)/h^{2/3}
pub fn rescale(lam: Cx, r: f64, h: f64) -> Cx {
    (lam - Cx::new(0.0, r)) / h.powf(2.0 / 3.0)
}
