use crate::error::{Error, Result};
use crate::galerkin::{assemble, leading_eigenvalue, solve, AssembleOptions, Coupling};
use crate::geometry::DomainSpec;
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConvergenceRow {
    pub m: usize,
    pub lambda1: crate::Cx,
    /// |lambda1(M) - lambda1(M_last)|; absent for the last row
    pub diff: Option<f64>,
    /// h^2 mu_M / (|Omega|/(4 pi))
    pub ratio: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConvergenceStudy {
    pub rows: Vec<ConvergenceRow>,
}

pub fn convergence_study(domain: &DomainSpec, h: f64, m_list: &[usize]) -> Result<ConvergenceStudy> {
    convergence_study_with(domain, h, m_list, Coupling::Fixed)
}

pub fn convergence_study_with(domain: &DomainSpec, h: f64, m_list: &[usize], coupling: Coupling) -> Result<ConvergenceStudy> {
    if m_list.is_empty() || m_list.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::Invalid("M list must be nonempty and ascending".into()));
    }
    let opts = AssembleOptions { coupling, allow_under_resolved: true };
    let mut rows = Vec::with_capacity(m_list.len());
    for &m in m_list {
        let p = assemble(domain, h, m, opts)?;
        let s = solve(&p, 2.min(p.size()), false)?;
        rows.push(ConvergenceRow { m, lambda1: leading_eigenvalue(&s.eigenvalues), diff: None, ratio: p.truncation_ratio });
    }
    let last = rows.last().unwrap().lambda1;
    let n = rows.len();
    for r in &mut rows[..n - 1] {
        r.diff = Some((r.lambda1 - last).norm());
    }
    Ok(ConvergenceStudy { rows })
}
