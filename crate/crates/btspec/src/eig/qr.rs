use super::matrix::CMatrix;
use crate::error::{Error, Result};
use crate::Cx;

/// Relative subdiagonal deflation threshold.
pub const DEFLATION_EPS: f64 = 1e-14;
/// Sweeps allowed per matrix dimension.
pub const SWEEPS_PER_DIM: usize = 30;

fn givens(x: Cx, y: Cx) -> (f64, Cx) {
    let ax = x.norm();
    let r = (x.norm_sqr() + y.norm_sqr()).sqrt();
    if r == 0.0 {
        return (1.0, Cx::new(0.0, 0.0));
    }
    if ax == 0.0 {
        return (0.0, Cx::new(1.0, 0.0));
    }
    let c = ax / r;
    let s = (x / ax) * y.conj() / r;
    (c, s)
}

fn wilkinson(a: Cx, b: Cx, c: Cx, d: Cx) -> Cx {
    let half = (a - d) * 0.5;
    let disc = (half * half + b * c).sqrt();
    let m = (a + d) * 0.5;
    let (l1, l2) = (m + disc, m - disc);
    if (l1 - d).norm() < (l2 - d).norm() {
        l1
    } else {
        l2
    }
}

/// Eigenvalues of an upper Hessenberg matrix by implicit single-shift QR.
/// `h` is overwritten. Returns eigenvalues in deflation order and the
/// number of sweeps.
pub fn hessenberg_eigenvalues(h: &mut CMatrix) -> Result<(Vec<Cx>, usize)> {
    let n = h.rows();
    let mut eig = vec![Cx::new(0.0, 0.0); n];
    if n == 0 {
        return Ok((eig, 0));
    }
    let scale = h.norm_fro().max(f64::MIN_POSITIVE);
    let max_sweeps = SWEEPS_PER_DIM * n.max(1);
    let mut total = 0usize;
    let mut stall = 0usize;
    let mut hi = n - 1;
    loop {
        if hi == 0 {
            eig[0] = h[(0, 0)];
            break;
        }
        let mut l = hi;
        while l > 0 {
            let s = h[(l - 1, l - 1)].norm() + h[(l, l)].norm();
            let s = if s == 0.0 { scale } else { s };
            if h[(l, l - 1)].norm() <= DEFLATION_EPS * s {
                h[(l, l - 1)] = Cx::new(0.0, 0.0);
                break;
            }
            l -= 1;
        }
        if l == hi {
            eig[hi] = h[(hi, hi)];
            hi -= 1;
            stall = 0;
            continue;
        }
        if l + 1 == hi {
            // 2x2 block: closed form
            let (a, b, c, d) = (h[(l, l)], h[(l, hi)], h[(hi, l)], h[(hi, hi)]);
            let half = (a - d) * 0.5;
            let disc = (half * half + b * c).sqrt();
            let m = (a + d) * 0.5;
            eig[l] = m + disc;
            eig[hi] = m - disc;
            h[(hi, l)] = Cx::new(0.0, 0.0);
            if l == 0 {
                break;
            }
            hi = l - 1;
            stall = 0;
            continue;
        }
        total += 1;
        stall += 1;
        if total > max_sweeps {
            let r = h[(hi, hi - 1)].norm();
            return Err(Error::NoConvergence { iterations: total, residual: r });
        }
        let shift = if stall % 10 == 0 {
            h[(hi, hi)] + Cx::new(0.75 * h[(hi, hi - 1)].norm(), 0.5 * h[(hi - 1, hi - 2)].norm())
        } else {
            wilkinson(h[(hi - 1, hi - 1)], h[(hi - 1, hi)], h[(hi, hi - 1)], h[(hi, hi)])
        };
        let mut x = h[(l, l)] - shift;
        let mut y = h[(l + 1, l)];
        for k in l..hi {
            if k > l {
                x = h[(k, k - 1)];
                y = h[(k + 1, k - 1)];
            }
            let (c, s) = givens(x, y);
            let sc = s.conj();
            let j0 = if k > l { k - 1 } else { l };
            {
                let (rk, rk1) = h.rows_mut2(k, k + 1);
                for (p, q) in rk[j0..=hi].iter_mut().zip(rk1[j0..=hi].iter_mut()) {
                    let (u, v) = (*p, *q);
                    *p = u * c + s * v;
                    *q = -sc * u + v * c;
                }
            }
            let imax = (k + 2).min(hi);
            for i in l..=imax {
                let u = h[(i, k)];
                let v = h[(i, k + 1)];
                h[(i, k)] = u * c + v * sc;
                h[(i, k + 1)] = -u * s + v * c;
            }
            if k > l {
                h[(k + 1, k - 1)] = Cx::new(0.0, 0.0);
            }
        }
    }
    Ok((eig, total))
}

/// Solves (H - z I) x = b for upper Hessenberg H by LU with partial pivoting.
/// Small pivots are replaced by `tiny` so that shifts at eigenvalues work.
pub fn hessenberg_solve(h: &CMatrix, z: Cx, b: &[Cx], tiny: f64) -> Vec<Cx> {
    let n = h.rows();
    let mut u = h.clone();
    for i in 0..n {
        u[(i, i)] -= z;
    }
    let mut x = b.to_vec();
    for k in 0..n.saturating_sub(1) {
        if u[(k + 1, k)].norm() > u[(k, k)].norm() {
            let (a, bb) = u.rows_mut2(k, k + 1);
            a[k..].swap_with_slice(&mut bb[k..]);
            x.swap(k, k + 1);
        }
        let mut p = u[(k, k)];
        if p.norm() < tiny {
            p = Cx::new(tiny, 0.0);
            u[(k, k)] = p;
        }
        let f = u[(k + 1, k)] / p;
        if f != Cx::new(0.0, 0.0) {
            let (a, bb) = u.rows_mut2(k, k + 1);
            for (q, &r) in bb[k..].iter_mut().zip(&a[k..]) {
                *q -= f * r;
            }
            let xk = x[k];
            x[k + 1] -= f * xk;
        }
    }
    if n > 0 && u[(n - 1, n - 1)].norm() < tiny {
        u[(n - 1, n - 1)] = Cx::new(tiny, 0.0);
    }
    for i in (0..n).rev() {
        let row = u.row(i);
        let mut s = x[i];
        for j in i + 1..n {
            s -= row[j] * x[j];
        }
        x[i] = s / row[i];
    }
    x
}
