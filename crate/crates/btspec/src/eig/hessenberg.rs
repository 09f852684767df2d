use super::matrix::CMatrix;
use crate::Cx;

/// Upper Hessenberg form H = Q* A Q with Q a product of Householder reflectors.
#[derive(Clone, Debug)]
pub struct Hessenberg {
    pub h: CMatrix,
    /// reflector k acts on indices k+1.. with unit vector v (I - 2 v v*)
    reflectors: Vec<Vec<Cx>>,
}

impl Hessenberg {
    pub fn new(a: &CMatrix) -> Self {
        assert!(a.is_square(), "matrix must be square");
        let n = a.rows();
        let mut h = a.clone();
        let mut reflectors = Vec::with_capacity(n.saturating_sub(2));
        let mut w = vec![Cx::new(0.0, 0.0); n];
        for k in 0..n.saturating_sub(2) {
            let mut v: Vec<Cx> = (k + 1..n).map(|i| h[(i, k)]).collect();
            let alpha = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
            if alpha == 0.0 || v[1..].iter().all(|z| *z == Cx::new(0.0, 0.0)) {
                reflectors.push(Vec::new());
                continue;
            }
            let phase = if v[0].norm() == 0.0 { Cx::new(1.0, 0.0) } else { v[0] / v[0].norm() };
            v[0] += phase * alpha;
            let vn = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
            for z in v.iter_mut() {
                *z /= vn;
            }
            // left: rows k+1.., columns k..
            for x in w[k..].iter_mut() {
                *x = Cx::new(0.0, 0.0);
            }
            for (idx, &vi) in v.iter().enumerate() {
                let row = &h.row(k + 1 + idx)[k..];
                let cv = vi.conj();
                for (x, &a) in w[k..].iter_mut().zip(row) {
                    *x += cv * a;
                }
            }
            for (idx, &vi) in v.iter().enumerate() {
                let f = vi * 2.0;
                let row = &mut h.row_mut(k + 1 + idx)[k..];
                for (a, &x) in row.iter_mut().zip(&w[k..]) {
                    *a -= f * x;
                }
            }
            // right: all rows, columns k+1..
            for i in 0..n {
                let row = &mut h.row_mut(i)[k + 1..];
                let t: Cx = row.iter().zip(&v).map(|(a, b)| a * b).sum();
                let t2 = t * 2.0;
                for (a, &vj) in row.iter_mut().zip(&v) {
                    *a -= t2 * vj.conj();
                }
            }
            for i in k + 2..n {
                h[(i, k)] = Cx::new(0.0, 0.0);
            }
            reflectors.push(v);
        }
        Hessenberg { h, reflectors }
    }

    /// x <- Q x
    pub fn apply_q(&self, x: &mut [Cx]) {
        for (k, v) in self.reflectors.iter().enumerate().rev() {
            if v.is_empty() {
                continue;
            }
            let seg = &mut x[k + 1..];
            let t: Cx = v.iter().zip(seg.iter()).map(|(a, b)| a.conj() * b).sum();
            let t2 = t * 2.0;
            for (s, &vi) in seg.iter_mut().zip(v) {
                *s -= t2 * vi;
            }
        }
    }

    /// The unitary factor as a dense matrix.
    pub fn q(&self) -> CMatrix {
        let n = self.h.rows();
        let mut q = CMatrix::zeros(n, n);
        for j in 0..n {
            let mut e = vec![Cx::new(0.0, 0.0); n];
            e[j] = Cx::new(1.0, 0.0);
            self.apply_q(&mut e);
            q.set_column(j, &e);
        }
        q
    }
}
