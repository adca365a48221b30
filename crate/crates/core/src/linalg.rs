//! Complex tridiagonal solver with partial pivoting and a 1-norm condition
//! estimate, following the LAPACK `gttrf`/`gttrs`/`gtcon` scheme.

use num_complex::Complex64;

use crate::{Error, Result};

/// Tridiagonal matrix: `dl` below, `d` on, `du` above the diagonal.
#[derive(Debug, Clone, PartialEq)]
pub struct Tridiagonal {
    pub dl: Vec<Complex64>,
    pub d: Vec<Complex64>,
    pub du: Vec<Complex64>,
}

impl Tridiagonal {
    pub fn zeros(n: usize) -> Self {
        let z = Complex64::new(0.0, 0.0);
        Self {
            dl: vec![z; n.saturating_sub(1)],
            d: vec![z; n],
            du: vec![z; n.saturating_sub(1)],
        }
    }

    pub fn dim(&self) -> usize {
        self.d.len()
    }

    pub fn mul_vec(&self, x: &[Complex64]) -> Vec<Complex64> {
        let n = self.dim();
        (0..n)
            .map(|i| {
                let mut s = self.d[i] * x[i];
                if i > 0 {
                    s += self.dl[i - 1] * x[i - 1];
                }
                if i + 1 < n {
                    s += self.du[i] * x[i + 1];
                }
                s
            })
            .collect()
    }

    pub fn norm1(&self) -> f64 {
        let n = self.dim();
        (0..n)
            .map(|j| {
                let mut s = self.d[j].norm();
                if j > 0 {
                    s += self.du[j - 1].norm();
                }
                if j + 1 < n {
                    s += self.dl[j].norm();
                }
                s
            })
            .fold(0.0, f64::max)
    }

    /// LU factorization with row interchanges.
    pub fn factor(&self) -> Result<TridiagonalLu> {
        let n = self.dim();
        let mut dl = self.dl.clone();
        let mut d = self.d.clone();
        let mut du = self.du.clone();
        let mut du2 = vec![Complex64::new(0.0, 0.0); n.saturating_sub(2)];
        let mut swap = vec![false; n.saturating_sub(1)];
        for i in 0..n.saturating_sub(1) {
            if d[i].l1_norm() >= dl[i].l1_norm() {
                if d[i].l1_norm() != 0.0 {
                    let f = dl[i] / d[i];
                    dl[i] = f;
                    d[i + 1] -= f * du[i];
                }
            } else {
                let f = d[i] / dl[i];
                d[i] = dl[i];
                dl[i] = f;
                let tmp = du[i];
                du[i] = d[i + 1];
                d[i + 1] = tmp - f * d[i + 1];
                if i + 2 < n {
                    du2[i] = du[i + 1];
                    du[i + 1] = -f * du[i + 1];
                }
                swap[i] = true;
            }
        }
        if d.iter().any(|x| x.l1_norm() == 0.0) {
            return Err(Error::SingularSystem {
                condition: f64::INFINITY,
            });
        }
        Ok(TridiagonalLu {
            dl,
            d,
            du,
            du2,
            swap,
            anorm: self.norm1(),
        })
    }
}

#[derive(Debug, Clone)]
pub struct TridiagonalLu {
    dl: Vec<Complex64>,
    d: Vec<Complex64>,
    du: Vec<Complex64>,
    du2: Vec<Complex64>,
    swap: Vec<bool>,
    anorm: f64,
}

impl TridiagonalLu {
    pub fn solve(&self, b: &[Complex64]) -> Vec<Complex64> {
        let n = self.d.len();
        let mut x = b.to_vec();
        for i in 0..n.saturating_sub(1) {
            if self.swap[i] {
                let tmp = x[i];
                x[i] = x[i + 1];
                x[i + 1] = tmp - self.dl[i] * x[i];
            } else {
                let xi = x[i];
                x[i + 1] -= self.dl[i] * xi;
            }
        }
        for i in (0..n).rev() {
            let mut s = x[i];
            if i + 1 < n {
                s -= self.du[i] * x[i + 1];
            }
            if i + 2 < n {
                s -= self.du2[i] * x[i + 2];
            }
            x[i] = s / self.d[i];
        }
        x
    }

    /// Solves `Aᴴ x = b`.
    pub fn solve_adjoint(&self, b: &[Complex64]) -> Vec<Complex64> {
        let n = self.d.len();
        let mut x = b.to_vec();
        for i in 0..n {
            let mut s = x[i];
            if i >= 1 {
                s -= self.du[i - 1].conj() * x[i - 1];
            }
            if i >= 2 {
                s -= self.du2[i - 2].conj() * x[i - 2];
            }
            x[i] = s / self.d[i].conj();
        }
        for i in (0..n.saturating_sub(1)).rev() {
            if self.swap[i] {
                let tmp = x[i + 1];
                x[i + 1] = x[i] - self.dl[i].conj() * tmp;
                x[i] = tmp;
            } else {
                let next = x[i + 1];
                x[i] -= self.dl[i].conj() * next;
            }
        }
        x
    }

    /// Hager's estimate of `‖A‖₁ ‖A⁻¹‖₁`.
    pub fn condition_estimate(&self) -> f64 {
        let n = self.d.len();
        if n == 0 {
            return 1.0;
        }
        let mut x = vec![Complex64::new(1.0 / n as f64, 0.0); n];
        let mut est = 0.0;
        for _ in 0..5 {
            let y = self.solve(&x);
            let norm: f64 = y.iter().map(|v| v.norm()).sum();
            if norm <= est {
                break;
            }
            est = norm;
            let xi: Vec<Complex64> = y
                .iter()
                .map(|v| {
                    let a = v.norm();
                    if a > 0.0 {
                        v / a
                    } else {
                        Complex64::new(1.0, 0.0)
                    }
                })
                .collect();
            let z = self.solve_adjoint(&xi);
            let (j, zmax) = z.iter().enumerate().map(|(i, v)| (i, v.re)).fold(
                (0, f64::NEG_INFINITY),
                |acc, v| if v.1 > acc.1 { v } else { acc },
            );
            let ztx: f64 = z.iter().zip(&x).map(|(a, b)| (a.conj() * b).re).sum();
            if zmax <= ztx {
                break;
            }
            x = vec![Complex64::new(0.0, 0.0); n];
            x[j] = Complex64::new(1.0, 0.0);
        }
        est * self.anorm
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn sample() -> Tridiagonal {
        Tridiagonal {
            dl: vec![c(3.0, 1.0), c(-2.0, 0.5), c(5.0, 0.0)],
            d: vec![c(0.1, 0.0), c(1.0, -1.0), c(0.0, 0.0), c(2.0, 2.0)],
            du: vec![c(1.0, 0.0), c(0.0, 4.0), c(-1.0, 1.0)],
        }
    }

    #[test]
    fn solve_and_adjoint_roundtrip() {
        let a = sample();
        let lu = a.factor().unwrap();
        let b = vec![c(1.0, 0.0), c(0.0, 2.0), c(-1.0, 1.0), c(3.0, 0.0)];
        let x = lu.solve(&b);
        let ax = a.mul_vec(&x);
        for (u, v) in ax.iter().zip(&b) {
            assert!((u - v).norm() < 1e-13);
        }
        let y = lu.solve_adjoint(&b);
        // Aᴴ y computed densely
        let n = 4;
        for i in 0..n {
            let mut s = a.d[i].conj() * y[i];
            if i > 0 {
                s += a.du[i - 1].conj() * y[i - 1];
            }
            if i + 1 < n {
                s += a.dl[i].conj() * y[i + 1];
            }
            assert!((s - b[i]).norm() < 1e-13);
        }
    }

    #[test]
    fn condition_of_diagonal() {
        let mut a = Tridiagonal::zeros(3);
        a.d = vec![c(1.0, 0.0), c(1e-3, 0.0), c(2.0, 0.0)];
        let est = a.factor().unwrap().condition_estimate();
        assert!((est - 2e3).abs() < 1e-9);
    }

    #[test]
    fn singular_rejected() {
        let a = Tridiagonal::zeros(2);
        assert!(a.factor().is_err());
    }
}
