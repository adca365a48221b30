//! Globally adaptive Gauss–Kronrod (7, 15) quadrature.
//!
//! Non-integrable spots are not an error: an interval that keeps failing to
//! converge down to a width of `1e-13` of the range, or that hits an infinite
//! integrand value, is reported as a singular point and the integral as
//! divergent.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

const XGK: [f64; 8] = [
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.0,
];
const WGK: [f64; 8] = [
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
];
const WG: [f64; 4] = [
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
];

#[derive(Debug, Clone, PartialEq)]
pub struct QuadResult {
    pub value: f64,
    pub error_estimate: f64,
    pub divergent: bool,
    pub singular_points: Vec<f64>,
    pub intervals: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuadOptions {
    pub rel_tol: f64,
    pub abs_tol: f64,
    pub max_intervals: usize,
}

impl Default for QuadOptions {
    fn default() -> Self {
        Self {
            rel_tol: 1e-9,
            abs_tol: 1e-300,
            max_intervals: 4000,
        }
    }
}

struct Piece {
    a: f64,
    b: f64,
    value: f64,
    error: f64,
}

impl PartialEq for Piece {
    fn eq(&self, other: &Self) -> bool {
        self.error == other.error
    }
}
impl Eq for Piece {}
impl PartialOrd for Piece {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Piece {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error.total_cmp(&other.error)
    }
}

enum Rule {
    Ok(f64, f64),
    Infinite,
    Nan,
}

fn gk15<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> Rule {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let mut k = 0.0;
    let mut g = 0.0;
    for (i, (&x, &w)) in XGK.iter().zip(&WGK).enumerate() {
        let vals = if x == 0.0 {
            [f(c), 0.0]
        } else {
            [f(c - h * x), f(c + h * x)]
        };
        for v in vals {
            if v.is_nan() {
                return Rule::Nan;
            }
            if v.is_infinite() {
                return Rule::Infinite;
            }
        }
        let s = vals[0] + vals[1];
        k += w * s;
        if i % 2 == 1 {
            g += WG[i / 2] * s;
        }
    }
    Rule::Ok(k * h, ((k - g) * h).abs())
}

/// Integrates `f` over each consecutive pair of `breaks` (sorted, at least two
/// points) so that known kinks sit on interval ends.
pub fn integrate<F: Fn(f64) -> f64>(f: F, breaks: &[f64], opts: QuadOptions) -> Result<QuadResult> {
    if breaks.len() < 2 || breaks.windows(2).any(|w| !(w[0] < w[1])) {
        return Err(Error::QuadratureFailure(
            "breakpoints must be strictly increasing".into(),
        ));
    }
    let range = breaks[breaks.len() - 1] - breaks[0];
    let min_width = 1e-13 * range;
    let mut heap = BinaryHeap::new();
    let mut singular = Vec::new();
    let mut frozen_value = 0.0;
    let mut frozen_error = 0.0;
    let push =
        |a: f64, b: f64, heap: &mut BinaryHeap<Piece>, singular: &mut Vec<f64>| -> Result<()> {
            match gk15(&f, a, b) {
                Rule::Ok(value, error) => heap.push(Piece { a, b, value, error }),
                Rule::Infinite => {
                    if b - a < min_width {
                        singular.push(0.5 * (a + b));
                    } else {
                        let m = 0.5 * (a + b);
                        heap.push(Piece {
                            a,
                            b: m,
                            value: 0.0,
                            error: f64::INFINITY,
                        });
                        heap.push(Piece {
                            a: m,
                            b,
                            value: 0.0,
                            error: f64::INFINITY,
                        });
                    }
                }
                Rule::Nan => {
                    return Err(Error::QuadratureFailure(format!(
                        "integrand is NaN on [{a}, {b}]"
                    )));
                }
            }
            Ok(())
        };
    for w in breaks.windows(2) {
        push(w[0], w[1], &mut heap, &mut singular)?;
    }
    loop {
        let total: f64 = heap.iter().map(|p| p.value).sum::<f64>() + frozen_value;
        let err: f64 = heap.iter().map(|p| p.error).sum();
        if !singular.is_empty() {
            singular.sort_by(f64::total_cmp);
            return Ok(QuadResult {
                value: f64::INFINITY,
                error_estimate: f64::INFINITY,
                divergent: true,
                singular_points: singular,
                intervals: heap.len(),
            });
        }
        if err <= opts.abs_tol.max(opts.rel_tol * total.abs()) {
            return Ok(QuadResult {
                value: total,
                error_estimate: err + frozen_error,
                divergent: false,
                singular_points: singular,
                intervals: heap.len(),
            });
        }
        if heap.len() >= opts.max_intervals {
            return Err(Error::QuadratureFailure(format!(
                "no convergence after {} intervals (estimate {total}, error {err})",
                heap.len()
            )));
        }
        let worst = heap.pop().expect("heap is never empty here");
        if worst.b - worst.a < min_width {
            // An integrable singularity leaves a vanishing contribution on a
            // tiny interval; a non-integrable one dominates the total.
            let rest = (total - worst.value).abs();
            if worst.error.is_finite() && worst.value.abs() <= 1e-6 * rest.max(opts.abs_tol) {
                frozen_value += worst.value;
                frozen_error += worst.error;
            } else {
                singular.push(0.5 * (worst.a + worst.b));
            }
            continue;
        }
        let m = 0.5 * (worst.a + worst.b);
        push(worst.a, m, &mut heap, &mut singular)?;
        push(m, worst.b, &mut heap, &mut singular)?;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polynomial_exact() {
        let r = integrate(|x| 3.0 * x * x, &[0.0, 2.0], QuadOptions::default()).unwrap();
        assert!((r.value - 8.0).abs() < 1e-13);
    }

    #[test]
    fn gaussian() {
        let r = integrate(
            |x: f64| (-x * x).exp(),
            &[-10.0, 10.0],
            QuadOptions::default(),
        )
        .unwrap();
        assert!((r.value - std::f64::consts::PI.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn integrable_square_root_singularity() {
        let r = integrate(
            |x: f64| 1.0 / x.abs().sqrt().max(1e-300),
            &[-1.0, 0.0, 1.0],
            QuadOptions::default(),
        )
        .unwrap();
        assert!(!r.divergent);
        assert!((r.value - 4.0).abs() < 1e-5, "{}", r.value);
    }

    #[test]
    fn double_pole_diverges() {
        let r = integrate(
            |x: f64| 1.0 / (x - 0.3).powi(2),
            &[0.0, 1.0],
            QuadOptions::default(),
        )
        .unwrap();
        assert!(r.divergent);
        assert!((r.singular_points[0] - 0.3).abs() < 1e-9);
    }

    #[test]
    fn nan_is_failure() {
        assert!(integrate(|_| f64::NAN, &[0.0, 1.0], QuadOptions::default()).is_err());
    }
}
