//! Bracketed root refinement.

/// Bisection on `[a, b]` for a sign change of `f`, given the endpoint values
/// (which may be infinite, e.g. next to a pole). Runs until the bracket stops
/// shrinking in floating point.
pub fn bisect_with_ends<F: Fn(f64) -> f64>(f: F, mut a: f64, fa: f64, mut b: f64, fb: f64) -> f64 {
    if fa == 0.0 {
        return a;
    }
    if fb == 0.0 {
        return b;
    }
    debug_assert!(fa.signum() != fb.signum(), "root not bracketed");
    let sa = fa.signum();
    for _ in 0..2100 {
        let m = 0.5 * (a + b);
        if m <= a.min(b) || m >= a.max(b) {
            break;
        }
        let fm = f(m);
        if fm == 0.0 {
            return m;
        }
        if fm.signum() == sa {
            a = m;
        } else {
            b = m;
        }
    }
    0.5 * (a + b)
}

pub fn bisect<F: Fn(f64) -> f64>(f: F, a: f64, b: f64) -> f64 {
    let (fa, fb) = (f(a), f(b));
    bisect_with_ends(f, a, fa, b, fb)
}

/// Smallest `x` in `[a, b]` with `f(x) >= target` for nondecreasing `f`, with
/// known endpoint values. `None` when `f(b) < target`.
pub fn first_at_least<F: Fn(f64) -> f64>(
    f: F,
    (a, fa): (f64, f64),
    (b, fb): (f64, f64),
    target: f64,
) -> Option<f64> {
    if fa >= target {
        return Some(a);
    }
    if fb < target {
        return None;
    }
    Some(bisect_with_ends(
        |x| f(x) - target,
        a,
        fa - target,
        b,
        fb - target,
    ))
}
