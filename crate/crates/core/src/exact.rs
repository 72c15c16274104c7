//! Sign of a difference of two products of coordinate differences,
//!
//! ```text
//!     (a - b) * (c - d) - (e - f) * (g - h)
//! ```
//!
//! evaluated exactly for any finite `f64` inputs. Every predicate in the crate
//! (orientation, the parallel-line test, the farthest-point comparison and the
//! projection comparison) reduces to this form.
//!
//! Evaluation is staged:
//!
//! 1. plain floating point, accepted when the magnitude clears a forward error
//!    bound computed from the operand magnitudes;
//! 2. error-free transforms: if every difference and both products turn out to
//!    be exact, the sign is the comparison of the two products;
//! 3. arbitrary-precision integers, reached on near-degenerate inputs and on
//!    overflow or underflow of the intermediates.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::float::FloatCore;
use num_traits::Signed;

const EPSILON: f64 = f64::EPSILON / 2.0;
/// Error bound for `(a-b)(c-d) - (e-f)(g-h)` relative to `|l| + |r|`.
const ERR_BOUND: f64 = (3.0 + 16.0 * EPSILON) * EPSILON;
/// Below this the error bound is no longer reliable because products may have
/// lost bits to gradual underflow.
const UNDERFLOW_GUARD: f64 = 1e-280;

#[allow(clippy::too_many_arguments)]
#[inline]
pub(crate) fn diff_product_sign(
    a: f64,
    b: f64,
    c: f64,
    d: f64,
    e: f64,
    f: f64,
    g: f64,
    h: f64,
) -> Ordering {
    let d1 = a - b;
    let d2 = c - d;
    let d3 = e - f;
    let d4 = g - h;
    let l = d1 * d2;
    let r = d3 * d4;
    let det = l - r;
    let mag = l.abs() + r.abs();
    if det.is_finite() && mag.is_finite() && mag > UNDERFLOW_GUARD && det.abs() > ERR_BOUND * mag {
        return if det > 0.0 { Ordering::Greater } else { Ordering::Less };
    }
    if let Some(sign) = error_free_sign(a, b, c, d, e, f, g, h) {
        return sign;
    }
    exact_sign(a, b, c, d, e, f, g, h)
}

/// `Some(sign)` when every intermediate was computed without rounding.
#[allow(clippy::too_many_arguments)]
fn error_free_sign(
    a: f64,
    b: f64,
    c: f64,
    d: f64,
    e: f64,
    f: f64,
    g: f64,
    h: f64,
) -> Option<Ordering> {
    let d1 = exact_diff(a, b)?;
    let d2 = exact_diff(c, d)?;
    let d3 = exact_diff(e, f)?;
    let d4 = exact_diff(g, h)?;
    let l = exact_product(d1, d2)?;
    let r = exact_product(d3, d4)?;
    l.partial_cmp(&r)
}

fn exact_diff(a: f64, b: f64) -> Option<f64> {
    let x = a - b;
    if !x.is_finite() {
        return None;
    }
    // Knuth two-sum on (a, -b): x + err == a - b exactly.
    let bv = x - a;
    let av = x - bv;
    let err = (a - av) + (-b - bv);
    (err == 0.0).then_some(x)
}

fn exact_product(x: f64, y: f64) -> Option<f64> {
    let p = x * y;
    if !p.is_finite() {
        return None;
    }
    if p == 0.0 {
        // Either an operand is zero (exact) or the product underflowed.
        return (x == 0.0 || y == 0.0).then_some(0.0);
    }
    if p.abs() < f64::MIN_POSITIVE {
        // Subnormal product; fma residual is not trustworthy here.
        return None;
    }
    (x.mul_add(y, -p) == 0.0).then_some(p)
}

#[allow(clippy::too_many_arguments)]
fn exact_sign(
    a: f64,
    b: f64,
    c: f64,
    d: f64,
    e: f64,
    f: f64,
    g: f64,
    h: f64,
) -> Ordering {
    let vals = [a, b, c, d, e, f, g, h].map(decode);
    let min_exp = vals
        .iter()
        .filter(|(m, _)| *m != 0)
        .map(|&(_, exp)| exp)
        .min()
        .unwrap_or(0);
    let [a, b, c, d, e, f, g, h] = vals.map(|(m, exp)| {
        let v = BigInt::from(m);
        v << ((exp - min_exp) as usize)
    });
    let det = (a - b) * (c - d) - (e - f) * (g - h);
    if det.is_positive() {
        Ordering::Greater
    } else if det.is_negative() {
        Ordering::Less
    } else {
        Ordering::Equal
    }
}

/// `x == m * 2^exp` exactly.
fn decode(x: f64) -> (i64, i32) {
    debug_assert!(x.is_finite());
    let (mantissa, exp, sign) = x.integer_decode();
    (sign as i64 * mantissa as i64, exp as i32)
}
