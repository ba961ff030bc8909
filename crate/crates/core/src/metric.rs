//! Distance, the squeeze isometry, and an arc-length oracle.
//!
//! The map `g(x, y) = (x, k y)` ("squeeze") carries the `k`-model onto
//! the classical half-plane and is declared an isometry: the distance
//! between two points is the classical hyperbolic distance between
//! their squeezed images. Expanding that definition gives a closed
//! form directly in model coordinates. With `c`, `a` the parameters of
//! the line through `P1` and `P2`:
//!
//! ```text
//! d(P1, P2) = | ln( (x1 - c + a) y2 / ((x2 - c + a) y1) ) |   (x1 != x2)
//! d(P1, P2) = | ln(y2 / y1) |                                 (x1 = x2)
//! ```
//!
//! [`distance`] implements the closed form directly rather than
//! delegating to [`classical_distance`] through [`squeeze`], so the
//! equality of the two routes stays a meaningful cross-check (it is
//! exercised by the verification suites and the acceptance tests).
//!
//! Distances are infinitesimally generated by the length element
//! `ds = sqrt(dx^2 + k^2 dy^2) / (k y)`, the classical element pulled
//! back through the squeeze map. [`arc_length_oracle`] integrates that
//! element numerically along the ruler parametrization of a line. The
//! ruler is unit-speed, so the integrand is identically 1 in exact
//! arithmetic and the oracle must reproduce `t1 - t0`; running it
//! through floating-point quadrature validates the parametrization,
//! the length element, and the closed form against one another.

use crate::geodesic::{self, x_offset};
use crate::model::{
    Error, HLine, Model, Point, Result, DEFAULT_EPS_ABS, DEFAULT_EPS_REL,
};

/// The squeeze map `(x, y) -> (x, k y)` onto the classical model.
pub fn squeeze(m: &Model, p: Point) -> Point {
    Point::raw(p.x(), m.k() * p.y())
}

/// Inverse of [`squeeze`]: `(x, y) -> (x, y / k)`.
pub fn unsqueeze(m: &Model, p: Point) -> Point {
    Point::raw(p.x(), p.y() / m.k())
}

/// Classical half-plane distance (the `k = 1` metric), independent of
/// any model value.
///
/// Uses the semicircle through the two points and the bar-free
/// classical ruler. Branch routing between the vertical and circular
/// cases uses the default tolerance policy, since no model travels
/// with the arguments.
pub fn classical_distance(p: Point, q: Point) -> f64 {
    let (x1, y1) = (p.x(), p.y());
    let (x2, y2) = (q.x(), q.y());
    if (x1 - x2).abs() <= DEFAULT_EPS_ABS + DEFAULT_EPS_REL * x1.abs().max(x2.abs()) {
        return (y2 / y1).ln().abs();
    }
    let c = ((x1 - x2) * (x1 + x2) + (y1 - y2) * (y1 + y2)) / (2.0 * (x1 - x2));
    let r = f64::hypot(x1 - c, y1);
    let (left, right) = (c - r, c + r);
    // x - c + r, switching to y^2 / (right - x) on the left half where
    // the direct subtraction loses the offset from the endpoint.
    let u = |x: f64, y: f64| {
        if x - left >= right - x {
            x - left
        } else {
            y * y / (right - x)
        }
    };
    ((u(x1, y1) * y2) / (u(x2, y2) * y1)).ln().abs()
}

/// Distance between two points of the model.
///
/// Evaluates the closed form on the line the two points span; the
/// branch (vertical vs. elliptic) is whatever
/// [`geodesic::line_through`] decides, so near-vertical pairs take the
/// vertical formula here exactly when they construct a vertical line.
/// Points that coincide within tolerance are at distance zero.
pub fn distance(m: &Model, p: Point, q: Point) -> f64 {
    match geodesic::line_through(m, p, q) {
        Err(_) => 0.0,
        Ok(HLine::Vertical { .. }) => (q.y() / p.y()).ln().abs(),
        Ok(HLine::Elliptic { left, right }) => {
            let u1 = x_offset(left, right, m.k(), p);
            let u2 = x_offset(left, right, m.k(), q);
            ((u1 * q.y()) / (u2 * p.y())).ln().abs()
        }
    }
}

/// Controls for adaptive Simpson quadrature: target absolute error on
/// the whole integral and a bisection depth limit.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureSpec {
    tol: f64,
    max_depth: u32,
}

impl QuadratureSpec {
    /// Tolerance `tol` with the default depth limit of 40.
    pub fn new(tol: f64) -> Result<QuadratureSpec> {
        QuadratureSpec::with_max_depth(tol, 40)
    }

    pub fn with_max_depth(tol: f64, max_depth: u32) -> Result<QuadratureSpec> {
        if !tol.is_finite() {
            return Err(Error::NonFinite { name: "tol", value: tol });
        }
        if tol <= 0.0 {
            return Err(Error::NonPositiveParameter { name: "tol", value: tol });
        }
        if max_depth == 0 {
            return Err(Error::NonPositiveParameter { name: "max_depth", value: 0.0 });
        }
        Ok(QuadratureSpec { tol, max_depth })
    }

    pub fn tol(&self) -> f64 {
        self.tol
    }

    pub fn max_depth(&self) -> u32 {
        self.max_depth
    }
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        QuadratureSpec { tol: 1e-10, max_depth: 40 }
    }
}

fn simpson(h: f64, fa: f64, fm: f64, fb: f64) -> f64 {
    h / 6.0 * (fa + 4.0 * fm + fb)
}

#[allow(clippy::too_many_arguments)]
fn simpson_recurse<F: Fn(f64) -> f64>(
    f: &F,
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
    tol: f64,
    depth: u32,
    spec: &QuadratureSpec,
) -> Result<f64> {
    let mid = 0.5 * (a + b);
    let lm = 0.5 * (a + mid);
    let rm = 0.5 * (mid + b);
    let flm = f(lm);
    let frm = f(rm);
    let left = simpson(mid - a, fa, flm, fm);
    let right = simpson(b - mid, fm, frm, fb);
    let delta = left + right - whole;
    if delta.abs() <= 15.0 * tol {
        // Richardson correction: the halved estimate plus delta/15 is
        // one order higher than plain Simpson.
        return Ok(left + right + delta / 15.0);
    }
    if depth == 0 {
        return Err(Error::QuadratureFailure {
            tol: spec.tol,
            max_depth: spec.max_depth,
        });
    }
    let l = simpson_recurse(f, a, mid, fa, flm, fm, left, 0.5 * tol, depth - 1, spec)?;
    let r = simpson_recurse(f, mid, b, fm, frm, fb, right, 0.5 * tol, depth - 1, spec)?;
    Ok(l + r)
}

/// Adaptive Simpson integration of `f` over `[a, b]`, `a <= b`.
///
/// Errors with [`Error::QuadratureFailure`] when the local error
/// estimate still exceeds the budget at the depth limit.
pub fn adaptive_simpson<F: Fn(f64) -> f64>(
    f: F,
    a: f64,
    b: f64,
    spec: &QuadratureSpec,
) -> Result<f64> {
    if !a.is_finite() {
        return Err(Error::NonFinite { name: "a", value: a });
    }
    if !b.is_finite() {
        return Err(Error::NonFinite { name: "b", value: b });
    }
    if a > b {
        return Err(Error::InvalidInterval { t0: a, t1: b });
    }
    if a == b {
        return Ok(0.0);
    }
    let fa = f(a);
    let fb = f(b);
    let mid = 0.5 * (a + b);
    let fm = f(mid);
    let whole = simpson(b - a, fa, fm, fb);
    simpson_recurse(&f, a, b, fa, fm, fb, whole, spec.tol, spec.max_depth, spec)
}

/// Arc length of a line between ruler coordinates `t0 <= t1`, by
/// numerical quadrature of the length element along the ruler
/// parametrization.
///
/// In exact arithmetic this equals `t1 - t0` (the ruler is unit-speed)
/// and therefore also the distance between the two parametrized
/// endpoints; the point of the oracle is that the quadrature arrives
/// there without using either fact. The squeeze factor and the line's
/// semi-axis participate in the integrand and cancel only numerically.
pub fn arc_length_oracle(
    m: &Model,
    line: &HLine,
    t0: f64,
    t1: f64,
    spec: &QuadratureSpec,
) -> Result<f64> {
    if !t0.is_finite() {
        return Err(Error::NonFinite { name: "t0", value: t0 });
    }
    if !t1.is_finite() {
        return Err(Error::NonFinite { name: "t1", value: t1 });
    }
    if t0 > t1 {
        return Err(Error::InvalidInterval { t0, t1 });
    }
    let k = m.k();
    match *line {
        HLine::Vertical { .. } => {
            // Parametrized as (p, e^t / k): dx = 0 and dy/y = dt, so the
            // element reduces to dt.
            let integrand = |t: f64| {
                let y = t.exp() / k;
                let dy_dt = y;
                (k * dy_dt) / (k * y)
            };
            adaptive_simpson(integrand, t0, t1, spec)
        }
        HLine::Elliptic { left, right } => {
            let a = 0.5 * (right - left);
            // x(t) = c + a tanh t, y(t) = a / (k cosh t). Each factor is
            // divided by cosh once at a time so intermediates stay finite
            // out to |t| near 700.
            let integrand = move |t: f64| {
                let (s, c) = (t.sinh(), t.cosh());
                let dx_dt = (a / c) / c;
                let dy_dt = -((a / c) * (s / c)) / k;
                let y = a / (k * c);
                f64::hypot(dx_dt, k * dy_dt) / (k * y)
            };
            adaptive_simpson(integrand, t0, t1, spec)
        }
    }
}
