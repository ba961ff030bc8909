//! Geodesic construction and the ruler coordinate.
//!
//! Through any two points with `x1 != x2` there is exactly one
//! elliptic line: eliminating `a` from the two on-line equations gives
//!
//! ```text
//! c = (x1^2 - x2^2 + k^2 (y1^2 - y2^2)) / (2 (x1 - x2))
//! a = sqrt((x1 - c)^2 + k^2 y1^2)
//! ```
//!
//! and two points sharing an abscissa lie on a vertical line. Whether
//! two abscissas "share" is decided by [`crate::model::Model::approx_eq`],
//! so near-vertical pairs route to the vertical branch rather than to
//! an astronomically wide ellipse.
//!
//! Every line carries a ruler: a bijection from the line to the reals
//! whose coordinate differences are exactly the hyperbolic distance
//! (the ruler is unit-speed). On a vertical line `t = ln(k y)`; on an
//! elliptic line
//!
//! ```text
//! t = ln((x - c + a) / (k y)),
//! ```
//!
//! inverted by `x = c + a tanh t`, `y = a / (k cosh t)`. The ruler has
//! no absolute-value bars: dropping them is what makes it a bijection
//! rather than a fold. `t` increases with `x` on elliptic lines and
//! with `y` on vertical ones.

use crate::model::{Error, HLine, Model, Point, Result, Segment};

/// `x - c + a` for a point on an elliptic line, computed stably.
///
/// `x - c + a = x - left` exactly, but near the left endpoint the
/// subtraction absorbs the information carried by `y`. On the curve
/// `(x - left)(x - right) = -k^2 y^2`, so the left half uses
/// `k^2 y^2 / (right - x)`, whose factors stay well away from zero.
pub(crate) fn x_offset(left: f64, right: f64, k: f64, p: Point) -> f64 {
    let from_left = p.x() - left;
    let from_right = right - p.x();
    if from_left >= from_right {
        from_left
    } else {
        let ky = k * p.y();
        ky * ky / from_right
    }
}

/// Signed residual of the defining equation of an elliptic line at a
/// point, `(x - c)^2 + k^2 y^2 - a^2`, in the cancellation-free
/// endpoint form `(x - left)(x - right) + k^2 y^2`. Positive outside
/// the ellipse, negative inside.
pub(crate) fn elliptic_residual(left: f64, right: f64, k: f64, p: Point) -> f64 {
    let ky = k * p.y();
    (p.x() - left) * (p.x() - right) + ky * ky
}

/// Tolerance envelope for deciding that the residual at `p` is zero:
/// `eps_abs + eps_rel * max((x - c)^2 + k^2 y^2, a^2)`, the same scale
/// `approx_eq` would use on the two sides of the defining equation.
pub(crate) fn residual_tolerance(m: &Model, left: f64, right: f64, p: Point) -> f64 {
    let half = 0.5 * (right - left);
    let mid = 0.5 * left + 0.5 * right;
    let dx = p.x() - mid;
    let ky = m.k() * p.y();
    let quad = dx * dx + ky * ky;
    m.eps_abs() + m.eps_rel() * quad.max(half * half)
}

/// The unique h-line through two distinct points.
///
/// Returns the vertical line when the abscissas agree within
/// tolerance, the elliptic line otherwise. Errors with
/// [`Error::CoincidentPoints`] when the points agree in both
/// coordinates within tolerance.
pub fn line_through(m: &Model, p1: Point, p2: Point) -> Result<HLine> {
    if m.points_coincide(p1, p2) {
        return Err(Error::CoincidentPoints { x: p1.x(), y: p1.y() });
    }
    if m.approx_eq(p1.x(), p2.x()) {
        return Ok(HLine::Vertical { p: p1.x() });
    }
    let (x1, y1) = (p1.x(), p1.y());
    let (x2, y2) = (p2.x(), p2.y());
    let k2 = m.k() * m.k();
    // Factored numerator: products of exact-ish differences instead of
    // differences of squares.
    let c = ((x1 - x2) * (x1 + x2) + k2 * ((y1 - y2) * (y1 + y2))) / (2.0 * (x1 - x2));
    let a = f64::hypot(x1 - c, m.k() * y1);
    let line = HLine::Elliptic { left: c - a, right: c + a };
    debug_assert!(
        {
            let HLine::Elliptic { left, right } = line else { unreachable!() };
            elliptic_residual(left, right, m.k(), p1).abs()
                <= 1e-9 * (a * a)
                && elliptic_residual(left, right, m.k(), p2).abs() <= 1e-9 * (a * a)
        },
        "constructed line misses its defining points"
    );
    Ok(line)
}

/// Whether a point lies on a line, within the model tolerance.
pub fn contains(m: &Model, line: &HLine, p: Point) -> bool {
    match *line {
        HLine::Vertical { p: x0 } => m.approx_eq(p.x(), x0),
        HLine::Elliptic { left, right } => {
            elliptic_residual(left, right, m.k(), p).abs()
                <= residual_tolerance(m, left, right, p)
        }
    }
}

/// Ruler coordinate of a point on a line.
///
/// Errors with [`Error::PointNotOnLine`] when `contains` fails.
pub fn ruler(m: &Model, line: &HLine, p: Point) -> Result<f64> {
    if !contains(m, line, p) {
        return Err(Error::PointNotOnLine { x: p.x(), y: p.y() });
    }
    match *line {
        HLine::Vertical { .. } => Ok((m.k() * p.y()).ln()),
        HLine::Elliptic { left, right } => {
            let u = x_offset(left, right, m.k(), p);
            Ok((u / (m.k() * p.y())).ln())
        }
    }
}

/// The point of a line at ruler coordinate `t`.
///
/// Inverts [`ruler`]: on a vertical line `(p, e^t / k)`; on an
/// elliptic line `(c + a tanh t, a / (k cosh t))`, evaluated through
/// the logistic form of `tanh` so the returned `x` approaches the
/// ideal endpoints without cancellation. Errors with
/// [`Error::NonFinite`] for NaN or infinite `t`. For finite `t` so
/// large that `y` underflows to zero (|t| beyond roughly 700) the
/// point is not representable and the constructor error surfaces.
pub fn ruler_inverse(m: &Model, line: &HLine, t: f64) -> Result<Point> {
    if !t.is_finite() {
        return Err(Error::NonFinite { name: "t", value: t });
    }
    match *line {
        HLine::Vertical { p } => Point::new(p, t.exp() / m.k()),
        HLine::Elliptic { left, right } => {
            let a = 0.5 * (right - left);
            let y = a / (m.k() * t.cosh());
            // 2a * sigma(2t) = a (tanh t + 1); the sigmoid form keeps the
            // small offset from the nearer endpoint instead of rounding
            // x to `c + a.
            let x = if t <= 0.0 {
                left + 2.0 * a / (1.0 + (-2.0 * t).exp())
            } else {
                right - 2.0 * a / (1.0 + (2.0 * t).exp())
            };
            Point::new(x, y)
        }
    }
}

/// Whether `b` lies strictly between `a` and `c` on their common line.
///
/// All three points must be pairwise distinct and `b` must lie on the
/// line through `a` and `c`. Strictness is tolerance-adjusted: a `b`
/// whose ruler coordinate matches an endpoint within `approx_eq` is
/// not between.
pub fn between(m: &Model, a: Point, b: Point, c: Point) -> Result<bool> {
    for (p, q) in [(a, b), (a, c), (b, c)] {
        if m.points_coincide(p, q) {
            return Err(Error::CoincidentPoints { x: p.x(), y: p.y() });
        }
    }
    let line = line_through(m, a, c)?;
    if !contains(m, &line, b) {
        return Err(Error::NotCollinear { x: b.x(), y: b.y() });
    }
    let ta = ruler(m, &line, a)?;
    let tb = ruler(m, &line, b)?;
    let tc = ruler(m, &line, c)?;
    if m.approx_eq(tb, ta) || m.approx_eq(tb, tc) {
        return Ok(false);
    }
    Ok(ta.min(tc) < tb && tb < ta.max(tc))
}

/// The closed segment with endpoints `a` and `b`.
pub fn segment_between(m: &Model, a: Point, b: Point) -> Result<Segment> {
    let line = line_through(m, a, b)?;
    let ta = ruler(m, &line, a)?;
    let tb = ruler(m, &line, b)?;
    Segment::new(line, ta.min(tb), ta.max(tb))
}
