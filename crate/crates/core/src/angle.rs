//! Tangent rays and the two angle measures.
//!
//! A model carries two natural protractors. The Euclidean one reads
//! the angle between tangent directions as drawn on the page. The
//! pullback one first transports both directions through the squeeze
//! differential `(dx, dy) -> (dx, k dy)` and then reads the classical
//! angle; it is the measure that belongs to the distance geometry (the
//! hyperbolic law of cosines holds for it), because the squeeze map is
//! an isometry onto the classical model and the classical model is
//! conformal. At `k = 1` the two protractors agree; at `k != 1` their
//! disagreement on specific configurations is the visible footprint of
//! the squeeze.
//!
//! Tangent directions come from the ruler parametrization
//! `t -> (c + a tanh t, a / (k cosh t))`, whose velocity at a point
//! `(x, y)` is proportional to `(k^2 y, c - x)`; a vertical line's is
//! `(0, 1)`. Both measures return values in `[0, pi]`.

use crate::geodesic::{contains, line_through, ruler};
use crate::model::{Error, HLine, Model, Point, Result};

/// A unit tangent direction to a line at a base point, oriented along
/// the line toward one of its two ends.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TangentRay {
    base: Point,
    dir: [f64; 2],
}

impl TangentRay {
    pub fn base(&self) -> Point {
        self.base
    }

    /// Unit Euclidean direction `[dx, dy]`.
    pub fn dir(&self) -> [f64; 2] {
        self.dir
    }
}

/// The unit tangent to `line` at `at`, oriented toward the point
/// `toward` of the same line.
///
/// Both points must lie on the line ([`Error::PointNotOnLine`]) and
/// must not coincide within tolerance ([`Error::CoincidentPoints`]).
pub fn tangent_ray(m: &Model, line: &HLine, at: Point, toward: Point) -> Result<TangentRay> {
    let t_at = ruler(m, line, at)?;
    let t_toward = ruler(m, line, toward)?;
    if m.approx_eq(t_at, t_toward) {
        return Err(Error::CoincidentPoints { x: toward.x(), y: toward.y() });
    }
    let sign = if t_toward > t_at { 1.0 } else { -1.0 };
    let (dx, dy) = match *line {
        HLine::Vertical { .. } => (0.0, sign),
        HLine::Elliptic { left, right } => {
            let k = m.k();
            let c_minus_x = (0.5 * left + 0.5 * right) - at.x();
            let vx = sign * k * k * at.y();
            let vy = sign * c_minus_x;
            let n = f64::hypot(vx, vy);
            (vx / n, vy / n)
        }
    };
    Ok(TangentRay { base: at, dir: [dx, dy] })
}

fn angle_between(u: [f64; 2], v: [f64; 2]) -> f64 {
    let cross = u[0] * v[1] - u[1] * v[0];
    let dot = u[0] * v[0] + u[1] * v[1];
    cross.abs().atan2(dot)
}

/// The page angle between two rays at a common base point.
pub fn euclidean_angle(m: &Model, r1: &TangentRay, r2: &TangentRay) -> Result<f64> {
    if !m.points_coincide(r1.base, r2.base) {
        return Err(Error::BaseMismatch);
    }
    Ok(angle_between(r1.dir, r2.dir))
}

/// The angle between two rays after transport through the squeeze
/// differential: the measure for which the law of cosines holds.
pub fn pullback_angle(m: &Model, r1: &TangentRay, r2: &TangentRay) -> Result<f64> {
    if !m.points_coincide(r1.base, r2.base) {
        return Err(Error::BaseMismatch);
    }
    let k = m.k();
    let u = [r1.dir[0], k * r1.dir[1]];
    let v = [r2.dir[0], k * r2.dir[1]];
    Ok(angle_between(u, v))
}

/// Both readings of one angle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AngleMeasure {
    pub euclidean: f64,
    pub pullback: f64,
}

fn measure_at(m: &Model, v: Point, leg1: (&HLine, Point), leg2: (&HLine, Point)) -> Result<AngleMeasure> {
    let r1 = tangent_ray(m, leg1.0, v, leg1.1)?;
    let r2 = tangent_ray(m, leg2.0, v, leg2.1)?;
    Ok(AngleMeasure {
        euclidean: euclidean_angle(m, &r1, &r2)?,
        pullback: pullback_angle(m, &r1, &r2)?,
    })
}

/// Interior angles of the triangle `a b c`, in vertex order.
///
/// Errors with [`Error::DegenerateTriangle`] when two vertices
/// coincide or the three are collinear.
pub fn triangle_angles(m: &Model, a: Point, b: Point, c: Point) -> Result<[AngleMeasure; 3]> {
    let ab = line_through(m, a, b).map_err(|_| Error::DegenerateTriangle)?;
    if contains(m, &ab, c) {
        return Err(Error::DegenerateTriangle);
    }
    let bc = line_through(m, b, c).map_err(|_| Error::DegenerateTriangle)?;
    let ca = line_through(m, c, a).map_err(|_| Error::DegenerateTriangle)?;
    Ok([
        measure_at(m, a, (&ab, b), (&ca, c))?,
        measure_at(m, b, (&ab, a), (&bc, c))?,
        measure_at(m, c, (&bc, b), (&ca, a))?,
    ])
}
