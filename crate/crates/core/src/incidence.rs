//! Intersections, sides, parallels, and ideal endpoints.
//!
//! Two distinct lines of a model meet in at most one point. For a pair
//! of elliptic lines the difference of their defining quadratics is
//! linear in `x`, so any common point lies on a single vertical
//! "radical" line; intersecting that with either curve leaves at most
//! one point with `y > 0`. A corollary used throughout this module: two
//! distinct elliptic lines are tangent (as full curves) only where the
//! radical line touches them, which is at `y = 0`, so tangency in the
//! model always announces itself as a shared ideal endpoint and never
//! as an interior touch point.
//!
//! Parallelism is asymptotic: distinct lines are parallel when they
//! share an ideal endpoint, with all vertical lines sharing the point
//! at infinity. Parallel lines never meet in the model, but disjoint
//! lines need not be parallel: a line nested inside another shares
//! neither endpoint. Through any point off a line there are exactly
//! two parallels to it, one per ideal endpoint, and
//! [`parallels_through`] constructs them.

use crate::geodesic::{contains, elliptic_residual, x_offset};
use crate::model::{Error, HLine, IdealEndpoint, Model, Point, Result, Segment};

/// Which side of a line a point lies on.
///
/// `Side1` is the positive side of the line's defining form: `x > p`
/// for a vertical line, outside the ellipse for an elliptic one.
/// `Side2` is the negative side. The labels partition the plane minus
/// the line; [`side_of`] assigns `OnLine` exactly when
/// [`contains`](crate::geodesic::contains) accepts the point.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SideLabel {
    Side1,
    Side2,
    OnLine,
}

/// The two ideal endpoints of a line, left to right, with a vertical
/// line's upper end reported as [`IdealEndpoint::Infinity`].
pub fn ideal_endpoints(line: &HLine) -> (IdealEndpoint, IdealEndpoint) {
    match *line {
        HLine::Vertical { p } => (IdealEndpoint::OnAxis { x: p }, IdealEndpoint::Infinity),
        HLine::Elliptic { left, right } => {
            (IdealEndpoint::OnAxis { x: left }, IdealEndpoint::OnAxis { x: right })
        }
    }
}

fn vertical_elliptic(m: &Model, p: f64, left: f64, right: f64) -> Option<Point> {
    // A vertical line through an ideal endpoint is tangent there; the
    // touch point is on the axis, outside the model.
    if m.approx_eq(p, left) || m.approx_eq(p, right) || p <= left || p >= right {
        return None;
    }
    let y = ((p - left) * (right - p)).sqrt() / m.k();
    Some(Point::raw(p, y))
}

/// Whether two lines coincide within the model's tolerance.
fn same_line(m: &Model, l1: &HLine, l2: &HLine) -> bool {
    match (*l1, *l2) {
        (HLine::Vertical { p: p1 }, HLine::Vertical { p: p2 }) => m.approx_eq(p1, p2),
        (HLine::Elliptic { left: l1, right: r1 }, HLine::Elliptic { left: l2, right: r2 }) => {
            m.approx_eq(l1, l2) && m.approx_eq(r1, r2)
        }
        _ => false,
    }
}

/// The common point of two lines, `None` when they are disjoint or
/// tangent at the boundary, [`Error::SameLine`] when the lines
/// coincide within tolerance.
pub fn intersect(m: &Model, l1: &HLine, l2: &HLine) -> Result<Option<Point>> {
    if same_line(m, l1, l2) {
        return Err(Error::SameLine);
    }
    match (*l1, *l2) {
        (HLine::Vertical { .. }, HLine::Vertical { .. }) => Ok(None),
        (HLine::Vertical { p }, HLine::Elliptic { left, right })
        | (HLine::Elliptic { left, right }, HLine::Vertical { p }) => {
            Ok(vertical_elliptic(m, p, left, right))
        }
        (HLine::Elliptic { left: l1, right: r1 }, HLine::Elliptic { left: l2, right: r2 }) => {
            // A shared ideal endpoint means boundary tangency, and by
            // the radical-line argument there is no interior meeting.
            if m.approx_eq(l1, l2)
                || m.approx_eq(r1, r2)
                || m.approx_eq(l1, r2)
                || m.approx_eq(r1, l2)
            {
                return Ok(None);
            }
            let (s1, s2) = (l1 + r1, l2 + r2);
            // Concentric distinct lines are nested.
            if m.approx_eq(0.5 * s1, 0.5 * s2) {
                return Ok(None);
            }
            // Radical line: subtracting the defining quadratics leaves
            // x (s1 - s2) = l1 r1 - l2 r2.
            let x = (l1 * r1 - l2 * r2) / (s1 - s2);
            let w = (x - l1) * (r1 - x);
            if w <= 0.0 {
                return Ok(None);
            }
            Ok(Some(Point::raw(x, w.sqrt() / m.k())))
        }
    }
}

/// Whether one endpoint matches another, on-axis positions compared
/// with the model's tolerance and infinity matching only itself.
fn endpoints_match(m: &Model, a: IdealEndpoint, b: IdealEndpoint) -> bool {
    match (a, b) {
        (IdealEndpoint::Infinity, IdealEndpoint::Infinity) => true,
        (IdealEndpoint::OnAxis { x: xa }, IdealEndpoint::OnAxis { x: xb }) => {
            m.approx_eq(xa, xb)
        }
        _ => false,
    }
}

/// Whether two distinct lines are parallel, meaning they share an
/// ideal endpoint. All vertical lines are mutually parallel through
/// the point at infinity; a vertical and an elliptic line are
/// parallel exactly when the vertical stands on one of the elliptic
/// endpoints. Parallel lines never meet in the model, but the
/// converse fails: nested or well-separated lines are disjoint
/// without being parallel. Errors with [`Error::SameLine`] when the
/// lines coincide within tolerance.
pub fn are_parallel(m: &Model, l1: &HLine, l2: &HLine) -> Result<bool> {
    if same_line(m, l1, l2) {
        return Err(Error::SameLine);
    }
    let (a1, a2) = ideal_endpoints(l1);
    let (b1, b2) = ideal_endpoints(l2);
    Ok([b1, b2]
        .into_iter()
        .any(|b| endpoints_match(m, a1, b) || endpoints_match(m, a2, b)))
}

fn parallel_with_endpoint(m: &Model, e: IdealEndpoint, p: Point) -> Result<HLine> {
    match e {
        IdealEndpoint::Infinity => HLine::vertical(p.x()),
        IdealEndpoint::OnAxis { x: e } => {
            if m.approx_eq(p.x(), e) {
                return HLine::vertical(e);
            }
            let dx = p.x() - e;
            let ky = m.k() * p.y();
            let a = (dx * dx + ky * ky) / (2.0 * dx.abs());
            if dx > 0.0 {
                HLine::from_endpoints(e, e + 2.0 * a)
            } else {
                HLine::from_endpoints(e - 2.0 * a, e)
            }
        }
    }
}

/// The two limiting parallels to `line` through a point `p` off it,
/// ordered like [`ideal_endpoints`]: the first shares `line`'s left
/// (or on-axis) endpoint, the second its right (or infinite) one.
///
/// Each result passes through `p` and shares exactly one ideal
/// endpoint with `line`; the shared endpoint is stored exactly, so
/// tangency against `line` is decided without cancellation. Errors
/// with [`Error::PointOnLine`] when `p` lies on `line`.
pub fn parallels_through(m: &Model, line: &HLine, p: Point) -> Result<[HLine; 2]> {
    if contains(m, line, p) {
        return Err(Error::PointOnLine { x: p.x(), y: p.y() });
    }
    let (e1, e2) = ideal_endpoints(line);
    Ok([
        parallel_with_endpoint(m, e1, p)?,
        parallel_with_endpoint(m, e2, p)?,
    ])
}

/// The side of `line` on which `p` lies.
pub fn side_of(m: &Model, line: &HLine, p: Point) -> SideLabel {
    if contains(m, line, p) {
        return SideLabel::OnLine;
    }
    let w = match *line {
        HLine::Vertical { p: foot } => p.x() - foot,
        HLine::Elliptic { left, right } => elliptic_residual(left, right, m.k(), p),
    };
    if w > 0.0 {
        SideLabel::Side1
    } else {
        SideLabel::Side2
    }
}

/// Whether a segment meets a line, endpoints included (up to the
/// model's tolerance in the ruler coordinate).
pub fn segment_crosses(m: &Model, seg: &Segment, line: &HLine) -> Result<bool> {
    match intersect(m, seg.line(), line) {
        Err(Error::SameLine) => Ok(true),
        Err(e) => Err(e),
        Ok(None) => Ok(false),
        Ok(Some(x)) => {
            let t = match *seg.line() {
                HLine::Vertical { .. } => (m.k() * x.y()).ln(),
                HLine::Elliptic { left, right } => {
                    (x_offset(left, right, m.k(), x) / (m.k() * x.y())).ln()
                }
            };
            Ok((t >= seg.t0() || m.approx_eq(t, seg.t0()))
                && (t <= seg.t1() || m.approx_eq(t, seg.t1())))
        }
    }
}
