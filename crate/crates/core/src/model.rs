//! Core domain types: the model parameters, points, h-lines, ideal
//! endpoints, and segments.
//!
//! A model is the upper half-plane `{(x, y) : y > 0}` equipped with a
//! squeeze factor `k > 0`. Its lines come in two shapes: vertical rays
//! `x = p`, and upper halves of axis-aligned ellipses
//! `(x - c)^2 + k^2 y^2 = a^2`. At `k = 1` the ellipses are circles and
//! the model is the classical hyperbolic half-plane.
//!
//! Every tolerance-sensitive comparison in this crate goes through
//! [`Model::approx_eq`], which combines an absolute and a relative
//! term. The comparison is reflexive and symmetric but not transitive;
//! callers must not chain it.

use thiserror::Error;

/// Absolute tolerance used when a model is built without explicit
/// tolerances, and by [`crate::metric::classical_distance`], which has
/// no model argument.
pub const DEFAULT_EPS_ABS: f64 = 1e-9;

/// Relative tolerance counterpart of [`DEFAULT_EPS_ABS`].
pub const DEFAULT_EPS_REL: f64 = 1e-12;

/// Errors shared by all modules in this crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A parameter that must be strictly positive was zero or negative,
    /// or too small to survive at the scale of its sibling parameters.
    #[error("parameter `{name}` must be positive, got {value}")]
    NonPositiveParameter { name: &'static str, value: f64 },

    /// An argument was NaN or infinite.
    #[error("argument `{name}` must be finite, got {value}")]
    NonFinite { name: &'static str, value: f64 },

    /// A point had `y <= 0`.
    #[error("point ({x}, {y}) is not in the upper half-plane (y must be > 0)")]
    NotInUpperHalfPlane { x: f64, y: f64 },

    /// Two points that had to be distinct coincide within tolerance.
    #[error("points coincide within tolerance near ({x}, {y})")]
    CoincidentPoints { x: f64, y: f64 },

    /// A point that had to lie on a line does not.
    #[error("point ({x}, {y}) does not lie on the line")]
    PointNotOnLine { x: f64, y: f64 },

    /// The middle argument of a betweenness query is off the line
    /// spanned by the outer two.
    #[error("point ({x}, {y}) is not collinear with the other two")]
    NotCollinear { x: f64, y: f64 },

    /// Two lines that had to be distinct are equal within tolerance.
    #[error("the two lines are equal within tolerance")]
    SameLine,

    /// A point that had to avoid a line lies on it.
    #[error("point ({x}, {y}) lies on the line")]
    PointOnLine { x: f64, y: f64 },

    /// Two rays passed to an angle measure are based at different points.
    #[error("rays are based at different points")]
    BaseMismatch,

    /// Triangle vertices are pairwise coincident or collinear.
    #[error("triangle vertices are coincident or collinear")]
    DegenerateTriangle,

    /// Adaptive quadrature hit its depth limit before reaching the
    /// requested tolerance.
    #[error("quadrature did not reach tolerance {tol} within depth {max_depth}")]
    QuadratureFailure { tol: f64, max_depth: u32 },

    /// An interval `[t0, t1]` had `t0 > t1`.
    #[error("invalid interval: t0 = {t0} exceeds t1 = {t1}")]
    InvalidInterval { t0: f64, t1: f64 },

    /// A configuration value (suite setup, spec string, viewport) was
    /// rejected before any geometry ran.
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    /// Writing a verification report failed.
    #[error("report io error: {detail}")]
    ReportIo { detail: String },
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

fn require_finite(name: &'static str, value: f64) -> Result<()> {
    if value.is_finite() {
        Ok(())
    } else {
        Err(Error::NonFinite { name, value })
    }
}

fn require_positive(name: &'static str, value: f64) -> Result<()> {
    require_finite(name, value)?;
    if value > 0.0 {
        Ok(())
    } else {
        Err(Error::NonPositiveParameter { name, value })
    }
}

/// Model parameters: squeeze factor and tolerance policy.
///
/// The squeeze factor `k` fixes the aspect ratio of every elliptic line
/// in the model. Tolerances are carried here so that all operations on
/// the same model agree on what "equal" means.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Model {
    k: f64,
    eps_abs: f64,
    eps_rel: f64,
}

impl Model {
    /// Builds a model with squeeze factor `k` and the default
    /// tolerances [`DEFAULT_EPS_ABS`] and [`DEFAULT_EPS_REL`].
    pub fn new(k: f64) -> Result<Model> {
        Model::with_tolerances(k, DEFAULT_EPS_ABS, DEFAULT_EPS_REL)
    }

    /// Builds a model with an explicit tolerance policy.
    pub fn with_tolerances(k: f64, eps_abs: f64, eps_rel: f64) -> Result<Model> {
        require_positive("k", k)?;
        require_positive("eps_abs", eps_abs)?;
        require_positive("eps_rel", eps_rel)?;
        Ok(Model { k, eps_abs, eps_rel })
    }

    /// Squeeze factor of this model.
    pub fn k(&self) -> f64 {
        self.k
    }

    /// Absolute tolerance term.
    pub fn eps_abs(&self) -> f64 {
        self.eps_abs
    }

    /// Relative tolerance term.
    pub fn eps_rel(&self) -> f64 {
        self.eps_rel
    }

    /// Tolerance-based scalar equality:
    /// `|u - v| <= eps_abs + eps_rel * max(|u|, |v|)`.
    ///
    /// Symmetric and reflexive (for finite arguments), not transitive.
    pub fn approx_eq(&self, u: f64, v: f64) -> bool {
        (u - v).abs() <= self.eps_abs + self.eps_rel * u.abs().max(v.abs())
    }

    /// Componentwise [`Model::approx_eq`] on two points.
    pub fn points_coincide(&self, p: Point, q: Point) -> bool {
        self.approx_eq(p.x, q.x) && self.approx_eq(p.y, q.y)
    }
}

/// A point of the upper half-plane. The invariant `y > 0` is exact,
/// not tolerance-based: `y = 1e-300` is a point, `y = 0` is not.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Point {
    x: f64,
    y: f64,
}

impl Point {
    /// Validates coordinates: both finite, `y > 0`.
    pub fn new(x: f64, y: f64) -> Result<Point> {
        require_finite("x", x)?;
        require_finite("y", y)?;
        if y > 0.0 {
            Ok(Point { x, y })
        } else {
            Err(Error::NotInUpperHalfPlane { x, y })
        }
    }

    /// Constructor for internal call sites whose arguments are already
    /// known to satisfy the invariant.
    pub(crate) fn raw(x: f64, y: f64) -> Point {
        debug_assert!(x.is_finite() && y > 0.0, "invalid raw point ({x}, {y})");
        Point { x, y }
    }

    pub fn x(&self) -> f64 {
        self.x
    }

    pub fn y(&self) -> f64 {
        self.y
    }
}

impl std::fmt::Display for Point {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// An h-line of the model: the geodesic point sets.
///
/// `Vertical { p }` is the ray `{(p, y) : y > 0}`. `Elliptic` is the
/// upper half of `(x - c)^2 + k^2 y^2 = a^2`, stored by its two ideal
/// endpoints `left = c - a` and `right = c + a` on the x-axis. The
/// endpoint form keeps endpoint arithmetic exact where the `(c, a)`
/// pair would lose the difference `c - a` to rounding once `a` is
/// large; `c` and `a` are recovered through [`HLine::elliptic_params`].
///
/// Construct through [`HLine::vertical`], [`HLine::elliptic`], or
/// [`HLine::from_endpoints`]; literal variant construction skips
/// validation and must uphold finiteness and `left < right` itself.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum HLine {
    /// The vertical ray `x = p`.
    Vertical { p: f64 },
    /// The semi-ellipse with ideal endpoints `left < right`.
    Elliptic { left: f64, right: f64 },
}

impl HLine {
    /// The vertical line `x = p`.
    pub fn vertical(p: f64) -> Result<HLine> {
        require_finite("p", p)?;
        Ok(HLine::Vertical { p })
    }

    /// The elliptic line with center `c` and x-semi-axis `a`.
    ///
    /// Rejects `a` so small relative to `|c|` that the endpoints
    /// `c - a` and `c + a` collapse to one float.
    pub fn elliptic(c: f64, a: f64) -> Result<HLine> {
        require_finite("c", c)?;
        require_positive("a", a)?;
        let left = c - a;
        let right = c + a;
        if left < right && left.is_finite() && right.is_finite() {
            Ok(HLine::Elliptic { left, right })
        } else {
            Err(Error::NonPositiveParameter { name: "a", value: a })
        }
    }

    /// The elliptic line with the given ideal endpoints.
    pub fn from_endpoints(left: f64, right: f64) -> Result<HLine> {
        require_finite("left", left)?;
        require_finite("right", right)?;
        if left < right {
            Ok(HLine::Elliptic { left, right })
        } else {
            Err(Error::InvalidInterval { t0: left, t1: right })
        }
    }

    /// `(c, a)` of an elliptic line, `None` for a vertical one.
    pub fn elliptic_params(&self) -> Option<(f64, f64)> {
        match *self {
            HLine::Vertical { .. } => None,
            HLine::Elliptic { left, right } => {
                Some((0.5 * left + 0.5 * right, 0.5 * (right - left)))
            }
        }
    }

    pub fn is_vertical(&self) -> bool {
        matches!(self, HLine::Vertical { .. })
    }
}

/// A boundary point at infinity of an h-line: either a point `(x, 0)`
/// of the x-axis or the single point at vertical infinity shared by
/// all vertical lines.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum IdealEndpoint {
    OnAxis { x: f64 },
    Infinity,
}

impl std::fmt::Display for IdealEndpoint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            IdealEndpoint::OnAxis { x } => write!(f, "{x}"),
            IdealEndpoint::Infinity => write!(f, "inf"),
        }
    }
}

/// A closed geodesic segment: a carrier line and a ruler-coordinate
/// interval `[t0, t1]` with `t0 <= t1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Segment {
    line: HLine,
    t0: f64,
    t1: f64,
}

impl Segment {
    pub fn new(line: HLine, t0: f64, t1: f64) -> Result<Segment> {
        require_finite("t0", t0)?;
        require_finite("t1", t1)?;
        if t0 <= t1 {
            Ok(Segment { line, t0, t1 })
        } else {
            Err(Error::InvalidInterval { t0, t1 })
        }
    }

    pub fn line(&self) -> &HLine {
        &self.line
    }

    pub fn t0(&self) -> f64 {
        self.t0
    }

    pub fn t1(&self) -> f64 {
        self.t1
    }
}
