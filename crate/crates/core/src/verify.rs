//! Seeded randomized verification suites.
//!
//! Each suite hunts for counterexamples to one family of geometric
//! claims: incidence (two points, one line), the metric axioms, the
//! ruler postulate, plane separation and Pasch, the two-parallels
//! theorem, and the oracle agreements between the distance closed
//! form, the classical route through the squeeze map, and numerical
//! arc length. Failures are data, never panics: every sample produces
//! a [`CheckRecord`] whose `inputs` field is sufficient to re-execute
//! the check in isolation, and a suite keeps going after a failure so
//! counterexamples can be harvested in bulk.
//!
//! Determinism is structural. Sample `i` of suite `s` under seed `q`
//! draws from its own generator, derived by mixing `(q, s, i)` into a
//! 256-bit seed; no draw depends on how many values earlier samples
//! consumed, so runs are reproducible record for record and the
//! report file is byte-identical across repeats. Wall time is kept
//! out of both the records and report equality for the same reason.
//!
//! One sample exercises every configured squeeze factor, so a suite
//! run with `samples = 1000` reports 1000 checks regardless of how
//! many `k` values it sweeps.

use crate::angle::triangle_angles;
use crate::geodesic::{contains, line_through, ruler, ruler_inverse, segment_between};
use crate::incidence::{
    are_parallel, ideal_endpoints, intersect, parallels_through, segment_crosses, side_of,
    SideLabel,
};
use crate::metric::{arc_length_oracle, classical_distance, distance, squeeze, QuadratureSpec};
use crate::model::{Error, HLine, IdealEndpoint, Model, Point, Result};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

/// The six suites, in their canonical reporting order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SuiteKind {
    Incidence,
    Metric,
    Ruler,
    PsaPasch,
    Parallel,
    Oracle,
}

impl SuiteKind {
    pub const ALL: [SuiteKind; 6] = [
        SuiteKind::Incidence,
        SuiteKind::Metric,
        SuiteKind::Ruler,
        SuiteKind::PsaPasch,
        SuiteKind::Parallel,
        SuiteKind::Oracle,
    ];

    /// The name used in reports and on the command line.
    pub fn name(self) -> &'static str {
        match self {
            SuiteKind::Incidence => "incidence",
            SuiteKind::Metric => "metric",
            SuiteKind::Ruler => "ruler",
            SuiteKind::PsaPasch => "psa_pasch",
            SuiteKind::Parallel => "parallel",
            SuiteKind::Oracle => "oracle",
        }
    }

    /// Stream label separating this suite's draws from every other
    /// suite's under the same seed.
    fn salt(self) -> u64 {
        match self {
            SuiteKind::Incidence => 0x10,
            SuiteKind::Metric => 0x20,
            SuiteKind::Ruler => 0x30,
            SuiteKind::PsaPasch => 0x40,
            SuiteKind::Parallel => 0x50,
            SuiteKind::Oracle => 0x60,
        }
    }
}

impl std::fmt::Display for SuiteKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for SuiteKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<SuiteKind> {
        SuiteKind::ALL
            .into_iter()
            .find(|kind| kind.name() == s)
            .ok_or_else(|| {
                Error::InvalidConfig(format!(
                    "unknown suite `{s}` (expected one of incidence, metric, ruler, \
                     psa_pasch, parallel, oracle)"
                ))
            })
    }
}

/// Configuration shared by all suites: the seed, the sample count, the
/// squeeze factors to sweep, and an optional report destination.
#[derive(Debug, Clone, PartialEq)]
pub struct SuiteConfig {
    seed: u64,
    samples: u64,
    k_values: Vec<f64>,
    report_path: Option<PathBuf>,
}

impl SuiteConfig {
    /// Validates `samples >= 1` and that every `k` is finite and
    /// positive.
    pub fn new(seed: u64, samples: u64, k_values: Vec<f64>) -> Result<SuiteConfig> {
        if samples == 0 {
            return Err(Error::InvalidConfig("samples must be at least 1".into()));
        }
        if k_values.is_empty() {
            return Err(Error::InvalidConfig("at least one k value is required".into()));
        }
        for &k in &k_values {
            if !k.is_finite() || k <= 0.0 {
                return Err(Error::InvalidConfig(format!(
                    "k values must be finite and positive, got {k}"
                )));
            }
        }
        Ok(SuiteConfig { seed, samples, k_values, report_path: None })
    }

    /// Also write the line-delimited report to `path` after a run.
    pub fn with_report_path(mut self, path: impl Into<PathBuf>) -> SuiteConfig {
        self.report_path = Some(path.into());
        self
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn samples(&self) -> u64 {
        self.samples
    }

    pub fn k_values(&self) -> &[f64] {
        &self.k_values
    }

    pub fn report_path(&self) -> Option<&Path> {
        self.report_path.as_deref()
    }

    fn models(&self) -> Vec<Model> {
        self.k_values.iter().map(|&k| Model::new(k).unwrap()).collect()
    }
}

/// Outcome of one check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
}

/// One line of a report: a single sample of a single suite, with the
/// raw inputs it drew, what was observed per squeeze factor, and what
/// the property demanded. Serialized field order is fixed.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckRecord {
    pub suite: String,
    pub sample_index: u64,
    pub status: CheckStatus,
    pub inputs: Value,
    pub observed: Value,
    pub expected: Value,
}

/// The result of one suite run: pass/fail tallies and the full record
/// list. `passed + failed` equals the configured sample count, and
/// [`SuiteReport::counterexamples`] is nonempty exactly when `failed`
/// is nonzero.
#[derive(Debug, Clone)]
pub struct SuiteReport {
    suite_name: String,
    passed: u64,
    failed: u64,
    records: Vec<CheckRecord>,
    wall_time: Duration,
}

impl SuiteReport {
    pub fn suite_name(&self) -> &str {
        &self.suite_name
    }

    pub fn passed(&self) -> u64 {
        self.passed
    }

    pub fn failed(&self) -> u64 {
        self.failed
    }

    /// Every record, one per sample, ordered by sample index.
    pub fn records(&self) -> &[CheckRecord] {
        &self.records
    }

    /// The failing records only.
    pub fn counterexamples(&self) -> impl Iterator<Item = &CheckRecord> {
        self.records.iter().filter(|r| r.status == CheckStatus::Fail)
    }

    pub fn wall_time(&self) -> Duration {
        self.wall_time
    }
}

/// Report equality disregards wall time: two runs of one
/// configuration compare equal however long they took.
impl PartialEq for SuiteReport {
    fn eq(&self, other: &Self) -> bool {
        self.suite_name == other.suite_name
            && self.passed == other.passed
            && self.failed == other.failed
            && self.records == other.records
    }
}

/// Serializes reports as line-delimited records, one JSON object per
/// check, in suite order then sample order.
pub fn write_records<W: Write>(mut w: W, reports: &[SuiteReport]) -> std::io::Result<()> {
    for report in reports {
        for record in &report.records {
            serde_json::to_writer(&mut w, record).map_err(std::io::Error::other)?;
            w.write_all(b"\n")?;
        }
    }
    Ok(())
}

/// Deterministic sampling streams and the raw draw primitives used by
/// the suites; public so external harnesses can reproduce the exact
/// sampling distributions.
pub mod sample {
    use super::ChaCha8Rng;
    use crate::model::{Model, Point};
    use rand_core::{Rng, SeedableRng};

    /// x window of the standard sampling cloud.
    pub const X_WINDOW: (f64, f64) = (-1e3, 1e3);

    /// y window of the standard sampling cloud (log-uniform).
    pub const Y_WINDOW: (f64, f64) = (1e-3, 1e3);

    /// Rate at which [`distinct_pair`] injects near-vertical pairs.
    pub const NEAR_VERTICAL_RATE: f64 = 0.01;

    fn splitmix64(state: &mut u64) -> u64 {
        *state = state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = *state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// An independent generator for one `(seed, label, index)` cell.
    ///
    /// Samples draw from their own substream, so sample `i` produces
    /// the same values whether the samples before it ran or not; this
    /// is what makes reports reproducible record by record.
    pub fn substream(seed: u64, label: u64, index: u64) -> ChaCha8Rng {
        let mut state = seed ^ label.wrapping_mul(0xA24B_AED4_963E_E407);
        state = state.wrapping_add(index.wrapping_mul(0x9E37_79B9_7F4A_7C15));
        let mut bytes = [0u8; 32];
        for chunk in bytes.chunks_exact_mut(8) {
            chunk.copy_from_slice(&splitmix64(&mut state).to_le_bytes());
        }
        ChaCha8Rng::from_seed(bytes)
    }

    /// Uniform in `[0, 1)` with 53 random bits.
    pub fn unit(rng: &mut impl Rng) -> f64 {
        (rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Uniform in `[lo, hi)`.
    pub fn uniform(rng: &mut impl Rng, lo: f64, hi: f64) -> f64 {
        lo + (hi - lo) * unit(rng)
    }

    /// Log-uniform in `[lo, hi)`, `0 < lo < hi`.
    pub fn log_uniform(rng: &mut impl Rng, lo: f64, hi: f64) -> f64 {
        uniform(rng, lo.ln(), hi.ln()).exp()
    }

    /// One point of the standard cloud: x uniform in [`X_WINDOW`], y
    /// log-uniform in [`Y_WINDOW`].
    pub fn point(rng: &mut impl Rng) -> Point {
        let x = uniform(rng, X_WINDOW.0, X_WINDOW.1);
        let y = log_uniform(rng, Y_WINDOW.0, Y_WINDOW.1);
        Point::new(x, y).unwrap()
    }

    /// A point from a compact box, for checks whose tolerances assume
    /// moderate side lengths.
    pub fn compact_point(rng: &mut impl Rng) -> Point {
        let x = uniform(rng, -8.0, 8.0);
        let y = log_uniform(rng, 0.135, 7.39);
        Point::new(x, y).unwrap()
    }

    /// Two model-distinct points. At [`NEAR_VERTICAL_RATE`] the second
    /// point is forced within `1e-6` horizontally of the first to
    /// stress the vertical-line routing.
    pub fn distinct_pair(rng: &mut impl Rng, m: &Model) -> (Point, Point) {
        loop {
            let p1 = point(rng);
            let p2 = if unit(rng) < NEAR_VERTICAL_RATE {
                let x = p1.x() + uniform(rng, -1e-6, 1e-6);
                Point::new(x, log_uniform(rng, Y_WINDOW.0, Y_WINDOW.1)).unwrap()
            } else {
                point(rng)
            };
            if !m.points_coincide(p1, p2) {
                return (p1, p2);
            }
        }
    }
}

fn num(x: f64) -> Value {
    serde_json::Number::from_f64(x)
        .map(Value::Number)
        .unwrap_or_else(|| Value::String(x.to_string()))
}

fn point_json(p: Point) -> Value {
    json!([num(p.x()), num(p.y())])
}

fn line_json(line: &HLine) -> Value {
    match *line {
        HLine::Vertical { p } => json!({ "type": "vertical", "p": num(p) }),
        HLine::Elliptic { left, right } => {
            json!({ "type": "elliptic", "left": num(left), "right": num(right) })
        }
    }
}

fn rel_close(a: f64, b: f64, rel: f64, floor: f64) -> bool {
    (a - b).abs() <= floor + rel * a.abs().max(b.abs())
}

struct Outcome {
    ok: bool,
    inputs: Value,
    observed: Value,
    expected: Value,
}

/// The h-line through `p` whose page tangent at `p` is parallel to
/// `dir`. Support for the walk-based checks; with `dir` read as the
/// velocity sign, increasing ruler t runs along positive `dir[0]`
/// (positive `dir[1]` for a vertical result).
pub(crate) fn line_with_tangent(m: &Model, p: Point, dir: [f64; 2]) -> Result<HLine> {
    if dir[0].abs() <= 1e-12 * dir[1].abs() {
        return HLine::vertical(p.x());
    }
    let k = m.k();
    let c = p.x() + dir[1] * (k * k * p.y()) / dir[0];
    let a = f64::hypot(p.x() - c, k * p.y());
    HLine::from_endpoints(c - a, c + a)
}

/// The point at signed ruler distance `step` from `p` along the line
/// with page tangent `dir` at `p`, walking the way `dir` points.
pub(crate) fn walk(m: &Model, p: Point, dir: [f64; 2], step: f64) -> Result<Point> {
    let line = line_with_tangent(m, p, dir)?;
    let forward = match line {
        HLine::Vertical { .. } => dir[1] >= 0.0,
        HLine::Elliptic { .. } => dir[0] >= 0.0,
    };
    let t = ruler(m, &line, p)?;
    ruler_inverse(m, &line, if forward { t + step } else { t - step })
}

/// Rotates a page direction by `angle` as measured by the pullback
/// protractor, returning a unit page direction.
pub(crate) fn rotate_pullback(m: &Model, dir: [f64; 2], angle: f64) -> [f64; 2] {
    let k = m.k();
    let (ux, uy) = (dir[0], k * dir[1]);
    let n = f64::hypot(ux, uy);
    let (ux, uy) = (ux / n, uy / n);
    let (s, c) = angle.sin_cos();
    let (vx, vy) = (c * ux - s * uy, s * ux + c * uy);
    let (wx, wy) = (vx, vy / k);
    let n2 = f64::hypot(wx, wy);
    [wx / n2, wy / n2]
}

fn incidence_check(rng: &mut ChaCha8Rng, models: &[Model]) -> Outcome {
    let (p1, p2) = sample::distinct_pair(rng, &models[0]);
    let mut rows = Vec::with_capacity(models.len());
    let mut ok = true;
    for m in models {
        let row = match line_through(m, p1, p2) {
            Err(e) => {
                ok = false;
                json!({ "k": num(m.k()), "error": e.to_string() })
            }
            Ok(line) => {
                let c1 = contains(m, &line, p1);
                let c2 = contains(m, &line, p2);
                let deterministic = line_through(m, p1, p2).unwrap() == line;
                ok &= c1 && c2 && deterministic;
                json!({
                    "k": num(m.k()),
                    "line": line_json(&line),
                    "contains_p1": c1,
                    "contains_p2": c2,
                    "deterministic": deterministic,
                })
            }
        };
        rows.push(row);
    }
    Outcome {
        ok,
        inputs: json!({ "p1": point_json(p1), "p2": point_json(p2) }),
        observed: Value::Array(rows),
        expected: json!({
            "contains_p1": true,
            "contains_p2": true,
            "deterministic": true,
        }),
    }
}

fn metric_check(rng: &mut ChaCha8Rng, models: &[Model]) -> Outcome {
    let p = sample::point(rng);
    let q = sample::point(rng);
    let r = sample::point(rng);
    let mut rows = Vec::with_capacity(models.len());
    let mut ok = true;
    for m in models {
        let d_pq = distance(m, p, q);
        let d_qp = distance(m, q, p);
        let d_pr = distance(m, p, r);
        let d_qr = distance(m, q, r);
        let d_pp = distance(m, p, p);
        let nonnegative = d_pq >= 0.0 && d_pr >= 0.0 && d_qr >= 0.0;
        let identity_zero = d_pp == 0.0;
        let symmetric = rel_close(d_pq, d_qp, 1e-12, 1e-14);
        let triangle = d_pr <= d_pq + d_qr + 1e-9;
        ok &= nonnegative && identity_zero && symmetric && triangle;
        rows.push(json!({
            "k": num(m.k()),
            "d_pq": num(d_pq),
            "d_qp": num(d_qp),
            "d_pr": num(d_pr),
            "d_qr": num(d_qr),
            "nonnegative": nonnegative,
            "identity_zero": identity_zero,
            "symmetric": symmetric,
            "triangle": triangle,
        }));
    }
    Outcome {
        ok,
        inputs: json!({ "p": point_json(p), "q": point_json(q), "r": point_json(r) }),
        observed: Value::Array(rows),
        expected: json!({
            "nonnegative": true,
            "identity_zero": true,
            "symmetric_rel": 1e-12,
            "triangle_slack": 1e-9,
        }),
    }
}

fn ruler_check(rng: &mut ChaCha8Rng, models: &[Model]) -> Outcome {
    let (p1, p2) = sample::distinct_pair(rng, &models[0]);
    let t_probe = sample::uniform(rng, -20.0, 20.0);
    let mut rows = Vec::with_capacity(models.len());
    let mut ok = true;
    for m in models {
        let line = line_through(m, p1, p2).unwrap();
        let t1 = ruler(m, &line, p1).unwrap();
        let t2 = ruler(m, &line, p2).unwrap();
        let d = distance(m, p1, p2);
        let postulate = rel_close((t1 - t2).abs(), d, 1e-10, 1e-12);
        let back = ruler_inverse(m, &line, t1).unwrap();
        // The x of a recovered point is determined only to the scale
        // of the carrier's own extent: endpoint arithmetic on a huge
        // near-vertical ellipse cannot beat ulp(a). Coincidence in x
        // therefore widens with the extent; y keeps the model envelope.
        let extent = match line {
            HLine::Vertical { .. } => 0.0,
            HLine::Elliptic { left, right } => right - left,
        };
        let x_tol = m.eps_abs() + m.eps_rel() * p1.x().abs().max(extent);
        let point_trip =
            (back.x() - p1.x()).abs() <= x_tol && m.approx_eq(back.y(), p1.y());
        let probe_pt = ruler_inverse(m, &line, t_probe).unwrap();
        let probe_err = (ruler(m, &line, probe_pt).unwrap() - t_probe).abs();
        let t_trip = probe_err < 1e-9;
        ok &= postulate && point_trip && t_trip;
        rows.push(json!({
            "k": num(m.k()),
            "t1": num(t1),
            "t2": num(t2),
            "distance": num(d),
            "postulate": postulate,
            "point_round_trip": point_trip,
            "t_round_trip_err": num(probe_err),
        }));
    }
    Outcome {
        ok,
        inputs: json!({
            "p1": point_json(p1),
            "p2": point_json(p2),
            "t_probe": num(t_probe),
        }),
        observed: Value::Array(rows),
        expected: json!({
            "postulate_rel": 1e-10,
            "point_round_trip": true,
            "t_round_trip_abs": 1e-9,
        }),
    }
}

fn label_str(s: SideLabel) -> &'static str {
    match s {
        SideLabel::Side1 => "side1",
        SideLabel::Side2 => "side2",
        SideLabel::OnLine => "on_line",
    }
}

struct PsaDraws {
    line_pts: (Point, Point),
    a: Point,
    b: Point,
    third: Point,
    pasch_pt: Point,
    interior_fracs: [f64; 3],
    pasch_frac: f64,
    sas: Option<SasDraws>,
}

struct SasDraws {
    tri: [Point; 3],
    base: Point,
    theta: f64,
}

fn psa_check(rng: &mut ChaCha8Rng, models: &[Model], index: u64) -> Outcome {
    let m0 = &models[0];
    let (lp1, lp2) = sample::distinct_pair(rng, m0);
    let a = sample::point(rng);
    let b = sample::point(rng);
    let third = sample::point(rng);
    let pasch_pt = sample::point(rng);
    let interior_fracs = [
        sample::uniform(rng, 0.05, 0.95),
        sample::uniform(rng, 0.05, 0.95),
        sample::uniform(rng, 0.05, 0.95),
    ];
    let pasch_frac = sample::uniform(rng, 0.2, 0.8);
    // The SAS walk is the expensive check; it runs on every tenth
    // sample, over a compact triangle so sides stay mid-range.
    let sas = index.is_multiple_of(10).then(|| SasDraws {
        tri: [
            sample::compact_point(rng),
            sample::compact_point(rng),
            sample::compact_point(rng),
        ],
        base: sample::compact_point(rng),
        theta: sample::uniform(rng, 0.0, std::f64::consts::TAU),
    });
    let draws = PsaDraws {
        line_pts: (lp1, lp2),
        a,
        b,
        third,
        pasch_pt,
        interior_fracs,
        pasch_frac,
        sas,
    };

    let mut rows = Vec::with_capacity(models.len());
    let mut ok = true;
    for m in models {
        let row = psa_row(m, &draws);
        ok &= row.0;
        rows.push(row.1);
    }
    let sas_inputs = draws.sas.as_ref().map(|s| {
        json!({
            "triangle": [point_json(s.tri[0]), point_json(s.tri[1]), point_json(s.tri[2])],
            "base": point_json(s.base),
            "theta": num(s.theta),
        })
    });
    Outcome {
        ok,
        inputs: json!({
            "line_pts": [point_json(lp1), point_json(lp2)],
            "a": point_json(a),
            "b": point_json(b),
            "third": point_json(third),
            "pasch_pt": point_json(pasch_pt),
            "interior_fracs": interior_fracs.map(num),
            "pasch_frac": num(pasch_frac),
            "sas": sas_inputs,
        }),
        observed: Value::Array(rows),
        expected: json!({
            "partition": "side label is on_line exactly when the line contains the point",
            "convexity": "interior of a same-side segment keeps that side",
            "straddle": "opposite-side endpoints imply the segment crosses",
            "pasch": "a line through one side crosses another side",
            "sas_rel": 1e-8,
        }),
    }
}

fn psa_row(m: &Model, d: &PsaDraws) -> (bool, Value) {
    let line = line_through(m, d.line_pts.0, d.line_pts.1).unwrap();
    let sa = side_of(m, &line, d.a);
    let sb = side_of(m, &line, d.b);
    let partition = (sa == SideLabel::OnLine) == contains(m, &line, d.a)
        && (sb == SideLabel::OnLine) == contains(m, &line, d.b);
    let mut convexity = true;
    let mut straddle = true;
    if !m.points_coincide(d.a, d.b) {
        let seg = segment_between(m, d.a, d.b).unwrap();
        if sa == sb && sa != SideLabel::OnLine {
            for f in d.interior_fracs {
                let t = seg.t0() + f * (seg.t1() - seg.t0());
                let mid = ruler_inverse(m, seg.line(), t).unwrap();
                let s = side_of(m, &line, mid);
                convexity &= s == sa || s == SideLabel::OnLine;
            }
        }
        if matches!(
            (sa, sb),
            (SideLabel::Side1, SideLabel::Side2) | (SideLabel::Side2, SideLabel::Side1)
        ) {
            straddle = segment_crosses(m, &seg, &line).unwrap_or(false);
        }
    }
    let (pasch_ok, pasch_note) = pasch_part(m, d);
    let (sas_ok, sas_note) = match &d.sas {
        None => (true, Value::Null),
        Some(s) => sas_part(m, s),
    };
    let ok = partition && convexity && straddle && pasch_ok && sas_ok;
    let row = json!({
        "k": num(m.k()),
        "side_a": label_str(sa),
        "side_b": label_str(sb),
        "partition": partition,
        "convexity": convexity,
        "straddle": straddle,
        "pasch": pasch_note,
        "sas": sas_note,
    });
    (ok, row)
}

/// Pasch: a line entering triangle (a, b, third) through the interior
/// of side ab must leave through one of the other two sides.
fn pasch_part(m: &Model, d: &PsaDraws) -> (bool, Value) {
    let (a, b, c) = (d.a, d.b, d.third);
    if m.points_coincide(a, b) || m.points_coincide(b, c) || m.points_coincide(c, a) {
        return (true, json!("skipped: degenerate triangle"));
    }
    let ab = segment_between(m, a, b).unwrap();
    if contains(m, ab.line(), c) {
        return (true, json!("skipped: degenerate triangle"));
    }
    let t_m = ab.t0() + d.pasch_frac * (ab.t1() - ab.t0());
    let entry = ruler_inverse(m, ab.line(), t_m).unwrap();
    if m.points_coincide(entry, d.pasch_pt) {
        return (true, json!("skipped: entry point collides with direction draw"));
    }
    let cutter = line_through(m, entry, d.pasch_pt).unwrap();
    if contains(m, &cutter, a) || contains(m, &cutter, b) || contains(m, &cutter, c) {
        return (true, json!("skipped: cutter hits a vertex"));
    }
    let bc = segment_between(m, b, c).unwrap();
    let ca = segment_between(m, c, a).unwrap();
    let crosses_bc = segment_crosses(m, &bc, &cutter).unwrap_or(false);
    let crosses_ca = segment_crosses(m, &ca, &cutter).unwrap_or(false);
    let ok = crosses_bc || crosses_ca;
    (ok, json!({ "crosses_bc": crosses_bc, "crosses_ca": crosses_ca }))
}

/// Side-angle-side evidence: measure (side, angle, side) on one
/// triangle, rebuild a triangle elsewhere from those numbers alone,
/// and compare the third side. Certifies the pullback measure.
fn sas_part(m: &Model, s: &SasDraws) -> (bool, Value) {
    let [a, b, c] = s.tri;
    let side_a = distance(m, b, c);
    let side_b = distance(m, c, a);
    let side_c = distance(m, a, b);
    if [side_a, side_b, side_c].iter().any(|d| !(0.05..10.0).contains(d)) {
        return (true, json!("skipped: sides out of range"));
    }
    let angles = match triangle_angles(m, a, b, c) {
        Ok(x) => x,
        Err(_) => return (true, json!("skipped: degenerate triangle")),
    };
    let alpha = angles[0].pullback;
    let d0 = [s.theta.cos(), s.theta.sin()];
    let rebuilt = (|| -> Result<f64> {
        let b2 = walk(m, s.base, d0, side_c)?;
        let d1 = rotate_pullback(m, d0, alpha);
        let c2 = walk(m, s.base, d1, side_b)?;
        Ok(distance(m, b2, c2))
    })();
    match rebuilt {
        Err(e) => (false, json!({ "error": e.to_string() })),
        Ok(side_a2) => {
            let ok = rel_close(side_a2, side_a, 1e-8, 1e-10);
            (
                ok,
                json!({
                    "angle_pullback": num(alpha),
                    "angle_euclidean": num(angles[0].euclidean),
                    "side": num(side_a),
                    "rebuilt_side": num(side_a2),
                    "ok": ok,
                }),
            )
        }
    }
}

fn parallel_check(rng: &mut ChaCha8Rng, models: &[Model]) -> Outcome {
    let (lp1, lp2) = sample::distinct_pair(rng, &models[0]);
    let p = sample::point(rng);
    let mut rows = Vec::with_capacity(models.len());
    let mut ok = true;
    for m in models {
        let line = line_through(m, lp1, lp2).unwrap();
        if contains(m, &line, p) {
            rows.push(json!({ "k": num(m.k()), "note": "skipped: point on line" }));
            continue;
        }
        let row = match parallels_through(m, &line, p) {
            Err(e) => {
                ok = false;
                json!({ "k": num(m.k()), "error": e.to_string() })
            }
            Ok(pair) => {
                let through = pair.iter().all(|q| contains(m, q, p));
                let parallel = pair
                    .iter()
                    .all(|q| are_parallel(m, &line, q).unwrap_or(false));
                let disjoint = pair
                    .iter()
                    .all(|q| matches!(intersect(m, &line, q), Ok(None)));
                let shares: Vec<u32> =
                    pair.iter().map(|q| shared_endpoints(m, &line, q)).collect();
                let endpoint_share = shares.iter().all(|&n| n == 1);
                let distinct = pair[0] != pair[1]
                    && !(both_vertical_close(m, &pair[0], &pair[1]));
                ok &= through && parallel && disjoint && endpoint_share && distinct;
                json!({
                    "k": num(m.k()),
                    "parallels": [line_json(&pair[0]), line_json(&pair[1])],
                    "through_p": through,
                    "parallel_to_line": parallel,
                    "disjoint_from_line": disjoint,
                    "shared_endpoints": shares,
                    "distinct": distinct,
                })
            }
        };
        rows.push(row);
    }
    Outcome {
        ok,
        inputs: json!({
            "line_pts": [point_json(lp1), point_json(lp2)],
            "p": point_json(p),
        }),
        observed: Value::Array(rows),
        expected: json!({
            "through_p": true,
            "parallel_to_line": true,
            "disjoint_from_line": true,
            "shared_endpoints": [1, 1],
            "endpoint_match_abs": 1e-9,
            "distinct": true,
        }),
    }
}

/// Number of ideal endpoints `q` shares with `line`, within 1e-9.
fn shared_endpoints(m: &Model, line: &HLine, q: &HLine) -> u32 {
    let _ = m;
    let (l1, l2) = ideal_endpoints(line);
    let (q1, q2) = ideal_endpoints(q);
    let mut n = 0;
    for le in [l1, l2] {
        for qe in [q1, q2] {
            let hit = match (le, qe) {
                (IdealEndpoint::Infinity, IdealEndpoint::Infinity) => true,
                (IdealEndpoint::OnAxis { x: u }, IdealEndpoint::OnAxis { x: v }) => {
                    (u - v).abs() <= 1e-9
                }
                _ => false,
            };
            if hit {
                n += 1;
            }
        }
    }
    n
}

fn both_vertical_close(m: &Model, q1: &HLine, q2: &HLine) -> bool {
    match (q1, q2) {
        (HLine::Vertical { p: a }, HLine::Vertical { p: b }) => m.approx_eq(*a, *b),
        _ => false,
    }
}

fn oracle_check(rng: &mut ChaCha8Rng, models: &[Model]) -> Outcome {
    let (p, q) = sample::distinct_pair(rng, &models[0]);
    let spec = QuadratureSpec::new(1e-8).unwrap();
    let mut rows = Vec::with_capacity(models.len());
    let mut ok = true;
    for m in models {
        let d = distance(m, p, q);
        let via_classical = classical_distance(squeeze(m, p), squeeze(m, q));
        let chain = rel_close(d, via_classical, 1e-10, 1e-12);
        let line = line_through(m, p, q).unwrap();
        let t1 = ruler(m, &line, p).unwrap();
        let t2 = ruler(m, &line, q).unwrap();
        // Quadrature runs over a capped span so its error budget stays
        // the documented absolute one.
        let t_lo = t1.min(t2);
        let t_hi = t_lo + (t1 - t2).abs().min(10.0);
        let row = match arc_length_oracle(m, &line, t_lo, t_hi, &spec) {
            Err(e) => {
                ok = false;
                json!({ "k": num(m.k()), "error": e.to_string() })
            }
            Ok(len) => {
                let span_ok = (len - (t_hi - t_lo)).abs() <= 1e-6;
                let lo_pt = ruler_inverse(m, &line, t_lo).unwrap();
                let hi_pt = ruler_inverse(m, &line, t_hi).unwrap();
                let d_pair = distance(m, lo_pt, hi_pt);
                let dist_ok = (len - d_pair).abs() <= 1e-6;
                ok &= chain && span_ok && dist_ok;
                json!({
                    "k": num(m.k()),
                    "distance": num(d),
                    "via_classical": num(via_classical),
                    "chain": chain,
                    "arc_length": num(len),
                    "span_ok": span_ok,
                    "dist_ok": dist_ok,
                })
            }
        };
        rows.push(row);
    }
    Outcome {
        ok,
        inputs: json!({ "p": point_json(p), "q": point_json(q) }),
        observed: Value::Array(rows),
        expected: json!({
            "chain_rel": 1e-10,
            "arc_length_abs": 1e-6,
        }),
    }
}

fn run_samples(kind: SuiteKind, cfg: &SuiteConfig) -> SuiteReport {
    let models = cfg.models();
    let start = Instant::now();
    let mut records = Vec::with_capacity(cfg.samples as usize);
    let (mut passed, mut failed) = (0u64, 0u64);
    for i in 0..cfg.samples {
        let mut rng = sample::substream(cfg.seed, kind.salt(), i);
        let out = match kind {
            SuiteKind::Incidence => incidence_check(&mut rng, &models),
            SuiteKind::Metric => metric_check(&mut rng, &models),
            SuiteKind::Ruler => ruler_check(&mut rng, &models),
            SuiteKind::PsaPasch => psa_check(&mut rng, &models, i),
            SuiteKind::Parallel => parallel_check(&mut rng, &models),
            SuiteKind::Oracle => oracle_check(&mut rng, &models),
        };
        if out.ok {
            passed += 1;
        } else {
            failed += 1;
        }
        records.push(CheckRecord {
            suite: kind.name().to_string(),
            sample_index: i,
            status: if out.ok { CheckStatus::Pass } else { CheckStatus::Fail },
            inputs: out.inputs,
            observed: out.observed,
            expected: out.expected,
        });
    }
    SuiteReport {
        suite_name: kind.name().to_string(),
        passed,
        failed,
        records,
        wall_time: start.elapsed(),
    }
}

fn write_report_file(path: &Path, reports: &[SuiteReport]) -> Result<()> {
    let err = |e: std::io::Error| Error::ReportIo {
        detail: format!("{}: {e}", path.display()),
    };
    let file = std::fs::File::create(path).map_err(err)?;
    let mut w = std::io::BufWriter::new(file);
    write_records(&mut w, reports).map_err(err)?;
    w.flush().map_err(err)
}

fn single(kind: SuiteKind, cfg: &SuiteConfig) -> Result<SuiteReport> {
    let report = run_samples(kind, cfg);
    if let Some(path) = cfg.report_path() {
        write_report_file(path, std::slice::from_ref(&report))?;
    }
    Ok(report)
}

/// A1: two distinct points lie on a unique line that contains both.
pub fn incidence_suite(cfg: &SuiteConfig) -> Result<SuiteReport> {
    single(SuiteKind::Incidence, cfg)
}

/// A3: nonnegativity, identity, symmetry, and the triangle inequality.
pub fn metric_suite(cfg: &SuiteConfig) -> Result<SuiteReport> {
    single(SuiteKind::Metric, cfg)
}

/// A4: ruler round-trips and `|f(P) - f(Q)| = d(P, Q)`.
pub fn ruler_suite(cfg: &SuiteConfig) -> Result<SuiteReport> {
    single(SuiteKind::Ruler, cfg)
}

/// Plane separation (partition, convexity, straddling) and Pasch, with
/// the side-angle-side evidence walk on every tenth sample.
pub fn psa_pasch_suite(cfg: &SuiteConfig) -> Result<SuiteReport> {
    single(SuiteKind::PsaPasch, cfg)
}

/// Exactly two parallels through an external point, sharing one ideal
/// endpoint each with the base line.
pub fn parallel_suite(cfg: &SuiteConfig) -> Result<SuiteReport> {
    single(SuiteKind::Parallel, cfg)
}

/// Distance agreement across the three routes: closed form, classical
/// distance through the squeeze map, and quadrature arc length.
pub fn oracle_suite(cfg: &SuiteConfig) -> Result<SuiteReport> {
    single(SuiteKind::Oracle, cfg)
}

/// Runs the given suites in order and, when the configuration names a
/// report path, writes one combined line-delimited report.
pub fn run_suites(kinds: &[SuiteKind], cfg: &SuiteConfig) -> Result<Vec<SuiteReport>> {
    if kinds.is_empty() {
        return Err(Error::InvalidConfig("no suites selected".into()));
    }
    let reports: Vec<SuiteReport> = kinds.iter().map(|&k| run_samples(k, cfg)).collect();
    if let Some(path) = cfg.report_path() {
        write_report_file(path, &reports)?;
    }
    Ok(reports)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geodesic::segment_between;

    fn cfg(seed: u64, samples: u64) -> SuiteConfig {
        SuiteConfig::new(seed, samples, vec![0.5, 1.0, 2.0]).unwrap()
    }

    #[test]
    fn config_validation() {
        assert!(matches!(
            SuiteConfig::new(1, 0, vec![1.0]),
            Err(Error::InvalidConfig(_))
        ));
        assert!(matches!(
            SuiteConfig::new(1, 10, vec![]),
            Err(Error::InvalidConfig(_))
        ));
        assert!(matches!(
            SuiteConfig::new(1, 10, vec![1.0, -2.0]),
            Err(Error::InvalidConfig(_))
        ));
        assert!(matches!(
            SuiteConfig::new(1, 10, vec![f64::NAN]),
            Err(Error::InvalidConfig(_))
        ));
    }

    #[test]
    fn suite_names_round_trip() {
        for kind in SuiteKind::ALL {
            assert_eq!(kind.name().parse::<SuiteKind>().unwrap(), kind);
        }
        assert!(matches!(
            "nosuch".parse::<SuiteKind>(),
            Err(Error::InvalidConfig(_))
        ));
    }

    #[test]
    fn all_suites_pass_on_a_small_run() {
        let cfg = cfg(42, 40);
        let reports = run_suites(&SuiteKind::ALL, &cfg).unwrap();
        assert_eq!(reports.len(), 6);
        for rep in &reports {
            assert_eq!(rep.failed(), 0, "{} failed: {:?}", rep.suite_name(), rep.counterexamples().next());
            assert_eq!(rep.passed(), 40);
            assert_eq!(rep.records().len(), 40);
            assert_eq!(rep.counterexamples().count(), 0);
        }
    }

    #[test]
    fn records_are_ordered_and_labeled() {
        let rep = metric_suite(&cfg(7, 25)).unwrap();
        assert_eq!(rep.suite_name(), "metric");
        assert_eq!(rep.passed() + rep.failed(), 25);
        for (i, rec) in rep.records().iter().enumerate() {
            assert_eq!(rec.sample_index, i as u64);
            assert_eq!(rec.suite, "metric");
        }
    }

    #[test]
    fn same_seed_reproduces_reports() {
        let a = run_suites(&SuiteKind::ALL, &cfg(42, 20)).unwrap();
        let b = run_suites(&SuiteKind::ALL, &cfg(42, 20)).unwrap();
        assert_eq!(a, b);
        let mut buf_a = Vec::new();
        let mut buf_b = Vec::new();
        write_records(&mut buf_a, &a).unwrap();
        write_records(&mut buf_b, &b).unwrap();
        assert!(!buf_a.is_empty());
        assert_eq!(buf_a, buf_b);
    }

    #[test]
    fn different_seeds_disagree() {
        let a = incidence_suite(&cfg(1, 10)).unwrap();
        let b = incidence_suite(&cfg(2, 10)).unwrap();
        assert_ne!(a.records()[0].inputs, b.records()[0].inputs);
    }

    #[test]
    fn substreams_are_index_separated() {
        use rand_core::Rng;
        let mut r0 = sample::substream(42, 0x10, 0);
        let mut r1 = sample::substream(42, 0x10, 1);
        assert_ne!(r0.next_u64(), r1.next_u64());
    }

    #[test]
    fn near_vertical_injection_rate_is_held() {
        let model = Model::new(1.0).unwrap();
        let mut rng = sample::substream(9, 0x99, 0);
        let injected = (0..10_000)
            .filter(|_| {
                let (p1, p2) = sample::distinct_pair(&mut rng, &model);
                (p1.x() - p2.x()).abs() < 1e-6
            })
            .count();
        assert!((50..200).contains(&injected), "rate off: {injected}");
    }

    #[test]
    fn report_file_is_written_and_parses() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("report.jsonl");
        let cfg = SuiteConfig::new(3, 5, vec![1.0, 2.0])
            .unwrap()
            .with_report_path(&path);
        run_suites(&[SuiteKind::Incidence, SuiteKind::Oracle], &cfg).unwrap();
        let body = std::fs::read_to_string(&path).unwrap();
        let lines: Vec<&str> = body.lines().collect();
        assert_eq!(lines.len(), 10);
        for line in lines {
            let v: Value = serde_json::from_str(line).unwrap();
            for key in ["suite", "sample_index", "status", "inputs", "observed", "expected"] {
                assert!(v.get(key).is_some(), "missing {key} in {line}");
            }
        }
        assert!(body.starts_with(r#"{"suite":"incidence","sample_index":0,"status":"#));
    }

    #[test]
    fn report_write_failure_is_reported() {
        let cfg = SuiteConfig::new(3, 2, vec![1.0])
            .unwrap()
            .with_report_path("/nonexistent-dir/report.jsonl");
        assert!(matches!(
            incidence_suite(&cfg),
            Err(Error::ReportIo { .. })
        ));
    }

    #[test]
    fn apex_crossing_configuration_passes() {
        // The hand-built k = 2 crossing: the segment from (0, 1) to
        // (3, 1) crosses the vertical through the apex x = 1.5.
        let m = Model::new(2.0).unwrap();
        let seg = segment_between(
            &m,
            Point::new(0.0, 1.0).unwrap(),
            Point::new(3.0, 1.0).unwrap(),
        )
        .unwrap();
        let apex_line = HLine::vertical(1.5).unwrap();
        assert!(segment_crosses(&m, &seg, &apex_line).unwrap());
    }

    #[test]
    fn walk_and_tangent_helpers_cohere() {
        // Walking distance s from p and measuring back returns s, and
        // the constructed line is tangent to the requested direction.
        let m = Model::new(2.0).unwrap();
        let p = Point::new(0.0, 1.0).unwrap();
        let line = line_with_tangent(&m, p, [1.0, 0.0]).unwrap();
        assert_eq!(line, HLine::Elliptic { left: -2.0, right: 2.0 });
        let q = walk(&m, p, [1.0, 0.0], 0.75).unwrap();
        assert!((distance(&m, p, q) - 0.75).abs() < 1e-12);
        let back = walk(&m, p, [-1.0, 0.0], 0.75).unwrap();
        assert!((distance(&m, p, back) - 0.75).abs() < 1e-12);
        assert!((distance(&m, q, back) - 1.5).abs() < 1e-12);
    }

    #[test]
    fn pullback_rotation_is_isometric_on_angles() {
        let m = Model::new(2.0).unwrap();
        let d0 = [1.0, 0.0];
        let d1 = rotate_pullback(&m, d0, 0.7);
        // Rotating by the pullback protractor must read back as 0.7.
        let (ux, uy) = (d0[0], m.k() * d0[1]);
        let (vx, vy) = (d1[0], m.k() * d1[1]);
        let cross = (ux * vy - uy * vx).abs();
        let dot = ux * vx + uy * vy;
        assert!((cross.atan2(dot) - 0.7).abs() < 1e-12);
    }
}
