//! Command-line front end: queries, verification runs, and SVG
//! rendering.
//!
//! Every subcommand is a thin adapter over one library call; no
//! geometry lives here. Numbers print with 12 significant digits,
//! trailing zeros trimmed. `--format records` switches query output to
//! one JSON object per line with alphabetically ordered fields, for
//! machine consumption.
//!
//! Exit codes: 0 success, 1 verification failures, 2 usage or parse
//! or IO errors, 3 geometric precondition violations (coincident
//! points, nonpositive `k`, point off a line, and so on).

use crate::angle::{euclidean_angle, pullback_angle, tangent_ray};
use crate::geodesic::{line_through, ruler};
use crate::incidence::{intersect, parallels_through};
use crate::metric::distance;
use crate::model::{
    Error, HLine, Model, Point, Result, DEFAULT_EPS_ABS, DEFAULT_EPS_REL,
};
use crate::render::{render_svg, RenderSpec, SceneObject};
use crate::verify::{run_suites, SuiteConfig, SuiteKind};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;
use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

/// Formats `x` with 12 significant digits and trims trailing zeros, so
/// `ln 4` prints as `1.38629436112` and `2.0` prints as `2`.
pub(crate) fn sig12(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let sci = format!("{x:.11e}");
    let (mant, exp) = sci.split_once('e').unwrap();
    let exp: i32 = exp.parse().unwrap();
    let neg = mant.starts_with('-');
    let digits: String = mant.chars().filter(|c| c.is_ascii_digit()).collect();
    let point = exp + 1;
    let mut out = String::new();
    if neg {
        out.push('-');
    }
    if point <= 0 {
        out.push_str("0.");
        for _ in 0..-point {
            out.push('0');
        }
        out.push_str(&digits);
    } else if point as usize >= digits.len() {
        out.push_str(&digits);
        for _ in 0..(point as usize - digits.len()) {
            out.push('0');
        }
    } else {
        out.push_str(&digits[..point as usize]);
        out.push('.');
        out.push_str(&digits[point as usize..]);
    }
    if out.contains('.') {
        while out.ends_with('0') {
            out.pop();
        }
        if out.ends_with('.') {
            out.pop();
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    /// Plain text for people.
    Human,
    /// One JSON object per output line.
    Records,
}

#[derive(Debug, Args)]
struct ModelOpts {
    /// Squeeze factor of the model.
    #[arg(long, default_value_t = 1.0)]
    k: f64,

    /// Absolute tolerance override.
    #[arg(long, value_name = "EPS")]
    eps_abs: Option<f64>,

    /// Relative tolerance override.
    #[arg(long, value_name = "EPS")]
    eps_rel: Option<f64>,
}

impl ModelOpts {
    fn model(&self) -> Result<Model> {
        Model::with_tolerances(
            self.k,
            self.eps_abs.unwrap_or(DEFAULT_EPS_ABS),
            self.eps_rel.unwrap_or(DEFAULT_EPS_REL),
        )
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "halfplane",
    version,
    about = "Hyperbolic geometry on squeezed upper half-planes",
    after_help = "Line specs are `v:p` (vertical) or `e:c,a` (elliptic); points are `x,y`."
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Debug, Subcommand)]
enum Cmd {
    /// Construct the h-line through two points.
    Line {
        #[command(flatten)]
        model: ModelOpts,
        #[arg(long, value_enum, default_value_t = Format::Human)]
        format: Format,
        #[arg(allow_negative_numbers = true)]
        x1: f64,
        #[arg(allow_negative_numbers = true)]
        y1: f64,
        #[arg(allow_negative_numbers = true)]
        x2: f64,
        #[arg(allow_negative_numbers = true)]
        y2: f64,
    },

    /// Distance between two points.
    Dist {
        #[command(flatten)]
        model: ModelOpts,
        #[arg(long, value_enum, default_value_t = Format::Human)]
        format: Format,
        #[arg(allow_negative_numbers = true)]
        x1: f64,
        #[arg(allow_negative_numbers = true)]
        y1: f64,
        #[arg(allow_negative_numbers = true)]
        x2: f64,
        #[arg(allow_negative_numbers = true)]
        y2: f64,
    },

    /// Ruler coordinate of a point on a line.
    Ruler {
        #[command(flatten)]
        model: ModelOpts,
        #[arg(long, value_enum, default_value_t = Format::Human)]
        format: Format,
        /// Line spec (`v:p` or `e:c,a`).
        #[arg(allow_hyphen_values = true)]
        line: String,
        /// Point spec (`x,y`).
        #[arg(allow_hyphen_values = true)]
        point: String,
    },

    /// Intersection point of two lines, if any.
    Intersect {
        #[command(flatten)]
        model: ModelOpts,
        #[arg(long, value_enum, default_value_t = Format::Human)]
        format: Format,
        /// First line spec.
        #[arg(allow_hyphen_values = true)]
        line1: String,
        /// Second line spec.
        #[arg(allow_hyphen_values = true)]
        line2: String,
    },

    /// The two parallels to a line through an external point.
    Parallels {
        #[command(flatten)]
        model: ModelOpts,
        #[arg(long, value_enum, default_value_t = Format::Human)]
        format: Format,
        /// Line spec (`v:p` or `e:c,a`).
        #[arg(allow_hyphen_values = true)]
        line: String,
        /// Point spec (`x,y`).
        #[arg(allow_hyphen_values = true)]
        point: String,
    },

    /// Both angle measures at a vertex, between rays toward two points.
    Angle {
        #[command(flatten)]
        model: ModelOpts,
        #[arg(long, value_enum, default_value_t = Format::Human)]
        format: Format,
        /// Vertex (`x,y`).
        #[arg(allow_hyphen_values = true)]
        vertex: String,
        /// First ray target (`x,y`).
        #[arg(allow_hyphen_values = true)]
        toward1: String,
        /// Second ray target (`x,y`).
        #[arg(allow_hyphen_values = true)]
        toward2: String,
    },

    /// Run the randomized verification suites.
    Verify {
        /// RNG seed shared by all suites.
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Samples per suite.
        #[arg(long, default_value_t = 1000)]
        samples: u64,
        /// Squeeze factors to sweep, comma-separated.
        #[arg(long, value_delimiter = ',', default_value = "0.5,1,2")]
        k: Vec<f64>,
        /// Suites to run, comma-separated (default: all).
        #[arg(long, value_delimiter = ',')]
        suite: Option<Vec<String>>,
        /// Write the line-delimited check report here.
        #[arg(long, value_name = "PATH")]
        report: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Human)]
        format: Format,
    },

    /// Render objects to an SVG file, once per squeeze factor.
    Render {
        /// Squeeze factors to draw, comma-separated.
        #[arg(long, value_delimiter = ',', default_value = "1")]
        k: Vec<f64>,
        /// Objects: `point:x,y`, `line:v:p`, `line:e:c,a`,
        /// `segment:x1,y1:x2,y2`, `triangle:x1,y1:x2,y2:x3,y3`.
        #[arg(value_name = "OBJECT")]
        objects: Vec<String>,
        /// Read additional object specs from a file (one per line,
        /// `#` comments allowed).
        #[arg(long, value_name = "PATH")]
        input: Option<PathBuf>,
        /// Output SVG path.
        #[arg(long, value_name = "PATH")]
        out: PathBuf,
        #[arg(long, default_value_t = -5.0, allow_negative_numbers = true)]
        xmin: f64,
        #[arg(long, default_value_t = 5.0, allow_negative_numbers = true)]
        xmax: f64,
        #[arg(long, default_value_t = 5.0, allow_negative_numbers = true)]
        ymax: f64,
        #[arg(long, default_value_t = 800)]
        width: u32,
        #[arg(long, default_value_t = 480)]
        height: u32,
        /// Polyline sample count per stroke.
        #[arg(long, default_value_t = 257)]
        stroke_samples: u32,
    },
}

fn parse_num(tok: &str, what: &str) -> Result<f64> {
    tok.trim()
        .parse()
        .map_err(|_| Error::InvalidConfig(format!("cannot parse {what} `{tok}` as a number")))
}

fn parse_point_spec(s: &str) -> Result<Point> {
    let (x, y) = s
        .split_once(',')
        .ok_or_else(|| Error::InvalidConfig(format!("point spec `{s}` must be `x,y`")))?;
    Point::new(parse_num(x, "coordinate")?, parse_num(y, "coordinate")?)
}

fn parse_line_spec(s: &str) -> Result<HLine> {
    if let Some(p) = s.strip_prefix("v:") {
        HLine::vertical(parse_num(p, "line parameter")?)
    } else if let Some(rest) = s.strip_prefix("e:") {
        let (c, a) = rest.split_once(',').ok_or_else(|| {
            Error::InvalidConfig(format!("elliptic spec `{s}` must be `e:c,a`"))
        })?;
        HLine::elliptic(parse_num(c, "center")?, parse_num(a, "semi-axis")?)
    } else {
        Err(Error::InvalidConfig(format!("line spec `{s}` must be `v:p` or `e:c,a`")))
    }
}

fn parse_scene_object(s: &str) -> Result<SceneObject> {
    if let Some(rest) = s.strip_prefix("point:") {
        Ok(SceneObject::Point(parse_point_spec(rest)?))
    } else if let Some(rest) = s.strip_prefix("line:") {
        Ok(SceneObject::Line(parse_line_spec(rest)?))
    } else if let Some(rest) = s.strip_prefix("segment:") {
        let (a, b) = rest.split_once(':').ok_or_else(|| {
            Error::InvalidConfig(format!("segment spec `{s}` must be `segment:x1,y1:x2,y2`"))
        })?;
        Ok(SceneObject::Segment { a: parse_point_spec(a)?, b: parse_point_spec(b)? })
    } else if let Some(rest) = s.strip_prefix("triangle:") {
        let parts: Vec<&str> = rest.split(':').collect();
        if parts.len() != 3 {
            return Err(Error::InvalidConfig(format!(
                "triangle spec `{s}` must be `triangle:x1,y1:x2,y2:x3,y3`"
            )));
        }
        Ok(SceneObject::Triangle {
            a: parse_point_spec(parts[0])?,
            b: parse_point_spec(parts[1])?,
            c: parse_point_spec(parts[2])?,
        })
    } else {
        Err(Error::InvalidConfig(format!(
            "object spec `{s}` must start with point:, line:, segment:, or triangle:"
        )))
    }
}

fn describe_line(line: &HLine) -> String {
    match *line {
        HLine::Vertical { p } => format!("vertical p={}", sig12(p)),
        HLine::Elliptic { left, right } => {
            let (c, a) = line.elliptic_params().unwrap();
            format!(
                "elliptic c={} a={} endpoints {} {}",
                sig12(c),
                sig12(a),
                sig12(left),
                sig12(right)
            )
        }
    }
}

fn line_value(line: &HLine) -> serde_json::Value {
    match *line {
        HLine::Vertical { p } => json!({ "variant": "vertical", "p": p }),
        HLine::Elliptic { left, right } => {
            let (c, a) = line.elliptic_params().unwrap();
            json!({ "variant": "elliptic", "c": c, "a": a, "left": left, "right": right })
        }
    }
}

fn exit_code_for(e: &Error) -> i32 {
    match e {
        Error::InvalidConfig(_) | Error::ReportIo { .. } => 2,
        _ => 3,
    }
}

/// Parses `args` (including the program name) and executes one
/// command, writing to the given streams. Returns the process exit
/// code; used directly by the binary and in-process by tests.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    0
                }
                _ => {
                    let _ = write!(err, "{e}");
                    2
                }
            };
        }
    };
    match dispatch(cli.cmd, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code_for(&e)
        }
    }
}

fn dispatch(cmd: Cmd, out: &mut dyn Write) -> Result<i32> {
    match cmd {
        Cmd::Line { model, format, x1, y1, x2, y2 } => {
            let m = model.model()?;
            let line = line_through(&m, Point::new(x1, y1)?, Point::new(x2, y2)?)?;
            let text = match format {
                Format::Human => describe_line(&line),
                Format::Records => json!({ "op": "line", "line": line_value(&line) }).to_string(),
            };
            let _ = writeln!(out, "{text}");
            Ok(0)
        }
        Cmd::Dist { model, format, x1, y1, x2, y2 } => {
            let m = model.model()?;
            let d = distance(&m, Point::new(x1, y1)?, Point::new(x2, y2)?);
            let text = match format {
                Format::Human => sig12(d),
                Format::Records => json!({ "op": "dist", "distance": d }).to_string(),
            };
            let _ = writeln!(out, "{text}");
            Ok(0)
        }
        Cmd::Ruler { model, format, line, point } => {
            let m = model.model()?;
            let line = parse_line_spec(&line)?;
            let p = parse_point_spec(&point)?;
            let t = ruler(&m, &line, p)?;
            let text = match format {
                Format::Human => sig12(t),
                Format::Records => json!({ "op": "ruler", "t": t }).to_string(),
            };
            let _ = writeln!(out, "{text}");
            Ok(0)
        }
        Cmd::Intersect { model, format, line1, line2 } => {
            let m = model.model()?;
            let l1 = parse_line_spec(&line1)?;
            let l2 = parse_line_spec(&line2)?;
            let hit = intersect(&m, &l1, &l2)?;
            let text = match format {
                Format::Human => match hit {
                    Some(p) => format!("point {} {}", sig12(p.x()), sig12(p.y())),
                    None => "none".to_string(),
                },
                Format::Records => {
                    let point = hit.map(|p| json!([p.x(), p.y()]));
                    json!({ "op": "intersect", "point": point }).to_string()
                }
            };
            let _ = writeln!(out, "{text}");
            Ok(0)
        }
        Cmd::Parallels { model, format, line, point } => {
            let m = model.model()?;
            let line = parse_line_spec(&line)?;
            let p = parse_point_spec(&point)?;
            let pair = parallels_through(&m, &line, p)?;
            match format {
                Format::Human => {
                    for q in &pair {
                        let _ = writeln!(out, "{}", describe_line(q));
                    }
                }
                Format::Records => {
                    let text = json!({
                        "op": "parallels",
                        "parallels": [line_value(&pair[0]), line_value(&pair[1])],
                    })
                    .to_string();
                    let _ = writeln!(out, "{text}");
                }
            }
            Ok(0)
        }
        Cmd::Angle { model, format, vertex, toward1, toward2 } => {
            let m = model.model()?;
            let v = parse_point_spec(&vertex)?;
            let p1 = parse_point_spec(&toward1)?;
            let p2 = parse_point_spec(&toward2)?;
            let r1 = tangent_ray(&m, &line_through(&m, v, p1)?, v, p1)?;
            let r2 = tangent_ray(&m, &line_through(&m, v, p2)?, v, p2)?;
            let euclid = euclidean_angle(&m, &r1, &r2)?;
            let pulled = pullback_angle(&m, &r1, &r2)?;
            let text = match format {
                Format::Human => {
                    format!("euclidean {} pullback {}", sig12(euclid), sig12(pulled))
                }
                Format::Records => {
                    json!({ "op": "angle", "euclidean": euclid, "pullback": pulled }).to_string()
                }
            };
            let _ = writeln!(out, "{text}");
            Ok(0)
        }
        Cmd::Verify { seed, samples, k, suite, report, format } => {
            let kinds = match suite {
                None => SuiteKind::ALL.to_vec(),
                Some(names) => names
                    .iter()
                    .map(|n| n.parse())
                    .collect::<Result<Vec<SuiteKind>>>()?,
            };
            let mut cfg = SuiteConfig::new(seed, samples, k)?;
            if let Some(path) = report {
                cfg = cfg.with_report_path(path);
            }
            let reports = run_suites(&kinds, &cfg)?;
            let mut failures = 0;
            for rep in &reports {
                failures += rep.failed();
                let text = match format {
                    Format::Human => format!(
                        "{} passed={} failed={}",
                        rep.suite_name(),
                        rep.passed(),
                        rep.failed()
                    ),
                    Format::Records => json!({
                        "op": "verify",
                        "suite": rep.suite_name(),
                        "passed": rep.passed(),
                        "failed": rep.failed(),
                    })
                    .to_string(),
                };
                let _ = writeln!(out, "{text}");
            }
            Ok(if failures > 0 { 1 } else { 0 })
        }
        Cmd::Render {
            k,
            objects,
            input,
            out: out_path,
            xmin,
            xmax,
            ymax,
            width,
            height,
            stroke_samples,
        } => {
            let models = k
                .into_iter()
                .map(Model::new)
                .collect::<Result<Vec<Model>>>()?;
            let spec = RenderSpec::new(xmin, xmax, ymax, width, height, stroke_samples)
                .map_err(|e| Error::InvalidConfig(e.to_string()))?;
            let mut scene = Vec::new();
            for s in &objects {
                scene.push(parse_scene_object(s)?);
            }
            if let Some(path) = input {
                let body = std::fs::read_to_string(&path).map_err(|e| {
                    Error::InvalidConfig(format!("{}: {e}", path.display()))
                })?;
                for line in body.lines() {
                    let line = line.trim();
                    if line.is_empty() || line.starts_with('#') {
                        continue;
                    }
                    scene.push(parse_scene_object(line)?);
                }
            }
            let svg = render_svg(&models, &scene, &spec)?;
            std::fs::write(&out_path, svg).map_err(|e| {
                Error::InvalidConfig(format!("{}: {e}", out_path.display()))
            })?;
            let _ = writeln!(out, "wrote {}", out_path.display());
            Ok(0)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Runs the CLI in-process and returns (exit code, stdout, stderr).
    fn cli(args: &[&str]) -> (i32, String, String) {
        let mut argv = vec!["halfplane"];
        argv.extend_from_slice(args);
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn sig12_formatting() {
        assert_eq!(sig12(4f64.ln()), "1.38629436112");
        assert_eq!(sig12(2.0), "2");
        assert_eq!(sig12(0.0), "0");
        assert_eq!(sig12(-1.0), "-1");
        assert_eq!(sig12(1.5), "1.5");
        assert_eq!(sig12(0.5), "0.5");
        assert_eq!(sig12(-0.0625), "-0.0625");
        assert_eq!(sig12(1e13), "10000000000000");
        assert_eq!(sig12(1e-5), "0.00001");
        assert_eq!(sig12(123456789.123456), "123456789.123");
    }

    #[test]
    fn dist_prints_pinned_value() {
        let (code, out, _) = cli(&["dist", "--k", "2", "0", "1", "3", "1"]);
        assert_eq!(code, 0);
        assert_eq!(out, "1.38629436112\n");
    }

    #[test]
    fn dist_trivial_cases() {
        let (code, out, _) = cli(&["dist", "--k", "7", "5", "1", "5", "1"]);
        assert_eq!((code, out.as_str()), (0, "0\n"));
        let (code, out, _) = cli(&["dist", "--k", "3", "5", "1", "5", "7.389056098931"]);
        assert_eq!(code, 0);
        assert_eq!(out, "2\n");
    }

    #[test]
    fn line_descriptions() {
        let (code, out, _) = cli(&["line", "--k", "2", "0", "1", "3", "1"]);
        assert_eq!(code, 0);
        assert_eq!(out, "elliptic c=1.5 a=2.5 endpoints -1 4\n");
        let (code, out, _) = cli(&["line", "--k", "1", "0", "1", "0", "2"]);
        assert_eq!(code, 0);
        assert_eq!(out, "vertical p=0\n");
    }

    #[test]
    fn coincident_points_exit_geometrically() {
        let (code, out, err) = cli(&["line", "--k", "1", "0", "1", "0", "1"]);
        assert_eq!(code, 3);
        assert!(out.is_empty());
        assert!(err.contains("coincide"), "{err}");
    }

    #[test]
    fn nonpositive_k_is_a_precondition_error() {
        let (code, _, err) = cli(&["dist", "--k", "0", "0", "1", "3", "1"]);
        assert_eq!(code, 3);
        assert!(err.contains("`k`"), "{err}");
    }

    #[test]
    fn lower_half_plane_points_are_rejected() {
        let (code, _, err) = cli(&["dist", "--k", "1", "0", "-1", "3", "1"]);
        assert_eq!(code, 3);
        assert!(err.contains("upper half-plane"), "{err}");
    }

    #[test]
    fn ruler_worked_example() {
        let (code, out, _) = cli(&["ruler", "--k", "2", "e:1.5,2.5", "3,1"]);
        assert_eq!(code, 0);
        assert_eq!(out, "0.69314718056\n");
        let (code, _, _) = cli(&["ruler", "--k", "2", "e:1.5,2.5", "0,2"]);
        assert_eq!(code, 3);
    }

    #[test]
    fn intersect_worked_examples() {
        let (code, out, _) = cli(&["intersect", "--k", "2", "v:1.5", "e:1.5,2.5"]);
        assert_eq!(code, 0);
        assert_eq!(out, "point 1.5 1.25\n");
        let (code, out, _) = cli(&["intersect", "--k", "1", "v:0", "v:1"]);
        assert_eq!((code, out.as_str()), (0, "none\n"));
        let (code, _, _) = cli(&["intersect", "--k", "1", "v:0", "v:0"]);
        assert_eq!(code, 3);
    }

    #[test]
    fn parallels_worked_example() {
        let (code, out, _) = cli(&["parallels", "--k", "1", "e:0,1", "3,1"]);
        assert_eq!(code, 0);
        assert_eq!(
            out,
            "elliptic c=1.125 a=2.125 endpoints -1 3.25\n\
             elliptic c=2.25 a=1.25 endpoints 1 3.5\n"
        );
        let (code, out, _) = cli(&["parallels", "--k", "1", "e:0,1", "1,2"]);
        assert_eq!(code, 0);
        assert_eq!(
            out,
            "elliptic c=1 a=2 endpoints -1 3\nvertical p=1\n"
        );
    }

    #[test]
    fn angle_agrees_with_itself_at_k1() {
        let (code, out, _) = cli(&["angle", "--k", "1", "0,1", "-1,1", "1,1"]);
        assert_eq!(code, 0);
        assert_eq!(out, "euclidean 2.21429743559 pullback 2.21429743559\n");
    }

    #[test]
    fn records_mode_is_json_per_line() {
        let (code, out, _) =
            cli(&["line", "--k", "2", "--format", "records", "0", "1", "3", "1"]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(out.trim()).unwrap();
        assert_eq!(v["op"], "line");
        assert_eq!(v["line"]["variant"], "elliptic");
        assert_eq!(v["line"]["c"], 1.5);
        assert_eq!(v["line"]["left"], -1.0);

        let (_, out, _) =
            cli(&["dist", "--k", "2", "--format", "records", "0", "1", "3", "1"]);
        let v: serde_json::Value = serde_json::from_str(out.trim()).unwrap();
        assert!((v["distance"].as_f64().unwrap() - 4f64.ln()).abs() < 1e-15);

        let (_, out, _) = cli(&["angle", "--k", "1", "--format", "records", "0,1", "-1,1", "1,1"]);
        let v: serde_json::Value = serde_json::from_str(out.trim()).unwrap();
        assert_eq!(v["euclidean"], v["pullback"]);
    }

    #[test]
    fn verify_small_run_passes() {
        let (code, out, _) = cli(&[
            "verify", "--seed", "7", "--samples", "5", "--k", "1,2", "--suite", "metric,oracle",
        ]);
        assert_eq!(code, 0);
        assert_eq!(out, "metric passed=5 failed=0\noracle passed=5 failed=0\n");
    }

    #[test]
    fn verify_rejects_unknown_suite() {
        let (code, _, err) = cli(&["verify", "--suite", "nosuch"]);
        assert_eq!(code, 2);
        assert!(err.contains("nosuch"), "{err}");
    }

    #[test]
    fn verify_rejects_bad_flags() {
        let (code, _, _) = cli(&["verify", "--samples", "0", "--suite", "metric"]);
        assert_eq!(code, 2);
        let (code, _, _) = cli(&["verify", "--k", "0,1", "--samples", "1", "--suite", "metric"]);
        assert_eq!(code, 2);
    }

    #[test]
    fn bad_specs_are_usage_errors() {
        let (code, _, _) = cli(&["ruler", "--k", "1", "x:0", "0,1"]);
        assert_eq!(code, 2);
        let (code, _, _) = cli(&["ruler", "--k", "1", "v:0", "zero,1"]);
        assert_eq!(code, 2);
        let (code, _, _) = cli(&["intersect", "--k", "1", "e:0", "v:0"]);
        assert_eq!(code, 2);
    }

    #[test]
    fn help_prints_to_stdout() {
        let (code, out, err) = cli(&["--help"]);
        assert_eq!(code, 0);
        assert!(out.contains("Usage"));
        assert!(err.is_empty());
        let (code, _, err) = cli(&["frobnicate"]);
        assert_eq!(code, 2);
        assert!(!err.is_empty());
    }

    #[test]
    fn render_writes_svg() {
        let dir = tempfile::tempdir().unwrap();
        let out_path = dir.path().join("scene.svg");
        let input_path = dir.path().join("objects.txt");
        std::fs::write(&input_path, "# a comment\n\npoint:0,1\nline:v:0\n").unwrap();
        let (code, out, _) = cli(&[
            "render",
            "--k",
            "1,2",
            "line:e:1.5,2.5",
            "segment:0,1:3,1",
            "--input",
            input_path.to_str().unwrap(),
            "--out",
            out_path.to_str().unwrap(),
            "--xmin",
            "-2",
            "--xmax",
            "5",
            "--ymax",
            "3",
        ]);
        assert_eq!(code, 0);
        assert!(out.starts_with("wrote "));
        let svg = std::fs::read_to_string(&out_path).unwrap();
        assert!(svg.starts_with("<svg "));
        assert!(svg.contains("<circle"));
        let (code2, _, _) = cli(&[
            "render",
            "--k",
            "1,2",
            "line:e:1.5,2.5",
            "segment:0,1:3,1",
            "--input",
            input_path.to_str().unwrap(),
            "--out",
            out_path.to_str().unwrap(),
            "--xmin",
            "-2",
            "--xmax",
            "5",
            "--ymax",
            "3",
        ]);
        assert_eq!(code2, 0);
        assert_eq!(svg, std::fs::read_to_string(&out_path).unwrap());
    }

    #[test]
    fn render_rejects_bad_objects_and_paths() {
        let dir = tempfile::tempdir().unwrap();
        let out_path = dir.path().join("x.svg");
        let (code, _, err) =
            cli(&["render", "blob:1,2", "--out", out_path.to_str().unwrap()]);
        assert_eq!(code, 2);
        assert!(err.contains("object spec"), "{err}");
        let (code, _, _) = cli(&["render", "point:0,1", "--out", "/nonexistent-dir/x.svg"]);
        assert_eq!(code, 2);
        let (code, _, _) = cli(&[
            "render",
            "point:0,1",
            "--xmin",
            "2",
            "--xmax",
            "-2",
            "--out",
            out_path.to_str().unwrap(),
        ]);
        assert_eq!(code, 2);
    }
}
