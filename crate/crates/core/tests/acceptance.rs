//! End-to-end acceptance gate: ten numbered criteria, one test each.
//!
//! Every test draws its own deterministic sample stream, checks the
//! stated tolerance on the stated sample count, and prints a single
//! summary line (visible with `--nocapture`); the harness result line
//! doubles as the pass/fail verdict. Criterion 10 compares against a
//! classical half-plane reference implemented from scratch at the
//! bottom of this file, sharing no code with the library.

use halfplane::angle::{euclidean_angle, pullback_angle, tangent_ray, triangle_angles};
use halfplane::geodesic::{contains, line_through, ruler, ruler_inverse};
use halfplane::incidence::{ideal_endpoints, intersect};
use halfplane::metric::{arc_length_oracle, classical_distance, distance, squeeze, QuadratureSpec};
use halfplane::model::{HLine, IdealEndpoint, Model, Point};
use halfplane::verify::{parallel_suite, psa_pasch_suite, sample, SuiteConfig};
use rand_chacha::ChaCha8Rng;
use std::process::Command;
use std::time::Instant;

const K_SET: [f64; 5] = [0.25, 0.5, 1.0, 2.0, 10.0];
const SEED: u64 = 42;

fn stream(label: u64, index: u64) -> ChaCha8Rng {
    sample::substream(SEED, label, index)
}

/// `|a - b|` within `rel` of the larger magnitude, with a small
/// absolute floor so exact zeros compare cleanly.
fn rel_close(a: f64, b: f64, rel: f64) -> bool {
    (a - b).abs() <= rel * a.abs().max(b.abs()) + 1e-13
}

/// Criterion 1: lines pass through their defining points.
///
/// 10,000 distinct pairs per squeeze factor; on elliptic carriers the
/// defining-equation residual stays below `1e-9 * a^2`; the whole
/// sweep finishes in under five seconds.
#[test]
fn criterion_01_incidence() {
    let start = Instant::now();
    for (ki, &k) in K_SET.iter().enumerate() {
        let m = Model::new(k).unwrap();
        for i in 0..10_000u64 {
            let mut rng = stream(0x01, (ki as u64) << 32 | i);
            let (p, q) = sample::distinct_pair(&mut rng, &m);
            let line = line_through(&m, p, q).unwrap();
            assert!(contains(&m, &line, p), "k={k} {p:?} off its own line");
            assert!(contains(&m, &line, q), "k={k} {q:?} off its own line");
            if let HLine::Elliptic { left, right } = line {
                let (_, a) = line.elliptic_params().unwrap();
                for w in [p, q] {
                    let r = ((w.x() - left) * (w.x() - right)
                        + (k * w.y()) * (k * w.y()))
                    .abs();
                    assert!(
                        r < 1e-9 * a * a,
                        "k={k} residual {r} exceeds 1e-9*a^2={}",
                        1e-9 * a * a
                    );
                }
            }
        }
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 5.0, "took {elapsed:?}");
    println!(
        "criterion 1 (incidence): PASS 50000 pairs, residual < 1e-9*a^2, {elapsed:?}"
    );
}

/// Criterion 2: the ruler is an isometry onto the reals.
///
/// 10,000 collinear pairs: ruler differences match distances to 1e-10
/// relative, and ruler round trips err below 1e-9 over t in [-20, 20].
#[test]
fn criterion_02_ruler_postulate() {
    let mut checked = 0u64;
    for i in 0..10_000u64 {
        let mut rng = stream(0x02, i);
        let k = K_SET[(i % K_SET.len() as u64) as usize];
        let m = Model::new(k).unwrap();
        let (p, q) = sample::distinct_pair(&mut rng, &m);
        let line = line_through(&m, p, q).unwrap();

        // Collinear pair for the isometry clause. Pairs jammed so far
        // into an ideal endpoint that their abscissas agree within
        // model tolerance re-classify as a vertical carrier and stop
        // being a sample of this line; redraw those.
        let (a, b, ta_drawn, tb_drawn) = loop {
            let t1 = sample::uniform(&mut rng, -8.0, 8.0);
            let t2 = sample::uniform(&mut rng, -8.0, 8.0);
            if (t1 - t2).abs() < 0.01 {
                continue;
            }
            let a = ruler_inverse(&m, &line, t1).unwrap();
            let b = ruler_inverse(&m, &line, t2).unwrap();
            if !line.is_vertical() && m.approx_eq(a.x(), b.x()) {
                continue;
            }
            break (a, b, t1, t2);
        };
        let ta = ruler(&m, &line, a).unwrap();
        let tb = ruler(&m, &line, b).unwrap();
        let d = distance(&m, a, b);
        assert!(
            rel_close((ta - tb).abs(), d, 1e-10),
            "k={k} ruler gap {} vs distance {d}",
            (ta - tb).abs()
        );

        // Round trip over the full working range.
        for t in [ta_drawn, tb_drawn, sample::uniform(&mut rng, -20.0, 20.0)] {
            let w = ruler_inverse(&m, &line, t).unwrap();
            let back = ruler(&m, &line, w).unwrap();
            assert!((back - t).abs() < 1e-9, "k={k} round trip {t} -> {back}");
        }
        checked += 1;
    }
    println!("criterion 2 (ruler postulate): PASS {checked} collinear pairs");
}

/// Criterion 3: distance factors through the squeeze map.
///
/// 10,000 pairs per squeeze factor agree with the classical distance
/// of the squeezed images to 1e-10 relative.
#[test]
fn criterion_03_isometry_chain() {
    for (ki, &k) in K_SET.iter().enumerate() {
        let m = Model::new(k).unwrap();
        for i in 0..10_000u64 {
            let mut rng = stream(0x03, (ki as u64) << 32 | i);
            let (p, q) = sample::distinct_pair(&mut rng, &m);
            let direct = distance(&m, p, q);
            let chained = classical_distance(squeeze(&m, p), squeeze(&m, q));
            assert!(
                rel_close(direct, chained, 1e-10),
                "k={k} direct {direct} vs squeezed {chained}"
            );
        }
    }
    println!("criterion 3 (isometry chain): PASS 50000 pairs per-k agreement at 1e-10");
}

/// Criterion 4: independent quadrature confirms the closed form.
///
/// 1,000 spans of ruler length at most 10: the arc-length integral
/// equals the ruler gap and the closed-form distance within 1e-6. The
/// worked value ln 4 reproduces to 1e-10 closed form, 1e-6 quadrature.
#[test]
fn criterion_04_quadrature_oracle() {
    let spec = QuadratureSpec::default();
    for i in 0..1_000u64 {
        let mut rng = stream(0x04, i);
        let k = K_SET[(i % K_SET.len() as u64) as usize];
        let m = Model::new(k).unwrap();
        let (p, q) = sample::distinct_pair(&mut rng, &m);
        let line = line_through(&m, p, q).unwrap();
        let t0 = sample::uniform(&mut rng, -15.0, 15.0);
        let t1 = t0 + sample::uniform(&mut rng, -10.0, 10.0);
        let (lo, hi) = (t0.min(t1), t0.max(t1));
        let len = arc_length_oracle(&m, &line, lo, hi, &spec).unwrap();
        assert!(
            (len - (hi - lo)).abs() < 1e-6,
            "k={k} arc length {len} vs span {}",
            hi - lo
        );
        let a = ruler_inverse(&m, &line, lo).unwrap();
        let b = ruler_inverse(&m, &line, hi).unwrap();
        let d = distance(&m, a, b);
        assert!((len - d).abs() < 1e-6, "k={k} arc length {len} vs distance {d}");
    }

    let m = Model::new(2.0).unwrap();
    let p = Point::new(0.0, 1.0).unwrap();
    let q = Point::new(3.0, 1.0).unwrap();
    let closed = distance(&m, p, q);
    assert!((closed - 4f64.ln()).abs() < 1e-10, "closed form {closed}");
    let line = line_through(&m, p, q).unwrap();
    let t0 = ruler(&m, &line, p).unwrap();
    let t1 = ruler(&m, &line, q).unwrap();
    let len = arc_length_oracle(&m, &line, t0.min(t1), t0.max(t1), &spec).unwrap();
    assert!((len - 4f64.ln()).abs() < 1e-6, "quadrature {len}");
    println!("criterion 4 (quadrature oracle): PASS 1000 spans + worked value ln 4");
}

/// Criterion 5: metric axioms hold with slack 1e-9.
///
/// 10,000 triples per squeeze factor: nonnegativity, identity,
/// symmetry, and the triangle inequality.
#[test]
fn criterion_05_metric_axioms() {
    for (ki, &k) in K_SET.iter().enumerate() {
        let m = Model::new(k).unwrap();
        for i in 0..10_000u64 {
            let mut rng = stream(0x05, (ki as u64) << 32 | i);
            let p = sample::point(&mut rng);
            let q = sample::point(&mut rng);
            let r = sample::point(&mut rng);
            let dpq = distance(&m, p, q);
            let dqp = distance(&m, q, p);
            let dqr = distance(&m, q, r);
            let dpr = distance(&m, p, r);
            assert!(dpq >= 0.0 && dqr >= 0.0 && dpr >= 0.0);
            assert!(distance(&m, p, p) == 0.0, "k={k} identity at {p:?}");
            assert!((dpq - dqp).abs() <= 1e-9, "k={k} symmetry {dpq} vs {dqp}");
            assert!(
                dpr <= dpq + dqr + 1e-9,
                "k={k} triangle {dpr} > {dpq} + {dqr}"
            );
        }
    }
    println!("criterion 5 (metric axioms): PASS 50000 triples with slack 1e-9");
}

/// Criterion 6: plane-separation and Pasch checks find nothing.
///
/// 5,000 sampled configurations across the k sweep: sides partition,
/// segment convexity holds, straddling segments cross, and a line
/// entering a triangle leaves through another side.
#[test]
fn criterion_06_separation_and_pasch() {
    let cfg = SuiteConfig::new(SEED, 5_000, K_SET.to_vec()).unwrap();
    let report = psa_pasch_suite(&cfg).unwrap();
    assert_eq!(
        report.failed(),
        0,
        "counterexamples: {:?}",
        report.counterexamples().take(3).collect::<Vec<_>>()
    );
    assert_eq!(report.passed(), 5_000);
    println!("criterion 6 (separation/Pasch): PASS 5000 configurations, zero counterexamples");
}

/// Criterion 7: exactly two parallels through an external point.
///
/// 5,000 sampled line/point configurations: both parallels pass
/// through the point, each shares exactly one ideal endpoint with the
/// base line to 1e-9 absolute, and neither meets it.
#[test]
fn criterion_07_two_parallels() {
    let cfg = SuiteConfig::new(SEED, 5_000, K_SET.to_vec()).unwrap();
    let report = parallel_suite(&cfg).unwrap();
    assert_eq!(
        report.failed(),
        0,
        "counterexamples: {:?}",
        report.counterexamples().take(3).collect::<Vec<_>>()
    );
    assert_eq!(report.passed(), 5_000);
    println!("criterion 7 (two parallels): PASS 5000 configurations, endpoint match 1e-9");
}

/// Criterion 8: the two angle measures agree exactly when k = 1 and
/// split as computed when k = 2; pullback triangle sums stay below pi.
#[test]
fn criterion_08_angle_measures() {
    let m1 = Model::new(1.0).unwrap();
    for i in 0..1_000u64 {
        let mut rng = stream(0x08, i);
        let base = sample::compact_point(&mut rng);
        let (t1, t2) = loop {
            let t1 = sample::compact_point(&mut rng);
            let t2 = sample::compact_point(&mut rng);
            if !m1.points_coincide(base, t1)
                && !m1.points_coincide(base, t2)
                && !m1.points_coincide(t1, t2)
            {
                break (t1, t2);
            }
        };
        let r1 = tangent_ray(&m1, &line_through(&m1, base, t1).unwrap(), base, t1).unwrap();
        let r2 = tangent_ray(&m1, &line_through(&m1, base, t2).unwrap(), base, t2).unwrap();
        let e = euclidean_angle(&m1, &r1, &r2).unwrap();
        let g = pullback_angle(&m1, &r1, &r2).unwrap();
        assert!((e - g).abs() < 1e-12, "k=1 measures split: {e} vs {g}");
    }

    // At k = 2 a ray of Euclidean slope -1 and a horizontal ray meet at
    // pi/4 on the page but at arctan 2 through the squeeze pullback.
    let m2 = Model::new(2.0).unwrap();
    let at = Point::new(0.0, 1.0).unwrap();
    let flat = HLine::elliptic(0.0, 2.0).unwrap();
    let tilted = HLine::elliptic(-4.0, 20f64.sqrt()).unwrap();
    let ahead = |line: &HLine| {
        let t = ruler(&m2, line, at).unwrap();
        ruler_inverse(&m2, line, t + 0.5).unwrap()
    };
    let r1 = tangent_ray(&m2, &flat, at, ahead(&flat)).unwrap();
    let r2 = tangent_ray(&m2, &tilted, at, ahead(&tilted)).unwrap();
    let e = euclidean_angle(&m2, &r1, &r2).unwrap();
    let g = pullback_angle(&m2, &r1, &r2).unwrap();
    assert!((e - std::f64::consts::FRAC_PI_4).abs() < 1e-12, "euclidean {e}");
    assert!((g - 2f64.atan()).abs() < 1e-12, "pullback {g}");

    for (ki, &k) in K_SET.iter().enumerate() {
        let m = Model::new(k).unwrap();
        let mut done = 0u64;
        let mut draw = 0u64;
        while done < 1_000 {
            let mut rng = stream(0x88, (ki as u64) << 32 | draw);
            draw += 1;
            let a = sample::compact_point(&mut rng);
            let b = sample::compact_point(&mut rng);
            let c = sample::compact_point(&mut rng);
            let Ok(angles) = triangle_angles(&m, a, b, c) else {
                continue;
            };
            let sum: f64 = angles.iter().map(|x| x.pullback).sum();
            assert!(
                sum < std::f64::consts::PI,
                "k={k} triangle sum {sum} reached pi"
            );
            done += 1;
        }
    }
    println!("criterion 8 (angle measures): PASS k=1 agreement, k=2 split, 5000 angle sums < pi");
}

/// Criterion 9: verification runs are deterministic and the CLI pins
/// its worked distance. Exercised through the installed binary.
#[test]
fn criterion_09_determinism() {
    let exe = env!("CARGO_BIN_EXE_halfplane");
    let dir = tempfile::tempdir().unwrap();
    let r1 = dir.path().join("a.jsonl");
    let r2 = dir.path().join("b.jsonl");
    for path in [&r1, &r2] {
        let out = Command::new(exe)
            .args(["verify", "--seed", "42", "--samples", "300", "--k", "0.5,1,2"])
            .arg("--report")
            .arg(path)
            .output()
            .unwrap();
        assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    }
    let b1 = std::fs::read(&r1).unwrap();
    let b2 = std::fs::read(&r2).unwrap();
    assert!(!b1.is_empty());
    assert_eq!(b1, b2, "report bodies differ between identical runs");

    let out = Command::new(exe)
        .args(["dist", "--k", "2", "0", "1", "3", "1"])
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "1.38629436112\n");
    println!("criterion 9 (determinism): PASS byte-identical reports + pinned distance");
}

/// Criterion 10: at k = 1 every construction agrees with a classical
/// half-plane reference written independently below, to 1e-12
/// relative, on 2,000 samples.
#[test]
fn criterion_10_classical_reduction() {
    let m = Model::new(1.0).unwrap();
    for i in 0..2_000u64 {
        let mut rng = stream(0x10, i);

        // Pairs the plain-arithmetic reference resolves at 1e-12:
        // compact coordinates, clear of the arcosh cancellation zone,
        // abscissas either well separated or (every tenth draw)
        // identical so the vertical branch is also compared.
        let (p, q) = loop {
            let p = sample::compact_point(&mut rng);
            let q = if i.is_multiple_of(10) {
                Point::new(p.x(), sample::log_uniform(&mut rng, 0.2, 5.0)).unwrap()
            } else {
                sample::compact_point(&mut rng)
            };
            if m.points_coincide(p, q) {
                continue;
            }
            let split = (p.x() - q.x()).abs();
            if reference::cosh_gap(xy(p), xy(q)) >= 1e-4 && (split == 0.0 || split >= 0.1) {
                break (p, q);
            }
        };
        let d = distance(&m, p, q);
        let d_ref = reference::distance(xy(p), xy(q));
        assert!(rel_close(d, d_ref, 1e-12), "distance {d} vs reference {d_ref}");

        let line = line_through(&m, p, q).unwrap();
        match (line, reference::line(xy(p), xy(q))) {
            (HLine::Vertical { p: x0 }, reference::Line::Vertical(xr)) => {
                assert!(rel_close(x0, xr, 1e-12));
            }
            (l @ HLine::Elliptic { .. }, reference::Line::Semicircle { c, r }) => {
                let (lc, la) = l.elliptic_params().unwrap();
                assert!(rel_close(lc, c, 1e-12), "center {lc} vs {c}");
                assert!(rel_close(la, r, 1e-12), "radius {la} vs {r}");
            }
            // The two vertical cuts use slightly different tolerance
            // envelopes; a split is legitimate only on their boundary.
            (got, want) => assert!(
                (p.x() - q.x()).abs() < 5e-9,
                "variant split away from the tolerance boundary: {got:?} vs {want:?}"
            ),
        }

        // Ruler differences are distances, measured by the reference.
        let t1 = sample::uniform(&mut rng, -10.0, 10.0);
        let dt = sample::uniform(&mut rng, 0.05, 10.0);
        let a = ruler_inverse(&m, &line, t1).unwrap();
        let b = ruler_inverse(&m, &line, t1 + dt).unwrap();
        let gap = (ruler(&m, &line, b).unwrap() - ruler(&m, &line, a).unwrap()).abs();
        let gap_ref = reference::distance(xy(a), xy(b));
        assert!(rel_close(gap, gap_ref, 1e-12), "ruler gap {gap} vs {gap_ref}");

        // Intersections of well-crossing semicircle pairs.
        let c1 = sample::uniform(&mut rng, -5.0, 5.0);
        let r1 = sample::uniform(&mut rng, 1.0, 6.0);
        let c2 = sample::uniform(&mut rng, -5.0, 5.0);
        let r2 = sample::uniform(&mut rng, 1.0, 6.0);
        if let Some((x, y)) = reference::circle_crossing(c1, r1, c2, r2) {
            if y > 0.2 * r1.min(r2) && (c1 - c2).abs() > 0.5 {
                let l1 = HLine::elliptic(c1, r1).unwrap();
                let l2 = HLine::elliptic(c2, r2).unwrap();
                let hit = intersect(&m, &l1, &l2).unwrap().unwrap_or_else(|| {
                    panic!("reference crosses at ({x}, {y}) but intersect found nothing")
                });
                assert!(rel_close(hit.x(), x, 1e-12), "x {} vs {x}", hit.x());
                assert!(rel_close(hit.y(), y, 1e-12), "y {} vs {y}", hit.y());
            }
        }

        // Ideal endpoints read off the algebra directly. `c + r` can
        // cancel, so the comparison scale is the circle itself, not
        // the endpoint value.
        if let (
            (IdealEndpoint::OnAxis { x: lo }, IdealEndpoint::OnAxis { x: hi }),
            reference::Line::Semicircle { c, r },
        ) = (ideal_endpoints(&line), reference::line(xy(p), xy(q)))
        {
            let scale = c.abs() + r;
            assert!((lo - (c - r)).abs() <= 1e-12 * scale, "left {lo} vs {}", c - r);
            assert!((hi - (c + r)).abs() <= 1e-12 * scale, "right {hi} vs {}", c + r);
        }
    }
    println!("criterion 10 (classical reduction): PASS 2000 samples at 1e-12 vs reference");
}

fn xy(p: Point) -> (f64, f64) {
    (p.x(), p.y())
}

/// A from-scratch classical Poincare half-plane: textbook formulas,
/// no shared helpers, deliberately plain arithmetic.
mod reference {
    #[derive(Debug)]
    pub enum Line {
        Vertical(f64),
        Semicircle { c: f64, r: f64 },
    }

    /// Perpendicular-bisector construction of the geodesic through two
    /// points, as a difference of squared norms.
    pub fn line((x1, y1): (f64, f64), (x2, y2): (f64, f64)) -> Line {
        if (x1 - x2).abs() < 1e-9 {
            return Line::Vertical(x1);
        }
        let c = (x2 * x2 + y2 * y2 - x1 * x1 - y1 * y1) / (2.0 * (x2 - x1));
        let r = ((x1 - c) * (x1 - c) + y1 * y1).sqrt();
        Line::Semicircle { c, r }
    }

    /// The quantity `cosh d - 1`; tiny values flag pairs too close for
    /// the arcosh identity to resolve at the tested precision.
    pub fn cosh_gap((x1, y1): (f64, f64), (x2, y2): (f64, f64)) -> f64 {
        ((x2 - x1) * (x2 - x1) + (y2 - y1) * (y2 - y1)) / (2.0 * y1 * y2)
    }

    /// Classical distance through the arcosh identity.
    pub fn distance(p: (f64, f64), q: (f64, f64)) -> f64 {
        (1.0 + cosh_gap(p, q)).acosh()
    }

    /// Upper crossing of two full circles centered on the axis, if the
    /// radical-line abscissa falls inside the first circle.
    pub fn circle_crossing(c1: f64, r1: f64, c2: f64, r2: f64) -> Option<(f64, f64)> {
        if (c1 - c2).abs() < 1e-12 {
            return None;
        }
        let x = (r1 * r1 - r2 * r2 + c2 * c2 - c1 * c1) / (2.0 * (c2 - c1));
        let y2 = r1 * r1 - (x - c1) * (x - c1);
        if y2 <= 0.0 {
            return None;
        }
        Some((x, y2.sqrt()))
    }
}
