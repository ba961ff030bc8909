//! Each model carries two protractors: the Euclidean one reads tangent
//! directions as drawn, the pullback one transports them through the
//! squeeze differential first and is the measure the distance geometry
//! obeys. They agree at k = 1 and split apart elsewhere, yet some
//! angles (the right angle between a line and a vertical through its
//! apex) survive the squeeze unchanged, and the pullback angle sum of
//! every triangle stays below pi.

use halfplane::angle::{euclidean_angle, pullback_angle, tangent_ray, triangle_angles};
use halfplane::geodesic::{line_through, ruler, ruler_inverse};
use halfplane::{HLine, Model, Point};
use std::f64::consts::PI;

fn main() -> halfplane::Result<()> {
    // A vertical through the apex of an elliptic line meets it at a
    // right angle under both protractors: the squeeze map fixes the
    // horizontal and vertical directions.
    let m2 = Model::new(2.0)?;
    let wide = HLine::elliptic(1.5, 2.5)?;
    let apex = ruler_inverse(&m2, &wide, 0.0)?;
    let upright = HLine::vertical(apex.x())?;
    let along = walk_ahead(&m2, &wide, apex)?;
    let upward = Point::new(apex.x(), 2.0 * apex.y())?;
    let r_along = tangent_ray(&m2, &wide, apex, along)?;
    let r_up = tangent_ray(&m2, &upright, apex, upward)?;
    println!("k=2 apex angle between {wide:?} and {upright:?}:");
    println!("  euclidean {:.12}", euclidean_angle(&m2, &r_along, &r_up)?);
    println!("  pullback  {:.12}", pullback_angle(&m2, &r_along, &r_up)?);
    println!("  pi/2      {:.12}\n", PI / 2.0);

    // At k = 1 the two protractors are the same instrument.
    let m1 = Model::new(1.0)?;
    let at = Point::new(0.0, 1.0)?;
    let l1 = line_through(&m1, at, Point::new(2.0, 1.0)?)?;
    let l2 = line_through(&m1, at, Point::new(-1.0, 2.0)?)?;
    let r1 = tangent_ray(&m1, &l1, at, walk_ahead(&m1, &l1, at)?)?;
    let r2 = tangent_ray(&m1, &l2, at, walk_ahead(&m1, &l2, at)?)?;
    let e = euclidean_angle(&m1, &r1, &r2)?;
    let p = pullback_angle(&m1, &r1, &r2)?;
    println!("k=1 oblique angle: euclidean {e:.12}, pullback {p:.12}");
    println!("  split: {:.3e}\n", (e - p).abs());

    // At k = 2 the same crossing reads differently on the two
    // instruments. These two lines meet at (0, 1) where the page shows
    // pi/4 but the geometry measures arctan 2.
    let flat = HLine::elliptic(0.0, 2.0)?;
    let tilted = HLine::elliptic(-4.0, 20f64.sqrt())?;
    let meet = Point::new(0.0, 1.0)?;
    let rf = tangent_ray(&m2, &flat, meet, walk_ahead(&m2, &flat, meet)?)?;
    let rt = tangent_ray(&m2, &tilted, meet, walk_ahead(&m2, &tilted, meet)?)?;
    println!("k=2 crossing at (0, 1):");
    println!("  euclidean {:.12} (pi/4 = {:.12})", euclidean_angle(&m2, &rf, &rt)?, PI / 4.0);
    println!("  pullback  {:.12} (arctan 2 = {:.12})\n", pullback_angle(&m2, &rf, &rt)?, 2f64.atan());

    // Triangle angle sums fall short of pi by the defect; the squeeze
    // moves the vertexwise readings around but not the conclusion.
    let (a, b, c) = (Point::new(0.0, 1.0)?, Point::new(3.0, 1.0)?, Point::new(1.0, 2.0)?);
    for k in [0.5, 1.0, 2.0] {
        let m = Model::new(k)?;
        let angles = triangle_angles(&m, a, b, c)?;
        let sum: f64 = angles.iter().map(|x| x.pullback).sum();
        println!("k={k}: pullback angle sum {sum:.12}, defect {:.12}", PI - sum);
        assert!(sum < PI);
    }

    Ok(())
}

/// A point strictly ahead of `at` along `line`, for aiming rays.
fn walk_ahead(m: &Model, line: &HLine, at: Point) -> halfplane::Result<Point> {
    let t = ruler(m, line, at)?;
    ruler_inverse(m, line, t + 0.5)
}
