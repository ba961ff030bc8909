//! A line splits the plane into two convex sides. Points on opposite
//! sides are joined by segments that cross the line, points on the
//! same side by segments that do not, and a line entering a triangle
//! through one side must leave through exactly one of the other two
//! (Pasch's axiom).

use halfplane::geodesic::{between, ruler_inverse, segment_between};
use halfplane::incidence::{segment_crosses, side_of, SideLabel};
use halfplane::{HLine, Model, Point};

fn main() -> halfplane::Result<()> {
    let m = Model::new(2.0)?;
    let line = HLine::elliptic(1.5, 2.5)?;
    println!("separating line: {line:?}\n");

    // The elliptic line bounds an inside (Side2) and an outside
    // (Side1); its apex sits on neither.
    let inside = Point::new(0.5, 0.2)?;
    let outside = Point::new(5.0, 2.0)?;
    let apex = ruler_inverse(&m, &line, 0.0)?;
    for (name, p) in [("inside", inside), ("outside", outside), ("apex", apex)] {
        println!("side_of {name} ({}, {}): {:?}", p.x(), p.y(), side_of(&m, &line, p));
    }

    // Straddling points force a crossing; same-side points forbid one.
    let straddling = segment_between(&m, inside, outside)?;
    println!("\nsegment inside-outside crosses: {}", segment_crosses(&m, &straddling, &line)?);
    let also_inside = Point::new(2.0, 0.3)?;
    assert_eq!(side_of(&m, &line, also_inside), SideLabel::Side2);
    let same_side = segment_between(&m, inside, also_inside)?;
    println!("segment inside-inside crosses: {}", segment_crosses(&m, &same_side, &line)?);

    // Betweenness orders collinear points by the ruler coordinate.
    let walk: Vec<Point> = [-1.0, 0.0, 1.0]
        .iter()
        .map(|&t| ruler_inverse(&m, &line, t))
        .collect::<halfplane::Result<_>>()?;
    println!("\ncollinear points at t = -1, 0, 1 along the separating line:");
    println!("  middle between ends: {}", between(&m, walk[0], walk[1], walk[2])?);
    println!("  end between the others: {}", between(&m, walk[1], walk[0], walk[2])?);

    // Pasch: a line crossing side ab of a triangle, and no vertex,
    // leaves through exactly one of the remaining sides.
    let a = Point::new(0.0, 1.0)?;
    let b = Point::new(3.0, 1.0)?;
    let c = Point::new(1.5, 0.3)?;
    let cutter = HLine::vertical(1.0)?;
    let ab = segment_between(&m, a, b)?;
    let bc = segment_between(&m, b, c)?;
    let ca = segment_between(&m, c, a)?;
    let hits = [
        ("ab", segment_crosses(&m, &ab, &cutter)?),
        ("bc", segment_crosses(&m, &bc, &cutter)?),
        ("ca", segment_crosses(&m, &ca, &cutter)?),
    ];
    println!("\ntriangle ({}, {}), ({}, {}), ({}, {}) cut by {cutter:?}:",
        a.x(), a.y(), b.x(), b.y(), c.x(), c.y());
    for (side, hit) in hits {
        println!("  crosses {side}: {hit}");
    }
    assert!(hits[0].1, "the cutter was chosen to enter through ab");
    assert_eq!(hits[1].1 as u8 + hits[2].1 as u8, 1, "exactly one exit side");

    Ok(())
}
