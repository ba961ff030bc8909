//! Through any point off a line pass exactly two parallels, each
//! sharing one ideal endpoint with the base line. Lines aimed past
//! them still miss the base line without sharing an endpoint, so
//! "disjoint" and "parallel" come apart: the Euclidean parallel
//! postulate fails the way it should in a hyperbolic plane.

use halfplane::geodesic::{contains, line_through};
use halfplane::incidence::{are_parallel, ideal_endpoints, intersect, parallels_through};
use halfplane::{HLine, Model, Point};

fn main() -> halfplane::Result<()> {
    let m = Model::new(1.0)?;
    let base = HLine::elliptic(0.0, 1.0)?;
    let p = Point::new(3.0, 1.0)?;

    let (e1, e2) = ideal_endpoints(&base);
    println!("base line: {base:?} with ideal endpoints {e1}, {e2}");
    println!("external point: ({}, {})\n", p.x(), p.y());

    let [through_left, through_right] = parallels_through(&m, &base, p)?;
    for (name, par) in [("left", &through_left), ("right", &through_right)] {
        let (f1, f2) = ideal_endpoints(par);
        println!("parallel through the {name} endpoint: {par:?}");
        println!("  ideal endpoints {f1}, {f2}");
        println!("  meets base line: {:?}", intersect(&m, par, &base)?);
        println!("  parallel to base: {}", are_parallel(&m, par, &base)?);
    }

    // A third line through p, steeper than both parallels, stays clear
    // of the base line while sharing neither of its endpoints: disjoint
    // without being parallel.
    let beyond = line_through(&m, p, Point::new(2.0, 0.5)?)?;
    println!("\ndisjoint non-parallel through p: {beyond:?}");
    println!("  contains p: {}", contains(&m, &beyond, p));
    println!("  meets base line: {:?}", intersect(&m, &beyond, &base)?);
    println!("  parallel to base: {}", are_parallel(&m, &beyond, &base)?);

    Ok(())
}
