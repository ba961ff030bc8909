//! Three views of the same metric: the closed form along a carrier,
//! the squeeze map into the classical plane, and a numerical
//! arc-length integral, all telling the same story. Vertical distances
//! never see k at all.

use halfplane::geodesic::{line_through, ruler};
use halfplane::metric::{arc_length_oracle, classical_distance, distance, squeeze, QuadratureSpec};
use halfplane::{Model, Point};

fn main() -> halfplane::Result<()> {
    let m = Model::new(2.0)?;
    let p = Point::new(0.0, 1.0)?;
    let q = Point::new(3.0, 1.0)?;

    let d = distance(&m, p, q);
    println!("d((0,1),(3,1)) at k=2 = {d:.15}");
    println!("ln 4                  = {:.15}", 4f64.ln());

    // The squeeze g(x,y) = (x, ky) is an isometry onto the classical
    // plane, so the distance factors through it.
    let chained = classical_distance(squeeze(&m, p), squeeze(&m, q));
    println!("through the squeeze   = {chained:.15}");

    // Independent confirmation: integrate the speed of the unit-speed
    // parametrization between the two ruler coordinates.
    let line = line_through(&m, p, q)?;
    let t0 = ruler(&m, &line, p)?;
    let t1 = ruler(&m, &line, q)?;
    let len = arc_length_oracle(&m, &line, t0.min(t1), t0.max(t1), &QuadratureSpec::default())?;
    println!("quadrature            = {len:.15}");

    println!("\nvertical distances ignore k:");
    let low = Point::new(5.0, 1.0)?;
    let high = Point::new(5.0, 2f64.exp())?;
    for k in [0.25, 1.0, 2.0, 10.0] {
        let mk = Model::new(k)?;
        println!("  k={k:<5} d((5,1),(5,e^2)) = {:.15}", distance(&mk, low, high));
    }

    Ok(())
}
