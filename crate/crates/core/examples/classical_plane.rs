//! The classical upper half-plane is the k = 1 model: geodesics are
//! vertical rays and semicircles centered on the x-axis, and distance
//! satisfies the arcosh identity cosh d = 1 + |PQ|^2 / (2 y1 y2).

use halfplane::geodesic::line_through;
use halfplane::metric::{classical_distance, distance};
use halfplane::{Model, Point};

fn main() -> halfplane::Result<()> {
    let m = Model::new(1.0)?;

    let p = Point::new(-1.0, 1.0)?;
    let q = Point::new(1.0, 1.0)?;
    let line = line_through(&m, p, q)?;
    let (c, a) = line.elliptic_params().unwrap();
    println!("geodesic through (-1,1) and (1,1): semicircle c={c} r={a}");

    let d = distance(&m, p, q);
    let gap = ((q.x() - p.x()).powi(2) + (q.y() - p.y()).powi(2)) / (2.0 * p.y() * q.y());
    println!("distance            = {d:.15}");
    println!("arcosh(1 + gap)     = {:.15}", (1.0 + gap).acosh());
    println!("classical_distance  = {:.15}", classical_distance(p, q));

    // Points sharing an abscissa ride a vertical ray; the distance is
    // the log of the ordinate ratio.
    let low = Point::new(2.0, 1.0)?;
    let high = Point::new(2.0, std::f64::consts::E)?;
    let v = line_through(&m, low, high)?;
    println!("\ngeodesic through (2,1) and (2,e): {v:?}");
    println!("distance = {} (ln of the ordinate ratio)", distance(&m, low, high));

    Ok(())
}
