//! One point pair, many squeeze factors: the carrier through the same
//! two points flattens as k grows, yet every carrier measures the same
//! distance, and the ruler turns each one into a copy of the real line.

use halfplane::geodesic::{line_through, ruler, ruler_inverse};
use halfplane::metric::distance;
use halfplane::{Model, Point};

fn main() -> halfplane::Result<()> {
    let p = Point::new(0.0, 1.0)?;
    let q = Point::new(3.0, 1.0)?;

    println!("carriers through (0,1) and (3,1):");
    for k in [0.25, 0.5, 1.0, 2.0, 10.0] {
        let m = Model::new(k)?;
        let line = line_through(&m, p, q)?;
        let (c, a) = line.elliptic_params().unwrap();
        let apex = ruler_inverse(&m, &line, 0.0)?;
        println!(
            "  k={k:<5} c={c:<5} a={a:<6} apex height={:<9.6} distance={:.12}",
            apex.y(),
            distance(&m, p, q)
        );
    }

    // Ruler coordinates are signed arc length along the carrier; the
    // inverse walks the carrier at unit speed.
    let m = Model::new(2.0)?;
    let line = line_through(&m, p, q)?;
    let tp = ruler(&m, &line, p)?;
    let tq = ruler(&m, &line, q)?;
    println!("\nruler coordinates at k=2: t(p)={tp:.12} t(q)={tq:.12}");
    println!("|t(p)-t(q)| = {:.12} = distance", (tp - tq).abs());

    println!("\nunit-speed walk from p toward q:");
    for step in 0..=4 {
        let t = tp + (tq - tp) * f64::from(step) / 4.0;
        let w = ruler_inverse(&m, &line, t)?;
        println!("  t={t:+.4}  ({:+.6}, {:.6})", w.x(), w.y());
    }

    Ok(())
}
