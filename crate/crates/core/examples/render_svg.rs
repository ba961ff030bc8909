//! The same scene rendered under two squeeze factors at once. The
//! elliptic line with endpoints (-1, 0) and (4, 0) is a semicircle of
//! apex 2.5 at k = 1 and a half-ellipse of apex 1.25 at k = 2; segments
//! and triangles built from the same defining points bend differently
//! under each model. One SVG group per model, one stroke color each.

use halfplane::render::{render_svg, RenderSpec, SceneObject};
use halfplane::{HLine, Model, Point};

fn main() -> halfplane::Result<()> {
    let models = [Model::new(1.0)?, Model::new(2.0)?];
    let scene = [
        SceneObject::Line(HLine::elliptic(1.5, 2.5)?),
        SceneObject::Segment {
            a: Point::new(0.0, 1.0)?,
            b: Point::new(3.0, 1.0)?,
        },
        SceneObject::Triangle {
            a: Point::new(-1.0, 0.5)?,
            b: Point::new(1.0, 2.5)?,
            c: Point::new(2.0, 0.4)?,
        },
    ];
    let spec = RenderSpec::new(-2.0, 5.0, 3.0, 800, 480, 257)?;

    let svg = render_svg(&models, &scene, &spec)?;
    let groups = svg.matches("data-k=").count();
    println!("rendered {} objects under {} models ({groups} svg groups)", scene.len(), models.len());
    assert_eq!(groups, models.len());

    let path = std::env::temp_dir().join("halfplane-squeeze.svg");
    std::fs::write(&path, &svg).map_err(|e| halfplane::Error::ReportIo {
        detail: format!("{}: {e}", path.display()),
    })?;
    println!("wrote {} ({} bytes)", path.display(), svg.len());

    Ok(())
}
