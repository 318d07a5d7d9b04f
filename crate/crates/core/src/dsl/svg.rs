//! Static SVG drawings of scenes.
//!
//! Output depends only on the scene and the options: coordinates are
//! printed with fixed precision, elements follow declaration order and no
//! timestamps or ids are generated.

use std::fmt::Write as _;

use crate::rat::Rat;

use super::scene::Scene;

const PALETTE: [&str; 8] = [
    "#4e79a7", "#f28e2b", "#59a14f", "#e15759", "#b07aa1", "#76b7b2", "#edc948", "#9c755f",
];

#[derive(Debug, Clone, PartialEq)]
pub struct SvgOptions {
    /// Margin around the ball extents, as a fraction of the larger side.
    pub margin: f64,
    /// Pixel width of the image; the height follows the aspect ratio.
    pub width: u32,
    pub labels: bool,
}

impl Default for SvgOptions {
    fn default() -> Self {
        SvgOptions {
            margin: 0.05,
            width: 480,
            labels: true,
        }
    }
}

/// Fixed-precision number without trailing zeros or negative zero.
fn num(v: f64) -> String {
    let s = format!("{v:.4}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" {
        "0".into()
    } else {
        s.to_string()
    }
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

pub fn render_svg(scene: &Scene, opts: &SvgOptions) -> String {
    // extents in scene coordinates; y is flipped on output
    let mut lo_x: Option<Rat> = None;
    let mut hi_x: Option<Rat> = None;
    let mut lo_y: Option<Rat> = None;
    let mut hi_y: Option<Rat> = None;
    let mut grow = |x0: Rat, y0: Rat, x1: Rat, y1: Rat| {
        lo_x = Some(lo_x.take().map_or(x0.clone(), |v| v.min(x0)));
        lo_y = Some(lo_y.take().map_or(y0.clone(), |v| v.min(y0)));
        hi_x = Some(hi_x.take().map_or(x1.clone(), |v| v.max(x1)));
        hi_y = Some(hi_y.take().map_or(y1.clone(), |v| v.max(y1)));
    };
    for (_, b) in scene.balls() {
        grow(b.cx() - b.r(), b.cy() - b.r(), b.cx() + b.r(), b.cy() + b.r());
    }
    for (_, p) in scene.points() {
        grow(p.x.clone(), p.y.clone(), p.x.clone(), p.y.clone());
    }
    let f = |r: Option<Rat>| r.map_or(0.0, |v| v.to_f64());
    let (x0, y0, x1, y1) = (f(lo_x), f(lo_y), f(hi_x), f(hi_y));
    let side = (x1 - x0).max(y1 - y0).max(1e-9);
    let m = side * opts.margin;
    let (vx, vy, vw, vh) = (x0 - m, -y1 - m, (x1 - x0) + 2.0 * m, (y1 - y0) + 2.0 * m);
    let height = (opts.width as f64 * vh / vw).round().max(1.0) as u32;
    let stroke = num(side / 200.0);

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="{} {} {} {}" width="{}" height="{}">"#,
        num(vx),
        num(vy),
        num(vw),
        num(vh),
        opts.width,
        height
    );
    out.push_str("<style>\n");
    let _ = writeln!(out, "circle {{ fill: none; stroke: #222; stroke-width: {stroke}; }}");
    for (i, (id, _)) in scene.regions().iter().enumerate() {
        let _ = writeln!(
            out,
            ".region-{i} {{ fill: {}; fill-opacity: 0.35; }} /* {} */",
            PALETTE[i % PALETTE.len()],
            escape(id)
        );
    }
    let _ = writeln!(out, ".point {{ stroke: #c00; stroke-width: {stroke}; }}");
    let _ = writeln!(out, "text {{ font: {}px sans-serif; fill: #222; }}", num(side / 30.0));
    out.push_str("</style>\n");

    let members: Vec<Vec<usize>> = (0..scene.regions().len()).map(|r| scene.region_members(r)).collect();
    for (i, (id, b)) in scene.balls().iter().enumerate() {
        let classes: Vec<String> = members
            .iter()
            .enumerate()
            .filter(|(_, ms)| ms.contains(&i))
            .map(|(r, _)| format!("region-{r}"))
            .collect();
        let class = if classes.is_empty() {
            String::new()
        } else {
            format!(r#" class="{}""#, classes.join(" "))
        };
        let (cx, cy, r) = (b.cx().to_f64(), -b.cy().to_f64(), b.r().to_f64());
        let _ = writeln!(
            out,
            r#"<circle id="ball-{}" cx="{}" cy="{}" r="{}"{class}/>"#,
            escape(id),
            num(cx),
            num(cy),
            num(r)
        );
        if opts.labels {
            let _ = writeln!(out, r#"<text x="{}" y="{}">{}</text>"#, num(cx), num(cy), escape(id));
        }
    }
    let arm = side / 80.0;
    for (id, p) in scene.points() {
        let (x, y) = (p.x.to_f64(), -p.y.to_f64());
        let _ = writeln!(
            out,
            r#"<path class="point" id="point-{}" d="M {} {} L {} {} M {} {} L {} {}"/>"#,
            escape(id),
            num(x - arm),
            num(y - arm),
            num(x + arm),
            num(y + arm),
            num(x - arm),
            num(y + arm),
            num(x + arm),
            num(y - arm)
        );
        if opts.labels {
            let _ = writeln!(out, r#"<text x="{}" y="{}">{}</text>"#, num(x + arm), num(y - arm), escape(id));
        }
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dsl::parse_scene;

    #[test]
    fn one_ball_one_circle() {
        let svg = render_svg(&parse_scene("ball b1 0 0 1").unwrap(), &SvgOptions::default());
        assert_eq!(svg.matches("<circle").count(), 1);
        assert!(svg.contains(r#"viewBox="-1.1 -1.1 2.2 2.2""#), "{svg}");
    }

    #[test]
    fn two_regions_two_classes() {
        let s = parse_scene("ball a 0 0 1\nball b 3 0 1\nregion R = { a }\nregion S = { b }").unwrap();
        let svg = render_svg(&s, &SvgOptions::default());
        assert!(svg.contains(r#"class="region-0""#) && svg.contains(r#"class="region-1""#));
        assert_eq!(svg.matches("fill-opacity").count(), 2);
    }

    #[test]
    fn deterministic_bytes() {
        let s = parse_scene("ball a 1/3 0 1\npoint p 2 2\nregion R = { a }").unwrap();
        let o = SvgOptions::default();
        assert_eq!(render_svg(&s, &o), render_svg(&s, &o));
    }

    #[test]
    fn numbers() {
        assert_eq!(num(-0.00001), "0");
        assert_eq!(num(1.5), "1.5");
        assert_eq!(num(2.0), "2");
        assert_eq!(num(1.0 / 3.0), "0.3333");
    }
}
