//! The line-oriented scene format.
//!
//! ```text
//! # comment
//! ball b1 0 0 1
//! ball b2 3/2 0 1
//! region R = { b1 b2 }
//! point p 1 0
//! ```
//!
//! Balls, regions and points share one namespace. A scene without any ball
//! gets the unit ball at the origin under [`DEFAULT_BALL_ID`], so every
//! scene has at least one ball.

use std::collections::BTreeMap;
use std::fmt;

use crate::geom::{Ball, PointClass, Region};
use crate::rat::Rat;

use super::diag::{tokenize, Diagnostic, DiagnosticKind};

pub const DEFAULT_BALL_ID: &str = "_ball";

/// Names with a fixed meaning in queries.
const RESERVED: [&str; 2] = ["V", "Λ"];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Entity {
    Ball(usize),
    Region(usize),
    Point(usize),
}

impl Entity {
    pub fn kind(self) -> &'static str {
        match self {
            Entity::Ball(_) => "ball",
            Entity::Region(_) => "region",
            Entity::Point(_) => "point",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Scene {
    balls: Vec<(String, Ball)>,
    regions: Vec<(String, Vec<String>)>,
    points: Vec<(String, PointClass)>,
    index: BTreeMap<String, Entity>,
}

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl Scene {
    pub fn new() -> Self {
        Scene::default()
    }

    fn claim(&mut self, id: &str, e: Entity) -> Result<(), String> {
        if !is_identifier(id) || RESERVED.contains(&id) {
            return Err(format!("`{id}` is not a valid identifier"));
        }
        if let Some(prev) = self.index.get(id) {
            return Err(format!("duplicate id `{id}` (already declared as a {})", prev.kind()));
        }
        self.index.insert(id.to_string(), e);
        Ok(())
    }

    pub fn add_ball(&mut self, id: &str, ball: Ball) -> Result<(), String> {
        self.claim(id, Entity::Ball(self.balls.len()))?;
        self.balls.push((id.to_string(), ball));
        Ok(())
    }

    pub fn add_point(&mut self, id: &str, p: PointClass) -> Result<(), String> {
        self.claim(id, Entity::Point(self.points.len()))?;
        self.points.push((id.to_string(), p));
        Ok(())
    }

    /// Register a region over already declared balls.
    pub fn add_region(&mut self, id: &str, members: &[&str]) -> Result<(), String> {
        if members.is_empty() {
            return Err("a region needs at least one ball".into());
        }
        for (i, m) in members.iter().enumerate() {
            match self.index.get(*m) {
                Some(Entity::Ball(_)) => {}
                Some(e) => return Err(format!("`{m}` is a {}, not a ball", e.kind())),
                None => return Err(format!("undeclared ball `{m}`")),
            }
            if members[..i].contains(m) {
                return Err(format!("ball `{m}` listed twice"));
            }
        }
        self.claim(id, Entity::Region(self.regions.len()))?;
        self.regions
            .push((id.to_string(), members.iter().map(|m| m.to_string()).collect()));
        Ok(())
    }

    /// Add the default ball if no ball is declared.
    pub fn ensure_ball(&mut self) {
        if self.balls.is_empty() {
            let mut id = DEFAULT_BALL_ID.to_string();
            while self.index.contains_key(&id) {
                id.push('_');
            }
            self.add_ball(&id, Ball::new(0, 0, 1).expect("positive"))
                .expect("fresh id");
        }
    }

    pub fn balls(&self) -> &[(String, Ball)] {
        &self.balls
    }

    pub fn regions(&self) -> &[(String, Vec<String>)] {
        &self.regions
    }

    pub fn points(&self) -> &[(String, PointClass)] {
        &self.points
    }

    pub fn lookup(&self, id: &str) -> Option<Entity> {
        self.index.get(id).copied()
    }

    pub fn ball(&self, id: &str) -> Option<&Ball> {
        match self.lookup(id)? {
            Entity::Ball(i) => Some(&self.balls[i].1),
            _ => None,
        }
    }

    pub fn point(&self, id: &str) -> Option<&PointClass> {
        match self.lookup(id)? {
            Entity::Point(i) => Some(&self.points[i].1),
            _ => None,
        }
    }

    /// Indices into [`Scene::balls`] of a region's members.
    pub fn region_members(&self, region: usize) -> Vec<usize> {
        self.regions[region]
            .1
            .iter()
            .map(|m| match self.index[m] {
                Entity::Ball(i) => i,
                _ => unreachable!("region members are balls"),
            })
            .collect()
    }

    pub fn region_value(&self, region: usize) -> Region {
        let balls = self
            .region_members(region)
            .into_iter()
            .map(|i| self.balls[i].1.clone())
            .collect();
        Region::new(balls).expect("regions are nonempty")
    }

    /// A ball read as a one-ball region, or a declared region.
    pub fn as_region(&self, id: &str) -> Option<Region> {
        match self.lookup(id)? {
            Entity::Ball(i) => Some(Region::from_ball(self.balls[i].1.clone())),
            Entity::Region(i) => Some(self.region_value(i)),
            Entity::Point(_) => None,
        }
    }

    /// The point of a ball (its center) or a declared point.
    pub fn as_point(&self, id: &str) -> Option<PointClass> {
        match self.lookup(id)? {
            Entity::Ball(i) => Some(self.balls[i].1.point()),
            Entity::Point(i) => Some(self.points[i].1.clone()),
            Entity::Region(_) => None,
        }
    }
}

/// Canonical text: balls, then points, then regions.
impl fmt::Display for Scene {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (id, b) in &self.balls {
            writeln!(f, "ball {id} {} {} {}", b.cx(), b.cy(), b.r())?;
        }
        for (id, p) in &self.points {
            writeln!(f, "point {id} {} {}", p.x, p.y)?;
        }
        for (id, members) in &self.regions {
            writeln!(f, "region {id} = {{ {} }}", members.join(" "))?;
        }
        Ok(())
    }
}

struct Line<'a> {
    no: usize,
    text: &'a str,
    toks: Vec<(String, usize)>,
}

impl Line<'_> {
    fn diag(&self, kind: DiagnosticKind, msg: impl Into<String>, col: usize) -> Diagnostic {
        Diagnostic::new(kind, msg, self.no, col, self.text)
    }

    fn end_col(&self) -> usize {
        self.text.split('#').next().unwrap_or("").trim_end().chars().count() + 1
    }

    fn tok(&self, i: usize, what: &str) -> Result<&(String, usize), Diagnostic> {
        self.toks
            .get(i)
            .ok_or_else(|| self.diag(DiagnosticKind::Syntax, format!("expected {what}"), self.end_col()))
    }

    fn rat(&self, i: usize, what: &str) -> Result<Rat, Diagnostic> {
        let (t, col) = self.tok(i, what)?;
        t.parse()
            .map_err(|_| self.diag(DiagnosticKind::Syntax, format!("expected {what}, found `{t}`"), *col))
    }

    fn no_trailing(&self, n: usize) -> Result<(), Diagnostic> {
        match self.toks.get(n) {
            Some((t, col)) => Err(self.diag(DiagnosticKind::Syntax, format!("unexpected `{t}`"), *col)),
            None => Ok(()),
        }
    }

    fn claim_err(&self, msg: String, col: usize) -> Diagnostic {
        let kind = if msg.starts_with("duplicate") {
            DiagnosticKind::DuplicateId
        } else {
            DiagnosticKind::Syntax
        };
        self.diag(kind, msg, col)
    }
}

pub fn parse_scene(text: &str) -> Result<Scene, Diagnostic> {
    let mut scene = Scene::new();
    for (i, raw) in text.lines().enumerate() {
        let line = Line {
            no: i + 1,
            text: raw,
            toks: tokenize(raw),
        };
        let Some((head, head_col)) = line.toks.first() else {
            continue;
        };
        match head.as_str() {
            "ball" => {
                let (id, id_col) = line.tok(1, "a ball id")?;
                let cx = line.rat(2, "a center x coordinate")?;
                let cy = line.rat(3, "a center y coordinate")?;
                let r = line.rat(4, "a radius")?;
                line.no_trailing(5)?;
                let ball = Ball::new(cx, cy, r).map_err(|e| {
                    line.diag(DiagnosticKind::InvalidValue, e.to_string(), line.toks[4].1)
                })?;
                scene.add_ball(id, ball).map_err(|m| line.claim_err(m, *id_col))?;
            }
            "point" => {
                let (id, id_col) = line.tok(1, "a point id")?;
                let x = line.rat(2, "an x coordinate")?;
                let y = line.rat(3, "a y coordinate")?;
                line.no_trailing(4)?;
                scene
                    .add_point(id, PointClass::new(x, y))
                    .map_err(|m| line.claim_err(m, *id_col))?;
            }
            "region" => parse_region(&line, &mut scene)?,
            other => {
                return Err(line.diag(
                    DiagnosticKind::Syntax,
                    format!("unknown declaration `{other}`; expected ball, region or point"),
                    *head_col,
                ))
            }
        }
    }
    scene.ensure_ball();
    Ok(scene)
}

fn parse_region(line: &Line<'_>, scene: &mut Scene) -> Result<(), Diagnostic> {
    let (id, id_col) = line.tok(1, "a region id")?;
    let expect = |i: usize, sym: &str| -> Result<(), Diagnostic> {
        let (t, col) = line.tok(i, &format!("`{sym}`"))?;
        if t != sym {
            return Err(line.diag(DiagnosticKind::Syntax, format!("expected `{sym}`, found `{t}`"), *col));
        }
        Ok(())
    };
    expect(2, "=")?;
    expect(3, "{")?;
    let mut members: Vec<&str> = Vec::new();
    let mut i = 4;
    loop {
        let (t, col) = line.tok(i, "a ball id or `}`")?;
        if t == "}" {
            break;
        }
        match scene.lookup(t) {
            Some(Entity::Ball(_)) => {}
            Some(e) => {
                return Err(line.diag(
                    DiagnosticKind::WrongKind,
                    format!("`{t}` is a {}, not a ball", e.kind()),
                    *col,
                ))
            }
            None => {
                let kind = if is_identifier(t) {
                    DiagnosticKind::UnknownIdentifier
                } else {
                    DiagnosticKind::Syntax
                };
                return Err(line.diag(kind, format!("undeclared ball `{t}`"), *col));
            }
        }
        if members.contains(&t.as_str()) {
            return Err(line.diag(DiagnosticKind::DuplicateId, format!("ball `{t}` listed twice"), *col));
        }
        members.push(t);
        i += 1;
    }
    if members.is_empty() {
        return Err(line.diag(DiagnosticKind::Syntax, "a region needs at least one ball", line.toks[i].1));
    }
    line.no_trailing(i + 1)?;
    scene.add_region(id, &members).map_err(|m| line.claim_err(m, *id_col))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_ball() {
        let s = parse_scene("ball b1 0 0 1").unwrap();
        assert_eq!(s.balls().len(), 1);
        assert_eq!(s.ball("b1"), Some(&Ball::new(0, 0, 1).unwrap()));
    }

    #[test]
    fn undeclared_member_points_at_it() {
        let d = parse_scene("ball b1 0 0 1\nregion R = { b1 bX }").unwrap_err();
        assert_eq!((d.line, d.column), (2, 17));
        assert_eq!(d.token(), "bX");
        assert_eq!(d.kind, DiagnosticKind::UnknownIdentifier);
    }

    #[test]
    fn zero_radius_rejected() {
        let d = parse_scene("ball b1 0 0 0").unwrap_err();
        assert_eq!(d.kind, DiagnosticKind::InvalidValue);
        assert!(d.message.contains("radius must be positive"));
        assert_eq!(d.column, 13);
    }

    #[test]
    fn duplicates_across_kinds() {
        let d = parse_scene("ball a 0 0 1\npoint a 1 1").unwrap_err();
        assert_eq!(d.kind, DiagnosticKind::DuplicateId);
        assert_eq!((d.line, d.column), (2, 7));
    }

    #[test]
    fn rationals_comments_and_spacing() {
        let s = parse_scene("# scene\nball b -1/2 3/4 5/2 # trailing\n\nregion R={b}\npoint p 1 -2").unwrap();
        let b = s.ball("b").unwrap();
        assert_eq!(b.cx(), &Rat::new(-1, 2));
        assert_eq!(b.r(), &Rat::new(5, 2));
        assert_eq!(s.point("p"), Some(&PointClass::new(1, -2)));
        assert_eq!(s.as_region("R").unwrap().balls().len(), 1);
    }

    #[test]
    fn empty_scene_gets_default_ball() {
        let s = parse_scene("# nothing\npoint p 0 0").unwrap();
        assert_eq!(s.balls().len(), 1);
        assert_eq!(s.balls()[0].0, DEFAULT_BALL_ID);
    }

    #[test]
    fn round_trip() {
        let text = "ball a 0 0 1\npoint p 1/3 0\nball b 2 0 3/2\nregion R = { a b }\nregion S = { b }\n";
        let s = parse_scene(text).unwrap();
        let again = parse_scene(&s.to_string()).unwrap();
        assert_eq!(s, again);
    }

    #[test]
    fn syntax_errors() {
        for (text, col) in [
            ("ball b1 0 0", 12),
            ("ball b1 0 x 1", 11),
            ("circle c 0 0 1", 1),
            ("ball b1 0 0 1 9", 15),
            ("ball b 0 0 1\nregion R = { }", 14),
            ("ball b 0 0 1\nregion R { b }", 10),
            ("ball 1b 0 0 1", 6),
            ("ball V 0 0 1", 6),
        ] {
            let d = parse_scene(text).unwrap_err();
            assert_eq!(d.column, col, "{text}: {d}");
        }
    }
}
