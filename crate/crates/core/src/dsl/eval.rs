use std::fmt;

use crate::geom::{
    between_points, boundary_member_at, closure_g, convexity_counterexample, ext_region, hausdorff_separation,
    interior_point_at, region_part_of, sat_interior_point, Ball, Budget, Containment3, PointClass, Region,
    RegionExpr,
};
use crate::lo::{LOModel, Name, ObjectId};

use super::diag::{Diagnostic, DiagnosticKind};
use super::query::{parse_query, Arg, NameRef, Opt, Query, QueryForm};
use super::scene::{Entity, Scene};
use super::suite::{run_suite, SuiteOptions};
use super::{EXIT_FALSE, EXIT_TRUE, EXIT_UNKNOWN};

const DEFAULT_SAMPLES: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Answer {
    True,
    False,
    Unknown,
    Value(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Evaluation {
    pub answer: Answer,
    /// Witness, exhausted depth or suite report.
    pub note: Option<String>,
}

impl Evaluation {
    fn of(b: bool) -> Self {
        Evaluation {
            answer: if b { Answer::True } else { Answer::False },
            note: None,
        }
    }

    fn noted(answer: Answer, note: impl Into<String>) -> Self {
        Evaluation {
            answer,
            note: Some(note.into()),
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self.answer {
            Answer::True | Answer::Value(_) => EXIT_TRUE,
            Answer::False => EXIT_FALSE,
            Answer::Unknown => EXIT_UNKNOWN,
        }
    }
}

impl fmt::Display for Answer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Answer::True => f.write_str("true"),
            Answer::False => f.write_str("false"),
            Answer::Unknown => f.write_str("unknown"),
            Answer::Value(v) => f.write_str(v),
        }
    }
}

impl fmt::Display for Evaluation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.note {
            None => write!(f, "{}", self.answer),
            Some(n) if n.contains('\n') => write!(f, "{}\n{}", self.answer, n.trim_end()),
            Some(n) => write!(f, "{} ({n})", self.answer),
        }
    }
}

impl From<Containment3> for Evaluation {
    fn from(c: Containment3) -> Self {
        match c {
            Containment3::Contained => Evaluation::of(true),
            Containment3::NotContained(w) => Evaluation::noted(Answer::False, format!("witness {w}")),
            Containment3::Unknown(d) => Evaluation::noted(Answer::Unknown, format!("depth {d} exhausted")),
        }
    }
}

struct Ctx<'a> {
    scene: &'a Scene,
    query: &'a Query,
}

impl Ctx<'_> {
    fn entity(&self, a: &Arg) -> Result<Entity, Diagnostic> {
        self.scene.lookup(&a.id).ok_or_else(|| {
            self.query
                .diag(DiagnosticKind::UnknownIdentifier, format!("unknown identifier `{}`", a.id), a.column)
        })
    }

    fn wrong(&self, a: &Arg, e: Entity, expected: &str) -> Diagnostic {
        self.query.diag(
            DiagnosticKind::WrongKind,
            format!("`{}` is a {}; expected {expected}", a.id, e.kind()),
            a.column,
        )
    }

    fn region(&self, a: &Arg) -> Result<Region, Diagnostic> {
        let e = self.entity(a)?;
        self.scene.as_region(&a.id).ok_or_else(|| self.wrong(a, e, "a ball or region"))
    }

    fn point(&self, a: &Arg) -> Result<PointClass, Diagnostic> {
        let e = self.entity(a)?;
        self.scene.as_point(&a.id).ok_or_else(|| self.wrong(a, e, "a ball or point"))
    }

    fn ball(&self, a: &Arg) -> Result<Ball, Diagnostic> {
        let e = self.entity(a)?;
        self.scene.ball(&a.id).cloned().ok_or_else(|| self.wrong(a, e, "a ball"))
    }

    fn budget(&self, default: u32, o: Option<Opt<u32>>) -> Result<Budget, Diagnostic> {
        let (value, column) = o.map_or((default, 1), |o| (o.value, o.column));
        Budget::new(value)
            .map_err(|_| self.query.diag(DiagnosticKind::BudgetInvalid, "budget must be at least 1", column))
    }

    /// Scene balls as the objects of a name calculus.
    fn name(&self, model: &LOModel, n: &NameRef) -> Result<Name, Diagnostic> {
        let balls = self.scene.balls();
        let pick = |f: &dyn Fn(usize) -> bool| {
            model
                .name((0..balls.len()).filter(|&i| f(i)).map(ObjectId))
                .expect("objects in range")
        };
        Ok(match n {
            NameRef::Everything => model.everything(),
            NameRef::Nothing => model.empty(),
            NameRef::Id(a) => match self.entity(a)? {
                Entity::Ball(i) => pick(&|j| j == i),
                Entity::Region(r) => {
                    let members = self.scene.region_members(r);
                    pick(&|j| members.contains(&j))
                }
                // the point as the class of scene balls concentric with it
                Entity::Point(p) => {
                    let c = &self.scene.points()[p].1;
                    pick(&|j| balls[j].1.center() == c)
                }
            },
        })
    }
}

/// Evaluate a parsed query. `budget` is the subdivision depth for
/// region-level part-of unless the query carries its own.
pub fn eval_query(scene: &Scene, query: &Query, budget: u32) -> Result<Evaluation, Diagnostic> {
    let cx = Ctx { scene, query };
    use QueryForm::*;
    Ok(match &query.form {
        Eta(a, b) => {
            let model = LOModel::new(scene.balls().len()).map_err(|e| {
                query.diag(DiagnosticKind::Evaluation, e.to_string(), 1)
            })?;
            let (a, b) = (cx.name(&model, a)?, cx.name(&model, b)?);
            Evaluation::of(model.eta(&a, &b).expect("same model"))
        }
        Pt(a, b, o) => {
            let (p, q) = (cx.region(a)?, cx.region(b)?);
            region_part_of(&p, &q, cx.budget(budget, *o)?).into()
        }
        Between(a, b, c) => Evaluation::of(between_points(&cx.point(a)?, &cx.point(b)?, &cx.point(c)?)),
        Boundary(p, q) => Evaluation::of(boundary_member_at(&cx.point(p)?, &cx.region(q)?)),
        InteriorPoint(p, q) => Evaluation::of(interior_point_at(&cx.point(p)?, &cx.region(q)?)),
        SatInterior(p, q) => {
            let (p, q) = (cx.ball(p)?, cx.region(q)?);
            sat_interior_point(&p, &q, cx.budget(budget, None)?).into()
        }
        Concent(a, b) => Evaluation::of(cx.point(a)? == cx.point(b)?),
        Ext(a, b) => Evaluation::of(ext_region(&cx.region(a)?, &cx.region(b)?)),
        Convex(q, samples) => {
            let region = cx.region(q)?;
            let n = samples.map_or(DEFAULT_SAMPLES, |o| o.value);
            if n == 0 {
                let col = samples.map_or(1, |o| o.column);
                return Err(query.diag(DiagnosticKind::InvalidValue, "samples must be at least 1", col));
            }
            match convexity_counterexample(&region, n, 0) {
                Some(w) => Evaluation::noted(
                    Answer::False,
                    format!("{} is between {} and {} but not interior", w.middle, w.first, w.last),
                ),
                // a disk union is a disk exactly when one ball holds the rest
                None if region.pruned().balls().len() == 1 => Evaluation::of(true),
                None => Evaluation::noted(Answer::Unknown, format!("no counterexample in {n} samples")),
            }
        }
        Hausdorff(a, b) => {
            let (p, q) = (cx.point(a)?, cx.point(b)?);
            let (x, y) = hausdorff_separation(&p, &q)
                .map_err(|e| query.diag(DiagnosticKind::Evaluation, e.to_string(), b.column))?;
            Evaluation {
                answer: Answer::Value(format!("{x} {y}")),
                note: None,
            }
        }
        Closure(p, q) => {
            let (p, q) = (cx.point(p)?, cx.region(q)?);
            let cl = closure_g(&RegionExpr::Balls(q)).expect("a finite region is not the whole space");
            Evaluation::of(cl.contains(&p))
        }
        Check {
            suite,
            cases,
            seed,
            budget: b,
        } => {
            let defaults = SuiteOptions::default();
            let opts = SuiteOptions {
                cases: cases.map_or(defaults.cases, |o| o.value),
                seed: seed.map_or(defaults.seed, |o| o.value),
                budget: cx.budget(defaults.budget.depth(), *b)?,
            };
            if opts.cases == 0 {
                let col = cases.map_or(1, |o| o.column);
                return Err(query.diag(DiagnosticKind::InvalidValue, "cases must be at least 1", col));
            }
            let report = run_suite(*suite, &opts);
            Evaluation::noted(
                if report.passed() { Answer::True } else { Answer::False },
                report.to_string(),
            )
        }
    })
}

/// Parse and evaluate one line.
pub fn eval_text(scene: &Scene, text: &str, budget: u32) -> Result<Evaluation, Diagnostic> {
    eval_query(scene, &parse_query(text)?, budget)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dsl::parse_scene;

    fn scene() -> Scene {
        parse_scene(
            "ball a 1 0 1\nball b 0 0 1\nball c 3 0 1\nball big 0 0 5\nball far 9 9 1\n\
             point p 1 0\npoint o 0 0\nregion R = { b }\nregion Two = { b c }",
        )
        .unwrap()
    }

    fn eval(t: &str) -> Evaluation {
        eval_text(&scene(), t, 8).unwrap_or_else(|d| panic!("{t}: {d}"))
    }

    #[test]
    fn boolean_forms() {
        for (t, expect) in [
            ("between? a b c", Answer::True),
            ("between? b a c", Answer::False),
            ("boundary? p R", Answer::True),
            ("boundary? o R", Answer::False),
            ("interior-point? o R", Answer::True),
            ("interior-point? p R", Answer::False),
            ("concent? b b", Answer::True),
            ("concent? b o", Answer::True),
            ("concent? a b", Answer::False),
            ("ext? R far", Answer::True),
            ("ext? a b", Answer::False),
            ("closure? p R", Answer::True),
            ("closure? far R", Answer::False),
            ("pt? b big", Answer::True),
            ("pt? big R", Answer::False),
            ("sat-interior? b Two", Answer::True),
            ("convex? R", Answer::True),
            ("eta a V", Answer::True),
            ("eta a Λ", Answer::False),
            ("eta Two V", Answer::False),
            ("eta b o", Answer::True),
            ("eta far o", Answer::False),
            ("eta a p", Answer::True),
        ] {
            assert_eq!(eval(t).answer, expect, "{t}");
        }
    }

    #[test]
    fn witness_and_values() {
        let e = eval("pt? big R");
        assert!(e.note.unwrap().starts_with("witness"));
        let h = eval("hausdorff o c");
        assert_eq!(h.answer, Answer::Value("B((0, 0), 3/4) B((3, 0), 3/4)".into()));
    }

    #[test]
    fn unknown_on_tangency_cover() {
        let s = parse_scene(
            "ball b1 0 0 1\nball l -9/20 -3/5 5/4\nball r 9/20 3/5 5/4\nregion R1 = { l r }",
        )
        .unwrap();
        let e = eval_text(&s, "pt? b1 R1 --budget 2", 12).unwrap();
        assert_eq!(e.answer, Answer::Unknown);
        assert_eq!(e.exit_code(), 2);
    }

    #[test]
    fn errors() {
        let s = scene();
        let d = eval_text(&s, "concent? b zz", 8).unwrap_err();
        assert_eq!((d.kind, d.column), (DiagnosticKind::UnknownIdentifier, 12));
        let d = eval_text(&s, "pt? b R --budget 0", 8).unwrap_err();
        assert_eq!((d.kind, d.column), (DiagnosticKind::BudgetInvalid, 18));
        assert_eq!(eval_text(&s, "pt? b R", 0).unwrap_err().kind, DiagnosticKind::BudgetInvalid);
        let d = eval_text(&s, "sat-interior? R R", 8).unwrap_err();
        assert_eq!(d.kind, DiagnosticKind::WrongKind);
        let d = eval_text(&s, "hausdorff b o", 8).unwrap_err();
        assert_eq!(d.kind, DiagnosticKind::Evaluation);
        let d = eval_text(&s, "between? Two a b", 8).unwrap_err();
        assert_eq!(d.kind, DiagnosticKind::WrongKind);
    }

    #[test]
    fn deterministic() {
        let s = scene();
        for t in ["convex? Two --samples 20", "pt? big Two", "hausdorff a c"] {
            assert_eq!(eval_text(&s, t, 6), eval_text(&s, t, 6));
        }
    }
}
