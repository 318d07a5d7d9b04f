//! One-line queries.
//!
//! ```text
//! query := "eta" name name
//!        | "pt?" id id ["--budget" int]
//!        | "between?" id id id
//!        | "boundary?" id id | "interior-point?" id id | "sat-interior?" id id
//!        | "concent?" id id | "ext?" id id
//!        | "convex?" id ["--samples" int]
//!        | "hausdorff" id id | "closure?" id id
//!        | "check" suite ["--cases" int] ["--seed" int] ["--budget" int]
//! name  := id | "V" | "Λ"
//! ```

use std::fmt;

use super::diag::{tokenize, Diagnostic, DiagnosticKind};
use super::scene::is_identifier;
use super::suite::SuiteName;

/// An identifier with the column it was written at.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arg {
    pub id: String,
    pub column: usize,
}

/// An integer option value with its column.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Opt<T> {
    pub value: T,
    pub column: usize,
}

/// A name of the query's name calculus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NameRef {
    Id(Arg),
    /// Every ball of the scene.
    Everything,
    /// The empty name.
    Nothing,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum QueryForm {
    Eta(NameRef, NameRef),
    Pt(Arg, Arg, Option<Opt<u32>>),
    Between(Arg, Arg, Arg),
    Boundary(Arg, Arg),
    InteriorPoint(Arg, Arg),
    SatInterior(Arg, Arg),
    Concent(Arg, Arg),
    Ext(Arg, Arg),
    Convex(Arg, Option<Opt<usize>>),
    Hausdorff(Arg, Arg),
    Closure(Arg, Arg),
    Check {
        suite: SuiteName,
        cases: Option<Opt<usize>>,
        seed: Option<Opt<u64>>,
        budget: Option<Opt<u32>>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Query {
    pub form: QueryForm,
    /// The source line, kept for diagnostics raised during evaluation.
    pub text: String,
}

impl Query {
    pub(crate) fn diag(&self, kind: DiagnosticKind, msg: impl Into<String>, column: usize) -> Diagnostic {
        Diagnostic::new(kind, msg, 1, column, &self.text)
    }
}

struct Cursor<'a> {
    text: &'a str,
    toks: Vec<(String, usize)>,
    pos: usize,
}

impl Cursor<'_> {
    fn err(&self, kind: DiagnosticKind, msg: impl Into<String>, col: usize) -> Diagnostic {
        Diagnostic::new(kind, msg, 1, col, self.text)
    }

    fn end_col(&self) -> usize {
        self.text.trim_end().chars().count() + 1
    }

    fn next(&mut self, what: &str) -> Result<(String, usize), Diagnostic> {
        let t = self
            .toks
            .get(self.pos)
            .cloned()
            .ok_or_else(|| self.err(DiagnosticKind::Syntax, format!("expected {what}"), self.end_col()))?;
        self.pos += 1;
        Ok(t)
    }

    fn id(&mut self) -> Result<Arg, Diagnostic> {
        let (t, col) = self.next("an identifier")?;
        if !is_identifier(&t) {
            return Err(self.err(DiagnosticKind::Syntax, format!("expected an identifier, found `{t}`"), col));
        }
        Ok(Arg { id: t, column: col })
    }

    fn name(&mut self) -> Result<NameRef, Diagnostic> {
        let (t, col) = self.next("a name")?;
        match t.as_str() {
            "V" => Ok(NameRef::Everything),
            "Λ" => Ok(NameRef::Nothing),
            _ if is_identifier(&t) => Ok(NameRef::Id(Arg { id: t, column: col })),
            _ => Err(self.err(DiagnosticKind::Syntax, format!("expected a name, found `{t}`"), col)),
        }
    }

    /// Parse trailing `--flag int` options; each allowed flag at most once.
    fn options(&mut self, allowed: &[&str]) -> Result<Vec<(String, Opt<String>)>, Diagnostic> {
        let mut out: Vec<(String, Opt<String>)> = Vec::new();
        while self.pos < self.toks.len() {
            let (flag, col) = self.next("an option")?;
            if !allowed.contains(&flag.as_str()) {
                let msg = if allowed.is_empty() {
                    format!("unexpected `{flag}`")
                } else {
                    format!("unexpected `{flag}`; expected one of {}", allowed.join(", "))
                };
                return Err(self.err(DiagnosticKind::Syntax, msg, col));
            }
            if out.iter().any(|(f, _)| *f == flag) {
                return Err(self.err(DiagnosticKind::Syntax, format!("`{flag}` given twice"), col));
            }
            let (v, vcol) = self.next(&format!("an integer after `{flag}`"))?;
            out.push((flag, Opt { value: v, column: vcol }));
        }
        Ok(out)
    }

    fn int_opt<T: std::str::FromStr>(
        &self,
        opts: &[(String, Opt<String>)],
        flag: &str,
    ) -> Result<Option<Opt<T>>, Diagnostic> {
        let Some((_, o)) = opts.iter().find(|(f, _)| f == flag) else {
            return Ok(None);
        };
        let value = o.value.parse().map_err(|_| {
            self.err(
                DiagnosticKind::Syntax,
                format!("expected a non-negative integer after `{flag}`, found `{}`", o.value),
                o.column,
            )
        })?;
        Ok(Some(Opt { value, column: o.column }))
    }
}

pub fn parse_query(text: &str) -> Result<Query, Diagnostic> {
    let mut c = Cursor {
        text,
        toks: tokenize(text),
        pos: 0,
    };
    let (head, head_col) = c.next("a query")?;
    let form = match head.as_str() {
        "eta" => QueryForm::Eta(c.name()?, c.name()?),
        "pt?" => {
            let (a, b) = (c.id()?, c.id()?);
            let opts = c.options(&["--budget"])?;
            QueryForm::Pt(a, b, c.int_opt(&opts, "--budget")?)
        }
        "between?" => QueryForm::Between(c.id()?, c.id()?, c.id()?),
        "boundary?" => QueryForm::Boundary(c.id()?, c.id()?),
        "interior-point?" => QueryForm::InteriorPoint(c.id()?, c.id()?),
        "sat-interior?" => QueryForm::SatInterior(c.id()?, c.id()?),
        "concent?" => QueryForm::Concent(c.id()?, c.id()?),
        "ext?" => QueryForm::Ext(c.id()?, c.id()?),
        "convex?" => {
            let q = c.id()?;
            let opts = c.options(&["--samples"])?;
            QueryForm::Convex(q, c.int_opt(&opts, "--samples")?)
        }
        "hausdorff" => QueryForm::Hausdorff(c.id()?, c.id()?),
        "closure?" => QueryForm::Closure(c.id()?, c.id()?),
        "check" => {
            let (s, col) = c.next("a suite name")?;
            let suite = s.parse::<SuiteName>().map_err(|e| c.err(DiagnosticKind::UnknownSuite, e, col))?;
            let opts = c.options(&["--cases", "--seed", "--budget"])?;
            QueryForm::Check {
                suite,
                cases: c.int_opt(&opts, "--cases")?,
                seed: c.int_opt(&opts, "--seed")?,
                budget: c.int_opt(&opts, "--budget")?,
            }
        }
        other => {
            return Err(c.err(DiagnosticKind::Syntax, format!("unknown query `{other}`"), head_col));
        }
    };
    c.options(&[])?;
    Ok(Query {
        form,
        text: text.to_string(),
    })
}

impl fmt::Display for NameRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NameRef::Id(a) => f.write_str(&a.id),
            NameRef::Everything => f.write_str("V"),
            NameRef::Nothing => f.write_str("Λ"),
        }
    }
}

/// Canonical one-line text; parses back to the same form.
impl fmt::Display for QueryForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use QueryForm::*;
        match self {
            Eta(a, b) => write!(f, "eta {a} {b}"),
            Pt(a, b, budget) => {
                write!(f, "pt? {} {}", a.id, b.id)?;
                if let Some(o) = budget {
                    write!(f, " --budget {}", o.value)?;
                }
                Ok(())
            }
            Between(a, b, c) => write!(f, "between? {} {} {}", a.id, b.id, c.id),
            Boundary(a, b) => write!(f, "boundary? {} {}", a.id, b.id),
            InteriorPoint(a, b) => write!(f, "interior-point? {} {}", a.id, b.id),
            SatInterior(a, b) => write!(f, "sat-interior? {} {}", a.id, b.id),
            Concent(a, b) => write!(f, "concent? {} {}", a.id, b.id),
            Ext(a, b) => write!(f, "ext? {} {}", a.id, b.id),
            Convex(q, samples) => {
                write!(f, "convex? {}", q.id)?;
                if let Some(o) = samples {
                    write!(f, " --samples {}", o.value)?;
                }
                Ok(())
            }
            Hausdorff(a, b) => write!(f, "hausdorff {} {}", a.id, b.id),
            Closure(a, b) => write!(f, "closure? {} {}", a.id, b.id),
            Check {
                suite,
                cases,
                seed,
                budget,
            } => {
                write!(f, "check {suite}")?;
                for (flag, v) in [
                    ("--cases", cases.map(|o| o.value as u64)),
                    ("--seed", seed.map(|o| o.value)),
                    ("--budget", budget.map(|o| o.value as u64)),
                ] {
                    if let Some(v) = v {
                        write!(f, " {flag} {v}")?;
                    }
                }
                Ok(())
            }
        }
    }
}

impl fmt::Display for Query {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.form.fmt(f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn forms() {
        let q = parse_query("pt? b1 R1 --budget 2").unwrap();
        match &q.form {
            QueryForm::Pt(a, b, Some(o)) => {
                assert_eq!((a.id.as_str(), b.id.as_str(), o.value), ("b1", "R1", 2));
                assert_eq!(b.column, 8);
            }
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            parse_query("eta a V").unwrap().form,
            QueryForm::Eta(NameRef::Id(_), NameRef::Everything)
        ));
        assert!(matches!(
            parse_query("check regopen --seed 42 --cases 10").unwrap().form,
            QueryForm::Check {
                suite: SuiteName::Regopen,
                cases: Some(Opt { value: 10, .. }),
                seed: Some(Opt { value: 42, .. }),
                budget: None
            }
        ));
    }

    #[test]
    fn canonical_text_round_trips() {
        for t in [
            "eta a Λ",
            "pt? a b",
            "pt? a b --budget 3",
            "between? a b c",
            "boundary? p R",
            "interior-point? p R",
            "sat-interior? b R",
            "concent? a b",
            "ext? a b",
            "convex? R --samples 9",
            "hausdorff p q",
            "closure? p R",
            "check kuratowski-all --cases 5 --seed 1 --budget 4",
        ] {
            let q = parse_query(t).unwrap();
            assert_eq!(q.to_string(), t);
            assert_eq!(parse_query(&q.to_string()).unwrap().form, q.form);
        }
    }

    #[test]
    fn diagnostics() {
        for (t, col, kind) in [
            ("gibberish", 1, DiagnosticKind::Syntax),
            ("", 1, DiagnosticKind::Syntax),
            ("pt? a", 6, DiagnosticKind::Syntax),
            ("pt? a b --budget x", 18, DiagnosticKind::Syntax),
            ("pt? a b --budget -1", 18, DiagnosticKind::Syntax),
            ("pt? a b --samples 3", 9, DiagnosticKind::Syntax),
            ("pt? a b --budget 1 --budget 2", 20, DiagnosticKind::Syntax),
            ("concent? a b c", 14, DiagnosticKind::Syntax),
            ("check everything", 7, DiagnosticKind::UnknownSuite),
            ("between? a 1 c", 12, DiagnosticKind::Syntax),
        ] {
            let d = parse_query(t).unwrap_err();
            assert_eq!((d.column, d.kind), (col, kind), "{t}: {d}");
        }
    }
}
