//! Scene files, the query language, law suites and SVG output.
//!
//! Everything a front end needs: [`parse_scene`] and [`parse_query`] turn
//! text into values or a positioned [`Diagnostic`], [`eval_query`] routes a
//! query to the engine, [`run_suite`] drives the property suites and
//! [`render_svg`] draws a scene. Exit codes follow one contract: 0 for
//! true or pass, 1 for false or fail, 2 for unknown and 3 for diagnostics.

mod diag;
mod eval;
mod query;
mod repl;
mod scene;
mod suite;
mod svg;

pub use diag::{Diagnostic, DiagnosticKind};
pub use eval::{eval_query, eval_text, Answer, Evaluation};
pub use query::{parse_query, Arg, NameRef, Query, QueryForm};
pub use repl::repl;
pub use scene::{parse_scene, Entity, Scene, DEFAULT_BALL_ID};
pub use suite::{run_suite, CheckLine, SuiteName, SuiteOptions, SuiteReport};
pub use svg::{render_svg, SvgOptions};

pub const EXIT_TRUE: i32 = 0;
pub const EXIT_FALSE: i32 = 1;
pub const EXIT_UNKNOWN: i32 = 2;
pub const EXIT_DIAGNOSTIC: i32 = 3;
