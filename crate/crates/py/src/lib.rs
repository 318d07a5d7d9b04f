//! Python bindings: balls, regions, the regular-open line, quasi-Boolean
//! models, scenes and the law suites.
//!
//! Rationals cross the boundary as `int` or anything whose `str()` parses as
//! `p/q` (so `fractions.Fraction` works); they come back as strings.
//! Three-valued answers come back as `True`, `False` or `None`.

use pyo3::create_exception;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use mereotopo::dsl::{self, Answer, Diagnostic, SuiteName, SuiteOptions, SvgOptions};
use mereotopo::geom::{self, Budget, Containment3, PointClass};
use mereotopo::mereo::{MeetResult, QBAModel};
use mereotopo::regopen::{self, Endpoint, RegOpen1D};
use mereotopo::Rat;

create_exception!(mereotopo_py, DiagnosticError, PyValueError);

fn value_err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn diag_err(d: Diagnostic) -> PyErr {
    DiagnosticError::new_err((d.to_string(), d.line, d.column, format!("{:?}", d.kind)))
}

fn rat(v: &Bound<'_, PyAny>) -> PyResult<Rat> {
    if let Ok(n) = v.extract::<i64>() {
        return Ok(Rat::int(n));
    }
    let s = v.str()?.to_string();
    s.trim().parse::<Rat>().map_err(|_| value_err(format!("not a rational: {s}")))
}

fn point(p: &(Bound<'_, PyAny>, Bound<'_, PyAny>)) -> PyResult<PointClass> {
    Ok(PointClass::new(rat(&p.0)?, rat(&p.1)?))
}

fn budget(depth: u32) -> PyResult<Budget> {
    Budget::new(depth).map_err(value_err)
}

fn three(c: Containment3) -> Option<bool> {
    c.decided()
}

/// An open disk with rational center and radius.
#[pyclass(name = "Ball", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyBall(geom::Ball);

#[pymethods]
impl PyBall {
    #[new]
    fn new(x: &Bound<'_, PyAny>, y: &Bound<'_, PyAny>, r: &Bound<'_, PyAny>) -> PyResult<Self> {
        Ok(PyBall(geom::Ball::new(rat(x)?, rat(y)?, rat(r)?).map_err(value_err)?))
    }

    #[getter]
    fn center(&self) -> (String, String) {
        (self.0.cx().to_string(), self.0.cy().to_string())
    }

    #[getter]
    fn radius(&self) -> String {
        self.0.r().to_string()
    }

    /// Open-disk containment in `other`.
    fn part_of(&self, other: PyRef<'_, PyBall>) -> bool {
        geom::ball_pt(&self.0, &other.0)
    }

    fn ext_tangent(&self, other: PyRef<'_, PyBall>) -> bool {
        geom::ext_tangent(&self.0, &other.0)
    }

    fn int_tangent(&self, other: PyRef<'_, PyBall>) -> bool {
        geom::int_tangent(&self.0, &other.0)
    }

    fn concentric(&self, other: PyRef<'_, PyBall>) -> bool {
        geom::concent(&self.0, &other.0)
    }

    fn similar(&self, scale: &Bound<'_, PyAny>, dx: &Bound<'_, PyAny>, dy: &Bound<'_, PyAny>) -> PyResult<Self> {
        let s = rat(scale)?;
        if !s.is_positive() {
            return Err(value_err("scale must be positive"));
        }
        Ok(PyBall(self.0.similar(&s, &rat(dx)?, &rat(dy)?)))
    }

    fn __eq__(&self, other: PyRef<'_, PyBall>) -> bool {
        self.0 == other.0
    }

    fn __hash__(&self) -> u64 {
        use std::hash::{Hash, Hasher};
        let mut h = std::collections::hash_map::DefaultHasher::new();
        self.0.hash(&mut h);
        h.finish()
    }

    fn __repr__(&self) -> String {
        self.0.to_string()
    }
}

/// A finite union of balls, read as a regular open set.
#[pyclass(name = "Region", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyRegion(geom::Region);

#[pymethods]
impl PyRegion {
    #[new]
    fn new(balls: Vec<PyRef<'_, PyBall>>) -> PyResult<Self> {
        let balls = balls.iter().map(|b| b.0.clone()).collect();
        Ok(PyRegion(geom::Region::new(balls).map_err(value_err)?))
    }

    #[getter]
    fn balls(&self) -> Vec<PyBall> {
        self.0.balls().iter().cloned().map(PyBall).collect()
    }

    /// Three-valued: is `ball` part of this region?
    #[pyo3(signature = (ball, budget=12))]
    fn contains_ball(&self, ball: PyRef<'_, PyBall>, budget: u32) -> PyResult<Option<bool>> {
        Ok(three(geom::part_of_region(&ball.0, &self.0, self::budget(budget)?)))
    }

    /// Three-valued: is this region part of `other`?
    #[pyo3(signature = (other, budget=12))]
    fn part_of(&self, other: PyRef<'_, PyRegion>, budget: u32) -> PyResult<Option<bool>> {
        Ok(three(geom::region_part_of(&self.0, &other.0, self::budget(budget)?)))
    }

    /// Witness point outside every closed ball of this region, if one is found.
    #[pyo3(signature = (ball, budget=12))]
    fn uncovered_point(&self, ball: PyRef<'_, PyBall>, budget: u32) -> PyResult<Option<(String, String)>> {
        Ok(match geom::part_of_region(&ball.0, &self.0, self::budget(budget)?) {
            Containment3::NotContained(p) => Some((p.x.to_string(), p.y.to_string())),
            _ => None,
        })
    }

    fn external(&self, other: PyRef<'_, PyRegion>) -> bool {
        geom::ext_region(&self.0, &other.0)
    }

    fn interior_point(&self, x: &Bound<'_, PyAny>, y: &Bound<'_, PyAny>) -> PyResult<bool> {
        Ok(geom::interior_point_at(&PointClass::new(rat(x)?, rat(y)?), &self.0))
    }

    fn boundary_point(&self, x: &Bound<'_, PyAny>, y: &Bound<'_, PyAny>) -> PyResult<bool> {
        Ok(geom::boundary_member_at(&PointClass::new(rat(x)?, rat(y)?), &self.0))
    }

    fn __repr__(&self) -> String {
        self.0.to_string()
    }
}

/// Disjoint balls around two distinct points.
#[pyfunction]
fn hausdorff_separation(
    p: (Bound<'_, PyAny>, Bound<'_, PyAny>),
    q: (Bound<'_, PyAny>, Bound<'_, PyAny>),
) -> PyResult<(PyBall, PyBall)> {
    let (a, b) = geom::hausdorff_separation(&point(&p)?, &point(&q)?).map_err(value_err)?;
    Ok((PyBall(a), PyBall(b)))
}

fn endpoint(v: &Bound<'_, PyAny>) -> PyResult<Endpoint> {
    if let Ok(f) = v.extract::<f64>() {
        if f == f64::INFINITY {
            return Ok(Endpoint::PosInf);
        }
        if f == f64::NEG_INFINITY {
            return Ok(Endpoint::NegInf);
        }
    }
    Ok(Endpoint::Fin(rat(v)?))
}

/// A regular open subset of the line in canonical form.
#[pyclass(name = "Line", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyLine(RegOpen1D);

#[pymethods]
impl PyLine {
    /// Regularize a union of open intervals given as `(lo, hi)` pairs;
    /// `float('inf')` marks an unbounded end.
    #[new]
    fn new(intervals: Vec<(Bound<'_, PyAny>, Bound<'_, PyAny>)>) -> PyResult<Self> {
        let raw = intervals
            .iter()
            .map(|(a, b)| Ok((endpoint(a)?, endpoint(b)?)))
            .collect::<PyResult<Vec<_>>>()?;
        Ok(PyLine(RegOpen1D::regularize(raw).map_err(value_err)?))
    }

    #[staticmethod]
    fn full() -> Self {
        PyLine(RegOpen1D::full())
    }

    #[getter]
    fn intervals(&self) -> Vec<(String, String)> {
        self.0.intervals().iter().map(|iv| (iv.lo.to_string(), iv.hi.to_string())).collect()
    }

    fn contains(&self, x: &Bound<'_, PyAny>) -> PyResult<bool> {
        Ok(self.0.contains(&rat(x)?))
    }

    fn join(&self, other: PyRef<'_, PyLine>) -> Self {
        PyLine(regopen::join1d(&self.0, &other.0))
    }

    /// `None` when the two sets are disjoint.
    fn meet(&self, other: PyRef<'_, PyLine>) -> Option<Self> {
        regopen::meet1d(&self.0, &other.0).defined().map(PyLine)
    }

    fn complement(&self) -> PyResult<Self> {
        regopen::compl1d(&self.0).map(PyLine).map_err(value_err)
    }

    fn part_of(&self, other: PyRef<'_, PyLine>) -> bool {
        regopen::part_of1d(&self.0, &other.0)
    }

    fn __eq__(&self, other: PyRef<'_, PyLine>) -> bool {
        self.0 == other.0
    }

    fn __repr__(&self) -> String {
        self.0.to_string()
    }
}

/// The quasi-Boolean model over the nonempty subsets of `base` atoms.
/// Objects are passed as subset bitmasks.
#[pyclass(name = "QBAModel", frozen)]
struct PyQba(QBAModel);

impl PyQba {
    fn check(&self, mask: u32) -> PyResult<u32> {
        if mask == 0 || mask >= 1 << self.0.base() {
            return Err(value_err(format!("mask {mask} is not an object of this model")));
        }
        Ok(mask)
    }

    fn mask_of(&self, n: &mereotopo::lo::Name) -> Option<u32> {
        n.single().map(|x| self.0.mask(x))
    }
}

#[pymethods]
impl PyQba {
    #[new]
    fn new(base: usize) -> PyResult<Self> {
        Ok(PyQba(QBAModel::new(base).map_err(value_err)?))
    }

    #[getter]
    fn base(&self) -> usize {
        self.0.base()
    }

    fn label(&self, x: u32) -> PyResult<String> {
        Ok(self.0.label(self.0.object(self.check(x)?)))
    }

    fn le(&self, x: u32, y: u32) -> PyResult<bool> {
        Ok(self.0.le(self.0.object(self.check(x)?), self.0.object(self.check(y)?)))
    }

    fn join(&self, x: u32, y: u32) -> PyResult<u32> {
        let s = self.0.b_sum(&self.0.ind(self.check(x)?), &self.0.ind(self.check(y)?)).map_err(value_err)?;
        self.mask_of(&s).ok_or_else(|| value_err("join is not an individual"))
    }

    /// `None` when the meet is undefined.
    fn meet(&self, x: u32, y: u32) -> PyResult<Option<u32>> {
        let m = self.0.b_prod(&self.0.ind(self.check(x)?), &self.0.ind(self.check(y)?)).map_err(value_err)?;
        Ok(m.defined().and_then(|n| self.mask_of(&n)))
    }

    /// `None` for the top object.
    fn complement(&self, x: u32) -> PyResult<Option<u32>> {
        let c = self.0.compl(&self.0.ind(self.check(x)?)).map_err(value_err)?;
        Ok(match c {
            MeetResult::Defined(n) => self.mask_of(&n),
            MeetResult::UndefinedMeet => None,
        })
    }

    /// Mereological class (supremum) of a nonempty list of objects.
    fn klass(&self, xs: Vec<u32>) -> PyResult<u32> {
        let objs = xs.iter().map(|&m| Ok(self.0.object(self.check(m)?))).collect::<PyResult<Vec<_>>>()?;
        let name = self.0.lo().name(objs).map_err(value_err)?;
        let k = self.0.klass(&name).map_err(value_err)?;
        self.mask_of(&k).ok_or_else(|| value_err("class is not an individual"))
    }

    fn interior(&self, x: u32) -> PyResult<Option<u32>> {
        let n = self.0.interior_m(&self.0.ind(self.check(x)?)).map_err(value_err)?;
        Ok(self.mask_of(&n))
    }

    /// Whether the mereological boundary of `x` is empty.
    fn boundary_empty(&self, x: u32) -> PyResult<bool> {
        Ok(self.0.boundary_m(&self.0.ind(self.check(x)?)).map_err(value_err)?.is_empty())
    }
}

/// A parsed scene file.
#[pyclass(name = "Scene", frozen)]
struct PyScene(dsl::Scene);

#[pymethods]
impl PyScene {
    /// Evaluate one query. Returns `(answer, note, exit_code)`, where
    /// `answer` is `"true"`, `"false"`, `"unknown"` or a value.
    #[pyo3(signature = (query, budget=12))]
    fn eval(&self, query: &str, budget: u32) -> PyResult<(String, Option<String>, i32)> {
        let e = dsl::eval_text(&self.0, query, budget).map_err(diag_err)?;
        let answer = match &e.answer {
            Answer::Value(v) => v.clone(),
            a => a.to_string(),
        };
        Ok((answer, e.note.clone(), e.exit_code()))
    }

    #[pyo3(signature = (width=480, labels=true))]
    fn render_svg(&self, width: u32, labels: bool) -> String {
        dsl::render_svg(&self.0, &SvgOptions { width, labels, ..SvgOptions::default() })
    }

    #[getter]
    fn ids(&self) -> Vec<String> {
        let s = &self.0;
        let balls = s.balls().iter().map(|(id, _)| id.clone());
        let points = s.points().iter().map(|(id, _)| id.clone());
        let regions = s.regions().iter().map(|(id, _)| id.clone());
        balls.chain(points).chain(regions).collect()
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }
}

/// Parse scene text; raises `DiagnosticError(message, line, column, kind)`.
#[pyfunction]
fn parse_scene(text: &str) -> PyResult<PyScene> {
    dsl::parse_scene(text).map(PyScene).map_err(diag_err)
}

/// Run a named law suite. Returns `(passed, report)`.
#[pyfunction]
#[pyo3(signature = (name, cases=100, seed=0, budget=12))]
fn run_suite(name: &str, cases: usize, seed: u64, budget: u32) -> PyResult<(bool, String)> {
    let suite: SuiteName = name.parse().map_err(value_err)?;
    if cases == 0 {
        return Err(value_err("cases must be at least 1"));
    }
    let opts = SuiteOptions { cases, seed, budget: self::budget(budget)? };
    let r = dsl::run_suite(suite, &opts);
    Ok((r.passed(), r.to_string()))
}

#[pymodule]
fn mereotopo_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyBall>()?;
    m.add_class::<PyRegion>()?;
    m.add_class::<PyLine>()?;
    m.add_class::<PyQba>()?;
    m.add_class::<PyScene>()?;
    m.add_function(wrap_pyfunction!(hausdorff_separation, m)?)?;
    m.add_function(wrap_pyfunction!(parse_scene, m)?)?;
    m.add_function(wrap_pyfunction!(run_suite, m)?)?;
    m.add("DiagnosticError", m.py().get_type::<DiagnosticError>())?;
    Ok(())
}
