//! A model-generic checker for the interior form of the Kuratowski axioms.
//!
//! A [`TopologySpec`] bundles the data of one instance: which elements are
//! open, the interior operator, an equivalence on elements, a partial binary
//! product and the distinguished whole. [`check_laws`] evaluates the four
//! axioms over the spec's sample source and returns a [`LawReport`] whose
//! counterexamples can be re-checked with [`LawReport::recheck`].
//!
//! The intersection axiom is evaluated in its quantified form: for open `A`,
//! `B` with `P ≡ int A`, `Q ≡ int B` and `R ≡ A·B`, require `P·Q ≡ int R`.
//! When either product is undefined the case is skipped and counted.

use std::fmt;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub type Rng = ChaCha8Rng;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TopoError {
    #[error("sample source produced no valid case")]
    GeneratorExhausted,
    #[error("case count must be at least 1")]
    NoCases,
}

/// Where the harness draws elements from.
pub enum SampleSource<T> {
    /// Every element of a finite carrier.
    Exhaustive(Vec<T>),
    /// A seeded generator; `None` means the draw was rejected.
    Seeded(Box<dyn Fn(&mut Rng) -> Option<T> + Send + Sync>),
}

/// One instance of the interior-axiom type class.
pub struct TopologySpec<T> {
    pub name: String,
    pub univ: T,
    pub open: Box<dyn Fn(&T) -> bool + Send + Sync>,
    pub interior: Box<dyn Fn(&T) -> T + Send + Sync>,
    pub eq: Box<dyn Fn(&T, &T) -> bool + Send + Sync>,
    pub prod: Box<dyn Fn(&T, &T) -> Option<T> + Send + Sync>,
    pub samples: SampleSource<T>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Axiom {
    OpenSpace,
    OpenIntensive,
    OpenIdempotent,
    OpenInter,
}

impl Axiom {
    pub const ALL: [Axiom; 4] = [
        Axiom::OpenSpace,
        Axiom::OpenIntensive,
        Axiom::OpenIdempotent,
        Axiom::OpenInter,
    ];

    pub fn label(self) -> &'static str {
        match self {
            Axiom::OpenSpace => "open_space",
            Axiom::OpenIntensive => "open_intensive",
            Axiom::OpenIdempotent => "open_idempotent",
            Axiom::OpenInter => "open_inter",
        }
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Debug, Clone)]
pub struct AxiomOutcome<T> {
    pub axiom: Axiom,
    pub evaluated: usize,
    pub skipped: usize,
    /// First failing case: the element(s) the axiom was instantiated at.
    pub counterexample: Option<Vec<T>>,
}

impl<T> AxiomOutcome<T> {
    fn new(axiom: Axiom) -> Self {
        AxiomOutcome {
            axiom,
            evaluated: 0,
            skipped: 0,
            counterexample: None,
        }
    }

    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

#[derive(Debug, Clone)]
pub struct LawReport<T> {
    pub spec: String,
    pub seed: u64,
    pub cases: usize,
    pub axioms: Vec<AxiomOutcome<T>>,
}

impl<T> LawReport<T> {
    pub fn all_passed(&self) -> bool {
        self.axioms.iter().all(AxiomOutcome::passed)
    }

    pub fn outcome(&self, axiom: Axiom) -> Option<&AxiomOutcome<T>> {
        self.axioms.iter().find(|o| o.axiom == axiom)
    }

    pub fn pass_count(&self) -> usize {
        self.axioms.iter().filter(|o| o.passed()).count()
    }
}

impl<T> fmt::Display for LawReport<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{}: {}/{} axioms hold (cases {}, seed {})",
            self.spec,
            self.pass_count(),
            self.axioms.len(),
            self.cases,
            self.seed
        )?;
        for o in &self.axioms {
            writeln!(
                f,
                "  {:<16} {} (evaluated {}, skipped {})",
                o.axiom.label(),
                if o.passed() { "pass" } else { "FAIL" },
                o.evaluated,
                o.skipped
            )?;
        }
        Ok(())
    }
}

/// Outcome of evaluating one axiom at one instantiation.
enum CaseResult {
    Holds,
    Fails,
    Skipped,
}

fn eval_case<T>(spec: &TopologySpec<T>, axiom: Axiom, args: &[T]) -> CaseResult {
    let holds = |b: bool| if b { CaseResult::Holds } else { CaseResult::Fails };
    match axiom {
        Axiom::OpenSpace => holds((spec.eq)(&(spec.interior)(&spec.univ), &spec.univ)),
        Axiom::OpenIntensive => {
            let q = &args[0];
            if !(spec.open)(q) {
                return CaseResult::Skipped;
            }
            holds((spec.eq)(&(spec.interior)(q), q))
        }
        Axiom::OpenIdempotent => {
            let q = &args[0];
            if !(spec.open)(q) {
                return CaseResult::Skipped;
            }
            let iq = (spec.interior)(q);
            holds((spec.eq)(&(spec.interior)(&iq), &iq))
        }
        Axiom::OpenInter => {
            let (a, b) = (&args[0], &args[1]);
            if !(spec.open)(a) || !(spec.open)(b) {
                return CaseResult::Skipped;
            }
            let p = (spec.interior)(a);
            let q = (spec.interior)(b);
            match ((spec.prod)(a, b), (spec.prod)(&p, &q)) {
                (Some(r), Some(pq)) => holds((spec.eq)(&pq, &(spec.interior)(&r))),
                (None, None) => CaseResult::Skipped,
                // defined on one side only: the products disagree
                _ => CaseResult::Fails,
            }
        }
    }
}

fn record<T: Clone>(out: &mut AxiomOutcome<T>, res: CaseResult, args: &[T]) {
    match res {
        CaseResult::Holds => out.evaluated += 1,
        CaseResult::Skipped => out.skipped += 1,
        CaseResult::Fails => {
            out.evaluated += 1;
            if out.counterexample.is_none() {
                out.counterexample = Some(args.to_vec());
            }
        }
    }
}

/// Draw `n` elements from a seeded source, giving up after `n * 20` rejections.
fn draw<T>(
    gen: &(dyn Fn(&mut Rng) -> Option<T> + Send + Sync),
    rng: &mut Rng,
    n: usize,
) -> Result<Vec<T>, TopoError> {
    let mut out = Vec::with_capacity(n);
    let mut rejected = 0;
    while out.len() < n {
        match gen(rng) {
            Some(x) => out.push(x),
            None => {
                rejected += 1;
                if rejected > n * 20 {
                    break;
                }
            }
        }
    }
    if out.is_empty() {
        return Err(TopoError::GeneratorExhausted);
    }
    Ok(out)
}

/// Unary and binary instantiations for a run.
fn instantiations<T: Clone>(
    spec: &TopologySpec<T>,
    cases: usize,
    seed: u64,
) -> Result<(Vec<T>, Vec<(T, T)>), TopoError> {
    if cases == 0 {
        return Err(TopoError::NoCases);
    }
    match &spec.samples {
        SampleSource::Exhaustive(all) => {
            if all.is_empty() {
                return Err(TopoError::GeneratorExhausted);
            }
            let pairs = all
                .iter()
                .flat_map(|a| all.iter().map(move |b| (a.clone(), b.clone())))
                .collect();
            Ok((all.clone(), pairs))
        }
        SampleSource::Seeded(gen) => {
            let mut rng = Rng::seed_from_u64(seed);
            let singles = draw(gen.as_ref(), &mut rng, cases)?;
            let lefts = draw(gen.as_ref(), &mut rng, cases)?;
            let rights = draw(gen.as_ref(), &mut rng, cases)?;
            Ok((singles, lefts.into_iter().zip(rights).collect()))
        }
    }
}

/// Evaluate all four axioms. Exhaustive sources ignore `cases` beyond
/// requiring it to be positive.
pub fn check_laws<T: Clone>(
    spec: &TopologySpec<T>,
    cases: usize,
    seed: u64,
) -> Result<LawReport<T>, TopoError> {
    let (singles, pairs) = instantiations(spec, cases, seed)?;
    let mut axioms: Vec<AxiomOutcome<T>> = Axiom::ALL.iter().map(|&a| AxiomOutcome::new(a)).collect();

    let res = eval_case(spec, Axiom::OpenSpace, &[]);
    record(&mut axioms[0], res, &[spec.univ.clone()]);
    for q in &singles {
        let args = std::slice::from_ref(q);
        let r = eval_case(spec, Axiom::OpenIntensive, args);
        record(&mut axioms[1], r, args);
        let r = eval_case(spec, Axiom::OpenIdempotent, args);
        record(&mut axioms[2], r, args);
    }
    for (a, b) in &pairs {
        let args = [a.clone(), b.clone()];
        let r = eval_case(spec, Axiom::OpenInter, &args);
        record(&mut axioms[3], r, &args);
    }
    let evaluated_any = axioms[1..].iter().any(|o| o.evaluated > 0);
    if !evaluated_any {
        return Err(TopoError::GeneratorExhausted);
    }
    Ok(LawReport {
        spec: spec.name.clone(),
        seed,
        cases: singles.len().max(pairs.len()),
        axioms,
    })
}

/// Only the intersection axiom, with explicit skip bookkeeping.
pub fn check_prod_partiality<T: Clone>(
    spec: &TopologySpec<T>,
    cases: usize,
    seed: u64,
) -> Result<LawReport<T>, TopoError> {
    let (_, pairs) = instantiations(spec, cases, seed)?;
    let mut out = AxiomOutcome::new(Axiom::OpenInter);
    for (a, b) in &pairs {
        let args = [a.clone(), b.clone()];
        let r = eval_case(spec, Axiom::OpenInter, &args);
        record(&mut out, r, &args);
    }
    Ok(LawReport {
        spec: spec.name.clone(),
        seed,
        cases: pairs.len(),
        axioms: vec![out],
    })
}

impl<T: Clone> LawReport<T> {
    /// Re-evaluate every reported counterexample on its own. Returns `true`
    /// when each one still fails.
    pub fn recheck(&self, spec: &TopologySpec<T>) -> bool {
        self.axioms.iter().all(|o| match &o.counterexample {
            None => true,
            Some(args) => {
                let args: &[T] = if o.axiom == Axiom::OpenSpace { &[] } else { args };
                matches!(eval_case(spec, o.axiom, args), CaseResult::Fails)
            }
        })
    }
}
