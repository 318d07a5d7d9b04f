//! Named property suites behind `check`.
//!
//! Each suite is a list of laws evaluated over exhaustive finite models or
//! seeded random fixtures. A run is a pure function of its options, so two
//! runs with the same options print the same report.

use std::fmt;
use std::str::FromStr;

use rand::Rng as _;
use rand::SeedableRng;

use crate::geom::gen::{random_ball, random_point, random_region, random_similarity, tangency_cover, CoverKind};
use crate::geom::{
    ball_pt, between, boundary_member, boundary_member_at, check_tarski_postulates, closure_g, concent,
    diametral, ext_region, ext_tangent, hausdorff_separation, int_tangent, interior_point, interior_point_at,
    part_of_region, point_of, sat_interior_point, topology_spec as geo_spec, Ball, Budget,
    Containment3, Diametral, PointClass, Region, RegionExpr,
};
use crate::kuratowski::{check_laws, LawReport, Rng, TopologySpec};
use crate::lo::{LOModel, ObjectId};
use crate::mereo::{topology_spec as mereo_spec, MeetResult, QBAModel};
use crate::rat::Rat;
use crate::regopen::{
    boundary_m1d, closure_m1d, compl1d, join1d, meet1d, part_of1d, random_regopen,
    topology_spec as regopen_spec, RegOpen1D,
};

use super::{EXIT_FALSE, EXIT_TRUE};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SuiteName {
    Mereo,
    Regopen,
    Geometry,
    KuratowskiAll,
}

impl SuiteName {
    pub const ALL: [SuiteName; 4] = [
        SuiteName::Mereo,
        SuiteName::Regopen,
        SuiteName::Geometry,
        SuiteName::KuratowskiAll,
    ];

    pub fn label(self) -> &'static str {
        match self {
            SuiteName::Mereo => "mereo",
            SuiteName::Regopen => "regopen",
            SuiteName::Geometry => "geometry",
            SuiteName::KuratowskiAll => "kuratowski-all",
        }
    }
}

impl fmt::Display for SuiteName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for SuiteName {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        SuiteName::ALL
            .into_iter()
            .find(|n| n.label() == s)
            .ok_or_else(|| format!("unknown suite `{s}`; expected mereo, regopen, geometry or kuratowski-all"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SuiteOptions {
    /// Seeded cases per law; exhaustive laws ignore it.
    pub cases: usize,
    pub seed: u64,
    pub budget: Budget,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            cases: 100,
            seed: 0,
            budget: Budget::default(),
        }
    }
}

/// Tally for one law.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckLine {
    pub name: String,
    pub cases: usize,
    pub failures: usize,
    /// Cases where a three-valued decision came back unknown. They are
    /// neither passes nor failures.
    pub unknown: usize,
    /// The law involves a three-valued decision.
    pub three_valued: bool,
    pub example: Option<String>,
}

impl CheckLine {
    fn new(name: impl Into<String>) -> Self {
        CheckLine {
            name: name.into(),
            cases: 0,
            failures: 0,
            unknown: 0,
            three_valued: false,
            example: None,
        }
    }

    fn tri(name: impl Into<String>) -> Self {
        CheckLine {
            three_valued: true,
            ..CheckLine::new(name)
        }
    }

    fn record(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures += 1;
            if self.example.is_none() {
                self.example = Some(describe());
            }
        }
    }

    /// `None` counts as unknown.
    fn record3(&mut self, ok: Option<bool>, describe: impl FnOnce() -> String) {
        match ok {
            Some(ok) => self.record(ok, describe),
            None => {
                self.cases += 1;
                self.unknown += 1;
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: SuiteName,
    pub options: SuiteOptions,
    pub checks: Vec<CheckLine>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckLine::passed)
    }

    pub fn exit_code(&self) -> i32 {
        if self.passed() {
            EXIT_TRUE
        } else {
            EXIT_FALSE
        }
    }

    pub fn check(&self, name: &str) -> Option<&CheckLine> {
        self.checks.iter().find(|c| c.name == name)
    }

    /// Unknown outcomes over all cases of three-valued laws.
    pub fn unknown_rate(&self) -> (usize, usize) {
        self.checks
            .iter()
            .filter(|c| c.three_valued)
            .fold((0, 0), |(u, n), c| (u + c.unknown, n + c.cases))
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let o = &self.options;
        writeln!(
            f,
            "suite {} (cases {}, seed {}, budget {})",
            self.suite,
            o.cases,
            o.seed,
            o.budget.depth()
        )?;
        let width = self.checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
        for c in &self.checks {
            let mark = if c.passed() { "pass" } else { "FAIL" };
            write!(f, "  {mark} {:<width$} {} cases", c.name, c.cases)?;
            if c.unknown > 0 {
                write!(f, ", {} unknown", c.unknown)?;
            }
            if c.failures > 0 {
                write!(f, ", {} failed", c.failures)?;
            }
            writeln!(f)?;
            if let Some(e) = &c.example {
                writeln!(f, "       first failure: {e}")?;
            }
        }
        let (u, n) = self.unknown_rate();
        if n > 0 {
            writeln!(f, "unknown rate {u}/{n} ({:.2}%)", 100.0 * u as f64 / n as f64)?;
        }
        let failed = self.checks.iter().filter(|c| !c.passed()).count();
        if failed == 0 {
            write!(f, "result: pass ({} laws)", self.checks.len())
        } else {
            write!(f, "result: FAIL ({failed} of {} laws)", self.checks.len())
        }
    }
}

pub fn run_suite(name: SuiteName, opts: &SuiteOptions) -> SuiteReport {
    let checks = match name {
        SuiteName::Mereo => mereo_suite(),
        SuiteName::Regopen => regopen_suite(opts),
        SuiteName::Geometry => geometry_suite(opts),
        SuiteName::KuratowskiAll => kuratowski_suite(opts),
    };
    SuiteReport {
        suite: name,
        options: *opts,
        checks,
    }
}

// ---------------------------------------------------------------------------
// names and mereology

fn lo_laws(out: &mut Vec<CheckLine>) {
    let mut trans = CheckLine::new("lo: eta transitivity");
    let mut in_eta = CheckLine::new("lo: In_to_eta truth table");
    let mut preorder = CheckLine::new("lo: incl preorder, eq_plural its equivalence");
    let mut neg = CheckLine::new("lo: neg involution and De Morgan");
    for size in 1..=3 {
        let m = LOModel::new(size).expect("small universe");
        let names: Vec<_> = m.all_names().collect();
        for a in &names {
            for x in m.objects() {
                let ix = m.iota(x).expect("in range");
                in_eta.record(a.contains(x) == m.eta(&ix, a).expect("same model"), || {
                    format!("size {size}: object {} vs name {:#b}", x.0, a.bits())
                });
            }
            neg.record(m.name_neg(&m.name_neg(a).unwrap()).unwrap() == *a, || format!("{:#b}", a.bits()));
            for b in &names {
                let eq = m.incl(a, b).unwrap() && m.incl(b, a).unwrap();
                preorder.record(m.incl(a, a).unwrap() && m.eq_plural(a, b).unwrap() == eq, || {
                    format!("{:#b} {:#b}", a.bits(), b.bits())
                });
                let (na, nb) = (m.name_neg(a).unwrap(), m.name_neg(b).unwrap());
                let dm1 = m.name_neg(&m.name_conj(a, b).unwrap()).unwrap() == m.name_disj(&na, &nb).unwrap();
                let dm2 = m.name_neg(&m.name_disj(a, b).unwrap()).unwrap() == m.name_conj(&na, &nb).unwrap();
                neg.record(dm1 && dm2, || format!("{:#b} {:#b}", a.bits(), b.bits()));
                for c in &names {
                    if m.eta(a, b).unwrap() && m.eta(c, a).unwrap() {
                        trans.record(m.eta(c, b).unwrap(), || {
                            format!("{:#b} {:#b} {:#b}", a.bits(), b.bits(), c.bits())
                        });
                    }
                    if m.incl(a, b).unwrap() && m.incl(b, c).unwrap() {
                        preorder.record(m.incl(a, c).unwrap(), || {
                            format!("{:#b} {:#b} {:#b}", a.bits(), b.bits(), c.bits())
                        });
                    }
                }
            }
        }
    }
    out.extend([trans, in_eta, preorder, neg]);
}

fn mereo_model_laws(m: &QBAModel, out: &mut Vec<CheckLine>) {
    let base = m.base();
    let tag = |s: &str| format!("mereo base {base}: {s}");
    let lo = m.lo();
    let inds: Vec<ObjectId> = m.objects().collect();
    let ind = |x: ObjectId| lo.iota(x).expect("in range");
    let top = m.universe();
    let label = |n: &crate::lo::Name| n.single().map_or_else(|| format!("{:#b}", n.bits()), |x| m.label(x));

    let mut order = CheckLine::new(tag("pt partial order"));
    let mut sup = CheckLine::new(tag("klass is the supremum"));
    let mut coll = CheckLine::new(tag("klass a coll a"));
    let mut join = CheckLine::new(tag("join laws and uniqueness"));
    let mut meet = CheckLine::new(tag("meet laws and uniqueness"));
    let mut compl = CheckLine::new(tag("complement laws"));
    let mut clopen = CheckLine::new(tag("clopen: boundary empty, closure regular"));

    // the lattice reading: masks under or/and
    let mask = |x: ObjectId| m.mask(x);
    for &x in &inds {
        for &y in &inds {
            let le = m.le(x, y);
            order.record(le == (mask(x) & !mask(y) == 0), || format!("{} ≤ {}", m.label(x), m.label(y)));
            if le && m.le(y, x) {
                order.record(x == y, || format!("antisymmetry at {} {}", m.label(x), m.label(y)));
            }
            for &z in &inds {
                if le && m.le(y, z) {
                    order.record(m.le(x, z), || format!("{} {} {}", m.label(x), m.label(y), m.label(z)));
                }
            }
        }
    }
    for bits in 1..(1u64 << inds.len()) {
        let a = lo.name_from_bits(bits);
        let k = m.klass(&a).expect("nonempty");
        let oracle = a.objects().fold(0u32, |acc, x| acc | mask(x));
        sup.record(k.single().map(mask) == Some(oracle), || format!("klass of {:#b}", bits));
        // sub-name enumeration is exponential; stop at base 3
        if base <= 3 {
            coll.record(m.coll(&k, &a), || format!("{:#b}", bits));
        }
    }
    for &x in &inds {
        let (p, pm) = (ind(x), mask(x));
        for &y in &inds {
            let (q, qm) = (ind(y), mask(y));
            let s = m.b_sum(&p, &q).unwrap();
            let witnesses = inds
                .iter()
                .filter(|&&r| {
                    // join: P, Q part of R, and every part of R meets P or Q
                    let rn = ind(r);
                    m.le(x, r)
                        && m.le(y, r)
                        && m.pt(&rn).unwrap().objects().all(|d| {
                            let dn = ind(d);
                            !m.ext(&dn, &p).unwrap() || !m.ext(&dn, &q).unwrap()
                        })
                })
                .count();
            join.record(
                s.single().map(mask) == Some(pm | qm) && s == m.b_sum(&q, &p).unwrap() && witnesses == 1,
                || format!("{} + {}", m.label(x), m.label(y)),
            );
            let prod = m.b_prod(&p, &q).unwrap();
            let common = lo.name_conj(&m.pt(&p).unwrap(), &m.pt(&q).unwrap()).unwrap();
            let meets = inds
                .iter()
                .filter(|&&r| m.pt(&ind(r)).unwrap() == common)
                .count();
            let oracle = pm & qm;
            let ok = match prod {
                MeetResult::Defined(r) => r.single().map(mask) == Some(oracle) && meets == 1,
                MeetResult::UndefinedMeet => oracle == 0 && meets == 0,
            } && prod == m.b_prod(&q, &p).unwrap();
            meet.record(ok, || format!("{} · {}", m.label(x), m.label(y)));
            if base <= 3 {
                for &z in &inds {
                    let r = ind(z);
                    let l = m.b_sum(&m.b_sum(&p, &q).unwrap(), &r).unwrap();
                    let rr = m.b_sum(&p, &m.b_sum(&q, &r).unwrap()).unwrap();
                    join.record(l == rr, || format!("assoc {} {} {}", m.label(x), m.label(y), m.label(z)));
                    let lp = m.b_prod(&p, &q).unwrap().defined().and_then(|pq| m.b_prod(&pq, &r).unwrap().defined());
                    let rp = m.b_prod(&q, &r).unwrap().defined().and_then(|qr| m.b_prod(&p, &qr).unwrap().defined());
                    meet.record(lp == rp, || format!("assoc {} {} {}", m.label(x), m.label(y), m.label(z)));
                }
            }
        }
        join.record(m.b_sum(&p, &p).unwrap() == p, || format!("idempotence at {}", m.label(x)));
        if p == top {
            compl.record(m.compl(&p).unwrap().is_undefined(), || "universe has a complement".into());
            continue;
        }
        match m.compl(&p).unwrap() {
            MeetResult::Defined(c) => {
                let ok = m.ext(&p, &c).unwrap()
                    && m.b_sum(&p, &c).unwrap() == top
                    && c.single().map(mask) == Some(!pm & ((1 << base) - 1));
                compl.record(ok, || format!("complement of {} is {}", m.label(x), label(&c)));
                let b = m.boundary_m(&p).unwrap();
                let cl = m.closure_m(&p).unwrap();
                clopen.record(b.is_empty() && cl == p && m.interior_m(&cl).unwrap() == p, || {
                    format!("{}: boundary {}, closure {}", m.label(x), label(&b), label(&cl))
                });
            }
            MeetResult::UndefinedMeet => compl.record(false, || format!("{} has no complement", m.label(x))),
        }
    }
    out.extend([order, sup]);
    if coll.cases > 0 {
        out.push(coll);
    }
    out.extend([join, meet, compl, clopen]);
}

fn mereo_suite() -> Vec<CheckLine> {
    let mut out = Vec::new();
    lo_laws(&mut out);
    for base in 2..=4 {
        mereo_model_laws(&QBAModel::new(base).expect("valid base"), &mut out);
    }
    for base in 2..=3 {
        let m = QBAModel::new(base).expect("valid base");
        out.extend(law_lines(&check_laws(&mereo_spec(&m), 1, 0).expect("finite carrier")));
    }
    out
}

// ---------------------------------------------------------------------------
// interior axioms

fn law_lines<T: fmt::Debug>(r: &LawReport<T>) -> Vec<CheckLine> {
    r.axioms
        .iter()
        .map(|o| CheckLine {
            name: format!("{}: {}", r.spec, o.axiom),
            cases: o.evaluated,
            failures: usize::from(!o.passed()),
            unknown: 0,
            three_valued: false,
            example: o.counterexample.as_ref().map(|c| format!("{c:?}")),
        })
        .collect()
}

/// A broken interior must be caught, and its counterexample must reproduce.
fn control<T: Clone>(name: &str, spec: TopologySpec<T>, cases: usize, seed: u64) -> CheckLine {
    let mut line = CheckLine::new(format!("negative control: {name}"));
    let caught = match check_laws(&spec, cases, seed) {
        Ok(r) => !r.all_passed() && r.recheck(&spec),
        Err(_) => false,
    };
    line.record(caught, || "broken interior passed every axiom".into());
    line
}

fn regions_for(opts: &SuiteOptions, n: usize) -> Vec<Region> {
    let mut rng = Rng::seed_from_u64(opts.seed ^ 0x6b75_7261);
    (0..n).map(|_| random_region(&mut rng, 3)).collect()
}

fn kuratowski_suite(opts: &SuiteOptions) -> Vec<CheckLine> {
    let mut out = Vec::new();
    for base in 2..=3 {
        let m = QBAModel::new(base).expect("valid base");
        out.extend(law_lines(&check_laws(&mereo_spec(&m), 1, 0).expect("finite carrier")));
    }
    out.extend(law_lines(
        &check_laws(&regopen_spec(), opts.cases, opts.seed).expect("generator yields values"),
    ));
    let regions = regions_for(opts, opts.cases.clamp(2, 12));
    out.extend(law_lines(
        &check_laws(&geo_spec(regions.clone(), opts.budget), 1, 0).expect("nonempty carrier"),
    ));

    let m = QBAModel::new(3).expect("valid base");
    let mut whole = mereo_spec(&m);
    let top = m.universe();
    whole.interior = Box::new(move |_| top);
    out.push(control("mereology interior is the universe", whole, 1, 0));
    let mut drop = mereo_spec(&m);
    let mm = m.clone();
    drop.interior = Box::new(move |q| match q.single() {
        // remove atom a where something is left
        Some(x) if mm.mask(x) & !1 != 0 && mm.mask(x) & 1 != 0 => mm.ind(mm.mask(x) & !1),
        _ => *q,
    });
    out.push(control("mereology interior drops an atom", drop, 1, 0));
    let mut shrink = regopen_spec();
    shrink.interior = Box::new(|x| match meet1d(x, &RegOpen1D::regularize([(0, 1)]).expect("valid")) {
        MeetResult::Defined(y) => y,
        MeetResult::UndefinedMeet => x.clone(),
    });
    out.push(control("line interior meets (0, 1)", shrink, opts.cases, opts.seed));
    let mut grow = geo_spec(regions, opts.budget);
    grow.interior = Box::new(|_| crate::geom::GeoOpen::Whole);
    out.push(control("geometry interior is the whole space", grow, 1, 0));
    out
}

// ---------------------------------------------------------------------------
// regular open sets of the line

fn regopen_suite(opts: &SuiteOptions) -> Vec<CheckLine> {
    let mut rng = Rng::seed_from_u64(opts.seed);
    let mut canon = CheckLine::new("line: canonical form idempotent");
    let mut join = CheckLine::new("line: join commutative, associative, idempotent");
    let mut meet = CheckLine::new("line: meet commutative, associative");
    let mut absorb = CheckLine::new("line: absorption");
    let mut de_morgan = CheckLine::new("line: De Morgan");
    let mut compl = CheckLine::new("line: Q + compl Q is the line, Q ext compl Q");
    let mut regular = CheckLine::new("line: int(cl X) = X");
    let mut clopen = CheckLine::new("line: boundary empty, closure regular");
    let mut order = CheckLine::new("line: part_of partial order");
    let mut lub = CheckLine::new("line: join is the least upper bound");
    let mut grid = CheckLine::new("line: join membership on refined grid");

    for _ in 0..opts.cases {
        let (x, y, z) = (random_regopen(&mut rng), random_regopen(&mut rng), random_regopen(&mut rng));
        let show = || format!("X = {x}, Y = {y}, Z = {z}");

        let raw = x.intervals().iter().map(|iv| (iv.lo.clone(), iv.hi.clone()));
        canon.record(RegOpen1D::regularize(raw).ok().as_ref() == Some(&x), show);

        let xy = join1d(&x, &y);
        join.record(
            xy == join1d(&y, &x) && join1d(&xy, &z) == join1d(&x, &join1d(&y, &z)) && join1d(&x, &x) == x,
            show,
        );
        let mxy = meet1d(&x, &y);
        let assoc_l = mxy.clone().defined().and_then(|v| meet1d(&v, &z).defined());
        let assoc_r = meet1d(&y, &z).defined().and_then(|v| meet1d(&x, &v).defined());
        meet.record(mxy == meet1d(&y, &x) && assoc_l == assoc_r && meet1d(&x, &x).defined() == Some(x.clone()), show);

        let a1 = match &mxy {
            MeetResult::Defined(v) => join1d(&x, v) == x,
            MeetResult::UndefinedMeet => true,
        };
        let a2 = meet1d(&x, &xy).defined() == Some(x.clone());
        absorb.record(a1 && a2, show);

        // De Morgan where both sides are defined
        if !xy.is_full() {
            let lhs = compl1d(&xy).expect("nonempty, not full");
            let rhs = match (compl1d(&x), compl1d(&y)) {
                (Ok(cx), Ok(cy)) => meet1d(&cx, &cy).defined(),
                _ => None,
            };
            de_morgan.record(rhs.as_ref() == Some(&lhs), show);
        }
        if let MeetResult::Defined(v) = &mxy {
            if let (Ok(cv), Ok(cx), Ok(cy)) = (compl1d(v), compl1d(&x), compl1d(&y)) {
                de_morgan.record(cv == join1d(&cx, &cy), show);
            }
        }

        if let Ok(cx) = compl1d(&x) {
            let disjoint = meet1d(&x, &cx).is_undefined();
            compl.record(join1d(&x, &cx).is_full() && disjoint, show);
            let cl = closure_m1d(&x).ok();
            let bd = boundary_m1d(&x).ok();
            clopen.record(
                cl.as_ref() == Some(&x) && bd.as_ref().is_some_and(MeetResult::is_undefined),
                show,
            );
        }
        regular.record(RegOpen1D::interior_of_closed(&x.topological_closure()) == x, show);

        order.record(part_of1d(&x, &x), show);
        if part_of1d(&x, &y) && part_of1d(&y, &x) {
            order.record(x == y, show);
        }
        if part_of1d(&x, &y) && part_of1d(&y, &z) {
            order.record(part_of1d(&x, &z), show);
        }
        let xz = join1d(&x, &z);
        order.record(part_of1d(&x, &xz) && part_of1d(&z, &xz), show);

        let upper = join1d(&xy, &z);
        let least = !(part_of1d(&x, &z) && part_of1d(&y, &z)) || part_of1d(&xy, &z);
        lub.record(part_of1d(&x, &xy) && part_of1d(&y, &xy) && part_of1d(&xy, &upper) && least, show);

        grid.record(join_matches_grid(&x, &y, &xy), show);
    }
    let mut out = vec![canon, join, meet, absorb, de_morgan, compl, regular, clopen, order, lub, grid];
    out.extend(law_lines(
        &check_laws(&regopen_spec(), opts.cases, opts.seed).expect("generator yields values"),
    ));
    out
}

/// Membership of the join on every endpoint and every gap midpoint: a gap
/// point is in the join iff it is in X or Y; an endpoint is in the join
/// iff it is in X or Y or both neighbouring gaps are.
fn join_matches_grid(x: &RegOpen1D, y: &RegOpen1D, xy: &RegOpen1D) -> bool {
    let mut pts = x.endpoints();
    pts.extend(y.endpoints());
    pts.sort();
    pts.dedup();
    let half = Rat::new(1, 2);
    let mut probes: Vec<Rat> = Vec::new();
    match (pts.first(), pts.last()) {
        (Some(lo), Some(hi)) => {
            probes.push(lo - &Rat::one());
            probes.push(hi + &Rat::one());
        }
        _ => probes.push(Rat::zero()),
    }
    for w in pts.windows(2) {
        probes.push(&(&w[0] + &w[1]) * &half);
    }
    let in_union = |t: &Rat| x.contains(t) || y.contains(t);
    let gaps_ok = probes.iter().all(|t| xy.contains(t) == in_union(t));
    let ends_ok = pts.iter().enumerate().all(|(i, e)| {
        let left = if i == 0 { e - &Rat::one() } else { &(&pts[i - 1] + e) * &half };
        let right = if i + 1 == pts.len() { e + &Rat::one() } else { &(e + &pts[i + 1]) * &half };
        let expect = in_union(e) || (in_union(&left) && in_union(&right));
        xy.contains(e) == expect
    });
    gaps_ok && ends_ok
}

// ---------------------------------------------------------------------------
// geometry

const UNIT_DIRS: [(i64, i64, i64); 6] = [(1, 0, 1), (0, 1, 1), (3, 4, 5), (-4, 3, 5), (5, -12, 13), (-8, -15, 17)];

fn unit_dir(rng: &mut Rng) -> (Rat, Rat) {
    let (x, y, d) = UNIT_DIRS[rng.gen_range(0..UNIT_DIRS.len())];
    (Rat::new(x, d), Rat::new(y, d))
}

fn offset(c: &PointClass, dir: &(Rat, Rat), dist: &Rat) -> PointClass {
    PointClass {
        x: &c.x + &(&dir.0 * dist),
        y: &c.y + &(&dir.1 * dist),
    }
}

fn quarter(rng: &mut Rng, lo: i64, hi: i64) -> Rat {
    Rat::new(rng.gen_range(lo..=hi), 4)
}

/// A ball inside `outer` (possibly internally tangent, possibly equal).
fn inner_ball(rng: &mut Rng, outer: &Ball) -> Ball {
    let r = outer.r() * &Rat::new(rng.gen_range(1..=8), 8);
    let slack = outer.r() - &r;
    let t = &slack * &Rat::new(rng.gen_range(0..=4), 4);
    Ball::at(offset(outer.center(), &unit_dir(rng), &t), r).expect("positive")
}

/// Probe balls for a region: its centers, points on its circles, a grid over
/// its bounding box and the ball `extra`.
fn probe_points(q: &Region, n: i64) -> Vec<PointClass> {
    let mut pts = Vec::new();
    for b in q.balls() {
        pts.push(b.point());
        for dir in [(1, 0), (0, 1), (-1, 0), (0, -1)] {
            pts.push(PointClass {
                x: b.cx() + &(b.r() * &Rat::int(dir.0)),
                y: b.cy() + &(b.r() * &Rat::int(dir.1)),
            });
        }
    }
    let (x0, y0, x1, y1) = q.bounds();
    for i in 0..=n {
        for j in 0..=n {
            let (s, t) = (Rat::new(i, n), Rat::new(j, n));
            pts.push(PointClass {
                x: &x0 + &(&s * &(&x1 - &x0)),
                y: &y0 + &(&t * &(&y1 - &y0)),
            });
        }
    }
    pts
}

fn geometry_suite(opts: &SuiteOptions) -> Vec<CheckLine> {
    let budget = opts.budget;
    let mut rng = Rng::seed_from_u64(opts.seed);
    let mut concent_eq = CheckLine::new("geom: concent equivalence");
    let mut points = CheckLine::new("geom: Point_refl and equiv_points");
    let mut order = CheckLine::new("geom: ball_pt partial order");
    let mut tangency = CheckLine::new("geom: ET symmetric, IT asymmetric");
    let mut betw = CheckLine::new("geom: between symmetric in its ends");
    let mut diam = CheckLine::new("geom: constructed diametral triples");
    let mut scaling = CheckLine::tri("geom: similarity invariance");
    let mut sat = CheckLine::tri("geom: sat_interior agrees with part_of_region");
    let mut int_bound = CheckLine::tri("geom: int_not_bound");
    let mut bound_reg = CheckLine::tri("geom: bound_not_reg");
    let mut compl_bd = CheckLine::new("geom: compl_boundary");
    let mut closure = CheckLine::new("geom: clos_to_int_bound on probe grid");
    let mut monotone = CheckLine::tri("geom: budget monotone, decisions match construction");
    let mut hausdorff = CheckLine::tri("geom: Hausdorff separation");
    let mut tarski = CheckLine::tri("geom: Tarski P2, P3, P4 and region lemmas");

    for case in 0..opts.cases {
        let a = random_ball(&mut rng);
        let b = if rng.gen_bool(0.5) {
            Ball::at(a.point(), quarter(&mut rng, 1, 12)).expect("positive")
        } else {
            random_ball(&mut rng)
        };
        let c = if rng.gen_bool(0.5) {
            Ball::at(b.point(), quarter(&mut rng, 1, 12)).expect("positive")
        } else {
            random_ball(&mut rng)
        };
        let show = || format!("{a} {b} {c}");

        let trans = !(concent(&a, &b) && concent(&b, &c)) || concent(&a, &c);
        concent_eq.record(concent(&a, &a) && concent(&a, &b) == concent(&b, &a) && trans, show);

        let p = Ball::at(c.point(), quarter(&mut rng, 1, 8)).expect("positive");
        let q = Ball::at(c.point(), quarter(&mut rng, 1, 8)).expect("positive");
        let equiv = !(point_of(&p, &c) && point_of(&q, &c)) || concent(&p, &q);
        points.record(point_of(&a, &a) && equiv, show);

        let mid = inner_ball(&mut rng, &a);
        let low = inner_ball(&mut rng, &mid);
        let chain = ball_pt(&mid, &a) && ball_pt(&low, &mid) && ball_pt(&low, &a);
        let anti = !(ball_pt(&a, &b) && ball_pt(&b, &a)) || a == b;
        let rand_trans = !(ball_pt(&a, &b) && ball_pt(&b, &c)) || ball_pt(&a, &c);
        order.record(ball_pt(&a, &a) && chain && anti && rand_trans, || format!("{low} {mid} {a}"));

        let dir = unit_dir(&mut rng);
        let touching = Ball::at(offset(a.center(), &dir, &(a.r() + b.r())), b.r().clone()).expect("positive");
        let it_ok = !int_tangent(&b, &a) || !int_tangent(&a, &b);
        tangency.record(
            ext_tangent(&a, &touching)
                && ext_tangent(&touching, &a)
                && ext_tangent(&a, &b) == ext_tangent(&b, &a)
                && it_ok,
            show,
        );

        let k = rng.gen_range(1..8);
        let m = Ball::at(b.center().lerp(c.center(), &Rat::new(k, 8)), a.r().clone()).expect("positive");
        let sym = between(&a, &b, &c) == between(&a, &c, &b) && between(&m, &b, &c) == between(&m, &c, &b);
        let constructed = concent(&b, &c) || between(&m, &b, &c);
        betw.record(sym && constructed, show);

        let e = &a;
        let (rd, rf) = (quarter(&mut rng, 1, 8), quarter(&mut rng, 1, 8));
        let minus = (-dir.0.clone(), -dir.1.clone());
        let d_ball = Ball::at(offset(e.center(), &minus, &(e.r() + &rd)), rd).expect("positive");
        let f_ball = Ball::at(offset(e.center(), &dir, &(e.r() + &rf)), rf).expect("positive");
        let ed = diametral(Diametral::External, &d_ball, e, &f_ball);
        let big = Ball::at(e.point(), e.r() * &Rat::int(3)).expect("positive");
        let side = e.r().clone();
        let id_d = Ball::at(offset(big.center(), &minus, &(big.r() - &side)), side.clone()).expect("positive");
        let id_f = Ball::at(offset(big.center(), &dir, &(big.r() - &side)), side).expect("positive");
        let id = diametral(Diametral::Internal, &id_d, &big, &id_f);
        let not_same_side = !diametral(Diametral::External, &d_ball, e, &d_ball);
        diam.record(ed && id && not_same_side && between(e, &d_ball, &f_ball), || {
            format!("{d_ball} {e} {f_ball}")
        });

        let region = random_region(&mut rng, 4);
        let on_circle = {
            let rb = &region.balls()[0];
            Ball::at(offset(rb.center(), &unit_dir(&mut rng), rb.r()), quarter(&mut rng, 1, 4)).expect("positive")
        };
        let (s, dx, dy) = random_similarity(&mut rng);
        let t = |x: &Ball| x.similar(&s, &dx, &dy);
        let tr = region.similar(&s, &dx, &dy);
        let pt_before = part_of_region(&a, &region, budget);
        let pt_after = part_of_region(&t(&a), &tr, budget);
        let same_decision = match (&pt_before, &pt_after) {
            (Containment3::NotContained(w), Containment3::NotContained(w2)) => {
                PointClass {
                    x: &(&s * &w.x) + &dx,
                    y: &(&s * &w.y) + &dy,
                } == *w2
            }
            (x, y) => x == y,
        };
        let preds = [
            ball_pt(&a, &b) == ball_pt(&t(&a), &t(&b)),
            ext_tangent(&a, &touching) == ext_tangent(&t(&a), &t(&touching)),
            int_tangent(&low, &a) == int_tangent(&t(&low), &t(&a)),
            concent(&b, &c) == concent(&t(&b), &t(&c)),
            between(&m, &b, &c) == between(&t(&m), &t(&b), &t(&c)),
            ed == diametral(Diametral::External, &t(&d_ball), &t(e), &t(&f_ball)),
            interior_point(&a, &region) == interior_point(&t(&a), &tr),
            boundary_member(&on_circle, &region) == boundary_member(&t(&on_circle), &tr),
            ext_region(&Region::from_ball(a.clone()), &region) == ext_region(&Region::from_ball(t(&a)), &tr),
            same_decision,
        ];
        let all = preds.iter().all(|&x| x);
        scaling.record3(if pt_before.is_unknown() && all { None } else { Some(all) }, || {
            format!("similarity ({s}, {dx}, {dy}) on {a} and {region}: {preds:?}")
        });

        let si = sat_interior_point(&a, &region, budget);
        sat.record3(si.decided().map(|_| si == pt_before), || format!("{a} in {region}"));

        for probe in probe_points(&region, 2).into_iter().take(12) {
            let pb = Ball::at(probe, quarter(&mut rng, 1, 8)).expect("positive");
            let on_bd = boundary_member(&pb, &region);
            let inside = sat_interior_point(&pb, &region, budget);
            int_bound.record3(inside.decided().map(|ins| !(ins && on_bd)), || format!("{pb} in {region}"));
            if on_bd {
                let pr = part_of_region(&pb, &region, budget);
                bound_reg.record3(pr.decided().map(|x| !x), || format!("{pb} on the boundary of {region}"));
            }
            let compl = RegionExpr::BoundaryOf(Box::new(RegionExpr::Compl(Box::new(RegionExpr::Balls(
                region.clone(),
            )))));
            compl_bd.record(on_bd == compl.contains(pb.center()), || format!("{pb} and {region}"));
        }

        let cl = closure_g(&RegionExpr::Balls(region.clone())).expect("not the whole space");
        for probe in probe_points(&region, 4) {
            let expect = interior_point_at(&probe, &region) || boundary_member_at(&probe, &region);
            closure.record(cl.contains(&probe) == expect, || format!("{probe} and {region}"));
        }

        let kind = [CoverKind::Exact, CoverKind::Short, CoverKind::Long][case % 3];
        let cover = tangency_cover(&mut rng, kind);
        let mut decided: Option<bool> = None;
        let mut ok = true;
        let mut depth = 1;
        let mut last = Containment3::Unknown(0);
        while depth <= budget.depth() {
            last = part_of_region(&cover.ball, &cover.cover, Budget::new(depth).expect("positive"));
            match (decided, last.decided()) {
                (Some(prev), Some(now)) => ok &= prev == now,
                (Some(_), None) => ok = false,
                (None, now) => decided = now,
            }
            if let Some(now) = last.decided() {
                ok &= now == cover.contained;
            }
            depth = if depth == budget.depth() { depth + 1 } else { (depth * 2).min(budget.depth()) };
        }
        monotone.record3(if last.is_unknown() && ok { None } else { Some(ok) }, || {
            format!("{:?} cover of {} by {}", cover.kind, cover.ball, cover.cover)
        });

        let p1 = random_point(&mut rng);
        let mut p2 = random_point(&mut rng);
        if p1 == p2 {
            p2.x = &p2.x + &Rat::one();
        }
        let (h1, h2) = hausdorff_separation(&p1, &p2).expect("distinct points");
        let (r1, r2) = (Region::from_ball(h1.clone()), Region::from_ball(h2.clone()));
        let mut h_ok = ext_region(&r1, &r2);
        let mut h_unknown = false;
        for _ in 0..50 {
            let centre = p1.lerp(&p2, &Rat::new(rng.gen_range(-4..=20), 16));
            let probe = Ball::at(centre, h1.r() * &Rat::new(rng.gen_range(1..=8), 8)).expect("positive");
            let (in1, in2) = (part_of_region(&probe, &r1, budget), part_of_region(&probe, &r2, budget));
            match (in1.decided(), in2.decided()) {
                (Some(true), Some(true)) => h_ok = false,
                (None, _) | (_, None) => h_unknown = true,
                _ => {}
            }
        }
        hausdorff.record3(if h_unknown && h_ok { None } else { Some(h_ok) }, || {
            format!("{p1} {p2} gives {h1} {h2}")
        });

        if case % 2 == 0 {
            let q = random_region(&mut rng, 6);
            let report = check_tarski_postulates(&q, budget);
            tarski.record3(
                if report.passed() && report.p4_unknown > 0 { None } else { Some(report.passed()) },
                || format!("{q}: {report}"),
            );
        }
    }
    let mut out = vec![
        concent_eq, points, order, tangency, betw, diam, scaling, sat, int_bound, bound_reg, compl_bd, closure,
        monotone, hausdorff, tarski,
    ];
    let regions = regions_for(opts, opts.cases.clamp(2, 12));
    out.extend(law_lines(
        &check_laws(&geo_spec(regions, budget), 1, 0).expect("nonempty carrier"),
    ));
    out
}
