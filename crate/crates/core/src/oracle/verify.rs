//! Claim-by-claim comparison of the closed forms against the oracle over
//! parameter grids.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use num_integer::Integer;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use super::NaiveSemigroup;
use crate::constructions::{
    duplicate, duplication_frobenius, duplication_max_self, duplication_max_star,
    duplication_min_classifier, duplication_pf, duplication_type, gluing_frobenius,
    gluing_maximal_sufficient, gluing_pf, nice_extension_for_target, DuplicationSpec,
    GluingSpec, IdealKind, SemigroupIdeal, Verdict,
};
use crate::error::{Error, Result};
use crate::families::{
    backelin_pf_closed, backelin_semigroup, bresinsky_frobenius_closed, bresinsky_pf_closed,
    bresinsky_semigroup, gas_maximal_predicate, gas_minimal_predicate, gas_pf_closed,
    staircase_min_type_family, staircase_pf_closed, uniform_type_family, GasParams, MinimalMode,
};
use crate::semigroup::NumericalSemigroup;

const MAX_ESTIMATED_FROBENIUS: i64 = 10_000_000;

/// Every claim `verify_claim` understands, in the order `all` runs them.
pub const CLAIMS: &[&str] = &[
    "thm-3.1", "prop-3.2", "prop-3.3", "prop-3.5", "prop-3.6", "thm-3.8", "prop-3.10",
    "cor-4.2", "prop-4.3", "cor-4.6", "thm-5.2", "thm-5.4", "prop-5.7", "prop-5.9", "rem-5.3",
    "rem-5.5", "rem-5.8",
];

/// Report claim ids (or prefixes) whose mismatches are known findings.
pub const ERRATA: &[(&str, &str)] = &[
    (
        "thm-3.1/b>=2",
        "for s >= 2 the oracle PF is the closed-form set shifted by (s-1)*n0",
    ),
    ("prop-3.3/mode=AsStated", "threshold n0 < d-1 disagrees with the proof's n0 < d+1"),
    (
        "prop-3.3/mode=AsProof",
        "symmetric b = 0, p = 2 semigroups with d < n0 are minimal but rejected",
    ),
];

pub fn is_registered_erratum(claim: &str) -> bool {
    ERRATA.iter().any(|(prefix, _)| claim.starts_with(prefix))
}

/// Fixed grid sizes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Grid {
    Smoke,
    Small,
    Full,
}

impl FromStr for Grid {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "smoke" => Ok(Grid::Smoke),
            "small" => Ok(Grid::Small),
            "full" => Ok(Grid::Full),
            other => Err(Error::InvalidParam(format!(
                "unknown grid {other:?} (expected smoke, small or full)"
            ))),
        }
    }
}

impl fmt::Display for Grid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Grid::Smoke => "smoke",
            Grid::Small => "small",
            Grid::Full => "full",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GridConfig {
    pub grid: Grid,
    /// Upper end of the Bresinsky range; defaults to 6.
    pub h_max: Option<i64>,
    /// Restricts the minimal-type claim to one mode.
    pub mode: Option<MinimalMode>,
}

impl GridConfig {
    pub fn new(grid: Grid) -> Self {
        Self { grid, h_max: None, mode: None }
    }

    fn h_max(&self) -> i64 {
        self.h_max.unwrap_or(match self.grid {
            Grid::Full => 8,
            _ => 6,
        })
    }

    fn modes(&self) -> Vec<MinimalMode> {
        match self.mode {
            Some(m) => vec![m],
            None => MinimalMode::ALL.to_vec(),
        }
    }
}

impl Default for GridConfig {
    fn default() -> Self {
        Self::new(Grid::Small)
    }
}

/// One closed-form vs oracle comparison.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub claim: String,
    pub instance: Value,
    #[serde(rename = "match")]
    pub matched: bool,
    pub closed_form: Value,
    pub oracle: Value,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl VerificationReport {
    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("reports serialize")
    }
}

/// Reports plus the generator lists of every semigroup the run built.
#[derive(Debug, Clone, Default)]
pub struct ClaimRun {
    pub reports: Vec<VerificationReport>,
    pub semigroups: Vec<Vec<i64>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClaimSummary {
    pub claim: String,
    pub total: usize,
    pub matched: usize,
}

impl ClaimSummary {
    pub fn all_match(&self) -> bool {
        self.total == self.matched
    }
}

/// Per-claim-id totals, in order of first appearance.
pub fn summarize(reports: &[VerificationReport]) -> Vec<ClaimSummary> {
    let mut out: Vec<ClaimSummary> = Vec::new();
    for r in reports {
        let idx = match out.iter().position(|s| s.claim == r.claim) {
            Some(i) => i,
            None => {
                out.push(ClaimSummary { claim: r.claim.clone(), total: 0, matched: 0 });
                out.len() - 1
            }
        };
        out[idx].total += 1;
        out[idx].matched += r.matched as usize;
    }
    out
}

struct Outcome {
    reports: Vec<VerificationReport>,
    semigroups: Vec<Vec<i64>>,
}

type Task = Box<dyn Fn() -> Outcome + Send + Sync>;

fn guard(gens: &[i64]) -> Result<()> {
    let min = *gens.iter().min().expect("nonempty");
    let max = *gens.iter().max().expect("nonempty");
    let est = (min - 1).saturating_mul(max - 1) - 1;
    if est > MAX_ESTIMATED_FROBENIUS {
        return Err(Error::GridTooLarge(est));
    }
    Ok(())
}

fn compare(claim: impl Into<String>, instance: Value, closed: Value, oracle: Value) -> VerificationReport {
    VerificationReport {
        claim: claim.into(),
        instance,
        matched: closed == oracle,
        closed_form: closed,
        oracle,
        elapsed: Duration::ZERO,
    }
}

fn soundness(claim: impl Into<String>, instance: Value, verdict: Verdict, actual: bool) -> VerificationReport {
    VerificationReport {
        claim: claim.into(),
        instance,
        matched: verdict.is_sound_for(actual),
        closed_form: json!(verdict.as_str()),
        oracle: json!(actual),
        elapsed: Duration::ZERO,
    }
}

fn naive(gens: &[i64]) -> NaiveSemigroup {
    NaiveSemigroup::new(gens).expect("grid semigroups are valid")
}

fn sg(gens: &[i64]) -> NumericalSemigroup {
    NumericalSemigroup::from_generators(gens).expect("grid semigroups are valid")
}

fn s_json(s: &NumericalSemigroup) -> Value {
    json!(s.minimal_generators())
}

fn gas_grid(grid: Grid) -> Vec<GasParams> {
    let (n0_max, d_max) = match grid {
        Grid::Smoke => (8, 8),
        Grid::Small => (11, 12),
        Grid::Full => (15, 12),
    };
    let mut out = Vec::new();
    for n0 in 3..=n0_max {
        for s in 1..=3 {
            for d in 1..=d_max {
                for p in 2..n0 {
                    if let Ok(params) = GasParams::new(n0, s, d, p) {
                        out.push(params);
                    }
                }
            }
        }
    }
    out
}

fn gas_instance(p: &GasParams) -> Value {
    json!({"n0": p.n0(), "s": p.s(), "d": p.d(), "p": p.p(), "b": p.b()})
}

fn backelin_grid(grid: Grid) -> Vec<(i64, i64)> {
    let n_max = if grid == Grid::Smoke { 3 } else { 4 };
    (2..=n_max)
        .flat_map(|n| (3 * n + 2..=3 * n + 6).map(move |r| (n, r)))
        .collect()
}

/// Base semigroups for the construction grids.
fn bases(grid: Grid) -> Vec<NumericalSemigroup> {
    let mut lists: Vec<&[i64]> = vec![&[1], &[2, 3], &[3, 4, 5], &[3, 5, 7], &[5, 6, 7], &[3, 7, 11]];
    if grid >= Grid::Small {
        lists.extend_from_slice(&[&[2, 5], &[3, 4], &[4, 5, 6], &[5, 7, 9], &[4, 5, 6, 7]]);
    }
    if grid >= Grid::Full {
        lists.extend_from_slice(&[&[3, 5], &[4, 7, 9], &[5, 6, 8, 9], &[4, 9, 14, 19], &[5, 8, 11]]);
    }
    lists.into_iter().map(sg).collect()
}

fn non_generator_elements(s: &NumericalSemigroup, max: i64) -> Vec<i64> {
    (2..=max)
        .filter(|&x| s.contains(x) && !s.is_minimal_generator(x))
        .collect()
}

fn odd_elements(s: &NumericalSemigroup, max: i64) -> Vec<i64> {
    (1..=max).step_by(2).filter(|&x| s.contains(x)).collect()
}

fn gluing_grid(grid: Grid) -> Result<Vec<GluingSpec>> {
    let (n_bases, bound) = match grid {
        Grid::Smoke => (4, 10),
        Grid::Small => (6, 14),
        Grid::Full => (9, 20),
    };
    let bs: Vec<NumericalSemigroup> = bases(Grid::Full).into_iter().take(n_bases).collect();
    let mut out = Vec::new();
    for s1 in &bs {
        for s2 in &bs {
            for &lambda in &non_generator_elements(s2, bound) {
                for &mu in &non_generator_elements(s1, bound) {
                    if lambda.gcd(&mu) != 1 {
                        continue;
                    }
                    let Ok(spec) = GluingSpec::new(s1.clone(), s2.clone(), lambda, mu) else {
                        continue;
                    };
                    guard(&spec.glued_generators())?;
                    if crate::constructions::glue(&spec).is_ok() {
                        out.push(spec);
                    }
                }
            }
        }
    }
    Ok(out)
}

fn gluing_instance(spec: &GluingSpec) -> Value {
    json!({
        "s1": s_json(spec.s1()),
        "s2": s_json(spec.s2()),
        "lambda": spec.lambda(),
        "mu": spec.mu(),
    })
}

fn ideals(s: &NumericalSemigroup, grid: Grid) -> Vec<SemigroupIdeal> {
    let bound = match grid {
        Grid::Smoke => 8,
        Grid::Small => 10,
        Grid::Full => 12,
    };
    let mut out = vec![SemigroupIdeal::whole(s)];
    if !s.is_natural() {
        out.push(SemigroupIdeal::maximal(s));
    }
    let elems: Vec<i64> = (1..=bound).filter(|&x| s.contains(x)).collect();
    let mut seen = BTreeSet::new();
    let mut candidates: Vec<Vec<i64>> = elems.iter().map(|&g| vec![g]).collect();
    for (i, &a) in elems.iter().enumerate() {
        for &b in &elems[i + 1..] {
            candidates.push(vec![a, b]);
        }
    }
    for gens in candidates {
        let e = SemigroupIdeal::from_generators(s, &gens).expect("elements of S");
        if e.kind() != IdealKind::Proper {
            continue;
        }
        if seen.insert(e.tilde().minimal_generators().to_vec()) {
            out.push(e);
        }
    }
    out
}

fn dup_d_max(grid: Grid) -> i64 {
    match grid {
        Grid::Smoke => 15,
        Grid::Small => 21,
        Grid::Full => 31,
    }
}

fn duplication_grid(grid: Grid) -> Result<Vec<DuplicationSpec>> {
    let mut out = Vec::new();
    for s in bases(grid) {
        let ds = odd_elements(&s, dup_d_max(grid));
        for e in ideals(&s, grid) {
            for &d in &ds {
                let spec = DuplicationSpec::new(&s, e.clone(), d)?;
                guard(&[2 * s.multiplicity(), 2 * s.frobenius().max(0) + 2 * e.conductor() + d + 2])?;
                out.push(spec);
            }
        }
    }
    Ok(out)
}

fn dup_instance(spec: &DuplicationSpec) -> Value {
    json!({
        "s": s_json(spec.s()),
        "ideal": spec.ideal().generators(),
        "kind": spec.e_kind().as_str(),
        "d": spec.d(),
    })
}

fn case_name(kind: IdealKind) -> &'static str {
    match kind {
        IdealKind::FullS => "case-S",
        IdealKind::SStar => "case-S*",
        IdealKind::Proper => "case-proper",
    }
}

fn self_dup_grid(grid: Grid) -> Vec<(NumericalSemigroup, i64)> {
    bases(grid)
        .into_iter()
        .flat_map(|s| {
            let ds = odd_elements(&s, dup_d_max(grid));
            ds.into_iter().map(move |d| (s.clone(), d))
        })
        .collect()
}

fn dup_gens(spec: &DuplicationSpec) -> Vec<i64> {
    duplicate(spec).generators().to_vec()
}

fn tasks_for(claim: &str, cfg: &GridConfig) -> Result<Vec<Task>> {
    let grid = cfg.grid;
    let mut tasks: Vec<Task> = Vec::new();
    match claim {
        "thm-3.1" | "prop-3.2" | "prop-3.3" => {
            let modes = cfg.modes();
            for params in gas_grid(grid) {
                let seq = params.sequence();
                guard(&seq)?;
                let claim = claim.to_string();
                let modes = modes.clone();
                tasks.push(Box::new(move || {
                    let oracle = naive(&seq);
                    let inst = gas_instance(&params);
                    let reports = match claim.as_str() {
                        "thm-3.1" => {
                            let id = match params.b() {
                                0 => "thm-3.1/b=0",
                                1 => "thm-3.1/b=1",
                                _ => "thm-3.1/b>=2",
                            };
                            vec![compare(id, inst, json!(gas_pf_closed(&params)), json!(oracle.pf()))]
                        }
                        "prop-3.2" => vec![compare(
                            "prop-3.2",
                            inst,
                            json!(gas_maximal_predicate(&params)),
                            json!(oracle.extremality().is_maximal()),
                        )],
                        _ => modes
                            .iter()
                            .map(|&m| {
                                compare(
                                    format!("prop-3.3/mode={}", m.as_str()),
                                    inst.clone(),
                                    json!(gas_minimal_predicate(&params, m)),
                                    json!(oracle.extremality().is_minimal()),
                                )
                            })
                            .collect(),
                    };
                    Outcome { reports, semigroups: vec![seq.clone()] }
                }));
            }
        }
        "prop-3.5" | "prop-3.6" => {
            for (n, r) in backelin_grid(grid) {
                let gens = backelin_semigroup(n, r)?.generators().to_vec();
                guard(&gens)?;
                let claim = claim.to_string();
                tasks.push(Box::new(move || {
                    let oracle = naive(&gens);
                    let inst = json!({"n": n, "r": r});
                    let report = if claim == "prop-3.5" {
                        compare(
                            "prop-3.5",
                            inst,
                            json!(backelin_pf_closed(n, r).expect("valid grid point")),
                            json!(oracle.pf()),
                        )
                    } else {
                        compare("prop-3.6", inst, json!("neither"), json!(oracle.extremality().as_str()))
                    };
                    Outcome { reports: vec![report], semigroups: vec![gens.clone()] }
                }));
            }
        }
        "thm-3.8" | "prop-3.10" => {
            for h in 2..=cfg.h_max() {
                let est = bresinsky_frobenius_closed(h);
                if est > MAX_ESTIMATED_FROBENIUS {
                    return Err(Error::GridTooLarge(est));
                }
                let gens = bresinsky_semigroup(h)?.generators().to_vec();
                let claim = claim.to_string();
                tasks.push(Box::new(move || {
                    let oracle = naive(&gens);
                    let inst = json!({"h": h});
                    let report = if claim == "thm-3.8" {
                        compare(
                            "thm-3.8",
                            inst,
                            json!(bresinsky_pf_closed(h).expect("h >= 2")),
                            json!(oracle.pf()),
                        )
                    } else {
                        compare("prop-3.10", inst, json!("neither"), json!(oracle.extremality().as_str()))
                    };
                    Outcome { reports: vec![report], semigroups: vec![gens.clone()] }
                }));
            }
        }
        "cor-4.2" | "prop-4.3" => {
            for spec in gluing_grid(grid)? {
                let claim = claim.to_string();
                tasks.push(Box::new(move || {
                    let gens = spec.glued_generators();
                    let oracle = naive(&gens);
                    let inst = gluing_instance(&spec);
                    let mut touched = vec![
                        gens.clone(),
                        spec.s1().generators().to_vec(),
                        spec.s2().generators().to_vec(),
                    ];
                    let reports = if claim == "cor-4.2" {
                        vec![
                            compare("cor-4.2/pf", inst.clone(), json!(gluing_pf(&spec)), json!(oracle.pf())),
                            compare(
                                "cor-4.2/frobenius",
                                inst,
                                json!(gluing_frobenius(&spec)),
                                json!(oracle.frobenius),
                            ),
                        ]
                    } else {
                        match gluing_maximal_sufficient(&spec) {
                            Ok(holds) => vec![soundness(
                                "prop-4.3",
                                inst,
                                Verdict::sufficient(holds),
                                oracle.extremality().is_maximal(),
                            )],
                            Err(_) => {
                                touched.clear();
                                vec![]
                            }
                        }
                    };
                    Outcome { reports, semigroups: touched }
                }));
            }
        }
        "cor-4.6" => {
            let (p_max, t_max) = match grid {
                Grid::Smoke => (4, 14),
                Grid::Small => (6, 20),
                Grid::Full => (8, 28),
            };
            for s in bases(grid) {
                for target in non_generator_elements(&s, t_max) {
                    for p in 2..=p_max {
                        let Ok(ext) = nice_extension_for_target(&s, p, target) else {
                            continue;
                        };
                        let gens = ext.spec().glued_generators();
                        guard(&gens)?;
                        let base = s.generators().to_vec();
                        tasks.push(Box::new(move || {
                            let closed = naive(&base).extremality().is_maximal();
                            let oracle = naive(&gens).extremality().is_maximal();
                            let inst = json!({"s": base, "p": p, "target": target});
                            Outcome {
                                reports: vec![compare("cor-4.6", inst, json!(closed), json!(oracle))],
                                semigroups: vec![base.clone(), gens.clone()],
                            }
                        }));
                    }
                }
            }
        }
        "thm-5.2" | "thm-5.4" => {
            for spec in duplication_grid(grid)? {
                if spec.s().is_natural() && spec.e_kind() == IdealKind::SStar {
                    continue;
                }
                let claim = claim.to_string();
                tasks.push(Box::new(move || {
                    let gens = dup_gens(&spec);
                    let oracle = naive(&gens);
                    let inst = dup_instance(&spec);
                    let reports = if claim == "thm-5.2" {
                        let case = case_name(spec.e_kind());
                        vec![
                            compare(
                                format!("thm-5.2/{case}"),
                                inst.clone(),
                                json!(duplication_pf(&spec).expect("non-degenerate")),
                                json!(oracle.pf()),
                            ),
                            compare(
                                format!("thm-5.2/type/{case}"),
                                inst.clone(),
                                json!(duplication_type(&spec).expect("non-degenerate")),
                                json!(oracle.pf().len()),
                            ),
                            compare(
                                "thm-5.2/frobenius",
                                inst,
                                json!(duplication_frobenius(&spec).expect("non-degenerate")),
                                json!(oracle.frobenius),
                            ),
                        ]
                    } else {
                        let c = duplication_min_classifier(&spec).expect("non-degenerate");
                        vec![soundness(
                            format!("thm-5.4/clause={}", c.clause),
                            inst,
                            c.verdict,
                            oracle.extremality().is_minimal(),
                        )]
                    };
                    let touched = vec![
                        gens.clone(),
                        spec.s().generators().to_vec(),
                        spec.ideal().tilde().generators().to_vec(),
                    ];
                    Outcome { reports, semigroups: touched }
                }));
            }
        }
        "prop-5.7" | "prop-5.9" => {
            for (s, d) in self_dup_grid(grid) {
                if claim == "prop-5.9" && s.is_natural() {
                    continue;
                }
                let claim = claim.to_string();
                tasks.push(Box::new(move || {
                    let spec = if claim == "prop-5.7" {
                        DuplicationSpec::self_duplication(&s, d)
                    } else {
                        DuplicationSpec::star_duplication(&s, d)
                    }
                    .expect("d odd in S");
                    let gens = dup_gens(&spec);
                    let predicate = if claim == "prop-5.7" {
                        duplication_max_self(&s, d)
                    } else {
                        duplication_max_star(&s, d)
                    }
                    .expect("d odd in S");
                    let actual = naive(&gens).extremality().is_maximal();
                    let inst = json!({"s": s_json(&s), "d": d});
                    Outcome {
                        reports: vec![compare(claim.clone(), inst, json!(predicate), json!(actual))],
                        semigroups: vec![gens, s.generators().to_vec()],
                    }
                }));
            }
        }
        "rem-5.3" | "rem-5.5" | "rem-5.8" => {
            let r_min = if claim == "rem-5.3" { 1 } else { 2 };
            for r in r_min..=8 {
                let (s, base_pf) = if claim == "rem-5.5" {
                    (staircase_min_type_family(r)?, staircase_pf_closed(r))
                } else {
                    (uniform_type_family(r)?, (1..=r).collect())
                };
                let m = s.multiplicity();
                let ds: Vec<i64> = odd_elements(&s, 8 * m)
                    .into_iter()
                    .filter(|&d| claim != "rem-5.8" || d > 2 * m)
                    .take(3)
                    .collect();
                let mut units = vec![(None, s.generators().to_vec())];
                for d in ds {
                    let gens = dup_gens(&DuplicationSpec::self_duplication(&s, d)?);
                    guard(&gens)?;
                    units.push((Some(d), gens));
                }
                for (d, gens) in units {
                    let claim = claim.to_string();
                    let pf_closed: Vec<i64> = match d {
                        None => base_pf.clone(),
                        Some(d) => base_pf.iter().map(|&f| 2 * f + d).collect(),
                    };
                    tasks.push(Box::new(move || {
                        let oracle = naive(&gens);
                        let pf = oracle.pf();
                        let inst = match d {
                            None => json!({"r": r}),
                            Some(d) => json!({"r": r, "d": d}),
                        };
                        let (closed, actual) = if claim == "rem-5.3" {
                            (json!({"pf": pf_closed, "type": r}), json!({"type": pf.len(), "pf": pf}))
                        } else {
                            let expected = if claim == "rem-5.5" { "minimal" } else { "maximal" };
                            (
                                json!({"pf": pf_closed, "type": r, "extremality": expected}),
                                json!({"pf": pf, "type": pf.len(), "extremality": oracle.extremality().as_str()}),
                            )
                        };
                        Outcome {
                            reports: vec![compare(claim.clone(), inst, closed, actual)],
                            semigroups: vec![gens.clone()],
                        }
                    }));
                }
            }
        }
        other => return Err(Error::UnknownClaim(other.to_string())),
    }
    Ok(tasks)
}

fn run_tasks(tasks: Vec<Task>) -> ClaimRun {
    let outcomes: Vec<Outcome> = tasks
        .par_iter()
        .map(|task| {
            let start = Instant::now();
            let mut outcome = task();
            let elapsed = start.elapsed();
            for r in &mut outcome.reports {
                r.elapsed = elapsed;
            }
            outcome
        })
        .collect();
    let mut run = ClaimRun::default();
    for o in outcomes {
        run.reports.extend(o.reports);
        run.semigroups.extend(o.semigroups);
    }
    run
}

/// Runs `claim` (or every claim, for `"all"`) over the configured grid.
pub fn run_claim(claim: &str, cfg: &GridConfig) -> Result<ClaimRun> {
    let claims: Vec<&str> = if claim == "all" { CLAIMS.to_vec() } else { vec![claim] };
    let mut tasks = Vec::new();
    for c in claims {
        tasks.extend(tasks_for(c, cfg)?);
    }
    Ok(run_tasks(tasks))
}

pub fn verify_claim(claim: &str, cfg: &GridConfig) -> Result<Vec<VerificationReport>> {
    Ok(run_claim(claim, cfg)?.reports)
}

/// The three worked duplication examples on `<3,4,5>` with `d = 11`.
pub fn duplication_examples() -> Vec<VerificationReport> {
    let s = sg(&[3, 4, 5]);
    let ideals = [
        SemigroupIdeal::from_generators(&s, &[5, 6, 7]).expect("elements of S"),
        SemigroupIdeal::maximal(&s),
        SemigroupIdeal::whole(&s),
    ];
    ideals
        .into_iter()
        .map(|e| {
            let spec = DuplicationSpec::new(&s, e, 11).expect("valid example");
            let oracle = naive(&dup_gens(&spec));
            compare(
                format!("thm-5.2/{}", case_name(spec.e_kind())),
                dup_instance(&spec),
                json!(duplication_pf(&spec).expect("non-degenerate")),
                json!(oracle.pf()),
            )
        })
        .collect()
}
