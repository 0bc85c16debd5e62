use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use serde_json::{json, Value};

use nsg_core::constructions::{
    duplicate, duplication_frobenius, duplication_max_self, duplication_max_star,
    duplication_min_classifier, duplication_pf, glue, gluing_frobenius, gluing_maximal_sufficient,
    gluing_pf, DuplicationSpec, GluingSpec, IdealKind, SemigroupIdeal, Verdict,
};
use nsg_core::families::{
    backelin_pf_closed, backelin_semigroup, bresinsky_pf_closed, bresinsky_semigroup,
    gas_maximal_predicate, gas_minimal_predicate, gas_pf_closed, gas_semigroup,
    staircase_min_type_family, staircase_pf_closed, uniform_type_family, GasParams, MinimalMode,
};
use nsg_core::oracle::verify::{is_registered_erratum, run_claim, summarize, Grid, GridConfig};
use nsg_core::{Error, NumericalSemigroup};

use crate::args::{FamilyKind, GridArg, ModeArg, VerifyArgs};
use crate::error::CliError;
use crate::record::AnalysisRecord;

pub type CmdResult = Result<ExitCode, CliError>;

fn emit(record: &AnalysisRecord, json: bool) -> CmdResult {
    writeln!(io::stdout().lock(), "{}", record.render(json))?;
    Ok(ExitCode::SUCCESS)
}

pub fn analyze(gens: &[i64], json: bool) -> CmdResult {
    let s = NumericalSemigroup::from_generators(gens)?;
    emit(&AnalysisRecord::new(&s), json)
}

pub fn family(kind: &FamilyKind, json: bool) -> CmdResult {
    let record = match *kind {
        FamilyKind::Gas { n0, s, d, p } => {
            let params = GasParams::new(n0, s, d, p)?;
            let sg = gas_semigroup(&params);
            let closed = gas_pf_closed(&params);
            let minimal: serde_json::Map<String, Value> = MinimalMode::ALL
                .iter()
                .map(|&m| (m.as_str().to_string(), json!(gas_minimal_predicate(&params, m))))
                .collect();
            AnalysisRecord::new(&sg)
                .with("a", params.a())
                .with("b", params.b())
                .with("pf_closed_form", closed.clone())
                .with("closed_form_matches", closed == sg.pf_set())
                .with("maximal_predicate", gas_maximal_predicate(&params))
                .with("minimal_predicate", Value::Object(minimal))
        }
        FamilyKind::Bresinsky { h } => {
            let sg = bresinsky_semigroup(h)?;
            let closed = bresinsky_pf_closed(h)?;
            AnalysisRecord::new(&sg)
                .with("closed_form_matches", closed == sg.pf_set())
                .with("pf_closed_form", closed)
        }
        FamilyKind::Backelin { n, r } => {
            let sg = backelin_semigroup(n, r)?;
            let closed = backelin_pf_closed(n, r)?;
            AnalysisRecord::new(&sg)
                .with("closed_form_matches", closed == sg.pf_set())
                .with("pf_closed_form", closed)
        }
        FamilyKind::UniformType { r } => {
            let sg = uniform_type_family(r)?;
            let closed: Vec<i64> = (1..=r).collect();
            AnalysisRecord::new(&sg)
                .with("closed_form_matches", closed == sg.pf_set())
                .with("pf_closed_form", closed)
        }
        FamilyKind::Staircase { r } => {
            let sg = staircase_min_type_family(r)?;
            let closed = staircase_pf_closed(r);
            AnalysisRecord::new(&sg)
                .with("closed_form_matches", closed == sg.pf_set())
                .with("pf_closed_form", closed)
        }
    };
    emit(&record, json)
}

pub fn glue_cmd(s1: &[i64], s2: &[i64], lambda: i64, mu: i64, json: bool) -> CmdResult {
    let s1 = NumericalSemigroup::from_generators(s1)?;
    let s2 = NumericalSemigroup::from_generators(s2)?;
    let spec = GluingSpec::new(s1, s2, lambda, mu)?;
    let glued = glue(&spec)?;
    let sufficient = match gluing_maximal_sufficient(&spec) {
        Ok(holds) => Verdict::sufficient(holds).as_str(),
        Err(Error::NotApplicable(_)) => "not-applicable",
        Err(e) => return Err(e.into()),
    };
    let record = AnalysisRecord::new(&glued)
        .with("pf_closed_form", gluing_pf(&spec))
        .with("frobenius_closed_form", gluing_frobenius(&spec))
        .with("maximal_sufficient", sufficient);
    emit(&record, json)
}

fn parse_ideal(s: &NumericalSemigroup, ideal: &str) -> Result<SemigroupIdeal, CliError> {
    match ideal.trim() {
        "S" => Ok(SemigroupIdeal::whole(s)),
        "S*" => Ok(SemigroupIdeal::maximal(s)),
        list => {
            let gens = list
                .split(',')
                .map(|t| t.trim().parse::<i64>())
                .collect::<Result<Vec<_>, _>>()
                .map_err(|_| {
                    Error::InvalidParam(format!("ideal must be S, S* or a generator list (got {list:?})"))
                })?;
            Ok(SemigroupIdeal::from_generators(s, &gens)?)
        }
    }
}

pub fn dup_cmd(gens: &[i64], ideal: &str, d: i64, json: bool) -> CmdResult {
    let s = NumericalSemigroup::from_generators(gens)?;
    let e = parse_ideal(&s, ideal)?;
    let spec = DuplicationSpec::new(&s, e, d)?;
    let dup = duplicate(&spec);
    let mut record = AnalysisRecord::new(&dup)
        .with("ideal_kind", spec.e_kind().as_str())
        .with("ideal_tilde", spec.ideal().tilde().minimal_generators().to_vec());
    record = match duplication_frobenius(&spec) {
        Ok(f) => record.with("frobenius_closed_form", f),
        Err(Error::DegenerateStar) => record.with("frobenius_closed_form", Value::Null),
        Err(e) => return Err(e.into()),
    };
    record = match duplication_pf(&spec) {
        Ok(pf) => record.with("pf_closed_form", pf),
        Err(Error::DegenerateStar) => record.with("pf_closed_form", Value::Null),
        Err(e) => return Err(e.into()),
    };
    record = match duplication_min_classifier(&spec) {
        Ok(c) => record
            .with("min_clause", c.clause.as_str())
            .with("min_verdict", c.verdict.as_str()),
        Err(Error::DegenerateStar) => record,
        Err(e) => return Err(e.into()),
    };
    match spec.e_kind() {
        IdealKind::FullS => record = record.with("max_predicate", duplication_max_self(&s, d)?),
        IdealKind::SStar => record = record.with("max_predicate", duplication_max_star(&s, d)?),
        IdealKind::Proper => {}
    }
    emit(&record, json)
}

pub fn verify(args: &VerifyArgs) -> CmdResult {
    let cfg = GridConfig {
        grid: match args.grid {
            GridArg::Smoke => Grid::Smoke,
            GridArg::Small => Grid::Small,
            GridArg::Full => Grid::Full,
        },
        h_max: args.h_max,
        mode: args.mode.map(|m| match m {
            ModeArg::AsStated => MinimalMode::AsStated,
            ModeArg::AsProof => MinimalMode::AsProof,
        }),
    };
    let run = run_claim(&args.claim, &cfg)?;
    let mut out: Box<dyn Write> = match &args.out {
        Some(path) => Box::new(BufWriter::new(File::create(path)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    };
    for r in &run.reports {
        writeln!(out, "{}", r.to_json_line())?;
    }
    out.flush()?;

    let mut failing = false;
    for s in summarize(&run.reports) {
        let erratum = is_registered_erratum(&s.claim);
        let note = if s.all_match() {
            ""
        } else if erratum {
            "  (registered erratum)"
        } else {
            "  MISMATCH"
        };
        eprintln!("{:<28} {:>6}/{:<6}{note}", s.claim, s.matched, s.total);
        if !s.all_match() && !(args.claim == "all" && erratum) {
            failing = true;
        }
    }
    Ok(if failing { ExitCode::from(2) } else { ExitCode::SUCCESS })
}
