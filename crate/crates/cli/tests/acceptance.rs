use std::collections::BTreeSet;
use std::process::Command;
use std::time::{Duration, Instant};

use serde_json::{json, Value};

use nsg_core::constructions::{duplicate, DuplicationSpec};
use nsg_core::families::{staircase_min_type_family, staircase_pf_closed, uniform_type_family, MinimalMode};
use nsg_core::oracle::dual_path_check;
use nsg_core::oracle::verify::{run_claim, summarize, ClaimRun, Grid, GridConfig};
use nsg_core::{Extremality, NumericalSemigroup};

struct Outcome {
    passed: bool,
    detail: String,
}

struct Suite {
    touched: Vec<Vec<i64>>,
    lines: Vec<(usize, String, bool)>,
}

impl Suite {
    fn run(&mut self, id: usize, name: &str, limit: Option<Duration>, f: impl FnOnce(&mut Self) -> Outcome) {
        let start = Instant::now();
        let mut outcome = f(self);
        let elapsed = start.elapsed();
        if let Some(limit) = limit {
            if elapsed >= limit {
                outcome.passed = false;
                outcome.detail.push_str(&format!("; took {elapsed:?}, limit {limit:?}"));
            }
        }
        let line = format!(
            "criterion {id} [{}] {name}: {} ({:.3}s)",
            if outcome.passed { "PASS" } else { "FAIL" },
            outcome.detail,
            elapsed.as_secs_f64()
        );
        println!("{line}");
        self.lines.push((id, name.to_string(), outcome.passed));
    }

    fn claim(&mut self, claim: &str, cfg: &GridConfig) -> ClaimRun {
        let run = run_claim(claim, cfg).unwrap_or_else(|e| panic!("{claim}: {e}"));
        self.touched.extend(run.semigroups.iter().cloned());
        run
    }
}

fn nsg_json(args: &[&str]) -> Value {
    let out = Command::new(env!("CARGO_BIN_EXE_nsg"))
        .args(args)
        .arg("--json")
        .output()
        .expect("binary runs");
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid json")
}

fn tally(run: &ClaimRun, prefix: &str) -> (usize, usize) {
    run.reports
        .iter()
        .filter(|r| r.claim.starts_with(prefix))
        .fold((0, 0), |(t, m), r| (t + 1, m + r.matched as usize))
}

fn gens_of(v: &Value) -> Vec<i64> {
    v["generators"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x.as_i64().unwrap())
        .collect()
}

fn criterion_1(suite: &mut Suite) -> Outcome {
    let mut failures = Vec::new();
    let mut check = |label: &str, got: &Value, want: Value| {
        if *got != want {
            failures.push(format!("{label}: got {got}, want {want}"));
        }
    };

    let b = nsg_json(&["analyze", "--gens", "12,15,20,23"]);
    check("bresinsky h=2 pf", &b["pf"], json!([28, 31, 33, 41, 49]));
    check("bresinsky h=2 type", &b["type"], json!(5));
    check("bresinsky h=2 reduced type", &b["reduced_type"], json!(2));

    let k = nsg_json(&["analyze", "--gens", "67,70,74,75"]);
    check("backelin pf", &k["pf"], json!([213, 221, 601, 602, 604, 605, 607, 608]));
    check("backelin type", &k["type"], json!(8));
    check("backelin reduced type", &k["reduced_type"], json!(6));

    let g = nsg_json(&["glue", "--s1", "5,6,7", "--s2", "1", "--lambda", "7", "--mu", "26"]);
    check("gluing generators", &g["minimal_generators"], json!([26, 35, 42, 49]));
    check("gluing pf", &g["pf"], json!([212, 219]));
    let bound = g["frobenius"].as_i64().unwrap() - g["multiplicity"].as_i64().unwrap() + 1;
    check("gluing F-m+1", &json!(bound), json!(194));

    let t = nsg_json(&["analyze", "--gens", "5,6,7,8,9"]);
    check("E tilde pf", &t["pf"], json!([1, 2, 3, 4]));

    let d1 = nsg_json(&["dup", "--gens", "3,4,5", "--ideal", "5,6,7", "--d", "11"]);
    check("dup proper tilde", &d1["ideal_tilde"], json!([5, 6, 7, 8, 9]));
    check("dup proper pf", &d1["pf"], json!([2, 4, 15, 17, 19]));
    check("dup proper closed pf", &d1["pf_closed_form"], json!([2, 4, 15, 17, 19]));
    let d2 = nsg_json(&["dup", "--gens", "3,4,5", "--ideal", "S*", "--d", "11"]);
    check("dup S* pf", &d2["pf"], json!([2, 4, 11, 13, 15]));
    check("dup S* closed pf", &d2["pf_closed_form"], json!([2, 4, 11, 13, 15]));
    let d3 = nsg_json(&["dup", "--gens", "3,4,5", "--ideal", "S", "--d", "11"]);
    check("dup S pf", &d3["pf"], json!([13, 15]));
    check("dup S closed pf", &d3["pf_closed_form"], json!([13, 15]));

    let s8 = nsg_json(&["dup", "--gens", "5,6,7", "--ideal", "S", "--d", "7"]);
    check("self dup generators", &s8["generators"], json!([7, 10, 12, 14]));
    check("self dup pf", &s8["pf"], json!([23, 25]));

    for v in [&b, &k, &g, &t, &d1, &d2, &d3, &s8] {
        suite.touched.push(gens_of(v));
    }
    suite.touched.extend([vec![3, 4, 5], vec![5, 6, 7]]);
    Outcome {
        passed: failures.is_empty(),
        detail: if failures.is_empty() {
            "all reference values reproduced".into()
        } else {
            failures.join("; ")
        },
    }
}

fn criterion_2(suite: &mut Suite) -> Outcome {
    let small = GridConfig::new(Grid::Small);
    let bres = suite.claim("thm-3.8", &GridConfig { h_max: Some(6), ..small });
    let back = suite.claim("prop-3.5", &small);
    let gas = suite.claim("thm-3.1", &small);
    let glue = suite.claim("cor-4.2", &small);
    let dup = suite.claim("thm-5.2", &small);

    let max_f = gas
        .reports
        .iter()
        .filter_map(|r| r.oracle.as_array().and_then(|a| a.last()).and_then(Value::as_i64))
        .max()
        .unwrap_or(0);
    let exact = |run: &ClaimRun, claim: &str| {
        run.reports
            .iter()
            .filter(|r| r.claim == claim)
            .fold((0, 0), |(t, m), r| (t + 1, m + r.matched as usize))
    };
    let (dt, dm) = ["thm-5.2/case-S", "thm-5.2/case-S*", "thm-5.2/case-proper"]
        .iter()
        .map(|c| exact(&dup, c))
        .fold((0, 0), |(a, b), (t, m)| (a + t, b + m));
    let parts = [
        ("thm-3.8 h in [2,6]", tally(&bres, "thm-3.8"), 5),
        ("prop-3.5", tally(&back, "prop-3.5"), 1),
        ("thm-3.1", tally(&gas, "thm-3.1/"), 200),
        ("cor-4.2 pf", exact(&glue, "cor-4.2/pf"), 50),
        ("cor-4.2 frobenius", exact(&glue, "cor-4.2/frobenius"), 50),
        ("thm-5.2 pf", (dt, dm), 100),
        ("thm-5.2 type", tally(&dup, "thm-5.2/type/"), 100),
        ("thm-5.2 frobenius", exact(&dup, "thm-5.2/frobenius"), 100),
    ];
    let mut passed = max_f < 1_000_000;
    let mut detail = Vec::new();
    for (label, (total, matched), min_total) in parts {
        passed &= total >= min_total && matched == total;
        detail.push(format!("{label} {matched}/{total}"));
    }
    for case in ["case-S", "case-S*", "case-proper"] {
        let (t, m) = exact(&dup, &format!("thm-5.2/{case}"));
        passed &= t > 0;
        detail.push(format!("thm-5.2 {case} {m}/{t}"));
    }
    for s in summarize(&gas.reports) {
        if !s.all_match() && s.claim.starts_with("thm-3.1") {
            detail.push(format!("mismatch in {} ({}/{})", s.claim, s.matched, s.total));
        }
    }
    detail.push(format!("max F on gas grid {max_f}"));
    Outcome { passed, detail: detail.join(", ") }
}

fn criterion_3(suite: &mut Suite) -> Outcome {
    let small = GridConfig::new(Grid::Small);
    let bres = suite.claim("prop-3.10", &GridConfig { h_max: Some(6), ..small });
    let back = suite.claim("prop-3.6", &small);
    let (tb, mb) = tally(&bres, "prop-3.10");
    let (tk, mk) = tally(&back, "prop-3.6");
    Outcome {
        passed: tb == 5 && tb == mb && tk > 0 && tk == mk,
        detail: format!("bresinsky neither {mb}/{tb}, backelin neither {mk}/{tk}"),
    }
}

fn criterion_4(suite: &mut Suite) -> Outcome {
    let small = GridConfig::new(Grid::Small);
    let mut passed = true;
    let mut detail = Vec::new();
    for claim in ["prop-3.2", "prop-4.3", "cor-4.6", "thm-5.4", "prop-5.7", "prop-5.9"] {
        let run = suite.claim(claim, &small);
        let (t, m) = tally(&run, claim);
        passed &= t > 0 && t == m;
        detail.push(format!("{claim} {m}/{t}"));
    }
    Outcome { passed, detail: detail.join(", ") }
}

fn criterion_5(suite: &mut Suite) -> Outcome {
    let run = suite.claim("prop-3.3", &GridConfig::new(Grid::Small));
    let mut perfect = Vec::new();
    let mut detail = Vec::new();
    for mode in MinimalMode::ALL {
        let (t, m) = tally(&run, &format!("prop-3.3/mode={}", mode.as_str()));
        if t > 0 && t == m {
            perfect.push(mode.as_str());
        }
        detail.push(format!("{} {m}/{t} ({:.2}%)", mode.as_str(), 100.0 * m as f64 / t as f64));
    }
    let verdict = match perfect.as_slice() {
        [one] => format!("agreeing mode: {one}"),
        [] => "no mode reaches 100%".to_string(),
        _ => "both modes reach 100%".to_string(),
    };
    detail.push(verdict);
    Outcome { passed: perfect.len() == 1, detail: detail.join(", ") }
}

fn criterion_6(suite: &mut Suite) -> Outcome {
    let mut failures = Vec::new();
    let mut dups = 0;
    for r in 2..=8i64 {
        let u = uniform_type_family(r).unwrap();
        if u.extremality() != Extremality::MaximalOnly || u.cm_type() as i64 != r {
            failures.push(format!("uniform r={r}"));
        }
        let st = staircase_min_type_family(r).unwrap();
        if st.extremality() != Extremality::MinimalOnly
            || st.cm_type() as i64 != r
            || st.pf_set() != staircase_pf_closed(r)
        {
            failures.push(format!("staircase r={r}"));
        }
        let m = u.multiplicity();
        let ds: Vec<i64> = (2 * m + 1..)
            .step_by(2)
            .filter(|&d| u.contains(d))
            .take(3)
            .collect();
        for d in ds {
            let dup = duplicate(&DuplicationSpec::self_duplication(&u, d).unwrap());
            dups += 1;
            if dup.cm_type() as i64 != r || dup.extremality() != Extremality::MaximalOnly {
                failures.push(format!("uniform r={r} duplicated with d={d}"));
            }
            suite.touched.push(dup.generators().to_vec());
        }
        suite.touched.push(u.generators().to_vec());
        suite.touched.push(st.generators().to_vec());
    }
    Outcome {
        passed: failures.is_empty(),
        detail: if failures.is_empty() {
            format!("7 uniform, 7 staircase, {dups} self-duplications as expected")
        } else {
            failures.join("; ")
        },
    }
}

fn criterion_7(suite: &mut Suite) -> Outcome {
    let unique: BTreeSet<Vec<i64>> = suite.touched.iter().cloned().collect();
    let divergences: Vec<String> = unique
        .iter()
        .flat_map(|gens| {
            let s = NumericalSemigroup::from_generators(gens).expect("touched semigroups are valid");
            dual_path_check(&s)
        })
        .map(|d| format!("{:?} {}: core {} oracle {}", d.generators, d.what, d.core, d.oracle))
        .collect();
    Outcome {
        passed: divergences.is_empty(),
        detail: if divergences.is_empty() {
            format!("{} semigroups, zero divergences", unique.len())
        } else {
            format!("{} divergences: {}", divergences.len(), divergences.join("; "))
        },
    }
}

#[test]
fn acceptance_criteria() {
    let mut suite = Suite { touched: Vec::new(), lines: Vec::new() };
    suite.run(1, "example fixtures", Some(Duration::from_secs(1)), criterion_1);
    suite.run(2, "closed forms vs oracle", Some(Duration::from_secs(60)), criterion_2);
    suite.run(3, "never-extremal families", None, criterion_3);
    suite.run(4, "criterion soundness", None, criterion_4);
    suite.run(5, "minimal-type threshold adjudication", None, criterion_5);
    suite.run(6, "infinite-family remarks", Some(Duration::from_secs(5)), criterion_6);
    suite.run(7, "dual-path invariants", None, criterion_7);

    let failed: Vec<String> = suite
        .lines
        .iter()
        .filter(|(_, _, ok)| !ok)
        .map(|(id, name, _)| format!("{id} ({name})"))
        .collect();
    assert!(failed.is_empty(), "failed criteria: {}", failed.join(", "));
}
