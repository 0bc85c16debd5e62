use std::fs::File;
use std::io::{self, Write};
use std::path::Path;
use std::process::ExitCode;

use rayon::prelude::*;

use nsg_core::constructions::{duplicate, DuplicationSpec};
use nsg_core::families::{
    backelin_semigroup, bresinsky_semigroup, gas_semigroup, staircase_min_type_family,
    uniform_type_family, GasParams,
};
use nsg_core::NumericalSemigroup;

use crate::args::SweepKind;
use crate::commands::CmdResult;
use crate::error::CliError;

/// Parses an inclusive `a:b` or `a:b:step` range.
pub fn parse_range(text: &str) -> Result<Vec<i64>, CliError> {
    let bad = || CliError::BadRange(text.to_string());
    let parts: Vec<i64> = text
        .split(':')
        .map(|p| p.trim().parse::<i64>().map_err(|_| bad()))
        .collect::<Result<_, _>>()?;
    let (start, end, step) = match parts[..] {
        [a, b] => (a, b, 1),
        [a, b, step] => (a, b, step),
        _ => return Err(bad()),
    };
    if step <= 0 || end < start {
        return Err(bad());
    }
    Ok((start..=end).step_by(step as usize).collect())
}

fn product(ranges: &[Vec<i64>]) -> Vec<Vec<i64>> {
    ranges.iter().fold(vec![vec![]], |acc, r| {
        acc.iter()
            .flat_map(|prefix| {
                r.iter().map(move |&x| {
                    let mut p = prefix.clone();
                    p.push(x);
                    p
                })
            })
            .collect()
    })
}

fn build(kind: &SweepKind, point: &[i64]) -> Option<NumericalSemigroup> {
    match kind {
        SweepKind::DupSelf { gens, .. } | SweepKind::DupStar { gens, .. } => {
            let s = NumericalSemigroup::from_generators(gens).ok()?;
            let spec = if matches!(kind, SweepKind::DupSelf { .. }) {
                DuplicationSpec::self_duplication(&s, point[0])
            } else {
                DuplicationSpec::star_duplication(&s, point[0])
            };
            Some(duplicate(&spec.ok()?))
        }
        SweepKind::UniformType { .. } => uniform_type_family(point[0]).ok(),
        SweepKind::Staircase { .. } => staircase_min_type_family(point[0]).ok(),
        SweepKind::Gas { .. } => {
            GasParams::new(point[0], point[1], point[2], point[3]).ok().map(|p| gas_semigroup(&p))
        }
        SweepKind::Bresinsky { .. } => bresinsky_semigroup(point[0]).ok(),
        SweepKind::Backelin { .. } => backelin_semigroup(point[0], point[1]).ok(),
    }
}

pub fn sweep(kind: &SweepKind, out: Option<&Path>) -> CmdResult {
    let (names, ranges): (Vec<&str>, Vec<&String>) = match kind {
        SweepKind::DupSelf { d_range, .. } | SweepKind::DupStar { d_range, .. } => {
            (vec!["d"], vec![d_range])
        }
        SweepKind::UniformType { r_range } | SweepKind::Staircase { r_range } => {
            (vec!["r"], vec![r_range])
        }
        SweepKind::Gas { n0_range, s_range, d_range, p_range } => {
            (vec!["n0", "s", "d", "p"], vec![n0_range, s_range, d_range, p_range])
        }
        SweepKind::Bresinsky { h_range } => (vec!["h"], vec![h_range]),
        SweepKind::Backelin { n_range, r_range } => (vec!["n", "r"], vec![n_range, r_range]),
    };
    if let SweepKind::DupSelf { gens, .. } | SweepKind::DupStar { gens, .. } = kind {
        NumericalSemigroup::from_generators(gens)?;
    }
    let ranges: Vec<Vec<i64>> = ranges.into_iter().map(|r| parse_range(r)).collect::<Result<_, _>>()?;
    let points = product(&ranges);

    let rows: Vec<Option<Vec<String>>> = points
        .par_iter()
        .map(|point| {
            let s = build(kind, point)?;
            let profile = s.pf_profile();
            let mut row: Vec<String> = point.iter().map(|x| x.to_string()).collect();
            row.push(profile.frobenius.to_string());
            row.push(profile.cm_type.to_string());
            row.push(profile.reduced_type.to_string());
            row.push(profile.extremality.as_str().to_string());
            Some(row)
        })
        .collect();

    let sink: Box<dyn Write> = match out {
        Some(path) => Box::new(File::create(path)?),
        None => Box::new(io::stdout().lock()),
    };
    let mut w = csv::Writer::from_writer(sink);
    let mut header: Vec<&str> = names;
    header.extend(["frobenius", "type", "reduced_type", "extremality"]);
    w.write_record(&header)?;
    for row in rows.into_iter().flatten() {
        w.write_record(&row)?;
    }
    w.flush()?;
    Ok(ExitCode::SUCCESS)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(parse_range("1:4").unwrap(), vec![1, 2, 3, 4]);
        assert_eq!(parse_range("7:13:2").unwrap(), vec![7, 9, 11, 13]);
        assert!(parse_range("5").is_err());
        assert!(parse_range("5:1").is_err());
        assert!(parse_range("1:5:0").is_err());
        assert!(parse_range("a:b").is_err());
    }

    #[test]
    fn cartesian_order() {
        let p = product(&[vec![1, 2], vec![3, 4]]);
        assert_eq!(p, vec![vec![1, 3], vec![1, 4], vec![2, 3], vec![2, 4]]);
    }
}
