//! Brute-force recomputation of semigroup invariants straight from the
//! definitions, kept independent of the Apéry machinery in
//! [`crate::semigroup`].

pub mod verify;

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::semigroup::{Extremality, NumericalSemigroup};

fn check_gens(gens: &[i64]) -> Result<()> {
    if gens.is_empty() {
        return Err(Error::EmptyGenerators);
    }
    if let Some(&bad) = gens.iter().find(|&&g| g <= 0) {
        return Err(Error::ZeroGenerator(bad));
    }
    let g = gens.iter().fold(0i64, |acc, &x| acc.gcd(&x));
    if g != 1 {
        return Err(Error::GcdNotOne(g));
    }
    Ok(())
}

/// `table[x]` for `0 <= x <= bound`: whether `x` is a nonnegative integer
/// combination of `gens`.
pub fn naive_closure(gens: &[i64], bound: i64) -> Result<Vec<bool>> {
    check_gens(gens)?;
    if bound < 0 {
        return Err(Error::InvalidParam(format!("bound must be nonnegative (got {bound})")));
    }
    let mut table = vec![false; bound as usize + 1];
    table[0] = true;
    for x in 1..=bound as usize {
        table[x] = gens.iter().any(|&g| g as usize <= x && table[x - g as usize]);
    }
    Ok(table)
}

/// Everything the oracle knows about one semigroup.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NaiveSemigroup {
    pub frobenius: i64,
    pub multiplicity: i64,
    gens: Vec<i64>,
    table: Vec<bool>,
}

impl NaiveSemigroup {
    pub fn new(gens: &[i64]) -> Result<Self> {
        check_gens(gens)?;
        let min = *gens.iter().min().unwrap();
        let max = *gens.iter().max().unwrap();
        // Every integer >= (min - 1)(max - 1) is representable.
        let bound = (min - 1) * (max - 1) + min;
        let table = naive_closure(gens, bound)?;
        let frobenius = table.iter().rposition(|&m| !m).map_or(-1, |i| i as i64);
        Ok(Self {
            frobenius,
            multiplicity: min,
            gens: gens.to_vec(),
            table,
        })
    }

    pub fn contains(&self, x: i64) -> bool {
        x >= 0 && (x > self.frobenius || self.table[x as usize])
    }

    /// PF by definition, checking `f + n` only for the given generators.
    pub fn pf(&self) -> Vec<i64> {
        (-1..=self.frobenius)
            .filter(|&f| !self.contains(f) && self.gens.iter().all(|&n| self.contains(f + n)))
            .collect()
    }

    /// PF by definition, checking `f + s` for every nonzero `s` in S with
    /// `f + s <= F`.
    pub fn pf_full(&self) -> Vec<i64> {
        (-1..=self.frobenius)
            .filter(|&f| {
                !self.contains(f)
                    && (1..=self.frobenius - f)
                        .filter(|&s| self.contains(s))
                        .all(|s| self.contains(f + s))
            })
            .collect()
    }

    /// `|[F - m + 1, F] \ S|`.
    pub fn reduced_type(&self) -> usize {
        (self.frobenius - self.multiplicity + 1..=self.frobenius)
            .filter(|&x| !self.contains(x))
            .count()
    }

    pub fn extremality(&self) -> Extremality {
        Extremality::from_counts(self.reduced_type(), self.pf().len())
    }
}

pub fn naive_pf(gens: &[i64]) -> Result<Vec<i64>> {
    Ok(NaiveSemigroup::new(gens)?.pf())
}

pub fn naive_pf_full(gens: &[i64]) -> Result<Vec<i64>> {
    Ok(NaiveSemigroup::new(gens)?.pf_full())
}

pub fn naive_reduced_type(gens: &[i64]) -> Result<usize> {
    Ok(NaiveSemigroup::new(gens)?.reduced_type())
}

pub fn naive_extremality(gens: &[i64]) -> Result<Extremality> {
    Ok(NaiveSemigroup::new(gens)?.extremality())
}

/// A disagreement between the two code paths on one semigroup.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Divergence {
    pub generators: Vec<i64>,
    pub what: &'static str,
    pub core: String,
    pub oracle: String,
}

/// Compares the Apéry-based invariants of `s` with the oracle, and the
/// count-based extremality with the PF-bound one.
pub fn dual_path_check(s: &NumericalSemigroup) -> Vec<Divergence> {
    let naive = NaiveSemigroup::new(s.generators()).expect("semigroup generators are valid");
    let mut out = Vec::new();
    let mut push = |what, core: String, oracle: String| {
        if core != oracle {
            out.push(Divergence {
                generators: s.generators().to_vec(),
                what,
                core,
                oracle,
            });
        }
    };
    let pf = s.pf_set();
    push("frobenius", s.frobenius().to_string(), naive.frobenius.to_string());
    push("pf", format!("{pf:?}"), format!("{:?}", naive.pf()));
    push("reduced_type", s.reduced_type().to_string(), naive.reduced_type().to_string());
    let by_counts = Extremality::from_counts(s.reduced_type(), s.cm_type());
    let by_bounds = Extremality::from_pf_bounds(&pf, s.frobenius(), s.multiplicity());
    push("extremality", by_counts.as_str().to_string(), by_bounds.as_str().to_string());
    push("extremality_oracle", by_counts.as_str().to_string(), naive.extremality().as_str().to_string());
    out
}
