//! The numerical semigroup type and its generic invariants.
//!
//! A semigroup is stored through its Apéry set with respect to the
//! multiplicity plus a membership table covering `[0, F(S) + m(S)]`, so
//! every query made by the pseudo-Frobenius and reduced-type code is a
//! table hit.

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

const UNREACHED: i64 = i64::MAX;
const TABLE_LIMIT: i128 = 1 << 40;

/// Adds the generator `g` to a residue table, where `w[r]` holds the least
/// known element congruent to `r` modulo `w.len()`.
///
/// Each cycle of `r -> r + g` is walked once starting from its minimum, which
/// is enough to propagate every multiple of `g`.
fn relax_residues(w: &mut [i64], g: i64) {
    let modulus = w.len();
    let step = (g % modulus as i64) as usize;
    if step == 0 {
        return;
    }
    let cycles = modulus.gcd(&step);
    let cycle_len = modulus / cycles;
    for start in 0..cycles {
        let mut best = start;
        let mut r = start;
        for _ in 0..cycle_len {
            if w[r] < w[best] {
                best = r;
            }
            r = (r + step) % modulus;
        }
        if w[best] == UNREACHED {
            continue;
        }
        let mut cur = best;
        for _ in 1..cycle_len {
            let next = (cur + step) % modulus;
            let candidate = w[cur] + g;
            if candidate < w[next] {
                w[next] = candidate;
            }
            cur = next;
        }
    }
}

fn check_table_size(modulus: i64, largest: i64) -> Result<()> {
    // F(S) <= (m - 1)(max - 1) - 1 for any generating set with gcd 1.
    let bound = (modulus as i128 - 1) * (largest as i128 - 1) + modulus as i128;
    if bound > TABLE_LIMIT || modulus as i128 > TABLE_LIMIT {
        return Err(Error::TooLarge(bound));
    }
    Ok(())
}

/// Validates a raw generator list and returns it sorted and deduplicated.
pub(crate) fn normalize_generators(gens: &[i64]) -> Result<Vec<i64>> {
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
    let mut sorted = gens.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    Ok(sorted)
}

/// A numerical semigroup `S = <n_1, ..., n_e>`.
///
/// Immutable after construction. Equality compares the semigroups as sets,
/// so differently listed generating sets of the same semigroup are equal.
#[derive(Clone)]
pub struct NumericalSemigroup {
    generators: Vec<i64>,
    minimal_generators: Vec<i64>,
    frobenius: i64,
    genus: u64,
    /// `apery[r]` is the least element of S congruent to `r` mod the multiplicity.
    apery: Vec<i64>,
    /// `membership[x]` for `0 <= x <= F(S) + m(S)`.
    membership: Vec<bool>,
}

impl PartialEq for NumericalSemigroup {
    fn eq(&self, other: &Self) -> bool {
        self.minimal_generators == other.minimal_generators
    }
}

impl Eq for NumericalSemigroup {}

impl fmt::Debug for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NumericalSemigroup<")?;
        for (i, g) in self.minimal_generators.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ">")
    }
}

impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl NumericalSemigroup {
    /// Builds `<gens>`, removing every generator that lies in the semigroup
    /// generated by the others.
    pub fn from_generators(gens: &[i64]) -> Result<Self> {
        let sorted = normalize_generators(gens)?;
        let multiplicity = sorted[0];
        check_table_size(multiplicity, *sorted.last().unwrap())?;

        let mut apery = vec![UNREACHED; multiplicity as usize];
        apery[0] = 0;
        let mut minimal_generators = vec![multiplicity];
        for &g in &sorted[1..] {
            // Only smaller generators can take part in a representation of g.
            if apery[(g % multiplicity) as usize] <= g {
                continue;
            }
            minimal_generators.push(g);
            relax_residues(&mut apery, g);
        }

        let frobenius = apery.iter().copied().max().unwrap() - multiplicity;
        let membership: Vec<bool> = (0..=frobenius + multiplicity)
            .map(|x| x >= apery[(x % multiplicity) as usize])
            .collect();
        let genus = membership
            .iter()
            .take((frobenius + 1).max(0) as usize)
            .filter(|&&m| !m)
            .count() as u64;

        Ok(Self {
            generators: gens.to_vec(),
            minimal_generators,
            frobenius,
            genus,
            apery,
            membership,
        })
    }

    /// The semigroup of all nonnegative integers.
    pub fn natural() -> Self {
        Self::from_generators(&[1]).expect("<1> is a numerical semigroup")
    }

    pub fn generators(&self) -> &[i64] {
        &self.generators
    }

    pub fn minimal_generators(&self) -> &[i64] {
        &self.minimal_generators
    }

    pub fn embedding_dimension(&self) -> usize {
        self.minimal_generators.len()
    }

    pub fn multiplicity(&self) -> i64 {
        self.minimal_generators[0]
    }

    /// Largest integer outside S; `-1` for `S = N`.
    pub fn frobenius(&self) -> i64 {
        self.frobenius
    }

    pub fn conductor(&self) -> i64 {
        self.frobenius + 1
    }

    pub fn genus(&self) -> u64 {
        self.genus
    }

    pub fn is_natural(&self) -> bool {
        self.multiplicity() == 1
    }

    pub fn is_minimal_generator(&self, x: i64) -> bool {
        self.minimal_generators.binary_search(&x).is_ok()
    }

    /// Gaps of S in increasing order.
    pub fn gaps(&self) -> impl Iterator<Item = i64> + '_ {
        (0..=self.frobenius).filter(move |&x| !self.contains(x))
    }

    /// Elements of S in `[0, bound]`.
    pub fn elements_up_to(&self, bound: i64) -> impl Iterator<Item = i64> + '_ {
        (0..=bound).filter(move |&x| self.contains(x))
    }

    pub fn contains(&self, x: i64) -> bool {
        if x < 0 {
            false
        } else if x > self.frobenius {
            true
        } else {
            self.membership[x as usize]
        }
    }

    /// The order `a <=_S b` iff `b - a` lies in S.
    pub fn leq(&self, a: i64, b: i64) -> bool {
        self.contains(b - a)
    }

    /// `Ap(S, n)`, indexed by residue class modulo `n`.
    pub fn apery_set(&self, n: i64) -> Result<Vec<i64>> {
        if n <= 0 || !self.contains(n) {
            return Err(Error::NotAMember(n));
        }
        if n == self.multiplicity() {
            return Ok(self.apery.clone());
        }
        check_table_size(n, 2)?;
        let mut w = vec![UNREACHED; n as usize];
        w[0] = 0;
        for &g in &self.minimal_generators {
            relax_residues(&mut w, g);
        }
        Ok(w)
    }

    /// Elements of `apery` that are maximal with respect to `<=_S`.
    fn maximal_elements(&self, apery: &[i64]) -> Vec<i64> {
        let mut sorted = apery.to_vec();
        sorted.sort_unstable();
        let mut maxima = Vec::new();
        for (i, &w) in sorted.iter().enumerate() {
            if !sorted[i + 1..].iter().any(|&above| self.leq(w, above)) {
                maxima.push(w);
            }
        }
        maxima
    }

    /// `PF(S)` from the maxima of `Ap(S, n)` shifted by `-n`, for any nonzero
    /// `n` in S.
    pub fn pf_set_via(&self, n: i64) -> Result<Vec<i64>> {
        let apery = self.apery_set(n)?;
        let mut pf: Vec<i64> = self
            .maximal_elements(&apery)
            .into_iter()
            .map(|w| w - n)
            .collect();
        pf.sort_unstable();
        Ok(pf)
    }

    /// Pseudo-Frobenius numbers, sorted. `PF(N) = {-1}`.
    pub fn pf_set(&self) -> Vec<i64> {
        let m = self.multiplicity();
        let mut pf: Vec<i64> = self
            .maximal_elements(&self.apery)
            .into_iter()
            .map(|w| w - m)
            .collect();
        pf.sort_unstable();
        pf
    }

    pub fn cm_type(&self) -> usize {
        self.pf_set().len()
    }

    /// `|[F - m + 1, F] \ S|`.
    pub fn reduced_type(&self) -> usize {
        let lo = self.frobenius - self.multiplicity() + 1;
        (lo..=self.frobenius).filter(|&x| !self.contains(x)).count()
    }

    pub fn is_symmetric(&self) -> bool {
        self.gaps().all(|x| self.contains(self.frobenius - x))
    }

    pub fn pf_profile(&self) -> PfProfile {
        let pf = self.pf_set();
        let reduced_type = self.reduced_type();
        let extremality = Extremality::from_counts(reduced_type, pf.len());
        debug_assert_eq!(
            extremality,
            Extremality::from_pf_bounds(&pf, self.frobenius, self.multiplicity())
        );
        let pf_prime = pf[..pf.len() - 1].to_vec();
        PfProfile {
            frobenius: self.frobenius,
            multiplicity: self.multiplicity(),
            cm_type: pf.len(),
            pf,
            pf_prime,
            reduced_type,
            extremality,
        }
    }

    pub fn extremality(&self) -> Extremality {
        self.pf_profile().extremality
    }
}

/// Where the reduced type sits in `1 <= s <= type`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Extremality {
    /// `s = type = 1`, the symmetric case.
    #[serde(rename = "both")]
    Both,
    #[serde(rename = "maximal")]
    MaximalOnly,
    #[serde(rename = "minimal")]
    MinimalOnly,
    #[serde(rename = "neither")]
    Neither,
}

impl Extremality {
    pub fn new(maximal: bool, minimal: bool) -> Self {
        match (maximal, minimal) {
            (true, true) => Extremality::Both,
            (true, false) => Extremality::MaximalOnly,
            (false, true) => Extremality::MinimalOnly,
            (false, false) => Extremality::Neither,
        }
    }

    /// Classification from the reduced type and the type directly.
    pub fn from_counts(reduced_type: usize, cm_type: usize) -> Self {
        Self::new(reduced_type == cm_type, reduced_type == 1)
    }

    /// Classification from the PF set alone: maximal iff
    /// `min PF >= F - m + 1`, minimal iff `max PF' < F - m + 1`.
    pub fn from_pf_bounds(pf: &[i64], frobenius: i64, multiplicity: i64) -> Self {
        let threshold = frobenius - multiplicity + 1;
        let maximal = pf.iter().min().is_some_and(|&lo| lo >= threshold);
        let minimal = pf[..pf.len().saturating_sub(1)]
            .iter()
            .max()
            .is_none_or(|&hi| hi < threshold);
        Self::new(maximal, minimal)
    }

    pub fn is_maximal(self) -> bool {
        matches!(self, Extremality::Both | Extremality::MaximalOnly)
    }

    pub fn is_minimal(self) -> bool {
        matches!(self, Extremality::Both | Extremality::MinimalOnly)
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Extremality::Both => "both",
            Extremality::MaximalOnly => "maximal",
            Extremality::MinimalOnly => "minimal",
            Extremality::Neither => "neither",
        }
    }
}

impl fmt::Display for Extremality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Pseudo-Frobenius data of one semigroup.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PfProfile {
    pub frobenius: i64,
    pub multiplicity: i64,
    pub pf: Vec<i64>,
    /// `pf` without its maximum.
    pub pf_prime: Vec<i64>,
    pub cm_type: usize,
    pub reduced_type: usize,
    pub extremality: Extremality,
}
