//! Numerical duplication `S ⋈^d E = 2·S ∪ (2·E + d)` and its PF and
//! extremality criteria.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::ideal::{IdealKind, SemigroupIdeal};
use crate::error::{Error, Result};
use crate::semigroup::NumericalSemigroup;

fn check_d(s: &NumericalSemigroup, d: i64) -> Result<()> {
    if d.rem_euclid(2) != 1 {
        return Err(Error::DNotOdd(d));
    }
    if !s.contains(d) {
        return Err(Error::DNotInS(d));
    }
    Ok(())
}

/// Validated duplication data: `d` odd and in S, `E` an ideal of S.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DuplicationSpec {
    ideal: SemigroupIdeal,
    d: i64,
}

impl DuplicationSpec {
    pub fn new(s: &NumericalSemigroup, ideal: SemigroupIdeal, d: i64) -> Result<Self> {
        if ideal.ambient() != s {
            return Err(Error::NotAnIdeal);
        }
        check_d(s, d)?;
        Ok(Self { ideal, d })
    }

    /// `S ⋈^d S`.
    pub fn self_duplication(s: &NumericalSemigroup, d: i64) -> Result<Self> {
        Self::new(s, SemigroupIdeal::whole(s), d)
    }

    /// `S ⋈^d S*`.
    pub fn star_duplication(s: &NumericalSemigroup, d: i64) -> Result<Self> {
        Self::new(s, SemigroupIdeal::maximal(s), d)
    }

    pub fn s(&self) -> &NumericalSemigroup {
        self.ideal.ambient()
    }
    pub fn ideal(&self) -> &SemigroupIdeal {
        &self.ideal
    }
    pub fn d(&self) -> i64 {
        self.d
    }
    pub fn e_kind(&self) -> IdealKind {
        self.ideal.kind()
    }
}

/// `2·S ∪ (2·E + d)`, generated by `2 n_i` and `2 g + d` for the ideal
/// generators `g`.
pub fn duplicate(spec: &DuplicationSpec) -> NumericalSemigroup {
    let mut gens: Vec<i64> = spec
        .s()
        .minimal_generators()
        .iter()
        .map(|&n| 2 * n)
        .chain(spec.ideal.generators().iter().map(|&g| 2 * g + spec.d))
        .collect();
    gens.sort_unstable();
    gens.dedup();
    NumericalSemigroup::from_generators(&gens).expect("duplication has an odd element")
}

/// `F(S ⋈^d E) = 2 F(Ẽ) + d`.
pub fn duplication_frobenius(spec: &DuplicationSpec) -> Result<i64> {
    if spec.s().is_natural() && spec.e_kind() == IdealKind::SStar {
        return Err(Error::DegenerateStar);
    }
    Ok(2 * spec.ideal.tilde().frobenius() + spec.d)
}

pub fn duplication_multiplicity(spec: &DuplicationSpec) -> i64 {
    (2 * spec.s().multiplicity()).min(2 * spec.ideal.min_element() + spec.d)
}

/// PF of the duplication by the three-case closed form:
/// proper `E` gives `Δ1 ∪ Δ2`, `E = S*` gives `{d, 2f, 2f + d}`, `E = S`
/// gives `{2f + d}`, with `f` running over the relevant PF sets.
///
/// For the proper case, `Δ2` needs `f + s ∈ E` for every `s ∈ S \ Ẽ`; those
/// `s` all lie below the conductor of `E`.
pub fn duplication_pf(spec: &DuplicationSpec) -> Result<Vec<i64>> {
    let s = spec.s();
    let d = spec.d;
    let pf_s = s.pf_set();
    let pf: Vec<i64> = match spec.e_kind() {
        IdealKind::FullS => pf_s.iter().map(|&f| 2 * f + d).collect(),
        IdealKind::SStar => {
            if s.is_natural() {
                return Err(Error::DegenerateStar);
            }
            std::iter::once(d)
                .chain(pf_s.iter().flat_map(|&f| [2 * f, 2 * f + d]))
                .collect()
        }
        IdealKind::Proper => {
            let e = &spec.ideal;
            let pf_e = e.tilde().pf_set();
            let in_s: BTreeSet<i64> = pf_s.iter().copied().collect();
            let outside: Vec<i64> = (1..e.conductor())
                .filter(|&x| s.contains(x) && !e.contains(x))
                .collect();
            let delta1 = pf_e.iter().filter(|f| in_s.contains(f)).map(|&f| 2 * f);
            let delta2 = pf_e
                .iter()
                .filter(|&&f| outside.iter().all(|&x| e.contains(f + x)))
                .map(|&f| 2 * f + d);
            delta1.chain(delta2).collect()
        }
    };
    let mut pf = pf;
    pf.sort_unstable();
    Ok(pf)
}

/// Cohen-Macaulay type predicted for the duplication: `|Δ1 ∪ Δ2|`,
/// `2 type(S) + 1`, or `type(S)`.
pub fn duplication_type(spec: &DuplicationSpec) -> Result<usize> {
    Ok(match spec.e_kind() {
        IdealKind::FullS => spec.s().cm_type(),
        IdealKind::SStar => {
            if spec.s().is_natural() {
                return Err(Error::DegenerateStar);
            }
            2 * spec.s().cm_type() + 1
        }
        IdealKind::Proper => duplication_pf(spec)?.len(),
    })
}

/// Branch of the minimal-reduced-type case tree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum MinClause {
    /// `E = S`
    #[serde(rename = "i")]
    SelfDuplication,
    /// `E = S*`, S symmetric, `d < 2F(S)`
    #[serde(rename = "ii.a.1")]
    StarGorensteinSmallD,
    /// `E = S*`, S symmetric, `d > 2F(S)`
    #[serde(rename = "ii.a.2")]
    StarGorensteinLargeD,
    /// `E = S*`, S not symmetric, `max PF' != 2F(S)`
    #[serde(rename = "ii.b.1")]
    StarGeneric,
    /// `E = S*`, S not symmetric, `max PF' = 2F(S)`
    #[serde(rename = "ii.b.2")]
    StarPeak,
    /// proper `E`, `F(S) != F(Ẽ)`
    #[serde(rename = "iii.a")]
    ProperDistinctFrobenius,
    /// proper `E`, `F(S) = F(Ẽ)`, `max PF' != 2F(S)`
    #[serde(rename = "iii.b.1")]
    ProperGeneric,
    /// proper `E`, `F(S) = F(Ẽ)`, `max PF' = 2F(S)`
    #[serde(rename = "iii.b.2")]
    ProperPeak,
}

impl MinClause {
    pub fn as_str(self) -> &'static str {
        match self {
            MinClause::SelfDuplication => "i",
            MinClause::StarGorensteinSmallD => "ii.a.1",
            MinClause::StarGorensteinLargeD => "ii.a.2",
            MinClause::StarGeneric => "ii.b.1",
            MinClause::StarPeak => "ii.b.2",
            MinClause::ProperDistinctFrobenius => "iii.a",
            MinClause::ProperGeneric => "iii.b.1",
            MinClause::ProperPeak => "iii.b.2",
        }
    }
}

impl fmt::Display for MinClause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Outcome of a criterion that may be an equivalence or only an implication.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Verdict {
    #[serde(rename = "true")]
    True,
    #[serde(rename = "false")]
    False,
    /// A one-directional clause whose hypothesis holds.
    #[serde(rename = "sufficient-true")]
    SufficientOnlyTrue,
    /// A one-directional clause whose hypothesis fails.
    #[serde(rename = "no-conclusion")]
    NoConclusion,
}

impl Verdict {
    pub fn iff(value: bool) -> Self {
        if value {
            Verdict::True
        } else {
            Verdict::False
        }
    }

    pub fn sufficient(hypothesis: bool) -> Self {
        if hypothesis {
            Verdict::SufficientOnlyTrue
        } else {
            Verdict::NoConclusion
        }
    }

    /// Whether the verdict is consistent with the actual property.
    pub fn is_sound_for(self, actual: bool) -> bool {
        match self {
            Verdict::True | Verdict::SufficientOnlyTrue => actual,
            Verdict::False => !actual,
            Verdict::NoConclusion => true,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::True => "true",
            Verdict::False => "false",
            Verdict::SufficientOnlyTrue => "sufficient-true",
            Verdict::NoConclusion => "no-conclusion",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinClassification {
    pub clause: MinClause,
    pub verdict: Verdict,
}

/// Selects the applicable branch of the minimal-reduced-type case tree and
/// returns its verdict. The `max PF'` comparisons use the closed-form PF set.
pub fn duplication_min_classifier(spec: &DuplicationSpec) -> Result<MinClassification> {
    let s = spec.s();
    let d = spec.d;
    let m = s.multiplicity();
    let f = s.frobenius();
    let s_minimal = || s.extremality().is_minimal();
    let peak = || -> Result<bool> {
        let pf = duplication_pf(spec)?;
        Ok(pf.len() >= 2 && pf[pf.len() - 2] == 2 * f)
    };

    let (clause, verdict) = match spec.e_kind() {
        IdealKind::FullS => (MinClause::SelfDuplication, Verdict::sufficient(s_minimal())),
        IdealKind::SStar => {
            if s.is_natural() {
                return Err(Error::DegenerateStar);
            }
            if s.is_symmetric() {
                if d < 2 * f {
                    (MinClause::StarGorensteinSmallD, Verdict::iff(2 * m < d))
                } else {
                    (MinClause::StarGorensteinLargeD, Verdict::iff(m < f + 1))
                }
            } else if peak()? {
                (MinClause::StarPeak, Verdict::iff(d > 2 * m))
            } else {
                (MinClause::StarGeneric, Verdict::sufficient(s_minimal()))
            }
        }
        IdealKind::Proper => {
            let tilde = spec.ideal.tilde();
            let tilde_minimal = tilde.extremality().is_minimal();
            if f != tilde.frobenius() {
                (MinClause::ProperDistinctFrobenius, Verdict::sufficient(tilde_minimal))
            } else if peak()? {
                (MinClause::ProperPeak, Verdict::iff(d > 2 * m))
            } else {
                (MinClause::ProperGeneric, Verdict::sufficient(tilde_minimal))
            }
        }
    };
    Ok(MinClassification { clause, verdict })
}

/// Maximal reduced type of `S ⋈^d S`: for `d > 2m(S)` iff S is maximal,
/// otherwise iff `(d-1)/2 >= F(S) - min PF(S)`.
pub fn duplication_max_self(s: &NumericalSemigroup, d: i64) -> Result<bool> {
    check_d(s, d)?;
    if d > 2 * s.multiplicity() {
        Ok(s.extremality().is_maximal())
    } else {
        let min_pf = s.pf_set()[0];
        Ok((d - 1) / 2 >= s.frobenius() - min_pf)
    }
}

/// Maximal reduced type of `S ⋈^d S*`: for `d < 2 min PF(S)` iff
/// `m(S) > F(S)`, otherwise iff `m(S) - F(S) >= (d+1)/2 - min PF(S)`.
pub fn duplication_max_star(s: &NumericalSemigroup, d: i64) -> Result<bool> {
    check_d(s, d)?;
    let min_pf = s.pf_set()[0];
    let (m, f) = (s.multiplicity(), s.frobenius());
    if d < 2 * min_pf {
        Ok(m > f)
    } else {
        Ok(m - f >= (d + 1) / 2 - min_pf)
    }
}
