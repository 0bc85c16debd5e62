//! Finitely generated ideals `E = gens + S` of a numerical semigroup.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::semigroup::NumericalSemigroup;

/// Which of the three duplication cases an ideal falls into.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum IdealKind {
    /// `E = S`
    FullS,
    /// `E = S \ {0}`
    SStar,
    Proper,
}

impl IdealKind {
    pub fn as_str(self) -> &'static str {
        match self {
            IdealKind::FullS => "S",
            IdealKind::SStar => "S*",
            IdealKind::Proper => "proper",
        }
    }
}

impl fmt::Display for IdealKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemigroupIdeal {
    ambient: NumericalSemigroup,
    gens: Vec<i64>,
    min_element: i64,
    /// Least `c` with `[c, inf) ⊆ E`.
    conductor: i64,
    /// Membership for `0 <= x < conductor`.
    membership: Vec<bool>,
    kind: IdealKind,
}

impl SemigroupIdeal {
    /// `E = gens + S`.
    pub fn from_generators(ambient: &NumericalSemigroup, gens: &[i64]) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        if let Some(&g) = gens.iter().find(|&&g| !ambient.contains(g)) {
            return Err(Error::GeneratorNotInAmbient(g));
        }
        let mut gens = gens.to_vec();
        gens.sort_unstable();
        gens.dedup();
        let min_element = gens[0];

        // Everything from min_element + conductor(S) on lies in min_element + S.
        let bound = min_element + ambient.conductor();
        let table: Vec<bool> = (0..bound)
            .map(|x| gens.iter().take_while(|&&g| g <= x).any(|&g| ambient.contains(x - g)))
            .collect();
        let conductor = table.iter().rposition(|&m| !m).map_or(0, |i| i as i64 + 1);
        let mut membership = table;
        membership.truncate(conductor as usize);

        let kind = if min_element == 0 {
            IdealKind::FullS
        } else if ambient
            .minimal_generators()
            .iter()
            .all(|&n| n >= conductor || membership[n as usize])
        {
            IdealKind::SStar
        } else {
            IdealKind::Proper
        };

        Ok(Self {
            ambient: ambient.clone(),
            gens,
            min_element,
            conductor,
            membership,
            kind,
        })
    }

    pub fn whole(ambient: &NumericalSemigroup) -> Self {
        Self::from_generators(ambient, &[0]).expect("0 lies in every semigroup")
    }

    /// `S* = S \ {0}`, generated by the minimal generators.
    pub fn maximal(ambient: &NumericalSemigroup) -> Self {
        Self::from_generators(ambient, ambient.minimal_generators())
            .expect("minimal generators lie in S")
    }

    pub fn ambient(&self) -> &NumericalSemigroup {
        &self.ambient
    }

    pub fn generators(&self) -> &[i64] {
        &self.gens
    }

    pub fn min_element(&self) -> i64 {
        self.min_element
    }

    pub fn conductor(&self) -> i64 {
        self.conductor
    }

    pub fn kind(&self) -> IdealKind {
        self.kind
    }

    pub fn contains(&self, x: i64) -> bool {
        if x < 0 {
            false
        } else if x >= self.conductor {
            true
        } else {
            self.membership[x as usize]
        }
    }

    /// `E ∪ {0}` as a numerical semigroup.
    pub fn tilde(&self) -> NumericalSemigroup {
        if self.min_element == 0 {
            return self.ambient.clone();
        }
        // Every element of E at or above conductor + min_element is min_element
        // plus an element of E, so the window below generates.
        let gens: Vec<i64> = (self.min_element..self.conductor + self.min_element)
            .filter(|&x| self.contains(x))
            .collect();
        NumericalSemigroup::from_generators(&gens).expect("E ∪ {0} is a numerical semigroup")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sg(gens: &[i64]) -> NumericalSemigroup {
        NumericalSemigroup::from_generators(gens).unwrap()
    }

    #[test]
    fn translate_ideal() {
        let s = sg(&[3, 4, 5]);
        let e = SemigroupIdeal::from_generators(&s, &[5, 6, 7]).unwrap();
        assert_eq!(e.min_element(), 5);
        assert_eq!(e.conductor(), 5);
        assert_eq!(e.kind(), IdealKind::Proper);
        assert!(!e.contains(4) && e.contains(5) && e.contains(100));
        let t = e.tilde();
        assert_eq!(t.minimal_generators(), &[5, 6, 7, 8, 9]);
        assert_eq!(t.pf_set(), vec![1, 2, 3, 4]);
    }

    #[test]
    fn whole_and_star() {
        let s = sg(&[3, 4, 5]);
        let e = SemigroupIdeal::from_generators(&s, &[0]).unwrap();
        assert_eq!(e.kind(), IdealKind::FullS);
        assert_eq!(e.tilde(), s);
        assert!(e.contains(0) && !e.contains(1));

        let star = SemigroupIdeal::from_generators(&s, &[3, 4, 5]).unwrap();
        assert_eq!(star.kind(), IdealKind::SStar);
        for x in 0..20 {
            assert_eq!(star.contains(x), x != 0 && s.contains(x), "x = {x}");
        }
        assert_eq!(star.tilde(), s);
        assert_eq!(SemigroupIdeal::maximal(&s).kind(), IdealKind::SStar);
        assert_eq!(SemigroupIdeal::whole(&s).kind(), IdealKind::FullS);
    }

    #[test]
    fn star_with_redundant_listing() {
        // 3 + S together with 4 + S and 5 + S, listed with an extra element.
        let s = sg(&[3, 4, 5]);
        let e = SemigroupIdeal::from_generators(&s, &[8, 5, 4, 3]).unwrap();
        assert_eq!(e.kind(), IdealKind::SStar);
        assert_eq!(e.generators(), &[3, 4, 5, 8]);
    }

    #[test]
    fn errors() {
        let s = sg(&[3, 4, 5]);
        assert_eq!(
            SemigroupIdeal::from_generators(&s, &[2]),
            Err(Error::GeneratorNotInAmbient(2))
        );
        assert_eq!(
            SemigroupIdeal::from_generators(&s, &[-3]),
            Err(Error::GeneratorNotInAmbient(-3))
        );
        assert_eq!(SemigroupIdeal::from_generators(&s, &[]), Err(Error::EmptyGenerators));
    }

    #[test]
    fn natural_numbers_ideals() {
        let n = NumericalSemigroup::natural();
        assert_eq!(SemigroupIdeal::whole(&n).kind(), IdealKind::FullS);
        let star = SemigroupIdeal::maximal(&n);
        assert_eq!(star.kind(), IdealKind::SStar);
        assert_eq!(star.tilde(), n);
        let e = SemigroupIdeal::from_generators(&n, &[3]).unwrap();
        assert_eq!(e.kind(), IdealKind::Proper);
        assert_eq!(e.tilde().minimal_generators(), &[3, 4, 5]);
    }
}
