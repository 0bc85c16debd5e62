//! Gluings `S1 +_{lambda,mu} S2` and nice extensions.

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::semigroup::NumericalSemigroup;

/// Validated gluing parameters: `mu` is a non-generator element of `s1`,
/// `lambda` a non-generator element of `s2`, and `gcd(lambda, mu) = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GluingSpec {
    s1: NumericalSemigroup,
    s2: NumericalSemigroup,
    lambda: i64,
    mu: i64,
}

impl GluingSpec {
    pub fn new(s1: NumericalSemigroup, s2: NumericalSemigroup, lambda: i64, mu: i64) -> Result<Self> {
        if lambda <= 0 || mu <= 0 {
            return Err(Error::InvalidParam(format!(
                "lambda and mu must be positive (got lambda={lambda}, mu={mu})"
            )));
        }
        if !s1.contains(mu) {
            return Err(Error::MuNotInS1(mu));
        }
        if s1.is_minimal_generator(mu) {
            return Err(Error::MuIsMinimalGenerator(mu));
        }
        if !s2.contains(lambda) {
            return Err(Error::LambdaNotInS2(lambda));
        }
        if s2.is_minimal_generator(lambda) {
            return Err(Error::LambdaIsMinimalGenerator(lambda));
        }
        let g = lambda.gcd(&mu);
        if g != 1 {
            return Err(Error::GcdNotOne(g));
        }
        Ok(Self { s1, s2, lambda, mu })
    }

    pub fn s1(&self) -> &NumericalSemigroup {
        &self.s1
    }
    pub fn s2(&self) -> &NumericalSemigroup {
        &self.s2
    }
    pub fn lambda(&self) -> i64 {
        self.lambda
    }
    pub fn mu(&self) -> i64 {
        self.mu
    }

    /// `lambda * gens(S1)` followed by `mu * gens(S2)`.
    pub fn glued_generators(&self) -> Vec<i64> {
        self.s1
            .minimal_generators()
            .iter()
            .map(|&n| self.lambda * n)
            .chain(self.s2.minimal_generators().iter().map(|&n| self.mu * n))
            .collect()
    }
}

/// The glued semigroup; its listed generators must already be minimal.
pub fn glue(spec: &GluingSpec) -> Result<NumericalSemigroup> {
    let gens = spec.glued_generators();
    let glued = NumericalSemigroup::from_generators(&gens)?;
    let mut sorted = gens.clone();
    sorted.sort_unstable();
    if glued.minimal_generators() != sorted.as_slice() {
        return Err(Error::NotMinimalGluing(gens));
    }
    Ok(glued)
}

/// `{lambda*f + mu*g + lambda*mu : f in PF(S1), g in PF(S2)}`, sorted but not
/// deduplicated so a collision would show up as a cardinality mismatch.
pub fn gluing_pf(spec: &GluingSpec) -> Vec<i64> {
    let (l, m) = (spec.lambda, spec.mu);
    let pf2 = spec.s2.pf_set();
    let mut pf: Vec<i64> = spec
        .s1
        .pf_set()
        .into_iter()
        .flat_map(|f| pf2.iter().map(move |&g| l * f + m * g + l * m))
        .collect();
    pf.sort_unstable();
    pf
}

pub fn gluing_type(spec: &GluingSpec) -> usize {
    spec.s1.cm_type() * spec.s2.cm_type()
}

/// `lambda*F(S1) + mu*F(S2) + lambda*mu`.
pub fn gluing_frobenius(spec: &GluingSpec) -> i64 {
    spec.lambda * spec.s1.frobenius() + spec.mu * spec.s2.frobenius() + spec.lambda * spec.mu
}

/// Sufficient condition for the gluing of two maximal-reduced-type
/// semigroups to be of maximal reduced type: `lambda + mu > max(lambda*m(S1), mu*m(S2))`.
///
/// `false` carries no conclusion.
pub fn gluing_maximal_sufficient(spec: &GluingSpec) -> Result<bool> {
    if !spec.s1.extremality().is_maximal() {
        return Err(Error::NotApplicable("S1 is not of maximal reduced type".into()));
    }
    if !spec.s2.extremality().is_maximal() {
        return Err(Error::NotApplicable("S2 is not of maximal reduced type".into()));
    }
    let bound = (spec.lambda * spec.s1.multiplicity()).max(spec.mu * spec.s2.multiplicity());
    Ok(spec.lambda + spec.mu > bound)
}

/// Largest `a_1 + ... + a_e` over all ways of writing `target` as
/// `sum a_i n_i` in the minimal generators; `None` if `target` is not in S.
pub fn max_coefficient_sum(s: &NumericalSemigroup, target: i64) -> Option<i64> {
    if target < 0 {
        return None;
    }
    let mut best = vec![-1i64; target as usize + 1];
    best[0] = 0;
    for x in 1..=target as usize {
        for &g in s.minimal_generators() {
            let g = g as usize;
            if g <= x && best[x - g] >= 0 {
                best[x] = best[x].max(best[x - g] + 1);
            }
        }
    }
    let v = best[target as usize];
    (v >= 0).then_some(v)
}

/// `S' = <p*n_1, ..., p*n_e, n_{e+1}>`, seen as the gluing `S +_{p, n_{e+1}} N`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NiceExtension {
    spec: GluingSpec,
    max_coefficient_sum: i64,
}

impl NiceExtension {
    pub fn spec(&self) -> &GluingSpec {
        &self.spec
    }
    pub fn base(&self) -> &NumericalSemigroup {
        self.spec.s1()
    }
    pub fn p(&self) -> i64 {
        self.spec.lambda()
    }
    pub fn target(&self) -> i64 {
        self.spec.mu()
    }
    pub fn max_coefficient_sum(&self) -> i64 {
        self.max_coefficient_sum
    }
    pub fn extension(&self) -> Result<NumericalSemigroup> {
        glue(&self.spec)
    }
}

/// Nice extension with `n_{e+1} = sum coeffs[i] * n_i` over the minimal
/// generators. `p` is admitted when some representation of `n_{e+1}` has
/// coefficient sum at least `p`, not only the one given.
pub fn nice_extension(s: &NumericalSemigroup, p: i64, coeffs: &[i64]) -> Result<NiceExtension> {
    if coeffs.len() != s.embedding_dimension() {
        return Err(Error::InvalidParam(format!(
            "expected {} coefficients, got {}",
            s.embedding_dimension(),
            coeffs.len()
        )));
    }
    if let Some(&c) = coeffs.iter().find(|&&c| c < 0) {
        return Err(Error::InvalidParam(format!("coefficients must be nonnegative (got {c})")));
    }
    let target = coeffs
        .iter()
        .zip(s.minimal_generators())
        .map(|(a, n)| a * n)
        .sum();
    nice_extension_for_target(s, p, target)
}

pub fn nice_extension_for_target(s: &NumericalSemigroup, p: i64, target: i64) -> Result<NiceExtension> {
    if p <= 0 {
        return Err(Error::InvalidParam(format!("p must be positive (got {p})")));
    }
    if !s.contains(target) || target == 0 {
        return Err(Error::TargetNotInS(target));
    }
    if s.is_minimal_generator(target) {
        return Err(Error::TargetIsGenerator(target));
    }
    let max_sum = max_coefficient_sum(s, target).expect("target is in S");
    if p > max_sum {
        return Err(Error::PTooLarge { p, max_sum, target });
    }
    let g = p.gcd(&target);
    if g != 1 {
        return Err(Error::GcdNotOne(g));
    }
    let spec = GluingSpec::new(s.clone(), NumericalSemigroup::natural(), p, target)?;
    Ok(NiceExtension { spec, max_coefficient_sum: max_sum })
}

/// Both sides of the maximal-reduced-type equivalence for a nice extension.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NiceEquivalence {
    pub base_maximal: bool,
    pub extension_maximal: bool,
}

impl NiceEquivalence {
    pub fn holds(&self) -> bool {
        self.base_maximal == self.extension_maximal
    }
}

pub fn nice_extension_maximal_iff(ext: &NiceExtension) -> Result<NiceEquivalence> {
    Ok(NiceEquivalence {
        base_maximal: ext.base().extremality().is_maximal(),
        extension_maximal: ext.extension()?.extremality().is_maximal(),
    })
}
