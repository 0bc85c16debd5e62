//! Parametric families with closed-form pseudo-Frobenius sets: generalized
//! arithmetic sequences, Bresinsky and Backelin curves, and two fixed-type
//! witness families.

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::semigroup::NumericalSemigroup;

/// `n0, s*n0 + d, ..., s*n0 + p*d`, validated to be a minimal generating set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GasParams {
    n0: i64,
    s: i64,
    d: i64,
    p: i64,
}

impl GasParams {
    pub fn new(n0: i64, s: i64, d: i64, p: i64) -> Result<Self> {
        if n0 < 1 || s < 1 || d < 1 {
            return Err(Error::InvalidParam(format!(
                "n0, s, d must be positive (got n0={n0}, s={s}, d={d})"
            )));
        }
        if p < 2 {
            return Err(Error::InvalidParam(format!("p must be at least 2 (got {p})")));
        }
        let g = n0.gcd(&d);
        if g != 1 {
            return Err(Error::GcdNotOne(g));
        }
        let params = Self { n0, s, d, p };
        let seq = params.sequence();
        let sg = NumericalSemigroup::from_generators(&seq)?;
        if sg.minimal_generators() != seq.as_slice() {
            return Err(Error::NotMinimalSequence(seq));
        }
        Ok(params)
    }

    pub fn n0(&self) -> i64 {
        self.n0
    }
    pub fn s(&self) -> i64 {
        self.s
    }
    pub fn d(&self) -> i64 {
        self.d
    }
    pub fn p(&self) -> i64 {
        self.p
    }

    /// Quotient in `n0 = a*p + b`.
    pub fn a(&self) -> i64 {
        self.n0 / self.p
    }

    /// Remainder in `n0 = a*p + b`.
    pub fn b(&self) -> i64 {
        self.n0 % self.p
    }

    /// `n_i = s*n0 + i*d`; `term(0)` is `n0`.
    pub fn term(&self, i: i64) -> i64 {
        if i == 0 {
            self.n0
        } else {
            self.s * self.n0 + i * self.d
        }
    }

    pub fn sequence(&self) -> Vec<i64> {
        (0..=self.p).map(|i| self.term(i)).collect()
    }
}

pub fn gas_semigroup(params: &GasParams) -> NumericalSemigroup {
    NumericalSemigroup::from_generators(&params.sequence())
        .expect("validated at construction")
}

/// The published closed form, split on `b`:
/// `b = 0`: `{a*n_p - n0 - (p-i)d : 1 <= i <= p-1}`,
/// `b = 1`: the same for `1 <= i <= p`,
/// otherwise `{a*n_p + i*d : 1 <= i <= b-1}`.
pub fn gas_pf_closed(params: &GasParams) -> Vec<i64> {
    let (a, b, p, d, n0) = (params.a(), params.b(), params.p, params.d, params.n0);
    let np = params.term(p);
    let mut pf: Vec<i64> = match b {
        0 => (1..p).map(|i| a * np - n0 - (p - i) * d).collect(),
        1 => (1..=p).map(|i| a * np - n0 - (p - i) * d).collect(),
        _ => (1..b).map(|i| a * np + i * d).collect(),
    };
    pf.sort_unstable();
    pf
}

/// Maximal reduced type criterion, with `x <= (n0-1)/d` compared as
/// `x*d <= n0-1`.
pub fn gas_maximal_predicate(params: &GasParams) -> bool {
    let lhs = match params.b() {
        0 => params.p - 2,
        1 => params.p - 1,
        b => b - 2,
    };
    lhs * params.d <= params.n0 - 1
}

/// The two candidate thresholds for the minimal reduced type criterion when
/// `b != 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum MinimalMode {
    /// `n0 < d - 1`
    AsStated,
    /// `n0 < d + 1`
    AsProof,
}

impl MinimalMode {
    pub const ALL: [MinimalMode; 2] = [MinimalMode::AsStated, MinimalMode::AsProof];

    pub fn as_str(self) -> &'static str {
        match self {
            MinimalMode::AsStated => "AsStated",
            MinimalMode::AsProof => "AsProof",
        }
    }
}

pub fn gas_minimal_predicate(params: &GasParams, mode: MinimalMode) -> bool {
    if params.b() == 2 {
        return true;
    }
    match mode {
        MinimalMode::AsStated => params.n0 < params.d - 1,
        MinimalMode::AsProof => params.n0 < params.d + 1,
    }
}

/// Bresinsky's four integers for `h >= 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BresinskyParams {
    h: i64,
}

impl BresinskyParams {
    pub fn new(h: i64) -> Result<Self> {
        if h < 2 {
            return Err(Error::InvalidParam(format!("h must be at least 2 (got {h})")));
        }
        Ok(Self { h })
    }

    pub fn h(&self) -> i64 {
        self.h
    }

    /// `[n1, n2, n3, n4]` in the curve's labelling (not sorted).
    pub fn integers(&self) -> [i64; 4] {
        let h = self.h;
        [
            2 * h * (2 * h + 1),
            (2 * h - 1) * (2 * h + 1),
            2 * h * (2 * h + 1) + (2 * h - 1),
            (2 * h - 1) * 2 * h,
        ]
    }
}

pub fn bresinsky_semigroup(h: i64) -> Result<NumericalSemigroup> {
    let params = BresinskyParams::new(h)?;
    NumericalSemigroup::from_generators(&params.integers())
}

/// Union of `c + k(2h-1) + 1` for `0 <= k <= 2h-3` and `c + 2h(2k+1) + 2`
/// for `0 <= k <= 2h-2`, where `c = (2h-1)^3 + 4h(h-2)`.
pub fn bresinsky_pf_closed(h: i64) -> Result<Vec<i64>> {
    BresinskyParams::new(h)?;
    let c = (2 * h - 1).pow(3) + 4 * h * (h - 2);
    let mut pf: Vec<i64> = (0..=2 * h - 3)
        .map(|k| c + k * (2 * h - 1) + 1)
        .chain((0..=2 * h - 2).map(|k| c + 2 * h * (2 * k + 1) + 2))
        .collect();
    pf.sort_unstable();
    Ok(pf)
}

/// Frobenius number implied by the closed form, used to size sweeps.
pub fn bresinsky_frobenius_closed(h: i64) -> i64 {
    (2 * h - 1).pow(3) + 4 * h * (h - 2) + 2 * h * (4 * h - 3) + 2
}

/// Backelin's four integers for `n >= 2`, `r >= 3n + 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BackelinParams {
    n: i64,
    r: i64,
}

impl BackelinParams {
    pub fn new(n: i64, r: i64) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidParam(format!("n must be at least 2 (got {n})")));
        }
        if r < 3 * n + 2 {
            return Err(Error::InvalidParam(format!(
                "r must be at least 3n+2 = {} (got {r})",
                3 * n + 2
            )));
        }
        Ok(Self { n, r })
    }

    pub fn n(&self) -> i64 {
        self.n
    }
    pub fn r(&self) -> i64 {
        self.r
    }

    pub fn integers(&self) -> [i64; 4] {
        let base = self.r * (3 * self.n + 2);
        [
            base + 3,
            base + 6,
            base + 3 * self.n + 4,
            base + 3 * self.n + 5,
        ]
    }
}

pub fn backelin_semigroup(n: i64, r: i64) -> Result<NumericalSemigroup> {
    let params = BackelinParams::new(n, r)?;
    NumericalSemigroup::from_generators(&params.integers())
}

pub fn backelin_pf_closed(n: i64, r: i64) -> Result<Vec<i64>> {
    let params = BackelinParams::new(n, r)?;
    let [n1, n2, n3, n4] = params.integers();
    let mut pf = Vec::with_capacity((3 * n + 2) as usize);
    pf.extend((2..=n).map(|k| (n - k) * n1 + (3 * k - 2) * n3 - n4));
    pf.extend((1..=n).map(|k| (r - (n + k) + 3) * n1 + (n + k - 1) * n2 - n4));
    pf.extend((1..=n).map(|k| (r - k + 2) * n1 + (k - 1) * n2 + n3 - n4));
    pf.push((r - n + 1) * n1 + n * n2 + n3 - n4);
    pf.push((n - 2) * n1 + n * n2 + 2 * n3 - n4);
    pf.push((r - 2 * n + 2) * n1 + 2 * n * n2 - n4);
    pf.sort_unstable();
    Ok(pf)
}

/// `F(S) = (r-n+1)n1 + n*n2 + n3 - n4`.
pub fn backelin_frobenius_closed(n: i64, r: i64) -> Result<i64> {
    let params = BackelinParams::new(n, r)?;
    let [n1, n2, n3, n4] = params.integers();
    Ok((r - n + 1) * n1 + n * n2 + n3 - n4)
}

/// `<r+1, r+2, ..., 2r+1>`, with `PF = {1, ..., r}`.
pub fn uniform_type_family(r: i64) -> Result<NumericalSemigroup> {
    if r < 1 {
        return Err(Error::InvalidParam(format!("r must be positive (got {r})")));
    }
    let gens: Vec<i64> = (r + 1..=2 * r + 1).collect();
    NumericalSemigroup::from_generators(&gens)
}

/// `<r+1, r+1+(r+2), ..., r+1+r(r+2)>`, with `PF = {i(r+2) : 1 <= i <= r}`.
pub fn staircase_min_type_family(r: i64) -> Result<NumericalSemigroup> {
    if r < 1 {
        return Err(Error::InvalidParam(format!("r must be positive (got {r})")));
    }
    let gens: Vec<i64> = (0..=r).map(|i| r + 1 + i * (r + 2)).collect();
    NumericalSemigroup::from_generators(&gens)
}

pub fn staircase_pf_closed(r: i64) -> Vec<i64> {
    (1..=r).map(|i| i * (r + 2)).collect()
}
