//! Quadratic quasi-polynomials with periodic exact-rational coefficients:
//! the degree model for colored Jones polynomials.
//!
//! - [`QuasiPoly`]: `value(n) = a_i n^2 + b_i n + d_i` where `i = n mod π`,
//!   valid for `n >= valid_from`, with the period always reduced to minimal
//! - [`fit`]: exact recovery of a quasi-polynomial from a degree sequence
//! - [`QuasiPoly::jones_slopes`]: the cluster set `{4 a_i}`
//! - [`QuasiPoly::jx_set`]: the linear-term cluster set `{2 b_i}`
//! - [`Slope`], [`SlopeSet`]: finite slope sets, with `∞` for `1/0`

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_traits::Zero;

use crate::error::Error;
use crate::laurent::{parse_rat, rat, rat_string, Rat};

/// A boundary-slope value: a rational `a/b`, or `∞` (i.e. `1/0`).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum Slope {
    Finite(Rat),
    Infinity,
}

impl Slope {
    pub fn finite(&self) -> Option<&Rat> {
        match self {
            Slope::Finite(r) => Some(r),
            Slope::Infinity => None,
        }
    }
}

impl From<Rat> for Slope {
    fn from(r: Rat) -> Self {
        Slope::Finite(r)
    }
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Slope::Finite(r) => write!(f, "{}", rat_string(r)),
            Slope::Infinity => write!(f, "1/0"),
        }
    }
}

/// A finite, deduplicated set of slopes.
pub type SlopeSet = BTreeSet<Slope>;

/// Build a [`SlopeSet`] from integer-pair rationals, e.g. `slope_set(&[(12, 1)])`.
pub fn slope_set(slopes: &[(i64, i64)]) -> SlopeSet {
    slopes
        .iter()
        .map(|&(n, d)| Slope::Finite(crate::laurent::ratio(n, d)))
        .collect()
}

/// Per-residue quadratic coefficients `(a, b, d)` of `a n^2 + b n + d`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ResidueCoeffs {
    pub a: Rat,
    pub b: Rat,
    pub d: Rat,
}

impl ResidueCoeffs {
    pub fn new(a: Rat, b: Rat, d: Rat) -> Self {
        Self { a, b, d }
    }

    fn eval(&self, n: i64) -> Rat {
        let n = rat(n);
        &self.a * &n * &n + &self.b * &n + &self.d
    }

    fn negate(&self) -> Self {
        Self {
            a: -self.a.clone(),
            b: -self.b.clone(),
            d: -self.d.clone(),
        }
    }
}

/// A quadratic quasi-polynomial of integral period with exact rational
/// coefficients, valid from an explicit starting index.
///
/// Residue `i` of the coefficient vector applies to arguments `n ≡ i (mod π)`.
/// Construction reduces the period to the minimal one, so equal functions
/// compare equal.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QuasiPoly {
    period: usize,
    valid_from: i64,
    coeffs: Vec<ResidueCoeffs>,
}

impl QuasiPoly {
    /// Build from per-residue coefficients; `coeffs[i]` applies to
    /// `n ≡ i (mod coeffs.len())`. The stored period is minimized.
    pub fn new(valid_from: i64, coeffs: Vec<ResidueCoeffs>) -> Self {
        assert!(!coeffs.is_empty(), "quasi-polynomial needs at least one residue");
        let mut qp = Self {
            period: coeffs.len(),
            valid_from,
            coeffs,
        };
        qp.reduce_period();
        qp
    }

    /// Period-1 polynomial `a n^2 + b n + d`.
    pub fn polynomial(valid_from: i64, a: Rat, b: Rat, d: Rat) -> Self {
        Self::new(valid_from, vec![ResidueCoeffs::new(a, b, d)])
    }

    fn reduce_period(&mut self) {
        'outer: for p in 1..self.period {
            if !self.period.is_multiple_of(p) {
                continue;
            }
            for i in p..self.period {
                if self.coeffs[i] != self.coeffs[i % p] {
                    continue 'outer;
                }
            }
            self.coeffs.truncate(p);
            self.period = p;
            return;
        }
    }

    pub fn period(&self) -> usize {
        self.period
    }

    pub fn valid_from(&self) -> i64 {
        self.valid_from
    }

    /// Coefficients applying to argument `n`.
    pub fn coeffs_at(&self, n: i64) -> &ResidueCoeffs {
        &self.coeffs[n.rem_euclid(self.period as i64) as usize]
    }

    /// Residue-indexed coefficient triples.
    pub fn residues(&self) -> &[ResidueCoeffs] {
        &self.coeffs
    }

    /// Exact value at `n`; domain error below `valid_from`.
    pub fn eval(&self, n: i64) -> Result<Rat, Error> {
        if n < self.valid_from {
            return Err(Error::Domain(format!(
                "quasi-polynomial valid from n = {}, got n = {}",
                self.valid_from, n
            )));
        }
        Ok(self.coeffs_at(n).eval(n))
    }

    /// Shift the validity start upward (no effect if already later).
    pub fn with_valid_from(mut self, valid_from: i64) -> Self {
        self.valid_from = self.valid_from.max(valid_from);
        self
    }

    /// The Jones slope set `{4 a_i}` of this degree model.
    pub fn jones_slopes(&self) -> SlopeSet {
        self.coeffs
            .iter()
            .map(|c| Slope::Finite(&c.a * rat(4)))
            .collect()
    }

    /// The linear-term cluster set `{2 b_i}`.
    pub fn jx_set(&self) -> SlopeSet {
        self.coeffs
            .iter()
            .map(|c| Slope::Finite(&c.b * rat(2)))
            .collect()
    }

    /// Whether the leading coefficient is the same on every residue.
    pub fn constant_a(&self) -> Option<&Rat> {
        let a = &self.coeffs[0].a;
        self.coeffs.iter().all(|c| &c.a == a).then_some(a)
    }

    /// Whether `b_i <= 0` for every residue.
    pub fn b_nonpositive(&self) -> bool {
        self.coeffs.iter().all(|c| c.b <= Rat::zero())
    }

    /// Model of the mirror-dual degree: negate every coefficient.
    ///
    /// If `self` models `d_+[J_K(n)]` the result models `d_-[J_{K*}(n)]`,
    /// since mirroring replaces `v` by `v^{-1}`.
    pub fn mirror_model(&self) -> Self {
        Self {
            period: self.period,
            valid_from: self.valid_from,
            coeffs: self.coeffs.iter().map(ResidueCoeffs::negate).collect(),
        }
    }

    /// JSON form `{period, valid_from, coeffs: [[a, b, d], ...]}` with
    /// coefficients as canonical rational strings.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "period": self.period,
            "valid_from": self.valid_from,
            "coeffs": self
                .coeffs
                .iter()
                .map(|c| serde_json::json!([rat_string(&c.a), rat_string(&c.b), rat_string(&c.d)]))
                .collect::<Vec<_>>(),
        })
    }

    /// Parse the [`QuasiPoly::to_json`] format.
    pub fn from_json(value: &serde_json::Value) -> Result<Self, Error> {
        let period = value["period"]
            .as_u64()
            .ok_or_else(|| Error::Parse("missing period".into()))? as usize;
        let valid_from = value["valid_from"]
            .as_i64()
            .ok_or_else(|| Error::Parse("missing valid_from".into()))?;
        let arr = value["coeffs"]
            .as_array()
            .ok_or_else(|| Error::Parse("missing coeffs".into()))?;
        if arr.len() != period || period == 0 {
            return Err(Error::Parse("coeffs length must equal period".into()));
        }
        let mut coeffs = Vec::with_capacity(period);
        for triple in arr {
            let t = triple
                .as_array()
                .filter(|t| t.len() == 3)
                .ok_or_else(|| Error::Parse("coeff entry must be [a,b,d]".into()))?;
            let get = |v: &serde_json::Value| -> Result<Rat, Error> {
                parse_rat(v.as_str().ok_or_else(|| Error::Parse("coeff must be a string".into()))?)
            };
            coeffs.push(ResidueCoeffs::new(get(&t[0])?, get(&t[1])?, get(&t[2])?));
        }
        Ok(Self::new(valid_from, coeffs))
    }
}

impl fmt::Display for QuasiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "period {} from n={}:", self.period, self.valid_from)?;
        for (i, c) in self.coeffs.iter().enumerate() {
            write!(
                f,
                " [n≡{}: {}n^2 {} n {}]",
                i,
                rat_string(&c.a),
                rat_string(&c.b),
                rat_string(&c.d)
            )?;
        }
        Ok(())
    }
}

/// Solve for the quadratic through three points with distinct abscissae.
fn quadratic_through(pts: [(i64, &Rat); 3]) -> ResidueCoeffs {
    let [(n1, v1), (n2, v2), (n3, v3)] = pts;
    let (r1, r2, r3) = (rat(n1), rat(n2), rat(n3));
    let a = v1 / ((&r1 - &r2) * (&r1 - &r3))
        + v2 / ((&r2 - &r1) * (&r2 - &r3))
        + v3 / ((&r3 - &r1) * (&r3 - &r2));
    let b = (v1 - v2) / (&r1 - &r2) - &a * (&r1 + &r2);
    let d = v1 - &a * &r1 * &r1 - &b * &r1;
    ResidueCoeffs::new(a, b, d)
}

/// How many full periods past `valid_from` a candidate fit must verify
/// before it is accepted. Three solving samples plus a three-period
/// stabilization margin per residue class: six values per class in all.
const FIT_VERIFIED_PERIODS: i64 = 6;

/// Fit a minimal-period quadratic quasi-polynomial to exact samples.
///
/// `samples` must cover a contiguous integer range. For each candidate
/// period `π = 1..=pi_max`, per-residue quadratics are solved through the
/// three largest samples of the class and then verified downward; a
/// candidate is viable when its verified range spans at least six full
/// periods (three solving, three stabilization margin). Among viable
/// candidates the one verifying from the earliest `n` wins, with ties to
/// the smaller period — a short period can match a longer-period function
/// on a narrow top window (residue constants of the form `-r^2` make any
/// single period of such a model look exactly quadratic), and demanding
/// the earliest validity rules those impostors out.
pub fn fit(samples: &BTreeMap<i64, Rat>, pi_max: usize) -> Result<QuasiPoly, Error> {
    let lo = *samples
        .keys()
        .next()
        .ok_or_else(|| Error::Domain("fit requires samples".into()))?;
    let hi = *samples.keys().next_back().unwrap();
    if (hi - lo + 1) as usize != samples.len() {
        return Err(Error::Domain(
            "fit requires samples on a contiguous integer range".into(),
        ));
    }

    // Topmost mismatching n of the candidate that got furthest down; this
    // is the most informative failure location to report.
    let mut best_bad: Option<i64> = None;
    let mut best: Option<(i64, QuasiPoly)> = None;

    'candidate: for pi in 1..=pi_max {
        let p = pi as i64;
        let mut coeffs = Vec::with_capacity(pi);
        for r in 0..pi {
            // Three largest sample indices in residue class r.
            let mut ns: Vec<i64> = (lo..=hi).filter(|n| n.rem_euclid(p) == r as i64).collect();
            if ns.len() < 3 {
                continue 'candidate;
            }
            ns.reverse();
            coeffs.push(quadratic_through([
                (ns[0], &samples[&ns[0]]),
                (ns[1], &samples[&ns[1]]),
                (ns[2], &samples[&ns[2]]),
            ]));
        }

        // Scan down from the top; valid_from is just above the first mismatch.
        let mut valid_from = lo;
        for n in (lo..=hi).rev() {
            if coeffs[n.rem_euclid(p) as usize].eval(n) != samples[&n] {
                valid_from = n + 1;
                best_bad = Some(best_bad.map_or(n, |b| b.min(n)));
                break;
            }
        }
        if hi - valid_from + 1 >= FIT_VERIFIED_PERIODS * p
            && best.as_ref().is_none_or(|(vf, _)| valid_from < *vf)
        {
            best = Some((valid_from, QuasiPoly::new(valid_from, coeffs)));
        }
    }

    match best {
        Some((_, qp)) => Ok(qp),
        None => Err(Error::FitFailed {
            pi_max,
            first_bad_n: best_bad.unwrap_or(hi),
        }),
    }
}
