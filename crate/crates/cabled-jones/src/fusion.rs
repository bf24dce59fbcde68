//! Two-fusion knots `K(m1, m2)`: a two-parameter family of closed 3-braids
//! whose degree function is a constrained lattice maximum of an explicit
//! quadratic.
//!
//! - [`q_value`]: the lattice function `Q(n, k1, k2)` on its admissible
//!   domain `0 <= k1 <= n`, `|n-2k1| <= n+2k2 <= n+2k1`
//! - [`delta`]: the case-dispatched degree `δ_K(n)` (cases A, B-1, B-2,
//!   C-1, C-2), evaluating `Q` on the case's line at the admissible integer
//!   nearest to the vertex
//! - [`delta_bruteforce`]: exhaustive lattice maximization, the oracle the
//!   case formulas are checked against
//! - [`dplus_model`]: the full quasi-polynomial `d_+[J_K(n)]`, with the
//!   periodic `r^2` constant term evaluated exactly per residue
//! - [`b_coefficient`]: the closed-form linear term, including the
//!   divisibility branch of case C-2, with the zero classification
//!   `b = 0 ⟺ m1 ∈ {0,1}, m2 >= 1, or (m1,m2) = (-1,1)`

use crate::error::Error;
use crate::laurent::{rat, ratio, Rat};
use crate::quasipoly::{QuasiPoly, ResidueCoeffs};

/// Parameters of the 2-fusion knot `K(m1, m2)`; `m2 ∉ {-1, 0}` (those are
/// torus knots handled by the torus formulas).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct FusionParams {
    pub m1: i64,
    pub m2: i64,
}

impl FusionParams {
    pub fn new(m1: i64, m2: i64) -> Result<Self, Error> {
        if m2 == -1 || m2 == 0 {
            return Err(Error::Parameter(
                "m2 ∈ {-1, 0} gives a torus knot; use the torus formulas".into(),
            ));
        }
        Ok(Self { m1, m2 })
    }
}

/// A lattice point `(k1, k2)`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct LatticePoint {
    pub k1: i64,
    pub k2: i64,
}

/// Admissibility for color `n`: `0 <= k1 <= n` and
/// `|n - 2k1| <= n + 2k2 <= n + 2k1`.
pub fn admissible(n: i64, pt: LatticePoint) -> bool {
    let LatticePoint { k1, k2 } = pt;
    0 <= k1 && k1 <= n && (n - 2 * k1).abs() <= n + 2 * k2 && n + 2 * k2 <= n + 2 * k1
}

/// `2·Q(n, k1, k2)`, which is always an integer.
fn q_doubled(fp: FusionParams, n: i64, k1: i64, k2: i64) -> i128 {
    let (m1, m2) = (fp.m1 as i128, fp.m2 as i128);
    let (n, k1, k2) = (n as i128, k1 as i128, k2 as i128);
    let l = (2 * k1 + n).min(2 * k1 + k2 + n).min(k2 + 2 * n);
    k1 - 3 * k1 * k1 - 6 * k1 * k2 - 2 * k2 * k2 - 2 * k1 * m1 - 2 * k1 * k1 * m1
        - 2 * k2 * m2
        - 2 * k2 * k2 * m2
        - 12 * k1 * n
        - 6 * k2 * n
        + 4 * m1 * n
        + 8 * m2 * n
        - 2 * k2 * m2 * n
        - 4 * n * n
        + 2 * m1 * n * n
        + 4 * m2 * n * n
        + (1 + 8 * k1 + 4 * k2 + 8 * n) * l
        - 3 * l * l
}

/// Exact value of `Q(n, k1, k2)` on an admissible lattice point.
pub fn q_value(fp: FusionParams, n: i64, pt: LatticePoint) -> Result<Rat, Error> {
    if n < 0 {
        return Err(Error::Parameter("color n must be >= 0".into()));
    }
    if !admissible(n, pt) {
        return Err(Error::Domain(format!(
            "lattice point ({}, {}) is not admissible for n = {n}",
            pt.k1, pt.k2
        )));
    }
    Ok(ratio_i128(q_doubled(fp, n, pt.k1, pt.k2), 2))
}

fn ratio_i128(num: i128, den: i64) -> Rat {
    Rat::new(num.into(), den.into())
}

/// The case of the degree formula a parameter pair falls in.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FusionCase {
    A,
    B1,
    B2,
    C1,
    C2,
}

/// Literal transcription of the case inequalities; every valid `(m1, m2)`
/// hits exactly one case.
pub fn case_of(fp: FusionParams) -> FusionCase {
    let FusionParams { m1, m2 } = fp;
    if m2 >= 1 {
        if m1 >= 1 {
            FusionCase::A
        } else if 1 + m1 + m2 <= 0 || 1 + 2 * m1 + m2 < 0 {
            FusionCase::B1
        } else {
            FusionCase::B2
        }
    } else {
        // m2 <= -2 here.
        if 2 * m1 <= -3 * m2 {
            FusionCase::C1
        } else {
            FusionCase::C2
        }
    }
}

/// The vertex `c_i` of the case's restriction of `Q` to its line, as a
/// function of `n`: returns the exact rational `c(n)`.
fn case_vertex(fp: FusionParams, case: FusionCase, n: i64) -> Option<Rat> {
    let (m1, m2) = (fp.m1, fp.m2);
    match case {
        FusionCase::A => Some(ratio(1 - m1 + m2 + m2 * n, 2 * (-1 + m1 + m2))),
        FusionCase::B2 => Some(ratio(1 - m1 - m2 + (1 + m2) * n, 2 * (1 + m1 + m2))),
        FusionCase::C2 => Some(Rat::new(
            (2 * (m1 + m2) - 3 + 2 * (1 + m2) * n).into(),
            (2 * (1 - 2 * m1 - 2 * m2)).into(),
        )),
        FusionCase::B1 | FusionCase::C1 => None,
    }
}

/// Admissible `k1` range of the case's line for color `n`.
fn case_k1_range(case: FusionCase, n: i64) -> (i64, i64) {
    match case {
        FusionCase::A => (0, n.div_euclid(2)),
        FusionCase::B2 => ((n + 1).div_euclid(2), n),
        FusionCase::C2 => (0, n),
        FusionCase::B1 | FusionCase::C1 => (n, n),
    }
}

fn case_point(case: FusionCase, n: i64, k1: i64) -> LatticePoint {
    match case {
        FusionCase::A => LatticePoint { k1, k2: -k1 },
        FusionCase::B1 => LatticePoint { k1: n, k2: 0 },
        FusionCase::B2 => LatticePoint { k1, k2: k1 - n },
        FusionCase::C1 => LatticePoint { k1: n, k2: n },
        FusionCase::C2 => LatticePoint { k1, k2: k1 },
    }
}

/// The integer(s) in `[lo, hi]` closest to `c`: the nearest one, plus the
/// other neighbor when `c` is exactly half-integral and both fit.
fn nearest_in_range(c: &Rat, lo: i64, hi: i64) -> (i64, Option<i64>) {
    debug_assert!(lo <= hi);
    let floor: i64 = c.floor().to_integer().try_into().unwrap();
    let frac = c - rat(floor);
    let half = ratio(1, 2);
    let (near, tie) = if frac < half {
        (floor, None)
    } else if frac > half {
        (floor + 1, None)
    } else {
        (floor, Some(floor + 1))
    };
    let clamp = |k: i64| k.clamp(lo, hi);
    match tie {
        Some(upper) if clamp(floor) == floor && clamp(upper) == upper => (floor, Some(upper)),
        Some(upper) => {
            // Only one of the tied neighbors is admissible.
            let k = if clamp(floor) == floor { floor } else { clamp(upper) };
            (k, None)
        }
        None => (clamp(near), None),
    }
}

/// The chosen evaluation point of `δ_K(n)`, together with the C-2
/// half-integer correction when it applies.
pub fn delta_point(fp: FusionParams, n: i64) -> Result<(LatticePoint, Option<Rat>), Error> {
    if n < 0 {
        return Err(Error::Parameter("color n must be >= 0".into()));
    }
    let case = case_of(fp);
    let (lo, hi) = case_k1_range(case, n);
    let (k1, correction) = match case_vertex(fp, case, n) {
        None => (hi, None),
        Some(c) => {
            let (k1, other) = nearest_in_range(&c, lo, hi);
            if let Some(k1b) = other {
                // Both neighbors of a half-integral vertex must give the
                // same value (the restriction of Q is a symmetric parabola).
                let a = q_doubled(fp, n, k1, case_point(case, n, k1).k2);
                let b = q_doubled(fp, n, k1b, case_point(case, n, k1b).k2);
                assert_eq!(a, b, "tied neighbors disagree at n = {n}");
            }
            let correction = if case == FusionCase::C2 {
                let half_offset = &c - ratio(1, 2);
                half_offset.is_integer().then(|| &c + ratio(1, 2))
            } else {
                None
            };
            (k1, correction)
        }
    };
    Ok((case_point(case, n, k1), correction))
}

/// The degree `δ_K(n)`, case-dispatched.
pub fn delta(fp: FusionParams, n: i64) -> Result<Rat, Error> {
    let (pt, correction) = delta_point(fp, n)?;
    let base = ratio_i128(q_doubled(fp, n, pt.k1, pt.k2), 2);
    Ok(match correction {
        Some(c) => base - c,
        None => base,
    })
}

/// Exhaustive maximization of `Q` over the admissible lattice; the argmax
/// is the lexicographically smallest maximizing point.
pub fn delta_bruteforce(fp: FusionParams, n: i64) -> Result<(Rat, LatticePoint), Error> {
    const MAX_N: i64 = 2000;
    if n < 0 {
        return Err(Error::Parameter("color n must be >= 0".into()));
    }
    if n > MAX_N {
        return Err(Error::Budget(format!(
            "lattice scan at n = {n} exceeds the n <= {MAX_N} bound"
        )));
    }
    let mut best: Option<(i128, LatticePoint)> = None;
    for k1 in 0..=n {
        let k2_lo = ((n - 2 * k1).abs() - n) / 2;
        for k2 in k2_lo..=k1 {
            let val = q_doubled(fp, n, k1, k2);
            if best.as_ref().is_none_or(|(b, _)| val > *b) {
                best = Some((val, LatticePoint { k1, k2 }));
            }
        }
    }
    let (val, pt) = best.expect("admissible set is nonempty");
    Ok((ratio_i128(val, 2), pt))
}

/// Linear coefficient `b_K(n)` of `d_+[J_{K(m1,m2)}(n)]`.
///
/// Constant within each case except C-2, where it depends on whether
/// `(-1 + (1+m2)(n-1)) / (-1 + 2m1 + 2m2)` is an integer. Always
/// nonpositive; zero exactly when `m1 ∈ {0,1}` with `m2 >= 1`, or
/// `(m1, m2) = (-1, 1)`.
pub fn b_coefficient(fp: FusionParams, n: i64) -> Result<Rat, Error> {
    let FusionParams { m1, m2 } = fp;
    Ok(match case_of(fp) {
        FusionCase::A => ratio(m2 * (1 - m1), 2 * (-1 + m1 + m2)),
        FusionCase::B1 => rat(1 + m1),
        FusionCase::B2 => ratio(m1 * (m2 - 1), 2 * (1 + m1 + m2)),
        FusionCase::C1 => ratio(5, 2) + rat(m1 + 3 * m2),
        FusionCase::C2 => {
            let den = -1 + 2 * m1 + 2 * m2;
            if (-1 + (1 + m2) * (n - 1)).rem_euclid(den) == 0 {
                ratio((-3 + 2 * m1) * (1 + m2), 2 * den)
            } else {
                ratio((-5 + 2 * m1) * (1 + m2), 2 * den)
            }
        }
    })
}

/// Whether the zero set of `b_K(n)` admits this parameter pair:
/// `m1 ∈ {0,1}` with `m2 >= 1`, or `(m1, m2) = (-1, 1)`. These are exactly
/// the non-hyperbolic (torus) members of the family.
pub fn b_zero_classification(fp: FusionParams) -> bool {
    (fp.m2 >= 1 && (fp.m1 == 0 || fp.m1 == 1)) || (fp.m1, fp.m2) == (-1, 1)
}

/// Leading coefficient of `d_+[J_K(n)]` for each case.
fn leading_coefficient(fp: FusionParams) -> Rat {
    let (m1, m2) = (fp.m1, fp.m2);
    match case_of(fp) {
        FusionCase::A => {
            rat(m1 + 2 * m2) + ratio(1, 2) + ratio(m2 * m2, 4 * (-1 + m1 + m2))
        }
        FusionCase::B1 => ratio(1, 2) + rat(2 * m2),
        FusionCase::B2 => {
            ratio(3 + 3 * m1 + 9 * m2, 4) + ratio(m1 * m1, 4 * (1 + m1 + m2))
        }
        FusionCase::C1 => rat(0),
        FusionCase::C2 => {
            let s = 2 * m1 + 3 * m2;
            ratio(s * s, 2 * (-1 + 2 * m1 + 2 * m2))
        }
    }
}

/// Period of the degree model: the residue period of the case vertex
/// `c(n) mod 1` (doubled, to absorb the parity of the clamping bounds),
/// or 1 for the vertex-free cases.
fn model_period(fp: FusionParams) -> i64 {
    let (m1, m2) = (fp.m1, fp.m2);
    let (alpha, den): (i64, i64) = match case_of(fp) {
        FusionCase::A => (m2, 2 * (-1 + m1 + m2)),
        FusionCase::B2 => (1 + m2, 2 * (1 + m1 + m2)),
        FusionCase::C2 => (2 * (1 + m2), 2 * (1 - 2 * m1 - 2 * m2)),
        FusionCase::B1 | FusionCase::C1 => return 1,
    };
    let den = den.abs();
    let period = den / num_integer::gcd(alpha.abs(), den);
    num_integer::lcm(period, 2)
}

/// Full quasi-polynomial model of `d_+[J_{K(m1,m2)}(n)] = δ_K(n-1) + (n-1)/2`.
///
/// The leading and linear coefficients come from the closed forms; the
/// periodic constants (the `r^2_{n-1}` terms, the C-2 correction, and any
/// clamping effects at the admissible boundary) are evaluated exactly at
/// large representatives of each residue class and verified one period on.
pub fn dplus_model(fp: FusionParams) -> Result<QuasiPoly, Error> {
    let a = leading_coefficient(fp);
    let period = model_period(fp);
    let mut coeffs = Vec::with_capacity(period as usize);
    // Far enough out that every eventual inequality (vertex vs. clamping
    // bounds) has settled for the grid sizes this is used at.
    let base_rep = 720 * (fp.m1.abs() + fp.m2.abs() + 2);
    let start = base_rep - base_rep.rem_euclid(period);
    for rho in 0..period {
        let n1 = start + rho + period;
        let at = |n: i64| -> Result<Rat, Error> {
            let value = delta(fp, n - 1)? + ratio(n - 1, 2);
            let b = b_coefficient(fp, n)?;
            Ok(value - &a * rat(n) * rat(n) - b * rat(n))
        };
        let d = at(n1)?;
        if d != at(n1 + period)? {
            return Err(Error::Domain(format!(
                "degree constants of K({}, {}) are not {period}-periodic",
                fp.m1, fp.m2
            )));
        }
        coeffs.push(ResidueCoeffs::new(
            a.clone(),
            b_coefficient(fp, n1)?,
            d,
        ));
    }
    // coeffs[rho] belongs to n ≡ start + rho + period ≡ rho (mod period).
    Ok(QuasiPoly::new(1, coeffs))
}
