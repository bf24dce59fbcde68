//! Exact arithmetic: arbitrary-precision rationals and Laurent polynomials
//! in `v` with quarter-integer exponents.
//!
//! - [`Rat`]: exact rational numbers (arbitrary-precision, always reduced)
//! - [`QLaurent`]: sparse Laurent polynomial in `v` whose exponents live in
//!   `(1/4)Z`, stored as integers in units of `v^{1/4}`
//!
//! Every bracket and colored-Jones value in this crate is a [`QLaurent`].
//! Exponents are kept in quarter units so that all degree formulas
//! (`pq(n^2-1)/4`, `-pk(qk+1)` with half-integer `k`, ...) stay integral.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

/// Exact rational number. Reduced form with positive denominator is
/// maintained by `num-rational`.
pub type Rat = BigRational;

/// `n` as a [`Rat`].
pub fn rat(n: i64) -> Rat {
    BigRational::from_integer(BigInt::from(n))
}

/// `num/den` as a [`Rat`]. Panics if `den == 0`.
pub fn ratio(num: i64, den: i64) -> Rat {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Canonical string form of a rational: `"p"` when integral, else `"p/q"`
/// with `q > 0` and `gcd(p, q) = 1`.
pub fn rat_string(r: &Rat) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parse `"p"` or `"p/q"` into a [`Rat`].
pub fn parse_rat(s: &str) -> Result<Rat, Error> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num
        .parse()
        .map_err(|_| Error::Parse(format!("bad rational {s:?}")))?;
    let den: BigInt = den
        .parse()
        .map_err(|_| Error::Parse(format!("bad rational {s:?}")))?;
    if den.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {s:?}")));
    }
    Ok(BigRational::new(num, den))
}

/// Sparse Laurent polynomial in `v^{1/4}`.
///
/// The map sends a quarter-exponent `e` (meaning `v^{e/4}`) to its nonzero
/// integer coefficient. The zero polynomial is the empty map, and two
/// polynomials are equal iff their term maps are equal; every operation
/// drops zero coefficients so this canonical form is an invariant.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct QLaurent {
    terms: BTreeMap<i64, BigInt>,
}

impl QLaurent {
    /// The zero polynomial.
    pub fn zero() -> Self {
        Self::default()
    }

    /// The constant polynomial 1.
    pub fn one() -> Self {
        Self::monomial(0, 1)
    }

    /// `coeff * v^{quarters/4}`.
    pub fn monomial(quarters: i64, coeff: impl Into<BigInt>) -> Self {
        let coeff = coeff.into();
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(quarters, coeff);
        }
        Self { terms }
    }

    /// Build from `(quarter_exponent, coefficient)` pairs, summing repeats.
    pub fn from_terms<I, C>(iter: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut out = Self::zero();
        for (e, c) in iter {
            out.add_term(e, c.into());
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Iterate terms in increasing exponent order.
    pub fn iter(&self) -> impl Iterator<Item = (&i64, &BigInt)> {
        self.terms.iter()
    }

    /// Coefficient of `v^{quarters/4}` (zero if absent).
    pub fn coeff(&self, quarters: i64) -> BigInt {
        self.terms.get(&quarters).cloned().unwrap_or_else(BigInt::zero)
    }

    fn add_term(&mut self, e: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Coefficient-wise sum.
    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&e, c) in &other.terms {
            out.add_term(e, c.clone());
        }
        out
    }

    pub fn add_assign(&mut self, other: &Self) {
        for (&e, c) in &other.terms {
            self.add_term(e, c.clone());
        }
    }

    pub fn negate(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(&e, c)| (e, -c)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.negate())
    }

    /// Convolution product; exact integer coefficients throughout.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (&e1, c1) in &self.terms {
            for (&e2, c2) in &other.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }

    /// Multiply by `coeff * v^{quarters/4}` in place.
    pub fn mul_monomial(&mut self, quarters: i64, coeff: &BigInt) {
        if coeff.is_zero() {
            self.terms.clear();
            return;
        }
        self.terms = self
            .terms
            .iter()
            .map(|(&e, c)| (e + quarters, c * coeff))
            .collect();
    }

    /// Multiply by the integer `k`.
    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(&e, c)| (e, c * k)).collect(),
        }
    }

    /// Highest and lowest degree in `v`, as exact rationals.
    ///
    /// Errors on the zero polynomial, which has no degree.
    pub fn degrees(&self) -> Result<(Rat, Rat), Error> {
        let (min, _) = self.terms.iter().next().ok_or(Error::ZeroPolynomial)?;
        let (max, _) = self.terms.iter().next_back().ok_or(Error::ZeroPolynomial)?;
        Ok((ratio(*max, 4), ratio(*min, 4)))
    }

    /// Highest degree in `v`.
    pub fn dplus(&self) -> Result<Rat, Error> {
        Ok(self.degrees()?.0)
    }

    /// Lowest degree in `v`.
    pub fn dminus(&self) -> Result<Rat, Error> {
        Ok(self.degrees()?.1)
    }

    /// Substitute `v -> v^{-1}`, i.e. negate every exponent.
    pub fn mirror(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(&e, c)| (-e, c.clone())).collect(),
        }
    }

    /// Exact division, when `other` divides `self` in `Z[v^{±1/4}]`.
    ///
    /// Plain long division from the top term; errors if any remainder step
    /// is not exactly divisible.
    pub fn div_exact(&self, other: &Self) -> Result<Self, Error> {
        if other.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let (&lead_e, lead_c) = other.terms.iter().next_back().unwrap();
        let mut rem = self.clone();
        let mut quot = QLaurent::zero();
        while !rem.is_zero() {
            let (&re, rc) = rem.terms.iter().next_back().unwrap();
            let (q, r) = num_integer::Integer::div_rem(rc, lead_c);
            if !r.is_zero() {
                return Err(Error::Domain("inexact polynomial division".into()));
            }
            let mono = QLaurent::monomial(re - lead_e, q);
            rem = rem.sub(&mono.mul(other));
            quot.add_assign(&mono);
        }
        Ok(quot)
    }

    /// Evaluate at an integer value of `v`. Requires all exponents to be
    /// integral (quarter exponents divisible by 4) and nonnegative after
    /// shifting; used for determinant-style specializations.
    pub fn eval_at_integer_v(&self, v: i64) -> Result<BigInt, Error> {
        let mut acc = BigInt::zero();
        let v = BigInt::from(v);
        for (&e, c) in &self.terms {
            if e % 4 != 0 {
                return Err(Error::Domain(
                    "cannot evaluate non-integral exponents at integer v".into(),
                ));
            }
            let k = e / 4;
            if k < 0 {
                if v.magnitude().is_one() {
                    // v = ±1: v^k = v^{-k}
                    acc += c * v.pow((-k) as u32);
                } else {
                    return Err(Error::Domain("negative exponent at integer v".into()));
                }
            } else {
                acc += c * v.pow(k as u32);
            }
        }
        Ok(acc)
    }

    /// JSON form: list of `[exponent_quarters, "coeff"]` pairs sorted by
    /// exponent, coefficients as decimal strings.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.terms
                .iter()
                .map(|(&e, c)| serde_json::json!([e, c.to_string()]))
                .collect(),
        )
    }

    /// Parse the [`QLaurent::to_json`] format.
    pub fn from_json(value: &serde_json::Value) -> Result<Self, Error> {
        let arr = value
            .as_array()
            .ok_or_else(|| Error::Parse("QLaurent JSON must be a list".into()))?;
        let mut out = Self::zero();
        for pair in arr {
            let pair = pair
                .as_array()
                .filter(|p| p.len() == 2)
                .ok_or_else(|| Error::Parse("QLaurent term must be [exp, coeff]".into()))?;
            let e = pair[0]
                .as_i64()
                .ok_or_else(|| Error::Parse("exponent must be an integer".into()))?;
            let c: BigInt = pair[1]
                .as_str()
                .ok_or_else(|| Error::Parse("coefficient must be a string".into()))?
                .parse()
                .map_err(|_| Error::Parse("bad coefficient".into()))?;
            out.add_term(e, c);
        }
        Ok(out)
    }
}

/// Loop value of the Kauffman bracket: `δ = -(v^{1/2} + v^{-1/2})`.
pub fn loop_value() -> QLaurent {
    QLaurent::from_terms([(2i64, -1i64), (-2, -1)])
}

/// The unknot colored Jones polynomial
/// `J_unknot(n) = (v^{n/2} - v^{-n/2}) / (v^{1/2} - v^{-1/2})`,
/// extended to all integers by `J(-n) = -J(n)` and `J(0) = 0`.
///
/// For `n > 0` this is the `n`-term sum `v^{(n-1)/2} + v^{(n-3)/2} + ...
/// + v^{-(n-1)/2}`.
pub fn unknot_jones(n: i64) -> QLaurent {
    use std::cmp::Ordering;
    match n.cmp(&0) {
        Ordering::Equal => QLaurent::zero(),
        Ordering::Less => unknot_jones(-n).negate(),
        Ordering::Greater => {
            QLaurent::from_terms((0..n).map(|j| (2 * (n - 1) - 4 * j, 1i64)))
        }
    }
}

impl fmt::Display for QLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&e, c) in self.terms.iter().rev() {
            let (sign, mag) = if c.is_negative() {
                ("-", -c)
            } else {
                ("+", c.clone())
            };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {sign} ")?;
            }
            let show_coeff = !mag.is_one() || e == 0;
            if show_coeff {
                write!(f, "{mag}")?;
            }
            if e != 0 {
                if show_coeff {
                    write!(f, "*")?;
                }
                if e % 4 == 0 {
                    write!(f, "v^{}", e / 4)?;
                } else if e % 2 == 0 {
                    write!(f, "v^({}/2)", e / 2)?;
                } else {
                    write!(f, "v^({e}/4)")?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for QLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
