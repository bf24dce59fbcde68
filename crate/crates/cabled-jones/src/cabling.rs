//! Degree behavior of colored Jones polynomials under `(p,q)`-cabling.
//!
//! - [`cable_jones`]: the exact cabling sum
//!   `J_{K_{p,q}}(n) = v^{pq(n^2-1)/4} Σ_{k ∈ S_n} v^{-pk(qk+1)} J_K(2qk+1)`
//! - [`term_degree_f`]: the per-term degree `f(k) = -pk(qk+1) + d_+[J_K(|2qk+1|)]`
//! - [`predict_cable_degree`]: degree prediction by exact maximization of
//!   `f` over `S_n`, fitted back to a quasi-polynomial, with maximizer-margin
//!   reporting and hard failure on ties
//! - [`closed_form_period2`]: the explicit `A(n), B(n), D(n)` for base models
//!   of period at most two with `b(n) <= 0`
//! - [`m1_m2`], [`admissible_constant_a`]: the thresholds that extend the
//!   prediction to longer periods with constant leading coefficient
//! - [`cable_boundary_slopes`], [`cable_surface`]: the boundary-slope set
//!   transform `q^2·bs ∪ {pq}` and the Euler-characteristic bookkeeping
//!   `χ(S) = |q|χ(S') + |∂S'|(1-|q|)|p-aq|` for integral slopes

use std::collections::BTreeMap;

use num_traits::{Signed, Zero};

use crate::error::Error;
use crate::laurent::{rat, rat_string, ratio, QLaurent, Rat};
use crate::quasipoly::{self, QuasiPoly, ResidueCoeffs, Slope, SlopeSet};

/// Cabling parameters: coprime `(p, q)` with `|q| > 1`.
///
/// All operations normalize to `q > 1` on entry; `K_{-p,-q}` is the same
/// knot with reversed orientation and the colored Jones polynomial does not
/// see orientation.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct CableParams {
    p: i64,
    q: i64,
}

impl CableParams {
    pub fn new(p: i64, q: i64) -> Result<Self, Error> {
        if q.unsigned_abs() <= 1 {
            return Err(Error::Parameter(format!(
                "cable requires |q| > 1, got q = {q}"
            )));
        }
        if num_integer::gcd(p, q) != 1 {
            return Err(Error::Parameter(format!("({p}, {q}) are not coprime")));
        }
        Ok(Self { p, q })
    }

    /// Raw parameters as given.
    pub fn raw(&self) -> (i64, i64) {
        (self.p, self.q)
    }

    /// Parameters normalized to `q > 1`.
    pub fn normalized(&self) -> (i64, i64) {
        if self.q > 0 {
            (self.p, self.q)
        } else {
            (-self.p, -self.q)
        }
    }

    /// The cabling-annulus slope `pq`.
    pub fn annulus_slope(&self) -> i64 {
        self.p * self.q
    }
}

/// A half-integer summation index `k = twok/2`. Membership in `S_n` requires
/// `|twok| <= n-1` and `twok ≡ n-1 (mod 2)`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct HalfIndex {
    pub twok: i64,
}

impl HalfIndex {
    pub fn value(&self) -> Rat {
        ratio(self.twok, 2)
    }
}

/// The index set `S_n`: all `k` with `|k| <= (n-1)/2` and `k` integral for
/// odd `n`, half-integral for even `n`.
pub fn summation_indices(n: i64) -> impl Iterator<Item = HalfIndex> {
    debug_assert!(n >= 1);
    (-(n - 1)..=n - 1).step_by(2).map(|twok| HalfIndex { twok })
}

/// An essential-surface datum: boundary slope, Euler characteristic, and
/// number of boundary components.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SurfaceData {
    pub slope: Rat,
    pub euler: i64,
    pub boundary_count: u32,
}

impl SurfaceData {
    pub fn new(slope: Rat, euler: i64, boundary_count: u32) -> Self {
        assert!(boundary_count >= 1, "a surface datum needs boundary");
        Self {
            slope,
            euler,
            boundary_count,
        }
    }
}

/// Exact colored Jones polynomial of the `(p,q)`-cable, given the base
/// knot's polynomials as a function of the color.
///
/// `jk(m)` must return `J_K(m)` for every positive color `m = |2qk+1|`
/// arising from `k ∈ S_n`; negative colors are handled internally through
/// `J_K(-m) = -J_K(m)`.
pub fn cable_jones<F>(mut jk: F, params: CableParams, n: i64) -> Result<QLaurent, Error>
where
    F: FnMut(i64) -> Result<QLaurent, Error>,
{
    if n < 1 {
        return Err(Error::Parameter("color n must be >= 1".into()));
    }
    let (p, q) = params.normalized();
    let mut sum = QLaurent::zero();
    for k in summation_indices(n) {
        let color = q * k.twok + 1; // 2qk + 1; never zero since |q| > 1
        let mut term = if color > 0 {
            jk(color)?
        } else {
            jk(-color)?.negate()
        };
        // -pk(qk+1) in quarter units: -p * twok * (q*twok + 2).
        term.mul_monomial(-p * k.twok * (q * k.twok + 2), &1.into());
        sum.add_assign(&term);
    }
    // Global shift v^{pq(n^2-1)/4}.
    sum.mul_monomial(p * q * (n * n - 1), &1.into());
    Ok(sum)
}

/// A base-knot degree function: the fitted quasi-polynomial model plus exact
/// stored degrees for the colors below its validity range. Eventual formulas
/// can be wrong at small colors, and the cabling sum needs every color.
#[derive(Clone, Copy, Debug)]
pub struct DegreeData<'a> {
    pub model: &'a QuasiPoly,
    pub small_colors: &'a BTreeMap<i64, Rat>,
}

static EMPTY_SMALL: BTreeMap<i64, Rat> = BTreeMap::new();

impl<'a> DegreeData<'a> {
    pub fn new(model: &'a QuasiPoly, small_colors: &'a BTreeMap<i64, Rat>) -> Self {
        Self {
            model,
            small_colors,
        }
    }

    /// Degree data for a model valid from color 1 (no table needed).
    pub fn full_range(model: &'a QuasiPoly) -> Self {
        Self::new(model, &EMPTY_SMALL)
    }

    /// Exact `d_+[J_K(m)]` for a positive color `m`.
    pub fn dplus(&self, color: i64) -> Result<Rat, Error> {
        if color >= self.model.valid_from() {
            return self.model.eval(color);
        }
        self.small_colors.get(&color).cloned().ok_or_else(|| {
            Error::Domain(format!(
                "no exact degree stored for color {color} below model validity {}",
                self.model.valid_from()
            ))
        })
    }
}

/// The term degree `f(k) = -pk(qk+1) + d_+[J_K(|2qk+1|)]`; negative colors
/// enter through their absolute value since negating a polynomial does not
/// change its degrees.
pub fn term_degree_f(
    data: DegreeData<'_>,
    params: CableParams,
    k: HalfIndex,
) -> Result<Rat, Error> {
    let (p, q) = params.normalized();
    let color = (q * k.twok + 1).abs();
    let shift = ratio(-p * k.twok * (q * k.twok + 2), 4);
    Ok(shift + data.dplus(color)?)
}

/// Which branch of the cable-degree dichotomy a residue class landed in.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum BranchKind {
    /// Leading coefficient `pq/4`, from the cabling-annulus slope; `B = 0`.
    AnnulusSlope,
    /// Leading coefficient `q^2 a_i`, inherited from the base knot.
    InheritedSlope,
}

#[derive(Clone, Debug)]
pub struct CaseTag {
    pub branch: BranchKind,
    pub detail: String,
}

/// One step of the maximizer trace: the winning index and its margin over
/// the runner-up (`None` when `S_n` is a single point).
#[derive(Clone, Debug)]
pub struct MaxStep {
    pub n: i64,
    pub winner_twok: i64,
    pub margin: Option<Rat>,
}

/// A predicted cable degree model with its provenance.
#[derive(Clone, Debug)]
pub struct CablePrediction {
    pub model: QuasiPoly,
    /// One tag per residue class of `model`.
    pub case_tags: Vec<CaseTag>,
    pub maximizer_trace: Vec<MaxStep>,
}

impl CablePrediction {
    /// The predicted slopes must lie in `q^2·js(base) ∪ {pq}`; at the level
    /// of leading coefficients this is `A ∈ {q^2 a_i} ∪ {pq/4}`, and the
    /// extra slope `4·(pq/4) = pq` is the cabling-annulus slope.
    pub fn slopes_contained(&self, base: &QuasiPoly, params: CableParams) -> bool {
        let (p, q) = params.normalized();
        let mut allowed: SlopeSet = base
            .jones_slopes()
            .iter()
            .map(|s| match s {
                Slope::Finite(r) => Slope::Finite(r * rat(q * q)),
                Slope::Infinity => Slope::Infinity,
            })
            .collect();
        allowed.insert(Slope::Finite(rat(p * q)));
        self.model.jones_slopes().is_subset(&allowed)
    }
}

fn tag_for(a_value: &Rat, params: CableParams) -> CaseTag {
    let (p, q) = params.normalized();
    if *a_value == ratio(p * q, 4) {
        CaseTag {
            branch: BranchKind::AnnulusSlope,
            detail: format!("A = pq/4 = {}", rat_string(a_value)),
        }
    } else {
        CaseTag {
            branch: BranchKind::InheritedSlope,
            detail: format!("A = q^2 a = {}", rat_string(a_value)),
        }
    }
}

/// Predict `d_+[J_{K_{p,q}}(n)]` by maximizing `f` over `S_n` for each `n`
/// up to `sample_up_to`, then fitting the resulting degree sequence.
///
/// Requires the base model to satisfy `b(n) <= 0` (the unknot, with
/// `b = 1/2`, is routed through the torus-knot formulas instead). A tied
/// maximizer inside the fitted range is an error: the degree of the sum is
/// then not determined by a single largest term.
pub fn predict_cable_degree(
    data: DegreeData<'_>,
    params: CableParams,
    pi_max: usize,
    sample_up_to: i64,
) -> Result<CablePrediction, Error> {
    if !data.model.b_nonpositive() {
        return Err(Error::Hypothesis(
            "hypothesis b(n) <= 0 violated by the base model".into(),
        ));
    }
    let (p, q) = params.normalized();
    let mut samples: BTreeMap<i64, Rat> = BTreeMap::new();
    let mut trace = Vec::new();
    let mut last_tie: Option<(i64, Vec<i64>)> = None;

    for n in 1..=sample_up_to {
        let mut best: Option<(Rat, i64)> = None;
        let mut second: Option<Rat> = None;
        let mut tied_with: Vec<i64> = Vec::new();
        for k in summation_indices(n) {
            let f = term_degree_f(data, params, k)?;
            match &mut best {
                None => best = Some((f, k.twok)),
                Some((fb, tb)) => {
                    if f > *fb {
                        second = Some(fb.clone());
                        tied_with.clear();
                        best = Some((f, k.twok));
                    } else if f == *fb {
                        tied_with.push(*tb);
                        tied_with.push(k.twok);
                        second = Some(f);
                    } else if second.as_ref().is_none_or(|s| f > *s) {
                        second = Some(f);
                    }
                }
            }
        }
        let (fmax, winner) = best.expect("S_n is nonempty");
        if tied_with.is_empty() {
            trace.push(MaxStep {
                n,
                winner_twok: winner,
                margin: second.map(|s| &fmax - s),
            });
        } else {
            tied_with.dedup();
            last_tie = Some((n, tied_with));
            trace.push(MaxStep {
                n,
                winner_twok: winner,
                margin: Some(rat(0)),
            });
        }
        samples.insert(n, ratio(p * q * (n * n - 1), 4) + fmax);
    }

    // A tie in the upper half of the sampled range means the unique-term
    // hypothesis failed where the fitted model would have to hold.
    if let Some((n, tied)) = &last_tie {
        if *n > sample_up_to / 2 {
            return Err(Error::CancellationRisk {
                n: *n,
                tied_twok: tied.clone(),
            });
        }
        samples = samples.split_off(&(*n + 1));
    }

    let model = quasipoly::fit(&samples, pi_max)?;
    if let Some((n, tied)) = last_tie {
        if n >= model.valid_from() {
            return Err(Error::CancellationRisk { n, tied_twok: tied });
        }
    }
    if !model.b_nonpositive() {
        return Err(Error::Hypothesis(
            "prediction violated B(n) <= 0 despite b(n) <= 0".into(),
        ));
    }
    let case_tags = model
        .residues()
        .iter()
        .map(|c| tag_for(&c.a, params))
        .collect();
    let prediction = CablePrediction {
        model,
        case_tags,
        maximizer_trace: trace,
    };
    if !prediction.slopes_contained(data.model, params) {
        return Err(Error::Hypothesis(
            "predicted slopes escaped q^2·js ∪ {pq/4}".into(),
        ));
    }
    Ok(prediction)
}

/// `c2 n^2 + c1 n + c0` with exact coefficients.
#[derive(Clone, Debug)]
struct Quad {
    c2: Rat,
    c1: Rat,
    c0: Rat,
}

impl Quad {
    fn eval(&self, n: i64) -> Rat {
        let n = rat(n);
        &self.c2 * &n * &n + &self.c1 * &n + &self.c0
    }

    fn sub(&self, other: &Quad) -> Quad {
        Quad {
            c2: &self.c2 - &other.c2,
            c1: &self.c1 - &other.c1,
            c0: &self.c0 - &other.c0,
        }
    }

    /// Smallest `N >= 1` with `self(n) > 0` for every integer `n >= N`.
    fn positive_from(&self) -> Option<i64> {
        let zero = Rat::zero();
        let bound: i64 = if self.c2 > zero {
            // For n >= (|c1| + |c0|)/c2 + 1, the n^2 term dominates.
            let b = (self.c1.abs() + self.c0.abs()) / &self.c2 + rat(1);
            b.ceil().to_integer().try_into().ok()?
        } else if self.c2 == zero && self.c1 > zero {
            let b = self.c0.abs() / &self.c1 + rat(1);
            b.ceil().to_integer().try_into().ok()?
        } else if self.c2 == zero && self.c1 == zero {
            return (self.c0 > zero).then_some(1);
        } else {
            return None;
        };
        let bound = bound.max(1);
        let mut n = bound;
        while n > 1 && self.eval(n - 1) > zero {
            n -= 1;
        }
        Some(n)
    }
}

/// `g_i^ε(αn + β)` expanded as a quadratic in `n`, where
/// `g_i^ε(x) = (-pq + 4q^2 a_i) x^2 + (-p + 4q a_i + 2εq b_i) x + a_i + ε b_i + d_i`.
fn g_affine(c: &ResidueCoeffs, p: i64, q: i64, eps: i64, alpha: Rat, beta: Rat) -> Quad {
    let g2 = rat(-p * q) + rat(4 * q * q) * &c.a;
    let g1 = rat(-p) + rat(4 * q) * &c.a + rat(2 * eps * q) * &c.b;
    let g0 = &c.a + rat(eps) * &c.b + &c.d;
    Quad {
        c2: &g2 * &alpha * &alpha,
        c1: rat(2) * &g2 * &alpha * &beta + &g1 * &alpha,
        c0: &g2 * &beta * &beta + &g1 * &beta + g0,
    }
}

/// Candidate maximizer on one parity class: `ε`, the affine argument
/// `αn + β` of `g`, and the smallest `n` at which the index exists in `S_n`.
struct Candidate {
    eps: i64,
    alpha: Rat,
    beta: Rat,
    exists_from: i64,
}

/// The closed-form cable degree model for a base of period at most two with
/// nonpositive linear terms.
///
/// For each parity class of `n` the winning index is one of `(n-1)/2`,
/// `±1/2`, `0`, or `-1`, according to the sign of `p - 4q a_i`. The returned
/// `valid_from` is computed exactly from the dominance inequalities, so the
/// model provably agrees with the term-by-term maximization from there on.
pub fn closed_form_period2(
    base: &QuasiPoly,
    params: CableParams,
) -> Result<CablePrediction, Error> {
    if base.period() > 2 {
        return Err(Error::Domain(format!(
            "closed form requires period <= 2, model has period {}",
            base.period()
        )));
    }
    if !base.b_nonpositive() {
        return Err(Error::Hypothesis(
            "hypothesis b(n) <= 0 violated by the base model".into(),
        ));
    }
    let (p, q) = params.normalized();
    let pq_over_4 = ratio(p * q, 4);
    for c in base.residues() {
        if rat(p) == rat(4 * q) * &c.a {
            return Err(Error::SlopeCollision {
                pq: rat_string(&(&c.a * rat(4))),
            });
        }
    }

    let mut residues = Vec::with_capacity(2);
    let mut tags = Vec::with_capacity(2);
    let mut valid_from = 1i64;

    // Parity classes of the cable color n. For even q every summand sees an
    // odd base color (residue 1); for odd q the base color parity equals the
    // parity of n.
    for sigma in 0..2i64 {
        let i = if q % 2 == 0 { 1 } else { sigma };
        let c = base.coeffs_at(i);
        let concave_up = rat(p) < rat(4 * q) * &c.a;

        let far_plus = Candidate {
            eps: 1,
            alpha: ratio(1, 2),
            beta: ratio(-1, 2),
            exists_from: 1,
        };
        let far_minus = Candidate {
            eps: -1,
            alpha: ratio(-1, 2),
            beta: ratio(1, 2),
            exists_from: 2,
        };
        let (near_plus, near_minus) = if sigma == 0 {
            (
                Candidate {
                    eps: 1,
                    alpha: rat(0),
                    beta: ratio(1, 2),
                    exists_from: 2,
                },
                Candidate {
                    eps: -1,
                    alpha: rat(0),
                    beta: ratio(-1, 2),
                    exists_from: 2,
                },
            )
        } else {
            (
                Candidate {
                    eps: 1,
                    alpha: rat(0),
                    beta: rat(0),
                    exists_from: 1,
                },
                Candidate {
                    eps: -1,
                    alpha: rat(0),
                    beta: rat(-1),
                    exists_from: 3,
                },
            )
        };
        let quad = |cand: &Candidate| g_affine(c, p, q, cand.eps, cand.alpha.clone(), cand.beta.clone());

        if concave_up {
            // Inherited branch: the extreme positive index wins.
            let winner = quad(&far_plus);
            for cand in [&near_plus, &near_minus, &far_minus] {
                let diff = winner.sub(&quad(cand));
                let from = diff.positive_from().ok_or_else(|| {
                    Error::Hypothesis("dominance of the extreme index never stabilizes".into())
                })?;
                valid_from = valid_from.max(from).max(cand.exists_from);
            }
            // The extreme index reads the base model at color q(n-1)+1.
            if base.valid_from() > 1 {
                let color_bound = 1 + (base.valid_from() - 1 + q - 1).div_euclid(q);
                valid_from = valid_from.max(color_bound);
            }
            residues.push(ResidueCoeffs::new(
                &pq_over_4 + &winner.c2,
                winner.c1.clone(),
                -&pq_over_4 + &winner.c0,
            ));
            tags.push(tag_for(&(&pq_over_4 + &winner.c2), params));
        } else {
            // Annulus branch: a bounded index wins and B(n) = 0.
            let (winner_cand, other_near) = if sigma == 0 {
                (&near_minus, &near_plus)
            } else {
                (&near_plus, &near_minus)
            };
            let winner = quad(winner_cand);
            let near_diff = winner.sub(&quad(other_near));
            // n-free comparison between the two bounded candidates.
            debug_assert!(near_diff.c2.is_zero() && near_diff.c1.is_zero());
            if near_diff.c0.is_zero() {
                return Err(Error::CancellationRisk {
                    n: 0,
                    tied_twok: vec![
                        (&winner_cand.beta * rat(2)).to_integer().try_into().unwrap_or(0),
                        (&other_near.beta * rat(2)).to_integer().try_into().unwrap_or(0),
                    ],
                });
            }
            if near_diff.c0 < Rat::zero() {
                return Err(Error::Hypothesis(
                    "near-index dominance order contradicts b <= 0".into(),
                ));
            }
            for cand in [&far_plus, &far_minus] {
                let diff = winner.sub(&quad(cand));
                let from = diff.positive_from().ok_or_else(|| {
                    Error::Hypothesis("bounded index never dominates the extremes".into())
                })?;
                valid_from = valid_from.max(from).max(cand.exists_from);
            }
            valid_from = valid_from.max(winner_cand.exists_from);
            debug_assert!(winner.c2.is_zero() && winner.c1.is_zero());
            residues.push(ResidueCoeffs::new(
                pq_over_4.clone(),
                rat(0),
                -&pq_over_4 + &winner.c0,
            ));
            tags.push(tag_for(&pq_over_4, params));
        }
    }

    // residues[sigma] applies to even/odd n respectively.
    let model = QuasiPoly::new(valid_from, residues);
    tags.truncate(model.period());
    Ok(CablePrediction {
        model,
        case_tags: tags,
        maximizer_trace: Vec::new(),
    })
}

/// The spread thresholds for constant leading coefficient:
/// `M1 = max |b(i)-b(j)|` and `M2 = max 2b(i) + |b(i)-b(j)| + |d(i)-d(j)|`,
/// both over residue pairs `i ≡ j (mod 2)` of the model (including `i = j`).
pub fn m1_m2(base: &QuasiPoly) -> Result<(Rat, Rat), Error> {
    if base.constant_a().is_none() {
        return Err(Error::Domain(
            "M1/M2 thresholds require a constant leading coefficient".into(),
        ));
    }
    let l = num_integer::lcm(base.period() as i64, 2);
    let mut m1: Option<Rat> = None;
    let mut m2: Option<Rat> = None;
    for i in 0..l {
        for j in 0..l {
            if (i - j) % 2 != 0 {
                continue;
            }
            let (ci, cj) = (base.coeffs_at(i), base.coeffs_at(j));
            let db = (&ci.b - &cj.b).abs();
            let dd = (&ci.d - &cj.d).abs();
            let cand2 = rat(2) * &ci.b + &db + dd;
            if m1.as_ref().is_none_or(|m| db > *m) {
                m1 = Some(db);
            }
            if m2.as_ref().is_none_or(|m| cand2 > *m) {
                m2 = Some(cand2);
            }
        }
    }
    Ok((m1.unwrap(), m2.unwrap()))
}

/// Admissibility of `(p,q)` for the constant-leading-coefficient predictor:
/// `p - (4a - M1)q < 0` or `p - (4a + M1)q > max{0, M2}`.
pub fn admissible_constant_a(base: &QuasiPoly, params: CableParams) -> Result<bool, Error> {
    let a = base
        .constant_a()
        .ok_or_else(|| Error::Domain("requires constant leading coefficient".into()))?
        .clone();
    if !base.b_nonpositive() {
        return Err(Error::Hypothesis(
            "hypothesis b(n) <= 0 violated by the base model".into(),
        ));
    }
    let (m1, m2) = m1_m2(base)?;
    let (p, q) = params.normalized();
    let (p, q) = (rat(p), rat(q));
    let four_a = rat(4) * &a;
    let left = &p - (&four_a - &m1) * &q < Rat::zero();
    let right = &p - (&four_a + &m1) * &q > m2.max(Rat::zero());
    Ok(left || right)
}

/// The boundary-slope transform `bs ↦ q^2·bs ∪ {pq}`; `∞` maps to `∞`.
pub fn cable_boundary_slopes(bs: &SlopeSet, params: CableParams) -> SlopeSet {
    let (p, q) = params.normalized();
    let mut out: SlopeSet = bs
        .iter()
        .map(|s| match s {
            Slope::Finite(r) => Slope::Finite(r * rat(q * q)),
            Slope::Infinity => Slope::Infinity,
        })
        .collect();
    out.insert(Slope::Finite(rat(p * q)));
    out
}

/// Transform a surface with integral boundary slope `a` through the cable:
/// the slope becomes `q^2 a`, the Euler characteristic becomes
/// `|q|χ + |∂S|(1-|q|)|p-aq|`, and the boundary count is unchanged.
pub fn cable_surface(s: &SurfaceData, params: CableParams) -> Result<SurfaceData, Error> {
    if !s.slope.is_integer() {
        return Err(Error::Domain(format!(
            "surface transform requires an integral slope, got {}",
            rat_string(&s.slope)
        )));
    }
    let a: i64 = s
        .slope
        .to_integer()
        .try_into()
        .map_err(|_| Error::Domain("slope out of range".into()))?;
    let (p, q) = params.normalized();
    let euler = q * s.euler + s.boundary_count as i64 * (1 - q) * (p - a * q).abs();
    Ok(SurfaceData {
        slope: rat(q * q * a),
        euler,
        boundary_count: s.boundary_count,
    })
}
