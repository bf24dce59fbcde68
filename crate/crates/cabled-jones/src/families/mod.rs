//! Closed-form knot families and diagram-level degree data.
//!
//! - [`torus_jones`]: the exact torus-knot colored Jones polynomial as a
//!   cabling sum over quantum integers
//! - [`torus_degree`]: its degree model, `(pq n^2 + d(n))/4` for positive
//!   parameters and the linear model for `p < 0 < q`
//! - [`adequate_summary`]: state-circle counts and adequacy flags of a
//!   diagram, via union-find on the all-A / all-B resolutions
//! - [`adequate_dplus`] / [`adequate_dminus`]: the exact degree models that
//!   adequacy buys, `2d_+ = c_+ n^2 + (v_B - c)n + c_- - v_B` and its mirror
//! - [`adequate_surface`]: the state surface's slope `±2c_±`, Euler
//!   characteristic `v - c`, and single boundary component
//! - [`delta_to_dplus`]: the reindexing `d_+[J(n)] = δ(n-1) + (n-1)/2`
//! - [`catalog`]: slope/surface data for low-crossing knots and the
//!   `(-2,3,p)` pretzels

pub mod catalog;

pub use catalog::{catalog, catalog_names, entry_to_json, CatalogEntry, KnotFlags};

use crate::bracket::pd::{PDCode, Resolution};
use crate::cabling::SurfaceData;
use crate::error::Error;
use crate::laurent::{rat, ratio, unknot_jones, QLaurent};
use crate::quasipoly::{QuasiPoly, ResidueCoeffs};

fn torus_normalize(p: i64, q: i64) -> Result<(i64, i64), Error> {
    if num_integer::gcd(p, q) != 1 {
        return Err(Error::Parameter(format!(
            "torus parameters ({p}, {q}) are not coprime"
        )));
    }
    Ok(if q < 0 { (-p, -q) } else { (p, q) })
}

/// Colored Jones polynomial of the `(p,q)`-torus knot:
/// `v^{pq(n^2-1)/4} Σ_{k ∈ S_n} v^{-pk(qk+1)} [2qk+1]` where `[m]` is the
/// quantum integer. Degenerate parameters (`|p| <= 1` or `|q| <= 1`) give
/// the unknot.
pub fn torus_jones(p: i64, q: i64, n: i64) -> Result<QLaurent, Error> {
    let (p, q) = torus_normalize(p, q)?;
    if n < 1 {
        return Err(Error::Parameter("color n must be >= 1".into()));
    }
    if q <= 1 || p.abs() <= 1 {
        return Ok(unknot_jones(n));
    }
    let mut sum = QLaurent::zero();
    for twok in (-(n - 1)..=n - 1).step_by(2) {
        let mut term = unknot_jones(q * twok + 1);
        term.mul_monomial(-p * twok * (q * twok + 2), &1.into());
        sum.add_assign(&term);
    }
    sum.mul_monomial(p * q * (n * n - 1), &1.into());
    Ok(sum)
}

/// Degree model `d_+[J_{T(p,q)}(n)]`, exact for all `n >= 1`.
///
/// For `p, q > 0` this is `(pq n^2 - pq - (1+(-1)^n)(p-2)(q-2)/2)/4`, of
/// period at most two; for `p < 0 < q` it is the linear model
/// `((pq-p+q)n - (pq-p+q))/2`. Degenerate parameters give the unknot model
/// `(n-1)/2`.
pub fn torus_degree(p: i64, q: i64) -> Result<QuasiPoly, Error> {
    let (p, q) = torus_normalize(p, q)?;
    if q <= 1 || p.abs() <= 1 {
        return Ok(QuasiPoly::polynomial(1, rat(0), ratio(1, 2), ratio(-1, 2)));
    }
    Ok(if p > 0 {
        QuasiPoly::new(
            1,
            vec![
                ResidueCoeffs::new(
                    ratio(p * q, 4),
                    rat(0),
                    ratio(-p * q - (p - 2) * (q - 2), 4),
                ),
                ResidueCoeffs::new(ratio(p * q, 4), rat(0), ratio(-p * q, 4)),
            ],
        )
    } else {
        let s = p * q - p + q; // 1 + (p+1)(q-1) <= 0 here
        QuasiPoly::polynomial(1, rat(0), ratio(s, 2), ratio(-s, 2))
    })
}

/// State-circle counts and adequacy flags of a diagram.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct StateGraphSummary {
    pub v_a: u32,
    pub v_b: u32,
    pub c: usize,
    pub c_plus: usize,
    pub c_minus: usize,
    pub is_a_adequate: bool,
    pub is_b_adequate: bool,
}

/// Resolve the diagram fully both ways and summarize the state graphs.
pub fn adequate_summary(pd: &PDCode) -> Result<StateGraphSummary, Error> {
    pd.validate()?;
    let a = pd.state_circles(Resolution::A);
    let b = pd.state_circles(Resolution::B);
    let (c_plus, c_minus) = pd.signed_crossing_counts();
    Ok(StateGraphSummary {
        v_a: a.circles,
        v_b: b.circles,
        c: c_plus + c_minus,
        c_plus,
        c_minus,
        is_a_adequate: !a.has_loop_edge,
        is_b_adequate: !b.has_loop_edge,
    })
}

/// Exact `d_+` model from a B-adequate diagram:
/// `d_+ = (c_+ n^2 + (v_B - c)n + c_- - v_B)/2` for all `n >= 1`.
pub fn adequate_dplus(s: &StateGraphSummary) -> Result<QuasiPoly, Error> {
    if !s.is_b_adequate {
        return Err(Error::Hypothesis(
            "diagram is not B-adequate: the degree bound is not an equality".into(),
        ));
    }
    Ok(QuasiPoly::polynomial(
        1,
        ratio(s.c_plus as i64, 2),
        ratio(s.v_b as i64 - s.c as i64, 2),
        ratio(s.c_minus as i64 - s.v_b as i64, 2),
    ))
}

/// Exact `d_-` model from an A-adequate diagram:
/// `d_- = (-c_- n^2 + (c - v_A)n + v_A - c_+)/2` for all `n >= 1`.
pub fn adequate_dminus(s: &StateGraphSummary) -> Result<QuasiPoly, Error> {
    if !s.is_a_adequate {
        return Err(Error::Hypothesis(
            "diagram is not A-adequate: the degree bound is not an equality".into(),
        ));
    }
    Ok(QuasiPoly::polynomial(
        1,
        ratio(-(s.c_minus as i64), 2),
        ratio(s.c as i64 - s.v_a as i64, 2),
        ratio(s.v_a as i64 - s.c_plus as i64, 2),
    ))
}

/// Both exact degree models of an adequate diagram.
pub fn adequate_degrees(s: &StateGraphSummary) -> Result<(QuasiPoly, QuasiPoly), Error> {
    Ok((adequate_dplus(s)?, adequate_dminus(s)?))
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum StateSide {
    A,
    B,
}

/// The state surface of an adequate diagram: a single boundary component,
/// Euler characteristic `v - c`, and boundary slope `-2c_-` (A side,
/// realizing the `js*` slope) or `2c_+` (B side, realizing the `js` slope).
pub fn adequate_surface(s: &StateGraphSummary, side: StateSide) -> Result<SurfaceData, Error> {
    match side {
        StateSide::B => {
            if !s.is_b_adequate {
                return Err(Error::Hypothesis("diagram is not B-adequate".into()));
            }
            Ok(SurfaceData::new(
                rat(2 * s.c_plus as i64),
                s.v_b as i64 - s.c as i64,
                1,
            ))
        }
        StateSide::A => {
            if !s.is_a_adequate {
                return Err(Error::Hypothesis("diagram is not A-adequate".into()));
            }
            Ok(SurfaceData::new(
                rat(-2 * (s.c_minus as i64)),
                s.v_a as i64 - s.c as i64,
                1,
            ))
        }
    }
}

/// Convert a model of `δ_K(n)` into one of `d_+[J_K(n)] = δ_K(n-1) + (n-1)/2`.
///
/// Residues shift by one and the linear term gains `1/2` (after the usual
/// argument-shift corrections to the quadratic).
pub fn delta_to_dplus(delta: &QuasiPoly) -> QuasiPoly {
    let period = delta.period() as i64;
    let mut coeffs = Vec::with_capacity(delta.period());
    for j in 0..period {
        let src = delta.coeffs_at(j - 1);
        let a = src.a.clone();
        let b = &src.b - rat(2) * &src.a + ratio(1, 2);
        let d = &src.a - &src.b + &src.d - ratio(1, 2);
        coeffs.push(ResidueCoeffs::new(a, b, d));
    }
    QuasiPoly::new(delta.valid_from() + 1, coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bracket::{colored_jones, BraidWord, Diagram, EvalBudget};
    use crate::cabling::{cable_jones, CableParams};
    use crate::quasipoly::slope_set;

    #[test]
    fn torus_jones_small_values() {
        // (2,3) at n = 2: frozen cross-check of the two displayed formulas.
        let j = torus_jones(2, 3, 2).unwrap();
        assert_eq!(
            j,
            QLaurent::from_terms([(2i64, 1i64), (6, 1), (10, 1), (18, -1)])
        );
        assert_eq!(j.degrees().unwrap(), (ratio(9, 2), ratio(1, 2)));
        for (p, q) in [(2, 3), (3, 4), (-5, 2)] {
            assert_eq!(torus_jones(p, q, 1).unwrap(), QLaurent::one());
        }
        assert_eq!(torus_jones(1, 5, 3).unwrap(), unknot_jones(3));
        assert!(torus_jones(4, 6, 2).is_err());
    }

    #[test]
    fn torus_jones_is_cable_of_unknot() {
        for (p, q) in [(2i64, 3i64), (3, 4), (-5, 2), (2, -3), (5, 3)] {
            let params = CableParams::new(p, q).unwrap();
            for n in 1..=6 {
                let via_cable = cable_jones(|m| Ok(unknot_jones(m)), params, n).unwrap();
                assert_eq!(
                    via_cable,
                    torus_jones(p, q, n).unwrap(),
                    "mismatch at ({p},{q}), n={n}"
                );
            }
        }
    }

    #[test]
    fn torus_degree_models() {
        let t23 = torus_degree(2, 3).unwrap();
        assert_eq!(t23.period(), 1);
        let c = &t23.residues()[0];
        assert_eq!(
            (c.a.clone(), c.b.clone(), c.d.clone()),
            (ratio(3, 2), rat(0), ratio(-3, 2))
        );

        let t34 = torus_degree(3, 4).unwrap();
        assert_eq!(t34.period(), 2);
        assert_eq!(t34.eval(2).unwrap(), ratio(17, 2));
        assert_eq!(t34.residues()[0].d, ratio(-7, 2));
        assert_eq!(t34.residues()[1].d, rat(-3));

        let neg = torus_degree(-5, 2).unwrap();
        let c = &neg.residues()[0];
        assert_eq!(
            (c.a.clone(), c.b.clone(), c.d.clone()),
            (rat(0), ratio(-3, 2), ratio(3, 2))
        );
        // d_+[J_{T(-5,2)}(3)] = (-3·3 + 3)/2 = -3.
        assert_eq!(neg.eval(3).unwrap(), rat(-3));

        // q < 0 normalizes through (p,q) -> (-p,-q).
        assert_eq!(torus_degree(5, -2).unwrap(), neg);

        let unknot = torus_degree(1, 7).unwrap();
        assert_eq!(unknot.jx_set(), slope_set(&[(1, 1)]));
    }

    #[test]
    fn torus_degrees_match_polynomials() {
        for (p, q) in [(2i64, 3i64), (3, 4), (2, 5), (-5, 2), (-7, 2)] {
            let model = torus_degree(p, q).unwrap();
            for n in 1..=12 {
                let j = torus_jones(p, q, n).unwrap();
                assert_eq!(
                    j.dplus().unwrap(),
                    model.eval(n).unwrap(),
                    "degree mismatch at ({p},{q}), n={n}"
                );
            }
        }
    }

    #[test]
    fn trefoil_state_summary() {
        let pd = BraidWord::parse("1 1 1").unwrap().to_pd();
        let s = adequate_summary(&pd).unwrap();
        assert_eq!(
            (s.c, s.c_plus, s.c_minus, s.v_a, s.v_b),
            (3, 3, 0, 2, 3)
        );
        assert!(s.is_a_adequate && s.is_b_adequate);
        // v_B = c: the torus-knot equality case, so b = 0 and the model
        // coincides with the torus formula 3(n^2-1)/2.
        let dplus = adequate_dplus(&s).unwrap();
        assert_eq!(dplus, torus_degree(2, 3).unwrap());
        // Cross-check against the bracket at n = 2, 3.
        for n in 2..=3 {
            let j = colored_jones(
                &Diagram::Pd(pd.clone()),
                n,
                &EvalBudget::default(),
            )
            .unwrap();
            assert_eq!(j.dplus().unwrap(), dplus.eval(n as i64).unwrap());
        }
    }

    #[test]
    fn figure8_is_adequate_with_slopes_pm4() {
        let pd = BraidWord::parse("1 -2 1 -2").unwrap().to_pd();
        let s = adequate_summary(&pd).unwrap();
        assert!(s.is_a_adequate && s.is_b_adequate);
        assert_eq!((s.c_plus, s.c_minus), (2, 2));
        let b_side = adequate_surface(&s, StateSide::B).unwrap();
        let a_side = adequate_surface(&s, StateSide::A).unwrap();
        assert_eq!(b_side.slope, rat(4));
        assert_eq!(a_side.slope, rat(-4));
        assert_eq!((b_side.boundary_count, a_side.boundary_count), (1, 1));
        // Both exact degree models agree with the bracket.
        let (dplus, dminus) = adequate_degrees(&s).unwrap();
        for n in 1..=3 {
            let j = colored_jones(&Diagram::Pd(pd.clone()), n, &EvalBudget::default()).unwrap();
            let (dmax, dmin) = j.degrees().unwrap();
            assert_eq!(dmax, dplus.eval(n as i64).unwrap());
            assert_eq!(dmin, dminus.eval(n as i64).unwrap());
        }
    }

    #[test]
    fn inadequate_side_is_rejected_and_bound_fails() {
        // A positive kink is not B-adequate; the would-be equality bound is
        // also genuinely violated there.
        let pd = BraidWord::parse("1").unwrap().to_pd();
        let s = adequate_summary(&pd).unwrap();
        assert!(!s.is_b_adequate);
        assert!(adequate_dplus(&s).is_err());
        assert!(adequate_surface(&s, StateSide::B).is_err());
        let bound_at_3 = ratio(s.c_plus as i64 * 9 + (s.v_b as i64 - s.c as i64) * 3, 2)
            + ratio(s.c_minus as i64 - s.v_b as i64, 2);
        let j = colored_jones(&Diagram::Pd(pd), 3, &EvalBudget::default()).unwrap();
        assert!(j.dplus().unwrap() < bound_at_3);
    }

    #[test]
    fn trefoil_b_surface() {
        let pd = BraidWord::parse("1 1 1").unwrap().to_pd();
        let s = adequate_summary(&pd).unwrap();
        let surf = adequate_surface(&s, StateSide::B).unwrap();
        assert_eq!(surf, SurfaceData::new(rat(6), 0, 1));
    }

    #[test]
    fn delta_shift_examples() {
        // δ ≡ 0 gives the unknot model (n-1)/2.
        let zero = QuasiPoly::polynomial(0, rat(0), rat(0), rat(0));
        let d = delta_to_dplus(&zero);
        assert_eq!(
            d,
            QuasiPoly::polynomial(1, rat(0), ratio(1, 2), ratio(-1, 2))
        );
        // δ(n) = 3n^2 + 11n/2 + ((-1)^n - 1)/4 shifts onto the period-two
        // model 3n^2 - (13 + (-1)^n)/4.
        let delta = QuasiPoly::new(
            0,
            vec![
                ResidueCoeffs::new(rat(3), ratio(11, 2), rat(0)),
                ResidueCoeffs::new(rat(3), ratio(11, 2), ratio(-1, 2)),
            ],
        );
        let d = delta_to_dplus(&delta);
        assert_eq!(d.residues()[0].d, ratio(-7, 2));
        assert_eq!(d.residues()[1].d, rat(-3));
        assert_eq!(d.eval(3).unwrap(), rat(24));
    }
}
