//! Acceptance suite: one test per criterion, each printing a verdict line.
//!
//! Everything here is exact arithmetic; the stated time bounds are asserted
//! as hard limits. Run with `cargo test --release --test acceptance` (the
//! suite also passes unoptimized, just more slowly).

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};
use std::time::Instant;

use rayon::prelude::*;

use cabled_jones::bracket::{colored_jones, BraidWord, Diagram, EvalBudget};
use cabled_jones::cabling::{
    cable_jones, cable_surface, closed_form_period2, m1_m2, predict_cable_degree, CableParams,
    DegreeData, SurfaceData,
};
use cabled_jones::checker::{catalog_report, check_slope, check_strong_slope, BsCompleteness, CheckStatus};
use cabled_jones::families::{catalog, catalog_names, torus_degree, torus_jones};
use cabled_jones::fusion::{
    b_coefficient, b_zero_classification, delta, delta_bruteforce, delta_point, dplus_model,
    FusionParams,
};
use cabled_jones::laurent::{rat, ratio, QLaurent, Rat};
use cabled_jones::quasipoly::{fit, QuasiPoly, ResidueCoeffs, Slope};

fn pass(criterion: &str, started: Instant) {
    println!(
        "acceptance {criterion}: PASS ({:.2}s)",
        started.elapsed().as_secs_f64()
    );
}

/// Colored Jones polynomials must match the torus formulas exactly:
/// σ1^3 against T(2,3) for n = 1..4 and σ1^5 against T(2,5) for n = 1..3.
#[test]
fn criterion_1_bracket_ground_truth() {
    let started = Instant::now();
    let budget = EvalBudget::default();

    let trefoil = BraidWord::parse("1 1 1").unwrap();
    for n in 1..=4i64 {
        let via_bracket =
            colored_jones(&Diagram::Braid(trefoil.clone()), n as u32, &budget).unwrap();
        assert_eq!(via_bracket, torus_jones(2, 3, n).unwrap(), "T(2,3), n={n}");
    }
    let cinq = BraidWord::parse("1 1 1 1 1").unwrap();
    for n in 1..=3i64 {
        let via_bracket = colored_jones(&Diagram::Braid(cinq.clone()), n as u32, &budget).unwrap();
        assert_eq!(via_bracket, torus_jones(2, 5, n).unwrap(), "T(2,5), n={n}");
        // Independent backend: the state sum over the cabled planar diagram.
        let via_pd = colored_jones(&Diagram::Pd(cinq.to_pd()), n as u32, &budget).unwrap();
        assert_eq!(via_pd, torus_jones(2, 5, n).unwrap(), "T(2,5) PD, n={n}");
    }
    assert!(started.elapsed().as_secs() < 60, "over the 60 s bound");
    pass("1 (bracket ground truth)", started);
}

/// Torus degree models agree with the summed polynomials for n <= 30.
#[test]
fn criterion_2_torus_degrees() {
    let started = Instant::now();
    for (p, q) in [(2i64, 3i64), (2, 5), (2, 7), (3, 4), (3, 5), (-5, 2), (-7, 2)] {
        let model = torus_degree(p, q).unwrap();
        for n in 1..=30 {
            let j = torus_jones(p, q, n).unwrap();
            assert_eq!(
                j.dplus().unwrap(),
                model.eval(n).unwrap(),
                "T({p},{q}) at n = {n}"
            );
        }
    }
    assert!(started.elapsed().as_secs() < 60, "over the 60 s bound");
    pass("2 (torus degrees)", started);
}

/// A cabling test base: a degree model plus a way to produce polynomials
/// with exactly those degrees (the torus formulas where available, monomial
/// stand-ins otherwise).
struct TestBase {
    name: &'static str,
    model: QuasiPoly,
    torus: Option<(i64, i64)>,
}

impl TestBase {
    fn jones(&self, color: i64) -> Result<QLaurent, cabled_jones::Error> {
        match self.torus {
            Some((p, q)) => torus_jones(p, q, color),
            // Monomial stand-in carrying the exact model degree: the
            // three-way agreement then exercises the summation lattice,
            // the exponent arithmetic, and tie detection; full polynomials
            // for these knots are out of computational reach at color ~75.
            None => {
                let e = (self.model.eval(color)? * rat(4)).to_integer();
                Ok(QLaurent::monomial(e.try_into().unwrap(), 1))
            }
        }
    }
}

fn cabling_bases() -> Vec<TestBase> {
    // 8_21 and 9_49 carry published slopes and linear terms (a, b); 8_21's
    // remaining constants are the derived catalog values, while 9_49's even
    // constant is a fixed representative (d_odd is pinned by d+[J(1)] = 0).
    let entry_8_21 = catalog("8_21").unwrap();
    vec![
        TestBase {
            name: "T(2,3)",
            model: torus_degree(2, 3).unwrap(),
            torus: Some((2, 3)),
        },
        TestBase {
            name: "T(3,4)",
            model: torus_degree(3, 4).unwrap(),
            torus: Some((3, 4)),
        },
        TestBase {
            name: "8_19",
            model: catalog("8_19").unwrap().dplus_model.unwrap(),
            torus: Some((3, 4)),
        },
        TestBase {
            name: "8_21",
            model: entry_8_21.dplus_model.unwrap(),
            torus: None,
        },
        TestBase {
            name: "9_49",
            model: QuasiPoly::new(
                1,
                vec![
                    ResidueCoeffs::new(ratio(15, 4), ratio(-3, 2), ratio(-11, 4)),
                    ResidueCoeffs::new(ratio(15, 4), ratio(-3, 2), ratio(-9, 4)),
                ],
            ),
            torus: None,
        },
    ]
}

fn pq_grid(js: &cabled_jones::SlopeSet) -> Vec<CableParams> {
    let mut out = Vec::new();
    for q in [2i64, 3, -2] {
        for p in -15..=15i64 {
            let Ok(params) = CableParams::new(p, q) else {
                continue;
            };
            let slope = ratio_of(p, q);
            if js.contains(&Slope::Finite(slope)) {
                continue;
            }
            out.push(params);
        }
    }
    out
}

fn ratio_of(p: i64, q: i64) -> Rat {
    rat(p) / rat(q)
}

/// Three-way agreement of sum degrees, maximization, and closed forms over
/// the (p,q) grid for the period-<=2 base models.
#[test]
fn criterion_3_cabling_three_way() {
    let started = Instant::now();
    for base in cabling_bases() {
        let grid = pq_grid(&base.model.jones_slopes());
        assert!(grid.len() > 40, "grid unexpectedly small");
        grid.par_iter().for_each(|&params| {
            let cache: RefCell<HashMap<i64, QLaurent>> = RefCell::new(HashMap::new());
            let data = DegreeData::full_range(&base.model);
            let pred = predict_cable_degree(data, params, 4, 60)
                .unwrap_or_else(|e| panic!("{} {:?}: {e}", base.name, params.raw()));
            let cf = closed_form_period2(&base.model, params)
                .unwrap_or_else(|e| panic!("{} {:?}: {e}", base.name, params.raw()));
            let from = pred.model.valid_from().max(cf.model.valid_from());
            assert!(from <= 12, "{} {:?}: validity starts at {from}", base.name, params.raw());
            for n in from..=25 {
                let sum = cable_jones(
                    |color| {
                        if let Some(j) = cache.borrow().get(&color) {
                            return Ok(j.clone());
                        }
                        let j = base.jones(color)?;
                        cache.borrow_mut().insert(color, j.clone());
                        Ok(j)
                    },
                    params,
                    n,
                )
                .unwrap();
                let got = sum.dplus().unwrap();
                let label = || format!("{} {:?} n={n}", base.name, params.raw());
                assert_eq!(got, pred.model.eval(n).unwrap(), "sum vs predict: {}", label());
                assert_eq!(got, cf.model.eval(n).unwrap(), "sum vs closed form: {}", label());
            }
        });
    }
    assert!(started.elapsed().as_secs() < 600, "over the 10 min bound");
    pass("3 (cabling three-way agreement)", started);
}

/// The period-three knots: thresholds M1/M2 reproduce the published
/// admissibility regions exactly, and admissible parameters pass the
/// brute-force degree agreement.
#[test]
fn criterion_4_quasi_constant_thresholds() {
    let started = Instant::now();
    // (name, 4a - M1, 4a + M1, max(0, M2)) of the admissibility test
    // "p - (4a - M1)q < 0  or  p - (4a + M1)q > max(0, M2)".
    let regions = [
        ("8_20", ratio(7, 3), rat(3), rat(0)),
        ("9_43", ratio(31, 3), rat(11), ratio(2, 3)),
        ("9_44", ratio(13, 3), rat(5), rat(0)),
    ];
    for (name, lo, hi, rhs) in regions {
        let model = catalog(name).unwrap().dplus_model.unwrap();
        let a = model.constant_a().unwrap().clone();
        let (m1v, m2v) = m1_m2(&model).unwrap();
        assert_eq!(rat(4) * &a - &m1v, lo, "{name}: 4a - M1");
        assert_eq!(rat(4) * &a + &m1v, hi, "{name}: 4a + M1");
        assert_eq!(m2v.clone().max(rat(0)), rhs, "{name}: max(0, M2)");

        let admissible: Vec<CableParams> = pq_grid(&model.jones_slopes())
            .into_iter()
            .filter(|&params| {
                let ok = cabled_jones::cabling::admissible_constant_a(&model, params).unwrap();
                // The library predicate must be the published inequality.
                let (p, q) = params.normalized();
                let direct = rat(p) - &lo * rat(q) < rat(0)
                    || rat(p) - &hi * rat(q) > rhs.clone();
                assert_eq!(ok, direct, "{name} {:?}", params.raw());
                ok
            })
            .collect();
        assert!(admissible.len() > 20, "{name}: region unexpectedly small");

        admissible.par_iter().for_each(|&params| {
            let data = DegreeData::full_range(&model);
            let pred = predict_cable_degree(data, params, 12, 90)
                .unwrap_or_else(|e| panic!("{name} {:?}: {e}", params.raw()));
            let from = pred.model.valid_from();
            assert!(from <= 15, "{name} {:?}: validity starts at {from}", params.raw());
            for n in from..=25 {
                let sum = cable_jones(
                    |color| {
                        let e = (model.eval(color)? * rat(4)).to_integer();
                        Ok(QLaurent::monomial(e.try_into().unwrap(), 1))
                    },
                    params,
                    n,
                )
                .unwrap();
                assert_eq!(
                    sum.dplus().unwrap(),
                    pred.model.eval(n).unwrap(),
                    "{name} {:?} n={n}",
                    params.raw()
                );
            }
        });
    }
    pass("4 (quasi-constant thresholds)", started);
}

/// Catalog conformance: no slope or strong-slope check fails on any
/// catalog row, the surface-backed rows pass outright, and the pretzel
/// ratio test holds for p = 7, 9, 11.
#[test]
fn criterion_5_catalog_conformance() {
    let started = Instant::now();
    for name in catalog_names() {
        let e = catalog(name).unwrap();
        let report = catalog_report(&e);
        assert!(report.passed(), "{name}: {:?}", report.checks);
        let slope_check = check_slope(&e.js, &e.js_star, &e.bs_known, BsCompleteness::Partial);
        assert_eq!(slope_check.status, CheckStatus::Pass, "{name} slope check");
        if !e.surfaces.is_empty() {
            let strong = check_strong_slope(&e.js, &e.jx, &e.surfaces);
            assert_eq!(strong.status, CheckStatus::Pass, "{name}: {}", strong.details);
        }
    }
    for p in [7i64, 9, 11] {
        let e = catalog(&format!("pretzel(-2,3,{p})")).unwrap();
        let strong = check_strong_slope(&e.js, &e.jx, &e.surfaces);
        assert_eq!(strong.status, CheckStatus::Pass, "pretzel {p}: {}", strong.details);
        // χ/(|∂S|·b) = -(p-5)/(p-3) = 2b(n), spelled out.
        let slope = &e.surfaces[0].slope;
        let b = Rat::from_integer(slope.denom().clone());
        let got = rat(e.surfaces[0].euler) / (rat(e.surfaces[0].boundary_count as i64) * b);
        assert_eq!(got, ratio(-(p - 5), p - 3));
    }
    pass("5 (catalog conformance)", started);
}

/// Fusion knots over the grid [-4,4]^2 (minus the torus parameters):
/// case formulas equal the lattice oracle for n <= 40 (with the C-2
/// half-integer correction where it applies), fitted linear terms equal the
/// closed-form branches, and the zero classification is exact.
#[test]
fn criterion_6_fusion_grid() {
    let started = Instant::now();
    let grid: Vec<(i64, i64)> = (-4..=4)
        .flat_map(|m1| (-4..=4).map(move |m2| (m1, m2)))
        .filter(|&(_, m2)| m2 != -1 && m2 != 0)
        .collect();

    grid.par_iter().for_each(|&(m1, m2)| {
        let fp = FusionParams::new(m1, m2).unwrap();
        for n in 0..=40 {
            let d = delta(fp, n).unwrap();
            let (max, _) = delta_bruteforce(fp, n).unwrap();
            let (_, correction) = delta_point(fp, n).unwrap();
            match correction {
                // Exempted subcase: c3 half-integral, with the documented
                // correction relating the degree to the lattice maximum.
                Some(c) => assert_eq!(d, &max - &c, "K({m1},{m2}) n={n} (corrected)"),
                None => assert_eq!(d, max, "K({m1},{m2}) n={n}"),
            }
        }

        // Model assembly and fit recovery from the shifted delta sequence.
        let model = dplus_model(fp).unwrap();
        let samples: BTreeMap<i64, Rat> = (1..=110)
            .map(|n| (n, delta(fp, n - 1).unwrap() + ratio(n - 1, 2)))
            .collect();
        let fitted = fit(&samples, 12).unwrap();
        assert_eq!(
            fitted.residues(),
            model.residues(),
            "K({m1},{m2}): fit disagrees with the assembled model"
        );
        assert_eq!(fitted.period(), model.period());

        // Linear terms: fitted b equals the closed-form branch value at a
        // matching argument, b <= 0 everywhere, zero exactly on the
        // classified set.
        let period = model.period() as i64;
        let probe = 120 - 120 % period;
        let mut any_zero = false;
        for r in 0..period {
            let n = probe + r + period;
            let b_closed = b_coefficient(fp, n).unwrap();
            let b_fit = model.coeffs_at(n).b.clone();
            assert_eq!(b_fit, b_closed, "K({m1},{m2}) residue {r}");
            assert!(b_closed <= rat(0), "K({m1},{m2}): positive b");
            any_zero |= b_closed == rat(0);
        }
        assert_eq!(
            any_zero,
            b_zero_classification(fp),
            "K({m1},{m2}): zero classification"
        );
    });
    assert!(started.elapsed().as_secs() < 300, "over the 5 min bound");
    pass("6 (fusion grid oracle)", started);
}

/// The pretzel bridge: fusion models of K(m,1) reproduce the (-2,3,2m+3)
/// pretzel slope data exactly for m = 2..5.
#[test]
fn criterion_7_pretzel_bridge() {
    let started = Instant::now();
    for m in 2..=5i64 {
        let p = 2 * m + 3;
        let model = dplus_model(FusionParams::new(m, 1).unwrap()).unwrap();
        let four_a = rat(4) * model.constant_a().expect("constant leading term");
        let b = model.residues()[0].b.clone();
        assert!(model.residues().iter().all(|c| c.b == b), "b varies for K({m},1)");
        assert_eq!(four_a, rat(10 + 4 * m) + ratio(1, m), "4a at m = {m}");
        assert_eq!(rat(2) * &b, ratio(1, m) - rat(1), "2b at m = {m}");
        // Same numbers as the pretzel catalog's 2(p^2-p-5)/(p-3) data.
        assert_eq!(four_a, ratio(2 * (p * p - p - 5), p - 3));
        let e = catalog(&format!("pretzel(-2,3,{p})")).unwrap();
        assert!(e.js.contains(&Slope::Finite(four_a)));
        assert!(e.jx.contains(&Slope::Finite(rat(2) * &b)));
    }
    pass("7 (pretzel bridge)", started);
}

/// Surface transforms: the trefoil's (11,2)-cable surface is (24, -1, 1)
/// with χ = 2B, and iterating (11,2) then (47,2) composes consistently.
#[test]
fn criterion_8_surface_transforms() {
    let started = Instant::now();
    let trefoil = torus_degree(2, 3).unwrap();
    let state_surface = SurfaceData::new(rat(6), 0, 1);

    let p1 = CableParams::new(11, 2).unwrap();
    let first = closed_form_period2(&trefoil, p1).unwrap();
    let s1 = cable_surface(&state_surface, p1).unwrap();
    assert_eq!(s1, SurfaceData::new(rat(24), -1, 1));
    let b1 = &first.model.residues()[0].b;
    assert_eq!(rat(s1.euler), rat(2) * b1, "χ = 2B at the first cable");
    // 2B = 2|q|b + (1-|q|)|4aq - p| with (a, b) = (3/2, 0) and q = 2:
    // the first summand vanishes and |4aq - p| = |12 - 11| = 1.
    assert_eq!(rat(2) * b1, rat(1 - 2) * rat((4 * 3 - 11i64).abs()));

    let p2 = CableParams::new(47, 2).unwrap();
    let second = closed_form_period2(&first.model, p2).unwrap();
    let s2 = cable_surface(&s1, p2).unwrap();
    // χ recomputed two ways: through the surface transform, and through
    // the iterated closed form's linear term.
    assert_eq!(rat(s2.euler), rat(2) * &second.model.residues()[0].b);
    assert_eq!(s2.slope, rat(96));
    assert_eq!(s2.boundary_count, 1);
    // The direct bookkeeping on the second stage: χ' = |q|χ + |∂S|(1-|q|)|p-aq|
    // with |∂S| = 1 and q = 2.
    assert_eq!(s2.euler, 2 * s1.euler + (1 - 2) * (47 - 24 * 2i64).abs());
    pass("8 (surface transforms)", started);
}
