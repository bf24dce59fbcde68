//! The knot-presentation mini-language shared by the CLI and examples.
//!
//! Grammar (iterated cables nest through the base field):
//!
//! ```text
//! unknot
//! torus:p,q
//! braid:1 1 1
//! pd:{"crossings":[{"arcs":[a,b,c,d],"sign":1}, ...]}
//! cable:<base>;p,q
//! fusion:m1,m2
//! catalog:<name>
//! ```
//!
//! Every presentation can resolve a `d_+` degree model; polynomial values
//! are available wherever an actual diagram or closed formula exists
//! (2-fusion knots and most catalog rows carry degree data only).

use std::collections::BTreeMap;

use crate::bracket::{colored_jones, pd_from_json, BraidWord, Diagram, EvalBudget, PDCode};
use crate::cabling::{
    admissible_constant_a, closed_form_period2, predict_cable_degree, CableParams, CablePrediction,
    DegreeData,
};
use crate::error::Error;
use crate::families::{catalog, torus_degree, torus_jones};
use crate::fusion::{dplus_model as fusion_dplus, FusionParams};
use crate::laurent::{rat, ratio, unknot_jones, QLaurent, Rat};
use crate::quasipoly::{self, QuasiPoly};

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum KnotPresentation {
    Unknot,
    Braid(BraidWord),
    Pd(PDCode),
    Torus { p: i64, q: i64 },
    Cable { base: Box<KnotPresentation>, p: i64, q: i64 },
    Fusion { m1: i64, m2: i64 },
    Catalog(String),
}

fn parse_pair(text: &str) -> Result<(i64, i64), Error> {
    let (a, b) = text
        .split_once(',')
        .ok_or_else(|| Error::Parse(format!("expected two integers, got {text:?}")))?;
    let a = a
        .trim()
        .parse()
        .map_err(|_| Error::Parse(format!("bad integer {a:?}")))?;
    let b = b
        .trim()
        .parse()
        .map_err(|_| Error::Parse(format!("bad integer {b:?}")))?;
    Ok((a, b))
}

/// Parse the mini-language. A bare name with no `kind:` prefix is tried
/// against the catalog, so `8_20` works as a shorthand for `catalog:8_20`.
pub fn parse(text: &str) -> Result<KnotPresentation, Error> {
    let text = text.trim();
    if text == "unknot" {
        return Ok(KnotPresentation::Unknot);
    }
    let Some((kind, rest)) = text.split_once(':') else {
        return if catalog(text).is_ok() {
            Ok(KnotPresentation::Catalog(text.to_string()))
        } else {
            Err(Error::Parse(format!("unrecognized presentation {text:?}")))
        };
    };
    match kind {
        "torus" => {
            let (p, q) = parse_pair(rest)?;
            Ok(KnotPresentation::Torus { p, q })
        }
        "braid" => Ok(KnotPresentation::Braid(BraidWord::parse(rest)?)),
        "pd" => {
            let value: serde_json::Value = serde_json::from_str(rest)
                .map_err(|e| Error::Parse(format!("bad PD JSON: {e}")))?;
            Ok(KnotPresentation::Pd(pd_from_json(&value)?))
        }
        "cable" => {
            // Nested bases may themselves contain ';' — split at the last.
            let (base, pq) = rest
                .rsplit_once(';')
                .ok_or_else(|| Error::Parse("cable needs <base>;p,q".into()))?;
            let (p, q) = parse_pair(pq)?;
            Ok(KnotPresentation::Cable {
                base: Box::new(parse(base)?),
                p,
                q,
            })
        }
        "fusion" => {
            let (m1, m2) = parse_pair(rest)?;
            FusionParams::new(m1, m2)?;
            Ok(KnotPresentation::Fusion { m1, m2 })
        }
        "catalog" => {
            catalog(rest)?;
            Ok(KnotPresentation::Catalog(rest.to_string()))
        }
        _ => Err(Error::Parse(format!("unrecognized presentation kind {kind:?}"))),
    }
}

impl KnotPresentation {
    pub fn describe(&self) -> String {
        match self {
            KnotPresentation::Unknot => "unknot".into(),
            KnotPresentation::Braid(w) => format!(
                "braid:{}",
                w.letters()
                    .iter()
                    .map(|l| l.to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            ),
            KnotPresentation::Pd(pd) => format!("pd({} crossings)", pd.crossing_count()),
            KnotPresentation::Torus { p, q } => format!("torus:{p},{q}"),
            KnotPresentation::Cable { base, p, q } => {
                format!("cable:{};{p},{q}", base.describe())
            }
            KnotPresentation::Fusion { m1, m2 } => format!("fusion:{m1},{m2}"),
            KnotPresentation::Catalog(name) => format!("catalog:{name}"),
        }
    }

    /// Exact colored Jones polynomial, where a diagram or closed formula is
    /// available. The unknot base of a cable is routed through the torus
    /// formula; nested cables recurse through the cabling sum.
    pub fn jones(&self, n: i64, budget: &EvalBudget) -> Result<QLaurent, Error> {
        match self {
            KnotPresentation::Unknot => {
                if n < 1 {
                    return Err(Error::Parameter("color n must be >= 1".into()));
                }
                Ok(unknot_jones(n))
            }
            KnotPresentation::Braid(w) => {
                let n = u32::try_from(n)
                    .map_err(|_| Error::Parameter("color out of range".into()))?;
                colored_jones(&Diagram::Braid(w.clone()), n, budget)
            }
            KnotPresentation::Pd(pd) => {
                let n = u32::try_from(n)
                    .map_err(|_| Error::Parameter("color out of range".into()))?;
                colored_jones(&Diagram::Pd(pd.clone()), n, budget)
            }
            KnotPresentation::Torus { p, q } => torus_jones(*p, *q, n),
            KnotPresentation::Cable { base, p, q } => {
                let params = CableParams::new(*p, *q)?;
                cable_jones_of(base, params, n, budget)
            }
            KnotPresentation::Fusion { .. } => Err(Error::Domain(
                "2-fusion knots carry degree data only; no diagram presentation".into(),
            )),
            KnotPresentation::Catalog(name) => {
                let e = catalog(name)?;
                if name == "8_19" {
                    // The (3,4)-torus knot has a closed polynomial formula.
                    return torus_jones(3, 4, n);
                }
                if let Some(word) = &e.braid_word {
                    let letters: Vec<i32> = word.clone();
                    let strands =
                        letters.iter().map(|l| l.unsigned_abs() as usize).max().unwrap() + 1;
                    let w = BraidWord::new(strands, letters)?;
                    let n = u32::try_from(n)
                        .map_err(|_| Error::Parameter("color out of range".into()))?;
                    return colored_jones(&Diagram::Braid(w), n, budget);
                }
                Err(Error::Domain(format!(
                    "catalog:{} carries degree data only; no polynomial presentation",
                    e.name
                )))
            }
        }
    }

    /// The `d_+` degree model of this presentation, where known in closed
    /// form. Braid and PD presentations need bracket evaluation instead;
    /// see [`KnotPresentation::fitted_model`]. The budget covers any exact
    /// small-color evaluations an iterated cable prediction needs.
    pub fn dplus_model(&self, pi_max: usize, budget: &EvalBudget) -> Result<QuasiPoly, Error> {
        match self {
            KnotPresentation::Unknot => {
                Ok(QuasiPoly::polynomial(1, rat(0), ratio(1, 2), ratio(-1, 2)))
            }
            KnotPresentation::Torus { p, q } => torus_degree(*p, *q),
            KnotPresentation::Fusion { m1, m2 } => fusion_dplus(FusionParams::new(*m1, *m2)?),
            KnotPresentation::Catalog(name) => catalog(name)?.dplus_model.ok_or_else(|| {
                Error::Domain(format!("catalog:{name} has no full degree model on record"))
            }),
            KnotPresentation::Cable { base, p, q } => Ok(predict_for_base_with(
                base,
                CableParams::new(*p, *q)?,
                pi_max,
                budget,
            )?
            .model),
            KnotPresentation::Braid(_) | KnotPresentation::Pd(_) => Err(Error::Domain(
                "diagram presentations need bracket evaluation; use fitted_model".into(),
            )),
        }
    }

    /// Fit a degree model from bracket-computed polynomials at colors
    /// `1..=n_max`.
    pub fn fitted_model(
        &self,
        n_max: i64,
        pi_max: usize,
        budget: &EvalBudget,
    ) -> Result<QuasiPoly, Error> {
        let mut samples: BTreeMap<i64, Rat> = BTreeMap::new();
        for n in 1..=n_max {
            samples.insert(n, self.jones(n, budget)?.dplus()?);
        }
        quasipoly::fit(&samples, pi_max)
    }
}

/// `J` of the cable through the cabling sum, resolving the base recursively.
fn cable_jones_of(
    base: &KnotPresentation,
    params: CableParams,
    n: i64,
    budget: &EvalBudget,
) -> Result<QLaurent, Error> {
    crate::cabling::cable_jones(|m| base.jones(m, budget), params, n)
}

/// [`predict_for_base_with`] under the environment's default budget.
pub fn predict_for_base(
    base: &KnotPresentation,
    params: CableParams,
    pi_max: usize,
) -> Result<CablePrediction, Error> {
    predict_for_base_with(base, params, pi_max, &EvalBudget::from_env())
}

/// Degree prediction for a cable over any base with a known model.
///
/// The unknot routes to the torus formula (its `b = 1/2 > 0` puts it
/// outside the maximization hypotheses); period-two bases take the closed
/// form; longer periods with constant leading coefficient go through the
/// admissibility thresholds and term maximization. Colors below the base
/// model's validity are looked up exactly: color 1 is always 0, the rest
/// come from the base's polynomials when it has a computable presentation.
pub fn predict_for_base_with(
    base: &KnotPresentation,
    params: CableParams,
    pi_max: usize,
    budget: &EvalBudget,
) -> Result<CablePrediction, Error> {
    if let KnotPresentation::Unknot = base {
        let (p, q) = params.normalized();
        let model = torus_degree(p, q)?;
        let tags = model
            .residues()
            .iter()
            .map(|c| crate::cabling::CaseTag {
                branch: if c.a == ratio(p * q, 4) {
                    crate::cabling::BranchKind::AnnulusSlope
                } else {
                    crate::cabling::BranchKind::InheritedSlope
                },
                detail: "torus formula (unknot base)".into(),
            })
            .collect();
        return Ok(CablePrediction {
            model,
            case_tags: tags,
            maximizer_trace: Vec::new(),
        });
    }
    let base_model = base.dplus_model(pi_max, budget)?;
    // Exact degrees below the model's validity: J(1) = 1 for every knot,
    // and the base's own polynomials cover the rest when computable.
    let mut small_colors: BTreeMap<i64, Rat> = BTreeMap::new();
    small_colors.insert(1, rat(0));
    for color in 2..base_model.valid_from() {
        let j = base.jones(color, budget)?;
        small_colors.insert(color, j.dplus()?);
    }
    let data = DegreeData::new(&base_model, &small_colors);

    let sample_up_to = (6 * pi_max as i64 + 14).max(30);
    if base_model.period() <= 2 {
        let cf = closed_form_period2(&base_model, params)?;
        // Cross-check the closed form against the maximization route.
        let pred = predict_cable_degree(data, params, pi_max, sample_up_to)?;
        let from = cf.model.valid_from().max(pred.model.valid_from());
        for n in from..=from + 2 * num_integer::lcm(cf.model.period(), pred.model.period()) as i64 {
            if cf.model.eval(n)? != pred.model.eval(n)? {
                return Err(Error::Domain(format!(
                    "closed form and maximization disagree at n = {n}"
                )));
            }
        }
        return Ok(cf);
    }
    if base_model.constant_a().is_some() && !admissible_constant_a(&base_model, params)? {
        let (m1, m2) = crate::cabling::m1_m2(&base_model)?;
        return Err(Error::Hypothesis(format!(
            "({}, {}) is outside the admissible region (M1 = {}, M2 = {})",
            params.raw().0,
            params.raw().1,
            crate::laurent::rat_string(&m1),
            crate::laurent::rat_string(&m2),
        )));
    }
    predict_cable_degree(data, params, pi_max, sample_up_to)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_roundtrip() {
        for text in [
            "unknot",
            "torus:2,3",
            "torus:-5,2",
            "braid:1 1 1",
            "fusion:2,1",
            "catalog:8_19",
            "cable:torus:2,3;11,2",
            "cable:cable:torus:2,3;11,2;47,2",
            "catalog:pretzel(-2,3,7)",
        ] {
            let p = parse(text).unwrap();
            assert_eq!(parse(&p.describe()).unwrap(), p, "{text}");
        }
        assert!(parse("torus:2;3").is_err());
        assert!(parse("fusion:2,0").is_err());
        assert!(parse("catalog:nope").is_err());
        assert!(parse("mystery:1").is_err());
        // Bare catalog names are accepted as shorthand.
        assert_eq!(
            parse("8_20").unwrap(),
            KnotPresentation::Catalog("8_20".into())
        );
        assert!(parse("10_139").is_err());
    }

    #[test]
    fn jones_routing() {
        let budget = EvalBudget::default();
        // Braid and torus routes agree on the trefoil.
        let braid = parse("braid:1 1 1").unwrap();
        let torus = parse("torus:2,3").unwrap();
        for n in 1..=4 {
            assert_eq!(
                braid.jones(n, &budget).unwrap(),
                torus.jones(n, &budget).unwrap()
            );
        }
        // A cable of the unknot is the torus knot.
        let cable = parse("cable:unknot;2,3").unwrap();
        for n in 1..=5 {
            assert_eq!(
                cable.jones(n, &budget).unwrap(),
                torus.jones(n, &budget).unwrap()
            );
        }
        // Fusion knots have no polynomial presentation.
        assert!(parse("fusion:2,1").unwrap().jones(2, &budget).is_err());
    }

    #[test]
    fn iterated_cable_degrees_match_prediction() {
        let budget = EvalBudget::default();
        let inner = parse("cable:torus:2,3;11,2").unwrap();
        let outer = parse("cable:cable:torus:2,3;11,2;47,2").unwrap();
        let inner_pred = inner.dplus_model(4, &budget).unwrap();
        let outer_pred = outer.dplus_model(4, &budget).unwrap();
        for n in inner_pred.valid_from()..=5 {
            assert_eq!(
                inner.jones(n, &budget).unwrap().dplus().unwrap(),
                inner_pred.eval(n).unwrap()
            );
        }
        // The outer polynomial is heavy; check the model is the closed-form
        // iterate instead.
        let first = closed_form_period2(
            &torus_degree(2, 3).unwrap(),
            CableParams::new(11, 2).unwrap(),
        )
        .unwrap();
        let second =
            closed_form_period2(&first.model, CableParams::new(47, 2).unwrap()).unwrap();
        assert_eq!(outer_pred.residues(), second.model.residues());
    }

    #[test]
    fn fitted_model_from_sampled_polynomials() {
        // The torus route keeps the sampling cheap; a braid presentation
        // goes through the same code path via the bracket.
        let budget = EvalBudget::default();
        let torus = parse("torus:2,3").unwrap();
        let fitted = torus.fitted_model(8, 2, &budget).unwrap();
        assert_eq!(fitted, torus_degree(2, 3).unwrap());
        // Degree samples from the bracket agree with the same model at the
        // colors the strand budget allows.
        let braid = parse("braid:1 1 1").unwrap();
        for n in 1..=4 {
            assert_eq!(
                braid.jones(n, &budget).unwrap().dplus().unwrap(),
                fitted.eval(n).unwrap()
            );
        }
    }

    #[test]
    fn predict_for_unknot_base_uses_torus_formula() {
        let pred = predict_for_base(
            &KnotPresentation::Unknot,
            CableParams::new(2, 3).unwrap(),
            4,
        )
        .unwrap();
        assert_eq!(pred.model, torus_degree(2, 3).unwrap());
    }

    #[test]
    fn predict_rejects_inadmissible_quasi_constant() {
        let base = parse("catalog:8_20").unwrap();
        // (1,2) is admissible, (5,2) is in the gap.
        assert!(predict_for_base(&base, CableParams::new(1, 2).unwrap(), 12).is_ok());
        assert!(matches!(
            predict_for_base(&base, CableParams::new(5, 2).unwrap(), 12),
            Err(Error::Hypothesis(_))
        ));
    }
}
