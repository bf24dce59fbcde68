//! Degree models of period three with constant leading coefficient: the
//! spread thresholds M1, M2 carve out the cable parameters where the
//! prediction machinery applies, and the predictions verify against the
//! exact sum on degree-faithful stand-ins.
//!
//! Run: cargo run --release --example quasi_constant_thresholds

use cabled_jones::cabling::{
    admissible_constant_a, cable_jones, m1_m2, predict_cable_degree, CableParams, DegreeData,
};
use cabled_jones::families::catalog;
use cabled_jones::laurent::{rat, rat_string, QLaurent};

fn main() -> Result<(), cabled_jones::Error> {
    for name in ["8_20", "9_43", "9_44"] {
        let entry = catalog(name)?;
        let model = entry.dplus_model.clone().expect("full model on record");
        let (m1, m2) = m1_m2(&model)?;
        let a = model.constant_a().unwrap().clone();
        println!(
            "{name}: a = {}, M1 = {}, M2 = {}",
            rat_string(&a),
            rat_string(&m1),
            rat_string(&m2)
        );
        println!(
            "  admissible iff p - {}q < 0 or p - {}q > max(0, {})",
            rat_string(&(rat(4) * &a - &m1)),
            rat_string(&(rat(4) * &a + &m1)),
            rat_string(&m2)
        );

        for (p, q) in [(1i64, 2i64), (5, 2), (23, 2), (7, 3)] {
            let params = CableParams::new(p, q)?;
            let ok = admissible_constant_a(&model, params)?;
            println!("  ({p},{q}): {}", if ok { "admissible" } else { "outside the region" });
            if !ok {
                continue;
            }
            // Verify the prediction against the cabling sum over monomials
            // carrying the exact base degrees.
            let pred = predict_cable_degree(DegreeData::full_range(&model), params, 12, 60)?;
            let from = pred.model.valid_from();
            for n in from..=(from + 12) {
                let j = cable_jones(
                    |color| {
                        let e = (model.eval(color)? * rat(4)).to_integer();
                        Ok(QLaurent::monomial(e.try_into().unwrap(), 1))
                    },
                    params,
                    n,
                )?;
                assert_eq!(j.dplus()?, pred.model.eval(n)?);
            }
            println!(
                "    prediction {} verified from n = {from}",
                pred.model
            );
        }
    }
    Ok(())
}
