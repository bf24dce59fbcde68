//! Predict the degree of a cable's colored Jones polynomial three ways:
//! the exact cabling sum, term-by-term maximization, and the period-two
//! closed form — then push a state surface through the cable and watch the
//! Euler characteristic track twice the linear term.
//!
//! Run: cargo run --release --example cable_prediction

use cabled_jones::cabling::{
    cable_jones, cable_surface, closed_form_period2, predict_cable_degree, CableParams,
    DegreeData, SurfaceData,
};
use cabled_jones::families::{torus_degree, torus_jones};
use cabled_jones::laurent::{rat, rat_string};

fn main() -> Result<(), cabled_jones::Error> {
    let trefoil = torus_degree(2, 3)?;

    for (p, q) in [(11i64, 2i64), (13, 2)] {
        let params = CableParams::new(p, q)?;
        println!("({p},{q})-cable of the trefoil:");

        let data = DegreeData::full_range(&trefoil);
        let predicted = predict_cable_degree(data, params, 4, 30)?;
        let closed = closed_form_period2(&trefoil, params)?;
        println!("  maximization: {}", predicted.model);
        println!("  closed form:  {}", closed.model);
        for tag in &closed.case_tags {
            println!("  branch: {:?} ({})", tag.branch, tag.detail);
        }

        let from = predicted.model.valid_from().max(closed.model.valid_from());
        for n in from..=12 {
            let j = cable_jones(|m| torus_jones(2, 3, m), params, n)?;
            let d = j.dplus()?;
            assert_eq!(d, predicted.model.eval(n)?);
            assert_eq!(d, closed.model.eval(n)?);
        }
        println!("  exact sum degrees agree on {from}..=12");

        let margin = predicted
            .maximizer_trace
            .iter()
            .filter(|s| s.n >= from)
            .filter_map(|s| s.margin.clone())
            .min();
        if let Some(m) = margin {
            println!("  smallest maximizer margin: {}", rat_string(&m));
        }
    }

    // Surface bookkeeping for the (11,2)-cable and an iterated (47,2) on
    // top of it: χ of the transformed surface equals 2B at every stage.
    let b_surface = SurfaceData::new(rat(6), 0, 1); // trefoil state surface
    let first = closed_form_period2(&trefoil, CableParams::new(11, 2)?)?;
    let s1 = cable_surface(&b_surface, CableParams::new(11, 2)?)?;
    println!(
        "\n(11,2)-cable surface: slope {}, χ = {}, |∂S| = {} (2B = {})",
        rat_string(&s1.slope),
        s1.euler,
        s1.boundary_count,
        rat_string(&(rat(2) * &first.model.residues()[0].b)),
    );

    let second = closed_form_period2(&first.model, CableParams::new(47, 2)?)?;
    let s2 = cable_surface(&s1, CableParams::new(47, 2)?)?;
    println!(
        "then (47,2): slope {}, χ = {}, |∂S| = {} (2B = {})",
        rat_string(&s2.slope),
        s2.euler,
        s2.boundary_count,
        rat_string(&(rat(2) * &second.model.residues()[0].b)),
    );
    assert_eq!(rat(s2.euler), rat(2) * &second.model.residues()[0].b);
    Ok(())
}
