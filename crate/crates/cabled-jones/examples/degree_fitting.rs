//! Fit a quadratic quasi-polynomial to a sequence of exact degrees, and
//! extract Jones slopes and linear-term cluster sets from the model.
//!
//! Run: cargo run --release --example degree_fitting

use std::collections::BTreeMap;

use cabled_jones::bracket::{colored_jones, BraidWord, Diagram, EvalBudget};
use cabled_jones::families::torus_degree;
use cabled_jones::laurent::Rat;
use cabled_jones::quasipoly::fit;

fn main() -> Result<(), cabled_jones::Error> {
    let budget = EvalBudget::default();

    // Degrees of the right trefoil's colored Jones polynomials, computed
    // from the bracket (a 2-braid stays inside the strand budget to n = 6).
    let trefoil = BraidWord::parse("1 1 1")?;
    let mut dplus: BTreeMap<i64, Rat> = BTreeMap::new();
    let mut dminus: BTreeMap<i64, Rat> = BTreeMap::new();
    for n in 1..=6 {
        let j = colored_jones(&Diagram::Braid(trefoil.clone()), n as u32, &budget)?;
        let (hi, lo) = j.degrees()?;
        dplus.insert(n, hi);
        dminus.insert(n, lo);
    }

    let plus = fit(&dplus, 2)?;
    let minus = fit(&dminus, 2)?;
    println!("trefoil d+ model: {plus}");
    println!("trefoil d- model: {minus}");
    println!(
        "js = {:?}, js* = {:?}",
        plus.jones_slopes().iter().map(|s| s.to_string()).collect::<Vec<_>>(),
        minus.jones_slopes().iter().map(|s| s.to_string()).collect::<Vec<_>>(),
    );
    println!(
        "jx = {:?}, jx* = {:?}",
        plus.jx_set().iter().map(|s| s.to_string()).collect::<Vec<_>>(),
        minus.jx_set().iter().map(|s| s.to_string()).collect::<Vec<_>>(),
    );

    // The fitted d+ model is the closed-form torus model.
    assert_eq!(plus, torus_degree(2, 3)?);

    // Mirror duality: d-[J_K] = -d+[J_{K*}], so fitting the mirror braid's
    // top degrees and negating recovers the d- model of the knot itself.
    let mirror = trefoil.mirror();
    let mut mirror_dplus: BTreeMap<i64, Rat> = BTreeMap::new();
    for n in 1..=6 {
        let j = colored_jones(&Diagram::Braid(mirror.clone()), n as u32, &budget)?;
        mirror_dplus.insert(n, j.dplus()?);
    }
    let mirror_plus = fit(&mirror_dplus, 2)?;
    assert_eq!(mirror_plus.mirror_model(), minus);
    println!("mirror-duality round trip: d- of the trefoil = mirror of d+ of its mirror");
    Ok(())
}
