//! Compute colored Jones polynomials from braid words and planar diagram
//! codes, with the two bracket backends cross-checking each other.
//!
//! Run: cargo run --release --example colored_jones

use cabled_jones::bracket::{
    bracket_state_sum, bracket_tl, colored_jones, BraidWord, Diagram, EvalBudget,
};
use cabled_jones::laurent::rat_string;

fn main() -> Result<(), cabled_jones::Error> {
    let budget = EvalBudget::default();

    // The right-handed trefoil as the closure of σ1^3.
    let trefoil = BraidWord::parse("1 1 1")?;
    println!("trefoil = closure of σ1^3, writhe {}", trefoil.writhe());
    for n in 1..=4 {
        let j = colored_jones(&Diagram::Braid(trefoil.clone()), n, &budget)?;
        let (dplus, dminus) = if n == 1 {
            ("0".to_string(), "0".to_string())
        } else {
            let (hi, lo) = j.degrees()?;
            (rat_string(&hi), rat_string(&lo))
        };
        println!("  J({n}) = {j}");
        println!("         d+ = {dplus}, d- = {dminus}");
    }

    // The same value through the planar-diagram state sum.
    let pd = trefoil.to_pd();
    let via_tl = bracket_tl(&trefoil, &budget)?;
    let via_sum = bracket_state_sum(&pd, &budget)?;
    assert_eq!(via_tl, via_sum);
    println!("\nKauffman bracket, both backends: {via_tl}");

    // Figure-eight: amphichiral, so J is symmetric under v -> 1/v.
    let fig8 = BraidWord::parse("1 -2 1 -2")?;
    let j3 = colored_jones(&Diagram::Braid(fig8), 3, &budget)?;
    assert_eq!(j3, j3.mirror());
    println!("\nfigure-eight J(3) = {j3}");
    println!("  (palindromic, as an amphichiral knot demands)");

    // Budgets refuse rather than approximate.
    let wide = BraidWord::new(20, vec![1])?;
    match bracket_tl(&wide, &budget) {
        Err(e) => println!("\n20-strand request: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
