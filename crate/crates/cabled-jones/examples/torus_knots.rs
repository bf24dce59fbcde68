//! Torus-knot colored Jones polynomials and their degree models: the
//! explicit sum and the closed-form degrees cross-check each other, and the
//! bracket of the 2-braid closure gives a third route.
//!
//! Run: cargo run --release --example torus_knots

use cabled_jones::bracket::{colored_jones, BraidWord, Diagram, EvalBudget};
use cabled_jones::families::{torus_degree, torus_jones};
use cabled_jones::laurent::rat_string;

fn main() -> Result<(), cabled_jones::Error> {
    for (p, q) in [(2i64, 3i64), (2, 5), (3, 4), (3, 5), (-5, 2)] {
        let model = torus_degree(p, q)?;
        println!("T({p},{q}): degree model {model}");
        for n in 1..=12 {
            let j = torus_jones(p, q, n)?;
            let d = j.dplus()?;
            assert_eq!(d, model.eval(n)?, "degree model broke at n = {n}");
        }
        println!("  d+ matches the summed polynomial for n <= 12");
        println!(
            "  js = {:?}",
            model
                .jones_slopes()
                .iter()
                .map(|s| s.to_string())
                .collect::<Vec<_>>()
        );
    }

    // The (2,q) torus knots are also closures of σ1^q; the bracket route
    // must agree exactly with the sum.
    let budget = EvalBudget::default();
    for q in [3i64, 5] {
        let word = vec![1i32; q as usize];
        let braid = BraidWord::new(2, word)?;
        for n in 1..=3 {
            let via_bracket = colored_jones(&Diagram::Braid(braid.clone()), n as u32, &budget)?;
            let via_formula = torus_jones(2, q, n)?;
            assert_eq!(via_bracket, via_formula);
        }
        println!("σ1^{q} closure matches T(2,{q}) for n <= 3");
    }

    // d+ of J(2) for the right trefoil, the value that pins all sign
    // conventions in this crate.
    let j2 = torus_jones(2, 3, 2)?;
    println!("J_T(2,3)(2) = {j2}, d+ = {}", rat_string(&j2.dplus()?));
    Ok(())
}
