//! Two-fusion knots: the lattice function, its case-dispatched maxima, the
//! brute-force lattice oracle, and the bridge to the (-2,3,p) pretzels.
//!
//! Run: cargo run --release --example fusion_knots

use cabled_jones::fusion::{
    b_coefficient, delta, delta_bruteforce, delta_point, dplus_model, FusionParams,
};
use cabled_jones::laurent::{rat, rat_string, ratio};

fn main() -> Result<(), cabled_jones::Error> {
    // K(2,1): case A. δ(5) = 158 at lattice point (1,-1).
    let k21 = FusionParams::new(2, 1)?;
    let (val, pt) = delta_bruteforce(k21, 5)?;
    println!(
        "K(2,1): lattice max at n = 5 is {} at ({}, {})",
        rat_string(&val),
        pt.k1,
        pt.k2
    );
    assert_eq!(delta(k21, 5)?, val);

    let model = dplus_model(k21)?;
    println!("K(2,1) degree model: {model}");
    println!("  d+[J(6)] = {}", rat_string(&model.eval(6)?));

    // Case formulas against the oracle across a strip of parameters.
    for (m1, m2) in [(0i64, 2i64), (-1, 1), (-4, 2), (-3, -2), (4, -2)] {
        let fp = FusionParams::new(m1, m2)?;
        for n in 0..=25 {
            let (max, _) = delta_bruteforce(fp, n)?;
            let (_, corr) = delta_point(fp, n)?;
            match corr {
                // The C-2 half-integer subcase: the degree sits below the
                // lattice maximum by exactly c3 + 1/2.
                Some(c) => assert_eq!(delta(fp, n)?, &max - &c),
                None => assert_eq!(delta(fp, n)?, max),
            }
        }
        println!(
            "K({m1},{m2}): case formulas match the lattice oracle for n <= 25, b = {}",
            rat_string(&b_coefficient(fp, 7)?)
        );
    }

    // The pretzel bridge: K(m,1) is the (-2,3,2m+3) pretzel, with
    // 4a = 10 + 4m + 1/m and 2b = 1/m - 1.
    println!();
    for m in 2..=5i64 {
        let model = dplus_model(FusionParams::new(m, 1)?)?;
        let four_a = rat(4) * model.constant_a().unwrap();
        let two_b = rat(2) * &model.residues()[0].b;
        assert_eq!(four_a, rat(10 + 4 * m) + ratio(1, m));
        assert_eq!(two_b, ratio(1, m) - rat(1));
        println!(
            "K({m},1) = pretzel(-2,3,{}): 4a = {}, 2b = {}",
            2 * m + 3,
            rat_string(&four_a),
            rat_string(&two_b)
        );
    }
    Ok(())
}
