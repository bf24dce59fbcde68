//! Boundary-slope and surface transforms under cabling, and the adequate
//! state-surface data that feeds them.
//!
//! Run: cargo run --release --example surfaces_and_slopes

use cabled_jones::bracket::BraidWord;
use cabled_jones::cabling::{cable_boundary_slopes, cable_surface, CableParams, SurfaceData};
use cabled_jones::families::{adequate_summary, adequate_surface, StateSide};
use cabled_jones::laurent::{rat, rat_string};
use cabled_jones::quasipoly::slope_set;

fn main() -> Result<(), cabled_jones::Error> {
    // Boundary slopes transform by bs -> q^2·bs ∪ {pq}.
    let unknot_bs = slope_set(&[(0, 1)]);
    let t23 = cable_boundary_slopes(&unknot_bs, CableParams::new(2, 3)?);
    println!(
        "unknot bs {{0}} through (2,3): {:?}",
        t23.iter().map(|s| s.to_string()).collect::<Vec<_>>()
    );

    let t819 = slope_set(&[(12, 1), (0, 1)]);
    let out = cable_boundary_slopes(&t819, CableParams::new(25, 2)?);
    println!(
        "slopes {{0, 12}} through (25,2): {:?}",
        out.iter().map(|s| s.to_string()).collect::<Vec<_>>()
    );

    // State surfaces of adequate diagrams carry slope ±2c± and χ = v - c.
    let trefoil = BraidWord::parse("1 1 1")?.to_pd();
    let summary = adequate_summary(&trefoil)?;
    let b_side = adequate_surface(&summary, StateSide::B)?;
    println!(
        "\ntrefoil state surface: slope {}, χ = {}, |∂S| = {}",
        rat_string(&b_side.slope),
        b_side.euler,
        b_side.boundary_count
    );

    let fig8 = BraidWord::parse("1 -2 1 -2")?.to_pd();
    let s = adequate_summary(&fig8)?;
    let a = adequate_surface(&s, StateSide::A)?;
    let b = adequate_surface(&s, StateSide::B)?;
    println!(
        "figure-eight state surfaces: slopes {} and {}",
        rat_string(&a.slope),
        rat_string(&b.slope)
    );

    // χ bookkeeping through a cable with integral slope a:
    // χ' = |q|χ + |∂S|(1-|q|)|p - aq|, boundary count unchanged.
    let through = cable_surface(&b_side, CableParams::new(11, 2)?)?;
    println!(
        "\ntrefoil surface through (11,2): slope {}, χ = {}, |∂S| = {}",
        rat_string(&through.slope),
        through.euler,
        through.boundary_count
    );
    assert_eq!(through, SurfaceData::new(rat(24), -1, 1));

    // A genus-two Seifert surface (slope 0, χ = -3) through a (7,2)-cable.
    let seifert = SurfaceData::new(rat(0), -3, 1);
    let through = cable_surface(&seifert, CableParams::new(7, 2)?)?;
    println!(
        "genus-2 Seifert surface through (7,2): slope {}, χ = {}, |∂S| = {}",
        rat_string(&through.slope),
        through.euler,
        through.boundary_count
    );
    Ok(())
}
