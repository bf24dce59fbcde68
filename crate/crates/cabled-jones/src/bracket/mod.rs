//! Knot diagrams and the Kauffman-bracket definition of the colored Jones
//! polynomial.
//!
//! - [`BraidWord`], [`PDCode`]: the two supported presentations
//! - [`chebyshev`]: the color-expansion polynomials `S_n`
//! - [`kauffman_bracket`]: bracket with loop value `δ = -(v^{1/2}+v^{-1/2})`
//!   and `⟨empty⟩ = 1`, via two independent backends
//! - [`colored_jones`]: the framing-corrected colored Jones polynomial
//!   `J_K(n) = ((-1)^{n-1} v^{(n^2-1)/4})^w (-1)^{n-1} ⟨S_{n-1}(D)⟩`,
//!   normalized so `J_K(1) = 1` and
//!   `J_unknot(n) = (v^{n/2}-v^{-n/2})/(v^{1/2}-v^{-1/2})`
//!
//! Exactness is the contract: when a computation would exceed the
//! configured budget the evaluator refuses instead of approximating.

pub mod braid;
pub mod chebyshev;
pub mod pd;
pub mod state_sum;
pub mod tl;

pub use braid::BraidWord;
pub use chebyshev::{chebyshev, ChebyshevExpansion};
pub use pd::{pd_from_json, pd_to_json, Crossing, PDCode, Resolution, StateCircles};
pub use state_sum::bracket_state_sum;
pub use tl::bracket_tl;

use crate::error::Error;
use crate::laurent::QLaurent;

/// Evaluator limits. Exceeding one is an error, never an approximation.
#[derive(Clone, Copy, Debug)]
pub struct EvalBudget {
    /// Maximum crossings for the `2^c` state-sum backend.
    pub max_state_crossings: usize,
    /// Maximum strands for the Temperley-Lieb backend (basis size is
    /// Catalan(strands)).
    pub max_tl_strands: usize,
}

impl Default for EvalBudget {
    fn default() -> Self {
        Self {
            max_state_crossings: 26,
            max_tl_strands: 12,
        }
    }
}

impl EvalBudget {
    /// Default budget, overridable through `CJP_MAX_CROSSINGS` and
    /// `CJP_MAX_STRANDS`.
    pub fn from_env() -> Self {
        let mut b = Self::default();
        if let Some(v) = std::env::var("CJP_MAX_CROSSINGS")
            .ok()
            .and_then(|v| v.parse().ok())
        {
            b.max_state_crossings = v;
        }
        if let Some(v) = std::env::var("CJP_MAX_STRANDS")
            .ok()
            .and_then(|v| v.parse().ok())
        {
            b.max_tl_strands = v;
        }
        b
    }
}

/// A knot diagram in either supported presentation.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Diagram {
    Braid(BraidWord),
    Pd(PDCode),
}

impl Diagram {
    pub fn writhe(&self) -> i64 {
        match self {
            Diagram::Braid(w) => w.writhe(),
            Diagram::Pd(pd) => pd.writhe(),
        }
    }

    pub fn is_knot(&self) -> bool {
        match self {
            Diagram::Braid(w) => w.is_knot_closure(),
            Diagram::Pd(pd) => pd.is_knot(),
        }
    }

    /// Blackboard `m`-parallel of the same kind of presentation.
    pub fn cable(&self, m: usize) -> Result<Diagram, Error> {
        Ok(match self {
            Diagram::Braid(w) => Diagram::Braid(w.cable(m)?),
            Diagram::Pd(pd) => Diagram::Pd(pd.cable(m)?),
        })
    }

    pub fn mirror(&self) -> Diagram {
        match self {
            Diagram::Braid(w) => Diagram::Braid(w.mirror()),
            Diagram::Pd(pd) => Diagram::Pd(PDCode {
                crossings: pd
                    .crossings
                    .iter()
                    .map(|x| Crossing {
                        arcs: x.arcs,
                        sign: -x.sign,
                    })
                    .collect(),
                extra_circles: pd.extra_circles,
            }),
        }
    }
}

impl From<BraidWord> for Diagram {
    fn from(w: BraidWord) -> Self {
        Diagram::Braid(w)
    }
}

impl From<PDCode> for Diagram {
    fn from(pd: PDCode) -> Self {
        Diagram::Pd(pd)
    }
}

/// Kauffman bracket of a diagram. Braid closures run through the
/// Temperley-Lieb contraction, planar codes through the state sum.
pub fn kauffman_bracket(d: &Diagram, budget: &EvalBudget) -> Result<QLaurent, Error> {
    match d {
        Diagram::Braid(w) => bracket_tl(w, budget),
        Diagram::Pd(pd) => bracket_state_sum(pd, budget),
    }
}

/// Colored Jones polynomial of the knot presented by `d`, framing 0.
///
/// Errors if the closure is not a knot or if the Chebyshev cabling runs
/// past the evaluator budget.
pub fn colored_jones(d: &Diagram, n: u32, budget: &EvalBudget) -> Result<QLaurent, Error> {
    if n == 0 {
        return Err(Error::Parameter("color n must be >= 1".into()));
    }
    if !d.is_knot() {
        return Err(Error::InvalidDiagram(
            "closure is not a knot (need a single component)".into(),
        ));
    }
    let w = d.writhe();
    let expansion = chebyshev(n as usize - 1);
    let mut bracket_sum = QLaurent::zero();
    for (m, coeff) in expansion.coeffs().iter().enumerate() {
        if num_traits::Zero::is_zero(coeff) {
            continue;
        }
        let term = if m == 0 {
            QLaurent::one() // bracket of the empty diagram
        } else {
            kauffman_bracket(&d.cable(m)?, budget)?
        };
        bracket_sum.add_assign(&term.scale(coeff));
    }
    // ((-1)^{n-1} v^{(n^2-1)/4})^w (-1)^{n-1}: sign (-1)^{(n-1)(w+1)} and
    // quarter-exponent shift w(n^2-1).
    let n_i = n as i64;
    let sign = if ((n_i - 1) * (w + 1)) % 2 == 0 { 1 } else { -1 };
    let mut result = bracket_sum;
    result.mul_monomial(w * (n_i * n_i - 1), &num_bigint::BigInt::from(sign));
    Ok(result)
}
