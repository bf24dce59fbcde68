//! Planar-contraction Kauffman bracket evaluator for braid closures.
//!
//! The running state is a linear combination of Temperley-Lieb diagrams on
//! `s` strands (noncrossing perfect matchings of `s` bottom and `s` top
//! points, Catalan(s) of them). Each braid letter maps a diagram to at most
//! two, so a word is processed in time proportional to the live support
//! instead of `2^c`. This is the performance path; the state sum is its
//! oracle.

use std::collections::HashMap;

use num_bigint::BigInt;

use crate::error::Error;
use crate::laurent::{loop_value, QLaurent};

use super::braid::BraidWord;
use super::EvalBudget;

/// A noncrossing perfect matching on points `0..2s`; bottom point `j` is
/// `j`, top point `j` is `s + j`. `m[p]` is the partner of `p`.
type Matching = Box<[u8]>;

fn identity_matching(s: usize) -> Matching {
    let mut m = vec![0u8; 2 * s];
    for j in 0..s {
        m[j] = (s + j) as u8;
        m[s + j] = j as u8;
    }
    m.into_boxed_slice()
}

/// Compose the cup-cap generator `e_i` on top of `m`. Returns the new
/// matching and whether a closed loop was created.
fn cap(m: &Matching, s: usize, i: usize) -> (Matching, bool) {
    let u = s + i;
    let w = s + i + 1;
    let x = m[u] as usize;
    if x == w {
        // m already pairs the two top points; capping closes a loop and
        // e_i's own cap restores the same matching.
        return (m.clone(), true);
    }
    let y = m[w] as usize;
    let mut out = m.clone();
    out[x] = y as u8;
    out[y] = x as u8;
    out[u] = w as u8;
    out[w] = u as u8;
    (out, false)
}

/// Number of circles formed when the diagram is closed by joining top point
/// `j` back to bottom point `j`.
fn closure_circles(m: &Matching, s: usize) -> u32 {
    let mut seen = vec![false; 2 * s];
    let mut circles = 0;
    for start in 0..2 * s {
        if seen[start] {
            continue;
        }
        circles += 1;
        let mut p = start;
        loop {
            seen[p] = true;
            let q = m[p] as usize; // matching edge
            seen[q] = true;
            p = if q < s { q + s } else { q - s }; // closure edge
            if p == start {
                break;
            }
        }
    }
    circles
}

/// Kauffman bracket of the closure of a braid word, evaluated in the
/// Temperley-Lieb diagram basis.
pub fn bracket_tl(braid: &BraidWord, budget: &EvalBudget) -> Result<QLaurent, Error> {
    let s = braid.strands();
    if s > budget.max_tl_strands {
        return Err(Error::Budget(format!(
            "Temperley-Lieb evaluation on {s} strands exceeds the {}-strand bound",
            budget.max_tl_strands
        )));
    }
    if s == 0 {
        return Ok(QLaurent::one());
    }
    let delta = loop_value();
    let one = BigInt::from(1);

    let mut state: HashMap<Matching, QLaurent> = HashMap::new();
    state.insert(identity_matching(s), QLaurent::one());

    for &l in braid.letters() {
        let i = l.unsigned_abs() as usize - 1;
        // A-resolution of a positive letter is the identity tangle, with
        // weight A = v^{-1/4}; the cup-cap carries A^{-1}. Negative letters
        // swap the weights.
        let (id_q, cap_q) = if l > 0 { (-1i64, 1i64) } else { (1, -1) };
        let mut next: HashMap<Matching, QLaurent> =
            HashMap::with_capacity(state.len() * 2);
        for (m, coeff) in state {
            let mut id_term = coeff.clone();
            id_term.mul_monomial(id_q, &one);
            next.entry(m.clone())
                .or_insert_with(QLaurent::zero)
                .add_assign(&id_term);

            let (capped, looped) = cap(&m, s, i);
            let mut cap_term = coeff;
            cap_term.mul_monomial(cap_q, &one);
            if looped {
                cap_term = cap_term.mul(&delta);
            }
            next.entry(capped)
                .or_insert_with(QLaurent::zero)
                .add_assign(&cap_term);
        }
        next.retain(|_, c| !c.is_zero());
        state = next;
    }

    let mut delta_pows = vec![QLaurent::one()];
    let mut out = QLaurent::zero();
    for (m, coeff) in state {
        let circles = closure_circles(&m, s) as usize;
        while delta_pows.len() <= circles {
            let next = delta_pows.last().unwrap().mul(&delta);
            delta_pows.push(next);
        }
        out.add_assign(&coeff.mul(&delta_pows[circles]));
    }
    Ok(out)
}
