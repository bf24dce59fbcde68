//! Naive Kauffman bracket by summation over all `2^c` resolutions, with
//! union-find circle counting. Exponentially slow and therefore budget
//! capped; this is the trust anchor the fast evaluator is checked against.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::error::Error;
use crate::laurent::{loop_value, QLaurent};

use super::pd::{PDCode, Resolution};
use super::EvalBudget;

/// Kauffman bracket of a planar diagram, `⟨unknot⟩ = -(v^{1/2}+v^{-1/2})`,
/// `⟨empty⟩ = 1`.
pub fn bracket_state_sum(pd: &PDCode, budget: &EvalBudget) -> Result<QLaurent, Error> {
    pd.validate()?;
    let c = pd.crossing_count();
    if c > budget.max_state_crossings {
        return Err(Error::Budget(format!(
            "state sum over {c} crossings exceeds the {}-crossing bound",
            budget.max_state_crossings
        )));
    }
    let n_arcs = pd
        .crossings
        .iter()
        .flat_map(|x| x.arcs)
        .max()
        .map_or(0, |m| m as usize + 1);

    // Group states by (A-exponent, circle count); the bracket is then a
    // small weighted sum of monomial * delta powers.
    let total: u64 = 1u64 << c;
    let chunk = 1u64 << c.saturating_sub(10).min(16);
    let counts: BTreeMap<(i64, u32), u64> = (0..total.div_ceil(chunk))
        .into_par_iter()
        .map(|chunk_idx| {
            let lo = chunk_idx * chunk;
            let hi = (lo + chunk).min(total);
            let mut parent: Vec<u32> = vec![0; n_arcs];
            let mut local: BTreeMap<(i64, u32), u64> = BTreeMap::new();
            for state in lo..hi {
                for (i, p) in parent.iter_mut().enumerate() {
                    *p = i as u32;
                }
                let mut exp_a = 0i64;
                for (j, x) in pd.crossings.iter().enumerate() {
                    let res = if state >> j & 1 == 0 {
                        exp_a += 1;
                        Resolution::A
                    } else {
                        exp_a -= 1;
                        Resolution::B
                    };
                    for (p, q) in x.pairs(res) {
                        union(&mut parent, p, q);
                    }
                }
                let mut circles = pd.extra_circles;
                for a in 0..n_arcs as u32 {
                    if find(&mut parent, a) == a {
                        circles += 1;
                    }
                }
                *local.entry((exp_a, circles)).or_insert(0) += 1;
            }
            local
        })
        .reduce(BTreeMap::new, |mut acc, local| {
            for (k, v) in local {
                *acc.entry(k).or_insert(0) += v;
            }
            acc
        });

    // A = v^{-1/4}, so A^e is the quarter-exponent -e.
    let max_circles = counts.keys().map(|&(_, l)| l).max().unwrap_or(0);
    let delta_pows = delta_powers(max_circles);
    let mut out = QLaurent::zero();
    for ((exp_a, circles), count) in counts {
        let mut term = delta_pows[circles as usize].scale(&BigInt::from(count));
        term.mul_monomial(-exp_a, &BigInt::from(1));
        out.add_assign(&term);
    }
    Ok(out)
}

fn delta_powers(up_to: u32) -> Vec<QLaurent> {
    let mut pows = vec![QLaurent::one()];
    let delta = loop_value();
    for _ in 0..up_to {
        let next = pows.last().unwrap().mul(&delta);
        pows.push(next);
    }
    pows
}

fn find(parent: &mut [u32], x: u32) -> u32 {
    let mut r = x;
    while parent[r as usize] != r {
        r = parent[r as usize];
    }
    let mut c = x;
    while parent[c as usize] != r {
        let next = parent[c as usize];
        parent[c as usize] = r;
        c = next;
    }
    r
}

fn union(parent: &mut [u32], x: u32, y: u32) {
    let (rx, ry) = (find(parent, x), find(parent, y));
    if rx != ry {
        parent[rx as usize] = ry;
    }
}
