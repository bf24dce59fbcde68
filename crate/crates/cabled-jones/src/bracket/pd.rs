//! Planar diagram codes.
//!
//! A crossing is recorded as four arc labels `[a, b, c, d]` in
//! counterclockwise order — `a` = incoming lower-left, `b` = incoming
//! lower-right, `c` = outgoing upper-right, `d` = outgoing upper-left — plus
//! an explicit crossing sign. The strands of the crossing run `a -> c` and
//! `b -> d`.
//!
//! Smoothings: the *vertical* smoothing pairs `(a,d)` and `(b,c)`, the
//! *horizontal* one pairs `(a,b)` and `(c,d)`. For a positive crossing the
//! A-resolution is the vertical smoothing; for a negative crossing it is the
//! horizontal one. This convention is pinned by the requirement that the
//! closure of `σ1^3` has `d_+[J(2)] = 9/2`.

use std::collections::HashMap;

use crate::error::Error;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Crossing {
    pub arcs: [u32; 4],
    pub sign: i8,
}

/// Which resolution of a crossing to take.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Resolution {
    A,
    B,
}

impl Crossing {
    /// The two arc pairs joined by the chosen resolution.
    pub fn pairs(&self, res: Resolution) -> [(u32, u32); 2] {
        let [a, b, c, d] = self.arcs;
        let vertical = [(a, d), (b, c)];
        let horizontal = [(a, b), (c, d)];
        match (res, self.sign > 0) {
            (Resolution::A, true) | (Resolution::B, false) => vertical,
            (Resolution::A, false) | (Resolution::B, true) => horizontal,
        }
    }
}

/// A planar diagram: a list of signed crossings plus a count of
/// crossing-free circles (so the 0-crossing unknot is representable).
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct PDCode {
    pub crossings: Vec<Crossing>,
    pub extra_circles: u32,
}

/// Circle statistics of a single all-A or all-B state.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct StateCircles {
    pub circles: u32,
    /// Whether some crossing has both of its smoothing arcs on one circle,
    /// i.e. the state graph has a 1-edge loop.
    pub has_loop_edge: bool,
}

struct UnionFind(Vec<u32>);

impl UnionFind {
    fn new(n: usize) -> Self {
        Self((0..n as u32).collect())
    }
    fn find(&mut self, x: u32) -> u32 {
        let mut r = x;
        while self.0[r as usize] != r {
            r = self.0[r as usize];
        }
        let mut c = x;
        while self.0[c as usize] != r {
            let next = self.0[c as usize];
            self.0[c as usize] = r;
            c = next;
        }
        r
    }
    fn union(&mut self, x: u32, y: u32) {
        let (rx, ry) = (self.find(x), self.find(y));
        if rx != ry {
            self.0[rx as usize] = ry;
        }
    }
}

impl PDCode {
    pub fn new(crossings: Vec<Crossing>, extra_circles: u32) -> Result<Self, Error> {
        let pd = Self {
            crossings,
            extra_circles,
        };
        pd.validate()?;
        Ok(pd)
    }

    /// The empty diagram.
    pub fn empty() -> Self {
        Self::default()
    }

    /// The 0-crossing unknot diagram.
    pub fn unknot() -> Self {
        Self {
            crossings: vec![],
            extra_circles: 1,
        }
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn writhe(&self) -> i64 {
        self.crossings.iter().map(|x| x.sign as i64).sum()
    }

    pub fn signed_crossing_counts(&self) -> (usize, usize) {
        let pos = self.crossings.iter().filter(|x| x.sign > 0).count();
        (pos, self.crossings.len() - pos)
    }

    fn arc_count(&self) -> usize {
        self.crossings
            .iter()
            .flat_map(|x| x.arcs)
            .max()
            .map_or(0, |m| m as usize + 1)
    }

    /// Structural validity: signs are ±1, every arc label in `0..arc_count`
    /// occurs exactly twice, and the crossing graph is connected.
    pub fn validate(&self) -> Result<(), Error> {
        if self.crossings.is_empty() {
            return Ok(());
        }
        let n = self.arc_count();
        let mut uses = vec![0u8; n];
        for x in &self.crossings {
            if x.sign != 1 && x.sign != -1 {
                return Err(Error::InvalidDiagram(format!("crossing sign {}", x.sign)));
            }
            for &a in &x.arcs {
                let slot = uses
                    .get_mut(a as usize)
                    .ok_or_else(|| Error::InvalidDiagram(format!("arc {a} out of range")))?;
                *slot += 1;
            }
        }
        if let Some(a) = uses.iter().position(|&u| u != 2) {
            return Err(Error::InvalidDiagram(format!(
                "arc {a} occurs {} times (want 2)",
                uses[a]
            )));
        }
        // Connectivity of the underlying 4-valent graph.
        let mut uf = UnionFind::new(n);
        for x in &self.crossings {
            for w in x.arcs.windows(2) {
                uf.union(w[0], w[1]);
            }
        }
        let root = uf.find(0);
        for a in 1..n as u32 {
            if uf.find(a) != root {
                return Err(Error::InvalidDiagram("diagram is disconnected".into()));
            }
        }
        Ok(())
    }

    /// Number of components of the underlying link (crossing-free circles
    /// included).
    pub fn link_components(&self) -> u32 {
        let n = self.arc_count();
        let mut uf = UnionFind::new(n);
        for x in &self.crossings {
            let [a, b, c, d] = x.arcs;
            uf.union(a, c);
            uf.union(b, d);
        }
        let mut roots: Vec<u32> = (0..n as u32).map(|a| uf.find(a)).collect();
        roots.sort_unstable();
        roots.dedup();
        roots.len() as u32 + self.extra_circles
    }

    pub fn is_knot(&self) -> bool {
        self.link_components() == 1 && !self.crossings.is_empty() || self == &Self::unknot()
    }

    /// Circle count and 1-edge-loop flag of the all-A or all-B state.
    pub fn state_circles(&self, res: Resolution) -> StateCircles {
        let n = self.arc_count();
        let mut uf = UnionFind::new(n);
        for x in &self.crossings {
            for (p, q) in x.pairs(res) {
                uf.union(p, q);
            }
        }
        let mut roots: Vec<u32> = (0..n as u32).map(|a| uf.find(a)).collect();
        roots.sort_unstable();
        roots.dedup();
        let has_loop_edge = self.crossings.iter().any(|x| {
            let [(p, _), (r, _)] = x.pairs(res);
            uf.find(p) == uf.find(r)
        });
        StateCircles {
            circles: roots.len() as u32 + self.extra_circles,
            has_loop_edge,
        }
    }

    /// The blackboard `m`-parallel.
    ///
    /// Every arc becomes a ribbon of `m` lanes and every crossing becomes the
    /// `m^2`-crossing bundle block. Lanes are enumerated counterclockwise at
    /// each crossing; the two ends of a ribbon see them in opposite order, so
    /// lane `k` at one end glues to lane `m-1-k` at the other.
    pub fn cable(&self, m: usize) -> Result<Self, Error> {
        if m == 0 {
            return Err(Error::Parameter("cable multiplicity must be >= 1".into()));
        }
        if m == 1 {
            return Ok(self.clone());
        }
        let m_u32 = m as u32;
        // Lane ids: arc `a`, end `e` (0 = first slot met in scan order),
        // ccw index `k` -> a*m + (k if e == 0, else m-1-k). The flip encodes
        // the opposite cyclic order in which the ribbon's two ends see its
        // lanes.
        let mut seen: HashMap<u32, ()> = HashMap::new();
        let mut slot_lanes = |arc: u32| -> Vec<u32> {
            let second = seen.insert(arc, ()).is_some();
            (0..m_u32)
                .map(|ccw| arc * m_u32 + if second { m_u32 - 1 - ccw } else { ccw })
                .collect()
        };
        let mut next_arc = self.arc_count() as u32 * m_u32;
        let mut crossings = Vec::with_capacity(self.crossings.len() * m * m);
        for x in &self.crossings {
            let [a, b, c, d] = x.arcs;
            // Counterclockwise lane enumeration per slot, converted to
            // strand-position order of the bundle block: along the bottom
            // (slots a and b) ccw runs left-to-right, along the top (slots d
            // and c) it runs right-to-left.
            let la = slot_lanes(a);
            let lb = slot_lanes(b);
            let ld = slot_lanes(d);
            let lc = slot_lanes(c);
            let bottom: Vec<u32> = la.iter().chain(lb.iter()).copied().collect();
            let top: Vec<u32> = ld
                .iter()
                .rev()
                .chain(lc.iter().rev())
                .copied()
                .collect();

            // Sweep the bundle block as a small braid on 2m strands with
            // fresh internal arcs, then rename the sweep's final arcs onto
            // the prescribed top boundary lanes.
            let block = super::braid::positive_block_letters(0, m);
            let letters: Vec<usize> = if x.sign > 0 {
                block
            } else {
                block.into_iter().rev().collect()
            };
            let mut cur = bottom;
            let first_new = crossings.len();
            for k in letters {
                let (lo, hi) = (k - 1, k);
                let out_l = next_arc;
                let out_r = next_arc + 1;
                next_arc += 2;
                crossings.push(Crossing {
                    arcs: [cur[lo], cur[hi], out_r, out_l],
                    sign: x.sign,
                });
                cur[lo] = out_l;
                cur[hi] = out_r;
            }
            // Every position is touched by the block (m >= 2), so the final
            // arcs are fresh ids occurring exactly once; renaming them onto
            // the boundary lanes is a plain substitution.
            let rename: HashMap<u32, u32> = cur.iter().copied().zip(top).collect();
            for cr in &mut crossings[first_new..] {
                for arc in &mut cr.arcs {
                    if let Some(&t) = rename.get(arc) {
                        *arc = t;
                    }
                }
            }
        }
        // Compact arc labels left sparse by the renaming.
        let mut relabel: HashMap<u32, u32> = HashMap::new();
        for cr in &mut crossings {
            for arc in &mut cr.arcs {
                let next = relabel.len() as u32;
                *arc = *relabel.entry(*arc).or_insert(next);
            }
        }
        PDCode::new(crossings, self.extra_circles * m_u32)
    }
}

/// JSON form: `{"crossings": [{"arcs": [a,b,c,d], "sign": s}, ...],
/// "extra_circles": k}`.
pub fn pd_to_json(pd: &PDCode) -> serde_json::Value {
    serde_json::json!({
        "crossings": pd
            .crossings
            .iter()
            .map(|x| serde_json::json!({"arcs": x.arcs, "sign": x.sign}))
            .collect::<Vec<_>>(),
        "extra_circles": pd.extra_circles,
    })
}

pub fn pd_from_json(value: &serde_json::Value) -> Result<PDCode, Error> {
    let crossings = value["crossings"]
        .as_array()
        .ok_or_else(|| Error::Parse("PD JSON needs a crossings list".into()))?;
    let mut out = Vec::with_capacity(crossings.len());
    for x in crossings {
        let arcs = x["arcs"]
            .as_array()
            .filter(|a| a.len() == 4)
            .ok_or_else(|| Error::Parse("crossing needs arcs [a,b,c,d]".into()))?;
        let mut quad = [0u32; 4];
        for (i, a) in arcs.iter().enumerate() {
            quad[i] = a
                .as_u64()
                .ok_or_else(|| Error::Parse("arc labels are nonnegative integers".into()))?
                as u32;
        }
        let sign = x["sign"]
            .as_i64()
            .ok_or_else(|| Error::Parse("crossing needs a sign".into()))? as i8;
        out.push(Crossing { arcs: quad, sign });
    }
    let extra = value
        .get("extra_circles")
        .and_then(|v| v.as_u64())
        .unwrap_or(0) as u32;
    PDCode::new(out, extra)
}
