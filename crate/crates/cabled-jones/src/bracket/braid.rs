//! Braid words and their closures.
//!
//! A braid word on `s` strands is a sequence of nonzero letters `i` with
//! `1 <= |i| <= s-1`; the sign of a letter is the sign of the crossing it
//! contributes. Text form: whitespace- or comma-separated signed integers,
//! e.g. `"1 1 1"` for the right trefoil.

use crate::error::Error;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self, Error> {
        if strands < 1 {
            return Err(Error::InvalidBraid("need at least one strand".into()));
        }
        for &l in &letters {
            if l == 0 || l.unsigned_abs() as usize > strands - 1 {
                return Err(Error::InvalidBraid(format!(
                    "letter {l} out of range for {strands} strands"
                )));
            }
        }
        Ok(Self { strands, letters })
    }

    /// Parse a whitespace- or comma-separated word; the strand count is the
    /// smallest one admitting every letter.
    pub fn parse(text: &str) -> Result<Self, Error> {
        let mut letters = Vec::new();
        for tok in text.split(|c: char| c.is_whitespace() || c == ',') {
            if tok.is_empty() {
                continue;
            }
            let l: i32 = tok
                .parse()
                .map_err(|_| Error::InvalidBraid(format!("bad letter {tok:?}")))?;
            if l == 0 {
                return Err(Error::InvalidBraid("letter 0 is not a generator".into()));
            }
            letters.push(l);
        }
        if letters.is_empty() {
            return Err(Error::InvalidBraid("empty braid word".into()));
        }
        let strands = letters.iter().map(|l| l.unsigned_abs() as usize).max().unwrap() + 1;
        Self::new(strands, letters)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn writhe(&self) -> i64 {
        self.letters.iter().map(|&l| l.signum() as i64).sum()
    }

    /// Negate every crossing; the closure becomes the mirror knot.
    pub fn mirror(&self) -> Self {
        Self {
            strands: self.strands,
            letters: self.letters.iter().map(|&l| -l).collect(),
        }
    }

    /// The permutation induced on strand positions, as the image vector of
    /// positions `0..strands`.
    pub fn permutation(&self) -> Vec<usize> {
        let mut perm: Vec<usize> = (0..self.strands).collect();
        for &l in &self.letters {
            let i = l.unsigned_abs() as usize - 1;
            perm.swap(i, i + 1);
        }
        // perm[p] currently says which initial position ends up at p after
        // pushing positions through; invert to map start -> end.
        let mut image = vec![0usize; self.strands];
        for (end, &start) in perm.iter().enumerate() {
            image[start] = end;
        }
        image
    }

    /// The closure is a knot iff the induced permutation is a single cycle.
    pub fn is_knot_closure(&self) -> bool {
        let image = self.permutation();
        let mut seen = 0usize;
        let mut p = 0usize;
        loop {
            seen += 1;
            p = image[p];
            if p == 0 {
                break;
            }
        }
        seen == self.strands
    }

    /// The blackboard `m`-parallel: each strand becomes a bundle of `m`
    /// strands, and each letter expands to the standard `m^2`-crossing block
    /// that carries one bundle across its neighbor without internal twisting.
    /// The writhe multiplies by `m^2`.
    pub fn cable(&self, m: usize) -> Result<Self, Error> {
        if m == 0 {
            return Err(Error::Parameter("cable multiplicity must be >= 1".into()));
        }
        if m == 1 {
            return Ok(self.clone());
        }
        let mut letters = Vec::with_capacity(self.letters.len() * m * m);
        for &l in &self.letters {
            let base = (l.unsigned_abs() as usize - 1) * m;
            let block = positive_block_letters(base, m);
            if l > 0 {
                letters.extend(block.iter().map(|&k| k as i32));
            } else {
                letters.extend(block.iter().rev().map(|&k| -(k as i32)));
            }
        }
        Self::new(self.strands * m, letters)
    }

    /// Convert the closure of this braid to a planar diagram. Strands never
    /// involved in a crossing close up into free circles.
    pub fn to_pd(&self) -> super::pd::PDCode {
        use super::pd::{Crossing, PDCode};
        let s = self.strands;
        // Arc 0..s are the starting arcs of the strand positions; the
        // closure identifies each final arc with its starting one.
        let mut next_arc = s as u32;
        let mut cur: Vec<u32> = (0..s as u32).collect();
        let mut touched = vec![false; s];
        let mut crossings = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            let i = l.unsigned_abs() as usize - 1;
            touched[i] = true;
            touched[i + 1] = true;
            let (out_l, out_r) = (next_arc, next_arc + 1);
            next_arc += 2;
            crossings.push(Crossing {
                arcs: [cur[i], cur[i + 1], out_r, out_l],
                sign: l.signum() as i8,
            });
            cur[i] = out_l;
            cur[i + 1] = out_r;
        }
        // Close up: final arc at position j is the same arc as the start, j.
        let mut rename: std::collections::HashMap<u32, u32> = std::collections::HashMap::new();
        let mut extra = 0u32;
        for j in 0..s {
            if touched[j] {
                rename.insert(cur[j], j as u32);
            } else {
                extra += 1;
            }
        }
        let mut relabel: std::collections::HashMap<u32, u32> = std::collections::HashMap::new();
        for cr in &mut crossings {
            for arc in &mut cr.arcs {
                let target = *rename.get(arc).unwrap_or(arc);
                let next = relabel.len() as u32;
                *arc = *relabel.entry(target).or_insert(next);
            }
        }
        PDCode::new(crossings, extra).expect("braid closure is a valid diagram")
    }
}

/// The positive bundle-crossing block on strands `base+1 ..= base+2m`
/// (1-indexed generators): rows of descending runs,
/// `(σ_{m} ... σ_1)(σ_{m+1} ... σ_2) ... (σ_{2m-1} ... σ_m)` shifted by `base`.
pub(crate) fn positive_block_letters(base: usize, m: usize) -> Vec<usize> {
    let mut word = Vec::with_capacity(m * m);
    for row in 0..m {
        for t in 0..m {
            word.push(base + m + row - t);
        }
    }
    word
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_validate() {
        let w = BraidWord::parse("1 1 1").unwrap();
        assert_eq!(w.strands(), 2);
        assert_eq!(w.writhe(), 3);
        let w = BraidWord::parse("1,-2,1,-2").unwrap();
        assert_eq!(w.strands(), 3);
        assert_eq!(w.writhe(), 0);
        assert!(BraidWord::new(2, vec![2]).is_err());
        assert!(BraidWord::parse("").is_err());
    }

    #[test]
    fn knot_closure_check() {
        assert!(BraidWord::parse("1 1 1").unwrap().is_knot_closure());
        // Closure of σ1^2 is the Hopf link.
        assert!(!BraidWord::parse("1 1").unwrap().is_knot_closure());
        assert!(BraidWord::parse("1 -2 1 -2").unwrap().is_knot_closure());
        // A free strand makes the closure a split link.
        assert!(!BraidWord::new(3, vec![1, 1, 1]).unwrap().is_knot_closure());
    }

    #[test]
    fn cable_counts() {
        let trefoil = BraidWord::parse("1 1 1").unwrap();
        let c = trefoil.cable(3).unwrap();
        assert_eq!(c.strands(), 6);
        assert_eq!(c.letters().len(), 27);
        assert_eq!(c.writhe(), 27);
        // σ1 in B2 cabled by 2: four crossings on four strands.
        let s = BraidWord::parse("1").unwrap().cable(2).unwrap();
        assert_eq!((s.strands(), s.letters().len()), (4, 4));
        assert_eq!(s.letters(), &[2, 1, 3, 2]);
        assert_eq!(trefoil.cable(1).unwrap(), trefoil);
    }

    #[test]
    fn cable_preserves_bundle_order() {
        // The block must swap the two bundles as ordered sets.
        let w = BraidWord::parse("1").unwrap().cable(3).unwrap();
        assert_eq!(w.permutation(), vec![3, 4, 5, 0, 1, 2]);
    }

    #[test]
    fn mirror_negates() {
        let w = BraidWord::parse("1 -2 1").unwrap();
        assert_eq!(w.mirror().letters(), &[-1, 2, -1]);
        assert_eq!(w.mirror().writhe(), -w.writhe());
    }
}
