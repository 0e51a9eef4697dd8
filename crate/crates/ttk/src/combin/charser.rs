//! Graded character generating functions over colored partitions.

use serde::Serialize;
use std::collections::BTreeMap;

use super::partition::{partitions_up_to, Partition};

/// Contribution of one cell: box count and ambient cweight vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellContribution {
    pub boxes: u64,
    pub cweight: Vec<i64>,
}

/// Per-cell contribution dictionary for a coloring with `modulus` colors.
#[derive(Clone, Debug)]
pub struct ContribDict {
    /// Number of colors of the enumerated partitions (1 collapses coloring).
    pub modulus: usize,
    /// Color offset of the top-left cell.
    pub offset: i64,
    /// Contribution by color (length = modulus).
    pub by_color: Vec<CellContribution>,
}

impl ContribDict {
    /// Identity dictionary: each cell is itself, ambient rank n-1.
    pub fn identity(n: usize, offset: i64) -> Self {
        let rank = n.saturating_sub(1);
        let by_color = (0..n)
            .map(|c| CellContribution { boxes: 1, cweight: box_cweight(n, c, rank) })
            .collect();
        ContribDict { modulus: n, offset, by_color }
    }

    /// Arm dictionary of sector color i inside an ambient n-coloring:
    /// cells carry n-1 colors with top-left color n-1-i; color-0 cells
    /// widen into [0, n-1] dominoes, the others keep their color.
    pub fn arms(n: usize, i: i64) -> Self {
        assert!(n >= 2);
        let rank = n - 1;
        let m = n - 1;
        let by_color = (0..m)
            .map(|c| {
                if c == 0 {
                    // one box of color 0 and one of color n-1
                    let mut w = box_cweight(n, 0, rank);
                    for (a, b) in w.iter_mut().zip(box_cweight(n, n - 1, rank)) {
                        *a += b;
                    }
                    CellContribution { boxes: 2, cweight: w }
                } else {
                    CellContribution { boxes: 1, cweight: box_cweight(n, c, rank) }
                }
            })
            .collect();
        ContribDict { modulus: m.max(1), offset: (n as i64 - 1 - i).rem_euclid(m.max(1) as i64), by_color }
    }

    /// Leg dictionary: every cell becomes a vertical n-strip of cweight 0.
    pub fn legs(n: usize) -> Self {
        ContribDict {
            modulus: 1,
            offset: 0,
            by_color: vec![CellContribution { boxes: n as u64, cweight: vec![0; n - 1] }],
        }
    }

    fn cell(&self, x: usize, y: usize) -> &CellContribution {
        let c = (self.offset + x as i64 - y as i64).rem_euclid(self.modulus as i64) as usize;
        &self.by_color[c]
    }

    /// Total contribution of a partition.
    pub fn weigh(&self, lambda: &Partition) -> CellContribution {
        let rank = self.by_color.first().map(|c| c.cweight.len()).unwrap_or(0);
        let mut boxes = 0;
        let mut cweight = vec![0i64; rank];
        for (x0, &len) in lambda.parts().iter().enumerate() {
            for y in 1..=len as usize {
                let c = self.cell(x0 + 1, y);
                boxes += c.boxes;
                for (a, b) in cweight.iter_mut().zip(&c.cweight) {
                    *a += b;
                }
            }
        }
        CellContribution { boxes, cweight }
    }
}

/// cweight vector of a single box of the given color in rank `rank`.
pub fn box_cweight(n: usize, color: usize, rank: usize) -> Vec<i64> {
    debug_assert_eq!(rank, n - 1);
    let mut w = vec![0i64; rank];
    if color == 0 {
        for a in w.iter_mut() {
            *a = -1;
        }
    } else {
        w[color - 1] = 1;
    }
    w
}

/// Truncated bivariate character: exact counts per (boxes, cweight).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharSeries {
    pub truncation: u64,
    pub terms: BTreeMap<(u64, Vec<i64>), i64>,
}

#[derive(Serialize)]
pub struct CharTermJson {
    pub boxes: u64,
    pub cweight: Vec<i64>,
    pub count: i64,
}

impl CharSeries {
    pub fn zero(truncation: u64) -> Self {
        CharSeries { truncation, terms: BTreeMap::new() }
    }

    pub fn one(truncation: u64, rank: usize) -> Self {
        let mut s = CharSeries::zero(truncation);
        s.add_term(0, vec![0; rank], 1);
        s
    }

    pub fn add_term(&mut self, boxes: u64, cweight: Vec<i64>, count: i64) {
        if boxes > self.truncation || count == 0 {
            return;
        }
        let key = (boxes, cweight);
        let e = self.terms.entry(key.clone()).or_insert(0);
        *e += count;
        if *e == 0 {
            self.terms.remove(&key);
        }
    }

    pub fn add(&self, other: &CharSeries) -> CharSeries {
        let mut out = CharSeries::zero(self.truncation.min(other.truncation));
        for ((b, w), c) in self.terms.iter().chain(other.terms.iter()) {
            out.add_term(*b, w.clone(), *c);
        }
        out
    }

    pub fn mul(&self, other: &CharSeries) -> CharSeries {
        let mut out = CharSeries::zero(self.truncation.min(other.truncation));
        for ((b1, w1), c1) in &self.terms {
            for ((b2, w2), c2) in &other.terms {
                if b1 + b2 > out.truncation {
                    continue;
                }
                let w: Vec<i64> = w1.iter().zip(w2).map(|(a, b)| a + b).collect();
                out.add_term(b1 + b2, w, c1 * c2);
            }
        }
        out
    }

    /// Multiply by the monomial x^boxes z^cweight.
    pub fn shift(&self, boxes: u64, cweight: &[i64]) -> CharSeries {
        let mut out = CharSeries::zero(self.truncation);
        for ((b, w), c) in &self.terms {
            if b + boxes > self.truncation {
                continue;
            }
            let nw: Vec<i64> = w.iter().zip(cweight).map(|(a, s)| a + s).collect();
            out.add_term(b + boxes, nw, *c);
        }
        out
    }

    /// Reinterpret the truncation level. Sound when the series is known to
    /// be complete up to the new level (e.g. sector terms whose budget was
    /// cut exactly because everything beyond exceeds the global cutoff).
    pub fn with_truncation(mut self, truncation: u64) -> CharSeries {
        self.terms.retain(|(b, _), _| *b <= truncation);
        self.truncation = truncation;
        self
    }

    pub fn coeff(&self, boxes: u64, cweight: &[i64]) -> i64 {
        self.terms.get(&(boxes, cweight.to_vec())).copied().unwrap_or(0)
    }

    /// First term where the two series disagree, scanning by (boxes, cweight).
    pub fn first_mismatch(&self, other: &CharSeries) -> Option<(u64, Vec<i64>, i64, i64)> {
        let mut keys: Vec<&(u64, Vec<i64>)> =
            self.terms.keys().chain(other.terms.keys()).collect();
        keys.sort();
        keys.dedup();
        for k in keys {
            let a = self.terms.get(k).copied().unwrap_or(0);
            let b = other.terms.get(k).copied().unwrap_or(0);
            if a != b {
                return Some((k.0, k.1.clone(), a, b));
            }
        }
        None
    }

    pub fn to_json_terms(&self) -> Vec<CharTermJson> {
        self.terms
            .iter()
            .map(|((b, w), c)| CharTermJson { boxes: *b, cweight: w.clone(), count: *c })
            .collect()
    }
}

/// Generating function over all partitions, weighted per cell by `dict`,
/// truncated at `truncation` boxes.
pub fn fock_character(dict: &ContribDict, truncation: u64) -> CharSeries {
    let mut out = CharSeries::zero(truncation);
    // every cell contributes at least one box, so |lambda| <= truncation
    for lam in partitions_up_to(truncation) {
        let w = dict.weigh(&lam);
        out.add_term(w.boxes, w.cweight, 1);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_character_small() {
        // n=2, k=0, D=1: 1 + x z^{-1}
        let c = fock_character(&ContribDict::identity(2, 0), 1);
        assert_eq!(c.coeff(0, &[0]), 1);
        assert_eq!(c.coeff(1, &[-1]), 1);
        assert_eq!(c.terms.len(), 2);
    }

    #[test]
    fn plain_partition_counting() {
        // n=1: cweight suppressed; counts are p(m)
        let c = fock_character(&ContribDict::identity(1, 0), 4);
        let want = [1, 1, 2, 3, 5];
        for (m, w) in want.iter().enumerate() {
            assert_eq!(c.coeff(m as u64, &[]), *w);
        }
    }

    #[test]
    fn vertical_strip_substitutes_x_squared() {
        // legs for n=2: x -> x^2 in the plain partition series
        let c = fock_character(&ContribDict::legs(2), 4);
        assert_eq!(c.coeff(0, &[0]), 1);
        assert_eq!(c.coeff(2, &[0]), 1);
        assert_eq!(c.coeff(4, &[0]), 2);
        assert_eq!(c.coeff(1, &[0]), 0);
        assert_eq!(c.coeff(3, &[0]), 0);
    }

    #[test]
    fn arm_dictionary_n3() {
        // sector i=0 for n=3: top-left (n-1)-color is 2 = 0 mod 2, a domino
        let c = fock_character(&ContribDict::arms(3, 0), 3);
        assert_eq!(c.coeff(0, &[0, 0]), 1);
        // lambda=(1): domino of cweight -alpha_1
        assert_eq!(c.coeff(2, &[-1, 0]), 1);
        // lambda=(2) and (1,1): domino + single of color 1: net (0,0)
        assert_eq!(c.coeff(3, &[0, 0]), 2);
    }
}
