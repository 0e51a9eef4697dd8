//! Integer partitions with mod-n cell coloring and corner sets.

use serde::{Deserialize, Serialize};
use std::fmt;

/// Weakly decreasing list of positive parts. `Partition::empty()` is the
/// empty diagram.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn new(mut parts: Vec<u32>) -> Self {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        assert!(parts.windows(2).all(|w| w[0] >= w[1]), "parts must be weakly decreasing");
        Partition(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Row length with zero padding beyond the last part (1-based row index).
    pub fn part(&self, j: usize) -> u32 {
        assert!(j >= 1);
        self.0.get(j - 1).copied().unwrap_or(0)
    }

    pub fn size(&self) -> u64 {
        self.0.iter().map(|&p| p as u64).sum()
    }

    /// Dual (conjugate) partition.
    pub fn dual(&self) -> Partition {
        if self.0.is_empty() {
            return Partition::empty();
        }
        let w = self.0[0] as usize;
        let mut d = vec![0u32; w];
        for (y, slot) in d.iter_mut().enumerate() {
            *slot = self.0.iter().take_while(|&&p| p as usize > y).count() as u32;
        }
        Partition::new(d)
    }

    /// Cell color `k + x - y mod n` for the cell in row x, column y.
    pub fn color(x: usize, y: usize, k: i64, n: usize) -> usize {
        (k + x as i64 - y as i64).rem_euclid(n as i64) as usize
    }

    /// Count of cells per color.
    pub fn color_counts(&self, k: i64, n: usize) -> Vec<i64> {
        let mut counts = vec![0i64; n];
        for (x0, &len) in self.0.iter().enumerate() {
            for y in 1..=len as usize {
                counts[Partition::color(x0 + 1, y, k, n)] += 1;
            }
        }
        counts
    }

    /// Contains the cell (x, y)?
    pub fn contains(&self, x: usize, y: usize) -> bool {
        x >= 1 && y >= 1 && self.part(x) as usize >= y
    }

    /// Rows where one box can be added keeping a partition (1-based).
    pub fn addable_rows(&self) -> Vec<usize> {
        let mut rows = Vec::new();
        for j in 1..=self.len() + 1 {
            if j == 1 || self.part(j - 1) > self.part(j) {
                rows.push(j);
            }
        }
        rows
    }

    /// Rows where one box can be removed keeping a partition (1-based).
    pub fn removable_rows(&self) -> Vec<usize> {
        let mut rows = Vec::new();
        for j in 1..=self.len() {
            if self.part(j) > self.part(j + 1) {
                rows.push(j);
            }
        }
        rows
    }

    pub fn add_box(&self, row: usize) -> Partition {
        let mut v = self.0.clone();
        if row == v.len() + 1 {
            v.push(1);
        } else {
            v[row - 1] += 1;
        }
        Partition::new(v)
    }

    pub fn remove_box(&self, row: usize) -> Partition {
        let mut v = self.0.clone();
        v[row - 1] -= 1;
        Partition::new(v)
    }

    /// Serialized form "[4,1]"; the empty partition is "[]".
    pub fn render(&self) -> String {
        let inner: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        format!("[{}]", inner.join(","))
    }

    pub fn parse(s: &str) -> Result<Partition, String> {
        let t = s.trim();
        let inner = t
            .strip_prefix('[')
            .and_then(|x| x.strip_suffix(']'))
            .ok_or_else(|| format!("malformed partition {t:?}"))?;
        if inner.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let parts: Result<Vec<u32>, _> =
            inner.split(',').map(|x| x.trim().parse::<u32>()).collect();
        let parts = parts.map_err(|e| format!("malformed partition {t:?}: {e}"))?;
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(format!("parts not weakly decreasing in {t:?}"));
        }
        Ok(Partition::new(parts))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

/// Colored corner sets of a partition: `concave[i]` are the addable cells of
/// color i, `convex[i]` the removable ones.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CornerSets {
    pub concave: Vec<Vec<(usize, usize)>>,
    pub convex: Vec<Vec<(usize, usize)>>,
}

/// Concave and convex corners by color. A cell (x, y) is a convex corner
/// when `dual_{y+1} < dual_y = x`; it is concave when `dual_y = x - 1` and
/// either y = 1 or `dual_{y-1} > x - 1`.
pub fn corners(lambda: &Partition, k: i64, n: usize) -> CornerSets {
    assert!(n >= 1);
    let dual = lambda.dual();
    let mut concave = vec![Vec::new(); n];
    let mut convex = vec![Vec::new(); n];
    let width = lambda.part(1) as usize;
    for y in 1..=width {
        let x = dual.part(y) as usize;
        if dual.part(y + 1) < x as u32 {
            convex[Partition::color(x, y, k, n)].push((x, y));
        }
    }
    for y in 1..=width + 1 {
        let x = dual.part(y) as usize + 1;
        if y == 1 || dual.part(y - 1) > (x - 1) as u32 {
            concave[Partition::color(x, y, k, n)].push((x, y));
        }
    }
    CornerSets { concave, convex }
}

/// All partitions of total size at most `max`, ordered by (size, lex).
pub fn partitions_up_to(max: u64) -> Vec<Partition> {
    let mut out = Vec::new();
    for m in 0..=max {
        collect_of_size(m, max as u32, &mut Vec::new(), &mut out);
    }
    out
}

fn collect_of_size(rem: u64, cap: u32, stack: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if rem == 0 {
        out.push(Partition::new(stack.clone()));
        return;
    }
    let hi = (rem.min(cap as u64)) as u32;
    for p in (1..=hi).rev() {
        stack.push(p);
        collect_of_size(rem - p as u64, p, stack, out);
        stack.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn dual_involution() {
        for lam in partitions_up_to(9) {
            assert_eq!(lam.dual().dual(), lam);
            assert_eq!(lam.dual().size(), lam.size());
        }
    }

    #[test]
    fn corners_empty() {
        let cs = corners(&Partition::empty(), 5, 3);
        assert_eq!(cs.concave[Partition::color(1, 1, 5, 3)], vec![(1, 1)]);
        assert!(cs.convex.iter().all(|v| v.is_empty()));
        assert_eq!(cs.concave.iter().map(|v| v.len()).sum::<usize>(), 1);
    }

    #[test]
    fn corners_single_box() {
        // (1) with k=0, n=2: convex (1,1) color 0; concave (2,1),(1,2) color 1
        let cs = corners(&p(&[1]), 0, 2);
        assert_eq!(cs.convex[0], vec![(1, 1)]);
        assert!(cs.convex[1].is_empty());
        let mut cc1 = cs.concave[1].clone();
        cc1.sort();
        assert_eq!(cc1, vec![(1, 2), (2, 1)]);
        assert!(cs.concave[0].is_empty());
    }

    #[test]
    fn corners_match_addable_removable_oracle() {
        // independent oracle: addable/removable box enumeration
        for lam in partitions_up_to(12) {
            for n in 1..=3usize {
                for k in 0..n as i64 {
                    let cs = corners(&lam, k, n);
                    let mut addable: Vec<(usize, usize)> = lam
                        .addable_rows()
                        .iter()
                        .map(|&j| (j, lam.part(j) as usize + 1))
                        .collect();
                    let mut removable: Vec<(usize, usize)> = lam
                        .removable_rows()
                        .iter()
                        .map(|&j| (j, lam.part(j) as usize))
                        .collect();
                    addable.sort();
                    removable.sort();
                    let mut cc: Vec<(usize, usize)> =
                        cs.concave.iter().flatten().copied().collect();
                    let mut cv: Vec<(usize, usize)> =
                        cs.convex.iter().flatten().copied().collect();
                    cc.sort();
                    cv.sort();
                    assert_eq!(cc, addable, "concave vs addable for {lam}");
                    assert_eq!(cv, removable, "convex vs removable for {lam}");
                    // colors match the cell-color formula
                    for (i, cells) in cs.concave.iter().enumerate() {
                        for &(x, y) in cells {
                            assert_eq!(Partition::color(x, y, k, n), i);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn corners_of_2_1() {
        // addable/removable oracle fixes the expected sets
        let cs = corners(&p(&[2, 1]), 0, 2);
        let mut cv1 = cs.convex[1].clone();
        cv1.sort();
        assert_eq!(cv1, vec![(1, 2), (2, 1)]);
        assert!(cs.convex[0].is_empty());
        let mut cc0 = cs.concave[0].clone();
        cc0.sort();
        assert_eq!(cc0, vec![(1, 3), (2, 2), (3, 1)]);
        assert!(cs.concave[1].is_empty());
    }

    #[test]
    fn partition_io() {
        assert_eq!(p(&[4, 1]).render(), "[4,1]");
        assert_eq!(Partition::parse("[]").unwrap(), Partition::empty());
        assert_eq!(Partition::parse("[4,1]").unwrap(), p(&[4, 1]));
        assert!(Partition::parse("[1,4]").is_err());
    }

    #[test]
    fn enumeration_counts() {
        // p(0..=6) = 1,1,2,3,5,7,11 -> 30 partitions with <= 6 boxes
        assert_eq!(partitions_up_to(6).len(), 30);
    }
}
