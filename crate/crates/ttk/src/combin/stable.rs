//! Staircase partitions and the stable-sector embedding bijection.

use super::partition::Partition;

/// Arm-cell width under the attachment dictionary: a cell whose
/// (n-1)-coloring is 0 becomes a horizontal [0, n-1] domino, other colors
/// stay single cells.
pub fn arm_cell_width(n: usize, i: i64, x: usize, y: usize) -> u64 {
    if n == 1 {
        return 1;
    }
    let m = (n - 1) as i64;
    let c = (n as i64 - 1 - i + x as i64 - y as i64).rem_euclid(m);
    if c == 0 {
        2
    } else {
        1
    }
}

/// Total box count of the arms of `lambda` in sector color i.
pub fn arm_weight(n: usize, i: i64, lambda: &Partition) -> u64 {
    let mut w = 0;
    for (x0, &len) in lambda.parts().iter().enumerate() {
        for y in 1..=len as usize {
            w += arm_cell_width(n, i, x0 + 1, y);
        }
    }
    w
}

/// The staircase partition of sector (s, i) in the color-p Fock module.
///
/// Requires 0 <= i <= n-2, s = i + p (mod n-1) and n s >= i + p; it has
/// n s - p parts equal to (n s - i - p)/(n-1) - floor((j - i - 1)/(n-1)).
pub fn staircase(n: usize, p: i64, s: i64, i: i64) -> Result<Partition, String> {
    if n < 2 || i < 0 || i > n as i64 - 2 {
        return Err("sector color out of range".into());
    }
    let m = n as i64 - 1;
    if (s - i - p).rem_euclid(m) != 0 {
        return Err("empty sector parameters".into());
    }
    let rows = n as i64 * s - p;
    if n as i64 * s < i + p {
        return Err("empty sector parameters".into());
    }
    let lead = (n as i64 * s - i - p) / m;
    let mut parts = Vec::new();
    for j in 1..=rows {
        let v = lead - (j - i - 1).div_euclid(m);
        if v <= 0 {
            return Err(format!("staircase formula gave nonpositive part {v} at row {j}"));
        }
        parts.push(v as u32);
    }
    if !parts.windows(2).all(|w| w[0] >= w[1]) {
        return Err("staircase formula gave non-monotone parts".into());
    }
    Ok(Partition::new(parts))
}

/// Result of a stable-zone decomposition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StableDecomp {
    pub s: i64,
    pub i: i64,
    pub arms: Partition,
    pub legs: Partition,
}

/// Attach `arms` (dictionary-widened rows) and `legs` (vertical n-strip
/// columns) to the sector staircase. Errors outside the stable zone, where
/// the construction either breaks monotonicity or fails to round-trip.
pub fn embed_stable(
    n: usize,
    p: i64,
    s: i64,
    i: i64,
    arms: &Partition,
    legs: &Partition,
) -> Result<Partition, String> {
    let stair = staircase(n, p, s, i)?;
    let built = build(n, i, &stair, arms, legs)?;
    // round-trip guards against arm/leg collisions in small sectors
    let rec = recover(n, i, &stair, &built);
    if rec.as_ref() == Some(&(arms.clone(), legs.clone())) {
        Ok(built)
    } else {
        Err("outside stable zone".into())
    }
}

fn build(
    n: usize,
    i: i64,
    stair: &Partition,
    arms: &Partition,
    legs: &Partition,
) -> Result<Partition, String> {
    // rows first
    let rows = stair.len().max(arms.len());
    let mut v = Vec::with_capacity(rows);
    for j in 1..=rows {
        let mut w = stair.part(j) as u64;
        for y in 1..=arms.part(j) as usize {
            w += arm_cell_width(n, i, j, y);
        }
        v.push(u32::try_from(w).unwrap());
    }
    if !v.windows(2).all(|w| w[0] >= w[1]) {
        return Err("outside stable zone".into());
    }
    let with_arms = Partition::new(v);
    // then columns of the arm-extended diagram
    let dual = with_arms.dual();
    let cols = dual.len().max(legs.len());
    let mut d = Vec::with_capacity(cols);
    for y in 1..=cols {
        d.push(dual.part(y) + n as u32 * legs.part(y));
    }
    if !d.windows(2).all(|w| w[0] >= w[1]) {
        return Err("outside stable zone".into());
    }
    Ok(Partition::new(d).dual())
}

/// Inverse reading of `build` for a known sector; `None` when the shape is
/// not of the embedded form.
fn recover(n: usize, i: i64, stair: &Partition, big: &Partition) -> Option<(Partition, Partition)> {
    // legs: column heights modulo the arm-extended staircase. Arms never
    // touch the leg columns in the stable zone, so peel legs off the dual
    // by reducing each column to the first height whose excess over the
    // arm-extended dual is a multiple of n... the arm extension is unknown,
    // so instead recover arms row by row from the top, then peel legs.
    let both_dual = big.dual();
    // arms: rows 1..L where the excess over the staircase decodes through
    // the width dictionary; stop at the first row with zero excess
    let mut arm_rows: Vec<u32> = Vec::new();
    let mut j = 1usize;
    loop {
        let excess = big.part(j) as i64 - stair.part(j) as i64;
        if excess < 0 {
            return None;
        }
        if excess == 0 {
            break;
        }
        // decode: walk cells of the arm row accumulating dictionary widths
        let mut acc = 0i64;
        let mut y = 0usize;
        while acc < excess {
            y += 1;
            acc += arm_cell_width(n, i, j, y) as i64;
        }
        if acc != excess {
            // undecodable excess is leg material: the arm rows ended above
            break;
        }
        // leg material can also masquerade as decodable arms below the true
        // arm rows; the retry loop below peels those readings off again
        arm_rows.push(y as u32);
        if !(arm_rows.len() < 2
            || arm_rows[arm_rows.len() - 2] >= arm_rows[arm_rows.len() - 1])
        {
            // not weakly decreasing: previous row ended the true arms
            arm_rows.pop();
            break;
        }
        j += 1;
        if j > big.len() + 1 {
            break;
        }
    }
    loop {
        let arms = Partition::new(arm_rows.clone());
        // rebuild arm extension, peel legs from the dual
        let mut v = Vec::new();
        let rows = stair.len().max(arms.len());
        for r in 1..=rows {
            let mut w = stair.part(r) as u64;
            for y in 1..=arms.part(r) as usize {
                w += arm_cell_width(n, i, r, y);
            }
            v.push(u32::try_from(w).ok()?);
        }
        if v.windows(2).all(|w| w[0] >= w[1]) {
            let with_arms = Partition::new(v);
            let ad = with_arms.dual();
            let cols = both_dual.len().max(ad.len());
            let mut legs = Vec::new();
            let mut ok = true;
            for y in 1..=cols {
                let excess = both_dual.part(y) as i64 - ad.part(y) as i64;
                if excess < 0 || excess % n as i64 != 0 {
                    ok = false;
                    break;
                }
                legs.push((excess / n as i64) as u32);
            }
            while legs.last() == Some(&0) {
                legs.pop();
            }
            if ok && legs.windows(2).all(|w| w[0] >= w[1]) {
                let legs = Partition::new(legs);
                if let Ok(again) = build(n, i, stair, &arms, &legs) {
                    if again == *big {
                        return Some((arms, legs));
                    }
                }
            }
        }
        // retry with a shorter arm reading (legs were swallowed as arms)
        if arm_rows.pop().is_none() {
            return None;
        }
    }
}

/// Search all sectors for the unique stable preimage; `None` marks an
/// unstable partition (not an error).
pub fn decompose_stable(n: usize, p: i64, big: &Partition) -> Option<StableDecomp> {
    let total = big.size() as i64;
    let mut found: Option<StableDecomp> = None;
    for (s, i) in sectors_with_stair(n, p, total) {
        let stair = match staircase(n, p, s, i) {
            Ok(st) => st,
            Err(_) => continue,
        };
        if stair.size() as i64 > total {
            continue;
        }
        if let Some((arms, legs)) = recover(n, i, &stair, big) {
            let dec = StableDecomp { s, i, arms, legs };
            match &found {
                None => found = Some(dec),
                // ambiguity means we are outside the stable zone
                Some(prev) if *prev != dec => return None,
                _ => {}
            }
        }
    }
    found
}

/// Sectors (s, i) with a staircase of size <= `max` (ns >= i+p only).
fn sectors_with_stair(n: usize, p: i64, max: i64) -> Vec<(i64, i64)> {
    let mut out = Vec::new();
    if n < 2 {
        return out;
    }
    let m = n as i64 - 1;
    for i in 0..=n as i64 - 2 {
        let mut s = if n as i64 > 0 { (i + p).div_euclid(n as i64) } else { 0 };
        // smallest s with the congruence and ns >= i+p
        while (s - i - p).rem_euclid(m) != 0 || n as i64 * s < i + p {
            s += 1;
        }
        loop {
            match staircase(n, p, s, i) {
                Ok(st) if (st.size() as i64) <= max => out.push((s, i)),
                _ => break,
            }
            s += m;
        }
    }
    out
}

/// Exact count of partitions of `total` boxes whose n=2 cweight (color
/// offset 0) equals `s`, by dynamic programming over rows. Used as the
/// independent census oracle at sizes where enumeration is impossible.
pub fn count_partitions_by_cweight2(total: u64, s: i64) -> u64 {
    // a row of odd length at odd row index contributes -1, at even index +1
    const CAP: i64 = 25; // |prefix cweight| bound, ample for total <= 400
    let width = (2 * CAP + 1) as usize;
    let t = total as usize;
    // memo[budget][last][parity] -> distribution of suffix cweight
    let mut memo: Vec<Option<Vec<u64>>> = vec![None; (t + 1) * (t + 1) * 2];
    let idx = |b: usize, l: usize, par: usize| (b * (t + 1) + l) * 2 + par;

    fn go(
        b: usize,
        l: usize,
        par: usize,
        t: usize,
        width: usize,
        memo: &mut Vec<Option<Vec<u64>>>,
        idx: &dyn Fn(usize, usize, usize) -> usize,
    ) -> Vec<u64> {
        if let Some(v) = &memo[idx(b, l, par)] {
            return v.clone();
        }
        let mut out = vec![0u64; width];
        if b == 0 {
            out[width / 2] = 1;
        } else {
            for len in 1..=l.min(b) {
                let contrib: i64 = if len % 2 == 1 {
                    if par == 1 {
                        -1
                    } else {
                        1
                    }
                } else {
                    0
                };
                let sub = go(b - len, len, 1 - par, t, width, memo, idx);
                for (k, c) in sub.iter().enumerate() {
                    if *c == 0 {
                        continue;
                    }
                    let nk = k as i64 + contrib;
                    if nk >= 0 && (nk as usize) < width {
                        out[nk as usize] += c;
                    }
                }
            }
        }
        memo[idx(b, l, par)] = Some(out.clone());
        out
    }

    let dist = go(t, t, 1, t, width, &mut memo, &idx);
    let k = s + CAP;
    if k < 0 || k as usize >= width {
        0
    } else {
        dist[k as usize]
    }
}

/// Number of pairs of partitions with total size k.
pub fn partition_pairs(k: u64) -> u64 {
    let p: Vec<u64> = (0..=k).map(count_partitions).collect();
    (0..=k).map(|a| p[a as usize] * p[(k - a) as usize]).sum()
}

/// p(n) by Euler's pentagonal recurrence would be overkill; sizes here are
/// small enough for the bounded-part DP.
pub fn count_partitions(total: u64) -> u64 {
    let t = total as usize;
    let mut dp = vec![0u64; t + 1];
    dp[0] = 1;
    for part in 1..=t {
        for b in part..=t {
            dp[b] += dp[b - part];
        }
    }
    dp[t]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combin::{cweight, partitions_up_to};

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn staircase_small() {
        assert_eq!(staircase(2, 0, 1, 0).unwrap(), p(&[2, 1]));
        assert_eq!(staircase(2, 0, 0, 0).unwrap(), Partition::empty());
        assert_eq!(staircase(3, 0, 1, 1).unwrap(), p(&[2, 1, 1]));
        assert_eq!(staircase(2, 0, 2, 0).unwrap(), p(&[4, 3, 2, 1]));
        assert!(staircase(3, 0, 1, 0).is_err()); // congruence violated
    }

    #[test]
    fn embed_examples() {
        // arms/legs empty embeds to the staircase itself
        assert_eq!(
            embed_stable(2, 0, 1, 0, &Partition::empty(), &Partition::empty()).unwrap(),
            p(&[2, 1])
        );
        // n=2, s=1: one arm box doubles into a domino on row 1
        assert_eq!(
            embed_stable(2, 0, 1, 0, &p(&[1]), &Partition::empty()).unwrap(),
            p(&[4, 1])
        );
        // the figure-2 diagram: s=2, arms (3,3,1), legs (2,1,1), 32 boxes
        let big = embed_stable(2, 0, 2, 0, &p(&[3, 3, 1]), &p(&[2, 1, 1])).unwrap();
        assert_eq!(big.size(), 10 + 2 * 7 + 2 * 4);
        assert_eq!(big, p(&[10, 9, 4, 3, 3, 1, 1, 1]));
        // cweight is preserved by dominoes and strips
        assert_eq!(cweight(&big, 0, 2).unwrap(), vec![2]);
    }

    #[test]
    fn embed_rejects_bad_sectors() {
        // congruence violated
        assert!(embed_stable(3, 0, 2, 1, &Partition::empty(), &Partition::empty()).is_err());
        // negative sectors have no staircase formula
        assert!(embed_stable(2, 0, -1, 0, &Partition::empty(), &Partition::empty()).is_err());
    }

    #[test]
    fn stable_zone_matches_row_and_column_laws() {
        // with s beyond every part count the construction agrees with the
        // row law rows_j += 2*arms_j and the column law
        // cols_y = staircase cols + 2*legs_y (n = 2)
        for arms in partitions_up_to(3) {
            for legs in partitions_up_to(3) {
                let s = (arms.size() + legs.size()) as i64 + 1;
                let stair = staircase(2, 0, s, 0).unwrap();
                let big = embed_stable(2, 0, s, 0, &arms, &legs).unwrap();
                let k = arms.len().max(legs.len());
                for j in 1..=k {
                    assert_eq!(big.part(j), stair.part(j) + 2 * arms.part(j));
                }
                let bd = big.dual();
                let sd = stair.dual();
                for y in 1..=k {
                    assert_eq!(bd.part(y), sd.part(y) + 2 * legs.part(y));
                }
            }
        }
    }

    #[test]
    fn decompose_examples() {
        assert_eq!(
            decompose_stable(2, 0, &p(&[2, 1])),
            Some(StableDecomp { s: 1, i: 0, arms: Partition::empty(), legs: Partition::empty() })
        );
        assert_eq!(
            decompose_stable(2, 0, &p(&[4, 1])),
            Some(StableDecomp { s: 1, i: 0, arms: p(&[1]), legs: Partition::empty() })
        );
    }

    #[test]
    fn embed_decompose_roundtrip() {
        for s in 2..4i64 {
            for arms in partitions_up_to(3) {
                for legs in partitions_up_to(2) {
                    if let Ok(big) = embed_stable(2, 0, s, 0, &arms, &legs) {
                        let dec = decompose_stable(2, 0, &big).expect("stable");
                        assert_eq!(dec.s, s);
                        assert_eq!(dec.arms, arms);
                        assert_eq!(dec.legs, legs);
                    }
                }
            }
        }
    }

    #[test]
    fn census_five_stable_partitions() {
        // s=2, k=2 for n=2: partitions of 10+4 boxes with cweight 2
        let mut stable = 0;
        let mut by_cweight = 0;
        for lam in partitions_up_to(14) {
            if lam.size() != 14 {
                continue;
            }
            if cweight(&lam, 0, 2).unwrap() == vec![2] {
                by_cweight += 1;
                let dec = decompose_stable(2, 0, &lam).expect("in the stable zone");
                assert_eq!(dec.s, 2);
                assert_eq!(dec.arms.size() + dec.legs.size(), 2);
                stable += 1;
            }
        }
        assert_eq!(stable, 5);
        assert_eq!(by_cweight, 5);
        assert_eq!(partition_pairs(2), 5);
        assert_eq!(count_partitions_by_cweight2(14, 2), 5);
    }

    #[test]
    fn cweight_count_dp_matches_enumeration() {
        for total in 0..=12u64 {
            for s in -3..=3i64 {
                let direct = partitions_up_to(total)
                    .into_iter()
                    .filter(|lam| {
                        lam.size() == total && cweight(lam, 0, 2).unwrap() == vec![s]
                    })
                    .count() as u64;
                assert_eq!(count_partitions_by_cweight2(total, s), direct, "N={total} s={s}");
            }
        }
    }
}
