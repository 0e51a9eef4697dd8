//! Sector bookkeeping: the box count rho and root-lattice weight w of the
//! extremal vector of each cweight sector.

/// Exact box count of the sector (s, i) extremal vector in the color-p
/// module: (n s + n - i - p - 1)(n s + i - p) / (2(n-1)). Defined for all
/// integer s subject to the congruence s = i + p (mod n-1).
pub fn rho(n: usize, s: i64, i: i64, p: i64) -> Result<i64, String> {
    let nn = n as i64;
    if n < 2 || i < 0 || i > nn - 2 {
        return Err("sector color out of range".into());
    }
    if (s - i - p).rem_euclid(nn - 1) != 0 {
        return Err("sector congruence violated".into());
    }
    let a = nn * s + nn - i - p - 1;
    let b = nn * s + i - p;
    let num = a * b;
    if num % (2 * (nn - 1)) != 0 {
        return Err("non-integer sector degree".into());
    }
    Ok(num / (2 * (nn - 1)))
}

/// Root-lattice weight of the sector (s, i) extremal vector:
/// eta^{(p)} + eta_i + (s - i - p)/(n-1) eta, as coefficients of
/// alpha_1..alpha_{n-1}.
pub fn weight_w(n: usize, s: i64, i: i64, p: i64) -> Result<Vec<i64>, String> {
    let nn = n as i64;
    if n < 2 || i < 0 || i > nn - 2 {
        return Err("sector color out of range".into());
    }
    if (s - i - p).rem_euclid(nn - 1) != 0 {
        return Err("sector congruence violated".into());
    }
    let t = (s - i - p) / (nn - 1);
    let mut w = vec![0i64; n - 1];
    // eta = sum j alpha_j
    for (j, slot) in w.iter_mut().enumerate() {
        *slot += t * (j as i64 + 1);
    }
    // eta^{(p)} = sum_{j<p} j alpha_j + p sum_{j>=p} alpha_j
    let pr = p.rem_euclid(nn); // the color offset lives mod n
    for j in 1..nn {
        let c = if j < pr { j } else { pr };
        w[(j - 1) as usize] += c;
    }
    // eta_i = sum_{j=1}^{i} (i - j + 1) alpha_{n-j}
    for j in 1..=i {
        w[(nn - j - 1) as usize] += i - j + 1;
    }
    Ok(w)
}

/// All sectors (s, i) with rho <= max, enumerated deterministically. The
/// quadratic growth of rho in s bounds the scan provably: we walk s in both
/// directions from the vertex until rho exceeds max.
pub fn sectors_up_to(n: usize, p: i64, max: i64) -> Vec<(i64, i64)> {
    let nn = n as i64;
    let m = nn - 1;
    let mut out = Vec::new();
    // |rho| exceeds max once |ns - p| is past the parabola edge, so a window
    // of half-width max + 2n + 2 around the congruence base provably covers
    // every contributing sector
    let half = max.max(0) + 2 * nn + 2;
    for i in 0..=nn - 2 {
        let base = (i + p).rem_euclid(m);
        let mut s = base - m * half;
        let mut seen_small = false;
        while s <= base + m * half {
            let r = rho(n, s, i, p).expect("congruence holds by construction");
            if r <= max {
                out.push((s, i));
                seen_small = true;
            } else if seen_small {
                break; // past the right edge of the parabola
            }
            s += m;
        }
    }
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combin::{cweight, staircase};

    #[test]
    fn rho_examples() {
        // n=2: rho = s(2s+1)
        assert_eq!(rho(2, 1, 0, 0).unwrap(), 3);
        assert_eq!(rho(2, -1, 0, 0).unwrap(), 1);
        assert_eq!(rho(2, 2, 0, 0).unwrap(), 10);
        // n=3 sector (1,1): four boxes
        assert_eq!(rho(3, 1, 1, 0).unwrap(), 4);
        assert_eq!(rho(3, 0, 0, 0).unwrap(), 0);
        assert!(rho(3, 0, 1, 0).is_err());
    }

    #[test]
    fn weight_examples() {
        assert_eq!(weight_w(2, 0, 0, 0).unwrap(), vec![0]);
        // n=2: w(s,0,0) = s alpha_1 and the same at p=1
        for s in -3..=3 {
            assert_eq!(weight_w(2, s, 0, 0).unwrap(), vec![s]);
            assert_eq!(weight_w(2, s, 0, 1).unwrap(), vec![s]);
        }
        // n=3 sector (1,1): alpha_2
        assert_eq!(weight_w(3, 1, 1, 0).unwrap(), vec![0, 1]);
        // negative sector (-1,1): one color-0 box
        assert_eq!(weight_w(3, -1, 1, 0).unwrap(), vec![-1, -1]);
    }

    #[test]
    fn staircase_size_and_weight_match_formulas() {
        // |staircase| = rho and cweight(staircase) = w wherever the
        // staircase formula applies (ns >= i+p), up to ns - p <= 30
        for n in 2..=5usize {
            for p in 0..n as i64 {
                for i in 0..=(n as i64 - 2) {
                    let mut s = -5;
                    while (n as i64) * s - p <= 30 {
                        if (s - i - p).rem_euclid(n as i64 - 1) == 0
                            && (n as i64) * s >= i + p
                        {
                            let st = staircase(n, p, s, i).unwrap();
                            assert_eq!(
                                st.size() as i64,
                                rho(n, s, i, p).unwrap(),
                                "size n={n} p={p} s={s} i={i}"
                            );
                            assert_eq!(
                                cweight(&st, p, n).unwrap(),
                                weight_w(n, s, i, p).unwrap(),
                                "cweight n={n} p={p} s={s} i={i}"
                            );
                        }
                        s += 1;
                    }
                }
            }
        }
    }

    #[test]
    fn sector_enumeration_closed() {
        // every sector with rho <= max is found, verified independently
        for (n, p, max) in [(2usize, 0i64, 12i64), (3, 1, 10), (4, 2, 8)] {
            let got = sectors_up_to(n, p, max);
            let mut want = Vec::new();
            for i in 0..=(n as i64 - 2) {
                for s in -60..=60 {
                    if (s - i - p).rem_euclid(n as i64 - 1) == 0
                        && rho(n, s, i, p).unwrap() <= max
                    {
                        want.push((s, i));
                    }
                }
            }
            want.sort();
            assert_eq!(got, want, "n={n} p={p}");
        }
    }
}
