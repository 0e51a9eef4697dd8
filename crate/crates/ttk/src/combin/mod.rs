//! Colored-partition combinatorics: corners, staircases, stable-sector
//! embeddings, interlacing conditions and graded character series.

pub mod charser;
pub mod partition;
pub mod stable;

pub use charser::{fock_character, CellContribution, CharSeries, ContribDict};
pub use partition::{partitions_up_to, Partition};
pub use stable::{decompose_stable, embed_stable, staircase, StableDecomp};

/// Interlacing test for a tuple of partitions:
/// `lambda^{(i)}_j >= lambda^{(i+1)}_{j+b_i} - a_i` for all i, j >= 1.
/// Indices beyond the length of a partition read 0.
pub fn check_interlacing(tuple: &[Partition], a: &[i64], b: &[i64]) -> bool {
    assert!(!tuple.is_empty());
    assert_eq!(a.len() + 1, tuple.len());
    assert_eq!(b.len() + 1, tuple.len());
    for i in 0..tuple.len() - 1 {
        let lo = &tuple[i];
        let hi = &tuple[i + 1];
        // rows of hi shifted by b_i must fit under lo up to the slack a_i;
        // beyond both lengths the condition reads 0 >= 0 - a_i
        let rows = hi.len().max(lo.len()) + b[i].unsigned_abs() as usize + 1;
        for j in 1..=rows {
            let lhs = lo.part(j) as i64;
            let jr = j as i64 + b[i];
            let rhs = if jr >= 1 { hi.part(jr as usize) as i64 } else {
                // b_i < 0 reads a row above the first, which is unbounded;
                // the paper's data always has b_i >= 0, treat as +infinity
                i64::MAX / 2
            };
            if lhs < rhs - a[i] {
                return false;
            }
        }
    }
    true
}

/// cweight of a colored partition as coefficients of the simple roots
/// alpha_1..alpha_{n-1}: sum over colors c of (count_c - count_0) alpha_c.
/// Errors for n = 1 where the weight lattice is trivial.
pub fn cweight(lambda: &Partition, k: i64, n: usize) -> Result<Vec<i64>, String> {
    if n < 2 {
        return Err("no nontrivial weight lattice".into());
    }
    let counts = lambda.color_counts(k, n);
    Ok((1..n).map(|c| counts[c] - counts[0]).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn interlacing_examples() {
        // all-empty tuple
        assert!(check_interlacing(&[p(&[]), p(&[])], &[0], &[0]));
        // (2,1) vs (2,2) with a=b=0 fails at row 2
        assert!(!check_interlacing(&[p(&[2, 1]), p(&[2, 2])], &[0], &[0]));
        // (1) vs (2) with a=1 passes: 1 >= 2 - 1
        assert!(check_interlacing(&[p(&[1]), p(&[2])], &[1], &[0]));
        // same with a=0 fails
        assert!(!check_interlacing(&[p(&[1]), p(&[2])], &[0], &[0]));
        // shift b=1 compares against the next row down
        assert!(check_interlacing(&[p(&[1]), p(&[1, 1])], &[0], &[1]));
    }

    #[test]
    fn cweight_examples() {
        assert_eq!(cweight(&p(&[]), 0, 2).unwrap(), vec![0]);
        // (2,1) at k=0, n=2: two color-1 cells, one color-0
        assert_eq!(cweight(&p(&[2, 1]), 0, 2).unwrap(), vec![1]);
        // single box of color 0
        assert_eq!(cweight(&p(&[1]), 0, 2).unwrap(), vec![-1]);
        assert!(cweight(&p(&[1]), 0, 1).is_err());
        // (2,1,1) at k=0, n=3 has colors {0,2,1,2}: (c1-c0, c2-c0) = (0,1)
        assert_eq!(cweight(&p(&[2, 1, 1]), 0, 3).unwrap(), vec![0, 1]);
    }
}
