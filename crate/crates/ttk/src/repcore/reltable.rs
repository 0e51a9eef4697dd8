//! Structure constants of the defining relations for every rank.

use crate::symrat::{Mono, Rat};

/// The polynomials g_{i,j}(z,w) as monomial lists, the constants d_{i,j},
/// the Cartan pairing and the H-commutator coefficients. Parameterized by
/// the three deformation monomials so that the fused subalgebras, with
/// their shifted parameters, share the same table code.
#[derive(Clone, Debug)]
pub struct RelTable {
    pub n: usize,
    pub q1: Mono,
    pub q2: Mono,
    pub q3: Mono,
    /// q itself (q2 = q^2); stays the ambient q under fusion.
    pub q: Mono,
}

/// A polynomial in two variables as (deg in first, deg in second, coeff).
pub type PairPoly = Vec<(i32, i32, Rat)>;

impl RelTable {
    pub fn standard(n: usize, scale: i32) -> Self {
        RelTable {
            n,
            q1: Mono::q1_pow(1, scale),
            q2: Mono::q2_pow(1, scale),
            q3: Mono::q3_pow(1, scale),
            q: Mono::q_pow(scale),
        }
    }

    /// Table of the rank-(n-1) subalgebra generated by the fused currents:
    /// q1 -> q1^{n/(n-1)}, q2 -> q2, q3 -> q3 q1^{-1/(n-1)}. The exponent
    /// scale must be divisible by n-1.
    pub fn fused(n: usize, scale: i32) -> Self {
        assert!(n >= 2);
        let m = (n - 1) as i32;
        assert!(scale % m == 0, "scale must refine the q1^(1/(n-1)) lattice");
        let frac = scale / m;
        RelTable {
            n: n - 1,
            q1: Mono::q1_pow(scale + frac, 1),
            q2: Mono::q2_pow(scale, 1),
            q3: Mono::q3_pow(scale, 1).mul(&Mono::q1_pow(-frac, 1)),
            q: Mono::q_pow(scale),
        }
    }

    /// Variant tables for n = 2: the chain fused with q1 shifts ("1") has
    /// parameters (q1^2, q2, q3 q1^{-1}); the q3-shifted chain ("3") swaps
    /// the roles of q1 and q3.
    pub fn fused_n2_variant(variant: u8, scale: i32) -> Self {
        match variant {
            1 => RelTable {
                n: 1,
                q1: Mono::q1_pow(2, scale),
                q2: Mono::q2_pow(1, scale),
                q3: Mono::q3_pow(1, scale).mul(&Mono::q1_pow(-1, scale)),
                q: Mono::q_pow(scale),
            },
            3 => RelTable {
                n: 1,
                q1: Mono::q1_pow(1, scale).mul(&Mono::q3_pow(-1, scale)),
                q2: Mono::q2_pow(1, scale),
                q3: Mono::q3_pow(2, scale),
                q: Mono::q_pow(scale),
            },
            _ => panic!("variant must be 1 or 3"),
        }
    }

    pub fn rq(&self) -> Rat {
        Rat::from_mono(self.q)
    }

    fn rq1(&self) -> Rat {
        Rat::from_mono(self.q1)
    }

    fn rq2(&self) -> Rat {
        Rat::from_mono(self.q2)
    }

    fn rq3(&self) -> Rat {
        Rat::from_mono(self.q3)
    }

    fn kronmod(&self, i: usize, j: usize, shift: i64) -> bool {
        (i as i64 - j as i64 - shift).rem_euclid(self.n as i64) == 0
    }

    /// g_{i,j}(z, w).
    pub fn g(&self, i: usize, j: usize) -> PairPoly {
        let one = Rat::one();
        match self.n {
            1 => {
                // (z - q1 w)(z - q2 w)(z - q3 w)
                let e1 = &(&self.rq1() + &self.rq2()) + &self.rq3();
                let e2 = &(&(&self.rq1() * &self.rq2())
                    + &(&self.rq1() * &self.rq3()))
                    + &(&self.rq2() * &self.rq3());
                let e3 = &(&self.rq1() * &self.rq2()) * &self.rq3();
                vec![
                    (3, 0, one),
                    (2, 1, -e1),
                    (1, 2, e2),
                    (0, 3, -e3),
                ]
            }
            2 => {
                if i == j {
                    vec![(1, 0, one), (0, 1, -self.rq2())]
                } else {
                    // (z - q1 w)(z - q3 w)
                    vec![
                        (2, 0, one),
                        (1, 1, -(&self.rq1() + &self.rq3())),
                        (0, 2, &self.rq1() * &self.rq3()),
                    ]
                }
            }
            _ => {
                if i == j {
                    vec![(1, 0, one), (0, 1, -self.rq2())]
                } else if self.kronmod(i, j, -1) {
                    vec![(1, 0, one), (0, 1, -self.rq1())]
                } else if self.kronmod(i, j, 1) {
                    vec![(1, 0, one), (0, 1, -self.rq3())]
                } else {
                    vec![(1, 0, one.clone()), (0, 1, -one)]
                }
            }
        }
    }

    /// The constants d_{i,j}.
    pub fn d_const(&self, i: usize, j: usize) -> Rat {
        match self.n {
            1 => Rat::one(),
            2 => {
                if i == j {
                    Rat::one()
                } else {
                    -Rat::one()
                }
            }
            _ => {
                // d = q1 q (from q1 = d q^{-1})
                let d = Rat::from_mono(self.q1.mul(&self.q));
                if self.kronmod(i, j, -1) {
                    d.inv()
                } else if self.kronmod(i, j, 1) {
                    d
                } else {
                    Rat::one()
                }
            }
        }
    }

    /// Coefficient in [H_{i,r}, E_j(z)] = c(i,j,r) z^r E_j(z) q^{(r-|r|)c/2}.
    pub fn h_coeff(&self, i: usize, j: usize, r: i32) -> Rat {
        let q = self.rq();
        let qi = q.inv();
        let qr = |x: i32| -> Rat {
            // [x] = (q^x - q^{-x})/(q - q^{-1})
            &(&q.pow(x) - &qi.pow(x)) / &(&q - &qi)
        };
        let rr = Rat::from_int(r as i64);
        match self.n {
            1 => {
                // b(r) = [r](q^r + q^{-r} - d^r - d^{-r})/r
                let d = Rat::from_mono(self.q1.mul(&self.q));
                let s = &(&(&q.pow(r) + &qi.pow(r)) - &d.pow(r)) - &d.pow(-r);
                &(&qr(r) * &s) / &rr
            }
            2 => {
                if i == j {
                    // [r](q^r + q^{-r})/r
                    &(&qr(r) * &(&q.pow(r) + &qi.pow(r))) / &rr
                } else {
                    let d = Rat::from_mono(self.q1.mul(&self.q));
                    -(&(&qr(r) * &(&d.pow(r) + &d.pow(-r))) / &rr)
                }
            }
            _ => {
                let a = self.cartan(i, j);
                if a == 0 {
                    return Rat::zero();
                }
                let d = Rat::from_mono(self.q1.mul(&self.q));
                let m = self.m_skew(i, j);
                &(&qr(r * a as i32) / &rr) * &d.pow(-r * m as i32)
            }
        }
    }

    /// Cartan matrix of affine type A_{n-1}^{(1)} (n >= 3).
    pub fn cartan(&self, i: usize, j: usize) -> i64 {
        match self.n {
            1 => 0,
            2 => {
                if i == j {
                    2
                } else {
                    -2
                }
            }
            _ => {
                if i == j {
                    2
                } else if self.kronmod(i, j, 1) || self.kronmod(i, j, -1) {
                    -1
                } else {
                    0
                }
            }
        }
    }

    /// Skew-symmetric matrix with m_{i+1,i} = 1 (n >= 3).
    pub fn m_skew(&self, i: usize, j: usize) -> i64 {
        if self.n < 3 {
            return 0;
        }
        if self.kronmod(i, j, 1) {
            1
        } else if self.kronmod(i, j, -1) {
            -1
        } else {
            0
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symrat::rq;

    #[test]
    fn h_coeff_diagonal_is_qnum2() {
        for n in [2usize, 3, 4] {
            let t = RelTable::standard(n, 1);
            let want = &rq() + &rq().inv();
            assert_eq!(t.h_coeff(1 % n.max(2), 1 % n.max(2), 1), want);
            assert_eq!(t.h_coeff(0, 0, -1), want);
        }
    }

    #[test]
    fn n1_h_coeff() {
        let t = RelTable::standard(1, 1);
        let d = Rat::from_mono(Mono::d_pow(1));
        let want = &(&(&rq() + &rq().inv()) - &d) - &d.inv();
        assert_eq!(t.h_coeff(0, 0, 1), want);
        assert_eq!(t.h_coeff(0, 0, -1), want);
    }

    #[test]
    fn fused_table_parameters_multiply_to_one() {
        // q1 q2 q3 = 1 must persist after the tilde substitution
        for n in [2usize, 3] {
            let t = RelTable::fused(n, (n - 1) as i32);
            assert!(t.q1.mul(&t.q2).mul(&t.q3).is_one());
        }
        for v in [1u8, 3] {
            let t = RelTable::fused_n2_variant(v, 1);
            assert!(t.q1.mul(&t.q2).mul(&t.q3).is_one());
        }
    }
}
