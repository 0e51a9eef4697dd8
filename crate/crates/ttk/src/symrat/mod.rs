//! Exact arithmetic over rational functions in the deformation parameters,
//! with one-variable truncated series for Cartan eigenvalue extraction.

pub mod gcd;
pub mod lpoly;
pub mod mono;
pub mod rat;
pub mod series;
pub mod zrat;

pub use lpoly::LPoly;
pub use mono::{Mono, Var};
pub use rat::{psi, q_minus_qinv, qnum2, rd, rq, ru, Rat};
pub use series::{Dir, Series};
pub use zrat::{ZPoly, ZRat};

/// Canonicalize a quotient of Laurent polynomials.
pub fn rf_normalize(num: LPoly, den: LPoly) -> Result<Rat, String> {
    if den.is_zero() {
        return Err("division by zero".into());
    }
    Ok(Rat::new(num, den))
}

/// First R+1 exact coefficients of a rational function of z.
pub fn series_expand(f: &ZRat, dir: Dir, order: usize) -> Result<Series, String> {
    f.expand(dir, order)
}

/// log(s / c_0) truncated at the order of `s`.
pub fn log_series(s: &Series) -> Result<Series, String> {
    s.log()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;
    use num_traits::Zero;

    fn u() -> Rat {
        ru()
    }

    #[test]
    fn series_geometric() {
        // 1/(1 - u z^{-1}) = 1 + u zeta + u^2 zeta^2 + u^3 zeta^3
        let f = ZRat::new(
            ZPoly::linear(Rat::zero(), Rat::one()),
            ZPoly::linear(-u(), Rat::one()),
        );
        let s = series_expand(&f, Dir::AtInfinity, 3).unwrap();
        for k in 0..=3 {
            assert_eq!(*s.coeff(k), u().pow(k as i32));
        }
    }

    #[test]
    fn series_constant() {
        let f = ZRat::constant(rq());
        let s = series_expand(&f, Dir::AtInfinity, 2).unwrap();
        assert_eq!(*s.coeff(0), rq());
        assert!(s.coeff(1).is_zero() && s.coeff(2).is_zero());
    }

    #[test]
    fn series_fock_lowest_weight() {
        // (q^{-1} - q u/z)/(1 - u/z) expands to
        // q^{-1} + (q^{-1}-q) u zeta + (q^{-1}-q) u^2 zeta^2 (long division)
        let f = ZRat::new(
            ZPoly::linear(-(&rq() * &u()), rq().inv()),
            ZPoly::linear(-u(), Rat::one()),
        );
        let s = series_expand(&f, Dir::AtInfinity, 2).unwrap();
        let gap = &rq().inv() - &rq();
        assert_eq!(*s.coeff(0), rq().inv());
        assert_eq!(*s.coeff(1), &gap * &u());
        assert_eq!(*s.coeff(2), &gap * &u().pow(2));
    }

    #[test]
    fn log_mercator() {
        // log(1 + a zeta) = a zeta - a^2/2 zeta^2
        let a = &rq() + &rd();
        let s = Series::new(
            Dir::AtInfinity,
            vec![Rat::one(), a.clone(), Rat::zero()],
        );
        let l = log_series(&s).unwrap();
        assert!(l.coeff(0).is_zero());
        assert_eq!(*l.coeff(1), a);
        assert_eq!(*l.coeff(2), &(&a * &a) * &(-Rat::from_int(2).inv()));
    }

    #[test]
    fn log_exp_roundtrip() {
        let s = Series::new(
            Dir::AtZero,
            vec![Rat::zero(), rq(), rd().inv(), u(), Rat::from_int(-3)],
        );
        let back = s.exp().unwrap().log().unwrap();
        assert_eq!(back, s);
    }

    #[test]
    fn log_of_lowest_weight_gives_h_eigenvalue() {
        // first log coefficient of the Fock lowest weight series is
        // (q - q^{-1}) * (-q u), the H_{0,1} eigenvalue on the vacuum
        let f = ZRat::new(
            ZPoly::linear(-(&rq() * &u()), rq().inv()),
            ZPoly::linear(-u(), Rat::one()),
        );
        let s = f.expand(Dir::AtInfinity, 2).unwrap();
        let l = s.log().unwrap();
        let want = &q_minus_qinv() * &(-(&rq() * &u()));
        assert_eq!(*l.coeff(1), want);
    }

    #[test]
    fn psi_inverse_constant_term() {
        // psi(q_2 u/z)^{-1} expanded at infinity starts at q^{-1}
        let f = ZRat::psi_of(Mono::q2_pow(1, 1).mul(&Mono::u_pow(0, 1))).inv();
        let s = f.expand(Dir::AtInfinity, 0).unwrap();
        assert_eq!(*s.coeff(0), rq().inv());
    }

    #[test]
    fn expansion_commutes_with_multiplication() {
        let f = ZRat::psi_of(Mono::u_pow(0, 1));
        let g = ZRat::psi_of(Mono::new(1, 1).mul(&Mono::u_pow(0, 1))).inv();
        let lhs = f.mul(&g).expand(Dir::AtInfinity, 4).unwrap();
        let rhs = f
            .expand(Dir::AtInfinity, 4)
            .unwrap()
            .mul(&g.expand(Dir::AtInfinity, 4).unwrap());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn randomized_evaluation_cross_check() {
        // substitute rationals for (q,d,u) on both sides of an identity
        let lhs = &(&rq().pow(2) - &Rat::one()) / &(&rq() - &Rat::one());
        let rhs = &rq() + &Rat::one();
        let pt = |v: Var| -> BigRational {
            match v {
                Var::Q => BigRational::new(7.into(), 3.into()),
                Var::D => BigRational::new(5.into(), 2.into()),
                Var::U(_) => BigRational::new(11.into(), 4.into()),
            }
        };
        assert_eq!(lhs.eval(&pt), rhs.eval(&pt));
        assert!(!lhs.eval(&pt).unwrap().is_zero());
    }
}
