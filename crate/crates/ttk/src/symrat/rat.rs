//! Canonical rational functions in q, d, u1..u4 over the integers.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use super::gcd::{div_exact, gcd_poly};
use super::lpoly::LPoly;
use super::mono::{Mono, Var, ALL_VARS};

/// Exact rational function `num/den`.
///
/// Canonical form: `den` is a true polynomial with no monomial content,
/// positive leading coefficient, gcd(num, den) = 1 and joint integer
/// content 1. Structural equality then decides mathematical equality.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Rat {
    num: LPoly,
    den: LPoly,
}

impl Rat {
    pub fn zero() -> Self {
        Rat { num: LPoly::zero(), den: LPoly::one() }
    }

    pub fn one() -> Self {
        Rat { num: LPoly::one(), den: LPoly::one() }
    }

    pub fn from_int(c: i64) -> Self {
        Rat { num: LPoly::from_int(c), den: LPoly::one() }
    }

    pub fn from_mono(m: Mono) -> Self {
        Rat { num: LPoly::from_mono(m), den: LPoly::one() }
    }

    pub fn from_poly(p: LPoly) -> Self {
        Rat { num: p, den: LPoly::one() }
    }

    /// `c * m` for integer c.
    pub fn term(c: i64, m: Mono) -> Self {
        Rat { num: LPoly::from_term(m, BigInt::from(c)), den: LPoly::one() }
    }

    /// Canonicalize `n/d`. Panics on zero denominator.
    pub fn new(n: LPoly, d: LPoly) -> Self {
        assert!(!d.is_zero(), "division by zero");
        if n.is_zero() {
            return Rat::zero();
        }
        // strip Laurent monomial content: d becomes a true polynomial with
        // zero minimum exponent in every variable, the shift lands on n
        let dm = d.mono_content();
        let den0 = d.mul_term(&dm.inv(), &BigInt::one());
        let num0 = n.mul_term(&dm.inv(), &BigInt::one());
        // numerator may be Laurent; pull its content out, reduce, put back
        let nm = num0.mono_content();
        let num1 = num0.mul_term(&nm.inv(), &BigInt::one());

        let g = gcd_poly(&num1, &den0);
        let (mut num2, mut den2) = if g.is_one() {
            (num1, den0)
        } else {
            (
                div_exact(&num1, &g).expect("gcd divides numerator"),
                div_exact(&den0, &g).expect("gcd divides denominator"),
            )
        };
        // joint integer content
        let ic = num_integer::gcd(num2.int_content(), den2.int_content());
        if !ic.is_one() {
            num2 = num2.div_int_exact(&ic);
            den2 = den2.div_int_exact(&ic);
        }
        // positive leading coefficient on the denominator
        if den2.leading().map(|(_, c)| c.is_negative()).unwrap_or(false) {
            num2 = num2.neg();
            den2 = den2.neg();
        }
        // the gcd reduction cannot reintroduce monomial content in den2
        // (gcd strips none), but dividing may: renormalize shift if needed
        let dm2 = den2.mono_content();
        let (num3, den3) = if dm2.is_one() {
            (num2, den2)
        } else {
            (num2.mul_term(&dm2.inv(), &BigInt::one()), den2.mul_term(&dm2.inv(), &BigInt::one()))
        };
        Rat { num: num3.mul_term(&nm, &BigInt::one()), den: den3 }
    }

    pub fn num(&self) -> &LPoly {
        &self.num
    }

    pub fn den(&self) -> &LPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn inv(&self) -> Rat {
        assert!(!self.is_zero(), "division by zero");
        Rat::new(self.den.clone(), self.num.clone())
    }

    pub fn pow(&self, e: i32) -> Rat {
        if e == 0 {
            return Rat::one();
        }
        let base = if e < 0 { self.inv() } else { self.clone() };
        let mut acc = Rat::one();
        for _ in 0..e.abs() {
            acc = &acc * &base;
        }
        acc
    }

    /// Substitute exact rational numbers for all six variables.
    /// Returns `None` when the denominator vanishes at the point.
    pub fn eval(&self, point: &dyn Fn(Var) -> BigRational) -> Option<BigRational> {
        fn eval_poly(p: &LPoly, point: &dyn Fn(Var) -> BigRational) -> BigRational {
            let mut acc = BigRational::zero();
            for (m, c) in p.terms() {
                let mut t = BigRational::from(c.clone());
                for var in ALL_VARS {
                    let e = m.exp(var);
                    if e != 0 {
                        t *= point(var).pow(e);
                    }
                }
                acc += t;
            }
            acc
        }
        let dv = eval_poly(&self.den, point);
        if dv.is_zero() {
            return None;
        }
        Some(eval_poly(&self.num, point) / dv)
    }

    /// Substitute q := 1, keeping d and the u's. `None` on a pole at q = 1.
    pub fn eval_q1(&self) -> Option<Rat> {
        fn subst_q1(p: &LPoly) -> LPoly {
            // clear negative q-exponents first (q := 1 kills them anyway)
            let mq = p.min_exp(Var::Q).min(0);
            let shifted = p.mul_term(&Mono::q_pow(-mq), &BigInt::one());
            shifted.subst(Var::Q, &LPoly::one())
        }
        let den = subst_q1(&self.den);
        if den.is_zero() {
            return None;
        }
        Some(Rat::new(subst_q1(&self.num), den))
    }

    /// Map every exponent (q, d and u slots alike) by an integer factor,
    /// refining the exponent lattice for fractional parameter powers.
    pub fn scale_exponents(&self, k: i32) -> Rat {
        fn scale(p: &LPoly, k: i32) -> LPoly {
            LPoly::from_terms(p.terms().iter().map(|(m, c)| (m.pow(k), c.clone())).collect())
        }
        assert!(k > 0);
        Rat { num: scale(&self.num, k), den: scale(&self.den, k) }
    }
}

use std::cell::Cell;
thread_local! {
    pub static ADD_NS: Cell<u64> = const { Cell::new(0) };
    pub static MUL_NS: Cell<u64> = const { Cell::new(0) };
    pub static NEW_NS: Cell<u64> = const { Cell::new(0) };
}

/// Profiling counters (adds, muls, normalizations), nanoseconds.
pub fn rat_stats() -> (u64, u64, u64) {
    (ADD_NS.with(|c| c.get()), MUL_NS.with(|c| c.get()), NEW_NS.with(|c| c.get()))
}

impl Add for &Rat {
    type Output = Rat;
    fn add(self, rhs: &Rat) -> Rat {
        let t = std::time::Instant::now();
        let out = self.add_inner(rhs);
        ADD_NS.with(|c| c.set(c.get() + t.elapsed().as_nanos() as u64));
        out
    }
}

impl Rat {
    fn add_inner(&self, rhs: &Rat) -> Rat {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return Rat::new(self.num.add(&rhs.num), self.den.clone());
        }
        let n = self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den));
        Rat::new(n, self.den.mul(&rhs.den))
    }
}

impl Sub for &Rat {
    type Output = Rat;
    fn sub(self, rhs: &Rat) -> Rat {
        self + &(-rhs)
    }
}

impl Neg for &Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat { num: self.num.neg(), den: self.den.clone() }
    }
}

impl Mul for &Rat {
    type Output = Rat;
    fn mul(self, rhs: &Rat) -> Rat {
        let t = std::time::Instant::now();
        let out = self.mul_inner(rhs);
        MUL_NS.with(|c| c.set(c.get() + t.elapsed().as_nanos() as u64));
        out
    }
}

impl Rat {
    fn mul_inner(&self, rhs: &Rat) -> Rat {
        if self.is_zero() || rhs.is_zero() {
            return Rat::zero();
        }
        if self.is_one() {
            return rhs.clone();
        }
        if rhs.is_one() {
            return self.clone();
        }
        // cross-reduce to keep intermediate products small
        let g1 = gcd_poly(&self.num, &rhs.den);
        let g2 = gcd_poly(&rhs.num, &self.den);
        let n1 = if g1.is_one() { self.num.clone() } else { div_exact(&self.num, &g1).unwrap() };
        let d2 = if g1.is_one() { rhs.den.clone() } else { div_exact(&rhs.den, &g1).unwrap() };
        let n2 = if g2.is_one() { rhs.num.clone() } else { div_exact(&rhs.num, &g2).unwrap() };
        let d1 = if g2.is_one() { self.den.clone() } else { div_exact(&self.den, &g2).unwrap() };
        Rat::new(n1.mul(&n2), d1.mul(&d2))
    }
}

impl Div for &Rat {
    type Output = Rat;
    fn div(self, rhs: &Rat) -> Rat {
        self * &rhs.inv()
    }
}

macro_rules! fwd_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Rat {
            type Output = Rat;
            fn $m(self, rhs: Rat) -> Rat {
                (&self).$m(&rhs)
            }
        }
    };
}
fwd_owned!(Add, add);
fwd_owned!(Sub, sub);
fwd_owned!(Mul, mul);
fwd_owned!(Div, div);

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        -(&self)
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        let np = self.num.num_terms() > 1;
        let dp = self.den.num_terms() > 1;
        match (np, dp) {
            (false, false) => write!(f, "{}/{}", self.num, self.den),
            (true, false) => write!(f, "({})/{}", self.num, self.den),
            (false, true) => write!(f, "{}/({})", self.num, self.den),
            (true, true) => write!(f, "({})/({})", self.num, self.den),
        }
    }
}

/// q as a rational function.
pub fn rq() -> Rat {
    Rat::from_mono(Mono::q_pow(1))
}

/// d as a rational function.
pub fn rd() -> Rat {
    Rat::from_mono(Mono::d_pow(1))
}

/// u1 as a rational function.
pub fn ru() -> Rat {
    Rat::from_mono(Mono::u_pow(0, 1))
}

/// `[2] = q + q^{-1}`.
pub fn qnum2() -> Rat {
    &rq() + &rq().inv()
}

/// `q - q^{-1}`.
pub fn q_minus_qinv() -> Rat {
    &rq() - &rq().inv()
}

/// psi(z) = (q - q^{-1} z)/(1 - z) evaluated at an exact argument.
/// Errors on the pole at z = 1.
pub fn psi(arg: &Rat) -> Result<Rat, String> {
    let one = Rat::one();
    let den = &one - arg;
    if den.is_zero() {
        return Err("pole of psi".into());
    }
    let num = &rq() - &(&rq().inv() * arg);
    Ok(&num / &den)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalize_poly_division() {
        // (q^2 - 1)/(q - 1) = q + 1
        let q = LPoly::from_mono(Mono::q_pow(1));
        let n = q.mul(&q).sub(&LPoly::one());
        let d = q.sub(&LPoly::one());
        let r = Rat::new(n, d);
        assert_eq!(r, Rat::from_poly(q.add(&LPoly::one())));
    }

    #[test]
    fn normalize_zero() {
        // q - q^{-1}*q^2 = 0
        let n = LPoly::from_mono(Mono::q_pow(1))
            .sub(&LPoly::from_mono(Mono::q_pow(-1)).mul(&LPoly::from_mono(Mono::q_pow(2))));
        let d = LPoly::one().sub(&LPoly::from_mono(Mono::q_pow(2)));
        assert!(Rat::new(n, d).is_zero());
    }

    #[test]
    fn normalize_with_monomial_content() {
        // (u^2 - q^2 u^2 d^2)/(u - q u d) = u (1 + q d)
        let u = Mono::u_pow(0, 1);
        let qd = Mono::new(1, 1);
        let n = LPoly::from_mono(u.pow(2)).sub(&LPoly::from_mono(u.pow(2).mul(&qd.pow(2))));
        let d = LPoly::from_mono(u).sub(&LPoly::from_mono(u.mul(&qd)));
        let got = Rat::new(n, d);
        let want =
            Rat::from_poly(LPoly::from_mono(u).add(&LPoly::from_mono(u.mul(&qd))));
        assert_eq!(got, want);
    }

    #[test]
    fn psi_values() {
        // psi(0) = q, psi(q^2) = 0
        assert_eq!(psi(&Rat::zero()).unwrap(), rq());
        assert!(psi(&Rat::from_mono(Mono::q_pow(2))).unwrap().is_zero());
        assert!(psi(&Rat::one()).is_err());
    }

    #[test]
    fn idempotent_normalization() {
        let r = Rat::new(
            LPoly::from_mono(Mono::new(3, -2)).add(&LPoly::from_int(5)),
            LPoly::from_mono(Mono::q_pow(1)).add(&LPoly::from_int(1)),
        );
        let again = Rat::new(r.num().clone(), r.den().clone());
        assert_eq!(r, again);
    }

    #[test]
    fn field_inverse() {
        let a = &(&rq() + &rd()) / &(&ru() - &Rat::from_int(3));
        assert!((&a * &a.inv()).is_one());
    }
}
