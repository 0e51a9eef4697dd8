//! Rational functions in the spectral variable z over the `Rat` field.
//!
//! Cartan eigenvalues on weight vectors live here: they are finite products
//! of psi factors, i.e. ratios of polynomials in z whose coefficients are
//! exact rational functions of the deformation parameters.

use std::fmt;

use super::mono::Mono;
use super::rat::Rat;
use super::series::{Dir, Series};

/// Polynomial in z with `Rat` coefficients; index = power of z.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ZPoly {
    pub coeffs: Vec<Rat>,
}

impl ZPoly {
    pub fn zero() -> Self {
        ZPoly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        ZPoly { coeffs: vec![Rat::one()] }
    }

    pub fn constant(c: Rat) -> Self {
        if c.is_zero() {
            ZPoly::zero()
        } else {
            ZPoly { coeffs: vec![c] }
        }
    }

    /// a + b z
    pub fn linear(a: Rat, b: Rat) -> Self {
        let mut p = ZPoly { coeffs: vec![a, b] };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn add(&self, other: &ZPoly) -> ZPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = vec![Rat::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] = &coeffs[i] + c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            coeffs[i] = &coeffs[i] + c;
        }
        let mut p = ZPoly { coeffs };
        p.trim();
        p
    }

    pub fn mul(&self, other: &ZPoly) -> ZPoly {
        if self.is_zero() || other.is_zero() {
            return ZPoly::zero();
        }
        let mut coeffs = vec![Rat::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        let mut p = ZPoly { coeffs };
        p.trim();
        p
    }

    pub fn scale(&self, c: &Rat) -> ZPoly {
        if c.is_zero() {
            return ZPoly::zero();
        }
        ZPoly { coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    pub fn neg(&self) -> ZPoly {
        ZPoly { coeffs: self.coeffs.iter().map(|x| -x).collect() }
    }

    /// Euclidean remainder; divisor must be nonzero.
    fn rem(&self, other: &ZPoly) -> ZPoly {
        let mut r = self.clone();
        let lc = other.coeffs.last().expect("division by zero ZPoly");
        while !r.is_zero() && r.degree() >= other.degree() && !other.coeffs.is_empty() {
            if r.coeffs.len() < other.coeffs.len() {
                break;
            }
            let shift = r.coeffs.len() - other.coeffs.len();
            let f = r.coeffs.last().unwrap() / lc;
            for (i, c) in other.coeffs.iter().enumerate() {
                r.coeffs[shift + i] = &r.coeffs[shift + i] - &(&f * c);
            }
            r.trim();
        }
        r
    }

    fn gcd(a: &ZPoly, b: &ZPoly) -> ZPoly {
        let (mut r0, mut r1) = (a.clone(), b.clone());
        while !r1.is_zero() {
            let r = r0.rem(&r1);
            r0 = r1;
            r1 = r;
        }
        if let Some(lc) = r0.coeffs.last().cloned() {
            r0 = r0.scale(&lc.inv());
        }
        r0
    }

    fn div_exact(&self, other: &ZPoly) -> ZPoly {
        if self.is_zero() {
            return ZPoly::zero();
        }
        let lc = other.coeffs.last().expect("division by zero ZPoly");
        let mut r = self.clone();
        let mut q = vec![Rat::zero(); self.coeffs.len() - other.coeffs.len() + 1];
        while !r.is_zero() && r.coeffs.len() >= other.coeffs.len() {
            let shift = r.coeffs.len() - other.coeffs.len();
            let f = r.coeffs.last().unwrap() / lc;
            q[shift] = f.clone();
            for (i, c) in other.coeffs.iter().enumerate() {
                r.coeffs[shift + i] = &r.coeffs[shift + i] - &(&f * c);
            }
            r.trim();
        }
        assert!(r.is_zero(), "non-exact ZPoly division");
        let mut out = ZPoly { coeffs: q };
        out.trim();
        out
    }

    pub fn eval(&self, z: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * z) + c;
        }
        acc
    }
}

/// Rational function of z over `Rat`, kept unreduced: the coefficient-level
/// gcds that full normalization would need swell badly, while zero tests,
/// evaluation and series expansion are exact on the raw quotient. Equality
/// cross-multiplies; `reduced` gives the canonical monic-coprime form.
#[derive(Clone, Debug)]
pub struct ZRat {
    pub num: ZPoly,
    pub den: ZPoly,
}

impl PartialEq for ZRat {
    fn eq(&self, other: &Self) -> bool {
        self.num.mul(&other.den) == other.num.mul(&self.den)
    }
}

impl Eq for ZRat {}

impl ZRat {
    pub fn one() -> Self {
        ZRat { num: ZPoly::one(), den: ZPoly::one() }
    }

    pub fn constant(c: Rat) -> Self {
        ZRat { num: ZPoly::constant(c), den: ZPoly::one() }
    }

    pub fn new(num: ZPoly, den: ZPoly) -> Self {
        assert!(!den.is_zero(), "division by zero");
        if num.is_zero() {
            return ZRat { num: ZPoly::zero(), den: ZPoly::one() };
        }
        ZRat { num, den }
    }

    /// Canonical form: numerator and denominator coprime, denominator monic.
    pub fn reduced(&self) -> ZRat {
        if self.num.is_zero() {
            return ZRat { num: ZPoly::zero(), den: ZPoly::one() };
        }
        let g = ZPoly::gcd(&self.num, &self.den);
        let (mut n, mut d) = if g.degree() == 0 {
            (self.num.clone(), self.den.clone())
        } else {
            (self.num.div_exact(&g), self.den.div_exact(&g))
        };
        let lc = d.coeffs.last().unwrap().clone();
        if !lc.is_one() {
            let inv = lc.inv();
            n = n.scale(&inv);
            d = d.scale(&inv);
        }
        ZRat { num: n, den: d }
    }

    /// psi(m u / z) = (q z - q^{-1} m u)/(z - m u) for a monomial argument.
    pub fn psi_of(point: Mono) -> ZRat {
        let q = Rat::from_mono(Mono::q_pow(1));
        let qi = Rat::from_mono(Mono::q_pow(-1));
        let p = Rat::from_mono(point);
        ZRat::new(
            ZPoly::linear(-(&qi * &p), q),
            ZPoly::linear(-p, Rat::one()),
        )
    }

    pub fn is_one(&self) -> bool {
        self.num.add(&self.den.neg()).is_zero()
    }

    pub fn mul(&self, other: &ZRat) -> ZRat {
        ZRat::new(self.num.mul(&other.num), self.den.mul(&other.den))
    }

    pub fn inv(&self) -> ZRat {
        assert!(!self.num.is_zero());
        ZRat::new(self.den.clone(), self.num.clone())
    }

    pub fn add(&self, other: &ZRat) -> ZRat {
        ZRat::new(
            self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Substitute z -> a z for an exact monomial a (argument shift).
    pub fn shift_arg(&self, a: &Rat) -> ZRat {
        fn shift(p: &ZPoly, a: &Rat) -> ZPoly {
            let mut coeffs = Vec::with_capacity(p.coeffs.len());
            let mut f = Rat::one();
            for c in &p.coeffs {
                coeffs.push(c * &f);
                f = &f * a;
            }
            let mut out = ZPoly { coeffs };
            out.trim();
            out
        }
        ZRat::new(shift(&self.num, a), shift(&self.den, a))
    }

    /// Evaluate at an exact point z = v; `None` when on a pole. A vanishing
    /// unreduced denominator may be a removable singularity, so reduce and
    /// retry before reporting a pole.
    pub fn eval(&self, v: &Rat) -> Option<Rat> {
        let d = self.den.eval(v);
        if d.is_zero() {
            let r = self.reduced();
            let rd = r.den.eval(v);
            if rd.is_zero() {
                return None;
            }
            return Some(&r.num.eval(v) / &rd);
        }
        Some(&self.num.eval(v) / &d)
    }

    /// Value at z = infinity; `None` when there is a pole there.
    pub fn value_at_infinity(&self) -> Option<Rat> {
        if self.num.is_zero() {
            return Some(Rat::zero());
        }
        if self.num.degree() > self.den.degree() {
            let r = self.reduced();
            if r.num.degree() > r.den.degree() {
                return None;
            }
            return r.value_at_infinity();
        }
        if self.num.coeffs.len() == self.den.coeffs.len() {
            Some(self.num.coeffs.last().unwrap() / self.den.coeffs.last().unwrap())
        } else {
            Some(Rat::zero())
        }
    }

    /// Value at z = 0; `None` when there is a pole there.
    pub fn value_at_zero(&self) -> Option<Rat> {
        self.eval(&Rat::zero())
    }

    /// Exact expansion to order R around z = infinity (dir = AtInfinity,
    /// zeta = 1/z) or z = 0 (dir = AtZero, zeta = z). Apparent poles of the
    /// unreduced quotient are retried on the reduced form.
    pub fn expand(&self, dir: Dir, order: usize) -> Result<Series, String> {
        match dir {
            Dir::AtInfinity => {
                if self.num.degree() > self.den.degree() && !self.num.is_zero() {
                    let r = self.reduced();
                    if r.num.degree() > r.den.degree() && !r.num.is_zero() {
                        return Err("pole at z = infinity".into());
                    }
                    return r.expand(dir, order);
                }
            }
            Dir::AtZero => {
                if self.den.coeffs.first().is_none_or(|c| c.is_zero()) {
                    let r = self.reduced();
                    if r.den.coeffs.first().is_none_or(|c| c.is_zero()) {
                        return Err("pole at z = 0".into());
                    }
                    return r.expand(dir, order);
                }
            }
        }
        let (nc, dc): (Vec<Rat>, Vec<Rat>) = match dir {
            Dir::AtInfinity => {
                let dd = self.den.coeffs.len();
                // f(1/zeta) * zeta^{deg den} in both num and den
                let mut n = vec![Rat::zero(); dd];
                for (i, c) in self.num.coeffs.iter().enumerate() {
                    n[dd - 1 - i] = c.clone();
                }
                let d: Vec<Rat> = self.den.coeffs.iter().rev().cloned().collect();
                (n, d)
            }
            Dir::AtZero => {
                if self.den.coeffs.first().is_none_or(|c| c.is_zero()) {
                    return Err("pole at z = 0".into());
                }
                (self.num.coeffs.clone(), self.den.coeffs.clone())
            }
        };
        // long division of power series n/d to the requested order
        let d0 = dc[0].clone();
        debug_assert!(!d0.is_zero());
        let mut out = vec![Rat::zero(); order + 1];
        let mut rem = nc;
        rem.resize(order + 1, Rat::zero());
        for k in 0..=order {
            let c = &rem[k] / &d0;
            out[k] = c.clone();
            if !c.is_zero() {
                for (j, dj) in dc.iter().enumerate() {
                    if k + j <= order && !dj.is_zero() {
                        rem[k + j] = &rem[k + j] - &(&c * dj);
                    }
                }
            }
        }
        Ok(Series::new(dir, out))
    }
}

impl fmt::Display for ZPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if k == 0 {
                write!(f, "{}", c)?;
            } else if k == 1 {
                write!(f, "({})*z", c)?;
            } else {
                write!(f, "({})*z^{}", c, k)?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for ZRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.num, self.den)
    }
}
