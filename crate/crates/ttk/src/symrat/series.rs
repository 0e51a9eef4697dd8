//! Truncated one-variable series with exact `Rat` coefficients.

use std::fmt;

use super::rat::Rat;

/// Expansion direction for series in the spectral variable z.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Dir {
    /// zeta = z^{-1}, expansion around z = infinity (K^+ side).
    AtInfinity,
    /// zeta = z, expansion around z = 0 (K^- side).
    AtZero,
}

/// Exact truncated series c_0 + c_1 zeta + ... + c_R zeta^R.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Series {
    pub dir: Dir,
    pub coeffs: Vec<Rat>,
}

impl Series {
    pub fn new(dir: Dir, coeffs: Vec<Rat>) -> Self {
        assert!(!coeffs.is_empty());
        Series { dir, coeffs }
    }

    pub fn constant(dir: Dir, c: Rat, order: usize) -> Self {
        let mut coeffs = vec![Rat::zero(); order + 1];
        coeffs[0] = c;
        Series { dir, coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &Rat {
        &self.coeffs[k]
    }

    pub fn truncate(&self, order: usize) -> Series {
        let mut coeffs = self.coeffs.clone();
        coeffs.truncate(order + 1);
        while coeffs.len() < order + 1 {
            coeffs.push(Rat::zero());
        }
        Series { dir: self.dir, coeffs }
    }

    pub fn add(&self, other: &Series) -> Series {
        assert_eq!(self.dir, other.dir);
        let n = self.coeffs.len().min(other.coeffs.len());
        let coeffs =
            (0..n).map(|k| &self.coeffs[k] + &other.coeffs[k]).collect();
        Series { dir: self.dir, coeffs }
    }

    pub fn mul(&self, other: &Series) -> Series {
        assert_eq!(self.dir, other.dir);
        let n = self.coeffs.len().min(other.coeffs.len());
        let mut coeffs = vec![Rat::zero(); n];
        for (k, c) in coeffs.iter_mut().enumerate() {
            for j in 0..=k {
                if !self.coeffs[j].is_zero() && !other.coeffs[k - j].is_zero() {
                    *c = &*c + &(&self.coeffs[j] * &other.coeffs[k - j]);
                }
            }
        }
        Series { dir: self.dir, coeffs }
    }

    pub fn scale(&self, c: &Rat) -> Series {
        Series { dir: self.dir, coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    /// Substitute zeta -> a*zeta (an argument shift z -> z/a at infinity).
    pub fn shift_zeta(&self, a: &Rat) -> Series {
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        let mut p = Rat::one();
        for c in &self.coeffs {
            coeffs.push(c * &p);
            p = &p * a;
        }
        Series { dir: self.dir, coeffs }
    }

    /// log(s/c_0), truncated at the same order. Errors when c_0 = 0.
    pub fn log(&self) -> Result<Series, String> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err("log of series with vanishing constant term".into());
        }
        // t = s/c0 has t_0 = 1; k t_k = k l_k + sum_{j=1}^{k-1} j l_j t_{k-j}
        let t: Vec<Rat> = self.coeffs.iter().map(|c| c / c0).collect();
        let n = t.len();
        let mut l = vec![Rat::zero(); n];
        for k in 1..n {
            let mut acc = &t[k] * &Rat::from_int(k as i64);
            for j in 1..k {
                acc = &acc - &(&(&l[j] * &t[k - j]) * &Rat::from_int(j as i64));
            }
            l[k] = &acc / &Rat::from_int(k as i64);
        }
        Ok(Series { dir: self.dir, coeffs: l })
    }

    /// exp of a series with zero constant term.
    pub fn exp(&self) -> Result<Series, String> {
        if !self.coeffs[0].is_zero() {
            return Err("exp of series with nonzero constant term".into());
        }
        let n = self.coeffs.len();
        let mut e = vec![Rat::zero(); n];
        e[0] = Rat::one();
        for k in 1..n {
            let mut acc = Rat::zero();
            for j in 1..=k {
                if !self.coeffs[j].is_zero() {
                    acc = &acc
                        + &(&(&self.coeffs[j] * &e[k - j]) * &Rat::from_int(j as i64));
                }
            }
            e[k] = &acc / &Rat::from_int(k as i64);
        }
        Ok(Series { dir: self.dir, coeffs: e })
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let var = match self.dir {
            Dir::AtInfinity => "z^-1",
            Dir::AtZero => "z",
        };
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
            } else {
                write!(f, "({})*({})^{}", c, var, k)?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}
