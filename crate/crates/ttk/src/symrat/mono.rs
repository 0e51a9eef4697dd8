//! Laurent monomials in the deformation parameters.
//!
//! A monomial is `q^a d^b u1^c1 u2^c2 u3^c3 u4^c4`. Most computations use a
//! single evaluation parameter `u = u1`; tensor products of modules get one
//! slot per factor so that "generic parameters" is literal.

use std::cmp::Ordering;
use std::fmt;

/// Number of independent evaluation-parameter slots.
pub const U_SLOTS: usize = 4;

/// Exponent vector of a Laurent monomial `q^a d^b u1^c1 .. u4^c4`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub struct Mono {
    pub q: i32,
    pub d: i32,
    pub u: [i32; U_SLOTS],
}

impl Mono {
    pub const ONE: Mono = Mono { q: 0, d: 0, u: [0; U_SLOTS] };

    pub fn new(q: i32, d: i32) -> Self {
        Mono { q, d, u: [0; U_SLOTS] }
    }

    pub fn q_pow(a: i32) -> Self {
        Mono::new(a, 0)
    }

    pub fn d_pow(b: i32) -> Self {
        Mono::new(0, b)
    }

    /// `u_{slot}` with 0-based slot index.
    pub fn u_pow(slot: usize, c: i32) -> Self {
        assert!(slot < U_SLOTS, "u-slot out of range");
        let mut u = [0; U_SLOTS];
        u[slot] = c;
        Mono { q: 0, d: 0, u }
    }

    /// q1 = d q^{-1}, scaled by the exponent lattice refinement.
    pub fn q1_pow(e: i32, scale: i32) -> Self {
        Mono::new(-e * scale, e * scale)
    }

    /// q2 = q^2.
    pub fn q2_pow(e: i32, scale: i32) -> Self {
        Mono::new(2 * e * scale, 0)
    }

    /// q3 = d^{-1} q^{-1}.
    pub fn q3_pow(e: i32, scale: i32) -> Self {
        Mono::new(-e * scale, -e * scale)
    }

    pub fn is_one(&self) -> bool {
        *self == Mono::ONE
    }

    pub fn mul(&self, other: &Mono) -> Mono {
        let mut u = [0; U_SLOTS];
        for (i, slot) in u.iter_mut().enumerate() {
            *slot = self.u[i] + other.u[i];
        }
        Mono { q: self.q + other.q, d: self.d + other.d, u }
    }

    pub fn inv(&self) -> Mono {
        self.pow(-1)
    }

    pub fn pow(&self, e: i32) -> Mono {
        let mut u = [0; U_SLOTS];
        for (i, slot) in u.iter_mut().enumerate() {
            *slot = self.u[i] * e;
        }
        Mono { q: self.q * e, d: self.d * e, u }
    }

    fn grade(&self) -> i64 {
        let mut g = self.q as i64 + self.d as i64;
        for c in self.u {
            g += c as i64;
        }
        g
    }

    /// Graded-lex order: total degree first, then lexicographic on
    /// (q, d, u1, .., u4). Deterministic term order for all iteration.
    pub fn grlex(&self, other: &Mono) -> Ordering {
        self.grade()
            .cmp(&other.grade())
            .then(self.q.cmp(&other.q))
            .then(self.d.cmp(&other.d))
            .then(self.u.cmp(&other.u))
    }

    /// Componentwise minimum, used for monomial-content extraction.
    pub fn min(&self, other: &Mono) -> Mono {
        let mut u = [0; U_SLOTS];
        for (i, slot) in u.iter_mut().enumerate() {
            *slot = self.u[i].min(other.u[i]);
        }
        Mono { q: self.q.min(other.q), d: self.d.min(other.d), u }
    }

    pub fn exp(&self, var: Var) -> i32 {
        match var {
            Var::Q => self.q,
            Var::D => self.d,
            Var::U(i) => self.u[i],
        }
    }

    pub fn with_exp(&self, var: Var, e: i32) -> Mono {
        let mut m = *self;
        match var {
            Var::Q => m.q = e,
            Var::D => m.d = e,
            Var::U(i) => m.u[i] = e,
        }
        m
    }
}

/// One of the six parameter variables.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Var {
    Q,
    D,
    U(usize),
}

pub const ALL_VARS: [Var; 2 + U_SLOTS] =
    [Var::Q, Var::D, Var::U(0), Var::U(1), Var::U(2), Var::U(3)];

impl Var {
    pub fn name(&self) -> String {
        match self {
            Var::Q => "q".into(),
            Var::D => "d".into(),
            Var::U(0) => "u".into(),
            Var::U(i) => format!("u{}", i + 1),
        }
    }
}

impl fmt::Display for Mono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for var in ALL_VARS {
            let e = self.exp(var);
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{}", var.name())?;
            } else {
                write!(f, "{}^{}", var.name(), e)?;
            }
        }
        Ok(())
    }
}
