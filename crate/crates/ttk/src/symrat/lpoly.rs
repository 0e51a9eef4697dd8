//! Sparse Laurent polynomials with arbitrary-precision integer coefficients.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use super::mono::{Mono, Var, ALL_VARS};

/// Sparse Laurent polynomial in q, d, u1..u4 over the integers.
///
/// Terms are kept sorted in descending graded-lex order with no zero
/// coefficients, so structural equality is polynomial equality.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct LPoly {
    terms: Vec<(Mono, BigInt)>,
}

impl LPoly {
    pub fn zero() -> Self {
        LPoly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        LPoly::from_mono(Mono::ONE)
    }

    pub fn from_int(c: i64) -> Self {
        LPoly::from_term(Mono::ONE, BigInt::from(c))
    }

    pub fn from_mono(m: Mono) -> Self {
        LPoly::from_term(m, BigInt::one())
    }

    pub fn from_term(m: Mono, c: BigInt) -> Self {
        if c.is_zero() {
            LPoly::zero()
        } else {
            LPoly { terms: vec![(m, c)] }
        }
    }

    pub fn from_terms(terms: Vec<(Mono, BigInt)>) -> Self {
        let mut map: BTreeMap<GrlexKey, BigInt> = BTreeMap::new();
        for (m, c) in terms {
            if c.is_zero() {
                continue;
            }
            let e = map.entry(GrlexKey(m)).or_insert_with(BigInt::zero);
            *e += c;
        }
        let mut v: Vec<(Mono, BigInt)> = map
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (k.0, c))
            .collect();
        v.reverse(); // descending order
        LPoly { terms: v }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    pub fn terms(&self) -> &[(Mono, BigInt)] {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Leading term in graded-lex order.
    pub fn leading(&self) -> Option<&(Mono, BigInt)> {
        self.terms.first()
    }

    /// True when the polynomial is a single term.
    pub fn as_monomial(&self) -> Option<(Mono, BigInt)> {
        if self.terms.len() == 1 {
            Some(self.terms[0].clone())
        } else {
            None
        }
    }

    pub fn add(&self, other: &LPoly) -> LPoly {
        // merge of two descending-sorted term lists
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            match self.terms[i].0.grlex(&other.terms[j].0) {
                Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(other.terms[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = &self.terms[i].1 + &other.terms[j].1;
                    if !c.is_zero() {
                        out.push((self.terms[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&other.terms[j..]);
        LPoly { terms: out }
    }

    pub fn neg(&self) -> LPoly {
        LPoly { terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect() }
    }

    pub fn sub(&self, other: &LPoly) -> LPoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &LPoly) -> LPoly {
        if self.is_zero() || other.is_zero() {
            return LPoly::zero();
        }
        if let Some((m, c)) = self.as_monomial() {
            return other.mul_term(&m, &c);
        }
        if let Some((m, c)) = other.as_monomial() {
            return self.mul_term(&m, &c);
        }
        // sort-merge: build all pairwise products, sort descending, combine
        let mut prods: Vec<(Mono, BigInt)> =
            Vec::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                prods.push((ma.mul(mb), ca * cb));
            }
        }
        prods.sort_unstable_by(|a, b| b.0.grlex(&a.0));
        let mut v: Vec<(Mono, BigInt)> = Vec::with_capacity(prods.len());
        for (m, c) in prods {
            match v.last_mut() {
                Some((lm, lc)) if *lm == m => {
                    *lc += c;
                    if lc.is_zero() {
                        v.pop();
                    }
                }
                _ => v.push((m, c)),
            }
        }
        LPoly { terms: v }
    }

    pub fn mul_term(&self, m: &Mono, c: &BigInt) -> LPoly {
        if c.is_zero() {
            return LPoly::zero();
        }
        LPoly { terms: self.terms.iter().map(|(tm, tc)| (tm.mul(m), tc * c)).collect() }
    }

    pub fn mul_int(&self, c: i64) -> LPoly {
        self.mul_term(&Mono::ONE, &BigInt::from(c))
    }

    /// Componentwise minimum exponent over all terms (zero poly -> ONE).
    pub fn mono_content(&self) -> Mono {
        let mut it = self.terms.iter();
        let mut m = match it.next() {
            Some((m0, _)) => *m0,
            None => return Mono::ONE,
        };
        for (t, _) in it {
            m = m.min(t);
        }
        m
    }

    /// gcd of all integer coefficients (non-negative; zero poly -> 0).
    pub fn int_content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            g = num_integer::gcd(g, c.abs());
            if g.is_one() {
                break;
            }
        }
        g
    }

    pub fn div_int_exact(&self, c: &BigInt) -> LPoly {
        assert!(!c.is_zero());
        LPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, tc)| {
                    let (qt, r) = num_integer::div_rem(tc.clone(), c.clone());
                    assert!(r.is_zero(), "non-exact integer division in LPoly");
                    (*m, qt)
                })
                .collect(),
        }
    }

    pub fn max_exp(&self, var: Var) -> i32 {
        self.terms.iter().map(|(m, _)| m.exp(var)).max().unwrap_or(0)
    }

    pub fn min_exp(&self, var: Var) -> i32 {
        self.terms.iter().map(|(m, _)| m.exp(var)).min().unwrap_or(0)
    }

    /// Degree in `var` of a non-Laurent polynomial.
    pub fn degree(&self, var: Var) -> i32 {
        self.max_exp(var)
    }

    pub fn depends_on(&self, var: Var) -> bool {
        self.terms.iter().any(|(m, _)| m.exp(var) != 0)
    }

    /// View as a univariate polynomial in `var`: coefficient map
    /// degree -> LPoly in the remaining variables. Requires exponents >= 0.
    pub fn coeffs_in(&self, var: Var) -> Vec<LPoly> {
        let deg = self.degree(var);
        let mut out = vec![LPoly::zero(); (deg + 1) as usize];
        for (m, c) in &self.terms {
            let e = m.exp(var);
            debug_assert!(e >= 0);
            let rest = m.with_exp(var, 0);
            out[e as usize] = out[e as usize].add(&LPoly::from_term(rest, c.clone()));
        }
        out
    }

    pub fn from_coeffs_in(var: Var, coeffs: &[LPoly]) -> LPoly {
        let mut acc = LPoly::zero();
        for (e, c) in coeffs.iter().enumerate() {
            let shift = Mono::ONE.with_exp(var, e as i32);
            acc = acc.add(&c.mul_term(&shift, &BigInt::one()));
        }
        acc
    }

    /// Substitute integers for every variable.
    pub fn eval_int(&self, point: &dyn Fn(Var) -> BigInt) -> BigInt {
        // Exponents may be negative; evaluation clears to a common monomial
        // first, so only call on non-Laurent polynomials.
        let mut acc = BigInt::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for var in ALL_VARS {
                let e = m.exp(var);
                debug_assert!(e >= 0, "eval_int on Laurent polynomial");
                if e > 0 {
                    t *= point(var).pow(e as u32);
                }
            }
            acc += t;
        }
        acc
    }

    /// The constant value of a polynomial with no variables (zero -> Some(0)).
    pub fn as_int(&self) -> Option<BigInt> {
        if self.terms.is_empty() {
            return Some(BigInt::zero());
        }
        if self.terms.len() == 1 && self.terms[0].0.is_one() {
            return Some(self.terms[0].1.clone());
        }
        None
    }

    /// Substitute an integer for one variable (exponents in `var` must be >= 0).
    pub fn subst_int(&self, var: Var, value: &BigInt) -> LPoly {
        let mut terms = Vec::new();
        for (m, c) in &self.terms {
            let e = m.exp(var);
            debug_assert!(e >= 0, "subst_int on Laurent exponent");
            let coeff = c * value.pow(e as u32);
            terms.push((m.with_exp(var, 0), coeff));
        }
        LPoly::from_terms(terms)
    }

    /// Substitute an LPoly value for one variable (exponents in `var` must be >= 0).
    pub fn subst(&self, var: Var, value: &LPoly) -> LPoly {
        let mut acc = LPoly::zero();
        for (m, c) in &self.terms {
            let e = m.exp(var);
            assert!(e >= 0, "subst on Laurent exponent");
            let rest = LPoly::from_term(m.with_exp(var, 0), c.clone());
            let mut t = rest;
            for _ in 0..e {
                t = t.mul(value);
            }
            acc = acc.add(&t);
        }
        acc
    }
}

/// Ascending wrapper so BTreeMap yields grlex order.
#[derive(PartialEq, Eq)]
struct GrlexKey(Mono);

impl Ord for GrlexKey {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.grlex(&other.0)
    }
}

impl PartialOrd for GrlexKey {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for LPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if m.is_one() {
                write!(f, "{}", abs)?;
            } else if abs.is_one() {
                write!(f, "{}", m)?;
            } else {
                write!(f, "{}*{}", abs, m)?;
            }
        }
        Ok(())
    }
}
