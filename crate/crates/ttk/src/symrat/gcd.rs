//! Multivariate polynomial gcd by primitive-PRS content recursion.
//!
//! Inputs here are true polynomials (no negative exponents); `Rat`
//! normalization strips Laurent content before calling in.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::lpoly::LPoly;
use super::mono::{Var, ALL_VARS};

/// Exact division in the Laurent ring, `None` if `den` does not divide `num`
/// (monomials are units, so only the polynomial parts matter).
pub fn div_exact(num: &LPoly, den: &LPoly) -> Option<LPoly> {
    if num.is_zero() {
        return Some(LPoly::zero());
    }
    if den.is_zero() {
        return None;
    }
    if let Some((m, c)) = den.as_monomial() {
        let mut terms = Vec::new();
        for (tm, tc) in num.terms() {
            let (q, r) = num_integer::div_rem(tc.clone(), c.clone());
            if !r.is_zero() {
                return None;
            }
            terms.push((tm.mul(&m.inv()), q));
        }
        return Some(LPoly::from_terms(terms));
    }
    // shift both to true polynomials, divide, shift the quotient back
    let nm = num.mono_content();
    let dm0 = den.mono_content();
    if !nm.is_one() || !dm0.is_one() {
        let n2 = num.mul_term(&nm.inv(), &num_bigint::BigInt::one());
        let d2 = den.mul_term(&dm0.inv(), &num_bigint::BigInt::one());
        let q = div_exact(&n2, &d2)?;
        return Some(q.mul_term(&nm.mul(&dm0.inv()), &num_bigint::BigInt::one()));
    }
    let (dm, dc) = den.leading().unwrap();
    let mut rem = num.clone();
    let mut quo = LPoly::zero();
    while !rem.is_zero() {
        let (rm, rc) = rem.leading().unwrap();
        let (q, r) = num_integer::div_rem(rc.clone(), dc.clone());
        if !r.is_zero() {
            return None;
        }
        let m = rm.mul(&dm.inv());
        // leading-term elimination must not need negative exponents
        for var in ALL_VARS {
            if m.exp(var) < 0 {
                return None;
            }
        }
        let t = LPoly::from_term(m, q);
        quo = quo.add(&t);
        rem = rem.sub(&den.mul(&t));
        // degree must strictly drop in grlex, guaranteed by exactness
    }
    Some(quo)
}

/// gcd of two multivariate polynomials, normalized to positive leading
/// coefficient. gcd(0, g) = ±g.
pub fn gcd_poly(a: &LPoly, b: &LPoly) -> LPoly {
    let t = std::time::Instant::now();
    GCD_CALLS.with(|c| c.set(c.get() + 1));
    let g = gcd_inner(a, b);
    GCD_NANOS.with(|c| c.set(c.get() + t.elapsed().as_nanos() as u64));
    make_lc_positive(&g)
}

fn make_lc_positive(p: &LPoly) -> LPoly {
    match p.leading() {
        Some((_, c)) if c.is_negative() => p.neg(),
        _ => p.clone(),
    }
}

fn gcd_inner(a: &LPoly, b: &LPoly) -> LPoly {
    if a.is_zero() {
        return b.clone();
    }
    if b.is_zero() {
        return a.clone();
    }
    // monomials are units: gcd of Laurent polynomials is computed on the
    // shifted polynomial parts
    let am = a.mono_content();
    let bm = b.mono_content();
    if !am.is_one() || !bm.is_one() {
        let a2 = a.mul_term(&am.inv(), &num_bigint::BigInt::one());
        let b2 = b.mul_term(&bm.inv(), &num_bigint::BigInt::one());
        return gcd_inner(&a2, &b2);
    }
    // integer contents
    let ca = a.int_content();
    let cb = b.int_content();
    let cg = num_integer::gcd(ca.clone(), cb.clone());
    let ap = a.div_int_exact(&ca);
    let bp = b.div_int_exact(&cb);

    let var = match main_var(&ap, &bp) {
        Some(v) => v,
        // both constant after content removal
        None => return LPoly::from_term(super::mono::Mono::ONE, cg),
    };

    // cheap catches: equal inputs and exact divisibility
    if ap == bp {
        return ap.mul_term(&super::mono::Mono::ONE, &cg);
    }
    if div_exact(&ap, &bp).is_some() {
        return bp.mul_term(&super::mono::Mono::ONE, &cg);
    }
    if div_exact(&bp, &ap).is_some() {
        return ap.mul_term(&super::mono::Mono::ONE, &cg);
    }

    let g = if ap.depends_on(var) && bp.depends_on(var) {
        if coprime_by_projection(&ap, &bp, var) {
            // contents w.r.t. var may still share factors
            let conta = content_in(&ap, var);
            let contb = content_in(&bp, var);
            gcd_inner(&conta, &contb)
        } else if let Some(g) = heugcd(&ap, &bp) {
            g
        } else {
            gcd_univariate_over_rest(&ap, &bp, var)
        }
    } else if ap.depends_on(var) {
        // gcd divides b which is free of var, so gcd = gcd(content_var(a), b)
        gcd_inner(&content_in(&ap, var), &bp)
    } else {
        gcd_inner(&ap, &content_in(&bp, var))
    };
    g.mul_term(&super::mono::Mono::ONE, &cg)
}

/// First variable that appears in either polynomial.
fn main_var(a: &LPoly, b: &LPoly) -> Option<Var> {
    ALL_VARS.into_iter().find(|&v| a.depends_on(v) || b.depends_on(v))
}

/// Content of `p` viewed as univariate in `var`: gcd of the coefficients.
fn content_in(p: &LPoly, var: Var) -> LPoly {
    let coeffs = p.coeffs_in(var);
    let mut g = LPoly::zero();
    for c in &coeffs {
        if c.is_zero() {
            continue;
        }
        g = gcd_inner(&g, c);
        if g.is_one() {
            break;
        }
    }
    g
}

/// Deterministic projection filter: substitute fixed points for every
/// variable except `var` modulo a large prime and check the univariate
/// images are coprime. If the leading coefficients survive the projection,
/// a constant modular gcd certifies the true gcd has degree 0 in `var`.
fn coprime_by_projection(a: &LPoly, b: &LPoly, var: Var) -> bool {
    const POINTS: [[u64; 6]; 2] = [
        [736563276199, 919825976117, 331223157, 1122339157, 77712391, 991239157],
        [571239017, 88123915731, 613412999, 17712391233, 6612333157, 4412391],
    ];
    'outer: for pts in POINTS {
        let point = |v: Var| -> u64 {
            let idx = match v {
                Var::Q => 0,
                Var::D => 1,
                Var::U(i) => 2 + i,
            };
            pts[idx]
        };
        let pa = project_mod(a, var, &point);
        let pb = project_mod(b, var, &point);
        // leading coefficient must not collapse
        if pa.last().is_none_or(|&c| c == 0) || pb.last().is_none_or(|&c| c == 0) {
            continue 'outer;
        }
        if modular_gcd_degree(&pa, &pb) == 0 {
            return true;
        }
        return false; // projected gcd nontrivial: inconclusive, run PRS
    }
    false
}

/// Mersenne prime 2^61 - 1 for the modular projection.
const P61: u64 = (1u64 << 61) - 1;

fn mulmod(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % P61 as u128) as u64
}

fn powmod(mut b: u64, mut e: u64) -> u64 {
    let mut acc = 1u64;
    b %= P61;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, b);
        }
        b = mulmod(b, b);
        e >>= 1;
    }
    acc
}

fn invmod(a: u64) -> u64 {
    powmod(a, P61 - 2)
}

fn bigint_mod(c: &BigInt) -> u64 {
    let m = c % BigInt::from(P61);
    let m = if m.is_negative() { m + BigInt::from(P61) } else { m };
    let (_, digits) = m.to_u64_digits();
    digits.first().copied().unwrap_or(0)
}

/// Coefficients of `p` as a univariate polynomial in `var`, with the other
/// variables evaluated at `point` mod 2^61 - 1.
fn project_mod(p: &LPoly, var: Var, point: &dyn Fn(Var) -> u64) -> Vec<u64> {
    let deg = p.degree(var) as usize;
    let mut out = vec![0u64; deg + 1];
    for (m, c) in p.terms() {
        let mut t = bigint_mod(c);
        for v in ALL_VARS {
            if v == var {
                continue;
            }
            let e = m.exp(v);
            debug_assert!(e >= 0);
            if e > 0 {
                t = mulmod(t, powmod(point(v), e as u64));
            }
        }
        let e = m.exp(var) as usize;
        out[e] = (out[e] + t) % P61;
    }
    out
}

/// Degree of gcd of univariate polynomials over GF(2^61 - 1).
fn modular_gcd_degree(a: &[u64], b: &[u64]) -> usize {
    fn trim(v: &mut Vec<u64>) {
        while v.last() == Some(&0) {
            v.pop();
        }
    }
    let mut r0: Vec<u64> = a.to_vec();
    let mut r1: Vec<u64> = b.to_vec();
    trim(&mut r0);
    trim(&mut r1);
    while !r1.is_empty() {
        if r0.len() < r1.len() {
            std::mem::swap(&mut r0, &mut r1);
            continue;
        }
        let lci = invmod(*r1.last().unwrap());
        while r0.len() >= r1.len() && !r0.is_empty() {
            let f = mulmod(*r0.last().unwrap(), lci);
            let base = r0.len() - r1.len();
            for (i, c) in r1.iter().enumerate() {
                let sub = mulmod(f, *c);
                let idx = base + i;
                r0[idx] = (r0[idx] + P61 - sub) % P61;
            }
            trim(&mut r0);
        }
        std::mem::swap(&mut r0, &mut r1);
    }
    if r0.is_empty() {
        0
    } else {
        r0.len() - 1
    }
}

/// Heuristic gcd by integer packing: evaluate one variable at a huge
/// integer, recurse, and reconstruct the dependence xi-adically; verified
/// by exact trial division, retried with a larger base on failure.
fn heugcd(a: &LPoly, b: &LPoly) -> Option<LPoly> {
    let var = match main_var(a, b) {
        Some(v) => v,
        None => {
            return Some(LPoly::from_term(
                super::mono::Mono::ONE,
                num_integer::gcd(a.int_content(), b.int_content()),
            ))
        }
    };
    // starting base beyond twice the larger coefficient magnitude
    let max_abs = |p: &LPoly| -> BigInt {
        p.terms().iter().map(|(_, c)| c.abs()).max().unwrap_or_else(BigInt::zero)
    };
    let mut xi: BigInt = (max_abs(a).max(max_abs(b)) * 2u32) + 29u32;
    for _ in 0..6 {
        if let Some(g) = heugcd_at(a, b, var, &xi) {
            return Some(g);
        }
        xi = &xi * &xi / 3u32 + 31u32;
    }
    None
}

fn heugcd_at(a: &LPoly, b: &LPoly, var: Var, xi: &BigInt) -> Option<LPoly> {
    // keep one variable symbolic and dispatch to the modular univariate gcd
    let vars: Vec<Var> = ALL_VARS
        .into_iter()
        .filter(|&v| a.depends_on(v) || b.depends_on(v))
        .collect();
    if vars.len() <= 1 {
        return modular_gcd_univar(a, b, vars.first().copied());
    }
    let var = *vars.last().unwrap();
    let ea = a.subst_int(var, xi);
    let eb = b.subst_int(var, xi);
    if ea.is_zero() || eb.is_zero() {
        return None;
    }
    let gamma = heugcd_at(&ea, &eb, var, xi)?;
    // xi-adic reconstruction of the var-dependence, balanced digits
    let mut g = LPoly::zero();
    let mut gamma = gamma;
    let mut e = 0i32;
    let half = xi / 2u32;
    while !gamma.is_zero() {
        if e > a.degree(var).max(b.degree(var)) {
            return None;
        }
        // digit = gamma smod xi, coefficient-wise
        let mut digit_terms = Vec::new();
        let mut rest_terms = Vec::new();
        for (m, c) in gamma.terms() {
            let mut r = c.mod_floor(xi);
            if r > half {
                r -= xi;
            }
            if !r.is_zero() {
                digit_terms.push((*m, r.clone()));
            }
            let q = (c - &r) / xi;
            if !q.is_zero() {
                rest_terms.push((*m, q));
            }
        }
        let digit = LPoly::from_terms(digit_terms);
        g = g.add(&digit.mul_term(&super::mono::Mono::ONE.with_exp(var, e), &BigInt::one()));
        gamma = LPoly::from_terms(rest_terms);
        e += 1;
    }
    if g.is_zero() {
        return None;
    }
    // primitive part and verification
    let ic = g.int_content();
    let g = if ic.is_one() || ic.is_zero() { g } else { g.div_int_exact(&ic) };
    if div_exact(a, &g).is_some() && div_exact(b, &g).is_some() {
        Some(g)
    } else {
        None
    }
}

/// Modular gcd for univariate polynomials over the integers: Euclid over
/// word primes, CRT reconstruction with balanced coefficients, certified by
/// trial division. `None` means unlucky beyond our prime budget.
fn modular_gcd_univar(a: &LPoly, b: &LPoly, var: Option<Var>) -> Option<LPoly> {
    let var = match var {
        Some(v) => v,
        None => {
            return Some(LPoly::from_term(
                super::mono::Mono::ONE,
                num_integer::gcd(a.int_content(), b.int_content()),
            ))
        }
    };
    let ca = a.int_content();
    let cb = b.int_content();
    let cg = num_integer::gcd(ca.clone(), cb.clone());
    let ap = a.div_int_exact(&ca);
    let bp = b.div_int_exact(&cb);
    let fa: Vec<BigInt> = ap.coeffs_in(var).iter().map(|c| c.as_int().expect("univariate")).collect();
    let fb: Vec<BigInt> = bp.coeffs_in(var).iter().map(|c| c.as_int().expect("univariate")).collect();
    let lcf = fa.last().unwrap().clone();
    let lcg = fb.last().unwrap().clone();
    let gamma = num_integer::gcd(lcf.abs(), lcg.abs());

    let mut best_deg = usize::MAX;
    let mut residues: Vec<(u64, Vec<u64>)> = Vec::new();
    let mut last_candidate: Option<Vec<BigInt>> = None;
    let mut p = (1u64 << 62) - 57;
    let mut used = 0;
    while used < 64 {
        p = next_prime_below(p);
        used += 1;
        if (&lcf % p).is_zero() || (&lcg % p).is_zero() {
            continue;
        }
        let ra: Vec<u64> = fa.iter().map(|c| bigint_mod_p(c, p)).collect();
        let rb: Vec<u64> = fb.iter().map(|c| bigint_mod_p(c, p)).collect();
        let hp = gcd_mod_p(&ra, &rb, p);
        if hp.len() == 1 {
            // coprime modulo one good prime: primitive inputs are coprime
            return Some(LPoly::from_term(super::mono::Mono::ONE, cg));
        }
        let deg = hp.len() - 1;
        match deg.cmp(&best_deg) {
            std::cmp::Ordering::Less => {
                best_deg = deg;
                residues.clear();
                last_candidate = None;
            }
            std::cmp::Ordering::Greater => continue, // unlucky prime
            std::cmp::Ordering::Equal => {}
        }
        // scale to leading coefficient gamma mod p
        let gm = bigint_mod_p(&gamma, p);
        let lc_inv = inv_mod_p(*hp.last().unwrap(), p);
        let scaled: Vec<u64> =
            hp.iter().map(|&c| mul_mod_p(mul_mod_p(c, lc_inv, p), gm, p)).collect();
        residues.push((p, scaled));
        // CRT with balanced lift
        let candidate = crt_balanced(&residues, best_deg);
        if last_candidate.as_ref() == Some(&candidate) {
            // stable: primitive part + verification
            let mut terms = Vec::new();
            for (e, c) in candidate.iter().enumerate() {
                if !c.is_zero() {
                    terms.push((super::mono::Mono::ONE.with_exp(var, e as i32), c.clone()));
                }
            }
            let g = LPoly::from_terms(terms);
            let ic = g.int_content();
            let g = if ic.is_zero() || ic.is_one() { g } else { g.div_int_exact(&ic) };
            if div_exact(&ap, &g).is_some() && div_exact(&bp, &g).is_some() {
                return Some(g.mul_term(&super::mono::Mono::ONE, &cg));
            }
            last_candidate = None;
        } else {
            last_candidate = Some(candidate);
        }
    }
    None
}

fn bigint_mod_p(c: &BigInt, p: u64) -> u64 {
    let m = c % BigInt::from(p);
    let m = if m.is_negative() { m + BigInt::from(p) } else { m };
    m.to_u64_digits().1.first().copied().unwrap_or(0)
}

fn mul_mod_p(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod_p(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod_p(acc, b, p);
        }
        b = mul_mod_p(b, b, p);
        e >>= 1;
    }
    acc
}

fn inv_mod_p(a: u64, p: u64) -> u64 {
    pow_mod_p(a, p - 2, p)
}

/// Monic gcd over GF(p).
fn gcd_mod_p(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    fn trim(v: &mut Vec<u64>) {
        while v.last() == Some(&0) {
            v.pop();
        }
    }
    let mut r0 = a.to_vec();
    let mut r1 = b.to_vec();
    trim(&mut r0);
    trim(&mut r1);
    while !r1.is_empty() {
        if r0.len() < r1.len() {
            std::mem::swap(&mut r0, &mut r1);
            continue;
        }
        let lci = inv_mod_p(*r1.last().unwrap(), p);
        while r0.len() >= r1.len() && !r0.is_empty() {
            let f = mul_mod_p(*r0.last().unwrap(), lci, p);
            let base = r0.len() - r1.len();
            for (i, c) in r1.iter().enumerate() {
                let sub = mul_mod_p(f, *c, p);
                r0[base + i] = (r0[base + i] + p - sub) % p;
            }
            trim(&mut r0);
        }
        std::mem::swap(&mut r0, &mut r1);
    }
    if r0.is_empty() {
        return vec![1];
    }
    let lci = inv_mod_p(*r0.last().unwrap(), p);
    r0.iter().map(|&c| mul_mod_p(c, lci, p)).collect()
}

fn crt_balanced(residues: &[(u64, Vec<u64>)], deg: usize) -> Vec<BigInt> {
    let mut modulus = BigInt::one();
    let mut coeffs = vec![BigInt::zero(); deg + 1];
    for (p, r) in residues {
        let pb = BigInt::from(*p);
        if modulus.is_one() {
            for (k, c) in coeffs.iter_mut().enumerate() {
                *c = BigInt::from(*r.get(k).unwrap_or(&0));
            }
            modulus = pb;
            continue;
        }
        // combine each coefficient: x = a mod M, x = b mod p
        let minv = mod_inverse(&modulus, &pb);
        for (k, c) in coeffs.iter_mut().enumerate() {
            let b = BigInt::from(*r.get(k).unwrap_or(&0));
            let diff = (&b - &*c).mod_floor(&pb);
            let t = (&diff * &minv).mod_floor(&pb);
            *c += &t * &modulus;
        }
        modulus *= &pb;
    }
    // balance into (-M/2, M/2]
    let half = &modulus / 2u32;
    for c in coeffs.iter_mut() {
        let mut v = c.mod_floor(&modulus);
        if v > half {
            v -= &modulus;
        }
        *c = v;
    }
    coeffs
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> BigInt {
    // extended Euclid
    let (mut old_r, mut r) = (a.mod_floor(m), m.clone());
    let (mut old_s, mut s) = (BigInt::one(), BigInt::zero());
    while !r.is_zero() {
        let q = &old_r / &r;
        let t = &old_r - &q * &r;
        old_r = std::mem::replace(&mut r, t);
        let t = &old_s - &q * &s;
        old_s = std::mem::replace(&mut s, t);
    }
    old_s.mod_floor(m)
}

fn next_prime_below(start: u64) -> u64 {
    let mut n = start - 2;
    while !is_prime_u64(n) {
        n -= 2;
    }
    n
}

fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    // deterministic Miller-Rabin bases for u64
    let d = (n - 1) >> (n - 1).trailing_zeros();
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod_p(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        let mut e = d;
        while e != n - 1 {
            x = mul_mod_p(x, x, n);
            e <<= 1;
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Primitive PRS gcd in `var` over the polynomial ring in the other variables.
fn gcd_univariate_over_rest(a: &LPoly, b: &LPoly, var: Var) -> LPoly {
    GCD_PRS.with(|c| c.set(c.get() + 1));
    let conta = content_in(a, var);
    let contb = content_in(b, var);
    let cg = gcd_inner(&conta, &contb);
    let pa = div_exact(a, &conta).expect("content divides");
    let pb = div_exact(b, &contb).expect("content divides");

    let mut r0 = pa;
    let mut r1 = pb;
    if r0.degree(var) < r1.degree(var) {
        std::mem::swap(&mut r0, &mut r1);
    }
    while !r1.is_zero() {
        let r = pseudo_rem(&r0, &r1, var);
        let r = if r.is_zero() {
            r
        } else {
            let c = content_in(&r, var);
            let r = div_exact(&r, &c).expect("content divides");
            let ic = r.int_content();
            if ic.is_zero() || ic.is_one() {
                r
            } else {
                r.div_int_exact(&ic)
            }
        };
        r0 = r1;
        r1 = r;
    }
    // r0 is primitive w.r.t. var
    cg.mul(&r0)
}

/// Pseudo-remainder: lc(b)^(da-db+1) * a mod b, eliminating in `var`.
fn pseudo_rem(a: &LPoly, b: &LPoly, var: Var) -> LPoly {
    let db = b.degree(var);
    let bc = b.coeffs_in(var);
    let lcb = bc.last().unwrap().clone();
    let mut r = a.clone();
    loop {
        let da = r.degree(var);
        if r.is_zero() || da < db {
            return r;
        }
        let rc = r.coeffs_in(var);
        let lead = rc.last().unwrap().clone();
        // r = lcb * r - lead * x^(da-db) * b
        let shift = super::mono::Mono::ONE.with_exp(var, da - db);
        let t = b.mul(&lead.mul_term(&shift, &BigInt::one()));
        r = r.mul(&lcb).sub(&t);
        debug_assert!(r.is_zero() || r.degree(var) < da);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symrat::mono::Mono;

    fn q() -> LPoly {
        LPoly::from_mono(Mono::q_pow(1))
    }
    fn d() -> LPoly {
        LPoly::from_mono(Mono::d_pow(1))
    }
    fn one() -> LPoly {
        LPoly::one()
    }

    #[test]
    fn gcd_of_common_factor() {
        // (q^2 - 1) and (q - 1): gcd q - 1
        let a = q().mul(&q()).sub(&one());
        let b = q().sub(&one());
        let g = gcd_poly(&a, &b);
        assert_eq!(g, b);
    }

    #[test]
    fn gcd_multivariate() {
        // (q + d)*(q - d) vs (q + d)*q
        let s = q().add(&d());
        let a = s.mul(&q().sub(&d()));
        let b = s.mul(&q());
        let g = gcd_poly(&a, &b);
        assert_eq!(g, s);
    }

    #[test]
    fn div_exact_roundtrip() {
        let s = q().add(&d()).add(&one());
        let t = q().mul(&d()).sub(&one());
        let p = s.mul(&t);
        assert_eq!(div_exact(&p, &s), Some(t.clone()));
        assert_eq!(div_exact(&p, &t), Some(s.clone()));
        assert_eq!(div_exact(&t, &s), None);
    }

    #[test]
    fn gcd_coprime() {
        let a = q().add(&one());
        let b = d().add(&one());
        assert!(gcd_poly(&a, &b).is_one());
    }
}

use std::cell::Cell;
thread_local! {
    pub static GCD_CALLS: Cell<u64> = const { Cell::new(0) };
    pub static GCD_NANOS: Cell<u64> = const { Cell::new(0) };
    pub static GCD_PRS: Cell<u64> = const { Cell::new(0) };
}

/// Instrumented wrapper used while profiling.
pub fn gcd_stats() -> (u64, u64, u64) {
    (GCD_CALLS.with(|c| c.get()), GCD_NANOS.with(|c| c.get()), GCD_PRS.with(|c| c.get()))
}
