//! Fused-current chains and their exactly stabilized module action.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use crate::opcalc::{Evaluator, PerpDict, PerpGen};
use crate::repcore::{Label, ModVec};
use crate::symrat::{Mono, Rat};

/// A fusion chain like "2|1|0", optionally with the n = 2 variant marker
/// "@1" (q1 shifts) or "@3" (q3 shifts).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Chain {
    pub indices: Vec<usize>,
    pub variant: Option<u8>,
}

impl Chain {
    pub fn parse(s: &str, n: usize) -> Result<Chain, String> {
        let (body, variant) = match s.split_once('@') {
            Some((b, v)) => {
                let var: u8 = v.trim().parse().map_err(|_| format!("bad variant {v:?}"))?;
                if var != 1 && var != 3 {
                    return Err("variant must be 1 or 3".into());
                }
                (b, Some(var))
            }
            None => (s, None),
        };
        let indices: Result<Vec<usize>, _> =
            body.split('|').map(|x| x.trim().parse::<usize>()).collect();
        let indices = indices.map_err(|_| format!("bad chain {s:?}"))?;
        if indices.is_empty() {
            return Err("empty chain".into());
        }
        if indices.iter().any(|&i| i >= n) {
            return Err(format!("chain index out of range for n={n}"));
        }
        let chain = Chain { indices, variant };
        chain.validate(n)?;
        Ok(chain)
    }

    fn validate(&self, n: usize) -> Result<(), String> {
        if n == 2 && self.indices.len() > 1 && self.variant.is_none() {
            return Err("n=2 chains need a variant marker @1 or @3".into());
        }
        if self.indices.len() > 1 && n == 2 && self.indices != [1, 0] {
            return Err("the n=2 fused chain is 1|0".into());
        }
        for w in self.indices.windows(2) {
            let asc = (w[1] as i64 - w[0] as i64 - 1).rem_euclid(n as i64) == 0;
            let desc = (w[1] as i64 - w[0] as i64 + 1).rem_euclid(n as i64) == 0;
            if !(asc || desc) {
                return Err(format!("chain links must be adjacent mod {n}"));
            }
        }
        Ok(())
    }

    pub fn render(&self) -> String {
        let body: Vec<String> = self.indices.iter().map(|i| i.to_string()).collect();
        match self.variant {
            Some(v) => format!("{}@{}", body.join("|"), v),
            None => body.join("|"),
        }
    }

    /// The standard upper-left corner chain k|k+1|...|n-1|0.
    pub fn upper_left(n: usize, k: usize) -> Chain {
        let mut idx: Vec<usize> = (k..n).collect();
        idx.push(0);
        Chain { indices: idx, variant: if n == 2 { Some(1) } else { None } }
    }

    /// The lower-right corner chain k|k-1|...|1|0.
    pub fn lower_right(n: usize, k: usize) -> Chain {
        let idx: Vec<usize> = (0..=k).rev().collect();
        Chain { indices: idx, variant: if n == 2 { Some(3) } else { None } }
    }
}

/// Exactly stabilized fused operators over one module evaluator.
pub struct Fusion<'a> {
    pub dict: &'a PerpDict<'a>,
    pub ev: &'a Evaluator<'a>,
    pub s_max: i32,
    e_cache: Mutex<HashMap<(Vec<usize>, Option<u8>, i32, Label), Arc<(ModVec, i32)>>>,
    f_cache: Mutex<HashMap<(Vec<usize>, Option<u8>, i32, Label), Arc<(ModVec, i32)>>>,
}

impl<'a> Fusion<'a> {
    pub fn new(dict: &'a PerpDict<'a>, ev: &'a Evaluator<'a>) -> Self {
        Fusion { dict, ev, s_max: 12, e_cache: Mutex::new(HashMap::new()), f_cache: Mutex::new(HashMap::new()) }
    }

    pub fn with_s_max(mut self, s_max: i32) -> Self {
        self.s_max = s_max;
        self
    }

    fn n(&self) -> usize {
        self.dict.n
    }

    /// The relative shift of an adjacent pair: q1 for ascending (i, i+1),
    /// q3 for descending (i, i-1).
    fn pair_shift(&self, a: usize, b: usize) -> Mono {
        let n = self.n() as i64;
        if (b as i64 - a as i64 - 1).rem_euclid(n) == 0 {
            self.dict.params.q1(1)
        } else if (b as i64 - a as i64 + 1).rem_euclid(n) == 0 {
            self.dict.params.q3(1)
        } else {
            panic!("non-adjacent chain link")
        }
    }

    /// Accumulated argument shifts of every chain slot (rightmost gets 1).
    pub fn slot_shifts(&self, chain: &Chain) -> Vec<Mono> {
        let m = chain.indices.len();
        let mut shifts = vec![Mono::ONE; m];
        for j in (0..m.saturating_sub(1)).rev() {
            let step = if self.n() == 2 {
                match chain.variant {
                    Some(1) => self.dict.params.q1(1),
                    Some(3) => self.dict.params.q3(1),
                    _ => panic!("n=2 chain needs variant"),
                }
            } else {
                self.pair_shift(chain.indices[j], chain.indices[j + 1])
            };
            shifts[j] = shifts[j + 1].mul(&step);
        }
        shifts
    }

    /// Apply the fused E mode E^perp_{chain,k}; returns the stable value and
    /// the s at which stability was first witnessed (maximum over terms).
    pub fn e_apply(&self, chain: &Chain, k: i32, v: &ModVec) -> Result<(ModVec, i32), String> {
        self.apply(PerpGen::E, chain, k, v)
    }

    pub fn f_apply(&self, chain: &Chain, k: i32, v: &ModVec) -> Result<(ModVec, i32), String> {
        self.apply(PerpGen::F, chain, k, v)
    }

    fn apply(
        &self,
        gen: PerpGen,
        chain: &Chain,
        k: i32,
        v: &ModVec,
    ) -> Result<(ModVec, i32), String> {
        let mut out = ModVec::zero();
        let mut witness = 0;
        for (label, c) in &v.terms {
            let hit = self.apply_label(gen, chain, k, label)?;
            out = out.add(&hit.0.scale(c));
            witness = witness.max(hit.1);
        }
        Ok((out, witness))
    }

    fn apply_label(
        &self,
        gen: PerpGen,
        chain: &Chain,
        k: i32,
        label: &Label,
    ) -> Result<Arc<(ModVec, i32)>, String> {
        let key = (chain.indices.clone(), chain.variant, k, label.clone());
        let cache = match gen {
            PerpGen::E => &self.e_cache,
            PerpGen::F => &self.f_cache,
        };
        if let Some(hit) = cache.lock().unwrap().get(&key) {
            return Ok(hit.clone());
        }
        let out = self.compute(gen, chain, k, label)?;
        let arc = Arc::new(out);
        cache.lock().unwrap().insert(key, arc.clone());
        Ok(arc)
    }

    fn compute(
        &self,
        gen: PerpGen,
        chain: &Chain,
        k: i32,
        label: &Label,
    ) -> Result<(ModVec, i32), String> {
        let v = ModVec::basis(label.clone());
        if chain.indices.len() == 1 {
            let id = self.dict.perp_mode(gen, chain.indices[0], k);
            return Ok((self.ev.apply(id, &v)?, 0));
        }
        if self.n() == 2 {
            return self.n2_variant(gen, chain.variant.unwrap(), k, &v);
        }
        // head fused against the rest of the chain; the relative argument
        // shift is the accumulated shift of the head slot (q1 q3 z'' style
        // arguments in the iterated limits), not just the adjacent step
        let head = chain.indices[0];
        let rest = Chain { indices: chain.indices[1..].to_vec(), variant: chain.variant };
        let shift = Rat::from_mono(self.slot_shifts(chain)[0]);
        let mut prev: Option<ModVec> = None;
        for s in 0..=self.s_max {
            let val = match gen {
                PerpGen::E => {
                    // shift^{-s-k} E^perp_{head,s+k} (E^perp_{rest,-s} v)
                    let inner = self.apply(PerpGen::E, &rest, -s, &v)?.0;
                    let outer =
                        self.ev.apply(self.dict.perp_mode(PerpGen::E, head, s + k), &inner)?;
                    outer.scale(&shift.pow(-(s + k)))
                }
                PerpGen::F => {
                    // shift^{s} F^perp_{rest,k+s} (F^perp_{head,-s} v)
                    let inner =
                        self.ev.apply(self.dict.perp_mode(PerpGen::F, head, -s), &v)?;
                    let outer = self.apply(PerpGen::F, &rest, k + s, &inner)?.0;
                    outer.scale(&shift.pow(s))
                }
            };
            if let Some(p) = &prev {
                if *p == val {
                    return Ok((val, s - 1));
                }
            }
            prev = Some(val);
        }
        Err(format!(
            "stabilization not reached for {} mode {k} on {label} within s_max={}",
            chain.render(),
            self.s_max
        ))
    }

    /// The n = 2 two-term stable combinations.
    fn n2_variant(
        &self,
        gen: PerpGen,
        variant: u8,
        k: i32,
        v: &ModVec,
    ) -> Result<(ModVec, i32), String> {
        let p = self.dict.params;
        let (shift, other) = match variant {
            1 => (Rat::from_mono(p.q1(1)), Rat::from_mono(p.q3(1))),
            3 => (Rat::from_mono(p.q3(1)), Rat::from_mono(p.q1(1))),
            _ => unreachable!(),
        };
        let mut prev: Option<ModVec> = None;
        for s in 0..=self.s_max {
            let val = match gen {
                PerpGen::E => {
                    // shift^{-s-k}(E_{1,s+k} E_{0,-s} - other E_{1,s+k-1} E_{0,-s+1})
                    let t1 = self.ev.apply(
                        self.dict.perp_mode(PerpGen::E, 1, s + k),
                        &self.ev.apply(self.dict.perp_mode(PerpGen::E, 0, -s), v)?,
                    )?;
                    let t2 = self.ev.apply(
                        self.dict.perp_mode(PerpGen::E, 1, s + k - 1),
                        &self.ev.apply(self.dict.perp_mode(PerpGen::E, 0, -s + 1), v)?,
                    )?;
                    t1.sub(&t2.scale(&other)).scale(&shift.pow(-(s + k)))
                }
                PerpGen::F => {
                    // shift^{s}(F_{0,s+k} F_{1,-s} - other F_{0,s+k+1} F_{1,-s-1})
                    let t1 = self.ev.apply(
                        self.dict.perp_mode(PerpGen::F, 0, s + k),
                        &self.ev.apply(self.dict.perp_mode(PerpGen::F, 1, -s), v)?,
                    )?;
                    let t2 = self.ev.apply(
                        self.dict.perp_mode(PerpGen::F, 0, s + k + 1),
                        &self.ev.apply(self.dict.perp_mode(PerpGen::F, 1, -s - 1), v)?,
                    )?;
                    t1.sub(&t2.scale(&other)).scale(&shift.pow(s))
                }
            };
            if let Some(pv) = &prev {
                if *pv == val {
                    return Ok((val, s - 1));
                }
            }
            prev = Some(val);
        }
        Err(format!("stabilization not reached for n=2 variant {variant} mode {k}"))
    }

    /// Mode m of the fused K current of the chain, as an operator: the
    /// convolution of shifted perpendicular phi modes of the chain slots.
    pub fn k_mode_apply(
        &self,
        chain: &Chain,
        sign: i8,
        m: i32,
        v: &ModVec,
    ) -> Result<ModVec, String> {
        let shifts = self.slot_shifts(chain);
        let slots = chain.indices.len();
        // enumerate compositions of m into `slots` parts of the right sign
        let mut out = ModVec::zero();
        let mut parts = vec![0i32; slots];
        self.k_mode_rec(chain, sign, m, 0, &mut parts, &shifts, v, &mut out)?;
        Ok(out)
    }

    #[allow(clippy::too_many_arguments)]
    fn k_mode_rec(
        &self,
        chain: &Chain,
        sign: i8,
        rem: i32,
        slot: usize,
        parts: &mut Vec<i32>,
        shifts: &[Mono],
        v: &ModVec,
        out: &mut ModVec,
    ) -> Result<(), String> {
        let slots = chain.indices.len();
        if slot == slots - 1 {
            parts[slot] = rem;
            if (sign > 0 && rem < 0) || (sign < 0 && rem > 0) {
                return Ok(());
            }
            // apply right-to-left: K(shift_0 z) ... K(z): rightmost first
            let mut cur = v.clone();
            let mut scalar = Rat::one();
            for (j, &i) in chain.indices.iter().enumerate().rev() {
                let mj = parts[j];
                scalar = &scalar * &Rat::from_mono(shifts[j].pow(-mj));
                if cur.is_zero() {
                    break;
                }
                cur = self.ev.apply(self.dict.perp_phi(sign, i, mj), &cur)?;
            }
            *out = out.add(&cur.scale(&scalar));
            return Ok(());
        }
        let range: Vec<i32> = if sign > 0 {
            (0..=rem.max(0)).collect()
        } else {
            (rem.min(0)..=0).collect()
        };
        for x in range {
            parts[slot] = x;
            self.k_mode_rec(chain, sign, rem - x, slot + 1, parts, shifts, v, out)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combin::Partition;
    use crate::opcalc::OpArena;
    use crate::repcore::{Module, Params};

    #[test]
    fn chain_parsing() {
        assert!(Chain::parse("2|1|0", 3).is_ok());
        assert!(Chain::parse("2|0", 3).is_ok()); // adjacent mod 3
        assert!(Chain::parse("1|0", 2).is_err()); // needs a variant
        assert!(Chain::parse("1|0@1", 2).is_ok());
        assert_eq!(Chain::upper_left(3, 2).indices, vec![2, 0]);
        assert_eq!(Chain::lower_right(3, 2).indices, vec![2, 1, 0]);
    }

    #[test]
    fn fused_e_annihilation_and_stability() {
        // E^perp_{2|0,0} on the n=3 vacuum stabilizes; re-application at
        // s_stable+2 reproduces the value exactly
        let arena = OpArena::new();
        let params = Params::unit();
        let dict = PerpDict::new(&arena, 3, params);
        let m = Module::fock(3, 0, params);
        let ev = Evaluator::new(&arena, &m);
        let fusion = Fusion::new(&dict, &ev);
        let chain = Chain::parse("2|0", 3).unwrap();
        let vac = ModVec::basis(Label::Part(Partition::empty()));
        let (val, s_stable) = fusion.e_apply(&chain, 0, &vac).unwrap();
        // pdeg of the fused E mode 0 is -n*0-n+2 = -1 on the 0-box vacuum
        assert!(val.is_zero());
        assert!(s_stable <= 3);
        // fused F on the vacuum vanishes for positive modes
        let (fval, _) = fusion.f_apply(&chain, 1, &vac).unwrap();
        assert!(fval.is_zero());
    }

    #[test]
    fn zero_vector_is_fixed() {
        let arena = OpArena::new();
        let params = Params::unit();
        let dict = PerpDict::new(&arena, 3, params);
        let m = Module::fock(3, 0, params);
        let ev = Evaluator::new(&arena, &m);
        let fusion = Fusion::new(&dict, &ev);
        let chain = Chain::parse("2|1|0", 3).unwrap();
        let (val, s) = fusion.e_apply(&chain, 0, &ModVec::zero()).unwrap();
        assert!(val.is_zero());
        assert_eq!(s, 0);
    }
}
