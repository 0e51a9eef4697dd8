//! The fused currents presented as toroidal generators of rank n-1.
//!
//! Index 0 is the fused chain n-1|0 (or an n = 2 variant); indices
//! 1..n-2 are the perpendicular currents with arguments shifted by
//! q1^{i/(n-1)}, which scales mode r by q1^{-ir/(n-1)}. The relation
//! parameters are (q1^{n/(n-1)}, q2, q3 q1^{-1/(n-1)}) and the central
//! element q^c of the presentation acts by the module level kappa^{-1}.

use super::chain::{Chain, Fusion};
use crate::opcalc::PerpGen;
use crate::repcore::relations::ModeAction;
use crate::repcore::{ModVec, RelTable};
use crate::symrat::{Mono, Rat};

pub struct TildeAction<'a> {
    pub fusion: &'a Fusion<'a>,
    pub chain: Chain,
    table: RelTable,
    /// q1^{1/(n-1)} on the refined exponent lattice.
    q1_frac: Mono,
}

impl<'a> TildeAction<'a> {
    /// The rank n-1 presentation for n >= 3 (scale must be divisible by n-1).
    pub fn new(fusion: &'a Fusion<'a>) -> Self {
        let n = fusion.dict.n;
        assert!(n >= 3);
        let scale = fusion.dict.params.scale;
        let m = (n - 1) as i32;
        assert!(scale % m == 0);
        TildeAction {
            fusion,
            chain: Chain { indices: vec![n - 1, 0], variant: None },
            table: RelTable::fused(n, scale),
            q1_frac: Mono::q1_pow(scale / m, 1),
        }
    }

    /// The two rank-one presentations for n = 2.
    pub fn n2_variant(fusion: &'a Fusion<'a>, variant: u8) -> Self {
        assert_eq!(fusion.dict.n, 2);
        let scale = fusion.dict.params.scale;
        TildeAction {
            fusion,
            chain: Chain { indices: vec![1, 0], variant: Some(variant) },
            table: RelTable::fused_n2_variant(variant, scale),
            q1_frac: Mono::ONE, // unused at rank one
        }
    }

    fn mode_shift(&self, i: usize, r: i32) -> Rat {
        // E~_i(z) = E^perp_i(q1^{i/(n-1)} z) scales mode r by q1^{-ir/(n-1)}
        Rat::from_mono(self.q1_frac.pow(-(i as i32) * r))
    }
}

impl ModeAction for TildeAction<'_> {
    fn rank(&self) -> usize {
        self.fusion.dict.n - 1
    }

    fn table(&self) -> &RelTable {
        &self.table
    }

    fn qc(&self) -> Rat {
        // theta sends q^c to kappa^{-1}: the fused presentation's center
        self.fusion.ev.module.level()
    }

    fn e(&self, i: usize, r: i32, v: &ModVec) -> Result<ModVec, String> {
        if i == 0 {
            Ok(self.fusion.e_apply(&self.chain, r, v)?.0)
        } else {
            let id = self.fusion.dict.perp_mode(PerpGen::E, i, r);
            Ok(self.fusion.ev.apply(id, v)?.scale(&self.mode_shift(i, r)))
        }
    }

    fn f(&self, i: usize, r: i32, v: &ModVec) -> Result<ModVec, String> {
        if i == 0 {
            Ok(self.fusion.f_apply(&self.chain, r, v)?.0)
        } else {
            let id = self.fusion.dict.perp_mode(PerpGen::F, i, r);
            Ok(self.fusion.ev.apply(id, v)?.scale(&self.mode_shift(i, r)))
        }
    }

    fn phi(&self, sign: i8, i: usize, m: i32, v: &ModVec) -> Result<ModVec, String> {
        if (sign > 0 && m < 0) || (sign < 0 && m > 0) {
            return Ok(ModVec::zero());
        }
        if i == 0 {
            self.fusion.k_mode_apply(&self.chain, sign, m, v)
        } else {
            let id = self.fusion.dict.perp_phi(sign, i, m);
            Ok(self.fusion.ev.apply(id, v)?.scale(&self.mode_shift(i, m)))
        }
    }
}
