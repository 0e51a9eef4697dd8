//! Corner commutativity: the upper-left corner subalgebra of rank k and
//! the lower-right corner of rank n-k commute; checked as exact vanishing
//! of cross-commutators of their generators on test vectors.

use serde::Serialize;

use super::chain::{Chain, Fusion};
use crate::opcalc::PerpGen;
use crate::repcore::{Label, ModVec};

/// One generator of a corner subalgebra, in mode form. Argument shifts of
/// the tilde presentation scale modes by nonzero constants, so they are
/// irrelevant to commutator vanishing and omitted here.
#[derive(Clone, Debug)]
pub enum CornerGen {
    PerpE(usize, i32),
    PerpF(usize, i32),
    PerpPhi(i8, usize, i32),
    ChainE(Chain, i32),
    ChainF(Chain, i32),
    ChainPhi(Chain, i8, i32),
}

impl CornerGen {
    pub fn name(&self) -> String {
        match self {
            CornerGen::PerpE(i, r) => format!("Ep({i},{r})"),
            CornerGen::PerpF(i, r) => format!("Fp({i},{r})"),
            CornerGen::PerpPhi(s, i, m) => format!("phip({s},{i},{m})"),
            CornerGen::ChainE(c, r) => format!("E[{}]({r})", c.render()),
            CornerGen::ChainF(c, r) => format!("F[{}]({r})", c.render()),
            CornerGen::ChainPhi(c, s, m) => format!("phi[{}]({s},{m})", c.render()),
        }
    }

    pub fn apply(&self, fusion: &Fusion<'_>, v: &ModVec) -> Result<ModVec, String> {
        match self {
            CornerGen::PerpE(i, r) => {
                fusion.ev.apply(fusion.dict.perp_mode(PerpGen::E, *i, *r), v)
            }
            CornerGen::PerpF(i, r) => {
                fusion.ev.apply(fusion.dict.perp_mode(PerpGen::F, *i, *r), v)
            }
            CornerGen::PerpPhi(s, i, m) => fusion.ev.apply(fusion.dict.perp_phi(*s, *i, *m), v),
            CornerGen::ChainE(c, r) => Ok(fusion.e_apply(c, *r, v)?.0),
            CornerGen::ChainF(c, r) => Ok(fusion.f_apply(c, *r, v)?.0),
            CornerGen::ChainPhi(c, s, m) => fusion.k_mode_apply(c, *s, *m, v),
        }
    }
}

/// Generators of the upper-left corner subalgebra of rank k: standard
/// perpendicular currents at indices 1..k-1 and the fused chain
/// k|k+1|...|n-1|0.
pub fn upper_left_gens(n: usize, k: usize, max_mode: i32) -> Vec<CornerGen> {
    let mut out = Vec::new();
    let chain = Chain::upper_left(n, k);
    for r in -max_mode..=max_mode {
        out.push(CornerGen::ChainE(chain.clone(), r));
        out.push(CornerGen::ChainF(chain.clone(), r));
    }
    for m in 1..=max_mode {
        out.push(CornerGen::ChainPhi(chain.clone(), 1, m));
        out.push(CornerGen::ChainPhi(chain.clone(), -1, -m));
    }
    for i in 1..k {
        for r in -max_mode..=max_mode {
            out.push(CornerGen::PerpE(i, r));
            out.push(CornerGen::PerpF(i, r));
        }
        for m in 1..=max_mode {
            out.push(CornerGen::PerpPhi(1, i, m));
            out.push(CornerGen::PerpPhi(-1, i, -m));
        }
    }
    out
}

/// Generators of the lower-right corner subalgebra of rank n-k: standard
/// perpendicular currents at indices k+1..n-1 and the chain k|k-1|...|1|0.
pub fn lower_right_gens(n: usize, k: usize, max_mode: i32) -> Vec<CornerGen> {
    let mut out = Vec::new();
    let chain = Chain::lower_right(n, k);
    for r in -max_mode..=max_mode {
        out.push(CornerGen::ChainE(chain.clone(), r));
        out.push(CornerGen::ChainF(chain.clone(), r));
    }
    for m in 1..=max_mode {
        out.push(CornerGen::ChainPhi(chain.clone(), 1, m));
        out.push(CornerGen::ChainPhi(chain.clone(), -1, -m));
    }
    for i in k + 1..n {
        for r in -max_mode..=max_mode {
            out.push(CornerGen::PerpE(i, r));
            out.push(CornerGen::PerpF(i, r));
        }
        for m in 1..=max_mode {
            out.push(CornerGen::PerpPhi(1, i, m));
            out.push(CornerGen::PerpPhi(-1, i, -m));
        }
    }
    out
}

#[derive(Clone, Debug, Serialize)]
pub struct CommuteReport {
    pub left: String,
    pub right: String,
    pub vector: String,
    pub residual_zero: bool,
}

/// Cross-commutators of the two corner subalgebras on the given vectors.
pub fn check_corner_commute(
    fusion: &Fusion<'_>,
    k: usize,
    vectors: &[Label],
    max_mode: i32,
    mut progress: Option<&mut dyn FnMut(&CommuteReport)>,
) -> Result<Vec<CommuteReport>, String> {
    let n = fusion.dict.n;
    let left = upper_left_gens(n, k, max_mode);
    let right = lower_right_gens(n, k, max_mode);
    let mut out = Vec::new();
    for label in vectors {
        let v = ModVec::basis(label.clone());
        for a in &left {
            for b in &right {
                let av = a.apply(fusion, &v)?;
                let bv = b.apply(fusion, &v)?;
                let ab = a.apply(fusion, &bv)?;
                let ba = b.apply(fusion, &av)?;
                let ok = ab.sub(&ba).is_zero();
                let rep = CommuteReport {
                    left: a.name(),
                    right: b.name(),
                    vector: label.render(),
                    residual_zero: ok,
                };
                if let Some(cb) = progress.as_deref_mut() {
                    cb(&rep);
                }
                out.push(rep);
            }
        }
    }
    Ok(out)
}
