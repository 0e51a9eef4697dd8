//! Relation suite for the fused subalgebra.

use serde::Serialize;

use super::tilde::TildeAction;
use crate::repcore::relations::{
    cubic_n1, ee_quadratic, ef_relation, ff_quadratic, ke_relation, kf_relation, kk_mixed,
    kk_same_sign, quartic_n2, ModeAction,
};
use crate::repcore::{Label, ModVec};

#[derive(Clone, Debug, Serialize)]
pub struct RelReport {
    pub relation: String,
    pub vector: String,
    pub residual_zero: bool,
}

/// Check every defining relation of the rank n-1 presentation on the given
/// basis vectors. Mode windows: |r| <= max_mode for two-current relations,
/// one less for each extra current in Serre relations (floor 1).
pub fn check_subalgebra(
    act: &TildeAction<'_>,
    vectors: &[Label],
    max_mode: i32,
    mut progress: Option<&mut dyn FnMut(&RelReport)>,
) -> Result<Vec<RelReport>, String> {
    let m = act.rank();
    let mut out = Vec::new();
    let w2: Vec<i32> = (-max_mode..=max_mode).collect();
    let w3: Vec<i32> = (-(max_mode - 1).max(1)..=(max_mode - 1).max(1)).collect();
    let w4: Vec<i32> = (-(max_mode - 2).max(1)..=(max_mode - 2).max(1)).collect();
    for label in vectors {
        let v = ModVec::basis(label.clone());
        let mut push = |name: String, ok: bool, out: &mut Vec<RelReport>| {
            let rep = RelReport { relation: name, vector: label.render(), residual_zero: ok };
            if let Some(cb) = progress.as_deref_mut() {
                cb(&rep);
            }
            out.push(rep);
        };
        for i in 0..m {
            for j in 0..m {
                // quadratic EE / FF
                let mut ok_ee = true;
                let mut ok_ff = true;
                for &a in &w2 {
                    for &b in &w2 {
                        ok_ee &= ee_quadratic(act, i, j, a, b, &v)?.is_zero();
                        ok_ff &= ff_quadratic(act, i, j, a, b, &v)?.is_zero();
                    }
                }
                push(format!("ee-quadratic(i={i},j={j})"), ok_ee, &mut out);
                push(format!("ff-quadratic(i={i},j={j})"), ok_ff, &mut out);
                // EF
                let mut ok_ef = true;
                for &a in &w2 {
                    for &b in &w2 {
                        ok_ef &= ef_relation(act, i, j, a, b, &v)?.is_zero();
                    }
                }
                push(format!("ef(i={i},j={j})"), ok_ef, &mut out);
                // K relations, operator form
                let mut ok_ke = true;
                let mut ok_kf = true;
                for sign in [1i8, -1] {
                    for &a in &w2 {
                        for &b in &w2 {
                            ok_ke &= ke_relation(act, sign, i, j, a, b, &v)?.is_zero();
                            ok_kf &= kf_relation(act, sign, i, j, a, b, &v)?.is_zero();
                        }
                    }
                }
                push(format!("ke(i={i},j={j})"), ok_ke, &mut out);
                push(format!("kf(i={i},j={j})"), ok_kf, &mut out);
                let mut ok_kk = true;
                for sign in [1i8, -1] {
                    for &a in &w2 {
                        for &b in &w2 {
                            ok_kk &= kk_same_sign(act, sign, i, j, a, b, &v)?.is_zero();
                        }
                    }
                }
                for &a in &w2 {
                    for &b in &w2 {
                        ok_kk &= kk_mixed(act, i, j, a, b, &v)?.is_zero();
                    }
                }
                push(format!("kk(i={i},j={j})"), ok_kk, &mut out);
            }
        }
        // Serre relations by rank
        if m == 1 {
            let mut ok = true;
            for &a1 in &w3 {
                for &a2 in &w3 {
                    if a2 < a1 {
                        continue;
                    }
                    for &a3 in &w3 {
                        if a3 < a2 {
                            continue;
                        }
                        ok &= cubic_n1(act, true, [a1, a2, a3], &v)?.is_zero();
                        ok &= cubic_n1(act, false, [a1, a2, a3], &v)?.is_zero();
                    }
                }
            }
            push("serre-cubic".into(), ok, &mut out);
        } else if m == 2 {
            let mut ok = true;
            for (i, j) in [(0usize, 1usize), (1, 0)] {
                for &a1 in &w4 {
                    for &a2 in &w4 {
                        if a2 < a1 {
                            continue;
                        }
                        for &a3 in &w4 {
                            if a3 < a2 {
                                continue;
                            }
                            for &b in &w4 {
                                ok &= quartic_n2(act, true, i, j, [a1, a2, a3], b, &v)?
                                    .is_zero();
                                ok &= quartic_n2(act, false, i, j, [a1, a2, a3], b, &v)?
                                    .is_zero();
                            }
                        }
                    }
                }
            }
            push("serre-quartic".into(), ok, &mut out);
        }
    }
    Ok(out)
}
