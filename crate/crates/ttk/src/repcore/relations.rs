//! Residual engine for the defining relations.
//!
//! Relations are checked in mode form: a relation between currents becomes a
//! family of operator identities indexed by integer modes, evaluated exactly
//! on basis vectors. Anything acting through the `ModeAction` trait can be
//! checked, which is how the fused tilde currents share these templates.

use super::module::{Label, ModVec, Module};
use super::reltable::{PairPoly, RelTable};
use crate::symrat::Rat;

/// Mode-level generator actions of one toroidal presentation.
pub trait ModeAction {
    fn rank(&self) -> usize;
    fn table(&self) -> &RelTable;
    /// Central value of q^c in this presentation.
    fn qc(&self) -> Rat;
    fn e(&self, i: usize, r: i32, v: &ModVec) -> Result<ModVec, String>;
    fn f(&self, i: usize, r: i32, v: &ModVec) -> Result<ModVec, String>;
    /// Mode m of K^{sign}: phi^+_{i,m} needs m >= 0, phi^-_{i,m} needs
    /// m <= 0; out-of-range modes are the zero operator.
    fn phi(&self, sign: i8, i: usize, m: i32, v: &ModVec) -> Result<ModVec, String>;
}

/// The standard generators acting on a module.
pub struct StandardAction<'a> {
    pub module: &'a Module,
    pub table: RelTable,
}

impl<'a> StandardAction<'a> {
    pub fn new(module: &'a Module) -> Self {
        let table = RelTable::standard(module.n, module.params.scale);
        StandardAction { module, table }
    }
}

impl ModeAction for StandardAction<'_> {
    fn rank(&self) -> usize {
        self.module.n
    }

    fn table(&self) -> &RelTable {
        &self.table
    }

    fn qc(&self) -> Rat {
        Rat::one()
    }

    fn e(&self, i: usize, r: i32, v: &ModVec) -> Result<ModVec, String> {
        self.module.e_mode(i, r, v)
    }

    fn f(&self, i: usize, r: i32, v: &ModVec) -> Result<ModVec, String> {
        self.module.f_mode(i, r, v)
    }

    fn phi(&self, sign: i8, i: usize, m: i32, v: &ModVec) -> Result<ModVec, String> {
        if (sign > 0 && m < 0) || (sign < 0 && m > 0) {
            return Ok(ModVec::zero());
        }
        // diagonal on weight bases
        let mut out = ModVec::zero();
        for (label, c) in &v.terms {
            let val = if m == 0 {
                self.module.k_const(label, i, sign as i32)?
            } else {
                self.module.phi_mode(label, i, m)
            };
            out.add_term(label.clone(), &val * c);
        }
        Ok(out)
    }
}

/// One summand of a relation: a scalar times a composition of mode
/// operators, written left to right (the rightmost acts first).
#[derive(Clone, Debug)]
pub enum Op {
    E(usize, i32),
    F(usize, i32),
    Phi(i8, usize, i32),
}

#[derive(Clone, Debug)]
pub struct Term {
    pub coeff: Rat,
    pub ops: Vec<Op>,
}

pub fn eval_terms<A: ModeAction>(act: &A, terms: &[Term], v: &ModVec) -> Result<ModVec, String> {
    let mut acc = ModVec::zero();
    for t in terms {
        if t.coeff.is_zero() {
            continue;
        }
        let mut cur = v.clone();
        for op in t.ops.iter().rev() {
            if cur.is_zero() {
                break;
            }
            cur = match *op {
                Op::E(i, r) => act.e(i, r, &cur)?,
                Op::F(i, r) => act.f(i, r, &cur)?,
                Op::Phi(s, i, m) => act.phi(s, i, m, &cur)?,
            };
        }
        acc = acc.add(&cur.scale(&t.coeff));
    }
    Ok(acc)
}

/// EE quadratic: d_{ij} g_{ij}(z,w) E_i(z)E_j(w) + g_{ji}(w,z) E_j(w)E_i(z)
/// at modes (a, b).
pub fn ee_quadratic<A: ModeAction>(
    act: &A,
    i: usize,
    j: usize,
    a: i32,
    b: i32,
    v: &ModVec,
) -> Result<ModVec, String> {
    let t = act.table();
    let d = t.d_const(i, j);
    let mut terms = Vec::new();
    for (zd, wd, c) in t.g(i, j) {
        terms.push(Term { coeff: &c * &d, ops: vec![Op::E(i, a + zd), Op::E(j, b + wd)] });
    }
    for (wd, zd, c) in t.g(j, i) {
        terms.push(Term { coeff: c, ops: vec![Op::E(j, b + wd), Op::E(i, a + zd)] });
    }
    eval_terms(act, &terms, v)
}

/// FF quadratic: d_{ji} g_{ji}(w,z) F_i(z)F_j(w) + g_{ij}(z,w) F_j(w)F_i(z).
pub fn ff_quadratic<A: ModeAction>(
    act: &A,
    i: usize,
    j: usize,
    a: i32,
    b: i32,
    v: &ModVec,
) -> Result<ModVec, String> {
    let t = act.table();
    let d = t.d_const(j, i);
    let mut terms = Vec::new();
    for (wd, zd, c) in t.g(j, i) {
        terms.push(Term { coeff: &c * &d, ops: vec![Op::F(i, a + zd), Op::F(j, b + wd)] });
    }
    for (zd, wd, c) in t.g(i, j) {
        terms.push(Term { coeff: c, ops: vec![Op::F(j, b + wd), Op::F(i, a + zd)] });
    }
    eval_terms(act, &terms, v)
}

/// EF relation at modes (a, b). Extracting the z^{-a} w^{-b} coefficient of
/// [E_i(z), F_j(w)] = delta_{ij}/(q-q^{-1}) (delta(Cw/z) K^+_i(z)
///                     - delta(Cz/w) K^-_i(w))
/// with C the central q^c value gives
/// [E_{i,a}, F_{j,b}] = delta_{ij}/(q-q^{-1})
///                      (C^{-b} phi^+_{i,a+b} - C^{-a} phi^-_{i,a+b}).
pub fn ef_relation<A: ModeAction>(
    act: &A,
    i: usize,
    j: usize,
    a: i32,
    b: i32,
    v: &ModVec,
) -> Result<ModVec, String> {
    let mut terms = vec![
        Term { coeff: Rat::one(), ops: vec![Op::E(i, a), Op::F(j, b)] },
        Term { coeff: -Rat::one(), ops: vec![Op::F(j, b), Op::E(i, a)] },
    ];
    if i == j {
        let qdiff = &Rat::from_mono(act.table().q) - &Rat::from_mono(act.table().q).inv();
        let qc = act.qc();
        let m = a + b;
        if m >= 0 {
            terms.push(Term {
                coeff: -(&qc.pow(-b) / &qdiff),
                ops: vec![Op::Phi(1, i, m)],
            });
        }
        if m <= 0 {
            terms.push(Term { coeff: &qc.pow(-a) / &qdiff, ops: vec![Op::Phi(-1, i, m)] });
        }
    }
    eval_terms(act, &terms, v)
}

/// K^{sign} E relation at modes (a, b), in operator form:
/// d_{ij} g_{ij}(z,w) K^s_i(cz) E_j(w) + g_{ji}(w,z) E_j(w) K^s_i(cz) = 0,
/// with c = qc for sign = -1 and c = 1 for sign = +1.
pub fn ke_relation<A: ModeAction>(
    act: &A,
    sign: i8,
    i: usize,
    j: usize,
    a: i32,
    b: i32,
    v: &ModVec,
) -> Result<ModVec, String> {
    let t = act.table();
    let d = t.d_const(i, j);
    let shift = if sign < 0 { act.qc() } else { Rat::one() };
    let mut terms = Vec::new();
    for (zd, wd, c) in t.g(i, j) {
        let m = a + zd;
        terms.push(Term {
            coeff: &(&c * &d) * &shift.pow(-m),
            ops: vec![Op::Phi(sign, i, m), Op::E(j, b + wd)],
        });
    }
    for (wd, zd, c) in t.g(j, i) {
        let m = a + zd;
        terms.push(Term {
            coeff: &c * &shift.pow(-m),
            ops: vec![Op::E(j, b + wd), Op::Phi(sign, i, m)],
        });
    }
    eval_terms(act, &terms, v)
}

/// K^{sign} F relation at modes (a, b):
/// d_{ji} g_{ji}(w,z) K^s_i(cz) F_j(w) + g_{ij}(z,w) F_j(w) K^s_i(cz) = 0,
/// with c = qc for sign = +1 and c = 1 for sign = -1.
pub fn kf_relation<A: ModeAction>(
    act: &A,
    sign: i8,
    i: usize,
    j: usize,
    a: i32,
    b: i32,
    v: &ModVec,
) -> Result<ModVec, String> {
    let t = act.table();
    let d = t.d_const(j, i);
    let shift = if sign > 0 { act.qc() } else { Rat::one() };
    let mut terms = Vec::new();
    for (wd, zd, c) in t.g(j, i) {
        let m = a + zd;
        terms.push(Term {
            coeff: &(&c * &d) * &shift.pow(-m),
            ops: vec![Op::Phi(sign, i, m), Op::F(j, b + wd)],
        });
    }
    for (zd, wd, c) in t.g(i, j) {
        let m = a + zd;
        terms.push(Term {
            coeff: &c * &shift.pow(-m),
            ops: vec![Op::F(j, b + wd), Op::Phi(sign, i, m)],
        });
    }
    eval_terms(act, &terms, v)
}

/// Same-sign K currents commute: [K^s_i mode a, K^s_j mode b] = 0.
pub fn kk_same_sign<A: ModeAction>(
    act: &A,
    sign: i8,
    i: usize,
    j: usize,
    a: i32,
    b: i32,
    v: &ModVec,
) -> Result<ModVec, String> {
    let terms = vec![
        Term { coeff: Rat::one(), ops: vec![Op::Phi(sign, i, a), Op::Phi(sign, j, b)] },
        Term { coeff: -Rat::one(), ops: vec![Op::Phi(sign, j, b), Op::Phi(sign, i, a)] },
    ];
    eval_terms(act, &terms, v)
}

fn poly_mul(a: &PairPoly, b: &PairPoly) -> PairPoly {
    let mut out: Vec<(i32, i32, Rat)> = Vec::new();
    for (za, wa, ca) in a {
        for (zb, wb, cb) in b {
            let z = za + zb;
            let w = wa + wb;
            let c = ca * cb;
            if let Some(slot) = out.iter_mut().find(|(z0, w0, _)| *z0 == z && *w0 == w) {
                slot.2 = &slot.2 + &c;
            } else {
                out.push((z, w, c));
            }
        }
    }
    out.retain(|(_, _, c)| !c.is_zero());
    out
}

fn poly_scale_z(p: &PairPoly, c: &Rat) -> PairPoly {
    p.iter().map(|(z, w, k)| (*z, *w, k * &c.pow(*z))).collect()
}

fn poly_swap(p: &PairPoly) -> PairPoly {
    p.iter().map(|(a, b, c)| (*b, *a, c.clone())).collect()
}

/// Mixed K relation at modes (a, b), cross-multiplied:
/// g_{ij}(qc^{-1}z, w) g_{ji}(w, qc z) K^-_i(z) K^+_j(w)
///  = g_{ji}(w, qc^{-1}z) g_{ij}(qc z, w) K^+_j(w) K^-_i(z).
pub fn kk_mixed<A: ModeAction>(
    act: &A,
    i: usize,
    j: usize,
    a: i32,
    b: i32,
    v: &ModVec,
) -> Result<ModVec, String> {
    let t = act.table();
    let qc = act.qc();
    let qci = qc.inv();
    let gij = t.g(i, j);
    let gji_swapped = poly_swap(&t.g(j, i)); // as (z-deg, w-deg, c)
    let lhs = poly_mul(&poly_scale_z(&gij, &qci), &poly_scale_z(&gji_swapped, &qc));
    let rhs = poly_mul(&poly_scale_z(&gji_swapped, &qci), &poly_scale_z(&gij, &qc));
    let mut terms = Vec::new();
    for (zd, wd, c) in &lhs {
        terms.push(Term {
            coeff: c.clone(),
            ops: vec![Op::Phi(-1, i, a + zd), Op::Phi(1, j, b + wd)],
        });
    }
    for (zd, wd, c) in &rhs {
        terms.push(Term {
            coeff: -c.clone(),
            ops: vec![Op::Phi(1, j, b + wd), Op::Phi(-1, i, a + zd)],
        });
    }
    eval_terms(act, &terms, v)
}

/// Serre relation for n >= 3 at modes (a1, a2, b), for j = i +- 1:
/// Sym_{z1,z2} [X_i(z1), [X_i(z2), X_j(w)]_q]_{q^{-1}} with X = E or F.
pub fn serre_n3<A: ModeAction>(
    act: &A,
    raising: bool,
    i: usize,
    j: usize,
    a1: i32,
    a2: i32,
    b: i32,
    v: &ModVec,
) -> Result<ModVec, String> {
    let q = Rat::from_mono(act.table().q);
    let qi = q.inv();
    let op = |idx: usize, m: i32| if raising { Op::E(idx, m) } else { Op::F(idx, m) };
    let mut terms = Vec::new();
    for (x1, x2) in [(a1, a2), (a2, a1)] {
        // [A(x1), [A(x2), B]_q]_{q^{-1}}
        // = A1 A2 B - q A1 B A2 - q^{-1} A2 B A1 + B A2 A1
        terms.push(Term {
            coeff: Rat::one(),
            ops: vec![op(i, x1), op(i, x2), op(j, b)],
        });
        terms.push(Term { coeff: -q.clone(), ops: vec![op(i, x1), op(j, b), op(i, x2)] });
        terms.push(Term { coeff: -qi.clone(), ops: vec![op(i, x2), op(j, b), op(i, x1)] });
        terms.push(Term { coeff: Rat::one(), ops: vec![op(j, b), op(i, x2), op(i, x1)] });
    }
    eval_terms(act, &terms, v)
}

/// Commutation [X_i(z), X_j(w)] = 0 for non-adjacent i, j (n >= 4).
pub fn commuting_pair<A: ModeAction>(
    act: &A,
    raising: bool,
    i: usize,
    j: usize,
    a: i32,
    b: i32,
    v: &ModVec,
) -> Result<ModVec, String> {
    let op = |idx: usize, m: i32| if raising { Op::E(idx, m) } else { Op::F(idx, m) };
    let terms = vec![
        Term { coeff: Rat::one(), ops: vec![op(i, a), op(j, b)] },
        Term { coeff: -Rat::one(), ops: vec![op(j, b), op(i, a)] },
    ];
    eval_terms(act, &terms, v)
}

/// Quartic Serre relation for n = 2, i != j, at modes (a1, a2, a3, b):
/// Sym_{z1,z2,z3} [X_i(z1), [X_i(z2), [X_i(z3), X_j(w)]_{q^2}]]_{q^{-2}}.
pub fn quartic_n2<A: ModeAction>(
    act: &A,
    raising: bool,
    i: usize,
    j: usize,
    a: [i32; 3],
    b: i32,
    v: &ModVec,
) -> Result<ModVec, String> {
    let q2 = Rat::from_mono(act.table().q).pow(2);
    let q2i = q2.inv();
    let op = |idx: usize, m: i32| if raising { Op::E(idx, m) } else { Op::F(idx, m) };
    let mut terms = Vec::new();
    let perms = [
        [a[0], a[1], a[2]],
        [a[0], a[2], a[1]],
        [a[1], a[0], a[2]],
        [a[1], a[2], a[0]],
        [a[2], a[0], a[1]],
        [a[2], a[1], a[0]],
    ];
    for [x1, x2, x3] in perms {
        // inner1 = A(x3) B - q^2 B A(x3)
        // inner2 = A(x2) inner1 - inner1 A(x2)
        // outer  = A(x1) inner2 - q^{-2} inner2 A(x1)
        let inner1 = [
            (Rat::one(), vec![op(i, x3), op(j, b)]),
            (-q2.clone(), vec![op(j, b), op(i, x3)]),
        ];
        let mut inner2: Vec<(Rat, Vec<Op>)> = Vec::new();
        for (c, ops) in &inner1 {
            let mut left = vec![op(i, x2)];
            left.extend(ops.iter().cloned());
            inner2.push((c.clone(), left));
            let mut right = ops.clone();
            right.push(op(i, x2));
            inner2.push((-c.clone(), right));
        }
        for (c, ops) in &inner2 {
            let mut left = vec![op(i, x1)];
            left.extend(ops.iter().cloned());
            terms.push(Term { coeff: c.clone(), ops: left });
            let mut right = ops.clone();
            right.push(op(i, x1));
            terms.push(Term { coeff: -(&q2i * c), ops: right });
        }
    }
    eval_terms(act, &terms, v)
}

/// Cubic relations for n = 2, i != j, at modes (a1, a2, b). `swap` selects
/// the q1 <-> q3 interchanged variant. For the E side:
/// Sym_{z1,z2}[ q1 (z1-q3 w)(z2-q3 w) E_i E_i E_j
///   - (1+q2^{-1})(z1-q3 w)(q1 z2-w) E_i E_j E_i
///   + q3 (q1 z1-w)(q1 z2-w) E_j E_i E_i ] = 0,
/// and the F side with the coefficient pattern transposed.
pub fn cubic_n2<A: ModeAction>(
    act: &A,
    raising: bool,
    swap: bool,
    i: usize,
    j: usize,
    a1: i32,
    a2: i32,
    b: i32,
    v: &ModVec,
) -> Result<ModVec, String> {
    let t = act.table();
    let (q1, q3) = if swap {
        (Rat::from_mono(t.q3), Rat::from_mono(t.q1))
    } else {
        (Rat::from_mono(t.q1), Rat::from_mono(t.q3))
    };
    let q2i = Rat::from_mono(t.q2).inv();
    let one = Rat::one();
    let op = |idx: usize, m: i32| if raising { Op::E(idx, m) } else { Op::F(idx, m) };
    // factor (z - q3 w) over variable slots: (dz, dw, coeff)
    let lin = |cz: &Rat, cw: &Rat| -> Vec<(i32, i32, Rat)> {
        vec![(1, 0, cz.clone()), (0, 1, -cw.clone())]
    };
    let z_minus_q3w = lin(&one, &q3);
    let q1z_minus_w = lin(&q1, &one);
    let mut terms = Vec::new();
    for (x1, x2) in [(a1, a2), (a2, a1)] {
        // products of two linear factors in (z1, w) x (z2, w)
        let combos: [(Rat, &Vec<(i32, i32, Rat)>, &Vec<(i32, i32, Rat)>, [usize; 3]); 3] = if raising
        {
            [
                (q1.clone(), &z_minus_q3w, &z_minus_q3w, [0, 1, 2]), // E_i E_i E_j
                (
                    -(&one + &q2i),
                    &z_minus_q3w,
                    &q1z_minus_w,
                    [0, 2, 1], // E_i(z1) E_j(w) E_i(z2)
                ),
                (q3.clone(), &q1z_minus_w, &q1z_minus_w, [2, 0, 1]), // E_j E_i E_i
            ]
        } else {
            [
                (q3.clone(), &q1z_minus_w, &q1z_minus_w, [0, 1, 2]), // F_i F_i F_j
                (-(&one + &q2i), &q1z_minus_w, &z_minus_q3w, [0, 2, 1]),
                (q1.clone(), &z_minus_q3w, &z_minus_q3w, [2, 0, 1]),
            ]
        };
        for (cf, f1, f2, order) in combos {
            for (d1z, d1w, c1) in f1.iter() {
                for (d2z, d2w, c2) in f2.iter() {
                    // modes: z1 -> x1 + d1z, z2 -> x2 + d2z, w -> b + d1w + d2w
                    let m1 = x1 + d1z;
                    let m2 = x2 + d2z;
                    let mw = b + d1w + d2w;
                    // order lists operator positions: 0 -> X_i(z1),
                    // 1 -> X_i(z2), 2 -> X_j(w), leftmost first
                    let mk = |slot: usize| match slot {
                        0 => op(i, m1),
                        1 => op(i, m2),
                        _ => op(j, mw),
                    };
                    terms.push(Term {
                        coeff: &(&cf * c1) * c2,
                        ops: vec![mk(order[0]), mk(order[1]), mk(order[2])],
                    });
                }
            }
        }
    }
    eval_terms(act, &terms, v)
}

/// Cubic Serre relation for n = 1 at modes (a1, a2, a3):
/// Sym_{z1,z2,z3} z2 z3^{-1} [X(z1), [X(z2), X(z3)]] = 0.
pub fn cubic_n1<A: ModeAction>(
    act: &A,
    raising: bool,
    a: [i32; 3],
    v: &ModVec,
) -> Result<ModVec, String> {
    let op = |m: i32| if raising { Op::E(0, m) } else { Op::F(0, m) };
    let mut terms = Vec::new();
    let perms = [
        [a[0], a[1], a[2]],
        [a[0], a[2], a[1]],
        [a[1], a[0], a[2]],
        [a[1], a[2], a[0]],
        [a[2], a[0], a[1]],
        [a[2], a[1], a[0]],
    ];
    for [x1, x2, x3] in perms {
        // z2 z3^{-1} shifts the modes of the second and third slots
        let (y2, y3) = (x2 + 1, x3 - 1);
        terms.push(Term { coeff: Rat::one(), ops: vec![op(x1), op(y2), op(y3)] });
        terms.push(Term { coeff: -Rat::one(), ops: vec![op(x1), op(y3), op(y2)] });
        terms.push(Term { coeff: -Rat::one(), ops: vec![op(y2), op(y3), op(x1)] });
        terms.push(Term { coeff: Rat::one(), ops: vec![op(y3), op(y2), op(x1)] });
    }
    eval_terms(act, &terms, v)
}

/// Bridge identity between the cubic and quartic relations for n = 2
/// (i != j, sign picks the +-1 mode shift):
/// Sym_{z1,z2}[ (1+q2^{-1}) z2^{s} [E_i(z1), [E_i(z2), E_j(w)]_{q^{-2}}]
///   - (q1+q3) w^{s} [[E_j(w), E_i(z1)]_{q^{-2}}, E_i(z2)] ] = 0.
pub fn bridge_n2<A: ModeAction>(
    act: &A,
    plus: bool,
    i: usize,
    j: usize,
    a1: i32,
    a2: i32,
    b: i32,
    v: &ModVec,
) -> Result<ModVec, String> {
    let t = act.table();
    let q2i = Rat::from_mono(t.q2).inv();
    let q2inv = q2i.clone();
    let c1 = &Rat::one() + &q2i;
    let c2 = &Rat::from_mono(t.q1) + &Rat::from_mono(t.q3);
    let s: i32 = if plus { 1 } else { -1 };
    let mut terms = Vec::new();
    for (x1, x2) in [(a1, a2), (a2, a1)] {
        // (1+q2^{-1}) z2^s [E_i(z1), [E_i(z2), E_j(w)]_{q^{-2}}]
        let y2 = x2 + s;
        terms.push(Term { coeff: c1.clone(), ops: vec![Op::E(i, x1), Op::E(i, y2), Op::E(j, b)] });
        terms.push(Term {
            coeff: -(&c1 * &q2inv),
            ops: vec![Op::E(i, x1), Op::E(j, b), Op::E(i, y2)],
        });
        terms.push(Term { coeff: -c1.clone(), ops: vec![Op::E(i, y2), Op::E(j, b), Op::E(i, x1)] });
        terms.push(Term {
            coeff: &c1 * &q2inv,
            ops: vec![Op::E(j, b), Op::E(i, y2), Op::E(i, x1)],
        });
        // -(q1+q3) w^s [[E_j(w), E_i(z1)]_{q^{-2}}, E_i(z2)]
        let bw = b + s;
        terms.push(Term { coeff: -c2.clone(), ops: vec![Op::E(j, bw), Op::E(i, x1), Op::E(i, x2)] });
        terms.push(Term {
            coeff: &c2 * &q2inv,
            ops: vec![Op::E(i, x1), Op::E(j, bw), Op::E(i, x2)],
        });
        terms.push(Term { coeff: c2.clone(), ops: vec![Op::E(i, x2), Op::E(j, bw), Op::E(i, x1)] });
        terms.push(Term {
            coeff: -(&c2 * &q2inv),
            ops: vec![Op::E(i, x2), Op::E(i, x1), Op::E(j, bw)],
        });
    }
    eval_terms(act, &terms, v)
}

/// Rational-function residual of the K-E relation on a weight basis vector:
/// exact in z, no mode window. Returns the list of failing supports.
pub fn ke_rational(module: &Module, i: usize, j: usize, label: &Label) -> Result<bool, String> {
    let table = RelTable::standard(module.n, module.params.scale);
    let d = table.d_const(i, j);
    let eig_v = module.k_eigen(label, i);
    for (support, target, coeff) in module.current_terms(true, j, label)? {
        if coeff.is_zero() {
            continue;
        }
        let eig_t = module.k_eigen(&target, i);
        // d g_{ij}(z, p) eig_target(z) + g_{ji}(p, z) eig_v(z) = 0
        let p = Rat::from_mono(support);
        let mut poly1 = crate::symrat::ZPoly::zero();
        for (zd, wd, c) in table.g(i, j) {
            let mut coeffs = vec![Rat::zero(); zd as usize + 1];
            coeffs[zd as usize] = &c * &p.pow(wd);
            poly1 = poly1.add(&crate::symrat::ZPoly { coeffs });
        }
        let mut poly2 = crate::symrat::ZPoly::zero();
        for (wd, zd, c) in table.g(j, i) {
            let mut coeffs = vec![Rat::zero(); zd as usize + 1];
            coeffs[zd as usize] = &c * &p.pow(wd);
            poly2 = poly2.add(&crate::symrat::ZPoly { coeffs });
        }
        let lhs = eig_t.mul(&crate::symrat::ZRat::new(poly1.scale(&d), crate::symrat::ZPoly::one()));
        let rhs = eig_v.mul(&crate::symrat::ZRat::new(poly2, crate::symrat::ZPoly::one()));
        if !lhs.add(&rhs).is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Rational-function residual of the K-F relation.
pub fn kf_rational(module: &Module, i: usize, j: usize, label: &Label) -> Result<bool, String> {
    let table = RelTable::standard(module.n, module.params.scale);
    let d = table.d_const(j, i);
    let eig_v = module.k_eigen(label, i);
    for (support, target, coeff) in module.current_terms(false, j, label)? {
        if coeff.is_zero() {
            continue;
        }
        let eig_t = module.k_eigen(&target, i);
        let p = Rat::from_mono(support);
        let mut poly1 = crate::symrat::ZPoly::zero();
        for (wd, zd, c) in table.g(j, i) {
            let mut coeffs = vec![Rat::zero(); zd as usize + 1];
            coeffs[zd as usize] = &c * &p.pow(wd);
            poly1 = poly1.add(&crate::symrat::ZPoly { coeffs });
        }
        let mut poly2 = crate::symrat::ZPoly::zero();
        for (zd, wd, c) in table.g(i, j) {
            let mut coeffs = vec![Rat::zero(); zd as usize + 1];
            coeffs[zd as usize] = &c * &p.pow(wd);
            poly2 = poly2.add(&crate::symrat::ZPoly { coeffs });
        }
        let lhs = eig_t.mul(&crate::symrat::ZRat::new(poly1.scale(&d), crate::symrat::ZPoly::one()));
        let rhs = eig_v.mul(&crate::symrat::ZRat::new(poly2, crate::symrat::ZPoly::one()));
        if !lhs.add(&rhs).is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::repcore::module::Params;

    fn vacuum() -> ModVec {
        ModVec::basis(Label::Part(crate::combin::Partition::empty()))
    }

    #[test]
    fn ef_on_vacuum_n1() {
        let m = Module::fock(1, 0, Params::unit());
        let act = StandardAction::new(&m);
        for r in -2..=2 {
            let res = ef_relation(&act, 0, 0, r, -r, &vacuum()).unwrap();
            assert!(res.is_zero(), "EF residual at r={r}: {}", res.render());
        }
    }

    #[test]
    fn ee_quadratic_small_n2() {
        let m = Module::fock(2, 0, Params::unit());
        let act = StandardAction::new(&m);
        for i in 0..2 {
            for j in 0..2 {
                for a in -1..=1 {
                    for b in -1..=1 {
                        let res = ee_quadratic(&act, i, j, a, b, &vacuum()).unwrap();
                        assert!(res.is_zero(), "EE({i},{j}) at ({a},{b}): {}", res.render());
                    }
                }
            }
        }
    }

    #[test]
    fn ke_rational_small() {
        for n in [1usize, 2, 3] {
            let m = Module::fock(n, 0, Params::unit());
            for lam in crate::combin::partitions_up_to(3) {
                let label = Label::Part(lam);
                for i in 0..n {
                    for j in 0..n {
                        assert!(ke_rational(&m, i, j, &label).unwrap());
                        assert!(kf_rational(&m, i, j, &label).unwrap());
                    }
                }
            }
        }
    }
}
