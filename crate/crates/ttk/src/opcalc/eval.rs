//! Memoized evaluation of operator expressions on modules.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use super::expr::{Node, OpArena, OpId};
use crate::repcore::{Label, ModVec, Module};
use crate::symrat::Rat;

/// Evaluator bound to one module instance. Results are cached per
/// (expression, basis label); nested bracket chains revisit identical
/// sub-applications exponentially often without this.
pub struct Evaluator<'a> {
    pub arena: &'a OpArena,
    pub module: &'a Module,
    cache: Mutex<HashMap<(OpId, Label), Arc<ModVec>>>,
}

impl<'a> Evaluator<'a> {
    pub fn new(arena: &'a OpArena, module: &'a Module) -> Self {
        Evaluator { arena, module, cache: Mutex::new(HashMap::new()) }
    }

    pub fn apply(&self, id: OpId, v: &ModVec) -> Result<ModVec, String> {
        let mut out = ModVec::zero();
        for (label, c) in &v.terms {
            let part = self.apply_label(id, label)?;
            out = out.add(&part.scale(c));
        }
        Ok(out)
    }

    fn apply_label(&self, id: OpId, label: &Label) -> Result<Arc<ModVec>, String> {
        let key = (id, label.clone());
        if let Some(hit) = self.cache.lock().unwrap().get(&key) {
            return Ok(hit.clone());
        }
        let v = ModVec::basis(label.clone());
        let out = match self.arena.node(id) {
            Node::E(i, k) => self.module.e_mode(i, k, &v)?,
            Node::F(i, k) => self.module.f_mode(i, k, &v)?,
            Node::K(i, p) => v.scale(&self.module.k_const(label, i, p)?),
            Node::H(i, r) => v.scale(&self.module.h_eigen(label, i, r)?),
            Node::Kappa(p) => v.scale(&self.module.kappa().pow(p)),
            Node::Qc(_) => v, // q^c acts as identity on every module here
            Node::Scalar(c) => v.scale(&c),
            Node::Sum(xs) => {
                let mut acc = ModVec::zero();
                for x in xs {
                    acc = acc.add(&self.apply(x, &v)?);
                }
                acc
            }
            Node::Prod(xs) => {
                let mut cur = v;
                for x in xs.iter().rev() {
                    if cur.is_zero() {
                        break;
                    }
                    cur = self.apply(*x, &cur)?;
                }
                cur
            }
            Node::Br(a, b, p) => {
                let ab = self.apply(a, &self.apply(b, &v)?)?;
                let ba = self.apply(b, &self.apply(a, &v)?)?;
                ab.sub(&ba.scale(&p))
            }
        };
        let arc = Arc::new(out);
        self.cache.lock().unwrap().insert(key, arc.clone());
        Ok(arc)
    }

    /// Diagonal matrix element <label| expr |label>.
    pub fn diagonal(&self, id: OpId, label: &Label) -> Result<Rat, String> {
        Ok(self.apply_label(id, label)?.coeff(label))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combin::Partition;
    use crate::repcore::Params;
    use crate::symrat::{rd, rq};

    #[test]
    fn bracket_expansion_matches_definition() {
        // [A,B]_p v = A(Bv) - p B(Av) on random atoms
        let arena = OpArena::new();
        let m = Module::fock(2, 0, Params::unit());
        let ev = Evaluator::new(&arena, &m);
        let a = arena.e(0, 1);
        let b = arena.f(0, -1);
        let p = &rq() * &rd();
        let br = arena.br(a, b, p.clone());
        let v = ModVec::basis(Label::Part(Partition::new(vec![2, 1])));
        let lhs = ev.apply(br, &v).unwrap();
        let rhs = ev
            .apply(a, &ev.apply(b, &v).unwrap())
            .unwrap()
            .sub(&ev.apply(b, &ev.apply(a, &v).unwrap()).unwrap().scale(&p));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn scalar_scaling() {
        let arena = OpArena::new();
        let m = Module::fock(1, 0, Params::unit());
        let ev = Evaluator::new(&arena, &m);
        let c = &rq() + &rd();
        let s = arena.scalar(c.clone());
        let v = ModVec::basis(Label::Part(Partition::empty()));
        assert_eq!(ev.apply(s, &v).unwrap(), v.scale(&c));
    }
}
