//! Interned operator expression trees.

use std::collections::HashMap;
use std::sync::Mutex;

use crate::symrat::Rat;

/// Handle into an `OpArena`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct OpId(pub u32);

/// Operator expression node. Atoms are standard generators in mode form;
/// kappa and q^c resolve to the module's central values at evaluation time.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Node {
    E(usize, i32),
    F(usize, i32),
    /// K_i^{power}
    K(usize, i32),
    H(usize, i32),
    Kappa(i32),
    Qc(i32),
    Scalar(Rat),
    Sum(Vec<OpId>),
    /// Composition; the rightmost factor acts first.
    Prod(Vec<OpId>),
    /// [A, B]_p = A B - p B A
    Br(OpId, OpId, Rat),
}

/// Hash-consing arena: structurally equal expressions share one id, which is
/// what makes (expression, basis label) memoization effective.
#[derive(Default)]
pub struct OpArena {
    inner: Mutex<ArenaInner>,
}

#[derive(Default)]
struct ArenaInner {
    nodes: Vec<Node>,
    intern: HashMap<Node, OpId>,
}

impl OpArena {
    pub fn new() -> Self {
        OpArena::default()
    }

    pub fn intern(&self, node: Node) -> OpId {
        let mut g = self.inner.lock().unwrap();
        if let Some(id) = g.intern.get(&node) {
            return *id;
        }
        let id = OpId(g.nodes.len() as u32);
        g.nodes.push(node.clone());
        g.intern.insert(node, id);
        id
    }

    pub fn node(&self, id: OpId) -> Node {
        self.inner.lock().unwrap().nodes[id.0 as usize].clone()
    }

    pub fn e(&self, i: usize, k: i32) -> OpId {
        self.intern(Node::E(i, k))
    }

    pub fn f(&self, i: usize, k: i32) -> OpId {
        self.intern(Node::F(i, k))
    }

    pub fn k(&self, i: usize, pow: i32) -> OpId {
        self.intern(Node::K(i, pow))
    }

    pub fn h(&self, i: usize, r: i32) -> OpId {
        self.intern(Node::H(i, r))
    }

    pub fn kappa(&self, pow: i32) -> OpId {
        self.intern(Node::Kappa(pow))
    }

    pub fn qc(&self, pow: i32) -> OpId {
        self.intern(Node::Qc(pow))
    }

    pub fn scalar(&self, c: Rat) -> OpId {
        self.intern(Node::Scalar(c))
    }

    pub fn sum(&self, xs: Vec<OpId>) -> OpId {
        self.intern(Node::Sum(xs))
    }

    pub fn prod(&self, xs: Vec<OpId>) -> OpId {
        self.intern(Node::Prod(xs))
    }

    pub fn br(&self, a: OpId, b: OpId, p: Rat) -> OpId {
        self.intern(Node::Br(a, b, p))
    }

    /// Plain commutator [a, b].
    pub fn comm(&self, a: OpId, b: OpId) -> OpId {
        self.br(a, b, Rat::one())
    }

    pub fn scaled(&self, c: Rat, x: OpId) -> OpId {
        if c.is_one() {
            x
        } else {
            self.prod(vec![self.scalar(c), x])
        }
    }

    pub fn render(&self, id: OpId) -> String {
        match self.node(id) {
            Node::E(i, k) => format!("(E {i} {k})"),
            Node::F(i, k) => format!("(F {i} {k})"),
            Node::K(i, p) => format!("(K {i} {p})"),
            Node::H(i, r) => format!("(H {i} {r})"),
            Node::Kappa(p) => format!("(kappa {p})"),
            Node::Qc(p) => format!("(qc {p})"),
            Node::Scalar(c) => format!("(scalar {c})"),
            Node::Sum(xs) => {
                let inner: Vec<String> = xs.iter().map(|x| self.render(*x)).collect();
                format!("(sum {})", inner.join(" "))
            }
            Node::Prod(xs) => {
                let inner: Vec<String> = xs.iter().map(|x| self.render(*x)).collect();
                format!("(prod {})", inner.join(" "))
            }
            Node::Br(a, b, p) => {
                format!("(qbr {} {} {})", p, self.render(a), self.render(b))
            }
        }
    }
}
