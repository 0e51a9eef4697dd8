//! Module descriptors and the exact generator actions.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Mutex;

use crate::combin::{check_interlacing, partition::corners, Partition};
use crate::symrat::{Dir, Mono, Rat, Series, ZRat};

/// Deformation-parameter helpers at a fixed exponent-lattice scale.
///
/// At scale S every formula reads q^S for q, so fractional powers
/// q1^{k/S} of the fused construction become integral.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Params {
    pub scale: i32,
}

impl Params {
    pub fn unit() -> Self {
        Params { scale: 1 }
    }

    pub fn q(&self) -> Rat {
        Rat::from_mono(Mono::q_pow(self.scale))
    }

    pub fn qi(&self) -> Rat {
        Rat::from_mono(Mono::q_pow(-self.scale))
    }

    pub fn q_pow(&self, e: i32) -> Mono {
        Mono::q_pow(e * self.scale)
    }

    pub fn d_pow(&self, e: i32) -> Mono {
        Mono::d_pow(e * self.scale)
    }

    pub fn q1(&self, e: i32) -> Mono {
        Mono::q1_pow(e, self.scale)
    }

    pub fn q2(&self, e: i32) -> Mono {
        Mono::q2_pow(e, self.scale)
    }

    pub fn q3(&self, e: i32) -> Mono {
        Mono::q3_pow(e, self.scale)
    }

    /// q - q^{-1}
    pub fn qdiff(&self) -> Rat {
        &self.q() - &self.qi()
    }

    /// [2] = q + q^{-1}
    pub fn qnum2(&self) -> Rat {
        &self.q() + &self.qi()
    }

    /// psi(m) = (q - q^{-1} m)/(1 - m) for an exact monomial argument.
    pub fn psi_mono(&self, m: Mono) -> Result<Rat, String> {
        crate::symrat::psi(&Rat::from_mono(m)).map_err(|_| "non-generic collision".to_string())
    }
}

/// Basis label: an integer for the vector representation, a partition for a
/// Fock module, a partition tuple for tensor products.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Label {
    Idx(i64),
    Part(Partition),
    Tuple(Vec<Partition>),
}

impl Label {
    /// Box count for principal-degree bookkeeping (Idx has none).
    pub fn boxes(&self) -> u64 {
        match self {
            Label::Idx(_) => 0,
            Label::Part(p) => p.size(),
            Label::Tuple(t) => t.iter().map(|p| p.size()).sum(),
        }
    }

    pub fn render(&self) -> String {
        match self {
            Label::Idx(j) => j.to_string(),
            Label::Part(p) => p.render(),
            Label::Tuple(t) => {
                let inner: Vec<String> = t.iter().map(|p| p.render()).collect();
                format!("({})", inner.join(","))
            }
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

/// Sparse module vector with exact coefficients.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct ModVec {
    pub terms: BTreeMap<Label, Rat>,
}

impl ModVec {
    pub fn zero() -> Self {
        ModVec { terms: BTreeMap::new() }
    }

    pub fn basis(label: Label) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(label, Rat::one());
        ModVec { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, label: Label, coeff: Rat) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry(label.clone()).or_insert_with(Rat::zero);
        *slot = &*slot + &coeff;
        if slot.is_zero() {
            self.terms.remove(&label);
        }
    }

    pub fn add(&self, other: &ModVec) -> ModVec {
        let mut out = self.clone();
        for (l, c) in &other.terms {
            out.add_term(l.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &ModVec) -> ModVec {
        self.add(&other.scale(&-Rat::one()))
    }

    pub fn scale(&self, c: &Rat) -> ModVec {
        if c.is_zero() {
            return ModVec::zero();
        }
        ModVec { terms: self.terms.iter().map(|(l, x)| (l.clone(), x * c)).collect() }
    }

    pub fn coeff(&self, label: &Label) -> Rat {
        self.terms.get(label).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let parts: Vec<String> =
            self.terms.iter().map(|(l, c)| format!("({}) {}", c, l)).collect();
        parts.join(" + ")
    }
}

/// One Fock tensor factor: color offset and evaluation monomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FockFactor {
    pub color: i64,
    pub eval: Mono,
}

/// The implemented module kinds. The central element q^c acts as identity
/// in all of them.
#[derive(Clone, Debug)]
pub enum ModuleKind {
    /// Basis [u]_j, j in Z.
    Vector { color: i64, eval: Mono },
    /// Basis indexed by partitions.
    Fock(FockFactor),
    /// Finite tensor product of Fock modules via the formal coproduct.
    Tensor(Vec<FockFactor>),
    /// Interlacing submodule of a tensor product:
    /// lambda^{(i)}_j >= lambda^{(i+1)}_{j+b_i} - a_i.
    NSub { factors: Vec<FockFactor>, a: Vec<i64>, b: Vec<i64> },
}

type DeltaTerms = Vec<(usize, Mono, Label, Rat)>; // (color, support, target, coeff)

/// A module instance: descriptor, exponent scale, optional box ceiling and
/// internal caches for matrix elements and eigenvalues.
pub struct Module {
    pub n: usize,
    pub kind: ModuleKind,
    pub params: Params,
    pub max_boxes: Option<u64>,
    add_cache: Mutex<HashMap<Label, std::sync::Arc<DeltaTerms>>>,
    rem_cache: Mutex<HashMap<Label, std::sync::Arc<DeltaTerms>>>,
    keigen_cache: Mutex<HashMap<(Label, usize), ZRat>>,
}

impl Clone for Module {
    fn clone(&self) -> Self {
        Module {
            n: self.n,
            kind: self.kind.clone(),
            params: self.params,
            max_boxes: self.max_boxes,
            add_cache: Mutex::new(HashMap::new()),
            rem_cache: Mutex::new(HashMap::new()),
            keigen_cache: Mutex::new(HashMap::new()),
        }
    }
}

impl Module {
    pub fn new(n: usize, kind: ModuleKind, params: Params) -> Self {
        Module {
            n,
            kind,
            params,
            max_boxes: None,
            add_cache: Mutex::new(HashMap::new()),
            rem_cache: Mutex::new(HashMap::new()),
            keigen_cache: Mutex::new(HashMap::new()),
        }
    }

    pub fn fock(n: usize, color: i64, params: Params) -> Self {
        Module::new(
            n,
            ModuleKind::Fock(FockFactor { color, eval: Mono::u_pow(0, params.scale) }),
            params,
        )
    }

    pub fn vector_rep(n: usize, color: i64, params: Params) -> Self {
        Module::new(
            n,
            ModuleKind::Vector { color, eval: Mono::u_pow(0, params.scale) },
            params,
        )
    }

    /// Tensor of Fock modules with independent symbolic parameters u1, u2, ...
    pub fn tensor(n: usize, colors: &[i64], params: Params) -> Self {
        let factors = colors
            .iter()
            .enumerate()
            .map(|(i, &c)| FockFactor { color: c, eval: Mono::u_pow(i, params.scale) })
            .collect();
        Module::new(n, ModuleKind::Tensor(factors), params)
    }

    /// The interlacing submodule with the evaluation specialization
    /// p_i = p - alpha_i + beta_i, u_i = q1^{alpha_i} q2^{i-1} q3^{beta_i} u.
    pub fn n_sub(n: usize, p: i64, alpha: &[i64], beta: &[i64], params: Params) -> Self {
        assert_eq!(alpha.len(), beta.len());
        let m = alpha.len();
        assert!(m >= 1 && alpha[m - 1] == 0 && beta[m - 1] == 0);
        let factors: Vec<FockFactor> = (0..m)
            .map(|i| FockFactor {
                color: (p - alpha[i] + beta[i]).rem_euclid(n as i64),
                eval: Mono::u_pow(0, params.scale)
                    .mul(&params.q1(alpha[i] as i32))
                    .mul(&params.q2(i as i32))
                    .mul(&params.q3(beta[i] as i32)),
            })
            .collect();
        let a: Vec<i64> = (0..m - 1).map(|i| alpha[i] - alpha[i + 1]).collect();
        let b: Vec<i64> = (0..m - 1).map(|i| beta[i] - beta[i + 1]).collect();
        Module::new(n, ModuleKind::NSub { factors, a, b }, params)
    }

    pub fn with_max_boxes(mut self, max: u64) -> Self {
        self.max_boxes = Some(max);
        self
    }

    /// Value of the central element kappa^{-1} (the level).
    pub fn level(&self) -> Rat {
        let m = match &self.kind {
            ModuleKind::Vector { .. } => return Rat::one(),
            ModuleKind::Fock(_) => 1,
            ModuleKind::Tensor(f) => f.len(),
            ModuleKind::NSub { factors, .. } => factors.len(),
        };
        Rat::from_mono(self.params.q_pow(m as i32))
    }

    /// kappa value (inverse of the level).
    pub fn kappa(&self) -> Rat {
        self.level().inv()
    }

    /// Basis membership for the interlacing submodule; true elsewhere.
    pub fn contains(&self, label: &Label) -> bool {
        match (&self.kind, label) {
            (ModuleKind::NSub { a, b, .. }, Label::Tuple(t)) => check_interlacing(t, a, b),
            _ => true,
        }
    }

    fn tensor_factors(&self) -> Option<&[FockFactor]> {
        match &self.kind {
            ModuleKind::Tensor(f) => Some(f),
            ModuleKind::NSub { factors, .. } => Some(factors),
            _ => None,
        }
    }

    /// All delta terms of E-currents on a basis label (any color).
    fn raw_add_terms(&self, label: &Label) -> Result<std::sync::Arc<DeltaTerms>, String> {
        if let Some(hit) = self.add_cache.lock().unwrap().get(label) {
            return Ok(hit.clone());
        }
        let terms = self.compute_add_terms(label)?;
        let arc = std::sync::Arc::new(terms);
        self.add_cache.lock().unwrap().insert(label.clone(), arc.clone());
        Ok(arc)
    }

    fn raw_rem_terms(&self, label: &Label) -> Result<std::sync::Arc<DeltaTerms>, String> {
        if let Some(hit) = self.rem_cache.lock().unwrap().get(label) {
            return Ok(hit.clone());
        }
        let terms = self.compute_rem_terms(label)?;
        let arc = std::sync::Arc::new(terms);
        self.rem_cache.lock().unwrap().insert(label.clone(), arc.clone());
        Ok(arc)
    }

    fn compute_add_terms(&self, label: &Label) -> Result<DeltaTerms, String> {
        match (&self.kind, label) {
            (ModuleKind::Vector { color, eval }, Label::Idx(j)) => {
                // E_i(z)[u]_j = delta(q1^{j+1} u/z)[u]_{j+1} for i+j+1 = k
                let i = (color - j - 1).rem_euclid(self.n as i64) as usize;
                let support = self.params.q1((j + 1) as i32).mul(eval);
                Ok(vec![(i, support, Label::Idx(j + 1), Rat::one())])
            }
            (ModuleKind::Fock(f), Label::Part(lam)) => self.fock_add_terms(f, lam),
            (ModuleKind::Tensor(factors), Label::Tuple(t))
            | (ModuleKind::NSub { factors, .. }, Label::Tuple(t)) => {
                // coproduct: sum_j K^-(support) ... K^- on the left factors
                let mut out = Vec::new();
                for (j, lam) in t.iter().enumerate() {
                    let f = &factors[j];
                    let local = self.fock_add_terms(f, lam)?;
                    for (i, support, target, coeff) in local.iter() {
                        let mut c = coeff.clone();
                        for (avant, lam_a) in t.iter().enumerate().take(j) {
                            let eig = self.factor_k_eigen(&factors[avant], lam_a, *i);
                            let at = eig
                                .eval(&Rat::from_mono(*support))
                                .ok_or("non-generic parameters")?;
                            c = &c * &at;
                        }
                        let mut nt = t.clone();
                        nt[j] = match target {
                            Label::Part(p) => p.clone(),
                            _ => unreachable!(),
                        };
                        out.push((*i, *support, Label::Tuple(nt), c));
                    }
                }
                Ok(out)
            }
            _ => Err("label does not belong to this module".into()),
        }
    }

    fn compute_rem_terms(&self, label: &Label) -> Result<DeltaTerms, String> {
        match (&self.kind, label) {
            (ModuleKind::Vector { color, eval }, Label::Idx(m)) => {
                // F_i(z)[u]_{j+1} = c delta(q1^{j+1}u/z)[u]_j for i+j+1 = k
                let j = m - 1;
                let i = (color - j - 1).rem_euclid(self.n as i64) as usize;
                let support = self.params.q1((j + 1) as i32).mul(eval);
                let coeff = if self.n == 1 {
                    // q (1-q3)/(1-q1^{-1})
                    let q3 = Rat::from_mono(self.params.q3(1));
                    let q1i = Rat::from_mono(self.params.q1(-1));
                    &(&self.params.q() * &(&Rat::one() - &q3)) / &(&Rat::one() - &q1i)
                } else {
                    Rat::one()
                };
                Ok(vec![(i, support, Label::Idx(j), coeff)])
            }
            (ModuleKind::Fock(f), Label::Part(lam)) => self.fock_rem_terms(f, lam),
            (ModuleKind::Tensor(factors), Label::Tuple(t))
            | (ModuleKind::NSub { factors, .. }, Label::Tuple(t)) => {
                // coproduct: F acts on factor j, K^+ on the right factors
                let mut out = Vec::new();
                for (j, lam) in t.iter().enumerate() {
                    let f = &factors[j];
                    let local = self.fock_rem_terms(f, lam)?;
                    for (i, support, target, coeff) in local.iter() {
                        let mut c = coeff.clone();
                        for (apres, lam_a) in t.iter().enumerate().skip(j + 1) {
                            let eig = self.factor_k_eigen(&factors[apres], lam_a, *i);
                            let at = eig
                                .eval(&Rat::from_mono(*support))
                                .ok_or("non-generic parameters")?;
                            c = &c * &at;
                        }
                        let mut nt = t.clone();
                        nt[j] = match target {
                            Label::Part(p) => p.clone(),
                            _ => unreachable!(),
                        };
                        out.push((*i, *support, Label::Tuple(nt), c));
                    }
                }
                Ok(out)
            }
            _ => Err("label does not belong to this module".into()),
        }
    }

    fn fock_add_terms(&self, f: &FockFactor, lam: &Partition) -> Result<DeltaTerms, String> {
        let p = self.params;
        let n = self.n as i64;
        let mut out = Vec::new();
        for j in lam.addable_rows() {
            let lj = lam.part(j) as i64;
            // color of the added box (j, lam_j + 1)
            let i = (f.color + j as i64 - lj - 1).rem_euclid(n) as usize;
            let mut coeff = Rat::one();
            for s in 1..j {
                let ls = lam.part(s) as i64;
                let cs = (f.color + s as i64 - ls).rem_euclid(n);
                if cs == (i as i64).rem_euclid(n) {
                    let m = p.q1((ls - lj - 1) as i32).mul(&p.q3((s as i64 - j as i64) as i32));
                    coeff = &coeff * &p.psi_mono(m)?;
                }
                if cs == (i as i64 + 1).rem_euclid(n) {
                    let m = p.q1((lj - ls) as i32).mul(&p.q3((j as i64 - s as i64) as i32));
                    coeff = &coeff * &p.psi_mono(m)?;
                }
            }
            let support = p.q1(lj as i32).mul(&p.q3(j as i32 - 1)).mul(&f.eval);
            out.push((i, support, Label::Part(lam.add_box(j)), coeff));
        }
        Ok(out)
    }

    fn fock_rem_terms(&self, f: &FockFactor, big: &Partition) -> Result<DeltaTerms, String> {
        // matrix element <lam|F_i(z)|lam + 1_j> with lam the smaller diagram
        let p = self.params;
        let n = self.n as i64;
        let mut out = Vec::new();
        for j in big.removable_rows() {
            let lam = big.remove_box(j);
            let lj = lam.part(j) as i64;
            let i = (f.color + j as i64 - lj - 1).rem_euclid(n) as usize;
            let len = lam.len();
            let mut coeff = Rat::one();
            for s in j + 1..=len {
                let ls = lam.part(s) as i64;
                let cs = (f.color + s as i64 - ls).rem_euclid(n);
                if cs == (i as i64).rem_euclid(n) {
                    let m = p.q1((ls - lj - 1) as i32).mul(&p.q3((s as i64 - j as i64) as i32));
                    coeff = &coeff * &p.psi_mono(m)?;
                }
            }
            for s in j + 1..=len + 1 {
                let ls = lam.part(s) as i64;
                let cs = (f.color + s as i64 - ls).rem_euclid(n);
                if cs == (i as i64 + 1).rem_euclid(n) {
                    let m = p.q1((lj - ls) as i32).mul(&p.q3((j as i64 - s as i64) as i32));
                    coeff = &coeff * &p.psi_mono(m)?;
                }
            }
            let support = p.q1(lj as i32).mul(&p.q3(j as i32 - 1)).mul(&f.eval);
            out.push((i, support, Label::Part(lam), coeff));
        }
        Ok(out)
    }

    /// K_i eigenvalue of one Fock factor on a partition, as a rational
    /// function of z: product over convex corners of psi(q3^x q1^y q2 u/z)
    /// and inverse psi(q3^x q1^y q2^2 u/z) over concave corners.
    fn factor_k_eigen(&self, f: &FockFactor, lam: &Partition, i: usize) -> ZRat {
        let p = self.params;
        let cs = corners(lam, f.color, self.n);
        let mut eig = ZRat::one();
        for &(x, y) in &cs.convex[i] {
            let m = p.q3(x as i32).mul(&p.q1(y as i32)).mul(&p.q2(1)).mul(&f.eval);
            eig = eig.mul(&ZRat::psi_of(m));
        }
        for &(x, y) in &cs.concave[i] {
            let m = p.q3(x as i32).mul(&p.q1(y as i32)).mul(&p.q2(2)).mul(&f.eval);
            eig = eig.mul(&ZRat::psi_of(m).inv());
        }
        eig
    }

    /// K_i^{+-} eigenvalue on a basis vector as a rational function of z.
    pub fn k_eigen(&self, label: &Label, i: usize) -> ZRat {
        if let Some(hit) = self.keigen_cache.lock().unwrap().get(&(label.clone(), i)) {
            return hit.clone();
        }
        let p = self.params;
        let eig = match (&self.kind, label) {
            (ModuleKind::Vector { color, eval }, Label::Idx(j)) => {
                let n = self.n as i64;
                if self.n == 1 {
                    let a = ZRat::psi_of(p.q1(*j as i32).mul(eval));
                    let b =
                        ZRat::psi_of(p.q1(*j as i32).mul(&p.q3(-1)).mul(eval)).inv();
                    a.mul(&b)
                } else {
                    let ii = i as i64;
                    if (j + ii).rem_euclid(n) == color.rem_euclid(n) {
                        ZRat::psi_of(p.q1(*j as i32).mul(eval))
                    } else if (j + ii + 1).rem_euclid(n) == color.rem_euclid(n) {
                        ZRat::psi_of(p.q1(*j as i32).mul(&p.q3(-1)).mul(eval)).inv()
                    } else {
                        ZRat::one()
                    }
                }
            }
            (ModuleKind::Fock(f), Label::Part(lam)) => self.factor_k_eigen(f, lam, i),
            (ModuleKind::Tensor(factors), Label::Tuple(t))
            | (ModuleKind::NSub { factors, .. }, Label::Tuple(t)) => {
                let mut eig = ZRat::one();
                for (f, lam) in factors.iter().zip(t) {
                    eig = eig.mul(&self.factor_k_eigen(f, lam, i));
                }
                eig
            }
            _ => panic!("label does not belong to this module"),
        };
        self.keigen_cache.lock().unwrap().insert((label.clone(), i), eig.clone());
        eig
    }

    /// Coefficient of the series expansion of the K eigenvalue: phi^+ modes
    /// for m >= 0 (expansion at infinity), phi^- for m <= 0 (at zero).
    pub fn phi_mode(&self, label: &Label, i: usize, m: i32) -> Rat {
        let eig = self.k_eigen(label, i);
        let (dir, ord) = if m >= 0 {
            (Dir::AtInfinity, m as usize)
        } else {
            (Dir::AtZero, (-m) as usize)
        };
        let s = eig.expand(dir, ord).expect("weight eigenvalue regular at both ends");
        s.coeff(ord).clone()
    }

    /// H_{i,r} eigenvalue on a weight vector, read from the log of the
    /// K eigenvalue series (r != 0).
    pub fn h_eigen(&self, label: &Label, i: usize, r: i32) -> Result<Rat, String> {
        assert!(r != 0);
        let eig = self.k_eigen(label, i);
        let (dir, ord) = if r > 0 {
            (Dir::AtInfinity, r as usize)
        } else {
            (Dir::AtZero, (-r) as usize)
        };
        let s: Series = eig.expand(dir, ord)?;
        let l = s.log()?;
        Ok(&*l.coeff(ord) / &self.params.qdiff())
    }

    /// Apply the mode E_{i,r} (coefficient of z^{-r} in the E current).
    pub fn e_mode(&self, i: usize, r: i32, v: &ModVec) -> Result<ModVec, String> {
        let mut out = ModVec::zero();
        for (label, c) in &v.terms {
            for (ci, support, target, coeff) in self.raw_add_terms(label)?.iter() {
                if *ci != i {
                    continue;
                }
                if !self.contains(target) {
                    // transitions out of the interlacing submodule must have
                    // vanishing coefficient; a nonzero one is a real signal
                    if !coeff.is_zero() {
                        return Err(format!(
                            "action leaves submodule at {} -> {}",
                            label, target
                        ));
                    }
                    continue;
                }
                if let Some(maxb) = self.max_boxes {
                    if target.boxes() > maxb {
                        return Err("overflow".into());
                    }
                }
                let f = &Rat::from_mono(support.pow(r)) * coeff;
                out.add_term(target.clone(), &f * c);
            }
        }
        Ok(out)
    }

    /// Apply the mode F_{i,r}.
    pub fn f_mode(&self, i: usize, r: i32, v: &ModVec) -> Result<ModVec, String> {
        let mut out = ModVec::zero();
        for (label, c) in &v.terms {
            for (ci, support, target, coeff) in self.raw_rem_terms(label)?.iter() {
                if *ci != i {
                    continue;
                }
                if !self.contains(target) {
                    if !coeff.is_zero() {
                        return Err(format!(
                            "action leaves submodule at {} -> {}",
                            label, target
                        ));
                    }
                    continue;
                }
                let f = &Rat::from_mono(support.pow(r)) * coeff;
                out.add_term(target.clone(), &f * c);
            }
        }
        Ok(out)
    }

    /// Current-form action: the full delta-term list of E_i(z) (or F_i(z))
    /// on a basis label.
    pub fn current_terms(
        &self,
        raising: bool,
        i: usize,
        label: &Label,
    ) -> Result<Vec<(Mono, Label, Rat)>, String> {
        let raw = if raising { self.raw_add_terms(label)? } else { self.raw_rem_terms(label)? };
        Ok(raw
            .iter()
            .filter(|(ci, _, _, _)| *ci == i)
            .map(|(_, s, l, c)| (*s, l.clone(), c.clone()))
            .collect())
    }

    /// Diagonal action of K_i (the constant term of K_i^+).
    pub fn k_const(&self, label: &Label, i: usize, power: i32) -> Result<Rat, String> {
        let eig = self.k_eigen(label, i);
        let v = eig.value_at_infinity().ok_or("pole at infinity")?;
        Ok(v.pow(power))
    }

    /// phi_i(0) phi_i(infinity), which must be 1 on weight vectors.
    pub fn phi_balance(&self, label: &Label, i: usize) -> Result<Rat, String> {
        let eig = self.k_eigen(label, i);
        let a = eig.value_at_infinity().ok_or("pole at infinity")?;
        let b = eig.value_at_zero().ok_or("pole at zero")?;
        Ok(&a * &b)
    }

    /// All basis labels with at most `max` boxes (Fock and tensor kinds).
    pub fn basis_up_to(&self, max: u64) -> Vec<Label> {
        match &self.kind {
            ModuleKind::Vector { .. } => {
                (-(max as i64)..=max as i64).map(Label::Idx).collect()
            }
            ModuleKind::Fock(_) => crate::combin::partitions_up_to(max)
                .into_iter()
                .map(Label::Part)
                .collect(),
            ModuleKind::Tensor(factors) | ModuleKind::NSub { factors, .. } => {
                let m = factors.len();
                let mut out = Vec::new();
                let parts = crate::combin::partitions_up_to(max);
                let mut stack: Vec<Partition> = Vec::new();
                fn rec(
                    parts: &[Partition],
                    m: usize,
                    max: u64,
                    used: u64,
                    stack: &mut Vec<Partition>,
                    out: &mut Vec<Label>,
                ) {
                    if stack.len() == m {
                        out.push(Label::Tuple(stack.clone()));
                        return;
                    }
                    for p in parts {
                        if used + p.size() <= max {
                            stack.push(p.clone());
                            rec(parts, m, max, used + p.size(), stack, out);
                            stack.pop();
                        }
                    }
                }
                rec(&parts, m, max, 0, &mut stack, &mut out);
                out.retain(|l| self.contains(l));
                out
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symrat::{rq, ZPoly};

    fn fock2() -> Module {
        Module::fock(2, 0, Params::unit())
    }

    fn lp(parts: &[u32]) -> Label {
        Label::Part(Partition::new(parts.to_vec()))
    }

    #[test]
    fn vacuum_e_action() {
        // E_0(z)|0> = delta(u/z)|(1)> with coefficient 1
        let m = fock2();
        let terms = m.current_terms(true, 0, &lp(&[])).unwrap();
        assert_eq!(terms.len(), 1);
        let (s, l, c) = &terms[0];
        assert_eq!(*s, Mono::u_pow(0, 1));
        assert_eq!(*l, lp(&[1]));
        assert!(c.is_one());
        // color mismatch gives nothing
        assert!(m.current_terms(true, 1, &lp(&[])).unwrap().is_empty());
    }

    #[test]
    fn mode_form_of_vacuum_action() {
        // E_{0,r}|0> = u^r |(1)>
        let m = fock2();
        for r in -2..=2 {
            let out = m.e_mode(0, r, &ModVec::basis(lp(&[]))).unwrap();
            assert_eq!(out.coeff(&lp(&[1])), Rat::from_mono(Mono::u_pow(0, r)));
        }
    }

    #[test]
    fn f_mode_returns_to_vacuum() {
        // F_{0,0}|(1)> = |0>
        let m = fock2();
        let out = m.f_mode(0, 0, &ModVec::basis(lp(&[1]))).unwrap();
        assert_eq!(out, ModVec::basis(lp(&[])));
    }

    #[test]
    fn lowest_weight_eigenvalue() {
        // K_0 on |0>: psi(q2 u/z)^{-1} = (q^{-1} - q u/z)/(1 - u/z)
        let m = fock2();
        let eig = m.k_eigen(&lp(&[]), 0);
        let u = Rat::from_mono(Mono::u_pow(0, 1));
        let want = ZRat::new(
            ZPoly::linear(-(&rq() * &u), rq().inv()),
            ZPoly::linear(-u, Rat::one()),
        );
        assert_eq!(eig, want);
        // other colors act as 1
        assert!(m.k_eigen(&lp(&[]), 1).is_one());
    }

    #[test]
    fn k_eigen_single_box() {
        // K_0 on |(1)> for n=2,k=0 is psi(u/z)
        let m = fock2();
        let eig = m.k_eigen(&lp(&[1]), 0);
        assert_eq!(eig, ZRat::psi_of(Mono::u_pow(0, 1)));
    }

    #[test]
    fn h_eigenvalues() {
        let m = fock2();
        let u = Rat::from_mono(Mono::u_pow(0, 1));
        // H_{0,1}|0> = -q u
        assert_eq!(m.h_eigen(&lp(&[]), 0, 1).unwrap(), -(&rq() * &u));
        // H_{1,1}|0> = 0
        assert!(m.h_eigen(&lp(&[]), 1, 1).unwrap().is_zero());
        // gap: H_{0,1}|0> - H_{0,1}|(1)> = -(q+q^{-1}) u
        let gap = &m.h_eigen(&lp(&[]), 0, 1).unwrap() - &m.h_eigen(&lp(&[1]), 0, 1).unwrap();
        assert_eq!(gap, -(&(&rq() + &rq().inv()) * &u));
    }

    #[test]
    fn level_and_balance() {
        let m = fock2();
        // kappa^{-1} = product of K_i eigenvalues at infinity, inverted
        for label in [lp(&[]), lp(&[1]), lp(&[2, 1])] {
            let mut prod = Rat::one();
            for i in 0..2 {
                prod = &prod * &m.k_const(&label, i, 1).unwrap();
            }
            assert_eq!(prod.inv(), m.level());
            assert_eq!(m.level(), rq());
            for i in 0..2 {
                assert!(m.phi_balance(&label, i).unwrap().is_one());
            }
        }
    }

    #[test]
    fn vector_rep_actions() {
        // n>=2, k=0: E_0(z)[u]_{-1} = delta(u/z)[u]_0, E_1(z)[u]_{-1} = 0
        let m = Module::vector_rep(2, 0, Params::unit());
        let t = m.current_terms(true, 0, &Label::Idx(-1)).unwrap();
        assert_eq!(t.len(), 1);
        assert_eq!(t[0].0, Mono::u_pow(0, 1));
        assert_eq!(t[0].1, Label::Idx(0));
        assert!(m.current_terms(true, 1, &Label::Idx(-1)).unwrap().is_empty());
        // K_0 on [u]_0 has eigenvalue psi(u/z)
        assert_eq!(m.k_eigen(&Label::Idx(0), 0), ZRat::psi_of(Mono::u_pow(0, 1)));
        // level 1
        let mut prod = Rat::one();
        for i in 0..2 {
            prod = &prod * &m.k_const(&Label::Idx(0), i, 1).unwrap();
        }
        assert!(prod.is_one());
    }

    #[test]
    fn tensor_coproduct_on_vacuum() {
        // E_0(z)(|0>x|0>) = delta(u1/z)|(1)>x|0>
        //                  + psi(q2 u1/u2)^{-1} delta(u2/z)|0>x|(1)>
        let m = Module::tensor(2, &[0, 0], Params::unit());
        let vac = Label::Tuple(vec![Partition::empty(), Partition::empty()]);
        let terms = m.current_terms(true, 0, &vac).unwrap();
        assert_eq!(terms.len(), 2);
        let u1 = Mono::u_pow(0, 1);
        let u2 = Mono::u_pow(1, 1);
        let one_empty = Label::Tuple(vec![Partition::new(vec![1]), Partition::empty()]);
        let empty_one = Label::Tuple(vec![Partition::empty(), Partition::new(vec![1])]);
        let by_support: std::collections::HashMap<Mono, (Label, Rat)> = terms
            .into_iter()
            .map(|(s, l, c)| (s, (l, c)))
            .collect();
        let (l1, c1) = &by_support[&u1];
        assert_eq!(*l1, one_empty);
        assert!(c1.is_one());
        let (l2, c2) = &by_support[&u2];
        assert_eq!(*l2, empty_one);
        let arg = Rat::from_mono(Mono::q2_pow(1, 1).mul(&u1).mul(&u2.inv()));
        let want = crate::symrat::psi(&arg).unwrap().inv();
        assert_eq!(*c2, want);
    }

    #[test]
    fn nsub_membership() {
        // alpha=(1,0), beta=(0,0): a_1 = 1 allows one-deficit interlacing
        let m = Module::n_sub(2, 0, &[1, 0], &[0, 0], Params::unit());
        let t1 = Label::Tuple(vec![Partition::new(vec![1]), Partition::new(vec![2])]);
        assert!(m.contains(&t1));
        let m0 = Module::n_sub(2, 0, &[0, 0], &[0, 0], Params::unit());
        assert!(!m0.contains(&t1));
        let both_empty = Label::Tuple(vec![Partition::empty(), Partition::empty()]);
        assert!(m0.contains(&both_empty));
    }
}
