//! Group extensions `1 → N → E → G → 1`, their bundle categorification,
//! sections, factor sets, quasi-actions and Schreier reconstruction.
//!
//! Conventions used throughout:
//!
//! * factor set: `j(f(x, y)) = s(x) s(y) s(xy)^{-1}`;
//! * quasi-action: `j(L(x)(n)) = s(x) j(n) s(x)^{-1}`;
//! * cocycle law: `f(a, b) f(ab, c) = L_a(f(b, c)) f(a, bc)`;
//! * compatibility: `L(x) ∘ L(y) = C_{f(x, y)} ∘ L(xy)`;
//! * change of section `s'(x) = γ(x) s(x)` transports `(f, L)` to
//!   `L'(x) = C_{γ(x)} ∘ L(x)` and
//!   `f'(x, y) γ(xy) = γ(x) L(x)(γ(y)) f(x, y)`.

use std::collections::HashMap;
use std::sync::Arc;

use rayon::prelude::*;
use thiserror::Error;

use crate::categorify::discrete;
use crate::category::{CategoryRef, FinCategory, Functor, MonoidalStructure, MorphismTensor};
use crate::group::{automorphisms, FiniteGroup, GroupError, GroupHom, GroupRef};
use crate::{power, smallgroups, SearchLimit};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExtensionError {
    #[error("{which} is not a homomorphism")]
    NotAHomomorphism { which: &'static str },
    #[error("j is not injective")]
    NotInjective,
    #[error("p is not surjective")]
    NotSurjective,
    #[error("image of j differs from the kernel of p")]
    ImageKernelMismatch,
    #[error("|E| = {e} but |N| |G| = {ng}")]
    OrderMismatch { e: usize, ng: usize },
    #[error("maps do not match the groups of the extension")]
    ShapeMismatch,
    #[error("s({0}) does not lie over {0}")]
    NotASection(usize),
    #[error("section is not normalized: s(1) ≠ 1")]
    NotNormalized,
    #[error("s(x)s(y)s(xy)^{{-1}} leaves the kernel at ({0}, {1})")]
    FiberEscape(usize, usize),
    #[error("factor set is not normalized at ({0}, {1})")]
    FactorSetNotNormalized(usize, usize),
    #[error("L({0}) is not an automorphism of N")]
    NotAnAutomorphism(usize),
    #[error("L(1) is not the identity")]
    ActionNotNormalized,
    #[error("twisted cocycle law fails at ({0}, {1}, {2})")]
    CocycleViolation(usize, usize, usize),
    #[error("L({0}) L({1}) differs from C_f L({0}{1})")]
    CompatibilityViolation(usize, usize),
    #[error("factor set and quasi-action are over different groups")]
    GroupMismatch,
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("candidate space of {candidates} exceeds the limit of {limit}")]
    SizeLimit { candidates: u128, limit: u128 },
}

fn size_check(limit: SearchLimit, candidates: u128) -> Result<(), ExtensionError> {
    limit
        .check(candidates)
        .map_err(|e| ExtensionError::SizeLimit { candidates: e.candidates, limit: e.limit })
}

/// A validated short exact sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupExtension {
    n: GroupRef,
    e: GroupRef,
    g: GroupRef,
    j: GroupHom,
    p: GroupHom,
    /// `j^{-1}` on `E`, defined on the image of `j`.
    j_inverse: Vec<Option<usize>>,
}

impl GroupExtension {
    pub fn n(&self) -> &GroupRef {
        &self.n
    }
    pub fn e(&self) -> &GroupRef {
        &self.e
    }
    pub fn g(&self) -> &GroupRef {
        &self.g
    }
    pub fn j(&self) -> &GroupHom {
        &self.j
    }
    pub fn p(&self) -> &GroupHom {
        &self.p
    }

    /// `n` with `j(n) = e`, if `e` is in the kernel.
    pub fn kernel_preimage(&self, e: usize) -> Option<usize> {
        self.j_inverse[e]
    }

    /// Elements of `E` over `x`.
    pub fn fiber(&self, x: usize) -> Vec<usize> {
        self.e.elements().filter(|&e| self.p.apply(e) == x).collect()
    }

    /// All normalized sections in lexicographic order.
    pub fn sections(&self) -> Vec<Section> {
        let fibers: Vec<Vec<usize>> = self.g.elements().map(|x| self.fiber(x)).collect();
        let mut out = Vec::new();
        let mut s = vec![0; self.g.order()];
        fn walk(x: usize, s: &mut Vec<usize>, fibers: &[Vec<usize>], out: &mut Vec<Section>) {
            if x == s.len() {
                out.push(Section { s: s.clone() });
                return;
            }
            for &e in &fibers[x] {
                s[x] = e;
                walk(x + 1, s, fibers, out);
            }
        }
        walk(1, &mut s, &fibers, &mut out);
        out
    }

    pub fn section_count(&self) -> u128 {
        power(self.n.order(), self.g.order() - 1)
    }
}

pub fn build_extension(
    n: GroupRef,
    e: GroupRef,
    g: GroupRef,
    j: Vec<usize>,
    p: Vec<usize>,
) -> Result<GroupExtension, ExtensionError> {
    let j = GroupHom::new(n.clone(), e.clone(), j)?;
    let p = GroupHom::new(e.clone(), g.clone(), p)?;
    build_from_homs(j, p)
}

pub fn build_from_homs(j: GroupHom, p: GroupHom) -> Result<GroupExtension, ExtensionError> {
    if **j.target() != **p.source() {
        return Err(ExtensionError::ShapeMismatch);
    }
    if !j.is_homomorphism() {
        return Err(ExtensionError::NotAHomomorphism { which: "j" });
    }
    if !p.is_homomorphism() {
        return Err(ExtensionError::NotAHomomorphism { which: "p" });
    }
    if !j.is_injective() {
        return Err(ExtensionError::NotInjective);
    }
    if !p.is_surjective() {
        return Err(ExtensionError::NotSurjective);
    }
    let (n, e, g) = (j.source().clone(), j.target().clone(), p.target().clone());
    if j.image() != p.kernel() {
        return Err(ExtensionError::ImageKernelMismatch);
    }
    if e.order() != n.order() * g.order() {
        return Err(ExtensionError::OrderMismatch { e: e.order(), ng: n.order() * g.order() });
    }
    let mut j_inverse = vec![None; e.order()];
    for x in n.elements() {
        j_inverse[j.apply(x)] = Some(x);
    }
    Ok(GroupExtension { n, e, g, j, p, j_inverse })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TrivialRole {
    /// `1 → G → G → 1 → 1`
    Base,
    /// `1 → 1 → G → G → 1`
    Fiber,
}

pub fn trivial_extension(g: &GroupRef, role: TrivialRole) -> GroupExtension {
    let one: GroupRef = Arc::new(FiniteGroup::trivial());
    let (j, p) = match role {
        TrivialRole::Base => (GroupHom::identity(g.clone()), GroupHom::trivial(g.clone(), one)),
        TrivialRole::Fiber => (GroupHom::trivial(one, g.clone()), GroupHom::identity(g.clone())),
    };
    build_from_homs(j, p).expect("trivial extensions are exact")
}

/// A normalized set-theoretic section of `p`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Section {
    s: Vec<usize>,
}

impl Section {
    pub fn new(ext: &GroupExtension, s: Vec<usize>) -> Result<Self, ExtensionError> {
        if s.len() != ext.g.order() || s.iter().any(|&e| e >= ext.e.order()) {
            return Err(ExtensionError::ShapeMismatch);
        }
        if let Some(x) = (0..s.len()).find(|&x| ext.p.apply(s[x]) != x) {
            return Err(ExtensionError::NotASection(x));
        }
        if s[0] != 0 {
            return Err(ExtensionError::NotNormalized);
        }
        Ok(Section { s })
    }

    pub fn values(&self) -> &[usize] {
        &self.s
    }

    #[inline]
    pub fn at(&self, x: usize) -> usize {
        self.s[x]
    }
}

/// The bundle categorification: one morphism `e → e'` exactly when
/// `p(e) = p(e')`, tensor from multiplication in `E`.
#[derive(Debug, Clone)]
pub struct Bundle {
    pub category: CategoryRef,
    pub monoidal: MonoidalStructure,
    /// Object `e` lies over `fiber_map[e]` in `G`.
    pub fiber_map: Vec<usize>,
    /// `src * |E| + tgt → morphism`
    index: Vec<Option<usize>>,
}

impl Bundle {
    pub fn morphism(&self, src: usize, tgt: usize) -> Option<usize> {
        self.index[src * self.category.object_count() + tgt]
    }

    /// The projection onto the discrete categorification of `G`.
    pub fn fiber_functor(&self, base: CategoryRef) -> Functor {
        let mor_map = self
            .category
            .morphisms()
            .iter()
            .map(|m| base.identity(self.fiber_map[m.src]))
            .collect();
        Functor {
            source: self.category.clone(),
            target: base,
            obj_map: self.fiber_map.clone(),
            mor_map,
        }
    }
}

pub fn bundle_categorify(ext: &GroupExtension) -> Bundle {
    let e = &ext.e;
    let fiber_map = ext.p.map().to_vec();
    let (cat, index) = FinCategory::from_preorder(e.order(), |a, b| fiber_map[a] == fiber_map[b]);
    let labels = cat
        .morphisms()
        .iter()
        .map(|m| format!("{}→{}", e.name(m.src), e.name(m.tgt)))
        .collect();
    let category = Arc::new(cat.with_labels(labels));
    let tensor_obj = e
        .elements()
        .flat_map(|a| e.elements().map(move |b| e.mul(a, b)))
        .collect();
    let monoidal = MonoidalStructure {
        base: category.clone(),
        unit: 0,
        tensor_obj,
        tensor_mor: MorphismTensor::Thin(index.clone()),
        associator: None,
    };
    Bundle { category, monoidal, fiber_map, index }
}

/// `R_E`: sends the bundle morphism `x → y` to `n` with `j(n) = y x^{-1}`.
pub fn fiber_covering(ext: &GroupExtension, bundle: &Bundle, target: CategoryRef) -> Functor {
    let e = &ext.e;
    let mor_map = bundle
        .category
        .morphisms()
        .iter()
        .map(|m| {
            ext.kernel_preimage(e.mul(m.tgt, e.inv(m.src)))
                .expect("bundle morphisms stay inside a fiber")
        })
        .collect();
    Functor {
        source: bundle.category.clone(),
        target,
        obj_map: vec![0; bundle.category.object_count()],
        mor_map,
    }
}

/// The functor `S: D_G → B_E` over a section and its structure morphisms
/// `η(x, y): S(xy) → S(x) ⊗ S(y)`, stored at `x * |G| + y`.
#[derive(Debug, Clone)]
pub struct SectionFunctor {
    pub functor: Functor,
    pub eta: Vec<usize>,
}

pub fn section_monoidal_functor(ext: &GroupExtension, bundle: &Bundle, s: &Section) -> SectionFunctor {
    let g = &ext.g;
    let (base, _) = discrete(g);
    let obj_map: Vec<usize> = s.values().to_vec();
    let mor_map = obj_map.iter().map(|&e| bundle.category.identity(e)).collect();
    let functor = Functor { source: base, target: bundle.category.clone(), obj_map, mor_map };
    let eta = g
        .elements()
        .flat_map(|x| g.elements().map(move |y| (x, y)))
        .map(|(x, y)| {
            let src = s.at(g.mul(x, y));
            let tgt = ext.e.mul(s.at(x), s.at(y));
            bundle.morphism(src, tgt).expect("η stays inside a fiber")
        })
        .collect();
    SectionFunctor { functor, eta }
}

impl SectionFunctor {
    /// `(η(a,b) ⊗ I_{S(c)}) ∘ η(ab,c) = (I_{S(a)} ⊗ η(b,c)) ∘ η(a,bc)` for all
    /// `a, b, c`, plus `η(1, x) = η(x, 1) = identity`.
    pub fn is_monoidal(&self, g: &FiniteGroup, bundle: &Bundle) -> bool {
        let n = g.order();
        let c = &bundle.category;
        let m = &bundle.monoidal;
        let eta = |x: usize, y: usize| self.eta[x * n + y];
        let s = |x: usize| self.functor.obj_map[x];
        let units = g.elements().all(|x| {
            c.is_identity(eta(0, x)) && c.is_identity(eta(x, 0))
        });
        units
            && g.elements().all(|a| {
                g.elements().all(|b| {
                    g.elements().all(|d| {
                        let left = m
                            .mor(eta(a, b), c.identity(s(d)))
                            .and_then(|t| c.compose(t, eta(g.mul(a, b), d)));
                        let right = m
                            .mor(c.identity(s(a)), eta(b, d))
                            .and_then(|t| c.compose(t, eta(a, g.mul(b, d))));
                        left.is_some() && left == right
                    })
                })
            })
    }
}

/// Normalized `f: G × G → N`, stored at `x * |G| + y`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FactorSet {
    g: GroupRef,
    n: GroupRef,
    values: Vec<usize>,
}

impl FactorSet {
    pub fn new(g: GroupRef, n: GroupRef, values: Vec<usize>) -> Result<Self, ExtensionError> {
        let k = g.order();
        if values.len() != k * k || values.iter().any(|&v| v >= n.order()) {
            return Err(ExtensionError::ShapeMismatch);
        }
        for x in 0..k {
            if values[x] != 0 {
                return Err(ExtensionError::FactorSetNotNormalized(0, x));
            }
            if values[x * k] != 0 {
                return Err(ExtensionError::FactorSetNotNormalized(x, 0));
            }
        }
        Ok(FactorSet { g, n, values })
    }

    pub fn trivial(g: GroupRef, n: GroupRef) -> Self {
        let values = vec![0; g.order() * g.order()];
        FactorSet { g, n, values }
    }

    pub fn g(&self) -> &GroupRef {
        &self.g
    }
    pub fn n(&self) -> &GroupRef {
        &self.n
    }
    pub fn values(&self) -> &[usize] {
        &self.values
    }

    #[inline]
    pub fn at(&self, x: usize, y: usize) -> usize {
        self.values[x * self.g.order() + y]
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.values.chunks(self.g.order()).map(<[usize]>::to_vec).collect()
    }
}

/// `L: G → Aut(N)`, one automorphism (as an index map on `N`) per element.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuasiAction {
    g: GroupRef,
    n: GroupRef,
    maps: Vec<Vec<usize>>,
}

impl QuasiAction {
    pub fn new(g: GroupRef, n: GroupRef, maps: Vec<Vec<usize>>) -> Result<Self, ExtensionError> {
        if maps.len() != g.order() {
            return Err(ExtensionError::ShapeMismatch);
        }
        for (x, m) in maps.iter().enumerate() {
            let hom = GroupHom::new(n.clone(), n.clone(), m.clone())
                .map_err(|_| ExtensionError::NotAnAutomorphism(x))?;
            if !hom.is_homomorphism() || !hom.is_bijective() {
                return Err(ExtensionError::NotAnAutomorphism(x));
            }
        }
        if maps[0].iter().enumerate().any(|(i, &v)| i != v) {
            return Err(ExtensionError::ActionNotNormalized);
        }
        Ok(QuasiAction { g, n, maps })
    }

    pub fn trivial(g: GroupRef, n: GroupRef) -> Self {
        let id: Vec<usize> = n.elements().collect();
        let maps = vec![id; g.order()];
        QuasiAction { g, n, maps }
    }

    pub fn g(&self) -> &GroupRef {
        &self.g
    }
    pub fn n(&self) -> &GroupRef {
        &self.n
    }
    pub fn maps(&self) -> &[Vec<usize>] {
        &self.maps
    }

    #[inline]
    pub fn apply(&self, x: usize, n: usize) -> usize {
        self.maps[x][n]
    }

    /// True iff `L(xy) = L(x) ∘ L(y)` for all `x, y`.
    pub fn is_homomorphic(&self) -> bool {
        let g = &self.g;
        g.elements().all(|x| {
            g.elements().all(|y| {
                self.n.elements().all(|k| self.apply(g.mul(x, y), k) == self.apply(x, self.apply(y, k)))
            })
        })
    }
}

/// Factor set and quasi-action of a section. The factor set is read off
/// through `R_E(η(x, y))`.
pub fn factor_set(ext: &GroupExtension, s: &Section) -> Result<(FactorSet, QuasiAction), ExtensionError> {
    let (g, e, n) = (&ext.g, &ext.e, &ext.n);
    let k = g.order();
    let mut values = vec![0; k * k];
    for x in g.elements() {
        for y in g.elements() {
            let v = e.mul(e.mul(s.at(x), s.at(y)), e.inv(s.at(g.mul(x, y))));
            values[x * k + y] = ext.kernel_preimage(v).ok_or(ExtensionError::FiberEscape(x, y))?;
        }
    }
    let maps = g
        .elements()
        .map(|x| {
            n.elements()
                .map(|m| {
                    ext.kernel_preimage(e.conj(s.at(x), ext.j.apply(m)))
                        .expect("the kernel is normal")
                })
                .collect()
        })
        .collect();
    Ok((
        FactorSet { g: g.clone(), n: n.clone(), values },
        QuasiAction { g: g.clone(), n: n.clone(), maps },
    ))
}

fn same_groups(f: &FactorSet, l: &QuasiAction) -> bool {
    *f.g == *l.g && *f.n == *l.n
}

fn first_cocycle_violation(f: &FactorSet, l: &QuasiAction) -> Option<(usize, usize, usize)> {
    let (g, n) = (&f.g, &f.n);
    for a in g.elements() {
        for b in g.elements() {
            let ab = g.mul(a, b);
            for c in g.elements() {
                let left = n.mul(f.at(a, b), f.at(ab, c));
                let right = n.mul(l.apply(a, f.at(b, c)), f.at(a, g.mul(b, c)));
                if left != right {
                    return Some((a, b, c));
                }
            }
        }
    }
    None
}

fn first_compatibility_violation(f: &FactorSet, l: &QuasiAction) -> Option<(usize, usize)> {
    let (g, n) = (&f.g, &f.n);
    for x in g.elements() {
        for y in g.elements() {
            let fxy = f.at(x, y);
            let xy = g.mul(x, y);
            if n.elements().any(|k| l.apply(x, l.apply(y, k)) != n.conj(fxy, l.apply(xy, k))) {
                return Some((x, y));
            }
        }
    }
    None
}

/// The twisted 2-cocycle law `f(a,b) f(ab,c) = L_a(f(b,c)) f(a,bc)`.
pub fn check_twisted_cocycle(f: &FactorSet, l: &QuasiAction) -> bool {
    same_groups(f, l) && first_cocycle_violation(f, l).is_none()
}

/// `L(x) ∘ L(y) = C_{f(x,y)} ∘ L(xy)` for all `x, y`.
pub fn check_compatibility(f: &FactorSet, l: &QuasiAction) -> bool {
    same_groups(f, l) && first_compatibility_violation(f, l).is_none()
}

/// The pair obtained from `(f, L)` by changing the section by `γ`.
pub fn transport(f: &FactorSet, l: &QuasiAction, gamma: &[usize]) -> (FactorSet, QuasiAction) {
    let (g, n) = (&f.g, &f.n);
    let k = g.order();
    let maps = g
        .elements()
        .map(|x| n.elements().map(|m| n.conj(gamma[x], l.apply(x, m))).collect())
        .collect();
    let mut values = vec![0; k * k];
    for x in g.elements() {
        for y in g.elements() {
            let v = n.mul(n.mul(gamma[x], l.apply(x, gamma[y])), f.at(x, y));
            values[x * k + y] = n.mul(v, n.inv(gamma[g.mul(x, y)]));
        }
    }
    (
        FactorSet { g: g.clone(), n: n.clone(), values },
        QuasiAction { g: g.clone(), n: n.clone(), maps },
    )
}

/// Searches normalized `γ: G → N` with `L'(x) = C_{γ(x)} ∘ L(x)` and
/// `f'(x,y) γ(xy) = γ(x) L(x)(γ(y)) f(x,y)`. For two sections of one
/// extension, `γ(x) = j^{-1}(s'(x) s(x)^{-1})` is a witness.
pub fn weak_equivalent(
    f: &FactorSet,
    l: &QuasiAction,
    f2: &FactorSet,
    l2: &QuasiAction,
    limit: SearchLimit,
) -> Result<Option<Vec<usize>>, ExtensionError> {
    if !same_groups(f, l) || !same_groups(f2, l2) || *f.g != *f2.g || *f.n != *f2.n {
        return Err(ExtensionError::GroupMismatch);
    }
    let (g, n) = (&f.g, &f.n);
    size_check(limit, power(n.order(), g.order() - 1))?;
    let k = g.order();
    // pairs (x, y) checked once max(x, y, xy) is assigned
    let mut checks: Vec<Vec<(usize, usize)>> = vec![Vec::new(); k];
    for x in 0..k {
        for y in 0..k {
            checks[x.max(y).max(g.mul(x, y))].push((x, y));
        }
    }
    let holds = |gamma: &[usize], x: usize, y: usize| {
        let left = n.mul(f2.at(x, y), gamma[g.mul(x, y)]);
        let right = n.mul(n.mul(gamma[x], l.apply(x, gamma[y])), f.at(x, y));
        left == right
    };
    fn search(
        x: usize,
        gamma: &mut Vec<usize>,
        n: &FiniteGroup,
        l: &QuasiAction,
        l2: &QuasiAction,
        checks: &[Vec<(usize, usize)>],
        holds: &dyn Fn(&[usize], usize, usize) -> bool,
    ) -> bool {
        if x == gamma.len() {
            return true;
        }
        for c in n.elements() {
            gamma[x] = c;
            let action_ok = n.elements().all(|m| l2.apply(x, m) == n.conj(c, l.apply(x, m)));
            if action_ok
                && checks[x].iter().all(|&(a, b)| holds(gamma, a, b))
                && search(x + 1, gamma, n, l, l2, checks, holds)
            {
                return true;
            }
        }
        false
    }
    let mut gamma = vec![0; k];
    if !checks[0].iter().all(|&(a, b)| holds(&gamma, a, b)) || l.maps[0] != l2.maps[0] {
        return Ok(None);
    }
    Ok(search(1, &mut gamma, n, l, l2, &checks, &holds).then_some(gamma))
}

/// `E = N × G` with `(m, x)(n, y) = (m L(x)(n) f(x, y), xy)`; `(m, x)` has
/// index `x |N| + m`, so `j(m) = m` and the canonical section is
/// `x ↦ x |N|`.
pub fn crossed_product(f: &FactorSet, l: &QuasiAction) -> Result<GroupExtension, ExtensionError> {
    if !same_groups(f, l) {
        return Err(ExtensionError::GroupMismatch);
    }
    if let Some((a, b, c)) = first_cocycle_violation(f, l) {
        return Err(ExtensionError::CocycleViolation(a, b, c));
    }
    if let Some((x, y)) = first_compatibility_violation(f, l) {
        return Err(ExtensionError::CompatibilityViolation(x, y));
    }
    let (g, n) = (f.g.clone(), f.n.clone());
    let (a, b) = (n.order(), g.order());
    let size = a * b;
    let mut table = vec![0; size * size];
    for u in 0..size {
        let (m, x) = (u % a, u / a);
        for v in 0..size {
            let (k, y) = (v % a, v / a);
            let fiber = n.mul(n.mul(m, l.apply(x, k)), f.at(x, y));
            table[u * size + v] = g.mul(x, y) * a + fiber;
        }
    }
    let e: GroupRef = Arc::new(FiniteGroup::from_trusted(size, table));
    debug_assert!(FiniteGroup::from_table(&e.rows(), None).is_ok());
    let j = GroupHom::from_parts(n.clone(), e.clone(), (0..a).collect());
    let p = GroupHom::from_parts(e.clone(), g.clone(), (0..size).map(|u| u / a).collect());
    build_from_homs(j, p)
}

/// The section `x ↦ (1, x)` of a crossed product.
pub fn canonical_section(ext: &GroupExtension) -> Section {
    let a = ext.n.order();
    Section { s: ext.g.elements().map(|x| x * a).collect() }
}

/// All `(L, f)` satisfying the cocycle law and compatibility, ordered by
/// `L` (lexicographic over automorphism arrays) and then by `f`.
pub fn valid_pairs(
    g: &GroupRef,
    n: &GroupRef,
    limit: SearchLimit,
) -> Result<Vec<(QuasiAction, FactorSet)>, ExtensionError> {
    let auts = automorphisms(n, limit)?.aut;
    let k = g.order();
    let free = k - 1;
    let action_space = power(auts.len(), free);
    size_check(limit, action_space.saturating_mul(power(n.order(), free * free)))?;
    let identity = 0; // the identity map is the least bijection
    debug_assert!(auts[identity].map().iter().enumerate().all(|(i, &v)| i == v));
    let per_action: Vec<Vec<(QuasiAction, FactorSet)>> = (0..action_space as usize)
        .into_par_iter()
        .map(|code| {
            // most significant digit first, so codes run in lexicographic order
            let mut choice = vec![identity; k];
            let mut c = code;
            for x in (1..k).rev() {
                choice[x] = c % auts.len();
                c /= auts.len();
            }
            let maps = choice.iter().map(|&i| auts[i].map().to_vec()).collect();
            let l = QuasiAction { g: g.clone(), n: n.clone(), maps };
            cocycles_for(&l)
                .into_iter()
                .map(|f| (l.clone(), f))
                .collect()
        })
        .collect();
    Ok(per_action.into_iter().flatten().collect())
}

/// Factor sets compatible with `l` and satisfying the cocycle law, in
/// lexicographic order.
pub fn cocycles_for(l: &QuasiAction) -> Vec<FactorSet> {
    let (g, n) = (&l.g, &l.n);
    let k = g.order();
    let slots: Vec<(usize, usize)> = (1..k).flat_map(|x| (1..k).map(move |y| (x, y))).collect();
    let mut slot_of = vec![usize::MAX; k * k];
    for (i, &(x, y)) in slots.iter().enumerate() {
        slot_of[x * k + y] = i;
    }
    let allowed: Vec<Vec<usize>> = slots
        .iter()
        .map(|&(x, y)| {
            let xy = g.mul(x, y);
            n.elements()
                .filter(|&c| n.elements().all(|m| l.apply(x, l.apply(y, m)) == n.conj(c, l.apply(xy, m))))
                .collect()
        })
        .collect();
    if allowed.iter().any(Vec::is_empty) {
        return Vec::new();
    }
    let mut triggers: Vec<Vec<(usize, usize, usize)>> = vec![Vec::new(); slots.len()];
    for a in 1..k {
        for b in 1..k {
            for c in 1..k {
                let involved = [(a, b), (g.mul(a, b), c), (b, c), (a, g.mul(b, c))];
                let last = involved
                    .iter()
                    .map(|&(x, y)| slot_of[x * k + y])
                    .filter(|&s| s != usize::MAX)
                    .max()
                    .expect("(a, b) is always free");
                triggers[last].push((a, b, c));
            }
        }
    }
    let mut values = vec![0; k * k];
    let mut out = Vec::new();
    fn walk(
        i: usize,
        values: &mut Vec<usize>,
        slots: &[(usize, usize)],
        allowed: &[Vec<usize>],
        triggers: &[Vec<(usize, usize, usize)>],
        l: &QuasiAction,
        out: &mut Vec<FactorSet>,
    ) {
        let (g, n) = (&l.g, &l.n);
        let k = g.order();
        if i == slots.len() {
            out.push(FactorSet { g: g.clone(), n: n.clone(), values: values.clone() });
            return;
        }
        let (x, y) = slots[i];
        for &c in &allowed[i] {
            values[x * k + y] = c;
            let ok = triggers[i].iter().all(|&(a, b, d)| {
                let at = |p: usize, q: usize| values[p * k + q];
                let ab = g.mul(a, b);
                n.mul(at(a, b), at(ab, d)) == n.mul(l.apply(a, at(b, d)), at(a, g.mul(b, d)))
            });
            if ok {
                walk(i + 1, values, slots, allowed, triggers, l, out);
            }
        }
        values[x * k + y] = 0;
    }
    walk(0, &mut values, &slots, &allowed, &triggers, l, &mut out);
    out
}

/// One weak-equivalence class of extensions of `G` by `N`.
#[derive(Debug, Clone)]
pub struct ExtensionClass {
    pub action: QuasiAction,
    pub factor_set: FactorSet,
    pub middle_group: String,
    /// Number of `(L, f)` pairs in the class.
    pub size: usize,
}

/// Weak-equivalence classes of all valid `(L, f)` pairs. Classes are
/// listed by their least representative in enumeration order.
pub fn classify_extensions(
    g: &GroupRef,
    n: &GroupRef,
    limit: SearchLimit,
) -> Result<Vec<ExtensionClass>, ExtensionError> {
    let pairs = valid_pairs(g, n, limit)?;
    let gammas = power(n.order(), g.order() - 1);
    size_check(limit, gammas)?;
    let index: HashMap<(&[Vec<usize>], &[usize]), usize> = pairs
        .iter()
        .enumerate()
        .map(|(i, (l, f))| ((l.maps.as_slice(), f.values.as_slice()), i))
        .collect();
    let mut class_of = vec![usize::MAX; pairs.len()];
    let mut classes = Vec::new();
    for i in 0..pairs.len() {
        if class_of[i] != usize::MAX {
            continue;
        }
        let (l, f) = &pairs[i];
        let id = classes.len();
        let mut size = 0;
        for code in 0..gammas as usize {
            let mut gamma = vec![0; g.order()];
            let mut c = code;
            for slot in gamma.iter_mut().skip(1) {
                *slot = c % n.order();
                c /= n.order();
            }
            let (f2, l2) = transport(f, l, &gamma);
            let j = index[&(l2.maps.as_slice(), f2.values.as_slice())];
            if class_of[j] == usize::MAX {
                class_of[j] = id;
                size += 1;
            }
            debug_assert_eq!(class_of[j], id);
        }
        let ext = crossed_product(f, l)?;
        classes.push(ExtensionClass {
            action: l.clone(),
            factor_set: f.clone(),
            middle_group: smallgroups::label(ext.e()),
            size,
        });
    }
    Ok(classes)
}
