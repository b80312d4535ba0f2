//! Finite categories with dense composition tables, functors, natural
//! transformations and (strict or associator-carrying) monoidal structure.

use std::collections::BTreeMap;
use std::fmt::{self, Write as _};
use std::sync::Arc;

use thiserror::Error;

use crate::SearchLimit;

pub type CategoryRef = Arc<FinCategory>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CategoryError {
    #[error("morphism {morphism} has endpoint {object} outside {count} objects")]
    ObjectOutOfRange { morphism: usize, object: usize, count: usize },
    #[error("identity of object {0} is not an endomorphism of it")]
    BadIdentity(usize),
    #[error("composition table has {got} entries, expected {expected}")]
    TableSize { got: usize, expected: usize },
    #[error("composite of {g} after {f} is {reason}")]
    BadComposite { g: usize, f: usize, reason: &'static str },
    #[error("identity law fails at morphism {0}")]
    IdentityLaw(usize),
    #[error("composition is not associative at ({0}, {1}, {2})")]
    NotAssociative(usize, usize, usize),
    #[error("tensor does not descend to isomorphism classes at objects ({0}, {1})")]
    NotWellDefined(usize, usize),
    #[error("component search space of {candidates} exceeds the limit of {limit}")]
    SizeLimit { candidates: u128, limit: u128 },
    #[error("functors are not parallel")]
    NotParallel,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Morphism {
    pub src: usize,
    pub tgt: usize,
}

/// A small category on objects `0..object_count` and morphisms indexed by
/// position in `morphisms`. `comp[g * m + f]` is `g ∘ f` when `tgt(f) = src(g)`.
#[derive(Clone, PartialEq, Eq)]
pub struct FinCategory {
    object_count: usize,
    morphisms: Vec<Morphism>,
    comp: Vec<Option<usize>>,
    identities: Vec<usize>,
    labels: Option<Vec<String>>,
}

impl fmt::Debug for FinCategory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FinCategory")
            .field("objects", &self.object_count)
            .field("morphisms", &self.morphisms.len())
            .finish()
    }
}

impl FinCategory {
    /// Validated constructor.
    pub fn new(
        object_count: usize,
        morphisms: Vec<Morphism>,
        comp: Vec<Option<usize>>,
        identities: Vec<usize>,
    ) -> Result<Self, CategoryError> {
        let c = FinCategory { object_count, morphisms, comp, identities, labels: None };
        c.validate()?;
        Ok(c)
    }

    /// Builds a category whose composition is given by a closure; used by
    /// the constructions in this crate, which are correct by construction.
    pub(crate) fn from_fn(
        object_count: usize,
        morphisms: Vec<Morphism>,
        identities: Vec<usize>,
        compose: impl Fn(usize, usize) -> usize,
    ) -> Self {
        let m = morphisms.len();
        let mut comp = vec![None; m * m];
        for g in 0..m {
            for f in 0..m {
                if morphisms[f].tgt == morphisms[g].src {
                    comp[g * m + f] = Some(compose(g, f));
                }
            }
        }
        let c = FinCategory { object_count, morphisms, comp, identities, labels: None };
        debug_assert_eq!(c.validate(), Ok(()));
        c
    }

    /// Thin category of a preorder: one morphism `x → y` per related pair,
    /// listed row by row. Returns the category and a `src * n + tgt` lookup.
    pub fn from_preorder(object_count: usize, related: impl Fn(usize, usize) -> bool) -> (Self, Vec<Option<usize>>) {
        let mut morphisms = Vec::new();
        let mut index = vec![None; object_count * object_count];
        for x in 0..object_count {
            for y in 0..object_count {
                if related(x, y) {
                    index[x * object_count + y] = Some(morphisms.len());
                    morphisms.push(Morphism { src: x, tgt: y });
                }
            }
        }
        let identities = (0..object_count)
            .map(|x| index[x * object_count + x].expect("preorder must be reflexive"))
            .collect();
        let lookup = index.clone();
        let cat = FinCategory::from_fn(object_count, morphisms.clone(), identities, |g, f| {
            let (a, b) = (morphisms[f].src, morphisms[g].tgt);
            lookup[a * object_count + b].expect("preorder must be transitive")
        });
        (cat, index)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.morphisms.len());
        self.labels = Some(labels);
        self
    }

    pub fn validate(&self) -> Result<(), CategoryError> {
        let (n, m) = (self.object_count, self.morphisms.len());
        for (i, mor) in self.morphisms.iter().enumerate() {
            for object in [mor.src, mor.tgt] {
                if object >= n {
                    return Err(CategoryError::ObjectOutOfRange { morphism: i, object, count: n });
                }
            }
        }
        if self.identities.len() != n {
            return Err(CategoryError::TableSize { got: self.identities.len(), expected: n });
        }
        for (x, &id) in self.identities.iter().enumerate() {
            if id >= m || self.morphisms[id] != (Morphism { src: x, tgt: x }) {
                return Err(CategoryError::BadIdentity(x));
            }
        }
        if self.comp.len() != m * m {
            return Err(CategoryError::TableSize { got: self.comp.len(), expected: m * m });
        }
        for g in 0..m {
            for f in 0..m {
                let composable = self.morphisms[f].tgt == self.morphisms[g].src;
                match (composable, self.comp[g * m + f]) {
                    (true, None) => {
                        return Err(CategoryError::BadComposite { g, f, reason: "missing" })
                    }
                    (false, Some(_)) => {
                        return Err(CategoryError::BadComposite { g, f, reason: "defined for a non-composable pair" })
                    }
                    (true, Some(h)) => {
                        let expected = Morphism { src: self.morphisms[f].src, tgt: self.morphisms[g].tgt };
                        if h >= m || self.morphisms[h] != expected {
                            return Err(CategoryError::BadComposite { g, f, reason: "mis-typed" });
                        }
                    }
                    (false, None) => {}
                }
            }
        }
        for f in 0..m {
            let Morphism { src, tgt } = self.morphisms[f];
            if self.compose(self.identities[tgt], f) != Some(f)
                || self.compose(f, self.identities[src]) != Some(f)
            {
                return Err(CategoryError::IdentityLaw(f));
            }
        }
        for f in 0..m {
            for g in self.out_of(self.morphisms[f].tgt) {
                let gf = self.comp[g * m + f].unwrap();
                for h in self.out_of(self.morphisms[g].tgt) {
                    if self.compose(h, gf) != self.compose(self.compose(h, g).unwrap(), f) {
                        return Err(CategoryError::NotAssociative(h, g, f));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn object_count(&self) -> usize {
        self.object_count
    }

    pub fn morphism_count(&self) -> usize {
        self.morphisms.len()
    }

    pub fn morphisms(&self) -> &[Morphism] {
        &self.morphisms
    }

    pub fn morphism(&self, f: usize) -> Morphism {
        self.morphisms[f]
    }

    pub fn identity(&self, x: usize) -> usize {
        self.identities[x]
    }

    pub fn identities(&self) -> &[usize] {
        &self.identities
    }

    pub fn is_identity(&self, f: usize) -> bool {
        self.identities[self.morphisms[f].src] == f
    }

    pub fn label(&self, f: usize) -> String {
        match &self.labels {
            Some(l) => l[f].clone(),
            None => format!("m{f}"),
        }
    }

    /// `g ∘ f`, if composable.
    #[inline]
    pub fn compose(&self, g: usize, f: usize) -> Option<usize> {
        self.comp[g * self.morphisms.len() + f]
    }

    /// Morphisms with source `x`.
    pub fn out_of(&self, x: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.morphisms.len()).filter(move |&f| self.morphisms[f].src == x)
    }

    pub fn hom(&self, x: usize, y: usize) -> Vec<usize> {
        (0..self.morphisms.len())
            .filter(|&f| self.morphisms[f] == Morphism { src: x, tgt: y })
            .collect()
    }

    pub fn inverse(&self, f: usize) -> Option<usize> {
        let Morphism { src, tgt } = self.morphisms[f];
        self.hom(tgt, src).into_iter().find(|&g| {
            self.compose(g, f) == Some(self.identities[src])
                && self.compose(f, g) == Some(self.identities[tgt])
        })
    }

    pub fn is_thin(&self) -> bool {
        let mut seen = std::collections::HashSet::new();
        self.morphisms.iter().all(|m| seen.insert(*m))
    }

    /// Graphviz rendering: one node per object, one labelled edge per
    /// morphism. Identities are drawn only when asked for.
    pub fn to_dot(&self, name: &str, include_identities: bool) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "digraph \"{name}\" {{");
        for x in 0..self.object_count {
            let _ = writeln!(out, "  {x};");
        }
        for (f, m) in self.morphisms.iter().enumerate() {
            if !include_identities && self.is_identity(f) {
                continue;
            }
            let _ = writeln!(out, "  {} -> {} [label=\"{}\"];", m.src, m.tgt, self.label(f));
        }
        out.push_str("}\n");
        out
    }
}

/// True iff every morphism has a two-sided inverse.
pub fn is_groupoid(c: &FinCategory) -> bool {
    (0..c.morphism_count()).all(|f| c.inverse(f).is_some())
}

/// First reason a structure check failed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation(pub String);

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

fn fail<T>(msg: impl Into<String>) -> Result<T, Violation> {
    Err(Violation(msg.into()))
}

#[derive(Clone, PartialEq, Eq)]
pub struct Functor {
    pub source: CategoryRef,
    pub target: CategoryRef,
    pub obj_map: Vec<usize>,
    pub mor_map: Vec<usize>,
}

impl fmt::Debug for Functor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Functor(obj {:?}, mor {:?})", self.obj_map, self.mor_map)
    }
}

impl Functor {
    pub fn identity(c: CategoryRef) -> Self {
        Functor {
            obj_map: (0..c.object_count()).collect(),
            mor_map: (0..c.morphism_count()).collect(),
            source: c.clone(),
            target: c,
        }
    }

    /// Functor sending everything to `object` and its identity.
    pub fn constant(source: CategoryRef, target: CategoryRef, object: usize) -> Self {
        let id = target.identity(object);
        Functor {
            obj_map: vec![object; source.object_count()],
            mor_map: vec![id; source.morphism_count()],
            source,
            target,
        }
    }

    pub fn verify(&self) -> Result<(), Violation> {
        let (s, t) = (&self.source, &self.target);
        if self.obj_map.len() != s.object_count() || self.mor_map.len() != s.morphism_count() {
            return fail("map lengths do not match the source category");
        }
        if let Some(x) = self.obj_map.iter().position(|&y| y >= t.object_count()) {
            return fail(format!("object {x} maps outside the target"));
        }
        if let Some(f) = self.mor_map.iter().position(|&g| g >= t.morphism_count()) {
            return fail(format!("morphism {f} maps outside the target"));
        }
        for (f, m) in s.morphisms().iter().enumerate() {
            let img = t.morphism(self.mor_map[f]);
            if img.src != self.obj_map[m.src] || img.tgt != self.obj_map[m.tgt] {
                return fail(format!("morphism {f} is not sent between the image objects"));
            }
        }
        for x in 0..s.object_count() {
            if self.mor_map[s.identity(x)] != t.identity(self.obj_map[x]) {
                return fail(format!("identity of object {x} is not preserved"));
            }
        }
        for f in 0..s.morphism_count() {
            for g in s.out_of(s.morphism(f).tgt) {
                let gf = s.compose(g, f).unwrap();
                if Some(self.mor_map[gf]) != t.compose(self.mor_map[g], self.mor_map[f]) {
                    return fail(format!("composite of {g} after {f} is not preserved"));
                }
            }
        }
        Ok(())
    }

    /// `other ∘ self`
    pub fn then(&self, other: &Functor) -> Option<Functor> {
        if *self.target != *other.source {
            return None;
        }
        Some(Functor {
            source: self.source.clone(),
            target: other.target.clone(),
            obj_map: self.obj_map.iter().map(|&x| other.obj_map[x]).collect(),
            mor_map: self.mor_map.iter().map(|&f| other.mor_map[f]).collect(),
        })
    }

    pub fn is_parallel(&self, other: &Functor) -> bool {
        *self.source == *other.source && *self.target == *other.target
    }
}

pub fn check_functor(f: &Functor) -> bool {
    f.verify().is_ok()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NatTransformation {
    pub source: Functor,
    pub target: Functor,
    pub components: Vec<usize>,
}

impl NatTransformation {
    pub fn identity(f: Functor) -> Self {
        let components = f.obj_map.iter().map(|&y| f.target.identity(y)).collect();
        NatTransformation { source: f.clone(), target: f, components }
    }

    pub fn verify(&self) -> Result<(), Violation> {
        let (f, g) = (&self.source, &self.target);
        if !f.is_parallel(g) {
            return fail("functors are not parallel");
        }
        let (s, t) = (&f.source, &f.target);
        if self.components.len() != s.object_count() {
            return fail("one component per source object is required");
        }
        for x in 0..s.object_count() {
            let c = self.components[x];
            if c >= t.morphism_count() || t.morphism(c) != (Morphism { src: f.obj_map[x], tgt: g.obj_map[x] }) {
                return fail(format!("component at {x} is not a morphism F({x}) → G({x})"));
            }
        }
        for (m, mor) in s.morphisms().iter().enumerate() {
            let left = t.compose(g.mor_map[m], self.components[mor.src]);
            let right = t.compose(self.components[mor.tgt], f.mor_map[m]);
            if left != right {
                return fail(format!("naturality square fails at morphism {m}"));
            }
        }
        Ok(())
    }

    pub fn is_isomorphism(&self) -> bool {
        let t = &self.source.target;
        self.components.iter().all(|&c| t.inverse(c).is_some())
    }

    /// Vertical composite `other · self`.
    pub fn then(&self, other: &NatTransformation) -> Option<NatTransformation> {
        if self.target != other.source {
            return None;
        }
        let t = &self.source.target;
        let components = self
            .components
            .iter()
            .zip(&other.components)
            .map(|(&a, &b)| t.compose(b, a))
            .collect::<Option<Vec<_>>>()?;
        Some(NatTransformation { source: self.source.clone(), target: other.target.clone(), components })
    }
}

pub fn check_natural(eta: &NatTransformation) -> bool {
    eta.verify().is_ok()
}

/// Tensor product on morphisms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MorphismTensor {
    /// Dense `m × m` table.
    Table(Vec<usize>),
    /// Thin category: the tensor of `x → y` and `x' → y'` is the unique
    /// morphism `x⊗x' → y⊗y'`, found through a `src * n + tgt` lookup.
    Thin(Vec<Option<usize>>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonoidalStructure {
    pub base: CategoryRef,
    pub unit: usize,
    /// `n × n`, row-major.
    pub tensor_obj: Vec<usize>,
    pub tensor_mor: MorphismTensor,
    /// `(a, b, c) ↦ α: (a⊗b)⊗c → a⊗(b⊗c)` at index `(a n + b) n + c`;
    /// absent for strict structures.
    pub associator: Option<Vec<usize>>,
}

impl MonoidalStructure {
    #[inline]
    pub fn obj(&self, a: usize, b: usize) -> usize {
        self.tensor_obj[a * self.base.object_count() + b]
    }

    /// `f ⊗ g`, or `None` when the thin lookup has no such morphism.
    pub fn mor(&self, f: usize, g: usize) -> Option<usize> {
        match &self.tensor_mor {
            MorphismTensor::Table(t) => t.get(f * self.base.morphism_count() + g).copied(),
            MorphismTensor::Thin(lookup) => {
                let (mf, mg) = (self.base.morphism(f), self.base.morphism(g));
                let src = self.obj(mf.src, mg.src);
                let tgt = self.obj(mf.tgt, mg.tgt);
                lookup[src * self.base.object_count() + tgt]
            }
        }
    }

    pub fn associator_at(&self, a: usize, b: usize, c: usize) -> Option<usize> {
        let n = self.base.object_count();
        self.associator.as_ref().map(|t| t[(a * n + b) * n + c])
    }

    pub fn with_associator(mut self, associator: Vec<usize>) -> Self {
        self.associator = Some(associator);
        self
    }

    pub fn verify(&self) -> Result<(), Violation> {
        let c = &*self.base;
        let (n, m) = (c.object_count(), c.morphism_count());
        if self.unit >= n || self.tensor_obj.len() != n * n || self.tensor_obj.iter().any(|&x| x >= n) {
            return fail("object tensor table is malformed");
        }
        let mut tm = vec![0; m * m];
        for f in 0..m {
            for g in 0..m {
                let Some(fg) = self.mor(f, g).filter(|&h| h < m) else {
                    return fail(format!("tensor of morphisms {f} and {g} is undefined"));
                };
                let (a, b, h) = (c.morphism(f), c.morphism(g), c.morphism(fg));
                if h.src != self.obj(a.src, b.src) || h.tgt != self.obj(a.tgt, b.tgt) {
                    return fail(format!("tensor of morphisms {f} and {g} has the wrong endpoints"));
                }
                tm[f * m + g] = fg;
            }
        }
        let t = |f: usize, g: usize| tm[f * m + g];
        for x in 0..n {
            for y in 0..n {
                if t(c.identity(x), c.identity(y)) != c.identity(self.obj(x, y)) {
                    return fail(format!("identities of {x} and {y} do not tensor to an identity"));
                }
            }
        }
        // interchange law over all pairs of composable pairs
        let composable: Vec<(usize, usize, usize)> = (0..m)
            .flat_map(|f| c.out_of(c.morphism(f).tgt).map(move |g| (g, f)))
            .map(|(g, f)| (g, f, c.compose(g, f).unwrap()))
            .collect();
        for &(g, f, gf) in &composable {
            for &(g2, f2, gf2) in &composable {
                if c.compose(t(g, g2), t(f, f2)) != Some(t(gf, gf2)) {
                    return fail(format!("interchange law fails for ({g}∘{f}) ⊗ ({g2}∘{f2})"));
                }
            }
        }
        let u = self.unit;
        for x in 0..n {
            if self.obj(u, x) != x || self.obj(x, u) != x {
                return fail(format!("unit law fails at object {x}"));
            }
        }
        let id_u = c.identity(u);
        for f in 0..m {
            if t(id_u, f) != f || t(f, id_u) != f {
                return fail(format!("unit law fails at morphism {f}"));
            }
        }
        match &self.associator {
            None => {
                for a in 0..n {
                    for b in 0..n {
                        for d in 0..n {
                            if self.obj(self.obj(a, b), d) != self.obj(a, self.obj(b, d)) {
                                return fail(format!("tensor is not associative at ({a}, {b}, {d})"));
                            }
                        }
                    }
                }
                for f in 0..m {
                    for g in 0..m {
                        for h in 0..m {
                            if t(t(f, g), h) != t(f, t(g, h)) {
                                return fail(format!("morphism tensor is not associative at ({f}, {g}, {h})"));
                            }
                        }
                    }
                }
            }
            Some(assoc) => {
                if assoc.len() != n * n * n {
                    return fail("associator table has the wrong size");
                }
                let alpha = |a: usize, b: usize, d: usize| assoc[(a * n + b) * n + d];
                for a in 0..n {
                    for b in 0..n {
                        for d in 0..n {
                            let al = alpha(a, b, d);
                            let expected = Morphism {
                                src: self.obj(self.obj(a, b), d),
                                tgt: self.obj(a, self.obj(b, d)),
                            };
                            if al >= m || c.morphism(al) != expected || c.inverse(al).is_none() {
                                return fail(format!("associator at ({a}, {b}, {d}) is not an isomorphism (ab)c → a(bc)"));
                            }
                        }
                    }
                }
                for a in 0..n {
                    for d in 0..n {
                        if alpha(a, u, d) != c.identity(self.obj(a, d)) {
                            return fail(format!("triangle axiom fails at ({a}, {d})"));
                        }
                    }
                }
                for f in 0..m {
                    for g in 0..m {
                        for h in 0..m {
                            let (mf, mg, mh) = (c.morphism(f), c.morphism(g), c.morphism(h));
                            let left = c.compose(alpha(mf.tgt, mg.tgt, mh.tgt), t(t(f, g), h));
                            let right = c.compose(t(f, t(g, h)), alpha(mf.src, mg.src, mh.src));
                            if left != right {
                                return fail(format!("associator is not natural at ({f}, {g}, {h})"));
                            }
                        }
                    }
                }
                for a in 0..n {
                    for b in 0..n {
                        for x in 0..n {
                            for d in 0..n {
                                let (ab, cd, bc) = (self.obj(a, b), self.obj(x, d), self.obj(b, x));
                                let top = c.compose(alpha(a, b, cd), alpha(ab, x, d));
                                let bottom = c
                                    .compose(alpha(a, bc, d), t(alpha(a, b, x), c.identity(d)))
                                    .and_then(|k| c.compose(t(c.identity(a), alpha(b, x, d)), k));
                                if top.is_none() || top != bottom {
                                    return fail(format!("pentagon fails at ({a}, {b}, {x}, {d})"));
                                }
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

pub fn check_monoidal(m: &MonoidalStructure) -> bool {
    m.verify().is_ok()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pi0 {
    pub class_of: Vec<usize>,
    pub class_count: usize,
    /// Induced multiplication on classes, `class_count × class_count`.
    pub monoid_table: Option<Vec<usize>>,
}

/// Isomorphism classes of objects, numbered by first appearance, and the
/// induced monoid when a monoidal structure is supplied.
pub fn pi0(c: &FinCategory, m: Option<&MonoidalStructure>) -> Result<Pi0, CategoryError> {
    let n = c.object_count();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        p[x] = r;
        r
    }
    for f in 0..c.morphism_count() {
        if c.inverse(f).is_some() {
            let mor = c.morphism(f);
            let (a, b) = (find(&mut parent, mor.src), find(&mut parent, mor.tgt));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let mut numbering = BTreeMap::new();
    let mut class_of = vec![0; n];
    for (x, slot) in class_of.iter_mut().enumerate() {
        let root = find(&mut parent, x);
        let next = numbering.len();
        *slot = *numbering.entry(root).or_insert(next);
    }
    let k = numbering.len();
    let monoid_table = match m {
        None => None,
        Some(m) => {
            let mut table = vec![usize::MAX; k * k];
            for a in 0..n {
                for b in 0..n {
                    let v = class_of[m.obj(a, b)];
                    let slot = &mut table[class_of[a] * k + class_of[b]];
                    if *slot == usize::MAX {
                        *slot = v;
                    } else if *slot != v {
                        return Err(CategoryError::NotWellDefined(a, b));
                    }
                }
            }
            Some(table)
        }
    };
    Ok(Pi0 { class_of, class_count: k, monoid_table })
}

/// A natural isomorphism `F ⇒ G`, found by trying components object by
/// object and pruning on every naturality square whose corners are set.
pub fn functors_homotopic(
    f: &Functor,
    g: &Functor,
    limit: SearchLimit,
) -> Result<Option<NatTransformation>, CategoryError> {
    if !f.is_parallel(g) {
        return Err(CategoryError::NotParallel);
    }
    let (s, t) = (&*f.source, &*f.target);
    let n = s.object_count();
    let choices: Vec<Vec<usize>> = (0..n)
        .map(|x| {
            t.hom(f.obj_map[x], g.obj_map[x])
                .into_iter()
                .filter(|&c| t.inverse(c).is_some())
                .collect()
        })
        .collect();
    let space = choices
        .iter()
        .fold(1u128, |acc, c| acc.saturating_mul(c.len() as u128));
    if space > limit.get() {
        return Err(CategoryError::SizeLimit { candidates: space, limit: limit.get() });
    }
    // squares[x]: morphisms whose endpoints are both ≤ x, with max endpoint x
    let mut squares: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (m, mor) in s.morphisms().iter().enumerate() {
        squares[mor.src.max(mor.tgt)].push(m);
    }
    let mut comps = vec![0; n];
    fn search(
        x: usize,
        comps: &mut Vec<usize>,
        choices: &[Vec<usize>],
        squares: &[Vec<usize>],
        f: &Functor,
        g: &Functor,
    ) -> bool {
        if x == comps.len() {
            return true;
        }
        let (s, t) = (&*f.source, &*f.target);
        for &c in &choices[x] {
            comps[x] = c;
            let ok = squares[x].iter().all(|&m| {
                let mor = s.morphism(m);
                t.compose(g.mor_map[m], comps[mor.src]) == t.compose(comps[mor.tgt], f.mor_map[m])
            });
            if ok && search(x + 1, comps, choices, squares, f, g) {
                return true;
            }
        }
        false
    }
    let found = search(0, &mut comps, &choices, &squares, f, g);
    Ok(found.then(|| NatTransformation { source: f.clone(), target: g.clone(), components: comps }))
}

#[cfg(test)]
mod tests {
    use super::*;

    /// `0 → 1` with identities.
    fn arrow() -> FinCategory {
        FinCategory::from_preorder(2, |x, y| x <= y).0
    }

    #[test]
    fn arrow_category_is_not_a_groupoid() {
        let c = arrow();
        assert_eq!(c.morphism_count(), 3);
        assert!(!is_groupoid(&c));
        let p = pi0(&c, None).unwrap();
        assert_eq!(p.class_count, 2);
    }

    #[test]
    fn rejects_missing_composite() {
        let morphisms = vec![Morphism { src: 0, tgt: 0 }];
        let err = FinCategory::new(1, morphisms, vec![None], vec![0]).unwrap_err();
        assert!(matches!(err, CategoryError::BadComposite { reason: "missing", .. }));
    }

    #[test]
    fn rejects_bad_identity_law() {
        // two endomorphisms of one object where "identity" 0 acts wrongly
        let morphisms = vec![Morphism { src: 0, tgt: 0 }, Morphism { src: 0, tgt: 0 }];
        let comp = vec![Some(1), Some(1), Some(1), Some(1)];
        let err = FinCategory::new(1, morphisms, comp, vec![0]).unwrap_err();
        assert_eq!(err, CategoryError::IdentityLaw(0));
    }

    #[test]
    fn identity_functor_and_transformation() {
        let c = Arc::new(arrow());
        let id = Functor::identity(c.clone());
        assert!(check_functor(&id));
        let eta = NatTransformation::identity(id.clone());
        assert!(check_natural(&eta));
        let found = functors_homotopic(&id, &id, SearchLimit::default()).unwrap().unwrap();
        assert_eq!(found, eta);
    }

    #[test]
    fn non_iso_transformation_is_not_a_homotopy() {
        // constant at 0 and constant at 1 are related by a non-invertible map only
        let c = Arc::new(arrow());
        let f = Functor::constant(c.clone(), c.clone(), 0);
        let g = Functor::constant(c.clone(), c.clone(), 1);
        let eta = NatTransformation { source: f.clone(), target: g.clone(), components: vec![1, 1] };
        assert!(check_natural(&eta));
        assert!(!eta.is_isomorphism());
        assert_eq!(functors_homotopic(&f, &g, SearchLimit::default()).unwrap(), None);
    }

    #[test]
    fn dot_output_is_deterministic() {
        let c = arrow();
        let dot = c.to_dot("A", false);
        assert_eq!(dot, "digraph \"A\" {\n  0;\n  1;\n  0 -> 1 [label=\"m1\"];\n}\n");
        assert_eq!(c.to_dot("A", true).matches("->").count(), 3);
    }
}
