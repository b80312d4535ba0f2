//! The three categorifications of a finite group and their action on
//! homomorphisms.
//!
//! * tautological: one object, the group elements as morphisms;
//! * discrete: the elements as objects, identities only, tensor = product;
//! * simplicial: the elements as objects with exactly one morphism between
//!   any ordered pair; morphism `x → y` has index `x * |G| + y`.
//!
//! The covering functor `R_G` from the simplicial to the tautological
//! category sends `x → y` to `y x^{-1}`.

use std::sync::Arc;

use thiserror::Error;

use crate::category::{
    functors_homotopic, CategoryError, CategoryRef, FinCategory, Functor, Morphism,
    MonoidalStructure, MorphismTensor, NatTransformation,
};
use crate::group::{automorphisms, enumerate_homs, FiniteGroup, GroupError, GroupHom, GroupRef};
use crate::SearchLimit;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CategorifyError {
    #[error("map is not a group homomorphism")]
    NotAHomomorphism,
    #[error("base object {base} out of range for a group of order {order}")]
    BaseOutOfRange { base: usize, order: usize },
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Category(#[from] CategoryError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Flavor {
    Tautological,
    Discrete,
    Simplicial,
}

impl std::str::FromStr for Flavor {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "tautological" | "taut" => Ok(Flavor::Tautological),
            "discrete" => Ok(Flavor::Discrete),
            "simplicial" => Ok(Flavor::Simplicial),
            other => Err(format!("unknown flavor `{other}`")),
        }
    }
}

/// A categorified group; monoidal for the discrete and simplicial flavors.
#[derive(Debug, Clone)]
pub struct Categorified {
    pub category: CategoryRef,
    pub monoidal: Option<MonoidalStructure>,
}

pub fn categorify(g: &FiniteGroup, flavor: Flavor) -> Categorified {
    match flavor {
        Flavor::Tautological => Categorified { category: Arc::new(tautological(g)), monoidal: None },
        Flavor::Discrete => {
            let (c, m) = discrete(g);
            Categorified { category: c, monoidal: Some(m) }
        }
        Flavor::Simplicial => {
            let (c, m) = simplicial(g);
            Categorified { category: c, monoidal: Some(m) }
        }
    }
}

pub fn tautological(g: &FiniteGroup) -> FinCategory {
    let morphisms = vec![Morphism { src: 0, tgt: 0 }; g.order()];
    FinCategory::from_fn(1, morphisms, vec![0], |a, b| g.mul(a, b))
        .with_labels(g.elements().map(|x| g.name(x)).collect())
}

fn group_tensor(g: &FiniteGroup) -> Vec<usize> {
    g.elements()
        .flat_map(|a| g.elements().map(move |b| g.mul(a, b)))
        .collect()
}

pub fn discrete(g: &FiniteGroup) -> (CategoryRef, MonoidalStructure) {
    let n = g.order();
    let morphisms = (0..n).map(|x| Morphism { src: x, tgt: x }).collect();
    let cat = FinCategory::from_fn(n, morphisms, (0..n).collect(), |a, _| a)
        .with_labels(g.elements().map(|x| format!("id_{}", g.name(x))).collect());
    let cat = Arc::new(cat);
    let tensor_obj = group_tensor(g);
    let monoidal = MonoidalStructure {
        base: cat.clone(),
        unit: 0,
        tensor_mor: MorphismTensor::Table(tensor_obj.clone()),
        tensor_obj,
        associator: None,
    };
    (cat, monoidal)
}

/// Index of the morphism `x → y` in the simplicial categorification.
#[inline]
pub fn simplicial_morphism(order: usize, x: usize, y: usize) -> usize {
    x * order + y
}

pub fn simplicial(g: &FiniteGroup) -> (CategoryRef, MonoidalStructure) {
    let n = g.order();
    let (cat, lookup) = FinCategory::from_preorder(n, |_, _| true);
    let labels = cat
        .morphisms()
        .iter()
        .map(|m| format!("{}→{}", g.name(m.src), g.name(m.tgt)))
        .collect();
    let cat = Arc::new(cat.with_labels(labels));
    let monoidal = MonoidalStructure {
        base: cat.clone(),
        unit: 0,
        tensor_obj: group_tensor(g),
        tensor_mor: MorphismTensor::Thin(lookup),
        associator: None,
    };
    (cat, monoidal)
}

/// The discrete categorification with each object's automorphisms enlarged
/// to a cyclic group of scalars `Z/units`: morphism `(x, k)` is the scalar
/// `k` on object `x`, at index `x * units + k`. Scalars add under both
/// composition and tensor, so an associator is exactly a normalized
/// 3-cochain `G^3 → Z/units`.
pub fn linearized_discrete(g: &FiniteGroup, units: usize) -> (CategoryRef, MonoidalStructure) {
    assert!(units > 0);
    let n = g.order();
    let morphisms = (0..n * units)
        .map(|i| Morphism { src: i / units, tgt: i / units })
        .collect();
    let identities = (0..n).map(|x| x * units).collect();
    let cat = FinCategory::from_fn(n, morphisms, identities, |a, b| {
        (a / units) * units + (a % units + b % units) % units
    })
    .with_labels(
        (0..n * units)
            .map(|i| format!("{}@{}", i % units, g.name(i / units)))
            .collect(),
    );
    let cat = Arc::new(cat);
    let m = n * units;
    let mut table = vec![0; m * m];
    for a in 0..m {
        for b in 0..m {
            let obj = g.mul(a / units, b / units);
            table[a * m + b] = obj * units + (a % units + b % units) % units;
        }
    }
    let monoidal = MonoidalStructure {
        base: cat.clone(),
        unit: 0,
        tensor_obj: group_tensor(g),
        tensor_mor: MorphismTensor::Table(table),
        associator: None,
    };
    (cat, monoidal)
}

/// Functor induced by a homomorphism between categorifications.
pub fn lift_hom(f: &GroupHom, flavor: Flavor) -> Result<Functor, CategorifyError> {
    let source = categorify(f.source(), flavor).category;
    let target = categorify(f.target(), flavor).category;
    lift_hom_between(f, flavor, source, target)
}

/// As [`lift_hom`], reusing already-built categories.
pub fn lift_hom_between(
    f: &GroupHom,
    flavor: Flavor,
    source: CategoryRef,
    target: CategoryRef,
) -> Result<Functor, CategorifyError> {
    if !f.is_homomorphism() {
        return Err(CategorifyError::NotAHomomorphism);
    }
    let (n, m) = (f.source().order(), f.target().order());
    let (obj_map, mor_map) = match flavor {
        Flavor::Tautological => (vec![0], f.map().to_vec()),
        Flavor::Discrete => (f.map().to_vec(), f.map().to_vec()),
        Flavor::Simplicial => {
            let mor = (0..n * n)
                .map(|i| simplicial_morphism(m, f.apply(i / n), f.apply(i % n)))
                .collect();
            (f.map().to_vec(), mor)
        }
    };
    Ok(Functor { source, target, obj_map, mor_map })
}

/// True iff `F` is strict monoidal: units, object tensor and morphism tensor
/// are preserved on the nose.
pub fn preserves_tensor(f: &Functor, src: &MonoidalStructure, tgt: &MonoidalStructure) -> bool {
    let s = &f.source;
    if f.obj_map[src.unit] != tgt.unit {
        return false;
    }
    let objects_ok = (0..s.object_count()).all(|a| {
        (0..s.object_count()).all(|b| f.obj_map[src.obj(a, b)] == tgt.obj(f.obj_map[a], f.obj_map[b]))
    });
    objects_ok
        && (0..s.morphism_count()).all(|a| {
            (0..s.morphism_count()).all(|b| {
                src.mor(a, b).map(|ab| f.mor_map[ab]) == tgt.mor(f.mor_map[a], f.mor_map[b])
            })
        })
}

/// Natural isomorphism from the functor collapsing the simplicial
/// categorification onto `base` to the identity functor; the component at
/// `x` is the unique morphism `base → x`.
pub fn contraction_homotopy(g: &FiniteGroup, base: usize) -> Result<NatTransformation, CategorifyError> {
    let n = g.order();
    if base >= n {
        return Err(CategorifyError::BaseOutOfRange { base, order: n });
    }
    let (cat, _) = simplicial(g);
    let collapse = Functor::constant(cat.clone(), cat.clone(), base);
    let identity = Functor::identity(cat);
    let components = (0..n).map(|x| simplicial_morphism(n, base, x)).collect();
    Ok(NatTransformation { source: collapse, target: identity, components })
}

/// `R_G`: `x → y ↦ y x^{-1}`, every object to the single object.
pub fn covering_transformation(g: &FiniteGroup) -> Functor {
    let (source, _) = simplicial(g);
    covering_between(g, source, Arc::new(tautological(g)))
}

pub(crate) fn covering_between(g: &FiniteGroup, source: CategoryRef, target: CategoryRef) -> Functor {
    let n = g.order();
    let mor_map = (0..n * n)
        .map(|i| g.mul(i % n, g.inv(i / n)))
        .collect();
    Functor { source, target, obj_map: vec![0; n], mor_map }
}

/// Checks `R(I_a ⊗ (x→y)) = a R(x→y) a^{-1}` and `R((x→y) ⊗ I_a) = R(x→y)`
/// for all `a, x, y`, with the tensor of the simplicial categorification.
pub fn check_biequivariance(g: &FiniteGroup) -> bool {
    let n = g.order();
    let (_, monoidal) = simplicial(g);
    let r = covering_transformation(g);
    g.elements().all(|a| {
        let ia = simplicial_morphism(n, a, a);
        (0..n * n).all(|xy| {
            let rxy = r.mor_map[xy];
            let left = monoidal.mor(ia, xy).map(|m| r.mor_map[m]);
            let right = monoidal.mor(xy, ia).map(|m| r.mor_map[m]);
            left == Some(g.conj(a, rxy)) && right == Some(rxy)
        })
    })
}

/// Naturality of `R` in the group: `C_f ∘ R_G = R_H ∘ S_f`.
pub fn covering_is_natural(f: &GroupHom) -> bool {
    let (Ok(taut), Ok(simp)) = (
        lift_hom(f, Flavor::Tautological),
        lift_hom(f, Flavor::Simplicial),
    ) else {
        return false;
    };
    let rg = covering_between(f.source(), simp.source.clone(), taut.source.clone());
    let rh = covering_between(f.target(), simp.target.clone(), taut.target.clone());
    match (rg.then(&taut), simp.then(&rh)) {
        (Some(a), Some(b)) => a == b,
        _ => false,
    }
}

/// Partitions parallel functors into natural-isomorphism classes. Classes
/// and their members keep input order.
pub fn homotopy_classes(functors: &[Functor], limit: SearchLimit) -> Result<Vec<Vec<usize>>, CategoryError> {
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for (i, f) in functors.iter().enumerate() {
        let mut home = None;
        for (c, class) in classes.iter().enumerate() {
            if functors_homotopic(&functors[class[0]], f, limit)?.is_some() {
                home = Some(c);
                break;
            }
        }
        match home {
            Some(c) => classes[c].push(i),
            None => classes.push(vec![i]),
        }
    }
    Ok(classes)
}

/// Tautological lifts of all homomorphisms `G → H`, grouped up to natural
/// isomorphism.
pub fn lifted_hom_classes(
    g: &GroupRef,
    h: &GroupRef,
    limit: SearchLimit,
) -> Result<Vec<Vec<Functor>>, CategorifyError> {
    let homs = enumerate_homs(g, h, limit)?;
    let source: CategoryRef = Arc::new(tautological(g));
    let target: CategoryRef = Arc::new(tautological(h));
    let functors = homs
        .iter()
        .map(|f| lift_hom_between(f, Flavor::Tautological, source.clone(), target.clone()))
        .collect::<Result<Vec<_>, _>>()?;
    let classes = homotopy_classes(&functors, limit)?;
    Ok(classes
        .into_iter()
        .map(|c| c.into_iter().map(|i| functors[i].clone()).collect())
        .collect())
}

/// `|Out(H)|` as the number of classes of automorphism functors of the
/// tautological categorification up to natural isomorphism.
pub fn outer_count_via_functors(h: &GroupRef, limit: SearchLimit) -> Result<usize, CategorifyError> {
    let auts = automorphisms(h, limit)?;
    let cat: CategoryRef = Arc::new(tautological(h));
    let functors = auts
        .aut
        .iter()
        .map(|f| lift_hom_between(f, Flavor::Tautological, cat.clone(), cat.clone()))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(homotopy_classes(&functors, limit)?.len())
}
