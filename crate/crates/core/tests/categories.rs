use std::sync::Arc;

use catkit::categorify::{
    categorify, check_biequivariance, contraction_homotopy, covering_is_natural, covering_transformation, lift_hom,
    preserves_tensor, Flavor,
};
use catkit::category::{
    check_functor, check_monoidal, check_natural, functors_homotopic, is_groupoid, pi0, FinCategory, Functor,
    NatTransformation,
};
use catkit::group::{enumerate_homs, GroupRef};
use catkit::io::named_group;
use catkit::SearchLimit;
use proptest::prelude::*;

const NAMES: [&str; 8] = ["Z1", "Z2", "Z3", "Z4", "K4", "Z5", "Z6", "S3"];
const FLAVORS: [Flavor; 3] = [Flavor::Tautological, Flavor::Discrete, Flavor::Simplicial];

fn group(name: &str) -> GroupRef {
    named_group(name).unwrap()
}

fn any_group() -> impl Strategy<Value = GroupRef> {
    proptest::sample::select(NAMES.to_vec()).prop_map(group)
}

fn any_flavor() -> impl Strategy<Value = Flavor> {
    proptest::sample::select(FLAVORS.to_vec())
}

/// A random hom `G → H` among all of them.
fn hom_between(g: &GroupRef, h: &GroupRef, pick: usize) -> catkit::GroupHom {
    let homs = enumerate_homs(g, h, SearchLimit::default()).unwrap();
    homs[pick % homs.len()].clone()
}

proptest! {
    #[test]
    fn categorifications_are_valid_groupoids(g in any_group(), flavor in any_flavor()) {
        let c = categorify(&g, flavor);
        prop_assert!(c.category.validate().is_ok());
        prop_assert!(is_groupoid(&c.category));
        if let Some(m) = &c.monoidal {
            prop_assert!(check_monoidal(m));
        }
        let classes = pi0(&c.category, c.monoidal.as_ref()).unwrap().class_count;
        let expected = if flavor == Flavor::Discrete { g.order() } else { 1 };
        prop_assert_eq!(classes, expected);
    }

    #[test]
    fn lifts_compose(
        (g, h, k) in (any_group(), any_group(), any_group()),
        (i, j) in (0usize..64, 0usize..64),
        flavor in any_flavor(),
    ) {
        let f1 = hom_between(&g, &h, i);
        let f2 = hom_between(&h, &k, j);
        let (a, b) = (lift_hom(&f1, flavor).unwrap(), lift_hom(&f2, flavor).unwrap());
        prop_assert!(check_functor(&a) && check_functor(&b));
        let composite = a.then(&b).unwrap();
        prop_assert!(check_functor(&composite));
        let direct = lift_hom(&f1.then(&f2).unwrap(), flavor).unwrap();
        prop_assert_eq!(composite.obj_map, direct.obj_map);
        prop_assert_eq!(composite.mor_map, direct.mor_map);
        if flavor != Flavor::Tautological {
            let (src, tgt) = (categorify(&g, flavor).monoidal.unwrap(), categorify(&h, flavor).monoidal.unwrap());
            prop_assert!(preserves_tensor(&a, &src, &tgt));
        }
    }

    #[test]
    fn conjugation_gives_natural_isomorphisms((g, h) in (any_group(), any_group()), i in 0usize..64, x in 0usize..8) {
        let f = hom_between(&g, &h, i);
        let x = x % h.order();
        let (a, b) = (lift_hom(&f, Flavor::Tautological).unwrap(), lift_hom(&f.conjugate_by(x), Flavor::Tautological).unwrap());
        // η_* = x makes the square x f(m) = (x f(m) x⁻¹) x commute
        let eta = NatTransformation { source: a.clone(), target: b.clone(), components: vec![x] };
        prop_assert!(check_natural(&eta));
        let found = functors_homotopic(&a, &b, SearchLimit::default()).unwrap();
        prop_assert!(found.as_ref().is_some_and(check_natural));
    }

    #[test]
    fn covering_functor_is_biequivariant_and_natural(g in any_group(), h in any_group(), i in 0usize..64) {
        prop_assert!(check_functor(&covering_transformation(&g)));
        prop_assert!(check_biequivariance(&g));
        prop_assert!(covering_is_natural(&hom_between(&g, &h, i)));
    }

    #[test]
    fn simplicial_groupoid_contracts(g in any_group(), base in 0usize..8) {
        let eta = contraction_homotopy(&g, base % g.order()).unwrap();
        prop_assert!(check_natural(&eta) && eta.is_isomorphism());
    }
}

#[test]
fn non_associative_tensor_is_rejected() {
    // Z5 with x ⊗ y = 2x + 3y mod 5 (idempotent, not associative)
    let z5 = group("Z5");
    let mut m = categorify(&z5, Flavor::Discrete).monoidal.unwrap();
    m.tensor_obj = (0..25).map(|i| (2 * (i / 5) + 3 * (i % 5)) % 5).collect();
    assert!(!check_monoidal(&m));
}

#[test]
fn arrow_category_is_not_a_groupoid() {
    let (c, _) = FinCategory::from_preorder(2, |a, b| a <= b);
    assert!(c.validate().is_ok());
    assert!(!is_groupoid(&c));
    let id = Functor::identity(Arc::new(c));
    assert!(check_functor(&id));
    assert!(check_natural(&NatTransformation::identity(id)));
}

#[test]
fn transposition_maps_are_homotopic_but_not_to_trivial() {
    let (z2, s3) = (group("Z2"), group("S3"));
    let homs = enumerate_homs(&z2, &s3, SearchLimit::default()).unwrap();
    let lifts: Vec<Functor> = homs.iter().map(|f| lift_hom(f, Flavor::Tautological).unwrap()).collect();
    let lim = SearchLimit::default();
    assert!(functors_homotopic(&lifts[0], &lifts[1], lim).unwrap().is_none());
    assert!(functors_homotopic(&lifts[1], &lifts[2], lim).unwrap().is_some());
    let wrong = NatTransformation { source: lifts[1].clone(), target: lifts[2].clone(), components: vec![0] };
    assert!(!check_natural(&wrong));
}

#[test]
fn covering_functor_is_not_monoidal_for_s3() {
    let s3 = group("S3");
    let (sim, taut) = (categorify(&s3, Flavor::Simplicial), categorify(&s3, Flavor::Tautological));
    let r = covering_transformation(&s3);
    let m = sim.monoidal.unwrap();
    // tensor on the single object category of a non-abelian group is not a functor,
    // so compare R(f ⊗ g) with R(f) R(g) directly
    let order = s3.order();
    let fails = (0..order * order).any(|f| {
        (0..order * order).any(|g| {
            let fg = m.mor(f, g).unwrap();
            r.mor_map[fg] != taut.category.compose(r.mor_map[f], r.mor_map[g]).unwrap()
        })
    });
    assert!(fails);
}
