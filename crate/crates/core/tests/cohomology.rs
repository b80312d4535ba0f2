use std::sync::Arc;

use catkit::cohomology::{
    associators, coboundary, cohomology_brute_force, cohomology_group, Cochain, CoefficientModule,
};
use catkit::group::GroupRef;
use catkit::io::named_group;
use catkit::{Int, SearchLimit};
use num_integer::Integer;
use proptest::prelude::*;

fn group(name: &str) -> GroupRef {
    named_group(name).unwrap()
}

/// `Z/m` with `x` acting as multiplication by `u^x`, for a cyclic group.
fn twisted(k: usize, m: usize, u: i64) -> CoefficientModule {
    let action = (0..k).map(|x| vec![vec![u.pow(x as u32) % m as i64]]).collect();
    CoefficientModule::new(group(&format!("Z{k}")), vec![m], Some(action)).unwrap()
}

fn modules() -> Vec<Arc<CoefficientModule>> {
    vec![
        Arc::new(CoefficientModule::trivial(group("Z2"), vec![2]).unwrap()),
        Arc::new(CoefficientModule::trivial(group("Z3"), vec![3]).unwrap()),
        Arc::new(CoefficientModule::trivial(group("K4"), vec![2]).unwrap()),
        Arc::new(CoefficientModule::trivial(group("Z4"), vec![2, 2]).unwrap()),
        Arc::new(CoefficientModule::trivial(group("S3"), vec![2]).unwrap()),
        Arc::new(twisted(2, 3, -1)),
        Arc::new(twisted(2, 4, -1)),
        Arc::new(twisted(4, 5, 2)),
    ]
}

fn random_cochain(n: usize) -> impl Strategy<Value = Cochain> {
    proptest::sample::select(modules()).prop_flat_map(move |m| {
        let free = (m.group().order() - 1).pow(n as u32);
        proptest::collection::vec(0..m.size(), free)
            .prop_map(move |v| Cochain::from_free_values(n, m.clone(), &v))
    })
}

proptest! {
    #[test]
    fn coboundary_squares_to_zero(c in (0usize..3).prop_flat_map(random_cochain)) {
        prop_assert!(coboundary(&coboundary(&c)).is_zero());
    }

    #[test]
    fn coboundary_is_additive(
        (a, b) in (0usize..3).prop_flat_map(|n| random_cochain(n).prop_flat_map(move |a| {
            let m = a.module().clone();
            let free = (m.group().order() - 1).pow(n as u32);
            (Just(a), proptest::collection::vec(0..m.size(), free)
                .prop_map(move |v| Cochain::from_free_values(n, m.clone(), &v)))
        }))
    ) {
        let lhs = coboundary(&a.add(&b).unwrap());
        let rhs = coboundary(&a).add(&coboundary(&b)).unwrap();
        prop_assert_eq!(lhs.values(), rhs.values());
    }

    /// `H^n(Z/k; Z/m) = Z/gcd(k, m)` for `n ≥ 1` with trivial action.
    #[test]
    fn cyclic_groups_with_trivial_coefficients(k in 2usize..7, m in 2usize..7, n in 1usize..4) {
        let module = CoefficientModule::trivial(group(&format!("Z{k}")), vec![m]).unwrap();
        let h = cohomology_group(n, &module);
        let d = k.gcd(&m);
        let expected: Vec<Int> = if d == 1 { vec![] } else { vec![Int::from(d)] };
        prop_assert_eq!(h.invariant_factors, expected);
    }
}

#[test]
fn linear_algebra_matches_brute_force() {
    let lim = SearchLimit::default();
    for m in modules() {
        for n in 0..=3u32 {
            let free = (m.group().order() - 1).pow(n) as u32;
            if (m.size() as u64).checked_pow(free).is_none_or(|c| c > 1 << 16) {
                continue;
            }
            let exact = cohomology_group(n as usize, &m);
            let brute = cohomology_brute_force(n as usize, &m, lim).unwrap();
            assert_eq!(exact.invariant_factors, brute.invariant_factors, "H^{n} over order {}", m.group().order());
            assert_eq!(exact.cocycle_count, brute.cocycle_count);
        }
    }
}

#[test]
fn known_groups() {
    let render = |g: &str, orders: Vec<usize>, n: usize| {
        cohomology_group(n, &CoefficientModule::trivial(group(g), orders).unwrap()).render()
    };
    assert_eq!(render("Z2", vec![2], 2), "Z/2");
    assert_eq!(render("Z3", vec![3], 2), "Z/3");
    assert_eq!(render("Z3", vec![2], 2), "0");
    assert_eq!(render("Z2", vec![2], 3), "Z/2");
    assert_eq!(render("K4", vec![2], 2), "Z/2 ⊕ Z/2 ⊕ Z/2");
    assert_eq!(render("K4", vec![2, 2], 1), "Z/2 ⊕ Z/2 ⊕ Z/2 ⊕ Z/2");
    assert_eq!(render("S3", vec![3], 1), "0");
    // inversion on Z/3 has no fixed points and no norm
    for n in 0..4 {
        assert_eq!(cohomology_group(n, &twisted(2, 3, -1)).render(), "0");
    }
    // inversion on Z/4: the norm vanishes, so H^1 = M / 2M and H^2 = M^G
    assert_eq!(cohomology_group(1, &twisted(2, 4, -1)).render(), "Z/2");
    assert_eq!(cohomology_group(2, &twisted(2, 4, -1)).render(), "Z/2");
}

#[test]
fn associators_biject_with_cocycles() {
    for (g, m, classes) in [("Z2", 2, 2), ("Z3", 3, 3), ("Z2", 3, 1)] {
        let module = Arc::new(CoefficientModule::trivial(group(g), vec![m]).unwrap());
        let report = associators(&module, SearchLimit::default()).unwrap();
        let h3 = cohomology_group(3, &module);
        assert_eq!(Int::from(report.associators.len()), h3.cocycle_count, "{g} with Z/{m}");
        assert_eq!(report.class_count, classes);
        assert!(report.associators.iter().all(|a| coboundary(a).is_zero()));
    }
}
