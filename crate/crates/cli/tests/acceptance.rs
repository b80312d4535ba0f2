//! End-to-end acceptance checks. Runs without the libtest harness so that
//! each criterion prints exactly one PASS/FAIL line.

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::PathBuf;
use std::process::{Command, ExitCode};
use std::sync::Arc;
use std::time::Instant;

use catkit::categorify::{
    categorify, check_biequivariance, lift_hom, lifted_hom_classes, outer_count_via_functors, Flavor,
};
use catkit::category::{check_functor, check_monoidal, check_natural, functors_homotopic};
use catkit::cohomology::{
    associators, coboundary, cohomology_brute_force, cohomology_group, enumerate_cochains, CoefficientModule, Cochain,
};
use catkit::extension::{
    canonical_section, check_compatibility, check_twisted_cocycle, classify_extensions, crossed_product, factor_set,
    valid_pairs, weak_equivalent, GroupExtension,
};
use catkit::group::{automorphisms, check_hom, enumerate_homs, hom_conjugacy_classes, FiniteGroup, GroupRef};
use catkit::io::named_group;
use catkit::nerve::{bar_spaces, homology, nerve, normalized_chains, reduced_homology};
use catkit::{Int, SearchLimit};
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};
use serde_json::Value;

type Outcome = Result<(), String>;

fn limit() -> SearchLimit {
    SearchLimit::default()
}

fn group(name: &str) -> GroupRef {
    named_group(name).unwrap_or_else(|| panic!("unknown group {name}"))
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn data(file: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(file)
        .to_string_lossy()
        .into_owned()
}

#[derive(Debug, PartialEq, Eq)]
struct Run {
    code: i32,
    stdout: Vec<u8>,
    stderr: Vec<u8>,
}

fn catkit(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_catkit"))
        .args(args)
        .env_remove(catkit::MAX_CANDIDATES_ENV)
        .output()
        .expect("spawn catkit");
    Run { code: out.status.code().unwrap_or(-1), stdout: out.stdout, stderr: out.stderr }
}

fn catkit_json(args: &[&str]) -> Result<Value, String> {
    let run = catkit(args);
    if run.code != 0 {
        return Err(format!("{args:?} exited with {}", run.code));
    }
    serde_json::from_slice(&run.stdout).map_err(|e| e.to_string())
}

/// Groups of order at most 4, up to isomorphism.
const SMALL: [&str; 4] = ["Z2", "Z3", "Z4", "K4"];

fn small_pairs(max_product: usize) -> Vec<(GroupRef, GroupRef)> {
    let mut out = Vec::new();
    for g in SMALL {
        for n in SMALL {
            let (g, n) = (group(g), group(n));
            if g.order() * n.order() <= max_product {
                out.push((g, n));
            }
        }
    }
    out
}

fn crit_classification() -> Outcome {
    let cases: [(&str, &str, &[&str]); 3] =
        [("Z2", "Z2", &["Z2xZ2", "Z4"]), ("Z2", "Z3", &["S3", "Z6"]), ("Z3", "Z3", &["Z3xZ3", "Z9", "Z9"])];
    for (base, fiber, expected) in cases {
        let v = catkit_json(&["classify-ext", "--base", base, "--fiber", fiber, "--emit", "json"])?;
        let mut mids: Vec<String> = v["classes"]
            .as_array()
            .ok_or("missing classes")?
            .iter()
            .map(|c| c["middle_group"].as_str().unwrap_or_default().to_string())
            .collect();
        mids.sort();
        ensure(mids == expected, || format!("({base}, {fiber}): got {mids:?}, want {expected:?}"))?;
        ensure(v["class_count"] == expected.len(), || format!("({base}, {fiber}): class_count mismatch"))?;
    }
    Ok(())
}

/// Every extension with `|E| ≤ 8`, as crossed products of all valid pairs.
fn small_extensions() -> Result<Vec<GroupExtension>, String> {
    let mut out = Vec::new();
    for (g, n) in small_pairs(8) {
        for (l, f) in valid_pairs(&g, &n, limit()).map_err(|e| e.to_string())? {
            out.push(crossed_product(&f, &l).map_err(|e| e.to_string())?);
        }
        // the classification's representatives round-trip as well
        for class in classify_extensions(&g, &n, limit()).map_err(|e| e.to_string())? {
            out.push(crossed_product(&class.factor_set, &class.action).map_err(|e| e.to_string())?);
        }
    }
    Ok(out)
}

fn crit_cocycle_law() -> Outcome {
    let mut checked = 0usize;
    for ext in small_extensions()? {
        for s in ext.sections() {
            let (f, l) = factor_set(&ext, &s).map_err(|e| e.to_string())?;
            ensure(check_twisted_cocycle(&f, &l) && check_compatibility(&f, &l), || {
                format!("section {:?} of an extension of order {} fails", s.values(), ext.e().order())
            })?;
            checked += 1;
        }
    }
    ensure(checked > 0, || "no sections checked".into())
}

fn crit_section_independence() -> Outcome {
    for ext in small_extensions()? {
        let data: Vec<_> = ext
            .sections()
            .iter()
            .map(|s| factor_set(&ext, s).map_err(|e| e.to_string()))
            .collect::<Result<_, _>>()?;
        for (f, l) in &data {
            for (f2, l2) in &data {
                let w = weak_equivalent(f, l, f2, l2, limit()).map_err(|e| e.to_string())?;
                ensure(w.is_some(), || format!("no witness in an extension of order {}", ext.e().order()))?;
            }
        }
    }
    Ok(())
}

fn crit_schreier_round_trip() -> Outcome {
    let mut count = 0usize;
    for (g, n) in small_pairs(16) {
        for (l, f) in valid_pairs(&g, &n, limit()).map_err(|e| e.to_string())? {
            let ext = crossed_product(&f, &l).map_err(|e| e.to_string())?;
            let (f2, l2) = factor_set(&ext, &canonical_section(&ext)).map_err(|e| e.to_string())?;
            ensure(f2.values() == f.values() && l2.maps() == l.maps(), || {
                format!("round trip changed a pair over ({}, {})", g.order(), n.order())
            })?;
            count += 1;
        }
    }
    ensure(count > 0, || "no pairs".into())
}

fn crit_cohomology() -> Outcome {
    let cases = [(2, "Z2", 2usize, "Z/2"), (2, "Z3", 3, "Z/3"), (2, "Z3", 2, "0"), (3, "Z2", 2, "Z/2")];
    for (n, g, m, expected) in cases {
        let module = Arc::new(CoefficientModule::trivial(group(g), vec![m]).map_err(|e| e.to_string())?);
        let exact = cohomology_group(n, &module);
        let brute = cohomology_brute_force(n, &module, limit()).map_err(|e| e.to_string())?;
        ensure(exact.render() == expected && brute.invariant_factors == exact.invariant_factors, || {
            format!("H^{n}({g}, Z/{m}): exact {}, brute force {}", exact.render(), brute.render())
        })?;
    }
    let run = catkit(&["cohomology", "--n", "2", "--group", &data("z2.json"), "--coeff", &data("z2.json")]);
    let text = String::from_utf8_lossy(&run.stdout);
    ensure(run.code == 0 && text.starts_with("H^2 = Z/2\n"), || format!("CLI printed {text:?}"))
}

fn crit_associators() -> Outcome {
    let module = Arc::new(CoefficientModule::trivial(group("Z2"), vec![2]).map_err(|e| e.to_string())?);
    let report = associators(&module, limit()).map_err(|e| e.to_string())?;
    let found: BTreeSet<Vec<usize>> = report.associators.iter().map(Cochain::free_values).collect();
    let cocycles: BTreeSet<Vec<usize>> = enumerate_cochains(3, &module, limit())
        .map_err(|e| e.to_string())?
        .into_iter()
        .filter(|c| coboundary(c).is_zero())
        .map(|c| c.free_values())
        .collect();
    ensure(found == cocycles && found.len() == 2, || format!("associators {found:?} vs cocycles {cocycles:?}"))
}

fn ints(v: &[i64]) -> Vec<Int> {
    v.iter().map(|&x| Int::from(x)).collect()
}

fn crit_nerve_homology() -> Outcome {
    let abelianizations: [(&str, &[i64]); 5] =
        [("Z2", &[2]), ("Z3", &[3]), ("Z4", &[4]), ("K4", &[2, 2]), ("S3", &[2])];
    for (name, torsion) in abelianizations {
        let c = categorify(&group(name), Flavor::Tautological).category;
        let cx = normalized_chains(&nerve(&c, 3, limit()).map_err(|e| e.to_string())?.set);
        let h1 = homology(&cx, 1).map_err(|e| e.to_string())?;
        ensure(h1.free_rank == 0 && h1.torsion == ints(torsion), || format!("H_1(B{name}) = {}", h1.render()))?;
    }
    let c = categorify(&group("Z2"), Flavor::Tautological).category;
    let cx = normalized_chains(&nerve(&c, 4, limit()).map_err(|e| e.to_string())?.set);
    let h3 = homology(&cx, 3).map_err(|e| e.to_string())?;
    ensure(h3.free_rank == 0 && h3.torsion == ints(&[2]), || format!("H_3(BZ2) = {}", h3.render()))?;
    for name in SMALL {
        let g = group(name);
        let bar = bar_spaces(&g, 3, limit()).map_err(|e| e.to_string())?;
        bar.verify_quotient(&g).map_err(|v| v.to_string())?;
        let cx = normalized_chains(&bar.eg.set);
        for n in 1..=2 {
            let h = reduced_homology(&cx, n).map_err(|e| e.to_string())?;
            ensure(h.is_trivial(), || format!("reduced H_{n}(E{name}) = {}", h.render()))?;
        }
    }
    Ok(())
}

fn crit_homotopy_classes() -> Outcome {
    let (z2, s3, z3) = (group("Z2"), group("S3"), group("Z3"));
    let functor_classes = lifted_hom_classes(&z2, &s3, limit()).map_err(|e| e.to_string())?.len();
    let conj_classes = hom_conjugacy_classes(&z2, &s3, limit()).map_err(|e| e.to_string())?.len();
    ensure(functor_classes == 2 && conj_classes == 2, || {
        format!("Z2 → S3: {functor_classes} functor classes, {conj_classes} conjugacy classes")
    })?;
    for (h, out) in [(&s3, 1), (&z3, 2)] {
        let a = automorphisms(h, limit()).map_err(|e| e.to_string())?.outer_class_count;
        let b = outer_count_via_functors(h, limit()).map_err(|e| e.to_string())?;
        ensure(a == out && b == out, || format!("Out of order-{} group: {a} vs {b}, want {out}", h.order()))?;
    }
    Ok(())
}

const UP_TO_SIX: [&str; 7] = ["Z1", "Z2", "Z3", "Z4", "K4", "Z5", "S3"];
const UP_TO_SIX_ALL: [&str; 8] = ["Z1", "Z2", "Z3", "Z4", "K4", "Z5", "Z6", "S3"];

fn relabel(g: &FiniteGroup, perm: &[usize]) -> Vec<Vec<usize>> {
    // perm fixes 0, so the identity stays at index 0
    let n = g.order();
    let mut inv = vec![0; n];
    for (i, &p) in perm.iter().enumerate() {
        inv[p] = i;
    }
    (0..n).map(|a| (0..n).map(|b| perm[g.mul(inv[a], inv[b])]).collect()).collect()
}

fn crit_structural() -> Outcome {
    // exhaustive part
    for name in UP_TO_SIX_ALL {
        let g = group(name);
        FiniteGroup::from_table(&g.rows(), None).map_err(|e| format!("{name}: {e}"))?;
        ensure(check_biequivariance(&g), || format!("R_G not biequivariant for {name}"))?;
        for flavor in [Flavor::Tautological, Flavor::Discrete, Flavor::Simplicial] {
            let c = categorify(&g, flavor);
            c.category.validate().map_err(|e| format!("{name}: {e}"))?;
            if let Some(m) = &c.monoidal {
                ensure(check_monoidal(m), || format!("{name}: monoidal check failed"))?;
            }
            let nv = nerve(&c.category, 3, limit()).map_err(|e| e.to_string())?;
            nv.set.verify().map_err(|v| format!("{name}: {v}"))?;
            normalized_chains(&nv.set).verify().map_err(|v| format!("{name}: {v}"))?;
        }
    }
    for a in UP_TO_SIX {
        for b in UP_TO_SIX {
            let (g, h) = (group(a), group(b));
            let homs = enumerate_homs(&g, &h, limit()).map_err(|e| e.to_string())?;
            for f in &homs {
                ensure(check_hom(f), || format!("{a} → {b}: invalid hom"))?;
                for flavor in [Flavor::Tautological, Flavor::Discrete, Flavor::Simplicial] {
                    let lifted = lift_hom(f, flavor).map_err(|e| e.to_string())?;
                    ensure(check_functor(&lifted), || format!("{a} → {b}: lift is not a functor"))?;
                }
            }
            if g.order() * h.order() <= 12 {
                let taut: Vec<_> =
                    homs.iter().map(|f| lift_hom(f, Flavor::Tautological)).collect::<Result<_, _>>().map_err(|e| e.to_string())?;
                for x in &taut {
                    for y in &taut {
                        if let Some(eta) = functors_homotopic(x, y, limit()).map_err(|e| e.to_string())? {
                            ensure(check_natural(&eta), || format!("{a} → {b}: found a non-natural η"))?;
                        }
                    }
                }
            }
        }
    }
    for (g, m, deg) in [("Z2", 2, 3), ("Z3", 3, 2), ("Z4", 2, 2), ("K4", 2, 2), ("S3", 2, 1)] {
        let module = Arc::new(CoefficientModule::trivial(group(g), vec![m]).map_err(|e| e.to_string())?);
        for n in 0..=deg {
            for c in enumerate_cochains(n, &module, limit()).map_err(|e| e.to_string())? {
                ensure(coboundary(&coboundary(&c)).is_zero(), || format!("dd ≠ 0 on a {n}-cochain of {g}"))?;
            }
        }
    }
    // randomized part
    let mut runner = TestRunner::new(Config { cases: 64, failure_persistence: None, ..Config::default() });
    let s3 = group("S3");
    let module = Arc::new(CoefficientModule::trivial(s3.clone(), vec![3]).map_err(|e| e.to_string())?);
    runner
        .run(&proptest::collection::vec(0usize..3, 25), |free| {
            let c = Cochain::from_free_values(2, module.clone(), &free);
            prop_assert!(coboundary(&coboundary(&c)).is_zero());
            Ok(())
        })
        .map_err(|e| e.to_string())?;
    let tail = Just((1..6).collect::<Vec<usize>>()).prop_shuffle();
    runner
        .run(&tail, |tail| {
            let perm: Vec<usize> = std::iter::once(0).chain(tail).collect();
            let g = FiniteGroup::from_table(&relabel(&s3, &perm), None).expect("relabelled group");
            prop_assert!(check_biequivariance(&g));
            let c = categorify(&g, Flavor::Simplicial);
            prop_assert!(c.category.validate().is_ok());
            prop_assert!(check_monoidal(c.monoidal.as_ref().unwrap()));
            Ok(())
        })
        .map_err(|e| e.to_string())?;
    Ok(())
}

/// Invocations whose bytes must not depend on `--threads`.
fn determinism_suite() -> Vec<Vec<String>> {
    let d = data;
    let cmds: Vec<Vec<String>> = vec![
        vec!["group-info".into(), "S3".into(), "--emit".into(), "json".into()],
        vec!["homs".into(), "--from".into(), "Z2".into(), "--to".into(), "S3".into()],
        vec!["hom-classes".into(), "--from".into(), "Z2".into(), "--to".into(), "S3".into()],
        vec!["aut".into(), "D4".into()],
        vec!["categorify".into(), "--flavor".into(), "simplicial".into(), "--group".into(), d("z3.json"), "--emit".into(), "dot".into()],
        vec!["covering".into(), "--group".into(), "S3".into(), "--emit".into(), "json".into()],
        vec!["bundle".into(), "--ext".into(), d("ext_s3.json"), "--emit".into(), "dot".into()],
        vec!["factor-set".into(), "--ext".into(), d("ext_s3.json"), "--emit".into(), "json".into()],
        vec!["check-cocycle".into(), "--pair".into(), d("pair_z4.json")],
        vec!["check-cocycle".into(), "--pair".into(), d("pair_bad.json")],
        vec!["weak-equiv".into(), "--first".into(), d("pair_z4.json"), "--second".into(), d("pair_split.json")],
        vec!["crossed-product".into(), "--pair".into(), d("pair_z4.json"), "--emit".into(), "json".into()],
        vec!["classify-ext".into(), "--base".into(), "Z2".into(), "--fiber".into(), "K4".into(), "--emit".into(), "json".into()],
        vec!["classify-ext".into(), "--base".into(), "Z3".into(), "--fiber".into(), "Z3".into()],
        vec!["cohomology".into(), "--n".into(), "2".into(), "--group".into(), "K4".into(), "--coeff".into(), "Z2".into(), "--brute-force".into()],
        vec!["associators".into(), "--group".into(), "Z3".into(), "--coeff".into(), "Z3".into(), "--emit".into(), "json".into()],
        vec!["nerve".into(), "--group".into(), "S3".into(), "--k".into(), "2".into(), "--emit".into(), "json".into()],
        vec!["homology".into(), "--group".into(), "Z2".into(), "--k".into(), "5".into()],
        vec!["bar".into(), "--group".into(), "Z3".into(), "--k".into(), "3".into()],
        vec!["open-cat".into(), "--space".into(), d("discrete3.json"), "--emit".into(), "dot".into()],
        vec!["refine".into(), "--space".into(), d("discrete3.json"), "--fine".into(), d("cover_points.json"), "--coarse".into(), d("cover_pairs.json")],
        vec!["homs".into(), "--from".into(), "Z6".into(), "--to".into(), "S3".into(), "--max-candidates".into(), "3".into()],
    ];
    cmds
}

fn crit_determinism() -> Outcome {
    for cmd in determinism_suite() {
        let args: Vec<&str> = cmd.iter().map(String::as_str).collect();
        let mut reference: Option<Run> = None;
        for threads in ["1", "2", "4", "1"] {
            let mut full = vec!["--threads", threads];
            full.extend(&args);
            let got = catkit(&full);
            match &reference {
                None => reference = Some(got),
                Some(r) => ensure(*r == got, || format!("{args:?} differs with --threads {threads}"))?,
            }
        }
        let run = reference.expect("at least one run");
        let produced = if run.code == 0 { &run.stdout } else { &run.stderr };
        ensure(run.code <= 2 && !produced.is_empty(), || format!("{args:?}: exit {}, no output", run.code))?;
    }
    Ok(())
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("extension classification counts", crit_classification),
        ("cocycle law for every section, |E| ≤ 8", crit_cocycle_law),
        ("section independence up to weak equivalence", crit_section_independence),
        ("Schreier round trip, |G|, |N| ≤ 4", crit_schreier_round_trip),
        ("cohomology by linear algebra and brute force", crit_cohomology),
        ("associators are exactly the 3-cocycles", crit_associators),
        ("nerve homology", crit_nerve_homology),
        ("homotopy classes and Out", crit_homotopy_classes),
        ("structural property suites", crit_structural),
        ("determinism across thread counts", crit_determinism),
    ];
    let mut failures = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|p| {
            Err(p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string())).unwrap_or_else(|| "panic".into()))
        });
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(()) => println!("criterion {:>2}: PASS  {name} ({secs:.1}s)", i + 1),
            Err(why) => {
                failures += 1;
                println!("criterion {:>2}: FAIL  {name} ({secs:.1}s): {why}", i + 1);
            }
        }
    }
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
