use std::fmt::Write as _;
use std::path::Path;
use std::sync::Arc;

use catkit::categorify::{
    categorify as build, check_biequivariance, covering_transformation, lifted_hom_classes, linearized_discrete,
    outer_count_via_functors, Flavor,
};
use catkit::category::{check_functor, check_monoidal, is_groupoid, CategoryRef, FinCategory};
use catkit::cohomology::{associators as find_associators, cohomology_brute_force, cohomology_group, CohomologyGroup};
use catkit::extension::{
    bundle_categorify, check_compatibility, check_twisted_cocycle, classify_extensions, crossed_product as schreier,
    factor_set as section_data, section_monoidal_functor, weak_equivalent, FactorSet, QuasiAction, Section,
};
use catkit::group::{automorphisms, enumerate_homs, hom_conjugacy_classes, FiniteGroup};
use catkit::io::{
    load_cover, load_coefficients, load_extension, load_pair, load_space, pair_to_json, resolve_group,
    GroupFile,
};
use catkit::nerve::{bar_spaces, homology as nerve_homology, nerve as build_nerve, normalized_chains, reduced_homology};
use catkit::smallgroups::label;
use catkit::topology::{open_set_category, points_of, preimage_functor, refinement, render_set};
use serde_json::{json, Value};

use crate::error::CliError;
use crate::{Context, Emit};

type Out = Result<String, CliError>;

fn json_out(v: Value) -> Out {
    Ok(serde_json::to_string_pretty(&v).expect("json values serialize") + "\n")
}

fn no_dot(ctx: &Context, command: &str) -> Result<(), CliError> {
    if ctx.emit == Emit::Dot {
        Err(CliError::Usage(format!("{command} has no DOT output")))
    } else {
        Ok(())
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn list(v: &[usize]) -> String {
    v.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
}

fn category_json(c: &FinCategory) -> Value {
    let morphisms: Vec<Value> = (0..c.morphism_count())
        .map(|f| {
            let m = c.morphism(f);
            json!({ "src": m.src, "tgt": m.tgt, "label": c.label(f) })
        })
        .collect();
    json!({ "objects": c.object_count(), "identities": c.identities(), "morphisms": morphisms })
}

fn group_summary(g: &FiniteGroup) -> Value {
    json!({
        "order": g.order(),
        "label": label(g),
        "abelian": g.is_abelian(),
        "center": g.center(),
        "abelianization_order": g.abelianization_order(),
        "element_orders": g.elements().map(|a| g.element_order(a)).collect::<Vec<_>>(),
        "generators": g.generating_set(),
    })
}

pub fn group_info(ctx: &Context, group: &str) -> Out {
    no_dot(ctx, "group-info")?;
    let g = resolve_group(group)?;
    if ctx.emit == Emit::Json {
        let mut v = group_summary(&g);
        v["table"] = json!(GroupFile::from(&*g));
        return json_out(v);
    }
    let mut out = String::new();
    writeln!(out, "order: {}", g.order()).unwrap();
    writeln!(out, "label: {}", label(&g)).unwrap();
    writeln!(out, "abelian: {}", yes_no(g.is_abelian())).unwrap();
    writeln!(out, "center: {}", g.center().len()).unwrap();
    writeln!(out, "abelianization: {}", g.abelianization_order()).unwrap();
    let orders: Vec<usize> = g.elements().map(|a| g.element_order(a)).collect();
    writeln!(out, "element orders: {}", list(&orders)).unwrap();
    writeln!(out, "generators: {}", list(&g.generating_set())).unwrap();
    Ok(out)
}

pub fn homs(ctx: &Context, from: &str, to: &str) -> Out {
    no_dot(ctx, "homs")?;
    let (g, h) = (resolve_group(from)?, resolve_group(to)?);
    let homs = enumerate_homs(&g, &h, ctx.limit)?;
    if ctx.emit == Emit::Json {
        let maps: Vec<&[usize]> = homs.iter().map(|f| f.map()).collect();
        return json_out(json!({ "count": homs.len(), "homs": maps }));
    }
    let mut out = format!("count: {}\n", homs.len());
    for f in &homs {
        writeln!(out, "{}", list(f.map())).unwrap();
    }
    Ok(out)
}

pub fn hom_classes(ctx: &Context, from: &str, to: &str) -> Out {
    no_dot(ctx, "hom-classes")?;
    let (g, h) = (resolve_group(from)?, resolve_group(to)?);
    let classes = hom_conjugacy_classes(&g, &h, ctx.limit)?;
    let functor_classes = lifted_hom_classes(&g, &h, ctx.limit)?;
    if ctx.emit == Emit::Json {
        let cs: Vec<Vec<&[usize]>> = classes.iter().map(|c| c.iter().map(|f| f.map()).collect()).collect();
        return json_out(json!({
            "classes": cs,
            "class_count": classes.len(),
            "functor_class_count": functor_classes.len(),
        }));
    }
    let mut out = format!("classes: {}\n", classes.len());
    for (i, c) in classes.iter().enumerate() {
        writeln!(out, "class {} (size {}): {}", i + 1, c.len(), list(c[0].map())).unwrap();
    }
    writeln!(out, "functor classes: {}", functor_classes.len()).unwrap();
    Ok(out)
}

pub fn aut(ctx: &Context, group: &str) -> Out {
    no_dot(ctx, "aut")?;
    let g = resolve_group(group)?;
    let a = automorphisms(&g, ctx.limit)?;
    let inner = a.inner.iter().filter(|&&b| b).count();
    let via_functors = outer_count_via_functors(&g, ctx.limit)?;
    if ctx.emit == Emit::Json {
        return json_out(json!({
            "aut": a.aut.len(),
            "inner": inner,
            "out": a.outer_class_count,
            "out_via_functors": via_functors,
        }));
    }
    Ok(format!(
        "aut: {}\ninner: {}\nout: {}\nout via functor classes: {}\n",
        a.aut.len(),
        inner,
        a.outer_class_count,
        via_functors
    ))
}

fn flavor_name(flavor: Flavor) -> &'static str {
    match flavor {
        Flavor::Tautological => "tautological",
        Flavor::Discrete => "discrete",
        Flavor::Simplicial => "simplicial",
    }
}

pub fn categorify(ctx: &Context, flavor: Flavor, group: &str, identities: bool) -> Out {
    let g = resolve_group(group)?;
    let c = build(&g, flavor);
    let name = format!("{}_{}", flavor_name(flavor), label(&g));
    let monoidal = c.monoidal.as_ref().map(check_monoidal);
    if monoidal == Some(false) {
        return Err(CliError::Validation("monoidal structure fails verification".into()));
    }
    match ctx.emit {
        Emit::Dot => Ok(c.category.to_dot(&name, identities)),
        Emit::Json => {
            let mut v = category_json(&c.category);
            v["flavor"] = json!(flavor_name(flavor));
            v["groupoid"] = json!(is_groupoid(&c.category));
            v["monoidal"] = json!(monoidal.is_some());
            json_out(v)
        }
        Emit::Text => Ok(format!(
            "flavor: {}\nobjects: {}\nmorphisms: {}\ngroupoid: {}\nmonoidal: {}\n",
            flavor_name(flavor),
            c.category.object_count(),
            c.category.morphism_count(),
            yes_no(is_groupoid(&c.category)),
            if monoidal.is_some() { "verified" } else { "none" },
        )),
    }
}

pub fn covering(ctx: &Context, group: &str) -> Out {
    no_dot(ctx, "covering")?;
    let g = resolve_group(group)?;
    let r = covering_transformation(&g);
    let functor = check_functor(&r);
    let bi = check_biequivariance(&g);
    if !functor || !bi {
        return Err(CliError::Validation("covering functor fails verification".into()));
    }
    if ctx.emit == Emit::Json {
        return json_out(json!({
            "functor": functor,
            "biequivariant": bi,
            "object_map": r.obj_map,
            "morphism_map": r.mor_map,
        }));
    }
    Ok(format!(
        "functor: verified\nbiequivariant: yes\nmorphism map: {}\n",
        list(&r.mor_map)
    ))
}

pub fn bundle(ctx: &Context, ext: &Path, identities: bool) -> Out {
    let e = load_extension(ext)?;
    let b = bundle_categorify(&e);
    if !check_monoidal(&b.monoidal) {
        return Err(CliError::Validation("bundle monoidal structure fails verification".into()));
    }
    let base = build(e.g(), Flavor::Discrete).category;
    let proj = b.fiber_functor(base);
    if !check_functor(&proj) {
        return Err(CliError::Validation("fiber projection is not a functor".into()));
    }
    match ctx.emit {
        Emit::Dot => Ok(b.category.to_dot("bundle", identities)),
        Emit::Json => {
            let mut v = category_json(&b.category);
            v["fiber_map"] = json!(b.fiber_map);
            json_out(v)
        }
        Emit::Text => Ok(format!(
            "objects: {}\nmorphisms: {}\ngroupoid: {}\nmonoidal: verified\nprojection to discrete base: functor\n",
            b.category.object_count(),
            b.category.morphism_count(),
            yes_no(is_groupoid(&b.category)),
        )),
    }
}

fn rows_text(out: &mut String, rows: &[Vec<usize>]) {
    for r in rows {
        writeln!(out, "  {}", list(r)).unwrap();
    }
}

pub fn factor_set(ctx: &Context, ext: &Path, section: Option<Vec<usize>>) -> Out {
    no_dot(ctx, "factor-set")?;
    let e = load_extension(ext)?;
    let sections = match section {
        Some(s) => vec![Section::new(&e, s)?],
        None => {
            ctx.limit
                .check(e.section_count())
                .map_err(|x| CliError::SizeLimit(x.to_string()))?;
            e.sections()
        }
    };
    let b = bundle_categorify(&e);
    let mut out = String::new();
    let mut entries = Vec::new();
    for s in &sections {
        let (f, l) = section_data(&e, s)?;
        let cocycle = check_twisted_cocycle(&f, &l);
        let compatible = check_compatibility(&f, &l);
        let monoidal = section_monoidal_functor(&e, &b, s).is_monoidal(e.g(), &b);
        if ctx.emit == Emit::Json {
            let mut v = pair_to_json(&l, &f);
            v["section"] = json!(s.values());
            v["cocycle"] = json!(cocycle);
            v["compatible"] = json!(compatible);
            v["monoidal_functor"] = json!(monoidal);
            entries.push(v);
        } else {
            writeln!(out, "section: {}", list(s.values())).unwrap();
            writeln!(out, "f:").unwrap();
            rows_text(&mut out, &f.rows());
            writeln!(out, "L:").unwrap();
            rows_text(&mut out, l.maps());
            writeln!(out, "cocycle: {}", if cocycle { "holds" } else { "fails" }).unwrap();
            writeln!(out, "compatibility: {}", if compatible { "holds" } else { "fails" }).unwrap();
            writeln!(out, "monoidal functor: {}", if monoidal { "verified" } else { "fails" }).unwrap();
        }
    }
    if ctx.emit == Emit::Json {
        return json_out(Value::Array(entries));
    }
    Ok(out)
}

fn first_cocycle_failure(f: &FactorSet, l: &QuasiAction) -> Option<(usize, usize, usize)> {
    let (g, n) = (f.g(), f.n());
    for a in g.elements() {
        for b in g.elements() {
            for c in g.elements() {
                let lhs = n.mul(f.at(a, b), f.at(g.mul(a, b), c));
                let rhs = n.mul(l.apply(a, f.at(b, c)), f.at(a, g.mul(b, c)));
                if lhs != rhs {
                    return Some((a, b, c));
                }
            }
        }
    }
    None
}

pub fn check_cocycle(ctx: &Context, pair: &Path) -> Out {
    no_dot(ctx, "check-cocycle")?;
    let (l, f) = load_pair(pair)?;
    let cocycle = check_twisted_cocycle(&f, &l);
    let compatible = check_compatibility(&f, &l);
    let failure = first_cocycle_failure(&f, &l);
    let report = if ctx.emit == Emit::Json {
        serde_json::to_string_pretty(&json!({
            "cocycle": cocycle,
            "compatible": compatible,
            "first_failure": failure.map(|(a, b, c)| [a, b, c]),
        }))
        .expect("json values serialize")
            + "\n"
    } else {
        let mut out = String::new();
        match failure {
            None => writeln!(out, "cocycle law: holds").unwrap(),
            Some((a, b, c)) => writeln!(out, "cocycle law: fails at ({a}, {b}, {c})").unwrap(),
        }
        writeln!(out, "compatibility: {}", if compatible { "holds" } else { "fails" }).unwrap();
        out
    };
    if cocycle && compatible {
        Ok(report)
    } else {
        print!("{report}");
        Err(CliError::Validation("pair is not a valid factor set".into()))
    }
}

pub fn weak_equiv(ctx: &Context, first: &Path, second: &Path) -> Out {
    no_dot(ctx, "weak-equiv")?;
    let (l, f) = load_pair(first)?;
    let (l2, f2) = load_pair(second)?;
    let gamma = weak_equivalent(&f, &l, &f2, &l2, ctx.limit)?;
    if ctx.emit == Emit::Json {
        return json_out(json!({ "equivalent": gamma.is_some(), "gamma": gamma }));
    }
    Ok(match gamma {
        Some(g) => format!("weakly equivalent: yes\ngamma: {}\n", list(&g)),
        None => "weakly equivalent: no\n".to_string(),
    })
}

pub fn crossed_product(ctx: &Context, pair: &Path) -> Out {
    no_dot(ctx, "crossed-product")?;
    let (l, f) = load_pair(pair)?;
    let e = schreier(&f, &l)?;
    let mid = e.e();
    if ctx.emit == Emit::Json {
        return json_out(json!({
            "label": label(mid),
            "group": GroupFile::from(&**mid),
            "j": e.j().map(),
            "p": e.p().map(),
        }));
    }
    let mut out = format!("order: {}\nmiddle group: {}\ntable:\n", mid.order(), label(mid));
    rows_text(&mut out, &mid.rows());
    writeln!(out, "j: {}", list(e.j().map())).unwrap();
    writeln!(out, "p: {}", list(e.p().map())).unwrap();
    Ok(out)
}

pub fn classify_ext(ctx: &Context, base: &str, fiber: &str) -> Out {
    no_dot(ctx, "classify-ext")?;
    let (g, n) = (resolve_group(base)?, resolve_group(fiber)?);
    let classes = classify_extensions(&g, &n, ctx.limit)?;
    if ctx.emit == Emit::Json {
        let v: Vec<Value> = classes
            .iter()
            .map(|c| {
                let mut v = pair_to_json(&c.action, &c.factor_set);
                v["middle_group"] = json!(c.middle_group);
                v["size"] = json!(c.size);
                v
            })
            .collect();
        return json_out(json!({ "class_count": classes.len(), "classes": v }));
    }
    let mut out = format!("classes: {}\n", classes.len());
    for (i, c) in classes.iter().enumerate() {
        writeln!(out, "class {}: {} (pairs: {})", i + 1, c.middle_group, c.size).unwrap();
        writeln!(out, "  L:").unwrap();
        for r in c.action.maps() {
            writeln!(out, "    {}", list(r)).unwrap();
        }
        writeln!(out, "  f:").unwrap();
        for r in c.factor_set.rows() {
            writeln!(out, "    {}", list(&r)).unwrap();
        }
    }
    Ok(out)
}

fn cohomology_json(h: &CohomologyGroup) -> Value {
    json!({
        "degree": h.degree,
        "render": h.render(),
        "invariant_factors": h.invariant_factors.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
        "order": h.order().to_string(),
        "cocycles": h.cocycle_count.to_string(),
        "coboundaries": h.coboundary_count.to_string(),
    })
}

pub fn cohomology(ctx: &Context, n: usize, group: &str, coeff: &str, brute: bool, max_degree: usize) -> Out {
    no_dot(ctx, "cohomology")?;
    if n > max_degree {
        return Err(CliError::Usage(format!("degree {n} exceeds --max-degree {max_degree}")));
    }
    let g = resolve_group(group)?;
    let module = Arc::new(load_coefficients(coeff, &g)?);
    let h = cohomology_group(n, &module);
    if brute {
        let b = cohomology_brute_force(n, &module, ctx.limit)?;
        if b.invariant_factors != h.invariant_factors {
            return Err(CliError::Validation(format!(
                "brute force gives {} but linear algebra gives {}",
                b.render(),
                h.render()
            )));
        }
    }
    if ctx.emit == Emit::Json {
        let mut v = cohomology_json(&h);
        v["brute_force_checked"] = json!(brute);
        return json_out(v);
    }
    let mut out = format!("H^{n} = {}\n", h.render());
    writeln!(out, "cocycles: {}", h.cocycle_count).unwrap();
    writeln!(out, "coboundaries: {}", h.coboundary_count).unwrap();
    if brute {
        writeln!(out, "brute force: agrees").unwrap();
    }
    Ok(out)
}

pub fn associators(ctx: &Context, group: &str, coeff: &str) -> Out {
    no_dot(ctx, "associators")?;
    let g = resolve_group(group)?;
    let module = Arc::new(load_coefficients(coeff, &g)?);
    let report = find_associators(&module, ctx.limit)?;
    let units = module.size();
    let (cat, _) = linearized_discrete(&g, units);
    let h3 = cohomology_group(3, &module);
    let values: Vec<Vec<usize>> = report.associators.iter().map(|a| a.free_values()).collect();
    if ctx.emit == Emit::Json {
        return json_out(json!({
            "objects": cat.object_count(),
            "morphisms": cat.morphism_count(),
            "candidates": report.candidates.to_string(),
            "associators": values,
            "associator_count": report.associators.len(),
            "class_count": report.class_count,
            "h3": h3.render(),
        }));
    }
    let mut out = String::new();
    writeln!(out, "category: {} objects, {} morphisms", cat.object_count(), cat.morphism_count()).unwrap();
    writeln!(out, "candidates: {}", report.candidates).unwrap();
    writeln!(out, "associators: {}", report.associators.len()).unwrap();
    writeln!(out, "classes: {}", report.class_count).unwrap();
    writeln!(out, "H^3 = {}", h3.render()).unwrap();
    Ok(out)
}

fn category_for(flavor: Flavor, group: &str) -> Result<(CategoryRef, Arc<FiniteGroup>), CliError> {
    let g = resolve_group(group)?;
    Ok((build(&g, flavor).category, g))
}

pub fn nerve(ctx: &Context, flavor: Flavor, group: &str, k: usize) -> Out {
    no_dot(ctx, "nerve")?;
    let (c, _) = category_for(flavor, group)?;
    let nv = build_nerve(&c, k, ctx.limit)?;
    nv.set.verify().map_err(|v| CliError::Validation(v.to_string()))?;
    if ctx.emit == Emit::Json {
        return json_out(json!(nv.set));
    }
    let mut out = format!("truncation: {k}\nsimplicial identities: verified\n");
    for n in 0..=k {
        writeln!(out, "N_{n}: {} simplices, {} nondegenerate", nv.set.counts[n], nv.set.nondegenerate_count(n)).unwrap();
    }
    Ok(out)
}

pub fn homology(ctx: &Context, flavor: Flavor, group: &str, k: usize, degree: Option<usize>) -> Out {
    no_dot(ctx, "homology")?;
    let (c, _) = category_for(flavor, group)?;
    let nv = build_nerve(&c, k, ctx.limit)?;
    let cx = normalized_chains(&nv.set);
    let degrees: Vec<usize> = match degree {
        Some(d) => vec![d],
        None => (0..k).collect(),
    };
    let groups = degrees
        .iter()
        .map(|&n| nerve_homology(&cx, n).map(|h| (n, h)))
        .collect::<Result<Vec<_>, _>>()?;
    if ctx.emit == Emit::Json {
        let v: Vec<Value> = groups
            .iter()
            .map(|(n, h)| {
                json!({
                    "degree": n,
                    "free_rank": h.free_rank,
                    "torsion": h.torsion.iter().map(|t| t.to_string()).collect::<Vec<_>>(),
                    "render": h.render(),
                })
            })
            .collect();
        return json_out(Value::Array(v));
    }
    let mut out = String::new();
    for (n, h) in &groups {
        writeln!(out, "H_{n} = {}", h.render()).unwrap();
    }
    Ok(out)
}

pub fn bar(ctx: &Context, group: &str, k: usize) -> Out {
    no_dot(ctx, "bar")?;
    let g = resolve_group(group)?;
    let b = bar_spaces(&g, k, ctx.limit)?;
    b.projection
        .verify(&b.eg.set, &b.bg.set)
        .map_err(|v| CliError::Validation(v.to_string()))?;
    b.verify_quotient(&g).map_err(|v| CliError::Validation(v.to_string()))?;
    let eg = normalized_chains(&b.eg.set);
    let bg = normalized_chains(&b.bg.set);
    let mut eg_h = Vec::new();
    let mut bg_h = Vec::new();
    for n in 0..k {
        eg_h.push(reduced_homology(&eg, n)?.render());
        bg_h.push(nerve_homology(&bg, n)?.render());
    }
    if ctx.emit == Emit::Json {
        return json_out(json!({
            "eg_counts": b.eg.set.counts,
            "bg_counts": b.bg.set.counts,
            "projection_surjective": b.projection.is_surjective(&b.bg.set),
            "quotient": true,
            "eg_reduced_homology": eg_h,
            "bg_homology": bg_h,
        }));
    }
    let mut out = String::new();
    writeln!(out, "EG simplices: {}", list(&b.eg.set.counts)).unwrap();
    writeln!(out, "BG simplices: {}", list(&b.bg.set.counts)).unwrap();
    writeln!(out, "projection surjective: {}", yes_no(b.projection.is_surjective(&b.bg.set))).unwrap();
    writeln!(out, "EG/G = BG: verified").unwrap();
    for (n, h) in eg_h.iter().enumerate() {
        writeln!(out, "reduced H_{n}(EG) = {h}").unwrap();
    }
    for (n, h) in bg_h.iter().enumerate() {
        writeln!(out, "H_{n}(BG) = {h}").unwrap();
    }
    Ok(out)
}

pub fn open_cat(ctx: &Context, space: &Path, map: Option<(&Path, &[usize])>, identities: bool) -> Out {
    let y = load_space(space)?;
    let y_cat = open_set_category(&y);
    if !check_monoidal(&y_cat.monoidal) {
        return Err(CliError::Validation("open-set monoidal structure fails verification".into()));
    }
    let pre = match map {
        Some((from, f)) => {
            let x = load_space(from)?;
            let x_cat = open_set_category(&x);
            let functor = preimage_functor(f, &x_cat, &y_cat)?;
            let images: Vec<String> = functor.obj_map.iter().map(|&u| render_set(x.opens()[u])).collect();
            Some(images)
        }
        None => None,
    };
    let opens: Vec<String> = y.opens().iter().map(|&u| render_set(u)).collect();
    match ctx.emit {
        Emit::Dot => {
            let labelled = (*y_cat.category).clone().with_labels(
                (0..y_cat.category.morphism_count())
                    .map(|f| {
                        let m = y_cat.category.morphism(f);
                        format!("{}⊆{}", opens[m.src], opens[m.tgt])
                    })
                    .collect(),
            );
            Ok(labelled.to_dot("opens", identities))
        }
        Emit::Json => {
            let sets: Vec<Vec<usize>> = y.opens().iter().map(|&u| points_of(u)).collect();
            json_out(json!({
                "opens": sets,
                "objects": y_cat.category.object_count(),
                "morphisms": y_cat.category.morphism_count(),
                "thin": y_cat.category.is_thin(),
                "preimages": pre,
            }))
        }
        Emit::Text => {
            let mut out = String::new();
            writeln!(out, "opens: {}", opens.join(" ")).unwrap();
            writeln!(out, "objects: {}", y_cat.category.object_count()).unwrap();
            writeln!(out, "morphisms: {}", y_cat.category.morphism_count()).unwrap();
            writeln!(out, "thin: {}", yes_no(y_cat.category.is_thin())).unwrap();
            writeln!(out, "monoidal (intersection): verified").unwrap();
            if let Some(images) = pre {
                writeln!(out, "preimage functor: verified").unwrap();
                for (u, img) in opens.iter().zip(&images) {
                    writeln!(out, "  {u} ↦ {img}").unwrap();
                }
            }
            Ok(out)
        }
    }
}

pub fn refine(ctx: &Context, space: &Path, fine: &Path, coarse: &Path) -> Out {
    no_dot(ctx, "refine")?;
    let x = load_space(space)?;
    let v = load_cover(fine, &x)?;
    let u = load_cover(coarse, &x)?;
    let opens = open_set_category(&x);
    let r = refinement(&v, &u, &opens);
    if let Some(r) = &r {
        let eta = r.transformation(&v, &u, &opens);
        if eta.verify().is_err() {
            return Err(CliError::Validation("refinement transformation is not natural".into()));
        }
    }
    if ctx.emit == Emit::Json {
        return json_out(json!({
            "refines": r.is_some(),
            "phi": r.as_ref().map(|r| r.phi.clone()),
        }));
    }
    Ok(match r {
        Some(r) => {
            let mut out = format!("refinement: found\nphi: {}\n", list(&r.phi));
            for (i, &j) in r.phi.iter().enumerate() {
                writeln!(
                    out,
                    "  {} ⊆ {}",
                    render_set(x.opens()[v.sets[i]]),
                    render_set(x.opens()[u.sets[j]])
                )
                .unwrap();
            }
            writeln!(out, "natural transformation: verified").unwrap();
            out
        }
        None => "refinement: none\n".to_string(),
    })
}
