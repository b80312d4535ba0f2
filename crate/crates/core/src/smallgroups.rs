//! Catalogue of all groups of order at most 16 and brute-force isomorphism
//! testing against it.

use std::sync::OnceLock;

use crate::group::{extend_from_generators, FiniteGroup};

pub const MAX_CATALOGUE_ORDER: usize = 16;

pub struct CatalogueEntry {
    pub name: &'static str,
    pub group: FiniteGroup,
}

/// `N ⋊ H` where `action[h]` is the automorphism of `N` for `h`. Element
/// `(n, h)` sits at index `h * |N| + n`, so `N` is embedded as `0..|N|`.
pub fn semidirect(n: &FiniteGroup, h: &FiniteGroup, action: &[Vec<usize>]) -> FiniteGroup {
    let (a, b) = (n.order(), h.order());
    let size = a * b;
    let mut table = vec![0; size * size];
    for x in 0..size {
        let (m, g) = (x % a, x / a);
        for y in 0..size {
            let (k, l) = (y % a, y / a);
            table[x * size + y] = h.mul(g, l) * a + n.mul(m, action[g][k]);
        }
    }
    FiniteGroup::from_trusted(size, table)
}

/// `Z/m ⋊ Z/k` with the generator of `Z/k` acting by multiplication by `r`.
pub fn metacyclic(m: usize, k: usize, r: usize) -> FiniteGroup {
    let zm = FiniteGroup::cyclic(m);
    let zk = FiniteGroup::cyclic(k);
    let mut action = Vec::with_capacity(k);
    let mut factor = 1 % m;
    for _ in 0..k {
        action.push((0..m).map(|a| a * factor % m).collect());
        factor = factor * r % m;
    }
    assert_eq!(factor, 1 % m, "r^k must be 1 mod m");
    semidirect(&zm, &zk, &action)
}

/// Dihedral group of order `2n`.
pub fn dihedral(n: usize) -> FiniteGroup {
    metacyclic(n, 2, n - 1)
}

/// Dicyclic group of order `4n`: `<a, x | a^{2n}, x^2 = a^n, x a x^{-1} = a^{-1}>`.
pub fn dicyclic(n: usize) -> FiniteGroup {
    let m = 2 * n;
    let op = |p: &(usize, usize), q: &(usize, usize)| {
        let (k, j) = *p;
        let (l, i) = *q;
        match (j, i) {
            (0, _) => ((k + l) % m, i),
            (_, 0) => ((k + m - l) % m, 1),
            _ => ((k + m - l + n) % m, 0),
        }
    };
    FiniteGroup::closure((0, 0), &[(1, 0), (0, 1)], op, |p| format!("a{}x{}", p.0, p.1))
}

fn z(n: usize) -> FiniteGroup {
    FiniteGroup::cyclic(n)
}

fn product(groups: &[FiniteGroup]) -> FiniteGroup {
    groups[1..]
        .iter()
        .fold(groups[0].clone(), |acc, g| acc.direct_product(g))
}

fn build_catalogue() -> Vec<CatalogueEntry> {
    let k4 = product(&[z(2), z(2)]);
    let z4z2 = product(&[z(4), z(2)]);
    // K4 elements: 0=(0,0) 1=(0,1) 2=(1,0) 3=(1,1)
    let rotate = vec![0, 2, 3, 1];
    let rotate2 = vec![0, 3, 1, 2];
    let a4 = semidirect(&k4, &z(3), &[vec![0, 1, 2, 3], rotate, rotate2]);
    // Z4 x Z2 elements: (a, b) at 2a + b. Automorphisms fixing b.
    let twist = |f: fn(usize, usize) -> (usize, usize)| {
        (0..8).map(|x| {
            let (a, b) = f(x / 2, x % 2);
            2 * a + b
        })
        .collect::<Vec<_>>()
    };
    let id8: Vec<usize> = (0..8).collect();
    // c a c^{-1} = a b, c b c^{-1} = b
    let g16_3 = semidirect(&z4z2, &z(2), &[id8.clone(), twist(|a, b| (a % 4, (b + a) % 2))]);
    // c a c^{-1} = a, c b c^{-1} = a^2 b
    let pauli = semidirect(&z4z2, &z(2), &[id8, twist(|a, b| ((a + 2 * b) % 4, b))]);

    let entries: Vec<(&'static str, FiniteGroup)> = vec![
        ("Z1", z(1)),
        ("Z2", z(2)),
        ("Z3", z(3)),
        ("Z4", z(4)),
        ("Z2xZ2", k4.clone()),
        ("Z5", z(5)),
        ("Z6", z(6)),
        ("S3", FiniteGroup::symmetric(3)),
        ("Z7", z(7)),
        ("Z8", z(8)),
        ("Z4xZ2", z4z2.clone()),
        ("Z2xZ2xZ2", product(&[z(2), z(2), z(2)])),
        ("D4", dihedral(4)),
        ("Q8", dicyclic(2)),
        ("Z9", z(9)),
        ("Z3xZ3", product(&[z(3), z(3)])),
        ("Z10", z(10)),
        ("D5", dihedral(5)),
        ("Z11", z(11)),
        ("Z12", z(12)),
        ("Z6xZ2", product(&[z(6), z(2)])),
        ("D6", dihedral(6)),
        ("A4", a4),
        ("Dic3", dicyclic(3)),
        ("Z13", z(13)),
        ("Z14", z(14)),
        ("D7", dihedral(7)),
        ("Z15", z(15)),
        ("Z16", z(16)),
        ("Z4xZ4", product(&[z(4), z(4)])),
        ("(Z4xZ2):Z2", g16_3),
        ("Z4:Z4", metacyclic(4, 4, 3)),
        ("Z8xZ2", product(&[z(8), z(2)])),
        ("M16", metacyclic(8, 2, 5)),
        ("D8", dihedral(8)),
        ("SD16", metacyclic(8, 2, 3)),
        ("Q16", dicyclic(4)),
        ("Z4xZ2xZ2", product(&[z(4), z(2), z(2)])),
        ("D4xZ2", product(&[dihedral(4), z(2)])),
        ("Q8xZ2", product(&[dicyclic(2), z(2)])),
        ("Pauli", pauli),
        ("Z2xZ2xZ2xZ2", product(&[z(2), z(2), z(2), z(2)])),
    ];
    entries
        .into_iter()
        .map(|(name, group)| CatalogueEntry { name, group })
        .collect()
}

pub fn catalogue() -> &'static [CatalogueEntry] {
    static CATALOGUE: OnceLock<Vec<CatalogueEntry>> = OnceLock::new();
    CATALOGUE.get_or_init(build_catalogue)
}

pub fn by_name(name: &str) -> Option<&'static FiniteGroup> {
    catalogue()
        .iter()
        .find(|e| e.name.eq_ignore_ascii_case(name))
        .map(|e| &e.group)
}

#[derive(Debug, PartialEq, Eq)]
struct Invariants {
    order: usize,
    element_orders: Vec<usize>,
    center: usize,
    abelian: bool,
    squares: usize,
}

fn invariants(g: &FiniteGroup) -> Invariants {
    let mut element_orders: Vec<usize> = g.elements().map(|a| g.element_order(a)).collect();
    element_orders.sort_unstable();
    let mut squares: Vec<usize> = g.elements().map(|a| g.mul(a, a)).collect();
    squares.sort_unstable();
    squares.dedup();
    Invariants {
        order: g.order(),
        element_orders,
        center: g.center().len(),
        abelian: g.is_abelian(),
        squares: squares.len(),
    }
}

/// An isomorphism `a → b` as an index map, found by matching generator
/// images of equal element order.
pub fn find_isomorphism(a: &FiniteGroup, b: &FiniteGroup) -> Option<Vec<usize>> {
    if invariants(a) != invariants(b) {
        return None;
    }
    let gens = a.generating_set();
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .map(|&x| {
            let o = a.element_order(x);
            b.elements().filter(|&y| b.element_order(y) == o).collect()
        })
        .collect();
    let mut images = vec![0; gens.len()];
    search_images(a, b, &gens, &candidates, 0, &mut images)
}

fn search_images(
    a: &FiniteGroup,
    b: &FiniteGroup,
    gens: &[usize],
    candidates: &[Vec<usize>],
    depth: usize,
    images: &mut Vec<usize>,
) -> Option<Vec<usize>> {
    if depth == gens.len() {
        let map = extend_from_generators(a, b, gens, images)?;
        let mut seen = vec![false; b.order()];
        for &v in &map {
            if std::mem::replace(&mut seen[v], true) {
                return None;
            }
        }
        return Some(map);
    }
    for &c in &candidates[depth] {
        images[depth] = c;
        if let Some(map) = search_images(a, b, gens, candidates, depth + 1, images) {
            return Some(map);
        }
    }
    None
}

pub fn is_isomorphic(a: &FiniteGroup, b: &FiniteGroup) -> bool {
    find_isomorphism(a, b).is_some()
}

/// Catalogue name of `g`, or `None` when its order exceeds the catalogue.
pub fn identify(g: &FiniteGroup) -> Option<&'static str> {
    catalogue()
        .iter()
        .filter(|e| e.group.order() == g.order())
        .find(|e| is_isomorphic(&e.group, g))
        .map(|e| e.name)
}

/// Catalogue name, or `order-N` for groups outside the catalogue.
pub fn label(g: &FiniteGroup) -> String {
    identify(g)
        .map(str::to_owned)
        .unwrap_or_else(|| format!("order-{}", g.order()))
}
