//! Finite groups stored as multiplication tables over dense indices.
//!
//! Element `0` is always the identity. Homomorphisms are plain index maps
//! between two shared groups; enumeration is exhaustive and returns maps in
//! lexicographic order of their image arrays.

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use rayon::prelude::*;
use thiserror::Error;

use crate::SearchLimit;

pub type GroupRef = Arc<FiniteGroup>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("group table is empty")]
    Empty,
    #[error("group table is not square: row {row} has length {len}, expected {expected}")]
    NotSquare { row: usize, len: usize, expected: usize },
    #[error("entry {value} at ({row}, {col}) is out of range for order {order}")]
    EntryOutOfRange { row: usize, col: usize, value: usize, order: usize },
    #[error("index 0 is not a two-sided identity: failed at element {0}")]
    NoIdentityAtZero(usize),
    #[error("table is not a Latin square: {kind} {index} repeats element {value}")]
    NotLatinSquare { kind: &'static str, index: usize, value: usize },
    #[error("element {0} has no inverse")]
    MissingInverse(usize),
    #[error("multiplication is not associative at ({0}, {1}, {2})")]
    NotAssociative(usize, usize, usize),
    #[error("{got} element names given for a group of order {order}")]
    NameCount { got: usize, order: usize },
    #[error("map has length {got}, expected {expected}")]
    MapLength { got: usize, expected: usize },
    #[error("map value {value} at {index} is out of range for target of order {order}")]
    MapOutOfRange { index: usize, value: usize, order: usize },
    #[error("map is not a homomorphism")]
    NotAHomomorphism,
    #[error("candidate space of {candidates} exceeds the limit of {limit}")]
    SizeLimit { candidates: u128, limit: u128 },
}

/// A finite group given by its Cayley table.
#[derive(Clone)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<usize>,
    inverses: Vec<usize>,
    names: Option<Vec<String>>,
}

impl PartialEq for FiniteGroup {
    fn eq(&self, other: &Self) -> bool {
        self.table == other.table
    }
}

impl Eq for FiniteGroup {}

impl Hash for FiniteGroup {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.table.hash(state);
    }
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("order", &self.order)
            .field("table", &self.rows())
            .finish()
    }
}

impl FiniteGroup {
    /// Validates a square table. Checks run in order: shape, identity at 0,
    /// Latin square, inverses, associativity; the first failure is returned.
    pub fn from_table(
        rows: &[Vec<usize>],
        names: Option<Vec<String>>,
    ) -> Result<Self, GroupError> {
        let order = rows.len();
        if order == 0 {
            return Err(GroupError::Empty);
        }
        let mut table = Vec::with_capacity(order * order);
        for (r, row) in rows.iter().enumerate() {
            if row.len() != order {
                return Err(GroupError::NotSquare { row: r, len: row.len(), expected: order });
            }
            for (c, &v) in row.iter().enumerate() {
                if v >= order {
                    return Err(GroupError::EntryOutOfRange { row: r, col: c, value: v, order });
                }
            }
            table.extend_from_slice(row);
        }
        if let Some(names) = &names {
            if names.len() != order {
                return Err(GroupError::NameCount { got: names.len(), order });
            }
        }
        let at = |i: usize, j: usize| table[i * order + j];
        for i in 0..order {
            if at(0, i) != i || at(i, 0) != i {
                return Err(GroupError::NoIdentityAtZero(i));
            }
        }
        let mut seen = vec![usize::MAX; order];
        for i in 0..order {
            for j in 0..order {
                let v = at(i, j);
                if seen[v] == i {
                    return Err(GroupError::NotLatinSquare { kind: "row", index: i, value: v });
                }
                seen[v] = i;
            }
        }
        seen.fill(usize::MAX);
        for j in 0..order {
            for i in 0..order {
                let v = at(i, j);
                if seen[v] == j {
                    return Err(GroupError::NotLatinSquare { kind: "column", index: j, value: v });
                }
                seen[v] = j;
            }
        }
        let mut inverses = vec![0; order];
        for (i, inv) in inverses.iter_mut().enumerate() {
            *inv = (0..order)
                .find(|&j| at(i, j) == 0)
                .ok_or(GroupError::MissingInverse(i))?;
        }
        for i in 0..order {
            for j in 0..order {
                let ij = at(i, j);
                for k in 0..order {
                    if at(ij, k) != at(i, at(j, k)) {
                        return Err(GroupError::NotAssociative(i, j, k));
                    }
                }
            }
        }
        Ok(FiniteGroup { order, table, inverses, names })
    }

    /// Builds a group from an associative closed operation on `0..order`
    /// already known to satisfy the axioms.
    pub(crate) fn from_trusted(order: usize, table: Vec<usize>) -> Self {
        let inverses = (0..order)
            .map(|i| (0..order).find(|&j| table[i * order + j] == 0).expect("group element without inverse"))
            .collect();
        FiniteGroup { order, table, inverses, names: None }
    }

    pub fn trivial() -> Self {
        Self::cyclic(1)
    }

    /// `Z/n` with element `k` the residue `k`.
    pub fn cyclic(n: usize) -> Self {
        assert!(n > 0, "cyclic group of order 0");
        let table = (0..n * n).map(|idx| (idx / n + idx % n) % n).collect();
        Self::from_trusted(n, table)
    }

    /// Direct product with element `(a, b)` at index `a * |other| + b`.
    pub fn direct_product(&self, other: &FiniteGroup) -> Self {
        let (n, m) = (self.order, other.order);
        let size = n * m;
        let mut table = vec![0; size * size];
        for x in 0..size {
            for y in 0..size {
                let a = self.mul(x / m, y / m);
                let b = other.mul(x % m, y % m);
                table[x * size + y] = a * m + b;
            }
        }
        Self::from_trusted(size, table)
    }

    /// Closure of a set of permutations of `0..degree` under composition
    /// `(p * q)(i) = p(q(i))`. Elements are indexed in BFS order from the
    /// identity; names are the permutations in one-line notation.
    pub fn from_permutations(degree: usize, generators: &[Vec<usize>]) -> Self {
        let identity: Vec<usize> = (0..degree).collect();
        let compose = |p: &Vec<usize>, q: &Vec<usize>| q.iter().map(|&i| p[i]).collect::<Vec<_>>();
        Self::closure(identity, generators, compose, |p| {
            p.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("")
        })
    }

    /// Generic closure of `generators` under `op`, with `identity` at index 0.
    pub fn closure<T, F, N>(identity: T, generators: &[T], op: F, name: N) -> Self
    where
        T: Clone + Eq + Hash,
        F: Fn(&T, &T) -> T,
        N: Fn(&T) -> String,
    {
        let mut elements = vec![identity.clone()];
        let mut index = std::collections::HashMap::new();
        index.insert(identity, 0usize);
        let mut cursor = 0;
        while cursor < elements.len() {
            let x = elements[cursor].clone();
            for g in generators {
                let y = op(&x, g);
                if !index.contains_key(&y) {
                    index.insert(y.clone(), elements.len());
                    elements.push(y);
                }
            }
            cursor += 1;
        }
        let order = elements.len();
        let mut table = vec![0; order * order];
        for (i, a) in elements.iter().enumerate() {
            for (j, b) in elements.iter().enumerate() {
                table[i * order + j] = index[&op(a, b)];
            }
        }
        let mut group = Self::from_trusted(order, table);
        group.names = Some(elements.iter().map(name).collect());
        group
    }

    /// The symmetric group on `degree` points, elements in lexicographic
    /// order of their one-line notation (identity first).
    pub fn symmetric(degree: usize) -> Self {
        let mut perms: Vec<Vec<usize>> = vec![(0..degree).collect()];
        loop {
            let mut next = perms.last().unwrap().clone();
            let Some(i) = (0..degree.saturating_sub(1)).rev().find(|&i| next[i] < next[i + 1]) else {
                break;
            };
            let j = (i + 1..degree).rev().find(|&j| next[j] > next[i]).unwrap();
            next.swap(i, j);
            next[i + 1..].reverse();
            perms.push(next);
        }
        let order = perms.len();
        let lookup: std::collections::HashMap<Vec<usize>, usize> =
            perms.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let mut table = vec![0; order * order];
        for (i, p) in perms.iter().enumerate() {
            for (j, q) in perms.iter().enumerate() {
                let pq: Vec<usize> = q.iter().map(|&k| p[k]).collect();
                table[i * order + j] = lookup[&pq];
            }
        }
        let mut group = Self::from_trusted(order, table);
        group.names = Some(
            perms
                .iter()
                .map(|p| p.iter().map(|v| v.to_string()).collect::<String>())
                .collect(),
        );
        group
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a]
    }

    /// `a b a^{-1}`
    #[inline]
    pub fn conj(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(a, b), self.inv(a))
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.order).map(|r| r.to_vec()).collect()
    }

    pub fn names(&self) -> Option<&[String]> {
        self.names.as_deref()
    }

    pub fn with_names(mut self, names: Vec<String>) -> Result<Self, GroupError> {
        if names.len() != self.order {
            return Err(GroupError::NameCount { got: names.len(), order: self.order });
        }
        self.names = Some(names);
        Ok(self)
    }

    pub fn name(&self, a: usize) -> String {
        match &self.names {
            Some(names) => names[a].clone(),
            None => a.to_string(),
        }
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        self.elements()
            .all(|a| self.elements().all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn center(&self) -> Vec<usize> {
        self.elements()
            .filter(|&a| self.elements().all(|b| self.mul(a, b) == self.mul(b, a)))
            .collect()
    }

    /// Subgroup generated by `gens`, sorted.
    pub fn generated(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.order];
        seen[0] = true;
        let mut stack = vec![0];
        let mut out = vec![0];
        while let Some(x) = stack.pop() {
            for &g in gens {
                let y = self.mul(x, g);
                if !seen[y] {
                    seen[y] = true;
                    out.push(y);
                    stack.push(y);
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Greedy generating set: repeatedly add the least element outside the
    /// subgroup generated so far.
    pub fn generating_set(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut span = vec![0];
        while span.len() < self.order {
            let next = self.elements().find(|x| span.binary_search(x).is_err()).unwrap();
            gens.push(next);
            span = self.generated(&gens);
        }
        gens
    }

    /// Size of the commutator quotient `G / [G, G]`.
    pub fn abelianization_order(&self) -> usize {
        let comms: Vec<usize> = self
            .elements()
            .flat_map(|a| self.elements().map(move |b| (a, b)))
            .map(|(a, b)| self.mul(self.mul(a, b), self.mul(self.inv(a), self.inv(b))))
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        self.order / self.generated(&comms).len()
    }
}

/// A map between two groups. It need not be a homomorphism; see
/// [`GroupHom::is_homomorphism`].
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GroupHom {
    source: GroupRef,
    target: GroupRef,
    map: Vec<usize>,
}

impl fmt::Debug for GroupHom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GroupHom{:?}", self.map)
    }
}

impl GroupHom {
    /// Shape-checked map; the homomorphism law is not enforced here.
    pub fn new(source: GroupRef, target: GroupRef, map: Vec<usize>) -> Result<Self, GroupError> {
        if map.len() != source.order() {
            return Err(GroupError::MapLength { got: map.len(), expected: source.order() });
        }
        if let Some((index, &value)) = map.iter().enumerate().find(|(_, &v)| v >= target.order()) {
            return Err(GroupError::MapOutOfRange { index, value, order: target.order() });
        }
        Ok(GroupHom { source, target, map })
    }

    /// Shape-checked and required to be a homomorphism.
    pub fn homomorphism(
        source: GroupRef,
        target: GroupRef,
        map: Vec<usize>,
    ) -> Result<Self, GroupError> {
        let h = Self::new(source, target, map)?;
        if h.is_homomorphism() {
            Ok(h)
        } else {
            Err(GroupError::NotAHomomorphism)
        }
    }

    pub fn identity(group: GroupRef) -> Self {
        let map = group.elements().collect();
        GroupHom { source: group.clone(), target: group, map }
    }

    pub fn trivial(source: GroupRef, target: GroupRef) -> Self {
        let map = vec![0; source.order()];
        GroupHom { source, target, map }
    }

    pub(crate) fn from_parts(source: GroupRef, target: GroupRef, map: Vec<usize>) -> Self {
        debug_assert_eq!(map.len(), source.order());
        GroupHom { source, target, map }
    }

    pub fn source(&self) -> &GroupRef {
        &self.source
    }

    pub fn target(&self) -> &GroupRef {
        &self.target
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    pub fn is_homomorphism(&self) -> bool {
        check_hom(self)
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = vec![false; self.target.order()];
        self.map.iter().all(|&v| !std::mem::replace(&mut seen[v], true))
    }

    pub fn is_surjective(&self) -> bool {
        let mut seen = vec![false; self.target.order()];
        for &v in &self.map {
            seen[v] = true;
        }
        seen.into_iter().all(|b| b)
    }

    pub fn is_bijective(&self) -> bool {
        self.source.order() == self.target.order() && self.is_injective()
    }

    /// `other ∘ self`
    pub fn then(&self, other: &GroupHom) -> Option<GroupHom> {
        if *self.target != *other.source {
            return None;
        }
        let map = self.map.iter().map(|&x| other.map[x]).collect();
        Some(GroupHom { source: self.source.clone(), target: other.target.clone(), map })
    }

    /// `x ↦ h f(x) h^{-1}`
    pub fn conjugate_by(&self, h: usize) -> GroupHom {
        let t = &self.target;
        let map = self.map.iter().map(|&v| t.conj(h, v)).collect();
        GroupHom { source: self.source.clone(), target: self.target.clone(), map }
    }

    pub fn kernel(&self) -> Vec<usize> {
        self.source.elements().filter(|&x| self.map[x] == 0).collect()
    }

    pub fn image(&self) -> Vec<usize> {
        self.map.iter().copied().collect::<BTreeSet<_>>().into_iter().collect()
    }
}

/// True iff `f(0) = 0` and `f(xy) = f(x) f(y)` for all pairs.
pub fn check_hom(f: &GroupHom) -> bool {
    let (g, h) = (&f.source, &f.target);
    f.map[0] == 0
        && g.elements().all(|x| {
            g.elements()
                .all(|y| f.map[g.mul(x, y)] == h.mul(f.map[x], f.map[y]))
        })
}

fn candidate_count(base: usize, exp: usize) -> u128 {
    (base as u128).checked_pow(exp as u32).unwrap_or(u128::MAX)
}

/// All homomorphisms `G → H`, in lexicographic order of their map arrays.
///
/// The exhaustive search assigns images element by element and rejects a
/// partial map as soon as some product of assigned elements disagrees. When
/// `|H|^|G|` exceeds the limit, the search is restricted to images of a
/// generating set; if that is still too large, `SizeLimit` is returned.
pub fn enumerate_homs(
    g: &GroupRef,
    h: &GroupRef,
    limit: SearchLimit,
) -> Result<Vec<GroupHom>, GroupError> {
    let full = candidate_count(h.order(), g.order());
    let maps = if full <= limit.get() {
        backtrack_homs(g, h)
    } else {
        let gens = g.generating_set();
        let reduced = candidate_count(h.order(), gens.len());
        if reduced > limit.get() {
            return Err(GroupError::SizeLimit { candidates: full, limit: limit.get() });
        }
        generator_homs(g, h, &gens)
    };
    Ok(maps
        .into_iter()
        .map(|map| GroupHom::from_parts(g.clone(), h.clone(), map))
        .collect())
}

fn backtrack_homs(g: &FiniteGroup, h: &FiniteGroup) -> Vec<Vec<usize>> {
    let n = g.order();
    if n == 1 {
        return vec![vec![0]];
    }
    // constraints[x]: pairs (a, b) with max(a, b, ab) == x, checked once x is assigned
    let mut constraints: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    for a in 0..n {
        for b in 0..n {
            let m = a.max(b).max(g.mul(a, b));
            constraints[m].push((a, b));
        }
    }
    fn extend(
        x: usize,
        map: &mut Vec<usize>,
        g: &FiniteGroup,
        h: &FiniteGroup,
        constraints: &[Vec<(usize, usize)>],
        out: &mut Vec<Vec<usize>>,
    ) {
        if x == g.order() {
            out.push(map.clone());
            return;
        }
        for v in 0..h.order() {
            map[x] = v;
            let ok = constraints[x]
                .iter()
                .all(|&(a, b)| map[g.mul(a, b)] == h.mul(map[a], map[b]));
            if ok {
                extend(x + 1, map, g, h, constraints, out);
            }
        }
    }
    // the first free element is split across workers; concatenation keeps order
    (0..h.order())
        .into_par_iter()
        .map(|v1| {
            let mut map = vec![0; n];
            map[1] = v1;
            let mut out = Vec::new();
            let ok = constraints[0]
                .iter()
                .chain(&constraints[1])
                .all(|&(a, b)| map[g.mul(a, b)] == h.mul(map[a], map[b]));
            if ok {
                extend(2, &mut map, g, h, &constraints, &mut out);
            }
            out
        })
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect()
}

fn generator_homs(g: &FiniteGroup, h: &FiniteGroup, gens: &[usize]) -> Vec<Vec<usize>> {
    let total = candidate_count(h.order(), gens.len()) as usize;
    let mut out: Vec<Vec<usize>> = (0..total)
        .into_par_iter()
        .filter_map(|code| {
            let mut images = Vec::with_capacity(gens.len());
            let mut c = code;
            for _ in gens {
                images.push(c % h.order());
                c /= h.order();
            }
            extend_from_generators(g, h, gens, &images)
        })
        .collect();
    out.sort();
    out
}

/// Extends generator images to a full map along words, returning it only if
/// it is a homomorphism.
pub(crate) fn extend_from_generators(
    g: &FiniteGroup,
    h: &FiniteGroup,
    gens: &[usize],
    images: &[usize],
) -> Option<Vec<usize>> {
    let mut map = vec![usize::MAX; g.order()];
    map[0] = 0;
    let mut stack = vec![0];
    while let Some(x) = stack.pop() {
        for (&s, &t) in gens.iter().zip(images) {
            let y = g.mul(x, s);
            let v = h.mul(map[x], t);
            if map[y] == usize::MAX {
                map[y] = v;
                stack.push(y);
            } else if map[y] != v {
                return None;
            }
        }
    }
    if map.contains(&usize::MAX) {
        return None;
    }
    let ok = g
        .elements()
        .all(|x| g.elements().all(|y| map[g.mul(x, y)] == h.mul(map[x], map[y])));
    ok.then_some(map)
}

/// Partition of `Hom(G, H)` into conjugacy classes under `H`. Each class is
/// sorted; classes are ordered by their least member.
pub fn hom_conjugacy_classes(
    g: &GroupRef,
    h: &GroupRef,
    limit: SearchLimit,
) -> Result<Vec<Vec<GroupHom>>, GroupError> {
    let homs = enumerate_homs(g, h, limit)?;
    Ok(partition_by_conjugation(homs))
}

fn partition_by_conjugation(homs: Vec<GroupHom>) -> Vec<Vec<GroupHom>> {
    let mut assigned: HashSet<Vec<usize>> = HashSet::new();
    let mut classes = Vec::new();
    // homs arrive sorted, so the first unassigned one is its class minimum
    for f in &homs {
        if assigned.contains(&f.map) {
            continue;
        }
        let orbit: BTreeSet<Vec<usize>> =
            f.target.elements().map(|t| f.conjugate_by(t).map).collect();
        let class: Vec<GroupHom> = orbit
            .into_iter()
            .map(|map| GroupHom::from_parts(f.source.clone(), f.target.clone(), map))
            .collect();
        for m in &class {
            assigned.insert(m.map.clone());
        }
        classes.push(class);
    }
    classes
}

#[derive(Debug, Clone)]
pub struct Automorphisms {
    pub aut: Vec<GroupHom>,
    /// `inner[i]` is true iff `aut[i]` is conjugation by some element.
    pub inner: Vec<bool>,
    pub outer_class_count: usize,
}

/// `Aut(G)`, its inner automorphisms, and `|Out(G)|`.
pub fn automorphisms(g: &GroupRef, limit: SearchLimit) -> Result<Automorphisms, GroupError> {
    let aut: Vec<GroupHom> = enumerate_homs(g, g, limit)?
        .into_iter()
        .filter(GroupHom::is_bijective)
        .collect();
    let inner_maps: Vec<Vec<usize>> = g
        .elements()
        .map(|a| g.elements().map(|x| g.conj(a, x)).collect())
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let inner_set: HashSet<&Vec<usize>> = inner_maps.iter().collect();
    let inner = aut.iter().map(|a| inner_set.contains(&a.map)).collect();
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    let mut outer_class_count = 0;
    for a in &aut {
        if seen.contains(&a.map) {
            continue;
        }
        outer_class_count += 1;
        for c in &inner_maps {
            seen.insert(a.map.iter().map(|&v| c[v]).collect());
        }
    }
    Ok(Automorphisms { aut, inner, outer_class_count })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn arc(g: FiniteGroup) -> GroupRef {
        Arc::new(g)
    }

    #[test]
    fn order_two_table_is_z2() {
        let g = FiniteGroup::from_table(&[vec![0, 1], vec![1, 0]], None).unwrap();
        assert_eq!(g, FiniteGroup::cyclic(2));
    }

    #[test]
    fn repeated_row_entry_is_rejected() {
        let err = FiniteGroup::from_table(&[vec![0, 1], vec![1, 1]], None).unwrap_err();
        assert!(matches!(err, GroupError::NotLatinSquare { kind: "row", index: 1, value: 1 }));
    }

    #[test]
    fn identity_must_sit_at_zero() {
        let err = FiniteGroup::from_table(&[vec![1, 0], vec![0, 1]], None).unwrap_err();
        assert_eq!(err, GroupError::NoIdentityAtZero(0));
    }

    #[test]
    fn nonassociative_loop_is_rejected() {
        // the smallest non-associative Moufang-free loop of order 5
        let t = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        assert!(matches!(
            FiniteGroup::from_table(&t, None),
            Err(GroupError::NotAssociative(..))
        ));
    }

    #[test]
    fn shape_errors() {
        assert_eq!(FiniteGroup::from_table(&[], None).unwrap_err(), GroupError::Empty);
        assert!(matches!(
            FiniteGroup::from_table(&[vec![0, 1], vec![1]], None),
            Err(GroupError::NotSquare { row: 1, .. })
        ));
        assert!(matches!(
            FiniteGroup::from_table(&[vec![0, 2], vec![1, 0]], None),
            Err(GroupError::EntryOutOfRange { .. })
        ));
    }

    #[test]
    fn symmetric_group_is_lexicographic() {
        let s3 = FiniteGroup::symmetric(3);
        assert_eq!(s3.order(), 6);
        assert_eq!(s3.names().unwrap()[0], "012");
        assert_eq!(s3.names().unwrap()[5], "210");
        assert!(!s3.is_abelian());
        assert_eq!(s3.abelianization_order(), 2);
    }

    #[test]
    fn check_hom_examples() {
        let z2 = arc(FiniteGroup::cyclic(2));
        let z3 = arc(FiniteGroup::cyclic(3));
        assert!(check_hom(&GroupHom::identity(z3.clone())));
        assert!(check_hom(&GroupHom::trivial(z2.clone(), z3.clone())));
        let bad = GroupHom::new(z2, z3, vec![0, 1]).unwrap();
        assert!(!check_hom(&bad));
    }

    #[test]
    fn hom_counts() {
        let z2 = arc(FiniteGroup::cyclic(2));
        let z3 = arc(FiniteGroup::cyclic(3));
        let s3 = arc(FiniteGroup::symmetric(3));
        let lim = SearchLimit::default();
        assert_eq!(enumerate_homs(&z2, &s3, lim).unwrap().len(), 4);
        assert_eq!(enumerate_homs(&z2, &z3, lim).unwrap().len(), 1);
        assert_eq!(enumerate_homs(&z2, &z2, lim).unwrap().len(), 2);
    }

    #[test]
    fn generator_shortcut_matches_backtracking() {
        let s3 = arc(FiniteGroup::symmetric(3));
        let z6 = arc(FiniteGroup::cyclic(6));
        let full = enumerate_homs(&s3, &z6, SearchLimit::default()).unwrap();
        // 6^6 = 46656 > 100, but generators of S3 give 6^2 = 36 candidates
        let short = enumerate_homs(&s3, &z6, SearchLimit::new(100)).unwrap();
        assert_eq!(full, short);
        assert!(matches!(
            enumerate_homs(&s3, &z6, SearchLimit::new(10)),
            Err(GroupError::SizeLimit { .. })
        ));
    }

    #[test]
    fn conjugacy_class_examples() {
        let lim = SearchLimit::default();
        let z2 = arc(FiniteGroup::cyclic(2));
        let z3 = arc(FiniteGroup::cyclic(3));
        let s3 = arc(FiniteGroup::symmetric(3));
        let classes = hom_conjugacy_classes(&z2, &s3, lim).unwrap();
        assert_eq!(classes.iter().map(Vec::len).collect::<Vec<_>>(), vec![1, 3]);
        assert_eq!(hom_conjugacy_classes(&z3, &z3, lim).unwrap().len(), 3);
        assert_eq!(hom_conjugacy_classes(&z2, &z2, lim).unwrap().len(), 2);
    }

    #[test]
    fn automorphism_examples() {
        let lim = SearchLimit::default();
        let s3 = automorphisms(&arc(FiniteGroup::symmetric(3)), lim).unwrap();
        assert_eq!(s3.aut.len(), 6);
        assert!(s3.inner.iter().all(|&b| b));
        assert_eq!(s3.outer_class_count, 1);
        let z3 = automorphisms(&arc(FiniteGroup::cyclic(3)), lim).unwrap();
        assert_eq!(z3.aut.len(), 2);
        assert_eq!(z3.inner, vec![true, false]);
        assert_eq!(z3.outer_class_count, 2);
        let z2 = automorphisms(&arc(FiniteGroup::cyclic(2)), lim).unwrap();
        assert_eq!((z2.aut.len(), z2.outer_class_count), (1, 1));
    }
}
