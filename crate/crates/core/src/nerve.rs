//! Truncated nerves, normalized chain complexes and their integer homology,
//! and the bar construction `EG → BG`.
//!
//! An `n`-simplex of a nerve (`n ≥ 1`) is a chain `(m_1, …, m_n)` with
//! `tgt(m_i) = src(m_{i+1})`; a 0-simplex is an object. `∂_0` drops `m_1`,
//! `∂_n` drops `m_n`, the inner faces compose neighbours, and `ε_i` inserts
//! an identity at the `i`-th vertex.

use std::collections::HashMap;
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::categorify::{covering_transformation, simplicial, tautological};
use crate::category::{FinCategory, Functor, Violation};
use crate::linalg::{cokernel, rank, AbelianInvariants, ExactInt, Matrix};
use crate::{FiniteGroup, Int, SearchLimit};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NerveError {
    #[error("H_{degree} needs simplices of degree {} but the truncation is {truncation}", degree + 1)]
    TruncationTooShallow { degree: usize, truncation: usize },
    #[error("simplicial set data is malformed: {0}")]
    Malformed(String),
    #[error("functor does not match the categories of the nerves")]
    FunctorMismatch,
    #[error("candidate space of {candidates} exceeds the limit of {limit}")]
    SizeLimit { candidates: u128, limit: u128 },
}

/// Simplices up to degree `k` with face and degeneracy tables:
/// `faces[n][i][s]` is `∂_i` of the `s`-th `n`-simplex (`n ≥ 1`), and
/// `degeneracies[n][i][s]` is `ε_i` of it (`n < k`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TruncatedSimplicialSet {
    pub truncation: usize,
    pub counts: Vec<usize>,
    pub faces: Vec<Vec<Vec<usize>>>,
    pub degeneracies: Vec<Vec<Vec<usize>>>,
    pub labels: Vec<Vec<String>>,
}

impl TruncatedSimplicialSet {
    /// Validated constructor; checks shapes, ranges and the simplicial
    /// identities.
    pub fn new(
        counts: Vec<usize>,
        faces: Vec<Vec<Vec<usize>>>,
        degeneracies: Vec<Vec<Vec<usize>>>,
        labels: Option<Vec<Vec<String>>>,
    ) -> Result<Self, NerveError> {
        if counts.is_empty() {
            return Err(NerveError::Malformed("no degrees".into()));
        }
        let k = counts.len() - 1;
        let bad = |what: String| Err(NerveError::Malformed(what));
        if faces.len() != k + 1 || !faces[0].is_empty() {
            return bad("faces must be listed for degrees 0..=k, empty in degree 0".into());
        }
        if degeneracies.len() != k + 1 || !degeneracies[k].is_empty() {
            return bad("degeneracies must be listed for degrees 0..=k, empty in degree k".into());
        }
        for n in 1..=k {
            if faces[n].len() != n + 1 {
                return bad(format!("degree {n} needs {} faces", n + 1));
            }
            for table in &faces[n] {
                if table.len() != counts[n] || table.iter().any(|&t| t >= counts[n - 1]) {
                    return bad(format!("face table in degree {n} has the wrong shape"));
                }
            }
        }
        for n in 0..k {
            if degeneracies[n].len() != n + 1 {
                return bad(format!("degree {n} needs {} degeneracies", n + 1));
            }
            for table in &degeneracies[n] {
                if table.len() != counts[n] || table.iter().any(|&t| t >= counts[n + 1]) {
                    return bad(format!("degeneracy table in degree {n} has the wrong shape"));
                }
            }
        }
        let labels = match labels {
            Some(l) if l.len() == k + 1 && l.iter().zip(&counts).all(|(v, &c)| v.len() == c) => l,
            Some(_) => return bad("labels have the wrong shape".into()),
            None => counts.iter().map(|&c| (0..c).map(|s| s.to_string()).collect()).collect(),
        };
        let ss = TruncatedSimplicialSet { truncation: k, counts, faces, degeneracies, labels };
        ss.verify().map_err(|v| NerveError::Malformed(v.0))?;
        Ok(ss)
    }

    pub fn face(&self, n: usize, i: usize, s: usize) -> usize {
        self.faces[n][i][s]
    }

    pub fn degeneracy(&self, n: usize, i: usize, s: usize) -> usize {
        self.degeneracies[n][i][s]
    }

    /// `ε_i ∘ …` is onto these; the rest are nondegenerate.
    pub fn degenerate(&self, n: usize) -> Vec<bool> {
        let mut out = vec![false; self.counts[n]];
        if n > 0 {
            for table in &self.degeneracies[n - 1] {
                for &t in table {
                    out[t] = true;
                }
            }
        }
        out
    }

    pub fn nondegenerate_count(&self, n: usize) -> usize {
        self.degenerate(n).iter().filter(|&&d| !d).count()
    }

    /// Checks every simplicial identity whose two sides lie within the
    /// truncation.
    pub fn verify(&self) -> Result<(), Violation> {
        let k = self.truncation;
        let fail = |what: String| Err(Violation(what));
        // ∂_i ∂_j = ∂_{j-1} ∂_i for i < j
        for n in 2..=k {
            for j in 1..=n {
                for i in 0..j {
                    for s in 0..self.counts[n] {
                        let left = self.face(n - 1, i, self.face(n, j, s));
                        let right = self.face(n - 1, j - 1, self.face(n, i, s));
                        if left != right {
                            return fail(format!("∂_{i}∂_{j} ≠ ∂_{}∂_{i} on simplex {s} of degree {n}", j - 1));
                        }
                    }
                }
            }
        }
        // ∂_i ε_j on n-simplices, n + 1 ≤ k
        for n in 0..k {
            for j in 0..=n {
                for i in 0..=n + 1 {
                    for s in 0..self.counts[n] {
                        let left = self.face(n + 1, i, self.degeneracy(n, j, s));
                        let right = if i == j || i == j + 1 {
                            s
                        } else if i < j {
                            self.degeneracy(n - 1, j - 1, self.face(n, i, s))
                        } else {
                            self.degeneracy(n - 1, j, self.face(n, i - 1, s))
                        };
                        if left != right {
                            return fail(format!("∂_{i}ε_{j} fails on simplex {s} of degree {n}"));
                        }
                    }
                }
            }
        }
        // ε_i ε_j = ε_{j+1} ε_i for i ≤ j
        for n in 0..k.saturating_sub(1) {
            for j in 0..=n {
                for i in 0..=j {
                    for s in 0..self.counts[n] {
                        let left = self.degeneracy(n + 1, i, self.degeneracy(n, j, s));
                        let right = self.degeneracy(n + 1, j + 1, self.degeneracy(n, i, s));
                        if left != right {
                            return fail(format!("ε_{i}ε_{j} ≠ ε_{}ε_{i} on simplex {s} of degree {n}", j + 1));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// The one-vertex, one-loop model of the circle, truncated at degree 1.
    pub fn circle() -> Self {
        TruncatedSimplicialSet::new(
            vec![1, 2],
            vec![vec![], vec![vec![0, 0], vec![0, 0]]],
            vec![vec![vec![0]], vec![]],
            Some(vec![vec!["v".into()], vec!["ε0 v".into(), "σ".into()]]),
        )
        .expect("circle model is simplicial")
    }
}

/// A truncated nerve together with the chains behind each simplex.
#[derive(Debug, Clone)]
pub struct Nerve {
    pub set: TruncatedSimplicialSet,
    /// `chains[n][s]`: the object for `n = 0`, the morphisms otherwise.
    pub chains: Vec<Vec<Vec<usize>>>,
    index: Vec<HashMap<Vec<usize>, usize>>,
}

impl Nerve {
    pub fn simplex(&self, n: usize, chain: &[usize]) -> Option<usize> {
        self.index.get(n)?.get(chain).copied()
    }
}

/// Number of composable chains of each length up to `k`.
pub fn chain_counts(c: &FinCategory, k: usize) -> Vec<u128> {
    let mut ending: Vec<u128> = vec![1; c.object_count()];
    let mut counts = vec![c.object_count() as u128];
    for _ in 1..=k {
        let mut next = vec![0u128; c.object_count()];
        for m in c.morphisms() {
            next[m.tgt] = next[m.tgt].saturating_add(ending[m.src]);
        }
        counts.push(next.iter().fold(0u128, |a, &b| a.saturating_add(b)));
        ending = next;
    }
    counts
}

pub fn nerve(c: &FinCategory, k: usize, limit: SearchLimit) -> Result<Nerve, NerveError> {
    let total = chain_counts(c, k).iter().fold(0u128, |a, &b| a.saturating_add(b));
    limit
        .check(total)
        .map_err(|e| NerveError::SizeLimit { candidates: e.candidates, limit: e.limit })?;
    let mut chains: Vec<Vec<Vec<usize>>> = vec![(0..c.object_count()).map(|x| vec![x]).collect()];
    for n in 1..=k {
        let next: Vec<Vec<usize>> = if n == 1 {
            (0..c.morphism_count()).map(|m| vec![m]).collect()
        } else {
            chains[n - 1]
                .iter()
                .flat_map(|chain| {
                    let end = c.morphism(*chain.last().unwrap()).tgt;
                    c.out_of(end).map(move |m| {
                        let mut longer = chain.clone();
                        longer.push(m);
                        longer
                    })
                })
                .collect()
        };
        chains.push(next);
    }
    let index: Vec<HashMap<Vec<usize>, usize>> = chains
        .iter()
        .map(|level| level.iter().enumerate().map(|(i, ch)| (ch.clone(), i)).collect())
        .collect();
    let vertex = |chain: &[usize], i: usize| -> usize {
        if i == 0 {
            c.morphism(chain[0]).src
        } else {
            c.morphism(chain[i - 1]).tgt
        }
    };
    let face_of = |n: usize, i: usize, chain: &[usize]| -> Vec<usize> {
        if n == 1 {
            let m = c.morphism(chain[0]);
            return vec![if i == 0 { m.tgt } else { m.src }];
        }
        let mut out = Vec::with_capacity(n - 1);
        if i == 0 {
            out.extend_from_slice(&chain[1..]);
        } else if i == n {
            out.extend_from_slice(&chain[..n - 1]);
        } else {
            out.extend_from_slice(&chain[..i - 1]);
            out.push(c.compose(chain[i], chain[i - 1]).expect("chain is composable"));
            out.extend_from_slice(&chain[i + 1..]);
        }
        out
    };
    let degeneracy_of = |n: usize, i: usize, chain: &[usize]| -> Vec<usize> {
        if n == 0 {
            return vec![c.identity(chain[0])];
        }
        let mut out = chain.to_vec();
        out.insert(i, c.identity(vertex(chain, i)));
        out
    };
    let mut faces = vec![Vec::new()];
    for n in 1..=k {
        let tables = (0..=n)
            .map(|i| {
                chains[n]
                    .par_iter()
                    .map(|ch| index[n - 1][&face_of(n, i, ch)])
                    .collect()
            })
            .collect();
        faces.push(tables);
    }
    let mut degeneracies = Vec::new();
    for n in 0..=k {
        if n == k {
            degeneracies.push(Vec::new());
            continue;
        }
        let tables = (0..=n)
            .map(|i| {
                chains[n]
                    .par_iter()
                    .map(|ch| index[n + 1][&degeneracy_of(n, i, ch)])
                    .collect()
            })
            .collect();
        degeneracies.push(tables);
    }
    let labels = chains
        .iter()
        .enumerate()
        .map(|(n, level)| {
            level
                .iter()
                .map(|ch| {
                    if n == 0 {
                        format!("x{}", ch[0])
                    } else {
                        let parts: Vec<String> = ch.iter().map(|&m| c.label(m)).collect();
                        format!("({})", parts.join(", "))
                    }
                })
                .collect()
        })
        .collect();
    let set = TruncatedSimplicialSet {
        truncation: k,
        counts: chains.iter().map(Vec::len).collect(),
        faces,
        degeneracies,
        labels,
    };
    debug_assert_eq!(set.verify(), Ok(()));
    Ok(Nerve { set, chains, index })
}

/// Degreewise simplex map between nerves induced by a functor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialMap {
    pub maps: Vec<Vec<usize>>,
}

impl SimplicialMap {
    /// Checks that the map commutes with every face and degeneracy.
    pub fn verify(&self, source: &TruncatedSimplicialSet, target: &TruncatedSimplicialSet) -> Result<(), Violation> {
        let k = source.truncation.min(target.truncation);
        for n in 1..=k {
            for i in 0..=n {
                for s in 0..source.counts[n] {
                    if self.maps[n - 1][source.face(n, i, s)] != target.face(n, i, self.maps[n][s]) {
                        return Err(Violation(format!("map does not commute with ∂_{i} in degree {n}")));
                    }
                }
            }
        }
        for n in 0..k {
            for i in 0..=n {
                for s in 0..source.counts[n] {
                    if self.maps[n + 1][source.degeneracy(n, i, s)] != target.degeneracy(n, i, self.maps[n][s]) {
                        return Err(Violation(format!("map does not commute with ε_{i} in degree {n}")));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn is_surjective(&self, target: &TruncatedSimplicialSet) -> bool {
        self.maps.iter().zip(&target.counts).all(|(map, &count)| {
            let mut hit = vec![false; count];
            for &t in map {
                hit[t] = true;
            }
            !hit.contains(&false)
        })
    }
}

pub fn nerve_map(f: &Functor, source: &Nerve, target: &Nerve) -> Result<SimplicialMap, NerveError> {
    let k = source.set.truncation.min(target.set.truncation);
    let maps = (0..=k)
        .map(|n| {
            source.chains[n]
                .iter()
                .map(|ch| {
                    let image: Vec<usize> = if n == 0 {
                        vec![f.obj_map[ch[0]]]
                    } else {
                        ch.iter().map(|&m| f.mor_map[m]).collect()
                    };
                    target.simplex(n, &image).ok_or(NerveError::FunctorMismatch)
                })
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(SimplicialMap { maps })
}

/// Free chain complex with `boundaries[n]: C_n → C_{n-1}` for `n ≥ 1`
/// (`boundaries[0]` is the empty map out of `C_0`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainComplex<T> {
    pub ranks: Vec<usize>,
    pub boundaries: Vec<Matrix<T>>,
}

impl<T: ExactInt> ChainComplex<T> {
    pub fn truncation(&self) -> usize {
        self.ranks.len() - 1
    }

    /// `∂_{n-1} ∘ ∂_n = 0` in every degree.
    pub fn verify(&self) -> Result<(), Violation> {
        for n in 2..self.ranks.len() {
            if !self.boundaries[n - 1].mul(&self.boundaries[n]).is_zero() {
                return Err(Violation(format!("∂∂ ≠ 0 from degree {n}")));
            }
        }
        Ok(())
    }
}

/// The normalized complex: nondegenerate simplices as basis, boundary
/// the alternating sum of faces with degenerate faces dropped.
pub fn normalized_chains(ss: &TruncatedSimplicialSet) -> ChainComplex<Int> {
    let k = ss.truncation;
    let positions: Vec<Vec<Option<usize>>> = (0..=k)
        .map(|n| {
            let mut next = 0;
            ss.degenerate(n)
                .into_iter()
                .map(|d| {
                    (!d).then(|| {
                        next += 1;
                        next - 1
                    })
                })
                .collect()
        })
        .collect();
    let ranks: Vec<usize> = positions.iter().map(|p| p.iter().flatten().count()).collect();
    let mut boundaries = vec![Matrix::zeros(0, ranks[0])];
    for n in 1..=k {
        let mut d = Matrix::<Int>::zeros(ranks[n - 1], ranks[n]);
        for s in 0..ss.counts[n] {
            let Some(col) = positions[n][s] else { continue };
            for i in 0..=n {
                if let Some(row) = positions[n - 1][ss.face(n, i, s)] {
                    d[(row, col)] += Int::from(if i % 2 == 0 { 1 } else { -1 });
                }
            }
        }
        boundaries.push(d);
    }
    let cx = ChainComplex { ranks, boundaries };
    debug_assert_eq!(cx.verify(), Ok(()));
    cx
}

/// `H_n = ker ∂_n / im ∂_{n+1}`. The kernel is a direct summand, so the
/// torsion is that of `coker ∂_{n+1}` and the free rank is
/// `rank C_n − rank ∂_n − rank ∂_{n+1}`.
pub fn homology<T: ExactInt>(cx: &ChainComplex<T>, n: usize) -> Result<AbelianInvariants<T>, NerveError> {
    if n + 1 > cx.truncation() {
        return Err(NerveError::TruncationTooShallow { degree: n, truncation: cx.truncation() });
    }
    let out = rank(&cx.boundaries[n]);
    // coker ∂_{n+1} = Z^{c_n} / im, whose free part also counts rank ∂_n
    let incoming = cokernel(&cx.boundaries[n + 1]);
    Ok(AbelianInvariants { free_rank: incoming.free_rank - out, torsion: incoming.torsion })
}

/// Homology with the free rank of `H_0` reduced by one.
pub fn reduced_homology<T: ExactInt>(cx: &ChainComplex<T>, n: usize) -> Result<AbelianInvariants<T>, NerveError> {
    let mut h = homology(cx, n)?;
    if n == 0 {
        h.free_rank = h.free_rank.saturating_sub(1);
    }
    Ok(h)
}

/// `EG` (nerve of the simplicial categorification), `BG` (nerve of the
/// tautological one), and the projection induced by the covering functor.
#[derive(Debug, Clone)]
pub struct BarSpaces {
    pub eg: Nerve,
    pub bg: Nerve,
    pub projection: SimplicialMap,
}

/// Builds `EG → BG` and checks that the projection is a degreewise
/// surjective simplicial map whose fibers are exactly the orbits of the
/// free right translation action `x ↦ x a` on vertices, under which the
/// covering functor is invariant.
pub fn bar_spaces(g: &FiniteGroup, k: usize, limit: SearchLimit) -> Result<BarSpaces, NerveError> {
    let (simp, _) = simplicial(g);
    let taut = tautological(g);
    let eg = nerve(&simp, k, limit)?;
    let bg = nerve(&taut, k, limit)?;
    let r = covering_transformation(g);
    let projection = nerve_map(&r, &eg, &bg)?;
    let spaces = BarSpaces { eg, bg, projection };
    spaces.verify_quotient(g).map_err(|v| NerveError::Malformed(v.0))?;
    Ok(spaces)
}

impl BarSpaces {
    /// `a` acting on an `EG` simplex by right translation of every vertex.
    pub fn translate(&self, g: &FiniteGroup, n: usize, s: usize, a: usize) -> usize {
        let ord = g.order();
        let chain = &self.eg.chains[n][s];
        let moved: Vec<usize> = if n == 0 {
            vec![g.mul(chain[0], a)]
        } else {
            chain
                .iter()
                .map(|&m| g.mul(m / ord, a) * ord + g.mul(m % ord, a))
                .collect()
        };
        self.eg.simplex(n, &moved).expect("translation preserves chains")
    }

    pub fn verify_quotient(&self, g: &FiniteGroup) -> Result<(), Violation> {
        self.projection.verify(&self.eg.set, &self.bg.set)?;
        if !self.projection.is_surjective(&self.bg.set) {
            return Err(Violation("projection is not surjective".into()));
        }
        for n in 0..=self.eg.set.truncation {
            let mut fiber_sizes = vec![0; self.bg.set.counts[n]];
            for s in 0..self.eg.set.counts[n] {
                fiber_sizes[self.projection.maps[n][s]] += 1;
                let mut orbit: Vec<usize> = g.elements().map(|a| self.translate(g, n, s, a)).collect();
                if orbit.iter().any(|&t| self.projection.maps[n][t] != self.projection.maps[n][s]) {
                    return Err(Violation(format!("orbit of simplex {s} leaves its fiber in degree {n}")));
                }
                orbit.sort_unstable();
                orbit.dedup();
                if orbit.len() != g.order() {
                    return Err(Violation(format!("action is not free on simplex {s} in degree {n}")));
                }
            }
            if fiber_sizes.iter().any(|&f| f != g.order()) {
                return Err(Violation(format!("a fiber in degree {n} is larger than one orbit")));
            }
        }
        Ok(())
    }
}

/// Text report: one `H_n = …` line per computable degree.
pub fn homology_report(cx: &ChainComplex<Int>, degrees: impl IntoIterator<Item = usize>) -> Result<String, NerveError> {
    let mut out = String::new();
    for n in degrees {
        let h = homology(cx, n)?;
        writeln!(out, "H_{n} = {}", h.render()).expect("write to string");
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::categorify::{lift_hom, Flavor};
    use crate::group::GroupHom;
    use std::sync::Arc;

    fn lim() -> SearchLimit {
        SearchLimit::default()
    }

    fn ints(v: &[i64]) -> Vec<Int> {
        v.iter().map(|&d| Int::from(d)).collect()
    }

    #[test]
    fn nerve_counts() {
        let n = nerve(&tautological(&FiniteGroup::cyclic(2)), 3, lim()).unwrap();
        assert_eq!(n.set.counts, vec![1, 2, 4, 8]);
        let n = nerve(&tautological(&FiniteGroup::trivial()), 4, lim()).unwrap();
        assert_eq!(n.set.counts, vec![1; 5]);
        assert!((1..=4).all(|d| n.set.nondegenerate_count(d) == 0));
        let (simp, _) = simplicial(&FiniteGroup::cyclic(2));
        assert_eq!(nerve(&simp, 2, lim()).unwrap().set.counts[2], 8);
    }

    #[test]
    fn nondegenerate_counts() {
        for g in [FiniteGroup::cyclic(3), FiniteGroup::symmetric(3)] {
            let n = nerve(&tautological(&g), 3, lim()).unwrap();
            for d in 0..=3 {
                assert_eq!(n.set.nondegenerate_count(d), (g.order() - 1).pow(d as u32));
            }
        }
    }

    #[test]
    fn circle_boundary() {
        let cx = normalized_chains(&TruncatedSimplicialSet::circle());
        assert_eq!(cx.ranks, vec![1, 1]);
        assert!(cx.boundaries[1].is_zero());
    }

    #[test]
    fn rejects_broken_identities() {
        let err = TruncatedSimplicialSet::new(
            vec![2, 1],
            vec![vec![], vec![vec![0], vec![1]]],
            vec![vec![vec![0, 0]], vec![]],
            None,
        );
        assert!(matches!(err, Err(NerveError::Malformed(_))));
    }

    #[test]
    fn homology_examples() {
        let bz2 = normalized_chains(&nerve(&tautological(&FiniteGroup::cyclic(2)), 4, lim()).unwrap().set);
        assert_eq!(homology(&bz2, 1).unwrap().torsion, ints(&[2]));
        assert_eq!(homology(&bz2, 1).unwrap().free_rank, 0);
        assert_eq!(homology(&bz2, 2).unwrap(), AbelianInvariants::trivial());
        assert_eq!(homology(&bz2, 3).unwrap().torsion, ints(&[2]));
        assert_eq!(homology(&bz2, 0).unwrap().free_rank, 1);
        assert_eq!(
            homology(&bz2, 4),
            Err(NerveError::TruncationTooShallow { degree: 4, truncation: 4 })
        );
        let bs3 = normalized_chains(&nerve(&tautological(&FiniteGroup::symmetric(3)), 3, lim()).unwrap().set);
        assert_eq!(homology(&bs3, 1).unwrap().torsion, ints(&[2]));
        let bz3 = normalized_chains(&nerve(&tautological(&FiniteGroup::cyclic(3)), 3, lim()).unwrap().set);
        assert_eq!(homology(&bz3, 1).unwrap().torsion, ints(&[3]));
    }

    #[test]
    fn eg_is_acyclic() {
        let g = FiniteGroup::cyclic(2);
        let spaces = bar_spaces(&g, 3, lim()).unwrap();
        let cx = normalized_chains(&spaces.eg.set);
        for n in 0..3 {
            assert!(reduced_homology(&cx, n).unwrap().is_trivial(), "degree {n}");
        }
    }

    #[test]
    fn bar_quotient_for_s3() {
        let g = FiniteGroup::symmetric(3);
        let spaces = bar_spaces(&g, 2, lim()).unwrap();
        assert_eq!(spaces.eg.set.counts[2], 6 * 6 * 6);
        assert_eq!(spaces.bg.set.counts[2], 36);
    }

    #[test]
    fn functor_induces_simplicial_map() {
        let z4 = Arc::new(FiniteGroup::cyclic(4));
        let z2 = Arc::new(FiniteGroup::cyclic(2));
        let f = GroupHom::homomorphism(z4, z2, vec![0, 1, 0, 1]).unwrap();
        for flavor in [Flavor::Tautological, Flavor::Simplicial] {
            let functor = lift_hom(&f, flavor).unwrap();
            let source = nerve(&functor.source, 3, lim()).unwrap();
            let target = nerve(&functor.target, 3, lim()).unwrap();
            let map = nerve_map(&functor, &source, &target).unwrap();
            assert_eq!(map.verify(&source.set, &target.set), Ok(()));
        }
    }

    #[test]
    fn size_limit() {
        let err = nerve(&tautological(&FiniteGroup::cyclic(5)), 6, SearchLimit::new(100)).unwrap_err();
        assert!(matches!(err, NerveError::SizeLimit { .. }));
    }
}
