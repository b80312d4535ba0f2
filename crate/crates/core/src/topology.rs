//! Finite topological spaces: the category of open sets with intersection
//! as tensor, preimage functors, covers and refinements.

use std::sync::Arc;

use thiserror::Error;

use crate::category::{CategoryRef, FinCategory, Functor, MonoidalStructure, MorphismTensor, NatTransformation};

/// Points are bits of a `u64`.
pub const MAX_POINTS: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TopologyError {
    #[error("at most {MAX_POINTS} points are supported, got {0}")]
    TooManyPoints(usize),
    #[error("point {0} is out of range")]
    PointOutOfRange(usize),
    #[error("open set {0} is listed twice")]
    DuplicateOpen(usize),
    #[error("the empty set is not open")]
    MissingEmpty,
    #[error("the whole space is not open")]
    MissingFull,
    #[error("not a topology: the {kind} of opens {a} and {b} is not open")]
    NotATopology { kind: &'static str, a: usize, b: usize },
    #[error("map has {found} values for {expected} points")]
    MapLength { expected: usize, found: usize },
    #[error("not continuous: the preimage of open {0} is not open")]
    NotContinuous(usize),
    #[error("cover set {0} is not an open of the space")]
    NotOpen(usize),
    #[error("cover order is {0}")]
    BadOrder(&'static str),
    #[error("cover assignment is not order-preserving at ({0}, {1})")]
    NotMonotone(usize, usize),
    #[error("cover assignment is not full at ({0}, {1})")]
    NotFull(usize, usize),
    #[error("the cover sets do not cover the space")]
    NotCovering,
}

pub type Bits = u64;

pub fn bits_of(points: &[usize]) -> Bits {
    points.iter().fold(0, |acc, &p| acc | (1 << p))
}

pub fn points_of(set: Bits) -> Vec<usize> {
    (0..MAX_POINTS).filter(|&p| set >> p & 1 == 1).collect()
}

/// `∅`, or `{0,2}`.
pub fn render_set(set: Bits) -> String {
    if set == 0 {
        "∅".to_string()
    } else {
        let parts: Vec<String> = points_of(set).iter().map(usize::to_string).collect();
        format!("{{{}}}", parts.join(","))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteSpace {
    points: usize,
    opens: Vec<Bits>,
}

impl FiniteSpace {
    /// Validates the topology; opens keep the given order.
    pub fn new(points: usize, opens: Vec<Vec<usize>>) -> Result<Self, TopologyError> {
        if points > MAX_POINTS {
            return Err(TopologyError::TooManyPoints(points));
        }
        if let Some(&p) = opens.iter().flatten().find(|&&p| p >= points) {
            return Err(TopologyError::PointOutOfRange(p));
        }
        Self::from_bits(points, opens.iter().map(|o| bits_of(o)).collect())
    }

    pub fn from_bits(points: usize, opens: Vec<Bits>) -> Result<Self, TopologyError> {
        if points > MAX_POINTS {
            return Err(TopologyError::TooManyPoints(points));
        }
        let full = full_set(points);
        if let Some(o) = opens.iter().find(|&&o| o & !full != 0) {
            return Err(TopologyError::PointOutOfRange(points_of(o & !full)[0]));
        }
        for (i, o) in opens.iter().enumerate() {
            if opens[..i].contains(o) {
                return Err(TopologyError::DuplicateOpen(i));
            }
        }
        if !opens.contains(&0) {
            return Err(TopologyError::MissingEmpty);
        }
        if !opens.contains(&full) {
            return Err(TopologyError::MissingFull);
        }
        for (a, &u) in opens.iter().enumerate() {
            for (b, &v) in opens.iter().enumerate().skip(a + 1) {
                if !opens.contains(&(u | v)) {
                    return Err(TopologyError::NotATopology { kind: "union", a, b });
                }
                if !opens.contains(&(u & v)) {
                    return Err(TopologyError::NotATopology { kind: "intersection", a, b });
                }
            }
        }
        Ok(FiniteSpace { points, opens })
    }

    /// Every subset open.
    pub fn discrete(points: usize) -> Self {
        let opens = (0..1u64 << points).collect();
        FiniteSpace::from_bits(points, opens).expect("power set is a topology")
    }

    /// Points `{0, 1}` with opens `∅, {0}, X`.
    pub fn sierpinski() -> Self {
        FiniteSpace::from_bits(2, vec![0, 1, 3]).expect("Sierpiński space")
    }

    pub fn point_count(&self) -> usize {
        self.points
    }

    pub fn opens(&self) -> &[Bits] {
        &self.opens
    }

    pub fn full(&self) -> Bits {
        full_set(self.points)
    }

    pub fn open_index(&self, set: Bits) -> Option<usize> {
        self.opens.iter().position(|&o| o == set)
    }
}

fn full_set(points: usize) -> Bits {
    if points == MAX_POINTS {
        Bits::MAX
    } else {
        (1 << points) - 1
    }
}

/// The thin category of opens under inclusion with `⊗ = ∩`, unit `X`.
#[derive(Debug, Clone)]
pub struct OpenSetCategory {
    pub space: FiniteSpace,
    pub category: CategoryRef,
    pub monoidal: MonoidalStructure,
    /// `U * n + V → morphism U ⊆ V`
    pub lookup: Vec<Option<usize>>,
}

impl OpenSetCategory {
    pub fn inclusion(&self, u: usize, v: usize) -> Option<usize> {
        self.lookup[u * self.space.opens.len() + v]
    }
}

pub fn open_set_category(space: &FiniteSpace) -> OpenSetCategory {
    let opens = &space.opens;
    let n = opens.len();
    let (cat, lookup) = FinCategory::from_preorder(n, |u, v| opens[u] & !opens[v] == 0);
    let labels = cat
        .morphisms()
        .iter()
        .map(|m| format!("{}⊆{}", render_set(opens[m.src]), render_set(opens[m.tgt])))
        .collect();
    let category = Arc::new(cat.with_labels(labels));
    let tensor_obj = (0..n * n)
        .map(|i| space.open_index(opens[i / n] & opens[i % n]).expect("closed under intersection"))
        .collect();
    let monoidal = MonoidalStructure {
        base: category.clone(),
        unit: space.open_index(space.full()).expect("X is open"),
        tensor_obj,
        tensor_mor: MorphismTensor::Thin(lookup.clone()),
        associator: None,
    };
    OpenSetCategory { space: space.clone(), category, monoidal, lookup }
}

/// `f^{-1}: C_Y → C_X` for a continuous point map `f: X → Y`.
pub fn preimage_functor(f: &[usize], x: &OpenSetCategory, y: &OpenSetCategory) -> Result<Functor, TopologyError> {
    let (sx, sy) = (&x.space, &y.space);
    if f.len() != sx.points {
        return Err(TopologyError::MapLength { expected: sx.points, found: f.len() });
    }
    if let Some(&p) = f.iter().find(|&&p| p >= sy.points) {
        return Err(TopologyError::PointOutOfRange(p));
    }
    let obj_map = sy
        .opens
        .iter()
        .enumerate()
        .map(|(i, &v)| {
            let pre = (0..sx.points).filter(|&p| v >> f[p] & 1 == 1).fold(0, |acc, p| acc | 1 << p);
            sx.open_index(pre).ok_or(TopologyError::NotContinuous(i))
        })
        .collect::<Result<Vec<_>, _>>()?;
    let mor_map = y
        .category
        .morphisms()
        .iter()
        .map(|m| x.inclusion(obj_map[m.src], obj_map[m.tgt]).expect("preimages preserve inclusion"))
        .collect();
    Ok(Functor { source: y.category.clone(), target: x.category.clone(), obj_map, mor_map })
}

/// An indexed family of opens `U: I → C_X` on a poset `I`, full and
/// faithful onto its image.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cover {
    /// Open index of `U_i` in the space.
    pub sets: Vec<usize>,
    /// `leq[i][j]` iff `i ≤ j` in `I`.
    pub leq: Vec<Vec<bool>>,
    /// The union of the sets is `X`.
    pub covers: bool,
}

impl Cover {
    /// `leq` defaults to inclusion of the assigned opens. With
    /// `require_covering`, the union must be the whole space.
    pub fn new(
        space: &FiniteSpace,
        sets: Vec<usize>,
        leq: Option<Vec<Vec<bool>>>,
        require_covering: bool,
    ) -> Result<Self, TopologyError> {
        if let Some(&s) = sets.iter().find(|&&s| s >= space.opens.len()) {
            return Err(TopologyError::NotOpen(s));
        }
        let k = sets.len();
        let subset = |i: usize, j: usize| space.opens[sets[i]] & !space.opens[sets[j]] == 0;
        let leq = leq.unwrap_or_else(|| (0..k).map(|i| (0..k).map(|j| subset(i, j)).collect()).collect());
        if leq.len() != k || leq.iter().any(|row| row.len() != k) {
            return Err(TopologyError::BadOrder("not square"));
        }
        for i in 0..k {
            if !leq[i][i] {
                return Err(TopologyError::BadOrder("not reflexive"));
            }
            for j in 0..k {
                if i != j && leq[i][j] && leq[j][i] {
                    return Err(TopologyError::BadOrder("not antisymmetric"));
                }
                if leq[i][j] && (0..k).any(|l| leq[j][l] && !leq[i][l]) {
                    return Err(TopologyError::BadOrder("not transitive"));
                }
                if leq[i][j] && !subset(i, j) {
                    return Err(TopologyError::NotMonotone(i, j));
                }
                if !leq[i][j] && subset(i, j) {
                    return Err(TopologyError::NotFull(i, j));
                }
            }
        }
        let union = sets.iter().fold(0, |acc, &s| acc | space.opens[s]);
        let covers = union == space.full();
        if require_covering && !covers {
            return Err(TopologyError::NotCovering);
        }
        Ok(Cover { sets, leq, covers })
    }

    /// The cover by the given point sets, ordered by inclusion.
    pub fn from_point_sets(space: &FiniteSpace, sets: &[Vec<usize>]) -> Result<Self, TopologyError> {
        let indices = sets
            .iter()
            .enumerate()
            .map(|(i, s)| space.open_index(bits_of(s)).ok_or(TopologyError::NotOpen(i)))
            .collect::<Result<Vec<_>, _>>()?;
        Cover::new(space, indices, None, false)
    }

    /// The index poset as a thin category.
    pub fn index_category(&self) -> CategoryRef {
        Arc::new(FinCategory::from_preorder(self.sets.len(), |i, j| self.leq[i][j]).0)
    }

    /// `U` as a functor `I → C_X`.
    pub fn functor(&self, opens: &OpenSetCategory) -> Functor {
        let source = self.index_category();
        let mor_map = source
            .morphisms()
            .iter()
            .map(|m| opens.inclusion(self.sets[m.src], self.sets[m.tgt]).expect("monotone"))
            .collect();
        Functor { source, target: opens.category.clone(), obj_map: self.sets.clone(), mor_map }
    }
}

/// `φ: J → I` with `V_j ⊆ U_{φ(j)}`; `components[j]` is that inclusion in
/// the open-set category.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Refinement {
    pub phi: Vec<usize>,
    pub components: Vec<usize>,
}

impl Refinement {
    /// The refinement as a natural transformation `V ⇒ U ∘ φ`.
    pub fn transformation(&self, v: &Cover, u: &Cover, opens: &OpenSetCategory) -> NatTransformation {
        let source = v.functor(opens);
        let u_functor = u.functor(opens);
        let index_u = &u_functor.source;
        let mor_map = source
            .source
            .morphisms()
            .iter()
            .map(|m| {
                let (a, b) = (self.phi[m.src], self.phi[m.tgt]);
                let step = index_u.hom(a, b)[0];
                u_functor.mor_map[step]
            })
            .collect();
        let target = Functor {
            source: source.source.clone(),
            target: opens.category.clone(),
            obj_map: self.phi.iter().map(|&i| u.sets[i]).collect(),
            mor_map,
        };
        NatTransformation { source, target, components: self.components.clone() }
    }
}

/// The lexicographically least refinement of `u` by `v`, if any.
pub fn refinement(v: &Cover, u: &Cover, opens: &OpenSetCategory) -> Option<Refinement> {
    let space = &opens.space;
    let within = |j: usize, i: usize| space.opens[v.sets[j]] & !space.opens[u.sets[i]] == 0;
    fn search(
        j: usize,
        phi: &mut Vec<usize>,
        v: &Cover,
        u: &Cover,
        within: &dyn Fn(usize, usize) -> bool,
    ) -> bool {
        if j == phi.len() {
            return true;
        }
        for i in 0..u.sets.len() {
            let monotone = (0..j).all(|l| (!v.leq[l][j] || u.leq[phi[l]][i]) && (!v.leq[j][l] || u.leq[i][phi[l]]));
            if within(j, i) && monotone {
                phi[j] = i;
                if search(j + 1, phi, v, u, within) {
                    return true;
                }
            }
        }
        false
    }
    let mut phi = vec![0; v.sets.len()];
    if !search(0, &mut phi, v, u, &within) {
        return None;
    }
    let components = phi
        .iter()
        .enumerate()
        .map(|(j, &i)| opens.inclusion(v.sets[j], u.sets[i]).expect("V_j ⊆ U_φ(j)"))
        .collect();
    Some(Refinement { phi, components })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::category::{check_functor, check_monoidal, check_natural};

    #[test]
    fn validation() {
        assert_eq!(FiniteSpace::new(2, vec![vec![], vec![0]]), Err(TopologyError::MissingFull));
        assert_eq!(FiniteSpace::new(2, vec![vec![0, 1], vec![0]]), Err(TopologyError::MissingEmpty));
        assert_eq!(
            FiniteSpace::new(2, vec![vec![], vec![0], vec![0], vec![0, 1]]),
            Err(TopologyError::DuplicateOpen(2))
        );
        assert_eq!(
            FiniteSpace::new(3, vec![vec![], vec![0], vec![1], vec![0, 1, 2]]),
            Err(TopologyError::NotATopology { kind: "union", a: 1, b: 2 })
        );
        assert_eq!(
            FiniteSpace::new(3, vec![vec![], vec![0, 1], vec![1, 2], vec![0, 1, 2]]),
            Err(TopologyError::NotATopology { kind: "intersection", a: 1, b: 2 })
        );
        assert_eq!(FiniteSpace::new(1, vec![vec![], vec![3]]), Err(TopologyError::PointOutOfRange(3)));
    }

    #[test]
    fn sierpinski_category() {
        let c = open_set_category(&FiniteSpace::sierpinski());
        assert_eq!((c.category.object_count(), c.category.morphism_count()), (3, 6));
        assert!(c.category.is_thin());
        assert!(check_monoidal(&c.monoidal));
        assert_eq!(c.monoidal.unit, 2);
    }

    #[test]
    fn discrete_two_points() {
        let s = FiniteSpace::discrete(2);
        let c = open_set_category(&s);
        assert_eq!(c.category.object_count(), 4);
        assert_eq!(s.opens()[c.monoidal.obj(1, 2)], 0);
        for u in 0..4 {
            assert_eq!(c.monoidal.obj(u, 3), u);
        }
        assert!(check_monoidal(&c.monoidal));
    }

    #[test]
    fn preimages() {
        let sier = open_set_category(&FiniteSpace::sierpinski());
        let id = preimage_functor(&[0, 1], &sier, &sier).unwrap();
        assert_eq!(id, Functor::identity(sier.category.clone()));
        let constant = preimage_functor(&[0, 0], &sier, &sier).unwrap();
        assert_eq!(constant.obj_map, vec![0, 2, 2]);
        assert!(check_functor(&constant));
        let disc = open_set_category(&FiniteSpace::discrete(2));
        // from Sierpiński to discrete: preimage of {1} is {1}, not open
        assert_eq!(preimage_functor(&[0, 1], &sier, &disc), Err(TopologyError::NotContinuous(2)));
        // the other way round every map is continuous
        let f = preimage_functor(&[1, 0], &disc, &sier).unwrap();
        assert!(check_functor(&f));
    }

    #[test]
    fn preimage_is_contravariant() {
        let s = open_set_category(&FiniteSpace::sierpinski());
        let d = open_set_category(&FiniteSpace::discrete(2));
        let f = [1usize, 0]; // d → s
        let g = [0usize, 0]; // s → s
        let gf: Vec<usize> = f.iter().map(|&p| g[p]).collect();
        let composite = preimage_functor(&gf, &d, &s).unwrap();
        let chained = preimage_functor(&g, &s, &s)
            .unwrap()
            .then(&preimage_functor(&f, &d, &s).unwrap())
            .unwrap();
        assert_eq!(composite, chained);
    }

    #[test]
    fn refinement_examples() {
        let space = FiniteSpace::sierpinski();
        let opens = open_set_category(&space);
        let u = Cover::from_point_sets(&space, &[vec![0, 1]]).unwrap();
        let v = Cover::from_point_sets(&space, &[vec![0], vec![0, 1]]).unwrap();
        let r = refinement(&v, &u, &opens).unwrap();
        assert_eq!(r.phi, vec![0, 0]);
        assert!(check_natural(&r.transformation(&v, &u, &opens)));
        let same = refinement(&v, &v, &opens).unwrap();
        assert_eq!(same.phi, vec![0, 1]);
        assert!(same.components.iter().all(|&m| opens.category.is_identity(m)));
        let a = Cover::from_point_sets(&space, &[vec![0]]).unwrap();
        assert!(!a.covers);
        assert_eq!(refinement(&u, &a, &opens), None);
    }

    #[test]
    fn cover_order_checks() {
        let space = FiniteSpace::sierpinski();
        let wrong = vec![vec![true, true], vec![false, true]];
        assert_eq!(Cover::new(&space, vec![2, 1], Some(wrong), false), Err(TopologyError::NotMonotone(0, 1)));
        let discrete = vec![vec![true, false], vec![false, true]];
        assert_eq!(Cover::new(&space, vec![1, 2], Some(discrete), false), Err(TopologyError::NotFull(0, 1)));
        assert_eq!(Cover::new(&space, vec![1], None, true), Err(TopologyError::NotCovering));
    }
}
