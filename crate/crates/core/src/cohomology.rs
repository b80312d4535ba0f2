//! Normalized bar-complex cohomology `H^n(G, A)` for a finite abelian
//! `A = Z/d_1 ⊕ … ⊕ Z/d_r` with a `G`-action, and pentagon associators on
//! linearized discrete categorifications.

use std::collections::HashSet;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;
use thiserror::Error;

use crate::categorify::linearized_discrete;
use crate::category::check_monoidal;
use crate::group::GroupRef;
use crate::linalg::{cokernel, smith_column_transform};
use crate::{power, Int, IntMatrix, SearchLimit};

/// Degrees above this are refused by the CLI unless raised explicitly.
pub const DEFAULT_MAX_DEGREE: usize = 3;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CohomologyError {
    #[error("cyclic orders must be positive")]
    ZeroOrder,
    #[error("coefficient group is too large to index")]
    TooLarge,
    #[error("expected {expected} action matrices, found {found}")]
    ActionLength { expected: usize, found: usize },
    #[error("action matrix of element {0} is not {1}x{1}")]
    ActionShape(usize, usize),
    #[error("action matrix of element {0} is not well defined modulo the cyclic orders")]
    ActionNotWellDefined(usize),
    #[error("action of element {0} is not an automorphism")]
    ActionNotAutomorphism(usize),
    #[error("the identity acts nontrivially")]
    ActionNotNormalized,
    #[error("action is not a homomorphism at ({0}, {1})")]
    ActionNotHomomorphism(usize, usize),
    #[error("cochain has {found} values, expected {expected}")]
    CochainShape { expected: usize, found: usize },
    #[error("cochain value out of range")]
    ValueOutOfRange,
    #[error("cochain is not normalized")]
    NotNormalized,
    #[error("cochains are over different groups or modules")]
    Mismatch,
    #[error("associators need a cyclic coefficient group with trivial action")]
    NotTrivialCyclic,
    #[error("pentagon-valid associators differ from 3-cocycles")]
    BijectionFailure,
    #[error("candidate space of {candidates} exceeds the limit of {limit}")]
    SizeLimit { candidates: u128, limit: u128 },
}

fn size_check(limit: SearchLimit, candidates: u128) -> Result<(), CohomologyError> {
    limit
        .check(candidates)
        .map_err(|e| CohomologyError::SizeLimit { candidates: e.candidates, limit: e.limit })
}

/// `A = ⊕ Z/d_i` with `G` acting through integer matrices (column `j` is
/// the image of the `j`-th generator). Elements are indexed in mixed radix,
/// first coordinate most significant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoefficientModule {
    g: GroupRef,
    orders: Vec<usize>,
    action: Vec<Vec<Vec<i64>>>,
    size: usize,
    /// `act[x][a]` = index of `x · a`
    act: Vec<Vec<usize>>,
}

impl CoefficientModule {
    pub fn new(
        g: GroupRef,
        orders: Vec<usize>,
        action: Option<Vec<Vec<Vec<i64>>>>,
    ) -> Result<Self, CohomologyError> {
        if orders.contains(&0) {
            return Err(CohomologyError::ZeroOrder);
        }
        let size = orders
            .iter()
            .try_fold(1usize, |acc, &d| acc.checked_mul(d))
            .filter(|&s| s <= u32::MAX as usize)
            .ok_or(CohomologyError::TooLarge)?;
        let r = orders.len();
        let identity: Vec<Vec<i64>> =
            (0..r).map(|i| (0..r).map(|j| i64::from(i == j)).collect()).collect();
        let action = action.unwrap_or_else(|| vec![identity.clone(); g.order()]);
        if action.len() != g.order() {
            return Err(CohomologyError::ActionLength { expected: g.order(), found: action.len() });
        }
        for (x, m) in action.iter().enumerate() {
            if m.len() != r || m.iter().any(|row| row.len() != r) {
                return Err(CohomologyError::ActionShape(x, r));
            }
            // generator j has order d_j, so its image must be killed by d_j
            for i in 0..r {
                for j in 0..r {
                    if (m[i][j] as i128 * orders[j] as i128).rem_euclid(orders[i] as i128) != 0 {
                        return Err(CohomologyError::ActionNotWellDefined(x));
                    }
                }
            }
        }
        let mut module = CoefficientModule { g, orders, action, size, act: Vec::new() };
        module.act = (0..module.g.order())
            .map(|x| {
                (0..size)
                    .map(|a| {
                        let v = module.decode(a);
                        let image: Vec<i64> = (0..r)
                            .map(|i| (0..r).map(|j| module.action[x][i][j] * v[j] as i64).sum())
                            .collect();
                        module.encode(&image)
                    })
                    .collect()
            })
            .collect();
        for x in module.g.elements() {
            let mut seen = vec![false; size];
            for &b in &module.act[x] {
                seen[b] = true;
            }
            let additive = (0..size).all(|a| {
                (0..size).all(|b| module.act[x][module.add(a, b)] == module.add(module.act[x][a], module.act[x][b]))
            });
            if !additive || seen.contains(&false) {
                return Err(CohomologyError::ActionNotAutomorphism(x));
            }
        }
        if module.act[0].iter().enumerate().any(|(a, &b)| a != b) {
            return Err(CohomologyError::ActionNotNormalized);
        }
        let g = module.g.clone();
        for x in g.elements() {
            for y in g.elements() {
                let xy = g.mul(x, y);
                if (0..size).any(|a| module.act[xy][a] != module.act[x][module.act[y][a]]) {
                    return Err(CohomologyError::ActionNotHomomorphism(x, y));
                }
            }
        }
        Ok(module)
    }

    pub fn trivial(g: GroupRef, orders: Vec<usize>) -> Result<Self, CohomologyError> {
        Self::new(g, orders, None)
    }

    pub fn group(&self) -> &GroupRef {
        &self.g
    }

    pub fn orders(&self) -> &[usize] {
        &self.orders
    }

    pub fn action_matrix(&self, x: usize) -> &[Vec<i64>] {
        &self.action[x]
    }

    /// `|A|`
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn has_trivial_action(&self) -> bool {
        self.act.iter().all(|row| row.iter().enumerate().all(|(a, &b)| a == b))
    }

    pub fn decode(&self, mut a: usize) -> Vec<usize> {
        let mut v = vec![0; self.orders.len()];
        for (slot, &d) in v.iter_mut().zip(&self.orders).rev() {
            *slot = a % d;
            a /= d;
        }
        v
    }

    /// Index of the element with (arbitrary integer) coordinates `v`.
    pub fn encode(&self, v: &[i64]) -> usize {
        v.iter()
            .zip(&self.orders)
            .fold(0, |acc, (&c, &d)| acc * d + c.rem_euclid(d as i64) as usize)
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        let (x, y) = (self.decode(a), self.decode(b));
        let sum: Vec<i64> = x.iter().zip(&y).map(|(p, q)| (p + q) as i64).collect();
        self.encode(&sum)
    }

    pub fn neg(&self, a: usize) -> usize {
        let v: Vec<i64> = self.decode(a).iter().map(|&c| -(c as i64)).collect();
        self.encode(&v)
    }

    pub fn scale(&self, k: i64, a: usize) -> usize {
        let v: Vec<i64> = self.decode(a).iter().map(|&c| k * c as i64).collect();
        self.encode(&v)
    }

    /// `x · a`
    pub fn act(&self, x: usize, a: usize) -> usize {
        self.act[x][a]
    }
}

/// Flat index of a tuple of group elements.
fn tuple_index(k: usize, tuple: &[usize]) -> usize {
    tuple.iter().fold(0, |acc, &x| acc * k + x)
}

fn tuple_of(k: usize, n: usize, mut index: usize) -> Vec<usize> {
    let mut t = vec![0; n];
    for slot in t.iter_mut().rev() {
        *slot = index % k;
        index /= k;
    }
    t
}

/// Tuples of non-identity elements, lexicographic.
fn free_tuples(k: usize, n: usize) -> Vec<Vec<usize>> {
    let count = (k - 1).pow(n as u32);
    (0..count)
        .map(|mut i| {
            let mut t = vec![0; n];
            for slot in t.iter_mut().rev() {
                *slot = i % (k - 1) + 1;
                i /= k - 1;
            }
            t
        })
        .collect()
}

/// The face terms of the bar differential applied at `(g_1, …, g_{n+1})`:
/// `(sign, acts, tuple)` meaning `sign · (g_1 if acts) · c(tuple)`.
fn bar_terms(g: &crate::FiniteGroup, args: &[usize]) -> Vec<(i64, bool, Vec<usize>)> {
    let n = args.len() - 1;
    let mut terms = Vec::with_capacity(n + 2);
    terms.push((1, true, args[1..].to_vec()));
    for i in 1..=n {
        let mut t = Vec::with_capacity(n);
        t.extend_from_slice(&args[..i - 1]);
        t.push(g.mul(args[i - 1], args[i]));
        t.extend_from_slice(&args[i + 1..]);
        terms.push((if i % 2 == 0 { 1 } else { -1 }, false, t));
    }
    terms.push((if (n + 1).is_multiple_of(2) { 1 } else { -1 }, false, args[..n].to_vec()));
    terms
}

/// A normalized `n`-cochain `G^n → A`, stored as a full table of element
/// indices at `tuple_index`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cochain {
    degree: usize,
    module: Arc<CoefficientModule>,
    values: Vec<usize>,
}

impl Cochain {
    pub fn new(degree: usize, module: Arc<CoefficientModule>, values: Vec<usize>) -> Result<Self, CohomologyError> {
        let k = module.g.order();
        let expected = k.pow(degree as u32);
        if values.len() != expected {
            return Err(CohomologyError::CochainShape { expected, found: values.len() });
        }
        if values.iter().any(|&v| v >= module.size) {
            return Err(CohomologyError::ValueOutOfRange);
        }
        let normalized = (0..expected).all(|i| values[i] == 0 || !tuple_of(k, degree, i).contains(&0));
        if !normalized {
            return Err(CohomologyError::NotNormalized);
        }
        Ok(Cochain { degree, module, values })
    }

    pub fn zero(degree: usize, module: Arc<CoefficientModule>) -> Self {
        let values = vec![0; module.g.order().pow(degree as u32)];
        Cochain { degree, module, values }
    }

    /// Builds the cochain from its values on tuples of non-identity
    /// elements, listed lexicographically.
    pub fn from_free_values(degree: usize, module: Arc<CoefficientModule>, free: &[usize]) -> Self {
        let k = module.g.order();
        let mut values = vec![0; k.pow(degree as u32)];
        for (t, &v) in free_tuples(k, degree).iter().zip(free) {
            values[tuple_index(k, t)] = v;
        }
        Cochain { degree, module, values }
    }

    /// Values on tuples of non-identity elements, lexicographic.
    pub fn free_values(&self) -> Vec<usize> {
        let k = self.module.g.order();
        free_tuples(k, self.degree).iter().map(|t| self.values[tuple_index(k, t)]).collect()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn module(&self) -> &Arc<CoefficientModule> {
        &self.module
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn at(&self, args: &[usize]) -> usize {
        self.values[tuple_index(self.module.g.order(), args)]
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|&v| v == 0)
    }

    pub fn add(&self, other: &Cochain) -> Result<Cochain, CohomologyError> {
        if self.degree != other.degree || self.module != other.module {
            return Err(CohomologyError::Mismatch);
        }
        let values = self.values.iter().zip(&other.values).map(|(&a, &b)| self.module.add(a, b)).collect();
        Ok(Cochain { degree: self.degree, module: self.module.clone(), values })
    }
}

/// `(dc)(g_1, …, g_{n+1}) = g_1·c(g_2, …) + Σ (−1)^i c(…, g_i g_{i+1}, …)
/// + (−1)^{n+1} c(g_1, …, g_n)`.
pub fn coboundary(c: &Cochain) -> Cochain {
    let m = &c.module;
    let g = &m.g;
    let k = g.order();
    let n = c.degree;
    let values = (0..k.pow(n as u32 + 1))
        .map(|i| {
            let args = tuple_of(k, n + 1, i);
            if args.contains(&0) {
                return 0;
            }
            bar_terms(g, &args).into_iter().fold(0, |acc, (sign, acts, t)| {
                let mut v = c.at(&t);
                if acts {
                    v = m.act(args[0], v);
                }
                if sign < 0 {
                    v = m.neg(v);
                }
                m.add(acc, v)
            })
        })
        .collect();
    Cochain { degree: n + 1, module: c.module.clone(), values }
}

/// `H^n` with the orders of the cocycle and coboundary groups.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CohomologyGroup {
    pub degree: usize,
    /// Ascending, each dividing the next; empty for the trivial group.
    pub invariant_factors: Vec<Int>,
    pub cocycle_count: Int,
    pub coboundary_count: Int,
}

impl CohomologyGroup {
    pub fn order(&self) -> Int {
        self.invariant_factors.iter().product()
    }

    /// `0`, or summands like `Z/2 ⊕ Z/4`.
    pub fn render(&self) -> String {
        if self.invariant_factors.is_empty() {
            "0".to_string()
        } else {
            let parts: Vec<String> = self.invariant_factors.iter().map(|d| format!("Z/{d}")).collect();
            parts.join(" ⊕ ")
        }
    }
}

/// Integer lift of the normalized coboundary `C^n → C^{n+1}` in the free
/// coordinates `(tuple, component)`.
fn coboundary_matrix(m: &CoefficientModule, n: usize) -> IntMatrix {
    let g = &m.g;
    let k = g.order();
    let r = m.orders.len();
    let sources = free_tuples(k, n);
    let targets = free_tuples(k, n + 1);
    let mut position = vec![usize::MAX; k.pow(n as u32)];
    for (i, t) in sources.iter().enumerate() {
        position[tuple_index(k, t)] = i;
    }
    let mut d = IntMatrix::zeros(targets.len() * r, sources.len() * r);
    for (u, args) in targets.iter().enumerate() {
        for (sign, acts, t) in bar_terms(g, args) {
            if t.contains(&0) {
                continue;
            }
            let s = position[tuple_index(k, &t)];
            for i in 0..r {
                for j in 0..r {
                    let coefficient = if acts { m.action[args[0]][i][j] } else { i64::from(i == j) };
                    if coefficient != 0 {
                        d[(u * r + i, s * r + j)] += BigInt::from(sign * coefficient);
                    }
                }
            }
        }
    }
    d
}

fn relations(m: &CoefficientModule, n: usize) -> IntMatrix {
    let k = m.g.order();
    let r = m.orders.len();
    let count = (k - 1).pow(n as u32) * r;
    let mut rel = IntMatrix::zeros(count, count);
    for i in 0..count {
        rel[(i, i)] = BigInt::from(m.orders[i % r]);
    }
    rel
}

fn bigint_power(base: usize, exp: usize) -> Int {
    num_traits::pow(BigInt::from(base), exp)
}

/// `H^n(G, A)` via Smith normal form over the integers.
///
/// With `C^n = Z^{m_n} / R_n`, a lift `x` is a cocycle iff `D_n x` vanishes
/// modulo the order of each coordinate. Scaling row `i` by `e / o_i`, for
/// `e` the exponent of `A`, turns this into one congruence mod `e`; from the
/// Smith form `D' = U⁻¹ S V⁻¹` the cocycle lattice has basis
/// `V · diag(e / gcd(s_i, e))`. The coboundary lattice is spanned by
/// `D_{n-1}` and `R_n`, and `H^n` is the cokernel of its coordinates.
pub fn cohomology_group(n: usize, module: &CoefficientModule) -> CohomologyGroup {
    let k = module.g.order();
    let r = module.orders.len();
    let free = (k - 1).pow(n as u32);
    let m_n = free * r;
    let cochain_count = bigint_power(module.size, free);
    if m_n == 0 {
        return CohomologyGroup {
            degree: n,
            invariant_factors: Vec::new(),
            cocycle_count: Int::one(),
            coboundary_count: Int::one(),
        };
    }
    let exponent = module.orders.iter().fold(Int::one(), |acc, &o| acc.lcm(&BigInt::from(o)));
    let mut scaled = coboundary_matrix(module, n);
    for row in 0..scaled.rows() {
        let factor = &exponent / BigInt::from(module.orders[row % r]);
        for c in 0..m_n {
            if !scaled[(row, c)].is_zero() {
                scaled[(row, c)] = &scaled[(row, c)] * &factor;
            }
        }
    }
    let (snf, v_inv) = smith_column_transform(&scaled);
    let scale: Vec<Int> = (0..m_n)
        .map(|i| if i < snf.rank { &exponent / snf.d[(i, i)].gcd(&exponent) } else { Int::one() })
        .collect();
    let index: Int = scale.iter().product();
    let mut generators: Vec<Vec<Int>> = Vec::new();
    if n > 0 {
        let d_prev = coboundary_matrix(module, n - 1);
        generators.extend((0..d_prev.cols()).map(|c| d_prev.column(c)));
    }
    let rel = relations(module, n);
    generators.extend((0..rel.cols()).map(|c| rel.column(c)));
    let coordinates: Vec<Vec<Int>> = generators
        .iter()
        .map(|b| {
            v_inv
                .mul_vec(b)
                .into_iter()
                .zip(&scale)
                .map(|(y, c)| {
                    let (q, rem) = y.div_rem(c);
                    debug_assert!(rem.is_zero(), "coboundaries are cocycles");
                    q
                })
                .collect()
        })
        .collect();
    let quotient = cokernel(&IntMatrix::from_columns(m_n, &coordinates));
    debug_assert_eq!(quotient.free_rank, 0);
    let cocycle_count = cochain_count / index;
    let order = quotient.torsion_order();
    CohomologyGroup {
        degree: n,
        coboundary_count: &cocycle_count / &order,
        cocycle_count,
        invariant_factors: quotient.torsion,
    }
}

/// All normalized `n`-cochains, in lexicographic order of their free values.
pub fn enumerate_cochains(
    n: usize,
    module: &Arc<CoefficientModule>,
    limit: SearchLimit,
) -> Result<Vec<Cochain>, CohomologyError> {
    let k = module.g.order();
    let free = (k - 1).pow(n as u32);
    let count = power(module.size, free);
    size_check(limit, count)?;
    Ok((0..count as usize)
        .into_par_iter()
        .map(|mut code| {
            let mut values = vec![0; free];
            for slot in values.iter_mut().rev() {
                *slot = code % module.size;
                code /= module.size;
            }
            Cochain::from_free_values(n, module.clone(), &values)
        })
        .collect())
}

/// The same invariants as [`cohomology_group`], by enumerating cochains.
/// Invariant factors are recovered from the sizes of the `p^k`-torsion
/// subgroups `{z : p^k z ∈ B}/B`.
pub fn cohomology_brute_force(
    n: usize,
    module: &Arc<CoefficientModule>,
    limit: SearchLimit,
) -> Result<CohomologyGroup, CohomologyError> {
    let k = module.g.order();
    let total = power(module.size, (k - 1).pow(n as u32))
        .saturating_add(if n > 0 { power(module.size, (k - 1).pow(n as u32 - 1)) } else { 0 });
    size_check(limit, total)?;
    let cocycles: Vec<Vec<usize>> = enumerate_cochains(n, module, limit)?
        .into_par_iter()
        .filter(|c| coboundary(c).is_zero())
        .map(|c| c.free_values())
        .collect();
    let coboundaries: HashSet<Vec<usize>> = if n == 0 {
        HashSet::from([vec![0]])
    } else {
        enumerate_cochains(n - 1, module, limit)?
            .par_iter()
            .map(|c| coboundary(c).free_values())
            .collect()
    };
    let order = cocycles.len() / coboundaries.len();
    let torsion_size = |multiple: i64| {
        cocycles
            .iter()
            .filter(|z| {
                let scaled: Vec<usize> = z.iter().map(|&a| module.scale(multiple, a)).collect();
                coboundaries.contains(&scaled)
            })
            .count()
            / coboundaries.len()
    };
    let mut factors: Vec<BigInt> = Vec::new();
    let mut rest = order;
    let mut p = 2;
    while rest > 1 {
        if rest.is_multiple_of(p) {
            while rest.is_multiple_of(p) {
                rest /= p;
            }
            // ranks[j] = number of cyclic p-factors of order ≥ p^{j+1}
            let mut ranks = Vec::new();
            let (mut previous, mut q) = (1, p);
            loop {
                let size = torsion_size(q as i64);
                if size == previous {
                    break;
                }
                ranks.push((size / previous).ilog(p) as usize);
                previous = size;
                q *= p;
            }
            // exponents, largest first
            let mut exponents = Vec::new();
            for (j, &r) in ranks.iter().enumerate().rev() {
                let exact = r - ranks.get(j + 1).copied().unwrap_or(0);
                exponents.extend(std::iter::repeat_n(j as u32 + 1, exact));
            }
            if factors.len() < exponents.len() {
                factors.resize(exponents.len(), BigInt::one());
            }
            for (f, e) in factors.iter_mut().zip(exponents) {
                *f *= BigInt::from(p).pow(e);
            }
        }
        p += 1;
    }
    factors.reverse();
    Ok(CohomologyGroup {
        degree: n,
        invariant_factors: factors,
        cocycle_count: BigInt::from(cocycles.len()),
        coboundary_count: BigInt::from(coboundaries.len()),
    })
}

/// Result of [`associators`].
#[derive(Debug, Clone)]
pub struct AssociatorReport {
    /// Normalized 3-cochains examined.
    pub candidates: u128,
    /// Those passing every monoidal check, pentagon included.
    pub associators: Vec<Cochain>,
    /// Associators modulo 3-coboundaries.
    pub class_count: usize,
}

/// Enumerates normalized 3-cochains `α` with values in `Z/m` and keeps
/// those for which `α(a, b, c)` as associator on the linearized discrete
/// categorification passes the monoidal checks. Fails with
/// [`CohomologyError::BijectionFailure`] unless these are exactly the
/// 3-cocycles.
pub fn associators(module: &Arc<CoefficientModule>, limit: SearchLimit) -> Result<AssociatorReport, CohomologyError> {
    if module.orders.len() > 1 || !module.has_trivial_action() {
        return Err(CohomologyError::NotTrivialCyclic);
    }
    let g = module.g.clone();
    let k = g.order();
    let units = module.size;
    let free3 = (k - 1).pow(3);
    let candidates = power(units, free3);
    size_check(limit, candidates.saturating_add(power(units, (k - 1).pow(2))))?;
    let (_, base) = linearized_discrete(&g, units);
    let results: Vec<(Cochain, bool, bool)> = enumerate_cochains(3, module, limit)?
        .into_par_iter()
        .map(|alpha| {
            let table = (0..k * k * k)
                .map(|i| {
                    let (a, b, c) = (i / (k * k), i / k % k, i % k);
                    g.mul(g.mul(a, b), c) * units + alpha.values[i]
                })
                .collect();
            let pentagon = check_monoidal(&base.clone().with_associator(table));
            let cocycle = coboundary(&alpha).is_zero();
            (alpha, pentagon, cocycle)
        })
        .collect();
    if results.iter().any(|(_, pentagon, cocycle)| pentagon != cocycle) {
        return Err(CohomologyError::BijectionFailure);
    }
    let associators: Vec<Cochain> = results.into_iter().filter(|r| r.1).map(|r| r.0).collect();
    let coboundaries: HashSet<Vec<usize>> = enumerate_cochains(2, module, limit)?
        .par_iter()
        .map(|c| coboundary(c).values)
        .collect();
    Ok(AssociatorReport {
        candidates,
        class_count: associators.len() / coboundaries.len(),
        associators,
    })
}

/// Invariant factors of the abelian group with the given cyclic orders,
/// as machine integers.
pub fn invariant_factors_of(orders: &[usize]) -> Vec<usize> {
    let orders: Vec<Int> = orders.iter().map(|&d| BigInt::from(d)).collect();
    crate::linalg::normalize_cyclic_orders(&orders)
        .into_iter()
        .map(|d| d.to_usize().expect("small"))
        .collect()
}

/// Cyclic orders of a finite abelian group given by its elements' orders:
/// the invariant factors, found by counting `p^k`-torsion.
pub fn abelian_type(g: &crate::FiniteGroup) -> Option<Vec<usize>> {
    if !g.is_abelian() {
        return None;
    }
    let n = g.order();
    let mut factors: Vec<usize> = Vec::new();
    let mut rest = n;
    let mut p = 2;
    while rest > 1 {
        if rest.is_multiple_of(p) {
            while rest.is_multiple_of(p) {
                rest /= p;
            }
            let torsion = |q: usize| g.elements().filter(|&x| q.is_multiple_of(g.element_order(x))).count();
            let mut ranks = Vec::new();
            let (mut previous, mut q) = (1, p);
            loop {
                let size = torsion(q);
                if size == previous {
                    break;
                }
                ranks.push((size / previous).ilog(p) as usize);
                previous = size;
                q *= p;
            }
            let mut exponents = Vec::new();
            for (j, &r) in ranks.iter().enumerate().rev() {
                let exact = r - ranks.get(j + 1).copied().unwrap_or(0);
                exponents.extend(std::iter::repeat_n(j as u32 + 1, exact));
            }
            if factors.len() < exponents.len() {
                factors.resize(exponents.len(), 1);
            }
            for (f, e) in factors.iter_mut().zip(exponents) {
                *f *= p.pow(e);
            }
        }
        p += 1;
    }
    factors.reverse();
    Some(factors)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::FiniteGroup;

    fn module(g: FiniteGroup, orders: Vec<usize>) -> Arc<CoefficientModule> {
        Arc::new(CoefficientModule::trivial(Arc::new(g), orders).unwrap())
    }

    fn ints(v: &[u32]) -> Vec<Int> {
        v.iter().map(|&d| BigInt::from(d)).collect()
    }

    #[test]
    fn coboundary_examples() {
        let m = module(FiniteGroup::cyclic(2), vec![2]);
        let gamma = Cochain::from_free_values(1, m.clone(), &[1]);
        assert_eq!(coboundary(&gamma).at(&[1, 1]), 0);
        assert!(coboundary(&Cochain::zero(2, m)).is_zero());
    }

    #[test]
    fn d_squared_vanishes() {
        let m = module(FiniteGroup::cyclic(4), vec![2]);
        for n in 0..3 {
            for c in enumerate_cochains(n, &m, SearchLimit::default()).unwrap() {
                assert!(coboundary(&coboundary(&c)).is_zero());
            }
        }
    }

    #[test]
    fn cohomology_examples() {
        let z2z2 = module(FiniteGroup::cyclic(2), vec![2]);
        assert_eq!(cohomology_group(2, &z2z2).invariant_factors, ints(&[2]));
        assert_eq!(cohomology_group(3, &z2z2).invariant_factors, ints(&[2]));
        let z3z2 = module(FiniteGroup::cyclic(3), vec![2]);
        assert!(cohomology_group(2, &z3z2).invariant_factors.is_empty());
        let z3z3 = module(FiniteGroup::cyclic(3), vec![3]);
        assert_eq!(cohomology_group(2, &z3z3).invariant_factors, ints(&[3]));
        // H^0 = A^G, H^1 = Hom(G, A) for trivial action
        assert_eq!(cohomology_group(0, &z3z3).invariant_factors, ints(&[3]));
        let k4 = FiniteGroup::cyclic(2).direct_product(&FiniteGroup::cyclic(2));
        assert_eq!(cohomology_group(1, &module(k4.clone(), vec![2])).invariant_factors, ints(&[2, 2]));
        assert_eq!(cohomology_group(2, &module(k4, vec![2])).invariant_factors, ints(&[2, 2, 2]));
    }

    #[test]
    fn sign_action_on_z3() {
        // Z2 acting on Z3 by negation: H^2 vanishes (coprime), H^1 too
        let g = Arc::new(FiniteGroup::cyclic(2));
        let m = CoefficientModule::new(g, vec![3], Some(vec![vec![vec![1]], vec![vec![-1]]])).unwrap();
        assert!(cohomology_group(1, &m).invariant_factors.is_empty());
        assert!(cohomology_group(2, &m).invariant_factors.is_empty());
        // Z2 acting on Z4 by negation: H^2(Z2, Z4^-) = A^G / N A = Z2 / 0
        let g = Arc::new(FiniteGroup::cyclic(2));
        let m = CoefficientModule::new(g, vec![4], Some(vec![vec![vec![1]], vec![vec![-1]]])).unwrap();
        assert_eq!(cohomology_group(2, &m).invariant_factors, ints(&[2]));
        assert_eq!(cohomology_group(1, &m).invariant_factors, ints(&[2]));
    }

    #[test]
    fn module_validation() {
        let g = Arc::new(FiniteGroup::cyclic(2));
        assert_eq!(
            CoefficientModule::new(g.clone(), vec![2, 4], Some(vec![vec![vec![1, 0], vec![0, 1]]; 3])),
            Err(CohomologyError::ActionLength { expected: 2, found: 3 })
        );
        // sending a Z/2 generator to an element of order 4 is not defined
        let bad = vec![vec![vec![1, 0], vec![0, 1]], vec![vec![1, 0], vec![1, 1]]];
        assert_eq!(
            CoefficientModule::new(g.clone(), vec![2, 4], Some(bad)),
            Err(CohomologyError::ActionNotWellDefined(1))
        );
        let not_aut = vec![vec![vec![1]], vec![vec![2]]];
        assert_eq!(
            CoefficientModule::new(g.clone(), vec![4], Some(not_aut)),
            Err(CohomologyError::ActionNotAutomorphism(1))
        );
        let z3 = Arc::new(FiniteGroup::cyclic(3));
        let not_hom = vec![vec![vec![1]], vec![vec![-1]], vec![vec![1]]];
        assert!(matches!(
            CoefficientModule::new(z3, vec![3], Some(not_hom)),
            Err(CohomologyError::ActionNotHomomorphism(..))
        ));
    }

    #[test]
    fn brute_force_agrees() {
        let lim = SearchLimit::default();
        let cases = [
            (FiniteGroup::cyclic(2), vec![2]),
            (FiniteGroup::cyclic(2), vec![4]),
            (FiniteGroup::cyclic(3), vec![3]),
            (FiniteGroup::cyclic(4), vec![2]),
            (FiniteGroup::cyclic(2).direct_product(&FiniteGroup::cyclic(2)), vec![2]),
        ];
        for (g, orders) in cases {
            let m = module(g, orders);
            for n in 0..3 {
                assert_eq!(cohomology_group(n, &m), cohomology_brute_force(n, &m, lim).unwrap(), "degree {n}");
            }
        }
    }

    #[test]
    fn associator_examples() {
        let lim = SearchLimit::default();
        let r = associators(&module(FiniteGroup::cyclic(2), vec![2]), lim).unwrap();
        assert_eq!((r.associators.len(), r.class_count), (2, 2));
        let r = associators(&module(FiniteGroup::cyclic(2), vec![3]), lim).unwrap();
        assert_eq!((r.associators.len(), r.class_count), (1, 1));
        assert!(r.associators[0].is_zero());
        let r = associators(&module(FiniteGroup::cyclic(3), vec![3]), lim).unwrap();
        assert_eq!(r.class_count, 3);
    }

    #[test]
    fn abelian_type_examples() {
        assert_eq!(abelian_type(&FiniteGroup::cyclic(6)), Some(vec![6]));
        let k4 = FiniteGroup::cyclic(2).direct_product(&FiniteGroup::cyclic(2));
        assert_eq!(abelian_type(&k4), Some(vec![2, 2]));
        assert_eq!(abelian_type(&FiniteGroup::symmetric(3)), None);
        assert_eq!(abelian_type(&FiniteGroup::trivial()), Some(vec![]));
        assert_eq!(invariant_factors_of(&[2, 3]), vec![6]);
    }
}
