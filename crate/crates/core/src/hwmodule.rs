//! Highest weight module descriptors and their weight sets and characters.
//!
//! A module is described by its highest weight, its family and its
//! integrability set `J(V)`, the largest `J` for which the weights are
//! stable under `W_J`. Weight sets are computed three independent ways and
//! cross-checked before being returned.

use crate::error::{Error, Result};
use crate::polyhedron::hull_of_module;
use crate::rational::{q, Q};
use crate::rootsys::RootSystem;
use crate::subset::SubsetJ;
use crate::weightlat::{depth_below, dot_action, j_lambda, leq, Weight};

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};
use std::sync::Mutex;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Verma,
    Parabolic(SubsetJ),
    Simple,
    /// A quotient known only through its integrability set.
    Generic(SubsetJ),
}

impl Family {
    /// Parses `verma`, `simple`, `parabolic:1,2` or `generic:2` (one-based).
    pub fn parse(s: &str, rank: usize) -> Result<Family> {
        let s = s.trim();
        let subset = |list: &str| -> Result<SubsetJ> {
            let mut j = SubsetJ::empty();
            for part in list.split(',').map(str::trim).filter(|p| !p.is_empty()) {
                let i: usize = part
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad index {part:?}")))?;
                if i == 0 || i > rank {
                    return Err(Error::Parse(format!("index {i} outside 1..={rank}")));
                }
                j = j.with(i - 1);
            }
            Ok(j)
        };
        match s {
            "verma" => Ok(Family::Verma),
            "simple" => Ok(Family::Simple),
            _ => {
                if let Some(rest) = s.strip_prefix("parabolic:") {
                    Ok(Family::Parabolic(subset(rest)?))
                } else if let Some(rest) = s.strip_prefix("generic:") {
                    Ok(Family::Generic(subset(rest)?))
                } else if s == "parabolic" {
                    Ok(Family::Parabolic(SubsetJ::empty()))
                } else {
                    Err(Error::Parse(format!("unknown module family {s:?}")))
                }
            }
        }
    }

    pub fn name(&self) -> String {
        let list = |j: &SubsetJ| {
            j.one_based()
                .iter()
                .map(|i| i.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        match self {
            Family::Verma => "verma".into(),
            Family::Simple => "simple".into(),
            Family::Parabolic(j) => format!("parabolic:{}", list(j)),
            Family::Generic(j) => format!("generic:{}", list(j)),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HWModuleDesc {
    pub lambda: Weight,
    pub family: Family,
    /// Integrability set `J(V)`.
    pub jv: SubsetJ,
    pub j_lambda: SubsetJ,
    /// Whether the weights are determined by `lambda` and `J(V)` alone.
    pub weight_formula_valid: bool,
}

impl HWModuleDesc {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "lambda": self.lambda.to_json(),
            "family": self.family.name(),
            "j_lambda": self.j_lambda.one_based(),
            "j_v": self.jv.one_based(),
            "weight_formula_valid": self.weight_formula_valid,
        })
    }

    fn require_formula(&self) -> Result<()> {
        if !self.weight_formula_valid {
            return Err(Error::Unsupported(format!(
                "the weights of a generic quotient with J_lambda \\ J(V) = {} are not \
                 determined by lambda and J(V); a weight formula needs at most one such index",
                self.j_lambda.difference(self.jv)
            )));
        }
        Ok(())
    }
}

pub fn describe_module(rs: &RootSystem, lambda: &Weight, family: Family) -> Result<HWModuleDesc> {
    rs.check(lambda)?;
    let jl = j_lambda(lambda);
    let check_sub = |j: SubsetJ| -> Result<()> {
        if let Some(i) = j.iter().find(|&i| !jl.contains(i)) {
            return Err(Error::Precondition(format!(
                "index {} is not in J_lambda = {jl}: lambda(h_{}) = {} is not a nonnegative integer",
                i + 1,
                i + 1,
                lambda.coords()[i]
            )));
        }
        if let Some(i) = j.iter().find(|&i| i >= rs.rank()) {
            return Err(Error::Precondition(format!("index {} out of range", i + 1)));
        }
        Ok(())
    };
    let (jv, valid) = match &family {
        Family::Verma => (SubsetJ::empty(), true),
        Family::Simple => (jl, true),
        Family::Parabolic(j) => {
            check_sub(*j)?;
            (*j, true)
        }
        Family::Generic(j) => {
            check_sub(*j)?;
            (*j, jl.difference(*j).len() <= 1)
        }
    };
    Ok(HWModuleDesc {
        lambda: lambda.clone(),
        family,
        jv,
        j_lambda: jl,
        weight_formula_valid: valid,
    })
}

/// A finite, sorted, duplicate-free set of weights.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightSet {
    weights: Vec<Weight>,
    /// Truncation depth `max ht(lambda - mu)`, if the set was sliced.
    pub depth: Option<usize>,
    /// Whether this is the complete weight set it describes.
    pub exact: bool,
}

impl WeightSet {
    pub fn new<I: IntoIterator<Item = Weight>>(it: I, depth: Option<usize>, exact: bool) -> Self {
        let set: BTreeSet<Weight> = it.into_iter().collect();
        WeightSet {
            weights: set.into_iter().collect(),
            depth,
            exact,
        }
    }

    pub fn exact<I: IntoIterator<Item = Weight>>(it: I) -> Self {
        Self::new(it, None, true)
    }

    pub fn weights(&self) -> &[Weight] {
        &self.weights
    }

    pub fn into_weights(self) -> Vec<Weight> {
        self.weights
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn contains(&self, w: &Weight) -> bool {
        self.weights.binary_search(w).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Weight> {
        self.weights.iter()
    }

    pub fn same_elements(&self, other: &WeightSet) -> bool {
        self.weights == other.weights
    }

    pub fn filter(&self, keep: impl Fn(&Weight) -> bool) -> WeightSet {
        WeightSet {
            weights: self.weights.iter().filter(|w| keep(w)).cloned().collect(),
            depth: self.depth,
            exact: self.exact,
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(self.weights.iter().map(Weight::to_json).collect())
    }
}

/// A truncated formal character: weights with positive multiplicities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormalCharacter {
    pub terms: BTreeMap<Weight, u128>,
    pub depth: usize,
}

impl FormalCharacter {
    pub fn multiplicity(&self, w: &Weight) -> u128 {
        self.terms.get(w).copied().unwrap_or(0)
    }

    pub fn dimension(&self) -> u128 {
        self.terms.values().sum()
    }
}

/// Nonnegative integer vectors of height at most `depth`, ordered by height
/// and then lexicographically.
pub fn lattice_below(rank: usize, depth: usize) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    for h in 0..=depth {
        let mut cur = vec![0i64; rank];
        compositions(&mut cur, 0, h as i64, &mut out);
    }
    out
}

fn compositions(cur: &mut Vec<i64>, pos: usize, left: i64, out: &mut Vec<Vec<i64>>) {
    if pos + 1 == cur.len() {
        cur[pos] = left;
        out.push(cur.clone());
        return;
    }
    if cur.is_empty() {
        return;
    }
    for v in (0..=left).rev() {
        cur[pos] = v;
        compositions(cur, pos + 1, left - v, out);
    }
    cur[pos] = 0;
}

fn supported_in(r: &[i64], j: SubsetJ) -> bool {
    r.iter().enumerate().all(|(i, &c)| c == 0 || j.contains(i))
}

/// Memoized Kostant partition function; the memo is a thread-safe cache.
pub struct KostantTable {
    roots: Vec<Vec<i64>>,
    memo: Mutex<HashMap<(Vec<i64>, usize), u128>>,
}

impl KostantTable {
    pub fn new(rs: &RootSystem) -> Self {
        let mut roots = rs.positive_roots().to_vec();
        roots.reverse();
        KostantTable {
            roots,
            memo: Mutex::new(HashMap::new()),
        }
    }

    /// Number of ways to write `beta` (simple-root coordinates) as a sum of
    /// positive roots.
    pub fn count(&self, beta: &[i64]) -> u128 {
        if beta.iter().any(|&c| c < 0) {
            return 0;
        }
        self.count_from(beta.to_vec(), 0)
    }

    fn count_from(&self, beta: Vec<i64>, k: usize) -> u128 {
        if beta.iter().all(|&c| c == 0) {
            return 1;
        }
        if k == self.roots.len() {
            return 0;
        }
        let key = (beta, k);
        if let Some(&v) = self.memo.lock().expect("memo lock").get(&key) {
            return v;
        }
        let (beta, _) = &key;
        let root = &self.roots[k];
        let mut total = 0u128;
        let mut cur = beta.clone();
        loop {
            total += self.count_from(cur.clone(), k + 1);
            for (c, r) in cur.iter_mut().zip(root) {
                *c -= r;
            }
            if cur.iter().any(|&c| c < 0) {
                break;
            }
        }
        self.memo.lock().expect("memo lock").insert(key, total);
        total
    }
}

/// The Kostant partition function at a weight `beta`, which must lie in the
/// root lattice.
pub fn kostant_partition(rs: &RootSystem, beta: &Weight) -> Result<u128> {
    rs.check(beta)?;
    let r = rs
        .to_root_ints(beta)
        .ok_or_else(|| Error::Precondition(format!("{beta} is not in the root lattice")))?;
    Ok(KostantTable::new(rs).count(&r))
}

/// Weights of the finite-dimensional simple `g_J`-module with highest weight
/// `mu`, as the smallest set containing `mu` that is saturated under the
/// root strings of `Phi_J`.
pub fn fd_simple_weights(rs: &RootSystem, j: SubsetJ, mu: &Weight) -> Result<WeightSet> {
    rs.check(mu)?;
    if let Some(i) = j
        .iter()
        .find(|&i| !crate::rational::is_nonneg_integer(&mu.coords()[i]))
    {
        return Err(Error::Precondition(format!(
            "mu(h_{}) = {} is not a nonnegative integer, so L_J(mu) is infinite",
            i + 1,
            mu.coords()[i]
        )));
    }
    let roots: Vec<(Weight, Q)> = rs
        .positive_roots_in(j)
        .iter()
        .map(|r| {
            let w = rs.root_to_weight(r);
            let n = rs.pairing(&w, &w);
            (w, n)
        })
        .collect();
    let mut seen: HashSet<Weight> = HashSet::new();
    seen.insert(mu.clone());
    let mut stack = vec![mu.clone()];
    while let Some(nu) = stack.pop() {
        for (beta, norm) in &roots {
            let k = q(2) * rs.pairing(&nu, beta) / norm;
            debug_assert!(k.is_integer());
            let k = k.to_integer();
            let step = if k > 0 { -1 } else { 1 };
            for t in 1..=k.abs() {
                let cand = &nu + &beta.scale(q(step * t));
                if seen.insert(cand.clone()) {
                    stack.push(cand);
                }
            }
        }
    }
    Ok(WeightSet::exact(seen))
}

/// The three weight-set computations, each sliced at height `depth`:
/// lattice points of the hull, the finite top minus sums of roots outside
/// `J(V)`, and the disjoint union of finite `g_{J(V)}`-modules.
pub fn weight_formulas(rs: &RootSystem, desc: &HWModuleDesc, depth: usize) -> Result<[WeightSet; 3]> {
    desc.require_formula()?;
    let lambda = &desc.lambda;
    let jv = desc.jv;
    let rank = rs.rank();
    let below = lattice_below(rank, depth);
    let in_depth = |w: &Weight| depth_below(rs, lambda, w).is_some_and(|h| h as usize <= depth);

    let poly = hull_of_module(rs, desc)?;
    let a = WeightSet::new(
        below
            .iter()
            .map(|b| lambda - &rs.root_to_weight(b))
            .filter(|mu| poly.contains(rs, mu)),
        Some(depth),
        false,
    );

    let top = fd_simple_weights(rs, jv, lambda)?;
    let outer: Vec<Vec<i64>> = rs
        .positive_roots()
        .iter()
        .filter(|r| !supported_in(r, jv))
        .cloned()
        .collect();
    let mut sums: BTreeSet<Vec<i64>> = BTreeSet::new();
    sums.insert(vec![0; rank]);
    let mut frontier = vec![vec![0i64; rank]];
    while let Some(s) = frontier.pop() {
        for r in &outer {
            let t: Vec<i64> = s.iter().zip(r).map(|(a, b)| a + b).collect();
            if t.iter().sum::<i64>() as usize <= depth && sums.insert(t.clone()) {
                frontier.push(t);
            }
        }
    }
    let b = WeightSet::new(
        top.iter()
            .flat_map(|nu| sums.iter().map(move |s| nu - &rs.root_to_weight(s)))
            .filter(|w| in_depth(w)),
        Some(depth),
        false,
    );

    let complement = rs.full().difference(jv);
    let mut pieces: Vec<Weight> = Vec::new();
    for m in below.iter().filter(|m| supported_in(m, complement)) {
        let base = lambda - &rs.root_to_weight(m);
        let piece = fd_simple_weights(rs, jv, &base)?;
        pieces.extend(piece.iter().filter(|w| in_depth(w)).cloned());
    }
    let total = pieces.len();
    let c = WeightSet::new(pieces, Some(depth), false);
    if c.len() != total {
        return Err(Error::Internal(
            "the finite g_J(V)-pieces of the weight set overlap".into(),
        ));
    }
    Ok([a, b, c])
}

/// Weights of the module down to height `depth`, computed by all three
/// formulas, which must agree.
pub fn module_weights(rs: &RootSystem, desc: &HWModuleDesc, depth: usize) -> Result<WeightSet> {
    let [a, b, c] = weight_formulas(rs, desc, depth)?;
    if !a.same_elements(&b) || !a.same_elements(&c) {
        return Err(Error::Internal(format!(
            "weight formulas disagree for {} with lambda = {} at depth {depth}: \
             hull {} / roots {} / levi {}",
            desc.family.name(),
            desc.lambda,
            a.len(),
            b.len(),
            c.len()
        )));
    }
    let mut out = a;
    if desc.jv == rs.full() {
        let full = fd_simple_weights(rs, rs.full(), &desc.lambda)?;
        out.exact = full.len() == out.len();
    }
    Ok(out)
}

/// `wt_J V = wt V  cap  (lambda - Z_+ Delta_J)`.
///
/// Exact when `J` lies in `J(V)`; otherwise sliced at `depth`.
pub fn wt_j(rs: &RootSystem, desc: &HWModuleDesc, j: SubsetJ, depth: usize) -> Result<WeightSet> {
    if j.is_subset(desc.jv) {
        return fd_simple_weights(rs, j, &desc.lambda);
    }
    let all = module_weights(rs, desc, depth)?;
    let lambda = &desc.lambda;
    let mut out = all.filter(|w| {
        rs.to_root_ints(&(lambda - w))
            .is_some_and(|r| supported_in(&r, j))
    });
    out.exact = false;
    Ok(out)
}

/// `ch M(lambda, J') = sum over W_J' of (-1)^l(w) ch M(w . lambda)`, sliced at
/// height `depth`. Simple modules are handled when the generalized Weyl
/// character hypothesis holds, with `J' = J_lambda`.
pub fn truncated_character(rs: &RootSystem, desc: &HWModuleDesc, depth: usize) -> Result<FormalCharacter> {
    let jp = match &desc.family {
        Family::Verma => SubsetJ::empty(),
        Family::Parabolic(j) => *j,
        Family::Simple => {
            if !check_wcf_hypothesis(rs, &desc.lambda)? {
                return Err(Error::Unsupported(format!(
                    "the linked weights below {} are not exactly W_J_lambda . lambda, \
                     so the alternating-sum character formula does not apply",
                    desc.lambda
                )));
            }
            desc.j_lambda
        }
        Family::Generic(_) => {
            return Err(Error::Unsupported(
                "characters of generic quotients are not determined by lambda and J(V)".into(),
            ))
        }
    };
    let lambda = &desc.lambda;
    let table = KostantTable::new(rs);
    let shifts: Vec<(i128, Vec<i64>)> = rs
        .parabolic_elements(jp)?
        .iter()
        .map(|w| {
            let shifted = dot_action(rs, w, lambda);
            let gamma = rs
                .to_root_ints(&(lambda - &shifted))
                .expect("dot action stays in the root lattice coset");
            (i128::from(w.sign(rs)), gamma)
        })
        .collect();
    let mut terms = BTreeMap::new();
    for beta in lattice_below(rs.rank(), depth) {
        let mut m: i128 = 0;
        for (sign, gamma) in &shifts {
            let rest: Vec<i64> = beta.iter().zip(gamma).map(|(a, b)| a - b).collect();
            m += sign * table.count(&rest) as i128;
        }
        if m < 0 {
            return Err(Error::Internal(format!(
                "negative multiplicity {m} at {}",
                lambda - &rs.root_to_weight(&beta)
            )));
        }
        if m > 0 {
            terms.insert(lambda - &rs.root_to_weight(&beta), m as u128);
        }
    }
    Ok(FormalCharacter { terms, depth })
}

/// Whether the linked weights below `lambda`, `{w . lambda <= lambda}`, are
/// exactly `W_J_lambda . lambda`.
pub fn check_wcf_hypothesis(rs: &RootSystem, lambda: &Weight) -> Result<bool> {
    rs.check(lambda)?;
    let rho = rs.rho();
    let shifted = lambda + &rho;
    let linked: BTreeSet<Weight> = rs
        .weyl_orbit(rs.full(), &shifted)?
        .into_iter()
        .map(|w| &w - &rho)
        .filter(|w| leq(rs, w, lambda))
        .collect();
    let expected: BTreeSet<Weight> = rs
        .weyl_orbit(j_lambda(lambda), &shifted)?
        .into_iter()
        .map(|w| &w - &rho)
        .collect();
    Ok(linked == expected)
}

/// Evidence that the weight formulas fail for the quotient of `M(lambda)`
/// by the submodule generated by `f_i^(a+1) f_j^(b+1) m_lambda`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CounterexampleRecord {
    pub mu_star: Weight,
    /// Dimension of `M(lambda)` at `mu_star`; when it is 1 the generator of
    /// the killed submodule spans that weight space.
    pub partition_count: u128,
    pub in_lattice: bool,
    pub in_hull: bool,
}

impl CounterexampleRecord {
    pub fn certifies_failure(&self) -> bool {
        self.partition_count == 1 && self.in_lattice && self.in_hull
    }
}

/// `mu* = s_i s_j . lambda` for commuting `i, j` in `J_lambda`.
pub fn counterexample_witness(rs: &RootSystem, lambda: &Weight, i: usize, j: usize) -> Result<CounterexampleRecord> {
    rs.check(lambda)?;
    if i == j || i >= rs.rank() || j >= rs.rank() {
        return Err(Error::Precondition("need two distinct valid indices".into()));
    }
    if rs.cartan()[i][j] != 0 {
        return Err(Error::Precondition(format!(
            "s_{} and s_{} do not commute: the nodes are adjacent",
            i + 1,
            j + 1
        )));
    }
    let jl = j_lambda(lambda);
    for k in [i, j] {
        if !jl.contains(k) {
            return Err(Error::Precondition(format!("index {} is not in J_lambda = {jl}", k + 1)));
        }
    }
    let w = crate::rootsys::WeylElement::from_word(vec![i, j]);
    let mu = dot_action(rs, &w, lambda);
    let expected = &(lambda - &rs.simple_root(i).scale(lambda.coords()[i] + q(1)))
        - &rs.simple_root(j).scale(lambda.coords()[j] + q(1));
    if mu != expected {
        return Err(Error::Internal("dot action disagrees with the closed form".into()));
    }
    let verma = describe_module(rs, lambda, Family::Verma)?;
    let hull = hull_of_module(rs, &verma)?;
    let beta = lambda - &mu;
    Ok(CounterexampleRecord {
        partition_count: kostant_partition(rs, &beta)?,
        in_lattice: crate::weightlat::in_root_lattice(rs, &beta),
        in_hull: hull.contains(rs, &mu),
        mu_star: mu,
    })
}

/// Roots `alpha` for which the module is `alpha`-finite:
/// `Phi+  union  Phi-_J(V)`, in simple-root coordinates.
pub fn fernando_parabolic(rs: &RootSystem, desc: &HWModuleDesc) -> Vec<Vec<i64>> {
    let mut out: Vec<Vec<i64>> = rs.positive_roots().to_vec();
    for r in rs.positive_roots_in(desc.jv) {
        out.push(r.iter().map(|c| -c).collect());
    }
    out.sort();
    out
}
