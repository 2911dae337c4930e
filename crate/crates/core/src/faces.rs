//! Weak faces of finite weight sets: bounded definition-level searches,
//! classification of the faces of weight sets, face equality and the
//! maximizer identities.

use crate::error::{Error, Result};
use crate::hwmodule::{fd_simple_weights, module_weights, wt_j, Family, HWModuleDesc, WeightSet};
use crate::polyhedron::{maximizer, shortlex_elements, FaceDescriptor};
use crate::rational::{common_denominator, q, Q};
use crate::rootsys::{RootSystem, WeylElement};
use crate::subset::SubsetJ;
use crate::weightlat::{dominant_conjugate, is_simply_regular, CoefficientGroup, FinSupportFn, Weight};
use num_traits::{Signed, Zero};
use std::collections::{BTreeMap, HashMap, HashSet};

pub const DEFAULT_BOUND: usize = 6;

/// A candidate `Y` inside a finite ambient set `X`.
#[derive(Clone, Debug)]
pub struct FaceQuery {
    pub x: Vec<Weight>,
    pub y: Vec<Weight>,
    pub coefficients: CoefficientGroup,
    /// Largest total `l(f)`, counted in units of the group generator.
    pub bound: usize,
}

impl FaceQuery {
    pub fn new(x: Vec<Weight>, y: Vec<Weight>, coefficients: CoefficientGroup, bound: usize) -> Result<Self> {
        if bound < 2 {
            return Err(Error::Precondition(format!("search bound {bound} is below 2")));
        }
        let mut x = x;
        x.sort();
        x.dedup();
        let mut y = y;
        y.sort();
        y.dedup();
        if let Some(w) = y.iter().find(|w| x.binary_search(w).is_err()) {
            return Err(Error::Precondition(format!("{w} is in Y but not in X")));
        }
        if let Some(r) = x.first().map(Weight::rank) {
            if x.iter().any(|w| w.rank() != r) {
                return Err(Error::Precondition("weights of different ranks".into()));
            }
        }
        Ok(FaceQuery { x, y, coefficients, bound })
    }

    pub fn from_sets(x: &WeightSet, y: &WeightSet, coefficients: CoefficientGroup, bound: usize) -> Result<Self> {
        Self::new(x.weights().to_vec(), y.weights().to_vec(), coefficients, bound)
    }

    fn rank(&self) -> usize {
        self.x.first().map_or(0, Weight::rank)
    }
}

/// A pair `f`, `g` with equal moments breaking the face condition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub f: FinSupportFn,
    pub g: FinSupportFn,
}

impl Witness {
    pub fn to_json(&self) -> serde_json::Value {
        let side = |h: &FinSupportFn| -> serde_json::Value {
            h.entries()
                .map(|(w, c)| serde_json::json!({ "fw": w.to_strings(), "coeff": c.to_string() }))
                .collect()
        };
        serde_json::json!({ "f": side(&self.f), "g": side(&self.g) })
    }
}

/// Outcome of a bounded search. A `true` result is certified only for
/// coefficient functions with `l(f) <= bound`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub result: bool,
    pub witness: Option<Witness>,
    pub bound: usize,
}

impl Verdict {
    pub fn to_json(&self) -> serde_json::Value {
        let mut v = serde_json::json!({ "result": self.result, "bound": self.bound });
        if let Some(w) = &self.witness {
            v["witness"] = w.to_json();
        }
        v
    }
}

/// Integer encoding of the points, scaled by a common denominator.
fn encode(points: &[Weight]) -> Vec<Vec<i64>> {
    let den = common_denominator(points.iter().flat_map(|w| w.coords().iter()));
    let d = Q::from_integer(den);
    points
        .iter()
        .map(|w| w.coords().iter().map(|c| (c * d).to_integer()).collect())
        .collect()
}

/// Calls `visit` on every multiset of size `k` drawn from `items`, as a
/// nondecreasing index list, together with its vector sum.
fn multisets<F: FnMut(&[usize], &[i64]) -> bool>(pts: &[Vec<i64>], items: &[usize], k: usize, dim: usize, visit: &mut F) -> bool {
    fn go<F: FnMut(&[usize], &[i64]) -> bool>(
        pts: &[Vec<i64>],
        items: &[usize],
        k: usize,
        start: usize,
        chosen: &mut Vec<usize>,
        sum: &mut Vec<i64>,
        visit: &mut F,
    ) -> bool {
        if chosen.len() == k {
            return visit(chosen, sum);
        }
        for pos in start..items.len() {
            let p = &pts[items[pos]];
            for (s, c) in sum.iter_mut().zip(p) {
                *s += c;
            }
            chosen.push(items[pos]);
            let stop = go(pts, items, k, pos, chosen, sum, visit);
            chosen.pop();
            for (s, c) in sum.iter_mut().zip(p) {
                *s -= c;
            }
            if stop {
                return true;
            }
        }
        false
    }
    go(pts, items, k, 0, &mut Vec::with_capacity(k), &mut vec![0; dim], visit)
}

fn to_fn(points: &[Weight], idx: &[usize], unit: Q) -> FinSupportFn {
    FinSupportFn::from_pairs(idx.iter().map(|&i| (points[i].clone(), unit)))
        .expect("positive coefficients")
}

/// Scaling between integer multiplicities and group elements. Rational and
/// real coefficients are cleared to integers, so only the discrete scale
/// matters for reporting.
fn unit(group: &CoefficientGroup) -> Q {
    group.generator().unwrap_or_else(|| q(1))
}

/// Bounded search for `f` on `X`, `g` on `Y` with `l(f) = l(g) > 0`, equal
/// moments and `supp f` not inside `Y`.
pub fn is_weak_face(query: &FaceQuery) -> Result<Verdict> {
    let x = &query.x;
    let in_y: Vec<bool> = x.iter().map(|w| query.y.binary_search(w).is_ok()).collect();
    let holds = Verdict { result: true, witness: None, bound: query.bound };
    if query.y.is_empty() || in_y.iter().all(|&b| b) {
        return Ok(holds);
    }
    let dim = query.rank();
    let pts = encode(x);
    let all: Vec<usize> = (0..x.len()).collect();
    let ys: Vec<usize> = (0..x.len()).filter(|&i| in_y[i]).collect();
    let u = unit(&query.coefficients);
    for k in 2..=query.bound {
        let mut sums: HashMap<Vec<i64>, Vec<usize>> = HashMap::new();
        multisets(&pts, &ys, k, dim, &mut |idx, s| {
            sums.entry(s.to_vec()).or_insert_with(|| idx.to_vec());
            false
        });
        let mut found = None;
        multisets(&pts, &all, k, dim, &mut |idx, s| {
            if idx.iter().any(|&i| !in_y[i]) {
                if let Some(g) = sums.get(s) {
                    found = Some((idx.to_vec(), g.clone()));
                    return true;
                }
            }
            false
        });
        if let Some((f, g)) = found {
            return Ok(Verdict {
                result: false,
                witness: Some(Witness { f: to_fn(x, &f, u), g: to_fn(x, &g, u) }),
                bound: query.bound,
            });
        }
    }
    Ok(holds)
}

/// Bounded search straight from the definition: equal moments must force
/// `l(g) <= l(f)`, with equality exactly when `supp f` lies in `Y`.
pub fn is_positive_weak_face(query: &FaceQuery) -> Result<Verdict> {
    let x = &query.x;
    let in_y: Vec<bool> = x.iter().map(|w| query.y.binary_search(w).is_ok()).collect();
    let dim = query.rank();
    let pts = encode(x);
    let all: Vec<usize> = (0..x.len()).collect();
    let ys: Vec<usize> = (0..x.len()).filter(|&i| in_y[i]).collect();
    let n = query.bound;
    let mut g_sums: HashMap<Vec<i64>, BTreeMap<usize, Vec<usize>>> = HashMap::new();
    for k in 1..=n {
        multisets(&pts, &ys, k, dim, &mut |idx, s| {
            g_sums
                .entry(s.to_vec())
                .or_default()
                .entry(k)
                .or_insert_with(|| idx.to_vec());
            false
        });
    }
    let u = unit(&query.coefficients);
    for m in 0..=n {
        let mut found = None;
        multisets(&pts, &all, m, dim, &mut |idx, s| {
            if let Some(by_len) = g_sums.get(s) {
                if let Some((_, g)) = by_len.range(m + 1..).next() {
                    found = Some((idx.to_vec(), g.clone()));
                    return true;
                }
                if idx.iter().any(|&i| !in_y[i]) {
                    if let Some(g) = by_len.get(&m) {
                        found = Some((idx.to_vec(), g.clone()));
                        return true;
                    }
                }
            }
            false
        });
        if let Some((f, g)) = found {
            return Ok(Verdict {
                result: false,
                witness: Some(Witness { f: to_fn(x, &f, u), g: to_fn(x, &g, u) }),
                bound: n,
            });
        }
    }
    Ok(Verdict { result: true, witness: None, bound: n })
}

/// The equivalent form: `0` is not in `Y` and `Y` is a weak face of
/// `X  union  {0}`.
pub fn is_positive_weak_face_via_zero(query: &FaceQuery) -> Result<Verdict> {
    let rank = query.rank();
    let zero = Weight::zero(rank);
    if query.y.contains(&zero) {
        return Ok(Verdict {
            result: false,
            witness: Some(Witness {
                f: FinSupportFn::new(),
                g: FinSupportFn::from_pairs([(zero, unit(&query.coefficients))])?,
            }),
            bound: query.bound,
        });
    }
    let mut x = query.x.clone();
    x.push(zero);
    let extended = FaceQuery::new(x, query.y.clone(), query.coefficients, query.bound)?;
    is_weak_face(&extended)
}

/// `(R', R)`-closedness, searching coefficient functions with values in
/// `R \ {0}` and at most `bound` support points.
pub fn is_closed(x: &[Weight], y: &[Weight], r_prime: &[Q], r: &[Q], bound: usize) -> Result<Verdict> {
    let rank = x.first().map_or(0, Weight::rank);
    let values: Vec<Q> = {
        let mut v: Vec<Q> = r.iter().filter(|c| !c.is_zero()).copied().collect();
        v.sort();
        v.dedup();
        v
    };
    let targets: HashSet<Q> = r_prime.iter().filter(|c| !c.is_zero()).copied().collect();
    let cap = if values.iter().all(|v| v.is_positive()) {
        targets.iter().max().copied()
    } else {
        None
    };
    let y_set: HashSet<&Weight> = y.iter().collect();

    type Assignment = Vec<(usize, Q)>;
    fn search(
        pts: &[Weight],
        values: &[Q],
        bound: usize,
        cap: Option<Q>,
        start: usize,
        cur: &mut Assignment,
        total: Q,
        moment: &Weight,
        visit: &mut dyn FnMut(&Assignment, Q, &Weight) -> bool,
    ) -> bool {
        if !cur.is_empty() && visit(cur, total, moment) {
            return true;
        }
        if cur.len() == bound {
            return false;
        }
        for i in start..pts.len() {
            for &c in values {
                let t = total + c;
                if cap.is_some_and(|m| t > m) {
                    continue;
                }
                let mo = moment + &pts[i].scale(c);
                cur.push((i, c));
                let stop = search(pts, values, bound, cap, i + 1, cur, t, &mo, visit);
                cur.pop();
                if stop {
                    return true;
                }
            }
        }
        false
    }

    let mut g_map: HashMap<(Q, Weight), Assignment> = HashMap::new();
    let zero = Weight::zero(rank);
    search(y, &values, bound, cap, 0, &mut Vec::new(), Q::zero(), &zero, &mut |a, t, m| {
        if targets.contains(&t) {
            g_map.entry((t, m.clone())).or_insert_with(|| a.clone());
        }
        false
    });
    let mut found = None;
    search(x, &values, bound, cap, 0, &mut Vec::new(), Q::zero(), &zero, &mut |a, t, m| {
        if targets.contains(&t) && a.iter().any(|(i, _)| !y_set.contains(&x[*i])) {
            if let Some(g) = g_map.get(&(t, m.clone())) {
                found = Some((a.clone(), g.clone()));
                return true;
            }
        }
        false
    });
    let build = |pts: &[Weight], a: &Assignment| {
        FinSupportFn::from_pairs(a.iter().map(|(i, c)| (pts[*i].clone(), *c)))
    };
    match found {
        None => Ok(Verdict { result: true, witness: None, bound }),
        Some((f, g)) => {
            // Negative values cannot be stored in a coefficient function;
            // such witnesses are reported without the pair.
            let witness = match (build(x, &f), build(y, &g)) {
                (Ok(f), Ok(g)) => Some(Witness { f, g }),
                _ => None,
            };
            Ok(Verdict { result: false, witness, bound })
        }
    }
}

/// `(R', R) = ({2}, {1, 2})`: `y1 + y2 = mu1 + mu2` forces `mu1, mu2` into `Y`.
pub fn is_pairwise_closed(x: &[Weight], y: &[Weight]) -> Result<Verdict> {
    is_closed(x, y, &[q(2)], &[q(1), q(2)], 2)
}

fn require_classified(desc: &HWModuleDesc) -> Result<()> {
    let covered = is_simply_regular(&desc.lambda)
        || matches!(desc.family, Family::Verma | Family::Parabolic(_) | Family::Simple);
    if !desc.weight_formula_valid || !covered {
        return Err(Error::Unsupported(
            "faces are classified only for simply-regular highest weights or for Verma, \
             parabolic Verma and simple modules"
                .into(),
        ));
    }
    Ok(())
}

/// Writes `Y` (given down to height `depth`) as `w(wt_J V)` with `w` of
/// minimal length in `W_J(V)` and `J` canonical, or returns `None` when `Y`
/// is not of that form.
pub fn classify_weak_face(
    rs: &RootSystem,
    desc: &HWModuleDesc,
    y: &WeightSet,
    depth: usize,
) -> Result<Option<(WeylElement, SubsetJ)>> {
    require_classified(desc)?;
    let x = module_weights(rs, desc, depth)?;
    if y.is_empty() || y.iter().any(|w| !x.contains(w)) {
        return Ok(None);
    }
    let lambda = &desc.lambda;
    for w in shortlex_elements(rs, desc.jv)? {
        if !y.contains(&w.act(rs, lambda)) {
            continue;
        }
        let guess = (0..rs.rank())
            .filter(|&i| y.contains(&w.act(rs, &(lambda - &rs.simple_root(i)))))
            .fold(SubsetJ::empty(), |j, i| j.with(i));
        let matches = |j: SubsetJ| {
            FaceDescriptor { w: w.clone(), j }.restrict(rs, lambda, x.weights()) == y.weights()
        };
        if matches(guess) {
            return Ok(Some((w, canonical_j(rs, desc, guess))));
        }
        if let Some(j) = rs.full().subsets().find(|&j| matches(j)) {
            return Ok(Some((w, canonical_j(rs, desc, j))));
        }
    }
    Ok(None)
}

/// `[J_min, J_max]` inside `J(V)`: the `J' = (J \ J(V))  union  K` with
/// `J_min <= K <= J_max` are exactly those giving the same face as `J`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FaceInterval {
    pub j_min: SubsetJ,
    pub j_max: SubsetJ,
}

/// The nodes of `J  cap  J(V)` whose component in the Dynkin diagram of `J`
/// meets the support of `lambda` or an index of `J` outside `J(V)`. These
/// are exactly the directions of `J  cap  J(V)` that the slice `wt_J V`
/// actually moves in.
pub fn active_components(rs: &RootSystem, desc: &HWModuleDesc, j: SubsetJ) -> SubsetJ {
    let seeds = crate::weightlat::support(&desc.lambda).union(j.difference(desc.jv));
    rs.components_meeting(j, seeds).intersection(desc.jv)
}

/// Whether `wt_J V = wt_J' V`: both sets agree outside `J(V)` and
/// `J  cap  J'` contains the active components of each.
pub fn faces_equal(rs: &RootSystem, desc: &HWModuleDesc, j: SubsetJ, j2: SubsetJ) -> bool {
    let jv = desc.jv;
    if j.difference(jv) != j2.difference(jv) {
        return false;
    }
    let need = active_components(rs, desc, j).union(active_components(rs, desc, j2));
    need.is_subset(j.intersection(j2).intersection(jv))
}

/// The component test using only the diagrams of `J  cap  J(V)` and
/// `J'  cap  J(V)`, ignoring adjacency to indices outside `J(V)`. It agrees
/// with [`faces_equal`] when `J, J'` lie in `J(V)` but can wrongly report
/// equality otherwise (A2, `lambda = -omega_1`, simple: `{1}` and `{1,2}`).
pub fn faces_equal_levi_components(rs: &RootSystem, desc: &HWModuleDesc, j: SubsetJ, j2: SubsetJ) -> bool {
    let jv = desc.jv;
    if j.difference(jv) != j2.difference(jv) {
        return false;
    }
    let need = rs
        .dynkin_components(j.intersection(jv), &desc.lambda)
        .union(rs.dynkin_components(j2.intersection(jv), &desc.lambda));
    need.is_subset(j.intersection(j2).intersection(jv))
}

pub fn face_interval(rs: &RootSystem, desc: &HWModuleDesc, j: SubsetJ) -> FaceInterval {
    let jv = desc.jv;
    let outer = j.difference(jv);
    let j_min = active_components(rs, desc, j);
    let j_max = jv
        .subsets()
        .filter(|&k| faces_equal(rs, desc, j, outer.union(k)))
        .fold(SubsetJ::empty(), SubsetJ::union);
    debug_assert!(faces_equal(rs, desc, j, outer.union(j_max)));
    FaceInterval { j_min, j_max }
}

/// The largest index set giving the same face as `J`.
pub fn canonical_j(rs: &RootSystem, desc: &HWModuleDesc, j: SubsetJ) -> SubsetJ {
    j.difference(desc.jv).union(face_interval(rs, desc, j).j_max)
}

/// `rho_S`, the sum of the elements of `S`.
pub fn rho_of(rank: usize, s: &[Weight]) -> Weight {
    s.iter().fold(Weight::zero(rank), |acc, w| &acc + w)
}

/// Checks, for `J` inside `J(V)`, that `wt_J V` is the maximizer of
/// `rho_{I \ J}` on `wt V` and of `pi_J(V)(rho_S)` on `wt_J(V) V`, where
/// `S = wt_J V`, and that `rho_S` is `W_J`-invariant.
pub fn verify_rho_maximizer(rs: &RootSystem, desc: &HWModuleDesc, j: SubsetJ) -> Result<bool> {
    if !j.is_subset(desc.jv) {
        return Err(Error::Precondition(format!("{j} is not inside J(V) = {}", desc.jv)));
    }
    let lambda = &desc.lambda;
    let top = fd_simple_weights(rs, desc.jv, lambda)?;
    let depth = top
        .iter()
        .filter_map(|w| crate::weightlat::depth_below(rs, lambda, w))
        .max()
        .unwrap_or(0) as usize;
    let s = wt_j(rs, desc, j, depth)?;
    let all = module_weights(rs, desc, depth)?;
    let by_complement = maximizer(rs, all.weights(), &rs.rho_of_subset(rs.full().difference(j)));
    let rho_s = rho_of(rs.rank(), s.weights());
    let projected = crate::weightlat::project(desc.jv, &rho_s);
    let by_projection = maximizer(rs, top.weights(), &projected);
    let invariant = j.iter().all(|i| rho_s.coords()[i].is_zero());
    Ok(by_complement == s.weights() && by_projection == s.weights() && invariant)
}

/// For `Y` pairwise closed in the weights of a finite-dimensional simple
/// module, finds `w` with `w(lambda)` in `Y` by ascending along simple roots.
pub fn walk_to_vertex(rs: &RootSystem, fd_weights: &WeightSet, y: &WeightSet) -> Result<WeylElement> {
    let Some(lambda) = fd_weights.iter().find(|w| {
        fd_weights
            .iter()
            .all(|v| v == *w || crate::weightlat::leq(rs, v, w))
    }) else {
        return Err(Error::Precondition("the weight set has no highest weight".into()));
    };
    let lambda = lambda.clone();
    if lambda.is_zero() || !crate::weightlat::is_dominant_integral(&lambda) {
        return Err(Error::Precondition("need a nonzero dominant integral highest weight".into()));
    }
    if y.is_empty() {
        return Err(Error::Precondition("Y is empty".into()));
    }
    if let Some(w) = y.iter().find(|w| !fd_weights.contains(w)) {
        return Err(Error::Precondition(format!("{w} is not a weight")));
    }
    let closed = is_pairwise_closed(fd_weights.weights(), y.weights())?;
    if !closed.result {
        return Err(Error::Precondition("Y is not ({2},{1,2})-closed".into()));
    }
    let full = rs.full();
    let mut mu = y.weights()[0].clone();
    loop {
        let (dom, u) = dominant_conjugate(rs, full, &mu);
        if dom == lambda {
            return Ok(u.reduced(rs));
        }
        let Some(i) = (0..rs.rank()).find(|&i| fd_weights.contains(&(&dom + &rs.simple_root(i))))
        else {
            return Err(Error::Internal(format!("no weight above the dominant weight {dom}")));
        };
        let up = u.act(rs, &(&dom + &rs.simple_root(i)));
        if !y.contains(&up) {
            return Err(Error::Internal(format!("{up} should lie in Y")));
        }
        mu = up;
    }
}

/// `(Psi + Psi)  cap  Phi` empty and `(Psi + Phi+)  cap  Phi` inside `Psi`.
pub fn is_abelian_ideal(rs: &RootSystem, psi: &[Vec<i64>]) -> Result<bool> {
    let positive: HashSet<&Vec<i64>> = rs.positive_roots().iter().collect();
    if let Some(r) = psi.iter().find(|r| !positive.contains(r)) {
        return Err(Error::Precondition(format!("{r:?} is not a positive root")));
    }
    let inside: HashSet<&Vec<i64>> = psi.iter().collect();
    let add = |a: &[i64], b: &[i64]| -> Vec<i64> { a.iter().zip(b).map(|(x, y)| x + y).collect() };
    for a in psi {
        if psi.iter().any(|b| positive.contains(&add(a, b))) {
            return Ok(false);
        }
        for b in rs.positive_roots() {
            let s = add(a, b);
            if positive.contains(&s) && !inside.contains(&s) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
