//! Brute-force computations used to cross-check the structural code. Each
//! one uses a different algorithm from its counterpart.

use crate::error::{Error, Result};
use crate::hwmodule::{lattice_below, FormalCharacter, HWModuleDesc, WeightSet};
use crate::rational::{q, Q};
use crate::rootsys::RootSystem;
use crate::weightlat::{dominant_conjugate, is_dominant_integral, Weight};
use num_traits::{Signed, Zero};
use std::collections::{BTreeMap, HashMap, HashSet};
use std::hash::{Hash, Hasher};
use std::time::Instant;

pub const MAX_BRUTE_POINTS: usize = 16;

/// A tagged oracle result.
#[derive(Clone, Debug)]
pub struct OracleReport {
    pub tag: String,
    /// Hash of the inputs, in hex.
    pub digest: String,
    pub payload: serde_json::Value,
    pub wall_ms: u128,
}

impl OracleReport {
    /// Runs `f`, timing it and hashing `inputs`.
    pub fn run<I: Hash>(tag: &str, inputs: &I, f: impl FnOnce() -> serde_json::Value) -> Self {
        let mut h = std::collections::hash_map::DefaultHasher::new();
        inputs.hash(&mut h);
        let start = Instant::now();
        let payload = f();
        OracleReport {
            tag: tag.to_string(),
            digest: format!("{:016x}", h.finish()),
            payload,
            wall_ms: start.elapsed().as_millis(),
        }
    }
}

fn scaled_points(points: &[Weight]) -> Vec<Vec<i64>> {
    let den = crate::rational::common_denominator(points.iter().flat_map(|w| w.coords().iter()));
    points
        .iter()
        .map(|w| {
            w.coords()
                .iter()
                .map(|c| (c * Q::from_integer(den)).to_integer())
                .collect()
        })
        .collect()
}

fn add(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// Minkowski-sum test: with `S_k` the `k`-fold sums of `Y` and `T_k` the
/// `k`-fold sums of `X` using a point outside `Y`, `Y` is a weak face up to
/// `bound` exactly when `S_k` and `T_k` never meet.
fn weak_face_by_sums(pts: &[Vec<i64>], mask: u32, bound: usize) -> bool {
    let dim = pts.first().map_or(0, Vec::len);
    let inside: Vec<&Vec<i64>> = (0..pts.len()).filter(|i| mask >> i & 1 == 1).map(|i| &pts[i]).collect();
    let outside: Vec<&Vec<i64>> = (0..pts.len()).filter(|i| mask >> i & 1 == 0).map(|i| &pts[i]).collect();
    if inside.is_empty() || outside.is_empty() {
        return true;
    }
    let mut s: HashSet<Vec<i64>> = HashSet::from([vec![0; dim]]);
    let mut t: HashSet<Vec<i64>> = HashSet::new();
    for _ in 1..=bound {
        let mut t_next: HashSet<Vec<i64>> = HashSet::new();
        for a in &t {
            for p in pts {
                t_next.insert(add(a, p));
            }
        }
        for a in &s {
            for p in &outside {
                t_next.insert(add(a, p));
            }
        }
        let s_next: HashSet<Vec<i64>> = s.iter().flat_map(|a| inside.iter().map(move |p| add(a, p))).collect();
        if s_next.iter().any(|v| t_next.contains(v)) {
            return false;
        }
        s = s_next;
        t = t_next;
    }
    true
}

fn brute(x: &[Weight], bound: usize, must: Option<usize>) -> Result<Vec<Vec<Weight>>> {
    if x.len() > MAX_BRUTE_POINTS {
        return Err(Error::Resource(format!(
            "{} points exceed the brute-force cap of {MAX_BRUTE_POINTS}",
            x.len()
        )));
    }
    let mut xs = x.to_vec();
    xs.sort();
    xs.dedup();
    let pts = scaled_points(&xs);
    let mut out = Vec::new();
    for mask in 1u32..(1u32 << xs.len()) {
        if let Some(m) = must {
            if mask >> m & 1 == 0 {
                continue;
            }
        }
        if weak_face_by_sums(&pts, mask, bound) {
            out.push((0..xs.len()).filter(|i| mask >> i & 1 == 1).map(|i| xs[i].clone()).collect());
        }
    }
    out.sort();
    Ok(out)
}

/// Every nonempty `Y` in `X`, in sorted order, passing the weak integer face test up to `bound`.
pub fn brute_weak_faces(x: &[Weight], bound: usize) -> Result<Vec<Vec<Weight>>> {
    brute(x, bound, None)
}

/// As [`brute_weak_faces`], restricted to subsets containing `anchor`.
pub fn brute_weak_faces_containing(x: &[Weight], anchor: &Weight, bound: usize) -> Result<Vec<Vec<Weight>>> {
    let mut xs = x.to_vec();
    xs.sort();
    xs.dedup();
    let Ok(m) = xs.binary_search(anchor) else {
        return Err(Error::Precondition(format!("{anchor} is not in X")));
    };
    brute(&xs, bound, Some(m))
}

/// `(lambda - Z_+ Delta)  cap  conv wt V` down to height `depth`, with
/// membership decided by dominance: `mu` is in the hull exactly when its
/// `J(V)`-dominant conjugate lies below `lambda` in `R_+ Delta`.
pub fn lattice_hull_points(rs: &RootSystem, desc: &HWModuleDesc, depth: usize) -> Result<WeightSet> {
    if !desc.weight_formula_valid {
        return Err(Error::Unsupported("no hull for a generic quotient".into()));
    }
    let lambda = &desc.lambda;
    let pts = lattice_below(rs.rank(), depth)
        .into_iter()
        .map(|b| lambda - &rs.root_to_weight(&b))
        .filter(|mu| {
            let (dom, _) = dominant_conjugate(rs, desc.jv, mu);
            rs.to_root_coords(&(lambda - &dom)).iter().all(|c| !c.is_negative())
        });
    Ok(WeightSet::new(pts, Some(depth), false))
}

fn require_dominant(rs: &RootSystem, lambda: &Weight) -> Result<()> {
    rs.check(lambda)?;
    if !is_dominant_integral(lambda) {
        return Err(Error::Precondition(format!("{lambda} is not dominant integral")));
    }
    Ok(())
}

/// Weyl's dimension formula `prod (lambda + rho, beta) / (rho, beta)`.
pub fn weyl_dim(rs: &RootSystem, lambda: &Weight) -> Result<u128> {
    require_dominant(rs, lambda)?;
    let rho = rs.rho();
    let shifted = lambda + &rho;
    let mut num = num_bigint::BigInt::from(1);
    let mut den = num_bigint::BigInt::from(1);
    for beta in rs.positive_roots_fw() {
        let a = rs.pairing(&shifted, beta);
        let b = rs.pairing(&rho, beta);
        let r = a / b;
        num *= num_bigint::BigInt::from(*r.numer());
        den *= num_bigint::BigInt::from(*r.denom());
    }
    let (d, rem) = num_integer::Integer::div_rem(&num, &den);
    if !rem.is_zero() {
        return Err(Error::Internal("non-integral dimension".into()));
    }
    u128::try_from(d).map_err(|_| Error::Resource("dimension exceeds u128".into()))
}

/// Freudenthal's recursion for `dim L(lambda)_mu`.
pub fn freudenthal_mult(rs: &RootSystem, lambda: &Weight, mu: &Weight) -> Result<u128> {
    require_dominant(rs, lambda)?;
    rs.check(mu)?;
    let mut memo = HashMap::new();
    let m = freudenthal(rs, lambda, mu, &mut memo);
    if !m.is_integer() || m.is_negative() {
        return Err(Error::Internal(format!("multiplicity {m} at {mu}")));
    }
    Ok(m.to_integer() as u128)
}

fn freudenthal(rs: &RootSystem, lambda: &Weight, mu: &Weight, memo: &mut HashMap<Weight, Q>) -> Q {
    let (mu, _) = dominant_conjugate(rs, rs.full(), mu);
    let below = rs
        .to_root_ints(&(lambda - &mu))
        .is_some_and(|r| r.iter().all(|&c| c >= 0));
    if !below {
        return Q::zero();
    }
    if mu == *lambda {
        return q(1);
    }
    if let Some(&v) = memo.get(&mu) {
        return v;
    }
    let rho = rs.rho();
    let lr = lambda + &rho;
    let mr = &mu + &rho;
    let denom = rs.pairing(&lr, &lr) - rs.pairing(&mr, &mr);
    let mut sum = Q::zero();
    for beta in rs.positive_roots_fw() {
        let mut k = 1i64;
        loop {
            let up = &mu + &beta.scale(Q::from_integer(k));
            let reach = rs
                .to_root_ints(&(lambda - &up))
                .is_some_and(|r| r.iter().all(|&c| c >= 0));
            if !reach {
                break;
            }
            sum += freudenthal(rs, lambda, &up, memo) * rs.pairing(&up, beta);
            k += 1;
        }
    }
    let v = sum * q(2) / denom;
    memo.insert(mu, v);
    v
}

/// Verma character from a knapsack table of partition counts, filled one
/// positive root at a time in order of height.
pub fn verma_character_raw(rs: &RootSystem, lambda: &Weight, depth: usize) -> Result<FormalCharacter> {
    rs.check(lambda)?;
    let cells = lattice_below(rs.rank(), depth);
    let mut table: BTreeMap<Vec<i64>, u128> = cells.iter().map(|c| (c.clone(), 0)).collect();
    table.insert(vec![0; rs.rank()], 1);
    let mut roots = rs.positive_roots().to_vec();
    roots.sort_by_key(|r| (r.iter().sum::<i64>(), r.clone()));
    for beta in &roots {
        for cell in &cells {
            let prev: Vec<i64> = cell.iter().zip(beta).map(|(a, b)| a - b).collect();
            if prev.iter().any(|&c| c < 0) {
                continue;
            }
            let add = table[&prev];
            *table.get_mut(cell).expect("cell") += add;
        }
    }
    let terms = table
        .into_iter()
        .filter(|(_, m)| *m > 0)
        .map(|(b, m)| (lambda - &rs.root_to_weight(&b), m))
        .collect();
    Ok(FormalCharacter { terms, depth })
}
