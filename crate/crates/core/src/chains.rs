//! Saturated chains of weights joined by simple roots.

use crate::error::{Error, Result};
use crate::hwmodule::{module_weights, Family, HWModuleDesc, WeightSet};
use crate::rootsys::RootSystem;
use crate::weightlat::{depth_below, Weight};
use std::collections::HashSet;

/// Which sufficient condition for the existence of a chain applies.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ChainHypothesis {
    /// `mu = mu'` or `mu' = lambda`.
    Endpoint,
    /// `mu' - mu` is a simple root or lies in `Z_+ Delta_J(V)`.
    Difference,
    /// At most one index of `J_lambda` lies outside `J(V)`.
    AlmostIntegrable,
    /// Verma or parabolic Verma module.
    Parabolic,
}

impl ChainHypothesis {
    pub fn name(&self) -> &'static str {
        match self {
            ChainHypothesis::Endpoint => "endpoint",
            ChainHypothesis::Difference => "difference",
            ChainHypothesis::AlmostIntegrable => "almost-integrable",
            ChainHypothesis::Parabolic => "parabolic",
        }
    }
}

/// Result of a chain search. `chain` runs from `mu'` down to `mu`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainOutcome {
    pub chain: Option<Vec<Weight>>,
    /// The first hypothesis that guarantees a chain, if any. Without one the
    /// search result is advisory.
    pub hypothesis: Option<ChainHypothesis>,
}

impl ChainOutcome {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "chain": self.chain.as_ref().map(|c| c.iter().map(Weight::to_json).collect::<Vec<_>>()),
            "guaranteed": self.hypothesis.is_some(),
            "hypothesis": self.hypothesis.map(|h| h.name()),
        })
    }
}

fn hypothesis(rs: &RootSystem, desc: &HWModuleDesc, mu: &Weight, mu_prime: &Weight) -> Option<ChainHypothesis> {
    if mu == mu_prime || *mu_prime == desc.lambda {
        return Some(ChainHypothesis::Endpoint);
    }
    if let Some(d) = rs.to_root_ints(&(mu_prime - mu)) {
        let simple = d.iter().filter(|&&c| c == 1).count() == 1 && d.iter().all(|&c| c == 0 || c == 1);
        let levi = d
            .iter()
            .enumerate()
            .all(|(i, &c)| c >= 0 && (c == 0 || desc.jv.contains(i)));
        if simple || levi {
            return Some(ChainHypothesis::Difference);
        }
    }
    if desc.j_lambda.difference(desc.jv).len() <= 1 {
        return Some(ChainHypothesis::AlmostIntegrable);
    }
    if matches!(desc.family, Family::Verma | Family::Parabolic(_)) {
        return Some(ChainHypothesis::Parabolic);
    }
    None
}

/// Depth-first search trying simple roots in index order, so the chain
/// found is the lexicographically least.
fn descend(
    rs: &RootSystem,
    allowed: &dyn Fn(&Weight) -> bool,
    cur: &Weight,
    target: &Weight,
    dead: &mut HashSet<Weight>,
    path: &mut Vec<Weight>,
) -> bool {
    path.push(cur.clone());
    if cur == target {
        return true;
    }
    for i in 0..rs.rank() {
        let next = cur - &rs.simple_root(i);
        if dead.contains(&next) || !allowed(&next) {
            continue;
        }
        let below = rs
            .to_root_ints(&(&next - target))
            .is_some_and(|r| r.iter().all(|&c| c >= 0));
        if below && descend(rs, allowed, &next, target, dead, path) {
            return true;
        }
        dead.insert(next);
    }
    path.pop();
    false
}

/// A chain `mu' = mu_0 > mu_1 > ... > mu_N = mu` of weights of the module
/// with consecutive differences simple roots.
pub fn find_chain(rs: &RootSystem, desc: &HWModuleDesc, mu: &Weight, mu_prime: &Weight, depth: usize) -> Result<ChainOutcome> {
    let Some(d_mu) = depth_below(rs, &desc.lambda, mu) else {
        return Err(Error::Precondition(format!("{mu} is not below lambda")));
    };
    let weights = module_weights(rs, desc, depth.max(d_mu as usize))?;
    find_chain_in(rs, desc, &weights, mu, mu_prime)
}

/// As [`find_chain`], searching inside precomputed weights that must reach
/// at least down to `mu`.
pub fn find_chain_in(rs: &RootSystem, desc: &HWModuleDesc, weights: &WeightSet, mu: &Weight, mu_prime: &Weight) -> Result<ChainOutcome> {
    let lambda = &desc.lambda;
    if depth_below(rs, lambda, mu).is_none() || depth_below(rs, lambda, mu_prime).is_none() {
        return Err(Error::Precondition("both weights must lie below lambda".into()));
    }
    if depth_below(rs, mu_prime, mu).is_none() {
        return Err(Error::Precondition(format!("{mu} is not below {mu_prime}")));
    }
    for w in [mu, mu_prime] {
        if !weights.contains(w) {
            return Err(Error::Precondition(format!("{w} is not a weight of the module")));
        }
    }
    let hyp = hypothesis(rs, desc, mu, mu_prime);
    let allowed = |w: &Weight| weights.contains(w);
    let mut path = Vec::new();
    let found = descend(rs, &allowed, mu_prime, mu, &mut HashSet::new(), &mut path);
    let chain = found.then_some(path);
    if chain.is_none() && hyp.is_some() {
        return Err(Error::Internal(format!(
            "no chain from {mu_prime} down to {mu} although one must exist"
        )));
    }
    Ok(ChainOutcome { chain, hypothesis: hyp })
}

/// Positive roots `mu' = beta_0 > ... > beta_N = mu` with consecutive
/// differences simple roots, for a simple root `mu` below `mu'`.
pub fn root_chain(rs: &RootSystem, mu: &[i64], mu_prime: &[i64]) -> Result<Option<Vec<Vec<i64>>>> {
    let positive: HashSet<&Vec<i64>> = rs.positive_roots().iter().collect();
    for r in [mu, mu_prime] {
        if !positive.contains(&r.to_vec()) {
            return Err(Error::Precondition(format!("{r:?} is not a positive root")));
        }
    }
    if mu.iter().zip(mu_prime).any(|(a, b)| a > b) {
        return Err(Error::Precondition(format!("{mu:?} is not below {mu_prime:?}")));
    }
    let to_w = |r: &[i64]| rs.root_to_weight(r);
    let allowed = |w: &Weight| rs.to_root_ints(w).is_some_and(|r| positive.contains(&r));
    let mut path = Vec::new();
    let found = descend(rs, &allowed, &to_w(mu_prime), &to_w(mu), &mut HashSet::new(), &mut path);
    Ok(found.then(|| {
        path.iter()
            .map(|w| rs.to_root_ints(w).expect("roots lie in the root lattice"))
            .collect()
    }))
}
