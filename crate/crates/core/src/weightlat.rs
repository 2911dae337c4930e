//! Exact weight arithmetic in fundamental-weight coordinates.

use crate::error::{Error, Result};
use crate::rational::{fmt_q, parse_q, q, Q};
use crate::rootsys::{RootSystem, WeylElement};
use crate::subset::SubsetJ;
use num_traits::{Signed, Zero};
use serde::de::{self, Deserializer};
use serde::ser::Serializer;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// A weight, stored as its values `c_i = lambda(h_i)` on the simple coroots.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight {
    coords: Vec<Q>,
}

impl Weight {
    pub fn new(coords: Vec<Q>) -> Self {
        Weight { coords }
    }

    pub fn zero(rank: usize) -> Self {
        Weight::new(vec![Q::zero(); rank])
    }

    pub fn fundamental(rank: usize, i: usize) -> Self {
        let mut c = vec![Q::zero(); rank];
        c[i] = q(1);
        Weight::new(c)
    }

    pub fn from_ints(c: &[i64]) -> Self {
        Weight::new(c.iter().map(|&x| q(x)).collect())
    }

    /// Parses comma-separated rationals, e.g. `1,1/2,-3`.
    pub fn parse(s: &str) -> Result<Self> {
        let coords = s
            .split(',')
            .map(parse_q)
            .collect::<Result<Vec<_>>>()?;
        Ok(Weight::new(coords))
    }

    pub fn coords(&self) -> &[Q] {
        &self.coords
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    pub fn scale(&self, k: Q) -> Weight {
        Weight::new(self.coords.iter().map(|c| c * k).collect())
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.coords.iter().map(fmt_q).collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({ "fw": self.to_strings() })
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.to_strings().join(","))
    }
}

impl Serialize for Weight {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Fw {
            fw: Vec<String>,
        }
        Fw {
            fw: self.to_strings(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Weight {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Fw {
            fw: Vec<String>,
        }
        let raw = Fw::deserialize(d)?;
        let coords = raw
            .fw
            .iter()
            .map(|s| parse_q(s).map_err(de::Error::custom))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(Weight::new(coords))
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, o: &Weight) -> Weight {
        Weight::new(self.coords.iter().zip(&o.coords).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, o: &Weight) -> Weight {
        Weight::new(self.coords.iter().zip(&o.coords).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight::new(self.coords.iter().map(|a| -a).collect())
    }
}

impl Mul<Q> for &Weight {
    type Output = Weight;
    fn mul(self, k: Q) -> Weight {
        self.scale(k)
    }
}

impl Add for Weight {
    type Output = Weight;
    fn add(self, o: Weight) -> Weight {
        &self + &o
    }
}

impl Sub for Weight {
    type Output = Weight;
    fn sub(self, o: Weight) -> Weight {
        &self - &o
    }
}

/// `lambda(h_i)`.
pub fn eval_h(rs: &RootSystem, lambda: &Weight, i: usize) -> Result<Q> {
    rs.check(lambda)?;
    if i >= rs.rank() {
        return Err(Error::Precondition(format!("index {} out of range", i + 1)));
    }
    Ok(lambda.coords()[i])
}

/// The invariant form `(lambda, mu)`.
pub fn pairing(rs: &RootSystem, lambda: &Weight, mu: &Weight) -> Result<Q> {
    rs.check(lambda)?;
    rs.check(mu)?;
    Ok(rs.pairing(lambda, mu))
}

/// `J_lambda = { i : lambda(h_i) in Z_+ }`.
pub fn j_lambda(lambda: &Weight) -> SubsetJ {
    SubsetJ::from_indices(
        (0..lambda.rank()).filter(|&i| crate::rational::is_nonneg_integer(&lambda.coords()[i])),
    )
}

/// `supp(lambda) = { i : (lambda, alpha_i) != 0 }`.
pub fn support(lambda: &Weight) -> SubsetJ {
    SubsetJ::from_indices((0..lambda.rank()).filter(|&i| !lambda.coords()[i].is_zero()))
}

pub fn is_simply_regular(lambda: &Weight) -> bool {
    support(lambda).len() == lambda.rank()
}

/// `pi_J`: keeps the fundamental coordinates indexed by `J`.
pub fn project(j: SubsetJ, lambda: &Weight) -> Weight {
    Weight::new(
        (0..lambda.rank())
            .map(|i| if j.contains(i) { lambda.coords()[i] } else { Q::zero() })
            .collect(),
    )
}

/// `varpi_J(lambda + mu) = pi_J(lambda) + mu` for an offset `mu` in `QDelta_J`.
pub fn varpi(rs: &RootSystem, j: SubsetJ, lambda: &Weight, offset: &Weight) -> Result<Weight> {
    rs.check(lambda)?;
    rs.check(offset)?;
    let r = rs.to_root_coords(offset);
    if let Some(i) = (0..rs.rank()).find(|&i| !j.contains(i) && !r[i].is_zero()) {
        return Err(Error::Precondition(format!(
            "offset {offset} has a nonzero coefficient on alpha_{} outside {j}",
            i + 1
        )));
    }
    Ok(&project(j, lambda) + offset)
}

/// Whether `lambda - mu` lies in `Z_+ Delta`.
pub fn leq(rs: &RootSystem, mu: &Weight, lambda: &Weight) -> bool {
    match rs.to_root_ints(&(lambda - mu)) {
        Some(r) => r.iter().all(|&c| c >= 0),
        None => false,
    }
}

/// Height `sum r_i` of a weight `sum r_i alpha_i`; every weight is in
/// `QDelta` in finite type, so this never fails on matching ranks.
pub fn height(rs: &RootSystem, beta: &Weight) -> Result<Q> {
    rs.check(beta)?;
    Ok(rs.to_root_coords(beta).into_iter().sum())
}

/// `ht(lambda - mu)` when `lambda - mu` lies in `Z_+ Delta`.
pub fn depth_below(rs: &RootSystem, lambda: &Weight, mu: &Weight) -> Option<i64> {
    let r = rs.to_root_ints(&(lambda - mu))?;
    if r.iter().any(|&c| c < 0) {
        return None;
    }
    Some(r.iter().sum())
}

pub fn in_weight_lattice(lambda: &Weight) -> bool {
    lambda.coords().iter().all(|c| c.is_integer())
}

pub fn in_root_lattice(rs: &RootSystem, lambda: &Weight) -> bool {
    rs.to_root_ints(lambda).is_some()
}

/// Whether `lambda` is dominant integral.
pub fn is_dominant_integral(lambda: &Weight) -> bool {
    j_lambda(lambda).len() == lambda.rank()
}

/// `w . lambda = w(lambda + rho) - rho`.
pub fn dot_action(rs: &RootSystem, w: &WeylElement, lambda: &Weight) -> Weight {
    let rho = rs.rho();
    &w.act(rs, &(lambda + &rho)) - &rho
}

/// Conjugates `mu` into the closed `J`-dominant chamber, choosing the
/// lowest index with a negative coordinate at each step. Returns the
/// dominant weight and the element `u` with `u(dominant) = mu`.
pub fn dominant_conjugate(rs: &RootSystem, j: SubsetJ, mu: &Weight) -> (Weight, WeylElement) {
    let mut v = mu.clone();
    let mut word = Vec::new();
    while let Some(i) = j.iter().find(|&i| v.coords()[i].is_negative()) {
        v = rs.reflect(i, &v);
        word.push(i);
    }
    (v, WeylElement::from_word(word))
}

/// Coefficient groups `A` used by the weak-face tests.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CoefficientGroup {
    Int,
    ScaledInt(Q),
    Rat,
    Reals,
}

impl CoefficientGroup {
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        match s {
            "int" => Ok(CoefficientGroup::Int),
            "rat" => Ok(CoefficientGroup::Rat),
            "real" | "reals" => Ok(CoefficientGroup::Reals),
            _ => match s.strip_prefix("scaled:") {
                Some(a) => {
                    let a = parse_q(a)?;
                    if !a.is_positive() {
                        return Err(Error::Parse("scale must be positive".into()));
                    }
                    Ok(CoefficientGroup::ScaledInt(a))
                }
                None => Err(Error::Parse(format!("unknown coefficient group {s:?}"))),
            },
        }
    }

    /// Exact test for `x in A`. Real coefficients are represented by
    /// rationals, so every rational belongs to the real group.
    pub fn contains(&self, x: &Q) -> bool {
        match self {
            CoefficientGroup::Int => x.is_integer(),
            CoefficientGroup::ScaledInt(a) => (x / a).is_integer(),
            CoefficientGroup::Rat | CoefficientGroup::Reals => true,
        }
    }

    pub fn contains_positive(&self, x: &Q) -> bool {
        !x.is_negative() && self.contains(x)
    }

    /// Smallest positive element, if the group is discrete.
    pub fn generator(&self) -> Option<Q> {
        match self {
            CoefficientGroup::Int => Some(q(1)),
            CoefficientGroup::ScaledInt(a) => Some(*a),
            _ => None,
        }
    }

    /// Whether `lambda` lies in `A Delta`.
    pub fn contains_weight(&self, rs: &RootSystem, lambda: &Weight) -> bool {
        rs.to_root_coords(lambda).iter().all(|c| self.contains(c))
    }

    pub fn name(&self) -> String {
        match self {
            CoefficientGroup::Int => "int".into(),
            CoefficientGroup::ScaledInt(a) => format!("scaled:{a}"),
            CoefficientGroup::Rat => "rat".into(),
            CoefficientGroup::Reals => "real".into(),
        }
    }
}

/// A finitely supported coefficient function `f : X -> A_+`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FinSupportFn {
    values: BTreeMap<Weight, Q>,
}

impl FinSupportFn {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_pairs<I: IntoIterator<Item = (Weight, Q)>>(pairs: I) -> Result<Self> {
        let mut f = FinSupportFn::new();
        for (w, c) in pairs {
            f.add(w, c)?;
        }
        Ok(f)
    }

    pub fn add(&mut self, w: Weight, c: Q) -> Result<()> {
        if c.is_negative() {
            return Err(Error::Precondition(format!("negative coefficient {c} at {w}")));
        }
        if c.is_zero() {
            return Ok(());
        }
        *self.values.entry(w).or_insert_with(Q::zero) += c;
        Ok(())
    }

    pub fn support(&self) -> impl Iterator<Item = &Weight> {
        self.values.keys()
    }

    pub fn entries(&self) -> impl Iterator<Item = (&Weight, &Q)> {
        self.values.iter()
    }

    pub fn takes_values_in(&self, group: &CoefficientGroup) -> bool {
        self.values.values().all(|c| group.contains_positive(c))
    }

    /// `l(f) = sum f(x)`.
    pub fn total(&self) -> Q {
        self.values.values().copied().sum()
    }

    /// `l->(f) = sum f(x) x`.
    pub fn moment(&self, rank: usize) -> Weight {
        self.values
            .iter()
            .fold(Weight::zero(rank), |acc, (w, c)| &acc + &w.scale(*c))
    }
}
