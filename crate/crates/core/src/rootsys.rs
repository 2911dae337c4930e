//! Finite-type root systems in Bourbaki numbering, with the invariant form
//! scaled so that long roots have squared length 2.
//!
//! Roots are stored by their integer coordinates in the simple-root basis.
//! Weights use fundamental-weight coordinates, so `cartan[i][j]` is the value
//! of `alpha_j` on the coroot `h_i`, and column `j` is `alpha_j` itself.

use crate::error::{Error, Result};
use crate::rational::{q, qf, Q};
use crate::subset::{SubsetJ, MAX_RANK};
use crate::weightlat::Weight;
use num_traits::{One, Signed, Zero};
use serde::Serialize;
use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};
use std::fmt;

pub const DEFAULT_ORBIT_CAP: usize = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Kind {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Kind {
    pub fn parse(c: char) -> Option<Kind> {
        Some(match c.to_ascii_uppercase() {
            'A' => Kind::A,
            'B' => Kind::B,
            'C' => Kind::C,
            'D' => Kind::D,
            'E' => Kind::E,
            'F' => Kind::F,
            'G' => Kind::G,
            _ => return None,
        })
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self)
    }
}

#[derive(Clone, Debug)]
pub struct RootSystem {
    kind: Kind,
    rank: usize,
    cartan: Vec<Vec<i64>>,
    form: Vec<Vec<Q>>,
    cartan_inv: Vec<Vec<Q>>,
    positive: Vec<Vec<i64>>,
    positive_fw: Vec<Weight>,
    highest: usize,
}

#[derive(Serialize)]
struct RootSystemJson<'a> {
    kind: Kind,
    rank: usize,
    cartan: &'a [Vec<i64>],
    positive_roots: &'a [Vec<i64>],
}

fn chain_edges(n: usize) -> Vec<(usize, usize)> {
    (1..n).map(|i| (i - 1, i)).collect()
}

fn simple_form(kind: Kind, n: usize) -> Vec<Vec<Q>> {
    let mut b = vec![vec![Q::zero(); n]; n];
    let mut set = |i: usize, j: usize, v: Q| {
        b[i][j] = v;
        b[j][i] = v;
    };
    match kind {
        Kind::A => {
            for i in 0..n {
                set(i, i, q(2));
            }
            for (i, j) in chain_edges(n) {
                set(i, j, q(-1));
            }
        }
        Kind::B => {
            for i in 0..n {
                set(i, i, if i + 1 == n { q(1) } else { q(2) });
            }
            for (i, j) in chain_edges(n) {
                set(i, j, q(-1));
            }
        }
        Kind::C => {
            for i in 0..n {
                set(i, i, if i + 1 == n { q(2) } else { q(1) });
            }
            for (i, j) in chain_edges(n) {
                set(i, j, if j + 1 == n { q(-1) } else { qf(-1, 2) });
            }
        }
        Kind::D => {
            for i in 0..n {
                set(i, i, q(2));
            }
            for (i, j) in chain_edges(n - 1) {
                set(i, j, q(-1));
            }
            set(n - 3, n - 1, q(-1));
        }
        Kind::E => {
            for i in 0..n {
                set(i, i, q(2));
            }
            set(0, 2, q(-1));
            set(1, 3, q(-1));
            for i in 2..n - 1 {
                set(i, i + 1, q(-1));
            }
        }
        Kind::F => {
            set(0, 0, q(2));
            set(1, 1, q(2));
            set(2, 2, q(1));
            set(3, 3, q(1));
            set(0, 1, q(-1));
            set(1, 2, q(-1));
            set(2, 3, qf(-1, 2));
        }
        Kind::G => {
            set(0, 0, qf(2, 3));
            set(1, 1, q(2));
            set(0, 1, q(-1));
        }
    }
    b
}

fn valid_rank(kind: Kind, rank: usize) -> std::result::Result<(), String> {
    let ok = match kind {
        Kind::A => rank >= 1,
        Kind::B => rank >= 2,
        Kind::C => rank >= 3,
        Kind::D => rank >= 4,
        Kind::E => (6..=8).contains(&rank),
        Kind::F => rank == 4,
        Kind::G => rank == 2,
    };
    if !ok {
        return Err("invalid rank for this type".into());
    }
    if rank > MAX_RANK {
        return Err(format!("rank above the supported maximum {MAX_RANK}"));
    }
    Ok(())
}

/// Exact inverse of a nonsingular rational matrix.
pub(crate) fn invert(m: &[Vec<Q>]) -> Option<Vec<Vec<Q>>> {
    let n = m.len();
    let mut a: Vec<Vec<Q>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Q::one() } else { Q::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let p = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, p);
        let piv = a[col][col];
        for x in a[col].iter_mut() {
            *x /= piv;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col];
                for c in 0..2 * n {
                    let d = f * a[col][c];
                    a[r][c] -= d;
                }
            }
        }
    }
    Some(a.into_iter().map(|r| r[n..].to_vec()).collect())
}

impl RootSystem {
    pub fn new(kind: Kind, rank: usize) -> Result<Self> {
        valid_rank(kind, rank).map_err(|reason| Error::InvalidType {
            kind: kind.to_string(),
            rank,
            reason,
        })?;
        let form = simple_form(kind, rank);
        let cartan: Vec<Vec<i64>> = (0..rank)
            .map(|i| {
                (0..rank)
                    .map(|j| {
                        let v = q(2) * form[i][j] / form[i][i];
                        debug_assert!(v.is_integer());
                        v.to_integer()
                    })
                    .collect()
            })
            .collect();
        let cq: Vec<Vec<Q>> = cartan
            .iter()
            .map(|r| r.iter().map(|&x| q(x)).collect())
            .collect();
        let cartan_inv = invert(&cq).ok_or_else(|| Error::Internal("singular Cartan matrix".into()))?;
        let positive = positive_roots(&cartan);
        let positive_fw = positive
            .iter()
            .map(|r| Weight::new(cartan_times(&cartan, r)))
            .collect();
        let highest = (0..positive.len())
            .max_by_key(|&k| positive[k].iter().sum::<i64>())
            .unwrap_or(0);
        Ok(RootSystem {
            kind,
            rank,
            cartan,
            form,
            cartan_inv,
            positive,
            positive_fw,
            highest,
        })
    }

    /// Parses labels such as `A2`, `g2`, `E8`.
    pub fn from_label(label: &str) -> Result<Self> {
        let label = label.trim();
        let mut chars = label.chars();
        let bad = || Error::Parse(format!("not a root system label: {label:?}"));
        let kind = chars.next().and_then(Kind::parse).ok_or_else(bad)?;
        let rank: usize = chars.as_str().parse().map_err(|_| bad())?;
        Self::new(kind, rank)
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn label(&self) -> String {
        format!("{}{}", self.kind, self.rank)
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// The invariant form on simple roots, `(alpha_i, alpha_j)`.
    pub fn form(&self) -> &[Vec<Q>] {
        &self.form
    }

    pub fn full(&self) -> SubsetJ {
        SubsetJ::full(self.rank)
    }

    /// Positive roots in simple-root coordinates, ordered by height.
    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive
    }

    /// Positive roots in fundamental-weight coordinates, same order.
    pub fn positive_roots_fw(&self) -> &[Weight] {
        &self.positive_fw
    }

    pub fn highest_root(&self) -> &[i64] {
        &self.positive[self.highest]
    }

    pub fn highest_root_fw(&self) -> Weight {
        self.positive_fw[self.highest].clone()
    }

    /// Positive roots supported on `j`, in simple-root coordinates.
    pub fn positive_roots_in(&self, j: SubsetJ) -> Vec<Vec<i64>> {
        self.positive
            .iter()
            .filter(|r| supported_in(r, j))
            .cloned()
            .collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(RootSystemJson {
            kind: self.kind,
            rank: self.rank,
            cartan: &self.cartan,
            positive_roots: &self.positive,
        })
        .expect("serializable")
    }

    pub fn check(&self, w: &Weight) -> Result<()> {
        if w.rank() != self.rank {
            return Err(Error::RankMismatch {
                expected: self.rank,
                found: w.rank(),
            });
        }
        Ok(())
    }

    pub fn simple_root(&self, i: usize) -> Weight {
        Weight::new((0..self.rank).map(|k| q(self.cartan[k][i])).collect())
    }

    pub fn fundamental(&self, i: usize) -> Weight {
        Weight::fundamental(self.rank, i)
    }

    /// Half-sum of positive roots, the sum of all fundamental weights.
    pub fn rho(&self) -> Weight {
        Weight::from_ints(&vec![1; self.rank])
    }

    /// `rho_J`, the sum of the fundamental weights indexed by `j`.
    pub fn rho_of_subset(&self, j: SubsetJ) -> Weight {
        Weight::new(
            (0..self.rank)
                .map(|i| if j.contains(i) { Q::one() } else { Q::zero() })
                .collect(),
        )
    }

    pub fn root_to_weight(&self, r: &[i64]) -> Weight {
        Weight::new(cartan_times(&self.cartan, r))
    }

    pub fn root_coords_to_weight(&self, r: &[Q]) -> Weight {
        Weight::new(
            (0..self.rank)
                .map(|i| (0..self.rank).map(|j| q(self.cartan[i][j]) * r[j]).sum())
                .collect(),
        )
    }

    /// Coordinates of a weight in the simple-root basis.
    pub fn to_root_coords(&self, w: &Weight) -> Vec<Q> {
        (0..self.rank)
            .map(|i| {
                (0..self.rank)
                    .map(|j| self.cartan_inv[i][j] * w.coords()[j])
                    .sum()
            })
            .collect()
    }

    /// Integer simple-root coordinates, if the weight lies in the root lattice.
    pub fn to_root_ints(&self, w: &Weight) -> Option<Vec<i64>> {
        self.to_root_coords(w)
            .into_iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect()
    }

    /// `(mu, nu)` under the normalized invariant form.
    pub fn pairing(&self, mu: &Weight, nu: &Weight) -> Q {
        let r = self.to_root_coords(nu);
        (0..self.rank)
            .map(|j| r[j] * mu.coords()[j] * self.form[j][j] / q(2))
            .sum()
    }

    pub fn reflect(&self, i: usize, w: &Weight) -> Weight {
        let c = w.coords()[i];
        if c.is_zero() {
            return w.clone();
        }
        Weight::new(
            (0..self.rank)
                .map(|k| w.coords()[k] - c * q(self.cartan[k][i]))
                .collect(),
        )
    }

    /// `beta(h_i)` for `beta` in simple-root coordinates.
    pub fn root_eval(&self, beta: &[i64], i: usize) -> i64 {
        (0..self.rank).map(|j| self.cartan[i][j] * beta[j]).sum()
    }

    pub fn reflect_root(&self, i: usize, beta: &[i64]) -> Vec<i64> {
        let c = self.root_eval(beta, i);
        let mut out = beta.to_vec();
        out[i] -= c;
        out
    }

    pub fn is_root(&self, beta: &[i64]) -> bool {
        let neg: Vec<i64> = beta.iter().map(|x| -x).collect();
        self.positive.iter().any(|r| r == beta || *r == neg)
    }

    /// `W_J(lambda)` by breadth-first closure, sorted lexicographically.
    pub fn weyl_orbit(&self, j: SubsetJ, lambda: &Weight) -> Result<Vec<Weight>> {
        self.weyl_orbit_capped(j, lambda, DEFAULT_ORBIT_CAP)
    }

    pub fn weyl_orbit_capped(&self, j: SubsetJ, lambda: &Weight, cap: usize) -> Result<Vec<Weight>> {
        self.check(lambda)?;
        let mut seen: HashSet<Weight> = HashSet::new();
        let mut queue = VecDeque::new();
        seen.insert(lambda.clone());
        queue.push_back(lambda.clone());
        while let Some(mu) = queue.pop_front() {
            for i in j.iter() {
                let nu = self.reflect(i, &mu);
                if !seen.contains(&nu) {
                    if seen.len() >= cap {
                        return Err(Error::Resource(format!(
                            "Weyl orbit of {} exceeds {cap} elements",
                            lambda
                        )));
                    }
                    seen.insert(nu.clone());
                    queue.push_back(nu);
                }
            }
        }
        let set: BTreeSet<Weight> = seen.into_iter().collect();
        Ok(set.into_iter().collect())
    }

    /// The order of `W_J`, read off from the orbit of a regular weight.
    pub fn parabolic_order(&self, j: SubsetJ) -> Result<usize> {
        Ok(self.weyl_orbit(j, &self.rho())?.len())
    }

    /// All elements of `W_J` as reduced words, in breadth-first order of
    /// word length.
    pub fn parabolic_elements(&self, j: SubsetJ) -> Result<Vec<WeylElement>> {
        let rho = self.rho();
        let mut seen: HashMap<Weight, usize> = HashMap::new();
        let mut out = vec![WeylElement::identity()];
        let mut images = vec![rho.clone()];
        seen.insert(rho, 0);
        let mut head = 0;
        while head < out.len() {
            for i in j.iter() {
                let img = self.reflect(i, &images[head]);
                if !seen.contains_key(&img) {
                    if out.len() >= DEFAULT_ORBIT_CAP {
                        return Err(Error::Resource(format!(
                            "parabolic subgroup on {j} exceeds {DEFAULT_ORBIT_CAP} elements"
                        )));
                    }
                    let mut word = vec![i];
                    word.extend_from_slice(&out[head].word);
                    seen.insert(img.clone(), out.len());
                    out.push(WeylElement { word });
                    images.push(img);
                }
            }
            head += 1;
        }
        Ok(out)
    }

    /// The longest element of `W_J`.
    pub fn longest_element(&self, j: SubsetJ) -> WeylElement {
        let mut v = self.rho();
        let mut applied = Vec::new();
        while let Some(i) = j.iter().find(|&i| v.coords()[i].is_positive()) {
            v = self.reflect(i, &v);
            applied.push(i);
        }
        applied.reverse();
        WeylElement { word: applied }
    }

    /// `C(lambda, J)`: the union of the connected components of the Dynkin
    /// subdiagram on `J` that meet the support of `lambda`.
    pub fn dynkin_components(&self, j: SubsetJ, lambda: &Weight) -> SubsetJ {
        self.components_meeting(j, crate::weightlat::support(lambda))
    }

    /// The union of the connected components of the Dynkin subdiagram on `j`
    /// that meet `seeds`.
    pub fn components_meeting(&self, j: SubsetJ, seeds: SubsetJ) -> SubsetJ {
        let mut out = SubsetJ::empty();
        let mut visited = SubsetJ::empty();
        for start in j.iter() {
            if visited.contains(start) {
                continue;
            }
            let mut comp = SubsetJ::singleton(start);
            let mut stack = vec![start];
            while let Some(a) = stack.pop() {
                for b in j.iter() {
                    if !comp.contains(b) && self.cartan[a][b] != 0 {
                        comp = comp.with(b);
                        stack.push(b);
                    }
                }
            }
            visited = visited.union(comp);
            if !comp.intersection(seeds).is_empty() {
                out = out.union(comp);
            }
        }
        out
    }

    /// Number of positive roots sent to negative roots by `w`.
    pub fn inversion_count(&self, w: &WeylElement) -> usize {
        self.positive
            .iter()
            .filter(|r| {
                let img = w.act_on_root(self, r);
                img.iter().any(|&c| c < 0)
            })
            .count()
    }
}

fn supported_in(r: &[i64], j: SubsetJ) -> bool {
    r.iter().enumerate().all(|(i, &c)| c == 0 || j.contains(i))
}

fn cartan_times(cartan: &[Vec<i64>], r: &[i64]) -> Vec<Q> {
    (0..cartan.len())
        .map(|i| q((0..r.len()).map(|j| cartan[i][j] * r[j]).sum()))
        .collect()
}

/// Positive roots by the root-string algorithm: `beta + alpha_i` is a root
/// exactly when `p - beta(h_i) > 0`, where `p` is the length of the
/// `alpha_i`-string below `beta`.
fn positive_roots(cartan: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = cartan.len();
    let mut all: Vec<Vec<i64>> = (0..n)
        .map(|i| (0..n).map(|k| i64::from(k == i)).collect())
        .collect();
    let mut known: HashSet<Vec<i64>> = all.iter().cloned().collect();
    let mut layer = all.clone();
    while !layer.is_empty() {
        let mut next = Vec::new();
        for beta in &layer {
            for i in 0..n {
                let mut p = 0;
                let mut below = beta.clone();
                loop {
                    below[i] -= 1;
                    if known.contains(&below) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                let eval: i64 = (0..n).map(|j| cartan[i][j] * beta[j]).sum();
                if p - eval > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if known.insert(up.clone()) {
                        next.push(up);
                    }
                }
            }
        }
        next.sort();
        all.extend(next.iter().cloned());
        layer = next;
    }
    all
}

/// A Weyl group element stored as a word in simple reflections.
///
/// The word `[i1, ..., ik]` denotes `s_i1 ... s_ik`, so the last letter acts
/// first.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeylElement {
    pub word: Vec<usize>,
}

impl WeylElement {
    pub fn identity() -> Self {
        WeylElement { word: Vec::new() }
    }

    pub fn from_word(word: Vec<usize>) -> Self {
        WeylElement { word }
    }

    pub fn simple(i: usize) -> Self {
        WeylElement { word: vec![i] }
    }

    pub fn act(&self, rs: &RootSystem, w: &Weight) -> Weight {
        self.word
            .iter()
            .rev()
            .fold(w.clone(), |acc, &i| rs.reflect(i, &acc))
    }

    pub fn act_inverse(&self, rs: &RootSystem, w: &Weight) -> Weight {
        self.word
            .iter()
            .fold(w.clone(), |acc, &i| rs.reflect(i, &acc))
    }

    pub fn act_on_root(&self, rs: &RootSystem, beta: &[i64]) -> Vec<i64> {
        self.word
            .iter()
            .rev()
            .fold(beta.to_vec(), |acc, &i| rs.reflect_root(i, &acc))
    }

    pub fn inverse(&self) -> Self {
        let mut word = self.word.clone();
        word.reverse();
        WeylElement { word }
    }

    /// `self * other`, acting as `other` first.
    pub fn compose(&self, other: &WeylElement) -> Self {
        let mut word = self.word.clone();
        word.extend_from_slice(&other.word);
        WeylElement { word }
    }

    /// An equivalent reduced word, read off by descending from `w(rho)` to
    /// `rho` through the lowest-index negative coordinate at each step.
    pub fn reduced(&self, rs: &RootSystem) -> Self {
        let rho = rs.rho();
        let mut v = self.act(rs, &rho);
        let mut word = Vec::new();
        while let Some(i) = (0..rs.rank()).find(|&i| v.coords()[i].is_negative()) {
            v = rs.reflect(i, &v);
            word.push(i);
        }
        WeylElement { word }
    }

    pub fn length(&self, rs: &RootSystem) -> usize {
        self.reduced(rs).word.len()
    }

    pub fn sign(&self, rs: &RootSystem) -> i64 {
        if self.length(rs).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Equality as group elements, tested on the regular weight `rho`.
    pub fn same_element(&self, other: &WeylElement, rs: &RootSystem) -> bool {
        let rho = rs.rho();
        self.act(rs, &rho) == other.act(rs, &rho)
    }

    pub fn one_based(&self) -> Vec<usize> {
        self.word.iter().map(|i| i + 1).collect()
    }
}
