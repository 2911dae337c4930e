//! Convex hulls of weight sets as exact V-polyhedra: membership, vertices,
//! extremal rays, stabilizers, maximizers and face enumeration.

use crate::error::{Error, Result};
use crate::faces::canonical_j;
use crate::hwmodule::{Family, HWModuleDesc};
use crate::lp;
use crate::rational::{to_big, Q};
use crate::rootsys::{RootSystem, WeylElement};
use crate::subset::SubsetJ;
use crate::weightlat::{is_simply_regular, Weight};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::collections::{BTreeSet, HashSet};

/// `conv(vertices) + cone(cone)`.
#[derive(Clone, Debug)]
pub struct Polyhedron {
    pub vertices: Vec<Weight>,
    pub cone: Vec<Weight>,
    /// Highest weight and integrability set of the module it came from.
    pub provenance: Option<(Weight, SubsetJ)>,
    vertex_roots: Vec<Vec<Q>>,
    cone_roots: Vec<Vec<Q>>,
}

fn big_columns(cols: &[Vec<Q>]) -> Vec<Vec<BigRational>> {
    cols.iter().map(|c| c.iter().map(to_big).collect()).collect()
}

/// Whether `target` is a convex combination of `points` plus a nonnegative
/// combination of `rays`. With no points, tests membership in the cone.
fn in_hull_plus_cone(points: &[Vec<Q>], rays: &[Vec<Q>], target: &[Q], convex: bool) -> bool {
    let dim = target.len();
    let p = big_columns(points);
    let r = big_columns(rays);
    let cols = p.len() + r.len();
    let rows = dim + usize::from(convex);
    let mut a = vec![vec![BigRational::zero(); cols]; rows];
    for (k, col) in p.iter().chain(r.iter()).enumerate() {
        for i in 0..dim {
            a[i][k] = col[i].clone();
        }
    }
    let mut b: Vec<BigRational> = target.iter().map(to_big).collect();
    if convex {
        for k in 0..p.len() {
            a[dim][k] = BigRational::one();
        }
        b.push(BigRational::one());
    }
    lp::feasible(&a, &b).is_some()
}

/// Scales an integer vector to its primitive multiple.
fn primitive(v: &[i64]) -> Vec<i64> {
    let g = v.iter().fold(0i64, |g, &x| g.gcd(&x));
    if g == 0 {
        return v.to_vec();
    }
    v.iter().map(|x| x / g).collect()
}

fn positively_parallel(a: &[i64], b: &[i64]) -> bool {
    primitive(a) == primitive(b)
}

impl Polyhedron {
    pub fn from_parts(rs: &RootSystem, mut vertices: Vec<Weight>, cone: Vec<Weight>) -> Self {
        vertices.sort();
        vertices.dedup();
        let vertex_roots = vertices.iter().map(|v| rs.to_root_coords(v)).collect();
        let cone_roots = cone.iter().map(|c| rs.to_root_coords(c)).collect();
        Polyhedron {
            vertices,
            cone,
            provenance: None,
            vertex_roots,
            cone_roots,
        }
    }

    /// Exact membership by a feasibility program.
    pub fn contains(&self, rs: &RootSystem, mu: &Weight) -> bool {
        if let Some((lambda, _)) = &self.provenance {
            if rs.to_root_coords(&(lambda - mu)).iter().any(|c| c.is_negative()) {
                return false;
            }
        }
        if self.vertices.binary_search(mu).is_ok() {
            return true;
        }
        in_hull_plus_cone(&self.vertex_roots, &self.cone_roots, &rs.to_root_coords(mu), true)
    }

    /// Whether `other` is contained in `self`.
    pub fn contains_polyhedron(&self, rs: &RootSystem, other: &Polyhedron) -> bool {
        other.vertices.iter().all(|v| self.contains(rs, v))
            && other
                .cone_roots
                .iter()
                .all(|c| in_hull_plus_cone(&[], &self.cone_roots, c, false))
    }

    /// Whether `v` is a vertex, i.e. not in the hull of the other vertices
    /// plus the cone.
    pub fn is_vertex(&self, rs: &RootSystem, v: &Weight) -> bool {
        let r = rs.to_root_coords(v);
        if !self.contains(rs, v) {
            return false;
        }
        let others: Vec<Vec<Q>> = self
            .vertex_roots
            .iter()
            .filter(|p| **p != r)
            .cloned()
            .collect();
        others.is_empty() || !in_hull_plus_cone(&others, &self.cone_roots, &r, true)
    }

    fn direction_ints(&self, rs: &RootSystem, d: &Weight) -> Vec<i64> {
        let r = rs.to_root_coords(d);
        let den = crate::rational::common_denominator(&r);
        r.iter().map(|c| (c * Q::from_integer(den)).to_integer()).collect()
    }

    /// Directions of the unbounded edges at the vertex `v`, as primitive
    /// integer vectors in simple-root coordinates.
    pub fn extremal_rays_at_vertex(&self, rs: &RootSystem, v: &Weight) -> Result<Vec<Vec<i64>>> {
        if self.vertices.binary_search(v).is_err() {
            return Err(Error::Precondition(format!("{v} is not a vertex")));
        }
        let mut gens: Vec<Vec<i64>> = Vec::new();
        let mut to_vertex: Vec<Vec<i64>> = Vec::new();
        for u in self.vertices.iter().filter(|u| *u != v) {
            let d = primitive(&self.direction_ints(rs, &(u - v)));
            to_vertex.push(d.clone());
            gens.push(d);
        }
        for c in &self.cone {
            gens.push(primitive(&self.direction_ints(rs, c)));
        }
        let gens: Vec<Vec<i64>> = gens.into_iter().collect::<BTreeSet<_>>().into_iter().collect();
        let as_q = |g: &Vec<i64>| g.iter().map(|&x| Q::from_integer(x)).collect::<Vec<Q>>();
        let mut rays = Vec::new();
        for g in &gens {
            let others: Vec<Vec<Q>> = gens
                .iter()
                .filter(|h| !positively_parallel(h, g))
                .map(as_q)
                .collect();
            let extremal = others.is_empty() || !in_hull_plus_cone(&[], &others, &as_q(g), false);
            let bounded = to_vertex.iter().any(|t| positively_parallel(t, g));
            if extremal && !bounded {
                rays.push(g.clone());
            }
        }
        Ok(rays)
    }

    /// Vertices of the face maximizing `(phi, -)`.
    pub fn maximizer_vertices(&self, rs: &RootSystem, phi: &Weight) -> Result<Vec<Weight>> {
        for c in &self.cone {
            if rs.pairing(phi, c).is_positive() {
                return Err(Error::Unbounded(format!(
                    "{phi} increases along the cone generator {c}"
                )));
            }
        }
        Ok(maximizer(rs, &self.vertices, phi))
    }

    pub fn to_json(&self, rs: &RootSystem, stabilizer: SubsetJ) -> serde_json::Value {
        serde_json::json!({
            "vertices": self.vertices.iter().map(Weight::to_json).collect::<Vec<_>>(),
            "cone": self.cone.iter().map(|c| serde_json::json!({
                "fw": c.to_strings(),
                "roots": self.direction_ints(rs, c),
            })).collect::<Vec<_>>(),
            "stabilizer": stabilizer.one_based(),
        })
    }
}

/// `conv wt V = conv W_J(V)(lambda) + R_+(Phi- \ Phi-_J(V))`.
pub fn hull_of_module(rs: &RootSystem, desc: &HWModuleDesc) -> Result<Polyhedron> {
    if !desc.weight_formula_valid {
        return Err(Error::Unsupported(
            "the hull of a generic quotient is not determined by lambda and J(V)".into(),
        ));
    }
    let vertices = rs.weyl_orbit(desc.jv, &desc.lambda)?;
    let cone: Vec<Weight> = rs
        .positive_roots()
        .iter()
        .filter(|r| r.iter().enumerate().any(|(i, &c)| c != 0 && !desc.jv.contains(i)))
        .map(|r| -&rs.root_to_weight(r))
        .collect();
    let mut p = Polyhedron::from_parts(rs, vertices, cone);
    p.provenance = Some((desc.lambda.clone(), desc.jv));
    Ok(p)
}

/// `X(phi)`: the points of `points` where `(phi, -)` is largest.
pub fn maximizer(rs: &RootSystem, points: &[Weight], phi: &Weight) -> Vec<Weight> {
    let vals: Vec<Q> = points.iter().map(|x| rs.pairing(phi, x)).collect();
    let Some(best) = vals.iter().max().copied() else {
        return Vec::new();
    };
    points
        .iter()
        .zip(&vals)
        .filter(|(_, v)| **v == best)
        .map(|(x, _)| x.clone())
        .collect()
}

/// Returns `J(V)` after certifying it: every `s_j` with `j` in `J(V)` maps the
/// vertex set to itself, and for every other `i` some weight `mu` on the
/// `alpha_i`-string through `lambda` has `s_i(mu)` outside the weights.
pub fn stabilizer_parabolic(rs: &RootSystem, desc: &HWModuleDesc) -> Result<SubsetJ> {
    let poly = hull_of_module(rs, desc)?;
    let verts: HashSet<&Weight> = poly.vertices.iter().collect();
    for j in desc.jv.iter() {
        if poly.vertices.iter().any(|v| !verts.contains(&rs.reflect(j, v))) {
            return Err(Error::Internal(format!("s_{} does not preserve the vertices", j + 1)));
        }
    }
    let lambda = &desc.lambda;
    for i in rs.full().difference(desc.jv).iter() {
        let c = lambda.coords()[i];
        let n = if crate::rational::is_nonneg_integer(&c) {
            c.to_integer() + 1
        } else {
            0
        };
        let mu = lambda - &rs.simple_root(i).scale(Q::from_integer(n));
        let slice = crate::hwmodule::wt_j(rs, desc, SubsetJ::singleton(i), n as usize)?;
        let image = rs.reflect(i, &mu);
        let image_is_weight = crate::weightlat::leq(rs, &image, lambda) && slice.contains(&image);
        if !slice.contains(&mu) || image_is_weight {
            return Err(Error::Internal(format!(
                "no certificate that s_{} moves the weights",
                i + 1
            )));
        }
    }
    Ok(desc.jv)
}

/// A face `w(wt_J V)` in canonical form.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FaceDescriptor {
    pub w: WeylElement,
    pub j: SubsetJ,
}

impl FaceDescriptor {
    /// The face restricted to a finite set of weights `x`:
    /// `{ mu in x : lambda - w^-1(mu) in Z_+ Delta_J }`.
    pub fn restrict(&self, rs: &RootSystem, lambda: &Weight, x: &[Weight]) -> Vec<Weight> {
        x.iter()
            .filter(|mu| {
                let back = self.w.act_inverse(rs, mu);
                rs.to_root_ints(&(lambda - &back)).is_some_and(|r| {
                    r.iter()
                        .enumerate()
                        .all(|(i, &c)| c >= 0 && (c == 0 || self.j.contains(i)))
                })
            })
            .cloned()
            .collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({ "w": self.w.one_based(), "J": self.j.one_based() })
    }
}

/// Elements of `W_J` sorted by length, then by word.
pub fn shortlex_elements(rs: &RootSystem, j: SubsetJ) -> Result<Vec<WeylElement>> {
    let mut els = rs.parabolic_elements(j)?;
    els.sort_by(|a, b| a.word.len().cmp(&b.word.len()).then_with(|| a.word.cmp(&b.word)));
    Ok(els)
}

/// Every nonempty face of `conv wt V` exactly once, as `(w, J)` with `w` in
/// `W_J(V)` of minimal length and `J` the largest index set giving the same
/// face. The full face is `(1, I)`.
pub fn enumerate_faces(rs: &RootSystem, desc: &HWModuleDesc) -> Result<Vec<FaceDescriptor>> {
    let covered = is_simply_regular(&desc.lambda)
        || matches!(desc.family, Family::Verma | Family::Parabolic(_) | Family::Simple);
    if !desc.weight_formula_valid || !covered {
        return Err(Error::Unsupported(
            "faces are classified only for simply-regular highest weights or for Verma, \
             parabolic Verma and simple modules"
                .into(),
        ));
    }
    let js: BTreeSet<SubsetJ> = rs.full().subsets().map(|j| canonical_j(rs, desc, j)).collect();
    let elements = shortlex_elements(rs, desc.jv)?;
    let mut out = Vec::new();
    for j in js {
        let verts = rs.weyl_orbit(j.intersection(desc.jv), &desc.lambda)?;
        let recession: Vec<Vec<i64>> = rs
            .positive_roots_in(j)
            .into_iter()
            .filter(|r| r.iter().enumerate().any(|(i, &c)| c != 0 && !desc.jv.contains(i)))
            .map(|r| r.iter().map(|c| -c).collect())
            .collect();
        let mut seen: HashSet<(Vec<Weight>, Vec<Vec<i64>>)> = HashSet::new();
        for w in &elements {
            let mut vs: Vec<Weight> = verts.iter().map(|v| w.act(rs, v)).collect();
            vs.sort();
            let mut rc: Vec<Vec<i64>> = recession.iter().map(|r| w.act_on_root(rs, r)).collect();
            rc.sort();
            if seen.insert((vs, rc)) {
                out.push(FaceDescriptor { w: w.clone(), j });
            }
        }
    }
    Ok(out)
}

