//! Cross-checks of the structural computations against the brute-force
//! oracles over a fixed grid of root systems and highest weights.

use serde_json::{json, Value};

use weylcrest::hwmodule::{
    describe_module, fernando_parabolic, module_weights, truncated_character, weight_formulas, wt_j, Family,
    HWModuleDesc,
};
use weylcrest::oracle::{
    brute_weak_faces_containing, freudenthal_mult, lattice_hull_points, verma_character_raw, weyl_dim,
};
use weylcrest::rational::{q, qf};
use weylcrest::weightlat::{depth_below, is_dominant_integral, is_simply_regular, j_lambda};
use weylcrest::{Result, RootSystem, SubsetJ, Weight};

const LABELS: [&str; 12] = ["A1", "A2", "B2", "G2", "A3", "B3", "C3", "A4", "B4", "C4", "D4", "F4"];
pub const MAX_RANK: usize = 4;

struct Suite {
    name: &'static str,
    checked: usize,
    failure: Option<String>,
}

impl Suite {
    fn new(name: &'static str) -> Self {
        Suite { name, checked: 0, failure: None }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(what());
        }
    }

    fn to_json(&self) -> Value {
        let mut v = json!({
            "suite": self.name,
            "checked": self.checked,
            "passed": self.failure.is_none(),
        });
        if let Some(f) = &self.failure {
            v["witness"] = json!(f);
        }
        v
    }
}

fn sample_weights(rs: &RootSystem) -> Vec<Weight> {
    let n = rs.rank();
    let unit = |i: usize, v| {
        let mut c = vec![q(0); n];
        c[i] = v;
        Weight::new(c)
    };
    let mut out = vec![
        Weight::zero(n),
        rs.rho(),
        rs.rho().scale(q(-1)),
        rs.highest_root_fw(),
        Weight::new(vec![qf(1, 2); n]),
        Weight::new((0..n).map(|i| if i % 2 == 0 { q(1) } else { qf(-3, 2) }).collect()),
    ];
    out.extend((0..n).map(|i| unit(i, q(1))));
    out.extend((0..n).map(|i| unit(i, q(-2))));
    out.sort();
    out.dedup();
    out
}

fn families(lambda: &Weight) -> Vec<Family> {
    let mut out = vec![Family::Verma, Family::Simple];
    out.extend(j_lambda(lambda).subsets().map(Family::Parabolic));
    out
}

fn descriptors(rs: &RootSystem) -> Result<Vec<HWModuleDesc>> {
    let mut out = Vec::new();
    for lambda in sample_weights(rs) {
        for fam in families(&lambda) {
            out.push(describe_module(rs, &lambda, fam)?);
        }
    }
    Ok(out)
}

/// Runs every suite on root systems of rank at most `max_rank`.
pub fn run(max_rank: usize, depth: usize, bound: usize) -> Result<(bool, Value)> {
    let mut formulas = Suite::new("weight formulas agree");
    let mut lattice = Suite::new("lattice points in hull equal weights");
    let mut verma = Suite::new("Verma character equals Kostant oracle");
    let mut simple = Suite::new("simple character equals Freudenthal and Weyl dimension");
    let mut faces = Suite::new("weak faces through lambda equal dominant slices");
    let mut fernando = Suite::new("negative simple roots of the Fernando set equal J(V)");
    let mut systems = Vec::new();
    for label in LABELS {
        let rs = RootSystem::from_label(label)?;
        if rs.rank() > max_rank {
            continue;
        }
        systems.push(label);
        let d = if rs.rank() <= 2 { depth } else { depth.min(4) };
        for desc in descriptors(&rs)? {
            let lam = &desc.lambda;
            let tag = || format!("{label} {} lambda = {lam}", desc.family.name());
            let [a, b, c] = weight_formulas(&rs, &desc, d)?;
            formulas.check(a.same_elements(&b) && a.same_elements(&c), tag);
            let pts = lattice_hull_points(&rs, &desc, d)?;
            lattice.check(pts.same_elements(&a), tag);
            let f = fernando_parabolic(&rs, &desc);
            let neg: SubsetJ = SubsetJ::from_indices((0..rs.rank()).filter(|&i| {
                f.contains(&(0..rs.rank()).map(|k| -i64::from(k == i)).collect::<Vec<_>>())
            }));
            fernando.check(neg == desc.jv, tag);
            if desc.family == Family::Verma {
                let ch = truncated_character(&rs, &desc, d)?;
                verma.check(ch == verma_character_raw(&rs, lam, d)?, tag);
            }
            if desc.family == Family::Simple && is_dominant_integral(lam) && weyl_dim(&rs, lam)? <= 200 {
                let low = rs.longest_element(rs.full()).act(&rs, lam);
                let full = depth_below(&rs, lam, &low).unwrap_or(0) as usize;
                let ch = truncated_character(&rs, &desc, full)?;
                let mut ok = ch.dimension() == weyl_dim(&rs, lam)?;
                for (mu, m) in &ch.terms {
                    ok = ok && freudenthal_mult(&rs, lam, mu)? == *m;
                }
                simple.check(ok, tag);
            }
            if rs.rank() <= 2 && is_simply_regular(lam) {
                let fd = depth.min(4);
                let x = module_weights(&rs, &desc, fd)?;
                if x.len() <= 15 {
                    let brute = brute_weak_faces_containing(x.weights(), lam, bound)?;
                    let mut slices = Vec::new();
                    for j in rs.full().subsets() {
                        slices.push(wt_j(&rs, &desc, j, fd)?.filter(|w| x.contains(w)).into_weights());
                    }
                    slices.sort();
                    slices.dedup();
                    faces.check(brute == slices, tag);
                }
            }
        }
    }
    let suites = [formulas, lattice, verma, simple, faces, fernando];
    let passed = suites.iter().all(|s| s.failure.is_none());
    let report = json!({
        "passed": passed,
        "max_rank": max_rank,
        "depth": depth,
        "bound": bound,
        "systems": systems,
        "suites": suites.iter().map(Suite::to_json).collect::<Vec<_>>(),
    });
    Ok((passed, report))
}
