//! Exact feasibility for `A x = b, x >= 0` by the two-phase simplex method.
//!
//! Phase one only: artificial variables are driven to zero with Bland's rule,
//! which guarantees termination on degenerate problems.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Returns a nonnegative solution of `A x = b` if one exists.
pub fn feasible(a: &[Vec<BigRational>], b: &[BigRational]) -> Option<Vec<BigRational>> {
    let m = a.len();
    let n = if m == 0 { 0 } else { a[0].len() };
    if m == 0 {
        return Some(vec![BigRational::zero(); n]);
    }
    let width = n + m;
    let mut t: Vec<Vec<BigRational>> = Vec::with_capacity(m);
    let mut rhs: Vec<BigRational> = Vec::with_capacity(m);
    for i in 0..m {
        let flip = b[i].is_negative();
        let mut row = Vec::with_capacity(width);
        for j in 0..n {
            row.push(if flip { -a[i][j].clone() } else { a[i][j].clone() });
        }
        for k in 0..m {
            row.push(if k == i {
                BigRational::one()
            } else {
                BigRational::zero()
            });
        }
        t.push(row);
        rhs.push(if flip { -b[i].clone() } else { b[i].clone() });
    }
    let mut basis: Vec<usize> = (n..width).collect();
    let cost = |j: usize| j >= n;

    loop {
        let mut entering = None;
        for j in 0..width {
            if basis.contains(&j) {
                continue;
            }
            let mut r = if cost(j) {
                BigRational::one()
            } else {
                BigRational::zero()
            };
            for i in 0..m {
                if cost(basis[i]) {
                    r -= &t[i][j];
                }
            }
            if r.is_negative() {
                entering = Some(j);
                break;
            }
        }
        let Some(e) = entering else { break };
        let mut leave: Option<(usize, BigRational)> = None;
        for i in 0..m {
            if t[i][e].is_positive() {
                let ratio = &rhs[i] / &t[i][e];
                let better = match &leave {
                    None => true,
                    Some((li, lr)) => ratio < *lr || (ratio == *lr && basis[i] < basis[*li]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
        }
        let (p, _) = leave?;
        let piv = t[p][e].clone();
        for x in t[p].iter_mut() {
            *x /= &piv;
        }
        rhs[p] /= &piv;
        for i in 0..m {
            if i == p || t[i][e].is_zero() {
                continue;
            }
            let f = t[i][e].clone();
            for j in 0..width {
                if !t[p][j].is_zero() {
                    let d = &f * &t[p][j];
                    t[i][j] -= d;
                }
            }
            let d = &f * &rhs[p];
            rhs[i] -= d;
        }
        basis[p] = e;
    }

    let mut x = vec![BigRational::zero(); width];
    for i in 0..m {
        x[basis[i]] = rhs[i].clone();
    }
    if x[n..].iter().any(|v| !v.is_zero()) {
        return None;
    }
    x.truncate(n);
    Some(x)
}
