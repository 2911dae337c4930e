//! Fixed inputs shared by the benchmarks.

use weylcrest::{RootSystem, Weight};

/// Root systems paired with a regular dominant weight.
pub fn regular_cases() -> Vec<(RootSystem, Weight)> {
    ["A2", "A3", "B2", "G2"]
        .iter()
        .map(|l| {
            let rs = RootSystem::from_label(l).expect("valid label");
            let lambda = rs.rho();
            (rs, lambda)
        })
        .collect()
}
