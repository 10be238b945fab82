//! Brute-force oracles shared by the integration tests.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap};

use borel_ideals::dseries::{is_tau_dominant, HCParameter};
use borel_ideals::lattice::v_of_z;
use borel_ideals::rootsys::{q, Point, Root, RootSystem};
use borel_ideals::symmspace::Tau;
use borel_ideals::weyl::{subgroup_elements, WeylElt};

pub fn all_roots(rs: &RootSystem) -> Vec<Root> {
    rs.positive_roots().iter().flat_map(|r| [*r, -*r]).collect()
}

/// Number of ways to write x as a nonnegative integer combination of `roots`.
pub struct Partitions<'a> {
    roots: &'a [Root],
    memo: HashMap<(usize, Point), i64>,
}

impl<'a> Partitions<'a> {
    pub fn new(roots: &'a [Root]) -> Self {
        Partitions { roots, memo: HashMap::new() }
    }

    pub fn count(&mut self, k: usize, x: &Point) -> i64 {
        if x.0.iter().all(|c| *c == q(0)) {
            return 1;
        }
        if k == self.roots.len() || x.0.iter().any(|c| *c < q(0) || !c.is_integer()) {
            return 0;
        }
        if let Some(&v) = self.memo.get(&(k, x.clone())) {
            return v;
        }
        let a = self.roots[k].to_point();
        let mut y = x.clone();
        let mut total = 0;
        while y.0.iter().all(|c| *c >= q(0)) {
            total += self.count(k + 1, &y);
            y = &y - &a;
        }
        self.memo.insert((k, x.clone()), total);
        total
    }
}

pub fn w_tau(rs: &RootSystem, tau: &Tau) -> Vec<(WeylElt, i64)> {
    let gens: Vec<WeylElt> = tau
        .simple_roots(rs)
        .unwrap()
        .iter()
        .map(|b| WeylElt::reflection(rs, b))
        .collect();
    subgroup_elements(rs, &gens)
        .into_iter()
        .map(|w| {
            let s = w.sign(rs);
            (w, s)
        })
        .collect()
}

pub fn blattner(
    rs: &RootSystem,
    tau: &Tau,
    hc: &HCParameter,
    mu_l: &Point,
    mu: &Point,
    wk: &[(WeylElt, i64)],
) -> i64 {
    // noncompact roots of Δ_λ^+, written in the basis where they are positive
    let noncompact: Vec<Root> = all_roots(rs)
        .iter()
        .filter(|r| rs.pair_root(r, &hc.lambda) > q(0) && !tau.is_compact(rs, r))
        .copied()
        .collect();
    // coordinates in the simple roots of Δ_λ^+
    let v = v_of_z(rs, &hc.lambda);
    let frame: Vec<Root> = noncompact.iter().map(|r| v.apply_inv_root(r)).collect();
    let mut parts = Partitions::new(&frame);
    let rc = tau.rho_c(rs);
    wk.iter()
        .map(|(w, s)| {
            let x = &(&w.apply(&(mu + &rc)) - mu_l) - &rc;
            s * parts.count(0, &v.apply_inv(&x))
        })
        .sum()
}

/// Δ_τ^+-dominant weights μ_λ + Σ of at most `depth` noncompact roots of Δ_λ^+.
pub fn candidates(rs: &RootSystem, tau: &Tau, hc: &HCParameter, mu_l: &Point, depth: usize) -> Vec<Point> {
    let noncompact: Vec<Point> = all_roots(rs)
        .iter()
        .filter(|r| rs.pair_root(r, &hc.lambda) > q(0) && !tau.is_compact(rs, r))
        .map(|r| r.to_point())
        .collect();
    let mut layer = vec![mu_l.clone()];
    let mut all = BTreeSet::from([mu_l.clone()]);
    for _ in 0..depth {
        let mut next = Vec::new();
        for x in &layer {
            for a in &noncompact {
                let y = x + a;
                if all.insert(y.clone()) {
                    next.push(y);
                }
            }
        }
        layer = next;
    }
    all.into_iter()
        .filter(|m| is_tau_dominant(rs, tau, m).unwrap())
        .collect()
}

