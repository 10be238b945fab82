mod common;

use common::{blattner, candidates, w_tau, Partitions};
use borel_ideals::character::{StandardLevi, Character};
use borel_ideals::dseries::*;
use borel_ideals::error::Error;
use borel_ideals::lattice::enumerate_ztilde_ab;
use borel_ideals::rootsys::{q, Family, Point, Root, RootSystem};
use borel_ideals::symmspace::{enumerate_x, fiber_ztilde_tau, is_compatible_borel, Tau};
use borel_ideals::weyl::{weyl_group_elements, WeylElt};

fn systems(max_rank: usize) -> Vec<RootSystem> {
    let mut out = Vec::new();
    for (f, lo) in [(Family::A, 1), (Family::B, 2), (Family::C, 3), (Family::D, 4), (Family::G, 2), (Family::F, 4)] {
        for n in lo..=max_rank {
            if let Ok(rs) = RootSystem::new(f, n) {
                out.push(rs);
            }
        }
    }
    out
}

fn taus(rs: &RootSystem) -> Vec<Tau> {
    enumerate_x(rs)
}

#[test]
fn symmetric_powers_match_blattner_on_compatible_cells() {
    let mut checked = 0;
    for rs in systems(3) {
        for tau in taus(&rs) {
            let wk = w_tau(&rs, &tau);
            for z in fiber_ztilde_tau(&rs, &tau) {
                if !is_compatible_borel(&rs, &z.point).unwrap() {
                    continue;
                }
                let base = rho_parameter(&rs, &tau, &z).unwrap();
                // λ = ρ_z and a shift further into the chamber
                let shifted = &base.lambda + &rho_z(&rs, &z.point);
                for lambda in [base.lambda.clone(), shifted] {
                    let hc = hc_parameter(&rs, &tau, &lambda).unwrap();
                    let mu_l = minimal_k_type(&rs, &tau, &hc).unwrap();
                    for mu in candidates(&rs, &tau, &hc, &mu_l, 3) {
                        let k = k_multiplicity(&rs, &tau, &hc, &mu, 8).unwrap();
                        assert!(k.complete, "{} {} {}: not complete", rs.label(), z.label(), mu);
                        let b = blattner(&rs, &tau, &hc, &mu_l, &mu, &wk);
                        assert_eq!(k.total, b, "{} τ={} z={} μ={}", rs.label(), tau.label(), z.label(), mu);
                        checked += 1;
                    }
                }
            }
        }
    }
    assert!(checked > 100, "only {checked} K-types compared");
}

#[test]
fn minimal_k_type_routes_agree_on_every_cell() {
    for rs in systems(4) {
        for tau in taus(&rs) {
            for z in fiber_ztilde_tau(&rs, &tau) {
                let hc = rho_parameter(&rs, &tau, &z).unwrap();
                minimal_k_type(&rs, &tau, &hc).unwrap();
            }
        }
    }
}

#[test]
fn compatible_cells_have_split_nilradical() {
    for rs in systems(4) {
        for z in enumerate_ztilde_ab(&rs) {
            if is_compatible_borel(&rs, &z.point).unwrap() {
                let levi = LeviDatum::new(&rs, &z.point);
                assert!(levi_structure_holds(&rs, &levi), "{} {}", rs.label(), z.label());
            }
        }
    }
}

#[test]
fn incompatible_cells_are_refused() {
    let rs = RootSystem::new(Family::E, 6).unwrap();
    let tau = Tau::parse(&rs, "w1+w6").unwrap();
    let z = fiber_ztilde_tau(&rs, &tau)
        .into_iter()
        .find(|z| !is_compatible_borel(&rs, &z.point).unwrap())
        .unwrap();
    let hc = rho_parameter(&rs, &tau, &z).unwrap();
    let mu = minimal_k_type(&rs, &tau, &hc).unwrap();
    assert!(matches!(k_multiplicity(&rs, &tau, &hc, &mu, 1), Err(Error::NotCompatible(_))));
}

#[test]
fn regular_weights_land_in_exactly_one_cell() {
    for rs in systems(2) {
        let w = weyl_group_elements(&rs);
        for tau in taus(&rs) {
            let wk = w_tau(&rs, &tau);
            let n = rs.rank() as i64;
            let mut box_pts = vec![vec![]];
            for _ in 0..n {
                box_pts = box_pts
                    .into_iter()
                    .flat_map(|p: Vec<i64>| (1..=3).map(move |c| [p.clone(), vec![c]].concat()))
                    .collect();
            }
            for c in box_pts {
                let dom = (0..rs.rank()).fold(Point::zero(rs.rank()), |acc, i| {
                    &acc + &rs.fundamental_weight(i).scale(q(c[i]))
                });
                for v in &w {
                    let lambda = v.apply(&dom);
                    let hits = wk
                        .iter()
                        .filter(|(u, _)| hc_parameter(&rs, &tau, &u.apply(&lambda)).is_ok())
                        .count();
                    assert_eq!(hits, 1, "{} τ={} λ={}", rs.label(), tau.label(), lambda);
                }
            }
        }
    }
}

#[test]
fn freudenthal_matches_kostant() {
    for rs in systems(3) {
        let nodes: Vec<usize> = (0..rs.rank()).collect();
        let m = StandardLevi::new(&rs, &nodes);
        let positive: Vec<Root> = rs.positive_roots().to_vec();
        let mut parts = Partitions::new(&positive);
        let w: Vec<(WeylElt, i64)> = weyl_group_elements(&rs)
            .into_iter()
            .map(|x| {
                let s = x.sign(&rs);
                (x, s)
            })
            .collect();
        let rho = rs.rho().clone();
        for i in 0..rs.rank() {
            for mu in [rs.fundamental_weight(i).clone(), rs.fundamental_weight(i).scale(q(2))] {
                let chi: Character = m.irreducible(&rs, &mu).unwrap();
                assert_eq!(chi.values().sum::<i64>(), m.dimension(&rs, &mu).unwrap());
                for (nu, &mult) in &chi {
                    let kostant: i64 = w
                        .iter()
                        .map(|(x, s)| s * parts.count(0, &(&x.apply(&(&mu + &rho)) - &(nu + &rho))))
                        .sum();
                    assert_eq!(mult, kostant, "{} μ={} ν={}", rs.label(), mu, nu);
                }
            }
        }
    }
}

#[test]
fn e6_spectrum_low_degrees() {
    let r = e6_example(2).unwrap();
    let pairs: Vec<(usize, usize)> = (1..=4).flat_map(|i| (i + 1..=4).map(move |j| (i, j))).collect();
    assert_eq!(r.levi_eps_pairs, pairs);
    let d2 = &r.degrees[2];
    let dims: i64 = d2.irreducible.iter().map(|t| t.dimension).sum();
    assert_eq!(dims, 16 * 17 / 2);
}
