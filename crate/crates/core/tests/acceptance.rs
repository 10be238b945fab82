//! One PASS/FAIL line per acceptance criterion, with its time budget.
//! A criterion listed in KNOWN_FAILURES is still reported as FAIL but does
//! not change the exit status; every other failure does.

mod common;

use std::time::{Duration, Instant};

use borel_ideals::dseries::{e6_example, hc_parameter, k_multiplicity, minimal_k_type, rho_parameter, rho_z};
use borel_ideals::ideals::{enumerate_abelian, enumerate_ad_nilpotent, is_abelian};
use borel_ideals::lattice::{dom, enumerate_ztilde_ab};
use borel_ideals::rootsys::{Family, RootSystem};
use borel_ideals::symmspace::{enumerate_x, fiber_ztilde_tau, is_compatible_borel, Tau};
use borel_ideals::verify::{run_check, systems_up_to};

use common::{blattner, candidates, w_tau};

/// Criterion number and the reason it cannot pass as stated.
const KNOWN_FAILURES: &[(u32, &str)] = &[(
    9,
    "S^2(u∩p) has 6 irreducible M-types; the family index set has 5 summands \
     because one summand is a tensor product of two 8-dimensional D4 modules \
     that splits as 8 ⊕ 56",
)];

type Outcome = Result<String, String>;
type Criterion = (u32, &'static str, Duration, fn() -> Outcome);

fn sys(list: &[(Family, usize)]) -> Vec<RootSystem> {
    list.iter().map(|&(f, n)| RootSystem::new(f, n).unwrap()).collect()
}

fn sweep_1_2() -> Vec<RootSystem> {
    use Family::*;
    sys(&[
        (A, 1), (A, 2), (A, 3), (A, 4), (A, 5),
        (B, 2), (B, 3), (B, 4),
        (C, 3), (C, 4),
        (D, 4), (G, 2), (F, 4),
    ])
}

fn checks(keys: &[&str], systems: &[RootSystem]) -> Outcome {
    let mut n = 0;
    for rs in systems {
        for k in keys {
            let o = run_check(k, rs).map_err(|e| e.to_string())?;
            if !o.passed {
                return Err(format!("{} {}: {}", o.key, o.cartan_type, o.detail));
            }
            n += 1;
        }
    }
    Ok(format!("{n} checks over {} systems", systems.len()))
}

fn c1() -> Outcome {
    let mut detail = Vec::new();
    for rs in sweep_1_2() {
        let n = enumerate_abelian(&rs).len();
        let brute = enumerate_ad_nilpotent(&rs).into_iter().filter(|&i| is_abelian(&rs, i)).count();
        if n != 1 << rs.rank() || brute != n {
            return Err(format!("{}: {n} abelian ideals, {brute} by filtering", rs.label()));
        }
        detail.push(format!("{}:{n}", rs.label()));
    }
    Ok(detail.join(" "))
}

fn c2() -> Outcome {
    checks(&["PropA"], &sweep_1_2())
}

fn c3() -> Outcome {
    checks(&["P1.4"], &systems_up_to(4))
}

fn c4() -> Outcome {
    use Family::*;
    let s = sys(&[(A, 4), (B, 4), (C, 4), (D, 5), (E, 6), (E, 7), (E, 8), (F, 4), (G, 2)]);
    checks(&["TableI"], &s)
}

fn c5() -> Outcome {
    let mut s = systems_up_to(4);
    s.push(RootSystem::new(Family::D, 5).unwrap());
    checks(&["T2.4"], &s)
}

fn c6() -> Outcome {
    checks(&["T2.6"], &systems_up_to(4))
}

fn c7() -> Outcome {
    let keys = ["L3.2", "T3.3", "P3.4", "P3.5", "P3.6", "P3.7", "P3.8", "P3.9", "P3.10", "C3.11"];
    checks(&keys, &systems_up_to(4))
}

fn c8() -> Outcome {
    let mut n = 0;
    for rs in systems_up_to(4) {
        for z in enumerate_ztilde_ab(&rs) {
            let tau = Tau::from_point(&rs, &dom(&rs, &z.point)).map_err(|e| e.to_string())?;
            let hc = rho_parameter(&rs, &tau, &z).map_err(|e| format!("{} {}: {e}", rs.label(), z.label()))?;
            minimal_k_type(&rs, &tau, &hc).map_err(|e| format!("{} {}: {e}", rs.label(), z.label()))?;
            n += 1;
        }
    }
    Ok(format!("{n} points"))
}

fn c9() -> Outcome {
    let r = e6_example(2).map_err(|e| e.to_string())?;
    let summands: Vec<usize> = r.degrees.iter().map(|d| d.family_terms.len()).collect();
    let irreducible: Vec<usize> = r.degrees.iter().map(|d| d.irreducible.len()).collect();
    let free = r.degrees.iter().all(|d| d.multiplicity_free);
    let identity = r.degrees.iter().all(|d| d.character_identity);
    let detail = format!(
        "|Δ_1|={} |Δ_6|={} |Δ(m)|={} multiplicity-free={free} family identity={identity} \
         family summands {summands:?} irreducible M-types {irreducible:?}",
        r.delta_1, r.delta_6, r.levi_roots
    );
    let ok = r.delta_1 == 8 && r.delta_6 == 8 && free && identity && irreducible == [1, 2, 5];
    if ok {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn c10() -> Outcome {
    const N_MAX: usize = 3;
    let (mut certified, mut partial) = (0, 0);
    for rs in sys(&[(Family::A, 2), (Family::B, 2)]) {
        for tau in enumerate_x(&rs) {
            let wk = w_tau(&rs, &tau);
            for z in fiber_ztilde_tau(&rs, &tau) {
                if !is_compatible_borel(&rs, &z.point).unwrap() {
                    continue;
                }
                let base = rho_parameter(&rs, &tau, &z).unwrap();
                let shifted = &base.lambda + &rho_z(&rs, &z.point);
                for lambda in [base.lambda.clone(), shifted] {
                    let hc = hc_parameter(&rs, &tau, &lambda).unwrap();
                    let mu_l = minimal_k_type(&rs, &tau, &hc).unwrap();
                    for mu in candidates(&rs, &tau, &hc, &mu_l, 4) {
                        let k = k_multiplicity(&rs, &tau, &hc, &mu, N_MAX).map_err(|e| e.to_string())?;
                        let b = blattner(&rs, &tau, &hc, &mu_l, &mu, &wk);
                        let where_ = || format!("{} τ={} z={} μ={}: {} vs {b}", rs.label(), tau.label(), z.label(), mu, k.total);
                        if k.complete {
                            if k.total != b {
                                return Err(where_());
                            }
                            certified += 1;
                        } else {
                            // truncated sums can only undercount
                            if k.total > b {
                                return Err(where_());
                            }
                            partial += 1;
                        }
                    }
                }
            }
        }
    }
    if certified == 0 {
        return Err("nothing compared".into());
    }
    Ok(format!("{certified} K-types equal at n_max={N_MAX}, {partial} beyond the degree window bounded"))
}

fn main() {
    let criteria: Vec<Criterion> = vec![
        (1, "abelian ideal count 2^n", Duration::from_secs(5), c1),
        (2, "ideal to alcove round trip", Duration::from_secs(30), c2),
        (3, "Z̃ count and F on Z", Duration::from_secs(60), c3),
        (4, "Table I", Duration::from_secs(10), c4),
        (5, "fiber size equals [W:W_τ]", Duration::from_secs(120), c5),
        (6, "compatible fibers and Ω_2", Duration::from_secs(120), c6),
        (7, "special and nilradical ideal suite", Duration::from_secs(300), c7),
        (8, "minimal K-type by two routes", Duration::from_secs(60), c8),
        (9, "E6 M-type counts", Duration::from_secs(300), c9),
        (10, "K-multiplicities against Blattner", Duration::from_secs(60), c10),
    ];
    let mut unexpected = 0;
    for (n, name, budget, f) in criteria {
        let t = Instant::now();
        let out = f();
        let dt = t.elapsed();
        let (ok, mut detail) = match out {
            Ok(d) => (true, d),
            Err(d) => (false, d),
        };
        let in_time = dt <= budget;
        if !in_time {
            detail = format!("over budget; {detail}");
        }
        let pass = ok && in_time;
        let known = KNOWN_FAILURES.iter().find(|(k, _)| *k == n);
        if !pass {
            match known {
                Some((_, why)) => detail = format!("{detail} [known: {why}]"),
                None => unexpected += 1,
            }
        }
        println!(
            "{} criterion {n:>2} {name} ({:.2}s of {}s): {detail}",
            if pass { "PASS" } else { "FAIL" },
            dt.as_secs_f64(),
            budget.as_secs(),
        );
    }
    if unexpected > 0 {
        std::process::exit(1);
    }
}
