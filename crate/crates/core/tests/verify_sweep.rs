use borel_ideals::verify::{run_check, systems_up_to, KEYS};

/// Every named check passes on every system of rank at most 4.
#[test]
fn all_checks_pass_up_to_rank_4() {
    let mut failures = Vec::new();
    for rs in systems_up_to(4) {
        for k in KEYS {
            let t = std::time::Instant::now();
            let o = run_check(k, &rs).unwrap();
            let dt = t.elapsed().as_secs_f64();
            if dt > 1.0 {
                eprintln!("{} {} took {dt:.1}s", o.key, o.cartan_type);
            }
            if !o.passed {
                failures.push(format!("{} {}: {}", o.key, o.cartan_type, o.detail));
            }
        }
    }
    assert!(failures.is_empty(), "{}", failures.join("\n"));
}
