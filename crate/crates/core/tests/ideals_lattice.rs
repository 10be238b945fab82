use std::collections::{HashMap, HashSet};

use borel_ideals::ideals::*;
use borel_ideals::lattice::*;
use borel_ideals::weyl::*;
use borel_ideals::{Family, Point, RootSet, RootSystem};

fn systems(max_rank: usize) -> Vec<RootSystem> {
    let mut out = Vec::new();
    for n in 1..=max_rank {
        out.push(RootSystem::new(Family::A, n).unwrap());
    }
    for n in 2..=max_rank {
        out.push(RootSystem::new(Family::B, n).unwrap());
        if n >= 3 {
            out.push(RootSystem::new(Family::C, n).unwrap());
        }
        if n >= 4 {
            out.push(RootSystem::new(Family::D, n).unwrap());
        }
    }
    if max_rank >= 4 {
        out.push(RootSystem::new(Family::F, 4).unwrap());
    }
    out.push(RootSystem::new(Family::G, 2).unwrap());
    out
}

/// Upward-closed subsets by testing every subset.
fn brute_ideals(rs: &RootSystem) -> Vec<RootSet> {
    let np = rs.num_positive();
    assert!(np <= 20);
    let roots = rs.positive_roots();
    (0u128..(1u128 << np))
        .map(RootSet)
        .filter(|s| {
            s.iter().all(|i| {
                (0..np).all(|j| {
                    let diff = roots[j] - roots[i];
                    let above = diff.coeffs().iter().all(|&c| c >= 0);
                    !above || s.contains(j)
                })
            })
        })
        .collect()
}

#[test]
fn ideal_enumeration_matches_subset_scan() {
    for rs in systems(3) {
        if rs.num_positive() > 16 {
            continue;
        }
        let mut a = enumerate_ad_nilpotent(&rs);
        let mut b = brute_ideals(&rs);
        a.sort();
        b.sort();
        assert_eq!(a, b, "{}", rs.label());
    }
}

#[test]
fn catalan_counts_in_type_a() {
    for (n, c) in [(1, 2), (2, 5), (3, 14), (4, 42), (5, 132)] {
        let rs = RootSystem::new(Family::A, n).unwrap();
        assert_eq!(enumerate_ad_nilpotent(&rs).len(), c);
    }
}

#[test]
fn ideal_to_w_round_trip() {
    for rs in systems(3) {
        let mut seen = HashSet::new();
        for i in enumerate_ad_nilpotent(&rs) {
            let w = ideal_to_w(&rs, i).unwrap();
            assert_eq!(w.inversion_set(&rs), l_of_ideal(&rs, i).unwrap());
            assert_eq!(w_to_ideal(&rs, &w).unwrap(), i);
            assert_eq!(in_abelian_image(&rs, &w), is_abelian(&rs, i));
            assert!(seen.insert(w));
        }
    }
}

/// Breadth-first enumeration of the affine Weyl group up to a length bound;
/// every element passing the alcove test must come from an ideal, and the
/// alcove test must agree with reconstruction on every element.
#[test]
fn alcove_test_characterizes_the_image() {
    for rs in systems(3) {
        let ideals = enumerate_ad_nilpotent(&rs);
        let max_len = ideals.iter().map(|&i| l_of_ideal(&rs, i).unwrap().len()).max().unwrap();
        let images: HashSet<ExtAffineElt> =
            ideals.iter().map(|&i| ideal_to_w(&rs, i).unwrap()).collect();
        let id = ExtAffineElt::identity(&rs);
        let mut level = vec![id.clone()];
        let mut seen: HashSet<ExtAffineElt> = HashSet::from([id]);
        let mut found = 0;
        for len in 0..=max_len + 1 {
            let mut next = Vec::new();
            for w in &level {
                match w_to_ideal(&rs, w) {
                    Ok(_) => {
                        assert!(images.contains(w));
                        found += 1;
                    }
                    Err(borel_ideals::Error::NotInImage(_)) => assert!(!images.contains(w)),
                    Err(e) => panic!("{}: {e}", rs.label()),
                }
                if len <= max_len {
                    for i in 0..=rs.rank() {
                        let x = w.compose(&ExtAffineElt::simple(&rs, i));
                        if x.length(&rs) == len + 1 && seen.insert(x.clone()) {
                            next.push(x);
                        }
                    }
                }
            }
            level = next;
        }
        assert_eq!(found, ideals.len(), "{}", rs.label());
    }
}

#[test]
fn lattice_point_counts() {
    for rs in systems(4) {
        let ideals = enumerate_ad_nilpotent(&rs).len();
        let abelian = enumerate_abelian(&rs).len();
        let c = rs.center_order();
        assert_eq!(enumerate(&rs, PointSet::Ztilde).len(), ideals * c, "{}", rs.label());
        assert_eq!(enumerate(&rs, PointSet::Z).len(), ideals, "{}", rs.label());
        assert_eq!(enumerate(&rs, PointSet::ZtildeAb).len(), abelian * c);
        assert_eq!(enumerate(&rs, PointSet::ZAb).len(), abelian);
        assert_eq!(abelian, 1 << rs.rank());
    }
}

/// Simplex membership against a bounding-box scan.
#[test]
fn ztilde_matches_box_scan() {
    for rs in systems(3) {
        let h = rs.coxeter_number();
        let n = rs.rank();
        let mut expect = Vec::new();
        let mut c = vec![-(h + 1); n];
        loop {
            let p = rs.from_coweight_coords(&c);
            if in_simplex_d(&rs, &p) {
                expect.push(c.clone());
            }
            let mut k = 0;
            while k < n && c[k] == 1 {
                c[k] = -(h + 1);
                k += 1;
            }
            if k == n {
                break;
            }
            c[k] += 1;
        }
        expect.sort();
        let got: Vec<Vec<i64>> = enumerate_ztilde(&rs).into_iter().map(|p| p.coords).collect();
        assert_eq!(got, expect, "{}", rs.label());
    }
}

#[test]
fn simplex_is_shifted_dilated_alcove() {
    for rs in systems(4) {
        for v in simplex_d_vertices(&rs) {
            assert!(in_simplex_d(&rs, &v));
            let back = rs.rho_vee() - &v;
            assert!(in_closed_alcove(&rs, &back, rs.coxeter_number() + 1));
        }
    }
}

#[test]
fn v_of_z_inversions() {
    for rs in systems(4) {
        for p in enumerate_ztilde(&rs) {
            let v = v_of_z(&rs, &p.point);
            let expect: RootSet = (0..rs.num_positive())
                .filter(|&i| rs.pair_root(&rs.root(i), &p.point) < 0.into())
                .collect();
            assert_eq!(v.inversion_set(&rs), expect);
            assert!(rs.is_dominant(&v.apply_inv(&p.point)));
        }
    }
}

#[test]
fn translated_alcoves_and_abelian_points() {
    for rs in systems(4) {
        let h = rs.coxeter_number();
        for p in enumerate_ztilde(&rs) {
            assert!(translate_alcove_in_orbit(&rs, &p.point, h));
            assert_eq!(translate_alcove_in_orbit(&rs, &p.point, 2), p.abelian);
            let ft = f_tilde(&rs, &p.point).unwrap();
            let vz = v_of_z(&rs, &p.point);
            for x in alcove_vertices(&rs, 1) {
                let img = vz.apply_inv(&(&p.point + &x));
                assert!(in_closed_alcove(&rs, &img, h));
                if p.abelian {
                    assert!(in_closed_alcove(&rs, &img, 2));
                }
                assert_eq!(img, ft.act(&x));
            }
        }
    }
}

#[test]
fn f_restricted_to_z_is_a_bijection() {
    for rs in systems(4) {
        let ideals = enumerate_ad_nilpotent(&rs);
        let images: HashMap<ExtAffineElt, RootSet> = ideals
            .iter()
            .map(|&i| (ideal_to_w(&rs, i).unwrap(), i))
            .collect();
        let mut hit = HashSet::new();
        for p in enumerate(&rs, PointSet::Z) {
            let w = f_of(&rs, &p.point).unwrap();
            assert!(images.contains_key(&w), "{}", rs.label());
            assert_eq!(f_inverse_on_z(&w), p.point);
            assert!(hit.insert(w));
        }
        assert_eq!(hit.len(), ideals.len());
    }
}

#[test]
fn h_is_injective_and_sigma_orbits_are_fibers() {
    for rs in systems(3) {
        let pts = enumerate_ztilde(&rs);
        let mut by_w: HashMap<ExtAffineElt, Vec<Point>> = HashMap::new();
        let mut seen = HashSet::new();
        for p in &pts {
            let (w, class) = h_of(&rs, &p.point).unwrap();
            assert!(seen.insert((w.clone(), class)));
            by_w.entry(w).or_default().push(p.point.clone());
        }
        for (_, mut fiber) in by_w {
            let mut orbit = sigma_orbit(&rs, &fiber[0]);
            fiber.sort();
            orbit.sort();
            assert_eq!(fiber, orbit, "{}", rs.label());
        }
    }
}

#[test]
fn sigma_preserves_the_point_sets() {
    for rs in systems(4) {
        let pts = enumerate_ztilde(&rs);
        let all: HashSet<Point> = pts.iter().map(|p| p.point.clone()).collect();
        for p in &pts {
            let orbit = sigma_orbit(&rs, &p.point);
            let classes: HashSet<_> = orbit.iter().map(|x| rs.center_class(x).unwrap()).collect();
            assert_eq!(classes.len(), rs.center_order());
            for x in &orbit {
                assert!(all.contains(x));
                let lp = LatticePoint::from_point(&rs, x).unwrap();
                assert_eq!(lp.abelian, p.abelian);
            }
        }
        for (_, s) in sigma(&rs) {
            let mut before = simplex_d_vertices(&rs);
            let mut after: Vec<Point> = before.iter().map(|x| s.act(x)).collect();
            before.sort();
            after.sort();
            assert_eq!(before, after);
        }
    }
}

#[test]
fn ideals_of_points_agree_by_every_route() {
    for rs in systems(4) {
        let mut counts: HashMap<RootSet, usize> = HashMap::new();
        for p in enumerate_ztilde(&rs) {
            let i = ideal_of_point(&rs, &p.point).unwrap();
            assert_eq!(is_abelian(&rs, i), p.abelian);
            *counts.entry(i).or_default() += 1;
        }
        assert_eq!(counts.len(), enumerate_ad_nilpotent(&rs).len());
        assert!(counts.values().all(|&c| c == rs.center_order()));
    }
}

#[test]
fn separation_criterion_matches_geometry() {
    for rs in systems(3) {
        for p in enumerate_ztilde(&rs) {
            let ft = f_tilde(&rs, &p.point).unwrap();
            let w = f_of(&rs, &p.point).unwrap();
            for r in rs.positive_roots() {
                assert_eq!(separates(&rs, r, &ft), separates_geometric(&rs, r, &ft));
                assert_eq!(separates(&rs, r, &w), separates_geometric(&rs, r, &w));
            }
        }
    }
}
