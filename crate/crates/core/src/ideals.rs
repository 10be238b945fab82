//! Ad-nilpotent ideals of the Borel subalgebra, seen as upward-closed subsets
//! of the positive roots, and their bijection with a set of affine Weyl group
//! elements.

use crate::error::{Error, Result};
use crate::rootsys::{q, Point, Root, RootSet, RootSystem};
use crate::weyl::{
    element_from_inversions, maps_alcove_dominant, maps_alcove_into, AffineRoot, ExtAffineElt,
};

/// Whether a set of positive roots is upward closed in the root poset.
pub fn is_ideal(rs: &RootSystem, s: RootSet) -> bool {
    s.iter().all(|i| rs.up_set(i).is_subset(s))
}

/// No two roots of the set sum to a root.
pub fn is_abelian(rs: &RootSystem, s: RootSet) -> bool {
    s.iter()
        .all(|i| s.iter().all(|j| rs.sum_index(i, j).is_none()))
}

/// Upward-closed subsets of a finite poset given by up-sets, listed by
/// walking antichains in index order. `elements` lists the universe;
/// `up[k]` and `comparable[k]` are the up-set and comparability set of
/// `elements[k]`, expressed as sets of element ids.
pub(crate) fn enumerate_upsets(
    elements: &[usize],
    up: &[RootSet],
    comparable: &[RootSet],
) -> Vec<RootSet> {
    fn rec(
        start: usize,
        forbidden: RootSet,
        acc: RootSet,
        elements: &[usize],
        up: &[RootSet],
        comparable: &[RootSet],
        out: &mut Vec<RootSet>,
    ) {
        out.push(acc);
        for k in start..elements.len() {
            if !forbidden.contains(elements[k]) {
                rec(
                    k + 1,
                    forbidden.union(comparable[k]),
                    acc.union(up[k]),
                    elements,
                    up,
                    comparable,
                    out,
                );
            }
        }
    }
    let mut out = Vec::new();
    rec(0, RootSet::EMPTY, RootSet::EMPTY, elements, up, comparable, &mut out);
    out
}

fn canonical_sort(v: &mut [RootSet]) {
    v.sort_by_key(|s| (s.len(), s.iter().collect::<Vec<_>>()));
}

/// All ad-nilpotent ideals, ordered by size and then by root indices.
pub fn enumerate_ad_nilpotent(rs: &RootSystem) -> Vec<RootSet> {
    let np = rs.num_positive();
    let elements: Vec<usize> = (0..np).collect();
    let up: Vec<RootSet> = (0..np).map(|i| rs.up_set(i)).collect();
    let comparable: Vec<RootSet> = (0..np)
        .map(|i| {
            let down: RootSet = (0..np).filter(|&j| rs.up_set(j).contains(i)).collect();
            up[i].union(down)
        })
        .collect();
    let mut out = enumerate_upsets(&elements, &up, &comparable);
    canonical_sort(&mut out);
    out
}

pub fn enumerate_abelian(rs: &RootSystem) -> Vec<RootSet> {
    enumerate_ad_nilpotent(rs)
        .into_iter()
        .filter(|&s| is_abelian(rs, s))
        .collect()
}

/// Φ^k = (Φ^{k-1} + Φ) ∩ Δ, starting from Φ^1 = Φ.
pub fn powers(rs: &RootSystem, ideal: RootSet) -> Vec<RootSet> {
    let mut out = Vec::new();
    let mut cur = ideal;
    while !cur.is_empty() {
        out.push(cur);
        let mut next = RootSet::EMPTY;
        for a in cur.iter() {
            for b in ideal.iter() {
                if let Some(s) = rs.sum_index(a, b) {
                    next.insert(s);
                }
            }
        }
        cur = next;
    }
    out
}

/// L_Φ = ⋃_k (-Φ^k + kδ), sorted.
pub fn l_of_ideal(rs: &RootSystem, ideal: RootSet) -> Result<Vec<AffineRoot>> {
    if !is_ideal(rs, ideal) {
        return Err(Error::NotAnIdeal);
    }
    let mut out = Vec::new();
    for (k, layer) in powers(rs, ideal).into_iter().enumerate() {
        for i in layer.iter() {
            out.push(AffineRoot::new(-rs.root(i), k as i64 + 1));
        }
    }
    out.sort();
    Ok(out)
}

/// The unique element of the affine Weyl group whose inversion set is L_Φ.
pub fn ideal_to_w(rs: &RootSystem, ideal: RootSet) -> Result<ExtAffineElt> {
    let l = l_of_ideal(rs, ideal)?;
    Ok(element_from_inversions(rs, &l)?.0)
}

/// The membership test by alcove geometry: w(C_1) lies in the dominant
/// chamber, and σ = v⁻¹(τ) satisfies (σ, α_i) ≤ 1 and (σ, θ) ≥ -2.
pub fn in_image_by_alcoves(rs: &RootSystem, w: &ExtAffineElt) -> bool {
    if !maps_alcove_dominant(rs, w) {
        return false;
    }
    let sigma = w.v.apply_inv(&w.tau);
    let c = rs.coweight_coords(&sigma);
    c.iter().all(|x| *x <= q(1)) && rs.pair_root(&rs.theta(), &sigma) >= q(-2)
}

/// Whether w(C_1) ⊂ C_2, the alcove test for abelian ideals.
pub fn in_abelian_image(rs: &RootSystem, w: &ExtAffineElt) -> bool {
    maps_alcove_into(rs, w, 2)
}

/// Inverse of `ideal_to_w`. The alcove membership test and the direct
/// reconstruction Φ = {α : -α+δ ∈ N(w)} must agree.
pub fn w_to_ideal(rs: &RootSystem, w: &ExtAffineElt) -> Result<RootSet> {
    if !w.is_affine(rs) {
        return Err(Error::NotAffine(w.tau.to_string()));
    }
    let predicate = in_image_by_alcoves(rs, w);
    let n = w.inversion_set(rs);
    let phi: RootSet = n
        .iter()
        .filter(|a| a.k == 1 && !a.root.is_positive())
        .map(|a| rs.index_of(&-a.root).expect("root"))
        .collect();
    let reconstructed = is_ideal(rs, phi) && l_of_ideal(rs, phi)? == n;
    match (predicate, reconstructed) {
        (true, true) => Ok(phi),
        (false, false) => Err(Error::NotInImage(w.to_string())),
        _ => Err(Error::Inconsistent(format!(
            "alcove test says {predicate}, reconstruction says {reconstructed} for {w}"
        ))),
    }
}

/// ⟨Φ⟩ = Σ_{α∈Φ} α.
pub fn ideal_weight(rs: &RootSystem, ideal: RootSet) -> Point {
    let mut p = Point::zero(rs.rank());
    for i in ideal.iter() {
        p += &rs.root(i).to_point();
    }
    p
}

/// Minimal generators (antichain) of an ideal.
pub fn generators(rs: &RootSystem, ideal: RootSet) -> Vec<Root> {
    ideal
        .iter()
        .filter(|&i| {
            ideal
                .iter()
                .all(|j| j == i || !rs.up_set(j).contains(i))
        })
        .map(|i| rs.root(i))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::Family;

    #[test]
    fn small_counts() {
        for (n, count) in [(1, 2), (2, 5), (3, 14)] {
            let rs = RootSystem::new(Family::A, n).unwrap();
            assert_eq!(enumerate_ad_nilpotent(&rs).len(), count);
        }
        let b2 = RootSystem::new(Family::B, 2).unwrap();
        assert_eq!(enumerate_ad_nilpotent(&b2).len(), 6);
        assert_eq!(enumerate_abelian(&b2).len(), 4);
    }

    #[test]
    fn a2_ideal_of_simple_root() {
        let rs = RootSystem::new(Family::A, 2).unwrap();
        let s = rs.dual_order_ideal(&Root::new(&[1, 0])).unwrap();
        assert_eq!(s.len(), 2);
        assert!(is_abelian(&rs, s));
        let l = l_of_ideal(&rs, s).unwrap();
        assert_eq!(l.len(), 2);
        let w = ideal_to_w(&rs, s).unwrap();
        assert_eq!(w.inversion_set(&rs), l);
        assert_eq!(w_to_ideal(&rs, &w).unwrap(), s);
    }

    #[test]
    fn g2_full_ideal() {
        let rs = RootSystem::new(Family::G, 2).unwrap();
        let all = rs.all_positive();
        let w = ideal_to_w(&rs, all).unwrap();
        assert_eq!(w_to_ideal(&rs, &w).unwrap(), all);
    }

    #[test]
    fn rejects_non_ideals() {
        let rs = RootSystem::new(Family::A, 2).unwrap();
        let s = RootSet::singleton(rs.simple_index(0));
        assert_eq!(l_of_ideal(&rs, s), Err(Error::NotAnIdeal));
        let s1 = ExtAffineElt::simple(&rs, 1);
        assert!(matches!(w_to_ideal(&rs, &s1), Err(Error::NotInImage(_))));
    }
}
