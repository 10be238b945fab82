//! Coweight-lattice points of the simplex D = {σ : (σ, α_i) ≤ 1, (σ, θ) ≥ -2}
//! and the maps attaching to each point an affine Weyl group element and an
//! ad-nilpotent ideal.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideals::w_to_ideal;
use crate::rootsys::{q, Point, Root, RootSet, RootSystem};
use crate::weyl::{
    alcove_center, alcove_vertices, center_element, element_from_inversions,
    in_w_orbit_of_alcove, inversion_set_of_alcove, separates, to_dominant, ExtAffineElt, WeylElt,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PointSet {
    /// D ∩ P∨
    Ztilde,
    /// D ∩ Q∨
    Z,
    /// points with (σ, β) ∈ {0, ±1, -2} for every positive root
    ZtildeAb,
    ZAb,
}

impl PointSet {
    pub fn parse(s: &str) -> Result<PointSet> {
        match s {
            "ztilde" => Ok(PointSet::Ztilde),
            "z" => Ok(PointSet::Z),
            "ztilde-ab" => Ok(PointSet::ZtildeAb),
            "z-ab" => Ok(PointSet::ZAb),
            _ => Err(Error::Parse(format!("unknown point set {s:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LatticePoint {
    pub point: Point,
    /// (σ, α_i) for each simple root.
    pub coords: Vec<i64>,
    pub in_coroot_lattice: bool,
    pub abelian: bool,
}

impl LatticePoint {
    pub fn from_coords(rs: &RootSystem, coords: Vec<i64>) -> LatticePoint {
        let point = rs.from_coweight_coords(&coords);
        LatticePoint {
            in_coroot_lattice: rs.in_coroot_lattice(&point),
            abelian: is_abelian_point(rs, &coords),
            point,
            coords,
        }
    }

    pub fn from_point(rs: &RootSystem, p: &Point) -> Result<LatticePoint> {
        let c = rs.coweight_coords(p);
        if !c.iter().all(|x| x.is_integer()) {
            return Err(Error::NotCoweight(p.to_string()));
        }
        Ok(LatticePoint::from_coords(
            rs,
            c.iter().map(|x| x.to_integer()).collect(),
        ))
    }

    pub fn label(&self) -> String {
        RootSystem::format_coweight(&self.coords)
    }

    pub fn tags(&self) -> Vec<&'static str> {
        let mut t = vec!["ztilde"];
        if self.in_coroot_lattice {
            t.push("z");
        }
        if self.abelian {
            t.push("ztilde-ab");
            if self.in_coroot_lattice {
                t.push("z-ab");
            }
        }
        t
    }
}

fn pair_int(r: &Root, coords: &[i64]) -> i64 {
    r.coeffs()
        .iter()
        .zip(coords)
        .map(|(&a, &c)| a as i64 * c)
        .sum()
}

/// (σ, β) ∈ {0, ±1, -2} for every positive root β.
pub fn is_abelian_point(rs: &RootSystem, coords: &[i64]) -> bool {
    rs.positive_roots()
        .iter()
        .all(|r| (-2..=1).contains(&pair_int(r, coords)))
}

pub fn in_simplex_d(rs: &RootSystem, x: &Point) -> bool {
    rs.coweight_coords(x).iter().all(|c| *c <= q(1)) && rs.pair_root(&rs.theta(), x) >= q(-2)
}

/// Vertices ρ∨ and ρ∨ - (h+1) ω∨_i / m_i of D.
pub fn simplex_d_vertices(rs: &RootSystem) -> Vec<Point> {
    let h1 = q(rs.coxeter_number() + 1);
    let mut v = vec![rs.rho_vee().clone()];
    v.extend((0..rs.rank()).map(|i| rs.rho_vee() - &rs.alcove_vertex(i).scale(h1)));
    v
}

/// D ∩ P∨ in increasing order of coweight coordinates.
pub fn enumerate_ztilde(rs: &RootSystem) -> Vec<LatticePoint> {
    let n = rs.rank();
    let h = rs.coxeter_number();
    let marks = rs.marks().to_vec();
    // suffix[i] = Σ_{k ≥ i} m_k, the largest possible rest of (σ, θ)
    let mut suffix = vec![0i64; n + 1];
    for i in (0..n).rev() {
        suffix[i] = suffix[i + 1] + marks[i];
    }
    let mut out = Vec::new();
    let mut cur = vec![0i64; n];
    fn rec(
        i: usize,
        partial: i64,
        cur: &mut Vec<i64>,
        marks: &[i64],
        suffix: &[i64],
        h: i64,
        out: &mut Vec<Vec<i64>>,
    ) {
        if i == cur.len() {
            if partial >= -2 {
                out.push(cur.clone());
            }
            return;
        }
        let lo = 1 - (h + 1) / marks[i];
        for x in lo..=1 {
            let p = partial + marks[i] * x;
            if p + suffix[i + 1] < -2 {
                continue;
            }
            cur[i] = x;
            rec(i + 1, p, cur, marks, suffix, h, out);
        }
    }
    rec(0, 0, &mut cur, &marks, &suffix, h, &mut out);
    out.into_iter()
        .map(|c| LatticePoint::from_coords(rs, c))
        .collect()
}

pub fn enumerate(rs: &RootSystem, set: PointSet) -> Vec<LatticePoint> {
    enumerate_ztilde(rs)
        .into_iter()
        .filter(|p| match set {
            PointSet::Ztilde => true,
            PointSet::Z => p.in_coroot_lattice,
            PointSet::ZtildeAb => p.abelian,
            PointSet::ZAb => p.abelian && p.in_coroot_lattice,
        })
        .collect()
}

pub fn enumerate_ztilde_ab(rs: &RootSystem) -> Vec<LatticePoint> {
    enumerate(rs, PointSet::ZtildeAb)
}

/// v_z: the element with v_z⁻¹(z) dominant and N(v_z) = {α > 0 : (α, z) < 0}.
pub fn v_of_z(rs: &RootSystem, z: &Point) -> WeylElt {
    to_dominant(rs, z).1.inverse()
}

/// dom(z) = v_z⁻¹(z).
pub fn dom(rs: &RootSystem, z: &Point) -> Point {
    to_dominant(rs, z).0
}

fn check_ztilde(rs: &RootSystem, z: &Point) -> Result<()> {
    if !rs.in_coweight_lattice(z) {
        return Err(Error::NotCoweight(z.to_string()));
    }
    if !in_simplex_d(rs, z) {
        return Err(Error::OutOfRange {
            point: z.to_string(),
            set: "D".into(),
        });
    }
    Ok(())
}

/// F̃(z) = t_{dom(z)} v_z⁻¹, mapping C̄_1 onto v_z⁻¹(z + C̄_1).
pub fn f_tilde(rs: &RootSystem, z: &Point) -> Result<ExtAffineElt> {
    check_ztilde(rs, z)?;
    let (d, u) = to_dominant(rs, z);
    Ok(ExtAffineElt::new(d, u))
}

/// F(z): the element of the affine Weyl group sending C̄_1 to the same alcove
/// as F̃(z), rebuilt from the inversion set of that alcove.
pub fn f_of(rs: &RootSystem, z: &Point) -> Result<ExtAffineElt> {
    let ft = f_tilde(rs, z)?;
    let inv = inversion_set_of_alcove(rs, &ft.act(&alcove_center(rs)));
    let (w, _) = element_from_inversions(rs, &inv)?;
    if w.alcove_vertices(rs) != ft.alcove_vertices(rs) {
        return Err(Error::Inconsistent(format!("F and F̃ disagree at {z}")));
    }
    Ok(w)
}

/// H(z) = (F(z), class of z in P∨/Q∨), the class given by a minuscule node or
/// None for Q∨.
pub fn h_of(rs: &RootSystem, z: &Point) -> Result<(ExtAffineElt, Option<usize>)> {
    let w = f_of(rs, z)?;
    let class = rs
        .center_class(z)
        .ok_or_else(|| Error::Inconsistent(format!("{z} has no center class")))?;
    Ok((w, class))
}

/// On Z, F is inverted by t_τ v ↦ v⁻¹(τ).
pub fn f_inverse_on_z(w: &ExtAffineElt) -> Point {
    w.v.apply_inv(&w.tau)
}

/// i_z from the separating hyperplanes of F̃(z) = t_τ v:
/// {α : (α, τ) > 1} ∪ {α : (α, τ) = 1, α ∉ N(v)}.
pub fn ideal_by_separation(rs: &RootSystem, z: &Point) -> Result<RootSet> {
    let ft = f_tilde(rs, z)?;
    Ok((0..rs.num_positive())
        .filter(|&i| separates(rs, &rs.root(i), &ft))
        .collect())
}

fn level_image(rs: &RootSystem, u: &WeylElt, s: RootSet, negate: bool) -> Result<RootSet> {
    s.iter()
        .map(|i| {
            let mut r = u.apply_root(&rs.root(i));
            if negate {
                r = -r;
            }
            rs.index_of(&r)
                .ok_or_else(|| Error::Inconsistent(format!("{r} is not a positive root")))
        })
        .collect()
}

/// i_z = -v_z⁻¹(Δ_z^{-2}) ∪ v_z⁻¹(Δ_z^1), valid on the abelian points.
pub fn ideal_by_levels(rs: &RootSystem, z: &Point) -> Result<RootSet> {
    check_ztilde(rs, z)?;
    let lp = LatticePoint::from_point(rs, z)?;
    if !lp.abelian {
        return Err(Error::OutOfRange {
            point: z.to_string(),
            set: "the abelian points".into(),
        });
    }
    let u = to_dominant(rs, z).1;
    let neg = level_image(rs, &u, rs.level_set(z, -2), true)?;
    let pos = level_image(rs, &u, rs.level_set(z, 1), false)?;
    Ok(neg.union(pos))
}

/// i_z = f⁻¹(F(z)), cross-checked against the separation criterion and, on
/// abelian points, against the level-set formula.
pub fn ideal_of_point(rs: &RootSystem, z: &Point) -> Result<RootSet> {
    let w = f_of(rs, z)?;
    let a = w_to_ideal(rs, &w)?;
    let b = ideal_by_separation(rs, z)?;
    if a != b {
        return Err(Error::Inconsistent(format!("two ideals for {z}")));
    }
    if LatticePoint::from_point(rs, z)?.abelian && ideal_by_levels(rs, z)? != a {
        return Err(Error::Inconsistent(format!("level formula disagrees at {z}")));
    }
    Ok(a)
}

/// Action of t_{-ω∨_j} w_0^j w_0 (or the identity for None).
pub fn sigma_act(rs: &RootSystem, j: Option<usize>, z: &Point) -> Result<Point> {
    match j {
        None => Ok(z.clone()),
        Some(j) => {
            if !rs.minuscule().contains(&j) {
                return Err(Error::NotMinuscule(j + 1));
            }
            Ok(center_element(rs, j, -1).act(z))
        }
    }
}

pub fn sigma_orbit(rs: &RootSystem, z: &Point) -> Vec<Point> {
    let mut out = vec![z.clone()];
    for &j in rs.minuscule() {
        out.push(center_element(rs, j, -1).act(z));
    }
    out
}

/// z + C̄_1 ⊂ W·C̄_k, tested on the vertices (the target is convex).
pub fn translate_alcove_in_orbit(rs: &RootSystem, z: &Point, k: i64) -> bool {
    alcove_vertices(rs, 1)
        .iter()
        .all(|x| in_w_orbit_of_alcove(rs, &(z + x), k))
}

#[derive(Clone, Debug, Serialize)]
pub struct LatticeRecord {
    pub point: Point,
    pub coweight: String,
    pub tags: Vec<&'static str>,
    pub ideal: Vec<Root>,
    pub f_word: Vec<usize>,
    pub center_coset: String,
}

pub fn lattice_record(rs: &RootSystem, p: &LatticePoint) -> Result<LatticeRecord> {
    let (w, class) = h_of(rs, &p.point)?;
    let ideal = ideal_of_point(rs, &p.point)?;
    Ok(LatticeRecord {
        point: p.point.clone(),
        coweight: p.label(),
        tags: p.tags(),
        ideal: rs.roots_of(ideal),
        f_word: w.affine_word(rs)?,
        center_coset: match class {
            None => "0".into(),
            Some(j) => format!("w{}", j + 1),
        },
    })
}
