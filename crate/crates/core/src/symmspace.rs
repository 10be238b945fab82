//! Equal-rank involutions attached to dominant coweights τ of level at most 2:
//! the grading of Δ+ by (α, τ) ∈ {0, 1, 2}, the compact subsystem, the fibers
//! of dom over τ, compatible Borel subalgebras, and special, nilradical and
//! submodule structures of abelian ideals.

use std::collections::{HashMap, HashSet};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideals::{enumerate_upsets, ideal_weight, is_abelian, is_ideal};
use crate::lattice::{
    dom, enumerate, enumerate_ztilde_ab, ideal_by_levels, ideal_of_point, sigma_orbit, v_of_z,
    LatticePoint, PointSet,
};
use crate::rootsys::{q, Point, Root, RootSet, RootSystem};
use crate::weyl::{coset_min_rep, coset_reps, omega_r, ExtAffineElt, WeylElt};

/// The five kinds of points of X, with 0-based node indices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum TauClass {
    /// 2ω∨_i with i minuscule
    TwiceMinuscule(usize),
    /// ω∨_i with mark 2
    MarkTwo(usize),
    /// ω∨_i + ω∨_j with i < j minuscule
    SumOfMinuscules(usize, usize),
    /// ω∨_i with i minuscule
    Minuscule(usize),
    Zero,
}

impl TauClass {
    pub fn number(self) -> u8 {
        match self {
            TauClass::TwiceMinuscule(_) => 1,
            TauClass::MarkTwo(_) => 2,
            TauClass::SumOfMinuscules(..) => 3,
            TauClass::Minuscule(_) => 4,
            TauClass::Zero => 5,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Tau {
    pub point: Point,
    pub coords: Vec<i64>,
    pub class: TauClass,
    pub level0: RootSet,
    pub level1: RootSet,
    pub level2: RootSet,
}

fn classify(rs: &RootSystem, coords: &[i64]) -> Option<TauClass> {
    let support: Vec<usize> = (0..coords.len()).filter(|&i| coords[i] != 0).collect();
    let minus = |i: usize| rs.marks()[i] == 1;
    match support.as_slice() {
        [] => Some(TauClass::Zero),
        [i] if coords[*i] == 2 && minus(*i) => Some(TauClass::TwiceMinuscule(*i)),
        [i] if coords[*i] == 1 && minus(*i) => Some(TauClass::Minuscule(*i)),
        [i] if coords[*i] == 1 && rs.marks()[*i] == 2 => Some(TauClass::MarkTwo(*i)),
        [i, j] if coords[*i] == 1 && coords[*j] == 1 && minus(*i) && minus(*j) => {
            Some(TauClass::SumOfMinuscules(*i, *j))
        }
        _ => None,
    }
}

impl Tau {
    pub fn from_coords(rs: &RootSystem, coords: &[i64]) -> Result<Tau> {
        let label = RootSystem::format_coweight(coords);
        if coords.len() != rs.rank() {
            return Err(Error::RankMismatch {
                expected: rs.rank(),
                got: coords.len(),
            });
        }
        let level: i64 = coords.iter().zip(rs.marks()).map(|(c, m)| c * m).sum();
        if coords.iter().any(|&c| c < 0) || level > 2 {
            return Err(Error::NotInX(label));
        }
        let class = classify(rs, coords).ok_or_else(|| Error::Inconsistent(format!("{label} is unclassified")))?;
        let point = rs.from_coweight_coords(coords);
        Ok(Tau {
            level0: rs.level_set(&point, 0),
            level1: rs.level_set(&point, 1),
            level2: rs.level_set(&point, 2),
            point,
            coords: coords.to_vec(),
            class,
        })
    }

    pub fn from_point(rs: &RootSystem, p: &Point) -> Result<Tau> {
        let c = rs.coweight_coords(p);
        if !c.iter().all(|x| x.is_integer()) {
            return Err(Error::NotInX(p.to_string()));
        }
        let c: Vec<i64> = c.iter().map(|x| x.to_integer()).collect();
        Tau::from_coords(rs, &c)
    }

    pub fn parse(rs: &RootSystem, s: &str) -> Result<Tau> {
        Tau::from_coords(rs, &rs.parse_coweight(s)?)
    }

    pub fn label(&self) -> String {
        RootSystem::format_coweight(&self.coords)
    }

    /// Positive roots of even level: Δ_τ ∩ Δ+.
    pub fn compact_positive(&self) -> RootSet {
        self.level0.union(self.level2)
    }

    /// The positive system -Δ_τ^2 ∪ Δ_τ^0 of Δ_τ.
    pub fn positive_system(&self, rs: &RootSystem) -> Vec<Root> {
        let mut v: Vec<Root> = self.level2.iter().map(|i| -rs.root(i)).collect();
        v.extend(self.level0.iter().map(|i| rs.root(i)));
        v
    }

    /// Simple roots of the positive system, read off as its indecomposable
    /// elements and cross-checked against Π ∩ τ^⊥ (with -θ added at level 2).
    pub fn simple_roots(&self, rs: &RootSystem) -> Result<Vec<Root>> {
        let pos = self.positive_system(rs);
        let computed = indecomposables(&pos);
        let mut expect: Vec<Root> = (0..rs.rank())
            .filter(|&i| self.coords[i] == 0)
            .map(|i| rs.simple_root(i))
            .collect();
        if rs.pair_root(&rs.theta(), &self.point) == q(2) {
            expect.push(-rs.theta());
        }
        let a: HashSet<Root> = computed.iter().copied().collect();
        let b: HashSet<Root> = expect.iter().copied().collect();
        if a != b {
            return Err(Error::Inconsistent(format!(
                "simple roots of the compact subsystem for {}",
                self.label()
            )));
        }
        Ok(expect)
    }

    /// n_τ = [W : W_τ].
    pub fn weyl_index(&self, rs: &RootSystem) -> Result<usize> {
        Ok(coset_reps(rs, self.compact_positive())?.1)
    }

    /// ρ_c = half the sum of the positive system of Δ_τ.
    pub fn rho_c(&self, rs: &RootSystem) -> Point {
        let mut p = Point::zero(rs.rank());
        for r in self.positive_system(rs) {
            p += &r.to_point();
        }
        p.scale(crate::Q::new(1, 2))
    }

    /// Parity of the level of a signed root.
    pub fn is_compact(&self, rs: &RootSystem, r: &Root) -> bool {
        rs.pair_root(r, &self.point).to_integer() % 2 == 0
    }
}

/// Elements of a positive system that are not sums of two of its elements.
pub fn indecomposables(pos: &[Root]) -> Vec<Root> {
    let set: HashSet<Root> = pos.iter().copied().collect();
    pos.iter()
        .filter(|&&r| !pos.iter().any(|&a| a != r && set.contains(&(r - a))))
        .copied()
        .collect()
}

/// All of X = C̄_2 ∩ P∨, with classes, in increasing coordinate order.
pub fn enumerate_x(rs: &RootSystem) -> Vec<Tau> {
    let n = rs.rank();
    let mut out = Vec::new();
    let mut cur = vec![0i64; n];
    fn rec(i: usize, budget: i64, cur: &mut Vec<i64>, rs: &RootSystem, out: &mut Vec<Tau>) {
        if i == cur.len() {
            out.push(Tau::from_coords(rs, cur).expect("point of X"));
            return;
        }
        let m = rs.marks()[i];
        let mut c = 0;
        while c * m <= budget {
            cur[i] = c;
            rec(i + 1, budget - c * m, cur, rs, out);
            c += 1;
        }
        cur[i] = 0;
    }
    rec(0, 2, &mut cur, rs, &mut out);
    out.sort_by(|a, b| a.coords.cmp(&b.coords));
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableRow {
    #[serde(rename = "type")]
    pub cartan_type: String,
    pub type1: Vec<String>,
    pub type2: Vec<String>,
    pub type3: Vec<String>,
}

/// The points of X of classes 1, 2 and 3, as coweight labels.
pub fn table_i(rs: &RootSystem) -> TableRow {
    let mut row = TableRow {
        cartan_type: rs.label(),
        type1: vec![],
        type2: vec![],
        type3: vec![],
    };
    let mut taus = enumerate_x(rs);
    taus.sort_by(|a, b| b.coords.cmp(&a.coords));
    for t in taus {
        match t.class.number() {
            1 => row.type1.push(t.label()),
            2 => row.type2.push(t.label()),
            3 => row.type3.push(t.label()),
            _ => {}
        }
    }
    row
}

/// Ẑ_τ = dom⁻¹(τ) ∩ Z̃.
pub fn fiber_zhat_tau(rs: &RootSystem, tau: &Tau) -> Vec<LatticePoint> {
    enumerate(rs, PointSet::Ztilde)
        .into_iter()
        .filter(|p| dom(rs, &p.point) == tau.point)
        .collect()
}

/// Z̃_τ = dom⁻¹(τ) ∩ Z̃_ab.
pub fn fiber_ztilde_tau(rs: &RootSystem, tau: &Tau) -> Vec<LatticePoint> {
    enumerate_ztilde_ab(rs)
        .into_iter()
        .filter(|p| dom(rs, &p.point) == tau.point)
        .collect()
}

/// Minimal representative of the coset W_τ v_z⁻¹.
pub fn fiber_coset(rs: &RootSystem, tau: &Tau, z: &Point) -> WeylElt {
    coset_min_rep(rs, tau.compact_positive(), &v_of_z(rs, z).inverse())
}

/// The fiber together with the coset of each point; fails unless the map
/// z ↦ W_τ v_z⁻¹ is a bijection onto W_τ\W.
pub fn fiber_with_cosets(rs: &RootSystem, tau: &Tau) -> Result<Vec<(LatticePoint, WeylElt)>> {
    let fiber = fiber_ztilde_tau(rs, tau);
    let (reps, index) = coset_reps(rs, tau.compact_positive())?;
    let reps: HashSet<WeylElt> = reps.into_iter().collect();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for p in fiber {
        let c = fiber_coset(rs, tau, &p.point);
        if !reps.contains(&c) || !seen.insert(c.clone()) {
            return Err(Error::Inconsistent(format!(
                "coset map is not injective on the fiber of {}",
                tau.label()
            )));
        }
        out.push((p, c));
    }
    if out.len() != index {
        return Err(Error::Inconsistent(format!(
            "fiber of {} has {} points, index is {index}",
            tau.label(),
            out.len()
        )));
    }
    Ok(out)
}

/// Roots of v_z⁻¹(Δ+) with odd τ-level.
pub fn odd_part_of_borel(rs: &RootSystem, tau: &Tau, z: &Point) -> Vec<Root> {
    let u = v_of_z(rs, z).inverse();
    rs.positive_roots()
        .iter()
        .map(|r| u.apply_root(r))
        .filter(|r| !tau.is_compact(rs, r))
        .collect()
}

/// No α, β, γ in the odd part of b_z with α+β and α+β+γ roots.
pub fn is_compatible_borel(rs: &RootSystem, z: &Point) -> Result<bool> {
    let tau = Tau::from_point(rs, &dom(rs, z))?;
    let odd = odd_part_of_borel(rs, &tau, z);
    let mut pairs: HashSet<Root> = HashSet::new();
    for &a in &odd {
        for &b in &odd {
            if rs.is_root(&(a + b)) {
                pairs.insert(a + b);
            }
        }
    }
    Ok(!pairs
        .iter()
        .any(|&s| odd.iter().any(|&c| rs.is_root(&(s + c)))))
}

#[derive(Clone, Debug, Serialize)]
pub struct CmptFiber {
    pub tau: String,
    pub points: Vec<LatticePoint>,
    /// For each s = t_ν v in Ω_2 (keyed by minuscule node, None for 1), the
    /// point z_s with W_τ v_{z_s}⁻¹ = W_τ v.
    pub bijection: Vec<(Option<usize>, ExtAffineElt, LatticePoint)>,
}

/// The compatible points of Z̃_τ and the bijection from Ω_2.
pub fn cmpt_fiber(rs: &RootSystem, tau: &Tau) -> Result<CmptFiber> {
    match tau.class {
        TauClass::TwiceMinuscule(_) | TauClass::Minuscule(_) | TauClass::Zero => {
            return Err(Error::UnsupportedClass(format!(
                "{} (class {}); the count is only established for classes 2 and 3",
                tau.label(),
                tau.class.number()
            )))
        }
        _ => {}
    }
    let fiber = fiber_with_cosets(rs, tau)?;
    let mut points = Vec::new();
    for (p, _) in &fiber {
        if is_compatible_borel(rs, &p.point)? {
            points.push(p.clone());
        }
    }
    let mut bijection = Vec::new();
    let mut hit = HashSet::new();
    for (j, s) in omega_r(rs, 2) {
        let c = coset_min_rep(rs, tau.compact_positive(), &s.v);
        let (p, _) = fiber
            .iter()
            .find(|(_, cz)| *cz == c)
            .ok_or_else(|| Error::Inconsistent(format!("no fiber point for {s}")))?;
        if !points.contains(p) || !hit.insert(p.coords.clone()) {
            return Err(Error::Inconsistent(format!(
                "the map from Ω_2 is not a bijection onto compatible points of {}",
                tau.label()
            )));
        }
        bijection.push((j, s, p.clone()));
    }
    if hit.len() != points.len() {
        return Err(Error::Inconsistent(format!(
            "{} compatible points but |Ω_2| = {}",
            points.len(),
            hit.len()
        )));
    }
    Ok(CmptFiber {
        tau: tau.label(),
        points,
        bijection,
    })
}

pub fn special_ideal(tau: &Tau) -> RootSet {
    tau.level2
}

/// {α > 0 : (α, x) > 0}.
pub fn positive_support(rs: &RootSystem, x: &Point) -> RootSet {
    let c = rs.coweight_coords(x);
    (0..rs.num_positive())
        .filter(|&i| RootSystem::pair_coords(&rs.root(i), &c) > q(0))
        .collect()
}

/// [n, n] ⊂ Φ = cent n at the root level, for n = n_{⟨Φ⟩}.
pub fn special_by_commutators(rs: &RootSystem, ideal: RootSet) -> bool {
    let n = positive_support(rs, &ideal_weight(rs, ideal));
    let mut brackets = RootSet::EMPTY;
    for a in n.iter() {
        for b in n.iter() {
            if let Some(s) = rs.sum_index(a, b) {
                brackets.insert(s);
            }
        }
    }
    let center: RootSet = n
        .iter()
        .filter(|&a| n.iter().all(|b| rs.sum_index(a, b).is_none()))
        .collect();
    brackets.is_subset(ideal) && ideal == center
}

/// Special abelian ideals: the commutator criterion and membership in
/// {Δ_τ^2 : τ ∈ X} must agree.
pub fn is_special(rs: &RootSystem, ideal: RootSet) -> Result<bool> {
    if !is_ideal(rs, ideal) || !is_abelian(rs, ideal) {
        return Ok(false);
    }
    let a = special_by_commutators(rs, ideal);
    let b = enumerate_x(rs).iter().any(|t| t.level2 == ideal);
    if a != b {
        return Err(Error::Inconsistent(format!(
            "special-ideal tests disagree on {:?}",
            rs.roots_of(ideal)
        )));
    }
    Ok(a)
}

/// The center classes 𝓜: None for 0 and Some(j) for ω∨_j, j minuscule.
pub fn minuscule_classes(rs: &RootSystem) -> Vec<Option<usize>> {
    let mut v = vec![None];
    v.extend(rs.minuscule().iter().map(|&j| Some(j)));
    v
}

pub fn minuscule_point(rs: &RootSystem, j: Option<usize>) -> Point {
    match j {
        None => Point::zero(rs.rank()),
        Some(j) => rs.fundamental_coweight(j).clone(),
    }
}

/// V_ω = {α : (α, ω) > 0}: V_{α_j} for ω∨_j, empty for 0.
pub fn v_omega(rs: &RootSystem, j: Option<usize>) -> RootSet {
    positive_support(rs, &minuscule_point(rs, j))
}

pub fn is_nilradical_ideal(rs: &RootSystem, ideal: RootSet) -> bool {
    minuscule_classes(rs)
        .into_iter()
        .any(|j| v_omega(rs, j) == ideal)
}

pub fn nilradical_of_weight(rs: &RootSystem, x: &Point) -> Result<RootSet> {
    if !rs.is_dominant(x) {
        return Err(Error::NotDominant(x.to_string()));
    }
    Ok(positive_support(rs, x))
}

#[derive(Clone, Debug, Serialize)]
pub struct Decomposition {
    pub tau: String,
    pub special: Vec<Root>,
    pub rest: Vec<Root>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Decompositions {
    pub entries: Vec<Decomposition>,
    /// C_i = {ω ∈ 𝓜 : Φ ⊆ V_ω}, as labels.
    pub excluded: Vec<String>,
}

fn class_label(j: Option<usize>) -> String {
    match j {
        None => "0".into(),
        Some(j) => format!("w{}", j + 1),
    }
}

/// All ways to write Φ = Δ_τ^2 ⊔ S with Δ_τ^2 ≠ ∅ and S ⊆ Δ_τ^1. The count
/// is checked against |P∨/Q∨| - |C_i|, and C_i against dom(Σ·z) ∩ 𝓜 for a
/// point z with i_z = Φ.
pub fn decompositions(rs: &RootSystem, ideal: RootSet) -> Result<Decompositions> {
    if !is_ideal(rs, ideal) {
        return Err(Error::NotAnIdeal);
    }
    if !is_abelian(rs, ideal) {
        return Err(Error::NotAbelian);
    }
    let mut entries = Vec::new();
    for t in enumerate_x(rs) {
        if !t.level2.is_empty()
            && t.level2.is_subset(ideal)
            && ideal.difference(t.level2).is_subset(t.level1)
        {
            entries.push(Decomposition {
                tau: t.label(),
                special: rs.roots_of(t.level2),
                rest: rs.roots_of(ideal.difference(t.level2)),
            });
        }
    }
    let c_i: Vec<Option<usize>> = minuscule_classes(rs)
        .into_iter()
        .filter(|&j| ideal.is_subset(v_omega(rs, j)))
        .collect();
    if entries.len() + c_i.len() != rs.center_order() {
        return Err(Error::Inconsistent(format!(
            "{} decompositions, |C_i| = {}",
            entries.len(),
            c_i.len()
        )));
    }
    let z = enumerate_ztilde_ab(rs)
        .into_iter()
        .find(|p| ideal_by_levels(rs, &p.point).ok() == Some(ideal))
        .ok_or_else(|| Error::Inconsistent("no point attached to the ideal".into()))?;
    if ideal_of_point(rs, &z.point)? != ideal {
        return Err(Error::Inconsistent("ideal routes disagree".into()));
    }
    let mut c_prime: Vec<Option<usize>> = Vec::new();
    for y in sigma_orbit(rs, &z.point) {
        let d = dom(rs, &y);
        for j in minuscule_classes(rs) {
            if minuscule_point(rs, j) == d && !c_prime.contains(&j) {
                c_prime.push(j);
            }
        }
    }
    let a: HashSet<_> = c_i.iter().collect();
    let b: HashSet<_> = c_prime.iter().collect();
    if a != b {
        return Err(Error::Inconsistent("C_i differs from dom(Σ·z) ∩ 𝓜".into()));
    }
    Ok(Decompositions {
        entries,
        excluded: c_i.into_iter().map(class_label).collect(),
    })
}

/// Subsets of Δ_τ^1 closed under adding roots of Δ_τ^0 ∩ Δ+.
pub fn submodules_bp(rs: &RootSystem, tau: &Tau) -> Vec<RootSet> {
    let elems: Vec<usize> = tau.level1.iter().collect();
    // reachability by repeatedly adding level-0 roots
    let mut up: Vec<RootSet> = elems.iter().map(|&e| RootSet::singleton(e)).collect();
    for (k, &e) in elems.iter().enumerate() {
        let mut stack = vec![e];
        while let Some(x) = stack.pop() {
            for g in tau.level0.iter() {
                if let Some(s) = rs.sum_index(x, g) {
                    if !up[k].contains(s) {
                        up[k].insert(s);
                        stack.push(s);
                    }
                }
            }
        }
    }
    let comparable: Vec<RootSet> = (0..elems.len())
        .map(|k| {
            let down: RootSet = (0..elems.len())
                .filter(|&l| up[l].contains(elems[k]))
                .map(|l| elems[l])
                .collect();
            up[k].union(down)
        })
        .collect();
    let mut out = enumerate_upsets(&elems, &up, &comparable);
    out.sort_by_key(|s| (s.len(), s.iter().collect::<Vec<_>>()));
    out
}

pub fn abelian_submodules_bp(rs: &RootSystem, tau: &Tau) -> Vec<RootSet> {
    submodules_bp(rs, tau)
        .into_iter()
        .filter(|&s| is_abelian(rs, s))
        .collect()
}

/// v_z⁻¹(Δ_z^1), the submodule attached to a point of Ẑ_τ.
pub fn submodule_of_point(rs: &RootSystem, z: &Point) -> Result<RootSet> {
    let u = v_of_z(rs, z).inverse();
    rs.level_set(z, 1)
        .iter()
        .map(|i| {
            let r = u.apply_root(&rs.root(i));
            rs.index_of(&r)
                .ok_or_else(|| Error::Inconsistent(format!("{r} is not positive")))
        })
        .collect()
}

/// Checks that z ↦ v_z⁻¹(Δ_z^1) is a bijection Ẑ_τ → submodules, and that
/// it restricts to a bijection Z̃_τ → abelian submodules.
pub fn submodule_bijection(rs: &RootSystem, tau: &Tau) -> Result<(usize, usize)> {
    let subs: HashSet<RootSet> = submodules_bp(rs, tau).into_iter().collect();
    let abelian: HashSet<RootSet> = abelian_submodules_bp(rs, tau).into_iter().collect();
    let mut image: HashMap<RootSet, bool> = HashMap::new();
    for p in fiber_zhat_tau(rs, tau) {
        let s = submodule_of_point(rs, &p.point)?;
        if !subs.contains(&s) || image.insert(s, p.abelian).is_some() {
            return Err(Error::Inconsistent(format!(
                "submodule map is not injective for {}",
                tau.label()
            )));
        }
        if p.abelian != abelian.contains(&s) {
            return Err(Error::Inconsistent("abelian points and abelian submodules differ".into()));
        }
    }
    if image.len() != subs.len() {
        return Err(Error::Inconsistent(format!(
            "{} points over {}, {} submodules",
            image.len(),
            tau.label(),
            subs.len()
        )));
    }
    Ok((subs.len(), abelian.len()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::Family;

    #[test]
    fn a2_x() {
        let rs = RootSystem::new(Family::A, 2).unwrap();
        let x = enumerate_x(&rs);
        assert_eq!(x.len(), 6);
        let mut classes: Vec<u8> = x.iter().map(|t| t.class.number()).collect();
        classes.sort();
        assert_eq!(classes, vec![1, 1, 3, 4, 4, 5]);
    }

    #[test]
    fn g2_row() {
        let rs = RootSystem::new(Family::G, 2).unwrap();
        let row = table_i(&rs);
        assert!(row.type1.is_empty() && row.type3.is_empty());
        assert_eq!(row.type2, vec!["w2"]);
    }

    #[test]
    fn a2_fibers() {
        let rs = RootSystem::new(Family::A, 2).unwrap();
        let tau = Tau::parse(&rs, "w1+w2").unwrap();
        assert_eq!(fiber_ztilde_tau(&rs, &tau).len(), 3);
        assert_eq!(fiber_zhat_tau(&rs, &tau).len(), 4);
        assert_eq!(tau.weyl_index(&rs).unwrap(), 3);
        assert_eq!(cmpt_fiber(&rs, &tau).unwrap().points.len(), 3);
        assert_eq!(submodules_bp(&rs, &tau).len(), 4);
        assert_eq!(abelian_submodules_bp(&rs, &tau).len(), 3);
        assert!(cmpt_fiber(&rs, &Tau::parse(&rs, "2w1").unwrap()).is_err());
        assert!(Tau::parse(&rs, "2w1+w2").is_err());
    }

    #[test]
    fn special_and_nilradical() {
        let rs = RootSystem::new(Family::A, 2).unwrap();
        let theta = RootSet::singleton(rs.theta_index());
        assert!(is_special(&rs, theta).unwrap());
        assert!(is_special(&rs, RootSet::EMPTY).unwrap());
        let two = theta.union(RootSet::singleton(rs.simple_index(0)));
        assert!(is_special(&rs, two).unwrap());
        assert!(is_nilradical_ideal(&rs, two));
        assert_eq!(decompositions(&rs, theta).unwrap().entries.len(), 1);
        assert_eq!(decompositions(&rs, two).unwrap().entries.len(), 2);
        assert_eq!(decompositions(&rs, two).unwrap().excluded, vec!["w1"]);
        assert_eq!(decompositions(&rs, RootSet::EMPTY).unwrap().entries.len(), 0);
        let b2 = RootSystem::new(Family::B, 2).unwrap();
        assert!(!is_nilradical_ideal(&b2, RootSet::singleton(b2.theta_index())));
    }
}
