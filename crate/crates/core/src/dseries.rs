//! Discrete-series bookkeeping for a point z of the abelian fiber over τ:
//! Harish-Chandra parameters in the cell of z, the minimal K-type, the
//! cohomological degree, and K-multiplicities of compatible discrete series
//! through symmetric powers of u ∩ p.
//!
//! Character computations happen in the frame v_z(·), where Δ_λ^+ becomes
//! Δ+ and the Levi m becomes the standard Levi on the nodes i with (α_i, z)
//! even. Results are mapped back with v_z⁻¹.

use num_traits::Signed;
use serde::Serialize;

use crate::character::{product, sum, sym_power_weights, Character, MType, StandardLevi};
use crate::error::{Error, Result};
use crate::ideals::ideal_weight;
use crate::lattice::{ideal_of_point, v_of_z, LatticePoint};
use crate::rootsys::{q, Family, Point, Root, RootSet, RootSystem, Q};
use crate::symmspace::{fiber_ztilde_tau, is_compatible_borel, Tau};
use crate::weyl::WeylElt;

/// A regular integral weight λ together with the point z of Z̃_τ whose
/// Borel subalgebra is b_λ.
#[derive(Clone, Debug, Serialize)]
pub struct HCParameter {
    pub lambda: Point,
    pub z: LatticePoint,
    pub tau: String,
}

pub fn is_regular(rs: &RootSystem, x: &Point) -> bool {
    rs.positive_roots().iter().all(|r| rs.pair_root(r, x) != q(0))
}

/// ρ_z = v_z⁻¹(ρ).
pub fn rho_z(rs: &RootSystem, z: &Point) -> Point {
    v_of_z(rs, z).apply_inv(rs.rho())
}

/// Locates the cell of λ: z = v_λ⁻¹(τ) must lie in Z̃_τ with v_z = v_λ⁻¹.
pub fn hc_parameter(rs: &RootSystem, tau: &Tau, lambda: &Point) -> Result<HCParameter> {
    if !rs.in_weight_lattice(lambda) || !is_regular(rs, lambda) {
        return Err(Error::NotRegularIntegral(lambda.to_string()));
    }
    let v_lambda = v_of_z(rs, lambda);
    let z = v_lambda.apply_inv(&tau.point);
    let lp = LatticePoint::from_point(rs, &z)?;
    let ok = lp.abelian && v_of_z(rs, &z) == v_lambda.inverse();
    if !ok {
        return Err(Error::NoCell(lambda.to_string()));
    }
    Ok(HCParameter {
        lambda: lambda.clone(),
        z: lp,
        tau: tau.label(),
    })
}

/// The parameter λ = ρ_z in the cell of z.
pub fn rho_parameter(rs: &RootSystem, tau: &Tau, z: &LatticePoint) -> Result<HCParameter> {
    hc_parameter(rs, tau, &rho_z(rs, &z.point))
}

/// Parses Σ c_i ϖ_i written like "3w1-w2", or "0".
pub fn parse_weight(rs: &RootSystem, s: &str) -> Result<Point> {
    let c = rs.parse_coweight(s)?;
    Ok((0..rs.rank()).fold(Point::zero(rs.rank()), |acc, i| {
        &acc + &rs.fundamental_weight(i).scale(q(c[i]))
    }))
}

/// The inverse of `parse_weight` on integral weights.
pub fn weight_label(rs: &RootSystem, x: &Point) -> String {
    let c: Vec<i64> = (0..rs.rank())
        .map(|i| rs.pair_root(&rs.simple_root(i), x).to_integer())
        .collect();
    RootSystem::format_coweight(&c)
}

/// A point of the fiber over τ, given as an index into
/// `fiber_ztilde_tau` or as a coweight.
pub fn fiber_point(rs: &RootSystem, tau: &Tau, z: &str) -> Result<LatticePoint> {
    let fiber = fiber_ztilde_tau(rs, tau);
    if let Ok(k) = z.trim().parse::<usize>() {
        let n = fiber.len();
        return fiber
            .into_iter()
            .nth(k)
            .ok_or_else(|| Error::Parse(format!("fiber over {} has {n} points", tau.label())));
    }
    let coords = rs.parse_coweight(z)?;
    fiber
        .into_iter()
        .find(|p| p.coords == coords)
        .ok_or_else(|| Error::Parse(format!("{z} is not in the fiber over {}", tau.label())))
}

/// λ = ρ_z for "rho", otherwise a weight that must lie in the cell of z.
pub fn cell_parameter(rs: &RootSystem, tau: &Tau, z: &LatticePoint, lambda: &str) -> Result<HCParameter> {
    if lambda.trim() == "rho" {
        return rho_parameter(rs, tau, z);
    }
    let hc = hc_parameter(rs, tau, &parse_weight(rs, lambda)?)?;
    if hc.z.coords != z.coords {
        return Err(Error::NoCell(format!("λ lies in the cell of {}, not {}", hc.z.label(), z.label())));
    }
    Ok(hc)
}

/// Δ_τ^+-dominance: (μ, β) ≥ 0 on the simple roots of Δ_τ^+.
pub fn is_tau_dominant(rs: &RootSystem, tau: &Tau, mu: &Point) -> Result<bool> {
    Ok(tau
        .simple_roots(rs)?
        .iter()
        .all(|b| rs.pair_root(b, mu) >= q(0)))
}

/// μ_λ = λ + ρ_n - ρ_c, checked against λ - ρ_z + 2⟨i_z⟩ - ½τ̃.
pub fn minimal_k_type(rs: &RootSystem, tau: &Tau, hc: &HCParameter) -> Result<Point> {
    let z = &hc.z.point;
    let rz = rho_z(rs, z);
    let rc = tau.rho_c(rs);
    let rn = &rz - &rc;
    let a = &(&hc.lambda + &rn) - &rc;

    let ideal = ideal_of_point(rs, z)?;
    let mut tilde = Point::zero(rs.rank());
    for r in rs.positive_roots() {
        for s in [*r, -*r] {
            tilde += &s.to_point().scale(rs.pair_root(&s, &tau.point));
        }
    }
    let b = &(&(&hc.lambda - &rz) + &ideal_weight(rs, ideal).scale(q(2))) - &tilde.scale(Q::new(1, 2));
    if a != b {
        return Err(Error::Inconsistent(format!("minimal K-type routes give {a} and {b}")));
    }
    if !is_tau_dominant(rs, tau, &a)? {
        return Err(Error::Inconsistent(format!("μ_λ = {a} is not Δ_τ^+-dominant")));
    }
    Ok(a)
}

/// k(λ) = dim i_z.
pub fn cohom_degree(rs: &RootSystem, z: &Point) -> Result<usize> {
    Ok(ideal_of_point(rs, z)?.len())
}

/// The θ-stable parabolic q = m ⊕ u attached to the cell of z, in the frame
/// v_z(·) and in original coordinates.
#[derive(Clone, Debug)]
pub struct LeviDatum {
    /// v_z⁻¹, mapping the frame back to original coordinates.
    pub u: WeylElt,
    pub levi: StandardLevi,
    /// Frame roots of u ∩ p and u ∩ k.
    pub u_p: Vec<Root>,
    pub u_k: Vec<Root>,
    pub compact_nodes: Vec<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct LeviSummary {
    pub compact_simple: Vec<Root>,
    pub m_positive: Vec<Root>,
    pub u_p: Vec<Root>,
    pub u_k: Vec<Root>,
    pub rho_m: Point,
    pub weyl_order: usize,
}

impl LeviDatum {
    pub fn new(rs: &RootSystem, z: &Point) -> LeviDatum {
        let u = v_of_z(rs, z).inverse();
        let parity = |r: &Root| rs.pair_root(r, z).to_integer().rem_euclid(2);
        let compact_nodes: Vec<usize> = (0..rs.rank())
            .filter(|&i| parity(&rs.simple_root(i)) == 0)
            .collect();
        let levi = StandardLevi::new(rs, &compact_nodes);
        let in_m = |r: &Root| (0..rs.rank()).all(|i| compact_nodes.contains(&i) || r.coeff(i) == 0);
        let (mut u_p, mut u_k) = (Vec::new(), Vec::new());
        for r in rs.positive_roots() {
            if in_m(r) {
                continue;
            }
            if parity(r) == 1 {
                u_p.push(*r);
            } else {
                u_k.push(*r);
            }
        }
        LeviDatum {
            u,
            levi,
            u_p,
            u_k,
            compact_nodes,
        }
    }

    pub fn to_frame(&self, x: &Point) -> Point {
        self.u.apply_inv(x)
    }

    pub fn from_frame(&self, x: &Point) -> Point {
        self.u.apply(x)
    }

    fn back(&self, v: &[Root]) -> Vec<Root> {
        v.iter().map(|r| self.u.apply_root(r)).collect()
    }

    pub fn summary(&self, rs: &RootSystem) -> LeviSummary {
        LeviSummary {
            compact_simple: self.back(&self.compact_nodes.iter().map(|&i| rs.simple_root(i)).collect::<Vec<_>>()),
            m_positive: self.back(&self.levi.positive),
            u_p: self.back(&self.u_p),
            u_k: self.back(&self.u_k),
            rho_m: self.from_frame(&self.levi.rho),
            weyl_order: self.levi.weyl_order(),
        }
    }

    /// f: the sum of coefficients on noncompact nodes. It vanishes on the
    /// roots of m and is at least 1 on u.
    pub fn degree(&self, rs: &RootSystem, frame_weight: &Point) -> Q {
        (0..rs.rank())
            .filter(|i| !self.compact_nodes.contains(i))
            .map(|i| frame_weight.0[i])
            .sum()
    }

    fn degree_range(&self, rs: &RootSystem) -> (Q, Q) {
        let f: Vec<Q> = self.u_p.iter().map(|r| self.degree(rs, &r.to_point())).collect();
        let lo = f.iter().min().copied().unwrap_or(q(1));
        let hi = f.iter().max().copied().unwrap_or(q(1));
        (lo, hi)
    }
}

/// Checks the structure behind the truncated K-type formula for a compatible
/// cell: [u∩p, u∩k] = 0, u∩k abelian, and (α, β) ≥ 0 across the two.
pub fn levi_structure_holds(rs: &RootSystem, levi: &LeviDatum) -> bool {
    let is_root = |r: Root| rs.is_root(&r);
    let cross = levi.u_p.iter().all(|&a| {
        levi.u_k
            .iter()
            .all(|&b| !is_root(a + b) && rs.pairing(&a.to_point(), &b.to_point()) >= q(0))
    });
    let ab = levi.u_k.iter().all(|&a| levi.u_k.iter().all(|&b| !is_root(a + b)));
    cross && ab
}

fn require_compatible(rs: &RootSystem, z: &Point) -> Result<()> {
    if !is_compatible_borel(rs, z)? {
        return Err(Error::NotCompatible(format!(
            "{z}; the symmetric-power formula needs a compatible Borel subalgebra"
        )));
    }
    Ok(())
}

#[derive(Clone, Debug, Serialize)]
pub struct KMultiplicity {
    pub mu: Point,
    pub total: i64,
    pub per_degree: Vec<i64>,
    pub n_max: usize,
    /// Largest degree that can contribute, when μ - μ_λ has a finite window.
    pub degree_bound: Option<usize>,
    pub complete: bool,
}

/// Partial sum over n ≤ n_max of the multiplicity of the M-type μ in
/// S^n(u ∩ p) ⊗ F_M(μ_λ), for a compatible cell.
pub fn k_multiplicity(
    rs: &RootSystem,
    tau: &Tau,
    hc: &HCParameter,
    mu: &Point,
    n_max: usize,
) -> Result<KMultiplicity> {
    require_compatible(rs, &hc.z.point)?;
    if !is_tau_dominant(rs, tau, mu)? {
        return Err(Error::NotDominant(mu.to_string()));
    }
    let levi = LeviDatum::new(rs, &hc.z.point);
    let mu_l = levi.to_frame(&minimal_k_type(rs, tau, hc)?);
    let mu_f = levi.to_frame(mu);
    let diff = &mu_f - &mu_l;
    let (lo, hi) = levi.degree_range(rs);
    let d = levi.degree(rs, &diff);
    let in_lattice = diff.0.iter().all(|c| c.is_integer());
    let window = if in_lattice && d >= q(0) {
        Some(((d / hi).ceil().to_integer() as usize, (d / lo).floor().to_integer() as usize))
    } else {
        None
    };
    let mut per_degree = Vec::new();
    for n in 0..=n_max {
        let contributes = window.is_some_and(|(a, b)| a <= n && n <= b);
        let m = if contributes {
            let chi = sym_power_weights(rs.rank(), &levi.u_p, n);
            levi.levi.shifted_multiplicity(&chi, &mu_f, Some(&mu_l))
        } else {
            0
        };
        if m < 0 {
            return Err(Error::NotACharacter(mu.to_string()));
        }
        per_degree.push(m);
    }
    let bound = window.map(|(_, b)| b);
    Ok(KMultiplicity {
        mu: mu.clone(),
        total: per_degree.iter().sum(),
        per_degree,
        n_max,
        degree_bound: bound,
        complete: bound.is_none_or(|b| b <= n_max),
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct SpectrumSlice {
    pub n: usize,
    pub k_types: Vec<MType>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Spectrum {
    pub tau: String,
    pub z: String,
    pub lambda: Point,
    pub minimal_k_type: Point,
    pub cohomological_degree: usize,
    pub n_max: usize,
    pub slices: Vec<SpectrumSlice>,
}

/// The K-types contributed by S^n(u ∩ p) ⊗ F_M(μ_λ) for n ≤ n_max, with
/// highest weights in original coordinates.
pub fn k_spectrum(rs: &RootSystem, tau: &Tau, hc: &HCParameter, n_max: usize) -> Result<Spectrum> {
    require_compatible(rs, &hc.z.point)?;
    let levi = LeviDatum::new(rs, &hc.z.point);
    let mu_l = minimal_k_type(rs, tau, hc)?;
    let mu_f = levi.to_frame(&mu_l);
    let mut slices = Vec::new();
    for n in 0..=n_max {
        let chi = sym_power_weights(rs.rank(), &levi.u_p, n);
        let mut k_types = levi.levi.tensor_decompose(rs, &chi, &mu_f)?;
        for t in &mut k_types {
            t.highest_weight = levi.from_frame(&t.highest_weight);
        }
        slices.push(SpectrumSlice { n, k_types });
    }
    Ok(Spectrum {
        tau: tau.label(),
        z: hc.z.label(),
        lambda: hc.lambda.clone(),
        minimal_k_type: mu_l,
        cohomological_degree: cohom_degree(rs, &hc.z.point)?,
        n_max,
        slices,
    })
}

/// Decomposition of S^n(u ∩ p) into M-types, original coordinates.
pub fn m_types_of_sym_power(rs: &RootSystem, z: &Point, n: usize) -> Result<Vec<MType>> {
    let levi = LeviDatum::new(rs, z);
    let mut out = levi.levi.decompose(rs, &sym_power_weights(rs.rank(), &levi.u_p, n))?;
    for t in &mut out {
        t.highest_weight = levi.from_frame(&t.highest_weight);
    }
    Ok(out)
}

/// Bourbaki's realization of E6 inside R^8.
pub fn e6_simple_roots_eps() -> [[Q; 8]; 6] {
    let h = Q::new(1, 2);
    let z = q(0);
    let o = q(1);
    [
        [h, -h, -h, -h, -h, -h, -h, h],
        [o, o, z, z, z, z, z, z],
        [-o, o, z, z, z, z, z, z],
        [z, -o, o, z, z, z, z, z],
        [z, z, -o, o, z, z, z, z],
        [z, z, z, -o, o, z, z, z],
    ]
}

/// Simple-root coordinates of a vector in the span of the E6 roots.
pub fn e6_from_eps(rs: &RootSystem, x: &[Q; 8]) -> Result<Point> {
    let simple = e6_simple_roots_eps();
    let dot = |a: &[Q; 8], b: &[Q; 8]| a.iter().zip(b).map(|(p, q)| *p * *q).sum::<Q>();
    let pairings: Vec<Q> = simple.iter().map(|a| dot(a, x)).collect();
    let coords: Vec<Q> = (0..6)
        .map(|i| (0..6).map(|j| rs.gram_inverse(i, j) * pairings[j]).sum())
        .collect();
    let mut back = [q(0); 8];
    for (c, a) in coords.iter().zip(&simple) {
        for k in 0..8 {
            back[k] += *c * a[k];
        }
    }
    if back != *x {
        return Err(Error::Inconsistent("vector is not in the span of the E6 roots".into()));
    }
    Ok(Point(coords))
}

fn eps(entries: &[(usize, Q)]) -> [Q; 8] {
    let mut v = [q(0); 8];
    for &(i, c) in entries {
        v[i - 1] += c;
    }
    v
}

#[derive(Clone, Debug, Serialize)]
pub struct FamilyTerm {
    pub h: (i64, i64),
    pub k: (i64, i64),
    pub mu: Point,
    pub nu: Point,
    /// Irreducible constituents of F_M(μ(h)) ⊗ F_M(ν(k)).
    pub constituents: Vec<MType>,
}

#[derive(Clone, Debug, Serialize)]
pub struct E6Degree {
    pub n: usize,
    pub family_terms: Vec<FamilyTerm>,
    pub irreducible: Vec<MType>,
    pub character_identity: bool,
    pub multiplicity_free: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct E6Report {
    pub tau: String,
    pub z: String,
    pub delta_1: usize,
    pub delta_6: usize,
    pub levi_roots: usize,
    /// Roots ±ε_i ± ε_j of m, as 1-based index pairs.
    pub levi_eps_pairs: Vec<(usize, usize)>,
    pub degrees: Vec<E6Degree>,
}

/// E6 with τ = ω∨_1 + ω∨_6 and the compatible point z = -τ, where m is the
/// D4 on nodes 2..5: the M-spectrum of S^n(u ∩ p) for n ≤ n_max, both as
/// irreducibles and as the two-parameter families μ(h_1, h_2) ⊗ ν(k_1, k_2).
/// Weights are in the frame v_z(·).
pub fn e6_example(n_max: usize) -> Result<E6Report> {
    let rs = RootSystem::new(Family::E, 6)?;
    let tau = Tau::parse(&rs, "w1+w6")?;
    let z = fiber_ztilde_tau(&rs, &tau)
        .into_iter()
        .find(|p| p.point == -&tau.point)
        .ok_or_else(|| Error::Inconsistent("-τ is not in the fiber of τ".into()))?;
    require_compatible(&rs, &z.point)?;
    let levi = LeviDatum::new(&rs, &z.point);
    if levi.compact_nodes != [1, 2, 3, 4] {
        return Err(Error::Inconsistent(format!("compact nodes {:?}", levi.compact_nodes)));
    }
    let c1: RootSet = rs.roots_of(rs.all_positive()).iter().enumerate()
        .filter(|(_, r)| r.coeff(0) == 1 && r.coeff(5) == 0)
        .map(|(i, _)| i)
        .collect();
    let c6: RootSet = rs.roots_of(rs.all_positive()).iter().enumerate()
        .filter(|(_, r)| r.coeff(0) == 0 && r.coeff(5) == 1)
        .map(|(i, _)| i)
        .collect();
    let d1 = rs.roots_of(c1);
    let d6 = rs.roots_of(c6);
    let up: std::collections::HashSet<Root> = levi.u_p.iter().copied().collect();
    if up != d1.iter().chain(&d6).copied().collect() {
        return Err(Error::Inconsistent("u ∩ p ≠ Δ_1 ∪ Δ_6".into()));
    }

    let simple = e6_simple_roots_eps();
    let dot = |a: &[Q; 8], b: &[Q; 8]| a.iter().zip(b).map(|(x, y)| *x * *y).sum::<Q>();
    for i in 0..6 {
        for j in 0..6 {
            let ours = rs.pairing(&rs.simple_root(i).to_point(), &rs.simple_root(j).to_point());
            if dot(&simple[i], &simple[j]) != ours {
                return Err(Error::Inconsistent("ε-realization has the wrong Gram matrix".into()));
            }
        }
    }

    // the roots of m in ε-coordinates
    let mut levi_eps_pairs = Vec::new();
    for r in &levi.levi.positive {
        let mut v = [q(0); 8];
        for (i, a) in simple.iter().enumerate() {
            for (vk, ak) in v.iter_mut().zip(a) {
                *vk += q(r.coeff(i)) * *ak;
            }
        }
        let support: Vec<usize> = (0..8).filter(|&k| v[k] != q(0)).map(|k| k + 1).collect();
        if support.len() != 2 || v.iter().any(|c| c.abs() != q(0) && c.abs() != q(1)) {
            return Err(Error::Inconsistent(format!("{r} is not of the form ±ε_i ± ε_j")));
        }
        levi_eps_pairs.push((support[0], support[1]));
    }
    levi_eps_pairs.sort();
    levi_eps_pairs.dedup();

    let h = Q::new(1, 2);
    let eta1 = eps(&[(8, h), (7, -h), (6, -h), (5, -h)]);
    let eta2 = eps(&[(1, -h), (2, h), (3, h), (4, h)]);
    let add = |a: &[Q; 8], b: &[Q; 8], s: Q| {
        let mut v = *a;
        for k in 0..8 {
            v[k] += s * b[k];
        }
        v
    };
    let m_plus = e6_from_eps(&rs, &add(&eta1, &eta2, q(1)))?;
    let m_minus = e6_from_eps(&rs, &add(&eta1, &eta2, q(-1)))?;
    let n_plus = e6_from_eps(&rs, &eps(&[(4, q(1)), (5, q(1))]))?;
    let n_minus = e6_from_eps(&rs, &eps(&[(5, q(1)), (4, q(-1))]))?;
    if e6_from_eps(&rs, &add(&eta1, &eta2, q(-1)))? != rs.simple_root(0).to_point()
        || n_minus != rs.simple_root(5).to_point()
    {
        return Err(Error::Inconsistent("noncompact simple roots do not match".into()));
    }

    let m = &levi.levi;
    let family = |a: &Point, b: &Point, x: i64, y: i64| &a.scale(q(x)) + &b.scale(q(y));
    let mut degrees = Vec::new();
    for n in 0..=n_max {
        let chi = sym_power_weights(rs.rank(), &levi.u_p, n);
        let irreducible = m.decompose(&rs, &chi)?;
        let multiplicity_free = irreducible.iter().all(|t| t.multiplicity == 1);
        let mut family_terms = Vec::new();
        let mut total = Character::new();
        let n = n as i64;
        for deg1 in 0..=n {
            let deg6 = n - deg1;
            for h2 in 0..=deg1 / 2 {
                for k2 in 0..=deg6 / 2 {
                    let (h1, k1) = (deg1 - h2, deg6 - k2);
                    let mu = family(&m_plus, &m_minus, h1, h2);
                    let nu = family(&n_plus, &n_minus, k1, k2);
                    let term = product(&m.irreducible(&rs, &mu)?, &m.irreducible(&rs, &nu)?);
                    total = sum(&total, &term);
                    family_terms.push(FamilyTerm {
                        h: (h1, h2),
                        k: (k1, k2),
                        constituents: m.decompose(&rs, &term)?,
                        mu,
                        nu,
                    });
                }
            }
        }
        degrees.push(E6Degree {
            n: n as usize,
            character_identity: total == chi,
            family_terms,
            irreducible,
            multiplicity_free,
        });
    }
    Ok(E6Report {
        tau: tau.label(),
        z: z.label(),
        delta_1: d1.len(),
        delta_6: d6.len(),
        levi_roots: 2 * levi.levi.positive.len(),
        levi_eps_pairs,
        degrees,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a2_minimal_k_type_at_minus_tau() {
        let rs = RootSystem::new(Family::A, 2).unwrap();
        let tau = Tau::parse(&rs, "w1+w2").unwrap();
        let z = LatticePoint::from_point(&rs, &-&tau.point).unwrap();
        let hc = rho_parameter(&rs, &tau, &z).unwrap();
        assert_eq!(hc.lambda, -rs.rho());
        // Δ_τ^+ = {-θ}, so ρ_c = -θ/2 = ρ_n and μ_λ = -θ
        let mu = minimal_k_type(&rs, &tau, &hc).unwrap();
        assert_eq!(mu, -&rs.theta().to_point());
        assert!(rho_parameter(&rs, &tau, &LatticePoint::from_point(&rs, &tau.point).unwrap()).is_err());
    }

    #[test]
    fn compact_tau_gives_lambda_minus_rho() {
        let rs = RootSystem::new(Family::B, 2).unwrap();
        let tau = Tau::parse(&rs, "0").unwrap();
        let lambda = &rs.rho().scale(q(3)) + rs.fundamental_weight(0);
        let hc = hc_parameter(&rs, &tau, &lambda).unwrap();
        assert_eq!(minimal_k_type(&rs, &tau, &hc).unwrap(), &lambda - rs.rho());
    }

    #[test]
    fn outside_any_cell() {
        let rs = RootSystem::new(Family::A, 2).unwrap();
        let tau = Tau::parse(&rs, "2w1").unwrap();
        let lambda = Point(vec![q(-1), q(-1)]).scale(q(1));
        assert!(matches!(hc_parameter(&rs, &tau, &lambda), Err(Error::NoCell(_))));
        assert!(matches!(
            hc_parameter(&rs, &tau, &Point::zero(2)),
            Err(Error::NotRegularIntegral(_))
        ));
    }

    #[test]
    fn sym_square_weights_for_a2() {
        let rs = RootSystem::new(Family::A, 2).unwrap();
        let tau = Tau::parse(&rs, "w1+w2").unwrap();
        let levi = LeviDatum::new(&rs, &-&tau.point);
        assert!(levi.compact_nodes.is_empty());
        assert_eq!(levi.u_p.len(), 2);
        assert_eq!(levi.u_k.len(), 1);
        assert_eq!(sym_power_weights(rs.rank(), &levi.u_p, 2).len(), 3);
    }

    #[test]
    fn minimal_type_has_multiplicity_one() {
        let rs = RootSystem::new(Family::A, 2).unwrap();
        let tau = Tau::parse(&rs, "w1+w2").unwrap();
        for z in fiber_ztilde_tau(&rs, &tau) {
            let hc = rho_parameter(&rs, &tau, &z).unwrap();
            let mu = minimal_k_type(&rs, &tau, &hc).unwrap();
            let k = k_multiplicity(&rs, &tau, &hc, &mu, 0).unwrap();
            assert_eq!(k.total, 1);
            assert!(k.complete);
        }
    }

    #[test]
    fn e6_family_counts() {
        let r = e6_example(2).unwrap();
        assert_eq!((r.delta_1, r.delta_6, r.levi_roots), (8, 8, 24));
        let summands: Vec<usize> = r.degrees.iter().map(|d| d.family_terms.len()).collect();
        let irreducible: Vec<usize> = r.degrees.iter().map(|d| d.irreducible.len()).collect();
        assert_eq!(summands, vec![1, 2, 5]);
        assert_eq!(irreducible, vec![1, 2, 6]);
        assert!(r.degrees.iter().all(|d| d.character_identity && d.multiplicity_free));
    }
}
