//! Characters of a standard Levi subalgebra m (the simple roots α_i, i ∈ C)
//! as finitely supported integer functions on weights. Weights are points in
//! simple-root coordinates of the ambient root system.

use std::collections::{BTreeMap, HashMap, VecDeque};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::rootsys::{q, Point, Root, RootSystem, Q};
use crate::weyl::{subgroup_elements, WeylElt};

pub type Character = BTreeMap<Point, i64>;

/// The reductive subalgebra spanned by h and the roots supported on `nodes`.
#[derive(Clone, Debug)]
pub struct StandardLevi {
    pub nodes: Vec<usize>,
    pub positive: Vec<Root>,
    pub rho: Point,
    weyl: Vec<(WeylElt, i64)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MType {
    pub highest_weight: Point,
    pub multiplicity: i64,
    pub dimension: i64,
}

impl StandardLevi {
    pub fn new(rs: &RootSystem, nodes: &[usize]) -> StandardLevi {
        let positive: Vec<Root> = rs
            .positive_roots()
            .iter()
            .filter(|r| (0..rs.rank()).all(|i| nodes.contains(&i) || r.coeff(i) == 0))
            .copied()
            .collect();
        let mut rho = Point::zero(rs.rank());
        for r in &positive {
            rho += &r.to_point();
        }
        let gens: Vec<WeylElt> = nodes.iter().map(|&i| WeylElt::simple(rs, i)).collect();
        let weyl = subgroup_elements(rs, &gens)
            .into_iter()
            .map(|w| {
                let s = w.sign(rs);
                (w, s)
            })
            .collect();
        StandardLevi {
            nodes: nodes.to_vec(),
            positive,
            rho: rho.scale(Q::new(1, 2)),
            weyl,
        }
    }

    pub fn weyl_order(&self) -> usize {
        self.weyl.len()
    }

    pub fn is_dominant(&self, rs: &RootSystem, x: &Point) -> bool {
        self.nodes
            .iter()
            .all(|&i| rs.pair_root(&rs.simple_root(i), x) >= q(0))
    }

    /// The W_m-conjugate of x in the closed dominant chamber, with the sign
    /// of a conjugating element and whether x is singular.
    fn dominant_conjugate(&self, rs: &RootSystem, x: &Point) -> (Point, i64, bool) {
        let mut cur = x.clone();
        let mut sign = 1;
        while let Some(&i) = self
            .nodes
            .iter()
            .find(|&&i| rs.pair_root(&rs.simple_root(i), &cur) < q(0))
        {
            cur = rs.reflect(&rs.simple_root(i), &cur);
            sign = -sign;
        }
        let singular = self
            .nodes
            .iter()
            .any(|&i| rs.pair_root(&rs.simple_root(i), &cur) == q(0));
        (cur, sign, singular)
    }

    /// Whether μ - x is a nonnegative integer combination of the simple roots of m.
    fn below(&self, rs: &RootSystem, mu: &Point, x: &Point) -> bool {
        let d = mu - x;
        (0..rs.rank()).all(|i| {
            let c = &d.0[i];
            if self.nodes.contains(&i) {
                c.is_integer() && *c >= q(0)
            } else {
                *c == q(0)
            }
        })
    }

    /// Weyl's dimension formula.
    pub fn dimension(&self, rs: &RootSystem, mu: &Point) -> Result<i64> {
        let shifted = mu + &self.rho;
        let mut d = q(1);
        for r in &self.positive {
            d = d * rs.pair_root(r, &shifted) / rs.pair_root(r, &self.rho);
        }
        if !d.is_integer() || d < q(0) {
            return Err(Error::Inconsistent(format!("dimension of {mu} is {d}")));
        }
        Ok(d.to_integer())
    }

    /// Weight multiplicities of the irreducible module with highest weight μ,
    /// by Freudenthal's recursion.
    pub fn irreducible(&self, rs: &RootSystem, mu: &Point) -> Result<Character> {
        if !self.is_dominant(rs, mu) {
            return Err(Error::NotDominant(mu.to_string()));
        }
        let norm = |x: &Point| rs.pairing(x, x);
        let top = norm(&(mu + &self.rho));
        let mut mult: HashMap<Point, i64> = HashMap::from([(mu.clone(), 1)]);
        let mut order = vec![mu.clone()];
        let mut queue = VecDeque::from([mu.clone()]);
        // breadth-first by depth, so every ν + kα is settled before ν
        let mut depth_of: HashMap<Point, usize> = HashMap::from([(mu.clone(), 0)]);
        while let Some(x) = queue.pop_front() {
            let d = depth_of[&x];
            for &i in &self.nodes {
                let y = &x - &rs.simple_root(i).to_point();
                if depth_of.contains_key(&y) {
                    continue;
                }
                let (dy, _, _) = self.dominant_conjugate(rs, &y);
                if !self.below(rs, mu, &dy) {
                    continue;
                }
                depth_of.insert(y.clone(), d + 1);
                queue.push_back(y.clone());
                order.push(y);
            }
        }
        order.sort_by_key(|x| depth_of[x]);
        for nu in order.iter().skip(1) {
            let mut num = q(0);
            for r in &self.positive {
                let a = r.to_point();
                let mut k = 1;
                loop {
                    let y = nu + &a.scale(q(k));
                    match mult.get(&y) {
                        Some(&m) => {
                            num += q(m) * rs.pairing(&y, &a);
                            k += 1;
                        }
                        _ => break,
                    }
                }
            }
            let den = top - norm(&(nu + &self.rho));
            let m = q(2) * num / den;
            if !m.is_integer() || m < q(0) {
                return Err(Error::Inconsistent(format!("Freudenthal gives {m} at {nu}")));
            }
            mult.insert(nu.clone(), m.to_integer());
        }
        Ok(mult.into_iter().filter(|(_, m)| *m != 0).collect())
    }

    /// Multiplicity of the irreducible with highest weight μ in a character,
    /// Σ_{w ∈ W_m} ε(w) χ(w(μ + ρ_m) - ρ_m).
    pub fn multiplicity(&self, chi: &Character, mu: &Point) -> i64 {
        self.shifted_multiplicity(chi, mu, None)
    }

    /// Σ_w ε(w) χ(w(μ + ρ_m) - ρ_m - shift): the multiplicity of μ in
    /// χ ⊗ V(shift) when χ is W_m-invariant.
    pub fn shifted_multiplicity(&self, chi: &Character, mu: &Point, shift: Option<&Point>) -> i64 {
        let x = mu + &self.rho;
        self.weyl
            .iter()
            .map(|(w, s)| {
                let mut y = &w.apply(&x) - &self.rho;
                if let Some(sh) = shift {
                    y = &y - sh;
                }
                s * chi.get(&y).copied().unwrap_or(0)
            })
            .sum()
    }

    /// Decomposes a W_m-invariant character into irreducibles, with a Weyl
    /// dimension cross-check.
    pub fn decompose(&self, rs: &RootSystem, chi: &Character) -> Result<Vec<MType>> {
        let mut out = Vec::new();
        for mu in chi.keys().filter(|x| self.is_dominant(rs, x)) {
            let m = self.multiplicity(chi, mu);
            if m < 0 {
                return Err(Error::NotACharacter(mu.to_string()));
            }
            if m > 0 {
                out.push(MType {
                    highest_weight: mu.clone(),
                    multiplicity: m,
                    dimension: self.dimension(rs, mu)?,
                });
            }
        }
        check_dimension(&out, chi.values().sum())?;
        Ok(out)
    }

    /// Decomposes χ ⊗ V(λ) by the Brauer-Klimyk rule.
    pub fn tensor_decompose(&self, rs: &RootSystem, chi: &Character, lambda: &Point) -> Result<Vec<MType>> {
        let mut acc: Character = Character::new();
        for (nu, &c) in chi {
            let (d, sign, singular) = self.dominant_conjugate(rs, &(&(lambda + nu) + &self.rho));
            if !singular {
                *acc.entry(&d - &self.rho).or_default() += sign * c;
            }
        }
        let mut out = Vec::new();
        for (mu, m) in acc {
            if m < 0 {
                return Err(Error::NotACharacter(mu.to_string()));
            }
            if m > 0 {
                out.push(MType {
                    dimension: self.dimension(rs, &mu)?,
                    highest_weight: mu,
                    multiplicity: m,
                });
            }
        }
        let total = chi.values().sum::<i64>() * self.dimension(rs, lambda)?;
        check_dimension(&out, total)?;
        Ok(out)
    }
}

fn check_dimension(parts: &[MType], total: i64) -> Result<()> {
    let got: i64 = parts.iter().map(|t| t.multiplicity * t.dimension).sum();
    if got != total {
        return Err(Error::Inconsistent(format!("dimensions sum to {got}, expected {total}")));
    }
    Ok(())
}

/// Weights of S^n of the span of the given roots: sums over n-multisets.
pub fn sym_power_weights(rank: usize, roots: &[Root], n: usize) -> Character {
    let mut out = Character::new();
    fn rec(start: usize, left: usize, acc: Point, roots: &[Root], out: &mut Character) {
        if left == 0 {
            *out.entry(acc).or_default() += 1;
            return;
        }
        for k in start..roots.len() {
            rec(k, left - 1, &acc + &roots[k].to_point(), roots, out);
        }
    }
    rec(0, n, Point::zero(rank), roots, &mut out);
    out
}

pub fn product(a: &Character, b: &Character) -> Character {
    let mut out = Character::new();
    for (x, m) in a {
        for (y, n) in b {
            *out.entry(x + y).or_default() += m * n;
        }
    }
    out.retain(|_, m| *m != 0);
    out
}

pub fn sum(a: &Character, b: &Character) -> Character {
    let mut out = a.clone();
    for (x, m) in b {
        *out.entry(x.clone()).or_default() += m;
    }
    out.retain(|_, m| *m != 0);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::Family;

    #[test]
    fn a2_adjoint() {
        let rs = RootSystem::new(Family::A, 2).unwrap();
        let m = StandardLevi::new(&rs, &[0, 1]);
        let theta = rs.theta().to_point();
        let chi = m.irreducible(&rs, &theta).unwrap();
        assert_eq!(chi.values().sum::<i64>(), 8);
        assert_eq!(chi[&Point::zero(2)], 2);
        let parts = m.decompose(&rs, &chi).unwrap();
        assert_eq!(parts.len(), 1);
        assert_eq!(parts[0].highest_weight, theta);
    }

    #[test]
    fn sym_power_sizes() {
        let rs = RootSystem::new(Family::A, 3).unwrap();
        let roots: Vec<Root> = rs.positive_roots().to_vec();
        for n in 0..4 {
            let s = sym_power_weights(3, &roots, n);
            let total: i64 = s.values().sum();
            let binom = (0..n as i64).fold(1, |acc, k| acc * (6 + k) / (k + 1));
            assert_eq!(total, binom);
        }
    }

    #[test]
    fn tensor_square_of_a1_doublet() {
        let rs = RootSystem::new(Family::A, 1).unwrap();
        let m = StandardLevi::new(&rs, &[0]);
        let half = rs.fundamental_weight(0).clone();
        let chi = m.irreducible(&rs, &half).unwrap();
        let parts = m.tensor_decompose(&rs, &chi, &half).unwrap();
        let dims: Vec<i64> = parts.iter().map(|t| t.dimension).collect();
        assert_eq!(dims, vec![1, 3]);
    }
}
