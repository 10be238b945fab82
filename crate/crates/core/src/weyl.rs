//! Finite, affine and extended affine Weyl groups.
//!
//! A finite element is an integer matrix in simple-root coordinates, kept
//! together with its inverse. An element t_τ v of the extended affine Weyl
//! group acts on points by x ↦ v(x) + τ. Affine words use letter 0 for the
//! reflection in the affine simple root -θ+δ and letter i for s_i (1-based).

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use num_traits::{Signed, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rootsys::{q, Point, Q, Root, RootSet, RootSystem, MAX_RANK};

#[derive(Clone, Debug)]
pub struct WeylElt {
    n: usize,
    cartan: Arc<[i32]>,
    mat: Vec<i32>,
    inv: Vec<i32>,
}

impl PartialEq for WeylElt {
    fn eq(&self, o: &WeylElt) -> bool {
        self.mat == o.mat
    }
}

impl Eq for WeylElt {}

impl Hash for WeylElt {
    fn hash<H: Hasher>(&self, h: &mut H) {
        self.mat.hash(h);
    }
}

fn matmul(a: &[i32], b: &[i32], n: usize) -> Vec<i32> {
    let mut c = vec![0i32; n * n];
    for i in 0..n {
        for k in 0..n {
            let x = a[i * n + k];
            if x != 0 {
                for j in 0..n {
                    c[i * n + j] += x * b[k * n + j];
                }
            }
        }
    }
    c
}

fn apply_int(m: &[i32], n: usize, r: &Root) -> Root {
    let mut out = [0i64; MAX_RANK];
    for (k, o) in out.iter_mut().enumerate().take(n) {
        *o = (0..n).map(|j| m[k * n + j] as i64 * r.coeff(j)).sum();
    }
    Root::new(&out[..n])
}

fn apply_q(m: &[i32], n: usize, x: &Point) -> Point {
    Point(
        (0..n)
            .map(|k| {
                (0..n)
                    .filter(|&j| m[k * n + j] != 0)
                    .map(|j| x.0[j] * q(m[k * n + j] as i64))
                    .sum()
            })
            .collect(),
    )
}

fn simple_matrix(cartan: &[i32], n: usize, i: usize) -> Vec<i32> {
    let mut mat = vec![0i32; n * n];
    for j in 0..n {
        mat[j * n + j] = 1;
        mat[i * n + j] -= cartan[j * n + i];
    }
    mat
}

impl WeylElt {
    pub fn identity_of(rs: &RootSystem) -> WeylElt {
        let n = rs.rank();
        let mut mat = vec![0i32; n * n];
        for i in 0..n {
            mat[i * n + i] = 1;
        }
        WeylElt {
            n,
            cartan: rs.cartan_matrix(),
            inv: mat.clone(),
            mat,
        }
    }

    fn with_mat(&self, mat: Vec<i32>, inv: Vec<i32>) -> WeylElt {
        WeylElt {
            n: self.n,
            cartan: self.cartan.clone(),
            mat,
            inv,
        }
    }

    pub fn simple(rs: &RootSystem, i: usize) -> WeylElt {
        let m = simple_matrix(&rs.cartan_matrix(), rs.rank(), i);
        WeylElt::identity_of(rs).with_mat(m.clone(), m)
    }

    /// The reflection s_β, sending α_j to α_j - ⟨α_j, β∨⟩β.
    pub fn reflection(rs: &RootSystem, beta: &Root) -> WeylElt {
        let n = rs.rank();
        let mut mat = vec![0i32; n * n];
        for j in 0..n {
            let c = rs.pair_coroot(&rs.simple_root(j).to_point(), beta).to_integer();
            for k in 0..n {
                let delta = i64::from(j == k);
                mat[k * n + j] = (delta - c * beta.coeff(k)) as i32;
            }
        }
        WeylElt::identity_of(rs).with_mat(mat.clone(), mat)
    }

    /// Product s_{w[0]} s_{w[1]} ⋯ with 0-based letters.
    pub fn from_word(rs: &RootSystem, word: &[usize]) -> WeylElt {
        word.iter().fold(WeylElt::identity_of(rs), |acc, &i| {
            acc.compose(&WeylElt::simple(rs, i))
        })
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn compose(&self, o: &WeylElt) -> WeylElt {
        self.with_mat(
            matmul(&self.mat, &o.mat, self.n),
            matmul(&o.inv, &self.inv, self.n),
        )
    }

    pub fn inverse(&self) -> WeylElt {
        self.with_mat(self.inv.clone(), self.mat.clone())
    }

    pub fn is_identity(&self) -> bool {
        (0..self.n).all(|i| {
            (0..self.n).all(|j| self.mat[i * self.n + j] == i32::from(i == j))
        })
    }

    pub fn apply_root(&self, r: &Root) -> Root {
        apply_int(&self.mat, self.n, r)
    }

    pub fn apply_inv_root(&self, r: &Root) -> Root {
        apply_int(&self.inv, self.n, r)
    }

    pub fn apply(&self, x: &Point) -> Point {
        apply_q(&self.mat, self.n, x)
    }

    pub fn apply_inv(&self, x: &Point) -> Point {
        apply_q(&self.inv, self.n, x)
    }

    /// Image of a set of positive roots, as signed roots.
    pub fn apply_set(&self, rs: &RootSystem, s: RootSet) -> Vec<Root> {
        s.iter().map(|i| self.apply_root(&rs.root(i))).collect()
    }

    /// N(w) = {α > 0 : w⁻¹(α) < 0}.
    pub fn inversion_set(&self, rs: &RootSystem) -> RootSet {
        (0..rs.num_positive())
            .filter(|&i| !self.apply_inv_root(&rs.root(i)).is_positive())
            .collect()
    }

    pub fn length(&self, rs: &RootSystem) -> usize {
        self.inversion_set(rs).len()
    }

    pub fn sign(&self, rs: &RootSystem) -> i64 {
        if self.length(rs).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// w(α_i) < 0.
    pub fn has_right_descent(&self, i: usize) -> bool {
        (0..self.n).any(|k| self.mat[k * self.n + i] < 0)
    }

    pub fn times_simple(&self, i: usize) -> WeylElt {
        let s = simple_matrix(&self.cartan, self.n, i);
        self.with_mat(matmul(&self.mat, &s, self.n), matmul(&s, &self.inv, self.n))
    }

    pub fn simple_times(&self, i: usize) -> WeylElt {
        let s = simple_matrix(&self.cartan, self.n, i);
        self.with_mat(matmul(&s, &self.mat, self.n), matmul(&self.inv, &s, self.n))
    }

    /// Reduced word with 0-based letters, stripping the smallest right descent
    /// at each step.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut w = self.clone();
        let mut word = Vec::new();
        while let Some(i) = (0..self.n).find(|&i| w.has_right_descent(i)) {
            word.push(i);
            w = w.times_simple(i);
        }
        word.reverse();
        word
    }
}

impl fmt::Display for WeylElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let w = self.reduced_word();
        if w.is_empty() {
            return write!(f, "1");
        }
        let s: Vec<String> = w.iter().map(|i| format!("s{}", i + 1)).collect();
        write!(f, "{}", s.join(" "))
    }
}

/// Enumerates a finite subgroup of W from generators by breadth-first closure.
pub fn subgroup_elements(rs: &RootSystem, gens: &[WeylElt]) -> Vec<WeylElt> {
    let id = WeylElt::identity_of(rs);
    let mut seen: HashSet<WeylElt> = HashSet::from([id.clone()]);
    let mut out = vec![id.clone()];
    let mut queue = VecDeque::from([id]);
    while let Some(w) = queue.pop_front() {
        for g in gens {
            let x = w.compose(g);
            if seen.insert(x.clone()) {
                out.push(x.clone());
                queue.push_back(x);
            }
        }
    }
    out
}

pub const MAX_MATERIALIZED: usize = 1_000_000;

/// All elements of W; only for groups of order at most 10^6.
pub fn weyl_group_elements(rs: &RootSystem) -> Vec<WeylElt> {
    let gens: Vec<WeylElt> = (0..rs.rank()).map(|i| WeylElt::simple(rs, i)).collect();
    subgroup_elements(rs, &gens)
}

/// Longest element of the parabolic subgroup generated by the given nodes.
pub fn longest_element(rs: &RootSystem, nodes: &[usize]) -> WeylElt {
    let mut w = WeylElt::identity_of(rs);
    while let Some(&i) = nodes.iter().find(|&&i| !w.has_right_descent(i)) {
        w = w.times_simple(i);
    }
    w
}

pub fn longest(rs: &RootSystem) -> WeylElt {
    let all: Vec<usize> = (0..rs.rank()).collect();
    longest_element(rs, &all)
}

/// w_0^j: longest element of the parabolic subgroup on Π ∖ {α_j}.
pub fn longest_complement(rs: &RootSystem, j: usize) -> WeylElt {
    let nodes: Vec<usize> = (0..rs.rank()).filter(|&i| i != j).collect();
    longest_element(rs, &nodes)
}

/// Returns (dom, u) with u(x) = dom dominant and u of minimal length.
pub fn to_dominant(rs: &RootSystem, x: &Point) -> (Point, WeylElt) {
    let mut cur = x.clone();
    let mut u = WeylElt::identity_of(rs);
    loop {
        let c = rs.coweight_coords(&cur);
        match (0..rs.rank()).find(|&i| c[i].is_negative()) {
            None => return (cur, u),
            Some(i) => {
                cur = rs.reflect(&rs.simple_root(i), &cur);
                u = u.simple_times(i);
            }
        }
    }
}

fn check_closed(rs: &RootSystem, psi: RootSet) -> Result<()> {
    for a in psi.iter() {
        for b in psi.iter() {
            if let Some(s) = rs.sum_index(a, b) {
                if !psi.contains(s) {
                    return Err(Error::NotClosed);
                }
            }
            let d = rs.root(a) - rs.root(b);
            if a != b && rs.is_root(&d) {
                let pos = if d.is_positive() { d } else { -d };
                if !psi.contains(rs.index_of(&pos).unwrap()) {
                    return Err(Error::NotClosed);
                }
            }
        }
    }
    Ok(())
}

/// Minimal-length representatives of the right cosets W_Ψ w, for the
/// reflection subgroup of a closed subsystem Ψ given by Ψ ∩ Δ+.
/// Returns the representatives in breadth-first order and the index.
pub fn coset_reps(rs: &RootSystem, psi_pos: RootSet) -> Result<(Vec<WeylElt>, usize)> {
    check_closed(rs, psi_pos)?;
    let id = WeylElt::identity_of(rs);
    let mut seen: HashSet<WeylElt> = HashSet::from([id.clone()]);
    let mut out = vec![id.clone()];
    let mut queue = VecDeque::from([id]);
    while let Some(w) = queue.pop_front() {
        for i in 0..rs.rank() {
            if w.has_right_descent(i) {
                continue;
            }
            let gamma = w.apply_root(&rs.simple_root(i));
            if psi_pos.contains(rs.index_of(&gamma).expect("positive root")) {
                continue;
            }
            let x = w.times_simple(i);
            if seen.insert(x.clone()) {
                out.push(x.clone());
                queue.push_back(x);
            }
        }
    }
    let k = out.len();
    Ok((out, k))
}

/// The minimal-length element of W_Ψ w.
pub fn coset_min_rep(rs: &RootSystem, psi_pos: RootSet, w: &WeylElt) -> WeylElt {
    let mut w = w.clone();
    loop {
        let bad = w.inversion_set(rs).intersection(psi_pos);
        match bad.iter().next() {
            None => return w,
            Some(b) => w = WeylElt::reflection(rs, &rs.root(b)).compose(&w),
        }
    }
}

/// An affine root α + kδ, viewed as the affine function x ↦ (α, x) + k.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct AffineRoot {
    pub root: Root,
    pub k: i64,
}

impl AffineRoot {
    pub fn new(root: Root, k: i64) -> AffineRoot {
        AffineRoot { root, k }
    }

    pub fn is_positive(&self) -> bool {
        self.k > 0 || (self.k == 0 && self.root.is_positive())
    }

    pub fn eval(&self, rs: &RootSystem, x: &Point) -> Q {
        rs.pair_root(&self.root, x) + q(self.k)
    }

    /// Affine simple roots: index 0 is -θ+δ, index i ≥ 1 is α_i.
    pub fn simple(rs: &RootSystem, i: usize) -> AffineRoot {
        if i == 0 {
            AffineRoot::new(-rs.theta(), 1)
        } else {
            AffineRoot::new(rs.simple_root(i - 1), 0)
        }
    }

    /// s_a(b) = b - ⟨b, a∨⟩ a.
    pub fn reflect(rs: &RootSystem, a: &AffineRoot, b: &AffineRoot) -> AffineRoot {
        let c = rs.pair_coroot(&b.root.to_point(), &a.root).to_integer();
        AffineRoot::new(rs.reflect_root(&a.root, &b.root), b.k - c * a.k)
    }
}

impl Ord for AffineRoot {
    fn cmp(&self, o: &AffineRoot) -> std::cmp::Ordering {
        self.k.cmp(&o.k).then_with(|| self.root.cmp(&o.root))
    }
}

impl PartialOrd for AffineRoot {
    fn partial_cmp(&self, o: &AffineRoot) -> Option<std::cmp::Ordering> {
        Some(self.cmp(o))
    }
}

impl fmt::Display for AffineRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{:+}d", self.root, self.k)
    }
}

impl Serialize for AffineRoot {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("AffineRoot", 2)?;
        st.serialize_field("root", &self.root)?;
        st.serialize_field("k", &self.k)?;
        st.end()
    }
}

/// Element t_τ v of the extended affine Weyl group, acting by x ↦ v(x) + τ.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExtAffineElt {
    pub tau: Point,
    pub v: WeylElt,
}

impl ExtAffineElt {
    pub fn identity(rs: &RootSystem) -> ExtAffineElt {
        ExtAffineElt {
            tau: Point::zero(rs.rank()),
            v: WeylElt::identity_of(rs),
        }
    }

    pub fn new(tau: Point, v: WeylElt) -> ExtAffineElt {
        ExtAffineElt { tau, v }
    }

    pub fn translation(rs: &RootSystem, tau: Point) -> ExtAffineElt {
        ExtAffineElt::new(tau, WeylElt::identity_of(rs))
    }

    pub fn finite(rs: &RootSystem, v: WeylElt) -> ExtAffineElt {
        ExtAffineElt::new(Point::zero(rs.rank()), v)
    }

    /// Affine simple reflection: letter 0 is t_{θ∨} s_θ, letter i is s_i.
    pub fn simple(rs: &RootSystem, i: usize) -> ExtAffineElt {
        if i == 0 {
            let theta = rs.theta();
            ExtAffineElt::new(rs.coroot(&theta), WeylElt::reflection(rs, &theta))
        } else {
            ExtAffineElt::finite(rs, WeylElt::simple(rs, i - 1))
        }
    }

    pub fn from_affine_word(rs: &RootSystem, word: &[usize]) -> ExtAffineElt {
        word.iter().fold(ExtAffineElt::identity(rs), |acc, &i| {
            acc.compose(&ExtAffineElt::simple(rs, i))
        })
    }

    /// (t_τ v)(t_σ u) = t_{τ+v(σ)} vu.
    pub fn compose(&self, o: &ExtAffineElt) -> ExtAffineElt {
        ExtAffineElt::new(&self.tau + &self.v.apply(&o.tau), self.v.compose(&o.v))
    }

    pub fn inverse(&self) -> ExtAffineElt {
        ExtAffineElt::new(-self.v.apply_inv(&self.tau), self.v.inverse())
    }

    pub fn act(&self, x: &Point) -> Point {
        &self.v.apply(x) + &self.tau
    }

    /// w(α + kδ) = v(α) + (k - (v(α), τ))δ.
    pub fn act_affine(&self, rs: &RootSystem, a: &AffineRoot) -> AffineRoot {
        let va = self.v.apply_root(&a.root);
        let shift = rs.pair_root(&va, &self.tau);
        debug_assert!(shift.is_integer());
        AffineRoot::new(va, a.k - shift.to_integer())
    }

    /// Whether the element lies in the affine Weyl group W ⋉ Q∨.
    pub fn is_affine(&self, rs: &RootSystem) -> bool {
        rs.in_coroot_lattice(&self.tau)
    }

    /// N(w) = {a ∈ Δ̂+ : w⁻¹(a) < 0}, read off from an interior point of w(C_1).
    pub fn inversion_set(&self, rs: &RootSystem) -> Vec<AffineRoot> {
        inversion_set_of_alcove(rs, &self.act(&alcove_center(rs)))
    }

    pub fn length(&self, rs: &RootSystem) -> usize {
        self.inversion_set(rs).len()
    }

    /// Image of the closed fundamental alcove C̄_1, as a sorted vertex list.
    pub fn alcove_vertices(&self, rs: &RootSystem) -> Vec<Point> {
        let mut v: Vec<Point> = alcove_vertices(rs, 1).iter().map(|x| self.act(x)).collect();
        v.sort();
        v
    }

    /// Reduced affine word of an element of the affine Weyl group.
    pub fn affine_word(&self, rs: &RootSystem) -> Result<Vec<usize>> {
        if !self.is_affine(rs) {
            return Err(Error::NotAffine(self.tau.to_string()));
        }
        Ok(element_from_inversions(rs, &self.inversion_set(rs))?.1)
    }
}

impl fmt::Display for ExtAffineElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "t{} ({})", self.tau, self.v)
    }
}

impl Serialize for ExtAffineElt {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("ExtAffineElt", 2)?;
        st.serialize_field("tau", &self.tau)?;
        let word: Vec<usize> = self.v.reduced_word().iter().map(|i| i + 1).collect();
        st.serialize_field("v", &word)?;
        st.end()
    }
}

/// ρ∨/h, an interior point of the fundamental alcove C_1.
pub fn alcove_center(rs: &RootSystem) -> Point {
    rs.rho_vee().scale(Q::new(1, rs.coxeter_number()))
}

/// Vertices of C̄_r: the origin and r ω∨_i / m_i.
pub fn alcove_vertices(rs: &RootSystem, r: i64) -> Vec<Point> {
    let mut v = vec![Point::zero(rs.rank())];
    v.extend((0..rs.rank()).map(|i| rs.alcove_vertex(i).scale(q(r))));
    v
}

/// x ∈ C̄_r: (x, α_i) ≥ 0 and (x, θ) ≤ r.
pub fn in_closed_alcove(rs: &RootSystem, x: &Point, r: i64) -> bool {
    rs.is_dominant(x) && rs.pair_root(&rs.theta(), x) <= q(r)
}

/// Membership in W·C̄_k, tested by -k ≤ (x, β) ≤ k for every positive root.
pub fn in_w_orbit_of_alcove(rs: &RootSystem, x: &Point, k: i64) -> bool {
    let c = rs.coweight_coords(x);
    rs.positive_roots()
        .iter()
        .all(|r| RootSystem::pair_coords(r, &c).abs() <= q(k))
}

/// Whether w(C_1) ⊂ C_r, by checking the vertices of the closed alcove.
pub fn maps_alcove_into(rs: &RootSystem, w: &ExtAffineElt, r: i64) -> bool {
    alcove_vertices(rs, 1)
        .iter()
        .all(|x| in_closed_alcove(rs, &w.act(x), r))
}

/// Whether w(C_1) lies in the dominant chamber.
pub fn maps_alcove_dominant(rs: &RootSystem, w: &ExtAffineElt) -> bool {
    alcove_vertices(rs, 1)
        .iter()
        .all(|x| rs.is_dominant(&w.act(x)))
}

/// Positive affine roots that are negative at the interior point p.
pub fn inversion_set_of_alcove(rs: &RootSystem, p: &Point) -> Vec<AffineRoot> {
    let c = rs.coweight_coords(p);
    let mut out = Vec::new();
    for r in rs.positive_roots() {
        let val = RootSystem::pair_coords(r, &c);
        debug_assert!(!val.is_integer(), "point is on a wall");
        // α + kδ with 0 ≤ k < -(α, p)
        let mut k = 0;
        while q(k) < -val {
            out.push(AffineRoot::new(*r, k));
            k += 1;
        }
        // -α + kδ with 1 ≤ k < (α, p)
        let mut k = 1;
        while q(k) < val {
            out.push(AffineRoot::new(-*r, k));
            k += 1;
        }
    }
    out.sort();
    out
}

/// Rebuilds the element of the affine Weyl group with inversion set L by
/// peeling off affine simple roots, returning it with a reduced word.
pub fn element_from_inversions(
    rs: &RootSystem,
    set: &[AffineRoot],
) -> Result<(ExtAffineElt, Vec<usize>)> {
    let mut cur: HashSet<AffineRoot> = set.iter().copied().collect();
    if cur.len() != set.len() {
        return Err(Error::NotBiclosed("repeated affine root".into()));
    }
    let simples: Vec<AffineRoot> = (0..=rs.rank()).map(|i| AffineRoot::simple(rs, i)).collect();
    let mut word = Vec::new();
    while !cur.is_empty() {
        let i = (0..simples.len())
            .find(|&i| cur.contains(&simples[i]))
            .ok_or_else(|| Error::NotBiclosed("no affine simple root to remove".into()))?;
        let a = simples[i];
        cur.remove(&a);
        let mut next = HashSet::with_capacity(cur.len());
        for b in &cur {
            let c = AffineRoot::reflect(rs, &a, b);
            if !c.is_positive() {
                return Err(Error::NotBiclosed(format!("{b} reflects to a negative root")));
            }
            next.insert(c);
        }
        cur = next;
        word.push(i);
    }
    let w = ExtAffineElt::from_affine_word(rs, &word);
    let mut expect = set.to_vec();
    expect.sort();
    if w.inversion_set(rs) != expect {
        return Err(Error::NotBiclosed("peeled element has a different inversion set".into()));
    }
    Ok((w, word))
}

/// Lemma-style criterion: for w = t_τ v, the hyperplane (x, α) = 1 separates
/// C_1 from w(C_1) iff (α, τ) > 1, or (α, τ) = 1 and α ∉ N(v).
pub fn separates(rs: &RootSystem, alpha: &Root, w: &ExtAffineElt) -> bool {
    let t = rs.pair_root(alpha, &w.tau);
    if t > q(1) {
        return true;
    }
    if t == q(1) {
        let i = rs.index_of(alpha).expect("positive root");
        return !w.v.inversion_set(rs).contains(i);
    }
    false
}

/// Geometric version: compares the sides of an interior point and its image.
pub fn separates_geometric(rs: &RootSystem, alpha: &Root, w: &ExtAffineElt) -> bool {
    let c = alcove_center(rs);
    let before = rs.pair_root(alpha, &c) - q(1);
    let after = rs.pair_root(alpha, &w.act(&c)) - q(1);
    before.is_negative() != after.is_negative() && !after.is_zero()
}

/// The element t_{rω∨_j} w_0^j w_0 for a minuscule node j.
pub fn center_element(rs: &RootSystem, j: usize, r: i64) -> ExtAffineElt {
    let v = longest_complement(rs, j).compose(&longest(rs));
    ExtAffineElt::new(rs.fundamental_coweight(j).scale(q(r)), v)
}

/// Ω_r: the identity together with t_{rω∨_j} w_0^j w_0 for minuscule j.
pub fn omega_r(rs: &RootSystem, r: i64) -> Vec<(Option<usize>, ExtAffineElt)> {
    let mut out = vec![(None, ExtAffineElt::identity(rs))];
    out.extend(rs.minuscule().iter().map(|&j| (Some(j), center_element(rs, j, r))));
    out
}

/// Σ: the identity together with t_{-ω∨_j} w_0^j w_0 for minuscule j.
pub fn sigma(rs: &RootSystem) -> Vec<(Option<usize>, ExtAffineElt)> {
    let mut out = vec![(None, ExtAffineElt::identity(rs))];
    out.extend(rs.minuscule().iter().map(|&j| (Some(j), center_element(rs, j, -1))));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::Family;

    #[test]
    fn group_orders() {
        for (f, n, ord) in [
            (Family::A, 3, 24),
            (Family::B, 3, 48),
            (Family::G, 2, 12),
            (Family::F, 4, 1152),
            (Family::D, 4, 192),
        ] {
            let rs = RootSystem::new(f, n).unwrap();
            assert_eq!(weyl_group_elements(&rs).len(), ord);
        }
    }

    #[test]
    fn longest_inverts_everything() {
        let rs = RootSystem::new(Family::E, 6).unwrap();
        let w0 = longest(&rs);
        assert_eq!(w0.length(&rs), 36);
        assert_eq!(WeylElt::from_word(&rs, &w0.reduced_word()), w0);
    }

    #[test]
    fn simple_affine_reflection_fixes_wall() {
        let rs = RootSystem::new(Family::B, 3).unwrap();
        let s0 = ExtAffineElt::simple(&rs, 0);
        let a0 = AffineRoot::simple(&rs, 0);
        let img = s0.act_affine(&rs, &a0);
        assert_eq!(img, AffineRoot::new(rs.theta(), -1));
        assert_eq!(s0.inversion_set(&rs), vec![a0]);
        assert!(s0.compose(&s0) == ExtAffineElt::identity(&rs));
    }

    #[test]
    fn coset_index_of_parabolic() {
        let rs = RootSystem::new(Family::A, 3).unwrap();
        // subsystem spanned by α1
        let psi = RootSet::singleton(rs.simple_index(0));
        assert_eq!(coset_reps(&rs, psi).unwrap().1, 12);
        // {α1, α2} alone is not closed
        let bad: RootSet = [rs.simple_index(0), rs.simple_index(1)].into_iter().collect();
        assert!(coset_reps(&rs, bad).is_err());
    }

    #[test]
    fn omega_preserves_alcove() {
        let rs = RootSystem::new(Family::D, 5).unwrap();
        for r in 1..=3 {
            let verts = {
                let mut v = alcove_vertices(&rs, r);
                v.sort();
                v
            };
            for (_, w) in omega_r(&rs, r) {
                let mut img: Vec<Point> = alcove_vertices(&rs, r).iter().map(|x| w.act(x)).collect();
                img.sort();
                assert_eq!(img, verts);
            }
        }
    }
}
