//! Finite root systems of types A-G in Bourbaki labeling.
//!
//! Points of the Cartan subalgebra are stored in simple-root coordinates with
//! exact rational entries. The invariant form is normalized so that long roots
//! have squared length 2; with this normalization the highest root is its own
//! coroot and coweights embed in the same coordinate space as weights.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub};
use std::sync::Arc;

use num_rational::Rational64;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

pub type Q = Rational64;

pub const MAX_RANK: usize = 8;

pub fn q(n: i64) -> Q {
    Q::from_integer(n)
}

pub(crate) fn fmt_q(x: &Q) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn parse(s: &str) -> Result<Family> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(Family::A),
            "B" => Ok(Family::B),
            "C" => Ok(Family::C),
            "D" => Ok(Family::D),
            "E" => Ok(Family::E),
            "F" => Ok(Family::F),
            "G" => Ok(Family::G),
            other => Err(Error::Parse(format!("unknown family {other:?}"))),
        }
    }

    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    pub fn valid_rank(self, rank: usize) -> bool {
        match self {
            Family::A => (1..=MAX_RANK).contains(&rank),
            Family::B | Family::C => (2..=MAX_RANK).contains(&rank),
            Family::D => (4..=MAX_RANK).contains(&rank),
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        }
    }
}

/// Parses "E6", "b3" or a bare family letter combined with an explicit rank.
pub fn parse_type(s: &str, rank: Option<usize>) -> Result<(Family, usize)> {
    let s = s.trim();
    let mut chars = s.chars();
    let letter = chars
        .next()
        .ok_or_else(|| Error::Parse("empty type".into()))?;
    let family = Family::parse(&letter.to_string())?;
    let rest: String = chars.collect();
    let r = if rest.is_empty() {
        rank.ok_or_else(|| Error::Parse(format!("type {s:?} needs a rank")))?
    } else {
        let r: usize = rest
            .parse()
            .map_err(|_| Error::Parse(format!("bad rank in {s:?}")))?;
        if let Some(given) = rank {
            if given != r {
                return Err(Error::Parse(format!("type {s:?} conflicts with rank {given}")));
            }
        }
        r
    };
    Ok((family, r))
}

/// A root written in the basis of simple roots.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Root {
    c: [i8; MAX_RANK],
    n: u8,
}

impl Root {
    pub fn new(coeffs: &[i64]) -> Root {
        assert!(coeffs.len() <= MAX_RANK);
        let mut c = [0i8; MAX_RANK];
        for (dst, &src) in c.iter_mut().zip(coeffs) {
            *dst = i8::try_from(src).expect("root coefficient out of range");
        }
        Root {
            c,
            n: coeffs.len() as u8,
        }
    }

    pub fn simple(rank: usize, i: usize) -> Root {
        let mut c = [0i8; MAX_RANK];
        c[i] = 1;
        Root { c, n: rank as u8 }
    }

    pub fn rank(&self) -> usize {
        self.n as usize
    }

    pub fn coeffs(&self) -> &[i8] {
        &self.c[..self.n as usize]
    }

    pub fn coeff(&self, i: usize) -> i64 {
        self.c[i] as i64
    }

    pub fn height(&self) -> i64 {
        self.coeffs().iter().map(|&x| x as i64).sum()
    }

    pub fn is_positive(&self) -> bool {
        self.coeffs().iter().any(|&x| x > 0)
    }

    pub fn to_point(&self) -> Point {
        Point(self.coeffs().iter().map(|&x| q(x as i64)).collect())
    }

    pub fn from_point(p: &Point) -> Option<Root> {
        if p.0.len() > MAX_RANK || p.0.iter().any(|x| !x.is_integer() || x.abs() > q(127)) {
            return None;
        }
        let v: Vec<i64> = p.0.iter().map(|x| x.to_integer()).collect();
        Some(Root::new(&v))
    }
}

impl Neg for Root {
    type Output = Root;
    fn neg(mut self) -> Root {
        for x in self.c.iter_mut() {
            *x = -*x;
        }
        self
    }
}

impl Add for Root {
    type Output = Root;
    fn add(mut self, o: Root) -> Root {
        for (x, y) in self.c.iter_mut().zip(o.c) {
            *x += y;
        }
        self
    }
}

impl Sub for Root {
    type Output = Root;
    fn sub(self, o: Root) -> Root {
        self + (-o)
    }
}

impl Ord for Root {
    /// Height first, then descending coefficient vectors (so simple roots come
    /// out as α1, α2, ...).
    fn cmp(&self, o: &Root) -> std::cmp::Ordering {
        self.height()
            .cmp(&o.height())
            .then_with(|| o.coeffs().cmp(self.coeffs()))
    }
}

impl PartialOrd for Root {
    fn partial_cmp(&self, o: &Root) -> Option<std::cmp::Ordering> {
        Some(self.cmp(o))
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, x) in self.coeffs().iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "]")
    }
}

impl Serialize for Root {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let v: Vec<i64> = self.coeffs().iter().map(|&x| x as i64).collect();
        v.serialize(s)
    }
}

/// A point of the real span of the roots, in simple-root coordinates.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Point(pub Vec<Q>);

impl Point {
    pub fn zero(n: usize) -> Point {
        Point(vec![Q::zero(); n])
    }

    pub fn from_ints(v: &[i64]) -> Point {
        Point(v.iter().map(|&x| q(x)).collect())
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|x| x.is_zero())
    }

    pub fn scale(&self, s: Q) -> Point {
        Point(self.0.iter().map(|x| x * s).collect())
    }
}

impl Add for &Point {
    type Output = Point;
    fn add(self, o: &Point) -> Point {
        Point(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }
}

impl Add for Point {
    type Output = Point;
    fn add(self, o: Point) -> Point {
        &self + &o
    }
}

impl AddAssign<&Point> for Point {
    fn add_assign(&mut self, o: &Point) {
        for (a, b) in self.0.iter_mut().zip(&o.0) {
            *a += b;
        }
    }
}

impl Sub for &Point {
    type Output = Point;
    fn sub(self, o: &Point) -> Point {
        Point(self.0.iter().zip(&o.0).map(|(a, b)| a - b).collect())
    }
}

impl Sub for Point {
    type Output = Point;
    fn sub(self, o: Point) -> Point {
        &self - &o
    }
}

impl Neg for &Point {
    type Output = Point;
    fn neg(self) -> Point {
        Point(self.0.iter().map(|a| -a).collect())
    }
}

impl Neg for Point {
    type Output = Point;
    fn neg(self) -> Point {
        -&self
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", fmt_q(x))?;
        }
        write!(f, "]")
    }
}

impl Serialize for Point {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let v: Vec<String> = self.0.iter().map(fmt_q).collect();
        v.serialize(s)
    }
}

impl Serialize for RootSet {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.iter().collect::<Vec<_>>().serialize(s)
    }
}

/// Subset of the positive roots, indexed by canonical position.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, Debug, PartialOrd, Ord)]
pub struct RootSet(pub u128);

impl RootSet {
    pub const EMPTY: RootSet = RootSet(0);

    pub fn singleton(i: usize) -> RootSet {
        RootSet(1u128 << i)
    }

    pub fn contains(self, i: usize) -> bool {
        (self.0 >> i) & 1 == 1
    }

    pub fn insert(&mut self, i: usize) {
        self.0 |= 1u128 << i;
    }

    pub fn remove(&mut self, i: usize) {
        self.0 &= !(1u128 << i);
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, o: RootSet) -> RootSet {
        RootSet(self.0 | o.0)
    }

    pub fn intersection(self, o: RootSet) -> RootSet {
        RootSet(self.0 & o.0)
    }

    pub fn difference(self, o: RootSet) -> RootSet {
        RootSet(self.0 & !o.0)
    }

    pub fn is_subset(self, o: RootSet) -> bool {
        self.0 & !o.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let i = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(i)
            }
        })
    }
}

impl FromIterator<usize> for RootSet {
    fn from_iter<I: IntoIterator<Item = usize>>(it: I) -> RootSet {
        let mut s = RootSet::EMPTY;
        for i in it {
            s.insert(i);
        }
        s
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RootSystemSummary {
    #[serde(rename = "type")]
    pub cartan_type: String,
    pub rank: usize,
    pub marks: Vec<i64>,
    pub coxeter_number: i64,
    pub positive_roots: usize,
    pub minuscule: Vec<usize>,
    pub center_order: usize,
}

#[derive(Clone, Debug)]
pub struct RootSystem {
    family: Family,
    rank: usize,
    gram: Vec<Q>,
    gram_inv: Vec<Q>,
    cartan: Arc<[i32]>,
    positive: Vec<Root>,
    index: HashMap<Root, usize>,
    sums: Vec<i16>,
    up: Vec<RootSet>,
    highest: usize,
    marks: Vec<i64>,
    coxeter: i64,
    minuscule: Vec<usize>,
    fund_coweights: Vec<Point>,
    fund_weights: Vec<Point>,
    rho: Point,
    rho_vee: Point,
}

fn gram_matrix(family: Family, n: usize) -> Vec<Q> {
    let mut g = vec![Q::zero(); n * n];
    let mut set = |i: usize, j: usize, v: Q| {
        g[i * n + j] = v;
        g[j * n + i] = v;
    };
    let half = Q::new(1, 2);
    match family {
        Family::A => {
            for i in 0..n {
                set(i, i, q(2));
                if i + 1 < n {
                    set(i, i + 1, q(-1));
                }
            }
        }
        Family::B => {
            for i in 0..n {
                set(i, i, if i + 1 == n { q(1) } else { q(2) });
                if i + 1 < n {
                    set(i, i + 1, q(-1));
                }
            }
        }
        Family::C => {
            for i in 0..n {
                set(i, i, if i + 1 == n { q(2) } else { q(1) });
                if i + 2 < n {
                    set(i, i + 1, -half);
                } else if i + 1 < n {
                    set(i, i + 1, q(-1));
                }
            }
        }
        Family::D => {
            for i in 0..n {
                set(i, i, q(2));
            }
            for i in 0..n - 2 {
                set(i, i + 1, q(-1));
            }
            set(n - 3, n - 1, q(-1));
        }
        Family::E => {
            for i in 0..n {
                set(i, i, q(2));
            }
            set(0, 2, q(-1));
            set(1, 3, q(-1));
            for i in 2..n - 1 {
                set(i, i + 1, q(-1));
            }
        }
        Family::F => {
            set(0, 0, q(2));
            set(1, 1, q(2));
            set(2, 2, q(1));
            set(3, 3, q(1));
            set(0, 1, q(-1));
            set(1, 2, q(-1));
            set(2, 3, -half);
        }
        Family::G => {
            set(0, 0, Q::new(2, 3));
            set(1, 1, q(2));
            set(0, 1, q(-1));
        }
    }
    g
}

pub(crate) fn invert(m: &[Q], n: usize) -> Option<Vec<Q>> {
    let mut a = m.to_vec();
    let mut inv = vec![Q::zero(); n * n];
    for i in 0..n {
        inv[i * n + i] = Q::one();
    }
    for col in 0..n {
        let piv = (col..n).find(|&r| !a[r * n + col].is_zero())?;
        if piv != col {
            for k in 0..n {
                a.swap(piv * n + k, col * n + k);
                inv.swap(piv * n + k, col * n + k);
            }
        }
        let p = a[col * n + col];
        for k in 0..n {
            a[col * n + k] /= p;
            inv[col * n + k] /= p;
        }
        for r in 0..n {
            if r != col && !a[r * n + col].is_zero() {
                let f = a[r * n + col];
                for k in 0..n {
                    let (ac, ic) = (a[col * n + k], inv[col * n + k]);
                    a[r * n + k] -= f * ac;
                    inv[r * n + k] -= f * ic;
                }
            }
        }
    }
    Some(inv)
}

impl RootSystem {
    pub fn new(family: Family, rank: usize) -> Result<RootSystem> {
        if !family.valid_rank(rank) {
            return Err(Error::InvalidType {
                family: family.letter().to_string(),
                rank,
            });
        }
        let n = rank;
        let gram = gram_matrix(family, n);
        let gram_inv = invert(&gram, n).expect("Gram matrix is nondegenerate");
        let mut cartan_v = vec![0i32; n * n];
        for i in 0..n {
            for j in 0..n {
                let v = q(2) * gram[i * n + j] / gram[j * n + j];
                assert!(v.is_integer());
                cartan_v[i * n + j] = v.to_integer() as i32;
            }
        }
        let cartan: Arc<[i32]> = cartan_v.into();

        // Positive roots by height, via root strings.
        let simple: Vec<Root> = (0..n).map(|i| Root::simple(n, i)).collect();
        let mut known: HashSet<Root> = simple.iter().copied().collect();
        let mut all = simple.clone();
        let mut level = simple.clone();
        while !level.is_empty() {
            let mut next: Vec<Root> = Vec::new();
            for &beta in &level {
                for i in 0..n {
                    let ai = simple[i];
                    if beta == ai {
                        continue;
                    }
                    let mut p = 0;
                    let mut cur = beta - ai;
                    while known.contains(&cur) {
                        p += 1;
                        cur = cur - ai;
                    }
                    let pair: i64 = (0..n).map(|j| beta.coeff(j) * cartan[j * n + i] as i64).sum();
                    let qq = p - pair;
                    if qq > 0 {
                        let r = beta + ai;
                        if known.insert(r) {
                            next.push(r);
                        }
                    }
                }
            }
            all.extend(next.iter().copied());
            level = next;
        }
        all.sort();
        let index: HashMap<Root, usize> = all.iter().enumerate().map(|(i, r)| (*r, i)).collect();
        let np = all.len();
        let mut sums = vec![-1i16; np * np];
        for i in 0..np {
            for j in 0..np {
                if let Some(&k) = index.get(&(all[i] + all[j])) {
                    sums[i * np + j] = k as i16;
                }
            }
        }
        let up: Vec<RootSet> = (0..np)
            .map(|i| {
                (0..np)
                    .filter(|&j| all[j].coeffs().iter().zip(all[i].coeffs()).all(|(b, a)| b >= a))
                    .collect()
            })
            .collect();
        let highest = np - 1;
        let marks: Vec<i64> = all[highest].coeffs().iter().map(|&x| x as i64).collect();
        let coxeter = 1 + marks.iter().sum::<i64>();
        let minuscule: Vec<usize> = (0..n).filter(|&i| marks[i] == 1).collect();

        let fund_coweights: Vec<Point> = (0..n)
            .map(|i| Point((0..n).map(|k| gram_inv[k * n + i]).collect()))
            .collect();
        let fund_weights: Vec<Point> = (0..n)
            .map(|i| fund_coweights[i].scale(gram[i * n + i] / q(2)))
            .collect();
        let mut rho = Point::zero(n);
        let mut rho_vee = Point::zero(n);
        for i in 0..n {
            rho += &fund_weights[i];
            rho_vee += &fund_coweights[i];
        }
        let rs = RootSystem {
            family,
            rank,
            gram,
            gram_inv,
            cartan,
            positive: all,
            index,
            sums,
            up,
            highest,
            marks,
            coxeter,
            minuscule,
            fund_coweights,
            fund_weights,
            rho,
            rho_vee,
        };
        debug_assert_eq!(rs.norm2(&rs.theta()), q(2));
        debug_assert_eq!(rs.positive.len() as i64 * 2, rs.coxeter * n as i64);
        Ok(rs)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn label(&self) -> String {
        format!("{}{}", self.family.letter(), self.rank)
    }

    pub fn summary(&self) -> RootSystemSummary {
        RootSystemSummary {
            cartan_type: self.label(),
            rank: self.rank,
            marks: self.marks.clone(),
            coxeter_number: self.coxeter,
            positive_roots: self.positive.len(),
            minuscule: self.minuscule.iter().map(|i| i + 1).collect(),
            center_order: self.center_order(),
        }
    }

    /// Cartan integer ⟨α_i, α_j∨⟩.
    pub fn cartan(&self, i: usize, j: usize) -> i64 {
        self.cartan[i * self.rank + j] as i64
    }

    pub(crate) fn cartan_matrix(&self) -> Arc<[i32]> {
        self.cartan.clone()
    }

    pub fn gram(&self, i: usize, j: usize) -> Q {
        self.gram[i * self.rank + j]
    }

    pub fn gram_inverse(&self, i: usize, j: usize) -> Q {
        self.gram_inv[i * self.rank + j]
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive
    }

    pub fn num_positive(&self) -> usize {
        self.positive.len()
    }

    pub fn root(&self, i: usize) -> Root {
        self.positive[i]
    }

    pub fn all_positive(&self) -> RootSet {
        RootSet(if self.positive.len() == 128 {
            u128::MAX
        } else {
            (1u128 << self.positive.len()) - 1
        })
    }

    pub fn simple_root(&self, i: usize) -> Root {
        Root::simple(self.rank, i)
    }

    pub fn simple_index(&self, i: usize) -> usize {
        self.index[&self.simple_root(i)]
    }

    pub fn theta(&self) -> Root {
        self.positive[self.highest]
    }

    pub fn theta_index(&self) -> usize {
        self.highest
    }

    pub fn marks(&self) -> &[i64] {
        &self.marks
    }

    pub fn coxeter_number(&self) -> i64 {
        self.coxeter
    }

    /// Minuscule nodes (marks equal to 1), 0-based.
    pub fn minuscule(&self) -> &[usize] {
        &self.minuscule
    }

    /// Order of P∨/Q∨, one more than the number of minuscule nodes.
    pub fn center_order(&self) -> usize {
        self.minuscule.len() + 1
    }

    /// |W| = n! · |P∨/Q∨| · Π m_i.
    pub fn weyl_order(&self) -> usize {
        let fact: usize = (1..=self.rank()).product();
        fact * self.center_order() * self.marks.iter().product::<i64>() as usize
    }

    pub fn fundamental_coweight(&self, i: usize) -> &Point {
        &self.fund_coweights[i]
    }

    pub fn fundamental_weight(&self, i: usize) -> &Point {
        &self.fund_weights[i]
    }

    pub fn rho(&self) -> &Point {
        &self.rho
    }

    pub fn rho_vee(&self) -> &Point {
        &self.rho_vee
    }

    /// Vertex ω∨_i / m_i of the fundamental alcove.
    pub fn alcove_vertex(&self, i: usize) -> Point {
        self.fund_coweights[i].scale(Q::new(1, self.marks[i]))
    }

    pub fn index_of(&self, r: &Root) -> Option<usize> {
        self.index.get(r).copied()
    }

    pub fn is_root(&self, r: &Root) -> bool {
        self.index.contains_key(r) || self.index.contains_key(&-*r)
    }

    /// Index of α_i + α_j when it is a positive root.
    pub fn sum_index(&self, i: usize, j: usize) -> Option<usize> {
        let k = self.sums[i * self.positive.len() + j];
        (k >= 0).then_some(k as usize)
    }

    pub fn pairing(&self, x: &Point, y: &Point) -> Q {
        let n = self.rank;
        let mut s = Q::zero();
        for i in 0..n {
            if x.0[i].is_zero() {
                continue;
            }
            let mut t = Q::zero();
            for j in 0..n {
                t += self.gram[i * n + j] * y.0[j];
            }
            s += x.0[i] * t;
        }
        s
    }

    pub fn norm2(&self, r: &Root) -> Q {
        let p = r.to_point();
        self.pairing(&p, &p)
    }

    /// (x, α_i) for each simple root: coordinates of x in the basis of
    /// fundamental coweights.
    pub fn coweight_coords(&self, x: &Point) -> Vec<Q> {
        let n = self.rank;
        (0..n)
            .map(|i| (0..n).map(|j| self.gram[i * n + j] * x.0[j]).sum())
            .collect()
    }

    pub fn from_coweight_coords(&self, c: &[i64]) -> Point {
        let n = self.rank;
        let mut p = Point::zero(n);
        for (i, &ci) in c.iter().enumerate() {
            if ci != 0 {
                p += &self.fund_coweights[i].scale(q(ci));
            }
        }
        p
    }

    /// (x, β) for a root β, given the coweight coordinates of x.
    pub fn pair_coords(r: &Root, coords: &[Q]) -> Q {
        r.coeffs()
            .iter()
            .zip(coords)
            .map(|(&a, c)| c * q(a as i64))
            .sum()
    }

    pub fn pair_root(&self, r: &Root, x: &Point) -> Q {
        self.pairing(&r.to_point(), x)
    }

    /// ⟨x, β∨⟩ = 2(x, β)/(β, β).
    pub fn pair_coroot(&self, x: &Point, r: &Root) -> Q {
        q(2) * self.pair_root(r, x) / self.norm2(r)
    }

    pub fn coroot(&self, r: &Root) -> Point {
        r.to_point().scale(q(2) / self.norm2(r))
    }

    pub fn reflect(&self, r: &Root, x: &Point) -> Point {
        x - &r.to_point().scale(self.pair_coroot(x, r))
    }

    pub fn reflect_root(&self, r: &Root, x: &Root) -> Root {
        let c = self.pair_coroot(&x.to_point(), r).to_integer();
        let mut out = *x;
        for _ in 0..c.abs() {
            out = if c > 0 { out - *r } else { out + *r };
        }
        out
    }

    pub fn in_coweight_lattice(&self, x: &Point) -> bool {
        self.coweight_coords(x).iter().all(|c| c.is_integer())
    }

    pub fn in_coroot_lattice(&self, x: &Point) -> bool {
        (0..self.rank).all(|i| (x.0[i] * self.gram(i, i) / q(2)).is_integer())
    }

    pub fn in_weight_lattice(&self, x: &Point) -> bool {
        (0..self.rank).all(|i| self.pair_coroot(x, &self.simple_root(i)).is_integer())
    }

    pub fn is_dominant(&self, x: &Point) -> bool {
        self.coweight_coords(x).iter().all(|c| !c.is_negative())
    }

    /// The minuscule index j (or None for the trivial class) with x - ω∨_j ∈ Q∨.
    pub fn center_class(&self, x: &Point) -> Option<Option<usize>> {
        if self.in_coroot_lattice(x) {
            return Some(None);
        }
        self.minuscule
            .iter()
            .find(|&&j| self.in_coroot_lattice(&(x - &self.fund_coweights[j])))
            .map(|&j| Some(j))
    }

    /// The dual order ideal {β ∈ Δ+ : β ≥ α}.
    pub fn dual_order_ideal(&self, alpha: &Root) -> Result<RootSet> {
        let i = self
            .index_of(alpha)
            .ok_or_else(|| Error::NotARoot(alpha.to_string()))?;
        Ok(self.up[i])
    }

    pub(crate) fn up_set(&self, i: usize) -> RootSet {
        self.up[i]
    }

    /// Positive roots β_1, …, β_k with α + β_1 + … + β_i a root for every i and
    /// total sum β. Steps are simple roots whenever such a chain exists.
    pub fn chain_between(&self, alpha: &Root, beta: &Root) -> Result<Vec<Root>> {
        let a = self
            .index_of(alpha)
            .ok_or_else(|| Error::NotARoot(alpha.to_string()))?;
        let b = self
            .index_of(beta)
            .ok_or_else(|| Error::NotARoot(beta.to_string()))?;
        if !self.up[a].contains(b) {
            return Err(Error::NotBelow(alpha.to_string(), beta.to_string()));
        }
        let simple: Vec<usize> = (0..self.rank).map(|i| self.simple_index(i)).collect();
        let all: Vec<usize> = (0..self.positive.len()).collect();
        for steps in [&simple, &all] {
            if let Some(path) = self.bfs_chain(a, b, steps) {
                return Ok(path);
            }
        }
        Err(Error::Inconsistent(format!(
            "no chain from {alpha} to {beta}"
        )))
    }

    fn bfs_chain(&self, a: usize, b: usize, steps: &[usize]) -> Option<Vec<Root>> {
        let np = self.positive.len();
        let mut prev: Vec<Option<(usize, usize)>> = vec![None; np];
        let mut seen = RootSet::singleton(a);
        let mut queue = VecDeque::from([a]);
        while let Some(cur) = queue.pop_front() {
            if cur == b {
                let mut path = Vec::new();
                let mut c = cur;
                while let Some((p, s)) = prev[c] {
                    path.push(self.positive[s]);
                    c = p;
                }
                path.reverse();
                return Some(path);
            }
            for &s in steps {
                if let Some(nx) = self.sum_index(cur, s) {
                    if self.up[nx].contains(b) && !seen.contains(nx) {
                        seen.insert(nx);
                        prev[nx] = Some((cur, s));
                        queue.push_back(nx);
                    }
                }
            }
        }
        None
    }

    /// Roots of a root set as a sorted list of coefficient vectors.
    pub fn roots_of(&self, s: RootSet) -> Vec<Root> {
        s.iter().map(|i| self.positive[i]).collect()
    }

    pub fn root_set_of(&self, roots: &[Root]) -> Result<RootSet> {
        roots
            .iter()
            .map(|r| self.index_of(r).ok_or_else(|| Error::NotARoot(r.to_string())))
            .collect()
    }

    /// Level sets {α ∈ Δ+ : (α, x) = k}.
    pub fn level_set(&self, x: &Point, k: i64) -> RootSet {
        let c = self.coweight_coords(x);
        (0..self.positive.len())
            .filter(|&i| Self::pair_coords(&self.positive[i], &c) == q(k))
            .collect()
    }

    /// Formats a coweight given by its coordinates as "w1+w6", "2w3" or "0".
    pub fn format_coweight(coords: &[i64]) -> String {
        let mut parts = Vec::new();
        for (i, &c) in coords.iter().enumerate() {
            match c {
                0 => {}
                1 => parts.push(format!("w{}", i + 1)),
                -1 => parts.push(format!("-w{}", i + 1)),
                c => parts.push(format!("{c}w{}", i + 1)),
            }
        }
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join("+").replace("+-", "-")
        }
    }

    /// Parses "w1+w6", "2w3", "-w2" or "0" into coweight coordinates.
    pub fn parse_coweight(&self, s: &str) -> Result<Vec<i64>> {
        let mut coords = vec![0i64; self.rank];
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if s == "0" {
            return Ok(coords);
        }
        let mut terms: Vec<String> = Vec::new();
        let mut cur = String::new();
        for ch in s.chars() {
            if (ch == '+' || ch == '-') && !cur.is_empty() {
                terms.push(std::mem::take(&mut cur));
            }
            cur.push(ch);
        }
        if !cur.is_empty() {
            terms.push(cur);
        }
        for t in terms {
            let (sign, body) = match t.strip_prefix('-') {
                Some(b) => (-1, b.to_string()),
                None => (1, t.trim_start_matches('+').to_string()),
            };
            let pos = body
                .find(['w', 'W'])
                .ok_or_else(|| Error::Parse(format!("bad coweight term {t:?}")))?;
            let coef: i64 = if pos == 0 {
                1
            } else {
                body[..pos]
                    .trim_end_matches('*')
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad coefficient in {t:?}")))?
            };
            let idx: usize = body[pos + 1..]
                .parse()
                .map_err(|_| Error::Parse(format!("bad index in {t:?}")))?;
            if idx == 0 || idx > self.rank {
                return Err(Error::Parse(format!("index {idx} out of range")));
            }
            coords[idx - 1] += sign * coef;
        }
        Ok(coords)
    }
}

pub fn build_root_system(family: Family, rank: usize) -> Result<RootSystem> {
    RootSystem::new(family, rank)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_counts() {
        let cases = [
            (Family::A, 2, 3, 3),
            (Family::B, 3, 9, 6),
            (Family::C, 3, 9, 6),
            (Family::D, 4, 12, 6),
            (Family::E, 6, 36, 12),
            (Family::E, 7, 63, 18),
            (Family::E, 8, 120, 30),
            (Family::F, 4, 24, 12),
            (Family::G, 2, 6, 6),
        ];
        for (f, n, np, h) in cases {
            let rs = RootSystem::new(f, n).unwrap();
            assert_eq!(rs.num_positive(), np, "{f:?}{n}");
            assert_eq!(rs.coxeter_number(), h, "{f:?}{n}");
        }
    }

    #[test]
    fn marks_and_minuscule() {
        let g2 = RootSystem::new(Family::G, 2).unwrap();
        assert_eq!(g2.marks(), &[3, 2]);
        assert!(g2.minuscule().is_empty());
        let e6 = RootSystem::new(Family::E, 6).unwrap();
        assert_eq!(e6.minuscule(), &[0, 5]);
        let b3 = RootSystem::new(Family::B, 3).unwrap();
        assert_eq!(b3.marks(), &[1, 2, 2]);
        let c3 = RootSystem::new(Family::C, 3).unwrap();
        assert_eq!(c3.marks(), &[2, 2, 1]);
    }

    #[test]
    fn invalid_types() {
        assert!(RootSystem::new(Family::G, 3).is_err());
        assert!(RootSystem::new(Family::E, 5).is_err());
        assert!(RootSystem::new(Family::D, 3).is_err());
    }

    #[test]
    fn coweights_are_dual() {
        let rs = RootSystem::new(Family::F, 4).unwrap();
        for i in 0..4 {
            let c = rs.coweight_coords(rs.fundamental_coweight(i));
            for (j, cj) in c.iter().enumerate() {
                assert_eq!(*cj, if i == j { q(1) } else { q(0) });
            }
        }
    }

    #[test]
    fn chains() {
        let a2 = RootSystem::new(Family::A, 2).unwrap();
        let c = a2.chain_between(&Root::new(&[1, 0]), &Root::new(&[1, 1])).unwrap();
        assert_eq!(c, vec![Root::new(&[0, 1])]);
        assert!(a2.chain_between(&Root::new(&[1, 0]), &Root::new(&[1, 0])).unwrap().is_empty());
        assert!(a2.chain_between(&Root::new(&[1, 0]), &Root::new(&[0, 1])).is_err());
        let b2 = RootSystem::new(Family::B, 2).unwrap();
        let c = b2.chain_between(&Root::new(&[0, 1]), &Root::new(&[1, 2])).unwrap();
        assert_eq!(c.len(), 2);
        assert_eq!(Root::new(&[0, 1]) + c[0], Root::new(&[1, 1]));
    }

    #[test]
    fn coweight_syntax() {
        let rs = RootSystem::new(Family::E, 6).unwrap();
        assert_eq!(rs.parse_coweight("w1+w6").unwrap(), vec![1, 0, 0, 0, 0, 1]);
        assert_eq!(rs.parse_coweight("2w3").unwrap(), vec![0, 0, 2, 0, 0, 0]);
        assert_eq!(rs.parse_coweight("0").unwrap(), vec![0; 6]);
        assert_eq!(rs.parse_coweight("-w2").unwrap(), vec![0, -1, 0, 0, 0, 0]);
        assert!(rs.parse_coweight("w9").is_err());
        assert_eq!(RootSystem::format_coweight(&[1, 0, 0, 0, 0, 1]), "w1+w6");
        assert_eq!(RootSystem::format_coweight(&[0, -2, 1]), "-2w2+w3");
    }
}
