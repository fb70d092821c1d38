//! Catalog of simple Lie algebras: Cartan data, reflections, dominance,
//! congruence classes and the fundamental region.
//!
//! Weights are integer vectors in the basis of fundamental weights. Points
//! of the torus are real vectors in the basis of simple coroots, so that the
//! pairing of a weight with a point is the plain dot product.
//!
//! Labeling of simple roots follows Bourbaki except for G2, where the first
//! simple root is the long one (the fundamental weight `ω_1` is then the
//! highest root and spans the 14-dimensional representation).

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::linalg;
use crate::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Series {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Series {
    pub fn letter(self) -> char {
        match self {
            Series::A => 'A',
            Series::B => 'B',
            Series::C => 'C',
            Series::D => 'D',
            Series::E => 'E',
            Series::F => 'F',
            Series::G => 'G',
        }
    }
}

/// A simple Lie algebra identified by its series and rank.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AlgebraId {
    pub series: Series,
    pub rank: usize,
}

impl AlgebraId {
    pub fn new(series: Series, rank: usize) -> Result<Self> {
        let ok = match series {
            Series::A => rank >= 1,
            Series::B => rank >= 2,
            Series::C => rank >= 2,
            Series::D => rank >= 4,
            Series::E => (6..=8).contains(&rank),
            Series::F => rank == 4,
            Series::G => rank == 2,
        };
        if ok {
            Ok(AlgebraId { series, rank })
        } else {
            Err(Error::UnsupportedAlgebra {
                series: series.letter(),
                rank,
            })
        }
    }
}

impl fmt::Display for AlgebraId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.series.letter(), self.rank)
    }
}

impl FromStr for AlgebraId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let series = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Series::A,
            Some('B') => Series::B,
            Some('C') => Series::C,
            Some('D') => Series::D,
            Some('E') => Series::E,
            Some('F') => Series::F,
            Some('G') => Series::G,
            _ => return Err(Error::ParseAlgebra(s.to_string())),
        };
        let rank: usize = chars.as_str().parse().map_err(|_| Error::ParseAlgebra(s.to_string()))?;
        AlgebraId::new(series, rank)
    }
}

impl Serialize for AlgebraId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for AlgebraId {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Integer weight in the basis of fundamental weights.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight(pub Vec<i32>);

impl Weight {
    pub fn new(coords: Vec<i32>) -> Self {
        Weight(coords)
    }

    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    /// The fundamental weight `ω_{j+1}` (zero-based index `j`).
    pub fn fundamental(rank: usize, j: usize) -> Self {
        let mut w = vec![0; rank];
        w[j] = 1;
        Weight(w)
    }

    /// `ρ = (1, 1, …, 1)`.
    pub fn rho(rank: usize) -> Self {
        Weight(vec![1; rank])
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[i32] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    pub fn is_strictly_dominant(&self) -> bool {
        self.0.iter().all(|&c| c > 0)
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn neg(&self) -> Weight {
        Weight(self.0.iter().map(|a| -a).collect())
    }

    pub fn scale(&self, k: i32) -> Weight {
        Weight(self.0.iter().map(|a| a * k).collect())
    }

    /// Plain dot product with a point given in the simple-coroot basis.
    pub fn pair<F: num_traits::Float>(&self, x: &[F]) -> F {
        self.0
            .iter()
            .zip(x)
            .fold(F::zero(), |acc, (&m, &xi)| acc + F::from(m).unwrap() * xi)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl FromStr for Weight {
    type Err = Error;

    /// Accepts `1,0,2` or `(1,0,2)`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().trim_start_matches('(').trim_end_matches(')');
        if t.is_empty() {
            return Err(Error::ParseWeight(s.to_string()));
        }
        t.split(',')
            .map(|p| p.trim().parse::<i32>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map(Weight)
            .map_err(|_| Error::ParseWeight(s.to_string()))
    }
}

impl From<Vec<i32>> for Weight {
    fn from(v: Vec<i32>) -> Self {
        Weight(v)
    }
}

impl<const N: usize> From<[i32; N]> for Weight {
    fn from(v: [i32; N]) -> Self {
        Weight(v.to_vec())
    }
}

/// Result of reducing a weight to the dominant chamber.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DominantForm {
    pub weight: Weight,
    /// Number of elementary reflections used, modulo 2.
    pub parity: u8,
    /// The dominant representative has a zero coordinate, so the parity is
    /// not an invariant of the weight.
    pub on_wall: bool,
}

/// Congruence class of a weight: its coset in P/Q, written through one or
/// two linear forms taken modulo the given orders.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Congruence {
    pub values: Vec<u32>,
    pub moduli: Vec<u32>,
}

impl Congruence {
    pub fn add(&self, other: &Congruence) -> Congruence {
        Congruence {
            values: self
                .values
                .iter()
                .zip(&other.values)
                .zip(&self.moduli)
                .map(|((a, b), m)| (a + b) % m)
                .collect(),
            moduli: self.moduli.clone(),
        }
    }

    /// The class as a single number when the center is cyclic.
    pub fn value(&self) -> Option<u32> {
        match self.values.as_slice() {
            [v] => Some(*v),
            _ => None,
        }
    }
}

impl fmt::Display for Congruence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.values.as_slice() {
            [v] => write!(f, "{v}"),
            vs => {
                let parts: Vec<String> = vs.iter().map(|v| v.to_string()).collect();
                write!(f, "({})", parts.join(","))
            }
        }
    }
}

/// The simplex `{x : ⟨α_j, x⟩ ≥ 0, ⟨ξ, x⟩ ≤ 1}` in simple-coroot coordinates.
#[derive(Debug, Clone, PartialEq)]
pub struct FundamentalRegion {
    /// Origin first, then the vertex opposite each wall `⟨α_j, x⟩ = 0`.
    pub vertices: Vec<Vec<Rational>>,
    pub volume: Rational,
    cartan: Vec<Vec<i32>>,
    highest_root: Vec<i32>,
}

impl FundamentalRegion {
    pub fn contains(&self, x: &[f64]) -> bool {
        const EPS: f64 = 1e-12;
        let walls = self
            .cartan
            .iter()
            .all(|row| row.iter().zip(x).map(|(&m, &xi)| m as f64 * xi).sum::<f64>() >= -EPS);
        let top: f64 = self.highest_root.iter().zip(x).map(|(&m, &xi)| m as f64 * xi).sum();
        walls && top <= 1.0 + EPS
    }

    pub fn volume_f64(&self) -> f64 {
        self.volume.to_f64().unwrap()
    }

    pub fn vertices_f64(&self) -> Vec<Vec<f64>> {
        self.vertices
            .iter()
            .map(|v| v.iter().map(|c| c.to_f64().unwrap()).collect())
            .collect()
    }
}

/// Exact root-system data of a simple Lie algebra. Immutable after
/// construction.
#[derive(Debug, Clone)]
pub struct RootSystem {
    algebra: AlgebraId,
    cartan: Vec<Vec<i32>>,
    inverse_cartan: Vec<Vec<Rational>>,
    /// `|α_j|² / 2`, with short roots of squared length 2.
    half_lengths: Vec<Rational>,
    gram_omega: Vec<Vec<Rational>>,
    positive_roots: Vec<Weight>,
    highest_root: Weight,
    marks: Vec<i32>,
    comarks: Vec<i32>,
    weyl_order: u64,
}

fn cartan_matrix(id: AlgebraId) -> Vec<Vec<i32>> {
    let n = id.rank;
    let mut m = vec![vec![0i32; n]; n];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut link = |i: usize, j: usize| {
        m[i][j] = -1;
        m[j][i] = -1;
    };
    match id.series {
        Series::A => (0..n - 1).for_each(|i| link(i, i + 1)),
        Series::B | Series::C => (0..n - 1).for_each(|i| link(i, i + 1)),
        Series::D => {
            (0..n - 2).for_each(|i| link(i, i + 1));
            link(n - 3, n - 1);
        }
        Series::E => {
            link(0, 2);
            link(1, 3);
            (2..n - 1).for_each(|i| link(i, i + 1));
        }
        Series::F => (0..3).for_each(|i| link(i, i + 1)),
        Series::G => link(0, 1),
    }
    match id.series {
        Series::B => m[n - 2][n - 1] = -2,
        Series::C => m[n - 1][n - 2] = -2,
        Series::F => m[1][2] = -2,
        Series::G => m[0][1] = -3,
        _ => {}
    }
    m
}

fn factorial(n: u64) -> u64 {
    (1..=n).product::<u64>().max(1)
}

/// Order of the Weyl group generated by the simple reflections in `nodes`.
pub(crate) fn parabolic_order(cartan: &[Vec<i32>], nodes: &[usize]) -> u64 {
    let mut seen = vec![false; nodes.len()];
    let mut order = 1u64;
    for start in 0..nodes.len() {
        if seen[start] {
            continue;
        }
        let mut comp = vec![start];
        seen[start] = true;
        let mut k = 0;
        while k < comp.len() {
            let a = nodes[comp[k]];
            for (b_idx, &b) in nodes.iter().enumerate() {
                if !seen[b_idx] && cartan[a][b] != 0 {
                    seen[b_idx] = true;
                    comp.push(b_idx);
                }
            }
            k += 1;
        }
        let comp: Vec<usize> = comp.into_iter().map(|i| nodes[i]).collect();
        order *= component_order(cartan, &comp);
    }
    order
}

fn component_order(cartan: &[Vec<i32>], comp: &[usize]) -> u64 {
    let n = comp.len() as u64;
    if n == 1 {
        return 2;
    }
    let neighbours = |a: usize| comp.iter().filter(|&&b| b != a && cartan[a][b] != 0).count();
    let mut multiple_bond = None;
    for &a in comp {
        for &b in comp {
            if a != b && cartan[a][b] < -1 {
                multiple_bond = Some((a, b, -cartan[a][b]));
            }
        }
    }
    match multiple_bond {
        Some((_, _, 3)) => 12,
        Some((a, b, _)) => {
            if n == 4 && neighbours(a) == 2 && neighbours(b) == 2 {
                1152
            } else {
                (1u64 << n) * factorial(n)
            }
        }
        None => {
            let Some(&centre) = comp.iter().find(|&&a| neighbours(a) == 3) else {
                return factorial(n + 1);
            };
            let mut arms: Vec<usize> = comp
                .iter()
                .filter(|&&b| b != centre && cartan[centre][b] != 0)
                .map(|&b| {
                    let (mut prev, mut cur, mut len) = (centre, b, 1);
                    loop {
                        let next = comp.iter().find(|&&c| c != prev && c != cur && cartan[cur][c] != 0);
                        match next {
                            Some(&c) => {
                                prev = cur;
                                cur = c;
                                len += 1;
                            }
                            None => break len,
                        }
                    }
                })
                .collect();
            arms.sort_unstable();
            match arms.as_slice() {
                [1, 1, _] => (1u64 << (n - 1)) * factorial(n),
                [1, 2, 2] => 51_840,
                [1, 2, 3] => 2_903_040,
                [1, 2, 4] => 696_729_600,
                _ => unreachable!("not a finite-type Dynkin diagram"),
            }
        }
    }
}

impl RootSystem {
    pub fn new(algebra: AlgebraId) -> Result<Self> {
        let algebra = AlgebraId::new(algebra.series, algebra.rank)?;
        let cartan = cartan_matrix(algebra);
        let n = algebra.rank;
        let inverse_cartan = linalg::inverse(&linalg::to_rational(&cartan)).expect("Cartan matrices are invertible");

        // M_ij d_j = ⟨α_i, α_j⟩ is symmetric; propagate along the diagram.
        let mut d: Vec<Option<Rational>> = vec![None; n];
        d[0] = Some(Rational::one());
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for j in 0..n {
                if i != j && cartan[i][j] != 0 && d[j].is_none() {
                    let di = d[i].unwrap();
                    d[j] = Some(di * Rational::new(cartan[j][i] as i64, cartan[i][j] as i64));
                    queue.push_back(j);
                }
            }
        }
        let d: Vec<Rational> = d.into_iter().map(Option::unwrap).collect();
        let shortest = *d.iter().min().unwrap();
        let half_lengths: Vec<Rational> = d.iter().map(|x| x / shortest).collect();

        let gram_omega: Vec<Vec<Rational>> = (0..n)
            .map(|i| (0..n).map(|j| inverse_cartan[i][j] * half_lengths[j]).collect())
            .collect();

        let mut rs = RootSystem {
            algebra,
            cartan,
            inverse_cartan,
            half_lengths,
            gram_omega,
            positive_roots: Vec::new(),
            highest_root: Weight::zero(n),
            marks: Vec::new(),
            comarks: Vec::new(),
            weyl_order: 0,
        };

        let mut roots: HashSet<Weight> = HashSet::new();
        let mut frontier: Vec<Weight> = (0..n).map(|i| rs.simple_root(i)).collect();
        roots.extend(frontier.iter().cloned());
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for r in &frontier {
                for i in 0..n {
                    let s = rs.reflect_unchecked(i, r);
                    if roots.insert(s.clone()) {
                        next.push(s);
                    }
                }
            }
            frontier = next;
        }
        let mut positive: Vec<Weight> = roots
            .into_iter()
            .filter(|r| rs.alpha_coords(r).iter().all(|c| !c.is_negative()))
            .collect();
        positive.sort_by_key(|a| rs.order_key(a));
        rs.highest_root = positive.last().unwrap().clone();
        rs.positive_roots = positive;

        rs.marks = rs
            .alpha_coords(&rs.highest_root)
            .iter()
            .map(|c| c.to_integer() as i32)
            .collect();
        let xi_half = rs.inner(&rs.highest_root, &rs.highest_root) / Rational::from_integer(2);
        rs.comarks = rs
            .marks
            .iter()
            .zip(&rs.half_lengths)
            .map(|(&m, d)| {
                let q = Rational::from_integer(m as i64) * d / xi_half;
                debug_assert!(q.is_integer());
                q.to_integer() as i32
            })
            .collect();
        let all: Vec<usize> = (0..n).collect();
        rs.weyl_order = parabolic_order(&rs.cartan, &all);
        Ok(rs)
    }

    pub fn from_name(name: &str) -> Result<Self> {
        RootSystem::new(name.parse()?)
    }

    pub fn algebra(&self) -> AlgebraId {
        self.algebra
    }

    pub fn rank(&self) -> usize {
        self.algebra.rank
    }

    /// Row `i` is the simple root `α_{i+1}` in the ω-basis.
    pub fn cartan(&self) -> &[Vec<i32>] {
        &self.cartan
    }

    pub fn inverse_cartan(&self) -> &[Vec<Rational>] {
        &self.inverse_cartan
    }

    /// Symmetric matrix of `⟨ω_i, ω_j⟩`, short roots of squared length 2.
    pub fn gram_omega(&self) -> &[Vec<Rational>] {
        &self.gram_omega
    }

    /// `|α_j|² / 2` per simple root.
    pub fn half_lengths(&self) -> &[Rational] {
        &self.half_lengths
    }

    /// Positive roots in the ω-basis, sorted by height.
    pub fn positive_roots(&self) -> &[Weight] {
        &self.positive_roots
    }

    pub fn highest_root(&self) -> &Weight {
        &self.highest_root
    }

    /// Coefficients of the highest root in the simple-root basis.
    pub fn marks(&self) -> &[i32] {
        &self.marks
    }

    /// Coefficients of the highest coroot in the simple-coroot basis.
    pub fn comarks(&self) -> &[i32] {
        &self.comarks
    }

    pub fn weyl_order(&self) -> u64 {
        self.weyl_order
    }

    pub fn simple_root(&self, i: usize) -> Weight {
        Weight(self.cartan[i].clone())
    }

    pub fn rho(&self) -> Weight {
        Weight::rho(self.rank())
    }

    pub fn check_arity(&self, w: &Weight) -> Result<()> {
        if w.rank() == self.rank() {
            Ok(())
        } else {
            Err(Error::Arity {
                got: w.rank(),
                rank: self.rank(),
            })
        }
    }

    pub fn check_dominant(&self, w: &Weight) -> Result<()> {
        self.check_arity(w)?;
        if w.is_dominant() {
            Ok(())
        } else {
            Err(Error::NotDominant(w.clone()))
        }
    }

    pub fn check_strictly_dominant(&self, w: &Weight) -> Result<()> {
        self.check_arity(w)?;
        if w.is_strictly_dominant() {
            Ok(())
        } else {
            Err(Error::NotStrictlyDominant(w.clone()))
        }
    }

    /// Coordinates of a weight in the simple-root basis.
    pub fn alpha_coords(&self, w: &Weight) -> Vec<Rational> {
        let n = self.rank();
        (0..n)
            .map(|j| {
                (0..n).fold(Rational::zero(), |acc, k| {
                    acc + self.inverse_cartan[k][j] * Rational::from_integer(w.0[k] as i64)
                })
            })
            .collect()
    }

    /// Sum of the simple-root coordinates; strictly increasing along the
    /// dominance order.
    pub fn height(&self, w: &Weight) -> Rational {
        self.alpha_coords(w).into_iter().sum()
    }

    /// Total order extending dominance: height first, then lexicographic.
    pub fn order_key(&self, w: &Weight) -> (Rational, Vec<i32>) {
        (self.height(w), w.0.clone())
    }

    /// `λ ≽ μ`, i.e. `λ − μ` is a nonnegative integer combination of simple roots.
    pub fn dominates(&self, lambda: &Weight, mu: &Weight) -> bool {
        self.alpha_coords(&lambda.sub(mu))
            .iter()
            .all(|c| c.is_integer() && !c.is_negative())
    }

    /// `λ − μ` lies in the root lattice.
    pub fn in_root_lattice(&self, w: &Weight) -> bool {
        self.alpha_coords(w).iter().all(|c| c.is_integer())
    }

    pub fn inner(&self, a: &Weight, b: &Weight) -> Rational {
        let n = self.rank();
        let mut acc = Rational::zero();
        for i in 0..n {
            if a.0[i] == 0 {
                continue;
            }
            for j in 0..n {
                if b.0[j] != 0 {
                    acc += self.gram_omega[i][j] * Rational::from_integer((a.0[i] * b.0[j]) as i64);
                }
            }
        }
        acc
    }

    pub(crate) fn reflect_unchecked(&self, i: usize, w: &Weight) -> Weight {
        let mut out = w.clone();
        self.reflect_in_place(i, &mut out.0);
        out
    }

    pub(crate) fn reflect_in_place(&self, i: usize, w: &mut [i32]) {
        let li = w[i];
        if li != 0 {
            for (k, x) in w.iter_mut().enumerate() {
                *x -= li * self.cartan[i][k];
            }
        }
    }

    /// Elementary reflection `r_{i+1}`: `(r λ)_k = λ_k − λ_i M_{ik}`.
    pub fn reflect(&self, i: usize, w: &Weight) -> Result<Weight> {
        self.check_arity(w)?;
        if i >= self.rank() {
            return Err(Error::IndexOutOfRange {
                index: i,
                rank: self.rank(),
            });
        }
        Ok(self.reflect_unchecked(i, w))
    }

    /// Reduces `μ` to the dominant chamber by reflecting in the first
    /// negative coordinate until none remains.
    pub fn to_dominant(&self, mu: &Weight) -> DominantForm {
        let mut w = mu.clone();
        let mut steps = 0u32;
        while let Some(i) = w.0.iter().position(|&c| c < 0) {
            self.reflect_in_place(i, &mut w.0);
            steps += 1;
        }
        let on_wall = w.0.contains(&0);
        DominantForm {
            weight: w,
            parity: (steps % 2) as u8,
            on_wall,
        }
    }

    /// Order of the stabilizer of a dominant weight: the parabolic subgroup
    /// generated by reflections in the zero coordinates.
    pub fn stabilizer_order(&self, lambda: &Weight) -> u64 {
        let zeros: Vec<usize> = (0..self.rank()).filter(|&i| lambda.0[i] == 0).collect();
        parabolic_order(&self.cartan, &zeros)
    }

    fn congruence_forms(&self) -> Vec<(Vec<i64>, u32)> {
        let n = self.rank();
        let mut form = vec![0i64; n];
        match self.algebra.series {
            Series::A => {
                for (i, f) in form.iter_mut().enumerate() {
                    *f = i as i64 + 1;
                }
                vec![(form, n as u32 + 1)]
            }
            Series::B => {
                form[n - 1] = 1;
                vec![(form, 2)]
            }
            Series::C => {
                for (i, f) in form.iter_mut().enumerate() {
                    *f = if i % 2 == 0 { 1 } else { 0 };
                }
                vec![(form, 2)]
            }
            Series::D if n % 2 == 1 => {
                for i in (0..n - 2).step_by(2) {
                    form[i] = 2;
                }
                form[n - 2] = n as i64 - 2;
                form[n - 1] = n as i64;
                vec![(form, 4)]
            }
            Series::D => {
                let mut spin = vec![0i64; n];
                spin[n - 2] = 1;
                spin[n - 1] = 1;
                for i in (0..n - 3).step_by(2) {
                    form[i] = 1;
                }
                form[n - 2] = 1;
                vec![(spin, 2), (form, 2)]
            }
            Series::E if n == 6 => vec![(vec![1, 0, -1, 0, 1, -1], 3)],
            Series::E if n == 7 => vec![(vec![0, 1, 0, 0, 1, 0, 1], 2)],
            _ => vec![(form, 1)],
        }
    }

    /// Label of the coset of `λ` in P/Q.
    pub fn congruence_number(&self, w: &Weight) -> Congruence {
        let forms = self.congruence_forms();
        Congruence {
            values: forms
                .iter()
                .map(|(f, m)| {
                    let s: i64 = f.iter().zip(&w.0).map(|(a, &b)| a * b as i64).sum();
                    s.rem_euclid(*m as i64) as u32
                })
                .collect(),
            moduli: forms.iter().map(|(_, m)| *m).collect(),
        }
    }

    /// Order of the center, i.e. `|P/Q| = det M`.
    pub fn center_order(&self) -> u32 {
        linalg::determinant(&linalg::to_rational(&self.cartan)).to_integer() as u32
    }

    pub fn fundamental_region(&self) -> FundamentalRegion {
        let n = self.rank();
        let mut vertices = vec![vec![Rational::zero(); n]];
        for j in 0..n {
            // ⟨α_k, v⟩ = δ_kj scaled so that ⟨ξ, v⟩ = 1.
            let scale = Rational::from_integer(self.marks[j] as i64);
            vertices.push((0..n).map(|k| self.inverse_cartan[k][j] / scale).collect());
        }
        let edges: Vec<Vec<Rational>> = vertices[1..].to_vec();
        let volume = linalg::abs(linalg::determinant(&edges)) / Rational::from_integer(factorial(n as u64) as i64);
        FundamentalRegion {
            vertices,
            volume,
            cartan: self.cartan.clone(),
            highest_root: self.highest_root.0.clone(),
        }
    }

    /// All dominant weights `μ ≼ λ`, found by subtracting positive roots
    /// while staying dominant. Sorted by the order of [`RootSystem::order_key`].
    pub fn dominant_weights_below(&self, lambda: &Weight) -> Vec<Weight> {
        let mut seen: BTreeSet<Weight> = BTreeSet::new();
        let mut stack = vec![lambda.clone()];
        seen.insert(lambda.clone());
        while let Some(w) = stack.pop() {
            for root in &self.positive_roots {
                let v = w.sub(root);
                if v.is_dominant() && seen.insert(v.clone()) {
                    stack.push(v);
                }
            }
        }
        let mut out: Vec<Weight> = seen.into_iter().collect();
        out.sort_by_cached_key(|w| self.order_key(w));
        out
    }

    /// Canonical JSON dump: sorted keys, rationals as `"p/q"`.
    pub fn to_json(&self) -> Value {
        let rat = |r: &Rational| Value::String(format!("{}/{}", r.numer(), r.denom()));
        json!({
            "algebra": self.algebra.to_string(),
            "rank": self.rank(),
            "cartan": self.cartan,
            "gram_omega": self.gram_omega.iter().map(|row| row.iter().map(rat).collect::<Vec<_>>()).collect::<Vec<_>>(),
            "positive_roots": self.positive_roots.iter().map(|w| w.0.clone()).collect::<Vec<_>>(),
            "highest_root": self.highest_root.0,
            "marks": self.marks,
            "comarks": self.comarks,
            "weyl_order": self.weyl_order,
        })
    }
}
