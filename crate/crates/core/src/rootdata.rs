//! Root systems of types A–G with exact integer Cartan data.
//!
//! Cartan convention: `cartan[i][j] = ⟨α_j, α_i∨⟩`. Roots are stored in the
//! simple-root basis together with their coroots in the simple-coroot basis.
//! Weights are integer vectors in the fundamental-weight basis, so the
//! pairing of a weight with a coroot is a plain dot product.
//!
//! Node numbering is Bourbaki's, except for E6 which uses the chain
//! `1 – 2 – 3 – 5 – 6` with node 4 attached to node 3. In Bourbaki labels
//! that is `1→1, 2→3, 3→4, 4→2, 5→5, 6→6`.

use std::collections::HashSet;
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
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

    pub fn from_letter(c: char) -> Option<Family> {
        Some(match c.to_ascii_uppercase() {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'E' => Family::E,
            'F' => Family::F,
            'G' => Family::G,
            _ => return None,
        })
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// A (family, rank) pair that has been checked for admissibility.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootSystemSpec {
    family: Family,
    rank: usize,
}

impl RootSystemSpec {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 3,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok && rank <= 8 {
            Ok(RootSystemSpec { family, rank })
        } else {
            Err(Error::InadmissibleRootSystem {
                family: family.letter(),
                rank,
            })
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }
}

impl fmt::Display for RootSystemSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

impl FromStr for RootSystemSpec {
    type Err = Error;

    /// Parses names such as `"E6"` or `"a3"`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let family = chars
            .next()
            .and_then(Family::from_letter)
            .ok_or_else(|| Error::Parse(format!("root system name {s:?}")))?;
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::Parse(format!("root system name {s:?}")))?;
        RootSystemSpec::new(family, rank)
    }
}

/// An integral weight written in the fundamental-weight basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight(Vec<i64>);

impl Weight {
    pub fn new(coords: Vec<i64>) -> Self {
        Weight(coords)
    }

    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    /// The fundamental weight `ω_i` (1-based `i`).
    pub fn fundamental(rank: usize, i: usize) -> Self {
        let mut v = vec![0; rank];
        v[i - 1] = 1;
        Weight(v)
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    pub fn scale(&self, k: i64) -> Weight {
        Weight(self.0.iter().map(|c| c * k).collect())
    }

    pub(crate) fn coords_mut(&mut self) -> &mut [i64] {
        &mut self.0
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, c) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl Add for &Weight {
    type Output = Weight;

    fn add(self, rhs: &Weight) -> Weight {
        assert_eq!(self.len(), rhs.len(), "weight length mismatch");
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Weight {
    type Output = Weight;

    fn sub(self, rhs: &Weight) -> Weight {
        assert_eq!(self.len(), rhs.len(), "weight length mismatch");
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Weight {
    type Output = Weight;

    fn neg(self) -> Weight {
        Weight(self.0.iter().map(|c| -c).collect())
    }
}

impl serde::Serialize for Weight {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

/// A positive root together with its coroot.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Root {
    simple_coords: Vec<i64>,
    coroot_coords: Vec<i64>,
}

impl Root {
    /// Coordinates in the simple-root basis.
    pub fn simple_coords(&self) -> &[i64] {
        &self.simple_coords
    }

    /// Coordinates of the coroot in the simple-coroot basis.
    pub fn coroot_coords(&self) -> &[i64] {
        &self.coroot_coords
    }

    pub fn height(&self) -> i64 {
        self.simple_coords.iter().sum()
    }

    pub fn coroot_height(&self) -> i64 {
        self.coroot_coords.iter().sum()
    }

    /// True when every nonzero coordinate lies in `support` (0-based indices).
    pub(crate) fn supported_on(&self, support: &[bool]) -> bool {
        self.simple_coords
            .iter()
            .zip(support)
            .all(|(&c, &inside)| c == 0 || inside)
    }
}

#[derive(Debug, Clone)]
pub struct RootSystem {
    spec: RootSystemSpec,
    cartan: Vec<Vec<i64>>,
    symmetrizer: Vec<i64>,
    positive_roots: Vec<Root>,
}

fn cartan_matrix(spec: RootSystemSpec) -> Vec<Vec<i64>> {
    let n = spec.rank();
    let mut c = vec![vec![0i64; n]; n];
    for (i, row) in c.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut link = |a: usize, b: usize| {
        c[a - 1][b - 1] = -1;
        c[b - 1][a - 1] = -1;
    };
    match spec.family() {
        Family::A | Family::B | Family::C => {
            for i in 1..n {
                link(i, i + 1);
            }
        }
        Family::D => {
            for i in 1..n - 1 {
                link(i, i + 1);
            }
            link(n - 2, n);
        }
        Family::E if n == 6 => {
            for (a, b) in [(1, 2), (2, 3), (3, 5), (5, 6), (3, 4)] {
                link(a, b);
            }
        }
        Family::E => {
            link(1, 3);
            link(2, 4);
            for i in 3..n {
                link(i, i + 1);
            }
        }
        Family::F => {
            link(1, 2);
            link(2, 3);
            link(3, 4);
        }
        Family::G => link(1, 2),
    }
    // Multiple bonds: the entry in the short root's row is the one scaled.
    match spec.family() {
        // α_ℓ short
        Family::B => c[n - 1][n - 2] = -2,
        // α_ℓ long
        Family::C => c[n - 2][n - 1] = -2,
        // α1, α2 long; α3, α4 short
        Family::F => c[2][1] = -2,
        // α1 short, α2 long
        Family::G => c[0][1] = -3,
        _ => {}
    }
    c
}

fn symmetrizer(spec: RootSystemSpec) -> Vec<i64> {
    let n = spec.rank();
    match spec.family() {
        Family::B => (1..=n).map(|i| if i < n { 2 } else { 1 }).collect(),
        Family::C => (1..=n).map(|i| if i < n { 1 } else { 2 }).collect(),
        Family::F => vec![2, 2, 1, 1],
        Family::G => vec![1, 3],
        _ => vec![1; n],
    }
}

impl RootSystem {
    /// Builds the root system, enumerating positive roots by root strings.
    pub fn new(spec: RootSystemSpec) -> Self {
        let cartan = cartan_matrix(spec);
        let symmetrizer = symmetrizer(spec);
        let n = spec.rank();

        let mut known: HashSet<Vec<i64>> = HashSet::new();
        let mut all: Vec<Vec<i64>> = Vec::new();
        let mut layer: Vec<Vec<i64>> = (0..n)
            .map(|i| {
                let mut v = vec![0; n];
                v[i] = 1;
                v
            })
            .collect();
        while !layer.is_empty() {
            for r in &layer {
                known.insert(r.clone());
            }
            let mut next: Vec<Vec<i64>> = Vec::new();
            for beta in &layer {
                for i in 0..n {
                    if beta.iter().enumerate().all(|(k, &c)| c == i64::from(k == i)) {
                        continue;
                    }
                    let pairing: i64 = (0..n).map(|j| cartan[i][j] * beta[j]).sum();
                    // how far the α_i-string extends downwards from β
                    let mut down = 0;
                    let mut probe = beta.clone();
                    loop {
                        probe[i] -= 1;
                        if probe[i] < 0 || !known.contains(&probe) {
                            break;
                        }
                        down += 1;
                    }
                    if down - pairing > 0 {
                        let mut up = beta.clone();
                        up[i] += 1;
                        if !known.contains(&up) && !next.contains(&up) {
                            next.push(up);
                        }
                    }
                }
            }
            all.append(&mut layer);
            layer = next;
        }
        all.sort_by(|a, b| {
            let ha: i64 = a.iter().sum();
            let hb: i64 = b.iter().sum();
            ha.cmp(&hb).then_with(|| b.cmp(a))
        });

        let positive_roots = all
            .into_iter()
            .map(|simple_coords| {
                let mut twice_norm = 0;
                for i in 0..n {
                    for j in 0..n {
                        twice_norm +=
                            simple_coords[i] * simple_coords[j] * symmetrizer[i] * cartan[i][j];
                    }
                }
                let scale = twice_norm / 2;
                let coroot_coords = (0..n)
                    .map(|i| {
                        let num = simple_coords[i] * symmetrizer[i];
                        debug_assert_eq!(num % scale, 0);
                        num / scale
                    })
                    .collect();
                Root {
                    simple_coords,
                    coroot_coords,
                }
            })
            .collect();

        RootSystem {
            spec,
            cartan,
            symmetrizer,
            positive_roots,
        }
    }

    pub fn spec(&self) -> RootSystemSpec {
        self.spec
    }

    pub fn rank(&self) -> usize {
        self.spec.rank()
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn symmetrizer(&self) -> &[i64] {
        &self.symmetrizer
    }

    /// Positive roots ordered by height, then lexicographically.
    pub fn positive_roots(&self) -> &[Root] {
        &self.positive_roots
    }

    pub fn num_positive_roots(&self) -> usize {
        self.positive_roots.len()
    }

    pub fn rho(&self) -> Weight {
        Weight(vec![1; self.rank()])
    }

    pub fn highest_root(&self) -> &Root {
        self.positive_roots.last().expect("root systems are nonempty")
    }

    pub(crate) fn check_weight(&self, w: &Weight) -> Result<()> {
        if w.len() == self.rank() {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected: self.rank(),
                found: w.len(),
            })
        }
    }

    /// `⟨λ, α∨⟩`.
    pub fn pairing(&self, lambda: &Weight, alpha: &Root) -> Result<i64> {
        self.check_weight(lambda)?;
        if alpha.coroot_coords.len() != self.rank() {
            return Err(Error::DimensionMismatch {
                expected: self.rank(),
                found: alpha.coroot_coords.len(),
            });
        }
        Ok(dot(lambda.coords(), &alpha.coroot_coords))
    }

    /// Writes a root (or any element of the root lattice, in simple-root
    /// coordinates) in the fundamental-weight basis.
    pub fn root_in_weight_basis(&self, alpha: &Root) -> Weight {
        self.root_lattice_to_weight(&alpha.simple_coords)
    }

    pub(crate) fn root_lattice_to_weight(&self, coords: &[i64]) -> Weight {
        Weight(
            self.cartan
                .iter()
                .map(|row| dot(row, coords))
                .collect(),
        )
    }

    /// Weyl's dimension formula, `Π ⟨λ+ρ, α∨⟩ / ⟨ρ, α∨⟩` over positive roots.
    pub fn weyl_dim(&self, lambda: &Weight) -> Result<BigInt> {
        self.check_weight(lambda)?;
        if !lambda.is_dominant() {
            return Err(Error::NonDominant(lambda.to_string()));
        }
        let shifted = lambda + &self.rho();
        let mut num = BigInt::one();
        let mut den = BigInt::one();
        for alpha in &self.positive_roots {
            num *= dot(shifted.coords(), &alpha.coroot_coords);
            den *= alpha.coroot_height();
        }
        let (q, r) = num.div_rem(&den);
        if !r.is_zero() {
            return Err(Error::Consistency(format!(
                "Weyl dimension of {lambda} is not an integer"
            )));
        }
        Ok(q)
    }

    /// Number of positive roots supported on the node set `support`
    /// (1-based labels).
    pub fn count_roots_supported_on(&self, support: &[usize]) -> usize {
        let mut mask = vec![false; self.rank()];
        for &i in support {
            mask[i - 1] = true;
        }
        self.positive_roots
            .iter()
            .filter(|r| r.supported_on(&mask))
            .count()
    }
}

pub(crate) fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}
