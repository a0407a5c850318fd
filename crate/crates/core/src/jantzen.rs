//! Jantzen sums, the chain method for simple characters, and the highest
//! weight `λ_opp` attached to an oppositeness relation.

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::characters::{char_combine, FormalCharacter, NormalizedChi};
use crate::error::{Error, Result};
use crate::rootdata::{RootSystem, Weight};
use crate::weylgroup::TypeSet;

pub const DEFAULT_DEPTH_LIMIT: usize = 16;

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d <= n / d {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Exponent of `p` in `n` (`n > 0`).
pub fn valuation(mut n: u64, p: u64) -> u32 {
    let mut v = 0;
    while n > 0 && n.is_multiple_of(p) {
        n /= p;
        v += 1;
    }
    v
}

/// Splits a prime power `q = p^t`; `None` if `q` is not one.
pub fn prime_power_parts(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let mut rest = q;
    let mut t = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        t += 1;
    }
    (rest == 1).then_some((p, t))
}

/// `−Σ_{α>0} Σ_{0<mp<⟨λ+ρ,α∨⟩} v_p(mp) χ(λ − mpα)`.
pub fn jantzen_sum(rs: &RootSystem, lambda: &Weight, p: u64) -> Result<FormalCharacter> {
    rs.check_weight(lambda)?;
    if !lambda.is_dominant() {
        return Err(Error::NonDominant(lambda.to_string()));
    }
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let shifted = lambda + &rs.rho();
    let p_i = p as i64;
    let mut sum = FormalCharacter::zero(rs.spec());
    for alpha in rs.positive_roots() {
        let bound = rs.pairing(&shifted, alpha)?;
        let alpha_w = rs.root_in_weight_basis(alpha);
        let mut mp = p_i;
        while mp < bound {
            let coeff = valuation(mp as u64, p) as i64;
            let mu = lambda - &alpha_w.scale(mp);
            if let NormalizedChi::Signed { sign, weight } = rs.normalize_chi(&mu)? {
                sum.add_term(weight, -sign * coeff)?;
            }
            mp += p_i;
        }
    }
    Ok(sum)
}

impl RootSystem {
    /// Coordinates of a weight in the simple-root basis (rational in
    /// general), solving `cartan · x = coords`.
    pub fn weight_to_root_coords(&self, w: &Weight) -> Result<Vec<Ratio<i64>>> {
        self.check_weight(w)?;
        let n = self.rank();
        let mut a: Vec<Vec<Ratio<i64>>> = (0..n)
            .map(|i| {
                let mut row: Vec<Ratio<i64>> =
                    self.cartan()[i].iter().map(|&c| Ratio::from_integer(c)).collect();
                row.push(Ratio::from_integer(w.coords()[i]));
                row
            })
            .collect();
        for col in 0..n {
            let piv = (col..n)
                .find(|&r| !a[r][col].is_zero())
                .expect("Cartan matrices are nonsingular");
            a.swap(col, piv);
            let inv = a[col][col].recip();
            for x in a[col].iter_mut() {
                *x *= inv;
            }
            let pivot = a[col].clone();
            for (r, row) in a.iter_mut().enumerate() {
                if r != col && !row[col].is_zero() {
                    let f = row[col];
                    for (x, y) in row[col..].iter_mut().zip(&pivot[col..]) {
                        *x -= f * y;
                    }
                }
            }
        }
        Ok(a.into_iter().map(|row| row[n]).collect())
    }

    /// Dominance order: `a ≥ b` iff `a − b` is a non-negative integer
    /// combination of simple roots.
    pub fn dominates(&self, a: &Weight, b: &Weight) -> Result<bool> {
        let diff = self.weight_to_root_coords(&(a - b))?;
        Ok(diff
            .iter()
            .all(|x| x.is_integer() && *x >= Ratio::zero()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum ResolutionStatus {
    Simple,
    ChainResolved,
    Unresolved,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChainLink {
    pub weight: Weight,
    pub jantzen_sum: FormalCharacter,
}

/// Outcome of the chain method for `Ch L(λ)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Resolution {
    pub status: ResolutionStatus,
    /// `Ch L(λ)` as a χ-expansion; `None` when unresolved.
    pub simple_char: Option<FormalCharacter>,
    /// `λ` first, then each weight the method recursed into. The last link
    /// of a resolved chain is the simple Weyl module with zero sum.
    pub chain: Vec<ChainLink>,
    pub dim: Option<BigInt>,
}

impl Resolution {
    /// Number of recursion steps, i.e. links after the first.
    pub fn depth(&self) -> usize {
        self.chain.len().saturating_sub(1)
    }

    pub fn is_resolved(&self) -> bool {
        self.status != ResolutionStatus::Unresolved
    }
}

impl Serialize for Resolution {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("Resolution", 5)?;
        st.serialize_field("status", &self.status)?;
        st.serialize_field("depth", &self.depth())?;
        st.serialize_field("simple_char", &self.simple_char)?;
        st.serialize_field("chain", &self.chain)?;
        st.serialize_field("dim", &self.dim.as_ref().map(|d| d.to_string()))?;
        st.end()
    }
}

/// Resolves `Ch L(λ)` by the chain method.
///
/// If the Jantzen sum `S` of `V(λ)` vanishes, `V(λ)` is simple. Otherwise
/// the unique maximal weight `μ` of `S` is resolved recursively, and if
/// `S = Ch L(μ)` exactly then `Ch L(λ) = χ(λ) − S`. Anything else yields
/// [`ResolutionStatus::Unresolved`].
pub fn resolve_simple(
    rs: &RootSystem,
    lambda: &Weight,
    p: u64,
    depth_limit: usize,
) -> Result<Resolution> {
    let sum = jantzen_sum(rs, lambda, p)?;
    let link = ChainLink {
        weight: lambda.clone(),
        jantzen_sum: sum.clone(),
    };
    let unresolved = |chain: Vec<ChainLink>| Resolution {
        status: ResolutionStatus::Unresolved,
        simple_char: None,
        chain,
        dim: None,
    };

    if sum.is_zero() {
        let simple = FormalCharacter::weyl(rs.spec(), lambda.clone())?;
        let dim = rs.weyl_dim(lambda)?;
        return Ok(Resolution {
            status: ResolutionStatus::Simple,
            simple_char: Some(simple),
            chain: vec![link],
            dim: Some(dim),
        });
    }
    if depth_limit == 0 {
        return Ok(unresolved(vec![link]));
    }
    let Some(top) = unique_maximal(rs, &sum)? else {
        return Ok(unresolved(vec![link]));
    };
    let sub = resolve_simple(rs, &top, p, depth_limit - 1)?;
    let mut chain = vec![link];
    let matches = sub.simple_char.as_ref() == Some(&sum);
    chain.extend(sub.chain);
    if !matches {
        return Ok(unresolved(chain));
    }
    let simple = char_combine(&FormalCharacter::weyl(rs.spec(), lambda.clone())?, -1, &sum)?;
    let dim = rs.char_dim(&simple)?;
    Ok(Resolution {
        status: ResolutionStatus::ChainResolved,
        simple_char: Some(simple),
        chain,
        dim: Some(dim),
    })
}

/// The unique key of `x` not strictly dominated by another key.
fn unique_maximal(rs: &RootSystem, x: &FormalCharacter) -> Result<Option<Weight>> {
    let keys: Vec<&Weight> = x.keys().collect();
    let mut maximal = Vec::new();
    for &k in &keys {
        let mut dominated = false;
        for &other in &keys {
            if other != k && rs.dominates(other, k)? {
                dominated = true;
                break;
            }
        }
        if !dominated {
            maximal.push(k.clone());
        }
    }
    Ok(if maximal.len() == 1 {
        maximal.pop()
    } else {
        None
    })
}

/// Orbits of a diagram automorphism on the nodes of the overlying system.
///
/// Orbit `k` (1-based, in the order given) is node `k` of the twisted
/// group's index set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Twist {
    orbits: Vec<Vec<usize>>,
    order: u32,
}

impl Twist {
    /// Validates that the orbits partition the node set and are exactly the
    /// orbits of some Cartan-preserving permutation of order `e`, where `e`
    /// is the largest orbit size.
    pub fn new(rs: &RootSystem, orbits: Vec<Vec<usize>>) -> Result<Self> {
        let n = rs.rank();
        let mut orbits: Vec<Vec<usize>> = orbits
            .into_iter()
            .map(|mut o| {
                o.sort_unstable();
                o
            })
            .collect();
        orbits.retain(|o| !o.is_empty());
        let mut seen = vec![false; n];
        for &i in orbits.iter().flatten() {
            if i == 0 || i > n {
                return Err(Error::InvalidTwist(format!("node {i} out of range 1..={n}")));
            }
            if std::mem::replace(&mut seen[i - 1], true) {
                return Err(Error::InvalidTwist(format!("node {i} appears twice")));
            }
        }
        if let Some(missing) = seen.iter().position(|&s| !s) {
            return Err(Error::InvalidTwist(format!("node {} not covered", missing + 1)));
        }
        let order = orbits.iter().map(Vec::len).max().unwrap_or(1) as u32;
        if order < 2 {
            return Err(Error::InvalidTwist("all orbits are trivial".into()));
        }
        if orbits.iter().any(|o| o.len() != 1 && o.len() as u32 != order) {
            return Err(Error::InvalidTwist("orbit sizes must be 1 or e".into()));
        }
        let mut orbit_of = vec![0; n];
        for (k, o) in orbits.iter().enumerate() {
            for &i in o {
                orbit_of[i - 1] = k;
            }
        }
        if !exists_automorphism_with_orbits(rs.cartan(), &orbit_of, order) {
            return Err(Error::InvalidTwist(
                "no diagram automorphism has these orbits".into(),
            ));
        }
        Ok(Twist { orbits, order })
    }

    pub fn orbits(&self) -> &[Vec<usize>] {
        &self.orbits
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// Nodes of the twisted group's index set.
    pub fn num_orbits(&self) -> usize {
        self.orbits.len()
    }
}

fn exists_automorphism_with_orbits(cartan: &[Vec<i64>], orbit_of: &[usize], order: u32) -> bool {
    fn extend(
        cartan: &[Vec<i64>],
        orbit_of: &[usize],
        order: u32,
        perm: &mut Vec<usize>,
        used: &mut [bool],
    ) -> bool {
        let n = cartan.len();
        let i = perm.len();
        if i == n {
            return perm_orbits_match(perm, orbit_of, order);
        }
        for img in 0..n {
            if used[img] || orbit_of[img] != orbit_of[i] {
                continue;
            }
            if (0..i).any(|j| cartan[i][j] != cartan[img][perm[j]] || cartan[j][i] != cartan[perm[j]][img]) {
                continue;
            }
            perm.push(img);
            used[img] = true;
            if extend(cartan, orbit_of, order, perm, used) {
                return true;
            }
            perm.pop();
            used[img] = false;
        }
        false
    }

    fn perm_orbits_match(perm: &[usize], orbit_of: &[usize], order: u32) -> bool {
        for start in 0..perm.len() {
            let mut len = 1;
            let mut cur = perm[start];
            while cur != start {
                cur = perm[cur];
                len += 1;
            }
            let size = orbit_of.iter().filter(|&&o| o == orbit_of[start]).count();
            if len != size {
                return false;
            }
            if len != 1 && len as u32 != order {
                return false;
            }
        }
        true
    }

    let n = cartan.len();
    extend(cartan, orbit_of, order, &mut Vec::with_capacity(n), &mut vec![false; n])
}

/// Input for [`lambda_opp`]: cotype `J`, field size `q = p^t`, optional twist.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OppositeWeightSpec {
    pub cotype: TypeSet,
    pub p: u64,
    pub t: u32,
    pub twist: Option<Twist>,
}

impl OppositeWeightSpec {
    pub fn q(&self) -> u64 {
        self.p.pow(self.t)
    }

    /// The value whose `(·−1)` multiples appear in `λ_opp`: `q` when
    /// untwisted, `q₀ = q^{1/e}` when twisted.
    pub fn coefficient_base(&self) -> Result<u64> {
        match &self.twist {
            None => Ok(self.q()),
            Some(tw) => {
                if !self.t.is_multiple_of(tw.order()) {
                    return Err(Error::InvalidTwist(format!(
                        "q = {}^{} is not an e-th power for e = {}",
                        self.p,
                        self.t,
                        tw.order()
                    )));
                }
                Ok(self.p.pow(self.t / tw.order()))
            }
        }
    }

    /// Nodes of the ambient root system lying in `J` (the union of orbits
    /// in the twisted case).
    pub fn ambient_cotype(&self, rs: &RootSystem) -> Result<TypeSet> {
        match &self.twist {
            None => {
                rs.check_type_set(&self.cotype)?;
                Ok(self.cotype.clone())
            }
            Some(tw) => {
                let mut nodes = Vec::new();
                for &k in self.cotype.nodes() {
                    let orbit = tw.orbits().get(k - 1).ok_or_else(|| {
                        Error::InvalidTwist(format!(
                            "cotype node {k} exceeds the {} orbits",
                            tw.num_orbits()
                        ))
                    })?;
                    nodes.extend_from_slice(orbit);
                }
                TypeSet::new(nodes, rs.rank())
            }
        }
    }
}

/// `λ_opp = Σ_{i ∉ J} (q−1) ω_i`, or `Σ_{i ∉ J*} (q₀−1) ω_i` when twisted.
pub fn lambda_opp(rs: &RootSystem, spec: &OppositeWeightSpec) -> Result<Weight> {
    if !is_prime(spec.p) {
        return Err(Error::NotPrime(spec.p));
    }
    if spec.t == 0 {
        return Err(Error::Parse("exponent t must be at least 1".into()));
    }
    let base = spec.coefficient_base()? as i64;
    let j = spec.ambient_cotype(rs)?;
    Ok(Weight::new(
        (1..=rs.rank())
            .map(|i| if j.contains(i) { 0 } else { base - 1 })
            .collect(),
    ))
}

fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Number of monomials of total degree `degree` in `nvars` variables with
/// every exponent at most `p − 1`.
pub fn truncated_poly_dim(nvars: u32, p: u64, degree: u64) -> BigInt {
    let n = i64::from(nvars);
    let p = p as i64;
    let d = degree as i64;
    let mut total = BigInt::zero();
    for j in 0..=n {
        let rest = d - j * p;
        if rest < 0 {
            break;
        }
        let term = binomial(n, j) * binomial(rest + n - 1, n - 1);
        if j % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

/// `rank_p A(p^t) = (rank_p A(p))^t`.
pub fn steinberg_rank_power(rank_at_p: &BigInt, t: u32) -> BigInt {
    num_traits::pow(rank_at_p.clone(), t as usize)
}
