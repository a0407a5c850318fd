//! Weyl characters `χ(μ)` and their formal Z-linear combinations.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::ser::SerializeSeq;

use crate::error::{Error, Result};
use crate::rootdata::{RootSystem, RootSystemSpec, Weight};

/// Result of moving `μ` to the dominant chamber under the dot action.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NormalizedChi {
    /// `μ + ρ` lies on a wall, so `χ(μ) = 0`.
    Zero,
    /// `χ(μ) = sign · Ch V(weight)`.
    Signed { sign: i64, weight: Weight },
}

/// A finite sum `Σ c_λ χ(λ)` over dominant weights, with nonzero
/// coefficients only. Keys are kept in lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormalCharacter {
    system: RootSystemSpec,
    terms: BTreeMap<Weight, i64>,
}

impl FormalCharacter {
    pub fn zero(system: RootSystemSpec) -> Self {
        FormalCharacter {
            system,
            terms: BTreeMap::new(),
        }
    }

    /// The single term `χ(λ)`; `λ` must be dominant.
    pub fn weyl(system: RootSystemSpec, lambda: Weight) -> Result<Self> {
        let mut out = Self::zero(system);
        out.add_term(lambda, 1)?;
        Ok(out)
    }

    pub fn from_terms(
        system: RootSystemSpec,
        terms: impl IntoIterator<Item = (Weight, i64)>,
    ) -> Result<Self> {
        let mut out = Self::zero(system);
        for (w, c) in terms {
            out.add_term(w, c)?;
        }
        Ok(out)
    }

    pub fn system(&self) -> RootSystemSpec {
        self.system
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, lambda: &Weight) -> i64 {
        self.terms.get(lambda).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Weight, i64)> {
        self.terms.iter().map(|(w, &c)| (w, c))
    }

    pub fn keys(&self) -> impl Iterator<Item = &Weight> {
        self.terms.keys()
    }

    pub fn add_term(&mut self, lambda: Weight, coeff: i64) -> Result<()> {
        if lambda.len() != self.system.rank() {
            return Err(Error::DimensionMismatch {
                expected: self.system.rank(),
                found: lambda.len(),
            });
        }
        if !lambda.is_dominant() {
            return Err(Error::NonDominant(lambda.to_string()));
        }
        if coeff == 0 {
            return Ok(());
        }
        match self.terms.entry(lambda) {
            Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if *e.get() == 0 {
                    e.remove();
                }
            }
            Entry::Vacant(e) => {
                e.insert(coeff);
            }
        }
        Ok(())
    }
}

impl serde::Serialize for FormalCharacter {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(serde::Serialize)]
        struct Term<'a> {
            weight: &'a Weight,
            coeff: i64,
        }
        let mut seq = s.serialize_seq(Some(self.terms.len()))?;
        for (weight, &coeff) in &self.terms {
            seq.serialize_element(&Term { weight, coeff })?;
        }
        seq.end()
    }
}

/// `a + c·b`.
pub fn char_combine(a: &FormalCharacter, c: i64, b: &FormalCharacter) -> Result<FormalCharacter> {
    if a.system != b.system {
        return Err(Error::MixedRootSystems);
    }
    let mut out = a.clone();
    for (w, &k) in &b.terms {
        out.add_term(w.clone(), c * k)?;
    }
    Ok(out)
}

impl RootSystem {
    /// Dot-action normalization of `χ(μ)`.
    ///
    /// Reflects `μ + ρ` in the smallest simple root with negative pairing
    /// until dominant; a zero coordinate at the end means a wall.
    pub fn normalize_chi(&self, mu: &Weight) -> Result<NormalizedChi> {
        self.check_weight(mu)?;
        let mut nu = mu + &self.rho();
        let mut sign = 1;
        while let Some(i) = nu.coords().iter().position(|&c| c < 0) {
            self.reflect_in_place(i, &mut nu);
            sign = -sign;
        }
        if nu.coords().contains(&0) {
            return Ok(NormalizedChi::Zero);
        }
        Ok(NormalizedChi::Signed {
            sign,
            weight: &nu - &self.rho(),
        })
    }

    /// `Σ coeff · dim V(λ)`.
    pub fn char_dim(&self, x: &FormalCharacter) -> Result<BigInt> {
        if x.system != self.spec() {
            return Err(Error::MixedRootSystems);
        }
        let mut total = BigInt::zero();
        for (w, c) in x.terms() {
            total += self.weyl_dim(w)? * c;
        }
        Ok(total)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn rs(name: &str) -> RootSystem {
        RootSystem::new(name.parse().unwrap())
    }

    fn w(c: &[i64]) -> Weight {
        Weight::new(c.to_vec())
    }

    #[test]
    fn normalize_examples() {
        let a1 = rs("A1");
        assert_eq!(
            a1.normalize_chi(&w(&[3])).unwrap(),
            NormalizedChi::Signed { sign: 1, weight: w(&[3]) }
        );
        assert_eq!(a1.normalize_chi(&w(&[-1])).unwrap(), NormalizedChi::Zero);
        assert_eq!(
            a1.normalize_chi(&w(&[-2])).unwrap(),
            NormalizedChi::Signed { sign: -1, weight: w(&[0]) }
        );
        let a2 = rs("A2");
        // (−1, 0) + ρ = (0, 1) lies on a wall
        assert_eq!(a2.normalize_chi(&w(&[-1, 0])).unwrap(), NormalizedChi::Zero);
        // (−3, 0) + ρ = (−2, 1) → s1 → (2, −1) → s2 → (1, 1): sign +1, weight 0
        assert_eq!(
            a2.normalize_chi(&w(&[-3, 0])).unwrap(),
            NormalizedChi::Signed { sign: 1, weight: w(&[0, 0]) }
        );
        assert!(a2.normalize_chi(&w(&[1])).is_err());
    }

    #[test]
    fn combine_examples() {
        let spec = rs("A2").spec();
        let x = FormalCharacter::from_terms(spec, [(w(&[1, 0]), 2), (w(&[0, 1]), -1)]).unwrap();
        assert!(char_combine(&x, -1, &x).unwrap().is_zero());

        let l = FormalCharacter::weyl(spec, w(&[1, 0])).unwrap();
        let m = FormalCharacter::weyl(spec, w(&[0, 1])).unwrap();
        let lm = char_combine(&l, 1, &m).unwrap();
        assert_eq!(lm.len(), 2);
        assert_eq!(lm.coefficient(&w(&[1, 0])), 1);
        assert_eq!(lm.coefficient(&w(&[0, 1])), 1);

        let two = FormalCharacter::from_terms(spec, [(w(&[1, 0]), 2)]).unwrap();
        assert_eq!(char_combine(&two, -1, &l).unwrap(), l);

        let other = FormalCharacter::weyl(rs("B2").spec(), w(&[1, 0])).unwrap();
        assert_eq!(char_combine(&l, 1, &other), Err(Error::MixedRootSystems));
        assert!(FormalCharacter::weyl(spec, w(&[-1, 0])).is_err());
    }

    #[test]
    fn char_dim_examples() {
        let a1 = rs("A1");
        assert_eq!(a1.char_dim(&FormalCharacter::zero(a1.spec())).unwrap(), BigInt::zero());
        let triv = FormalCharacter::weyl(a1.spec(), w(&[0])).unwrap();
        assert_eq!(a1.char_dim(&triv).unwrap(), BigInt::from(1));
        let p = 5;
        let x = FormalCharacter::weyl(a1.spec(), w(&[p - 2])).unwrap();
        assert_eq!(a1.char_dim(&x).unwrap(), BigInt::from(4));
        let mixed =
            FormalCharacter::from_terms(a1.spec(), [(w(&[1]), 1), (w(&[4]), -1)]).unwrap();
        assert_eq!(a1.char_dim(&mixed).unwrap(), BigInt::from(-3));
    }

    #[test]
    fn serializes_sorted() {
        let spec = rs("A2").spec();
        let x = FormalCharacter::from_terms(spec, [(w(&[1, 0]), 2), (w(&[0, 3]), -1)]).unwrap();
        assert_eq!(
            serde_json::to_string(&x).unwrap(),
            r#"[{"weight":[0,3],"coeff":-1},{"weight":[1,0],"coeff":2}]"#
        );
    }

    #[test]
    fn steinberg_weight_dimension() {
        for name in ["A1", "A2", "B2"] {
            let r = rs(name);
            for p in [2i64, 3] {
                let st = r.rho().scale(p - 1);
                let expected = num_traits::pow(BigInt::from(p), r.num_positive_roots());
                assert_eq!(r.weyl_dim(&st).unwrap(), expected, "{name} p={p}");
            }
        }
    }

    fn system_and_weight() -> impl Strategy<Value = (String, Vec<i64>)> {
        prop_oneof![
            Just("A1"), Just("A2"), Just("A3"), Just("B2"), Just("C3"), Just("G2"), Just("D4")
        ]
        .prop_flat_map(|name| {
            let n = RootSystem::new(name.parse().unwrap()).rank();
            (Just(name.to_string()), prop::collection::vec(-8i64..8, n))
        })
    }

    proptest! {
        // χ(s_i·μ) = −χ(μ)
        #[test]
        fn dot_reflection_flips_sign((name, coords) in system_and_weight(), node in 0usize..8) {
            let r = rs(&name);
            let i = node % r.rank() + 1;
            let mu = Weight::new(coords);
            let rho = r.rho();
            let reflected = &r.reflect_simple(i, &(&mu + &rho)).unwrap() - &rho;
            let a = r.normalize_chi(&mu).unwrap();
            let b = r.normalize_chi(&reflected).unwrap();
            match (a, b) {
                (NormalizedChi::Zero, NormalizedChi::Zero) => {}
                (
                    NormalizedChi::Signed { sign: s1, weight: w1 },
                    NormalizedChi::Signed { sign: s2, weight: w2 },
                ) => {
                    prop_assert_eq!(w1, w2);
                    prop_assert_eq!(s1, -s2);
                }
                (a, b) => prop_assert!(false, "{:?} vs {:?}", a, b),
            }
        }

        #[test]
        fn char_dim_of_single_term_is_weyl_dim((name, coords) in system_and_weight()) {
            let r = rs(&name);
            let lambda = Weight::new(coords.iter().map(|c| c.abs()).collect());
            let x = FormalCharacter::weyl(r.spec(), lambda.clone()).unwrap();
            prop_assert_eq!(r.char_dim(&x).unwrap(), r.weyl_dim(&lambda).unwrap());
        }
    }
}
