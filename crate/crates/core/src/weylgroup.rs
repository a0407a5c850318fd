//! Weyl group elements as words in the simple reflections.
//!
//! A word `[i1, i2, …, ik]` denotes the product `s_{i1} s_{i2} ⋯ s_{ik}`, so
//! acting on a weight the last letter is applied first. Two words are equal
//! as group elements iff they agree on `ρ` and on every fundamental weight.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::rootdata::{RootSystem, Weight};

/// A set of Dynkin nodes (1-based), kept sorted and duplicate-free.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct TypeSet(Vec<usize>);

impl TypeSet {
    pub fn new(mut nodes: Vec<usize>, rank: usize) -> Result<Self> {
        nodes.sort_unstable();
        nodes.dedup();
        if let Some(&bad) = nodes.iter().find(|&&i| i == 0 || i > rank) {
            return Err(Error::IndexOutOfRange { index: bad, rank });
        }
        Ok(TypeSet(nodes))
    }

    pub fn empty() -> Self {
        TypeSet(Vec::new())
    }

    pub fn full(rank: usize) -> Self {
        TypeSet((1..=rank).collect())
    }

    pub fn nodes(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0.binary_search(&i).is_ok()
    }

    pub fn complement(&self, rank: usize) -> TypeSet {
        TypeSet((1..=rank).filter(|&i| !self.contains(i)).collect())
    }
}

impl fmt::Display for TypeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, i) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "]")
    }
}

/// Parses `"[1,3]"`, `"1,3"`, `"{1, 3}"` or `"[]"` without a rank check.
impl FromStr for TypeSet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .trim_start_matches(['[', '{'])
            .trim_end_matches([']', '}']);
        let mut nodes = Vec::new();
        for tok in inner.split([',', ' ']).filter(|t| !t.is_empty()) {
            let i: usize = tok
                .parse()
                .map_err(|_| Error::Parse(format!("node label {tok:?}")))?;
            nodes.push(i);
        }
        TypeSet::new(nodes, usize::MAX)
    }
}

impl serde::Serialize for TypeSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct WeylWord {
    letters: Vec<usize>,
}

impl WeylWord {
    pub fn new(letters: Vec<usize>) -> Self {
        WeylWord { letters }
    }

    pub fn identity() -> Self {
        WeylWord::default()
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    /// Word length; equals `ℓ(w)` for the reduced words produced here.
    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// The word for the product `self · other`.
    pub fn concat(&self, other: &WeylWord) -> WeylWord {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        WeylWord { letters }
    }

    pub fn inverse(&self) -> WeylWord {
        WeylWord {
            letters: self.letters.iter().rev().copied().collect(),
        }
    }
}

impl fmt::Display for WeylWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "e");
        }
        for (k, i) in self.letters.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "s{i}")?;
        }
        Ok(())
    }
}

impl RootSystem {
    fn check_node(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.rank() {
            Err(Error::IndexOutOfRange {
                index: i,
                rank: self.rank(),
            })
        } else {
            Ok(())
        }
    }

    pub fn check_type_set(&self, j: &TypeSet) -> Result<()> {
        j.nodes().iter().try_for_each(|&i| self.check_node(i))
    }

    /// `s_i(λ) = λ − ⟨λ, α_i∨⟩ α_i`.
    pub fn reflect_simple(&self, i: usize, lambda: &Weight) -> Result<Weight> {
        self.check_node(i)?;
        self.check_weight(lambda)?;
        let mut out = lambda.clone();
        self.reflect_in_place(i - 1, &mut out);
        Ok(out)
    }

    /// 0-based, unchecked.
    pub(crate) fn reflect_in_place(&self, i: usize, w: &mut Weight) {
        let c = w.coords()[i];
        if c == 0 {
            return;
        }
        let coords = w.coords_mut();
        for (k, row) in self.cartan().iter().enumerate() {
            coords[k] -= c * row[i];
        }
    }

    pub fn apply_word(&self, w: &WeylWord, lambda: &Weight) -> Result<Weight> {
        self.check_weight(lambda)?;
        for &i in &w.letters {
            self.check_node(i)?;
        }
        let mut out = lambda.clone();
        for &i in w.letters.iter().rev() {
            self.reflect_in_place(i - 1, &mut out);
        }
        Ok(out)
    }

    /// Longest element `w_J` of the parabolic subgroup `W_J`.
    ///
    /// Descends from `−ρ`, always reflecting in the smallest node of `J`
    /// whose coordinate is still negative.
    pub fn longest_word(&self, j: &TypeSet) -> Result<WeylWord> {
        self.check_type_set(j)?;
        let mut mu = -&self.rho();
        let mut letters = Vec::new();
        while let Some(&i) = j.nodes().iter().find(|&&i| mu.coords()[i - 1] < 0) {
            self.reflect_in_place(i - 1, &mut mu);
            letters.push(i);
        }
        // s_{ik}⋯s_{i1}(−ρ) is J-dominant, so w_J = s_{ik}⋯s_{i1}; being an
        // involution it also equals the reversed product.
        Ok(WeylWord { letters })
    }

    /// Reduced word for the element `w` with `w(ρ) = image`, by descent.
    fn reduced_word_from_rho_image(&self, image: &Weight) -> WeylWord {
        let mut nu = image.clone();
        let mut letters = Vec::new();
        while let Some(i) = nu.coords().iter().position(|&c| c < 0) {
            self.reflect_in_place(i, &mut nu);
            letters.push(i + 1);
        }
        // s_{ik}⋯s_{i1} w = e, hence w = s_{i1} ⋯ s_{ik}.
        WeylWord { letters }
    }

    /// `w* = w₀ w_J`, returned as a reduced word.
    pub fn w_star(&self, j: &TypeSet) -> Result<WeylWord> {
        let w0 = self.longest_word(&TypeSet::full(self.rank()))?;
        let wj = self.longest_word(j)?;
        let image = self.apply_word(&w0.concat(&wj), &self.rho())?;
        Ok(self.reduced_word_from_rho_image(&image))
    }

    /// `ℓ(w*) = |R⁺| − |R_J⁺|`, computed from root counts.
    pub fn w_star_length(&self, j: &TypeSet) -> usize {
        self.num_positive_roots() - self.count_roots_supported_on(j.nodes())
    }

    /// The involution `σ` of the node set with `−w₀(α_i) = α_{σ(i)}`, as a
    /// 0-based table.
    pub fn opposition_involution(&self) -> Vec<usize> {
        let w0 = self
            .longest_word(&TypeSet::full(self.rank()))
            .expect("full type set is valid");
        (1..=self.rank())
            .map(|i| {
                let img = self
                    .apply_word(&w0, &Weight::fundamental(self.rank(), i))
                    .expect("valid weight");
                let neg = -&img;
                neg.coords()
                    .iter()
                    .position(|&c| c == 1)
                    .expect("w0 permutes the negated fundamental weights")
            })
            .collect()
    }

    pub fn opposite_type(&self, j: &TypeSet) -> Result<TypeSet> {
        self.check_type_set(j)?;
        let sigma = self.opposition_involution();
        TypeSet::new(j.nodes().iter().map(|&i| sigma[i - 1] + 1).collect(), self.rank())
    }

    /// Equality as group elements: same action on ρ and every `ω_i`.
    pub fn words_equal(&self, a: &WeylWord, b: &WeylWord) -> Result<bool> {
        let n = self.rank();
        let mut probes = vec![self.rho()];
        probes.extend((1..=n).map(|i| Weight::fundamental(n, i)));
        for w in &probes {
            if self.apply_word(a, w)? != self.apply_word(b, w)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Number of positive roots sent to negative roots by `w`.
    pub fn inversion_count(&self, w: &WeylWord) -> Result<usize> {
        // α is inverted by w iff ⟨w⁻¹ρ, α∨⟩ < 0
        let inv_rho = self.apply_word(&w.inverse(), &self.rho())?;
        let mut count = 0;
        for a in self.positive_roots() {
            if self.pairing(&inv_rho, a)? < 0 {
                count += 1;
            }
        }
        Ok(count)
    }
}
