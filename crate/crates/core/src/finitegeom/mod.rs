//! Concrete building objects over GF(q) and their oppositeness matrices.
//!
//! Type A objects are flags of subspaces of `V = GF(q)^{ℓ+1}`; an object of
//! cotype `J` is a flag whose dimension set is `I ∖ J`. For types B, C and D
//! only cotype `I ∖ {1}` is handled: the singular points of the standard
//! split quadratic form (B, D) or the standard alternating form (C).

pub mod field;
pub mod io;
pub mod subspace;

use std::fmt;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::rootdata::{Family, RootSystem, RootSystemSpec};
use crate::weylgroup::TypeSet;
pub use field::{Elem, FiniteField};
pub use subspace::{enumerate_subspaces, gaussian_binomial, Subspace};

pub const MAX_OBJECTS: usize = 100_000;

/// A flag of subspaces with strictly increasing dimensions. Points of the
/// polar geometries are one-element flags.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Flag(Vec<Subspace>);

impl Flag {
    pub fn new(field: &FiniteField, parts: Vec<Subspace>) -> Result<Flag> {
        for pair in parts.windows(2) {
            if pair[0].dim() >= pair[1].dim() || !pair[1].contains(field, &pair[0]) {
                return Err(Error::Consistency("flag components are not nested".into()));
            }
        }
        Ok(Flag(parts))
    }

    pub fn parts(&self) -> &[Subspace] {
        &self.0
    }

    pub fn dims(&self) -> Vec<usize> {
        self.0.iter().map(Subspace::dim).collect()
    }
}

impl fmt::Display for Flag {
    /// Components separated by ` | `; the empty flag prints as `-`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "-");
        }
        for (i, s) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, " | ")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FormKind {
    /// `x_0² + Σ x_i x_{ℓ+i}` on GF(q)^{2ℓ+1}
    ParabolicQuadric,
    /// `Σ x_i y_{ℓ+i} − x_{ℓ+i} y_i` on GF(q)^{2ℓ}
    Symplectic,
    /// `Σ x_i x_{ℓ+i}` on GF(q)^{2ℓ}
    HyperbolicQuadric,
}

impl fmt::Display for FormKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FormKind::ParabolicQuadric => "parabolic quadric",
            FormKind::Symplectic => "symplectic",
            FormKind::HyperbolicQuadric => "hyperbolic quadric",
        })
    }
}

/// A nondegenerate form in its standard split shape, indices 0-based with
/// the hyperbolic pairs `(e_i, f_i)` at positions `(off + i, off + ℓ + i)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolarForm {
    kind: FormKind,
    dim: usize,
    /// Gram matrix of the bilinear (polar) form.
    gram: Vec<Vec<Elem>>,
    /// Upper-triangular coefficients `c_ij` of `Q(x) = Σ_{i≤j} c_ij x_i x_j`.
    quadratic: Option<Vec<Vec<Elem>>>,
}

impl PolarForm {
    fn new(kind: FormKind, rank: usize, field: &FiniteField) -> PolarForm {
        let (dim, off) = match kind {
            FormKind::ParabolicQuadric => (2 * rank + 1, 1),
            _ => (2 * rank, 0),
        };
        let mut gram = vec![vec![0; dim]; dim];
        let mut quad = vec![vec![0; dim]; dim];
        for i in 0..rank {
            let (e, f) = (off + i, off + rank + i);
            match kind {
                FormKind::Symplectic => {
                    gram[e][f] = 1;
                    gram[f][e] = field.neg(1);
                }
                _ => {
                    gram[e][f] = 1;
                    gram[f][e] = 1;
                    quad[e][f] = 1;
                }
            }
        }
        if kind == FormKind::ParabolicQuadric {
            quad[0][0] = 1;
            gram[0][0] = field.add(1, 1);
        }
        PolarForm {
            kind,
            dim,
            gram,
            quadratic: (kind != FormKind::Symplectic).then_some(quad),
        }
    }

    pub fn kind(&self) -> FormKind {
        self.kind
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn gram(&self) -> &[Vec<Elem>] {
        &self.gram
    }

    pub fn bilinear(&self, field: &FiniteField, x: &[Elem], y: &[Elem]) -> Elem {
        let mut acc = 0;
        for (i, row) in self.gram.iter().enumerate() {
            if x[i] == 0 {
                continue;
            }
            acc = field.add(acc, field.mul(x[i], field.dot(row, y)));
        }
        acc
    }

    /// Whether `⟨v⟩` is singular: `Q(v) = 0`, or always for the
    /// alternating form.
    pub fn is_singular(&self, field: &FiniteField, v: &[Elem]) -> bool {
        match &self.quadratic {
            None => true,
            Some(c) => {
                let mut acc = 0;
                for (i, row) in c.iter().enumerate() {
                    for (j, &cij) in row.iter().enumerate().skip(i) {
                        if cij != 0 {
                            acc = field.add(acc, field.mul(cij, field.mul(v[i], v[j])));
                        }
                    }
                }
                acc == 0
            }
        }
    }
}

/// A (family, rank, q, cotype) instance with a concrete model.
#[derive(Debug, Clone)]
pub struct GeometryProblem {
    system: RootSystem,
    field: FiniteField,
    cotype_j: TypeSet,
    cotype_k: TypeSet,
    form: Option<PolarForm>,
}

impl GeometryProblem {
    pub fn new(spec: RootSystemSpec, p: u64, t: u32, cotype: TypeSet) -> Result<Self> {
        let system = RootSystem::new(spec);
        system.check_type_set(&cotype)?;
        let l = spec.rank();
        let form_kind = match spec.family() {
            Family::A => None,
            Family::B | Family::C | Family::D => {
                let points = TypeSet::new((2..=l).collect(), l)?;
                if cotype != points {
                    return Err(Error::UnsupportedGeometry(format!(
                        "{spec}: only cotype {points} (singular points) is modelled"
                    )));
                }
                Some(match spec.family() {
                    Family::B => {
                        if p == 2 {
                            return Err(Error::UnsupportedGeometry(
                                "B in characteristic 2".into(),
                            ));
                        }
                        FormKind::ParabolicQuadric
                    }
                    Family::C => FormKind::Symplectic,
                    _ => FormKind::HyperbolicQuadric,
                })
            }
            _ => {
                return Err(Error::UnsupportedGeometry(format!(
                    "no concrete geometry for {spec}"
                )))
            }
        };
        let field = FiniteField::new(p, t)?;
        let cotype_k = system.opposite_type(&cotype)?;
        let form = form_kind.map(|k| PolarForm::new(k, l, &field));
        let problem = GeometryProblem {
            system,
            field,
            cotype_j: cotype,
            cotype_k,
            form,
        };
        let count = problem.expected_count();
        if count > MAX_OBJECTS as u128 {
            return Err(Error::SizeCapExceeded {
                count: usize::try_from(count).unwrap_or(usize::MAX),
                cap: MAX_OBJECTS,
            });
        }
        Ok(problem)
    }

    pub fn system(&self) -> &RootSystem {
        &self.system
    }

    pub fn field(&self) -> &FiniteField {
        &self.field
    }

    pub fn q(&self) -> u64 {
        self.field.q() as u64
    }

    pub fn cotype_j(&self) -> &TypeSet {
        &self.cotype_j
    }

    pub fn cotype_k(&self) -> &TypeSet {
        &self.cotype_k
    }

    pub fn form(&self) -> Option<&PolarForm> {
        self.form.as_ref()
    }

    /// Dimension of the ambient vector space.
    pub fn ambient_dim(&self) -> usize {
        match &self.form {
            Some(f) => f.dim(),
            None => self.system.rank() + 1,
        }
    }

    pub fn w_star_length(&self) -> usize {
        self.system.w_star_length(&self.cotype_j)
    }

    /// `q^{ℓ(w*)}`, the number of objects opposite a given one.
    pub fn expected_row_sum(&self) -> u64 {
        self.q().pow(self.w_star_length() as u32)
    }

    /// Closed-form object count for either cotype.
    pub fn expected_count(&self) -> u128 {
        let q = self.q() as u128;
        let l = self.system.rank() as u32;
        match self.form.as_ref().map(PolarForm::kind) {
            None => {
                let n = self.system.rank() + 1;
                let mut dims = self.cotype_j.complement(self.system.rank()).nodes().to_vec();
                dims.push(n);
                let mut prev = 0;
                let mut count = 1u128;
                for d in dims {
                    count = count.saturating_mul(gaussian_binomial(n - prev, d - prev, q));
                    prev = d;
                }
                count
            }
            Some(FormKind::ParabolicQuadric) | Some(FormKind::Symplectic) => {
                (q.pow(2 * l) - 1) / (q - 1)
            }
            Some(FormKind::HyperbolicQuadric) => (q.pow(l - 1) + 1) * (q.pow(l) - 1) / (q - 1),
        }
    }

    /// Type of the objects of a cotype: the complement, as subspace
    /// dimensions for type A.
    fn dims_of(&self, cotype: &TypeSet) -> Vec<usize> {
        cotype.complement(self.system.rank()).nodes().to_vec()
    }

    /// Objects of cotype `J`, sorted by canonical matrices.
    pub fn enumerate_objects(&self) -> Result<Vec<Flag>> {
        self.enumerate_cotype(&self.cotype_j)
    }

    /// Objects of cotype `K`, the type opposite to `J`.
    pub fn enumerate_opposite_objects(&self) -> Result<Vec<Flag>> {
        self.enumerate_cotype(&self.cotype_k)
    }

    fn enumerate_cotype(&self, cotype: &TypeSet) -> Result<Vec<Flag>> {
        let n = self.ambient_dim();
        let field = &self.field;
        let mut objects = match &self.form {
            Some(form) => enumerate_subspaces(field, n, 1)
                .into_iter()
                .filter(|s| form.is_singular(field, &s.rows()[0]))
                .map(|s| Flag(vec![s]))
                .collect::<Vec<_>>(),
            None => {
                let dims = self.dims_of(cotype);
                let mut flags = vec![Flag(Vec::new())];
                for d in dims {
                    let candidates = enumerate_subspaces(field, n, d);
                    let mut next = Vec::new();
                    for flag in &flags {
                        for s in &candidates {
                            if flag.0.last().is_none_or(|last| s.contains(field, last)) {
                                let mut parts = flag.0.clone();
                                parts.push(s.clone());
                                next.push(Flag(parts));
                            }
                        }
                    }
                    flags = next;
                }
                flags
            }
        };
        objects.sort();
        if objects.len() as u128 != self.expected_count() {
            return Err(Error::Consistency(format!(
                "enumerated {} objects, expected {}",
                objects.len(),
                self.expected_count()
            )));
        }
        Ok(objects)
    }

    /// Oppositeness of `x` (cotype `J`) and `y` (cotype `K`).
    pub fn is_opposite(&self, x: &Flag, y: &Flag) -> Result<bool> {
        match &self.form {
            Some(_) => {
                if x.dims() != [1] || y.dims() != [1] {
                    return Err(Error::MismatchedTypes);
                }
            }
            None => {
                if x.dims() != self.dims_of(&self.cotype_j) || y.dims() != self.dims_of(&self.cotype_k)
                {
                    return Err(Error::MismatchedTypes);
                }
            }
        }
        Ok(self.opposite_unchecked(x, y))
    }

    fn opposite_unchecked(&self, x: &Flag, y: &Flag) -> bool {
        let field = &self.field;
        match &self.form {
            Some(form) => form.bilinear(field, &x.0[0].rows()[0], &y.0[0].rows()[0]) != 0,
            None => {
                let n = self.ambient_dim();
                let m = x.0.len();
                // V_{i_j} is matched with the component of dimension ℓ+1−i_j
                (0..m).all(|j| {
                    let u = &x.0[j];
                    let w = &y.0[m - 1 - j];
                    debug_assert_eq!(u.dim() + w.dim(), n);
                    u.intersection_dim(field, w) == 0
                })
            }
        }
    }

    /// Builds the 0/1 oppositeness matrix, checking that every row and
    /// column sum equals `q^{ℓ(w*)}`.
    pub fn build_incidence(&self) -> Result<IncidenceMatrix> {
        let rows = self.enumerate_objects()?;
        let cols = self.enumerate_opposite_objects()?;
        if rows.len() != cols.len() {
            return Err(Error::Consistency(format!(
                "{} objects of cotype {} but {} of cotype {}",
                rows.len(),
                self.cotype_j,
                cols.len(),
                self.cotype_k
            )));
        }
        let ncols = cols.len();
        let mut data = vec![0u8; rows.len() * ncols];
        if ncols > 0 {
            data.par_chunks_mut(ncols)
                .zip(rows.par_iter())
                .for_each(|(row, x)| {
                    for (entry, y) in row.iter_mut().zip(&cols) {
                        *entry = u8::from(self.opposite_unchecked(x, y));
                    }
                });
        }
        let m = IncidenceMatrix {
            family: self.system.spec().family(),
            rank: self.system.rank(),
            p: self.field.p(),
            q: self.q(),
            cotype_j: self.cotype_j.clone(),
            cotype_k: self.cotype_k.clone(),
            nrows: rows.len(),
            ncols,
            data,
            row_labels: rows,
            col_labels: cols,
        };
        m.check_line_sums(self.expected_row_sum())?;
        Ok(m)
    }
}

/// Dense 0/1 matrix of the oppositeness relation, rows indexed by objects of
/// cotype `J` and columns by objects of cotype `K`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IncidenceMatrix {
    pub family: Family,
    pub rank: usize,
    pub p: u64,
    pub q: u64,
    pub cotype_j: TypeSet,
    pub cotype_k: TypeSet,
    nrows: usize,
    ncols: usize,
    data: Vec<u8>,
    row_labels: Vec<Flag>,
    col_labels: Vec<Flag>,
}

impl IncidenceMatrix {
    /// A matrix without object labels, e.g. one read back from disk.
    pub fn from_rows(
        family: Family,
        rank: usize,
        q: u64,
        cotype_j: TypeSet,
        cotype_k: TypeSet,
        rows: Vec<Vec<u8>>,
    ) -> Result<Self> {
        let (p, _) = crate::jantzen::prime_power_parts(q)
            .ok_or_else(|| Error::MatrixFormat(format!("q = {q} is not a prime power")))?;
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(Error::MatrixFormat("ragged rows".into()));
        }
        if rows.iter().flatten().any(|&x| x > 1) {
            return Err(Error::MatrixFormat("entries must be 0 or 1".into()));
        }
        Ok(IncidenceMatrix {
            family,
            rank,
            p,
            q,
            cotype_j,
            cotype_k,
            nrows,
            ncols,
            data: rows.into_iter().flatten().collect(),
            row_labels: Vec::new(),
            col_labels: Vec::new(),
        })
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn get(&self, i: usize, j: usize) -> u8 {
        self.data[i * self.ncols + j]
    }

    pub fn row(&self, i: usize) -> &[u8] {
        &self.data[i * self.ncols..(i + 1) * self.ncols]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[u8]> {
        (0..self.nrows).map(move |i| self.row(i))
    }

    pub fn row_labels(&self) -> &[Flag] {
        &self.row_labels
    }

    pub fn col_labels(&self) -> &[Flag] {
        &self.col_labels
    }

    pub fn row_sums(&self) -> Vec<u64> {
        self.rows()
            .map(|r| r.iter().map(|&x| u64::from(x)).sum())
            .collect()
    }

    pub fn col_sums(&self) -> Vec<u64> {
        let mut sums = vec![0u64; self.ncols];
        for r in self.rows() {
            for (s, &x) in sums.iter_mut().zip(r) {
                *s += u64::from(x);
            }
        }
        sums
    }

    /// Fails unless every row and column sums to `expected`.
    pub fn check_line_sums(&self, expected: u64) -> Result<()> {
        if let Some((i, s)) = self.row_sums().into_iter().enumerate().find(|&(_, s)| s != expected) {
            return Err(Error::Consistency(format!(
                "row {i} sums to {s}, expected {expected}"
            )));
        }
        if let Some((j, s)) = self.col_sums().into_iter().enumerate().find(|&(_, s)| s != expected) {
            return Err(Error::Consistency(format!(
                "column {j} sums to {s}, expected {expected}"
            )));
        }
        Ok(())
    }

    pub fn is_symmetric(&self) -> bool {
        self.nrows == self.ncols
            && (0..self.nrows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn transpose(&self) -> IncidenceMatrix {
        let mut data = vec![0u8; self.data.len()];
        for i in 0..self.nrows {
            for j in 0..self.ncols {
                data[j * self.nrows + i] = self.get(i, j);
            }
        }
        IncidenceMatrix {
            family: self.family,
            rank: self.rank,
            p: self.p,
            q: self.q,
            cotype_j: self.cotype_k.clone(),
            cotype_k: self.cotype_j.clone(),
            nrows: self.ncols,
            ncols: self.nrows,
            data,
            row_labels: self.col_labels.clone(),
            col_labels: self.row_labels.clone(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn problem(name: &str, p: u64, t: u32, cotype: &[usize]) -> GeometryProblem {
        let spec: RootSystemSpec = name.parse().unwrap();
        GeometryProblem::new(spec, p, t, TypeSet::new(cotype.to_vec(), spec.rank()).unwrap())
            .unwrap()
    }

    #[test]
    fn object_counts() {
        assert_eq!(problem("A2", 2, 1, &[2]).enumerate_objects().unwrap().len(), 7);
        assert_eq!(problem("A3", 2, 1, &[1, 3]).enumerate_objects().unwrap().len(), 35);
        assert_eq!(problem("C2", 3, 1, &[2]).enumerate_objects().unwrap().len(), 40);
        // full flags of PG(2,2): 7 points × 3 lines through each
        assert_eq!(problem("A2", 2, 1, &[]).enumerate_objects().unwrap().len(), 21);
        let a2: RootSystemSpec = "A2".parse().unwrap();
        assert_eq!(
            GeometryProblem::new(a2, 4, 1, TypeSet::empty()).unwrap_err(),
            Error::NotPrime(4)
        );
        // D3 quadric points over GF(2): (2^2+1)(2^3−1) = 35
        assert_eq!(problem("D3", 2, 1, &[2, 3]).enumerate_objects().unwrap().len(), 35);
        assert_eq!(problem("D4", 2, 1, &[2, 3, 4]).enumerate_objects().unwrap().len(), 135);
        // B2 parabolic quadric over GF(3): (3^4−1)/2 = 40
        assert_eq!(problem("B2", 3, 1, &[2]).enumerate_objects().unwrap().len(), 40);
        assert_eq!(problem("B3", 3, 1, &[2, 3]).enumerate_objects().unwrap().len(), 364);
        assert_eq!(problem("C3", 2, 1, &[2, 3]).enumerate_objects().unwrap().len(), 63);
    }

    #[test]
    fn unsupported_combinations() {
        let spec: RootSystemSpec = "C2".parse().unwrap();
        let lines = TypeSet::new(vec![1], 2).unwrap();
        assert!(matches!(
            GeometryProblem::new(spec, 2, 1, lines),
            Err(Error::UnsupportedGeometry(_))
        ));
        let b2: RootSystemSpec = "B2".parse().unwrap();
        assert!(matches!(
            GeometryProblem::new(b2, 2, 1, TypeSet::new(vec![2], 2).unwrap()),
            Err(Error::UnsupportedGeometry(_))
        ));
        let e6: RootSystemSpec = "E6".parse().unwrap();
        assert!(matches!(
            GeometryProblem::new(e6, 2, 1, TypeSet::new(vec![2, 3, 4, 5, 6], 6).unwrap()),
            Err(Error::UnsupportedGeometry(_))
        ));
        let a8: RootSystemSpec = "A8".parse().unwrap();
        assert!(matches!(
            GeometryProblem::new(a8, 3, 1, TypeSet::empty()),
            Err(Error::SizeCapExceeded { .. })
        ));
    }

    #[test]
    fn opposite_examples() {
        let pr = problem("A2", 2, 1, &[2]);
        let f = pr.field();
        let point = Flag(vec![Subspace::span(f, 3, &[vec![1, 0, 0]])]);
        let line = Flag(vec![Subspace::span(f, 3, &[vec![1, 0, 0], vec![0, 1, 0]])]);
        let far_line = Flag(vec![Subspace::span(f, 3, &[vec![0, 0, 1], vec![0, 1, 0]])]);
        assert!(!pr.is_opposite(&point, &line).unwrap());
        assert!(pr.is_opposite(&point, &far_line).unwrap());
        assert_eq!(pr.is_opposite(&line, &point), Err(Error::MismatchedTypes));

        let sp = problem("C2", 3, 1, &[2]);
        let f = sp.field();
        let e1 = Flag(vec![Subspace::span(f, 4, &[vec![1, 0, 0, 0]])]);
        let f1 = Flag(vec![Subspace::span(f, 4, &[vec![0, 0, 1, 0]])]);
        assert_eq!(sp.form().unwrap().bilinear(f, &[1, 0, 0, 0], &[0, 0, 1, 0]), 1);
        assert!(sp.is_opposite(&e1, &f1).unwrap());
        for x in sp.enumerate_objects().unwrap() {
            assert!(!sp.is_opposite(&x, &x).unwrap());
        }
    }

    #[test]
    fn small_matrices() {
        let a1 = problem("A1", 3, 1, &[]).build_incidence().unwrap();
        assert_eq!(a1.nrows(), 4);
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(a1.get(i, j), u8::from(i != j));
            }
        }
        let fano = problem("A2", 2, 1, &[2]).build_incidence().unwrap();
        assert_eq!((fano.nrows(), fano.ncols()), (7, 7));
        assert!(fano.row_sums().iter().all(|&s| s == 4));
        let c2 = problem("C2", 2, 1, &[2]).build_incidence().unwrap();
        assert_eq!((c2.nrows(), c2.ncols()), (15, 15));
        assert!(c2.row_sums().iter().all(|&s| s == 8));
    }

    #[test]
    fn line_sums_symmetry_and_transpose() {
        let cases: &[(&str, u64, u32, &[usize])] = &[
            ("A1", 2, 1, &[]),
            ("A1", 2, 2, &[]),
            ("A2", 2, 1, &[1]),
            ("A2", 2, 1, &[]),
            ("A2", 3, 1, &[2]),
            ("A2", 2, 2, &[2]),
            ("A2", 2, 1, &[1, 2]),
            ("A3", 2, 1, &[1, 3]),
            ("A3", 2, 1, &[2, 3]),
            ("A3", 2, 1, &[2]),
            ("A4", 2, 1, &[2, 3, 4]),
            ("B2", 3, 1, &[2]),
            ("B3", 3, 1, &[2, 3]),
            ("C2", 2, 1, &[2]),
            ("C2", 3, 1, &[2]),
            ("C3", 2, 1, &[2, 3]),
            ("D3", 2, 1, &[2, 3]),
            ("D4", 2, 1, &[2, 3, 4]),
            ("D4", 3, 1, &[2, 3, 4]),
        ];
        for &(name, p, t, cot) in cases {
            let pr = problem(name, p, t, cot);
            let m = pr.build_incidence().unwrap();
            let q = pr.expected_row_sum();
            assert!(m.col_sums().iter().all(|&s| s == q), "{name} {cot:?}");
            if pr.cotype_j() == pr.cotype_k() {
                assert!(m.is_symmetric(), "{name} {cot:?}");
                // only the empty flag is opposite itself
                let self_opposite = m.nrows() == 1;
                assert!((0..m.nrows()).all(|i| (m.get(i, i) == 1) == self_opposite));
            } else {
                let spec: RootSystemSpec = name.parse().unwrap();
                let swapped = GeometryProblem::new(spec, p, t, pr.cotype_k().clone())
                    .unwrap()
                    .build_incidence()
                    .unwrap();
                assert_eq!(swapped, m.transpose(), "{name} {cot:?}");
            }
        }
    }

    #[test]
    fn labels_sorted_and_distinct() {
        let m = problem("A2", 3, 1, &[2]).build_incidence().unwrap();
        assert!(m.row_labels().windows(2).all(|w| w[0] < w[1]));
        assert!(m.col_labels().windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn forms_print_reproducibly() {
        let b = problem("B2", 3, 1, &[2]);
        let g = b.form().unwrap().gram();
        assert_eq!(g[0][0], 2);
        assert_eq!(g[1][3], 1);
        assert_eq!(g[3][1], 1);
        let c = problem("C2", 3, 1, &[2]);
        let g = c.form().unwrap().gram();
        assert_eq!((g[0][2], g[2][0]), (1, 2));
    }
}
