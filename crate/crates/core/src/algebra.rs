//! Commutative algebras given by structure constants.
//!
//! A [`StructureAlgebra`] stores the full symmetric table of basis products.
//! Elements are coordinate vectors; linear maps act on columns, so column
//! `j` of a [`LinearMap`] is the image of basis element `j`.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use thiserror::Error;

use crate::expr::{self, ExprError};
use crate::linalg::{self, Matrix};
use crate::scalars::{Field, Scalar, ScalarError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("generator list is empty")]
    EmptyGenerators,
    #[error("the ideal is the whole algebra")]
    NotProperIdeal,
    #[error("duplicate basis name `{0}`")]
    DuplicateName(String),
    #[error("invalid basis name `{0}`")]
    BadName(String),
    #[error("unknown basis element `{0}`")]
    UnknownBasis(String),
    #[error("conflicting entries for the product {0}*{1}")]
    ConflictingProduct(String, String),
    #[error("coefficient {0} does not lie in the algebra's field")]
    FieldMismatch(String),
    #[error("the given vectors do not form a basis")]
    NotABasis,
    #[error(transparent)]
    Expr(#[from] ExprError),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

/// A coordinate vector with respect to the basis of some algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Element {
    coords: Vec<Scalar>,
}

impl Element {
    pub fn new(coords: Vec<Scalar>) -> Self {
        Self { coords }
    }

    pub fn zero(field: &Field, dim: usize) -> Self {
        Self::new(vec![field.zero(); dim])
    }

    pub fn basis(field: &Field, dim: usize, i: usize) -> Self {
        let mut v = Self::zero(field, dim);
        v.coords[i] = field.one();
        v
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<Scalar> {
        self.coords
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Scalar::is_zero)
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        Self::new(self.coords.iter().map(|x| c * x).collect())
    }

    /// `sum_i c_i v_i` over a nonempty list.
    pub fn combination(terms: &[(Scalar, &Element)]) -> Self {
        let mut it = terms.iter();
        let (c, v) = it.next().expect("at least one term");
        let mut acc = v.scale(c);
        for (c, v) in it {
            acc = &acc + &v.scale(c);
        }
        acc
    }

    pub fn map(&self, f: impl Fn(&Scalar) -> Result<Scalar, ScalarError>) -> Result<Self, ScalarError> {
        Ok(Self::new(self.coords.iter().map(f).collect::<Result<_, _>>()?))
    }
}

impl std::ops::Index<usize> for Element {
    type Output = Scalar;
    fn index(&self, i: usize) -> &Scalar {
        &self.coords[i]
    }
}

impl Add for &Element {
    type Output = Element;
    fn add(self, rhs: &Element) -> Element {
        assert_eq!(self.dim(), rhs.dim(), "element dimensions differ");
        Element::new(self.coords.iter().zip(&rhs.coords).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Element {
    type Output = Element;
    fn sub(self, rhs: &Element) -> Element {
        assert_eq!(self.dim(), rhs.dim(), "element dimensions differ");
        Element::new(self.coords.iter().zip(&rhs.coords).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Element {
    type Output = Element;
    fn neg(self) -> Element {
        Element::new(self.coords.iter().map(|a| -a).collect())
    }
}

impl Add for Element {
    type Output = Element;
    fn add(self, rhs: Element) -> Element {
        &self + &rhs
    }
}

impl Sub for Element {
    type Output = Element;
    fn sub(self, rhs: Element) -> Element {
        &self - &rhs
    }
}

impl Neg for Element {
    type Output = Element;
    fn neg(self) -> Element {
        -&self
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearMap {
    matrix: Matrix,
}

impl LinearMap {
    pub fn from_matrix(matrix: Matrix) -> Self {
        let n = matrix.len();
        assert!(matrix.iter().all(|r| r.len() == n), "linear maps are square");
        Self { matrix }
    }

    /// The map sending basis element `j` to `images[j]`.
    pub fn from_images(images: &[Element]) -> Self {
        let n = images.len();
        let matrix = (0..n)
            .map(|i| images.iter().map(|v| v[i].clone()).collect())
            .collect();
        Self::from_matrix(matrix)
    }

    pub fn identity(field: &Field, n: usize) -> Self {
        Self::from_matrix(linalg::identity(field, n))
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.len()
    }

    pub fn apply(&self, v: &Element) -> Element {
        let field = v.coords.first().map(Scalar::field).unwrap_or(Field::Rational);
        Element::new(linalg::mat_vec(&field, &self.matrix, &v.coords))
    }

    pub fn image_of_basis(&self, j: usize) -> Element {
        Element::new(self.matrix.iter().map(|row| row[j].clone()).collect())
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &LinearMap, field: &Field) -> LinearMap {
        LinearMap::from_matrix(linalg::mat_mul(field, &self.matrix, &other.matrix))
    }

    pub fn inverse(&self, field: &Field) -> Option<LinearMap> {
        linalg::inverse(field, &self.matrix).map(LinearMap::from_matrix)
    }

    pub fn is_identity(&self) -> bool {
        self.matrix.iter().enumerate().all(|(i, row)| {
            row.iter()
                .enumerate()
                .all(|(j, x)| if i == j { x.is_one() } else { x.is_zero() })
        })
    }

    pub fn is_invertible(&self) -> bool {
        linalg::rank(&self.matrix, self.dim()) == self.dim()
    }

    /// `self - c * id`.
    pub fn shifted(&self, c: &Scalar) -> LinearMap {
        let mut m = self.matrix.clone();
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = &row[i] - c;
        }
        LinearMap::from_matrix(m)
    }
}

/// A finite-dimensional commutative algebra over a [`Field`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureAlgebra {
    field: Field,
    names: Vec<String>,
    products: Vec<Vec<Element>>,
}

fn valid_name(s: &str) -> bool {
    let mut chars = s.chars();
    chars.next().is_some_and(|c| c.is_ascii_alphabetic())
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl StructureAlgebra {
    /// The algebra with the given basis and all products zero.
    pub fn zero_algebra<S: AsRef<str>>(field: Field, names: &[S]) -> Result<Self, AlgebraError> {
        let names: Vec<String> = names.iter().map(|s| s.as_ref().to_string()).collect();
        for (i, n) in names.iter().enumerate() {
            if !valid_name(n) {
                return Err(AlgebraError::BadName(n.clone()));
            }
            if names[..i].contains(n) {
                return Err(AlgebraError::DuplicateName(n.clone()));
            }
        }
        let dim = names.len();
        let zero = Element::zero(&field, dim);
        Ok(Self {
            products: vec![vec![zero; dim]; dim],
            field,
            names,
        })
    }

    /// Builds an algebra from `(i, j, b_i b_j)` entries. Unlisted pairs are
    /// zero; listing both `(i, j)` and `(j, i)` is allowed when they agree.
    pub fn from_products<S: AsRef<str>>(
        field: Field,
        names: &[S],
        entries: Vec<(usize, usize, Element)>,
    ) -> Result<Self, AlgebraError> {
        let mut alg = Self::zero_algebra(field, names)?;
        let n = alg.dim();
        let mut seen = vec![vec![false; n]; n];
        for (i, j, v) in entries {
            if i >= n || j >= n {
                return Err(AlgebraError::DimensionMismatch {
                    expected: n,
                    found: i.max(j) + 1,
                });
            }
            alg.check_element(&v)?;
            if seen[i][j] && alg.products[i][j] != v {
                return Err(AlgebraError::ConflictingProduct(
                    alg.names[i].clone(),
                    alg.names[j].clone(),
                ));
            }
            seen[i][j] = true;
            seen[j][i] = true;
            alg.products[i][j] = v.clone();
            alg.products[j][i] = v;
        }
        Ok(alg)
    }

    /// Builds an algebra from `(x, y, "expression")` entries naming basis
    /// elements, with expressions in the coefficient grammar.
    pub fn from_table<S: AsRef<str>>(
        field: Field,
        names: &[S],
        entries: &[(&str, &str, &str)],
    ) -> Result<Self, AlgebraError> {
        let base = Self::zero_algebra(field.clone(), names)?;
        let mut parsed = Vec::new();
        for (x, y, e) in entries {
            let i = base.index_of(x)?;
            let j = base.index_of(y)?;
            parsed.push((i, j, base.parse_element(e)?));
        }
        Self::from_products(field, names, parsed)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Result<usize, AlgebraError> {
        self.names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| AlgebraError::UnknownBasis(name.to_string()))
    }

    pub fn basis_element(&self, i: usize) -> Element {
        Element::basis(&self.field, self.dim(), i)
    }

    pub fn basis(&self) -> Vec<Element> {
        (0..self.dim()).map(|i| self.basis_element(i)).collect()
    }

    /// Basis element by name; panics on unknown names.
    pub fn e(&self, name: &str) -> Element {
        self.basis_element(self.index_of(name).expect("known basis name"))
    }

    pub fn zero(&self) -> Element {
        Element::zero(&self.field, self.dim())
    }

    pub fn element(&self, coords: Vec<Scalar>) -> Result<Element, AlgebraError> {
        let v = Element::new(coords);
        self.check_element(&v)?;
        Ok(v)
    }

    fn check_element(&self, v: &Element) -> Result<(), AlgebraError> {
        if v.dim() != self.dim() {
            return Err(AlgebraError::DimensionMismatch {
                expected: self.dim(),
                found: v.dim(),
            });
        }
        if let Some(x) = v.coords.iter().find(|x| !self.field.contains(x)) {
            return Err(AlgebraError::FieldMismatch(x.to_string()));
        }
        Ok(())
    }

    /// Parses a linear combination of basis names, e.g. `"1/3*s1 - d2"`.
    pub fn parse_element(&self, text: &str) -> Result<Element, AlgebraError> {
        Ok(Element::new(expr::parse(text)?.eval_element(&self.field, &self.names)?))
    }

    pub fn product_of_basis(&self, i: usize, j: usize) -> &Element {
        &self.products[i][j]
    }

    pub fn multiply(&self, x: &Element, y: &Element) -> Result<Element, AlgebraError> {
        for v in [x, y] {
            if v.dim() != self.dim() {
                return Err(AlgebraError::DimensionMismatch {
                    expected: self.dim(),
                    found: v.dim(),
                });
            }
        }
        let n = self.dim();
        let mut acc = vec![self.field.zero(); n];
        for i in 0..n {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if y[j].is_zero() {
                    continue;
                }
                let c = &x[i] * &y[j];
                for (a, p) in acc.iter_mut().zip(&self.products[i][j].coords) {
                    if !p.is_zero() {
                        *a = &*a + &(&c * p);
                    }
                }
            }
        }
        Ok(Element::new(acc))
    }

    /// [`multiply`](Self::multiply) for operands known to belong here.
    pub fn mul(&self, x: &Element, y: &Element) -> Element {
        self.multiply(x, y).expect("operands belong to the algebra")
    }

    pub fn adjoint(&self, a: &Element) -> LinearMap {
        let images: Vec<Element> = self.basis().iter().map(|b| self.mul(a, b)).collect();
        LinearMap::from_images(&images)
    }

    /// Basis of `ker(m - λ id)` in reduced echelon form.
    pub fn eigenspace(&self, m: &LinearMap, lambda: &Scalar) -> Vec<Element> {
        let shifted = m.shifted(lambda);
        linalg::kernel(&self.field, shifted.matrix(), self.dim())
            .into_iter()
            .map(Element::new)
            .collect()
    }

    /// Echelon basis of the span of `vectors`.
    pub fn span(&self, vectors: &[Element]) -> Vec<Element> {
        let rows: Matrix = vectors.iter().map(|v| v.coords.clone()).collect();
        linalg::row_basis(&rows, self.dim())
            .into_iter()
            .map(Element::new)
            .collect()
    }

    pub fn in_span(&self, span: &[Element], v: &Element) -> bool {
        self.coordinates(span, v).is_some()
    }

    /// Coefficients expressing `v` in terms of `span`, if possible.
    pub fn coordinates(&self, span: &[Element], v: &Element) -> Option<Vec<Scalar>> {
        let rows: Matrix = span.iter().map(|s| s.coords.clone()).collect();
        linalg::coordinates(&self.field, &rows, &v.coords)
    }

    /// Basis of the smallest subalgebra containing `gens`.
    pub fn subalgebra_closure(&self, gens: &[Element]) -> Result<Vec<Element>, AlgebraError> {
        if gens.is_empty() {
            return Err(AlgebraError::EmptyGenerators);
        }
        let mut basis = self.span(gens);
        loop {
            let mut candidates = basis.clone();
            for (i, x) in basis.iter().enumerate() {
                for y in &basis[i..] {
                    candidates.push(self.mul(x, y));
                }
            }
            let next = self.span(&candidates);
            if next.len() == basis.len() {
                return Ok(basis);
            }
            basis = next;
        }
    }

    /// Basis of the ideal generated by `gens`.
    pub fn ideal_closure(&self, gens: &[Element]) -> Result<Vec<Element>, AlgebraError> {
        if gens.is_empty() {
            return Err(AlgebraError::EmptyGenerators);
        }
        let all = self.basis();
        let mut basis = self.span(gens);
        loop {
            let mut candidates = basis.clone();
            for x in &basis {
                for b in &all {
                    candidates.push(self.mul(x, b));
                }
            }
            let next = self.span(&candidates);
            if next.len() == basis.len() {
                return Ok(basis);
            }
            basis = next;
        }
    }

    /// The identity element, when one exists.
    pub fn find_identity(&self) -> Option<Element> {
        let n = self.dim();
        // unknown e = sum_k e_k b_k; equations (e b_i)_r = delta_{ir}
        let mut rows = Vec::with_capacity(n * n);
        let mut rhs = Vec::with_capacity(n * n);
        for i in 0..n {
            for r in 0..n {
                rows.push((0..n).map(|k| self.products[k][i][r].clone()).collect());
                rhs.push(if i == r { self.field.one() } else { self.field.zero() });
            }
        }
        linalg::solve(&self.field, &rows, &rhs, n).map(Element::new)
    }

    /// Elements annihilating the whole algebra.
    pub fn annihilator(&self) -> Vec<Element> {
        let n = self.dim();
        let mut rows = Vec::with_capacity(n * n);
        for i in 0..n {
            for r in 0..n {
                rows.push((0..n).map(|k| self.products[k][i][r].clone()).collect());
            }
        }
        linalg::kernel(&self.field, &rows, n)
            .into_iter()
            .map(Element::new)
            .collect()
    }

    /// Quotient by the ideal generated by `ideal_gens`.
    ///
    /// The ideal is echelonized with pivots taken from the last coordinate
    /// backwards, so the complement basis consists of the earliest basis
    /// elements and keeps their names.
    pub fn quotient(&self, ideal_gens: &[Element]) -> Result<(StructureAlgebra, QuotientMap), AlgebraError> {
        let ideal = self.ideal_closure(ideal_gens)?;
        let n = self.dim();
        if ideal.len() == n {
            return Err(AlgebraError::NotProperIdeal);
        }
        let reversed: Matrix = ideal
            .iter()
            .map(|v| v.coords.iter().rev().cloned().collect())
            .collect();
        let (rows, rev_pivots) = linalg::rref(reversed, n);
        let rows: Matrix = rows
            .into_iter()
            .map(|r| r.into_iter().rev().collect())
            .collect();
        let pivots: Vec<usize> = rev_pivots.iter().map(|p| n - 1 - p).collect();
        let kept: Vec<usize> = (0..n).filter(|i| !pivots.contains(i)).collect();
        let map = QuotientMap {
            rows,
            pivots,
            kept: kept.clone(),
        };
        let names: Vec<&str> = kept.iter().map(|&i| self.names[i].as_str()).collect();
        let mut entries = Vec::new();
        for (a, &i) in kept.iter().enumerate() {
            for (b, &j) in kept.iter().enumerate().skip(a) {
                entries.push((a, b, map.project(&self.products[i][j])));
            }
        }
        let q = StructureAlgebra::from_products(self.field.clone(), &names, entries)?;
        Ok((q, map))
    }

    /// Appends a new basis element `name` acting as an identity.
    pub fn adjoin_identity(&self, name: &str) -> Result<StructureAlgebra, AlgebraError> {
        let mut names = self.names.clone();
        names.push(name.to_string());
        let n = self.dim() + 1;
        let pad = |v: &Element| {
            let mut c = v.coords.clone();
            c.push(self.field.zero());
            Element::new(c)
        };
        let mut entries = Vec::new();
        for i in 0..self.dim() {
            for j in i..self.dim() {
                entries.push((i, j, pad(&self.products[i][j])));
            }
            entries.push((i, n - 1, Element::basis(&self.field, n, i)));
        }
        entries.push((n - 1, n - 1, Element::basis(&self.field, n, n - 1)));
        StructureAlgebra::from_products(self.field.clone(), &names, entries)
    }

    pub fn renamed<S: AsRef<str>>(&self, names: &[S]) -> Result<StructureAlgebra, AlgebraError> {
        if names.len() != self.dim() {
            return Err(AlgebraError::DimensionMismatch {
                expected: self.dim(),
                found: names.len(),
            });
        }
        let mut out = Self::zero_algebra(self.field.clone(), names)?;
        out.products = self.products.clone();
        Ok(out)
    }

    /// The same algebra written in a new basis. `new_basis[k]` becomes the
    /// basis element named `names[k]`.
    pub fn change_basis<S: AsRef<str>>(
        &self,
        new_basis: &[Element],
        names: &[S],
    ) -> Result<StructureAlgebra, AlgebraError> {
        let n = self.dim();
        if new_basis.len() != n || names.len() != n {
            return Err(AlgebraError::DimensionMismatch {
                expected: n,
                found: new_basis.len().min(names.len()),
            });
        }
        let to_old = LinearMap::from_images(new_basis);
        let to_new = to_old.inverse(&self.field).ok_or(AlgebraError::NotABasis)?;
        let mut entries = Vec::new();
        for i in 0..n {
            for j in i..n {
                let p = self.mul(&new_basis[i], &new_basis[j]);
                entries.push((i, j, to_new.apply(&p)));
            }
        }
        StructureAlgebra::from_products(self.field.clone(), names, entries)
    }

    /// Applies `f` to every structure constant, landing in `target`.
    pub fn map_coefficients(
        &self,
        target: &Field,
        f: impl Fn(&Scalar) -> Result<Scalar, ScalarError>,
    ) -> Result<StructureAlgebra, AlgebraError> {
        let mut out = Self::zero_algebra(target.clone(), &self.names)?;
        for i in 0..self.dim() {
            for j in 0..self.dim() {
                out.products[i][j] = self.products[i][j].map(&f)?;
            }
        }
        Ok(out)
    }

    /// Evaluates a function-field algebra at the given symbol values.
    pub fn specialize(
        &self,
        target: &Field,
        assignment: &[(&str, Scalar)],
    ) -> Result<StructureAlgebra, AlgebraError> {
        self.map_coefficients(target, |x| x.eval(assignment, target))
    }

    /// True iff `m` is invertible and `m(xy) = m(x)m(y)` on basis pairs.
    pub fn check_linear_map_is_isomorphism(
        &self,
        target: &StructureAlgebra,
        m: &LinearMap,
    ) -> Result<bool, AlgebraError> {
        if self.dim() != target.dim() || m.dim() != self.dim() {
            return Err(AlgebraError::DimensionMismatch {
                expected: self.dim(),
                found: if m.dim() != self.dim() { m.dim() } else { target.dim() },
            });
        }
        if !m.is_invertible() {
            return Ok(false);
        }
        let images: Vec<Element> = (0..self.dim()).map(|j| m.image_of_basis(j)).collect();
        for i in 0..self.dim() {
            for j in i..self.dim() {
                let lhs = m.apply(&self.products[i][j]);
                let rhs = target.mul(&images[i], &images[j]);
                if lhs != rhs {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    pub fn is_automorphism(&self, m: &LinearMap) -> bool {
        m.dim() == self.dim() && self.check_linear_map_is_isomorphism(self, m).unwrap_or(false)
    }

    /// Tries to extend `gens[k] -> images[k]` to an algebra homomorphism by
    /// following products of generators. Returns the linear map when the
    /// generators span this algebra as an algebra and every linear relation
    /// among the words is respected by the images. The result is not checked
    /// for multiplicativity beyond the words visited.
    pub fn extend_from_generators(
        &self,
        gens: &[Element],
        images: &[Element],
        target: &StructureAlgebra,
    ) -> Option<LinearMap> {
        assert_eq!(gens.len(), images.len());
        let mut src: Vec<Element> = Vec::new();
        let mut img: Vec<Element> = Vec::new();
        let mut frontier: Vec<(Element, Element)> =
            gens.iter().cloned().zip(images.iter().cloned()).collect();
        while !frontier.is_empty() {
            let mut added = Vec::new();
            for (s, t) in frontier {
                match self.coordinates(&src, &s) {
                    Some(c) => {
                        let expected = if src.is_empty() {
                            target.zero()
                        } else {
                            combine(&img, &c, target)
                        };
                        if expected != t {
                            return None;
                        }
                    }
                    None => {
                        src.push(s.clone());
                        img.push(t.clone());
                        added.push((s, t));
                    }
                }
            }
            let mut next = Vec::new();
            for (s, t) in &added {
                for (u, v) in src.iter().zip(&img) {
                    next.push((self.mul(s, u), target.mul(t, v)));
                }
            }
            frontier = next;
        }
        if src.len() != self.dim() {
            return None;
        }
        // m(src_k) = img_k, so M = Img * Src^{-1}
        let s_inv = LinearMap::from_images(&src).inverse(&self.field)?;
        let i_map = LinearMap::from_images(&img);
        Some(i_map.compose(&s_inv, &self.field))
    }

    /// Renders `v` as a linear combination of basis names.
    pub fn format_element(&self, v: &Element) -> String {
        format_combination(&self.names, v.coords())
    }
}

fn combine(vectors: &[Element], coeffs: &[Scalar], alg: &StructureAlgebra) -> Element {
    let mut acc = alg.zero();
    for (v, c) in vectors.iter().zip(coeffs) {
        if !c.is_zero() {
            acc = &acc + &v.scale(c);
        }
    }
    acc
}

/// Formats `sum c_i names_i` in the coefficient grammar, so the output
/// parses back to the same element.
pub fn format_combination(names: &[String], coords: &[Scalar]) -> String {
    let mut out = String::new();
    for (name, c) in names.iter().zip(coords) {
        if c.is_zero() {
            continue;
        }
        let text = c.to_string();
        let (negative, magnitude) = match c {
            Scalar::Rational(q) if *q < num_traits::Zero::zero() => (true, (-c).to_string()),
            Scalar::Function(_) if text.starts_with('-') && !text.contains('+') && !text.contains(" - ") => {
                (true, (-c).to_string())
            }
            _ => (false, text),
        };
        if out.is_empty() {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        if magnitude == "1" {
            out.push_str(name);
        } else {
            out.push_str(&magnitude);
            out.push('*');
            out.push_str(name);
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Projection onto the complement basis of a quotient.
#[derive(Clone, Debug)]
pub struct QuotientMap {
    rows: Matrix,
    pivots: Vec<usize>,
    kept: Vec<usize>,
}

impl QuotientMap {
    /// Indices (in the parent algebra) of the basis elements kept.
    pub fn kept(&self) -> &[usize] {
        &self.kept
    }

    pub fn project(&self, v: &Element) -> Element {
        let mut c = v.coords.clone();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if c[p].is_zero() {
                continue;
            }
            let f = c[p].clone();
            for (x, r) in c.iter_mut().zip(row) {
                if !r.is_zero() {
                    *x = &*x - &(&f * r);
                }
            }
        }
        Element::new(self.kept.iter().map(|&i| c[i].clone()).collect())
    }
}

impl fmt::Display for StructureAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "algebra over {} with basis {}", self.field, self.names.join(", "))?;
        for i in 0..self.dim() {
            for j in i..self.dim() {
                writeln!(
                    f,
                    "  {} * {} = {}",
                    self.names[i],
                    self.names[j],
                    self.format_element(&self.products[i][j])
                )?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_b() -> StructureAlgebra {
        StructureAlgebra::from_table(Field::Rational, &["a", "b"], &[("a", "a", "a"), ("b", "b", "b")]).unwrap()
    }

    #[test]
    fn adjoint_in_2b() {
        let alg = two_b();
        let m = alg.adjoint(&alg.e("a"));
        assert_eq!(m.apply(&alg.e("a")), alg.e("a"));
        assert!(m.apply(&alg.e("b")).is_zero());
        assert!(alg.adjoint(&alg.zero()).matrix().iter().flatten().all(Scalar::is_zero));
    }

    #[test]
    fn flip_is_automorphism_of_2b() {
        let alg = two_b();
        let flip = LinearMap::from_images(&[alg.e("b"), alg.e("a")]);
        assert!(alg.is_automorphism(&flip));
        let bad = LinearMap::from_images(&[alg.e("a"), &alg.e("a") + &alg.e("b")]);
        assert!(!alg.is_automorphism(&bad));
    }

    #[test]
    fn quotient_of_2b_by_a() {
        let alg = two_b();
        let (q, map) = alg.quotient(&[alg.e("a")]).unwrap();
        assert_eq!(q.dim(), 1);
        assert_eq!(q.names(), ["b"]);
        assert_eq!(map.project(&alg.e("b")), q.e("b"));
        assert!(matches!(
            alg.quotient(&[alg.e("a"), alg.e("b")]),
            Err(AlgebraError::NotProperIdeal)
        ));
        let (copy, _) = alg.quotient(&[alg.zero()]).unwrap();
        assert_eq!(copy, alg);
    }

    #[test]
    fn adjoined_identity_is_found() {
        let zero = StructureAlgebra::zero_algebra(Field::Rational, &["a"]).unwrap();
        let with_one = zero.adjoin_identity("one").unwrap();
        assert_eq!(with_one.find_identity(), Some(with_one.e("one")));
        assert_eq!(with_one.mul(&with_one.e("one"), &with_one.e("a")), with_one.e("a"));
        assert!(zero.find_identity().is_none());
    }

    #[test]
    fn closure_rejects_empty_generators() {
        let alg = two_b();
        assert!(matches!(alg.subalgebra_closure(&[]), Err(AlgebraError::EmptyGenerators)));
        assert_eq!(alg.subalgebra_closure(&[alg.e("a")]).unwrap(), vec![alg.e("a")]);
    }

    #[test]
    fn format_parses_back() {
        let alg = StructureAlgebra::zero_algebra(Field::Rational, &["x", "y", "z"]).unwrap();
        let v = alg.parse_element("-1/2*x + y - 3*z").unwrap();
        let s = alg.format_element(&v);
        assert_eq!(s, "-1/2*x + y - 3*z");
        assert_eq!(alg.parse_element(&s).unwrap(), v);
        assert_eq!(alg.format_element(&alg.zero()), "0");
    }

    #[test]
    fn bad_tables_are_rejected() {
        assert!(matches!(
            StructureAlgebra::zero_algebra(Field::Rational, &["a", "a"]),
            Err(AlgebraError::DuplicateName(_))
        ));
        assert!(matches!(
            StructureAlgebra::from_table(Field::Rational, &["a", "b"], &[("a", "b", "a"), ("b", "a", "b")]),
            Err(AlgebraError::ConflictingProduct(..))
        ));
        assert!(matches!(
            StructureAlgebra::from_table(Field::Rational, &["a"], &[("a", "q", "a")]),
            Err(AlgebraError::UnknownBasis(_))
        ));
    }
}
