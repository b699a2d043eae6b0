//! Axis verification, projections and Miyamoto involutions.

use thiserror::Error;

use crate::algebra::{Element, LinearMap, StructureAlgebra};
use crate::fusion::{FusionLaw, Grading};
use crate::scalars::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AxisError {
    #[error("the element is not idempotent")]
    NotIdempotent,
    #[error("the adjoint is not semisimple over the fusion law's eigenvalues")]
    NotSemisimple,
    #[error("the 1-eigenspace is not spanned by the axis")]
    NotPrimitive,
    #[error("the fusion law admits no C2-grading")]
    NoGrading,
    #[error("the induced involution is not an automorphism")]
    NotAutomorphism,
}

/// A product `A_λ A_μ` leaving the span of `A_{λ⋆μ}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FusionViolation {
    pub lambda: Scalar,
    pub mu: Scalar,
    pub witness: Element,
}

/// Diagnostics for the four axis axioms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxisReport {
    pub is_idempotent: bool,
    pub spectrum_ok: bool,
    pub eigenspace_bases: Vec<(Scalar, Vec<Element>)>,
    pub fusion_violations: Vec<FusionViolation>,
    pub is_primitive: bool,
}

impl AxisReport {
    pub fn fusion_ok(&self) -> bool {
        self.fusion_violations.is_empty()
    }

    /// A1 through A4.
    pub fn is_axis(&self) -> bool {
        self.is_idempotent && self.spectrum_ok && self.fusion_ok() && self.is_primitive
    }

    /// A1 through A3 without A4.
    pub fn is_nonprimitive_axis(&self) -> bool {
        self.is_idempotent && self.spectrum_ok && self.fusion_ok() && !self.is_primitive
    }

    pub fn eigenspace(&self, lambda: &Scalar) -> Option<&[Element]> {
        self.eigenspace_bases
            .iter()
            .find(|(l, _)| l == lambda)
            .map(|(_, b)| b.as_slice())
    }

    /// Names of the failed axioms, in order.
    pub fn failures(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        if !self.is_idempotent {
            out.push("A1");
        }
        if !self.spectrum_ok {
            out.push("A2");
        }
        if !self.fusion_ok() {
            out.push("A3");
        }
        if !self.is_primitive {
            out.push("A4");
        }
        out
    }
}

pub fn verify_axis(alg: &StructureAlgebra, a: &Element, law: &FusionLaw) -> AxisReport {
    let is_idempotent = alg.mul(a, a) == *a;
    let ad = alg.adjoint(a);
    let eigenspace_bases: Vec<(Scalar, Vec<Element>)> = law
        .eigenvalues()
        .iter()
        .map(|l| (l.clone(), alg.eigenspace(&ad, l)))
        .collect();
    let total: usize = eigenspace_bases.iter().map(|(_, b)| b.len()).sum();
    let spectrum_ok = total == alg.dim();
    let is_primitive = eigenspace_bases
        .iter()
        .find(|(l, _)| l.is_one())
        .is_some_and(|(_, b)| b.len() == 1 && alg.in_span(b, a) && !a.is_zero());

    let mut fusion_violations = Vec::new();
    let n = law.len();
    for i in 0..n {
        for j in i..n {
            let allowed: Vec<Element> = law
                .star(i, j)
                .iter()
                .flat_map(|&k| eigenspace_bases[k].1.iter().cloned())
                .collect();
            let witness = eigenspace_bases[i].1.iter().find_map(|u| {
                eigenspace_bases[j].1.iter().find_map(|v| {
                    let p = alg.mul(u, v);
                    (!alg.in_span(&allowed, &p)).then_some(p)
                })
            });
            if let Some(witness) = witness {
                fusion_violations.push(FusionViolation {
                    lambda: law.eigenvalues()[i].clone(),
                    mu: law.eigenvalues()[j].clone(),
                    witness,
                });
            }
        }
    }
    AxisReport {
        is_idempotent,
        spectrum_ok,
        eigenspace_bases,
        fusion_violations,
        is_primitive,
    }
}

/// Components of an element in the eigenspaces of an axis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentDecomposition {
    pub parts: Vec<(Scalar, Element)>,
}

impl ComponentDecomposition {
    pub fn component(&self, lambda: &Scalar) -> Option<&Element> {
        self.parts.iter().find(|(l, _)| l == lambda).map(|(_, v)| v)
    }

    pub fn sum(&self) -> Element {
        let mut it = self.parts.iter().map(|(_, v)| v);
        let first = it.next().expect("at least one eigenvalue").clone();
        it.fold(first, |acc, v| &acc + v)
    }
}

/// An eigenbasis of `ad_a` over the eigenvalues of a fusion law.
#[derive(Clone, Debug)]
pub struct Eigenbasis {
    values: Vec<Scalar>,
    owner: Vec<usize>,
    vectors: Vec<Element>,
    to_eigen: LinearMap,
}

impl Eigenbasis {
    pub fn new(alg: &StructureAlgebra, a: &Element, law: &FusionLaw) -> Result<Self, AxisError> {
        let ad = alg.adjoint(a);
        let mut owner = Vec::new();
        let mut vectors = Vec::new();
        for (k, l) in law.eigenvalues().iter().enumerate() {
            for v in alg.eigenspace(&ad, l) {
                owner.push(k);
                vectors.push(v);
            }
        }
        if vectors.len() != alg.dim() {
            return Err(AxisError::NotSemisimple);
        }
        let to_eigen = LinearMap::from_images(&vectors)
            .inverse(alg.field())
            .ok_or(AxisError::NotSemisimple)?;
        Ok(Self {
            values: law.eigenvalues().to_vec(),
            owner,
            vectors,
            to_eigen,
        })
    }

    pub fn vectors(&self) -> &[Element] {
        &self.vectors
    }

    pub fn decompose(&self, v: &Element) -> ComponentDecomposition {
        let coords = self.to_eigen.apply(v);
        let field = v[0].field();
        let parts = self
            .values
            .iter()
            .enumerate()
            .map(|(k, l)| {
                let mut acc = Element::zero(&field, v.dim());
                for (idx, vec) in self.vectors.iter().enumerate() {
                    if self.owner[idx] == k && !coords[idx].is_zero() {
                        acc = &acc + &vec.scale(&coords[idx]);
                    }
                }
                (l.clone(), acc)
            })
            .collect();
        ComponentDecomposition { parts }
    }
}

/// `λ_a(v)`: the coefficient of `a` in the decomposition of `v`.
pub fn projection(
    alg: &StructureAlgebra,
    a: &Element,
    law: &FusionLaw,
    v: &Element,
) -> Result<Scalar, AxisError> {
    if alg.mul(a, a) != *a {
        return Err(AxisError::NotIdempotent);
    }
    let basis = Eigenbasis::new(alg, a, law)?;
    let one = alg.field().one();
    let ones = alg.eigenspace(&alg.adjoint(a), &one);
    if ones.len() != 1 {
        return Err(AxisError::NotPrimitive);
    }
    let part = basis.decompose(v);
    let c = alg
        .coordinates(std::slice::from_ref(a), part.component(&one).expect("1 is an eigenvalue"))
        .ok_or(AxisError::NotPrimitive)?;
    Ok(c[0].clone())
}

/// The Miyamoto involution of an axis together with its source.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MiyamotoMap {
    pub map: LinearMap,
    pub axis: Element,
}

impl MiyamotoMap {
    pub fn apply(&self, v: &Element) -> Element {
        self.map.apply(v)
    }

    pub fn is_trivial(&self) -> bool {
        self.map.is_identity()
    }
}

/// `τ_a`: `+1` on even eigenspaces, `-1` on odd ones. Uses `grading` when
/// given, otherwise the law's preferred C2-grading. The result is checked
/// to be an involutive automorphism.
pub fn miyamoto(
    alg: &StructureAlgebra,
    a: &Element,
    law: &FusionLaw,
    grading: Option<&Grading>,
) -> Result<MiyamotoMap, AxisError> {
    let found;
    let grading = match grading {
        Some(g) => g,
        None => {
            found = law.find_c2_grading().ok_or(AxisError::NoGrading)?;
            &found
        }
    };
    let basis = Eigenbasis::new(alg, a, law)?;
    let images: Vec<Element> = alg
        .basis()
        .iter()
        .map(|b| {
            let d = basis.decompose(b);
            let mut acc = alg.zero();
            for (k, (_, part)) in d.parts.iter().enumerate() {
                acc = if grading.is_odd(k) { &acc - part } else { &acc + part };
            }
            acc
        })
        .collect();
    let map = LinearMap::from_images(&images);
    if !map.compose(&map, alg.field()).is_identity() || !alg.is_automorphism(&map) {
        return Err(AxisError::NotAutomorphism);
    }
    Ok(MiyamotoMap {
        map,
        axis: a.clone(),
    })
}

pub fn is_automorphism(alg: &StructureAlgebra, m: &LinearMap) -> bool {
    alg.is_automorphism(m)
}

/// Pairs `(x, u)` of a basis element and a vector of `A_0(a) ∪ {a}` for
/// which `a(xu) ≠ (ax)u`. Empty when the partial associativity holds.
pub fn seress_failures(alg: &StructureAlgebra, a: &Element) -> Vec<(Element, Element)> {
    let zero = alg.field().zero();
    let mut us = alg.eigenspace(&alg.adjoint(a), &zero);
    us.push(a.clone());
    let mut out = Vec::new();
    for x in alg.basis() {
        for u in &us {
            let lhs = alg.mul(a, &alg.mul(&x, u));
            let rhs = alg.mul(&alg.mul(a, &x), u);
            if lhs != rhs {
                out.push((x.clone(), u.clone()));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fusion::{make_jordan, make_monster};
    use crate::scalars::Field;

    fn q2() -> StructureAlgebra {
        StructureAlgebra::from_table(
            Field::Rational,
            &["s1", "s2", "d1", "d2"],
            &[
                ("s1", "s1", "s1"),
                ("s2", "s2", "s2"),
                ("d1", "d1", "d1"),
                ("d2", "d2", "d2"),
                ("s1", "d1", "1/3*s1 + 1/6*d1 - 1/6*d2"),
                ("s1", "d2", "1/3*s1 - 1/6*d1 + 1/6*d2"),
                ("s2", "d1", "1/3*s2 + 1/6*d1 - 1/6*d2"),
                ("s2", "d2", "1/3*s2 - 1/6*d1 + 1/6*d2"),
                ("d1", "d2", "-1/3*s1 - 1/3*s2 + 1/3*d1 + 1/3*d2"),
            ],
        )
        .unwrap()
    }

    #[test]
    fn s1_is_a_jordan_axis() {
        let alg = q2();
        let law = make_monster(&Scalar::rational(1, 3), &Scalar::rational(2, 3)).unwrap();
        let r = verify_axis(&alg, &alg.e("s1"), &law);
        assert!(r.is_axis(), "{:?}", r.failures());
        assert!(r.eigenspace(&Scalar::rational(2, 3)).unwrap().is_empty());
        let tau = miyamoto(&alg, &alg.e("s1"), &law, None).unwrap();
        assert!(tau.is_trivial());
        let j = make_jordan(&Scalar::rational(1, 3)).unwrap();
        assert!(verify_axis(&alg, &alg.e("s1"), &j).is_axis());
    }

    #[test]
    fn non_idempotent_reports_a1() {
        let alg = q2();
        let law = make_jordan(&Scalar::rational(1, 3)).unwrap();
        let v = alg.parse_element("s1 + d1").unwrap();
        let r = verify_axis(&alg, &v, &law);
        assert!(!r.is_idempotent);
        assert_eq!(r.failures()[0], "A1");
    }

    #[test]
    fn projection_of_axis_and_zero_vector() {
        let alg = q2();
        let law = make_monster(&Scalar::rational(1, 3), &Scalar::rational(2, 3)).unwrap();
        let s1 = alg.e("s1");
        assert!(projection(&alg, &s1, &law, &s1).unwrap().is_one());
        let zero = alg.field().zero();
        let z = alg.eigenspace(&alg.adjoint(&s1), &zero);
        assert!(projection(&alg, &s1, &law, &z[0]).unwrap().is_zero());
    }
}
