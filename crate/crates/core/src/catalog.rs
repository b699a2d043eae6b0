//! Constructors for the algebras of the skew classification.
//!
//! Basis orders are fixed:
//! - `2B`: a, b
//! - `3C(α)`: x, y, z
//! - `3C(-1)^×`: y, z
//! - `3C(-1, 2)` (built on `3C(2)`): u, v, w
//! - `Q2(1/3)`: s1, s2, d1, d2
//! - `Q2(1/3)^×` over F5: x, y, z, and `one` when the identity is adjoined
//! - the orthogonal-case table: b, c, a, f
//! - the generic skew algebra: a, b, c, sigma

use thiserror::Error;

use crate::algebra::{AlgebraError, Element, StructureAlgebra};
use crate::fusion::{miyamoto_laws, FusionError, FusionLaw, LawSpec};
use crate::scalars::{Field, Scalar, ScalarError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("degenerate parameter: {0}")]
    DegenerateParameter(String),
    #[error("{name} is not available in characteristic {characteristic}")]
    BadCharacteristic { name: String, characteristic: u64 },
    #[error("unknown catalog entry `{0}`")]
    UnknownName(String),
    #[error("`{0}` needs a parameter")]
    MissingParameter(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Fusion(#[from] FusionError),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

/// An element declared as an axis of a given law.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeclaredAxis {
    pub name: String,
    pub element: Element,
    pub law: LawSpec,
}

/// An algebra together with its distinguished axes. For the skew
/// constructions the Monster axis comes first and the Jordan axis second.
#[derive(Clone, Debug)]
pub struct Construction {
    pub name: String,
    pub algebra: StructureAlgebra,
    pub axes: Vec<DeclaredAxis>,
}

impl Construction {
    pub fn axis(&self, name: &str) -> Option<&DeclaredAxis> {
        self.axes.iter().find(|a| a.name == name)
    }

    pub fn axis_element(&self, name: &str) -> Element {
        self.axis(name)
            .unwrap_or_else(|| panic!("{} has no axis {name}", self.name))
            .element
            .clone()
    }

    /// Laws for Miyamoto involutions; see [`miyamoto_laws`].
    pub fn miyamoto_laws(&self) -> Result<Vec<FusionLaw>, FusionError> {
        let specs: Vec<LawSpec> = self.axes.iter().map(|a| a.law.clone()).collect();
        miyamoto_laws(&specs)
    }

    /// Declared axes paired with their Miyamoto laws, ready for
    /// [`crate::axets::realize_axet`].
    pub fn generators(&self) -> Result<Vec<(Element, FusionLaw)>, FusionError> {
        Ok(self
            .axes
            .iter()
            .map(|a| a.element.clone())
            .zip(self.miyamoto_laws()?)
            .collect())
    }

    /// `(α, β)` of the first Monster axis.
    pub fn monster_parameters(&self) -> Option<(Scalar, Scalar)> {
        self.axes.iter().find_map(|a| match &a.law {
            LawSpec::Monster(x, y) => Some((x.clone(), y.clone())),
            LawSpec::Jordan(_) => None,
        })
    }
}

fn axis(name: &str, element: Element, law: LawSpec) -> DeclaredAxis {
    DeclaredAxis {
        name: name.to_string(),
        element,
        law,
    }
}

fn require_char(field: &Field, name: &str, bad: &[u64]) -> Result<(), CatalogError> {
    let p = field.characteristic();
    if bad.contains(&p) {
        return Err(CatalogError::BadCharacteristic {
            name: name.to_string(),
            characteristic: p,
        });
    }
    Ok(())
}

fn require_char_eq(field: &Field, name: &str, p: u64) -> Result<(), CatalogError> {
    if field.characteristic() != p {
        return Err(CatalogError::BadCharacteristic {
            name: name.to_string(),
            characteristic: field.characteristic(),
        });
    }
    Ok(())
}

fn excluded(x: &Scalar, field: &Field, values: &[(i64, i64)], what: &str) -> Result<(), CatalogError> {
    for &(n, d) in values {
        if *x == field.frac(n, d) {
            return Err(CatalogError::DegenerateParameter(format!("{what} = {x}")));
        }
    }
    Ok(())
}

/// `2B`: two orthogonal idempotents. Both are declared `J(η)`-axes.
pub fn make_2b(field: &Field, eta: &Scalar) -> Result<Construction, CatalogError> {
    let algebra = StructureAlgebra::from_table(field.clone(), &["a", "b"], &[("a", "a", "a"), ("b", "b", "b")])?;
    Ok(Construction {
        name: "2B".into(),
        axes: vec![
            axis("a", algebra.e("a"), LawSpec::Jordan(eta.clone())),
            axis("b", algebra.e("b"), LawSpec::Jordan(eta.clone())),
        ],
        algebra,
    })
}

/// `3C(α)` on x, y, z with `xy = (α/2)(x + y - z)` and cyclic.
pub fn make_3c(field: &Field, alpha: &Scalar) -> Result<Construction, CatalogError> {
    excluded(alpha, field, &[(0, 1), (1, 1)], "alpha")?;
    let names = ["x", "y", "z"];
    let base = StructureAlgebra::zero_algebra(field.clone(), &names)?;
    let half = &field.frac(1, 2) * alpha;
    let mut entries = Vec::new();
    for i in 0..3 {
        entries.push((i, i, base.basis_element(i)));
        for j in i + 1..3 {
            let k = 3 - i - j;
            let v = &(&base.basis_element(i) + &base.basis_element(j)) - &base.basis_element(k);
            entries.push((i, j, v.scale(&half)));
        }
    }
    let algebra = StructureAlgebra::from_products(field.clone(), &names, entries)?;
    let axes = names
        .iter()
        .map(|n| axis(n, algebra.e(n), LawSpec::Jordan(alpha.clone())))
        .collect();
    Ok(Construction {
        name: format!("3C({alpha})"),
        algebra,
        axes,
    })
}

/// `3C(-1)^×`: the 2-dimensional quotient of `3C(-1)`, `yz = -y - z`.
pub fn make_3cx_minus1(field: &Field) -> Result<Construction, CatalogError> {
    let algebra = StructureAlgebra::from_table(
        field.clone(),
        &["y", "z"],
        &[("y", "y", "y"), ("z", "z", "z"), ("y", "z", "-y - z")],
    )?;
    let m1 = field.from_integer(-1);
    Ok(Construction {
        name: "3C(-1)^x".into(),
        axes: vec![
            axis("y", algebra.e("y"), LawSpec::Jordan(m1.clone())),
            axis("z", algebra.e("z"), LawSpec::Jordan(m1)),
        ],
        algebra,
    })
}

/// `3C(α, 1-α)`: `3C(α)` generated by `w = 𝟙 - x` (an `M(α, 1-α)`-axis)
/// and `y` (a `J(α)`-axis).
pub fn make_3c_skew(field: &Field, alpha: &Scalar) -> Result<Construction, CatalogError> {
    excluded(alpha, field, &[(0, 1), (1, 1), (1, 2), (-1, 1)], "alpha")?;
    let base = make_3c(field, alpha)?;
    let alg = base.algebra;
    let one = alg.find_identity().ok_or_else(|| CatalogError::DegenerateParameter(format!("3C({alpha}) has no identity")))?;
    let w = &one - &alg.e("x");
    let beta = &field.one() - alpha;
    Ok(Construction {
        name: format!("3C({alpha},{beta})"),
        axes: vec![
            axis("w", w, LawSpec::Monster(alpha.clone(), beta)),
            axis("y", alg.e("y"), LawSpec::Jordan(alpha.clone())),
        ],
        algebra: alg,
    })
}

/// `3C(-1, 2)`: `3C(2)` on u, v, w generated by `w` (an `M(-1, 2)`-axis)
/// and `y = 𝟙 - u` (a `J(-1)`-axis).
pub fn make_3c_minus1_2(field: &Field) -> Result<Construction, CatalogError> {
    require_char(field, "3C(-1,2)", &[3])?;
    let two = field.from_integer(2);
    let alg = make_3c(field, &two)?.algebra.renamed(&["u", "v", "w"])?;
    let one = Element::combination(&[
        (field.frac(1, 3), &alg.e("u")),
        (field.frac(1, 3), &alg.e("v")),
        (field.frac(1, 3), &alg.e("w")),
    ]);
    let y = &one - &alg.e("u");
    let m1 = field.from_integer(-1);
    Ok(Construction {
        name: "3C(-1,2)".into(),
        axes: vec![
            axis("w", alg.e("w"), LawSpec::Monster(m1.clone(), two)),
            axis("y", y, LawSpec::Jordan(m1)),
        ],
        algebra: alg,
    })
}

/// The `Q2(1/3)` multiplication table, as `(x, y, product)` rows.
pub const Q2_THIRD_TABLE: [(&str, &str, &str); 10] = [
    ("s1", "s1", "s1"),
    ("s1", "s2", "0"),
    ("s1", "d1", "1/3*s1 + 1/6*d1 - 1/6*d2"),
    ("s1", "d2", "1/3*s1 - 1/6*d1 + 1/6*d2"),
    ("s2", "s2", "s2"),
    ("s2", "d1", "1/3*s2 + 1/6*d1 - 1/6*d2"),
    ("s2", "d2", "1/3*s2 - 1/6*d1 + 1/6*d2"),
    ("d1", "d1", "d1"),
    ("d1", "d2", "-1/3*s1 - 1/3*s2 + 1/3*d1 + 1/3*d2"),
    ("d2", "d2", "d2"),
];
pub const Q2_THIRD_BASIS: [&str; 4] = ["s1", "s2", "d1", "d2"];

/// `Q2(1/3)x ⊕ <𝟙>` over F5.
pub const Q2X_ONE_TABLE: [(&str, &str, &str); 10] = [
    ("x", "x", "x"),
    ("x", "y", "0"),
    ("x", "z", "3*x + y + 2*z"),
    ("x", "one", "x"),
    ("y", "y", "y"),
    ("y", "z", "x + 3*y + 2*z"),
    ("y", "one", "y"),
    ("z", "z", "z"),
    ("z", "one", "z"),
    ("one", "one", "one"),
];
pub const Q2X_ONE_BASIS: [&str; 4] = ["x", "y", "z", "one"];

/// The four-dimensional algebra of the orthogonal case.
pub const TABLE6: [(&str, &str, &str); 10] = [
    ("b", "b", "b"),
    ("b", "c", "0"),
    ("b", "a", "2/3*b + 1/6*a - 1/6*f"),
    ("b", "f", "2/3*b - 1/6*a + 1/6*f"),
    ("c", "c", "c"),
    ("c", "a", "2/3*c + 1/6*a - 1/6*f"),
    ("c", "f", "2/3*c - 1/6*a + 1/6*f"),
    ("a", "a", "a"),
    ("a", "f", "2/3*b + 2/3*c - 1/3*a - 1/3*f"),
    ("f", "f", "f"),
];
pub const TABLE6_BASIS: [&str; 4] = ["b", "c", "a", "f"];

/// Builds an algebra from a literal table. Used by the constructors and by
/// the fidelity checks, which feed in perturbed copies.
pub fn algebra_from_literal(
    field: &Field,
    names: &[&str],
    table: &[(&str, &str, &str)],
) -> Result<StructureAlgebra, CatalogError> {
    Ok(StructureAlgebra::from_table(field.clone(), names, table)?)
}

/// `Q2(1/3)`. Single axes s1, s2 are `J(1/3)`-axes and double axes d1, d2
/// are `M(2/3, 1/3)`-axes.
pub fn make_q2_third(field: &Field) -> Result<Construction, CatalogError> {
    require_char(field, "Q2(1/3)", &[3])?;
    let algebra = algebra_from_literal(field, &Q2_THIRD_BASIS, &Q2_THIRD_TABLE)?;
    let third = field.frac(1, 3);
    let m = LawSpec::Monster(field.frac(2, 3), third.clone());
    Ok(Construction {
        name: "Q2(1/3)".into(),
        axes: vec![
            axis("s1", algebra.e("s1"), LawSpec::Jordan(third.clone())),
            axis("s2", algebra.e("s2"), LawSpec::Jordan(third)),
            axis("d1", algebra.e("d1"), m.clone()),
            axis("d2", algebra.e("d2"), m),
        ],
        algebra,
    })
}

/// `𝟙 = (3/5)(s1 + s2 + d1 + d2)` in `Q2(1/3)`.
pub fn q2_identity(alg: &StructureAlgebra) -> Element {
    let sum = Q2_THIRD_BASIS.iter().fold(alg.zero(), |acc, n| &acc + &alg.e(n));
    sum.scale(&alg.field().frac(3, 5))
}

/// `Q2(1/3, 2/3)`: `Q2(1/3)` generated by `t1 = 𝟙 - d1` (an
/// `M(1/3, 2/3)`-axis) and `s1` (a `J(1/3)`-axis).
pub fn make_q2_skew(field: &Field) -> Result<Construction, CatalogError> {
    require_char(field, "Q2(1/3,2/3)", &[3, 5])?;
    let algebra = make_q2_third(field)?.algebra;
    let one = q2_identity(&algebra);
    let t1 = &one - &algebra.e("d1");
    Ok(Construction {
        name: "Q2(1/3,2/3)".into(),
        axes: vec![
            axis("t1", t1, LawSpec::Monster(field.frac(1, 3), field.frac(2, 3))),
            axis("s1", algebra.e("s1"), LawSpec::Jordan(field.frac(1, 3))),
        ],
        algebra,
    })
}

/// `t2 = 𝟙 - d2` in `Q2(1/3)`.
pub fn q2_t2(alg: &StructureAlgebra) -> Element {
    &q2_identity(alg) - &alg.e("d2")
}

fn f5() -> Field {
    Field::prime(5).expect("5 is prime")
}

/// `Q2(1/3)^×` over F5 on x, y, z: x and y are `J(1/3)`-axes, z is an
/// `M(2/3, 1/3)`-axis.
pub fn make_q2x(field: &Field) -> Result<Construction, CatalogError> {
    require_char_eq(field, "Q2(1/3)^x", 5)?;
    let table: Vec<(&str, &str, &str)> = Q2X_ONE_TABLE
        .iter()
        .copied()
        .filter(|(x, y, _)| *x != "one" && *y != "one")
        .collect();
    let algebra = algebra_from_literal(field, &Q2X_ONE_BASIS[..3], &table)?;
    let third = field.frac(1, 3);
    Ok(Construction {
        name: "Q2(1/3)^x".into(),
        axes: vec![
            axis("x", algebra.e("x"), LawSpec::Jordan(third.clone())),
            axis("z", algebra.e("z"), LawSpec::Monster(field.frac(2, 3), third.clone())),
            axis("y", algebra.e("y"), LawSpec::Jordan(third)),
        ],
        algebra,
    })
}

/// `Q2(1/3)^× ⊕ <𝟙>` over F5, generated by `w = 𝟙 - z` (an
/// `M(1/3, 2/3)`-axis) and `x` (a `J(1/3)`-axis).
pub fn make_q2x_plus_one(field: &Field) -> Result<Construction, CatalogError> {
    require_char_eq(field, "Q2(1/3)^x+1", 5)?;
    let algebra = algebra_from_literal(field, &Q2X_ONE_BASIS, &Q2X_ONE_TABLE)?;
    let w = &algebra.e("one") - &algebra.e("z");
    Ok(Construction {
        name: "Q2(1/3)^x+1".into(),
        axes: vec![
            axis("w", w, LawSpec::Monster(field.frac(1, 3), field.frac(2, 3))),
            axis("x", algebra.e("x"), LawSpec::Jordan(field.frac(1, 3))),
        ],
        algebra,
    })
}

/// The same algebra over F5 obtained from `Q2(1/3)` by factoring out the
/// radical `<s1 + s2 + d1 + d2>` and adjoining an identity, renamed to
/// x, y, z, one.
pub fn q2x_plus_one_via_quotient() -> Result<StructureAlgebra, CatalogError> {
    let q2 = make_q2_third(&f5())?.algebra;
    let rad = &(&q2.e("s1") + &q2.e("s2")) + &(&q2.e("d1") + &q2.e("d2"));
    let (quot, _) = q2.quotient(&[rad])?;
    Ok(quot.renamed(&["x", "y", "z"])?.adjoin_identity("one")?)
}

/// The orthogonal-case algebra on b, c, a, f, generated by `a` (an
/// `M(1/3, 2/3)`-axis) and `b` (a `J(1/3)`-axis).
pub fn make_table6(field: &Field) -> Result<Construction, CatalogError> {
    require_char(field, "table6", &[3])?;
    let algebra = algebra_from_literal(field, &TABLE6_BASIS, &TABLE6)?;
    Ok(Construction {
        name: "table6".into(),
        axes: vec![
            axis("a", algebra.e("a"), LawSpec::Monster(field.frac(1, 3), field.frac(2, 3))),
            axis("b", algebra.e("b"), LawSpec::Jordan(field.frac(1, 3))),
        ],
        algebra,
    })
}

/// Labels of the two-generated algebras with a `J(α)`-axis and a
/// `J(β)`-axis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RehrenLabel {
    TwoB,
    ThreeC { alpha: Scalar, beta: Scalar },
    ThreeCMinusOneTwo,
}

/// Lookup of the possible isomorphism types of `<<p, q>>` for a
/// `J(α)`-axis `p` and a `J(β)`-axis `q`. Not a proof: it encodes the
/// known classification, where anything other than `2B` forces `α + β = 1`.
pub fn rehren_oracle(alpha: &Scalar, beta: &Scalar) -> Result<Vec<RehrenLabel>, CatalogError> {
    let f = alpha.field();
    for x in [alpha, beta] {
        if x.is_zero() || x.is_one() {
            return Err(CatalogError::DegenerateParameter(format!("{x}")));
        }
    }
    if alpha == beta {
        return Err(CatalogError::DegenerateParameter(format!("alpha = beta = {alpha}")));
    }
    let mut out = vec![RehrenLabel::TwoB];
    if (alpha + beta).is_one() {
        let minus_one = f.from_integer(-1);
        if *alpha == minus_one || *beta == minus_one {
            out.push(RehrenLabel::ThreeCMinusOneTwo);
        } else {
            out.push(RehrenLabel::ThreeC {
                alpha: alpha.clone(),
                beta: beta.clone(),
            });
        }
    }
    Ok(out)
}

impl std::fmt::Display for RehrenLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            RehrenLabel::TwoB => f.write_str("2B"),
            RehrenLabel::ThreeC { alpha, beta } => write!(f, "3C({alpha},{beta})"),
            RehrenLabel::ThreeCMinusOneTwo => f.write_str("3C(-1,2)"),
        }
    }
}

/// Parameters of the generic skew algebra and the constants derived from
/// them. All values live in one field; [`SkewConstants::generic`] uses free
/// symbols.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkewConstants {
    pub alpha: Scalar,
    pub beta: Scalar,
    pub l1: Scalar,
    pub l1f: Scalar,
    pub l2f: Scalar,
    pub zeta: Scalar,
    pub theta: Scalar,
    pub kappa: Scalar,
}

impl SkewConstants {
    pub fn generic() -> Self {
        let f = Field::skew_symbols();
        let s = |n: &str| f.symbol(n).expect("skew symbol");
        Self {
            alpha: s("alpha"),
            beta: s("beta"),
            l1: s("l1"),
            l1f: s("l1f"),
            l2f: s("l2f"),
            zeta: s("zeta"),
            theta: s("theta"),
            kappa: s("kappa"),
        }
    }

    pub fn field(&self) -> Field {
        self.alpha.field()
    }

    fn k(&self, n: i64) -> Scalar {
        self.field().from_integer(n)
    }

    fn half(&self) -> Scalar {
        self.field().frac(1, 2)
    }

    /// Same constants with λ₁ and λ₁^f exchanged.
    pub fn flipped(&self) -> Self {
        Self {
            l1: self.l1f.clone(),
            l1f: self.l1.clone(),
            ..self.clone()
        }
    }

    /// Applies `f` to every parameter.
    pub fn map(&self, f: impl Fn(&Scalar) -> Result<Scalar, ScalarError>) -> Result<Self, ScalarError> {
        Ok(Self {
            alpha: f(&self.alpha)?,
            beta: f(&self.beta)?,
            l1: f(&self.l1)?,
            l1f: f(&self.l1f)?,
            l2f: f(&self.l2f)?,
            zeta: f(&self.zeta)?,
            theta: f(&self.theta)?,
            kappa: f(&self.kappa)?,
        })
    }

    fn gamma_of(&self, l: &Scalar) -> Scalar {
        &self.beta - l
    }

    fn epsilon_of(&self, l: &Scalar) -> Scalar {
        &(&(&self.k(1) - &self.alpha) * l) - &self.beta
    }

    fn delta_of(&self, l: &Scalar) -> Scalar {
        let t = &(&(&self.alpha - &self.beta) - &self.k(1)) * &self.beta;
        &(&(&self.k(1) - &self.alpha) * l) + &t
    }

    pub fn gamma(&self) -> Scalar {
        self.gamma_of(&self.l1)
    }

    pub fn epsilon(&self) -> Scalar {
        self.epsilon_of(&self.l1)
    }

    pub fn delta(&self) -> Scalar {
        self.delta_of(&self.l1)
    }

    pub fn gamma_f(&self) -> Scalar {
        self.gamma_of(&self.l1f)
    }

    pub fn epsilon_f(&self) -> Scalar {
        self.epsilon_of(&self.l1f)
    }

    pub fn delta_f(&self) -> Scalar {
        self.delta_of(&self.l1f)
    }

    /// `α - β`.
    pub fn amb(&self) -> Scalar {
        &self.alpha - &self.beta
    }

    /// `[2(α-1)λ₁ + 2αλ₁^f + α(1-2α)] / (α-β)`.
    pub fn p(&self) -> Scalar {
        let (a, k) = (&self.alpha, |n| self.k(n));
        let num = &(&(&k(2) * &(a - &k(1))) * &self.l1) + &(&(&k(2) * a) * &self.l1f);
        let num = &num + &(a * &(&k(1) - &(&k(2) * a)));
        &num / &self.amb()
    }

    /// The long coefficient of `a₁` in `s_{1,2}`; linear in λ₂^f.
    pub fn q(&self) -> Scalar {
        let (a, b, k) = (&self.alpha, &self.beta, |n| self.k(n));
        let (l1, l1f, l2f) = (&self.l1, &self.l1f, &self.l2f);
        let amb = self.amb();
        // (6α² − 8αβ − 2α + 4β)(λ₁^f)²
        let c1 = &(&(&(&k(6) * &a.pow(2)) - &(&k(8) * &(a * b))) - &(&k(2) * a)) + &(&k(4) * b);
        let t1 = &c1 * &l1f.pow(2);
        // 2α(α−1)λ₁λ₁^f
        let t2 = &(&(&k(2) * a) * &(a - &k(1))) * &(l1 * l1f);
        // 2α(−2α − 2β + 1)(α−β)λ₁^f
        let c3 = &(&(&(-&k(2)) * a) - &(&k(2) * b)) + &k(1);
        let t3 = &(&(&(&k(2) * a) * &c3) * &amb) * l1f;
        // −4β(α−1)(α−β)λ₁
        let t4 = -&(&(&(&(&k(4) * b) * &(a - &k(1))) * &amb) * l1);
        // −αβ(α−β)λ₂^f
        let t5 = -&(&(&(a * b) * &amb) * l2f);
        // 2β(2α² + β² − α)(α−β)
        let c6 = &(&(&k(2) * &a.pow(2)) + &b.pow(2)) - a;
        let t6 = &(&(&k(2) * b) * &c6) * &amb;
        // −β(α−β)(α−2β)(1−2β)
        let t7 = -&(&(&(b * &amb) * &(a - &(&k(2) * b))) * &(&k(1) - &(&k(2) * b)));
        let bracket = [t2, t3, t4, t5, t6, t7].iter().fold(t1, |acc, t| &acc + t);
        let pre = -&(&k(1) / &(&(&k(2) * b) * &amb.pow(2)));
        &pre * &bracket
    }

    pub fn r(&self) -> Scalar {
        -&self.beta
    }

    pub fn s(&self) -> Scalar {
        &self.p() / &self.beta
    }
}

/// The generic skew algebra on a, b, c, sigma:
///
/// ```text
/// aa = a, bb = b, cc = c
/// ab = βa + βb + σ,  ac = βa + βc + σ,  bc = P(a + σ/β)
/// aσ = δa + ½β(α-β)(b+c) + (α-β)σ
/// bσ = β(α-β)a + δ^f b + (α-β)σ,  cσ = β(α-β)a + δ^f c + (α-β)σ
/// σσ = ζa + θ(b+c) + κσ
/// ```
pub fn make_generic_skew(c: &SkewConstants) -> Result<StructureAlgebra, CatalogError> {
    if c.beta.is_zero() {
        return Err(CatalogError::DegenerateParameter("beta = 0".into()));
    }
    if c.alpha == c.beta {
        return Err(CatalogError::DegenerateParameter("alpha = beta".into()));
    }
    let f = c.field();
    let names = ["a", "b", "c", "sigma"];
    let v = |xa: Scalar, xb: Scalar, xc: Scalar, xs: Scalar| Element::new(vec![xa, xb, xc, xs]);
    let (z, o) = (f.zero(), f.one());
    let amb = c.amb();
    let b_amb = &c.beta * &amb;
    let half_b_amb = &c.half() * &b_amb;
    let p = c.p();
    let entries = vec![
        (0, 0, v(o.clone(), z.clone(), z.clone(), z.clone())),
        (1, 1, v(z.clone(), o.clone(), z.clone(), z.clone())),
        (2, 2, v(z.clone(), z.clone(), o.clone(), z.clone())),
        (0, 1, v(c.beta.clone(), c.beta.clone(), z.clone(), o.clone())),
        (0, 2, v(c.beta.clone(), z.clone(), c.beta.clone(), o.clone())),
        (1, 2, v(p.clone(), z.clone(), z.clone(), &p / &c.beta)),
        (0, 3, v(c.delta(), half_b_amb.clone(), half_b_amb, amb.clone())),
        (1, 3, v(b_amb.clone(), c.delta_f(), z.clone(), amb.clone())),
        (2, 3, v(b_amb, z.clone(), c.delta_f(), amb)),
        (3, 3, v(c.zeta.clone(), c.theta.clone(), c.theta.clone(), c.kappa.clone())),
    ];
    Ok(StructureAlgebra::from_products(f, &names, entries)?)
}

/// The generic construction packaged with its generators a (Monster) and
/// b (Jordan).
pub fn make_generic_construction(c: &SkewConstants) -> Result<Construction, CatalogError> {
    let algebra = make_generic_skew(c)?;
    Ok(Construction {
        name: "generic".into(),
        axes: vec![
            axis("a", algebra.e("a"), LawSpec::Monster(c.alpha.clone(), c.beta.clone())),
            axis("b", algebra.e("b"), LawSpec::Jordan(c.alpha.clone())),
        ],
        algebra,
    })
}

/// Catalog names accepted by [`by_name`].
pub const NAMES: [&str; 11] = [
    "2B", "3C", "3Cx", "3C-skew", "3C-12", "Q2", "Q2-skew", "Q2x5", "Q2x5-one", "table6", "generic",
];

/// Looks up a construction. `alpha` is the parameter of `3C` and `3C-skew`
/// (and `η` for `2B`, default 1/2). The F5 entries ignore `field`.
pub fn by_name(name: &str, field: &Field, alpha: Option<&Scalar>) -> Result<Construction, CatalogError> {
    let need = || alpha.cloned().ok_or_else(|| CatalogError::MissingParameter(name.to_string()));
    match name {
        "2B" => make_2b(field, &alpha.cloned().unwrap_or_else(|| field.frac(1, 2))),
        "3C" => make_3c(field, &need()?),
        "3Cx" => make_3cx_minus1(field),
        "3C-skew" => make_3c_skew(field, &need()?),
        "3C-12" => make_3c_minus1_2(field),
        "Q2" => make_q2_third(field),
        "Q2-skew" => make_q2_skew(field),
        "Q2x5" => make_q2x(&f5()),
        "Q2x5-one" => make_q2x_plus_one(&f5()),
        "table6" => make_table6(field),
        "generic" => make_generic_construction(&SkewConstants::generic()),
        other => Err(CatalogError::UnknownName(other.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Scalar {
        Scalar::rational(n, d)
    }

    #[test]
    fn three_c_products() {
        let c = make_3c(&Field::Rational, &q(2, 1)).unwrap().algebra.renamed(&["u", "v", "w"]).unwrap();
        assert_eq!(c.mul(&c.e("u"), &c.e("w")), c.parse_element("u + w - v").unwrap());
        assert!(make_3c(&Field::Rational, &q(1, 1)).is_err());
    }

    #[test]
    fn two_b_and_3cx() {
        let b = make_2b(&Field::Rational, &q(1, 2)).unwrap().algebra;
        assert!(b.mul(&b.e("a"), &b.e("b")).is_zero());
        let x = make_3cx_minus1(&Field::Rational).unwrap().algebra;
        assert_eq!(x.mul(&x.e("y"), &x.e("z")), x.parse_element("-y - z").unwrap());
    }

    #[test]
    fn skew_3c_wy() {
        for alpha in [q(1, 4), q(2, 3), q(-3, 1)] {
            let c = make_3c_skew(&Field::Rational, &alpha).unwrap();
            let (w, y, z) = (c.axis_element("w"), c.algebra.e("y"), c.algebra.e("z"));
            let expect = Element::combination(&[
                ((&alpha + &q(1, 1)) / q(2, 1), &w),
                ((&q(1, 1) - &alpha) / q(2, 1), &(&y - &z)),
            ]);
            assert_eq!(c.algebra.mul(&w, &y), expect);
        }
        assert!(matches!(
            make_3c_skew(&Field::Rational, &q(1, 2)),
            Err(CatalogError::DegenerateParameter(_))
        ));
    }

    #[test]
    fn minus_one_two() {
        let c = make_3c_minus1_2(&Field::Rational).unwrap();
        let a = &c.algebra;
        let (w, y) = (c.axis_element("w"), c.axis_element("y"));
        assert_eq!(a.mul(&w, &y), a.parse_element("v - u").unwrap());
        assert!(make_3c_minus1_2(&Field::prime(3).unwrap()).is_err());
    }

    #[test]
    fn q2_skew_products() {
        let c = make_q2_skew(&Field::Rational).unwrap();
        let a = &c.algebra;
        let (t1, s1, s2) = (c.axis_element("t1"), a.e("s1"), a.e("s2"));
        let t2 = q2_t2(a);
        assert_eq!(t1, a.parse_element("3/5*s1 + 3/5*s2 - 2/5*d1 + 3/5*d2").unwrap());
        let expect = Element::combination(&[(q(2, 3), &s1), (q(1, 6), &t1), (q(-1, 6), &t2)]);
        assert_eq!(a.mul(&s1, &t1), expect);
        let expect = Element::combination(&[(q(2, 3), &s1), (q(2, 3), &s2), (q(-1, 3), &t1), (q(-1, 3), &t2)]);
        assert_eq!(a.mul(&t1, &t2), expect);
        assert_eq!(a.find_identity().unwrap(), q2_identity(a));
        assert!(make_q2_skew(&Field::prime(5).unwrap()).is_err());
    }

    #[test]
    fn f5_algebra() {
        let c = make_q2x_plus_one(&f5()).unwrap();
        let a = &c.algebra;
        let w = c.axis_element("w");
        assert_eq!(a.mul(&w, &a.e("x")), a.parse_element("-2*x - y - 2*z").unwrap());
        assert_eq!(a.mul(&w, &a.e("y")), a.parse_element("-x - 2*y - 2*z").unwrap());
        assert_eq!(q2x_plus_one_via_quotient().unwrap(), c.algebra);
        assert!(make_q2x_plus_one(&Field::Rational).is_err());
    }

    #[test]
    fn table6_rows() {
        let c = make_table6(&Field::Rational).unwrap();
        let a = &c.algebra;
        assert_eq!(a.mul(&a.e("a"), &a.e("f")), a.parse_element("2/3*b + 2/3*c - 1/3*a - 1/3*f").unwrap());
        assert_eq!(a.mul(&a.e("b"), &a.e("f")), a.parse_element("-1/6*a + 1/6*f + 2/3*b").unwrap());
    }

    #[test]
    fn skew_constructions_realize_triangles() {
        use crate::axes::verify_axis;
        use crate::axets::{realize_axet, Shape};
        let builds = [
            make_3c_skew(&Field::Rational, &q(1, 4)).unwrap(),
            make_3c_minus1_2(&Field::Rational).unwrap(),
            make_q2_skew(&Field::Rational).unwrap(),
            make_q2x_plus_one(&f5()).unwrap(),
            make_table6(&Field::Rational).unwrap(),
        ];
        for c in &builds {
            for ax in &c.axes {
                let r = verify_axis(&c.algebra, &ax.element, &ax.law.build().unwrap());
                assert!(r.is_axis(), "{} {} {:?}", c.name, ax.name, r.failures());
            }
            let x = realize_axet(&c.algebra, &c.generators().unwrap(), 24).unwrap();
            assert!(x.has_skew_triangle_pattern(), "{}", c.name);
            assert_eq!(x.shape(24).unwrap(), Shape::Skew(1));
        }
        let c = make_q2x(&f5()).unwrap();
        let gens = c.generators().unwrap();
        let x = realize_axet(&c.algebra, &gens[..2], 24).unwrap();
        assert_eq!(x.shape(24).unwrap(), Shape::Regular(4));
    }

    #[test]
    fn oracle_labels() {
        assert_eq!(
            rehren_oracle(&q(-1, 1), &q(2, 1)).unwrap(),
            vec![RehrenLabel::TwoB, RehrenLabel::ThreeCMinusOneTwo]
        );
        assert_eq!(rehren_oracle(&q(1, 3), &q(1, 2)).unwrap(), vec![RehrenLabel::TwoB]);
        assert!(rehren_oracle(&q(1, 2), &q(1, 2)).is_err());
    }

    #[test]
    fn generic_table_rows() {
        let c = SkewConstants::generic();
        let g = make_generic_skew(&c).unwrap();
        let (a, b, cc, s) = (g.e("a"), g.e("b"), g.e("c"), g.e("sigma"));
        let expect = Element::combination(&[
            (c.delta(), &a),
            (&(&c.beta * &c.amb()) / &c.field().from_integer(2), &(&b + &cc)),
            (c.amb(), &s),
        ]);
        assert_eq!(g.mul(&a, &s), expect);
        let expect = Element::combination(&[(c.p(), &a), (&c.p() / &c.beta, &s)]);
        assert_eq!(g.mul(&b, &cc), expect);
    }
}
