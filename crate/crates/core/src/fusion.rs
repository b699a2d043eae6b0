//! Fusion laws: eigenvalue sets with a symmetric star table, plus the
//! Seress property and C2-gradings.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::scalars::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FusionError {
    #[error("degenerate parameter: {0}")]
    DegenerateParameter(String),
    #[error("eigenvalue {0} is listed twice")]
    DuplicateEigenvalue(String),
    #[error("star table is not symmetric at ({0}, {1})")]
    NotSymmetric(usize, usize),
    #[error("star table entry refers to eigenvalue index {0}, which does not exist")]
    UnknownEigenvalue(usize),
    #[error("star table must be {0} x {0}")]
    BadShape(usize),
}

/// A fusion law on a finite list of eigenvalues. Star table entries are
/// sets of indices into the eigenvalue list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FusionLaw {
    name: String,
    eigenvalues: Vec<Scalar>,
    star: Vec<Vec<BTreeSet<usize>>>,
}

/// A C2-grading: `odd[i]` is true when eigenvalue `i` maps to the
/// nontrivial element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Grading {
    odd: Vec<bool>,
}

impl Grading {
    pub fn new(odd: Vec<bool>) -> Self {
        Self { odd }
    }

    pub fn is_odd(&self, i: usize) -> bool {
        self.odd[i]
    }

    pub fn odd(&self) -> &[bool] {
        &self.odd
    }

    /// True when the grading respects every entry of `law`.
    pub fn is_valid_for(&self, law: &FusionLaw) -> bool {
        let n = law.len();
        self.odd.len() == n
            && (0..n).all(|i| {
                (0..n).all(|j| law.star(i, j).iter().all(|&k| self.odd[k] == (self.odd[i] != self.odd[j])))
            })
    }
}

impl FusionLaw {
    /// A law from an explicit table. Checks distinctness, shape, symmetry
    /// and index ranges.
    pub fn new(
        name: impl Into<String>,
        eigenvalues: Vec<Scalar>,
        star: Vec<Vec<BTreeSet<usize>>>,
    ) -> Result<Self, FusionError> {
        let n = eigenvalues.len();
        for (i, x) in eigenvalues.iter().enumerate() {
            if eigenvalues[..i].contains(x) {
                return Err(FusionError::DuplicateEigenvalue(x.to_string()));
            }
        }
        if star.len() != n || star.iter().any(|r| r.len() != n) {
            return Err(FusionError::BadShape(n));
        }
        for (i, row) in star.iter().enumerate() {
            for (j, cell) in row.iter().enumerate() {
                if *cell != star[j][i] {
                    return Err(FusionError::NotSymmetric(i, j));
                }
                if let Some(&k) = cell.iter().find(|&&k| k >= n) {
                    return Err(FusionError::UnknownEigenvalue(k));
                }
            }
        }
        Ok(Self {
            name: name.into(),
            eigenvalues,
            star,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn eigenvalues(&self) -> &[Scalar] {
        &self.eigenvalues
    }

    pub fn len(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn is_empty(&self) -> bool {
        self.eigenvalues.is_empty()
    }

    pub fn index_of(&self, x: &Scalar) -> Option<usize> {
        self.eigenvalues.iter().position(|e| e == x)
    }

    pub fn star(&self, i: usize, j: usize) -> &BTreeSet<usize> {
        &self.star[i][j]
    }

    /// `x ⋆ y` as eigenvalues; `None` if either is not in the law.
    pub fn star_values(&self, x: &Scalar, y: &Scalar) -> Option<Vec<Scalar>> {
        let (i, j) = (self.index_of(x)?, self.index_of(y)?);
        Some(self.star[i][j].iter().map(|&k| self.eigenvalues[k].clone()).collect())
    }

    /// `λ⋆0 = {λ}` for every `λ ≠ 1`, and `1⋆0 = ∅`.
    pub fn is_seress(&self) -> bool {
        let Some(z) = self.eigenvalues.iter().position(Scalar::is_zero) else {
            return false;
        };
        (0..self.len()).all(|i| {
            if self.eigenvalues[i].is_one() {
                self.star[i][z].is_empty()
            } else {
                self.star[i][z].len() == 1 && self.star[i][z].contains(&i)
            }
        })
    }

    /// Finds a C2-grading with a nonempty odd part that keeps 1 even.
    /// The assignment making only the last eigenvalue odd is tried first;
    /// otherwise odd sets are enumerated in increasing bitmask order.
    pub fn find_c2_grading(&self) -> Option<Grading> {
        let n = self.len();
        let one = self.eigenvalues.iter().position(Scalar::is_one);
        let preferred = Grading::new((0..n).map(|i| i + 1 == n).collect());
        if n > 0 && one != Some(n - 1) && preferred.is_valid_for(self) {
            return Some(preferred);
        }
        (1u64..(1 << n))
            .map(|mask| Grading::new((0..n).map(|i| mask >> i & 1 == 1).collect()))
            .filter(|g| one.is_none_or(|o| !g.odd[o]))
            .find(|g| g.is_valid_for(self))
    }
}

fn set(items: &[usize]) -> BTreeSet<usize> {
    items.iter().copied().collect()
}

fn check_parameter(x: &Scalar, what: &str) -> Result<(), FusionError> {
    if x.is_zero() || x.is_one() {
        return Err(FusionError::DegenerateParameter(format!("{what} = {x}")));
    }
    Ok(())
}

/// Jordan type law on `[1, 0, η]`.
pub fn make_jordan(eta: &Scalar) -> Result<FusionLaw, FusionError> {
    check_parameter(eta, "eta")?;
    let (one, zero, e) = (0, 1, 2);
    let mut star = vec![vec![BTreeSet::new(); 3]; 3];
    star[one][one] = set(&[one]);
    star[zero][zero] = set(&[zero]);
    for x in [one, zero] {
        star[x][e] = set(&[e]);
        star[e][x] = set(&[e]);
    }
    star[e][e] = set(&[one, zero]);
    let f = eta.field();
    FusionLaw::new(format!("J({eta})"), vec![f.one(), f.zero(), eta.clone()], star)
}

/// Monster type law on `[1, 0, α, β]`.
pub fn make_monster(alpha: &Scalar, beta: &Scalar) -> Result<FusionLaw, FusionError> {
    check_parameter(alpha, "alpha")?;
    check_parameter(beta, "beta")?;
    if alpha == beta {
        return Err(FusionError::DegenerateParameter(format!("alpha = beta = {alpha}")));
    }
    let (one, zero, a, b) = (0, 1, 2, 3);
    let mut star = vec![vec![BTreeSet::new(); 4]; 4];
    star[one][one] = set(&[one]);
    star[zero][zero] = set(&[zero]);
    for x in [one, zero] {
        star[x][a] = set(&[a]);
        star[a][x] = set(&[a]);
        star[x][b] = set(&[b]);
        star[b][x] = set(&[b]);
    }
    star[a][a] = set(&[one, zero]);
    star[a][b] = set(&[b]);
    star[b][a] = set(&[b]);
    star[b][b] = set(&[one, zero, a]);
    let f = alpha.field();
    FusionLaw::new(
        format!("M({alpha}, {beta})"),
        vec![f.one(), f.zero(), alpha.clone(), beta.clone()],
        star,
    )
}

/// A law named by its parameters, as declared for an axis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LawSpec {
    Monster(Scalar, Scalar),
    Jordan(Scalar),
}

impl LawSpec {
    pub fn build(&self) -> Result<FusionLaw, FusionError> {
        match self {
            LawSpec::Monster(a, b) => make_monster(a, b),
            LawSpec::Jordan(e) => make_jordan(e),
        }
    }
}

impl fmt::Display for LawSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LawSpec::Monster(a, b) => write!(f, "monster {a} {b}"),
            LawSpec::Jordan(e) => write!(f, "jordan {e}"),
        }
    }
}

/// The law used for Miyamoto involutions when axes of several declared
/// types live in one algebra. If there is exactly one Monster law
/// `M(α, β)` and every Jordan parameter is `α` or `β`, every axis is read
/// as an `M(α, β)`-axis (a `J(α)`-axis has trivial β-part, a `J(β)`-axis
/// trivial α-part). Otherwise each axis keeps its own law.
pub fn miyamoto_laws(specs: &[LawSpec]) -> Result<Vec<FusionLaw>, FusionError> {
    let mut monsters: Vec<(&Scalar, &Scalar)> = Vec::new();
    for s in specs {
        if let LawSpec::Monster(a, b) = s {
            if !monsters.contains(&(a, b)) {
                monsters.push((a, b));
            }
        }
    }
    if let [(a, b)] = monsters[..] {
        let compatible = specs.iter().all(|s| match s {
            LawSpec::Jordan(e) => e == a || e == b,
            LawSpec::Monster(..) => true,
        });
        if compatible {
            let law = make_monster(a, b)?;
            return Ok(vec![law; specs.len()]);
        }
    }
    specs.iter().map(LawSpec::build).collect()
}

impl fmt::Display for FusionLaw {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::Field;

    fn q(n: i64, d: i64) -> Scalar {
        Scalar::rational(n, d)
    }

    #[test]
    fn jordan_table() {
        let law = make_jordan(&q(1, 3)).unwrap();
        assert_eq!(law.star_values(&q(1, 3), &q(1, 3)).unwrap(), vec![q(1, 1), q(0, 1)]);
        assert!(law.star_values(&q(1, 1), &q(0, 1)).unwrap().is_empty());
        assert!(make_jordan(&q(0, 1)).is_err());
        assert!(make_jordan(&q(2, 1)).unwrap().is_seress());
    }

    #[test]
    fn monster_table() {
        let law = make_monster(&q(1, 3), &q(2, 3)).unwrap();
        assert_eq!(
            law.star_values(&q(2, 3), &q(2, 3)).unwrap(),
            vec![q(1, 1), q(0, 1), q(1, 3)]
        );
        assert_eq!(law.star_values(&q(1, 3), &q(2, 3)).unwrap(), vec![q(2, 3)]);
        assert!(make_monster(&q(-1, 1), &q(2, 1)).is_ok());
        assert!(make_monster(&q(1, 2), &q(1, 2)).is_err());
        assert!(law.is_seress());
    }

    #[test]
    fn monster_collision_in_small_field() {
        // 1/3 and -2/3 coincide in F_3? not admissible (char 3 has no 1/3);
        // in F_5, 2/3 = 4 and -1/3 = 3 are distinct, but 1/3 = 2 = -1/2
        let f5 = Field::prime(5).unwrap();
        let a = f5.frac(1, 3);
        let b = f5.frac(-1, 2);
        assert!(make_monster(&a, &b).is_err());
    }

    #[test]
    fn gradings() {
        let m = make_monster(&q(1, 4), &q(3, 4)).unwrap();
        assert_eq!(m.find_c2_grading().unwrap().odd(), [false, false, false, true]);
        let j = make_jordan(&q(1, 3)).unwrap();
        assert_eq!(j.find_c2_grading().unwrap().odd(), [false, false, true]);
    }

    #[test]
    fn non_seress_and_ungraded_laws() {
        let f = Field::Rational;
        let vals = vec![f.one(), f.zero()];
        let mut star = vec![vec![BTreeSet::new(); 2]; 2];
        star[0][0] = set(&[0]);
        star[0][1] = set(&[1]);
        star[1][0] = set(&[1]);
        star[1][1] = set(&[1]);
        let law = FusionLaw::new("bad", vals, star).unwrap();
        assert!(!law.is_seress());

        let no_zero = FusionLaw::new("one", vec![f.one()], vec![vec![set(&[0])]]).unwrap();
        assert!(!no_zero.is_seress());

        // b*b contains b: b cannot be odd
        let vals = vec![f.one(), q(1, 2)];
        let star = vec![vec![set(&[0]), set(&[1])], vec![set(&[1]), set(&[0, 1])]];
        let law = FusionLaw::new("parity", vals, star).unwrap();
        assert!(law.find_c2_grading().is_none());
    }

    #[test]
    fn asymmetric_table_rejected() {
        let f = Field::Rational;
        let star = vec![vec![set(&[0]), set(&[1])], vec![set(&[]), set(&[1])]];
        assert!(matches!(
            FusionLaw::new("x", vec![f.one(), f.zero()], star),
            Err(FusionError::NotSymmetric(0, 1))
        ));
    }
}
