//! C2-axets: the index models X(n) and X'(k+2k), closure, shape
//! classification and axets realized by axes inside an algebra.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::algebra::{Element, StructureAlgebra};
use crate::axes::{miyamoto, verify_axis, AxisError, MiyamotoMap};
use crate::fusion::FusionLaw;

pub const DEFAULT_MAX_POINTS: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AxetError {
    #[error("the subset is empty")]
    EmptySubset,
    #[error("{points} points exceed the bound of {bound}")]
    TooLarge { points: usize, bound: usize },
    #[error("generator {index} is not an axis (failed {failures})")]
    NotAnAxis { index: usize, failures: String },
    #[error("the orbit grew beyond {0} points")]
    NotClosedWithinBound(usize),
    #[error("k = {0} is even")]
    EvenK(i64),
    #[error("invalid size {0}")]
    BadSize(i64),
    #[error(transparent)]
    Axis(#[from] AxisError),
}

/// `tau[x][y]` is the index of the image of point `y` under the involution
/// attached to point `x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ActionTable {
    tau: Vec<Vec<usize>>,
}

impl ActionTable {
    pub fn new(tau: Vec<Vec<usize>>) -> Self {
        let n = tau.len();
        for row in &tau {
            assert_eq!(row.len(), n, "action rows have one entry per point");
            let set: BTreeSet<_> = row.iter().collect();
            assert!(set.len() == n && row.iter().all(|&y| y < n), "each row is a permutation");
        }
        Self { tau }
    }

    pub fn len(&self) -> usize {
        self.tau.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tau.is_empty()
    }

    pub fn image(&self, x: usize, y: usize) -> usize {
        self.tau[x][y]
    }

    pub fn is_trivial(&self, x: usize) -> bool {
        self.tau[x].iter().enumerate().all(|(i, &j)| i == j)
    }

    /// Number of points moved by the involution of `x`.
    pub fn support(&self, x: usize) -> usize {
        self.tau[x].iter().enumerate().filter(|(i, j)| i != *j).count()
    }

    /// Smallest superset of `z` invariant under the involutions of its own
    /// points. Sorted.
    pub fn closure(&self, z: &[usize]) -> Result<Vec<usize>, AxetError> {
        if z.is_empty() {
            return Err(AxetError::EmptySubset);
        }
        let mut set: BTreeSet<usize> = z.iter().copied().collect();
        loop {
            let mut next = set.clone();
            for &x in &set {
                for &y in &set {
                    next.insert(self.tau[x][y]);
                }
            }
            if next.len() == set.len() {
                return Ok(set.into_iter().collect());
            }
            set = next;
        }
    }

    /// The action restricted to a closed subset, reindexed in the given order.
    pub fn restrict(&self, subset: &[usize]) -> ActionTable {
        let pos = |p: usize| {
            subset
                .iter()
                .position(|&q| q == p)
                .expect("subset is closed")
        };
        ActionTable::new(
            subset
                .iter()
                .map(|&x| subset.iter().map(|&y| pos(self.tau[x][y])).collect())
                .collect(),
        )
    }
}

/// Which index model.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Shape {
    /// The regular n-gon X(n).
    Regular(usize),
    /// The skew axet X'(k+2k) with 3k points.
    Skew(usize),
    Unknown,
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Shape::Regular(n) => write!(f, "X({n})"),
            Shape::Skew(k) => write!(f, "Xskew({k})"),
            Shape::Unknown => f.write_str("unknown"),
        }
    }
}

/// X(n) or X'(k+2k) with points labelled by residues. Point `a_i` lives at
/// `i mod n` for X(n); for X'(k+2k), odd labels are taken mod 4k and even
/// labels mod 2k. The involution of `a_j` sends `a_i` to `a_{2j-i}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbstractAxet {
    shape: Shape,
    labels: Vec<i64>,
    action: ActionTable,
}

impl AbstractAxet {
    pub fn regular(n: usize) -> Result<Self, AxetError> {
        if n == 0 {
            return Err(AxetError::BadSize(0));
        }
        Ok(Self::build(Shape::Regular(n), (0..n as i64).collect()))
    }

    pub fn skew(k: usize) -> Result<Self, AxetError> {
        if k == 0 {
            return Err(AxetError::BadSize(0));
        }
        let m = 4 * k as i64;
        let labels = (0..m).filter(|i| i % 2 == 1 || *i < 2 * k as i64).collect();
        Ok(Self::build(Shape::Skew(k), labels))
    }

    pub fn from_shape(shape: Shape) -> Result<Self, AxetError> {
        match shape {
            Shape::Regular(n) => Self::regular(n),
            Shape::Skew(k) => Self::skew(k),
            Shape::Unknown => Err(AxetError::BadSize(-1)),
        }
    }

    fn build(shape: Shape, labels: Vec<i64>) -> Self {
        let mut this = Self {
            shape,
            labels,
            action: ActionTable { tau: Vec::new() },
        };
        let tau = this
            .labels
            .iter()
            .map(|&j| this.labels.iter().map(|&i| this.point(2 * j - i)).collect())
            .collect();
        this.action = ActionTable::new(tau);
        this
    }

    pub fn shape(&self) -> Shape {
        self.shape
    }

    pub fn labels(&self) -> &[i64] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn action(&self) -> &ActionTable {
        &self.action
    }

    /// Canonical label for `a_i`.
    pub fn canonical(&self, i: i64) -> i64 {
        match self.shape {
            Shape::Regular(n) => i.rem_euclid(n as i64),
            Shape::Skew(k) => {
                let r = i.rem_euclid(4 * k as i64);
                if r % 2 == 0 {
                    r % (2 * k as i64)
                } else {
                    r
                }
            }
            Shape::Unknown => unreachable!("abstract axets have a known shape"),
        }
    }

    /// Index of the point `a_i`.
    pub fn point(&self, i: i64) -> usize {
        let c = self.canonical(i);
        self.labels
            .binary_search(&c)
            .expect("canonical labels are listed")
    }

    /// Closure of the points with the given labels, returned as labels.
    pub fn closure_of_labels(&self, z: &[i64]) -> Result<Vec<i64>, AxetError> {
        let idx: Vec<usize> = z.iter().map(|&i| self.point(i)).collect();
        Ok(self
            .action
            .closure(&idx)?
            .into_iter()
            .map(|p| self.labels[p])
            .collect())
    }
}

/// `{a_0, a_k, a_{-k}}` inside X'(k+2k) for odd `k`.
pub fn odd_subaxet(k: i64) -> Result<Vec<i64>, AxetError> {
    if k <= 0 {
        return Err(AxetError::BadSize(k));
    }
    if k % 2 == 0 {
        return Err(AxetError::EvenK(k));
    }
    Ok(vec![0, k, (-k).rem_euclid(4 * k)])
}

/// An action-preserving bijection `p -> map[p]` from `a` onto `b`, if any.
pub fn find_isomorphism(a: &ActionTable, b: &ActionTable) -> Option<Vec<usize>> {
    let n = a.len();
    if n != b.len() {
        return None;
    }
    let mut sa: Vec<usize> = (0..n).map(|x| a.support(x)).collect();
    let mut sb: Vec<usize> = (0..n).map(|x| b.support(x)).collect();
    let (sa_sorted, sb_sorted) = {
        let (mut x, mut y) = (sa.clone(), sb.clone());
        x.sort_unstable();
        y.sort_unstable();
        (x, y)
    };
    if sa_sorted != sb_sorted {
        return None;
    }
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    let found = search(a, b, &mut sa, &mut sb, &mut map, &mut used, 0);
    found.then_some(map)
}

fn search(
    a: &ActionTable,
    b: &ActionTable,
    sa: &mut Vec<usize>,
    sb: &mut Vec<usize>,
    map: &mut Vec<usize>,
    used: &mut Vec<bool>,
    start: usize,
) -> bool {
    let n = a.len();
    let Some(x) = (start..n).find(|&x| map[x] == usize::MAX) else {
        return true;
    };
    for y in 0..n {
        if used[y] || sa[x] != sb[y] {
            continue;
        }
        let (saved_map, saved_used) = (map.clone(), used.clone());
        if assign(a, b, map, used, x, y) && search(a, b, sa, sb, map, used, x + 1) {
            return true;
        }
        *map = saved_map;
        *used = saved_used;
    }
    false
}

/// Assigns `x -> y` and propagates forced images `τ_u(v) -> τ_{u'}(v')`.
fn assign(a: &ActionTable, b: &ActionTable, map: &mut [usize], used: &mut [bool], x: usize, y: usize) -> bool {
    let mut pending = vec![(x, y)];
    while let Some((p, q)) = pending.pop() {
        if map[p] != usize::MAX {
            if map[p] != q {
                return false;
            }
            continue;
        }
        if used[q] {
            return false;
        }
        map[p] = q;
        used[q] = true;
        let assigned: Vec<usize> = (0..map.len()).filter(|&u| map[u] != usize::MAX).collect();
        for &u in &assigned {
            pending.push((a.image(p, u), b.image(q, map[u])));
            pending.push((a.image(u, p), b.image(map[u], q)));
        }
    }
    true
}

/// Matches an action against X(n) and X'(k+2k) of the same size.
pub fn classify_shape(action: &ActionTable, max_points: usize) -> Result<Shape, AxetError> {
    let n = action.len();
    if n > max_points {
        return Err(AxetError::TooLarge {
            points: n,
            bound: max_points,
        });
    }
    if n == 0 {
        return Err(AxetError::EmptySubset);
    }
    let mut candidates = vec![Shape::Regular(n)];
    if n.is_multiple_of(3) {
        candidates.push(Shape::Skew(n / 3));
    }
    for shape in candidates {
        let model = AbstractAxet::from_shape(shape)?;
        if find_isomorphism(action, model.action()).is_some() {
            return Ok(shape);
        }
    }
    Ok(Shape::Unknown)
}

/// The orbit of some axes under their Miyamoto involutions.
#[derive(Clone, Debug)]
pub struct RealizedAxet {
    pub points: Vec<Element>,
    pub laws: Vec<FusionLaw>,
    pub involutions: Vec<MiyamotoMap>,
    pub action: ActionTable,
}

impl RealizedAxet {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn index_of(&self, v: &Element) -> Option<usize> {
        self.points.iter().position(|p| p == v)
    }

    pub fn shape(&self, max_points: usize) -> Result<Shape, AxetError> {
        classify_shape(&self.action, max_points)
    }

    /// True for the three-point pattern: exactly one involution swaps the
    /// other two points and the remaining two are trivial.
    pub fn has_skew_triangle_pattern(&self) -> bool {
        if self.len() != 3 {
            return false;
        }
        let nontrivial: Vec<usize> = (0..3).filter(|&x| !self.action.is_trivial(x)).collect();
        if nontrivial.len() != 1 {
            return false;
        }
        let x = nontrivial[0];
        let others: Vec<usize> = (0..3).filter(|&y| y != x).collect();
        self.action.image(x, others[0]) == others[1] && self.action.image(x, x) == x
    }
}

/// Closes `axes` under the Miyamoto involutions of all points found so
/// far. Each image inherits the law of the axis it came from.
pub fn realize_axet(
    alg: &StructureAlgebra,
    axes: &[(Element, FusionLaw)],
    max_points: usize,
) -> Result<RealizedAxet, AxetError> {
    if axes.is_empty() {
        return Err(AxetError::EmptySubset);
    }
    let mut points: Vec<Element> = Vec::new();
    let mut laws: Vec<FusionLaw> = Vec::new();
    let mut involutions: Vec<MiyamotoMap> = Vec::new();
    let add = |v: Element, law: FusionLaw, points: &mut Vec<Element>, laws: &mut Vec<FusionLaw>, invs: &mut Vec<MiyamotoMap>| -> Result<(), AxetError> {
        if points.contains(&v) {
            return Ok(());
        }
        if points.len() == max_points {
            return Err(AxetError::NotClosedWithinBound(max_points));
        }
        let report = verify_axis(alg, &v, &law);
        if !report.is_axis() {
            return Err(AxetError::NotAnAxis {
                index: points.len(),
                failures: report.failures().join(", "),
            });
        }
        invs.push(miyamoto(alg, &v, &law, None)?);
        points.push(v);
        laws.push(law);
        Ok(())
    };
    for (v, law) in axes {
        add(v.clone(), law.clone(), &mut points, &mut laws, &mut involutions)?;
    }
    loop {
        let before = points.len();
        let mut x = 0;
        while x < points.len() {
            let mut y = 0;
            while y < points.len() {
                let img = involutions[x].apply(&points[y]);
                let law = laws[y].clone();
                add(img, law, &mut points, &mut laws, &mut involutions)?;
                y += 1;
            }
            x += 1;
        }
        if points.len() == before {
            break;
        }
    }
    let tau = involutions
        .iter()
        .map(|t| {
            points
                .iter()
                .map(|p| {
                    let img = t.apply(p);
                    points.iter().position(|q| *q == img).expect("orbit is closed")
                })
                .collect()
        })
        .collect();
    Ok(RealizedAxet {
        points,
        laws,
        involutions,
        action: ActionTable::new(tau),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn skew_sizes() {
        for k in 1..=8 {
            let x = AbstractAxet::skew(k).unwrap();
            assert_eq!(x.len(), 3 * k);
            assert_eq!(x.closure_of_labels(&[0, 1]).unwrap().len(), 3 * k);
        }
    }

    #[test]
    fn closure_examples() {
        let x = AbstractAxet::skew(2).unwrap();
        assert_eq!(x.closure_of_labels(&[0, 1]).unwrap().len(), 6);
        let x = AbstractAxet::skew(3).unwrap();
        assert_eq!(x.closure_of_labels(&[0, 3]).unwrap(), vec![0, 3, 9]);
        assert_eq!(x.closure_of_labels(&[0]).unwrap(), vec![0]);
        assert!(x.action().closure(&[]).is_err());
    }

    #[test]
    fn odd_subaxets_are_skew_triangles() {
        for k in [3, 5, 7] {
            let x = AbstractAxet::skew(k as usize).unwrap();
            let labels = odd_subaxet(k).unwrap();
            assert_eq!(labels, vec![0, k, 3 * k]);
            let closed = x.closure_of_labels(&labels[..2]).unwrap();
            assert_eq!(closed.len(), 3);
            let idx: Vec<usize> = closed.iter().map(|&i| x.point(i)).collect();
            let sub = x.action().restrict(&idx);
            assert_eq!(classify_shape(&sub, DEFAULT_MAX_POINTS).unwrap(), Shape::Skew(1));
        }
        assert_eq!(odd_subaxet(2), Err(AxetError::EvenK(2)));
    }

    #[test]
    fn models_classify_as_themselves() {
        for n in 1..=12 {
            let x = AbstractAxet::regular(n).unwrap();
            assert_eq!(classify_shape(x.action(), 24).unwrap(), Shape::Regular(n));
        }
        for k in 1..=8 {
            let x = AbstractAxet::skew(k).unwrap();
            assert_eq!(classify_shape(x.action(), 24).unwrap(), Shape::Skew(k));
        }
        let big = AbstractAxet::regular(30).unwrap();
        assert!(matches!(
            classify_shape(big.action(), 24),
            Err(AxetError::TooLarge { points: 30, .. })
        ));
    }

    #[test]
    fn skew_fixes_a0_under_odd_k() {
        for k in [1usize, 3, 5] {
            let x = AbstractAxet::skew(k).unwrap();
            let a0 = x.point(0);
            let ak = x.point(k as i64);
            assert_eq!(x.action().image(ak, a0), a0);
        }
    }
}
