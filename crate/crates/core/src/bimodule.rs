//! Finite bimodules, tensor products over a monoid, and the group quotient of
//! `L × R`.

use std::fmt;

use petgraph::unionfind::UnionFind;
use serde::{Deserialize, Serialize};

use crate::category::TwoObjectCategory;
use crate::error::{Error, Result};
use crate::semigroup::{FiniteSemigroup, Monoid};

/// A finite set with a left `A`-action and a right `B`-action that commute.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bimodule {
    left: Monoid,
    right: Monoid,
    size: usize,
    /// `left_action[a][x] = a·x`
    left_action: Vec<Vec<usize>>,
    /// `right_action[x][b] = x·b`
    right_action: Vec<Vec<usize>>,
    labels: Vec<String>,
}

impl Bimodule {
    /// Checks shapes, unit laws, action laws and commutation exhaustively.
    pub fn new(
        left: Monoid,
        right: Monoid,
        size: usize,
        left_action: Vec<Vec<usize>>,
        right_action: Vec<Vec<usize>>,
    ) -> Result<Self> {
        let labels = (0..size).map(|i| i.to_string()).collect();
        Self::with_labels(left, right, size, left_action, right_action, labels)
    }

    pub fn with_labels(
        left: Monoid,
        right: Monoid,
        size: usize,
        left_action: Vec<Vec<usize>>,
        right_action: Vec<Vec<usize>>,
        labels: Vec<String>,
    ) -> Result<Self> {
        if left_action.len() != left.len()
            || left_action.iter().any(|row| row.len() != size || row.iter().any(|&v| v >= size))
        {
            return Err(Error::ActionShape { table: "left" });
        }
        if right_action.len() != size
            || right_action.iter().any(|row| row.len() != right.len() || row.iter().any(|&v| v >= size))
        {
            return Err(Error::ActionShape { table: "right" });
        }
        let labels = if labels.len() == size { labels } else { (0..size).map(|i| i.to_string()).collect() };
        let m = Self { left, right, size, left_action, right_action, labels };
        m.check_laws()?;
        Ok(m)
    }

    fn check_laws(&self) -> Result<()> {
        let (a, b) = (&self.left, &self.right);
        for x in 0..self.size {
            if self.act_left(a.identity(), x) != x {
                return Err(Error::UnitLawViolation { side: "left", element: x });
            }
            if self.act_right(x, b.identity()) != x {
                return Err(Error::UnitLawViolation { side: "right", element: x });
            }
        }
        for p in a.elements() {
            for q in a.elements() {
                for x in 0..self.size {
                    if self.act_left(a.mul(p, q), x) != self.act_left(p, self.act_left(q, x)) {
                        return Err(Error::ActionLawViolation { side: "left", triple: (p, q, x) });
                    }
                }
            }
        }
        for x in 0..self.size {
            for p in b.elements() {
                for q in b.elements() {
                    if self.act_right(x, b.mul(p, q)) != self.act_right(self.act_right(x, p), q) {
                        return Err(Error::ActionLawViolation { side: "right", triple: (x, p, q) });
                    }
                }
            }
        }
        for p in a.elements() {
            for x in 0..self.size {
                for q in b.elements() {
                    if self.act_right(self.act_left(p, x), q) != self.act_left(p, self.act_right(x, q)) {
                        return Err(Error::CommutationViolation((p, x, q)));
                    }
                }
            }
        }
        Ok(())
    }

    /// `A` as an `(A, A)`-bimodule under multiplication.
    pub fn regular(a: &Monoid) -> Self {
        let rows = a.rows();
        Self {
            left: a.clone(),
            right: a.clone(),
            size: a.len(),
            left_action: rows.clone(),
            right_action: rows,
            labels: a.labels().to_vec(),
        }
    }

    pub fn left_monoid(&self) -> &Monoid {
        &self.left
    }

    pub fn right_monoid(&self) -> &Monoid {
        &self.right
    }

    pub fn len(&self) -> usize {
        self.size
    }

    pub fn is_empty(&self) -> bool {
        self.size == 0
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    #[inline]
    pub fn act_left(&self, a: usize, x: usize) -> usize {
        self.left_action[a][x]
    }

    #[inline]
    pub fn act_right(&self, x: usize, b: usize) -> usize {
        self.right_action[x][b]
    }

    pub fn left_action(&self) -> &[Vec<usize>] {
        &self.left_action
    }

    pub fn right_action(&self) -> &[Vec<usize>] {
        &self.right_action
    }
}

/// Wire form of a monoid inside a bimodule file.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonoidJson {
    pub table: Vec<Vec<usize>>,
    pub identity: usize,
}

impl MonoidJson {
    pub fn of(m: &Monoid) -> Self {
        Self { table: m.rows(), identity: m.identity() }
    }

    pub fn build(self) -> Result<Monoid> {
        Monoid::new(FiniteSemigroup::new(self.table)?, self.identity)
    }
}

/// Wire form of a [`Bimodule`]:
/// `{"left": M, "right": M, "size": n, "left_action": [[..]], "right_action": [[..]]}`
/// where `left_action[a][x] = a·x` and `right_action[x][b] = x·b`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BimoduleJson {
    pub left: MonoidJson,
    pub right: MonoidJson,
    pub size: usize,
    pub left_action: Vec<Vec<usize>>,
    pub right_action: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

impl Bimodule {
    pub fn to_json(&self) -> BimoduleJson {
        BimoduleJson {
            left: MonoidJson::of(&self.left),
            right: MonoidJson::of(&self.right),
            size: self.size,
            left_action: self.left_action.clone(),
            right_action: self.right_action.clone(),
            labels: Some(self.labels.clone()),
        }
    }

    pub fn from_json(json: BimoduleJson) -> Result<Self> {
        let (left, right) = (json.left.build()?, json.right.build()?);
        match json.labels {
            Some(labels) => Self::with_labels(left, right, json.size, json.left_action, json.right_action, labels),
            None => Self::new(left, right, json.size, json.left_action, json.right_action),
        }
    }

    pub fn from_json_str(text: &str) -> Result<Self> {
        Self::from_json(serde_json::from_str(text)?)
    }
}

/// A partition of `X × Y`. Pair `(x, y)` has code `x·|Y| + y`; classes are
/// numbered by their smallest pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorSet {
    left_len: usize,
    right_len: usize,
    class_of: Vec<usize>,
    reps: Vec<(usize, usize)>,
}

impl TensorSet {
    /// Renumbers arbitrary class labels so class ids follow smallest pairs.
    fn from_labels(left_len: usize, right_len: usize, labels: &[usize]) -> Self {
        let mut renumber = vec![usize::MAX; labels.len()];
        let mut class_of = Vec::with_capacity(labels.len());
        let mut reps = Vec::new();
        for (code, &label) in labels.iter().enumerate() {
            if renumber[label] == usize::MAX {
                renumber[label] = reps.len();
                reps.push((code / right_len, code % right_len));
            }
            class_of.push(renumber[label]);
        }
        Self { left_len, right_len, class_of, reps }
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    pub fn class(&self, x: usize, y: usize) -> usize {
        self.class_of[x * self.right_len + y]
    }

    /// Smallest pair of each class.
    pub fn reps(&self) -> &[(usize, usize)] {
        &self.reps
    }

    pub fn pairs(&self) -> impl Iterator<Item = ((usize, usize), usize)> + '_ {
        let r = self.right_len;
        self.class_of.iter().enumerate().map(move |(code, &c)| ((code / r, code % r), c))
    }

    pub fn classes(&self) -> Vec<Vec<(usize, usize)>> {
        let mut out = vec![Vec::new(); self.len()];
        for (pair, c) in self.pairs() {
            out[c].push(pair);
        }
        out
    }

    pub fn class_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.len()];
        for &c in &self.class_of {
            sizes[c] += 1;
        }
        sizes
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.left_len, self.right_len)
    }
}

impl fmt::Display for TensorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, class) in self.classes().iter().enumerate() {
            if k > 0 {
                write!(f, " | ")?;
            }
            let pairs: Vec<String> = class.iter().map(|(x, y)| format!("{x}⊗{y}")).collect();
            write!(f, "{}", pairs.join(" "))?;
        }
        Ok(())
    }
}

/// `X ⊗_B Y` together with its induced `(A, C)`-bimodule structure.
#[derive(Clone, Debug)]
pub struct Tensor {
    pub set: TensorSet,
    pub module: Bimodule,
}

/// Quotient of `X × Y` by the equivalence generated by `(x·b, y) ∼ (x, b·y)`.
pub fn tensor(x: &Bimodule, y: &Bimodule) -> Result<Tensor> {
    if x.right_monoid() != y.left_monoid() {
        return Err(Error::MonoidMismatch);
    }
    let b = x.right_monoid();
    let (nx, ny) = (x.len(), y.len());
    let mut uf = UnionFind::<usize>::new(nx * ny);
    for xi in 0..nx {
        for bi in b.elements() {
            let xb = x.act_right(xi, bi);
            for yi in 0..ny {
                uf.union(xb * ny + yi, xi * ny + y.act_left(bi, yi));
            }
        }
    }
    let roots = uf.into_labeling();
    let set = TensorSet::from_labels(nx, ny, &roots);

    let a = x.left_monoid();
    let c = y.right_monoid();
    const UNSET: usize = usize::MAX;
    let mut left_action = vec![vec![UNSET; set.len()]; a.len()];
    let mut right_action = vec![vec![UNSET; c.len()]; set.len()];
    for ((xi, yi), class) in set.pairs() {
        for ai in a.elements() {
            let image = set.class(x.act_left(ai, xi), yi);
            let slot = &mut left_action[ai][class];
            if *slot == UNSET {
                *slot = image;
            } else if *slot != image {
                return Err(Error::IllDefinedAction { class });
            }
        }
        for ci in c.elements() {
            let image = set.class(xi, y.act_right(yi, ci));
            let slot = &mut right_action[class][ci];
            if *slot == UNSET {
                *slot = image;
            } else if *slot != image {
                return Err(Error::IllDefinedAction { class });
            }
        }
    }
    let labels = set.reps().iter().map(|&(xi, yi)| format!("{}⊗{}", x.labels()[xi], y.labels()[yi])).collect();
    let module = Bimodule::with_labels(a.clone(), c.clone(), set.len(), left_action, right_action, labels)?;
    Ok(Tensor { set, module })
}

/// Orbits of `g·(x, y) = (x·g⁻¹, g·y)` on `L × R`, where `L` is acted on from
/// the right and `R` from the left by the same group. The result is checked
/// against the tensor partition, which must coincide.
pub fn group_quotient(l: &Bimodule, r: &Bimodule) -> Result<TensorSet> {
    let g = l.right_monoid();
    if g != r.left_monoid() {
        return Err(Error::MonoidMismatch);
    }
    if !g.is_group() {
        return Err(Error::NotAGroup("acting monoid".into()));
    }
    let inverse: Vec<usize> = g.elements().map(|h| g.inverse(h).expect("group")).collect();
    let (nl, nr) = (l.len(), r.len());
    let mut label = vec![usize::MAX; nl * nr];
    for x in 0..nl {
        for y in 0..nr {
            if label[x * nr + y] != usize::MAX {
                continue;
            }
            let id = x * nr + y;
            for h in g.elements() {
                label[l.act_right(x, inverse[h]) * nr + r.act_left(h, y)] = id;
            }
        }
    }
    let orbits = TensorSet::from_labels(nl, nr, &label);
    let via_tensor = tensor(l, r)?.set;
    if via_tensor != orbits {
        return Err(Error::Postcondition("group orbits differ from the tensor partition".into()));
    }
    Ok(orbits)
}

/// Outcome of checking that `(x, y) ↦ x·y` is a bijection `L×R/G → LR`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BijectionReport {
    pub classes: usize,
    /// `LR` as local indices of the first endomorphism monoid.
    pub image: Vec<usize>,
    pub l: usize,
    pub r: usize,
    pub g: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum BijectionFailure {
    #[error("second endomorphism monoid is not a group")]
    GSideNotGroup,
    #[error("group quotient failed: {0}")]
    Quotient(Error),
    #[error("x·y is not constant on the class of {0:?}")]
    NotWellDefined((usize, usize)),
    #[error("classes {0} and {1} have the same product")]
    Collision(usize, usize),
    #[error("image misses {0}")]
    NotSurjective(usize),
    #[error("|LR|·|G| = {0} but |L|·|R| = {1}")]
    Cardinality(usize, usize),
}

/// Builds `f: L×R/G → LR` from the category's composition and checks that it
/// is well defined, injective, surjective and that `|LR|·|G| = |L|·|R|`.
pub fn mult_bijection_check(c: &TwoObjectCategory) -> Result<BijectionReport, BijectionFailure> {
    let g = c.monoid_g().map_err(|_| BijectionFailure::GSideNotGroup)?;
    if !g.is_group() {
        return Err(BijectionFailure::GSideNotGroup);
    }
    let (lm, rm) = (c.l_bimodule(), c.r_bimodule());
    let (lm, rm) = match (lm, rm) {
        (Ok(l), Ok(r)) => (l, r),
        (Err(e), _) | (_, Err(e)) => return Err(BijectionFailure::Quotient(e)),
    };
    let quotient = group_quotient(&lm, &rm).map_err(BijectionFailure::Quotient)?;
    let lr = &c.tables().lr;
    let mut value = vec![usize::MAX; quotient.len()];
    for ((x, y), class) in quotient.pairs() {
        let p = lr[x][y];
        if value[class] == usize::MAX {
            value[class] = p;
        } else if value[class] != p {
            return Err(BijectionFailure::NotWellDefined((x, y)));
        }
    }
    let mut first = vec![usize::MAX; c.sizes().0];
    for (class, &v) in value.iter().enumerate() {
        if first[v] != usize::MAX {
            return Err(BijectionFailure::Collision(first[v], class));
        }
        first[v] = class;
    }
    // LR computed directly from the table.
    let mut image: Vec<usize> = lr.iter().flatten().copied().collect();
    image.sort_unstable();
    image.dedup();
    if let Some(&miss) = image.iter().find(|&&p| first[p] == usize::MAX) {
        return Err(BijectionFailure::NotSurjective(miss));
    }
    let (_, l, r, gs) = c.sizes();
    if image.len() * gs != l * r {
        return Err(BijectionFailure::Cardinality(image.len() * gs, l * r));
    }
    Ok(BijectionReport { classes: quotient.len(), image, l, r, g: gs })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyclic(m: usize) -> Monoid {
        Monoid::from_semigroup(FiniteSemigroup::from_fn(m, |a, b| (a + b) % m).unwrap()).unwrap()
    }

    fn t2() -> Monoid {
        let maps = [[0, 0], [0, 1], [1, 0], [1, 1]];
        let index = |m: [usize; 2]| maps.iter().position(|&x| x == m).unwrap();
        Monoid::from_semigroup(
            FiniteSemigroup::from_fn(4, |f, g| {
                let (f, g) = (maps[f], maps[g]);
                index([g[f[0]], g[f[1]]])
            })
            .unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn json_round_trip() {
        let m = Bimodule::regular(&t2());
        let text = serde_json::to_string(&m.to_json()).unwrap();
        assert_eq!(Bimodule::from_json_str(&text).unwrap(), m);
        let mut broken = m.to_json();
        broken.right_action[1][2] = 0;
        assert!(Bimodule::from_json(broken).is_err());
    }

    /// `size` copies of a set with trivial actions.
    fn trivial_module(left: &Monoid, right: &Monoid, size: usize) -> Bimodule {
        Bimodule::new(
            left.clone(),
            right.clone(),
            size,
            vec![(0..size).collect(); left.len()],
            (0..size).map(|x| vec![x; right.len()]).collect(),
        )
        .unwrap()
    }

    #[test]
    fn regular_bimodule_is_valid() {
        let t = t2();
        let m = Bimodule::regular(&t);
        assert!(Bimodule::new(t.clone(), t.clone(), 4, m.left_action().to_vec(), m.right_action().to_vec()).is_ok());
    }

    #[test]
    fn corrupted_actions_are_caught() {
        let z = cyclic(2);
        let mut right = z.rows();
        right[0][0] = 1;
        assert!(matches!(
            Bimodule::new(z.clone(), z.clone(), 2, z.rows(), right),
            Err(Error::UnitLawViolation { side: "right", .. })
        ));
        // Left action of T2 on itself, right action by the "wrong" side.
        let t = t2();
        let transposed: Vec<Vec<usize>> = (0..4).map(|x| (0..4).map(|b| t.mul(b, x)).collect()).collect();
        let err = Bimodule::new(t.clone(), t.clone(), 4, t.rows(), transposed).unwrap_err();
        assert!(matches!(err, Error::ActionLawViolation { .. } | Error::CommutationViolation(_)));
        // Both actions valid on their own: Z2 swaps 0,1 on the left and 1,2 on the right.
        let left = vec![vec![0, 1, 2], vec![1, 0, 2]];
        let right = vec![vec![0, 0], vec![1, 2], vec![2, 1]];
        assert_eq!(
            Bimodule::new(z.clone(), z.clone(), 3, left, right).unwrap_err(),
            Error::CommutationViolation((1, 0, 1))
        );
    }

    #[test]
    fn tensor_over_trivial_monoid_is_the_product() {
        let one = cyclic(1);
        let x = trivial_module(&one, &one, 3);
        let y = trivial_module(&one, &one, 2);
        let t = tensor(&x, &y).unwrap();
        assert_eq!(t.set.len(), 6);
        assert!(t.set.class_sizes().iter().all(|&s| s == 1));
    }

    #[test]
    fn tensor_over_free_group_action() {
        let z = cyclic(2);
        let reg = Bimodule::regular(&z);
        let t = tensor(&reg, &reg).unwrap();
        assert_eq!(t.set.len(), 2);
    }

    #[test]
    fn regular_tensor_collapses_to_products() {
        let t = t2();
        let reg = Bimodule::regular(&t);
        let ten = tensor(&reg, &reg).unwrap();
        assert_eq!(ten.set.len(), t.len());
        for ((x, y), class) in ten.set.pairs() {
            assert_eq!(class, ten.set.class(t.mul(x, y), t.identity()));
        }
    }

    #[test]
    fn tensor_rejects_mismatched_monoids() {
        let z = cyclic(2);
        let one = cyclic(1);
        assert_eq!(tensor(&Bimodule::regular(&z), &trivial_module(&one, &one, 1)).unwrap_err(), Error::MonoidMismatch);
    }

    #[test]
    fn group_quotients() {
        let one = cyclic(1);
        let m = trivial_module(&one, &one, 3);
        assert!(group_quotient(&m, &m).unwrap().class_sizes().iter().all(|&s| s == 1));

        let z = cyclic(2);
        let reg = Bimodule::regular(&z);
        let q = group_quotient(&reg, &reg).unwrap();
        assert_eq!(q.class_sizes(), vec![2, 2]);

        // Non-free actions: orbits shrink and the count is not |L||R|/|G|.
        let l = trivial_module(&one, &z, 2);
        let r = trivial_module(&z, &one, 2);
        let q = group_quotient(&l, &r).unwrap();
        assert!(q.class_sizes().iter().any(|&s| s < 2));
        assert_ne!(q.len(), 2 * 2 / 2);

        let t = t2();
        let reg = Bimodule::regular(&t);
        assert!(matches!(group_quotient(&reg, &reg), Err(Error::NotAGroup(_))));
    }
}
