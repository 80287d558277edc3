//! Rees matrix semigroups and the decomposition of finite simple semigroups.
//!
//! Side convention: `I` indexes the right `G`-orbits of the chosen minimal
//! left ideal `L` (one per minimal right ideal) and `Λ` the left `G`-orbits of
//! the chosen minimal right ideal `R` (one per minimal left ideal). So
//! `|L| = |I|·|G|` and `|R| = |Λ|·|G|`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ideals::{canonical_minimal_pair, group_of_intersection, is_simple, GroupHandle, IdealSubset};
use crate::semigroup::{FiniteSemigroup, Monoid};

/// `M(G; I, Λ; P)` with `P` a `Λ × I` matrix over `G`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReesMatrixSemigroup {
    group: Monoid,
    i_count: usize,
    lambda_count: usize,
    sandwich: Vec<Vec<usize>>,
}

/// Wire form: `{"group_table": [...], "I": int, "Lambda": int, "P": [[...]]}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ReesJson {
    pub group_table: Vec<Vec<usize>>,
    #[serde(rename = "I")]
    pub i: usize,
    #[serde(rename = "Lambda")]
    pub lambda: usize,
    #[serde(rename = "P")]
    pub p: Vec<Vec<usize>>,
}

impl ReesMatrixSemigroup {
    pub fn new(group: Monoid, i_count: usize, lambda_count: usize, sandwich: Vec<Vec<usize>>) -> Result<Self> {
        if !group.is_group() {
            return Err(Error::NotAGroup("structure group table".into()));
        }
        if i_count == 0 || lambda_count == 0 {
            return Err(Error::BadRees("index sets must be nonempty".into()));
        }
        if sandwich.len() != lambda_count || sandwich.iter().any(|row| row.len() != i_count) {
            return Err(Error::BadRees(format!("sandwich matrix must be {lambda_count}x{i_count}")));
        }
        if sandwich.iter().flatten().any(|&p| p >= group.len()) {
            return Err(Error::BadRees("sandwich entry outside the group".into()));
        }
        Ok(Self { group, i_count, lambda_count, sandwich })
    }

    pub fn group(&self) -> &Monoid {
        &self.group
    }

    pub fn i_count(&self) -> usize {
        self.i_count
    }

    pub fn lambda_count(&self) -> usize {
        self.lambda_count
    }

    /// `p[λ][i]`.
    pub fn sandwich(&self) -> &[Vec<usize>] {
        &self.sandwich
    }

    pub fn len(&self) -> usize {
        self.i_count * self.group.len() * self.lambda_count
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Lexicographic position of `(i, g, λ)`.
    pub fn index_of(&self, i: usize, g: usize, lambda: usize) -> usize {
        (i * self.group.len() + g) * self.lambda_count + lambda
    }

    pub fn triple_of(&self, index: usize) -> (usize, usize, usize) {
        let lambda = index % self.lambda_count;
        let rest = index / self.lambda_count;
        (rest / self.group.len(), rest % self.group.len(), lambda)
    }

    /// `(i,g,λ)(j,h,μ) = (i, g·p_{λj}·h, μ)`.
    pub fn multiply(&self, a: (usize, usize, usize), b: (usize, usize, usize)) -> (usize, usize, usize) {
        let g = &self.group;
        (a.0, g.mul(g.mul(a.1, self.sandwich[a.2][b.0]), b.1), b.2)
    }

    /// Cayley table over the triples in lexicographic order.
    pub fn expand(&self) -> FiniteSemigroup {
        let n = self.len();
        let rows = (0..n)
            .map(|x| {
                (0..n)
                    .map(|y| {
                        let (i, g, l) = self.multiply(self.triple_of(x), self.triple_of(y));
                        self.index_of(i, g, l)
                    })
                    .collect()
            })
            .collect();
        let labels = (0..n)
            .map(|x| {
                let (i, g, l) = self.triple_of(x);
                format!("({i},{g},{l})")
            })
            .collect();
        FiniteSemigroup::with_labels(rows, labels).expect("rees multiplication is associative")
    }

    pub fn to_json(&self) -> ReesJson {
        ReesJson {
            group_table: self.group.rows(),
            i: self.i_count,
            lambda: self.lambda_count,
            p: self.sandwich.clone(),
        }
    }

    pub fn from_json(json: ReesJson) -> Result<Self> {
        let group = Monoid::from_semigroup(FiniteSemigroup::new(json.group_table)?)
            .map_err(|_| Error::NotAGroup("group table has no identity".into()))?;
        Self::new(group, json.i, json.lambda, json.p)
    }
}

/// Result of decomposing a simple semigroup.
#[derive(Clone, Debug)]
pub struct ReesDecomposition {
    pub rees: ReesMatrixSemigroup,
    /// `map[s]` is the index of the triple for `s` in [`ReesMatrixSemigroup::expand`].
    pub map: Vec<usize>,
    pub left: IdealSubset,
    pub right: IdealSubset,
    pub group: GroupHandle,
    /// Orbit representatives `x_i ∈ L`.
    pub x_reps: Vec<usize>,
    /// Orbit representatives `y_λ ∈ R`.
    pub y_reps: Vec<usize>,
}

/// Smallest-element representatives of the orbits of `act(x, g)` on `set`.
fn orbit_representatives(set: &[usize], group: &GroupHandle, act: impl Fn(usize, usize) -> usize) -> Vec<usize> {
    let mut covered: Vec<usize> = Vec::new();
    let mut reps = Vec::new();
    for &x in set {
        if covered.contains(&x) {
            continue;
        }
        reps.push(x);
        covered.extend(group.elements().members().iter().map(|&g| act(x, g)));
    }
    reps
}

/// Writes a simple semigroup as `M(G; I, Λ; P)` via `s = x_i·g·y_λ ↦ (i, g, λ)`
/// with `p_{λ,i} = y_λ·x_i`.
pub fn rees_decomposition(s: &FiniteSemigroup) -> Result<ReesDecomposition> {
    if !is_simple(s) {
        return Err(Error::NotSimple);
    }
    let (left, right) = canonical_minimal_pair(s);
    let group = group_of_intersection(s, &left, &right)?;
    let x_reps = orbit_representatives(left.members(), &group, |x, g| s.mul(x, g));
    let y_reps = orbit_representatives(right.members(), &group, |y, g| s.mul(g, y));

    let local =
        |a: usize| group.to_local(a).ok_or_else(|| Error::DecompositionFailure(format!("{a} lies outside the group")));
    let sandwich = y_reps
        .iter()
        .map(|&y| x_reps.iter().map(|&x| local(s.mul(y, x))).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    let rees = ReesMatrixSemigroup::new(group.table().clone(), x_reps.len(), y_reps.len(), sandwich)?;

    const UNSET: usize = usize::MAX;
    let mut map = vec![UNSET; s.len()];
    for (i, &x) in x_reps.iter().enumerate() {
        for (g, &ga) in group.elements().members().iter().enumerate() {
            for (l, &y) in y_reps.iter().enumerate() {
                let elem = s.mul(s.mul(x, ga), y);
                if map[elem] != UNSET {
                    return Err(Error::DecompositionFailure(format!("element {elem} is hit twice")));
                }
                map[elem] = rees.index_of(i, g, l);
            }
        }
    }
    if let Some(miss) = map.iter().position(|&m| m == UNSET) {
        return Err(Error::DecompositionFailure(format!("element {miss} is not reached")));
    }
    verify_rees_iso(s, &rees, &map).map_err(|e| Error::DecompositionFailure(e.to_string()))?;
    Ok(ReesDecomposition { rees, map, left, right, group, x_reps, y_reps })
}

/// Why a claimed isomorphism onto a Rees matrix semigroup fails.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum IsoFailure {
    #[error("sizes differ: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("image {1} of element {0} is out of range")]
    OutOfRange(usize, usize),
    #[error("elements {0} and {1} share an image")]
    NotInjective(usize, usize),
    #[error("map is not multiplicative at ({0}, {1})")]
    NotMultiplicative(usize, usize),
}

/// Checks bijectivity and `map(a·b) = map(a)·map(b)` over all pairs.
pub fn verify_rees_iso(s: &FiniteSemigroup, rees: &ReesMatrixSemigroup, map: &[usize]) -> Result<(), IsoFailure> {
    let n = s.len();
    if rees.len() != n || map.len() != n {
        return Err(IsoFailure::SizeMismatch(n, rees.len()));
    }
    let mut preimage = vec![usize::MAX; n];
    for (a, &m) in map.iter().enumerate() {
        if m >= n {
            return Err(IsoFailure::OutOfRange(a, m));
        }
        if preimage[m] != usize::MAX {
            return Err(IsoFailure::NotInjective(preimage[m], a));
        }
        preimage[m] = a;
    }
    for a in 0..n {
        for b in 0..n {
            let (i, g, l) = rees.multiply(rees.triple_of(map[a]), rees.triple_of(map[b]));
            if map[s.mul(a, b)] != rees.index_of(i, g, l) {
                return Err(IsoFailure::NotMultiplicative(a, b));
            }
        }
    }
    Ok(())
}
