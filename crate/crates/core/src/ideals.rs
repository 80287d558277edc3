//! Principal and minimal ideals, the kernel, simplicity, and the group living
//! on the intersection of a minimal left and a minimal right ideal.
//!
//! Minimal one-sided ideals are enumerated through principal ideals only. In a
//! finite semigroup every minimal left ideal `L` is principal: for any `a ∈ L`
//! the ideal `S¹a` is a left ideal inside `L`, hence equal to it. The same
//! argument covers right and two-sided ideals, so taking the inclusion-minimal
//! principal ideals is a complete enumeration.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::semigroup::{FiniteSemigroup, Monoid, Subset};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Side {
    Left,
    Right,
    TwoSided,
}

/// A nonempty ideal of a carrier semigroup.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealSubset {
    pub subset: Subset,
    pub side: Side,
    pub generator: Option<usize>,
}

impl IdealSubset {
    pub fn members(&self) -> &[usize] {
        self.subset.members()
    }

    pub fn len(&self) -> usize {
        self.subset.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subset.is_empty()
    }
}

pub fn is_left_ideal(s: &FiniteSemigroup, x: &Subset) -> bool {
    !x.is_empty() && x.members().iter().all(|&a| s.elements().all(|t| x.contains(s.mul(t, a))))
}

pub fn is_right_ideal(s: &FiniteSemigroup, x: &Subset) -> bool {
    !x.is_empty() && x.members().iter().all(|&a| s.elements().all(|t| x.contains(s.mul(a, t))))
}

pub fn is_two_sided_ideal(s: &FiniteSemigroup, x: &Subset) -> bool {
    is_left_ideal(s, x) && is_right_ideal(s, x)
}

fn left_mask(s: &FiniteSemigroup, a: usize) -> Vec<bool> {
    let mut mask = vec![false; s.len()];
    mask[a] = true;
    for t in s.elements() {
        mask[s.mul(t, a)] = true;
    }
    mask
}

fn right_mask(s: &FiniteSemigroup, a: usize) -> Vec<bool> {
    let mut mask = vec![false; s.len()];
    mask[a] = true;
    for t in s.elements() {
        mask[s.mul(a, t)] = true;
    }
    mask
}

/// `{a} ∪ Sa`.
pub fn principal_left_ideal(s: &FiniteSemigroup, a: usize) -> IdealSubset {
    IdealSubset { subset: Subset::from_mask(s.fingerprint(), &left_mask(s, a)), side: Side::Left, generator: Some(a) }
}

/// `{a} ∪ aS`.
pub fn principal_right_ideal(s: &FiniteSemigroup, a: usize) -> IdealSubset {
    IdealSubset { subset: Subset::from_mask(s.fingerprint(), &right_mask(s, a)), side: Side::Right, generator: Some(a) }
}

/// `{a} ∪ Sa ∪ aS ∪ SaS`, computed as the right closure of `S¹a`.
pub fn principal_two_sided_ideal(s: &FiniteSemigroup, a: usize) -> IdealSubset {
    let left = left_mask(s, a);
    let mut mask = left.clone();
    for (u, _) in left.iter().enumerate().filter(|(_, &b)| b) {
        for t in s.elements() {
            mask[s.mul(u, t)] = true;
        }
    }
    IdealSubset { subset: Subset::from_mask(s.fingerprint(), &mask), side: Side::TwoSided, generator: Some(a) }
}

fn minimal_among(mut ideals: Vec<IdealSubset>) -> Vec<IdealSubset> {
    ideals.sort_by(|a, b| a.subset.cmp(&b.subset));
    ideals.dedup_by(|a, b| a.subset == b.subset);
    let minimal: Vec<bool> =
        ideals.iter().map(|x| !ideals.iter().any(|y| y.len() < x.len() && y.subset.is_subset_of(&x.subset))).collect();
    ideals.into_iter().zip(minimal).filter(|(_, m)| *m).map(|(x, _)| x).collect()
}

/// Minimal left ideals, sorted by their member lists. The generator recorded
/// is the smallest member.
pub fn minimal_left_ideals(s: &FiniteSemigroup) -> Vec<IdealSubset> {
    minimal_among(s.elements().map(|a| principal_left_ideal(s, a)).collect())
        .into_iter()
        .map(|mut l| {
            l.generator = Some(l.members()[0]);
            l
        })
        .collect()
}

pub fn minimal_right_ideals(s: &FiniteSemigroup) -> Vec<IdealSubset> {
    minimal_among(s.elements().map(|a| principal_right_ideal(s, a)).collect())
        .into_iter()
        .map(|mut r| {
            r.generator = Some(r.members()[0]);
            r
        })
        .collect()
}

/// The unique minimal two-sided ideal of a finite semigroup.
pub fn kernel_of(s: &FiniteSemigroup) -> IdealSubset {
    let principal: Vec<IdealSubset> = s.elements().map(|a| principal_two_sided_ideal(s, a)).collect();
    let smallest =
        principal.iter().min_by_key(|j| (j.len(), j.members().to_vec())).expect("nonempty semigroup").clone();
    // Uniqueness: the smallest principal ideal sits inside every other one.
    assert!(
        principal.iter().all(|j| smallest.subset.is_subset_of(&j.subset)),
        "kernel is not contained in every principal ideal"
    );
    IdealSubset { generator: Some(smallest.members()[0]), ..smallest }
}

pub fn kernel(m: &Monoid) -> IdealSubset {
    kernel_of(m.semigroup())
}

/// Only ideal is the whole semigroup.
pub fn is_simple(s: &FiniteSemigroup) -> bool {
    s.elements().all(|a| principal_two_sided_ideal(s, a).len() == s.len())
}

/// `{x·y : x ∈ X, y ∈ Y}`.
pub fn subset_product(s: &FiniteSemigroup, x: &Subset, y: &Subset) -> Result<Subset> {
    s.check_carrier(x)?;
    s.check_carrier(y)?;
    let mut mask = vec![false; s.len()];
    for &a in x.members() {
        for &b in y.members() {
            mask[s.mul(a, b)] = true;
        }
    }
    Ok(Subset::from_mask(s.fingerprint(), &mask))
}

/// A subgroup of a carrier semigroup, with a private copy of its own table.
///
/// Local index `k` of [`GroupHandle::table`] is ambient element
/// `elements.members()[k]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupHandle {
    elements: Subset,
    identity: usize,
    table: Monoid,
}

impl GroupHandle {
    /// Checks closure, discovers the identity from the smallest member `z` by
    /// solving `e·z = z`, then checks neutrality and inverses.
    pub fn from_subset(s: &FiniteSemigroup, elements: &Subset) -> Result<Self> {
        s.check_carrier(elements)?;
        let z = *elements.members().first().ok_or_else(|| Error::NotAGroup("empty".into()))?;
        let local = s.restrict(elements).map_err(|e| Error::NotAGroup(format!("not closed ({e})")))?;
        let identity = elements
            .members()
            .iter()
            .copied()
            .find(|&e| s.mul(e, z) == z)
            .ok_or_else(|| Error::NotAGroup(format!("no e with e*{z} = {z}")))?;
        let local_identity = elements.position(identity).expect("member");
        let table =
            Monoid::new(local, local_identity).map_err(|_| Error::NotAGroup(format!("{identity} is not neutral")))?;
        if let Some(g) = table.elements().find(|&g| table.inverse(g).is_none()) {
            return Err(Error::NotAGroup(format!("{} has no inverse", elements.members()[g])));
        }
        Ok(Self { elements: elements.clone(), identity, table })
    }

    /// The whole monoid, which must be a group.
    pub fn whole(m: &Monoid) -> Result<Self> {
        Self::from_subset(m, &m.full_subset())
    }

    pub fn elements(&self) -> &Subset {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// Ambient identity.
    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn table(&self) -> &Monoid {
        &self.table
    }

    pub fn to_local(&self, ambient: usize) -> Option<usize> {
        self.elements.position(ambient)
    }

    pub fn to_ambient(&self, local: usize) -> usize {
        self.elements.members()[local]
    }

    /// Ambient inverse of an ambient member.
    pub fn inverse(&self, ambient: usize) -> Option<usize> {
        let g = self.to_local(ambient)?;
        self.table.inverse(g).map(|h| self.to_ambient(h))
    }
}

/// `G = L ∩ R` as a group, also checking `R·L = L ∩ R`.
pub fn group_of_intersection(s: &FiniteSemigroup, left: &IdealSubset, right: &IdealSubset) -> Result<GroupHandle> {
    let meet = left.subset.intersection(&right.subset)?;
    let group = GroupHandle::from_subset(s, &meet)?;
    let rl = subset_product(s, &right.subset, &left.subset)?;
    if rl != meet {
        return Err(Error::NotAGroup(format!("R·L = {rl} differs from L∩R = {meet}")));
    }
    Ok(group)
}

/// Canonical choice: the first minimal left and first minimal right ideal.
pub fn canonical_minimal_pair(s: &FiniteSemigroup) -> (IdealSubset, IdealSubset) {
    let l = minimal_left_ideals(s).into_iter().next().expect("finite semigroups have minimal ideals");
    let r = minimal_right_ideals(s).into_iter().next().expect("finite semigroups have minimal ideals");
    (l, r)
}
