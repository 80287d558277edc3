//! Groups of monoids, group isomorphism at small orders, and connectivity
//! witnesses.
//!
//! Two monoids are connected when some two-object category has them as its
//! endomorphism monoids (with nonempty hom-sets between the objects). The
//! witness built here routes both monoids through their groups:
//!
//! ```text
//! A ──C(A)── G_A ≅ G_B ──C(B)ᵒᵖ── B
//! ```
//!
//! and composes the two categories over the shared group.

use serde::Serialize;

use crate::category::{category_from_monoid, compose_categories, groupoid, CategoryMaps, Kind, TwoObjectCategory};
use crate::error::{Error, Result};
use crate::ideals::{group_of_intersection, minimal_left_ideals, minimal_right_ideals, GroupHandle};
use crate::semigroup::Monoid;

/// Largest group order [`groups_isomorphic`] accepts.
pub const MAX_GROUP_ORDER: usize = 64;

/// Necessary conditions for two groups to be isomorphic.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct GroupInvariantProfile {
    pub order: usize,
    pub element_orders: Vec<usize>,
    pub abelian: bool,
    pub center_size: usize,
}

impl GroupInvariantProfile {
    pub fn of(g: &Monoid) -> Self {
        let order = g.len();
        let mut element_orders: Vec<usize> = g.elements().map(|x| element_order(g, x)).collect();
        element_orders.sort_unstable();
        let center_size = g.elements().filter(|&x| g.elements().all(|y| g.mul(x, y) == g.mul(y, x))).count();
        Self { order, element_orders, abelian: center_size == order, center_size }
    }
}

fn element_order(g: &Monoid, x: usize) -> usize {
    let mut k = 1;
    let mut p = x;
    while p != g.identity() {
        p = g.mul(p, x);
        k += 1;
    }
    k
}

/// An isomorphism `G → H` given on local indices of the two group tables.
pub fn groups_isomorphic(g: &GroupHandle, h: &GroupHandle) -> Result<Option<Vec<usize>>> {
    tables_isomorphic(g.table(), h.table())
}

/// Same as [`groups_isomorphic`] for monoids that are groups.
pub fn tables_isomorphic(g: &Monoid, h: &Monoid) -> Result<Option<Vec<usize>>> {
    for m in [g, h] {
        if !m.is_group() {
            return Err(Error::NotAGroup("isomorphism input".into()));
        }
        if m.len() > MAX_GROUP_ORDER {
            return Err(Error::GroupTooLarge(m.len(), MAX_GROUP_ORDER));
        }
    }
    if GroupInvariantProfile::of(g) != GroupInvariantProfile::of(h) {
        return Ok(None);
    }
    let gens = generators(g);
    let orders: Vec<usize> = h.elements().map(|y| element_order(h, y)).collect();
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .map(|&s| {
            let o = element_order(g, s);
            h.elements().filter(|&y| orders[y] == o).collect()
        })
        .collect();
    let mut images = vec![0; gens.len()];
    Ok(search(g, h, &gens, &candidates, &mut images, 0))
}

/// Greedy generating set: scan elements by decreasing order and keep those
/// outside the subgroup generated so far.
fn generators(g: &Monoid) -> Vec<usize> {
    let mut by_order: Vec<usize> = g.elements().collect();
    by_order.sort_by_key(|&x| (std::cmp::Reverse(element_order(g, x)), x));
    let mut gens = Vec::new();
    let mut reached = vec![false; g.len()];
    reached[g.identity()] = true;
    for x in by_order {
        if reached[x] {
            continue;
        }
        gens.push(x);
        reached = closure(g, &gens);
    }
    gens
}

fn closure(g: &Monoid, gens: &[usize]) -> Vec<bool> {
    let mut reached = vec![false; g.len()];
    reached[g.identity()] = true;
    let mut stack = vec![g.identity()];
    while let Some(u) = stack.pop() {
        for &s in gens {
            let v = g.mul(u, s);
            if !reached[v] {
                reached[v] = true;
                stack.push(v);
            }
        }
    }
    reached
}

fn search(
    g: &Monoid,
    h: &Monoid,
    gens: &[usize],
    candidates: &[Vec<usize>],
    images: &mut Vec<usize>,
    depth: usize,
) -> Option<Vec<usize>> {
    if depth == gens.len() {
        return extend(g, h, gens, images);
    }
    for &y in &candidates[depth] {
        images[depth] = y;
        if let Some(map) = search(g, h, gens, candidates, images, depth + 1) {
            return Some(map);
        }
    }
    None
}

/// Extends generator images along the Cayley graph and checks that the
/// result is a well-defined bijective homomorphism.
fn extend(g: &Monoid, h: &Monoid, gens: &[usize], images: &[usize]) -> Option<Vec<usize>> {
    const UNSET: usize = usize::MAX;
    let mut map = vec![UNSET; g.len()];
    let mut used = vec![false; h.len()];
    map[g.identity()] = h.identity();
    used[h.identity()] = true;
    let mut queue = std::collections::VecDeque::from([g.identity()]);
    while let Some(u) = queue.pop_front() {
        for (&s, &t) in gens.iter().zip(images) {
            let v = g.mul(u, s);
            let w = h.mul(map[u], t);
            if map[v] == UNSET {
                if used[w] {
                    return None;
                }
                map[v] = w;
                used[w] = true;
                queue.push_back(v);
            } else if map[v] != w {
                return None;
            }
        }
    }
    map.iter().all(|&x| x != UNSET).then_some(map)
}

/// The group of a monoid: the monoid itself when it is a group, otherwise
/// `L ∩ R` for the first minimal left and right ideals.
pub fn group_of(a: &Monoid) -> Result<GroupHandle> {
    if a.is_group() {
        return GroupHandle::whole(a);
    }
    let (l, r) = crate::ideals::canonical_minimal_pair(a);
    group_of_intersection(a, &l, &r)
}

/// `L ∩ R` for every pair of a minimal left ideal `L` and minimal right
/// ideal `R`.
pub fn all_groups_of(a: &Monoid) -> Result<Vec<GroupHandle>> {
    let rights = minimal_right_ideals(a);
    let mut out = Vec::new();
    for l in minimal_left_ideals(a) {
        for r in &rights {
            out.push(group_of_intersection(a, &l, r)?);
        }
    }
    Ok(out)
}

/// A category with first endomorphism monoid `a` and a group as second one:
/// the groupoid when `a` is a group, otherwise `category_from_monoid`.
pub fn category_to_group(a: &Monoid) -> Result<TwoObjectCategory> {
    if a.is_group() {
        groupoid(a)
    } else {
        category_from_monoid(a)
    }
}

#[derive(Clone, Debug)]
pub struct Connection {
    pub connected: bool,
    /// Isomorphism between the two groups on local indices of the group
    /// tables returned by [`group_of`].
    pub group_iso: Option<Vec<usize>>,
    /// A category whose endomorphism monoids equal `A` and `B` as tables.
    pub witness: Option<TwoObjectCategory>,
}

/// Decides connectivity through the groups and, when connected, builds a
/// witness category.
pub fn are_connected(a: &Monoid, b: &Monoid) -> Result<Connection> {
    let (ga, gb) = (group_of(a)?, group_of(b)?);
    let Some(group_iso) = groups_isomorphic(&ga, &gb)? else {
        return Ok(Connection { connected: false, group_iso: None, witness: None });
    };
    let witness = witness(a, b)?;
    Ok(Connection { connected: true, group_iso: Some(group_iso), witness: Some(witness) })
}

/// Composite `C(A) ∘ transport(C(B)ᵒᵖ)`. Fails with `NotAGroup` when the
/// groups of `a` and `b` are not isomorphic.
pub fn witness(a: &Monoid, b: &Monoid) -> Result<TwoObjectCategory> {
    let c1 = category_to_group(a)?;
    let c2 = category_to_group(b)?.reversed();
    let (g1, g2) = (c1.monoid_g()?, c2.monoid_a()?);
    let iso = tables_isomorphic(&g1, &g2)?.ok_or_else(|| Error::NotAGroup("groups are not isomorphic".into()))?;
    // Relabel the group side of c2 through the inverse isomorphism so that
    // both middle tables agree entry by entry.
    let mut inverse = vec![0; iso.len()];
    for (x, &y) in iso.iter().enumerate() {
        inverse[y] = x;
    }
    let mut maps = CategoryMaps::identity(&c2);
    maps.a = inverse;
    let c2 = c2.transport(&maps)?;
    let w = compose_categories(&c1, &c2)?;
    if w.monoid_a()? != *a || w.monoid_g()? != *b {
        return Err(Error::Postcondition("witness end monoids differ from the inputs".into()));
    }
    if w.len(Kind::L) == 0 || w.len(Kind::R) == 0 {
        return Err(Error::EmptyBimodule("witness"));
    }
    Ok(w)
}
