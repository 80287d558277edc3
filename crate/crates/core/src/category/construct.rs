use super::{HomSet, Kind, TwoObjectCategory};
use crate::error::{Error, Result};
use crate::ideals::{canonical_minimal_pair, group_of_intersection, is_simple, kernel};
use crate::semigroup::{FiniteSemigroup, Monoid};

/// The full subcategory of the idempotent completion of `m` on `e1` and `e2`:
/// `A = e1·M·e1`, `L = e1·M·e2`, `R = e2·M·e1`, `G = e2·M·e2`.
pub fn karoubi_pair(m: &Monoid, e1: usize, e2: usize) -> Result<TwoObjectCategory> {
    for e in [e1, e2] {
        if e >= m.len() {
            return Err(Error::OutOfRange(e, m.len()));
        }
        if !m.is_idempotent(e) {
            return Err(Error::NotIdempotent(e));
        }
    }
    let slice = |p: usize, q: usize| -> Vec<usize> {
        let mut v: Vec<usize> = m.elements().map(|a| m.mul(m.mul(p, a), q)).collect();
        v.sort_unstable();
        v.dedup();
        v
    };
    TwoObjectCategory::from_ambient(m, [slice(e1, e1), slice(e1, e2), slice(e2, e1), slice(e2, e2)], e1, e2)
}

/// The groupoid with one isomorphism class of objects and automorphism group
/// `g`: every hom-set is a copy of `g`.
pub fn groupoid(g: &Monoid) -> Result<TwoObjectCategory> {
    if !g.is_group() {
        return Err(Error::NotAGroup("groupoid base".into()));
    }
    karoubi_pair(g, g.identity(), g.identity())
}

/// Category attached to a simple semigroup `S` inside `S¹` (a fresh identity
/// is always adjoined, so `S` itself sits at indices `0..|S|`).
pub fn category_from_simple(s: &FiniteSemigroup) -> Result<TwoObjectCategory> {
    if !is_simple(s) {
        return Err(Error::NotSimple);
    }
    let m = Monoid::adjoin_identity(s);
    let (left, right) = canonical_minimal_pair(s);
    let group = group_of_intersection(s, &left, &right)?;
    let c = karoubi_pair(&m, m.identity(), group.identity())?;

    if c.hom(Kind::G).ambient != group.elements().members() {
        return Err(Error::Postcondition("G differs from L ∩ R".into()));
    }
    let mut lr: Vec<usize> = c.tables().lr.iter().flatten().map(|&i| c.hom(Kind::A).ambient[i]).collect();
    lr.sort_unstable();
    lr.dedup();
    if lr != s.elements().collect::<Vec<_>>() {
        return Err(Error::Postcondition("L·R differs from S".into()));
    }
    let (_, l, r, g) = c.sizes();
    if s.len() * g != l * r {
        return Err(Error::Postcondition(format!("|S|·|G| = {} but |L|·|R| = {}", s.len() * g, l * r)));
    }
    Ok(c)
}

/// Category attached to a monoid that is not a group: `A` is the monoid and
/// the second object is the identity of the group `L ∩ R` cut out of the
/// kernel by the first minimal left and right ideals.
pub fn category_from_monoid(a: &Monoid) -> Result<TwoObjectCategory> {
    if a.is_group() {
        return Err(Error::IsAGroup);
    }
    let (left, right) = canonical_minimal_pair(a);
    let group = group_of_intersection(a, &left, &right)?;
    let c = karoubi_pair(a, a.identity(), group.identity())?;

    let (na, nl, nr, ng) = c.sizes();
    if nl != left.len() || nr != right.len() || ng != group.order() {
        return Err(Error::Postcondition("hom-sets differ from the minimal ideals".into()));
    }
    if let Some((x, y)) =
        (0..nl).flat_map(|x| (0..nr).map(move |y| (x, y))).find(|&(x, y)| c.tables().lr[x][y] == c.unit_a())
    {
        return Err(Error::Postcondition(format!("L element {x} times R element {y} is the identity")));
    }
    if na * ng < nl * nr + ng {
        return Err(Error::Postcondition(format!("|A| = {na} is below |L||R|/|G| + 1")));
    }
    let sub = kernel_subcategory(a)?;
    embeds(&sub, &c)?;
    Ok(c)
}

/// `category_from_simple` applied to the kernel of `a`, re-indexed so that
/// kernel elements carry their index in `a` and the adjoined identity is
/// `a`'s identity.
pub fn kernel_subcategory(a: &Monoid) -> Result<TwoObjectCategory> {
    let k = kernel(a);
    let s = a.restrict(&k.subset)?;
    let mut ambient = k.members().to_vec();
    ambient.push(a.identity());
    let labels = ambient.iter().map(|&i| a.label(i).to_string()).collect();
    Ok(category_from_simple(&s)?.rebase_ambient(&HomSet::new(ambient, labels)))
}

/// Checks that every hom-set of `sub` sits inside the matching hom-set of
/// `c` (compared by ambient index) and that all compositions agree.
fn embeds(sub: &TwoObjectCategory, c: &TwoObjectCategory) -> Result<()> {
    let mut maps: [Vec<usize>; 4] = Default::default();
    for kind in Kind::ALL {
        let target = c.hom(kind);
        maps[kind as usize] = sub
            .hom(kind)
            .ambient
            .iter()
            .map(|&x| {
                target.position(x).ok_or_else(|| Error::Postcondition(format!("element {x} of {kind} does not embed")))
            })
            .collect::<Result<_>>()?;
    }
    for (kx, ky) in super::Tables::PAIRS {
        let kz = kx.product(ky).expect("typed");
        let small = sub.tables().get(kx, ky).expect("typed");
        let big = c.tables().get(kx, ky).expect("typed");
        for (x, row) in small.iter().enumerate() {
            for (y, &z) in row.iter().enumerate() {
                if big[maps[kx as usize][x]][maps[ky as usize][y]] != maps[kz as usize][z] {
                    return Err(Error::Postcondition(format!("composition {kx}{ky} does not embed")));
                }
            }
        }
    }
    Ok(())
}
