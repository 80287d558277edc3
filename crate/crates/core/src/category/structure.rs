use std::fmt;

use super::{iso::check_isomorphism, karoubi_pair, CategoryMaps, Kind, TwoObjectCategory};
use crate::error::{Error, Result};
use crate::ideals::{
    is_simple, is_two_sided_ideal, minimal_left_ideals, minimal_right_ideals, principal_two_sided_ideal, GroupHandle,
    IdealSubset, Side,
};
use crate::semigroup::{Monoid, Subset};

fn group_side(c: &TwoObjectCategory) -> Result<Monoid> {
    let g = c.monoid_g()?;
    if !g.is_group() {
        return Err(Error::GSideNotGroup);
    }
    Ok(g)
}

fn ideal(a: &Monoid, members: impl IntoIterator<Item = usize>, side: Side) -> IdealSubset {
    let mut v: Vec<usize> = members.into_iter().collect();
    v.sort_unstable();
    v.dedup();
    IdealSubset { subset: Subset::from_sorted(a.fingerprint(), v), side, generator: None }
}

/// `S = L·R` as a two-sided ideal of the monoid `A` (local indices of the `A`
/// hom-set). Checks that `S` is a simple ideal and that `|S|·|G| = |L|·|R|`.
pub fn extract_simple(c: &TwoObjectCategory) -> Result<IdealSubset> {
    group_side(c)?;
    if c.len(Kind::L) == 0 {
        return Err(Error::EmptyBimodule("L"));
    }
    if c.len(Kind::R) == 0 {
        return Err(Error::EmptyBimodule("R"));
    }
    let a = c.monoid_a()?;
    let lr = &c.tables().lr;
    let s = ideal(&a, lr.iter().flatten().copied(), Side::TwoSided);
    if !is_two_sided_ideal(&a, &s.subset) {
        return Err(Error::Postcondition(format!("L·R = {} is not an ideal", s.subset)));
    }
    // x·y with the first x and y lies in the principal ideal of every member.
    let xy = lr[0][0];
    if let Some(&m) = s.members().iter().find(|&&m| !principal_two_sided_ideal(&a, m).subset.contains(xy)) {
        return Err(Error::Postcondition(format!("{xy} is not in the ideal generated by {m}")));
    }
    if !is_simple(&a.restrict(&s.subset)?) {
        return Err(Error::Postcondition("L·R is not simple".into()));
    }
    let (_, l, r, g) = c.sizes();
    if s.len() * g != l * r {
        return Err(Error::Postcondition(format!("|S|·|G| = {} but |L|·|R| = {}", s.len() * g, l * r)));
    }
    Ok(s)
}

/// `false` iff some `x ∈ L`, `y ∈ R` satisfy `x·y = 1_A` and `y·x = 1_G`.
pub fn is_reduced(c: &TwoObjectCategory) -> bool {
    let t = c.tables();
    !(0..c.len(Kind::L)).any(|x| (0..c.len(Kind::R)).any(|y| t.lr[x][y] == c.unit_a() && t.rl[y][x] == c.unit_g()))
}

/// `L_y = L·y`, `R_x = x·R` and `G_xy = x·G·y` inside `A`.
#[derive(Clone, Debug)]
pub struct IdealSlices {
    pub l_y: IdealSubset,
    pub r_x: IdealSubset,
    pub g_xy: GroupHandle,
}

pub fn ideal_slices(c: &TwoObjectCategory, x: usize, y: usize) -> Result<IdealSlices> {
    group_side(c)?;
    if x >= c.len(Kind::L) {
        return Err(Error::OutOfRange(x, c.len(Kind::L)));
    }
    if y >= c.len(Kind::R) {
        return Err(Error::OutOfRange(y, c.len(Kind::R)));
    }
    let a = c.monoid_a()?;
    let t = c.tables();
    let l_y = ideal(&a, (0..c.len(Kind::L)).map(|u| t.lr[u][y]), Side::Left);
    let r_x = ideal(&a, (0..c.len(Kind::R)).map(|v| t.lr[x][v]), Side::Right);
    let g_set = ideal(&a, (0..c.len(Kind::G)).map(|g| t.lr[t.lg[x][g]][y]), Side::TwoSided).subset;

    if !minimal_left_ideals(&a).iter().any(|m| m.subset == l_y.subset) {
        return Err(Error::Postcondition(format!("L_y = {} is not a minimal left ideal", l_y.subset)));
    }
    if !minimal_right_ideals(&a).iter().any(|m| m.subset == r_x.subset) {
        return Err(Error::Postcondition(format!("R_x = {} is not a minimal right ideal", r_x.subset)));
    }
    if r_x.subset.intersection(&l_y.subset)? != g_set {
        return Err(Error::Postcondition("x·G·y differs from R_x ∩ L_y".into()));
    }
    let g_xy = GroupHandle::from_subset(&a, &g_set)?;
    let s = ideal(&a, t.lr.iter().flatten().copied(), Side::TwoSided);
    let prod = crate::ideals::subset_product(&a, &l_y.subset, &r_x.subset)?;
    if prod != s.subset {
        return Err(Error::Postcondition("L_y·R_x differs from L·R".into()));
    }
    Ok(IdealSlices { l_y, r_x, g_xy })
}

/// Reason [`minimal_ideal_correspondence`] failed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CorrespondenceFailure {
    GSideNotGroup,
    /// A minimal left (right) ideal of `A` is not of the form `L_y` (`R_x`).
    Unmatched {
        side: Side,
        ideal: Vec<usize>,
    },
    /// Some `L_y` (`R_x`) is not a minimal ideal.
    NotMinimal {
        side: Side,
        element: usize,
    },
    /// Two elements in one orbit give different slices.
    NotInvariant {
        side: Side,
        elements: (usize, usize),
    },
    /// Two orbits give the same slice.
    Collision {
        side: Side,
        elements: (usize, usize),
    },
}

impl fmt::Display for CorrespondenceFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::GSideNotGroup => f.write_str("second endomorphism monoid is not a group"),
            Self::Unmatched { side, ideal } => write!(f, "minimal {side:?} ideal {ideal:?} is not matched"),
            Self::NotMinimal { side, element } => write!(f, "slice of {element} is not a minimal {side:?} ideal"),
            Self::NotInvariant { side, elements } => {
                write!(f, "{side:?} slices of {} and {} differ within an orbit", elements.0, elements.1)
            }
            Self::Collision { side, elements } => {
                write!(f, "{side:?} slices of {} and {} coincide across orbits", elements.0, elements.1)
            }
        }
    }
}

/// One side of the correspondence. `slice(e)` is the ideal attached to
/// element `e`, `act(g, e)` the group action, `minimal` the target ideals.
fn correspond(
    side: Side,
    count: usize,
    group: &Monoid,
    act: impl Fn(usize, usize) -> usize,
    slice: impl Fn(usize) -> Vec<usize>,
    minimal: Vec<Vec<usize>>,
) -> Result<(), CorrespondenceFailure> {
    let mut orbit = vec![usize::MAX; count];
    let mut reps: Vec<(usize, Vec<usize>)> = Vec::new();
    for e in 0..count {
        let own = slice(e);
        if !minimal.contains(&own) {
            return Err(CorrespondenceFailure::NotMinimal { side, element: e });
        }
        if orbit[e] != usize::MAX {
            let rep = reps[orbit[e]].0;
            if reps[orbit[e]].1 != own {
                return Err(CorrespondenceFailure::NotInvariant { side, elements: (rep, e) });
            }
            continue;
        }
        if let Some((rep, _)) = reps.iter().find(|(_, s)| *s == own) {
            return Err(CorrespondenceFailure::Collision { side, elements: (*rep, e) });
        }
        for g in group.elements() {
            orbit[act(g, e)] = reps.len();
        }
        reps.push((e, own));
    }
    if let Some(m) = minimal.iter().find(|m| !reps.iter().any(|(_, s)| s == *m)) {
        return Err(CorrespondenceFailure::Unmatched { side, ideal: m.clone() });
    }
    Ok(())
}

/// Checks that `y ↦ L_y` induces a bijection from `G`-orbits on `R` onto the
/// minimal left ideals of `A`, and `x ↦ R_x` one from `G`-orbits on `L` onto
/// the minimal right ideals.
pub fn minimal_ideal_correspondence(c: &TwoObjectCategory) -> Result<(), CorrespondenceFailure> {
    let g = group_side(c).map_err(|_| CorrespondenceFailure::GSideNotGroup)?;
    let a = c.monoid_a().map_err(|_| CorrespondenceFailure::GSideNotGroup)?;
    let t = c.tables();
    let (nl, nr) = (c.len(Kind::L), c.len(Kind::R));
    let sorted = |it: &mut dyn Iterator<Item = usize>| {
        let mut v: Vec<usize> = it.collect();
        v.sort_unstable();
        v.dedup();
        v
    };
    let left_min = minimal_left_ideals(&a).into_iter().map(|m| m.members().to_vec()).collect();
    correspond(Side::Left, nr, &g, |h, y| t.gr[h][y], |y| sorted(&mut (0..nl).map(|u| t.lr[u][y])), left_min)?;
    let right_min = minimal_right_ideals(&a).into_iter().map(|m| m.members().to_vec()).collect();
    correspond(Side::Right, nl, &g, |h, x| t.lg[x][h], |x| sorted(&mut (0..nr).map(|v| t.lr[x][v])), right_min)
}

/// A standardized copy `C′` of a category together with the isomorphism
/// `C → C′` and the pair `(x, y)` with `y·x = 1_G` it was built from.
#[derive(Clone, Debug)]
pub struct Standardization {
    pub category: TwoObjectCategory,
    pub maps: CategoryMaps,
    pub x: usize,
    pub y: usize,
}

/// Standardizes with `x` the first element of `L` and `y = (y₀·x)⁻¹·y₀` for
/// `y₀` the first element of `R`.
pub fn standardize(c: &TwoObjectCategory) -> Result<Standardization> {
    let g = group_side(c)?;
    if c.len(Kind::L) == 0 || c.len(Kind::R) == 0 {
        return Err(Error::EmptyBimodule(if c.len(Kind::L) == 0 { "L" } else { "R" }));
    }
    let t = c.tables();
    let (x, y0) = (0, 0);
    let inv = g.inverse(t.rl[y0][x]).expect("group");
    standardize_with(c, x, t.gr[inv][y0])
}

/// Rebuilds `C` inside `A` as `(A, L·y, x·R, x·G·y)` for an admissible pair
/// (`y·x = 1_G`) and verifies `φ(g) = xgy`, `ψ(u) = uy`, `ψ′(v) = xv` as a
/// category isomorphism.
pub fn standardize_with(c: &TwoObjectCategory, x: usize, y: usize) -> Result<Standardization> {
    group_side(c)?;
    let a = c.monoid_a()?;
    if a.is_group() {
        return Err(Error::AIsGroup);
    }
    if x >= c.len(Kind::L) || y >= c.len(Kind::R) {
        return Err(Error::OutOfRange(x.max(y), c.len(Kind::L).min(c.len(Kind::R))));
    }
    let t = c.tables();
    if t.rl[y][x] != c.unit_g() {
        return Err(Error::Postcondition(format!("y·x is not the identity for x = {x}, y = {y}")));
    }
    let e = t.lr[x][y];
    let local = karoubi_pair(&a, c.unit_a(), e)?;
    let position = |kind: Kind, v: usize| {
        local.hom(kind).position(v).ok_or_else(|| Error::Postcondition(format!("{v} is outside {kind}′")))
    };
    let map = |kind: Kind, f: &dyn Fn(usize) -> usize| -> Result<Vec<usize>> {
        (0..c.len(kind)).map(|i| position(kind, f(i))).collect()
    };
    let maps = CategoryMaps {
        a: map(Kind::A, &|i| i)?,
        l: map(Kind::L, &|u| t.lr[u][y])?,
        r: map(Kind::R, &|v| t.lr[x][v])?,
        g: map(Kind::G, &|h| t.lr[t.lg[x][h]][y])?,
    };
    let category = local.rebase_ambient(c.hom(Kind::A));
    check_isomorphism(c, &category, &maps).map_err(|v| Error::Postcondition(v.to_string()))?;
    Ok(Standardization { category, maps, x, y })
}
