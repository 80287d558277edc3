//! Invariant checks over monoids and categories, grouped by the ten suite
//! criteria. Each check returns `Err(message)` naming the first failure.

use serde::Serialize;

use crate::bimodule::mult_bijection_check;
use crate::category::{
    category_from_monoid, category_from_simple, category_isomorphic, compose_categories, extract_simple,
    minimal_ideal_correspondence, standardize, standardize_with, Kind, TwoObjectCategory,
};
use crate::connectivity::{are_connected, group_of, groups_isomorphic};
use crate::ideals::{
    canonical_minimal_pair, group_of_intersection, is_simple, is_two_sided_ideal, kernel, principal_two_sided_ideal,
};
use crate::rees::{rees_decomposition, verify_rees_iso};
use crate::semigroup::Monoid;

pub type Check = Result<(), String>;

/// Largest kernel the Rees criterion decomposes.
pub const REES_LIMIT: usize = 16;

/// Criterion names, indexed by criterion number minus one.
pub const CRITERIA: [&str; 10] = [
    "kernel",
    "cardinality",
    "non-group bound",
    "round trip",
    "category validity",
    "bijection",
    "rees",
    "standardization",
    "correspondence",
    "connectivity",
];

/// Cardinalities for one monoid with the canonical minimal ideals.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Cardinalities {
    pub monoid: usize,
    pub kernel: usize,
    pub left: usize,
    pub right: usize,
    pub group: usize,
    pub is_group: bool,
}

pub fn cardinalities(m: &Monoid) -> Result<Cardinalities, String> {
    let k = kernel(m);
    let (l, r) = canonical_minimal_pair(m);
    let g = group_of_intersection(m, &l, &r).map_err(|e| e.to_string())?;
    Ok(Cardinalities {
        monoid: m.len(),
        kernel: k.len(),
        left: l.len(),
        right: r.len(),
        group: g.order(),
        is_group: m.is_group(),
    })
}

/// Criterion 1: the kernel is a nonempty simple ideal inside every principal
/// two-sided ideal, hence the unique minimal ideal.
pub fn check_kernel(m: &Monoid) -> Check {
    let k = kernel(m);
    if k.is_empty() || !is_two_sided_ideal(m, &k.subset) {
        return Err(format!("kernel {} is not a nonempty ideal", k.subset));
    }
    if let Some(a) = m.elements().find(|&a| !k.subset.is_subset_of(&principal_two_sided_ideal(m, a).subset)) {
        return Err(format!("kernel is not inside the ideal generated by {a}"));
    }
    let s = m.restrict(&k.subset).map_err(|e| e.to_string())?;
    if !is_simple(&s) {
        return Err("kernel is not simple".into());
    }
    Ok(())
}

/// Criterion 2.
pub fn check_cardinality(m: &Monoid) -> Check {
    let c = cardinalities(m)?;
    if c.left % c.group != 0 || c.right % c.group != 0 {
        return Err(format!("|G| = {} does not divide |L| = {} and |R| = {}", c.group, c.left, c.right));
    }
    if c.kernel * c.group != c.left * c.right {
        return Err(format!("|S|·|G| = {} but |L|·|R| = {}", c.kernel * c.group, c.left * c.right));
    }
    Ok(())
}

/// Criterion 3 for one monoid. Returns whether equality holds.
pub fn check_non_group_bound(m: &Monoid) -> Result<bool, String> {
    let c = cardinalities(m)?;
    if c.is_group {
        return Ok(false);
    }
    let bound = c.left * c.right + c.group;
    if c.monoid * c.group < bound {
        return Err(format!("|A| = {} is below |L||R|/|G| + 1", c.monoid));
    }
    Ok(c.monoid * c.group == bound)
}

/// Criterion 4 (non-group monoids only).
pub fn check_round_trip(m: &Monoid) -> Check {
    if m.is_group() {
        return Ok(());
    }
    let c = category_from_monoid(m).map_err(|e| e.to_string())?;
    let s = extract_simple(&c).map_err(|e| e.to_string())?;
    let ambient: Vec<usize> = s.members().iter().map(|&i| c.hom(Kind::A).ambient[i]).collect();
    let k = kernel(m);
    if ambient != k.members() {
        return Err(format!("L·R = {ambient:?} but the kernel is {:?}", k.members()));
    }
    Ok(())
}

/// Every category the suite builds from one monoid, tagged by origin.
pub fn constructed_categories(m: &Monoid) -> Result<Vec<(&'static str, TwoObjectCategory)>, String> {
    let err = |e: crate::error::Error| e.to_string();
    let mut out = Vec::new();
    let base = crate::connectivity::category_to_group(m).map_err(err)?;
    let k = kernel(m);
    let s = m.restrict(&k.subset).map_err(err)?;
    out.push(("simple", category_from_simple(&s).map_err(err)?));
    if !m.is_group() {
        out.push(("standardized", standardize(&base).map_err(err)?.category));
    }
    out.push(("composed", compose_categories(&base, &base.reversed()).map_err(err)?));
    out.insert(0, (if m.is_group() { "groupoid" } else { "monoid" }, base));
    Ok(out)
}

/// Criterion 5.
pub fn check_validity(categories: &[(&'static str, TwoObjectCategory)]) -> Check {
    for (name, c) in categories {
        c.check().map_err(|v| format!("{name}: {v}"))?;
        c.reversed().check().map_err(|v| format!("{name} reversed: {v}"))?;
    }
    Ok(())
}

/// Free right action of `G` on `L` and free left action on `R`.
pub fn check_free_actions(c: &TwoObjectCategory) -> Check {
    let t = c.tables();
    let ng = c.len(Kind::G);
    for x in 0..c.len(Kind::L) {
        let mut seen = vec![false; c.len(Kind::L)];
        for g in 0..ng {
            if std::mem::replace(&mut seen[t.lg[x][g]], true) {
                return Err(format!("G does not act freely on L element {x}"));
            }
        }
    }
    for y in 0..c.len(Kind::R) {
        let mut seen = vec![false; c.len(Kind::R)];
        for g in 0..ng {
            if std::mem::replace(&mut seen[t.gr[g][y]], true) {
                return Err(format!("G does not act freely on R element {y}"));
            }
        }
    }
    Ok(())
}

fn g_is_group(c: &TwoObjectCategory) -> bool {
    c.monoid_g().map(|g| g.is_group()).unwrap_or(false)
}

/// Criterion 6 on every category with a group second endomorphism monoid.
pub fn check_bijection(categories: &[(&'static str, TwoObjectCategory)]) -> Check {
    for (name, c) in categories.iter().filter(|(_, c)| g_is_group(c)) {
        check_free_actions(c).map_err(|e| format!("{name}: {e}"))?;
        mult_bijection_check(c).map_err(|e| format!("{name}: {e}"))?;
    }
    Ok(())
}

/// Criterion 7 on the kernel when it has at most [`REES_LIMIT`] elements.
/// Returns whether the kernel was in range.
pub fn check_rees(m: &Monoid) -> Result<bool, String> {
    let k = kernel(m);
    if k.len() > REES_LIMIT {
        return Ok(false);
    }
    let s = m.restrict(&k.subset).map_err(|e| e.to_string())?;
    let d = rees_decomposition(&s).map_err(|e| e.to_string())?;
    verify_rees_iso(&s, &d.rees, &d.map).map_err(|e| e.to_string())?;
    let dims = (d.rees.i_count(), d.rees.group().len(), d.rees.lambda_count());
    let again = rees_decomposition(&d.rees.expand()).map_err(|e| e.to_string())?;
    let dims_again = (again.rees.i_count(), again.rees.group().len(), again.rees.lambda_count());
    if dims != dims_again {
        return Err(format!("dimensions {dims:?} become {dims_again:?} after expansion"));
    }
    Ok(true)
}

/// Criterion 8 for non-group monoids. Returns whether a second admissible
/// pair existed to compare against.
pub fn check_standardization(m: &Monoid) -> Result<bool, String> {
    if m.is_group() {
        return Ok(false);
    }
    let err = |e: crate::error::Error| e.to_string();
    let c = category_from_monoid(m).map_err(err)?;
    let first = standardize(&c).map_err(err)?;
    if category_isomorphic(&c, &first.category).is_none() {
        return Err("standardized category is not isomorphic to the original".into());
    }
    let t = c.tables();
    let other = (0..c.len(Kind::L))
        .flat_map(|x| (0..c.len(Kind::R)).map(move |y| (x, y)))
        .rfind(|&(x, y)| t.rl[y][x] == c.unit_g() && (x, y) != (first.x, first.y));
    let Some((x, y)) = other else { return Ok(false) };
    let second = standardize_with(&c, x, y).map_err(err)?;
    if category_isomorphic(&first.category, &second.category).is_none() {
        return Err(format!("standardizations at {:?} and {:?} differ", (first.x, first.y), (x, y)));
    }
    Ok(true)
}

/// Criterion 9 on every category with a group second endomorphism monoid.
pub fn check_correspondence(categories: &[(&'static str, TwoObjectCategory)]) -> Check {
    for (name, c) in categories.iter().filter(|(_, c)| g_is_group(c)) {
        minimal_ideal_correspondence(c).map_err(|e| format!("{name}: {e}"))?;
    }
    Ok(())
}

/// Criterion 10 for one pair. Returns the verdict.
pub fn check_connectivity(a: &Monoid, b: &Monoid) -> Result<bool, String> {
    let err = |e: crate::error::Error| e.to_string();
    let expected = groups_isomorphic(&group_of(a).map_err(err)?, &group_of(b).map_err(err)?).map_err(err)?.is_some();
    let c = are_connected(a, b).map_err(err)?;
    if c.connected != expected {
        return Err(format!("verdict {} disagrees with group comparison {expected}", c.connected));
    }
    if let Some(w) = &c.witness {
        w.check().map_err(|v| format!("witness: {v}"))?;
        if w.monoid_a().map_err(err)? != *a || w.monoid_g().map_err(err)? != *b {
            return Err("witness end monoids differ from the inputs".into());
        }
    }
    if c.connected != c.witness.is_some() {
        return Err("witness presence disagrees with the verdict".into());
    }
    Ok(c.connected)
}

/// Transitivity for one triple with both connections positive: the two
/// witnesses compose into a valid category from `a` to `c`.
pub fn check_transitivity(a: &Monoid, b: &Monoid, c: &Monoid) -> Check {
    let err = |e: crate::error::Error| e.to_string();
    let ab = are_connected(a, b).map_err(err)?.witness.ok_or("first pair is not connected")?;
    let bc = are_connected(b, c).map_err(err)?.witness.ok_or("second pair is not connected")?;
    let ac = compose_categories(&ab, &bc).map_err(err)?;
    ac.check().map_err(|v| v.to_string())?;
    if ac.monoid_a().map_err(err)? != *a || ac.monoid_g().map_err(err)? != *c {
        return Err("composite end monoids differ from the outer inputs".into());
    }
    Ok(())
}

/// Results of criteria 1 to 9 for one monoid.
#[derive(Clone, Debug, Serialize)]
pub struct MonoidReport {
    pub cardinalities: Option<Cardinalities>,
    pub results: Vec<Option<String>>,
    pub bound_equality: bool,
    pub rees_checked: bool,
    pub second_standardization: bool,
}

pub fn monoid_report(m: &Monoid) -> MonoidReport {
    let mut results = vec![None; 9];
    let mut set = |i: usize, r: Check| results[i] = r.err();
    set(0, check_kernel(m));
    set(1, check_cardinality(m));
    let bound = check_non_group_bound(m);
    let bound_equality = *bound.as_ref().unwrap_or(&false);
    set(2, bound.map(|_| ()));
    set(3, check_round_trip(m));
    match constructed_categories(m) {
        Ok(cats) => {
            set(4, check_validity(&cats));
            set(5, check_bijection(&cats));
            set(8, check_correspondence(&cats));
        }
        Err(e) => {
            for i in [4, 5, 8] {
                set(i, Err(e.clone()));
            }
        }
    }
    let rees = check_rees(m);
    let rees_checked = *rees.as_ref().unwrap_or(&false);
    set(6, rees.map(|_| ()));
    let st = check_standardization(m);
    let second_standardization = *st.as_ref().unwrap_or(&false);
    set(7, st.map(|_| ()));
    MonoidReport { cardinalities: cardinalities(m).ok(), results, bound_equality, rees_checked, second_standardization }
}
