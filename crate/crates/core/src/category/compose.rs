use super::{HomSet, Kind, Tables, TwoObjectCategory};
use crate::bimodule::{tensor, Tensor};
use crate::error::{Error, Result};

/// Composite of `C1` over `(A, L, R, B)` and `C2` over `(B, L′, R′, C)`: the
/// category over `(A, L ⊗_B L′, R′ ⊗_B R, C)`.
///
/// `[l⊗l′]·[r′⊗r] = l·((l′·r′)·r)` and `[r′⊗r]·[l⊗l′] = r′·((r·l)·l′)`. Each
/// composition is checked to be constant on classes, one argument at a time.
pub fn compose_categories(c1: &TwoObjectCategory, c2: &TwoObjectCategory) -> Result<TwoObjectCategory> {
    if c1.monoid_g()? != c2.monoid_a()? {
        return Err(Error::MiddleMonoidMismatch);
    }
    let lt = tensor(&c1.l_bimodule()?, &c2.l_bimodule()?)?;
    let rt = tensor(&c2.r_bimodule()?, &c1.r_bimodule()?)?;
    let (t1, t2) = (c1.tables(), c2.tables());

    // (l, l′, r′, r) ↦ l·((l′·r′)·r) in A.
    let lr_value = |l: usize, lp: usize, rp: usize, r: usize| t1.lr[l][t1.gr[t2.lr[lp][rp]][r]];
    let lr = class_table(&lt, &rt, "LR", lr_value)?;
    // (r′, r, l, l′) ↦ r′·((r·l)·l′) in C.
    let rl_value = |rp: usize, r: usize, l: usize, lp: usize| t2.rl[rp][t2.al[t1.rl[r][l]][lp]];
    let rl = class_table(&rt, &lt, "RL", rl_value)?;

    let tables = Tables {
        aa: t1.aa.clone(),
        al: lt.module.left_action().to_vec(),
        lg: lt.module.right_action().to_vec(),
        lr,
        ra: rt.module.right_action().to_vec(),
        gr: rt.module.left_action().to_vec(),
        rl,
        gg: t2.gg.clone(),
    };
    let hom = |t: &Tensor| {
        let ny = t.set.dims().1;
        HomSet::new(t.set.reps().iter().map(|&(x, y)| x * ny + y).collect(), t.module.labels().to_vec())
    };
    TwoObjectCategory::new(
        [c1.hom(Kind::A).clone(), hom(&lt), hom(&rt), c2.hom(Kind::G).clone()],
        c1.unit_a(),
        c2.unit_g(),
        tables,
    )
}

/// Table of `f` on classes of `first × second`. `f` is evaluated on every
/// pair of the first tensor against representatives of the second and vice
/// versa, which shows it is constant on classes.
fn class_table(
    first: &Tensor,
    second: &Tensor,
    pattern: &'static str,
    f: impl Fn(usize, usize, usize, usize) -> usize,
) -> Result<Vec<Vec<usize>>> {
    let mut table = vec![vec![usize::MAX; second.set.len()]; first.set.len()];
    for (p, &(a, b)) in first.set.reps().iter().enumerate() {
        for (q, &(c, d)) in second.set.reps().iter().enumerate() {
            table[p][q] = f(a, b, c, d);
        }
    }
    for ((a, b), p) in first.set.pairs() {
        for (q, &(c, d)) in second.set.reps().iter().enumerate() {
            if f(a, b, c, d) != table[p][q] {
                return Err(Error::IllDefinedComposition { pattern, left: p, right: q });
            }
        }
    }
    for (p, &(a, b)) in first.set.reps().iter().enumerate() {
        for ((c, d), q) in second.set.pairs() {
            if f(a, b, c, d) != table[p][q] {
                return Err(Error::IllDefinedComposition { pattern, left: p, right: q });
            }
        }
    }
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::category::{category_from_monoid, category_isomorphic, groupoid, is_reduced, karoubi_pair};
    use crate::semigroup::{FiniteSemigroup, Monoid};

    fn t2() -> Monoid {
        Monoid::from_semigroup(
            FiniteSemigroup::new(vec![vec![0, 0, 3, 3], vec![0, 1, 2, 3], vec![0, 2, 1, 3], vec![0, 3, 0, 3]]).unwrap(),
        )
        .unwrap()
    }

    fn lz2_one() -> Monoid {
        Monoid::adjoin_identity(&FiniteSemigroup::new(vec![vec![0, 0], vec![1, 1]]).unwrap())
    }

    fn z3() -> Monoid {
        Monoid::from_semigroup(FiniteSemigroup::from_fn(3, |a, b| (a + b) % 3).unwrap()).unwrap()
    }

    #[test]
    fn composing_with_regular_is_identity() {
        let c1 = category_from_monoid(&t2()).unwrap();
        let b = c1.monoid_g().unwrap();
        let c2 = karoubi_pair(&b, b.identity(), b.identity()).unwrap();
        let c = compose_categories(&c1, &c2).unwrap();
        assert_eq!(c.sizes(), c1.sizes());
        assert!(category_isomorphic(&c, &c1).is_some());
    }

    #[test]
    fn t2_to_lz2() {
        let c1 = category_from_monoid(&t2()).unwrap();
        let c2 = category_from_monoid(&lz2_one()).unwrap().reversed();
        let c = compose_categories(&c1, &c2).unwrap();
        assert!(c.is_valid());
        assert_eq!(c.monoid_a().unwrap(), t2());
        assert_eq!(c.monoid_g().unwrap().rows(), lz2_one().rows());
    }

    #[test]
    fn groupoids_compose_to_groupoid() {
        let g = groupoid(&z3()).unwrap();
        let c = compose_categories(&g, &g).unwrap();
        assert_eq!(c.sizes(), (3, 3, 3, 3));
        assert!(!is_reduced(&c));
    }

    #[test]
    fn mismatch() {
        let c1 = category_from_monoid(&t2()).unwrap();
        let c2 = groupoid(&z3()).unwrap();
        assert_eq!(compose_categories(&c1, &c2).unwrap_err(), Error::MiddleMonoidMismatch);
    }
}
