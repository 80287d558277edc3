mod oracle;

use proptest::prelude::*;

use monocat::bimodule::{group_quotient, tensor, Bimodule};
use monocat::category::{
    category_from_monoid, category_from_simple, category_isomorphic, check_isomorphism, standardize, standardize_with,
    CategoryMaps, Kind, TwoObjectCategory, Violation,
};
use monocat::checks::check_free_actions;
use monocat::connectivity::{all_groups_of, are_connected, category_to_group, tables_isomorphic};
use monocat::corpus::{
    cyclic_group, full_transformation_monoid, generate, rectangular_band, rees_sample, symmetric_group, CorpusSpec,
    Family, GroupKind,
};
use monocat::ideals::{
    group_of_intersection, is_simple, kernel, minimal_left_ideals, minimal_right_ideals, subset_product,
};
use monocat::rees::{rees_decomposition, verify_rees_iso};
use monocat::semigroup::{FiniteSemigroup, Monoid};

/// Submonoid of the transformation monoid on up to three points generated by
/// a few random maps.
fn transformation_monoid() -> impl Strategy<Value = Monoid> {
    (1usize..=3).prop_flat_map(|n| {
        let size = n.pow(n as u32);
        prop::collection::vec(0..size, 1..=3).prop_map(move |gens| {
            let full = full_transformation_monoid(n).unwrap();
            let id = full.identity();
            let sub = full.generated_subsemigroup(&full.subset(gens.into_iter().chain([id])).unwrap()).unwrap();
            Monoid::new(full.restrict(&sub).unwrap(), sub.position(id).unwrap()).unwrap()
        })
    })
}

fn group_kind() -> impl Strategy<Value = GroupKind> {
    prop_oneof![(1usize..=4).prop_map(GroupKind::Cyclic), Just(GroupKind::Symmetric(3))]
}

/// Rees matrix semigroup with a random sandwich matrix.
fn rees() -> impl Strategy<Value = monocat::rees::ReesMatrixSemigroup> {
    (group_kind(), 1usize..=3, 1usize..=3, any::<u64>()).prop_map(|(g, i, l, seed)| rees_sample(g, i, l, seed).unwrap())
}

fn simple_semigroup() -> impl Strategy<Value = FiniteSemigroup> {
    prop_oneof![
        rees().prop_map(|r| r.expand()),
        (1usize..=3, 1usize..=3).prop_map(|(p, q)| rectangular_band(p, q).unwrap()),
    ]
}

fn any_monoid() -> impl Strategy<Value = Monoid> {
    prop_oneof![
        3 => transformation_monoid(),
        1 => simple_semigroup().prop_map(Monoid::with_identity),
        1 => group_kind().prop_map(|g| g.build().unwrap()),
    ]
}

fn non_group_monoid() -> impl Strategy<Value = Monoid> {
    any_monoid().prop_filter("not a group", |m| !m.is_group())
}

/// A permutation of `0..n` drawn from a seed.
fn permutation(n: usize, seed: u64) -> Vec<usize> {
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
    p
}

fn random_maps(c: &TwoObjectCategory, seed: u64) -> CategoryMaps {
    // Units must stay units, so only non-unit elements are shuffled.
    let fix_unit = |n: usize, unit: usize, s: u64| {
        let mut p = permutation(n, s);
        let pos = p.iter().position(|&v| v == unit).unwrap();
        p.swap(pos, unit);
        p
    };
    CategoryMaps {
        a: fix_unit(c.len(Kind::A), c.unit_a(), seed),
        l: permutation(c.len(Kind::L), seed ^ 1),
        r: permutation(c.len(Kind::R), seed ^ 2),
        g: fix_unit(c.len(Kind::G), c.unit_g(), seed ^ 3),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn generated_monoids_are_associative(m in any_monoid()) {
        let n = m.len();
        for i in 0..n { for j in 0..n { for k in 0..n {
            prop_assert_eq!(m.mul(m.mul(i, j), k), m.mul(i, m.mul(j, k)));
        }}}
        prop_assert_eq!(m.find_identity(), Some(m.identity()));
    }

    #[test]
    fn adjoin_identity_keeps_old_table(s in simple_semigroup()) {
        let m = Monoid::adjoin_identity(&s);
        let old = m.subset(0..s.len()).unwrap();
        prop_assert_eq!(m.restrict(&old).unwrap().rows(), s.rows());
        prop_assert_eq!(m.identity(), s.len());
    }

    #[test]
    fn groups_have_inverses(m in any_monoid()) {
        let brute = m.elements().all(|g| m.elements().any(|h| m.mul(g, h) == m.identity() && m.mul(h, g) == m.identity()));
        prop_assert_eq!(m.is_group(), brute);
    }

    #[test]
    fn generation_is_idempotent(m in any_monoid(), picks in prop::collection::vec(any::<prop::sample::Index>(), 1..4)) {
        let gens = m.subset(picks.iter().map(|p| p.index(m.len()))).unwrap();
        let once = m.generated_subsemigroup(&gens).unwrap();
        prop_assert_eq!(m.generated_subsemigroup(&once).unwrap(), once.clone());
        prop_assert!(m.is_closed(&once));
    }

    #[test]
    fn kernel_is_unique_and_simple(m in any_monoid()) {
        let k = kernel(&m);
        prop_assert_eq!(k.members(), oracle::kernel(&m));
        prop_assert!(is_simple(&m.restrict(&k.subset).unwrap()));
    }

    #[test]
    fn minimal_ideals_transfer_to_kernel(m in any_monoid()) {
        let k = kernel(&m);
        let s = m.restrict(&k.subset).unwrap();
        let lift = |sets: Vec<monocat::ideals::IdealSubset>| -> Vec<Vec<usize>> {
            let mut v: Vec<Vec<usize>> = sets.iter().map(|i| i.members().iter().map(|&x| k.members()[x]).collect()).collect();
            v.sort();
            v
        };
        let mut left: Vec<Vec<usize>> = minimal_left_ideals(&m).iter().map(|i| i.members().to_vec()).collect();
        left.sort();
        prop_assert_eq!(lift(minimal_left_ideals(&s)), left);
        let mut right: Vec<Vec<usize>> = minimal_right_ideals(&m).iter().map(|i| i.members().to_vec()).collect();
        right.sort();
        prop_assert_eq!(lift(minimal_right_ideals(&s)), right);
    }

    #[test]
    fn every_minimal_pair_meets_in_a_group(s in simple_semigroup()) {
        let all = s.full_subset();
        let lefts = minimal_left_ideals(&s);
        let rights = minimal_right_ideals(&s);
        for l in &lefts {
            for r in &rights {
                prop_assert_eq!(subset_product(&s, &l.subset, &r.subset).unwrap(), all.clone());
                let g = group_of_intersection(&s, l, r).unwrap();
                prop_assert_eq!(l.len() % g.order(), 0);
                prop_assert_eq!(r.len() % g.order(), 0);
                prop_assert_eq!(s.len() * g.order(), l.len() * r.len());
            }
        }
        // Minimal left ideals partition S, and so do minimal right ideals.
        for ideals in [&lefts, &rights] {
            let mut cover: Vec<usize> = ideals.iter().flat_map(|i| i.members().to_vec()).collect();
            cover.sort_unstable();
            prop_assert_eq!(cover, (0..s.len()).collect::<Vec<_>>());
        }
    }

    #[test]
    fn rees_round_trip(r in rees()) {
        let s = r.expand();
        let d = rees_decomposition(&s).unwrap();
        prop_assert!(verify_rees_iso(&s, &d.rees, &d.map).is_ok());
        prop_assert_eq!(
            (d.rees.i_count(), d.rees.group().len(), d.rees.lambda_count()),
            (r.i_count(), r.group().len(), r.lambda_count())
        );
        prop_assert_eq!(d.rees.i_count(), minimal_right_ideals(&s).len());
        prop_assert_eq!(d.rees.lambda_count(), minimal_left_ideals(&s).len());
        prop_assert_eq!(d.left.len(), d.rees.i_count() * d.rees.group().len());
        prop_assert_eq!(d.right.len(), d.rees.lambda_count() * d.rees.group().len());
        prop_assert!(oracle::tables_isomorphic(d.rees.group(), r.group()));
    }

    #[test]
    fn tensor_matches_orbits(s in simple_semigroup()) {
        let c = category_from_simple(&s).unwrap();
        prop_assert!(check_free_actions(&c).is_ok());
        let (l, r) = (c.l_bimodule().unwrap(), c.r_bimodule().unwrap());
        let t = tensor(&l, &r).unwrap();
        let q = group_quotient(&l, &r).unwrap();
        prop_assert_eq!(&t.set, &q);
        let (_, nl, nr, ng) = c.sizes();
        prop_assert_eq!(q.len() * ng, nl * nr);
        // Induced actions obey the module laws.
        let m = &t.module;
        let (a, b) = (m.left_monoid(), m.right_monoid());
        prop_assert!(Bimodule::new(a.clone(), b.clone(), m.len(), m.left_action().to_vec(), m.right_action().to_vec()).is_ok());
        for x in 0..m.len() {
            prop_assert_eq!(m.act_left(a.identity(), x), x);
            prop_assert_eq!(m.act_right(x, b.identity()), x);
            for p in a.elements() { for q in b.elements() {
                prop_assert_eq!(m.act_right(m.act_left(p, x), q), m.act_left(p, m.act_right(x, q)));
            }}
        }
    }

    #[test]
    fn constructed_categories_are_valid(m in non_group_monoid()) {
        let c = category_from_monoid(&m).unwrap();
        for cat in [c.clone(), c.reversed()] {
            prop_assert_eq!(oracle::check_category(&cat).unwrap(), 16);
            prop_assert!(cat.check().is_ok());
        }
        let (na, nl, nr, ng) = c.sizes();
        prop_assert!(check_free_actions(&c).is_ok());
        prop_assert!(na * ng >= nl * nr + ng);
        let json = c.to_json_string();
        prop_assert_eq!(TwoObjectCategory::from_json_str(&json).unwrap(), c);
    }

    #[test]
    fn validator_agrees_with_oracle_after_corruption(
        m in non_group_monoid(),
        which in 0usize..8,
        row in any::<prop::sample::Index>(),
        col in any::<prop::sample::Index>(),
        value in any::<prop::sample::Index>(),
    ) {
        let c = category_from_monoid(&m).unwrap();
        let mut json = c.to_json();
        let (kx, ky) = monocat::category::Tables::PAIRS[which];
        let bound = c.len(kx.product(ky).unwrap());
        let table = match which {
            0 => &mut json.tables.aa, 1 => &mut json.tables.al, 2 => &mut json.tables.lg, 3 => &mut json.tables.lr,
            4 => &mut json.tables.ra, 5 => &mut json.tables.gr, 6 => &mut json.tables.rl, _ => &mut json.tables.gg,
        };
        let i = row.index(table.len());
        let j = col.index(table[i].len());
        table[i][j] = value.index(bound);
        let raw = TwoObjectCategory::from_json_unchecked(json);
        prop_assert_eq!(raw.check().is_ok(), oracle::check_category(&raw).is_ok());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn standardizations_are_isomorphic(m in non_group_monoid(), pick in any::<prop::sample::Index>()) {
        let c = category_from_monoid(&m).unwrap();
        let first = standardize(&c).unwrap();
        prop_assert!(oracle::is_isomorphism(&c, &first.category, &first.maps));
        let t = c.tables();
        let admissible: Vec<(usize, usize)> = (0..c.len(Kind::L))
            .flat_map(|x| (0..c.len(Kind::R)).map(move |y| (x, y)))
            .filter(|&(x, y)| t.rl[y][x] == c.unit_g())
            .collect();
        let (x, y) = admissible[pick.index(admissible.len())];
        let other = standardize_with(&c, x, y).unwrap();
        let iso = category_isomorphic(&first.category, &other.category);
        prop_assert!(iso.is_some());
    }

    #[test]
    fn transported_category_is_found_isomorphic(m in non_group_monoid(), seed in any::<u64>()) {
        let c = category_from_monoid(&m).unwrap();
        let maps = random_maps(&c, seed);
        let moved = c.transport(&maps).unwrap();
        prop_assert!(check_isomorphism(&c, &moved, &maps).is_ok());
        let found = category_isomorphic(&c, &moved).unwrap();
        let target = if found.swapped { moved.reversed() } else { moved.clone() };
        prop_assert!(oracle::is_isomorphism(&c, &target, &found.maps));
    }

    #[test]
    fn group_choice_is_irrelevant(m in any_monoid()) {
        let groups = all_groups_of(&m).unwrap();
        for g in &groups {
            prop_assert!(tables_isomorphic(g.table(), groups[0].table()).unwrap().is_some());
        }
    }

    #[test]
    fn relabeled_groups_are_isomorphic(kind in group_kind(), seed in any::<u64>()) {
        let g = kind.build().unwrap();
        let p = permutation(g.len(), seed);
        let mut inv = vec![0; p.len()];
        for (i, &v) in p.iter().enumerate() { inv[v] = i; }
        let h = FiniteSemigroup::from_fn(g.len(), |a, b| p[g.mul(inv[a], inv[b])]).unwrap();
        let h = Monoid::new(h, p[g.identity()]).unwrap();
        let map = tables_isomorphic(&g, &h).unwrap().unwrap();
        for a in g.elements() { for b in g.elements() {
            prop_assert_eq!(map[g.mul(a, b)], h.mul(map[a], map[b]));
        }}
    }

    #[test]
    fn connectivity_follows_groups(a in any_monoid(), b in any_monoid()) {
        let expected = oracle::tables_isomorphic(&oracle::group_of(&a), &oracle::group_of(&b));
        let c = are_connected(&a, &b).unwrap();
        prop_assert_eq!(c.connected, expected);
        if let Some(w) = c.witness {
            prop_assert!(oracle::check_category(&w).is_ok());
            prop_assert_eq!(w.monoid_a().unwrap(), a);
            prop_assert_eq!(w.monoid_g().unwrap(), b);
        }
    }

    #[test]
    fn witnesses_compose(a in any_monoid(), b in any_monoid(), c in any_monoid()) {
        prop_assume!(are_connected(&a, &b).unwrap().connected && are_connected(&b, &c).unwrap().connected);
        let ab = are_connected(&a, &b).unwrap().witness.unwrap();
        let bc = are_connected(&b, &c).unwrap().witness.unwrap();
        let ac = monocat::category::compose_categories(&ab, &bc).unwrap();
        prop_assert!(oracle::check_category(&ac).is_ok());
        prop_assert_eq!(ac.monoid_a().unwrap(), a);
        prop_assert_eq!(ac.monoid_g().unwrap(), c);
    }

    #[test]
    fn reversal_preserves_validity(m in any_monoid()) {
        let c = category_to_group(&m).unwrap();
        prop_assert!(c.reversed().check().is_ok());
        prop_assert_eq!(c.reversed().reversed(), c);
    }

    #[test]
    fn corpus_generation_is_deterministic(seed in any::<u64>(), kind in group_kind()) {
        let spec = CorpusSpec::with_seed(Family::ReesSample { group: kind, i: 2, lambda: 2 }, seed);
        let first = generate(&spec).unwrap();
        prop_assert_eq!(&first, &generate(&spec).unwrap());
        for m in &first {
            prop_assert!(FiniteSemigroup::new(m.rows()).is_ok());
            prop_assert_eq!(m.find_identity(), Some(m.identity()));
        }
    }
}

#[test]
fn corruption_of_lr_names_an_lr_pattern() {
    let t2 = full_transformation_monoid(2).unwrap();
    let c = category_from_monoid(&t2).unwrap();
    let mut json = c.to_json();
    json.tables.lr[0][0] = t2.identity();
    let raw = TwoObjectCategory::from_json_unchecked(json);
    match raw.check() {
        Err(Violation::Associativity { pattern, .. }) => assert!(pattern == "ALR" || pattern == "LRA", "{pattern}"),
        other => panic!("expected an associativity failure, got {other:?}"),
    }
}

#[test]
fn small_groups_build() {
    assert!(cyclic_group(5).unwrap().is_group());
    assert_eq!(symmetric_group(3).unwrap().len(), 6);
}
