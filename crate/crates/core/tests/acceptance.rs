//! Acceptance suite: ten exact criteria over the standard corpus. Runs
//! without the libtest harness so that each criterion's PASS/FAIL line is
//! always printed; exits nonzero if any criterion fails.

mod oracle;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use monocat::bimodule::{mult_bijection_check, tensor};
use monocat::category::{
    category_from_monoid, category_isomorphic, compose_categories, extract_simple, ideal_slices,
    minimal_ideal_correspondence, standardize, standardize_with, Kind, TwoObjectCategory,
};
use monocat::checks::{constructed_categories, REES_LIMIT};
use monocat::connectivity::{are_connected, group_of, groups_isomorphic};
use monocat::corpus::{left_zero, standard_corpus, CorpusEntry};
use monocat::ideals::{canonical_minimal_pair, group_of_intersection, kernel};
use monocat::rees::{rees_decomposition, verify_rees_iso};
use monocat::Monoid;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn categories(m: &Monoid) -> Vec<(&'static str, TwoObjectCategory)> {
    constructed_categories(m).expect("constructions succeed on corpus monoids")
}

fn group_side_is_group(c: &TwoObjectCategory) -> bool {
    c.monoid_g().unwrap().is_group()
}

fn criterion_kernel(corpus: &[CorpusEntry]) -> Outcome {
    let start = Instant::now();
    ensure(corpus.len() >= 100, || format!("corpus has only {} monoids", corpus.len()))?;
    for e in corpus {
        let m = &e.monoid;
        let k = kernel(m);
        let expected = oracle::kernel(m);
        ensure(!expected.is_empty(), || format!("{}: empty kernel", e.name))?;
        ensure(k.members() == expected, || format!("{}: kernel {:?} vs oracle {expected:?}", e.name, k.members()))?;
        ensure(oracle::is_simple_subset(m, &expected), || format!("{}: kernel not simple", e.name))?;
        // Uniqueness: every two-sided ideal contains the kernel.
        for a in m.elements() {
            let j = oracle::two_sided(m, a);
            ensure(expected.iter().all(|x| j.contains(x)), || format!("{}: ideal of {a} misses the kernel", e.name))?;
        }
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(60), || format!("took {elapsed:?}"))?;
    Ok(format!("{} monoids in {elapsed:.2?}", corpus.len()))
}

fn criterion_cardinality(corpus: &[CorpusEntry]) -> Outcome {
    for e in corpus {
        let m = &e.monoid;
        let (l, r) = canonical_minimal_pair(m);
        let g = group_of_intersection(m, &l, &r).map_err(|err| format!("{}: {err}", e.name))?;
        let (nl, nr, ng, nk) = (l.len(), r.len(), g.order(), oracle::kernel(m).len());
        ensure(oracle::minimal_left(m).contains(&l.members().to_vec()), || format!("{}: L not minimal", e.name))?;
        ensure(oracle::minimal_right(m).contains(&r.members().to_vec()), || format!("{}: R not minimal", e.name))?;
        ensure(nl % ng == 0 && nr % ng == 0, || format!("{}: |G| = {ng} does not divide {nl}, {nr}", e.name))?;
        ensure(nk * ng == nl * nr, || format!("{}: |S||G| = {} vs |L||R| = {}", e.name, nk * ng, nl * nr))?;
    }
    Ok(format!("{} monoids", corpus.len()))
}

fn criterion_bound(corpus: &[CorpusEntry]) -> Outcome {
    let mut checked = 0;
    let mut equal = Vec::new();
    for e in corpus.iter().filter(|e| !e.monoid.is_group()) {
        let (l, r) = canonical_minimal_pair(&e.monoid);
        let g = oracle::group_through(&e.monoid, l.subset.intersection(&r.subset).unwrap().members()[0]).len();
        let (na, lhs, rhs) = (e.monoid.len(), e.monoid.len() * g, l.len() * r.len() + g);
        ensure(lhs >= rhs, || format!("{}: |A| = {na} below |L||R|/|G| + 1", e.name))?;
        if lhs == rhs {
            equal.push(e.monoid.semigroup().clone());
        }
        checked += 1;
    }
    let lz2_one = Monoid::adjoin_identity(&left_zero(2).unwrap());
    ensure(equal.contains(lz2_one.semigroup()), || "adjoin_identity(LZ2) does not attain equality".into())?;
    Ok(format!("{checked} non-group monoids, {} attain equality", equal.len()))
}

fn criterion_round_trip(corpus: &[CorpusEntry]) -> Outcome {
    let mut checked = 0;
    for e in corpus.iter().filter(|e| !e.monoid.is_group()) {
        let c = category_from_monoid(&e.monoid).map_err(|err| format!("{}: {err}", e.name))?;
        let s = extract_simple(&c).map_err(|err| format!("{}: {err}", e.name))?;
        let ambient: Vec<usize> = s.members().iter().map(|&i| c.hom(Kind::A).ambient[i]).collect();
        let expected = oracle::kernel(&e.monoid);
        ensure(ambient == expected, || format!("{}: UV = {ambient:?}, kernel {expected:?}", e.name))?;
        checked += 1;
    }
    Ok(format!("{checked} non-group monoids"))
}

fn criterion_validity(corpus: &[CorpusEntry]) -> Outcome {
    let mut count = 0;
    for e in corpus {
        for (origin, c) in categories(&e.monoid) {
            for cat in [c.clone(), c.reversed()] {
                let patterns = oracle::check_category(&cat).map_err(|err| format!("{} {origin}: {err}", e.name))?;
                ensure(patterns == 16, || format!("{} {origin}: {patterns} patterns", e.name))?;
                ensure(cat.check().is_ok(), || format!("{} {origin}: library validator disagrees", e.name))?;
            }
            count += 1;
        }
    }
    Ok(format!("{count} categories (and their reverses)"))
}

fn criterion_bijection(corpus: &[CorpusEntry]) -> Outcome {
    let mut count = 0;
    for e in corpus {
        for (origin, c) in categories(&e.monoid).into_iter().filter(|(_, c)| group_side_is_group(c)) {
            let ctx = |err: String| format!("{} {origin}: {err}", e.name);
            let report = mult_bijection_check(&c).map_err(|err| ctx(err.to_string()))?;
            let (_, nl, nr, ng) = c.sizes();
            ensure(report.classes * ng == nl * nr, || ctx("class count".into()))?;
            let t = tensor(&c.l_bimodule().unwrap(), &c.r_bimodule().unwrap()).map_err(|err| ctx(err.to_string()))?;
            let lib: Vec<usize> =
                (0..nl).flat_map(|x| (0..nr).map(move |y| (x, y))).map(|(x, y)| t.set.class(x, y)).collect();
            ensure(
                oracle::same_partition(&lib, &oracle::orbit_labels(&c)),
                || ctx("tensor partition ≠ orbits".into()),
            )?;
            count += 1;
        }
    }
    Ok(format!("{count} categories with a group second object"))
}

fn criterion_rees(corpus: &[CorpusEntry]) -> Outcome {
    let mut count = 0;
    for e in corpus {
        let k = kernel(&e.monoid);
        if k.len() > REES_LIMIT {
            continue;
        }
        let ctx = |err: String| format!("{}: {err}", e.name);
        let s = e.monoid.restrict(&k.subset).unwrap();
        let d = rees_decomposition(&s).map_err(|err| ctx(err.to_string()))?;
        verify_rees_iso(&s, &d.rees, &d.map).map_err(|err| ctx(err.to_string()))?;
        // Independent check of the map against the triple product.
        let n = s.len();
        let mut seen = vec![false; n];
        for &v in &d.map {
            ensure(v < n && !std::mem::replace(&mut seen[v], true), || ctx("map not bijective".into()))?;
        }
        for a in 0..n {
            for b in 0..n {
                let prod = d.rees.multiply(d.rees.triple_of(d.map[a]), d.rees.triple_of(d.map[b]));
                ensure(d.rees.index_of(prod.0, prod.1, prod.2) == d.map[s.mul(a, b)], || {
                    ctx("not multiplicative".into())
                })?;
            }
        }
        let dims = (d.rees.i_count(), d.rees.group().len(), d.rees.lambda_count());
        let again = rees_decomposition(&d.rees.expand()).map_err(|err| ctx(err.to_string()))?;
        let dims2 = (again.rees.i_count(), again.rees.group().len(), again.rees.lambda_count());
        ensure(dims == dims2, || ctx(format!("{dims:?} became {dims2:?}")))?;
        ensure(oracle::tables_isomorphic(again.rees.group(), d.rees.group()), || ctx("group changed".into()))?;
        count += 1;
    }
    Ok(format!("{count} kernels"))
}

fn criterion_standardization(corpus: &[CorpusEntry]) -> Outcome {
    let (mut count, mut pairs) = (0, 0);
    for e in corpus.iter().filter(|e| !e.monoid.is_group()) {
        let ctx = |err: String| format!("{}: {err}", e.name);
        let c = category_from_monoid(&e.monoid).unwrap();
        let st = standardize(&c).map_err(|err| ctx(err.to_string()))?;
        ensure(oracle::is_isomorphism(&c, &st.category, &st.maps), || ctx("φ, ψ, ψ′ fail".into()))?;
        let slices = ideal_slices(&c, st.x, st.y).map_err(|err| ctx(err.to_string()))?;
        ensure(st.category.len(Kind::L) == slices.l_y.len(), || ctx("L′ ≠ L_y".into()))?;
        let t = c.tables();
        let admissible: Vec<(usize, usize)> = (0..c.len(Kind::L))
            .flat_map(|x| (0..c.len(Kind::R)).map(move |y| (x, y)))
            .filter(|&(x, y)| t.rl[y][x] == c.unit_g())
            .collect();
        if let Some(&(x, y)) = admissible.iter().rev().find(|&&p| p != (st.x, st.y)) {
            let other = standardize_with(&c, x, y).map_err(|err| ctx(err.to_string()))?;
            ensure(oracle::is_isomorphism(&c, &other.category, &other.maps), || ctx("second maps fail".into()))?;
            let iso = category_isomorphic(&st.category, &other.category).ok_or_else(|| ctx("not isomorphic".into()))?;
            let target = if iso.swapped { other.category.reversed() } else { other.category.clone() };
            ensure(oracle::is_isomorphism(&st.category, &target, &iso.maps), || ctx("found iso is wrong".into()))?;
            pairs += 1;
        }
        count += 1;
    }
    ensure(pairs > 0, || "no monoid had two admissible pairs".into())?;
    Ok(format!("{count} categories, {pairs} with two distinct admissible pairs"))
}

fn criterion_correspondence(corpus: &[CorpusEntry]) -> Outcome {
    let mut count = 0;
    for e in corpus {
        for (origin, c) in categories(&e.monoid).into_iter().filter(|(_, c)| group_side_is_group(c)) {
            let ctx = |err: String| format!("{} {origin}: {err}", e.name);
            minimal_ideal_correspondence(&c).map_err(|err| ctx(err.to_string()))?;
            let a = c.monoid_a().unwrap();
            let t = c.tables();
            let mut slices: Vec<Vec<usize>> = (0..c.len(Kind::R))
                .map(|y| {
                    let mut v: Vec<usize> = (0..c.len(Kind::L)).map(|u| t.lr[u][y]).collect();
                    v.sort_unstable();
                    v.dedup();
                    v
                })
                .collect();
            slices.sort();
            slices.dedup();
            ensure(slices == oracle::minimal_left(&a), || ctx("{L_y} ≠ minimal left ideals".into()))?;
            // Orbit count of G on R equals the number of minimal left ideals.
            let mut orbit_keys: Vec<Vec<usize>> = (0..c.len(Kind::R))
                .map(|y| {
                    let mut o: Vec<usize> = (0..c.len(Kind::G)).map(|g| t.gr[g][y]).collect();
                    o.sort_unstable();
                    o
                })
                .collect();
            orbit_keys.sort();
            orbit_keys.dedup();
            ensure(orbit_keys.len() == slices.len(), || ctx("|G\\V| ≠ number of minimal left ideals".into()))?;
            count += 1;
        }
    }
    Ok(format!("{count} categories"))
}

fn criterion_connectivity(corpus: &[CorpusEntry]) -> Outcome {
    let groups: Vec<_> = corpus.iter().map(|e| oracle::group_of(&e.monoid)).collect();
    let n = corpus.len();
    let (mut pairs, mut positive) = (0, 0);
    for i in 0..n {
        for j in 0..n {
            if (i * 31 + j * 17) % 23 != 0 {
                continue;
            }
            let (a, b) = (&corpus[i], &corpus[j]);
            let ctx = |err: String| format!("{} / {}: {err}", a.name, b.name);
            let expected = oracle::tables_isomorphic(&groups[i], &groups[j]);
            let via_groups = groups_isomorphic(&group_of(&a.monoid).unwrap(), &group_of(&b.monoid).unwrap())
                .map_err(|err| ctx(err.to_string()))?
                .is_some();
            let c = are_connected(&a.monoid, &b.monoid).map_err(|err| ctx(err.to_string()))?;
            ensure(c.connected == expected && via_groups == expected, || ctx(format!("verdict {}", c.connected)))?;
            if let Some(w) = &c.witness {
                oracle::check_category(w).map_err(ctx)?;
                ensure(w.len(Kind::L) > 0 && w.len(Kind::R) > 0, || ctx("empty bimodule".into()))?;
                ensure(w.monoid_a().unwrap().rows() == a.monoid.rows(), || ctx("A end".into()))?;
                ensure(w.monoid_g().unwrap().rows() == b.monoid.rows(), || ctx("B end".into()))?;
                positive += 1;
            } else {
                ensure(!c.connected, || ctx("connected without witness".into()))?;
            }
            pairs += 1;
        }
    }
    ensure(pairs >= 1000, || format!("only {pairs} pairs"))?;

    // Transitivity on triples drawn inside each group isomorphism class.
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for i in 0..n {
        match classes.iter_mut().find(|c| oracle::tables_isomorphic(&groups[c[0]], &groups[i])) {
            Some(c) => c.push(i),
            None => classes.push(vec![i]),
        }
    }
    let (mut triples, mut nontrivial) = (0, 0);
    for class in &classes {
        let len = class.len();
        for s in 0..len.min(6) {
            let (i, j, k) = (class[s], class[(s * 7 + 1) % len], class[(s * 13 + 2) % len]);
            let (a, b, c) = (&corpus[i].monoid, &corpus[j].monoid, &corpus[k].monoid);
            let ctx = |err: String| format!("{} / {} / {}: {err}", corpus[i].name, corpus[j].name, corpus[k].name);
            let ab = are_connected(a, b).unwrap().witness.ok_or_else(|| ctx("no AB witness".into()))?;
            let bc = are_connected(b, c).unwrap().witness.ok_or_else(|| ctx("no BC witness".into()))?;
            let ac = compose_categories(&ab, &bc).map_err(|err| ctx(err.to_string()))?;
            oracle::check_category(&ac).map_err(ctx)?;
            ensure(ac.monoid_a().unwrap().rows() == a.rows(), || ctx("A end".into()))?;
            ensure(ac.monoid_g().unwrap().rows() == c.rows(), || ctx("C end".into()))?;
            triples += 1;
            nontrivial += (groups[i].len() > 1) as usize;
        }
    }
    ensure(triples >= 20, || format!("only {triples} triples"))?;
    ensure(nontrivial > 0, || "no triple with a nontrivial group".into())?;
    Ok(format!(
        "{pairs} pairs ({positive} connected), {triples} triples over {} group classes ({nontrivial} nontrivial)",
        classes.len()
    ))
}

type Criterion = fn(&[CorpusEntry]) -> Outcome;

fn main() {
    let start = Instant::now();
    let corpus = standard_corpus(0).expect("corpus generates");
    let criteria: [(&str, Criterion); 10] = [
        ("kernel suite", criterion_kernel),
        ("cardinality identities", criterion_cardinality),
        ("non-group bound", criterion_bound),
        ("round trip", criterion_round_trip),
        ("category validity", criterion_validity),
        ("bijection check", criterion_bijection),
        ("rees suite", criterion_rees),
        ("standardization", criterion_standardization),
        ("correspondence", criterion_correspondence),
        ("connectivity", criterion_connectivity),
    ];
    let mut failures = Vec::new();
    for (i, (name, run)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(|| run(&corpus)))
            .unwrap_or_else(|p| Err(p.downcast_ref::<String>().cloned().unwrap_or_else(|| "panicked".into())));
        match outcome {
            Ok(detail) => println!("criterion {:>2} {name:<24} PASS  {detail}", i + 1),
            Err(err) => {
                println!("criterion {:>2} {name:<24} FAIL  {err}", i + 1);
                failures.push(i + 1);
            }
        }
    }
    let elapsed = start.elapsed();
    println!("acceptance suite finished in {elapsed:.2?}");
    if elapsed >= Duration::from_secs(300) {
        println!("suite exceeded the five minute budget");
        std::process::exit(1);
    }
    if !failures.is_empty() {
        println!("failing criteria: {failures:?}");
        std::process::exit(1);
    }
}
