//! Brute-force reference computations used to cross-check the library.
//! Nothing here calls into the library's algorithms; only plain accessors.

#![allow(dead_code)]

use monocat::category::{CategoryMaps, Kind, TwoObjectCategory};
use monocat::semigroup::{FiniteSemigroup, Monoid};

fn sorted(mut v: Vec<usize>) -> Vec<usize> {
    v.sort_unstable();
    v.dedup();
    v
}

/// `S¹aS¹` by direct enumeration.
pub fn two_sided(m: &FiniteSemigroup, a: usize) -> Vec<usize> {
    let n = m.len();
    let mut out = vec![a];
    for x in 0..n {
        out.push(m.mul(x, a));
        out.push(m.mul(a, x));
        for y in 0..n {
            out.push(m.mul(m.mul(x, a), y));
        }
    }
    sorted(out)
}

/// Intersection of all principal two-sided ideals. In a finite semigroup this
/// is the kernel.
pub fn kernel(m: &FiniteSemigroup) -> Vec<usize> {
    let mut meet: Vec<usize> = (0..m.len()).collect();
    for a in 0..m.len() {
        let j = two_sided(m, a);
        meet.retain(|x| j.binary_search(x).is_ok());
    }
    meet
}

/// Every element of `set` generates every other as a two-sided ideal.
pub fn is_simple_subset(m: &FiniteSemigroup, set: &[usize]) -> bool {
    set.iter().all(|&a| {
        let mut reach = vec![false; m.len()];
        for &x in set {
            for &y in set {
                reach[m.mul(m.mul(x, a), y)] = true;
            }
        }
        set.iter().all(|&b| reach[b])
    })
}

fn inclusion_minimal(sets: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    let sets = sorted_sets(sets);
    sets.iter().filter(|s| !sets.iter().any(|t| t != *s && t.iter().all(|x| s.contains(x)))).cloned().collect()
}

fn sorted_sets(sets: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    let mut sets: Vec<Vec<usize>> = sets.into_iter().map(sorted).collect();
    sets.sort();
    sets.dedup();
    sets
}

/// Minimal left ideals as inclusion-minimal sets `S¹a`.
pub fn minimal_left(m: &FiniteSemigroup) -> Vec<Vec<usize>> {
    inclusion_minimal((0..m.len()).map(|a| (0..m.len()).map(|x| m.mul(x, a)).chain([a]).collect()).collect())
}

pub fn minimal_right(m: &FiniteSemigroup) -> Vec<Vec<usize>> {
    inclusion_minimal((0..m.len()).map(|a| (0..m.len()).map(|x| m.mul(a, x)).chain([a]).collect()).collect())
}

fn permutations(n: usize, f: &mut dyn FnMut(&[usize]) -> bool) -> bool {
    fn go(p: &mut Vec<usize>, used: &mut Vec<bool>, f: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        if p.len() == used.len() {
            return f(p);
        }
        for t in 0..used.len() {
            if !used[t] {
                used[t] = true;
                p.push(t);
                if go(p, used, f) {
                    return true;
                }
                p.pop();
                used[t] = false;
            }
        }
        false
    }
    go(&mut Vec::new(), &mut vec![false; n], f)
}

/// Isomorphism of two small multiplication tables by trying every bijection.
pub fn tables_isomorphic(g: &FiniteSemigroup, h: &FiniteSemigroup) -> bool {
    let n = g.len();
    n == h.len() && permutations(n, &mut |p| (0..n).all(|x| (0..n).all(|y| p[g.mul(x, y)] == h.mul(p[x], p[y]))))
}

/// `L ∩ R` for the minimal ideals through a kernel element, as a table.
pub fn group_through(m: &FiniteSemigroup, a: usize) -> FiniteSemigroup {
    let left = sorted((0..m.len()).map(|x| m.mul(x, a)).chain([a]).collect());
    let right = sorted((0..m.len()).map(|x| m.mul(a, x)).chain([a]).collect());
    let meet: Vec<usize> = left.iter().copied().filter(|x| right.contains(x)).collect();
    let rows = meet
        .iter()
        .map(|&x| meet.iter().map(|&y| meet.iter().position(|&z| z == m.mul(x, y)).unwrap()).collect())
        .collect();
    FiniteSemigroup::new(rows).unwrap()
}

/// The group of a monoid: itself if every row and column is a permutation,
/// otherwise `L ∩ R` through the smallest kernel element.
pub fn group_of(m: &Monoid) -> FiniteSemigroup {
    let n = m.len();
    let latin = (0..n).all(|x| {
        let row: Vec<usize> = sorted((0..n).map(|y| m.mul(x, y)).collect());
        let col: Vec<usize> = sorted((0..n).map(|y| m.mul(y, x)).collect());
        row.len() == n && col.len() == n
    });
    if latin {
        m.semigroup().clone()
    } else {
        group_through(m, kernel(m)[0])
    }
}

/// Typed elements of a category, all kinds flattened.
fn elements(c: &TwoObjectCategory) -> Vec<(Kind, usize)> {
    Kind::ALL.into_iter().flat_map(|k| (0..c.len(k)).map(move |x| (k, x))).collect()
}

/// Identity and associativity over every composable triple of elements,
/// found by scanning all triples rather than by listing patterns. Returns the
/// number of distinct kind patterns seen.
pub fn check_category(c: &TwoObjectCategory) -> Result<usize, String> {
    let all = elements(c);
    let end = |k: Kind| match k {
        Kind::A => (1u8, 1u8),
        Kind::L => (1, 2),
        Kind::R => (2, 1),
        Kind::G => (2, 2),
    };
    let unit = |o: u8| if o == 1 { (Kind::A, c.unit_a()) } else { (Kind::G, c.unit_g()) };
    for &(k, x) in &all {
        let (s, t) = end(k);
        let (ku, u) = unit(s);
        if c.compose(ku, u, k, x) != Some((k, x)) {
            return Err(format!("left unit fails on {k}{x}"));
        }
        let (ku, u) = unit(t);
        if c.compose(k, x, ku, u) != Some((k, x)) {
            return Err(format!("right unit fails on {k}{x}"));
        }
    }
    let mut patterns = std::collections::BTreeSet::new();
    for &(k1, x) in &all {
        for &(k2, y) in &all {
            let Some((k12, xy)) = c.compose(k1, x, k2, y) else { continue };
            for &(k3, z) in &all {
                let Some(left) = c.compose(k12, xy, k3, z) else { continue };
                let (k23, yz) = c.compose(k2, y, k3, z).ok_or("typing differs")?;
                let right = c.compose(k1, x, k23, yz).ok_or("typing differs")?;
                if left != right {
                    return Err(format!("({k1}{x}·{k2}{y})·{k3}{z} differs"));
                }
                patterns.insert((k1, k2, k3));
            }
        }
    }
    Ok(patterns.len())
}

/// `maps` is a bijection on each kind, preserves units and commutes with
/// every defined product.
pub fn is_isomorphism(src: &TwoObjectCategory, dst: &TwoObjectCategory, maps: &CategoryMaps) -> bool {
    let bij = Kind::ALL.into_iter().all(|k| {
        let m = maps.get(k);
        m.len() == src.len(k) && src.len(k) == dst.len(k) && sorted(m.to_vec()) == (0..dst.len(k)).collect::<Vec<_>>()
    });
    if !bij || maps.a[src.unit_a()] != dst.unit_a() || maps.g[src.unit_g()] != dst.unit_g() {
        return false;
    }
    let all = elements(src);
    all.iter().all(|&(k1, x)| {
        all.iter().all(|&(k2, y)| match src.compose(k1, x, k2, y) {
            None => true,
            Some((k, z)) => dst.compose(k1, maps.get(k1)[x], k2, maps.get(k2)[y]) == Some((k, maps.get(k)[z])),
        })
    })
}

/// Orbit label of each pair `(x, y) ∈ L × R` under `(x, y) ~ (x·g, g⁻¹·y)`,
/// read straight from the category tables.
pub fn orbit_labels(c: &TwoObjectCategory) -> Vec<usize> {
    let (nl, nr, ng) = (c.len(Kind::L), c.len(Kind::R), c.len(Kind::G));
    let t = c.tables();
    let mut label = vec![usize::MAX; nl * nr];
    for x in 0..nl {
        for y in 0..nr {
            if label[x * nr + y] != usize::MAX {
                continue;
            }
            for g in 0..ng {
                let inv = (0..ng).find(|&h| t.gg[g][h] == c.unit_g()).expect("group");
                label[t.lg[x][g] * nr + t.gr[inv][y]] = x * nr + y;
            }
        }
    }
    label
}

/// Whether two labelings induce the same partition.
pub fn same_partition(a: &[usize], b: &[usize]) -> bool {
    a.len() == b.len() && (0..a.len()).all(|i| (0..a.len()).all(|j| (a[i] == a[j]) == (b[i] == b[j])))
}
