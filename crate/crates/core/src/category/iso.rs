use std::fmt;

use serde::{Deserialize, Serialize};

use super::{Kind, Tables, TwoObjectCategory};

/// Four element maps, one per hom-set, from a source to a target category.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CategoryMaps {
    pub a: Vec<usize>,
    pub l: Vec<usize>,
    pub r: Vec<usize>,
    pub g: Vec<usize>,
}

impl CategoryMaps {
    pub fn identity(c: &TwoObjectCategory) -> Self {
        let id = |k: Kind| (0..c.len(k)).collect();
        Self { a: id(Kind::A), l: id(Kind::L), r: id(Kind::R), g: id(Kind::G) }
    }

    pub fn get(&self, kind: Kind) -> &[usize] {
        match kind {
            Kind::A => &self.a,
            Kind::L => &self.l,
            Kind::R => &self.r,
            Kind::G => &self.g,
        }
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &CategoryMaps) -> CategoryMaps {
        let comp = |k: Kind| self.get(k).iter().map(|&x| next.get(k)[x]).collect();
        CategoryMaps { a: comp(Kind::A), l: comp(Kind::L), r: comp(Kind::R), g: comp(Kind::G) }
    }
}

/// First failure found by [`check_isomorphism`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MapViolation {
    Size(Kind),
    NotBijective(Kind),
    Unit(Kind),
    Composition { left: Kind, right: Kind, pair: (usize, usize) },
}

impl fmt::Display for MapViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MapViolation::Size(k) => write!(f, "map on {k} has the wrong length"),
            MapViolation::NotBijective(k) => write!(f, "map on {k} is not a bijection"),
            MapViolation::Unit(k) => write!(f, "map on {k} does not preserve the identity"),
            MapViolation::Composition { left, right, pair } => {
                write!(f, "map does not commute with {left}{right} at {pair:?}")
            }
        }
    }
}

/// Checks that `maps` is a bijection on each hom-set, preserves both
/// identities and commutes with all eight compositions.
pub fn check_isomorphism(
    source: &TwoObjectCategory,
    target: &TwoObjectCategory,
    maps: &CategoryMaps,
) -> Result<(), MapViolation> {
    for kind in Kind::ALL {
        let m = maps.get(kind);
        let n = source.len(kind);
        if m.len() != n || target.len(kind) != n {
            return Err(MapViolation::Size(kind));
        }
        let mut seen = vec![false; n];
        for &v in m {
            if v >= n || std::mem::replace(&mut seen[v], true) {
                return Err(MapViolation::NotBijective(kind));
            }
        }
    }
    if maps.a[source.unit_a()] != target.unit_a() {
        return Err(MapViolation::Unit(Kind::A));
    }
    if maps.g[source.unit_g()] != target.unit_g() {
        return Err(MapViolation::Unit(Kind::G));
    }
    for (kx, ky) in Tables::PAIRS {
        let kz = kx.product(ky).expect("typed");
        let (mx, my, mz) = (maps.get(kx), maps.get(ky), maps.get(kz));
        let src = source.tables().get(kx, ky).expect("typed");
        let dst = target.tables().get(kx, ky).expect("typed");
        for (x, row) in src.iter().enumerate() {
            for (y, &z) in row.iter().enumerate() {
                if dst[mx[x]][my[y]] != mz[z] {
                    return Err(MapViolation::Composition { left: kx, right: ky, pair: (x, y) });
                }
            }
        }
    }
    Ok(())
}

/// An isomorphism found by [`category_isomorphic`]. When `swapped` is set the
/// maps land in `target.reversed()`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CategoryIso {
    pub maps: CategoryMaps,
    pub swapped: bool,
}

/// Searches for an isomorphism `source → target`, also trying the one that
/// exchanges the two objects when the size profile allows it.
pub fn category_isomorphic(source: &TwoObjectCategory, target: &TwoObjectCategory) -> Option<CategoryIso> {
    if source.sizes() == target.sizes() {
        if let Some(maps) = Search::new(source, target).run() {
            return Some(CategoryIso { maps, swapped: false });
        }
    }
    let reversed = target.reversed();
    if source.sizes() == reversed.sizes() {
        if let Some(maps) = Search::new(source, &reversed).run() {
            return Some(CategoryIso { maps, swapped: true });
        }
    }
    None
}

/// Elements of all four hom-sets flattened into one index space, `A` first.
struct Flat<'a> {
    c: &'a TwoObjectCategory,
    offset: [usize; 5],
}

impl<'a> Flat<'a> {
    fn new(c: &'a TwoObjectCategory) -> Self {
        let mut offset = [0; 5];
        for (i, k) in Kind::ALL.into_iter().enumerate() {
            offset[i + 1] = offset[i] + c.len(k);
        }
        Self { c, offset }
    }

    fn len(&self) -> usize {
        self.offset[4]
    }

    fn split(&self, id: usize) -> (Kind, usize) {
        let i = (0..4).rev().find(|&i| self.offset[i] <= id).expect("in range");
        (Kind::ALL[i], id - self.offset[i])
    }

    fn join(&self, kind: Kind, x: usize) -> usize {
        self.offset[kind as usize] + x
    }

    fn product(&self, u: usize, v: usize) -> Option<usize> {
        let (ku, x) = self.split(u);
        let (kv, y) = self.split(v);
        self.c.compose(ku, x, kv, y).map(|(k, z)| self.join(k, z))
    }

    /// Isomorphism-invariant data: sizes of the sets reached by multiplying
    /// with each compatible hom-set on either side, plus power behaviour for
    /// endomorphisms.
    fn signature(&self, id: usize) -> Vec<usize> {
        let (kind, _) = self.split(id);
        let mut sig = Vec::new();
        for other in Kind::ALL {
            let range = self.offset[other as usize]..self.offset[other as usize + 1];
            for side in [false, true] {
                let mut seen: Vec<usize> = range
                    .clone()
                    .filter_map(|w| if side { self.product(w, id) } else { self.product(id, w) })
                    .collect();
                seen.sort_unstable();
                seen.dedup();
                sig.push(seen.len());
            }
        }
        if matches!(kind, Kind::A | Kind::G) {
            let mut powers = vec![id];
            loop {
                let next = self.product(*powers.last().expect("nonempty"), id).expect("endomorphism");
                if let Some(pos) = powers.iter().position(|&p| p == next) {
                    sig.push(pos);
                    sig.push(powers.len() - pos);
                    break;
                }
                powers.push(next);
            }
        }
        sig
    }
}

struct Search<'a> {
    src: Flat<'a>,
    dst: Flat<'a>,
    candidates: Vec<Vec<usize>>,
    image: Vec<usize>,
    used: Vec<bool>,
    trail: Vec<usize>,
}

const NONE: usize = usize::MAX;

impl<'a> Search<'a> {
    fn new(source: &'a TwoObjectCategory, target: &'a TwoObjectCategory) -> Self {
        let src = Flat::new(source);
        let dst = Flat::new(target);
        let dst_sigs: Vec<Vec<usize>> = (0..dst.len()).map(|t| dst.signature(t)).collect();
        let candidates = (0..src.len())
            .map(|u| {
                let (kind, x) = src.split(u);
                let sig = src.signature(u);
                let mut c: Vec<usize> =
                    (0..target.len(kind)).map(|y| dst.join(kind, y)).filter(|&t| dst_sigs[t] == sig).collect();
                // Try the same local index first.
                if let Some(p) = c.iter().position(|&t| t == dst.join(kind, x)) {
                    c[..=p].rotate_right(1);
                }
                c
            })
            .collect();
        let n = src.len();
        Self { src, dst, candidates, image: vec![NONE; n], used: vec![false; n], trail: Vec::new() }
    }

    /// Assigns `u ↦ t` and everything it forces. Returns `false` on conflict;
    /// the trail still records what was assigned so the caller can undo.
    fn assign(&mut self, u: usize, t: usize) -> bool {
        let mut queue = vec![(u, t)];
        while let Some((u, t)) = queue.pop() {
            if self.image[u] == t {
                continue;
            }
            if self.image[u] != NONE || self.used[t] || !self.candidates[u].contains(&t) {
                return false;
            }
            self.image[u] = t;
            self.used[t] = true;
            self.trail.push(u);
            for i in 0..self.trail.len() {
                let v = self.trail[i];
                let tv = self.image[v];
                if let Some(p) = self.src.product(u, v) {
                    queue.push((p, self.dst.product(t, tv).expect("same kinds")));
                }
                if let Some(p) = self.src.product(v, u) {
                    queue.push((p, self.dst.product(tv, t).expect("same kinds")));
                }
            }
        }
        true
    }

    fn undo(&mut self, mark: usize) {
        for u in self.trail.drain(mark..) {
            self.used[self.image[u]] = false;
            self.image[u] = NONE;
        }
    }

    fn run(mut self) -> Option<CategoryMaps> {
        let (sa, sg) = (self.src.join(Kind::A, self.src.c.unit_a()), self.src.join(Kind::G, self.src.c.unit_g()));
        let (ta, tg) = (self.dst.join(Kind::A, self.dst.c.unit_a()), self.dst.join(Kind::G, self.dst.c.unit_g()));
        if !self.assign(sa, ta) || !self.assign(sg, tg) {
            return None;
        }
        if !self.extend() {
            return None;
        }
        let part = |k: Kind| -> Vec<usize> {
            (0..self.src.c.len(k)).map(|x| self.dst.split(self.image[self.src.join(k, x)]).1).collect()
        };
        Some(CategoryMaps { a: part(Kind::A), l: part(Kind::L), r: part(Kind::R), g: part(Kind::G) })
    }

    fn extend(&mut self) -> bool {
        let next = (0..self.src.len())
            .filter(|&u| self.image[u] == NONE)
            .min_by_key(|&u| self.candidates[u].iter().filter(|&&t| !self.used[t]).count());
        let Some(u) = next else { return true };
        let options: Vec<usize> = self.candidates[u].iter().copied().filter(|&t| !self.used[t]).collect();
        for t in options {
            let mark = self.trail.len();
            if self.assign(u, t) && self.extend() {
                return true;
            }
            self.undo(mark);
        }
        false
    }
}
