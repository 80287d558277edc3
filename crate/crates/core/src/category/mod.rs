//! Two-object categories presented as algebraic matrices
//!
//! ```text
//!     ( A  L )
//!     ( R  G )
//! ```
//!
//! `A` and `G` are the endomorphism monoids of the first and second object.
//! Products are written in juxtaposition order, matching the semigroup
//! convention: for `x ∈ L` and `y ∈ R`, `x·y ∈ A` and `y·x ∈ G`. `L` carries a
//! left `A`-action and a right `G`-action, `R` the mirror image.
//!
//! Karoubi hom-sets keep the indices of the ambient monoid they were cut from
//! (see [`HomSet::ambient`]); tensor hom-sets record the code of their smallest
//! representative pair.

mod compose;
mod construct;
mod iso;
mod json;
mod structure;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bimodule::Bimodule;
use crate::error::{Error, Result};
use crate::semigroup::{FiniteSemigroup, Monoid};

pub use compose::compose_categories;
pub use construct::{category_from_monoid, category_from_simple, groupoid, karoubi_pair, kernel_subcategory};
pub use iso::{category_isomorphic, check_isomorphism, CategoryIso, CategoryMaps, MapViolation};
pub use json::{CategoryJson, HomSets, Sizes};
pub use structure::{
    extract_simple, ideal_slices, is_reduced, minimal_ideal_correspondence, standardize, standardize_with,
    CorrespondenceFailure, IdealSlices, Standardization,
};

/// The four hom-sets of the matrix layout.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Kind {
    A,
    L,
    R,
    G,
}

impl Kind {
    pub const ALL: [Kind; 4] = [Kind::A, Kind::L, Kind::R, Kind::G];

    /// Objects on the left and right of the slot: `A = (1,1)`, `L = (1,2)`,
    /// `R = (2,1)`, `G = (2,2)`.
    pub fn ends(self) -> (u8, u8) {
        match self {
            Kind::A => (1, 1),
            Kind::L => (1, 2),
            Kind::R => (2, 1),
            Kind::G => (2, 2),
        }
    }

    pub fn from_ends(left: u8, right: u8) -> Kind {
        match (left, right) {
            (1, 1) => Kind::A,
            (1, 2) => Kind::L,
            (2, 1) => Kind::R,
            _ => Kind::G,
        }
    }

    /// Kind of `x·y`, if the product is typed.
    pub fn product(self, other: Kind) -> Option<Kind> {
        let (a, b) = self.ends();
        let (c, d) = other.ends();
        (b == c).then(|| Kind::from_ends(a, d))
    }

    /// Slot after swapping the two objects.
    pub fn swapped(self) -> Kind {
        match self {
            Kind::A => Kind::G,
            Kind::L => Kind::R,
            Kind::R => Kind::L,
            Kind::G => Kind::A,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Kind::A => "A",
            Kind::L => "L",
            Kind::R => "R",
            Kind::G => "G",
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Elements of one hom-set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomSet {
    /// Provenance of each element (ambient monoid index or tensor pair code).
    pub ambient: Vec<usize>,
    pub labels: Vec<String>,
}

impl HomSet {
    pub fn new(ambient: Vec<usize>, labels: Vec<String>) -> Self {
        Self { ambient, labels }
    }

    pub fn plain(len: usize) -> Self {
        Self { ambient: (0..len).collect(), labels: (0..len).map(|i| i.to_string()).collect() }
    }

    pub fn len(&self) -> usize {
        self.ambient.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ambient.is_empty()
    }

    pub fn position(&self, ambient: usize) -> Option<usize> {
        self.ambient.iter().position(|&a| a == ambient)
    }

    fn permuted(&self, map: &[usize]) -> HomSet {
        let mut ambient = vec![0; self.len()];
        let mut labels = vec![String::new(); self.len()];
        for (old, &new) in map.iter().enumerate() {
            ambient[new] = self.ambient[old];
            labels[new] = self.labels[old].clone();
        }
        HomSet { ambient, labels }
    }
}

/// The eight composition tables, each indexed `[left factor][right factor]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub struct Tables {
    pub aa: Vec<Vec<usize>>,
    pub al: Vec<Vec<usize>>,
    pub lg: Vec<Vec<usize>>,
    pub lr: Vec<Vec<usize>>,
    pub ra: Vec<Vec<usize>>,
    pub gr: Vec<Vec<usize>>,
    pub rl: Vec<Vec<usize>>,
    pub gg: Vec<Vec<usize>>,
}

impl Tables {
    pub fn get(&self, left: Kind, right: Kind) -> Option<&Vec<Vec<usize>>> {
        use Kind::*;
        match (left, right) {
            (A, A) => Some(&self.aa),
            (A, L) => Some(&self.al),
            (L, G) => Some(&self.lg),
            (L, R) => Some(&self.lr),
            (R, A) => Some(&self.ra),
            (G, R) => Some(&self.gr),
            (R, L) => Some(&self.rl),
            (G, G) => Some(&self.gg),
            _ => None,
        }
    }

    fn get_mut(&mut self, left: Kind, right: Kind) -> Option<&mut Vec<Vec<usize>>> {
        use Kind::*;
        match (left, right) {
            (A, A) => Some(&mut self.aa),
            (A, L) => Some(&mut self.al),
            (L, G) => Some(&mut self.lg),
            (L, R) => Some(&mut self.lr),
            (R, A) => Some(&mut self.ra),
            (G, R) => Some(&mut self.gr),
            (R, L) => Some(&mut self.rl),
            (G, G) => Some(&mut self.gg),
            _ => None,
        }
    }

    /// Every typed pair `(left, right)`.
    pub const PAIRS: [(Kind, Kind); 8] = [
        (Kind::A, Kind::A),
        (Kind::A, Kind::L),
        (Kind::L, Kind::G),
        (Kind::L, Kind::R),
        (Kind::R, Kind::A),
        (Kind::G, Kind::R),
        (Kind::R, Kind::L),
        (Kind::G, Kind::G),
    ];
}

/// The first broken axiom found by [`TwoObjectCategory::check`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    EmptyHom(Kind),
    Shape { table: String },
    BadUnit(Kind),
    Identity { kind: Kind, element: usize, side: &'static str },
    Associativity { pattern: String, triple: (usize, usize, usize) },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::EmptyHom(k) => write!(f, "hom-set {k} is empty"),
            Violation::Shape { table } => write!(f, "table {table} has the wrong shape or an out-of-range entry"),
            Violation::BadUnit(k) => write!(f, "unit of {k} is out of range"),
            Violation::Identity { kind, element, side } => {
                write!(f, "{side} identity law fails on {kind} element {element}")
            }
            Violation::Associativity { pattern, triple } => {
                write!(f, "associativity fails for pattern {pattern} at {triple:?}")
            }
        }
    }
}

/// A finite category with two objects.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoObjectCategory {
    a: HomSet,
    l: HomSet,
    r: HomSet,
    g: HomSet,
    unit_a: usize,
    unit_g: usize,
    tables: Tables,
}

impl TwoObjectCategory {
    /// Validates identities and all sixteen associativity patterns.
    pub fn new(homs: [HomSet; 4], unit_a: usize, unit_g: usize, tables: Tables) -> Result<Self> {
        let [a, l, r, g] = homs;
        let c = Self { a, l, r, g, unit_a, unit_g, tables };
        c.check().map_err(|v| Error::InvalidCategory(v.to_string()))?;
        Ok(c)
    }

    pub fn hom(&self, kind: Kind) -> &HomSet {
        match kind {
            Kind::A => &self.a,
            Kind::L => &self.l,
            Kind::R => &self.r,
            Kind::G => &self.g,
        }
    }

    pub fn len(&self, kind: Kind) -> usize {
        self.hom(kind).len()
    }

    /// `(|A|, |L|, |R|, |G|)`.
    pub fn sizes(&self) -> (usize, usize, usize, usize) {
        (self.a.len(), self.l.len(), self.r.len(), self.g.len())
    }

    pub fn unit_a(&self) -> usize {
        self.unit_a
    }

    pub fn unit_g(&self) -> usize {
        self.unit_g
    }

    /// Identity of the object at the given end.
    fn unit_at(&self, end: u8) -> usize {
        if end == 1 {
            self.unit_a
        } else {
            self.unit_g
        }
    }

    pub fn tables(&self) -> &Tables {
        &self.tables
    }

    /// `x·y` for typed elements; `None` if the kinds do not compose.
    pub fn compose(&self, kx: Kind, x: usize, ky: Kind, y: usize) -> Option<(Kind, usize)> {
        let k = kx.product(ky)?;
        Some((k, self.tables.get(kx, ky)?[x][y]))
    }

    /// Every identity and associativity law, checked exhaustively. Returns the
    /// first violation.
    pub fn check(&self) -> Result<(), Violation> {
        for kind in Kind::ALL {
            if self.hom(kind).is_empty() {
                return Err(Violation::EmptyHom(kind));
            }
            if self.hom(kind).labels.len() != self.hom(kind).len() {
                return Err(Violation::Shape { table: format!("labels of {kind}") });
            }
        }
        if self.unit_a >= self.a.len() {
            return Err(Violation::BadUnit(Kind::A));
        }
        if self.unit_g >= self.g.len() {
            return Err(Violation::BadUnit(Kind::G));
        }
        for (kx, ky) in Tables::PAIRS {
            let t = self.tables.get(kx, ky).expect("typed");
            let kz = kx.product(ky).expect("typed");
            let (rows, cols, bound) = (self.len(kx), self.len(ky), self.len(kz));
            if t.len() != rows || t.iter().any(|row| row.len() != cols || row.iter().any(|&v| v >= bound)) {
                return Err(Violation::Shape { table: format!("{kx}{ky}") });
            }
        }
        for kind in Kind::ALL {
            let (left, right) = kind.ends();
            let lu = Kind::from_ends(left, left);
            let ru = Kind::from_ends(right, right);
            let on_left = &self.tables.get(lu, kind).expect("typed")[self.unit_at(left)];
            for (x, &image) in on_left.iter().enumerate() {
                if image != x {
                    return Err(Violation::Identity { kind, element: x, side: "left" });
                }
                if self.tables.get(kind, ru).expect("typed")[x][self.unit_at(right)] != x {
                    return Err(Violation::Identity { kind, element: x, side: "right" });
                }
            }
        }
        for k1 in Kind::ALL {
            for k2 in Kind::ALL.into_iter().filter(|&k| k1.product(k).is_some()) {
                for k3 in Kind::ALL.into_iter().filter(|&k| k2.product(k).is_some()) {
                    self.check_pattern(k1, k2, k3)?;
                }
            }
        }
        Ok(())
    }

    fn check_pattern(&self, k1: Kind, k2: Kind, k3: Kind) -> Result<(), Violation> {
        let k12 = k1.product(k2).expect("typed");
        let k23 = k2.product(k3).expect("typed");
        let t12 = self.tables.get(k1, k2).expect("typed");
        let t23 = self.tables.get(k2, k3).expect("typed");
        let t12_3 = self.tables.get(k12, k3).expect("typed");
        let t1_23 = self.tables.get(k1, k23).expect("typed");
        for x in 0..self.len(k1) {
            for y in 0..self.len(k2) {
                let xy = t12[x][y];
                for z in 0..self.len(k3) {
                    if t12_3[xy][z] != t1_23[x][t23[y][z]] {
                        return Err(Violation::Associativity { pattern: format!("{k1}{k2}{k3}"), triple: (x, y, z) });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn is_valid(&self) -> bool {
        self.check().is_ok()
    }

    pub fn monoid_a(&self) -> Result<Monoid> {
        let s = FiniteSemigroup::with_labels(self.tables.aa.clone(), self.a.labels.clone())?;
        Monoid::new(s, self.unit_a)
    }

    pub fn monoid_g(&self) -> Result<Monoid> {
        let s = FiniteSemigroup::with_labels(self.tables.gg.clone(), self.g.labels.clone())?;
        Monoid::new(s, self.unit_g)
    }

    /// `L` as an `(A, G)`-bimodule.
    pub fn l_bimodule(&self) -> Result<Bimodule> {
        Bimodule::with_labels(
            self.monoid_a()?,
            self.monoid_g()?,
            self.l.len(),
            self.tables.al.clone(),
            self.tables.lg.clone(),
            self.l.labels.clone(),
        )
    }

    /// `R` as a `(G, A)`-bimodule.
    pub fn r_bimodule(&self) -> Result<Bimodule> {
        Bimodule::with_labels(
            self.monoid_g()?,
            self.monoid_a()?,
            self.r.len(),
            self.tables.gr.clone(),
            self.tables.ra.clone(),
            self.r.labels.clone(),
        )
    }

    /// The same category with its two objects swapped (`A ↔ G`, `L ↔ R`).
    pub fn reversed(&self) -> TwoObjectCategory {
        let t = &self.tables;
        TwoObjectCategory {
            a: self.g.clone(),
            l: self.r.clone(),
            r: self.l.clone(),
            g: self.a.clone(),
            unit_a: self.unit_g,
            unit_g: self.unit_a,
            tables: Tables {
                aa: t.gg.clone(),
                al: t.gr.clone(),
                lg: t.ra.clone(),
                lr: t.rl.clone(),
                ra: t.lg.clone(),
                gr: t.al.clone(),
                rl: t.lr.clone(),
                gg: t.aa.clone(),
            },
        }
    }

    /// Transports the structure along bijections: element `x` of kind `k`
    /// becomes `maps.get(k)[x]`.
    pub fn transport(&self, maps: &CategoryMaps) -> Result<TwoObjectCategory> {
        for kind in Kind::ALL {
            let m = maps.get(kind);
            let n = self.len(kind);
            let mut seen = vec![false; n];
            if m.len() != n || m.iter().any(|&v| v >= n || std::mem::replace(&mut seen[v], true)) {
                return Err(Error::InvalidCategory(format!("map on {kind} is not a permutation")));
            }
        }
        let mut tables = self.tables.clone();
        for (kx, ky) in Tables::PAIRS {
            let kz = kx.product(ky).expect("typed");
            let (mx, my, mz) = (maps.get(kx), maps.get(ky), maps.get(kz));
            let old = self.tables.get(kx, ky).expect("typed");
            let new = tables.get_mut(kx, ky).expect("typed");
            for (x, row) in old.iter().enumerate() {
                for (y, &v) in row.iter().enumerate() {
                    new[mx[x]][my[y]] = mz[v];
                }
            }
        }
        Ok(TwoObjectCategory {
            a: self.a.permuted(&maps.a),
            l: self.l.permuted(&maps.l),
            r: self.r.permuted(&maps.r),
            g: self.g.permuted(&maps.g),
            unit_a: maps.a[self.unit_a],
            unit_g: maps.g[self.unit_g],
            tables,
        })
    }

    /// Builds a category whose hom-sets are subsets of one monoid, composing
    /// by the monoid product. `sets` are sorted ambient indices in the order
    /// `A, L, R, G`.
    pub(crate) fn from_ambient(m: &Monoid, sets: [Vec<usize>; 4], e1: usize, e2: usize) -> Result<Self> {
        let homs: [HomSet; 4] = sets.clone().map(|s| {
            let labels = s.iter().map(|&i| m.label(i).to_string()).collect();
            HomSet::new(s, labels)
        });
        let locate = |kind: Kind, x: usize| -> Result<usize> {
            homs[kind as usize]
                .ambient
                .binary_search(&x)
                .map_err(|_| Error::InvalidCategory(format!("product {x} escapes hom-set {kind}")))
        };
        let table = |kx: Kind, ky: Kind| -> Result<Vec<Vec<usize>>> {
            let kz = kx.product(ky).expect("typed");
            sets[kx as usize]
                .iter()
                .map(|&x| sets[ky as usize].iter().map(|&y| locate(kz, m.mul(x, y))).collect())
                .collect()
        };
        use Kind::*;
        let tables = Tables {
            aa: table(A, A)?,
            al: table(A, L)?,
            lg: table(L, G)?,
            lr: table(L, R)?,
            ra: table(R, A)?,
            gr: table(G, R)?,
            rl: table(R, L)?,
            gg: table(G, G)?,
        };
        let unit_a = locate(A, e1)?;
        let unit_g = locate(G, e2)?;
        Self::new(homs, unit_a, unit_g, tables)
    }

    /// Replaces every hom-set's provenance by looking it up in `outer`: used
    /// when the ambient monoid was itself the `A` hom-set of another category.
    pub(crate) fn rebase_ambient(mut self, outer: &HomSet) -> Self {
        for hom in [&mut self.a, &mut self.l, &mut self.r, &mut self.g] {
            hom.labels = hom.ambient.iter().map(|&i| outer.labels[i].clone()).collect();
            hom.ambient = hom.ambient.iter().map(|&i| outer.ambient[i]).collect();
        }
        self
    }
}

/// Checks a category: identities plus all sixteen associativity patterns.
pub fn validate_category(c: &TwoObjectCategory) -> Result<(), Violation> {
    c.check()
}
