//! Deterministic families of small monoids for property suites.
//!
//! Every family yields monoids; semigroups without an identity get one
//! adjoined. Families are written on the command line as colon-separated
//! specs, for example `transformation:3:2`, `band:2:3` or `rees:s3:2:1`.

use std::fmt;
use std::path::Path;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::rees::ReesMatrixSemigroup;
use crate::semigroup::{write_cayley, FiniteSemigroup, Monoid};

pub const MAX_POINTS: usize = 4;
pub const MAX_GENERATORS: usize = 3;
pub const MAX_GROUP_ORDER: usize = 24;
pub const MAX_SEMIGROUP_SIZE: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GroupKind {
    Cyclic(usize),
    Symmetric(usize),
}

impl GroupKind {
    pub fn order(self) -> usize {
        match self {
            GroupKind::Cyclic(m) => m,
            GroupKind::Symmetric(m) => (1..=m).product(),
        }
    }

    pub fn build(self) -> Result<Monoid> {
        match self {
            GroupKind::Cyclic(m) => cyclic_group(m),
            GroupKind::Symmetric(m) => symmetric_group(m),
        }
    }
}

impl fmt::Display for GroupKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupKind::Cyclic(m) => write!(f, "c{m}"),
            GroupKind::Symmetric(m) => write!(f, "s{m}"),
        }
    }
}

impl FromStr for GroupKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::BoundsExceeded(format!("unknown group '{s}' (expected cN or sN)"));
        let (kind, num) = s.split_at(1.min(s.len()));
        let m: usize = num.parse().map_err(|_| bad())?;
        match kind {
            "c" => Ok(GroupKind::Cyclic(m)),
            "s" => Ok(GroupKind::Symmetric(m)),
            _ => Err(bad()),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    /// Submonoids of the full transformation monoid on `n` points generated
    /// by every set of at most `max_gens` maps.
    TransformationSubmonoids {
        n: usize,
        max_gens: usize,
    },
    LeftZero(usize),
    RightZero(usize),
    RectangularBand(usize, usize),
    CyclicGroup(usize),
    SymmetricGroup(usize),
    /// Rees matrix semigroup with a sandwich matrix drawn from the seed.
    ReesSample {
        group: GroupKind,
        i: usize,
        lambda: usize,
    },
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::TransformationSubmonoids { n, max_gens } => write!(f, "transformation:{n}:{max_gens}"),
            Family::LeftZero(k) => write!(f, "left-zero:{k}"),
            Family::RightZero(k) => write!(f, "right-zero:{k}"),
            Family::RectangularBand(p, q) => write!(f, "band:{p}:{q}"),
            Family::CyclicGroup(m) => write!(f, "cyclic:{m}"),
            Family::SymmetricGroup(m) => write!(f, "symmetric:{m}"),
            Family::ReesSample { group, i, lambda } => write!(f, "rees:{group}:{i}:{lambda}"),
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(':').collect();
        let num = |k: usize| -> Result<usize> {
            parts
                .get(k)
                .and_then(|p| p.parse().ok())
                .ok_or_else(|| Error::BoundsExceeded(format!("family '{s}': parameter {k} missing or not a number")))
        };
        let arity = |n: usize| -> Result<()> {
            if parts.len() == n + 1 {
                Ok(())
            } else {
                Err(Error::BoundsExceeded(format!("family '{s}' takes {n} parameter(s)")))
            }
        };
        let family = match parts[0] {
            "transformation" => {
                arity(2)?;
                Family::TransformationSubmonoids { n: num(1)?, max_gens: num(2)? }
            }
            "left-zero" => {
                arity(1)?;
                Family::LeftZero(num(1)?)
            }
            "right-zero" => {
                arity(1)?;
                Family::RightZero(num(1)?)
            }
            "band" => {
                arity(2)?;
                Family::RectangularBand(num(1)?, num(2)?)
            }
            "cyclic" => {
                arity(1)?;
                Family::CyclicGroup(num(1)?)
            }
            "symmetric" => {
                arity(1)?;
                Family::SymmetricGroup(num(1)?)
            }
            "rees" => {
                arity(3)?;
                Family::ReesSample { group: parts[1].parse()?, i: num(2)?, lambda: num(3)? }
            }
            other => return Err(Error::BoundsExceeded(format!("unknown family '{other}'"))),
        };
        family.check_bounds()?;
        Ok(family)
    }
}

impl Family {
    pub fn check_bounds(&self) -> Result<()> {
        let fail = |why: String| Err(Error::BoundsExceeded(format!("{self}: {why}")));
        match *self {
            Family::TransformationSubmonoids { n, max_gens } => {
                if n == 0 || n > MAX_POINTS {
                    return fail(format!("points must be in 1..={MAX_POINTS}"));
                }
                if max_gens == 0 || max_gens > MAX_GENERATORS {
                    return fail(format!("generator count must be in 1..={MAX_GENERATORS}"));
                }
            }
            Family::LeftZero(k) | Family::RightZero(k) => {
                if k == 0 || k > MAX_SEMIGROUP_SIZE {
                    return fail(format!("size must be in 1..={MAX_SEMIGROUP_SIZE}"));
                }
            }
            Family::RectangularBand(p, q) => {
                if p == 0 || q == 0 || p * q > MAX_SEMIGROUP_SIZE {
                    return fail(format!("p·q must be in 1..={MAX_SEMIGROUP_SIZE}"));
                }
            }
            Family::CyclicGroup(m) => {
                if m == 0 || m > MAX_GROUP_ORDER {
                    return fail(format!("order must be in 1..={MAX_GROUP_ORDER}"));
                }
            }
            Family::SymmetricGroup(m) => {
                if m == 0 || m > 4 {
                    return fail(format!("order must be at most {MAX_GROUP_ORDER}"));
                }
            }
            Family::ReesSample { group, i, lambda } => {
                let order = match group {
                    GroupKind::Cyclic(0) | GroupKind::Symmetric(0) => return fail("empty group".into()),
                    GroupKind::Symmetric(m) if m > 4 => {
                        return fail(format!("order must be at most {MAX_GROUP_ORDER}"))
                    }
                    g => g.order(),
                };
                if order > MAX_GROUP_ORDER {
                    return fail(format!("order must be at most {MAX_GROUP_ORDER}"));
                }
                if i == 0 || lambda == 0 || i * order * lambda > MAX_SEMIGROUP_SIZE {
                    return fail(format!("|I|·|G|·|Λ| must be in 1..={MAX_SEMIGROUP_SIZE}"));
                }
            }
        }
        Ok(())
    }

    /// Short name used in file names.
    pub fn slug(&self) -> String {
        self.to_string().replace(':', "-")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorpusSpec {
    pub family: Family,
    pub seed: u64,
}

impl CorpusSpec {
    pub fn new(family: Family) -> Self {
        Self { family, seed: 0 }
    }

    pub fn with_seed(family: Family, seed: u64) -> Self {
        Self { family, seed }
    }
}

/// All monoids of a family, deduplicated by table equality, in a fixed order.
pub fn generate(spec: &CorpusSpec) -> Result<Vec<Monoid>> {
    spec.family.check_bounds()?;
    let raw = match spec.family {
        Family::TransformationSubmonoids { n, max_gens } => transformation_submonoids(n, max_gens)?,
        Family::LeftZero(k) => vec![Monoid::adjoin_identity(&left_zero(k)?)],
        Family::RightZero(k) => vec![Monoid::adjoin_identity(&right_zero(k)?)],
        Family::RectangularBand(p, q) => vec![Monoid::with_identity(rectangular_band(p, q)?)],
        Family::CyclicGroup(m) => vec![cyclic_group(m)?],
        Family::SymmetricGroup(m) => vec![symmetric_group(m)?],
        Family::ReesSample { group, i, lambda } => {
            let rees = rees_sample(group, i, lambda, spec.seed)?;
            vec![Monoid::with_identity(rees.expand())]
        }
    };
    let mut out: Vec<Monoid> = Vec::with_capacity(raw.len());
    for m in raw {
        if !out.iter().any(|o| o.semigroup() == m.semigroup()) {
            out.push(m);
        }
    }
    Ok(out)
}

/// Maps on `n` points, in lexicographic order of their value lists.
fn all_maps(n: usize) -> Vec<Vec<usize>> {
    let total = n.pow(n as u32);
    (0..total)
        .map(|mut code| {
            let mut v = vec![0; n];
            for slot in v.iter_mut().rev() {
                *slot = code % n;
                code /= n;
            }
            v
        })
        .collect()
}

fn map_label(f: &[usize]) -> String {
    f.iter().map(|d| d.to_string()).collect()
}

/// The full transformation monoid on `n` points. Maps compose left to right:
/// `f·g` applies `f` first.
pub fn full_transformation_monoid(n: usize) -> Result<Monoid> {
    if n == 0 || n > MAX_POINTS {
        return Err(Error::BoundsExceeded(format!("transformation monoid on {n} points")));
    }
    let maps = all_maps(n);
    let code = |f: &[usize]| f.iter().fold(0, |acc, &d| acc * n + d);
    let labels = maps.iter().map(|f| map_label(f)).collect();
    let rows = maps
        .iter()
        .map(|f| maps.iter().map(|g| code(&f.iter().map(|&x| g[x]).collect::<Vec<_>>())).collect())
        .collect();
    let s = FiniteSemigroup::with_labels(rows, labels)?;
    let id: Vec<usize> = (0..n).collect();
    Monoid::new(s, code(&id))
}

fn transformation_submonoids(n: usize, max_gens: usize) -> Result<Vec<Monoid>> {
    let full = full_transformation_monoid(n)?;
    let size = full.len();
    let id = full.identity();
    let mut out = Vec::new();
    let mut stack: Vec<usize> = Vec::new();
    fn subsets(size: usize, max: usize, start: usize, stack: &mut Vec<usize>, visit: &mut dyn FnMut(&[usize])) {
        if !stack.is_empty() {
            visit(stack);
        }
        if stack.len() == max {
            return;
        }
        for next in start..size {
            stack.push(next);
            subsets(size, max, next + 1, stack, visit);
            stack.pop();
        }
    }
    let mut failure = None;
    subsets(size, max_gens, 0, &mut stack, &mut |gens| {
        if failure.is_some() {
            return;
        }
        let result = full
            .subset(gens.iter().copied().chain([id]))
            .and_then(|g| full.generated_subsemigroup(&g))
            .and_then(|sub| {
                let local_id = sub.position(id).expect("identity is a generator");
                Monoid::new(full.restrict(&sub)?, local_id)
            });
        match result {
            Ok(m) => out.push(m),
            Err(e) => failure = Some(e),
        }
    });
    match failure {
        Some(e) => Err(e),
        None => Ok(out),
    }
}

pub fn left_zero(k: usize) -> Result<FiniteSemigroup> {
    FiniteSemigroup::from_fn(k, |a, _| a)
}

pub fn right_zero(k: usize) -> Result<FiniteSemigroup> {
    FiniteSemigroup::from_fn(k, |_, b| b)
}

/// `(i, λ)` stored as `i·q + λ`, with `(i, λ)(j, μ) = (i, μ)`.
pub fn rectangular_band(p: usize, q: usize) -> Result<FiniteSemigroup> {
    FiniteSemigroup::from_fn(p * q, |a, b| (a / q) * q + b % q)
}

pub fn cyclic_group(m: usize) -> Result<Monoid> {
    let s = FiniteSemigroup::from_fn(m, |a, b| (a + b) % m)?;
    Monoid::new(s, 0)
}

/// Permutations of `m` points in lexicographic order, composed left to right.
pub fn symmetric_group(m: usize) -> Result<Monoid> {
    let perms: Vec<Vec<usize>> = all_maps(m)
        .into_iter()
        .filter(|f| {
            let mut seen = vec![false; m];
            f.iter().all(|&x| !std::mem::replace(&mut seen[x], true))
        })
        .collect();
    let index = |f: &[usize]| perms.iter().position(|p| p == f).expect("closed");
    let rows = perms
        .iter()
        .map(|f| perms.iter().map(|g| index(&f.iter().map(|&x| g[x]).collect::<Vec<_>>())).collect())
        .collect();
    let labels = perms.iter().map(|f| map_label(f)).collect();
    let s = FiniteSemigroup::with_labels(rows, labels)?;
    let id: Vec<usize> = (0..m).collect();
    Monoid::new(s, index(&id))
}

/// A Rees matrix semigroup whose sandwich entries are drawn uniformly with a
/// ChaCha8 stream keyed by `seed`.
pub fn rees_sample(group: GroupKind, i: usize, lambda: usize, seed: u64) -> Result<ReesMatrixSemigroup> {
    Family::ReesSample { group, i, lambda }.check_bounds()?;
    let g = group.build()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let sandwich = (0..lambda).map(|_| (0..i).map(|_| rng.gen_range(0..g.len())).collect()).collect();
    ReesMatrixSemigroup::new(g, i, lambda, sandwich)
}

/// A named corpus member.
#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub name: String,
    pub family: Family,
    pub monoid: Monoid,
}

/// The families making up the standard corpus.
pub fn standard_specs(seed: u64) -> Vec<CorpusSpec> {
    let mut specs = vec![
        CorpusSpec::new(Family::TransformationSubmonoids { n: 2, max_gens: 2 }),
        CorpusSpec::new(Family::TransformationSubmonoids { n: 3, max_gens: 2 }),
    ];
    for k in 1..=4 {
        specs.push(CorpusSpec::new(Family::LeftZero(k)));
        specs.push(CorpusSpec::new(Family::RightZero(k)));
    }
    for p in 1..=3 {
        for q in 1..=3 {
            specs.push(CorpusSpec::new(Family::RectangularBand(p, q)));
        }
    }
    for m in 1..=6 {
        specs.push(CorpusSpec::new(Family::CyclicGroup(m)));
    }
    specs.push(CorpusSpec::new(Family::SymmetricGroup(3)));
    let mut k = 0;
    for group in [GroupKind::Cyclic(2), GroupKind::Cyclic(3), GroupKind::Symmetric(3)] {
        for (i, lambda) in [(1, 2), (2, 1), (2, 2), (2, 3)] {
            let family = Family::ReesSample { group, i, lambda };
            if family.check_bounds().is_ok() {
                specs.push(CorpusSpec::with_seed(family, seed.wrapping_add(k)));
                k += 1;
            }
        }
    }
    specs
}

/// Standard corpus: every member of [`standard_specs`], deduplicated by
/// table equality across families, named `<family>-<index>`.
pub fn standard_corpus(seed: u64) -> Result<Vec<CorpusEntry>> {
    let mut out: Vec<CorpusEntry> = Vec::new();
    for spec in standard_specs(seed) {
        for (idx, monoid) in generate(&spec)?.into_iter().enumerate() {
            if out.iter().any(|e| e.monoid.semigroup() == monoid.semigroup()) {
                continue;
            }
            out.push(CorpusEntry { name: format!("{}-{idx:03}", spec.family.slug()), family: spec.family, monoid });
        }
    }
    Ok(out)
}

/// Writes each entry to `<dir>/<name>.cayley`; returns the written paths.
pub fn dump(entries: &[CorpusEntry], dir: &Path) -> Result<Vec<std::path::PathBuf>> {
    std::fs::create_dir_all(dir).map_err(|e| Error::Io { path: dir.display().to_string(), msg: e.to_string() })?;
    entries
        .iter()
        .map(|e| {
            let path = dir.join(format!("{}.cayley", e.name));
            let text = format!("# {}\n{}", e.family, write_cayley(e.monoid.semigroup(), Some(e.monoid.identity())));
            std::fs::write(&path, text)
                .map_err(|err| Error::Io { path: path.display().to_string(), msg: err.to_string() })?;
            Ok(path)
        })
        .collect()
}
