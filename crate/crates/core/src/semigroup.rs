//! Finite semigroups and monoids given by Cayley tables.
//!
//! `table[i][j]` is the product `i·j`, read left to right. Elements are
//! positional indices; every derived subset keeps the ambient indices of the
//! carrier it was computed in.

use std::collections::hash_map::DefaultHasher;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::Deref;

use crate::error::{Error, Result};

/// A validated finite semigroup.
#[derive(Clone, Debug)]
pub struct FiniteSemigroup {
    n: usize,
    table: Vec<usize>,
    labels: Vec<String>,
    fingerprint: u64,
}

impl PartialEq for FiniteSemigroup {
    /// Two semigroups are equal when their tables are; labels are cosmetic.
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.table == other.table
    }
}

impl Eq for FiniteSemigroup {}

impl FiniteSemigroup {
    /// Validates a square table: shape, range, and associativity over all
    /// `n³` triples.
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let n = rows.len();
        let labels = (0..n).map(|i| i.to_string()).collect();
        Self::with_labels(rows, labels)
    }

    pub fn with_labels(rows: Vec<Vec<usize>>, labels: Vec<String>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::EmptyTable);
        }
        let mut table = Vec::with_capacity(n * n);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != n {
                return Err(Error::NotSquare { row: i, len: row.len(), expected: n });
            }
            for (j, &v) in row.iter().enumerate() {
                if v >= n {
                    return Err(Error::OutOfRange(i, j));
                }
            }
            table.extend(row);
        }
        Self::from_flat(n, table, labels)
    }

    /// Builds the table of `f(i, j)` over `[0, n)²`.
    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> usize) -> Result<Self> {
        let rows = (0..n).map(|i| (0..n).map(|j| f(i, j)).collect()).collect();
        Self::new(rows)
    }

    fn from_flat(n: usize, table: Vec<usize>, mut labels: Vec<String>) -> Result<Self> {
        if labels.len() != n {
            labels = (0..n).map(|i| i.to_string()).collect();
        }
        for i in 0..n {
            for j in 0..n {
                let ij = table[i * n + j];
                for k in 0..n {
                    if table[ij * n + k] != table[i * n + table[j * n + k]] {
                        return Err(Error::NotAssociative(i, j, k));
                    }
                }
            }
        }
        let mut hasher = DefaultHasher::new();
        n.hash(&mut hasher);
        table.hash(&mut hasher);
        let fingerprint = hasher.finish();
        Ok(Self { n, table, labels, fingerprint })
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    #[inline]
    pub fn mul(&self, i: usize, j: usize) -> usize {
        self.table[i * self.n + j]
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.n).map(|r| r.to_vec()).collect()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    /// Replaces display labels; the table is untouched.
    pub fn relabeled(mut self, labels: Vec<String>) -> Self {
        if labels.len() == self.n {
            self.labels = labels;
        }
        self
    }

    /// Identifies the table this semigroup was built from. Subsets carry it so
    /// that operations can reject mixed carriers.
    pub fn fingerprint(&self) -> u64 {
        self.fingerprint
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    pub fn full_subset(&self) -> Subset {
        Subset { carrier: self.fingerprint, members: (0..self.n).collect() }
    }

    pub fn subset(&self, members: impl IntoIterator<Item = usize>) -> Result<Subset> {
        Subset::new(self, members)
    }

    /// The unique two-sided identity, if one exists.
    pub fn find_identity(&self) -> Option<usize> {
        self.elements().find(|&e| self.is_identity(e))
    }

    pub fn is_identity(&self, e: usize) -> bool {
        self.elements().all(|i| self.mul(e, i) == i && self.mul(i, e) == i)
    }

    pub fn is_idempotent(&self, i: usize) -> bool {
        self.mul(i, i) == i
    }

    pub fn idempotents(&self) -> Subset {
        Subset { carrier: self.fingerprint, members: self.elements().filter(|&i| self.is_idempotent(i)).collect() }
    }

    /// Smallest subsemigroup containing `gens`.
    pub fn generated_subsemigroup(&self, gens: &Subset) -> Result<Subset> {
        self.check_carrier(gens)?;
        if gens.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        let mut inside = vec![false; self.n];
        let mut members: Vec<usize> = gens.members().to_vec();
        for &g in &members {
            inside[g] = true;
        }
        // New elements only need to be multiplied against everything found so far.
        let mut frontier = 0;
        while frontier < members.len() {
            let x = members[frontier];
            frontier += 1;
            let mut k = 0;
            while k < members.len() {
                let y = members[k];
                k += 1;
                for p in [self.mul(x, y), self.mul(y, x)] {
                    if !inside[p] {
                        inside[p] = true;
                        members.push(p);
                    }
                }
            }
        }
        Ok(Subset::from_sorted(self.fingerprint, members))
    }

    /// Checks that `subset` is closed under the product.
    pub fn is_closed(&self, subset: &Subset) -> bool {
        self.first_escape(subset).is_none()
    }

    fn first_escape(&self, subset: &Subset) -> Option<(usize, usize)> {
        for &i in subset.members() {
            for &j in subset.members() {
                if !subset.contains(self.mul(i, j)) {
                    return Some((i, j));
                }
            }
        }
        None
    }

    /// The closed subset as a semigroup in its own right, re-indexed in
    /// ascending ambient order. Local index `k` is ambient
    /// `subset.members()[k]`.
    pub fn restrict(&self, subset: &Subset) -> Result<FiniteSemigroup> {
        self.check_carrier(subset)?;
        if subset.is_empty() {
            return Err(Error::EmptyTable);
        }
        if let Some((i, j)) = self.first_escape(subset) {
            return Err(Error::NotClosed(i, j));
        }
        let m = subset.members();
        let k = m.len();
        let mut table = Vec::with_capacity(k * k);
        for &i in m {
            for &j in m {
                table.push(subset.position(self.mul(i, j)).expect("closed"));
            }
        }
        let labels = m.iter().map(|&i| self.labels[i].clone()).collect();
        Self::from_flat(k, table, labels)
    }

    pub(crate) fn check_carrier(&self, subset: &Subset) -> Result<()> {
        if subset.carrier != self.fingerprint {
            return Err(Error::CarrierMismatch);
        }
        Ok(())
    }
}

/// A finite monoid: a semigroup together with its identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Monoid {
    base: FiniteSemigroup,
    identity: usize,
}

impl Deref for Monoid {
    type Target = FiniteSemigroup;

    fn deref(&self) -> &FiniteSemigroup {
        &self.base
    }
}

impl Monoid {
    pub fn new(base: FiniteSemigroup, identity: usize) -> Result<Self> {
        if identity >= base.len() {
            return Err(Error::BadElement(identity, base.len()));
        }
        if !base.is_identity(identity) {
            return Err(Error::NotIdentity(identity));
        }
        Ok(Self { base, identity })
    }

    /// Uses the semigroup's own identity; fails with `NoIdentity` if absent.
    pub fn from_semigroup(base: FiniteSemigroup) -> Result<Self> {
        let identity = base.find_identity().ok_or(Error::NoIdentity)?;
        Ok(Self { base, identity })
    }

    /// `S ∪ {1}` with a fresh identity at index `n`, added even when `S`
    /// already has an identity.
    pub fn adjoin_identity(s: &FiniteSemigroup) -> Monoid {
        let n = s.len();
        let one = n;
        let mut table = Vec::with_capacity((n + 1) * (n + 1));
        for i in 0..=n {
            for j in 0..=n {
                table.push(if i == one {
                    j
                } else if j == one {
                    i
                } else {
                    s.mul(i, j)
                });
            }
        }
        let mut labels = s.labels.clone();
        labels.push("1".to_string());
        let base =
            FiniteSemigroup::from_flat(n + 1, table, labels).expect("adjoining an identity preserves associativity");
        Monoid { base, identity: one }
    }

    /// The identity-adjoined monoid if `s` lacks an identity, otherwise `s`
    /// with its own identity.
    pub fn with_identity(s: FiniteSemigroup) -> Monoid {
        match s.find_identity() {
            Some(identity) => Monoid { base: s, identity },
            None => Monoid::adjoin_identity(&s),
        }
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn semigroup(&self) -> &FiniteSemigroup {
        &self.base
    }

    pub fn into_semigroup(self) -> FiniteSemigroup {
        self.base
    }

    pub fn relabeled(self, labels: Vec<String>) -> Self {
        Self { base: self.base.relabeled(labels), identity: self.identity }
    }

    /// Every row and every column is a permutation (Latin square with identity).
    pub fn is_group(&self) -> bool {
        let n = self.len();
        let mut seen = vec![0usize; n];
        let mut stamp = 0;
        for i in 0..n {
            stamp += 1;
            for j in 0..n {
                let p = self.mul(i, j);
                if seen[p] == stamp {
                    return false;
                }
                seen[p] = stamp;
            }
            stamp += 1;
            for j in 0..n {
                let p = self.mul(j, i);
                if seen[p] == stamp {
                    return false;
                }
                seen[p] = stamp;
            }
        }
        true
    }

    /// Two-sided inverse of `g`, if it has one.
    pub fn inverse(&self, g: usize) -> Option<usize> {
        self.elements().find(|&h| self.mul(g, h) == self.identity && self.mul(h, g) == self.identity)
    }
}

/// A canonical subset of a carrier semigroup: sorted, duplicate free.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subset {
    carrier: u64,
    members: Vec<usize>,
}

impl Subset {
    pub fn new(s: &FiniteSemigroup, members: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut members: Vec<usize> = members.into_iter().collect();
        if let Some(&bad) = members.iter().find(|&&m| m >= s.len()) {
            return Err(Error::BadElement(bad, s.len()));
        }
        members.sort_unstable();
        members.dedup();
        Ok(Self { carrier: s.fingerprint(), members })
    }

    pub(crate) fn from_sorted(carrier: u64, mut members: Vec<usize>) -> Self {
        members.sort_unstable();
        members.dedup();
        Self { carrier, members }
    }

    pub(crate) fn from_mask(carrier: u64, mask: &[bool]) -> Self {
        let members = mask.iter().enumerate().filter(|(_, &b)| b).map(|(i, _)| i).collect();
        Self { carrier, members }
    }

    pub fn carrier(&self) -> u64 {
        self.carrier
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    /// Local index of an ambient element.
    pub fn position(&self, x: usize) -> Option<usize> {
        self.members.binary_search(&x).ok()
    }

    pub fn is_subset_of(&self, other: &Subset) -> bool {
        self.carrier == other.carrier && self.members.iter().all(|&m| other.contains(m))
    }

    pub fn intersection(&self, other: &Subset) -> Result<Subset> {
        if self.carrier != other.carrier {
            return Err(Error::CarrierMismatch);
        }
        let members = self.members.iter().copied().filter(|&m| other.contains(m)).collect();
        Ok(Subset { carrier: self.carrier, members })
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, m) in self.members.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{m}")?;
        }
        write!(f, "}}")
    }
}

/// Contents of a Cayley table file.
#[derive(Clone, Debug)]
pub struct CayleyFile {
    pub semigroup: FiniteSemigroup,
    pub identity: Option<usize>,
}

impl CayleyFile {
    /// The declared identity if given, otherwise a discovered one; a fresh
    /// identity is adjoined when the table has none.
    pub fn into_monoid(self) -> Result<Monoid> {
        match self.identity {
            Some(e) => Monoid::new(self.semigroup, e),
            None => Ok(Monoid::with_identity(self.semigroup)),
        }
    }
}

/// Parses the Cayley text format: a line with `n`, then `n` rows of `n`
/// indices, then optionally `identity k`. Lines starting with `#` are comments.
pub fn parse_cayley(text: &str) -> Result<CayleyFile> {
    let mut lines =
        text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (line, first) = lines.next().ok_or(Error::Parse { line: 1, msg: "missing size".into() })?;
    let n: usize =
        first.parse().map_err(|_| Error::Parse { line, msg: format!("expected element count, got {first:?}") })?;
    let mut rows = Vec::with_capacity(n);
    for _ in 0..n {
        let (line, text) = lines.next().ok_or(Error::Parse { line, msg: format!("expected {n} table rows") })?;
        let row = text
            .split_whitespace()
            .map(|t| t.parse::<usize>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|e| Error::Parse { line, msg: e.to_string() })?;
        if row.len() != n {
            return Err(Error::Parse { line, msg: format!("expected {n} entries, got {}", row.len()) });
        }
        rows.push(row);
    }
    let mut identity = None;
    if let Some((line, text)) = lines.next() {
        let mut parts = text.split_whitespace();
        match (parts.next(), parts.next(), parts.next()) {
            (Some("identity"), Some(k), None) => {
                identity =
                    Some(k.parse().map_err(|_| Error::Parse { line, msg: format!("bad identity index {k:?}") })?);
            }
            _ => return Err(Error::Parse { line, msg: format!("unexpected line {text:?}") }),
        }
    }
    if let Some((line, text)) = lines.next() {
        return Err(Error::Parse { line, msg: format!("trailing content {text:?}") });
    }
    let semigroup = FiniteSemigroup::new(rows)?;
    Ok(CayleyFile { semigroup, identity })
}

/// Renders a table in the Cayley text format.
pub fn write_cayley(s: &FiniteSemigroup, identity: Option<usize>) -> String {
    let mut out = format!("{}\n", s.len());
    for row in s.rows() {
        let row: Vec<String> = row.iter().map(|v| v.to_string()).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    if let Some(e) = identity {
        out.push_str(&format!("identity {e}\n"));
    }
    out
}
