//! Finite semigroups given by Cayley tables.
//!
//! Elements are referred to by index `0..order`; labels are opaque strings
//! carried along for serialization only.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};

/// A finite semigroup stored as a row-major Cayley table.
///
/// `table[i * n + j]` is the product of element `i` by element `j`. A zero
/// and an identity are detected at construction time.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Semigroup {
    labels: Vec<String>,
    table: Vec<usize>,
    n: usize,
    zero: Option<usize>,
    identity: Option<usize>,
}

impl fmt::Debug for Semigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Semigroup")
            .field("labels", &self.labels)
            .field("table", &self.rows())
            .finish()
    }
}

impl Semigroup {
    /// Validates a labelled table and returns the semigroup, with zero and
    /// identity auto-detected.
    pub fn new(labels: Vec<String>, table: Vec<Vec<usize>>) -> Result<Self> {
        validate_semigroup(labels, table)
    }

    /// Builds a semigroup from a product function, checking associativity.
    pub fn from_fn(labels: Vec<String>, mul: impl Fn(usize, usize) -> usize) -> Result<Self> {
        let n = labels.len();
        let mut flat = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                flat.push(mul(a, b));
            }
        }
        Self::from_flat(labels, flat)
    }

    /// Validates a flat row-major table.
    pub fn from_flat(labels: Vec<String>, table: Vec<usize>) -> Result<Self> {
        let n = labels.len();
        if n == 0 {
            return Err(Error::BadShape("empty semigroup".into()));
        }
        if table.len() != n * n {
            return Err(Error::BadShape(format!(
                "expected {} table entries, got {}",
                n * n,
                table.len()
            )));
        }
        let distinct: BTreeSet<&String> = labels.iter().collect();
        if distinct.len() != n {
            return Err(Error::BadShape("element labels are not distinct".into()));
        }
        if let Some(&bad) = table.iter().find(|&&v| v >= n) {
            return Err(Error::BadShape(format!("table entry {bad} out of range")));
        }
        let s = Self::from_flat_unchecked(labels, table);
        if let Some((i, j, k)) = s.associativity_failure() {
            return Err(Error::NonAssociative(i, j, k));
        }
        Ok(s)
    }

    /// Builds a semigroup from a table known to be associative and in range.
    pub(crate) fn from_flat_unchecked(labels: Vec<String>, table: Vec<usize>) -> Self {
        let n = labels.len();
        debug_assert_eq!(table.len(), n * n);
        let mut s = Semigroup {
            labels,
            table,
            n,
            zero: None,
            identity: None,
        };
        s.zero = (0..n).find(|&z| (0..n).all(|i| s.mul(z, i) == z && s.mul(i, z) == z));
        s.identity = (0..n).find(|&e| (0..n).all(|i| s.mul(e, i) == i && s.mul(i, e) == i));
        s
    }

    /// First triple `(i, j, k)` with `(ij)k != i(jk)`, if any.
    pub fn associativity_failure(&self) -> Option<(usize, usize, usize)> {
        let n = self.n;
        for i in 0..n {
            for j in 0..n {
                let ij = self.mul(i, j);
                for k in 0..n {
                    if self.mul(ij, k) != self.mul(i, self.mul(j, k)) {
                        return Some((i, j, k));
                    }
                }
            }
        }
        None
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.n + b]
    }

    pub fn zero(&self) -> Option<usize> {
        self.zero
    }

    pub fn identity(&self) -> Option<usize> {
        self.identity
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Index of the element with the given label, or `UnknownLabel`.
    pub fn element(&self, label: &str) -> Result<usize> {
        self.index_of(label)
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    pub fn flat_table(&self) -> &[usize] {
        &self.table
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.n).map(|r| r.to_vec()).collect()
    }

    /// Product of a nonempty word of elements.
    pub fn product(&self, word: &[usize]) -> usize {
        let mut it = word.iter();
        let first = *it.next().expect("empty word");
        it.fold(first, |acc, &x| self.mul(acc, x))
    }

    /// `a^k` for `k >= 1`.
    pub fn pow(&self, a: usize, k: usize) -> usize {
        assert!(k >= 1);
        (1..k).fold(a, |acc, _| self.mul(acc, a))
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.n).all(|a| (a..self.n).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn idempotents(&self) -> Vec<usize> {
        (0..self.n).filter(|&a| self.mul(a, a) == a).collect()
    }

    /// True iff the semigroup has an identity and every element has a
    /// two-sided inverse.
    pub fn is_group(&self) -> bool {
        let Some(e) = self.identity else {
            return false;
        };
        (0..self.n).all(|a| (0..self.n).any(|b| self.mul(a, b) == e && self.mul(b, a) == e))
    }

    /// Group inverse of `a`, when the semigroup is a group.
    pub fn inverse(&self, a: usize) -> Option<usize> {
        let e = self.identity?;
        (0..self.n).find(|&b| self.mul(a, b) == e && self.mul(b, a) == e)
    }

    /// The opposite semigroup, with `a * b` replaced by `b * a`.
    pub fn dual(&self) -> Semigroup {
        let n = self.n;
        let flat = (0..n * n).map(|c| self.mul(c % n, c / n)).collect();
        Self::from_flat_unchecked(self.labels.clone(), flat)
    }

    /// The same semigroup with element `i` moved to position `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> Semigroup {
        let n = self.n;
        assert_eq!(perm.len(), n);
        let mut inv = vec![0; n];
        for (i, &p) in perm.iter().enumerate() {
            inv[p] = i;
        }
        let labels = (0..n).map(|i| self.labels[inv[i]].clone()).collect();
        let flat = (0..n * n)
            .map(|c| perm[self.mul(inv[c / n], inv[c % n])])
            .collect();
        Self::from_flat_unchecked(labels, flat)
    }

    /// The subsemigroup on `members` (which must be product-closed), with
    /// elements in the order given.
    pub fn restrict(&self, members: &[usize]) -> Semigroup {
        let mut local = HashMap::with_capacity(members.len());
        for (k, &m) in members.iter().enumerate() {
            local.insert(m, k);
        }
        let labels = members.iter().map(|&m| self.labels[m].clone()).collect();
        let mut flat = Vec::with_capacity(members.len() * members.len());
        for &a in members {
            for &b in members {
                flat.push(local[&self.mul(a, b)]);
            }
        }
        Self::from_flat_unchecked(labels, flat)
    }

    pub fn full_set(&self) -> FixedBitSet {
        let mut s = FixedBitSet::with_capacity(self.n);
        s.insert_range(..);
        s
    }
}

/// Checks shape, range and associativity of a labelled table.
pub fn validate_semigroup(labels: Vec<String>, table: Vec<Vec<usize>>) -> Result<Semigroup> {
    let n = labels.len();
    if table.len() != n {
        return Err(Error::BadShape(format!(
            "{} labels but {} table rows",
            n,
            table.len()
        )));
    }
    if let Some(row) = table.iter().find(|r| r.len() != n) {
        return Err(Error::BadShape(format!(
            "row of length {} in a table of order {}",
            row.len(),
            n
        )));
    }
    Semigroup::from_flat(labels, table.into_iter().flatten().collect())
}

/// Labels `a, b, c, ...` (then `a1, b1, ...`) for anonymous semigroups.
pub fn letter_labels(n: usize) -> Vec<String> {
    (0..n)
        .map(|i| {
            let c = (b'a' + (i % 26) as u8) as char;
            if i < 26 {
                c.to_string()
            } else {
                format!("{c}{}", i / 26)
            }
        })
        .collect()
}

/// `S^1`: `S` itself when it already has an identity, otherwise `S` with a
/// fresh identity appended at index `order` and labelled `"1"` (or a primed
/// variant if that label is taken).
pub fn adjoin_identity(s: &Semigroup) -> Semigroup {
    if s.identity().is_some() {
        return s.clone();
    }
    let n = s.order();
    let mut labels = s.labels().to_vec();
    let mut one = String::from("1");
    while labels.contains(&one) {
        one.push('\'');
    }
    labels.push(one);
    let m = n + 1;
    let mut flat = Vec::with_capacity(m * m);
    for a in 0..m {
        for b in 0..m {
            flat.push(match (a == n, b == n) {
                (true, _) => b,
                (_, true) => a,
                _ => s.mul(a, b),
            });
        }
    }
    Semigroup::from_flat_unchecked(labels, flat)
}

/// The subsemigroup generated by a set of elements.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SubsetClosure {
    pub generators: Vec<usize>,
    /// Ascending element indices.
    pub members: Vec<usize>,
}

impl SubsetClosure {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, a: usize) -> bool {
        self.members.binary_search(&a).is_ok()
    }
}

/// `<X>`, the smallest product-closed set containing `gens`.
pub fn closure(s: &Semigroup, gens: &[usize]) -> Result<SubsetClosure> {
    if gens.is_empty() {
        return Err(Error::EmptyGeneratorSet);
    }
    if let Some(&bad) = gens.iter().find(|&&g| g >= s.order()) {
        return Err(Error::IndexOutOfRange(bad));
    }
    let set = close_bits(s, &FixedBitSet::with_capacity(s.order()), gens);
    let mut generators = gens.to_vec();
    generators.sort_unstable();
    generators.dedup();
    Ok(SubsetClosure {
        generators,
        members: set.ones().collect(),
    })
}

/// Saturates `base ∪ extra` under multiplication. `base` must already be
/// closed; only products involving new elements are formed.
pub(crate) fn close_bits(s: &Semigroup, base: &FixedBitSet, extra: &[usize]) -> FixedBitSet {
    let mut set = base.clone();
    set.grow(s.order());
    let mut members: Vec<usize> = set.ones().collect();
    let mut queue = VecDeque::new();
    for &x in extra {
        if !set.put(x) {
            members.push(x);
            queue.push_back(x);
        }
    }
    while let Some(x) = queue.pop_front() {
        let mut k = 0;
        while k < members.len() {
            let y = members[k];
            for p in [s.mul(x, y), s.mul(y, x)] {
                if !set.put(p) {
                    members.push(p);
                    queue.push_back(p);
                }
            }
            k += 1;
        }
    }
    set
}

/// Per-element data preserved by isomorphisms.
fn element_invariants(s: &Semigroup) -> Vec<(bool, usize, usize, usize, usize, usize, usize)> {
    let n = s.order();
    let mut hits = vec![0usize; n];
    for &v in s.flat_table() {
        hits[v] += 1;
    }
    (0..n)
        .map(|a| {
            let row: BTreeSet<usize> = (0..n).map(|b| s.mul(a, b)).collect();
            let col: BTreeSet<usize> = (0..n).map(|b| s.mul(b, a)).collect();
            let (index, period) = index_period(s, a);
            let fixes = (0..n).filter(|&b| s.mul(a, b) == b).count();
            (s.mul(a, a) == a, hits[a], row.len(), col.len(), index, period, fixes)
        })
        .collect()
}

/// Index and period of the monogenic subsemigroup generated by `a`.
pub fn index_period(s: &Semigroup, a: usize) -> (usize, usize) {
    let mut seen: HashMap<usize, usize> = HashMap::new();
    let mut x = a;
    let mut k = 1;
    loop {
        if let Some(&first) = seen.get(&x) {
            return (first, k - first);
        }
        seen.insert(x, k);
        x = s.mul(x, a);
        k += 1;
    }
}

/// A table-preserving bijection `S -> T` (as `map[s_index] = t_index`), if
/// one exists.
pub fn is_isomorphic(s: &Semigroup, t: &Semigroup) -> Option<Vec<usize>> {
    let n = s.order();
    if n != t.order() {
        return None;
    }
    let inv_s = element_invariants(s);
    let inv_t = element_invariants(t);
    let mut ms: Vec<_> = inv_s.clone();
    let mut mt: Vec<_> = inv_t.clone();
    ms.sort();
    mt.sort();
    if ms != mt {
        return None;
    }
    let candidates: Vec<Vec<usize>> = (0..n)
        .map(|a| (0..n).filter(|&b| inv_s[a] == inv_t[b]).collect())
        .collect();
    // Assign most constrained elements first.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&a| candidates[a].len());

    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    if iso_search(s, t, &order, &candidates, 0, &mut map, &mut used) {
        Some(map)
    } else {
        None
    }
}

fn iso_search(
    s: &Semigroup,
    t: &Semigroup,
    order: &[usize],
    candidates: &[Vec<usize>],
    depth: usize,
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    if depth == order.len() {
        return true;
    }
    let a = order[depth];
    for &b in &candidates[a] {
        if used[b] {
            continue;
        }
        map[a] = b;
        used[b] = true;
        if consistent(s, t, order, depth, map)
            && iso_search(s, t, order, candidates, depth + 1, map, used)
        {
            return true;
        }
        used[b] = false;
        map[a] = usize::MAX;
    }
    false
}

fn consistent(s: &Semigroup, t: &Semigroup, order: &[usize], depth: usize, map: &[usize]) -> bool {
    // Pairs involving the new element, and pairs whose product it is.
    let a = order[depth];
    let placed = &order[..=depth];
    for &x in placed {
        for (p, q) in [(a, x), (x, a)] {
            let img = map[s.mul(p, q)];
            if img != usize::MAX && img != t.mul(map[p], map[q]) {
                return false;
            }
        }
    }
    for &x in placed {
        for &y in placed {
            if s.mul(x, y) == a && map[a] != t.mul(map[x], map[y]) {
                return false;
            }
        }
    }
    true
}

/// Checks that `map` is an isomorphism `S -> T`.
pub fn is_isomorphism(s: &Semigroup, t: &Semigroup, map: &[usize]) -> bool {
    let n = s.order();
    if t.order() != n || map.len() != n {
        return false;
    }
    let mut seen = vec![false; n];
    for &m in map {
        if m >= n || seen[m] {
            return false;
        }
        seen[m] = true;
    }
    (0..n).all(|a| (0..n).all(|b| map[s.mul(a, b)] == t.mul(map[a], map[b])))
}
