//! Exhaustive enumeration of semigroups of small order.
//!
//! Tables are filled cell by cell in row-major order. Each new cell is
//! checked against every associativity triple it completes, and a branch is
//! abandoned as soon as some relabelling (optionally combined with
//! transposition) is known to produce a lexicographically smaller table. The
//! survivors are exactly the lexicographically least tables of their
//! classes.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::classify::{classify_structure, Classification};
use crate::error::{Error, Result};
use crate::nilpotency::decide_nilpotent;
use crate::semigroup::{letter_labels, Semigroup};
use crate::structure::{is_minimal_non_nilpotent_capped, MinimalityMode};

pub const MAX_ORDER: usize = 7;

const UNSET: u8 = u8::MAX;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Modulo {
    Iso,
    IsoAntiIso,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Filter {
    All,
    MinimalNonNilpotent,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CensusConfig {
    pub order: usize,
    pub modulo: Modulo,
    pub shards: usize,
    pub filter: Filter,
}

impl CensusConfig {
    pub fn new(order: usize, modulo: Modulo) -> Self {
        CensusConfig {
            order,
            modulo,
            shards: 1,
            filter: Filter::All,
        }
    }

    fn check(&self) -> Result<()> {
        if self.order == 0 {
            return Err(Error::BadParameter("order must be positive".into()));
        }
        if self.order > MAX_ORDER {
            return Err(Error::CapExceeded {
                order: self.order,
                cap: MAX_ORDER,
            });
        }
        if self.shards == 0 {
            return Err(Error::BadParameter("shards must be positive".into()));
        }
        Ok(())
    }
}

#[derive(Clone, Copy)]
struct Relabel {
    p: [u8; MAX_ORDER],
    q: [u8; MAX_ORDER],
    transpose: bool,
}

fn permutations(n: usize) -> Vec<[u8; MAX_ORDER]> {
    let mut out = Vec::new();
    let mut cur: Vec<u8> = (0..n as u8).collect();
    fn rec(k: usize, cur: &mut Vec<u8>, out: &mut Vec<[u8; MAX_ORDER]>) {
        if k == cur.len() {
            let mut a = [0u8; MAX_ORDER];
            a[..cur.len()].copy_from_slice(cur);
            out.push(a);
            return;
        }
        for i in k..cur.len() {
            cur.swap(k, i);
            rec(k + 1, cur, out);
            cur.swap(k, i);
        }
    }
    rec(0, &mut cur, &mut out);
    out
}

/// Live relabelling and the first cell where it has not yet been compared.
type Live = (u16, u16);

struct Search<'a> {
    n: usize,
    relabels: &'a [Relabel],
    table: Vec<u8>,
}

enum Advance {
    Prune,
    Keep(Vec<Live>),
}

impl Search<'_> {
    #[inline]
    fn at(&self, x: u8, y: u8) -> u8 {
        self.table[x as usize * self.n + y as usize]
    }

    /// Checks every associativity triple that the cell `(a, b) = v`
    /// completes.
    fn assoc_ok(&self, a: u8, b: u8, v: u8) -> bool {
        let n = self.n as u8;
        for z in 0..n {
            // (ab)z = a(bz)
            let (l, bz) = (self.at(v, z), self.at(b, z));
            if l != UNSET && bz != UNSET {
                let r = self.at(a, bz);
                if r != UNSET && l != r {
                    return false;
                }
            }
        }
        for x in 0..n {
            // (xa)b = x(ab)
            let (xa, r) = (self.at(x, a), self.at(x, v));
            if xa != UNSET && r != UNSET {
                let l = self.at(xa, b);
                if l != UNSET && l != r {
                    return false;
                }
            }
        }
        for x in 0..n {
            for y in 0..n {
                // (xy)b with xy = a
                if self.at(x, y) == a {
                    let yb = self.at(y, b);
                    if yb != UNSET {
                        let r = self.at(x, yb);
                        if r != UNSET && r != v {
                            return false;
                        }
                    }
                }
                // a(xy) with xy = b
                if self.at(x, y) == b {
                    let ax = self.at(a, x);
                    if ax != UNSET {
                        let l = self.at(ax, y);
                        if l != UNSET && l != v {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// Compares each live relabelled table against the current one as far
    /// as both are known.
    fn advance(&self, live: &[Live]) -> Advance {
        let n = self.n;
        let cells = n * n;
        let mut out = Vec::with_capacity(live.len());
        for &(k, pos) in live {
            let r = &self.relabels[k as usize];
            let mut c = pos as usize;
            loop {
                if c == cells {
                    break;
                }
                let (i, j) = (c / n, c % n);
                let (x, y) = if r.transpose {
                    (r.q[j], r.q[i])
                } else {
                    (r.q[i], r.q[j])
                };
                let t = self.at(x, y);
                let cur = self.table[c];
                if t == UNSET || cur == UNSET {
                    out.push((k, c as u16));
                    break;
                }
                let pv = r.p[t as usize];
                if pv < cur {
                    return Advance::Prune;
                }
                if pv > cur {
                    break;
                }
                c += 1;
            }
        }
        Advance::Keep(out)
    }

    fn run(&mut self, depth: usize, stop: usize, live: &[Live], emit: &mut dyn FnMut(&[u8], &[Live])) {
        if depth == stop {
            emit(&self.table, live);
            return;
        }
        let n = self.n;
        let (a, b) = ((depth / n) as u8, (depth % n) as u8);
        for v in 0..n as u8 {
            self.table[depth] = v;
            if self.assoc_ok(a, b, v) {
                if let Advance::Keep(next) = self.advance(live) {
                    self.run(depth + 1, stop, &next, emit);
                }
            }
        }
        self.table[depth] = UNSET;
    }
}

fn relabels(n: usize, modulo: Modulo) -> Vec<Relabel> {
    let mut out = Vec::new();
    for p in permutations(n) {
        let mut q = [0u8; MAX_ORDER];
        for i in 0..n {
            q[p[i] as usize] = i as u8;
        }
        let identity = (0..n).all(|i| p[i] as usize == i);
        if !identity {
            out.push(Relabel { p, q, transpose: false });
        }
        if modulo == Modulo::IsoAntiIso {
            out.push(Relabel { p, q, transpose: true });
        }
    }
    out
}

/// Canonical tables (flat, row-major) of all semigroups of the given order,
/// sorted.
pub fn canonical_tables(cfg: &CensusConfig) -> Result<Vec<Vec<u8>>> {
    cfg.check()?;
    let n = cfg.order;
    let rel = relabels(n, cfg.modulo);
    let all_live: Vec<Live> = (0..rel.len() as u16).map(|k| (k, 0)).collect();

    // Split after the first row.
    let split = n.min(n * n);
    let mut prefixes: Vec<(Vec<u8>, Vec<Live>)> = Vec::new();
    {
        let mut s = Search {
            n,
            relabels: &rel,
            table: vec![UNSET; n * n],
        };
        s.run(0, split, &all_live, &mut |t, l| prefixes.push((t.to_vec(), l.to_vec())));
    }
    let mut buckets: Vec<Vec<(Vec<u8>, Vec<Live>)>> = vec![Vec::new(); cfg.shards];
    for (k, p) in prefixes.into_iter().enumerate() {
        buckets[k % cfg.shards].push(p);
    }
    let mut tables: Vec<Vec<u8>> = buckets
        .into_par_iter()
        .flat_map_iter(|bucket| {
            let mut found = Vec::new();
            for (table, live) in bucket {
                let mut s = Search {
                    n,
                    relabels: &rel,
                    table,
                };
                s.run(split, n * n, &live, &mut |t, _| found.push(t.to_vec()));
            }
            found
        })
        .collect();
    tables.sort_unstable();
    Ok(tables)
}

fn to_semigroup(n: usize, t: &[u8]) -> Semigroup {
    Semigroup::from_flat(letter_labels(n), t.iter().map(|&v| v as usize).collect())
        .expect("census tables are associative")
}

/// One semigroup per class, in canonical order.
pub fn enumerate_semigroups(cfg: &CensusConfig) -> Result<Vec<Semigroup>> {
    let n = cfg.order;
    Ok(canonical_tables(cfg)?
        .iter()
        .map(|t| to_semigroup(n, t))
        .collect())
}

pub fn count_semigroups(order: usize, modulo: Modulo) -> Result<usize> {
    canonical_tables(&CensusConfig::new(order, modulo)).map(|t| t.len())
}

/// The minimal non-nilpotent classes of the given order with their types.
pub fn find_minimal_non_nilpotent(cfg: &CensusConfig) -> Result<Vec<(Semigroup, Classification)>> {
    let all = enumerate_semigroups(cfg)?;
    let found: Vec<Result<Option<(Semigroup, Classification)>>> = all
        .into_par_iter()
        .map(|s| {
            if decide_nilpotent(&s).is_nilpotent() {
                return Ok(None);
            }
            let v = is_minimal_non_nilpotent_capped(&s, MinimalityMode::Exhaustive, MAX_ORDER)?;
            if !v.minimal {
                return Ok(None);
            }
            let c = classify_structure(&s, true)?;
            Ok(Some((s, c)))
        })
        .collect();
    found.into_iter().filter_map(|r| r.transpose()).collect()
}

/// Runs the census with the configured filter.
pub fn run(cfg: &CensusConfig) -> Result<Vec<(Semigroup, Option<Classification>)>> {
    match cfg.filter {
        Filter::All => Ok(enumerate_semigroups(cfg)?.into_iter().map(|s| (s, None)).collect()),
        Filter::MinimalNonNilpotent => Ok(find_minimal_non_nilpotent(cfg)?
            .into_iter()
            .map(|(s, c)| (s, Some(c)))
            .collect()),
    }
}
