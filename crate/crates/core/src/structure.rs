//! Ideals, Rees quotients, subsemigroup enumeration and the certificate for
//! minimal non-nilpotency.

use std::collections::{BTreeSet, HashSet};

use fixedbitset::FixedBitSet;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::nilpotency::{decide_nilpotent, is_nilpotent, monoid_identity, verify_witness, Witness};
use crate::semigroup::{close_bits, Semigroup, SubsetClosure};

/// Default order cap for exhaustive subsemigroup enumeration.
pub const DEFAULT_CAP: usize = 12;

/// Bound on the number of generators in the fast minimality check.
pub const GENERATOR_BOUND: usize = 4;

fn to_bits(n: usize, xs: &[usize]) -> FixedBitSet {
    let mut b = FixedBitSet::with_capacity(n);
    for &x in xs {
        b.insert(x);
    }
    b
}

/// All two-sided ideals, by size and then lexicographically.
pub fn ideals(s: &Semigroup) -> Vec<Vec<usize>> {
    let n = s.order();
    let mut principal: Vec<FixedBitSet> = Vec::with_capacity(n);
    for x in 0..n {
        let mut b = to_bits(n, &[x]);
        for a in 0..n {
            b.insert(s.mul(a, x));
            b.insert(s.mul(x, a));
            for c in 0..n {
                b.insert(s.product(&[a, x, c]));
            }
        }
        principal.push(b);
    }
    let mut found: HashSet<FixedBitSet> = HashSet::new();
    let mut list: Vec<FixedBitSet> = Vec::new();
    for p in principal {
        let mut fresh = Vec::new();
        if !found.contains(&p) {
            fresh.push(p.clone());
        }
        for r in &list {
            let mut u = r.clone();
            u.union_with(&p);
            if !found.contains(&u) {
                fresh.push(u);
            }
        }
        for f in fresh {
            if found.insert(f.clone()) {
                list.push(f);
            }
        }
    }
    let mut out: Vec<Vec<usize>> = list.into_iter().map(|b| b.ones().collect()).collect();
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

pub fn is_ideal(s: &Semigroup, set: &[usize]) -> bool {
    let b = to_bits(s.order(), set);
    !set.is_empty()
        && set
            .iter()
            .all(|&x| (0..s.order()).all(|a| b.contains(s.mul(a, x)) && b.contains(s.mul(x, a))))
}

/// `S / I` together with the map from elements of `S` to the quotient.
/// Elements of `S \ I` keep their order and θ comes last.
pub fn rees_quotient_map(s: &Semigroup, ideal: &[usize]) -> Result<(Semigroup, Vec<usize>)> {
    if let Some(&bad) = ideal.iter().find(|&&x| x >= s.order()) {
        return Err(Error::IndexOutOfRange(bad));
    }
    if !is_ideal(s, ideal) {
        return Err(Error::NotAnIdeal);
    }
    let n = s.order();
    let b = to_bits(n, ideal);
    let outside: Vec<usize> = (0..n).filter(|&x| !b.contains(x)).collect();
    let theta = outside.len();
    let mut map = vec![theta; n];
    for (k, &x) in outside.iter().enumerate() {
        map[x] = k;
    }
    let mut labels: Vec<String> = outside.iter().map(|&x| s.label(x).to_string()).collect();
    let mut zero_label = String::from("θ");
    while labels.contains(&zero_label) {
        zero_label.push('\'');
    }
    labels.push(zero_label);
    let m = theta + 1;
    let flat = (0..m * m)
        .map(|c| {
            let (a, b) = (c / m, c % m);
            if a == theta || b == theta {
                theta
            } else {
                map[s.mul(outside[a], outside[b])]
            }
        })
        .collect();
    Ok((Semigroup::from_flat(labels, flat)?, map))
}

pub fn rees_quotient(s: &Semigroup, ideal: &[usize]) -> Result<Semigroup> {
    rees_quotient_map(s, ideal).map(|(q, _)| q)
}

struct Found {
    members: FixedBitSet,
    generators: Vec<usize>,
    /// Every one-element extension is all of `S`.
    maximal: bool,
}

/// Closures of all generator sets of size at most `max_gens` (unbounded
/// when `None`), found level by level: the closures at level `k + 1` are
/// `⟨C ∪ {a}⟩` for the closures `C` first found at level `k`.
fn enumerate_closures(s: &Semigroup, max_gens: Option<usize>) -> Vec<Found> {
    let n = s.order();
    let empty = FixedBitSet::with_capacity(n);
    let mut seen: HashSet<FixedBitSet> = HashSet::new();
    let mut all: Vec<Found> = Vec::new();
    let mut frontier: Vec<usize> = Vec::new();
    for a in 0..n {
        let c = close_bits(s, &empty, &[a]);
        if seen.insert(c.clone()) {
            frontier.push(all.len());
            all.push(Found {
                members: c,
                generators: vec![a],
                maximal: false,
            });
        }
    }
    let mut level = 1;
    while !frontier.is_empty() {
        let expand = max_gens.is_none_or(|m| level < m);
        if !expand {
            break;
        }
        let extended: Vec<Vec<(usize, FixedBitSet)>> = frontier
            .par_iter()
            .map(|&k| {
                let base = &all[k].members;
                (0..n)
                    .filter(|&a| !base.contains(a))
                    .map(|a| (a, close_bits(s, base, &[a])))
                    .collect()
            })
            .collect();
        let mut next = Vec::new();
        for (&k, exts) in frontier.iter().zip(extended) {
            all[k].maximal = exts.iter().all(|(_, c)| c.count_ones(..) == n);
            for (a, c) in exts {
                if seen.insert(c.clone()) {
                    let mut generators = all[k].generators.clone();
                    generators.push(a);
                    generators.sort_unstable();
                    next.push(all.len());
                    all.push(Found {
                        members: c,
                        generators,
                        maximal: false,
                    });
                }
            }
        }
        frontier = next;
        level += 1;
    }
    all
}

fn sorted_closures(found: Vec<Found>) -> Vec<SubsetClosure> {
    let mut out: Vec<SubsetClosure> = found
        .into_iter()
        .map(|f| SubsetClosure {
            generators: f.generators,
            members: f.members.ones().collect(),
        })
        .collect();
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.members.cmp(&b.members)));
    out
}

/// `{⟨X⟩ : 1 ≤ |X| ≤ max_gens}`, one entry per member set, by size and then
/// lexicographically.
pub fn subsemigroups_generated(s: &Semigroup, max_gens: usize) -> Vec<SubsetClosure> {
    if max_gens == 0 {
        return Vec::new();
    }
    sorted_closures(enumerate_closures(s, Some(max_gens)))
}

/// Every subsemigroup, for orders up to [`DEFAULT_CAP`].
pub fn all_subsemigroups(s: &Semigroup) -> Result<Vec<SubsetClosure>> {
    all_subsemigroups_capped(s, DEFAULT_CAP)
}

pub fn all_subsemigroups_capped(s: &Semigroup, cap: usize) -> Result<Vec<SubsetClosure>> {
    if s.order() > cap {
        return Err(Error::CapExceeded {
            order: s.order(),
            cap,
        });
    }
    Ok(sorted_closures(enumerate_closures(s, None)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum MinimalityMode {
    /// Proper subsemigroups generated by at most four elements.
    FourGenerator,
    /// Every proper subsemigroup; bounded by an order cap.
    Exhaustive,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Offender {
    /// A proper subsemigroup that is not nilpotent. The witness uses indices
    /// of `S^1` and replays in `S`.
    Subsemigroup {
        generators: Vec<usize>,
        members: Vec<usize>,
        witness: Witness,
    },
    /// An ideal with `|I| > 1` whose Rees quotient is not nilpotent. The
    /// witness uses indices of the quotient as built by
    /// [`rees_quotient_map`].
    Quotient { ideal: Vec<usize>, witness: Witness },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MnnVerdict {
    pub minimal: bool,
    pub witness: Option<Witness>,
    pub offenders: Vec<Offender>,
    pub mode: MinimalityMode,
}

/// Non-nilpotency witness for a subsemigroup, translated to indices of
/// `S^1`. The adjoined identity of the subsemigroup acts like that of `S`.
fn subset_witness(s: &Semigroup, members: &[usize]) -> Option<Witness> {
    let sub = s.restrict(members);
    let w = decide_nilpotent(&sub).witness()?.clone();
    let one = monoid_identity(s);
    let lift = |k: usize| if k == members.len() { one } else { members[k] };
    Some(Witness {
        x: lift(w.x),
        y: lift(w.y),
        ws: w.ws.iter().map(|&k| lift(k)).collect(),
    })
}

/// Decides minimal non-nilpotency with an explicit cap for exhaustive
/// mode.
pub fn is_minimal_non_nilpotent_capped(
    s: &Semigroup,
    mode: MinimalityMode,
    cap: usize,
) -> Result<MnnVerdict> {
    let n = s.order();
    if mode == MinimalityMode::Exhaustive && n > cap {
        return Err(Error::CapExceeded { order: n, cap });
    }
    let witness = decide_nilpotent(s).witness().cloned();
    if witness.is_none() {
        return Ok(MnnVerdict {
            minimal: false,
            witness: None,
            offenders: Vec::new(),
            mode,
        });
    }

    let mut offenders = Vec::new();
    for ideal in ideals(s) {
        if ideal.len() < 2 || ideal.len() == n {
            continue;
        }
        let (q, _) = rees_quotient_map(s, &ideal)?;
        if let Some(w) = decide_nilpotent(&q).witness() {
            offenders.push(Offender::Quotient {
                ideal,
                witness: w.clone(),
            });
        }
    }

    let max_gens = match mode {
        MinimalityMode::FourGenerator => Some(GENERATOR_BOUND),
        MinimalityMode::Exhaustive => None,
    };
    let found = enumerate_closures(s, max_gens);
    let proper: Vec<&Found> = found
        .iter()
        .filter(|f| f.members.count_ones(..) < n)
        .collect();
    // A non-nilpotent subsemigroup makes every larger one non-nilpotent, so
    // it suffices to test the closures that cannot be extended inside the
    // family while staying proper.
    let last_level = |f: &Found| max_gens.is_some_and(|m| f.generators.len() >= m);
    let any_bad = proper
        .par_iter()
        .filter(|f| f.maximal || last_level(f))
        .any(|f| {
            let members: Vec<usize> = f.members.ones().collect();
            !is_nilpotent(&s.restrict(&members))
        });
    if any_bad {
        // Report the inclusion-minimal non-nilpotent members of the family.
        let bad: Vec<(Vec<usize>, Vec<usize>)> = proper
            .par_iter()
            .filter_map(|f| {
                let members: Vec<usize> = f.members.ones().collect();
                (!is_nilpotent(&s.restrict(&members))).then(|| (f.generators.clone(), members))
            })
            .collect();
        let sets: Vec<BTreeSet<usize>> = bad.iter().map(|(_, m)| m.iter().copied().collect()).collect();
        let mut minimal_bad: Vec<(Vec<usize>, Vec<usize>)> = bad
            .iter()
            .enumerate()
            .filter(|(k, _)| {
                !sets
                    .iter()
                    .enumerate()
                    .any(|(o, other)| o != *k && other.len() < sets[*k].len() && other.is_subset(&sets[*k]))
            })
            .map(|(_, b)| b.clone())
            .collect();
        minimal_bad.sort_by(|a, b| a.1.len().cmp(&b.1.len()).then_with(|| a.1.cmp(&b.1)));
        for (generators, members) in minimal_bad {
            let witness = subset_witness(s, &members).expect("non-nilpotent subsemigroup");
            debug_assert!(verify_witness(s, &witness));
            offenders.push(Offender::Subsemigroup {
                generators,
                members,
                witness,
            });
        }
    }

    Ok(MnnVerdict {
        minimal: offenders.is_empty(),
        witness,
        offenders,
        mode,
    })
}

pub fn is_minimal_non_nilpotent(s: &Semigroup, mode: MinimalityMode) -> Result<MnnVerdict> {
    is_minimal_non_nilpotent_capped(s, mode, DEFAULT_CAP)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroup::letter_labels;

    fn u1() -> Semigroup {
        Semigroup::new(vec!["e".into(), "f".into()], vec![vec![0, 1], vec![0, 1]]).unwrap()
    }

    fn null2() -> Semigroup {
        Semigroup::new(vec!["a".into(), "θ".into()], vec![vec![1, 1], vec![1, 1]]).unwrap()
    }

    fn cyclic(n: usize) -> Semigroup {
        Semigroup::from_fn(letter_labels(n), |a, b| (a + b) % n).unwrap()
    }

    #[test]
    fn ideals_of_small_cases() {
        assert_eq!(ideals(&null2()), vec![vec![1], vec![0, 1]]);
        assert_eq!(ideals(&u1()), vec![vec![0, 1]]);
    }

    #[test]
    fn quotients() {
        let s = null2();
        let q = rees_quotient(&s, &[0, 1]).unwrap();
        assert_eq!(q.order(), 1);
        let q = rees_quotient(&s, &[1]).unwrap();
        assert_eq!(q.order(), 2);
        assert_eq!(rees_quotient(&s, &[0]).unwrap_err(), Error::NotAnIdeal);
    }

    #[test]
    fn closures() {
        let got: Vec<Vec<usize>> = subsemigroups_generated(&u1(), 1).into_iter().map(|c| c.members).collect();
        assert_eq!(got, vec![vec![0], vec![1]]);
        let got: Vec<Vec<usize>> = subsemigroups_generated(&cyclic(4), 1).into_iter().map(|c| c.members).collect();
        assert_eq!(got, vec![vec![0], vec![0, 2], vec![0, 1, 2, 3]]);
        let got: Vec<Vec<usize>> = all_subsemigroups(&u1()).unwrap().into_iter().map(|c| c.members).collect();
        assert_eq!(got, vec![vec![0], vec![1], vec![0, 1]]);
        let got: Vec<Vec<usize>> = all_subsemigroups(&null2()).unwrap().into_iter().map(|c| c.members).collect();
        assert_eq!(got, vec![vec![1], vec![0, 1]]);
        let big = cyclic(13);
        assert!(matches!(all_subsemigroups(&big), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn minimality_of_u1_and_c2() {
        let v = is_minimal_non_nilpotent(&u1(), MinimalityMode::Exhaustive).unwrap();
        assert!(v.minimal);
        let v = is_minimal_non_nilpotent(&cyclic(2), MinimalityMode::FourGenerator).unwrap();
        assert!(!v.minimal);
        assert!(v.witness.is_none());
    }
}
