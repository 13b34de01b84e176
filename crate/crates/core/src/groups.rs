//! Group-theoretic oracles: lower central series, subgroup sweeps, Sylow and
//! Frattini subgroups, and the report on minimal non-nilpotent groups.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::semigroup::{closure, Semigroup};
use crate::structure::all_subsemigroups_capped;

/// Largest group order the subgroup sweeps accept.
pub const SUBGROUP_CAP: usize = 24;

/// Nilpotency class of a group by its lower central series, `None` when the
/// series stalls above the trivial subgroup.
pub fn group_nilpotency(g: &Semigroup) -> Result<Option<usize>> {
    if !g.is_group() {
        return Err(Error::NotAGroup);
    }
    let series = lower_central_series(g)?;
    let last = series.last().expect("series starts at G");
    Ok((last.len() == 1).then(|| series.len() - 1))
}

/// `γ_1 = G, γ_{k+1} = [γ_k, G]` until it stabilizes. Each term is a sorted
/// member list.
pub fn lower_central_series(g: &Semigroup) -> Result<Vec<Vec<usize>>> {
    if !g.is_group() {
        return Err(Error::NotAGroup);
    }
    let mut series = vec![(0..g.order()).collect::<Vec<_>>()];
    loop {
        let cur = series.last().unwrap();
        if cur.len() == 1 {
            return Ok(series);
        }
        let mut comms = BTreeSet::new();
        for &a in cur {
            for b in 0..g.order() {
                comms.insert(commutator(g, a, b));
            }
        }
        let gens: Vec<usize> = comms.into_iter().collect();
        let next = closure(g, &gens)?.members;
        if next.len() == cur.len() {
            return Ok(series);
        }
        series.push(next);
    }
}

/// `a^-1 b^-1 a b`.
pub fn commutator(g: &Semigroup, a: usize, b: usize) -> usize {
    let ai = g.inverse(a).expect("group element");
    let bi = g.inverse(b).expect("group element");
    g.product(&[ai, bi, a, b])
}

pub fn center(g: &Semigroup) -> Vec<usize> {
    (0..g.order())
        .filter(|&a| (0..g.order()).all(|b| g.mul(a, b) == g.mul(b, a)))
        .collect()
}

/// All subgroups of a finite group, as sorted member lists, ordered by size
/// and then lexicographically.
pub fn subgroups(g: &Semigroup) -> Result<Vec<Vec<usize>>> {
    if !g.is_group() {
        return Err(Error::NotAGroup);
    }
    let mut subs: Vec<Vec<usize>> = all_subsemigroups_capped(g, SUBGROUP_CAP)?
        .into_iter()
        .map(|c| c.members)
        .collect();
    subs.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    Ok(subs)
}

fn prime_factors(mut n: usize) -> BTreeMap<usize, usize> {
    let mut out = BTreeMap::new();
    let mut p = 2;
    while p * p <= n {
        while n.is_multiple_of(p) {
            *out.entry(p).or_insert(0) += 1;
            n /= p;
        }
        p += 1;
    }
    if n > 1 {
        *out.entry(n).or_insert(0) += 1;
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SchmidtReport {
    pub is_group: bool,
    pub nonnilpotent: bool,
    /// `(p, a, q, b)` with `|G| = p^a q^b`, `p` the prime with a normal
    /// Sylow subgroup when there is one.
    pub order_pq: Option<(usize, usize, usize, usize)>,
    pub normal_sylow_p: bool,
    pub cyclic_sylow_q: bool,
    pub frattini_central: bool,
    pub two_generated: bool,
    pub all_proper_subgroups_nilpotent: bool,
    pub is_schmidt: bool,
}

impl SchmidtReport {
    /// Whether the four structural properties of a minimal non-nilpotent
    /// group all hold.
    pub fn properties_hold(&self) -> bool {
        self.order_pq.is_some()
            && self.normal_sylow_p
            && self.cyclic_sylow_q
            && self.frattini_central
            && self.two_generated
    }
}

pub fn schmidt_report(g: &Semigroup) -> Result<SchmidtReport> {
    if !g.is_group() {
        return Err(Error::NotAGroup);
    }
    let order = g.order();
    if order > SUBGROUP_CAP {
        return Err(Error::CapExceeded {
            order,
            cap: SUBGROUP_CAP,
        });
    }
    let nonnilpotent = group_nilpotency(g)?.is_none();
    let subs = subgroups(g)?;
    let subgroup_nilpotent = |members: &Vec<usize>| -> bool {
        let h = g.restrict(members);
        matches!(group_nilpotency(&h), Ok(Some(_)))
    };
    let all_proper_subgroups_nilpotent = subs
        .iter()
        .filter(|h| h.len() < order)
        .all(subgroup_nilpotent);

    let sylows = |p: usize, k: usize| -> Vec<&Vec<usize>> {
        let size = p.pow(k as u32);
        subs.iter().filter(|h| h.len() == size).collect()
    };
    let factors = prime_factors(order);
    let z: BTreeSet<usize> = center(g).into_iter().collect();

    let frattini_central = factors.iter().all(|(&p, &k)| {
        sylows(p, k).into_iter().all(|sy| {
            frattini(&subs, sy).iter().all(|x| z.contains(x))
        })
    });

    let mut order_pq = None;
    let mut normal_sylow_p = false;
    let mut cyclic_sylow_q = false;
    if factors.len() == 2 {
        let primes: Vec<(usize, usize)> = factors.iter().map(|(&p, &k)| (p, k)).collect();
        let normal = |(p, k): (usize, usize)| sylows(p, k).len() == 1;
        let (first, second) = if !normal(primes[0]) && normal(primes[1]) {
            (primes[1], primes[0])
        } else {
            (primes[0], primes[1])
        };
        order_pq = Some((first.0, first.1, second.0, second.1));
        normal_sylow_p = normal(first);
        cyclic_sylow_q = sylows(second.0, second.1)
            .into_iter()
            .all(|sy| sy.iter().any(|&x| closure(g, &[x]).is_ok_and(|c| c.len() == sy.len())));
    }

    let two_generated = (0..order).any(|a| {
        (a..order).any(|b| closure(g, &[a, b]).is_ok_and(|c| c.len() == order))
    });

    Ok(SchmidtReport {
        is_group: true,
        nonnilpotent,
        order_pq,
        normal_sylow_p,
        cyclic_sylow_q,
        frattini_central,
        two_generated,
        all_proper_subgroups_nilpotent,
        is_schmidt: nonnilpotent && all_proper_subgroups_nilpotent,
    })
}

/// Intersection of the maximal subgroups of `h` (given as one of `subs`).
fn frattini(subs: &[Vec<usize>], h: &[usize]) -> Vec<usize> {
    let hs: BTreeSet<usize> = h.iter().copied().collect();
    let inside: Vec<BTreeSet<usize>> = subs
        .iter()
        .filter(|k| k.len() < h.len() && k.iter().all(|x| hs.contains(x)))
        .map(|k| k.iter().copied().collect())
        .collect();
    let maximal: Vec<&BTreeSet<usize>> = inside
        .iter()
        .filter(|k| !inside.iter().any(|o| o.len() > k.len() && k.is_subset(o)))
        .collect();
    let mut out = hs;
    for m in maximal {
        out = out.intersection(m).copied().collect();
    }
    out.into_iter().collect()
}

// Constructors.

pub fn trivial_group() -> Semigroup {
    Semigroup::new(vec!["1".into()], vec![vec![0]]).expect("trivial group")
}

/// `C_n` on labels `1, g, g^2, ...`.
pub fn cyclic(n: usize) -> Semigroup {
    assert!(n >= 1);
    let labels = (0..n)
        .map(|k| match k {
            0 => "1".to_string(),
            1 => "g".to_string(),
            _ => format!("g^{k}"),
        })
        .collect();
    Semigroup::from_fn(labels, |a, b| (a + b) % n).expect("cyclic group")
}

pub fn direct_product(a: &Semigroup, b: &Semigroup) -> Semigroup {
    let (na, nb) = (a.order(), b.order());
    let labels = (0..na * nb)
        .map(|k| format!("({},{})", a.label(k / nb), b.label(k % nb)))
        .collect();
    let flat = (0..na * nb * na * nb)
        .map(|c| {
            let (x, y) = (c / (na * nb), c % (na * nb));
            a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb)
        })
        .collect();
    Semigroup::from_flat(labels, flat).expect("direct product")
}

/// The group generated by permutations of `0..degree`, composed as
/// functions (`(p * q)(x) = p(q(x))`). Elements are sorted by image list,
/// so the identity comes first; labels are cycle notation with 1-based
/// points and `1` for the identity.
pub fn permutation_group(degree: usize, gens: &[Vec<usize>]) -> Semigroup {
    let id: Vec<usize> = (0..degree).collect();
    let mut elems: BTreeSet<Vec<usize>> = BTreeSet::new();
    elems.insert(id.clone());
    let mut frontier = vec![id];
    while let Some(p) = frontier.pop() {
        for g in gens {
            let q: Vec<usize> = (0..degree).map(|x| g[p[x]]).collect();
            if elems.insert(q.clone()) {
                frontier.push(q);
            }
        }
    }
    let elems: Vec<Vec<usize>> = elems.into_iter().collect();
    let index: BTreeMap<&Vec<usize>, usize> = elems.iter().enumerate().map(|(k, p)| (p, k)).collect();
    let labels = elems.iter().map(|p| perm_label(p)).collect();
    let n = elems.len();
    let flat = (0..n * n)
        .map(|c| {
            let (p, q) = (&elems[c / n], &elems[c % n]);
            let r: Vec<usize> = (0..degree).map(|x| p[q[x]]).collect();
            index[&r]
        })
        .collect();
    Semigroup::from_flat(labels, flat).expect("permutation group")
}

fn perm_label(p: &[usize]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] == start {
            continue;
        }
        let mut cyc = vec![start + 1];
        seen[start] = true;
        let mut x = p[start];
        while x != start {
            cyc.push(x + 1);
            seen[x] = true;
            x = p[x];
        }
        let parts: Vec<String> = cyc.iter().map(|v| v.to_string()).collect();
        out.push_str(&format!("({})", parts.join(" ")));
    }
    if out.is_empty() {
        "1".into()
    } else {
        out
    }
}

/// Dihedral group of order `2k`.
pub fn dihedral(k: usize) -> Semigroup {
    assert!(k >= 3);
    let rot: Vec<usize> = (0..k).map(|x| (x + 1) % k).collect();
    let refl: Vec<usize> = (0..k).map(|x| (k - x) % k).collect();
    permutation_group(k, &[rot, refl])
}

pub fn symmetric(k: usize) -> Semigroup {
    assert!(k >= 1);
    if k == 1 {
        return trivial_group();
    }
    let cycle: Vec<usize> = (0..k).map(|x| (x + 1) % k).collect();
    let mut swap: Vec<usize> = (0..k).collect();
    swap.swap(0, 1);
    permutation_group(k, &[cycle, swap])
}

pub fn alternating4() -> Semigroup {
    permutation_group(4, &[vec![1, 2, 0, 3], vec![1, 0, 3, 2]])
}

/// The quaternion group on `1, -1, i, -i, j, -j, k, -k`.
pub fn quaternion() -> Semigroup {
    // units 1,i,j,k as 0..4; unit product (sign flip, unit)
    const UNIT: [[(bool, usize); 4]; 4] = [
        [(false, 0), (false, 1), (false, 2), (false, 3)],
        [(false, 1), (true, 0), (false, 3), (true, 2)],
        [(false, 2), (true, 3), (true, 0), (false, 1)],
        [(false, 3), (false, 2), (true, 1), (true, 0)],
    ];
    let labels = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    Semigroup::from_fn(labels, |a, b| {
        let (sa, ua) = (a % 2 == 1, a / 2);
        let (sb, ub) = (b % 2 == 1, b / 2);
        let (flip, u) = UNIT[ua][ub];
        2 * u + usize::from(sa ^ sb ^ flip)
    })
    .expect("quaternion group")
}
