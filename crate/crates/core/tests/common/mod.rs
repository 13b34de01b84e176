//! Independent oracles shared by the integration tests. Nothing here calls
//! the pair graph or the library's closure code.

#![allow(dead_code)]

use std::collections::BTreeSet;

use nilpotentia::Semigroup;
use rand::seq::SliceRandom;
use rand::Rng;

/// `P_0 = S × S`, `P_{k+1} = {(a w b, b w a) : (a, b) ∈ P_k, w ∈ S^1}`.
/// Returns the sets until the chain stabilizes.
pub fn pair_chain(s: &Semigroup) -> Vec<BTreeSet<(usize, usize)>> {
    let n = s.order();
    let mut cur: BTreeSet<(usize, usize)> = (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).collect();
    let mut chain = vec![cur.clone()];
    loop {
        let mut next = BTreeSet::new();
        for &(a, b) in &cur {
            // w = adjoined identity
            next.insert((s.mul(a, b), s.mul(b, a)));
            for w in 0..n {
                next.insert((s.mul(s.mul(a, w), b), s.mul(s.mul(b, w), a)));
            }
        }
        if next == cur {
            return chain;
        }
        chain.push(next.clone());
        cur = next;
    }
}

pub fn diagonal(p: &BTreeSet<(usize, usize)>) -> bool {
    p.iter().all(|&(a, b)| a == b)
}

/// Nilpotency class by brute force, `None` when not nilpotent.
pub fn class_oracle(s: &Semigroup) -> Option<usize> {
    pair_chain(s).iter().position(diagonal)
}

/// Replays `λ/ρ` with multipliers in `S^1` (index `order` is the adjoined
/// identity unless `S` has one).
pub fn replay(s: &Semigroup, x: usize, y: usize, ws: &[usize]) -> (usize, usize) {
    let n = s.order();
    let act = |a: usize, w: usize, b: usize| {
        if w >= n {
            s.mul(a, b)
        } else {
            s.mul(s.mul(a, w), b)
        }
    };
    let (mut l, mut r) = (x, y);
    for &w in ws {
        let (l2, r2) = (act(l, w, r), act(r, w, l));
        l = l2;
        r = r2;
    }
    (l, r)
}

fn consistent(t: &[Option<usize>], n: usize) -> bool {
    for a in 0..n {
        for b in 0..n {
            let Some(ab) = t[a * n + b] else { continue };
            for c in 0..n {
                let Some(bc) = t[b * n + c] else { continue };
                if let (Some(l), Some(r)) = (t[ab * n + c], t[a * n + bc]) {
                    if l != r {
                        return false;
                    }
                }
            }
        }
    }
    true
}

fn fill(
    t: &mut Vec<Option<usize>>,
    n: usize,
    cell: usize,
    allowed: &dyn Fn(usize, usize) -> Vec<usize>,
    rng: &mut impl Rng,
    budget: &mut usize,
) -> bool {
    if cell == n * n {
        return true;
    }
    if *budget == 0 {
        return false;
    }
    *budget -= 1;
    let mut values = allowed(cell / n, cell % n);
    values.shuffle(rng);
    for v in values {
        t[cell] = Some(v);
        if consistent(t, n) && fill(t, n, cell + 1, allowed, rng, budget) {
            return true;
        }
    }
    t[cell] = None;
    false
}

fn sample(n: usize, allowed: &dyn Fn(usize, usize) -> Vec<usize>, rng: &mut impl Rng) -> Semigroup {
    loop {
        let mut t = vec![None; n * n];
        let mut budget = 20_000;
        if fill(&mut t, n, 0, allowed, rng, &mut budget) {
            let flat = t.into_iter().map(Option::unwrap).collect();
            let labels = (0..n).map(|k| format!("s{k}")).collect();
            return Semigroup::from_flat(labels, flat).expect("sampler keeps associativity");
        }
    }
}

/// A random associative table of order `n`: cells are filled in random
/// order of values and rejected as soon as a completed triple fails.
pub fn random_semigroup(n: usize, rng: &mut impl Rng) -> Semigroup {
    sample(n, &|_, _| (0..n).collect(), rng)
}

/// A random nilpotent table: products only climb, so every long product
/// lands in the absorbing top element.
pub fn random_climbing(n: usize, rng: &mut impl Rng) -> Semigroup {
    sample(n, &|a, b| (a.max(b) + 1..n).chain([n - 1]).collect::<BTreeSet<_>>().into_iter().collect(), rng)
}

/// Members closed under the multiplication.
pub fn is_closed(s: &Semigroup, members: &[usize]) -> bool {
    let set: BTreeSet<usize> = members.iter().copied().collect();
    members
        .iter()
        .all(|&a| members.iter().all(|&b| set.contains(&s.mul(a, b))))
}

pub fn labels_of(s: &Semigroup, xs: &[usize]) -> BTreeSet<String> {
    xs.iter().map(|&x| s.label(x).to_string()).collect()
}
