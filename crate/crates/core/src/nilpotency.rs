//! Malcev nilpotency.
//!
//! For `x, y` in `S` and multipliers `w_1, w_2, ...` in `S^1` the sequences
//! `λ_0 = x, ρ_0 = y, λ_{k+1} = λ_k w_{k+1} ρ_k, ρ_{k+1} = ρ_k w_{k+1} λ_k`
//! are interleaved products. `S` is nilpotent of class `c` when `c` is the
//! least integer with `λ_c = ρ_c` for every choice of arguments.
//!
//! Two routes are implemented. The class is computed by iterating the set
//! `P_k` of all reachable pairs `(λ_k, ρ_k)`, which is a descending chain.
//! The decision with certificate is a cycle search in the [`PairGraph`]: a
//! finite semigroup fails to be nilpotent exactly when some off-diagonal pair
//! returns to itself, and the edge labels around such a cycle form the
//! witness.

use std::collections::VecDeque;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::semigroup::Semigroup;

/// Which multipliers are allowed in the recursion.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Multipliers {
    /// Multipliers range over `S^1` (the definition used throughout).
    #[default]
    Monoid,
    /// Multipliers range over `S` only, as in Malcev's original definition.
    /// Diagnostic only.
    SemigroupOnly,
}

/// A non-nilpotency certificate: `x != y` with `λ_m(x, y, ws) = x` and
/// `ρ_m(x, y, ws) = y`.
///
/// Entries of `ws` index `S^1`: values below `order` are elements of `S` and
/// the value `order` stands for the adjoined identity when `S` has none.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Witness {
    pub x: usize,
    pub y: usize,
    pub ws: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NilpotencyResult {
    Nilpotent { class: usize },
    NonNilpotent { witness: Witness },
}

impl NilpotencyResult {
    pub fn is_nilpotent(&self) -> bool {
        matches!(self, NilpotencyResult::Nilpotent { .. })
    }

    pub fn class(&self) -> Option<usize> {
        match self {
            NilpotencyResult::Nilpotent { class } => Some(*class),
            NilpotencyResult::NonNilpotent { .. } => None,
        }
    }

    pub fn witness(&self) -> Option<&Witness> {
        match self {
            NilpotencyResult::NonNilpotent { witness } => Some(witness),
            NilpotencyResult::Nilpotent { .. } => None,
        }
    }
}

/// Size of `S^1`.
pub fn monoid_order(s: &Semigroup) -> usize {
    s.order() + usize::from(s.identity().is_none())
}

/// Index in `S^1` of its identity.
pub fn monoid_identity(s: &Semigroup) -> usize {
    s.identity().unwrap_or(s.order())
}

/// `a * w * b` with `w` ranging over `S^1`.
#[inline]
fn sandwich(s: &Semigroup, a: usize, w: usize, b: usize) -> usize {
    if w == s.order() {
        s.mul(a, b)
    } else {
        s.mul(s.mul(a, w), b)
    }
}

/// Evaluates `(λ_m, ρ_m)` for the multipliers `ws` (indices into `S^1`).
pub fn lambda_rho(s: &Semigroup, x: usize, y: usize, ws: &[usize]) -> Result<(usize, usize)> {
    let n = s.order();
    let m1 = monoid_order(s);
    for &v in [x, y].iter() {
        if v >= n {
            return Err(Error::IndexOutOfRange(v));
        }
    }
    if let Some(&bad) = ws.iter().find(|&&w| w >= m1) {
        return Err(Error::IndexOutOfRange(bad));
    }
    let (mut lam, mut rho) = (x, y);
    for &w in ws {
        let next = (sandwich(s, lam, w, rho), sandwich(s, rho, w, lam));
        lam = next.0;
        rho = next.1;
    }
    Ok((lam, rho))
}

/// True iff `w` certifies that `S` is not nilpotent.
pub fn verify_witness(s: &Semigroup, w: &Witness) -> bool {
    if w.x == w.y || w.ws.is_empty() {
        return false;
    }
    matches!(lambda_rho(s, w.x, w.y, &w.ws), Ok((l, r)) if l == w.x && r == w.y)
}

/// The directed graph on ordered pairs of elements with an edge
/// `(x, y) --w--> (xwy, ywx)` for every multiplier `w`.
pub struct PairGraph<'a> {
    s: &'a Semigroup,
    /// Multipliers in witness order: the identity of `S^1` first.
    labels: Vec<usize>,
}

impl<'a> PairGraph<'a> {
    pub fn new(s: &'a Semigroup) -> Self {
        Self::with_multipliers(s, Multipliers::Monoid)
    }

    pub fn with_multipliers(s: &'a Semigroup, mode: Multipliers) -> Self {
        let n = s.order();
        let mut labels = Vec::with_capacity(n + 1);
        match (mode, s.identity()) {
            (_, Some(e)) => {
                labels.push(e);
                labels.extend((0..n).filter(|&a| a != e));
            }
            (Multipliers::Monoid, None) => {
                labels.push(n);
                labels.extend(0..n);
            }
            (Multipliers::SemigroupOnly, None) => labels.extend(0..n),
        }
        PairGraph { s, labels }
    }

    pub fn node_count(&self) -> usize {
        self.s.order() * self.s.order()
    }

    pub fn out_degree(&self) -> usize {
        self.labels.len()
    }

    /// Edge labels, in the order used for tie-breaking witnesses.
    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    #[inline]
    pub fn node(&self, x: usize, y: usize) -> usize {
        x * self.s.order() + y
    }

    #[inline]
    pub fn pair(&self, node: usize) -> (usize, usize) {
        (node / self.s.order(), node % self.s.order())
    }

    #[inline]
    pub fn is_diagonal(&self, node: usize) -> bool {
        let (x, y) = self.pair(node);
        x == y
    }

    /// Target of the edge labelled `w` (a multiplier index) out of `node`.
    #[inline]
    pub fn successor(&self, node: usize, w: usize) -> usize {
        let (x, y) = self.pair(node);
        self.node(sandwich(self.s, x, w, y), sandwich(self.s, y, w, x))
    }

    /// One application of the λ/ρ step to a set of off-diagonal pairs,
    /// keeping only off-diagonal images.
    fn step_off_diagonal(&self, cur: &[usize], mark: &mut FixedBitSet) -> Vec<usize> {
        mark.clear();
        let mut next = Vec::new();
        for &p in cur {
            for &w in &self.labels {
                let q = self.successor(p, w);
                if !self.is_diagonal(q) && !mark.put(q) {
                    next.push(q);
                }
            }
        }
        next
    }

    /// Strongly connected components of the off-diagonal subgraph that
    /// contain a cycle (size > 1, or a self-loop).
    pub fn cyclic_components(&self) -> Vec<Vec<usize>> {
        let total = self.node_count();
        let off: Vec<usize> = (0..total).filter(|&v| !self.is_diagonal(v)).collect();
        let comps = tarjan(total, &off, |v, out| {
            out.clear();
            for &w in &self.labels {
                let q = self.successor(v, w);
                if !self.is_diagonal(q) {
                    out.push(q);
                }
            }
        });
        comps
            .into_iter()
            .filter(|c| {
                c.len() > 1 || self.labels.iter().any(|&w| self.successor(c[0], w) == c[0])
            })
            .collect()
    }
}

/// Iterative Tarjan over an implicit graph restricted to `vertices`.
fn tarjan(
    total: usize,
    vertices: &[usize],
    mut succ: impl FnMut(usize, &mut Vec<usize>),
) -> Vec<Vec<usize>> {
    const UNSEEN: usize = usize::MAX;
    let mut index = vec![UNSEEN; total];
    let mut low = vec![0usize; total];
    let mut on_stack = vec![false; total];
    let mut stack = Vec::new();
    let mut comps = Vec::new();
    let mut counter = 0;
    // Frame: (vertex, successors, position)
    let mut frames: Vec<(usize, Vec<usize>, usize)> = Vec::new();

    for &root in vertices {
        if index[root] != UNSEEN {
            continue;
        }
        let mut out = Vec::new();
        succ(root, &mut out);
        index[root] = counter;
        low[root] = counter;
        counter += 1;
        stack.push(root);
        on_stack[root] = true;
        frames.push((root, out, 0));

        while let Some(frame) = frames.last_mut() {
            let v = frame.0;
            if frame.2 < frame.1.len() {
                let u = frame.1[frame.2];
                frame.2 += 1;
                if index[u] == UNSEEN {
                    let mut out = Vec::new();
                    succ(u, &mut out);
                    index[u] = counter;
                    low[u] = counter;
                    counter += 1;
                    stack.push(u);
                    on_stack[u] = true;
                    frames.push((u, out, 0));
                } else if on_stack[u] {
                    low[v] = low[v].min(index[u]);
                }
            } else {
                frames.pop();
                if let Some(parent) = frames.last() {
                    let p = parent.0;
                    low[p] = low[p].min(low[v]);
                }
                if low[v] == index[v] {
                    let mut comp = Vec::new();
                    loop {
                        let u = stack.pop().expect("tarjan stack underflow");
                        on_stack[u] = false;
                        comp.push(u);
                        if u == v {
                            break;
                        }
                    }
                    comp.sort_unstable();
                    comps.push(comp);
                }
            }
        }
    }
    comps
}

/// Nilpotency class, or `None` when `S` is not nilpotent.
pub fn nilpotency_class(s: &Semigroup) -> Option<usize> {
    nilpotency_class_with(s, Multipliers::Monoid)
}

pub fn nilpotency_class_with(s: &Semigroup, mode: Multipliers) -> Option<usize> {
    let g = PairGraph::with_multipliers(s, mode);
    let mut cur: Vec<usize> = (0..g.node_count()).filter(|&v| !g.is_diagonal(v)).collect();
    let mut mark = FixedBitSet::with_capacity(g.node_count());
    let mut k = 0;
    loop {
        if cur.is_empty() {
            return Some(k);
        }
        let next = g.step_off_diagonal(&cur, &mut mark);
        // The chain P_0 ⊇ P_1 ⊇ ... is descending, so equal size means the
        // limit has been reached.
        if next.len() == cur.len() {
            return None;
        }
        cur = next;
        k += 1;
    }
}

pub fn is_nilpotent(s: &Semigroup) -> bool {
    nilpotency_class(s).is_some()
}

/// Off-diagonal part of `P_k`, the set of pairs `(λ_k, ρ_k)` over all
/// arguments, as sorted `(x, y)` pairs.
pub fn reachable_pairs(s: &Semigroup, k: usize) -> Vec<(usize, usize)> {
    let g = PairGraph::new(s);
    let mut cur: Vec<usize> = (0..g.node_count()).filter(|&v| !g.is_diagonal(v)).collect();
    let mut mark = FixedBitSet::with_capacity(g.node_count());
    for _ in 0..k {
        cur = g.step_off_diagonal(&cur, &mut mark);
    }
    cur.sort_unstable();
    cur.into_iter().map(|v| g.pair(v)).collect()
}

/// Decides nilpotency, returning the class or a witness.
pub fn decide_nilpotent(s: &Semigroup) -> NilpotencyResult {
    decide_nilpotent_with(s, Multipliers::Monoid)
}

pub fn decide_nilpotent_with(s: &Semigroup, mode: Multipliers) -> NilpotencyResult {
    let g = PairGraph::with_multipliers(s, mode);
    let comps = g.cyclic_components();
    if comps.is_empty() {
        let class = nilpotency_class_with(s, mode)
            .expect("acyclic off-diagonal pair graph but the pair chain does not reach the diagonal");
        return NilpotencyResult::Nilpotent { class };
    }
    let witness = least_witness(&g, &comps);
    debug_assert!(verify_witness(s, &witness));
    NilpotencyResult::NonNilpotent { witness }
}

/// The least witness ordered by cycle length, then label sequence (identity
/// first), then `(x, y)`.
fn least_witness(g: &PairGraph<'_>, comps: &[Vec<usize>]) -> Witness {
    let total = g.node_count();
    let mut local = vec![usize::MAX; total];
    // (length, ranks, node, labels)
    let mut best: Option<(usize, Vec<usize>, usize, Vec<usize>)> = None;

    for comp in comps {
        for (k, &v) in comp.iter().enumerate() {
            local[v] = k;
        }
        let size = comp.len();
        let deg = g.out_degree();
        // forward[k * deg + r] = local index of target, or MAX if outside
        let mut forward = vec![usize::MAX; size * deg];
        let mut reverse: Vec<Vec<usize>> = vec![Vec::new(); size];
        for (k, &v) in comp.iter().enumerate() {
            for (r, &w) in g.labels().iter().enumerate() {
                let q = g.successor(v, w);
                let lq = local[q];
                if lq != usize::MAX {
                    forward[k * deg + r] = lq;
                    reverse[lq].push(k);
                }
            }
        }
        let mut dist = vec![usize::MAX; size];
        let mut queue = VecDeque::new();
        for target in 0..size {
            // distance from every node to `target`
            dist.iter_mut().for_each(|d| *d = usize::MAX);
            dist[target] = 0;
            queue.clear();
            queue.push_back(target);
            while let Some(u) = queue.pop_front() {
                for &p in &reverse[u] {
                    if dist[p] == usize::MAX {
                        dist[p] = dist[u] + 1;
                        queue.push_back(p);
                    }
                }
            }
            let len = (0..deg)
                .filter_map(|r| {
                    let t = forward[target * deg + r];
                    (t != usize::MAX && dist[t] != usize::MAX).then(|| dist[t] + 1)
                })
                .min()
                .expect("node of a cyclic component lies on a cycle");
            if matches!(&best, Some((bl, ..)) if len > *bl) {
                continue;
            }
            let mut ranks = Vec::with_capacity(len);
            let mut cur = target;
            for step in 0..len {
                let remaining = len - step - 1;
                let r = (0..deg)
                    .find(|&r| {
                        let t = forward[cur * deg + r];
                        t != usize::MAX && dist[t] == remaining
                    })
                    .expect("greedy walk stays on a shortest cycle");
                ranks.push(r);
                cur = forward[cur * deg + r];
            }
            debug_assert_eq!(cur, target);
            let node = comp[target];
            let key = (len, ranks.clone(), node);
            let better = match &best {
                None => true,
                Some((bl, br, bn, _)) => key < (*bl, br.clone(), *bn),
            };
            if better {
                let labels = ranks.iter().map(|&r| g.labels()[r]).collect();
                best = Some((len, ranks, node, labels));
            }
        }
        for &v in comp {
            local[v] = usize::MAX;
        }
    }
    let (_, _, node, ws) = best.expect("at least one cyclic component");
    let (x, y) = g.pair(node);
    Witness { x, y, ws }
}
