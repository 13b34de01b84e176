//! Partial injections of `{1..n}` written as transformations of
//! `{1..n} ∪ {θ}`, and their disjoint cycle notation.
//!
//! A closed cycle `(i_1, ..., i_k)` is a permutation cycle (fixed points are
//! written as 1-cycles). A θ-tailed cycle `(i_1, ..., i_k, θ)` maps
//! `i_j -> i_{j+1}`, `i_k -> θ`, and nothing maps to `i_1`. Points that go to
//! θ and have no preimage, the bare `(i, θ)` tails, are not written. The
//! constant-θ map is written `θ`.

use std::fmt;

use crate::error::{Error, Result};

/// A map on `{0..n} ∪ {θ}`; `None` is θ and θ is always fixed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Transformation(pub Vec<Option<usize>>);

impl Transformation {
    pub fn constant_theta(n: usize) -> Self {
        Transformation(vec![None; n])
    }

    pub fn identity(n: usize) -> Self {
        Transformation((0..n).map(Some).collect())
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    #[inline]
    pub fn apply(&self, i: usize) -> Option<usize> {
        self.0[i]
    }

    /// `self ∘ other`: apply `other` first.
    pub fn after(&self, other: &Transformation) -> Transformation {
        Transformation(other.0.iter().map(|&p| p.and_then(|q| self.0[q])).collect())
    }

    pub fn is_constant_theta(&self) -> bool {
        self.0.iter().all(Option::is_none)
    }

    /// Injective on the points not sent to θ.
    pub fn is_injective_off_theta(&self) -> bool {
        let mut hit = vec![false; self.0.len()];
        for &p in self.0.iter().flatten() {
            if std::mem::replace(&mut hit[p], true) {
                return false;
            }
        }
        true
    }

    /// The unique preimage of `j`, for a partial injection.
    pub fn preimage(&self, j: usize) -> Option<usize> {
        self.0.iter().position(|&p| p == Some(j))
    }

    /// Parses cycle notation with 1-based points, e.g. `"(2,3,θ)(1)"`.
    pub fn parse(text: &str, n: usize) -> Result<Self> {
        CycleForm::parse(text, n).map(|c| c.to_transformation())
    }
}

impl fmt::Display for Transformation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match cycle_decompose(self) {
            Ok(c) => write!(f, "{c}"),
            Err(_) => {
                let parts: Vec<String> = self
                    .0
                    .iter()
                    .map(|p| p.map_or("θ".to_string(), |q| (q + 1).to_string()))
                    .collect();
                write!(f, "[{}]", parts.join(","))
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Cycle {
    /// 0-based points in cycle order.
    pub points: Vec<usize>,
    /// True for a θ-tailed cycle.
    pub tailed: bool,
}

/// Disjoint cycle notation of a partial injection. An empty list of cycles
/// denotes the constant-θ map.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CycleForm {
    pub degree: usize,
    pub cycles: Vec<Cycle>,
}

impl CycleForm {
    pub fn is_theta(&self) -> bool {
        self.cycles.is_empty()
    }

    pub fn contains_closed(&self, points: &[usize]) -> bool {
        self.cycles.iter().any(|c| !c.tailed && c.points == points)
    }

    pub fn contains_tailed(&self, points: &[usize]) -> bool {
        self.cycles.iter().any(|c| c.tailed && c.points == points)
    }

    /// Re-expands the notation; suppressed points go to θ.
    pub fn to_transformation(&self) -> Transformation {
        let mut t = vec![None; self.degree];
        for c in &self.cycles {
            let k = c.points.len();
            for (idx, &p) in c.points.iter().enumerate() {
                t[p] = if idx + 1 < k {
                    Some(c.points[idx + 1])
                } else if c.tailed {
                    None
                } else {
                    Some(c.points[0])
                };
            }
        }
        Transformation(t)
    }

    /// Parses notation such as `(2,1,3,θ)`, `(2,3,θ)(1)` or `θ` over
    /// `{1..n}`. `0` is accepted in place of `θ`.
    pub fn parse(text: &str, n: usize) -> Result<Self> {
        let text: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if text == "θ" || text == "0" {
            return Ok(CycleForm {
                degree: n,
                cycles: Vec::new(),
            });
        }
        let mut cycles = Vec::new();
        let mut used = vec![false; n];
        let mut rest = text.as_str();
        while !rest.is_empty() {
            let body = rest
                .strip_prefix('(')
                .and_then(|r| r.split_once(')'))
                .ok_or_else(|| Error::Parse(format!("malformed cycle notation {text:?}")))?;
            let (inner, tail) = body;
            rest = tail;
            let tokens: Vec<&str> = inner.split(',').collect();
            let tailed = matches!(tokens.last(), Some(&"θ") | Some(&"0"));
            let pts = if tailed { &tokens[..tokens.len() - 1] } else { &tokens[..] };
            if pts.is_empty() {
                return Err(Error::Parse(format!("empty cycle in {text:?}")));
            }
            let mut points = Vec::with_capacity(pts.len());
            for tok in pts {
                let p: usize = tok
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad point {tok:?} in {text:?}")))?;
                if p == 0 || p > n {
                    return Err(Error::Parse(format!("point {p} outside 1..{n}")));
                }
                if std::mem::replace(&mut used[p - 1], true) {
                    return Err(Error::Parse(format!("point {p} repeated in {text:?}")));
                }
                points.push(p - 1);
            }
            cycles.push(Cycle { points, tailed });
        }
        Ok(CycleForm { degree: n, cycles })
    }
}

impl fmt::Display for CycleForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.cycles.is_empty() {
            return write!(f, "θ");
        }
        for c in &self.cycles {
            let mut parts: Vec<String> = c.points.iter().map(|p| (p + 1).to_string()).collect();
            if c.tailed {
                parts.push("θ".into());
            }
            write!(f, "({})", parts.join(","))?;
        }
        Ok(())
    }
}

/// Writes `t` in disjoint cycle notation. Cycles are listed by first point;
/// closed cycles start at their least point.
pub fn cycle_decompose(t: &Transformation) -> Result<CycleForm> {
    if !t.is_injective_off_theta() {
        return Err(Error::NotInjectiveOffTheta);
    }
    let n = t.degree();
    let mut has_pre = vec![false; n];
    for &p in t.0.iter().flatten() {
        has_pre[p] = true;
    }
    let mut seen = vec![false; n];
    let mut cycles = Vec::new();
    // Chains start at points without a preimage.
    for start in 0..n {
        if has_pre[start] {
            continue;
        }
        let mut points = vec![start];
        seen[start] = true;
        let mut cur = start;
        while let Some(next) = t.apply(cur) {
            points.push(next);
            seen[next] = true;
            cur = next;
        }
        if points.len() > 1 {
            cycles.push(Cycle { points, tailed: true });
        }
    }
    // Whatever remains is permuted.
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut points = vec![start];
        seen[start] = true;
        let mut cur = t.apply(start).expect("remaining points are permuted");
        while cur != start {
            points.push(cur);
            seen[cur] = true;
            cur = t.apply(cur).expect("remaining points are permuted");
        }
        cycles.push(Cycle { points, tailed: false });
    }
    cycles.sort_by_key(|c| c.points[0]);
    Ok(CycleForm { degree: n, cycles })
}

/// A transposition `(l_1, l_2)` occurs in the notation.
pub fn has_transposition(c: &CycleForm) -> bool {
    c.cycles.iter().any(|cy| !cy.tailed && cy.points.len() == 2)
}

/// Distinct `(o_1, o_2, o_3)` with `(o_2, o_1, o_3, θ)` a cycle of `first`
/// and `(o_2, o_3, θ)(o_1)` cycles of `second` (0-based).
pub fn u4_pattern(first: &CycleForm, second: &CycleForm) -> Option<[usize; 3]> {
    for cy in &first.cycles {
        if !cy.tailed || cy.points.len() != 3 {
            continue;
        }
        let (o2, o1, o3) = (cy.points[0], cy.points[1], cy.points[2]);
        if second.contains_tailed(&[o2, o3]) && second.contains_closed(&[o1]) {
            return Some([o1, o2, o3]);
        }
    }
    None
}

/// Pairwise distinct `(k_1, k_2, k_3, k_4)` with `g1(k_1) = k_2`,
/// `g1(k_3) = k_4`, `g2(k_1) = k_4`, `g2(k_3) = k_2` (0-based), least in
/// lexicographic order.
pub fn u5_pattern(g1: &Transformation, g2: &Transformation) -> Option<[usize; 4]> {
    let n = g1.degree();
    for k1 in 0..n {
        let (Some(k2), Some(k4)) = (g1.apply(k1), g2.apply(k1)) else {
            continue;
        };
        if k2 == k1 || k4 == k1 || k2 == k4 {
            continue;
        }
        for k3 in 0..n {
            if k3 == k1 || k3 == k2 || k3 == k4 {
                continue;
            }
            if g1.apply(k3) == Some(k4) && g2.apply(k3) == Some(k2) {
                return Some([k1, k2, k3, k4]);
            }
        }
    }
    None
}
