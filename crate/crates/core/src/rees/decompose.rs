use fixedbitset::FixedBitSet;

use super::{ReesCoord, ReesSpec};
use crate::error::{Error, Result};
use crate::semigroup::Semigroup;

/// Rees coordinates for a completely (0-)simple ideal `M` of `S`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReesDecomposition {
    /// The ideal, ascending.
    pub members: Vec<usize>,
    pub zero: Option<usize>,
    pub spec: ReesSpec,
    /// Element of `S` for each local group index.
    pub group_elements: Vec<usize>,
    coords: Vec<Option<ReesCoord>>,
    at: Vec<usize>,
}

impl ReesDecomposition {
    /// Coordinates of an element of `S`; `None` for θ and for elements
    /// outside the ideal.
    pub fn coord(&self, x: usize) -> Option<ReesCoord> {
        self.coords[x]
    }

    /// The element of `S` with the given coordinates.
    pub fn element(&self, c: ReesCoord) -> usize {
        self.at[self.spec.index(c)]
    }

    pub fn rows(&self) -> usize {
        self.spec.rows
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    /// Map from `build_rees(&self.spec)` indices to elements of `S`.
    pub fn embedding(&self) -> Vec<usize> {
        let mut map = self.at.clone();
        if let Some(z) = self.zero {
            map.push(z);
        }
        map
    }
}

fn bits(n: usize, xs: impl IntoIterator<Item = usize>) -> FixedBitSet {
    let mut b = FixedBitSet::with_capacity(n);
    for x in xs {
        b.insert(x);
    }
    b
}

/// Recovers `M ≅ M^0(G, n, m; P)` (or `M(G, n, m; P)` when `M` has no zero)
/// for an ideal `M` of `S`. When `P` is square and monomial the coordinates
/// are chosen so that `P` is the identity matrix.
pub fn rees_decompose(s: &Semigroup, ideal: &[usize]) -> Result<ReesDecomposition> {
    let n = s.order();
    let mut members = ideal.to_vec();
    members.sort_unstable();
    members.dedup();
    if members.is_empty() {
        return Err(Error::NotAnIdeal);
    }
    if let Some(&bad) = members.iter().find(|&&x| x >= n) {
        return Err(Error::IndexOutOfRange(bad));
    }
    let mset = bits(n, members.iter().copied());
    for a in 0..n {
        for &m in &members {
            if !mset.contains(s.mul(a, m)) || !mset.contains(s.mul(m, a)) {
                return Err(Error::NotAnIdeal);
            }
        }
    }

    let zero = members
        .iter()
        .copied()
        .find(|&z| members.iter().all(|&m| s.mul(z, m) == z && s.mul(m, z) == z));
    let nonzero: Vec<usize> = members.iter().copied().filter(|&x| Some(x) != zero).collect();
    if nonzero.is_empty() {
        return Err(Error::NotCompletelyZeroSimple("ideal is {θ}".into()));
    }
    if zero.is_some() && nonzero.iter().all(|&a| nonzero.iter().all(|&b| Some(s.mul(a, b)) == zero)) {
        return Err(Error::NotCompletelyZeroSimple("M² = {θ}".into()));
    }
    for &a in &nonzero {
        let mut p = bits(n, [a]);
        for &x in &members {
            p.insert(s.mul(x, a));
            p.insert(s.mul(a, x));
            for &y in &members {
                p.insert(s.product(&[x, a, y]));
            }
        }
        if p.count_ones(..) != members.len() {
            return Err(Error::NotCompletelyZeroSimple(format!(
                "{} generates a proper ideal",
                s.label(a)
            )));
        }
    }

    // Green's R and L classes inside M, numbered by least element.
    let right = |a: usize| bits(n, std::iter::once(a).chain(members.iter().map(|&x| s.mul(a, x))));
    let left = |a: usize| bits(n, std::iter::once(a).chain(members.iter().map(|&x| s.mul(x, a))));
    let classes = |key: &dyn Fn(usize) -> FixedBitSet| -> Vec<usize> {
        let mut reps: Vec<FixedBitSet> = Vec::new();
        let mut class = vec![usize::MAX; n];
        for &a in &nonzero {
            let k = key(a);
            let idx = match reps.iter().position(|r| *r == k) {
                Some(i) => i,
                None => {
                    reps.push(k);
                    reps.len() - 1
                }
            };
            class[a] = idx;
        }
        class
    };
    let rclass = classes(&right);
    let lclass = classes(&left);
    let rows = nonzero.iter().map(|&a| rclass[a]).max().unwrap() + 1;
    let cols = nonzero.iter().map(|&a| lclass[a]).max().unwrap() + 1;

    let e = *nonzero
        .iter()
        .find(|&&a| s.mul(a, a) == a)
        .ok_or_else(|| Error::NotCompletelyZeroSimple("no nonzero idempotent".into()))?;
    let (re, le) = (rclass[e], lclass[e]);
    let group_elements: Vec<usize> = nonzero
        .iter()
        .copied()
        .filter(|&a| rclass[a] == re && lclass[a] == le)
        .collect();
    let local = |x: usize| group_elements.binary_search(&x).ok();
    let gs = group_elements.len();
    if nonzero.len() != rows * cols * gs {
        return Err(Error::ReconstructionMismatch);
    }
    let group = s.restrict(&group_elements);
    if !group.is_group() {
        return Err(Error::ReconstructionMismatch);
    }
    let inverse = |h: usize| group_elements[group.inverse(local(h).unwrap()).unwrap()];

    let pick = |row: usize, col: usize| -> Result<usize> {
        if row == re && col == le {
            return Ok(e);
        }
        nonzero
            .iter()
            .copied()
            .find(|&a| rclass[a] == row && lclass[a] == col)
            .ok_or(Error::ReconstructionMismatch)
    };
    let r: Vec<usize> = (0..rows).map(|i| pick(i, le)).collect::<Result<_>>()?;
    let mut q: Vec<usize> = (0..cols).map(|j| pick(re, j)).collect::<Result<_>>()?;

    let sandwich_of = |q: &[usize]| -> Vec<Vec<Option<usize>>> {
        q.iter()
            .map(|&qj| r.iter().map(|&ri| local(s.mul(qj, ri))).collect())
            .collect()
    };
    let mut sandwich = sandwich_of(&q);

    // Normalize a square monomial sandwich to the identity.
    let monomial = rows == cols
        && sandwich.iter().all(|row| row.iter().filter(|x| x.is_some()).count() == 1)
        && (0..rows).all(|k| sandwich.iter().filter(|row| row[k].is_some()).count() == 1);
    if monomial {
        let mut q2 = vec![usize::MAX; cols];
        for (j, row) in sandwich.iter().enumerate() {
            let k = row.iter().position(Option::is_some).unwrap();
            let p = group_elements[row[k].unwrap()];
            q2[k] = s.mul(inverse(p), q[j]);
        }
        q = q2;
        sandwich = sandwich_of(&q);
    }

    let spec = ReesSpec {
        group,
        rows,
        cols,
        sandwich,
        with_zero: zero.is_some(),
    };
    let mut coords = vec![None; n];
    let mut at = vec![usize::MAX; rows * cols * gs];
    for i in 0..rows {
        for j in 0..cols {
            for (g, &h) in group_elements.iter().enumerate() {
                let x = s.product(&[r[i], h, q[j]]);
                let c = ReesCoord { g, i, j };
                if Some(x) == zero || coords[x].is_some() {
                    return Err(Error::ReconstructionMismatch);
                }
                coords[x] = Some(c);
                at[spec.index(c)] = x;
            }
        }
    }

    // Every product must follow the Rees rule.
    for &a in &nonzero {
        let ca = coords[a].unwrap();
        for &b in &nonzero {
            let cb = coords[b].unwrap();
            let expect = match spec.sandwich[ca.j][cb.i] {
                Some(p) => Some(at[spec.index(ReesCoord {
                    g: spec.group.product(&[ca.g, p, cb.g]),
                    i: ca.i,
                    j: cb.j,
                })]),
                None => zero,
            };
            if expect != Some(s.mul(a, b)) {
                return Err(Error::ReconstructionMismatch);
            }
        }
    }

    Ok(ReesDecomposition {
        members,
        zero,
        spec,
        group_elements,
        coords,
        at,
    })
}
