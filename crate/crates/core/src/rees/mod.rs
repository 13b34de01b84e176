//! Rees matrix semigroups `M^0(G, n, m; P)`, their recovery from a
//! completely 0-simple ideal, the representation of a semigroup on the rows
//! of such an ideal, and glued unions.
//!
//! Products follow `(g;i,j)(h;k,l) = (g p_{jk} h; i,l)`, θ when `p_{jk}` is
//! θ. `P` has `cols` rows and `rows` columns and is stored as
//! `sandwich[j][k]`.

mod cycle;
mod decompose;
mod gamma;
mod glue;

pub use cycle::{cycle_decompose, has_transposition, u4_pattern, u5_pattern, Cycle, CycleForm, Transformation};
pub use decompose::{rees_decompose, ReesDecomposition};
pub use gamma::{gamma_psi, GammaPsi};
pub use glue::{glued_union, GlueSpec};

use crate::error::{Error, Result};
use crate::groups::group_nilpotency;
use crate::semigroup::Semigroup;

/// Coordinates `(g; i, j)` with 0-based row and column.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ReesCoord {
    pub g: usize,
    pub i: usize,
    pub j: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReesSpec {
    pub group: Semigroup,
    pub rows: usize,
    pub cols: usize,
    /// `cols × rows`, `None` for θ.
    pub sandwich: Vec<Vec<Option<usize>>>,
    pub with_zero: bool,
}

impl ReesSpec {
    /// `M^0(G, n, n; I_n)`.
    pub fn inverse(group: Semigroup, n: usize) -> Self {
        let one = group.identity().expect("group has an identity");
        let sandwich = (0..n)
            .map(|j| (0..n).map(|k| (j == k).then_some(one)).collect())
            .collect();
        ReesSpec {
            group,
            rows: n,
            cols: n,
            sandwich,
            with_zero: true,
        }
    }

    pub fn check(&self) -> Result<()> {
        if !self.group.is_group() {
            return Err(Error::NotAGroup);
        }
        if self.rows == 0 || self.cols == 0 {
            return Err(Error::BadShape("Rees matrix needs at least one row and column".into()));
        }
        if self.sandwich.len() != self.cols || self.sandwich.iter().any(|r| r.len() != self.rows) {
            return Err(Error::BadShape(format!(
                "sandwich must be {}×{}",
                self.cols, self.rows
            )));
        }
        let g = self.group.order();
        if let Some(&bad) = self.sandwich.iter().flatten().flatten().find(|&&x| x >= g) {
            return Err(Error::IndexOutOfRange(bad));
        }
        let row_ok = self.sandwich.iter().all(|r| r.iter().any(Option::is_some));
        let col_ok = (0..self.rows).all(|k| self.sandwich.iter().any(|r| r[k].is_some()));
        if !row_ok || !col_ok {
            return Err(Error::NotRegular);
        }
        if !self.with_zero && self.sandwich.iter().flatten().any(Option::is_none) {
            return Err(Error::NotRegular);
        }
        Ok(())
    }

    /// Number of elements of the semigroup this spec describes.
    pub fn size(&self) -> usize {
        self.rows * self.cols * self.group.order() + usize::from(self.with_zero)
    }

    /// Element index of `(g; i, j)` in `build_rees` order.
    pub fn index(&self, c: ReesCoord) -> usize {
        (c.i * self.cols + c.j) * self.group.order() + c.g
    }

    /// Index of θ in `build_rees` order.
    pub fn theta(&self) -> Option<usize> {
        self.with_zero.then(|| self.rows * self.cols * self.group.order())
    }

    /// Inverse of [`ReesSpec::index`].
    pub fn coord(&self, idx: usize) -> Option<ReesCoord> {
        let gs = self.group.order();
        if idx >= self.rows * self.cols * gs {
            return None;
        }
        Some(ReesCoord {
            g: idx % gs,
            i: idx / gs / self.cols,
            j: idx / gs % self.cols,
        })
    }

    pub fn coord_label(&self, c: ReesCoord) -> String {
        format!("({};{},{})", self.group.label(c.g), c.i + 1, c.j + 1)
    }

    /// The sandwich is square and monomial, so it normalizes to `I_n` by
    /// permuting and rescaling rows and columns.
    pub fn is_monomial(&self) -> bool {
        if self.rows != self.cols {
            return false;
        }
        let rows_single = self.sandwich.iter().all(|r| r.iter().filter(|x| x.is_some()).count() == 1);
        let cols_single =
            (0..self.rows).all(|k| self.sandwich.iter().filter(|r| r[k].is_some()).count() == 1);
        rows_single && cols_single
    }

    pub fn is_identity_sandwich(&self) -> bool {
        let one = self.group.identity();
        self.rows == self.cols
            && self
                .sandwich
                .iter()
                .enumerate()
                .all(|(j, r)| r.iter().enumerate().all(|(k, &x)| x == if j == k { one } else { None }))
    }
}

/// The Rees matrix semigroup of `spec`: elements `(g;i,j)` ordered by row,
/// then column, then group element, followed by θ when present.
pub fn build_rees(spec: &ReesSpec) -> Result<(Semigroup, Vec<Option<ReesCoord>>)> {
    spec.check()?;
    let size = spec.size();
    let coords: Vec<Option<ReesCoord>> = (0..size).map(|x| spec.coord(x)).collect();
    let labels = coords
        .iter()
        .map(|c| c.map_or_else(|| "θ".to_string(), |c| spec.coord_label(c)))
        .collect();
    let theta = spec.theta();
    let g = &spec.group;
    let flat = (0..size * size)
        .map(|c| match (coords[c / size], coords[c % size]) {
            (Some(a), Some(b)) => match spec.sandwich[a.j][b.i] {
                Some(p) => spec.index(ReesCoord {
                    g: g.product(&[a.g, p, b.g]),
                    i: a.i,
                    j: b.j,
                }),
                None => theta.expect("θ entries only with a zero"),
            },
            _ => theta.expect("θ present"),
        })
        .collect();
    let s = Semigroup::from_flat(labels, flat)?;
    Ok((s, coords))
}

/// Whether the Rees matrix semigroup is nilpotent, read off the data: the
/// matrix is square, normalizes to the identity, and `G` is nilpotent.
pub fn rees_nilpotency_criterion(spec: &ReesSpec) -> bool {
    spec.check().is_ok()
        && spec.is_monomial()
        && matches!(group_nilpotency(&spec.group), Ok(Some(_)))
}
