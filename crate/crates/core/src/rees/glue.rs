use super::{ReesCoord, ReesSpec, Transformation};
use crate::error::{Error, Result};
use crate::semigroup::Semigroup;

/// Data for `M^0(G, n, n; I_n) ∪ T`, where `T` acts on the rows of `M`
/// through `gamma_t` and `psi_t` and the zeros of `M` and `T` are
/// identified.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GlueSpec {
    pub m_spec: ReesSpec,
    pub t: Semigroup,
    pub gamma_t: Vec<Transformation>,
    /// Local group indices of `m_spec.group`.
    pub psi_t: Vec<Vec<Option<usize>>>,
}

impl GlueSpec {
    fn m_nonzero(&self) -> usize {
        let n = self.m_spec.rows;
        n * n * self.m_spec.group.order()
    }

    /// Size of the glued semigroup.
    pub fn size(&self) -> usize {
        self.m_nonzero() + self.t.order()
    }

    /// Index of θ in the glued semigroup.
    pub fn theta(&self) -> usize {
        self.size() - 1
    }

    /// Index of an element of `T` in the glued semigroup; `T`'s zero goes to
    /// θ.
    pub fn t_position(&self, x: usize) -> usize {
        match self.t.zero() {
            Some(z) if z == x => self.theta(),
            Some(z) => self.m_nonzero() + x - usize::from(x > z),
            None => self.m_nonzero() + x,
        }
    }

    /// Index of `(g; i, j)` in the glued semigroup.
    pub fn m_position(&self, c: ReesCoord) -> usize {
        self.m_spec.index(c)
    }

    pub fn check(&self) -> Result<()> {
        let spec = &self.m_spec;
        spec.check()?;
        if !spec.with_zero || !spec.is_identity_sandwich() {
            return Err(Error::BadParameter(
                "the ideal part must be M^0(G, n, n; I_n)".into(),
            ));
        }
        let n = spec.rows;
        let g = &spec.group;
        let t = &self.t;
        let tz = t.zero().ok_or(Error::MissingZero)?;
        if self.gamma_t.len() != t.order() || self.psi_t.len() != t.order() {
            return Err(Error::BadShape("gamma and psi need one entry per element of T".into()));
        }
        if self.gamma_t.iter().any(|x| x.degree() != n) || self.psi_t.iter().any(|x| x.len() != n) {
            return Err(Error::BadShape(format!("gamma and psi must act on {n} points")));
        }
        if let Some(&bad) = self.psi_t.iter().flatten().flatten().find(|&&x| x >= g.order()) {
            return Err(Error::IndexOutOfRange(bad));
        }
        if self.gamma_t.iter().flat_map(|x| x.0.iter()).flatten().any(|&p| p >= n) {
            return Err(Error::BadShape("gamma image out of range".into()));
        }
        if !self.gamma_t[tz].is_constant_theta() {
            return Err(Error::BadParameter("gamma of the zero of T must be θ".into()));
        }
        if (0..t.order()).any(|x| x != tz && self.gamma_t[x].is_constant_theta()) {
            return Err(Error::BadParameter(
                "only the zero of T may act as the constant θ map".into(),
            ));
        }
        for x in 0..t.order() {
            if !self.gamma_t[x].is_injective_off_theta() {
                return Err(Error::NotInjectiveOffTheta);
            }
            if (0..n).any(|i| self.gamma_t[x].apply(i).is_some() != self.psi_t[x][i].is_some()) {
                return Err(Error::SupportMismatch(x));
            }
        }
        for a in 0..t.order() {
            for b in 0..t.order() {
                let ab = t.mul(a, b);
                if self.gamma_t[ab] != self.gamma_t[a].after(&self.gamma_t[b]) {
                    return Err(Error::GammaNotHomomorphism(a, b));
                }
                for i in 0..n {
                    let rhs = self.gamma_t[b]
                        .apply(i)
                        .and_then(|k| self.psi_t[a][k])
                        .zip(self.psi_t[b][i])
                        .map(|(x, y)| g.mul(x, y));
                    if self.psi_t[ab][i] != rhs {
                        return Err(Error::CocycleViolation(a, b, i));
                    }
                }
            }
        }
        Ok(())
    }
}

/// The θ-disjoint union: elements of `M` (in Rees order), then the nonzero
/// elements of `T`, then θ. `T` acts by
/// `t (g;i,j) = (Ψ(t)(i) g; Γ(t)(i), j)` and
/// `(g;i,j) t = (g Ψ(t)(j'); i, j')` where `Γ(t)(j') = j`.
pub fn glued_union(gs: &GlueSpec) -> Result<Semigroup> {
    gs.check()?;
    let spec = &gs.m_spec;
    let g = &spec.group;
    let t = &gs.t;
    let tz = t.zero().unwrap();
    let size = gs.size();
    let theta = gs.theta();
    let mcount = size - t.order();

    // Element kinds: Left(coord) for M, Right(t) for nonzero T, θ.
    #[derive(Clone, Copy)]
    enum Kind {
        M(ReesCoord),
        T(usize),
        Theta,
    }
    let mut kinds = Vec::with_capacity(size);
    for x in 0..mcount {
        kinds.push(Kind::M(spec.coord(x).unwrap()));
    }
    for x in (0..t.order()).filter(|&x| x != tz) {
        kinds.push(Kind::T(x));
    }
    kinds.push(Kind::Theta);

    let mut labels: Vec<String> = Vec::with_capacity(size);
    for k in &kinds {
        labels.push(match *k {
            Kind::M(c) => spec.coord_label(c),
            Kind::T(x) => t.label(x).to_string(),
            Kind::Theta => "θ".to_string(),
        });
    }

    let mul = |a: Kind, b: Kind| -> usize {
        match (a, b) {
            (Kind::Theta, _) | (_, Kind::Theta) => theta,
            (Kind::M(x), Kind::M(y)) => {
                if x.j == y.i {
                    spec.index(ReesCoord {
                        g: g.mul(x.g, y.g),
                        i: x.i,
                        j: y.j,
                    })
                } else {
                    theta
                }
            }
            (Kind::T(s), Kind::M(y)) => match (gs.gamma_t[s].apply(y.i), gs.psi_t[s][y.i]) {
                (Some(i2), Some(h)) => spec.index(ReesCoord {
                    g: g.mul(h, y.g),
                    i: i2,
                    j: y.j,
                }),
                _ => theta,
            },
            (Kind::M(x), Kind::T(s)) => match gs.gamma_t[s].preimage(x.j) {
                Some(j2) => spec.index(ReesCoord {
                    g: g.mul(x.g, gs.psi_t[s][j2].unwrap()),
                    i: x.i,
                    j: j2,
                }),
                None => theta,
            },
            (Kind::T(s), Kind::T(u)) => gs.t_position(t.mul(s, u)),
        }
    };
    let flat = (0..size * size)
        .map(|c| mul(kinds[c / size], kinds[c % size]))
        .collect();
    Semigroup::from_flat(labels, flat).map_err(|e| match e {
        Error::NonAssociative(a, b, c) => Error::NonAssociativeResult((a, b, c)),
        other => other,
    })
}
