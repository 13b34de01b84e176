use super::{cycle_decompose, CycleForm, ReesCoord, ReesDecomposition, Transformation};
use crate::error::{Error, Result};
use crate::semigroup::Semigroup;

/// The action of `S` on the rows of an inverse ideal `M^0(G, n, n; I_n)`:
/// `s (1;i,j) = (Ψ(s)(i); Γ(s)(i), j)`, or θ when `Γ(s)(i) = θ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaPsi {
    pub degree: usize,
    /// Per element of `S`.
    pub gamma: Vec<Transformation>,
    /// Per element of `S`, local group indices.
    pub psi: Vec<Vec<Option<usize>>>,
}

impl GammaPsi {
    pub fn cycles(&self, s: usize) -> CycleForm {
        cycle_decompose(&self.gamma[s]).expect("checked injective")
    }

    /// Elements whose transformation is constant θ.
    pub fn theta_preimage(&self) -> Vec<usize> {
        (0..self.gamma.len())
            .filter(|&s| self.gamma[s].is_constant_theta())
            .collect()
    }

    /// Checks injectivity, support equality, the homomorphism law and the
    /// cocycle law over all pairs.
    pub fn check_laws(&self, s: &Semigroup, group: &Semigroup) -> Result<()> {
        let n = s.order();
        for a in 0..n {
            if !self.gamma[a].is_injective_off_theta() {
                return Err(Error::NotInjectiveOffTheta);
            }
            let support_ok = (0..self.degree)
                .all(|i| self.gamma[a].apply(i).is_some() == self.psi[a][i].is_some());
            if !support_ok {
                return Err(Error::SupportMismatch(a));
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = s.mul(a, b);
                if self.gamma[ab] != self.gamma[a].after(&self.gamma[b]) {
                    return Err(Error::GammaNotHomomorphism(a, b));
                }
                for i in 0..self.degree {
                    let rhs = self.gamma[b]
                        .apply(i)
                        .and_then(|k| self.psi[a][k])
                        .zip(self.psi[b][i])
                        .map(|(x, y)| group.mul(x, y));
                    if self.psi[ab][i] != rhs {
                        return Err(Error::CocycleViolation(a, b, i));
                    }
                }
            }
        }
        Ok(())
    }
}

/// Γ and Ψ for every element of `S`, read off products with `(1; i, j)`.
/// Columns 0 and 1 are both used; any disagreement is `IllDefined`.
pub fn gamma_psi(s: &Semigroup, dec: &ReesDecomposition) -> Result<GammaPsi> {
    if !dec.spec.with_zero || !dec.spec.is_identity_sandwich() {
        return Err(Error::BadParameter(
            "the ideal must be of the form M^0(G, n, n; I_n)".into(),
        ));
    }
    let n = dec.rows();
    let one = dec.spec.group.identity().expect("group identity");
    let columns: Vec<usize> = (0..n.min(2)).collect();
    let mut gamma = Vec::with_capacity(s.order());
    let mut psi = Vec::with_capacity(s.order());
    for a in 0..s.order() {
        let mut t = vec![None; n];
        let mut p = vec![None; n];
        for i in 0..n {
            let mut seen: Option<Option<(usize, usize)>> = None;
            for &j in &columns {
                let x = s.mul(a, dec.element(ReesCoord { g: one, i, j }));
                let got = match dec.coord(x) {
                    None if Some(x) == dec.zero => None,
                    None => return Err(Error::IllDefined { element: a, point: i }),
                    Some(c) if c.j == j => Some((c.g, c.i)),
                    Some(_) => return Err(Error::IllDefined { element: a, point: i }),
                };
                match seen {
                    None => seen = Some(got),
                    Some(prev) if prev != got => {
                        return Err(Error::IllDefined { element: a, point: i })
                    }
                    _ => {}
                }
            }
            if let Some(Some((g, i2))) = seen {
                t[i] = Some(i2);
                p[i] = Some(g);
            }
        }
        gamma.push(Transformation(t));
        psi.push(p);
    }
    Ok(GammaPsi {
        degree: n,
        gamma,
        psi,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::cyclic;
    use crate::rees::{build_rees, rees_decompose, ReesSpec};

    #[test]
    fn rees_elements_act_as_in_the_reference_identities() {
        let (s, _) = build_rees(&ReesSpec::inverse(cyclic(2), 3)).unwrap();
        let all: Vec<usize> = (0..s.order()).collect();
        let dec = rees_decompose(&s, &all).unwrap();
        let gp = gamma_psi(&s, &dec).unwrap();
        gp.check_laws(&s, &dec.spec.group).unwrap();
        for x in dec.members.iter().copied().filter(|&x| Some(x) != dec.zero) {
            let c = dec.coord(x).unwrap();
            let form = gp.cycles(x);
            if c.i == c.j {
                assert!(form.contains_closed(&[c.i]));
                assert_eq!(form.cycles.len(), 1);
            } else {
                assert!(form.contains_tailed(&[c.j, c.i]));
                assert_eq!(form.cycles.len(), 1);
            }
            assert_eq!(gp.psi[x][c.j], Some(c.g));
        }
        assert_eq!(gp.theta_preimage(), vec![dec.zero.unwrap()]);
    }
}
