//! Sorting minimal non-nilpotent semigroups into structural types.
//!
//! A minimal non-nilpotent semigroup is a minimal non-nilpotent group, a
//! two-element left or right zero band, or the union of an inverse ideal
//! `M = M^0(G, n, n; I_n)` (with `G` nilpotent) and a subsemigroup generated
//! by at most two elements. In the last case the type is read off the action
//! `Γ` of the elements outside `M` on the rows of `M`:
//!
//! * `U3`: some `Γ(u)` contains a transposition;
//! * `U4`: `Γ(x1) = (o2,o1,o3,θ)` and `Γ(x2) = (o2,o3,θ)(o1)`;
//! * `U5`: `Γ(v1)`, `Γ(v2)` cross over four distinct points.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::groups::{group_nilpotency, schmidt_report, SchmidtReport};
use crate::nilpotency::decide_nilpotent;
use crate::rees::{
    cycle_decompose, gamma_psi, has_transposition, rees_decompose, u4_pattern, u5_pattern, GammaPsi,
    ReesDecomposition, Transformation,
};
use crate::semigroup::{closure, index_period, Semigroup};
use crate::structure::{ideals, is_minimal_non_nilpotent_capped, MinimalityMode, Offender, DEFAULT_CAP};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize, serde::Deserialize)]
pub enum MnnType {
    Schmidt,
    U1,
    U2,
    U3,
    U4,
    U5,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Nilpotent { class: usize },
    NotMinimal { offenders: Vec<Offender> },
    Schmidt(SchmidtReport),
    U1,
    U2,
    /// `⟨u⟩` is cyclic of order `2^k`; `g_generators` are `Ψ(u)` at the two
    /// rows (local group indices).
    U3 {
        k: u32,
        u: usize,
        g_generators: Vec<usize>,
    },
    U4 {
        x1: usize,
        x2: usize,
        relations_checked: Vec<String>,
    },
    /// `k` holds the four crossing rows, 0-based.
    U5 { v1: usize, v2: usize, k: [usize; 4] },
}

impl Verdict {
    pub fn kind(&self) -> Option<MnnType> {
        Some(match self {
            Verdict::Schmidt(_) => MnnType::Schmidt,
            Verdict::U1 => MnnType::U1,
            Verdict::U2 => MnnType::U2,
            Verdict::U3 { .. } => MnnType::U3,
            Verdict::U4 { .. } => MnnType::U4,
            Verdict::U5 { .. } => MnnType::U5,
            Verdict::Nilpotent { .. } | Verdict::NotMinimal { .. } => return None,
        })
    }

    pub fn name(&self) -> &'static str {
        match self {
            Verdict::Nilpotent { .. } => "Nilpotent",
            Verdict::NotMinimal { .. } => "NotMinimal",
            Verdict::Schmidt(_) => "Schmidt",
            Verdict::U1 => "U1",
            Verdict::U2 => "U2",
            Verdict::U3 { .. } => "U3",
            Verdict::U4 { .. } => "U4",
            Verdict::U5 { .. } => "U5",
        }
    }
}

/// A verified structural fact, recorded for the report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Invariant {
    pub name: String,
    pub value: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub verdict: Verdict,
    /// The inverse ideal `M`, ascending.
    pub ideal: Option<Vec<usize>>,
    pub decomposition: Option<ReesDecomposition>,
    pub gamma_psi: Option<GammaPsi>,
    /// Rows of `M` that play the roles of `1, 2, ...` in the type's normal
    /// form, 0-based.
    pub relabeling: Vec<usize>,
    pub invariants: Vec<Invariant>,
}

impl Classification {
    fn bare(verdict: Verdict) -> Self {
        Classification {
            verdict,
            ideal: None,
            decomposition: None,
            gamma_psi: None,
            relabeling: Vec::new(),
            invariants: Vec::new(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClassifyOptions {
    pub mode: MinimalityMode,
    /// Classify against every qualifying inverse ideal and require the
    /// verdicts to agree.
    pub verify_all_ideals: bool,
    /// Order cap for exhaustive minimality checks.
    pub cap: usize,
}

impl Default for ClassifyOptions {
    fn default() -> Self {
        ClassifyOptions {
            mode: MinimalityMode::FourGenerator,
            verify_all_ideals: false,
            cap: DEFAULT_CAP,
        }
    }
}

pub fn classify(s: &Semigroup) -> Result<Classification> {
    classify_with(s, ClassifyOptions::default())
}

/// Nilpotency, then minimality, then the structural type.
pub fn classify_with(s: &Semigroup, opts: ClassifyOptions) -> Result<Classification> {
    if let Some(class) = decide_nilpotent(s).class() {
        return Ok(Classification::bare(Verdict::Nilpotent { class }));
    }
    let verdict = is_minimal_non_nilpotent_capped(s, opts.mode, opts.cap)?;
    if !verdict.minimal {
        return Ok(Classification::bare(Verdict::NotMinimal {
            offenders: verdict.offenders,
        }));
    }
    classify_structure(s, opts.verify_all_ideals)
}

/// Determines the type of a non-nilpotent semigroup without checking
/// minimality. Every invariant of the type found is verified; a failure is
/// reported as [`Error::TypeInvariantViolation`].
pub fn classify_structure(s: &Semigroup, verify_all_ideals: bool) -> Result<Classification> {
    if s.is_group() {
        let report = schmidt_report(s)?;
        if !report.is_schmidt {
            return Err(Error::TypeInvariantViolation(
                "group is not minimal non-nilpotent".into(),
            ));
        }
        if !report.properties_hold() {
            return Err(Error::TypeInvariantViolation(
                "minimal non-nilpotent group without the expected Sylow structure".into(),
            ));
        }
        return Ok(Classification::bare(Verdict::Schmidt(report)));
    }
    if s.order() == 2 {
        let right_zero = (0..2).all(|a| (0..2).all(|b| s.mul(a, b) == b));
        let left_zero = (0..2).all(|a| (0..2).all(|b| s.mul(a, b) == a));
        return match (right_zero, left_zero) {
            (true, _) => Ok(Classification::bare(Verdict::U1)),
            (_, true) => Ok(Classification::bare(Verdict::U2)),
            _ => Err(Error::TypeInvariantViolation(
                "two-element semigroup is neither a left nor a right zero band".into(),
            )),
        };
    }

    let candidates = inverse_ideals(s);
    let first = candidates.first().ok_or(Error::NoInverseIdeal)?;
    let result = classify_against(s, first)?;
    if verify_all_ideals {
        for dec in &candidates[1..] {
            let other = classify_against(s, dec)?;
            if other.verdict.kind() != result.verdict.kind() {
                return Err(Error::TypeInvariantViolation(format!(
                    "ideals of sizes {} and {} give different types",
                    first.members.len(),
                    dec.members.len()
                )));
            }
        }
    }
    Ok(result)
}

/// Proper ideals `M ≅ M^0(G, n, n; I_n)` with `n ≥ 2` and `G` nilpotent, by
/// size and then lexicographically.
pub fn inverse_ideals(s: &Semigroup) -> Vec<ReesDecomposition> {
    ideals(s)
        .into_iter()
        .filter(|i| i.len() < s.order())
        .filter_map(|i| rees_decompose(s, &i).ok())
        .filter(|d| {
            d.spec.with_zero
                && d.spec.rows >= 2
                && d.spec.is_identity_sandwich()
                && matches!(group_nilpotency(&d.spec.group), Ok(Some(_)))
        })
        .collect()
}

fn violation(msg: impl Into<String>) -> Error {
    Error::TypeInvariantViolation(msg.into())
}

fn require(cond: bool, msg: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(violation(msg))
    }
}

fn generates_group(group: &Semigroup, gens: &[usize]) -> bool {
    if gens.is_empty() {
        return group.order() == 1;
    }
    closure(group, gens).is_ok_and(|c| c.len() == group.order())
}

fn classify_against(s: &Semigroup, dec: &ReesDecomposition) -> Result<Classification> {
    let gp = gamma_psi(s, dec)?;
    gp.check_laws(s, &dec.spec.group)?;
    let group = &dec.spec.group;
    let n = dec.rows();
    let theta = dec.zero.expect("inverse ideal has a zero");
    let outside: Vec<usize> = (0..s.order()).filter(|&x| !dec.contains(x)).collect();
    let forms: Vec<_> = (0..s.order()).map(|x| gp.cycles(x)).collect();
    let mut inv = vec![
        Invariant {
            name: "ideal".into(),
            value: format!(
                "M0(G,{n},{n};I{n}) with |G| = {}, {} elements",
                group.order(),
                dec.members.len()
            ),
        },
        Invariant {
            name: "gamma_psi_laws".into(),
            value: "homomorphism, cocycle, support, injectivity".into(),
        },
    ];

    let pre_theta = gp.theta_preimage();
    require(pre_theta == vec![theta], "Γ^-1(θ) must be {θ}")?;
    inv.push(Invariant {
        name: "gamma_theta_preimage".into(),
        value: "1".into(),
    });

    // The part generated outside M has θ as its only possible zero.
    let check_t = |gens: &[usize], inv: &mut Vec<Invariant>| -> Result<Vec<usize>> {
        let t = closure(s, gens)?.members;
        let union: BTreeSet<usize> = t.iter().chain(dec.members.iter()).copied().collect();
        require(union.len() == s.order(), "S must be M ∪ T")?;
        let tz = t
            .iter()
            .copied()
            .find(|&z| t.iter().all(|&x| s.mul(z, x) == z && s.mul(x, z) == z));
        if let Some(z) = tz {
            require(z == theta, "the zero of T must be θ")?;
        }
        inv.push(Invariant {
            name: "s_equals_m_union_t".into(),
            value: format!("|T| = {}", t.len()),
        });
        Ok(t)
    };

    // U3: a transposition.
    if let Some(&u) = outside.iter().find(|&&u| has_transposition(&forms[u])) {
        require(n == 2, "U3 needs n = 2")?;
        let t = check_t(&[u], &mut inv)?;
        require(
            t.iter().all(|x| !dec.contains(*x)),
            "⟨u⟩ must be disjoint from M",
        )?;
        let (index, period) = index_period(s, u);
        require(index == 1 && period.is_power_of_two(), "⟨u⟩ must be a cyclic group of order 2^k")?;
        let k = period.trailing_zeros();
        let top = s.pow(u, period);
        require(s.identity() == Some(top), "u^(2^k) must be the identity of S")?;
        let identity_gamma = Transformation::identity(2);
        require(
            gp.gamma[u] == Transformation(vec![Some(1), Some(0)]) && gp.gamma[top] == identity_gamma,
            "Γ(u) = (1,2) and Γ(1) = (1)(2)",
        )?;
        let psi: Vec<usize> = gp.psi[u].iter().map(|p| p.expect("Γ(u) is a permutation")).collect();
        require(generates_group(group, &psi), "G = ⟨Ψ(u)(1), Ψ(u)(2)⟩")?;
        let prod = group.mul(psi[0], psi[1]);
        let half = if k == 0 { 1 } else { 1usize << (k - 1) };
        require(
            k >= 1 && Some(group.pow(prod, half)) == group.identity(),
            "(Ψ(u)(1) Ψ(u)(2))^(2^(k-1)) = 1",
        )?;
        inv.push(Invariant {
            name: "cyclic_order".into(),
            value: format!("2^{k}"),
        });
        inv.push(Invariant {
            name: "gamma_u".into(),
            value: forms[u].to_string(),
        });
        return Ok(Classification {
            verdict: Verdict::U3 {
                k,
                u,
                g_generators: psi,
            },
            ideal: Some(dec.members.clone()),
            decomposition: Some(dec.clone()),
            gamma_psi: Some(gp),
            relabeling: vec![0, 1],
            invariants: inv,
        });
    }

    // U4: the three-point pattern.
    let mut u4 = None;
    'outer: for &x1 in &outside {
        for &x2 in &outside {
            if let Some(o) = u4_pattern(&forms[x1], &forms[x2]) {
                let gens = closure(s, &[x1, x2])?;
                if gens.members.iter().chain(dec.members.iter()).collect::<BTreeSet<_>>().len() == s.order() {
                    u4 = Some((x1, x2, o));
                    break 'outer;
                }
            }
        }
    }
    if let Some((x1, x2, [o1, o2, o3])) = u4 {
        require(n == 3, "U4 needs n = 3")?;
        check_t(&[x1, x2], &mut inv)?;
        require(
            forms[x1].cycles.len() == 1 && forms[x1].contains_tailed(&[o2, o1, o3]),
            "Γ(x1) = (2,1,3,θ)",
        )?;
        require(
            forms[x2].cycles.len() == 2
                && forms[x2].contains_tailed(&[o2, o3])
                && forms[x2].contains_closed(&[o1]),
            "Γ(x2) = (2,3,θ)(1)",
        )?;
        let relations: [(&str, Vec<usize>); 4] = [
            ("x2 x1^2 = θ", vec![x2, x1, x1]),
            ("x1^2 x2 = θ", vec![x1, x1, x2]),
            ("x1^3 = θ", vec![x1, x1, x1]),
            ("x2 x1 x2 = θ", vec![x2, x1, x2]),
        ];
        for (name, word) in &relations {
            require(s.product(word) == theta, name)?;
        }
        let psi_gens: Vec<usize> = [gp.psi[x1][o1], gp.psi[x1][o2], gp.psi[x2][o1], gp.psi[x2][o2]]
            .into_iter()
            .flatten()
            .collect();
        require(
            generates_group(group, &psi_gens),
            "G = ⟨Ψ(x1)(1), Ψ(x1)(2), Ψ(x2)(1), Ψ(x2)(2)⟩",
        )?;
        inv.push(Invariant {
            name: "gamma_x1".into(),
            value: forms[x1].to_string(),
        });
        inv.push(Invariant {
            name: "gamma_x2".into(),
            value: forms[x2].to_string(),
        });
        return Ok(Classification {
            verdict: Verdict::U4 {
                x1,
                x2,
                relations_checked: relations.iter().map(|(r, _)| r.to_string()).collect(),
            },
            ideal: Some(dec.members.clone()),
            decomposition: Some(dec.clone()),
            gamma_psi: Some(gp),
            relabeling: vec![o1, o2, o3],
            invariants: inv,
        });
    }

    // U5: four crossing points.
    let mut u5 = None;
    'outer5: for &v1 in &outside {
        for &v2 in &outside {
            if let Some(k) = u5_pattern(&gp.gamma[v1], &gp.gamma[v2]) {
                let gens = closure(s, &[v1, v2])?;
                if gens.members.iter().chain(dec.members.iter()).collect::<BTreeSet<_>>().len() == s.order() {
                    u5 = Some((v1, v2, k));
                    break 'outer5;
                }
            }
        }
    }
    let Some((v1, v2, k)) = u5 else {
        return Err(violation(
            "no transposition, three-point or four-point pattern outside M",
        ));
    };
    let t = check_t(&[v1, v2], &mut inv)?;
    let psi_gens: Vec<usize> = gp.psi[v1].iter().chain(gp.psi[v2].iter()).flatten().copied().collect();
    require(
        generates_group(group, &psi_gens),
        "G is generated by the values of Ψ(v1) and Ψ(v2)",
    )?;
    let scan: BTreeSet<usize> = t.iter().chain(outside.iter()).copied().collect();
    require(
        scan.iter().all(|&x| !has_transposition(&forms[x])),
        "no transposition in Γ(⟨v1, v2⟩ ∪ (S \\ M))",
    )?;
    let t_forms: Vec<_> = t.iter().map(|&x| cycle_decompose(&gp.gamma[x]).unwrap()).collect();
    let no_u4 = t_forms
        .iter()
        .all(|a| t_forms.iter().all(|b| u4_pattern(a, b).is_none()));
    require(no_u4, "no three-point pattern in Γ(⟨v1, v2⟩)")?;
    inv.push(Invariant {
        name: "gamma_v1".into(),
        value: forms[v1].to_string(),
    });
    inv.push(Invariant {
        name: "gamma_v2".into(),
        value: forms[v2].to_string(),
    });
    Ok(Classification {
        verdict: Verdict::U5 { v1, v2, k },
        ideal: Some(dec.members.clone()),
        decomposition: Some(dec.clone()),
        gamma_psi: Some(gp),
        relabeling: k.to_vec(),
        invariants: inv,
    })
}

/// The image `Γ(S)` as a semigroup of transformations under composition,
/// with the surjection `S -> Γ(S)`. Transformations appear in order of
/// their first preimage and are labelled by cycle notation.
pub fn minimal_image(s: &Semigroup, dec: &ReesDecomposition) -> Result<(Semigroup, Vec<usize>)> {
    let gp = gamma_psi(s, dec)?;
    let mut distinct: Vec<Transformation> = Vec::new();
    let mut map = Vec::with_capacity(s.order());
    for t in &gp.gamma {
        let k = match distinct.iter().position(|d| d == t) {
            Some(k) => k,
            None => {
                distinct.push(t.clone());
                distinct.len() - 1
            }
        };
        map.push(k);
    }
    let labels: Vec<String> = distinct
        .iter()
        .map(|t| cycle_decompose(t).map(|c| c.to_string()))
        .collect::<Result<_>>()?;
    let m = distinct.len();
    let mut flat = Vec::with_capacity(m * m);
    for a in &distinct {
        for b in &distinct {
            let c = a.after(b);
            let k = distinct
                .iter()
                .position(|d| *d == c)
                .ok_or(Error::GammaNotHomomorphism(0, 0))?;
            flat.push(k);
        }
    }
    Ok((Semigroup::from_flat(labels, flat)?, map))
}
