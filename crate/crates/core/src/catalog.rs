//! Named semigroups with their expected properties.
//!
//! The two-element bands are written down directly. The others are glued
//! unions `M^0(G, n, n; I_n) ∪ T`, where `T` is given by a frozen Cayley
//! table over normal forms and the action of each element of `T` is the
//! composite of the actions of the letters in its normal form.

use serde::{Deserialize, Serialize};

use crate::classify::MnnType;
use crate::error::{Error, Result};
use crate::groups::{cyclic, trivial_group};
use crate::rees::{glued_union, GlueSpec, ReesSpec, Transformation};
use crate::semigroup::Semigroup;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Expectation {
    Yes,
    No,
    ToBeDetermined,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Expected {
    pub nilpotent: bool,
    pub minimal: Expectation,
    pub kind: Option<MnnType>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: String,
    pub semigroup: Semigroup,
    pub expected: Expected,
    pub description: String,
    /// A non-nilpotent proper subsemigroup known in advance, by labels.
    pub expected_offender: Option<Vec<String>>,
    /// The glue data, for entries built as glued unions.
    pub glue: Option<GlueSpec>,
}

pub const NAMES: [&str; 7] = [
    "u1",
    "u2",
    "f7",
    "u3_nonminimal",
    "u4_nonminimal",
    "u5_c2",
    "y(n)",
];

/// Looks up an entry; `y5`, `y(5)` and `y_5` all name `Y_5`.
pub fn entry(name: &str) -> Result<CatalogEntry> {
    let key = name.trim().to_ascii_lowercase();
    match key.as_str() {
        "u1" => Ok(u1()),
        "u2" => Ok(u2()),
        "f7" => f7(),
        "u3_nonminimal" => u3_nonminimal(),
        "u4_nonminimal" => u4_nonminimal(),
        "u5_c2" => u5_c2(),
        _ => {
            let digits = key
                .strip_prefix('y')
                .map(|r| r.trim_matches(|c| c == '(' || c == ')' || c == '_'))
                .ok_or_else(|| Error::BadParameter(format!("unknown catalog entry {name:?}")))?;
            let n: usize = digits
                .parse()
                .map_err(|_| Error::BadParameter(format!("unknown catalog entry {name:?}")))?;
            y(n)
        }
    }
}

fn labels(xs: &[&str]) -> Vec<String> {
    xs.iter().map(|s| s.to_string()).collect()
}

pub fn u1() -> CatalogEntry {
    let s = Semigroup::new(labels(&["e", "f"]), vec![vec![0, 1], vec![0, 1]]).expect("right zero band");
    CatalogEntry {
        name: "u1".into(),
        semigroup: s,
        expected: Expected {
            nilpotent: false,
            minimal: Expectation::Yes,
            kind: Some(MnnType::U1),
        },
        description: "right zero band {e, f}: ef = f, fe = e".into(),
        expected_offender: None,
        glue: None,
    }
}

pub fn u2() -> CatalogEntry {
    let s = Semigroup::new(labels(&["e", "f"]), vec![vec![0, 0], vec![1, 1]]).expect("left zero band");
    CatalogEntry {
        name: "u2".into(),
        semigroup: s,
        expected: Expected {
            nilpotent: false,
            minimal: Expectation::Yes,
            kind: Some(MnnType::U2),
        },
        description: "left zero band {e, f}: ef = e, fe = f".into(),
        expected_offender: None,
        glue: None,
    }
}

/// `T` from normal forms over letters. `words[x]` spells element `x`
/// (empty for the zero, which must be last); `table` is the frozen product
/// on the nonzero elements with `None` for the zero. Letter actions are
/// given as `(Γ, Ψ)`.
struct TPart<'a> {
    labels: &'a [&'a str],
    words: Vec<Vec<usize>>,
    table: Vec<Vec<Option<usize>>>,
    letters: Vec<(Transformation, Vec<Option<usize>>)>,
}

fn glue_from(group: Semigroup, n: usize, part: TPart<'_>) -> Result<GlueSpec> {
    let k = part.labels.len();
    let zero = k;
    let mut names = labels(part.labels);
    names.push("θ".into());
    let flat: Vec<Vec<usize>> = (0..=k)
        .map(|a| {
            (0..=k)
                .map(|b| {
                    if a == zero || b == zero {
                        zero
                    } else {
                        part.table[a][b].unwrap_or(zero)
                    }
                })
                .collect()
        })
        .collect();
    let t = Semigroup::new(names, flat)?;
    let mut gamma_t = Vec::with_capacity(k + 1);
    let mut psi_t = Vec::with_capacity(k + 1);
    for word in &part.words {
        // act by the last letter first
        let mut g = Transformation::identity(n);
        let mut p: Vec<Option<usize>> = vec![group.identity(); n];
        for &letter in word.iter().rev() {
            let (lg, lp) = &part.letters[letter];
            p = (0..n)
                .map(|i| {
                    let mid = g.apply(i)?;
                    Some(group.mul(lp[mid]?, p[i]?))
                })
                .collect();
            g = lg.after(&g);
        }
        gamma_t.push(g);
        psi_t.push(p);
    }
    gamma_t.push(Transformation::constant_theta(n));
    psi_t.push(vec![None; n]);
    Ok(GlueSpec {
        m_spec: ReesSpec::inverse(group, n),
        t,
        gamma_t,
        psi_t,
    })
}

fn psi_identity(group: &Semigroup, t: &Transformation) -> Vec<Option<usize>> {
    t.0.iter().map(|p| p.and(group.identity())).collect()
}

fn glued_entry(
    name: &str,
    gs: GlueSpec,
    expected: Expected,
    description: &str,
    expected_offender: Option<Vec<String>>,
) -> Result<CatalogEntry> {
    let s = glued_union(&gs)?;
    Ok(CatalogEntry {
        name: name.into(),
        semigroup: s,
        expected,
        description: description.into(),
        expected_offender,
        glue: Some(gs),
    })
}

/// `M^0(G, 2, 2; I_2) ∪ {u, 1}` with `u² = 1`, `Γ(u) = (1,2)` and
/// `Ψ(u) = (g, g)`.
fn u3_shape(group: Semigroup, g: usize) -> Result<GlueSpec> {
    let swap = Transformation::parse("(1,2)", 2)?;
    glue_from(
        group,
        2,
        TPart {
            labels: &["u", "1"],
            words: vec![vec![0], vec![0, 0]],
            table: vec![vec![Some(1), Some(0)], vec![Some(0), Some(1)]],
            letters: vec![(swap, vec![Some(g), Some(g)])],
        },
    )
}

pub fn f7() -> Result<CatalogEntry> {
    let gs = u3_shape(trivial_group(), 0)?;
    glued_entry(
        "f7",
        gs,
        Expected {
            nilpotent: false,
            minimal: Expectation::ToBeDetermined,
            kind: Some(MnnType::U3),
        },
        "M0({e},2,2;I2) ∪ ⟨u | u² = 1⟩, Γ(u) = (1,2)",
        None,
    )
}

pub fn u3_nonminimal() -> Result<CatalogEntry> {
    let gs = u3_shape(cyclic(2), 1)?;
    glued_entry(
        "u3_nonminimal",
        gs,
        Expected {
            nilpotent: false,
            minimal: Expectation::No,
            kind: None,
        },
        "M0(C2,2,2;I2) ∪ ⟨u | u² = 1⟩, Γ(u) = (1,2), Ψ(u)(1) = Ψ(u)(2) = g",
        Some(labels(&["(1;1,1)", "(1;2,2)", "(g;1,2)", "(g;2,1)", "u", "1", "θ"])),
    )
}

pub fn u4_nonminimal() -> Result<CatalogEntry> {
    let group = cyclic(2);
    let gw = Transformation::parse("(2,1,3,θ)", 3)?;
    let gv = Transformation::parse("(2,3,θ)(1)", 3)?;
    let pw = psi_identity(&group, &gw);
    let pv = psi_identity(&group, &gv);
    // elements w, v, w², v², wv, vw
    let (w2, v2, wv, vw) = (Some(2), Some(3), Some(4), Some(5));
    let z = None;
    let table = vec![
        vec![w2, wv, z, wv, z, w2],
        vec![vw, v2, z, v2, z, vw],
        vec![z, z, z, z, z, z],
        vec![vw, v2, z, v2, z, vw],
        vec![w2, wv, z, wv, z, w2],
        vec![z, z, z, z, z, z],
    ];
    let gs = glue_from(
        group,
        3,
        TPart {
            labels: &["w", "v", "w^2", "v^2", "wv", "vw"],
            words: vec![vec![0], vec![1], vec![0, 0], vec![1, 1], vec![0, 1], vec![1, 0]],
            table,
            letters: vec![(gw, pw), (gv, pv)],
        },
    )?;
    let mut offender: Vec<String> = Vec::new();
    for i in 1..=3 {
        for j in 1..=3 {
            offender.push(format!("(1;{i},{j})"));
        }
    }
    offender.extend(labels(&["w", "v", "w^2", "v^2", "wv", "vw", "θ"]));
    glued_entry(
        "u4_nonminimal",
        gs,
        Expected {
            nilpotent: false,
            minimal: Expectation::No,
            kind: None,
        },
        "M0(C2,3,3;I3) ∪ ⟨w, v⟩, Γ(w) = (2,1,3,θ), Γ(v) = (2,3,θ)(1), Ψ trivial",
        Some(offender),
    )
}

pub fn u5_c2() -> Result<CatalogEntry> {
    let group = cyclic(2);
    let gw = Transformation::parse("(4,1,θ)(3,2,θ)", 4)?;
    let gv = Transformation::parse("(4,2,θ)(3,1,θ)", 4)?;
    let pw = vec![None, None, Some(0), Some(0)];
    let pv = vec![None, None, Some(1), Some(0)];
    let gs = glue_from(
        group,
        4,
        TPart {
            labels: &["w", "v"],
            words: vec![vec![0], vec![1]],
            table: vec![vec![None, None], vec![None, None]],
            letters: vec![(gw, pw), (gv, pv)],
        },
    )?;
    glued_entry(
        "u5_c2",
        gs,
        Expected {
            nilpotent: false,
            minimal: Expectation::Yes,
            kind: Some(MnnType::U5),
        },
        "M0(C2,4,4;I4) ∪ {w, v}, all products in T zero, Ψ(v)(3) = g",
        None,
    )
}

/// `Y_n = M^0({e}, n, n; I_n) ∪ ⟨w, v⟩` for `n ≥ 5`, with
/// `Γ(w) = (2,3,θ)(4,1,θ)` and `Γ(v) = (2,1,θ)(n,n-1,...,3,θ)`.
pub fn y(n: usize) -> Result<CatalogEntry> {
    if n < 5 {
        return Err(Error::BadParameter(format!("y(n) needs n ≥ 5, got {n}")));
    }
    let group = trivial_group();
    let gw = Transformation::parse("(2,3,θ)(4,1,θ)", n)?;
    let chain: Vec<String> = (3..=n).rev().map(|p| p.to_string()).collect();
    let gv = Transformation::parse(&format!("(2,1,θ)({},θ)", chain.join(",")), n)?;
    let pw = psi_identity(&group, &gw);
    let pv = psi_identity(&group, &gv);

    // w, v^1..v^(n-3), wv^1..wv^(n-4)
    let vmax = n - 3;
    let wvmax = n - 4;
    let iw = 0;
    let iv = |a: usize| a; // v^a at index a
    let iwv = |a: usize| vmax + a; // wv^a
    let k = 1 + vmax + wvmax;
    let mut names: Vec<String> = vec!["w".into()];
    let mut words: Vec<Vec<usize>> = vec![vec![0]];
    for a in 1..=vmax {
        names.push(if a == 1 { "v".into() } else { format!("v^{a}") });
        words.push(vec![1; a]);
    }
    for a in 1..=wvmax {
        names.push(if a == 1 { "wv".into() } else { format!("wv^{a}") });
        let mut word = vec![0];
        word.extend(std::iter::repeat_n(1, a));
        words.push(word);
    }
    // the shape of each element: (starts with w, power of v)
    let shape = |x: usize| -> (bool, usize) {
        if x == iw {
            (true, 0)
        } else if x <= vmax {
            (false, x)
        } else {
            (true, x - vmax)
        }
    };
    let mut table = vec![vec![None; k]; k];
    for a in 0..k {
        for b in 0..k {
            let (aw, ap) = shape(a);
            let (bw, bp) = shape(b);
            table[a][b] = match (aw, ap, bw) {
                // v^a · v^b
                (false, _, false) => (ap + bp <= vmax).then(|| iv(ap + bp)),
                // v^a · (w or wv^b)
                (false, _, true) => None,
                // w · v^b
                (true, 0, false) => (bp <= wvmax).then(|| iwv(bp)),
                // wv^a · v^b
                (true, _, false) => (ap + bp <= wvmax).then(|| iwv(ap + bp)),
                // anything starting with w times w or wv^b
                (true, _, true) => None,
            };
        }
    }
    let name_refs: Vec<&str> = names.iter().map(String::as_str).collect();
    let gs = glue_from(
        group,
        n,
        TPart {
            labels: &name_refs,
            words,
            table,
            letters: vec![(gw, pw), (gv, pv)],
        },
    )?;
    // Row n has no preimage under Γ, so the elements off row n, together
    // with T, form a subsemigroup. It still contains the crossing pattern
    // and is not nilpotent.
    let mut offender: Vec<String> = Vec::new();
    for i in 1..n {
        for j in 1..=n {
            offender.push(format!("(1;{i},{j})"));
        }
    }
    offender.extend(names.iter().cloned());
    offender.push("θ".into());
    glued_entry(
        &format!("y({n})"),
        gs,
        Expected {
            nilpotent: false,
            minimal: Expectation::No,
            kind: None,
        },
        &format!(
            "M0({{e}},{n},{n};I{n}) ∪ ⟨w, v⟩, Γ(w) = (2,3,θ)(4,1,θ), Γ(v) = (2,1,θ)({},θ); \
             U5-shaped, but the elements off row {n} form a non-nilpotent proper subsemigroup",
            chain.join(",")
        ),
        Some(offender),
    )
}

/// All fixed entries plus `y(5)` and `y(6)`.
pub fn standard_entries() -> Result<Vec<CatalogEntry>> {
    Ok(vec![
        u1(),
        u2(),
        f7()?,
        u3_nonminimal()?,
        u4_nonminimal()?,
        u5_c2()?,
        y(5)?,
        y(6)?,
    ])
}
