//! Acceptance suite: one line per criterion.
//!
//! Every criterion is evaluated in full and printed as PASS or FAIL with its
//! evidence. A criterion may only fail in the ways listed in
//! `KNOWN_FAILURES`, and each of those must fail with the counterexample
//! recorded there; anything else fails the test.

mod common;

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use nilpotentia::catalog::{self, CatalogEntry};
use nilpotentia::census::{self, CensusConfig, Filter, Modulo};
use nilpotentia::classify::{classify_structure, minimal_image, MnnType, Verdict};
use nilpotentia::groups::{
    alternating4, cyclic, dihedral, direct_product, group_nilpotency, quaternion, symmetric, trivial_group,
};
use nilpotentia::nilpotency::monoid_identity;
use nilpotentia::rees::{build_rees, rees_nilpotency_criterion, ReesCoord, ReesDecomposition, ReesSpec};
use nilpotentia::structure::{is_minimal_non_nilpotent_capped, MinimalityMode, MnnVerdict, Offender};
use nilpotentia::{decide_nilpotent, is_isomorphic, verify_witness, NilpotencyResult, Semigroup};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const SEED: u64 = 0x6e69_6c70;
const RANDOM_SAMPLES: usize = 200;
const MAX_RANDOM_ORDER: usize = 6;
const EXHAUSTIVE_CAP: usize = 12;
const MODE_AGREEMENT_MAX_ORDER: usize = 10;

/// Published counts of semigroups of order 1..=6 up to isomorphism and up
/// to isomorphism or anti-isomorphism.
const COUNTS_ISO: [usize; 6] = [1, 5, 24, 188, 1915, 28634];
const COUNTS_ISO_ANTI: [usize; 6] = [1, 4, 18, 126, 1160, 15973];

const BUDGETS: [Duration; 8] = [
    Duration::from_secs(10),
    Duration::from_secs(5),
    Duration::from_secs(30),
    Duration::from_secs(120),
    Duration::from_secs(10),
    Duration::from_secs(30 * 60),
    Duration::from_secs(5 * 60),
    Duration::from_secs(60),
];

/// Sub-checks that are expected to fail, with the reason. The `y(n)`
/// family is U5-shaped, but row `n` is never reached by the action of
/// `⟨w, v⟩`, so everything off row `n` is a proper subsemigroup that is
/// still not nilpotent.
const KNOWN_FAILURES: [(u8, &str); 3] = [
    (4, "y(5) minimal"),
    (4, "y(6) minimal"),
    (8, "image of y(5) minimal"),
];

struct Outcome {
    passed: Vec<String>,
    failed: Vec<(String, String)>,
}

impl Outcome {
    fn new() -> Self {
        Outcome {
            passed: Vec::new(),
            failed: Vec::new(),
        }
    }

    fn check(&mut self, name: impl Into<String>, ok: bool, detail: impl Into<String>) {
        let name = name.into();
        if ok {
            self.passed.push(name);
        } else {
            self.failed.push((name, detail.into()));
        }
    }
}

// 1 ------------------------------------------------------------------------

fn witness_soundness(out: &mut Outcome) {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let (mut nil, mut non) = (0, 0);
    for k in 0..RANDOM_SAMPLES {
        let n = rng.gen_range(1..=MAX_RANDOM_ORDER);
        let s = if k % 3 == 0 {
            common::random_climbing(n, &mut rng)
        } else {
            common::random_semigroup(n, &mut rng)
        };
        let chain = common::pair_chain(&s);
        let oracle = chain.iter().position(common::diagonal);
        match decide_nilpotent(&s) {
            NilpotencyResult::NonNilpotent { witness } => {
                non += 1;
                let (l, r) = common::replay(&s, witness.x, witness.y, &witness.ws);
                let replays = witness.x != witness.y && !witness.ws.is_empty() && l == witness.x && r == witness.y;
                out.check(
                    format!("sample {k} witness"),
                    replays && verify_witness(&s, &witness) && oracle.is_none(),
                    format!("table {:?}", s.flat_table()),
                );
            }
            NilpotencyResult::Nilpotent { class } => {
                nil += 1;
                let ok = common::diagonal(&chain[class]) && (class == 0 || !common::diagonal(&chain[class - 1]));
                out.check(
                    format!("sample {k} class"),
                    ok && oracle == Some(class),
                    format!("class {class}, oracle {oracle:?}, table {:?}", s.flat_table()),
                );
            }
        }
    }
    out.check("both verdicts sampled", nil >= 20 && non >= 20, format!("{nil} nilpotent, {non} not"));
}

// 2 ------------------------------------------------------------------------

fn group_corpus() -> Vec<(&'static str, Semigroup)> {
    vec![
        ("C2", cyclic(2)),
        ("C3", cyclic(3)),
        ("C4", cyclic(4)),
        ("C6", cyclic(6)),
        ("C2xC2", direct_product(&cyclic(2), &cyclic(2))),
        ("S3", symmetric(3)),
        ("D4", dihedral(4)),
        ("Q8", quaternion()),
        ("A4", alternating4()),
        ("D5", dihedral(5)),
        ("C2xC4", direct_product(&cyclic(2), &cyclic(4))),
    ]
}

fn group_agreement(out: &mut Outcome) {
    let expected: [(&str, Option<usize>); 11] = [
        ("C2", Some(1)),
        ("C3", Some(1)),
        ("C4", Some(1)),
        ("C6", Some(1)),
        ("C2xC2", Some(1)),
        ("S3", None),
        ("D4", Some(2)),
        ("Q8", Some(2)),
        ("A4", None),
        ("D5", None),
        ("C2xC4", Some(1)),
    ];
    for ((name, g), (_, want)) in group_corpus().into_iter().zip(expected) {
        let malcev = decide_nilpotent(&g).class();
        let lcs = group_nilpotency(&g).ok().flatten();
        out.check(
            name,
            malcev == lcs && malcev == want,
            format!("malcev {malcev:?}, lower central series {lcs:?}, expected {want:?}"),
        );
    }
}

// 3 ------------------------------------------------------------------------

/// Regular sandwich matrices (`cols × rows`) for the battery.
fn sandwich_battery(g: &Semigroup, rows: usize, cols: usize) -> Vec<(String, Vec<Vec<Option<usize>>>, bool)> {
    let one = g.identity().unwrap();
    let other = (0..g.order()).find(|&x| x != one).unwrap_or(one);
    let mut out = Vec::new();
    out.push(("all ones".to_string(), vec![vec![Some(one); rows]; cols], true));
    out.push(("all ones, no zero".to_string(), vec![vec![Some(one); rows]; cols], false));
    if rows == cols {
        let n = rows;
        let ident: Vec<Vec<Option<usize>>> =
            (0..n).map(|j| (0..n).map(|k| (j == k).then_some(one)).collect()).collect();
        out.push(("identity".into(), ident.clone(), true));
        // cyclic shift with a non-identity entry
        let perm: Vec<Vec<Option<usize>>> = (0..n)
            .map(|j| {
                (0..n)
                    .map(|k| (k == (j + 1) % n).then_some(if j == 0 { other } else { one }))
                    .collect()
            })
            .collect();
        out.push(("permutation".into(), perm, true));
        if n >= 2 {
            let mut doubly = ident;
            doubly[0][1] = Some(other);
            out.push(("doubly nonzero column".into(), doubly, true));
        }
    } else {
        // staircase: every row and column is hit
        let stair: Vec<Vec<Option<usize>>> = (0..cols)
            .map(|j| {
                (0..rows)
                    .map(|k| (k == j.min(rows - 1) || j == k.min(cols - 1)).then_some(one))
                    .collect()
            })
            .collect();
        out.push(("staircase".into(), stair, true));
    }
    out
}

fn rees_criterion(out: &mut Outcome) {
    let groups = [
        ("1", trivial_group()),
        ("C2", cyclic(2)),
        ("C3", cyclic(3)),
        ("S3", symmetric(3)),
    ];
    let mut cases = 0;
    for (gname, g) in &groups {
        for rows in 1..=3 {
            for cols in 1..=3 {
                for (pname, sandwich, with_zero) in sandwich_battery(g, rows, cols) {
                    let spec = ReesSpec {
                        group: g.clone(),
                        rows,
                        cols,
                        sandwich,
                        with_zero,
                    };
                    let name = format!("M({gname},{rows},{cols};{pname})");
                    match build_rees(&spec) {
                        Ok((s, _)) => {
                            cases += 1;
                            let direct = decide_nilpotent(&s).is_nilpotent();
                            let criterion = rees_nilpotency_criterion(&spec);
                            out.check(
                                name,
                                direct == criterion,
                                format!("direct {direct}, criterion {criterion}"),
                            );
                        }
                        Err(e) => out.check(name, false, format!("construction failed: {e}")),
                    }
                }
            }
        }
    }
    out.check("battery size", cases >= 100, format!("{cases} cases"));
}

// 4 ------------------------------------------------------------------------

fn offender_is_verified(s: &Semigroup, o: &Offender) -> bool {
    match o {
        Offender::Subsemigroup { members, witness, .. } => {
            let set: BTreeSet<usize> = members.iter().copied().collect();
            let in_set = |k: usize| set.contains(&k) || k == monoid_identity(s);
            members.len() < s.order()
                && common::is_closed(s, members)
                && in_set(witness.x)
                && in_set(witness.y)
                && witness.ws.iter().all(|&w| in_set(w))
                && verify_witness(s, witness)
        }
        Offender::Quotient { ideal, witness } => nilpotentia::structure::rees_quotient(s, ideal)
            .map(|q| verify_witness(&q, witness))
            .unwrap_or(false),
    }
}

fn certificate(e: &CatalogEntry) -> Option<Vec<usize>> {
    e.expected_offender
        .as_ref()
        .map(|ls| ls.iter().map(|l| e.semigroup.element(l).unwrap()).collect())
}

/// The catalog's offender certificate is a proper, closed, non-nilpotent
/// subset (by the brute-force oracle).
fn certificate_holds(e: &CatalogEntry) -> bool {
    let Some(mut members) = certificate(e) else {
        return false;
    };
    members.sort_unstable();
    members.len() < e.semigroup.order()
        && common::is_closed(&e.semigroup, &members)
        && common::class_oracle(&e.semigroup.restrict(&members)).is_none()
}

/// Some reported offender equals the certificate (`exact`) or lies inside
/// it.
fn matches_expected_offender(e: &CatalogEntry, v: &MnnVerdict, exact: bool) -> bool {
    let Some(want) = certificate(e) else {
        return true;
    };
    let want: BTreeSet<usize> = want.into_iter().collect();
    v.offenders.iter().any(|o| match o {
        Offender::Subsemigroup { members, .. } => {
            let got: BTreeSet<usize> = members.iter().copied().collect();
            if exact {
                got == want
            } else {
                got.is_subset(&want)
            }
        }
        Offender::Quotient { .. } => false,
    })
}

fn catalog_reproduction(out: &mut Outcome) {
    let minimal_of = |e: &CatalogEntry| is_minimal_non_nilpotent_capped(&e.semigroup, MinimalityMode::FourGenerator, EXHAUSTIVE_CAP);
    let kind_of = |e: &CatalogEntry| classify_structure(&e.semigroup, false).map(|c| c.verdict.kind());

    for (name, want_kind) in [("u1", MnnType::U1), ("u2", MnnType::U2), ("u5_c2", MnnType::U5)] {
        let e = catalog::entry(name).unwrap();
        let v = minimal_of(&e).unwrap();
        let nonnil = !decide_nilpotent(&e.semigroup).is_nilpotent();
        out.check(format!("{name} minimal"), nonnil && v.minimal, format!("minimal {}", v.minimal));
        let k = kind_of(&e);
        out.check(format!("{name} type"), matches!(k, Ok(Some(t)) if t == want_kind), format!("{k:?}"));
    }
    for name in ["u3_nonminimal", "u4_nonminimal"] {
        let e = catalog::entry(name).unwrap();
        let v = minimal_of(&e).unwrap();
        let nonnil = !decide_nilpotent(&e.semigroup).is_nilpotent();
        let verified = !v.offenders.is_empty() && v.offenders.iter().all(|o| offender_is_verified(&e.semigroup, o));
        out.check(
            format!("{name} not minimal"),
            nonnil && !v.minimal && verified && certificate_holds(&e) && matches_expected_offender(&e, &v, true),
            format!("minimal {}, {} offenders", v.minimal, v.offenders.len()),
        );
    }
    let f7 = catalog::f7().unwrap();
    let k = kind_of(&f7);
    out.check(
        "f7 type",
        !decide_nilpotent(&f7.semigroup).is_nilpotent() && matches!(k, Ok(Some(MnnType::U3))),
        format!("{k:?}"),
    );
    for n in [5, 6] {
        let e = catalog::y(n).unwrap();
        let v = minimal_of(&e).unwrap();
        let nonnil = !decide_nilpotent(&e.semigroup).is_nilpotent();
        let detail = if v.minimal {
            "minimal".to_string()
        } else {
            let o = &v.offenders[0];
            let ok = v.offenders.iter().all(|o| offender_is_verified(&e.semigroup, o));
            let size = match o {
                Offender::Subsemigroup { members, .. } => members.len(),
                Offender::Quotient { ideal, .. } => ideal.len(),
            };
            format!(
                "not minimal: offender of {size}/{} elements (verified {ok}), inside the elements off row {n} ({})",
                e.semigroup.order(),
                matches_expected_offender(&e, &v, false) && certificate_holds(&e)
            )
        };
        out.check(format!("y({n}) minimal"), nonnil && v.minimal, detail);
        let k = kind_of(&e);
        out.check(format!("y({n}) type"), matches!(k, Ok(Some(MnnType::U5))), format!("{k:?}"));
    }
}

/// The pinned counterexample for the `y(n)` sub-checks must keep
/// reproducing.
fn y_counterexample_reproduces(n: usize) -> bool {
    let e = catalog::y(n).unwrap();
    let v = is_minimal_non_nilpotent_capped(&e.semigroup, MinimalityMode::FourGenerator, EXHAUSTIVE_CAP).unwrap();
    !v.minimal
        && v.offenders.iter().all(|o| offender_is_verified(&e.semigroup, o))
        && certificate_holds(&e)
        && matches_expected_offender(&e, &v, false)
}

// 5 ------------------------------------------------------------------------

fn action_laws_on(name: &str, s: &Semigroup, out: &mut Outcome) {
    let c = match classify_structure(s, false) {
        Ok(c) => c,
        Err(e) => return out.check(format!("{name} decomposition"), false, e.to_string()),
    };
    let dec: &ReesDecomposition = c.decomposition.as_ref().unwrap();
    let gp = c.gamma_psi.as_ref().unwrap();
    let g = &dec.spec.group;
    let n = dec.rows();
    let theta = dec.zero.unwrap();
    let at = |g: usize, i: usize, j: usize| dec.element(ReesCoord { g, i, j });

    // M multiplies as a Rees matrix semigroup with identity sandwich.
    let mut rees_ok = true;
    for &x in dec.members.iter().filter(|&&x| x != theta) {
        for &y in dec.members.iter().filter(|&&y| y != theta) {
            let (a, b) = (dec.coord(x).unwrap(), dec.coord(y).unwrap());
            let want = if a.j == b.i { at(g.mul(a.g, b.g), a.i, b.j) } else { theta };
            rees_ok &= s.mul(x, y) == want;
        }
    }
    out.check(format!("{name} Rees multiplication"), rees_ok, "");

    // Left and right actions on every (h; i, j), from the multiplication.
    let mut action_ok = true;
    for a in 0..s.order() {
        let t = &gp.gamma[a];
        for h in 0..g.order() {
            for i in 0..n {
                for j in 0..n {
                    let left = s.mul(a, at(h, i, j));
                    let want = match (t.apply(i), gp.psi[a][i]) {
                        (Some(i2), Some(p)) => at(g.mul(p, h), i2, j),
                        _ => theta,
                    };
                    action_ok &= left == want;
                    let right = s.mul(at(h, i, j), a);
                    let want = match (0..n).find(|&j2| t.apply(j2) == Some(j)) {
                        Some(j2) => at(g.mul(h, gp.psi[a][j2].unwrap()), i, j2),
                        None => theta,
                    };
                    action_ok &= right == want;
                }
            }
        }
    }
    out.check(format!("{name} actions"), action_ok, "");

    let mut hom = true;
    let mut cocycle = true;
    for a in 0..s.order() {
        for b in 0..s.order() {
            let ab = s.mul(a, b);
            hom &= gp.gamma[ab] == gp.gamma[a].after(&gp.gamma[b]);
            for i in 0..n {
                let rhs = gp.gamma[b]
                    .apply(i)
                    .and_then(|k| gp.psi[a][k])
                    .zip(gp.psi[b][i])
                    .map(|(x, y)| g.mul(x, y));
                cocycle &= gp.psi[ab][i] == rhs;
            }
        }
    }
    out.check(format!("{name} homomorphism"), hom, "");
    out.check(format!("{name} cocycle"), cocycle, "");

    let support = (0..s.order()).all(|a| (0..n).all(|i| gp.gamma[a].apply(i).is_some() == gp.psi[a][i].is_some()));
    out.check(format!("{name} support"), support, "");
    let injective = (0..s.order()).all(|a| {
        let images: Vec<usize> = (0..n).filter_map(|i| gp.gamma[a].apply(i)).collect();
        images.len() == images.iter().collect::<BTreeSet<_>>().len()
    });
    out.check(format!("{name} injective off θ"), injective, "");
    let theta_pre: Vec<usize> = (0..s.order())
        .filter(|&a| (0..n).all(|i| gp.gamma[a].apply(i).is_none()))
        .collect();
    out.check(
        format!("{name} θ preimage"),
        theta_pre == vec![theta],
        format!("{:?}", common::labels_of(s, &theta_pre)),
    );

    // Γ((h; i, j)) sends j to i and nothing else; Ψ there is h.
    let mut reference = true;
    for h in 0..g.order() {
        for i in 0..n {
            for j in 0..n {
                let x = at(h, i, j);
                for k in 0..n {
                    let want = (k == j).then_some(i);
                    reference &= gp.gamma[x].apply(k) == want;
                    reference &= gp.psi[x][k] == (k == j).then_some(h);
                }
            }
        }
    }
    out.check(format!("{name} elements of M"), reference, "");
}

fn action_laws(out: &mut Outcome) {
    for e in [catalog::f7().unwrap(), catalog::u5_c2().unwrap(), catalog::y(5).unwrap()] {
        action_laws_on(&e.name, &e.semigroup, out);
    }
}

// 6 ------------------------------------------------------------------------

fn census_ground_truth(out: &mut Outcome) {
    for n in 1..=6 {
        for (modulo, want) in [(Modulo::Iso, COUNTS_ISO[n - 1]), (Modulo::IsoAntiIso, COUNTS_ISO_ANTI[n - 1])] {
            let got = census::count_semigroups(n, modulo).unwrap();
            out.check(format!("order {n} {modulo:?} count"), got == want, format!("{got} != {want}"));
        }
    }
    let u1 = catalog::u1().semigroup;
    let u2 = catalog::u2().semigroup;
    for n in 1..=6 {
        let cfg = CensusConfig {
            order: n,
            modulo: Modulo::Iso,
            shards: 1,
            filter: Filter::MinimalNonNilpotent,
        };
        let found = census::find_minimal_non_nilpotent(&cfg).unwrap();
        let summary: Vec<&str> = found.iter().map(|(_, c)| c.verdict.name()).collect();
        let ok = match n {
            2 => {
                found.len() == 2
                    && found.iter().any(|(s, c)| c.verdict == Verdict::U1 && is_isomorphic(s, &u1).is_some())
                    && found.iter().any(|(s, c)| c.verdict == Verdict::U2 && is_isomorphic(s, &u2).is_some())
            }
            6 => {
                found.len() == 1
                    && matches!(found[0].1.verdict, Verdict::Schmidt(_))
                    && is_isomorphic(&found[0].0, &symmetric(3)).is_some()
            }
            _ => found.is_empty(),
        };
        out.check(format!("order {n} minimal non-nilpotent"), ok, format!("{summary:?}"));
    }
}

// 7 ------------------------------------------------------------------------

fn mode_agreement(out: &mut Outcome) {
    let mut corpus: Vec<(String, Semigroup)> = Vec::new();
    for e in catalog::standard_entries().unwrap() {
        if e.semigroup.order() <= MODE_AGREEMENT_MAX_ORDER {
            corpus.push((e.name, e.semigroup));
        }
    }
    for (name, g) in group_corpus() {
        if g.order() <= MODE_AGREEMENT_MAX_ORDER {
            corpus.push((name.to_string(), g));
        }
    }
    for n in 1..=5 {
        for (k, s) in census::enumerate_semigroups(&CensusConfig::new(n, Modulo::Iso)).unwrap().into_iter().enumerate() {
            corpus.push((format!("census {n}#{k}"), s));
        }
    }
    for (name, s) in &corpus {
        let four = is_minimal_non_nilpotent_capped(s, MinimalityMode::FourGenerator, EXHAUSTIVE_CAP).unwrap();
        let all = is_minimal_non_nilpotent_capped(s, MinimalityMode::Exhaustive, EXHAUSTIVE_CAP).unwrap();
        out.check(
            format!("modes agree on {name}"),
            four.minimal == all.minimal,
            format!("four-generator {}, exhaustive {}", four.minimal, all.minimal),
        );
    }
}

// 8 ------------------------------------------------------------------------

fn image_minimality(out: &mut Outcome) {
    for e in [catalog::f7().unwrap(), catalog::u5_c2().unwrap(), catalog::y(5).unwrap()] {
        let name = format!("image of {} minimal", e.name);
        let c = classify_structure(&e.semigroup, false);
        let Ok(c) = c else {
            out.check(name, false, format!("{c:?}"));
            continue;
        };
        let (img, map) = minimal_image(&e.semigroup, c.decomposition.as_ref().unwrap()).unwrap();
        let hom = (0..e.semigroup.order()).all(|a| {
            (0..e.semigroup.order()).all(|b| map[e.semigroup.mul(a, b)] == img.mul(map[a], map[b]))
        });
        out.check(format!("image of {} homomorphism", e.name), hom, "");
        let v = is_minimal_non_nilpotent_capped(&img, MinimalityMode::FourGenerator, EXHAUSTIVE_CAP).unwrap();
        let nonnil = !decide_nilpotent(&img).is_nilpotent();
        let detail = format!(
            "{} transformations, minimal {}, {} offenders{}",
            img.order(),
            v.minimal,
            v.offenders.len(),
            v.offenders
                .first()
                .map(|o| match o {
                    Offender::Subsemigroup { members, .. } => format!(", first of size {}", members.len()),
                    Offender::Quotient { ideal, .. } => format!(", first a quotient by {} elements", ideal.len()),
                })
                .unwrap_or_default()
        );
        out.check(name, nonnil && v.minimal, detail);
    }
}

#[test]
fn acceptance() {
    let criteria: [(u8, &str, fn(&mut Outcome)); 8] = [
        (1, "witness soundness on random semigroups", witness_soundness),
        (2, "group agreement with lower central series", group_agreement),
        (3, "Rees matrix nilpotency criterion", rees_criterion),
        (4, "catalog reproduction", catalog_reproduction),
        (5, "action laws on glued unions", action_laws),
        (6, "census ground truth", census_ground_truth),
        (7, "four-generator and exhaustive agreement", mode_agreement),
        (8, "transformation image minimality", image_minimality),
    ];
    let mut unexpected = Vec::new();
    let mut seen_known = Vec::new();
    let mut failing = 0;
    for (id, title, run) in criteria {
        let started = Instant::now();
        let mut out = Outcome::new();
        run(&mut out);
        let elapsed = started.elapsed();
        let budget = BUDGETS[id as usize - 1];
        if elapsed > budget {
            out.failed.push(("time budget".into(), format!("{elapsed:.1?} > {budget:?}")));
        }
        let verdict = if out.failed.is_empty() { "PASS" } else { "FAIL" };
        if !out.failed.is_empty() {
            failing += 1;
        }
        println!(
            "criterion {id} {verdict}: {title} ({} checks passed, {} failed, {elapsed:.2?})",
            out.passed.len(),
            out.failed.len()
        );
        for (name, detail) in &out.failed {
            let known = KNOWN_FAILURES.contains(&(id, name.as_str()));
            println!("    {} {name}: {detail}", if known { "known:" } else { "FAILED" });
            if known {
                seen_known.push((id, name.clone()));
            } else {
                unexpected.push(format!("criterion {id}: {name}: {detail}"));
            }
        }
    }
    println!("{} of 8 criteria pass", 8 - failing);

    // Known failures must keep failing for the recorded reason.
    assert!(y_counterexample_reproduces(5), "y(5) counterexample no longer reproduces");
    assert!(y_counterexample_reproduces(6), "y(6) counterexample no longer reproduces");
    for (id, name) in KNOWN_FAILURES {
        assert!(
            seen_known.iter().any(|(i, n)| *i == id && n == name),
            "criterion {id}: {name} was expected to fail and did not"
        );
    }
    assert!(unexpected.is_empty(), "unexpected failures:\n{}", unexpected.join("\n"));
}
