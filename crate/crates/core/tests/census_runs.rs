use nilpotentia::census::{
    canonical_tables, count_semigroups, enumerate_semigroups, find_minimal_non_nilpotent, CensusConfig, Filter, Modulo,
};
use nilpotentia::classify::MnnType;
use nilpotentia::{decide_nilpotent, is_isomorphic, nilpotency_class, verify_witness, Error, Semigroup};

#[test]
fn shard_count_does_not_change_the_output() {
    for modulo in [Modulo::Iso, Modulo::IsoAntiIso] {
        let one = canonical_tables(&CensusConfig::new(4, modulo)).unwrap();
        for shards in [2, 3, 7] {
            let cfg = CensusConfig {
                shards,
                ..CensusConfig::new(4, modulo)
            };
            assert_eq!(canonical_tables(&cfg).unwrap(), one);
        }
    }
}

#[test]
fn outputs_are_associative_and_pairwise_distinct() {
    for n in 1..=4 {
        let all = enumerate_semigroups(&CensusConfig::new(n, Modulo::Iso)).unwrap();
        assert!(all.iter().all(|s| s.associativity_failure().is_none()));
        for (a, s) in all.iter().enumerate() {
            for t in &all[a + 1..] {
                assert!(is_isomorphic(s, t).is_none());
            }
        }
    }
}

#[test]
fn anti_isomorphic_classes_merge() {
    for n in 1..=4 {
        let iso = enumerate_semigroups(&CensusConfig::new(n, Modulo::Iso)).unwrap();
        let anti = count_semigroups(n, Modulo::IsoAntiIso).unwrap();
        // each iso class lands in exactly one iso-or-anti class, and a class
        // splits into at most two iso classes
        let self_dual = iso.iter().filter(|s| is_isomorphic(s, &s.dual()).is_some()).count();
        assert_eq!(anti, self_dual + (iso.len() - self_dual) / 2);
    }
}

#[test]
fn every_table_of_order_three_is_represented() {
    let reps = enumerate_semigroups(&CensusConfig::new(3, Modulo::Iso)).unwrap();
    let mut seen = 0;
    for code in 0..3usize.pow(9) {
        let flat: Vec<usize> = (0..9).map(|k| code / 3usize.pow(k) % 3).collect();
        let Ok(s) = Semigroup::from_flat(vec!["a".into(), "b".into(), "c".into()], flat) else {
            continue;
        };
        seen += 1;
        assert_eq!(reps.iter().filter(|r| is_isomorphic(r, &s).is_some()).count(), 1);
    }
    // associative tables on three labelled points
    assert_eq!(seen, 113);
}

#[test]
fn minimal_non_nilpotent_census() {
    let two = find_minimal_non_nilpotent(&CensusConfig {
        filter: Filter::MinimalNonNilpotent,
        ..CensusConfig::new(2, Modulo::Iso)
    })
    .unwrap();
    let mut kinds: Vec<MnnType> = two.iter().filter_map(|(_, c)| c.verdict.kind()).collect();
    kinds.sort();
    assert_eq!(kinds, vec![MnnType::U1, MnnType::U2]);
    for n in 3..=5 {
        assert!(find_minimal_non_nilpotent(&CensusConfig::new(n, Modulo::IsoAntiIso)).unwrap().is_empty());
    }
}

#[test]
fn decision_and_class_agree_on_every_small_semigroup() {
    for n in 1..=5 {
        for s in enumerate_semigroups(&CensusConfig::new(n, Modulo::Iso)).unwrap() {
            let r = decide_nilpotent(&s);
            assert_eq!(r.class(), nilpotency_class(&s));
            if let Some(w) = r.witness() {
                assert!(verify_witness(&s, w));
            }
        }
    }
}

#[test]
fn bad_parameters() {
    assert!(matches!(count_semigroups(0, Modulo::Iso), Err(Error::BadParameter(_))));
    assert!(matches!(count_semigroups(8, Modulo::Iso), Err(Error::CapExceeded { order: 8, cap: 7 })));
    let cfg = CensusConfig {
        shards: 0,
        ..CensusConfig::new(3, Modulo::Iso)
    };
    assert!(matches!(canonical_tables(&cfg), Err(Error::BadParameter(_))));
}
