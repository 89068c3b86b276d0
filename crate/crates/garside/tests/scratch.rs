// Temporary calibration probe; deleted before final commit.

use garside::presentation::{build_artin_tits, CoxeterEntry, CoxeterMatrix};
use garside::{compute_minimal_garside, Alphabet, ClosureLimits, Preset, WordProblem};
use std::time::Instant;

#[test]
#[ignore]
fn probe_small_presets() {
    for preset in [Preset::A2, Preset::A3, Preset::B3, Preset::A2t, Preset::C2t, Preset::G2t] {
        let p = preset.presentation();
        let start = Instant::now();
        match compute_minimal_garside(&p, &ClosureLimits::default()) {
            Ok(family) => {
                let extremals: Vec<String> = family
                    .extremals
                    .iter()
                    .map(|w| p.alphabet().render_word(w))
                    .collect();
                println!(
                    "{}: |E|={} |F|={} gens={:?} elapsed={:?} extremals={:?}",
                    preset.name(),
                    family.extremals.len(),
                    family.elements.len(),
                    family.stats.generation_sizes,
                    start.elapsed(),
                    extremals
                );
            }
            Err(e) => println!("{}: ERROR {e}", preset.name()),
        }
    }
}

#[test]
#[ignore]
fn probe_c2t_orientations() {
    let f = CoxeterEntry::Finite;
    // (pair with m=4, pair with m=4) over three letters: three path shapes.
    let shapes: [(&str, [(usize, usize); 2]); 3] = [
        ("a-4-b-4-c", [(0, 1), (1, 2)]),
        ("a-4-c-4-b", [(0, 2), (2, 1)]),
        ("b-4-a-4-c", [(1, 0), (0, 2)]),
    ];
    for (name, edges) in shapes {
        let mut m = CoxeterMatrix::commuting(3);
        for (i, j) in edges {
            m.set(i, j, f(4));
        }
        let p = build_artin_tits(&m, Alphabet::latin(3).unwrap()).unwrap();
        match compute_minimal_garside(&p, &ClosureLimits::default()) {
            Ok(family) => {
                let extremals: Vec<String> = family
                    .extremals
                    .iter()
                    .map(|w| p.alphabet().render_word(w))
                    .collect();
                println!(
                    "C2t {name}: |E|={} |F|={} extremals={extremals:?}",
                    family.extremals.len(),
                    family.elements.len()
                );
            }
            Err(e) => println!("C2t {name}: ERROR {e}"),
        }
    }
}

#[test]
#[ignore]
fn probe_g2t_orientations() {
    let f = CoxeterEntry::Finite;
    // One pair with m=6, an adjacent pair with m=3, remaining pair 2.
    let shapes: [(&str, (usize, usize), (usize, usize)); 6] = [
        ("a-6-b-3-c", (0, 1), (1, 2)),
        ("a-6-c-3-b", (0, 2), (2, 1)),
        ("b-6-a-3-c", (1, 0), (0, 2)),
        ("b-6-c-3-a", (1, 2), (2, 0)),
        ("c-6-a-3-b", (2, 0), (0, 1)),
        ("c-6-b-3-a", (2, 1), (1, 0)),
    ];
    for (name, six, three) in shapes {
        let mut m = CoxeterMatrix::commuting(3);
        m.set(six.0, six.1, f(6));
        m.set(three.0, three.1, f(3));
        let p = build_artin_tits(&m, Alphabet::latin(3).unwrap()).unwrap();
        match compute_minimal_garside(&p, &ClosureLimits::default()) {
            Ok(family) => {
                let extremals: Vec<String> = family
                    .extremals
                    .iter()
                    .map(|w| p.alphabet().render_word(w))
                    .collect();
                println!(
                    "G2t {name}: |E|={} |F|={} extremals={extremals:?}",
                    family.extremals.len(),
                    family.elements.len()
                );
            }
            Err(e) => println!("G2t {name}: ERROR {e}"),
        }
    }
}

#[test]
#[ignore]
fn probe_medium_presets() {
    for preset in [Preset::A3t, Preset::C3t, Preset::B3t] {
        let p = preset.presentation();
        let start = Instant::now();
        match compute_minimal_garside(&p, &ClosureLimits::default()) {
            Ok(family) => println!(
                "{}: |E|={} |F|={} elapsed={:?}",
                preset.name(),
                family.extremals.len(),
                family.elements.len(),
                start.elapsed()
            ),
            Err(e) => println!("{}: ERROR {e}", preset.name()),
        }
    }
}

#[test]
#[ignore]
fn probe_spherical_counts() {
    // |F| = |W| for spherical types: A3 -> 24, B3 -> 48.
    for (preset, expected) in [(Preset::A3, 24), (Preset::B3, 48)] {
        let p = preset.presentation();
        let family = compute_minimal_garside(&p, &ClosureLimits::default()).unwrap();
        println!(
            "{}: |F|={} (expected {expected}) |E|={}",
            preset.name(),
            family.elements.len(),
            family.extremals.len()
        );
        let mut wp = WordProblem::new(&p).unwrap();
        for e in family.extremals.iter() {
            println!("  extremal: {}", p.alphabet().render_word(&wp.canonical(e)));
        }
    }
}

#[test]
#[ignore]
fn probe_extremal_fixtures() {
    let cases = [
        (Preset::A2t, vec!["abcb", "bcac", "caba"]),
        (Preset::C2t, vec!["bac", "cbabcbc", "abcbaba"]),
        (Preset::G2t, vec!["abca", "abcabc", "cbabcababacbabab"]),
    ];
    for (preset, expected) in cases {
        let p = preset.presentation();
        let family = compute_minimal_garside(&p, &ClosureLimits::default()).unwrap();
        let mut wp = WordProblem::new(&p).unwrap();
        for e in &expected {
            let w = p.alphabet().parse_word(e).unwrap();
            let canon = wp.canonical(&w);
            println!(
                "{} fixture {e}: canon={} in_extremals={}",
                preset.name(),
                p.alphabet().render_word(&canon),
                family.extremals.contains(&canon)
            );
        }
        assert_eq!(family.extremals.len(), expected.len());
    }
}

#[test]
#[ignore]
fn probe_extended_presets() {
    for preset in [Preset::A4t, Preset::D4t] {
        let p = preset.presentation();
        let start = Instant::now();
        match compute_minimal_garside(&p, &ClosureLimits::default()) {
            Ok(family) => println!(
                "{}: |E|={} |F|={} elapsed={:?}",
                preset.name(),
                family.extremals.len(),
                family.elements.len(),
                start.elapsed()
            ),
            Err(e) => println!("{}: ERROR {e}", preset.name()),
        }
    }
}
