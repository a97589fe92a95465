//! Acceptance gate: one test per advertised capability of the engine.
//!
//! Each test either proves a claimed presentation/property mechanically or
//! fails with a self-contained diagnosis of the discrepancy it found. Two
//! tests (`acceptance_04c`, `acceptance_04d`) are expected to fail on the
//! current catalog: the derived kernels genuinely disagree with the recorded
//! claims, and the failure messages carry the certificates (component counts
//! and abelianizations). Everything else must pass.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::OnceLock;

use proptest::prelude::*;

use multivirt::catalog::{build, build_dictionary, build_hom, Dictionary, HomSpec};
use multivirt::coset::{kernel_coset_table, todd_coxeter, TransversalStrategy};
use multivirt::hom::{check_well_defined, verify_action, PermHom};
use multivirt::invariants::{abelianization, Abelianization};
use multivirt::pipeline::{derive, Derivation};
use multivirt::presentation::Presentation;
use multivirt::rewrite::tau_rewrite;
use multivirt::tietze::{relator_sets_equal, rename_generators, simplify, DEFAULT_SIMPLIFY_BUDGET};
use multivirt::word::{commutator, cycle_relator, GeneratorId, Relator, Word};
use multivirt::Error;

// ---------------------------------------------------------------- helpers

fn presentation(key: &str, n: usize, k: usize) -> Presentation {
    build(key, n, k)
        .unwrap_or_else(|e| panic!("catalog entry {key}({n},{k}) must build: {e}"))
        .presentation
}

fn perm_hom(key: &str, n: usize, k: usize) -> PermHom {
    match build_hom(key, n, k).expect("map must build") {
        HomSpec::Perm(h) => h,
        HomSpec::Word(_) => panic!("{key} is word-valued"),
    }
}

fn derive_kernel(
    ambient_key: &str,
    n: usize,
    k: usize,
    map_key: &str,
    dict_key: &str,
) -> (Derivation, Dictionary) {
    let ambient = presentation(ambient_key, n, k);
    let hom = perm_hom(map_key, n, k);
    let dict = build_dictionary(dict_key, n, k).expect("dictionary must build");
    let derivation = derive(
        &ambient,
        &hom,
        &TransversalStrategy::Lambda { n },
        Some(&dict),
        DEFAULT_SIMPLIFY_BUDGET,
    )
    .unwrap_or_else(|e| panic!("derivation {map_key} on {ambient_key}({n},{k}) failed: {e}"));
    (derivation, dict)
}

fn assert_presentations_match(label: &str, derived: &Presentation, claimed: &Presentation) {
    let report = relator_sets_equal(derived, claimed);
    assert!(
        report.equal(),
        "{label}: derived `{}` differs from claimed `{}`:\n{report}",
        derived.name(),
        claimed.name(),
    );
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

fn relator_set(p: &Presentation) -> BTreeSet<Relator> {
    p.relators().iter().cloned().collect()
}

/// Generators named by a 2-index family constructor, e.g. `lambda2`.
fn gen_word(g: GeneratorId) -> Word {
    Word::gen(g)
}

// ------------------------------------------------------------ criterion 1

/// The kernel coset table of each symmetric-group-valued map has exactly n!
/// cosets, and coset enumeration over the dictionary's subgroup generators
/// reproduces the same table up to coset numbering.
#[test]
fn acceptance_01_kernel_index_is_the_strand_factorial_with_enumeration_crosscheck() {
    for n in 2..=4 {
        for k in 1..=3 {
            let ambient = presentation("MkVB", n, k);
            for map_key in ["phi", "psi"] {
                let hom = perm_hom(map_key, n, k);
                let table = kernel_coset_table(&ambient, &hom.images)
                    .unwrap_or_else(|e| panic!("kernel table {map_key}({n},{k}): {e}"));
                assert_eq!(
                    table.degree(),
                    factorial(n),
                    "[MkVB({n},{k}) : ker {map_key}] should be {n}! = {}",
                    factorial(n)
                );
            }
        }
    }
    // Independent cross-check: run plain coset enumeration with the named
    // kernel generators as the subgroup, and compare canonicalized tables.
    for n in 2..=3 {
        for k in 1..=3 {
            let ambient = presentation("MkVB", n, k);
            for (map_key, dict_key) in [("phi", "MkVP"), ("psi", "MkVH")] {
                let hom = perm_hom(map_key, n, k);
                let table = kernel_coset_table(&ambient, &hom.images).unwrap();
                let dict = build_dictionary(dict_key, n, k).unwrap();
                let enumerated = todd_coxeter(&ambient, &dict.expansion_words(), None)
                    .unwrap_or_else(|e| panic!("enumeration {dict_key}({n},{k}): {e}"));
                assert_eq!(
                    table.canonicalize(),
                    enumerated.canonicalize(),
                    "enumeration over the {dict_key}({n},{k}) generators must \
                     reproduce the kernel coset table"
                );
            }
        }
    }
    println!("PASS: kernel index is n! for n in 2..=4, k in 1..=3, both maps");
}

// ------------------------------------------------------------ criterion 2

/// Rewriting the kernel of the full permutation map and simplifying, with the
/// conventional generator names, reproduces the claimed presentations of the
/// multi-sorted pure groups exactly.
#[test]
fn acceptance_02_derived_pure_kernels_match_the_claimed_presentations() {
    for n in 2..=4 {
        for k in 1..=3 {
            let (derivation, _) = derive_kernel("MkVB", n, k, "phi", "MkVP");
            assert!(
                !derivation.hit_length_ceiling,
                "simplification at ({n},{k}) hit the relator length ceiling"
            );
            let claimed = presentation("MkVP-claimed", n, k);
            assert_presentations_match(
                &format!("pure kernel ({n},{k})"),
                &derivation.final_presentation,
                &claimed,
            );
        }
    }
    println!(
        "PASS: derived pure kernels equal the claimed presentations for n in 2..=4, k in 1..=3"
    );
}

// ------------------------------------------------------------ criterion 3

/// Same as criterion 2 for the sign-forgetting map: the kernels reproduce the
/// claimed multi-sorted flat presentations, and at (3,1) the classical
/// flat-crossing group VH(3) after dropping the sort index.
#[test]
fn acceptance_03_derived_flat_kernels_match_the_claimed_presentations() {
    for n in 2..=4 {
        for k in 1..=3 {
            let (derivation, _) = derive_kernel("MkVB", n, k, "psi", "MkVH");
            let claimed = presentation("MkVH-claimed", n, k);
            assert_presentations_match(
                &format!("flat kernel ({n},{k})"),
                &derivation.final_presentation,
                &claimed,
            );
        }
    }

    // The single-sort case is the classical group: renaming x_ij^(0) to x_ij
    // must give VH(3) verbatim.
    let (derivation, _) = derive_kernel("MkVB", 3, 1, "psi", "MkVH");
    let mut drop_sort = BTreeMap::new();
    for i in 1..=3 {
        for j in 1..=3 {
            if i != j {
                drop_sort.insert(GeneratorId::x3(i, j, 0), GeneratorId::x2(i, j));
            }
        }
    }
    let renamed = rename_generators(&derivation.final_presentation, &drop_sort).unwrap();
    assert_presentations_match(
        "single-sort flat kernel",
        &renamed,
        &presentation("VH", 3, 1),
    );
    println!("PASS: derived flat kernels equal the claimed presentations; (3,1) is VH(3)");
}

// ----------------------------------------------------------- criterion 4a

/// The kernel of the full map on the two-sort three-strand group, named by
/// the mixed dictionary, splits as the pure group VP(3) alongside a single
/// cycle-class of the second-sort generators.
#[test]
fn acceptance_04a_pure_zoo_kernel_decomposes_as_expected() {
    let (derivation, _) = derive_kernel("MkVB", 3, 2, "phi", "MVP3");
    let p = &derivation.final_presentation;
    assert_eq!(p.generator_count(), 9, "expected 9 generators, got:\n{p}");
    assert_eq!(p.relator_count(), 7, "expected 7 relators, got:\n{p}");

    let mu_cycle = Relator::new(&cycle_relator(
        &gen_word(GeneratorId::mu(1, 2)),
        &gen_word(GeneratorId::mu(1, 3)),
        &gen_word(GeneratorId::mu(2, 3)),
    ));
    assert!(
        p.relators().contains(&mu_cycle),
        "the second-sort cycle relator `{mu_cycle}` is missing from:\n{p}"
    );

    let components = p.support_components();
    assert_eq!(
        components.len(),
        2,
        "expected the kernel to split into 2 components, got {}:\n{p}",
        components.len()
    );
    // One component is VP(3) on the first-sort generators, the other is the
    // free-rank-3 quotient by the single cycle relator.
    let lambda_part = components
        .iter()
        .find(|c| c.generator_count() == 6)
        .expect("a 6-generator component");
    assert_presentations_match(
        "first-sort component",
        lambda_part,
        &presentation("VP", 3, 1),
    );

    let mu_part = components
        .iter()
        .find(|c| c.generator_count() == 3)
        .expect("a 3-generator component");
    let expected_mu = Presentation::new(
        "mu-part",
        vec![
            GeneratorId::mu(1, 2),
            GeneratorId::mu(1, 3),
            GeneratorId::mu(2, 3),
        ],
        &[cycle_relator(
            &gen_word(GeneratorId::mu(1, 2)),
            &gen_word(GeneratorId::mu(1, 3)),
            &gen_word(GeneratorId::mu(2, 3)),
        )],
    )
    .unwrap();
    assert_presentations_match("second-sort component", mu_part, &expected_mu);

    // The recorded claim writes the six first-sort cycle relators with a
    // different argument order; report the diff without gating on it.
    let report = relator_sets_equal(p, &presentation("MVP3", 3, 2));
    if !report.equal() {
        println!("note: derived kernel vs the recorded claim:\n{report}");
    }
    assert!(report.extra_generators.is_empty() && report.missing_generators.is_empty());
    assert_eq!(
        (report.extra_relators.len(), report.missing_relators.len()),
        (6, 6),
        "the recorded claim should differ in exactly the six first-sort cycles"
    );
    println!("PASS: two-sort pure kernel = VP(3) + one second-sort cycle class");
}

// ----------------------------------------------------------- criterion 4b

/// The kernel of the sign-forgetting map on the two-sort three-strand group
/// splits into two braid-triangles of flat generators (jointly VH(3)) and a
/// single cycle-class of the second-sort generators.
#[test]
fn acceptance_04b_flat_zoo_kernel_decomposes_as_expected() {
    let (derivation, _) = derive_kernel("MkVB", 3, 2, "psi", "MVH3");
    let p = &derivation.final_presentation;
    assert_eq!(p.generator_count(), 9, "expected 9 generators, got:\n{p}");
    assert_eq!(p.relator_count(), 7, "expected 7 relators, got:\n{p}");

    let components = p.support_components();
    assert_eq!(
        components.len(),
        3,
        "expected the kernel to split into 3 components, got {}:\n{p}",
        components.len()
    );

    // The two flat components together are exactly VH(3).
    let x_gens: BTreeSet<GeneratorId> = (1..=3)
        .flat_map(|i| {
            (1..=3)
                .filter(move |&j| j != i)
                .map(move |j| GeneratorId::x2(i, j))
        })
        .collect();
    let x_part = p.restricted_to(&x_gens, "flat part");
    assert_presentations_match("flat part", &x_part, &presentation("VH", 3, 1));
    assert_eq!(
        components
            .iter()
            .filter(|c| c.generator_count() == 3)
            .count(),
        3,
        "all three components should have 3 generators"
    );

    // The second-sort component is the free-rank-3 cycle quotient, i.e.
    // FVP(3) with its generators renamed.
    let z_gens: BTreeSet<GeneratorId> = [
        GeneratorId::z(1, 2),
        GeneratorId::z(1, 3),
        GeneratorId::z(2, 3),
    ]
    .into_iter()
    .collect();
    let z_part = p.restricted_to(&z_gens, "second-sort part");
    let mut rename = BTreeMap::new();
    for (i, j) in [(1, 2), (1, 3), (2, 3)] {
        rename.insert(GeneratorId::lambda2(i, j), GeneratorId::z(i, j));
    }
    let expected_z = rename_generators(&presentation("FVP", 3, 1), &rename).unwrap();
    assert_presentations_match("second-sort component", &z_part, &expected_z);

    // The recorded claim garbles one braid relator; report it, pin its shape.
    let report = relator_sets_equal(p, &presentation("MVH3", 3, 2));
    if !report.equal() {
        println!("note: derived kernel vs the recorded claim:\n{report}");
    }
    assert_eq!(
        (report.extra_relators.len(), report.missing_relators.len()),
        (1, 1),
        "the recorded claim should differ in exactly one braid relator"
    );
    println!("PASS: two-sort flat kernel = VH(3) + one second-sort cycle class");
}

// ----------------------------------------------------------- criterion 4c

/// The kernel of the map that kills real crossings and first-sort virtuals
/// should match its recorded claim. It does not: the derivation yields six
/// involutive second-sort generators in two triangles, while the claim lists
/// three with no involutions. This test states the claim and fails with the
/// certificates.
#[test]
fn acceptance_04c_quotient_zoo_kernel_matches_its_claimed_presentation() {
    let (derivation, _) = derive_kernel("MkVB", 3, 2, "chi3", "MVQ3");
    let derived = &derivation.final_presentation;
    let claimed = presentation("MVQ3", 3, 2);

    let report = relator_sets_equal(derived, &claimed);
    if !report.equal() {
        let derived_ab = abelianization(derived);
        let claimed_ab = abelianization(&claimed);
        // Abelianization of the claimed free-product decomposition
        // H1 * H2 * Y, computed factor by factor.
        let h1_ab = abelianization(&presentation("H1", 3, 2));
        let h2_ab = abelianization(&presentation("H2", 3, 2));
        let y_ab = abelianization(&presentation("Y", 3, 2));
        panic!(
            "derived kernel of the quotient map differs from its recorded claim.\n\
             derived: {} generators, {} relators, {} components, abelianization {derived_ab}\n\
             claimed: {} generators, {} relators, {} components, abelianization {claimed_ab}\n\
             claimed decomposition H1 * H2 * Y abelianizes to {h1_ab} ⊕ {h2_ab} ⊕ {y_ab},\n\
             which differs from BOTH of the above — the recorded presentation is not even\n\
             consistent with its own decomposition (it omits the involutions y_ij² and\n\
             the three reversed-index generators y21, y31, y32).\n\
             relator diff:\n{report}",
            derived.generator_count(),
            derived.relator_count(),
            derived.support_components().len(),
            claimed.generator_count(),
            claimed.relator_count(),
            claimed.support_components().len(),
        );
    }
    println!("PASS: quotient-map kernel equals its recorded claim");
}

// ----------------------------------------------------------- criterion 4d

/// The kernel of the map that keeps only the permutation of real and
/// first-sort crossings should match its recorded claim. It does not: the
/// derivation yields two involutive triangles of second-sort generators where
/// the claim has one. This test states the claim and fails with the
/// certificates.
#[test]
fn acceptance_04d_mixed_zoo_kernel_matches_its_claimed_presentation() {
    let (derivation, _) = derive_kernel("MkVB", 3, 2, "chi4", "MVC3");
    let derived = &derivation.final_presentation;
    let claimed = presentation("MVC3", 3, 2);

    let report = relator_sets_equal(derived, &claimed);
    if !report.equal() {
        let derived_ab = abelianization(derived);
        let claimed_ab = abelianization(&claimed);
        panic!(
            "derived kernel of the mixed map differs from its recorded claim.\n\
             derived: {} generators, {} relators, {} components, abelianization {derived_ab}\n\
             claimed: {} generators, {} relators, {} components, abelianization {claimed_ab}\n\
             the derived kernel carries TWO involutive triangles of second-sort\n\
             generators ({{y12, y23, y31}} and {{y21, y13, y32}}), the claim only one\n\
             (it identifies y_ij with y_ji, which holds for neither map image).\n\
             relator diff:\n{report}",
            derived.generator_count(),
            derived.relator_count(),
            derived.support_components().len(),
            claimed.generator_count(),
            claimed.relator_count(),
            claimed.support_components().len(),
        );
    }
    println!("PASS: mixed-map kernel equals its recorded claim");
}

// ------------------------------------------------------------ criterion 5

/// Conjugating each dictionary generator by each involutive ambient generator
/// and rewriting lands on the dictionary entry predicted by the index action
/// (with inversion exactly on the swap-sensitive entries).
#[test]
fn acceptance_05_involutive_conjugation_acts_by_the_predicted_index_permutation() {
    let expected_checked = |entries: usize, conjugators: usize| entries * conjugators;
    for k in 1..=2 {
        for (map_key, dict_key) in [("phi", "MkVP"), ("psi", "MkVH")] {
            let (derivation, dict) = derive_kernel("MkVB", 3, k, map_key, dict_key);
            let report = verify_action(&derivation, &dict)
                .unwrap_or_else(|e| panic!("action check {map_key}(3,{k}): {e}"));
            assert!(
                report.ok(),
                "conjugation action mismatches for {map_key}(3,{k}):\n{}",
                report.mismatches.join("\n")
            );
            // 3 + 3(k-1) entries, 2 involutive conjugators.
            assert_eq!(
                report.checked,
                expected_checked(6 + 3 * (k - 1), 2),
                "unexpected number of conjugation checks at (3,{k})"
            );
        }
    }
    println!("PASS: conjugation action verified exhaustively at n = 3, k in 1..=2, both kernels");
}

// ------------------------------------------------------------ criterion 6

/// Abelianizations computed by Smith normal form match the known values.
#[test]
fn acceptance_06_abelianizations_match_the_known_values() {
    let cases: Vec<(Presentation, Abelianization)> = vec![
        (presentation("B", 3, 1), Abelianization::free(1)),
        (presentation("Y", 3, 2), Abelianization::from_parts(0, &[2])),
        (presentation("MkVP-claimed", 3, 2), Abelianization::free(9)),
        (
            presentation("MkVB", 3, 1),
            Abelianization::from_parts(1, &[2]),
        ),
        (
            presentation("MkVB", 3, 2),
            Abelianization::from_parts(1, &[2, 2]),
        ),
        (
            presentation("MkVB", 3, 3),
            Abelianization::from_parts(1, &[2, 2, 2]),
        ),
    ];
    for (p, expected) in cases {
        let got = abelianization(&p);
        assert_eq!(
            got,
            expected,
            "abelianization of {} should be {expected}, got {got}",
            p.name()
        );
    }
    println!("PASS: abelianizations match the known values");
}

// ------------------------------------------------------------ criterion 7

/// The map that kills real crossings is not well defined on the symmetric
/// extension: the mixed relator that holds there maps to a 3-cycle.
#[test]
fn acceptance_07_the_full_quotient_map_dies_on_the_symmetric_extension() {
    let sym = presentation("sym-MkVB", 3, 2);
    let hom = perm_hom("chi3", 3, 2);
    let err = check_well_defined(&sym, &hom)
        .expect_err("the quotient map must fail on the symmetric extension");
    match err {
        Error::NotWellDefined { relator, image } => {
            let lhs = Word::parse("r1 t2 t1").unwrap();
            let rhs = Word::parse("t2 t1 r2").unwrap();
            let expected = Relator::new(&lhs.concat(&rhs.inverse()));
            assert_eq!(
                relator,
                expected.to_string(),
                "the witness should be the mixed-sort relator"
            );
            assert_eq!(image, "(1 3 2)", "the witness image should be a 3-cycle");
        }
        other => panic!("expected a well-definedness failure, got: {other}"),
    }
    println!("PASS: quotient map rejected on the symmetric extension with the mixed relator");
}

// ------------------------------------------------------------ criterion 8

/// The symmetric extension adds exactly two relators to the two-sort
/// three-strand group; rewriting all their coset conjugates through the base
/// kernel derivation yields exactly six mixed cycle classes and the three
/// pairwise commutators of the second-sort generators — and the full pipeline
/// on the extension reproduces the same set. The second-sort generators
/// become a free abelian group of rank 3.
#[test]
fn acceptance_08_symmetric_extension_adds_exactly_the_mixed_classes() {
    let base = presentation("MkVB", 3, 2);
    let sym = presentation("sym-MkVB", 3, 2);
    let base_relators = relator_set(&base);
    let extra: Vec<Relator> = sym
        .relators()
        .iter()
        .filter(|r| !base_relators.contains(*r))
        .cloned()
        .collect();
    let expected_extra: BTreeSet<Relator> = [
        // σ1 τ2 τ1 = τ2 τ1 σ2 and ρ1 τ2 τ1 = τ2 τ1 ρ2
        ("s1 t2 t1", "t2 t1 s2"),
        ("r1 t2 t1", "t2 t1 r2"),
    ]
    .into_iter()
    .map(|(lhs, rhs)| {
        Relator::new(
            &Word::parse(lhs)
                .unwrap()
                .concat(&Word::parse(rhs).unwrap().inverse()),
        )
    })
    .collect();
    assert_eq!(
        extra.iter().cloned().collect::<BTreeSet<_>>(),
        expected_extra,
        "the symmetric extension should add exactly the two mixed-sort relators"
    );

    // The two kernels express the mixed classes differently: the pure side
    // as three-term cycle classes, the flat side as commutators with a
    // product of second-sort generators.
    fn pure_mixed(l: &Word, a: &Word, b: &Word) -> Word {
        cycle_relator(l, a, b)
    }
    fn flat_mixed(x: &Word, a: &Word, b: &Word) -> Word {
        commutator(x, &a.concat(b))
    }
    type Named = fn(i32, i32) -> GeneratorId;
    type Mixed = fn(&Word, &Word, &Word) -> Word;
    let cases: [(&str, &str, Named, Named, Mixed); 2] = [
        (
            "phi",
            "MVP3",
            GeneratorId::lambda2,
            GeneratorId::mu,
            pure_mixed,
        ),
        ("psi", "MVH3", GeneratorId::x2, GeneratorId::z, flat_mixed),
    ];
    for (map_key, dict_key, first_sort, second_sort, mixed) in cases {
        let (derivation, _) = derive_kernel("MkVB", 3, 2, map_key, dict_key);

        // Rewrite every coset conjugate of each extra relator.
        let mut classes: BTreeSet<Relator> = BTreeSet::new();
        for r in &extra {
            for c in 0..derivation.index() {
                let rep = derivation.transversal.representative(c);
                let conjugate = rep.concat(r.word()).concat(&rep.inverse());
                let image = derivation
                    .rewrite_ambient_word_to_final(&conjugate)
                    .unwrap_or_else(|e| panic!("conjugate rewrite failed: {e}"));
                let relator = Relator::new(&image);
                if !relator.word().is_empty() {
                    classes.insert(relator);
                }
            }
        }

        let l = |i, j| gen_word(first_sort(i, j));
        let m = |i, j| gen_word(second_sort(i, j));
        let expected: BTreeSet<Relator> = [
            mixed(&l(1, 2), &m(1, 3), &m(2, 3)),
            mixed(&l(1, 3), &m(1, 2), &m(2, 3).inverse()),
            mixed(&l(2, 1), &m(1, 3).inverse(), &m(2, 3).inverse()),
            mixed(&l(2, 3), &m(1, 2).inverse(), &m(1, 3).inverse()),
            mixed(&l(3, 1), &m(1, 2).inverse(), &m(2, 3)),
            mixed(&l(3, 2), &m(1, 2), &m(1, 3)),
            commutator(&m(1, 2), &m(1, 3)),
            commutator(&m(1, 2), &m(2, 3)),
            commutator(&m(1, 3), &m(2, 3)),
        ]
        .iter()
        .map(Relator::new)
        .collect();
        assert_eq!(
            classes, expected,
            "{map_key}: conjugate rewriting should give the six mixed cycles \
             and three commutators"
        );

        // The full pipeline on the extension must add exactly these classes.
        let (sym_derivation, _) = derive_kernel("sym-MkVB", 3, 2, map_key, dict_key);
        let sym_final = relator_set(&sym_derivation.final_presentation);
        let base_final = relator_set(&derivation.final_presentation);
        assert!(
            base_final.is_subset(&sym_final),
            "{map_key}: the extension kernel should keep every base relator"
        );
        let added: BTreeSet<Relator> = sym_final.difference(&base_final).cloned().collect();
        assert_eq!(
            added, expected,
            "{map_key}: the extension kernel should add exactly the rewritten classes"
        );

        // With the commutators present the second-sort subgroup is abelian,
        // so its presentation is its abelianization: free of rank 3.
        let second_gens: BTreeSet<GeneratorId> = [(1, 2), (1, 3), (2, 3)]
            .map(|(i, j)| second_sort(i, j))
            .into();
        let second_part = sym_derivation
            .final_presentation
            .restricted_to(&second_gens, "second-sort part");
        for (a, b) in [((1, 2), (1, 3)), ((1, 2), (2, 3)), ((1, 3), (2, 3))] {
            let c = Relator::new(&commutator(
                &gen_word(second_sort(a.0, a.1)),
                &gen_word(second_sort(b.0, b.1)),
            ));
            assert!(
                second_part.relators().contains(&c),
                "{map_key}: missing commutator {c}"
            );
        }
        assert_eq!(
            abelianization(&second_part),
            Abelianization::free(3),
            "{map_key}: the second-sort subgroup should be free abelian of rank 3"
        );
    }

    // With the standard kernel dictionaries, the derived extension kernels
    // exceed the recorded claims by exactly the documented omission: the
    // pairwise commutators of the sort-1 generators.
    for (map_key, dict_key, claim_key) in [
        ("phi", "MkVP", "sym-MkVP-claimed"),
        ("psi", "MkVH", "sym-MkVH-claimed"),
    ] {
        let (sym_derivation, _) = derive_kernel("sym-MkVB", 3, 2, map_key, dict_key);
        let claimed = presentation(claim_key, 3, 2);
        let report = relator_sets_equal(&sym_derivation.final_presentation, &claimed);
        assert!(
            report.extra_generators.is_empty()
                && report.missing_generators.is_empty()
                && report.missing_relators.is_empty(),
            "{map_key}: derived extension kernel vs {claim_key}:\n{report}"
        );
        assert_eq!(
            report.extra_relators.len(),
            3,
            "{map_key}: the derivation should add exactly the three sort-1 \
             commutators to {claim_key}:\n{report}"
        );
        assert!(
            report
                .extra_relators
                .iter()
                .all(|r| r.word().len() == 4 && r.word().support().len() == 2),
            "{map_key}: the extra relators should be pairwise commutators:\n{report}"
        );
    }
    println!("PASS: symmetric extension adds the six mixed classes and three commutators");
}

// ------------------------------------------------------------ criterion 9

static ROUND_TRIP_DERIVATION: OnceLock<Derivation> = OnceLock::new();

fn round_trip_derivation() -> &'static Derivation {
    ROUND_TRIP_DERIVATION.get_or_init(|| {
        let ambient = presentation("MkVB", 3, 2);
        let hom = perm_hom("phi", 3, 2);
        derive(
            &ambient,
            &hom,
            &TransversalStrategy::Lambda { n: 3 },
            None,
            DEFAULT_SIMPLIFY_BUDGET,
        )
        .unwrap()
    })
}

/// A random word over the ambient generators, as (index, sign) pairs.
fn ambient_word_strategy() -> impl Strategy<Value = Vec<(usize, bool)>> {
    prop::collection::vec((0usize..6, prop::bool::ANY), 0..12)
}

fn materialize(letters: &[(usize, bool)], gens: &[GeneratorId]) -> Word {
    let mut w = Word::identity();
    for &(i, positive) in letters {
        let g = Word::gen(gens[i].clone());
        w = w.concat(&if positive { g } else { g.inverse() });
    }
    w
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    /// Schreier rewriting round-trips: for a random word w, the kernel word
    /// u = w · rep(coset(w))⁻¹ rewrites to a subgroup word whose expansion is
    /// freely equal to u.
    #[test]
    fn acceptance_09a_schreier_rewriting_round_trips_on_random_kernel_words(
        letters in ambient_word_strategy()
    ) {
        let d = round_trip_derivation();
        let w = materialize(&letters, d.ambient.generators());
        let coset = d.table.apply_word(0, &w).expect("ambient word stays in the table");
        let u = w.concat(&d.transversal.representative(coset).inverse());
        let rewritten = tau_rewrite(&d.table, &d.transversal, &u)
            .expect("kernel words must rewrite");
        let expanded = rewritten.substitute(&d.expansions);
        prop_assert_eq!(
            expanded, u,
            "expanding the rewritten word must recover the original"
        );
    }

    /// Tietze simplification preserves the abelianization of random
    /// presentations on three generators.
    #[test]
    fn acceptance_09b_simplification_preserves_the_abelianization(
        relators in prop::collection::vec(
            prop::collection::vec((0usize..3, prop::bool::ANY), 1..8),
            1..5
        )
    ) {
        let gens = vec![
            GeneratorId::user("a", &[]),
            GeneratorId::user("b", &[]),
            GeneratorId::user("c", &[]),
        ];
        let words: Vec<Word> = relators.iter().map(|r| materialize(r, &gens)).collect();
        let p = Presentation::new("random", gens, &words).unwrap();
        let before = abelianization(&p);
        let result = simplify(&p, 20);
        let after = abelianization(&result.presentation);
        prop_assert_eq!(before, after, "simplification changed the abelianization");
    }
}

/// Transversal words are prefix-closed (the Schreier condition) on the whole
/// working grid, for both strategies.
#[test]
fn acceptance_09c_transversal_words_are_prefix_closed() {
    use multivirt::coset::schreier_transversal;
    for n in 2..=4 {
        for k in 1..=2 {
            let ambient = presentation("MkVB", n, k);
            for map_key in ["phi", "psi"] {
                let hom = perm_hom(map_key, n, k);
                let table = kernel_coset_table(&ambient, &hom.images).unwrap();
                for strategy in [TransversalStrategy::Bfs, TransversalStrategy::Lambda { n }] {
                    let t = schreier_transversal(&table, &strategy).unwrap();
                    let words: BTreeSet<&Word> = t.words().iter().collect();
                    assert_eq!(words.len(), table.degree(), "one word per coset");
                    for w in t.words() {
                        let letters = w.letters();
                        for cut in 0..letters.len() {
                            let prefix = Word::from_letters(letters[..cut].to_vec());
                            assert!(
                                words.contains(&prefix),
                                "prefix `{prefix}` of `{w}` is not a coset representative \
                                 (n={n}, k={k}, {map_key})"
                            );
                        }
                    }
                }
            }
        }
    }
    println!("PASS: transversals are prefix-closed on the working grid");
}
