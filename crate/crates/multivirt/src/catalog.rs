//! Catalog of named presentations, relator families, generator dictionaries,
//! and standard homomorphisms for the multi-virtual braid family `M_kVB_n`
//! and its relatives.
//!
//! Every entry is built from scratch, deterministically, from the two
//! parameters `n` (number of strands) and `k` (number of virtual sorts).
//! Entries whose key ends in `-claimed` record a presentation exactly as it
//! is claimed to hold for a kernel subgroup; the engine derives the actual
//! kernel presentations independently and compares.  Known defects of a
//! claimed entry are listed in its `notes` — the entry itself is never
//! silently repaired.

use std::collections::BTreeMap;

use crate::error::Error;
use crate::hom::{PermHom, WordHom};
use crate::perm::Perm;
use crate::presentation::Presentation;
use crate::word::{
    braid_relator, commutator, cycle_relator, DisplayStyle, Family, GeneratorId, Word,
};
use crate::Result;

/// A catalog presentation plus its provenance-free metadata.
#[derive(Debug, Clone)]
pub struct CatalogEntry {
    /// The key it was requested under.
    pub key: String,
    /// Number of strands.
    pub n: usize,
    /// Number of virtual sorts.
    pub k: usize,
    /// The presentation itself.
    pub presentation: Presentation,
    /// Known structural caveats of this entry, in mathematical language.
    pub notes: Vec<String>,
    /// Preferred display style (`t{i}` for the sort-1 generators when k = 2).
    pub style: DisplayStyle,
}

/// All valid keys for [`build`], in display order.
pub fn keys() -> &'static [&'static str] {
    &[
        "B",
        "Sn",
        "VB",
        "FVB",
        "VP",
        "FVP",
        "VH",
        "MkVB",
        "sym-MkVB",
        "MkWB",
        "MkUB",
        "MkVP-claimed",
        "MkVH-claimed",
        "sym-MkVP-claimed",
        "sym-MkVH-claimed",
        "MkWP-claimed",
        "MkUP-claimed",
        "MkWH-claimed",
        "MkUH-claimed",
        "MVP3",
        "MVH3",
        "MVQ3",
        "MVC3",
        "H1",
        "H2",
        "Y",
    ]
}

fn unknown_key(key: &str) -> Error {
    Error::UnknownCatalogKey {
        key: key.to_string(),
        hint: format!("; known keys: {}", keys().join(", ")),
    }
}

fn bad_params(key: &str, n: usize, k: usize, reason: &str) -> Error {
    Error::BadCatalogParams {
        key: key.to_string(),
        params: format!("n = {n}, k = {k}"),
        reason: reason.to_string(),
    }
}

/// Build the catalog entry `key` with parameters `n` (strands) and `k`
/// (virtual sorts).
///
/// Single-parameter families (`B`, `Sn`, `VB`, `FVB`, `VP`, `FVP`, `VH`)
/// require `k = 1`; the fixed three-strand groups (`MVP3`, `MVH3`, `MVQ3`,
/// `MVC3`, `H1`, `H2`, `Y`) require `(n, k) = (3, 2)`; the `sym-` quotients
/// require `k >= 2`.
pub fn build(key: &str, n: usize, k: usize) -> Result<CatalogEntry> {
    if !keys().contains(&key) {
        return Err(unknown_key(key));
    }
    if n < 2 {
        return Err(bad_params(key, n, k, "need at least two strands"));
    }
    if k < 1 {
        return Err(bad_params(key, n, k, "need at least one virtual sort"));
    }
    let single_param = ["B", "Sn", "VB", "FVB", "VP", "FVP", "VH"];
    if single_param.contains(&key) && k != 1 {
        return Err(bad_params(
            key,
            n,
            k,
            "this family takes only a strand count; pass k = 1",
        ));
    }
    let fixed = ["MVP3", "MVH3", "MVQ3", "MVC3", "H1", "H2", "Y"];
    if fixed.contains(&key) && (n, k) != (3, 2) {
        return Err(bad_params(
            key,
            n,
            k,
            "this entry is fixed at (n, k) = (3, 2)",
        ));
    }
    if key.starts_with("sym-") && k < 2 {
        return Err(bad_params(
            key,
            n,
            k,
            "the symmetric quotient needs at least two virtual sorts",
        ));
    }

    let ni = n as i32;
    let ki = k as i32;
    let mut notes: Vec<String> = Vec::new();
    let presentation = match key {
        "B" => braid_presentation(ni),
        "Sn" => symmetric_presentation(ni),
        "VB" => {
            notes.push("alias of MkVB(n, 1)".to_string());
            mkvb_presentation(ni, 1).with_name(&format!("VB({n})"))
        }
        "FVB" => {
            notes.push(
                "the VB relator scheme with the braid generators renamed to \
                 involutive generators c_i and the relators c_i^2 appended"
                    .to_string(),
            );
            fvb_presentation(ni)
        }
        "VP" => vp_presentation(ni),
        "FVP" => fvp_presentation(ni),
        "VH" => vh_presentation(ni),
        "MkVB" => mkvb_presentation(ni, ki),
        "sym-MkVB" => sym_mkvb_presentation(ni, ki),
        "MkWB" => welded_presentation(ni, ki, false),
        "MkUB" => welded_presentation(ni, ki, true),
        "MkVP-claimed" => {
            notes.push(argument_order_note());
            mkvp_claimed(ni, ki)
        }
        "MkVH-claimed" => mkvh_claimed(ni, ki),
        "sym-MkVP-claimed" => {
            notes.push(argument_order_note());
            notes.push(sym_omission_note("μ-type"));
            sym_mkvp_claimed(ni, ki)
        }
        "sym-MkVH-claimed" => {
            notes.push(sym_omission_note("z-type"));
            sym_mkvh_claimed(ni, ki)
        }
        "MkWP-claimed" => {
            notes.push(report_only_note());
            mkwp_claimed(ni, ki, false)
        }
        "MkUP-claimed" => {
            notes.push(report_only_note());
            mkwp_claimed(ni, ki, true)
        }
        "MkWH-claimed" => {
            notes.push(report_only_note());
            notes.push(
                "the mixed three-generator family does not close under \
                 relabelling by strand permutations"
                    .to_string(),
            );
            mkwh_claimed(ni, ki, false)
        }
        "MkUH-claimed" => {
            notes.push(report_only_note());
            notes.push(
                "the mixed three-generator family does not close under \
                 relabelling by strand permutations"
                    .to_string(),
            );
            mkwh_claimed(ni, ki, true)
        }
        "MVP3" => {
            notes.push(
                "the six λ-relators use the argument order (λ_ik, λ_jk, λ_ij); \
                 the Reidemeister–Schreier derivation produces the order \
                 (λ_ij, λ_ik, λ_jk), a different canonical relator set \
                 (compare VP(3))"
                    .to_string(),
            );
            mvp3_presentation()
        }
        "MVH3" => {
            notes.push(garbled_braid_note());
            mvh3_presentation()
        }
        "MVQ3" => {
            notes.push(garbled_braid_note());
            notes.push(
                "lists three y generators with no involution relators; the \
                 kernel derivation instead produces six involutive y \
                 generators spanning two disjoint triangles (compare Y)"
                    .to_string(),
            );
            mvq3_presentation()
        }
        "MVC3" => {
            notes.push(
                "assembled as the disjoint union of VP(3) and Y; the kernel \
                 derivation instead produces one VP(3) factor and two Y-type \
                 factors"
                    .to_string(),
            );
            mvc3_presentation()
        }
        "H1" => {
            notes.push(garbled_braid_note());
            h1_presentation()
        }
        "H2" => h2_presentation(),
        "Y" => y_presentation(),
        _ => unreachable!("key membership checked above"),
    };
    let style = if k == 2 {
        DisplayStyle::TauForRho1
    } else {
        DisplayStyle::Plain
    };
    Ok(CatalogEntry {
        key: key.to_string(),
        n,
        k,
        presentation,
        notes,
        style,
    })
}

fn argument_order_note() -> String {
    "three-generator relators are stored as w(a,b,c) = a·b·c·a⁻¹·b⁻¹·c⁻¹ \
     with arguments ordered (λ_ij, λ_ik, λ_jk) over ordered strand triples; \
     the reversed order (λ_ik, λ_jk, λ_ij) yields a different canonical \
     relator set"
        .to_string()
}

fn sym_omission_note(family: &str) -> String {
    format!(
        "the listed relators omit the pairwise commuting family among the \
         {family} generators that the corresponding ambient quotient forces; \
         derived comparisons should expect that family"
    )
}

fn report_only_note() -> String {
    "stored for report-style comparison; sort-nonzero generators written \
     with a reversed index pair denote inverses"
        .to_string()
}

fn garbled_braid_note() -> String {
    "the relator x32·x21·x32·(x13·x21·x13)⁻¹ is not a braid instance; the \
     braid pattern on the same pair would be x32·x21·x32·(x21·x32·x21)⁻¹"
        .to_string()
}

// ---------------------------------------------------------------------------
// Small word helpers.
// ---------------------------------------------------------------------------

fn sig(i: i32) -> Word {
    Word::gen(GeneratorId::sigma(i))
}

fn rho(i: i32, a: i32) -> Word {
    Word::gen(GeneratorId::rho(i, a))
}

/// The relator `lhs · rhs⁻¹` expressing `lhs = rhs`.
fn eq(lhs: &Word, rhs: &Word) -> Word {
    lhs.concat(&rhs.inverse())
}

/// All ordered triples of distinct strand indices in `1..=n`, lexicographic.
fn ordered_triples(n: i32) -> Vec<(i32, i32, i32)> {
    let mut out = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            if j == i {
                continue;
            }
            for m in 1..=n {
                if m != i && m != j {
                    out.push((i, j, m));
                }
            }
        }
    }
    out
}

/// The two strand indices carried by a pair-indexed generator.
fn strand_pair(g: &GeneratorId) -> Option<(i32, i32)> {
    match g {
        GeneratorId::Atom { indices, .. } if indices.len() >= 2 => Some((indices[0], indices[1])),
        _ => None,
    }
}

/// One commutator per unordered pair of generators with disjoint strand
/// supports, in generator-list order.
fn disjoint_commutators(gens: &[GeneratorId]) -> Vec<Word> {
    let mut out = Vec::new();
    for (ai, a) in gens.iter().enumerate() {
        let Some((i, j)) = strand_pair(a) else {
            continue;
        };
        for b in &gens[ai + 1..] {
            let Some((p, q)) = strand_pair(b) else {
                continue;
            };
            if i != p && i != q && j != p && j != q {
                out.push(commutator(&Word::gen(a.clone()), &Word::gen(b.clone())));
            }
        }
    }
    out
}

/// The word standing for a sort-`a` pair generator at `(i, j)`.  Sort-0
/// generators exist for every ordered pair; for `a >= 1` only `i < j` names a
/// generator and the reversed pair denotes its inverse.
fn pair_word(family: Family, i: i32, j: i32, a: i32) -> Word {
    if a == 0 || i < j {
        Word::gen(GeneratorId::atom(family, &[i, j, a]))
    } else {
        Word::gen(GeneratorId::atom(family, &[j, i, a])).inverse()
    }
}

fn lam(i: i32, j: i32, a: i32) -> Word {
    pair_word(Family::Lambda, i, j, a)
}

fn xg(i: i32, j: i32, a: i32) -> Word {
    pair_word(Family::X, i, j, a)
}

// ---------------------------------------------------------------------------
// Ambient braid-family presentations.
// ---------------------------------------------------------------------------

/// The braid group `B_n` on `σ_1 .. σ_{n-1}`.
fn braid_presentation(n: i32) -> Presentation {
    let gens: Vec<GeneratorId> = (1..n).map(GeneratorId::sigma).collect();
    let mut rels = Vec::new();
    for i in 1..n - 1 {
        rels.push(braid_relator(&sig(i), &sig(i + 1)));
    }
    for i in 1..n {
        for j in i + 2..n {
            rels.push(commutator(&sig(i), &sig(j)));
        }
    }
    Presentation::new(&format!("B({n})"), gens, &rels).expect("systematic construction is valid")
}

/// The symmetric group `S_n` as a Coxeter presentation on `a_1 .. a_{n-1}`.
fn symmetric_presentation(n: i32) -> Presentation {
    let a = |i: i32| Word::gen(GeneratorId::user("a", &[i]));
    let gens: Vec<GeneratorId> = (1..n).map(|i| GeneratorId::user("a", &[i])).collect();
    let mut rels = Vec::new();
    for i in 1..n {
        rels.push(a(i).pow(2));
    }
    for i in 1..n {
        for j in i + 2..n {
            rels.push(commutator(&a(i), &a(j)));
        }
    }
    for i in 1..n - 1 {
        rels.push(braid_relator(&a(i), &a(i + 1)));
    }
    Presentation::new(&format!("S({n})"), gens, &rels).expect("systematic construction is valid")
}

/// The multi-virtual braid group `M_kVB_n`.
///
/// Generators: `σ_1 .. σ_{n-1}`, then the involutive generators `ρ^a_i`
/// sort-major.  Relators: involutions, distant commutation, braid rows for
/// `σ` and for each sort, and the mixed rows through which the sort-0
/// generators shuffle every strand family.
fn mkvb_presentation(n: i32, k: i32) -> Presentation {
    let mut gens: Vec<GeneratorId> = (1..n).map(GeneratorId::sigma).collect();
    for a in 0..k {
        for i in 1..n {
            gens.push(GeneratorId::rho(i, a));
        }
    }
    let mut rels = Vec::new();
    // Involutions.
    for a in 0..k {
        for i in 1..n {
            rels.push(rho(i, a).pow(2));
        }
    }
    // Distant commutation: every pair of generators at strand distance >= 2.
    for i in 1..n {
        for j in i + 2..n {
            rels.push(commutator(&sig(i), &sig(j)));
            for a in 0..k {
                rels.push(commutator(&sig(i), &rho(j, a)));
            }
            for a in 0..k {
                rels.push(commutator(&rho(i, a), &sig(j)));
            }
            for a in 0..k {
                for b in 0..k {
                    rels.push(commutator(&rho(i, a), &rho(j, b)));
                }
            }
        }
    }
    // Braid rows.
    for i in 1..n - 1 {
        rels.push(braid_relator(&sig(i), &sig(i + 1)));
    }
    for a in 0..k {
        for i in 1..n - 1 {
            rels.push(braid_relator(&rho(i, a), &rho(i + 1, a)));
        }
    }
    // Mixed rows: σ_i ρ⁰_{i+1} ρ⁰_i = ρ⁰_{i+1} ρ⁰_i σ_{i+1} and, for every
    // other sort b, ρ⁰_i ρ⁰_{i+1} ρ^b_i = ρ^b_{i+1} ρ⁰_i ρ⁰_{i+1}.
    for i in 1..n - 1 {
        rels.push(eq(
            &Word::product([&sig(i), &rho(i + 1, 0), &rho(i, 0)]),
            &Word::product([&rho(i + 1, 0), &rho(i, 0), &sig(i + 1)]),
        ));
    }
    for b in 1..k {
        for i in 1..n - 1 {
            rels.push(eq(
                &Word::product([&rho(i, 0), &rho(i + 1, 0), &rho(i, b)]),
                &Word::product([&rho(i + 1, b), &rho(i, 0), &rho(i + 1, 0)]),
            ));
        }
    }
    Presentation::new(&format!("MkVB({n},{k})"), gens, &rels)
        .expect("systematic construction is valid")
}

/// The symmetric quotient `sym-M_kVB_n`: `M_kVB_n` plus the mixed rows for
/// every nonzero sort and the cross-sort shuffle family.
fn sym_mkvb_presentation(n: i32, k: i32) -> Presentation {
    let base = mkvb_presentation(n, k);
    let mut rels: Vec<Word> = base.relators().iter().map(|r| r.word().clone()).collect();
    for a in 1..k {
        for i in 1..n - 1 {
            rels.push(eq(
                &Word::product([&sig(i), &rho(i + 1, a), &rho(i, a)]),
                &Word::product([&rho(i + 1, a), &rho(i, a), &sig(i + 1)]),
            ));
        }
    }
    rels.extend(forbidden_words(ForbiddenFamily::F3, n, k));
    Presentation::new(
        &format!("sym-MkVB({n},{k})"),
        base.generators().to_vec(),
        &rels,
    )
    .expect("systematic construction is valid")
}

/// `M_kWB_n` (welded: adds F1) and `M_kUB_n` (unrestricted: adds F1 and F2).
fn welded_presentation(n: i32, k: i32, unrestricted: bool) -> Presentation {
    let base = mkvb_presentation(n, k);
    let mut rels: Vec<Word> = base.relators().iter().map(|r| r.word().clone()).collect();
    rels.extend(forbidden_words(ForbiddenFamily::F1, n, k));
    if unrestricted {
        rels.extend(forbidden_words(ForbiddenFamily::F2, n, k));
    }
    let name = if unrestricted {
        format!("MkUB({n},{k})")
    } else {
        format!("MkWB({n},{k})")
    };
    Presentation::new(&name, base.generators().to_vec(), &rels)
        .expect("systematic construction is valid")
}

/// The flat virtual braid group `FVB_n` on involutive crossings `c_i` and
/// virtual generators `ρ_i`.
fn fvb_presentation(n: i32) -> Presentation {
    let vb = mkvb_presentation(n, 1);
    let mut gens: Vec<GeneratorId> = (1..n).map(|i| GeneratorId::user("c", &[i])).collect();
    for i in 1..n {
        gens.push(GeneratorId::rho(i, 0));
    }
    let mut to_c: BTreeMap<GeneratorId, Word> = BTreeMap::new();
    for i in 1..n {
        to_c.insert(
            GeneratorId::sigma(i),
            Word::gen(GeneratorId::user("c", &[i])),
        );
    }
    let mut rels: Vec<Word> = vb
        .relators()
        .iter()
        .map(|r| r.word().substitute(&to_c))
        .collect();
    for i in 1..n {
        rels.push(Word::gen(GeneratorId::user("c", &[i])).pow(2));
    }
    Presentation::new(&format!("FVB({n})"), gens, &rels).expect("systematic construction is valid")
}

// ---------------------------------------------------------------------------
// Classical pure-kernel presentations.
// ---------------------------------------------------------------------------

/// The virtual pure braid group `VP_n` on `λ_{ij}` for all ordered pairs.
fn vp_presentation(n: i32) -> Presentation {
    let mut gens = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            if j != i {
                gens.push(GeneratorId::lambda2(i, j));
            }
        }
    }
    let l = |i: i32, j: i32| Word::gen(GeneratorId::lambda2(i, j));
    let mut rels = disjoint_commutators(&gens);
    for (i, j, m) in ordered_triples(n) {
        rels.push(cycle_relator(&l(i, j), &l(i, m), &l(j, m)));
    }
    Presentation::new(&format!("VP({n})"), gens, &rels).expect("systematic construction is valid")
}

/// The flat virtual pure braid group `FVP_n` on `λ_{ij}` for `i < j`.
fn fvp_presentation(n: i32) -> Presentation {
    let mut gens = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            gens.push(GeneratorId::lambda2(i, j));
        }
    }
    let l = |i: i32, j: i32| Word::gen(GeneratorId::lambda2(i, j));
    let mut rels = disjoint_commutators(&gens);
    for i in 1..=n {
        for j in i + 1..=n {
            for m in j + 1..=n {
                rels.push(cycle_relator(&l(i, j), &l(i, m), &l(j, m)));
            }
        }
    }
    Presentation::new(&format!("FVP({n})"), gens, &rels).expect("systematic construction is valid")
}

/// The group `VH_n` on `x_{ij}` for all ordered pairs, with braid triples
/// and distant commutation.
fn vh_presentation(n: i32) -> Presentation {
    let mut gens = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            if j != i {
                gens.push(GeneratorId::x2(i, j));
            }
        }
    }
    let x = |i: i32, j: i32| Word::gen(GeneratorId::x2(i, j));
    let mut rels = Vec::new();
    for (i, j, m) in ordered_triples(n) {
        rels.push(braid_relator(&x(i, m), &x(m, j)));
    }
    rels.extend(disjoint_commutators(&gens));
    Presentation::new(&format!("VH({n})"), gens, &rels).expect("systematic construction is valid")
}

// ---------------------------------------------------------------------------
// Claimed kernel presentations for the multi-sort family.
// ---------------------------------------------------------------------------

/// Generator list shared by the claimed multi-sort kernels: sort-0 pair
/// generators over all ordered pairs, then each nonzero sort over `i < j`.
fn claimed_kernel_generators(family: Family, n: i32, k: i32) -> Vec<GeneratorId> {
    let mut gens = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            if j != i {
                gens.push(GeneratorId::atom(family.clone(), &[i, j, 0]));
            }
        }
    }
    for b in 1..k {
        for i in 1..=n {
            for j in i + 1..=n {
                gens.push(GeneratorId::atom(family.clone(), &[i, j, b]));
            }
        }
    }
    gens
}

/// The claimed presentation of the multi-virtual pure braid kernel
/// `M_kVP_n`.
fn mkvp_claimed(n: i32, k: i32) -> Presentation {
    let gens = claimed_kernel_generators(Family::Lambda, n, k);
    let mut rels = disjoint_commutators(&gens);
    for (i, j, m) in ordered_triples(n) {
        rels.push(cycle_relator(&lam(i, j, 0), &lam(i, m, 0), &lam(j, m, 0)));
    }
    for b in 1..k {
        for i in 1..=n {
            for j in i + 1..=n {
                for m in j + 1..=n {
                    rels.push(cycle_relator(&lam(i, j, b), &lam(i, m, b), &lam(j, m, b)));
                }
            }
        }
    }
    Presentation::new(&format!("MkVP-claimed({n},{k})"), gens, &rels)
        .expect("systematic construction is valid")
        .with_deduped_relators()
}

/// The claimed presentation of the semi-pure kernel `M_kVH_n`.
fn mkvh_claimed(n: i32, k: i32) -> Presentation {
    let gens = claimed_kernel_generators(Family::X, n, k);
    let mut rels = disjoint_commutators(&gens);
    for (i, j, m) in ordered_triples(n) {
        rels.push(braid_relator(&xg(i, m, 0), &xg(m, j, 0)));
    }
    for b in 1..k {
        for i in 1..=n {
            for j in i + 1..=n {
                for m in j + 1..=n {
                    rels.push(cycle_relator(&xg(i, j, b), &xg(i, m, b), &xg(j, m, b)));
                }
            }
        }
    }
    Presentation::new(&format!("MkVH-claimed({n},{k})"), gens, &rels)
        .expect("systematic construction is valid")
        .with_deduped_relators()
}

/// The claimed kernel of the symmetric quotient on the λ side.
fn sym_mkvp_claimed(n: i32, k: i32) -> Presentation {
    let base = mkvp_claimed(n, k);
    let mut rels: Vec<Word> = base.relators().iter().map(|r| r.word().clone()).collect();
    for a in 1..k {
        for (i, j, m) in ordered_triples(n) {
            rels.push(cycle_relator(&lam(i, j, 0), &lam(i, m, a), &lam(j, m, a)));
        }
    }
    for a in 1..k {
        for b in a + 1..k {
            for (i, j, m) in ordered_triples(n) {
                rels.push(cycle_relator(&lam(i, j, a), &lam(i, m, a), &lam(j, m, b)));
            }
        }
    }
    Presentation::new(
        &format!("sym-MkVP-claimed({n},{k})"),
        base.generators().to_vec(),
        &rels,
    )
    .expect("systematic construction is valid")
    .with_deduped_relators()
}

/// The claimed kernel of the symmetric quotient on the x side.
fn sym_mkvh_claimed(n: i32, k: i32) -> Presentation {
    let base = mkvh_claimed(n, k);
    let mut rels: Vec<Word> = base.relators().iter().map(|r| r.word().clone()).collect();
    for a in 1..k {
        for (i, j, m) in ordered_triples(n) {
            rels.push(commutator(&xg(i, j, 0), &xg(i, m, a).concat(&xg(j, m, a))));
        }
    }
    for a in 1..k {
        for b in a + 1..k {
            for (i, j, m) in ordered_triples(n) {
                rels.push(cycle_relator(&xg(i, j, a), &xg(i, m, a), &xg(j, m, b)));
            }
        }
    }
    Presentation::new(
        &format!("sym-MkVH-claimed({n},{k})"),
        base.generators().to_vec(),
        &rels,
    )
    .expect("systematic construction is valid")
    .with_deduped_relators()
}

/// The claimed welded (`M_kWP_n`) and unrestricted (`M_kUP_n`) pure kernels.
fn mkwp_claimed(n: i32, k: i32, unrestricted: bool) -> Presentation {
    let base = mkvp_claimed(n, k);
    let mut rels: Vec<Word> = base.relators().iter().map(|r| r.word().clone()).collect();
    for a in 1..k {
        for (i, j, m) in ordered_triples(n) {
            rels.push(cycle_relator(&lam(i, j, 0), &lam(i, m, 0), &lam(j, m, a)));
        }
    }
    for (i, j, m) in ordered_triples(n) {
        rels.push(commutator(&lam(i, j, 0), &lam(i, m, 0)));
    }
    if unrestricted {
        for a in 1..k {
            for (i, j, m) in ordered_triples(n) {
                rels.push(cycle_relator(&lam(j, m, 0), &lam(i, m, 0), &lam(i, j, a)));
            }
        }
        for (i, j, m) in ordered_triples(n) {
            rels.push(commutator(&lam(j, m, 0), &lam(i, m, 0)));
        }
    }
    let name = if unrestricted {
        format!("MkUP-claimed({n},{k})")
    } else {
        format!("MkWP-claimed({n},{k})")
    };
    Presentation::new(&name, base.generators().to_vec(), &rels)
        .expect("systematic construction is valid")
        .with_deduped_relators()
}

/// The claimed welded (`M_kWH_n`) and unrestricted (`M_kUH_n`) semi-pure
/// kernels, stored exactly as given (including index patterns that do not
/// close under strand relabelling).
fn mkwh_claimed(n: i32, k: i32, unrestricted: bool) -> Presentation {
    let base = mkvh_claimed(n, k);
    let mut rels: Vec<Word> = base.relators().iter().map(|r| r.word().clone()).collect();
    for a in 1..k {
        for (i, j, m) in ordered_triples(n) {
            rels.push(eq(
                &Word::product([&xg(i, m, 0), &xg(j, i, 0), &xg(m, i, a)]),
                &Word::product([&xg(i, j, a), &xg(j, m, 0), &xg(i, j, 0)]),
            ));
        }
    }
    for (i, j, m) in ordered_triples(n) {
        rels.push(commutator(&xg(j, m, 0), &xg(i, m, 0)));
    }
    if unrestricted {
        for a in 1..k {
            for (i, j, m) in ordered_triples(n) {
                rels.push(eq(
                    &Word::product([&xg(i, m, 0), &xg(m, j, 0), &xg(m, i, a)]),
                    &Word::product([&xg(j, m, a), &xg(i, j, 0), &xg(j, m, 0)]),
                ));
            }
        }
        for (i, j, m) in ordered_triples(n) {
            rels.push(commutator(&xg(j, m, 0), &xg(i, m, 0)));
        }
    }
    let name = if unrestricted {
        format!("MkUH-claimed({n},{k})")
    } else {
        format!("MkWH-claimed({n},{k})")
    };
    Presentation::new(&name, base.generators().to_vec(), &rels)
        .expect("systematic construction is valid")
        .with_deduped_relators()
}

// ---------------------------------------------------------------------------
// Fixed three-strand, two-sort entries.
// ---------------------------------------------------------------------------

fn mvp3_presentation() -> Presentation {
    let l = |i: i32, j: i32| Word::gen(GeneratorId::lambda2(i, j));
    let m = |i: i32, j: i32| Word::gen(GeneratorId::mu(i, j));
    let gens = vec![
        GeneratorId::lambda2(1, 2),
        GeneratorId::lambda2(2, 1),
        GeneratorId::lambda2(1, 3),
        GeneratorId::lambda2(3, 1),
        GeneratorId::lambda2(2, 3),
        GeneratorId::lambda2(3, 2),
        GeneratorId::mu(1, 2),
        GeneratorId::mu(1, 3),
        GeneratorId::mu(2, 3),
    ];
    let rels = vec![
        cycle_relator(&l(1, 2), &l(3, 2), &l(1, 3)),
        cycle_relator(&l(2, 1), &l(3, 1), &l(2, 3)),
        cycle_relator(&l(1, 3), &l(2, 3), &l(1, 2)),
        cycle_relator(&l(3, 1), &l(2, 1), &l(3, 2)),
        cycle_relator(&l(2, 3), &l(1, 3), &l(2, 1)),
        cycle_relator(&l(3, 2), &l(1, 2), &l(3, 1)),
        cycle_relator(&m(1, 2), &m(1, 3), &m(2, 3)),
    ];
    Presentation::new("MVP3", gens, &rels).expect("fixed entry is valid")
}

fn mvh3_x_generators() -> Vec<GeneratorId> {
    vec![
        GeneratorId::x2(1, 2),
        GeneratorId::x2(2, 3),
        GeneratorId::x2(1, 3),
        GeneratorId::x2(2, 1),
        GeneratorId::x2(3, 2),
        GeneratorId::x2(3, 1),
    ]
}

/// The six x-relators shared by the MVH3 and MVQ3 entries, including the
/// non-braid sixth relator stored verbatim.
fn mvh3_x_relators() -> Vec<Word> {
    let x = |i: i32, j: i32| Word::gen(GeneratorId::x2(i, j));
    vec![
        braid_relator(&x(1, 2), &x(2, 3)),
        braid_relator(&x(2, 1), &x(1, 3)),
        braid_relator(&x(1, 3), &x(3, 2)),
        braid_relator(&x(3, 1), &x(1, 2)),
        braid_relator(&x(2, 3), &x(3, 1)),
        eq(
            &Word::product([&x(3, 2), &x(2, 1), &x(3, 2)]),
            &Word::product([&x(1, 3), &x(2, 1), &x(1, 3)]),
        ),
    ]
}

fn mvh3_presentation() -> Presentation {
    let z = |i: i32, j: i32| Word::gen(GeneratorId::z(i, j));
    let mut gens = mvh3_x_generators();
    gens.extend([
        GeneratorId::z(1, 2),
        GeneratorId::z(1, 3),
        GeneratorId::z(2, 3),
    ]);
    let mut rels = mvh3_x_relators();
    rels.push(cycle_relator(&z(1, 2), &z(1, 3), &z(2, 3)));
    Presentation::new("MVH3", gens, &rels).expect("fixed entry is valid")
}

fn mvq3_presentation() -> Presentation {
    let y = |i: i32, j: i32| Word::gen(GeneratorId::y(i, j));
    let mut gens = mvh3_x_generators();
    gens.extend([
        GeneratorId::y(1, 2),
        GeneratorId::y(1, 3),
        GeneratorId::y(2, 3),
    ]);
    let mut rels = vec![
        y(1, 2).concat(&y(2, 3)).pow(3),
        y(1, 2).concat(&y(1, 3)).pow(3),
        y(2, 3).concat(&y(1, 3)).pow(3),
    ];
    rels.extend(mvh3_x_relators());
    Presentation::new("MVQ3", gens, &rels).expect("fixed entry is valid")
}

fn mvc3_presentation() -> Presentation {
    let vp = vp_presentation(3);
    let y = y_presentation();
    let mut gens = vp.generators().to_vec();
    gens.extend(y.generators().to_vec());
    let mut rels: Vec<Word> = vp.relators().iter().map(|r| r.word().clone()).collect();
    rels.extend(y.relators().iter().map(|r| r.word().clone()));
    Presentation::new("MVC3", gens, &rels).expect("fixed entry is valid")
}

fn h1_presentation() -> Presentation {
    let x = |i: i32, j: i32| Word::gen(GeneratorId::x2(i, j));
    let gens = vec![
        GeneratorId::x2(1, 3),
        GeneratorId::x2(2, 1),
        GeneratorId::x2(3, 2),
    ];
    let rels = vec![
        braid_relator(&x(2, 1), &x(1, 3)),
        braid_relator(&x(1, 3), &x(3, 2)),
        eq(
            &Word::product([&x(3, 2), &x(2, 1), &x(3, 2)]),
            &Word::product([&x(1, 3), &x(2, 1), &x(1, 3)]),
        ),
    ];
    Presentation::new("H1", gens, &rels).expect("fixed entry is valid")
}

fn h2_presentation() -> Presentation {
    let x = |i: i32, j: i32| Word::gen(GeneratorId::x2(i, j));
    let gens = vec![
        GeneratorId::x2(1, 2),
        GeneratorId::x2(3, 1),
        GeneratorId::x2(2, 3),
    ];
    let rels = vec![
        braid_relator(&x(1, 2), &x(2, 3)),
        braid_relator(&x(3, 1), &x(1, 2)),
        braid_relator(&x(2, 3), &x(3, 1)),
    ];
    Presentation::new("H2", gens, &rels).expect("fixed entry is valid")
}

fn y_presentation() -> Presentation {
    let y = |i: i32, j: i32| Word::gen(GeneratorId::y(i, j));
    let gens = vec![
        GeneratorId::y(1, 2),
        GeneratorId::y(1, 3),
        GeneratorId::y(2, 3),
    ];
    let rels = vec![
        y(1, 2).pow(2),
        y(1, 3).pow(2),
        y(2, 3).pow(2),
        y(1, 2).concat(&y(1, 3)).pow(3),
        y(1, 2).concat(&y(2, 3)).pow(3),
        y(2, 3).concat(&y(1, 3)).pow(3),
    ];
    Presentation::new("Y", gens, &rels).expect("fixed entry is valid")
}

// ---------------------------------------------------------------------------
// Forbidden relator families.
// ---------------------------------------------------------------------------

/// The three families of forbidden moves, as relator words over the
/// `M_kVB_n` generators.
///
/// * `F1`: `σ_i σ_{i+1} ρ^a_i = ρ^a_{i+1} σ_i σ_{i+1}` for every sort.
/// * `F2`: `σ_{i+1} σ_i ρ^a_{i+1} = ρ^a_i σ_{i+1} σ_i` for every sort.
/// * `F3`: the cross-sort shuffles `ρ^a_i ρ^b_{i+1} ρ^b_i = ρ^b_{i+1} ρ^b_i
///   ρ^a_{i+1}` for `a < b` and `ρ^c_i ρ^c_{i+1} ρ^b_i = ρ^b_{i+1} ρ^c_i
///   ρ^c_{i+1}` for `0 < c < b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ForbiddenFamily {
    /// `σ σ ρ`-shaped words (classical over virtual, ascending).
    F1,
    /// `σ σ ρ`-shaped words (classical over virtual, descending).
    F2,
    /// Cross-sort shuffles between two virtual sorts.
    F3,
}

fn forbidden_words(family: ForbiddenFamily, n: i32, k: i32) -> Vec<Word> {
    let mut out = Vec::new();
    match family {
        ForbiddenFamily::F1 => {
            for a in 0..k {
                for i in 1..n - 1 {
                    out.push(eq(
                        &Word::product([&sig(i), &sig(i + 1), &rho(i, a)]),
                        &Word::product([&rho(i + 1, a), &sig(i), &sig(i + 1)]),
                    ));
                }
            }
        }
        ForbiddenFamily::F2 => {
            for a in 0..k {
                for i in 1..n - 1 {
                    out.push(eq(
                        &Word::product([&sig(i + 1), &sig(i), &rho(i + 1, a)]),
                        &Word::product([&rho(i, a), &sig(i + 1), &sig(i)]),
                    ));
                }
            }
        }
        ForbiddenFamily::F3 => {
            for a in 0..k {
                for b in a + 1..k {
                    for i in 1..n - 1 {
                        out.push(eq(
                            &Word::product([&rho(i, a), &rho(i + 1, b), &rho(i, b)]),
                            &Word::product([&rho(i + 1, b), &rho(i, b), &rho(i + 1, a)]),
                        ));
                    }
                }
            }
            for c in 1..k {
                for b in c + 1..k {
                    for i in 1..n - 1 {
                        out.push(eq(
                            &Word::product([&rho(i, c), &rho(i + 1, c), &rho(i, b)]),
                            &Word::product([&rho(i + 1, b), &rho(i, c), &rho(i + 1, c)]),
                        ));
                    }
                }
            }
        }
    }
    out
}

/// Public constructor for the forbidden relator families over `M_kVB_n`.
pub fn forbidden_relators(family: ForbiddenFamily, n: usize, k: usize) -> Result<Vec<Word>> {
    if n < 2 {
        return Err(bad_params("forbidden", n, k, "need at least two strands"));
    }
    if k < 1 {
        return Err(bad_params(
            "forbidden",
            n,
            k,
            "need at least one virtual sort",
        ));
    }
    Ok(forbidden_words(family, n as i32, k as i32))
}

// ---------------------------------------------------------------------------
// Dictionaries: named kernel generators as ambient words.
// ---------------------------------------------------------------------------

/// A named kernel generator together with its expansion as an ambient word.
///
/// `swap_inverts` records the convention for reading the name with its two
/// strand indices reversed: `true` means the reversed pair denotes the
/// inverse (sort-nonzero pair generators); `false` means the reversed pair
/// is itself a dictionary entry.
#[derive(Debug, Clone)]
pub struct DictEntry {
    /// The subgroup generator's standard name.
    pub name: GeneratorId,
    /// Its expansion as an ambient word.
    pub expansion: Word,
    /// Whether reversing the strand pair denotes the inverse.
    pub swap_inverts: bool,
}

/// An ordered list of dictionary entries for one kernel.
#[derive(Debug, Clone)]
pub struct Dictionary {
    /// The catalog key the dictionary was built for.
    pub key: String,
    /// Entries in canonical generator order.
    pub entries: Vec<DictEntry>,
}

impl Dictionary {
    /// The entry for `name`, if the dictionary defines one.
    pub fn lookup(&self, name: &GeneratorId) -> Option<&DictEntry> {
        self.entries.iter().find(|e| &e.name == name)
    }

    /// All standard names, in dictionary order.
    pub fn names(&self) -> Vec<GeneratorId> {
        self.entries.iter().map(|e| e.name.clone()).collect()
    }

    /// The expansions, in entry order (useful as subgroup generators).
    pub fn expansion_words(&self) -> Vec<Word> {
        self.entries.iter().map(|e| e.expansion.clone()).collect()
    }
}

/// All valid keys for [`build_dictionary`].
pub fn dictionary_keys() -> &'static [&'static str] {
    &["MkVP", "MkVH", "MVP3", "MVH3", "MVQ3", "MVC3"]
}

/// `C · base · C̄` where `C = ρ_{j-1} … ρ_{i+1}` walks strand `j` down next
/// to strand `i` (empty when `j = i + 1`).
fn rho_chain_conjugate(base: &Word, i: i32, j: i32) -> Word {
    let mut parts: Vec<Word> = Vec::new();
    for t in (i + 1..j).rev() {
        parts.push(rho(t, 0));
    }
    parts.push(base.clone());
    for t in i + 1..j {
        parts.push(rho(t, 0));
    }
    Word::product(parts.iter())
}

/// Dictionary for the pure kernel of `M_kVB_n`: `λ^0_{ij}` over all ordered
/// pairs and `λ^b_{ij}` for `i < j`, as words in `σ_i` and `ρ^a_i`.
fn mkvp_dictionary(n: i32, k: i32) -> Dictionary {
    let mut entries = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            if j == i {
                continue;
            }
            let (p, q) = (i.min(j), i.max(j));
            let base = if i < j {
                // λ^0_{p,p+1} = ρ_p σ_p⁻¹
                rho(p, 0).concat(&sig(p).inverse())
            } else {
                // λ^0_{p+1,p} = σ_p⁻¹ ρ_p
                sig(p).inverse().concat(&rho(p, 0))
            };
            entries.push(DictEntry {
                name: GeneratorId::lambda3(i, j, 0),
                expansion: rho_chain_conjugate(&base, p, q),
                swap_inverts: false,
            });
        }
    }
    for b in 1..k {
        for i in 1..=n {
            for j in i + 1..=n {
                let base = rho(i, 0).concat(&rho(i, b));
                entries.push(DictEntry {
                    name: GeneratorId::lambda3(i, j, b),
                    expansion: rho_chain_conjugate(&base, i, j),
                    swap_inverts: true,
                });
            }
        }
    }
    Dictionary {
        key: format!("MkVP({n},{k})"),
        entries,
    }
}

/// Dictionary for the semi-pure kernel of `M_kVB_n`.
fn mkvh_dictionary(n: i32, k: i32) -> Dictionary {
    let mut entries = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            if j == i {
                continue;
            }
            let (p, q) = (i.min(j), i.max(j));
            let base = if i < j {
                // x^0_{p,p+1} = σ_p⁻¹
                sig(p).inverse()
            } else {
                // x^0_{p+1,p} = ρ_p σ_p⁻¹ ρ_p
                Word::product([&rho(p, 0), &sig(p).inverse(), &rho(p, 0)])
            };
            entries.push(DictEntry {
                name: GeneratorId::x3(i, j, 0),
                expansion: rho_chain_conjugate(&base, p, q),
                swap_inverts: false,
            });
        }
    }
    for b in 1..k {
        for i in 1..=n {
            for j in i + 1..=n {
                let base = rho(i, 0).concat(&rho(i, b));
                entries.push(DictEntry {
                    name: GeneratorId::x3(i, j, b),
                    expansion: rho_chain_conjugate(&base, i, j),
                    swap_inverts: true,
                });
            }
        }
    }
    Dictionary {
        key: format!("MkVH({n},{k})"),
        entries,
    }
}

fn parsed_entry(name: GeneratorId, expansion: &str, swap_inverts: bool) -> DictEntry {
    DictEntry {
        name,
        expansion: Word::parse(expansion).expect("fixed dictionary expansions parse"),
        swap_inverts,
    }
}

fn mvp3_dictionary() -> Dictionary {
    let entries = vec![
        parsed_entry(GeneratorId::lambda2(1, 2), "r1 s1^-1", false),
        parsed_entry(GeneratorId::lambda2(2, 1), "s1^-1 r1", false),
        parsed_entry(GeneratorId::lambda2(2, 3), "r2 s2^-1", false),
        parsed_entry(GeneratorId::lambda2(3, 2), "s2^-1 r2", false),
        parsed_entry(GeneratorId::lambda2(1, 3), "r2 r1 s1^-1 r2", false),
        parsed_entry(GeneratorId::lambda2(3, 1), "r2 s1^-1 r1 r2", false),
        parsed_entry(GeneratorId::mu(1, 2), "r1 t1", true),
        parsed_entry(GeneratorId::mu(2, 3), "r2 t2", true),
        parsed_entry(GeneratorId::mu(1, 3), "r2 r1 t1 r2", true),
    ];
    Dictionary {
        key: "MVP3".to_string(),
        entries,
    }
}

fn mvh3_x_entries() -> Vec<DictEntry> {
    vec![
        parsed_entry(GeneratorId::x2(1, 2), "s1", false),
        parsed_entry(GeneratorId::x2(2, 3), "s2", false),
        parsed_entry(GeneratorId::x2(1, 3), "r2 s1 r2", false),
        parsed_entry(GeneratorId::x2(2, 1), "r1 s1 r1", false),
        parsed_entry(GeneratorId::x2(3, 2), "r2 s2 r2", false),
        parsed_entry(GeneratorId::x2(3, 1), "r2 r1 s1 r1 r2", false),
    ]
}

fn mvh3_dictionary() -> Dictionary {
    let mut entries = mvh3_x_entries();
    entries.extend([
        parsed_entry(GeneratorId::z(1, 2), "r1 t1", true),
        parsed_entry(GeneratorId::z(2, 3), "r2 t2", true),
        parsed_entry(GeneratorId::z(1, 3), "r2 r1 t1 r2", true),
    ]);
    Dictionary {
        key: "MVH3".to_string(),
        entries,
    }
}

fn mvq3_y_entries() -> Vec<DictEntry> {
    vec![
        parsed_entry(GeneratorId::y(1, 2), "t1", false),
        parsed_entry(GeneratorId::y(2, 3), "t2", false),
        parsed_entry(GeneratorId::y(1, 3), "r2 t1 r2", false),
        parsed_entry(GeneratorId::y(2, 1), "r1 t1 r1", false),
        parsed_entry(GeneratorId::y(3, 2), "r2 t2 r2", false),
        parsed_entry(GeneratorId::y(3, 1), "r2 r1 t1 r1 r2", false),
    ]
}

fn mvq3_dictionary() -> Dictionary {
    let mut entries = mvh3_x_entries();
    entries.extend(mvq3_y_entries());
    Dictionary {
        key: "MVQ3".to_string(),
        entries,
    }
}

fn mvc3_dictionary() -> Dictionary {
    let mut entries = mvp3_dictionary().entries;
    entries.retain(
        |e| matches!(&e.name, GeneratorId::Atom { family, .. } if *family == Family::Lambda),
    );
    entries.extend(mvq3_y_entries());
    Dictionary {
        key: "MVC3".to_string(),
        entries,
    }
}

/// Build the generator dictionary `key` with parameters `n` and `k`.
///
/// `MkVP` and `MkVH` are parametric; the fixed dictionaries (`MVP3`, `MVH3`,
/// `MVQ3`, `MVC3`) require `(n, k) = (3, 2)`.
pub fn build_dictionary(key: &str, n: usize, k: usize) -> Result<Dictionary> {
    if !dictionary_keys().contains(&key) {
        return Err(Error::UnknownCatalogKey {
            key: key.to_string(),
            hint: format!("; known dictionary keys: {}", dictionary_keys().join(", ")),
        });
    }
    if n < 2 || k < 1 {
        return Err(bad_params(key, n, k, "need n >= 2 and k >= 1"));
    }
    let fixed = ["MVP3", "MVH3", "MVQ3", "MVC3"];
    if fixed.contains(&key) && (n, k) != (3, 2) {
        return Err(bad_params(
            key,
            n,
            k,
            "this dictionary is fixed at (n, k) = (3, 2)",
        ));
    }
    Ok(match key {
        "MkVP" => mkvp_dictionary(n as i32, k as i32),
        "MkVH" => mkvh_dictionary(n as i32, k as i32),
        "MVP3" => mvp3_dictionary(),
        "MVH3" => mvh3_dictionary(),
        "MVQ3" => mvq3_dictionary(),
        "MVC3" => mvc3_dictionary(),
        _ => unreachable!("key membership checked above"),
    })
}

// ---------------------------------------------------------------------------
// Standard homomorphisms.
// ---------------------------------------------------------------------------

/// A standard map out of a catalog group: either permutation-valued or
/// word-valued.
#[derive(Debug, Clone)]
pub enum HomSpec {
    /// Images are permutations.
    Perm(PermHom),
    /// Images are words in a target presentation.
    Word(WordHom),
}

/// All valid keys for [`build_hom`], in display order.
pub fn hom_keys() -> &'static [&'static str] {
    &[
        "phi", "psi", "chi3", "chi4", "psi1", "iota1", "psi2", "iota2", "psi3", "iota3",
    ]
}

/// Build the standard homomorphism `key` for parameters `n` and `k`.
///
/// Permutation-valued maps out of `M_kVB_n` into `S_n`:
///
/// * `phi`: `σ_i ↦ (i, i+1)`, `ρ^a_i ↦ (i, i+1)` — its kernel is the pure
///   subgroup.
/// * `psi`: `σ_i ↦ id`, `ρ^a_i ↦ (i, i+1)` — its kernel is the semi-pure
///   subgroup.
/// * `chi3`: `σ_i ↦ id`, `ρ^0_i ↦ (i, i+1)`, other sorts to `id`.
/// * `chi4`: `σ_i ↦ (i, i+1)`, `ρ^0_i ↦ (i, i+1)`, other sorts to `id`.
///
/// Word-valued retraction pairs (`psi*` projects, `iota*` includes):
///
/// * `psi1`/`iota1` between `M_kVB_n` and `VB(n) = MkVB(n, 1)`: sorts above
///   0 are killed.
/// * `psi2`/`iota2` between `M_kVB_n` (k >= 2) and `FVB(n)`: `σ` is killed,
///   sort 0 goes to the virtual generators, sort 1 to the `c_i`.
/// * `psi3`/`iota3` between `M_kVB_n(k+1 sorts)` and `M_kVB_n(k sorts)`:
///   the top sort is killed.
pub fn build_hom(key: &str, n: usize, k: usize) -> Result<HomSpec> {
    if !hom_keys().contains(&key) {
        return Err(Error::UnknownCatalogKey {
            key: key.to_string(),
            hint: format!("; known homomorphism keys: {}", hom_keys().join(", ")),
        });
    }
    if n < 2 || k < 1 {
        return Err(bad_params(key, n, k, "need n >= 2 and k >= 1"));
    }
    if ["psi2", "iota2"].contains(&key) && k < 2 {
        return Err(bad_params(
            key,
            n,
            k,
            "this map needs at least two virtual sorts",
        ));
    }
    let ni = n as i32;
    let ki = k as i32;
    let name = format!("{key}({n},{k})");
    let spec = match key {
        "phi" | "psi" | "chi3" | "chi4" => {
            let mut images: BTreeMap<GeneratorId, Perm> = BTreeMap::new();
            for i in 1..ni {
                let t = Perm::transposition(n, i as usize, i as usize + 1)?;
                let id = Perm::identity(n);
                let sigma_img = match key {
                    "phi" | "chi4" => t.clone(),
                    _ => id.clone(),
                };
                images.insert(GeneratorId::sigma(i), sigma_img);
                for a in 0..ki {
                    let rho_img = match key {
                        "phi" | "psi" => t.clone(),
                        _ if a == 0 => t.clone(),
                        _ => id.clone(),
                    };
                    images.insert(GeneratorId::rho(i, a), rho_img);
                }
            }
            HomSpec::Perm(PermHom::new(&name, n, images)?)
        }
        "psi1" => {
            let mut images: BTreeMap<GeneratorId, Word> = BTreeMap::new();
            for i in 1..ni {
                images.insert(GeneratorId::sigma(i), sig(i));
                images.insert(GeneratorId::rho(i, 0), rho(i, 0));
                for a in 1..ki {
                    images.insert(GeneratorId::rho(i, a), Word::identity());
                }
            }
            HomSpec::Word(WordHom::new(&name, images))
        }
        "iota1" => {
            let mut images: BTreeMap<GeneratorId, Word> = BTreeMap::new();
            for i in 1..ni {
                images.insert(GeneratorId::sigma(i), sig(i));
                images.insert(GeneratorId::rho(i, 0), rho(i, 0));
            }
            HomSpec::Word(WordHom::new(&name, images))
        }
        "psi2" => {
            let mut images: BTreeMap<GeneratorId, Word> = BTreeMap::new();
            for i in 1..ni {
                images.insert(GeneratorId::sigma(i), Word::identity());
                images.insert(GeneratorId::rho(i, 0), rho(i, 0));
                images.insert(
                    GeneratorId::rho(i, 1),
                    Word::gen(GeneratorId::user("c", &[i])),
                );
                for a in 2..ki {
                    images.insert(GeneratorId::rho(i, a), Word::identity());
                }
            }
            HomSpec::Word(WordHom::new(&name, images))
        }
        "iota2" => {
            let mut images: BTreeMap<GeneratorId, Word> = BTreeMap::new();
            for i in 1..ni {
                images.insert(GeneratorId::user("c", &[i]), rho(i, 1));
                images.insert(GeneratorId::rho(i, 0), rho(i, 0));
            }
            HomSpec::Word(WordHom::new(&name, images))
        }
        "psi3" => {
            // Domain: M_kVB_n with k+1 sorts; the top sort is killed.
            let mut images: BTreeMap<GeneratorId, Word> = BTreeMap::new();
            for i in 1..ni {
                images.insert(GeneratorId::sigma(i), sig(i));
                for a in 0..ki {
                    images.insert(GeneratorId::rho(i, a), rho(i, a));
                }
                images.insert(GeneratorId::rho(i, ki), Word::identity());
            }
            HomSpec::Word(WordHom::new(&name, images))
        }
        "iota3" => {
            let mut images: BTreeMap<GeneratorId, Word> = BTreeMap::new();
            for i in 1..ni {
                images.insert(GeneratorId::sigma(i), sig(i));
                for a in 0..ki {
                    images.insert(GeneratorId::rho(i, a), rho(i, a));
                }
            }
            HomSpec::Word(WordHom::new(&name, images))
        }
        _ => unreachable!("key membership checked above"),
    };
    Ok(spec)
}
