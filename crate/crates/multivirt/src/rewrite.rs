//! Rewriting words of a finite-index subgroup over Schreier generators.
//!
//! Given a complete coset table and a Schreier transversal, every pair of a
//! coset `c` and an ambient generator `a` yields a subgroup element
//!
//! ```text
//! s(c, a) = rep(c) · a · rep(c·a)⁻¹
//! ```
//!
//! kept here as a freely reduced word (the *expansion* of the symbol
//! `S[c;a]`). A symbol is **trivial** exactly when its expansion reduces to
//! the empty word; trivial symbols are dropped from all rewriting output.
//! Prefix steps along transversal representatives always give trivial
//! symbols, but symbols off the representative tree can be freely
//! non-trivial even when they happen to equal the identity in the group —
//! those die later, during simplification, through derived relators.
//!
//! [`tau_rewrite`] rewrites any word lying in the subgroup (tracing from
//! coset 0 back to coset 0) into a word over the non-trivial symbols, and
//! [`derive_subgroup_presentation`] assembles the full subgroup presentation
//! from rewritten relator conjugates.

use std::collections::BTreeMap;

use crate::coset::{CosetTable, Transversal};
use crate::error::Error;
use crate::presentation::Presentation;
use crate::word::{GeneratorId, Letter, Relator, Sign, Word};
use crate::Result;

/// All Schreier symbols with their expansions, coset-major and
/// declared-generator-minor: `S[0;g1], S[0;g2], ..., S[1;g1], ...`.
///
/// Trivial symbols (empty expansion) are included; filter with
/// [`nontrivial_schreier_generators`] when only the surviving alphabet is
/// wanted.
pub fn schreier_generators(
    table: &CosetTable,
    transversal: &Transversal,
) -> Result<Vec<(GeneratorId, Word)>> {
    check_compatible(table, transversal)?;
    let mut out = Vec::with_capacity(table.degree() * table.generators().len());
    for c in 0..table.degree() {
        for g in table.generators() {
            let target = table.apply_gen(c, g, Sign::Pos)?;
            let expansion = Word::product([
                transversal.representative(c),
                &Word::gen(g.clone()),
                &transversal.representative(target).inverse(),
            ]);
            out.push((GeneratorId::schreier(c, g.clone()), expansion));
        }
    }
    Ok(out)
}

/// The non-trivial Schreier symbols with their expansions, in the same order
/// as [`schreier_generators`].
pub fn nontrivial_schreier_generators(
    table: &CosetTable,
    transversal: &Transversal,
) -> Result<Vec<(GeneratorId, Word)>> {
    Ok(schreier_generators(table, transversal)?
        .into_iter()
        .filter(|(_, expansion)| !expansion.is_empty())
        .collect())
}

fn check_compatible(table: &CosetTable, transversal: &Transversal) -> Result<()> {
    if transversal.degree() != table.degree() {
        return Err(Error::IncompatibleTable {
            reason: format!(
                "transversal has {} representatives but table has {} cosets",
                transversal.degree(),
                table.degree()
            ),
        });
    }
    Ok(())
}

/// Rewrite a subgroup element into Schreier symbols.
///
/// The word must trace from coset 0 back to coset 0; otherwise it does not
/// lie in the subgroup and an error naming the final coset is returned.
///
/// Positive letters emit the symbol of the coset *before* the letter;
/// negative letters first move to the new coset and then emit that coset's
/// symbol inverted. Trivial symbols are skipped. Substituting every symbol's
/// expansion back into the result recovers the input word freely.
pub fn tau_rewrite(table: &CosetTable, transversal: &Transversal, w: &Word) -> Result<Word> {
    check_compatible(table, transversal)?;
    let trivial = trivial_symbol_set(table, transversal)?;
    let mut out: Vec<Letter> = Vec::new();
    let mut c = 0usize;
    for l in w.letters() {
        match l.sign {
            Sign::Pos => {
                let sym = GeneratorId::schreier(c, l.gen.clone());
                if !trivial.contains_key(&sym) {
                    out.push(Letter::pos(sym));
                }
                c = table.apply_letter(c, l)?;
            }
            Sign::Neg => {
                c = table.apply_letter(c, l)?;
                let sym = GeneratorId::schreier(c, l.gen.clone());
                if !trivial.contains_key(&sym) {
                    out.push(Letter::neg(sym));
                }
            }
        }
    }
    if c != 0 {
        return Err(Error::IncompatibleTable {
            reason: format!(
                "word `{w}` does not lie in the subgroup: it traces from coset 0 to coset {c}"
            ),
        });
    }
    Ok(Word::from_letters(out))
}

/// Map of trivial symbols (empty expansion) to unit; used to skip them.
fn trivial_symbol_set(
    table: &CosetTable,
    transversal: &Transversal,
) -> Result<BTreeMap<GeneratorId, ()>> {
    let mut map = BTreeMap::new();
    for (sym, expansion) in schreier_generators(table, transversal)? {
        if expansion.is_empty() {
            map.insert(sym, ());
        }
    }
    Ok(map)
}

/// Derive a presentation of the subgroup described by `table` inside the
/// group presented by `ambient`.
///
/// * Generators: the non-trivial Schreier symbols, coset-major.
/// * Relators: for every transversal representative `rep(c)` (in transversal
///   enumeration order) and every ambient relator `r` (in declaration
///   order), the canonical form of `tau(rep(c) · r · rep(c)⁻¹)`; empty
///   results are dropped and duplicates keep their first occurrence.
///
/// Returns the presentation together with the expansion map of its
/// generators (symbol → freely reduced ambient word).
pub fn derive_subgroup_presentation(
    ambient: &Presentation,
    table: &CosetTable,
    transversal: &Transversal,
) -> Result<(Presentation, BTreeMap<GeneratorId, Word>)> {
    check_compatible(table, transversal)?;
    let symbols = nontrivial_schreier_generators(table, transversal)?;
    let generators: Vec<GeneratorId> = symbols.iter().map(|(g, _)| g.clone()).collect();
    let expansions: BTreeMap<GeneratorId, Word> = symbols.into_iter().collect();

    let mut relators: Vec<Relator> = Vec::new();
    let mut seen: std::collections::BTreeSet<Relator> = std::collections::BTreeSet::new();
    for &c in transversal.enumeration_order() {
        let rep = transversal.representative(c);
        for r in ambient.relators() {
            let conjugate = r.word().conjugated_by(rep);
            let rewritten = tau_rewrite(table, transversal, &conjugate)?;
            let canonical = Relator::new(&rewritten);
            if canonical.is_trivial() {
                continue;
            }
            if seen.insert(canonical.clone()) {
                relators.push(canonical);
            }
        }
    }
    let name = format!("{}.sub", ambient.name());
    let p = Presentation::from_relators(&name, generators, relators)?;
    Ok((p, expansions))
}
