//! The end-to-end kernel derivation pipeline.
//!
//! Given an ambient presentation and a permutation-valued homomorphism, the
//! pipeline cuts out the kernel's coset table, fixes a Schreier transversal,
//! rewrites the ambient relators into a raw subgroup presentation, simplifies
//! it by Tietze transformations, and finally renames the surviving machine
//! generators through a [`Dictionary`] of named kernel generators.
//!
//! Every stage's output is kept on the resulting [`Derivation`] so that the
//! whole computation can be audited, exported, or replayed.

use std::collections::BTreeMap;

use crate::catalog::Dictionary;
use crate::coset::{
    kernel_coset_table, schreier_transversal, CosetTable, Transversal, TransversalStrategy,
};
use crate::error::Error;
use crate::hom::PermHom;
use crate::presentation::Presentation;
use crate::rewrite::{derive_subgroup_presentation, tau_rewrite};
use crate::tietze::{involution_normalize, simplify};
use crate::word::{GeneratorId, Letter, Word};
use crate::Result;

/// A fully audited kernel derivation.
#[derive(Debug, Clone)]
pub struct Derivation {
    /// The ambient presentation the kernel lives in.
    pub ambient: Presentation,
    /// The permutation-valued map whose kernel was derived.
    pub hom: PermHom,
    /// Coset table of the kernel (coset 0 is the subgroup itself).
    pub table: CosetTable,
    /// The Schreier transversal used for rewriting.
    pub transversal: Transversal,
    /// Machine generator -> ambient word `rep(c) · a · rep(c·a)⁻¹`.
    pub expansions: BTreeMap<GeneratorId, Word>,
    /// The rewritten subgroup presentation before any simplification.
    pub raw: Presentation,
    /// The simplified presentation, still on machine generators.
    pub simplified: Presentation,
    /// Composed eliminations: eliminated machine generator -> word over the
    /// machine generators that survive in `simplified`.
    pub eliminations: BTreeMap<GeneratorId, Word>,
    /// Machine survivor -> the named letter it was renamed to.
    pub renames: BTreeMap<GeneratorId, Letter>,
    /// The final presentation, over dictionary names where available.
    pub final_presentation: Presentation,
    /// True if any simplification step skipped an elimination because the
    /// substituted relators would have exceeded the length ceiling.
    pub hit_length_ceiling: bool,
    /// Total simplification passes used across both rounds.
    pub passes_used: usize,
}

impl Derivation {
    /// The index of the kernel, i.e. the number of cosets.
    pub fn index(&self) -> usize {
        self.table.degree()
    }

    fn rename_words(&self) -> BTreeMap<GeneratorId, Word> {
        self.renames
            .iter()
            .map(|(g, l)| (g.clone(), Word::letter(l.clone())))
            .collect()
    }

    /// Express a machine generator (surviving or eliminated) as a word over
    /// the final presentation's generators.
    pub fn resolve_symbol(&self, g: &GeneratorId) -> Result<Word> {
        let over_survivors = if let Some(value) = self.eliminations.get(g) {
            value.clone()
        } else if self.simplified.has_generator(g) {
            Word::gen(g.clone())
        } else {
            return Err(Error::UnknownGenerator {
                generator: g.to_string(),
                reason: "not a machine generator of this derivation".to_string(),
            });
        };
        Ok(over_survivors.substitute(&self.rename_words()))
    }

    /// Rewrite an ambient word lying in the kernel into a word over the
    /// final presentation's generators.
    pub fn rewrite_ambient_word_to_final(&self, w: &Word) -> Result<Word> {
        let rewritten = tau_rewrite(&self.table, &self.transversal, w)?;
        let over_survivors = rewritten.substitute(&self.eliminations);
        Ok(over_survivors.substitute(&self.rename_words()))
    }
}

/// Derive the kernel of `hom` inside `ambient`.
///
/// `strategy` fixes the Schreier transversal (the all-`ρ⁰` transversal is
/// the one under which the standard dictionaries resolve to single
/// generators).  `dictionary` optionally renames the surviving machine
/// generators; `budget` bounds each of the two simplification rounds.
pub fn derive(
    ambient: &Presentation,
    hom: &PermHom,
    strategy: &TransversalStrategy,
    dictionary: Option<&Dictionary>,
    budget: usize,
) -> Result<Derivation> {
    let table = kernel_coset_table(ambient, &hom.images)?;
    let transversal = schreier_transversal(&table, strategy)?;
    let (raw, expansions) = derive_subgroup_presentation(ambient, &table, &transversal)?;

    // Simplify, normalize involutions to positive form, simplify again.
    let first = simplify(&raw, budget);
    let (normalized, after_normalize) =
        involution_normalize(&first.presentation, &first.eliminations);
    let second = simplify(&normalized, budget);
    let mut eliminations: BTreeMap<GeneratorId, Word> = after_normalize
        .into_iter()
        .map(|(g, v)| (g, v.substitute(&second.eliminations)))
        .collect();
    eliminations.extend(second.eliminations.clone());
    let simplified = second.presentation;

    // Dictionary naming: every entry must resolve to a single surviving
    // machine letter, and no two entries may hit the same survivor.
    let mut renames: BTreeMap<GeneratorId, Letter> = BTreeMap::new();
    if let Some(dict) = dictionary {
        for entry in &dict.entries {
            let rewritten = tau_rewrite(&table, &transversal, &entry.expansion)?;
            let resolved = rewritten.substitute(&eliminations);
            if resolved.len() != 1 {
                return Err(Error::DictionaryEntry {
                    name: entry.name.to_string(),
                    reason: format!(
                        "expansion `{}` rewrites to `{resolved}`, not a single generator",
                        entry.expansion
                    ),
                });
            }
            let letter = resolved.letters()[0].clone();
            if !simplified.has_generator(&letter.gen) {
                return Err(Error::DictionaryEntry {
                    name: entry.name.to_string(),
                    reason: format!(
                        "resolved to `{}`, which is not a surviving generator",
                        letter.gen
                    ),
                });
            }
            if let Some(previous) = renames.get(&letter.gen) {
                return Err(Error::DictionaryEntry {
                    name: entry.name.to_string(),
                    reason: format!(
                        "survivor `{}` is already named `{}`",
                        letter.gen, previous.gen
                    ),
                });
            }
            // resolved = survivor^sign, so survivor = name^sign.
            renames.insert(
                letter.gen.clone(),
                Letter {
                    gen: entry.name.clone(),
                    sign: letter.sign,
                },
            );
        }
    }

    let final_presentation = apply_renames(&simplified, &renames, dictionary)?;

    Ok(Derivation {
        ambient: ambient.clone(),
        hom: hom.clone(),
        table,
        transversal,
        expansions,
        raw,
        simplified,
        eliminations,
        renames,
        final_presentation,
        hit_length_ceiling: first.hit_length_ceiling || second.hit_length_ceiling,
        passes_used: first.passes_used + second.passes_used,
    })
}

fn apply_renames(
    simplified: &Presentation,
    renames: &BTreeMap<GeneratorId, Letter>,
    dictionary: Option<&Dictionary>,
) -> Result<Presentation> {
    if renames.is_empty() {
        return Ok(simplified.clone());
    }
    let substitution: BTreeMap<GeneratorId, Word> = renames
        .iter()
        .map(|(g, l)| (g.clone(), Word::letter(l.clone())))
        .collect();
    let generators: Vec<GeneratorId> = simplified
        .generators()
        .iter()
        .map(|g| match renames.get(g) {
            Some(l) => l.gen.clone(),
            None => g.clone(),
        })
        .collect();
    let relators: Vec<Word> = simplified
        .relators()
        .iter()
        .map(|r| r.word().substitute(&substitution))
        .collect();
    let name = match dictionary {
        Some(d) => format!("{}[{}]", simplified.name(), d.key),
        None => simplified.name().to_string(),
    };
    Presentation::new(&name, generators, &relators)
}
