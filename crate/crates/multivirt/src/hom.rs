//! Homomorphisms out of finitely presented groups.
//!
//! Two value types are supported: permutation-valued maps ([`PermHom`]) used
//! to cut out finite-index kernels, and word-valued maps ([`WordHom`]) used
//! for retractions and inclusions between presented groups.  Both are plain
//! generator-image tables; well-definedness is a theorem to be *checked*
//! against a presentation, not an invariant of the type.

use std::collections::BTreeMap;

use crate::error::Error;
use crate::perm::{evaluate, Perm};
use crate::presentation::Presentation;
use crate::word::{GeneratorId, Relator, Word};
use crate::Result;

/// A generator-image table into a symmetric group `S_degree`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermHom {
    /// Display name of the map.
    pub name: String,
    /// Degree of the target symmetric group.
    pub degree: usize,
    /// Image of each generator.
    pub images: BTreeMap<GeneratorId, Perm>,
}

impl PermHom {
    /// Build the table, rejecting images whose degree disagrees.
    pub fn new(name: &str, degree: usize, images: BTreeMap<GeneratorId, Perm>) -> Result<Self> {
        for (g, p) in &images {
            if p.degree() != degree {
                return Err(Error::InvalidPermutation {
                    reason: format!(
                        "image of `{g}` has degree {}, expected {degree}",
                        p.degree()
                    ),
                });
            }
        }
        Ok(PermHom {
            name: name.to_string(),
            degree,
            images,
        })
    }

    /// Image of an arbitrary word (left-to-right composition).
    pub fn apply(&self, w: &Word) -> Result<Perm> {
        evaluate(w, &self.images, self.degree)
    }
}

/// A generator-image table into the free group over another generator set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WordHom {
    /// Display name of the map.
    pub name: String,
    /// Image of each generator.
    pub images: BTreeMap<GeneratorId, Word>,
}

impl WordHom {
    /// Build the table; images are checked lazily at application time.
    pub fn new(name: &str, images: BTreeMap<GeneratorId, Word>) -> Self {
        WordHom {
            name: name.to_string(),
            images,
        }
    }

    /// Image of a word: substitute each letter and freely reduce.  Errors on
    /// a letter with no image row.
    pub fn apply(&self, w: &Word) -> Result<Word> {
        for g in w.support() {
            if !self.images.contains_key(&g) {
                return Err(Error::MissingImage {
                    generator: g.to_string(),
                });
            }
        }
        Ok(w.substitute(&self.images))
    }
}

/// All relators of `p` whose image under `h` is not the identity permutation,
/// paired with that offending image.  Empty means the map is well-defined.
pub fn well_defined_report(p: &Presentation, h: &PermHom) -> Result<Vec<(Relator, Perm)>> {
    let mut failures = Vec::new();
    for r in p.relators() {
        let image = h.apply(r.word())?;
        if !image.is_identity() {
            failures.push((r.clone(), image));
        }
    }
    Ok(failures)
}

/// Check that every relator of `p` maps to the identity under `h`; the first
/// failure is reported as [`Error::NotWellDefined`].
pub fn check_well_defined(p: &Presentation, h: &PermHom) -> Result<()> {
    let failures = well_defined_report(p, h)?;
    match failures.first() {
        None => Ok(()),
        Some((r, image)) => Err(Error::NotWellDefined {
            relator: r.to_string(),
            image: image.cycle_string(),
        }),
    }
}

/// Check that every relator of `p` maps to a word that is *freely* trivial
/// under the word-valued map `h`.  This is a sufficient syntactic criterion:
/// it certifies well-definedness without consulting the target's relators.
pub fn check_word_map_free(p: &Presentation, h: &WordHom) -> Result<Vec<(Relator, Word)>> {
    let mut failures = Vec::new();
    for r in p.relators() {
        let image = h.apply(r.word())?;
        if !image.is_empty() {
            failures.push((r.clone(), image));
        }
    }
    Ok(failures)
}

/// Result of an action verification: how many (entry, conjugator) pairs
/// were checked and a description of every mismatch.
#[derive(Debug, Clone, Default)]
pub struct ActionReport {
    /// Number of (entry, conjugator) pairs checked.
    pub checked: usize,
    /// Human-readable description of every mismatch.
    pub mismatches: Vec<String>,
}

impl ActionReport {
    /// True when no mismatch was found.
    pub fn ok(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Verify the conjugation action of the sort-0 involutive generators on a
/// named kernel.
///
/// For every dictionary entry `E` at strand pair `(i, j)` and every ambient
/// generator `a = ρ^0_t` with image `π`, the ambient word `a⁻¹ · E · a` is
/// rewritten into the derived kernel presentation and compared against the
/// entry at `(π(i), π(j))` — taken as an inverse when the entry's
/// `swap_inverts` convention says a reversed pair denotes one.
pub fn verify_action(
    derivation: &crate::pipeline::Derivation,
    dict: &crate::catalog::Dictionary,
) -> Result<ActionReport> {
    use crate::word::{Family, Sign};

    let conjugators: Vec<GeneratorId> = derivation
        .ambient
        .generators()
        .iter()
        .filter(|g| {
            matches!(g, GeneratorId::Atom { family, indices }
                     if *family == Family::Rho && indices.len() == 2 && indices[1] == 0)
        })
        .cloned()
        .collect();

    let mut report = ActionReport::default();
    for entry in &dict.entries {
        let GeneratorId::Atom { family, indices } = &entry.name else {
            return Err(Error::ActionMismatch {
                entry: entry.name.to_string(),
                generator: "-".to_string(),
                reason: "dictionary names must be indexed atoms".to_string(),
            });
        };
        if indices.len() < 2 {
            return Err(Error::ActionMismatch {
                entry: entry.name.to_string(),
                generator: "-".to_string(),
                reason: "dictionary names need two strand indices".to_string(),
            });
        }
        let (i, j) = (indices[0], indices[1]);
        for a in &conjugators {
            let pi = derivation
                .hom
                .images
                .get(a)
                .ok_or_else(|| Error::MissingImage {
                    generator: a.to_string(),
                })?;
            let p = pi.apply(i as usize) as i32;
            let q = pi.apply(j as usize) as i32;
            let mut permuted = indices.clone();
            let sign = if entry.swap_inverts && p > q {
                permuted[0] = q;
                permuted[1] = p;
                Sign::Neg
            } else {
                permuted[0] = p;
                permuted[1] = q;
                Sign::Pos
            };
            let target = GeneratorId::Atom {
                family: family.clone(),
                indices: permuted,
            };
            if dict.lookup(&target).is_none() {
                report.mismatches.push(format!(
                    "a = {a}: {} should map to the pair ({p}, {q}), but no \
                     dictionary entry covers it",
                    entry.name
                ));
                report.checked += 1;
                continue;
            }
            let expected = Word::letter(crate::word::Letter { gen: target, sign });
            // The lemma form is a⁻¹ · E · a.
            let conjugated = entry
                .expansion
                .conjugated_by(&Word::gen(a.clone()).inverse());
            let got = derivation.rewrite_ambient_word_to_final(&conjugated)?;
            report.checked += 1;
            if got != expected {
                report.mismatches.push(format!(
                    "a = {a}: {} ↦ expected {expected}, got {got}",
                    entry.name
                ));
            }
        }
    }
    Ok(report)
}

/// Check that `project . include` is the identity on the generators of
/// `source` (the domain of `include`): for every generator `g` the word
/// `project(include(g))` must freely reduce to `g` itself.  Returns the list
/// of generators where that fails, with the word obtained instead.
pub fn check_retraction(
    source: &Presentation,
    include: &WordHom,
    project: &WordHom,
) -> Result<Vec<(GeneratorId, Word)>> {
    let mut failures = Vec::new();
    for g in source.generators() {
        let through = project.apply(&include.apply(&Word::gen(g.clone()))?)?;
        if through != Word::gen(g.clone()) {
            failures.push((g.clone(), through));
        }
    }
    Ok(failures)
}
