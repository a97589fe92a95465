//! Tietze transformations: generator elimination, deterministic
//! simplification, involution-aware sign normalization, multiset relator
//! comparison, and generator renaming.
//!
//! The simplification loop is fully deterministic:
//!
//! 1. drop empty relators, then duplicate relators (keeping first),
//! 2. repeatedly eliminate generators defined by length-1 relators (`g = 1`)
//!    and length-2 relators on two distinct generators (`g = h^±1`), always
//!    removing the **latest-declared** generator of a pair so that
//!    early-declared symbols survive as class representatives,
//! 3. perform at most one elimination through the shortest relator
//!    containing some generator exactly once (within it, the latest-declared
//!    such generator), skipping any candidate whose substitution would push
//!    a relator beyond [`RELATOR_LENGTH_CEILING`] letters,
//! 4. repeat until a pass changes nothing or the pass budget is exhausted.
//!
//! Every elimination is recorded in a composed map from the eliminated
//! generator to a word over the *surviving* generators.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::Error;
use crate::presentation::Presentation;
use crate::word::{GeneratorId, Relator, Sign, Word};
use crate::Result;

/// Longest relator (in letters) that an elimination is allowed to create.
pub const RELATOR_LENGTH_CEILING: usize = 512;

/// Default pass budget for [`simplify`].
pub const DEFAULT_SIMPLIFY_BUDGET: usize = 100;

/// Result of a simplification run.
#[derive(Clone, Debug)]
pub struct SimplifyResult {
    /// The simplified presentation.
    pub presentation: Presentation,
    /// Eliminated generator → defining word over the surviving generators.
    pub eliminations: BTreeMap<GeneratorId, Word>,
    /// True if some elimination was skipped to respect the length ceiling.
    pub hit_length_ceiling: bool,
    /// Passes actually executed.
    pub passes_used: usize,
}

/// Eliminate `g` from the presentation using a relator that contains it
/// exactly once (the shortest such relator; ties keep declaration order).
///
/// Returns the reduced presentation and the expression of `g` as a word in
/// the remaining generators.
pub fn eliminate_generator(p: &Presentation, g: &GeneratorId) -> Result<(Presentation, Word)> {
    if !p.has_generator(g) {
        return Err(Error::UnknownGenerator {
            generator: g.to_string(),
            reason: format!("not a generator of `{}`", p.name()),
        });
    }
    let mut best: Option<(usize, usize)> = None; // (length, relator index)
    for (i, r) in p.relators().iter().enumerate() {
        if r.word().occurrences(g) == 1 {
            let len = r.len();
            if best.is_none_or(|(blen, _)| len < blen) {
                best = Some((len, i));
            }
        }
    }
    let Some((_, idx)) = best else {
        return Err(Error::BadElimination {
            generator: g.to_string(),
            reason: "no relator contains it exactly once".into(),
        });
    };
    let expression = solve_for(p.relators()[idx].word(), g);
    let presentation = perform_elimination(p, g, idx, &expression)?;
    Ok((presentation, expression))
}

/// Solve `r = 1` for `g`, where `g` occurs exactly once in `r`.
fn solve_for(r: &Word, g: &GeneratorId) -> Word {
    let pos = r
        .letters()
        .iter()
        .position(|l| &l.gen == g)
        .expect("generator occurs in relator");
    // Rotate so the g-letter is first: g^e · w = 1, hence
    // g = w⁻¹ if e = +1, and g = w if e = −1.
    let mut rotated: Vec<_> = r.letters()[pos..].to_vec();
    rotated.extend_from_slice(&r.letters()[..pos]);
    let sign = rotated[0].sign;
    let w = Word::from_letters(rotated[1..].iter().cloned());
    match sign {
        Sign::Pos => w.inverse(),
        Sign::Neg => w,
    }
}

/// Remove `g` and relator `idx`, substituting `expression` for `g` everywhere.
fn perform_elimination(
    p: &Presentation,
    g: &GeneratorId,
    idx: usize,
    expression: &Word,
) -> Result<Presentation> {
    let mut map = BTreeMap::new();
    map.insert(g.clone(), expression.clone());
    let generators: Vec<GeneratorId> = p.generators().iter().filter(|h| *h != g).cloned().collect();
    let relators: Vec<Relator> = p
        .relators()
        .iter()
        .enumerate()
        .filter(|(i, _)| *i != idx)
        .map(|(_, r)| Relator::new(&r.word().substitute(&map)))
        .collect();
    Presentation::from_relators(p.name(), generators, relators)
}

/// Record an elimination into the composed map.
fn record_elimination(
    eliminations: &mut BTreeMap<GeneratorId, Word>,
    g: &GeneratorId,
    expression: &Word,
) {
    let mut single = BTreeMap::new();
    single.insert(g.clone(), expression.clone());
    for value in eliminations.values_mut() {
        *value = value.substitute(&single);
    }
    eliminations.insert(g.clone(), expression.clone());
}

/// Deterministic simplification; see the module docs for the pass structure.
pub fn simplify(p: &Presentation, budget: usize) -> SimplifyResult {
    let mut pres = p.clone();
    let mut eliminations: BTreeMap<GeneratorId, Word> = BTreeMap::new();
    let mut hit_ceiling = false;
    let mut passes_used = 0;

    for _ in 0..budget {
        passes_used += 1;
        let mut changed = false;

        // Drop empties and duplicates.
        let cleaned = pres.without_trivial_relators().with_deduped_relators();
        if cleaned != pres {
            pres = cleaned;
            changed = true;
        }

        // Exhaust length-1 and length-2 eliminations.
        while let Some((g, expression, idx)) = find_short_elimination(&pres) {
            pres = perform_elimination(&pres, &g, idx, &expression)
                .expect("short elimination preserves validity");
            record_elimination(&mut eliminations, &g, &expression);
            pres = pres.without_trivial_relators().with_deduped_relators();
            changed = true;
        }

        // One longer elimination through a single-occurrence relator.
        match find_single_occurrence_elimination(&pres) {
            SingleOccurrence::Found { g, expression, idx } => {
                pres = perform_elimination(&pres, &g, idx, &expression)
                    .expect("single-occurrence elimination preserves validity");
                record_elimination(&mut eliminations, &g, &expression);
                changed = true;
            }
            SingleOccurrence::SkippedForLength => {
                hit_ceiling = true;
            }
            SingleOccurrence::None => {}
        }

        if !changed {
            break;
        }
    }

    SimplifyResult {
        presentation: pres,
        eliminations,
        hit_length_ceiling: hit_ceiling,
        passes_used,
    }
}

/// Find a generator defined by a length-1 relator (`g = 1`) or a length-2
/// relator on distinct generators (`g = h^±1`), scanning relators in order.
/// For a pair, the latest-declared generator is eliminated.
fn find_short_elimination(p: &Presentation) -> Option<(GeneratorId, Word, usize)> {
    for (idx, r) in p.relators().iter().enumerate() {
        let letters = r.word().letters();
        match letters.len() {
            1 => {
                let g = letters[0].gen.clone();
                return Some((g, Word::identity(), idx));
            }
            2 => {
                let (a, b) = (&letters[0], &letters[1]);
                if a.gen == b.gen {
                    continue; // g·g (involution relator): not an elimination
                }
                // Whole relator is a·b = 1. Eliminate the later-declared one.
                let ia = p.generator_index(&a.gen).expect("validated relator");
                let ib = p.generator_index(&b.gen).expect("validated relator");
                let (target, other) = if ia > ib { (a, b) } else { (b, a) };
                // target^t · other^o = 1 (cyclic rotation is harmless):
                // target = other^{-o} if t = +1, target = other^{o} if t = −1.
                let expr_sign = match target.sign {
                    Sign::Pos => other.sign.flip(),
                    Sign::Neg => other.sign,
                };
                let expression = Word::letter(crate::word::Letter {
                    gen: other.gen.clone(),
                    sign: expr_sign,
                });
                return Some((target.gen.clone(), expression, idx));
            }
            _ => {}
        }
    }
    None
}

enum SingleOccurrence {
    Found {
        g: GeneratorId,
        expression: Word,
        idx: usize,
    },
    SkippedForLength,
    None,
}

/// Choose one elimination through a relator containing some generator
/// exactly once: shortest relator first (ties by declaration order), and
/// within a relator the latest-declared single-occurrence generator.
/// Candidates whose substitution would exceed the length ceiling are
/// skipped (recorded via [`SingleOccurrence::SkippedForLength`]).
fn find_single_occurrence_elimination(p: &Presentation) -> SingleOccurrence {
    let mut candidates: Vec<(usize, usize)> = p
        .relators()
        .iter()
        .enumerate()
        .filter(|(_, r)| r.len() >= 3)
        .filter(|(_, r)| r.support().iter().any(|g| r.word().occurrences(g) == 1))
        .map(|(i, r)| (r.len(), i))
        .collect();
    candidates.sort();
    let mut skipped = false;
    for (_, idx) in candidates {
        let r = &p.relators()[idx];
        // Latest-declared single-occurrence generators first.
        let mut gens: Vec<GeneratorId> = r
            .support()
            .into_iter()
            .filter(|g| r.word().occurrences(g) == 1)
            .collect();
        gens.sort_by_key(|g| std::cmp::Reverse(p.generator_index(g)));
        for g in gens {
            let expression = solve_for(r.word(), &g);
            if substitution_fits(p, idx, &g, &expression) {
                return SingleOccurrence::Found { g, expression, idx };
            }
            skipped = true;
        }
    }
    if skipped {
        SingleOccurrence::SkippedForLength
    } else {
        SingleOccurrence::None
    }
}

fn substitution_fits(p: &Presentation, idx: usize, g: &GeneratorId, expression: &Word) -> bool {
    let mut map = BTreeMap::new();
    map.insert(g.clone(), expression.clone());
    p.relators()
        .iter()
        .enumerate()
        .all(|(i, r)| i == idx || r.word().substitute(&map).len() <= RELATOR_LENGTH_CEILING)
}

/// For every generator `g` with an explicit involution relator `g·g`,
/// rewrite `g⁻¹` to `g` in all *other* relators and in the elimination map
/// values, re-canonicalizing and deduplicating. The involution relators
/// themselves are kept.
///
/// This normalizes sign choices that are immaterial modulo the involution
/// relators, e.g. turning `a b a b⁻¹ a⁻¹ b⁻¹` into `(a b)³` when both `a²`
/// and `b²` are present.
pub fn involution_normalize(
    p: &Presentation,
    eliminations: &BTreeMap<GeneratorId, Word>,
) -> (Presentation, BTreeMap<GeneratorId, Word>) {
    let involutions: BTreeSet<GeneratorId> = p
        .relators()
        .iter()
        .filter_map(|r| {
            let ls = r.word().letters();
            if ls.len() == 2 && ls[0] == ls[1] && ls[0].sign == Sign::Pos {
                Some(ls[0].gen.clone())
            } else {
                None
            }
        })
        .collect();
    if involutions.is_empty() {
        return (p.clone(), eliminations.clone());
    }
    let flip = |w: &Word| -> Word {
        Word::from_letters(w.letters().iter().map(|l| {
            if l.sign == Sign::Neg && involutions.contains(&l.gen) {
                l.inverse()
            } else {
                l.clone()
            }
        }))
    };
    let relators: Vec<Relator> = p
        .relators()
        .iter()
        .map(|r| {
            let ls = r.word().letters();
            let is_involution_relator =
                ls.len() == 2 && ls[0] == ls[1] && involutions.contains(&ls[0].gen);
            if is_involution_relator {
                r.clone()
            } else {
                Relator::new(&flip(r.word()))
            }
        })
        .collect();
    let pres = Presentation::from_relators(p.name(), p.generators().to_vec(), relators)
        .expect("sign normalization preserves validity")
        .with_deduped_relators();
    let elims = eliminations
        .iter()
        .map(|(k, v)| (k.clone(), flip(v)))
        .collect();
    (pres, elims)
}

/// Rename generators by a partial injective map; unmapped generators keep
/// their names. Fails if the renaming collides with itself or with kept
/// names.
pub fn rename_generators(
    p: &Presentation,
    renaming: &BTreeMap<GeneratorId, GeneratorId>,
) -> Result<Presentation> {
    for old in renaming.keys() {
        if !p.has_generator(old) {
            return Err(Error::UnknownGenerator {
                generator: old.to_string(),
                reason: format!("not a generator of `{}`", p.name()),
            });
        }
    }
    let generators: Vec<GeneratorId> = p
        .generators()
        .iter()
        .map(|g| renaming.get(g).unwrap_or(g).clone())
        .collect();
    let mut seen = BTreeSet::new();
    for g in &generators {
        if !seen.insert(g.clone()) {
            return Err(Error::BadRenaming {
                reason: format!("name `{g}` would be used twice"),
            });
        }
    }
    let word_map: BTreeMap<GeneratorId, Word> = renaming
        .iter()
        .map(|(old, new)| (old.clone(), Word::gen(new.clone())))
        .collect();
    let relators: Vec<Relator> = p
        .relators()
        .iter()
        .map(|r| Relator::new(&r.word().substitute(&word_map)))
        .collect();
    Presentation::from_relators(p.name(), generators, relators)
}

/// Comparison of two presentations: generator sets as sets, relators as
/// multisets of canonical forms.
#[derive(Clone, Debug, Default)]
pub struct ComparisonReport {
    /// Generators of the left presentation missing on the right.
    pub extra_generators: Vec<GeneratorId>,
    /// Generators of the right presentation missing on the left.
    pub missing_generators: Vec<GeneratorId>,
    /// Relators of the left presentation not matched on the right.
    pub extra_relators: Vec<Relator>,
    /// Relators of the right presentation not matched on the left.
    pub missing_relators: Vec<Relator>,
}

impl ComparisonReport {
    /// True when the two presentations matched exactly.
    pub fn equal(&self) -> bool {
        self.extra_generators.is_empty()
            && self.missing_generators.is_empty()
            && self.extra_relators.is_empty()
            && self.missing_relators.is_empty()
    }
}

impl fmt::Display for ComparisonReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.equal() {
            return writeln!(
                f,
                "presentations agree (same generators, same relator multiset)"
            );
        }
        if !self.extra_generators.is_empty() {
            writeln!(f, "generators only on the left:")?;
            for g in &self.extra_generators {
                writeln!(f, "  {g}")?;
            }
        }
        if !self.missing_generators.is_empty() {
            writeln!(f, "generators only on the right:")?;
            for g in &self.missing_generators {
                writeln!(f, "  {g}")?;
            }
        }
        if !self.extra_relators.is_empty() {
            writeln!(f, "relators only on the left:")?;
            for r in &self.extra_relators {
                writeln!(f, "  {r}")?;
            }
        }
        if !self.missing_relators.is_empty() {
            writeln!(f, "relators only on the right:")?;
            for r in &self.missing_relators {
                writeln!(f, "  {r}")?;
            }
        }
        Ok(())
    }
}

/// Compare generator sets (as sets) and relator multisets (canonical forms).
/// This is a syntactic comparison — no isomorphism search of any kind.
pub fn relator_sets_equal(left: &Presentation, right: &Presentation) -> ComparisonReport {
    let left_gens: BTreeSet<_> = left.generators().iter().cloned().collect();
    let right_gens: BTreeSet<_> = right.generators().iter().cloned().collect();
    let mut report = ComparisonReport {
        extra_generators: left_gens.difference(&right_gens).cloned().collect(),
        missing_generators: right_gens.difference(&left_gens).cloned().collect(),
        ..Default::default()
    };
    let mut left_counts: BTreeMap<&Relator, isize> = BTreeMap::new();
    for r in left.relators() {
        *left_counts.entry(r).or_insert(0) += 1;
    }
    for r in right.relators() {
        *left_counts.entry(r).or_insert(0) -= 1;
    }
    for (r, count) in left_counts {
        for _ in 0..count.max(0) {
            report.extra_relators.push(r.clone());
        }
        for _ in 0..(-count).max(0) {
            report.missing_relators.push(r.clone());
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::{braid_relator, commutator};

    fn g(tok: &str) -> GeneratorId {
        GeneratorId::parse(tok).unwrap()
    }

    fn gens(tokens: &[&str]) -> Vec<GeneratorId> {
        tokens.iter().map(|t| g(t)).collect()
    }

    fn w(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    #[test]
    fn eliminate_generator_substitutes_expression() {
        // <a, b, c | c b⁻¹ a⁻¹, c²> : c = a b, so the result is <a, b | (ab)²>.
        let p = Presentation::new(
            "E",
            gens(&["a1", "b1", "c1"]),
            &[w("c1 b1^-1 a1^-1"), w("c1 c1")],
        )
        .unwrap();
        let (q, expr) = eliminate_generator(&p, &g("c1")).unwrap();
        assert_eq!(expr, w("a1 b1"));
        assert_eq!(q.generators(), gens(&["a1", "b1"]).as_slice());
        assert_eq!(q.relator_count(), 1);
        assert_eq!(q.relators()[0], Relator::new(&w("a1 b1 a1 b1")));
    }

    #[test]
    fn eliminate_generator_needs_single_occurrence() {
        let p = Presentation::new("E2", gens(&["a1"]), &[w("a1 a1")]).unwrap();
        assert!(matches!(
            eliminate_generator(&p, &g("a1")),
            Err(Error::BadElimination { .. })
        ));
        let q = Presentation::new("E3", gens(&["a1", "b1"]), &[]).unwrap();
        assert!(matches!(
            eliminate_generator(&q, &g("a1")),
            Err(Error::BadElimination { .. })
        ));
        assert!(matches!(
            eliminate_generator(&q, &g("z9.9")),
            Err(Error::UnknownGenerator { .. })
        ));
    }

    #[test]
    fn eliminate_generator_negative_occurrence() {
        // a b⁻¹ = 1 solved for b: rotating to b⁻¹ a gives b = a.
        let p = Presentation::new("E4", gens(&["a1", "b1"]), &[w("a1 b1^-1")]).unwrap();
        let (q, expr) = eliminate_generator(&p, &g("b1")).unwrap();
        assert_eq!(expr, w("a1"));
        assert_eq!(q.generator_count(), 1);
    }

    #[test]
    fn simplify_length_one_relators() {
        // <a, b | a, [a,b]> → a = 1 → the commutator collapses → <b | >.
        let a = Word::gen(g("a1"));
        let b = Word::gen(g("b1"));
        let p =
            Presentation::new("S1", gens(&["a1", "b1"]), &[a.clone(), commutator(&a, &b)]).unwrap();
        let result = simplify(&p, DEFAULT_SIMPLIFY_BUDGET);
        assert_eq!(result.presentation.generators(), gens(&["b1"]).as_slice());
        assert_eq!(result.presentation.relator_count(), 0);
        assert_eq!(result.eliminations[&g("a1")], Word::identity());
        assert!(!result.hit_length_ceiling);
    }

    #[test]
    fn simplify_cascade_through_braid() {
        // <a, b | a, braid(a,b)>: a = 1 turns the braid relator into b⁻¹,
        // which then eliminates b as well — everything collapses.
        let a = Word::gen(g("a1"));
        let b = Word::gen(g("b1"));
        let p = Presentation::new(
            "S1b",
            gens(&["a1", "b1"]),
            &[a.clone(), braid_relator(&a, &b)],
        )
        .unwrap();
        let result = simplify(&p, DEFAULT_SIMPLIFY_BUDGET);
        assert!(result.presentation.generators().is_empty());
        assert_eq!(result.eliminations[&g("b1")], Word::identity());
    }

    #[test]
    fn simplify_length_two_eliminates_latest_declared() {
        // <a, b | a b⁻¹> : b is later-declared, so b ↦ a survives as a.
        let p = Presentation::new("S2", gens(&["a1", "b1"]), &[w("a1 b1^-1")]).unwrap();
        let result = simplify(&p, DEFAULT_SIMPLIFY_BUDGET);
        assert_eq!(result.presentation.generators(), gens(&["a1"]).as_slice());
        assert_eq!(result.eliminations[&g("b1")], w("a1"));
    }

    #[test]
    fn simplify_composes_elimination_chains() {
        // a = b, b = c: both map to the survivor c? No — latest-declared dies:
        // relator a b⁻¹ kills b (↦ a), then relator (b c⁻¹ → a c⁻¹) kills c (↦ a).
        let p = Presentation::new(
            "S3",
            gens(&["a1", "b1", "c1"]),
            &[w("a1 b1^-1"), w("b1 c1^-1")],
        )
        .unwrap();
        let result = simplify(&p, DEFAULT_SIMPLIFY_BUDGET);
        assert_eq!(result.presentation.generators(), gens(&["a1"]).as_slice());
        assert_eq!(result.eliminations[&g("b1")], w("a1"));
        assert_eq!(result.eliminations[&g("c1")], w("a1"));
        assert_eq!(result.presentation.relator_count(), 0);
    }

    #[test]
    fn simplify_single_occurrence_pass() {
        // <a, b, c | c (a b)⁻¹, [a, c]> : c = a b via the single-occurrence
        // relator (length 3), then [a, ab] remains.
        let p = Presentation::new(
            "S4",
            gens(&["a1", "b1", "c1"]),
            &[
                w("c1 b1^-1 a1^-1"),
                commutator(&Word::gen(g("a1")), &Word::gen(g("c1"))),
            ],
        )
        .unwrap();
        let result = simplify(&p, DEFAULT_SIMPLIFY_BUDGET);
        assert_eq!(
            result.presentation.generators(),
            gens(&["a1", "b1"]).as_slice()
        );
        assert_eq!(result.presentation.relator_count(), 1);
        assert_eq!(result.eliminations[&g("c1")], w("a1 b1"));
        // [a, ab] = a a b a⁻¹ b⁻¹ a⁻¹ canonically.
        assert_eq!(
            result.presentation.relators()[0],
            Relator::new(&w("a1 a1 b1 a1^-1 b1^-1 a1^-1"))
        );
    }

    #[test]
    fn simplify_respects_length_ceiling() {
        // Defining relator t·u (u of length 8), but t occurs 100 times in a
        // second relator: substitution would create an 800-letter relator.
        let mut letters = String::new();
        for i in 0..8 {
            letters.push_str(if i % 2 == 0 { "a1 " } else { "b1 " });
        }
        let defining = format!("t1 {letters}");
        let big = "t1 ".repeat(100);
        let p = Presentation::new(
            "S5",
            gens(&["a1", "b1", "t1"]),
            &[w(&defining), w(big.trim())],
        )
        .unwrap();
        let result = simplify(&p, DEFAULT_SIMPLIFY_BUDGET);
        assert!(result.hit_length_ceiling);
        assert!(result.presentation.has_generator(&g("t1")));
        assert_eq!(result.presentation.relator_count(), 2);
    }

    #[test]
    fn involution_normalize_rewrites_negative_signs() {
        // <a, b | a², b², a b a b⁻¹ a⁻¹ b⁻¹> — the braid word becomes (a b)³.
        let a = Word::gen(g("a1"));
        let b = Word::gen(g("b1"));
        let p = Presentation::new(
            "I",
            gens(&["a1", "b1"]),
            &[w("a1 a1"), w("b1 b1"), braid_relator(&a, &b)],
        )
        .unwrap();
        let (q, _) = involution_normalize(&p, &BTreeMap::new());
        assert_eq!(q.relator_count(), 3);
        assert_eq!(q.relators()[2], Relator::new(&w("a1 b1 a1 b1 a1 b1")));
        // Involution relators themselves are kept.
        assert_eq!(q.relators()[0], Relator::new(&w("a1 a1")));
    }

    #[test]
    fn involution_normalize_updates_elimination_values() {
        let p = Presentation::new("I2", gens(&["a1"]), &[w("a1 a1")]).unwrap();
        let mut elims = BTreeMap::new();
        elims.insert(g("x1.2"), w("a1^-1"));
        let (_, new_elims) = involution_normalize(&p, &elims);
        assert_eq!(new_elims[&g("x1.2")], w("a1"));
    }

    #[test]
    fn rename_generators_bijective() {
        let p = Presentation::new("R", gens(&["a1", "b1"]), &[w("a1 b1 a1^-1 b1^-1")]).unwrap();
        let mut map = BTreeMap::new();
        map.insert(g("a1"), g("l1.2"));
        map.insert(g("b1"), g("l1.3"));
        let q = rename_generators(&p, &map).unwrap();
        assert_eq!(q.generators(), gens(&["l1.2", "l1.3"]).as_slice());
        assert_eq!(
            q.relators()[0],
            Relator::new(&w("l1.2 l1.3 l1.2^-1 l1.3^-1"))
        );
        // Collision errors.
        let mut bad = BTreeMap::new();
        bad.insert(g("a1"), g("b1"));
        assert!(matches!(
            rename_generators(&p, &bad),
            Err(Error::BadRenaming { .. })
        ));
    }

    #[test]
    fn relator_sets_equal_reports_diffs() {
        let p = Presentation::new("A", gens(&["a1", "b1"]), &[w("a1 a1"), w("b1 b1")]).unwrap();
        let q = Presentation::new("B", gens(&["a1", "c1"]), &[w("a1 a1"), w("a1 a1")]).unwrap();
        let report = relator_sets_equal(&p, &q);
        assert!(!report.equal());
        assert_eq!(report.extra_generators, vec![g("b1")]);
        assert_eq!(report.missing_generators, vec![g("c1")]);
        assert_eq!(report.extra_relators, vec![Relator::new(&w("b1 b1"))]);
        assert_eq!(report.missing_relators, vec![Relator::new(&w("a1 a1"))]);
        let same = relator_sets_equal(&p, &p);
        assert!(same.equal());
    }

    #[test]
    fn simplify_terminates_on_budget() {
        let p = Presentation::new("T", gens(&["a1", "b1"]), &[w("a1 b1^-1")]).unwrap();
        let result = simplify(&p, 1);
        assert_eq!(result.passes_used, 1);
        // Budget 0 does nothing.
        let untouched = simplify(&p, 0);
        assert_eq!(untouched.presentation, p);
    }
}
