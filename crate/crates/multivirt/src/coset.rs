//! Coset tables for finite-index subgroups, and Schreier transversals.
//!
//! Two constructions are provided:
//!
//! * [`kernel_coset_table`] — the coset table of the kernel of a
//!   permutation-valued homomorphism, built directly from the image group.
//!   Cosets are indexed by the lexicographic rank of the corresponding image
//!   permutation (one-line order), so the identity coset is always `0`.
//! * [`todd_coxeter`] — HLT-style coset enumeration of an arbitrary
//!   finitely generated subgroup, with coincidence handling. The result is
//!   renumbered into canonical breadth-first order.
//!
//! Tables are always complete: every generator acts as a total permutation
//! of the coset set, in both directions.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use serde_json::json;

use crate::error::Error;
use crate::perm::{evaluate, Perm};
use crate::presentation::Presentation;
use crate::word::{GeneratorId, Letter, Sign, Word};
use crate::Result;

/// Default ceiling on the number of cosets defined during enumeration.
pub const DEFAULT_MAX_COSETS: usize = 10_000;

/// Environment variable overriding [`DEFAULT_MAX_COSETS`].
pub const MAX_COSETS_ENV: &str = "MVB_MAX_COSETS";

/// A complete coset table: for every coset and every generator, the coset
/// reached by right multiplication with the generator or its inverse.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetTable {
    degree: usize,
    generators: Vec<GeneratorId>,
    /// `forward[g][c]` = c · gen_g
    forward: Vec<Vec<usize>>,
    /// `backward[g][c]` = c · gen_g⁻¹
    backward: Vec<Vec<usize>>,
}

impl CosetTable {
    /// Number of cosets.
    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Column order (the ambient presentation's declaration order).
    pub fn generators(&self) -> &[GeneratorId] {
        &self.generators
    }

    fn generator_column(&self, g: &GeneratorId) -> Result<usize> {
        self.generators
            .iter()
            .position(|h| h == g)
            .ok_or_else(|| Error::UnknownGenerator {
                generator: g.to_string(),
                reason: "not a column of this coset table".into(),
            })
    }

    /// Apply one signed generator to a coset.
    pub fn apply_gen(&self, coset: usize, g: &GeneratorId, sign: Sign) -> Result<usize> {
        let col = self.generator_column(g)?;
        assert!(coset < self.degree, "coset {coset} out of range");
        Ok(match sign {
            Sign::Pos => self.forward[col][coset],
            Sign::Neg => self.backward[col][coset],
        })
    }

    /// Apply one letter to a coset.
    pub fn apply_letter(&self, coset: usize, letter: &Letter) -> Result<usize> {
        self.apply_gen(coset, &letter.gen, letter.sign)
    }

    /// Trace a word from a coset, left to right.
    pub fn apply_word(&self, coset: usize, w: &Word) -> Result<usize> {
        let mut c = coset;
        for l in w.letters() {
            c = self.apply_letter(c, l)?;
        }
        Ok(c)
    }

    /// Renumber cosets into canonical breadth-first order: start at coset 0,
    /// explore columns in declared generator order, positive direction before
    /// negative. Two tables describing the same action agree after this.
    pub fn canonicalize(&self) -> CosetTable {
        let mut order: Vec<usize> = Vec::with_capacity(self.degree);
        let mut new_index: Vec<Option<usize>> = vec![None; self.degree];
        let mut queue = VecDeque::new();
        new_index[0] = Some(0);
        order.push(0);
        queue.push_back(0);
        while let Some(c) = queue.pop_front() {
            for col in 0..self.generators.len() {
                for next in [self.forward[col][c], self.backward[col][c]] {
                    if new_index[next].is_none() {
                        new_index[next] = Some(order.len());
                        order.push(next);
                        queue.push_back(next);
                    }
                }
            }
        }
        // Tables from enumeration are connected, but stay defensive.
        assert_eq!(order.len(), self.degree, "coset table is not connected");
        let remap = |old: usize| new_index[old].unwrap();
        let mut forward = vec![vec![0usize; self.degree]; self.generators.len()];
        let mut backward = forward.clone();
        for col in 0..self.generators.len() {
            for (new_c, &old_c) in order.iter().enumerate() {
                forward[col][new_c] = remap(self.forward[col][old_c]);
                backward[col][new_c] = remap(self.backward[col][old_c]);
            }
        }
        CosetTable {
            degree: self.degree,
            generators: self.generators.clone(),
            forward,
            backward,
        }
    }

    /// JSON export: `{degree, generators, action: {"g": [...], "g^-1": [...]}}`.
    pub fn to_json_value(&self) -> serde_json::Value {
        let mut action: BTreeMap<String, Vec<usize>> = BTreeMap::new();
        for (col, g) in self.generators.iter().enumerate() {
            action.insert(g.to_string(), self.forward[col].clone());
            action.insert(format!("{g}^-1"), self.backward[col].clone());
        }
        json!({
            "degree": self.degree,
            "generators": self.generators,
            "action": action,
        })
    }
}

/// Coset table of the kernel of the permutation homomorphism given by
/// `images`, acting on the cosets inside the ambient group presented by `p`.
///
/// Preconditions checked here:
/// * every generator of `p` has an image, all of one degree;
/// * every relator maps to the identity permutation (otherwise the map is
///   not well-defined and the offending relator is reported).
///
/// Cosets of the kernel correspond to elements of the image subgroup; they
/// are indexed by lexicographic rank of their one-line notation, so the
/// identity coset is `0`.
pub fn kernel_coset_table(
    p: &Presentation,
    images: &BTreeMap<GeneratorId, Perm>,
) -> Result<CosetTable> {
    // Degree: from any image; a generator-less presentation gets degree 1.
    let mut degree = 1;
    for g in p.generators() {
        let img = images.get(g).ok_or_else(|| Error::MissingImage {
            generator: g.to_string(),
        })?;
        degree = img.degree().max(1);
    }
    for g in p.generators() {
        let img = &images[g];
        if img.degree() != degree {
            return Err(Error::InvalidPermutation {
                reason: format!(
                    "image of `{g}` has degree {} but expected {degree}",
                    img.degree()
                ),
            });
        }
    }
    // Well-definedness.
    for r in p.relators() {
        let image = evaluate(r.word(), images, degree)?;
        if !image.is_identity() {
            return Err(Error::NotWellDefined {
                relator: r.to_string(),
                image: image.cycle_string(),
            });
        }
    }
    // Closure of the identity under right multiplication by the images.
    let gen_perms: Vec<Perm> = p.generators().iter().map(|g| images[g].clone()).collect();
    let mut elements: BTreeSet<Perm> = BTreeSet::new();
    let mut queue = VecDeque::new();
    let id = Perm::identity(degree);
    elements.insert(id.clone());
    queue.push_back(id);
    while let Some(q) = queue.pop_front() {
        for img in &gen_perms {
            for next in [q.compose(img), q.compose(&img.inverse())] {
                if elements.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
    }
    // BTreeSet iteration = lexicographic one-line order; identity is rank 0.
    let ordered: Vec<Perm> = elements.into_iter().collect();
    let rank: BTreeMap<&Perm, usize> = ordered.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let n_cosets = ordered.len();
    let mut forward = vec![vec![0usize; n_cosets]; p.generators().len()];
    let mut backward = forward.clone();
    for (col, img) in gen_perms.iter().enumerate() {
        let inv = img.inverse();
        for (c, elt) in ordered.iter().enumerate() {
            forward[col][c] = rank[&elt.compose(img)];
            backward[col][c] = rank[&elt.compose(&inv)];
        }
    }
    Ok(CosetTable {
        degree: n_cosets,
        generators: p.generators().to_vec(),
        forward,
        backward,
    })
}

/// Resolve the coset ceiling: explicit argument, else `MVB_MAX_COSETS`,
/// else [`DEFAULT_MAX_COSETS`].
pub fn max_cosets_limit(explicit: Option<usize>) -> usize {
    if let Some(m) = explicit {
        return m;
    }
    if let Ok(v) = std::env::var(MAX_COSETS_ENV) {
        if let Ok(m) = v.parse::<usize>() {
            if m > 0 {
                return m;
            }
        }
    }
    DEFAULT_MAX_COSETS
}

/// HLT coset enumeration of the subgroup generated by `subgroup_generators`
/// inside the group presented by `p`.
///
/// Returns the completed coset table in canonical breadth-first numbering,
/// or [`Error::CosetLimitExceeded`] if more than `max_cosets` (default
/// [`DEFAULT_MAX_COSETS`], overridable via `MVB_MAX_COSETS`) cosets would be
/// defined. Enumeration terminates only for finite-index subgroups.
pub fn todd_coxeter(
    p: &Presentation,
    subgroup_generators: &[Word],
    max_cosets: Option<usize>,
) -> Result<CosetTable> {
    for w in subgroup_generators {
        for g in w.support() {
            if !p.has_generator(&g) {
                return Err(Error::UnknownGenerator {
                    generator: g.to_string(),
                    reason: format!("subgroup generator `{w}` is not a word over the presentation"),
                });
            }
        }
    }
    let limit = max_cosets_limit(max_cosets);
    let mut enumerator = Enumerator::new(p, limit)?;
    let sub_words: Vec<Vec<(usize, Sign)>> = subgroup_generators
        .iter()
        .map(|w| enumerator.encode(w))
        .collect();
    let relator_words: Vec<Vec<(usize, Sign)>> = p
        .relators()
        .iter()
        .filter(|r| !r.is_trivial())
        .map(|r| enumerator.encode(r.word()))
        .collect();

    for w in &sub_words {
        enumerator.scan_and_fill(0, w)?;
    }
    let mut c = 0usize;
    while c < enumerator.total() {
        if enumerator.is_live(c) {
            for r in &relator_words {
                enumerator.scan_and_fill(c, r)?;
                if !enumerator.is_live(c) {
                    break;
                }
            }
            if enumerator.is_live(c) {
                enumerator.fill_row(c)?;
            }
        }
        c += 1;
    }
    let table = enumerator.finish();
    Ok(table.canonicalize())
}

/// Working state for HLT enumeration.
struct Enumerator {
    generators: Vec<GeneratorId>,
    /// `table[2g][c]` = c·gen_g, `table[2g+1][c]` = c·gen_g⁻¹ (when defined).
    table: Vec<Vec<Option<usize>>>,
    /// Union-find over coset indices; the smallest index survives a merge.
    parent: Vec<usize>,
    live: usize,
    limit: usize,
}

impl Enumerator {
    fn new(p: &Presentation, limit: usize) -> Result<Enumerator> {
        if limit == 0 {
            return Err(Error::CosetLimitExceeded { limit });
        }
        let ncols = 2 * p.generators().len();
        Ok(Enumerator {
            generators: p.generators().to_vec(),
            table: vec![vec![None]; ncols],
            parent: vec![0],
            live: 1,
            limit,
        })
    }

    fn encode(&self, w: &Word) -> Vec<(usize, Sign)> {
        w.letters()
            .iter()
            .map(|l| {
                let col = self
                    .generators
                    .iter()
                    .position(|g| g == &l.gen)
                    .expect("encode called with unchecked generator");
                (col, l.sign)
            })
            .collect()
    }

    fn total(&self) -> usize {
        self.parent.len()
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            let grand = self.parent[self.parent[x]];
            self.parent[x] = grand;
            x = grand;
        }
        x
    }

    fn is_live(&mut self, x: usize) -> bool {
        self.find(x) == x
    }

    fn slot(col: usize, sign: Sign) -> usize {
        match sign {
            Sign::Pos => 2 * col,
            Sign::Neg => 2 * col + 1,
        }
    }

    /// Defined image of `c` under signed generator, normalized through find.
    fn get(&mut self, c: usize, letter: (usize, Sign)) -> Option<usize> {
        let v = self.table[Self::slot(letter.0, letter.1)][c]?;
        Some(self.find(v))
    }

    /// Install the edge pair `a ·letter→ b`. Both slots must be free.
    fn set_edge(&mut self, a: usize, letter: (usize, Sign), b: usize) {
        let fwd = Self::slot(letter.0, letter.1);
        let bwd = Self::slot(letter.0, letter.1.flip());
        debug_assert!(self.table[fwd][a].is_none());
        debug_assert!(self.table[bwd][b].is_none());
        self.table[fwd][a] = Some(b);
        self.table[bwd][b] = Some(a);
    }

    /// Define a fresh coset as the image of `a` under `letter`.
    fn define(&mut self, a: usize, letter: (usize, Sign)) -> Result<usize> {
        if self.total() >= self.limit {
            return Err(Error::CosetLimitExceeded { limit: self.limit });
        }
        let nu = self.total();
        for col in &mut self.table {
            col.push(None);
        }
        self.parent.push(nu);
        self.live += 1;
        self.set_edge(a, letter, nu);
        Ok(nu)
    }

    /// Scan `w` from `alpha`, filling gaps with new cosets (HLT strategy).
    fn scan_and_fill(&mut self, alpha: usize, w: &[(usize, Sign)]) -> Result<()> {
        if w.is_empty() {
            return Ok(());
        }
        let alpha = self.find(alpha);
        let mut f = alpha;
        let mut b = alpha;
        let mut i: isize = 0;
        let mut j: isize = w.len() as isize - 1;
        loop {
            while i <= j {
                match self.get(f, w[i as usize]) {
                    Some(next) => {
                        f = next;
                        i += 1;
                    }
                    None => break,
                }
            }
            if i > j {
                if f != b {
                    self.coincidence(f, b);
                }
                return Ok(());
            }
            while j >= i {
                let inv = (w[j as usize].0, w[j as usize].1.flip());
                match self.get(b, inv) {
                    Some(prev) => {
                        b = prev;
                        j -= 1;
                    }
                    None => break,
                }
            }
            if j < i {
                self.coincidence(f, b);
                return Ok(());
            } else if j == i {
                self.set_edge(f, w[i as usize], b);
                return Ok(());
            } else {
                f = self.define(f, w[i as usize])?;
                i += 1;
            }
        }
    }

    /// Complete the row of `c`: define new cosets for any undefined entries.
    fn fill_row(&mut self, c: usize) -> Result<()> {
        for col in 0..self.generators.len() {
            for sign in [Sign::Pos, Sign::Neg] {
                if !self.is_live(c) {
                    return Ok(());
                }
                if self.get(c, (col, sign)).is_none() {
                    self.define(c, (col, sign))?;
                }
            }
        }
        Ok(())
    }

    /// Merge the classes of `a` and `b`, transferring edges of dead cosets
    /// and queueing any induced coincidences.
    fn coincidence(&mut self, a: usize, b: usize) {
        let mut queue: VecDeque<usize> = VecDeque::new();
        self.merge(a, b, &mut queue);
        while let Some(dead) = queue.pop_front() {
            let keep = self.find(dead);
            debug_assert_ne!(keep, dead);
            for col in 0..self.generators.len() {
                for sign in [Sign::Pos, Sign::Neg] {
                    let fwd = Self::slot(col, sign);
                    let bwd = Self::slot(col, sign.flip());
                    let Some(delta) = self.table[fwd][dead].take() else {
                        continue;
                    };
                    // Remove the paired entry if it still points back here.
                    if self.table[bwd][delta] == Some(dead) {
                        self.table[bwd][delta] = None;
                    }
                    let delta = self.find(delta);
                    let keep = self.find(dead);
                    if let Some(eps) = self.get(keep, (col, sign)) {
                        self.merge(delta, eps, &mut queue);
                    } else if let Some(eps) = self.get(delta, (col, sign.flip())) {
                        self.merge(keep, eps, &mut queue);
                    } else {
                        self.set_edge(keep, (col, sign), delta);
                    }
                }
            }
        }
    }

    fn merge(&mut self, a: usize, b: usize, queue: &mut VecDeque<usize>) {
        let ra = self.find(a);
        let rb = self.find(b);
        if ra == rb {
            return;
        }
        let (keep, dead) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[dead] = keep;
        self.live -= 1;
        queue.push_back(dead);
    }

    /// Compact the completed enumeration into a total table.
    fn finish(mut self) -> CosetTable {
        let mut live_index: BTreeMap<usize, usize> = BTreeMap::new();
        for c in 0..self.total() {
            if self.find(c) == c {
                let idx = live_index.len();
                live_index.insert(c, idx);
            }
        }
        let degree = live_index.len();
        let ncols = self.generators.len();
        let mut forward = vec![vec![0usize; degree]; ncols];
        let mut backward = vec![vec![0usize; degree]; ncols];
        let reps: Vec<usize> = live_index.keys().copied().collect();
        for col in 0..ncols {
            for (&rep, &idx) in reps.iter().zip(live_index.values()) {
                let f = self
                    .get(rep, (col, Sign::Pos))
                    .expect("completed enumeration has a full table");
                let b = self
                    .get(rep, (col, Sign::Neg))
                    .expect("completed enumeration has a full table");
                forward[col][idx] = live_index[&f];
                backward[col][idx] = live_index[&b];
            }
        }
        CosetTable {
            degree,
            generators: self.generators,
            forward,
            backward,
        }
    }
}

// ---------------------------------------------------------------------------
// Schreier transversals
// ---------------------------------------------------------------------------

/// How to choose coset representatives.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TransversalStrategy {
    /// Shortest representatives by breadth-first search from coset 0
    /// (columns in declared order, positive direction first). Prefix-closed.
    Bfs,
    /// The nested product family over sort-0 involutive generators
    /// `r1.0 ... r{n-1}.0`: representatives
    /// `m(2, j_2) · m(3, j_3) · ... · m(n, j_n)` with `1 ≤ j_k ≤ k`, where
    /// `m(k, l) = r{k-1}.0 r{k-2}.0 ... r{l}.0` and `m(k, k)` is empty.
    /// Enumerated with `j_2` outermost and every index descending.
    /// Requires the table to have degree `n!`. Prefix-closed.
    Lambda {
        /// Number of strands; the table must have `n!` cosets.
        n: usize,
    },
}

/// A Schreier transversal: one representative word per coset, with
/// `representative(0)` the empty word.
///
/// `enumeration_order` records the order in which cosets were assigned
/// representatives (breadth-first discovery order, or the fixed product
/// family order); derived relator conjugates are listed in this order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Transversal {
    words: Vec<Word>,
    enumeration_order: Vec<usize>,
}

impl Transversal {
    /// Number of cosets covered.
    pub fn degree(&self) -> usize {
        self.words.len()
    }

    /// Representative word of `coset`; panics if out of range.
    pub fn representative(&self, coset: usize) -> &Word {
        &self.words[coset]
    }

    /// All representatives, indexed by coset.
    pub fn words(&self) -> &[Word] {
        &self.words
    }

    /// Cosets in the order their representatives were enumerated.
    pub fn enumeration_order(&self) -> &[usize] {
        &self.enumeration_order
    }
}

/// Build a Schreier transversal for `table` under the given strategy.
///
/// The result maps each coset to a representative word that traces from
/// coset 0 to that coset; the identity coset gets the empty word. For
/// [`TransversalStrategy::Lambda`], the fixed product family is traced
/// through the table and must hit every coset exactly once.
pub fn schreier_transversal(
    table: &CosetTable,
    strategy: &TransversalStrategy,
) -> Result<Transversal> {
    match strategy {
        TransversalStrategy::Bfs => {
            let mut words: Vec<Option<Word>> = vec![None; table.degree()];
            words[0] = Some(Word::identity());
            let mut order = vec![0usize];
            let mut queue = VecDeque::new();
            queue.push_back(0usize);
            while let Some(c) = queue.pop_front() {
                for g in table.generators() {
                    for sign in [Sign::Pos, Sign::Neg] {
                        let next = table.apply_gen(c, g, sign)?;
                        if words[next].is_none() {
                            let mut w = words[c].clone().unwrap();
                            w = w.concat(&Word::letter(Letter {
                                gen: g.clone(),
                                sign,
                            }));
                            words[next] = Some(w);
                            order.push(next);
                            queue.push_back(next);
                        }
                    }
                }
            }
            let words: Option<Vec<Word>> = words.into_iter().collect();
            let words = words.ok_or_else(|| Error::IncompatibleTable {
                reason: "table is not connected from coset 0".into(),
            })?;
            Ok(Transversal {
                words,
                enumeration_order: order,
            })
        }
        TransversalStrategy::Lambda { n } => {
            let n = *n;
            let expected: usize = (1..=n).product();
            if table.degree() != expected {
                return Err(Error::IncompatibleTable {
                    reason: format!(
                        "product-family transversal for n={n} needs degree {expected}, \
                         table has degree {}",
                        table.degree()
                    ),
                });
            }
            for i in 1..n {
                let g = GeneratorId::rho(i as i32, 0);
                if !table.generators().contains(&g) {
                    return Err(Error::IncompatibleTable {
                        reason: format!("table has no column for `{g}`"),
                    });
                }
            }
            let family = lambda_words(n);
            let mut words: Vec<Option<Word>> = vec![None; table.degree()];
            let mut order = Vec::with_capacity(family.len());
            for w in &family {
                let c = table.apply_word(0, w)?;
                if let Some(prev) = &words[c] {
                    return Err(Error::IncompatibleTable {
                        reason: format!(
                            "representatives `{prev}` and `{w}` both land on coset {c}"
                        ),
                    });
                }
                words[c] = Some(w.clone());
                order.push(c);
            }
            let words: Option<Vec<Word>> = words.into_iter().collect();
            let words = words.ok_or_else(|| Error::IncompatibleTable {
                reason: "product family does not reach every coset".into(),
            })?;
            Ok(Transversal {
                words,
                enumeration_order: order,
            })
        }
    }
}

/// The product-family representative words for degree `n!`, in enumeration
/// order (`j_2` outermost, every index descending from its maximum).
pub fn lambda_words(n: usize) -> Vec<Word> {
    // Representative indexed by (j_2, ..., j_n); build recursively.
    fn m_word(k: usize, l: usize) -> Word {
        // r{k-1}.0 r{k-2}.0 ... r{l}.0; empty when l == k.
        let mut letters = Vec::new();
        let mut i = k as i32 - 1;
        while i >= l as i32 {
            letters.push(Letter::pos(GeneratorId::rho(i, 0)));
            i -= 1;
        }
        Word::from_letters(letters)
    }
    let mut out = vec![Word::identity()];
    for k in 2..=n {
        let mut next = Vec::with_capacity(out.len() * k);
        for prefix in &out {
            for j in (1..=k).rev() {
                next.push(prefix.concat(&m_word(k, j)));
            }
        }
        out = next;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::braid_relator;

    fn g(tok: &str) -> GeneratorId {
        GeneratorId::parse(tok).unwrap()
    }

    fn w(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    /// Free presentation on s1, s2, r1.0, r2.0 with transposition images:
    /// kernel has index 6 in the free group.
    fn s3_images_table() -> CosetTable {
        let p = Presentation::new("free4", vec![g("s1"), g("s2"), g("r1"), g("r2")], &[]).unwrap();
        let t12 = Perm::transposition(3, 1, 2).unwrap();
        let t23 = Perm::transposition(3, 2, 3).unwrap();
        let mut images = BTreeMap::new();
        images.insert(g("s1"), t12.clone());
        images.insert(g("s2"), t23.clone());
        images.insert(g("r1"), t12);
        images.insert(g("r2"), t23);
        kernel_coset_table(&p, &images).unwrap()
    }

    #[test]
    fn kernel_table_indexes_identity_first() {
        let t = s3_images_table();
        assert_eq!(t.degree(), 6);
        // Tracing a kernel element returns to coset 0.
        assert_eq!(t.apply_word(0, &w("s1 r1^-1")).unwrap(), 0);
        assert_eq!(
            t.apply_word(0, &w("s1 s2 s1 s2^-1 s1^-1 s2^-1")).unwrap(),
            0
        );
        // A non-kernel word leaves coset 0.
        assert_ne!(t.apply_word(0, &w("s1")).unwrap(), 0);
    }

    #[test]
    fn kernel_table_is_lex_ranked() {
        // Coset of s1 = rank of (1 2) among S3 in one-line lex order:
        // [1,2,3] [1,3,2] [2,1,3] [2,3,1] [3,1,2] [3,2,1]
        //    0       1      2       3       4       5
        let t = s3_images_table();
        assert_eq!(t.apply_word(0, &w("s1")).unwrap(), 2); // (1 2) -> [2,1,3]
        assert_eq!(t.apply_word(0, &w("s2")).unwrap(), 1); // (2 3) -> [1,3,2]
        assert_eq!(t.apply_word(0, &w("s1 s2")).unwrap(), 4); // 1->2->3: [3,1,2]
        assert_eq!(t.apply_word(0, &w("s2 s1")).unwrap(), 3); // 1->1->2: [2,3,1]
    }

    #[test]
    fn kernel_table_rejects_bad_maps() {
        let p = Presentation::new("bad", vec![g("s1")], &[w("s1 s1 s1")]).unwrap();
        let mut images = BTreeMap::new();
        images.insert(g("s1"), Perm::transposition(2, 1, 2).unwrap());
        let err = kernel_coset_table(&p, &images).unwrap_err();
        match err {
            Error::NotWellDefined { relator, image } => {
                assert_eq!(relator, "s1 s1 s1");
                assert_eq!(image, "(1 2)");
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn kernel_table_missing_image_is_reported() {
        let p = Presentation::new("m", vec![g("s1"), g("s2")], &[]).unwrap();
        let mut images = BTreeMap::new();
        images.insert(g("s1"), Perm::transposition(2, 1, 2).unwrap());
        assert!(matches!(
            kernel_coset_table(&p, &images),
            Err(Error::MissingImage { .. })
        ));
    }

    /// Symmetric group S3 as <a1, a2 | a1², a2², (a1 a2)³>.
    fn coxeter_s3() -> Presentation {
        Presentation::new(
            "S3",
            vec![g("a1"), g("a2")],
            &[w("a1 a1"), w("a2 a2"), w("a1 a2 a1 a2 a1 a2")],
        )
        .unwrap()
    }

    #[test]
    fn todd_coxeter_trivial_subgroup_of_s3() {
        let t = todd_coxeter(&coxeter_s3(), &[], None).unwrap();
        assert_eq!(t.degree(), 6);
        // a1 acts as an involution without fixed points on a torsor.
        for c in 0..6 {
            let d = t.apply_word(c, &w("a1")).unwrap();
            assert_ne!(c, d);
            assert_eq!(t.apply_word(d, &w("a1")).unwrap(), c);
        }
    }

    #[test]
    fn todd_coxeter_with_subgroup_generators() {
        // <a1> has index 3 in S3.
        let t = todd_coxeter(&coxeter_s3(), &[w("a1")], None).unwrap();
        assert_eq!(t.degree(), 3);
        assert_eq!(t.apply_word(0, &w("a1")).unwrap(), 0);
    }

    #[test]
    fn todd_coxeter_finite_cyclic() {
        let p = Presentation::new("C5", vec![g("a1")], &[w("a1^5")]).unwrap();
        let t = todd_coxeter(&p, &[], None).unwrap();
        assert_eq!(t.degree(), 5);
        assert_eq!(t.apply_word(0, &w("a1^5")).unwrap(), 0);
        let full = todd_coxeter(&p, &[w("a1")], None).unwrap();
        assert_eq!(full.degree(), 1);
    }

    #[test]
    fn todd_coxeter_coincidence_heavy() {
        // <a, b | a² b⁻¹, b³ a⁻¹> collapses: b = a², a = b³ = a⁶ → a⁵ = e,
        // with a² = b so the group is cyclic of order 5 generated by a.
        let p = Presentation::new(
            "collapse",
            vec![g("a1"), g("b1")],
            &[w("a1 a1 b1^-1"), w("b1 b1 b1 a1^-1")],
        )
        .unwrap();
        let t = todd_coxeter(&p, &[], None).unwrap();
        assert_eq!(t.degree(), 5);
    }

    #[test]
    fn todd_coxeter_respects_limit() {
        let p = Presentation::new("Z", vec![g("a1")], &[]).unwrap();
        let err = todd_coxeter(&p, &[], Some(50)).unwrap_err();
        assert!(matches!(err, Error::CosetLimitExceeded { limit: 50 }));
    }

    #[test]
    fn todd_coxeter_matches_kernel_table_after_canonicalization() {
        // Kernel of the sign-ish map of the free group on s1 mapping to (1 2):
        // index-2 subgroup; Todd–Coxeter with generators {s1²} on the free
        // presentation must reproduce the kernel table.
        let p = Presentation::new("F1", vec![g("s1")], &[]).unwrap();
        let mut images = BTreeMap::new();
        images.insert(g("s1"), Perm::transposition(2, 1, 2).unwrap());
        let kt = kernel_coset_table(&p, &images).unwrap();
        let tc = todd_coxeter(&p, &[w("s1 s1")], None).unwrap();
        assert_eq!(kt.canonicalize(), tc);
    }

    #[test]
    fn braid_kernel_table_small() {
        // B_3 -> S3: kernel = pure braid group, index 6.
        let s1 = Word::gen(g("s1"));
        let s2 = Word::gen(g("s2"));
        let p =
            Presentation::new("B3", vec![g("s1"), g("s2")], &[braid_relator(&s1, &s2)]).unwrap();
        let mut images = BTreeMap::new();
        images.insert(g("s1"), Perm::transposition(3, 1, 2).unwrap());
        images.insert(g("s2"), Perm::transposition(3, 2, 3).unwrap());
        let t = kernel_coset_table(&p, &images).unwrap();
        assert_eq!(t.degree(), 6);
        let tc = todd_coxeter(&p, &[w("s1 s1"), w("s2 s2"), w("s1 s2 s2 s1")], None).unwrap();
        assert_eq!(t.canonicalize(), tc);
    }

    #[test]
    fn bfs_transversal_is_shortest_and_prefix_closed() {
        let t = s3_images_table();
        let tr = schreier_transversal(&t, &TransversalStrategy::Bfs).unwrap();
        assert_eq!(tr.degree(), 6);
        assert!(tr.representative(0).is_empty());
        let words: BTreeSet<Word> = tr.words().iter().cloned().collect();
        for rep in tr.words() {
            // Each proper prefix is itself a representative.
            for cut in 0..rep.len() {
                let prefix = Word::from_letters(rep.letters()[..cut].iter().cloned());
                assert!(
                    words.contains(&prefix),
                    "prefix `{prefix}` of `{rep}` missing"
                );
            }
            // The representative traces to a coset which maps back to it.
            let c = t.apply_word(0, rep).unwrap();
            assert_eq!(tr.representative(c), rep);
        }
    }

    #[test]
    fn lambda_words_match_fixed_enumeration_for_n3() {
        let fam = lambda_words(3);
        let expected: Vec<Word> = [
            "",
            "r2.0",
            "r2.0 r1.0",
            "r1.0",
            "r1.0 r2.0",
            "r1.0 r2.0 r1.0",
        ]
        .iter()
        .map(|s| w(s))
        .collect();
        assert_eq!(fam, expected);
    }

    #[test]
    fn lambda_words_are_prefix_closed_sets() {
        for n in 2..=5 {
            let fam = lambda_words(n);
            let set: BTreeSet<Word> = fam.iter().cloned().collect();
            assert_eq!(set.len(), (1..=n).product::<usize>());
            for rep in &fam {
                for cut in 0..rep.len() {
                    let prefix = Word::from_letters(rep.letters()[..cut].iter().cloned());
                    assert!(
                        set.contains(&prefix),
                        "prefix `{prefix}` of `{rep}` missing"
                    );
                }
            }
        }
    }

    #[test]
    fn lambda_transversal_traces_bijectively() {
        let t = s3_images_table();
        let tr = schreier_transversal(&t, &TransversalStrategy::Lambda { n: 3 }).unwrap();
        assert_eq!(tr.degree(), 6);
        assert!(tr.representative(0).is_empty());
        for (c, rep) in tr.words().iter().enumerate() {
            assert_eq!(t.apply_word(0, rep).unwrap(), c);
        }
    }

    #[test]
    fn lambda_transversal_rejects_wrong_degree() {
        let p = Presentation::new("F1", vec![g("r1")], &[]).unwrap();
        let mut images = BTreeMap::new();
        images.insert(g("r1"), Perm::transposition(2, 1, 2).unwrap());
        let t = kernel_coset_table(&p, &images).unwrap();
        assert_eq!(t.degree(), 2);
        assert!(schreier_transversal(&t, &TransversalStrategy::Lambda { n: 3 }).is_err());
        // n = 2 works: representatives are the empty word and r1.0.
        let tr = schreier_transversal(&t, &TransversalStrategy::Lambda { n: 2 }).unwrap();
        assert_eq!(tr.words()[1], w("r1.0"));
    }

    #[test]
    fn canonicalize_is_idempotent_and_preserves_degree() {
        let t = s3_images_table();
        let c = t.canonicalize();
        assert_eq!(c.degree(), t.degree());
        assert_eq!(c.canonicalize(), c);
    }

    #[test]
    fn json_export_shape() {
        let p = Presentation::new("F1", vec![g("s1")], &[]).unwrap();
        let mut images = BTreeMap::new();
        images.insert(g("s1"), Perm::transposition(2, 1, 2).unwrap());
        let t = kernel_coset_table(&p, &images).unwrap();
        let v = t.to_json_value();
        assert_eq!(v["degree"], 2);
        assert_eq!(v["generators"][0], "s1");
        assert_eq!(v["action"]["s1"][0], 1);
        assert_eq!(v["action"]["s1^-1"][1], 0);
    }
}
