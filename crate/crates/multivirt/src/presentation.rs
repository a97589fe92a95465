//! Finite presentations: a named generator list plus canonical relators.
//!
//! Relators are stored in canonical cyclic form (see [`crate::word::Relator`])
//! in declaration order. The JSON schema is
//! `{"name": ..., "generators": [tokens], "relators": [word strings]}`.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::word::{DisplayStyle, GeneratorId, Relator, Word};
use crate::Result;

/// A finite presentation with validated structure:
/// no duplicate generators, every relator supported on declared generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    name: String,
    generators: Vec<GeneratorId>,
    relators: Vec<Relator>,
}

impl Presentation {
    /// Build from relator words (canonicalized on entry) and validate.
    pub fn new(name: &str, generators: Vec<GeneratorId>, relator_words: &[Word]) -> Result<Self> {
        let relators = relator_words.iter().map(Relator::new).collect();
        Self::from_relators(name, generators, relators)
    }

    /// Build from already-canonical relators and validate.
    pub fn from_relators(
        name: &str,
        generators: Vec<GeneratorId>,
        relators: Vec<Relator>,
    ) -> Result<Self> {
        let p = Presentation {
            name: name.to_string(),
            generators,
            relators,
        };
        p.validate()?;
        Ok(p)
    }

    /// Re-check structural invariants: unique generators, relator support.
    pub fn validate(&self) -> Result<()> {
        let mut seen = BTreeSet::new();
        for g in &self.generators {
            if !seen.insert(g.clone()) {
                return Err(Error::InvalidPresentation {
                    name: self.name.clone(),
                    reason: format!("generator `{g}` declared twice"),
                });
            }
        }
        for r in &self.relators {
            for g in r.support() {
                if !seen.contains(&g) {
                    return Err(Error::InvalidPresentation {
                        name: self.name.clone(),
                        reason: format!("relator `{r}` uses undeclared generator `{g}`"),
                    });
                }
            }
        }
        Ok(())
    }

    /// Display name of the presentation.
    pub fn name(&self) -> &str {
        &self.name
    }

    /// The same presentation under a new name.
    pub fn with_name(mut self, name: &str) -> Self {
        self.name = name.to_string();
        self
    }

    /// Generators in declaration order.
    pub fn generators(&self) -> &[GeneratorId] {
        &self.generators
    }

    /// Relators in declaration order.
    pub fn relators(&self) -> &[Relator] {
        &self.relators
    }

    /// Number of generators.
    pub fn generator_count(&self) -> usize {
        self.generators.len()
    }

    /// Number of relators.
    pub fn relator_count(&self) -> usize {
        self.relators.len()
    }

    /// True when `g` is a declared generator.
    pub fn has_generator(&self, g: &GeneratorId) -> bool {
        self.generators.contains(g)
    }

    /// Position of `g` in the declaration order.
    pub fn generator_index(&self, g: &GeneratorId) -> Option<usize> {
        self.generators.iter().position(|h| h == g)
    }

    /// The relator multiset as a sorted vector (for comparisons).
    pub fn sorted_relators(&self) -> Vec<Relator> {
        let mut rs = self.relators.clone();
        rs.sort();
        rs
    }

    /// Copy with empty relators removed.
    pub fn without_trivial_relators(&self) -> Presentation {
        Presentation {
            name: self.name.clone(),
            generators: self.generators.clone(),
            relators: self
                .relators
                .iter()
                .filter(|r| !r.is_trivial())
                .cloned()
                .collect(),
        }
    }

    /// Copy with duplicate relators removed, keeping first occurrences.
    pub fn with_deduped_relators(&self) -> Presentation {
        let mut seen = BTreeSet::new();
        let relators = self
            .relators
            .iter()
            .filter(|r| seen.insert((*r).clone()))
            .cloned()
            .collect();
        Presentation {
            name: self.name.clone(),
            generators: self.generators.clone(),
            relators,
        }
    }

    /// Sub-presentation on `gens`: keeps exactly the relators whose support
    /// lies inside `gens`. Generator order is inherited.
    pub fn restricted_to(&self, gens: &BTreeSet<GeneratorId>, name: &str) -> Presentation {
        Presentation {
            name: name.to_string(),
            generators: self
                .generators
                .iter()
                .filter(|g| gens.contains(*g))
                .cloned()
                .collect(),
            relators: self
                .relators
                .iter()
                .filter(|r| r.support().iter().all(|g| gens.contains(g)))
                .cloned()
                .collect(),
        }
    }

    /// Free-product factors: connected components of the graph whose vertices
    /// are generators and whose edges join generators sharing a relator.
    /// Generators appearing in no relator become singleton free factors.
    /// Components are ordered by their earliest-declared generator and named
    /// `{name}[i]` (1-based). Empty relators are ignored.
    pub fn support_components(&self) -> Vec<Presentation> {
        let n = self.generators.len();
        let mut dsu: Vec<usize> = (0..n).collect();
        fn find(dsu: &mut Vec<usize>, x: usize) -> usize {
            if dsu[x] != x {
                let root = find(dsu, dsu[x]);
                dsu[x] = root;
            }
            dsu[x]
        }
        for r in &self.relators {
            let support: Vec<usize> = r
                .support()
                .iter()
                .filter_map(|g| self.generator_index(g))
                .collect();
            for w in support.windows(2) {
                let (a, b) = (find(&mut dsu, w[0]), find(&mut dsu, w[1]));
                if a != b {
                    let (lo, hi) = if a < b { (a, b) } else { (b, a) };
                    dsu[hi] = lo;
                }
            }
        }
        // Group generator indices by root, ordered by earliest member.
        let mut roots_in_order: Vec<usize> = Vec::new();
        let mut members: Vec<Vec<usize>> = Vec::new();
        for i in 0..n {
            let root = find(&mut dsu, i);
            match roots_in_order.iter().position(|&r| r == root) {
                Some(pos) => members[pos].push(i),
                None => {
                    roots_in_order.push(root);
                    members.push(vec![i]);
                }
            }
        }
        members
            .iter()
            .enumerate()
            .map(|(ci, idxs)| {
                let gens: Vec<GeneratorId> =
                    idxs.iter().map(|&i| self.generators[i].clone()).collect();
                let genset: BTreeSet<GeneratorId> = gens.iter().cloned().collect();
                let relators: Vec<Relator> = self
                    .relators
                    .iter()
                    .filter(|r| !r.is_trivial() && r.support().iter().all(|g| genset.contains(g)))
                    .cloned()
                    .collect();
                Presentation {
                    name: format!("{}[{}]", self.name, ci + 1),
                    generators: gens,
                    relators,
                }
            })
            .collect()
    }

    /// Human-readable rendering.
    pub fn display(&self, style: DisplayStyle) -> String {
        let mut out = format!("presentation {}\n", self.name);
        out.push_str(&format!(
            "generators ({}): {}\n",
            self.generators.len(),
            self.generators
                .iter()
                .map(|g| g.display(style))
                .collect::<Vec<_>>()
                .join(" ")
        ));
        out.push_str(&format!("relators ({}):\n", self.relators.len()));
        for r in &self.relators {
            out.push_str(&format!("  {}\n", r.display(style)));
        }
        out
    }

    /// Serialize to the JSON schema (deterministic field and item order).
    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(self).expect("presentation serialization cannot fail")
    }

    /// Parse and validate from the JSON schema.
    pub fn from_json_str(s: &str) -> Result<Presentation> {
        let parsed: Presentation = serde_json::from_str(s)?;
        parsed.validate()?;
        Ok(parsed)
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display(DisplayStyle::Plain))
    }
}

#[derive(Serialize, Deserialize)]
struct PresentationJson {
    name: String,
    generators: Vec<GeneratorId>,
    relators: Vec<Relator>,
}

impl Serialize for Presentation {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        PresentationJson {
            name: self.name.clone(),
            generators: self.generators.clone(),
            relators: self.relators.clone(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Presentation {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        let raw = PresentationJson::deserialize(deserializer)?;
        Presentation::from_relators(&raw.name, raw.generators, raw.relators)
            .map_err(serde::de::Error::custom)
    }
}
