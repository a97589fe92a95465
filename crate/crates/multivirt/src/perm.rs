//! Permutations of `{1, ..., n}` and permutation-valued evaluation of words.
//!
//! Permutations act on the right and words evaluate left to right:
//! `evaluate(u · v) = evaluate(u) · evaluate(v)` with
//! `(p · q)(x) = q(p(x))`.

use std::collections::BTreeMap;
use std::fmt;

use itertools::Itertools;

use crate::error::Error;
use crate::word::{GeneratorId, Sign, Word};
use crate::Result;

/// Largest degree accepted by [`enumerate_symmetric`].
pub const MAX_SYMMETRIC_DEGREE: usize = 8;

/// A permutation of `{1, ..., n}` in one-line notation.
///
/// `images[i]` is the image of `i + 1`; all values are 1-based.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Perm {
    images: Vec<usize>,
}

impl Perm {
    /// Identity permutation of the given degree.
    pub fn identity(degree: usize) -> Perm {
        Perm {
            images: (1..=degree).collect(),
        }
    }

    /// Build from a one-line image vector (1-based values).
    pub fn from_images(images: Vec<usize>) -> Result<Perm> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            if v == 0 || v > n {
                return Err(Error::InvalidPermutation {
                    reason: format!("image {v} out of range 1..={n}"),
                });
            }
            if seen[v - 1] {
                return Err(Error::InvalidPermutation {
                    reason: format!("image {v} repeated"),
                });
            }
            seen[v - 1] = true;
        }
        Ok(Perm { images })
    }

    /// Transposition `(i j)` inside degree `n`.
    pub fn transposition(n: usize, i: usize, j: usize) -> Result<Perm> {
        if i == 0 || j == 0 || i > n || j > n || i == j {
            return Err(Error::InvalidPermutation {
                reason: format!("bad transposition ({i} {j}) for degree {n}"),
            });
        }
        let mut images: Vec<usize> = (1..=n).collect();
        images.swap(i - 1, j - 1);
        Ok(Perm { images })
    }

    /// Number of points the permutation acts on.
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of the 1-based point `x`.
    pub fn apply(&self, x: usize) -> usize {
        assert!(
            x >= 1 && x <= self.images.len(),
            "point {x} out of range 1..={}",
            self.images.len()
        );
        self.images[x - 1]
    }

    /// One-line image vector (1-based values).
    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// True when every point is fixed.
    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    /// `self` followed by `other`: `(self.compose(other))(x) = other(self(x))`.
    pub fn compose(&self, other: &Perm) -> Perm {
        assert_eq!(
            self.degree(),
            other.degree(),
            "cannot compose permutations of degrees {} and {}",
            self.degree(),
            other.degree()
        );
        Perm {
            images: self.images.iter().map(|&v| other.images[v - 1]).collect(),
        }
    }

    /// The inverse permutation.
    pub fn inverse(&self) -> Perm {
        let mut images = vec![0usize; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v - 1] = i + 1;
        }
        Perm { images }
    }

    /// Disjoint-cycle notation; the identity renders as `e`.
    ///
    /// Cycles are listed by ascending smallest element and each cycle starts
    /// at its smallest element, so the rendering is canonical.
    pub fn cycle_string(&self) -> String {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut out = String::new();
        for start in 1..=n {
            if seen[start - 1] || self.apply(start) == start {
                seen[start - 1] = true;
                continue;
            }
            let mut cycle = vec![start];
            seen[start - 1] = true;
            let mut x = self.apply(start);
            while x != start {
                seen[x - 1] = true;
                cycle.push(x);
                x = self.apply(x);
            }
            out.push('(');
            out.push_str(&cycle.iter().map(|v| v.to_string()).join(" "));
            out.push(')');
        }
        if out.is_empty() {
            "e".to_string()
        } else {
            out
        }
    }

    /// Parse cycle notation (`"(1 2)(3 4)"`, commas allowed) or `"e"` / `"()"`
    /// for the identity, at the given degree. Cycles compose left to right.
    pub fn parse_cycles(s: &str, degree: usize) -> Result<Perm> {
        let trimmed = s.trim();
        if trimmed == "e" || trimmed == "()" || trimmed.is_empty() {
            return Ok(Perm::identity(degree));
        }
        let mut result = Perm::identity(degree);
        let mut rest = trimmed;
        while !rest.is_empty() {
            let rest2 = rest.trim_start();
            if rest2.is_empty() {
                break;
            }
            if !rest2.starts_with('(') {
                return Err(Error::Parse {
                    input: s.to_string(),
                    reason: "expected `(` starting a cycle".into(),
                });
            }
            let close = rest2.find(')').ok_or_else(|| Error::Parse {
                input: s.to_string(),
                reason: "unclosed cycle".into(),
            })?;
            let body = &rest2[1..close];
            let points: Vec<usize> = body
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|t| !t.is_empty())
                .map(|t| {
                    t.parse::<usize>().map_err(|_| Error::Parse {
                        input: s.to_string(),
                        reason: format!("bad point `{t}` in cycle"),
                    })
                })
                .collect::<Result<_>>()?;
            for &p in &points {
                if p == 0 || p > degree {
                    return Err(Error::Parse {
                        input: s.to_string(),
                        reason: format!("point {p} out of range 1..={degree}"),
                    });
                }
            }
            if points.iter().duplicates().next().is_some() {
                return Err(Error::Parse {
                    input: s.to_string(),
                    reason: "repeated point in cycle".into(),
                });
            }
            let mut images: Vec<usize> = (1..=degree).collect();
            if points.len() >= 2 {
                for w in 0..points.len() {
                    let from = points[w];
                    let to = points[(w + 1) % points.len()];
                    images[from - 1] = to;
                }
            }
            let cycle = Perm { images };
            result = result.compose(&cycle);
            rest = &rest2[close + 1..];
        }
        Ok(result)
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.cycle_string())
    }
}

/// Evaluate a word under generator images, left to right.
///
/// Fails with [`Error::MissingImage`] if a generator in the word has no image.
pub fn evaluate(word: &Word, images: &BTreeMap<GeneratorId, Perm>, degree: usize) -> Result<Perm> {
    let mut result = Perm::identity(degree);
    for letter in word.letters() {
        let p = images.get(&letter.gen).ok_or_else(|| Error::MissingImage {
            generator: letter.gen.to_string(),
        })?;
        let step = match letter.sign {
            Sign::Pos => p.clone(),
            Sign::Neg => p.inverse(),
        };
        result = result.compose(&step);
    }
    Ok(result)
}

/// All permutations of degree `n` in lexicographic one-line order.
///
/// Guarded to `1 ≤ n ≤ 8`; the identity is always first.
pub fn enumerate_symmetric(n: usize) -> Result<Vec<Perm>> {
    if !(1..=MAX_SYMMETRIC_DEGREE).contains(&n) {
        return Err(Error::DegreeOutOfRange {
            n,
            min: 1,
            max: MAX_SYMMETRIC_DEGREE,
        });
    }
    Ok((1..=n)
        .permutations(n)
        .map(|images| Perm { images })
        .collect())
}
