//! Free words over a structured generator alphabet.
//!
//! Generators come in named index families (`s1`, `r2.1`, `l1.3.0`, ...) plus
//! machine-generated Schreier symbols (`S[4;s1]`). Words are kept freely
//! reduced at all times; involutive generators are *not* treated as
//! self-inverse at the word level — that identification only ever enters
//! through explicit relators.
//!
//! A [`Relator`] is the canonical representative of the cyclic-equivalence
//! class of a word and its inverse: cyclically reduce, then take the minimum
//! over all rotations of the word and of its inverse under the fixed total
//! order on letters (family rank, then index vector, then sign, with the
//! positive sign first).

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;
use crate::Result;

/// Generator families, in canonical rank order.
///
/// The declared order (`Sigma < Rho < Lambda < X < Mu < Y < Z < User`)
/// is the tie-break order used everywhere words or relators are compared.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    /// Classical braid generators `s{i}`.
    Sigma,
    /// Involutive generators `r{i}.{a}` (sort `a` of the `i`-th position).
    Rho,
    /// Pure-kernel generators `l{i}.{j}` / `l{i}.{j}.{a}`.
    Lambda,
    /// Alternative pure-kernel generators `x{i}.{j}` / `x{i}.{j}.{a}`.
    X,
    /// Pure-kernel generators `m{i}.{j}` paired with sort 1.
    Mu,
    /// Involutive kernel generators `y{i}.{j}`.
    Y,
    /// Kernel generators `z{i}.{j}`.
    Z,
    /// Any other named family, ranked after the built-in ones.
    User(String),
}

impl Family {
    /// The token prefix used for this family.
    pub fn prefix(&self) -> &str {
        match self {
            Family::Sigma => "s",
            Family::Rho => "r",
            Family::Lambda => "l",
            Family::X => "x",
            Family::Mu => "m",
            Family::Y => "y",
            Family::Z => "z",
            Family::User(p) => p,
        }
    }
}

/// Identifier of a single group generator.
///
/// `Atom` generators belong to a family and carry an index vector; `Schreier`
/// generators are machine-generated subgroup symbols tagged by the coset they
/// were read off from and the ambient generator they traverse. The derived
/// ordering (atoms first, then Schreier symbols by `(coset, base)`) is part
/// of the crate's determinism contract.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GeneratorId {
    /// A named generator of an ambient presentation.
    Atom {
        /// Which letter family the generator belongs to.
        family: Family,
        /// Subscripts, e.g. `[i]` for `s{i}` or `[i, a]` for `r{i}.{a}`.
        indices: Vec<i32>,
    },
    /// A machine-generated subgroup generator from Schreier's method.
    Schreier {
        /// Coset the symbol was read off from.
        coset: usize,
        /// Ambient generator traversed out of that coset.
        base: Box<GeneratorId>,
    },
}

impl GeneratorId {
    /// Atom constructor.
    pub fn atom(family: Family, indices: &[i32]) -> Self {
        GeneratorId::Atom {
            family,
            indices: indices.to_vec(),
        }
    }

    /// `s{i}`.
    pub fn sigma(i: i32) -> Self {
        Self::atom(Family::Sigma, &[i])
    }

    /// `r{i}.{a}`: sort `a` involutive generator at position `i`.
    pub fn rho(i: i32, a: i32) -> Self {
        Self::atom(Family::Rho, &[i, a])
    }

    /// Two-index lambda generator `l{i}.{j}`.
    pub fn lambda2(i: i32, j: i32) -> Self {
        Self::atom(Family::Lambda, &[i, j])
    }

    /// Three-index lambda generator `l{i}.{j}.{a}`.
    pub fn lambda3(i: i32, j: i32, a: i32) -> Self {
        Self::atom(Family::Lambda, &[i, j, a])
    }

    /// Two-index x generator `x{i}.{j}`.
    pub fn x2(i: i32, j: i32) -> Self {
        Self::atom(Family::X, &[i, j])
    }

    /// Three-index x generator `x{i}.{j}.{a}`.
    pub fn x3(i: i32, j: i32, a: i32) -> Self {
        Self::atom(Family::X, &[i, j, a])
    }

    /// `m{i}.{j}`.
    pub fn mu(i: i32, j: i32) -> Self {
        Self::atom(Family::Mu, &[i, j])
    }

    /// `y{i}.{j}`.
    pub fn y(i: i32, j: i32) -> Self {
        Self::atom(Family::Y, &[i, j])
    }

    /// `z{i}.{j}`.
    pub fn z(i: i32, j: i32) -> Self {
        Self::atom(Family::Z, &[i, j])
    }

    /// User-family generator, e.g. `user("c", &[1])` for `c1`.
    pub fn user(prefix: &str, indices: &[i32]) -> Self {
        Self::atom(Family::User(prefix.to_string()), indices)
    }

    /// Schreier subgroup symbol for traversing `base` from coset `coset`.
    pub fn schreier(coset: usize, base: GeneratorId) -> Self {
        GeneratorId::Schreier {
            coset,
            base: Box::new(base),
        }
    }

    /// Render with the requested display style.
    pub fn display(&self, style: DisplayStyle) -> String {
        match self {
            GeneratorId::Atom { family, indices } => {
                if style == DisplayStyle::TauForRho1 && *family == Family::Rho && indices.len() == 2
                {
                    match indices[1] {
                        0 => return format!("r{}", indices[0]),
                        1 => return format!("t{}", indices[0]),
                        _ => {}
                    }
                }
                let idx = indices
                    .iter()
                    .map(|i| i.to_string())
                    .collect::<Vec<_>>()
                    .join(".");
                format!("{}{}", family.prefix(), idx)
            }
            GeneratorId::Schreier { coset, base } => {
                format!("S[{};{}]", coset, base.display(style))
            }
        }
    }

    /// Parse a single generator token (no exponent suffix).
    pub fn parse(token: &str) -> Result<Self> {
        let (gen, rest) = parse_generator_prefix(token)?;
        if !rest.is_empty() {
            return Err(Error::Parse {
                input: token.to_string(),
                reason: format!("unexpected trailing text `{rest}`"),
            });
        }
        Ok(gen)
    }
}

impl fmt::Display for GeneratorId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display(DisplayStyle::Plain))
    }
}

impl FromStr for GeneratorId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        GeneratorId::parse(s)
    }
}

impl Serialize for GeneratorId {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.display(DisplayStyle::Plain))
    }
}

impl<'de> Deserialize<'de> for GeneratorId {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        GeneratorId::parse(&s).map_err(serde::de::Error::custom)
    }
}

/// Sign of a letter; `Pos` sorts before `Neg`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    /// Exponent `+1`.
    Pos,
    /// Exponent `−1`.
    Neg,
}

impl Sign {
    /// The opposite sign.
    pub fn flip(self) -> Sign {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }

    /// `+1` or `−1` as an integer.
    pub fn exponent(self) -> i32 {
        match self {
            Sign::Pos => 1,
            Sign::Neg => -1,
        }
    }
}

/// A single signed generator occurrence.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter {
    /// The generator that occurs.
    pub gen: GeneratorId,
    /// Whether it occurs directly or inverted.
    pub sign: Sign,
}

impl Letter {
    /// `gen` with exponent `+1`.
    pub fn pos(gen: GeneratorId) -> Letter {
        Letter {
            gen,
            sign: Sign::Pos,
        }
    }

    /// `gen` with exponent `−1`.
    pub fn neg(gen: GeneratorId) -> Letter {
        Letter {
            gen,
            sign: Sign::Neg,
        }
    }

    /// The same generator with the sign flipped.
    pub fn inverse(&self) -> Letter {
        Letter {
            gen: self.gen.clone(),
            sign: self.sign.flip(),
        }
    }

    /// True when the two letters cancel as `x · x⁻¹`.
    pub fn is_inverse_of(&self, other: &Letter) -> bool {
        self.gen == other.gen && self.sign != other.sign
    }

    /// Render with the requested display style.
    pub fn display(&self, style: DisplayStyle) -> String {
        match self.sign {
            Sign::Pos => self.gen.display(style),
            Sign::Neg => format!("{}^-1", self.gen.display(style)),
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display(DisplayStyle::Plain))
    }
}

/// Display style for tokens.
///
/// `TauForRho1` renders sort-0 involutive generators as `r{i}` and sort-1 as
/// `t{i}`; every other generator renders as in `Plain`. Both spellings parse
/// under either style.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum DisplayStyle {
    /// Canonical spelling: `s{i}`, `r{i}.{a}`, and so on.
    #[default]
    Plain,
    /// Two-sort shorthand: sort 0 as `r{i}`, sort 1 as `t{i}`.
    TauForRho1,
}

/// A freely reduced word. The reduction invariant is maintained by every
/// constructor and operation; two words are equal as free-group elements
/// exactly when they are `==`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Word(Vec<Letter>);

impl Word {
    /// The empty word.
    pub fn identity() -> Word {
        Word(Vec::new())
    }

    /// Single positive letter.
    pub fn gen(g: GeneratorId) -> Word {
        Word(vec![Letter::pos(g)])
    }

    /// Single letter.
    pub fn letter(l: Letter) -> Word {
        Word(vec![l])
    }

    /// Build a word from letters, freely reducing.
    pub fn from_letters<I: IntoIterator<Item = Letter>>(letters: I) -> Word {
        let mut stack: Vec<Letter> = Vec::new();
        for l in letters {
            if stack.last().is_some_and(|top| top.is_inverse_of(&l)) {
                stack.pop();
            } else {
                stack.push(l);
            }
        }
        Word(stack)
    }

    /// Build a word from `(generator, exponent)` pairs, freely reducing.
    pub fn from_powers(powers: &[(GeneratorId, i32)]) -> Word {
        let mut letters = Vec::new();
        for (g, e) in powers {
            let sign = if *e >= 0 { Sign::Pos } else { Sign::Neg };
            for _ in 0..e.unsigned_abs() {
                letters.push(Letter {
                    gen: g.clone(),
                    sign,
                });
            }
        }
        Word::from_letters(letters)
    }

    /// The underlying reduced letter sequence.
    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    /// Number of letters after free reduction.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// True for the identity word.
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Inverse word (reverse the letters and flip every sign).
    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(Letter::inverse).collect())
    }

    /// Concatenation `self · other`, reduced.
    pub fn concat(&self, other: &Word) -> Word {
        Word::from_letters(self.0.iter().chain(other.0.iter()).cloned())
    }

    /// Product of several words, reduced.
    pub fn product<'a, I: IntoIterator<Item = &'a Word>>(words: I) -> Word {
        Word::from_letters(words.into_iter().flat_map(|w| w.0.iter().cloned()))
    }

    /// `u · self · u⁻¹`.
    pub fn conjugated_by(&self, u: &Word) -> Word {
        Word::product([u, self, &u.inverse()])
    }

    /// Integer power, reduced.
    pub fn pow(&self, n: i32) -> Word {
        let base = if n >= 0 { self.clone() } else { self.inverse() };
        let mut out = Word::identity();
        for _ in 0..n.unsigned_abs() {
            out = out.concat(&base);
        }
        out
    }

    /// Set of distinct generators occurring in the word.
    pub fn support(&self) -> BTreeSet<GeneratorId> {
        self.0.iter().map(|l| l.gen.clone()).collect()
    }

    /// Net exponent of `g` in the word.
    pub fn exponent_sum(&self, g: &GeneratorId) -> i64 {
        self.0
            .iter()
            .filter(|l| &l.gen == g)
            .map(|l| l.sign.exponent() as i64)
            .sum()
    }

    /// Number of occurrences of `g`, counting both signs.
    pub fn occurrences(&self, g: &GeneratorId) -> usize {
        self.0.iter().filter(|l| &l.gen == g).count()
    }

    /// Replace every generator in the map's domain by its image word
    /// (inverted for negative occurrences); other generators are kept.
    /// The result is freely reduced.
    pub fn substitute(&self, map: &BTreeMap<GeneratorId, Word>) -> Word {
        let mut letters = Vec::new();
        for l in &self.0 {
            match map.get(&l.gen) {
                Some(image) => {
                    let img = match l.sign {
                        Sign::Pos => image.clone(),
                        Sign::Neg => image.inverse(),
                    };
                    letters.extend(img.0);
                }
                None => letters.push(l.clone()),
            }
        }
        Word::from_letters(letters)
    }

    /// Cyclically reduced core: strip matching inverse first/last letters.
    pub fn cyclic_core(&self) -> Word {
        let mut letters = self.0.clone();
        while letters.len() >= 2
            && letters
                .first()
                .is_some_and(|f| f.is_inverse_of(letters.last().unwrap()))
        {
            letters.pop();
            letters.remove(0);
        }
        Word(letters)
    }

    /// Render with the requested display style. The empty word renders as "".
    pub fn display(&self, style: DisplayStyle) -> String {
        self.0
            .iter()
            .map(|l| l.display(style))
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// Parse a whitespace- or `*`-separated sequence of generator tokens with
    /// optional integer exponent suffixes (`^-1`, `^3`, ...). Exponents are
    /// expanded into repeated letters; the result is freely reduced.
    pub fn parse(s: &str) -> Result<Word> {
        let cleaned = s.replace('*', " ");
        let mut letters = Vec::new();
        for token in cleaned.split_whitespace() {
            let (gen, exp) = parse_letter_token(token)?;
            let sign = if exp >= 0 { Sign::Pos } else { Sign::Neg };
            for _ in 0..exp.unsigned_abs() {
                letters.push(Letter {
                    gen: gen.clone(),
                    sign,
                });
            }
        }
        Ok(Word::from_letters(letters))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display(DisplayStyle::Plain))
    }
}

impl FromStr for Word {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Word::parse(s)
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.display(DisplayStyle::Plain))
    }
}

impl<'de> Deserialize<'de> for Word {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        Word::parse(&s).map_err(serde::de::Error::custom)
    }
}

/// Freely reduce a letter sequence into a [`Word`].
pub fn free_reduce<I: IntoIterator<Item = Letter>>(letters: I) -> Word {
    Word::from_letters(letters)
}

/// Canonical representative of the cyclic class of a word and its inverse.
///
/// Construction: cyclically reduce, then take the lexicographic minimum over
/// all rotations of the core and of the core's inverse, comparing letters by
/// `(generator, sign)` under the fixed total order. Equal `Relator`s are
/// exactly words that are conjugate to each other or to each other's inverse
/// *as cyclic words at the free level* (no group relations applied).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Relator(Word);

impl Relator {
    /// Canonicalize a word into its relator class representative.
    pub fn new(w: &Word) -> Relator {
        let core = w.cyclic_core();
        if core.is_empty() {
            return Relator(Word::identity());
        }
        let mut best: Option<Vec<Letter>> = None;
        for candidate in [core.clone(), core.inverse()] {
            let n = candidate.0.len();
            for start in 0..n {
                let mut rot: Vec<Letter> = Vec::with_capacity(n);
                rot.extend_from_slice(&candidate.0[start..]);
                rot.extend_from_slice(&candidate.0[..start]);
                match &best {
                    None => best = Some(rot),
                    Some(b) => {
                        if rot.cmp(b) == Ordering::Less {
                            best = Some(rot);
                        }
                    }
                }
            }
        }
        Relator(Word(best.unwrap()))
    }

    /// The canonical word.
    pub fn word(&self) -> &Word {
        &self.0
    }

    /// True when the relator reduces to the identity.
    pub fn is_trivial(&self) -> bool {
        self.0.is_empty()
    }

    /// Length of the canonical word.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// True when the canonical word is empty.
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Set of distinct generators occurring in the relator.
    pub fn support(&self) -> BTreeSet<GeneratorId> {
        self.0.support()
    }

    /// Render with the requested display style.
    pub fn display(&self, style: DisplayStyle) -> String {
        self.0.display(style)
    }
}

impl fmt::Display for Relator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0.display(DisplayStyle::Plain))
    }
}

impl Serialize for Relator {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Relator {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let w = Word::deserialize(deserializer)?;
        Ok(Relator::new(&w))
    }
}

/// Canonicalize a word into a [`Relator`].
pub fn canonical_relator(w: &Word) -> Relator {
    Relator::new(w)
}

/// The relator asserting `a` and `b` commute: `a b a⁻¹ b⁻¹`.
pub fn commutator(a: &Word, b: &Word) -> Word {
    Word::product([a, b, &a.inverse(), &b.inverse()])
}

/// The braid relator `a b a (b a b)⁻¹`.
pub fn braid_relator(a: &Word, b: &Word) -> Word {
    Word::product([a, b, a, &b.inverse(), &a.inverse(), &b.inverse()])
}

/// The mixed-cycle relator `a b c (c b a)⁻¹ = a b c a⁻¹ b⁻¹ c⁻¹`.
pub fn cycle_relator(a: &Word, b: &Word, c: &Word) -> Word {
    Word::product([a, b, c, &a.inverse(), &b.inverse(), &c.inverse()])
}

// ---------------------------------------------------------------------------
// Token parsing
// ---------------------------------------------------------------------------

/// Split `token` into generator and `^exp` suffix (default exponent 1).
fn parse_letter_token(token: &str) -> Result<(GeneratorId, i32)> {
    let (gen_part, exp) = match token.find('^') {
        Some(pos) => {
            let e: i32 = token[pos + 1..].parse().map_err(|_| Error::Parse {
                input: token.to_string(),
                reason: format!("bad exponent `{}`", &token[pos + 1..]),
            })?;
            (&token[..pos], e)
        }
        None => (token, 1),
    };
    let gen = GeneratorId::parse(gen_part)?;
    Ok((gen, exp))
}

/// Parse a generator from the start of `s`; return it and the unconsumed rest.
fn parse_generator_prefix(s: &str) -> Result<(GeneratorId, &str)> {
    if s.is_empty() {
        return Err(Error::Parse {
            input: s.to_string(),
            reason: "empty token".into(),
        });
    }
    if let Some(body) = s.strip_prefix("S[") {
        // Schreier symbol: S[<coset>;<base>]
        let semi = body.find(';').ok_or_else(|| Error::Parse {
            input: s.to_string(),
            reason: "Schreier token missing `;`".into(),
        })?;
        let coset: usize = body[..semi].parse().map_err(|_| Error::Parse {
            input: s.to_string(),
            reason: format!("bad coset number `{}`", &body[..semi]),
        })?;
        let (base, rest) = parse_generator_prefix(&body[semi + 1..])?;
        let rest = rest.strip_prefix(']').ok_or_else(|| Error::Parse {
            input: s.to_string(),
            reason: "Schreier token missing closing `]`".into(),
        })?;
        return Ok((GeneratorId::schreier(coset, base), rest));
    }

    // Alphabetic prefix, then dot-separated integers.
    let prefix_len = s
        .chars()
        .take_while(|c| c.is_ascii_alphabetic() && *c != '^')
        .map(|c| c.len_utf8())
        .sum::<usize>();
    if prefix_len == 0 {
        return Err(Error::Parse {
            input: s.to_string(),
            reason: "token must start with a family letter or `S[`".into(),
        });
    }
    let prefix = &s[..prefix_len];
    let mut rest = &s[prefix_len..];
    let mut indices: Vec<i32> = Vec::new();
    // Consume an integer, then repeats of ".<integer>".
    loop {
        let num_len = {
            let mut chars = rest.char_indices().peekable();
            let mut len = 0usize;
            if let Some((_, c)) = chars.peek() {
                if *c == '-' {
                    len = 1;
                    chars.next();
                }
            }
            let digits: usize = chars
                .take_while(|(_, c)| c.is_ascii_digit())
                .map(|(_, c)| c.len_utf8())
                .sum();
            if digits == 0 {
                0
            } else {
                len + digits
            }
        };
        if num_len == 0 {
            break;
        }
        let n: i32 = rest[..num_len].parse().map_err(|_| Error::Parse {
            input: s.to_string(),
            reason: format!("bad index `{}`", &rest[..num_len]),
        })?;
        indices.push(n);
        rest = &rest[num_len..];
        if let Some(r) = rest.strip_prefix('.') {
            rest = r;
        } else {
            break;
        }
    }

    let fail = |reason: String| Error::Parse {
        input: s.to_string(),
        reason,
    };
    let gen = match prefix {
        "s" => {
            if indices.len() != 1 {
                return Err(fail("`s` takes exactly one index".into()));
            }
            GeneratorId::sigma(indices[0])
        }
        "r" => match indices.len() {
            1 => GeneratorId::rho(indices[0], 0),
            2 => GeneratorId::rho(indices[0], indices[1]),
            _ => return Err(fail("`r` takes one or two indices".into())),
        },
        "t" => {
            if indices.len() != 1 {
                return Err(fail("`t` takes exactly one index".into()));
            }
            GeneratorId::rho(indices[0], 1)
        }
        "l" | "x" => {
            let family = if prefix == "l" {
                Family::Lambda
            } else {
                Family::X
            };
            match indices.len() {
                2 | 3 => GeneratorId::Atom { family, indices },
                _ => return Err(fail(format!("`{prefix}` takes two or three indices"))),
            }
        }
        "m" | "y" | "z" => {
            if indices.len() != 2 {
                return Err(fail(format!("`{prefix}` takes exactly two indices")));
            }
            let family = match prefix {
                "m" => Family::Mu,
                "y" => Family::Y,
                _ => Family::Z,
            };
            GeneratorId::Atom { family, indices }
        }
        other => GeneratorId::Atom {
            family: Family::User(other.to_string()),
            indices,
        },
    };
    Ok((gen, rest))
}
