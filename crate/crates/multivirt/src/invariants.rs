//! Integer linear algebra for presentation invariants: Smith normal form,
//! relation matrices, and abelianizations.
//!
//! [`smith_normal_form`] returns the diagonal together with the unimodular
//! row/column transforms and *verifies on every call* that the transforms
//! reproduce the diagonal and that the divisibility chain holds. The
//! [`oracle`] submodule computes elementary divisors by a completely
//! independent method (GCDs of k×k minors) for cross-checking in tests.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::presentation::Presentation;

/// Outcome of a Smith normal form computation for an `m × n` matrix `M`:
/// `left · M · right` is diagonal, `left` (`m × m`) and `right` (`n × n`)
/// are unimodular, and the diagonal entries are nonnegative with each
/// nonzero entry dividing the next.
#[derive(Clone, Debug)]
pub struct SmithNormalForm {
    /// Diagonal entries, `min(m, n)` of them, zeros trailing.
    pub diagonal: Vec<BigInt>,
    /// Unimodular `m × m` row transform.
    pub left: Vec<Vec<BigInt>>,
    /// Unimodular `n × n` column transform.
    pub right: Vec<Vec<BigInt>>,
    /// Number of nonzero diagonal entries.
    pub rank: usize,
}

fn identity(k: usize) -> Vec<Vec<BigInt>> {
    (0..k)
        .map(|i| {
            (0..k)
                .map(|j| {
                    if i == j {
                        BigInt::one()
                    } else {
                        BigInt::zero()
                    }
                })
                .collect()
        })
        .collect()
}

fn mat_mul(a: &[Vec<BigInt>], b: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let rows = a.len();
    let inner = b.len();
    let cols = if inner == 0 { 0 } else { b[0].len() };
    (0..rows)
        .map(|i| {
            (0..cols)
                .map(|j| (0..inner).map(|k| &a[i][k] * &b[k][j]).sum())
                .collect()
        })
        .collect()
}

fn gcd(a: &BigInt, b: &BigInt) -> BigInt {
    let mut a = a.abs();
    let mut b = b.abs();
    while !b.is_zero() {
        let r = &a % &b;
        a = std::mem::replace(&mut b, r);
    }
    a
}

/// Smith normal form of an integer matrix given as `nrows` rows of length
/// `ncols`. Panics on ragged input. The result is self-verified: the
/// returned transforms are multiplied out and compared against the
/// diagonal, and the divisibility chain is checked.
// Row/column operations combine two rows of the same matrix, which the
// iterator form suggested by this lint cannot express without split borrows.
#[allow(clippy::needless_range_loop)]
pub fn smith_normal_form(matrix: &[Vec<BigInt>], ncols: usize) -> SmithNormalForm {
    let nrows = matrix.len();
    for row in matrix {
        assert_eq!(row.len(), ncols, "ragged matrix row");
    }
    let mut a: Vec<Vec<BigInt>> = matrix.to_vec();
    let mut left = identity(nrows);
    let mut right = identity(ncols);
    let dim = nrows.min(ncols);
    let mut t = 0;

    'outer: while t < dim {
        // Pivot: smallest |nonzero| in the trailing submatrix, ties row-major.
        let mut pivot: Option<(usize, usize)> = None;
        for i in t..nrows {
            for j in t..ncols {
                if !a[i][j].is_zero()
                    && pivot.is_none_or(|(pi, pj)| a[i][j].magnitude() < a[pi][pj].magnitude())
                {
                    pivot = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = pivot else { break };
        if pi != t {
            a.swap(pi, t);
            left.swap(pi, t);
        }
        if pj != t {
            for row in &mut a {
                row.swap(pj, t);
            }
            for row in &mut right {
                row.swap(pj, t);
            }
        }
        if a[t][t].is_negative() {
            for x in &mut a[t] {
                *x = -std::mem::take(x);
            }
            for x in &mut left[t] {
                *x = -std::mem::take(x);
            }
        }

        // Clear column t below the pivot (truncated quotients; a nonzero
        // remainder is strictly smaller than the pivot, so restart).
        let mut dirty = false;
        for i in t + 1..nrows {
            if !a[i][t].is_zero() {
                let q = &a[i][t] / &a[t][t];
                if !q.is_zero() {
                    for j in 0..ncols {
                        let delta = &q * &a[t][j];
                        a[i][j] -= delta;
                    }
                    for j in 0..nrows {
                        let delta = &q * &left[t][j];
                        left[i][j] -= delta;
                    }
                }
                if !a[i][t].is_zero() {
                    dirty = true;
                }
            }
        }
        if dirty {
            continue;
        }

        // Clear row t right of the pivot.
        for j in t + 1..ncols {
            if !a[t][j].is_zero() {
                let q = &a[t][j] / &a[t][t];
                if !q.is_zero() {
                    for i in 0..nrows {
                        let delta = &q * &a[i][t];
                        a[i][j] -= delta;
                    }
                    for i in 0..ncols {
                        let delta = &q * &right[i][t];
                        right[i][j] -= delta;
                    }
                }
                if !a[t][j].is_zero() {
                    dirty = true;
                }
            }
        }
        if dirty {
            continue;
        }

        // Divisibility: if the pivot misses an entry deeper in the matrix,
        // fold that row into row t and restart this pivot position.
        for i in t + 1..nrows {
            for j in t + 1..ncols {
                if !(&a[i][j] % &a[t][t]).is_zero() {
                    for col in 0..ncols {
                        let delta = a[i][col].clone();
                        a[t][col] += delta;
                    }
                    for col in 0..nrows {
                        let delta = left[i][col].clone();
                        left[t][col] += delta;
                    }
                    continue 'outer;
                }
            }
        }

        t += 1;
    }

    let diagonal: Vec<BigInt> = (0..dim).map(|i| a[i][i].clone()).collect();
    let rank = diagonal.iter().filter(|d| !d.is_zero()).count();

    // Self-verification: transforms reproduce the diagonal matrix…
    let product = mat_mul(&mat_mul(&left, matrix), &right);
    for (i, row) in product.iter().enumerate() {
        for (j, entry) in row.iter().enumerate() {
            let expected = if i == j && i < dim {
                diagonal[i].clone()
            } else {
                BigInt::zero()
            };
            assert_eq!(
                *entry, expected,
                "transform verification failed at ({i}, {j})"
            );
        }
    }
    // …and the chain d₁ | d₂ | … holds with zeros only at the end.
    for w in diagonal.windows(2) {
        if w[0].is_zero() {
            assert!(w[1].is_zero(), "nonzero diagonal entry after a zero");
        } else {
            assert!(
                (&w[1] % &w[0]).is_zero(),
                "divisibility chain broken: {} !| {}",
                w[0],
                w[1]
            );
        }
    }

    SmithNormalForm {
        diagonal,
        left,
        right,
        rank,
    }
}

/// Exponent-sum matrix of a presentation: one row per relator (declaration
/// order), one column per generator (declaration order).
pub fn relation_matrix(p: &Presentation) -> Vec<Vec<BigInt>> {
    p.relators()
        .iter()
        .map(|r| {
            p.generators()
                .iter()
                .map(|g| BigInt::from(r.word().exponent_sum(g)))
                .collect()
        })
        .collect()
}

/// Isomorphism type of a finitely generated abelian group:
/// `Z^rank ⊕ Z/d₁ ⊕ … ⊕ Z/dₛ` with `d₁ | d₂ | …`, all `dᵢ > 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Abelianization {
    /// Rank of the free part.
    pub rank: usize,
    /// Torsion orders in divisibility order, each greater than 1.
    pub torsion: Vec<BigInt>,
}

impl Abelianization {
    /// Free abelian group of the given rank.
    pub fn free(rank: usize) -> Self {
        Self {
            rank,
            torsion: Vec::new(),
        }
    }

    /// Build from a rank and torsion orders (each > 1, in divisibility order).
    pub fn from_parts(rank: usize, torsion: &[u64]) -> Self {
        Self {
            rank,
            torsion: torsion.iter().map(|&d| BigInt::from(d)).collect(),
        }
    }

    /// True for the trivial group.
    pub fn is_trivial(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }
}

impl std::fmt::Display for Abelianization {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        match self.rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        for d in &self.torsion {
            parts.push(format!("Z/{d}"));
        }
        write!(f, "{}", parts.join(" ⊕ "))
    }
}

/// Abelianization of a presentation: the cokernel of its relation matrix.
pub fn abelianization(p: &Presentation) -> Abelianization {
    let n = p.generator_count();
    if p.relator_count() == 0 {
        return Abelianization::free(n);
    }
    let matrix = relation_matrix(p);
    let snf = smith_normal_form(&matrix, n);
    let torsion: Vec<BigInt> = snf
        .diagonal
        .iter()
        .filter(|d| !d.is_zero() && !d.is_one())
        .cloned()
        .collect();
    Abelianization {
        rank: n - snf.rank,
        torsion,
    }
}

/// Independent elementary-divisor computation via minor GCDs, for
/// cross-checking [`smith_normal_form`] in tests. Exponential in matrix
/// size — keep inputs small.
pub mod oracle {
    use super::*;
    use itertools::Itertools;

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(matrix: &[Vec<BigInt>]) -> BigInt {
        let n = matrix.len();
        for row in matrix {
            assert_eq!(row.len(), n, "determinant needs a square matrix");
        }
        if n == 0 {
            return BigInt::one();
        }
        let mut a = matrix.to_vec();
        let mut sign = 1i32;
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                let Some(swap) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                    return BigInt::zero();
                };
                a.swap(k, swap);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                    a[i][j] = num / &prev;
                }
                a[i][k] = BigInt::zero();
            }
            prev = a[k][k].clone();
        }
        let det = a[n - 1][n - 1].clone();
        if sign < 0 {
            -det
        } else {
            det
        }
    }

    /// Elementary divisors as `dₖ = gₖ / gₖ₋₁` where `gₖ` is the GCD of all
    /// `k × k` minors. Returns `min(m, n)` entries with trailing zeros,
    /// matching the shape of the Smith diagonal.
    pub fn elementary_divisors_by_minors(matrix: &[Vec<BigInt>], ncols: usize) -> Vec<BigInt> {
        let nrows = matrix.len();
        for row in matrix {
            assert_eq!(row.len(), ncols, "ragged matrix row");
        }
        let dim = nrows.min(ncols);
        let mut divisors = vec![BigInt::zero(); dim];
        let mut prev_gcd = BigInt::one();
        for k in 1..=dim {
            let mut g = BigInt::zero();
            for rows in (0..nrows).combinations(k) {
                for cols in (0..ncols).combinations(k) {
                    let sub: Vec<Vec<BigInt>> = rows
                        .iter()
                        .map(|&i| cols.iter().map(|&j| matrix[i][j].clone()).collect())
                        .collect();
                    g = gcd(&g, &determinant(&sub));
                }
            }
            if g.is_zero() {
                break; // rank < k: this and all later divisors stay zero
            }
            divisors[k - 1] = &g / &prev_gcd;
            prev_gcd = g;
        }
        divisors
    }
}
