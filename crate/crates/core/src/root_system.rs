//! Affine `sl_e` weights in residue-count coordinates, and alcove points in
//! level-1 `h`-coordinates.
//!
//! A block `b` encodes the weight `mu = Lambda - sum_r b_r alpha_r`, where
//! `Lambda = sum_r w_r Lambda_r` and `w_r` counts residue `r` in the
//! multicharge.

use std::fmt;
use std::sync::Arc;

use itertools::Itertools;
use num_rational::Rational64;

use crate::error::{Error, Result};

pub type Rational = Rational64;

/// The ambient data: `e` and a multicharge of residues.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Context {
    e: usize,
    multicharge: Vec<usize>,
    weights: Vec<i64>,
}

impl Context {
    pub fn new(e: usize, multicharge: Vec<usize>) -> Result<Arc<Self>> {
        if e < 2 {
            return Err(Error::InvalidCharacteristic(e));
        }
        if multicharge.is_empty() {
            return Err(Error::EmptyMulticharge);
        }
        let mut weights = vec![0; e];
        for &residue in &multicharge {
            if residue >= e {
                return Err(Error::ResidueOutOfRange { residue, e });
            }
            weights[residue] += 1;
        }
        Ok(Arc::new(Context {
            e,
            multicharge,
            weights,
        }))
    }

    pub fn e(&self) -> usize {
        self.e
    }

    pub fn level(&self) -> usize {
        self.multicharge.len()
    }

    pub fn multicharge(&self) -> &[usize] {
        &self.multicharge
    }

    /// Multiplicity `w_r` of each residue in the multicharge.
    pub fn weights(&self) -> &[i64] {
        &self.weights
    }

    /// Entry `a_ij` of the Cartan matrix of type `A_{e-1}^{(1)}`.
    pub fn cartan_entry(&self, i: usize, j: usize) -> i64 {
        assert!(i < self.e && j < self.e, "residue out of range");
        if i == j {
            2
        } else if self.e == 2 {
            -2
        } else if (i + 1) % self.e == j || (j + 1) % self.e == i {
            -1
        } else {
            0
        }
    }
}

/// Residue counts `b_r` for `r` in `0..e`.
///
/// Externally supplied blocks are non-negative; intermediate blocks produced by
/// [`Block::add_root`] may carry negative entries, which certify that the
/// weight is not below `Lambda`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Block {
    ctx: Arc<Context>,
    counts: Vec<i64>,
}

impl Block {
    pub fn new(ctx: &Arc<Context>, counts: Vec<i64>) -> Result<Self> {
        let block = Self::signed(ctx, counts)?;
        if let Some((residue, &count)) = block.counts.iter().find_position(|&&c| c < 0) {
            return Err(Error::NegativeCount { residue, count });
        }
        Ok(block)
    }

    /// Like [`Block::new`] but allows negative entries.
    pub fn signed(ctx: &Arc<Context>, counts: Vec<i64>) -> Result<Self> {
        if counts.len() != ctx.e() {
            return Err(Error::LengthMismatch {
                expected: ctx.e(),
                found: counts.len(),
            });
        }
        Ok(Block {
            ctx: Arc::clone(ctx),
            counts,
        })
    }

    /// The block of `Lambda` itself.
    pub fn highest_weight(ctx: &Arc<Context>) -> Self {
        Block {
            ctx: Arc::clone(ctx),
            counts: vec![0; ctx.e()],
        }
    }

    pub fn context(&self) -> &Arc<Context> {
        &self.ctx
    }

    pub fn e(&self) -> usize {
        self.ctx.e()
    }

    pub fn counts(&self) -> &[i64] {
        &self.counts
    }

    pub fn count(&self, residue: usize) -> i64 {
        self.counts[residue]
    }

    /// Total number of boxes.
    pub fn size(&self) -> i64 {
        self.counts.iter().sum()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.counts.iter().all(|&c| c >= 0)
    }

    /// `alpha_i^vee(mu) = w_i - sum_r a_ir b_r`.
    pub fn coroot_pairing(&self, i: usize) -> i64 {
        let e = self.e();
        let pushed: i64 = (0..e)
            .map(|r| self.ctx.cartan_entry(i, r) * self.counts[r])
            .sum();
        self.ctx.weights()[i] - pushed
    }

    pub fn pairings(&self) -> Vec<i64> {
        (0..self.e()).map(|i| self.coroot_pairing(i)).collect()
    }

    /// The block of `s_i mu`.
    pub fn reflect(&self, i: usize) -> Block {
        let mut counts = self.counts.clone();
        counts[i] += self.coroot_pairing(i);
        Block {
            ctx: Arc::clone(&self.ctx),
            counts,
        }
    }

    /// The block of `mu + alpha_{ij;n}`. Entries may come out negative.
    pub fn add_root(&self, root: Root) -> Result<Block> {
        let e = self.e();
        for index in [root.i, root.j] {
            if index > e {
                return Err(Error::CoordinateOutOfRange { index, e });
            }
        }
        let (lo, hi) = (root.i.min(root.j), root.i.max(root.j));
        let inside = if root.i < root.j {
            root.n + 1
        } else {
            root.n - 1
        };
        let counts = self
            .counts
            .iter()
            .enumerate()
            .map(|(r, &b)| {
                if (lo..hi).contains(&r) {
                    b - inside
                } else {
                    b - root.n
                }
            })
            .collect();
        Ok(Block {
            ctx: Arc::clone(&self.ctx),
            counts,
        })
    }

    /// Greedy dominantization: reflect at the smallest residue with negative
    /// pairing until none is left. Calls `on_step` with each residue used.
    /// Returns `None` as soon as a negative entry appears, since then some
    /// `w mu` is not below `Lambda`.
    pub(crate) fn dominantize_with(&self, mut on_step: impl FnMut(usize)) -> Option<Block> {
        if !self.is_nonnegative() {
            return None;
        }
        let mut current = self.clone();
        loop {
            let Some(i) = (0..self.e()).find(|&i| current.coroot_pairing(i) < 0) else {
                return Some(current);
            };
            current = current.reflect(i);
            on_step(i);
            if current.counts[i] < 0 {
                return None;
            }
        }
    }

    /// Whether the weight lies in the support of `V(Lambda)`.
    pub fn in_support(&self) -> bool {
        self.dominantize_with(|_| {}).is_some()
    }
}

impl fmt::Display for Block {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (r, c) in self.counts.iter().enumerate() {
            if r > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{r}: {c}")?;
        }
        write!(f, "}}")
    }
}

/// A positive real root `alpha_{ij;n} = alpha_{ij;0} + n delta`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Root {
    i: usize,
    j: usize,
    n: i64,
}

impl Root {
    /// `i`, `j` are coordinate indices starting at 1. Requires `n >= 0` when
    /// `i < j` and `n >= 1` when `i > j`.
    pub fn new(i: usize, j: usize, n: i64) -> Result<Self> {
        let legal = i >= 1 && j >= 1 && i != j && if i < j { n >= 0 } else { n >= 1 };
        if !legal {
            return Err(Error::InvalidRoot { i, j, n });
        }
        Ok(Root { i, j, n })
    }

    pub fn i(&self) -> usize {
        self.i
    }

    pub fn j(&self) -> usize {
        self.j
    }

    pub fn n(&self) -> i64 {
        self.n
    }
}

/// A point of the level-1 slice in `h`-coordinates `(q_1, ..., q_e)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AlcovePoint(Vec<Rational>);

impl AlcovePoint {
    pub fn new(coords: Vec<Rational>) -> Result<Self> {
        if coords.len() < 2 {
            return Err(Error::InvalidCharacteristic(coords.len()));
        }
        Ok(AlcovePoint(coords))
    }

    /// The interior point `((e-1)/e, (e-2)/e, ..., 0)` of the fundamental alcove.
    pub fn base(e: usize) -> Self {
        let e = e as i64;
        AlcovePoint((1..=e).map(|i| Rational::new(e - i, e)).collect())
    }

    pub fn coords(&self) -> &[Rational] {
        &self.0
    }

    pub fn e(&self) -> usize {
        self.0.len()
    }

    /// Coordinate `q_i`, 1-based.
    pub fn coord(&self, i: usize) -> Rational {
        self.0[i - 1]
    }

    /// `q_i - q_j`, 1-based.
    pub fn difference(&self, i: usize, j: usize) -> Rational {
        self.coord(i) - self.coord(j)
    }

    pub fn sum(&self) -> Rational {
        self.0.iter().sum()
    }

    /// Action of `s_i`: a coordinate swap for `i >= 1`, the reflection in
    /// `h_1 - h_e = 1` for `i = 0`.
    pub fn reflect(&self, i: usize) -> AlcovePoint {
        let e = self.e();
        assert!(i < e, "residue out of range");
        let mut q = self.0.clone();
        if i == 0 {
            let (first, last) = (q[0], q[e - 1]);
            q[0] = last + 1;
            q[e - 1] = first - 1;
        } else {
            q.swap(i - 1, i);
        }
        AlcovePoint(q)
    }

    /// Strict interior of `A = {h_1 >= ... >= h_e >= h_1 - 1}`.
    pub fn in_fundamental_alcove(&self) -> bool {
        let e = self.e();
        self.0.windows(2).all(|w| w[0] > w[1]) && self.0[0] - self.0[e - 1] < Rational::from(1)
    }

    /// Whether the point sits on some affine root hyperplane `h_i - h_j = m`.
    pub fn on_affine_wall(&self) -> bool {
        self.0
            .iter()
            .tuple_combinations()
            .any(|(a, b)| (a - b).is_integer())
    }
}

impl fmt::Display for AlcovePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.0.iter().join(", "))
    }
}

/// A word in the simple reflections, listed in the order they are applied.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct WeylWord(Vec<usize>);

impl WeylWord {
    pub fn new(letters: Vec<usize>) -> Self {
        WeylWord(letters)
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn apply_to_block(&self, block: &Block) -> Block {
        self.0.iter().fold(block.clone(), |b, &i| b.reflect(i))
    }

    pub fn apply_to_point(&self, point: &AlcovePoint) -> AlcovePoint {
        self.0.iter().fold(point.clone(), |p, &i| p.reflect(i))
    }
}

impl fmt::Display for WeylWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.0.iter().join(", "))
    }
}
