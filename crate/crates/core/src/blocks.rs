//! Multipartitions, their residue-count blocks, and bead-count coordinates.

use std::fmt;
use std::sync::Arc;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::root_system::{Block, Context};

/// An `l`-tuple of partitions, each stored largest part first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Multipartition(Vec<Vec<usize>>);

impl Multipartition {
    pub fn new(components: Vec<Vec<usize>>) -> Result<Self> {
        for part in &components {
            let decreasing = part.windows(2).all(|w| w[0] >= w[1]);
            if !decreasing || part.contains(&0) {
                return Err(Error::InvalidPartition(part.clone()));
            }
        }
        Ok(Multipartition(components))
    }

    /// The all-empty multipartition of the given level.
    pub fn empty(level: usize) -> Self {
        Multipartition(vec![Vec::new(); level])
    }

    pub fn components(&self) -> &[Vec<usize>] {
        &self.0
    }

    pub fn level(&self) -> usize {
        self.0.len()
    }

    pub fn size(&self) -> usize {
        self.0.iter().flatten().sum()
    }

    /// Boxes as `(component, row, column)`, rows and columns 1-based.
    pub fn boxes(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        self.0.iter().enumerate().flat_map(|(m, part)| {
            part.iter()
                .enumerate()
                .flat_map(move |(a, &len)| (1..=len).map(move |c| (m, a + 1, c)))
        })
    }
}

impl fmt::Display for Multipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts = self.0.iter().map(|p| format!("({})", p.iter().join(", ")));
        write!(f, "({})", parts.format(", "))
    }
}

/// Residue of box `(row, col)` in a component with charge `charge`.
pub(crate) fn box_residue(e: usize, charge: usize, row: usize, col: usize) -> usize {
    (charge as i64 + col as i64 - row as i64).rem_euclid(e as i64) as usize
}

/// Counts boxes of each residue `(kappa_m + c - a) mod e`.
pub fn block_of_multipartition(ctx: &Arc<Context>, mp: &Multipartition) -> Result<Block> {
    if mp.level() != ctx.level() {
        return Err(Error::ComponentCountMismatch {
            expected: ctx.level(),
            found: mp.level(),
        });
    }
    let e = ctx.e();
    let mut counts = vec![0i64; e];
    for (m, row, col) in mp.boxes() {
        counts[box_residue(e, ctx.multicharge()[m], row, col)] += 1;
    }
    Block::new(ctx, counts)
}

/// Bead counts per runner, next to the census of the empty multipartition at
/// the same shift.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TCoordinates {
    pub t: Vec<i64>,
    pub reference: Vec<i64>,
    pub shift: i64,
}

impl TCoordinates {
    /// `t_1 >= ... >= t_e >= t_1 - level`.
    pub fn satisfies_dominance_chain(&self, level: usize) -> bool {
        let t = &self.t;
        t.windows(2).all(|w| w[0] >= w[1]) && t[t.len() - 1] >= t[0] - level as i64
    }
}

fn bead_counts(block: &Block, shift: i64) -> TCoordinates {
    let ctx = block.context();
    let e = ctx.e();
    let reference: Vec<i64> = (0..e)
        .map(|r| shift + ctx.multicharge().iter().filter(|&&k| k > r).count() as i64)
        .collect();
    let t = (0..e)
        .map(|r| reference[r] + block.count(r) - block.count((r + 1) % e))
        .collect();
    TCoordinates {
        t,
        reference,
        shift,
    }
}

/// `reference_r = shift + #{c : kappa_c > r}` and
/// `t_r = reference_r + b_r - b_{r+1 mod e}`.
pub fn weight_from_block(block: &Block, shift: i64) -> Result<TCoordinates> {
    let coords = bead_counts(block, shift);
    let negative = coords
        .t
        .iter()
        .chain(&coords.reference)
        .find_position(|&&t| t < 0);
    if let Some((pos, &count)) = negative {
        return Err(Error::NegativeBeadCount {
            runner: pos % block.e(),
            count,
        });
    }
    Ok(coords)
}

impl Block {
    /// All simple-coroot pairings are non-negative.
    pub fn is_dominant(&self) -> bool {
        (0..self.e()).all(|i| self.coroot_pairing(i) >= 0)
    }

    /// The dominance test phrased through bead counts; agrees with
    /// [`Block::is_dominant`].
    pub fn is_dominant_by_beads(&self) -> bool {
        bead_counts(self, 0).satisfies_dominance_chain(self.context().level())
    }
}
