//! Scopes walls, RoCK tests, and RoCK constructions.
//!
//! A weight `nu` is handled through its dominant representative `mu = w nu`
//! and the alcove `wA`, tracked by the point `w . p0`. The walls of the Scopes
//! arrangement are `h_i - h_j = m` for `m` in `[-k+_ij, k-_ij]`, where
//! `k-_ij = k+_ji` and `k+_ij` is the largest `n` with `mu + alpha_{ij;n}` in
//! the support.

use std::collections::BTreeMap;
use std::fmt;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::root_system::{AlcovePoint, Block, Rational, Root, WeylWord};

/// The values `k+_ij` for every ordered pair of coordinates `1 <= i != j <= e`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WallBounds {
    e: usize,
    k_plus: BTreeMap<(usize, usize), i64>,
}

impl WallBounds {
    pub fn from_map(e: usize, k_plus: BTreeMap<(usize, usize), i64>) -> Self {
        WallBounds { e, k_plus }
    }

    pub fn e(&self) -> usize {
        self.e
    }

    pub fn k_plus(&self, i: usize, j: usize) -> i64 {
        self.k_plus[&(i, j)]
    }

    pub fn k_minus(&self, i: usize, j: usize) -> i64 {
        self.k_plus(j, i)
    }

    /// Wall indices `m` with a wall `h_i - h_j = m`, for `i < j`. Empty when
    /// both bounds sit at their floors.
    pub fn wall_range(&self, i: usize, j: usize) -> (i64, i64) {
        (-self.k_plus(i, j), self.k_minus(i, j))
    }

    /// Ordered pairs with their `k+`, ascending.
    pub fn iter(&self) -> impl Iterator<Item = ((usize, usize), i64)> + '_ {
        self.k_plus.iter().map(|(&k, &v)| (k, v))
    }

    pub fn as_map(&self) -> &BTreeMap<(usize, usize), i64> {
        &self.k_plus
    }
}

fn floor(i: usize, j: usize) -> i64 {
    if i < j {
        -1
    } else {
        0
    }
}

/// Largest `n` for which `mu + alpha_{ij;n}` keeps every residue count
/// non-negative.
fn box_count_bound(block: &Block, i: usize, j: usize) -> i64 {
    let (lo, hi) = (i.min(j), i.max(j));
    let inside = if i < j { -1 } else { 1 };
    (0..block.e())
        .map(|r| block.count(r) + if (lo..hi).contains(&r) { inside } else { 0 })
        .min()
        .expect("e >= 2")
}

fn require_support(block: &Block) -> Result<()> {
    if block.in_support() {
        Ok(())
    } else {
        Err(Error::OutOfSupport(block.to_string()))
    }
}

/// Greedy dominantization, always reflecting at the smallest residue with a
/// negative pairing. Returns the letters in the order applied.
pub fn find_dominant(block: &Block) -> Result<(WeylWord, Block)> {
    let mut letters = Vec::new();
    let dominant = block
        .dominantize_with(|i| letters.push(i))
        .ok_or_else(|| Error::OutOfSupport(block.to_string()))?;
    Ok((WeylWord::new(letters), dominant))
}

/// Dominantization that also carries the base point along, returning `w . p0`.
pub fn find_dom_w_chamber(block: &Block) -> Result<(AlcovePoint, Block)> {
    let mut point = AlcovePoint::base(block.e());
    let dominant = block
        .dominantize_with(|i| point = point.reflect(i))
        .ok_or_else(|| Error::OutOfSupport(block.to_string()))?;
    Ok((point, dominant))
}

/// Computes `k+_ij` for every ordered pair by searching downward from the
/// box-count bound; membership is monotone in `n`, so the first hit is the
/// maximum.
pub fn find_n(dominant: &Block) -> Result<WallBounds> {
    if !dominant.is_dominant() {
        return Err(Error::NotDominant(dominant.to_string()));
    }
    require_support(dominant)?;
    let e = dominant.e();
    let mut k_plus = BTreeMap::new();
    for (i, j) in (1..=e).cartesian_product(1..=e).filter(|(i, j)| i != j) {
        let lowest = floor(i, j);
        let mut found = lowest;
        for n in (lowest + 1..=box_count_bound(dominant, i, j)).rev() {
            if dominant.add_root(Root::new(i, j, n)?)?.in_support() {
                found = n;
                break;
            }
        }
        k_plus.insert((i, j), found);
    }
    Ok(WallBounds { e, k_plus })
}

/// One line of a RoCK test: the pair fails when its value lies within the
/// wall range.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairCheck {
    pub i: usize,
    pub j: usize,
    pub value: Rational,
    pub lower: i64,
    pub upper: i64,
    pub passes: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RockReport {
    pub point: AlcovePoint,
    pub dominant: Block,
    pub pairs: Vec<PairCheck>,
}

impl RockReport {
    pub fn is_rock(&self) -> bool {
        self.pairs.iter().all(|p| p.passes)
    }

    pub fn failures(&self) -> impl Iterator<Item = &PairCheck> {
        self.pairs.iter().filter(|p| !p.passes)
    }

    pub fn pair(&self, i: usize, j: usize) -> Option<&PairCheck> {
        self.pairs.iter().find(|p| p.i == i && p.j == j)
    }
}

impl fmt::Display for RockReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for p in &self.pairs {
            writeln!(
                f,
                "pair [{}, {}]: value {} range [{}, {}] -> {}",
                p.i,
                p.j,
                p.value,
                p.lower,
                p.upper,
                if p.passes { "OK" } else { "PROBLEM" }
            )?;
        }
        write!(f, "rock: {}", self.is_rock())
    }
}

fn rock_pairs(point: &AlcovePoint, bounds: &WallBounds) -> Vec<PairCheck> {
    let e = point.e();
    (1..=e)
        .tuple_combinations()
        .map(|(i, j)| {
            let value = point.difference(i, j);
            let (lower, upper) = bounds.wall_range(i, j);
            let inside = Rational::from(lower) <= value && value <= Rational::from(upper);
            PairCheck {
                i,
                j,
                value,
                lower,
                upper,
                passes: !inside,
            }
        })
        .collect()
}

/// Checks, for every pair `i < j`, that `q_i - q_j` lies outside the wall
/// range, i.e. that the alcove sits beyond all Scopes walls.
pub fn test_rock(block: &Block) -> Result<RockReport> {
    let (point, dominant) = find_dom_w_chamber(block)?;
    let bounds = find_n(&dominant)?;
    let pairs = rock_pairs(&point, &bounds);
    Ok(RockReport {
        point,
        dominant,
        pairs,
    })
}

/// Walks `point` back to the fundamental alcove, reflecting the dominant
/// block in lockstep; the result is the block whose alcove contains `point`.
pub fn block_at_point(point: &AlcovePoint, dominant: &Block) -> Result<Block> {
    let e = dominant.e();
    if point.e() != e {
        return Err(Error::LengthMismatch {
            expected: e,
            found: point.e(),
        });
    }
    if point.on_affine_wall() {
        return Err(Error::OnWall(point.to_string()));
    }
    let one = Rational::from(1);
    let mut point = point.clone();
    let mut block = dominant.clone();
    loop {
        let q = point.coords();
        let step = (1..e)
            .find(|&i| q[i - 1] < q[i])
            .or_else(|| (q[0] - q[e - 1] > one).then_some(0));
        let Some(i) = step else {
            return Ok(block);
        };
        point = point.reflect(i);
        block = block.reflect(i);
    }
}

/// Coordinates ordered by decreasing value; errors when two coincide.
fn chamber_order(point: &AlcovePoint) -> Result<Vec<usize>> {
    let order: Vec<usize> = (1..=point.e())
        .sorted_by(|&a, &b| point.coord(b).cmp(&point.coord(a)))
        .collect();
    if order
        .windows(2)
        .any(|w| point.coord(w[0]) == point.coord(w[1]))
    {
        return Err(Error::OnWall(point.to_string()));
    }
    Ok(order)
}

/// The RoCK point for the Weyl chamber listing coordinates in `order`
/// (largest first): the base alcove of that chamber pushed out by the
/// smallest gaps that clear every wall.
fn rock_point(order: &[usize], bounds: &WallBounds) -> AlcovePoint {
    let e = order.len();
    // Positions k < l need q_{a_k} - q_{a_l} > k+(a_l, a_k). With gaps u_m
    // between consecutive positions that reads sum_{m=k}^{l-1} u_m >= k+(a_l, a_k).
    // Prefix sums from the longest-path recursion are minimal at every
    // position simultaneously.
    let mut prefix = vec![0i64; e];
    for l in 1..e {
        let from_earlier = (0..l)
            .map(|k| prefix[k] + bounds.k_plus(order[l], order[k]))
            .max()
            .expect("l >= 1");
        prefix[l] = prefix[l - 1].max(from_earlier);
    }
    let total = prefix[e - 1];
    let offsets: Vec<i64> = prefix.iter().map(|p| total - p).collect();
    let drift = Rational::new(offsets.iter().sum(), e as i64);
    let mut coords = vec![Rational::from(0); e];
    for (k, &coord) in order.iter().enumerate() {
        coords[coord - 1] =
            Rational::new((e - 1 - k) as i64, e as i64) + Rational::from(offsets[k]) - drift;
    }
    AlcovePoint::new(coords).expect("e >= 2")
}

/// The block of the closest RoCK alcove in the Weyl chamber of `point`, for
/// the orbit of `block`.
pub fn rock_weight(point: &AlcovePoint, block: &Block) -> Result<Block> {
    if point.e() != block.e() {
        return Err(Error::LengthMismatch {
            expected: block.e(),
            found: point.e(),
        });
    }
    let (_, dominant) = find_dominant(block)?;
    let bounds = find_n(&dominant)?;
    let order = chamber_order(point)?;
    block_at_point(&rock_point(&order, &bounds), &dominant)
}

/// A RoCK block for each of the `e!` Weyl chambers, keyed by the permuted
/// base point, in permutation order.
pub fn all_rocks(block: &Block) -> Result<Vec<(AlcovePoint, Block)>> {
    let (_, dominant) = find_dominant(block)?;
    let bounds = find_n(&dominant)?;
    let base = AlcovePoint::base(block.e());
    base.coords()
        .iter()
        .copied()
        .permutations(block.e())
        .map(|coords| {
            let key = AlcovePoint::new(coords)?;
            let order = chamber_order(&key)?;
            let rock = block_at_point(&rock_point(&order, &bounds), &dominant)?;
            Ok((key, rock))
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Negative,
    Positive,
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Negative => "-",
            Sign::Positive => "+",
        })
    }
}

/// The dominant block together with the side of every Scopes wall
/// `(i, j, m)` on which the alcove lies.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ChamberSignature {
    pub dominant: Block,
    pub signs: BTreeMap<(usize, usize, i64), Sign>,
}

/// Signature of the alcove containing `point` with respect to the Scopes
/// walls of `dominant`.
pub fn signature_at(point: &AlcovePoint, dominant: &Block) -> Result<ChamberSignature> {
    let bounds = find_n(dominant)?;
    let mut signs = BTreeMap::new();
    for (i, j) in (1..=point.e()).tuple_combinations() {
        let (lower, upper) = bounds.wall_range(i, j);
        let value = point.difference(i, j);
        for m in lower..=upper {
            let offset = value - Rational::from(m);
            let sign = if offset > Rational::from(0) {
                Sign::Positive
            } else if offset < Rational::from(0) {
                Sign::Negative
            } else {
                return Err(Error::OnWall(point.to_string()));
            };
            signs.insert((i, j, m), sign);
        }
    }
    Ok(ChamberSignature {
        dominant: dominant.clone(),
        signs,
    })
}

pub fn scopes_signature(block: &Block) -> Result<ChamberSignature> {
    let (point, dominant) = find_dom_w_chamber(block)?;
    signature_at(&point, &dominant)
}

/// Strict Scopes equivalence: same dominant block and same chamber.
pub fn scopes_equivalent(a: &Block, b: &Block) -> Result<bool> {
    Ok(scopes_signature(a)? == scopes_signature(b)?)
}

/// Moves `point` by the stabilizer of `dominant` onto the side of every
/// stabilizer wall containing the fundamental alcove, i.e. to the alcove of
/// the shortest coset representative.
pub fn canonical_point(point: &AlcovePoint, dominant: &Block) -> AlcovePoint {
    let e = dominant.e();
    let stabilizer: Vec<usize> = (0..e)
        .filter(|&i| dominant.coroot_pairing(i) == 0)
        .collect();
    let one = Rational::from(1);
    let mut point = point.clone();
    loop {
        let q = point.coords();
        let wrong_side = stabilizer.iter().copied().find(|&i| {
            if i == 0 {
                q[0] - q[e - 1] > one
            } else {
                q[i - 1] < q[i]
            }
        });
        match wrong_side {
            Some(i) => point = point.reflect(i),
            None => return point,
        }
    }
}
