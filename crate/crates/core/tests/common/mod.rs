#![allow(dead_code)]

use std::sync::Arc;

use itertools::Itertools;
use rockblocks::{AlcovePoint, Block, Context, Multipartition, Rational};

pub fn ctx(e: usize, mc: &[usize]) -> Arc<Context> {
    Context::new(e, mc.to_vec()).unwrap()
}

pub fn block(c: &Arc<Context>, counts: &[i64]) -> Block {
    Block::new(c, counts.to_vec()).unwrap()
}

pub fn rational(text: &str) -> Rational {
    match text.split_once('/') {
        Some((n, d)) => Rational::new(n.trim().parse().unwrap(), d.trim().parse().unwrap()),
        None => Rational::from(text.trim().parse::<i64>().unwrap()),
    }
}

pub fn point(text: &str) -> AlcovePoint {
    AlcovePoint::new(text.split(',').map(rational).collect()).unwrap()
}

pub fn level_two_context() -> Arc<Context> {
    ctx(4, &[2, 0])
}

pub fn level_two_multipartition() -> Multipartition {
    Multipartition::new(vec![
        vec![10, 7, 6, 5, 5, 3, 3, 1, 1, 1],
        vec![16, 13, 10, 7, 7, 5, 5, 3, 3, 3, 2, 2, 2, 1, 1, 1],
    ])
    .unwrap()
}

pub const LEVEL_TWO_BLOCK: [i64; 4] = [25, 32, 34, 32];
pub const LEVEL_TWO_ROCK: [i64; 4] = [45, 42, 34, 42];
pub const LEVEL_TWO_WORD: [usize; 23] = [
    1, 2, 1, 3, 0, 1, 2, 1, 0, 3, 0, 1, 2, 1, 0, 3, 0, 2, 1, 0, 3, 0, 2,
];
pub const LEVEL_TWO_POINT: &str = "3/2,-3,15/4,-3/4";

pub const LEVEL_TWO_BOUNDS: [((usize, usize), i64); 12] = [
    ((2, 1), 2),
    ((3, 1), 3),
    ((4, 1), 3),
    ((1, 2), 2),
    ((3, 2), 3),
    ((4, 2), 3),
    ((1, 3), 2),
    ((2, 3), 2),
    ((4, 3), 2),
    ((1, 4), 2),
    ((2, 4), 2),
    ((3, 4), 2),
];

/// `(i, j, value, upper)` for the failing level-two block; the lower end of
/// every range is -2.
pub const LEVEL_TWO_PAIRS: [(usize, usize, &str, i64); 6] = [
    (1, 2, "9/2", 2),
    (1, 3, "-9/4", 3),
    (2, 3, "-27/4", 3),
    (1, 4, "9/4", 3),
    (2, 4, "-9/4", 3),
    (3, 4, "9/2", 2),
];

pub const ROCK_PAIRS: [(usize, usize, &str); 6] = [
    (1, 2, "11/2"),
    (1, 3, "-9/4"),
    (2, 3, "-31/4"),
    (1, 4, "13/4"),
    (2, 4, "-9/4"),
    (3, 4, "11/2"),
];

pub const ALL_ROCKS_E4: [(&str, [i64; 4]); 24] = [
    ("3/4,1/2,1/4,0", [37, 34, 27, 34]),
    ("3/4,1/2,0,1/4", [37, 34, 27, 34]),
    ("3/4,1/4,1/2,0", [34, 42, 45, 42]),
    ("3/4,1/4,0,1/2", [34, 42, 45, 42]),
    ("3/4,0,1/2,1/4", [37, 29, 37, 39]),
    ("3/4,0,1/4,1/2", [37, 29, 37, 39]),
    ("1/2,3/4,1/4,0", [37, 34, 27, 34]),
    ("1/2,3/4,0,1/4", [37, 34, 27, 34]),
    ("1/2,1/4,3/4,0", [37, 39, 37, 29]),
    ("1/2,1/4,0,3/4", [37, 39, 37, 29]),
    ("1/2,0,3/4,1/4", [45, 42, 34, 42]),
    ("1/2,0,1/4,3/4", [45, 42, 34, 42]),
    ("1/4,3/4,1/2,0", [34, 42, 45, 42]),
    ("1/4,3/4,0,1/2", [34, 42, 45, 42]),
    ("1/4,1/2,3/4,0", [37, 39, 37, 29]),
    ("1/4,1/2,0,3/4", [37, 39, 37, 29]),
    ("1/4,0,3/4,1/2", [27, 34, 37, 34]),
    ("1/4,0,1/2,3/4", [27, 34, 37, 34]),
    ("0,3/4,1/2,1/4", [37, 29, 37, 39]),
    ("0,3/4,1/4,1/2", [37, 29, 37, 39]),
    ("0,1/2,3/4,1/4", [45, 42, 34, 42]),
    ("0,1/2,1/4,3/4", [45, 42, 34, 42]),
    ("0,1/4,3/4,1/2", [27, 34, 37, 34]),
    ("0,1/4,1/2,3/4", [27, 34, 37, 34]),
];

pub fn sl3_context() -> Arc<Context> {
    ctx(3, &[0, 0, 1, 2])
}

pub const SL3_BLOCK: [i64; 3] = [3, 2, 2];

pub const ALL_ROCKS_E3: [(&str, [i64; 3]); 6] = [
    ("2/3,1/3,0", [11, 18, 18]),
    ("2/3,0,1/3", [23, 22, 14]),
    ("1/3,2/3,0", [23, 14, 22]),
    ("1/3,0,2/3", [23, 22, 14]),
    ("0,2/3,1/3", [23, 14, 22]),
    ("0,1/3,2/3", [11, 18, 18]),
];

/// `(block, shift, t, reference)`, the first at level 2 and `e = 4`, the
/// rest at the `sl3` example.
pub const BEAD_COUNTS_E4: ([i64; 4], i64, [i64; 4], [i64; 4]) =
    ([45, 42, 34, 42], 9, [13, 18, 1, 6], [10, 10, 9, 9]);
pub const BEAD_COUNTS_E3: [([i64; 3], [i64; 3]); 4] = [
    ([3, 2, 2], [14, 12, 10]),
    ([11, 18, 18], [6, 12, 18]),
    ([23, 22, 14], [14, 20, 2]),
    ([23, 14, 22], [22, 4, 10]),
];
pub const SL3_REFERENCE: [i64; 3] = [13, 12, 11];

/// Multicharges up to reordering: weakly increasing residue lists.
pub fn multicharges(e: usize, max_level: usize) -> Vec<Vec<usize>> {
    (1..=max_level)
        .flat_map(|l| (0..e).combinations_with_replacement(l))
        .collect()
}

/// Every non-negative count vector of length `e` with total at most `max`.
pub fn count_vectors(e: usize, max: i64) -> Vec<Vec<i64>> {
    fn extend(prefix: &mut Vec<i64>, e: usize, left: i64, out: &mut Vec<Vec<i64>>) {
        if prefix.len() == e {
            out.push(prefix.clone());
            return;
        }
        for c in 0..=left {
            prefix.push(c);
            extend(prefix, e, left - c, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    extend(&mut Vec::new(), e, max, &mut out);
    out
}

/// Every `(context, block)` with `e` in `es`, level at most `max_level`
/// and at most `max_boxes` boxes.
pub fn all_blocks(es: &[usize], max_level: usize, max_boxes: i64) -> Vec<Block> {
    es.iter()
        .flat_map(|&e| {
            multicharges(e, max_level).into_iter().flat_map(move |mc| {
                let c = ctx(e, &mc);
                count_vectors(e, max_boxes)
                    .into_iter()
                    .map(move |counts| block(&c, &counts))
            })
        })
        .collect()
}
