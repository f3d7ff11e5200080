//! Brute-force reference: enumerate the multipartitions of a block and
//! recompute support and wall bounds from them.

use std::collections::BTreeMap;
use std::ops::ControlFlow;
use std::time::{Duration, Instant};

use itertools::Itertools;

use crate::blocks::{box_residue, Multipartition};
use crate::error::{Error, Result};
use crate::root_system::{Block, Root};
use crate::scopes::WallBounds;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EnumerationBudget {
    pub max_boxes: i64,
    pub max_seconds: Option<f64>,
}

impl EnumerationBudget {
    pub fn boxes(max_boxes: i64) -> Self {
        EnumerationBudget {
            max_boxes,
            max_seconds: None,
        }
    }
}

impl Default for EnumerationBudget {
    fn default() -> Self {
        EnumerationBudget::boxes(10)
    }
}

struct Search<'a> {
    e: usize,
    charges: &'a [usize],
    remaining: Vec<i64>,
    left: i64,
    parts: Vec<Vec<usize>>,
    deadline: Option<Instant>,
    steps: u64,
}

impl Search<'_> {
    fn out_of_time(&mut self) -> bool {
        self.steps += 1;
        self.steps.is_multiple_of(4096) && self.deadline.is_some_and(|d| Instant::now() > d)
    }

    /// Extends component `c` by a row, longest rows first, then moves on to
    /// the next component once the current one is closed.
    fn visit<F>(&mut self, c: usize, max_len: usize, found: &mut F) -> ControlFlow<Result<()>>
    where
        F: FnMut(&Multipartition) -> ControlFlow<()>,
    {
        if self.out_of_time() {
            return ControlFlow::Break(Err(Error::BudgetExceeded("time limit".into())));
        }
        if c == self.charges.len() {
            if self.left == 0 {
                let mp = Multipartition::new(self.parts.clone()).expect("rows are decreasing");
                if found(&mp).is_break() {
                    return ControlFlow::Break(Ok(()));
                }
            }
            return ControlFlow::Continue(());
        }
        let row = self.parts[c].len() + 1;
        let limit = max_len.min(self.left as usize);
        let residues: Vec<usize> = (1..=limit)
            .map(|col| box_residue(self.e, self.charges[c], row, col))
            .collect();
        for len in (1..=limit).rev() {
            let row_residues = &residues[..len];
            let mut fits = true;
            for &r in row_residues {
                self.remaining[r] -= 1;
                fits &= self.remaining[r] >= 0;
            }
            if fits {
                self.left -= len as i64;
                self.parts[c].push(len);
                self.visit(c, len, found)?;
                self.parts[c].pop();
                self.left += len as i64;
            }
            for &r in row_residues {
                self.remaining[r] += 1;
            }
        }
        self.visit(c + 1, usize::MAX, found)
    }
}

fn search<F>(block: &Block, budget: &EnumerationBudget, mut found: F) -> Result<()>
where
    F: FnMut(&Multipartition) -> ControlFlow<()>,
{
    if !block.is_nonnegative() {
        return Ok(());
    }
    let size = block.size();
    if size > budget.max_boxes {
        return Err(Error::BudgetExceeded(format!(
            "block has {size} boxes, budget allows {}",
            budget.max_boxes
        )));
    }
    let ctx = block.context();
    let mut state = Search {
        e: ctx.e(),
        charges: ctx.multicharge(),
        remaining: block.counts().to_vec(),
        left: size,
        parts: vec![Vec::new(); ctx.level()],
        deadline: budget
            .max_seconds
            .map(|s| Instant::now() + Duration::from_secs_f64(s)),
        steps: 0,
    };
    match state.visit(0, usize::MAX, &mut found) {
        ControlFlow::Break(result) => result,
        ControlFlow::Continue(()) => Ok(()),
    }
}

/// Every multipartition whose residue census is `block`, in decreasing
/// lexicographic order.
pub fn enumerate_block(block: &Block, budget: &EnumerationBudget) -> Result<Vec<Multipartition>> {
    let mut all = Vec::new();
    search(block, budget, |mp| {
        all.push(mp.clone());
        ControlFlow::Continue(())
    })?;
    Ok(all)
}

/// Whether `block` has at least one multipartition.
pub fn oracle_in_support(block: &Block, budget: &EnumerationBudget) -> Result<bool> {
    let mut any = false;
    search(block, budget, |_| {
        any = true;
        ControlFlow::Break(())
    })?;
    Ok(any)
}

/// `k+_ij` as the largest `n` for which `mu + alpha_{ij;n}` has a
/// multipartition, falling back to `-1` for `i < j` and `0` for `i > j`.
pub fn oracle_wall_bounds(dominant: &Block, budget: &EnumerationBudget) -> Result<WallBounds> {
    if !dominant.is_dominant() {
        return Err(Error::NotDominant(dominant.to_string()));
    }
    let e = dominant.e();
    let mut k_plus = BTreeMap::new();
    for (i, j) in (1..=e).cartesian_product(1..=e).filter(|(i, j)| i != j) {
        let lowest = if i < j { -1 } else { 0 };
        let mut found = lowest;
        for n in (lowest + 1..=dominant.size()).rev() {
            let shifted = dominant.add_root(Root::new(i, j, n)?)?;
            if oracle_in_support(&shifted, budget)? {
                found = n;
                break;
            }
        }
        k_plus.insert((i, j), found);
    }
    Ok(WallBounds::from_map(e, k_plus))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::blocks::block_of_multipartition;
    use crate::root_system::Context;

    #[test]
    fn highest_weight_block() {
        let c = Context::new(3, vec![0, 1]).unwrap();
        let hw = Block::highest_weight(&c);
        let budget = EnumerationBudget::default();
        assert_eq!(
            enumerate_block(&hw, &budget).unwrap(),
            vec![Multipartition::empty(2)]
        );
        assert!(oracle_in_support(&hw, &budget).unwrap());
        for ((i, j), k) in oracle_wall_bounds(&hw, &budget).unwrap().iter() {
            assert_eq!(k, if i < j { -1 } else { 0 });
        }
    }

    #[test]
    fn partitions_of_three() {
        let c = Context::new(2, vec![0]).unwrap();
        let b = Block::new(&c, vec![2, 1]).unwrap();
        let found = enumerate_block(&b, &EnumerationBudget::default()).unwrap();
        let expected = vec![
            Multipartition::new(vec![vec![3]]).unwrap(),
            Multipartition::new(vec![vec![1, 1, 1]]).unwrap(),
        ];
        assert_eq!(found, expected);
    }

    #[test]
    fn dominant_example_is_enumerated() {
        let c = Context::new(3, vec![0, 0, 1, 2]).unwrap();
        let b = Block::new(&c, vec![3, 2, 2]).unwrap();
        let found = enumerate_block(&b, &EnumerationBudget::default()).unwrap();
        let mp = Multipartition::new(vec![vec![1, 1], vec![2, 1], vec![1, 1], vec![]]).unwrap();
        assert!(found.contains(&mp));
        assert!(found.windows(2).all(|w| w[0] > w[1]));
        for mp in &found {
            assert_eq!(block_of_multipartition(&c, mp).unwrap(), b);
        }
    }

    #[test]
    fn support_examples() {
        let budget = EnumerationBudget::default();
        let c = Context::new(2, vec![0]).unwrap();
        assert!(!oracle_in_support(&Block::new(&c, vec![0, 1]).unwrap(), &budget).unwrap());
        let c = Context::new(4, vec![2, 0]).unwrap();
        assert!(oracle_in_support(&Block::new(&c, vec![1, 0, 1, 1]).unwrap(), &budget).unwrap());
    }

    #[test]
    fn weight_one_bounds() {
        let c = Context::new(2, vec![0]).unwrap();
        let b = Block::new(&c, vec![1, 1]).unwrap();
        let bounds = oracle_wall_bounds(&b, &EnumerationBudget::default()).unwrap();
        assert_eq!(bounds.k_plus(1, 2), 0);
        assert_eq!(bounds.k_plus(2, 1), 0);
    }

    #[test]
    fn budget_limits() {
        let c = Context::new(2, vec![0]).unwrap();
        let b = Block::new(&c, vec![6, 6]).unwrap();
        assert!(matches!(
            enumerate_block(&b, &EnumerationBudget::boxes(5)),
            Err(Error::BudgetExceeded(_))
        ));
        let zero_time = EnumerationBudget {
            max_boxes: 40,
            max_seconds: Some(0.0),
        };
        let big = Block::new(&c, vec![20, 20]).unwrap();
        assert!(matches!(
            enumerate_block(&big, &zero_time),
            Err(Error::BudgetExceeded(_))
        ));
    }
}
