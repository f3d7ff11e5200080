//! Beta-number abaci for charged multipartitions.
//!
//! Bead `beta` sits on runner `beta mod e`, row `beta / e`, with row 0 at the
//! top. Component `c` of a multipartition at shift `s` carries
//! `N_c = e * m_c + kappa_c` beads, where the `m_c` split `s` as evenly as
//! possible with the earlier components taking the remainder. Adding a box of
//! residue `r` moves a bead from `beta` to `beta + 1` with `beta + 1 = r mod e`.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use crate::blocks::{block_of_multipartition, Multipartition};
use crate::error::{Error, Result};
use crate::root_system::{Block, Context};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Abacus {
    e: usize,
    rows: usize,
    components: Vec<BTreeSet<usize>>,
}

impl Abacus {
    pub fn new(e: usize, rows: usize, components: Vec<BTreeSet<usize>>) -> Result<Self> {
        if e < 2 {
            return Err(Error::InvalidCharacteristic(e));
        }
        if components.is_empty() {
            return Err(Error::EmptyMulticharge);
        }
        let ab = Abacus {
            e,
            rows: rows.max(1),
            components,
        };
        ab.check_rows()?;
        Ok(ab)
    }

    fn check_rows(&self) -> Result<()> {
        let limit = self.rows * self.e;
        for (c, beads) in self.components.iter().enumerate() {
            if let Some(&top) = beads.last().filter(|&&b| b >= limit) {
                return Err(Error::AbacusBoundary(format!(
                    "component {c} has bead {top} beyond {} rows",
                    self.rows
                )));
            }
        }
        Ok(())
    }

    /// Abacus of `mp` with enough rows to show every bead and one empty row
    /// below.
    pub fn from_multipartition(
        ctx: &Arc<Context>,
        mp: &Multipartition,
        shift: i64,
    ) -> Result<Self> {
        if mp.level() != ctx.level() {
            return Err(Error::ComponentCountMismatch {
                expected: ctx.level(),
                found: mp.level(),
            });
        }
        let e = ctx.e();
        let level = ctx.level() as i64;
        let mut components = Vec::with_capacity(mp.level());
        for (c, part) in mp.components().iter().enumerate() {
            let rows = shift.div_euclid(level) + i64::from((c as i64) < shift.rem_euclid(level));
            let beads = e as i64 * rows + ctx.multicharge()[c] as i64;
            if beads < part.len() as i64 {
                return Err(Error::NegativeBeta { component: c });
            }
            let set = (1..=beads)
                .map(|k| {
                    let part_k = part.get(k as usize - 1).copied().unwrap_or(0) as i64;
                    (part_k + beads - k) as usize
                })
                .collect();
            components.push(set);
        }
        let top = components
            .iter()
            .filter_map(|s: &BTreeSet<usize>| s.last())
            .max()
            .map_or(0, |&b| b / e + 1);
        Abacus::new(e, top + 1, components)
    }

    /// Same beads drawn with a different number of rows.
    pub fn with_rows(&self, rows: usize) -> Result<Self> {
        Abacus::new(self.e, rows, self.components.clone())
    }

    pub fn e(&self) -> usize {
        self.e
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn components(&self) -> &[BTreeSet<usize>] {
        &self.components
    }

    /// The multicharge recovered from the bead counts.
    pub fn context(&self) -> Result<Arc<Context>> {
        let charges = self.components.iter().map(|s| s.len() % self.e).collect();
        Context::new(self.e, charges)
    }

    pub fn to_multipartition(&self) -> Multipartition {
        let parts = self
            .components
            .iter()
            .map(|beads| {
                let n = beads.len();
                beads
                    .iter()
                    .rev()
                    .enumerate()
                    .map(|(k, &b)| b + k + 1 - n)
                    .filter(|&p| p > 0)
                    .collect()
            })
            .collect();
        Multipartition::new(parts).expect("beta numbers give partitions")
    }

    pub fn block(&self) -> Result<Block> {
        block_of_multipartition(&self.context()?, &self.to_multipartition())
    }

    /// Total beads on each runner across all components.
    pub fn runner_census(&self) -> Vec<i64> {
        let mut census = vec![0; self.e];
        for &b in self.components.iter().flatten() {
            census[b % self.e] += 1;
        }
        census
    }

    /// Whether some component has a bead on runner `i - 1` whose target
    /// `beta + (j - i) - n e` is an empty position. Performing that move turns
    /// a multipartition of `mu` into one of `mu + alpha_{ji;n}`.
    pub fn can_push_bead(&self, i: usize, j: usize, n: i64) -> bool {
        let e = self.e;
        if i == 0 || j == 0 || i > e || j > e || i == j {
            return false;
        }
        self.components.iter().any(|beads| {
            beads.iter().filter(|&&b| b % e == i - 1).any(|&b| {
                let target = b as i64 + j as i64 - i as i64 - n * e as i64;
                target >= 0 && !beads.contains(&(target as usize))
            })
        })
    }

    /// Exchanges the occupancy of every pair `(beta, beta + 1)` with
    /// `beta + 1 = residue mod e`: runners `residue - 1` and `residue`, or for
    /// residue 0 the last runner and the first runner one row down. Position
    /// `-1` counts as occupied and beads may not leave the drawn rows.
    pub fn exchange_runners(&self, residue: usize) -> Result<Self> {
        Ok(self.exchange(residue)?.0)
    }

    /// [`Abacus::exchange_runners`], provided every bead that moves goes the
    /// same way. Then the move is a Kashiwara power on every component and
    /// the block changes by the reflection at `residue`.
    pub fn swap_runners(&self, residue: usize) -> Result<Self> {
        let (ab, up, down) = self.exchange(residue)?;
        if up > 0 && down > 0 {
            return Err(Error::SwapPrecondition { residue });
        }
        Ok(ab)
    }

    fn exchange(&self, residue: usize) -> Result<(Self, usize, usize)> {
        let e = self.e;
        if residue >= e {
            return Err(Error::ResidueOutOfRange { residue, e });
        }
        let limit = self.rows * e;
        let (mut up, mut down) = (0, 0);
        let mut components = Vec::with_capacity(self.components.len());
        for (c, beads) in self.components.iter().enumerate() {
            let mut next = beads.clone();
            for upper in (residue..=limit).step_by(e) {
                let lower_full = upper == 0 || beads.contains(&(upper - 1));
                let upper_full = beads.contains(&upper);
                if lower_full == upper_full {
                    continue;
                }
                if upper == 0 || upper == limit {
                    return Err(Error::AbacusBoundary(format!(
                        "component {c}, position {upper}"
                    )));
                }
                if lower_full {
                    next.remove(&(upper - 1));
                    next.insert(upper);
                    up += 1;
                } else {
                    next.remove(&upper);
                    next.insert(upper - 1);
                    down += 1;
                }
            }
            components.push(next);
        }
        let ab = Abacus {
            e,
            rows: self.rows,
            components,
        };
        Ok((ab, up, down))
    }

    /// One line per row, `O` for a bead and `.` for a gap, components
    /// separated by a blank line.
    pub fn render_ascii(&self) -> String {
        self.to_string()
    }

    pub fn parse_ascii(text: &str) -> Result<Self> {
        let text = text.trim();
        let mut components = Vec::new();
        let (mut e, mut rows) = (None, None);
        for chunk in text.split("\n\n") {
            let lines: Vec<&str> = chunk.lines().map(str::trim).collect();
            if *rows.get_or_insert(lines.len()) != lines.len() {
                return Err(Error::AbacusParse("components differ in height".into()));
            }
            let mut beads = BTreeSet::new();
            for (row, line) in lines.iter().enumerate() {
                let width = line.chars().count();
                if *e.get_or_insert(width) != width {
                    return Err(Error::AbacusParse(format!("row {row} has width {width}")));
                }
                for (runner, ch) in line.chars().enumerate() {
                    match ch {
                        'O' => {
                            beads.insert(row * width + runner);
                        }
                        '.' => {}
                        other => return Err(Error::AbacusParse(format!("unexpected {other:?}"))),
                    }
                }
            }
            components.push(beads);
        }
        Abacus::new(e.unwrap_or(0), rows.unwrap_or(0), components)
    }
}

impl fmt::Display for Abacus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (c, beads) in self.components.iter().enumerate() {
            if c > 0 {
                f.write_str("\n\n")?;
            }
            for row in 0..self.rows {
                if row > 0 {
                    f.write_str("\n")?;
                }
                for runner in 0..self.e {
                    let bead = beads.contains(&(row * self.e + runner));
                    f.write_str(if bead { "O" } else { "." })?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(beads: &[usize]) -> BTreeSet<usize> {
        beads.iter().copied().collect()
    }

    // The three two-runner pictures: a bead can be pushed left, none can, and
    // the runners swapped.
    fn pictures() -> [Abacus; 3] {
        [
            Abacus::new(2, 7, vec![set(&[0, 1, 2, 3, 4, 7])]).unwrap(),
            Abacus::new(2, 7, vec![set(&[0, 1, 2, 3, 4, 6])]).unwrap(),
            Abacus::new(2, 7, vec![set(&[0, 1, 2, 3, 5, 7])]).unwrap(),
        ]
    }

    #[test]
    fn census_of_reference_and_dominant_example() {
        let c = Context::new(3, vec![0, 0, 1, 2]).unwrap();
        let empty = Abacus::from_multipartition(&c, &Multipartition::empty(4), 11).unwrap();
        assert_eq!(empty.runner_census(), vec![13, 12, 11]);
        let mp = Multipartition::new(vec![vec![1, 1], vec![2, 1], vec![1, 1], vec![]]).unwrap();
        let ab = Abacus::from_multipartition(&c, &mp, 11).unwrap();
        assert_eq!(ab.runner_census(), vec![14, 12, 10]);
        assert_eq!(ab.to_multipartition(), mp);
        assert_eq!(ab.context().unwrap(), c);
        assert_eq!(ab.block().unwrap().counts(), &[3, 2, 2]);
    }

    #[test]
    fn dominant_example_figure() {
        let c = Context::new(3, vec![0, 0, 1, 2]).unwrap();
        let mp = Multipartition::new(vec![vec![1, 1], vec![2, 1], vec![1, 1], vec![]]).unwrap();
        let ab = Abacus::from_multipartition(&c, &mp, 11)
            .unwrap()
            .with_rows(7)
            .unwrap();
        let text = ab.render_ascii();
        let comps: Vec<&str> = text.split("\n\n").collect();
        assert_eq!(comps[0], "OOO\nOOO\nO.O\nO..\n...\n...\n...");
        assert_eq!(comps[1], "OOO\nOOO\nO.O\n.O.\n...\n...\n...");
        assert_eq!(comps[2], "OOO\nOOO\nOO.\nOO.\n...\n...\n...");
    }

    #[test]
    fn render_examples() {
        let ab = Abacus::new(2, 2, vec![set(&[0, 1])]).unwrap();
        assert_eq!(ab.render_ascii(), "OO\n..");
        let [first, ..] = pictures();
        assert_eq!(Abacus::parse_ascii(&first.render_ascii()).unwrap(), first);
        assert!(Abacus::parse_ascii("OO\nO").is_err());
        assert!(Abacus::parse_ascii("Ox").is_err());
    }

    #[test]
    fn pushing_left_in_pictures() {
        let [first, second, _] = pictures();
        assert!(first.can_push_bead(2, 1, 0));
        assert!(!second.can_push_bead(2, 1, 0));
    }

    #[test]
    fn swap_in_pictures() {
        let [first, second, third] = pictures();
        assert_eq!(second.swap_runners(1).unwrap(), third);
        assert_eq!(third.swap_runners(1).unwrap(), second);
        assert_eq!(
            first.swap_runners(1),
            Err(Error::SwapPrecondition { residue: 1 })
        );
        let raw = first.exchange_runners(1).unwrap();
        assert_eq!(raw.exchange_runners(1).unwrap(), first);
    }

    #[test]
    fn boundaries() {
        let ab = Abacus::new(2, 2, vec![set(&[1])]).unwrap();
        assert!(matches!(
            ab.exchange_runners(0),
            Err(Error::AbacusBoundary(_))
        ));
        let ab = Abacus::new(2, 1, vec![set(&[0, 1])]).unwrap();
        assert!(matches!(
            ab.exchange_runners(0),
            Err(Error::AbacusBoundary(_))
        ));
        assert!(Abacus::new(2, 1, vec![set(&[2])]).is_err());
    }

    #[test]
    fn empty_multipartition_has_no_deep_push() {
        let c = Context::new(3, vec![0, 2]).unwrap();
        let ab = Abacus::from_multipartition(&c, &Multipartition::empty(2), 6).unwrap();
        for i in 1..=3 {
            for j in (1..=3).filter(|&j| j != i) {
                assert!(!ab.can_push_bead(i, j, ab.rows() as i64));
            }
        }
    }

    #[test]
    fn too_few_beads() {
        let c = Context::new(2, vec![0]).unwrap();
        let mp = Multipartition::new(vec![vec![1, 1, 1]]).unwrap();
        assert_eq!(
            Abacus::from_multipartition(&c, &mp, 1),
            Err(Error::NegativeBeta { component: 0 })
        );
    }
}
