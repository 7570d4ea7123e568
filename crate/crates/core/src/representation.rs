//! Representations of the poset `ℛ = Σ_j C_j` over ℕ.
//!
//! `ℛ` is a disjoint sum of chains `C_j = v_0j < v_1j < v_2j < ...`; points in
//! different chains are incomparable. Every representation built here assigns
//! the affine value `base + ci·i + cj·j` to `v_ij`, together with the
//! single-part partition of that value.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::polygonal::PolygonOrder;

/// Lattice point `v_ij`: row `i` of chain `C_j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Coord {
    pub i: u64,
    pub j: u64,
}

impl Coord {
    pub const ORIGIN: Coord = Coord { i: 0, j: 0 };

    pub const fn new(i: u64, j: u64) -> Self {
        Coord { i, j }
    }

    /// Poset order: comparable only inside one chain.
    pub fn precedes(self, other: Coord) -> bool {
        self.j == other.j && self.i <= other.i
    }
}

impl fmt::Display for Coord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.i, self.j)
    }
}

impl From<(u64, u64)> for Coord {
    fn from((i, j): (u64, u64)) -> Self {
        Coord { i, j }
    }
}

/// Affine value assignment `v_ij ↦ base + ci·i + cj·j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Representation {
    base: u64,
    ci: u64,
    cj: u64,
    label: String,
}

/// The pair `(n_x, λ_x)` attached to a point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexAssignment {
    pub coord: Coord,
    pub value: u64,
    /// Nonincreasing parts; empty when `value == 0`.
    pub partition: Vec<u64>,
}

impl VertexAssignment {
    pub fn single_part(coord: Coord, value: u64) -> Self {
        let partition = if value == 0 { Vec::new() } else { vec![value] };
        VertexAssignment {
            coord,
            value,
            partition,
        }
    }

    pub fn size(&self) -> u64 {
        self.partition.iter().sum()
    }

    pub fn largest_part(&self) -> u64 {
        self.partition.first().copied().unwrap_or(0)
    }
}

impl Representation {
    pub fn new(base: u64, ci: u64, cj: u64, label: impl Into<String>) -> Result<Self> {
        if ci == 0 && cj == 0 {
            return Err(Error::DegenerateRepresentation);
        }
        Ok(Representation {
            base,
            ci,
            cj,
            label: label.into(),
        })
    }

    /// `ℛ_s`: `n_ij = 3 + (s-2)i + (s-1)j`.
    pub fn standard(s: PolygonOrder) -> Self {
        let s = s.get();
        Representation {
            base: 3,
            ci: s - 2,
            cj: s - 1,
            label: format!("R_{s}"),
        }
    }

    /// `ℛ'_3`: `n_ij = i + j`.
    pub fn diagonal() -> Self {
        Representation {
            base: 0,
            ci: 1,
            cj: 1,
            label: "R'_3".to_owned(),
        }
    }

    /// `n_ij = 2i + j`, the representation carrying the three-square exceptions.
    pub fn two_i_plus_j() -> Self {
        Representation {
            base: 0,
            ci: 2,
            cj: 1,
            label: "2i+j".to_owned(),
        }
    }

    pub fn base(&self) -> u64 {
        self.base
    }

    pub fn ci(&self) -> u64 {
        self.ci
    }

    pub fn cj(&self) -> u64 {
        self.cj
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn value(&self, v: Coord) -> Result<u64> {
        self.ci
            .checked_mul(v.i)
            .and_then(|x| x.checked_add(self.base))
            .and_then(|x| self.cj.checked_mul(v.j).and_then(|y| x.checked_add(y)))
            .ok_or(Error::Overflow("vertex value"))
    }

    pub fn assignment(&self, v: Coord) -> Result<VertexAssignment> {
        Ok(VertexAssignment::single_part(v, self.value(v)?))
    }

    /// The class `[v]` of every point carrying value `n`, sorted by `(i, j)`.
    ///
    /// Classes are finite only when both coefficients are positive.
    pub fn class_of(&self, n: u64) -> Result<Vec<Coord>> {
        if self.ci == 0 || self.cj == 0 {
            return Err(Error::InfiniteClass(self.label.clone()));
        }
        let Some(rest) = n.checked_sub(self.base) else {
            return Ok(Vec::new());
        };
        let mut out: Vec<Coord> = (0..=rest / self.cj)
            .filter_map(|j| {
                let left = rest - self.cj * j;
                left.is_multiple_of(self.ci)
                    .then(|| Coord::new(left / self.ci, j))
            })
            .collect();
        out.sort_unstable();
        Ok(out)
    }

    pub fn validate_monotonicity(&self, i_max: u64, j_max: u64) -> Result<Monotonicity> {
        validate_monotonicity(|c| self.assignment(c), i_max, j_max)
    }
}

impl fmt::Display for Representation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: {} + {}i + {}j",
            self.label, self.base, self.ci, self.cj
        )
    }
}

/// Which of the three monotonicity conditions a covering pair broke.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Condition {
    Value,
    Size,
    LargestPart,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Monotonicity {
    Pass,
    Fail {
        lower: Coord,
        upper: Coord,
        condition: Condition,
    },
}

impl Monotonicity {
    pub fn passed(&self) -> bool {
        matches!(self, Monotonicity::Pass)
    }
}

/// Checks `x ≤ y ⇒ n_x ≤ n_y, |λ_x| ≤ |λ_y|, max λ_x ≤ max λ_y` on every
/// covering pair `v_ij < v_(i+1)j` with `i < i_max`, `j ≤ j_max`.
///
/// Covering pairs suffice since all three conditions are transitive.
pub fn validate_monotonicity<F>(assign: F, i_max: u64, j_max: u64) -> Result<Monotonicity>
where
    F: Fn(Coord) -> Result<VertexAssignment>,
{
    for j in 0..=j_max {
        let mut lower = assign(Coord::new(0, j))?;
        for i in 0..i_max {
            let upper = assign(Coord::new(i + 1, j))?;
            let broken = if lower.value > upper.value {
                Some(Condition::Value)
            } else if lower.size() > upper.size() {
                Some(Condition::Size)
            } else if lower.largest_part() > upper.largest_part() {
                Some(Condition::LargestPart)
            } else {
                None
            };
            if let Some(condition) = broken {
                return Ok(Monotonicity::Fail {
                    lower: lower.coord,
                    upper: upper.coord,
                    condition,
                });
            }
            lower = upper;
        }
    }
    Ok(Monotonicity::Pass)
}
