//! Polygonal numbers `p^s_r = ((s-2)r² - (s-4)r) / 2` and the triangular
//! numbers `t_i = i(i+1)/2` that index the lattice of the representation.

use std::fmt;

use crate::error::{Error, Result};

/// Number of sides `s ≥ 3` of the polygon.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PolygonOrder(u64);

impl PolygonOrder {
    pub const TRIANGULAR: PolygonOrder = PolygonOrder(3);
    pub const SQUARE: PolygonOrder = PolygonOrder(4);

    pub fn new(s: u64) -> Result<Self> {
        if s < 3 {
            return Err(Error::InvalidOrder(s));
        }
        Ok(PolygonOrder(s))
    }

    pub fn get(self) -> u64 {
        self.0
    }
}

impl fmt::Display for PolygonOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Shifted rank index `i ≥ -1`; the polygonal rank it stands for is `i + 2`.
///
/// Indices are capped at [`RankIndex::MAX`] so that `t_i` always fits a `u64`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RankIndex(i64);

impl RankIndex {
    pub const MIN: i64 = -1;
    pub const MAX: i64 = 1 << 31;
    pub const NONE: RankIndex = RankIndex(-1);

    pub fn new(i: i64) -> Result<Self> {
        if !(Self::MIN..=Self::MAX).contains(&i) {
            return Err(Error::InvalidRankIndex {
                got: i,
                max: Self::MAX,
            });
        }
        Ok(RankIndex(i))
    }

    /// Index of the polygonal rank `r ≥ 1`.
    pub fn from_rank(r: u64) -> Result<Self> {
        let i = i64::try_from(r).map_err(|_| Error::Overflow("rank index"))? - 2;
        Self::new(i)
    }

    pub fn get(self) -> i64 {
        self.0
    }

    pub fn rank(self) -> u64 {
        (self.0 + 2) as u64
    }
}

impl fmt::Display for RankIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// `p^s_r`, exact. Results that do not fit a `u64` are reported as overflow.
pub fn polygonal(s: PolygonOrder, r: u64) -> Result<u64> {
    let s = i128::from(s.get());
    let r = i128::from(r);
    let quad = (s - 2)
        .checked_mul(r)
        .and_then(|x| x.checked_mul(r))
        .ok_or(Error::Overflow("polygonal number"))?;
    let lin = (s - 4) * r;
    let twice = quad
        .checked_sub(lin)
        .ok_or(Error::Overflow("polygonal number"))?;
    u64::try_from(twice / 2).map_err(|_| Error::Overflow("polygonal number"))
}

/// `t_i = i(i+1)/2` with `t_{-1} = 0`.
pub fn tri(i: RankIndex) -> u64 {
    match i.get() {
        i if i <= 0 => 0,
        i => {
            let i = i as u64;
            i * (i + 1) / 2
        }
    }
}

/// Inverse of [`polygonal`]: the rank `r` with `p^s_r = m`, if any.
///
/// `rank_of(s, 0)` is `Some(0)`.
pub fn rank_of(s: PolygonOrder, m: u64) -> Option<u64> {
    if m == 0 {
        return Some(0);
    }
    let a = u128::from(s.get() - 2);
    let b = i128::from(s.get()) - 4;
    // (s-2)r² - (s-4)r - 2m = 0
    let disc = b
        .unsigned_abs()
        .checked_mul(b.unsigned_abs())
        .zip(a.checked_mul(8).and_then(|x| x.checked_mul(u128::from(m))))
        .and_then(|(x, y)| x.checked_add(y));
    let guess = match disc.and_then(|d| i128::try_from(d.isqrt()).ok()) {
        Some(root) => u64::try_from(((b + root) / (2 * a as i128)).max(0)).ok()?,
        None => return rank_by_bisection(s, m),
    };
    [guess, guess.saturating_add(1)]
        .into_iter()
        .find(|&r| r > 0 && polygonal(s, r).ok() == Some(m))
}

fn rank_by_bisection(s: PolygonOrder, m: u64) -> Option<u64> {
    let (mut lo, mut hi) = (1u64, u64::from(u32::MAX));
    while lo <= hi {
        let mid = lo + (hi - lo) / 2;
        match polygonal(s, mid) {
            Ok(v) if v == m => return Some(mid),
            Ok(v) if v < m => lo = mid + 1,
            _ => hi = mid - 1,
        }
    }
    None
}

/// Largest rank `r` with `p^s_r ≤ n` (0 when `n = 0`).
pub fn max_rank(s: PolygonOrder, n: u64) -> u64 {
    let mut r = 0u64;
    while matches!(polygonal(s, r + 1), Ok(v) if v <= n) {
        r += 1;
    }
    r
}

/// All `(rank, value)` pairs with value `≤ n`, in increasing order.
pub fn polygonal_upto(s: PolygonOrder, n: u64, include_zero: bool) -> Vec<(u64, u64)> {
    let start = if include_zero { 0 } else { 1 };
    (start..)
        .map(|r| (r, polygonal(s, r)))
        .take_while(|(_, v)| matches!(v, Ok(v) if *v <= n))
        .map(|(r, v)| (r, v.unwrap()))
        .collect()
}
