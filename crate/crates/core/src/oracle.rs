//! Brute-force ground truth: partitions of `n` into three `s`-gonal numbers
//! found by scanning two ranks and testing the remainder for membership.
//!
//! Nothing here touches the lattice or the path grammar.

use crate::polygonal::{polygonal, rank_of, PolygonOrder};

/// `n = parts[0] + parts[1] + parts[2]` with ranks `a ≥ b ≥ c`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Decomposition {
    pub parts: [u64; 3],
    pub ranks: [u64; 3],
    pub s: PolygonOrder,
}

impl Decomposition {
    pub fn total(&self) -> u64 {
        self.parts.iter().sum()
    }
}

fn scan(s: PolygonOrder, n: u64, allow_zero: bool, mut found: impl FnMut(Decomposition)) {
    let min_rank = u64::from(!allow_zero);
    let part = |r: u64| polygonal(s, r).ok();
    let mut a = min_rank;
    while let Some(pa) = part(a).filter(|&v| v <= n) {
        let mut b = min_rank;
        while b <= a {
            let Some(pb) = part(b).filter(|&v| pa + v <= n) else {
                break;
            };
            let rest = n - pa - pb;
            if let Some(c) = rank_of(s, rest) {
                if c >= min_rank && c <= b {
                    found(Decomposition {
                        parts: [pa, pb, rest],
                        ranks: [a, b, c],
                        s,
                    });
                }
            }
            b += 1;
        }
        a += 1;
    }
}

/// Number of multisets `{a ≥ b ≥ c}` of ranks with `p_a + p_b + p_c = n`.
/// Ranks start at 1, or at 0 when `allow_zero` admits the part 0.
pub fn count_oracle(s: PolygonOrder, n: u64, allow_zero: bool) -> u64 {
    let mut count = 0;
    scan(s, n, allow_zero, |_| count += 1);
    count
}

/// The witnesses behind [`count_oracle`], largest leading part first.
pub fn decompositions(s: PolygonOrder, n: u64, allow_zero: bool) -> Vec<Decomposition> {
    let mut out = Vec::new();
    scan(s, n, allow_zero, |d| out.push(d));
    out.sort_unstable_by_key(|d| std::cmp::Reverse(d.parts));
    out
}
