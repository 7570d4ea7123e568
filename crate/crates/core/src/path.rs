//! Admissible paths on the associated graph `Γ` of `ℛ_s`, their classes, and
//! the resulting count of partitions into three `s`-gonal numbers.
//!
//! An admissible path leaves `v_00` along the left boundary path to
//! `v_(t_i0)(i0+1)`, optionally continues to `v_(t_i0+t_j)(i0+j+2)` and then to
//! `v_(t_i0+t_j+t_k)(i0+j+k+3)` with `k ≤ j`. Under `ℛ_s` the final vertex
//! carries `p^s_(i0+2) + p^s_(j+2) + p^s_(k+2)`, a missing stage contributing
//! `p^s_1 = 1`. Paths inducing the same partition form one class; counting
//! classes over the value class `[v]` gives `P^s_3(n)`.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::polygonal::{max_rank, polygonal, tri, PolygonOrder, RankIndex};
use crate::representation::{Coord, Representation};

/// Canonical multiset `lo ≤ mid ≤ hi` of rank indices; encodes the partition
/// `p^s_(lo+2) + p^s_(mid+2) + p^s_(hi+2)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IndexTriple {
    lo: RankIndex,
    mid: RankIndex,
    hi: RankIndex,
}

impl IndexTriple {
    pub fn new(a: RankIndex, b: RankIndex, c: RankIndex) -> Self {
        let mut v = [a, b, c];
        v.sort_unstable();
        IndexTriple {
            lo: v[0],
            mid: v[1],
            hi: v[2],
        }
    }

    pub fn from_indices(a: i64, b: i64, c: i64) -> Result<Self> {
        Ok(Self::new(
            RankIndex::new(a)?,
            RankIndex::new(b)?,
            RankIndex::new(c)?,
        ))
    }

    /// From polygonal ranks, each `≥ 1`.
    pub fn from_ranks(a: u64, b: u64, c: u64) -> Result<Self> {
        Ok(Self::new(
            RankIndex::from_rank(a)?,
            RankIndex::from_rank(b)?,
            RankIndex::from_rank(c)?,
        ))
    }

    pub fn lo(&self) -> RankIndex {
        self.lo
    }

    pub fn mid(&self) -> RankIndex {
        self.mid
    }

    pub fn hi(&self) -> RankIndex {
        self.hi
    }

    pub fn indices(&self) -> [RankIndex; 3] {
        [self.lo, self.mid, self.hi]
    }

    /// Polygonal ranks in nonincreasing order.
    pub fn ranks(&self) -> [u64; 3] {
        [self.hi.rank(), self.mid.rank(), self.lo.rank()]
    }

    pub fn vertex(&self) -> Coord {
        triple_to_vertex(*self)
    }
}

impl fmt::Display for IndexTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.lo, self.mid, self.hi)
    }
}

/// End vertex `v_(t_lo+t_mid+t_hi)(lo+mid+hi+3)` of every path in the class.
pub fn triple_to_vertex(t: IndexTriple) -> Coord {
    let i = t.indices().into_iter().map(tri).sum();
    let j = t.indices().into_iter().map(|x| x.get() + 1).sum::<i64>() as u64;
    Coord::new(i, j)
}

pub fn triple_value(s: PolygonOrder, t: IndexTriple) -> Result<u64> {
    t.indices().into_iter().try_fold(0u64, |acc, x| {
        acc.checked_add(polygonal(s, x.rank())?)
            .ok_or(Error::Overflow("triple value"))
    })
}

/// Stage encoding `(i0; j; k)` of an admissible path with its vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdmissiblePath {
    i0: RankIndex,
    j: Option<RankIndex>,
    k: Option<RankIndex>,
    waypoints: Vec<Coord>,
    vertices: Vec<Coord>,
}

impl AdmissiblePath {
    /// The length-0 path at `v_00`, encoding `1 + 1 + 1`.
    pub fn trivial() -> Self {
        AdmissiblePath {
            i0: RankIndex::NONE,
            j: None,
            k: None,
            waypoints: vec![Coord::ORIGIN],
            vertices: vec![Coord::ORIGIN],
        }
    }

    pub fn new(i0: i64, j: Option<i64>, k: Option<i64>) -> Result<Self> {
        let invalid = |msg: &str| Err(Error::InvalidPath(format!("({i0}; {j:?}; {k:?}): {msg}")));
        if i0 == -1 {
            if j.is_some() || k.is_some() {
                return invalid("only the trivial path may start at index -1");
            }
            return Ok(Self::trivial());
        }
        if j.is_none() && k.is_some() {
            return invalid("third stage without a second");
        }
        if j.is_some_and(|j| j < 0) || k.is_some_and(|k| k < 0) {
            return invalid("later stages need indices >= 0");
        }
        if let (Some(j), Some(k)) = (j, k) {
            if k > j {
                return invalid("third stage needs k <= j");
            }
        }
        let i0 = RankIndex::new(i0)?;
        let j = j.map(RankIndex::new).transpose()?;
        let k = k.map(RankIndex::new).transpose()?;

        let mut vertices = vec![Coord::ORIGIN];
        let mut waypoints = Vec::with_capacity(3);
        let t0 = tri(i0);
        let i0v = i0.get() as u64;
        for h in 0..=i0v {
            vertices.push(Coord::new(tri_u(h), h + 1));
        }
        waypoints.push(Coord::new(t0, i0v + 1));
        if let Some(j) = j {
            let jv = j.get() as u64;
            for l in 0..=jv {
                vertices.push(Coord::new(t0 + tri_u(l), i0v + l + 2));
            }
            waypoints.push(Coord::new(t0 + tri(j), i0v + jv + 2));
            if let Some(k) = k {
                let kv = k.get() as u64;
                for m in 0..=kv {
                    vertices.push(Coord::new(t0 + tri(j) + tri_u(m), i0v + jv + m + 3));
                }
                waypoints.push(Coord::new(t0 + tri(j) + tri(k), i0v + jv + kv + 3));
            }
        }
        Ok(AdmissiblePath {
            i0,
            j,
            k,
            waypoints,
            vertices,
        })
    }

    pub fn i0(&self) -> RankIndex {
        self.i0
    }

    pub fn j(&self) -> Option<RankIndex> {
        self.j
    }

    pub fn k(&self) -> Option<RankIndex> {
        self.k
    }

    pub fn is_trivial(&self) -> bool {
        self.i0 == RankIndex::NONE
    }

    /// Stage endpoints, in traversal order.
    pub fn waypoints(&self) -> &[Coord] {
        &self.waypoints
    }

    /// Full vertex sequence from `v_00`; consecutive pairs are edges of `Γ`.
    pub fn vertices(&self) -> &[Coord] {
        &self.vertices
    }

    pub fn end(&self) -> Coord {
        *self.vertices.last().expect("paths are never empty")
    }

    /// Number of edges.
    pub fn len(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// The partition this path induces; missing stages contribute index -1.
    pub fn triple(&self) -> IndexTriple {
        IndexTriple::new(
            self.i0,
            self.j.unwrap_or(RankIndex::NONE),
            self.k.unwrap_or(RankIndex::NONE),
        )
    }

    /// Value every vertex must carry under `ℛ_s`: the running partial sum of
    /// the stages, padded with `p^s_1 = 1`.
    pub fn partial_sums(&self, s: PolygonOrder) -> Result<Vec<u64>> {
        let p = |x: u64| polygonal(s, x + 2);
        let mut out = Vec::with_capacity(self.vertices.len());
        out.push(3);
        if self.is_trivial() {
            return Ok(out);
        }
        let i0 = self.i0.get() as u64;
        for h in 0..=i0 {
            out.push(p(h)? + 2);
        }
        let first = p(i0)?;
        if let Some(j) = self.j {
            let j = j.get() as u64;
            for l in 0..=j {
                out.push(first + p(l)? + 1);
            }
            let second = first + p(j)?;
            if let Some(k) = self.k {
                for m in 0..=k.get() as u64 {
                    out.push(second + p(m)?);
                }
            }
        }
        Ok(out)
    }
}

impl fmt::Display for AdmissiblePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", Coord::ORIGIN)?;
        if !self.is_trivial() {
            for w in &self.waypoints {
                write!(f, "||{w}")?;
            }
        }
        Ok(())
    }
}

fn tri_u(h: u64) -> u64 {
    h * (h + 1) / 2
}

pub fn expand_path(p: &AdmissiblePath) -> Vec<Coord> {
    p.vertices().to_vec()
}

/// Every stage encoding of `t`: the nonnegative indices in each order that
/// keeps `k ≤ j`, with `-1` entries dropped. Sorted by `(i0, j, k)`.
pub fn paths_for_triple(t: IndexTriple) -> Vec<AdmissiblePath> {
    let stages: Vec<i64> = t
        .indices()
        .into_iter()
        .map(RankIndex::get)
        .filter(|&x| x >= 0)
        .collect();
    let mut orders: Vec<(i64, Option<i64>, Option<i64>)> = match stages[..] {
        [] => vec![(-1, None, None)],
        [a] => vec![(a, None, None)],
        [a, b] => vec![(a, Some(b), None), (b, Some(a), None)],
        [a, b, c] => [
            [a, b, c],
            [a, c, b],
            [b, a, c],
            [b, c, a],
            [c, a, b],
            [c, b, a],
        ]
        .into_iter()
        .filter(|o| o[2] <= o[1])
        .map(|o| (o[0], Some(o[1]), Some(o[2])))
        .collect(),
        _ => unreachable!("a triple has three indices"),
    };
    orders.sort_unstable();
    orders.dedup();
    orders
        .into_iter()
        .map(|(i0, j, k)| AdmissiblePath::new(i0, j, k).expect("grammar-valid by construction"))
        .collect()
}

/// Admissible paths sharing one partition, all ending at one vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathClass {
    pub partition: IndexTriple,
    pub end: Coord,
    pub members: Vec<AdmissiblePath>,
}

impl PathClass {
    pub fn of(t: IndexTriple) -> Self {
        PathClass {
            partition: t,
            end: triple_to_vertex(t),
            members: paths_for_triple(t),
        }
    }
}

/// Per-index contribution `ci·t_x + cj·(x+1)` to the value of an end vertex,
/// so that `value = base + Σ contribution`.
fn contributions(rep: &Representation, hi_max: i64) -> Vec<u64> {
    (-1..=hi_max)
        .map(|x| {
            let x = RankIndex::new(x).expect("bounded by max_rank");
            rep.ci()
                .saturating_mul(tri(x))
                .saturating_add(rep.cj().saturating_mul((x.get() + 1) as u64))
        })
        .collect()
}

fn index_bound(s: PolygonOrder, limit: u64) -> Option<i64> {
    // every triple uses two parts ≥ 1, so a single part is at most limit - 2
    let r = max_rank(s, limit.checked_sub(2)?);
    (r >= 1).then(|| r as i64 - 2)
}

/// Triples whose end vertex carries `n` under `ℛ_s`, grouped by end vertex.
///
/// Values are read off the representation at the end vertex, not summed from
/// polygonal numbers, so this route stays independent of the oracle.
pub fn classes_at(s: PolygonOrder, n: u64) -> BTreeMap<Coord, Vec<IndexTriple>> {
    let mut out: BTreeMap<Coord, Vec<IndexTriple>> = BTreeMap::new();
    let Some(hi_max) = index_bound(s, n) else {
        return out;
    };
    let rep = Representation::standard(s);
    let c = contributions(&rep, hi_max);
    let Some(target) = n.checked_sub(rep.base()) else {
        return out;
    };
    // c[x + 1] belongs to index x
    for lo in 0..c.len() {
        if c[lo].saturating_mul(3) > target {
            break;
        }
        for mid in lo..c.len() {
            let partial = c[lo] + c[mid];
            if partial.saturating_add(c[mid]) > target {
                break;
            }
            let want = target - partial;
            if let Ok(off) = c[mid..].binary_search(&want) {
                let hi = mid + off;
                let t = IndexTriple::from_indices(lo as i64 - 1, mid as i64 - 1, hi as i64 - 1)
                    .expect("bounded indices");
                let w = triple_to_vertex(t);
                debug_assert_eq!(rep.value(w).ok(), Some(n));
                out.entry(w).or_default().push(t);
            }
        }
    }
    out
}

/// `δ_g(w)`: number of path classes ending at `w` whose partition sums to `n`.
///
/// Walks the triples whose end-vertex formula lands on `w` directly.
pub fn delta_g(s: PolygonOrder, w: Coord, n: u64) -> Result<u64> {
    let index_sum = w.j as i64 - 3;
    let mut count = 0;
    let mut lo = -1i64;
    while 3 * lo <= index_sum {
        let mut mid = lo;
        while lo + 2 * mid <= index_sum {
            let hi = index_sum - lo - mid;
            let t = IndexTriple::from_indices(lo, mid, hi)?;
            if triple_to_vertex(t) == w && triple_value(s, t)? == n {
                count += 1;
            }
            mid += 1;
        }
        lo += 1;
    }
    Ok(count)
}

/// `𝒜`: members of the value class of `n` under `ℛ_s` hosting a path class.
pub fn script_a(s: PolygonOrder, n: u64) -> Vec<Coord> {
    let hosts = classes_at(s, n);
    Representation::standard(s)
        .class_of(n)
        .expect("standard representations have positive coefficients")
        .into_iter()
        .filter(|w| hosts.contains_key(w))
        .collect()
}

/// `P^s_3(n)`: partitions of `n` into three `s`-gonal numbers of positive
/// rank, as `Σ_(w ∈ 𝒜) δ_g(w)`.
pub fn count_p3(s: PolygonOrder, n: u64) -> u64 {
    let hosts = classes_at(s, n);
    script_a(s, n).iter().map(|w| hosts[w].len() as u64).sum()
}

/// Largest table `count_table` will allocate.
pub const TABLE_BUDGET: u64 = 100_000_000;

/// `P^s_3(n)` for every `n ≤ max`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountTable {
    s: PolygonOrder,
    counts: Vec<u32>,
}

impl CountTable {
    pub fn order(&self) -> PolygonOrder {
        self.s
    }

    pub fn max(&self) -> u64 {
        self.counts.len() as u64 - 1
    }

    pub fn get(&self, n: u64) -> Option<u64> {
        self.counts
            .get(usize::try_from(n).ok()?)
            .map(|&c| u64::from(c))
    }

    /// `(n, count)` rows in increasing `n`.
    pub fn rows(&self) -> impl Iterator<Item = (u64, u64)> + '_ {
        self.counts
            .iter()
            .enumerate()
            .map(|(n, &c)| (n as u64, u64::from(c)))
    }
}

/// Calls `f(triple, end_vertex, value)` for every triple whose end vertex
/// carries a value `≤ limit` under `ℛ_s`.
pub fn for_each_triple_upto<F>(s: PolygonOrder, limit: u64, mut f: F)
where
    F: FnMut(IndexTriple, Coord, u64),
{
    let Some(hi_max) = index_bound(s, limit) else {
        return;
    };
    let rep = Representation::standard(s);
    let tris: Vec<u64> = (-1..=hi_max)
        .map(|x| tri(RankIndex::new(x).expect("bounded")))
        .collect();
    let value = |w: Coord| {
        rep.ci()
            .saturating_mul(w.i)
            .saturating_add(rep.cj().saturating_mul(w.j))
            .saturating_add(rep.base())
    };
    let at =
        |a: usize, b: usize, c: usize| Coord::new(tris[a] + tris[b] + tris[c], (a + b + c) as u64);
    for lo in 0..tris.len() {
        if value(at(lo, lo, lo)) > limit {
            break;
        }
        for mid in lo..tris.len() {
            if value(at(lo, mid, mid)) > limit {
                break;
            }
            for hi in mid..tris.len() {
                let w = at(lo, mid, hi);
                let v = value(w);
                if v > limit {
                    break;
                }
                let t = IndexTriple::from_indices(lo as i64 - 1, mid as i64 - 1, hi as i64 - 1)
                    .expect("bounded indices");
                f(t, w, v);
            }
        }
    }
}

/// Batch form of [`count_p3`]: one pass over every triple with value `≤ max`.
pub fn count_table(s: PolygonOrder, max: u64) -> Result<CountTable> {
    if max >= TABLE_BUDGET {
        return Err(Error::Budget {
            what: "count table",
            needed: u128::from(max) + 1,
            budget: TABLE_BUDGET,
        });
    }
    let mut counts = vec![0u32; max as usize + 1];
    for_each_triple_upto(s, max, |_, _, v| counts[v as usize] += 1);
    Ok(CountTable { s, counts })
}
