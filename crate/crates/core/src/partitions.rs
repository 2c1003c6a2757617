//! Partitions of `k` upper and `l` lower points.
//!
//! Points are numbered `1..=k` along the top row and `k+1..=k+l` along the
//! bottom row, both left to right. Blocks are stored sorted, with blocks
//! ordered by their smallest point.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::{caps, Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mode {
    All,
    NonCrossing,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    upper: usize,
    lower: usize,
    blocks: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComposeResult {
    pub result: Partition,
    pub closed_blocks: usize,
}

impl Partition {
    /// Builds a partition from 1-based blocks, validating coverage.
    pub fn new(upper: usize, lower: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        let n = upper + lower;
        let mut seen = vec![false; n];
        for b in &blocks {
            if b.is_empty() {
                return Err(Error::invalid("empty block"));
            }
            for &x in b {
                if x == 0 || x > n {
                    return Err(Error::invalid(format!("point {x} outside 1..={n}")));
                }
                if std::mem::replace(&mut seen[x - 1], true) {
                    return Err(Error::invalid(format!("point {x} in two blocks")));
                }
            }
        }
        if let Some(i) = seen.iter().position(|s| !s) {
            return Err(Error::invalid(format!("point {} not covered", i + 1)));
        }
        Ok(Self::canonical(upper, lower, blocks))
    }

    fn canonical(upper: usize, lower: usize, mut blocks: Vec<Vec<usize>>) -> Self {
        for b in &mut blocks {
            b.sort_unstable();
        }
        blocks.sort_unstable_by_key(|b| b[0]);
        Partition {
            upper,
            lower,
            blocks,
        }
    }

    /// Builds from a block label per point (0-based point order). Labels are
    /// arbitrary; equal labels share a block.
    pub fn from_labels(upper: usize, lower: usize, labels: &[usize]) -> Self {
        assert_eq!(labels.len(), upper + lower);
        let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (i, &c) in labels.iter().enumerate() {
            groups.entry(c).or_default().push(i + 1);
        }
        Self::canonical(upper, lower, groups.into_values().collect())
    }

    pub fn empty() -> Self {
        Partition {
            upper: 0,
            lower: 0,
            blocks: vec![],
        }
    }

    /// Vertical strings `{i, k+i}`.
    pub fn identity(k: usize) -> Self {
        Self::canonical(k, k, (1..=k).map(|i| vec![i, k + i]).collect())
    }

    pub fn one_block(upper: usize, lower: usize) -> Self {
        let n = upper + lower;
        let blocks = if n == 0 {
            vec![]
        } else {
            vec![(1..=n).collect()]
        };
        Self::canonical(upper, lower, blocks)
    }

    pub fn discrete(upper: usize, lower: usize) -> Self {
        Self::canonical(upper, lower, (1..=upper + lower).map(|i| vec![i]).collect())
    }

    /// The pairing of two lower points, in `P(0,2)`.
    pub fn cap() -> Self {
        Self::one_block(0, 2)
    }

    /// The pairing of two upper points, in `P(2,0)`.
    pub fn cup() -> Self {
        Self::one_block(2, 0)
    }

    pub fn upper(&self) -> usize {
        self.upper
    }

    pub fn lower(&self) -> usize {
        self.lower
    }

    pub fn points(&self) -> usize {
        self.upper + self.lower
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    /// Block index of every point, 0-based.
    pub fn labels(&self) -> Vec<usize> {
        let mut lab = vec![0; self.points()];
        for (bi, b) in self.blocks.iter().enumerate() {
            for &x in b {
                lab[x - 1] = bi;
            }
        }
        lab
    }

    /// Position of a 1-based point on the boundary circle.
    fn circle_pos(&self, x: usize) -> usize {
        if x <= self.upper {
            x - 1
        } else {
            self.upper + (self.upper + self.lower - x)
        }
    }

    pub fn is_noncrossing(&self) -> bool {
        let n = self.points();
        let mut seq = vec![0usize; n];
        for (bi, b) in self.blocks.iter().enumerate() {
            for &x in b {
                seq[self.circle_pos(x)] = bi;
            }
        }
        sequence_is_noncrossing(&seq, self.blocks.len())
    }

    pub fn tensor(&self, q: &Partition) -> Partition {
        let (k1, l1) = (self.upper, self.lower);
        let k = k1 + q.upper;
        let shift_p = |x: usize| if x <= k1 { x } else { x - k1 + k };
        let shift_q = |x: usize| {
            if x <= q.upper {
                x + k1
            } else {
                x - q.upper + k + l1
            }
        };
        let mut blocks: Vec<Vec<usize>> = self
            .blocks
            .iter()
            .map(|b| b.iter().map(|&x| shift_p(x)).collect())
            .collect();
        blocks.extend(
            q.blocks
                .iter()
                .map(|b| b.iter().map(|&x| shift_q(x)).collect()),
        );
        Self::canonical(k, l1 + q.lower, blocks)
    }

    /// `self ∘ q`: `q` on top, its lower row glued to the upper row of `self`.
    pub fn compose(&self, q: &Partition) -> Result<ComposeResult> {
        if self.upper != q.lower {
            return Err(Error::size(format!(
                "cannot compose: upper({}) != lower({})",
                self.upper, q.lower
            )));
        }
        let (k, m, l) = (q.upper, q.lower, self.lower);
        // nodes: q points 0..k+m, then self's lower points k+m..k+m+l;
        // self's upper point j is q's lower point k+j
        let mut uf = UnionFind::new(k + m + l);
        for b in &q.blocks {
            for w in b.windows(2) {
                uf.union(w[0] - 1, w[1] - 1);
            }
        }
        let node_p = |x: usize| {
            if x <= m {
                k + x - 1
            } else {
                k + m + (x - m) - 1
            }
        };
        for b in &self.blocks {
            for w in b.windows(2) {
                uf.union(node_p(w[0]), node_p(w[1]));
            }
        }
        let mut outer: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for x in 0..k {
            outer.entry(uf.find(x)).or_default().push(x + 1);
        }
        for y in 0..l {
            outer.entry(uf.find(k + m + y)).or_default().push(k + y + 1);
        }
        let mut middle_roots: Vec<usize> = (k..k + m)
            .map(|x| uf.find(x))
            .filter(|r| !outer.contains_key(r))
            .collect();
        middle_roots.sort_unstable();
        middle_roots.dedup();
        Ok(ComposeResult {
            result: Self::canonical(k, l, outer.into_values().collect()),
            closed_blocks: middle_roots.len(),
        })
    }

    /// Upside-down reflection.
    pub fn involute(&self) -> Partition {
        let (k, l) = (self.upper, self.lower);
        let flip = |x: usize| if x <= k { l + x } else { x - k };
        Self::canonical(
            l,
            k,
            self.blocks
                .iter()
                .map(|b| b.iter().map(|&x| flip(x)).collect())
                .collect(),
        )
    }

    fn same_ground(&self, q: &Partition) -> Result<()> {
        if self.upper != q.upper || self.lower != q.lower {
            return Err(Error::size(format!(
                "ground sets differ: ({},{}) vs ({},{})",
                self.upper, self.lower, q.upper, q.lower
            )));
        }
        Ok(())
    }

    /// Least upper bound in the full partition lattice.
    pub fn join(&self, q: &Partition) -> Result<Partition> {
        self.same_ground(q)?;
        let mut uf = UnionFind::new(self.points());
        for b in self.blocks.iter().chain(&q.blocks) {
            for w in b.windows(2) {
                uf.union(w[0] - 1, w[1] - 1);
            }
        }
        let labels: Vec<usize> = (0..self.points()).map(|x| uf.find(x)).collect();
        Ok(Self::from_labels(self.upper, self.lower, &labels))
    }

    /// Number of blocks of the join, without building it.
    pub fn join_blocks(&self, q: &Partition) -> Result<usize> {
        self.same_ground(q)?;
        let mut uf = UnionFind::new(self.points());
        for b in self.blocks.iter().chain(&q.blocks) {
            for w in b.windows(2) {
                uf.union(w[0] - 1, w[1] - 1);
            }
        }
        Ok(uf.count())
    }

    /// Greatest lower bound: nonempty pairwise intersections of blocks.
    pub fn meet(&self, q: &Partition) -> Result<Partition> {
        self.same_ground(q)?;
        let (a, b) = (self.labels(), q.labels());
        let n = self.points();
        let labels: Vec<usize> = (0..n).map(|i| a[i] * n + b[i]).collect();
        Ok(Self::from_labels(self.upper, self.lower, &labels))
    }

    /// `self ≤ q`: every block of `self` lies inside a block of `q`.
    pub fn refines(&self, q: &Partition) -> Result<bool> {
        self.same_ground(q)?;
        let lab = q.labels();
        Ok(self
            .blocks
            .iter()
            .all(|b| b.iter().all(|&x| lab[x - 1] == lab[b[0] - 1])))
    }

    /// Level sets of a tuple, as a partition of `tuple.len()` lower points.
    pub fn kernel<T: Ord>(tuple: &[T]) -> Partition {
        let mut first: BTreeMap<&T, usize> = BTreeMap::new();
        let labels: Vec<usize> = tuple
            .iter()
            .enumerate()
            .map(|(i, v)| *first.entry(v).or_insert(i))
            .collect();
        Self::from_labels(0, tuple.len(), &labels)
    }

    /// Bends the leftmost upper point down to become the leftmost lower point.
    /// This is a rotation of the boundary circle, so it preserves crossing type.
    pub fn rotate_down(&self) -> Option<Partition> {
        if self.upper == 0 {
            return None;
        }
        let k = self.upper;
        let map = |x: usize| match x {
            1 => k,
            x if x <= k => x - 1,
            x => x,
        };
        Some(Self::canonical(
            k - 1,
            self.lower + 1,
            self.blocks
                .iter()
                .map(|b| b.iter().map(|&x| map(x)).collect())
                .collect(),
        ))
    }

    /// Upper and lower points of each block, as 1-based positions within
    /// their own rows.
    pub fn block_rows(&self) -> Vec<(Vec<usize>, Vec<usize>)> {
        self.blocks
            .iter()
            .map(|b| {
                let up = b.iter().copied().filter(|&x| x <= self.upper).collect();
                let down = b
                    .iter()
                    .copied()
                    .filter(|&x| x > self.upper)
                    .map(|x| x - self.upper)
                    .collect();
                (up, down)
            })
            .collect()
    }

    /// Literal form without the arity suffix, e.g. `{1,2|3}`.
    pub fn blocks_literal(&self) -> String {
        let inner: Vec<String> = self
            .blocks
            .iter()
            .map(|b| {
                b.iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .collect();
        format!("{{{}}}", inner.join("|"))
    }

    /// Parses `{1,2|3}` optionally followed by `(k=0,l=3)`. Without the
    /// suffix all points are taken as lower points.
    pub fn parse(s: &str) -> Result<Self> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = || Error::parse(format!("bad partition literal {s:?}"));
        let open = t.strip_prefix('{').ok_or_else(bad)?;
        let close = open.find('}').ok_or_else(bad)?;
        let body = &open[..close];
        let rest = &open[close + 1..];
        let mut blocks = Vec::new();
        if !body.is_empty() {
            for blk in body.split('|') {
                let b: Vec<usize> = blk
                    .split(',')
                    .map(|x| x.parse::<usize>().map_err(|_| bad()))
                    .collect::<Result<_>>()?;
                blocks.push(b);
            }
        }
        let n: usize = blocks.iter().map(Vec::len).sum();
        let (k, l) = if rest.is_empty() {
            (0, n)
        } else {
            let kv = rest
                .strip_prefix('(')
                .and_then(|r| r.strip_suffix(')'))
                .ok_or_else(bad)?;
            let mut k = None;
            let mut l = None;
            for part in kv.split(',') {
                let (key, v) = part.split_once('=').ok_or_else(bad)?;
                let v: usize = v.parse().map_err(|_| bad())?;
                match key {
                    "k" => k = Some(v),
                    "l" => l = Some(v),
                    _ => return Err(bad()),
                }
            }
            (k.ok_or_else(bad)?, l.ok_or_else(bad)?)
        };
        Self::new(k, l, blocks)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} (k={},l={})",
            self.blocks_literal(),
            self.upper,
            self.lower
        )
    }
}

impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

/// Stack test on a label sequence read around the circle.
fn sequence_is_noncrossing(seq: &[usize], nblocks: usize) -> bool {
    let mut last = vec![0usize; nblocks];
    for (i, &c) in seq.iter().enumerate() {
        last[c] = i;
    }
    let mut open = vec![false; nblocks];
    let mut stack: Vec<usize> = Vec::new();
    for (i, &c) in seq.iter().enumerate() {
        if open[c] {
            if stack.last() != Some(&c) {
                return false;
            }
        } else {
            open[c] = true;
            stack.push(c);
        }
        if i == last[c] {
            stack.pop();
        }
    }
    true
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
    sets: usize,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
            sets: n,
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
            self.sets -= 1;
        }
    }

    pub(crate) fn count(&self) -> usize {
        self.sets
    }
}

/// Lists `P(k,l)` or `NC(k,l)` sorted by block lists.
pub fn enumerate(k: usize, l: usize, mode: Mode) -> Result<Vec<Partition>> {
    let n = k + l;
    caps::check_points("partition enumeration", n)?;
    let mut out = Vec::new();
    match mode {
        Mode::All => {
            let mut rgs = vec![0usize; n];
            all_rec(&mut rgs, 0, 0, &mut |lab| {
                out.push(Partition::from_labels(k, l, lab))
            });
        }
        Mode::NonCrossing => {
            // generate in circle order, then translate positions to points
            let point_of = |pos: usize| if pos < k { pos } else { k + (n - 1 - pos) };
            let mut seq = vec![0usize; n];
            let mut stack = Vec::new();
            nc_rec(&mut seq, 0, 0, &mut stack, &mut |s| {
                let mut lab = vec![0; n];
                for (pos, &c) in s.iter().enumerate() {
                    lab[point_of(pos)] = c;
                }
                out.push(Partition::from_labels(k, l, &lab));
            });
        }
    }
    out.sort_unstable_by(|a, b| a.blocks.cmp(&b.blocks));
    Ok(out)
}

fn all_rec(rgs: &mut Vec<usize>, i: usize, used: usize, emit: &mut impl FnMut(&[usize])) {
    if i == rgs.len() {
        emit(rgs);
        return;
    }
    for c in 0..=used {
        rgs[i] = c;
        all_rec(rgs, i + 1, used.max(c + 1), emit);
    }
}

fn nc_rec(
    seq: &mut Vec<usize>,
    i: usize,
    used: usize,
    stack: &mut Vec<usize>,
    emit: &mut impl FnMut(&[usize]),
) {
    if i == seq.len() {
        emit(seq);
        return;
    }
    // open a new block
    seq[i] = used;
    stack.push(used);
    nc_rec(seq, i + 1, used + 1, stack, emit);
    stack.pop();
    // or extend a block still on the stack, closing everything above it
    for depth in (0..stack.len()).rev() {
        let saved: Vec<usize> = stack.drain(depth + 1..).collect();
        seq[i] = stack[depth];
        nc_rec(seq, i + 1, used, stack, emit);
        stack.extend(saved);
    }
}

pub fn catalan(n: usize) -> u128 {
    let mut c: u128 = 1;
    for i in 0..n as u128 {
        c = c * 2 * (2 * i + 1) / (i + 2);
    }
    c
}
