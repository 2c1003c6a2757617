//! Partition maps `T_p : (C^N)^{⊗k} → (C^N)^{⊗l}` as exact sparse maps.
//!
//! `T_p(e_{i_1} ⊗ … ⊗ e_{i_k}) = Σ_j δ_p(i, j) e_{j_1} ⊗ … ⊗ e_{j_l}` where
//! `δ_p(i, j) = 1` iff the indices are constant on every block of `p`, the
//! upper points carrying `i` and the lower points carrying `j`.
//!
//! Multi-indices are packed into `u64` in base `N`, first factor most
//! significant, with 0-based digits.

use std::collections::HashMap;
use std::fmt;

use num_traits::Zero;

use crate::linalg::Matrix;
use crate::partitions::{enumerate, Mode, Partition};
use crate::report::{Report, Tally};
use crate::scalar::{pow_u, Scalar};
use crate::{caps, Error, Integer, Result};

#[derive(Clone, Debug, PartialEq)]
pub struct SparseMap<T> {
    in_arity: usize,
    out_arity: usize,
    dim: u64,
    /// `(row, col)` with `row` the output multi-index.
    entries: HashMap<(u64, u64), T>,
}

fn checked_pow(n: u64, e: usize) -> Result<u64> {
    n.checked_pow(e as u32).ok_or(Error::CapExceeded {
        what: "multi-index range",
        requested: (n as u128).saturating_pow(e as u32),
        cap: u64::MAX as u128,
    })
}

/// Digits of a packed multi-index, most significant first.
pub fn unpack(mut idx: u64, n: u64, len: usize) -> Vec<u64> {
    let mut d = vec![0; len];
    for slot in d.iter_mut().rev() {
        *slot = idx % n;
        idx /= n;
    }
    d
}

pub fn pack(digits: &[u64], n: u64) -> u64 {
    digits.iter().fold(0, |acc, &d| acc * n + d)
}

impl<T: Scalar> SparseMap<T> {
    pub fn zero(in_arity: usize, out_arity: usize, dim: u64) -> Self {
        SparseMap {
            in_arity,
            out_arity,
            dim,
            entries: HashMap::new(),
        }
    }

    pub fn identity(k: usize, dim: u64) -> Result<Self> {
        let size = checked_pow(dim, k)?;
        caps::check_entries("identity map", size as u128)?;
        let mut m = Self::zero(k, k, dim);
        for i in 0..size {
            m.entries.insert((i, i), T::one());
        }
        Ok(m)
    }

    pub fn in_arity(&self) -> usize {
        self.in_arity
    }

    pub fn out_arity(&self) -> usize {
        self.out_arity
    }

    pub fn dim(&self) -> u64 {
        self.dim
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, row: u64, col: u64) -> T {
        self.entries
            .get(&(row, col))
            .cloned()
            .unwrap_or_else(T::zero)
    }

    pub fn entries(&self) -> impl Iterator<Item = (&(u64, u64), &T)> {
        self.entries.iter()
    }

    /// Nonzero entries sorted by `(row, col)`.
    pub fn sorted_entries(&self) -> Vec<((u64, u64), T)> {
        let mut v: Vec<_> = self.entries.iter().map(|(k, x)| (*k, x.clone())).collect();
        v.sort_unstable_by_key(|e| e.0);
        v
    }

    fn add_entry(&mut self, key: (u64, u64), v: T) {
        let cell = self.entries.entry(key).or_insert_with(T::zero);
        *cell = cell.clone() + v;
        if cell.is_zero() {
            self.entries.remove(&key);
        }
    }

    pub fn scale(&self, s: &T) -> Self {
        if s.is_zero() {
            return Self::zero(self.in_arity, self.out_arity, self.dim);
        }
        SparseMap {
            entries: self
                .entries
                .iter()
                .map(|(k, v)| (*k, v.clone() * s.clone()))
                .collect(),
            ..self.clone()
        }
    }

    /// Transpose; all maps here are real so this is the adjoint.
    pub fn adjoint(&self) -> Self {
        SparseMap {
            in_arity: self.out_arity,
            out_arity: self.in_arity,
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .map(|(&(r, c), v)| ((c, r), v.clone()))
                .collect(),
        }
    }

    pub fn tensor(&self, o: &Self) -> Result<Self> {
        if self.dim != o.dim {
            return Err(Error::size("tensor of maps on different dimensions"));
        }
        caps::check_entries("tensor product", self.nnz() as u128 * o.nnz() as u128)?;
        let rs = checked_pow(self.dim, o.out_arity)?;
        let cs = checked_pow(self.dim, o.in_arity)?;
        checked_pow(self.dim, self.out_arity + o.out_arity)?;
        checked_pow(self.dim, self.in_arity + o.in_arity)?;
        let mut m = Self::zero(
            self.in_arity + o.in_arity,
            self.out_arity + o.out_arity,
            self.dim,
        );
        for (&(r1, c1), v1) in &self.entries {
            for (&(r2, c2), v2) in &o.entries {
                m.entries
                    .insert((r1 * rs + r2, c1 * cs + c2), v1.clone() * v2.clone());
            }
        }
        Ok(m)
    }

    /// `self ∘ o`, applying `o` first.
    pub fn compose(&self, o: &Self) -> Result<Self> {
        if self.dim != o.dim || self.in_arity != o.out_arity {
            return Err(Error::size(format!(
                "cannot compose map {}→{} after {}→{}",
                self.in_arity, self.out_arity, o.in_arity, o.out_arity
            )));
        }
        let by_col = self.column_index();
        self.compose_indexed(&by_col, o)
    }

    /// Entries grouped by column, reusable across many products.
    pub fn column_index(&self) -> HashMap<u64, Vec<(u64, T)>> {
        let mut by_col: HashMap<u64, Vec<(u64, T)>> = HashMap::new();
        for (&(r, c), v) in &self.entries {
            by_col.entry(c).or_default().push((r, v.clone()));
        }
        by_col
    }

    fn compose_indexed(&self, by_col: &HashMap<u64, Vec<(u64, T)>>, o: &Self) -> Result<Self> {
        let mut m = Self::zero(o.in_arity, self.out_arity, self.dim);
        for (&(mid, c), v) in &o.entries {
            if let Some(col) = by_col.get(&mid) {
                for (r, w) in col {
                    m.add_entry((*r, c), w.clone() * v.clone());
                }
            }
        }
        caps::check_entries("composition", m.nnz() as u128)?;
        Ok(m)
    }

    /// `Tr(self* o)`, the Hilbert-Schmidt pairing.
    pub fn pairing(&self, o: &Self) -> T {
        let (small, big) = if self.nnz() <= o.nnz() {
            (self, o)
        } else {
            (o, self)
        };
        small
            .entries
            .iter()
            .filter_map(|(k, v)| big.entries.get(k).map(|w| v.clone() * w.clone()))
            .fold(T::zero(), |a, b| a + b)
    }

    pub fn trace(&self) -> Result<T> {
        if self.in_arity != self.out_arity {
            return Err(Error::size("trace of a non-square map"));
        }
        Ok(self
            .entries
            .iter()
            .filter(|((r, c), _)| r == c)
            .fold(T::zero(), |a, (_, v)| a + v.clone()))
    }

    pub fn same_shape(&self, o: &Self) -> bool {
        self.in_arity == o.in_arity && self.out_arity == o.out_arity && self.dim == o.dim
    }

    /// Dense column vector for maps out of `C`.
    pub fn to_dense_vector(&self) -> Result<Vec<T>> {
        if self.in_arity != 0 {
            return Err(Error::size("not a vector"));
        }
        let n = checked_pow(self.dim, self.out_arity)?;
        caps::check_entries("dense vector", n as u128)?;
        let mut v = vec![T::zero(); n as usize];
        for (&(r, _), x) in &self.entries {
            v[r as usize] = x.clone();
        }
        Ok(v)
    }
}

impl<T: Scalar + fmt::Display> fmt::Display for SparseMap<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "map {}→{} on C^{} ({} nonzero)",
            self.in_arity,
            self.out_arity,
            self.dim,
            self.nnz()
        )?;
        for ((r, c), v) in self.sorted_entries() {
            let fmt_idx = |x: u64, len: usize| {
                unpack(x, self.dim, len)
                    .iter()
                    .map(|d| (d + 1).to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            };
            writeln!(
                f,
                "  ({}) <- ({}): {}",
                fmt_idx(r, self.out_arity),
                fmt_idx(c, self.in_arity),
                v
            )?;
        }
        Ok(())
    }
}

/// `T_p` on `C^N`.
pub fn build_tp<T: Scalar>(p: &Partition, n: u64) -> Result<SparseMap<T>> {
    if n == 0 {
        return Err(Error::invalid("N must be positive"));
    }
    let (k, l) = (p.upper(), p.lower());
    checked_pow(n, k.max(l))?;
    let nb = p.num_blocks();
    let count = checked_pow(n, nb)?;
    caps::check_entries("T_p entries", count as u128)?;
    let labels = p.labels();
    let mut m = SparseMap::zero(k, l, n);
    m.entries.reserve(count as usize);
    let mut vals = vec![0u64; nb];
    for _ in 0..count {
        let col = (0..k).fold(0, |a, x| a * n + vals[labels[x]]);
        let row = (k..k + l).fold(0, |a, x| a * n + vals[labels[x]]);
        m.entries.insert((row, col), T::one());
        for d in vals.iter_mut().rev() {
            *d += 1;
            if *d < n {
                break;
            }
            *d = 0;
        }
    }
    Ok(m)
}

/// Every non-crossing partition with at most `max_points` points, grouped by
/// `(upper, lower)`.
fn nc_up_to(max_points: usize) -> Result<Vec<Vec<Vec<Partition>>>> {
    let mut by_shape = vec![vec![Vec::new(); max_points + 1]; max_points + 1];
    for k in 0..=max_points {
        for l in 0..=max_points - k {
            by_shape[k][l] = enumerate(k, l, Mode::NonCrossing)?;
        }
    }
    Ok(by_shape)
}

/// Exhaustively checks `T_{p⊗q} = T_p ⊗ T_q`, `T_{p∘q} = N^{-b(p,q)} T_p ∘ T_q`
/// and `T_{p*} = T_p*` over non-crossing partitions.
///
/// Tensor pairs have at most `max_points` points in total. A composable pair
/// `NC(m,l) ∘ NC(k,m)` qualifies when both factors and the result each have
/// at most `max_points` points.
pub fn verify_category_relations(n: u64, max_points: usize) -> Result<Report> {
    let shapes = nc_up_to(max_points)?;
    let mut maps: HashMap<&Partition, SparseMap<i64>> = HashMap::new();
    for row in &shapes {
        for list in row {
            for p in list {
                maps.insert(p, build_tp(p, n)?);
            }
        }
    }
    let mut report = Report::new(format!(
        "category relations, N={n}, up to {max_points} points"
    ));

    let mut t = Tally::default();
    for (k1, row1) in shapes.iter().enumerate() {
        for (l1, ps) in row1.iter().enumerate() {
            for (k2, row2) in shapes.iter().enumerate() {
                for (l2, qs) in row2.iter().enumerate() {
                    if k1 + l1 + k2 + l2 > max_points {
                        continue;
                    }
                    for p in ps {
                        for q in qs {
                            let lhs = build_tp::<i64>(&p.tensor(q), n)?;
                            let rhs = maps[p].tensor(&maps[q])?;
                            t.check(lhs == rhs, || format!("p={p} q={q}"));
                        }
                    }
                }
            }
        }
    }
    t.into_report(&mut report, "T(p⊗q) = T(p)⊗T(q)");

    let mut t = Tally::default();
    for m in 0..=max_points {
        for l in 0..=max_points - m {
            for p in &shapes[m][l] {
                let tp = &maps[p];
                let by_col = tp.column_index();
                for k in 0..=max_points - m.max(l) {
                    for q in &shapes[k][m] {
                        let c = p.compose(q)?;
                        let prod = tp.compose_indexed(&by_col, &maps[q])?;
                        let nb = pow_u(&(n as i64), c.closed_blocks as u32);
                        let expect = maps
                            .get(&c.result)
                            .cloned()
                            .map_or_else(|| build_tp::<i64>(&c.result, n), Ok)?
                            .scale(&nb);
                        t.check(prod == expect, || {
                            format!("p={p} q={q} b={}", c.closed_blocks)
                        });
                    }
                }
            }
        }
    }
    t.into_report(&mut report, "T(p∘q) = N^-b(p,q) T(p)∘T(q)");

    let mut t = Tally::default();
    for (p, tp) in &maps {
        let lhs = build_tp::<i64>(&p.involute(), n)?;
        t.check(lhs == tp.adjoint(), || format!("p={p}"));
    }
    t.into_report(&mut report, "T(p*) = T(p)*");
    Ok(report)
}

/// The nested pairing `{i, 2k+1-i}` in `NC(0, 2k)`.
pub fn nested_pairing(k: usize) -> Partition {
    Partition::new(0, 2 * k, (1..=k).map(|i| vec![i, 2 * k + 1 - i]).collect())
        .expect("valid pairing")
}

/// Checks `(T_r* ⊗ id)(id ⊗ T_r) = id = (id ⊗ T_r*)(T_r ⊗ id)` for the
/// nested pairing `r`.
pub fn verify_conjugate_equations(k: usize, n: u64) -> Result<Report> {
    checked_pow(n, 3 * k)?;
    let r = build_tp::<i64>(&nested_pairing(k), n)?;
    let rs = r.adjoint();
    let id = SparseMap::<i64>::identity(k, n)?;
    let left = rs.tensor(&id)?.compose(&id.tensor(&r)?)?;
    let right = id.tensor(&rs)?.compose(&r.tensor(&id)?)?;
    let mut report = Report::new(format!("conjugate equations, k={k}, N={n}"));
    let witness = |m: &SparseMap<i64>| {
        m.sorted_entries()
            .into_iter()
            .find(|((a, b), v)| (a == b) != (*v == 1) || *v != 1)
            .map_or_else(|| "missing diagonal entry".into(), |e| format!("{e:?}"))
    };
    report.record(
        "(T_r*⊗id)∘(id⊗T_r) = id",
        1,
        (left != id).then(|| witness(&left)),
    );
    report.record(
        "(id⊗T_r*)∘(T_r⊗id) = id",
        1,
        (right != id).then(|| witness(&right)),
    );
    Ok(report)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GramMethod {
    JoinFormula,
    BruteForce,
}

/// Labeled symmetric matrix of pairings.
#[derive(Clone, Debug, PartialEq)]
pub struct GramMatrix<T> {
    pub labels: Vec<String>,
    pub matrix: Matrix<T>,
}

impl<T: Scalar + fmt::Display> fmt::Display for GramMatrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, lab) in self.labels.iter().enumerate() {
            let row: Vec<String> = self.matrix.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "{lab}: [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Gram matrix `Tr(T_p* T_q) = N^{b(p∨q)}` of a family on one ground set.
pub fn gram_nc(
    partitions: &[Partition],
    n: u64,
    method: GramMethod,
) -> Result<GramMatrix<Integer>> {
    if let Some(first) = partitions.first() {
        if let Some(bad) = partitions
            .iter()
            .find(|p| (p.upper(), p.lower()) != (first.upper(), first.lower()))
        {
            return Err(Error::size(format!(
                "{bad} is not on the ground set of {first}"
            )));
        }
    }
    let m = partitions.len();
    let nn = Integer::from(n);
    let matrix = match method {
        GramMethod::JoinFormula => {
            let mut g = Matrix::zeros(m, m);
            for i in 0..m {
                for j in i..m {
                    let b = partitions[i].join_blocks(&partitions[j])?;
                    let v = pow_u(&nn, b as u32);
                    g[(i, j)] = v.clone();
                    g[(j, i)] = v;
                }
            }
            g
        }
        GramMethod::BruteForce => {
            let labels: Vec<Vec<usize>> = partitions.iter().map(Partition::labels).collect();
            let mut g = Matrix::zeros(m, m);
            for i in 0..m {
                let tp = build_tp::<i64>(&partitions[i], n)?;
                let pts = partitions[i].points();
                let k = partitions[i].upper();
                for j in i..m {
                    // walk only the multi-indices constant on blocks of p_i
                    let lab = &labels[j];
                    let mut count: i64 = 0;
                    for &(row, col) in tp.entries.keys() {
                        let mut digits = unpack(col, n, k);
                        digits.extend(unpack(row, n, pts - k));
                        let mut val = vec![u64::MAX; pts];
                        let ok = (0..pts).all(|x| {
                            let slot = &mut val[lab[x]];
                            if *slot == u64::MAX {
                                *slot = digits[x];
                                true
                            } else {
                                *slot == digits[x]
                            }
                        });
                        count += ok as i64;
                    }
                    g[(i, j)] = Integer::from(count);
                    g[(j, i)] = Integer::from(count);
                }
            }
            g
        }
    };
    Ok(GramMatrix {
        labels: partitions.iter().map(|p| p.blocks_literal()).collect(),
        matrix,
    })
}

/// Multiplication table of a finite group on elements `0..order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    names: Vec<String>,
    table: Vec<Vec<usize>>,
    identity: usize,
}

impl FiniteGroup {
    /// Validates closure, associativity, identity and inverses.
    pub fn from_table(names: Vec<String>, table: Vec<Vec<usize>>) -> Result<Self> {
        let n = names.len();
        if n == 0
            || table.len() != n
            || table
                .iter()
                .any(|r| r.len() != n || r.iter().any(|&x| x >= n))
        {
            return Err(Error::invalid("multiplication table is not n×n over 0..n"));
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| table[e][x] == x && table[x][e] == x))
            .ok_or_else(|| Error::invalid("no identity element"))?;
        for a in 0..n {
            if !(0..n).any(|b| table[a][b] == identity) {
                return Err(Error::invalid(format!("{} has no inverse", names[a])));
            }
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(Error::invalid("multiplication is not associative"));
                    }
                }
            }
        }
        Ok(FiniteGroup {
            names,
            table,
            identity,
        })
    }

    /// `Z/s` with elements `1, g, g^2, …`.
    pub fn cyclic(s: usize) -> Self {
        let names = (0..s)
            .map(|i| match i {
                0 => "1".to_string(),
                1 => "g".to_string(),
                _ => format!("g^{i}"),
            })
            .collect();
        let table = (0..s)
            .map(|a| (0..s).map(|b| (a + b) % s).collect())
            .collect();
        FiniteGroup {
            names,
            table,
            identity: 0,
        }
    }

    pub fn order(&self) -> usize {
        self.names.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn name(&self, a: usize) -> &str {
        &self.names[a]
    }

    pub fn element(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|x| x == name)
    }

    pub fn product(&self, elems: impl IntoIterator<Item = usize>) -> usize {
        elems.into_iter().fold(self.identity, |a, b| self.mul(a, b))
    }
}

/// Admissibility in the group-dual case: in every block the ordered product
/// of the upper decorations equals that of the lower decorations.
pub fn group_dual_admissible(
    p: &Partition,
    group: &FiniteGroup,
    up: &[usize],
    down: &[usize],
) -> Result<bool> {
    if up.len() != p.upper() || down.len() != p.lower() {
        return Err(Error::size("decoration lengths do not match the partition"));
    }
    Ok(p.block_rows().iter().all(|(u, d)| {
        group.product(u.iter().map(|&x| up[x - 1])) == group.product(d.iter().map(|&x| down[x - 1]))
    }))
}

/// `T_p` as an intertwiner between tensor products of `r(g)`'s when `p` is
/// admissible for the decorations, `None` otherwise.
pub fn build_group_dual_tp<T: Scalar>(
    p: &Partition,
    n: u64,
    group: &FiniteGroup,
    up: &[usize],
    down: &[usize],
) -> Result<Option<SparseMap<T>>> {
    if group_dual_admissible(p, group, up, down)? {
        build_tp(p, n).map(Some)
    } else {
        Ok(None)
    }
}

/// Orthogonal projection onto the span of the given vectors, by exact
/// Gram-Schmidt without normalization: `P = Σ v vᵀ / ⟨v, v⟩`.
pub fn projection_onto_span(vectors: &[Vec<crate::Rational>]) -> Matrix<crate::Rational> {
    use crate::Rational;
    let dim = vectors.first().map_or(0, Vec::len);
    let dot = |a: &[Rational], b: &[Rational]| {
        a.iter()
            .zip(b)
            .fold(Rational::zero(), |acc, (x, y)| acc + x * y)
    };
    let mut basis: Vec<(Vec<Rational>, Rational)> = Vec::new();
    for v in vectors {
        let mut w = v.clone();
        for (b, bb) in &basis {
            let c = dot(&w, b) / bb;
            for (wi, bi) in w.iter_mut().zip(b) {
                *wi -= &c * bi;
            }
        }
        let ww = dot(&w, &w);
        if !ww.is_zero() {
            basis.push((w, ww));
        }
    }
    let mut proj = Matrix::zeros(dim, dim);
    for (b, bb) in &basis {
        for i in 0..dim {
            if b[i].is_zero() {
                continue;
            }
            let bi = &b[i] / bb;
            for j in 0..dim {
                if !b[j].is_zero() {
                    proj[(i, j)] += &bi * &b[j];
                }
            }
        }
    }
    proj
}
