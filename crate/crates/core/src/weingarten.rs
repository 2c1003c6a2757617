//! Weingarten calculus for `G ≀* S_N^+` with `G` easy of dimension `s`.
//!
//! Fixed vectors of the `k`-th tensor power are indexed by pairs `(p, α)`
//! with `p ∈ NC(k)`, `α ∈ C(k)` and `α ≤ p`; their Gram matrix is
//! `N^{b(p∨q)} s^{b(α∨β)}`.

use std::fmt;

use num_traits::{One, Zero};

use crate::caps;
use crate::linalg::Matrix;
use crate::linmaps::{build_tp, projection_onto_span, unpack};
use crate::partitions::{enumerate, Mode, Partition};
use crate::report::{Report, Tally};
use crate::scalar::pow_u;
use crate::{Error, Integer, Rational, Result};

/// The category of partitions of `G`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Category {
    /// `G = S_s^+`.
    NonCrossing,
    /// `G = S_s`.
    All,
    /// Trivial `G` (`s = 1`): the inner partition is `p` itself.
    Trivial,
}

impl Category {
    pub fn contains(self, p: &Partition) -> bool {
        match self {
            Category::NonCrossing => p.is_noncrossing(),
            Category::All | Category::Trivial => true,
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "nc" | "noncrossing" => Ok(Category::NonCrossing),
            "all" => Ok(Category::All),
            "trivial" => Ok(Category::Trivial),
            _ => Err(Error::parse(format!(
                "unknown category {s:?} (nc, all, trivial)"
            ))),
        }
    }
}

/// `(p, α)`: outer non-crossing partition and inner partition below it.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeingartenIndex {
    pub outer: Partition,
    pub inner: Partition,
}

impl fmt::Display for WeingartenIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}, {})",
            self.outer.blocks_literal(),
            self.inner.blocks_literal()
        )
    }
}

/// All indices for `k` points, ordered by outer then inner partition.
pub fn wg_indices(k: usize, category: Category) -> Result<Vec<WeingartenIndex>> {
    let outers = enumerate(0, k, Mode::NonCrossing)?;
    let inners = match category {
        Category::NonCrossing => outers.clone(),
        Category::All => enumerate(0, k, Mode::All)?,
        Category::Trivial => vec![],
    };
    let mut out = Vec::new();
    for p in &outers {
        if category == Category::Trivial {
            out.push(WeingartenIndex {
                outer: p.clone(),
                inner: p.clone(),
            });
            continue;
        }
        for a in &inners {
            if category.contains(a) && a.refines(p)? {
                out.push(WeingartenIndex {
                    outer: p.clone(),
                    inner: a.clone(),
                });
            }
        }
    }
    Ok(out)
}

#[derive(Clone, Debug)]
pub struct WeingartenTable {
    pub k: usize,
    pub n: u64,
    pub s: u64,
    pub category: Category,
    pub indices: Vec<WeingartenIndex>,
    pub gram: Matrix<Integer>,
    pub inverse: Option<Matrix<Rational>>,
}

/// Gram matrix of the fixed vectors `U^{p,α}`.
pub fn wg_gram(k: usize, n: u64, s: u64, category: Category) -> Result<WeingartenTable> {
    if n == 0 || s == 0 {
        return Err(Error::invalid("dimensions must be positive"));
    }
    if category == Category::Trivial && s != 1 {
        return Err(Error::invalid("the trivial category requires s = 1"));
    }
    let indices = wg_indices(k, category)?;
    let m = indices.len();
    caps::check_entries("Weingarten Gram entries", (m as u128) * (m as u128))?;
    let (nn, ss) = (Integer::from(n), Integer::from(s));
    let mut gram = Matrix::zeros(m, m);
    for a in 0..m {
        for b in a..m {
            let (x, y) = (&indices[a], &indices[b]);
            let mut v = pow_u(&nn, x.outer.join_blocks(&y.outer)? as u32);
            if category != Category::Trivial {
                v *= pow_u(&ss, x.inner.join_blocks(&y.inner)? as u32);
            }
            gram[(a, b)] = v.clone();
            gram[(b, a)] = v;
        }
    }
    Ok(WeingartenTable {
        k,
        n,
        s,
        category,
        indices,
        gram,
        inverse: None,
    })
}

/// Fills in the exact inverse; a singular Gram matrix is reported with a
/// kernel vector.
pub fn wg_invert(mut table: WeingartenTable) -> Result<WeingartenTable> {
    table.inverse = Some(table.gram.inverse_rational()?);
    Ok(table)
}

/// Builds and inverts in one step.
pub fn weingarten(k: usize, n: u64, s: u64, category: Category) -> Result<WeingartenTable> {
    wg_invert(wg_gram(k, n, s, category)?)
}

impl WeingartenTable {
    fn inverse_ref(&self) -> Result<&Matrix<Rational>> {
        self.inverse
            .as_ref()
            .ok_or_else(|| Error::invalid("Weingarten table has not been inverted"))
    }

    /// `h(w_{i_1 j_1, k_1 l_1} … w_{i_r j_r, k_r l_r})` with inner indices
    /// `i, j ∈ 1..=s` and outer indices `k, l ∈ 1..=N`.
    pub fn haar_state(&self, i: &[u64], j: &[u64], k: &[u64], l: &[u64]) -> Result<Rational> {
        let w = self.inverse_ref()?;
        let r = self.k;
        if [i, j, k, l].iter().any(|t| t.len() != r) {
            return Err(Error::size(format!("index tuples must have length {r}")));
        }
        let in_range = |t: &[u64], max: u64| t.iter().all(|&x| (1..=max).contains(&x));
        if !in_range(i, self.s) || !in_range(j, self.s) {
            return Err(Error::invalid(format!(
                "inner indices must lie in 1..={}",
                self.s
            )));
        }
        if !in_range(k, self.n) || !in_range(l, self.n) {
            return Err(Error::invalid(format!(
                "outer indices must lie in 1..={}",
                self.n
            )));
        }
        let (ki, kj) = (Partition::kernel(i), Partition::kernel(j));
        let (kk, kl) = (Partition::kernel(k), Partition::kernel(l));
        let mut rows = Vec::new();
        let mut cols = Vec::new();
        for (a, x) in self.indices.iter().enumerate() {
            if x.outer.refines(&kk)? && x.inner.refines(&ki)? {
                rows.push(a);
            }
            if x.outer.refines(&kl)? && x.inner.refines(&kj)? {
                cols.push(a);
            }
        }
        let mut total = Rational::zero();
        for &a in &rows {
            for &b in &cols {
                total += &w[(a, b)];
            }
        }
        Ok(total)
    }

    /// `δ_{p,q} N^{-b(p)} (⊗_{B ∈ p} G_{G,|B|})^{-1}(α, β)`, the large-`N`
    /// form of the Weingarten matrix.
    pub fn leading_term(&self) -> Result<Matrix<Rational>> {
        let m = self.indices.len();
        let mut lead = Matrix::zeros(m, m);
        let mut start = 0;
        while start < m {
            let p = &self.indices[start].outer;
            let end = start
                + self.indices[start..]
                    .iter()
                    .take_while(|x| &x.outer == p)
                    .count();
            let size = end - start;
            let inner_gram = Matrix::from_fn(size, size, |a, b| {
                if self.category == Category::Trivial {
                    Integer::one()
                } else {
                    let j = self.indices[start + a]
                        .inner
                        .join_blocks(&self.indices[start + b].inner)
                        .expect("same ground set");
                    pow_u(&Integer::from(self.s), j as u32)
                }
            });
            let inv = inner_gram.inverse_rational()?;
            let scale = Rational::new(
                Integer::one(),
                pow_u(&Integer::from(self.n), p.num_blocks() as u32),
            );
            for a in 0..size {
                for b in 0..size {
                    lead[(start + a, start + b)] = &inv[(a, b)] * &scale;
                }
            }
            start = end;
        }
        Ok(lead)
    }

    /// `max (W - L)^2 N^{b(p)+b(q)}`: the squared largest entry of the
    /// error after the diagonal rescaling `Δ^{1/2} (W - L) Δ^{1/2}`.
    pub fn scaled_error_sq(&self) -> Result<Rational> {
        let w = self.inverse_ref()?;
        let lead = self.leading_term()?;
        let nn = Integer::from(self.n);
        let m = self.indices.len();
        let mut worst = Rational::zero();
        for a in 0..m {
            for b in 0..m {
                let d = &w[(a, b)] - &lead[(a, b)];
                let e = self.indices[a].outer.num_blocks() + self.indices[b].outer.num_blocks();
                let v = &d * &d * Rational::from_integer(pow_u(&nn, e as u32));
                if v > worst {
                    worst = v;
                }
            }
        }
        Ok(worst)
    }

    /// Row-major labelled rendering of a matrix over the indices.
    pub fn render<T: fmt::Display>(&self, m: &Matrix<T>) -> String {
        self.render_with(m, T::to_string)
    }

    pub fn render_with<T>(&self, m: &Matrix<T>, f: impl Fn(&T) -> String) -> String {
        let mut out = String::new();
        for (a, x) in self.indices.iter().enumerate() {
            let row: Vec<String> = (0..self.indices.len()).map(|b| f(&m[(a, b)])).collect();
            out.push_str(&format!("{x}: [{}]\n", row.join(", ")));
        }
        out
    }
}

/// Exact Weingarten matrices along a ladder of `N`, compared with their
/// leading term.
#[derive(Clone, Debug)]
pub struct AsymptoticCertificate {
    pub k: usize,
    pub s: u64,
    pub category: Category,
    pub ladder: Vec<u64>,
    /// `E(N)^2` at each rung.
    pub errors_sq: Vec<Rational>,
    /// `N E(N)^2` is nonincreasing along the ladder, so the error shrinks at
    /// least like `N^{-1/2}`.
    pub certified: bool,
}

impl fmt::Display for AsymptoticCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "k={} s={} category={:?}", self.k, self.s, self.category)?;
        for (n, e) in self.ladder.iter().zip(&self.errors_sq) {
            let approx = crate::scalar::rational_to_f64(e).sqrt();
            writeln!(f, "  N={n}: scaled error {approx:.6e}")?;
        }
        write!(
            f,
            "  {}",
            if self.certified {
                "certified"
            } else {
                "not certified"
            }
        )
    }
}

pub fn wg_asymptotic(
    k: usize,
    s: u64,
    category: Category,
    ladder: &[u64],
) -> Result<AsymptoticCertificate> {
    let mut errors_sq = Vec::with_capacity(ladder.len());
    for &n in ladder {
        errors_sq.push(weingarten(k, n, s, category)?.scaled_error_sq()?);
    }
    let weighted: Vec<Rational> = ladder
        .iter()
        .zip(&errors_sq)
        .map(|(&n, e)| e * Rational::from_integer(n.into()))
        .collect();
    let certified = weighted.windows(2).all(|w| w[1] <= w[0]);
    Ok(AsymptoticCertificate {
        k,
        s,
        category,
        ladder: ladder.to_vec(),
        errors_sq,
        certified,
    })
}

/// Standard suite: exact inverses, the projection formula for trivial `G`,
/// the magic unitary marginals, and the asymptotic ladder.
pub fn verify_weingarten(ns: &[u64], max_k: usize) -> Result<Report> {
    let mut report = Report::new(format!("Weingarten calculus, k ≤ {max_k}"));
    let families = [
        (1u64, Category::Trivial),
        (4, Category::NonCrossing),
        (3, Category::All),
    ];

    let mut inv = Tally::default();
    for &n in ns {
        for (s, cat) in families {
            for k in 0..=max_k {
                let t = weingarten(k, n, s, cat)?;
                let prod = t.gram.to_rational().mul(t.inverse_ref()?)?;
                inv.check(prod == Matrix::identity(t.indices.len()), || {
                    format!("N={n} s={s} {cat:?} k={k}")
                });
            }
        }
    }
    inv.into_report(&mut report, "G·W = I");

    let mut proj = Tally::default();
    for &n in ns {
        for r in 0..=max_k {
            let t = weingarten(r, n, 1, Category::Trivial)?;
            let vectors = enumerate(0, r, Mode::NonCrossing)?
                .iter()
                .map(|p| build_tp::<Rational>(p, n)?.to_dense_vector())
                .collect::<Result<Vec<_>>>()?;
            let p = projection_onto_span(&vectors);
            let ones = vec![1u64; r];
            let dim = n.pow(r as u32);
            let tuple =
                |x: u64| -> Vec<u64> { unpack(x, n, r).into_iter().map(|d| d + 1).collect() };
            for a in 0..dim {
                for b in 0..dim {
                    let h = t.haar_state(&ones, &ones, &tuple(a), &tuple(b))?;
                    let expect = &p[(a as usize, b as usize)];
                    proj.check(h == *expect, || {
                        format!("N={n} k={:?} l={:?}: {h} vs {expect}", tuple(a), tuple(b))
                    });
                }
            }
        }
    }
    proj.into_report(&mut report, "h(u_kl) = ⟨P e_l, e_k⟩ (s = 1)");

    let mut marg = Tally::default();
    for &n in ns {
        for (s, cat) in families {
            let (t1, t2) = (weingarten(1, n, s, cat)?, weingarten(2, n, s, cat)?);
            for i in 1..=s {
                for k in 1..=n {
                    let x = t1.haar_state(&[1], &[s], &[1], &[n])?;
                    let mut row = Rational::zero();
                    for j in 1..=s {
                        for l in 1..=n {
                            row += t2.haar_state(&[i, 1], &[j, s], &[k, 1], &[l, n])?;
                        }
                    }
                    marg.check(row == x, || {
                        format!("N={n} s={s} i={i} k={k}: {row} vs {x}")
                    });
                }
            }
        }
    }
    marg.into_report(&mut report, "Σ_{j,l} h(w_{ij,kl} x) = h(x)");

    let mut asym = Tally::default();
    for (s, cat) in families {
        for k in 1..=max_k {
            let cert = wg_asymptotic(k, s, cat, &[16, 64, 256])?;
            asym.check(cert.certified, || cert.to_string());
        }
    }
    asym.into_report(&mut report, "N·E(N)^2 nonincreasing on N = 16, 64, 256");
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linmaps::{gram_nc, GramMethod};
    use crate::scalar::{rat, rint};

    #[test]
    fn index_sets() {
        assert_eq!(wg_indices(1, Category::NonCrossing).unwrap().len(), 1);
        let two = wg_indices(2, Category::NonCrossing).unwrap();
        assert_eq!(two.len(), 3);
        assert!(two.iter().all(|x| x.inner.refines(&x.outer).unwrap()));
        assert_eq!(wg_indices(3, Category::NonCrossing).unwrap().len(), 12);
        assert_eq!(
            wg_indices(4, Category::All).unwrap().len(),
            15 + 4 * 5 + 2 * 4 + 6 * 2 + 1
        );
        assert_eq!(wg_indices(3, Category::Trivial).unwrap().len(), 5);
    }

    #[test]
    fn gram_examples() {
        let t = wg_gram(1, 5, 3, Category::NonCrossing).unwrap();
        assert_eq!(t.gram[(0, 0)], Integer::from(15));
        let t = wg_gram(3, 5, 4, Category::NonCrossing).unwrap();
        for (a, x) in t.indices.iter().enumerate() {
            let d = pow_u(&Integer::from(5), x.outer.num_blocks() as u32)
                * pow_u(&Integer::from(4), x.inner.num_blocks() as u32);
            assert_eq!(t.gram[(a, a)], d);
        }
        for k in 0..=4 {
            let t = wg_gram(k, 6, 1, Category::Trivial).unwrap();
            let nc: Vec<_> = t.indices.iter().map(|x| x.outer.clone()).collect();
            assert_eq!(
                t.gram,
                gram_nc(&nc, 6, GramMethod::JoinFormula).unwrap().matrix
            );
        }
        assert!(wg_gram(2, 4, 2, Category::Trivial).is_err());
    }

    #[test]
    fn inverse_examples() {
        let t = weingarten(1, 4, 1, Category::Trivial).unwrap();
        assert_eq!(t.inverse.as_ref().unwrap()[(0, 0)], rat(1, 4));
        for (n, s, cat) in [
            (4, 1, Category::Trivial),
            (5, 4, Category::NonCrossing),
            (4, 3, Category::All),
        ] {
            for k in 0..=3 {
                let t = weingarten(k, n, s, cat).unwrap();
                let prod = t
                    .gram
                    .to_rational()
                    .mul(t.inverse.as_ref().unwrap())
                    .unwrap();
                assert_eq!(prod, Matrix::identity(t.indices.len()));
            }
        }
        // s = 2 cannot separate the five partitions of three points
        match weingarten(3, 4, 2, Category::All) {
            Err(Error::Singular { kernel }) => assert!(!kernel.is_empty()),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn positive_semidefinite() {
        for (n, s, cat) in [
            (4, 1, Category::Trivial),
            (4, 2, Category::NonCrossing),
            (4, 2, Category::All),
        ] {
            for k in 0..=3 {
                let t = wg_gram(k, n, s, cat).unwrap();
                assert!(t
                    .gram
                    .leading_minors()
                    .unwrap()
                    .iter()
                    .all(|d| *d >= Integer::zero()));
            }
        }
    }

    #[test]
    fn haar_examples() {
        let t = weingarten(1, 5, 1, Category::Trivial).unwrap();
        assert_eq!(t.haar_state(&[1], &[1], &[2], &[3]).unwrap(), rat(1, 5));
        let t = weingarten(0, 5, 1, Category::Trivial).unwrap();
        assert_eq!(t.haar_state(&[], &[], &[], &[]).unwrap(), rint(1));
        let t = weingarten(1, 5, 3, Category::NonCrossing).unwrap();
        assert_eq!(t.haar_state(&[2], &[1], &[2], &[3]).unwrap(), rat(1, 15));
        assert!(t.haar_state(&[4], &[1], &[2], &[3]).is_err());
        assert!(t.haar_state(&[1], &[1], &[6], &[3]).is_err());
        assert!(t.haar_state(&[1, 1], &[1], &[2], &[3]).is_err());
        assert!(wg_gram(1, 5, 1, Category::Trivial)
            .unwrap()
            .haar_state(&[1], &[1], &[1], &[1])
            .is_err());
    }

    #[test]
    fn verification_suite() {
        let report = verify_weingarten(&[4], 2).unwrap();
        assert!(report.passed(), "{report}");
    }

    #[test]
    fn leading_term_at_k1_is_exact() {
        let t = weingarten(1, 7, 3, Category::NonCrossing).unwrap();
        assert_eq!(t.leading_term().unwrap(), *t.inverse.as_ref().unwrap());
        assert!(t.scaled_error_sq().unwrap().is_zero());
        // two points, trivial G: N E^2 = N^2 / (N-1)^2
        let t = weingarten(2, 16, 1, Category::Trivial).unwrap();
        assert_eq!(t.scaled_error_sq().unwrap(), rat(16, 225));
    }
}
