//! Temperley-Lieb diagrams and the collapsing map onto non-crossing
//! partitions.
//!
//! A diagram is a non-crossing perfect pairing of `a` upper and `b` lower
//! points, numbered like partitions. Closed loops are worth `√N`; the
//! isomorphism `φ : TL(2k,2l) → NC(k,l)` carries coefficients that are
//! quarter powers of `N`, so coefficients are kept as [`NPow`] and only
//! turned into [`QNum`] on demand.

use std::fmt;

use crate::exactnum::{NPow, QNum};
use crate::partitions::Partition;
use crate::report::{Report, Tally};
use crate::{caps, Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TLDiagram(Partition);

/// `coeff · value`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Scaled<T> {
    pub coeff: NPow,
    pub value: T,
}

pub type ScaledDiagram = Scaled<TLDiagram>;
pub type ScaledPartition = Scaled<Partition>;

impl<T> Scaled<T> {
    pub fn new(coeff: NPow, value: T) -> Self {
        Scaled { coeff, value }
    }

    pub fn coeff_qnum(&self, n: u64) -> Option<QNum> {
        self.coeff.to_qnum(n)
    }
}

impl<T: fmt::Display> fmt::Display for Scaled<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} * {}", self.coeff, self.value)
    }
}

impl TLDiagram {
    pub fn from_partition(p: Partition) -> Result<Self> {
        if p.blocks().iter().any(|b| b.len() != 2) {
            return Err(Error::invalid(format!("{p} is not a pairing")));
        }
        if !p.is_noncrossing() {
            return Err(Error::invalid(format!("{p} is crossing")));
        }
        Ok(TLDiagram(p))
    }

    pub fn new(upper: usize, lower: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let blocks = pairs.iter().map(|&(a, b)| vec![a, b]).collect();
        Self::from_partition(Partition::new(upper, lower, blocks)?)
    }

    pub fn identity(a: usize) -> Self {
        TLDiagram(Partition::identity(a))
    }

    pub fn empty() -> Self {
        TLDiagram(Partition::empty())
    }

    /// Pairing of two lower points, `TL(0,2)`.
    pub fn cap() -> Self {
        TLDiagram(Partition::cap())
    }

    /// Pairing of two upper points, `TL(2,0)`.
    pub fn cup() -> Self {
        TLDiagram(Partition::cup())
    }

    pub fn upper(&self) -> usize {
        self.0.upper()
    }

    pub fn lower(&self) -> usize {
        self.0.lower()
    }

    pub fn as_partition(&self) -> &Partition {
        &self.0
    }

    pub fn pairs(&self) -> Vec<(usize, usize)> {
        self.0.blocks().iter().map(|b| (b[0], b[1])).collect()
    }

    pub fn tensor(&self, o: &Self) -> Self {
        TLDiagram(self.0.tensor(&o.0))
    }

    pub fn involute(&self) -> Self {
        TLDiagram(self.0.involute())
    }

    /// `self ∘ o` (`o` on top) and the number of loops removed.
    pub fn compose(&self, o: &Self) -> Result<(Self, usize)> {
        let r = self.0.compose(&o.0)?;
        Ok((TLDiagram(r.result), r.closed_blocks))
    }

    pub fn compose_scaled(&self, o: &Self) -> Result<ScaledDiagram> {
        let (d, loops) = self.compose(o)?;
        Ok(Scaled::new(NPow::sqrt_n_pow(loops as i64), d))
    }

    fn require_square(&self) -> Result<usize> {
        if self.upper() != self.lower() {
            return Err(Error::size(format!(
                "diagram TL({},{}) is not square",
                self.upper(),
                self.lower()
            )));
        }
        Ok(self.upper())
    }

    /// `(id^{k-1} ⊗ ∪) ∘ (D ⊗ id) ∘ (id^{k-1} ⊗ ∩)`.
    pub fn partial_close(&self) -> Result<ScaledDiagram> {
        let k = self.require_square()?;
        if k == 0 {
            return Err(Error::invalid("nothing to close in TL(0,0)"));
        }
        let open = TLDiagram::identity(k - 1).tensor(&TLDiagram::cap());
        let close = TLDiagram::identity(k - 1).tensor(&TLDiagram::cup());
        let (mid, l1) = self.tensor(&TLDiagram::identity(1)).compose(&open)?;
        let (out, l2) = close.compose(&mid)?;
        Ok(Scaled::new(NPow::sqrt_n_pow((l1 + l2) as i64), out))
    }

    /// Closed curves after closing all strands, by iterated partial closure.
    pub fn closed_curves(&self) -> Result<usize> {
        self.require_square()?;
        let mut d = self.clone();
        let mut e4 = 0;
        while d.upper() > 0 {
            let s = d.partial_close()?;
            e4 += s.coeff.exp4;
            d = s.value;
        }
        Ok((e4 / 2) as usize)
    }

    /// Closed curves when upper point `i` is joined to lower point `i`
    /// directly in the picture.
    pub fn closed_curves_pictorial(&self) -> Result<usize> {
        let k = self.require_square()?;
        self.0.join_blocks(&Partition::identity(k))
    }

    /// `τ(D) = (√N)^{C_D}`.
    pub fn markov_trace(&self, n: u64) -> Result<QNum> {
        Ok(QNum::sqrt_n_pow(self.closed_curves()? as u32, n))
    }

    fn require_even(&self) -> Result<()> {
        if self.upper() % 2 != 0 || self.lower() % 2 != 0 {
            return Err(Error::invalid(format!(
                "TL({},{}) has odd arity",
                self.upper(),
                self.lower()
            )));
        }
        Ok(())
    }

    /// Identifies points `2i-1, 2i` on each row.
    pub fn collapse(&self) -> Result<Partition> {
        self.require_even()?;
        let (a, b) = (self.upper(), self.lower());
        let (k, l) = (a / 2, b / 2);
        let fold = |x: usize| {
            if x <= a {
                (x - 1) / 2
            } else {
                k + (x - a - 1) / 2
            }
        };
        let mut uf = crate::partitions::UnionFind::new(k + l);
        for (x, y) in self.pairs() {
            uf.union(fold(x), fold(y));
        }
        let labels: Vec<usize> = (0..k + l).map(|i| uf.find(i)).collect();
        Ok(Partition::from_labels(k, l, &labels))
    }

    /// Black regions under the alternating shading with the leftmost region
    /// white. Boundary arcs alternate in color around the box; a region is
    /// identified by the set of chords enclosing its arcs, and its color is
    /// the parity of that set's size.
    pub fn black_regions(&self) -> usize {
        let total = self.upper() + self.lower();
        let pos = |x: usize| {
            if x <= self.upper() {
                x - 1
            } else {
                self.upper() + (total - x)
            }
        };
        let chords: Vec<(usize, usize)> = self
            .pairs()
            .into_iter()
            .map(|(x, y)| {
                let (a, b) = (pos(x), pos(y));
                (a.min(b), a.max(b))
            })
            .collect();
        // arc i runs from circle position i to i+1; the wrap-around arc
        // touches the left side of the box
        let mut regions: Vec<Vec<usize>> = (0..total.saturating_sub(1))
            .map(|i| {
                (0..chords.len())
                    .filter(|&c| chords[c].0 <= i && i < chords[c].1)
                    .collect::<Vec<_>>()
            })
            .filter(|enc| enc.len() % 2 == 1)
            .collect();
        regions.sort();
        regions.dedup();
        regions.len()
    }

    /// `φ(D) = N^{(k+l)/4 - br(D)/2} c(D)` for `D ∈ TL(2k,2l)`.
    pub fn phi(&self) -> Result<ScaledPartition> {
        let c = self.collapse()?;
        let kl = (c.upper() + c.lower()) as i64;
        Ok(Scaled::new(
            NPow {
                exp4: kl - 2 * self.black_regions() as i64,
            },
            c,
        ))
    }

    /// Literal `TL(a,b): (x,y)(z,w)…`.
    pub fn parse(s: &str) -> Result<Self> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = || Error::parse(format!("bad diagram literal {s:?}"));
        let rest = t.strip_prefix("TL(").ok_or_else(bad)?;
        let (dims, pairs) = rest.split_once("):").ok_or_else(bad)?;
        let (a, b) = dims.split_once(',').ok_or_else(bad)?;
        let a: usize = a.parse().map_err(|_| bad())?;
        let b: usize = b.parse().map_err(|_| bad())?;
        let mut out = Vec::new();
        for chunk in pairs.split(')').filter(|c| !c.is_empty()) {
            let inner = chunk.strip_prefix('(').ok_or_else(bad)?;
            let (x, y) = inner.split_once(',').ok_or_else(bad)?;
            out.push((x.parse().map_err(|_| bad())?, y.parse().map_err(|_| bad())?));
        }
        Self::new(a, b, &out)
    }
}

impl fmt::Display for TLDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TL({},{}):", self.upper(), self.lower())?;
        if !self.pairs().is_empty() {
            write!(f, " ")?;
        }
        for (x, y) in self.pairs() {
            write!(f, "({x},{y})")?;
        }
        Ok(())
    }
}

impl std::str::FromStr for TLDiagram {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

/// Boundary lines drawn around the blocks of a non-crossing partition.
pub fn fatten(p: &Partition) -> Result<TLDiagram> {
    if !p.is_noncrossing() {
        return Err(Error::invalid(format!("{p} is crossing")));
    }
    let (k, l) = (p.upper(), p.lower());
    let n = k + l;
    let cpos = |x: usize| if x <= k { x - 1 } else { k + (n - x) };
    // circle position c of a fat point splits into 2c, 2c+1
    let point_of = |q: usize| {
        if q < 2 * k {
            q + 1
        } else {
            2 * k + (2 * n - q)
        }
    };
    let mut pairs = Vec::new();
    for b in p.blocks() {
        let mut cs: Vec<usize> = b.iter().map(|&x| cpos(x)).collect();
        cs.sort_unstable();
        for i in 0..cs.len() {
            let next = cs[(i + 1) % cs.len()];
            pairs.push((point_of(2 * cs[i] + 1), point_of(2 * next)));
        }
    }
    TLDiagram::new(2 * k, 2 * l, &pairs)
}

/// `τ̃(p) = N^{b(p ∨ id)}` on `NC(k,k)`, closing each upper point to the
/// lower point below it.
pub fn nc_trace_exponent(p: &Partition) -> Result<usize> {
    if p.upper() != p.lower() {
        return Err(Error::size("trace of a non-square partition"));
    }
    p.join_blocks(&Partition::identity(p.upper()))
}

/// `φ(D) ∘ φ(E)` evaluated on the partition side.
pub fn compose_scaled_partitions(
    d: &ScaledPartition,
    e: &ScaledPartition,
) -> Result<ScaledPartition> {
    let r = d.value.compose(&e.value)?;
    Ok(Scaled::new(
        d.coeff
            .times(e.coeff)
            .times(NPow::n_pow(r.closed_blocks as i64)),
        r.result,
    ))
}

/// All diagrams in `TL(a,b)`, sorted.
pub fn tl_enumerate(a: usize, b: usize) -> Result<Vec<TLDiagram>> {
    let n = a + b;
    caps::check_points("Temperley-Lieb enumeration", n)?;
    if n % 2 == 1 {
        return Ok(vec![]);
    }
    let point_of = |pos: usize| if pos < a { pos + 1 } else { a + (n - pos) };
    let mut out = Vec::new();
    let mut mate = vec![usize::MAX; n];
    matchings(&mut mate, 0, &mut |m| {
        let pairs: Vec<(usize, usize)> = (0..n)
            .filter(|&i| i < m[i])
            .map(|i| (point_of(i), point_of(m[i])))
            .collect();
        let blocks = pairs.iter().map(|&(x, y)| vec![x, y]).collect();
        out.push(TLDiagram(
            Partition::new(a, b, blocks).expect("perfect matching"),
        ));
    });
    out.sort();
    Ok(out)
}

/// Non-crossing perfect matchings of circle positions `start..` by pairing
/// the first free position with each admissible partner.
fn matchings(mate: &mut Vec<usize>, start: usize, emit: &mut impl FnMut(&[usize])) {
    let n = mate.len();
    let Some(i) = (start..n).find(|&i| mate[i] == usize::MAX) else {
        emit(mate);
        return;
    };
    let mut j = i + 1;
    while j < n && mate[j] == usize::MAX {
        // the interval strictly between i and j must match internally
        if (j - i - 1) % 2 == 0 {
            mate[i] = j;
            mate[j] = i;
            matchings(mate, i + 1, emit);
            mate[i] = usize::MAX;
            mate[j] = usize::MAX;
        }
        j += 1;
    }
}

/// Checks unit, tensor, star, composition and trace compatibility of `φ`
/// over all diagrams `TL(2k,2l)` whose pictures have at most `max_points`
/// points (for compositions, each factor and the result).
pub fn verify_phi(max_points: usize) -> Result<Report> {
    let half = max_points / 2;
    // by_shape[k][l] = TL(2k, 2l)
    let mut by_shape = vec![vec![Vec::new(); half + 1]; half + 1];
    for k in 0..=half {
        for l in 0..=half - k {
            by_shape[k][l] = tl_enumerate(2 * k, 2 * l)?;
        }
    }
    let mut report = Report::new(format!("collapsing isomorphism, up to {max_points} points"));

    let one = TLDiagram::identity(2).phi()?;
    report.record(
        "φ(id) = id'",
        1,
        (one != Scaled::new(NPow::ONE, Partition::identity(1))).then(|| one.to_string()),
    );

    let all: Vec<&TLDiagram> = by_shape.iter().flatten().flatten().collect();

    let mut t = Tally::default();
    for d in &all {
        for e in &all {
            if d.upper() + d.lower() + e.upper() + e.lower() > 2 * half {
                continue;
            }
            let lhs = d.tensor(e).phi()?;
            let (pd, pe) = (d.phi()?, e.phi()?);
            let rhs = Scaled::new(pd.coeff.times(pe.coeff), pd.value.tensor(&pe.value));
            t.check(lhs == rhs, || format!("D={d} E={e}: {lhs} vs {rhs}"));
        }
    }
    t.into_report(&mut report, "φ(D⊗E) = φ(D)⊗φ(E)");

    let mut t = Tally::default();
    for d in &all {
        let lhs = d.involute().phi()?;
        let pd = d.phi()?;
        let rhs = Scaled::new(pd.coeff, pd.value.involute());
        t.check(lhs == rhs, || format!("D={d}: {lhs} vs {rhs}"));
    }
    t.into_report(&mut report, "φ(D*) = φ(D)*");

    let mut t = Tally::default();
    for m in 0..=half {
        for l in 0..=half - m {
            for d in &by_shape[m][l] {
                for k in 0..=half - m.max(l) {
                    for e in &by_shape[k][m] {
                        let de = d.compose_scaled(e)?;
                        let inner = de.value.phi()?;
                        let lhs = Scaled::new(de.coeff.times(inner.coeff), inner.value);
                        let rhs = compose_scaled_partitions(&d.phi()?, &e.phi()?)?;
                        t.check(lhs == rhs, || format!("D={d} E={e}: {lhs} vs {rhs}"));
                    }
                }
            }
        }
    }
    t.into_report(&mut report, "φ(D∘E) = φ(D)∘φ(E)");

    let mut t = Tally::default();
    for row in &by_shape {
        for list in row {
            for d in list {
                for e in list {
                    // τ(D*∘E) against τ̃(φ(D)*∘φ(E)), both as powers of N^{1/4}
                    let de = d.involute().compose_scaled(e)?;
                    let lhs = de.coeff.exp4 + 2 * de.value.closed_curves()? as i64;
                    let (pd, pe) = (d.phi()?, e.phi()?);
                    let pd_star = Scaled::new(pd.coeff, pd.value.involute());
                    let prod = compose_scaled_partitions(&pd_star, &pe)?;
                    let rhs = prod.coeff.exp4 + 4 * nc_trace_exponent(&prod.value)? as i64;
                    t.check(lhs == rhs, || {
                        format!("D={d} E={e}: N^({lhs}/4) vs N^({rhs}/4)")
                    });
                }
            }
        }
    }
    t.into_report(&mut report, "(D|E)_q = (φ(D)|φ(E))_N");
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::{enumerate, Mode};

    fn tl(s: &str) -> TLDiagram {
        TLDiagram::parse(s).unwrap()
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(tl_enumerate(2, 2).unwrap().len(), 2);
        assert_eq!(tl_enumerate(1, 1).unwrap().len(), 1);
        assert_eq!(tl_enumerate(0, 6).unwrap().len(), 5);
        assert!(tl_enumerate(1, 2).unwrap().is_empty());
        for n in 0..=6 {
            for a in 0..=2 * n {
                let got = tl_enumerate(a, 2 * n - a).unwrap();
                assert_eq!(got.len() as u128, crate::partitions::catalan(n));
                let filtered: Vec<_> = enumerate(a, 2 * n - a, Mode::NonCrossing)
                    .unwrap()
                    .into_iter()
                    .filter(|p| p.blocks().iter().all(|b| b.len() == 2))
                    .map(|p| TLDiagram::from_partition(p).unwrap())
                    .collect();
                let mut f = filtered;
                f.sort();
                assert_eq!(got, f);
            }
        }
    }

    #[test]
    fn loops_are_counted() {
        let (d, loops) = TLDiagram::cup().compose(&TLDiagram::cap()).unwrap();
        assert_eq!((d, loops), (TLDiagram::empty(), 1));
        let e = tl("TL(2,2): (1,2)(3,4)");
        assert_eq!(TLDiagram::identity(2).compose(&e).unwrap(), (e.clone(), 0));
        let zig = TLDiagram::cap().tensor(&TLDiagram::identity(1));
        let zag = TLDiagram::identity(1).tensor(&TLDiagram::cup());
        assert_eq!(zag.compose(&zig).unwrap(), (TLDiagram::identity(1), 0));
        // e∘e = √N e
        assert_eq!(e.compose(&e).unwrap(), (e, 1));
    }

    #[test]
    fn markov_trace_examples() {
        assert_eq!(
            TLDiagram::identity(2).markov_trace(5).unwrap(),
            QNum::from_int(5, 5)
        );
        assert_eq!(
            TLDiagram::identity(1).markov_trace(5).unwrap(),
            QNum::sqrt_n(5)
        );
        let e = tl("TL(2,2): (1,2)(3,4)");
        assert_eq!(e.markov_trace(5).unwrap(), QNum::sqrt_n(5));
        assert_eq!(TLDiagram::empty().markov_trace(5).unwrap(), QNum::one(5));
    }

    #[test]
    fn partial_close_examples() {
        let r = TLDiagram::identity(1).partial_close().unwrap();
        assert_eq!(r, Scaled::new(NPow::sqrt_n_pow(1), TLDiagram::empty()));
        let r = tl("TL(2,2): (1,2)(3,4)").partial_close().unwrap();
        assert_eq!(r, Scaled::new(NPow::ONE, TLDiagram::identity(1)));
    }

    #[test]
    fn algebraic_and_pictorial_closures_agree() {
        for a in 0..=6 {
            for d in tl_enumerate(a, a).unwrap() {
                assert_eq!(
                    d.closed_curves().unwrap(),
                    d.closed_curves_pictorial().unwrap(),
                    "{d}"
                );
            }
        }
    }

    #[test]
    fn trace_is_tracial() {
        for a in 0..=6 {
            let ds = tl_enumerate(a, a).unwrap();
            for d in &ds {
                for e in &ds {
                    let de = d.compose_scaled(e).unwrap();
                    let ed = e.compose_scaled(d).unwrap();
                    assert_eq!(
                        de.coeff.exp4 + 2 * de.value.closed_curves().unwrap() as i64,
                        ed.coeff.exp4 + 2 * ed.value.closed_curves().unwrap() as i64
                    );
                }
            }
        }
    }

    #[test]
    fn collapse_examples() {
        assert_eq!(
            TLDiagram::identity(2).collapse().unwrap(),
            Partition::identity(1)
        );
        let side_by_side = TLDiagram::cap().tensor(&TLDiagram::cap());
        assert_eq!(side_by_side.collapse().unwrap(), Partition::discrete(0, 2));
        let nested = tl("TL(0,4): (1,4)(2,3)");
        assert_eq!(nested.collapse().unwrap(), Partition::one_block(0, 2));
        assert!(TLDiagram::identity(1).collapse().is_err());
    }

    #[test]
    fn fatten_examples() {
        assert_eq!(
            fatten(&Partition::identity(1)).unwrap(),
            TLDiagram::identity(2)
        );
        assert_eq!(
            fatten(&Partition::one_block(0, 2)).unwrap(),
            tl("TL(0,4): (1,4)(2,3)")
        );
        // a through-string with two legs below: outer lines plus a small cup
        let p = Partition::one_block(1, 2);
        let big = fatten(&p).unwrap();
        assert_eq!(big, tl("TL(2,4): (1,3)(2,6)(4,5)"));
        assert_eq!(big.collapse().unwrap(), p);
        assert!(fatten(&Partition::new(0, 4, vec![vec![1, 3], vec![2, 4]]).unwrap()).is_err());
    }

    #[test]
    fn collapse_inverts_fatten() {
        for n in 0..=6 {
            for k in 0..=n {
                for p in enumerate(k, n - k, Mode::NonCrossing).unwrap() {
                    assert_eq!(fatten(&p).unwrap().collapse().unwrap(), p);
                }
            }
        }
    }

    #[test]
    fn black_region_examples() {
        assert_eq!(TLDiagram::identity(2).black_regions(), 1);
        assert_eq!(TLDiagram::identity(4).black_regions(), 2);
        assert_eq!(tl("TL(4,4): (1,4)(2,3)(5,8)(6,7)").black_regions(), 2);
        assert_eq!(TLDiagram::empty().black_regions(), 0);
        for a in [0, 2, 4] {
            for b in [0, 2] {
                for d in tl_enumerate(a, b).unwrap() {
                    let br = d.black_regions();
                    assert_eq!(d.tensor(&TLDiagram::cap()).black_regions(), br + 1);
                    assert_eq!(d.tensor(&TLDiagram::cup()).black_regions(), br + 1);
                }
            }
        }
    }

    #[test]
    fn shading_matches_collapsed_blocks() {
        for n in 0..=4 {
            for a in (0..=2 * n).step_by(2) {
                for d in tl_enumerate(a, 2 * n - a).unwrap() {
                    assert_eq!(d.black_regions(), d.collapse().unwrap().num_blocks(), "{d}");
                }
            }
        }
    }

    #[test]
    fn shading_matches_trace_ratio() {
        // τ(D) = √N^{k - br(D)} τ̃(c(D)) on TL(2k,2k)
        for k in 0..=3 {
            for d in tl_enumerate(2 * k, 2 * k).unwrap() {
                let lhs = d.closed_curves().unwrap() as i64;
                let rhs = k as i64 - d.black_regions() as i64
                    + 2 * nc_trace_exponent(&d.collapse().unwrap()).unwrap() as i64;
                assert_eq!(lhs, rhs, "{d}");
            }
        }
    }

    #[test]
    fn phi_examples() {
        let pu = TLDiagram::cup().phi().unwrap();
        let pc = TLDiagram::cap().phi().unwrap();
        assert_eq!(pu.coeff, NPow { exp4: -1 });
        let prod = compose_scaled_partitions(&pu, &pc).unwrap();
        assert_eq!(prod.value, Partition::empty());
        assert_eq!(prod.coeff_qnum(7), Some(QNum::sqrt_n(7)));
        assert_eq!(
            TLDiagram::identity(2).phi().unwrap(),
            Scaled::new(NPow::ONE, Partition::identity(1))
        );
        assert_eq!(
            TLDiagram::identity(2).phi().unwrap().to_string(),
            "1 * {1,2} (k=1,l=1)"
        );
    }

    #[test]
    fn phi_of_fattening() {
        for n in 0..=6 {
            for k in 0..=n {
                for p in enumerate(k, n - k, Mode::NonCrossing).unwrap() {
                    let s = fatten(&p).unwrap().phi().unwrap();
                    let expect = NPow {
                        exp4: n as i64 - 2 * p.num_blocks() as i64,
                    };
                    assert_eq!(s, Scaled::new(expect, p));
                }
            }
        }
    }

    #[test]
    fn phi_is_a_tensor_functor() {
        let r = verify_phi(6).unwrap();
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn literal_round_trip() {
        for d in tl_enumerate(2, 4).unwrap() {
            assert_eq!(tl(&d.to_string()), d);
        }
        assert_eq!(TLDiagram::empty().to_string(), "TL(0,0):");
        assert!(TLDiagram::parse("TL(0,4): (1,3)(2,4)").is_err());
        assert!(TLDiagram::parse("TL(0,3): (1,2)(3,3)").is_err());
    }
}
