//! Fusion data of `G` and the fusion semiring of `G ≀* S_N^+`.
//!
//! Irreducibles of the free wreath product are words over `Irr(G)` (trivial
//! letters included). Two independent fusion algorithms are provided: the
//! closed formula over suffix/prefix splittings, and the recursive rule for
//! the free product `Irr(G) * Irr(SU_q(2))` applied to the reduced words
//! `b^{l_1} α_1 b^{l_2} … b^{l_k}`.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Debug;
use std::hash::Hash;
use std::path::Path;

use num_traits::One;
use serde::Deserialize;

use crate::exactnum::{cheb_a, cheb_eval_sqrt_n, IntPoly, QNum};
use crate::linmaps::FiniteGroup;
use crate::report::{Report, Tally};
use crate::{Error, Integer, Rational, Result};

/// Labels with multiplicities, ordered by label.
pub type Multiset<L> = BTreeMap<L, u64>;

pub(crate) fn add_to<L: Ord>(m: &mut Multiset<L>, l: L, mult: u64) {
    if mult > 0 {
        *m.entry(l).or_insert(0) += mult;
    }
}

/// Description of `Irr(G)` for a compact quantum group of Kac type.
pub trait FusionData: Send + Sync {
    type Label: Clone + Ord + Hash + Debug + Send + Sync;

    fn trivial(&self) -> Self::Label;
    fn dim(&self, a: &Self::Label) -> u64;
    fn conj(&self, a: &Self::Label) -> Self::Label;
    fn tensor(&self, a: &Self::Label, b: &Self::Label) -> Multiset<Self::Label>;
    /// All irreducibles, when there are finitely many.
    fn irreps(&self) -> Option<Vec<Self::Label>>;
    fn label_name(&self, a: &Self::Label) -> String;
    fn parse_label(&self, s: &str) -> Result<Self::Label>;

    fn is_trivial(&self, a: &Self::Label) -> bool {
        *a == self.trivial()
    }

    /// Multiplicity of `c` in `a ⊗ b`.
    fn mult(&self, a: &Self::Label, b: &Self::Label, c: &Self::Label) -> u64 {
        self.tensor(a, b).get(c).copied().unwrap_or(0)
    }
}

/// Checks the fusion axioms on the given labels, naming the first
/// violated identity.
pub fn validate_on<F: FusionData>(fd: &F, labels: &[F::Label]) -> Result<()> {
    let fail =
        |identity: &'static str, detail: String| Err(Error::FusionInvariant { identity, detail });
    let one = fd.trivial();
    let name = |a: &F::Label| fd.label_name(a);
    if fd.conj(&one) != one {
        return fail("conj(trivial) = trivial", name(&fd.conj(&one)));
    }
    for a in labels {
        if fd.dim(a) == 0 {
            return fail("dim > 0", name(a));
        }
        if fd.conj(&fd.conj(a)) != *a {
            return fail("conj is an involution", name(a));
        }
        if fd.dim(&fd.conj(a)) != fd.dim(a) {
            return fail("dim(conj a) = dim(a)", name(a));
        }
        let unit = fd.tensor(&one, a);
        if unit.len() != 1 || unit.get(a) != Some(&1) || fd.tensor(a, &one) != unit {
            return fail("1 ⊗ a = a = a ⊗ 1", name(a));
        }
        for b in labels {
            let t = fd.tensor(a, b);
            let total: u64 = t.iter().map(|(c, m)| m * fd.dim(c)).sum();
            if total != fd.dim(a) * fd.dim(b) {
                return fail(
                    "Σ mult·dim = dim(a)·dim(b)",
                    format!(
                        "{} ⊗ {}: {} vs {}",
                        name(a),
                        name(b),
                        total,
                        fd.dim(a) * fd.dim(b)
                    ),
                );
            }
            let triv = t.get(&one).copied().unwrap_or(0);
            let expect = u64::from(*b == fd.conj(a));
            if triv != expect {
                return fail(
                    "mult(1 in a⊗b) = δ(b, conj a)",
                    format!("{} ⊗ {} contains 1 {} times", name(a), name(b), triv),
                );
            }
            for (c, m) in &t {
                let back = fd.mult(b, &fd.conj(c), &fd.conj(a));
                if back != *m {
                    return fail(
                        "mult(c in a⊗b) = mult(conj a in b⊗conj c)",
                        format!(
                            "a={} b={} c={}: {} vs {}",
                            name(a),
                            name(b),
                            name(c),
                            m,
                            back
                        ),
                    );
                }
            }
        }
    }
    Ok(())
}

/// Trivial group: a single irreducible.
#[derive(Clone, Debug, Default)]
pub struct TrivialFusion;

impl FusionData for TrivialFusion {
    type Label = ();
    fn trivial(&self) {}
    fn dim(&self, _: &()) -> u64 {
        1
    }
    fn conj(&self, _: &()) {}
    fn tensor(&self, _: &(), _: &()) -> Multiset<()> {
        Multiset::from([((), 1)])
    }
    fn irreps(&self) -> Option<Vec<()>> {
        Some(vec![()])
    }
    fn label_name(&self, _: &()) -> String {
        "1".into()
    }
    fn parse_label(&self, s: &str) -> Result<()> {
        match s {
            "1" => Ok(()),
            _ => Err(Error::parse(format!("unknown label {s:?} (only \"1\")"))),
        }
    }
}

/// Dual of a finite group: irreducibles are group elements, all of
/// dimension one, and the tensor product is the group law.
#[derive(Clone, Debug)]
pub struct GroupDualFusion {
    group: FiniteGroup,
    inverse: Vec<usize>,
}

impl GroupDualFusion {
    pub fn new(group: FiniteGroup) -> Self {
        let inverse = (0..group.order())
            .map(|a| {
                (0..group.order())
                    .find(|&b| group.mul(a, b) == group.identity())
                    .expect("validated group has inverses")
            })
            .collect();
        GroupDualFusion { group, inverse }
    }

    /// `Z/s` with labels `1, g, g^2, …`.
    pub fn cyclic(s: usize) -> Result<Self> {
        if s == 0 {
            return Err(Error::invalid("cyclic order must be at least 1"));
        }
        Ok(Self::new(FiniteGroup::cyclic(s)))
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }
}

impl FusionData for GroupDualFusion {
    type Label = usize;
    fn trivial(&self) -> usize {
        self.group.identity()
    }
    fn dim(&self, _: &usize) -> u64 {
        1
    }
    fn conj(&self, a: &usize) -> usize {
        self.inverse[*a]
    }
    fn tensor(&self, a: &usize, b: &usize) -> Multiset<usize> {
        Multiset::from([(self.group.mul(*a, *b), 1)])
    }
    fn irreps(&self) -> Option<Vec<usize>> {
        Some((0..self.group.order()).collect())
    }
    fn label_name(&self, a: &usize) -> String {
        self.group.name(*a).to_string()
    }
    fn parse_label(&self, s: &str) -> Result<usize> {
        self.group
            .element(s)
            .ok_or_else(|| Error::parse(format!("unknown label {s:?}")))
    }
}

/// Dual of `Z`: labels are integers, `m ⊗ n = m + n`.
#[derive(Clone, Debug, Default)]
pub struct IntegersFusion;

impl FusionData for IntegersFusion {
    type Label = i64;
    fn trivial(&self) -> i64 {
        0
    }
    fn dim(&self, _: &i64) -> u64 {
        1
    }
    fn conj(&self, a: &i64) -> i64 {
        -a
    }
    fn tensor(&self, a: &i64, b: &i64) -> Multiset<i64> {
        Multiset::from([(a + b, 1)])
    }
    fn irreps(&self) -> Option<Vec<i64>> {
        None
    }
    fn label_name(&self, a: &i64) -> String {
        a.to_string()
    }
    fn parse_label(&self, s: &str) -> Result<i64> {
        s.parse()
            .map_err(|_| Error::parse(format!("{s:?} is not an integer label")))
    }
}

/// `SU_q(2)` fusion: `b^m ⊗ b^n = b^{|m-n|} ⊕ … ⊕ b^{m+n}` in steps of two.
/// Dimensions are the classical ones; they play no role in the fusion.
#[derive(Clone, Debug, Default)]
pub struct SuQ2Fusion;

impl FusionData for SuQ2Fusion {
    type Label = u32;
    fn trivial(&self) -> u32 {
        0
    }
    fn dim(&self, a: &u32) -> u64 {
        u64::from(*a) + 1
    }
    fn conj(&self, a: &u32) -> u32 {
        *a
    }
    fn tensor(&self, a: &u32, b: &u32) -> Multiset<u32> {
        (a.abs_diff(*b)..=a + b)
            .step_by(2)
            .map(|c| (c, 1))
            .collect()
    }
    fn irreps(&self) -> Option<Vec<u32>> {
        None
    }
    fn label_name(&self, a: &u32) -> String {
        format!("b^{a}")
    }
    fn parse_label(&self, s: &str) -> Result<u32> {
        s.strip_prefix("b^")
            .and_then(|n| n.parse().ok())
            .ok_or_else(|| Error::parse(format!("{s:?} is not of the form b^n")))
    }
}

/// Finite fusion data given by explicit tables.
#[derive(Clone, Debug)]
pub struct TableFusion {
    names: Vec<String>,
    dims: Vec<u64>,
    trivial: usize,
    conj: Vec<usize>,
    tensor: Vec<Vec<Multiset<usize>>>,
}

#[derive(Deserialize)]
struct IrrepEntry {
    label: String,
    dim: u64,
}

#[derive(Deserialize)]
struct FusionFile {
    irreps: Vec<IrrepEntry>,
    trivial: String,
    conj: BTreeMap<String, String>,
    tensor: BTreeMap<String, BTreeMap<String, u64>>,
}

#[derive(Deserialize)]
struct GroupFile {
    elements: Vec<String>,
    table: Vec<Vec<String>>,
}

impl TableFusion {
    /// Builds and fully validates the tables.
    pub fn new(
        irreps: Vec<(String, u64)>,
        trivial: &str,
        conj: &BTreeMap<String, String>,
        tensor: &BTreeMap<String, BTreeMap<String, u64>>,
    ) -> Result<Self> {
        let names: Vec<String> = irreps.iter().map(|(n, _)| n.clone()).collect();
        let index: HashMap<&str, usize> = names
            .iter()
            .enumerate()
            .map(|(i, n)| (n.as_str(), i))
            .collect();
        if index.len() != names.len() {
            return Err(Error::invalid("duplicate irreducible label"));
        }
        let look = |s: &str| {
            index
                .get(s.trim())
                .copied()
                .ok_or_else(|| Error::invalid(format!("unknown label {s:?}")))
        };
        let trivial = look(trivial)?;
        let n = names.len();
        let mut conj_tab = vec![usize::MAX; n];
        for (a, b) in conj {
            conj_tab[look(a)?] = look(b)?;
        }
        if let Some(i) = conj_tab.iter().position(|&c| c == usize::MAX) {
            return Err(Error::invalid(format!("conj missing for {:?}", names[i])));
        }
        let mut tab = vec![vec![None; n]; n];
        for (key, prod) in tensor {
            let (a, b) = key
                .split_once(',')
                .ok_or_else(|| Error::invalid(format!("tensor key {key:?} is not \"a,b\"")))?;
            let (a, b) = (look(a)?, look(b)?);
            let mut m = Multiset::new();
            for (c, mult) in prod {
                add_to(&mut m, look(c)?, *mult);
            }
            if tab[a][b].replace(m).is_some() {
                return Err(Error::invalid(format!("tensor entry {key:?} given twice")));
            }
        }
        let mut tensor_tab = Vec::with_capacity(n);
        for (a, row) in tab.into_iter().enumerate() {
            let mut out = Vec::with_capacity(n);
            for (b, cell) in row.into_iter().enumerate() {
                out.push(cell.ok_or_else(|| {
                    Error::invalid(format!(
                        "tensor entry \"{},{}\" missing",
                        names[a], names[b]
                    ))
                })?);
            }
            tensor_tab.push(out);
        }
        let fd = TableFusion {
            names,
            dims: irreps.iter().map(|(_, d)| *d).collect(),
            trivial,
            conj: conj_tab,
            tensor: tensor_tab,
        };
        validate_on(&fd, &(0..n).collect::<Vec<_>>())?;
        Ok(fd)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let f: FusionFile =
            serde_json::from_str(text).map_err(|e| Error::parse(format!("fusion file: {e}")))?;
        Self::new(
            f.irreps.into_iter().map(|e| (e.label, e.dim)).collect(),
            &f.trivial,
            &f.conj,
            &f.tensor,
        )
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::invalid(format!("{}: {e}", path.display())))?;
        Self::from_json(&text)
    }

    /// Irreducibles `1, sgn, std` of `S_3`.
    pub fn dual_s3() -> Self {
        let s = |x: &str| x.to_string();
        let irreps = vec![(s("1"), 1), (s("sgn"), 1), (s("std"), 2)];
        let conj = ["1", "sgn", "std"].iter().map(|x| (s(x), s(x))).collect();
        let rules: [(&str, &[(&str, u64)]); 9] = [
            ("1,1", &[("1", 1)]),
            ("1,sgn", &[("sgn", 1)]),
            ("1,std", &[("std", 1)]),
            ("sgn,1", &[("sgn", 1)]),
            ("sgn,sgn", &[("1", 1)]),
            ("sgn,std", &[("std", 1)]),
            ("std,1", &[("std", 1)]),
            ("std,sgn", &[("std", 1)]),
            ("std,std", &[("1", 1), ("sgn", 1), ("std", 1)]),
        ];
        let tensor = rules
            .iter()
            .map(|(k, v)| (s(k), v.iter().map(|(c, m)| (s(c), *m)).collect()))
            .collect();
        Self::new(irreps, "1", &conj, &tensor).expect("valid S_3 data")
    }
}

impl FusionData for TableFusion {
    type Label = usize;
    fn trivial(&self) -> usize {
        self.trivial
    }
    fn dim(&self, a: &usize) -> u64 {
        self.dims[*a]
    }
    fn conj(&self, a: &usize) -> usize {
        self.conj[*a]
    }
    fn tensor(&self, a: &usize, b: &usize) -> Multiset<usize> {
        self.tensor[*a][*b].clone()
    }
    fn irreps(&self) -> Option<Vec<usize>> {
        Some((0..self.names.len()).collect())
    }
    fn label_name(&self, a: &usize) -> String {
        self.names[*a].clone()
    }
    fn parse_label(&self, s: &str) -> Result<usize> {
        self.names
            .iter()
            .position(|n| n == s)
            .ok_or_else(|| Error::parse(format!("unknown label {s:?}")))
    }
}

/// Reads a finite group `{"elements": [...], "table": [[...]]}` as JSON.
pub fn group_from_json(text: &str) -> Result<FiniteGroup> {
    let f: GroupFile =
        serde_json::from_str(text).map_err(|e| Error::parse(format!("group file: {e}")))?;
    let idx = |s: &str| {
        f.elements
            .iter()
            .position(|e| e == s)
            .ok_or_else(|| Error::invalid(format!("unknown element {s:?}")))
    };
    let table = f
        .table
        .iter()
        .map(|row| row.iter().map(|x| idx(x)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    FiniteGroup::from_table(f.elements.clone(), table)
}

/// An element of the monoid of words over `Irr(G)`.
///
/// Ordered by decreasing length, then lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WreathWord<L> {
    pub letters: Vec<L>,
}

impl<L: Ord> Ord for WreathWord<L> {
    fn cmp(&self, o: &Self) -> std::cmp::Ordering {
        o.letters
            .len()
            .cmp(&self.letters.len())
            .then_with(|| self.letters.cmp(&o.letters))
    }
}

impl<L: Ord> PartialOrd for WreathWord<L> {
    fn partial_cmp(&self, o: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(o))
    }
}

impl<L: Clone> WreathWord<L> {
    pub fn new(letters: Vec<L>) -> Self {
        WreathWord { letters }
    }

    pub fn empty() -> Self {
        WreathWord { letters: vec![] }
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn concat(&self, o: &Self) -> Self {
        let mut l = self.letters.clone();
        l.extend(o.letters.iter().cloned());
        WreathWord { letters: l }
    }
}

/// `b^{l_1} α_1 b^{l_2} … α_{k-1} b^{l_k}` with nontrivial letters; the pure
/// power `b^{2m}` has no letters.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ReducedWord<L> {
    pub exponents: Vec<u32>,
    pub letters: Vec<L>,
}

/// Reads `b α_1 b^2 α_2 … b^2 α_k b` and deletes trivial letters.
pub fn reduce<F: FusionData>(x: &WreathWord<F::Label>, fd: &F) -> ReducedWord<F::Label> {
    if x.is_empty() {
        return ReducedWord {
            exponents: vec![0],
            letters: vec![],
        };
    }
    let mut exponents = vec![1u32];
    let mut letters = Vec::new();
    let last = x.len() - 1;
    for (i, a) in x.letters.iter().enumerate() {
        let gap = if i == last { 1 } else { 2 };
        if fd.is_trivial(a) {
            *exponents.last_mut().expect("nonempty") += gap;
        } else {
            letters.push(a.clone());
            exponents.push(gap);
        }
    }
    ReducedWord { exponents, letters }
}

/// Inverse of [`reduce`] on reduced words of the admissible shape.
pub fn unreduce<F: FusionData>(w: &ReducedWord<F::Label>, fd: &F) -> Result<WreathWord<F::Label>> {
    let bad = || Error::invalid(format!("{w:?} is not the reduction of a word"));
    let k = w.exponents.len();
    if k != w.letters.len() + 1 || w.letters.iter().any(|a| fd.is_trivial(a)) {
        return Err(bad());
    }
    let one = fd.trivial();
    let mut letters = Vec::new();
    if k == 1 {
        let l = w.exponents[0];
        if l % 2 != 0 {
            return Err(bad());
        }
        return Ok(WreathWord::new(vec![one; (l / 2) as usize]));
    }
    for (i, &l) in w.exponents.iter().enumerate() {
        let edge = i == 0 || i == k - 1;
        let fill = if edge {
            if l % 2 != 1 {
                return Err(bad());
            }
            (l - 1) / 2
        } else {
            if l < 2 || l % 2 != 0 {
                return Err(bad());
            }
            l / 2 - 1
        };
        letters.extend(std::iter::repeat_n(one.clone(), fill as usize));
        if i < k - 1 {
            letters.push(w.letters[i].clone());
        }
    }
    Ok(WreathWord::new(letters))
}

/// Reverses and conjugates letterwise.
pub fn conj_word<F: FusionData>(x: &WreathWord<F::Label>, fd: &F) -> WreathWord<F::Label> {
    WreathWord::new(x.letters.iter().rev().map(|a| fd.conj(a)).collect())
}

/// `ω(x) ⊗ ω(y)` by the closed formula: for every splitting `x = u,t`,
/// `y = t̄,v`, the concatenation `u,v` and, when `u, v` are nonempty, the
/// fusion `u.v` over all `γ ⊂ last(u) ⊗ first(v)` (trivial `γ` included).
pub fn fuse<F: FusionData>(
    x: &WreathWord<F::Label>,
    y: &WreathWord<F::Label>,
    fd: &F,
) -> Multiset<WreathWord<F::Label>> {
    let mut out = Multiset::new();
    let (a, b) = (&x.letters, &y.letters);
    let mut j = 0;
    loop {
        let u = &a[..a.len() - j];
        let v = &b[j..];
        let mut uv = u.to_vec();
        uv.extend_from_slice(v);
        add_to(&mut out, WreathWord::new(uv), 1);
        if let (Some((ul, uh)), Some((vf, vt))) = (u.split_last(), v.split_first()) {
            for (g, m) in fd.tensor(ul, vf) {
                let mut w = uh.to_vec();
                w.push(g);
                w.extend_from_slice(vt);
                add_to(&mut out, WreathWord::new(w), m);
            }
        }
        // extend t by one letter if x's next suffix letter matches conj of
        // y's next prefix letter
        if j < a.len() && j < b.len() && b[j] == fd.conj(&a[a.len() - 1 - j]) {
            j += 1;
        } else {
            break;
        }
    }
    out
}

/// A letter of an alternating word in a free product.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter<A, B> {
    A(A),
    B(B),
}

fn same_factor<A, B>(x: &Letter<A, B>, y: &Letter<A, B>) -> bool {
    matches!(
        (x, y),
        (Letter::A(_), Letter::A(_)) | (Letter::B(_), Letter::B(_))
    )
}

/// Fusion in `G_1 * G_2` on alternating words of nontrivial letters.
pub fn fuse_free_product<F1: FusionData, F2: FusionData>(
    w1: &[Letter<F1::Label, F2::Label>],
    w2: &[Letter<F1::Label, F2::Label>],
    fd1: &F1,
    fd2: &F2,
) -> Result<Multiset<Vec<Letter<F1::Label, F2::Label>>>> {
    for w in [w1, w2] {
        let trivial_letter = w.iter().any(|l| match l {
            Letter::A(a) => fd1.is_trivial(a),
            Letter::B(b) => fd2.is_trivial(b),
        });
        if trivial_letter || w.windows(2).any(|p| same_factor(&p[0], &p[1])) {
            return Err(Error::invalid(
                "word is not alternating in nontrivial letters",
            ));
        }
    }
    let mut out = Multiset::new();
    free_rec(w1, w2, fd1, fd2, 1, &mut out);
    Ok(out)
}

fn free_rec<F1: FusionData, F2: FusionData>(
    x: &[Letter<F1::Label, F2::Label>],
    y: &[Letter<F1::Label, F2::Label>],
    fd1: &F1,
    fd2: &F2,
    mult: u64,
    out: &mut Multiset<Vec<Letter<F1::Label, F2::Label>>>,
) {
    let (Some((z, v)), Some((z2, w))) = (x.split_last(), y.split_first()) else {
        let mut c = x.to_vec();
        c.extend_from_slice(y);
        add_to(out, c, mult);
        return;
    };
    if !same_factor(z, z2) {
        let mut c = x.to_vec();
        c.extend_from_slice(y);
        add_to(out, c, mult);
        return;
    }
    let (products, conj_match): (Vec<(Letter<_, _>, u64)>, bool) = match (z, z2) {
        (Letter::A(a), Letter::A(b)) => (
            fd1.tensor(a, b)
                .into_iter()
                .filter(|(t, _)| !fd1.is_trivial(t))
                .map(|(t, m)| (Letter::A(t), m))
                .collect(),
            fd1.conj(a) == *b,
        ),
        (Letter::B(a), Letter::B(b)) => (
            fd2.tensor(a, b)
                .into_iter()
                .filter(|(t, _)| !fd2.is_trivial(t))
                .map(|(t, m)| (Letter::B(t), m))
                .collect(),
            fd2.conj(a) == *b,
        ),
        _ => unreachable!("same factor"),
    };
    for (t, m) in products {
        let mut c = v.to_vec();
        c.push(t);
        c.extend_from_slice(w);
        add_to(out, c, mult * m);
    }
    if conj_match {
        free_rec(v, w, fd1, fd2, mult, out);
    }
}

fn to_alternating<L: Clone>(r: &ReducedWord<L>) -> Vec<Letter<L, u32>> {
    let mut w = Vec::new();
    for (i, &e) in r.exponents.iter().enumerate() {
        if e > 0 {
            w.push(Letter::B(e));
        }
        if let Some(a) = r.letters.get(i) {
            w.push(Letter::A(a.clone()));
        }
    }
    w
}

fn from_alternating<L: Clone>(w: &[Letter<L, u32>]) -> ReducedWord<L> {
    let mut exponents = vec![0u32];
    let mut letters = Vec::new();
    for l in w {
        match l {
            Letter::B(e) => *exponents.last_mut().expect("nonempty") += e,
            Letter::A(a) => {
                letters.push(a.clone());
                exponents.push(0);
            }
        }
    }
    ReducedWord { exponents, letters }
}

/// `ω(x) ⊗ ω(y)` computed inside `Irr(G) * Irr(SU_q(2))` on reduced words.
pub fn fuse_via_free_product<F: FusionData>(
    x: &WreathWord<F::Label>,
    y: &WreathWord<F::Label>,
    fd: &F,
) -> Result<Multiset<WreathWord<F::Label>>> {
    let wx = to_alternating(&reduce(x, fd));
    let wy = to_alternating(&reduce(y, fd));
    let prod = fuse_free_product(&wx, &wy, fd, &SuQ2Fusion)?;
    let mut out = Multiset::new();
    for (w, m) in prod {
        add_to(&mut out, unreduce(&from_alternating(&w), fd)?, m);
    }
    Ok(out)
}

/// Products of direct sums of irreducibles.
pub fn fuse_multisets<F: FusionData>(
    xs: &Multiset<WreathWord<F::Label>>,
    ys: &Multiset<WreathWord<F::Label>>,
    fd: &F,
) -> Multiset<WreathWord<F::Label>> {
    let mut out = Multiset::new();
    for (x, mx) in xs {
        for (y, my) in ys {
            for (z, mz) in fuse(x, y, fd) {
                add_to(&mut out, z, mx * my * mz);
            }
        }
    }
    out
}

/// The basic representation `r(α) = ω(α) ⊕ δ_{α,1} ω(∅)`.
pub fn basic_rep<F: FusionData>(a: &F::Label, fd: &F) -> Multiset<WreathWord<F::Label>> {
    let mut m = Multiset::from([(WreathWord::new(vec![a.clone()]), 1)]);
    if fd.is_trivial(a) {
        add_to(&mut m, WreathWord::empty(), 1);
    }
    m
}

/// `∏ d_{α_i} ∏ A_{l_i}(√N)`.
pub fn dim_wreath<F: FusionData>(x: &WreathWord<F::Label>, fd: &F, n: u64) -> Result<QNum> {
    if n < 4 {
        return Err(Error::invalid(format!("N = {n} is below 4")));
    }
    let r = reduce(x, fd);
    let d: u64 = r.letters.iter().map(|a| fd.dim(a)).product();
    let mut acc = QNum::from_int(d as i64, n);
    for &l in &r.exponents {
        acc = acc.try_mul(&cheb_eval_sqrt_n(l as usize, n))?;
    }
    Ok(acc)
}

/// `P(X) = ∏ d_{α_i} ∏ A_{l_i}(√X)` as a polynomial in `X`.
pub fn central_char_poly<F: FusionData>(x: &WreathWord<F::Label>, fd: &F) -> IntPoly {
    let r = reduce(x, fd);
    let d: Integer = r.letters.iter().map(|a| Integer::from(fd.dim(a))).product();
    let mut p = IntPoly::constant(Integer::one()).scale(&d);
    for &l in &r.exponents {
        p = p.mul(&cheb_a(l as usize));
    }
    p.even_part_in_square()
        .expect("exponents of a reduced word sum to an even number")
}

/// `(a,b,…)` with labels rendered by the fusion data.
pub fn render_word<F: FusionData>(x: &WreathWord<F::Label>, fd: &F) -> String {
    let parts: Vec<String> = x.letters.iter().map(|a| fd.label_name(a)).collect();
    format!("({})", parts.join(","))
}

pub fn parse_word<F: FusionData>(s: &str, fd: &F) -> Result<WreathWord<F::Label>> {
    let t = s.trim();
    let inner = t
        .strip_prefix('(')
        .and_then(|r| r.strip_suffix(')'))
        .ok_or_else(|| Error::parse(format!("word {s:?} must be parenthesized")))?;
    if inner.trim().is_empty() {
        return Ok(WreathWord::empty());
    }
    inner
        .split(',')
        .map(|l| fd.parse_label(l.trim()))
        .collect::<Result<Vec<_>>>()
        .map(WreathWord::new)
}

pub fn render_reduced<F: FusionData>(r: &ReducedWord<F::Label>, fd: &F) -> String {
    let mut parts = Vec::new();
    for (i, e) in r.exponents.iter().enumerate() {
        parts.push(format!("b^{e}"));
        if let Some(a) = r.letters.get(i) {
            parts.push(fd.label_name(a));
        }
    }
    parts.join(" ")
}

/// Words of length at most `max_len` over the given letters.
pub fn all_words<L: Clone>(letters: &[L], max_len: usize) -> Vec<WreathWord<L>> {
    let mut out = vec![WreathWord::empty()];
    let mut layer = vec![WreathWord::<L>::empty()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &layer {
            for a in letters {
                let mut l = w.letters.clone();
                l.push(a.clone());
                next.push(WreathWord::new(l));
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

/// Checks the fusion semiring on all pairs of words up to `max_len` over
/// `letters`, and the dimension formula at each `N`.
pub fn verify_fusion_dimensions<F: FusionData>(
    fd: &F,
    letters: &[F::Label],
    max_len: usize,
    ns: &[u64],
) -> Result<Report> {
    let words = all_words(letters, max_len);
    let mut report = Report::new(format!("fusion rules, words up to length {max_len}"));
    let r = |x: &WreathWord<F::Label>| render_word(x, fd);

    let mut agree = Tally::default();
    let mut dims = Tally::default();
    let mut frob = Tally::default();
    for x in &words {
        for y in &words {
            let direct = fuse(x, y, fd);
            let recursive = fuse_via_free_product(x, y, fd)?;
            agree.check(direct == recursive, || format!("x={} y={}", r(x), r(y)));
            for &n in ns {
                let lhs = dim_wreath(x, fd, n)?.try_mul(&dim_wreath(y, fd, n)?)?;
                let mut rhs = QNum::zero(n);
                for (z, m) in &direct {
                    rhs = rhs.try_add(
                        &dim_wreath(z, fd, n)?.scale(&Rational::from_integer((*m).into())),
                    )?;
                }
                dims.check(lhs == rhs, || {
                    format!("N={n} x={} y={}: {lhs} vs {rhs}", r(x), r(y))
                });
            }
            let xbar = conj_word(x, fd);
            for (z, m) in &direct {
                let back = fuse(&xbar, z, fd).get(y).copied().unwrap_or(0);
                frob.check(back == *m, || {
                    format!("x={} y={} z={}: {m} vs {back}", r(x), r(y), r(z))
                });
            }
        }
    }
    agree.into_report(&mut report, "closed formula = free product recursion");
    dims.into_report(&mut report, "dim(x)·dim(y) = Σ mult·dim(z)");
    frob.into_report(&mut report, "mult(z in x⊗y) = mult(y in x̄⊗z)");

    let mut poly = Tally::default();
    for x in &words {
        let p = central_char_poly(x, fd);
        for &n in ns {
            let lhs = QNum::from_rat(Rational::from_integer(p.eval_int(&Integer::from(n))), n);
            let rhs = dim_wreath(x, fd, n)?;
            poly.check(lhs == rhs, || {
                format!("N={n} x={}: P(N)={lhs}, dim={rhs}", r(x))
            });
        }
    }
    poly.into_report(&mut report, "P_x(N) = dim(x)");
    Ok(report)
}
