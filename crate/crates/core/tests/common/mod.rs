#![allow(dead_code)]

use num_traits::{One, Zero};
use wreath_core::fusion::{basic_rep, fuse_multisets, FusionData, Multiset, WreathWord};
use wreath_core::linmaps::{build_tp, projection_onto_span, unpack};
use wreath_core::partitions::{enumerate, Mode, Partition};
use wreath_core::weingarten::WeingartenTable;
use wreath_core::Rational;

/// Elements of Z/2 ≀ S_3 as (signs, permutation).
pub fn hyperoctahedral_3() -> Vec<([i64; 3], [usize; 3])> {
    let perms = [
        [0, 1, 2],
        [0, 2, 1],
        [1, 0, 2],
        [1, 2, 0],
        [2, 0, 1],
        [2, 1, 0],
    ];
    let mut out = Vec::new();
    for mask in 0..8 {
        let signs = [0, 1, 2].map(|i| if mask >> i & 1 == 1 { -1 } else { 1 });
        for p in perms {
            out.push((signs, p));
        }
    }
    out
}

/// Average over Z/2 ≀ S_3 of `χ^k`, where `χ(s, σ) = Σ_{σ(i)=i} χ_α(s_i)`.
pub fn hyperoctahedral_average(chi: impl Fn(i64) -> i64, k: u32) -> Rational {
    let group = hyperoctahedral_3();
    let total: i64 = group
        .iter()
        .map(|(s, p)| {
            let tr: i64 = (0..3).filter(|&i| p[i] == i).map(|i| chi(s[i])).sum();
            tr.pow(k)
        })
        .sum();
    Rational::new(total.into(), (group.len() as i64).into())
}

/// Characters of Z/2 (trivial, sign, regular) with their power moments.
pub fn z2_characters() -> [(fn(i64) -> i64, fn(usize) -> Rational); 3] {
    [
        (|_| 1, |_| Rational::one()),
        (
            |s| s,
            |j| Rational::from_integer(((j % 2 == 0) as i64).into()),
        ),
        (
            |s| 1 + s,
            |j| {
                if j == 0 {
                    Rational::one()
                } else {
                    Rational::from_integer((1i64 << (j - 1)).into())
                }
            },
        ),
    ]
}

/// Multiplicity of `()` in `r(α_1) ⊗ … ⊗ r(α_k)` by iterated fusion.
pub fn trivial_mult_via_fusion<F: FusionData>(tuple: &[F::Label], fd: &F) -> u64 {
    let mut acc: Multiset<WreathWord<F::Label>> = Multiset::from([(WreathWord::empty(), 1)]);
    for a in tuple {
        acc = fuse_multisets(&acc, &basic_rep(a, fd), fd);
    }
    acc.get(&WreathWord::empty()).copied().unwrap_or(0)
}

pub fn tuple(idx: u64, n: u64, r: usize) -> Vec<u64> {
    unpack(idx, n, r).into_iter().map(|d| d + 1).collect()
}

/// Compares `h(u_{kl})` for trivial `G` with the orthogonal projection onto
/// the span of the `T_p`, returning the first mismatch.
pub fn projection_mismatch(t: &WeingartenTable) -> Option<String> {
    let (n, r) = (t.n, t.k);
    let vectors: Vec<Vec<Rational>> = enumerate(0, r, Mode::NonCrossing)
        .unwrap()
        .iter()
        .map(|p| {
            build_tp::<Rational>(p, n)
                .unwrap()
                .to_dense_vector()
                .unwrap()
        })
        .collect();
    let proj = projection_onto_span(&vectors);
    let ones = vec![1u64; r];
    let dim = n.pow(r as u32);
    for a in 0..dim {
        for b in 0..dim {
            let (k, l) = (tuple(a, n, r), tuple(b, n, r));
            let h = t.haar_state(&ones, &ones, &k, &l).unwrap();
            if h != proj[(a as usize, b as usize)] {
                return Some(format!(
                    "N={n} k={k:?} l={l:?}: {h} vs {}",
                    proj[(a as usize, b as usize)]
                ));
            }
        }
    }
    None
}

/// Checks that rows and columns of the magic unitary sum to one inside the
/// Haar state: `Σ_{j,l} h(w_{ij,kl} x) = h(x)` for `x` of degree one.
pub fn marginal_mismatch(t1: &WeingartenTable, t2: &WeingartenTable) -> Option<String> {
    let (n, s) = (t1.n, t1.s);
    for i in 1..=s {
        for k in 1..=n {
            for (i2, j2, k2, l2) in [(1, s, 1, n), (s, 1, 2, 1)] {
                let x = t1.haar_state(&[i2], &[j2], &[k2], &[l2]).unwrap();
                let mut row = Rational::zero();
                let mut col = Rational::zero();
                for j in 1..=s {
                    for l in 1..=n {
                        row += t2
                            .haar_state(&[i, i2], &[j, j2], &[k, k2], &[l, l2])
                            .unwrap();
                        col += t2
                            .haar_state(&[j, i2], &[i, j2], &[l, k2], &[k, l2])
                            .unwrap();
                    }
                }
                if row != x || col != x {
                    return Some(format!(
                        "N={n} s={s} i={i} k={k}: row {row}, column {col}, expected {x}"
                    ));
                }
            }
        }
    }
    None
}

pub fn kernel_of(t: &[u64]) -> Partition {
    Partition::kernel(t)
}
