//! Moments and free cumulants over colored non-crossing partitions, free
//! compound Poisson laws, character laws of `r(α)`, truncated characters,
//! and the classical wreath product `G ≀ S_n`.

use std::collections::HashMap;
use std::fmt;

use crate::fusion::FusionData;
use crate::homspaces::dim_hom_g;
use crate::partitions::{enumerate, Mode, Partition};
use crate::scalar::{pow_u, Scalar};
use crate::{caps, Error, Result};

/// A word in `{1, *}`; `true` marks `*`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct EpsWord(pub Vec<bool>);

impl EpsWord {
    pub fn plain(len: usize) -> Self {
        EpsWord(vec![false; len])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn flip(&self) -> Self {
        EpsWord(self.0.iter().map(|c| !c).collect())
    }

    /// Colors at the given 1-based positions.
    pub fn restrict(&self, positions: &[usize]) -> Self {
        EpsWord(positions.iter().map(|&i| self.0[i - 1]).collect())
    }

    /// All `2^len` words, in binary order.
    pub fn all(len: usize) -> Vec<Self> {
        (0..1u64 << len)
            .map(|m| EpsWord((0..len).map(|i| m >> (len - 1 - i) & 1 == 1).collect()))
            .collect()
    }

    /// Reads a string over `1` and `*`.
    pub fn parse(s: &str) -> Result<Self> {
        s.trim()
            .chars()
            .map(|c| match c {
                '1' => Ok(false),
                '*' => Ok(true),
                _ => Err(Error::parse(format!("{c:?} is not a color (use 1 or *)"))),
            })
            .collect::<Result<Vec<_>>>()
            .map(EpsWord)
    }
}

impl fmt::Display for EpsWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &c in &self.0 {
            f.write_str(if c { "*" } else { "1" })?;
        }
        Ok(())
    }
}

/// A function on colored words, such as `ε ↦ φ(X^{ε(1)} … X^{ε(r)})`.
pub trait MomentFunc<T> {
    fn moment(&self, eps: &EpsWord) -> Result<T>;
}

impl<T, F: Fn(&EpsWord) -> T> MomentFunc<T> for F {
    fn moment(&self, eps: &EpsWord) -> Result<T> {
        Ok(self(eps))
    }
}

/// Moments of a self-adjoint variable, given on lengths only.
pub struct Real<F>(pub F);

impl<T, F: Fn(usize) -> T> MomentFunc<T> for Real<F> {
    fn moment(&self, eps: &EpsWord) -> Result<T> {
        Ok((self.0)(eps.len()))
    }
}

/// Values on every word up to a maximal length.
#[derive(Clone, Debug, PartialEq)]
pub struct MomentTable<T> {
    pub max_len: usize,
    values: HashMap<EpsWord, T>,
}

impl<T: Clone> MomentTable<T> {
    pub fn get(&self, eps: &EpsWord) -> Option<&T> {
        self.values.get(eps)
    }

    /// Entries ordered by length, then colors.
    pub fn sorted(&self) -> Vec<(EpsWord, T)> {
        let mut v: Vec<_> = self
            .values
            .iter()
            .map(|(k, x)| (k.clone(), x.clone()))
            .collect();
        v.sort_by(|a, b| a.0.len().cmp(&b.0.len()).then_with(|| a.0.cmp(&b.0)));
        v
    }
}

impl<T: Clone> MomentFunc<T> for MomentTable<T> {
    fn moment(&self, eps: &EpsWord) -> Result<T> {
        self.values.get(eps).cloned().ok_or_else(|| {
            Error::invalid(format!(
                "word {eps} is outside the table (max length {})",
                self.max_len
            ))
        })
    }
}

fn nc_points(r: usize) -> Result<Vec<Partition>> {
    enumerate(0, r, Mode::NonCrossing)
}

/// `Σ_{p ∈ NC(|ε|)} Π_B f(ε(B))`.
fn nc_sum<T: Scalar>(
    parts: &[Partition],
    eps: &EpsWord,
    mut block: impl FnMut(&EpsWord) -> Result<T>,
) -> Result<T> {
    let mut total = T::zero();
    for p in parts {
        let mut term = T::one();
        for b in p.blocks() {
            term = term * block(&eps.restrict(b))?;
            if term.is_zero() {
                break;
            }
        }
        total = total + term;
    }
    Ok(total)
}

/// Free cumulants from moments, by recursion on length: `k(ε)` is `m(ε)`
/// minus the contribution of every non-full `p ∈ NC(ε)`.
pub fn moments_to_free_cumulants<T: Scalar>(
    m: &impl MomentFunc<T>,
    max_len: usize,
) -> Result<MomentTable<T>> {
    caps::check_points("moments_to_free_cumulants", max_len)?;
    let mut k: HashMap<EpsWord, T> = HashMap::new();
    k.insert(EpsWord::default(), T::one());
    for r in 1..=max_len {
        let parts: Vec<Partition> = nc_points(r)?
            .into_iter()
            .filter(|p| p.num_blocks() > 1)
            .collect();
        for eps in EpsWord::all(r) {
            let lower = nc_sum(&parts, &eps, |w| Ok(k[w].clone()))?;
            k.insert(eps.clone(), m.moment(&eps)? - lower);
        }
    }
    Ok(MomentTable { max_len, values: k })
}

/// Moments from free cumulants.
pub fn cumulants_to_moments<T: Scalar>(
    k: &impl MomentFunc<T>,
    max_len: usize,
) -> Result<MomentTable<T>> {
    caps::check_points("cumulants_to_moments", max_len)?;
    let mut m = HashMap::new();
    m.insert(EpsWord::default(), T::one());
    for r in 1..=max_len {
        let parts = nc_points(r)?;
        for eps in EpsWord::all(r) {
            let v = nc_sum(&parts, &eps, |w| k.moment(w))?;
            m.insert(eps, v);
        }
    }
    Ok(MomentTable { max_len, values: m })
}

/// Moment of the free compound Poisson law with the given initial law and
/// rate: `Σ_{p ∈ NC(ε)} Π_B λ m(ε(B))`.
pub fn compound_poisson_moments<T: Scalar>(
    initial: &impl MomentFunc<T>,
    lambda: &T,
    eps: &EpsWord,
) -> Result<T> {
    caps::check_points("compound_poisson_moments", eps.len())?;
    nc_sum(&nc_points(eps.len())?, eps, |w| {
        Ok(lambda.clone() * initial.moment(w)?)
    })
}

/// `h(χ^{ε(1)} … χ^{ε(r)})` for `χ` the character of `α`: the multiplicity
/// of the trivial representation in `α^{ε(1)} ⊗ … ⊗ α^{ε(r)}`.
pub fn character_moment_g<F: FusionData>(a: &F::Label, fd: &F, eps: &EpsWord) -> u64 {
    let labels: Vec<_> = eps.0.iter().map(|&c| (a.clone(), c)).collect();
    dim_hom_g(&[], &labels, fd)
}

/// Moments of the character of `r(α)` in `G ≀* S_N^+` (`N ≥ 4`).
pub fn character_moments_wreath<F: FusionData>(a: &F::Label, fd: &F, eps: &EpsWord) -> Result<u64> {
    caps::check_points("character_moments_wreath", eps.len())?;
    nc_sum(&nc_points(eps.len())?, eps, |w| {
        Ok(character_moment_g(a, fd, w))
    })
}

/// `Σ_{p ∈ NC(k)} t^{b(p)} Π_B m_{|B|}`, the limit moments of the
/// truncated character with parameter `t`.
pub fn partial_trace_moments<T: Scalar>(t: &T, chi_g: impl Fn(usize) -> T, k: usize) -> Result<T> {
    caps::check_points("partial_trace_moments", k)?;
    let mut total = T::zero();
    for p in nc_points(k)? {
        let mut term = pow_u(t, p.num_blocks() as u32);
        for b in p.blocks() {
            term = term * chi_g(b.len());
        }
        total = total + term;
    }
    Ok(total)
}

/// Moments of `χ_{α^n}` on `G ≀ S_n`: the sum over set partitions of `k`
/// points with at most `n` blocks of `Π_B m_α(|B|)`.
pub fn classical_wreath_moments<T: Scalar>(
    m_alpha: impl Fn(usize) -> T,
    n: usize,
    k: usize,
) -> Result<T> {
    let mut total = T::zero();
    for p in enumerate(0, k, Mode::All)? {
        if p.num_blocks() <= n {
            let mut term = T::one();
            for b in p.blocks() {
                term = term * m_alpha(b.len());
            }
            total = total + term;
        }
    }
    Ok(total)
}

/// The `n → ∞` limit: a classical compound Poisson law of rate one.
pub fn classical_wreath_limit<T: Scalar>(m_alpha: impl Fn(usize) -> T, k: usize) -> Result<T> {
    classical_wreath_moments(m_alpha, k.max(1), k)
}

/// `m_{S_n}(r)`: set partitions of `r` points with at most `n` blocks.
pub fn symmetric_group_moment(n: usize, r: usize) -> Result<u128> {
    Ok(enumerate(0, r, Mode::All)?
        .iter()
        .filter(|p| p.num_blocks() <= n)
        .count() as u128)
}
