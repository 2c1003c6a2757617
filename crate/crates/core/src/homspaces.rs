//! Hom-space dimensions between tensor products of basic representations
//! `r(α)` of `G ≀* S_N^+`, counted over decorated admissible non-crossing
//! partitions. Valid for every `N ≥ 4`, so no `N` appears.

use crate::fusion::{add_to, FusionData, Multiset};
use crate::partitions::{enumerate, Mode, Partition};
use crate::{Error, Result};

/// An irreducible of `G`, conjugated when the flag is set.
pub type Decoration<L> = (L, bool);

/// A non-crossing partition with labelled points and the `Hom_G` dimension
/// of each block (in the partition's block order).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecoratedPartition<L> {
    pub base: Partition,
    pub upper_labels: Vec<Decoration<L>>,
    pub lower_labels: Vec<Decoration<L>>,
    pub block_dims: Vec<u64>,
}

impl<L> DecoratedPartition<L> {
    pub fn weight(&self) -> u64 {
        self.block_dims.iter().product()
    }
}

fn resolve<F: FusionData>(d: &Decoration<F::Label>, fd: &F) -> F::Label {
    if d.1 {
        fd.conj(&d.0)
    } else {
        d.0.clone()
    }
}

/// Decomposition of an ordered tensor product of decorations.
pub fn tensor_all<F: FusionData>(labels: &[Decoration<F::Label>], fd: &F) -> Multiset<F::Label> {
    let mut acc = Multiset::from([(fd.trivial(), 1)]);
    for d in labels {
        let x = resolve(d, fd);
        let mut next = Multiset::new();
        for (a, m) in &acc {
            for (c, k) in fd.tensor(a, &x) {
                add_to(&mut next, c, m * k);
            }
        }
        acc = next;
    }
    acc
}

/// `dim Hom_G(⊗ up, ⊗ down)`.
pub fn dim_hom_g<F: FusionData>(
    up: &[Decoration<F::Label>],
    down: &[Decoration<F::Label>],
    fd: &F,
) -> u64 {
    let u = tensor_all(up, fd);
    let d = tensor_all(down, fd);
    u.iter()
        .map(|(a, m)| m * d.get(a).copied().unwrap_or(0))
        .sum()
}

/// All `p ∈ NC(k, l)` whose blocks have nonzero `Hom_G` dimension.
pub fn enumerate_admissible<F: FusionData>(
    up: &[Decoration<F::Label>],
    down: &[Decoration<F::Label>],
    fd: &F,
) -> Result<Vec<DecoratedPartition<F::Label>>> {
    let mut out = Vec::new();
    for p in enumerate(up.len(), down.len(), Mode::NonCrossing)? {
        let mut dims = Vec::with_capacity(p.num_blocks());
        for (u, d) in p.block_rows() {
            let bu: Vec<_> = u.iter().map(|&x| up[x - 1].clone()).collect();
            let bd: Vec<_> = d.iter().map(|&x| down[x - 1].clone()).collect();
            let dim = dim_hom_g(&bu, &bd, fd);
            if dim == 0 {
                break;
            }
            dims.push(dim);
        }
        if dims.len() == p.num_blocks() {
            out.push(DecoratedPartition {
                base: p,
                upper_labels: up.to_vec(),
                lower_labels: down.to_vec(),
                block_dims: dims,
            });
        }
    }
    Ok(out)
}

/// `dim Hom(r(α_1)⊗…, r(β_1)⊗…)` as a sum over admissible partitions.
pub fn dim_hom_wreath<F: FusionData>(
    up: &[Decoration<F::Label>],
    down: &[Decoration<F::Label>],
    fd: &F,
) -> Result<u64> {
    Ok(enumerate_admissible(up, down, fd)?
        .iter()
        .map(|d| d.weight())
        .sum())
}

/// Parses `α,β*` (empty string for no labels).
pub fn parse_decorations<F: FusionData>(s: &str, fd: &F) -> Result<Vec<Decoration<F::Label>>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(vec![]);
    }
    s.split(',')
        .map(|t| {
            let t = t.trim();
            let (name, star) = match t.strip_suffix('*') {
                Some(n) => (n.trim(), true),
                None => (t, false),
            };
            if name.is_empty() {
                return Err(Error::parse(format!("empty label in {s:?}")));
            }
            Ok((fd.parse_label(name)?, star))
        })
        .collect()
}

pub fn plain<L: Clone>(labels: &[L]) -> Vec<Decoration<L>> {
    labels.iter().map(|l| (l.clone(), false)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fusion::{GroupDualFusion, TableFusion};

    #[test]
    fn schur() {
        let fd = TableFusion::dual_s3();
        for a in 0..3 {
            for b in 0..3 {
                assert_eq!(
                    dim_hom_g(&[(a, false)], &[(b, false)], &fd),
                    u64::from(a == b)
                );
            }
        }
        let z = GroupDualFusion::cyclic(2).unwrap();
        assert_eq!(dim_hom_g(&[], &plain(&[1, 1]), &z), 1);
        let z3 = GroupDualFusion::cyclic(3).unwrap();
        assert_eq!(dim_hom_g(&[], &[(1, false), (1, true)], &z3), 1);
        assert_eq!(dim_hom_g(&[], &plain(&[1, 1]), &z3), 0);
        // std ⊗ std ⊗ std contains the trivial rep once
        assert_eq!(dim_hom_g(&[], &plain(&[2, 2, 2]), &fd), 1);
        assert_eq!(dim_hom_g(&plain(&[2, 2]), &plain(&[2, 2]), &fd), 3);
    }

    #[test]
    fn corollary_examples() {
        let fd = TableFusion::dual_s3();
        let through = Partition::identity(1);
        for a in [1usize, 2] {
            let adm = enumerate_admissible(&plain(&[a]), &plain(&[a]), &fd).unwrap();
            assert_eq!(adm.len(), 1);
            assert_eq!(adm[0].base, through);
            assert_eq!(dim_hom_wreath(&plain(&[a]), &plain(&[a]), &fd).unwrap(), 1);
        }
        assert_eq!(
            enumerate_admissible(&plain(&[0]), &plain(&[0]), &fd)
                .unwrap()
                .len(),
            2
        );
        assert_eq!(dim_hom_wreath(&plain(&[0]), &plain(&[0]), &fd).unwrap(), 2);
        assert_eq!(dim_hom_wreath(&[], &plain(&[0, 0, 0]), &fd).unwrap(), 5);
        let z = GroupDualFusion::cyclic(2).unwrap();
        let adm = enumerate_admissible(&[], &plain(&[1, 1]), &z).unwrap();
        assert_eq!(adm.len(), 1);
        assert_eq!(adm[0].base, Partition::one_block(0, 2));
    }

    #[test]
    fn parse() {
        let fd = TableFusion::dual_s3();
        assert_eq!(
            parse_decorations("sgn, std*", &fd).unwrap(),
            vec![(1, false), (2, true)]
        );
        assert!(parse_decorations("", &fd).unwrap().is_empty());
        assert!(parse_decorations("x", &fd).is_err());
        assert!(parse_decorations("1,", &fd).is_err());
    }
}
