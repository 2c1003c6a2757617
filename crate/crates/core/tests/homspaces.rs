mod common;

use common::trivial_mult_via_fusion;
use wreath_core::fusion::{all_words, FusionData, GroupDualFusion, TableFusion};
use wreath_core::homspaces::{dim_hom_wreath, enumerate_admissible, plain};
use wreath_core::linmaps::group_dual_admissible;
use wreath_core::partitions::{enumerate, Mode};

fn check_dual_paths<F: FusionData>(fd: &F) {
    let irreps = fd.irreps().unwrap();
    for t in all_words(&irreps, 4) {
        let lhs = dim_hom_wreath(&[], &plain(&t.letters), fd).unwrap();
        assert_eq!(
            lhs,
            trivial_mult_via_fusion(&t.letters, fd),
            "tuple {:?}",
            t.letters
        );
    }
}

#[test]
fn dual_paths_agree() {
    check_dual_paths(&GroupDualFusion::cyclic(2).unwrap());
    check_dual_paths(&GroupDualFusion::cyclic(3).unwrap());
    check_dual_paths(&TableFusion::dual_s3());
}

#[test]
fn symmetric_in_up_and_down() {
    let fd = TableFusion::dual_s3();
    for up in all_words(&[0, 1, 2], 2) {
        for down in all_words(&[0, 1, 2], 2) {
            let a = dim_hom_wreath(&plain(&up.letters), &plain(&down.letters), &fd).unwrap();
            let b = dim_hom_wreath(&plain(&down.letters), &plain(&up.letters), &fd).unwrap();
            assert_eq!(a, b);
        }
    }
}

#[test]
fn group_dual_admissibility_matches_linmaps() {
    for s in [2usize, 3] {
        let fd = GroupDualFusion::cyclic(s).unwrap();
        let letters: Vec<usize> = (0..s).collect();
        for up in all_words(&letters, 2) {
            for down in all_words(&letters, 2) {
                let k = up.len();
                let l = down.len();
                let adm =
                    enumerate_admissible(&plain(&up.letters), &plain(&down.letters), &fd).unwrap();
                let mut expected = Vec::new();
                for p in enumerate(k, l, Mode::NonCrossing).unwrap() {
                    if group_dual_admissible(&p, fd.group(), &up.letters, &down.letters).unwrap() {
                        expected.push(p);
                    }
                }
                let got: Vec<_> = adm.iter().map(|d| d.base.clone()).collect();
                assert_eq!(got, expected);
                assert!(adm.iter().all(|d| d.weight() == 1));
            }
        }
    }
}
