use num_bigint::BigInt;
use num_rational::BigRational;

use lambda_transitive::constructions::{
    classical_group, fano_blocks, nu_identities_check, product_construct, r_by_split, validate_design,
    BijectionAssignment, GroupKind, DEFAULT_GROUP_CAP,
};
use lambda_transitive::partitions::Partition;
use lambda_transitive::perm::{alternating_group, symmetric_group};
use lambda_transitive::transitivity::{check_character, check_oracle, profile, Method, DEFAULT_ORACLE_BUDGET};

fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

fn int(x: u64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

fn extended_fano() -> Vec<Vec<usize>> {
    let mut blocks: Vec<Vec<usize>> = fano_blocks()
        .into_iter()
        .map(|mut b| {
            b.push(8);
            b
        })
        .collect();
    blocks.extend(fano_blocks().iter().map(|b| (1..=7).filter(|x| !b.contains(x)).collect::<Vec<_>>()));
    blocks
}

#[test]
fn full_symmetric_components_give_the_size_identity() {
    // |D| = |B| (t+1)! (n-t-1)! when D1 = S_{t+1} and D2 = S_{n-t-1}.
    let fano = validate_design(7, 3, &fano_blocks(), None).unwrap();
    let d = product_construct(&fano, &symmetric_group(3), &symmetric_group(4), &BijectionAssignment::ascending(&fano))
        .unwrap();
    assert_eq!(d.len(), 7 * 6 * 24);
    let v = check_character(&d, &p("5,1,1")).unwrap();
    assert!(v.transitive);
    // r = |D| (n-t)! / n!
    assert_eq!(v.r, int(1008 * 120 / 5040));

    let ext = validate_design(8, 4, &extended_fano(), None).unwrap();
    assert_eq!(ext.strength(), 3);
    assert!(nu_identities_check(&ext).holds);
    let (s4, bij) = (symmetric_group(4), BijectionAssignment::ascending(&ext));
    let d = product_construct(&ext, &s4, &s4, &bij).unwrap();
    let expected = ext.blocks().len() * 24 * 24;
    assert_eq!(d.len(), expected);
    let v = check_character(&d, &p("5,1,1,1")).unwrap();
    assert!(v.transitive);
    assert_eq!(v.r, int(8064 / 336));
    let r = r_by_split(&ext, &s4, &s4).unwrap();
    assert!(r.iter().all(|&(_, x)| x == 24), "{r:?}");
}

#[test]
fn fano_product_profile() {
    let fano = validate_design(7, 3, &fano_blocks(), None).unwrap();
    let d = product_construct(&fano, &symmetric_group(3), &alternating_group(4), &BijectionAssignment::ascending(&fano))
        .unwrap();
    let by_character = profile(&d, Method::Character, DEFAULT_ORACLE_BUDGET, 0).unwrap();
    let by_oracle = profile(&d, Method::Oracle, DEFAULT_ORACLE_BUDGET, 0).unwrap();
    assert_eq!(by_character, by_oracle);
    assert_eq!(by_character.minimal, vec![p("5,1,1")]);
    assert!(!check_oracle(&d, &p("4,2,1"), DEFAULT_ORACLE_BUDGET).unwrap().transitive);
}

#[test]
fn field_order_32() {
    let ag = classical_group(GroupKind::AGammaL1, 32, DEFAULT_GROUP_CAP).unwrap();
    assert_eq!(ag.len(), 4960);
    let v = check_character(&ag, &p("29,3")).unwrap();
    assert!(v.transitive);
    assert_eq!(v.r, int(1));
    assert!(!check_character(&ag, &p("29,2,1")).unwrap().transitive);

    let pg = classical_group(GroupKind::PGammaL2, 32, DEFAULT_GROUP_CAP).unwrap();
    assert_eq!(pg.len(), 163_680);
    let v = check_character(&pg, &p("29,3,1")).unwrap();
    assert!(v.transitive);
    assert_eq!(v.r, int(1));
    assert!(!check_character(&pg, &p("29,2,1,1")).unwrap().transitive);
}

#[test]
fn projective_special_linear_family() {
    // (q-2, 2, 1) on q + 1 points for q = 3 mod 4.
    for q in [7u32, 11, 19] {
        let g = classical_group(GroupKind::Psl2, q, DEFAULT_GROUP_CAP).unwrap();
        let n = q as usize + 1;
        let la = Partition::new(vec![n - 3, 2, 1]).unwrap();
        let v = check_character(&g, &la).unwrap();
        assert!(v.transitive, "q={q}");
        assert_eq!(v.r, int(1));
    }
}
