use proptest::prelude::*;
use twisted_doubles::groups::{
    find_isomorphism, invariant_factors_of, is_isomorphic, FiniteAbelianGroup, FiniteGroup, GroupError,
};
use twisted_doubles::nichols::d8;
use twisted_doubles::tqd::{grouplike_group, TqdAlgebra};
use twisted_doubles::cocycles::CocycleParams;

fn abelian(f: &[u64]) -> FiniteGroup {
    FiniteAbelianGroup::new(f.to_vec()).unwrap().to_finite_group()
}

fn names(g: &FiniteGroup, xs: &[usize]) -> Vec<String> {
    let mut v: Vec<String> = xs.iter().map(|&x| g.name(x).to_string()).collect();
    v.sort();
    v
}

fn strs(xs: &[&str]) -> Vec<String> {
    let mut v: Vec<String> = xs.iter().map(|s| s.to_string()).collect();
    v.sort();
    v
}

#[test]
fn abelian_groups_in_invariant_factor_form() {
    assert_eq!(FiniteAbelianGroup::new(vec![2, 2, 2]).unwrap().order(), 8);
    assert_eq!(FiniteAbelianGroup::new(vec![4]).unwrap().order(), 4);
    assert!(matches!(FiniteAbelianGroup::new(vec![2, 3]), Err(GroupError::ChainViolation { .. })));
    assert!(matches!(FiniteAbelianGroup::new(vec![1]), Err(GroupError::BadFactor(1))));
}

#[test]
fn dihedral_classes_and_centralizers() {
    let g = FiniteGroup::dihedral8();
    assert_eq!(g.order(), 8);
    let x = g.element_by_name("x").unwrap();
    let y = g.element_by_name("y").unwrap();
    let x2 = g.element_by_name("x^2").unwrap();
    assert_eq!(names(&g, &g.conjugacy_data(x).class), strs(&["x", "x^3"]));
    assert_eq!(names(&g, &g.conjugacy_data(x).centralizer), strs(&["1", "x", "x^2", "x^3"]));
    assert_eq!(names(&g, &g.conjugacy_data(y).class), strs(&["y", "x^2y"]));
    let cy = g.centralizer(y);
    assert_eq!(names(&g, &cy), strs(&["1", "y", "x^2", "x^2y"]));
    assert!(cy.iter().all(|&a| g.element_order(a) <= 2));
    assert_eq!(g.conjugacy_data(x2).class, vec![x2]);
    assert_eq!(g.conjugacy_data(x2).centralizer.len(), 8);
}

#[test]
fn d8_module_constants_name_the_right_elements() {
    let g = d8::group();
    assert_eq!(g.name(d8::X), "x");
    assert_eq!(g.name(d8::X2), "x^2");
    assert_eq!(g.name(d8::X3), "x^3");
    assert_eq!(g.name(d8::Y), "y");
    assert_eq!(g.name(d8::XY), "xy");
}

#[test]
fn central_extension_examples() {
    let k = FiniteAbelianGroup::new(vec![2, 2]).unwrap();
    let z2 = FiniteAbelianGroup::cyclic(2).unwrap();
    let kel: Vec<Vec<u64>> = k.elements().collect();
    let twisted = FiniteGroup::central_extension(&k, &z2, |a, b| (kel[b][0] * kel[a][1]) as usize).unwrap();
    assert_eq!(twisted.order(), 8);
    assert!(!twisted.is_abelian());
    assert!(is_isomorphic(&twisted, &FiniteGroup::dihedral8()).unwrap());

    let split = FiniteGroup::central_extension(&k, &z2, |_, _| 0).unwrap();
    assert!(is_isomorphic(&split, &abelian(&[2, 2, 2])).unwrap());

    let z4 = FiniteGroup::central_extension(&z2, &z2, |a, b| (a == 1 && b == 1) as usize).unwrap();
    assert!((0..4).any(|e| z4.element_order(e) == 4));
    assert_eq!(invariant_factors_of(&z4).unwrap(), vec![4]);

    assert!(matches!(FiniteGroup::central_extension(&z2, &z2, |_, _| 1), Err(GroupError::NotNormalized)));
}

#[test]
fn extension_kernel_is_central_and_projection_surjects() {
    let k = FiniteAbelianGroup::new(vec![2, 2]).unwrap();
    let z2 = FiniteAbelianGroup::cyclic(2).unwrap();
    let kel: Vec<Vec<u64>> = k.elements().collect();
    let e = FiniteGroup::central_extension(&k, &z2, |a, b| (kel[b][0] * kel[a][1]) as usize).unwrap();
    let nk = k.order();
    let kernel: Vec<usize> = (0..e.order()).filter(|x| x % nk == 0).collect();
    assert_eq!(kernel.len(), z2.order());
    assert!(kernel.iter().all(|&z| (0..e.order()).all(|g| e.commute(z, g))));
    let kg = k.to_finite_group();
    let proj: Vec<usize> = (0..e.order()).map(|x| x % nk).collect();
    assert!(e.is_homomorphism(&proj, &kg));
}

#[test]
fn isomorphism_examples() {
    let d8 = FiniteGroup::dihedral8();
    assert!(!is_isomorphic(&abelian(&[4]), &abelian(&[2, 2])).unwrap());
    assert!(!is_isomorphic(&d8, &abelian(&[2, 2, 2])).unwrap());
    assert!(!is_isomorphic(&d8, &FiniteGroup::quaternion8()).unwrap());
    let phi = find_isomorphism(&d8, &d8).unwrap();
    assert!(d8.is_homomorphism(&phi, &d8));
}

#[test]
fn invariant_factors_examples() {
    assert_eq!(invariant_factors_of(&abelian(&[2, 2])).unwrap(), vec![2, 2]);
    assert_eq!(invariant_factors_of(&abelian(&[9])).unwrap(), vec![9]);
    let gg = grouplike_group(&TqdAlgebra::from_params(&CocycleParams::cyclic(4, 1).unwrap())).unwrap();
    assert_eq!(invariant_factors_of(&gg.group).unwrap(), vec![2, 8]);
    assert!(matches!(invariant_factors_of(&FiniteGroup::dihedral8()), Err(GroupError::NotAbelian)));
}

#[test]
fn from_table_rejects_non_groups() {
    let names: Vec<String> = vec!["a".into(), "b".into()];
    assert!(FiniteGroup::from_table(vec![0, 0, 0, 0], names.clone()).is_err());
    assert!(FiniteGroup::from_table(vec![0, 1, 1, 0], names).is_ok());
}

fn small_groups() -> Vec<FiniteGroup> {
    let mut v = vec![FiniteGroup::dihedral8(), FiniteGroup::quaternion8()];
    for f in [vec![2], vec![3], vec![4], vec![6], vec![2, 2], vec![2, 4], vec![3, 3], vec![2, 2, 2], vec![2, 8]] {
        v.push(abelian(&f));
    }
    v
}

#[test]
fn group_axioms_hold_on_corpus() {
    for g in small_groups() {
        let n = g.order();
        let e = g.identity();
        for a in 0..n {
            assert_eq!(g.mul(a, e), a);
            assert_eq!(g.mul(g.inv(a), a), e);
            for b in 0..n {
                for c in 0..n {
                    assert_eq!(g.mul(g.mul(a, b), c), g.mul(a, g.mul(b, c)));
                }
            }
        }
    }
}

#[test]
fn classes_partition_and_orbit_stabilizer() {
    for g in small_groups() {
        let n = g.order();
        let mut seen = vec![false; n];
        for s in 0..n {
            let d = g.conjugacy_data(s);
            assert_eq!(d.class.len() * d.centralizer.len(), n);
            assert_eq!(d.class.len(), d.reps.len());
            for (t, r) in d.class.iter().zip(&d.reps) {
                assert_eq!(g.conj(*r, s), *t);
            }
            if !seen[s] {
                for &t in &d.class {
                    assert!(!seen[t]);
                    seen[t] = true;
                }
            }
        }
        assert!(seen.into_iter().all(|b| b));
    }
}

#[test]
fn isomorphism_is_reflexive_and_symmetric_on_corpus() {
    let corpus = small_groups();
    for a in &corpus {
        assert!(is_isomorphic(a, a).unwrap());
        for b in &corpus {
            assert_eq!(is_isomorphic(a, b).unwrap(), is_isomorphic(b, a).unwrap());
            if let Some(phi) = find_isomorphism(a, b) {
                assert!(a.is_homomorphism(&phi, b));
            }
        }
    }
}

proptest! {
    #[test]
    fn abelian_invariant_factors_round_trip(f in prop::sample::select(vec![
        vec![2u64], vec![5], vec![2, 2], vec![2, 6], vec![3, 3], vec![2, 2, 2], vec![2, 2, 4], vec![4, 4], vec![2, 12],
    ])) {
        prop_assert_eq!(invariant_factors_of(&abelian(&f)).unwrap(), f);
    }

    #[test]
    fn abelian_group_is_a_group(f in prop::sample::select(vec![vec![2u64, 4], vec![3, 6], vec![2, 2, 2]]), a in 0usize..64, b in 0usize..64) {
        let g = FiniteAbelianGroup::new(f).unwrap();
        let (a, b) = (g.element(a % g.order()), g.element(b % g.order()));
        prop_assert_eq!(g.mul(&a, &b), g.mul(&b, &a));
        prop_assert_eq!(g.mul(&a, &g.inv(&a)), vec![0; g.rank()]);
        prop_assert_eq!(g.element(g.index_of(&a)), a);
    }
}
