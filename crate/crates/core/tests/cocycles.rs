use std::sync::Arc;

use proptest::prelude::*;
use twisted_doubles::cocycles::{
    coboundary_of_2cochain, eval_omega, f3_pullback, gamma, inflate, is_abelian, is_coboundary, omega_g, theta,
    verify_3cocycle, CocycleCheck, CocycleError, CocycleParams, Cochain3,
};
use twisted_doubles::exactmath::RootOfUnity;
use twisted_doubles::fixtures::z2cubed_a123;
use twisted_doubles::groups::{FiniteAbelianGroup, FiniteGroup};
use twisted_doubles::tqd::{grouplike_group, TqdAlgebra};

const MINUS: RootOfUnity = RootOfUnity::MINUS_ONE;

fn group(f: &[u64]) -> FiniteAbelianGroup {
    FiniteAbelianGroup::new(f.to_vec()).unwrap()
}

fn params(f: &[u64], a1: &[u64], a2: &[((usize, usize), u64)], a3: &[((usize, usize, usize), u64)]) -> CocycleParams {
    CocycleParams::new(group(f), a1.to_vec(), a2.iter().copied().collect(), a3.iter().copied().collect()).unwrap()
}

/// Standard generators `(e_i, m_i)` of an abelian group, as indices of its Cayley table.
fn generators(g: &FiniteAbelianGroup) -> Vec<(usize, u64)> {
    (0..g.rank())
        .map(|i| {
            let mut e = vec![0; g.rank()];
            e[i] = 1;
            (g.index_of(&e), g.factors()[i])
        })
        .collect()
}

#[test]
fn evaluation_examples() {
    let z2 = CocycleParams::cyclic(2, 1).unwrap();
    assert_eq!(eval_omega(&z2, &[1], &[1], &[1]), MINUS);
    let zero = CocycleParams::zero(group(&[2, 4]));
    let g = zero.group().clone();
    for u in g.elements() {
        for v in g.elements() {
            for w in g.elements() {
                assert_eq!(eval_omega(&zero, &u, &v, &w), RootOfUnity::ONE);
            }
        }
    }
    let a123 = z2cubed_a123();
    assert_eq!(eval_omega(&a123, &[0, 0, 1], &[0, 1, 0], &[1, 0, 0]), MINUS);
    assert_eq!(eval_omega(&a123, &[1, 0, 0], &[0, 1, 0], &[0, 0, 1]), RootOfUnity::ONE);
}

#[test]
fn parameter_validation() {
    assert!(matches!(CocycleParams::cyclic(4, 4), Err(CocycleError::OutOfRange { .. })));
    assert!(CocycleParams::new(group(&[2, 2]), vec![0], Default::default(), Default::default()).is_err());
    assert_eq!(CocycleParams::enumerate(&group(&[2, 2, 2])).len(), 128);
    assert_eq!(CocycleParams::enumerate(&group(&[2, 4])).len(), 16);
    assert_eq!(CocycleParams::enumerate(&group(&[6])).len(), 6);
}

#[test]
fn params_json_round_trip() {
    for p in CocycleParams::enumerate(&group(&[2, 2, 2])) {
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(serde_json::from_str::<CocycleParams>(&s).unwrap(), p);
    }
}

#[test]
fn verify_examples() {
    for p in CocycleParams::enumerate(&group(&[2, 2, 2])) {
        assert!(verify_3cocycle(&Cochain3::omega(&p)).is_valid());
    }
    let g = Arc::new(FiniteGroup::dihedral8());
    assert!(verify_3cocycle(&Cochain3::trivial(g)).is_valid());
}

#[test]
fn perturbed_cocycle_is_caught() {
    let w = Cochain3::omega(&CocycleParams::cyclic(4, 1).unwrap());
    let bad = w.with_value([1, 2, 3], w.eval(1, 2, 3) * RootOfUnity::zeta(4, 1));
    match verify_3cocycle(&bad) {
        CocycleCheck::Fails { at, value } => {
            assert!(at.contains(&1) || at.contains(&2) || at.contains(&3));
            assert_ne!(value, RootOfUnity::ONE);
        }
        other => panic!("expected a failing quadruple, got {other:?}"),
    }
    let unnormalized = w.with_value([0, 1, 1], MINUS);
    assert!(matches!(verify_3cocycle(&unnormalized), CocycleCheck::NotNormalized { .. }));
}

#[test]
fn derived_two_cochains() {
    let g = Arc::new(FiniteGroup::dihedral8());
    let t = Cochain3::trivial(g.clone());
    for a in 0..8 {
        for b in 0..8 {
            for c in 0..8 {
                assert_eq!(theta(&t, a, b, c), RootOfUnity::ONE);
                assert_eq!(gamma(&t, a, b, c), RootOfUnity::ONE);
                assert_eq!(omega_g(&t, a, b, c), RootOfUnity::ONE);
            }
        }
    }
    let z2 = Cochain3::omega(&CocycleParams::cyclic(2, 1).unwrap());
    assert_eq!(theta(&z2, 1, 1, 1), MINUS);
    assert_eq!(gamma(&z2, 1, 1, 1), MINUS);
    assert_eq!(omega_g(&z2, 1, 1, 1), MINUS);
    let z4 = Cochain3::omega(&CocycleParams::cyclic(4, 1).unwrap());
    assert_eq!(omega_g(&z4, 1, 2, 3), RootOfUnity::zeta(4, 1));
}

#[test]
fn abelian_parameters() {
    assert!(!is_abelian(&z2cubed_a123()));
    assert!(is_abelian(&CocycleParams::zero(group(&[2, 2, 2]))));
    assert!(is_abelian(&params(&[2, 2, 2], &[0, 0, 0], &[((0, 1), 1)], &[])));
}

#[test]
fn inflation() {
    let w = Cochain3::omega(&CocycleParams::cyclic(4, 3).unwrap());
    let same = inflate(&w, w.group().clone(), (0..4).collect()).unwrap();
    assert_eq!(same.table(), w.table());

    let gg = grouplike_group(&TqdAlgebra::from_params(&CocycleParams::cyclic(4, 1).unwrap())).unwrap();
    let e = Arc::new(gg.group.clone());
    let inv = w.inverse();
    let pulled = inflate(&inv, e.clone(), gg.projection.clone()).unwrap();
    let pi = &gg.projection;
    for a in 0..e.order() {
        for b in 0..e.order() {
            for c in [0, 1, 5, 7] {
                assert_eq!(pulled.eval(a, b, c), inv.eval(pi[a], pi[b], pi[c]));
            }
        }
    }
    assert!(verify_3cocycle(&pulled).is_valid());

    let trivial = inflate(&Cochain3::trivial(w.group().clone()), e.clone(), gg.projection.clone()).unwrap();
    assert!(trivial.table().iter().all(|r| r.is_one()));

    assert!(matches!(inflate(&w, e.clone(), vec![0; e.order()]), Err(CocycleError::NotSurjective)));
    let wrong: Vec<usize> = (0..e.order()).map(|x| (pi[x] + 1) % 4).collect();
    assert!(matches!(inflate(&w, e, wrong), Err(CocycleError::NotHomomorphism)));
}

#[test]
fn trivial_cocycle_pulls_back_to_ones() {
    let g = group(&[2, 4]);
    let c = Cochain3::trivial(Arc::new(g.to_finite_group()));
    let psi = f3_pullback(&c, &generators(&g)).unwrap();
    assert!(psi.lll.iter().all(|r| r.is_one()));
    assert!(psi.iij.iter().chain(&psi.ijj).all(|(_, r)| r.is_one()));
    let d = is_coboundary(&psi);
    assert!(d.coboundary);
    assert!(d.witnesses.iter().all(|(_, r)| r.is_one()));
}

#[test]
fn cyclic_representatives_are_not_coboundaries() {
    for m in 2..=12 {
        for a in 1..m {
            let w = Cochain3::omega(&CocycleParams::cyclic(m, a).unwrap());
            assert!(!is_coboundary(&f3_pullback(&w, &[(1, m)]).unwrap()).coboundary, "m={m} a={a}");
        }
    }
}

#[test]
fn pullback_rejects_bad_generators() {
    let g = group(&[2, 4]);
    let c = Cochain3::trivial(Arc::new(g.to_finite_group()));
    assert!(matches!(f3_pullback(&c, &[(g.index_of(&[0, 1]), 4)]), Err(CocycleError::NotGenerating(_))));
    assert!(matches!(f3_pullback(&c, &[(g.index_of(&[0, 1]), 2)]), Err(CocycleError::NotGenerating(_))));
    let d8 = Cochain3::trivial(Arc::new(FiniteGroup::dihedral8()));
    assert!(matches!(f3_pullback(&d8, &[(1, 4), (4, 2)]), Err(CocycleError::NotAbelian)));
}

/// Inflated `ω_a^{-1}` on the group-likes, restricted to a complement pair `t` (order `m²/d`), `u` (order `d`).
fn inflated_on_grouplikes(m: u64, a: u64) -> (Cochain3, Vec<(usize, u64)>) {
    let gg = grouplike_group(&TqdAlgebra::from_params(&CocycleParams::cyclic(m, a).unwrap())).unwrap();
    let e = Arc::new(gg.group.clone());
    let w = Cochain3::omega(&CocycleParams::cyclic(m, a).unwrap()).inverse();
    let pulled = inflate(&w, e.clone(), gg.projection.clone()).unwrap();
    let d = num_gcd(2 * a, m);
    let t = gg.t;
    let span_t = e.generated(&[t]);
    let u = (0..e.order())
        .find(|&u| e.element_order(u) as u64 == d && e.generated(&[u]).iter().all(|x| *x == e.identity() || !span_t.contains(x)))
        .unwrap();
    (pulled, vec![(u, d), (t, m * m / d)])
}

fn num_gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        num_gcd(b, a % b)
    }
}

#[test]
fn rank_two_grouplike_data() {
    // (m, 2a) | (m, a): the inflated class dies.
    let (c, gens) = inflated_on_grouplikes(6, 2);
    let d = is_coboundary(&f3_pullback(&c, &gens).unwrap());
    assert!(d.coboundary, "{:?}", d.reason);
    // (m, 2a) ∤ (m, a): it survives.
    let (c, gens) = inflated_on_grouplikes(2, 1);
    assert!(!is_coboundary(&f3_pullback(&c, &gens).unwrap()).coboundary);
}

fn random_coboundary(f: &[u64], values: &[i64], n: u64) -> (Cochain3, Vec<(usize, u64)>) {
    let ag = group(f);
    let g = Arc::new(ag.to_finite_group());
    let order = g.order();
    let table: Vec<RootOfUnity> = (0..order * order)
        .map(|i| if i < order || i % order == 0 { RootOfUnity::ONE } else { RootOfUnity::zeta(n, values[i % values.len()]) })
        .collect();
    (coboundary_of_2cochain(g, move |a, b| table[a * order + b]), generators(&ag))
}

fn abelian_groups() -> impl Strategy<Value = Vec<u64>> {
    prop::sample::select(vec![vec![2u64, 4], vec![3, 3], vec![2, 2, 2], vec![8], vec![4, 4], vec![2, 2, 4], vec![2, 2, 2, 2]])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn coboundaries_are_accepted(
        f in prop::sample::select(vec![vec![2u64, 4], vec![3, 3], vec![2, 2, 2], vec![6]]),
        values in prop::collection::vec(0i64..12, 1..40),
    ) {
        let (c, gens) = random_coboundary(&f, &values, 12);
        prop_assert!(verify_3cocycle(&c).is_valid());
        let d = is_coboundary(&f3_pullback(&c, &gens).unwrap());
        prop_assert!(d.coboundary, "{:?}", d.reason);
    }

    #[test]
    fn representatives_are_normalized_cocycles(f in abelian_groups(), seed in 0usize..1000) {
        let all = CocycleParams::enumerate(&group(&f));
        let p = &all[seed % all.len()];
        let c = Cochain3::omega(p);
        prop_assert!(c.normalization_defect().is_none());
        prop_assert!(verify_3cocycle(&c).is_valid());
    }

    #[test]
    fn omega_g_is_a_two_cocycle(f in abelian_groups(), seed in 0usize..1000) {
        let all = CocycleParams::enumerate(&group(&f));
        let c = Cochain3::omega(&all[seed % all.len()]).tabulate();
        let g = c.group().clone();
        let n = g.order();
        for s in 0..n {
            for x in 0..n {
                for y in 0..n {
                    for z in 0..n {
                        let lhs = omega_g(&c, s, x, y) * omega_g(&c, s, g.mul(x, y), z);
                        let rhs = omega_g(&c, s, y, z) * omega_g(&c, s, x, g.mul(y, z));
                        prop_assert_eq!(lhs, rhs);
                    }
                }
            }
        }
    }
}
