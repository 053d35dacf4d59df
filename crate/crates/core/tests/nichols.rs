use std::collections::BTreeMap;
use std::sync::Arc;

use proptest::prelude::*;
use twisted_doubles::exactmath::{Cyclotomic, RootOfUnity};
use twisted_doubles::groups::{FiniteAbelianGroup, FiniteGroup};
use twisted_doubles::nichols::{
    adjoint_power, adjoint_rank, cartan_is_finite_type, cartan_matrix, cartan_matrix_of, d8, diagonal_cartan,
    diagonalize_braiding, is_braid_indecomposable, pair_witness, skeleton, symmetrize, symmetrizer_rank, yd_module,
    BraidedSpace, CartanEntry, EdgeStyle, ModuleSpec, MonomialRep, NicholsError, TensorElement, YDModule,
};

const MINUS: RootOfUnity = RootOfUnity::MINUS_ONE;

fn mods(list: &str) -> Vec<YDModule> {
    d8::parse_list(list).unwrap()
}

fn space(list: &str) -> BraidedSpace {
    BraidedSpace::from_modules(&mods(list)).unwrap()
}

fn v(entries: &[&[i64]]) -> Vec<Vec<CartanEntry>> {
    entries.iter().map(|r| r.iter().map(|&x| CartanEntry::Value(x)).collect()).collect()
}

#[test]
fn module_dimensions_and_labels() {
    for m in d8::all_modules() {
        assert_eq!(m.dim(), 2, "{}", m.name);
    }
    assert_eq!(d8::module(1).unwrap().labels(), vec!["1u1", "1u2"]);
    assert_eq!(d8::module(2).unwrap().labels(), vec!["1v", "yv"]);
    assert_eq!(d8::module(3).unwrap().labels(), vec!["1w1", "xw1"]);
    assert_eq!(d8::module(6).unwrap().labels(), vec!["1w4", "xw4"]);
    assert!(matches!(d8::module(7), Err(NicholsError::UnknownModule(_))));
    assert!(matches!(d8::parse_list("M1,M9"), Err(NicholsError::UnknownModule(_))));
}

#[test]
fn yd_module_examples() {
    let g = d8::group();
    let i_char = yd_module(g.clone(), d8::X, |h| {
        let k = (0..4).find(|&k| g.pow(d8::X, k) == h).unwrap();
        RootOfUnity::zeta(4, k)
    })
    .unwrap();
    assert_eq!(i_char.dim(), 2);

    let sgn = yd_module(g.clone(), d8::Y, |h| {
        let name = g.name(h);
        let mut r = RootOfUnity::ONE;
        if name.contains('y') {
            r = r * MINUS;
        }
        if name.starts_with("x^2") {
            r = r * MINUS;
        }
        r
    })
    .unwrap();
    assert_eq!(sgn.dim(), 2);
    assert_eq!(sgn.spec().character, d8::module(3).unwrap().spec().character);

    let trivial = yd_module(g.clone(), g.identity(), |_| RootOfUnity::ONE).unwrap();
    assert_eq!(trivial.dim(), 1);
    let s = BraidedSpace::from_modules(&[trivial]).unwrap();
    assert_eq!(s.braid(0, 0), (RootOfUnity::ONE, 0));

    let bad = yd_module(g.clone(), d8::Y, |h| if h == d8::Y { RootOfUnity::zeta(4, 1) } else { RootOfUnity::ONE });
    assert!(matches!(bad, Err(NicholsError::NotACharacter(_))));
    assert!(matches!(
        MonomialRep::character(&g, d8::X, &[(d8::Y, MINUS)]),
        Err(NicholsError::NotACharacter(_))
    ));
}

#[test]
fn yd_compatibility_on_all_modules() {
    for m in d8::all_modules() {
        let g = m.group().clone();
        for h in 0..g.order() {
            for b in 0..m.dim() {
                let (_, b2) = m.act(h, b);
                assert_eq!(m.degree(b2), g.conj(h, m.degree(b)));
            }
        }
        assert!(m.check_compatibility().is_ok());
    }
}

#[test]
fn braiding_examples() {
    let s = space("M1,M3");
    let (u1, w1) = (s.basis_by_label("1u1").unwrap(), s.basis_by_label("1w1").unwrap());
    assert_eq!(s.apply_c(0, &(RootOfUnity::ONE, vec![u1, w1])), (MINUS, vec![w1, u1]));
    let (q, word) = s.c_squared(u1, w1);
    assert_eq!((q, s.label(word[0]), s.label(word[1])), (RootOfUnity::ONE, "1u2", "1w1"));

    let s = space("M1,M2");
    assert_eq!(s.dim(), 4);
    for i in s.block(0) {
        for j in s.block(0) {
            assert_eq!(s.c_squared(i, j).1, vec![i, j]);
        }
    }
    assert!(matches!(
        BraidedSpace::from_modules(&[d8::module(1).unwrap(), yd_module(Arc::new(FiniteGroup::quaternion8()), 0, |_| RootOfUnity::ONE).unwrap()]),
        Err(NicholsError::MixedGroups)
    ));
}

#[test]
fn every_braiding_satisfies_the_braid_equation() {
    let all = BraidedSpace::from_modules(&d8::all_modules()).unwrap();
    assert_eq!(all.dim(), 12);
    assert_eq!(all.braid_equation_failure(), None);
    for (i, j, k) in d8::triples() {
        let s = space(&format!("M{i},M{j},M{k}"));
        assert_eq!(s.braid_equation_failure(), None);
    }
}

#[test]
fn diagonal_braiding_must_satisfy_braid_equation() {
    let q = vec![vec![MINUS, RootOfUnity::ONE], vec![RootOfUnity::ONE, MINUS]];
    assert!(BraidedSpace::diagonal(&q, vec!["a".into(), "b".into()]).is_ok());
}

#[test]
fn indecomposability_examples() {
    let ind = is_braid_indecomposable(&space("M1,M3"));
    assert!(ind.indecomposable);
    assert_eq!(ind.witness(), Some(&("1u1".to_string(), "1w1".to_string())));

    let g = d8::group();
    let trivial = yd_module(g.clone(), g.identity(), |_| RootOfUnity::ONE).unwrap();
    let ind = is_braid_indecomposable(&BraidedSpace::from_modules(&[trivial]).unwrap());
    assert!(!ind.indecomposable);
    assert!(ind.witness().is_none());

    for (i, j, k) in d8::triples() {
        if (i, j) == (1, 2) {
            continue;
        }
        assert!(is_braid_indecomposable(&space(&format!("M{i},M{j},M{k}"))).indecomposable);
    }
}

#[test]
fn symmetrizer_examples() {
    let labels = vec!["v".to_string()];
    let fermion = BraidedSpace::diagonal(&[vec![MINUS]], labels.clone()).unwrap();
    assert!(symmetrizer_rank(&fermion, &TensorElement::basis(vec![0, 0])).unwrap());
    let boson = BraidedSpace::diagonal(&[vec![RootOfUnity::ONE]], labels).unwrap();
    assert!(!symmetrizer_rank(&boson, &TensorElement::basis(vec![0, 0])).unwrap());
    let two = symmetrize(&boson, &TensorElement::basis(vec![0, 0])).unwrap();
    assert_eq!(two.coefficient(&[0, 0]), Some(&Cyclotomic::from_int(2, 1)));
    assert!(matches!(
        symmetrize(&boson, &TensorElement::basis(vec![0; 5])),
        Err(NicholsError::DegreeTooHigh(5))
    ));
}

#[test]
fn degree_two_symmetrizer_is_id_plus_c() {
    let s = BraidedSpace::from_modules(&d8::all_modules()).unwrap();
    for i in 0..s.dim() {
        for j in 0..s.dim() {
            let b = TensorElement::basis(vec![i, j]);
            let mut expected = b.clone();
            expected.add(&b.apply_c(&s, 0));
            assert_eq!(symmetrize(&s, &b).unwrap(), expected);
            let (q, word) = s.apply_c(0, &(RootOfUnity::ONE, vec![i, j]));
            let killed = word == vec![i, j] && q == MINUS;
            assert_eq!(symmetrizer_rank(&s, &b).unwrap(), killed);
        }
    }
}

#[test]
fn adjoint_examples() {
    let s = space("M1,M3");
    assert!(adjoint_power(&s, 0, 1, 0).unwrap());
    assert!(adjoint_power(&s, 0, 1, 1).unwrap());
    assert_eq!(adjoint_rank(&s, 0, 1, 1).unwrap(), 2);
    assert!(!adjoint_power(&s, 0, 1, 2).unwrap());
}

#[test]
fn cartan_examples() {
    let minus_one = v(&[&[2, -1, -1], &[-1, 2, -1], &[-1, -1, 2]]);
    assert_eq!(cartan_matrix_of(&mods("M1,M3,M5"), 3).unwrap(), minus_one);
    assert_eq!(cartan_matrix_of(&mods("M2,M3,M5"), 3).unwrap(), minus_one);
    assert_eq!(cartan_matrix_of(&mods("M4"), 3).unwrap(), v(&[&[2]]));
    assert!(matches!(cartan_matrix(&space("M1,M3"), 4), Err(NicholsError::DegreeTooHigh(5))));
    let capped = cartan_matrix(&space("M3,M6"), 1).unwrap();
    assert_eq!(capped[0][1], CartanEntry::AtMost(1));
    assert_eq!(capped[0][1].to_string(), "≤-1");
}

#[test]
fn skeleton_examples() {
    let check = |list: &str, expected: &[((usize, usize), EdgeStyle)]| {
        let m = mods(list);
        let sk = skeleton(&m, &cartan_matrix_of(&m, 3).unwrap()).unwrap();
        assert_eq!(sk.edges.len(), expected.len(), "{list}");
        for &((i, j), style) in expected {
            let e = sk.edge(i, j).unwrap();
            assert_eq!((e.style, e.count), (style, 1), "{list} edge {i}-{j}");
        }
        sk
    };
    use EdgeStyle::{Dashed, Solid};
    let sk = check("M1,M3,M5", &[((0, 1), Solid), ((0, 2), Solid), ((1, 2), Dashed)]);
    assert!(!sk.characters_only);
    assert!(sk.vertices.iter().all(|v| v.points == 2));
    let sk = check("M2,M3,M4", &[((1, 2), Solid), ((0, 1), Dashed), ((0, 2), Dashed)]);
    assert!(sk.characters_only);
    check("M2,M3,M5", &[((0, 1), Dashed), ((0, 2), Dashed), ((1, 2), Dashed)]);

    let m = mods("M1,M3,M6");
    let err = skeleton(&m, &cartan_matrix_of(&m, 3).unwrap()).unwrap_err();
    assert!(matches!(err, NicholsError::NotASkeleton { i: 1, j: 2, .. }));
}

fn show(q: &[Vec<RootOfUnity>]) -> Vec<Vec<String>> {
    q.iter().map(|r| r.iter().map(|x| format!("{}/{}", x.num(), x.den())).collect()).collect()
}

#[test]
fn diagonal_braiding_examples() {
    let d = diagonalize_braiding(&mods("M1,M2")).unwrap();
    assert_eq!(d.labels(), vec!["t1", "t2", "1v", "yv"]);
    assert!(d.transport_verified);
    assert_eq!(
        show(&d.matrix),
        vec![
            vec!["1/2", "1/2", "0/1", "0/1"],
            vec!["1/2", "1/2", "0/1", "0/1"],
            vec!["3/4", "1/4", "1/2", "1/2"],
            vec!["1/4", "3/4", "1/2", "1/2"],
        ]
    );
    let t1 = &d.eigenvectors[0];
    assert_eq!(t1.coefficients[0].1, Cyclotomic::one(1));
    assert_eq!(t1.coefficients[1].1, Cyclotomic::root(RootOfUnity::zeta(4, 1)));

    let d = diagonalize_braiding(&mods("M1,M3,M4")).unwrap();
    assert_eq!(d.labels(), vec!["t1", "t2", "1w1", "xw1", "1w2", "xw2"]);
    assert!(d.transport_verified);
    // t1 and t2 have the same degree x^2, so their rows agree.
    assert_eq!(d.matrix[0], d.matrix[1]);

    let z4 = Arc::new(FiniteAbelianGroup::cyclic(4).unwrap().to_finite_group());
    let one = yd_module(z4, 1, |h| RootOfUnity::zeta(4, h as i64)).unwrap();
    assert_eq!(diagonalize_braiding(&[one]).unwrap().matrix, vec![vec![RootOfUnity::zeta(4, 1)]]);

    assert!(matches!(diagonalize_braiding(&mods("M3,M5")), Err(NicholsError::NotAbelianSupport)));
}

#[test]
fn diagonal_cartan_of_m1_m2() {
    let d = diagonalize_braiding(&mods("M1,M2")).unwrap();
    let a = diagonal_cartan(&d.matrix);
    assert_eq!(a, v(&[&[2, 0, -1, -1], &[0, 2, -1, -1], &[-1, -1, 2, 0], &[-1, -1, 0, 2]]));
    assert!(!cartan_is_finite_type(&a));
    assert!(cartan_is_finite_type(&v(&[&[2, -1], &[-1, 2]])));
    assert!(!cartan_is_finite_type(&v(&[&[2, -1, -1], &[-1, 2, -1], &[-1, -1, 2]])));
}

#[test]
fn vanishing_entries_match_trivial_double_braiding() {
    let all = d8::all_modules();
    for i in 0..6 {
        for j in i + 1..6 {
            let pair = [all[i].clone(), all[j].clone()];
            let s = BraidedSpace::from_modules(&pair).unwrap();
            let a = cartan_matrix(&s, 3).unwrap();
            let zero_ij = a[0][1] == CartanEntry::Value(0);
            let zero_ji = a[1][0] == CartanEntry::Value(0);
            assert_eq!(zero_ij, zero_ji, "M{} M{}", i + 1, j + 1);
            assert_eq!(zero_ij, pair_witness(&s, 0, 1).is_none(), "M{} M{}", i + 1, j + 1);
        }
    }
}

#[test]
fn module_spec_round_trip() {
    for k in 1..=6 {
        let spec = d8::spec(k).unwrap();
        let json = serde_json::to_string(&spec).unwrap();
        let back: ModuleSpec = serde_json::from_str(&json).unwrap();
        assert_eq!(back, spec);
        let m = back.build().unwrap();
        assert_eq!(m.labels(), d8::module(k).unwrap().labels());
        assert_eq!(m.spec(), spec);
    }
    let m2: ModuleSpec = serde_json::from_str(r#"{"group":"D8","class_rep":"x","character":{"x":"1/2"}}"#).unwrap();
    let built = m2.build().unwrap();
    assert_eq!(built.dim(), 2);
    assert_eq!(built.rho().value(d8::X), Some(MINUS));
    let bad: ModuleSpec = serde_json::from_str(r#"{"group":"S3","class_rep":"x","character":{}}"#).unwrap();
    assert!(bad.build().is_err());
}

// Independent oracle: the quantum symmetrizer as a sum over all permutations of
// reduced-word lifts, with the braiding read off the module actions directly.

type Vector = BTreeMap<Vec<usize>, Cyclotomic>;

struct Oracle {
    modules: Vec<YDModule>,
    offsets: Vec<usize>,
}

impl Oracle {
    fn new(modules: Vec<YDModule>) -> Self {
        let mut offsets = vec![0];
        for m in &modules {
            offsets.push(offsets.last().unwrap() + m.dim());
        }
        Oracle { modules, offsets }
    }

    fn locate(&self, b: usize) -> (usize, usize) {
        let k = (0..self.modules.len()).find(|&k| b < self.offsets[k + 1]).unwrap();
        (k, b - self.offsets[k])
    }

    fn degree(&self, b: usize) -> usize {
        let (k, l) = self.locate(b);
        self.modules[k].degree(l)
    }

    fn act(&self, g: usize, b: usize) -> (RootOfUnity, usize) {
        let (k, l) = self.locate(b);
        let (q, l2) = self.modules[k].act(g, l);
        (q, self.offsets[k] + l2)
    }

    /// `c(x ⊗ y) = deg(x) ▷ y ⊗ x` at slots `p, p+1`.
    fn c(&self, p: usize, (q, mut w): (RootOfUnity, Vec<usize>)) -> (RootOfUnity, Vec<usize>) {
        let (r, y2) = self.act(self.degree(w[p]), w[p + 1]);
        w[p + 1] = w[p];
        w[p] = y2;
        (q * r, w)
    }

    fn symmetrize(&self, x: &Vector) -> Vector {
        let mut out = Vector::new();
        for (word, coeff) in x {
            let n = word.len();
            for perm in permutations(n) {
                let mut t = (RootOfUnity::ONE, word.clone());
                for p in reduced_word(&perm) {
                    t = self.c(p, t);
                }
                add(&mut out, t.1, coeff.mul_root(t.0));
            }
        }
        out.retain(|_, c| !c.is_zero());
        out
    }

    /// `ad_x(Y) = x Y - (deg(x) ▷ Y) x` in the tensor algebra.
    fn ad(&self, x: usize, y: &Vector) -> Vector {
        let g = self.degree(x);
        let mut out = Vector::new();
        for (word, coeff) in y {
            let mut front = vec![x];
            front.extend(word);
            add(&mut out, front, coeff.clone());
            let mut q = RootOfUnity::ONE;
            let mut moved = Vec::new();
            for &b in word {
                let (r, b2) = self.act(g, b);
                q = q * r;
                moved.push(b2);
            }
            moved.push(x);
            add(&mut out, moved, -coeff.mul_root(q));
        }
        out.retain(|_, c| !c.is_zero());
        out
    }

    /// Whether `ad^m_{M_i}(M_j)` is nonzero in the Nichols algebra.
    fn adjoint_nonzero(&self, i: usize, j: usize, m: usize) -> bool {
        let mut layer: Vec<Vector> =
            (self.offsets[j]..self.offsets[j + 1]).map(|b| Vector::from([(vec![b], Cyclotomic::one(1))])).collect();
        for _ in 0..m {
            layer = layer.iter().flat_map(|y| (self.offsets[i]..self.offsets[i + 1]).map(move |x| (x, y))).map(|(x, y)| self.ad(x, y)).collect();
        }
        layer.iter().any(|y| !self.symmetrize(y).is_empty())
    }
}

fn add(v: &mut Vector, w: Vec<usize>, c: Cyclotomic) {
    let e = v.entry(w).or_insert_with(|| Cyclotomic::zero(1));
    *e = &*e + &c;
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// Adjacent transpositions `s_p` with `s_{p_1} ... s_{p_k} = perm`, found by bubble sort, listed right to left.
fn reduced_word(perm: &[usize]) -> Vec<usize> {
    let mut p = perm.to_vec();
    let mut swaps = Vec::new();
    loop {
        let Some(i) = (0..p.len().saturating_sub(1)).find(|&i| p[i] > p[i + 1]) else { break };
        p.swap(i, i + 1);
        swaps.push(i);
    }
    swaps.reverse();
    swaps
}

fn as_vector(t: &TensorElement) -> Vector {
    t.terms().map(|(w, c)| (w.clone(), c.clone())).collect()
}

#[test]
fn oracle_symmetrizer_matches_library() {
    let modules = mods("M1,M3,M6");
    let s = BraidedSpace::from_modules(&modules).unwrap();
    let o = Oracle::new(modules);
    assert_eq!(o.offsets, vec![0, 2, 4, 6]);
    for w in [vec![0, 2, 4], vec![1, 1, 3], vec![2, 5, 4], vec![0, 3, 5, 1], vec![4, 4, 5, 5]] {
        let b = TensorElement::basis(w.clone());
        assert_eq!(as_vector(&symmetrize(&s, &b).unwrap()), o.symmetrize(&as_vector(&b)), "{w:?}");
    }
}

#[test]
fn oracle_adjoint_powers_match_library_on_all_pairs() {
    let all = d8::all_modules();
    for i in 0..6 {
        for j in 0..6 {
            if i == j {
                continue;
            }
            let pair = vec![all[i].clone(), all[j].clone()];
            let s = BraidedSpace::from_modules(&pair).unwrap();
            let o = Oracle::new(pair);
            for m in 1..=3 {
                assert_eq!(adjoint_power(&s, 0, 1, m).unwrap(), o.adjoint_nonzero(0, 1, m), "M{} M{} m={m}", i + 1, j + 1);
            }
        }
    }
}

#[test]
fn oracle_confirms_double_edges() {
    let all = d8::all_modules();
    for (i, j) in [(2, 5), (5, 2), (3, 4), (4, 3)] {
        let o = Oracle::new(vec![all[i].clone(), all[j].clone()]);
        assert!(o.adjoint_nonzero(0, 1, 2), "ad^2 M{} (M{})", i + 1, j + 1);
        assert!(!o.adjoint_nonzero(0, 1, 3), "ad^3 M{} (M{})", i + 1, j + 1);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn random_tensors_symmetrize_identically(
        k in prop::sample::select(d8::triples()),
        word in prop::collection::vec(0usize..6, 2..=4),
        coeffs in prop::collection::vec(-3i64..=3, 1..4),
    ) {
        let modules = mods(&format!("M{},M{},M{}", k.0, k.1, k.2));
        let s = BraidedSpace::from_modules(&modules).unwrap();
        let o = Oracle::new(modules);
        let mut t = TensorElement::zero(word.len());
        for (shift, c) in coeffs.iter().enumerate() {
            let w: Vec<usize> = word.iter().map(|x| (x + shift) % 6).collect();
            t.add_term(w, Cyclotomic::from_int(*c, 1));
        }
        prop_assert_eq!(as_vector(&symmetrize(&s, &t).unwrap()), o.symmetrize(&as_vector(&t)));
    }
}
