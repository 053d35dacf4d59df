use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::{Basis, TqdAlgebra, TqdElement};

/// Which basis tuples the axiom checks visit.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Coverage {
    /// Every basis tuple.
    Full,
    /// `samples` tuples per axiom drawn from a ChaCha stream seeded with `seed`.
    Sampled { seed: u64, samples: usize },
}

impl Coverage {
    /// Full enumeration up to `|G| = 8`, a fixed-seed sample beyond.
    pub fn default_for(order: usize) -> Self {
        if order <= 8 {
            Coverage::Full
        } else {
            Coverage::Sampled { seed: 0x7d0, samples: 4096 }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum AxiomStatus {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomCheck {
    pub axiom: &'static str,
    pub status: AxiomStatus,
    pub checked: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuasiHopfReport {
    pub group_order: usize,
    pub coverage: String,
    pub checks: Vec<AxiomCheck>,
}

impl QuasiHopfReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.status == AxiomStatus::Pass)
    }

    pub fn first_failure(&self) -> Option<&AxiomCheck> {
        self.checks.iter().find(|c| c.status == AxiomStatus::Fail)
    }

    pub fn check(&self, axiom: &str) -> Option<&AxiomCheck> {
        self.checks.iter().find(|c| c.axiom == axiom)
    }
}

fn outcome(axiom: &'static str, checked: usize, witness: Option<String>) -> AxiomCheck {
    AxiomCheck {
        axiom,
        status: if witness.is_some() { AxiomStatus::Fail } else { AxiomStatus::Pass },
        checked,
        witness,
    }
}

fn name(a: &TqdAlgebra, (g, x): Basis) -> String {
    format!("e({})#{}", a.group().name(g), a.group().name(x))
}

fn tuples(dim: usize, arity: u32, cov: Coverage) -> Vec<Vec<usize>> {
    match cov {
        Coverage::Full => (0..dim.pow(arity))
            .map(|mut c| {
                let mut t = vec![0; arity as usize];
                for slot in t.iter_mut().rev() {
                    *slot = c % dim;
                    c /= dim;
                }
                t
            })
            .collect(),
        Coverage::Sampled { seed, samples } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (arity as u64) << 32);
            (0..samples)
                .map(|_| (0..arity).map(|_| rng.gen_range(0..dim)).collect())
                .collect()
        }
    }
}

/// Runs every quasi-Hopf axiom check with the default coverage for the group order.
pub fn verify_quasi_hopf(a: &TqdAlgebra) -> QuasiHopfReport {
    verify_quasi_hopf_with(a, Coverage::default_for(a.group().order()))
}

pub fn verify_quasi_hopf_with(a: &TqdAlgebra, cov: Coverage) -> QuasiHopfReport {
    let dim = a.dim();
    let basis = |k: usize| a.unkey(k);
    let singles = tuples(dim, 1, cov);
    let pairs = tuples(dim, 2, cov);
    let mut checks = Vec::new();

    // associativity on basis triples
    let triples = tuples(dim, 3, cov);
    let bad = triples.par_iter().find_first(|t| {
        let (x, y, z) = (basis(t[0]), basis(t[1]), basis(t[2]));
        let left = a.mul_basis(x, y).and_then(|(r, b)| a.mul_basis(b, z).map(|(s, c)| (r * s, c)));
        let right = a.mul_basis(y, z).and_then(|(r, b)| a.mul_basis(x, b).map(|(s, c)| (r * s, c)));
        left != right
    });
    checks.push(outcome(
        "associativity",
        triples.len(),
        bad.map(|t| format!("({}, {}, {})", name(a, basis(t[0])), name(a, basis(t[1])), name(a, basis(t[2])))),
    ));

    // unit
    let one = a.unit();
    let bad = singles.iter().find(|t| {
        let b = TqdElement::basis(basis(t[0]).0, basis(t[0]).1);
        a.mul(&one, &b) != b || a.mul(&b, &one) != b
    });
    checks.push(outcome("unit", singles.len(), bad.map(|t| name(a, basis(t[0])))));

    // Δ is an algebra map
    let bad = pairs.par_iter().find_first(|t| {
        let (x, y) = (TqdElement::basis(basis(t[0]).0, basis(t[0]).1), TqdElement::basis(basis(t[1]).0, basis(t[1]).1));
        let lhs = a.comul(&a.mul(&x, &y));
        let rhs = a.tensor_mul(&a.comul(&x), &a.comul(&y));
        lhs.difference(&rhs).is_some()
    });
    checks.push(outcome(
        "comultiplication_multiplicative",
        pairs.len(),
        bad.map(|t| format!("({}, {})", name(a, basis(t[0])), name(a, basis(t[1])))),
    ));
    let unit_delta = a.comul(&one);
    let unit2 = a.tensor_unit(2);
    checks.push(outcome(
        "comultiplication_unital",
        1,
        unit_delta.difference(&unit2).map(|_| "Delta(1) != 1#1".to_string()),
    ));

    // ε is an algebra map and a counit
    let bad = pairs.iter().find(|t| {
        let (x, y) = (basis(t[0]), basis(t[1]));
        let prod = a.mul_basis(x, y).is_some_and(|(_, b)| a.counit_basis(b));
        prod != (a.counit_basis(x) && a.counit_basis(y))
    });
    checks.push(outcome(
        "counit_multiplicative",
        pairs.len(),
        bad.map(|t| format!("({}, {})", name(a, basis(t[0])), name(a, basis(t[1])))),
    ));
    let bad = singles.iter().find(|t| {
        let b = basis(t[0]);
        let u = a.tensor1(&TqdElement::basis(b.0, b.1));
        let d = a.comul_at(&u, 0);
        a.counit_at(&d, 0).difference(&u).is_some() || a.counit_at(&d, 1).difference(&u).is_some()
    });
    checks.push(outcome("counit", singles.len(), bad.map(|t| name(a, basis(t[0])))));

    // quasi-coassociativity
    let phi = a.associator(false);
    let phi_inv = a.associator(true);
    checks.push(outcome(
        "associator_invertible",
        1,
        a.tensor_mul(&phi, &phi_inv).difference(&a.tensor_unit(3)).map(|_| "Phi Phi^-1 != 1".to_string()),
    ));
    let bad = singles.par_iter().find_first(|t| {
        let b = basis(t[0]);
        let d = a.comul(&TqdElement::basis(b.0, b.1));
        let lhs = a.comul_at(&d, 1);
        let rhs = a.tensor_mul(&a.tensor_mul(&phi, &a.comul_at(&d, 0)), &phi_inv);
        lhs.difference(&rhs).is_some()
    });
    checks.push(outcome("quasi_coassociativity", singles.len(), bad.map(|t| name(a, basis(t[0])))));

    // pentagon
    let unit1 = a.unit();
    let lhs = a.tensor_mul(&a.comul_at(&phi, 2), &a.comul_at(&phi, 0));
    let one_phi = a.insert_at(&phi, 0, &unit1);
    let phi_one = a.insert_at(&phi, 3, &unit1);
    let rhs = a.tensor_mul(&a.tensor_mul(&one_phi, &a.comul_at(&phi, 1)), &phi_one);
    checks.push(outcome(
        "pentagon",
        lhs.len().max(rhs.len()),
        lhs.difference(&rhs).map(|k| key_name(a, &k)),
    ));
    checks.push(outcome(
        "associator_normalized",
        1,
        a.counit_at(&phi, 1).difference(&unit2).map(|_| "(id#eps#id)(Phi) != 1#1".to_string()),
    ));

    // antipode
    let alpha = a.alpha();
    let beta = a.beta();
    let bad = singles.par_iter().find_first(|t| {
        let b = basis(t[0]);
        let d = a.comul(&TqdElement::basis(b.0, b.1));
        let s = a.antipode_at(&d, 0);
        let got = a.multiply_out(&a.insert_at(&s, 1, &alpha));
        let want = if a.counit_basis(b) { alpha.clone() } else { TqdElement::zero() };
        got != want
    });
    checks.push(outcome("antipode_alpha", singles.len(), bad.map(|t| name(a, basis(t[0])))));
    let bad = singles.par_iter().find_first(|t| {
        let b = basis(t[0]);
        let d = a.comul(&TqdElement::basis(b.0, b.1));
        let s = a.antipode_at(&d, 1);
        let got = a.multiply_out(&a.insert_at(&s, 1, &beta));
        let want = if a.counit_basis(b) { beta.clone() } else { TqdElement::zero() };
        got != want
    });
    checks.push(outcome("antipode_beta", singles.len(), bad.map(|t| name(a, basis(t[0])))));
    let t = a.insert_at(&a.insert_at(&a.antipode_at(&phi, 1), 1, &beta), 3, &alpha);
    checks.push(outcome(
        "antipode_associator",
        1,
        (a.multiply_out(&t) != one).then(|| "X1 beta S(X2) alpha X3 != 1".to_string()),
    ));
    let s = a.antipode_at(&a.antipode_at(&phi_inv, 0), 2);
    let t = a.insert_at(&a.insert_at(&s, 1, &alpha), 3, &beta);
    checks.push(outcome(
        "antipode_associator_inverse",
        1,
        (a.multiply_out(&t) != one).then(|| "S(x1) alpha x2 beta S(x3) != 1".to_string()),
    ));
    let bad = pairs.par_iter().find_first(|t| {
        let (x, y) = (TqdElement::basis(basis(t[0]).0, basis(t[0]).1), TqdElement::basis(basis(t[1]).0, basis(t[1]).1));
        a.antipode(&a.mul(&x, &y)) != a.mul(&a.antipode(&y), &a.antipode(&x))
    });
    checks.push(outcome(
        "antipode_antimultiplicative",
        pairs.len(),
        bad.map(|t| format!("({}, {})", name(a, basis(t[0])), name(a, basis(t[1])))),
    ));

    QuasiHopfReport {
        group_order: a.group().order(),
        coverage: match cov {
            Coverage::Full => "full".into(),
            Coverage::Sampled { seed, samples } => format!("sampled(seed={seed}, samples={samples})"),
        },
        checks,
    }
}

fn key_name(a: &TqdAlgebra, k: &[usize]) -> String {
    k.iter().map(|&i| name(a, a.unkey(i))).collect::<Vec<_>>().join(" (x) ")
}

/// First basis pair that fails to commute, if any.
pub fn commutativity_witness(a: &TqdAlgebra) -> Option<(Basis, Basis)> {
    let dim = a.dim();
    (0..dim * dim).into_par_iter().find_first(|&c| {
        let (x, y) = (a.unkey(c / dim), a.unkey(c % dim));
        a.mul_basis(x, y) != a.mul_basis(y, x)
    })
    .map(|c| (a.unkey(c / dim), a.unkey(c % dim)))
}

/// Whether every pair of basis elements commutes.
pub fn is_commutative(a: &TqdAlgebra) -> bool {
    commutativity_witness(a).is_none()
}
