//! Whether `D^{ω_a}(Z_m)` is genuine, decided three ways: the gcd criterion, the
//! 2-adic form, and an explicit computation through the group-likes `Γ^ω`.

use std::sync::Arc;

use num_integer::Integer;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::cocycles::{f3_pullback, inflate, is_coboundary, Cochain3, CocycleError, CocycleParams};
use crate::exactmath::RootOfUnity;
use crate::groups::invariant_factors_of;
use crate::tqd::{grouplike_group, TqdAlgebra, TqdError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GenuineError {
    #[error("need m >= 2 and 1 <= a < m, got m = {m}, a = {a}")]
    OutOfRange { m: u64, a: u64 },
    #[error("explicit oracle is limited to m <= 12, got {0}")]
    TooLarge(u64),
    #[error("no complement of <t> of order {0} among the group-likes")]
    NoComplementFound(u64),
    #[error(transparent)]
    Tqd(#[from] TqdError),
    #[error(transparent)]
    Cocycle(#[from] CocycleError),
}

fn check_range(m: u64, a: u64) -> Result<(), GenuineError> {
    if m < 2 || a == 0 || a >= m {
        return Err(GenuineError::OutOfRange { m, a });
    }
    Ok(())
}

/// Genuine iff `(m, 2a) ∤ (m, a)`.
pub fn decide_gcd(m: u64, a: u64) -> Result<bool, GenuineError> {
    check_range(m, a)?;
    Ok(!m.gcd(&a).is_multiple_of(m.gcd(&(2 * a))))
}

/// Genuine iff `v_2(a) < v_2(m)`.
pub fn decide_valuation(m: u64, a: u64) -> Result<bool, GenuineError> {
    check_range(m, a)?;
    Ok(a.trailing_zeros() < m.trailing_zeros())
}

/// How the generators of `Γ^ω` were chosen.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GeneratorChoice {
    /// `t = σ_τ(1, g)`, of order `m²/(2a,m)`.
    pub t: String,
    pub t_order: u64,
    /// `u = σ_τ(χ^c, g^b)` of order `(2a,m)`, absent when `Γ^ω` is cyclic.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub u: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub c: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub b: Option<u64>,
    /// `u^{(2a,m)} = 1` read off the exponents: `m | b(2a,m)` and `m | c(2a,m) + 2a⌊b(2a,m)/m⌋`.
    pub constraint_ok: bool,
    /// `c = 1`, so that `u = σ_τ(χ, g^b)` and the constraint reads `m | (2a,m) + 2a⌊b(2a,m)/m⌋`.
    pub chi_form: bool,
}

/// Trace of the explicit oracle.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExplicitTrace {
    pub genuine: bool,
    pub gamma_type: Vec<u64>,
    pub generator_choice: GeneratorChoice,
    /// Image of `Ψ_{t,t,t}`; equals `(ζ_m^{-a})^{m/(2a,m)}`.
    pub v_ttt: RootOfUnity,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness_g12: Option<RootOfUnity>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
}

/// Builds `Γ^ω`, pulls `ω_a^{-1}` back along `π` to it, and tests the result for being a coboundary.
pub fn decide_explicit(m: u64, a: u64) -> Result<ExplicitTrace, GenuineError> {
    check_range(m, a)?;
    if m > 12 {
        return Err(GenuineError::TooLarge(m));
    }
    let params = CocycleParams::cyclic(m, a)?;
    let alg = TqdAlgebra::from_params(&params);
    let gamma = grouplike_group(&alg)?;
    let group = Arc::new(gamma.group.clone());
    let d = (2 * a).gcd(&m);
    let t = gamma.t;
    let t_order = m * m / d;

    let (gens, choice) = if d == 1 {
        (
            vec![(t, m * m)],
            GeneratorChoice { t: group.name(t).to_string(), t_order, u: None, c: None, b: None, constraint_ok: true, chi_form: true },
        )
    } else {
        let t_powers: Vec<usize> = (0..t_order).map(|e| group.pow(t, e as i64)).collect();
        let u = (0..group.order())
            .find(|&u| {
                group.element_order(u) as u64 == d
                    && (1..d).all(|e| !t_powers.contains(&group.pow(u, e as i64)))
            })
            .ok_or(GenuineError::NoComplementFound(d))?;
        let mu = m as usize;
        let (c, b) = ((u / mu) as u64, (u % mu) as u64);
        let constraint_ok = (b * d).is_multiple_of(m) && (c * d + 2 * a * (b * d / m)).is_multiple_of(m);
        (
            vec![(t, t_order), (u, d)],
            GeneratorChoice {
                t: group.name(t).to_string(),
                t_order,
                u: Some(group.name(u).to_string()),
                c: Some(c),
                b: Some(b),
                constraint_ok,
                chi_form: c == 1,
            },
        )
    };

    let omega_inv = Cochain3::omega(&params).inverse();
    let pulled = inflate(&omega_inv, group.clone(), gamma.projection.clone())?;
    let psi = f3_pullback(&pulled, &gens)?;
    let decision = is_coboundary(&psi);
    Ok(ExplicitTrace {
        genuine: !decision.coboundary,
        gamma_type: invariant_factors_of(&group).map_err(TqdError::from)?,
        generator_choice: choice,
        v_ttt: psi.lll[0],
        witness_g12: decision.witnesses.first().map(|(_, g)| *g),
        reason: decision.reason,
    })
}

/// The value `(ζ_m^{-a})^{m/(2a,m)}` predicted for `Ψ_{t,t,t}`.
pub fn predicted_v_ttt(m: u64, a: u64) -> RootOfUnity {
    let d = (2 * a).gcd(&m);
    RootOfUnity::zeta(m, -(a as i64)).pow((m / d) as i64)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Explicit {
    Skipped,
    Computed(ExplicitTrace),
}

impl Serialize for Explicit {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Explicit::Skipped => s.serialize_str("skipped"),
            Explicit::Computed(t) => t.serialize(s),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GenuinenessReport {
    pub m: u64,
    pub a: u64,
    pub gcd_criterion: bool,
    pub valuation_criterion: bool,
    pub explicit_oracle: Explicit,
}

impl GenuinenessReport {
    pub fn genuine(&self) -> bool {
        self.gcd_criterion
    }

    /// Whether every computed criterion gives the same answer.
    pub fn consistent(&self) -> bool {
        let e = match &self.explicit_oracle {
            Explicit::Skipped => self.gcd_criterion,
            Explicit::Computed(t) => t.genuine,
        };
        self.gcd_criterion == self.valuation_criterion && e == self.gcd_criterion
    }
}

pub fn genuineness_report(m: u64, a: u64, explicit: bool) -> Result<GenuinenessReport, GenuineError> {
    Ok(GenuinenessReport {
        m,
        a,
        gcd_criterion: decide_gcd(m, a)?,
        valuation_criterion: decide_valuation(m, a)?,
        explicit_oracle: if explicit { Explicit::Computed(decide_explicit(m, a)?) } else { Explicit::Skipped },
    })
}
