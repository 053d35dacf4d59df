use serde::Serialize;

use super::braided::{is_braid_indecomposable, BraidedSpace, Indecomposability};
use super::diagonal::{cartan_is_finite_type, diagonal_cartan, diagonalize_braiding, DiagonalBraiding};
use super::skeleton::{skeleton, Skeleton};
use super::yd::YDModule;
use super::{cartan_matrix, CartanEntry, NicholsError};

/// How infinite dimension was decided.
#[derive(Clone, Debug, Serialize)]
#[serde(tag = "route", rename_all = "snake_case")]
pub enum Route {
    /// Some sub-collection has abelian support; its braiding is diagonal there.
    Diagonal {
        modules: Vec<String>,
        braiding: DiagonalBraiding,
        cartan: Vec<Vec<CartanEntry>>,
        finite_type: bool,
    },
    /// Generalized Cartan matrix of the whole collection, and its skeleton when one exists.
    Cartan {
        cartan: Vec<Vec<CartanEntry>>,
        finite_type: bool,
        #[serde(skip_serializing_if = "Option::is_none")]
        skeleton: Option<Skeleton>,
        #[serde(skip_serializing_if = "Option::is_none")]
        skeleton_error: Option<String>,
    },
}

#[derive(Clone, Debug, Serialize)]
pub struct TripleAnalysis {
    pub modules: Vec<String>,
    pub supports_generate_group: bool,
    pub indecomposability: Indecomposability,
    #[serde(flatten)]
    pub route: Route,
    /// A Cartan matrix of non-finite type was found, so the Nichols algebra is infinite-dimensional.
    pub infinite_dimensional: bool,
}

fn names(modules: &[YDModule]) -> Vec<String> {
    modules.iter().map(|m| m.name.clone()).collect()
}

fn abelian_support(modules: &[YDModule]) -> bool {
    let g = modules[0].group();
    let support: Vec<usize> = modules.iter().flat_map(|m| m.support().iter().copied()).collect();
    let sub = g.generated(&support);
    sub.iter().all(|&a| sub.iter().all(|&b| g.commute(a, b)))
}

/// Tries the diagonal route on `modules`, returning it only if it certifies infinite dimension.
fn diagonal_route(modules: &[YDModule]) -> Result<Option<Route>, NicholsError> {
    if !abelian_support(modules) {
        return Ok(None);
    }
    let braiding = diagonalize_braiding(modules)?;
    let cartan = diagonal_cartan(&braiding.matrix);
    let finite_type = cartan_is_finite_type(&cartan);
    if finite_type {
        return Ok(None);
    }
    Ok(Some(Route::Diagonal { modules: names(modules), braiding, cartan, finite_type }))
}

/// Decides whether `B(M_1 ⊕ ... ⊕ M_n)` is infinite-dimensional.
///
/// The whole collection is tried first on the diagonal route, then each pair
/// with abelian support. Otherwise the generalized Cartan matrix is computed
/// (cap 3) and the skeleton emitted; a Cartan matrix that is not of finite
/// type rules out a finite Weyl groupoid, hence finite dimension.
pub fn analyze_triple(modules: &[YDModule]) -> Result<TripleAnalysis, NicholsError> {
    let space = BraidedSpace::from_modules(modules)?;
    let group = modules[0].group();
    let support: Vec<usize> = modules.iter().flat_map(|m| m.support().iter().copied()).collect();
    let supports_generate_group = group.generated(&support).len() == group.order();
    let indecomposability = is_braid_indecomposable(&space);

    let mut route = diagonal_route(modules)?;
    if route.is_none() {
        'pairs: for i in 0..modules.len() {
            for j in i + 1..modules.len() {
                if let Some(r) = diagonal_route(&[modules[i].clone(), modules[j].clone()])? {
                    route = Some(r);
                    break 'pairs;
                }
            }
        }
    }
    let route = match route {
        Some(r) => r,
        None => {
            let cartan = cartan_matrix(&space, super::DEFAULT_CAP)?;
            let finite_type = cartan_is_finite_type(&cartan);
            let (skeleton, skeleton_error) = match skeleton(modules, &cartan) {
                Ok(s) => (Some(s), None),
                Err(e) => (None, Some(e.to_string())),
            };
            Route::Cartan { cartan, finite_type, skeleton, skeleton_error }
        }
    };
    let infinite_dimensional = match &route {
        Route::Diagonal { finite_type, .. } | Route::Cartan { finite_type, .. } => !finite_type,
    };
    Ok(TripleAnalysis { modules: names(modules), supports_generate_group, indecomposability, route, infinite_dimensional })
}
