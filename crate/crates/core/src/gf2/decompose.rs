//! Decomposition of a permutation module into indecomposable summands.
//!
//! Idempotents live in the orbital basis of the endomorphism algebra `A`
//! (GF(2) bit masks). A summand `eM` is indecomposable iff `eAe` is local;
//! every element of `eAe` is enumerated, and any element that is neither
//! nilpotent nor invertible yields a Fitting split `e = π + (e - π)`.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::chars::CharacterVector;
use crate::error::{Error, Result};
use crate::fps::MuLabel;
use crate::gf2::matrix::{check_commutes, Gf2Matrix};
use crate::gf2::module::{EndAlgebra, EndAlgebraBasis, PermModule};

/// Largest endomorphism-algebra dimension whose full span is enumerated.
pub const MAX_ENUMERATION_DIM: usize = 10;

/// An indecomposable summand of a permutation module.
#[derive(Clone, Debug)]
pub struct Component {
    /// Projection onto the summand, commuting with the action.
    pub idempotent: Gf2Matrix,
    /// The same idempotent in the orbital basis.
    pub element: u64,
    pub dimension: usize,
    pub mu: Option<MuLabel>,
    /// Brauer quotient dimension keyed by candidate vertex label.
    pub brauer_data: BTreeMap<String, usize>,
    pub character: Option<CharacterVector>,
}

#[derive(Clone, Debug, Serialize)]
pub struct DecompositionSummary {
    pub dimensions: Vec<usize>,
    pub algebra_dim: usize,
    pub splits: usize,
    pub elements_examined: u64,
}

/// A complete set of orthogonal primitive idempotents, certified.
#[derive(Clone, Debug)]
pub struct Decomposition {
    pub algebra: EndAlgebra,
    pub components: Vec<Component>,
    pub splits: usize,
    pub elements_examined: u64,
}

impl Decomposition {
    pub fn dimensions(&self) -> Vec<usize> {
        self.components.iter().map(|c| c.dimension).collect()
    }

    pub fn summary(&self) -> DecompositionSummary {
        DecompositionSummary {
            dimensions: self.dimensions(),
            algebra_dim: self.algebra.dim(),
            splits: self.splits,
            elements_examined: self.elements_examined,
        }
    }
}

/// Row-reduces bit-mask vectors, returning a basis of their span.
fn mask_basis(vectors: impl IntoIterator<Item = u64>) -> Vec<u64> {
    let mut basis: Vec<u64> = Vec::new();
    for mut v in vectors {
        for &b in &basis {
            let top = 63 - b.leading_zeros();
            if v >> top & 1 == 1 {
                v ^= b;
            }
        }
        if v != 0 {
            let top = 63 - v.leading_zeros();
            for b in basis.iter_mut() {
                if *b >> top & 1 == 1 {
                    *b ^= v;
                }
            }
            basis.push(v);
            basis.sort_unstable_by(|a, b| b.cmp(a));
        }
    }
    basis
}

/// Outcome of searching `eAe` for a splitting element.
enum LocalSearch {
    Local { examined: u64 },
    Split { pi: u64, examined: u64 },
}

fn search_corner(alg: &EndAlgebra, e: u64) -> LocalSearch {
    let corner = mask_basis((0..alg.dim()).map(|j| alg.mul2(alg.mul2(e, 1 << j), e)));
    let r = corner.len();
    // θ^(2^k) with 2^k ≥ dim kills every nilpotent element of A
    let k = usize::BITS - alg.dim().saturating_sub(1).leading_zeros();
    let mut theta = 0u64;
    let mut examined = 0u64;
    for step in 1u64..(1u64 << r) {
        // Gray code walk over the span
        theta ^= corner[step.trailing_zeros() as usize];
        examined += 1;
        let y = alg.square_times2(theta, k);
        if y == 0 {
            continue;
        }
        let image = mask_basis(corner.iter().map(|&v| alg.mul2(theta, v)));
        if image.len() == r {
            continue;
        }
        // some power of y is idempotent: the Fitting projection onto im θ^N
        let mut z = y;
        for _ in 0..(1u64 << alg.dim().min(20)) {
            if alg.mul2(z, z) == z {
                break;
            }
            z = alg.mul2(z, y);
        }
        debug_assert_eq!(alg.mul2(z, z), z);
        debug_assert!(z != 0 && z != e);
        return LocalSearch::Split { pi: z, examined };
    }
    LocalSearch::Local { examined }
}

/// Splits `1 ∈ A` into orthogonal primitive idempotents of the algebra alone.
pub fn primitive_idempotents(alg: &EndAlgebra) -> Result<(Vec<u64>, usize, u64)> {
    if alg.dim() > MAX_ENUMERATION_DIM {
        return Err(Error::EnumerationBound {
            dim: alg.dim(),
            limit: MAX_ENUMERATION_DIM,
        });
    }
    let mut pending = vec![alg.identity()];
    let mut done = Vec::new();
    let mut splits = 0;
    let mut examined = 0;
    while let Some(e) = pending.pop() {
        match search_corner(alg, e) {
            LocalSearch::Local { examined: n } => {
                examined += n;
                done.push(e);
            }
            LocalSearch::Split { pi, examined: n } => {
                examined += n;
                splits += 1;
                pending.push(e ^ pi);
                pending.push(pi);
            }
        }
    }
    Ok((done, splits, examined))
}

/// Full decomposition with a matrix-level certificate: the idempotents are
/// idempotent, pairwise orthogonal, sum to the identity and commute with
/// every generator.
pub fn decompose(module: &PermModule, basis: &EndAlgebraBasis) -> Result<Decomposition> {
    if basis.module_dim() != module.dim() {
        return Err(Error::InvalidInput("basis does not belong to this module".into()));
    }
    if basis.len() > MAX_ENUMERATION_DIM {
        return Err(Error::EnumerationBound {
            dim: basis.len(),
            limit: MAX_ENUMERATION_DIM,
        });
    }
    let algebra = EndAlgebra::new(basis)?;
    let (elements, splits, examined) = primitive_idempotents(&algebra)?;
    let gens = module.generator_matrices();
    let mut components: Vec<Component> = elements
        .into_iter()
        .map(|element| {
            let idempotent = basis.matrix_of(element);
            let dimension = idempotent.rank();
            Component {
                idempotent,
                element,
                dimension,
                mu: None,
                brauer_data: BTreeMap::new(),
                character: None,
            }
        })
        .collect();
    components.sort_by_key(|c| (c.dimension, c.element));

    let n = module.dim();
    let mut total = Gf2Matrix::zeros(n, n);
    for (i, c) in components.iter().enumerate() {
        if !c.idempotent.is_idempotent() {
            return Err(Error::Verification(format!("component {i} is not idempotent")));
        }
        check_commutes(&c.idempotent, &gens)?;
        for d in &components[i + 1..] {
            if !c.idempotent.mul(&d.idempotent).is_zero() || !d.idempotent.mul(&c.idempotent).is_zero() {
                return Err(Error::Verification("idempotents are not orthogonal".into()));
            }
        }
        total.add_assign(&c.idempotent);
    }
    if total != Gf2Matrix::identity(n) {
        return Err(Error::Verification("idempotents do not sum to the identity".into()));
    }
    if components.iter().map(|c| c.dimension).sum::<usize>() != n {
        return Err(Error::Verification("component dimensions do not sum to |Ω|".into()));
    }
    Ok(Decomposition {
        algebra,
        components,
        splits,
        elements_examined: examined,
    })
}

/// Whether `e A e` is local, by exhaustive enumeration.
pub fn is_local(alg: &EndAlgebra, e: u64) -> bool {
    matches!(search_corner(alg, e), LocalSearch::Local { .. })
}

/// Fitting decomposition of a module endomorphism `theta`: `None` when it is
/// nilpotent or invertible, otherwise bases (as rows) of `ker θ^N` and `im θ^N`.
pub fn fitting_split(module: &PermModule, theta: &Gf2Matrix) -> Result<Option<(Gf2Matrix, Gf2Matrix)>> {
    check_commutes(theta, &module.generator_matrices())?;
    let n = module.dim();
    let k = usize::BITS - n.saturating_sub(1).leading_zeros();
    let y = theta.square_times(k);
    let r = y.rank();
    if r == 0 || r == n {
        return Ok(None);
    }
    Ok(Some((y.kernel(), y.column_space())))
}

/// Projection onto `im θ^N` along `ker θ^N`.
pub fn fitting_idempotent(module: &PermModule, theta: &Gf2Matrix) -> Result<Option<Gf2Matrix>> {
    let Some((ker, im)) = fitting_split(module, theta)? else {
        return Ok(None);
    };
    let n = module.dim();
    // columns: image basis then kernel basis
    let b = im.vstack(&ker).transpose();
    let b_inv = b.inverse().ok_or_else(|| Error::Verification("Fitting parts are not complementary".into()))?;
    let mut d = Gf2Matrix::zeros(n, n);
    for i in 0..im.rows() {
        d.set(i, i, true);
    }
    Ok(Some(b.mul(&d).mul(&b_inv)))
}

/// Whether the subspace spanned by the rows of `subspace` is a free (equivalently
/// projective) module for a 2-group acting through `group_maps`, of order `order`.
pub fn is_projective_over_2group(subspace: &Gf2Matrix, group_maps: &[Vec<u32>], order: usize) -> Result<bool> {
    if !order.is_power_of_two() {
        return Err(Error::InvalidInput(format!("group order {order} is not a power of 2")));
    }
    let dim = subspace.rank();
    let mut rad = Gf2Matrix::zeros(0, subspace.cols());
    for m in group_maps {
        let moved = subspace.permute_cols(m);
        if subspace.vstack(&moved).rank() != dim {
            return Err(Error::InvalidInput("subspace is not invariant".into()));
        }
        rad = rad.vstack(&moved.add(subspace));
    }
    let head = dim - rad.rank();
    Ok(dim == order * head)
}
