//! Brauer quotients `M(Q) = M^Q / Σ_{R < Q} Tr_R^Q(M^R)` of summands of a
//! permutation module.

use std::collections::HashMap;
use std::fmt::Debug;
use std::hash::Hash;

use crate::error::{Error, Result};
use crate::gf2::matrix::Gf2Matrix;
use crate::perm::{orbits_of, GroupAction, PermGroup, Permutation};

/// Default cap on `|Q|` for the relative-trace computation.
pub const DEFAULT_BRAUER_CAP: usize = 32;

/// Kernels of the nonzero homomorphisms `Q → C_2`, i.e. the maximal subgroups
/// of a 2-group, each given as a list of element indices into `elements`.
pub fn index_two_subgroups(q: &PermGroup, elements: &[Permutation]) -> Vec<Vec<usize>> {
    let gens = q.generators();
    let index: HashMap<&Permutation, usize> = elements.iter().enumerate().map(|(i, g)| (g, i)).collect();
    let mut kernels: Vec<Vec<usize>> = Vec::new();
    for pattern in 1u64..(1u64 << gens.len()) {
        // propagate parities along generator moves; a conflict means no homomorphism
        let mut parity = vec![u8::MAX; elements.len()];
        let id = index[&Permutation::identity(q.degree())];
        parity[id] = 0;
        let mut stack = vec![id];
        let mut ok = true;
        while let Some(x) = stack.pop() {
            for (k, g) in gens.iter().enumerate() {
                let y = index[&elements[x].mul(g)];
                let p = parity[x] ^ (pattern >> k & 1) as u8;
                if parity[y] == u8::MAX {
                    parity[y] = p;
                    stack.push(y);
                } else if parity[y] != p {
                    ok = false;
                    break;
                }
            }
            if !ok {
                break;
            }
        }
        if !ok {
            continue;
        }
        let kernel: Vec<usize> = (0..elements.len()).filter(|&i| parity[i] == 0).collect();
        if !kernels.contains(&kernel) {
            kernels.push(kernel);
        }
    }
    kernels
}

/// Sum vectors of the orbits of a set of index maps, one per row.
fn orbit_sums(n: usize, maps: &[Vec<u32>]) -> Vec<Vec<usize>> {
    orbits_of(n, maps)
}

fn rows_from_sets(n: usize, sets: &[Vec<usize>]) -> Gf2Matrix {
    let mut m = Gf2Matrix::zeros(sets.len(), n);
    for (i, s) in sets.iter().enumerate() {
        for &x in s {
            let v = m.get(i, x);
            m.set(i, x, !v);
        }
    }
    m
}

/// Dimension of the Brauer quotient of `e·kΩ` at `q`, straight from the
/// definition: fixed points modulo relative traces from the maximal subgroups.
pub fn brauer_quotient<P: Clone + Eq + Hash + Debug>(
    idempotent: &Gf2Matrix,
    q: &PermGroup,
    action: &GroupAction<P>,
    cap: usize,
) -> Result<usize> {
    let elements = q.try_elements(cap + 1)?;
    if elements.len() > cap {
        return Err(Error::SubgroupCap {
            order: elements.len(),
            cap,
        });
    }
    if !elements.len().is_power_of_two() {
        return Err(Error::InvalidInput(format!("|Q| = {} is not a power of 2", elements.len())));
    }
    let n = action.len();
    let maps: Vec<Vec<u32>> = elements
        .iter()
        .map(|g| action.index_permutation(g))
        .collect::<Result<_>>()?;
    let index: HashMap<&Permutation, usize> = elements.iter().enumerate().map(|(i, g)| (g, i)).collect();
    let q_gen_maps: Vec<Vec<u32>> = q.generators().iter().map(|g| maps[index[g]].clone()).collect();
    let fixed = rows_from_sets(n, &orbit_sums(n, &q_gen_maps));

    let mut traces = Gf2Matrix::zeros(0, n);
    for kernel in index_two_subgroups(q, elements) {
        let r_maps: Vec<Vec<u32>> = kernel.iter().map(|&i| maps[i].clone()).collect();
        let outside = (0..elements.len()).find(|i| !kernel.contains(i)).expect("proper subgroup");
        let r_sums = rows_from_sets(n, &orbit_sums(n, &r_maps));
        // Tr_R^Q(v) = v + q·v for the coset representative q ∉ R
        let moved = r_sums.permute_cols(&maps[outside]);
        traces = traces.vstack(&r_sums.add(&moved));
    }
    // apply e to row vectors: v ↦ (e v)ᵀ = vᵀ eᵀ
    let et = idempotent.transpose();
    let fixed_dim = fixed.mul(&et).rank();
    let trace_dim = if traces.rows() == 0 { 0 } else { traces.mul(&et).rank() };
    Ok(fixed_dim - trace_dim)
}

/// The Brauer quotient of `e·kΩ` at `q` through `kΩ(Q) = k[Fix_Ω(Q)]`:
/// the induced idempotent is the restriction of `e` to `Fix × Fix`.
#[derive(Clone, Debug)]
pub struct FixedPointBrauer {
    /// Indices (into Ω) of the points fixed by `Q`.
    pub fixed: Vec<usize>,
    /// `e` restricted to `Fix × Fix`.
    pub idempotent: Gf2Matrix,
    pub dim: usize,
}

pub fn brauer_quotient_fixed_points<P: Clone + Eq + Hash + Debug>(
    idempotent: &Gf2Matrix,
    q: &PermGroup,
    action: &GroupAction<P>,
) -> Result<FixedPointBrauer> {
    let fixed = action.fixed_point_indices(q);
    let sub = idempotent.submatrix(&fixed, &fixed);
    if !sub.is_idempotent() {
        return Err(Error::Verification("Brauer image of an idempotent is not idempotent".into()));
    }
    let dim = sub.rank();
    Ok(FixedPointBrauer {
        fixed,
        idempotent: sub,
        dim,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf2::decompose::decompose;
    use crate::gf2::module::{EndAlgebraBasis, PermModule};
    use crate::perm::{enumerate_fpf_involutions, sylow2_sym};

    fn h() -> PermGroup {
        PermGroup::new(
            4,
            vec![
                Permutation::parse("(1 2)(3 4)", 4).unwrap(),
                Permutation::parse("(1 3)(2 4)", 4).unwrap(),
            ],
        )
        .unwrap()
    }

    #[test]
    fn maximal_subgroups_of_small_groups() {
        let hh = h();
        assert_eq!(index_two_subgroups(&hh, hh.elements()).len(), 3);
        let d8 = sylow2_sym(4);
        // D8 has three maximal subgroups
        assert_eq!(index_two_subgroups(&d8, d8.elements()).len(), 3);
        let c2 = sylow2_sym(2);
        assert_eq!(index_two_subgroups(&c2, c2.elements()), vec![vec![0]]);
    }

    #[test]
    fn xi4_brauer_quotients() {
        let action = enumerate_fpf_involutions(4).unwrap();
        let module = PermModule::from_action(&action);
        let basis = EndAlgebraBasis::orbitals(&module);
        let d = decompose(&module, &basis).unwrap();
        let (triv, e) = (&d.components[0], &d.components[1]);
        let p4 = sylow2_sym(4);
        assert_eq!(brauer_quotient(&triv.idempotent, &p4, &action, 32).unwrap(), 1);
        assert_eq!(brauer_quotient(&e.idempotent, &h(), &action, 32).unwrap(), 2);
        assert_eq!(brauer_quotient(&e.idempotent, &p4, &action, 32).unwrap(), 0);
        assert_eq!(brauer_quotient(&triv.idempotent, &h(), &action, 32).unwrap(), 1);
        let fp = brauer_quotient_fixed_points(&e.idempotent, &h(), &action).unwrap();
        assert_eq!(fp.fixed.len(), 3);
        assert_eq!(fp.dim, 2);
        assert_eq!(brauer_quotient_fixed_points(&e.idempotent, &p4, &action).unwrap().dim, 0);
        assert!(matches!(
            brauer_quotient(&e.idempotent, &p4, &action, 4),
            Err(Error::SubgroupCap { order: 8, cap: 4 })
        ));
    }
}
