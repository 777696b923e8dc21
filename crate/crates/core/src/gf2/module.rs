//! Permutation modules and the orbital basis of their endomorphism algebras.

use std::collections::BTreeMap;
use std::fmt::{Debug, Display};
use std::hash::Hash;

use crate::error::{Error, Result};
use crate::gf2::matrix::Gf2Matrix;
use crate::perm::{GroupAction, PermGroup};

/// `kΩ` for a finite G-set: the basis is the point list and each generator
/// acts by the permutation matrix of its index map.
#[derive(Clone, Debug)]
pub struct PermModule {
    dim: usize,
    maps: Vec<Vec<u32>>,
}

impl PermModule {
    pub fn from_action<P: Clone + Eq + Hash + Debug>(action: &GroupAction<P>) -> Self {
        PermModule {
            dim: action.len(),
            maps: action.table().to_vec(),
        }
    }

    pub fn from_index_maps(dim: usize, maps: Vec<Vec<u32>>) -> Result<Self> {
        for m in &maps {
            let mut seen = vec![false; dim];
            if m.len() != dim {
                return Err(Error::InvalidInput("index map has the wrong length".into()));
            }
            for &y in m {
                if y as usize >= dim || seen[y as usize] {
                    return Err(Error::InvalidInput("index map is not a permutation".into()));
                }
                seen[y as usize] = true;
            }
        }
        Ok(PermModule { dim, maps })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn index_maps(&self) -> &[Vec<u32>] {
        &self.maps
    }

    pub fn generator_matrices(&self) -> Vec<Gf2Matrix> {
        self.maps.iter().map(|m| Gf2Matrix::permutation(m)).collect()
    }
}

/// Generator matrices of `subgroup` acting on the same basis.
pub fn restrict_module<P: Clone + Eq + Hash + Debug>(
    action: &GroupAction<P>,
    subgroup: &PermGroup,
) -> Result<PermModule> {
    let maps = subgroup
        .generators()
        .iter()
        .map(|g| action.index_permutation(g))
        .collect::<Result<Vec<_>>>()?;
    PermModule::from_index_maps(action.len(), maps)
}

/// The 0/1 orbit matrices of `G` on `Ω × Ω`: `(M_c)_{x,y} = 1` iff `(x, y)`
/// lies in orbit `c`. Rows index `x`.
#[derive(Clone, Debug)]
pub struct EndAlgebraBasis {
    n: usize,
    labels: Vec<String>,
    class_of: Vec<u16>,
    matrices: Vec<Gf2Matrix>,
    reps: Vec<(usize, usize)>,
}

/// Orbits of `G` on ordered pairs, numbered by first occurrence in row-major order.
fn pair_orbits(module: &PermModule) -> (Vec<u32>, usize) {
    let n = module.dim();
    let mut parent: Vec<u32> = (0..(n * n) as u32).collect();
    fn find(parent: &mut [u32], mut x: u32) -> u32 {
        while parent[x as usize] != x {
            let p = parent[parent[x as usize] as usize];
            parent[x as usize] = p;
            x = p;
        }
        x
    }
    for m in module.index_maps() {
        for x in 0..n {
            let gx = m[x] as usize;
            for y in 0..n {
                let a = find(&mut parent, (x * n + y) as u32);
                let b = find(&mut parent, (gx * n + m[y] as usize) as u32);
                if a != b {
                    parent[a.max(b) as usize] = a.min(b);
                }
            }
        }
    }
    let mut id = vec![u32::MAX; n * n];
    let mut root_id: BTreeMap<u32, u32> = BTreeMap::new();
    for i in 0..n * n {
        let r = find(&mut parent, i as u32);
        let next = root_id.len() as u32;
        id[i] = *root_id.entry(r).or_insert(next);
    }
    (id, root_id.len())
}

impl EndAlgebraBasis {
    /// Orbital basis labelled by a pair invariant. The invariant is checked
    /// exhaustively: constant on each pair orbit and separating distinct orbits.
    pub fn from_invariant<P, L, F>(module: &PermModule, points: &[P], invariant: F) -> Result<Self>
    where
        L: Ord + Clone + Display,
        F: Fn(&P, &P) -> L,
    {
        let n = module.dim();
        if points.len() != n {
            return Err(Error::InvalidInput("point list does not match module dimension".into()));
        }
        let mut label_index: BTreeMap<L, u16> = BTreeMap::new();
        let mut raw = vec![0u16; n * n];
        let mut seen_labels: Vec<L> = Vec::new();
        for x in 0..n {
            for y in 0..n {
                let l = invariant(&points[x], &points[y]);
                let k = match label_index.get(&l) {
                    Some(&k) => k,
                    None => {
                        let k = seen_labels.len() as u16;
                        label_index.insert(l.clone(), k);
                        seen_labels.push(l);
                        k
                    }
                };
                raw[x * n + y] = k;
            }
        }
        let (orbit, count) = pair_orbits(module);
        let mut orbit_label = vec![u16::MAX; count];
        for i in 0..n * n {
            let o = orbit[i] as usize;
            if orbit_label[o] == u16::MAX {
                orbit_label[o] = raw[i];
            } else if orbit_label[o] != raw[i] {
                let (x, y) = (i / n, i % n);
                return Err(Error::UnstableInvariant(format!(
                    "pair ({x}, {y}) has label {} but its orbit has {}",
                    seen_labels[raw[i] as usize], seen_labels[orbit_label[o] as usize]
                )));
            }
        }
        if count != seen_labels.len() {
            return Err(Error::UnstableInvariant(format!(
                "{} labels for {count} pair orbits",
                seen_labels.len()
            )));
        }
        // renumber classes in label order
        let order: Vec<u16> = label_index.values().copied().collect();
        let mut renumber = vec![0u16; order.len()];
        for (new, &old) in order.iter().enumerate() {
            renumber[old as usize] = new as u16;
        }
        let labels = label_index.keys().map(|l| l.to_string()).collect();
        let class_of = raw.iter().map(|&k| renumber[k as usize]).collect();
        Ok(Self::assemble(n, labels, class_of))
    }

    /// Orbital basis computed directly from pair orbits.
    pub fn orbitals(module: &PermModule) -> Self {
        let n = module.dim();
        let (orbit, count) = pair_orbits(module);
        let labels = (0..count).map(|k| format!("O{k}")).collect();
        Self::assemble(n, labels, orbit.into_iter().map(|o| o as u16).collect())
    }

    fn assemble(n: usize, labels: Vec<String>, class_of: Vec<u16>) -> Self {
        let count = labels.len();
        let mut matrices = vec![Gf2Matrix::zeros(n, n); count];
        let mut reps = vec![(usize::MAX, usize::MAX); count];
        for x in 0..n {
            for y in 0..n {
                let c = class_of[x * n + y] as usize;
                matrices[c].set(x, y, true);
                if reps[c].0 == usize::MAX {
                    reps[c] = (x, y);
                }
            }
        }
        EndAlgebraBasis {
            n,
            labels,
            class_of,
            matrices,
            reps,
        }
    }

    pub fn len(&self) -> usize {
        self.matrices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.matrices.is_empty()
    }

    pub fn module_dim(&self) -> usize {
        self.n
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn matrices(&self) -> &[Gf2Matrix] {
        &self.matrices
    }

    /// Orbital class of the pair `(x, y)`.
    #[inline]
    pub fn class_of(&self, x: usize, y: usize) -> usize {
        self.class_of[x * self.n + y] as usize
    }

    pub fn representative(&self, c: usize) -> (usize, usize) {
        self.reps[c]
    }

    /// Classes lying on the diagonal; their sum is the identity.
    pub fn diagonal_classes(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|x| self.class_of(x, x)).collect();
        d.sort_unstable();
        d.dedup();
        d
    }

    /// GF(2) matrix of a combination given as a bit mask over the basis.
    pub fn matrix_of(&self, mask: u64) -> Gf2Matrix {
        let mut m = Gf2Matrix::zeros(self.n, self.n);
        for (c, b) in self.matrices.iter().enumerate() {
            if mask >> c & 1 == 1 {
                m.add_assign(b);
            }
        }
        m
    }
}

/// The endomorphism algebra in its orbital basis, with integral structure
/// constants `M_a M_b = Σ_c const[a][b][c] M_c`.
#[derive(Clone, Debug)]
pub struct EndAlgebra {
    dim: usize,
    constants: Vec<u64>,
    parity: Vec<u64>,
    identity: u64,
}

impl EndAlgebra {
    pub fn new(basis: &EndAlgebraBasis) -> Result<Self> {
        let dim = basis.len();
        if dim > 64 {
            return Err(Error::EnumerationBound { dim, limit: 64 });
        }
        let transposes: Vec<Gf2Matrix> = basis.matrices().iter().map(|m| m.transpose()).collect();
        let mut constants = vec![0u64; dim * dim * dim];
        let mut parity = vec![0u64; dim * dim];
        for a in 0..dim {
            for b in 0..dim {
                for c in 0..dim {
                    let (x, y) = basis.representative(c);
                    let row = basis.matrices()[a].row(x);
                    let col = transposes[b].row(y);
                    let k: u64 = row.iter().zip(col).map(|(u, v)| (u & v).count_ones() as u64).sum();
                    constants[(a * dim + b) * dim + c] = k;
                    if k & 1 == 1 {
                        parity[a * dim + b] |= 1 << c;
                    }
                }
            }
        }
        let identity = basis.diagonal_classes().iter().fold(0u64, |m, &c| m | 1 << c);
        Ok(EndAlgebra {
            dim,
            constants,
            parity,
            identity,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn identity(&self) -> u64 {
        self.identity
    }

    pub fn constant(&self, a: usize, b: usize, c: usize) -> u64 {
        self.constants[(a * self.dim + b) * self.dim + c]
    }

    /// Product of two GF(2) elements given as bit masks.
    pub fn mul2(&self, x: u64, y: u64) -> u64 {
        let mut out = 0;
        let mut xs = x;
        while xs != 0 {
            let a = xs.trailing_zeros() as usize;
            xs &= xs - 1;
            let mut ys = y;
            while ys != 0 {
                let b = ys.trailing_zeros() as usize;
                ys &= ys - 1;
                out ^= self.parity[a * self.dim + b];
            }
        }
        out
    }

    /// `x^(2^k)`.
    pub fn square_times2(&self, mut x: u64, k: u32) -> u64 {
        for _ in 0..k {
            x = self.mul2(x, x);
        }
        x
    }

    /// Product over `Z/2^bits`.
    pub fn mulz(&self, x: &[u64], y: &[u64], bits: u32) -> Vec<u64> {
        let mask = modulus_mask(bits);
        let mut out = vec![0u64; self.dim];
        for a in 0..self.dim {
            if x[a] == 0 {
                continue;
            }
            for b in 0..self.dim {
                if y[b] == 0 {
                    continue;
                }
                let xy = x[a].wrapping_mul(y[b]);
                let row = &self.constants[(a * self.dim + b) * self.dim..][..self.dim];
                for (o, &k) in out.iter_mut().zip(row) {
                    *o = o.wrapping_add(xy.wrapping_mul(k));
                }
            }
        }
        out.iter_mut().for_each(|v| *v &= mask);
        out
    }

    /// Checks the GF(2) structure constants against full matrix products.
    pub fn verify_against(&self, basis: &EndAlgebraBasis) -> bool {
        let ms = basis.matrices();
        (0..self.dim).all(|a| {
            (0..self.dim).all(|b| ms[a].mul(&ms[b]) == basis.matrix_of(self.parity[a * self.dim + b]))
        })
    }
}

pub(crate) fn modulus_mask(bits: u32) -> u64 {
    if bits >= 64 {
        u64::MAX
    } else {
        (1u64 << bits) - 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::Partition;
    use crate::perm::{enumerate_fpf_involutions, Permutation};

    fn xi_invariant(x: &Permutation, y: &Permutation) -> Partition {
        let parts = x.mul(y).cycle_type().parts().iter().step_by(2).copied().collect();
        Partition::new(parts)
    }

    /// Pair orbits of Sym(2n) on Ξ × Ξ counted by brute force.
    fn brute_force_orbit_count(two_n: usize) -> usize {
        let action = enumerate_fpf_involutions(two_n).unwrap();
        let module = PermModule::from_action(&action);
        pair_orbits(&module).1
    }

    #[test]
    fn orbital_counts_match_partition_numbers() {
        assert_eq!(brute_force_orbit_count(4), 2);
        let action = enumerate_fpf_involutions(8).unwrap();
        let module = PermModule::from_action(&action);
        let basis = EndAlgebraBasis::from_invariant(&module, action.points(), xi_invariant).unwrap();
        assert_eq!(basis.len(), 5);
        assert_eq!(basis.matrices()[0].rows(), 105);
    }

    #[test]
    fn orbit_matrices_sum_to_all_ones_and_commute() {
        let action = enumerate_fpf_involutions(6).unwrap();
        let module = PermModule::from_action(&action);
        let basis = EndAlgebraBasis::from_invariant(&module, action.points(), xi_invariant).unwrap();
        let mut sum = Gf2Matrix::zeros(15, 15);
        for m in basis.matrices() {
            sum.add_assign(m);
        }
        assert_eq!(sum, Gf2Matrix::ones(15, 15));
        for m in basis.matrices() {
            for g in module.generator_matrices() {
                assert!(m.commutes_with(&g));
            }
        }
        let diag = basis.diagonal_classes();
        assert_eq!(diag.len(), 1);
        assert_eq!(basis.matrices()[diag[0]], Gf2Matrix::identity(15));
        let alg = EndAlgebra::new(&basis).unwrap();
        assert!(alg.verify_against(&basis));
    }

    #[test]
    fn unstable_invariant_rejected() {
        let action = enumerate_fpf_involutions(4).unwrap();
        let module = PermModule::from_action(&action);
        let bad = |x: &Permutation, y: &Permutation| (x.image(1), y.image(1));
        let r = EndAlgebraBasis::from_invariant(&module, action.points(), |x, y| format!("{:?}", bad(x, y)));
        assert!(matches!(r, Err(Error::UnstableInvariant(_))));
        // constant invariant fails to separate the two orbits
        let r = EndAlgebraBasis::from_invariant(&module, action.points(), |_, _| 0u8);
        assert!(matches!(r, Err(Error::UnstableInvariant(_))));
    }

    #[test]
    fn restriction_to_trivial_group_is_identity() {
        let action = enumerate_fpf_involutions(4).unwrap();
        let r = restrict_module(&action, &PermGroup::trivial(4)).unwrap();
        assert_eq!(r.dim(), 3);
        assert!(r.generator_matrices().is_empty());
        let r = restrict_module(&action, &PermGroup::new(4, vec![Permutation::parse("(1 2)", 4).unwrap()]).unwrap()).unwrap();
        assert_eq!(r.generator_matrices().len(), 1);
        let full = restrict_module(&action, action.group()).unwrap();
        assert_eq!(full.generator_matrices(), PermModule::from_action(&action).generator_matrices());
    }
}
