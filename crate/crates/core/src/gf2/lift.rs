//! Lifting idempotents from GF(2) to `Z/2^k` and reading off ordinary
//! characters of the lifted summands.

use crate::error::{Error, Result};
use crate::gf2::matrix::Gf2Matrix;
use crate::gf2::module::{modulus_mask, EndAlgebra, EndAlgebraBasis};

pub const DEFAULT_PRECISION: u32 = 16;

/// A lifted element of the endomorphism ring in the orbital basis, with
/// coefficients in `Z/2^bits`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LiftedIdempotent {
    pub bits: u32,
    pub coefficients: Vec<u64>,
}

fn check_bits(bits: u32) -> Result<()> {
    if bits == 0 || bits > 62 {
        return Err(Error::InvalidInput(format!("precision {bits} must be in 1..=62")));
    }
    Ok(())
}

fn newton_step(alg: &EndAlgebra, e: &[u64], bits: u32) -> Vec<u64> {
    let mask = modulus_mask(bits);
    let e2 = alg.mulz(e, e, bits);
    let e3 = alg.mulz(&e2, e, bits);
    e2.iter()
        .zip(&e3)
        .map(|(&a, &b)| a.wrapping_mul(3).wrapping_sub(b.wrapping_mul(2)) & mask)
        .collect()
}

fn newton(alg: &EndAlgebra, mut e: Vec<u64>, bits: u32) -> Result<Vec<u64>> {
    // each step doubles the 2-adic precision
    for _ in 0..=bits.next_power_of_two().trailing_zeros() + 1 {
        if alg.mulz(&e, &e, bits) == e {
            return Ok(e);
        }
        e = newton_step(alg, &e, bits);
    }
    if alg.mulz(&e, &e, bits) == e {
        Ok(e)
    } else {
        Err(Error::NotIdempotent)
    }
}

/// Newton iteration `e ← 3e² − 2e³` starting from the 0/1 lift of a GF(2) idempotent.
pub fn lift_idempotent(alg: &EndAlgebra, e: u64, bits: u32) -> Result<LiftedIdempotent> {
    check_bits(bits)?;
    if alg.mul2(e, e) != e {
        return Err(Error::NotIdempotent);
    }
    let start = (0..alg.dim()).map(|c| e >> c & 1).collect();
    Ok(LiftedIdempotent {
        bits,
        coefficients: newton(alg, start, bits)?,
    })
}

/// Lifts a complete orthogonal decomposition of the identity. Each idempotent
/// is compressed into the complement of the previous lifts and re-lifted, so
/// the results are exactly orthogonal mod `2^bits` and sum to the identity.
pub fn lift_decomposition(alg: &EndAlgebra, idempotents: &[u64], bits: u32) -> Result<Vec<LiftedIdempotent>> {
    check_bits(bits)?;
    let mask = modulus_mask(bits);
    let dim = alg.dim();
    let one: Vec<u64> = (0..dim).map(|c| alg.identity() >> c & 1).collect();
    let mut taken = vec![0u64; dim];
    let mut out = Vec::with_capacity(idempotents.len());
    for &e in idempotents {
        let first = lift_idempotent(alg, e, bits)?.coefficients;
        let complement: Vec<u64> = one.iter().zip(&taken).map(|(&a, &b)| a.wrapping_sub(b) & mask).collect();
        let squeezed = alg.mulz(&alg.mulz(&complement, &first, bits), &complement, bits);
        let lifted = newton(alg, squeezed, bits)?;
        for (t, &v) in taken.iter_mut().zip(&lifted) {
            *t = t.wrapping_add(v) & mask;
        }
        out.push(LiftedIdempotent {
            bits,
            coefficients: lifted,
        });
    }
    if taken != one {
        return Err(Error::Verification("lifted idempotents do not sum to the identity".into()));
    }
    Ok(out)
}

/// Reduces a residue to the centred interval `(−2^(bits−1), 2^(bits−1)]`.
pub fn centered(v: u64, bits: u32) -> i64 {
    let v = v & modulus_mask(bits);
    let half = 1u64 << (bits - 1);
    if v > half {
        v as i64 - (1i64 << bits)
    } else {
        v as i64
    }
}

/// `trace(P_g · E)` for the permutation `g` given as an index map on Ω,
/// computed from orbital counts `#{x : (x, g·x) ∈ c}`.
pub fn trace_with(basis: &EndAlgebraBasis, lifted: &LiftedIdempotent, g_map: &[u32]) -> Result<i64> {
    let mut counts = vec![0u64; basis.len()];
    for (x, &gx) in g_map.iter().enumerate() {
        counts[basis.class_of(x, gx as usize)] += 1;
    }
    let dim = basis.module_dim() as u64;
    if (1u64 << lifted.bits) <= 2 * dim {
        return Err(Error::PrecisionTooSmall {
            bits: lifted.bits,
            bound: dim,
        });
    }
    let t = lifted
        .coefficients
        .iter()
        .zip(&counts)
        .fold(0u64, |acc, (&e, &n)| acc.wrapping_add(e.wrapping_mul(n)));
    Ok(centered(t, lifted.bits))
}

/// Dense matrix over `Z/2^bits`, for cross-checking on small modules.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZMatrix {
    pub n: usize,
    pub bits: u32,
    pub data: Vec<u64>,
}

impl ZMatrix {
    pub fn from_gf2(m: &Gf2Matrix, bits: u32) -> Self {
        let n = m.rows();
        let mut data = vec![0; n * n];
        for i in 0..n {
            for j in 0..n {
                data[i * n + j] = m.get(i, j) as u64;
            }
        }
        ZMatrix { n, bits, data }
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.data[i * self.n + j]
    }

    pub fn mul(&self, other: &ZMatrix) -> ZMatrix {
        let n = self.n;
        let mask = modulus_mask(self.bits);
        let mut data = vec![0u64; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.data[i * n + k];
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    data[i * n + j] = data[i * n + j].wrapping_add(a.wrapping_mul(other.data[k * n + j]));
                }
            }
        }
        data.iter_mut().for_each(|v| *v &= mask);
        ZMatrix { n, bits: self.bits, data }
    }

    pub fn is_idempotent(&self) -> bool {
        self.mul(self) == *self
    }

    /// `trace(P · self)` where `P e_x = e_{map[x]}`.
    pub fn trace_with(&self, map: &[u32]) -> i64 {
        let t = (0..self.n).fold(0u64, |acc, x| acc.wrapping_add(self.get(x, map[x] as usize)));
        centered(t, self.bits)
    }
}

/// Matrix form of the Newton lift.
pub fn hensel_lift_idempotent(e: &Gf2Matrix, bits: u32) -> Result<ZMatrix> {
    check_bits(bits)?;
    if !e.is_idempotent() {
        return Err(Error::NotIdempotent);
    }
    let mask = modulus_mask(bits);
    let mut m = ZMatrix::from_gf2(e, bits);
    for _ in 0..=bits.next_power_of_two().trailing_zeros() + 1 {
        let m2 = m.mul(&m);
        if m2 == m {
            return Ok(m);
        }
        let m3 = m2.mul(&m);
        m.data = m2
            .data
            .iter()
            .zip(&m3.data)
            .map(|(&a, &b)| a.wrapping_mul(3).wrapping_sub(b.wrapping_mul(2)) & mask)
            .collect();
    }
    if m.is_idempotent() {
        Ok(m)
    } else {
        Err(Error::NotIdempotent)
    }
}

/// Expands a lifted orbital-basis element into a dense matrix.
pub fn lifted_matrix(basis: &EndAlgebraBasis, lifted: &LiftedIdempotent) -> ZMatrix {
    let n = basis.module_dim();
    let mut data = vec![0; n * n];
    for x in 0..n {
        for y in 0..n {
            data[x * n + y] = lifted.coefficients[basis.class_of(x, y)];
        }
    }
    ZMatrix {
        n,
        bits: lifted.bits,
        data,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf2::decompose::decompose;
    use crate::gf2::module::PermModule;
    use crate::perm::enumerate_fpf_involutions;

    #[test]
    fn identity_lifts_to_identity() {
        let m = hensel_lift_idempotent(&Gf2Matrix::identity(4), 16).unwrap();
        assert_eq!(m, ZMatrix::from_gf2(&Gf2Matrix::identity(4), 16));
        assert_eq!(
            hensel_lift_idempotent(&Gf2Matrix::from_rows(&[vec![0, 1], vec![0, 0]]), 8),
            Err(Error::NotIdempotent)
        );
    }

    #[test]
    fn xi4_lifts() {
        let action = enumerate_fpf_involutions(4).unwrap();
        let module = PermModule::from_action(&action);
        let basis = EndAlgebraBasis::orbitals(&module);
        let d = decompose(&module, &basis).unwrap();
        let elems: Vec<u64> = d.components.iter().map(|c| c.element).collect();
        let lifts = lift_decomposition(&d.algebra, &elems, 16).unwrap();
        // trivial summand: (1/3) J lifts to J·3^{-1} mod 2^16
        let triv = lifted_matrix(&basis, &lifts[0]);
        assert!(triv.is_idempotent());
        let direct = hensel_lift_idempotent(&d.components[0].idempotent, 16).unwrap();
        assert!(direct.is_idempotent());
        assert_eq!(direct.data.iter().map(|&v| v * 3 % (1 << 16)).collect::<Vec<_>>(), vec![1; 9]);
        let e = lifted_matrix(&basis, &lifts[1]);
        assert!(triv.mul(&e).data.iter().all(|&v| v == 0));
        assert!(e.mul(&triv).data.iter().all(|&v| v == 0));
        // characters at the identity are the dimensions
        let id: Vec<u32> = (0..3).collect();
        assert_eq!(trace_with(&basis, &lifts[0], &id).unwrap(), 1);
        assert_eq!(trace_with(&basis, &lifts[1], &id).unwrap(), 2);
        assert_eq!(e.trace_with(&id), 2);
        let tiny = LiftedIdempotent {
            bits: 2,
            coefficients: lifts[1].coefficients.clone(),
        };
        assert!(matches!(trace_with(&basis, &tiny, &id), Err(Error::PrecisionTooSmall { .. })));
    }

    #[test]
    fn centred_residues() {
        assert_eq!(centered(65535, 16), -1);
        assert_eq!(centered(32768, 16), 32768);
        assert_eq!(centered(32769, 16), -32767);
        assert_eq!(centered(5, 16), 5);
    }
}
