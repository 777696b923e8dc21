//! Ordinary characters of symmetric groups: Murnaghan–Nakayama evaluation,
//! Young-subgroup induction, and the component characters of `k Ξ_{2n}`.
//!
//! Characters are dense over all cycle types of their degree, with exact
//! integer values.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Mutex, OnceLock};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::fps::MuLabel;
use crate::partition::{partitions, Partition};
use crate::perm::{fpf_involutions, Permutation};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CharacterVector {
    degree: usize,
    values: BTreeMap<Partition, i64>,
}

impl CharacterVector {
    pub fn from_fn(degree: usize, mut f: impl FnMut(&Partition) -> i64) -> Self {
        let values = partitions(degree).into_iter().map(|p| {
            let v = f(&p);
            (p, v)
        });
        CharacterVector {
            degree,
            values: values.collect(),
        }
    }

    pub fn new(degree: usize, values: BTreeMap<Partition, i64>) -> Result<Self> {
        let classes = partitions(degree);
        if values.len() != classes.len() || !classes.iter().all(|c| values.contains_key(c)) {
            return Err(Error::InvalidInput(format!(
                "a class function of Sym({degree}) needs a value on each of its {} classes",
                classes.len()
            )));
        }
        Ok(CharacterVector { degree, values })
    }

    pub fn zero(degree: usize) -> Self {
        Self::from_fn(degree, |_| 0)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn value(&self, class: &Partition) -> i64 {
        self.values[class]
    }

    pub fn at_identity(&self) -> i64 {
        self.values[&Partition::ones(self.degree)]
    }

    pub fn values(&self) -> &BTreeMap<Partition, i64> {
        &self.values
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &i64)> {
        self.values.iter()
    }

    pub fn add(&self, other: &CharacterVector) -> CharacterVector {
        assert_eq!(self.degree, other.degree);
        CharacterVector::from_fn(self.degree, |p| self.value(p) + other.value(p))
    }

    pub fn sub(&self, other: &CharacterVector) -> CharacterVector {
        assert_eq!(self.degree, other.degree);
        CharacterVector::from_fn(self.degree, |p| self.value(p) - other.value(p))
    }

    /// `⟨self, other⟩`, if it is an integer.
    pub fn inner_product(&self, other: &CharacterVector) -> Option<i64> {
        assert_eq!(self.degree, other.degree);
        let order: i128 = (1..=self.degree as i128).product();
        let mut acc: i128 = 0;
        for (p, &v) in &self.values {
            acc += (v as i128) * (other.value(p) as i128) * (order / p.centralizer_order() as i128);
        }
        (acc % order == 0).then(|| (acc / order) as i64)
    }

    /// Irreducible constituents with nonzero multiplicity.
    pub fn constituents(&self) -> Vec<(Partition, i64)> {
        partitions(self.degree)
            .into_iter()
            .filter_map(|l| {
                let m = self.inner_product(&irreducible(&l)).expect("integral multiplicity");
                (m != 0).then_some((l, m))
            })
            .collect()
    }
}

/// Class sizes and centralizer orders of `Sym(d)`.
#[derive(Clone, Debug, Serialize)]
pub struct ClassData {
    pub degree: usize,
    pub cycle_types: Vec<Partition>,
    pub class_sizes: Vec<u128>,
    pub centralizer_orders: Vec<u128>,
}

pub fn class_data(degree: usize) -> ClassData {
    let order: u128 = (1..=degree as u128).product();
    let cycle_types = partitions(degree);
    let centralizer_orders: Vec<u128> = cycle_types.iter().map(|p| p.centralizer_order()).collect();
    let class_sizes = centralizer_orders.iter().map(|z| order / z).collect();
    ClassData {
        degree,
        cycle_types,
        class_sizes,
        centralizer_orders,
    }
}

/// A permutation of the given cycle type on consecutive points.
pub fn class_representative(cycle_type: &Partition) -> Permutation {
    let d = cycle_type.weight();
    let mut images = Vec::with_capacity(d);
    let mut start = 0;
    for &len in cycle_type.parts() {
        for k in 0..len {
            images.push(start + (k + 1) % len + 1);
        }
        start += len;
    }
    Permutation::from_images(&images).expect("cycles are disjoint")
}

type MnKey = (Partition, Partition);

fn mn_memo() -> &'static Mutex<HashMap<MnKey, i64>> {
    static MEMO: OnceLock<Mutex<HashMap<MnKey, i64>>> = OnceLock::new();
    MEMO.get_or_init(|| Mutex::new(HashMap::new()))
}

fn mn_rec(shape: &Partition, rho: &[usize]) -> i64 {
    let Some((&r, rest)) = rho.split_first() else {
        return i64::from(shape.is_empty());
    };
    let key = (shape.clone(), Partition::new(rho.to_vec()));
    if let Some(&v) = mn_memo().lock().unwrap().get(&key) {
        return v;
    }
    // border strips of length r are removals β ↦ β − r on the beta-set
    let l = shape.len();
    let beta: Vec<usize> = shape.parts().iter().enumerate().map(|(i, &p)| p + l - 1 - i).collect();
    let mut total = 0;
    for (i, &b) in beta.iter().enumerate() {
        if b < r || beta.contains(&(b - r)) {
            continue;
        }
        let nb = b - r;
        let height = beta.iter().filter(|&&x| nb < x && x < b).count();
        let mut next = beta.clone();
        next[i] = nb;
        next.sort_unstable_by(|a, b| b.cmp(a));
        let parts = next.iter().enumerate().map(|(j, &x)| x - (l - 1 - j)).collect();
        let sign = if height % 2 == 0 { 1 } else { -1 };
        total += sign * mn_rec(&Partition::new(parts), rest);
    }
    mn_memo().lock().unwrap().insert(key, total);
    total
}

/// `χ^λ(ρ)` by the Murnaghan–Nakayama rule.
pub fn mn_character(lambda: &Partition, rho: &Partition) -> Result<i64> {
    if lambda.weight() != rho.weight() {
        return Err(Error::InvalidInput(format!(
            "weights differ: |{lambda}| = {} and |{rho}| = {}",
            lambda.weight(),
            rho.weight()
        )));
    }
    Ok(mn_rec(lambda, rho.parts()))
}

pub fn irreducible(lambda: &Partition) -> CharacterVector {
    CharacterVector::from_fn(lambda.weight(), |rho| mn_rec(lambda, rho.parts()))
}

pub fn trivial_character(degree: usize) -> CharacterVector {
    CharacterVector::from_fn(degree, |_| 1)
}

pub fn sign_character(degree: usize) -> CharacterVector {
    CharacterVector::from_fn(degree, |p| p.sign())
}

/// `Λ^m_d`: partitions of `d` with exactly `m` odd parts.
pub fn lambda_set(d: usize, odd: usize) -> Vec<Partition> {
    partitions(d).into_iter().filter(|p| p.odd_parts() == odd).collect()
}

/// `Λ'^u_d`: partitions of `d` whose conjugates have exactly `u` odd parts.
pub fn lambda_prime_set(d: usize, odd: usize) -> Vec<Partition> {
    partitions(d).into_iter().filter(|p| p.conjugate().odd_parts() == odd).collect()
}

pub fn sum_of_irreducibles(degree: usize, labels: &[Partition]) -> CharacterVector {
    labels.iter().fold(CharacterVector::zero(degree), |acc, l| acc.add(&irreducible(l)))
}

/// The permutation character of `Sym(2n)` on `Ξ_{2n}`, by counting the
/// involutions fixed under conjugation by a class representative.
pub fn perm_character_xi(two_n: usize) -> Result<CharacterVector> {
    if two_n == 0 || two_n % 2 == 1 || two_n > 12 {
        return Err(Error::InvalidInput(format!("2n = {two_n} must be even and in 2..=12")));
    }
    let xi = fpf_involutions(two_n);
    Ok(CharacterVector::from_fn(two_n, |rho| {
        let g = class_representative(rho);
        xi.iter().filter(|x| x.relabel(&g) == **x).count() as i64
    }))
}

/// Constituent labels of the character of the component with `s` copies of
/// the transposition block in degree `two_n`: no odd parts, conjugate with
/// exactly `2s` odd parts.
pub fn phi_constituents(two_n: usize, s: usize) -> Vec<Partition> {
    lambda_set(two_n, 0)
        .into_iter()
        .filter(|p| p.conjugate().odd_parts() == 2 * s)
        .collect()
}

/// `φ_μ` for `μ = (4t, 2s)`.
pub fn phi_mu(mu: &MuLabel) -> Result<CharacterVector> {
    let two_n = 2 * mu.n;
    if two_n > 12 {
        return Err(Error::InvalidInput(format!("2n = {two_n} exceeds 12")));
    }
    Ok(sum_of_irreducibles(two_n, &phi_constituents(two_n, mu.s)))
}

/// Sub-multisets of `gamma` of the given weight, with the multiplicity
/// factor `∏ binom(m_i(γ), m_i(α))`.
fn split_multiset(gamma: &Partition, weight: usize) -> Vec<(Partition, Partition, i128)> {
    let mult = gamma.multiplicities();
    let mut out = Vec::new();
    fn rec(
        i: usize,
        mult: &[usize],
        left: usize,
        alpha: &mut Vec<usize>,
        beta: &mut Vec<usize>,
        coef: i128,
        out: &mut Vec<(Partition, Partition, i128)>,
    ) {
        if i == mult.len() {
            if left == 0 {
                out.push((Partition::new(alpha.clone()), Partition::new(beta.clone()), coef));
            }
            return;
        }
        if i == 0 {
            return rec(1, mult, left, alpha, beta, coef, out);
        }
        let m = mult[i];
        for a in 0..=m {
            if a * i > left {
                break;
            }
            let (al, bl) = (alpha.len(), beta.len());
            alpha.extend(std::iter::repeat_n(i, a));
            beta.extend(std::iter::repeat_n(i, m - a));
            rec(i + 1, mult, left - a * i, alpha, beta, coef * binomial(m, a), out);
            alpha.truncate(al);
            beta.truncate(bl);
        }
    }
    rec(0, &mult, weight, &mut Vec::new(), &mut Vec::new(), 1, &mut out);
    out
}

fn binomial(n: usize, k: usize) -> i128 {
    (0..k).fold(1i128, |acc, j| acc * (n - j) as i128 / (j + 1) as i128)
}

/// Induction from `Sym(a) × Sym(b)` to `Sym(a+b)` by class fusion: the value
/// at `γ` is `Σ_{α ⊎ β = γ} χ_a(α) χ_b(β) z_γ / (z_α z_β)`.
pub fn induce_character(chi_a: &CharacterVector, chi_b: &CharacterVector) -> CharacterVector {
    let (a, b) = (chi_a.degree(), chi_b.degree());
    CharacterVector::from_fn(a + b, |gamma| {
        let total: i128 = split_multiset(gamma, a)
            .into_iter()
            .map(|(alpha, beta, coef)| coef * chi_a.value(&alpha) as i128 * chi_b.value(&beta) as i128)
            .sum();
        total as i64
    })
}

/// `⟨χ_a # χ_b, Res ψ⟩` over the Young subgroup `Sym(a) × Sym(b)`, as an
/// exact fraction `(numerator, denominator)`.
pub fn young_inner_product(chi_a: &CharacterVector, chi_b: &CharacterVector, psi: &CharacterVector) -> (i128, i128) {
    let (a, b) = (chi_a.degree(), chi_b.degree());
    assert_eq!(a + b, psi.degree());
    let fa: i128 = (1..=a as i128).product();
    let fb: i128 = (1..=b as i128).product();
    let mut num = 0i128;
    for alpha in partitions(a) {
        for beta in partitions(b) {
            let weight = (fa / alpha.centralizer_order() as i128) * (fb / beta.centralizer_order() as i128);
            num += chi_a.value(&alpha) as i128
                * chi_b.value(&beta) as i128
                * psi.value(&alpha.union(&beta)) as i128
                * weight;
        }
    }
    (num, fa * fb)
}

/// Both sides of the induced-character identity for `Ξ_{2n,2m}`.
#[derive(Clone, Debug, Serialize)]
pub struct IrsCheck {
    pub n: usize,
    pub m: usize,
    pub induced: CharacterVector,
    pub partition_sum: CharacterVector,
    pub equal: bool,
}

pub fn irs_character(n: usize, m: usize) -> Result<IrsCheck> {
    if n + m == 0 || 2 * (n + m) > 12 {
        return Err(Error::InvalidInput(format!("need 1 ≤ n + m ≤ 6, got n = {n}, m = {m}")));
    }
    let induced = if n == 0 {
        sign_character(2 * m)
    } else {
        induce_character(&perm_character_xi(2 * n)?, &sign_character(2 * m))
    };
    let d = 2 * (n + m);
    let partition_sum = sum_of_irreducibles(d, &lambda_set(d, 2 * m));
    let equal = induced == partition_sum;
    Ok(IrsCheck {
        n,
        m,
        induced,
        partition_sum,
        equal,
    })
}

/// Whether `Λ^0_{4t} ∩ Λ'^0_{4t}` is closed under conjugation, the character
/// form of `M_{(4t,0)} ⊗ alt ≅ M_{(4t,0)}`.
pub fn alt_twist_check(t: usize) -> bool {
    let set = phi_constituents(4 * t, 0);
    set.iter().all(|p| set.contains(&p.conjugate()))
}

/// Every constituent of `φ_{(4t,2s)}` occurs in `Ind(φ_{(4t,0)} # 1_{2s})`,
/// and every constituent's conjugate has exactly `2s` odd parts.
pub fn green_corollary_check(t: usize, s: usize) -> Result<bool> {
    let d = 4 * t + 2 * s;
    if d == 0 || d > 12 {
        return Err(Error::InvalidInput(format!("4t + 2s = {d} must be in 1..=12")));
    }
    let phi = phi_constituents(d, s);
    let top = sum_of_irreducibles(4 * t, &phi_constituents(4 * t, 0));
    let induced = induce_character(&top, &trivial_character(2 * s));
    let contained = phi
        .iter()
        .all(|l| induced.inner_product(&irreducible(l)).is_some_and(|m| m > 0));
    let odd = phi.iter().all(|l| l.conjugate().odd_parts() == 2 * s);
    Ok(contained && odd)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec())
    }

    fn values(c: &CharacterVector) -> Vec<i64> {
        c.values().values().copied().collect()
    }

    #[test]
    fn lambda_sets() {
        assert_eq!(lambda_set(4, 0), vec![p(&[4]), p(&[2, 2])]);
        let both: Vec<Partition> = lambda_set(8, 0)
            .into_iter()
            .filter(|x| lambda_prime_set(8, 0).contains(x))
            .collect();
        assert_eq!(both, vec![p(&[4, 4]), p(&[2, 2, 2, 2])]);
        assert_eq!(p(&[4]).conjugate().odd_parts(), 4);
    }

    #[test]
    fn trivial_and_sign() {
        for rho in partitions(5) {
            assert_eq!(mn_character(&p(&[5]), &rho).unwrap(), 1);
            assert_eq!(mn_character(&Partition::ones(5), &rho).unwrap(), rho.sign());
        }
        assert!(mn_character(&p(&[2]), &p(&[3])).is_err());
    }

    #[test]
    fn chi_22_against_xi4_fixed_points() {
        // the 2-dimensional character is (fixed points on Ξ_4) − 1
        let xi4 = fpf_involutions(4);
        let oracle = CharacterVector::from_fn(4, |rho| {
            let g = class_representative(rho);
            xi4.iter().filter(|x| x.relabel(&g) == **x).count() as i64 - 1
        });
        assert_eq!(values(&oracle), vec![2, 0, 2, -1, 0]);
        assert_eq!(irreducible(&p(&[2, 2])), oracle);
    }

    #[test]
    fn column_orthogonality_and_dimensions() {
        for d in 1..=8 {
            let irr: Vec<CharacterVector> = partitions(d).iter().map(irreducible).collect();
            for rho in partitions(d) {
                let s: i128 = irr.iter().map(|c| (c.value(&rho) as i128).pow(2)).sum();
                assert_eq!(s as u128, rho.centralizer_order(), "d = {d}, ρ = {rho}");
            }
            let fact: i128 = (1..=d as i128).product();
            let dims: i128 = irr.iter().map(|c| (c.at_identity() as i128).pow(2)).sum();
            assert_eq!(dims, fact);
        }
        for d in 1..=10 {
            for l in partitions(d) {
                assert_eq!(irreducible(&l).at_identity() as u128, l.hook_dimension());
            }
        }
    }

    #[test]
    fn xi_permutation_character() {
        assert_eq!(values(&perm_character_xi(4).unwrap()), vec![3, 1, 3, 0, 1]);
        for two_n in (2..=10).step_by(2) {
            let chi = perm_character_xi(two_n).unwrap();
            let dfact: i64 = (1..two_n as i64).step_by(2).product();
            assert_eq!(chi.at_identity(), dfact);
            assert_eq!(chi, sum_of_irreducibles(two_n, &lambda_set(two_n, 0)));
        }
        assert!(perm_character_xi(3).is_err());
    }

    #[test]
    fn phi_examples() {
        let mu = |n, s| MuLabel::new(n, s).unwrap();
        assert_eq!(phi_mu(&mu(2, 2)).unwrap(), trivial_character(4));
        assert_eq!(phi_mu(&mu(2, 0)).unwrap(), irreducible(&p(&[2, 2])));
        assert_eq!(phi_constituents(6, 1), vec![p(&[4, 2]), p(&[2, 2, 2])]);
        for n in 1..=5 {
            let total = (0..=n)
                .filter(|s| (n - s) % 2 == 0)
                .map(|s| phi_mu(&mu(n, s)).unwrap())
                .fold(CharacterVector::zero(2 * n), |a, b| a.add(&b));
            assert_eq!(total, perm_character_xi(2 * n).unwrap());
        }
    }

    #[test]
    fn induction_examples() {
        let ind = induce_character(&trivial_character(2), &trivial_character(2));
        assert_eq!(ind.at_identity(), 6);
        let irs = irs_character(1, 1).unwrap();
        assert!(irs.equal);
        assert_eq!(irs.induced.at_identity(), 6);
        assert_eq!(lambda_set(4, 2), vec![p(&[3, 1]), p(&[2, 1, 1])]);
        assert_eq!(irs_character(0, 1).unwrap().induced, sign_character(2));
        assert_eq!(irs_character(2, 0).unwrap().induced, perm_character_xi(4).unwrap());
    }

    #[test]
    fn frobenius_reciprocity() {
        let chi_a = irreducible(&p(&[2, 1]));
        let chi_b = irreducible(&p(&[2]));
        let ind = induce_character(&chi_a, &chi_b);
        for l in partitions(5) {
            let lhs = ind.inner_product(&irreducible(&l)).unwrap() as i128;
            let (num, den) = young_inner_product(&chi_a, &chi_b, &irreducible(&l));
            assert_eq!(lhs * den, num, "λ = {l}");
        }
    }

    #[test]
    fn twist_and_corollary() {
        assert!(alt_twist_check(0));
        assert!(alt_twist_check(1));
        assert!(alt_twist_check(2));
        assert!(green_corollary_check(1, 0).unwrap());
        assert!(green_corollary_check(0, 2).unwrap());
        assert!(green_corollary_check(1, 1).unwrap());
        assert_eq!(p(&[4, 2]).conjugate(), p(&[2, 2, 1, 1]));
    }
}
