//! Fixed point sets of involutions under conjugation: star products,
//! diagonals, irreducible factorization, stabilizers, closure, and the sets
//! `W_μ` with their vertices `Q_μ`.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gf2::decompose::{decompose, is_projective_over_2group};
use crate::gf2::module::{EndAlgebraBasis, PermModule};
use crate::perm::{
    centralizer_of_set, fpf_involutions, natural_action, orbits_of, set_stabilizer, sylow2_sym,
    two_part_exponent_factorial, wreath_embed, GroupAction, PermGroup, Permutation, BRUTE_FORCE_DEGREE,
};

/// Largest support handled by factorization and equivalence tests.
pub const MAX_FPS_DEGREE: usize = 16;

/// A finite set of involutions, stored with its support relabelled to
/// `1..d` (order preserving) and members sorted.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FPSet {
    degree: usize,
    members: Vec<Permutation>,
}

impl FPSet {
    /// Normalizes a set of involutions of a common ambient degree.
    pub fn new(members: Vec<Permutation>) -> Result<Self> {
        let Some(first) = members.first() else {
            return Err(Error::InvalidInput("a fixed point set has at least one member".into()));
        };
        let ambient = first.degree();
        let mut support = BTreeSet::new();
        for x in &members {
            if x.degree() != ambient {
                return Err(Error::DegreeMismatch(ambient, x.degree()));
            }
            if !x.mul(x).is_identity() {
                return Err(Error::InvalidInput(format!("{x} is not an involution")));
            }
            support.extend(x.support());
        }
        let points: Vec<usize> = support.into_iter().collect();
        let mut members: Vec<Permutation> = members
            .iter()
            .map(|x| x.restrict(&points).expect("support is invariant"))
            .collect();
        members.sort();
        members.dedup();
        Ok(FPSet {
            degree: points.len(),
            members,
        })
    }

    /// `U = Ξ_2 = {(1 2)}`.
    pub fn u() -> Self {
        FPSet::new(vec![Permutation::from_cycles(2, &[&[1, 2]]).unwrap()]).unwrap()
    }

    /// `V = Ξ_4`.
    pub fn v() -> Self {
        FPSet::new(fpf_involutions(4)).unwrap()
    }

    /// `U^s`, the singleton `{(1 2)(3 4)⋯(2s−1 2s)}`.
    pub fn u_power(s: usize) -> Result<Self> {
        if s == 0 {
            return Err(Error::InvalidInput("U^0 has empty support".into()));
        }
        let pairs: Vec<[usize; 2]> = (0..s).map(|k| [2 * k + 1, 2 * k + 2]).collect();
        let cycles: Vec<&[usize]> = pairs.iter().map(|p| &p[..]).collect();
        FPSet::new(vec![Permutation::from_cycles(2 * s, &cycles)?])
    }

    /// `V_i = Δ^{2^i} V`.
    pub fn v_index(i: u32) -> Result<Self> {
        diag_power(&FPSet::v(), 1usize << i)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn members(&self) -> &[Permutation] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Every member moves every point of the support.
    pub fn is_fixed_point_free(&self) -> bool {
        self.members.iter().all(|x| x.support().len() == self.degree)
    }

    pub fn index_of(&self, x: &Permutation) -> Option<usize> {
        self.members.binary_search(x).ok()
    }

    /// Orbits of `⟨X⟩` on the support, as sorted 1-based point lists.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let maps: Vec<Vec<u32>> = self
            .members
            .iter()
            .map(|x| x.images0().iter().map(|&v| v as u32).collect())
            .collect();
        orbits_of(self.degree, &maps)
            .into_iter()
            .map(|o| o.into_iter().map(|p| p + 1).collect())
            .collect()
    }

    pub fn is_transitive(&self) -> bool {
        self.orbits().len() == 1
    }

    pub fn size_two_orbits(&self) -> usize {
        self.orbits().iter().filter(|o| o.len() == 2).count()
    }

    /// Some `g` with `{g x g⁻¹ : x ∈ self} = other`.
    pub fn conjugator(&self, other: &FPSet) -> Option<Permutation> {
        if self.degree != other.degree || self.len() != other.len() {
            return None;
        }
        let sizes = |x: &FPSet| {
            let mut v: Vec<usize> = x.orbits().iter().map(Vec::len).collect();
            v.sort_unstable();
            v
        };
        if sizes(self) != sizes(other) {
            return None;
        }
        let mut search = ConjugatorSearch::new(self, other);
        search.run(0).then(|| Permutation::from_zero_based(search.g.iter().map(|&v| v as u16).collect()))
    }

    pub fn is_equivalent(&self, other: &FPSet) -> bool {
        self.conjugator(other).is_some()
    }

    /// The image `{g x g⁻¹}` of this set under a relabelling of its support.
    pub fn relabel(&self, g: &Permutation) -> FPSet {
        FPSet::new(self.members.iter().map(|x| x.relabel(g)).collect()).expect("relabelling preserves the set")
    }

    /// Header `support=d members=m`, then one member per line in cycle notation.
    pub fn to_text(&self) -> String {
        let mut s = format!("support={} members={}\n", self.degree, self.len());
        for x in &self.members {
            s.push_str(&x.to_string());
            s.push('\n');
        }
        s
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
        let header = lines.next().ok_or_else(|| Error::Parse("empty input".into()))?;
        let mut degree = None;
        let mut count = None;
        for field in header.split_whitespace() {
            let (key, value) = field
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("bad header field {field:?}")))?;
            let value: usize = value.parse().map_err(|_| Error::Parse(format!("bad number {value:?}")))?;
            match key {
                "support" => degree = Some(value),
                "members" => count = Some(value),
                _ => return Err(Error::Parse(format!("unknown header field {key:?}"))),
            }
        }
        let (Some(degree), Some(count)) = (degree, count) else {
            return Err(Error::Parse("header needs support= and members=".into()));
        };
        let members = lines.map(|l| Permutation::parse(l, degree)).collect::<Result<Vec<_>>>()?;
        if members.len() != count {
            return Err(Error::Parse(format!("expected {count} members, found {}", members.len())));
        }
        let set = FPSet::new(members)?;
        if set.degree != degree || set.len() != count {
            return Err(Error::Parse("members do not have the stated support".into()));
        }
        Ok(set)
    }
}

impl fmt::Debug for FPSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m: Vec<String> = self.members.iter().map(|x| x.to_string()).collect();
        write!(f, "FPSet[d={}]{{{}}}", self.degree, m.join(", "))
    }
}

/// Backtracking over point images, keeping for each member of the source the
/// target members still consistent with the partial map.
struct ConjugatorSearch<'a> {
    src: Vec<&'a [u16]>,
    dst: Vec<&'a [u16]>,
    order: Vec<usize>,
    g: Vec<usize>,
    used: Vec<bool>,
    candidates: Vec<Vec<usize>>,
}

impl<'a> ConjugatorSearch<'a> {
    fn new(x: &'a FPSet, y: &'a FPSet) -> Self {
        let d = x.degree;
        let src: Vec<&[u16]> = x.members.iter().map(|m| m.images0()).collect();
        let dst: Vec<&[u16]> = y.members.iter().map(|m| m.images0()).collect();
        // visit points in breadth-first order along member moves
        let mut order = Vec::with_capacity(d);
        let mut seen = vec![false; d];
        for start in 0..d {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            order.push(start);
            let mut k = order.len() - 1;
            while k < order.len() {
                let p = order[k];
                for m in &src {
                    let q = m[p] as usize;
                    if !seen[q] {
                        seen[q] = true;
                        order.push(q);
                    }
                }
                k += 1;
            }
        }
        let all: Vec<usize> = (0..dst.len()).collect();
        ConjugatorSearch {
            candidates: vec![all; src.len()],
            src,
            dst,
            order,
            g: vec![usize::MAX; d],
            used: vec![false; d],
        }
    }

    fn run(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let p = self.order[depth];
        for q in 0..self.g.len() {
            if self.used[q] {
                continue;
            }
            self.g[p] = q;
            self.used[q] = true;
            let saved = self.candidates.clone();
            if self.prune(p) && self.run(depth + 1) {
                return true;
            }
            self.candidates = saved;
            self.used[q] = false;
            self.g[p] = usize::MAX;
        }
        false
    }

    /// Filters candidates using the pairs `(u, a(u))` that became fully assigned.
    fn prune(&mut self, p: usize) -> bool {
        let g = &self.g;
        for (a, cands) in self.src.iter().zip(self.candidates.iter_mut()) {
            let ap = a[p] as usize;
            let pre = a.iter().position(|&v| v as usize == p).expect("bijection");
            cands.retain(|&b| {
                let b = self.dst[b];
                (g[ap] == usize::MAX || b[g[p]] as usize == g[ap]) && (g[pre] == usize::MAX || b[g[pre]] as usize == g[p])
            });
            if cands.is_empty() {
                return false;
            }
        }
        true
    }
}

/// `X * Y`: products `x·y'` with `Y` moved onto points after the support of `X`.
pub fn star(x: &FPSet, y: &FPSet) -> FPSet {
    let d = x.degree + y.degree;
    let mut members = Vec::with_capacity(x.len() * y.len());
    for a in &x.members {
        let a = a.embed(0, d);
        for b in &y.members {
            members.push(a.mul(&b.embed(x.degree, d)));
        }
    }
    FPSet::new(members).expect("product of disjoint involutions")
}

/// `Δ^s X`: each member repeated on `s` consecutive copies of the support.
pub fn diag_power(x: &FPSet, s: usize) -> Result<FPSet> {
    if s == 0 {
        return Err(Error::InvalidInput("diagonal power needs s ≥ 1".into()));
    }
    let d = x.degree * s;
    let members = x
        .members
        .iter()
        .map(|a| (0..s).fold(Permutation::identity(d), |acc, k| acc.mul(&a.embed(k * x.degree, d))))
        .collect();
    FPSet::new(members)
}

fn restrict_set(x: &FPSet, points: &[usize]) -> Vec<Permutation> {
    let mut out: Vec<Permutation> = x
        .members
        .iter()
        .map(|m| m.restrict(points).expect("points are a union of orbits"))
        .collect();
    out.sort();
    out.dedup();
    out
}

/// Irreducible factors of `X` together with the points they occupy. A factor
/// is a minimal union of orbits `S` with `|X| = |X|_S| · |X|_{S^c}|`.
pub fn factors_with_points(x: &FPSet) -> Result<Vec<(FPSet, Vec<usize>)>> {
    if x.degree > MAX_FPS_DEGREE {
        return Err(Error::DegreeTooLarge {
            degree: x.degree,
            limit: MAX_FPS_DEGREE,
        });
    }
    let mut remaining = x.orbits();
    let mut out = Vec::new();
    while !remaining.is_empty() {
        let all: Vec<usize> = remaining.concat();
        let whole = restrict_set(x, &sorted(all)).len();
        let rest_idx: Vec<usize> = (1..remaining.len()).collect();
        let mut chosen = None;
        'size: for k in 0..=rest_idx.len() {
            for combo in combinations(&rest_idx, k) {
                let mut inside = remaining[0].clone();
                let mut outside = Vec::new();
                for (j, orbit) in remaining.iter().enumerate().skip(1) {
                    if combo.contains(&j) {
                        inside.extend(orbit);
                    } else {
                        outside.extend(orbit);
                    }
                }
                let inside = sorted(inside);
                if outside.is_empty()
                    || restrict_set(x, &inside).len() * restrict_set(x, &sorted(outside)).len() == whole
                {
                    chosen = Some((combo, inside));
                    break 'size;
                }
            }
        }
        let (combo, points) = chosen.expect("the full remainder always splits off");
        out.push((FPSet::new(restrict_set(x, &points))?, points));
        remaining = remaining
            .into_iter()
            .enumerate()
            .filter(|(j, _)| *j != 0 && !combo.contains(j))
            .map(|(_, o)| o)
            .collect();
    }
    Ok(out)
}

fn sorted(mut v: Vec<usize>) -> Vec<usize> {
    v.sort_unstable();
    v
}

fn combinations(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for (i, &first) in items.iter().enumerate() {
        for mut tail in combinations(&items[i + 1..], k - 1) {
            tail.insert(0, first);
            out.push(tail);
        }
    }
    out
}

/// Factorization into irreducible sets with multiplicities, equivalent
/// factors grouped into powers.
pub fn irreducible_factorization(x: &FPSet) -> Result<Vec<(FPSet, usize)>> {
    let mut out: Vec<(FPSet, usize)> = Vec::new();
    for (f, _) in factors_with_points(x)? {
        match out.iter_mut().find(|(g, _)| g.is_equivalent(&f)) {
            Some(entry) => entry.1 += 1,
            None => out.push((f, 1)),
        }
    }
    Ok(out)
}

/// Pointwise and setwise stabilizers of `X` in `Sym(d)` under conjugation.
#[derive(Clone, Debug)]
pub struct StabilizerData {
    /// `S_X`, the simultaneous centralizer.
    pub s: PermGroup,
    /// A Sylow 2-subgroup of `S_X`.
    pub q: PermGroup,
    /// `N_X`, the set stabilizer.
    pub n: PermGroup,
    /// Image of `N_X` acting on member indices of `X`.
    pub nbar: PermGroup,
}

fn nbar_of(x: &FPSet, n: &PermGroup) -> PermGroup {
    let gens = n
        .generators()
        .iter()
        .map(|g| {
            let images = x
                .members
                .iter()
                .map(|m| x.index_of(&m.relabel(g)).expect("N_X permutes X") as u16)
                .collect();
            Permutation::from_zero_based(images)
        })
        .collect();
    PermGroup::new(x.len(), gens).unwrap()
}

fn finish(x: &FPSet, s: PermGroup, n: PermGroup) -> StabilizerData {
    let q = s.sylow2();
    let nbar = nbar_of(x, &n);
    StabilizerData { s, q, n, nbar }
}

/// Brute-force stabilizers, degree at most 8.
pub fn brute_force_stabilizer_data(x: &FPSet) -> Result<StabilizerData> {
    let s = centralizer_of_set(&x.members, x.degree)?;
    let n = set_stabilizer(&x.members, x.degree)?;
    Ok(finish(x, s, n))
}

/// Stabilizers: brute force up to degree 8, otherwise assembled from the
/// irreducible factors (`N_{Y*Z} = N_Y × N_Z` for coprime factors, wreath
/// products for powers, and diagonals `Δ^m Z` on consecutive blocks).
pub fn stabilizer_data(x: &FPSet) -> Result<StabilizerData> {
    if x.degree <= BRUTE_FORCE_DEGREE {
        return brute_force_stabilizer_data(x);
    }
    let factors = factors_with_points(x)?;
    if factors.len() == 1 {
        return diagonal_stabilizer_data_detect(x);
    }
    assembled_stabilizer_data(x)
}

fn diagonal_stabilizer_data_detect(x: &FPSet) -> Result<StabilizerData> {
    let d = x.degree;
    for m in (2..=d).filter(|m| d.is_multiple_of(*m)) {
        let block: Vec<usize> = (1..=d / m).collect();
        let Some(parts) = x.members.iter().map(|a| a.restrict(&block)).collect::<Option<Vec<_>>>() else {
            continue;
        };
        let z = FPSet::new(parts)?;
        if z.degree == d / m && diag_power(&z, m)? == *x {
            return diagonal_stabilizer_data(&z, m);
        }
    }
    Err(Error::DegreeTooLarge {
        degree: d,
        limit: BRUTE_FORCE_DEGREE,
    })
}

/// Stabilizers of `Δ^m Z`: `S = S_Z ≀ Sym(m)` and `N = ⟨S, diag(N_Z)⟩`.
pub fn diagonal_stabilizer_data(z: &FPSet, m: usize) -> Result<StabilizerData> {
    let x = diag_power(z, m)?;
    let inner = stabilizer_data(z)?;
    let s = wreath_embed(&inner.s, &PermGroup::symmetric(m));
    let mut gens = s.generators().to_vec();
    let dz = z.degree;
    for g in inner.n.generators() {
        gens.push((0..m).fold(Permutation::identity(dz * m), |acc, k| acc.mul(&g.embed(k * dz, dz * m))));
    }
    let n = PermGroup::new(dz * m, gens)?;
    Ok(finish(&x, s, n))
}

/// Moves a permutation of `1..points.len()` onto the given points of `1..degree`.
fn place(h: &Permutation, points: &[usize], degree: usize) -> Permutation {
    let mut images: Vec<u16> = (0..degree as u16).collect();
    for (i, &p) in points.iter().enumerate() {
        images[p - 1] = (points[h.image(i + 1) - 1] - 1) as u16;
    }
    Permutation::from_zero_based(images)
}

/// Stabilizers assembled from the factorization, at any degree.
pub fn assembled_stabilizer_data(x: &FPSet) -> Result<StabilizerData> {
    let d = x.degree;
    // group equivalent factors, remembering how each copy sits relative to the first
    let mut groups: Vec<(FPSet, Vec<(Vec<usize>, Permutation)>)> = Vec::new();
    for (f, points) in factors_with_points(x)? {
        match groups.iter_mut().find_map(|(rep, copies)| rep.conjugator(&f).map(|c| (copies, c))) {
            Some((copies, c)) => copies.push((points, c)),
            None => {
                let id = Permutation::identity(f.degree);
                groups.push((f, vec![(points, id)]));
            }
        }
    }
    let mut s_gens = Vec::new();
    let mut n_gens = Vec::new();
    for (rep, copies) in &groups {
        if copies.len() == 1 && rep.degree == d {
            return Err(Error::DegreeTooLarge {
                degree: d,
                limit: BRUTE_FORCE_DEGREE,
            });
        }
        let data = stabilizer_data(rep)?;
        for (points, c) in copies {
            for h in data.s.generators() {
                s_gens.push(place(&h.relabel(c), points, d));
            }
            for h in data.n.generators() {
                n_gens.push(place(&h.relabel(c), points, d));
            }
        }
        let (p0, c0) = &copies[0];
        for (pj, cj) in &copies[1..] {
            let mut images: Vec<u16> = (0..d as u16).collect();
            for i in 1..=rep.degree {
                let a = p0[c0.image(i) - 1];
                let b = pj[cj.image(i) - 1];
                images[a - 1] = (b - 1) as u16;
                images[b - 1] = (a - 1) as u16;
            }
            let swap = Permutation::from_zero_based(images);
            if rep.len() == 1 {
                s_gens.push(swap.clone());
            }
            n_gens.push(swap);
        }
    }
    n_gens.extend(s_gens.iter().cloned());
    let s = PermGroup::new(d, s_gens)?;
    let n = PermGroup::new(d, n_gens)?;
    Ok(finish(x, s, n))
}

/// Whether `Fix_{Ξ_{2n}}(Q_X) = X` for `X` with support `{1..2n}`.
pub fn is_closed(x: &FPSet, two_n: usize) -> Result<bool> {
    if x.degree != two_n {
        return Err(Error::InvalidInput(format!(
            "set has support of size {}, expected {two_n}",
            x.degree
        )));
    }
    let data = stabilizer_data(x)?;
    Ok(is_closed_with(x, &data.q))
}

/// `Fix_{Ξ_d}(q) = X`, with `q` acting on the support of `X`.
pub fn is_closed_with(x: &FPSet, q: &PermGroup) -> bool {
    let fixed: Vec<Permutation> = fpf_involutions(x.degree)
        .into_iter()
        .filter(|y| q.generators().iter().all(|g| y.relabel(g) == *y))
        .collect();
    fixed == x.members
}

/// Components of the permutation module `kX` for `N̄_X` and which of them are projective.
#[derive(Clone, Debug, Serialize)]
pub struct ProjectiveSummary {
    pub nbar_order: usize,
    pub dimensions: Vec<usize>,
    pub projective: Vec<bool>,
}

impl ProjectiveSummary {
    pub fn projective_dimensions(&self) -> Vec<usize> {
        self.dimensions
            .iter()
            .zip(&self.projective)
            .filter(|(_, &p)| p)
            .map(|(&d, _)| d)
            .collect()
    }

    pub fn has_projective(&self) -> bool {
        self.projective.iter().any(|&p| p)
    }
}

/// Decomposes `kX` over a group acting on member indices and tests each
/// component for projectivity over a Sylow 2-subgroup.
pub fn projective_components(x: &FPSet, nbar: &PermGroup) -> Result<ProjectiveSummary> {
    if nbar.degree() != x.len() {
        return Err(Error::DegreeMismatch(x.len(), nbar.degree()));
    }
    let points: Vec<usize> = (1..=x.len()).collect();
    let action = GroupAction::new(nbar.clone(), points, natural_action)?;
    let module = PermModule::from_action(&action);
    let basis = EndAlgebraBasis::orbitals(&module);
    let dec = decompose(&module, &basis)?;
    let sylow = nbar.sylow2();
    let maps = sylow
        .generators()
        .iter()
        .map(|g| action.index_permutation(g))
        .collect::<Result<Vec<_>>>()?;
    let order = sylow.order();
    let mut dimensions = Vec::new();
    let mut projective = Vec::new();
    for c in &dec.components {
        dimensions.push(c.dimension);
        projective.push(is_projective_over_2group(&c.idempotent.column_space(), &maps, order)?);
    }
    Ok(ProjectiveSummary {
        nbar_order: nbar.order(),
        dimensions,
        projective,
    })
}

/// Closed, and `kX` has a projective component over `N̄_X`.
pub fn is_fixed_point_set(x: &FPSet) -> Result<bool> {
    let data = stabilizer_data(x)?;
    if !is_closed_with(x, &data.q) {
        return Ok(false);
    }
    Ok(projective_components(x, &data.nbar)?.has_projective())
}

/// All transitive irreducible fixed point sets with support of size at most
/// `max_degree`, one per equivalence class, found by exhaustive search over
/// subsets of `Ξ_d`.
pub fn transitive_irreducible_fixed_point_sets(max_degree: usize) -> Result<Vec<FPSet>> {
    if max_degree > 6 {
        return Err(Error::DegreeTooLarge {
            degree: max_degree,
            limit: 6,
        });
    }
    let mut found: Vec<FPSet> = Vec::new();
    for d in (2..=max_degree).step_by(2) {
        let xi = fpf_involutions(d);
        for mask in 1u64..(1 << xi.len()) {
            let members: Vec<Permutation> = (0..xi.len()).filter(|&i| mask >> i & 1 == 1).map(|i| xi[i].clone()).collect();
            let x = FPSet::new(members)?;
            if !x.is_transitive() || found.iter().any(|f| f.is_equivalent(&x)) {
                continue;
            }
            if irreducible_factorization(&x)?.len() != 1 || !is_fixed_point_set(&x)? {
                continue;
            }
            found.push(x);
        }
    }
    Ok(found)
}

/// `μ = (4t, 2s)` with `s + 2t = n`; `exponents` is the 2-adic support `I` of `t`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct MuLabel {
    pub n: usize,
    pub s: usize,
    pub t: usize,
    pub exponents: Vec<u32>,
}

impl MuLabel {
    pub fn new(n: usize, s: usize) -> Result<Self> {
        if s > n || (n - s) % 2 == 1 {
            return Err(Error::InvalidInput(format!("no label with n = {n}, s = {s}")));
        }
        let t = (n - s) / 2;
        if n == 0 {
            return Err(Error::InvalidInput("n must be positive".into()));
        }
        let exponents = (0..usize::BITS).filter(|&i| t >> i & 1 == 1).collect();
        Ok(MuLabel { n, s, t, exponents })
    }

    /// From the composition `(4t, 2s)`.
    pub fn from_composition(four_t: usize, two_s: usize) -> Result<Self> {
        if !four_t.is_multiple_of(4) || !two_s.is_multiple_of(2) {
            return Err(Error::InvalidInput(format!("({four_t},{two_s}) is not of the form (4t,2s)")));
        }
        MuLabel::new(four_t / 4 * 2 + two_s / 2, two_s / 2)
    }
}

impl fmt::Display for MuLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", 4 * self.t, 2 * self.s)
    }
}

/// All labels for `n`, by increasing `t`.
pub fn enumerate_mu(n: usize) -> Result<Vec<MuLabel>> {
    if n == 0 {
        return Err(Error::InvalidInput("n must be positive".into()));
    }
    (0..=n / 2).map(|t| MuLabel::new(n, n - 2 * t)).collect()
}

/// `W_μ = (∗_{i∈I} V_i) * U^s` on `{1..2n}`: V-blocks by increasing `i`, U-block last.
pub fn build_w(mu: &MuLabel) -> Result<FPSet> {
    let mut parts: Vec<FPSet> = mu.exponents.iter().map(|&i| FPSet::v_index(i)).collect::<Result<_>>()?;
    if mu.s > 0 {
        parts.push(FPSet::u_power(mu.s)?);
    }
    let mut iter = parts.into_iter();
    let first = iter.next().expect("label has s > 0 or nonempty I");
    Ok(iter.fold(first, |acc, p| star(&acc, &p)))
}

/// The Klein four-group `{id} ∪ Ξ_4` on `{1,2,3,4}`.
pub fn klein_four() -> PermGroup {
    PermGroup::new(4, fpf_involutions(4)).unwrap()
}

/// `Q_μ = (∏_{i∈I} H ≀ P(2^i)) × P(2s)`, laid out like [`build_w`].
#[derive(Clone, Debug)]
pub struct VertexSpec {
    pub mu: MuLabel,
    pub generators: Vec<Permutation>,
    pub order: usize,
    pub factors: String,
}

impl VertexSpec {
    pub fn group(&self) -> PermGroup {
        PermGroup::new(2 * self.mu.n, self.generators.clone()).unwrap()
    }
}

pub fn vertex_spec(mu: &MuLabel) -> Result<VertexSpec> {
    let h = klein_four();
    let mut blocks: Vec<PermGroup> = mu
        .exponents
        .iter()
        .map(|&i| wreath_embed(&h, &sylow2_sym(1 << i)))
        .collect();
    let mut names: Vec<String> = mu.exponents.iter().map(|i| format!("H≀P({})", 1usize << i)).collect();
    if mu.s > 0 {
        blocks.push(sylow2_sym(2 * mu.s));
        names.push(format!("P({})", 2 * mu.s));
    }
    let refs: Vec<&PermGroup> = blocks.iter().collect();
    let group = PermGroup::direct_product(&refs);
    if group.degree() != 2 * mu.n {
        return Err(Error::Verification("vertex blocks do not cover 2n points".into()));
    }
    Ok(VertexSpec {
        mu: mu.clone(),
        generators: group.generators().to_vec(),
        order: group.order(),
        factors: names.join(" × "),
    })
}

/// `|P(2s)| · ∏_{i∈I} 4^{2^i} |P(2^i)|`.
pub fn vertex_order_formula(mu: &MuLabel) -> u128 {
    let mut e = two_part_exponent_factorial(2 * mu.s);
    for &i in &mu.exponents {
        e += 2 * (1 << i) + two_part_exponent_factorial(1 << i);
    }
    1u128 << e
}

/// Whether `k(V_i * V_i)` has a projective component over its `N̄`, for `i ≤ 1`.
pub fn kappa_probe(i: u32) -> Result<bool> {
    Ok(kappa_probe_summary(i)?.has_projective())
}

pub fn kappa_probe_summary(i: u32) -> Result<ProjectiveSummary> {
    if i > 1 {
        return Err(Error::InvalidInput(format!("kappa probe supports i ≤ 1, got {i}")));
    }
    let vi = FPSet::v_index(i)?;
    let x = star(&vi, &vi);
    let data = stabilizer_data(&x)?;
    projective_components(&x, &data.nbar)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str, d: usize) -> Permutation {
        Permutation::parse(s, d).unwrap()
    }

    #[test]
    fn star_and_diagonal_shapes() {
        let uu = star(&FPSet::u(), &FPSet::u());
        assert_eq!(uu.members(), &[p("(1 2)(3 4)", 4)]);
        assert_eq!(uu.degree(), 4);
        let uv = star(&FPSet::u(), &FPSet::v());
        assert_eq!((uv.degree(), uv.len()), (6, 3));
        assert!(star(&FPSet::v(), &FPSet::u()).is_equivalent(&uv));
        let a = star(&star(&FPSet::u(), &FPSet::v()), &FPSet::v());
        let b = star(&FPSet::u(), &star(&FPSet::v(), &FPSet::v()));
        assert!(a.is_equivalent(&b));
        assert_eq!(diag_power(&FPSet::v(), 1).unwrap(), FPSet::v());
        let v1 = diag_power(&FPSet::v(), 2).unwrap();
        assert_eq!((v1.degree(), v1.len()), (8, 3));
        assert!(v1.members().iter().all(|m| m.cycle_type().parts() == [2; 4]));
        assert_eq!(diag_power(&FPSet::u(), 2).unwrap(), uu);
        assert!(diag_power(&FPSet::u(), 0).is_err());
    }

    #[test]
    fn normalization_relabels_support() {
        let x = FPSet::new(vec![p("(3 5)", 6)]).unwrap();
        assert_eq!(x, FPSet::u());
        assert!(FPSet::new(vec![p("(1 2 3)", 3)]).is_err());
        assert!(FPSet::new(vec![]).is_err());
    }

    #[test]
    fn equivalence_search() {
        let x = FPSet::new(vec![p("(1 2)(3 4)", 4), p("(1 3)(2 4)", 4)]).unwrap();
        let y = FPSet::new(vec![p("(1 4)(2 3)", 4), p("(1 2)(3 4)", 4)]).unwrap();
        let g = x.conjugator(&y).unwrap();
        assert_eq!(x.relabel(&g), y);
        assert!(!x.is_equivalent(&FPSet::v()));
        let v1 = FPSet::v_index(1).unwrap();
        assert!(!v1.is_equivalent(&star(&FPSet::v(), &FPSet::v())));
        let shuffled = v1.relabel(&p("(1 5 2 7)(3 8)", 8));
        assert!(v1.is_equivalent(&shuffled));
    }

    #[test]
    fn text_round_trip() {
        let w = star(&FPSet::v(), &FPSet::u());
        let text = w.to_text();
        assert!(text.starts_with("support=6 members=3\n"));
        assert_eq!(FPSet::from_text(&text).unwrap(), w);
        assert!(FPSet::from_text("support=4 members=2\n(1 2)(3 4)\n").is_err());
        assert!(FPSet::from_text("").is_err());
    }

    #[test]
    fn factorization_examples() {
        let uu = star(&FPSet::u(), &FPSet::u());
        assert_eq!(irreducible_factorization(&uu).unwrap(), vec![(FPSet::u(), 2)]);
        let w = star(&FPSet::u(), &FPSet::v());
        assert_eq!(irreducible_factorization(&w).unwrap(), vec![(FPSet::u(), 1), (FPSet::v(), 1)]);
        let v1 = FPSet::v_index(1).unwrap();
        assert_eq!(irreducible_factorization(&v1).unwrap(), vec![(v1.clone(), 1)]);
        let big = star(&star(&v1, &FPSet::v()), &FPSet::u_power(2).unwrap());
        let f = irreducible_factorization(&big).unwrap();
        assert_eq!(f.len(), 3);
        let rebuilt = f
            .iter()
            .flat_map(|(y, a)| std::iter::repeat_n(y.clone(), *a))
            .reduce(|acc, y| star(&acc, &y))
            .unwrap();
        assert!(rebuilt.is_equivalent(&big));
    }

    #[test]
    fn stabilizers_of_building_blocks() {
        let v = brute_force_stabilizer_data(&FPSet::v()).unwrap();
        assert_eq!((v.s.order(), v.n.order(), v.nbar.order()), (4, 24, 6));
        assert_eq!(v.q.order(), 4);
        let u3 = stabilizer_data(&FPSet::u_power(3).unwrap()).unwrap();
        assert_eq!(u3.nbar.order(), 1);
        assert_eq!(u3.n.order(), u3.s.order());
        let v1 = FPSet::v_index(1).unwrap();
        let brute = brute_force_stabilizer_data(&v1).unwrap();
        let diag = diagonal_stabilizer_data(&FPSet::v(), 2).unwrap();
        assert_eq!(brute.s.order(), 32);
        assert_eq!(diag.s.order(), brute.s.order());
        assert_eq!(diag.n.order(), brute.n.order());
        assert_eq!(diag.nbar.order(), 6);
        assert!(diag.s.elements().iter().all(|g| brute.s.contains(g)));
    }

    #[test]
    fn coprime_product_stabilizers() {
        let cases = [
            (FPSet::u(), FPSet::v()),
            (FPSet::v(), FPSet::u_power(2).unwrap()),
            (FPSet::u(), FPSet::u_power(1).unwrap()),
            (FPSet::v(), FPSet::v()),
        ];
        for (y, z) in cases {
            let x = star(&y, &z);
            let brute = brute_force_stabilizer_data(&x).unwrap();
            let built = assembled_stabilizer_data(&x).unwrap();
            assert_eq!(built.s.order(), brute.s.order(), "{x:?}");
            assert_eq!(built.n.order(), brute.n.order(), "{x:?}");
            assert_eq!(built.nbar.order(), brute.nbar.order());
        }
        let x = star(&FPSet::u(), &FPSet::v());
        let ny = brute_force_stabilizer_data(&FPSet::u()).unwrap().n.order();
        let nz = brute_force_stabilizer_data(&FPSet::v()).unwrap().n.order();
        assert_eq!(brute_force_stabilizer_data(&x).unwrap().n.order(), ny * nz);
    }

    #[test]
    fn closure() {
        assert!(is_closed(&FPSet::v(), 4).unwrap());
        assert!(is_closed(&FPSet::u_power(2).unwrap(), 4).unwrap());
        let two = FPSet::new(fpf_involutions(4)[..2].to_vec()).unwrap();
        assert!(!is_closed(&two, 4).unwrap());
        assert!(is_closed(&FPSet::v(), 6).is_err());
    }

    #[test]
    fn labels() {
        let l2 = enumerate_mu(2).unwrap();
        assert_eq!(l2.len(), 2);
        assert_eq!((l2[0].s, l2[0].t), (2, 0));
        assert_eq!((l2[1].s, l2[1].t, l2[1].exponents.clone()), (0, 1, vec![0]));
        let l5 = enumerate_mu(5).unwrap();
        let got: Vec<(usize, usize, Vec<u32>)> = l5.iter().map(|m| (m.s, m.t, m.exponents.clone())).collect();
        assert_eq!(got, vec![(5, 0, vec![]), (3, 1, vec![0]), (1, 2, vec![1])]);
        assert_eq!(enumerate_mu(1).unwrap().len(), 1);
        for n in 1..=8 {
            assert_eq!(enumerate_mu(n).unwrap().len(), n / 2 + 1);
        }
        assert_eq!(MuLabel::from_composition(4, 2).unwrap(), MuLabel::new(3, 1).unwrap());
        assert_eq!(MuLabel::new(3, 1).unwrap().to_string(), "(4,2)");
        assert!(MuLabel::new(3, 2).is_err());
    }

    #[test]
    fn w_sets() {
        let w = build_w(&MuLabel::new(2, 2).unwrap()).unwrap();
        assert_eq!(w.members(), &[p("(1 2)(3 4)", 4)]);
        assert_eq!(build_w(&MuLabel::new(2, 0).unwrap()).unwrap(), FPSet::v());
        let w = build_w(&MuLabel::new(3, 1).unwrap()).unwrap();
        assert_eq!((w.degree(), w.len()), (6, 3));
        for n in 1..=5 {
            let labels = enumerate_mu(n).unwrap();
            let ws: Vec<FPSet> = labels.iter().map(|m| build_w(m).unwrap()).collect();
            for (m, w) in labels.iter().zip(&ws) {
                assert_eq!(w.degree(), 2 * n);
                assert_eq!(w.len(), 3usize.pow(m.exponents.len() as u32));
                assert_eq!(w.size_two_orbits(), m.s);
                assert!(is_closed(w, 2 * n).unwrap(), "{m}");
            }
            for i in 0..ws.len() {
                for j in i + 1..ws.len() {
                    assert!(!ws[i].is_equivalent(&ws[j]));
                }
            }
        }
    }

    #[test]
    fn vertices() {
        let order = |n, s| vertex_spec(&MuLabel::new(n, s).unwrap()).unwrap().order;
        assert_eq!(order(2, 0), 4);
        assert_eq!(order(2, 2), 8);
        assert_eq!(order(4, 0), 32);
        assert_eq!(order(4, 4), 128);
        assert_eq!(order(4, 2), 32);
        assert_eq!(order(5, 5), 256);
        assert_eq!(order(5, 3), 64);
        assert_eq!(order(5, 1), 64);
        for n in 1..=5 {
            for mu in enumerate_mu(n).unwrap() {
                let v = vertex_spec(&mu).unwrap();
                assert_eq!(v.order as u128, vertex_order_formula(&mu));
                assert_eq!(v.group().is_in_alternating(), mu.s == 0);
                let w = build_w(&mu).unwrap();
                assert!(v.generators.iter().all(|g| w.members().iter().all(|x| x.relabel(g) == *x)));
                assert!(is_closed_with(&w, &v.group()));
            }
        }
    }

    #[test]
    fn projective_components_of_small_sets() {
        let v = brute_force_stabilizer_data(&FPSet::v()).unwrap();
        let summary = projective_components(&FPSet::v(), &v.nbar).unwrap();
        assert_eq!(summary.dimensions, vec![1, 2]);
        assert_eq!(summary.projective_dimensions(), vec![2]);
        let u = FPSet::u_power(2).unwrap();
        let data = stabilizer_data(&u).unwrap();
        assert_eq!(projective_components(&u, &data.nbar).unwrap().projective_dimensions(), vec![1]);
    }

    #[test]
    fn small_fixed_point_sets_are_u_and_v() {
        let found = transitive_irreducible_fixed_point_sets(4).unwrap();
        assert_eq!(found, vec![FPSet::u(), FPSet::v()]);
    }

    #[test]
    fn kappa() {
        let s = kappa_probe_summary(0).unwrap();
        assert_eq!(s.nbar_order, 72);
        assert_eq!(s.dimensions.iter().sum::<usize>(), 9);
        assert!(!s.has_projective());
    }
}
