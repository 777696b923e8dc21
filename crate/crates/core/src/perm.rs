//! Permutations on `{1..d}`, finitely generated permutation groups and group
//! actions.
//!
//! Points are 1-based at every public boundary (cycle notation, `image`,
//! `support`); the image table is stored 0-based.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::hash::Hash;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::partition::Partition;

/// Default cap on the number of elements produced by [`group_closure`].
pub const DEFAULT_CLOSURE_CAP: usize = 10_000_000;

/// Largest degree for which `Sym(d)` is enumerated outright.
pub const BRUTE_FORCE_DEGREE: usize = 8;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u16>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as u16).collect(),
        }
    }

    /// From 1-based images: `images[x-1] = p(x)`.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let d = images.len();
        let mut seen = vec![false; d];
        let mut out = Vec::with_capacity(d);
        for &y in images {
            if y == 0 || y > d || seen[y - 1] {
                return Err(Error::InvalidPermutation(format!("{images:?} is not a bijection on 1..{d}")));
            }
            seen[y - 1] = true;
            out.push((y - 1) as u16);
        }
        Ok(Permutation { images: out })
    }

    /// From 0-based images. Caller guarantees a bijection.
    pub(crate) fn from_zero_based(images: Vec<u16>) -> Self {
        debug_assert!({
            let mut s = images.clone();
            s.sort_unstable();
            s.iter().enumerate().all(|(i, &v)| i == v as usize)
        });
        Permutation { images }
    }

    /// Builds a permutation of the given degree from disjoint cycles (1-based).
    pub fn from_cycles(degree: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<u16> = (0..degree as u16).collect();
        let mut seen = vec![false; degree];
        for cycle in cycles {
            for (k, &a) in cycle.iter().enumerate() {
                if a == 0 || a > degree {
                    return Err(Error::InvalidPermutation(format!("point {a} outside 1..{degree}")));
                }
                if seen[a - 1] {
                    return Err(Error::InvalidPermutation(format!("repeated point {a}")));
                }
                seen[a - 1] = true;
                let b = cycle[(k + 1) % cycle.len()];
                if b == 0 || b > degree {
                    return Err(Error::InvalidPermutation(format!("point {b} outside 1..{degree}")));
                }
                images[a - 1] = (b - 1) as u16;
            }
        }
        Ok(Permutation { images })
    }

    /// Parses cycle notation such as `"(1 2)(3 4)"`; `"()"` is the identity.
    /// The degree is always explicit.
    pub fn parse(text: &str, degree: usize) -> Result<Self> {
        let mut cycles: Vec<Vec<usize>> = Vec::new();
        let mut rest = text.trim();
        while !rest.is_empty() {
            let Some(stripped) = rest.strip_prefix('(') else {
                return Err(Error::Parse(format!("expected '(' in {text:?}")));
            };
            let Some(close) = stripped.find(')') else {
                return Err(Error::Parse(format!("unbalanced parenthesis in {text:?}")));
            };
            let body = &stripped[..close];
            let pts = body
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|t| !t.is_empty())
                .map(|t| t.parse::<usize>().map_err(|e| Error::Parse(format!("{t:?}: {e}"))))
                .collect::<Result<Vec<_>>>()?;
            if !pts.is_empty() {
                cycles.push(pts);
            }
            rest = stripped[close + 1..].trim_start();
        }
        let refs: Vec<&[usize]> = cycles.iter().map(|c| c.as_slice()).collect();
        Permutation::from_cycles(degree, &refs).map_err(|e| match e {
            Error::InvalidPermutation(m) => Error::Parse(m),
            other => other,
        })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of the 1-based point `x`.
    pub fn image(&self, x: usize) -> usize {
        self.images[x - 1] as usize + 1
    }

    pub(crate) fn images0(&self) -> &[u16] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i == v as usize)
    }

    /// `(self ∘ q)(x) = self(q(x))`.
    pub fn compose(&self, q: &Permutation) -> Result<Permutation> {
        if self.degree() != q.degree() {
            return Err(Error::DegreeMismatch(self.degree(), q.degree()));
        }
        Ok(self.mul(q))
    }

    /// Unchecked composition; degrees must agree.
    pub(crate) fn mul(&self, q: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), q.degree());
        Permutation {
            images: q.images.iter().map(|&y| self.images[y as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u16; self.degree()];
        for (i, &v) in self.images.iter().enumerate() {
            inv[v as usize] = i as u16;
        }
        Permutation { images: inv }
    }

    /// `g⁻¹ ∘ self ∘ g`.
    pub fn conjugate(&self, g: &Permutation) -> Result<Permutation> {
        if self.degree() != g.degree() {
            return Err(Error::DegreeMismatch(self.degree(), g.degree()));
        }
        Ok(self.conj_unchecked(g))
    }

    pub(crate) fn conj_unchecked(&self, g: &Permutation) -> Permutation {
        g.inverse().mul(&self.mul(g))
    }

    /// `g ∘ self ∘ g⁻¹`: the left conjugation action, relabelling each point `a` by `g(a)`.
    pub(crate) fn relabel(&self, g: &Permutation) -> Permutation {
        let mut images = vec![0u16; self.degree()];
        for (a, &b) in self.images.iter().enumerate() {
            images[g.images[a] as usize] = g.images[b as usize];
        }
        Permutation { images }
    }

    /// Disjoint cycles of length at least two, each starting at its least point (1-based).
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] || self.images[start] as usize == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x + 1);
                x = self.images[x] as usize;
            }
            out.push(cycle);
        }
        out
    }

    /// Cycle lengths including fixed points, sorted descending.
    pub fn cycle_type(&self) -> Partition {
        let mut seen = vec![false; self.degree()];
        let mut lens = Vec::new();
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                len += 1;
                x = self.images[x] as usize;
            }
            lens.push(len);
        }
        Partition::new(lens)
    }

    pub fn sign(&self) -> i64 {
        let cycles = self.cycle_type().len();
        if (self.degree() - cycles).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    pub fn is_even(&self) -> bool {
        self.sign() == 1
    }

    /// Points moved by the permutation (1-based, ascending).
    pub fn support(&self) -> Vec<usize> {
        self.images
            .iter()
            .enumerate()
            .filter(|(i, &v)| *i != v as usize)
            .map(|(i, _)| i + 1)
            .collect()
    }

    pub fn order(&self) -> usize {
        self.cycle_type().parts().iter().fold(1, |acc, &l| lcm(acc, l))
    }

    /// Copy of this permutation acting on points `offset+1..offset+d` inside degree `new_degree`.
    pub fn embed(&self, offset: usize, new_degree: usize) -> Permutation {
        assert!(offset + self.degree() <= new_degree);
        let mut images: Vec<u16> = (0..new_degree as u16).collect();
        for (i, &v) in self.images.iter().enumerate() {
            images[offset + i] = (offset + v as usize) as u16;
        }
        Permutation { images }
    }

    /// Restriction to a set of points that the permutation maps into itself,
    /// relabelled to `1..points.len()` in the given order. Points are 1-based.
    pub fn restrict(&self, points: &[usize]) -> Option<Permutation> {
        let pos: HashMap<usize, usize> = points.iter().enumerate().map(|(i, &p)| (p, i)).collect();
        let mut images = Vec::with_capacity(points.len());
        for &p in points {
            images.push(*pos.get(&self.image(p))? as u16);
        }
        Some(Permutation { images })
    }
}

fn lcm(a: usize, b: usize) -> usize {
    let (mut x, mut y) = (a, b);
    while y != 0 {
        (x, y) = (y, x % y);
    }
    a / x * b
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            let s: Vec<String> = c.iter().map(|x| x.to_string()).collect();
            write!(f, "({})", s.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}[{}]", self.degree())
    }
}

/// Breadth-first closure of `gens` from the identity. Elements appear in
/// discovery order, so the result is reproducible.
pub fn group_closure(degree: usize, gens: &[Permutation], cap: usize) -> Result<Vec<Permutation>> {
    for g in gens {
        if g.degree() != degree {
            return Err(Error::DegreeMismatch(degree, g.degree()));
        }
    }
    let id = Permutation::identity(degree);
    let mut seen: HashSet<Permutation> = HashSet::new();
    let mut out = vec![id.clone()];
    seen.insert(id);
    let mut head = 0;
    while head < out.len() {
        let x = out[head].clone();
        head += 1;
        for g in gens {
            let y = x.mul(g);
            if !seen.contains(&y) {
                if out.len() >= cap {
                    return Err(Error::ClosureCap { cap });
                }
                seen.insert(y.clone());
                out.push(y);
            }
        }
    }
    Ok(out)
}

/// Every permutation of degree `d` in lexicographic order of image tables.
pub fn symmetric_group_elements(d: usize) -> Vec<Permutation> {
    let mut cur: Vec<u16> = (0..d as u16).collect();
    let mut out = vec![Permutation { images: cur.clone() }];
    loop {
        // next lexicographic permutation
        let Some(i) = (1..d).rev().find(|&i| cur[i - 1] < cur[i]) else {
            break;
        };
        let j = (i..d).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
        cur.swap(i - 1, j);
        cur[i..].reverse();
        out.push(Permutation { images: cur.clone() });
    }
    out
}

pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    elements: OnceLock<Vec<Permutation>>,
}

impl Clone for PermGroup {
    fn clone(&self) -> Self {
        let elements = OnceLock::new();
        if let Some(e) = self.elements.get() {
            let _ = elements.set(e.clone());
        }
        PermGroup {
            degree: self.degree,
            generators: self.generators.clone(),
            elements,
        }
    }
}

impl fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PermGroup")
            .field("degree", &self.degree)
            .field("generators", &self.generators)
            .finish()
    }
}

impl PermGroup {
    pub fn new(degree: usize, generators: Vec<Permutation>) -> Result<Self> {
        for g in &generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch(degree, g.degree()));
            }
        }
        let generators = generators.into_iter().filter(|g| !g.is_identity()).collect();
        Ok(PermGroup {
            degree,
            generators,
            elements: OnceLock::new(),
        })
    }

    pub fn trivial(degree: usize) -> Self {
        PermGroup {
            degree,
            generators: Vec::new(),
            elements: OnceLock::new(),
        }
    }

    /// `Sym(d)` generated by `(1 2)` and `(1 2 ... d)`.
    pub fn symmetric(degree: usize) -> Self {
        let mut gens = Vec::new();
        if degree >= 2 {
            gens.push(Permutation::from_cycles(degree, &[&[1, 2]]).unwrap());
            let cyc: Vec<usize> = (1..=degree).collect();
            gens.push(Permutation::from_cycles(degree, &[&cyc]).unwrap());
        }
        PermGroup::new(degree, gens).unwrap()
    }

    /// Wraps a known, closed element list, choosing a small generating set greedily.
    pub fn from_elements(degree: usize, elements: Vec<Permutation>) -> Result<Self> {
        let members: HashSet<&Permutation> = elements.iter().collect();
        let mut gens: Vec<Permutation> = Vec::new();
        let mut span: HashSet<Permutation> = HashSet::from([Permutation::identity(degree)]);
        for g in &elements {
            if span.contains(g) {
                continue;
            }
            gens.push(g.clone());
            span = group_closure(degree, &gens, elements.len() + 1)?.into_iter().collect();
            if span.len() == elements.len() {
                break;
            }
        }
        if span.len() != elements.len() || !span.iter().all(|x| members.contains(x)) {
            return Err(Error::InvalidInput("element list is not a group".into()));
        }
        let group = PermGroup::new(degree, gens)?;
        let _ = group.elements.set(elements);
        Ok(group)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn try_elements(&self, cap: usize) -> Result<&[Permutation]> {
        if let Some(e) = self.elements.get() {
            return Ok(e);
        }
        let e = group_closure(self.degree, &self.generators, cap)?;
        Ok(self.elements.get_or_init(|| e))
    }

    /// Element list with the default cap.
    ///
    /// # Panics
    /// If the group exceeds [`DEFAULT_CLOSURE_CAP`] elements.
    pub fn elements(&self) -> &[Permutation] {
        self.try_elements(DEFAULT_CLOSURE_CAP).expect("group too large to enumerate")
    }

    pub fn order(&self) -> usize {
        self.elements().len()
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        self.elements().contains(g)
    }

    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        let big: HashSet<&Permutation> = other.elements().iter().collect();
        self.generators.iter().all(|g| big.contains(g))
    }

    /// Direct product of groups placed on consecutive disjoint blocks of points.
    pub fn direct_product(factors: &[&PermGroup]) -> PermGroup {
        let degree: usize = factors.iter().map(|g| g.degree).sum();
        let mut gens = Vec::new();
        let mut offset = 0;
        for f in factors {
            gens.extend(f.generators.iter().map(|g| g.embed(offset, degree)));
            offset += f.degree;
        }
        PermGroup::new(degree, gens).unwrap()
    }

    /// A Sylow 2-subgroup, grown one index-2 step at a time inside the normalizer.
    pub fn sylow2(&self) -> PermGroup {
        let elements = self.elements();
        let target = 1usize << elements.len().trailing_zeros();
        let mut gens: Vec<Permutation> = Vec::new();
        let mut members: HashSet<Permutation> = HashSet::from([Permutation::identity(self.degree)]);
        while members.len() < target {
            let next = elements.iter().find(|g| {
                !members.contains(*g)
                    && members.contains(&g.mul(g))
                    && gens.iter().all(|p| members.contains(&p.conj_unchecked(g)))
            });
            let g = next.expect("a p-subgroup below Sylow order has a proper normalizer").clone();
            gens.push(g);
            members = group_closure(self.degree, &gens, target + 1)
                .expect("2-subgroup closure")
                .into_iter()
                .collect();
        }
        PermGroup::new(self.degree, gens).unwrap()
    }

    /// Whether every generator is an even permutation.
    pub fn is_in_alternating(&self) -> bool {
        self.generators.iter().all(|g| g.is_even())
    }
}

/// 2-adic valuation of `m!` (Legendre).
pub fn two_part_exponent_factorial(m: usize) -> u32 {
    let mut e = 0;
    let mut q = m / 2;
    while q > 0 {
        e += q as u32;
        q /= 2;
    }
    e
}

/// Sylow 2-subgroup of `Sym(m)`: iterated wreath products `C_2 ≀ ... ≀ C_2`
/// on consecutive blocks, one block per binary digit of `m`, largest first.
pub fn sylow2_sym(m: usize) -> PermGroup {
    let mut gens = Vec::new();
    let mut offset = 0;
    for k in (0..usize::BITS).rev() {
        let size = 1usize << k;
        if m & size == 0 {
            continue;
        }
        for j in 0..k {
            let half = 1usize << j;
            let mut images: Vec<u16> = (0..m as u16).collect();
            for a in 0..half {
                images[offset + a] = (offset + a + half) as u16;
                images[offset + a + half] = (offset + a) as u16;
            }
            gens.push(Permutation { images });
        }
        offset += size;
    }
    PermGroup::new(m, gens).unwrap()
}

/// `base ≀ top` in its imprimitive action on `b·u` points: block `i` holds
/// points `i·b+1..(i+1)·b`, every block carries a copy of `base` and `top`
/// permutes the blocks.
pub fn wreath_embed(base: &PermGroup, top: &PermGroup) -> PermGroup {
    let b = base.degree();
    let u = top.degree();
    let degree = b * u;
    let mut gens = Vec::new();
    for block in 0..u {
        gens.extend(base.generators().iter().map(|g| g.embed(block * b, degree)));
    }
    for t in top.generators() {
        let mut images = vec![0u16; degree];
        for block in 0..u {
            let target = t.images[block] as usize;
            for r in 0..b {
                images[block * b + r] = (target * b + r) as u16;
            }
        }
        gens.push(Permutation { images });
    }
    PermGroup::new(degree, gens).unwrap()
}

/// Action map of a left action: `act(g, act(h, x)) = act(g ∘ h, x)`.
pub type ActFn<P> = fn(&Permutation, &P) -> P;

/// Left conjugation `x ↦ g x g⁻¹`.
pub fn conjugation_action(g: &Permutation, x: &Permutation) -> Permutation {
    x.relabel(g)
}

/// Natural action on 1-based points.
pub fn natural_action(g: &Permutation, x: &usize) -> usize {
    g.image(*x)
}

/// A finite G-set with a precomputed table of generator moves.
#[derive(Clone)]
pub struct GroupAction<P: Clone + Eq + Hash> {
    group: PermGroup,
    points: Vec<P>,
    index: HashMap<P, usize>,
    act: ActFn<P>,
    table: Vec<Vec<u32>>,
}

impl<P: Clone + Eq + Hash + fmt::Debug> GroupAction<P> {
    pub fn new(group: PermGroup, points: Vec<P>, act: ActFn<P>) -> Result<Self> {
        let index: HashMap<P, usize> = points.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        if index.len() != points.len() {
            return Err(Error::InvalidInput("repeated point in G-set".into()));
        }
        let mut action = GroupAction {
            group,
            points,
            index,
            act,
            table: Vec::new(),
        };
        let table = action
            .group
            .generators()
            .iter()
            .map(|g| action.index_permutation(g))
            .collect::<Result<Vec<_>>>()?;
        action.table = table;
        Ok(action)
    }

    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    pub fn points(&self) -> &[P] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn index_of(&self, p: &P) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn act(&self, g: &Permutation, p: &P) -> P {
        (self.act)(g, p)
    }

    /// Generator moves: `table()[k][x]` is the index of `gens[k]·points[x]`.
    pub fn table(&self) -> &[Vec<u32>] {
        &self.table
    }

    /// Action of an arbitrary permutation as a map on point indices.
    pub fn index_permutation(&self, g: &Permutation) -> Result<Vec<u32>> {
        let mut row = Vec::with_capacity(self.points.len());
        let mut hit = vec![false; self.points.len()];
        for p in &self.points {
            let q = (self.act)(g, p);
            let Some(&j) = self.index.get(&q) else {
                return Err(Error::InvalidInput(format!("{q:?} is not a point of the G-set")));
            };
            if hit[j] {
                return Err(Error::InvalidInput("action of a generator is not a permutation".into()));
            }
            hit[j] = true;
            row.push(j as u32);
        }
        Ok(row)
    }

    /// Orbits as sorted lists of point indices, ordered by least element.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        orbits_of(self.points.len(), &self.table)
    }

    pub fn is_transitive(&self) -> bool {
        self.orbits().len() <= 1
    }

    /// Points fixed by every generator of `q`.
    pub fn fixed_points(&self, q: &PermGroup) -> Vec<P> {
        self.fixed_point_indices(q).into_iter().map(|i| self.points[i].clone()).collect()
    }

    pub fn fixed_point_indices(&self, q: &PermGroup) -> Vec<usize> {
        (0..self.points.len())
            .filter(|&i| {
                q.generators()
                    .iter()
                    .all(|g| (self.act)(g, &self.points[i]) == self.points[i])
            })
            .collect()
    }

    /// Spot-checks `g·(h·x) = (g∘h)·x` on the given index triples.
    pub fn check_compatibility(&self, samples: &[(usize, usize, usize)]) -> bool {
        let gens = self.group.generators();
        if gens.is_empty() {
            return true;
        }
        samples.iter().all(|&(a, b, x)| {
            let g = &gens[a % gens.len()];
            let h = &gens[b % gens.len()];
            let p = &self.points[x % self.points.len()];
            self.act(g, &self.act(h, p)) == self.act(&g.mul(h), p)
        })
    }
}

/// Orbits of the group generated by index maps on `0..n`.
pub fn orbits_of(n: usize, maps: &[Vec<u32>]) -> Vec<Vec<usize>> {
    let mut label = vec![usize::MAX; n];
    let mut out = Vec::new();
    for start in 0..n {
        if label[start] != usize::MAX {
            continue;
        }
        let id = out.len();
        let mut orbit = vec![start];
        label[start] = id;
        let mut queue = VecDeque::from([start]);
        while let Some(x) = queue.pop_front() {
            for m in maps {
                let y = m[x] as usize;
                if label[y] == usize::MAX {
                    label[y] = id;
                    orbit.push(y);
                    queue.push_back(y);
                }
            }
        }
        orbit.sort_unstable();
        out.push(orbit);
    }
    out
}

/// All fixed-point-free involutions of `{1..two_n}` in lexicographic order of
/// their pairings, with the conjugation action of `Sym(two_n)`.
pub fn enumerate_fpf_involutions(two_n: usize) -> Result<GroupAction<Permutation>> {
    if two_n == 0 || two_n % 2 == 1 || two_n > 12 {
        return Err(Error::InvalidInput(format!("2n = {two_n} must be even and in 2..=12")));
    }
    let points = fpf_involutions(two_n);
    GroupAction::new(PermGroup::symmetric(two_n), points, conjugation_action)
}

pub(crate) fn fpf_involutions(two_n: usize) -> Vec<Permutation> {
    fn rec(images: &mut Vec<u16>, used: &mut Vec<bool>, out: &mut Vec<Permutation>) {
        let Some(a) = used.iter().position(|&u| !u) else {
            out.push(Permutation { images: images.clone() });
            return;
        };
        used[a] = true;
        for b in a + 1..used.len() {
            if used[b] {
                continue;
            }
            used[b] = true;
            images[a] = b as u16;
            images[b] = a as u16;
            rec(images, used, out);
            used[b] = false;
        }
        used[a] = false;
    }
    let mut out = Vec::new();
    rec(&mut (0..two_n as u16).collect(), &mut vec![false; two_n], &mut out);
    out
}

fn brute_force_check(degree: usize) -> Result<()> {
    if degree > BRUTE_FORCE_DEGREE {
        return Err(Error::DegreeTooLarge {
            degree,
            limit: BRUTE_FORCE_DEGREE,
        });
    }
    Ok(())
}

/// All `g ∈ Sym(d)` commuting with every member of `xs` (the pointwise
/// stabilizer under conjugation). Brute force, `d ≤ 8`.
pub fn centralizer_of_set(xs: &[Permutation], degree: usize) -> Result<PermGroup> {
    brute_force_check(degree)?;
    for x in xs {
        if x.degree() != degree {
            return Err(Error::DegreeMismatch(degree, x.degree()));
        }
    }
    let elements: Vec<Permutation> = symmetric_group_elements(degree)
        .into_iter()
        .filter(|g| xs.iter().all(|x| x.relabel(g) == *x))
        .collect();
    PermGroup::from_elements(degree, elements)
}

/// All `g ∈ Sym(d)` mapping the set `xs` onto itself under conjugation. Brute force, `d ≤ 8`.
pub fn set_stabilizer(xs: &[Permutation], degree: usize) -> Result<PermGroup> {
    brute_force_check(degree)?;
    for x in xs {
        if x.degree() != degree {
            return Err(Error::DegreeMismatch(degree, x.degree()));
        }
    }
    let set: HashSet<&Permutation> = xs.iter().collect();
    let elements: Vec<Permutation> = symmetric_group_elements(degree)
        .into_iter()
        .filter(|g| xs.iter().all(|x| set.contains(&x.relabel(g))))
        .collect();
    PermGroup::from_elements(degree, elements)
}
