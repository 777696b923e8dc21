//! Per-`n` campaigns: enumerate the labels `μ`, decompose `k Ξ_{2n}`, attach
//! lifted characters and Brauer data, and cross-check everything against the
//! closed-form classification.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::Instant;

use serde::Serialize;

use crate::chars::{
    alt_twist_check, class_representative, green_corollary_check, irs_character, lambda_set,
    perm_character_xi, phi_constituents, phi_mu, sum_of_irreducibles, CharacterVector,
};
use crate::error::{Error, Result};
use crate::fps::{
    build_w, enumerate_mu, is_closed, kappa_probe_summary, projective_components, stabilizer_data,
    vertex_order_formula, vertex_spec, FPSet, MuLabel, StabilizerData, VertexSpec,
};
use crate::gf2::brauer::{brauer_quotient, brauer_quotient_fixed_points, DEFAULT_BRAUER_CAP};
use crate::gf2::decompose::{decompose, is_projective_over_2group, Decomposition};
use crate::gf2::lift::{lift_decomposition, trace_with, DEFAULT_PRECISION};
use crate::gf2::module::{EndAlgebraBasis, PermModule};
use crate::partition::{partitions, Partition};
use crate::perm::{enumerate_fpf_involutions, sylow2_sym, GroupAction, Permutation, DEFAULT_CLOSURE_CAP};

pub const MAX_N: usize = 5;
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug)]
pub struct Options {
    pub precision: u32,
    pub skip_decompose: bool,
    pub max_elements: usize,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            precision: DEFAULT_PRECISION,
            skip_decompose: false,
            max_elements: DEFAULT_CLOSURE_CAP,
        }
    }
}

fn check_n(n: usize, min: usize) -> Result<()> {
    if n < min || n > MAX_N {
        return Err(Error::InvalidInput(format!("n = {n} must be in {min}..={MAX_N}")));
    }
    Ok(())
}

/// The G-set `Ξ_{2n}`, its permutation module and the orbital basis labelled
/// by half the cycle type of `xy`.
pub struct XiSetup {
    pub n: usize,
    pub action: GroupAction<Permutation>,
    pub module: PermModule,
    pub basis: EndAlgebraBasis,
}

/// The orbital of `(x, y)` in `Ξ × Ξ`: `xy` has every cycle length twice, so
/// keep every other part.
pub fn xi_pair_invariant(x: &Permutation, y: &Permutation) -> Partition {
    Partition::new(x.mul(y).cycle_type().parts().iter().step_by(2).copied().collect())
}

pub fn xi_setup(n: usize) -> Result<XiSetup> {
    let action = enumerate_fpf_involutions(2 * n)?;
    let module = PermModule::from_action(&action);
    let basis = EndAlgebraBasis::from_invariant(&module, action.points(), xi_pair_invariant)?;
    Ok(XiSetup {
        n,
        action,
        module,
        basis,
    })
}

fn perm_strings(gens: &[Permutation]) -> Vec<String> {
    gens.iter().map(|g| g.to_string()).collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct EnumerateRow {
    pub mu: String,
    pub s: usize,
    pub t: usize,
    pub exponents: Vec<u32>,
    pub w_members: Vec<String>,
    pub vertex_factors: String,
    pub vertex_order: usize,
    pub vertex_generators: Vec<String>,
}

pub fn cmd_enumerate(n: usize) -> Result<Vec<EnumerateRow>> {
    check_n(n, 1)?;
    enumerate_mu(n)?
        .into_iter()
        .map(|mu| {
            let w = build_w(&mu)?;
            let v = vertex_spec(&mu)?;
            Ok(EnumerateRow {
                mu: mu.to_string(),
                s: mu.s,
                t: mu.t,
                exponents: mu.exponents.clone(),
                w_members: perm_strings(w.members()),
                vertex_factors: v.factors.clone(),
                vertex_order: v.order,
                vertex_generators: perm_strings(&v.generators),
            })
        })
        .collect()
}

pub fn render_enumerate(n: usize, rows: &[EnumerateRow]) -> String {
    let mut out = format!("n = {n}: {} labels\n", rows.len());
    for r in rows {
        let _ = writeln!(
            out,
            "μ = {:<8} s = {} t = {} |W| = {:<3} Q = {} (order {})",
            r.mu,
            r.s,
            r.t,
            r.w_members.len(),
            r.vertex_factors,
            r.vertex_order
        );
        let _ = writeln!(out, "    W: {}", r.w_members.join(", "));
        let _ = writeln!(out, "    Q generators: {}", r.vertex_generators.join(", "));
    }
    out
}

/// One row of the component table.
#[derive(Clone, Debug, Serialize)]
pub struct ComponentRow {
    pub dimension: usize,
    pub mu: Option<String>,
    pub matched_phi: Vec<String>,
    pub vertex_order: Option<usize>,
    pub vertex_generators: Vec<String>,
    /// Brauer quotient dimension at each `Q_ν`, keyed by `ν`.
    pub brauer: BTreeMap<String, usize>,
    pub projective_over_sylow: bool,
    pub character: CharacterVector,
}

/// Per-label data shared by several checks.
struct LabelData {
    mu: MuLabel,
    w: FPSet,
    vertex: VertexSpec,
    stab: StabilizerData,
}

fn label_data(n: usize, cap: usize) -> Result<Vec<LabelData>> {
    enumerate_mu(n)?
        .into_iter()
        .map(|mu| {
            let w = build_w(&mu)?;
            let vertex = vertex_spec(&mu)?;
            let stab = stabilizer_data(&w)?;
            stab.n.try_elements(cap)?;
            Ok(LabelData { mu, w, vertex, stab })
        })
        .collect()
}

pub struct DecomposeOutcome {
    pub setup: XiSetup,
    pub decomposition: Decomposition,
    pub rows: Vec<ComponentRow>,
    /// Brauer quotient of each component at each `Q_ν` that is projective over `N̄_ν`.
    pub brauer_projective: Vec<BTreeMap<String, bool>>,
    pub brauer_cross_checks: usize,
    pub mismatches: Vec<String>,
}

/// Characters of the lifted components, one per component, in component order.
pub fn lifted_characters(setup: &XiSetup, dec: &Decomposition, precision: u32) -> Result<Vec<CharacterVector>> {
    let elements: Vec<u64> = dec.components.iter().map(|c| c.element).collect();
    let lifts = lift_decomposition(&dec.algebra, &elements, precision)?;
    let classes = partitions(2 * setup.n);
    let maps: Vec<Vec<u32>> = classes
        .iter()
        .map(|rho| setup.action.index_permutation(&class_representative(rho)))
        .collect::<Result<_>>()?;
    lifts
        .iter()
        .map(|l| {
            let mut values = BTreeMap::new();
            for (rho, map) in classes.iter().zip(&maps) {
                values.insert(rho.clone(), trace_with(&setup.basis, l, map)?);
            }
            CharacterVector::new(2 * setup.n, values)
        })
        .collect()
}

pub fn cmd_decompose(n: usize, opts: &Options) -> Result<DecomposeOutcome> {
    check_n(n, 1)?;
    let setup = xi_setup(n)?;
    let mut dec = decompose(&setup.module, &setup.basis)?;
    let characters = lifted_characters(&setup, &dec, opts.precision)?;
    let labels = label_data(n, opts.max_elements)?;
    let phis: Vec<(MuLabel, CharacterVector)> =
        labels.iter().map(|l| Ok((l.mu.clone(), phi_mu(&l.mu)?))).collect::<Result<_>>()?;

    let sylow = sylow2_sym(2 * n);
    let sylow_maps = sylow
        .generators()
        .iter()
        .map(|g| setup.action.index_permutation(g))
        .collect::<Result<Vec<_>>>()?;
    let sylow_order = sylow.try_elements(opts.max_elements)?.len();

    let mut rows = Vec::new();
    let mut brauer_projective = Vec::new();
    let mut mismatches = Vec::new();
    let mut cross_checks = 0;
    for (idx, (comp, chi)) in dec.components.iter_mut().zip(characters).enumerate() {
        let matched: Vec<&MuLabel> = phis.iter().filter(|(_, phi)| *phi == chi).map(|(m, _)| m).collect();
        if matched.len() != 1 {
            mismatches.push(format!("component {idx} matches {} labels", matched.len()));
        }
        if chi.at_identity() != comp.dimension as i64 {
            mismatches.push(format!("component {idx}: character degree differs from dimension"));
        }
        comp.mu = matched.first().map(|m| (*m).clone());
        let mut proj = BTreeMap::new();
        for l in &labels {
            let q = l.vertex.group();
            let fp = brauer_quotient_fixed_points(&comp.idempotent, &q, &setup.action)?;
            if l.vertex.order <= DEFAULT_BRAUER_CAP {
                let def = brauer_quotient(&comp.idempotent, &q, &setup.action, DEFAULT_BRAUER_CAP)?;
                cross_checks += 1;
                if def != fp.dim {
                    mismatches.push(format!(
                        "component {idx} at Q{}: relative traces give {def}, fixed points give {}",
                        l.mu, fp.dim
                    ));
                }
            }
            comp.brauer_data.insert(l.mu.to_string(), fp.dim);
            proj.insert(l.mu.to_string(), brauer_is_projective(&fp, &setup.action, l)?);
        }
        let projective_over_sylow =
            is_projective_over_2group(&comp.idempotent.column_space(), &sylow_maps, sylow_order)?;
        let vertex = comp.mu.as_ref().and_then(|m| labels.iter().find(|l| &l.mu == m));
        rows.push(ComponentRow {
            dimension: comp.dimension,
            mu: comp.mu.as_ref().map(|m| m.to_string()),
            matched_phi: matched.iter().map(|m| m.to_string()).collect(),
            vertex_order: vertex.map(|l| l.vertex.order),
            vertex_generators: vertex.map(|l| perm_strings(&l.vertex.generators)).unwrap_or_default(),
            brauer: comp.brauer_data.clone(),
            projective_over_sylow,
            character: chi.clone(),
        });
        comp.character = Some(chi);
        brauer_projective.push(proj);
    }
    Ok(DecomposeOutcome {
        setup,
        decomposition: dec,
        rows,
        brauer_projective,
        brauer_cross_checks: cross_checks,
        mismatches,
    })
}

/// Whether the Brauer quotient `e(Q)` on `k[Fix(Q)] = kW` is nonzero and
/// projective for `N̄_W`.
fn brauer_is_projective(
    fp: &crate::gf2::brauer::FixedPointBrauer,
    action: &GroupAction<Permutation>,
    l: &LabelData,
) -> Result<bool> {
    if fp.dim == 0 {
        return Ok(false);
    }
    // position in the fixed list of each member of W
    let pos: Vec<usize> = l
        .w
        .members()
        .iter()
        .map(|x| {
            let i = action.index_of(x).expect("W lies in Ξ_{2n}");
            fp.fixed.iter().position(|&f| f == i).ok_or_else(|| Error::Verification("Fix(Q) differs from W".into()))
        })
        .collect::<Result<_>>()?;
    if pos.len() != fp.fixed.len() {
        return Err(Error::Verification("Fix(Q) differs from W".into()));
    }
    let sylow = l.stab.nbar.sylow2();
    let maps: Vec<Vec<u32>> = sylow
        .generators()
        .iter()
        .map(|g| {
            let mut m = vec![0u32; pos.len()];
            for (k, &p) in pos.iter().enumerate() {
                m[p] = pos[g.image(k + 1) - 1] as u32;
            }
            m
        })
        .collect();
    is_projective_over_2group(&fp.idempotent.column_space(), &maps, sylow.order())
}

pub fn render_components(n: usize, rows: &[ComponentRow]) -> String {
    let mut out = format!("n = {n}: {} components of k Ξ_{}\n", rows.len(), 2 * n);
    for (i, r) in rows.iter().enumerate() {
        let brauer: Vec<String> = r.brauer.iter().map(|(k, v)| format!("{k}:{v}")).collect();
        let _ = writeln!(
            out,
            "[{i}] dim {:<4} μ = {:<8} |Q| = {:<4} Brauer {{{}}} projective over Sylow: {}",
            r.dimension,
            r.mu.as_deref().unwrap_or("?"),
            r.vertex_order.map(|o| o.to_string()).unwrap_or_else(|| "?".into()),
            brauer.join(", "),
            r.projective_over_sylow
        );
        let values: Vec<String> = r.character.iter().map(|(k, v)| format!("{k}:{v}")).collect();
        let _ = writeln!(out, "    χ = {}", values.join(" "));
    }
    out
}

#[derive(Clone, Debug, Serialize)]
pub struct PhiRow {
    pub mu: String,
    pub constituents: Vec<String>,
    pub dimension: i64,
    pub values: Vec<i64>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CharactersReport {
    pub n: usize,
    pub classes: Vec<String>,
    pub rows: Vec<PhiRow>,
    pub permutation_character: Vec<i64>,
    /// Whether the rows sum to the permutation character (only when all labels are listed).
    pub sum_matches: Option<bool>,
}

pub fn cmd_characters(n: usize, mu: Option<&MuLabel>) -> Result<CharactersReport> {
    check_n(n, 1)?;
    if let Some(m) = mu {
        if m.n != n {
            return Err(Error::InvalidInput(format!("label {m} does not belong to n = {n}")));
        }
    }
    let labels: Vec<MuLabel> = match mu {
        Some(m) => vec![m.clone()],
        None => enumerate_mu(n)?,
    };
    let classes = partitions(2 * n);
    let perm = perm_character_xi(2 * n)?;
    let mut total = CharacterVector::zero(2 * n);
    let mut rows = Vec::new();
    for m in &labels {
        let phi = phi_mu(m)?;
        total = total.add(&phi);
        rows.push(PhiRow {
            mu: m.to_string(),
            constituents: phi_constituents(2 * n, m.s).iter().map(|p| p.to_string()).collect(),
            dimension: phi.at_identity(),
            values: phi.values().values().copied().collect(),
        });
    }
    Ok(CharactersReport {
        n,
        classes: classes.iter().map(|c| c.to_string()).collect(),
        rows,
        permutation_character: perm.values().values().copied().collect(),
        sum_matches: mu.is_none().then(|| total == perm),
    })
}

pub fn render_characters(r: &CharactersReport) -> String {
    let width = r.classes.iter().map(String::len).max().unwrap_or(1).max(4);
    let mut out = format!("{:<10}", "class");
    for c in &r.classes {
        let _ = write!(out, " {c:>width$}");
    }
    out.push('\n');
    for row in &r.rows {
        let _ = write!(out, "{:<10}", format!("φ{}", row.mu));
        for v in &row.values {
            let _ = write!(out, " {v:>width$}");
        }
        let _ = writeln!(out, "   = Σ χ^λ, λ ∈ {{{}}}", row.constituents.join(", "));
    }
    let _ = write!(out, "{:<10}", "χ_Ξ");
    for v in &r.permutation_character {
        let _ = write!(out, " {v:>width$}");
    }
    out.push('\n');
    if let Some(ok) = r.sum_matches {
        let _ = writeln!(out, "rows sum to χ_Ξ: {ok}");
    }
    out
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub schema: u32,
    pub n: usize,
    pub precision: u32,
    pub skip_decompose: bool,
    pub components: Vec<ComponentRow>,
    pub checks: Vec<Check>,
    pub passed: bool,
    /// Wall-clock seconds per stage; kept out of the serialized report so
    /// that it is reproducible.
    #[serde(skip)]
    pub timings: Vec<(String, f64)>,
}

impl VerificationReport {
    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn render(&self) -> String {
        let mut out = format!("verification for n = {} (2n = {})\n", self.n, 2 * self.n);
        if !self.components.is_empty() {
            out.push_str(&render_components(self.n, &self.components));
        }
        for c in &self.checks {
            let _ = writeln!(out, "{} {:<32} {}", if c.passed { "PASS" } else { "FAIL" }, c.name, c.detail);
        }
        let _ = writeln!(out, "overall: {}", if self.passed { "PASS" } else { "FAIL" });
        out
    }
}

struct Recorder {
    checks: Vec<Check>,
    timings: Vec<(String, f64)>,
    clock: Instant,
}

impl Recorder {
    fn push(&mut self, name: &str, passed: bool, detail: impl Into<String>) {
        debug_assert!(self.checks.iter().all(|c| c.name != name));
        self.checks.push(Check {
            name: name.to_string(),
            passed,
            detail: detail.into(),
        });
    }

    fn lap(&mut self, stage: &str) {
        self.timings.push((stage.to_string(), self.clock.elapsed().as_secs_f64()));
        self.clock = Instant::now();
    }
}

fn failed_on<T: std::fmt::Display>(items: &[T]) -> String {
    if items.is_empty() {
        "all cases".into()
    } else {
        let s: Vec<String> = items.iter().map(|x| x.to_string()).collect();
        format!("failed: {}", s.join(", "))
    }
}

pub fn cmd_verify(n: usize, opts: &Options) -> Result<VerificationReport> {
    check_n(n, 1)?;
    let mut rec = Recorder {
        checks: Vec::new(),
        timings: Vec::new(),
        clock: Instant::now(),
    };
    let two_n = 2 * n;
    let labels = label_data(n, opts.max_elements)?;

    // characters
    let perm = perm_character_xi(two_n)?;
    rec.push(
        "perm_character_identity",
        perm == sum_of_irreducibles(two_n, &lambda_set(two_n, 0)),
        format!("χ_Ξ over {} classes", perm.values().len()),
    );
    let mut irs_bad = Vec::new();
    let mut irs_cases = 0;
    for total in 1..=n {
        for m in 0..=total {
            irs_cases += 1;
            if !irs_character(total - m, m)?.equal {
                irs_bad.push(format!("({},{m})", total - m));
            }
        }
    }
    rec.push("irs_theorem", irs_bad.is_empty(), format!("{irs_cases} (n,m) pairs; {}", failed_on(&irs_bad)));
    let phi_total = labels
        .iter()
        .map(|l| phi_mu(&l.mu))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .fold(CharacterVector::zero(two_n), |a, b| a.add(&b));
    rec.push("phi_sum_is_perm_character", phi_total == perm, "Σ_μ φ_μ = χ_Ξ");
    let partition_ok = {
        let mut seen: Vec<Partition> = labels.iter().flat_map(|l| phi_constituents(two_n, l.mu.s)).collect();
        let mut all = lambda_set(two_n, 0);
        seen.sort();
        all.sort();
        seen == all
    };
    rec.push("phi_index_sets_partition", partition_ok, "Λ^0 ∩ Λ'^{2s} over s partition Λ^0");
    let twist: Vec<usize> = (0..=two_n / 4).filter(|&t| !alt_twist_check(t)).collect();
    rec.push("alt_twist", twist.is_empty(), format!("t ≤ {}; {}", two_n / 4, failed_on(&twist)));
    let mut green_bad = Vec::new();
    for l in &labels {
        if !green_corollary_check(l.mu.t, l.mu.s)? {
            green_bad.push(l.mu.to_string());
        }
    }
    rec.push("green_corollary", green_bad.is_empty(), failed_on(&green_bad));
    rec.lap("characters");

    // fixed point sets and vertices
    let formula_bad: Vec<String> = labels
        .iter()
        .filter(|l| l.vertex.order as u128 != vertex_order_formula(&l.mu))
        .map(|l| l.mu.to_string())
        .collect();
    let orders: Vec<String> = labels.iter().map(|l| format!("{}:{}", l.mu, l.vertex.order)).collect();
    rec.push(
        "vertex_order_formula",
        formula_bad.is_empty(),
        format!("{}; {}", orders.join(" "), failed_on(&formula_bad)),
    );
    let alt_bad: Vec<String> = labels
        .iter()
        .filter(|l| l.vertex.group().is_in_alternating() != (l.mu.s == 0))
        .map(|l| l.mu.to_string())
        .collect();
    rec.push("vertex_alternating", alt_bad.is_empty(), format!("Q_μ ≤ Alt iff s = 0; {}", failed_on(&alt_bad)));
    let mut closed_bad = Vec::new();
    for l in &labels {
        let centralizes = l
            .vertex
            .generators
            .iter()
            .all(|g| l.w.members().iter().all(|x| x.conjugate(g).map(|y| y == *x).unwrap_or(false)));
        let sylow_order_ok = l.stab.q.order() == l.vertex.order;
        if !centralizes || !sylow_order_ok || !is_closed(&l.w, two_n)? {
            closed_bad.push(l.mu.to_string());
        }
    }
    rec.push("w_closed", closed_bad.is_empty(), format!("Fix(Q_W) = W, |Q_W| = |Q_μ|; {}", failed_on(&closed_bad)));
    let mut equiv = Vec::new();
    for (i, a) in labels.iter().enumerate() {
        for b in &labels[i + 1..] {
            if a.w.is_equivalent(&b.w) {
                equiv.push(format!("{}~{}", a.mu, b.mu));
            }
        }
        if a.w.size_two_orbits() != a.mu.s {
            equiv.push(format!("{}: size-2 orbits", a.mu));
        }
    }
    rec.push("w_non_equivalent", equiv.is_empty(), failed_on(&equiv));
    let mut broue_w_bad = Vec::new();
    for l in &labels {
        let summary = projective_components(&l.w, &l.stab.nbar)?;
        let expect = 1usize << l.mu.exponents.len();
        if summary.projective_dimensions() != vec![expect] {
            broue_w_bad.push(format!("{}: {:?}", l.mu, summary.projective_dimensions()));
        }
    }
    rec.push(
        "w_projective_component",
        broue_w_bad.is_empty(),
        format!("kW_μ over N̄_μ has one projective component of dim 2^|I|; {}", failed_on(&broue_w_bad)),
    );
    let kappa = kappa_probe_summary(0)?;
    rec.push(
        "kappa_probe_v0",
        !kappa.has_projective(),
        format!(
            "k(V*V) over N̄ of order {}: component dims {:?}, projective {:?}",
            kappa.nbar_order, kappa.dimensions, kappa.projective
        ),
    );
    rec.lap("fixed point sets");

    let mut components = Vec::new();
    if !opts.skip_decompose {
        let outcome = cmd_decompose(n, opts)?;
        rec.lap("decomposition");
        let dims = outcome.decomposition.dimensions();
        rec.push(
            "component_count",
            dims.len() == n / 2 + 1,
            format!("{} components, expected {}", dims.len(), n / 2 + 1),
        );
        rec.push(
            "dimension_sum",
            dims.iter().sum::<usize>() == outcome.setup.module.dim(),
            format!("{dims:?} sum to {}", outcome.setup.module.dim()),
        );
        if n == 2 {
            let v = stabilizer_data(&FPSet::v())?;
            let sym3 = projective_components(&FPSet::v(), &v.nbar)?;
            let ok = dims == vec![1, 2] && sym3.dimensions == vec![1, 2] && sym3.projective == vec![false, true];
            rec.push("base_case", ok, "k Ξ_4 = k ⊕ E, E projective for Sym(3)");
        }
        let proj: Vec<usize> = outcome
            .rows
            .iter()
            .enumerate()
            .filter(|(_, r)| r.projective_over_sylow)
            .map(|(i, _)| i)
            .collect();
        rec.push("murray_no_projective", proj.is_empty(), format!("Sylow 2-subgroup of Sym({two_n}); {}", failed_on(&proj)));

        let mut used: Vec<String> = outcome.rows.iter().filter_map(|r| r.mu.clone()).collect();
        used.sort();
        let mut all: Vec<String> = labels.iter().map(|l| l.mu.to_string()).collect();
        all.sort();
        let chars_ok = outcome.rows.iter().all(|r| r.matched_phi.len() == 1) && used == all;
        rec.push(
            "component_characters",
            chars_ok && outcome.mismatches.iter().all(|m| !m.contains("matches")),
            format!("precision 2^{}; each lifted character is one φ_μ, bijectively", opts.precision),
        );
        rec.push(
            "brauer_definition_agrees",
            outcome.mismatches.iter().all(|m| !m.contains("relative traces")),
            format!("{} cross-checks with |Q| ≤ {DEFAULT_BRAUER_CAP}", outcome.brauer_cross_checks),
        );

        let mut broue_bad = Vec::new();
        let mut broue_detail = Vec::new();
        for l in &labels {
            let key = l.mu.to_string();
            let nonzero = outcome.rows.iter().filter(|r| r.brauer[&key] > 0).count();
            let proj: Vec<usize> = (0..outcome.rows.len()).filter(|&i| outcome.brauer_projective[i][&key]).collect();
            broue_detail.push(format!("{key}: nonzero {nonzero}, projective {}", proj.len()));
            let expect = 1usize << l.mu.exponents.len();
            let ok = proj.len() == 1
                && outcome.rows[proj[0]].mu.as_deref() == Some(key.as_str())
                && outcome.rows[proj[0]].brauer[&key] == expect;
            if !ok {
                broue_bad.push(key);
            }
        }
        rec.push(
            "broue_correspondence",
            broue_bad.is_empty(),
            format!("{}; {}", broue_detail.join("; "), failed_on(&broue_bad)),
        );
        let mut vertex_bad = Vec::new();
        for r in &outcome.rows {
            let Some(mu) = &r.mu else { continue };
            let own = labels.iter().find(|l| &l.mu.to_string() == mu).expect("label");
            let larger_zero = labels
                .iter()
                .filter(|l| l.vertex.order > own.vertex.order)
                .all(|l| r.brauer[&l.mu.to_string()] == 0);
            if r.brauer[mu] == 0 || !larger_zero {
                vertex_bad.push(mu.clone());
            }
        }
        rec.push(
            "vertex_certification",
            vertex_bad.is_empty(),
            format!("nonzero at Q_μ, zero at larger Q_ν; {}", failed_on(&vertex_bad)),
        );
        components = outcome.rows;
        rec.lap("component checks");
    }

    let passed = rec.checks.iter().all(|c| c.passed);
    Ok(VerificationReport {
        schema: SCHEMA_VERSION,
        n,
        precision: opts.precision,
        skip_decompose: opts.skip_decompose,
        components,
        checks: rec.checks,
        passed,
        timings: rec.timings,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumerate_small() {
        let rows = cmd_enumerate(2).unwrap();
        let orders: Vec<usize> = rows.iter().map(|r| r.vertex_order).collect();
        assert_eq!(orders, vec![8, 4]);
        let rows = cmd_enumerate(1).unwrap();
        assert_eq!(rows.len(), 1);
        assert_eq!(rows[0].vertex_order, 2);
        assert!(cmd_enumerate(0).is_err());
        assert!(cmd_enumerate(6).is_err());
    }

    #[test]
    fn decompose_n2() {
        let out = cmd_decompose(2, &Options::default()).unwrap();
        let dims: Vec<usize> = out.rows.iter().map(|r| r.dimension).collect();
        assert_eq!(dims, vec![1, 2]);
        assert_eq!(out.rows[0].mu.as_deref(), Some("(0,4)"));
        assert_eq!(out.rows[1].mu.as_deref(), Some("(4,0)"));
        let values: Vec<i64> = out.rows[1].character.values().values().copied().collect();
        assert_eq!(values, vec![2, 0, 2, -1, 0]);
        assert!(out.mismatches.is_empty());
    }

    #[test]
    fn characters_n2() {
        let r = cmd_characters(2, Some(&MuLabel::from_composition(4, 0).unwrap())).unwrap();
        assert_eq!(r.rows[0].constituents, vec!["2+2"]);
        assert_eq!(r.rows[0].dimension, 2);
        let r = cmd_characters(4, None).unwrap();
        assert_eq!(r.rows.len(), 3);
        assert_eq!(r.sum_matches, Some(true));
        let triv = cmd_characters(3, Some(&MuLabel::new(3, 3).unwrap())).unwrap();
        assert!(triv.rows[0].values.iter().all(|&v| v == 1));
        assert!(render_characters(&r).contains("χ_Ξ"));
    }

    #[test]
    fn verify_n2_and_n3() {
        for n in [2, 3] {
            let report = cmd_verify(n, &Options::default()).unwrap();
            assert!(report.passed, "{}", report.render());
            let names: Vec<&str> = report.checks.iter().map(|c| c.name.as_str()).collect();
            let mut dedup = names.clone();
            dedup.sort();
            dedup.dedup();
            assert_eq!(dedup.len(), names.len());
        }
        let r = cmd_verify(3, &Options { skip_decompose: true, ..Options::default() }).unwrap();
        assert!(r.components.is_empty());
        assert!(r.check("component_count").is_none());
        assert!(r.to_json().contains("\"schema\": 1"));
    }
}
