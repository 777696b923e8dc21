//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on failure.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::Instant;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use fpf_core::chars::{
    alt_twist_check, class_representative, irreducible, irs_character, lambda_set, perm_character_xi,
    phi_constituents, sum_of_irreducibles,
};
use fpf_core::fps::{
    build_w, enumerate_mu, is_closed, kappa_probe_summary, projective_components, stabilizer_data,
    vertex_spec, FPSet,
};
use fpf_core::gf2::decompose::{decompose, is_projective_over_2group};
use fpf_core::gf2::lift::{lift_decomposition, lifted_matrix};
use fpf_core::gf2::matrix::Gf2Matrix;
use fpf_core::partition::partitions;
use fpf_core::perm::sylow2_sym;
use fpf_core::pipeline::{cmd_decompose, xi_setup, Options};
use fpf_core::{Partition, PermGroup};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn e2s<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

/// Perfect matchings of `0..d` as pair lists, built without the library.
fn matchings(d: usize) -> Vec<Vec<(usize, usize)>> {
    fn rec(free: &[usize], acc: &mut Vec<(usize, usize)>, out: &mut Vec<Vec<(usize, usize)>>) {
        let Some((&a, rest)) = free.split_first() else {
            out.push(acc.clone());
            return;
        };
        for (k, &b) in rest.iter().enumerate() {
            let remaining: Vec<usize> = rest.iter().enumerate().filter(|&(j, _)| j != k).map(|(_, &x)| x).collect();
            acc.push((a, b));
            rec(&remaining, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    rec(&(0..d).collect::<Vec<_>>(), &mut Vec::new(), &mut out);
    out
}

fn two_adic_factorial(m: usize) -> u32 {
    (1..=m).map(|k| k.trailing_zeros()).sum()
}

/// Hook-length dimension from the diagram, independent of the library.
fn hook_dimension(parts: &[usize]) -> u128 {
    let d: usize = parts.iter().sum();
    let mut num: u128 = (1..=d as u128).product();
    let conj: Vec<usize> = (0..parts.first().copied().unwrap_or(0))
        .map(|j| parts.iter().filter(|&&p| p > j).count())
        .collect();
    for (i, &p) in parts.iter().enumerate() {
        for j in 0..p {
            let hook = (p - j - 1) + (conj[j] - i - 1) + 1;
            num /= hook as u128;
        }
    }
    num
}

fn criterion_1() -> Outcome {
    let mut detail = Vec::new();
    for n in 2..=5 {
        let setup = xi_setup(n).map_err(e2s)?;
        let dec = decompose(&setup.module, &setup.basis).map_err(e2s)?;
        let dims: BTreeSet<usize> = dec.dimensions().into_iter().collect();
        ensure(dec.components.len() == n / 2 + 1, format!("n={n}: {} components", dec.components.len()))?;
        let expected: BTreeSet<usize> = (0..=n / 2)
            .map(|t| {
                phi_constituents(2 * n, n - 2 * t)
                    .iter()
                    .map(|l| hook_dimension(l.parts()) as usize)
                    .sum()
            })
            .collect();
        ensure(dims == expected, format!("n={n}: dims {dims:?}, hook oracle {expected:?}"))?;
        detail.push(format!("n={n}:{dims:?}"));
    }
    Ok(detail.join(" "))
}

fn criterion_2() -> Outcome {
    let setup = xi_setup(2).map_err(e2s)?;
    let dec = decompose(&setup.module, &setup.basis).map_err(e2s)?;
    ensure(dec.dimensions() == vec![1, 2], format!("dims {:?}", dec.dimensions()))?;
    // Sym(4) acts on Ξ_4 through Sym(3); check E over a Sylow 2-subgroup of that quotient
    let sym3 = PermGroup::symmetric(3);
    let summary = projective_components(&FPSet::v(), &sym3).map_err(e2s)?;
    ensure(summary.dimensions == vec![1, 2], format!("k Ξ_4 over Sym(3): {:?}", summary.dimensions))?;
    ensure(summary.projective == vec![false, true], "E is not projective over C_2")?;
    Ok("k Ξ_4 = k ⊕ E, dim E = 2, E projective over C_2 ≤ Sym(3)".into())
}

fn criterion_3() -> Outcome {
    for n in 1..=5 {
        let setup = xi_setup(n).map_err(e2s)?;
        let dec = decompose(&setup.module, &setup.basis).map_err(e2s)?;
        let p = sylow2_sym(2 * n);
        let order = 1usize << two_adic_factorial(2 * n);
        ensure(p.order() == order, "Sylow order")?;
        let maps: Vec<Vec<u32>> = p
            .generators()
            .iter()
            .map(|g| setup.action.index_permutation(g))
            .collect::<Result<_, _>>()
            .map_err(e2s)?;
        for c in &dec.components {
            let proj = is_projective_over_2group(&c.idempotent.column_space(), &maps, order).map_err(e2s)?;
            ensure(!proj, format!("n={n}: component of dim {} is projective", c.dimension))?;
        }
    }
    Ok("n = 1..5, no component projective over P(2n)".into())
}

fn criterion_4() -> Outcome {
    for two_n in (2..=10).step_by(2) {
        let lib = perm_character_xi(two_n).map_err(e2s)?;
        let all = matchings(two_n);
        for rho in partitions(two_n) {
            let g = class_representative(&rho);
            let fixed = all
                .iter()
                .filter(|m| {
                    m.iter().all(|&(a, b)| {
                        let (ga, gb) = (g.image(a + 1) - 1, g.image(b + 1) - 1);
                        m.contains(&(ga.min(gb), ga.max(gb)))
                    })
                })
                .count() as i64;
            ensure(lib.value(&rho) == fixed, format!("2n={two_n}, ρ={rho}: count oracle {fixed}"))?;
        }
        ensure(lib == sum_of_irreducibles(two_n, &lambda_set(two_n, 0)), format!("2n={two_n}: Σ χ^λ differs"))?;
    }
    Ok("2n = 2..10 on every class".into())
}

fn criterion_5() -> Outcome {
    let mut cases = 0;
    for total in 1..=4 {
        for m in 0..=total {
            let r = irs_character(total - m, m).map_err(e2s)?;
            ensure(r.equal, format!("(n,m) = ({},{m})", total - m))?;
            cases += 1;
        }
    }
    Ok(format!("{cases} pairs with 2(n+m) ≤ 8"))
}

fn criterion_6() -> Outcome {
    let mut detail = Vec::new();
    for n in 1..=4 {
        let out = cmd_decompose(n, &Options::default()).map_err(e2s)?;
        let mut seen = BTreeSet::new();
        for (r, comp) in out.rows.iter().zip(&out.decomposition.components) {
            // φ_μ built here from the constituent rule, independent of the pipeline
            let matches: Vec<String> = enumerate_mu(n)
                .map_err(e2s)?
                .into_iter()
                .filter(|mu| {
                    let labels: Vec<Partition> = partitions(2 * n)
                        .into_iter()
                        .filter(|l| l.odd_parts() == 0 && l.conjugate().odd_parts() == 2 * mu.s)
                        .collect();
                    sum_of_irreducibles(2 * n, &labels) == r.character
                })
                .map(|mu| mu.to_string())
                .collect();
            ensure(matches.len() == 1, format!("n={n}: component dim {} matches {matches:?}", r.dimension))?;
            ensure(r.character.at_identity() == comp.dimension as i64, "character degree ≠ dimension")?;
            seen.insert(matches[0].clone());
        }
        ensure(seen.len() == out.rows.len(), format!("n={n}: labels not distinct"))?;
        detail.push(format!("n={n}:{}", seen.into_iter().collect::<Vec<_>>().join(",")));
    }
    Ok(format!("precision 2^16; {}", detail.join(" ")))
}

fn criterion_7() -> Outcome {
    let mut detail = Vec::new();
    for n in 1..=4 {
        let out = cmd_decompose(n, &Options::default()).map_err(e2s)?;
        for mu in enumerate_mu(n).map_err(e2s)? {
            let w = build_w(&mu).map_err(e2s)?;
            let data = stabilizer_data(&w).map_err(e2s)?;
            let summary = projective_components(&w, &data.nbar).map_err(e2s)?;
            let t = mu.exponents.len() as u32;
            let nbar_order = 6usize.pow(t);
            ensure(data.nbar.order() == nbar_order, format!("{mu}: |N̄| = {}", data.nbar.order()))?;
            ensure(
                summary.projective_dimensions() == vec![1usize << t],
                format!("{mu}: projective dims {:?}", summary.projective_dimensions()),
            )?;
            let key = mu.to_string();
            let nonzero = out.rows.iter().filter(|r| r.brauer[&key] > 0).count();
            let proj: Vec<usize> = (0..out.rows.len()).filter(|&i| out.brauer_projective[i][&key]).collect();
            ensure(proj.len() == 1, format!("{mu}: {} components with projective Brauer quotient", proj.len()))?;
            ensure(out.rows[proj[0]].mu.as_deref() == Some(key.as_str()), format!("{mu}: wrong component"))?;
            ensure(out.rows[proj[0]].brauer[&key] == 1 << t, format!("{mu}: Brauer dimension"))?;
            detail.push(format!("{mu}:nonzero={nonzero}"));
        }
    }
    Ok(format!("one projective Brauer quotient per μ; {}", detail.join(" ")))
}

fn criterion_8() -> Outcome {
    for n in 1..=5 {
        let labels = enumerate_mu(n).map_err(e2s)?;
        let mut ws = Vec::new();
        for mu in &labels {
            let v = vertex_spec(mu).map_err(e2s)?;
            let mut e = two_adic_factorial(2 * mu.s);
            for &i in &mu.exponents {
                e += 2 * (1 << i) + two_adic_factorial(1 << i);
            }
            ensure(v.order == 1usize << e, format!("{mu}: |Q| = {}, formula 2^{e}", v.order))?;
            let all_even = v.generators.iter().all(|g| g.sign() == 1);
            ensure(all_even == (mu.s == 0), format!("{mu}: Alt containment"))?;
            let w = build_w(mu).map_err(e2s)?;
            ensure(is_closed(&w, 2 * n).map_err(e2s)?, format!("{mu}: W not closed"))?;
            ws.push(w);
        }
        for i in 0..ws.len() {
            for j in i + 1..ws.len() {
                ensure(!ws[i].is_equivalent(&ws[j]), format!("n={n}: W_{} ~ W_{}", labels[i], labels[j]))?;
            }
        }
    }
    Ok("n = 1..5: orders, Alt(2n), closure, non-equivalence".into())
}

fn criterion_9() -> Outcome {
    for t in 0..=2 {
        let set: Vec<Partition> = partitions(4 * t)
            .into_iter()
            .filter(|l| l.odd_parts() == 0 && l.conjugate().odd_parts() == 0)
            .collect();
        let closed = set.iter().all(|l| set.contains(&l.conjugate()));
        ensure(closed && alt_twist_check(t), format!("t={t}"))?;
    }
    Ok("t = 0, 1, 2".into())
}

fn criterion_10() -> Outcome {
    let s0 = kappa_probe_summary(0).map_err(e2s)?;
    let s1 = kappa_probe_summary(1).map_err(e2s)?;
    let text = format!(
        "V_0*V_0: |N̄| = {}, dims {:?}, projective {:?}; V_1*V_1: dims {:?}, projective {:?}",
        s0.nbar_order, s0.dimensions, s0.projective, s1.dimensions, s1.projective
    );
    ensure(s0.nbar_order == 72 && s0.dimensions.iter().sum::<usize>() == 9, "unexpected module")?;
    ensure(!s0.has_projective(), format!("projective component found: {text}"))?;
    Ok(text)
}

fn random_matrix(rng: &mut StdRng, rows: usize, cols: usize) -> Gf2Matrix {
    let bits: Vec<Vec<u8>> = (0..rows).map(|_| (0..cols).map(|_| rng.gen_range(0..2)).collect()).collect();
    Gf2Matrix::from_rows(&bits)
}

fn criterion_11() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    for _ in 0..300 {
        let (r, c) = (rng.gen_range(1..90), rng.gen_range(1..90));
        let a = random_matrix(&mut rng, r, c);
        let (reduced, pivots) = a.rref();
        ensure(a.rank() == reduced.rank() && a.rank() == pivots.len(), "rank(A) ≠ rank(rref A)")?;
        ensure(reduced.rref().0 == reduced, "rref is not idempotent")?;
        ensure(a.rank() + a.kernel().rows() == c, "rank-nullity")?;
    }
    for n in 2..=4 {
        let setup = xi_setup(n).map_err(e2s)?;
        let dec = decompose(&setup.module, &setup.basis).map_err(e2s)?;
        let dim = setup.module.dim();
        let mut total = Gf2Matrix::zeros(dim, dim);
        for (i, a) in dec.components.iter().enumerate() {
            ensure(a.idempotent.mul(&a.idempotent) == a.idempotent, "e² ≠ e")?;
            for b in &dec.components[i + 1..] {
                ensure(a.idempotent.mul(&b.idempotent).is_zero(), "e_i e_j ≠ 0")?;
            }
            total.add_assign(&a.idempotent);
        }
        ensure(total == Gf2Matrix::identity(dim), "Σ e ≠ 1")?;
        let elems: Vec<u64> = dec.components.iter().map(|c| c.element).collect();
        let lifts = lift_decomposition(&dec.algebra, &elems, 16).map_err(e2s)?;
        if n <= 3 {
            let mats: Vec<_> = lifts.iter().map(|l| lifted_matrix(&setup.basis, l)).collect();
            for (i, m) in mats.iter().enumerate() {
                ensure(m.is_idempotent(), "E² ≢ E mod 2^16")?;
                for o in &mats[i + 1..] {
                    ensure(m.mul(o).data.iter().all(|&v| v == 0), "E_i E_j ≢ 0")?;
                }
            }
        }
    }
    for d in 1..=10 {
        for l in partitions(d) {
            ensure(
                irreducible(&l).at_identity() as u128 == hook_dimension(l.parts()),
                format!("MN vs hooks at {l}"),
            )?;
        }
    }
    for d in 1..=8 {
        let table: Vec<_> = partitions(d).iter().map(irreducible).collect();
        for rho in partitions(d) {
            let s: i128 = table.iter().map(|c| (c.value(&rho) as i128).pow(2)).sum();
            ensure(s as u128 == rho.centralizer_order(), format!("column orthogonality at {rho}"))?;
        }
        for (i, a) in table.iter().enumerate() {
            for (j, b) in table.iter().enumerate() {
                ensure(a.inner_product(b) == Some((i == j) as i64), format!("row orthogonality d={d}"))?;
            }
        }
    }
    Ok("300 random matrices; idempotent laws n = 2..4; hooks d ≤ 10; orthogonality d ≤ 8".into())
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 11] = [
        ("component count", criterion_1),
        ("base case k Ξ_4", criterion_2),
        ("no projective components", criterion_3),
        ("permutation character", criterion_4),
        ("induced character identity", criterion_5),
        ("component characters", criterion_6),
        ("Broué correspondence", criterion_7),
        ("vertex structure", criterion_8),
        ("alt twist", criterion_9),
        ("kappa probe", criterion_10),
        ("property suites", criterion_11),
    ];
    let mut failures = 0;
    for (k, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = f();
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("PASS {:>2} {name} ({secs:.2}s): {detail}", k + 1),
            Err(why) => {
                failures += 1;
                println!("FAIL {:>2} {name} ({secs:.2}s): {why}", k + 1);
            }
        }
    }
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
