//! Hypertree orderings, diameter bounds and Perron-ratio monotonicity.

use hyperspectra::closed_forms::{
    even_diameter_bound, hyperstar_radius, hypertree_diameter_bound, perron_ratio_threshold,
};
use hyperspectra::families::{
    hyperstar, hypertree_td, loose_cycle, loose_path, path_core, power_hypergraph, unicyclic_uc,
};
use hyperspectra::spectral::spectral_radius;
use hyperspectra::Hypergraph;

use super::{assert_top, bundle_label, score, spec, Ctx, Scored};
use crate::canon::hypergraph_code;
use crate::enumerate::{
    kernel_hub_class, trees_with_diameter, Budget, ClassId, Constraints, Enumerated,
};
use crate::error::{Result, VerifyError};
use crate::report::{ReportBuilder, VerificationReport};

/// Rooted trees kept in the diameter generator's catalog.
const CATALOG_CAP: usize = 400_000;
/// Largest diameter class generated in full.
const MAX_GENERATED: usize = 200_000;

pub(crate) fn td(m: usize, d: usize, pairs: &[(usize, usize)]) -> Result<(String, Hypergraph)> {
    Ok((
        format!("spine{d}{}", bundle_label(pairs)),
        hypertree_td(m, d, &spec(pairs))?,
    ))
}

/// Hypertrees with k edges and diameter d: generated from tree centers, or
/// the structured kernel-plus-hub class when the full class is too large.
fn diameter_class(b: &mut ReportBuilder, ctx: &Ctx, k: usize, d: usize) -> Result<Vec<Enumerated>> {
    let full = trees_with_diameter(k + 1, d, CATALOG_CAP).and_then(|ts| {
        if ts.len() > MAX_GENERATED {
            Err(VerifyError::Budget {
                what: "trees of one diameter",
                got: ts.len(),
                cap: MAX_GENERATED,
            })
        } else {
            Ok(ts)
        }
    });
    match full {
        Ok(ts) => {
            b.scope(format!(
                "exhaustive: all {} hypertrees with k={k}, diameter {d}",
                ts.len()
            ));
            let mut out = Vec::with_capacity(ts.len());
            for g in ts {
                let h = power_hypergraph(&g, ctx.m)?;
                out.push(Enumerated {
                    code: hypergraph_code(&h)?,
                    hypergraph: h,
                });
            }
            Ok(out)
        }
        Err(VerifyError::Budget { .. }) => {
            b.scope(format!("structured: diameter-{d} hypertrees with k={k} built from kernels of ≤ {} edges plus one pendant bundle", ctx.kernel));
            let c = Constraints {
                diameter: Some(d),
                cycle_length: None,
            };
            kernel_hub_class(
                ClassId::Hypertree,
                ctx.m,
                k,
                ctx.kernel,
                &c,
                &Budget {
                    max_k: ctx.kernel,
                    ..Budget::default()
                },
            )
        }
        Err(e) => Err(e),
    }
}

/// max over p of λ₁(T_i(c_p = k−i)), p = 2..⌊i/2⌋+1.
fn best_single_bundle(
    b: &mut ReportBuilder,
    m: usize,
    k: usize,
    i: usize,
) -> Result<(String, Hypergraph, f64)> {
    let mut best: Option<(String, Hypergraph, f64)> = None;
    for p in 2..=i / 2 + 1 {
        let (label, h) = td(m, i, &[(p, k - i)])?;
        let l = b.instance(&label, &h)?;
        if best.as_ref().is_none_or(|x| l > x.2) {
            best = Some((label, h, l));
        }
    }
    Ok(best.expect("at least p = 2"))
}

pub(crate) fn th1_order(ctx: &Ctx) -> Result<VerificationReport> {
    let mut b = ctx.builder();
    let (m, k) = (ctx.m, ctx.k);
    if k < 3 {
        return Err(VerifyError::Param("the diameter chain needs k ≥ 3".into()));
    }
    let top = ctx.d.unwrap_or(k).min(k);
    let last_i = top.min(k - 1);
    let mut chain: Vec<(String, f64)> = Vec::new();
    for i in 2..=last_i {
        let (label, h, l) = best_single_bundle(&mut b, m, k, i)?;
        if k <= ctx.budget {
            let items = diameter_class(&mut b, ctx, k, i)?;
            let pool = score(&mut b, items, &format!("diam{i}"))?;
            assert_top(&mut b, &pool, &[(label.clone(), h)], &[])?;
        }
        chain.push((label, l));
    }
    if top == k {
        let p = loose_path(m, k)?;
        let l = b.instance("loose path", &p)?;
        chain.push(("loose path".into(), l));
    }
    for w in chain.windows(2) {
        b.less(&w[1].0, w[1].1, &w[0].0, w[0].1);
    }
    // The diameter-2 maximum is the hyperstar, with a closed form.
    let star = b.instance("hyperstar", &hyperstar(m, k)?)?;
    let formula = hyperstar_radius(m, k);
    if (star - formula).abs() > ctx.margin {
        b.fail(format!(
            "hyperstar radius {star} differs from closed form {formula}"
        ));
    }
    if k > ctx.budget {
        b.scope(format!(
            "per-diameter maxima taken over single-bundle shapes only (k > budget {})",
            ctx.budget
        ));
    }
    Ok(b.finish())
}

fn extremal_diameter(ctx: &Ctx, odd: bool) -> Result<VerificationReport> {
    let mut b = ctx.builder();
    let (m, k) = (ctx.m, ctx.k);
    let d = ctx
        .d
        .ok_or_else(|| VerifyError::Param("this check needs --d".into()))?;
    if d < 2 || k < d {
        return Err(VerifyError::Param(format!(
            "need 2 ≤ d ≤ k, got d={d}, k={k}"
        )));
    }
    if odd {
        b.hypotheses(d % 2 == 1, "d must be odd");
        b.hypotheses(k > d && (k - d - 1) * (m - 1) >= 6, "(k−d−1)(m−1) ≥ 6");
    } else {
        b.hypotheses(d % 2 == 0, "d must be even");
        b.hypotheses(
            4 * k >= (4 * d * d - 1) * (m - 1) + 2,
            "4k ≥ (4d²−1)(m−1)+2",
        );
    }
    let p = d / 2;
    let target = td(m, d, &[(p + 1, k - d)])?;
    let items = diameter_class(&mut b, ctx, k, d)?;
    let pool = score(&mut b, items, "cand")?;
    assert_top(&mut b, &pool, &[target], &[])?;
    let bound = if odd {
        hypertree_diameter_bound(m, k, d)
    } else {
        even_diameter_bound(m, k, d)
    };
    let upper = bound.upper.expect("upper bound");
    if let Some(max) = pool.iter().max_by(|a, c| a.lambda.total_cmp(&c.lambda)) {
        if bound.applicable {
            if !b.less(
                &format!("max over class ({})", max.label),
                max.lambda,
                &bound.formula_id,
                upper,
            ) {
                b.counter("diameter bound violated", &max.h);
            }
        } else {
            b.observe_less(&max.label, max.lambda, &bound.formula_id, upper);
        }
    }
    Ok(b.finish())
}

pub(crate) fn th3_odd(ctx: &Ctx) -> Result<VerificationReport> {
    extremal_diameter(ctx, true)
}

pub(crate) fn th4_even(ctx: &Ctx) -> Result<VerificationReport> {
    extremal_diameter(ctx, false)
}

pub(crate) fn second_diam(ctx: &Ctx) -> Result<VerificationReport> {
    let mut b = ctx.builder();
    let (m, k) = (ctx.m, ctx.k);
    let d = ctx
        .d
        .ok_or_else(|| VerifyError::Param("this check needs --d".into()))?;
    let p = d / 2;
    if p < 2 || k <= d {
        return Err(VerifyError::Param(format!(
            "need d ≥ 4 and k > d, got d={d}, k={k}"
        )));
    }
    b.hypotheses(
        k >= d + 6 && (k - d - 6) * (m - 1) >= 42,
        "(k−d−6)(m−1) ≥ 42",
    );
    let first = td(m, d, &[(p + 1, k - d)])?;
    let second = td(m, d, &[(p, k - d)])?;
    let items = diameter_class(&mut b, ctx, k, d)?;
    let pool = score(&mut b, items, "cand")?;
    assert_top(&mut b, &pool, &[second], &[first.1])?;
    Ok(b.finish())
}

pub(crate) fn top7(ctx: &Ctx) -> Result<VerificationReport> {
    let mut b = ctx.builder();
    let (m, k) = (ctx.m, ctx.k);
    if k < 8 {
        return Err(VerifyError::Param(
            "the seven named shapes need k ≥ 8".into(),
        ));
    }
    b.hypotheses(
        (k - 10.min(k)) * (m - 1) >= 42 && k >= 10,
        "(k−10)(m−1) ≥ 42",
    );
    let named = vec![
        td(m, 2, &[(2, k - 2)])?,
        td(m, 3, &[(2, k - 3)])?,
        td(m, 3, &[(2, k - 4), (3, 1)])?,
        td(m, 4, &[(3, k - 4)])?,
        td(m, 4, &[(2, k - 4)])?,
        td(m, 3, &[(2, k - 5), (3, 2)])?,
        td(m, 4, &[(2, 1), (3, k - 5)])?,
    ];
    let mut pool: Vec<Scored> = Vec::new();
    for d in 2..=5.min(k) {
        let class = diameter_class(&mut b, ctx, k, d)?;
        pool.extend(score(&mut b, class, &format!("diam{d}"))?);
    }
    if k >= 6 {
        // Every two-or-more-bundle spine of diameter 5.
        let mut extra = Vec::new();
        for c2 in 0..=k - 5 {
            for c3 in 0..=k - 5 - c2 {
                for c4 in 0..=k - 5 - c2 - c3 {
                    let c5 = k - 5 - c2 - c3 - c4;
                    let h = hypertree_td(m, 5, &spec(&[(2, c2), (3, c3), (4, c4), (5, c5)]))?;
                    extra.push(Enumerated {
                        code: hypergraph_code(&h)?,
                        hypergraph: h,
                    });
                }
            }
        }
        extra.sort_by(|a, c| a.code.cmp(&c.code));
        extra.dedup_by(|a, c| a.code == c.code);
        let known: std::collections::BTreeSet<String> =
            pool.iter().map(|s| s.code.clone()).collect();
        extra.retain(|e| !known.contains(&e.code));
        b.scope(format!(
            "diameter 5: plus all {} remaining spines with pendant bundles at v2..v5",
            extra.len()
        ));
        pool.extend(score(&mut b, extra, "spine5")?);
    }
    for d in 6..=k {
        let (label, h, l) = best_single_bundle(&mut b, m, k, d)?;
        pool.push(Scored {
            code: hypergraph_code(&h)?,
            label,
            h,
            lambda: l,
        });
    }
    b.scope("diameters ≥ 6: represented by their single-bundle maxima (the per-diameter chain bounds every deeper tree)");
    assert_top(&mut b, &pool, &named, &[])?;
    Ok(b.finish())
}

// ---------------------------------------------------------------- Perron ratios

/// Attaches a loose path with `l` edges to `base` at vertex `at`. Returns the
/// new hypergraph and the spine v_1, …, v_l, v_{l+1} = at.
pub(crate) fn attach_path(
    base: &Hypergraph,
    at: usize,
    l: usize,
) -> Result<(Hypergraph, Vec<usize>)> {
    let m = base.m();
    let mut n = base.n();
    let mut edges = base.edges().to_vec();
    let mut spine = vec![at];
    let mut cur = at;
    for _ in 0..l {
        let mut e = vec![cur];
        e.extend(n..n + m - 1);
        cur = n + m - 2;
        n += m - 1;
        edges.push(e);
        spine.push(cur);
    }
    spine.reverse();
    Ok((Hypergraph::new(m, n, edges)?, spine))
}

/// Checks 1 > X_i/X_{i+1} > X_{i−1}/X_i for i in `range` (1-based along the
/// spine), each within `slack` when `slack > 0` and with the strictness
/// margin otherwise.
fn ratio_chain(
    b: &mut ReportBuilder,
    name: &str,
    x: &[f64],
    spine: &[usize],
    range: std::ops::RangeInclusive<usize>,
    slack: f64,
) -> bool {
    let r = |i: usize| x[spine[i - 1]] / x[spine[i]];
    let mut ok = true;
    for i in range {
        let (cur, prev) = (r(i), r(i - 1));
        let (a, c) = (
            format!("{name}: X{}/X{}", i - 1, i),
            format!("{name}: X{i}/X{}", i + 1),
        );
        if slack > 0.0 {
            ok &= b.at_most(&c, cur, "1", 1.0, slack);
            ok &= b.at_most(&a, prev, &c, cur, slack);
        } else {
            ok &= b.less(&c, cur, "1", 1.0);
            ok &= b.less(&a, prev, &c, cur);
        }
    }
    ok
}

pub(crate) fn ratio_3a(ctx: &Ctx) -> Result<VerificationReport> {
    let mut b = ctx.builder();
    let m = ctx.m;
    let threshold = perron_ratio_threshold(m);
    b.param("threshold", threshold);
    let mut bases: Vec<(String, Hypergraph, usize)> = Vec::new();
    for s in 1..=5 {
        bases.push((format!("star{s}"), hyperstar(m, s)?, 0));
        bases.push((
            format!("triangle[1:{s}]"),
            unicyclic_uc(m, 3, &spec(&[(1, s)]))?,
            path_core(m, 1),
        ));
    }
    bases.push(("cycle4".into(), loose_cycle(m, 4)?, 0));
    bases.push((
        "spine3[2:2]".into(),
        hypertree_td(m, 3, &spec(&[(2, 2)]))?,
        path_core(m, 2),
    ));
    let (mut checked, mut skipped) = (0, 0);
    for (name, base, at) in &bases {
        for l in 3..=6 {
            let (h, spine) = attach_path(base, *at, l)?;
            let sr = spectral_radius(&h, ctx.tol)?;
            let label = format!("{name}+path{l}");
            b.instance(&label, &h)?;
            if sr.lambda1 < threshold {
                skipped += 1;
                continue;
            }
            checked += 1;
            if !ratio_chain(&mut b, &label, &sr.perron_vector, &spine, 2..=l - 1, 0.0) {
                b.counter(format!("{label}: ratio chain broken"), &h);
            }
        }
    }
    b.note(format!(
        "{checked} instances above the threshold checked; {skipped} below it skipped"
    ));
    b.hypotheses(checked > 0, "no instance reaches the λ₁ threshold");
    Ok(b.finish())
}

/// The spine-with-hub instances used for the two-sided ratio chain.
pub fn ratio_3b_grid(m_values: &[usize]) -> Vec<(usize, usize, usize, usize)> {
    let mut grid = Vec::new();
    for &m in m_values {
        for d in 3..=7 {
            let kmin = d + 1 + (6 + m - 2) / (m - 1);
            for p in 2..=d {
                for k in [kmin, kmin + 3] {
                    grid.push((m, d, p, k));
                }
            }
        }
    }
    grid
}

pub(crate) fn ratio_3b(ctx: &Ctx) -> Result<VerificationReport> {
    let mut b = ctx.builder();
    let ms: Vec<usize> = if ctx.m == 3 { vec![3, 4] } else { vec![ctx.m] };
    let slack = 1e-10;
    let mut count = 0;
    for (m, d, p, k) in ratio_3b_grid(&ms) {
        if (k - d - 1) * (m - 1) < 6 {
            continue;
        }
        count += 1;
        let (label, h) = td(m, d, &[(p, k - d)])?;
        let label = format!("m{m} k{k} {label}");
        let sr = spectral_radius(&h, ctx.tol)?;
        b.instance(&label, &h)?;
        let spine: Vec<usize> = (1..=d + 1).map(|j| path_core(m, j)).collect();
        // Left arm v_1 … v_p: ratios up to the hub.
        let mut ok = ratio_chain(
            &mut b,
            &label,
            &sr.perron_vector,
            &spine,
            2..=p.saturating_sub(1).max(1),
            slack,
        );
        // Right arm read from the far end v_{d+1} back to the hub.
        let rev: Vec<usize> = spine.iter().rev().copied().collect();
        let q = d + 2 - p;
        ok &= ratio_chain(
            &mut b,
            &format!("{label} (mirrored)"),
            &sr.perron_vector,
            &rev,
            2..=q.saturating_sub(1).max(1),
            slack,
        );
        if !ok {
            b.counter(format!("{label}: ratio chain broken"), &h);
        }
    }
    b.note(format!("{count} spine-with-hub instances"));
    Ok(b.finish())
}
