//! Unicyclic orderings and the lemmas feeding them.

use hyperspectra::closed_forms::{loose_cycle_radius, unicyclic_bounds, unicyclic_second_bound};
use hyperspectra::families::{unicyclic_uc, unicyclic_ulc};
use hyperspectra::Hypergraph;

use super::{assert_top, bundle_label, candidates, observed_order, score, spec, Ctx};
use crate::enumerate::{ClassId, Constraints};
use crate::error::{Result, VerifyError};
use crate::report::VerificationReport;

pub(crate) fn uc(m: usize, l: usize, pairs: &[(usize, usize)]) -> Result<(String, Hypergraph)> {
    Ok((
        format!("cycle{l}{}", bundle_label(pairs)),
        unicyclic_uc(m, l, &spec(pairs))?,
    ))
}

pub(crate) fn ulc(m: usize, l: usize, c1: usize) -> Result<(String, Hypergraph)> {
    Ok((format!("cycle{l}-tail[1:{c1}]"), unicyclic_ulc(m, l, c1)?))
}

fn cycle_constraint(l: usize) -> Constraints {
    Constraints {
        diameter: None,
        cycle_length: Some(l),
    }
}

pub(crate) fn uct1(ctx: &Ctx) -> Result<VerificationReport> {
    let mut b = ctx.builder();
    let (m, k) = (ctx.m, ctx.k);
    if k < 3 {
        return Err(VerifyError::Param("unicyclic shapes need k ≥ 3".into()));
    }
    let lengths: Vec<usize> = match ctx.l {
        Some(l) if (3..=k).contains(&l) => vec![l],
        Some(l) => {
            return Err(VerifyError::Param(format!(
                "cycle length {l} outside 3..={k}"
            )))
        }
        None => (3..=k).collect(),
    };
    let cycle = loose_cycle_radius(m);
    let mut maxima: Vec<(String, f64)> = Vec::new();
    for &l in &lengths {
        let top = uc(m, l, &[(1, k - l)])?;
        let items = candidates(&mut b, ctx, ClassId::Unicyclic, &cycle_constraint(l))?;
        let pool = score(&mut b, items, &format!("len{l}"))?;
        assert_top(&mut b, &pool, std::slice::from_ref(&top), &[])?;
        let lam = b.instance(&top.0, &top.1)?;
        // Loose-cycle radius is the floor, attained only by the bare cycle.
        if l == k {
            b.at_most("loose-cycle radius", cycle, &top.0, lam, ctx.margin);
            b.at_most(&top.0, lam, "loose-cycle radius", cycle, ctx.margin);
        } else {
            b.less("loose-cycle radius", cycle, &top.0, lam);
        }
        let br = unicyclic_bounds(m, k, l);
        b.less(
            &format!("{} lower", br.formula_id),
            br.lower.expect("lower"),
            &top.0,
            lam,
        );
        b.less(
            &top.0,
            lam,
            &format!("{} upper", br.formula_id),
            br.upper.expect("upper"),
        );
        maxima.push((top.0, lam));
    }
    for w in maxima.windows(2) {
        b.less(&w[1].0, w[1].1, &w[0].0, w[0].1);
    }
    Ok(b.finish())
}

fn cycle_len(ctx: &Ctx) -> Result<usize> {
    let l = ctx.l.unwrap_or(3);
    if l < 3 {
        return Err(VerifyError::Param("cycle length must be at least 3".into()));
    }
    Ok(l)
}

pub(crate) fn uct2_second(ctx: &Ctx) -> Result<VerificationReport> {
    let mut b = ctx.builder();
    let (m, k) = (ctx.m, ctx.k);
    let l = cycle_len(ctx)?;
    if k < l + 2 {
        return Err(VerifyError::Param(format!(
            "need k ≥ l+2, got k={k}, l={l}"
        )));
    }
    b.hypotheses(
        k >= l + 6 && (k - l - 6) * (m - 1) >= 20,
        "(k−l−6)(m−1) ≥ 20",
    );
    let first = uc(m, l, &[(1, k - l)])?;
    let second = uc(m, l, &[(1, k - l - 1), (2, 1)])?;
    let items = candidates(&mut b, ctx, ClassId::Unicyclic, &cycle_constraint(l))?;
    let pool = score(&mut b, items, "cand")?;
    assert_top(&mut b, &pool, std::slice::from_ref(&second), &[first.1])?;
    let lam = b.instance(&second.0, &second.1)?;
    let br = unicyclic_second_bound(m, k, l);
    b.less(&second.0, lam, &br.formula_id, br.upper.expect("upper"));
    Ok(b.finish())
}

pub(crate) fn uct3_third(ctx: &Ctx) -> Result<VerificationReport> {
    let mut b = ctx.builder();
    let (m, k) = (ctx.m, ctx.k);
    let l = cycle_len(ctx)?;
    if k < l + 2 {
        return Err(VerifyError::Param(format!(
            "need k ≥ l+2, got k={k}, l={l}"
        )));
    }
    b.hypotheses(
        k >= l + 5 && (k - l - 5) * (m - 1) >= 12,
        "(k−l−5)(m−1) ≥ 12",
    );
    let first = uc(m, l, &[(1, k - l)])?;
    let second = uc(m, l, &[(1, k - l - 1), (2, 1)])?;
    let third = ulc(m, l, k - l - 1)?;
    let items = candidates(&mut b, ctx, ClassId::Unicyclic, &cycle_constraint(l))?;
    let pool = score(&mut b, items, "cand")?;
    assert_top(&mut b, &pool, &[third], &[first.1, second.1])?;
    Ok(b.finish())
}

pub(crate) fn top3(ctx: &Ctx) -> Result<VerificationReport> {
    let mut b = ctx.builder();
    let (m, k) = (ctx.m, ctx.k);
    if k < 5 {
        return Err(VerifyError::Param(
            "the three named shapes are distinct only for k ≥ 5".into(),
        ));
    }
    b.hypotheses(k >= 7 && (k - 7) * (m - 1) >= 20, "(k−7)(m−1) ≥ 20");
    let named = vec![
        uc(m, 3, &[(1, k - 3)])?,
        uc(m, 3, &[(1, k - 4), (2, 1)])?,
        ulc(m, 3, k - 4)?,
    ];
    let constraints = Constraints {
        diameter: None,
        cycle_length: ctx.l,
    };
    if let Some(l) = ctx.l {
        if l != 3 {
            return Err(VerifyError::Param(
                "the named shapes have cycle length 3".into(),
            ));
        }
    }
    let items = candidates(&mut b, ctx, ClassId::Unicyclic, &constraints)?;
    let pool = score(&mut b, items, "cand")?;
    assert_top(&mut b, &pool, &named, &[])?;
    b.note(format!(
        "observed top three: {}",
        observed_order(&pool, &named, 3)?.join(" > ")
    ));
    Ok(b.finish())
}

pub(crate) fn uc0(ctx: &Ctx) -> Result<VerificationReport> {
    let mut b = ctx.builder();
    let m = ctx.m;
    for l in 4..=8 {
        for p in 0..=6 {
            let (la, a) = uc(m, l, &[(1, p)])?;
            let (lb, c) = uc(m, l - 1, &[(1, p + 1)])?;
            let (x, y) = (b.instance(&la, &a)?, b.instance(&lb, &c)?);
            if !b.less(&la, x, &lb, y) {
                b.counter(format!("{la} not below {lb}"), &a);
            }
        }
    }
    Ok(b.finish())
}

pub(crate) fn ucl1(ctx: &Ctx) -> Result<VerificationReport> {
    let mut b = ctx.builder();
    let m = ctx.m;
    for l in 3..=6 {
        for l1 in 1..=4 {
            for l2 in 1..=l1 {
                for i in 1..=l {
                    for j in (1..=l).filter(|&j| j != i) {
                        let (la, a) = uc(m, l, &[(i, l1), (j, l2)])?;
                        let (lb, c) = uc(m, l, &[(i, l1 + 1), (j, l2 - 1)])?;
                        let (x, y) = (b.instance(&la, &a)?, b.instance(&lb, &c)?);
                        if !b.less(&la, x, &lb, y) {
                            b.counter(format!("{la} not below {lb}"), &a);
                        }
                    }
                }
            }
        }
    }
    Ok(b.finish())
}

pub(crate) fn ucl7(ctx: &Ctx) -> Result<VerificationReport> {
    let mut b = ctx.builder();
    let m = ctx.m;
    let mf = m as f64;
    let (mut checked, mut skipped) = (0, 0);
    for l in 3..=8usize {
        let p = l.div_ceil(2);
        for a in 1..=3 {
            for bb in a..=a + 8 {
                let (lp, hp) = uc(m, l, &[(1, bb), (p, a)])?;
                let lam = b.instance(&lp, &hp)?;
                let threshold = (mf + (mf * mf + 4.0 * (a as f64 + 2.0) * (mf - 1.0)).sqrt())
                    / (2.0 * mf - 2.0);
                if lam < threshold {
                    skipped += 1;
                    continue;
                }
                checked += 1;
                // Position 1 carries both bundles when i−1 = 1.
                for i in 2..=p {
                    let (li, hi) = uc(m, l, &[(1, bb), (i, a)])?;
                    let (lj, hj) = uc(m, l, &[(1, bb), (i - 1, a)])?;
                    let (x, y) = (b.instance(&li, &hi)?, b.instance(&lj, &hj)?);
                    if !b.less(&li, x, &lj, y) {
                        b.counter(format!("{li} not below {lj}"), &hi);
                    }
                }
            }
        }
    }
    b.note(format!(
        "{checked} base shapes meet the λ₁ hypothesis; {skipped} do not"
    ));
    b.hypotheses(checked > 0, "no base shape meets the λ₁ hypothesis");
    Ok(b.finish())
}
