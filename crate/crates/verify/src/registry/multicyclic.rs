//! Bicyclic and tricyclic orderings, polynomials and the vertex-count
//! identity.

use hyperspectra::closed_forms::{
    bc_char_poly, bc_polynomial, bc_polynomial_factored, bc_scaled_bounds, t1c_bound,
    t2c_char_poly, t2c_scaled_bound, BoundsReport,
};
use hyperspectra::cycles::{classify_cyclicity, Cyclicity};
use hyperspectra::families::{bicyclic_b2c, power_hypergraph, tricyclic_t1c, tricyclic_t2c};
use hyperspectra::Hypergraph;

use super::{assert_top, candidates, score, Ctx};
use crate::enumerate::{
    enumerate_class, graph_cycle_lengths, graphs_with_cycle_count, Budget, ClassId, Constraints,
    Universe,
};
use crate::error::{Result, VerifyError};
use crate::report::{ReportBuilder, VerificationReport};

pub(crate) fn b2c(m: usize, l1: usize, l2: usize) -> Result<(String, Hypergraph)> {
    Ok((
        format!("two-triangles[1:{l1},2:{l2}]"),
        bicyclic_b2c(m, l1, l2)?,
    ))
}

pub(crate) fn t1c(m: usize, l: [usize; 4]) -> Result<(String, Hypergraph)> {
    Ok((format!("theta{l:?}"), tricyclic_t1c(m, l)?))
}

pub(crate) fn t2c(m: usize, c1: usize, c2: usize) -> Result<(String, Hypergraph)> {
    Ok((
        format!("three-triangles[1:{c1},2:{c2}]"),
        tricyclic_t2c(m, [c1, c2, 0, 0, 0, 0, 0])?,
    ))
}

fn need_k(ctx: &Ctx, min: usize) -> Result<()> {
    if ctx.k < min {
        return Err(VerifyError::Param(format!(
            "this check needs k ≥ {min}, got {}",
            ctx.k
        )));
    }
    Ok(())
}

/// Scaled radius against a scaled-convention bracket.
fn bracket(b: &mut ReportBuilder, label: &str, scaled: f64, br: &BoundsReport) {
    if let Some(lo) = br.lower {
        b.less(&format!("{} lower", br.formula_id), lo, label, scaled);
    }
    if let Some(hi) = br.upper {
        b.less(label, scaled, &format!("{} upper", br.formula_id), hi);
    }
}

pub(crate) fn bc_top(ctx: &Ctx) -> Result<VerificationReport> {
    let mut b = ctx.builder();
    let (m, k) = (ctx.m, ctx.k);
    need_k(ctx, 6)?;
    let top = b2c(m, k - 6, 0)?;
    let items = candidates(&mut b, ctx, ClassId::Bicyclic, &Constraints::default())?;
    let pool = score(&mut b, items, "cand")?;
    assert_top(&mut b, &pool, std::slice::from_ref(&top), &[])?;
    let lam = b.instance(&top.0, &top.1)?;
    let pr = bc_char_poly(m, k)?;
    b.at_most(
        "polynomial root / (m−1)",
        pr.lambda1,
        &top.0,
        lam,
        ctx.margin,
    );
    b.at_most(
        &top.0,
        lam,
        "polynomial root / (m−1)",
        pr.lambda1,
        ctx.margin,
    );
    if bc_polynomial(m, k) != bc_polynomial_factored(m, k) {
        b.fail("expanded and factored polynomial forms differ");
    }
    bracket(
        &mut b,
        &top.0,
        lam * (m - 1) as f64,
        &bc_scaled_bounds(m, k),
    );
    Ok(b.finish())
}

pub(crate) fn b2c_second(ctx: &Ctx) -> Result<VerificationReport> {
    let mut b = ctx.builder();
    let (m, k) = (ctx.m, ctx.k);
    need_k(ctx, 8)?;
    b.hypotheses(k >= 12 && (k - 12) * (m - 1) >= 56, "(k−12)(m−1) ≥ 56");
    let first = b2c(m, k - 6, 0)?;
    let second = b2c(m, k - 7, 1)?;
    let items = candidates(&mut b, ctx, ClassId::Bicyclic, &Constraints::default())?;
    let pool = score(&mut b, items, "cand")?;
    assert_top(&mut b, &pool, &[second], &[first.1])?;
    Ok(b.finish())
}

pub(crate) fn b2c_lemma(ctx: &Ctx) -> Result<VerificationReport> {
    let mut b = ctx.builder();
    let m = ctx.m;
    for l1 in 1..=8 {
        for l2 in 1..=l1 {
            let (la, a) = b2c(m, l1, l2)?;
            let (lc, c) = b2c(m, l1 + 1, l2 - 1)?;
            let (x, y) = (b.instance(&la, &a)?, b.instance(&lc, &c)?);
            if !b.less(&la, x, &lc, y) {
                b.counter(format!("{la} not below {lc}"), &a);
            }
        }
        for l2 in 0..l1 {
            let (la, a) = b2c(m, l2, l1)?;
            let (lc, c) = b2c(m, l1, l2)?;
            let (x, y) = (b.instance(&la, &a)?, b.instance(&lc, &c)?);
            if !b.less(&la, x, &lc, y) {
                b.counter(format!("{la} not below {lc}"), &a);
            }
        }
    }
    Ok(b.finish())
}

pub(crate) fn tri_prop(ctx: &Ctx) -> Result<VerificationReport> {
    let mut b = ctx.builder();
    let (m, k) = (ctx.m, ctx.k);
    need_k(ctx, 5)?;
    let budget = Budget {
        max_k: ctx.budget,
        ..Budget::default()
    };
    let graphs = graphs_with_cycle_count(k, 3, &budget)?;
    b.scope(format!("exhaustive: all {} connected graphs with k={k} and exactly three cycles, as power hypergraphs", graphs.len()));
    let base = k * (m - 1);
    let (mut type1, mut type2) = (0, 0);
    for g in &graphs {
        let h = power_hypergraph(g, m)?;
        let rep = classify_cyclicity(&h)?;
        if rep.loose_cycle_count != graph_cycle_lengths(g).len() {
            b.counter("loose-cycle count disagrees with the graph cycle count", &h);
        }
        match rep.classification {
            Cyclicity::TricyclicTypeI if h.n() + 1 == base => type1 += 1,
            Cyclicity::TricyclicTypeII if h.n() + 2 == base => type2 += 1,
            _ => b.counter(
                format!("n = {} is neither k(m−1)−1 nor k(m−1)−2", h.n()),
                &h,
            ),
        }
    }
    b.note(format!(
        "{type1} with n = k(m−1)−1, {type2} with n = k(m−1)−2"
    ));
    // The same identity in the wider linear universe, as an observation.
    if m >= 3 && k <= 6 {
        let lb = Budget {
            max_k: 6,
            ..Budget::default()
        };
        let mut seen = 0;
        for class in [ClassId::TricyclicI, ClassId::TricyclicII] {
            seen +=
                enumerate_class(class, m, k, &Constraints::default(), Universe::Linear, &lb)?.len();
        }
        b.note(format!("linear universe: {seen} hypergraphs with three loose cycles satisfy one of the identities"));
    }
    if graphs.is_empty() {
        b.fail("no tricyclic graphs generated");
    }
    Ok(b.finish())
}

pub(crate) fn t1c_top(ctx: &Ctx) -> Result<VerificationReport> {
    let mut b = ctx.builder();
    let (m, k) = (ctx.m, ctx.k);
    need_k(ctx, 5)?;
    let top = t1c(m, [k - 5, 0, 0, 0])?;
    let items = candidates(&mut b, ctx, ClassId::TricyclicI, &Constraints::default())?;
    let pool = score(&mut b, items, "cand")?;
    assert_top(&mut b, &pool, std::slice::from_ref(&top), &[])?;
    let lam = b.instance(&top.0, &top.1)?;
    let br = t1c_bound(m, k);
    b.less(&top.0, lam, &br.formula_id, br.upper.expect("upper"));
    Ok(b.finish())
}

pub(crate) fn t1c_second(ctx: &Ctx) -> Result<VerificationReport> {
    let mut b = ctx.builder();
    let (m, k) = (ctx.m, ctx.k);
    need_k(ctx, 7)?;
    b.hypotheses(k >= 11 && (k - 11) * (m - 1) >= 42, "(k−11)(m−1) ≥ 42");
    let first = t1c(m, [k - 5, 0, 0, 0])?;
    let second = t1c(m, [k - 6, 0, 1, 0])?;
    let items = candidates(&mut b, ctx, ClassId::TricyclicI, &Constraints::default())?;
    let pool = score(&mut b, items, "cand")?;
    assert_top(&mut b, &pool, &[second], &[first.1])?;
    Ok(b.finish())
}

pub(crate) fn t2c_top(ctx: &Ctx) -> Result<VerificationReport> {
    let mut b = ctx.builder();
    let (m, k) = (ctx.m, ctx.k);
    need_k(ctx, 9)?;
    let top = t2c(m, k - 9, 0)?;
    let items = candidates(&mut b, ctx, ClassId::TricyclicII, &Constraints::default())?;
    let pool = score(&mut b, items, "cand")?;
    assert_top(&mut b, &pool, std::slice::from_ref(&top), &[])?;
    let lam = b.instance(&top.0, &top.1)?;
    let pr = t2c_char_poly(m, k)?;
    b.at_most(
        "polynomial root / (m−1)",
        pr.lambda1,
        &top.0,
        lam,
        ctx.margin,
    );
    b.at_most(
        &top.0,
        lam,
        "polynomial root / (m−1)",
        pr.lambda1,
        ctx.margin,
    );
    bracket(
        &mut b,
        &top.0,
        lam * (m - 1) as f64,
        &t2c_scaled_bound(m, k),
    );
    Ok(b.finish())
}

pub(crate) fn t2c_second(ctx: &Ctx) -> Result<VerificationReport> {
    let mut b = ctx.builder();
    let (m, k) = (ctx.m, ctx.k);
    need_k(ctx, 10)?;
    b.hypotheses(k >= 13 && (k - 13) * (m - 1) >= 46, "(k−13)(m−1) ≥ 46");
    let first = t2c(m, k - 9, 0)?;
    let second = t2c(m, k - 10, 1)?;
    let items = candidates(&mut b, ctx, ClassId::TricyclicII, &Constraints::default())?;
    let pool = score(&mut b, items, "cand")?;
    assert_top(&mut b, &pool, &[second], &[first.1])?;
    Ok(b.finish())
}

pub(crate) fn remark_bt(ctx: &Ctx) -> Result<VerificationReport> {
    let mut b = ctx.builder();
    let m = ctx.m;
    need_k(ctx, 6)?;
    for k in 6..=ctx.k {
        let (lb, hb) = b2c(m, k - 6, 0)?;
        let (lt, ht) = t1c(m, [k - 5, 0, 0, 0])?;
        let (x, y) = (b.instance(&lb, &hb)?, b.instance(&lt, &ht)?);
        if !b.less(&lb, x, &lt, y) {
            b.counter(format!("k={k}: {lb} not below {lt}"), &hb);
        }
        if k >= 7 {
            let (l1, h1) = b2c(m, 0, k - 6)?;
            let (l2, h2) = b2c(m, k - 7, 1)?;
            let (lt2, ht2) = t1c(m, [k - 6, 0, 1, 0])?;
            let (a, c, t) = (
                b.instance(&l1, &h1)?,
                b.instance(&l2, &h2)?,
                b.instance(&lt2, &ht2)?,
            );
            let (lw, hw, w) = if a >= c { (l1, h1, a) } else { (l2, h2, c) };
            if !b.less(&lw, w, &lt2, t) {
                b.counter(format!("k={k}: {lw} not below {lt2}"), &hw);
            }
        }
    }
    Ok(b.finish())
}
