//! The registry of extremal orderings, closed forms and inequalities, each a
//! function from parameters to a [`VerificationReport`].

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use hyperspectra::spectral::DEFAULT_TOL;
use hyperspectra::Hypergraph;

use crate::canon::hypergraph_code;
use crate::enumerate::{
    enumerate_class, kernel_hub_class, Budget, ClassId, Constraints, Enumerated, Universe,
};
use crate::error::{Result, VerifyError};
use crate::report::{compute_instance, ReportBuilder, VerificationReport};

mod multicyclic;
mod trees;
mod unicyclic;

pub const DEFAULT_MARGIN: f64 = 1e-9;
/// Largest k for which candidate classes are enumerated in full.
pub const DEFAULT_BUDGET: usize = 10;
/// Kernel size for structured classes beyond the budget.
pub const DEFAULT_KERNEL: usize = 8;
/// Structured kernels always leave room for this many edges beyond the
/// smallest core of the class.
pub const KERNEL_SLACK: usize = 3;

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct Params {
    pub m: Option<usize>,
    pub k: Option<usize>,
    pub d: Option<usize>,
    pub l: Option<usize>,
    pub tol: Option<f64>,
    pub margin: Option<f64>,
    /// Largest k enumerated in full.
    pub budget: Option<usize>,
    /// Kernel size of structured candidate classes.
    pub kernel: Option<usize>,
}

impl Params {
    pub fn with_m(mut self, m: usize) -> Self {
        self.m = Some(m);
        self
    }
    pub fn with_k(mut self, k: usize) -> Self {
        self.k = Some(k);
        self
    }
    pub fn with_d(mut self, d: usize) -> Self {
        self.d = Some(d);
        self
    }
    pub fn with_l(mut self, l: usize) -> Self {
        self.l = Some(l);
        self
    }

    fn tol(&self) -> f64 {
        self.tol.unwrap_or(DEFAULT_TOL)
    }
    fn margin(&self) -> f64 {
        self.margin.unwrap_or(DEFAULT_MARGIN)
    }
    fn budget(&self) -> usize {
        self.budget.unwrap_or(DEFAULT_BUDGET)
    }
    fn kernel(&self) -> usize {
        self.kernel.unwrap_or(DEFAULT_KERNEL)
    }
}

/// Default parameters of an entry; `None` where the entry does not use one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Defaults {
    pub m: usize,
    pub k: Option<usize>,
    pub d: Option<usize>,
    pub l: Option<usize>,
}

pub struct Entry {
    pub id: &'static str,
    pub claim: &'static str,
    pub defaults: Defaults,
    run: fn(&Ctx) -> Result<VerificationReport>,
}

/// Resolved parameters handed to a check.
pub struct Ctx {
    pub id: &'static str,
    pub claim: &'static str,
    pub m: usize,
    pub k: usize,
    pub d: Option<usize>,
    pub l: Option<usize>,
    pub tol: f64,
    pub margin: f64,
    pub budget: usize,
    pub kernel: usize,
}

impl Ctx {
    pub fn builder(&self) -> ReportBuilder {
        let mut b = ReportBuilder::new(self.id, self.claim, self.tol, self.margin);
        b.param("m", self.m).param("k", self.k);
        if let Some(d) = self.d {
            b.param("d", d);
        }
        if let Some(l) = self.l {
            b.param("l", l);
        }
        b.param("tol", self.tol).param("margin", self.margin);
        b
    }
}

const fn defaults(m: usize, k: Option<usize>, d: Option<usize>, l: Option<usize>) -> Defaults {
    Defaults { m, k, d, l }
}

pub fn registry() -> &'static [Entry] {
    static ENTRIES: &[Entry] = &[
        Entry { id: "TH1_ORDER", claim: "Per-diameter hypertree maxima T*_i (of the form T_i(c_p=k−i)) decrease strictly in i and stay above the loose path", defaults: defaults(3, Some(10), None, None), run: trees::th1_order },
        Entry { id: "TH3_ODD", claim: "For odd d=2p+1 and (k−d−1)(m−1) ≥ 6, T_d(c_{p+1}=k−d) uniquely maximizes λ₁ among hypertrees with diameter d; the diameter bound holds", defaults: defaults(3, Some(9), Some(5), None), run: trees::th3_odd },
        Entry { id: "TH4_EVEN", claim: "For even d=2p and 4k ≥ (4d²−1)(m−1)+2, T_d(c_{p+1}=k−d) uniquely maximizes λ₁ among hypertrees with diameter d, below the even-diameter bound", defaults: defaults(3, Some(32), Some(4), None), run: trees::th4_even },
        Entry { id: "RATIO_3A", claim: "Above the threshold (m−1+√((m−1)(m+7)))/(2(m−1)), Perron ratios along an attached loose path satisfy 1 > X_i/X_{i+1} > X_{i−1}/X_i", defaults: defaults(3, None, None, None), run: trees::ratio_3a },
        Entry { id: "RATIO_3B", claim: "In T_d(c_p=k−d) with (k−d−1)(m−1) ≥ 6, Perron ratios increase toward the hub from both ends of the spine", defaults: defaults(3, None, None, None), run: trees::ratio_3b },
        Entry { id: "SECOND_DIAM", claim: "With (k−d−6)(m−1) ≥ 42, every diameter-d hypertree other than T_d(c_{p+1}=k−d) has λ₁ ≤ λ₁(T_d(c_p=k−d)), p=⌊d/2⌋, with equality only there", defaults: defaults(3, Some(31), Some(4), None), run: trees::second_diam },
        Entry { id: "TOP7_TREES", claim: "With (k−10)(m−1) ≥ 42 the seven hypertrees of largest λ₁ are, in order, T_2(k−2), T_3(c_2=k−3), T_3(c_2=k−4,c_3=1), T_4(c_3=k−4), T_4(c_2=k−4), T_3(c_2=k−5,c_3=2), T_4(c_2=1,c_3=k−5)", defaults: defaults(3, Some(31), None, None), run: trees::top7 },
        Entry { id: "UCT1", claim: "UC_l(c_1=k−l) uniquely maximizes λ₁ in UC(l;k); the maxima decrease in l down to the loose cycle; the two-sided bound with k−l+2 holds", defaults: defaults(3, Some(8), None, None), run: unicyclic::uct1 },
        Entry { id: "UCT2_SECOND", claim: "With (k−l−6)(m−1) ≥ 20, UC_l(c_1=k−l−1,c_2=1) is the unique second maximizer in UC(l;k) and lies below the bound with k−l+1", defaults: defaults(3, Some(19), None, Some(3)), run: unicyclic::uct2_second },
        Entry { id: "UCT3_THIRD", claim: "With (k−l−5)(m−1) ≥ 12, U_lC(c_1=k−l−1) is the unique maximizer in UC(l;k) once the top two are removed", defaults: defaults(3, Some(14), None, Some(3)), run: unicyclic::uct3_third },
        Entry { id: "TOP3_UNI", claim: "With (k−7)(m−1) ≥ 20 the unicyclic power hypergraphs of largest λ₁ are UC_3(c_1=k−3), UC_3(c_1=k−4,c_2=1), U_3C(c_1=k−4) in that order", defaults: defaults(3, Some(17), None, None), run: unicyclic::top3 },
        Entry { id: "UC0", claim: "For l ≥ 4, λ₁(UC_l(c_1=p)) < λ₁(UC_{l−1}(c_1=p+1))", defaults: defaults(3, None, None, None), run: unicyclic::uc0 },
        Entry { id: "UCL1", claim: "For l_1 ≥ l_2 ≥ 1, moving a pendant edge from the lighter to the heavier cycle vertex increases λ₁", defaults: defaults(3, None, None, None), run: unicyclic::ucl1 },
        Entry { id: "UCL7", claim: "With a ≤ b and λ₁(UC_l(c_1=b,c_p=a)) above (m+√(m²+4(a+2)(m−1)))/(2m−2), λ₁(UC_l(c_1=b,c_i=a)) decreases strictly in i = 1..p", defaults: defaults(3, None, None, None), run: unicyclic::ucl7 },
        Entry { id: "BC_TOP", claim: "BC(k−6) uniquely maximizes λ₁ among bicyclic power hypergraphs; its scaled radius is the largest root of the stated polynomial and lies in the stated bracket", defaults: defaults(3, Some(9), None, None), run: multicyclic::bc_top },
        Entry { id: "B2C_SECOND", claim: "With (k−12)(m−1) ≥ 56, B_2C(k−7,1) is the unique maximizer among bicyclic power hypergraphs other than BC(k−6)", defaults: defaults(3, Some(40), None, None), run: multicyclic::b2c_second },
        Entry { id: "B2C_LEMMA", claim: "Shifting pendant edges toward the shared vertex of the two triangles increases λ₁", defaults: defaults(3, None, None, None), run: multicyclic::b2c_lemma },
        Entry { id: "TRI_PROP", claim: "A power hypergraph with exactly three loose cycles has n = k(m−1)−1 or n = k(m−1)−2", defaults: defaults(3, Some(8), None, None), run: multicyclic::tri_prop },
        Entry { id: "T1C_TOP", claim: "T_1C(k−5,0,0,0) uniquely maximizes λ₁ among Type I tricyclic power hypergraphs and lies below (m+1+√((m+1)²+4(k−3)(m−1)))/(2m−2)", defaults: defaults(3, Some(8), None, None), run: multicyclic::t1c_top },
        Entry { id: "T1C_SECOND", claim: "With (k−11)(m−1) ≥ 42, T_1C(k−6,0,1,0) is the unique Type I maximizer other than T_1C(k−5,0,0,0)", defaults: defaults(3, Some(32), None, None), run: multicyclic::t1c_second },
        Entry { id: "T2C_TOP", claim: "T_2C(c_1=k−9) uniquely maximizes λ₁ among Type II tricyclic hypergraphs; its scaled radius is the largest root of the stated polynomial, below the stated bound", defaults: defaults(3, Some(10), None, None), run: multicyclic::t2c_top },
        Entry { id: "T2C_SECOND", claim: "With (k−13)(m−1) ≥ 46, T_2C(c_1=k−10,c_2=1) is the unique Type II maximizer other than T_2C(c_1=k−9)", defaults: defaults(3, Some(36), None, None), run: multicyclic::t2c_second },
        Entry { id: "REMARK_BT", claim: "λ₁(BC(k−6)) < λ₁(T_1C(k−5,0,0,0)) for k ≥ 6 and max{λ₁(B_2C(0,k−6)), λ₁(B_2C(k−7,1))} < λ₁(T_1C(k−6,0,1,0)), swept over k = 6..K", defaults: defaults(3, Some(12), None, None), run: multicyclic::remark_bt },
    ];
    ENTRIES
}

pub fn lookup(id: &str) -> Result<&'static Entry> {
    registry()
        .iter()
        .find(|e| e.id.eq_ignore_ascii_case(id))
        .ok_or_else(|| VerifyError::UnknownTheorem(id.into()))
}

/// Runs one registry entry.
pub fn verify(id: &str, params: &Params) -> Result<VerificationReport> {
    let e = lookup(id)?;
    let ctx = Ctx {
        id: e.id,
        claim: e.claim,
        m: params.m.unwrap_or(e.defaults.m),
        k: params.k.or(e.defaults.k).unwrap_or(0),
        d: params.d.or(e.defaults.d),
        l: params.l.or(e.defaults.l),
        tol: params.tol(),
        margin: params.margin(),
        budget: params.budget(),
        kernel: params.kernel(),
    };
    if ctx.m < 2 {
        return Err(VerifyError::Param(format!(
            "m must be at least 2, got {}",
            ctx.m
        )));
    }
    if !(ctx.tol > 0.0) || !(ctx.margin >= 0.0) {
        return Err(VerifyError::Param(
            "tol must be positive and margin non-negative".into(),
        ));
    }
    (e.run)(&ctx)
}

// ---------------------------------------------------------------- shared helpers

/// A candidate with its code and radius.
#[derive(Debug, Clone)]
pub(crate) struct Scored {
    pub label: String,
    pub code: String,
    pub h: Hypergraph,
    pub lambda: f64,
}

/// Computes radii in parallel and records every instance in order.
pub(crate) fn score(
    b: &mut ReportBuilder,
    items: Vec<Enumerated>,
    prefix: &str,
) -> Result<Vec<Scored>> {
    let tol = b.tol();
    let recs = items
        .into_par_iter()
        .enumerate()
        .map(|(i, e)| {
            let label = format!("{prefix}#{i}");
            compute_instance(&label, &e.hypergraph, tol).map(|r| (r, e))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(recs
        .into_iter()
        .map(|(r, e)| {
            let s = Scored {
                label: r.label.clone(),
                code: e.code,
                h: e.hypergraph,
                lambda: r.lambda1,
            };
            b.push_instance(r);
            s
        })
        .collect())
}

/// Candidate class: full enumeration when k is within budget, otherwise the
/// kernel-plus-hub structured class. The choice is recorded in the report.
pub(crate) fn candidates(
    b: &mut ReportBuilder,
    ctx: &Ctx,
    class: ClassId,
    constraints: &Constraints,
) -> Result<Vec<Enumerated>> {
    let kernel = ctx.kernel.max(class.min_edges() + KERNEL_SLACK);
    let budget = Budget {
        max_k: ctx.budget.max(kernel),
        ..Budget::default()
    };
    if ctx.k <= ctx.budget {
        b.scope(format!(
            "exhaustive: all {} power hypergraphs with k={} ({:?})",
            class.name(),
            ctx.k,
            constraints
        ));
        enumerate_class(class, ctx.m, ctx.k, constraints, Universe::Power, &budget)
    } else {
        b.scope(format!(
            "structured: {} power hypergraphs with k={} whose edges outside one pendant bundle number ≤ {} ({:?}); full enumeration capped at k={}",
            class.name(),
            ctx.k,
            kernel,
            constraints,
            ctx.budget
        ));
        kernel_hub_class(class, ctx.m, ctx.k, kernel, constraints, &budget)
    }
}

/// Asserts that `named` are, in order, the strict top of `pool` once the
/// shapes in `excluded` are removed, and that every named shape belongs to
/// the pool.
pub(crate) fn assert_top(
    b: &mut ReportBuilder,
    pool: &[Scored],
    named: &[(String, Hypergraph)],
    excluded: &[Hypergraph],
) -> Result<()> {
    let excluded: BTreeSet<String> = excluded
        .iter()
        .map(hypergraph_code)
        .collect::<Result<_>>()?;
    let mut tops = Vec::new();
    for (label, h) in named {
        let code = hypergraph_code(h)?;
        let lambda = b.instance(label, h)?;
        if !pool.iter().any(|s| s.code == code) {
            b.counter(format!("{label} is missing from the candidate class"), h);
        }
        tops.push((label.clone(), code, lambda));
    }
    for w in tops.windows(2) {
        if !b.less(&w[1].0, w[1].2, &w[0].0, w[0].2) {
            let h = named
                .iter()
                .find(|(l, _)| *l == w[1].0)
                .map(|(_, h)| h.clone())
                .expect("named");
            b.counter(format!("{} is not below {}", w[1].0, w[0].0), &h);
        }
    }
    let named_codes: BTreeSet<&str> = tops.iter().map(|t| t.1.as_str()).collect();
    let rest = pool
        .iter()
        .filter(|s| !named_codes.contains(s.code.as_str()) && !excluded.contains(&s.code))
        .max_by(|a, c| a.lambda.total_cmp(&c.lambda));
    if let (Some(best), Some(last)) = (rest, tops.last()) {
        if !b.less(
            &format!("best other ({})", best.label),
            best.lambda,
            &last.0,
            last.2,
        ) {
            b.counter(
                format!("{} reaches {} ≥ {}", best.label, best.lambda, last.0),
                &best.h,
            );
        }
    }
    b.note(format!(
        "{} candidates, {} excluded",
        pool.len(),
        excluded.len()
    ));
    Ok(())
}

/// The top `r` candidates in decreasing λ₁, described by name when they
/// match one of `names`.
pub(crate) fn observed_order(
    pool: &[Scored],
    names: &[(String, Hypergraph)],
    r: usize,
) -> Result<Vec<String>> {
    let codes: Vec<(String, String)> = names
        .iter()
        .map(|(l, h)| hypergraph_code(h).map(|c| (c, l.clone())))
        .collect::<Result<_>>()?;
    let mut sorted: Vec<&Scored> = pool.iter().collect();
    sorted.sort_by(|a, c| c.lambda.total_cmp(&a.lambda));
    Ok(sorted
        .iter()
        .take(r)
        .map(|s| {
            let name = codes
                .iter()
                .find(|(c, _)| *c == s.code)
                .map(|(_, l)| l.clone())
                .unwrap_or_else(|| s.label.clone());
            format!("{name} ({:.12})", s.lambda)
        })
        .collect())
}

/// Pendant-bundle attachment positions, merging repeated positions.
pub(crate) fn spec(pairs: &[(usize, usize)]) -> hyperspectra::families::AttachmentSpec {
    let mut s = hyperspectra::families::AttachmentSpec::new();
    for &(p, c) in pairs {
        if c > 0 {
            let cur = s.0.get(&p).copied().unwrap_or(0);
            s.0.insert(p, cur + c);
        }
    }
    s
}

/// Human-readable label for a bundle specification, e.g. "[1:5,2:1]".
pub(crate) fn bundle_label(pairs: &[(usize, usize)]) -> String {
    let parts: Vec<String> = pairs
        .iter()
        .filter(|p| p.1 > 0)
        .map(|(p, c)| format!("{p}:{c}"))
        .collect();
    format!("[{}]", parts.join(","))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_are_unique_and_resolvable() {
        let ids: BTreeSet<&str> = registry().iter().map(|e| e.id).collect();
        assert_eq!(ids.len(), registry().len());
        assert!(lookup("th1_order").is_ok());
        assert!(matches!(
            lookup("NOPE"),
            Err(VerifyError::UnknownTheorem(_))
        ));
    }

    #[test]
    fn spec_merges_positions() {
        let s = spec(&[(1, 2), (1, 3), (2, 0)]);
        assert_eq!(s.0.len(), 1);
        assert_eq!(s.0[&1], 5);
    }
}
