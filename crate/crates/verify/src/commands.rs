//! Library side of the command-line subcommands: each returns a JSON value so
//! the binary only parses arguments and prints.

use hyperspectra::charpoly::char_poly_oracle;
use hyperspectra::closed_forms as cf;
use hyperspectra::families::{self as fam, AttachmentSpec};
use hyperspectra::partition::{
    coarsest_equitable_refinement, is_equitable, quotient_matrix, Partition,
};
use hyperspectra::spectral::{full_spectrum, spectral_radius, spectrum_contained};
use hyperspectra::transform::{apply_operation, Operation, SpreadGroup, SpreadPlan};
use hyperspectra::Hypergraph;
use serde_json::{json, Value};

use crate::error::{Result, VerifyError};

pub const FAMILIES: &[&str] = &[
    "path", "cycle", "star", "td", "uc", "ulc", "bc", "b2c", "t1c", "t2c",
];

/// Shape parameters shared by `gen`; which ones are read depends on the family.
#[derive(Debug, Clone, Default)]
pub struct FamilyArgs {
    pub m: usize,
    pub k: Option<usize>,
    pub d: Option<usize>,
    pub l: Option<usize>,
    /// `(position, count)` pendant bundles for `td` and `uc`.
    pub attach: Vec<(usize, usize)>,
    /// Positional pendant counts for `ulc`, `bc`, `b2c`, `t1c`, `t2c`.
    pub counts: Vec<usize>,
}

fn need(v: Option<usize>, name: &str, family: &str) -> Result<usize> {
    v.ok_or_else(|| VerifyError::Param(format!("family `{family}` needs --{name}")))
}

fn counts<const N: usize>(a: &FamilyArgs, family: &str) -> Result<[usize; N]> {
    if a.counts.len() > N {
        return Err(VerifyError::Param(format!(
            "family `{family}` takes at most {N} counts"
        )));
    }
    let mut out = [0; N];
    out[..a.counts.len()].copy_from_slice(&a.counts);
    Ok(out)
}

pub fn generate(family: &str, a: &FamilyArgs) -> Result<Hypergraph> {
    let m = a.m;
    let spec = AttachmentSpec::from_pairs(&a.attach);
    let h = match family {
        "path" => fam::loose_path(m, need(a.l.or(a.k), "l", family)?)?,
        "cycle" => fam::loose_cycle(m, need(a.l.or(a.k), "l", family)?)?,
        "star" => fam::hyperstar(m, need(a.k, "k", family)?)?,
        "td" => fam::hypertree_td(m, need(a.d, "d", family)?, &spec)?,
        "uc" => fam::unicyclic_uc(m, need(a.l, "l", family)?, &spec)?,
        "ulc" => fam::unicyclic_ulc(m, need(a.l, "l", family)?, counts::<1>(a, family)?[0])?,
        "bc" => fam::bicyclic_bc(m, counts::<1>(a, family)?[0])?,
        "b2c" => {
            let [l1, l2] = counts::<2>(a, family)?;
            fam::bicyclic_b2c(m, l1, l2)?
        }
        "t1c" => fam::tricyclic_t1c(m, counts::<4>(a, family)?)?,
        "t2c" => fam::tricyclic_t2c(m, counts::<7>(a, family)?)?,
        _ => {
            return Err(VerifyError::Param(format!(
                "unknown family `{family}` ({})",
                FAMILIES.join(", ")
            )))
        }
    };
    Ok(h)
}

pub fn radius(h: &Hypergraph, tol: f64) -> Result<Value> {
    let r = spectral_radius(h, tol)?;
    Ok(json!({
        "lambda1": r.lambda1,
        "scaled": r.scaled(h.m()),
        "residual": r.residual,
        "iterations": r.iterations,
    }))
}

pub fn spectrum(h: &Hypergraph) -> Result<Value> {
    Ok(json!({ "eigenvalues": full_spectrum(h)? }))
}

/// Coefficients of det(xI − (m−1)A), ascending, as decimal strings.
pub fn charpoly(h: &Hypergraph) -> Result<Value> {
    let p = char_poly_oracle(h)?;
    Ok(
        json!({ "variable": "(m-1)*lambda", "coeffs": p.coeffs.iter().map(|c| c.to_string()).collect::<Vec<_>>() }),
    )
}

/// `args` for each op:
/// - move: `to src:edge src:edge …`
/// - release: `edge [vertex]`
/// - spread: `src:edge:target …`
pub fn parse_operation(op: &str, args: &[String]) -> Result<Operation> {
    let bad = |s: &str| VerifyError::Param(format!("cannot parse `{s}` for --op {op}"));
    let num = |s: &str| s.parse::<usize>().map_err(|_| bad(s));
    match op {
        "move" => {
            let (to, rest) = args.split_first().ok_or_else(|| bad("(empty)"))?;
            let moves = rest
                .iter()
                .map(|s| {
                    let (a, b) = s.split_once(':').ok_or_else(|| bad(s))?;
                    Ok((num(a)?, num(b)?))
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(Operation::Move {
                moves,
                to: num(to)?,
            })
        }
        "release" => match args {
            [e] => Ok(Operation::Release {
                edge: num(e)?,
                at: None,
            }),
            [e, u] => Ok(Operation::Release {
                edge: num(e)?,
                at: Some(num(u)?),
            }),
            _ => Err(bad(&args.join(" "))),
        },
        "spread" => {
            let mut groups: Vec<SpreadGroup> = Vec::new();
            for s in args {
                let parts: Vec<&str> = s.split(':').collect();
                let [src, e, t] = parts[..] else {
                    return Err(bad(s));
                };
                let (src, e, t) = (num(src)?, num(e)?, num(t)?);
                match groups.iter_mut().find(|g| g.source == src) {
                    Some(g) => {
                        g.edges.push(e);
                        g.targets.push(t);
                    }
                    None => groups.push(SpreadGroup {
                        source: src,
                        edges: vec![e],
                        targets: vec![t],
                    }),
                }
            }
            Ok(Operation::Spread {
                plan: SpreadPlan { groups },
            })
        }
        _ => Err(VerifyError::Param(format!(
            "unknown operation `{op}` (move, release, spread)"
        ))),
    }
}

pub fn transform(h: &Hypergraph, op: &Operation, tol: f64) -> Result<Value> {
    let out = apply_operation(h, op, tol)?;
    Ok(json!({
        "lambda_before": out.lambda_before,
        "lambda_after": out.lambda_after,
        "margin": out.margin(),
        "guaranteed": out.guaranteed,
        "observed_increase": out.observed_increase,
        "result": out.result,
    }))
}

/// Quotient of `h` by `parts`; when `parts` is not equitable the coarsest
/// equitable refinement is used instead and reported.
pub fn quotient(h: &Hypergraph, parts: Vec<Vec<usize>>, tol: f64) -> Result<Value> {
    let given = Partition::new(h.n(), parts)?;
    let eq = is_equitable(h, &given)?;
    let pi = if eq.holds() {
        given
    } else {
        coarsest_equitable_refinement(h, &given)?
    };
    let q = quotient_matrix(h, &pi)?;
    let eig_b = q.eigenvalues()?;
    let lambda_b = eig_b.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let lambda_a = spectral_radius(h, tol)?.lambda1;
    let contained = spectrum_contained(&eig_b, &full_spectrum(h)?, 1e-8);
    Ok(json!({
        "given_equitable": eq,
        "parts": pi.parts(),
        "scaled_quotient": q.scaled,
        "scale": q.scale,
        "eigenvalues": eig_b,
        "lambda1_quotient": lambda_b,
        "lambda1": lambda_a,
        "difference": (lambda_b - lambda_a).abs(),
        "spectrum_contained": contained,
    }))
}

pub const FORMULAS: &[&str] = &[
    "hyperstar",
    "loose_cycle",
    "loose_cycle_spectrum",
    "loose_path_bound",
    "perron_ratio_threshold",
    "hypertree_diameter",
    "even_diameter",
    "unicyclic",
    "unicyclic_second",
    "t1c",
    "uc3",
    "bc",
    "t2c",
];

pub fn formula(
    id: &str,
    m: usize,
    k: Option<usize>,
    d: Option<usize>,
    l: Option<usize>,
) -> Result<Value> {
    let k_ = || need(k, "k", id);
    let d_ = || need(d, "d", id);
    let l_ = || need(l, "l", id);
    let v = match id {
        "hyperstar" => json!({ "value": cf::hyperstar_radius(m, k_()?) }),
        "loose_cycle" => json!({ "value": cf::loose_cycle_radius(m) }),
        "loose_cycle_spectrum" => {
            json!({ "eigenvalues": cf::loose_cycle_spectrum_formula(m, l_()?)? })
        }
        "loose_path_bound" => json!({ "upper": cf::loose_path_bound(m) }),
        "perron_ratio_threshold" => json!({ "value": cf::perron_ratio_threshold(m) }),
        "hypertree_diameter" => {
            serde_json::to_value(cf::hypertree_diameter_bound(m, k_()?, d_()?))?
        }
        "even_diameter" => serde_json::to_value(cf::even_diameter_bound(m, k_()?, d_()?))?,
        "unicyclic" => serde_json::to_value(cf::unicyclic_bounds(m, k_()?, l_()?))?,
        "unicyclic_second" => serde_json::to_value(cf::unicyclic_second_bound(m, k_()?, l_()?))?,
        "t1c" => serde_json::to_value(cf::t1c_bound(m, k_()?))?,
        "uc3" => {
            json!({ "bounds": cf::uc3_scaled_bounds(m, k_()?), "root": cf::uc3_char_poly(m, k_()?)? })
        }
        "bc" => {
            json!({ "bounds": cf::bc_scaled_bounds(m, k_()?), "root": cf::bc_char_poly(m, k_()?)? })
        }
        "t2c" => {
            json!({ "bounds": cf::t2c_scaled_bound(m, k_()?), "root": cf::t2c_char_poly(m, k_()?)? })
        }
        _ => {
            return Err(VerifyError::Param(format!(
                "unknown formula `{id}` ({})",
                FORMULAS.join(", ")
            )))
        }
    };
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn args(m: usize) -> FamilyArgs {
        FamilyArgs {
            m,
            ..FamilyArgs::default()
        }
    }

    #[test]
    fn generates_every_family() {
        let mut a = args(3);
        a.k = Some(4);
        a.l = Some(4);
        a.d = Some(4);
        a.attach = vec![(2, 1)];
        a.counts = vec![1];
        for f in FAMILIES {
            let h = generate(f, &a).unwrap();
            assert!(h.is_connected(), "{f}");
        }
    }

    #[test]
    fn star_formula_matches_radius() {
        let mut a = args(3);
        a.k = Some(5);
        let h = generate("star", &a).unwrap();
        let r = radius(&h, 1e-12).unwrap()["lambda1"].as_f64().unwrap();
        let f = formula("hyperstar", 3, Some(5), None, None).unwrap()["value"]
            .as_f64()
            .unwrap();
        assert!((r - f).abs() < 1e-9);
    }

    #[test]
    fn parses_operations() {
        let s = |v: &[&str]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>();
        assert_eq!(
            parse_operation("move", &s(&["0", "3:2"])).unwrap(),
            Operation::Move {
                moves: vec![(3, 2)],
                to: 0
            }
        );
        assert_eq!(
            parse_operation("release", &s(&["1"])).unwrap(),
            Operation::Release { edge: 1, at: None }
        );
        match parse_operation("spread", &s(&["0:1:4", "0:2:5"])).unwrap() {
            Operation::Spread { plan } => assert_eq!(plan.groups[0].targets, vec![4, 5]),
            _ => unreachable!(),
        }
        assert!(parse_operation("twist", &[]).is_err());
    }

    #[test]
    fn non_equitable_partition_is_refined() {
        let mut a = args(3);
        a.l = Some(3);
        let h = generate("path", &a).unwrap();
        let v = quotient(&h, vec![(0..h.n()).collect()], 1e-12).unwrap();
        assert!(v["difference"].as_f64().unwrap() < 1e-9);
        assert_eq!(v["spectrum_contained"], json!(true));
    }
}
