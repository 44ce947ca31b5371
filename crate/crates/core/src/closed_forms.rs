//! Closed-form radii, spectra, characteristic polynomials and bounds.
//!
//! Convention: polynomials are in x = (m−1)·λ₁ ("scaled radius"); functions
//! returning λ₁ say so explicitly.

use std::collections::BTreeMap;

use nalgebra::DMatrix;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::charpoly::CharPoly;
use crate::error::{Error, Result};

pub const REALNESS_TOL: f64 = 1e-10;

fn mf(m: usize) -> f64 {
    m as f64
}

/// λ₁ of the hyperstar with k edges: (m−2+√((m−2)²+4k(m−1)))/(2(m−1)).
pub fn hyperstar_radius(m: usize, k: usize) -> f64 {
    let (m, k) = (mf(m), k as f64);
    (m - 2.0 + ((m - 2.0).powi(2) + 4.0 * k * (m - 1.0)).sqrt()) / (2.0 * (m - 1.0))
}

/// λ₁ of every loose cycle: (m−1+√(m²+6m−7))/(2m−2).
pub fn loose_cycle_radius(m: usize) -> f64 {
    let m = mf(m);
    (m - 1.0 + (m * m + 6.0 * m - 7.0).sqrt()) / (2.0 * m - 2.0)
}

/// The universal upper bound on λ₁ of loose paths (equal to the loose-cycle
/// radius).
pub fn loose_path_bound(m: usize) -> f64 {
    loose_cycle_radius(m)
}

/// Eigenvalues of C_L(l), ascending: γᵢ±/(m−1) for i = 1..l and −1/(m−1)
/// with multiplicity l(m−3).
pub fn loose_cycle_spectrum_formula(m: usize, l: usize) -> Result<Vec<f64>> {
    if m < 3 || l < 2 {
        return Err(Error::Parameter(format!(
            "need m ≥ 3 and l ≥ 2, got m={m}, l={l}"
        )));
    }
    let s = mf(m) - 1.0;
    let mut out = Vec::with_capacity(l * (m - 1));
    for i in 1..=l {
        let c = (2.0 * std::f64::consts::PI * i as f64 / l as f64).cos();
        let a = mf(m) - 3.0 + 2.0 * c;
        let disc = (a * a + 8.0 * (mf(m) - 2.0 + c)).sqrt();
        out.push((a + disc) / 2.0 / s);
        out.push((a - disc) / 2.0 / s);
    }
    out.extend(std::iter::repeat_n(-1.0 / s, l * (m - 3)));
    out.sort_by(|a, b| a.total_cmp(b));
    Ok(out)
}

/// Threshold on λ₁ above which Perron ratios along an attached loose path are
/// monotone: (m−1+√((m−1)(m+7)))/(2(m−1)).
pub fn perron_ratio_threshold(m: usize) -> f64 {
    let m = mf(m);
    (m - 1.0 + ((m - 1.0) * (m + 7.0)).sqrt()) / (2.0 * (m - 1.0))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundsReport {
    pub formula_id: String,
    pub inputs: BTreeMap<String, usize>,
    /// Hypotheses of the bound hold for these inputs.
    pub applicable: bool,
    pub lower: Option<f64>,
    pub upper: Option<f64>,
    /// "lambda1" or "scaled" ((m−1)·λ₁).
    pub convention: String,
}

impl BoundsReport {
    fn new(
        id: &str,
        inputs: &[(&str, usize)],
        applicable: bool,
        lower: Option<f64>,
        upper: Option<f64>,
    ) -> Self {
        BoundsReport {
            formula_id: id.into(),
            inputs: inputs.iter().map(|&(k, v)| (k.to_string(), v)).collect(),
            applicable,
            lower,
            upper,
            convention: "lambda1".into(),
        }
    }

    fn scaled(mut self) -> Self {
        self.convention = "scaled".into();
        self
    }

    /// lower < value < upper, each side with margin > `margin`.
    pub fn brackets(&self, value: f64, margin: f64) -> bool {
        self.lower.is_none_or(|l| value - l > margin)
            && self.upper.is_none_or(|u| u - value > margin)
    }
}

/// (a + √(a² + 4·b·(m−1))) / 2, the recurring root shape.
fn root_form(a: f64, b: f64, m: usize) -> f64 {
    (a + (a * a + 4.0 * b * (mf(m) - 1.0)).sqrt()) / 2.0
}

/// Upper bound on λ₁ for hypertrees with k edges and diameter d, valid when
/// (k−d−1)(m−1) ≥ 6: (m+√(m²+4(k−d+4)(m−1)))/(2m−2).
pub fn hypertree_diameter_bound(m: usize, k: usize, d: usize) -> BoundsReport {
    let applicable = k > d && (k - d - 1) * (m - 1) >= 6;
    let upper = root_form(mf(m), k as f64 - d as f64 + 4.0, m) / (mf(m) - 1.0);
    BoundsReport::new(
        "hypertree_diameter",
        &[("m", m), ("k", k), ("d", d)],
        applicable,
        None,
        Some(upper),
    )
}

/// Upper bound for even diameter d when k ≥ ((4d²−1)(m−1)+2)/4:
/// (m−1+√((m−1)²+4(k−d)(m−1)))/(2m−2).
pub fn even_diameter_bound(m: usize, k: usize, d: usize) -> BoundsReport {
    let applicable = d.is_multiple_of(2) && 4 * k >= (4 * d * d - 1) * (m - 1) + 2;
    let upper = root_form(mf(m) - 1.0, k as f64 - d as f64, m) / (mf(m) - 1.0);
    BoundsReport::new(
        "even_diameter",
        &[("m", m), ("k", k), ("d", d)],
        applicable,
        None,
        Some(upper),
    )
}

/// Bracket for λ₁(UC_l(c₁=k−l)):
/// (m−2+√((m−2)²+4(k−l+2)(m−1)))/(2(m−1)) < λ₁ < (m+√(m²+4(k−l+2)(m−1)))/(2(m−1)).
pub fn unicyclic_bounds(m: usize, k: usize, l: usize) -> BoundsReport {
    let b = k as f64 - l as f64 + 2.0;
    let s = mf(m) - 1.0;
    BoundsReport::new(
        "unicyclic",
        &[("m", m), ("k", k), ("l", l)],
        k >= l,
        Some(root_form(mf(m) - 2.0, b, m) / s),
        Some(root_form(mf(m), b, m) / s),
    )
}

/// Upper bound for the second-largest unicyclic shape with cycle length l:
/// λ₁(UC_l(c₁=k−l−1, c₂=1)) < (m+√(m²+4(k−l+1)(m−1)))/(2m−2).
pub fn unicyclic_second_bound(m: usize, k: usize, l: usize) -> BoundsReport {
    let b = k as f64 - l as f64 + 1.0;
    BoundsReport::new(
        "unicyclic_second",
        &[("m", m), ("k", k), ("l", l)],
        k > l,
        None,
        Some(root_form(mf(m), b, m) / (mf(m) - 1.0)),
    )
}

/// λ₁(T₁C(k−5,0,0,0)) < (m+1+√((m+1)²+4(k−3)(m−1)))/(2m−2).
pub fn t1c_bound(m: usize, k: usize) -> BoundsReport {
    let upper = root_form(mf(m) + 1.0, k as f64 - 3.0, m) / (mf(m) - 1.0);
    BoundsReport::new("t1c", &[("m", m), ("k", k)], k >= 5, None, Some(upper))
}

/// Bracket on the scaled root |α| of the unicyclic triangle polynomial:
/// (m−2+√((m−2)²+4(k−1)(m−1)))/2 < |α| < (m+√(m²+4(k−1)(m−1)))/2.
pub fn uc3_scaled_bounds(m: usize, k: usize) -> BoundsReport {
    let b = k as f64 - 1.0;
    BoundsReport::new(
        "uc3",
        &[("m", m), ("k", k)],
        k >= 3,
        Some(root_form(mf(m) - 2.0, b, m)),
        Some(root_form(mf(m), b, m)),
    )
    .scaled()
}

/// Bracket on |β| for BC(k−6):
/// (m−2+√((m−2)²+4(k−2)(m−1)))/2 < |β| < (m+2+√((m+2)²+4(k−2)(m−1)))/2.
pub fn bc_scaled_bounds(m: usize, k: usize) -> BoundsReport {
    let b = k as f64 - 2.0;
    BoundsReport::new(
        "bc",
        &[("m", m), ("k", k)],
        k >= 6,
        Some(root_form(mf(m) - 2.0, b, m)),
        Some(root_form(mf(m) + 2.0, b, m)),
    )
    .scaled()
}

/// γ < (m+4+√((m+4)²+4(k−3)(m−1)))/2 for T₂C(c₁=k−9).
pub fn t2c_scaled_bound(m: usize, k: usize) -> BoundsReport {
    let upper = root_form(mf(m) + 4.0, k as f64 - 3.0, m);
    BoundsReport::new("t2c", &[("m", m), ("k", k)], k >= 9, None, Some(upper)).scaled()
}

/// A fixed-form polynomial and its largest-modulus root.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PolyRoot {
    pub poly: CharPoly,
    /// Largest-modulus root in the scaled convention x = (m−1)λ₁.
    pub root: f64,
    /// |root|/(m−1).
    pub lambda1: f64,
}

fn c(v: i64) -> CharPoly {
    CharPoly::constant(v)
}

/// x − a.
fn xm(a: i64) -> CharPoly {
    CharPoly::from_i64(&[-a, 1])
}

fn ii(v: usize) -> i64 {
    v as i64
}

/// x² − (m−2)x − 2m + 3, the factor shared by all cyclic polynomials.
fn shared_quadratic(m: i64) -> CharPoly {
    CharPoly::from_i64(&[-2 * m + 3, -(m - 2), 1])
}

/// Characteristic polynomial of the unicyclic triangle quotient, i.e. of
/// UC₃(c₁=k−3) restricted to its equitable partition:
/// (x²−(m−2)x−2m+3)[(x−m+3)(x(x−m+2)−(k−1)(m−1)+2)+2(m−2)] − 2(x+1)²(x−m+2).
pub fn uc3_polynomial(m: usize, k: usize) -> CharPoly {
    cyclic_family_polynomial(ii(m), ii(k) - 1, 2)
}

/// Shared shape of the UC₃ / BC / T₂C polynomials:
/// (x²−(m−2)x−2m+3)[(x−m+3)(x(x−m+2)−b(m−1)+c)+c(m−2)] − c(x+1)²(x−m+2)
/// where b is the degree of the center and c = `cycle_edges` the number of
/// cycle edges through it.
fn cyclic_family_polynomial(m: i64, b: i64, cycle_edges: i64) -> CharPoly {
    let two_t = cycle_edges;
    let x = CharPoly::x();
    let inner = &(&x * &xm(m - 2)) - &c(b * (m - 1) - two_t);
    let bracket = &(&xm(m - 3) * &inner) + &c(two_t * (m - 2));
    let xp1 = CharPoly::from_i64(&[1, 1]);
    let tail = &(&(&xp1 * &xp1) * &xm(m - 2)) * &c(two_t);
    &(&shared_quadratic(m) * &bracket) - &tail
}

/// A commonly quoted compact degree-5 form. It does not agree with the
/// spectrum; kept for comparison.
pub fn uc3_polynomial_compact(m: usize, k: usize) -> CharPoly {
    let (m, k) = (ii(m), ii(k));
    let x = CharPoly::x();
    let cubic = CharPoly::from_i64(&[
        -(k - 3) * (m - 1) * (m - 3),
        (k - 5) * (m - 1) + 2,
        -(m - 3),
        1,
    ]);
    let xp1 = CharPoly::from_i64(&[1, 1]);
    let tail = &(&(&x * &xp1) * &xp1) * &c(2);
    &(&shared_quadratic(m) * &cubic) - &tail
}

/// Variant with an extra factor x in the last term. Also disagrees with
/// the spectrum; kept for comparison.
pub fn uc3_polynomial_x_tail(m: usize, k: usize) -> CharPoly {
    let x = CharPoly::x();
    let corrected = uc3_polynomial(m, k);
    // corrected = Q·[…] − 2(x+1)²(x−m+2); this variant has −2x(x+1)²(x−m+2).
    let xp1 = CharPoly::from_i64(&[1, 1]);
    let tail = &(&(&xp1 * &xp1) * &xm(ii(m) - 2)) * &c(2);
    let shifted = &(&x - &c(1)) * &tail;
    &corrected - &shifted
}

/// Scaled quotient matrix (m−1)·B of UC₃(c₁=k−3) on the parts
/// {v₁}, {v₂,v₃}, pendant-edge vertices, loose vertices of e₁ and e₃, loose
/// vertices of e₂.
pub fn uc3_scaled_quotient(m: usize, k: usize) -> Vec<Vec<i64>> {
    let (m, k) = (ii(m), ii(k));
    vec![
        vec![0, 2, (k - 3) * (m - 1), 2 * (m - 2), 0],
        vec![1, 1, 0, m - 2, m - 2],
        vec![1, 0, m - 2, 0, 0],
        vec![1, 1, 0, m - 3, 0],
        vec![0, 2, 0, 0, m - 3],
    ]
}

/// BC(k−6) polynomial, expanded:
/// (x(x−m+2)(x−m+3) − (k−6)(m−1)(x−m+3) − 4(m−2)(x−m+2))(x²−(m−2)x−2m+3) − 4(x+1)²(x−m+2).
pub fn bc_polynomial(m: usize, k: usize) -> CharPoly {
    let (m, k) = (ii(m), ii(k));
    let x = CharPoly::x();
    let cubic = &(&(&(&x * &xm(m - 2)) * &xm(m - 3)) - &(&c((k - 6) * (m - 1)) * &xm(m - 3)))
        - &(&c(4 * (m - 2)) * &xm(m - 2));
    let xp1 = CharPoly::from_i64(&[1, 1]);
    let tail = &(&(&xp1 * &xp1) * &xm(m - 2)) * &c(4);
    &(&cubic * &shared_quadratic(m)) - &tail
}

/// BC(k−6) polynomial, factored through the shared shape:
/// (x²−(m−2)x−2m+3)((x−m+3)(x(x−m+2)−(k−2)(m−1)+4)+4(m−2)) − 4(x+1)²(x−m+2).
pub fn bc_polynomial_factored(m: usize, k: usize) -> CharPoly {
    cyclic_family_polynomial(ii(m), ii(k) - 2, 4)
}

/// T₂C(c₁=k−9) polynomial:
/// (x²−(m−2)x−2m+3)((x−m+3)(x(x−m+2)−(k−3)(m−1)+6)+6(m−2)) − 6(x+1)²(x−m+2).
pub fn t2c_polynomial(m: usize, k: usize) -> CharPoly {
    cyclic_family_polynomial(ii(m), ii(k) - 3, 6)
}

/// Roots of an integer polynomial via companion-matrix eigenvalues.
pub fn polynomial_roots(p: &CharPoly) -> Vec<nalgebra::Complex<f64>> {
    let a = p.to_f64();
    let deg = a.len() - 1;
    if deg == 0 {
        return Vec::new();
    }
    let lead = a[deg];
    let comp = DMatrix::from_fn(deg, deg, |i, j| {
        if i == 0 {
            -a[deg - 1 - j] / lead
        } else if i == j + 1 {
            1.0
        } else {
            0.0
        }
    });
    comp.complex_eigenvalues().iter().copied().collect()
}

/// Largest-modulus root, asserted real, polished by exact Newton steps.
pub fn largest_modulus_root(p: &CharPoly) -> Result<f64> {
    let roots = polynomial_roots(p);
    let z = roots
        .iter()
        .copied()
        .max_by(|a, b| a.norm().total_cmp(&b.norm()))
        .ok_or_else(|| Error::Parameter("constant polynomial".into()))?;
    if z.im.abs() > REALNESS_TOL * z.norm().max(1.0) {
        return Err(Error::ComplexEigenvalue { re: z.re, im: z.im });
    }
    let dp = p.derivative();
    let mut x = z.re;
    for _ in 0..8 {
        let (Some(xr), true) = (BigRational::from_float(x), x.is_finite()) else {
            break;
        };
        let d = dp.eval(&xr);
        if d == BigRational::from_integer(0.into()) {
            break;
        }
        let step = (p.eval(&xr) / d).to_f64().unwrap_or(0.0);
        x -= step;
        if step.abs() <= f64::EPSILON * x.abs() {
            break;
        }
    }
    Ok(x)
}

fn poly_root(poly: CharPoly, m: usize) -> Result<PolyRoot> {
    let root = largest_modulus_root(&poly)?;
    Ok(PolyRoot {
        lambda1: root.abs() / (m as f64 - 1.0),
        root,
        poly,
    })
}

/// λ₁(UC₃(c₁=k−3)) from the (corrected) degree-5 polynomial.
pub fn uc3_char_poly(m: usize, k: usize) -> Result<PolyRoot> {
    if m < 3 || k < 3 {
        return Err(Error::Parameter(format!(
            "need m ≥ 3, k ≥ 3, got m={m}, k={k}"
        )));
    }
    poly_root(uc3_polynomial(m, k), m)
}

/// λ₁(BC(k−6)) = |β|/(m−1).
pub fn bc_char_poly(m: usize, k: usize) -> Result<PolyRoot> {
    if m < 3 || k < 6 {
        return Err(Error::Parameter(format!(
            "need m ≥ 3, k ≥ 6, got m={m}, k={k}"
        )));
    }
    poly_root(bc_polynomial(m, k), m)
}

/// λ₁(T₂C(c₁=k−9)) = γ/(m−1).
pub fn t2c_char_poly(m: usize, k: usize) -> Result<PolyRoot> {
    if m < 3 || k < 9 {
        return Err(Error::Parameter(format!(
            "need m ≥ 3, k ≥ 9, got m={m}, k={k}"
        )));
    }
    poly_root(t2c_polynomial(m, k), m)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hyperstar_values() {
        assert!((hyperstar_radius(2, 4) - 2.0).abs() < 1e-15);
        assert!((hyperstar_radius(3, 3) - 1.5).abs() < 1e-15);
        assert!((hyperstar_radius(3, 5) - (1.0 + 41f64.sqrt()) / 4.0).abs() < 1e-15);
    }

    #[test]
    fn cycle_spectrum_shape() {
        let s = loose_cycle_spectrum_formula(4, 3).unwrap();
        assert_eq!(s.len(), 9);
        assert_eq!(
            s.iter().filter(|&&x| (x + 1.0 / 3.0).abs() < 1e-12).count(),
            3
        );
        assert!((s.last().unwrap() - loose_cycle_radius(4)).abs() < 1e-12);
        assert!(loose_cycle_spectrum_formula(2, 3).is_err());
    }

    #[test]
    fn uc3_collapses_to_cycle_at_k3() {
        let r = uc3_char_poly(3, 3).unwrap();
        assert!((r.root - (1.0 + 5f64.sqrt())).abs() < 1e-12);
    }

    #[test]
    fn alternative_uc3_forms_disagree() {
        for k in 3..8 {
            assert_ne!(uc3_polynomial_compact(3, k), uc3_polynomial(3, k));
            assert_ne!(uc3_polynomial_x_tail(3, k), uc3_polynomial(3, k));
        }
    }

    #[test]
    fn bc_forms_agree() {
        for m in 3..7 {
            for k in 6..20 {
                assert_eq!(bc_polynomial(m, k), bc_polynomial_factored(m, k));
            }
        }
    }

    #[test]
    fn applicability() {
        assert!(!hypertree_diameter_bound(3, 8, 5).applicable);
        assert!(hypertree_diameter_bound(3, 15, 5).applicable);
        assert!(hypertree_diameter_bound(4, 12, 4).applicable);
        assert!(even_diameter_bound(3, 32, 4).applicable);
        assert!(!even_diameter_bound(3, 16, 4).applicable);
        assert!(!even_diameter_bound(3, 40, 5).applicable);
        let u = unicyclic_bounds(4, 10, 3);
        assert!(u.lower.unwrap() < u.upper.unwrap());
    }

    #[test]
    fn degree_and_leading() {
        for p in [
            uc3_polynomial(4, 9),
            bc_polynomial(4, 9),
            t2c_polynomial(4, 12),
        ] {
            assert_eq!(p.degree(), 5);
            assert_eq!(p.coeffs[5], 1.into());
        }
    }
}
