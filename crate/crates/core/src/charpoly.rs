//! Exact characteristic polynomial of (m−1)·A.
//!
//! det(xI − (m−1)A) is evaluated at x = 0..n by fraction-free (Bareiss)
//! elimination over big integers and recovered by exact interpolation.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::spectral::adjacency_matrix;

pub const MAX_ORDER: usize = 64;

/// Integer polynomial, coefficients in ascending powers.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharPoly {
    #[serde(with = "bigint_strings")]
    pub coeffs: Vec<BigInt>,
}

mod bigint_strings {
    use num_bigint::BigInt;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
        v.iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .serialize(s)
    }
    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigInt>, D::Error> {
        Vec::<String>::deserialize(d)?
            .iter()
            .map(|s| s.parse().map_err(serde::de::Error::custom))
            .collect()
    }
}

impl CharPoly {
    pub fn from_i64(coeffs: &[i64]) -> Self {
        CharPoly {
            coeffs: coeffs.iter().map(|&c| BigInt::from(c)).collect(),
        }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| {
                acc * x + BigRational::from_integer(c.clone())
            })
    }

    pub fn derivative(&self) -> CharPoly {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * BigInt::from(i))
            .collect();
        CharPoly { coeffs }
    }

    /// Largest real root of a real-rooted polynomial with positive leading
    /// coefficient, by Newton's method from above a root bound, evaluated
    /// exactly at every iterate (iterates are exact dyadic rationals).
    pub fn largest_real_root(&self) -> Option<f64> {
        let deg = self.degree();
        if deg == 0 {
            return None;
        }
        // Fujiwara bound: every root has modulus ≤ 2·max |c_{deg−i}/c_deg|^{1/i}.
        let lead = self.coeffs[deg].to_f64()?.abs();
        let bound = 2.0
            * (1..=deg)
                .map(|i| {
                    (self.coeffs[deg - i].to_f64().unwrap_or(f64::INFINITY).abs() / lead)
                        .powf(1.0 / i as f64)
                })
                .fold(0.0, f64::max)
            + 1.0;
        let dp = self.derivative();
        let mut x = bound;
        for _ in 0..10_000 {
            let xr = BigRational::from_float(x)?;
            let px = self.eval(&xr);
            if px.is_zero() {
                return Some(x);
            }
            let dpx = dp.eval(&xr);
            if dpx.is_zero() {
                return Some(x);
            }
            let step = (px / dpx).to_f64()?;
            let next = x - step;
            if !(next < x) || step.abs() <= 4.0 * f64::EPSILON * x.abs().max(1.0) {
                return Some(next.min(x));
            }
            x = next;
        }
        Some(x)
    }
}

impl CharPoly {
    /// The monomial x.
    pub fn x() -> Self {
        Self::from_i64(&[0, 1])
    }

    pub fn constant(c: i64) -> Self {
        Self::from_i64(&[c])
    }

    fn trimmed(mut self) -> Self {
        while self.coeffs.len() > 1 && self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
        self
    }

    /// Coefficients as f64, ascending.
    pub fn to_f64(&self) -> Vec<f64> {
        self.coeffs
            .iter()
            .map(|c| c.to_f64().unwrap_or(f64::NAN))
            .collect()
    }
}

impl std::ops::Add for &CharPoly {
    type Output = CharPoly;
    fn add(self, o: &CharPoly) -> CharPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        let z = BigInt::zero();
        let coeffs = (0..n)
            .map(|i| self.coeffs.get(i).unwrap_or(&z) + o.coeffs.get(i).unwrap_or(&z))
            .collect();
        CharPoly { coeffs }.trimmed()
    }
}

impl std::ops::Sub for &CharPoly {
    type Output = CharPoly;
    fn sub(self, o: &CharPoly) -> CharPoly {
        let neg = CharPoly {
            coeffs: o.coeffs.iter().map(|c| -c).collect(),
        };
        self + &neg
    }
}

impl std::ops::Mul for &CharPoly {
    type Output = CharPoly;
    fn mul(self, o: &CharPoly) -> CharPoly {
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        CharPoly { coeffs }.trimmed()
    }
}

/// det(x I − M) for an integer matrix M by Bareiss elimination.
fn det_shifted(m: &[Vec<i64>], x: i64) -> BigInt {
    let n = m.len();
    let mut a: Vec<Vec<BigInt>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| BigInt::from(if i == j { x - m[i][j] } else { -m[i][j] }))
                .collect()
        })
        .collect();
    let mut sign = 1;
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[k][k] * &a[i][j] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
        }
        prev = a[k][k].clone();
    }
    if n == 0 {
        return BigInt::one();
    }
    let d = a[n - 1][n - 1].clone();
    if sign < 0 {
        -d
    } else {
        d
    }
}

/// Monic degree-n polynomial through (i, values[i]), i = 0..n.
fn interpolate(values: &[BigInt]) -> Vec<BigInt> {
    let n = values.len();
    // Newton divided differences at nodes 0, 1, …, n−1.
    let mut dd: Vec<BigRational> = values
        .iter()
        .map(|v| BigRational::from_integer(v.clone()))
        .collect();
    for level in 1..n {
        for i in (level..n).rev() {
            dd[i] = (&dd[i] - &dd[i - 1]) / BigRational::from_integer(BigInt::from(level));
        }
    }
    // Horner on the Newton form: p = dd0 + (x−0)(dd1 + (x−1)(dd2 + …)).
    let mut poly: Vec<BigRational> = vec![dd[n - 1].clone()];
    for i in (0..n - 1).rev() {
        // poly ← poly·(x − i) + dd[i]
        let node = BigRational::from_integer(BigInt::from(i));
        let mut next = vec![BigRational::zero(); poly.len() + 1];
        for (p, c) in poly.iter().enumerate() {
            next[p + 1] += c;
            next[p] -= c * &node;
        }
        next[0] += &dd[i];
        poly = next;
    }
    poly.into_iter()
        .map(|c| {
            debug_assert!(c.is_integer());
            c.to_integer()
        })
        .collect()
}

/// Exact det(xI − (m−1)A) for n ≤ 64.
pub fn char_poly_oracle(h: &Hypergraph) -> Result<CharPoly> {
    let n = h.n();
    if n > MAX_ORDER {
        return Err(Error::SizeCap {
            what: "vertices",
            got: n,
            cap: MAX_ORDER,
        });
    }
    let a = adjacency_matrix(h);
    let m: Vec<Vec<i64>> = (0..n)
        .map(|i| (0..n).map(|j| a.get(i, j) as i64).collect())
        .collect();
    let values: Vec<BigInt> = (0..=n as i64).map(|x| det_shifted(&m, x)).collect();
    Ok(CharPoly {
        coeffs: interpolate(&values),
    })
}

/// Largest root of the oracle polynomial divided by m−1, i.e. λ₁(A).
pub fn oracle_lambda1(h: &Hypergraph) -> Result<f64> {
    let p = char_poly_oracle(h)?;
    p.largest_real_root()
        .map(|r| r / (h.m() - 1) as f64)
        .ok_or_else(|| Error::Parameter("no real root".into()))
}

/// Checks that `x` is within `eps` of a sign change of `p` (exactly).
pub fn brackets_root(p: &CharPoly, x: f64, eps: f64) -> bool {
    let lo = BigRational::from_float(x - eps);
    let hi = BigRational::from_float(x + eps);
    match (lo, hi) {
        (Some(lo), Some(hi)) => {
            let (a, b) = (p.eval(&lo), p.eval(&hi));
            a.is_zero() || b.is_zero() || a.is_negative() != b.is_negative()
        }
        _ => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{loose_cycle, loose_path};
    use crate::spectral::lambda1;

    #[test]
    fn single_edge_is_k3() {
        let h = Hypergraph::new(3, 3, vec![vec![0, 1, 2]]).unwrap();
        assert_eq!(
            char_poly_oracle(&h).unwrap(),
            CharPoly::from_i64(&[-2, -3, 0, 1])
        );
    }

    #[test]
    fn path_and_cycle_roots() {
        let p = loose_path(3, 2).unwrap();
        let cp = char_poly_oracle(&p).unwrap();
        assert_eq!(cp.degree(), 5);
        assert!((oracle_lambda1(&p).unwrap() - lambda1(&p).unwrap()).abs() < 1e-10);
        let c = loose_cycle(3, 3).unwrap();
        let root = char_poly_oracle(&c).unwrap().largest_real_root().unwrap();
        assert!((root - (1.0 + 5f64.sqrt())).abs() < 1e-12);
    }

    #[test]
    fn bareiss_matches_small_determinants() {
        // M = [[0,1],[1,0]]: det(xI−M) = x² − 1.
        let m = vec![vec![0, 1], vec![1, 0]];
        for x in -3..4 {
            assert_eq!(det_shifted(&m, x), BigInt::from(x * x - 1));
        }
    }

    #[test]
    fn bracketing() {
        let p = CharPoly::from_i64(&[-2, 0, 1]);
        assert!(brackets_root(&p, 2f64.sqrt(), 1e-12));
        assert!(!brackets_root(&p, 1.0, 1e-3));
    }
}
