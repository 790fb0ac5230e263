//! The cyclic sieving polynomial of the hook family and a checker against
//! fixed-point counts of rowmotion powers.

use std::collections::BTreeMap;

use num_complex::Complex;
use num_integer::Integer;
use num_traits::{Float, FloatConst};
use serde::Serialize;

use crate::lattice::OrbitDecomposition;

/// Polynomial with nonnegative integer coefficients, keyed by exponent.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct CspPolynomial {
    pub coefficients: BTreeMap<u64, u64>,
}

impl CspPolynomial {
    pub fn add_term(&mut self, exponent: u64, coefficient: u64) {
        if coefficient > 0 {
            *self.coefficients.entry(exponent).or_insert(0) += coefficient;
        }
    }

    /// `f(1)`.
    pub fn value_at_one(&self) -> u64 {
        self.coefficients.values().sum()
    }

    /// `f(ω^d)` with `ω = e^{2πi/order}`.
    pub fn eval_root_of_unity<T: Float + FloatConst>(&self, d: u64, order: u64) -> Complex<T> {
        let mut acc = Complex::new(T::zero(), T::zero());
        for (&e, &c) in &self.coefficients {
            // reduce before converting so the angle stays small
            let r = ((e as u128 * d as u128) % order as u128) as u64;
            let two = T::one() + T::one();
            let theta = two * T::PI() * T::from(r).unwrap() / T::from(order).unwrap();
            acc = acc + Complex::from_polar(T::one(), theta) * T::from(c).unwrap();
        }
        acc
    }
}

/// `Σ_{j=0}^{ℓ} q^{jℓ} + (g − 1) Σ_{j=0}^{ℓ−1} q^{j(ℓ+1)}`.
pub fn hook_csp_polynomial(a: usize, b: usize) -> CspPolynomial {
    let g = a.gcd(&b) as u64;
    let l = a.lcm(&b) as u64;
    let mut f = CspPolynomial::default();
    for j in 0..=l {
        f.add_term(j * l, 1);
    }
    for j in 0..l {
        f.add_term(j * (l + 1), g - 1);
    }
    f
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CspMismatch {
    pub d: u64,
    pub fixed_points: usize,
    pub value_re: f64,
    pub value_im: f64,
}

/// Compares `|Fix(Row^d)|` with `f(ω^d)` for `d = 0..order`.
pub fn csp_verify(
    orbits: &OrbitDecomposition,
    f: &CspPolynomial,
    order: u64,
    tolerance: f64,
) -> Result<(), CspMismatch> {
    for d in 0..order {
        let fixed = orbits.fixed_points(d as u128);
        let value: Complex<f64> = f.eval_root_of_unity(d, order);
        if (value.re - fixed as f64).abs() >= tolerance || value.im.abs() >= tolerance {
            return Err(CspMismatch {
                d,
                fixed_points: fixed,
                value_re: value.re,
                value_im: value.im,
            });
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::RowmotionMap;

    #[test]
    fn expansions() {
        let f = hook_csp_polynomial(2, 2);
        let want: BTreeMap<u64, u64> = [(0, 2), (2, 1), (3, 1), (4, 1)].into_iter().collect();
        assert_eq!(f.coefficients, want);
        assert_eq!(f.value_at_one(), 5);
        let f = hook_csp_polynomial(2, 3);
        assert_eq!(
            f.coefficients.keys().copied().collect::<Vec<_>>(),
            vec![0, 6, 12, 18, 24, 30, 36]
        );
        assert_eq!(f.value_at_one(), 7);
        let f = hook_csp_polynomial(1, 1);
        assert_eq!(f.coefficients, [(0, 1), (1, 1)].into_iter().collect());
    }

    #[test]
    fn f32_and_f64_agree() {
        let f = hook_csp_polynomial(2, 2);
        for d in 0..6 {
            let x: Complex<f64> = f.eval_root_of_unity(d, 6);
            let y: Complex<f32> = f.eval_root_of_unity(d, 6);
            assert!((x.re - y.re as f64).abs() < 1e-4);
        }
    }

    #[test]
    fn matches_orbits_of_sizes_two_and_three() {
        let map = RowmotionMap::from_images(vec![1, 0, 3, 4, 2]).unwrap();
        let orbits = OrbitDecomposition::from_map(&map);
        let f = hook_csp_polynomial(2, 2);
        assert!(csp_verify(&orbits, &f, 6, 1e-6).is_ok());
        assert_eq!(orbits.fixed_points(3), 3);
        // a wrong polynomial is caught
        let bad = hook_csp_polynomial(1, 4);
        assert!(csp_verify(&orbits, &bad, 6, 1e-6).is_err());
    }
}
