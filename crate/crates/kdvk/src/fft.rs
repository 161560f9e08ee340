//! Thin wrapper over rustfft with a process-wide plan cache.
//!
//! Transforms here are raw (unnormalized) DFTs; the physical normalization
//! (dx on the forward side, 1/L on the inverse side) lives in `spectral`.

use std::any::{Any, TypeId};
use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_complex::Complex;
use rustfft::{Fft, FftPlanner};

use crate::scalar::Real;

type PlanKey = (TypeId, usize, bool);

static PLANS: OnceLock<Mutex<HashMap<PlanKey, Box<dyn Any + Send + Sync>>>> = OnceLock::new();

fn plan<T: Real>(len: usize, inverse: bool) -> Arc<dyn Fft<T>> {
    let cache = PLANS.get_or_init(|| Mutex::new(HashMap::new()));
    let key = (TypeId::of::<T>(), len, inverse);
    let mut guard = cache.lock().expect("fft plan cache poisoned");
    let entry = guard.entry(key).or_insert_with(|| {
        let mut planner = FftPlanner::<T>::new();
        let plan = if inverse {
            planner.plan_fft_inverse(len)
        } else {
            planner.plan_fft_forward(len)
        };
        Box::new(plan)
    });
    entry
        .downcast_ref::<Arc<dyn Fft<T>>>()
        .expect("fft plan type")
        .clone()
}

/// In-place unnormalized forward DFT: X_k = sum_j x_j e^{-2πi jk/n}.
pub fn forward<T: Real>(data: &mut [Complex<T>]) {
    plan::<T>(data.len(), false).process(data);
}

/// In-place unnormalized inverse DFT: x_j = sum_k X_k e^{+2πi jk/n}.
pub fn inverse<T: Real>(data: &mut [Complex<T>]) {
    plan::<T>(data.len(), true).process(data);
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip_scales_by_n() {
        let n = 16;
        let orig: Vec<Complex<f64>> = (0..n)
            .map(|j| Complex::new((j as f64).sin(), (j as f64 * 0.3).cos()))
            .collect();
        let mut buf = orig.clone();
        forward(&mut buf);
        inverse(&mut buf);
        for (a, b) in buf.iter().zip(&orig) {
            assert!((a - b * n as f64).norm() < 1e-12);
        }
    }

    #[test]
    fn works_for_f32() {
        let mut buf: Vec<Complex<f32>> = vec![Complex::new(1.0, 0.0); 8];
        forward(&mut buf);
        assert!((buf[0].re - 8.0).abs() < 1e-5);
        assert!(buf[1].norm() < 1e-5);
    }
}
