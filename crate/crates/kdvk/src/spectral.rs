//! Periodic Fourier grid, field container, spectral differentiation,
//! dispersion symbol and dealiased products.
//!
//! Normalization: the forward transform carries the dx weight,
//! `u_hat(xi_k) = dx * sum_j u(x_j) e^{-i xi_k x_j}`, so stored coefficients
//! approximate the line integral `int u e^{-i x xi} dx` and discrete norms
//! are Riemann sums `sum |u_hat|^2 dxi` over the frequency grid.

use std::sync::Arc;

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::fft;
use crate::scalar::Real;

/// Periodic spatial grid on `[0, L)` with `n` equispaced points.
#[derive(Debug)]
pub struct GridSpec<T: Real> {
    n_points: usize,
    period: T,
    dx: T,
    wavenumbers: Vec<T>,
}

impl<T: Real> PartialEq for GridSpec<T> {
    fn eq(&self, other: &Self) -> bool {
        self.n_points == other.n_points && self.period == other.period
    }
}

impl<T: Real> GridSpec<T> {
    /// Build a grid with `n` points (even power of two, at least 8) on `[0, L)`.
    pub fn new(n: usize, period: T) -> Result<Arc<Self>> {
        if n < 8 || !n.is_power_of_two() {
            return Err(Error::InvalidGrid(format!(
                "n_points must be a power of two >= 8, got {n}"
            )));
        }
        if !(period > T::zero()) || !period.is_finite() {
            return Err(Error::InvalidGrid("period must be positive and finite".into()));
        }
        Ok(Arc::new(Self::new_unchecked(n, period)))
    }

    /// Internal constructor for padded work grids (any even size).
    pub(crate) fn new_unchecked(n: usize, period: T) -> Self {
        debug_assert!(n >= 4 && n % 2 == 0);
        let dx = period / T::of(n as f64);
        let dxi = T::of(2.0) * T::PI() / period;
        let wavenumbers = (0..n)
            .map(|j| {
                let k = if j <= n / 2 { j as f64 } else { j as f64 - n as f64 };
                dxi * T::of(k)
            })
            .collect();
        Self { n_points: n, period, dx, wavenumbers }
    }

    pub fn n_points(&self) -> usize {
        self.n_points
    }

    pub fn period(&self) -> T {
        self.period
    }

    pub fn dx(&self) -> T {
        self.dx
    }

    /// Frequency spacing 2π/L.
    pub fn dxi(&self) -> T {
        T::of(2.0) * T::PI() / self.period
    }

    /// Wavenumbers in FFT bin order: 0, dxi, ..., xi_max, -xi_max+dxi, ..., -dxi.
    pub fn wavenumbers(&self) -> &[T] {
        &self.wavenumbers
    }

    /// Largest resolved wavenumber (the Nyquist mode, bin n/2).
    pub fn xi_max(&self) -> T {
        self.wavenumbers[self.n_points / 2]
    }

    /// Physical sample locations x_j = j dx.
    pub fn points(&self) -> impl Iterator<Item = T> + '_ {
        (0..self.n_points).map(move |j| self.dx * T::of(j as f64))
    }

    /// Bin index for integer mode number k in (-n/2, n/2].
    pub(crate) fn bin(&self, k: isize) -> usize {
        let n = self.n_points as isize;
        debug_assert!(k > -n / 2 && k <= n / 2);
        if k >= 0 { k as usize } else { (k + n) as usize }
    }
}

/// Coefficients of the damped fifth-order evolution equation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EquationParams<T: Real> {
    pub alpha: T,
    pub beta: T,
    pub mu: T,
    pub lambda: T,
}

impl<T: Real> EquationParams<T> {
    pub fn new(alpha: T, beta: T, mu: T, lambda: T) -> Result<Self> {
        if alpha == T::zero() || !alpha.is_finite() {
            return Err(Error::InvalidParameter(
                "equation coefficient alpha must be nonzero and finite".into(),
            ));
        }
        for (name, v) in [("beta", beta), ("mu", mu), ("lambda", lambda)] {
            if !v.is_finite() {
                return Err(Error::InvalidParameter(format!("coefficient {name} must be finite")));
            }
        }
        Ok(Self { alpha, beta, mu, lambda })
    }
}

/// Dispersion symbol of the linear part: phi(xi) = alpha xi^5 - beta xi^3.
pub fn dispersion_symbol<T: Real>(xi: T, params: &EquationParams<T>) -> T {
    params.alpha * xi.powi(5) - params.beta * xi.powi(3)
}

/// Which representation a field was constructed from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Repr {
    Physical,
    Spectral,
}

/// A real periodic function held as synchronized physical samples and
/// Fourier coefficients.
#[derive(Debug, Clone)]
pub struct Field<T: Real> {
    grid: Arc<GridSpec<T>>,
    physical: Vec<T>,
    spectral: Vec<Complex<T>>,
    authoritative: Repr,
}

impl<T: Real> Field<T> {
    pub fn from_physical(grid: Arc<GridSpec<T>>, samples: Vec<T>) -> Result<Self> {
        if samples.len() != grid.n_points() {
            return Err(Error::MalformedField(format!(
                "expected {} samples, got {}",
                grid.n_points(),
                samples.len()
            )));
        }
        let spectral = forward_transform(&grid, &samples);
        Ok(Self { grid, physical: samples, spectral, authoritative: Repr::Physical })
    }

    /// Build from coefficients; fails if they do not describe a real field.
    pub fn from_spectral(grid: Arc<GridSpec<T>>, coeffs: Vec<Complex<T>>) -> Result<Self> {
        if coeffs.len() != grid.n_points() {
            return Err(Error::MalformedField(format!(
                "expected {} coefficients, got {}",
                grid.n_points(),
                coeffs.len()
            )));
        }
        let complex_phys = inverse_transform(&grid, &coeffs);
        let scale = complex_phys.iter().map(|c| c.norm()).fold(T::zero(), T::max);
        let imag = complex_phys.iter().map(|c| c.im.abs()).fold(T::zero(), T::max);
        if imag > T::of(1e-8) * scale.max(T::of(1e-300)) && scale > T::zero() {
            return Err(Error::MalformedField(
                "spectral coefficients lack conjugate symmetry (non-real field)".into(),
            ));
        }
        let physical = complex_phys.iter().map(|c| c.re).collect();
        Ok(Self { grid, physical, spectral: coeffs, authoritative: Repr::Spectral })
    }

    /// Internal: reconstruct from coefficients known (up to roundoff) to be
    /// conjugate-symmetric; the imaginary residue is dropped.
    pub(crate) fn from_spectral_trusted(grid: Arc<GridSpec<T>>, coeffs: Vec<Complex<T>>) -> Self {
        debug_assert_eq!(coeffs.len(), grid.n_points());
        let physical = inverse_transform(&grid, &coeffs).iter().map(|c| c.re).collect();
        Self { grid, physical, spectral: coeffs, authoritative: Repr::Spectral }
    }

    pub fn zero(grid: Arc<GridSpec<T>>) -> Self {
        let n = grid.n_points();
        Self {
            grid,
            physical: vec![T::zero(); n],
            spectral: vec![Complex::new(T::zero(), T::zero()); n],
            authoritative: Repr::Physical,
        }
    }

    /// Sample a closed-form profile on the grid.
    pub fn from_fn(grid: Arc<GridSpec<T>>, f: impl Fn(T) -> T) -> Self {
        let samples: Vec<T> = grid.points().map(f).collect();
        Self::from_physical(grid, samples).expect("length matches by construction")
    }

    pub fn grid(&self) -> &Arc<GridSpec<T>> {
        &self.grid
    }

    pub fn physical(&self) -> &[T] {
        &self.physical
    }

    pub fn spectral(&self) -> &[Complex<T>] {
        &self.spectral
    }

    pub fn authoritative(&self) -> Repr {
        self.authoritative
    }

    pub fn is_finite(&self) -> bool {
        self.physical.iter().all(|v| v.is_finite())
    }

    pub fn max_abs(&self) -> T {
        self.physical.iter().map(|v| v.abs()).fold(T::zero(), T::max)
    }

    /// L2 norm in the frequency measure: sqrt(sum |u_hat|^2 dxi).
    pub fn l2_norm(&self) -> T {
        let dxi = self.grid.dxi();
        (self.spectral.iter().map(|c| c.norm_sqr()).sum::<T>() * dxi).sqrt()
    }

    /// Inner product in the same measure: sum Re(f_hat conj(g_hat)) dxi.
    pub fn inner_product(&self, other: &Self) -> Result<T> {
        check_same_grid(self, other)?;
        let dxi = self.grid.dxi();
        Ok(self
            .spectral
            .iter()
            .zip(&other.spectral)
            .map(|(a, b)| (a * b.conj()).re)
            .sum::<T>()
            * dxi)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip_linear(other, |a, b| a + b, |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.zip_linear(other, |a, b| a - b, |a, b| a - b)
    }

    pub fn scale(&self, c: T) -> Self {
        Self {
            grid: self.grid.clone(),
            physical: self.physical.iter().map(|&v| v * c).collect(),
            spectral: self.spectral.iter().map(|&v| v * c).collect(),
            authoritative: self.authoritative,
        }
    }

    fn zip_linear(
        &self,
        other: &Self,
        fp: impl Fn(T, T) -> T,
        fs: impl Fn(Complex<T>, Complex<T>) -> Complex<T>,
    ) -> Result<Self> {
        check_same_grid(self, other)?;
        Ok(Self {
            grid: self.grid.clone(),
            physical: self.physical.iter().zip(&other.physical).map(|(&a, &b)| fp(a, b)).collect(),
            spectral: self.spectral.iter().zip(&other.spectral).map(|(&a, &b)| fs(a, b)).collect(),
            authoritative: self.authoritative,
        })
    }

    /// Apply a frequency multiplier m(xi) and rebuild the physical samples.
    pub(crate) fn spectral_map(&self, m: impl Fn(T) -> Complex<T>) -> Self {
        let coeffs = self
            .spectral
            .iter()
            .zip(self.grid.wavenumbers())
            .map(|(&c, &xi)| c * m(xi))
            .collect();
        Self::from_spectral_trusted(self.grid.clone(), coeffs)
    }
}

pub(crate) fn check_same_grid<T: Real>(a: &Field<T>, b: &Field<T>) -> Result<()> {
    if a.grid.as_ref() != b.grid.as_ref() {
        return Err(Error::GridMismatch(a.grid.n_points(), b.grid.n_points()));
    }
    Ok(())
}

fn forward_transform<T: Real>(grid: &GridSpec<T>, samples: &[T]) -> Vec<Complex<T>> {
    let mut buf: Vec<Complex<T>> =
        samples.iter().map(|&v| Complex::new(v, T::zero())).collect();
    fft::forward(&mut buf);
    let dx = grid.dx();
    for c in &mut buf {
        *c = *c * dx;
    }
    buf
}

fn inverse_transform<T: Real>(grid: &GridSpec<T>, coeffs: &[Complex<T>]) -> Vec<Complex<T>> {
    let mut buf = coeffs.to_vec();
    fft::inverse(&mut buf);
    let inv_l = T::one() / grid.period();
    for c in &mut buf {
        *c = *c * inv_l;
    }
    buf
}

/// Recompute the spectral side from the physical samples.
pub fn transform_forward<T: Real>(f: &Field<T>) -> Field<T> {
    let spectral = forward_transform(f.grid(), f.physical());
    Field {
        grid: f.grid.clone(),
        physical: f.physical.clone(),
        spectral,
        authoritative: Repr::Spectral,
    }
}

/// Recompute the physical samples from the spectral side.
pub fn transform_inverse<T: Real>(f: &Field<T>) -> Field<T> {
    let physical = inverse_transform(f.grid(), f.spectral()).iter().map(|c| c.re).collect();
    Field {
        grid: f.grid.clone(),
        physical,
        spectral: f.spectral.clone(),
        authoritative: Repr::Physical,
    }
}

const MAX_DERIVATIVE_ORDER: usize = 6;

/// Spectral derivative: multiply by (i xi)^order. The Nyquist mode is zeroed
/// for odd orders so real fields stay real.
pub fn spatial_derivative<T: Real>(f: &Field<T>, order: usize) -> Result<Field<T>> {
    if order > MAX_DERIVATIVE_ORDER {
        return Err(Error::DerivativeOrder(order, MAX_DERIVATIVE_ORDER));
    }
    if order == 0 {
        return Ok(f.clone());
    }
    let nyquist = f.grid().xi_max();
    let odd = order % 2 == 1;
    Ok(f.spectral_map(|xi| {
        if odd && xi == nyquist {
            return Complex::new(T::zero(), T::zero());
        }
        Complex::new(T::zero(), xi).powu(order as u32)
    }))
}

/// Dealiased pointwise product of two fields sharing a grid.
///
/// `degree` is the total polynomial degree of the nonlinearity the product
/// feeds (2 or 3) and selects the padding factor: 3/2 for quadratic terms,
/// 2 for cubic ones. The padded product is exact on the retained band.
pub fn dealias_product<T: Real>(f: &Field<T>, g: &Field<T>, degree: u8) -> Result<Field<T>> {
    check_same_grid(f, g)?;
    let pad = padded_size(f.grid().n_points(), degree)?;
    let fine = Arc::new(GridSpec::new_unchecked(pad, f.grid().period()));
    let ff = pad_to(f, &fine);
    let gf = pad_to(g, &fine);
    let prod: Vec<T> = ff.iter().zip(&gf).map(|(&a, &b)| a * b).collect();
    let coeffs = forward_transform(&fine, &prod);
    let truncated = truncate_spectrum(&coeffs, &fine, f.grid());
    Ok(Field::from_spectral_trusted(f.grid().clone(), truncated))
}

/// Dealiased cube of a field (factor-2 padded grid).
pub fn dealias_cube<T: Real>(f: &Field<T>) -> Result<Field<T>> {
    let pad = padded_size(f.grid().n_points(), 3)?;
    let fine = Arc::new(GridSpec::new_unchecked(pad, f.grid().period()));
    let ff = pad_to(f, &fine);
    let cube: Vec<T> = ff.iter().map(|&a| a * a * a).collect();
    let coeffs = forward_transform(&fine, &cube);
    let truncated = truncate_spectrum(&coeffs, &fine, f.grid());
    Ok(Field::from_spectral_trusted(f.grid().clone(), truncated))
}

fn padded_size(n: usize, degree: u8) -> Result<usize> {
    match degree {
        2 => Ok(n + n / 2),
        3 => Ok(2 * n),
        _ => Err(Error::InvalidParameter(format!("dealias degree must be 2 or 3, got {degree}"))),
    }
}

/// Physical samples of `f` on the finer grid (spectral zero-padding).
fn pad_to<T: Real>(f: &Field<T>, fine: &Arc<GridSpec<T>>) -> Vec<T> {
    let n = f.grid().n_points();
    let m = fine.n_points();
    let mut coeffs = vec![Complex::new(T::zero(), T::zero()); m];
    let half = T::of(0.5);
    for k in (-(n as isize) / 2 + 1)..=(n as isize / 2) {
        let c = f.spectral()[f.grid().bin(k)];
        if k == n as isize / 2 {
            // Split the unpaired Nyquist coefficient across +-n/2 so the
            // padded signal is real and truncation round-trips exactly.
            coeffs[fine.bin(k)] = c * half;
            coeffs[fine.bin(-k)] = coeffs[fine.bin(-k)] + c.conj() * half;
        } else {
            coeffs[fine.bin(k)] = c;
        }
    }
    inverse_transform(fine, &coeffs).iter().map(|c| c.re).collect()
}

fn truncate_spectrum<T: Real>(
    fine_coeffs: &[Complex<T>],
    fine: &GridSpec<T>,
    coarse: &GridSpec<T>,
) -> Vec<Complex<T>> {
    let n = coarse.n_points();
    let mut out = vec![Complex::new(T::zero(), T::zero()); n];
    for k in (-(n as isize) / 2 + 1)..=(n as isize / 2) {
        out[coarse.bin(k)] = if k == n as isize / 2 {
            fine_coeffs[fine.bin(k)] + fine_coeffs[fine.bin(-k)].conj()
        } else {
            fine_coeffs[fine.bin(k)]
        };
    }
    out
}
