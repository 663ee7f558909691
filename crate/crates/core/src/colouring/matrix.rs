//! Minimal dense complex matrices for projector certification.
//!
//! Dimensions here are tiny (d <= 2n), so a row-major `Vec<Complex64>` with
//! straightforward O(d^3) products is all that is needed.

use num_complex::Complex64;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;

#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMatrix {
    dim: usize,
    data: Vec<Complex64>,
}

impl ComplexMatrix {
    pub fn zeros(dim: usize) -> Self {
        Self {
            dim,
            data: vec![Complex64::ZERO; dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.data[i * dim + i] = Complex64::ONE;
        }
        m
    }

    pub fn from_fn(dim: usize, mut entry: impl FnMut(usize, usize) -> Complex64) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            for j in 0..dim {
                m.data[i * dim + j] = entry(i, j);
            }
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.data[i * self.dim + j]
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim);
        let d = self.dim;
        let mut out = Self::zeros(d);
        for i in 0..d {
            for k in 0..d {
                let a = self.data[i * d + k];
                if a == Complex64::ZERO {
                    continue;
                }
                for j in 0..d {
                    out.data[i * d + j] += a * other.data[k * d + j];
                }
            }
        }
        out
    }

    pub fn add_assign(&mut self, other: &Self) {
        assert_eq!(self.dim, other.dim);
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            *a += b;
        }
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.dim).map(|i| self.data[i * self.dim + i]).sum()
    }

    /// Largest entry modulus.
    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// Largest entry modulus of self - other.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        assert_eq!(self.dim, other.dim);
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    /// max_{i,j} |a_ij - conj(a_ji)|.
    pub fn hermitian_residual(&self) -> f64 {
        let d = self.dim;
        let mut worst: f64 = 0.0;
        for i in 0..d {
            for j in 0..d {
                let r = (self.data[i * d + j] - self.data[j * d + i].conj()).norm();
                worst = worst.max(r);
            }
        }
        worst
    }

    /// Sum of squared entry moduli (= sum of squared singular values).
    pub fn frobenius_sq(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum()
    }

    fn apply(&self, v: &[Complex64]) -> Vec<Complex64> {
        let d = self.dim;
        (0..d)
            .map(|i| (0..d).map(|j| self.data[i * d + j] * v[j]).sum())
            .collect()
    }

    /// (sigma_1, sigma_2) of a Hermitian matrix by power iteration with
    /// one deflation step. For a projector this certifies rank one:
    /// sigma_1 near 1 and sigma_2 near 0.
    pub fn top_singular_pair(&self) -> (f64, f64) {
        let (lambda_1, v1) = self.dominant_eigenpair(0x746f_7073_7664);
        // deflate the dominant eigenpair and measure what is left
        let d = self.dim;
        let deflated = ComplexMatrix::from_fn(d, |i, j| {
            self.data[i * d + j] - lambda_1 * v1[i] * v1[j].conj()
        });
        let (lambda_2, _) = deflated.dominant_eigenpair(0x646f_7773_7664);
        (lambda_1.abs(), lambda_2.abs())
    }

    /// Largest-|eigenvalue| pair of a Hermitian matrix: 60 power-iteration
    /// steps from a seeded random start, Rayleigh quotient at the end.
    fn dominant_eigenpair(&self, seed: u64) -> (f64, Vec<Complex64>) {
        let d = self.dim;
        let mut rng = ChaCha12Rng::seed_from_u64(seed);
        let mut v: Vec<Complex64> = (0..d)
            .map(|_| Complex64::new(rng.random::<f64>() - 0.5, rng.random::<f64>() - 0.5))
            .collect();
        let norm_of = |u: &[Complex64]| u.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        let start_norm = norm_of(&v);
        for z in &mut v {
            *z /= start_norm;
        }
        for _ in 0..60 {
            let w = self.apply(&v);
            let norm = norm_of(&w);
            if norm < 1e-280 {
                // numerically the zero matrix in this direction
                return (0.0, v);
            }
            v = w.into_iter().map(|z| z / norm).collect();
        }
        let av = self.apply(&v);
        let rayleigh: Complex64 = v.iter().zip(&av).map(|(x, y)| x.conj() * y).sum();
        (rayleigh.re, v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_behaves() {
        let id = ComplexMatrix::identity(4);
        assert_eq!(id.trace(), Complex64::new(4.0, 0.0));
        assert_eq!(id.mul(&id), id);
        assert_eq!(id.hermitian_residual(), 0.0);
        assert_eq!(id.max_abs(), 1.0);
    }

    #[test]
    fn product_is_matrix_product() {
        // [[0,1],[0,0]] * [[0,0],[1,0]] = [[1,0],[0,0]]
        let a = ComplexMatrix::from_fn(2, |i, j| {
            if (i, j) == (0, 1) {
                Complex64::ONE
            } else {
                Complex64::ZERO
            }
        });
        let b = ComplexMatrix::from_fn(2, |i, j| {
            if (i, j) == (1, 0) {
                Complex64::ONE
            } else {
                Complex64::ZERO
            }
        });
        let ab = a.mul(&b);
        assert_eq!(ab.get(0, 0), Complex64::ONE);
        assert_eq!(ab.get(1, 1), Complex64::ZERO);
    }

    #[test]
    fn singular_pair_of_rank_one_projector() {
        // P = v v* / ||v||^2 for v = (1, i, -1)
        let v = [
            Complex64::new(1.0, 0.0),
            Complex64::new(0.0, 1.0),
            Complex64::new(-1.0, 0.0),
        ];
        let p = ComplexMatrix::from_fn(3, |i, j| v[i] * v[j].conj() / 3.0);
        let (sigma1, sigma2) = p.top_singular_pair();
        assert!((sigma1 - 1.0).abs() < 1e-12, "sigma1 = {sigma1}");
        assert!(sigma2 < 1e-14, "sigma2 = {sigma2}");
    }

    #[test]
    fn singular_pair_of_identity() {
        let (sigma1, sigma2) = ComplexMatrix::identity(3).top_singular_pair();
        assert!((sigma1 - 1.0).abs() < 1e-12);
        // after deflating one unit eigenpair, two unit singular values remain
        assert!((sigma2 - 1.0).abs() < 1e-12);
    }

    #[test]
    fn singular_pair_of_zero() {
        let (sigma1, sigma2) = ComplexMatrix::zeros(3).top_singular_pair();
        assert_eq!((sigma1, sigma2), (0.0, 0.0));
    }
}
