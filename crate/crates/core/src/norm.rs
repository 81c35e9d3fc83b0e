//! Largest singular value of a dense complex matrix by power iteration on
//! the Gram matrix `M* M`.

use num_complex::Complex64;

use crate::error::{Error, Result};

pub const DEFAULT_REL_TOL: f64 = 1e-10;
pub const DEFAULT_MAX_ITER: usize = 10_000;

fn mul_vec(m: &[Complex64], dim: usize, v: &[Complex64]) -> Vec<Complex64> {
    m.chunks_exact(dim)
        .map(|row| row.iter().zip(v).map(|(a, x)| a * x).sum())
        .collect()
}

fn mul_adjoint_vec(m: &[Complex64], dim: usize, w: &[Complex64]) -> Vec<Complex64> {
    let mut out = vec![Complex64::new(0.0, 0.0); dim];
    for (row, wr) in m.chunks_exact(dim).zip(w) {
        for (o, a) in out.iter_mut().zip(row) {
            *o += a.conj() * wr;
        }
    }
    out
}

fn norm2(v: &[Complex64]) -> f64 {
    v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

/// All-ones plus a fixed jitter, normalized. Compressions of convolution
/// operators are block structured and the top singular vector of a block is
/// often exactly orthogonal to the plain all-ones vector; the jitter removes
/// those exact cancellations while keeping runs reproducible.
pub fn start_vector(dim: usize) -> Vec<Complex64> {
    let mut state: u64 = 0x9E37_79B9_7F4A_7C15;
    let mut next = move || {
        // splitmix64
        state = state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^= z >> 31;
        (z >> 11) as f64 / (1u64 << 53) as f64 - 0.5
    };
    let v: Vec<Complex64> = (0..dim)
        .map(|_| Complex64::new(1.0 + next(), next()))
        .collect();
    let n = norm2(&v);
    v.into_iter().map(|z| z / n).collect()
}

/// Estimates `||M||_2` for the `dim × dim` row-major matrix `m`.
///
/// Starts from [`start_vector`] and iterates `v <- M*Mv / |.|` until the
/// eigen-residual `|M*Mv - λv|` drops below `rel_tol · λ`, or `max_iter`
/// steps have run. The Rayleigh quotient `λ = |Mv|^2` never exceeds the true
/// `σ_max^2`, so the estimate is a lower bound up to rounding.
pub fn largest_singular_value(
    m: &[Complex64],
    dim: usize,
    rel_tol: f64,
    max_iter: usize,
) -> Result<f64> {
    if dim == 0 {
        return Err(Error::EmptyMatrix);
    }
    if m.len() != dim * dim {
        return Err(Error::InvalidArgument(format!(
            "matrix has {} entries, expected {dim}x{dim}",
            m.len()
        )));
    }
    if rel_tol.is_nan() || rel_tol <= 0.0 {
        return Err(Error::InvalidArgument("rel_tol must be positive".into()));
    }

    if m.iter().all(|z| z.norm_sqr() == 0.0) {
        return Ok(0.0);
    }
    let mut v = start_vector(dim);
    let mut lambda = 0.0;
    for _ in 0..max_iter {
        let mv = mul_vec(m, dim, &v);
        let z = mul_adjoint_vec(m, dim, &mv);
        lambda = mv.iter().map(|c| c.norm_sqr()).sum::<f64>();
        let zn = norm2(&z);
        if zn == 0.0 {
            return Ok(0.0);
        }
        let residual = z
            .iter()
            .zip(&v)
            .map(|(a, b)| (a - b * lambda).norm_sqr())
            .sum::<f64>()
            .sqrt();
        if residual <= rel_tol * lambda {
            break;
        }
        v = z.into_iter().map(|c| c / zn).collect();
    }
    Ok(lambda.sqrt())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn real(rows: &[&[f64]]) -> Vec<Complex64> {
        rows.iter()
            .flat_map(|r| r.iter().map(|&x| Complex64::new(x, 0.0)))
            .collect()
    }

    fn est(m: &[Complex64], dim: usize) -> f64 {
        largest_singular_value(m, dim, DEFAULT_REL_TOL, DEFAULT_MAX_ITER).unwrap()
    }

    #[test]
    fn identity_shift_zero() {
        let id = real(&[&[1.0, 0.0, 0.0], &[0.0, 1.0, 0.0], &[0.0, 0.0, 1.0]]);
        assert!((est(&id, 3) - 1.0).abs() < 1e-9);
        let shift = real(&[&[0.0, 0.0, 0.0], &[1.0, 0.0, 0.0], &[0.0, 1.0, 0.0]]);
        assert!((est(&shift, 3) - 1.0).abs() < 1e-9);
        assert_eq!(est(&[Complex64::new(0.0, 0.0); 9], 3), 0.0);
    }

    #[test]
    fn top_vector_orthogonal_to_all_ones() {
        // the top right singular vector is (1, -1)/sqrt(2)
        let m = real(&[&[1.0, -1.0], &[0.0, 0.0]]);
        assert!((est(&m, 2) - 2f64.sqrt()).abs() < 1e-9);
    }

    #[test]
    fn complex_diagonal() {
        let m = vec![
            Complex64::new(0.0, 3.0),
            Complex64::new(0.0, 0.0),
            Complex64::new(0.0, 0.0),
            Complex64::new(1.0, 1.0),
        ];
        assert!((est(&m, 2) - 3.0).abs() < 1e-9);
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(largest_singular_value(&[], 0, 1e-10, 10), Err(Error::EmptyMatrix));
        assert!(largest_singular_value(&real(&[&[1.0]]), 1, 0.0, 10).is_err());
        assert!(largest_singular_value(&real(&[&[1.0, 2.0]]), 2, 1e-10, 10).is_err());
    }
}
