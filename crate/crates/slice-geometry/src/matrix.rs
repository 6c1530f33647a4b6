use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::error::SliceError;

/// Dense complex matrix used throughout the geometry layer.
pub type CMatrix = DMatrix<Complex64>;
/// Dense complex column vector.
pub type CVector = DVector<Complex64>;

/// A random matrix with independent standard complex Gaussian entries
/// scaled by `scale`.
pub fn random_complex_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize, scale: f64) -> CMatrix {
    CMatrix::from_fn(rows, cols, |_, _| {
        Complex64::new(standard_normal(rng), standard_normal(rng)) * scale
    })
}

/// A random vector with independent standard complex Gaussian entries.
pub fn random_complex_vector(rng: &mut ChaCha8Rng, len: usize, scale: f64) -> CVector {
    CVector::from_fn(len, |_, _| {
        Complex64::new(standard_normal(rng), standard_normal(rng)) * scale
    })
}

/// Box–Muller standard normal; avoids pulling in a distributions crate for
/// one primitive.
pub(crate) fn standard_normal(rng: &mut ChaCha8Rng) -> f64 {
    let u1: f64 = rng.gen_range(f64::MIN_POSITIVE..1.0);
    let u2: f64 = rng.gen_range(0.0..1.0);
    (-2.0 * u1.ln()).sqrt() * (std::f64::consts::TAU * u2).cos()
}

/// Serializes a matrix as row-major `[re, im]` pairs with shape metadata.
pub fn matrix_to_json(m: &CMatrix) -> Value {
    let entries: Vec<Value> = m
        .row_iter()
        .flat_map(|row| {
            row.iter()
                .map(|z| json!([z.re, z.im]))
                .collect::<Vec<_>>()
        })
        .collect();
    json!({ "rows": m.nrows(), "cols": m.ncols(), "entries": entries })
}

/// Parses the row-major `[re, im]` representation produced by
/// [`matrix_to_json`].
pub fn matrix_from_json(value: &Value) -> Result<CMatrix, SliceError> {
    let rows = value["rows"]
        .as_u64()
        .ok_or_else(|| SliceError::InvalidInput("missing 'rows'".into()))? as usize;
    let cols = value["cols"]
        .as_u64()
        .ok_or_else(|| SliceError::InvalidInput("missing 'cols'".into()))? as usize;
    let entries = value["entries"]
        .as_array()
        .ok_or_else(|| SliceError::InvalidInput("missing 'entries'".into()))?;
    if entries.len() != rows * cols {
        return Err(SliceError::InvalidInput(format!(
            "expected {} entries, found {}",
            rows * cols,
            entries.len()
        )));
    }
    let mut data = Vec::with_capacity(rows * cols);
    for e in entries {
        let pair = e
            .as_array()
            .filter(|p| p.len() == 2)
            .ok_or_else(|| SliceError::InvalidInput("entry is not an [re, im] pair".into()))?;
        let re = pair[0]
            .as_f64()
            .ok_or_else(|| SliceError::InvalidInput("non-numeric entry".into()))?;
        let im = pair[1]
            .as_f64()
            .ok_or_else(|| SliceError::InvalidInput("non-numeric entry".into()))?;
        if !re.is_finite() || !im.is_finite() {
            return Err(SliceError::InvalidInput("non-finite entry".into()));
        }
        data.push(Complex64::new(re, im));
    }
    Ok(CMatrix::from_row_slice(rows, cols, &data))
}

/// True when every entry is finite.
pub(crate) fn all_finite(m: &CMatrix) -> bool {
    m.iter().all(|z| z.re.is_finite() && z.im.is_finite())
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    #[test]
    fn json_round_trip() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let m = random_complex_matrix(&mut rng, 3, 2, 1.0);
        let back = matrix_from_json(&matrix_to_json(&m)).unwrap();
        assert_eq!(back.nrows(), 3);
        assert_eq!(back.ncols(), 2);
        assert!((&m - &back).norm() < 1e-15);
    }

    #[test]
    fn json_rejects_bad_shapes() {
        let v = json!({"rows": 2, "cols": 2, "entries": [[0.0, 0.0]]});
        assert!(matrix_from_json(&v).is_err());
        let v = json!({"rows": 1, "cols": 1, "entries": [[f64::NAN, 0.0]]});
        assert!(matrix_from_json(&v).is_err());
    }

    #[test]
    fn normal_samples_have_plausible_moments() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let samples: Vec<f64> = (0..20000).map(|_| standard_normal(&mut rng)).collect();
        let mean = samples.iter().sum::<f64>() / samples.len() as f64;
        let var = samples.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / samples.len() as f64;
        assert!(mean.abs() < 0.05, "mean {mean}");
        assert!((var - 1.0).abs() < 0.05, "variance {var}");
    }
}
