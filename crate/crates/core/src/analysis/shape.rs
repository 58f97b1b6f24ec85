//! Qualitative shape tests on sampled curves.

/// Rises (up to `tol`) to a single interior maximum, then falls (up to
/// `tol`).
pub fn is_unimodal(values: &[f64], tol: f64) -> bool {
    let Some(peak) = argmax(values) else {
        return false;
    };
    if peak == 0 || peak == values.len() - 1 {
        return false;
    }
    values[..=peak].windows(2).all(|w| w[1] >= w[0] - tol)
        && values[peak..].windows(2).all(|w| w[1] <= w[0] + tol)
}

/// Exactly zero up to some index, then non-decreasing (up to `tol`), and
/// flattening out: the last tenth of the samples moves by less than
/// `plateau_tol` relative to the final value.
pub fn is_onset_then_plateau(values: &[f64], tol: f64, plateau_tol: f64) -> bool {
    let Some(onset) = values.iter().position(|&v| v != 0.0) else {
        return false;
    };
    if onset == 0 {
        return false;
    }
    let rising = values[onset..].windows(2).all(|w| w[1] >= w[0] - tol);
    let last = values[values.len() - 1];
    let tail = values[values.len() - 1 - values.len() / 10];
    rising && last > 0.0 && (last - tail).abs() <= plateau_tol * last
}

fn argmax(values: &[f64]) -> Option<usize> {
    values
        .iter()
        .enumerate()
        .fold(None, |best: Option<(usize, f64)>, (i, &v)| match best {
            Some((_, b)) if b >= v => best,
            _ => Some((i, v)),
        })
        .map(|(i, _)| i)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::concurrence_at;
    use crate::hamiltonian::{HamiltonianParams, QuadrupoleModel};
    use crate::spin::Spin;

    #[test]
    fn synthetic_shapes() {
        assert!(is_unimodal(&[0.0, 1.0, 2.0, 1.0, 0.5], 0.0));
        assert!(!is_unimodal(&[0.0, 2.0, 1.0, 2.0, 0.5], 0.0));
        assert!(!is_unimodal(&[0.0, 1.0, 2.0], 0.0));
        assert!(is_unimodal(&[0.0, 1.0, 2.0, 2.0 + 1e-10, 1.0], 1e-9));
        let plateau: Vec<f64> = (0..40)
            .map(|i| {
                if i < 5 {
                    0.0
                } else {
                    1.0 - (-(i as f64)).exp()
                }
            })
            .collect();
        assert!(is_onset_then_plateau(&plateau, 0.0, 1e-3));
        assert!(!is_onset_then_plateau(&plateau[5..], 0.0, 1e-3));
        assert!(!is_onset_then_plateau(&[0.0; 10], 0.0, 1e-3));
    }

    fn model() -> QuadrupoleModel {
        QuadrupoleModel::new(Spin::THREE_HALVES)
    }

    #[test]
    fn concurrence_over_field_is_unimodal() {
        let m = model();
        for beta in [2.0, 6.0, 8.0, 12.0] {
            let curve: Vec<f64> = (0..200)
                .map(|k| {
                    let alpha = 30.0 * k as f64 / 199.0;
                    concurrence_at(
                        &m,
                        &HamiltonianParams::from_values(alpha, beta, 0.14, 0.94, 0.0).unwrap(),
                    )
                    .unwrap()
                })
                .collect();
            assert_eq!(curve[0], 0.0);
            assert!(is_unimodal(&curve, 1e-9), "beta {beta}");
        }
    }

    #[test]
    fn concurrence_over_inverse_temperature_plateaus() {
        let m = model();
        for ratio in [0.5, 1.0, 2.0] {
            let curve: Vec<f64> = (0..200)
                .map(|k| {
                    let beta = 0.01 + (20.0 - 0.01) * k as f64 / 199.0;
                    concurrence_at(
                        &m,
                        &HamiltonianParams::from_values(ratio * beta, beta, 0.14, 0.94, 0.0)
                            .unwrap(),
                    )
                    .unwrap()
                })
                .collect();
            assert!(
                is_onset_then_plateau(&curve, 1e-7, 1e-3),
                "ratio {ratio}: {:?}",
                &curve[180..]
            );
        }
    }
}
