//! Number formatting and table output.

use std::fmt::Write as _;

use quadspin::analysis::{SweepRecord, WitnessFit};

/// `x` with 12 significant digits, trailing zeros trimmed, switching to
/// exponent notation outside [1e-4, 1e12), in the manner of C's `%.12g`.
pub fn g12(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return format!("{x}");
    }
    let sci = format!("{x:.11e}");
    let (mantissa, exp) = sci.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    if !(-4..12).contains(&exp) {
        let mantissa = trim_zeros(mantissa);
        let sign = if exp < 0 { '-' } else { '+' };
        return format!("{mantissa}e{sign}{:02}", exp.abs());
    }
    let decimals = (11 - exp).max(0) as usize;
    trim_zeros(&format!("{x:.decimals$}")).to_string()
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

pub const SWEEP_HEADER: &str = "alpha,beta,eta,theta,phi,concurrence,magnetization,e1,e2,e3,e4";
pub const WITNESS_HEADER: &str =
    "alpha,concurrence,magnetization,reduced_magnetization,minus_m_over_1_9";

pub fn sweep_csv(records: &[SweepRecord]) -> String {
    let mut out = String::with_capacity(64 * (records.len() + 1));
    out.push_str(SWEEP_HEADER);
    out.push('\n');
    for r in records {
        let mut fields = vec![
            r.alpha,
            r.beta,
            r.eta,
            r.theta,
            r.phi,
            r.concurrence,
            r.magnetization,
        ];
        fields.extend_from_slice(&r.energies);
        let line: Vec<String> = fields.into_iter().map(g12).collect();
        out.push_str(&line.join(","));
        out.push('\n');
    }
    out
}

pub fn witness_csv(records: &[SweepRecord], fit: &WitnessFit) -> String {
    let mut out = String::new();
    out.push_str(WITNESS_HEADER);
    out.push('\n');
    for r in records {
        let reduced = r.magnetization / fit.magnetization_scale;
        let _ = writeln!(
            out,
            "{},{},{},{},{}",
            g12(r.alpha),
            g12(r.concurrence),
            g12(r.magnetization),
            g12(reduced),
            g12(-reduced / 1.9)
        );
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matches_printf_g() {
        let cases = [
            (0.0, "0"),
            (1.0, "1"),
            (-2.5, "-2.5"),
            (0.1, "0.1"),
            (1.0 / 3.0, "0.333333333333"),
            (20.0, "20"),
            (123456789012.0, "123456789012"),
            (1234567890123.0, "1.23456789012e+12"),
            (1e-5, "1e-05"),
            (1.5e-7, "1.5e-07"),
            (0.000123456789012345, "0.000123456789012"),
            (std::f64::consts::PI, "3.14159265359"),
            (-1.0e-300, "-1e-300"),
            (9.9999999999999e-6, "1e-05"),
            (0.99999999999999, "1"),
        ];
        for (x, expected) in cases {
            assert_eq!(g12(x), expected, "{x:e}");
        }
    }

    #[test]
    fn round_trips_to_twelve_digits() {
        for x in [0.2327013459, 3.0e-9, 7.77e5, -0.004] {
            let back: f64 = g12(x).parse().unwrap();
            assert!((back - x).abs() <= 1e-11 * x.abs());
        }
    }
}
