//! Numeric formatting for the CSV outputs: six significant digits, half to
//! even, scientific notation once |v| leaves [1e-3, 1e5).

/// Format to 6 significant digits, matching the tables' mixed fixed/scientific
/// style.
pub fn format_six(value: f64) -> String {
    if value == 0.0 {
        return "0.00000".to_string();
    }
    if !value.is_finite() {
        return value.to_string();
    }
    let magnitude = value.abs();
    if magnitude >= 1e5 || magnitude < 1e-3 {
        return format!("{value:.5e}");
    }
    // re-check the magnitude after rounding (e.g. 99999.96 -> 1e5)
    let rounded: f64 = format!("{value:.5e}").parse().expect("formatter output parses");
    let mag = rounded.abs();
    if mag >= 1e5 || mag < 1e-3 {
        return format!("{rounded:.5e}");
    }
    let decimals = 5 - mag.log10().floor() as i32;
    format!("{rounded:.*}", decimals.max(0) as usize)
}
