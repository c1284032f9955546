/// Fixed-point rendering with the given number of significant digits and
/// trailing zeros trimmed, so exact values print exactly (`10`, `0.75`)
/// and everything else gets a stable, readable width.
pub fn significant(x: f64, digits: u32) -> String {
    if !x.is_finite() {
        return format!("{x}");
    }
    if x == 0.0 {
        return "0".to_string();
    }
    let magnitude = x.abs().log10().floor() as i64;
    let decimals = (digits as i64 - 1 - magnitude).clamp(0, 17) as usize;
    let rendered = format!("{x:.decimals$}");
    if rendered.contains('.') {
        rendered
            .trim_end_matches('0')
            .trim_end_matches('.')
            .to_string()
    } else {
        rendered
    }
}

/// House style: twelve significant digits.
pub fn value(x: f64) -> String {
    significant(x, 12)
}
