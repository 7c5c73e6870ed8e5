//! Deterministic output formatting: JSON with hand-ordered keys and floats
//! printed to exactly ten significant digits, so identical invocations
//! produce byte-identical bytes.

use num_complex::Complex64;

/// Ten significant digits, scientific notation: deterministic, reparseable,
/// and with headroom over the six decimals of the reference tables.
pub fn fmt_f64(x: f64) -> String {
    format!("{x:.9e}")
}

pub fn esc(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\t' => out.push_str("\\t"),
            c if (c as u32) < 0x20 => out.push_str(&format!("\\u{:04x}", c as u32)),
            c => out.push(c),
        }
    }
    out
}

pub fn json_str(s: &str) -> String {
    format!("\"{}\"", esc(s))
}

pub fn json_complex(z: &Complex64) -> String {
    format!("[{},{}]", fmt_f64(z.re), fmt_f64(z.im))
}

pub fn json_complex_vec(v: &[Complex64]) -> String {
    let items: Vec<String> = v.iter().map(json_complex).collect();
    format!("[{}]", items.join(","))
}

pub fn json_str_array(items: &[String]) -> String {
    let quoted: Vec<String> = items.iter().map(|s| json_str(s)).collect();
    format!("[{}]", quoted.join(","))
}
