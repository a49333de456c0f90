//! Number formatting shared by every command.

use lagsum_core::numkernel::digit_string;
use lagsum_core::Real;
use serde_json::{Number, Value};

pub const SIGNIFICANT: usize = 15;

/// Fifteen significant digits: fixed point for magnitudes in `[1e-3, 1e4)`,
/// otherwise `0.ddd…e±x` with the mantissa in `[0.1, 1)`.
pub fn number<T: Real>(x: T) -> String {
    let f = x.to_f64();
    if f.is_nan() {
        return "nan".into();
    }
    if f.is_infinite() {
        return if f > 0.0 { "inf".into() } else { "-inf".into() };
    }
    let Some((negative, digits, exp)) = x.significant_digits(SIGNIFICANT) else {
        return "0".into();
    };
    let digits = digit_string(&digits);
    let sign = if negative { "-" } else { "" };
    // value = 0.digits × 10^exp, so the magnitude lies in [10^(exp-1), 10^exp).
    if (-2..=4).contains(&exp) {
        if exp <= 0 {
            format!("{sign}0.{}{digits}", "0".repeat((-exp) as usize))
        } else {
            let (int, frac) = digits.split_at(exp as usize);
            format!("{sign}{int}.{frac}")
        }
    } else {
        format!("{sign}0.{digits}e{exp}")
    }
}

/// The same text as a JSON number, or `null` when not finite.
pub fn json_number<T: Real>(x: T) -> Value {
    let text = number(x);
    match serde_json::from_str::<Number>(&text) {
        Ok(n) => Value::Number(n),
        Err(_) => Value::Null,
    }
}

/// Left-aligned first column, right-aligned others.
pub fn aligned(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    let line = |cells: Vec<&str>| -> String {
        let parts: Vec<String> = cells
            .iter()
            .zip(&widths)
            .enumerate()
            .map(|(i, (c, w))| if i == 0 { format!("{c:<w$}") } else { format!("{c:>w$}") })
            .collect();
        parts.join("  ").trim_end().to_string()
    };
    let mut out = line(header.to_vec());
    out.push('\n');
    for row in rows {
        out.push_str(&line(row.iter().map(String::as_str).collect()));
        out.push('\n');
    }
    out
}

pub fn csv(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut out = header.join(",");
    out.push('\n');
    for row in rows {
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}
