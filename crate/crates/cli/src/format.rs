//! Human-readable numbers.

use appellf2::Complex64;

/// `v` rounded to `digits` significant digits, in plain decimal notation
/// for moderate magnitudes and as `1.171e7` otherwise.
pub fn real(v: f64, digits: usize) -> String {
    if v == 0.0 || !v.is_finite() {
        return v.to_string();
    }
    let digits = digits.max(1);
    let sci = format!("{:.*e}", digits - 1, v.abs());
    let (mantissa, exp) = sci.split_once('e').expect("exponent");
    let exp: i32 = exp.parse().expect("integer exponent");
    let sign = if v < 0.0 { "-" } else { "" };
    if !(-5..15).contains(&exp) {
        return format!("{sign}{mantissa}e{exp}");
    }
    let ds: String = mantissa.chars().filter(|c| c.is_ascii_digit()).collect();
    let body = if exp < 0 {
        format!("0.{}{ds}", "0".repeat((-exp - 1) as usize))
    } else {
        let int_len = exp as usize + 1;
        if ds.len() > int_len {
            format!("{}.{}", &ds[..int_len], &ds[int_len..])
        } else {
            format!("{ds}{}", "0".repeat(int_len - ds.len()))
        }
    };
    format!("{sign}{body}")
}

/// `re ± im I`, dropping an imaginary part that is exactly zero.
pub fn complex(v: Complex64, digits: usize) -> String {
    if v.im == 0.0 {
        return real(v.re, digits);
    }
    let sign = if v.im < 0.0 { '-' } else { '+' };
    format!("{} {sign} {} I", real(v.re, digits), real(v.im.abs(), digits))
}
