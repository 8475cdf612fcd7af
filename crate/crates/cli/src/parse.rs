//! Parsing of complex literals ("a+bi") and grid ranges ("start:stop:count").

use num_complex::Complex64;

pub fn parse_complex(text: &str) -> Result<Complex64, String> {
    let t: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if t.is_empty() {
        return Err("empty number".into());
    }
    let bad = || format!("cannot parse '{text}' as a complex number (expected a, bi or a+bi)");
    let z = match t.strip_suffix(['i', 'j']) {
        Some(body) => parse_with_imaginary(body).ok_or_else(bad)?,
        None => Complex64::new(t.parse::<f64>().map_err(|_| bad())?, 0.0),
    };
    if z.re.is_finite() && z.im.is_finite() {
        Ok(z)
    } else {
        Err(format!("'{text}' is not finite"))
    }
}

fn parse_with_imaginary(body: &str) -> Option<Complex64> {
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&k| (bytes[k] == b'+' || bytes[k] == b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
    let (re_text, im_text) = match split {
        Some(k) => (&body[..k], &body[k..]),
        None => ("", body),
    };
    let re = if re_text.is_empty() { 0.0 } else { re_text.parse::<f64>().ok()? };
    let im = match im_text {
        "" | "+" => 1.0,
        "-" => -1.0,
        other => other.parse::<f64>().ok()?,
    };
    Some(Complex64::new(re, im))
}

/// A single value or an evenly spaced range of `count` points.
pub fn parse_grid(text: &str) -> Result<Vec<Complex64>, String> {
    let parts: Vec<&str> = text.split(':').collect();
    match parts.as_slice() {
        [one] => Ok(vec![parse_complex(one)?]),
        [start, stop, count] => {
            let a = parse_complex(start)?;
            let b = parse_complex(stop)?;
            let n: usize = count
                .trim()
                .parse()
                .map_err(|_| format!("grid count '{count}' is not a non-negative integer"))?;
            if n == 0 {
                return Err("grid count must be at least 1".into());
            }
            if n == 1 {
                return Ok(vec![a]);
            }
            let step = (b - a) / (n - 1) as f64;
            Ok((0..n).map(|k| if k == n - 1 { b } else { a + step * k as f64 }).collect())
        }
        _ => Err(format!("cannot parse '{text}' as a value or start:stop:count range")),
    }
}

/// Formats a number with 15 significant digits.
pub fn fmt_real(x: f64) -> String {
    if !x.is_finite() {
        return x.to_string();
    }
    let s = format!("{x:.14e}");
    let (mantissa, exp) = s.split_once('e').unwrap_or((&s, "0"));
    let exp: i32 = exp.parse().unwrap_or(0);
    if (-5..15).contains(&exp) {
        let digits = (14 - exp).max(0) as usize;
        let fixed = format!("{:.*}", digits, x);
        trim_zeros(&fixed)
    } else {
        format!("{}e{}", trim_zeros(mantissa), exp)
    }
}

fn trim_zeros(s: &str) -> String {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s.to_string()
    }
}

/// Shortest form that parses back to the same number.
pub fn fmt_exact(x: f64) -> String {
    if x != 0.0 && (x.abs() < 1e-5 || x.abs() >= 1e16) {
        format!("{x:e}")
    } else {
        format!("{x}")
    }
}

/// Rounds to 15 significant digits, so JSON and CSV agree digit for digit.
pub fn round15(x: f64) -> f64 {
    if x.is_finite() {
        format!("{x:.14e}").parse().unwrap_or(x)
    } else {
        x
    }
}

pub fn fmt_complex(z: Complex64) -> String {
    if z.im == 0.0 {
        fmt_real(z.re)
    } else if z.im < 0.0 {
        format!("{}-{}i", fmt_real(z.re), fmt_real(-z.im))
    } else {
        format!("{}+{}i", fmt_real(z.re), fmt_real(z.im))
    }
}
