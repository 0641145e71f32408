//! Deterministic numeric formatting shared by every output path. CSV and
//! JSON renderings of the same table must agree byte-for-byte, so both go
//! through [`fmt_sig`].

/// Formats `v` with 15 significant digits and no trailing zeros.
///
/// Positional notation when the decimal exponent lies in [-4, 15),
/// scientific (`1.5e-7`) otherwise. Zero of either sign prints as `0`.
pub fn fmt_sig(v: f64) -> String {
    if v == 0.0 {
        return "0".to_string();
    }
    if v.is_nan() {
        return "nan".to_string();
    }
    if v.is_infinite() {
        return if v < 0.0 { "-inf" } else { "inf" }.to_string();
    }
    let raw = format!("{:.14e}", v);
    let (mant, exp) = raw.split_once('e').expect("float repr carries an exponent");
    let exp: i32 = exp.parse().expect("float exponent parses");
    let digits: String = mant.chars().filter(|c| c.is_ascii_digit()).collect();
    let digits = digits.trim_end_matches('0');
    let digits = if digits.is_empty() { "0" } else { digits };

    let mut out = String::new();
    if mant.starts_with('-') {
        out.push('-');
    }
    if (-4..15).contains(&exp) {
        // Digits before the point in positional form.
        let point = exp + 1;
        if point <= 0 {
            out.push_str("0.");
            for _ in 0..-point {
                out.push('0');
            }
            out.push_str(digits);
        } else if point as usize >= digits.len() {
            out.push_str(digits);
            for _ in 0..(point as usize - digits.len()) {
                out.push('0');
            }
        } else {
            out.push_str(&digits[..point as usize]);
            out.push('.');
            out.push_str(&digits[point as usize..]);
        }
    } else {
        out.push_str(&digits[..1]);
        if digits.len() > 1 {
            out.push('.');
            out.push_str(&digits[1..]);
        }
        out.push('e');
        out.push_str(&exp.to_string());
    }
    out
}

/// Escapes `s` for inclusion inside a JSON string literal.
pub fn json_escape(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    for ch in s.chars() {
        match ch {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\r' => out.push_str("\\r"),
            '\t' => out.push_str("\\t"),
            c if (c as u32) < 0x20 => out.push_str(&format!("\\u{:04x}", c as u32)),
            c => out.push(c),
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_and_signs() {
        assert_eq!(fmt_sig(0.0), "0");
        assert_eq!(fmt_sig(-0.0), "0");
        assert_eq!(fmt_sig(1.0), "1");
        assert_eq!(fmt_sig(-1.5), "-1.5");
    }

    #[test]
    fn positional_range_boundaries() {
        assert_eq!(fmt_sig(0.0001), "0.0001");
        assert_eq!(fmt_sig(0.00001), "1e-5");
        assert_eq!(fmt_sig(123456789012345.0), "123456789012345");
        assert_eq!(fmt_sig(1e15), "1e15");
        assert_eq!(fmt_sig(1.23e-7), "1.23e-7");
        assert_eq!(fmt_sig(-4.409126855642622e-1), "-0.440912685564262");
    }

    #[test]
    fn fifteen_significant_digits() {
        assert_eq!(fmt_sig(-10.79431534387622), "-10.7943153438762");
        assert_eq!(fmt_sig(195.3895273866551), "195.389527386655");
        assert_eq!(fmt_sig(2.0 / 3.0), "0.666666666666667");
    }

    #[test]
    fn round_trips_to_working_precision() {
        let samples = [
            -10.79431534387622,
            195.3895273866551,
            376.4629734839229,
            -0.4761490924054464,
            6.5e-11,
            9.31494028e8,
            -1.0 / 3.0,
        ];
        for &v in &samples {
            let back: f64 = fmt_sig(v).parse().expect("formatted value parses");
            assert!(
                ((back - v) / v).abs() < 1e-14,
                "{v} -> {} -> {back}",
                fmt_sig(v)
            );
        }
    }

    #[test]
    fn non_finite_values_have_stable_spellings() {
        assert_eq!(fmt_sig(f64::NAN), "nan");
        assert_eq!(fmt_sig(f64::INFINITY), "inf");
        assert_eq!(fmt_sig(f64::NEG_INFINITY), "-inf");
    }

    #[test]
    fn escapes_json_metacharacters() {
        assert_eq!(json_escape("plain.name"), "plain.name");
        assert_eq!(json_escape("a\"b\\c\nd"), "a\\\"b\\\\c\\nd");
        assert_eq!(json_escape("\u{1}"), "\\u0001");
    }
}
