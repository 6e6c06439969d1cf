//! Scalar literals: decimal integers, fractions `a/b`, and digit lists
//! `[c0,c1,...]@p^v` meaning p^v * (c0 + c1 p + c2 p^2 + ...).
//!
//! In an extension of degree f each digit is an integer in [0, q) whose base-p
//! digits are the coefficients of the residue digit in the basis 1, t, ..., t^(f-1).

use std::sync::Arc;

use super::element::PadicElement;
use super::ring::{ResidueRing, RingElem};
use crate::error::{Error, Result};

pub fn parse_element(ring: &Arc<ResidueRing>, s: &str) -> Result<PadicElement> {
    let s = s.trim();
    if s.starts_with('[') {
        return parse_digits(ring, s);
    }
    if let Some((num, den)) = s.split_once('/') {
        let num = parse_int(num)?;
        let den = parse_int(den)?;
        if den == 0 {
            return Err(Error::Parse(format!("zero denominator in {s:?}")));
        }
        return PadicElement::from_fraction(ring, num, den);
    }
    Ok(PadicElement::from_int(ring, parse_int(s)?))
}

fn parse_int(s: &str) -> Result<i128> {
    s.trim().parse::<i128>().map_err(|e| Error::Parse(format!("bad integer {s:?}: {e}")))
}

fn parse_digits(ring: &Arc<ResidueRing>, s: &str) -> Result<PadicElement> {
    let (body, shift) =
        s.split_once("]@p^").ok_or_else(|| Error::Parse(format!("digit list must end with ]@p^v: {s:?}")))?;
    let shift: i64 = shift.trim().parse().map_err(|e| Error::Parse(format!("bad shift in {s:?}: {e}")))?;
    let spec = ring.spec();
    let p = spec.prime();
    let q = spec.residue_size();
    let f = spec.degree();
    let m = ring.modulus();
    let mut coeffs = vec![0u64; f];
    let body = body.trim_start_matches('[');
    for (i, tok) in body.split(',').enumerate() {
        let tok = tok.trim();
        if tok.is_empty() {
            continue;
        }
        let d: u64 = tok.parse().map_err(|e| Error::Parse(format!("bad digit {tok:?}: {e}")))?;
        if d >= q {
            return Err(Error::Parse(format!("digit {d} out of range [0, {q})")));
        }
        if i as u32 >= ring.level() {
            continue;
        }
        let weight = spec.prime_power(i as u32);
        let mut rest = d;
        for c in coeffs.iter_mut() {
            *c = (*c + (rest % p) * weight) % m;
            rest /= p;
        }
    }
    let unit = RingElem::from_raw(ring, coeffs);
    Ok(PadicElement::from_parts(ring, shift, &unit))
}

/// Canonical text form. Small integers and small fractions print as such; anything
/// else prints as a digit list. `parse_element(format_element(x)) == x` always.
pub fn format_element(x: &PadicElement) -> String {
    let (val, unit) = match (x.valuation(), x.unit()) {
        (Some(v), Some(u)) => (v, u),
        _ => return "0".to_string(),
    };
    let spec = x.spec();
    if unit.coeffs()[1..].iter().all(|&c| c == 0) {
        if let Some(s) = format_rational(spec.prime(), unit.ring().modulus(), unit.coeffs()[0], val) {
            return s;
        }
    }
    let p = spec.prime();
    let n = unit.ring().level();
    let mut digits = Vec::with_capacity(n as usize);
    let mut rest: Vec<u64> = unit.coeffs().to_vec();
    for _ in 0..n {
        let mut d = 0u64;
        let mut w = 1u64;
        for c in rest.iter_mut() {
            d += (*c % p) * w;
            *c /= p;
            w *= p;
        }
        digits.push(d);
    }
    while digits.len() > 1 && *digits.last().unwrap() == 0 {
        digits.pop();
    }
    let body: Vec<String> = digits.iter().map(|d| d.to_string()).collect();
    format!("[{}]@p^{}", body.join(","), val)
}

fn isqrt(n: u64) -> u64 {
    let mut r = (n as f64).sqrt() as u64;
    while r * r > n {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    r
}

/// Recognizes the unit `u` mod `m` as a small integer (|a| <= sqrt m) or a small
/// fraction (|a|, b <= m^(1/4)), then attaches p^val.
fn format_rational(p: u64, m: u64, u: u64, val: i64) -> Option<String> {
    let int_bound = isqrt(m);
    let (num, den): (i128, i128) = if u <= int_bound {
        (u as i128, 1)
    } else if m - u <= int_bound {
        (-((m - u) as i128), 1)
    } else {
        let bound = isqrt(int_bound) as i128;
        let (mut r0, mut r1) = (m as i128, u as i128);
        let (mut t0, mut t1) = (0i128, 1i128);
        while r1 > bound {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        let (mut a, mut b) = (r1, t1);
        if b < 0 {
            a = -a;
            b = -b;
        }
        if b == 0 || b > bound || a == 0 || b % p as i128 == 0 {
            return None;
        }
        if (a - u as i128 * b).rem_euclid(m as i128) != 0 {
            return None;
        }
        (a, b)
    };
    let pv = |k: i64| -> Option<i128> {
        let mut acc: i128 = 1;
        for _ in 0..k {
            acc = acc.checked_mul(p as i128)?;
        }
        Some(acc)
    };
    let (num, den) =
        if val >= 0 { (num.checked_mul(pv(val)?)?, den) } else { (num, den.checked_mul(pv(-val)?)?) };
    Some(if den == 1 { num.to_string() } else { format!("{num}/{den}") })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::padic::field::FieldSpec;

    fn qp(p: u64, n: u32) -> Arc<ResidueRing> {
        ResidueRing::working(&FieldSpec::qp(p, n).unwrap())
    }

    #[test]
    fn parses_all_forms() {
        let k = qp(5, 3);
        assert_eq!(parse_element(&k, "-1").unwrap(), PadicElement::from_int(&k, -1));
        assert_eq!(parse_element(&k, "1/8").unwrap(), PadicElement::from_fraction(&k, 1, 8).unwrap());
        let d = parse_element(&k, "[2,1]@p^1").unwrap();
        assert_eq!(d, PadicElement::from_int(&k, 35));
        assert!(parse_element(&k, "[7]@p^0").is_err());
        assert!(parse_element(&k, "1/0").is_err());
        assert!(parse_element(&k, "x").is_err());
    }

    #[test]
    fn formats_small_rationals() {
        let k = qp(3, 10);
        for (n, d, s) in
            [(0, 1, "0"), (2, 1, "2"), (-5, 1, "-5"), (1, 8, "1/8"), (-2, 9, "-2/9"), (18, 1, "18")]
        {
            let x = PadicElement::from_fraction(&k, n, d).unwrap();
            assert_eq!(format_element(&x), s);
        }
    }

    #[test]
    fn extension_digits_roundtrip() {
        let spec = FieldSpec::new(3, 2, 4, None).unwrap();
        let k = ResidueRing::working(&spec);
        let x = parse_element(&k, "[5,0,8]@p^-1").unwrap();
        let s = format_element(&x);
        assert_eq!(s, "[5,0,8]@p^-1");
        assert_eq!(parse_element(&k, &s).unwrap(), x);
    }
}
