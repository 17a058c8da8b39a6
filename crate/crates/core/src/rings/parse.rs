//! Text syntax: decimal integers, and polynomials written as a sum of terms
//! `c`, `c*X`, `c*X^k`, `X^k` with optional rational coefficients `a/b`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{Element, Ring, RingError};

fn err(text: &str, reason: impl Into<String>) -> RingError {
    RingError::Parse { text: text.to_string(), reason: reason.into() }
}

pub(super) fn parse_element(ring: Ring, text: &str) -> Result<Element, RingError> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(err(text, "empty input"));
    }
    if ring == Ring::Integers {
        return compact
            .parse::<BigInt>()
            .map(Element::Int)
            .map_err(|e| err(text, e.to_string()));
    }
    let x = ring.x().expect("polynomial ring");
    let mut acc = ring.zero();
    for (negative, term) in split_terms(&compact).map_err(|r| err(text, r))? {
        let (num, den, power) = parse_term(term).map_err(|r| err(text, r))?;
        let num = if negative { -num } else { num };
        let coeff = ring.from_ratio(&num, &den).map_err(|_| err(text, "zero denominator"))?;
        acc = &acc + &(&coeff * &x.pow(power));
    }
    Ok(acc)
}

fn split_terms(s: &str) -> Result<Vec<(bool, &str)>, String> {
    let mut terms = Vec::new();
    let bytes = s.as_bytes();
    let mut start = 0;
    let mut negative = false;
    let mut i = 0;
    if matches!(bytes.first(), Some(b'+') | Some(b'-')) {
        negative = bytes[0] == b'-';
        start = 1;
        i = 1;
    }
    while i <= bytes.len() {
        let at_sign = i < bytes.len() && (bytes[i] == b'+' || bytes[i] == b'-') && i > start;
        if i == bytes.len() || at_sign {
            let term = &s[start..i];
            if term.is_empty() {
                return Err("dangling sign".into());
            }
            terms.push((negative, term));
            if i < bytes.len() {
                negative = bytes[i] == b'-';
            }
            start = i + 1;
        }
        i += 1;
    }
    if terms.is_empty() {
        return Err("no terms".into());
    }
    Ok(terms)
}

/// Returns `(numerator, denominator, power of X)` for one unsigned term.
fn parse_term(term: &str) -> Result<(BigInt, BigInt, u32), String> {
    let (coeff, var) = match term.find(['X', 'x']) {
        Some(pos) => (&term[..pos], Some(&term[pos + 1..])),
        None => (term, None),
    };
    let coeff = coeff.strip_suffix('*').unwrap_or(coeff);
    let (num, den) = if coeff.is_empty() {
        if var.is_none() {
            return Err("empty term".into());
        }
        (BigInt::one(), BigInt::one())
    } else {
        match coeff.split_once('/') {
            Some((n, d)) => (parse_uint(n)?, parse_uint(d)?),
            None => (parse_uint(coeff)?, BigInt::one()),
        }
    };
    if den.is_zero() {
        return Err("zero denominator".into());
    }
    let power = match var {
        None => 0,
        Some("") => 1,
        Some(rest) => {
            let exp = rest.strip_prefix('^').ok_or_else(|| format!("unexpected {rest:?} after X"))?;
            exp.parse::<u32>().map_err(|e| format!("bad exponent {exp:?}: {e}"))?
        }
    };
    Ok((num, den, power))
}

fn parse_uint(s: &str) -> Result<BigInt, String> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return Err(format!("bad coefficient {s:?}"));
    }
    s.parse::<BigInt>().map_err(|e| e.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parses_documented_polynomials() {
        let r = Ring::PolyOverRationals;
        let z = r.parse("5/3+4*X+2*X^2+4/3*X^3").unwrap();
        assert_eq!(z.to_string(), "5/3 + 4*X + 2*X^2 + 4/3*X^3");
        assert_eq!(r.parse("-X^2 + X").unwrap().to_string(), "1*X - 1*X^2");
        assert_eq!(r.parse("  3 ").unwrap(), r.from_i64(3));
    }

    #[test]
    fn fp_coefficients_reduce() {
        let r = Ring::poly_fp(5).unwrap();
        assert_eq!(r.parse("7 + 6*X").unwrap(), r.parse("2 + X").unwrap());
        assert_eq!(r.parse("-1").unwrap(), r.from_i64(4));
        assert_eq!(r.parse("1/2").unwrap(), r.from_i64(3));
    }

    #[test]
    fn integers() {
        assert_eq!(Ring::Integers.parse("-37410").unwrap(), Element::from(-37410));
        assert!(Ring::Integers.parse("1+X").is_err());
    }

    #[test]
    fn rejects_garbage() {
        let r = Ring::PolyOverRationals;
        for bad in ["", "+", "1+", "X^", "X^a", "1/0", "2*Y", "1//2", "X*"] {
            assert!(r.parse(bad).is_err(), "{bad:?} should not parse");
        }
    }

    proptest! {
        #[test]
        fn display_parse_roundtrip(cs in prop::collection::vec((-30i64..30, 1i64..7), 0..7)) {
            let r = Ring::PolyOverRationals;
            let x = r.x().unwrap();
            let mut p = r.zero();
            for (k, &(n, d)) in cs.iter().enumerate() {
                let c = r.from_ratio(&n.into(), &d.into()).unwrap();
                p = &p + &(&c * &x.pow(k as u32));
            }
            prop_assert_eq!(r.parse(&p.to_string()).unwrap(), p.clone());
            let f = Ring::poly_fp(7).unwrap();
            let q = f.parse(&p.to_string()).unwrap();
            prop_assert_eq!(f.parse(&q.to_string()).unwrap(), q);
        }
    }
}
