//! Human-readable polynomial input.
//!
//! An `F_p` polynomial is a sum of terms `c`, `x`, `x^e` or `c x^e` joined by
//! `+` and `-`; coefficients are reduced mod p and `*` between coefficient and
//! `x` is optional. An `R_k` polynomial lists its u-layers separated by `;`,
//! lowest first, so `x^2+1; 1` is `x^2 + 1 + u`. Missing trailing layers are
//! zero.

use rkcodes::{FpPoly, PrimeParams, RkPoly};

use crate::error::{CliError, CliResult};

const MAX_EXPONENT: usize = 1 << 12;

fn err(input: &str, msg: &str) -> CliError {
    CliError::Parse(format!("{msg} in {input:?}"))
}

fn parse_term(term: &str, whole: &str) -> CliResult<(i64, usize)> {
    let t: String = term.chars().filter(|c| !c.is_whitespace()).collect();
    if t.is_empty() {
        return Err(err(whole, "empty term"));
    }
    let Some(xpos) = t.find('x') else {
        let c = t.parse::<i64>().map_err(|_| err(whole, &format!("bad term {term:?}")))?;
        return Ok((c, 0));
    };
    let coeff_part = t[..xpos].trim_end_matches('*');
    let c = if coeff_part.is_empty() {
        1
    } else {
        coeff_part.parse::<i64>().map_err(|_| err(whole, &format!("bad coefficient {coeff_part:?}")))?
    };
    let rest = &t[xpos + 1..];
    let e = if rest.is_empty() {
        1
    } else if let Some(exp) = rest.strip_prefix('^') {
        exp.parse::<usize>().map_err(|_| err(whole, &format!("bad exponent {exp:?}")))?
    } else {
        return Err(err(whole, &format!("bad term {term:?}")));
    };
    Ok((c, e))
}

pub fn parse_fp_poly(input: &str, p: u32) -> CliResult<FpPoly> {
    let s: String = input.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Ok(FpPoly::zero(p));
    }
    // split into signed terms; only the first term may omit a leading operator
    let mut terms: Vec<(i64, &str)> = Vec::new();
    let mut sign = 1i64;
    let mut start = 0usize;
    for (i, ch) in s.char_indices() {
        if ch == '+' || ch == '-' {
            if i > start {
                terms.push((sign, &s[start..i]));
            } else if i != 0 {
                return Err(err(input, "dangling operator"));
            }
            sign = if ch == '-' { -1 } else { 1 };
            start = i + 1;
        }
    }
    if start >= s.len() {
        return Err(err(input, "dangling operator"));
    }
    terms.push((sign, &s[start..]));

    let mut coeffs: Vec<i64> = Vec::new();
    for (sg, term) in terms {
        let (c, e) = parse_term(term, input)?;
        if e > MAX_EXPONENT {
            return Err(err(input, &format!("exponent {e} exceeds {MAX_EXPONENT}")));
        }
        let c = c.rem_euclid(p as i64);
        if coeffs.len() <= e {
            coeffs.resize(e + 1, 0);
        }
        coeffs[e] += sg * c;
    }
    Ok(FpPoly::from_signed(p, &coeffs))
}

pub fn parse_rk_poly(input: &str, params: PrimeParams) -> CliResult<RkPoly> {
    let layers: Vec<&str> = input.split(';').collect();
    if layers.len() > params.k() {
        return Err(err(input, &format!("{} u-layers given but k = {}", layers.len(), params.k())));
    }
    let polys = layers.iter().map(|l| parse_fp_poly(l, params.p())).collect::<CliResult<Vec<_>>>()?;
    Ok(RkPoly::from_layers(params, polys))
}
