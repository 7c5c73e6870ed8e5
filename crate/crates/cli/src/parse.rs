//! Input grammars shared by the subcommands.
//!
//! * field specs: `d=<integer>` or `poly=<c0,c1,...,1>` (constant first)
//! * field elements: sums of terms `r`, `r*w`, `r*w^k` with `r` a rational
//!   `p` or `p/q`; `w` is the integral-basis generator
//! * complex numbers: sums of terms `x` and `x*I`
//! * points: `x,y` on the half-plane, `x1,x2,y` in half-space
//! * matrices: four complex entries, row-major, separated by `;`
//! * expansion coefficients: `m,n:re,im` items separated by `;`

use arithyp::numfield::{make_monogenic, make_quadratic};
use arithyp::{FieldElement, NumberField};
use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::Zero;

pub type ParseResult<T> = Result<T, String>;

pub fn parse_field_spec(s: &str) -> ParseResult<NumberField> {
    let s = s.trim();
    if let Some(d) = s.strip_prefix("d=") {
        let d: i64 = d
            .trim()
            .parse()
            .map_err(|_| format!("bad integer '{d}' in field spec (expected d=<integer>)"))?;
        return Ok(NumberField::Quadratic(
            make_quadratic(d).map_err(|e| e.to_string())?,
        ));
    }
    if let Some(coeffs) = s.strip_prefix("poly=") {
        let parsed: Result<Vec<BigInt>, _> = coeffs
            .split(',')
            .map(|c| c.trim().parse::<BigInt>())
            .collect();
        let coeffs = parsed.map_err(|_| {
            format!("bad coefficient list '{coeffs}' (expected poly=<c0,c1,...,1>)")
        })?;
        return Ok(NumberField::Monogenic(
            make_monogenic(&coeffs).map_err(|e| e.to_string())?,
        ));
    }
    if s == "q" || s == "Q" || s == "rational" {
        return Ok(NumberField::Rational);
    }
    Err(format!(
        "unrecognized field spec '{s}' (expected d=<integer>, poly=<c0,...,1>, or q)"
    ))
}

/// Renders a field back into its spec form.
pub fn field_spec_string(field: &NumberField) -> String {
    match field {
        NumberField::Rational => "q".into(),
        NumberField::Quadratic(q) => format!("d={}", q.d()),
        NumberField::Monogenic(m) => {
            let coeffs: Vec<String> = m.min_poly().iter().map(|c| c.to_string()).collect();
            format!("poly={}", coeffs.join(","))
        }
    }
}

pub fn parse_rational(s: &str) -> ParseResult<BigRational> {
    let s = s.trim();
    if let Some((num, den)) = s.split_once('/') {
        let n: BigInt = num
            .trim()
            .parse()
            .map_err(|_| format!("bad numerator '{num}'"))?;
        let d: BigInt = den
            .trim()
            .parse()
            .map_err(|_| format!("bad denominator '{den}'"))?;
        if d.is_zero() {
            return Err(format!("zero denominator in '{s}'"));
        }
        Ok(BigRational::new(n, d))
    } else {
        let n: BigInt = s.parse().map_err(|_| format!("bad rational '{s}'"))?;
        Ok(BigRational::from_integer(n))
    }
}

/// Splits "a+b-c" into signed chunks, keeping the signs. Signs directly
/// after an exponent marker stay inside the term (1e-3).
fn signed_terms(s: &str) -> Vec<String> {
    let mut terms = Vec::new();
    let mut current = String::new();
    for (i, ch) in s.chars().enumerate() {
        if (ch == '+' || ch == '-')
            && i > 0
            && !current.is_empty()
            && !current.ends_with(['e', 'E'])
        {
            terms.push(core::mem::take(&mut current));
            if ch == '-' {
                current.push('-');
            }
        } else {
            current.push(ch);
        }
    }
    if !current.is_empty() {
        terms.push(current);
    }
    terms
}

/// Field elements as sums of `r`, `r*w`, `r*w^k` terms.
pub fn parse_element(field: &NumberField, s: &str) -> ParseResult<FieldElement> {
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err("empty element".into());
    }
    let n = field.degree();
    let mut coords = vec![BigRational::zero(); n];
    for term in signed_terms(&compact) {
        let (coef_str, power) = match term.split_once('*') {
            None => {
                if let Some(rest) = term.strip_prefix("w") {
                    // bare w or w^k (optionally "-w")
                    ("1", parse_power(rest)?)
                } else if let Some(rest) = term.strip_prefix("-w") {
                    ("-1", parse_power(rest)?)
                } else {
                    (term.as_str(), 0usize)
                }
            }
            Some((c, gen)) => {
                let gen = gen.trim();
                if let Some(rest) = gen.strip_prefix('w') {
                    (c, parse_power(rest)?)
                } else {
                    return Err(format!("bad generator '{gen}' in term '{term}'"));
                }
            }
        };
        let coef = parse_rational(coef_str)?;
        if power >= n {
            return Err(format!(
                "term '{term}' uses w^{power}, but the field has degree {n}"
            ));
        }
        coords[power] += coef;
    }
    field.element(coords).map_err(|e| e.to_string())
}

fn parse_power(rest: &str) -> ParseResult<usize> {
    if rest.is_empty() {
        return Ok(1);
    }
    rest.strip_prefix('^')
        .ok_or_else(|| format!("bad power suffix '{rest}'"))?
        .parse()
        .map_err(|_| format!("bad exponent '{rest}'"))
}

/// Complex numbers as sums of `x` and `x*I` terms (also bare `I`).
pub fn parse_complex(s: &str) -> ParseResult<Complex64> {
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err("empty complex number".into());
    }
    let mut re = 0.0f64;
    let mut im = 0.0f64;
    for term in signed_terms(&compact) {
        if let Some(c) = term.strip_suffix("*I") {
            im += c
                .parse::<f64>()
                .map_err(|_| format!("bad imaginary part '{term}'"))?;
        } else if term == "I" {
            im += 1.0;
        } else if term == "-I" {
            im -= 1.0;
        } else {
            re += term
                .parse::<f64>()
                .map_err(|_| format!("bad real part '{term}'"))?;
        }
    }
    Ok(Complex64::new(re, im))
}

pub fn parse_f64(s: &str) -> ParseResult<f64> {
    s.trim().parse().map_err(|_| format!("bad number '{s}'"))
}

fn split_fixed<const N: usize>(s: &str, sep: char, what: &str) -> ParseResult<[String; N]> {
    let parts: Vec<&str> = s.split(sep).collect();
    if parts.len() != N {
        return Err(format!(
            "expected {N} '{sep}'-separated values for {what}, got {} in '{s}'",
            parts.len()
        ));
    }
    Ok(core::array::from_fn(|i| parts[i].trim().to_string()))
}

pub fn parse_point2(s: &str) -> ParseResult<arithyp::hyperbolic::PointH2> {
    let [x, y] = split_fixed::<2>(s, ',', "a half-plane point x,y")?;
    arithyp::hyperbolic::PointH2::new(parse_f64(&x)?, parse_f64(&y)?).map_err(|e| e.to_string())
}

pub fn parse_point3(s: &str) -> ParseResult<arithyp::hyperbolic::PointH3> {
    let [x1, x2, y] = split_fixed::<3>(s, ',', "a half-space point x1,x2,y")?;
    arithyp::hyperbolic::PointH3::new(parse_f64(&x1)?, parse_f64(&x2)?, parse_f64(&y)?)
        .map_err(|e| e.to_string())
}

/// Row-major 2x2 complex matrix `a;b;c;d`.
pub fn parse_moebius(s: &str) -> ParseResult<arithyp::hyperbolic::MoebiusMap> {
    let [a, b, c, d] = split_fixed::<4>(s, ';', "a matrix a;b;c;d")?;
    arithyp::hyperbolic::MoebiusMap::new(
        parse_complex(&a)?,
        parse_complex(&b)?,
        parse_complex(&c)?,
        parse_complex(&d)?,
    )
    .map_err(|e| e.to_string())
}

pub fn parse_matrix2(s: &str) -> ParseResult<[[Complex64; 2]; 2]> {
    let [a, b, c, d] = split_fixed::<4>(s, ';', "a matrix a;b;c;d")?;
    Ok([
        [parse_complex(&a)?, parse_complex(&b)?],
        [parse_complex(&c)?, parse_complex(&d)?],
    ])
}

/// Quaternion coordinates `e0;e1;e2;e3`, each a field element.
pub fn parse_quat_coords(field: &NumberField, s: &str) -> ParseResult<[FieldElement; 4]> {
    let [e0, e1, e2, e3] = split_fixed::<4>(s, ';', "quaternion coordinates e0;e1;e2;e3")?;
    Ok([
        parse_element(field, &e0)?,
        parse_element(field, &e1)?,
        parse_element(field, &e2)?,
        parse_element(field, &e3)?,
    ])
}

/// Expansion coefficients `m,n:re,im` separated by `;`.
pub fn parse_coeffs(s: &str) -> ParseResult<Vec<((i64, i64), Complex64)>> {
    let mut out = Vec::new();
    for item in s.split(';') {
        let item = item.trim();
        if item.is_empty() {
            continue;
        }
        let (idx, val) = item
            .split_once(':')
            .ok_or_else(|| format!("expected m,n:re,im in '{item}'"))?;
        let [m, n] = split_fixed::<2>(idx, ',', "a lattice index m,n")?;
        let [re, im] = split_fixed::<2>(val, ',', "a complex coefficient re,im")?;
        out.push((
            (
                m.parse().map_err(|_| format!("bad index '{m}'"))?,
                n.parse().map_err(|_| format!("bad index '{n}'"))?,
            ),
            Complex64::new(parse_f64(&re)?, parse_f64(&im)?),
        ));
    }
    Ok(out)
}

/// Rational place lists for `quat realize`: `2,3,inf` (or `none`).
pub fn parse_places(s: &str) -> ParseResult<arithyp::RamificationSet> {
    let s = s.trim();
    let mut places = Vec::new();
    if s.is_empty() || s == "none" {
        return Ok(arithyp::RamificationSet::new(places));
    }
    for item in s.split(',') {
        let item = item.trim();
        if item == "inf" || item == "oo" {
            places.push(arithyp::Place::RealEmbedding { index: 0 });
        } else {
            let p: u64 = item
                .parse()
                .map_err(|_| format!("bad place '{item}' (expected a prime or inf)"))?;
            if !arithyp::modpoly::is_prime(p) {
                return Err(format!("place '{item}' is not a prime"));
            }
            places.push(arithyp::Place::RationalPrime { p });
        }
    }
    Ok(arithyp::RamificationSet::new(places))
}
