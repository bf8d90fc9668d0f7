//! Weighted homogeneous polynomials: parsing, standard families, weight
//! inference, and the combinatorial quasi-smoothness criteria for curves
//! (3 variables) and surfaces (4 variables).

use num::{Integer, One, Signed, Zero};

use crate::arith::{gcd_many, Int, Rat};
use crate::error::{Error, Result};
use crate::link::LinkDescriptor;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Monomial {
    pub coefficient: Rat,
    pub exponents: Vec<u32>,
}

impl Monomial {
    /// Indices of variables appearing with positive exponent.
    pub fn support(&self) -> Vec<usize> {
        self.exponents
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
            .collect()
    }

    pub fn weighted_degree(&self, weights: &[Int]) -> Int {
        self.exponents
            .iter()
            .zip(weights)
            .map(|(&e, w)| w * Int::from(e))
            .sum()
    }
}

/// A nonzero polynomial with pairwise-distinct exponent vectors, kept sorted
/// for canonical output.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    variables: usize,
    monomials: Vec<Monomial>,
}

impl Polynomial {
    /// Merges duplicate exponent vectors and drops cancelled monomials.
    pub fn new(variables: usize, monomials: Vec<Monomial>) -> Result<Self> {
        let mut merged: Vec<Monomial> = Vec::new();
        for m in monomials {
            debug_assert_eq!(m.exponents.len(), variables);
            match merged.iter_mut().find(|x| x.exponents == m.exponents) {
                Some(x) => x.coefficient += m.coefficient,
                None => merged.push(m),
            }
        }
        merged.retain(|m| !m.coefficient.is_zero());
        if merged.is_empty() {
            return Err(Error::ZeroPolynomial);
        }
        // descending lexicographic exponent order
        merged.sort_by(|a, b| b.exponents.cmp(&a.exponents));
        Ok(Polynomial {
            variables,
            monomials: merged,
        })
    }

    pub fn variables(&self) -> usize {
        self.variables
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    /// Canonical text form, re-parseable by [`parse_polynomial`].
    pub fn render(&self) -> String {
        let mut out = String::new();
        for (k, m) in self.monomials.iter().enumerate() {
            let coeff = &m.coefficient;
            let neg = coeff.is_negative();
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let abs = coeff.abs();
            let mut factors: Vec<String> = Vec::new();
            if !abs.is_one() || m.exponents.iter().all(|&e| e == 0) {
                if abs.is_integer() {
                    factors.push(abs.to_integer().to_string());
                } else {
                    factors.push(format!("{}/{}", abs.numer(), abs.denom()));
                }
            }
            for (i, &e) in m.exponents.iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(format!("z{i}")),
                    _ => factors.push(format!("z{i}^{e}")),
                }
            }
            out.push_str(&factors.join("*"));
        }
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StandardKind {
    BP,
    Chain,
}

/// `BP`: sum of pure powers. `Chain`: z0^a0 + z0*z1^a1 + z1*z2^a2 + ...
pub fn make_standard(kind: StandardKind, a: &[Int]) -> Result<Polynomial> {
    if a.is_empty() {
        return Err(Error::InvalidDescriptor("empty exponent list".into()));
    }
    for ai in a {
        if ai < &Int::from(2) {
            return Err(Error::BadExponent(ai.to_string()));
        }
    }
    let n = a.len();
    let to_u32 = |x: &Int| -> Result<u32> {
        u32::try_from(x.clone())
            .map_err(|_| Error::InvalidDescriptor(format!("exponent {x} too large")))
    };
    let mut monomials = Vec::with_capacity(n);
    for (i, ai) in a.iter().enumerate() {
        let mut exps = vec![0u32; n];
        exps[i] = to_u32(ai)?;
        if kind == StandardKind::Chain && i > 0 {
            exps[i - 1] += 1;
        }
        monomials.push(Monomial {
            coefficient: Rat::one(),
            exponents: exps,
        });
    }
    Polynomial::new(n, monomials)
}

// ---------------------------------------------------------------------------
// Parser for the polynomial text grammar:
//   poly   := term (('+' | '-') term)*
//   term   := [coeff '*'] factor ('*' factor)* | coeff
//   factor := 'z' INDEX ['^' EXPONENT]
//   coeff  := INTEGER ['/' INTEGER]
// ---------------------------------------------------------------------------

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        Parser {
            bytes: text.as_bytes(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && (self.bytes[self.pos] as char).is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn err(&self, msg: &str) -> Error {
        Error::Parse {
            offset: self.pos,
            msg: msg.to_string(),
        }
    }

    fn integer(&mut self) -> Result<Int> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err("expected an integer"));
        }
        let s = std::str::from_utf8(&self.bytes[start..self.pos]).unwrap();
        Ok(s.parse::<Int>().unwrap())
    }

    fn usize_int(&mut self) -> Result<usize> {
        let at = self.pos;
        let x = self.integer()?;
        usize::try_from(x).map_err(|_| Error::Parse {
            offset: at,
            msg: "number too large".into(),
        })
    }

    /// A single `zINDEX[^EXPONENT]` factor; returns (index, exponent).
    fn factor(&mut self) -> Result<(usize, u32)> {
        match self.peek() {
            Some(b'z') | Some(b'Z') => self.pos += 1,
            _ => return Err(self.err("expected a variable factor 'z<index>'")),
        }
        let index = self.usize_int()?;
        let mut exponent = 1u32;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let at = self.pos;
            let e = self.integer()?;
            exponent = u32::try_from(e).map_err(|_| Error::Parse {
                offset: at,
                msg: "exponent too large".into(),
            })?;
        }
        Ok((index, exponent))
    }

    fn term(&mut self, sign: i32) -> Result<(Rat, Vec<(usize, u32)>)> {
        let mut coeff = Rat::one();
        let mut factors = Vec::new();
        let mut saw_coeff = false;
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let num = self.integer()?;
                let mut c = Rat::from(num);
                if self.peek() == Some(b'/') {
                    self.pos += 1;
                    let at = self.pos;
                    let den = self.integer()?;
                    if den.is_zero() {
                        return Err(Error::Parse {
                            offset: at,
                            msg: "zero denominator".into(),
                        });
                    }
                    c /= Rat::from(den);
                }
                coeff = c;
                saw_coeff = true;
            }
            _ => {}
        }
        if saw_coeff {
            if self.peek() == Some(b'*') {
                self.pos += 1;
                factors.push(self.factor()?);
            } else {
                // bare coefficient term
                if sign < 0 {
                    coeff = -coeff;
                }
                return Ok((coeff, factors));
            }
        } else {
            factors.push(self.factor()?);
        }
        while self.peek() == Some(b'*') {
            self.pos += 1;
            factors.push(self.factor()?);
        }
        if sign < 0 {
            coeff = -coeff;
        }
        Ok((coeff, factors))
    }

    fn poly(&mut self) -> Result<Vec<(Rat, Vec<(usize, u32)>)>> {
        let mut terms = Vec::new();
        let mut sign = 1;
        if let Some(c) = self.peek() {
            if c == b'-' {
                self.pos += 1;
                sign = -1;
            } else if c == b'+' {
                self.pos += 1;
            }
        }
        terms.push(self.term(sign)?);
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    terms.push(self.term(1)?);
                }
                Some(b'-') => {
                    self.pos += 1;
                    terms.push(self.term(-1)?);
                }
                Some(_) => return Err(self.err("expected '+', '-', or end of input")),
                None => break,
            }
        }
        Ok(terms)
    }
}

/// Parses the grammar above; the variable count is `max index + 1`.
pub fn parse_polynomial(text: &str) -> Result<Polynomial> {
    parse_impl(text, None)
}

/// Like [`parse_polynomial`] but with a declared variable count; indices at or
/// beyond it are rejected.
pub fn parse_polynomial_with_vars(text: &str, variables: usize) -> Result<Polynomial> {
    parse_impl(text, Some(variables))
}

fn parse_impl(text: &str, declared: Option<usize>) -> Result<Polynomial> {
    let mut p = Parser::new(text);
    let terms = p.poly()?;
    let max_index = terms
        .iter()
        .flat_map(|(_, fs)| fs.iter().map(|&(i, _)| i))
        .max();
    let variables = match declared {
        Some(v) => {
            if let Some(mi) = max_index {
                if mi >= v {
                    return Err(Error::VarOutOfRange { index: mi, vars: v });
                }
            }
            v
        }
        None => max_index.map_or(1, |mi| mi + 1),
    };
    let monomials = terms
        .into_iter()
        .map(|(coefficient, factors)| {
            let mut exponents = vec![0u32; variables];
            for (i, e) in factors {
                exponents[i] += e;
            }
            Monomial {
                coefficient,
                exponents,
            }
        })
        .collect();
    Polynomial::new(variables, monomials)
}

// ---------------------------------------------------------------------------
// Weight inference
// ---------------------------------------------------------------------------

/// Solves `<b, w> = d` over the rationals for every exponent vector `b` of
/// `f`, and returns the primitive positive integer solution if the solution
/// ray is unique.
pub fn infer_weights(f: &Polynomial) -> Result<LinkDescriptor> {
    let n = f.variables();
    // unknowns: w_0, ..., w_{n-1}, d; rows: (b, -1)
    let mut rows: Vec<Vec<Rat>> = f
        .monomials()
        .iter()
        .map(|m| {
            let mut row: Vec<Rat> = m
                .exponents
                .iter()
                .map(|&e| Rat::from(Int::from(e)))
                .collect();
            row.push(-Rat::one());
            row
        })
        .collect();
    let cols = n + 1;

    // Gaussian elimination to row echelon form.
    let mut pivot_cols = Vec::new();
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let p = rows[rank][col].clone();
        for x in rows[rank].iter_mut() {
            *x /= p.clone();
        }
        for r in 0..rows.len() {
            if r != rank && !rows[r][col].is_zero() {
                let factor = rows[r][col].clone();
                for c in 0..cols {
                    let sub = factor.clone() * rows[rank][c].clone();
                    rows[r][c] -= sub;
                }
            }
        }
        pivot_cols.push(col);
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }

    let kernel_dim = cols - rank;
    if kernel_dim == 0 {
        return Err(Error::NoPositiveWeights);
    }
    if kernel_dim > 1 {
        // An open positive cone in a >= 2-dimensional kernel never reduces
        // to a single ray.
        return Err(Error::AmbiguousWeights);
    }

    // one free column: build the kernel vector
    let free_col = (0..cols).find(|c| !pivot_cols.contains(c)).unwrap();
    let mut solution = vec![Rat::zero(); cols];
    solution[free_col] = Rat::one();
    for (r, &pc) in pivot_cols.iter().enumerate() {
        solution[pc] = -rows[r][free_col].clone();
    }

    // clear denominators, make primitive, orient so that d > 0
    let denom_lcm = solution
        .iter()
        .fold(Int::one(), |acc, x| num::Integer::lcm(&acc, x.denom()));
    let mut ints: Vec<Int> = solution
        .iter()
        .map(|x| x.numer() * (&denom_lcm / x.denom()))
        .collect();
    let g = gcd_many(ints.iter());
    if !g.is_zero() {
        for x in ints.iter_mut() {
            *x /= &g;
        }
    }
    if ints[n].is_negative() {
        for x in ints.iter_mut() {
            *x = -x.clone();
        }
    }
    let degree = ints.pop().unwrap();
    if !degree.is_positive() || ints.iter().any(|w| !w.is_positive()) {
        return Err(Error::NoPositiveWeights);
    }
    LinkDescriptor::new(ints, degree)
}

/// True iff every monomial of `f` has weighted degree exactly `d`.
pub fn is_weighted_homogeneous(f: &Polynomial, link: &LinkDescriptor) -> Result<bool> {
    if f.variables() != link.weights().len() {
        return Err(Error::WrongVariableCount {
            expected: link.weights().len(),
            found: f.variables(),
        });
    }
    Ok(f.monomials()
        .iter()
        .all(|m| &m.weighted_degree(link.weights()) == link.degree()))
}

// ---------------------------------------------------------------------------
// Quasi-smoothness
// ---------------------------------------------------------------------------

/// One condition of a quasi-smoothness criterion together with the monomials
/// witnessing it (exponent vectors), or empty when it fails.
#[derive(Debug, Clone)]
pub struct Certificate {
    pub condition: String,
    pub satisfied: bool,
    pub witnesses: Vec<Vec<u32>>,
}

/// Verdict plus per-condition certificates. The verdict assumes generic
/// coefficients: only the monomial support is examined.
#[derive(Debug, Clone)]
pub struct QuasiSmoothReport {
    pub verdict: bool,
    pub certificates: Vec<Certificate>,
    pub generic_coefficients_assumed: bool,
}

impl QuasiSmoothReport {
    fn from_certificates(certificates: Vec<Certificate>) -> Self {
        QuasiSmoothReport {
            verdict: certificates.iter().all(|c| c.satisfied),
            certificates,
            generic_coefficients_assumed: true,
        }
    }
}

/// Does `m` have the shape `z_i^a * z_j` (j = i meaning a pure power of z_i)?
fn is_power_times_var(exps: &[u32], i: usize) -> Option<usize> {
    let support: Vec<usize> = exps
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(k, _)| k)
        .collect();
    match support.as_slice() {
        [only] if *only == i => Some(i),
        [only] if exps[*only] == 1 => Some(*only), // z_j alone = z_i^0 * z_j
        [a, b] => {
            let (j, other) = if *a == i { (*b, *a) } else if *b == i { (*a, *b) } else { return None };
            debug_assert_eq!(other, i);
            (exps[j] == 1).then_some(j)
        }
        _ => None,
    }
}

fn check_homogeneous(f: &Polynomial, link: &LinkDescriptor, vars: usize) -> Result<()> {
    if f.variables() != vars {
        return Err(Error::WrongVariableCount {
            expected: vars,
            found: f.variables(),
        });
    }
    if link.weights().len() != vars {
        return Err(Error::WrongVariableCount {
            expected: vars,
            found: link.weights().len(),
        });
    }
    if !is_weighted_homogeneous(f, link)? {
        return Err(Error::NotWeightedHomogeneous);
    }
    Ok(())
}

/// Quasi-smoothness of a curve in a 3-variable weighted projective plane:
/// for each variable, a monomial `z_i^a * z_j` must exist and some monomial
/// must avoid `z_i` entirely.
pub fn quasismooth_curve(f: &Polynomial, link: &LinkDescriptor) -> Result<QuasiSmoothReport> {
    check_homogeneous(f, link, 3)?;
    let mut certs = Vec::new();
    for i in 0..3 {
        let hits: Vec<&Monomial> = f
            .monomials()
            .iter()
            .filter(|m| is_power_times_var(&m.exponents, i).is_some())
            .collect();
        if !hits.is_empty() {
            // hypothesis of the criterion: d must exceed the tested exponent
            let degree = link.degree();
            if hits
                .iter()
                .all(|m| &Int::from(m.exponents[i]) >= degree)
            {
                return Err(Error::DegenerateDegree {
                    index: i,
                    degree: degree.to_string(),
                });
            }
        }
        certs.push(Certificate {
            condition: format!("monomial z{i}^a*zj exists"),
            satisfied: !hits.is_empty(),
            witnesses: hits.iter().map(|m| m.exponents.clone()).collect(),
        });
        let avoiding: Vec<&Monomial> = f
            .monomials()
            .iter()
            .filter(|m| m.exponents[i] == 0)
            .collect();
        certs.push(Certificate {
            condition: format!("monomial not involving z{i} exists"),
            satisfied: !avoiding.is_empty(),
            witnesses: avoiding.iter().map(|m| m.exponents.clone()).collect(),
        });
    }
    Ok(QuasiSmoothReport::from_certificates(certs))
}

/// Quasi-smoothness of a surface in 4 variables (general hypersurface).
/// Mixed-monomial conditions accept zero exponents, so a pure power
/// `z_i^{a_i}` counts as `z_i^{a_i} * z_j^0`.
pub fn quasismooth_surface(f: &Polynomial, link: &LinkDescriptor) -> Result<QuasiSmoothReport> {
    check_homogeneous(f, link, 4)?;
    let w = link.weights();
    let mut certs = Vec::new();

    // (1) for each i some monomial z_i^m * z_j
    for i in 0..4 {
        let hits: Vec<Vec<u32>> = f
            .monomials()
            .iter()
            .filter(|m| is_power_times_var(&m.exponents, i).is_some())
            .map(|m| m.exponents.clone())
            .collect();
        certs.push(Certificate {
            condition: format!("(1) monomial z{i}^m*zj exists"),
            satisfied: !hits.is_empty(),
            witnesses: hits,
        });
    }

    // (2) gcd(w_i, w_j) > 1 requires a monomial in z_i, z_j only
    for i in 0..4 {
        for j in i + 1..4 {
            if w[i].gcd(&w[j]) > Int::one() {
                let hits: Vec<Vec<u32>> = f
                    .monomials()
                    .iter()
                    .filter(|m| m.support().iter().all(|&s| s == i || s == j))
                    .map(|m| m.exponents.clone())
                    .collect();
                certs.push(Certificate {
                    condition: format!("(2) gcd(w{i},w{j})>1: monomial in z{i},z{j} exists"),
                    satisfied: !hits.is_empty(),
                    witnesses: hits,
                });
            }
        }
    }

    // (3) for every pair: a monomial in z_i, z_j, or two monomials
    //     z_i^c z_j^c' z_k and z_i^d z_j^d' z_l with distinct k, l off {i, j}
    for i in 0..4 {
        for j in i + 1..4 {
            let pure: Vec<Vec<u32>> = f
                .monomials()
                .iter()
                .filter(|m| m.support().iter().all(|&s| s == i || s == j))
                .map(|m| m.exponents.clone())
                .collect();
            let (satisfied, witnesses) = if !pure.is_empty() {
                (true, pure)
            } else {
                let others: Vec<usize> = (0..4).filter(|&s| s != i && s != j).collect();
                let find_linear = |k: usize| -> Option<Vec<u32>> {
                    f.monomials()
                        .iter()
                        .find(|m| {
                            m.exponents[k] == 1
                                && m.support().iter().all(|&s| s == i || s == j || s == k)
                        })
                        .map(|m| m.exponents.clone())
                };
                match (find_linear(others[0]), find_linear(others[1])) {
                    (Some(a), Some(b)) => (true, vec![a, b]),
                    _ => (false, vec![]),
                }
            };
            certs.push(Certificate {
                condition: format!("(3) pair z{i},z{j}"),
                satisfied,
                witnesses,
            });
        }
    }

    Ok(QuasiSmoothReport::from_certificates(certs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int;
    use crate::link::{from_bp, BPExponents};

    fn bp_exps(a: &[i64]) -> Vec<Int> {
        a.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn parse_bp_shape() {
        let f = parse_polynomial("z0^2+z1^3+z2^3+z3^18").unwrap();
        assert_eq!(f.variables(), 4);
        assert_eq!(f.monomials().len(), 4);
    }

    #[test]
    fn parse_chain_shape() {
        let f = parse_polynomial("z0^3 + z0*z1^4 + z1*z2^5").unwrap();
        assert_eq!(f.variables(), 3);
        assert_eq!(f.monomials().len(), 3);
    }

    #[test]
    fn parse_cancellation_is_zero() {
        assert!(matches!(
            parse_polynomial("z0^2 - z0^2"),
            Err(Error::ZeroPolynomial)
        ));
    }

    #[test]
    fn parse_coefficients_and_signs() {
        let f = parse_polynomial("-3*z0^2 + 1/2*z1 - 7").unwrap();
        assert_eq!(f.monomials().len(), 3);
        let g = parse_polynomial("2*z0^2+z0^2").unwrap();
        assert_eq!(g.monomials().len(), 1);
        assert_eq!(g.monomials()[0].coefficient, Rat::from(int(3)));
    }

    #[test]
    fn parse_reports_offsets() {
        match parse_polynomial("z0^2 + &") {
            Err(Error::Parse { offset, .. }) => assert_eq!(offset, 7),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn parse_var_out_of_range() {
        assert!(matches!(
            parse_polynomial_with_vars("z0^2+z5^3", 3),
            Err(Error::VarOutOfRange { index: 5, vars: 3 })
        ));
    }

    #[test]
    fn render_round_trip() {
        for text in [
            "z0^2 + z1^3 + z2^3 + z3^18",
            "z0^3+z0*z1^4+z1*z2^5",
            "-z0^2 + 3/4*z1^5 - 2*z0*z1",
        ] {
            let f = parse_polynomial(text).unwrap();
            let g = parse_polynomial(&f.render()).unwrap();
            assert_eq!(f, g, "round trip failed for {text}");
        }
    }

    #[test]
    fn standard_families() {
        let f = make_standard(StandardKind::BP, &bp_exps(&[2, 3, 3, 18])).unwrap();
        assert_eq!(f, parse_polynomial("z0^2+z1^3+z2^3+z3^18").unwrap());
        let f = make_standard(StandardKind::Chain, &bp_exps(&[2, 3, 4])).unwrap();
        assert_eq!(f, parse_polynomial("z0^2+z0*z1^3+z1*z2^4").unwrap());
        let f = make_standard(StandardKind::BP, &bp_exps(&[2])).unwrap();
        assert_eq!(f.render(), "z0^2");
        assert!(make_standard(StandardKind::BP, &bp_exps(&[2, 1])).is_err());
    }

    #[test]
    fn infer_weights_examples() {
        let f = parse_polynomial("z0^2+z1^3+z2^3+z3^18").unwrap();
        let l = infer_weights(&f).unwrap();
        assert_eq!(l.weights(), &bp_exps(&[9, 6, 6, 1])[..]);
        assert_eq!(l.degree(), &int(18));

        let f = parse_polynomial("z0^2+z0*z1^3+z1*z2^4").unwrap();
        let l = infer_weights(&f).unwrap();
        assert_eq!(l.weights(), &bp_exps(&[12, 4, 5])[..]);
        assert_eq!(l.degree(), &int(24));

        let f = parse_polynomial("z0^2+z0").unwrap();
        assert!(matches!(infer_weights(&f), Err(Error::NoPositiveWeights)));
    }

    #[test]
    fn infer_weights_ambiguous() {
        // single monomial in two variables: 2-dimensional solution space
        let f = parse_polynomial("z0*z1").unwrap();
        assert!(matches!(infer_weights(&f), Err(Error::AmbiguousWeights)));
    }

    #[test]
    fn infer_matches_from_bp() {
        for a in [[2i64, 3, 3, 18], [2, 2, 2, 5], [2, 3, 5, 75], [3, 4, 5, 7]] {
            let exps = bp_exps(&a);
            let f = make_standard(StandardKind::BP, &exps).unwrap();
            let inferred = infer_weights(&f).unwrap();
            let direct = from_bp(&BPExponents::new(exps).unwrap());
            assert_eq!(inferred, direct);
        }
    }

    #[test]
    fn homogeneity_check() {
        let f = parse_polynomial("z0^2+z1^3+z2^3+z3^18").unwrap();
        let l = LinkDescriptor::new(bp_exps(&[9, 6, 6, 1]), int(18)).unwrap();
        assert!(is_weighted_homogeneous(&f, &l).unwrap());
        let f = parse_polynomial("z0^2+z1^3").unwrap();
        let l = LinkDescriptor::new(bp_exps(&[1, 1, 1]), int(2)).unwrap();
        assert!(is_weighted_homogeneous(&f, &l).is_err()); // 2 vs 3 variables
        let f = parse_polynomial_with_vars("z0^2+z1^3", 3).unwrap();
        assert!(!is_weighted_homogeneous(&f, &l).unwrap());
        let f = parse_polynomial_with_vars("z0^2+z1^2", 3).unwrap();
        assert!(is_weighted_homogeneous(&f, &l).unwrap());
    }

    #[test]
    fn curve_quasismoothness() {
        let f = make_standard(StandardKind::BP, &bp_exps(&[2, 3, 4])).unwrap();
        let l = infer_weights(&f).unwrap();
        assert!(quasismooth_curve(&f, &l).unwrap().verdict);

        // every monomial involves z2, so condition (2) fails there
        let f = parse_polynomial_with_vars("z0^2*z2 + z1^2*z2 + z0*z2^2", 3).unwrap();
        let l = LinkDescriptor::new(bp_exps(&[1, 1, 1]), int(3)).unwrap();
        let report = quasismooth_curve(&f, &l).unwrap();
        assert!(!report.verdict);
        let failing = report
            .certificates
            .iter()
            .find(|c| !c.satisfied)
            .unwrap();
        assert!(failing.condition.contains("z2"));

        let f = parse_polynomial("z0^3+z0*z1^3+z1*z2^4").unwrap();
        let l = infer_weights(&f).unwrap();
        assert!(quasismooth_curve(&f, &l).unwrap().verdict);
    }

    #[test]
    fn surface_quasismoothness() {
        let f = make_standard(StandardKind::BP, &bp_exps(&[2, 3, 3, 18])).unwrap();
        let l = infer_weights(&f).unwrap();
        assert!(quasismooth_surface(&f, &l).unwrap().verdict);

        let f = parse_polynomial_with_vars("z0^2+z1^3+z2^3", 4).unwrap();
        let l = LinkDescriptor::new(bp_exps(&[3, 2, 2, 1]), int(6)).unwrap();
        let report = quasismooth_surface(&f, &l).unwrap();
        assert!(!report.verdict);
        let failing = report.certificates.iter().find(|c| !c.satisfied).unwrap();
        assert!(failing.condition.contains("z3"));

        let f = make_standard(StandardKind::Chain, &bp_exps(&[2, 3, 4, 5])).unwrap();
        let l = infer_weights(&f).unwrap();
        assert!(quasismooth_surface(&f, &l).unwrap().verdict);
    }

    #[test]
    fn quasismoothness_ignores_coefficients() {
        let f = parse_polynomial("z0^2+z1^3+z2^3+z3^18").unwrap();
        let g = parse_polynomial("5*z0^2-7/3*z1^3+z2^3+11*z3^18").unwrap();
        let l = infer_weights(&f).unwrap();
        let a = quasismooth_surface(&f, &l).unwrap();
        let b = quasismooth_surface(&g, &l).unwrap();
        assert_eq!(a.verdict, b.verdict);
    }
}
