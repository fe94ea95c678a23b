//! The ring-expression language of the command line.
//!
//! ```text
//! expr     := atom ( "x" atom )*              left-associative direct product
//! atom     := "Z" nat
//!           | "GF(" nat ")"
//!           | "M" nat "(" expr ")"
//!           | "Z" nat "[x]/(" poly ")"
//!           | "(" expr ")"
//! poly     := monomial ("+" monomial)*
//! monomial := nat | nat "x^" nat | "x^" nat | nat "x" | "x"
//! ```
//!
//! Whitespace is insignificant everywhere. At expression level `x` is the
//! product operator; inside `/( ... )` it is the indeterminate.

use crate::error::{Error, ParseError};
use crate::poly::{prime_power, Polynomial};
use crate::ring::{
    make_gf_with, make_matrix_ring_with, make_poly_quotient_with, make_product_with, make_zn_with,
    BuildConfig, FiniteRing,
};

/// Abstract syntax of a ring expression.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RingSpec {
    ZMod(u64),
    Gf(u64),
    Product(Vec<RingSpec>),
    Matrix(usize, Box<RingSpec>),
    PolyQuotient(u64, Polynomial),
}

impl RingSpec {
    /// Dimension of a top-level matrix construction.
    pub fn matrix_dim(&self) -> Option<usize> {
        match self {
            RingSpec::Matrix(k, _) => Some(*k),
            _ => None,
        }
    }

    /// Number of factors of a top-level product construction.
    pub fn product_arity(&self) -> Option<usize> {
        match self {
            RingSpec::Product(fs) => Some(fs.len()),
            _ => None,
        }
    }
}

/// Canonical rendering; `parse_ring_expr(render(s)) == s` for every valid spec.
pub fn render(spec: &RingSpec) -> String {
    match spec {
        RingSpec::ZMod(n) => format!("Z{n}"),
        RingSpec::Gf(q) => format!("GF({q})"),
        RingSpec::Matrix(k, inner) => format!("M{k}({})", render(inner)),
        RingSpec::PolyQuotient(n, f) => format!("Z{n}[x]/({f})"),
        RingSpec::Product(factors) => factors
            .iter()
            .map(|f| match f {
                RingSpec::Product(_) => format!("({})", render(f)),
                _ => render(f),
            })
            .collect::<Vec<_>>()
            .join(" x "),
    }
}

pub fn parse_ring_expr(text: &str) -> Result<RingSpec, ParseError> {
    let mut parser = Parser {
        src: text.as_bytes(),
        pos: 0,
    };
    let spec = parser.expr()?;
    parser.skip_ws();
    if parser.pos < parser.src.len() {
        return Err(parser.syntax(vec!["end of input", "x"]));
    }
    Ok(spec)
}

pub fn elaborate(spec: &RingSpec) -> Result<FiniteRing, Error> {
    elaborate_with(spec, &BuildConfig::default())
}

/// Dispatches to the ring constructors; the resulting label is the canonical
/// rendering of the spec.
pub fn elaborate_with(spec: &RingSpec, cfg: &BuildConfig) -> Result<FiniteRing, Error> {
    let ring = match spec {
        RingSpec::ZMod(n) => make_zn_with(*n, cfg),
        RingSpec::Gf(q) => {
            let (p, s) = prime_power(*q).ok_or(Error::InvalidCharacteristic(*q))?;
            make_gf_with(p, s, cfg)
        }
        RingSpec::Product(factors) => {
            let elaborated: Result<Vec<FiniteRing>, Error> =
                factors.iter().map(|f| elaborate_with(f, cfg)).collect();
            make_product_with(elaborated?, cfg)
        }
        RingSpec::Matrix(k, inner) => {
            let base = elaborate_with(inner, cfg)?;
            make_matrix_ring_with(&base, *k, cfg)
        }
        RingSpec::PolyQuotient(n, f) => make_poly_quotient_with(*n, f, cfg),
    };
    let ring = ring.map_err(|e| match e {
        Error::Capacity(msg) => Error::Capacity(format!("{msg} (in `{}`)", render(spec))),
        other => other,
    })?;
    Ok(ring.with_label(render(spec)))
}

const MAX_POLY_DEGREE: u64 = 4096;

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.src.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn found(&self) -> String {
        match self.peek() {
            Some(b) => format!("`{}`", b as char),
            None => "end of input".to_string(),
        }
    }

    fn syntax(&self, expected: Vec<&'static str>) -> ParseError {
        ParseError::Syntax {
            offset: self.pos,
            expected,
            found: self.found(),
        }
    }

    fn semantic(&self, offset: usize, message: impl Into<String>) -> ParseError {
        ParseError::Semantic {
            offset,
            message: message.into(),
        }
    }

    fn eat(&mut self, b: u8) -> bool {
        self.skip_ws();
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, b: u8, name: &'static str) -> Result<(), ParseError> {
        if self.eat(b) {
            Ok(())
        } else {
            Err(self.syntax(vec![name]))
        }
    }

    fn nat(&mut self) -> Result<(u64, usize), ParseError> {
        self.skip_ws();
        let start = self.pos;
        if !self.peek().is_some_and(|b| b.is_ascii_digit()) {
            return Err(self.syntax(vec!["a number"]));
        }
        let mut value: u64 = 0;
        while let Some(b) = self.peek() {
            if !b.is_ascii_digit() {
                break;
            }
            value = value
                .checked_mul(10)
                .and_then(|v| v.checked_add((b - b'0') as u64))
                .ok_or_else(|| self.semantic(start, "number too large"))?;
            self.pos += 1;
        }
        Ok((value, start))
    }

    fn expr(&mut self) -> Result<RingSpec, ParseError> {
        let mut factors = vec![self.atom()?];
        loop {
            self.skip_ws();
            if self.peek() == Some(b'x') {
                self.pos += 1;
                factors.push(self.atom()?);
            } else {
                break;
            }
        }
        Ok(if factors.len() == 1 {
            factors.pop().expect("one factor")
        } else {
            RingSpec::Product(factors)
        })
    }

    fn atom(&mut self) -> Result<RingSpec, ParseError> {
        self.skip_ws();
        match self.peek() {
            Some(b'Z') => {
                self.pos += 1;
                let (n, offset) = self.nat()?;
                if n < 2 {
                    return Err(self.semantic(offset, format!("ring order {n} must be at least 2")));
                }
                self.skip_ws();
                if self.peek() == Some(b'[') {
                    self.pos += 1;
                    self.expect(b'x', "x")?;
                    self.expect(b']', "]")?;
                    self.expect(b'/', "/")?;
                    self.expect(b'(', "(")?;
                    let poly_offset = self.pos;
                    let poly = self.poly(n)?;
                    self.expect(b')', ")")?;
                    if !poly.is_monic() || poly.degree() == Some(0) || poly.is_zero() {
                        return Err(self.semantic(
                            poly_offset,
                            "polynomial modulus must be monic of degree at least 1",
                        ));
                    }
                    Ok(RingSpec::PolyQuotient(n, poly))
                } else {
                    Ok(RingSpec::ZMod(n))
                }
            }
            Some(b'G') => {
                self.pos += 1;
                self.expect(b'F', "GF")?;
                self.expect(b'(', "(")?;
                let (q, offset) = self.nat()?;
                self.expect(b')', ")")?;
                if prime_power(q).is_none() {
                    return Err(self.semantic(offset, format!("{q} is not a prime power")));
                }
                Ok(RingSpec::Gf(q))
            }
            Some(b'M') => {
                self.pos += 1;
                let (k, offset) = self.nat()?;
                if k < 1 {
                    return Err(self.semantic(offset, "matrix dimension must be at least 1"));
                }
                self.expect(b'(', "(")?;
                let inner = self.expr()?;
                self.expect(b')', ")")?;
                Ok(RingSpec::Matrix(k as usize, Box::new(inner)))
            }
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                self.expect(b')', ")")?;
                Ok(inner)
            }
            _ => Err(self.syntax(vec!["Z", "GF", "M", "("])),
        }
    }

    fn poly(&mut self, modulus: u64) -> Result<Polynomial, ParseError> {
        let mut coeffs: Vec<u64> = Vec::new();
        loop {
            let (coeff, degree) = self.monomial()?;
            if coeffs.len() <= degree as usize {
                coeffs.resize(degree as usize + 1, 0);
            }
            let slot = &mut coeffs[degree as usize];
            *slot = ((*slot as u128 + coeff as u128) % modulus as u128) as u64;
            if !self.eat(b'+') {
                break;
            }
        }
        Ok(Polynomial::new(modulus, coeffs))
    }

    fn monomial(&mut self) -> Result<(u64, u64), ParseError> {
        self.skip_ws();
        let explicit_coeff = self.peek().is_some_and(|b| b.is_ascii_digit());
        let coeff = if explicit_coeff { self.nat()?.0 } else { 1 };
        self.skip_ws();
        if self.peek() == Some(b'x') {
            self.pos += 1;
            self.skip_ws();
            if self.peek() == Some(b'^') {
                self.pos += 1;
                let (e, offset) = self.nat()?;
                if e > MAX_POLY_DEGREE {
                    return Err(self.semantic(offset, "polynomial degree too large"));
                }
                Ok((coeff, e))
            } else {
                Ok((coeff, 1))
            }
        } else if explicit_coeff {
            Ok((coeff, 0))
        } else {
            Err(self.syntax(vec!["a number", "x"]))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parse_examples() {
        assert_eq!(
            parse_ring_expr("Z5 x Z5").unwrap(),
            RingSpec::Product(vec![RingSpec::ZMod(5), RingSpec::ZMod(5)])
        );
        assert_eq!(
            parse_ring_expr("Z2[x]/(x^2)").unwrap(),
            RingSpec::PolyQuotient(2, Polynomial::new(2, vec![0, 0, 1]))
        );
        assert_eq!(parse_ring_expr("GF(4)").unwrap(), RingSpec::Gf(4));
        assert_eq!(
            parse_ring_expr("M2(Z2)").unwrap(),
            RingSpec::Matrix(2, Box::new(RingSpec::ZMod(2)))
        );
        assert_eq!(
            parse_ring_expr(" ( Z2 x GF( 9 ) ) x Z3 ").unwrap(),
            RingSpec::Product(vec![
                RingSpec::Product(vec![RingSpec::ZMod(2), RingSpec::Gf(9)]),
                RingSpec::ZMod(3)
            ])
        );
        // whitespace-insensitive, including inside the quotient notation
        assert_eq!(
            parse_ring_expr("Z2 [x] / ( x^2 + x + 1 )").unwrap(),
            RingSpec::PolyQuotient(2, Polynomial::new(2, vec![1, 1, 1]))
        );
    }

    #[test]
    fn semantic_errors() {
        match parse_ring_expr("GF(6)") {
            Err(ParseError::Semantic { offset, message }) => {
                assert_eq!(offset, 3);
                assert!(message.contains("prime power"));
            }
            other => panic!("expected semantic error, got {other:?}"),
        }
        assert!(matches!(
            parse_ring_expr("Z1"),
            Err(ParseError::Semantic { .. })
        ));
        assert!(matches!(
            parse_ring_expr("M0(Z2)"),
            Err(ParseError::Semantic { .. })
        ));
        // 2x+1 over Z4 is not monic
        assert!(matches!(
            parse_ring_expr("Z4[x]/(2x+1)"),
            Err(ParseError::Semantic { .. })
        ));
        // x + x = 0 over Z2: degree collapses
        assert!(matches!(
            parse_ring_expr("Z2[x]/(x+x)"),
            Err(ParseError::Semantic { .. })
        ));
    }

    #[test]
    fn syntax_errors_carry_offsets() {
        match parse_ring_expr("Z5 x") {
            Err(ParseError::Syntax {
                offset, expected, ..
            }) => {
                assert_eq!(offset, 4);
                assert!(expected.contains(&"Z"));
            }
            other => panic!("expected syntax error, got {other:?}"),
        }
        match parse_ring_expr("Q5") {
            Err(ParseError::Syntax { offset, .. }) => assert_eq!(offset, 0),
            other => panic!("expected syntax error, got {other:?}"),
        }
        assert!(matches!(
            parse_ring_expr("Z6 Z7"),
            Err(ParseError::Syntax { .. })
        ));
        assert!(matches!(
            parse_ring_expr("M2(Z2"),
            Err(ParseError::Syntax { .. })
        ));
        assert!(matches!(parse_ring_expr(""), Err(ParseError::Syntax { .. })));
    }

    #[test]
    fn elaborate_examples() {
        let mixed = elaborate(
            &parse_ring_expr("Z2 x GF(4)").unwrap(),
        )
        .unwrap();
        assert_eq!(mixed.order(), 8);
        assert_eq!(mixed.label(), "Z2 x GF(4)");

        let m2 = elaborate(&parse_ring_expr("M2(Z2)").unwrap()).unwrap();
        assert_eq!(m2.order(), 16);
        assert!(!m2.is_commutative());

        let z2 = elaborate(&parse_ring_expr("Z2").unwrap()).unwrap();
        assert!(z2.tables_equal(&crate::ring::make_zn(2).unwrap()));

        // capacity failures point at the offending subexpression
        match elaborate(&parse_ring_expr("Z2 x M2(Z16)").unwrap()) {
            Err(Error::Capacity(msg)) => assert!(msg.contains("M2(Z16)"), "{msg}"),
            other => panic!("expected capacity error, got {other:?}"),
        }
    }

    #[test]
    fn gf_label_and_tables() {
        let f8 = elaborate(&parse_ring_expr("GF(8)").unwrap()).unwrap();
        assert_eq!(f8.label(), "GF(8)");
        assert!(f8.tables_equal(&crate::ring::make_gf(2, 3).unwrap()));
    }

    fn spec_strategy() -> impl Strategy<Value = RingSpec> {
        let leaf = prop_oneof![
            (2u64..20).prop_map(RingSpec::ZMod),
            proptest::sample::select(vec![2u64, 3, 4, 5, 7, 8, 9, 16, 25, 27]).prop_map(RingSpec::Gf),
            (2u64..5, 1usize..3).prop_map(|(n, d)| {
                let mut coeffs = vec![1; d + 1]; // 1 + x + ... + x^d, monic
                coeffs[0] = 1;
                RingSpec::PolyQuotient(n, Polynomial::new(n, coeffs))
            }),
        ];
        leaf.prop_recursive(2, 8, 3, |inner| {
            prop_oneof![
                proptest::collection::vec(inner.clone(), 2..4).prop_map(RingSpec::Product),
                (1usize..3, inner).prop_map(|(k, s)| RingSpec::Matrix(k, Box::new(s))),
            ]
        })
    }

    proptest! {
        #[test]
        fn parse_render_round_trip(spec in spec_strategy()) {
            let rendered = render(&spec);
            let reparsed = parse_ring_expr(&rendered).unwrap();
            prop_assert_eq!(reparsed, spec);
        }
    }
}
