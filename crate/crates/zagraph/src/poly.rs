//! Polynomials over `Z_n`, used to present finite fields and quotient rings.

use std::fmt;

use crate::error::Error;

/// A polynomial with coefficients in `Z_modulus`, stored lowest degree first
/// with trailing zeros trimmed.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    modulus: u64,
    coeffs: Vec<u64>,
}

impl Polynomial {
    /// Builds a polynomial, reducing every coefficient mod `modulus` and
    /// trimming trailing zeros.
    pub fn new(modulus: u64, coeffs: Vec<u64>) -> Self {
        assert!(modulus >= 2, "coefficient modulus must be at least 2");
        let mut coeffs: Vec<u64> = coeffs.into_iter().map(|c| c % modulus).collect();
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Polynomial { modulus, coeffs }
    }

    pub fn zero(modulus: u64) -> Self {
        Polynomial::new(modulus, vec![])
    }

    /// The monomial `x` over `Z_modulus`.
    pub fn x(modulus: u64) -> Self {
        Polynomial::new(modulus, vec![0, 1])
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn coeff(&self, degree: usize) -> u64 {
        self.coeffs.get(degree).copied().unwrap_or(0)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last() == Some(&1)
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        debug_assert_eq!(self.modulus, other.modulus);
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero(self.modulus);
        }
        let mut out = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = (out[i + j] + a * b) % self.modulus;
            }
        }
        Polynomial::new(self.modulus, out)
    }

    /// Remainder of `self` divided by a monic `divisor`. Monic division is
    /// well defined over `Z_n` even when `n` is composite.
    pub fn rem(&self, divisor: &Polynomial) -> Polynomial {
        debug_assert_eq!(self.modulus, divisor.modulus);
        debug_assert!(divisor.is_monic());
        let d = divisor.degree().expect("monic divisor is nonzero");
        let m = self.modulus;
        let mut rem = self.coeffs.clone();
        while rem.len() > d {
            let lead = *rem.last().unwrap();
            let shift = rem.len() - 1 - d;
            if lead != 0 {
                for (i, &c) in divisor.coeffs.iter().enumerate() {
                    let k = shift + i;
                    rem[k] = (rem[k] + m * lead - (lead * c) % m) % m;
                }
            }
            rem.pop();
        }
        Polynomial::new(m, rem)
    }

    /// Exhaustive irreducibility test over `Z_p` (`p` prime): trial division
    /// by every monic polynomial of degree `1..=deg/2`.
    pub fn is_irreducible(&self) -> bool {
        let deg = match self.degree() {
            None | Some(0) => return false,
            Some(d) => d,
        };
        if deg == 1 {
            return true;
        }
        let p = self.modulus;
        for d in 1..=deg / 2 {
            let count = p.pow(d as u32);
            for lower in 0..count {
                let mut coeffs = decode_coeffs(lower, p, d);
                coeffs.push(1);
                let divisor = Polynomial::new(p, coeffs);
                if self.rem(&divisor).is_zero() {
                    return false;
                }
            }
        }
        true
    }
}

fn decode_coeffs(mut index: u64, base: u64, len: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(len);
    for _ in 0..len {
        out.push(index % base);
        index /= base;
    }
    out
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (deg, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, "+")?;
            }
            first = false;
            match deg {
                0 => write!(f, "{c}")?,
                1 if c == 1 => write!(f, "x")?,
                1 => write!(f, "{c}x")?,
                _ if c == 1 => write!(f, "x^{deg}")?,
                _ => write!(f, "{c}x^{deg}")?,
            }
        }
        Ok(())
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Splits a prime power `q = p^s` into `(p, s)`; `None` when `q` is not one.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 2;
    while p * p <= q {
        if q.is_multiple_of(p) {
            let mut rest = q;
            let mut s = 0;
            while rest.is_multiple_of(p) {
                rest /= p;
                s += 1;
            }
            return if rest == 1 { Some((p, s)) } else { None };
        }
        p += 1;
    }
    Some((q, 1))
}

/// The lexicographically smallest monic irreducible polynomial of degree `s`
/// over `Z_p`, comparing coefficient tuples from the constant term up.
pub fn find_irreducible(p: u64, s: u32) -> Result<Polynomial, Error> {
    if !is_prime(p) {
        return Err(Error::InvalidCharacteristic(p));
    }
    if s == 0 {
        return Err(Error::InvalidOrder(1));
    }
    let s = s as usize;
    let count = p.pow(s as u32);
    for index in 0..count {
        // Decode so that the constant term is the most significant position
        // of `index`: ascending `index` walks coefficient tuples in lex order.
        let mut coeffs = vec![0u64; s + 1];
        coeffs[s] = 1;
        let mut rest = index;
        for degree in (0..s).rev() {
            coeffs[degree] = rest % p;
            rest /= p;
        }
        let candidate = Polynomial::new(p, coeffs);
        if candidate.is_irreducible() {
            return Ok(candidate);
        }
    }
    unreachable!("an irreducible polynomial of every degree exists over Z_p")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_forms() {
        assert_eq!(Polynomial::new(5, vec![1, 1, 1]).to_string(), "x^2+x+1");
        assert_eq!(Polynomial::new(5, vec![0, 2, 0, 3]).to_string(), "3x^3+2x");
        assert_eq!(Polynomial::new(5, vec![4]).to_string(), "4");
        assert_eq!(Polynomial::zero(5).to_string(), "0");
        assert_eq!(Polynomial::x(5).to_string(), "x");
    }

    #[test]
    fn rem_by_monic() {
        // x^2 mod x^2+x+1 = -(x+1) = x+1 over Z_2
        let f = Polynomial::new(2, vec![1, 1, 1]);
        let x2 = Polynomial::new(2, vec![0, 0, 1]);
        assert_eq!(x2.rem(&f), Polynomial::new(2, vec![1, 1]));
        // (x+2)(x+3) mod x+2 = 0 over Z_7
        let a = Polynomial::new(7, vec![2, 1]);
        let b = Polynomial::new(7, vec![3, 1]);
        assert!(a.mul(&b).rem(&a).is_zero());
    }

    #[test]
    fn find_irreducible_smallest() {
        assert_eq!(find_irreducible(2, 1).unwrap().to_string(), "x");
        assert_eq!(find_irreducible(2, 2).unwrap().to_string(), "x^2+x+1");
        assert_eq!(find_irreducible(3, 2).unwrap().to_string(), "x^2+1");
        assert!(matches!(
            find_irreducible(4, 1),
            Err(Error::InvalidCharacteristic(4))
        ));
    }

    #[test]
    fn irreducibility_brute_cross_check() {
        // Count monic irreducible quadratics over Z_3 two ways: trial division
        // and root counting (a quadratic is irreducible iff it has no root).
        let p = 3u64;
        let mut by_division = 0;
        let mut by_roots = 0;
        for c0 in 0..p {
            for c1 in 0..p {
                let f = Polynomial::new(p, vec![c0, c1, 1]);
                if f.is_irreducible() {
                    by_division += 1;
                }
                let has_root = (0..p).any(|x| (x * x + c1 * x + c0) % p == 0);
                if !has_root {
                    by_roots += 1;
                }
            }
        }
        assert_eq!(by_division, by_roots);
        assert_eq!(by_division, 3); // (p^2 - p) / 2
    }

    #[test]
    fn prime_power_split() {
        assert_eq!(prime_power(8), Some((2, 3)));
        assert_eq!(prime_power(49), Some((7, 2)));
        assert_eq!(prime_power(5), Some((5, 1)));
        assert_eq!(prime_power(6), None);
        assert_eq!(prime_power(1), None);
        assert_eq!(prime_power(12), None);
    }
}
