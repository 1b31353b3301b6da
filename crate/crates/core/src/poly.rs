//! Polynomials in `R[z]/(z^n - 1)`.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::expr::{self, Algebra};
use crate::ring::{ChainRing, Elem};

/// A word of length `n`, stored as the coefficient of `z^i` at index `i`.
///
/// The vector always holds exactly `n` coefficients; arithmetic lives on
/// [`PolyRing`], which knows the ring and the length.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CyclicPoly {
    coeffs: Vec<Elem>,
}

impl CyclicPoly {
    pub fn coeffs(&self) -> &[Elem] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Elem {
        self.coeffs[i]
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == Elem::ZERO)
    }

    /// Index of the highest nonzero coefficient; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.iter().rposition(|&c| c != Elem::ZERO)
    }

    pub fn leading(&self) -> Option<Elem> {
        self.degree().map(|d| self.coeffs[d])
    }

    pub fn into_coeffs(self) -> Vec<Elem> {
        self.coeffs
    }
}

/// `R[z]/(z^n - 1)` for a fixed chain ring and length.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyRing {
    ring: Arc<ChainRing>,
    n: usize,
}

impl PolyRing {
    pub fn new(ring: Arc<ChainRing>, n: usize) -> Result<PolyRing> {
        if n == 0 {
            return Err(Error::LengthMismatch {
                expected: 1,
                found: 0,
            });
        }
        Ok(PolyRing { ring, n })
    }

    pub fn ring(&self) -> &ChainRing {
        &self.ring
    }

    pub fn ring_arc(&self) -> &Arc<ChainRing> {
        &self.ring
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `|R|^n`, saturating.
    pub fn ambient_size(&self) -> u128 {
        (self.ring.size() as u128)
            .checked_pow(self.n as u32)
            .unwrap_or(u128::MAX)
    }

    pub fn zero(&self) -> CyclicPoly {
        CyclicPoly {
            coeffs: vec![Elem::ZERO; self.n],
        }
    }

    pub fn constant(&self, c: Elem) -> CyclicPoly {
        self.monomial(c, 0)
    }

    pub fn one(&self) -> CyclicPoly {
        self.constant(self.ring.one())
    }

    /// `c * z^(k mod n)`.
    pub fn monomial(&self, c: Elem, k: usize) -> CyclicPoly {
        let mut f = self.zero();
        f.coeffs[k % self.n] = c;
        f
    }

    /// The all-ones word `1 + z + ... + z^(n-1)` scaled by `c`.
    pub fn all(&self, c: Elem) -> CyclicPoly {
        CyclicPoly {
            coeffs: vec![c; self.n],
        }
    }

    pub fn from_coeffs(&self, coeffs: Vec<Elem>) -> Result<CyclicPoly> {
        let f = CyclicPoly { coeffs };
        self.check(&f)?;
        Ok(f)
    }

    /// Reduce an arbitrary-length coefficient list with `z^n = 1`.
    pub fn from_coeffs_reducing(&self, coeffs: &[Elem]) -> Result<CyclicPoly> {
        let mut f = self.zero();
        for (i, &c) in coeffs.iter().enumerate() {
            self.check_elem(c)?;
            f.coeffs[i % self.n] = self.ring.add(f.coeffs[i % self.n], c);
        }
        Ok(f)
    }

    fn check_elem(&self, c: Elem) -> Result<()> {
        if self.ring.contains(c) {
            Ok(())
        } else {
            Err(Error::ForeignElement {
                index: c.index(),
                size: self.ring.size(),
            })
        }
    }

    /// Length and element-range check.
    pub fn check(&self, f: &CyclicPoly) -> Result<()> {
        if f.len() != self.n {
            return Err(Error::LengthMismatch {
                expected: self.n,
                found: f.len(),
            });
        }
        f.coeffs.iter().try_for_each(|&c| self.check_elem(c))
    }

    pub fn add(&self, f: &CyclicPoly, g: &CyclicPoly) -> Result<CyclicPoly> {
        self.check(f)?;
        self.check(g)?;
        Ok(self.add_unchecked(f, g))
    }

    pub(crate) fn add_unchecked(&self, f: &CyclicPoly, g: &CyclicPoly) -> CyclicPoly {
        CyclicPoly {
            coeffs: f
                .coeffs
                .iter()
                .zip(&g.coeffs)
                .map(|(&a, &b)| self.ring.add(a, b))
                .collect(),
        }
    }

    pub fn neg(&self, f: &CyclicPoly) -> CyclicPoly {
        CyclicPoly {
            coeffs: f.coeffs.iter().map(|&a| self.ring.neg(a)).collect(),
        }
    }

    pub fn sub(&self, f: &CyclicPoly, g: &CyclicPoly) -> Result<CyclicPoly> {
        self.check(g)?;
        self.add(f, &self.neg(g))
    }

    /// Product with exponents reduced mod `n`.
    pub fn mul(&self, f: &CyclicPoly, g: &CyclicPoly) -> Result<CyclicPoly> {
        self.check(f)?;
        self.check(g)?;
        Ok(self.mul_unchecked(f, g))
    }

    pub(crate) fn mul_unchecked(&self, f: &CyclicPoly, g: &CyclicPoly) -> CyclicPoly {
        let n = self.n;
        let mut out = self.zero();
        for (i, &a) in f.coeffs.iter().enumerate() {
            if a == Elem::ZERO {
                continue;
            }
            for (j, &b) in g.coeffs.iter().enumerate() {
                let slot = &mut out.coeffs[(i + j) % n];
                *slot = self.ring.add(*slot, self.ring.mul(a, b));
            }
        }
        out
    }

    pub fn scale(&self, c: Elem, f: &CyclicPoly) -> CyclicPoly {
        CyclicPoly {
            coeffs: f.coeffs.iter().map(|&a| self.ring.mul(c, a)).collect(),
        }
    }

    /// `z^k * f`: a cyclic shift of the word by `k` places.
    pub fn shift(&self, f: &CyclicPoly, k: usize) -> CyclicPoly {
        let mut coeffs = f.coeffs.clone();
        coeffs.rotate_right(k % self.n);
        CyclicPoly { coeffs }
    }

    /// `z^deg(f) f(1/z)`: the coefficients up to the degree, reversed.
    pub fn reciprocal(&self, f: &CyclicPoly) -> Result<CyclicPoly> {
        self.check(f)?;
        let s = f.degree().ok_or(Error::ZeroPolynomial)?;
        let mut out = self.zero();
        for i in 0..=s {
            out.coeffs[i] = f.coeffs[s - i];
        }
        Ok(out)
    }

    /// The full length-`n` word read backwards, `(a_{n-1}, ..., a_0)`.
    pub fn word_reverse(&self, f: &CyclicPoly) -> CyclicPoly {
        let mut coeffs = f.coeffs.clone();
        coeffs.reverse();
        CyclicPoly { coeffs }
    }

    /// Reverse complement of the zero word: `u^{-1} k (1 + z + ... + z^(n-1))`.
    pub fn zero_rc(&self, u: Elem, k: Elem) -> Result<CyclicPoly> {
        self.ring.check_uk(u, k)?;
        let c = self.ring.mul(self.ring.invert(u)?, k);
        Ok(self.all(c))
    }

    /// Complement every coefficient, then read the word backwards.
    pub fn rc_transform(&self, f: &CyclicPoly, u: Elem, k: Elem) -> Result<CyclicPoly> {
        self.check(f)?;
        self.ring.check_uk(u, k)?;
        let n = self.n;
        let coeffs = (0..n)
            .map(|i| self.ring.complement(f.coeffs[n - 1 - i], u, k))
            .collect::<Result<Vec<_>>>()?;
        Ok(CyclicPoly { coeffs })
    }

    /// Parse a polynomial in `z`; `h` stands for `z + 1`.
    pub fn parse(&self, text: &str) -> Result<CyclicPoly> {
        expr::evaluate(text, self)
    }

    pub fn render(&self, f: &CyclicPoly) -> String {
        let terms: Vec<String> = f
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != Elem::ZERO)
            .map(|(i, &c)| {
                let coeff = self.ring.render(c);
                let compound = coeff.contains('+');
                let power = match i {
                    0 => {
                        return if compound {
                            format!("({coeff})")
                        } else {
                            coeff
                        }
                    }
                    1 => "z".to_string(),
                    _ => format!("z^{i}"),
                };
                if c == self.ring.one() {
                    power
                } else if compound {
                    format!("({coeff})*{power}")
                } else {
                    format!("{coeff}*{power}")
                }
            })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }

    pub fn display<'a>(&'a self, f: &'a CyclicPoly) -> impl fmt::Display + 'a {
        struct Shown<'a>(&'a PolyRing, &'a CyclicPoly);
        impl fmt::Display for Shown<'_> {
            fn fmt(&self, fmt: &mut fmt::Formatter<'_>) -> fmt::Result {
                fmt.write_str(&self.0.render(self.1))
            }
        }
        Shown(self, f)
    }

    /// Dense integer key: the coefficients read as base-`|R|` digits, `z^0` least significant.
    ///
    /// Only meaningful when [`PolyRing::ambient_size`] fits in a `u64`.
    pub fn key(&self, f: &CyclicPoly) -> u64 {
        let base = self.ring.size() as u64;
        f.coeffs
            .iter()
            .rev()
            .fold(0u64, |acc, c| acc * base + c.index() as u64)
    }

    pub fn from_key(&self, mut key: u64) -> CyclicPoly {
        let base = self.ring.size() as u64;
        let coeffs = (0..self.n)
            .map(|_| {
                let c = (key % base) as u32;
                key /= base;
                self.ring.elem(c).expect("digit below ring size")
            })
            .collect();
        CyclicPoly { coeffs }
    }
}

impl Algebra for PolyRing {
    type Value = CyclicPoly;

    fn integer(&self, value: u64) -> CyclicPoly {
        self.constant(self.ring.from_int(value))
    }

    fn symbol(&self, name: char) -> Option<CyclicPoly> {
        match name {
            'z' => Some(self.monomial(self.ring.one(), 1)),
            'h' => Some(self.add_unchecked(&self.monomial(self.ring.one(), 1), &self.one())),
            other => self.ring.symbol(other).map(|c| self.constant(c)),
        }
    }

    fn add(&self, a: &CyclicPoly, b: &CyclicPoly) -> CyclicPoly {
        self.add_unchecked(a, b)
    }

    fn neg(&self, a: &CyclicPoly) -> CyclicPoly {
        PolyRing::neg(self, a)
    }

    fn mul(&self, a: &CyclicPoly, b: &CyclicPoly) -> CyclicPoly {
        self.mul_unchecked(a, b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pr(spec: &str, n: usize) -> PolyRing {
        PolyRing::new(Arc::new(ChainRing::parse(spec).unwrap()), n).unwrap()
    }

    fn p(r: &PolyRing, text: &str) -> CyclicPoly {
        r.parse(text).unwrap()
    }

    #[test]
    fn add_examples() {
        let r = pr("F2[v]/v^3", 4);
        assert_eq!(r.add(&p(&r, "1+z"), &p(&r, "1+z")).unwrap(), r.zero());
        let f = p(&r, "(1+v)*z^3 + v");
        assert_eq!(r.add(&f, &r.zero()).unwrap(), f);
        assert_eq!(r.add(&p(&r, "v"), &p(&r, "v^2")).unwrap(), p(&r, "v+v^2"));
        let short = CyclicPoly {
            coeffs: vec![Elem::ZERO; 3],
        };
        assert!(matches!(
            r.add(&f, &short),
            Err(Error::LengthMismatch { .. })
        ));
    }

    #[test]
    fn mul_examples() {
        let r = pr("F2[v]/v^3", 4);
        assert_eq!(r.mul(&p(&r, "z^3"), &p(&r, "z")).unwrap(), r.one());
        // (z+1)(z^2+1) = z^3 + z^2 + z + 1
        assert_eq!(
            r.mul(&p(&r, "z+1"), &p(&r, "z^2+1")).unwrap(),
            p(&r, "1+z+z^2+z^3")
        );
        // (z^2+v)^2 = z^4 + 2vz^2 + v^2 = 1 + v^2 in characteristic 2
        let g = p(&r, "z^2+v");
        assert_eq!(r.mul(&g, &g).unwrap(), p(&r, "1+v^2"));
    }

    #[test]
    fn reciprocal_examples() {
        let r = pr("F2[v]/v^3", 4);
        assert_eq!(r.reciprocal(&p(&r, "1+z")).unwrap(), p(&r, "1+z"));
        assert_eq!(r.reciprocal(&p(&r, "v+z^2")).unwrap(), p(&r, "1+v*z^2"));
        assert_eq!(r.reciprocal(&r.one()).unwrap(), r.one());
        assert_eq!(r.reciprocal(&p(&r, "z^2")).unwrap(), r.one());
        assert_eq!(r.reciprocal(&r.zero()), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn zero_rc_examples() {
        let r = pr("F2[v]/v^3", 4);
        let one = r.ring().one();
        assert_eq!(r.zero_rc(one, one).unwrap(), p(&r, "1+z+z^2+z^3"));
        assert_eq!(r.zero_rc(one, Elem::ZERO).unwrap(), r.zero());
        assert!(matches!(
            r.zero_rc(r.ring().parse_elem("1+v").unwrap(), one),
            Err(Error::InvalidUk { .. })
        ));
        let z4 = pr("Z4", 3);
        let (u, k) = (z4.ring().from_int(3), z4.ring().from_int(2));
        assert_eq!(z4.zero_rc(u, k).unwrap(), p(&z4, "2+2z+2z^2"));
    }

    #[test]
    fn rc_transform_examples() {
        let r = pr("F2[v]/v^3", 4);
        let one = r.ring().one();
        assert_eq!(
            r.rc_transform(&r.zero(), one, one).unwrap(),
            p(&r, "1+z+z^2+z^3")
        );
        // (1,1,0,0) -> complements (0,0,1,1) -> reversed (1,1,0,0)
        assert_eq!(
            r.rc_transform(&p(&r, "1+z"), one, one).unwrap(),
            p(&r, "1+z")
        );
        assert_eq!(
            r.rc_transform(&p(&r, "v*z^3"), one, one).unwrap(),
            p(&r, "(1+v)+z+z^2+z^3")
        );
    }

    #[test]
    fn parse_examples() {
        let r = pr("F2[v]/v^3", 4);
        let v = r.ring().gamma();
        let v2 = r.ring().mul(v, v);
        assert_eq!(
            p(&r, "v*z + v^2").coeffs(),
            &[v2, v, Elem::ZERO, Elem::ZERO]
        );
        assert_eq!(p(&r, "z^4"), r.one());
        assert_eq!(p(&r, "0"), r.zero());
        assert_eq!(p(&r, "(1+v)*z^2 + v^2"), p(&r, "v^2 + z^2 + v z^2"));
        assert_eq!(p(&r, "vh+v^2"), p(&r, "v*z + v + v^2"));
        assert!(r.parse("z + y").is_err());
        assert!(r.parse("z +").is_err());
        assert!(r.parse("z ^ ^ 2").is_err());
    }

    #[test]
    fn render_examples() {
        let r = pr("F2[v]/v^3", 4);
        assert_eq!(r.render(&p(&r, "v*z + v^2")), "v^2 + v*z");
        assert_eq!(r.render(&p(&r, "(1+v)*z^2 + 1 + v")), "(1+v) + (1+v)*z^2");
        assert_eq!(r.render(&p(&r, "z^3 + z")), "z + z^3");
        assert_eq!(r.render(&r.zero()), "0");
        let z4 = pr("Z4", 3);
        assert_eq!(z4.render(&p(&z4, "-z + 2")), "2 + 3*z");
    }

    #[test]
    fn keys_round_trip() {
        let r = pr("F2[v]/v^3", 4);
        let f = p(&r, "(1+v)*z^2 + v^2 + z^3");
        assert_eq!(r.from_key(r.key(&f)), f);
        assert_eq!(r.key(&r.zero()), 0);
        assert_eq!(r.key(&r.one()), 1);
        assert_eq!(r.key(&p(&r, "z+1")), 9);
        assert_eq!(r.ambient_size(), 4096);
    }
}
