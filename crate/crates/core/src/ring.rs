//! Finite commutative chain rings of the shapes `Z_{p^a}` and `F_{p^m}[v]/(v^e)`.
//!
//! Elements are plain indices into the ring. The index of an element is the
//! integer whose base-`p` digits (least significant first) are its canonical
//! coordinates: the residue itself for `Z_{p^a}`, and the coefficients of
//! `c_0 + c_1 v + ... + c_{e-1} v^{e-1}` (each `c_j` in turn a polynomial in
//! `x` over `Z_p`) for the truncated family. Numeric index order is the
//! canonical element order used for every deterministic choice in the crate.

use std::fmt;

use crate::error::{Error, Result};
use crate::expr::{self, Algebra};
use crate::DEFAULT_RING_BOUND;

/// Index of an element inside its [`ChainRing`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Elem(u32);

impl Elem {
    pub const ZERO: Elem = Elem(0);

    pub fn index(self) -> u32 {
        self.0
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    /// `Z_{p^a}`.
    Integers { exponent: u32 },
    /// `F_{p^m}[v]/(v^e)`; `modulus` is the monic defining polynomial of
    /// `F_{p^m}` over `Z_p`, coefficients low to high (length `m + 1`).
    Truncated {
        degree: u32,
        exponent: u32,
        modulus: Vec<u32>,
    },
}

#[derive(Debug, Clone)]
struct Tables {
    add: Vec<u16>,
    mul: Vec<u16>,
}

/// Full Cayley tables are cached for rings up to this size.
const TABLE_LIMIT: u32 = 256;

#[derive(Debug, Clone)]
pub struct ChainRing {
    family: Family,
    p: u32,
    size: u32,
    residue_size: u32,
    nilpotency: u32,
    gamma: Elem,
    residue_mul: Option<Vec<u32>>,
    tables: Option<Tables>,
}

impl PartialEq for ChainRing {
    fn eq(&self, other: &Self) -> bool {
        self.family == other.family && self.p == other.p
    }
}

impl Eq for ChainRing {}

impl ChainRing {
    /// Parse a ring description with the default size bound.
    ///
    /// Accepted forms are `Z<p^a>` and `F<q>[v]/v^<e>` with an optional
    /// `;mod=<poly in x>` when `q` is a proper prime power.
    pub fn parse(spec: &str) -> Result<ChainRing> {
        Self::parse_with_bound(spec, DEFAULT_RING_BOUND)
    }

    pub fn parse_with_bound(spec: &str, bound: u64) -> Result<ChainRing> {
        let compact: String = spec.chars().filter(|c| !c.is_whitespace()).collect();
        if let Some(rest) = compact.strip_prefix('Z') {
            let modulus = parse_uint(spec, rest)?;
            return Self::integers_with_bound(modulus, bound);
        }
        if let Some(rest) = compact.strip_prefix('F') {
            let (q_text, after) = rest
                .split_once("[v]/v^")
                .ok_or_else(|| Error::parse(spec, "expected F<q>[v]/v^<e>"))?;
            let q = parse_uint(spec, q_text)?;
            let (e_text, modulus_text) = match after.split_once(';') {
                Some((e, m)) => {
                    let m = m
                        .strip_prefix("mod=")
                        .ok_or_else(|| Error::parse(spec, "expected ';mod=<poly>'"))?;
                    (e, Some(m))
                }
                None => (after, None),
            };
            let e = parse_uint(spec, e_text)?;
            let e = u32::try_from(e).map_err(|_| Error::parse(spec, "exponent too large"))?;
            let (p, m) = prime_power(q).ok_or(Error::NotPrimePower(q))?;
            let modulus = match modulus_text {
                None => None,
                Some(_) if m == 1 => {
                    return Err(Error::parse(
                        spec,
                        "a modulus is only meaningful for q = p^m, m > 1",
                    ))
                }
                Some(text) => Some(expr::evaluate(text, &ZpPolys { p })?),
            };
            return Self::truncated_with_bound(q, e, modulus, bound);
        }
        Err(Error::parse(spec, "ring must start with 'Z' or 'F'"))
    }

    /// `Z_N` for a prime power `N`.
    pub fn integers(modulus: u64) -> Result<ChainRing> {
        Self::integers_with_bound(modulus, DEFAULT_RING_BOUND)
    }

    fn integers_with_bound(modulus: u64, bound: u64) -> Result<ChainRing> {
        let (p, a) = prime_power(modulus).ok_or(Error::NotPrimePower(modulus))?;
        if modulus > bound {
            return Err(Error::RingTooLarge {
                size: modulus,
                bound,
            });
        }
        Ok(Self::finish(ChainRing {
            family: Family::Integers { exponent: a },
            p: p as u32,
            size: modulus as u32,
            residue_size: p as u32,
            nilpotency: a,
            gamma: Elem(if a == 1 { 0 } else { p as u32 }),
            residue_mul: None,
            tables: None,
        }))
    }

    /// `F_q[v]/(v^e)`; `modulus` defaults to the smallest irreducible of degree `m`.
    pub fn truncated(q: u64, e: u32, modulus: Option<Vec<u32>>) -> Result<ChainRing> {
        Self::truncated_with_bound(q, e, modulus, DEFAULT_RING_BOUND)
    }

    fn truncated_with_bound(
        q: u64,
        e: u32,
        modulus: Option<Vec<u32>>,
        bound: u64,
    ) -> Result<ChainRing> {
        let (p, m) = prime_power(q).ok_or(Error::NotPrimePower(q))?;
        if e == 0 {
            return Err(Error::parse(
                &format!("F{q}[v]/v^0"),
                "exponent must be positive",
            ));
        }
        let size = (q as u128).checked_pow(e).unwrap_or(u128::MAX);
        if size > bound as u128 {
            return Err(Error::RingTooLarge {
                size: size.min(u64::MAX as u128) as u64,
                bound,
            });
        }
        let p = p as u32;
        let modulus = match modulus {
            Some(mut f) => {
                while f.last() == Some(&0) {
                    f.pop();
                }
                if f.len() != m as usize + 1 || f[m as usize] != 1 || !is_irreducible(&f, p) {
                    return Err(Error::ReducibleModulus(render_zp_poly(&f)));
                }
                f
            }
            None => default_modulus(p, m),
        };
        let q = q as u32;
        let residue_mul = (q <= TABLE_LIMIT && m > 1).then(|| {
            let mut table = vec![0u32; (q * q) as usize];
            for a in 0..q {
                for b in 0..q {
                    table[(a * q + b) as usize] = residue_mul_poly(a, b, p, &modulus);
                }
            }
            table
        });
        Ok(Self::finish(ChainRing {
            family: Family::Truncated {
                degree: m,
                exponent: e,
                modulus,
            },
            p,
            size: size as u32,
            residue_size: q,
            nilpotency: e,
            gamma: Elem(if e == 1 { 0 } else { q }),
            residue_mul,
            tables: None,
        }))
    }

    fn finish(mut ring: ChainRing) -> ChainRing {
        if ring.size <= TABLE_LIMIT {
            let n = ring.size;
            let mut add = vec![0u16; (n * n) as usize];
            let mut mul = vec![0u16; (n * n) as usize];
            for a in 0..n {
                for b in 0..n {
                    add[(a * n + b) as usize] = ring.raw_add(a, b) as u16;
                    mul[(a * n + b) as usize] = ring.raw_mul(a, b) as u16;
                }
            }
            ring.tables = Some(Tables { add, mul });
        }
        ring
    }

    pub fn family(&self) -> &Family {
        &self.family
    }

    /// Residue characteristic `p`.
    pub fn characteristic_prime(&self) -> u32 {
        self.p
    }

    pub fn size(&self) -> u32 {
        self.size
    }

    /// Order of the residue field `R/<gamma>`.
    pub fn residue_size(&self) -> u32 {
        self.residue_size
    }

    /// Least `nu` with `gamma^nu = 0`.
    pub fn nilpotency(&self) -> u32 {
        self.nilpotency
    }

    /// Generator of the maximal ideal: `p` for `Z_{p^a}`, `v` otherwise.
    pub fn gamma(&self) -> Elem {
        self.gamma
    }

    pub fn zero(&self) -> Elem {
        Elem(0)
    }

    pub fn one(&self) -> Elem {
        Elem(if self.size == 1 { 0 } else { 1 })
    }

    pub fn elem(&self, index: u32) -> Result<Elem> {
        if index < self.size {
            Ok(Elem(index))
        } else {
            Err(Error::ForeignElement {
                index,
                size: self.size,
            })
        }
    }

    pub fn contains(&self, x: Elem) -> bool {
        x.0 < self.size
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> + '_ {
        (0..self.size).map(Elem)
    }

    /// Canonical coordinate vector over `Z_p`, least significant first.
    pub fn coords(&self, x: Elem) -> Vec<u32> {
        let len = self.coordinate_len();
        let mut out = Vec::with_capacity(len);
        let mut rest = x.0;
        for _ in 0..len {
            out.push(rest % self.p);
            rest /= self.p;
        }
        out
    }

    fn coordinate_len(&self) -> usize {
        match &self.family {
            Family::Integers { exponent } => *exponent as usize,
            Family::Truncated {
                degree, exponent, ..
            } => (*degree * *exponent) as usize,
        }
    }

    pub fn from_int(&self, value: u64) -> Elem {
        match self.family {
            Family::Integers { .. } => Elem((value % self.size as u64) as u32),
            Family::Truncated { .. } => Elem((value % self.p as u64) as u32),
        }
    }

    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        match &self.tables {
            Some(t) => Elem(t.add[(a.0 * self.size + b.0) as usize] as u32),
            None => Elem(self.raw_add(a.0, b.0)),
        }
    }

    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        match &self.tables {
            Some(t) => Elem(t.mul[(a.0 * self.size + b.0) as usize] as u32),
            None => Elem(self.raw_mul(a.0, b.0)),
        }
    }

    pub fn neg(&self, a: Elem) -> Elem {
        match self.family {
            Family::Integers { .. } => Elem((self.size - a.0) % self.size),
            Family::Truncated { .. } => Elem(digit_map(a.0, self.p, self.coordinate_len(), |d| {
                (self.p - d) % self.p
            })),
        }
    }

    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    pub fn pow(&self, base: Elem, mut exp: u64) -> Elem {
        let mut acc = self.one();
        let mut square = base;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, square);
            }
            square = self.mul(square, square);
            exp >>= 1;
        }
        acc
    }

    /// Largest `t <= nu` with `x` in `<gamma^t>`; zero has valuation `nu`.
    pub fn valuation(&self, x: Elem) -> u32 {
        if x.0 == 0 {
            return self.nilpotency;
        }
        let base = match self.family {
            Family::Integers { .. } => self.p,
            Family::Truncated { .. } => self.residue_size,
        };
        let mut t = 0;
        let mut rest = x.0;
        while rest.is_multiple_of(base) {
            rest /= base;
            t += 1;
        }
        t
    }

    pub fn is_unit(&self, x: Elem) -> bool {
        self.size > 1 && self.valuation(x) == 0
    }

    /// Number of units, `|R| - |R|/|R/<gamma>|`.
    pub fn unit_count(&self) -> u32 {
        self.size - self.size / self.residue_size
    }

    pub fn units(&self) -> Vec<Elem> {
        self.elements().filter(|&x| self.is_unit(x)).collect()
    }

    pub fn invert(&self, x: Elem) -> Result<Elem> {
        if !self.contains(x) {
            return Err(Error::ForeignElement {
                index: x.0,
                size: self.size,
            });
        }
        if !self.is_unit(x) {
            return Err(Error::NonUnit(self.render(x)));
        }
        // Lagrange in the unit group.
        Ok(self.pow(x, self.unit_count() as u64 - 1))
    }

    /// Whether `(u,k)` admits a complement map: `u` a unit, `u^2 = 1`, `u k = k`.
    pub fn validate_uk(&self, u: Elem, k: Elem) -> Result<bool> {
        for x in [u, k] {
            if !self.contains(x) {
                return Err(Error::ForeignElement {
                    index: x.0,
                    size: self.size,
                });
            }
        }
        Ok(self.is_unit(u) && self.mul(u, u) == self.one() && self.mul(u, k) == k)
    }

    pub(crate) fn check_uk(&self, u: Elem, k: Elem) -> Result<()> {
        if self.validate_uk(u, k)? {
            Ok(())
        } else {
            Err(Error::InvalidUk {
                u: self.render(u),
                k: self.render(k),
            })
        }
    }

    /// Every admissible `(u,k)` pair in canonical order.
    pub fn admissible_pairs(&self) -> Vec<(Elem, Elem)> {
        let mut out = Vec::new();
        for u in self.units() {
            if self.mul(u, u) != self.one() {
                continue;
            }
            for k in self.elements() {
                if self.mul(u, k) == k {
                    out.push((u, k));
                }
            }
        }
        out
    }

    /// The `(u,k)` complement of `r`: the unique `s` with `r + u s = k`.
    pub fn complement(&self, r: Elem, u: Elem, k: Elem) -> Result<Elem> {
        self.check_uk(u, k)?;
        let u_inv = self.invert(u)?;
        Ok(self.mul(u_inv, self.sub(k, r)))
    }

    /// Elements whose `Z`-span is the whole ring, with their additive orders.
    pub fn additive_generators(&self) -> Vec<(Elem, u32)> {
        match &self.family {
            Family::Integers { .. } => vec![(self.one(), self.size)],
            Family::Truncated { .. } => {
                let mut out = Vec::new();
                let mut index = 1u32;
                for _ in 0..self.coordinate_len() {
                    out.push((Elem(index), self.p));
                    index *= self.p;
                }
                out
            }
        }
    }

    pub fn parse_elem(&self, text: &str) -> Result<Elem> {
        expr::evaluate(text, self)
    }

    /// Canonical text of an element; [`ChainRing::parse_elem`] inverts it.
    pub fn render(&self, x: Elem) -> String {
        match &self.family {
            Family::Integers { .. } => x.0.to_string(),
            Family::Truncated {
                degree, exponent, ..
            } => {
                let q = self.residue_size;
                let mut terms = Vec::new();
                let mut rest = x.0;
                for j in 0..*exponent {
                    let c = rest % q;
                    rest /= q;
                    if c == 0 {
                        continue;
                    }
                    let coeff = render_residue(c, self.p, *degree);
                    let power = match j {
                        0 => {
                            terms.push(coeff);
                            continue;
                        }
                        1 => "v".to_string(),
                        _ => format!("v^{j}"),
                    };
                    terms.push(if c == 1 {
                        power
                    } else if coeff.contains('+') {
                        format!("({coeff})*{power}")
                    } else {
                        format!("{coeff}*{power}")
                    });
                }
                if terms.is_empty() {
                    "0".to_string()
                } else {
                    terms.join("+")
                }
            }
        }
    }

    fn raw_add(&self, a: u32, b: u32) -> u32 {
        match self.family {
            Family::Integers { .. } => (a + b) % self.size,
            Family::Truncated { .. } => digit_add(a, b, self.p, self.coordinate_len()),
        }
    }

    fn raw_mul(&self, a: u32, b: u32) -> u32 {
        match &self.family {
            Family::Integers { .. } => ((a as u64 * b as u64) % self.size as u64) as u32,
            Family::Truncated {
                degree, exponent, ..
            } => {
                let q = self.residue_size;
                let e = *exponent as usize;
                let split = |mut x: u32| {
                    let mut c = [0u32; 16];
                    for slot in c.iter_mut().take(e) {
                        *slot = x % q;
                        x /= q;
                    }
                    c
                };
                let (ca, cb) = (split(a), split(b));
                let mut out = [0u32; 16];
                for i in 0..e {
                    if ca[i] == 0 {
                        continue;
                    }
                    for j in 0..e - i {
                        let prod = self.residue_mul(ca[i], cb[j]);
                        out[i + j] = digit_add(out[i + j], prod, self.p, *degree as usize);
                    }
                }
                out[..e].iter().rev().fold(0, |acc, &c| acc * q + c)
            }
        }
    }

    fn residue_mul(&self, a: u32, b: u32) -> u32 {
        match (&self.residue_mul, &self.family) {
            (Some(table), _) => table[(a * self.residue_size + b) as usize],
            (None, Family::Truncated { degree: 1, .. }) => (a * b) % self.p,
            (None, Family::Truncated { modulus, .. }) => residue_mul_poly(a, b, self.p, modulus),
            (None, Family::Integers { .. }) => unreachable!("residue arithmetic only for F_q[v]"),
        }
    }
}

impl fmt::Display for ChainRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.family {
            Family::Integers { .. } => write!(f, "Z{}", self.size),
            Family::Truncated {
                degree,
                exponent,
                modulus,
            } => {
                write!(f, "F{}[v]/v^{}", self.residue_size, exponent)?;
                if *degree > 1 {
                    write!(f, ";mod={}", render_zp_poly(modulus))?;
                }
                Ok(())
            }
        }
    }
}

impl Algebra for ChainRing {
    type Value = Elem;

    fn integer(&self, value: u64) -> Elem {
        ChainRing::from_int(self, value)
    }

    fn symbol(&self, name: char) -> Option<Elem> {
        match (&self.family, name) {
            (Family::Truncated { exponent, .. }, 'v') if *exponent > 1 => Some(self.gamma),
            (Family::Truncated { .. }, 'v') => Some(self.zero()),
            (Family::Truncated { degree, .. }, 'x') if *degree > 1 => Some(Elem(self.p)),
            _ => None,
        }
    }

    fn add(&self, a: &Elem, b: &Elem) -> Elem {
        ChainRing::add(self, *a, *b)
    }

    fn neg(&self, a: &Elem) -> Elem {
        ChainRing::neg(self, *a)
    }

    fn mul(&self, a: &Elem, b: &Elem) -> Elem {
        ChainRing::mul(self, *a, *b)
    }
}

fn parse_uint(spec: &str, text: &str) -> Result<u64> {
    if text.is_empty() || !text.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::parse(
            spec,
            format!("expected an integer, found {text:?}"),
        ));
    }
    text.parse()
        .map_err(|_| Error::parse(spec, format!("integer {text:?} out of range")))
}

/// `Some((p, a))` when `n = p^a` with `p` prime and `a >= 1`.
pub fn prime_power(n: u64) -> Option<(u64, u32)> {
    if n < 2 {
        return None;
    }
    let p = (2..)
        .take_while(|d| d * d <= n)
        .find(|d| n.is_multiple_of(*d))
        .unwrap_or(n);
    let mut rest = n;
    let mut a = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        a += 1;
    }
    (rest == 1).then_some((p, a))
}

fn digit_map(x: u32, p: u32, len: usize, f: impl Fn(u32) -> u32) -> u32 {
    let mut out = 0;
    let mut scale = 1;
    let mut rest = x;
    for _ in 0..len {
        out += f(rest % p) * scale;
        rest /= p;
        scale *= p;
    }
    out
}

fn digit_add(a: u32, b: u32, p: u32, len: usize) -> u32 {
    if p == 2 {
        return a ^ b;
    }
    let mut out = 0;
    let mut scale = 1;
    let (mut ra, mut rb) = (a, b);
    for _ in 0..len {
        out += ((ra % p + rb % p) % p) * scale;
        ra /= p;
        rb /= p;
        scale *= p;
    }
    out
}

fn to_digits(mut x: u32, p: u32, len: usize) -> Vec<u32> {
    (0..len)
        .map(|_| {
            let d = x % p;
            x /= p;
            d
        })
        .collect()
}

/// Product in `Z_p[x]/(modulus)` of two residues given by their indices.
fn residue_mul_poly(a: u32, b: u32, p: u32, modulus: &[u32]) -> u32 {
    let m = modulus.len() - 1;
    let (da, db) = (to_digits(a, p, m), to_digits(b, p, m));
    let mut prod = vec![0u64; 2 * m];
    for i in 0..m {
        for j in 0..m {
            prod[i + j] += da[i] as u64 * db[j] as u64;
        }
    }
    let mut prod: Vec<u32> = prod.iter().map(|&c| (c % p as u64) as u32).collect();
    poly_rem_in_place(&mut prod, modulus, p);
    prod[..m].iter().rev().fold(0, |acc, &c| acc * p + c)
}

/// Reduce `f` modulo the monic `g` over `Z_p`, leaving the remainder in the low slots.
fn poly_rem_in_place(f: &mut [u32], g: &[u32], p: u32) {
    let dg = g.len() - 1;
    for top in (dg..f.len()).rev() {
        let c = f[top];
        if c == 0 {
            continue;
        }
        for (i, &gi) in g.iter().enumerate() {
            let slot = &mut f[top - dg + i];
            *slot = (*slot + (p - c) * gi % p) % p;
        }
    }
}

fn is_irreducible(f: &[u32], p: u32) -> bool {
    let m = f.len() - 1;
    if m == 0 {
        return false;
    }
    for d in 1..=m / 2 {
        for low in 0..p.pow(d as u32) {
            let mut g = to_digits(low, p, d);
            g.push(1);
            let mut rem = f.to_vec();
            poly_rem_in_place(&mut rem, &g, p);
            if rem[..d].iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

/// The monic irreducible of degree `m` over `Z_p` whose lower coefficients,
/// read as a base-`p` number (constant term least significant), are smallest.
fn default_modulus(p: u32, m: u32) -> Vec<u32> {
    if m == 1 {
        return vec![0, 1];
    }
    (0..p.pow(m))
        .map(|low| {
            let mut f = to_digits(low, p, m as usize);
            f.push(1);
            f
        })
        .find(|f| is_irreducible(f, p))
        .expect("an irreducible polynomial exists in every degree")
}

fn render_residue(c: u32, p: u32, m: u32) -> String {
    if m == 1 {
        return c.to_string();
    }
    render_zp_poly(&to_digits(c, p, m as usize))
}

fn render_zp_poly(f: &[u32]) -> String {
    let terms: Vec<String> = f
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(i, &c)| match (i, c) {
            (0, c) => c.to_string(),
            (1, 1) => "x".into(),
            (1, c) => format!("{c}*x"),
            (i, 1) => format!("x^{i}"),
            (i, c) => format!("{c}*x^{i}"),
        })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join("+")
    }
}

/// Polynomials over `Z_p` (coefficients low to high), for parsing moduli.
struct ZpPolys {
    p: u64,
}

impl Algebra for ZpPolys {
    type Value = Vec<u32>;

    fn integer(&self, value: u64) -> Vec<u32> {
        vec![(value % self.p) as u32]
    }

    fn symbol(&self, name: char) -> Option<Vec<u32>> {
        (name == 'x').then(|| vec![0, 1])
    }

    fn add(&self, a: &Vec<u32>, b: &Vec<u32>) -> Vec<u32> {
        let len = a.len().max(b.len());
        (0..len)
            .map(|i| {
                let s = *a.get(i).unwrap_or(&0) as u64 + *b.get(i).unwrap_or(&0) as u64;
                (s % self.p) as u32
            })
            .collect()
    }

    fn neg(&self, a: &Vec<u32>) -> Vec<u32> {
        a.iter()
            .map(|&c| ((self.p - c as u64) % self.p) as u32)
            .collect()
    }

    fn mul(&self, a: &Vec<u32>, b: &Vec<u32>) -> Vec<u32> {
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + x as u64 * y as u64) % self.p;
            }
        }
        out.into_iter().map(|c| c as u32).collect()
    }
}
