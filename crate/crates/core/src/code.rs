//! Cyclic codes as fully enumerated ideals of `R[z]/(z^n - 1)`.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::poly::{CyclicPoly, PolyRing};
use crate::ring::Elem;

/// One member `f_j` of the minimal-degree generating set, with the valuation
/// `i_j` of its leading coefficient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorEntry {
    pub poly: CyclicPoly,
    pub valuation: u32,
}

impl GeneratorEntry {
    pub fn degree(&self) -> usize {
        self.poly
            .degree()
            .expect("generating-set members are nonzero")
    }
}

#[derive(Debug, Clone)]
pub struct CyclicCode {
    space: PolyRing,
    generators: Vec<CyclicPoly>,
    /// Sorted dense keys of every codeword.
    codewords: Vec<u64>,
    fingerprint: u64,
    generating_set: Vec<GeneratorEntry>,
}

/// Membership marks used during closure; dense when the ambient space is small.
enum Marks {
    Dense(Vec<u64>),
    Sparse(HashSet<u64>),
}

impl Marks {
    fn new(ambient: u128) -> Marks {
        if ambient <= 1 << 26 {
            Marks::Dense(vec![0; (ambient as usize).div_ceil(64)])
        } else {
            Marks::Sparse(HashSet::new())
        }
    }

    fn contains(&self, key: u64) -> bool {
        match self {
            Marks::Dense(bits) => bits[(key / 64) as usize] >> (key % 64) & 1 == 1,
            Marks::Sparse(set) => set.contains(&key),
        }
    }

    /// Returns `true` if the key was new.
    fn insert(&mut self, key: u64) -> bool {
        match self {
            Marks::Dense(bits) => {
                let word = &mut bits[(key / 64) as usize];
                let mask = 1u64 << (key % 64);
                let fresh = *word & mask == 0;
                *word |= mask;
                fresh
            }
            Marks::Sparse(set) => set.insert(key),
        }
    }
}

impl CyclicCode {
    /// The ideal generated by `generators`, enumerated word by word.
    ///
    /// The ideal is the additive group generated by `b * z^i * g` where `b`
    /// runs over additive generators of the ring; it is grown one cyclic
    /// subgroup at a time, so the work is proportional to the final size.
    pub fn span(space: &PolyRing, generators: &[CyclicPoly], bound: u64) -> Result<CyclicCode> {
        let ambient = space.ambient_size();
        if ambient > bound as u128 {
            return Err(Error::EnumerationBound {
                size: ambient,
                bound,
            });
        }
        for g in generators {
            space.check(g)?;
        }
        let ring = space.ring();
        let n = space.n();
        let additive = ring.additive_generators();

        let mut marks = Marks::new(ambient);
        marks.insert(0);
        let mut words: Vec<CyclicPoly> = vec![space.zero()];
        for g in generators {
            for shift in 0..n {
                let shifted = space.shift(g, shift);
                for &(b, order) in &additive {
                    let x = space.scale(b, &shifted);
                    if marks.contains(space.key(&x)) {
                        continue;
                    }
                    let mut multiples = Vec::with_capacity(order as usize - 1);
                    let mut m = x.clone();
                    for _ in 1..order {
                        multiples.push(m.clone());
                        m = space.add_unchecked(&m, &x);
                    }
                    let existing = words.len();
                    for i in 0..existing {
                        for mult in &multiples {
                            let w = space.add_unchecked(&words[i], mult);
                            if marks.insert(space.key(&w)) {
                                words.push(w);
                            }
                        }
                    }
                }
            }
        }

        let mut codewords: Vec<u64> = words.iter().map(|w| space.key(w)).collect();
        codewords.sort_unstable();
        let fingerprint = codewords
            .iter()
            .fold(0u64, |acc, &key| acc ^ word_hash(&space.from_key(key)));
        let generating_set = extract_generating_set(space, &words);
        Ok(CyclicCode {
            space: space.clone(),
            generators: generators.to_vec(),
            codewords,
            fingerprint,
            generating_set,
        })
    }

    pub fn space(&self) -> &PolyRing {
        &self.space
    }

    pub fn generators(&self) -> &[CyclicPoly] {
        &self.generators
    }

    pub fn size(&self) -> usize {
        self.codewords.len()
    }

    pub fn is_zero(&self) -> bool {
        self.codewords.len() == 1
    }

    /// Sorted dense keys (see [`PolyRing::key`]).
    pub fn keys(&self) -> &[u64] {
        &self.codewords
    }

    pub fn codewords(&self) -> impl Iterator<Item = CyclicPoly> + '_ {
        self.codewords.iter().map(|&k| self.space.from_key(k))
    }

    /// Order-independent 64-bit hash of the codeword set.
    pub fn fingerprint(&self) -> u64 {
        self.fingerprint
    }

    pub fn contains(&self, f: &CyclicPoly) -> Result<bool> {
        self.space.check(f)?;
        Ok(self.contains_key(self.space.key(f)))
    }

    pub(crate) fn contains_key(&self, key: u64) -> bool {
        self.codewords.binary_search(&key).is_ok()
    }

    /// Codeword-set equality.
    pub fn same_code(&self, other: &CyclicCode) -> bool {
        self.space == other.space
            && self.fingerprint == other.fingerprint
            && self.codewords == other.codewords
    }

    /// The minimal-degree generating set `S = [(f_0, i_0), ..., (f_m, i_m)]`.
    pub fn generating_set(&self) -> &[GeneratorEntry] {
        &self.generating_set
    }

    /// `(deg f_j, i_j)` for each member of the generating set.
    pub fn profile(&self) -> Vec<(usize, u32)> {
        self.generating_set
            .iter()
            .map(|g| (g.degree(), g.valuation))
            .collect()
    }
}

/// FNV-1a over the little-endian coefficient indices.
fn word_hash(f: &CyclicPoly) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for c in f.coeffs() {
        for byte in c.index().to_le_bytes() {
            h ^= byte as u64;
            h = h.wrapping_mul(0x0000_0100_0000_01b3);
        }
    }
    h
}

/// Ascending-degree scan for the minimal generating set.
///
/// For each realized degree `d` take the smallest leading-coefficient
/// valuation `t(d)` over codewords of degree `d`; emit a representative
/// whenever `t(d)` drops below every valuation emitted so far. Ties go to the
/// word with the smallest key.
pub fn extract_generating_set(space: &PolyRing, words: &[CyclicPoly]) -> Vec<GeneratorEntry> {
    let ring = space.ring();
    let mut best: Vec<Option<(u32, u64, &CyclicPoly)>> = vec![None; space.n()];
    for w in words {
        let Some(d) = w.degree() else { continue };
        let t = ring.valuation(w.coeff(d));
        let key = space.key(w);
        let better = match best[d] {
            None => true,
            Some((bt, bk, _)) => (t, key) < (bt, bk),
        };
        if better {
            best[d] = Some((t, key, w));
        }
    }
    let mut out = Vec::new();
    let mut floor = ring.nilpotency();
    for (t, _, w) in best.into_iter().flatten() {
        if t < floor {
            out.push(GeneratorEntry {
                poly: w.clone(),
                valuation: t,
            });
            floor = t;
            if t == 0 {
                break;
            }
        }
    }
    out
}

/// Check that `f = gamma^i * h` with `h` having a unit leading coefficient:
/// the leading coefficient has valuation exactly `i` and no coefficient has
/// smaller valuation.
pub fn leading_structure(space: &PolyRing, f: &CyclicPoly, i: u32) -> Result<()> {
    let ring = space.ring();
    let lead = f.leading().ok_or(Error::ZeroPolynomial)?;
    let lead_val = ring.valuation(lead);
    if lead_val != i {
        return Err(Error::LeadingStructure(format!(
            "leading coefficient of {} has valuation {lead_val}, expected {i}",
            space.render(f)
        )));
    }
    if let Some((pos, &c)) = f
        .coeffs()
        .iter()
        .enumerate()
        .find(|(_, &c)| c != Elem::ZERO && ring.valuation(c) < i)
    {
        return Err(Error::LeadingStructure(format!(
            "coefficient of z^{pos} in {} is {}, outside <gamma^{i}>",
            space.render(f),
            ring.render(c)
        )));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::ring::ChainRing;
    use crate::DEFAULT_ENUMERATION_BOUND;

    fn space(spec: &str, n: usize) -> PolyRing {
        PolyRing::new(Arc::new(ChainRing::parse(spec).unwrap()), n).unwrap()
    }

    fn code(s: &PolyRing, gens: &[&str]) -> CyclicCode {
        let gens: Vec<_> = gens.iter().map(|g| s.parse(g).unwrap()).collect();
        CyclicCode::span(s, &gens, DEFAULT_ENUMERATION_BOUND).unwrap()
    }

    #[test]
    fn span_examples() {
        let s = space("F2[v]/v^3", 4);
        assert_eq!(code(&s, &["1"]).size(), 4096);
        assert_eq!(code(&s, &["0"]).size(), 1);
        let v2 = code(&s, &["v^2"]);
        assert_eq!(v2.size(), 16);
        let v2_elem = s.ring().parse_elem("v^2").unwrap();
        for w in v2.codewords() {
            assert!(w.coeffs().iter().all(|&c| c == Elem::ZERO || c == v2_elem));
        }
        assert_eq!(code(&s, &[]).size(), 1);
    }

    #[test]
    fn span_respects_bound() {
        let s = space("F2[v]/v^3", 4);
        assert!(matches!(
            CyclicCode::span(&s, &[s.one()], 4095),
            Err(Error::EnumerationBound { size: 4096, .. })
        ));
    }

    #[test]
    fn contains_examples() {
        let s = space("F2[v]/v^3", 4);
        let all_ones = s.parse("1+z+z^2+z^3").unwrap();
        assert!(code(&s, &["z+1"]).contains(&all_ones).unwrap());
        assert!(!code(&s, &["v"]).contains(&all_ones).unwrap());
        assert!(code(&s, &["0"]).contains(&s.zero()).unwrap());
        let other = space("F2[v]/v^3", 5);
        assert!(code(&s, &["1"]).contains(&other.zero()).is_err());
    }

    #[test]
    fn generating_set_examples() {
        let s = space("F2[v]/v^3", 4);
        assert_eq!(code(&s, &["v"]).profile(), vec![(0, 1)]);
        assert_eq!(
            code(&s, &["v"]).generating_set()[0].poly,
            s.parse("v").unwrap()
        );
        assert_eq!(code(&s, &["1"]).profile(), vec![(0, 0)]);
        let h = code(&s, &["z+1"]);
        assert_eq!(h.profile(), vec![(1, 0)]);
        assert_eq!(h.generating_set()[0].poly, s.parse("z+1").unwrap());
        assert_eq!(h.size(), 512);
        assert!(code(&s, &["0"]).generating_set().is_empty());
        // <v^2, v h> has S = [(v^2, 2), (v h, 1)].
        assert_eq!(code(&s, &["v^2", "vh"]).profile(), vec![(0, 2), (1, 1)]);
    }

    #[test]
    fn leading_structure_examples() {
        let s = space("F2[v]/v^3", 4);
        let f = |t: &str| s.parse(t).unwrap();
        assert!(leading_structure(&s, &f("v*(z+1)"), 1).is_ok());
        assert!(leading_structure(&s, &f("z+v"), 0).is_ok());
        assert!(leading_structure(&s, &f("v+z"), 1).is_err());
        assert!(leading_structure(&s, &f("1+v*z"), 1).is_err());
        assert!(leading_structure(&s, &s.zero(), 0).is_err());
    }

    #[test]
    fn fingerprint_is_presentation_independent() {
        let s = space("F2[v]/v^3", 4);
        let a = code(&s, &["z+1"]);
        let b = code(&s, &["z^3+z^2", "(1+v)*(z+1)"]);
        assert!(a.same_code(&b));
        assert_eq!(a.fingerprint(), b.fingerprint());
        assert!(!a.same_code(&code(&s, &["v"])));
    }
}
