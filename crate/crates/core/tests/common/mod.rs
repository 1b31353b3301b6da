#![allow(dead_code)]

use std::collections::BTreeSet;
use std::sync::Arc;

use rccode::ring::prime_power;
use rccode::{ChainRing, CyclicCode, CyclicPoly, PolyRing, DEFAULT_ENUMERATION_BOUND};

pub fn space(spec: &str, n: usize) -> PolyRing {
    PolyRing::new(Arc::new(ChainRing::parse(spec).unwrap()), n).unwrap()
}

pub fn code(space: &PolyRing, gens: &[&str]) -> CyclicCode {
    let gens: Vec<CyclicPoly> = gens.iter().map(|g| space.parse(g).unwrap()).collect();
    CyclicCode::span(space, &gens, DEFAULT_ENUMERATION_BOUND).unwrap()
}

/// Every ring of both supported families with at most `max_size` elements.
pub fn rings_up_to(max_size: u64) -> Vec<ChainRing> {
    let mut out = Vec::new();
    for q in 2..=max_size {
        if prime_power(q).is_none() {
            continue;
        }
        out.push(ChainRing::integers(q).unwrap());
        let mut e = 1;
        while q.pow(e) <= max_size {
            if !(e == 1 && prime_power(q).unwrap().1 == 1) {
                out.push(ChainRing::truncated(q, e, None).unwrap());
            }
            e += 1;
        }
    }
    out
}

/// The principal ideal `<g>` as `{a g : a in R[z]/(z^n - 1)}`, by plain multiplication.
pub fn principal_by_products(space: &PolyRing, g: &CyclicPoly) -> BTreeSet<u64> {
    let total = space.ambient_size() as u64;
    (0..total)
        .map(|key| space.key(&space.mul(&space.from_key(key), g).unwrap()))
        .collect()
}

/// Generating-set invariants: degrees up, valuations down, the set spans the
/// code, the leading structure holds, and no codeword undercuts a member.
pub fn check_structure(code: &CyclicCode) -> Result<(), String> {
    let space = code.space();
    let ring = space.ring();
    let set = code.generating_set();
    if code.is_zero() {
        return if set.is_empty() {
            Ok(())
        } else {
            Err("zero code with nonempty S".into())
        };
    }
    for pair in set.windows(2) {
        if pair[0].degree() >= pair[1].degree() {
            return Err(format!("degrees not increasing: {:?}", code.profile()));
        }
        if pair[0].valuation <= pair[1].valuation {
            return Err(format!("valuations not decreasing: {:?}", code.profile()));
        }
    }
    if set.len() > ring.nilpotency() as usize {
        return Err("S longer than the nilpotency index".into());
    }
    for entry in set {
        if !code.contains(&entry.poly).unwrap() {
            return Err("S member outside the code".into());
        }
        rccode::code::leading_structure(space, &entry.poly, entry.valuation)
            .map_err(|e| e.to_string())?;
    }
    let gens: Vec<CyclicPoly> = set.iter().map(|g| g.poly.clone()).collect();
    let spanned = CyclicCode::span(space, &gens, u64::MAX).unwrap();
    if !spanned.same_code(code) {
        return Err(format!(
            "span(S) has {} words, code has {}",
            spanned.size(),
            code.size()
        ));
    }
    // Minimality: for f_j, no codeword of smaller degree reaches below i_{j-1};
    // at its own degree nothing beats i_j.
    for w in code.codewords() {
        let Some(d) = w.degree() else { continue };
        let t = ring.valuation(w.coeff(d));
        for (j, entry) in set.iter().enumerate() {
            let ceiling = if j == 0 {
                ring.nilpotency()
            } else {
                set[j - 1].valuation
            };
            if d < entry.degree() && t < ceiling {
                return Err(format!(
                    "{} undercuts f_{j} = {}",
                    space.render(&w),
                    space.render(&entry.poly)
                ));
            }
            if d == entry.degree() && t < entry.valuation {
                return Err(format!("{} beats the valuation of f_{j}", space.render(&w)));
            }
        }
    }
    Ok(())
}
