//! Reversibility and `(u,k)` reversible-complement decisions.
//!
//! Each question has two independent routes: a structural test on the
//! minimal-degree generating set `S`, and a brute-force oracle that applies
//! the transform to every codeword. They must always agree.

use crate::code::CyclicCode;
use crate::error::Result;
use crate::poly::{CyclicPoly, PolyRing};
use crate::ring::Elem;

/// Which structural condition failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Condition {
    /// The reverse complement of the zero word is not a codeword.
    ZeroRcOutside,
    /// No unit `u` with `f_0* = u f_0`.
    SelfReciprocal,
    /// No unit `u` with `f_r* - u f_r` in `<f_{r-1}, ..., f_0>`.
    ReciprocalDifference { index: usize },
}

impl Condition {
    pub fn label(&self) -> String {
        match self {
            Condition::ZeroRcOutside => "zero-rc".into(),
            Condition::SelfReciprocal => "self-reciprocal f_0".into(),
            Condition::ReciprocalDifference { index } => format!("reciprocal difference f_{index}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VerdictDetail {
    /// The unit found for each member of `S`, in order.
    Holds { units: Vec<Elem> },
    /// `witness` is the zero word's reverse complement for
    /// [`Condition::ZeroRcOutside`], otherwise the reciprocal `f_r*`.
    Violated {
        condition: Condition,
        witness: CyclicPoly,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub holds: bool,
    pub detail: VerdictDetail,
}

impl Verdict {
    fn holds(units: Vec<Elem>) -> Verdict {
        Verdict {
            holds: true,
            detail: VerdictDetail::Holds { units },
        }
    }

    fn violated(condition: Condition, witness: CyclicPoly) -> Verdict {
        Verdict {
            holds: false,
            detail: VerdictDetail::Violated { condition, witness },
        }
    }

    /// Re-derive the verdict from its witnesses alone.
    ///
    /// `uk` must be the pair the verdict was computed for, or `None` for a
    /// plain reversibility verdict.
    pub fn recheck(&self, code: &CyclicCode, uk: Option<(Elem, Elem)>) -> Result<bool> {
        let space = code.space();
        let ring = space.ring();
        let set = code.generating_set();
        match &self.detail {
            VerdictDetail::Holds { units } => {
                if let Some((u, k)) = uk {
                    if !code.contains(&space.zero_rc(u, k)?)? {
                        return Ok(false);
                    }
                }
                if units.len() != set.len() {
                    return Ok(false);
                }
                for (r, (entry, &unit)) in set.iter().zip(units).enumerate() {
                    if !ring.is_unit(unit) {
                        return Ok(false);
                    }
                    let diff = space.sub(
                        &space.reciprocal(&entry.poly)?,
                        &space.scale(unit, &entry.poly),
                    )?;
                    let ok = if r == 0 {
                        diff.is_zero()
                    } else {
                        prefix_ideal(code, r)?.contains(&diff)?
                    };
                    if !ok {
                        return Ok(false);
                    }
                }
                Ok(self.holds)
            }
            VerdictDetail::Violated { condition, witness } => {
                let violated = match *condition {
                    Condition::ZeroRcOutside => match uk {
                        Some((u, k)) => {
                            *witness == space.zero_rc(u, k)? && !code.contains(witness)?
                        }
                        None => false,
                    },
                    Condition::SelfReciprocal => match set.first() {
                        Some(f0) => {
                            *witness == space.reciprocal(&f0.poly)?
                                && find_unit(space, witness, &f0.poly, None)?.is_none()
                        }
                        None => false,
                    },
                    Condition::ReciprocalDifference { index } => match set.get(index) {
                        Some(fr) if index > 0 => {
                            let prefix = prefix_ideal(code, index)?;
                            *witness == space.reciprocal(&fr.poly)?
                                && find_unit(space, witness, &fr.poly, Some(&prefix))?.is_none()
                        }
                        _ => false,
                    },
                };
                Ok(violated && !self.holds)
            }
        }
    }
}

/// `<f_{r-1}, ..., f_0>`.
fn prefix_ideal(code: &CyclicCode, r: usize) -> Result<CyclicCode> {
    let gens: Vec<CyclicPoly> = code.generating_set()[..r]
        .iter()
        .map(|g| g.poly.clone())
        .collect();
    CyclicCode::span(code.space(), &gens, u64::MAX)
}

/// First unit `u` (canonical order) with `recip - u f` zero, or inside `within`.
fn find_unit(
    space: &PolyRing,
    recip: &CyclicPoly,
    f: &CyclicPoly,
    within: Option<&CyclicCode>,
) -> Result<Option<Elem>> {
    for u in space.ring().units() {
        let diff = space.sub(recip, &space.scale(u, f))?;
        let ok = match within {
            None => diff.is_zero(),
            Some(ideal) => ideal.contains(&diff)?,
        };
        if ok {
            return Ok(Some(u));
        }
    }
    Ok(None)
}

/// Reversibility through the generating set.
///
/// Only `s = r - 1` is tried in the second condition: the ideals
/// `<f_s, ..., f_0>` grow with `s`.
pub fn is_reversible_theorem(code: &CyclicCode) -> Result<Verdict> {
    let space = code.space();
    let set = code.generating_set();
    let mut units = Vec::with_capacity(set.len());
    for (r, entry) in set.iter().enumerate() {
        let recip = space.reciprocal(&entry.poly)?;
        let found = if r == 0 {
            find_unit(space, &recip, &entry.poly, None)?
        } else {
            let prefix = prefix_ideal(code, r)?;
            find_unit(space, &recip, &entry.poly, Some(&prefix))?
        };
        match found {
            Some(u) => units.push(u),
            None => {
                let condition = if r == 0 {
                    Condition::SelfReciprocal
                } else {
                    Condition::ReciprocalDifference { index: r }
                };
                return Ok(Verdict::violated(condition, recip));
            }
        }
    }
    Ok(Verdict::holds(units))
}

/// Closure of the codeword set under full word reversal.
pub fn is_reversible_oracle(code: &CyclicCode) -> bool {
    let space = code.space();
    code.codewords()
        .all(|w| code.contains_key(space.key(&space.word_reverse(&w))))
}

/// Same question through reciprocals: `z^(n-1-s) a*(z)` for every nonzero `a`.
pub fn is_reversible_oracle_reciprocal(code: &CyclicCode) -> Result<bool> {
    let space = code.space();
    for w in code.codewords() {
        let Some(s) = w.degree() else { continue };
        let shifted = space.shift(&space.reciprocal(&w)?, space.n() - 1 - s);
        if !code.contains_key(space.key(&shifted)) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `(u,k)` reversible complement through the generating set: the zero word's
/// reverse complement must lie in the code, and the code must be reversible.
pub fn is_rc_theorem(code: &CyclicCode, u: Elem, k: Elem) -> Result<Verdict> {
    let space = code.space();
    let zero_rc = space.zero_rc(u, k)?;
    if !code.contains(&zero_rc)? {
        return Ok(Verdict::violated(Condition::ZeroRcOutside, zero_rc));
    }
    is_reversible_theorem(code)
}

/// Closure of the codeword set under the `(u,k)` reverse complement.
pub fn is_rc_oracle(code: &CyclicCode, u: Elem, k: Elem) -> Result<bool> {
    let space = code.space();
    space.ring().check_uk(u, k)?;
    for w in code.codewords() {
        if !code.contains_key(space.key(&space.rc_transform(&w, u, k)?)) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `RC(0) - u^{-1} z^(n-s-1) a*(z)` for a nonzero `a` of degree `s`.
pub fn rc_via_reciprocal(space: &PolyRing, a: &CyclicPoly, u: Elem, k: Elem) -> Result<CyclicPoly> {
    let ring = space.ring();
    let s = a.degree().ok_or(crate::Error::ZeroPolynomial)?;
    let zero_rc = space.zero_rc(u, k)?;
    let u_inv = ring.invert(u)?;
    let term = space.scale(
        u_inv,
        &space.shift(&space.reciprocal(a)?, space.n() - s - 1),
    );
    space.sub(&zero_rc, &term)
}

/// Whether `RC(a) = RC(0) - u^{-1} z^(n-s-1) a*(z)` for every nonzero codeword.
pub fn rc_identity_audit(code: &CyclicCode, u: Elem, k: Elem) -> Result<bool> {
    let space = code.space();
    space.ring().check_uk(u, k)?;
    for w in code.codewords() {
        if w.is_zero() {
            continue;
        }
        if space.rc_transform(&w, u, k)? != rc_via_reciprocal(space, &w, u, k)? {
            return Ok(false);
        }
    }
    Ok(true)
}
