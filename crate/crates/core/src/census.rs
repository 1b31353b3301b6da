//! Census of principal cyclic codes and their classification.

use std::collections::HashMap;
use std::sync::Arc;

use rayon::prelude::*;

use crate::analysis::{self, Verdict};
use crate::code::CyclicCode;
use crate::error::{Error, Result};
use crate::poly::{CyclicPoly, PolyRing};
use crate::ring::{ChainRing, Elem};

/// Whether theorem verdicts are shadow-checked by the brute-force oracles.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OracleMode {
    Off,
    #[default]
    Audit,
}

/// One distinct code found by the census, with the first generator that produced it.
#[derive(Debug, Clone)]
pub struct CensusEntry {
    pub generator: CyclicPoly,
    pub code: CyclicCode,
}

/// All distinct principal codes `<g>` for `g` over every word of the space.
///
/// Sorted by code size, then by generator key.
pub fn enumerate_principal(space: &PolyRing, bound: u64) -> Result<Vec<CensusEntry>> {
    let ambient = space.ambient_size();
    if ambient > bound as u128 {
        return Err(Error::EnumerationBound {
            size: ambient,
            bound,
        });
    }
    let candidates = (0..ambient as u64).map(|key| space.from_key(key));
    census_of(space, candidates, bound)
}

/// Census over an explicit candidate list; the first candidate of each ideal wins.
pub fn census_of(
    space: &PolyRing,
    candidates: impl Iterator<Item = CyclicPoly>,
    bound: u64,
) -> Result<Vec<CensusEntry>> {
    // Keep roughly 2^24 codeword keys in flight per batch.
    let per_code = space.ambient_size().max(1);
    let batch = ((1u128 << 24) / per_code).clamp(16, 4096) as usize;

    let mut entries: Vec<CensusEntry> = Vec::new();
    let mut by_fingerprint: HashMap<u64, Vec<usize>> = HashMap::new();
    let candidates: Vec<CyclicPoly> = candidates.collect();
    for chunk in candidates.chunks(batch) {
        let codes = chunk
            .par_iter()
            .map(|g| CyclicCode::span(space, std::slice::from_ref(g), bound))
            .collect::<Result<Vec<_>>>()?;
        for (g, code) in chunk.iter().zip(codes) {
            let slot = by_fingerprint.entry(code.fingerprint()).or_default();
            if slot.iter().any(|&i| entries[i].code.same_code(&code)) {
                continue;
            }
            slot.push(entries.len());
            entries.push(CensusEntry {
                generator: g.clone(),
                code,
            });
        }
    }
    entries.sort_by_key(|e| (e.code.size(), space.key(&e.generator)));
    Ok(entries)
}

/// A classified code.
#[derive(Debug, Clone)]
pub struct ClassificationRow {
    pub generator: CyclicPoly,
    /// Generator expression from the reference table, when matched.
    pub label: Option<String>,
    pub code: CyclicCode,
    pub reversible: Verdict,
    pub rc: Verdict,
}

impl ClassificationRow {
    pub fn code_size(&self) -> usize {
        self.code.size()
    }

    pub fn profile(&self) -> Vec<(usize, u32)> {
        self.code.profile()
    }
}

/// Decide reversibility and `(u,k)` reverse-complement closure for one code.
///
/// In audit mode both verdicts are checked against the oracles and a
/// disagreement is returned as [`Error::Disagreement`].
pub fn classify_code(
    code: &CyclicCode,
    u: Elem,
    k: Elem,
    mode: OracleMode,
) -> Result<(Verdict, Verdict)> {
    let reversible = analysis::is_reversible_theorem(code)?;
    let rc = analysis::is_rc_theorem(code, u, k)?;
    if mode == OracleMode::Audit {
        let space = code.space();
        let describe = || {
            code.generators()
                .iter()
                .map(|g| space.render(g))
                .collect::<Vec<_>>()
                .join(", ")
        };
        let oracle = analysis::is_reversible_oracle(code);
        if oracle != reversible.holds {
            return Err(Error::Disagreement(format!(
                "reversibility of <{}>: theorem {}, oracle {oracle}",
                describe(),
                reversible.holds
            )));
        }
        let oracle = analysis::is_rc_oracle(code, u, k)?;
        if oracle != rc.holds {
            return Err(Error::Disagreement(format!(
                "reverse complement closure of <{}>: theorem {}, oracle {oracle}",
                describe(),
                rc.holds
            )));
        }
    }
    Ok((reversible, rc))
}

/// One classified row per distinct principal code.
pub fn classify_all(
    space: &PolyRing,
    u: Elem,
    k: Elem,
    mode: OracleMode,
    bound: u64,
) -> Result<Vec<ClassificationRow>> {
    space.ring().check_uk(u, k)?;
    let census = enumerate_principal(space, bound)?;
    census
        .into_par_iter()
        .map(|entry| {
            let (reversible, rc) = classify_code(&entry.code, u, k, mode)?;
            Ok(ClassificationRow {
                generator: entry.generator,
                label: None,
                code: entry.code,
                reversible,
                rc,
            })
        })
        .collect()
}

/// Reference classification shipped with the crate: principal cyclic codes of
/// length 4 over `F2[v]/v^3` under `(u,k) = (1,1)`, generators written in `h = z+1`.
pub const REFERENCE_TABLE: &str = include_str!("../data/reference_table.txt");
pub const REFERENCE_RING: &str = "F2[v]/v^3";
pub const REFERENCE_LENGTH: usize = 4;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReferenceRow {
    pub index: usize,
    pub expression: String,
    pub rc: bool,
}

/// Parse `index;generator-expression;yes|no` lines. Blank lines are skipped.
pub fn parse_reference_table(text: &str) -> Result<Vec<ReferenceRow>> {
    text.lines()
        .enumerate()
        .filter(|(_, line)| !line.trim().is_empty())
        .map(|(lineno, line)| {
            let bad = |what: &str| Error::Table(format!("line {}: {what}: {line:?}", lineno + 1));
            let fields: Vec<&str> = line.trim().split(';').collect();
            let [index, expression, verdict] = fields[..] else {
                return Err(bad("expected three ';'-separated fields"));
            };
            let index = index.trim().parse().map_err(|_| bad("bad row index"))?;
            let rc = match verdict.trim() {
                "yes" => true,
                "no" => false,
                _ => return Err(bad("verdict must be yes or no")),
            };
            Ok(ReferenceRow {
                index,
                expression: expression.trim().to_string(),
                rc,
            })
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RowMatch {
    pub index: usize,
    pub expression: String,
    pub expected_rc: bool,
    /// Position of the matching code in the census rows.
    pub census_position: Option<usize>,
    pub computed_rc: Option<bool>,
}

impl RowMatch {
    pub fn agrees(&self) -> bool {
        self.computed_rc == Some(self.expected_rc)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableMatch {
    pub rows: Vec<RowMatch>,
    pub census_size: usize,
}

impl TableMatch {
    pub fn agreeing(&self) -> usize {
        self.rows.iter().filter(|r| r.agrees()).count()
    }

    /// Every table row hits a distinct census code and every census code is hit.
    pub fn is_bijection(&self) -> bool {
        let mut hit = vec![false; self.census_size];
        for row in &self.rows {
            match row.census_position {
                Some(p) if !hit[p] => hit[p] = true,
                _ => return false,
            }
        }
        hit.iter().all(|&h| h)
    }

    pub fn is_perfect(&self) -> bool {
        self.is_bijection() && self.agreeing() == self.rows.len()
    }
}

/// Build each table ideal and find it in the census by codeword-set equality.
pub fn match_reference_table(
    space: &PolyRing,
    census: &[ClassificationRow],
    table: &[ReferenceRow],
    bound: u64,
) -> Result<TableMatch> {
    let mut rows = Vec::with_capacity(table.len());
    for entry in table {
        let generator = space.parse(&entry.expression)?;
        let code = CyclicCode::span(space, &[generator], bound)?;
        let position = census.iter().position(|row| row.code.same_code(&code));
        rows.push(RowMatch {
            index: entry.index,
            expression: entry.expression.clone(),
            expected_rc: entry.rc,
            census_position: position,
            computed_rc: position.map(|p| census[p].rc.holds),
        });
    }
    Ok(TableMatch {
        rows,
        census_size: census.len(),
    })
}

/// Copy matched table expressions onto the census rows.
pub fn apply_labels(census: &mut [ClassificationRow], matched: &TableMatch) {
    for row in &matched.rows {
        if let Some(p) = row.census_position {
            census[p].label = Some(row.expression.clone());
        }
    }
}

/// The reference setting: `F2[v]/v^3`, length 4.
pub fn reference_space() -> PolyRing {
    let ring = ChainRing::parse(REFERENCE_RING).expect("reference ring parses");
    PolyRing::new(Arc::new(ring), REFERENCE_LENGTH).expect("positive length")
}

/// Classify the reference census under `(1,1)` and match it against `table_text`.
pub fn reproduce_reference_table(
    table_text: &str,
    mode: OracleMode,
    bound: u64,
) -> Result<(Vec<ClassificationRow>, TableMatch)> {
    let table = parse_reference_table(table_text)?;
    let space = reference_space();
    let one = space.ring().one();
    let mut census = classify_all(&space, one, one, mode, bound)?;
    let matched = match_reference_table(&space, &census, &table, bound)?;
    apply_labels(&mut census, &matched);
    Ok((census, matched))
}
