//! Plain-data records for CLI output and their CSV / JSON / markdown renderings.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::analysis::{Verdict, VerdictDetail};
use crate::census::{ClassificationRow, TableMatch};
use crate::code::CyclicCode;
use crate::poly::PolyRing;
use crate::ring::{ChainRing, Family};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    Csv,
    Json,
    #[default]
    Md,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            "md" => Ok(Format::Md),
            other => Err(format!(
                "unknown format {other:?} (expected csv, json or md)"
            )),
        }
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn profile_text(profile: &[(usize, u32)]) -> String {
    profile
        .iter()
        .map(|(d, i)| format!("{d}:{i}"))
        .collect::<Vec<_>>()
        .join("|")
}

pub fn witness_text(space: &PolyRing, verdict: &Verdict) -> String {
    match &verdict.detail {
        VerdictDetail::Holds { units } if units.is_empty() => "vacuous".into(),
        VerdictDetail::Holds { units } => {
            let units: Vec<String> = units.iter().map(|&u| space.ring().render(u)).collect();
            format!("units {}", units.join(", "))
        }
        VerdictDetail::Violated { condition, witness } => {
            format!("{} fails at {}", condition.label(), space.render(witness))
        }
    }
}

/// One census row.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RowRecord {
    pub canonical_generator: String,
    pub label: Option<String>,
    pub code_size: usize,
    pub s_profile: Vec<(usize, u32)>,
    pub reversible: bool,
    pub rc: bool,
    pub reversible_witness: String,
    pub rc_witness: String,
}

impl RowRecord {
    pub fn from_row(row: &ClassificationRow) -> RowRecord {
        let space = row.code.space();
        RowRecord {
            canonical_generator: space.render(&row.generator),
            label: row.label.clone(),
            code_size: row.code_size(),
            s_profile: row.profile(),
            reversible: row.reversible.holds,
            rc: row.rc.holds,
            reversible_witness: witness_text(space, &row.reversible),
            rc_witness: witness_text(space, &row.rc),
        }
    }
}

pub fn render_rows(rows: &[RowRecord], format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(rows).expect("rows serialize") + "\n",
        Format::Csv => {
            let mut writer = csv::Writer::from_writer(Vec::new());
            writer
                .write_record(["generator", "code_size", "s_profile", "reversible", "rc"])
                .expect("write to memory");
            for r in rows {
                writer
                    .write_record([
                        r.canonical_generator.as_str(),
                        &r.code_size.to_string(),
                        &profile_text(&r.s_profile),
                        yes_no(r.reversible),
                        yes_no(r.rc),
                    ])
                    .expect("write to memory");
            }
            String::from_utf8(writer.into_inner().expect("flush to memory")).expect("utf-8")
        }
        Format::Md => {
            let mut out = String::new();
            out.push_str("| # | generator | table label | size | S profile | reversible | rc |\n");
            out.push_str("|---|---|---|---|---|---|---|\n");
            for (i, r) in rows.iter().enumerate() {
                let _ = writeln!(
                    out,
                    "| {} | {} | {} | {} | {} | {} | {} |",
                    i + 1,
                    r.canonical_generator,
                    r.label.as_deref().unwrap_or(""),
                    r.code_size,
                    profile_text(&r.s_profile),
                    yes_no(r.reversible),
                    yes_no(r.rc)
                );
            }
            let rc = rows.iter().filter(|r| r.rc).count();
            let _ = writeln!(out, "\n{} codes, {} reversible complement", rows.len(), rc);
            out
        }
    }
}

/// Oracle results attached to a classification in audit mode.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleRecord {
    pub reversible: bool,
    pub rc: bool,
    pub lemma_identity: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassifyRecord {
    pub ring: String,
    pub n: usize,
    pub generators: Vec<String>,
    pub u: String,
    pub k: String,
    pub code_size: usize,
    pub s_profile: Vec<(usize, u32)>,
    pub generating_set: Vec<String>,
    pub reversible: bool,
    pub rc: bool,
    pub reversible_witness: String,
    pub rc_witness: String,
    pub oracle: Option<OracleRecord>,
}

impl ClassifyRecord {
    pub fn new(
        code: &CyclicCode,
        u_text: String,
        k_text: String,
        reversible: &Verdict,
        rc: &Verdict,
        oracle: Option<OracleRecord>,
    ) -> ClassifyRecord {
        let space = code.space();
        ClassifyRecord {
            ring: space.ring().to_string(),
            n: space.n(),
            generators: code.generators().iter().map(|g| space.render(g)).collect(),
            u: u_text,
            k: k_text,
            code_size: code.size(),
            s_profile: code.profile(),
            generating_set: code
                .generating_set()
                .iter()
                .map(|g| space.render(&g.poly))
                .collect(),
            reversible: reversible.holds,
            rc: rc.holds,
            reversible_witness: witness_text(space, reversible),
            rc_witness: witness_text(space, rc),
            oracle,
        }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => serde_json::to_string_pretty(self).expect("serialize") + "\n",
            Format::Csv => {
                let mut writer = csv::Writer::from_writer(Vec::new());
                writer
                    .write_record(["generator", "code_size", "s_profile", "reversible", "rc"])
                    .expect("write to memory");
                writer
                    .write_record([
                        self.generators.join(", ").as_str(),
                        &self.code_size.to_string(),
                        &profile_text(&self.s_profile),
                        yes_no(self.reversible),
                        yes_no(self.rc),
                    ])
                    .expect("write to memory");
                String::from_utf8(writer.into_inner().expect("flush")).expect("utf-8")
            }
            Format::Md => {
                let mut out = String::new();
                let _ = writeln!(out, "ring: {}", self.ring);
                let _ = writeln!(out, "length: {}", self.n);
                let _ = writeln!(out, "code: <{}>", self.generators.join(", "));
                let _ = writeln!(out, "size: {}", self.code_size);
                let _ = writeln!(out, "S: [{}]", self.generating_set.join(", "));
                let _ = writeln!(out, "S profile: {}", profile_text(&self.s_profile));
                let _ = writeln!(
                    out,
                    "reversible={} ({})",
                    yes_no(self.reversible),
                    self.reversible_witness
                );
                let _ = writeln!(
                    out,
                    "(u,k)=({},{}) rc={} ({})",
                    self.u,
                    self.k,
                    yes_no(self.rc),
                    self.rc_witness
                );
                if let Some(o) = &self.oracle {
                    let _ = writeln!(
                        out,
                        "oracle: reversible={} rc={} lemma-identity={}",
                        yes_no(o.reversible),
                        yes_no(o.rc),
                        yes_no(o.lemma_identity)
                    );
                }
                out
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRowRecord {
    pub index: usize,
    pub expression: String,
    pub expected_rc: bool,
    pub computed_rc: Option<bool>,
    pub census_generator: Option<String>,
    pub agrees: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRecord {
    pub rows: Vec<TableRowRecord>,
    pub matched: usize,
    pub total: usize,
    pub census_size: usize,
    pub bijection: bool,
}

impl TableRecord {
    pub fn new(census: &[ClassificationRow], matched: &TableMatch) -> TableRecord {
        let rows = matched
            .rows
            .iter()
            .map(|r| TableRowRecord {
                index: r.index,
                expression: r.expression.clone(),
                expected_rc: r.expected_rc,
                computed_rc: r.computed_rc,
                census_generator: r
                    .census_position
                    .map(|p| census[p].code.space().render(&census[p].generator)),
                agrees: r.agrees(),
            })
            .collect();
        TableRecord {
            rows,
            matched: matched.agreeing(),
            total: matched.rows.len(),
            census_size: matched.census_size,
            bijection: matched.is_bijection(),
        }
    }

    pub fn summary(&self) -> String {
        format!("{}/{} match", self.matched, self.total)
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => serde_json::to_string_pretty(self).expect("serialize") + "\n",
            Format::Csv => {
                let mut writer = csv::Writer::from_writer(Vec::new());
                writer
                    .write_record([
                        "index",
                        "expression",
                        "expected_rc",
                        "computed_rc",
                        "agrees",
                    ])
                    .expect("write to memory");
                for r in &self.rows {
                    writer
                        .write_record([
                            r.index.to_string().as_str(),
                            &r.expression,
                            yes_no(r.expected_rc),
                            r.computed_rc.map(yes_no).unwrap_or("unmatched"),
                            yes_no(r.agrees),
                        ])
                        .expect("write to memory");
                }
                String::from_utf8(writer.into_inner().expect("flush")).expect("utf-8")
            }
            Format::Md => {
                let mut out = String::new();
                out.push_str("| row | code | table | computed | census generator | agree |\n");
                out.push_str("|---|---|---|---|---|---|\n");
                for r in &self.rows {
                    let _ = writeln!(
                        out,
                        "| {} | <{}> | {} | {} | {} | {} |",
                        r.index,
                        r.expression,
                        yes_no(r.expected_rc),
                        r.computed_rc.map(yes_no).unwrap_or("unmatched"),
                        r.census_generator.as_deref().unwrap_or("-"),
                        if r.agrees { "ok" } else { "MISMATCH" }
                    );
                }
                let _ = writeln!(
                    out,
                    "\n{} (census of {} codes, bijection: {})",
                    self.summary(),
                    self.census_size,
                    yes_no(self.bijection)
                );
                out
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingInfo {
    pub ring: String,
    pub p: u32,
    pub size: u32,
    pub residue_size: u32,
    pub nilpotency: u32,
    pub gamma: String,
    pub units: u32,
    pub modulus: Option<String>,
}

impl RingInfo {
    pub fn new(ring: &ChainRing) -> RingInfo {
        let modulus = match ring.family() {
            Family::Truncated { degree, .. } if *degree > 1 => ring
                .to_string()
                .split_once(";mod=")
                .map(|(_, m)| m.to_string()),
            _ => None,
        };
        RingInfo {
            ring: ring.to_string(),
            p: ring.characteristic_prime(),
            size: ring.size(),
            residue_size: ring.residue_size(),
            nilpotency: ring.nilpotency(),
            gamma: ring.render(ring.gamma()),
            units: ring.unit_count(),
            modulus,
        }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => serde_json::to_string_pretty(self).expect("serialize") + "\n",
            Format::Csv => format!(
                "ring,p,size,residue_size,nilpotency,gamma,units\n{},{},{},{},{},{},{}\n",
                self.ring,
                self.p,
                self.size,
                self.residue_size,
                self.nilpotency,
                self.gamma,
                self.units
            ),
            Format::Md => {
                let mut out = format!(
                    "ring: {}\np: {}\nsize: {}\nresidue field size: {}\nnilpotency index: {}\ngamma: {}\nunits: {}\n",
                    self.ring, self.p, self.size, self.residue_size, self.nilpotency, self.gamma, self.units
                );
                if let Some(m) = &self.modulus {
                    let _ = writeln!(out, "modulus: {m}");
                }
                out
            }
        }
    }
}
