//! Scenario runner: evaluates the claims over families of rings and groups
//! and collects one record per (claim, instance).

mod checks;
mod family;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::group::{parse_group, FiniteGroup, GroupDefinition};
use crate::ring::{parse_ring, FiniteRing, RingDefinition};

pub use family::{abelian_groups_up_to, default_groups, default_rings, scan, scan_checks};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum CheckId {
    T2,
    C14,
    GGC4,
    C20,
    P10,
    P11,
    P21,
    P28,
    L8,
    L9,
    L13,
    L19,
    L23,
    L25,
    L26,
    T5SCAN,
    ORACLE,
}

impl CheckId {
    pub const ALL: [CheckId; 17] = [
        CheckId::T2,
        CheckId::C14,
        CheckId::GGC4,
        CheckId::C20,
        CheckId::P10,
        CheckId::P11,
        CheckId::P21,
        CheckId::P28,
        CheckId::L8,
        CheckId::L9,
        CheckId::L13,
        CheckId::L19,
        CheckId::L23,
        CheckId::L25,
        CheckId::L26,
        CheckId::T5SCAN,
        CheckId::ORACLE,
    ];

    /// Checks about a single ring rather than a group ring.
    fn on_rings(self) -> bool {
        matches!(self, CheckId::L9 | CheckId::L23 | CheckId::T5SCAN | CheckId::ORACLE)
    }

    /// Checks that also run on the carriers `R[G]` as plain rings.
    fn on_carriers(self) -> bool {
        matches!(self, CheckId::L23 | CheckId::T5SCAN)
    }

    fn on_group_rings(self) -> bool {
        !matches!(self, CheckId::L9 | CheckId::L23 | CheckId::T5SCAN)
    }
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = serde_json::to_value(self).expect("unit variant");
        write!(f, "{}", s.as_str().expect("string tag"))
    }
}

impl FromStr for CheckId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        serde_json::from_value(Value::String(s.to_uppercase()))
            .map_err(|_| Error::Config(format!("unknown check id {s:?}")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Verdict {
    Pass,
    Fail,
    Skipped,
    Capped,
    Flagged,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::Skipped => "SKIPPED",
            Verdict::Capped => "CAPPED",
            Verdict::Flagged => "FLAGGED",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RingSpec {
    Name(String),
    Table(RingDefinition),
}

impl RingSpec {
    pub fn build(&self) -> Result<FiniteRing> {
        match self {
            RingSpec::Name(s) => parse_ring(s),
            RingSpec::Table(d) => d.build(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GroupSpec {
    Name(String),
    Table(GroupDefinition),
}

impl GroupSpec {
    pub fn build(&self) -> Result<FiniteGroup> {
        match self {
            GroupSpec::Name(s) => parse_group(s),
            GroupSpec::Table(d) => d.build(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Caps {
    /// element enumeration (semiprimeness, radicals, exhaustive comparisons)
    pub enumeration: u64,
    /// candidate tuples tried by the dense oracles
    pub oracle: u64,
    /// carrier rank of `R[G]`
    pub rank: usize,
    /// unknowns in a full derivation system of a carrier
    pub solver: usize,
    /// ring size for solder enumeration
    pub solder: u64,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            enumeration: crate::ring::DEFAULT_CAP,
            oracle: 1 << 20,
            rank: crate::group_ring::DEFAULT_RANK_CAP,
            solver: crate::derivation::DEFAULT_SOLVER_CAP,
            solder: crate::solder::DEFAULT_SOLDER_CAP,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioConfig {
    pub check: CheckId,
    #[serde(default)]
    pub rings: Vec<RingSpec>,
    #[serde(default)]
    pub groups: Vec<GroupSpec>,
    #[serde(default)]
    pub caps: Caps,
    #[serde(default)]
    pub seed: u64,
    #[serde(default = "default_samples")]
    pub samples: usize,
    #[serde(default)]
    pub output: Option<String>,
}

fn default_samples() -> usize {
    500
}

impl ScenarioConfig {
    pub fn new(check: CheckId) -> Self {
        ScenarioConfig {
            check,
            rings: Vec::new(),
            groups: Vec::new(),
            caps: Caps::default(),
            seed: 0,
            samples: default_samples(),
            output: None,
        }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Config(e.to_string()))
    }

    pub fn with_rings<S: Into<String>>(mut self, names: impl IntoIterator<Item = S>) -> Self {
        self.rings.extend(names.into_iter().map(|s| RingSpec::Name(s.into())));
        self
    }

    pub fn with_groups<S: Into<String>>(mut self, names: impl IntoIterator<Item = S>) -> Self {
        self.groups.extend(names.into_iter().map(|s| GroupSpec::Name(s.into())));
        self
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Record {
    pub check: CheckId,
    pub claim: String,
    pub ring: String,
    pub group: Option<String>,
    /// the hypothesis as stated, evaluated before the check
    pub hypothesis: String,
    pub hypothesis_satisfied: bool,
    pub verdict: Verdict,
    pub witness: Option<Value>,
    pub detail: Value,
}

impl Record {
    fn key(&self) -> (CheckId, &str, &str, &str) {
        (self.check, &self.ring, self.group.as_deref().unwrap_or(""), &self.claim)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
    pub capped: usize,
    pub flagged: usize,
}

impl Summary {
    fn of(records: &[Record]) -> Self {
        let mut s = Summary { total: records.len(), ..Summary::default() };
        for r in records {
            match r.verdict {
                Verdict::Pass => s.pass += 1,
                Verdict::Fail => s.fail += 1,
                Verdict::Skipped => s.skipped += 1,
                Verdict::Capped => s.capped += 1,
                Verdict::Flagged => s.flagged += 1,
            }
        }
        s
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub schema_version: u32,
    pub timestamp: String,
    pub seed: u64,
    pub checks: Vec<CheckId>,
    pub summary: Summary,
    pub records: Vec<Record>,
}

impl Report {
    pub fn new(seed: u64, mut checks: Vec<CheckId>, mut records: Vec<Record>) -> Self {
        records.sort_by(|a, b| a.key().cmp(&b.key()));
        checks.sort();
        checks.dedup();
        let timestamp = std::time::SystemTime::now()
            .duration_since(std::time::UNIX_EPOCH)
            .map(|d| d.as_secs().to_string())
            .unwrap_or_default();
        Report { schema_version: SCHEMA_VERSION, timestamp, seed, checks, summary: Summary::of(&records), records }
    }

    pub fn has_failures(&self) -> bool {
        self.summary.fail > 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn merge(reports: Vec<Report>, seed: u64) -> Report {
        let checks = reports.iter().flat_map(|r| r.checks.clone()).collect();
        let records = reports.into_iter().flat_map(|r| r.records).collect();
        Report::new(seed, checks, records)
    }

    /// Plain-text table mirroring the JSON records.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let w_ring = self.records.iter().map(|r| r.ring.len()).max().unwrap_or(4).max(4);
        let w_group = self.records.iter().map(|r| r.group.as_deref().map_or(1, str::len)).max().unwrap_or(5).max(5);
        out.push_str(&format!("{:<7} {:<8} {:<w_ring$} {:<w_group$} CLAIM\n", "CHECK", "VERDICT", "RING", "GROUP"));
        for r in &self.records {
            out.push_str(&format!(
                "{:<7} {:<8} {:<w_ring$} {:<w_group$} {}\n",
                r.check.to_string(),
                r.verdict.to_string(),
                r.ring,
                r.group.as_deref().unwrap_or("-"),
                r.claim
            ));
        }
        let s = &self.summary;
        out.push_str(&format!(
            "total {}: {} pass, {} fail, {} skipped, {} capped, {} flagged\n",
            s.total, s.pass, s.fail, s.skipped, s.capped, s.flagged
        ));
        out
    }

    /// Verdict counts per check.
    pub fn counts_by_check(&self) -> BTreeMap<CheckId, Summary> {
        let mut by: BTreeMap<CheckId, Vec<Record>> = BTreeMap::new();
        for r in &self.records {
            by.entry(r.check).or_default().push(r.clone());
        }
        by.into_iter().map(|(k, v)| (k, Summary::of(&v))).collect()
    }
}

/// One ring, or one group ring, to check a claim on.
#[derive(Clone, Debug)]
pub struct Instance {
    pub ring: Arc<FiniteRing>,
    pub group: Option<Arc<FiniteGroup>>,
}

impl Instance {
    fn key(&self) -> String {
        match &self.group {
            Some(g) => format!("{}[{}]", self.ring.label(), g.label()),
            None => self.ring.label(),
        }
    }
}

pub(crate) struct Ctx<'a> {
    pub check: CheckId,
    pub caps: &'a Caps,
    pub samples: usize,
    pub memo: &'a checks::Memo,
}

type Family = (Vec<Arc<FiniteRing>>, Vec<Arc<FiniteGroup>>);

fn build_family(cfg: &ScenarioConfig) -> Result<Family> {
    let rings = cfg.rings.iter().map(|s| s.build().map(Arc::new)).collect::<Result<_>>()?;
    let groups = cfg.groups.iter().map(|s| s.build().map(Arc::new)).collect::<Result<_>>()?;
    Ok((rings, groups))
}

/// Runs one check over its family. Instances run in parallel; a cap hit is
/// recorded as CAPPED and the run continues. Construction errors in the
/// family are config errors.
pub fn run_scenario(cfg: &ScenarioConfig) -> Result<Report> {
    let (rings, groups) = build_family(cfg)?;
    let records = run_batch(&[cfg.check], &rings, &groups, &cfg.caps, cfg.samples, cfg.seed);
    Ok(Report::new(cfg.seed, vec![cfg.check], records))
}

/// Runs several checks over one family, instance by instance, so that the
/// derivations of each carrier are solved once and dropped afterwards.
pub(crate) fn run_batch(
    checks: &[CheckId],
    rings: &[Arc<FiniteRing>],
    groups: &[Arc<FiniteGroup>],
    caps: &Caps,
    samples: usize,
    seed: u64,
) -> Vec<Record> {
    let mut insts = Vec::new();
    if checks.iter().any(|c| c.on_rings()) {
        insts.extend(rings.iter().map(|r| Instance { ring: Arc::clone(r), group: None }));
    }
    if checks.iter().any(|c| c.on_group_rings() || c.on_carriers()) {
        for r in rings {
            for g in groups {
                insts.push(Instance { ring: Arc::clone(r), group: Some(Arc::clone(g)) });
            }
        }
    }
    insts.par_iter().flat_map_iter(|inst| run_instance(checks, caps, samples, seed, inst)).collect()
}

fn run_instance(checks: &[CheckId], caps: &Caps, samples: usize, seed: u64, inst: &Instance) -> Vec<Record> {
    let memo = checks::Memo::default();
    let gr = inst.group.as_ref().map(|g| crate::group_ring::GroupRing::with_cap(&inst.ring, g, caps.rank));
    let mut records = Vec::new();
    for &check in checks {
        let ctx = Ctx { check, caps, samples, memo: &memo };
        let result = match &gr {
            None if check.on_rings() => checks::run_ring(&ctx, &inst.ring, None),
            Some(gr) if check.on_carriers() => gr
                .as_ref()
                .map_err(Clone::clone)
                .and_then(|gr| checks::run_ring(&ctx, &gr.carrier_arc(), Some(gr))),
            Some(gr) if check.on_group_rings() => gr
                .as_ref()
                .map_err(Clone::clone)
                .and_then(|gr| checks::run_group_ring(&ctx, gr, checks::instance_seed(seed, &inst.key()))),
            _ => continue,
        };
        match result {
            Ok(r) => records.extend(r),
            Err(e) => records.push(instance_failure(check, inst, e)),
        }
    }
    records
}

fn instance_failure(check: CheckId, inst: &Instance, e: Error) -> Record {
    let verdict = if matches!(e, Error::CapExceeded { .. }) { Verdict::Capped } else { Verdict::Fail };
    let why = e.to_string();
    Record {
        check,
        claim: "instance".into(),
        ring: inst.ring.label(),
        group: inst.group.as_ref().map(|g| g.label()),
        hypothesis: String::new(),
        hypothesis_satisfied: false,
        verdict,
        witness: (verdict == Verdict::Fail).then(|| Value::String(why.clone())),
        detail: serde_json::json!({ "error": why }),
    }
}
