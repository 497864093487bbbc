use super::{build_family, run_batch, run_scenario, Caps, CheckId, Report, ScenarioConfig};
use crate::error::Result;

/// Rings of the default family: every ℤ/m up to 30, the small fields, and
/// the two 2×2 matrix rings.
pub fn default_rings() -> Vec<String> {
    let mut v: Vec<String> = (2..=30).map(|m| format!("Zmod({m})")).collect();
    v.extend(["F2", "F3", "F4", "F5", "Mat(2, Zmod(2))", "Mat(2, Zmod(3))"].map(String::from));
    v
}

pub fn default_groups() -> Vec<String> {
    let mut v: Vec<String> = (2..=12).map(|n| format!("C{n}")).collect();
    v.extend(["C2xC2", "C2xC4", "S3", "D4", "D5", "Q8", "A4", "Heis3"].map(String::from));
    v
}

/// One representative of each abelian group of order at most `n`, by
/// invariant factors `d₁ | d₂ | …`.
pub fn abelian_groups_up_to(n: usize) -> Vec<String> {
    fn rec(remaining: usize, min_factor: usize, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if remaining == 1 {
            out.push(acc.clone());
            return;
        }
        for d in 2..=remaining {
            if remaining.is_multiple_of(d) && d % min_factor == 0 {
                acc.push(d);
                rec(remaining / d, d, acc, out);
                acc.pop();
            }
        }
    }
    let mut out = vec!["1".to_string()];
    for order in 2..=n {
        let mut factors = Vec::new();
        rec(order, 1, &mut Vec::new(), &mut factors);
        // invariant factors are listed smallest first, each dividing the next
        for f in factors {
            out.push(f.iter().map(|d| format!("C{d}")).collect::<Vec<_>>().join("x"));
        }
    }
    out
}

/// Checks run by a full scan, in report order.
pub fn scan_checks() -> Vec<CheckId> {
    CheckId::ALL.to_vec()
}

/// Every check over the default family (T2 over all abelian groups of order
/// at most 16), merged into one report.
pub fn scan(seed: u64, caps: &Caps, samples: usize, checks: &[CheckId]) -> Result<Report> {
    let mut reports = Vec::new();
    if checks.contains(&CheckId::T2) {
        let mut rings = vec!["Zmod(1)".to_string()];
        rings.extend(default_rings());
        let mut cfg = ScenarioConfig::new(CheckId::T2).with_rings(rings).with_groups(abelian_groups_up_to(16));
        cfg.seed = seed;
        cfg.caps = caps.clone();
        cfg.samples = samples;
        reports.push(run_scenario(&cfg)?);
    }
    let rest: Vec<CheckId> = checks.iter().copied().filter(|&c| c != CheckId::T2).collect();
    if !rest.is_empty() {
        let mut cfg = ScenarioConfig::new(rest[0]).with_rings(default_rings()).with_groups(default_groups());
        cfg.caps = caps.clone();
        let (rings, groups) = build_family(&cfg)?;
        let records = run_batch(&rest, &rings, &groups, caps, samples, seed);
        reports.push(Report::new(seed, rest, records));
    }
    Ok(Report::merge(reports, seed))
}
