//! Run reports: the structured result of one command, renderable as JSON, CSV or text.

use serde::{Deserialize, Serialize};

use crate::codes::{Family, GeneratorExport, LinearCode, WeightDistribution};
use crate::designs::Design;
use crate::gf::FieldSpec;
use crate::lrc::{ClaimStatus, Locality, LrcAnalysis, Subject};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckStatus {
    Pass,
    Fail,
    /// Not a pass/fail claim: evidence, or a recorded discrepancy that is tolerated by design.
    Noted,
}

impl CheckStatus {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            CheckStatus::Pass
        } else {
            CheckStatus::Fail
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            CheckStatus::Pass => "PASS",
            CheckStatus::Fail => "FAIL",
            CheckStatus::Noted => "NOTE",
        }
    }
}

/// One reference claim compared against a computed value.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub id: String,
    pub claim: String,
    pub computed: String,
    pub status: CheckStatus,
}

impl Check {
    pub fn new(id: impl Into<String>, claim: impl Into<String>, computed: impl Into<String>, ok: bool) -> Self {
        Check { id: id.into(), claim: claim.into(), computed: computed.into(), status: CheckStatus::from_bool(ok) }
    }

    pub fn noted(id: impl Into<String>, claim: impl Into<String>, computed: impl Into<String>) -> Self {
        Check { id: id.into(), claim: claim.into(), computed: computed.into(), status: CheckStatus::Noted }
    }

    /// Compares two displayable values for equality.
    pub fn eq<T: PartialEq + std::fmt::Display>(id: impl Into<String>, expected: T, got: T) -> Self {
        let ok = expected == got;
        Check::new(id, expected.to_string(), got.to_string(), ok)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeSummary {
    pub family: Family,
    pub n: usize,
    pub k: usize,
    pub alphabet_size: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub d: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub d_perp: Option<u32>,
}

impl CodeSummary {
    pub fn of(code: &LinearCode) -> Self {
        CodeSummary {
            family: code.family(),
            n: code.n(),
            k: code.k(),
            alphabet_size: code.alphabet_size(),
            d: None,
            d_perp: None,
        }
    }

    pub fn brackets(&self) -> String {
        match self.d {
            Some(d) => format!("[{}, {}, {}]", self.n, self.k, d),
            None => format!("[{}, {}]", self.n, self.k),
        }
    }
}

/// A design verdict without the block list unless requested.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DesignSummary {
    pub label: String,
    pub n_points: usize,
    pub kappa: usize,
    pub t: u32,
    pub lambda: Option<u64>,
    pub block_count: usize,
    pub verified: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub blocks: Option<Vec<Vec<u32>>>,
}

impl DesignSummary {
    pub fn of(label: impl Into<String>, d: &Design, with_blocks: bool) -> Self {
        DesignSummary {
            label: label.into(),
            n_points: d.n_points,
            kappa: d.kappa,
            t: d.t,
            lambda: d.lambda,
            block_count: d.block_count(),
            verified: d.verified,
            blocks: with_blocks.then(|| d.blocks.clone()),
        }
    }

    /// "t-(n,k,lambda) verified" or a failure line.
    pub fn verdict(&self) -> String {
        match (self.verified, self.lambda) {
            (true, Some(l)) => format!("{}-({},{},{}) verified", self.t, self.n_points, self.kappa, l),
            _ => format!("not a {}-design on {} points (block size {})", self.t, self.n_points, self.kappa),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunReport {
    pub command: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub field: Option<FieldSpec>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub code: Option<CodeSummary>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub generator: Option<GeneratorExport>,
    pub weights: Vec<WeightDistribution>,
    pub designs: Vec<DesignSummary>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lrc: Option<LrcAnalysis>,
    pub checks: Vec<Check>,
    pub notes: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

impl RunReport {
    pub fn new(command: Vec<String>) -> Self {
        RunReport { command, ..Default::default() }
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == CheckStatus::Fail)
    }

    pub fn passed(&self) -> bool {
        self.failures().next().is_none()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Flat CSV with columns record, key, value, status.
    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        let mut row = |a: &str, b: &str, c: &str, d: &str| w.write_record([a, b, c, d]).expect("in-memory write");
        row("record", "key", "value", "status");
        if let Some(f) = &self.field {
            row("field", "p", &f.p.to_string(), "");
            row("field", "m", &f.m.to_string(), "");
            let modulus = f.modulus.iter().map(u32::to_string).collect::<Vec<_>>().join(" ");
            row("field", "modulus", &modulus, "");
        }
        if let Some(c) = &self.code {
            row("code", "n", &c.n.to_string(), "");
            row("code", "k", &c.k.to_string(), "");
            row("code", "alphabet_size", &c.alphabet_size.to_string(), "");
            if let Some(d) = c.d {
                row("code", "d", &d.to_string(), "");
            }
            if let Some(d) = c.d_perp {
                row("code", "d_perp", &d.to_string(), "");
            }
        }
        for wd in &self.weights {
            let src = source_label(wd);
            for (wt, count) in &wd.counts {
                row(&format!("weight/{src}"), &wt.to_string(), &count.to_string(), "");
            }
        }
        for d in &self.designs {
            row("design", &d.label, &d.verdict(), if d.verified { "pass" } else { "fail" });
        }
        for c in &self.checks {
            let status = c.status.label().to_ascii_lowercase();
            row("check", &c.id, &format!("{} | {}", c.claim, c.computed), &status);
        }
        for n in &self.notes {
            row("note", "", n, "");
        }
        if let Some(ms) = self.elapsed_ms {
            row("timing", "elapsed_ms", &ms.to_string(), "");
        }
        drop(row);
        String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        if let Some(f) = &self.field {
            let modulus = f.modulus.iter().map(u32::to_string).collect::<Vec<_>>().join(",");
            out.push_str(&format!("field: GF({}^{}) modulus [{}]\n", f.p, f.m, modulus));
        }
        if let Some(c) = &self.code {
            out.push_str(&format!("code: {} over an alphabet of size {}\n", c.brackets(), c.alphabet_size));
            if let Some(dp) = c.d_perp {
                out.push_str(&format!("dual: [{}, {}, {}]\n", c.n, c.n - c.k, dp));
            }
        }
        if let Some(g) = &self.generator {
            out.push_str("generator (element indices):\n");
            for r in &g.rows {
                out.push_str(&format!("  {}\n", r.iter().map(u32::to_string).collect::<Vec<_>>().join(" ")));
            }
        }
        for wd in &self.weights {
            out.push_str(&format!("weights [{}]: {}\n", source_label(wd), wd.enumerator_string()));
        }
        for d in &self.designs {
            out.push_str(&format!("design {}: {}\n", d.label, d.verdict()));
        }
        if let Some(l) = &self.lrc {
            for (name, prof) in [("code", &l.code), ("dual", &l.dual)] {
                let yn = |v: Option<bool>| v.map_or("unverified", |b| if b { "yes" } else { "no" });
                out.push_str(&format!(
                    "{name} {}: d-optimal: {}, k-optimal: {}\n",
                    prof.tuple(),
                    yn(prof.d_optimal),
                    yn(prof.k_optimal)
                ));
            }
        }
        for c in &self.checks {
            out.push_str(&format!("[{}] {}: {} | {}\n", c.status.label(), c.id, c.claim, c.computed));
        }
        for n in &self.notes {
            out.push_str(&format!("note: {n}\n"));
        }
        if !self.checks.is_empty() {
            let pass = self.checks.iter().filter(|c| c.status == CheckStatus::Pass).count();
            let fail = self.failures().count();
            let noted = self.checks.len() - pass - fail;
            out.push_str(&format!("summary: {pass} passed, {fail} failed, {noted} noted\n"));
        }
        if let Some(ms) = self.elapsed_ms {
            out.push_str(&format!("elapsed: {ms} ms\n"));
        }
        out
    }
}

/// LRC claims as checks under `prefix`; a flagged claim is noted rather than failed.
pub fn lrc_checks(prefix: &str, lrc: &LrcAnalysis) -> Vec<Check> {
    let mut out = Vec::new();
    for (name, prof) in [("code", &lrc.code), ("dual", &lrc.dual)] {
        let (ok, computed) = match &prof.locality {
            Locality::Verified { r, lambda1 } => (true, format!("r = {r}, each coordinate in {lambda1} supports")),
            Locality::HypothesisUnverified { reason } => (false, reason.clone()),
        };
        out.push(Check::new(format!("{prefix}/{name}/one-design-hypothesis"), "supports form a 1-design", computed, ok));
    }
    for c in &lrc.claims {
        let subject = match c.subject {
            Subject::Code => "code",
            Subject::Dual => "dual",
        };
        let id = format!("{prefix}/{}/{subject}/{}", c.rule, c.property.replace(' ', "-"));
        let mut computed = c.computed.clone();
        if let Some(note) = &c.note {
            computed.push_str(&format!(" ({note})"));
        }
        let status = match c.status {
            ClaimStatus::Match => CheckStatus::Pass,
            ClaimStatus::Mismatch => CheckStatus::Fail,
            ClaimStatus::Flagged => CheckStatus::Noted,
        };
        out.push(Check { id, claim: c.printed.clone(), computed, status });
    }
    out
}

fn source_label(wd: &WeightDistribution) -> String {
    match &wd.source {
        crate::codes::WeightSource::BruteForce => "brute".into(),
        crate::codes::WeightSource::ClosedForm { form } => format!("closed:{form}"),
        crate::codes::WeightSource::MomentSolve => "moments".into(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn renders_all_formats() {
        let mut r = RunReport::new(vec!["affcodes".into(), "weights".into()]);
        r.checks.push(Check::eq("x", 1, 1));
        r.checks.push(Check::new("y", "a, \"b\"", "c", false));
        assert!(!r.passed());
        let csv = r.to_csv();
        assert!(csv.starts_with("record,key,value,status\n"));
        assert!(csv.contains("\"a, \"\"b\"\" | c\""));
        assert!(r.to_text().contains("summary: 1 passed, 1 failed, 0 noted"));
        let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(v["checks"][1]["status"], "fail");
    }
}
