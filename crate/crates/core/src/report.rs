//! Report values shared by the checks and the CLI renderers.

use serde::{Deserialize, Serialize};

/// Serializes `Vec<(L, BigUint)>` as an object `{label: "digits", ...}` in
/// the vector's order.
pub mod big_pairs {
    use std::fmt::{self, Display};
    use std::marker::PhantomData;
    use std::str::FromStr;

    use num_bigint::BigUint;
    use serde::de::{Error as _, MapAccess, Visitor};
    use serde::{Deserializer, Serializer};

    pub fn serialize<L: Display, S: Serializer>(v: &[(L, BigUint)], s: S) -> Result<S::Ok, S::Error> {
        s.collect_map(v.iter().map(|(l, m)| (l.to_string(), m.to_string())))
    }

    struct PairsVisitor<L>(PhantomData<L>);

    impl<'de, L> Visitor<'de> for PairsVisitor<L>
    where
        L: FromStr,
        L::Err: Display,
    {
        type Value = Vec<(L, BigUint)>;

        fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
            f.write_str("a map from labels to decimal strings")
        }

        fn visit_map<A: MapAccess<'de>>(self, mut map: A) -> Result<Self::Value, A::Error> {
            let mut out = Vec::new();
            while let Some((l, m)) = map.next_entry::<String, String>()? {
                let l = l.parse::<L>().map_err(A::Error::custom)?;
                let m = m.parse::<BigUint>().map_err(A::Error::custom)?;
                out.push((l, m));
            }
            Ok(out)
        }
    }

    pub fn deserialize<'de, L, D>(d: D) -> Result<Vec<(L, BigUint)>, D::Error>
    where
        L: FromStr,
        L::Err: Display,
        D: Deserializer<'de>,
    {
        d.deserialize_map(PairsVisitor(PhantomData))
    }
}

pub const REPORT_SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    EngineComputed,
    GoldenData,
}

/// A multiplicity table: one labelled row per character, one value per
/// column. Values are decimal strings.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Table {
    pub title: String,
    pub columns: Vec<String>,
    pub rows: Vec<(String, Vec<String>)>,
}

impl Table {
    pub fn new(title: impl Into<String>, columns: &[&str]) -> Self {
        Table { title: title.into(), columns: columns.iter().map(|c| c.to_string()).collect(), rows: Vec::new() }
    }

    pub fn push(&mut self, label: impl Into<String>, values: Vec<String>) {
        self.rows.push((label.into(), values));
    }
}

/// Outcome of one named check.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub check: String,
    pub subject: String,
    pub status: Status,
    pub provenance: Provenance,
    pub summary: Vec<String>,
    pub tables: Vec<Table>,
    /// The underlying result in machine-readable form.
    pub data: serde_json::Value,
}

impl Report {
    pub fn new(check: &str, subject: impl Into<String>, passed: bool) -> Self {
        Report {
            check: check.into(),
            subject: subject.into(),
            status: if passed { Status::Pass } else { Status::Fail },
            provenance: Provenance::EngineComputed,
            summary: Vec::new(),
            tables: Vec::new(),
            data: serde_json::Value::Null,
        }
    }

    pub fn with_data<T: Serialize>(mut self, data: &T) -> Self {
        self.data = serde_json::to_value(data).unwrap_or(serde_json::Value::Null);
        self
    }

    pub fn note(mut self, line: impl Into<String>) -> Self {
        self.summary.push(line.into());
        self
    }

    pub fn table(mut self, t: Table) -> Self {
        self.tables.push(t);
        self
    }

    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }
}

#[derive(Serialize)]
struct ReportStream<'a> {
    schema_version: u32,
    passed: bool,
    reports: &'a [Report],
}

pub fn render_json(reports: &[Report]) -> String {
    let s = ReportStream { schema_version: REPORT_SCHEMA_VERSION, passed: reports.iter().all(Report::passed), reports };
    serde_json::to_string_pretty(&s).expect("reports serialize")
}

const GRID_COLUMNS: usize = 3;

/// Markdown with each table as a "label (m)" grid.
pub fn render_markdown(reports: &[Report]) -> String {
    let mut out = String::new();
    for r in reports {
        let status = match r.status {
            Status::Pass => "pass",
            Status::Fail => "FAIL",
            Status::Skipped => "skipped",
        };
        let prov = match r.provenance {
            Provenance::EngineComputed => "engine-computed",
            Provenance::GoldenData => "golden-data",
        };
        out.push_str(&format!("## {} {}: {status} ({prov})\n\n", r.check, r.subject));
        for s in &r.summary {
            out.push_str(&format!("- {s}\n"));
        }
        if !r.summary.is_empty() {
            out.push('\n');
        }
        for t in &r.tables {
            if !t.title.is_empty() {
                out.push_str(&t.title.to_string());
                if t.columns.len() > 1 {
                    out.push_str(&format!(" [{}]", t.columns.join(", ")));
                }
                out.push_str("\n\n");
            }
            let cells: Vec<String> = t
                .rows
                .iter()
                .map(|(l, v)| {
                    let ms: Vec<String> = v.iter().map(|m| format!("({m})")).collect();
                    format!("{l} {}", ms.join(" "))
                })
                .collect();
            let width = cells.iter().map(|c| c.chars().count()).max().unwrap_or(0);
            out.push_str("```\n");
            let per_line = if t.columns.len() <= 2 { GRID_COLUMNS } else { 1 };
            for chunk in cells.chunks(per_line) {
                let line: Vec<String> =
                    chunk.iter().map(|c| format!("{c}{}", " ".repeat(width - c.chars().count()))).collect();
                out.push_str(line.join("   ").trim_end());
                out.push('\n');
            }
            out.push_str("```\n\n");
        }
    }
    let passed = reports.iter().all(Report::passed);
    out.push_str(if passed { "all checks passed\n" } else { "some checks FAILED\n" });
    out
}
