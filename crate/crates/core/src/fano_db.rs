//! Classification table of Fano threefolds with cyclic Picard group, plus
//! tabulated facts about their lines and conics.
//!
//! The table ships as a tab-separated text file embedded at compile time
//! (`data/fano_threefolds.tsv`). Loading rejects any record that fails
//! [`validate`].

use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::riemann_roch::{chi_threefold, ThreefoldIntersectionData};
use crate::wps::WeightVector;

pub const EMBEDDED_TABLE: &str = include_str!("../data/fano_threefolds.tsv");

pub const TABLE_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FanoRecord {
    pub name: String,
    pub index: i64,
    pub h3: i64,
    pub genus: Option<i64>,
    pub b3: Option<i64>,
    pub very_ample: bool,
    pub h0_h: i64,
    pub facts: BTreeMap<String, String>,
    pub description: String,
}

impl FanoRecord {
    fn fact_int(&self, key: &str) -> Option<i64> {
        self.facts.get(key).and_then(|v| v.parse().ok())
    }

    pub fn lines_through_general_point(&self) -> Option<i64> {
        self.fact_int("lines_through_general_point")
    }

    /// `k` with `D ~ kH` for the surface swept by the special lines.
    pub fn special_surface_multiple(&self) -> Option<i64> {
        self.fact_int("special_surface_multiple")
    }

    pub fn special_surface_lower_bound(&self) -> Option<i64> {
        self.fact_int("special_surface_lower_bound")
    }

    pub fn hilbert_scheme_notes(&self) -> Option<&str> {
        self.facts.get("hilbert_scheme_notes").map(String::as_str)
    }

    pub fn is_mukai_umemura(&self) -> bool {
        self.facts.get("mukai_umemura").is_some_and(|v| v == "true")
    }

    /// Betti number supplied from outside the source tables.
    pub fn b3_is_external(&self) -> bool {
        self.facts.get("b3_source").is_some_and(|v| v == "external")
    }

    /// Weighted projective space containing the standard model, for records
    /// whose `H` is not very ample.
    pub fn ambient(&self) -> Option<WeightVector> {
        self.facts.get("ambient").and_then(|v| v.parse().ok())
    }

    pub fn b3_required(&self) -> Result<i64> {
        self.b3.ok_or_else(|| Error::MissingBetti(self.name.clone()))
    }

    fn to_tsv_line(&self) -> String {
        let dash = |v: Option<i64>| v.map_or("-".to_string(), |x| x.to_string());
        let facts: Vec<String> = self.facts.iter().map(|(k, v)| format!("{k}={v}")).collect();
        format!(
            "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
            self.name,
            self.index,
            self.h3,
            dash(self.genus),
            dash(self.b3),
            self.very_ample,
            self.h0_h,
            facts.join(","),
            self.description
        )
    }
}

impl fmt::Display for FanoRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (index {}, H^3 = {}", self.name, self.index, self.h3)?;
        if let Some(g) = self.genus {
            write!(f, ", g = {g}")?;
        }
        if let Some(b) = self.b3 {
            write!(f, ", b3 = {b}")?;
        }
        write!(f, "): {}", self.description)
    }
}

/// A broken invariant of a [`FanoRecord`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub rule: &'static str,
    pub message: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.rule, self.message)
    }
}

pub fn validate(rec: &FanoRecord) -> Vec<Violation> {
    let mut out = Vec::new();
    let mut fail = |rule: &'static str, message: String| out.push(Violation { rule, message });

    if !(1..=4).contains(&rec.index) {
        fail("index-range", format!("index {} outside 1..=4", rec.index));
        return out;
    }
    if rec.h3 < 1 {
        fail("degree-positive", format!("H^3 = {} must be positive", rec.h3));
        return out;
    }
    match rec.index {
        4 if rec.name != "P3" || rec.h3 != 1 => {
            fail("index-4-is-P3", format!("index 4 forces P3 with H^3 = 1, got {} with {}", rec.name, rec.h3))
        }
        3 if rec.name != "Q3" || rec.h3 != 2 => {
            fail("index-3-is-Q3", format!("index 3 forces Q3 with H^3 = 2, got {} with {}", rec.name, rec.h3))
        }
        2 => {
            if !(1..=5).contains(&rec.h3) {
                fail("index-2-degree", format!("H^3 = {} outside 1..=5", rec.h3));
            }
            if rec.very_ample != (rec.h3 >= 3) {
                fail("index-2-very-ample", format!("H very ample must hold exactly when H^3 >= 3 (H^3 = {})", rec.h3));
            }
        }
        1 => {
            if rec.h3 % 2 != 0 {
                fail("index-1-parity", format!("(-K)^3 = {} is odd", rec.h3));
            } else if !(2..=22).contains(&rec.h3) || rec.h3 == 20 {
                fail("index-1-degree", format!("H^3 = {} is not an even value in 2..=22 other than 20", rec.h3));
            }
            match rec.genus {
                Some(g) if 2 * g - 2 == rec.h3 => {}
                Some(g) => fail("index-1-genus", format!("H^3 = {} but 2g - 2 = {}", rec.h3, 2 * g - 2)),
                None => fail("index-1-genus", "genus missing".to_string()),
            }
            if rec.h3 > 4 && !rec.very_ample {
                fail("index-1-very-ample", format!("-K is very ample for H^3 = {} > 4", rec.h3));
            }
        }
        _ => {}
    }
    if rec.index != 1 && rec.genus.is_some() {
        fail("genus-index-1-only", format!("genus given for index {}", rec.index));
    }
    if let Some(b3) = rec.b3 {
        if b3 < 0 || b3 % 2 != 0 {
            fail("b3-even", format!("b3 = {b3} must be even and nonnegative"));
        }
    }
    // h^0(H) = chi(H) by Kodaira vanishing, since H - K = (1 + r)H is ample.
    if let Ok(data) = ThreefoldIntersectionData::fano(rec.index, rec.h3, 1) {
        let chi = chi_threefold(&data);
        if chi.to_integer() != BigInt::from(rec.h0_h) || !chi.is_integer() {
            fail("h0-riemann-roch", format!("h0(H) = {} but chi(O(H)) = {}", rec.h0_h, chi));
        }
    }
    if !rec.very_ample && rec.ambient().is_none() {
        fail("ambient-model", "H is not very ample but no weighted ambient is recorded".to_string());
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FanoDatabase {
    version: u32,
    records: Vec<FanoRecord>,
}

impl FanoDatabase {
    /// The table compiled into the crate.
    pub fn embedded() -> &'static FanoDatabase {
        static DB: OnceLock<FanoDatabase> = OnceLock::new();
        DB.get_or_init(|| FanoDatabase::from_tsv(EMBEDDED_TABLE).expect("embedded table is valid"))
    }

    /// Parses a table, rejecting it if any record violates an invariant.
    pub fn from_tsv(text: &str) -> Result<Self> {
        let (version, parsed) = parse_table(text)?;
        let mut records: Vec<FanoRecord> = Vec::new();
        for (line, rec) in parsed {
            let err = |message: String| Error::Table { line, message };
            let violations = validate(&rec);
            if !violations.is_empty() {
                let msgs: Vec<String> = violations.iter().map(Violation::to_string).collect();
                return Err(err(format!("{}: {}", rec.name, msgs.join("; "))));
            }
            if records.iter().any(|r| r.name == rec.name) {
                return Err(err(format!("duplicate record {}", rec.name)));
            }
            records.push(rec);
        }
        Ok(FanoDatabase { version, records })
    }

    /// Parses a table without rejecting invalid records and reports every
    /// record with its violations. Syntax errors still fail.
    pub fn audit_tsv(text: &str) -> Result<Vec<RecordAudit>> {
        let (_, parsed) = parse_table(text)?;
        let mut seen: Vec<String> = Vec::new();
        Ok(parsed
            .into_iter()
            .map(|(line, rec)| {
                let mut violations = validate(&rec);
                if seen.contains(&rec.name) {
                    violations.push(Violation { rule: "unique-name", message: format!("duplicate record {}", rec.name) });
                }
                seen.push(rec.name.clone());
                RecordAudit { line, name: rec.name, violations }
            })
            .collect())
    }

    pub fn to_tsv(&self) -> String {
        let mut out = format!("#version\t{}\n", self.version);
        out.push_str("# columns: name\tindex\tH^3\tgenus\tb3\tvery_ample\th0(H)\tfacts\tdescription\n");
        for r in &self.records {
            out.push_str(&r.to_tsv_line());
            out.push('\n');
        }
        out
    }

    pub fn version(&self) -> u32 {
        self.version
    }

    pub fn records(&self) -> &[FanoRecord] {
        &self.records
    }

    /// Case-insensitive lookup by name.
    pub fn lookup(&self, name: &str) -> Result<&FanoRecord> {
        self.records
            .iter()
            .find(|r| r.name.eq_ignore_ascii_case(name.trim()))
            .ok_or_else(|| Error::UnknownFamily(name.to_string()))
    }
}

/// Looks up a family in the embedded table.
pub fn lookup(name: &str) -> Result<&'static FanoRecord> {
    FanoDatabase::embedded().lookup(name)
}

/// Outcome of validating one line of a table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecordAudit {
    pub line: usize,
    pub name: String,
    pub violations: Vec<Violation>,
}

fn parse_table(text: &str) -> Result<(u32, Vec<(usize, FanoRecord)>)> {
    let mut version = None;
    let mut records = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let err = |message: String| Error::Table { line, message };
        if let Some(v) = raw.strip_prefix("#version\t") {
            let v: u32 = v.trim().parse().map_err(|_| err(format!("bad version `{v}`")))?;
            if v != TABLE_VERSION {
                return Err(err(format!("unsupported table version {v}")));
            }
            version = Some(v);
            continue;
        }
        if raw.trim().is_empty() || raw.starts_with('#') {
            continue;
        }
        records.push((line, parse_record(raw).map_err(err)?));
    }
    let version = version.ok_or(Error::Table { line: 1, message: "missing #version header".into() })?;
    Ok((version, records))
}

fn parse_record(line: &str) -> std::result::Result<FanoRecord, String> {
    let cols: Vec<&str> = line.split('\t').collect();
    if cols.len() != 9 {
        return Err(format!("expected 9 tab-separated columns, found {}", cols.len()));
    }
    let int = |s: &str, what: &str| s.trim().parse::<i64>().map_err(|_| format!("bad {what} `{s}`"));
    let opt = |s: &str, what: &str| if s.trim() == "-" { Ok(None) } else { int(s, what).map(Some) };
    let very_ample = match cols[5].trim() {
        "true" => true,
        "false" => false,
        other => return Err(format!("bad very_ample `{other}`")),
    };
    let mut facts = BTreeMap::new();
    for pair in cols[7].split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let (k, v) = pair.split_once('=').ok_or_else(|| format!("bad fact `{pair}`"))?;
        facts.insert(k.trim().to_string(), v.trim().to_string());
    }
    Ok(FanoRecord {
        name: cols[0].trim().to_string(),
        index: int(cols[1], "index")?,
        h3: int(cols[2], "H^3")?,
        genus: opt(cols[3], "genus")?,
        b3: opt(cols[4], "b3")?,
        very_ample,
        h0_h: int(cols[6], "h0")?,
        facts,
        description: cols[8].trim().to_string(),
    })
}

/// Splitting type `O(a) + O(b)` of a normal bundle, stored with `a >= b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NormalBundleOption {
    pub a: i64,
    pub b: i64,
    /// Only occurs when `H` is not very ample.
    pub flagged: bool,
}

impl NormalBundleOption {
    pub fn new(a: i64, b: i64) -> Self {
        NormalBundleOption { a: a.max(b), b: a.min(b), flagged: false }
    }

    fn flagged(a: i64, b: i64) -> Self {
        NormalBundleOption { flagged: true, ..Self::new(a, b) }
    }

    pub fn pair(&self) -> (i64, i64) {
        (self.a, self.b)
    }

    pub fn degree(&self) -> i64 {
        self.a + self.b
    }
}

impl fmt::Display for NormalBundleOption {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a, self.b)?;
        if self.flagged {
            write!(f, "*")?;
        }
        Ok(())
    }
}

/// Normal bundle types of lines on a Fano threefold of index `r`; the
/// degree is `r - 2` by adjunction.
pub fn line_normal_bundle_options(r: i64, very_ample: bool) -> Result<Vec<NormalBundleOption>> {
    let mut out = match r {
        2 => vec![NormalBundleOption::new(0, 0), NormalBundleOption::new(1, -1)],
        1 => vec![NormalBundleOption::new(0, -1), NormalBundleOption::new(1, -2)],
        _ => return Err(Error::InvalidArgument(format!("line normal bundles tabulated for index 1 and 2, not {r}"))),
    };
    // finitely many (2,-2)-lines on A2, coming from lines in the branch quartic
    if r == 2 && !very_ample {
        out.push(NormalBundleOption::flagged(2, -2));
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConicNormalBundle {
    pub option: NormalBundleOption,
    pub note: Option<&'static str>,
}

/// Normal bundles `O(a) + O(-a)` of smooth conics on an anticanonically
/// embedded index-one threefold.
pub fn conic_normal_bundle_degrees() -> Vec<ConicNormalBundle> {
    [0, 1, 2, 4]
        .into_iter()
        .map(|a| ConicNormalBundle {
            option: NormalBundleOption::new(a, -a),
            note: match a {
                0 => Some("generic conic"),
                4 => Some("X is a quartic and the plane of the conic is tangent along it"),
                _ => None,
            },
        })
        .collect()
}

/// `dim G(1,n) - h^0(O_{P^1}(d))`: expected dimension of the family of lines
/// on a degree-`d` hypersurface in `P^n`.
pub fn expected_line_family_dim(n: i64, d: i64) -> Result<i64> {
    if n < 2 || d < 1 {
        return Err(Error::InvalidArgument(format!("need n >= 2 and d >= 1, got n = {n}, d = {d}")));
    }
    Ok(2 * (n - 1) - (d + 1))
}
