//! The JSON file formats: parsing with file/line/field diagnostics, and the
//! canonical serialization.
//!
//! Literals are strings in the semiring's own syntax (`"1/2"`, `"inf"`,
//! `"[1/2,1/2]"`, `"(1/2,1)"`); integers may also be written as JSON numbers.
//! Canonical output is two-space indented JSON with a trailing newline, keys
//! in the documented order, consequences in space order and zero masses
//! omitted.

use std::fs;
use std::path::{Path, PathBuf};

use aeu_core::lab::PreferenceTable;
use aeu_core::measure::Act;
use aeu_core::{
    BinaryValue, Branch, Comparison, ConsequenceSpace, Descriptor, Lottery, PlausibilityMeasure, Semiring,
    UtilityAssignment, Value,
};
use serde_json::{json, Map, Value as Json};

use crate::error::CliError;

/// A parsed input file with enough context for error messages.
pub struct Source {
    pub path: PathBuf,
    text: String,
    root: Map<String, Json>,
}

impl Source {
    pub fn read(path: &Path) -> Result<Self, CliError> {
        let text = fs::read_to_string(path).map_err(|source| CliError::Io {
            path: path.to_path_buf(),
            source,
        })?;
        Self::parse(path, text)
    }

    pub fn parse(path: &Path, text: String) -> Result<Self, CliError> {
        let root = match serde_json::from_str::<Json>(&text) {
            Ok(Json::Object(map)) => map,
            Ok(_) => {
                return Err(CliError::Parse {
                    path: path.to_path_buf(),
                    line: 1,
                    field: "<root>".into(),
                    message: "expected a JSON object".into(),
                })
            }
            Err(e) => {
                return Err(CliError::Parse {
                    path: path.to_path_buf(),
                    line: e.line(),
                    field: "<json>".into(),
                    message: e.to_string(),
                })
            }
        };
        Ok(Source {
            path: path.to_path_buf(),
            text,
            root,
        })
    }

    /// A parse error located by walking the field path through the text:
    /// each segment is searched for after the previous one, then `needle`.
    pub fn error(&self, field: &str, needle: &str, message: impl Into<String>) -> CliError {
        let mut at = 0;
        let segments = field.split('.').map(|s| s.split('[').next().unwrap_or(s));
        for key in segments
            .chain([needle])
            .filter(|k| !k.is_empty() && !k.starts_with('<'))
        {
            if let Some(i) = self.text[at..].find(&format!("\"{key}\"")) {
                at += i;
            }
        }
        let line = self.text[..at].matches('\n').count() + 1;
        CliError::Parse {
            path: self.path.clone(),
            line,
            field: field.into(),
            message: message.into(),
        }
    }

    fn get(&self, key: &str) -> Result<&Json, CliError> {
        self.root.get(key).ok_or_else(|| self.error(key, key, "missing"))
    }

    fn string(&self, value: &Json, field: &str, needle: &str) -> Result<String, CliError> {
        value
            .as_str()
            .map(str::to_owned)
            .ok_or_else(|| self.error(field, needle, "expected a string"))
    }

    fn strings(&self, key: &str) -> Result<Vec<String>, CliError> {
        match self.get(key)? {
            Json::Array(items) => items.iter().map(|v| self.string(v, key, key)).collect(),
            _ => Err(self.error(key, key, "expected a list of strings")),
        }
    }

    pub fn descriptor(&self) -> Result<Descriptor, CliError> {
        let text = self.string(self.get("semiring")?, "semiring", "semiring")?;
        text.parse()
            .map_err(|e: aeu_core::Error| self.error("semiring", "semiring", e.to_string()))
    }

    /// A literal: a string, or a non-negative integer written as a number.
    fn literal(&self, d: &Descriptor, value: &Json, field: &str, needle: &str) -> Result<Value, CliError> {
        let text = match value {
            Json::String(s) => s.clone(),
            Json::Number(n) if n.is_u64() => n.to_string(),
            _ => return Err(self.error(field, needle, "expected a literal string or a non-negative integer")),
        };
        d.parse(&text).map_err(|e| self.error(field, needle, e.to_string()))
    }

    fn space_from(&self, obj: &Map<String, Json>, prefix: &str) -> Result<ConsequenceSpace, CliError> {
        let field = |k: &str| {
            if prefix.is_empty() {
                k.to_string()
            } else {
                format!("{prefix}.{k}")
            }
        };
        let names = match obj.get("consequences") {
            Some(Json::Array(items)) => items
                .iter()
                .map(|v| self.string(v, &field("consequences"), "consequences"))
                .collect::<Result<Vec<_>, _>>()?,
            Some(_) => return Err(self.error(&field("consequences"), "consequences", "expected a list of strings")),
            None => return Err(self.error(&field("consequences"), "consequences", "missing")),
        };
        let end = |k: &str| -> Result<String, CliError> {
            match obj.get(k) {
                Some(v) => self.string(v, &field(k), k),
                None => Err(self.error(&field(k), k, "missing")),
            }
        };
        let (best, worst) = (end("best")?, end("worst")?);
        ConsequenceSpace::new(names, &best, &worst)
            .map_err(|e| self.error(&field("consequences"), "consequences", e.to_string()))
    }

    pub fn space(&self) -> Result<ConsequenceSpace, CliError> {
        self.space_from(&self.root, "")
    }

    /// Whether the file carries a consequence space at the top level.
    pub fn has_space(&self) -> bool {
        self.root.contains_key("consequences")
    }

    fn node(
        &self,
        d: &Descriptor,
        space: &ConsequenceSpace,
        value: &Json,
        field: &str,
    ) -> Result<Lottery<Value>, CliError> {
        let obj = value.as_object().ok_or_else(|| {
            self.error(
                field,
                field.rsplit('.').next().unwrap_or(field),
                "expected a lottery node",
            )
        })?;
        if let Some(dist) = obj.get("simple") {
            let dist = dist
                .as_object()
                .ok_or_else(|| self.error(&format!("{field}.simple"), "simple", "expected an object"))?;
            let mut out = vec![d.zero(); space.len()];
            for (name, lit) in dist {
                let f = format!("{field}.simple.{name}");
                let x = space.index_of(name).map_err(|e| self.error(&f, name, e.to_string()))?;
                out[x] = self.literal(d, lit, &f, name)?;
            }
            return Lottery::simple(d, out)
                .map_err(|e| self.error(&format!("{field}.simple"), "simple", e.to_string()));
        }
        if let Some(branches) = obj.get("compound") {
            let items = branches.as_array().ok_or_else(|| {
                self.error(
                    &format!("{field}.compound"),
                    "compound",
                    "expected a list of [coefficient, node]",
                )
            })?;
            let mut out = Vec::with_capacity(items.len());
            for (i, item) in items.iter().enumerate() {
                let f = format!("{field}.compound[{i}]");
                match item.as_array().map(Vec::as_slice) {
                    Some([w, sub]) => out.push(Branch {
                        weight: self.literal(d, w, &f, "compound")?,
                        lottery: self.node(d, space, sub, &f)?,
                    }),
                    _ => return Err(self.error(&f, "compound", "expected [coefficient, node]")),
                }
            }
            return Lottery::compound(d, out)
                .map_err(|e| self.error(&format!("{field}.compound"), "compound", e.to_string()));
        }
        Err(self.error(
            field,
            field.rsplit('.').next().unwrap_or(field),
            "expected `simple` or `compound`",
        ))
    }

    pub fn lottery_file(&self) -> Result<LotteryFile, CliError> {
        let semiring = self.descriptor()?;
        let space = self.space()?;
        let lottery = self.node(&semiring, &space, self.get("lottery")?, "lottery")?;
        Ok(LotteryFile {
            semiring,
            space,
            lottery,
        })
    }

    pub fn measure_file(&self) -> Result<MeasureFile, CliError> {
        let semiring = self.descriptor()?;
        let states = self.strings("states")?;
        let weights = self
            .get("weights")?
            .as_object()
            .ok_or_else(|| self.error("weights", "weights", "expected an object"))?;
        for name in weights.keys() {
            if !states.contains(name) {
                return Err(self.error(&format!("weights.{name}"), name, "unknown state"));
            }
        }
        let values = states
            .iter()
            .map(|s| match weights.get(s) {
                Some(v) => self.literal(&semiring, v, &format!("weights.{s}"), s),
                None => Ok(semiring.zero()),
            })
            .collect::<Result<Vec<_>, _>>()?;
        let measure = PlausibilityMeasure::new(&semiring, states, values)
            .map_err(|e| self.error("weights", "weights", e.to_string()))?;
        Ok(MeasureFile { semiring, measure })
    }

    /// The assignment as (state, consequence) names, in file order.
    pub fn act_file(&self) -> Result<ActFile, CliError> {
        let act = self
            .get("act")?
            .as_object()
            .ok_or_else(|| self.error("act", "act", "expected an object"))?;
        let assignment = act
            .iter()
            .map(|(s, x)| Ok((s.clone(), self.string(x, &format!("act.{s}"), s)?)))
            .collect::<Result<Vec<_>, CliError>>()?;
        let space = if self.has_space() { Some(self.space()?) } else { None };
        Ok(ActFile { assignment, space })
    }

    pub fn utility_file(&self) -> Result<UtilityFile, CliError> {
        let semiring = self.descriptor()?;
        let space = self.space()?;
        let table = self
            .get("u")?
            .as_object()
            .ok_or_else(|| self.error("u", "u", "expected an object"))?;
        for name in table.keys() {
            space
                .index_of(name)
                .map_err(|e| self.error(&format!("u.{name}"), name, e.to_string()))?;
        }
        let mut values = Vec::with_capacity(space.len());
        for (x, name) in space.names().iter().enumerate() {
            let f = format!("u.{name}");
            let v = match table.get(name) {
                Some(Json::Array(pair)) if pair.len() == 2 => {
                    let a = self.literal(&semiring, &pair[0], &f, name)?;
                    let b = self.literal(&semiring, &pair[1], &f, name)?;
                    BinaryValue::new(&semiring, a, b).map_err(|e| self.error(&f, name, e.to_string()))?
                }
                Some(_) => return Err(self.error(&f, name, "expected [first, second]")),
                None if x == space.best() => BinaryValue::best(&semiring),
                None if x == space.worst() => BinaryValue::worst(&semiring),
                None => return Err(self.error("u", "u", format!("no utility for `{name}`"))),
            };
            values.push(v);
        }
        let utility =
            UtilityAssignment::new(&semiring, space, values).map_err(|e| self.error("u", "u", e.to_string()))?;
        Ok(UtilityFile { semiring, utility })
    }

    pub fn table_file(&self) -> Result<TableFile, CliError> {
        let semiring = self.descriptor()?;
        let space_obj = self
            .get("space")?
            .as_object()
            .ok_or_else(|| self.error("space", "space", "expected an object"))?;
        let space = self.space_from(space_obj, "space")?;
        let items = self
            .get("lotteries")?
            .as_array()
            .ok_or_else(|| self.error("lotteries", "lotteries", "expected a list of named lottery nodes"))?;
        let mut names = Vec::with_capacity(items.len());
        let mut lotteries = Vec::with_capacity(items.len());
        for (i, item) in items.iter().enumerate() {
            let f = format!("lotteries[{i}]");
            let name = item
                .get("name")
                .and_then(Json::as_str)
                .ok_or_else(|| self.error(&format!("{f}.name"), "name", "missing lottery name"))?;
            lotteries.push(self.node(&semiring, &space, item, &f)?);
            names.push(name.to_string());
        }
        let rows = self
            .get("relation")?
            .as_array()
            .ok_or_else(|| self.error("relation", "relation", "expected a list of [a, b, verdict]"))?;
        let mut entries = Vec::with_capacity(rows.len());
        for (i, row) in rows.iter().enumerate() {
            let f = format!("relation[{i}]");
            let parts: Option<Vec<&str>> = row.as_array().map(|r| r.iter().filter_map(Json::as_str).collect());
            match parts.as_deref() {
                Some([a, b, c]) => {
                    let c =
                        Comparison::from_code(c).ok_or_else(|| self.error(&f, c, "verdict must be G, L, E or I"))?;
                    entries.push((a.to_string(), b.to_string(), c));
                }
                _ => return Err(self.error(&f, "relation", "expected [a, b, verdict]")),
            }
        }
        let table = PreferenceTable::new(names, lotteries, &entries)
            .map_err(|e| self.error("relation", "relation", e.to_string()))?;
        Ok(TableFile { semiring, space, table })
    }

    /// Which of the file formats this is, by its distinguishing key.
    pub fn kind(&self) -> Option<Kind> {
        let has = |k: &str| self.root.contains_key(k);
        if has("relation") {
            Some(Kind::Table)
        } else if has("lottery") {
            Some(Kind::Lottery)
        } else if has("u") {
            Some(Kind::Utility)
        } else if has("weights") {
            Some(Kind::Measure)
        } else if has("act") {
            Some(Kind::Act)
        } else {
            None
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    Lottery,
    Measure,
    Act,
    Utility,
    Table,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LotteryFile {
    pub semiring: Descriptor,
    pub space: ConsequenceSpace,
    pub lottery: Lottery<Value>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MeasureFile {
    pub semiring: Descriptor,
    pub measure: PlausibilityMeasure<Value>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ActFile {
    pub assignment: Vec<(String, String)>,
    pub space: Option<ConsequenceSpace>,
}

impl ActFile {
    pub fn resolve(&self, m: &PlausibilityMeasure<Value>, space: &ConsequenceSpace) -> Result<Act, aeu_core::Error> {
        Act::new(m, space, &self.assignment)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UtilityFile {
    pub semiring: Descriptor,
    pub utility: UtilityAssignment<Value>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableFile {
    pub semiring: Descriptor,
    pub space: ConsequenceSpace,
    pub table: PreferenceTable<Value>,
}

pub fn render_json(value: &Json) -> String {
    let mut out = serde_json::to_string_pretty(value).expect("JSON values always serialize");
    out.push('\n');
    out
}

pub fn literal(d: &Descriptor, v: &Value) -> Json {
    Json::String(d.render(v))
}

pub fn binary_json(d: &Descriptor, v: &BinaryValue<Value>) -> Json {
    json!([literal(d, v.first()), literal(d, v.second())])
}

fn space_fields(map: &mut Map<String, Json>, space: &ConsequenceSpace) {
    map.insert("consequences".into(), json!(space.names()));
    map.insert("best".into(), json!(space.name(space.best())));
    map.insert("worst".into(), json!(space.name(space.worst())));
}

pub fn node_json(d: &Descriptor, space: &ConsequenceSpace, l: &Lottery<Value>) -> Map<String, Json> {
    let mut node = Map::new();
    match l {
        Lottery::Simple(dist) => {
            let mut masses = Map::new();
            for (x, p) in dist.iter().enumerate() {
                if !d.is_zero(p) {
                    masses.insert(space.name(x).into(), literal(d, p));
                }
            }
            node.insert("simple".into(), Json::Object(masses));
        }
        Lottery::Compound(branches) => {
            let items = branches
                .iter()
                .map(|b| json!([literal(d, &b.weight), Json::Object(node_json(d, space, &b.lottery))]))
                .collect();
            node.insert("compound".into(), Json::Array(items));
        }
    }
    node
}

impl LotteryFile {
    pub fn to_json(&self) -> Json {
        let mut map = Map::new();
        map.insert("semiring".into(), json!(self.semiring.to_string()));
        space_fields(&mut map, &self.space);
        map.insert(
            "lottery".into(),
            Json::Object(node_json(&self.semiring, &self.space, &self.lottery)),
        );
        Json::Object(map)
    }
}

impl MeasureFile {
    pub fn to_json(&self) -> Json {
        let d = &self.semiring;
        let mut weights = Map::new();
        for (s, w) in self.measure.states().iter().zip(self.measure.weights()) {
            if !d.is_zero(w) {
                weights.insert(s.clone(), literal(d, w));
            }
        }
        json!({
            "semiring": d.to_string(),
            "states": self.measure.states(),
            "weights": weights,
        })
    }
}

impl ActFile {
    pub fn to_json(&self) -> Json {
        let mut map = Map::new();
        if let Some(space) = &self.space {
            space_fields(&mut map, space);
        }
        let act: Map<String, Json> = self.assignment.iter().map(|(s, x)| (s.clone(), json!(x))).collect();
        map.insert("act".into(), Json::Object(act));
        Json::Object(map)
    }
}

impl UtilityFile {
    pub fn to_json(&self) -> Json {
        let d = &self.semiring;
        let space = self.utility.space();
        let mut map = Map::new();
        map.insert("semiring".into(), json!(d.to_string()));
        space_fields(&mut map, space);
        let u: Map<String, Json> = space
            .names()
            .iter()
            .zip(self.utility.utilities())
            .map(|(n, v)| (n.clone(), binary_json(d, v)))
            .collect();
        map.insert("u".into(), Json::Object(u));
        Json::Object(map)
    }
}

impl TableFile {
    pub fn to_json(&self) -> Json {
        let d = &self.semiring;
        let mut space = Map::new();
        space_fields(&mut space, &self.space);
        let lotteries: Vec<Json> = self
            .table
            .names()
            .iter()
            .zip(self.table.lotteries())
            .map(|(n, l)| {
                let mut node = Map::new();
                node.insert("name".into(), json!(n));
                node.extend(node_json(d, &self.space, l));
                Json::Object(node)
            })
            .collect();
        let relation: Vec<Json> = self
            .table
            .entries()
            .into_iter()
            .map(|(a, b, c)| json!([a, b, c.code().to_string()]))
            .collect();
        json!({
            "semiring": d.to_string(),
            "space": space,
            "lotteries": lotteries,
            "relation": relation,
        })
    }
}
