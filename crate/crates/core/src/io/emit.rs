use std::fmt::Write;

use serde::Deserialize;
use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::{Monomial, RingContext};
use crate::rational::format_rational;
use crate::resurgence::{
    BoundReport, ContainmentCertificate, ScanCell, ScanReport, SupEvaluation, Verdict,
};

pub const SCHEMA_VERSION: u32 = 1;

/// Deterministic text and JSON renderings. JSON documents are objects with a
/// top-level `"schema": 1`; rationals are `"p/q"` strings in lowest terms.
pub trait Emit {
    fn emit_text(&self) -> String;

    /// The JSON object without the schema tag.
    fn json_body(&self) -> Value;

    fn emit_json(&self) -> String {
        let mut doc = Map::new();
        doc.insert("schema".into(), SCHEMA_VERSION.into());
        match self.json_body() {
            Value::Object(body) => doc.extend(body),
            other => {
                doc.insert("value".into(), other);
            }
        }
        serde_json::to_string(&Value::Object(doc)).expect("JSON values always serialize")
    }
}

fn ring_json(ring: &RingContext) -> Value {
    json!(ring.names())
}

fn ideal_json(ideal: &MonomialIdeal) -> Value {
    let gens: Vec<&[u32]> = ideal.generators().iter().map(|g| g.exponents()).collect();
    json!({ "ring": ring_json(ideal.ring()), "generators": gens })
}

fn witness_json(ring: &RingContext, w: Option<&Monomial>) -> (Value, Value) {
    match w {
        Some(w) => (json!(w.exponents()), json!(ring.format(w))),
        None => (Value::Null, Value::Null),
    }
}

impl Emit for MonomialIdeal {
    fn emit_text(&self) -> String {
        self.to_string()
    }

    fn json_body(&self) -> Value {
        ideal_json(self)
    }
}

/// A labelled list of ideals in one ring, such as decomposition components.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealList {
    pub kind: String,
    pub ideals: Vec<MonomialIdeal>,
}

impl Emit for IdealList {
    fn emit_text(&self) -> String {
        self.ideals.iter().map(|i| format!("{i}\n")).collect()
    }

    fn json_body(&self) -> Value {
        json!({
            "kind": self.kind,
            "ideals": self.ideals.iter().map(ideal_json).collect::<Vec<_>>(),
        })
    }
}

impl Emit for ContainmentCertificate {
    fn emit_text(&self) -> String {
        let (m, r) = (self.m, self.r);
        match &self.witness {
            Some(w) => format!(
                "I^({m}) is not contained in I^{r}\nwitness: {}\nratio {} is a certified lower bound for the resurgence\n",
                self.ring.format(w),
                self.ratio()
            ),
            None => format!(
                "I^({m}) is contained in I^{r}: every minimal generator of I^({m}) lies in I^{r}\n"
            ),
        }
    }

    fn json_body(&self) -> Value {
        let (witness, text) = witness_json(&self.ring, self.witness.as_ref());
        json!({
            "kind": "containment",
            "ring": ring_json(&self.ring),
            "m": self.m,
            "r": self.r,
            "verdict": self.verdict.as_str(),
            "witness": witness,
            "witness_text": text,
            "ratio": format_rational(&self.ratio()),
        })
    }
}

fn cell_json(ring: &RingContext, cell: &ScanCell) -> Value {
    let (witness, text) = witness_json(ring, cell.witness.as_ref());
    json!({
        "m": cell.m,
        "r": cell.r,
        "verdict": cell.verdict.as_str(),
        "inferred": cell.inferred,
        "witness": witness,
        "witness_text": text,
    })
}

const LOWER_BOUND_NOTE: &str =
    "best_ratio is a certified lower bound for the resurgence; the supremum may be larger or not attained";

impl Emit for ScanReport {
    fn emit_text(&self) -> String {
        let ring = self.ideal.ring();
        let mut out = String::new();
        let _ = writeln!(out, "containment grid for {}", self.ideal);
        let _ = writeln!(
            out,
            "rows m = 1..{}, columns r = 1..{}; '.' contained, 'X' not contained{}",
            self.max_m,
            self.max_r,
            if self.shortcuts {
                ", ':' and 'x' inferred by monotonicity"
            } else {
                ""
            }
        );
        let width = self.max_r.to_string().len().max(1) + 1;
        let _ = write!(out, "{:>5}", "");
        for r in 1..=self.max_r {
            let _ = write!(out, "{r:>width$}");
        }
        out.push('\n');
        for m in 1..=self.max_m {
            let _ = write!(out, "{:>5}", format!("m={m}"));
            for r in 1..=self.max_r {
                let cell = self.cell(m, r).expect("cell inside the grid");
                let mark = match (cell.verdict, cell.inferred) {
                    (Verdict::Contained, false) => '.',
                    (Verdict::Contained, true) => ':',
                    (Verdict::NotContained, false) => 'X',
                    (Verdict::NotContained, true) => 'x',
                };
                let _ = write!(out, "{mark:>width$}");
            }
            out.push('\n');
        }
        match &self.best_ratio {
            None => {
                let _ = writeln!(out, "no non-containment found on this grid; no lower bound above 0 is certified");
            }
            Some(best) => {
                let _ = writeln!(out, "certified lower bound: resurgence >= {best}");
                for cell in self.best_cells() {
                    let w = cell.witness.as_ref().expect("not-contained cells carry a witness");
                    let _ = writeln!(out, "  at (m, r) = ({}, {}): witness {}", cell.m, cell.r, ring.format(w));
                }
                let _ = writeln!(out, "the supremum may be larger than this bound or not attained");
            }
        }
        out
    }

    fn json_body(&self) -> Value {
        let ring = self.ideal.ring();
        json!({
            "kind": "scan",
            "ideal": ideal_json(&self.ideal),
            "max_m": self.max_m,
            "max_r": self.max_r,
            "shortcuts": self.shortcuts,
            "best_ratio": self.best_ratio.as_ref().map(format_rational),
            "best_cells": self.best_cells().map(|c| cell_json(ring, c)).collect::<Vec<_>>(),
            "cells": self.cells.iter().map(|c| cell_json(ring, c)).collect::<Vec<_>>(),
            "note": LOWER_BOUND_NOTE,
        })
    }
}

impl Emit for BoundReport {
    fn emit_text(&self) -> String {
        format!(
            "a = {}, b = {}\nupper bound for the sum: {} ({})\n",
            self.a,
            self.b,
            self.bound,
            match self.rule {
                crate::resurgence::BoundRule::Collapse => "max{a, b}, since max{a, b} >= 2 min{a, b}",
                crate::resurgence::BoundRule::TwoThirdsSum => "2(a + b)/3",
            }
        )
    }

    fn json_body(&self) -> Value {
        json!({
            "kind": "sum-bound",
            "a": format_rational(&self.a),
            "b": format_rational(&self.b),
            "bound": format_rational(&self.bound),
            "rule": self.rule.as_str(),
        })
    }
}

impl Emit for SupEvaluation {
    fn emit_text(&self) -> String {
        let at = match self.attained_at {
            Some((m, n)) => format!(" at (m, n) = ({m}, {n})"),
            None => String::new(),
        };
        format!(
            "enumerated maximum: {}{at}\nclosed form: {}\n",
            self.enumerated_max, self.closed_form
        )
    }

    fn json_body(&self) -> Value {
        json!({
            "kind": "sup-evaluation",
            "enumerated_max": format_rational(&self.enumerated_max),
            "closed_form": format_rational(&self.closed_form),
            "attained_at": self.attained_at.map(|(m, n)| [m, n]),
        })
    }
}

#[derive(Deserialize)]
struct IdealDoc {
    ring: Vec<String>,
    generators: Vec<Vec<u32>>,
}

impl IdealDoc {
    fn build(self) -> Result<MonomialIdeal> {
        let ring = RingContext::new(self.ring)?;
        let gens = self.generators.into_iter().map(Monomial::from_exponents);
        MonomialIdeal::new(ring, gens)
    }
}

#[derive(Deserialize)]
struct CertificateDoc {
    schema: u32,
    kind: String,
    ring: Vec<String>,
    m: u32,
    r: u32,
    verdict: String,
    witness: Option<Vec<u32>>,
}

fn check_schema(schema: u32) -> Result<()> {
    if schema == SCHEMA_VERSION {
        Ok(())
    } else {
        Err(Error::Json(format!("unsupported schema version {schema}")))
    }
}

/// Reads an ideal document `{"schema": 1, "ring": [...], "generators": [...]}`.
pub fn ideal_from_json(text: &str) -> Result<MonomialIdeal> {
    #[derive(Deserialize)]
    struct Doc {
        schema: u32,
        #[serde(flatten)]
        ideal: IdealDoc,
    }
    let doc: Doc = serde_json::from_str(text)?;
    check_schema(doc.schema)?;
    doc.ideal.build()
}

/// Reads a certificate emitted by [`Emit::emit_json`].
pub fn certificate_from_json(text: &str) -> Result<ContainmentCertificate> {
    let doc: CertificateDoc = serde_json::from_str(text)?;
    check_schema(doc.schema)?;
    if doc.kind != "containment" {
        return Err(Error::Json(format!("expected a containment document, got `{}`", doc.kind)));
    }
    let ring = RingContext::new(doc.ring)?;
    let witness = doc.witness.map(Monomial::from_exponents);
    if let Some(w) = &witness {
        ring.check(w)?;
    }
    let verdict = match (doc.verdict.as_str(), &witness) {
        ("contained", None) => Verdict::Contained,
        ("not-contained", Some(_)) => Verdict::NotContained,
        (v, _) => {
            return Err(Error::Json(format!(
                "verdict `{v}` does not match the presence of a witness"
            )))
        }
    };
    Ok(ContainmentCertificate {
        ring,
        m: doc.m,
        r: doc.r,
        verdict,
        witness,
    })
}
