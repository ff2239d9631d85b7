//! Exhaustive sweeps and two-valued `(r, s)` grids.

use std::fmt::Write;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::classifier::classify;
use crate::model::{ClassificationResult, Multiplicity, TwoValuedPattern, Verdict};
use crate::oracle::Oracle;

/// All of `{1..max}^6` in lexicographic order.
pub fn multiplicities(max: u32) -> impl Iterator<Item = Multiplicity> {
    let count = (max as usize).pow(6);
    (0..count).map(move |mut i| {
        let mut v = [0u32; 6];
        for slot in v.iter_mut().rev() {
            *slot = (i % max as usize) as u32 + 1;
            i /= max as usize;
        }
        Multiplicity::new(v)
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepRow {
    pub m: Multiplicity,
    pub result: ClassificationResult,
    pub oracle: Option<Verdict>,
}

impl SweepRow {
    pub fn agree(&self) -> Option<bool> {
        self.oracle.map(|v| v == self.result.verdict())
    }

    pub fn csv_line(&self) -> String {
        let mut line = String::new();
        for v in self.m.values() {
            write!(line, "{v},").unwrap();
        }
        let (witness, certificate) = match &self.result {
            ClassificationResult::Free { witness, .. } => (witness.kind(), ""),
            ClassificationResult::NonFree { certificate } => ("", certificate.kind()),
        };
        let exponents = self
            .result
            .exponents()
            .map(|e| e.map(|x| x.to_string()).join(" "))
            .unwrap_or_default();
        let oracle = self.oracle.map(|v| v.to_string()).unwrap_or_default();
        let agree = self.agree().map(|a| a.to_string()).unwrap_or_default();
        write!(
            line,
            "{},{witness},{certificate},{exponents},{oracle},{agree}",
            self.result.verdict()
        )
        .unwrap();
        line
    }
}

pub const CSV_HEADER: &str =
    "m01,m02,m03,m12,m13,m23,verdict,witness_kind,certificate_kind,exponents,oracle_verdict,agree";

/// Classifies `{1..max}^6`; entries in `{1..oracle_max}^6` are also run through the oracle.
pub fn sweep(max: u32, oracle_max: u32, oracle: &Oracle) -> Vec<SweepRow> {
    let ms: Vec<Multiplicity> = multiplicities(max).collect();
    ms.into_par_iter()
        .map(|m| {
            let result = classify(&m).expect("entries are positive");
            let oracle = (m.values().iter().all(|&v| v <= oracle_max))
                .then(|| oracle.classify(&m).expect("entries are positive").verdict());
            SweepRow { m, result, oracle }
        })
        .collect()
}

pub fn sweep_csv(rows: &[SweepRow]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in rows {
        out.push_str(&r.csv_line());
        out.push('\n');
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GridCell {
    pub r: u32,
    pub s: u32,
    pub verdict: Verdict,
    pub oracle: Option<Verdict>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Grid {
    pub pattern: TwoValuedPattern,
    pub rmax: u32,
    pub smax: u32,
    /// Row-major in `s`, then `r`, both ascending.
    pub cells: Vec<GridCell>,
}

/// Verdicts for `1 <= r <= rmax`, `1 <= s <= smax`; cells with `r, s <= oracle_max`
/// also carry the oracle verdict.
pub fn grid(
    pattern: &TwoValuedPattern,
    rmax: u32,
    smax: u32,
    oracle_max: u32,
    oracle: &Oracle,
) -> Grid {
    let coords: Vec<(u32, u32)> = (1..=smax)
        .flat_map(|s| (1..=rmax).map(move |r| (r, s)))
        .collect();
    let cells = coords
        .into_par_iter()
        .map(|(r, s)| {
            let m = pattern.instantiate(r, s);
            GridCell {
                r,
                s,
                verdict: classify(&m).expect("entries are positive").verdict(),
                oracle: (r <= oracle_max && s <= oracle_max)
                    .then(|| oracle.classify(&m).expect("entries are positive").verdict()),
            }
        })
        .collect();
    Grid {
        pattern: pattern.clone(),
        rmax,
        smax,
        cells,
    }
}

impl Grid {
    pub fn cell(&self, r: u32, s: u32) -> Option<&GridCell> {
        self.cells.iter().find(|c| c.r == r && c.s == s)
    }

    pub fn disagreements(&self) -> Vec<&GridCell> {
        self.cells
            .iter()
            .filter(|c| c.oracle.is_some_and(|o| o != c.verdict))
            .collect()
    }

    /// `o` free, `x` non-free; `s` increases upward, `r` to the right.
    pub fn to_ascii(&self) -> String {
        let w = self.smax.to_string().len();
        let mut out = format!("pattern {}: o free, x non-free\n", self.pattern.name);
        for s in (1..=self.smax).rev() {
            write!(out, "s={s:>w$} ").unwrap();
            let row: Vec<&str> = (1..=self.rmax)
                .map(|r| match self.cell(r, s).map(|c| c.verdict) {
                    Some(Verdict::Free) => "o",
                    _ => "x",
                })
                .collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        writeln!(out, "{:w$}   r=1..{}", "", self.rmax).unwrap();
        out
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("r,s,verdict,oracle_verdict,agree\n");
        for c in &self.cells {
            let oracle = c.oracle.map(|v| v.to_string()).unwrap_or_default();
            let agree = c
                .oracle
                .map(|v| (v == c.verdict).to_string())
                .unwrap_or_default();
            writeln!(out, "{},{},{},{oracle},{agree}", c.r, c.s, c.verdict).unwrap();
        }
        out
    }

    /// Hollow circles for free cells, solid for non-free.
    pub fn to_svg(&self) -> String {
        let step = 20;
        let margin = 30;
        let width = margin * 2 + step * self.rmax;
        let height = margin * 2 + step * self.smax;
        let mut out = format!(
            "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width}\" height=\"{height}\" viewBox=\"0 0 {width} {height}\">\n"
        );
        writeln!(out, "<title>{}</title>", self.pattern.name).unwrap();
        let x0 = margin;
        let y0 = height - margin;
        writeln!(
            out,
            "<line x1=\"{x0}\" y1=\"{y0}\" x2=\"{}\" y2=\"{y0}\" stroke=\"black\"/>",
            width - margin / 2
        )
        .unwrap();
        writeln!(
            out,
            "<line x1=\"{x0}\" y1=\"{y0}\" x2=\"{x0}\" y2=\"{}\" stroke=\"black\"/>",
            margin / 2
        )
        .unwrap();
        writeln!(
            out,
            "<text x=\"{}\" y=\"{}\" font-size=\"12\">r</text>",
            width - margin / 2,
            y0 + 15
        )
        .unwrap();
        writeln!(
            out,
            "<text x=\"{}\" y=\"{}\" font-size=\"12\">s</text>",
            x0 - 15,
            margin / 2
        )
        .unwrap();
        for c in &self.cells {
            let cx = x0 + step * c.r;
            let cy = y0 - step * c.s;
            let fill = match c.verdict {
                Verdict::Free => "none",
                Verdict::NonFree => "black",
            };
            writeln!(
                out,
                "<circle cx=\"{cx}\" cy=\"{cy}\" r=\"5\" stroke=\"black\" stroke-width=\"1.5\" fill=\"{fill}\"/>"
            )
            .unwrap();
        }
        out.push_str("</svg>\n");
        out
    }
}
