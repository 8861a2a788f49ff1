//! Graded-root output in text, JSON and SVG.

use std::fmt::Write as _;

use serde_json::{json, Value};
use utorsion_core::knots::{self, KnotExpr};
use utorsion_core::staircase::{graded_root_summary, root_leaves, GradedRootSummary, RootLeaf};
use utorsion_core::{GapSequence, Result};

pub struct GradedRoot {
    knot: String,
    summary: GradedRootSummary,
    /// Only for a single staircase, where heights relative to `y0` make sense.
    leaves: Option<Vec<RootLeaf>>,
}

const STEP: i64 = 24;
const MARGIN: i64 = 40;

impl GradedRoot {
    pub fn of(k: &KnotExpr) -> Result<Self> {
        let summary = graded_root_summary(&knots::knot_homology(k)?)?;
        let leaves = match k {
            KnotExpr::Unknot => Some(root_leaves(&GapSequence::empty())),
            KnotExpr::Torus { p, q } => Some(root_leaves(&knots::torus_gaps(*p, *q)?)),
            _ => None,
        };
        Ok(Self {
            knot: k.to_string(),
            summary,
            leaves,
        })
    }

    pub fn json(&self) -> Value {
        let leaves = self.leaves.as_ref().map(|ls| {
            ls.iter()
                .map(|l| {
                    json!({
                        "generator": l.generator,
                        "grading": l.grading,
                        "merge_grading": l.merge_grading,
                        "parent": l.parent.map(|p| ls[p].generator.clone()),
                        "branch_length": l.branch_length,
                        "tower": l.tower,
                    })
                })
                .collect::<Vec<_>>()
        });
        json!({
            "knot": self.knot,
            "tower_count": self.summary.tower_count,
            "branch_exponents": self.summary.branch_exponents,
            "leaves": leaves,
        })
    }

    pub fn ascii(&self) -> String {
        let mut out = format!("{}\n", self.knot);
        match &self.leaves {
            Some(ls) => {
                for l in ls.iter().filter(|l| l.tower) {
                    let bar = if l.branch_length > 0 {
                        format!(" {}", dots(l.branch_length))
                    } else {
                        String::new()
                    };
                    let _ = writeln!(out, "  {:<5} h={:<4} tower{bar}", l.generator, l.grading);
                }
                for l in ls.iter().filter(|l| !l.tower) {
                    let parent = &ls[l.parent.expect("non-tower leaves have a parent")];
                    let _ = writeln!(
                        out,
                        "  {:<5} h={:<4} {} joins {} at h={}",
                        l.generator,
                        l.grading,
                        dots(l.branch_length),
                        parent.generator,
                        l.merge_grading
                            .expect("non-tower leaves have a merge grading"),
                    );
                }
            }
            None => {
                out.push_str("  tower\n");
                for &k in self.summary.branch_exponents.iter().rev() {
                    let _ = writeln!(out, "  branch {}", dots(k));
                }
            }
        }
        out
    }

    pub fn svg(&self) -> String {
        let columns = match &self.leaves {
            Some(ls) => staircase_columns(ls),
            None => summary_columns(&self.summary),
        };
        let top = columns.iter().map(|c| c.top).max().unwrap_or(0);
        let bottom = columns.iter().map(|c| c.bottom).min().unwrap_or(0) - 2;
        let x = |i: usize| MARGIN + STEP * i as i64;
        let y = |h: i64| MARGIN + STEP * (top - h);
        let width = x(columns.len().max(1) - 1) + MARGIN;
        let height = y(bottom) + MARGIN;

        let mut s = String::new();
        let _ = writeln!(
            s,
            r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
        );
        let _ = writeln!(
            s,
            "  <title>graded root of {}</title>",
            xml_escape(&self.knot)
        );
        let _ = writeln!(s, r#"  <g stroke="black" stroke-width="1.5" fill="none">"#);
        for (i, c) in columns.iter().enumerate() {
            if c.parent.is_none() {
                let _ = writeln!(
                    s,
                    r#"    <line x1="{0}" y1="{1}" x2="{0}" y2="{2}"/>"#,
                    x(i),
                    y(c.top),
                    y(bottom)
                );
                let _ = writeln!(
                    s,
                    r#"    <line x1="{0}" y1="{1}" x2="{0}" y2="{2}" stroke-dasharray="3,3"/>"#,
                    x(i),
                    y(bottom),
                    y(bottom) + MARGIN / 2
                );
            } else {
                let _ = writeln!(
                    s,
                    r#"    <line x1="{0}" y1="{1}" x2="{0}" y2="{2}"/>"#,
                    x(i),
                    y(c.top),
                    y(c.bottom)
                );
            }
            if let Some((p, h)) = c.parent {
                let _ = writeln!(
                    s,
                    r#"    <line x1="{}" y1="{}" x2="{}" y2="{}"/>"#,
                    x(i),
                    y(c.bottom),
                    x(p),
                    y(h)
                );
            }
        }
        let _ = writeln!(s, "  </g>");
        let _ = writeln!(s, r#"  <g fill="black">"#);
        for (i, c) in columns.iter().enumerate() {
            let low = if c.parent.is_none() { bottom } else { c.bottom };
            for h in (low..=c.top).rev() {
                let _ = writeln!(s, r#"    <circle cx="{}" cy="{}" r="3"/>"#, x(i), y(h));
            }
        }
        let _ = writeln!(s, "  </g>");
        s.push_str("</svg>\n");
        s
    }
}

/// A vertical run of dots from `top` down to `bottom`, then an edge to the
/// parent column at the given height.
struct Column {
    top: i64,
    bottom: i64,
    parent: Option<(usize, i64)>,
}

fn staircase_columns(ls: &[RootLeaf]) -> Vec<Column> {
    ls.iter()
        .map(|l| match (l.parent, l.merge_grading) {
            (Some(p), Some(m)) => Column {
                top: l.grading,
                bottom: m + 1,
                parent: Some((p, m)),
            },
            _ => Column {
                top: l.grading,
                bottom: l.grading,
                parent: None,
            },
        })
        .collect()
}

/// Without absolute heights every branch hangs off the tower with its leaf
/// at height 0.
fn summary_columns(summary: &GradedRootSummary) -> Vec<Column> {
    let mut cols = vec![Column {
        top: 0,
        bottom: 0,
        parent: None,
    }];
    for &k in summary.branch_exponents.iter().rev() {
        let k = k as i64;
        cols.push(Column {
            top: 0,
            bottom: 1 - k,
            parent: Some((0, -k)),
        });
    }
    let deepest = cols
        .iter()
        .filter_map(|c| c.parent.map(|(_, h)| h))
        .min()
        .unwrap_or(0);
    cols[0].bottom = deepest;
    cols
}

fn dots(n: u32) -> String {
    "*".repeat(n as usize) + &format!(" ({n})")
}

fn xml_escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
}
