//! Structured reports and their text rendering.

use std::fmt::Write as _;

use cubical_ring::pipeline::Check;
use cubical_ring::{Analysis, CellId, CupMatrix, VoxelCycle};
use serde::Serialize;

#[derive(Debug, Serialize)]
pub struct Report {
    pub input: String,
    /// Padding used when the complement of the input was analysed.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub complement: Option<usize>,
    pub dims: [usize; 3],
    pub cells: Cells,
    pub betti: [usize; 3],
    pub generators: Vec<Generator>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cup: Option<CupTable>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cycles: Option<Vec<Cycle>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub checks: Option<Vec<CheckResult>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timings_us: Option<Vec<(String, u128)>>,
}

#[derive(Debug, Serialize)]
pub struct Cells {
    pub q: usize,
    pub boundary: usize,
    pub k: usize,
}

#[derive(Debug, Serialize)]
pub struct Generator {
    pub id: usize,
    pub dim: usize,
}

#[derive(Debug, Serialize)]
pub struct CupTable {
    pub h1: Vec<usize>,
    pub h2: Vec<usize>,
    pub rows: Vec<CupRow>,
    pub rank: usize,
    pub asymmetries: Vec<[usize; 2]>,
}

#[derive(Debug, Serialize)]
pub struct CupRow {
    pub a1: usize,
    pub a2: usize,
    pub entries: Vec<u8>,
}

#[derive(Debug, Serialize)]
pub struct Cycle {
    pub generator: usize,
    pub dim: u8,
    pub voxels: Vec<[i32; 3]>,
    pub fallback: bool,
}

#[derive(Debug, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failure: Option<String>,
}

fn id(c: CellId) -> usize {
    c.index()
}

impl Report {
    pub fn new(input: String, complement: Option<usize>, dims: [usize; 3], a: &Analysis) -> Self {
        let (q, boundary, k) = a.cell_counts();
        let b = a.betti();
        let m = a.model();
        let generators = m
            .all_generators()
            .map(|g| Generator {
                id: id(g),
                dim: a.k().dim(g) as usize,
            })
            .collect();
        Report {
            input,
            complement,
            dims,
            cells: Cells { q, boundary, k },
            betti: [b.b(0), b.b(1), b.b(2)],
            generators,
            cup: None,
            cycles: None,
            checks: None,
            timings_us: None,
        }
    }

    pub fn with_cup(&mut self, cup: &CupMatrix) {
        self.cup = Some(CupTable {
            h1: cup.h1.iter().map(|&c| id(c)).collect(),
            h2: cup.h2.iter().map(|&c| id(c)).collect(),
            rows: cup
                .rows
                .iter()
                .zip(&cup.entries)
                .map(|(&(a1, a2), row)| CupRow {
                    a1: id(a1),
                    a2: id(a2),
                    entries: row.iter().map(|&e| u8::from(e)).collect(),
                })
                .collect(),
            rank: cup.rank,
            asymmetries: cup
                .asymmetries
                .iter()
                .map(|&(a, b)| [id(a), id(b)])
                .collect(),
        });
    }

    pub fn with_cycles(&mut self, cycles: &[VoxelCycle]) {
        self.cycles = Some(
            cycles
                .iter()
                .map(|c| Cycle {
                    generator: id(c.generator),
                    dim: c.dim,
                    voxels: c.voxels.iter().map(|p| [p.x, p.y, p.z]).collect(),
                    fallback: c.fallback,
                })
                .collect(),
        );
    }

    pub fn with_checks(&mut self, checks: &[Check]) {
        self.checks = Some(
            checks
                .iter()
                .map(|c| CheckResult {
                    name: c.name.clone(),
                    passed: c.passed(),
                    failure: c.failure.clone(),
                })
                .collect(),
        );
    }

    pub fn with_timings(&mut self, a: &Analysis) {
        let mut t: Vec<(String, u128)> = a
            .timings
            .stages()
            .iter()
            .map(|(name, d)| (name.to_string(), d.as_micros()))
            .collect();
        t.push(("total".into(), a.timings.total().as_micros()));
        self.timings_us = Some(t);
    }

    pub fn first_failure(&self) -> Option<&CheckResult> {
        self.checks.as_ref()?.iter().find(|c| !c.passed)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "input {}", self.input);
        if let Some(p) = self.complement {
            let _ = writeln!(out, "complement with padding {p}");
        }
        let [x, y, z] = self.dims;
        let _ = writeln!(out, "picture {x}x{y}x{z}");
        let c = &self.cells;
        let _ = writeln!(
            out,
            "cells |Q| = {}, |∂Q| = {}, |K| = {}",
            c.q, c.boundary, c.k
        );
        let [b0, b1, b2] = self.betti;
        let _ = writeln!(out, "betti {b0} {b1} {b2}");
        for d in 0..3 {
            let ids: String = self
                .generators
                .iter()
                .filter(|g| g.dim == d)
                .map(|g| format!(" #{}", g.id))
                .collect();
            let _ = writeln!(out, "H{d}:{ids}");
        }
        if let Some(cup) = &self.cup {
            out.push_str(&cup_text(cup));
        }
        if let Some(cycles) = &self.cycles {
            for cy in cycles {
                let flag = if cy.fallback { " fallback" } else { "" };
                let _ = writeln!(
                    out,
                    "cycle #{} dim {} voxels {}{flag}",
                    cy.generator,
                    cy.dim,
                    cy.voxels.len()
                );
                for [x, y, z] in &cy.voxels {
                    let _ = writeln!(out, "  {x} {y} {z}");
                }
            }
        }
        if let Some(checks) = &self.checks {
            for ch in checks {
                match &ch.failure {
                    None => {
                        let _ = writeln!(out, "PASS {}", ch.name);
                    }
                    Some(f) => {
                        let _ = writeln!(out, "FAIL {}: {f}", ch.name);
                    }
                }
            }
        }
        if let Some(t) = &self.timings_us {
            for (name, us) in t {
                let _ = writeln!(out, "time {name} {us} us");
            }
        }
        out
    }
}

fn cup_text(cup: &CupTable) -> String {
    let mut out = String::new();
    if cup.rows.is_empty() || cup.h2.is_empty() {
        let _ = writeln!(out, "cup table empty");
    } else {
        let _ = write!(out, "{:>14}", "");
        for b in &cup.h2 {
            let _ = write!(out, " {:>6}", format!("#{b}"));
        }
        out.push('\n');
        for row in &cup.rows {
            let _ = write!(out, "{:>14}", format!("#{} ⌣ #{}", row.a1, row.a2));
            for e in &row.entries {
                let _ = write!(out, " {e:>6}");
            }
            out.push('\n');
        }
    }
    let _ = writeln!(out, "rank {}", cup.rank);
    for [a, b] in &cup.asymmetries {
        let _ = writeln!(out, "warning: #{a} ⌣ #{b} differs from #{b} ⌣ #{a}");
    }
    out
}
