//! Machine- and human-readable solve reports.

use serde::Serialize;
use std::fmt::Write as _;

/// Versioned solve report. Timing fields vary run to run; everything else
/// is deterministic for a fixed input.
#[derive(Debug, Serialize)]
pub struct RunReport {
    pub schema: u32,
    pub instance: InstanceSummary,
    pub variant: String,
    pub k: usize,
    pub value: f64,
    /// Side counts for every vertex that carries mass.
    pub sides: Vec<SideCount>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub values_by_k: Option<Vec<f64>>,
    pub timings_ms: Timings,
    pub solver: SolverInfo,
}

#[derive(Debug, Serialize)]
pub struct InstanceSummary {
    pub mode: &'static str,
    pub vertices: usize,
    pub total_mass: usize,
    /// Points mode only: the coordinate of each vertex.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub coordinates: Option<Vec<f64>>,
}

#[derive(Debug, Serialize)]
pub struct SideCount {
    pub vertex: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub coordinate: Option<f64>,
    pub side_a: usize,
    pub side_b: usize,
}

#[derive(Debug, Serialize)]
pub struct Timings {
    pub normalize: f64,
    pub solve: f64,
    pub backtrack: f64,
}

#[derive(Debug, Serialize)]
pub struct SolverInfo {
    pub tie_break: &'static str,
    pub version: &'static str,
}

impl Default for SolverInfo {
    fn default() -> Self {
        SolverInfo {
            tie_break: "smallest-p1",
            version: env!("CARGO_PKG_VERSION"),
        }
    }
}

impl RunReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(
            out,
            "instance: mode={} vertices={} mass={}",
            self.instance.mode, self.instance.vertices, self.instance.total_mass
        )
        .unwrap();
        if let Some(coords) = &self.instance.coordinates {
            let list: Vec<String> = coords.iter().map(|c| c.to_string()).collect();
            writeln!(out, "coordinates: {}", list.join(" ")).unwrap();
        }
        writeln!(out, "variant: {} k={}", self.variant, self.k).unwrap();
        writeln!(out, "value: {}", self.value).unwrap();
        for (label, pick) in [("A", true), ("B", false)] {
            let mut entries = Vec::new();
            let mut size = 0;
            for side in &self.sides {
                let count = if pick { side.side_a } else { side.side_b };
                if count > 0 {
                    size += count;
                    match side.coordinate {
                        Some(c) => entries.push(format!("{c}:{count}")),
                        None => entries.push(format!("{}:{count}", side.vertex)),
                    }
                }
            }
            writeln!(out, "side {label} ({size}): {}", entries.join(" ")).unwrap();
        }
        if let Some(values) = &self.values_by_k {
            let list: Vec<String> = values
                .iter()
                .enumerate()
                .map(|(k, v)| format!("{k}:{v}"))
                .collect();
            writeln!(out, "values by k: {}", list.join(" ")).unwrap();
        }
        writeln!(
            out,
            "timings_ms: normalize={:.3} solve={:.3} backtrack={:.3}",
            self.timings_ms.normalize, self.timings_ms.solve, self.timings_ms.backtrack
        )
        .unwrap();
        writeln!(
            out,
            "solver: tie_break={} version={}",
            self.solver.tie_break, self.solver.version
        )
        .unwrap();
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> RunReport {
        RunReport {
            schema: 1,
            instance: InstanceSummary {
                mode: "points",
                vertices: 2,
                total_mass: 3,
                coordinates: Some(vec![0.5, 2.0]),
            },
            variant: "max-cut".into(),
            k: 1,
            value: 3.0,
            sides: vec![
                SideCount {
                    vertex: 0,
                    coordinate: Some(0.5),
                    side_a: 1,
                    side_b: 0,
                },
                SideCount {
                    vertex: 1,
                    coordinate: Some(2.0),
                    side_a: 0,
                    side_b: 2,
                },
            ],
            values_by_k: None,
            timings_ms: Timings {
                normalize: 0.0,
                solve: 0.1,
                backtrack: 0.0,
            },
            solver: SolverInfo::default(),
        }
    }

    #[test]
    fn json_has_schema_and_value() {
        let parsed: serde_json::Value = serde_json::from_str(&sample().to_json()).unwrap();
        assert_eq!(parsed["schema"], 1);
        assert_eq!(parsed["value"], 3.0);
        assert_eq!(parsed["sides"][0]["side_a"], 1);
        assert!(parsed.get("values_by_k").is_none());
    }

    #[test]
    fn text_mentions_both_sides() {
        let text = sample().to_text();
        assert!(text.contains("side A (1): 0.5:1"));
        assert!(text.contains("side B (2): 2:2"));
    }
}
