//! Wall-clock comparison of the array algorithms against the map baselines.

use std::fmt;
use std::hint::black_box;
use std::time::Instant;

use fourcycle_core::{
    count_global_with, count_per_edge_with, count_per_vertex_with, CountError, CsrGraph,
    DualScratch, Scratch,
};
use serde::Serialize;

use crate::hash::{count_global_hash, count_per_edge_hash, count_per_vertex_hash};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Quantity {
    Global,
    Vertex,
    Edge,
}

impl Quantity {
    pub const ALL: [Quantity; 3] = [Quantity::Global, Quantity::Vertex, Quantity::Edge];
}

impl fmt::Display for Quantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Global => "global",
            Self::Vertex => "vertex",
            Self::Edge => "edge",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Variant {
    #[serde(rename = "array")]
    Array,
    #[serde(rename = "map-default")]
    Map,
}

impl Variant {
    pub const ALL: [Variant; 2] = [Variant::Array, Variant::Map];
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Array => "array",
            Self::Map => "map-default",
        })
    }
}

/// One timed configuration.
///
/// `result` is `□(G)`; for local counts it is recovered as a quarter of the
/// sum, so records for the same graph must agree across variants.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BenchRecord {
    pub algorithm: Quantity,
    pub variant: Variant,
    pub graph: String,
    pub n: usize,
    pub m: usize,
    pub seconds: f64,
    pub repetitions: usize,
    pub warmups: usize,
    pub result: u64,
}

/// `T_map / T_array` for one quantity; above one means the array is faster.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BenchRatio {
    pub algorithm: Quantity,
    pub map_over_array: f64,
}

#[derive(Debug, Clone, Copy)]
pub struct BenchSettings {
    pub repetitions: usize,
    pub warmups: usize,
}

impl Default for BenchSettings {
    fn default() -> Self {
        Self {
            repetitions: 3,
            warmups: 1,
        }
    }
}

/// Runs `run` `warmups` times untimed, then `repetitions` times timed, and
/// returns the median seconds with the last result.
pub fn time_median<T>(
    settings: BenchSettings,
    mut run: impl FnMut() -> Result<T, CountError>,
) -> Result<(f64, T), CountError> {
    assert!(settings.repetitions >= 1, "at least one repetition");
    for _ in 0..settings.warmups {
        black_box(run()?);
    }
    let mut samples = Vec::with_capacity(settings.repetitions);
    let mut last = None;
    for _ in 0..settings.repetitions {
        let start = Instant::now();
        let value = black_box(run()?);
        samples.push(start.elapsed().as_secs_f64());
        last = Some(value);
    }
    samples.sort_by(f64::total_cmp);
    let mid = samples.len() / 2;
    let median = if samples.len() % 2 == 1 {
        samples[mid]
    } else {
        (samples[mid - 1] + samples[mid]) / 2.0
    };
    // Clocks can report zero for empty graphs; keep timings strictly positive.
    Ok((
        median.max(f64::MIN_POSITIVE),
        last.expect("repetitions >= 1"),
    ))
}

fn quarter_sum(counts: &[u64]) -> u64 {
    (counts.iter().map(|&c| u128::from(c)).sum::<u128>() / 4) as u64
}

/// Times one quantity with one variant.
///
/// Scratch for the array variants is allocated before the clock starts; the
/// edge-local count builds its degree prefix sums inside the timed region.
pub fn bench_one(
    graph: &CsrGraph,
    label: &str,
    quantity: Quantity,
    variant: Variant,
    settings: BenchSettings,
) -> Result<BenchRecord, CountError> {
    let n = graph.vertex_count();
    let (seconds, result) = match (quantity, variant) {
        (Quantity::Global, Variant::Array) => {
            let mut scratch = Scratch::new(n);
            time_median(settings, || count_global_with(graph, &mut scratch))?
        }
        (Quantity::Global, Variant::Map) => time_median(settings, || count_global_hash(graph))?,
        (Quantity::Vertex, Variant::Array) => {
            let mut scratch = DualScratch::new(n);
            let (s, counts) = time_median(settings, || count_per_vertex_with(graph, &mut scratch))?;
            (s, quarter_sum(&counts))
        }
        (Quantity::Vertex, Variant::Map) => {
            let (s, counts) = time_median(settings, || count_per_vertex_hash(graph))?;
            (s, quarter_sum(&counts))
        }
        (Quantity::Edge, Variant::Array) => {
            let mut scratch = DualScratch::new(n);
            let (s, counts) = time_median(settings, || count_per_edge_with(graph, &mut scratch))?;
            (s, quarter_sum(&counts))
        }
        (Quantity::Edge, Variant::Map) => {
            let (s, counts) = time_median(settings, || count_per_edge_hash(graph))?;
            (s, quarter_sum(&counts.to_indexed(graph)))
        }
    };
    Ok(BenchRecord {
        algorithm: quantity,
        variant,
        graph: label.to_owned(),
        n,
        m: graph.edge_count(),
        seconds,
        repetitions: settings.repetitions,
        warmups: settings.warmups,
        result,
    })
}

/// Ratios for every quantity that has both an array and a map record.
pub fn ratios(records: &[BenchRecord]) -> Vec<BenchRatio> {
    Quantity::ALL
        .iter()
        .filter_map(|&q| {
            let find = |variant| {
                records
                    .iter()
                    .find(|r| r.algorithm == q && r.variant == variant)
            };
            let (array, map) = (find(Variant::Array)?, find(Variant::Map)?);
            Some(BenchRatio {
                algorithm: q,
                map_over_array: map.seconds / array.seconds,
            })
        })
        .collect()
}
