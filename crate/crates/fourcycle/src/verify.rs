//! Cross-checks every counting variant against the brute-force oracles.

use std::collections::BTreeSet;
use std::convert::Infallible;

use fourcycle_core::oracle::{oracle_global_codegree, oracle_local_quadruples};
use fourcycle_core::{
    count_global_sorted, count_global_with, count_per_edge_with, count_per_vertex_with,
    enumerate_cycles_with, preprocess_sort, C4Counts, CountError, CsrGraph, CycleTuple,
    DualScratch, EnumScratch, OracleError, Scratch,
};
use serde::Serialize;
use thiserror::Error;

use crate::hash::{count_global_hash, count_per_edge_hash, count_per_vertex_hash};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub global: u64,
    pub checks: Vec<Check>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.passed)
    }
}

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error(transparent)]
    Count(#[from] CountError),
}

fn equal<T: PartialEq + std::fmt::Debug>(name: &'static str, got: &T, want: &T) -> Check {
    let passed = got == want;
    let detail = if passed {
        String::new()
    } else {
        let clip = |s: String| s.chars().take(200).collect::<String>();
        format!(
            "got {}, oracle {}",
            clip(format!("{got:?}")),
            clip(format!("{want:?}"))
        )
    };
    Check {
        name,
        passed,
        detail,
    }
}

fn holds(name: &'static str, result: Result<(), String>) -> Check {
    Check {
        name,
        passed: result.is_ok(),
        detail: result.err().unwrap_or_default(),
    }
}

/// Runs both oracles, every array and map variant, enumeration and the local
/// count identities. Refuses graphs above the oracle caps.
pub fn verify(graph: &CsrGraph) -> Result<VerifyReport, VerifyError> {
    let oracle = oracle_local_quadruples(graph)?;
    let codegree = oracle_global_codegree(graph)?;
    let n = graph.vertex_count();
    let mut checks = vec![
        equal("oracle codegree vs quadruple", &codegree, &oracle.global),
        holds(
            "oracle identities",
            oracle.check_identities(graph).map_err(|e| e.to_string()),
        ),
    ];

    let mut scratch = Scratch::new(n);
    let global = count_global_with(graph, &mut scratch)?;
    checks.push(equal("global array", &global, &oracle.global));
    checks.push(equal(
        "global sorted",
        &count_global_sorted(&preprocess_sort(graph.clone()))?,
        &oracle.global,
    ));
    checks.push(equal(
        "global map",
        &count_global_hash(graph)?,
        &oracle.global,
    ));

    let mut dual = DualScratch::new(n);
    let per_vertex = count_per_vertex_with(graph, &mut dual)?;
    checks.push(equal("vertex array", &per_vertex, &oracle.per_vertex));
    checks.push(equal(
        "vertex map",
        &count_per_vertex_hash(graph)?,
        &oracle.per_vertex,
    ));
    let per_edge = count_per_edge_with(graph, &mut dual)?;
    checks.push(equal("edge array", &per_edge, &oracle.per_edge));
    checks.push(equal(
        "edge map",
        &count_per_edge_hash(graph)?.to_indexed(graph),
        &oracle.per_edge,
    ));

    let counts = C4Counts {
        global,
        per_vertex,
        per_edge,
    };
    checks.push(holds(
        "identities",
        counts.check_identities(graph).map_err(|e| e.to_string()),
    ));

    let mut enum_scratch = EnumScratch::new(n);
    let mut tuples = Vec::new();
    let emitted = enumerate_cycles_with(graph, &mut enum_scratch, |t| {
        tuples.push(t);
        Ok::<_, Infallible>(())
    })
    .unwrap_or_else(|never| match never {});
    checks.push(equal("enumeration count", &emitted, &oracle.global));
    checks.push(holds("enumeration tuples", check_tuples(graph, &tuples)));

    checks.push(holds(
        "scratch reset",
        if scratch.is_zeroed() && dual.is_zeroed() && enum_scratch.is_clear() {
            Ok(())
        } else {
            Err("scratch not zero after counting".into())
        },
    ));

    Ok(VerifyReport {
        global: oracle.global,
        checks,
    })
}

/// Every tuple is a real 4-cycle on distinct vertices with `v` the
/// `≺`-maximum, and no cycle appears twice.
pub fn check_tuples(graph: &CsrGraph, tuples: &[CycleTuple]) -> Result<(), String> {
    let order = graph.order();
    let mut seen = BTreeSet::new();
    for t in tuples {
        let distinct = BTreeSet::from([t.v, t.u, t.y, t.x]);
        if distinct.len() != 4 {
            return Err(format!("{t:?} repeats a vertex"));
        }
        if let Some((a, b)) = t.edges().into_iter().find(|&(a, b)| !graph.has_edge(a, b)) {
            return Err(format!("{t:?} uses missing edge {a}-{b}"));
        }
        if [t.u, t.y, t.x].iter().any(|&w| !order.precedes(w, t.v)) {
            return Err(format!("{t:?}: v is not the maximum"));
        }
        if !seen.insert(t.canonical()) {
            return Err(format!("{t:?} emitted twice"));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use fourcycle_core::gen_grid;

    #[test]
    fn k4_passes() {
        let g = CsrGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let report = verify(&g).unwrap();
        assert!(report.passed(), "{:?}", report.first_failure());
        assert_eq!(report.global, 3);
    }

    #[test]
    fn grid_passes() {
        let report = verify(&gen_grid(6, 7).unwrap()).unwrap();
        assert!(report.passed());
        assert_eq!(report.global, 30);
    }

    #[test]
    fn refuses_over_cap() {
        let g = CsrGraph::empty(70).unwrap();
        assert!(matches!(
            verify(&g),
            Err(VerifyError::Oracle(OracleError::TooLarge {
                n: 70,
                cap: 64
            }))
        ));
    }

    #[test]
    fn bad_tuples_are_caught() {
        let g = CsrGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let good = CycleTuple {
            v: 3,
            u: 2,
            y: 1,
            x: 0,
        };
        assert!(check_tuples(&g, &[good]).is_ok());
        assert!(check_tuples(&g, &[good, good]).is_err());
        assert!(check_tuples(
            &g,
            &[CycleTuple {
                v: 3,
                u: 1,
                y: 2,
                x: 0
            }]
        )
        .is_err());
        assert!(check_tuples(
            &g,
            &[CycleTuple {
                v: 0,
                u: 1,
                y: 2,
                x: 3
            }]
        )
        .is_err());
    }
}
