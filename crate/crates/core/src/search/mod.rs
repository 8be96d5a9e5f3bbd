//! Minimum-spectral-radius searches over graphs with a given dissociation
//! number.

mod canon;
mod checkpoint;
mod enumerate;
mod family;

use std::cmp::Ordering;
use std::path::PathBuf;
use std::sync::atomic::{AtomicU64, Ordering as AtomicOrdering};
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::dissociation::{diss_number, diss_tree_dp, DissError};
use crate::graph::{decode_graph6, encode_graph6, Graph, GraphError};
use crate::reduced::ReducedError;
use crate::spectral::{char_poly_exact, compare_largest_roots, spectral_radius, SpectralError};

pub use canon::{canonical_form, MAX_GENERAL_CANON_ORDER};
pub use checkpoint::{Checkpoint, Cursor, CURSOR_FILE, RECORDS_FILE};
pub use enumerate::{
    FreeTrees, GraphList, GraphSource, LabeledConnected, RootedTrees, MAX_LABELED_ORDER,
    MAX_TREE_ORDER,
};
pub use family::{family_candidates, family_search, FamilySearchResult};

/// Environment variable overriding the default worker count.
pub const WORKERS_ENV: &str = "DISSRHO_WORKERS";
/// Radii closer than this are ordered exactly.
pub const TIE_WINDOW: f64 = 1e-7;
pub const DEFAULT_CHECKPOINT_EVERY: u64 = 10_000;
const RHO_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SearchError {
    #[error("{what} is limited to order {limit}, got {order}")]
    ResourceLimit {
        what: &'static str,
        order: usize,
        limit: usize,
    },
    #[error("no graph of order {n} has dissociation number {psi} in {origin}")]
    NoCandidates {
        n: usize,
        psi: usize,
        origin: String,
    },
    #[error("search interrupted before chunk {next_chunk}; resume from the checkpoint")]
    Interrupted { next_chunk: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("checkpoint I/O: {0}")]
    Io(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Dissociation(#[from] DissError),
    #[error(transparent)]
    Spectral(#[from] SpectralError),
    #[error(transparent)]
    Reduced(#[from] ReducedError),
}

/// One candidate graph as persisted in the record log.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SearchRecord {
    pub g6: String,
    pub n: usize,
    pub diss: usize,
    pub rho: f64,
    pub canon: String,
    /// Number of distinct exact radii below this one among the final
    /// near-minimal records.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rho_exact_rank: Option<usize>,
}

impl SearchRecord {
    pub fn graph(&self) -> Result<Graph, SearchError> {
        decode_graph6(&self.g6).map_err(|e| SearchError::InvalidParameter(e.to_string()))
    }

    /// Recomputes the dissociation number and radius from `g6`; returns the
    /// radius discrepancy, or an error if the dissociation number differs.
    pub fn revalidate(&self) -> Result<f64, SearchError> {
        let g = self.graph()?;
        let diss = if g.is_tree() {
            diss_tree_dp(&g)?
        } else {
            diss_number(&g)?
        };
        if diss != self.diss || g.order() != self.n {
            return Err(SearchError::InvalidParameter(format!(
                "record {} stores diss {} but recomputation gives {diss}",
                self.g6, self.diss
            )));
        }
        Ok((spectral_radius(&g, RHO_TOLERANCE)?.rho - self.rho).abs())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SearchResult {
    pub n: usize,
    pub psi: usize,
    pub source: String,
    pub winner: SearchRecord,
    /// Graphs whose radius equals the winner's exactly.
    pub ties: Vec<SearchRecord>,
    /// Every record within the tie window of the minimum, in exact order.
    pub near_minimal: Vec<SearchRecord>,
    pub graphs_examined: u64,
    pub candidates_examined: u64,
    pub exact_comparisons: usize,
    pub wall_time_secs: f64,
}

#[derive(Debug, Clone, Default)]
pub struct SearchOptions {
    /// Worker threads; defaults to `DISSRHO_WORKERS` or the number of cores.
    pub workers: Option<usize>,
    pub checkpoint_dir: Option<PathBuf>,
    /// Examined graphs between checkpoints; defaults to 10^4.
    pub checkpoint_every: Option<u64>,
    /// Stop with [`SearchError::Interrupted`] once this many chunks have been
    /// processed in this call.
    pub stop_after_chunks: Option<usize>,
}

/// Worker count from an explicit value, the environment, or the machine.
pub fn resolve_workers(explicit: Option<usize>) -> usize {
    explicit
        .or_else(|| {
            std::env::var(WORKERS_ENV)
                .ok()
                .and_then(|s| s.trim().parse().ok())
        })
        .filter(|&w| w >= 1)
        .unwrap_or_else(|| {
            std::thread::available_parallelism()
                .map(|n| n.get())
                .unwrap_or(1)
        })
}

/// Runs `f` on a dedicated pool with the resolved worker count.
pub fn with_workers<T: Send>(workers: Option<usize>, f: impl FnOnce() -> T + Send) -> T {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(resolve_workers(workers))
        .build()
        .expect("thread pool");
    pool.install(f)
}

/// Cheap lower bound on the spectral radius: `max(2|E|/n, sqrt(max degree))`.
pub fn rho_lower_bound(g: &Graph) -> f64 {
    let n = g.order().max(1) as f64;
    (2.0 * g.edge_count() as f64 / n).max((g.max_degree() as f64).sqrt())
}

struct SharedBest(AtomicU64);

impl SharedBest {
    fn new(v: f64) -> Self {
        SharedBest(AtomicU64::new(v.to_bits()))
    }

    fn get(&self) -> f64 {
        f64::from_bits(self.0.load(AtomicOrdering::Relaxed))
    }

    fn lower(&self, v: f64) {
        let mut cur = self.0.load(AtomicOrdering::Relaxed);
        while v < f64::from_bits(cur) {
            match self.0.compare_exchange_weak(
                cur,
                v.to_bits(),
                AtomicOrdering::Relaxed,
                AtomicOrdering::Relaxed,
            ) {
                Ok(_) => return,
                Err(actual) => cur = actual,
            }
        }
    }
}

struct ChunkOutcome {
    graphs: u64,
    candidates: u64,
    records: Vec<SearchRecord>,
}

fn process_chunk(
    graphs: Vec<Graph>,
    psi: usize,
    trees: bool,
    best: &SharedBest,
) -> Result<ChunkOutcome, SearchError> {
    let mut out = ChunkOutcome {
        graphs: graphs.len() as u64,
        candidates: 0,
        records: Vec::new(),
    };
    for g in graphs {
        let is_tree = trees || g.is_tree();
        let diss = if is_tree {
            diss_tree_dp(&g)?
        } else {
            diss_number(&g)?
        };
        if diss != psi {
            continue;
        }
        out.candidates += 1;
        if rho_lower_bound(&g) > best.get() + TIE_WINDOW {
            continue;
        }
        let rho = spectral_radius(&g, RHO_TOLERANCE)?.rho;
        if rho > best.get() + TIE_WINDOW {
            continue;
        }
        best.lower(rho);
        out.records.push(SearchRecord {
            g6: encode_graph6(&g),
            n: g.order(),
            diss,
            rho,
            canon: canonical_form(&g)?,
            rho_exact_rank: None,
        });
    }
    Ok(out)
}

/// Keeps records within the tie window of the minimum, one per canonical
/// form, sorted by `(rho, canon)`.
fn prune_board(records: &mut Vec<SearchRecord>) {
    let min = records.iter().map(|r| r.rho).fold(f64::INFINITY, f64::min);
    records.retain(|r| r.rho <= min + TIE_WINDOW);
    records.sort_by(|a, b| a.rho.total_cmp(&b.rho).then_with(|| a.canon.cmp(&b.canon)));
    let mut seen = std::collections::HashSet::new();
    records.retain(|r| seen.insert(r.canon.clone()));
}

/// Orders near-minimal records exactly and assigns ranks.
fn resolve_exact(board: &mut [SearchRecord]) -> Result<usize, SearchError> {
    let polys = board
        .iter()
        .map(|r| Ok(char_poly_exact(&r.graph()?)?))
        .collect::<Result<Vec<_>, SearchError>>()?;
    let mut comparisons = 0;
    let mut idx: Vec<usize> = (0..board.len()).collect();
    let mut err = None;
    idx.sort_by(|&i, &j| {
        if (board[i].rho - board[j].rho).abs() >= TIE_WINDOW {
            return board[i].rho.total_cmp(&board[j].rho);
        }
        comparisons += 1;
        match compare_largest_roots(&polys[i], &polys[j]) {
            Ok(o) => o.then_with(|| board[i].canon.cmp(&board[j].canon)),
            Err(e) => {
                err = Some(e);
                Ordering::Equal
            }
        }
    });
    if let Some(e) = err {
        return Err(e.into());
    }
    let sorted: Vec<SearchRecord> = idx.iter().map(|&i| board[i].clone()).collect();
    let sorted_polys: Vec<_> = idx.iter().map(|&i| polys[i].clone()).collect();
    let mut rank = 0;
    for k in 0..sorted.len() {
        if k > 0 {
            comparisons += 1;
            let same = (sorted[k].rho - sorted[k - 1].rho).abs() < TIE_WINDOW
                && compare_largest_roots(&sorted_polys[k], &sorted_polys[k - 1])?
                    == Ordering::Equal;
            if !same {
                rank += 1;
            }
        }
        board[k] = SearchRecord {
            rho_exact_rank: Some(rank),
            ..sorted[k].clone()
        };
    }
    Ok(comparisons)
}

/// Searches `source` for the graphs with dissociation number `psi` and the
/// smallest spectral radius.
pub fn min_rho_search(
    source: &dyn GraphSource,
    psi: usize,
    options: &SearchOptions,
) -> Result<SearchResult, SearchError> {
    let start = Instant::now();
    let n = source.order();
    let describe = source.describe();
    let checkpoint = options
        .checkpoint_dir
        .as_ref()
        .map(Checkpoint::open)
        .transpose()?;
    let mut cursor = Cursor {
        source: describe.clone(),
        n,
        psi,
        next_chunk: 0,
        records: 0,
        graphs_examined: 0,
        candidates_examined: 0,
    };
    let mut log: Vec<SearchRecord> = Vec::new();
    if let Some(cp) = &checkpoint {
        match cp.load()? {
            Some((saved, records))
                if saved.source == describe && saved.n == n && saved.psi == psi =>
            {
                cursor = saved;
                log = records;
            }
            _ => cp.reset()?,
        }
    }
    let mut board = log.clone();
    prune_board(&mut board);
    let best = SharedBest::new(board.first().map_or(f64::INFINITY, |r| r.rho));
    let every = options
        .checkpoint_every
        .unwrap_or(DEFAULT_CHECKPOINT_EVERY)
        .max(1);
    let trees = source.trees_only();
    let total = source.chunk_count();
    let workers = resolve_workers(options.workers);
    let batch = (4 * workers).max(1);
    let mut since_checkpoint = 0u64;
    let mut unsaved: Vec<SearchRecord> = Vec::new();
    let mut processed_here = 0usize;

    with_workers(Some(workers), || -> Result<(), SearchError> {
        while cursor.next_chunk < total {
            if options
                .stop_after_chunks
                .is_some_and(|k| processed_here >= k)
            {
                break;
            }
            let end = (cursor.next_chunk + batch).min(total);
            let outcomes: Vec<ChunkOutcome> = (cursor.next_chunk..end)
                .into_par_iter()
                .map(|i| process_chunk(source.chunk(i), psi, trees, &best))
                .collect::<Result<_, _>>()?;
            for o in outcomes {
                cursor.graphs_examined += o.graphs;
                cursor.candidates_examined += o.candidates;
                since_checkpoint += o.graphs;
                board.extend(o.records.iter().cloned());
                unsaved.extend(o.records);
            }
            prune_board(&mut board);
            let min = board.first().map_or(f64::INFINITY, |r| r.rho);
            unsaved.retain(|r| r.rho <= min + TIE_WINDOW);
            processed_here += end - cursor.next_chunk;
            cursor.next_chunk = end;
            if let Some(cp) = &checkpoint {
                if since_checkpoint >= every || cursor.next_chunk == total {
                    cp.append(&unsaved)?;
                    cursor.records += unsaved.len();
                    unsaved.clear();
                    cp.write_cursor(&cursor)?;
                    since_checkpoint = 0;
                }
            }
        }
        Ok(())
    })?;

    if cursor.next_chunk < total {
        if let Some(cp) = &checkpoint {
            cp.append(&unsaved)?;
            cursor.records += unsaved.len();
            cp.write_cursor(&cursor)?;
        }
        return Err(SearchError::Interrupted {
            next_chunk: cursor.next_chunk,
        });
    }
    if board.is_empty() {
        return Err(SearchError::NoCandidates {
            n,
            psi,
            origin: describe,
        });
    }
    let exact_comparisons = resolve_exact(&mut board)?;
    let winner = board[0].clone();
    let ties = board[1..]
        .iter()
        .filter(|r| r.rho_exact_rank == Some(0))
        .cloned()
        .collect();
    Ok(SearchResult {
        n,
        psi,
        source: describe,
        winner,
        ties,
        near_minimal: board,
        graphs_examined: cursor.graphs_examined,
        candidates_examined: cursor.candidates_examined,
        exact_comparisons,
        wall_time_secs: start.elapsed().as_secs_f64(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cycle, join, path};

    #[test]
    fn small_order_cases() {
        let five = min_rho_search(
            &LabeledConnected::new(5).unwrap(),
            2,
            &SearchOptions::default(),
        )
        .unwrap();
        let wheel = join(&cycle(4).unwrap(), &Graph::new(1));
        assert_eq!(five.winner.canon, canonical_form(&wheel).unwrap());
        assert!(five.ties.is_empty());
        let trees =
            min_rho_search(&FreeTrees::new(10).unwrap(), 7, &SearchOptions::default()).unwrap();
        assert_eq!(
            trees.winner.canon,
            canonical_form(&path(10).unwrap()).unwrap()
        );
        assert_eq!(trees.graphs_examined, 106);
    }

    #[test]
    fn no_candidates() {
        let err =
            min_rho_search(&FreeTrees::new(6).unwrap(), 1, &SearchOptions::default()).unwrap_err();
        assert!(matches!(err, SearchError::NoCandidates { .. }));
    }
}
