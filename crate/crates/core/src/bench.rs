//! Timing experiments: per-phase cost with a varying number of equal-size
//! blocks, and total cost as the node count grows.

use std::io::Write;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::detection::{find_cuts, lower_tri_row_sums, partition_from_cuts, LrcmOutput};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::matrix::SparseSymMatrix;
use crate::ordering::rcm_order;
use crate::verify::{components_bfs, gen_block_graph};

/// Wall-clock time of each pipeline phase.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct PhaseTimes {
    pub laplacian: Duration,
    pub rcm: Duration,
    pub permute: Duration,
    pub sumfind: Duration,
}

impl PhaseTimes {
    pub fn total(&self) -> Duration {
        self.laplacian + self.rcm + self.permute + self.sumfind
    }
}

/// The detection pipeline with each phase timed separately. Building the
/// partition afterwards is not timed.
pub fn run_timed(g: &Graph) -> Result<(LrcmOutput, PhaseTimes)> {
    let t0 = Instant::now();
    let l = SparseSymMatrix::laplacian(g);
    let t1 = Instant::now();
    let order = rcm_order(g);
    let t2 = Instant::now();
    let lhat = l.permute_symmetric(&order)?;
    let t3 = Instant::now();
    let cuts = find_cuts(&lower_tri_row_sums(&lhat))?;
    let t4 = Instant::now();
    let times = PhaseTimes {
        laplacian: t1 - t0,
        rcm: t2 - t1,
        permute: t3 - t2,
        sumfind: t4 - t3,
    };
    drop(lhat);
    drop(l);
    let partition = partition_from_cuts(&order, &cuts);
    Ok((
        LrcmOutput {
            partition,
            order,
            cuts,
        },
        times,
    ))
}

fn ms(d: Duration) -> f64 {
    d.as_nanos() as f64 / 1e6
}

/// Mean phase times for one block count.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PhaseBreakdown {
    pub p: u32,
    pub k: usize,
    pub n: usize,
    pub m: usize,
    pub q_max: usize,
    pub t_laplacian_ms: f64,
    pub t_rcm_ms: f64,
    pub t_permute_ms: f64,
    pub t_sumfind_ms: f64,
}

impl PhaseBreakdown {
    pub fn total_ms(&self) -> f64 {
        self.t_laplacian_ms + self.t_rcm_ms + self.t_permute_ms + self.t_sumfind_ms
    }

    /// Phase times divided by `baseline_total_ms`.
    pub fn normalized(&self, baseline_total_ms: f64) -> PhaseBreakdown {
        PhaseBreakdown {
            t_laplacian_ms: self.t_laplacian_ms / baseline_total_ms,
            t_rcm_ms: self.t_rcm_ms / baseline_total_ms,
            t_permute_ms: self.t_permute_ms / baseline_total_ms,
            t_sumfind_ms: self.t_sumfind_ms / baseline_total_ms,
            ..self.clone()
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BlockExperiment {
    pub n_target: usize,
    /// Block counts are `2^p` for each `p` listed.
    pub exponents: Vec<u32>,
    pub reps: usize,
    pub seed: u64,
    /// Expected edges per node in each block, tree edges included.
    pub edges_per_node: f64,
}

impl BlockExperiment {
    pub fn new(n_target: usize, exponents: Vec<u32>, reps: usize, seed: u64) -> Self {
        BlockExperiment {
            n_target,
            exponents,
            reps,
            seed,
            edges_per_node: 2.0,
        }
    }
}

/// Probability for non-tree pairs that brings a block of `size` nodes to
/// `target_edges` expected edges. `None` when the target is below tree
/// density or above the complete graph.
fn extra_edge_probability(size: usize, target_edges: f64) -> Option<f64> {
    let tree = size.saturating_sub(1) as f64;
    let free = (size * size.saturating_sub(1) / 2) as f64 - tree;
    if target_edges < tree || target_edges > tree + free {
        return None;
    }
    if free == 0.0 {
        return Some(0.0);
    }
    Some((target_edges - tree) / free)
}

fn check_against_oracle(g: &Graph, out: &LrcmOutput) -> Result<()> {
    if out.partition != components_bfs(g) {
        return Err(Error::Verification(format!(
            "L-RCM partition disagrees with BFS on n = {}, m = {}",
            g.n(),
            g.m()
        )));
    }
    Ok(())
}

/// Runs every configuration once untimed (checking its partition against
/// BFS), then `reps` timed runs, and returns their mean.
fn measure(g: &Graph, reps: usize) -> Result<PhaseTimes> {
    let (out, _) = run_timed(g)?;
    check_against_oracle(g, &out)?;
    let mut sum = PhaseTimes::default();
    for _ in 0..reps {
        let (_, t) = run_timed(g)?;
        sum.laplacian += t.laplacian;
        sum.rcm += t.rcm;
        sum.permute += t.permute;
        sum.sumfind += t.sumfind;
    }
    let r = reps as u32;
    Ok(PhaseTimes {
        laplacian: sum.laplacian / r,
        rcm: sum.rcm / r,
        permute: sum.permute / r,
        sumfind: sum.sumfind / r,
    })
}

pub fn run_block_experiment(cfg: &BlockExperiment) -> Result<Vec<PhaseBreakdown>> {
    if cfg.reps == 0 {
        return Err(Error::Config("reps must be at least 1".into()));
    }
    let mut rows = Vec::with_capacity(cfg.exponents.len());
    for &p in &cfg.exponents {
        let k = 1usize
            .checked_shl(p)
            .filter(|&k| k <= cfg.n_target && p < usize::BITS)
            .ok_or_else(|| {
                Error::Config(format!("2^{p} blocks do not fit in {} nodes", cfg.n_target))
            })?;
        let size = cfg.n_target / k;
        let prob = extra_edge_probability(size, cfg.edges_per_node * size as f64).unwrap_or(
            if cfg.edges_per_node * size as f64 > size as f64 {
                1.0
            } else {
                0.0
            },
        );
        let g = gen_block_graph(k, size, prob, cfg.seed.wrapping_add(p as u64));
        let t = measure(&g, cfg.reps)?;
        rows.push(PhaseBreakdown {
            p,
            k,
            n: g.n(),
            m: g.m(),
            q_max: g.max_degree(),
            t_laplacian_ms: ms(t.laplacian),
            t_rcm_ms: ms(t.rcm),
            t_permute_ms: ms(t.permute),
            t_sumfind_ms: ms(t.sumfind),
        });
    }
    Ok(rows)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScalingPoint {
    pub n: usize,
    pub m: usize,
    /// Achieved `nnz(A) / n^2`.
    pub sparsity: f64,
    pub reps: usize,
    /// Mean over `reps` runs.
    pub total_ms: f64,
}

/// Two equal blocks per instance with `nnz(A) / n^2` close to `sparsity`.
pub fn run_scaling_experiment(
    n_list: &[usize],
    sparsity: f64,
    reps: usize,
    seed: u64,
) -> Result<Vec<ScalingPoint>> {
    if reps < 3 {
        return Err(Error::Config(
            "scaling runs need at least 3 repetitions".into(),
        ));
    }
    if !(sparsity > 0.0 && sparsity <= 1.0) {
        return Err(Error::Config(format!("sparsity {sparsity} outside (0, 1]")));
    }
    let mut points = Vec::with_capacity(n_list.len());
    for (idx, &n) in n_list.iter().enumerate() {
        if n < 4 {
            return Err(Error::Config(format!("n = {n} is below the minimum of 4")));
        }
        let size = n / 2;
        let nf = (2 * size) as f64;
        // nnz(A) = 2m, split over two blocks
        let per_block = sparsity * nf * nf / 4.0;
        let prob = extra_edge_probability(size, per_block).ok_or_else(|| {
            Error::Config(format!(
                "sparsity {sparsity} is infeasible for two connected blocks of {size} nodes"
            ))
        })?;
        let g = gen_block_graph(2, size, prob, seed.wrapping_add(idx as u64));
        let t = measure(&g, reps)?;
        points.push(ScalingPoint {
            n: g.n(),
            m: g.m(),
            sparsity: 2.0 * g.m() as f64 / (nf * nf),
            reps,
            total_ms: ms(t.total()),
        });
    }
    Ok(points)
}

/// `t ~ coefficient * n^exponent` from a least-squares fit in log-log space.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PowerLawFit {
    pub coefficient: f64,
    pub exponent: f64,
    /// Root-mean-square of the log residuals.
    pub residual: f64,
}

pub fn fit_power_law_xy(xy: &[(f64, f64)]) -> Result<PowerLawFit> {
    if xy.len() < 3 {
        return Err(Error::Config(
            "power-law fit needs at least 3 points".into(),
        ));
    }
    if xy.iter().any(|&(x, y)| !(x > 0.0 && y > 0.0)) {
        return Err(Error::Config("power-law fit needs positive data".into()));
    }
    let logs: Vec<(f64, f64)> = xy.iter().map(|&(x, y)| (x.ln(), y.ln())).collect();
    let len = logs.len() as f64;
    let mx = logs.iter().map(|p| p.0).sum::<f64>() / len;
    let my = logs.iter().map(|p| p.1).sum::<f64>() / len;
    let sxx: f64 = logs.iter().map(|p| (p.0 - mx).powi(2)).sum();
    let sxy: f64 = logs.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    if sxx <= f64::EPSILON * len * mx.abs().max(1.0) {
        return Err(Error::Config(
            "power-law fit is degenerate: all n equal".into(),
        ));
    }
    let exponent = sxy / sxx;
    let intercept = my - exponent * mx;
    let sse: f64 = logs
        .iter()
        .map(|p| (p.1 - intercept - exponent * p.0).powi(2))
        .sum();
    Ok(PowerLawFit {
        coefficient: intercept.exp(),
        exponent,
        residual: (sse / len).sqrt(),
    })
}

/// Fits mean total time against `n`.
pub fn fit_power_law(points: &[ScalingPoint]) -> Result<PowerLawFit> {
    let xy: Vec<(f64, f64)> = points.iter().map(|p| (p.n as f64, p.total_ms)).collect();
    fit_power_law_xy(&xy)
}

pub const BLOCK_CSV_HEADER: &str =
    "p,k,n,m,qmax,t_laplacian_ms,t_rcm_ms,t_permute_ms,t_sumfind_ms,t_total_ms";
pub const SCALING_CSV_HEADER: &str = "n,m,sparsity,reps,t_total_ms";

pub fn write_block_csv<W: Write>(rows: &[PhaseBreakdown], mut out: W) -> std::io::Result<()> {
    writeln!(out, "{BLOCK_CSV_HEADER}")?;
    for r in rows {
        writeln!(
            out,
            "{},{},{},{},{},{:.6},{:.6},{:.6},{:.6},{:.6}",
            r.p,
            r.k,
            r.n,
            r.m,
            r.q_max,
            r.t_laplacian_ms,
            r.t_rcm_ms,
            r.t_permute_ms,
            r.t_sumfind_ms,
            r.total_ms()
        )?;
    }
    Ok(())
}

pub fn write_scaling_csv<W: Write>(points: &[ScalingPoint], mut out: W) -> std::io::Result<()> {
    writeln!(out, "{SCALING_CSV_HEADER}")?;
    for p in points {
        writeln!(
            out,
            "{},{},{:.6},{},{:.6}",
            p.n, p.m, p.sparsity, p.reps, p.total_ms
        )?;
    }
    Ok(())
}

/// JSON summary of a power-law fit: `{"a":..,"beta":..,"residual":..}`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FitSummary {
    pub a: f64,
    pub beta: f64,
    pub residual: f64,
}

impl From<PowerLawFit> for FitSummary {
    fn from(f: PowerLawFit) -> Self {
        FitSummary {
            a: f.coefficient,
            beta: f.exponent,
            residual: f.residual,
        }
    }
}

pub fn fit_summary_json(fit: PowerLawFit) -> String {
    serde_json::to_string(&FitSummary::from(fit)).expect("plain struct serializes")
}
