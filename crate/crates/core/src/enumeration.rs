//! Exhaustive generation of standard-form quandle matrices of order `n` and
//! their reduction to isomorphism classes.
//!
//! Column `i` of a standard-form matrix is a permutation fixing `i`, so the
//! search space is the product of the `(n − 1)!` candidates for each column.
//! The naive strategy walks the full product and checks self-distributivity
//! on each complete matrix. The backtracking strategy places columns left to
//! right and tests every triple `(i, j, k)` as soon as the columns it reads
//! (`j`, `k` and `j ▷ k`) are placed. Both emit matrices in lexicographic
//! order of the tuple of chosen candidate indices.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::group::GroupId;
use crate::matrix::QuandleMatrix;
use crate::perm::{factorial, next_lex};
use crate::symmetry::{automorphism_group, canonical_form};
use crate::MAX_ORDER;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Strategy {
    Naive,
    Backtracking,
}

impl std::fmt::Display for Strategy {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Strategy::Naive => "naive",
            Strategy::Backtracking => "backtracking",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Emit {
    Classes,
    AllMatrices,
}

pub const DEFAULT_MAX_PLACEMENTS: u64 = 1_000_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumerationOptions {
    pub strategy: Strategy,
    /// Worker threads; 1 runs on the calling thread.
    pub jobs: usize,
    pub emit: Emit,
    /// Abort once this many columns have been placed.
    pub max_placements: u64,
    pub time_limit: Option<Duration>,
}

impl Default for EnumerationOptions {
    fn default() -> Self {
        EnumerationOptions {
            strategy: Strategy::Backtracking,
            jobs: 1,
            emit: Emit::Classes,
            max_placements: DEFAULT_MAX_PLACEMENTS,
            time_limit: None,
        }
    }
}

impl EnumerationOptions {
    pub fn with_strategy(strategy: Strategy) -> Self {
        EnumerationOptions {
            strategy,
            ..Default::default()
        }
    }
}

/// One isomorphism class of quandles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassRecord {
    pub representative: QuandleMatrix,
    pub aut_order: u64,
    pub aut_id: GroupId,
    /// `n! / |Aut|`
    pub np: u64,
    /// How many enumerated matrices fell into this class.
    pub members: u64,
    pub latin: bool,
    pub connected: bool,
}

impl ClassRecord {
    pub fn from_representative(representative: QuandleMatrix, members: u64) -> Self {
        let aut = automorphism_group(&representative);
        ClassRecord {
            aut_order: aut.order(),
            aut_id: aut.identify(),
            np: factorial(representative.order()) / aut.order(),
            members,
            latin: representative.is_latin(),
            connected: representative.is_connected(),
            representative,
        }
    }

    /// `aut=<order>:<label> np=<k> latin=<0|1> connected=<0|1>`
    pub fn machine_record(&self) -> String {
        format!(
            "aut={}:{} np={} latin={} connected={}",
            self.aut_order, self.aut_id, self.np, self.latin as u8, self.connected as u8
        )
    }
}

#[derive(Debug, Clone)]
pub struct EnumerationReport {
    pub n: usize,
    pub total_valid_matrices: u64,
    /// Sorted by canonical representative.
    pub classes: Vec<ClassRecord>,
    pub elapsed: Duration,
    pub strategy: Strategy,
}

impl EnumerationReport {
    /// Canonical matrix line followed by its record line, per class.
    pub fn to_machine(&self) -> String {
        let mut out = String::new();
        for class in &self.classes {
            out.push_str(&class.representative.to_machine_line());
            out.push('\n');
            out.push_str(&class.machine_record());
            out.push('\n');
        }
        out
    }

    /// Human-readable table: matrix, Aut(Q) and N_p per class.
    pub fn to_table(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "order {}: {} classes, {} standard-form matrices ({} strategy, {:.3}s)",
            self.n,
            self.classes.len(),
            self.total_valid_matrices,
            self.strategy,
            self.elapsed.as_secs_f64()
        );
        for (k, class) in self.classes.iter().enumerate() {
            let _ = writeln!(
                out,
                "\n#{:<3} Aut = {} (order {})  N_p = {}  latin = {}  connected = {}",
                k + 1,
                class.aut_id,
                class.aut_order,
                class.np,
                if class.latin { "yes" } else { "no" },
                if class.connected { "yes" } else { "no" },
            );
            for line in class.representative.to_string().lines() {
                let _ = writeln!(out, "     {line}");
            }
        }
        out
    }
}

#[derive(Debug, Clone)]
pub enum EnumerationOutput {
    Classes(EnumerationReport),
    Matrices(Vec<QuandleMatrix>),
}

/// The `(n − 1)!` permutations of `1..=n` with `i` at position `i`, in
/// lexicographic order.
pub fn column_candidates(n: usize, i: usize) -> Result<Vec<Vec<usize>>> {
    if i == 0 || i > n {
        return Err(Error::IndexOutOfRange { index: i, n });
    }
    Ok(candidates_zero_based(n, i - 1)
        .into_iter()
        .map(|c| c.into_iter().map(|x| x as usize + 1).collect())
        .collect())
}

fn candidates_zero_based(n: usize, fixed: usize) -> Vec<Vec<u8>> {
    // Permute the other n − 1 values in lexicographic order and splice the
    // fixed point back in; splicing preserves the order.
    let mut rest: Vec<u8> = (0..n as u8).filter(|&x| x as usize != fixed).collect();
    let mut out = Vec::new();
    loop {
        let mut col = rest.clone();
        col.insert(fixed, fixed as u8);
        out.push(col);
        if !next_lex(&mut rest) {
            break;
        }
    }
    out
}

fn check_n(n: usize) -> Result<()> {
    match n {
        0 => Err(Error::ZeroOrder),
        n if n > MAX_ORDER => Err(Error::OrderTooLarge(n)),
        _ => Ok(()),
    }
}

struct Budget {
    placements: AtomicU64,
    cap: u64,
    deadline: Option<Instant>,
    aborted: AtomicBool,
}

impl Budget {
    const FLUSH: u64 = 1 << 12;

    fn new(opts: &EnumerationOptions) -> Self {
        Budget {
            placements: AtomicU64::new(0),
            cap: opts.max_placements,
            deadline: opts.time_limit.map(|t| Instant::now() + t),
            aborted: AtomicBool::new(false),
        }
    }

    /// Adds `local` to the shared count; false once the run must stop.
    fn flush(&self, local: &mut u64) -> bool {
        let total = self.placements.fetch_add(*local, Ordering::Relaxed) + *local;
        *local = 0;
        let over = total > self.cap || self.deadline.is_some_and(|d| Instant::now() >= d);
        if over {
            self.aborted.store(true, Ordering::Relaxed);
        }
        !self.aborted.load(Ordering::Relaxed)
    }
}

struct Abort;

/// Search state for one subtree, the one with column 1 fixed to a given
/// candidate.
struct Worker<'a> {
    n: usize,
    candidates: &'a [Vec<Vec<u8>>],
    budget: &'a Budget,
    alpha: Vec<u8>,
    local: u64,
    found: Vec<QuandleMatrix>,
}

impl<'a> Worker<'a> {
    fn new(n: usize, candidates: &'a [Vec<Vec<u8>>], budget: &'a Budget) -> Self {
        Worker {
            n,
            candidates,
            budget,
            alpha: vec![0; n * n],
            local: 0,
            found: Vec::new(),
        }
    }

    #[inline]
    fn at(&self, i: usize, j: usize) -> usize {
        self.alpha[i * self.n + j] as usize
    }

    fn place(&mut self, column: usize, choice: usize) -> Result<(), Abort> {
        let n = self.n;
        for (i, &v) in self.candidates[column][choice].iter().enumerate() {
            self.alpha[i * n + column] = v;
        }
        self.local += 1;
        if self.local >= Budget::FLUSH && !self.budget.flush(&mut self.local) {
            return Err(Abort);
        }
        Ok(())
    }

    fn emit(&mut self) {
        self.found
            .push(QuandleMatrix::from_raw(self.n, self.alpha.clone()));
    }

    fn is_distributive(&self) -> bool {
        let n = self.n;
        for i in 0..n {
            for j in 0..n {
                let ij = self.at(i, j);
                for k in 0..n {
                    if self.at(ij, k) != self.at(self.at(i, k), self.at(j, k)) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Checks the triples that became decidable when column `c` was placed:
    /// those whose `j`, `k` and `w = j ▷ k` are all at most `c`, with `c`
    /// among them.
    fn newly_decidable_hold(&self, c: usize) -> bool {
        let n = self.n;
        for j in 0..=c {
            for k in 0..=c {
                let w = self.at(j, k);
                if w > c || (j != c && k != c && w != c) {
                    continue;
                }
                for i in 0..n {
                    if self.at(self.at(i, j), k) != self.at(self.at(i, k), w) {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn run_naive(&mut self, first: usize) -> Result<(), Abort> {
        let n = self.n;
        let mut idx = vec![0usize; n];
        idx[0] = first;
        for (c, &choice) in idx.iter().enumerate() {
            self.place(c, choice)?;
        }
        loop {
            if self.is_distributive() {
                self.emit();
            }
            let mut c = n - 1;
            loop {
                if c == 0 {
                    return Ok(());
                }
                idx[c] += 1;
                if idx[c] < self.candidates[c].len() {
                    self.place(c, idx[c])?;
                    break;
                }
                idx[c] = 0;
                self.place(c, 0)?;
                c -= 1;
            }
        }
    }

    fn run_backtracking(&mut self, first: usize) -> Result<(), Abort> {
        self.place(0, first)?;
        if self.newly_decidable_hold(0) {
            self.descend(1)?;
        }
        Ok(())
    }

    fn descend(&mut self, c: usize) -> Result<(), Abort> {
        if c == self.n {
            self.emit();
            return Ok(());
        }
        for choice in 0..self.candidates[c].len() {
            self.place(c, choice)?;
            if self.newly_decidable_hold(c) {
                self.descend(c + 1)?;
            }
        }
        Ok(())
    }
}

fn thread_pool(jobs: usize) -> rayon::ThreadPool {
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .expect("failed to start worker threads")
}

/// Every standard-form quandle matrix of order `n`, in lexicographic order
/// of candidate-index tuples.
pub fn enumerate_all(n: usize, opts: &EnumerationOptions) -> Result<Vec<QuandleMatrix>> {
    check_n(n)?;
    let jobs = opts.jobs.max(1);
    let candidates: Vec<Vec<Vec<u8>>> = (0..n).map(|i| candidates_zero_based(n, i)).collect();
    let budget = Budget::new(opts);

    let subtree = |first: usize| -> (Vec<QuandleMatrix>, bool) {
        let mut worker = Worker::new(n, &candidates, &budget);
        let outcome = match opts.strategy {
            Strategy::Naive => worker.run_naive(first),
            Strategy::Backtracking => worker.run_backtracking(first),
        };
        let mut local = worker.local;
        let ok = budget.flush(&mut local) && outcome.is_ok();
        (worker.found, ok)
    };

    let firsts = 0..candidates[0].len();
    let parts: Vec<(Vec<QuandleMatrix>, bool)> = if jobs == 1 {
        firsts.map(subtree).collect()
    } else {
        thread_pool(jobs).install(|| firsts.into_par_iter().map(subtree).collect())
    };

    let aborted = budget.aborted.load(Ordering::Relaxed) || parts.iter().any(|(_, ok)| !ok);
    let found: usize = parts.iter().map(|(m, _)| m.len()).sum();
    if aborted {
        return Err(Error::ResourceCap {
            placements: budget.placements.load(Ordering::Relaxed),
            found,
        });
    }
    Ok(parts.into_iter().flat_map(|(m, _)| m).collect())
}

/// Groups [`enumerate_all`]'s output by canonical form.
pub fn enumerate_classes(n: usize, opts: &EnumerationOptions) -> Result<EnumerationReport> {
    let start = Instant::now();
    let matrices = enumerate_all(n, opts)?;
    let jobs = opts.jobs.max(1);

    let canon: Vec<QuandleMatrix> = if jobs == 1 {
        matrices.iter().map(canonical_form).collect()
    } else {
        thread_pool(jobs).install(|| matrices.par_iter().map(canonical_form).collect())
    };
    let mut members: BTreeMap<QuandleMatrix, u64> = BTreeMap::new();
    for c in canon {
        *members.entry(c).or_insert(0) += 1;
    }
    let classes = members
        .into_iter()
        .map(|(rep, count)| ClassRecord::from_representative(rep, count))
        .collect();

    Ok(EnumerationReport {
        n,
        total_valid_matrices: matrices.len() as u64,
        classes,
        elapsed: start.elapsed(),
        strategy: opts.strategy,
    })
}

/// Runs the enumeration and returns whatever `opts.emit` asks for.
pub fn enumerate(n: usize, opts: &EnumerationOptions) -> Result<EnumerationOutput> {
    match opts.emit {
        Emit::Classes => enumerate_classes(n, opts).map(EnumerationOutput::Classes),
        Emit::AllMatrices => enumerate_all(n, opts).map(EnumerationOutput::Matrices),
    }
}
