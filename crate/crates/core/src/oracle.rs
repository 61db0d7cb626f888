//! Ground-truth backtracking search for monochromatic loose paths and
//! cycles, plus the windowed maximality predicate with constructive
//! counter-extension.
//!
//! Cycle canonical form: the cycle starts at its minimum link vertex, runs
//! toward the smaller of the two neighboring links, and the k-2 interior
//! vertices of every edge are listed ascending. This kills the 2n symmetry
//! group, so exhaustive searches enumerate each cycle exactly once.

use crate::hypergraph::{Color, Coloring, LooseCycle, LoosePath, Vertex};
use crate::{Error, Result};

/// Node cap for backtracking searches. A node is one attempted edge
/// placement (one color test).
#[derive(Debug, Clone, Copy)]
pub struct SearchBudget {
    pub max_nodes: u64,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget { max_nodes: 100_000_000 }
    }
}

impl SearchBudget {
    pub fn new(max_nodes: u64) -> Self {
        SearchBudget { max_nodes }
    }
}

/// Result of a budgeted search. `ExhaustedNone` is only returned when the
/// full canonical space was searched.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchResult<T> {
    Found(T),
    ExhaustedNone,
    BudgetExceeded,
}

impl<T> SearchResult<T> {
    pub fn found(self) -> Option<T> {
        match self {
            SearchResult::Found(t) => Some(t),
            _ => None,
        }
    }
}

struct SearchState<'a> {
    col: &'a Coloring,
    color: Color,
    n_edges: usize,
    used: Vec<bool>,
    seq: Vec<Vertex>,
    nodes: u64,
    max_nodes: u64,
    forbidden: Vec<bool>,
}

impl<'a> SearchState<'a> {
    fn new(col: &'a Coloring, color: Color, n_edges: usize, forbidden: &[Vertex]) -> Self {
        let mut f = vec![false; col.n_verts()];
        for v in forbidden {
            if v.index() < f.len() {
                f[v.index()] = true;
            }
        }
        SearchState {
            col,
            color,
            n_edges,
            used: vec![false; col.n_verts()],
            seq: Vec::new(),
            nodes: 0,
            max_nodes: u64::MAX,
            forbidden: f,
        }
    }

    #[inline]
    fn available(&self, v: usize) -> bool {
        !self.used[v] && !self.forbidden[v]
    }

    #[inline]
    fn tick(&mut self) -> bool {
        self.nodes += 1;
        self.nodes <= self.max_nodes
    }
}

/// Enumerate ascending (k-2)-subsets of the available vertex set, invoking
/// `f` for each; `f` returns true to stop (witness found / budget blown).
fn interiors(
    st: &mut SearchState,
    count: usize,
    min_vertex: usize,
    buf: &mut Vec<Vertex>,
    f: &mut dyn FnMut(&mut SearchState, &mut Vec<Vertex>) -> bool,
) -> bool {
    if buf.len() == count {
        return f(st, buf);
    }
    let start = buf.last().map_or(min_vertex, |v| v.index() + 1);
    for v in start..st.col.n_verts() {
        if !st.available(v) {
            continue;
        }
        buf.push(Vertex(v as u32));
        st.used[v] = true;
        let stop = interiors(st, count, min_vertex, buf, f);
        st.used[v] = false;
        buf.pop();
        if stop {
            return true;
        }
    }
    false
}

enum Finish {
    Witness,
    Budget,
}

fn cycle_dfs(st: &mut SearchState, start: Vertex, out: &mut Option<Finish>) {
    let k = st.col.k();
    let placed_edges = (st.seq.len() - 1) / (k - 1);
    let last_link = *st.seq.last().unwrap();
    let closing = placed_edges == st.n_edges - 1;
    let mut buf = Vec::with_capacity(k - 2);
    interiors(st, k - 2, 0, &mut buf, &mut |st, buf| {
        if closing {
            // final edge returns to the start vertex
            let mut edge: Vec<Vertex> = Vec::with_capacity(k);
            edge.push(last_link);
            edge.extend_from_slice(buf);
            edge.push(start);
            if !st.tick() {
                *out = Some(Finish::Budget);
                return true;
            }
            if st.col.is_color(&edge, st.color) {
                let mut verts = st.seq.clone();
                verts.extend_from_slice(buf);
                *out = Some(Finish::Witness);
                st.seq = verts;
                return true;
            }
            return false;
        }
        // choose the next link; canonicality: every link after the start is
        // larger than the start, and the link opening the final edge must be
        // larger than the first link (kills the direction symmetry).
        let first_link = st.seq.get(k - 1).copied();
        let opens_final = placed_edges == st.n_edges - 2;
        for v in (start.index() + 1)..st.col.n_verts() {
            if !st.available(v) {
                continue;
            }
            if opens_final {
                if let Some(fl) = first_link {
                    if Vertex(v as u32) <= fl {
                        continue;
                    }
                }
            }
            let link = Vertex(v as u32);
            let mut edge: Vec<Vertex> = Vec::with_capacity(k);
            edge.push(last_link);
            edge.extend_from_slice(buf);
            edge.push(link);
            if !st.tick() {
                *out = Some(Finish::Budget);
                return true;
            }
            if !st.col.is_color(&edge, st.color) {
                continue;
            }
            let keep = st.seq.len();
            st.seq.extend_from_slice(buf);
            st.seq.push(link);
            st.used[v] = true;
            cycle_dfs(st, start, out);
            st.used[v] = false;
            st.seq.truncate(keep);
            if out.is_some() {
                return true;
            }
        }
        false
    });
}

/// Complete search for a monochromatic loose cycle of `n` edges, with
/// canonical-form pruning. `ExhaustedNone` means no such cycle exists.
pub fn find_mono_cycle(
    col: &Coloring,
    color: Color,
    n: usize,
    budget: SearchBudget,
) -> SearchResult<LooseCycle> {
    if n < 3 || n * (col.k() - 1) > col.n_verts() {
        return SearchResult::ExhaustedNone;
    }
    let mut nodes_spent = 0u64;
    for s in 0..col.n_verts() {
        let mut st = SearchState::new(col, color, n, &[]);
        st.max_nodes = budget.max_nodes.saturating_sub(nodes_spent);
        st.seq.push(Vertex(s as u32));
        st.used[s] = true;
        let mut out = None;
        cycle_dfs(&mut st, Vertex(s as u32), &mut out);
        nodes_spent += st.nodes;
        match out {
            Some(Finish::Witness) => {
                let cycle = LooseCycle::new(col.k(), st.seq).expect("search emits valid cycles");
                debug_assert!(crate::hypergraph::path_color_check(col, &cycle, color));
                return SearchResult::Found(cycle);
            }
            Some(Finish::Budget) => return SearchResult::BudgetExceeded,
            None => {}
        }
    }
    SearchResult::ExhaustedNone
}

/// Parallel variant: the root branching factor (start vertex) is split
/// across `jobs` workers; the reported witness is the one the sequential
/// search would return (smallest start vertex, first in canonical order).
pub fn find_mono_cycle_jobs(
    col: &Coloring,
    color: Color,
    n: usize,
    budget: SearchBudget,
    jobs: usize,
) -> SearchResult<LooseCycle> {
    if jobs <= 1 {
        return find_mono_cycle(col, color, n, budget);
    }
    if n < 3 || n * (col.k() - 1) > col.n_verts() {
        return SearchResult::ExhaustedNone;
    }
    use rayon::prelude::*;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .expect("thread pool");
    let per_start = budget.max_nodes / col.n_verts() as u64;
    let results: Vec<(usize, Option<Finish>, Vec<Vertex>)> = pool.install(|| {
        (0..col.n_verts())
            .into_par_iter()
            .map(|s| {
                let mut st = SearchState::new(col, color, n, &[]);
                st.max_nodes = per_start.max(1);
                st.seq.push(Vertex(s as u32));
                st.used[s] = true;
                let mut out = None;
                cycle_dfs(&mut st, Vertex(s as u32), &mut out);
                (s, out, st.seq)
            })
            .collect()
    });
    for (_, out, seq) in results.iter() {
        match out {
            Some(Finish::Witness) => {
                let cycle =
                    LooseCycle::new(col.k(), seq.clone()).expect("search emits valid cycles");
                return SearchResult::Found(cycle);
            }
            Some(Finish::Budget) => return SearchResult::BudgetExceeded,
            None => {}
        }
    }
    SearchResult::ExhaustedNone
}

fn path_dfs(st: &mut SearchState, out: &mut Option<Finish>) {
    let k = st.col.k();
    let placed_edges = (st.seq.len() - 1) / (k - 1);
    let last_link = *st.seq.last().unwrap();
    let first = st.seq[0];
    let closing = placed_edges == st.n_edges - 1;
    let mut buf = Vec::with_capacity(k - 1);
    if closing {
        // final edge: k-1 fresh vertices ascending, smallest > first vertex
        // (reflection canonicalization)
        interiors(st, k - 1, first.index() + 1, &mut buf, &mut |st, buf| {
            let mut edge: Vec<Vertex> = Vec::with_capacity(k);
            edge.push(last_link);
            edge.extend_from_slice(buf);
            if !st.tick() {
                *out = Some(Finish::Budget);
                return true;
            }
            if st.col.is_color(&edge, st.color) {
                st.seq.extend_from_slice(buf);
                *out = Some(Finish::Witness);
                return true;
            }
            false
        });
        return;
    }
    interiors(st, k - 2, 0, &mut buf, &mut |st, buf| {
        for v in 0..st.col.n_verts() {
            if !st.available(v) {
                continue;
            }
            let link = Vertex(v as u32);
            let mut edge: Vec<Vertex> = Vec::with_capacity(k);
            edge.push(last_link);
            edge.extend_from_slice(buf);
            edge.push(link);
            if !st.tick() {
                *out = Some(Finish::Budget);
                return true;
            }
            if !st.col.is_color(&edge, st.color) {
                continue;
            }
            let keep = st.seq.len();
            st.seq.extend_from_slice(buf);
            st.seq.push(link);
            st.used[v] = true;
            path_dfs(st, out);
            st.used[v] = false;
            st.seq.truncate(keep);
            if out.is_some() {
                return true;
            }
        }
        false
    });
}

/// Complete search for a monochromatic loose path of `n` edges avoiding the
/// `forbidden` vertices.
pub fn find_mono_path(
    col: &Coloring,
    color: Color,
    n: usize,
    budget: SearchBudget,
    forbidden: &[Vertex],
) -> SearchResult<LoosePath> {
    let k = col.k();
    let avail = col.n_verts().saturating_sub(
        forbidden
            .iter()
            .filter(|v| v.index() < col.n_verts())
            .count(),
    );
    if n == 0 || n * (k - 1) + 1 > avail {
        return SearchResult::ExhaustedNone;
    }
    let mut nodes_spent = 0u64;
    for s in 0..col.n_verts() {
        if forbidden.contains(&Vertex(s as u32)) {
            continue;
        }
        if n == 1 {
            // single edge: ascending from s
            let mut st = SearchState::new(col, color, n, forbidden);
            st.max_nodes = budget.max_nodes.saturating_sub(nodes_spent);
            st.seq.push(Vertex(s as u32));
            st.used[s] = true;
            let mut out = None;
            let mut buf = Vec::new();
            interiors(&mut st, k - 1, s + 1, &mut buf, &mut |st, buf| {
                let mut edge = vec![Vertex(s as u32)];
                edge.extend_from_slice(buf);
                if !st.tick() {
                    out = Some(Finish::Budget);
                    return true;
                }
                if st.col.is_color(&edge, st.color) {
                    st.seq.extend_from_slice(buf);
                    out = Some(Finish::Witness);
                    return true;
                }
                false
            });
            nodes_spent += st.nodes;
            match out {
                Some(Finish::Witness) => {
                    let p = LoosePath::new(k, st.seq).expect("valid path");
                    return SearchResult::Found(p);
                }
                Some(Finish::Budget) => return SearchResult::BudgetExceeded,
                None => continue,
            }
        }
        let mut st = SearchState::new(col, color, n, forbidden);
        st.max_nodes = budget.max_nodes.saturating_sub(nodes_spent);
        st.seq.push(Vertex(s as u32));
        st.used[s] = true;
        let mut out = None;
        // first edge: interior ascending and larger than the start vertex
        let mut buf = Vec::with_capacity(k - 2);
        interiors(&mut st, k - 2, s + 1, &mut buf, &mut |st, buf| {
            for v in 0..st.col.n_verts() {
                if !st.available(v) {
                    continue;
                }
                let link = Vertex(v as u32);
                let mut edge = vec![Vertex(s as u32)];
                edge.extend_from_slice(buf);
                edge.push(link);
                if !st.tick() {
                    out = Some(Finish::Budget);
                    return true;
                }
                if !st.col.is_color(&edge, st.color) {
                    continue;
                }
                let keep = st.seq.len();
                st.seq.extend_from_slice(buf);
                st.seq.push(link);
                st.used[v] = true;
                path_dfs(st, &mut out);
                st.used[v] = false;
                st.seq.truncate(keep);
                if out.is_some() {
                    return true;
                }
            }
            false
        });
        nodes_spent += st.nodes;
        match out {
            Some(Finish::Witness) => {
                let p = LoosePath::new(k, st.seq).expect("valid path");
                debug_assert!(crate::hypergraph::path_color_check(col, &p, color));
                return SearchResult::Found(p);
            }
            Some(Finish::Budget) => return SearchResult::BudgetExceeded,
            None => {}
        }
    }
    SearchResult::ExhaustedNone
}

/// Context for the windowed maximality predicate.
#[derive(Debug, Clone)]
pub struct MaximalityContext {
    pub path: LoosePath,
    pub w: Vec<Vertex>,
    pub color: Color,
}

impl MaximalityContext {
    pub fn new(path: LoosePath, w: Vec<Vertex>, color: Color) -> Result<MaximalityContext> {
        for v in &w {
            if path.contains(*v) {
                return Err(Error::Structure(format!("W vertex {v} lies on the path")));
            }
        }
        let mut sorted = w.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != w.len() {
            return Err(Error::Structure("duplicate vertex in W".into()));
        }
        Ok(MaximalityContext {
            path,
            w: sorted,
            color,
        })
    }
}

/// A same-color path of n+1 edges witnessing non-maximality: its vertex set
/// is V(P) plus exactly four W vertices, and both path end vertices are
/// preserved.
#[derive(Debug, Clone)]
pub struct CounterExtension {
    pub path: LoosePath,
    pub used: Vec<Vertex>,
}

#[derive(Debug, Clone)]
pub enum MaximalityOutcome {
    Maximal,
    Extension(CounterExtension),
}

/// Window replacement search implementing the maximality definition: for
/// r = 1..n and each admissible window base i, try to rebuild the window's
/// vertices plus a 4-subset W' of W into r+1 same-color edges, preserving
/// the boundary links (and the path endpoints for end windows).
///
/// Windows are scanned in increasing r then increasing i; W' subsets in
/// colex order; the first extension found is returned.
pub fn is_maximal_wrt(col: &Coloring, ctx: &MaximalityContext) -> Result<MaximalityOutcome> {
    is_maximal_wrt_capped(col, ctx, u64::MAX).map(|(o, _)| o)
}

/// As [`is_maximal_wrt`] but with a node cap; returns the outcome plus a
/// flag that is true when the sweep was cut short (the boolean answer is
/// then "no extension found within the cap", not a proof of maximality).
pub fn is_maximal_wrt_capped(
    col: &Coloring,
    ctx: &MaximalityContext,
    max_nodes: u64,
) -> Result<(MaximalityOutcome, bool)> {
    let k = col.k();
    if ctx.path.k() != k {
        return Err(Error::InvalidInput("path k does not match coloring".into()));
    }
    for v in ctx.path.vertices() {
        if v.index() >= col.n_verts() {
            return Err(Error::Structure(format!("path vertex {v} out of range")));
        }
    }
    for v in &ctx.w {
        if v.index() >= col.n_verts() {
            return Err(Error::Structure(format!("W vertex {v} out of range")));
        }
    }
    let n = ctx.path.len();
    if ctx.w.len() < 4 {
        return Ok((MaximalityOutcome::Maximal, false));
    }
    let b = crate::binom::Binom::new(ctx.w.len(), 4);
    let total_subsets = b.c(ctx.w.len(), 4);
    let mut nodes = 0u64;
    for r in 1..=n {
        for i in 1..=(n - r + 1) {
            for srank in 0..total_subsets {
                let idx = crate::hypergraph::unrank_sorted(srank, 4, ctx.w.len(), &b);
                let wp: Vec<Vertex> = idx.iter().map(|x| ctx.w[x.index()]).collect();
                if let Some(ext) =
                    try_window(col, ctx, r, i, &wp, &mut nodes, max_nodes)
                {
                    return Ok((
                        MaximalityOutcome::Extension(CounterExtension {
                            path: ext,
                            used: wp,
                        }),
                        false,
                    ));
                }
                if nodes > max_nodes {
                    return Ok((MaximalityOutcome::Maximal, true));
                }
            }
        }
    }
    Ok((MaximalityOutcome::Maximal, false))
}

/// Try to replace edges i..i+r-1 (1-based) of ctx.path by r+1 edges over the
/// window pool plus W'. Returns the full replacement path on success.
fn try_window(
    col: &Coloring,
    ctx: &MaximalityContext,
    r: usize,
    i: usize,
    wp: &[Vertex],
    nodes: &mut u64,
    max_nodes: u64,
) -> Option<LoosePath> {
    let k = col.k();
    let n = ctx.path.len();
    let verts = ctx.path.vertices();
    let left_end = i == 1;
    let right_end = i + r - 1 == n;
    let lo = (i - 1) * (k - 1);
    let hi = (i + r - 1) * (k - 1);

    // fixed first / last vertex of the rebuilt block, plus free link choices
    let w_l_choices: Vec<Vertex> = if left_end {
        vec![verts[0]]
    } else {
        // any vertex of e_{i-1} except its first
        ctx.path.edge(i - 2)[1..].to_vec()
    };
    let w_r_choices: Vec<Vertex> = if right_end {
        vec![*verts.last().unwrap()]
    } else {
        // any vertex of e_{i+r} except its last
        ctx.path.edge(i + r - 1)[..k - 1].to_vec()
    };

    // strict interior of the window
    let int_lo = if left_end { lo } else { lo + 1 };
    let int_hi = if right_end { hi } else { hi - 1 };
    let interior: Vec<Vertex> = verts[int_lo..=int_hi].to_vec();

    for &wl in &w_l_choices {
        for &wr in &w_r_choices {
            let mut pool: Vec<Vertex> = Vec::with_capacity(interior.len() + wp.len());
            pool.extend(interior.iter().copied().filter(|&v| v != wl && v != wr));
            pool.extend_from_slice(wp);
            pool.sort_unstable();
            debug_assert_eq!(pool.len() + 2, (r + 1) * (k - 1) + 1);
            if let Some(block) = arrange_block(col, ctx.color, wl, wr, &pool, r + 1, nodes, max_nodes)
            {
                // assemble the replacement path
                let mut out: Vec<Vertex> = Vec::with_capacity(verts.len() + 4);
                if !left_end {
                    // edges 1..i-2 unchanged, e_{i-1} reordered to exit at wl
                    out.extend_from_slice(&verts[..(i - 2) * (k - 1) + 1]);
                    let e = ctx.path.edge(i - 2);
                    let mut rest: Vec<Vertex> =
                        e[1..].iter().copied().filter(|&v| v != wl).collect();
                    rest.sort_unstable();
                    out.extend_from_slice(&rest);
                    out.push(wl);
                }
                out.extend_from_slice(&block[if left_end { 0 } else { 1 }..]);
                if !right_end {
                    // e_{i+r} reordered to enter at wr, then the untouched tail
                    let e = ctx.path.edge(i + r - 1);
                    let last = e[k - 1];
                    let mut rest: Vec<Vertex> = e[..k - 1]
                        .iter()
                        .copied()
                        .filter(|&v| v != wr)
                        .collect();
                    rest.sort_unstable();
                    out.extend_from_slice(&rest);
                    out.push(last);
                    out.extend_from_slice(&verts[(i + r) * (k - 1) + 1..]);
                }
                match LoosePath::new(k, out) {
                    Ok(p) => {
                        debug_assert_eq!(p.len(), n + 1);
                        debug_assert!(crate::hypergraph::path_color_check(col, &p, ctx.color));
                        return Some(p);
                    }
                    Err(_) => continue,
                }
            }
            if *nodes > max_nodes {
                return None;
            }
        }
    }
    None
}

/// Arrange `first`, all of `pool`, and `last` into `edges` consecutive
/// same-color loose-path edges. Interiors are canonicalized ascending.
fn arrange_block(
    col: &Coloring,
    color: Color,
    first: Vertex,
    last: Vertex,
    pool: &[Vertex],
    edges: usize,
    nodes: &mut u64,
    max_nodes: u64,
) -> Option<Vec<Vertex>> {
    let k = col.k();
    let mut used = vec![false; pool.len()];
    let mut seq = vec![first];
    fn rec(
        col: &Coloring,
        color: Color,
        pool: &[Vertex],
        used: &mut Vec<bool>,
        seq: &mut Vec<Vertex>,
        last: Vertex,
        edges: usize,
        nodes: &mut u64,
        max_nodes: u64,
    ) -> bool {
        let k = col.k();
        let placed = (seq.len() - 1) / (k - 1);
        let link = *seq.last().unwrap();
        if placed == edges - 1 {
            // final edge: remaining pool (k-2 of them) plus `last`
            let mut rest: Vec<Vertex> = pool
                .iter()
                .zip(used.iter())
                .filter(|(_, &u)| !u)
                .map(|(&v, _)| v)
                .collect();
            if rest.len() != k - 2 {
                return false;
            }
            rest.sort_unstable();
            let mut edge = vec![link];
            edge.extend_from_slice(&rest);
            edge.push(last);
            *nodes += 1;
            if *nodes > max_nodes || !col.is_color(&edge, color) {
                return false;
            }
            seq.extend_from_slice(&rest);
            seq.push(last);
            return true;
        }
        // choose an ascending (k-2)-interior then a link from the pool
        let m = pool.len();
        let mut idx = Vec::with_capacity(k - 2);
        fn choose_interior(
            col: &Coloring,
            color: Color,
            pool: &[Vertex],
            used: &mut Vec<bool>,
            idx: &mut Vec<usize>,
            m: usize,
            seq: &mut Vec<Vertex>,
            link: Vertex,
            last: Vertex,
            edges: usize,
            nodes: &mut u64,
            max_nodes: u64,
        ) -> bool {
            let k = col.k();
            if idx.len() == k - 2 {
                for li in 0..m {
                    if used[li] {
                        continue;
                    }
                    let next = pool[li];
                    let mut edge = Vec::with_capacity(k);
                    edge.push(link);
                    for &t in idx.iter() {
                        edge.push(pool[t]);
                    }
                    edge.push(next);
                    *nodes += 1;
                    if *nodes > max_nodes {
                        return false;
                    }
                    if !col.is_color(&edge, color) {
                        continue;
                    }
                    let keep = seq.len();
                    for &t in idx.iter() {
                        seq.push(pool[t]);
                    }
                    seq.push(next);
                    used[li] = true;
                    if rec(col, color, pool, used, seq, last, edges, nodes, max_nodes) {
                        return true;
                    }
                    used[li] = false;
                    seq.truncate(keep);
                }
                return false;
            }
            let start = idx.last().map_or(0, |&t| t + 1);
            for t in start..m {
                if used[t] {
                    continue;
                }
                idx.push(t);
                used[t] = true;
                let hit = choose_interior(
                    col, color, pool, used, idx, m, seq, link, last, edges, nodes, max_nodes,
                );
                used[t] = false;
                idx.pop();
                if hit {
                    return true;
                }
            }
            false
        }
        choose_interior(
            col, color, pool, used, &mut idx, m, seq, link, last, edges, nodes, max_nodes,
        )
    }
    if rec(
        col, color, pool, &mut used, &mut seq, last, edges, nodes, max_nodes,
    ) {
        Some(seq)
    } else {
        None
    }
}

/// Repeatedly apply counter-extensions until the path is maximal w.r.t. the
/// shrinking W. Terminates: each step adds one edge and removes 4 vertices
/// from W.
pub fn extend_to_maximal(
    col: &Coloring,
    ctx: &MaximalityContext,
) -> Result<(LoosePath, Vec<Vertex>)> {
    let mut path = ctx.path.clone();
    let mut w = ctx.w.clone();
    let cap = col.n_verts() / (col.k() - 1) + 1;
    loop {
        let step = MaximalityContext::new(path.clone(), w.clone(), ctx.color)?;
        match is_maximal_wrt(col, &step)? {
            MaximalityOutcome::Maximal => return Ok((path, w)),
            MaximalityOutcome::Extension(ce) => {
                w.retain(|v| !ce.used.contains(v));
                path = ce.path;
                if path.len() > cap {
                    return Err(Error::Internal(
                        "extension loop exceeded the vertex-count bound".into(),
                    ));
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colorings::{lower_bound_coloring, random_coloring};
    use crate::hypergraph::path_color_check;

    #[test]
    fn all_blue_has_blue_triangle() {
        let col = random_coloring(5, 12, 0, 1.0).unwrap();
        match find_mono_cycle(&col, Color::Blue, 3, SearchBudget::default()) {
            SearchResult::Found(c) => assert!(path_color_check(&col, &c, Color::Blue)),
            other => panic!("expected Found, got {other:?}"),
        }
    }

    #[test]
    fn extremal_coloring_has_neither_triangle() {
        let col = lower_bound_coloring(5, 3, 3).unwrap();
        assert_eq!(
            find_mono_cycle(&col, Color::Red, 3, SearchBudget::default()),
            SearchResult::ExhaustedNone
        );
        assert_eq!(
            find_mono_cycle(&col, Color::Blue, 3, SearchBudget::default()),
            SearchResult::ExhaustedNone
        );
    }

    #[test]
    fn path_trivials() {
        let col = random_coloring(5, 9, 0, 0.0).unwrap();
        match find_mono_path(&col, Color::Red, 2, SearchBudget::default(), &[]) {
            SearchResult::Found(p) => {
                assert_eq!(p.len(), 2);
                assert!(path_color_check(&col, &p, Color::Red));
            }
            other => panic!("expected Found, got {other:?}"),
        }
        assert_eq!(
            find_mono_path(&col, Color::Blue, 1, SearchBudget::default(), &[]),
            SearchResult::ExhaustedNone
        );
    }

    #[test]
    fn path_respects_forbidden_set() {
        let col = random_coloring(5, 21, 7, 0.5).unwrap();
        let forbidden: Vec<Vertex> = (0..4u32).map(Vertex).collect();
        if let SearchResult::Found(p) =
            find_mono_path(&col, Color::Blue, 3, SearchBudget::default(), &forbidden)
        {
            assert!(path_color_check(&col, &p, Color::Blue));
            for v in forbidden {
                assert!(!p.contains(v));
            }
        } else {
            panic!("blue P_3 should exist at N=21, p=0.5");
        }
    }

    #[test]
    fn empty_w_is_maximal() {
        let col = random_coloring(5, 14, 0, 0.5).unwrap();
        let path = LoosePath::new(5, (0..9u32).map(Vertex).collect()).unwrap();
        let ctx = MaximalityContext::new(path, vec![], Color::Red).unwrap();
        assert!(matches!(
            is_maximal_wrt(&col, &ctx).unwrap(),
            MaximalityOutcome::Maximal
        ));
    }

    #[test]
    fn all_red_path_extends() {
        // all-red coloring, red P_2 on 9 of 14 vertices, |W| = 5
        let col = random_coloring(5, 14, 0, 0.0).unwrap();
        let path = LoosePath::new(5, (0..9u32).map(Vertex).collect()).unwrap();
        let w: Vec<Vertex> = (9..14u32).map(Vertex).collect();
        let ctx = MaximalityContext::new(path.clone(), w, Color::Red).unwrap();
        match is_maximal_wrt(&col, &ctx).unwrap() {
            MaximalityOutcome::Extension(ce) => {
                assert_eq!(ce.path.len(), 3);
                assert_eq!(ce.used.len(), 4);
                assert!(path_color_check(&col, &ce.path, Color::Red));
                // endpoint preservation
                assert_eq!(ce.path.first(), path.first());
                assert_eq!(ce.path.last(), path.last());
                // vertex set = V(P) + W'
                for v in path.vertices() {
                    assert!(ce.path.contains(*v));
                }
            }
            MaximalityOutcome::Maximal => panic!("all-red path must extend"),
        }
    }

    #[test]
    fn extremal_red_path_is_maximal_wrt_b() {
        // lower_bound_coloring(5,4,3): a red path inside A is maximal wrt W = B
        let col = lower_bound_coloring(5, 4, 3).unwrap();
        let path = LoosePath::new(5, (0..13u32).map(Vertex).collect()).unwrap();
        let w = vec![Vertex(15)]; // the single B vertex
        let ctx = MaximalityContext::new(path, w, Color::Red).unwrap();
        assert!(matches!(
            is_maximal_wrt(&col, &ctx).unwrap(),
            MaximalityOutcome::Maximal
        ));
    }

    #[test]
    fn extend_to_maximal_absorbs_w() {
        // all-red, red P_1, |W| = 20: absorbs 4 per step until fewer than 4 left
        let col = random_coloring(5, 29, 0, 0.0).unwrap();
        let path = LoosePath::new(5, (0..5u32).map(Vertex).collect()).unwrap();
        let w: Vec<Vertex> = (9..29u32).map(Vertex).collect();
        let ctx = MaximalityContext::new(path, w, Color::Red).unwrap();
        let (p, w_left) = extend_to_maximal(&col, &ctx).unwrap();
        assert_eq!(p.len(), 6); // 1 + 20/4
        assert_eq!(w_left.len(), 0);
        let check = MaximalityContext::new(p, w_left, Color::Red).unwrap();
        assert!(matches!(
            is_maximal_wrt(&col, &check).unwrap(),
            MaximalityOutcome::Maximal
        ));
    }

    #[test]
    fn already_maximal_unchanged() {
        let col = lower_bound_coloring(5, 4, 3).unwrap();
        let path = LoosePath::new(5, (0..13u32).map(Vertex).collect()).unwrap();
        let w = vec![Vertex(15)];
        let ctx = MaximalityContext::new(path.clone(), w.clone(), Color::Red).unwrap();
        let (p, wl) = extend_to_maximal(&col, &ctx).unwrap();
        assert_eq!(p, path);
        assert_eq!(wl, w);
    }

    #[test]
    fn sequential_and_parallel_agree() {
        for seed in 0..6u64 {
            let col = random_coloring(5, 14, seed, 0.5).unwrap();
            let seq = find_mono_cycle(&col, Color::Blue, 3, SearchBudget::default());
            let par = find_mono_cycle_jobs(&col, Color::Blue, 3, SearchBudget::default(), 4);
            assert_eq!(seq, par, "seed {seed}");
        }
    }
}
