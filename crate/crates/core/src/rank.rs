//! Generating-set criteria and (idempotent) ranks.

use std::collections::{BTreeSet, VecDeque};

use itertools::Itertools;
use serde::Serialize;

use crate::enumerate::{closure_size, FiniteSemigroup};
use crate::error::{Error, Result};
use crate::monoid::FiniteMonoid;

/// Default cap on candidate subsets examined by [`brute_rank`].
pub const DEFAULT_SUBSET_BUDGET: u64 = 10_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TournamentVerdict {
    pub generates: bool,
    pub strongly_connected: bool,
    pub complete: bool,
}

fn reachable(n: usize, adj: &[Vec<usize>]) -> usize {
    let mut seen = vec![false; n];
    let mut queue = VecDeque::from([0]);
    seen[0] = true;
    let mut count = 1;
    while let Some(v) = queue.pop_front() {
        for &w in &adj[v] {
            if !seen[w] {
                seen[w] = true;
                count += 1;
                queue.push_back(w);
            }
        }
    }
    count
}

/// Graph criterion for `⟨F⟩ = Sing_n`, with `F` given as edges `(i,j)` for `ε_ij`.
pub fn tournament_check(n: usize, edges: &[(usize, usize)]) -> Result<TournamentVerdict> {
    if n < 3 {
        return Err(Error::Domain(format!("the graph criterion needs n ≥ 3, got n = {n}")));
    }
    let mut fwd = vec![Vec::new(); n];
    let mut back = vec![Vec::new(); n];
    let mut pairs = BTreeSet::new();
    for &(i, j) in edges {
        if i == 0 || j == 0 || i > n || j > n {
            return Err(Error::arg(format!("edge ({i},{j}) leaves {{1..{n}}}")));
        }
        if i == j {
            return Err(Error::arg(format!("loop at vertex {i}")));
        }
        fwd[i - 1].push(j - 1);
        back[j - 1].push(i - 1);
        pairs.insert((i.min(j), i.max(j)));
    }
    let strongly_connected = reachable(n, &fwd) == n && reachable(n, &back) == n;
    let complete = pairs.len() == n * (n - 1) / 2;
    Ok(TournamentVerdict {
        generates: strongly_connected && complete,
        strongly_connected,
        complete,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RankSearch {
    /// Least generating subset size, if one of size at most `k_max` exists.
    pub k: Option<usize>,
    pub witness: Vec<usize>,
    pub searched: u64,
}

#[derive(Debug, Clone, Copy)]
pub struct RankOptions {
    pub idempotents_only: bool,
    pub k_max: usize,
    pub budget: u64,
    /// Sizes below this are skipped; must be a valid lower bound.
    pub start_at: usize,
}

impl Default for RankOptions {
    fn default() -> Self {
        RankOptions {
            idempotents_only: false,
            k_max: usize::MAX,
            budget: DEFAULT_SUBSET_BUDGET,
            start_at: 1,
        }
    }
}

/// Smallest generating subset of `pool`, searched by increasing size and
/// lexicographically within a size.
pub fn brute_rank<S: FiniteSemigroup + ?Sized>(target: &S, pool: &[usize], opts: RankOptions) -> Result<RankSearch> {
    let size = target.size();
    if let Some(&bad) = pool.iter().find(|&&p| p >= size) {
        return Err(Error::arg(format!("pool element {bad} is not in the target")));
    }
    let table = target.cayley_table();
    let mut pool: Vec<usize> = pool.iter().copied().collect::<BTreeSet<_>>().into_iter().collect();
    if opts.idempotents_only {
        pool.retain(|&p| table[p * size + p] == p);
    }
    let mut searched = 0u64;
    let top = opts.k_max.min(pool.len());
    for k in opts.start_at.max(1)..=top {
        for combo in pool.iter().copied().combinations(k) {
            searched += 1;
            if searched > opts.budget {
                return Err(Error::capacity(
                    "subset search candidates",
                    opts.budget as u128,
                    searched as u128 - 1,
                ));
            }
            if closure_size(&table, size, &combo, size) == size {
                return Ok(RankSearch {
                    k: Some(k),
                    witness: combo,
                    searched,
                });
            }
        }
    }
    Ok(RankSearch {
        k: None,
        witness: Vec::new(),
        searched,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RankFormulas {
    pub lower: u128,
    pub upper: u128,
    pub exact_rank: Option<u128>,
    pub exact_idrank: Option<u128>,
    /// Which statement produced the exact values, if any.
    pub case: String,
}

fn choose2(n: usize) -> u128 {
    (n as u128) * (n as u128 - 1) / 2
}

/// Bounds and, for groups and `L`-chain monoids, exact values of
/// `rank(M≀Sing_n)` and `idrank(M≀Sing_n)`.
pub fn rank_formulas(m: &FiniteMonoid, n: usize) -> Result<RankFormulas> {
    if n < 2 {
        return Err(Error::Domain("rank of M≀Sing_n needs n ≥ 2".into()));
    }
    let mo = m.order() as u128;
    let g = m.units().len() as u128;
    let c = choose2(n);
    let lower = (2 * mo - g) * c;
    let upper = if n == 2 { mo * mo + 1 } else { mo * mo * c };
    let (exact_rank, exact_idrank, case) = if m.is_l_chain() {
        let rank = if n == 2 && mo == 1 { 2 } else { lower };
        let idrank = if n == 2 && g == 1 { 2 * mo } else { lower };
        let case = if m.is_group() { "group" } else { "l-chain" };
        (Some(rank), Some(idrank), case.to_string())
    } else {
        (None, None, "bounds".to_string())
    };
    Ok(RankFormulas {
        lower,
        upper,
        exact_rank,
        exact_idrank,
        case,
    })
}

/// Whether `Ω·M = M×M` under the right diagonal action `(a,b)·c = (ac,bc)`.
pub fn diagonal_action_generated(m: &FiniteMonoid, omega: &[(usize, usize)]) -> Result<bool> {
    let k = m.order();
    if let Some(&(a, b)) = omega.iter().find(|&&(a, b)| a >= k || b >= k) {
        return Err(Error::arg(format!("pair ({a},{b}) is not in M×M")));
    }
    let orbit: BTreeSet<(usize, usize)> = omega
        .iter()
        .flat_map(|&(a, b)| (0..k).map(move |c| (a, b, c)))
        .map(|(a, b, c)| (m.mul(a, c), m.mul(b, c)))
        .collect();
    Ok(orbit.len() == k * k)
}
