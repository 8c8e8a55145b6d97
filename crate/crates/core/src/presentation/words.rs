//! Substitution words over the `X_2` and `X_1` alphabets.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::monoid::FiniteMonoid;

use super::emit::{x1_letter, x2_letter};
use super::Word;

/// The total order on an L-chain monoid used to pick `Ω` and its witnesses.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChainData {
    /// Elements listed lowest first.
    pub order: Vec<usize>,
    /// `rank[a]` is the position of `a` in `order`.
    pub rank: Vec<usize>,
    /// `witness[a][b]`: least-index `x` with `a = x·b`, when `a ≤_L b`.
    pub witness: Vec<Vec<Option<usize>>>,
}

impl ChainData {
    /// `(a,b) ∈ Ω` iff `a` precedes or equals `b`.
    pub fn in_omega(&self, a: usize, b: usize) -> bool {
        self.rank[a] <= self.rank[b]
    }

    pub fn omega(&self) -> Vec<(usize, usize)> {
        let m = self.rank.len();
        let mut out = Vec::new();
        for a in 0..m {
            for b in 0..m {
                if self.in_omega(a, b) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    fn x(&self, a: usize, b: usize) -> usize {
        self.witness[a][b].expect("chain order places a below b only when a ≤_L b")
    }
}

/// Sorts L-classes lowest first and elements within a class by index;
/// fails naming two incomparable elements when `M/L` is not a chain.
pub fn chain_data(m: &FiniteMonoid) -> Result<ChainData> {
    if let Some((a, b)) = m.l_chain_violation() {
        return Err(Error::Precondition(format!(
            "M/L not a chain for {}: the L-classes of `{}` and `{}` are incomparable",
            m.name(),
            m.label(a),
            m.label(b)
        )));
    }
    let size = m.order();
    // In a chain, the number of elements L-below a orders the classes.
    let below: Vec<usize> = (0..size)
        .map(|a| (0..size).filter(|&b| m.leq_l(b, a)).count())
        .collect();
    let mut order: Vec<usize> = (0..size).collect();
    order.sort_by_key(|&a| (below[a], a));
    let mut rank = vec![0; size];
    for (r, &a) in order.iter().enumerate() {
        rank[a] = r;
    }
    let witness = (0..size)
        .map(|a| (0..size).map(|b| (0..size).find(|&x| m.mul(x, b) == a)).collect())
        .collect();
    Ok(ChainData { order, rank, witness })
}

/// `E_{ij;𝐚}` over the `X_2` alphabet of `M≀Sing_n`.
pub fn word_e_x2(m: &FiniteMonoid, n: usize, i: usize, j: usize, tuple: &[usize]) -> Result<Word> {
    check_indices(n, i, j)?;
    if tuple.len() != n || tuple.iter().any(|&a| a >= m.order()) {
        return Err(Error::arg(format!("tuple {tuple:?} is not in M^{n}")));
    }
    let k = m.order();
    let one = m.identity();
    let mut w = vec![x2_letter(k, n, i, j, tuple[i - 1], tuple[j - 1])];
    let rest: Vec<usize> = (1..=n).filter(|&t| t != i && t != j).collect();
    if rest.iter().any(|&t| tuple[t - 1] != one) {
        for t in rest {
            w.push(x2_letter(k, n, t, j, tuple[t - 1], one));
        }
    }
    Ok(w)
}

/// `E_{ij;ab}` over the `X_1` alphabet.
pub fn word_e_x1(
    m: &FiniteMonoid,
    n: usize,
    i: usize,
    j: usize,
    a: usize,
    b: usize,
    chain: &ChainData,
) -> Result<Word> {
    check_indices(n, i, j)?;
    let k = m.order();
    if a >= k || b >= k {
        return Err(Error::arg("element out of range"));
    }
    let one = m.identity();
    Ok(if chain.in_omega(a, b) {
        vec![x1_letter(k, n, j, i, chain.x(a, b)), x1_letter(k, n, i, j, b)]
    } else {
        vec![
            x1_letter(k, n, i, j, chain.x(b, a)),
            x1_letter(k, n, j, i, a),
            x1_letter(k, n, i, j, one),
        ]
    })
}

fn check_indices(n: usize, i: usize, j: usize) -> Result<()> {
    if n < 2 || i == j || i == 0 || j == 0 || i > n || j > n {
        return Err(Error::arg(format!("need distinct indices in 1..={n}, got ({i},{j})")));
    }
    Ok(())
}
