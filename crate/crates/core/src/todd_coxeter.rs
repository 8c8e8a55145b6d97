//! Congruence enumeration for finite presentations.
//!
//! Node 0 stands for the empty word. Every live node has every relation
//! traced from it in creation order; missing edges are defined on the fly
//! and a disagreement at the end of a trace is a coincidence, merged
//! through a union-find forest before the scan continues. A semigroup
//! presentation never relates anything to the empty word, so node 0 stays
//! a class of its own and is left out of the count.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::presentation::{Kind, Presentation};

const UNDEF: u32 = u32::MAX;

pub const DEFAULT_NODE_LIMIT: usize = 2_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TcStatus {
    Certified,
    BoundExceeded,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TcResult {
    pub status: TcStatus,
    pub class_count: Option<usize>,
    pub nodes_allocated: usize,
    pub coincidences_processed: usize,
}

struct Table {
    k: usize,
    next: Vec<u32>,
    forward: Vec<u32>,
    limit: usize,
    coincidences: usize,
    queue: Vec<(u32, u32)>,
}

struct Exceeded;

impl Table {
    fn new(k: usize, limit: usize) -> Self {
        Table {
            k,
            next: vec![UNDEF; k],
            forward: vec![0],
            limit,
            coincidences: 0,
            queue: Vec::new(),
        }
    }

    fn len(&self) -> usize {
        self.forward.len()
    }

    fn find(&mut self, mut x: u32) -> u32 {
        let mut root = x;
        while self.forward[root as usize] != root {
            root = self.forward[root as usize];
        }
        while self.forward[x as usize] != root {
            let up = self.forward[x as usize];
            self.forward[x as usize] = root;
            x = up;
        }
        root
    }

    fn alive(&self, x: u32) -> bool {
        self.forward[x as usize] == x
    }

    fn get(&mut self, x: u32, a: usize) -> u32 {
        let y = self.next[x as usize * self.k + a];
        if y == UNDEF {
            UNDEF
        } else {
            self.find(y)
        }
    }

    fn new_node(&mut self) -> std::result::Result<u32, Exceeded> {
        if self.len() >= self.limit {
            return Err(Exceeded);
        }
        let id = self.len() as u32;
        self.forward.push(id);
        self.next.extend(std::iter::repeat_n(UNDEF, self.k));
        Ok(id)
    }

    fn follow_or_define(&mut self, x: u32, a: usize) -> std::result::Result<u32, Exceeded> {
        let y = self.get(x, a);
        if y != UNDEF {
            return Ok(y);
        }
        let y = self.new_node()?;
        self.next[x as usize * self.k + a] = y;
        Ok(y)
    }

    fn coincidence(&mut self, a: u32, b: u32) {
        self.queue.push((a, b));
        while let Some((a, b)) = self.queue.pop() {
            let (a, b) = (self.find(a), self.find(b));
            if a == b {
                continue;
            }
            let (keep, kill) = (a.min(b), a.max(b));
            self.forward[kill as usize] = keep;
            self.coincidences += 1;
            for c in 0..self.k {
                let t = self.next[kill as usize * self.k + c];
                if t == UNDEF {
                    continue;
                }
                let t = self.find(t);
                let keep = self.find(keep);
                let u = self.get(keep, c);
                if u == UNDEF {
                    self.next[keep as usize * self.k + c] = t;
                } else if u != t {
                    self.queue.push((u, t));
                }
            }
        }
    }

    /// Traces `u = v` from `c`, defining nodes along `u` and all but the
    /// last letter of `v`.
    fn trace(&mut self, c: u32, u: &[usize], v: &[usize]) -> std::result::Result<(), Exceeded> {
        let mut x = c;
        for &a in u {
            x = self.follow_or_define(x, a)?;
        }
        match v.split_last() {
            None => self.coincidence(c, x),
            Some((&last, init)) => {
                let mut y = self.find(c);
                for &a in init {
                    y = self.follow_or_define(y, a)?;
                }
                let x = self.find(x);
                let z = self.get(y, last);
                if z == UNDEF {
                    self.next[y as usize * self.k + last] = x;
                } else if z != x {
                    self.coincidence(z, x);
                }
            }
        }
        Ok(())
    }

    fn live(&self) -> impl Iterator<Item = u32> + '_ {
        (0..self.len() as u32).filter(|&x| self.alive(x))
    }
}

/// Enumerates the classes of the free semigroup or monoid on the alphabet
/// modulo the congruence generated by the relations.
pub fn todd_coxeter(p: &Presentation, node_limit: usize) -> Result<TcResult> {
    p.validate()?;
    let k = p.letters.len();
    let mut t = Table::new(k, node_limit.max(1));
    let rels: Vec<(&[usize], &[usize])> = p
        .relations
        .iter()
        .map(|r| (r.lhs.as_slice(), r.rhs.as_slice()))
        .collect();

    let outcome = (|| -> std::result::Result<(), Exceeded> {
        let mut c: u32 = 0;
        while (c as usize) < t.len() {
            for &(u, v) in &rels {
                if !t.alive(c) {
                    break;
                }
                t.trace(c, u, v)?;
            }
            if t.alive(c) {
                for a in 0..k {
                    if !t.alive(c) {
                        break;
                    }
                    t.follow_or_define(c, a)?;
                }
            }
            c += 1;
        }
        Ok(())
    })();

    let nodes_allocated = t.len();
    if outcome.is_err() {
        return Ok(TcResult {
            status: TcStatus::BoundExceeded,
            class_count: None,
            nodes_allocated,
            coincidences_processed: t.coincidences,
        });
    }
    if !closed(&mut t, &rels) {
        return Err(Error::MalformedTable("enumeration finished with an open table".into()));
    }
    let live = t.live().count();
    let class_count = match p.kind {
        Kind::Monoid => live,
        Kind::Semigroup => live - 1,
    };
    Ok(TcResult {
        status: TcStatus::Certified,
        class_count: Some(class_count),
        nodes_allocated,
        coincidences_processed: t.coincidences,
    })
}

/// Complete table with every relation holding at every live node.
fn closed(t: &mut Table, rels: &[(&[usize], &[usize])]) -> bool {
    let live: Vec<u32> = t.live().collect();
    for &c in &live {
        for a in 0..t.k {
            if t.get(c, a) == UNDEF {
                return false;
            }
        }
        for &(u, v) in rels {
            let mut x = c;
            for &a in u {
                x = t.get(x, a);
            }
            let mut y = c;
            for &a in v {
                y = t.get(y, a);
            }
            if x != y {
                return false;
            }
        }
    }
    true
}
