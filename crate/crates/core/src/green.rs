//! Green's preorders and relations on a finite semigroup.
//!
//! Ideals are taken in `S¹`, so every preorder is reflexive whether or not
//! `S` has an identity.

use serde::Serialize;

use crate::enumerate::FiniteSemigroup;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GreenData {
    /// `leq_l[a][b]` iff `a ∈ S¹b`.
    pub leq_l: Vec<Vec<bool>>,
    /// `leq_r[a][b]` iff `a ∈ bS¹`.
    pub leq_r: Vec<Vec<bool>>,
    /// `leq_j[a][b]` iff `a ∈ S¹bS¹`.
    pub leq_j: Vec<Vec<bool>>,
    pub classes_l: Vec<Vec<usize>>,
    pub classes_r: Vec<Vec<usize>>,
    pub classes_h: Vec<Vec<usize>>,
    pub classes_d: Vec<Vec<usize>>,
    pub classes_j: Vec<Vec<usize>>,
}

impl GreenData {
    fn class_index(classes: &[Vec<usize>], size: usize) -> Vec<usize> {
        let mut idx = vec![0; size];
        for (c, members) in classes.iter().enumerate() {
            for &a in members {
                idx[a] = c;
            }
        }
        idx
    }

    pub fn l_related(&self, a: usize, b: usize) -> bool {
        self.leq_l[a][b] && self.leq_l[b][a]
    }

    pub fn r_related(&self, a: usize, b: usize) -> bool {
        self.leq_r[a][b] && self.leq_r[b][a]
    }

    pub fn j_related(&self, a: usize, b: usize) -> bool {
        self.leq_j[a][b] && self.leq_j[b][a]
    }

    pub fn d_related(&self, a: usize, b: usize) -> bool {
        let idx = Self::class_index(&self.classes_d, self.leq_l.len());
        idx[a] == idx[b]
    }
}

/// Two-sided identity of `s`, if it has one.
pub fn find_identity<S: FiniteSemigroup + ?Sized>(s: &S) -> Option<usize> {
    let m = s.size();
    (0..m).find(|&e| (0..m).all(|k| s.product(e, k) == k && s.product(k, e) == k))
}

/// Partition of `0..m` into classes of the equivalence `related`,
/// ordered by least element.
fn partition(m: usize, related: impl Fn(usize, usize) -> bool) -> Vec<Vec<usize>> {
    let mut class_of = vec![usize::MAX; m];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for a in 0..m {
        if class_of[a] != usize::MAX {
            continue;
        }
        let c = classes.len();
        let mut members = Vec::new();
        for (b, slot) in class_of.iter_mut().enumerate().skip(a) {
            if *slot == usize::MAX && related(a, b) {
                *slot = c;
                members.push(b);
            }
        }
        classes.push(members);
    }
    classes
}

pub fn green<S: FiniteSemigroup + ?Sized>(s: &S) -> GreenData {
    let m = s.size();
    let table = s.cayley_table();
    let mul = |a: usize, b: usize| table[a * m + b];

    let mut leq_l = vec![vec![false; m]; m];
    let mut leq_r = vec![vec![false; m]; m];
    let mut leq_j = vec![vec![false; m]; m];
    for b in 0..m {
        leq_l[b][b] = true;
        leq_r[b][b] = true;
        leq_j[b][b] = true;
        for x in 0..m {
            let xb = mul(x, b);
            let bx = mul(b, x);
            leq_l[xb][b] = true;
            leq_r[bx][b] = true;
            leq_j[xb][b] = true;
            leq_j[bx][b] = true;
            for y in 0..m {
                leq_j[mul(xb, y)][b] = true;
            }
        }
    }

    let classes_l = partition(m, |a, b| leq_l[a][b] && leq_l[b][a]);
    let classes_r = partition(m, |a, b| leq_r[a][b] && leq_r[b][a]);
    let classes_j = partition(m, |a, b| leq_j[a][b] && leq_j[b][a]);
    let classes_h = partition(m, |a, b| leq_l[a][b] && leq_l[b][a] && leq_r[a][b] && leq_r[b][a]);

    // D is the join of R and L: merge along both partitions.
    let mut parent: Vec<usize> = (0..m).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for class in classes_l.iter().chain(classes_r.iter()) {
        for w in class.windows(2) {
            let (a, b) = (find(&mut parent, w[0]), find(&mut parent, w[1]));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let roots: Vec<usize> = (0..m).map(|a| find(&mut parent, a)).collect();
    let classes_d = partition(m, |a, b| roots[a] == roots[b]);

    GreenData {
        leq_l,
        leq_r,
        leq_j,
        classes_l,
        classes_r,
        classes_h,
        classes_d,
        classes_j,
    }
}
