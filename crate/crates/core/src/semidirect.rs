//! Semidirect products `M ⋊ S` for a finite left action of `S` on `M` by
//! monoid endomorphisms.

use crate::enumerate::FiniteSemigroup;
use crate::error::{Error, Result};
use crate::monoid::FiniteMonoid;

/// A validated action table, `act[s·|M| + a] = s·a`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Action {
    s_order: usize,
    m_order: usize,
    table: Vec<usize>,
}

impl Action {
    /// Tabulates `f` and checks `s·1 = 1`, `s·(ab) = (s·a)(s·b)` and
    /// `(st)·a = s·(t·a)`.
    pub fn new<S: FiniteSemigroup + ?Sized>(
        s: &S,
        m: &FiniteMonoid,
        f: impl Fn(usize, usize) -> usize,
    ) -> Result<Self> {
        let (ns, nm) = (s.size(), m.order());
        let mut table = Vec::with_capacity(ns * nm);
        for x in 0..ns {
            for a in 0..nm {
                let v = f(x, a);
                if v >= nm {
                    return Err(Error::InvalidAction {
                        axiom: "range",
                        witness: format!("s={x}, a={a} ↦ {v}"),
                    });
                }
                table.push(v);
            }
        }
        let act = Action {
            s_order: ns,
            m_order: nm,
            table,
        };
        let one = m.identity();
        for x in 0..ns {
            if act.apply(x, one) != one {
                return Err(Error::InvalidAction {
                    axiom: "s·1 = 1",
                    witness: format!("s={x}"),
                });
            }
        }
        for x in 0..ns {
            for a in 0..nm {
                for b in 0..nm {
                    if act.apply(x, m.mul(a, b)) != m.mul(act.apply(x, a), act.apply(x, b)) {
                        return Err(Error::InvalidAction {
                            axiom: "s·(ab) = (s·a)(s·b)",
                            witness: format!("s={x}, a={}, b={}", m.label(a), m.label(b)),
                        });
                    }
                }
            }
        }
        for x in 0..ns {
            for y in 0..ns {
                let xy = s.product(x, y);
                for a in 0..nm {
                    if act.apply(xy, a) != act.apply(x, act.apply(y, a)) {
                        return Err(Error::InvalidAction {
                            axiom: "(st)·a = s·(t·a)",
                            witness: format!("s={x}, t={y}, a={}", m.label(a)),
                        });
                    }
                }
            }
        }
        Ok(act)
    }

    pub fn apply(&self, s: usize, a: usize) -> usize {
        self.table[s * self.m_order + a]
    }

    pub fn s_order(&self) -> usize {
        self.s_order
    }
}

/// `M ⋊ S` with carrier `M × S`; the pair `(a, s)` has index `s·|M| + a`.
#[derive(Debug, Clone)]
pub struct SemidirectProduct {
    m: FiniteMonoid,
    s_table: Vec<usize>,
    s_order: usize,
    action: Action,
}

impl SemidirectProduct {
    pub fn new<S: FiniteSemigroup + ?Sized>(m: FiniteMonoid, s: &S, action: Action) -> Result<Self> {
        if action.s_order != s.size() || action.m_order != m.order() {
            return Err(Error::arg("action table does not match the factors"));
        }
        Ok(SemidirectProduct {
            s_table: s.cayley_table(),
            s_order: s.size(),
            m,
            action,
        })
    }

    pub fn monoid(&self) -> &FiniteMonoid {
        &self.m
    }

    pub fn action(&self) -> &Action {
        &self.action
    }

    pub fn index(&self, a: usize, s: usize) -> usize {
        s * self.m.order() + a
    }

    pub fn pair(&self, x: usize) -> (usize, usize) {
        (x % self.m.order(), x / self.m.order())
    }

    /// `(a,s)(b,t) = (a(s·b), st)`.
    pub fn multiply(&self, x: (usize, usize), y: (usize, usize)) -> (usize, usize) {
        let (a, s) = x;
        let (b, t) = y;
        (
            self.m.mul(a, self.action.apply(s, b)),
            self.s_table[s * self.s_order + t],
        )
    }
}

impl FiniteSemigroup for SemidirectProduct {
    fn size(&self) -> usize {
        self.m.order() * self.s_order
    }

    fn product(&self, x: usize, y: usize) -> usize {
        let (a, s) = self.multiply(self.pair(x), self.pair(y));
        self.index(a, s)
    }
}

/// Multiplication table of a semigroup with one element.
pub struct Singleton;

impl FiniteSemigroup for Singleton {
    fn size(&self) -> usize {
        1
    }
    fn product(&self, _: usize, _: usize) -> usize {
        0
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::close;
    use crate::fixtures;
    use crate::transformation::{enumerate, Part, Transformation};
    use crate::wreath::{WreathContext, WreathElement};
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    #[test]
    fn trivial_action_is_direct() {
        let m = fixtures::cyclic(3);
        let s = fixtures::b01();
        let act = Action::new(&s, &m, |_, a| a).unwrap();
        let p = SemidirectProduct::new(m.clone(), &s, act).unwrap();
        for x in 0..p.size() {
            for y in 0..p.size() {
                let ((a, s1), (b, t)) = (p.pair(x), p.pair(y));
                assert_eq!(p.multiply((a, s1), (b, t)), (m.mul(a, b), s1.max(t)));
            }
        }
    }

    #[test]
    fn collapsing_action_on_a_truncated_plane() {
        let k = 4;
        let n = fixtures::truncated_naturals(k);
        let plane = n.direct_power(2).unwrap();
        let enc = |a: usize, b: usize| a * (k + 1) + b;
        let dec = |x: usize| (x / (k + 1), x % (k + 1));
        let act = Action::new(&Singleton, &plane, |_, x| {
            let (a, _) = dec(x);
            enc(a, a)
        })
        .unwrap();
        let p = SemidirectProduct::new(plane, &Singleton, act).unwrap();
        for x in 0..p.size() {
            for y in 0..p.size() {
                let ((a, b), (c, _)) = (dec(x), dec(y));
                let (prod, _) = p.multiply((x, 0), (y, 0));
                assert_eq!(dec(prod), ((a + c).min(k), (b + c).min(k)));
            }
        }
    }

    #[test]
    fn bad_actions_are_named() {
        let m = fixtures::cyclic(2);
        let err = Action::new(&Singleton, &m, |_, _| 1).unwrap_err();
        assert!(matches!(err, Error::InvalidAction { axiom: "s·1 = 1", .. }));
        let b = fixtures::b01();
        let m3 = fixtures::cyclic(3);
        // 0 acting by inversion would need inversion to be idempotent
        let err = Action::new(&b, &m3, |s, a| if s == 1 { (3 - a) % 3 } else { a }).unwrap_err();
        assert!(matches!(
            err,
            Error::InvalidAction {
                axiom: "(st)·a = s·(t·a)",
                ..
            }
        ));
        let err = Action::new(&Singleton, &m3, |_, a| if a == 0 { 0 } else { 1 }).unwrap_err();
        assert!(matches!(
            err,
            Error::InvalidAction {
                axiom: "s·(ab) = (s·a)(s·b)",
                ..
            }
        ));
    }

    #[test]
    fn coordinate_shuffle_reproduces_wreath_multiplication() {
        let base = fixtures::full_transformation_monoid(2);
        let n = 3;
        let power = base.direct_power(n).unwrap();
        let m = base.order();
        let encode = |t: &[usize]| t.iter().fold(0, |acc, &d| acc * m + d);
        let decode = |mut x: usize| {
            let mut t = vec![0; n];
            for slot in t.iter_mut().rev() {
                *slot = x % m;
                x /= m;
            }
            t
        };
        let gens = enumerate(n, Part::Full).unwrap();
        let tn = close(&gens, |a: &Transformation, b| a.compose(b).unwrap(), 1000).unwrap();
        let act = Action::new(&tn, &power, |s, x| {
            let alpha = tn.element(s);
            let a = decode(x);
            let shuffled: Vec<usize> = (1..=n).map(|i| a[alpha.image_of(i) - 1]).collect();
            encode(&shuffled)
        })
        .unwrap();
        let p = SemidirectProduct::new(power, &tn, act).unwrap();
        let ctx = WreathContext::full(base, n).unwrap();
        let mut rng = StdRng::seed_from_u64(7);
        for _ in 0..100 {
            let x = (rng.random_range(0..m.pow(n as u32)), rng.random_range(0..tn.len()));
            let y = (rng.random_range(0..m.pow(n as u32)), rng.random_range(0..tn.len()));
            let (c, u) = p.multiply(x, y);
            let wx = WreathElement::new(decode(x.0), tn.element(x.1).clone());
            let wy = WreathElement::new(decode(y.0), tn.element(y.1).clone());
            let w = ctx.multiply(&wx, &wy).unwrap();
            assert_eq!(w.tuple, decode(c));
            assert_eq!(&w.trans, tn.element(u));
        }
    }
}
