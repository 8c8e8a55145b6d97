//! Small named monoids used throughout the tests and the CLI.

use crate::error::{Error, Result};
use crate::monoid::FiniteMonoid;
use crate::transformation::{enumerate, Part};

fn strings(v: &[&str]) -> Vec<String> {
    v.iter().map(|s| s.to_string()).collect()
}

/// The trivial monoid `{1}`.
pub fn trivial() -> FiniteMonoid {
    FiniteMonoid::from_fn("1", strings(&["1"]), 0, |_, _| 0).unwrap()
}

/// The cyclic group `Z_k` with elements `1, g, g2, ...`.
pub fn cyclic(k: usize) -> FiniteMonoid {
    assert!(k >= 1);
    let labels = (0..k)
        .map(|p| match p {
            0 => "1".to_string(),
            1 => "g".to_string(),
            _ => format!("g{p}"),
        })
        .collect();
    FiniteMonoid::from_fn(format!("Z{k}"), labels, 0, |a, b| (a + b) % k).unwrap()
}

/// The two-element semilattice `{1, 0}`.
pub fn b01() -> FiniteMonoid {
    FiniteMonoid::from_fn("B01", strings(&["1", "0"]), 0, |a, b| a.max(b)).unwrap()
}

/// The right-zero semigroup `{x, y}` with an identity adjoined: `xy = y`, `yx = x`.
pub fn rz1() -> FiniteMonoid {
    FiniteMonoid::from_fn("RZ1", strings(&["1", "x", "y"]), 0, |a, b| if b == 0 { a } else { b }).unwrap()
}

/// `T_n` as a monoid, elements in lexicographic order of image sequences.
pub fn full_transformation_monoid(n: usize) -> FiniteMonoid {
    let elems = enumerate(n, Part::Full).unwrap();
    FiniteMonoid::from_transformations(format!("T{n}"), &elems).unwrap()
}

/// `{0, ..., k}` under addition capped at `k`; a finite stand-in for `(ℕ, +)`.
pub fn truncated_naturals(k: usize) -> FiniteMonoid {
    let labels = (0..=k).map(|x| x.to_string()).collect();
    FiniteMonoid::from_fn(format!("N{k}"), labels, 0, |a, b| (a + b).min(k)).unwrap()
}

/// Names accepted by [`by_name`].
pub const NAMES: &[&str] = &["@1", "@Z2", "@Z3", "@B01", "@RZ1", "@T2"];

/// Resolves a built-in fixture such as `@Z2`.
pub fn by_name(name: &str) -> Result<FiniteMonoid> {
    match name {
        "@1" | "@trivial" => Ok(trivial()),
        "@B01" => Ok(b01()),
        "@RZ1" => Ok(rz1()),
        "@T2" => Ok(full_transformation_monoid(2)),
        "@T3" => Ok(full_transformation_monoid(3)),
        other => {
            if let Some(k) = other.strip_prefix("@Z").and_then(|k| k.parse::<usize>().ok()) {
                if (1..=64).contains(&k) {
                    return Ok(cyclic(k));
                }
            }
            Err(Error::arg(format!(
                "unknown fixture `{other}` (known: {})",
                NAMES.join(", ")
            )))
        }
    }
}

/// The fixture monoids the acceptance matrix runs over.
pub fn acceptance_monoids() -> Vec<FiniteMonoid> {
    vec![
        trivial(),
        cyclic(2),
        cyclic(3),
        b01(),
        rz1(),
        full_transformation_monoid(2),
    ]
}
