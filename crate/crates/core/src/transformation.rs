//! Transformations of `{1, ..., n}`.
//!
//! Maps act on the right and compose left to right: `i(αβ) = (iα)β`.
//! Every public interface is 1-based; storage is 0-based.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest degree accepted by [`enumerate`] (7^7 = 823543 maps).
pub const MAX_ENUM_DEGREE: usize = 7;

/// Largest degree a [`Transformation`] may have.
pub const MAX_DEGREE: usize = u8::MAX as usize;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Transformation {
    images: Vec<u8>,
}

/// Which part of `T_n` to enumerate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Part {
    Full,
    Singular,
    Symmetric,
}

/// Image, kernel, rank and idempotency of a transformation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TransformationProps {
    pub image: BTreeSet<usize>,
    pub kernel: Vec<Vec<usize>>,
    pub rank: usize,
    pub idempotent: bool,
}

impl Transformation {
    /// Builds a transformation from 1-based images.
    pub fn new(images: &[usize]) -> Result<Self> {
        let n = images.len();
        if n == 0 {
            return Err(Error::arg("transformation must have positive degree"));
        }
        if n > MAX_DEGREE {
            return Err(Error::arg(format!("degree {n} exceeds {MAX_DEGREE}")));
        }
        let mut out = Vec::with_capacity(n);
        for (pos, &img) in images.iter().enumerate() {
            if img == 0 || img > n {
                return Err(Error::arg(format!(
                    "image {img} of point {} is outside 1..={n}",
                    pos + 1
                )));
            }
            out.push((img - 1) as u8);
        }
        Ok(Transformation { images: out })
    }

    pub fn identity(n: usize) -> Self {
        assert!(n > 0 && n <= MAX_DEGREE);
        Transformation {
            images: (0..n as u8).collect(),
        }
    }

    /// Internal constructor from 0-based images; caller guarantees range.
    pub(crate) fn from_zero_based(images: Vec<u8>) -> Self {
        debug_assert!(images.iter().all(|&x| (x as usize) < images.len()));
        Transformation { images }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of the 1-based point `i`.
    pub fn image_of(&self, i: usize) -> usize {
        self.images[i - 1] as usize + 1
    }

    /// 0-based image of the 0-based point `i`.
    #[inline]
    pub(crate) fn at(&self, i: usize) -> usize {
        self.images[i] as usize
    }

    /// 1-based image sequence.
    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x as usize + 1).collect()
    }

    /// Left-to-right composite `self` then `other`.
    pub fn compose(&self, other: &Transformation) -> Result<Transformation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(self.then(other))
    }

    /// Unchecked composite; degrees must agree.
    #[inline]
    pub(crate) fn then(&self, other: &Transformation) -> Transformation {
        debug_assert_eq!(self.degree(), other.degree());
        Transformation {
            images: self.images.iter().map(|&x| other.images[x as usize]).collect(),
        }
    }

    pub fn rank(&self) -> usize {
        let mut seen = [false; MAX_DEGREE + 1];
        let mut r = 0;
        for &x in &self.images {
            if !seen[x as usize] {
                seen[x as usize] = true;
                r += 1;
            }
        }
        r
    }

    pub fn is_permutation(&self) -> bool {
        self.rank() == self.degree()
    }

    /// A transformation is idempotent iff it fixes every point of its image.
    pub fn is_idempotent(&self) -> bool {
        self.images.iter().all(|&x| self.images[x as usize] == x)
    }

    pub fn image_set(&self) -> BTreeSet<usize> {
        self.images.iter().map(|&x| x as usize + 1).collect()
    }

    /// Kernel classes, each sorted, ordered by least element.
    pub fn kernel(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut block_of: Vec<Option<usize>> = vec![None; n];
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        for i in 0..n {
            let img = self.images[i] as usize;
            match block_of[img] {
                Some(b) => blocks[b].push(i + 1),
                None => {
                    block_of[img] = Some(blocks.len());
                    blocks.push(vec![i + 1]);
                }
            }
        }
        blocks
    }

    /// Ordered pairs `(i, j)`, `i != j`, with `iα = jα` (1-based).
    pub fn kernel_pairs(&self) -> Vec<(usize, usize)> {
        let n = self.degree();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if i != j && self.images[i] == self.images[j] {
                    out.push((i + 1, j + 1));
                }
            }
        }
        out
    }

    pub fn props(&self) -> TransformationProps {
        TransformationProps {
            image: self.image_set(),
            kernel: self.kernel(),
            rank: self.rank(),
            idempotent: self.is_idempotent(),
        }
    }
}

impl fmt::Debug for Transformation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Transformation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, x) in self.images.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", *x as usize + 1)?;
        }
        write!(f, "]")
    }
}

impl Serialize for Transformation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.images().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Transformation {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<usize>::deserialize(d)?;
        Transformation::new(&v).map_err(serde::de::Error::custom)
    }
}

/// The rank `n-1` idempotent `ε_ij`: sends `j` to `i` and fixes everything else.
pub fn epsilon(n: usize, i: usize, j: usize) -> Result<Transformation> {
    if n < 2 {
        return Err(Error::arg(format!("ε_ij needs n >= 2, got n = {n}")));
    }
    if i == 0 || j == 0 || i > n || j > n {
        return Err(Error::arg(format!("indices ({i},{j}) outside 1..={n}")));
    }
    if i == j {
        return Err(Error::arg(format!("ε_ij needs i != j, got i = j = {i}")));
    }
    let mut images: Vec<u8> = (0..n as u8).collect();
    images[j - 1] = (i - 1) as u8;
    Ok(Transformation::from_zero_based(images))
}

/// Enumerates `T_n`, `Sing_n` or `S_n` in lexicographic order of image sequences.
pub fn enumerate(n: usize, part: Part) -> Result<Vec<Transformation>> {
    if n == 0 {
        return Err(Error::arg("degree must be positive"));
    }
    if n > MAX_ENUM_DEGREE {
        return Err(Error::capacity(
            "transformation enumeration degree",
            MAX_ENUM_DEGREE as u128,
            n as u128,
        ));
    }
    let total = n.pow(n as u32);
    let mut out = Vec::new();
    let mut digits = vec![0u8; n];
    for _ in 0..total {
        let t = Transformation::from_zero_based(digits.clone());
        let keep = match part {
            Part::Full => true,
            Part::Singular => !t.is_permutation(),
            Part::Symmetric => t.is_permutation(),
        };
        if keep {
            out.push(t);
        }
        // odometer, last position fastest
        for pos in (0..n).rev() {
            digits[pos] += 1;
            if (digits[pos] as usize) < n {
                break;
            }
            digits[pos] = 0;
        }
    }
    Ok(out)
}
