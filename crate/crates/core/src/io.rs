//! Text formats: monoid tables, wreath elements, presentations, edge lists
//! and transformation lists.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::monoid::FiniteMonoid;
use crate::presentation::Presentation;
use crate::transformation::Transformation;
use crate::wreath::{WreathContext, WreathElement, WreathPart};

/// Largest monoid accepted from a file; validation is cubic in the order.
pub const MAX_MONOID_ORDER: usize = 256;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MonoidFile {
    pub name: String,
    pub elements: Vec<String>,
    pub identity: usize,
    pub table: Vec<Vec<usize>>,
}

impl MonoidFile {
    pub fn from_monoid(m: &FiniteMonoid) -> Self {
        MonoidFile {
            name: m.name().to_string(),
            elements: m.labels().to_vec(),
            identity: m.identity(),
            table: m.rows(),
        }
    }

    pub fn into_monoid(self) -> Result<FiniteMonoid> {
        if self.elements.len() > MAX_MONOID_ORDER {
            return Err(Error::capacity(
                "monoid order",
                MAX_MONOID_ORDER as u128,
                self.elements.len() as u128,
            ));
        }
        FiniteMonoid::new(self.name, self.elements, self.identity, self.table)
    }
}

fn json_error(e: serde_json::Error) -> Error {
    Error::Parse(e.to_string())
}

pub fn parse_monoid(text: &str) -> Result<FiniteMonoid> {
    let file: MonoidFile = serde_json::from_str(text).map_err(json_error)?;
    file.into_monoid()
}

pub fn monoid_to_json(m: &FiniteMonoid) -> String {
    serde_json::to_string_pretty(&MonoidFile::from_monoid(m)).expect("monoid files serialize")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WreathElementFile {
    pub tuple: Vec<String>,
    pub trans: Vec<usize>,
}

impl WreathElementFile {
    pub fn from_element(ctx: &WreathContext, x: &WreathElement) -> Self {
        WreathElementFile {
            tuple: x.tuple.iter().map(|&a| ctx.base().label(a).to_string()).collect(),
            trans: x.trans.images(),
        }
    }

    pub fn into_element(self, ctx: &WreathContext) -> Result<WreathElement> {
        let m = ctx.base();
        let tuple = self
            .tuple
            .iter()
            .map(|l| {
                m.position(l)
                    .ok_or_else(|| Error::Parse(format!("`{l}` is not an element of {}", m.name())))
            })
            .collect::<Result<Vec<_>>>()?;
        let x = WreathElement::new(tuple, Transformation::new(&self.trans)?);
        ctx.check(&x)?;
        if *ctx.part() == WreathPart::Singular && x.trans.is_permutation() {
            return Err(Error::Domain(format!("{} is not singular", x.trans)));
        }
        Ok(x)
    }
}

pub fn parse_wreath_element(ctx: &WreathContext, text: &str) -> Result<WreathElement> {
    let file: WreathElementFile = serde_json::from_str(text).map_err(json_error)?;
    file.into_element(ctx)
}

pub fn wreath_element_to_json(ctx: &WreathContext, x: &WreathElement) -> String {
    serde_json::to_string(&WreathElementFile::from_element(ctx, x)).expect("elements serialize")
}

/// Reads and validates a presentation file.
pub fn parse_presentation(text: &str) -> Result<Presentation> {
    let p: Presentation = serde_json::from_str(text).map_err(json_error)?;
    p.validate()?;
    Ok(p)
}

pub fn presentation_to_json(p: &Presentation) -> String {
    serde_json::to_string_pretty(p).expect("presentations serialize")
}

/// Edges as `i->j` separated by commas or whitespace, or a JSON list of
/// pairs.
pub fn parse_edges(text: &str) -> Result<Vec<(usize, usize)>> {
    let text = text.trim();
    if text.starts_with('[') {
        let pairs: Vec<(usize, usize)> = serde_json::from_str(text).map_err(json_error)?;
        return Ok(pairs);
    }
    text.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .map(|edge| {
            let (a, b) = edge
                .split_once("->")
                .ok_or_else(|| Error::Parse(format!("edge `{edge}` is not of the form i->j")))?;
            let num = |s: &str| {
                s.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("`{s}` in edge `{edge}` is not an index")))
            };
            Ok((num(a)?, num(b)?))
        })
        .collect()
}

/// Transformations as a JSON list of image lists, or image lists separated
/// by `;` with images separated by commas.
pub fn parse_transformations(text: &str) -> Result<Vec<Transformation>> {
    let text = text.trim();
    let lists: Vec<Vec<usize>> = if text.starts_with('[') {
        serde_json::from_str(text).map_err(json_error)?
    } else {
        text.split(';')
            .filter(|s| !s.trim().is_empty())
            .map(|t| {
                t.split(',')
                    .map(|x| {
                        x.trim()
                            .parse::<usize>()
                            .map_err(|_| Error::Parse(format!("`{x}` is not an image")))
                    })
                    .collect()
            })
            .collect::<Result<_>>()?
    };
    if lists.is_empty() {
        return Err(Error::Parse("no transformations given".into()));
    }
    lists.iter().map(|l| Transformation::new(l)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::presentation::emit_r;

    #[test]
    fn monoid_round_trip() {
        for m in fixtures::acceptance_monoids() {
            let back = parse_monoid(&monoid_to_json(&m)).unwrap();
            assert_eq!(back.rows(), m.rows());
            assert_eq!(back.labels(), m.labels());
        }
    }

    #[test]
    fn monoid_files_are_strict() {
        let ok = r#"{"name":"Z2","elements":["1","g"],"identity":0,"table":[[0,1],[1,0]]}"#;
        assert!(parse_monoid(ok).is_ok());
        let extra = r#"{"name":"Z2","elements":["1","g"],"identity":0,"table":[[0,1],[1,0]],"x":1}"#;
        assert!(matches!(parse_monoid(extra), Err(Error::Parse(_))));
        let bad_id = r#"{"name":"Z2","elements":["1","g"],"identity":1,"table":[[0,1],[1,0]]}"#;
        assert!(matches!(parse_monoid(bad_id), Err(Error::NotIdentity { .. })));
        let ragged = r#"{"name":"Z2","elements":["1","g"],"identity":0,"table":[[0,1],[1]]}"#;
        assert!(matches!(parse_monoid(ragged), Err(Error::MalformedTable(_))));
    }

    #[test]
    fn wreath_element_round_trip() {
        let ctx = WreathContext::singular(fixtures::cyclic(2), 3).unwrap();
        let x = ctx.eps_ab(1, 2, 1, 0).unwrap();
        let s = wreath_element_to_json(&ctx, &x);
        assert_eq!(s, r#"{"tuple":["g","1","1"],"trans":[1,1,3]}"#);
        assert_eq!(parse_wreath_element(&ctx, &s).unwrap(), x);
        assert!(parse_wreath_element(&ctx, r#"{"tuple":["h","1","1"],"trans":[1,1,3]}"#).is_err());
        assert!(parse_wreath_element(&ctx, r#"{"tuple":["g","1","1"],"trans":[1,2,3]}"#).is_err());
    }

    #[test]
    fn presentation_round_trip() {
        let p = emit_r(3).unwrap();
        assert_eq!(parse_presentation(&presentation_to_json(&p)).unwrap(), p);
        let mut bad = p.clone();
        bad.relations[0].lhs.push(99);
        assert!(parse_presentation(&presentation_to_json(&bad)).is_err());
    }

    #[test]
    fn edges_and_transformations() {
        assert_eq!(parse_edges("1->2, 2->3 3->1").unwrap(), vec![(1, 2), (2, 3), (3, 1)]);
        assert_eq!(parse_edges("[[1,2],[2,1]]").unwrap(), vec![(1, 2), (2, 1)]);
        assert!(parse_edges("1-2").is_err());
        let ts = parse_transformations("1,1,3; 2,2,3").unwrap();
        assert_eq!(ts[0].to_string(), "[1,1,3]");
        assert_eq!(parse_transformations("[[2,2]]").unwrap()[0].to_string(), "[2,2]");
        assert!(parse_transformations("1,4").is_err());
        assert!(parse_transformations("").is_err());
    }
}
