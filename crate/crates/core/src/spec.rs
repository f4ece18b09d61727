//! Textual ring recipes: `zmod(6)`, `matrix(zmod(2),2)`,
//! `quotient(zmod(12),[4])`, `product(zmod(2),zmod(3))`, `tables(path)`.
//!
//! The grammar is documented in `docs/grammar.md`.

use std::fmt;
use std::path::PathBuf;
use std::sync::Arc;

use thiserror::Error;

use crate::construct::{self, ConstructError};
use crate::ideal::Ideal;
use crate::ring::FiniteRing;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RingSpec {
    Zmod(usize),
    Matrix(Box<RingSpec>, usize),
    Quotient(Box<RingSpec>, Vec<usize>),
    Product(Vec<RingSpec>),
    /// `Z_n[x]/(x^d + c_{d-1}x^{d-1} + … + c_0)`, coefficients low to high.
    Poly(usize, Vec<usize>),
    /// Upper triangular `k×k` matrices.
    Triangular(Box<RingSpec>, usize),
    /// `Z_n` with zero multiplication.
    Null(usize),
    TablesFile(PathBuf),
    TablesInline(Vec<usize>),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpecError {
    #[error("parse error at offset {offset}: {message}")]
    Parse { offset: usize, message: String },
    #[error(transparent)]
    Bounds(ConstructError),
    #[error("construction failed: {0}")]
    Construct(String),
}

impl From<ConstructError> for SpecError {
    fn from(e: ConstructError) -> Self {
        match e {
            ConstructError::TooLarge { .. } => SpecError::Bounds(e),
            ConstructError::Invalid(m) => SpecError::Construct(m),
        }
    }
}

impl RingSpec {
    pub fn parse(text: &str) -> Result<RingSpec, SpecError> {
        let mut p = Parser { src: text, pos: 0 };
        let spec = p.spec()?;
        p.skip_ws();
        if p.pos != text.len() {
            return Err(p.error("trailing input"));
        }
        Ok(spec)
    }

    /// Order of the ring this recipe builds, computed without building it.
    /// `None` when the order depends on file contents or quotient generators.
    pub fn predicted_order(&self) -> Option<u128> {
        match self {
            RingSpec::Zmod(n) | RingSpec::Null(n) => Some(*n as u128),
            RingSpec::Matrix(s, k) => s.predicted_order()?.checked_pow((k * k) as u32),
            RingSpec::Triangular(s, k) => {
                s.predicted_order()?.checked_pow((k * (k + 1) / 2) as u32)
            }
            RingSpec::Product(parts) => parts
                .iter()
                .try_fold(1u128, |acc, p| acc.checked_mul(p.predicted_order()?)),
            RingSpec::Poly(n, c) => (*n as u128).checked_pow(c.len() as u32),
            RingSpec::Quotient(..) | RingSpec::TablesFile(_) | RingSpec::TablesInline(_) => None,
        }
    }

    pub fn build(&self) -> Result<Arc<FiniteRing>, SpecError> {
        self.build_with_limit(crate::ring::MAX_ORDER)
    }

    /// Builds the ring, refusing any intermediate ring above `limit`
    /// elements before allocating its tables.
    pub fn build_with_limit(&self, limit: usize) -> Result<Arc<FiniteRing>, SpecError> {
        let ring = self.build_inner(limit)?;
        let ring = Arc::try_unwrap(ring).unwrap_or_else(|r| (*r).clone());
        Ok(Arc::new(ring.with_provenance(self.to_string())))
    }

    fn build_inner(&self, limit: usize) -> Result<Arc<FiniteRing>, SpecError> {
        let bound = |what: &str, order: u128| -> Result<(), SpecError> {
            if order > limit as u128 {
                return Err(SpecError::Bounds(ConstructError::TooLarge {
                    what: what.to_string(),
                    order,
                    limit,
                }));
            }
            Ok(())
        };
        if let Some(order) = self.predicted_order() {
            bound(&self.to_string(), order)?;
        }
        Ok(match self {
            RingSpec::Zmod(n) => Arc::new(construct::zmod(*n)?),
            RingSpec::Null(n) => Arc::new(construct::null_ring(*n)?),
            RingSpec::Poly(n, c) => Arc::new(construct::monic_quotient(*n, c)?),
            RingSpec::Matrix(s, k) => {
                let base = s.build_inner(limit)?;
                bound(
                    &self.to_string(),
                    (base.order() as u128).pow((k * k) as u32),
                )?;
                construct::matrix_ring_limited(&base, *k, limit)?
                    .ring()
                    .clone()
            }
            RingSpec::Triangular(s, k) => {
                let base = s.build_inner(limit)?;
                Arc::new(construct::upper_triangular(&base, *k)?)
            }
            RingSpec::Product(parts) => {
                let factors = parts
                    .iter()
                    .map(|p| p.build_inner(limit))
                    .collect::<Result<Vec<_>, _>>()?;
                construct::direct_product_limited(&factors, limit)?
                    .ring()
                    .clone()
            }
            RingSpec::Quotient(s, gens) => {
                let parent = s.build_inner(limit)?;
                let ideal = Ideal::generated(&parent, gens.iter().copied())
                    .map_err(|e| SpecError::Construct(e.to_string()))?;
                construct::quotient(&parent, &ideal).ring().clone()
            }
            RingSpec::TablesFile(path) => {
                let text = std::fs::read_to_string(path).map_err(|e| {
                    SpecError::Construct(format!("cannot read {}: {e}", path.display()))
                })?;
                let nums = parse_table_numbers(&text)?;
                Arc::new(ring_from_numbers(&nums, limit)?)
            }
            RingSpec::TablesInline(nums) => Arc::new(ring_from_numbers(nums, limit)?),
        })
    }
}

/// Integers of a table file; `#` starts a comment running to end of line.
pub fn parse_table_numbers(text: &str) -> Result<Vec<usize>, SpecError> {
    let mut out = Vec::new();
    let mut offset = 0;
    for line in text.split_inclusive('\n') {
        let body = line.split('#').next().unwrap_or("");
        for tok in body.split_whitespace() {
            let at = offset + body.find(tok).unwrap_or(0);
            out.push(tok.parse().map_err(|_| SpecError::Parse {
                offset: at,
                message: format!("table entry {tok:?} is not a non-negative integer"),
            })?);
        }
        offset += line.len();
    }
    Ok(out)
}

/// `order zero add[order²] mul[order²]`, validated against the ring axioms.
pub fn ring_from_numbers(nums: &[usize], limit: usize) -> Result<FiniteRing, SpecError> {
    let (&order, rest) = nums
        .split_first()
        .ok_or_else(|| SpecError::Construct("table data is empty".into()))?;
    if order > limit {
        return Err(SpecError::Bounds(ConstructError::TooLarge {
            what: "table ring".into(),
            order: order as u128,
            limit,
        }));
    }
    let cells = order * order;
    if rest.len() != 1 + 2 * cells {
        return Err(SpecError::Construct(format!(
            "a ring of order {order} needs {} numbers after the order, found {}",
            1 + 2 * cells,
            rest.len()
        )));
    }
    let zero = rest[0];
    FiniteRing::from_tables(
        order,
        rest[1..1 + cells].to_vec(),
        rest[1 + cells..].to_vec(),
        zero,
    )
    .map_err(|e| SpecError::Construct(e.to_string()))
}

fn write_list(f: &mut fmt::Formatter<'_>, xs: &[usize]) -> fmt::Result {
    f.write_str("[")?;
    for (i, x) in xs.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{x}")?;
    }
    f.write_str("]")
}

/// Canonical form; parsing it yields an equal spec.
impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingSpec::Zmod(n) => write!(f, "zmod({n})"),
            RingSpec::Null(n) => write!(f, "null({n})"),
            RingSpec::Matrix(s, k) => write!(f, "matrix({s},{k})"),
            RingSpec::Triangular(s, k) => write!(f, "triangular({s},{k})"),
            RingSpec::Poly(n, c) => {
                write!(f, "poly({n},")?;
                write_list(f, c)?;
                f.write_str(")")
            }
            RingSpec::Quotient(s, g) => {
                write!(f, "quotient({s},")?;
                write_list(f, g)?;
                f.write_str(")")
            }
            RingSpec::Product(parts) => {
                f.write_str("product(")?;
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{p}")?;
                }
                f.write_str(")")
            }
            RingSpec::TablesFile(p) => write!(f, "tables({})", p.display()),
            RingSpec::TablesInline(nums) => {
                f.write_str("tables{")?;
                for (i, x) in nums.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" ")?;
                    }
                    write!(f, "{x}")?;
                }
                f.write_str("}")
            }
        }
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, message: impl Into<String>) -> SpecError {
        SpecError::Parse {
            offset: self.pos,
            message: message.into(),
        }
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn expect(&mut self, c: char) -> Result<(), SpecError> {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(format!("expected '{c}'")))
        }
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn ident(&mut self) -> Result<&str, SpecError> {
        self.skip_ws();
        let start = self.pos;
        while let Some(c) = self.peek() {
            if !c.is_ascii_alphabetic() {
                break;
            }
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a constructor name"));
        }
        Ok(&self.src[start..self.pos])
    }

    fn number(&mut self) -> Result<usize, SpecError> {
        self.skip_ws();
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a number"));
        }
        self.src[start..self.pos]
            .parse()
            .map_err(|_| SpecError::Parse {
                offset: start,
                message: "number too large".into(),
            })
    }

    fn list(&mut self) -> Result<Vec<usize>, SpecError> {
        self.expect('[')?;
        let mut out = Vec::new();
        if self.eat(']') {
            return Ok(out);
        }
        loop {
            out.push(self.number()?);
            if self.eat(']') {
                return Ok(out);
            }
            self.expect(',')?;
        }
    }

    fn positive(&mut self, what: &str) -> Result<usize, SpecError> {
        let at = self.pos;
        let n = self.number()?;
        if n == 0 {
            return Err(SpecError::Parse {
                offset: at,
                message: format!("{what} must be at least 1"),
            });
        }
        Ok(n)
    }

    fn spec(&mut self) -> Result<RingSpec, SpecError> {
        let start = self.pos;
        let name = self.ident()?.to_string();
        if name == "tables" && self.eat('{') {
            let close = self.src[self.pos..]
                .find('}')
                .ok_or_else(|| self.error("unterminated inline tables"))?;
            let body = &self.src[self.pos..self.pos + close];
            let nums = parse_table_numbers(body).map_err(|e| match e {
                SpecError::Parse { offset, message } => SpecError::Parse {
                    offset: self.pos + offset,
                    message,
                },
                other => other,
            })?;
            self.pos += close + 1;
            return Ok(RingSpec::TablesInline(nums));
        }
        self.expect('(')?;
        let spec = match name.as_str() {
            "zmod" => RingSpec::Zmod(self.positive("modulus")?),
            "null" => RingSpec::Null(self.positive("modulus")?),
            "matrix" | "triangular" => {
                let inner = self.spec()?;
                self.expect(',')?;
                let k = self.positive("matrix size")?;
                if name == "matrix" {
                    RingSpec::Matrix(Box::new(inner), k)
                } else {
                    RingSpec::Triangular(Box::new(inner), k)
                }
            }
            "poly" => {
                let n = self.positive("modulus")?;
                self.expect(',')?;
                let at = self.pos;
                let c = self.list()?;
                if c.is_empty() {
                    return Err(SpecError::Parse {
                        offset: at,
                        message: "polynomial needs at least one coefficient".into(),
                    });
                }
                RingSpec::Poly(n, c)
            }
            "quotient" => {
                let inner = self.spec()?;
                self.expect(',')?;
                RingSpec::Quotient(Box::new(inner), self.list()?)
            }
            "product" => {
                let mut parts = vec![self.spec()?];
                while self.eat(',') {
                    parts.push(self.spec()?);
                }
                RingSpec::Product(parts)
            }
            "tables" => {
                self.skip_ws();
                let rest = &self.src[self.pos..];
                let close = rest
                    .find(')')
                    .ok_or_else(|| self.error("unterminated tables(...)"))?;
                let path = rest[..close].trim().trim_matches('"');
                if path.is_empty() {
                    return Err(self.error("tables(...) needs a file path"));
                }
                self.pos += close;
                RingSpec::TablesFile(PathBuf::from(path))
            }
            _ => {
                return Err(SpecError::Parse {
                    offset: start,
                    message: format!("unknown constructor {name:?}"),
                })
            }
        };
        self.expect(')')?;
        Ok(spec)
    }
}
