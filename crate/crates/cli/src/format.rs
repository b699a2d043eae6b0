//! The algebra file format.
//!
//! ```text
//! axetlab-algebra 1
//! name: Q2(1/3,2/3)
//! field: rational            # or `prime 5`, or `function alpha beta`
//! basis: s1 s2 d1 d2
//! product s1 d1 = 1/3*s1 + 1/6*d1 - 1/6*d2
//! axis t1 monster 1/3 2/3 = 3/5*s1 + 3/5*s2 - 2/5*d1 + 3/5*d2
//! axis s1 jordan 1/3 = s1
//! ```
//!
//! Unlisted products are zero. `#` starts a comment. Coefficients are exact
//! expressions in the scalar grammar.

use std::collections::BTreeMap;

use axetlab_core::algebra::Element;
use axetlab_core::catalog::{Construction, DeclaredAxis};
use axetlab_core::expr::{self, ExprError};
use axetlab_core::fusion::LawSpec;
use axetlab_core::{AlgebraError, Field, Scalar, StructureAlgebra};
use thiserror::Error;

pub const MAGIC: &str = "axetlab-algebra 1";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FileError {
    #[error("{line}:{column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{line}:{column}: unknown symbol `{name}`")]
    UnknownSymbol {
        line: usize,
        column: usize,
        name: String,
    },
    #[error("line {line}: bad field: {message}")]
    BadField { line: usize, message: String },
    #[error("line {line}: {source}")]
    Algebra { line: usize, source: AlgebraError },
}

impl FileError {
    fn parse(line: usize, column: usize, message: impl Into<String>) -> Self {
        FileError::Parse {
            line,
            column,
            message: message.into(),
        }
    }

    fn from_expr(e: ExprError, line: usize) -> Self {
        match e {
            ExprError::Parse { line, column, message } => FileError::Parse { line, column, message },
            ExprError::UnknownSymbol { line, column, name } => FileError::UnknownSymbol { line, column, name },
            other => FileError::parse(line, 1, other.to_string()),
        }
    }
}

/// A document line; columns are reported relative to `text`.
struct Line<'a> {
    number: usize,
    text: &'a str,
}

impl<'a> Line<'a> {
    fn column_of(&self, part: &str) -> usize {
        part.as_ptr() as usize - self.text.as_ptr() as usize + 1
    }
}

fn parse_field(line: &Line<'_>, spec: &str) -> Result<Field, FileError> {
    let bad = |message: String| FileError::BadField {
        line: line.number,
        message,
    };
    let words: Vec<&str> = spec.split_whitespace().collect();
    match words.as_slice() {
        ["rational"] => Ok(Field::Rational),
        ["prime", p] => {
            let p: u64 = p.parse().map_err(|_| bad(format!("`{p}` is not an integer")))?;
            Field::prime(p).map_err(|e| bad(e.to_string()))
        }
        ["function", names @ ..] if !names.is_empty() => Field::function(names).map_err(|e| bad(e.to_string())),
        _ => Err(bad(format!("expected `rational`, `prime p` or `function names...`, found `{spec}`"))),
    }
}

fn scalar(line: &Line<'_>, text: &str, field: &Field) -> Result<Scalar, FileError> {
    expr::parse_at(text, line.number, line.column_of(text))
        .and_then(|e| e.eval_scalar(field))
        .map_err(|e| FileError::from_expr(e, line.number))
}

fn element(line: &Line<'_>, text: &str, field: &Field, basis: &[String]) -> Result<Element, FileError> {
    let text = text.trim();
    expr::parse_at(text, line.number, line.column_of(text))
        .and_then(|e| e.eval_element_at(field, basis, line.number))
        .map(Element::new)
        .map_err(|e| FileError::from_expr(e, line.number))
}

/// Splits `lhs = rhs` on the first `=`.
fn split_eq<'a>(line: &Line<'_>, rest: &'a str) -> Result<(&'a str, &'a str), FileError> {
    rest.split_once('=')
        .ok_or_else(|| FileError::parse(line.number, line.column_of(rest), "expected `=`"))
}

fn strip_comment(s: &str) -> &str {
    s.split_once('#').map_or(s, |(a, _)| a)
}

/// Parses an algebra file.
pub fn parse_algebra_file(text: &str) -> Result<Construction, FileError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, t)| Line { number: i + 1, text: t })
        .filter(|l| !strip_comment(l.text).trim().is_empty());
    let header = lines.next().ok_or_else(|| FileError::parse(1, 1, "empty document"))?;
    if strip_comment(header.text).trim() != MAGIC {
        return Err(FileError::parse(header.number, 1, format!("expected `{MAGIC}`")));
    }
    let mut name = String::new();
    let mut field: Option<Field> = None;
    let mut basis: Option<Vec<String>> = None;
    let mut products = Vec::new();
    let mut axes = Vec::new();

    for line in lines {
        let body = strip_comment(line.text).trim_end();
        let trimmed = body.trim_start();
        let (key, rest) = trimmed
            .split_once(|c: char| c == ':' || c.is_whitespace())
            .unwrap_or((trimmed, ""));
        match key {
            "name" => name = rest.trim().to_string(),
            "field" => field = Some(parse_field(&line, rest)?),
            "basis" => {
                if field.is_none() {
                    return Err(FileError::parse(line.number, 1, "`field:` must precede `basis:`"));
                }
                basis = Some(rest.split_whitespace().map(str::to_string).collect());
            }
            "product" | "axis" => {
                let (Some(f), Some(b)) = (&field, &basis) else {
                    return Err(FileError::parse(line.number, 1, "`field:` and `basis:` must come first"));
                };
                let (lhs, rhs) = split_eq(&line, rest)?;
                let words: Vec<&str> = lhs.split_whitespace().collect();
                let index = |w: &str| {
                    b.iter().position(|n| n == w).ok_or_else(|| FileError::UnknownSymbol {
                        line: line.number,
                        column: line.column_of(w),
                        name: w.to_string(),
                    })
                };
                let value = element(&line, rhs, f, b)?;
                if key == "product" {
                    let [x, y] = words[..] else {
                        return Err(FileError::parse(line.number, line.column_of(lhs), "expected `product x y = ...`"));
                    };
                    products.push((line.number, index(x)?, index(y)?, value));
                } else {
                    let law = match words[..] {
                        [_, "monster", a, b] => LawSpec::Monster(scalar(&line, a, f)?, scalar(&line, b, f)?),
                        [_, "jordan", e] => LawSpec::Jordan(scalar(&line, e, f)?),
                        _ => {
                            return Err(FileError::parse(
                                line.number,
                                line.column_of(lhs),
                                "expected `axis name monster a b = ...` or `axis name jordan e = ...`",
                            ))
                        }
                    };
                    axes.push(DeclaredAxis {
                        name: words[0].to_string(),
                        element: value,
                        law,
                    });
                }
            }
            other => {
                return Err(FileError::parse(line.number, line.column_of(other), format!("unknown key `{other}`")))
            }
        }
    }
    let field = field.ok_or_else(|| FileError::parse(1, 1, "missing `field:`"))?;
    let basis = basis.ok_or_else(|| FileError::parse(1, 1, "missing `basis:`"))?;
    let mut seen: BTreeMap<(usize, usize), &Element> = BTreeMap::new();
    for (line, i, j, v) in &products {
        if let Some(prev) = seen.insert((*i.min(j), *i.max(j)), v) {
            if prev != v {
                let source = AlgebraError::ConflictingProduct(basis[*i].clone(), basis[*j].clone());
                return Err(FileError::Algebra { line: *line, source });
            }
        }
    }
    let entries = products.into_iter().map(|(_, i, j, v)| (i, j, v)).collect();
    let alg = StructureAlgebra::from_products(field, &basis, entries)
        .map_err(|source| FileError::Algebra { line: 1, source })?;
    Ok(Construction { name, algebra: alg, axes })
}

/// Emits `c` in the file format. Zero products are omitted; the output is
/// deterministic and parses back to an equal construction.
pub fn emit_algebra_file(c: &Construction) -> String {
    let alg = &c.algebra;
    let mut out = format!("{MAGIC}\n");
    if !c.name.is_empty() {
        out.push_str(&format!("name: {}\n", c.name));
    }
    out.push_str(&format!("field: {}\n", alg.field()));
    out.push_str(&format!("basis: {}\n", alg.names().join(" ")));
    let names = alg.names();
    for i in 0..alg.dim() {
        for j in i..alg.dim() {
            let p = alg.product_of_basis(i, j);
            if !p.is_zero() {
                out.push_str(&format!("product {} {} = {}\n", names[i], names[j], alg.format_element(p)));
            }
        }
    }
    for ax in &c.axes {
        out.push_str(&format!(
            "axis {} {} = {}\n",
            ax.name,
            law_text(&ax.law),
            alg.format_element(&ax.element)
        ));
    }
    out
}

/// Law parameters as whitespace-free expressions, so they survive the
/// word split in `axis` lines.
fn law_text(law: &LawSpec) -> String {
    let p = |s: &Scalar| s.to_string().replace(' ', "");
    match law {
        LawSpec::Monster(a, b) => format!("monster {} {}", p(a), p(b)),
        LawSpec::Jordan(e) => format!("jordan {}", p(e)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use axetlab_core::catalog;

    #[test]
    fn q2_row_from_text() {
        let text = "axetlab-algebra 1\nfield: rational\nbasis: s1 s2 d1 d2\nproduct s1 d1 = 1/3*s1 + 1/6*d1 - 1/6*d2\n";
        let c = parse_algebra_file(text).unwrap();
        let q = catalog::make_q2_third(&Field::Rational).unwrap().algebra;
        assert_eq!(c.algebra.product_of_basis(0, 2), q.product_of_basis(0, 2));
        assert!(c.algebra.product_of_basis(0, 0).is_zero());
    }

    #[test]
    fn char_two_is_a_bad_field() {
        let err = parse_algebra_file("axetlab-algebra 1\nfield: prime 2\nbasis: a\n").unwrap_err();
        assert!(matches!(err, FileError::BadField { line: 2, .. }));
    }

    #[test]
    fn errors_carry_positions() {
        let err = parse_algebra_file("axetlab-algebra 1\nfield: rational\nbasis: a b\nproduct a b = a + q\n")
            .unwrap_err();
        assert_eq!(
            err,
            FileError::UnknownSymbol {
                line: 4,
                column: 19,
                name: "q".into()
            }
        );
        let err = parse_algebra_file("axetlab-algebra 1\nfield: rational\nbasis: a b\nproduct a b = a + * b\n")
            .unwrap_err();
        assert!(matches!(err, FileError::Parse { line: 4, column: 19, .. }), "{err:?}");
    }
}
