//! Presentation files and preset references.
//!
//! A presentation is a TOML document:
//!
//! ```toml
//! [ring]
//! base = "QQ[x1]"
//!
//! [variables]
//! names = ["x2", "x3"]
//!
//! [sigma.x2]
//! image = "2*x1"
//!
//! [relation.x3.x2]
//! c = "3"
//! tail = "0"
//!
//! [flags]
//! quasi_commutative = true
//! bijective = true
//! ```
//!
//! `[relation.xj.xi]` states `xj*xi = c*xi*xj + tail` and needs `xi` to be
//! declared before `xj`. Omitted sections mean identity σ, zero δ and
//! commuting variables; omitted flags are read off the data.

use std::collections::BTreeMap;
use std::ops::Range;

use serde::Deserialize;
use skewgb_core::{presets, text, validate_spec, AlgebraSpec, Error, Flags, ParseError, RingSpec, SigmaMap, SkewPoly};
use toml::Spanned;

use crate::Failure;

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct Document {
    ring: RingSection,
    variables: VariablesSection,
    #[serde(default)]
    sigma: BTreeMap<String, ImageSection>,
    #[serde(default)]
    delta: BTreeMap<String, ImageSection>,
    #[serde(default)]
    relation: BTreeMap<String, BTreeMap<String, RelationSection>>,
    flags: Option<FlagsSection>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RingSection {
    base: Spanned<String>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct VariablesSection {
    names: Vec<Spanned<String>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ImageSection {
    image: Spanned<String>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RelationSection {
    c: Spanned<String>,
    tail: Option<Spanned<String>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct FlagsSection {
    quasi_commutative: Option<bool>,
    bijective: Option<bool>,
}

/// Line and column (1-based) of a byte offset.
fn position(src: &str, offset: usize) -> (usize, usize) {
    let offset = offset.min(src.len());
    let before = &src[..offset];
    let line = before.matches('\n').count() + 1;
    let column = before.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
    (line, column)
}

fn error_at(src: &str, offset: usize, message: impl Into<String>) -> Failure {
    let (line, column) = position(src, offset);
    Failure::parse(ParseError {
        line,
        column,
        message: message.into(),
    })
}

/// Where a section header for `path` starts, or the start of the file.
fn header_offset(src: &str, path: &str) -> usize {
    src.find(&format!("[{path}]")).unwrap_or(0)
}

/// Moves an error inside a quoted single-line value to its place in the file.
fn relocate(src: &str, span: &Range<usize>, err: ParseError) -> Failure {
    let value_start = (span.start + 1).min(src.len());
    let within: usize = src[value_start..].chars().take(err.column - 1).map(char::len_utf8).sum();
    error_at(src, value_start + within, err.message)
}

fn parse_base(src: &str, base: &Spanned<String>) -> Result<RingSpec, Failure> {
    let text = base.get_ref().trim();
    if text == "QQ" {
        return Ok(RingSpec::Rationals);
    }
    if let Some(var) = text.strip_prefix("QQ[").and_then(|r| r.strip_suffix(']')) {
        let var = var.trim();
        if is_identifier(var) {
            return Ok(RingSpec::polynomials(var));
        }
    }
    Err(error_at(src, base.span().start, format!("base must be QQ or QQ[<name>], got {text:?}")))
}

fn is_identifier(name: &str) -> bool {
    let mut chars = name.chars();
    chars.next().is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

fn is_basis_symbol(name: &str) -> bool {
    name.strip_prefix('e').is_some_and(|d| !d.is_empty() && d.chars().all(|c| c.is_ascii_digit()))
}

fn variable(src: &str, spec: &AlgebraSpec, name: &str, header: &str) -> Result<usize, Failure> {
    spec.var_index(name)
        .ok_or_else(|| error_at(src, header_offset(src, header), format!("unknown variable {name:?} in [{header}]")))
}

/// Reads and validates a presentation; validation diagnostics are fatal.
pub fn parse_algebra(src: &str) -> Result<AlgebraSpec, Failure> {
    let doc: Document = toml::from_str(src).map_err(|e| {
        let offset = e.span().map_or(0, |s| s.start);
        error_at(src, offset, e.message().to_string())
    })?;
    let base = parse_base(src, &doc.ring.base)?;

    let mut names: Vec<String> = Vec::new();
    for name in &doc.variables.names {
        let n = name.get_ref();
        let bad = if !is_identifier(n) {
            Some("is not an identifier")
        } else if is_basis_symbol(n) {
            Some("clashes with the basis symbols e<k>")
        } else if base.var_name() == Some(n.as_str()) {
            Some("is the base variable")
        } else if names.contains(n) {
            Some("is declared twice")
        } else {
            None
        };
        if let Some(why) = bad {
            return Err(error_at(src, name.span().start, format!("variable {n:?} {why}")));
        }
        names.push(n.clone());
    }
    if names.is_empty() {
        return Err(error_at(src, header_offset(src, "variables"), "at least one variable is needed"));
    }
    let mut spec = AlgebraSpec::new(base.clone(), names.clone());

    for (name, section) in &doc.sigma {
        let header = format!("sigma.{name}");
        let i = variable(src, &spec, name, &header)?;
        if base == RingSpec::Rationals {
            return Err(error_at(src, header_offset(src, &header), "sigma needs a polynomial base ring QQ[<name>]"));
        }
        let image = text::parse_ring_elem(&base, section.image.get_ref())
            .map_err(|e| relocate(src, &section.image.span(), e))?
            .to_poly();
        if image.degree().unwrap_or(0) > 1 {
            return Err(error_at(src, section.image.span().start, "sigma images must have degree at most 1"));
        }
        spec = spec.with_sigma(i, SigmaMap::new(image.coeff(1), image.coeff(0)));
    }

    for (name, section) in &doc.delta {
        let header = format!("delta.{name}");
        let i = variable(src, &spec, name, &header)?;
        if base == RingSpec::Rationals {
            return Err(error_at(src, header_offset(src, &header), "delta needs a polynomial base ring QQ[<name>]"));
        }
        let image = text::parse_ring_elem(&base, section.image.get_ref())
            .map_err(|e| relocate(src, &section.image.span(), e))?;
        spec = spec.with_delta(i, image);
    }

    for (later, inner) in &doc.relation {
        for (earlier, section) in inner {
            let header = format!("relation.{later}.{earlier}");
            let j = variable(src, &spec, later, &header)?;
            let i = variable(src, &spec, earlier, &header)?;
            if i >= j {
                return Err(error_at(
                    src,
                    header_offset(src, &header),
                    format!("write the relation as [relation.{earlier}.{later}]: the first variable must be declared later"),
                ));
            }
            let c = text::parse_ring_elem(&base, section.c.get_ref()).map_err(|e| relocate(src, &section.c.span(), e))?;
            let tail = match &section.tail {
                Some(t) => text::parse_commutative(&base, &names, t.get_ref()).map_err(|e| relocate(src, &t.span(), e))?,
                None => SkewPoly::zero(),
            };
            spec = spec.with_relation(i, j, c, tail);
        }
    }

    if let Some(flags) = doc.flags {
        let inferred = spec.inferred_flags();
        spec = spec.with_flags(Flags {
            quasi_commutative: flags.quasi_commutative.unwrap_or(inferred.quasi_commutative),
            bijective: flags.bijective.unwrap_or(inferred.bijective),
        });
    }

    let diagnostics = validate_spec(&spec);
    if diagnostics.is_empty() {
        Ok(spec)
    } else {
        Err(Error::InvalidSpec(diagnostics).into())
    }
}

/// Reads `preset:NAME(p1, p2, ...)`; the argument list may be omitted for
/// presets without parameters.
pub fn parse_preset(reference: &str) -> Result<AlgebraSpec, Failure> {
    let body = reference
        .strip_prefix("preset:")
        .ok_or_else(|| Failure::usage(format!("{reference:?} is not a preset reference")))?
        .trim();
    let (name, args) = match body.split_once('(') {
        Some((name, rest)) => {
            let args = rest
                .strip_suffix(')')
                .ok_or_else(|| Failure::usage(format!("missing ')' in {reference:?}")))?;
            (name.trim(), args)
        }
        None => (body, ""),
    };
    let params = args
        .split(',')
        .map(str::trim)
        .filter(|a| !a.is_empty())
        .map(|a| text::parse_rational(a).map_err(|e| Failure::usage(format!("parameter {a:?}: {}", e.message))))
        .collect::<Result<Vec<_>, _>>()?;
    let spec = presets::by_name(name, &params).map_err(|e| match e {
        Error::Contract(msg) => Failure::usage(msg),
        other => other.into(),
    })?;
    let diagnostics = validate_spec(&spec);
    if diagnostics.is_empty() {
        Ok(spec)
    } else {
        Err(Error::InvalidSpec(diagnostics).into())
    }
}
