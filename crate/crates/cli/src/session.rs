//! Session settings: the algebra, the orders, the rank and the input vectors.

use std::path::Path;

use skewgb_core::{text, Algebra, AlgebraSpec, BasisDirection, ModVector, ModuleOrder, OrderSpec};

use crate::presentation::{parse_algebra, parse_preset};
use crate::Failure;

#[derive(Clone, Debug)]
pub struct SessionConfig {
    /// `preset:NAME(args)` or a path to a presentation file.
    pub algebra: String,
    /// Variable names from greatest to smallest; declaration order when absent.
    pub order: Option<String>,
    pub module_order: ModuleOrder,
    pub basis_direction: BasisDirection,
    /// Module rank; the largest `e<k>` in the inputs when absent.
    pub rank: Option<usize>,
    pub machine: bool,
}

impl SessionConfig {
    pub fn new(algebra: impl Into<String>) -> Self {
        SessionConfig {
            algebra: algebra.into(),
            order: None,
            module_order: ModuleOrder::TopRev,
            basis_direction: BasisDirection::Natural,
            rank: None,
            machine: false,
        }
    }
}

/// A vector source line: where it came from, for error messages, and its text.
#[derive(Clone, Debug)]
pub struct VectorText {
    pub origin: String,
    pub text: String,
}

pub fn load_algebra(source: &str) -> Result<AlgebraSpec, Failure> {
    if source.starts_with("preset:") {
        return parse_preset(source);
    }
    let src = std::fs::read_to_string(source).map_err(|e| Failure::usage(format!("{source}: {e}")))?;
    parse_algebra(&src).map_err(|f| f.context(source))
}

/// The precedence list named by `order`, e.g. `x,y,z` or `x>y>z`.
pub fn build_order(spec: &AlgebraSpec, order: Option<&str>, config: &SessionConfig) -> Result<OrderSpec, Failure> {
    let precedence = match order {
        None => (0..spec.num_vars()).collect(),
        Some(list) => list
            .split(|c: char| c == ',' || c == '>' || c.is_whitespace())
            .filter(|s| !s.is_empty())
            .map(|name| {
                spec.var_index(name)
                    .ok_or_else(|| Failure::usage(format!("--order: unknown variable {name:?}")))
            })
            .collect::<Result<Vec<_>, _>>()?,
    };
    let wrong = || Failure::usage(format!("--order must list each of {} exactly once", spec.variables.join(", ")));
    if precedence.len() != spec.num_vars() {
        return Err(wrong());
    }
    let order = OrderSpec::with_precedence(precedence).map_err(|_| wrong())?;
    Ok(order.module_order(config.module_order).basis_direction(config.basis_direction))
}

/// Each positional argument is a file with one vector per line, or an
/// inline vector. Blank lines and lines starting with `#` are skipped.
pub fn collect_inputs(args: &[String]) -> Result<Vec<VectorText>, Failure> {
    let mut out = Vec::new();
    for arg in args {
        let path = Path::new(arg);
        if path.is_file() {
            let content = std::fs::read_to_string(path).map_err(|e| Failure::usage(format!("{arg}: {e}")))?;
            for (k, line) in content.lines().enumerate() {
                let line = line.trim();
                if line.is_empty() || line.starts_with('#') {
                    continue;
                }
                out.push(VectorText {
                    origin: format!("{arg}:{}", k + 1),
                    text: line.to_string(),
                });
            }
        } else {
            out.push(VectorText {
                origin: format!("argument {arg:?}"),
                text: arg.clone(),
            });
        }
    }
    Ok(out)
}

pub fn infer_rank(spec: &AlgebraSpec, inputs: &[VectorText]) -> Result<usize, Failure> {
    let mut rank = 1;
    for v in inputs {
        rank = rank.max(text::max_basis_index(spec, &v.text).map_err(|e| Failure::parse(e).context(&v.origin))?);
    }
    Ok(rank)
}

pub fn parse_inputs(alg: &Algebra, inputs: &[VectorText], rank: usize) -> Result<Vec<ModVector>, Failure> {
    inputs
        .iter()
        .map(|v| text::parse_vector(alg, &v.text, rank).map_err(|e| Failure::parse(e).context(&v.origin)))
        .collect()
}

/// Everything a command needs.
pub struct Session {
    pub alg: Algebra,
    pub order: OrderSpec,
    pub rank: usize,
    pub vectors: Vec<ModVector>,
}

impl Session {
    pub fn open(config: &SessionConfig, args: &[String]) -> Result<Self, Failure> {
        let spec = load_algebra(&config.algebra)?;
        let order = build_order(&spec, config.order.as_deref(), config)?;
        let inputs = collect_inputs(args)?;
        let rank = match config.rank {
            Some(0) => return Err(Failure::usage("--rank must be at least 1")),
            Some(r) => r,
            None => infer_rank(&spec, &inputs)?,
        };
        let alg = Algebra::new(spec)?;
        let vectors = parse_inputs(&alg, &inputs, rank)?;
        Ok(Session { alg, order, rank, vectors })
    }
}
