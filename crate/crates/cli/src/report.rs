//! The four commands and their reports.
//!
//! Every report is a list of records `{kind, name, value}`. Text mode prints
//! `name = value` lines; machine mode prints one JSON object per line. All
//! identities a report relies on are checked before it is returned.

use serde::Serialize;
use skewgb_core::{buchberger, division, syz_module, text, Algebra, Error, ModVector, OrderSpec, SkewPoly};

use crate::session::Session;
use crate::Failure;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    Reduce,
    Gbasis,
    Member,
    Syzygy,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Record {
    pub kind: String,
    pub name: String,
    pub value: String,
}

struct Report<'a> {
    alg: &'a Algebra,
    order: &'a OrderSpec,
    records: Vec<Record>,
}

impl<'a> Report<'a> {
    fn new(session: &'a Session) -> Self {
        Report {
            alg: &session.alg,
            order: &session.order,
            records: Vec::new(),
        }
    }

    fn push(&mut self, kind: &str, name: impl Into<String>, value: impl Into<String>) {
        self.records.push(Record {
            kind: kind.into(),
            name: name.into(),
            value: value.into(),
        });
    }

    fn vector(&mut self, kind: &str, name: impl Into<String>, v: &ModVector) {
        let value = text::render_vector(self.alg, v, self.order);
        self.push(kind, name, value);
    }

    fn poly(&mut self, kind: &str, name: impl Into<String>, f: &SkewPoly) {
        let value = text::render_poly(self.alg, f, self.order);
        self.push(kind, name, value);
    }

    fn columns(&mut self, kind: &str, prefix: &str, cols: &[Vec<SkewPoly>]) {
        for (k, col) in cols.iter().enumerate() {
            let value = text::render_column(self.alg, col, self.order);
            self.push(kind, format!("{prefix}{}", k + 1), value);
        }
    }

    /// Rows of a matrix given by its columns of length `rows`.
    fn matrix(&mut self, kind: &str, cols: &[Vec<SkewPoly>], rows: usize) {
        for r in 0..rows {
            let row: Vec<SkewPoly> = cols.iter().map(|c| c[r].clone()).collect();
            let value = text::render_column(self.alg, &row, self.order);
            self.push(kind, format!("{kind}[{}]", r + 1), value);
        }
    }

    fn inputs(&mut self, names: &str, vs: &[ModVector]) {
        for (k, v) in vs.iter().enumerate() {
            self.vector("input", format!("{names}{}", k + 1), v);
        }
    }
}

fn needs(vectors: &[ModVector], at_least: usize, what: &str) -> Result<(), Failure> {
    if vectors.len() < at_least {
        Err(Failure::usage(format!("{what} needs at least {at_least} input vector(s), got {}", vectors.len())))
    } else {
        Ok(())
    }
}

fn internal(what: &str) -> Failure {
    Error::Internal(what.into()).into()
}

pub fn run_command(command: Command, session: &Session) -> Result<Vec<Record>, Failure> {
    match command {
        Command::Reduce => reduce(session),
        Command::Gbasis => gbasis(session),
        Command::Member => member(session),
        Command::Syzygy => syzygy(session),
    }
}

/// `reduce f f1 ... ft`: quotients and remainder of `f` by `f1..ft`.
fn reduce(session: &Session) -> Result<Vec<Record>, Failure> {
    needs(&session.vectors, 1, "reduce")?;
    let (f, divisors) = session.vectors.split_first().expect("checked");
    let r = division(&session.alg, f, divisors, &session.order)?;
    r.verify(&session.alg, f, divisors, &session.order)?;

    let mut rep = Report::new(session);
    rep.vector("input", "f", f);
    rep.inputs("f", divisors);
    for (k, q) in r.quotients.iter().enumerate() {
        rep.poly("quotient", format!("q{}", k + 1), q);
    }
    rep.vector("remainder", "h", &r.remainder);
    rep.push("steps", "steps", r.steps.len().to_string());
    rep.push(
        "check",
        "division",
        "f = sum q_i f_i + h, h is reduced, lm(f) = max(lm(lm(q_i) lm(f_i)), lm(h))",
    );
    Ok(rep.records)
}

/// `gbasis f1 ... fs`: the basis `G` with `G = F H` and `F = G Q`.
fn gbasis(session: &Session) -> Result<Vec<Record>, Failure> {
    needs(&session.vectors, 1, "gbasis")?;
    let gb = buchberger(&session.alg, &session.vectors, &session.order)?;
    gb.verify(&session.alg, &session.order)?;

    let mut rep = Report::new(session);
    rep.inputs("f", &gb.inputs);
    for (k, g) in gb.basis.iter().enumerate() {
        rep.vector("basis", format!("g{}", k + 1), g);
    }
    rep.matrix("H", &gb.h_cols, gb.inputs.len());
    rep.matrix("Q", &gb.q_cols, gb.basis.len());
    rep.push("check", "groebner", "G^T = H^T F^T, F^T = Q^T G^T, every S-combination reduces to 0");
    Ok(rep.records)
}

/// `member f f1 ... fs`: whether `f` lies in the submodule generated by
/// `f1..fs`, with a combination when it does.
fn member(session: &Session) -> Result<Vec<Record>, Failure> {
    needs(&session.vectors, 2, "member")?;
    let (f, inputs) = session.vectors.split_first().expect("checked");
    let gb = buchberger(&session.alg, inputs, &session.order)?;
    gb.verify(&session.alg, &session.order)?;
    let found = gb.member_of_inputs(&session.alg, f, &session.order)?;

    let mut rep = Report::new(session);
    rep.vector("input", "f", f);
    rep.inputs("f", inputs);
    match found {
        Some(coeffs) => {
            if session.alg.combine(&coeffs, inputs, session.rank)? != *f {
                return Err(internal("the membership combination does not rebuild f"));
            }
            rep.push("member", "member", "yes");
            for (k, a) in coeffs.iter().enumerate() {
                rep.poly("coefficient", format!("a{}", k + 1), a);
            }
            rep.push("check", "member", "f = sum a_i f_i");
        }
        None => {
            let r = division(&session.alg, f, &gb.basis, &session.order)?;
            if r.remainder.is_zero() {
                return Err(internal("membership and division disagree"));
            }
            rep.push("member", "member", "no");
            rep.vector("remainder", "h", &r.remainder);
            rep.push("note", "member", "not a member: the remainder by a Gröbner basis is nonzero");
        }
    }
    Ok(rep.records)
}

/// `syzygy f1 ... fs`: generators of `Syz(L_G)`, `Syz(G)` and `Syz(F)`.
fn syzygy(session: &Session) -> Result<Vec<Record>, Failure> {
    needs(&session.vectors, 1, "syzygy")?;
    let m = syz_module(&session.alg, &session.vectors, &session.order)?;
    m.verify(&session.alg, &session.order)?;

    let mut rep = Report::new(session);
    rep.inputs("f", &m.gb.inputs);
    for (k, g) in m.gb.basis.iter().enumerate() {
        rep.vector("basis", format!("g{}", k + 1), g);
    }
    rep.matrix("H", &m.gb.h_cols, m.gb.inputs.len());
    rep.matrix("Q", &m.gb.q_cols, m.gb.basis.len());
    rep.columns("Z(L_G)", "s", &m.z_leading);
    rep.columns("P", "p", &m.p);
    rep.columns("Z(G)", "z", &m.z_basis);
    rep.columns("Z(F)", "a", &m.z_inputs);
    if m.is_free() {
        rep.push("free", "Syz(F)", "0");
        rep.push("note", "free", "Syz(F) = 0: the columns of F are independent and M is free");
    }
    rep.push("check", "syzygy", "Z(L_G) L_G = 0, Z(G) G = 0, Z(F) F = 0");
    Ok(rep.records)
}

/// Text rendering: notes on their own, checks as `verified: ...`, everything
/// else as `name = value`.
pub fn render_text(records: &[Record]) -> String {
    let mut out = String::new();
    for r in records {
        match r.kind.as_str() {
            "note" => out.push_str(&r.value),
            "check" => out.push_str(&format!("verified: {}", r.value)),
            _ => out.push_str(&format!("{} = {}", r.name, r.value)),
        }
        out.push('\n');
    }
    out
}

pub fn render_machine(records: &[Record]) -> String {
    let mut out = String::new();
    for r in records {
        out.push_str(&serde_json::to_string(r).expect("records serialize"));
        out.push('\n');
    }
    out
}
