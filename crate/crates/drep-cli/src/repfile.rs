//! Representation files: an `n = N` header followed by one
//! `NAME = [[a, b], [c, d]]` block per degree-0 generator, entries being
//! integers or rationals `p/q`.  Generators without a block get the zero
//! matrix.

use std::sync::Arc;

use drep_core::linalg::QMatrix;
use drep_core::ncalg::{GenId, GenTable};
use drep_core::Rat;

use crate::dsl::{tokenize, DslError};

#[derive(Debug)]
pub struct RepFileData {
    pub n: usize,
    pub values: Vec<(GenId, QMatrix)>,
}

pub fn parse_rep(text: &str, table: &Arc<GenTable>) -> Result<RepFileData, DslError> {
    let mut p = tokenize(text)?;

    let (tok, kw) = p.expect_ident("`n`")?;
    if kw != "n" {
        return Err(tok.error(format!("expected `n`, found `{kw}`")));
    }
    p.eat_sym('=')?;
    let (tok, n) = p.expect_int()?;
    let n: usize = n.try_into().map_err(|_| tok.error("matrix size out of range"))?;
    if n == 0 {
        return Err(tok.error("matrix size must be positive"));
    }

    let mut values: Vec<(GenId, QMatrix)> = Vec::new();
    while !p.at_eof() {
        let (name_tok, name) = p.expect_ident("a generator name")?;
        let g = table
            .lookup(&name)
            .map_err(|_| name_tok.error(format!("unknown generator `{name}`")))?;
        if table.degree(g) != 0 {
            return Err(name_tok.error(format!(
                "generator `{name}` has degree {}; only degree-0 generators take matrix values",
                table.degree(g)
            )));
        }
        if values.iter().any(|(h, _)| *h == g) {
            return Err(name_tok.error(format!("duplicate matrix for `{name}`")));
        }
        p.eat_sym('=')?;
        let mat = parse_matrix(&mut p, n, &name_tok)?;
        values.push((g, mat));
    }
    Ok(RepFileData { n, values })
}

fn parse_matrix(
    p: &mut crate::dsl::Parser,
    n: usize,
    name_tok: &crate::dsl::Token,
) -> Result<QMatrix, DslError> {
    p.eat_sym('[')?;
    let mut rows: Vec<Vec<Rat>> = Vec::new();
    loop {
        p.eat_sym('[')?;
        let mut row = Vec::new();
        loop {
            row.push(p.expect_rational()?);
            if p.at_sym(',') {
                p.next();
            } else {
                break;
            }
        }
        p.eat_sym(']')?;
        rows.push(row);
        if p.at_sym(',') {
            p.next();
        } else {
            break;
        }
    }
    p.eat_sym(']')?;
    if rows.len() != n || rows.iter().any(|r| r.len() != n) {
        return Err(name_tok.error(format!(
            "matrix must be {n}x{n}, found {}x{}",
            rows.len(),
            rows.first().map_or(0, |r| r.len())
        )));
    }
    Ok(QMatrix::from_rows(rows))
}
