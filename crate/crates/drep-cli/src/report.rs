//! Text and JSON renderings of the computations, shared by the subcommands.
//! Every function here is a pure formatter, so repeated runs over the same
//! input produce byte-identical output.

use drep_core::cohomology::{s_ring, EulerReport, HPresentation};
use drep_core::expand::ExpandedAlgebra;
use drep_core::gcalg::monomial_string;
use drep_core::groebner::MPoly;
use drep_core::tangent::P2Report;
use drep_core::Rat;
use num::{One, Signed};
use serde_json::{json, Map, Value};

/// `H^0`, `H^-1`, ... as used in the report headers.
pub fn degree_label(m: u32) -> String {
    if m == 0 {
        "H^0".to_string()
    } else {
        format!("H^-{m}")
    }
}

/// Variable names of the degree-0 polynomial ring the presentations live
/// over, in the column order used by coordinate vectors.
pub fn ring_var_names(ea: &ExpandedAlgebra) -> Vec<String> {
    let table = ea.table();
    s_ring(ea).vars().iter().map(|&v| table.name(v).to_string()).collect()
}

/// Render a module element with named ring variables; positions appear as
/// `g0, g1, ...` unless the module has rank one.
pub fn module_element_string(p: &MPoly<Rat>, vars: &[String]) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (t, c)) in p.terms().iter().enumerate() {
        let neg = c.is_negative();
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let abs = c.abs();
        let mut factors: Vec<String> = Vec::new();
        if !abs.is_one() {
            factors.push(abs.to_string());
        }
        for (v, &e) in t.mono.exps().iter().enumerate() {
            if e == 1 {
                factors.push(vars[v].clone());
            } else if e > 1 {
                factors.push(format!("{}^{}", vars[v], e));
            }
        }
        if p.rank() > 1 {
            factors.push(format!("g{}", t.pos));
        }
        if factors.is_empty() {
            factors.push("1".to_string());
        }
        out.push_str(&factors.join("*"));
    }
    out
}

pub fn expand_text(ea: &ExpandedAlgebra) -> String {
    let table = ea.table();
    let pres = ea.presentation();
    let mut out = String::new();
    out.push_str(&format!("n = {}\n", ea.n()));
    out.push_str(&format!("variables ({}):\n", table.len()));
    for v in table.ids() {
        out.push_str(&format!("  {} : {}\n", table.name(v), table.degree(v)));
    }
    out.push_str("differentials:\n");
    let mut any = false;
    for v in table.ids() {
        let dv = pres.diff_of(v);
        if !dv.is_zero() {
            out.push_str(&format!("  d {} = {}\n", table.name(v), dv));
            any = true;
        }
    }
    if !any {
        out.push_str("  (none)\n");
    }
    out
}

pub fn expand_json(ea: &ExpandedAlgebra) -> String {
    let table = ea.table();
    let pres = ea.presentation();
    let variables: Vec<Value> = table
        .ids()
        .map(|v| json!({"name": table.name(v), "degree": table.degree(v)}))
        .collect();
    let mut diffs = Map::new();
    for v in table.ids() {
        let dv = pres.diff_of(v);
        if !dv.is_zero() {
            let mut terms = Map::new();
            for (m, c) in dv.terms() {
                terms.insert(monomial_string(table, m), Value::String(c.to_string()));
            }
            diffs.insert(table.name(v).to_string(), Value::Object(terms));
        }
    }
    let doc = json!({
        "n": ea.n(),
        "variables": variables,
        "differentials": Value::Object(diffs),
    });
    let mut s = serde_json::to_string_pretty(&doc).expect("serializable");
    s.push('\n');
    s
}

pub fn h_text(ea: &ExpandedAlgebra, h: &HPresentation, up_to: i64) -> String {
    let table = ea.table();
    let vars = ring_var_names(ea);
    let mut out = String::new();
    out.push_str(&format!("{} at n = {}\n", degree_label(h.m), ea.n()));
    if h.m == 0 {
        out.push_str("cyclic module on the class of 1\n");
        out.push_str(&format!("ideal generators ({}):\n", h.presentation.relations.len()));
        for r in &h.presentation.relations {
            out.push_str(&format!("  {}\n", module_element_string(r, &vars)));
        }
    } else {
        let basis: Vec<String> = h.basis.iter().map(|m| monomial_string(table, m)).collect();
        out.push_str(&format!("cochain basis ({}): {}\n", basis.len(), basis.join(", ")));
        if h.presentation.generators() == 0 {
            out.push_str("generators: none (the module is zero)\n");
            return out;
        }
        let label =
            if h.minimized { "minimal generators" } else { "generators (not minimized)" };
        out.push_str(&format!("{} ({}):\n", label, h.presentation.generators()));
        for (i, class) in h.representatives.iter().enumerate() {
            if h.minimized {
                out.push_str(&format!(
                    "  g{} = [{}]  (internal degree {})\n",
                    i, class.rep, h.presentation.shifts[i]
                ));
            } else {
                out.push_str(&format!("  g{} = [{}]\n", i, class.rep));
            }
        }
        out.push_str(&format!("relations ({}):\n", h.presentation.relations.len()));
        for r in &h.presentation.relations {
            out.push_str(&format!("  {} = 0\n", module_element_string(r, &vars)));
        }
    }
    // For m >= 1 the generator degrees come from the internal grading; when
    // that grading does not exist the shifts are placeholders and a Hilbert
    // function over them would be meaningless.
    if h.m == 0 || h.minimized {
        if let Ok(hf) = h.presentation.hilbert_function(up_to) {
            let vals: Vec<String> = hf.iter().map(|v| v.to_string()).collect();
            out.push_str(&format!(
                "hilbert function (internal degrees 0..{}): {}\n",
                up_to,
                vals.join(" ")
            ));
        }
    }
    out
}

pub fn hilbert_text(m: u32, n: usize, values: &[u64]) -> String {
    let mut out = String::new();
    out.push_str(&format!("hilbert function of {} at n = {}\n", degree_label(m), n));
    for (d, v) in values.iter().enumerate() {
        out.push_str(&format!("{}: {}\n", d, v));
    }
    out
}

pub fn tangent_text(dims: &[usize], p2: Option<&P2Report>) -> String {
    let mut out = String::new();
    for (i, d) in dims.iter().enumerate() {
        out.push_str(&format!("T^{} = {}\n", i, d));
    }
    if let Some(rep) = p2 {
        out.push_str("koszul oracle:\n");
        for row in &rep.rows {
            let oracle_name =
                if row.i == 0 { "Z^1".to_string() } else { format!("HH^{}", row.i + 1) };
            let verdict = if row.tangent == row.oracle { "agree" } else { "DISAGREE" };
            out.push_str(&format!(
                "  T^{} = {} vs {} = {}: {}\n",
                row.i, row.tangent, oracle_name, row.oracle, verdict
            ));
        }
        out.push_str(&format!("oracle agreement: {}\n", if rep.ok { "yes" } else { "no" }));
    }
    out
}

pub fn euler_text(rep: &EulerReport) -> String {
    let mut out = String::new();
    for row in &rep.rows {
        out.push_str(&format!(
            "degree {}: complex {} vs cohomology {}\n",
            row.internal_degree, row.complex_side, row.cohomology_side
        ));
    }
    out.push_str(&format!("euler check: {}\n", if rep.ok { "ok" } else { "MISMATCH" }));
    out
}
