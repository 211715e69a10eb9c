//! Text and JSON renderings. Text is one item per line; JSON is one
//! pretty-printed document.

use covalg::algebra::{is_gorenstein, AlgebraPresentation, DegreeBound};
use covalg::complex::CoverPoint;
use covalg::monomial::IdealFile;
use covalg::MonomialIdeal;
use serde_json::{json, Value};

pub fn print_json(v: &Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("values serialize"));
}

pub fn points_json(points: &[CoverPoint]) -> Value {
    json!(points)
}

pub fn basis_json(p: &AlgebraPresentation) -> Value {
    let max_degree = p.max_degree().ok();
    let bound = DegreeBound::new(p.n().max(1));
    let bound_n = match max_degree {
        Some(d) if bound.holds(d) => "(n+1)^((n+3)/2)/2^n satisfied",
        Some(_) => "(n+1)^((n+3)/2)/2^n violated",
        None => "unknown (truncated)",
    };
    json!({
        "n": p.n(),
        "basis": points_json(p.generators()),
        "truncated": p.truncated(),
        "summary": {
            "max_degree": max_degree,
            "standard_graded": max_degree.map(|d| d <= 1),
            "gorenstein": is_gorenstein(p.source()).ok().map(|v| v.gorenstein),
            "bound_n": bound_n,
        }
    })
}

pub fn print_points(points: &[CoverPoint]) {
    for p in points {
        println!("{p}");
    }
}

pub fn ideal_json(i: &MonomialIdeal) -> Value {
    json!(IdealFile::from(i))
}

pub fn print_ideal(i: &MonomialIdeal) {
    for g in i.gens() {
        println!("{g}");
    }
}

/// 1-indexed copy of a 0-indexed vertex list.
pub fn one_based(v: &[usize]) -> Vec<usize> {
    v.iter().map(|x| x + 1).collect()
}
