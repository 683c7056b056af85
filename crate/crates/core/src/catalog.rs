//! Small algebras used throughout the tests and the command-line suites.

use std::sync::Arc;

use crate::exactlin::PrimeField;
use crate::quiveralg::{BoundQuiverAlgebra, Quiver, Relation};

fn build(p: u32, vertices: &[&str], arrows: &[(&str, &str, &str)], rels: Vec<Relation>, l: usize) -> Arc<BoundQuiverAlgebra> {
    let mut q = Quiver::new();
    for v in vertices {
        q.add_vertex(v).unwrap();
    }
    for (a, s, t) in arrows {
        q.add_arrow(a, s, t).unwrap();
    }
    let field = PrimeField::new(p).unwrap();
    Arc::new(BoundQuiverAlgebra::build(field, q, rels, l).unwrap())
}

/// `1 -> 2` over F_5.
pub fn a2() -> Arc<BoundQuiverAlgebra> {
    build(5, &["1", "2"], &[("a", "1", "2")], vec![], 2)
}

/// `1 -> 2 -> 3` over F_7 (dimension 6 needs p > 6).
pub fn a3() -> Arc<BoundQuiverAlgebra> {
    build(7, &["1", "2", "3"], &[("a", "1", "2"), ("b", "2", "3")], vec![], 3)
}

/// Two parallel arrows `1 => 2` over F_5.
pub fn kronecker() -> Arc<BoundQuiverAlgebra> {
    build(5, &["1", "2"], &[("a", "1", "2"), ("b", "1", "2")], vec![], 2)
}

/// `k[x]/(x^2)` over F_5.
pub fn dual_numbers() -> Arc<BoundQuiverAlgebra> {
    build(5, &["1"], &[("x", "1", "1")], vec![Relation::new(vec![(1, vec![0, 0])])], 2)
}

/// `k x k` over F_5.
pub fn semisimple2() -> Arc<BoundQuiverAlgebra> {
    build(5, &["1", "2"], &[], vec![], 2)
}

/// A single vertex over F_p.
pub fn point(p: u32) -> Arc<BoundQuiverAlgebra> {
    build(p, &["1"], &[], vec![], 2)
}

/// The five reference algebras with their short names.
pub fn named() -> Vec<(&'static str, Arc<BoundQuiverAlgebra>)> {
    vec![
        ("A2", a2()),
        ("A3", a3()),
        ("kronecker", kronecker()),
        ("dual-numbers", dual_numbers()),
        ("semisimple2", semisimple2()),
    ]
}

pub fn all() -> Vec<Arc<BoundQuiverAlgebra>> {
    named().into_iter().map(|(_, a)| a).collect()
}

/// The linear quiver `1 -> 2 -> ... -> n` over F_p.
pub fn linear(n: usize, p: u32) -> Arc<BoundQuiverAlgebra> {
    let names: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
    let vertices: Vec<&str> = names.iter().map(String::as_str).collect();
    let labels: Vec<String> = (1..n).map(|i| format!("a{i}")).collect();
    let arrows: Vec<(&str, &str, &str)> =
        (0..n - 1).map(|i| (labels[i].as_str(), vertices[i], vertices[i + 1])).collect();
    build(p, &vertices, &arrows, vec![], n.max(2))
}

/// `k[x]/(x^2)` over F_p.
pub fn dual_numbers_over(p: u32) -> Arc<BoundQuiverAlgebra> {
    build(p, &["1"], &[("x", "1", "1")], vec![Relation::new(vec![(1, vec![0, 0])])], 2)
}
