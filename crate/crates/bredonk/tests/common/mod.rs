//! Shared fixtures for the integration suites: the generator matrices of
//! the built-in cell structure by name, group/table helpers, and random
//! unimodular matrices for invariance tests.
#![allow(dead_code)]

use std::sync::Arc;

use bredonk::bredon::GCWComplex;
use bredonk::chartab::{character_table, CharacterTable};
use bredonk::dataset::{builtin, Builtin};
use bredonk::group::{FiniteGroup, GroupElement};
use bredonk::zmodule::IntegerMatrix;

use rand::Rng;

pub fn gen(name: &str) -> GroupElement {
    let flat: [i64; 9] = match name {
        "g1" => [1, 0, 0, 0, 1, 0, 0, 0, 1],
        "g2" => [-1, 0, 0, 0, 0, -1, 0, -1, 0],
        "g3" => [0, 0, 1, 0, 1, 0, -1, 0, 0],
        "g4" => [-1, 0, 0, 0, 1, 1, 0, 0, -1],
        "g5" => [-1, 0, 0, 0, 0, 1, 0, 1, 0],
        "g6" => [0, -1, 0, -1, 0, 0, 0, 0, -1],
        "g7" => [0, 0, -1, -1, 0, 0, 1, 1, 1],
        "g8" => [-1, 0, 0, 0, 1, 0, 0, -1, -1],
        "g9" => [0, 0, -1, -1, 0, -1, 0, 1, 1],
        "g10" => [0, 0, -1, 0, -1, 0, -1, 0, 0],
        "g11" => [-1, 0, 0, 0, -1, 0, 1, 1, 1],
        "g12" => [0, -1, -1, 0, -1, 0, -1, 1, 0],
        "g13" => [0, 1, 1, 1, 0, 1, 0, 0, -1],
        "g14" => [-1, 0, 0, -1, 0, -1, 1, -1, 0],
        "q1" => [1, 0, 0, 0, 1, 1, 0, -1, 0],
        "q2" => [-1, 0, 0, 0, 1, 1, 0, 0, -1],
        other => panic!("unknown element name {other}"),
    };
    GroupElement::from_flat(3, &flat).expect("fixture matrices are unimodular")
}

pub fn enumerate(names: &[&str]) -> Arc<FiniteGroup> {
    let gens: Vec<GroupElement> = names.iter().map(|n| gen(n)).collect();
    Arc::new(FiniteGroup::enumerate(&gens, 20000).unwrap())
}

pub fn table_of(group: &Arc<FiniteGroup>) -> CharacterTable {
    character_table(group).unwrap()
}

pub fn sl3z() -> GCWComplex {
    match builtin("sl3z").unwrap() {
        Builtin::Complex(x) => x,
        _ => panic!("sl3z is a single complex"),
    }
}

pub fn c2point() -> GCWComplex {
    match builtin("c2point").unwrap() {
        Builtin::Complex(x) => x,
        _ => panic!("c2point is a single complex"),
    }
}

/// Index of the irreducible whose integer values at the classes of the
/// given elements match `values`; panics unless exactly one matches.
pub fn find_irreducible_by_values(
    table: &CharacterTable,
    elems: &[GroupElement],
    values: &[i64],
) -> usize {
    let group = table.group();
    let classes: Vec<usize> = elems
        .iter()
        .map(|e| group.class_index_of(e).expect("element in group"))
        .collect();
    let matches: Vec<usize> = table
        .irreducibles()
        .iter()
        .enumerate()
        .filter(|(_, chi)| {
            classes.iter().zip(values).all(|(&c, &v)| {
                chi.value(c)
                    .integer_value()
                    .is_some_and(|x| x == num_bigint::BigInt::from(v))
            })
        })
        .map(|(i, _)| i)
        .collect();
    assert_eq!(
        matches.len(),
        1,
        "expected exactly one irreducible with values {values:?}, found {matches:?}"
    );
    matches[0]
}

/// Random unimodular matrix together with its inverse, built as a product
/// of elementary row operations.
pub fn random_unimodular<R: Rng>(n: usize, rng: &mut R) -> (IntegerMatrix, IntegerMatrix) {
    let mut m = IntegerMatrix::identity(n);
    let mut m_inv = IntegerMatrix::identity(n);
    if n == 0 {
        return (m, m_inv);
    }
    let ops = 3 * n + 2;
    let mut forward: Vec<(usize, usize, i64)> = Vec::with_capacity(ops);
    for _ in 0..ops {
        let i = rng.random_range(0..n);
        let mut j = rng.random_range(0..n);
        if n > 1 {
            while j == i {
                j = rng.random_range(0..n);
            }
        }
        if i == j {
            continue;
        }
        let c = rng.random_range(-2..=2i64);
        forward.push((i, j, c));
    }
    let add_row = |m: &mut IntegerMatrix, i: usize, j: usize, c: i64| {
        let cb = num_bigint::BigInt::from(c);
        for k in 0..m.cols() {
            let v = m.get(i, k) + &cb * m.get(j, k);
            m.set(i, k, v);
        }
    };
    for &(i, j, c) in &forward {
        add_row(&mut m, i, j, c);
    }
    for &(i, j, c) in forward.iter().rev() {
        add_row(&mut m_inv, i, j, -c);
    }
    (m, m_inv)
}

/// Random matrix with entries in [-9, 9].
pub fn random_matrix<R: Rng>(rows: usize, cols: usize, rng: &mut R) -> IntegerMatrix {
    let mut m = IntegerMatrix::zero(rows, cols);
    for i in 0..rows {
        for j in 0..cols {
            m.set(i, j, num_bigint::BigInt::from(rng.random_range(-9..=9i64)));
        }
    }
    m
}
