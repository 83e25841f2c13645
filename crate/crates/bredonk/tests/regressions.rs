//! Regression checks pinning the built-in dataset against the published
//! values that are not already covered by the acceptance criteria.

mod common;

use std::sync::Arc;

use num_bigint::BigInt;

use bredonk::bredon::assemble;
use bredonk::chartab::{character_table, restrict};
use bredonk::group::{FiniteGroup, GroupElement};
use bredonk::zmodule::{homology_at, FgAbelianGroup};

use common::{enumerate, find_irreducible_by_values, gen, sl3z, table_of};

#[test]
fn top_differential_is_the_signed_regular_column() {
    // The top cell has trivial stabilizer, so the differential out of
    // degree 3 sends its generator to the signed sum of regular
    // representations: one ±1 per irreducible of each 2-cell stabilizer,
    // with the boundary signs (-, +, -, +, -) on (t1, t2, t3, t4, t5).
    let complex = assemble(&sl3z()).unwrap();
    let psi3 = complex.differential(3).unwrap();
    assert_eq!((psi3.rows(), psi3.cols()), (11, 1));
    let expected: [i64; 11] = [-1, -1, 1, -1, -1, -1, -1, 1, 1, -1, -1];
    for (i, &e) in expected.iter().enumerate() {
        assert_eq!(psi3.get(i, 0), &BigInt::from(e), "entry {i}");
    }
    // and the labels confirm the block layout (2, 1, 4, 2, 2)
    let labels = &complex.basis_labels[2];
    let cells: Vec<&str> = labels.iter().map(|(id, _)| id.as_str()).collect();
    assert_eq!(
        cells,
        ["t1", "t1", "t2", "t3", "t3", "t3", "t3", "t4", "t4", "t5", "t5"]
    );
}

#[test]
fn degree_zero_position_of_the_chain() {
    // Homology at the degree-0 module with only the incoming map present.
    let complex = assemble(&sl3z()).unwrap();
    let psi1 = complex.differential(1).unwrap();
    let h = homology_at(Some(psi1), None, 26).unwrap();
    assert_eq!(h, FgAbelianGroup::free(8));
}

#[test]
fn restriction_of_the_fourth_printed_character() {
    // In the printed order on (1, g2·g5, g5, g2), the fourth character of
    // <g2, g5> has values (1, -1, -1, 1); restricted to <g2> it becomes
    // the trivial character (1, 1).
    let d2 = enumerate(&["g2", "g5"]);
    let c2 = enumerate(&["g2"]);
    let tt = table_of(&d2);
    let g2g5 = gen("g2").multiply(&gen("g5")).unwrap();
    let elems = [GroupElement::identity(3), g2g5, gen("g5"), gen("g2")];
    let chi4 = find_irreducible_by_values(&tt, &elems, &[1, -1, -1, 1]);
    let down = restrict(tt.irreducible(chi4), &c2, &GroupElement::identity(3)).unwrap();
    let vals: Vec<BigInt> = down
        .values()
        .iter()
        .map(|v| v.integer_value().unwrap())
        .collect();
    assert_eq!(vals, vec![BigInt::from(1), BigInt::from(1)]);
}

#[test]
fn stabilizer_class_counts_drive_the_chain_ranks() {
    // rank of each degree = sum of class counts of that degree's cells
    let x = sl3z();
    let complex = assemble(&x).unwrap();
    for d in 0..=complex.top_dim {
        let expected: usize = x
            .cells
            .iter()
            .filter(|c| c.dim == d)
            .map(|c| {
                FiniteGroup::enumerate(&c.stabilizer_gens, 20000)
                    .unwrap()
                    .class_count()
            })
            .sum();
        assert_eq!(complex.rank(d), expected, "degree {d}");
    }
}

#[test]
fn block_diagonal_product_group_class_count() {
    // class count of a direct product is the product of class counts,
    // checked by enumerating the block-diagonal embedding of S4 x C2
    let mut gens = Vec::new();
    for name in ["g2", "g3"] {
        let g = gen(name);
        let mut flat = [0i64; 16];
        for i in 0..3 {
            for j in 0..3 {
                flat[i * 4 + j] = i64::try_from(g.matrix().get(i, j)).unwrap();
            }
        }
        flat[15] = 1;
        gens.push(GroupElement::from_flat(4, &flat).unwrap());
    }
    let mut neg = [0i64; 16];
    neg[0] = 1;
    neg[5] = 1;
    neg[10] = 1;
    neg[15] = -1;
    gens.push(GroupElement::from_flat(4, &neg).unwrap());

    let product = FiniteGroup::enumerate(&gens, 20000).unwrap();
    assert_eq!(product.order(), 48);
    assert_eq!(product.class_count(), 10);

    let s4 = enumerate(&["g2", "g3"]);
    let c2 = Arc::new(
        FiniteGroup::enumerate(&[GroupElement::from_flat(1, &[-1]).unwrap()], 10).unwrap(),
    );
    assert_eq!(product.class_count(), s4.class_count() * c2.class_count());

    // both factor tables satisfy the degree-square identity on the product
    let tp = character_table(&Arc::new(product)).unwrap();
    let sum: BigInt = tp.degrees().iter().map(|d| d * d).sum();
    assert_eq!(sum, BigInt::from(48));
}

#[test]
fn tables_are_shareable_across_threads() {
    // tables may be computed for distinct groups concurrently
    let handles: Vec<_> = [vec!["g2", "g3"], vec!["g4", "g5"], vec!["g6", "g8"]]
        .into_iter()
        .map(|names| {
            std::thread::spawn(move || {
                let gens: Vec<GroupElement> = names.iter().map(|n| gen(n)).collect();
                let g = Arc::new(FiniteGroup::enumerate(&gens, 20000).unwrap());
                let t = character_table(&g).unwrap();
                (g.order(), t.len())
            })
        })
        .collect();
    let results: Vec<(usize, usize)> = handles.into_iter().map(|h| h.join().unwrap()).collect();
    assert_eq!(results, vec![(24, 5), (12, 6), (8, 5)]);
}
