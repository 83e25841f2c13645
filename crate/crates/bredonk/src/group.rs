//! Finite matrix groups given by integer-matrix generators: breadth-first
//! enumeration, conjugacy classes in a canonical order, element arithmetic
//! and subconjugation checks.
//!
//! Elements are square unimodular integer matrices. All values are immutable
//! after construction and every operation is a pure function.

use std::cmp::Ordering;
use std::collections::{HashMap, VecDeque};

use num_bigint::BigInt;
use num_traits::One;
use thiserror::Error;

use crate::zmodule::IntegerMatrix;

/// Element cap used by callers that do not pick their own; every stabilizer
/// handled by this tool has order at most a few dozen.
pub const DEFAULT_ENUMERATION_CAP: usize = 20_000;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GroupError {
    #[error("matrix dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("matrix is not unimodular (determinant {0})")]
    NotUnimodular(BigInt),
    #[error("matrix is not square ({0}x{1})")]
    NotSquare(usize, usize),
    #[error("group closure exceeded the cap of {0} elements; the group is too large or infinite")]
    GroupTooLargeOrInfinite(usize),
    #[error("element order exceeds the cap of {0}; the element has infinite order")]
    InfiniteOrder(usize),
    #[error("no generators given")]
    NoGenerators,
}

/// A square integer matrix with determinant ±1, so that its inverse is
/// again an integer matrix. Equality is entry-wise.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct GroupElement {
    mat: IntegerMatrix,
}

impl GroupElement {
    pub fn new(mat: IntegerMatrix) -> Result<Self, GroupError> {
        if mat.rows() != mat.cols() {
            return Err(GroupError::NotSquare(mat.rows(), mat.cols()));
        }
        let det = mat.determinant();
        if !det.is_one() && det != -BigInt::one() {
            return Err(GroupError::NotUnimodular(det));
        }
        Ok(GroupElement { mat })
    }

    /// Build from a flat row-major slice; the length must be a perfect
    /// square and the matrix unimodular.
    pub fn from_flat(dim: usize, data: &[i64]) -> Result<Self, GroupError> {
        Self::new(IntegerMatrix::from_i64(dim, dim, data))
    }

    pub fn identity(dim: usize) -> Self {
        GroupElement {
            mat: IntegerMatrix::identity(dim),
        }
    }

    pub fn dim(&self) -> usize {
        self.mat.rows()
    }

    pub fn matrix(&self) -> &IntegerMatrix {
        &self.mat
    }

    pub fn is_identity(&self) -> bool {
        self.mat.is_identity()
    }

    pub fn multiply(&self, other: &GroupElement) -> Result<GroupElement, GroupError> {
        if self.dim() != other.dim() {
            return Err(GroupError::DimensionMismatch(self.dim(), other.dim()));
        }
        Ok(GroupElement {
            mat: self.mat.matmul(&other.mat),
        })
    }

    /// Inverse; always an integer matrix because elements are unimodular.
    pub fn inverse(&self) -> GroupElement {
        let inv = self
            .mat
            .inverse_unimodular()
            .expect("group elements are unimodular by construction");
        GroupElement { mat: inv }
    }

    /// Least k ≥ 1 with self^k = identity, or `InfiniteOrder` past the cap.
    pub fn order(&self, cap: usize) -> Result<usize, GroupError> {
        let id = GroupElement::identity(self.dim());
        let mut power = self.clone();
        for k in 1..=cap {
            if power == id {
                return Ok(k);
            }
            power = power.multiply(self)?;
        }
        Err(GroupError::InfiniteOrder(cap))
    }
}

/// Canonical element order: matrix dimension first, then the row-major
/// entry list lexicographically. Total, deterministic, and independent of
/// how the element was produced.
impl Ord for GroupElement {
    fn cmp(&self, other: &Self) -> Ordering {
        self.dim().cmp(&other.dim()).then_with(|| {
            for i in 0..self.dim() {
                for j in 0..self.dim() {
                    match self.mat.get(i, j).cmp(other.mat.get(i, j)) {
                        Ordering::Equal => {}
                        ord => return ord,
                    }
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for GroupElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugacyClass {
    /// Minimal member under the canonical element order.
    pub representative: GroupElement,
    /// Indices into the group's element list, sorted.
    pub member_indices: Vec<usize>,
}

impl ConjugacyClass {
    pub fn size(&self) -> usize {
        self.member_indices.len()
    }
}

/// A fully enumerated finite matrix group. The element list is canonical
/// (identity first, the rest sorted by the canonical element order), so two
/// enumerations of the same subgroup are structurally equal regardless of
/// the generating sets used.
#[derive(Debug)]
pub struct FiniteGroup {
    elements: Vec<GroupElement>,
    index: HashMap<GroupElement, usize>,
    inverses: Vec<usize>,
    element_orders: Vec<usize>,
    classes: Vec<ConjugacyClass>,
    class_of: Vec<usize>,
    dim: usize,
}

impl PartialEq for FiniteGroup {
    fn eq(&self, other: &Self) -> bool {
        self.elements == other.elements
    }
}
impl Eq for FiniteGroup {}

impl FiniteGroup {
    /// Breadth-first closure of the generators under multiplication.
    /// Because every element of a finite closure has finite order, closing
    /// under products alone suffices; inverses appear as powers.
    pub fn enumerate(gens: &[GroupElement], cap: usize) -> Result<FiniteGroup, GroupError> {
        let dim = gens.first().ok_or(GroupError::NoGenerators)?.dim();
        for g in gens {
            if g.dim() != dim {
                return Err(GroupError::DimensionMismatch(dim, g.dim()));
            }
        }

        let id = GroupElement::identity(dim);
        let mut seen: HashMap<GroupElement, ()> = HashMap::new();
        let mut queue = VecDeque::new();
        seen.insert(id.clone(), ());
        queue.push_back(id.clone());
        while let Some(x) = queue.pop_front() {
            for g in gens {
                let y = x.multiply(g)?;
                if !seen.contains_key(&y) {
                    if seen.len() >= cap {
                        return Err(GroupError::GroupTooLargeOrInfinite(cap));
                    }
                    seen.insert(y.clone(), ());
                    queue.push_back(y);
                }
            }
        }

        let mut elements: Vec<GroupElement> = seen.into_keys().collect();
        elements.sort();
        let pos = elements.iter().position(|e| *e == id).expect("identity in closure");
        elements.remove(pos);
        elements.insert(0, id);

        let index: HashMap<GroupElement, usize> = elements
            .iter()
            .enumerate()
            .map(|(i, e)| (e.clone(), i))
            .collect();

        let inverses: Vec<usize> = elements
            .iter()
            .map(|e| *index.get(&e.inverse()).expect("closure contains inverses"))
            .collect();

        let order = elements.len();
        let element_orders: Vec<usize> = (0..order)
            .map(|i| {
                let mut k = 1;
                let mut cur = i;
                while cur != 0 {
                    cur = index[&elements[cur].multiply(&elements[i]).unwrap()];
                    k += 1;
                }
                k
            })
            .collect();

        // Conjugacy classes as orbits of the conjugation action.
        let mut class_of = vec![usize::MAX; order];
        let mut classes: Vec<ConjugacyClass> = Vec::new();
        for start in 0..order {
            if class_of[start] != usize::MAX {
                continue;
            }
            let mut members = Vec::new();
            for g in 0..order {
                let ginv = inverses[g];
                let conj = index[&elements[ginv]
                    .multiply(&elements[start])
                    .unwrap()
                    .multiply(&elements[g])
                    .unwrap()];
                if class_of[conj] == usize::MAX {
                    class_of[conj] = usize::MAX - 1; // provisional mark
                    members.push(conj);
                }
            }
            members.sort_unstable();
            let marker = classes.len();
            for &m in &members {
                class_of[m] = marker;
            }
            // Elements past index 0 are canonically sorted, so the smallest
            // member index is the canonical representative.
            classes.push(ConjugacyClass {
                representative: elements[members[0]].clone(),
                member_indices: members,
            });
        }

        // Canonical class order: size ascending, then representative's
        // element order, then the representative itself. The identity class
        // always lands first.
        let mut perm: Vec<usize> = (0..classes.len()).collect();
        perm.sort_by(|&a, &b| {
            let ca = &classes[a];
            let cb = &classes[b];
            ca.size()
                .cmp(&cb.size())
                .then_with(|| {
                    element_orders[ca.member_indices[0]].cmp(&element_orders[cb.member_indices[0]])
                })
                .then_with(|| ca.representative.cmp(&cb.representative))
        });
        let classes: Vec<ConjugacyClass> = perm.into_iter().map(|i| classes[i].clone()).collect();
        let mut class_of = vec![usize::MAX; order];
        for (ci, c) in classes.iter().enumerate() {
            for &m in &c.member_indices {
                class_of[m] = ci;
            }
        }

        Ok(FiniteGroup {
            elements,
            index,
            inverses,
            element_orders,
            classes,
            class_of,
            dim,
        })
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn elements(&self) -> &[GroupElement] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &GroupElement {
        &self.elements[i]
    }

    pub fn classes(&self) -> &[ConjugacyClass] {
        &self.classes
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn contains(&self, e: &GroupElement) -> bool {
        self.index.contains_key(e)
    }

    pub fn index_of(&self, e: &GroupElement) -> Option<usize> {
        self.index.get(e).copied()
    }

    /// Index of the product of the elements at indices `a` and `b`.
    pub fn mult_idx(&self, a: usize, b: usize) -> usize {
        let p = self.elements[a].multiply(&self.elements[b]).unwrap();
        self.index[&p]
    }

    pub fn inverse_idx(&self, a: usize) -> usize {
        self.inverses[a]
    }

    pub fn element_order(&self, a: usize) -> usize {
        self.element_orders[a]
    }

    pub fn class_index_of(&self, e: &GroupElement) -> Option<usize> {
        self.index_of(e).map(|i| self.class_of[i])
    }

    pub fn class_of_idx(&self, i: usize) -> usize {
        self.class_of[i]
    }

    /// Element index of the canonical representative of class `c`.
    pub fn class_rep_idx(&self, c: usize) -> usize {
        self.classes[c].member_indices[0]
    }

    /// Class index of the inverse class of `c`.
    pub fn inverse_class(&self, c: usize) -> usize {
        self.class_of[self.inverses[self.classes[c].member_indices[0]]]
    }

    /// Exponent: least common multiple of the element orders.
    pub fn exponent(&self) -> usize {
        self.element_orders
            .iter()
            .fold(1usize, |acc, &k| num_integer::lcm(acc, k))
    }

    /// Multiset of irreducible degrees is not known here; this returns the
    /// multiset of class sizes, useful as isomorphism-invariant audit data.
    pub fn class_sizes(&self) -> Vec<usize> {
        self.classes.iter().map(ConjugacyClass::size).collect()
    }
}

/// True iff g⁻¹·s·g lies in `t` for every s in `s`, i.e. conjugation by the
/// witness embeds `s` into `t`.
pub fn subconjugation_embeds(
    s: &FiniteGroup,
    g: &GroupElement,
    t: &FiniteGroup,
) -> Result<bool, GroupError> {
    if s.dim() != t.dim() {
        return Err(GroupError::DimensionMismatch(s.dim(), t.dim()));
    }
    if g.dim() != s.dim() {
        return Err(GroupError::DimensionMismatch(g.dim(), s.dim()));
    }
    let ginv = g.inverse();
    for e in s.elements() {
        let conj = ginv.multiply(e)?.multiply(g)?;
        if !t.contains(&conj) {
            return Ok(false);
        }
    }
    Ok(true)
}
