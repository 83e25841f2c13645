//! Exact character tables of the enumerated finite groups, plus the
//! restriction and induction maps between representation rings that give
//! the Bredon module structure.
//!
//! Tables are computed by the standard Dixon–Burnside method: the class
//! multiplication coefficients make the class sums act on the centre of the
//! group algebra over a prime field F_p (p ≡ 1 mod exponent, p large enough
//! to make the lift unambiguous); splitting into common eigenvectors gives
//! the central characters, and a discrete Fourier sum over power maps
//! recovers each character value as an exact sum of roots of unity.

use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::cyclotomic::{common_conductor, Cyclotomic};
use crate::group::{subconjugation_embeds, FiniteGroup, GroupElement, GroupError};
use crate::modp::{find_dixon_prime, primitive_root, solve_full_col_rank, Fp, FpMatrix};
use crate::zmodule::IntegerMatrix;

#[derive(Debug, Error)]
pub enum CharError {
    #[error("no suitable prime found below the search bound")]
    PrimeSearchFailed,
    #[error("subgroup does not embed into the target by the given witness")]
    NotSubconjugate,
    #[error("characters belong to different groups")]
    GroupMismatch,
    #[error("induction produced a non-integral or negative multiplicity")]
    NonIntegralMultiplicity,
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("internal arithmetic failure: {0}")]
    Internal(String),
}

/// A class function with exact cyclotomic values, indexed by the group's
/// conjugacy classes in canonical order.
#[derive(Clone, Debug)]
pub struct Character {
    group: Arc<FiniteGroup>,
    values: Vec<Cyclotomic>,
}

impl PartialEq for Character {
    /// Mathematical equality: values are compared in a common conductor, so
    /// the same class function counts as equal however it was produced.
    fn eq(&self, other: &Self) -> bool {
        self.group == other.group
            && self.values.len() == other.values.len()
            && self
                .values
                .iter()
                .zip(&other.values)
                .all(|(a, b)| a.value_eq(b))
    }
}
impl Eq for Character {}

impl Character {
    pub fn new(group: Arc<FiniteGroup>, values: Vec<Cyclotomic>) -> Self {
        assert_eq!(values.len(), group.class_count());
        Character { group, values }
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn values(&self) -> &[Cyclotomic] {
        &self.values
    }

    pub fn value(&self, class: usize) -> &Cyclotomic {
        &self.values[class]
    }

    /// Value at the identity class.
    pub fn degree(&self) -> &Cyclotomic {
        &self.values[0]
    }

    pub fn degree_int(&self) -> Option<BigInt> {
        self.values[0].integer_value()
    }

    /// The trivial character.
    pub fn trivial(group: Arc<FiniteGroup>) -> Self {
        let e = group.exponent();
        let values = vec![Cyclotomic::one(e); group.class_count()];
        Character { group, values }
    }

    /// Character of the regular representation: |G| at the identity, 0
    /// elsewhere.
    pub fn regular(group: Arc<FiniteGroup>) -> Self {
        let e = group.exponent();
        let mut values = vec![Cyclotomic::zero(e); group.class_count()];
        values[0] = Cyclotomic::from_integer(group.order() as i64, e);
        Character { group, values }
    }
}

/// The full table of irreducible characters, in the canonical order
/// (degree ascending, then value vectors lexicographically).
#[derive(Clone, Debug)]
pub struct CharacterTable {
    group: Arc<FiniteGroup>,
    irreducibles: Vec<Character>,
}

impl CharacterTable {
    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn irreducibles(&self) -> &[Character] {
        &self.irreducibles
    }

    pub fn irreducible(&self, i: usize) -> &Character {
        &self.irreducibles[i]
    }

    pub fn len(&self) -> usize {
        self.irreducibles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.irreducibles.is_empty()
    }

    pub fn degrees(&self) -> Vec<BigInt> {
        self.irreducibles
            .iter()
            .map(|c| c.degree_int().expect("irreducible degrees are integers"))
            .collect()
    }
}

/// The induction map R_C(S) → R_C(T) along s ↦ g⁻¹sg, recorded as the
/// multiplicity matrix: entry (i, j) is the multiplicity of the j-th
/// irreducible of T in the induction of the i-th irreducible of S.
#[derive(Clone, Debug)]
pub struct InductionMatrix {
    pub source: CharacterTable,
    pub target: CharacterTable,
    pub witness: GroupElement,
    pub entries: IntegerMatrix,
}

/// Least common multiple of the element orders.
pub fn exponent(group: &FiniteGroup) -> usize {
    group.exponent()
}

/// Compute the exact character table by the Dixon–Burnside lift.
pub fn character_table(group: &Arc<FiniteGroup>) -> Result<CharacterTable, CharError> {
    let g = group.as_ref();
    let k = g.class_count();
    let n = g.order() as u64;
    let e = g.exponent();
    let p = find_dixon_prime(e as u64, n).ok_or(CharError::PrimeSearchFailed)?;
    let fp = Fp::new(p);

    let rep_idx: Vec<usize> = (0..k).map(|c| g.class_rep_idx(c)).collect();
    let sizes: Vec<u64> = g.classes().iter().map(|c| c.size() as u64).collect();
    let inv_class: Vec<usize> = (0..k).map(|c| g.inverse_class(c)).collect();

    // Class multiplication coefficients a[i][j][l]: the number of x in
    // class i with x⁻¹·z_l in class j, where z_l is the representative of
    // class l. They express products of class sums in the class-sum basis.
    let mut coeff = vec![vec![vec![0u64; k]; k]; k];
    for (l, &z) in rep_idx.iter().enumerate() {
        for (i, class) in g.classes().iter().enumerate() {
            for &x in &class.member_indices {
                let y = g.mult_idx(g.inverse_idx(x), z);
                coeff[i][g.class_of_idx(y)][l] += 1;
            }
        }
    }

    // Common eigenvectors of the class-sum action: refine subspaces by the
    // eigenspaces of each class matrix until everything is 1-dimensional.
    let mut subspaces: Vec<FpMatrix> = vec![FpMatrix::identity(k, p)];
    for class_coeff in coeff.iter().skip(1) {
        if subspaces.iter().all(|s| s.cols() == 1) {
            break;
        }
        let ni = FpMatrix::from_rows(p, class_coeff);
        let mut refined = Vec::with_capacity(k);
        for sp in subspaces {
            if sp.cols() == 1 {
                refined.push(sp);
                continue;
            }
            let image = ni.matmul(&sp);
            let restriction = solve_full_col_rank(&sp, &image)
                .ok_or_else(|| CharError::Internal("subspace not invariant".into()))?;
            let mut found = 0;
            for lambda in 0..p {
                let ns = restriction.sub_scalar_diag(lambda).nullspace();
                if ns.cols() == 0 {
                    continue;
                }
                refined.push(sp.matmul(&ns));
                found += ns.cols();
                if found == sp.cols() {
                    break;
                }
            }
            if found != sp.cols() {
                return Err(CharError::Internal(
                    "class matrix not diagonalizable over F_p".into(),
                ));
            }
        }
        subspaces = refined;
    }
    if subspaces.len() != k || subspaces.iter().any(|s| s.cols() != 1) {
        return Err(CharError::Internal("eigenspace splitting incomplete".into()));
    }

    // Normalized eigenvectors are the central characters ω: the coordinate
    // at the identity class is 1 and ω_i = |C_i|·χ(g_i)/χ(1) mod p.
    let mut omegas: Vec<Vec<u64>> = Vec::with_capacity(k);
    for sp in &subspaces {
        let v = sp.column(0);
        if v[0] == 0 {
            return Err(CharError::Internal("central character with zero lead".into()));
        }
        let inv0 = fp.inv(v[0]);
        omegas.push(v.into_iter().map(|x| fp.mul(x, inv0)).collect());
    }

    // Degrees: d² = |G| / Σ_i ω_i·ω_{i*}/|C_i| in F_p, recovered exactly
    // because d² ≤ |G| < p.
    let n_mod = n % p;
    let mut degrees = Vec::with_capacity(k);
    for w in &omegas {
        let mut t = 0u64;
        for c in 0..k {
            t = fp.add(t, fp.mul(fp.mul(w[c], w[inv_class[c]]), fp.inv(sizes[c] % p)));
        }
        if t == 0 {
            return Err(CharError::Internal("degenerate norm sum".into()));
        }
        let d2 = fp.mul(n_mod, fp.inv(t));
        let d = (d2 as f64).sqrt().round() as u64;
        if d == 0 || d * d != d2 || d * d > n {
            return Err(CharError::Internal(format!("degree lift failed: d² = {d2}")));
        }
        degrees.push(d);
    }

    // Power map: class of (representative of c)^l for 0 ≤ l < e.
    let mut power_class = vec![vec![0usize; e]; k];
    for (c, powers) in power_class.iter_mut().enumerate() {
        let mut cur = 0usize; // identity index
        for slot in powers.iter_mut() {
            *slot = g.class_of_idx(cur);
            cur = g.mult_idx(cur, rep_idx[c]);
        }
    }

    // Lift each character: the multiplicity of ζ_e^j among the eigenvalues
    // of a representing matrix at class c is a discrete Fourier sum of the
    // mod-p character values along the power map, and it is an exact
    // non-negative integer bounded by the degree.
    let root = fp.pow(primitive_root(p), (p - 1) / e as u64);
    let root_inv = fp.inv(root);
    let e_inv = fp.inv(e as u64 % p);
    let mut irreducibles = Vec::with_capacity(k);
    for (w, &d) in omegas.iter().zip(&degrees) {
        let chibar: Vec<u64> = (0..k)
            .map(|c| fp.mul(d % p, fp.mul(w[c], fp.inv(sizes[c] % p))))
            .collect();
        let mut values = Vec::with_capacity(k);
        for c in 0..k {
            let mut counts = vec![0u64; e];
            for (j, slot) in counts.iter_mut().enumerate() {
                let mut s = 0u64;
                for l in 0..e {
                    let term = fp.mul(chibar[power_class[c][l]], fp.pow(root_inv, (j * l) as u64));
                    s = fp.add(s, term);
                }
                let m = fp.mul(e_inv, s);
                if m > d {
                    return Err(CharError::Internal(format!(
                        "eigenvalue count {m} exceeds degree {d}"
                    )));
                }
                *slot = m;
            }
            if counts.iter().sum::<u64>() != d {
                return Err(CharError::Internal("eigenvalue counts do not sum to degree".into()));
            }
            values.push(Cyclotomic::from_counts(e, &counts));
        }
        irreducibles.push(Character::new(group.clone(), values));
    }

    // Canonical irreducible order: degree ascending, then the value vector.
    irreducibles.sort_by(|a, b| {
        let da = a.degree_int().expect("integral degree");
        let db = b.degree_int().expect("integral degree");
        da.cmp(&db).then_with(|| a.values.cmp(&b.values))
    });

    let sum_sq: u64 = degrees.iter().map(|d| d * d).sum();
    if sum_sq != n {
        return Err(CharError::Internal(format!(
            "degree squares sum to {sum_sq}, group order is {n}"
        )));
    }

    Ok(CharacterTable {
        group: group.clone(),
        irreducibles,
    })
}

/// (1/|G|) Σ_g a(g)·b(g⁻¹), evaluated classwise. For characters of actual
/// representations this is a non-negative rational integer.
pub fn scalar_product(a: &Character, b: &Character) -> Result<BigRational, CharError> {
    if a.group != b.group {
        return Err(CharError::GroupMismatch);
    }
    let g = a.group.as_ref();
    let mut sum = Cyclotomic::zero(1);
    for (c, class) in g.classes().iter().enumerate() {
        let term = a.values[c].mul(&b.values[g.inverse_class(c)]);
        let size = BigRational::from_integer(BigInt::from(class.size()));
        sum = sum.add(&term.scale(&size));
    }
    let scaled = sum.scale(&BigRational::new(BigInt::one(), BigInt::from(g.order())));
    scaled
        .rational_value()
        .ok_or_else(|| CharError::Internal("scalar product is not rational".into()))
}

/// Restriction of `chi` along the embedding s ↦ g⁻¹·s·g of `subgroup` into
/// chi's group.
pub fn restrict(
    chi: &Character,
    subgroup: &Arc<FiniteGroup>,
    witness: &GroupElement,
) -> Result<Character, CharError> {
    if !subconjugation_embeds(subgroup, witness, &chi.group)? {
        return Err(CharError::NotSubconjugate);
    }
    let ginv = witness.inverse();
    let mut values = Vec::with_capacity(subgroup.class_count());
    for class in subgroup.classes() {
        let conj = ginv.multiply(&class.representative)?.multiply(witness)?;
        let tc = chi
            .group
            .class_index_of(&conj)
            .ok_or_else(|| CharError::Internal("conjugate escaped the target group".into()))?;
        values.push(chi.values[tc].clone());
    }
    Ok(Character::new(subgroup.clone(), values))
}

/// Multiplicities ⟨chi, ρ_j⟩ against every irreducible of the table; each
/// must be a non-negative integer for a genuine character.
pub fn decompose(chi: &Character, table: &CharacterTable) -> Result<Vec<BigInt>, CharError> {
    table
        .irreducibles()
        .iter()
        .map(|rho| {
            let m = scalar_product(chi, rho)?;
            if !m.is_integer() || m.is_negative() {
                return Err(CharError::NonIntegralMultiplicity);
            }
            Ok(m.to_integer())
        })
        .collect()
}

/// Induction matrix computed through Frobenius reciprocity:
/// entry (i, j) = ⟨τ_i, ρ_j↓⟩ over the source group.
pub fn induction_matrix(
    source: &CharacterTable,
    witness: &GroupElement,
    target: &CharacterTable,
) -> Result<InductionMatrix, CharError> {
    if !subconjugation_embeds(&source.group, witness, &target.group)? {
        return Err(CharError::NotSubconjugate);
    }
    let restricted: Vec<Character> = target
        .irreducibles()
        .iter()
        .map(|rho| restrict(rho, &source.group, witness))
        .collect::<Result<_, _>>()?;

    let mut entries = IntegerMatrix::zero(source.len(), target.len());
    for (i, tau) in source.irreducibles().iter().enumerate() {
        for (j, rho_down) in restricted.iter().enumerate() {
            let m = scalar_product(tau, rho_down)?;
            if !m.is_integer() || m.is_negative() {
                return Err(CharError::NonIntegralMultiplicity);
            }
            entries.set(i, j, m.to_integer());
        }
    }

    // Induced degree bookkeeping: Σ_j entries(i,j)·deg(ρ_j) = [T:S]·deg(τ_i).
    let index = BigInt::from(target.group.order() / source.group.order());
    for (i, tau) in source.irreducibles().iter().enumerate() {
        let mut acc = BigInt::zero();
        for (j, rho) in target.irreducibles().iter().enumerate() {
            acc += entries.get(i, j) * rho.degree_int().expect("integral degree");
        }
        let expected = &index * tau.degree_int().expect("integral degree");
        if acc != expected {
            return Err(CharError::Internal(format!(
                "induced degree mismatch in row {i}: {acc} vs {expected}"
            )));
        }
    }

    Ok(InductionMatrix {
        source: source.clone(),
        target: target.clone(),
        witness: witness.clone(),
        entries,
    })
}

/// The classical induced-character formula, used as an independent oracle:
/// the induced value at t is (1/|S'|) Σ over x in T with x⁻¹tx in S' of the
/// transported character value, where S' = g⁻¹·S·g.
pub fn induced_character_direct(
    tau: &Character,
    witness: &GroupElement,
    target: &Arc<FiniteGroup>,
) -> Result<Character, CharError> {
    if !subconjugation_embeds(&tau.group, witness, target)? {
        return Err(CharError::NotSubconjugate);
    }
    let s = tau.group.as_ref();
    let ginv = witness.inverse();

    // Transported values on S' = g⁻¹Sg, keyed by the conjugated elements.
    let mut transported: std::collections::HashMap<GroupElement, &Cyclotomic> =
        std::collections::HashMap::with_capacity(s.order());
    for (i, elem) in s.elements().iter().enumerate() {
        let moved = ginv.multiply(elem)?.multiply(witness)?;
        transported.insert(moved, &tau.values[s.class_of_idx(i)]);
    }

    let weight = BigRational::new(BigInt::one(), BigInt::from(s.order()));
    let mut values = Vec::with_capacity(target.class_count());
    for class in target.classes() {
        let t_el = &class.representative;
        let mut sum = Cyclotomic::zero(1);
        for x in target.elements() {
            let conj = x.inverse().multiply(t_el)?.multiply(x)?;
            if let Some(v) = transported.get(&conj) {
                sum = sum.add(v);
            }
        }
        values.push(sum.scale(&weight));
    }
    Ok(Character::new(target.clone(), values))
}

/// Lift values of characters in a table to a common conductor before
/// comparing them entrywise; useful in tests that match printed tables.
pub fn values_at_common_conductor(a: &Character, b: &Character) -> Vec<(Cyclotomic, Cyclotomic)> {
    a.values
        .iter()
        .zip(&b.values)
        .map(|(x, y)| common_conductor(x, y))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::FiniteGroup;
    use crate::test_elements::gen;

    fn enumerate(names: &[&str]) -> Arc<FiniteGroup> {
        let gens: Vec<GroupElement> = names.iter().map(|n| gen(n)).collect();
        Arc::new(FiniteGroup::enumerate(&gens, 20000).unwrap())
    }

    fn rat(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    #[test]
    fn c2_table_values() {
        let c2 = enumerate(&["g2"]);
        let t = character_table(&c2).unwrap();
        assert_eq!(t.len(), 2);
        let vals: Vec<Vec<BigInt>> = t
            .irreducibles()
            .iter()
            .map(|chi| chi.values().iter().map(|v| v.integer_value().unwrap()).collect())
            .collect();
        assert!(vals.contains(&vec![BigInt::from(1), BigInt::from(1)]));
        assert!(vals.contains(&vec![BigInt::from(1), BigInt::from(-1)]));
    }

    #[test]
    fn s4_degrees() {
        let s4 = enumerate(&["g2", "g3"]);
        let t = character_table(&s4).unwrap();
        let degrees: Vec<BigInt> = t.degrees();
        assert_eq!(degrees, [1, 1, 2, 3, 3].map(BigInt::from).to_vec());
    }

    #[test]
    fn d4_has_a_two_dimensional_character_vanishing_on_reflections() {
        let d4 = enumerate(&["g6", "g8"]);
        assert_eq!(d4.order(), 8);
        let t = character_table(&d4).unwrap();
        assert_eq!(t.degrees(), [1, 1, 1, 1, 2].map(BigInt::from).to_vec());
        let phi = t.irreducible(4);
        for name in ["g6", "g8"] {
            let c = d4.class_index_of(&gen(name)).unwrap();
            assert!(phi.value(c).is_zero(), "expected 0 at the class of {name}");
        }
    }

    #[test]
    fn trivial_group_table() {
        let id = GroupElement::identity(3);
        let g = Arc::new(FiniteGroup::enumerate(&[id], 10).unwrap());
        let t = character_table(&g).unwrap();
        assert_eq!(t.len(), 1);
        assert_eq!(t.degrees(), vec![BigInt::one()]);
    }

    #[test]
    fn tables_are_orthonormal() {
        for names in [vec!["g2"], vec!["g2", "g5"], vec!["g6", "g10"], vec!["g2", "g3"]] {
            let g = enumerate(&names);
            let t = character_table(&g).unwrap();
            for (i, a) in t.irreducibles().iter().enumerate() {
                for (j, b) in t.irreducibles().iter().enumerate() {
                    let s = scalar_product(a, b).unwrap();
                    assert_eq!(s, rat((i == j) as i64), "classes {names:?} ({i},{j})");
                }
            }
        }
    }

    #[test]
    fn dixon_is_deterministic() {
        let g1 = enumerate(&["g2", "g3"]);
        let t1 = character_table(&g1).unwrap();
        let t2 = character_table(&g1).unwrap();
        for (a, b) in t1.irreducibles().iter().zip(t2.irreducibles()) {
            assert_eq!(a, b);
        }
    }

    #[test]
    fn regular_character_decomposes_with_degree_multiplicities() {
        let c2 = enumerate(&["g2"]);
        let t = character_table(&c2).unwrap();
        let reg = Character::regular(c2.clone());
        for rho in t.irreducibles() {
            assert_eq!(
                scalar_product(&reg, rho).unwrap(),
                BigRational::from_integer(rho.degree_int().unwrap())
            );
        }
    }

    #[test]
    fn restriction_to_self_is_identity() {
        let d2 = enumerate(&["g2", "g5"]);
        let t = character_table(&d2).unwrap();
        let id = GroupElement::identity(3);
        for chi in t.irreducibles() {
            let r = restrict(chi, &d2, &id).unwrap();
            assert_eq!(&r, chi);
        }
    }

    #[test]
    fn restriction_from_d3_along_conjugated_involution() {
        // g2 = g10·g6·g10 lies in <g6, g10>; restricting the degree-2
        // character gives values (2, 0) on <g2>.
        let d3 = enumerate(&["g6", "g10"]);
        let c2 = enumerate(&["g2"]);
        let t = character_table(&d3).unwrap();
        let phi = t.irreducible(2);
        assert_eq!(phi.degree_int().unwrap(), BigInt::from(2));
        let down = restrict(phi, &c2, &GroupElement::identity(3)).unwrap();
        let vals: Vec<BigInt> = down.values().iter().map(|v| v.integer_value().unwrap()).collect();
        assert_eq!(vals, vec![BigInt::from(2), BigInt::zero()]);
        // and pairing with the trivial character of C2 gives 1
        let s = scalar_product(&down, &Character::trivial(c2.clone())).unwrap();
        assert_eq!(s, rat(1));
    }

    #[test]
    fn induction_from_trivial_group_is_regular() {
        let triv = Arc::new(FiniteGroup::enumerate(&[GroupElement::identity(3)], 10).unwrap());
        let c2 = enumerate(&["g2"]);
        let ts = character_table(&triv).unwrap();
        let tt = character_table(&c2).unwrap();
        let ind = induction_matrix(&ts, &GroupElement::identity(3), &tt).unwrap();
        assert_eq!(ind.entries, IntegerMatrix::from_i64(1, 2, &[1, 1]));

        let direct =
            induced_character_direct(ts.irreducible(0), &GroupElement::identity(3), &c2).unwrap();
        assert_eq!(direct, Character::regular(c2.clone()));
    }

    #[test]
    fn induction_to_self_is_identity_matrix() {
        let c2 = enumerate(&["g2"]);
        let t = character_table(&c2).unwrap();
        let ind = induction_matrix(&t, &GroupElement::identity(3), &t).unwrap();
        assert!(ind.entries.is_identity());
    }

    #[test]
    fn induction_rejects_bad_witness() {
        let s = enumerate(&["g5"]);
        let t = enumerate(&["g6", "g8"]);
        let ts = character_table(&s).unwrap();
        let tt = character_table(&t).unwrap();
        assert!(matches!(
            induction_matrix(&ts, &GroupElement::identity(3), &tt),
            Err(CharError::NotSubconjugate)
        ));
        // with the right witness it works
        assert!(induction_matrix(&ts, &gen("q2"), &tt).is_ok());
    }

    #[test]
    fn frobenius_reciprocity_agrees_with_direct_induction() {
        // C2 = <g2> inside D2 = <g2, g5>
        let s = enumerate(&["g2"]);
        let t = enumerate(&["g2", "g5"]);
        let ts = character_table(&s).unwrap();
        let tt = character_table(&t).unwrap();
        let id = GroupElement::identity(3);
        let ind = induction_matrix(&ts, &id, &tt).unwrap();
        for (i, tau) in ts.irreducibles().iter().enumerate() {
            let direct = induced_character_direct(tau, &id, &t).unwrap();
            let mults = decompose(&direct, &tt).unwrap();
            for (j, m) in mults.iter().enumerate() {
                assert_eq!(ind.entries.get(i, j), m);
            }
        }
        // inducing along the identity into the same group changes nothing
        for tau in ts.irreducibles() {
            assert_eq!(&induced_character_direct(tau, &id, &s).unwrap(), tau);
        }
    }

    #[test]
    fn scalar_product_requires_same_group() {
        let a = Character::trivial(enumerate(&["g2"]));
        let b = Character::trivial(enumerate(&["g5"]));
        assert!(matches!(scalar_product(&a, &b), Err(CharError::GroupMismatch)));
    }

    #[test]
    fn cyclic_three_table_has_primitive_cube_roots() {
        // <[[0,-1],[1,-1]]> has order 3; two of the three linear characters
        // take genuinely irrational values, cube roots of unity
        let g = GroupElement::from_flat(2, &[0, -1, 1, -1]).unwrap();
        let c3 = Arc::new(FiniteGroup::enumerate(&[g], 100).unwrap());
        assert_eq!(c3.order(), 3);
        let t = character_table(&c3).unwrap();
        assert_eq!(t.degrees(), vec![BigInt::one(); 3]);
        let mut irrational = 0;
        for chi in t.irreducibles() {
            for v in chi.values() {
                if !v.is_rational() {
                    irrational += 1;
                    // a linear character value is a root of unity: v³ = 1
                    assert_eq!(
                        v.mul(v).mul(v).integer_value(),
                        Some(BigInt::one()),
                        "value {v} should cube to 1"
                    );
                }
            }
        }
        assert_eq!(irrational, 4, "two characters with two irrational values each");
        for (i, a) in t.irreducibles().iter().enumerate() {
            for (j, b) in t.irreducibles().iter().enumerate() {
                assert_eq!(scalar_product(a, b).unwrap(), rat((i == j) as i64));
            }
        }
    }

    #[test]
    fn cyclic_four_table_contains_i() {
        // <[[0,-1],[1,0]]> is cyclic of order 4; the faithful characters
        // take the value ±i = ±ζ₄ on the generator's class
        let g = GroupElement::from_flat(2, &[0, -1, 1, 0]).unwrap();
        let c4 = Arc::new(FiniteGroup::enumerate(&[g.clone()], 100).unwrap());
        assert_eq!(c4.order(), 4);
        let t = character_table(&c4).unwrap();
        assert_eq!(t.degrees(), vec![BigInt::one(); 4]);
        let gen_class = c4.class_index_of(&g).unwrap();
        let i_value = Cyclotomic::root_of_unity(4, 1);
        let minus_i = Cyclotomic::root_of_unity(4, 3);
        let faithful = t
            .irreducibles()
            .iter()
            .filter(|chi| {
                chi.value(gen_class).value_eq(&i_value) || chi.value(gen_class).value_eq(&minus_i)
            })
            .count();
        assert_eq!(faithful, 2);
    }

    #[test]
    fn cyclic_five_table_from_companion_matrix() {
        // 4x4 companion matrix of 1 + x + x² + x³ + x⁴ has order 5; the
        // character values are fifth roots of unity and the lift must
        // recover them exactly at conductor 5
        let g = GroupElement::from_flat(
            4,
            &[
                0, 0, 0, -1, //
                1, 0, 0, -1, //
                0, 1, 0, -1, //
                0, 0, 1, -1,
            ],
        )
        .unwrap();
        let c5 = Arc::new(FiniteGroup::enumerate(&[g], 100).unwrap());
        assert_eq!(c5.order(), 5);
        assert_eq!(c5.exponent(), 5);
        let t = character_table(&c5).unwrap();
        assert_eq!(t.degrees(), vec![BigInt::one(); 5]);
        for (i, a) in t.irreducibles().iter().enumerate() {
            for (j, b) in t.irreducibles().iter().enumerate() {
                assert_eq!(scalar_product(a, b).unwrap(), rat((i == j) as i64));
            }
            // every value is a fifth root of unity
            for v in a.values() {
                let mut pow = v.clone();
                for _ in 0..4 {
                    pow = pow.mul(v);
                }
                assert_eq!(pow.integer_value(), Some(BigInt::one()));
            }
        }
        // the four non-trivial characters have no rational value off the
        // identity class
        let nontrivial_rational = t
            .irreducibles()
            .iter()
            .filter(|chi| chi.values()[1..].iter().all(Cyclotomic::is_rational))
            .count();
        assert_eq!(nontrivial_rational, 1, "only the trivial character is rational");
    }
}
