//! Equivariant K-homology from Bredon homology: the low-degree collapse of
//! the Atiyah–Hirzebruch spectral sequence, and the Künneth formula for
//! direct products of groups.

use std::fmt;

use crate::group::FiniteGroup;
use crate::zmodule::{tensor, tor, FgAbelianGroup};

/// A graded family of finitely generated abelian groups with finite
/// support; trailing trivial entries are normalized away.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedHomology {
    groups: Vec<FgAbelianGroup>,
}

impl GradedHomology {
    pub fn new(mut groups: Vec<FgAbelianGroup>) -> Self {
        while groups.last().is_some_and(FgAbelianGroup::is_trivial) {
            groups.pop();
        }
        GradedHomology { groups }
    }

    /// The group in degree `i` (trivial beyond the support).
    pub fn group(&self, i: usize) -> FgAbelianGroup {
        self.groups.get(i).cloned().unwrap_or_else(FgAbelianGroup::trivial)
    }

    pub fn groups(&self) -> &[FgAbelianGroup] {
        &self.groups
    }

    /// One past the last nonzero degree.
    pub fn support_len(&self) -> usize {
        self.groups.len()
    }
}

impl fmt::Display for GradedHomology {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.groups.is_empty() {
            return write!(f, "H* = 0");
        }
        let parts: Vec<String> = self
            .groups
            .iter()
            .enumerate()
            .map(|(i, g)| format!("H{i} = {g}"))
            .collect();
        write!(f, "{}", parts.join("; "))
    }
}

/// Outcome of the spectral-sequence collapse: either both K-groups are
/// forced, or the input has homology in degrees ≥ 2 and this tool does not
/// chase differentials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum KTheoryResult {
    Determined {
        k0: FgAbelianGroup,
        k1: FgAbelianGroup,
    },
    Indeterminate {
        /// Degrees ≥ 2 with nonzero homology, smallest first.
        nonzero_degrees: Vec<usize>,
    },
}

impl KTheoryResult {
    pub fn is_determined(&self) -> bool {
        matches!(self, KTheoryResult::Determined { .. })
    }
}

/// If the homology vanishes in degrees ≥ 2, the spectral sequence
/// degenerates and K₀, K₁ are read off from H₀, H₁.
pub fn ahss_collapse(homology: &GradedHomology) -> KTheoryResult {
    let offending: Vec<usize> = homology
        .groups()
        .iter()
        .enumerate()
        .skip(2)
        .filter(|(_, g)| !g.is_trivial())
        .map(|(i, _)| i)
        .collect();
    if offending.is_empty() {
        KTheoryResult::Determined {
            k0: homology.group(0),
            k1: homology.group(1),
        }
    } else {
        KTheoryResult::Indeterminate {
            nonzero_degrees: offending,
        }
    }
}

/// Künneth formula for a direct product: degree n is
/// ⊕_{i+j=n} Hᵢ⊗Hⱼ ⊕ ⊕_{i+j=n−1} Tor(Hᵢ, Hⱼ). The sequence splits, so
/// the abstract isomorphism type is the direct sum of the two ends.
pub fn kunneth(a: &GradedHomology, b: &GradedHomology) -> GradedHomology {
    let (la, lb) = (a.support_len(), b.support_len());
    if la == 0 || lb == 0 {
        return GradedHomology::new(Vec::new());
    }
    let mut out = Vec::with_capacity(la + lb);
    for n in 0..la + lb {
        let mut acc = FgAbelianGroup::trivial();
        for i in 0..=n {
            let j = n - i;
            if i < la && j < lb {
                acc = acc.direct_sum(&tensor(&a.group(i), &b.group(j)));
            }
        }
        if n >= 1 {
            for i in 0..n {
                let j = n - 1 - i;
                if i < la && j < lb {
                    acc = acc.direct_sum(&tor(&a.group(i), &b.group(j)));
                }
            }
        }
        out.push(acc);
    }
    GradedHomology::new(out)
}

/// A finite group acts properly on a point, so its Bredon homology is the
/// representation ring concentrated in degree 0: free of rank the number of
/// conjugacy classes.
pub fn finite_group_homology(group: &FiniteGroup) -> GradedHomology {
    GradedHomology::new(vec![FgAbelianGroup::free(group.class_count())])
}
