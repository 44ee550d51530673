//! Explicit mutual-visibility set families and the tools around them.

mod cylinder;
pub mod fixtures;
mod insertion;
mod known;
mod lemma;
mod torus;

use std::fmt;

pub use cylinder::{
    assemble_cylinder, construct_cylinder, construct_torus_base, embed_cylinder, CylinderLayout,
};
pub use insertion::{extend_torus, extend_torus_to, insertion_plan, InsertionPlan};
pub use known::{
    cylinder_table, known_mu, torus_table, KnownValue, Source, SMALL_TORUS_THRESHOLDS,
};
pub use lemma::{lemma1_check, Lemma1Violation};
pub use torus::{
    construct_torus_square, cross_pairs, expected_cross_pairs, torus_formula, torus_restated,
};

use crate::error::{Error, Result};

/// One closed-form family, with the sizes it is proved for.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    CylinderOddT,
    CylinderEvenT,
    TorusMod0,
    TorusMod1,
    TorusMod2,
    TorusMod3,
    TorusMod4,
    TorusMod5,
}

impl Family {
    pub const ALL: [Family; 8] = [
        Family::CylinderOddT,
        Family::CylinderEvenT,
        Family::TorusMod0,
        Family::TorusMod1,
        Family::TorusMod2,
        Family::TorusMod3,
        Family::TorusMod4,
        Family::TorusMod5,
    ];

    pub fn for_torus(t: usize) -> Family {
        match t % 6 {
            0 => Family::TorusMod0,
            1 => Family::TorusMod1,
            2 => Family::TorusMod2,
            3 => Family::TorusMod3,
            4 => Family::TorusMod4,
            _ => Family::TorusMod5,
        }
    }

    pub fn for_cylinder(t: usize) -> Family {
        if t % 2 == 1 {
            Family::CylinderOddT
        } else {
            Family::CylinderEvenT
        }
    }

    pub fn is_torus(self) -> bool {
        !matches!(self, Family::CylinderOddT | Family::CylinderEvenT)
    }

    /// Smallest `t` the family covers.
    pub fn min_t(self) -> usize {
        match self {
            Family::CylinderOddT => 13,
            Family::CylinderEvenT => 14,
            Family::TorusMod0 => 18,
            Family::TorusMod1 => 19,
            Family::TorusMod2 => 20,
            Family::TorusMod3 => 15,
            Family::TorusMod4 => 22,
            Family::TorusMod5 => 17,
        }
    }

    /// Residue class and modulus of `t` for this family.
    pub fn residue(self) -> (usize, usize) {
        match self {
            Family::CylinderOddT => (1, 2),
            Family::CylinderEvenT => (0, 2),
            Family::TorusMod0 => (0, 6),
            Family::TorusMod1 => (1, 6),
            Family::TorusMod2 => (2, 6),
            Family::TorusMod3 => (3, 6),
            Family::TorusMod4 => (4, 6),
            Family::TorusMod5 => (5, 6),
        }
    }

    pub fn applies(self, t: usize) -> bool {
        let (r, m) = self.residue();
        t % m == r && t >= self.min_t()
    }

    /// Supported `t` values up to `ceiling`.
    pub fn sizes(self, ceiling: usize) -> impl Iterator<Item = usize> {
        (self.min_t()..=ceiling).filter(move |&t| self.applies(t))
    }

    pub(crate) fn require(self, t: usize) -> Result<()> {
        if self.applies(t) {
            return Ok(());
        }
        let (r, m) = self.residue();
        let what = if self.is_torus() {
            "the torus construction"
        } else {
            "the cylinder construction"
        };
        let requirement = if self.is_torus() {
            format!("t >= {} when t = {r} (mod {m})", self.min_t())
        } else {
            "t >= 13".to_string()
        };
        Err(Error::UnsupportedSize {
            what,
            t,
            requirement,
        })
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (r, m) = self.residue();
        if self.is_torus() {
            write!(f, "torus t={r} (mod {m})")
        } else {
            write!(f, "cylinder t {}", if r == 1 { "odd" } else { "even" })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn thresholds() {
        assert!(Family::TorusMod3.applies(15));
        assert!(!Family::TorusMod3.applies(9));
        assert!(!Family::TorusMod3.applies(16));
        assert_eq!(Family::for_torus(22), Family::TorusMod4);
        assert_eq!(
            Family::TorusMod5.sizes(40).collect::<Vec<_>>(),
            vec![17, 23, 29, 35]
        );
        assert!(Family::for_cylinder(13).applies(13));
        assert!(!Family::for_cylinder(12).applies(12));
        assert_eq!(
            Family::CylinderEvenT.sizes(20).collect::<Vec<_>>(),
            vec![14, 16, 18, 20]
        );
    }
}
