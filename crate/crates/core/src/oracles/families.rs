//! Intersecting families `C_1, ..., C_{m-2}` of subsets of `[m]` such that a
//! subset `I` lies in exactly `0` of them when `I` is empty, `|I| - 1` when `I`
//! is proper, and `m - 2` when `I = [m]`.
//!
//! Subsets are bitmasks: element `j` of `[m]` is bit `j - 1`.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyCollection {
    pub m: usize,
    /// Each family is sorted and free of duplicates.
    pub families: Vec<Vec<u32>>,
}

impl FamilyCollection {
    /// Members of family `j` (0-based) as sorted lists of elements of `[m]`.
    pub fn family_sets(&self, j: usize) -> Vec<Vec<usize>> {
        self.families[j].iter().map(|&s| mask_elements(s)).collect()
    }
}

pub fn mask_elements(s: u32) -> Vec<usize> {
    (0..32).filter(|b| s >> b & 1 == 1).map(|b| b + 1).collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilyViolation {
    FamilyCount { expected: usize, found: usize },
    OutsideGroundSet { family: usize, member: u32 },
    /// Two members (possibly the same one) are disjoint.
    NotIntersecting { family: usize, a: u32, b: u32 },
    Count { subset: u32, expected: usize, found: usize },
}

impl fmt::Display for FamilyViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilyViolation::FamilyCount { expected, found } => {
                write!(f, "expected {expected} families, found {found}")
            }
            FamilyViolation::OutsideGroundSet { family, member } => {
                write!(f, "family {family} has member {:?} outside the ground set", mask_elements(member))
            }
            FamilyViolation::NotIntersecting { family, a, b } => write!(
                f,
                "family {family} has disjoint members {:?} and {:?}",
                mask_elements(a),
                mask_elements(b)
            ),
            FamilyViolation::Count { subset, expected, found } => write!(
                f,
                "subset {:?} lies in {found} families, expected {expected}",
                mask_elements(subset)
            ),
        }
    }
}

pub fn families_generate(m: usize) -> Result<FamilyCollection> {
    if !(3..=31).contains(&m) {
        return Err(Error::input(format!("m must be in 3..=31, got {m}")));
    }
    let mut families: Vec<Vec<u32>> = vec![vec![0b011, 0b110, 0b101, 0b111]];
    for size in 4..=m {
        let top = 1u32 << (size - 1);
        let mut next: Vec<Vec<u32>> = families
            .iter()
            .map(|c| c.iter().flat_map(|&s| [s, s | top]).collect())
            .collect();
        let mut last: Vec<u32> = (0..top).map(|s| s | top).filter(|s| s.count_ones() >= 2).collect();
        last.push(top - 1);
        next.push(last);
        families = next;
    }
    for f in &mut families {
        f.sort_unstable();
        f.dedup();
    }
    Ok(FamilyCollection { m, families })
}

/// Checks every family is intersecting and the membership count of every
/// subset of `[m]`.
pub fn families_verify(fc: &FamilyCollection) -> Result<(), FamilyViolation> {
    let m = fc.m;
    let expected_families = m.saturating_sub(2);
    if fc.families.len() != expected_families {
        return Err(FamilyViolation::FamilyCount {
            expected: expected_families,
            found: fc.families.len(),
        });
    }
    let full = if m >= 32 { u32::MAX } else { (1u32 << m) - 1 };
    for (j, fam) in fc.families.iter().enumerate() {
        for (ai, &a) in fam.iter().enumerate() {
            if a & !full != 0 {
                return Err(FamilyViolation::OutsideGroundSet { family: j, member: a });
            }
            for &b in &fam[ai..] {
                if a & b == 0 {
                    return Err(FamilyViolation::NotIntersecting { family: j, a, b });
                }
            }
        }
    }
    let mut counts = vec![0usize; 1 << m];
    for fam in &fc.families {
        let mut members = fam.clone();
        members.sort_unstable();
        members.dedup();
        for s in members {
            counts[s as usize] += 1;
        }
    }
    for subset in 0..=full {
        let size = subset.count_ones() as usize;
        let expected = match size {
            0 => 0,
            s if s == m => m - 2,
            s => s - 1,
        };
        let found = counts[subset as usize];
        if found != expected {
            return Err(FamilyViolation::Count { subset, expected, found });
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn base_case() {
        let fc = families_generate(3).unwrap();
        assert_eq!(fc.families.len(), 1);
        assert_eq!(fc.family_sets(0), vec![vec![1, 2], vec![1, 3], vec![2, 3], vec![1, 2, 3]]);
        assert_eq!(families_verify(&fc), Ok(()));
    }

    #[test]
    fn empty_member_breaks_intersection() {
        let mut fc = families_generate(5).unwrap();
        fc.families[1] = vec![0];
        assert!(matches!(families_verify(&fc), Err(FamilyViolation::NotIntersecting { family: 1, .. })));
    }

    #[test]
    fn missing_member_is_reported() {
        let mut fc = families_generate(4).unwrap();
        let dropped = fc.families[1].remove(0);
        assert_eq!(
            families_verify(&fc),
            Err(FamilyViolation::Count {
                subset: dropped,
                expected: dropped.count_ones() as usize - 1,
                found: dropped.count_ones() as usize - 2
            })
        );
    }

    #[test]
    fn rejects_small_m() {
        assert!(families_generate(2).is_err());
    }
}
