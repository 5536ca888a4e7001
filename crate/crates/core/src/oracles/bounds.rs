use serde::Serialize;

use crate::error::{Error, Result};

/// Known lower and upper bounds on `alpha(k, r)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundsRecord {
    pub k: usize,
    pub r: usize,
    pub lower: usize,
    pub upper: usize,
    pub exact: Option<usize>,
    /// Short tags naming the results behind each value.
    pub source: Vec<&'static str>,
}

impl BoundsRecord {
    pub fn source_label(&self) -> String {
        self.source.join(";")
    }
}

pub fn bounds_table(k: usize, r: usize) -> Result<BoundsRecord> {
    if r < 3 || k < r {
        return Err(Error::input(format!("need k >= r >= 3, got k = {k}, r = {r}")));
    }
    let mut source = vec!["lower:transversal-degree"];
    let mut lower = k * (2 * r - 4);
    if k == r && r >= 4 && r * (2 * r - 4) + 1 > lower {
        lower = r * (2 * r - 4) + 1;
        source.push("lower:diagonal");
    }
    if (k, r) == (5, 5) && 33 > lower {
        lower = 33;
        source.push("lower:special-vertices");
    }
    let upper = if k <= 2 * r - 3 {
        source.push("upper:inductive-beta2");
        (k - 1) * (4 * r - k - 6)
    } else {
        source.push("upper:cycle-power");
        (k - 1) * (2 * r - 3)
    };
    let exact = if r == 3 {
        source.push("exact:triangle");
        Some(3 * (k - 1))
    } else if (k, r) == (4, 4) {
        source.push("exact:special-vertices");
        Some(18)
    } else if k == 2 * r - 3 {
        source.push("exact:bounds-meet");
        Some(k * (2 * r - 4))
    } else if k >= 2 * r - 2 && r % 2 == 0 {
        source.push("exact:gadget-p2");
        Some(k * (2 * r - 4))
    } else if k >= 2 * r - 1 && r % 3 == 2 {
        source.push("exact:gadget-p3");
        Some(k * (2 * r - 4))
    } else {
        None
    };
    debug_assert!(lower <= upper);
    debug_assert!(exact.map_or(true, |e| lower <= e && e <= upper));
    Ok(BoundsRecord {
        k,
        r,
        lower,
        upper,
        exact,
        source,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn listed_cells() {
        let b = bounds_table(6, 4).unwrap();
        assert_eq!((b.lower, b.upper, b.exact), (24, 25, Some(24)));
        let b = bounds_table(5, 5).unwrap();
        assert_eq!((b.lower, b.upper, b.exact), (33, 36, None));
        let b = bounds_table(8, 5).unwrap();
        assert_eq!((b.lower, b.upper, b.exact), (48, 49, None));
        let b = bounds_table(3, 3).unwrap();
        assert_eq!(b.exact, Some(6));
        assert!(bounds_table(3, 4).is_err());
    }
}
