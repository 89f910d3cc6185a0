//! The bundled table of published ranks used by `tables --check`.

use serde::Deserialize;

use mlv_core::relations::RelationFamily;

/// Fixture format understood by this build.
const FORMAT_VERSION: u32 = 1;

const PUBLISHED: &str = include_str!("../fixtures/published_ranks.json");

/// One modulus' row block.
#[derive(Debug, Deserialize)]
pub struct Table {
    /// Modulus.
    pub r: u32,
    /// Weight of the first column.
    pub first_weight: usize,
    /// Derivation-family ranks; `None` where unpublished.
    pub deriv: Vec<Option<usize>>,
    /// Extended-family ranks.
    pub ext: Vec<Option<usize>>,
    /// Linear-family ranks.
    pub lin: Vec<Option<usize>>,
    /// Number of admissible index sets.
    pub index_sets: Vec<usize>,
}

/// The whole fixture.
#[derive(Debug, Deserialize)]
pub struct Published {
    /// Fixture format version.
    pub version: u32,
    /// Per-modulus tables.
    pub tables: Vec<Table>,
}

impl Published {
    /// Parse the bundled fixture.
    pub fn load() -> Published {
        let p: Published = serde_json::from_str(PUBLISHED).expect("bundled fixture is valid JSON");
        assert_eq!(p.version, FORMAT_VERSION, "bundled fixture has an unknown format version");
        p
    }

    fn column(&self, r: u32, weight: usize) -> Option<(&Table, usize)> {
        let t = self.tables.iter().find(|t| t.r == r)?;
        let i = weight.checked_sub(t.first_weight)?;
        (i < t.index_sets.len()).then_some((t, i))
    }

    /// Published rank of a cell, if any.
    pub fn rank(&self, family: RelationFamily, r: u32, weight: usize) -> Option<usize> {
        let (t, i) = self.column(r, weight)?;
        match family {
            RelationFamily::Deriv => t.deriv[i],
            RelationFamily::Ext => t.ext[i],
            RelationFamily::Lin => t.lin[i],
        }
    }

    /// Published number of admissible index sets, if any.
    pub fn index_sets(&self, r: u32, weight: usize) -> Option<usize> {
        let (t, i) = self.column(r, weight)?;
        Some(t.index_sets[i])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixture_shape() {
        let p = Published::load();
        assert_eq!(p.version, 1);
        for t in &p.tables {
            let n = t.index_sets.len();
            assert!(t.deriv.len() == n && t.ext.len() == n && t.lin.len() == n, "r={}", t.r);
        }
        assert_eq!(p.rank(RelationFamily::Deriv, 1, 10), Some(181));
        assert_eq!(p.rank(RelationFamily::Ext, 1, 14), None);
        assert_eq!(p.rank(RelationFamily::Lin, 2, 7), Some(468));
        assert_eq!(p.rank(RelationFamily::Lin, 7, 3), None);
        assert_eq!(p.index_sets(6, 4), Some(1764));
        assert_eq!(p.index_sets(6, 5), None);
    }
}
