use serde::{Deserialize, Serialize};

use super::{HomSet, Tables, TwoObjectCategory};
use crate::error::Result;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub struct HomSets {
    pub a: HomSet,
    pub l: HomSet,
    pub r: HomSet,
    pub g: HomSet,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub struct Sizes {
    pub a: usize,
    pub l: usize,
    pub r: usize,
    pub g: usize,
}

/// Serialized form of a [`TwoObjectCategory`]. Field order is fixed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CategoryJson {
    pub sizes: Sizes,
    pub unit_a: usize,
    pub unit_g: usize,
    pub homs: HomSets,
    pub tables: Tables,
}

impl TwoObjectCategory {
    pub fn to_json(&self) -> CategoryJson {
        let (a, l, r, g) = self.sizes();
        CategoryJson {
            sizes: Sizes { a, l, r, g },
            unit_a: self.unit_a,
            unit_g: self.unit_g,
            homs: HomSets { a: self.a.clone(), l: self.l.clone(), r: self.r.clone(), g: self.g.clone() },
            tables: self.tables.clone(),
        }
    }

    /// Rebuilds and validates. The `sizes` block is informational and must
    /// agree with the hom-sets.
    pub fn from_json(json: CategoryJson) -> Result<Self> {
        let c = Self::new([json.homs.a, json.homs.l, json.homs.r, json.homs.g], json.unit_a, json.unit_g, json.tables)?;
        let (a, l, r, g) = c.sizes();
        if json.sizes != (Sizes { a, l, r, g }) {
            return Err(crate::error::Error::InvalidCategory("sizes block disagrees with hom-sets".into()));
        }
        Ok(c)
    }

    /// Loads without any validation. Call [`TwoObjectCategory::check`] before
    /// composing elements: malformed tables can index out of bounds.
    pub fn from_json_unchecked(json: CategoryJson) -> Self {
        Self {
            a: json.homs.a,
            l: json.homs.l,
            r: json.homs.r,
            g: json.homs.g,
            unit_a: json.unit_a,
            unit_g: json.unit_g,
            tables: json.tables,
        }
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(&self.to_json()).expect("plain data serializes")
    }

    pub fn from_json_str(text: &str) -> Result<Self> {
        Self::from_json(serde_json::from_str(text)?)
    }
}
