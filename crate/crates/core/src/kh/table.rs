use std::collections::BTreeMap;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Homology dimensions per bigrading `(i, j)`. Zero entries are not stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct RankTable {
    reduced: bool,
    entries: BTreeMap<(i32, i32), usize>,
}

impl RankTable {
    pub fn new(reduced: bool, entries: impl IntoIterator<Item = ((i32, i32), usize)>) -> Self {
        let mut map = BTreeMap::new();
        for (k, v) in entries {
            if v > 0 {
                *map.entry(k).or_insert(0) += v;
            }
        }
        RankTable { reduced, entries: map }
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn get(&self, i: i32, j: i32) -> usize {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// Nonzero entries in lexicographic `(i, j)` order.
    pub fn iter(&self) -> impl Iterator<Item = ((i32, i32), usize)> + '_ {
        self.entries.iter().map(|(&k, &v)| (k, v))
    }

    pub fn total_rank(&self) -> usize {
        self.entries.values().sum()
    }

    /// The table with every `(i, j)` sent to `(-i, -j)`.
    pub fn flipped(&self) -> Self {
        RankTable::new(self.reduced, self.iter().map(|((i, j), v)| ((-i, -j), v)))
    }

    /// The table shifted by `(di, dj)`.
    pub fn shifted(&self, di: i32, dj: i32) -> Self {
        RankTable::new(self.reduced, self.iter().map(|((i, j), v)| ((i + di, j + dj), v)))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("rank tables serialize")
    }

    pub fn from_json(s: &str) -> serde_json::Result<Self> {
        serde_json::from_str(s)
    }
}

#[derive(Serialize, Deserialize)]
struct Wire {
    reduced: bool,
    entries: Vec<(i32, i32, usize)>,
    total: usize,
}

impl Serialize for RankTable {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        Wire {
            reduced: self.reduced,
            entries: self.iter().map(|((i, j), v)| (i, j, v)).collect(),
            total: self.total_rank(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for RankTable {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let w = Wire::deserialize(d)?;
        let t = RankTable::new(w.reduced, w.entries.into_iter().map(|(i, j, v)| ((i, j), v)));
        if t.total_rank() != w.total {
            return Err(serde::de::Error::custom(format!(
                "total {} does not match the entries (sum {})",
                w.total,
                t.total_rank()
            )));
        }
        Ok(t)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_shape() {
        let t = RankTable::new(true, [((0, -2), 1), ((-3, -8), 1), ((-2, -6), 1)]);
        assert_eq!(t.to_json(), r#"{"reduced":true,"entries":[[-3,-8,1],[-2,-6,1],[0,-2,1]],"total":3}"#);
        assert_eq!(RankTable::from_json(&t.to_json()).unwrap(), t);
        assert!(RankTable::from_json(r#"{"reduced":true,"entries":[[0,0,1]],"total":2}"#).is_err());
    }

    #[test]
    fn flip_and_zeroes() {
        let t = RankTable::new(false, [((1, 3), 2), ((0, 0), 0)]);
        assert_eq!(t.iter().count(), 1);
        assert_eq!(t.flipped().get(-1, -3), 2);
        assert_eq!(t.flipped().flipped(), t);
    }
}
