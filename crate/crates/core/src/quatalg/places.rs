//! Places of the base field as they appear in ramification sets.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::numfield::{place_labels, places_above, LocalPlace, NumberField};

/// A place of the base field. Complex places never appear: a quaternion
/// algebra cannot ramify there.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Place {
    /// A real embedding, indexed in increasing order of the embedded
    /// generator (index 0 is the only real place over Q).
    RealEmbedding { index: u32 },
    /// A finite place of Q.
    RationalPrime { p: u64 },
    /// A finite place of a quadratic or monogenic field.
    Finite(LocalPlace),
}

impl Place {
    pub fn is_finite(&self) -> bool {
        !matches!(self, Place::RealEmbedding { .. })
    }

    /// Norm of the associated prime ideal (the prime itself over Q).
    pub fn ideal_norm(&self) -> Option<u128> {
        match self {
            Place::RealEmbedding { .. } => None,
            Place::RationalPrime { p } => Some(*p as u128),
            Place::Finite(lp) => Some(lp.norm()),
        }
    }

    pub fn residue_degree(&self) -> Option<u32> {
        match self {
            Place::RealEmbedding { .. } => None,
            Place::RationalPrime { .. } => Some(1),
            Place::Finite(lp) => Some(lp.f),
        }
    }
}

/// Display label for a place: `inf`/`inf1` for real embeddings, `p<n>` for
/// rational primes, and the sibling-aware labels (`p3`, `p3bar`, ...) for
/// finite places of number fields.
pub fn place_label(field: &NumberField, place: &Place) -> String {
    match place {
        Place::RealEmbedding { index: 0 } => "inf".into(),
        Place::RealEmbedding { index } => format!("inf{index}"),
        Place::RationalPrime { p } => format!("p{p}"),
        Place::Finite(lp) => {
            let siblings = places_above(field, lp.p);
            let labels = place_labels(&siblings);
            siblings
                .iter()
                .position(|s| s == lp)
                .map(|i| labels[i].clone())
                .unwrap_or_else(|| format!("p{}?", lp.p))
        }
    }
}

/// The set of ramified places of a quaternion algebra: finite, of even
/// cardinality, and free of complex places.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct RamificationSet {
    places: Vec<Place>,
}

impl RamificationSet {
    /// Builds a set, sorting and deduplicating.
    pub fn new(mut places: Vec<Place>) -> Self {
        places.sort();
        places.dedup();
        RamificationSet { places }
    }

    pub fn empty() -> Self {
        RamificationSet::default()
    }

    pub fn places(&self) -> &[Place] {
        &self.places
    }

    pub fn len(&self) -> usize {
        self.places.len()
    }

    pub fn is_empty(&self) -> bool {
        self.places.is_empty()
    }

    pub fn contains(&self, place: &Place) -> bool {
        self.places.binary_search(place).is_ok()
    }

    pub fn finite_places(&self) -> impl Iterator<Item = &Place> {
        self.places.iter().filter(|p| p.is_finite())
    }

    pub fn infinite_places(&self) -> impl Iterator<Item = &Place> {
        self.places.iter().filter(|p| !p.is_finite())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn set_normalizes_order_and_duplicates() {
        let s = RamificationSet::new(alloc::vec![
            Place::RationalPrime { p: 5 },
            Place::RealEmbedding { index: 0 },
            Place::RationalPrime { p: 5 },
            Place::RationalPrime { p: 2 },
        ]);
        assert_eq!(s.len(), 3);
        assert_eq!(s.places()[0], Place::RealEmbedding { index: 0 });
        assert_eq!(s.infinite_places().count(), 1);
        assert_eq!(s.finite_places().count(), 2);
    }
}
