//! Finite permutations on `{0, .., k-1}`.
//!
//! A [`Permutation`] is stored as its image table: entry `i` holds the image
//! of point `i`. Composition is left-to-right: `p.compose(&q)` applies `p`
//! first, then `q`, so `p.compose(&q).apply(i) == q.apply(p.apply(i))`.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::Error;

/// Largest degree [`Permutation::all`] accepts by default (8! = 40320).
pub const DEFAULT_ENUMERATION_CAP: usize = 8;

/// A bijection of `{0, .., k-1}`, stored as its image table.
///
/// Serializes as a bare JSON array of integers, e.g. `[1,2,0]`; deserializing
/// validates the bijection invariant.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "Vec<usize>", try_from = "Vec<usize>")]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    /// The identity on `{0, .., degree-1}`.
    ///
    /// Panics if `degree` is zero; degree-0 permutations are rejected as
    /// degenerate everywhere in this crate.
    pub fn identity(degree: usize) -> Permutation {
        assert!(degree >= 1, "permutation degree must be at least 1");
        Permutation {
            images: (0..degree).collect(),
        }
    }

    /// Builds a permutation from an image table, checking that it is a
    /// bijection of `0..images.len()`.
    pub fn from_images(images: Vec<usize>) -> Result<Permutation, Error> {
        if images.is_empty() {
            return Err(Error::ZeroDegree);
        }
        let mut seen = vec![false; images.len()];
        for &image in &images {
            if image >= images.len() || seen[image] {
                return Err(Error::NotBijection { images });
            }
            seen[image] = true;
        }
        Ok(Permutation { images })
    }

    /// Builds a permutation the caller guarantees to be valid.
    pub(crate) fn from_images_unchecked(images: Vec<usize>) -> Permutation {
        debug_assert!(Permutation::from_images(images.clone()).is_ok());
        Permutation { images }
    }

    /// Number of points the permutation acts on.
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// The image table.
    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// Image of a single point. Out-of-range points are a contract violation
    /// and panic.
    pub fn apply(&self, point: usize) -> usize {
        self.images[point]
    }

    /// `self` followed by `other`: `compose(p, q).apply(i) == q.apply(p.apply(i))`.
    ///
    /// Panics when the degrees differ.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(
            self.degree(),
            other.degree(),
            "cannot compose permutations of different degrees"
        );
        Permutation {
            images: self.images.iter().map(|&i| other.images[i]).collect(),
        }
    }

    /// The inverse permutation: `p.compose(&p.inverse())` is the identity.
    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.degree()];
        for (point, &image) in self.images.iter().enumerate() {
            images[image] = point;
        }
        Permutation { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &img)| i == img)
    }

    /// All `degree!` permutations in lexicographic order of image tables.
    ///
    /// Fails with [`Error::CapExceeded`] above degree [`DEFAULT_ENUMERATION_CAP`];
    /// use [`Permutation::all_with_cap`] to raise the bound.
    pub fn all(degree: usize) -> Result<Permutations, Error> {
        Permutation::all_with_cap(degree, DEFAULT_ENUMERATION_CAP)
    }

    /// As [`Permutation::all`] with an explicit degree cap.
    pub fn all_with_cap(degree: usize, cap: usize) -> Result<Permutations, Error> {
        if degree == 0 {
            return Err(Error::ZeroDegree);
        }
        if degree > cap {
            return Err(Error::CapExceeded {
                required: degree as u128,
                cap: cap as u128,
            });
        }
        Ok(Permutations {
            next: Some((0..degree).collect()),
        })
    }

    /// A seeded uniform-random permutation (Fisher-Yates over a ChaCha
    /// stream). Equal seeds give equal permutations.
    pub fn random(degree: usize, seed: u64) -> Permutation {
        assert!(degree >= 1, "permutation degree must be at least 1");
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        Permutation::shuffled(degree, &mut rng)
    }

    /// Draws one permutation from an already-seeded stream.
    pub(crate) fn shuffled(degree: usize, rng: &mut impl Rng) -> Permutation {
        let mut images: Vec<usize> = (0..degree).collect();
        for i in (1..degree).rev() {
            let j = rng.gen_range(0..=i);
            images.swap(i, j);
        }
        Permutation { images }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, image) in self.images.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{image}")?;
        }
        write!(f, "]")
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Vec<usize> {
        p.images
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;

    fn try_from(images: Vec<usize>) -> Result<Permutation, Error> {
        Permutation::from_images(images)
    }
}

/// Iterator over all permutations of a fixed degree, lexicographic by image
/// table. Yields exactly `degree!` distinct permutations.
pub struct Permutations {
    next: Option<Vec<usize>>,
}

impl Iterator for Permutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let current = self.next.take()?;
        let mut following = current.clone();
        if advance_lexicographic(&mut following) {
            self.next = Some(following);
        }
        Some(Permutation { images: current })
    }
}

/// Steps an image table to its lexicographic successor in place; returns
/// false from the final (descending) arrangement.
fn advance_lexicographic(images: &mut [usize]) -> bool {
    if images.len() < 2 {
        return false;
    }
    let mut pivot = images.len() - 1;
    while pivot > 0 && images[pivot - 1] >= images[pivot] {
        pivot -= 1;
    }
    if pivot == 0 {
        return false;
    }
    let mut swap = images.len() - 1;
    while images[swap] <= images[pivot - 1] {
        swap -= 1;
    }
    images.swap(pivot - 1, swap);
    images[pivot..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(images: &[usize]) -> Permutation {
        Permutation::from_images(images.to_vec()).unwrap()
    }

    /// Inverts an image table by brute-force search, independently of
    /// `Permutation::inverse`.
    fn brute_force_inverse(p: &Permutation) -> Vec<usize> {
        (0..p.degree())
            .map(|target| (0..p.degree()).find(|&i| p.apply(i) == target).unwrap())
            .collect()
    }

    #[test]
    fn identity_tables() {
        assert_eq!(Permutation::identity(3).images(), &[0, 1, 2]);
        assert_eq!(Permutation::identity(1).images(), &[0]);
        assert_eq!(Permutation::identity(5).apply(3), 3);
    }

    #[test]
    #[should_panic(expected = "degree must be at least 1")]
    fn identity_rejects_degree_zero() {
        Permutation::identity(0);
    }

    #[test]
    fn apply_reads_image_table() {
        let p = perm(&[1, 2, 0]);
        assert_eq!(p.apply(0), 1);
        assert_eq!(p.apply(2), 0);
        assert_eq!(p.inverse().apply(1), 0);
    }

    #[test]
    #[should_panic]
    fn apply_out_of_range_panics() {
        perm(&[1, 0]).apply(2);
    }

    #[test]
    fn compose_left_to_right() {
        let id = Permutation::identity(3);
        let cycle = perm(&[1, 2, 0]);
        assert_eq!(id.compose(&perm(&[2, 0, 1])), perm(&[2, 0, 1]));
        assert_eq!(perm(&[1, 0, 2]).compose(&perm(&[1, 0, 2])), id);
        // Pointwise by the convention: i -> cycle(cycle(i)).
        assert_eq!(cycle.compose(&cycle), perm(&[2, 0, 1]));
    }

    #[test]
    #[should_panic(expected = "different degrees")]
    fn compose_degree_mismatch_panics() {
        perm(&[1, 0]).compose(&perm(&[0, 1, 2]));
    }

    #[test]
    fn inverse_matches_brute_force() {
        assert_eq!(perm(&[0, 1, 2]).inverse(), perm(&[0, 1, 2]));
        let p = perm(&[1, 2, 0]);
        assert_eq!(p.inverse().images(), brute_force_inverse(&p).as_slice());
        assert_eq!(p.inverse(), perm(&[2, 0, 1]));
        assert_eq!(perm(&[1, 0]).inverse(), perm(&[1, 0]));
    }

    #[test]
    fn from_images_validates() {
        assert_eq!(
            Permutation::from_images(vec![]),
            Err(Error::ZeroDegree),
        );
        assert!(matches!(
            Permutation::from_images(vec![0, 0]),
            Err(Error::NotBijection { .. })
        ));
        assert!(matches!(
            Permutation::from_images(vec![1, 2]),
            Err(Error::NotBijection { .. })
        ));
    }

    #[test]
    fn enumeration_is_lexicographic_and_complete() {
        let singles: Vec<_> = Permutation::all(1).unwrap().collect();
        assert_eq!(singles, vec![perm(&[0])]);

        let threes: Vec<_> = Permutation::all(3).unwrap().collect();
        assert_eq!(threes.len(), 6);
        assert_eq!(threes.first().unwrap(), &perm(&[0, 1, 2]));
        assert_eq!(threes.last().unwrap(), &perm(&[2, 1, 0]));
        let mut sorted = threes.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted, threes, "lexicographic order, no duplicates");

        assert_eq!(Permutation::all(4).unwrap().count(), 24);
    }

    #[test]
    fn enumeration_cap() {
        assert!(matches!(
            Permutation::all(9),
            Err(Error::CapExceeded { .. })
        ));
        assert!(Permutation::all_with_cap(9, 9).is_ok());
        assert_eq!(Permutation::all(0), Err(Error::ZeroDegree));
    }

    #[test]
    fn random_is_deterministic_and_valid() {
        assert_eq!(Permutation::random(1, 7), perm(&[0]));
        for seed in 0..20 {
            let a = Permutation::random(6, seed);
            let b = Permutation::random(6, seed);
            assert_eq!(a, b);
            assert!(Permutation::from_images(a.images().to_vec()).is_ok());
        }
        assert_ne!(Permutation::random(6, 1), Permutation::random(6, 2));
    }

    #[test]
    fn serde_round_trip_and_validation() {
        let p = perm(&[1, 2, 0]);
        let json = serde_json::to_string(&p).unwrap();
        assert_eq!(json, "[1,2,0]");
        assert_eq!(serde_json::from_str::<Permutation>(&json).unwrap(), p);
        assert!(serde_json::from_str::<Permutation>("[0,0,1]").is_err());
    }
}
