//! Antichain and LYM checks for set families over `0..m`.

use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::combinatorics::binomial;
use crate::set::VertexSet;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LymReport {
    pub is_antichain: bool,
    /// `sum_k |A_k| / C(m, k)` over the layers of the family.
    pub lym_sum: BigRational,
    /// `|A| <= m^s` where `s` is the largest member size.
    pub within_power_bound: bool,
}

/// Whether no member of `family` strictly contains another; duplicates count
/// as containment.
pub fn is_antichain(family: &[VertexSet]) -> bool {
    family
        .iter()
        .enumerate()
        .all(|(i, a)| family.iter().enumerate().all(|(j, b)| i == j || !a.is_subset(b)))
}

/// Members that are maximal under inclusion, deduplicated, in first-seen order.
pub fn maximal_members(family: &[VertexSet]) -> Vec<VertexSet> {
    let mut out: Vec<VertexSet> = Vec::new();
    for (i, a) in family.iter().enumerate() {
        let dominated = family
            .iter()
            .enumerate()
            .any(|(j, b)| i != j && a.is_subset(b) && (a != b || j < i));
        if !dominated {
            out.push(a.clone());
        }
    }
    out
}

pub fn lym_check(family: &[VertexSet], m: usize) -> LymReport {
    assert!(
        family.iter().all(|a| a.bound() <= m),
        "family member outside 0..{m}"
    );
    let mut layers = alloc::vec![0u64; m + 1];
    for a in family {
        layers[a.len()] += 1;
    }
    let mut lym_sum = BigRational::zero();
    for (k, &count) in layers.iter().enumerate() {
        if count > 0 {
            let c = BigInt::from(binomial(m as u64, k as u64));
            lym_sum += BigRational::new(BigInt::from(count), c);
        }
    }
    let s = family.iter().map(VertexSet::len).max().unwrap_or(0);
    let power = BigUint::from(m).pow(s as u32);
    LymReport {
        is_antichain: is_antichain(family),
        lym_sum,
        within_power_bound: BigUint::from(family.len()) <= power,
    }
}

impl LymReport {
    pub fn lym_holds(&self) -> bool {
        self.lym_sum <= BigRational::one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::combinations;

    fn fam(sets: &[&[usize]]) -> Vec<VertexSet> {
        sets.iter().map(|s| s.iter().copied().collect()).collect()
    }

    #[test]
    fn singletons() {
        let family: Vec<VertexSet> = (0..5).map(VertexSet::singleton).collect();
        let r = lym_check(&family, 5);
        assert!(r.is_antichain && r.within_power_bound);
        assert_eq!(r.lym_sum, BigRational::one());
    }

    #[test]
    fn empty_set_and_singleton() {
        let r = lym_check(&fam(&[&[], &[1]]), 4);
        assert!(!r.is_antichain);
    }

    #[test]
    fn middle_layer() {
        let family: Vec<VertexSet> = combinations(4, 2).map(|c| c.into_iter().collect()).collect();
        let r = lym_check(&family, 4);
        assert!(r.is_antichain && r.within_power_bound && r.lym_holds());
        assert_eq!(r.lym_sum, BigRational::one());
        assert_eq!(family.len(), 6);
    }

    #[test]
    fn maximal_members_drop_subsets_and_duplicates() {
        let f = fam(&[&[0], &[0, 1], &[2], &[0, 1], &[]]);
        assert_eq!(maximal_members(&f), fam(&[&[0, 1], &[2]]));
        assert_eq!(maximal_members(&fam(&[&[], &[]])), fam(&[&[]]));
    }

    #[test]
    fn lym_holds_for_random_antichains() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand::rngs::StdRng::seed_from_u64(11);
        for _ in 0..300 {
            let m = rng.gen_range(1..8);
            let family: Vec<VertexSet> = (0..rng.gen_range(1..12))
                .map(|_| (0..m).filter(|_| rng.gen_bool(0.5)).collect())
                .collect();
            let r = lym_check(&maximal_members(&family), m);
            assert!(r.is_antichain && r.lym_holds(), "{family:?}");
        }
    }
}
