#![allow(dead_code)]

use std::collections::BTreeMap;

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use symfunc::engine::{evaluate_with_stats, tail_sums};
use symfunc::hall_littlewood::straighten_hl;
use symfunc::schur::straighten_schur;
use symfunc::{FormalSum, HLSum, IndexVector, Partition, SeriesKind, TPoly, TranslationSeries};

pub fn iv(v: &[i64]) -> IndexVector {
    IndexVector::new(v.to_vec())
}

/// `straighten_schur` as a signed sum.
pub fn schur_sum(v: &[i64]) -> BTreeMap<Partition, i64> {
    straighten_schur(&iv(v)).map(|(s, la)| (la, s as i64)).into_iter().collect()
}

/// `S_(i,j) + S_(j-1,i+1) == 0`.
pub fn schur_two_row_holds(i: i64, j: i64) -> bool {
    let mut total = schur_sum(&[i, j]);
    for (la, c) in schur_sum(&[j - 1, i + 1]) {
        *total.entry(la).or_default() += c;
    }
    total.values().all(|&c| c == 0)
}

/// `Q_(n-1,m) + Q_(m-1,n) - t Q_(n,m-1) - t Q_(m,n-1) == 0`.
pub fn deformed_fermionic_holds(n: i64, m: i64) -> bool {
    let minus_t = TPoly::monomial(-1, 1);
    let mut total = HLSum::new();
    total.add_scaled(&straighten_hl(&iv(&[n - 1, m])).unwrap(), &TPoly::one());
    total.add_scaled(&straighten_hl(&iv(&[m - 1, n])).unwrap(), &TPoly::one());
    total.add_scaled(&straighten_hl(&iv(&[n, m - 1])).unwrap(), &minus_t);
    total.add_scaled(&straighten_hl(&iv(&[m, n - 1])).unwrap(), &minus_t);
    total.is_empty()
}

/// Every vector of length 1..=max_len with entries in `lo..=hi`.
pub fn all_vectors(max_len: usize, lo: i64, hi: i64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let mut layer: Vec<Vec<i64>> = vec![Vec::new()];
    for _ in 0..max_len {
        layer = layer
            .iter()
            .flat_map(|v| (lo..=hi).map(move |x| {
                let mut w = v.clone();
                w.push(x);
                w
            }))
            .collect();
        out.extend(layer.iter().cloned());
    }
    out
}

pub fn has_negative_tail(v: &[i64]) -> bool {
    tail_sums(&iv(v)).iter().any(|&s| s < 0)
}

/// Vectors with a negative tail sum that fail to straighten to zero in
/// either basis.
pub fn pruning_counterexamples(max_len: usize, lo: i64, hi: i64) -> (usize, Vec<Vec<i64>>) {
    let mut checked = 0;
    let mut bad = Vec::new();
    for v in all_vectors(max_len, lo, hi) {
        if !has_negative_tail(&v) {
            continue;
        }
        checked += 1;
        let schur_zero = straighten_schur(&iv(&v)).is_none();
        let hl_zero = straighten_hl(&iv(&v)).unwrap().is_empty();
        if !(schur_zero && hl_zero) {
            bad.push(v);
        }
    }
    (checked, bad)
}

/// A random base vector with a random list of translation series.
pub fn random_instance(rng: &mut StdRng) -> (FormalSum, Vec<TranslationSeries>) {
    let len = rng.gen_range(2..=4);
    let v: Vec<i64> = (0..len).map(|_| rng.gen_range(-1..=4)).collect();
    let kind = match rng.gen_range(0..3) {
        0 => SeriesKind::Plain,
        1 => SeriesKind::TDeformed,
        _ => SeriesKind::TDeformedInverse,
    };
    let mut series = Vec::new();
    for s in 1..=len {
        for d in s + 1..=len {
            if rng.gen_bool(0.6) {
                series.push(TranslationSeries::new(s, d, kind));
            }
        }
    }
    (FormalSum::singleton(IndexVector::new(v)), series)
}

/// Outcome of one ordering-independence trial: whether the shuffled series
/// list gives the same sum, and whether the application count stayed
/// within the potential bound.
pub fn ordering_trial(rng: &mut StdRng) -> (bool, bool) {
    let (base, series) = random_instance(rng);
    let (a, stats) = evaluate_with_stats(&base, &series).expect("engine");
    let mut shuffled = series.clone();
    shuffled.shuffle(rng);
    let (b, _) = evaluate_with_stats(&base, &shuffled).expect("engine");
    let bound_ok = stats.max_branch_applications as i64 <= stats.max_potential.max(0);
    (a == b, bound_ok)
}

pub fn seeded(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}
