use rand::seq::SliceRandom;

use crate::error::{Error, Result};
use crate::federation::balanced_sizes;
use crate::models::Dataset;
use crate::seed::{self, tag};

fn permutation(n: usize, seed: u64, stream: u64) -> Vec<usize> {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(&mut seed::rng(seed::derive(seed, &[stream])));
    order
}

/// Seeded shuffle, then the first ⌊fraction·n⌋ rows train and the rest test.
pub fn train_test_split(data: &Dataset, train_fraction: f64, seed: u64) -> Result<(Dataset, Dataset)> {
    if !(train_fraction > 0.0 && train_fraction < 1.0) {
        return Err(Error::invalid("train-fraction", format!("must lie in (0, 1), got {train_fraction}")));
    }
    let n = data.len();
    let cut = (train_fraction * n as f64).floor() as usize;
    if cut == 0 || cut == n {
        return Err(Error::TooSmall {
            what: "train/test split",
            needed: n + 1,
            available: n,
        }
        .context(format!("fraction {train_fraction} of {n} rows leaves one side empty")));
    }
    let order = permutation(n, seed, tag::SPLIT);
    Ok((data.subset(&order[..cut]), data.subset(&order[cut..])))
}

/// Seeded k-fold cross-validation pairs `(train, validation)`.
///
/// Validation folds are contiguous runs of one permutation; the first
/// `n mod k` folds hold one extra row.
pub fn kfold(data: &Dataset, k: usize, seed: u64) -> Result<Vec<(Dataset, Dataset)>> {
    if k < 2 {
        return Err(Error::invalid("folds", format!("need at least 2 folds, got {k}")));
    }
    let n = data.len();
    if n < k {
        return Err(Error::TooSmall {
            what: "k-fold split",
            needed: k,
            available: n,
        });
    }
    let order = permutation(n, seed, tag::FOLDS);
    let mut start = 0;
    let mut folds = Vec::with_capacity(k);
    for size in balanced_sizes(n, k) {
        let end = start + size;
        let train: Vec<usize> = order[..start].iter().chain(&order[end..]).copied().collect();
        folds.push((data.subset(&train), data.subset(&order[start..end])));
        start = end;
    }
    Ok(folds)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models::Label;
    use proptest::prelude::*;

    fn indexed(n: usize) -> Dataset {
        Dataset::new(1, (0..n).map(|i| i as f64).collect(), vec![Label::Negative; n]).unwrap()
    }

    fn ids(d: &Dataset) -> Vec<usize> {
        d.iter().map(|(x, _)| x[0] as usize).collect()
    }

    #[test]
    fn split_sizes_and_determinism() {
        let d = indexed(10);
        let (tr, te) = train_test_split(&d, 0.7, 3).unwrap();
        assert_eq!((tr.len(), te.len()), (7, 3));
        assert_eq!(train_test_split(&d, 0.7, 3).unwrap(), (tr.clone(), te.clone()));
        let mut all = ids(&tr);
        all.extend(ids(&te));
        all.sort_unstable();
        assert_eq!(all, (0..10).collect::<Vec<_>>());
    }

    #[test]
    fn split_degenerate() {
        assert!(train_test_split(&indexed(1), 0.7, 0).is_err());
        assert!(train_test_split(&indexed(10), 0.05, 0).is_err());
        assert!(train_test_split(&indexed(10), 1.0, 0).is_err());
        assert!(train_test_split(&indexed(10), 0.0, 0).is_err());
    }

    #[test]
    fn kfold_sizes() {
        let folds = kfold(&indexed(10), 5, 1).unwrap();
        assert!(folds.iter().all(|(tr, va)| va.len() == 2 && tr.len() == 8));
        let folds = kfold(&indexed(11), 5, 1).unwrap();
        let sizes: Vec<usize> = folds.iter().map(|(_, v)| v.len()).collect();
        assert_eq!(sizes, [3, 2, 2, 2, 2]);
    }

    #[test]
    fn kfold_errors() {
        assert!(kfold(&indexed(4), 5, 0).is_err());
        assert!(kfold(&indexed(4), 1, 0).is_err());
    }

    proptest! {
        #[test]
        fn folds_partition_the_data(n in 2usize..200, k in 2usize..10, seed in any::<u64>()) {
            prop_assume!(k <= n);
            let d = indexed(n);
            let folds = kfold(&d, k, seed).unwrap();
            let mut seen = vec![0usize; n];
            for (train, val) in &folds {
                prop_assert_eq!(train.len() + val.len(), n);
                for i in ids(val) { seen[i] += 1; }
                let mut both = ids(train);
                both.extend(ids(val));
                both.sort_unstable();
                prop_assert_eq!(both, (0..n).collect::<Vec<_>>());
            }
            prop_assert!(seen.iter().all(|&c| c == 1));
            let sizes: Vec<usize> = folds.iter().map(|(_, v)| v.len()).collect();
            prop_assert!(sizes.iter().max().unwrap() - sizes.iter().min().unwrap() <= 1);
            prop_assert_eq!(folds, kfold(&d, k, seed).unwrap());
        }

        #[test]
        fn split_is_exhaustive(n in 2usize..300, frac in 0.05f64..0.95, seed in any::<u64>()) {
            let d = indexed(n);
            let cut = (frac * n as f64).floor() as usize;
            prop_assume!(cut > 0 && cut < n);
            let (tr, te) = train_test_split(&d, frac, seed).unwrap();
            prop_assert_eq!(tr.len(), cut);
            let mut all = ids(&tr);
            all.extend(ids(&te));
            all.sort_unstable();
            prop_assert_eq!(all, (0..n).collect::<Vec<_>>());
        }
    }
}
