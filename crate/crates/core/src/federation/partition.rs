//! Splitting one dataset into disjoint site shards.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::{Error, Result};
use crate::models::Dataset;
use crate::seed::{self, tag};

/// Decides how many examples each site receives.
pub trait Partitioner: fmt::Debug + Send + Sync {
    /// Canonical name, parseable by [`PartitionRegistry::resolve`].
    fn name(&self) -> String;

    /// Shard sizes summing to `n`, one per site.
    fn shard_sizes(&self, n: usize, num_sites: usize, rng: &mut seed::Rng) -> Result<Vec<usize>>;
}

pub type PartitionKind = Arc<dyn Partitioner>;

/// Near-equal shards; the first `n mod N` sites get one extra example.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IidEqual;

impl Partitioner for IidEqual {
    fn name(&self) -> String {
        "iid".to_string()
    }

    fn shard_sizes(&self, n: usize, num_sites: usize, _rng: &mut seed::Rng) -> Result<Vec<usize>> {
        Ok(balanced_sizes(n, num_sites))
    }
}

pub(crate) fn balanced_sizes(n: usize, parts: usize) -> Vec<usize> {
    let base = n / parts;
    let extra = n % parts;
    (0..parts).map(|i| base + usize::from(i < extra)).collect()
}

/// Power-law shard sizes: site weights are Pareto(alpha) draws, and every
/// shard keeps at least max(2, ⌈n/100⌉) examples.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SizeSkewed {
    alpha: f64,
}

impl SizeSkewed {
    pub fn new(alpha: f64) -> Result<Self> {
        if alpha > 0.0 && alpha.is_finite() {
            Ok(SizeSkewed { alpha })
        } else {
            Err(Error::invalid("alpha", format!("must be positive, got {alpha}")))
        }
    }

    pub fn min_shard(n: usize) -> usize {
        n.div_ceil(100).max(2)
    }
}

impl Partitioner for SizeSkewed {
    fn name(&self) -> String {
        format!("skewed:{}", self.alpha)
    }

    fn shard_sizes(&self, n: usize, num_sites: usize, rng: &mut seed::Rng) -> Result<Vec<usize>> {
        let floor = Self::min_shard(n);
        if floor * num_sites > n {
            return Err(Error::TooSmall {
                what: "size-skewed partition",
                needed: floor * num_sites,
                available: n,
            });
        }
        let weights: Vec<f64> = (0..num_sites)
            .map(|_| {
                let u: f64 = 1.0 - rng.random::<f64>(); // (0, 1]
                u.powf(-1.0 / self.alpha)
            })
            .collect();
        let total: f64 = weights.iter().sum();
        let spare = n - floor * num_sites;

        // Largest-remainder apportionment of the spare examples.
        let quotas: Vec<f64> = weights.iter().map(|w| spare as f64 * w / total).collect();
        let mut sizes: Vec<usize> = quotas.iter().map(|q| q.floor() as usize).collect();
        let assigned: usize = sizes.iter().sum();
        let mut by_remainder: Vec<usize> = (0..num_sites).collect();
        by_remainder.sort_by(|&a, &b| {
            let ra = quotas[a] - quotas[a].floor();
            let rb = quotas[b] - quotas[b].floor();
            rb.total_cmp(&ra).then(a.cmp(&b))
        });
        for &i in by_remainder.iter().take(spare.saturating_sub(assigned)) {
            sizes[i] += 1;
        }
        Ok(sizes.into_iter().map(|s| s + floor).collect())
    }
}

pub type PartitionBuilder = fn(Option<f64>) -> Result<PartitionKind>;

/// Name → constructor table for partition strategies (`iid`, `skewed:1.5`).
#[derive(Clone)]
pub struct PartitionRegistry {
    builders: BTreeMap<String, PartitionBuilder>,
}

impl PartitionRegistry {
    pub fn empty() -> Self {
        PartitionRegistry {
            builders: BTreeMap::new(),
        }
    }

    pub fn register(&mut self, name: &str, builder: PartitionBuilder) {
        self.builders.insert(name.to_ascii_lowercase(), builder);
    }

    pub fn resolve(&self, spec: &str) -> Result<PartitionKind> {
        let spec = spec.trim();
        let (name, param) = match spec.split_once(':') {
            Some((n, p)) => (
                n.trim(),
                Some(p.trim().parse::<f64>().map_err(|_| {
                    Error::invalid("partition", format!("bad parameter in `{spec}`"))
                })?),
            ),
            None => (spec, None),
        };
        let builder = self
            .builders
            .get(&name.to_ascii_lowercase())
            .ok_or_else(|| Error::UnknownName {
                kind: "partition strategy",
                name: name.to_string(),
                known: self.builders.keys().cloned().collect::<Vec<_>>().join(", "),
            })?;
        builder(param)
    }
}

impl Default for PartitionRegistry {
    fn default() -> Self {
        let mut r = PartitionRegistry::empty();
        let iid: PartitionBuilder = |p| match p {
            None => Ok(Arc::new(IidEqual)),
            Some(_) => Err(Error::invalid("partition", "iid takes no parameter")),
        };
        let skewed: PartitionBuilder = |p| {
            let alpha = p.ok_or_else(|| Error::invalid("partition", "skewed needs an exponent, e.g. skewed:1.5"))?;
            Ok(Arc::new(SizeSkewed::new(alpha)?))
        };
        r.register("iid", iid);
        r.register("iid_equal", iid);
        r.register("skewed", skewed);
        r.register("size_skewed", skewed);
        r
    }
}

impl fmt::Debug for PartitionRegistry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.builders.keys()).finish()
    }
}

/// Shuffles `data` with `seed` and cuts it into contiguous shards.
///
/// A single site receives the data unshuffled, so a one-site federation sees
/// exactly the rows centralized training sees.
pub fn partition_with(
    data: &Dataset,
    strategy: &dyn Partitioner,
    num_sites: usize,
    seed: u64,
) -> Result<Vec<Dataset>> {
    if num_sites == 0 {
        return Err(Error::invalid("sites", "must be at least 1"));
    }
    if data.len() < num_sites {
        return Err(Error::TooSmall {
            what: "partition",
            needed: num_sites,
            available: data.len(),
        });
    }
    let mut rng = seed::rng(seed::derive(seed, &[tag::PARTITION]));
    let sizes = strategy.shard_sizes(data.len(), num_sites, &mut rng)?;
    debug_assert_eq!(sizes.iter().sum::<usize>(), data.len());
    let mut order: Vec<usize> = (0..data.len()).collect();
    if num_sites > 1 {
        order.shuffle(&mut rng);
    }
    let mut shards = Vec::with_capacity(num_sites);
    let mut start = 0;
    for size in sizes {
        shards.push(data.subset(&order[start..start + size]));
        start += size;
    }
    Ok(shards)
}
