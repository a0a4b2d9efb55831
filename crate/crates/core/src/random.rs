//! Seeded random incidence quotients for property testing.

use crate::combinatorics::{hasse_reduction, Order};
use crate::error::{Error, Result};
use crate::presentation::IncidenceQuotient;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

/// Parameters of the random generator. Equal models give equal instances.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct RandomModel {
    pub seed: u64,
    pub n: usize,
    /// Probability of each candidate relation `x > y` before closure.
    pub edge_density: f64,
    /// Probability of declaring a non-covering comparable pair zero.
    pub zero_rate: f64,
}

impl RandomModel {
    pub fn new(seed: u64, n: usize) -> Self {
        RandomModel {
            seed,
            n,
            edge_density: 0.4,
            zero_rate: 0.3,
        }
    }
}

/// Draws attempts until one passes certification.
const MAX_ATTEMPTS: usize = 64;

/// Samples a random poset (random relations closed transitively), takes its Hasse
/// quiver, and declares each non-covering comparable pair zero with probability
/// `zero_rate`. Redraws until the result is certified; after a bounded number of
/// attempts the last, uncertified draw is returned.
pub fn random_algebra(model: &RandomModel) -> Result<IncidenceQuotient> {
    if model.n == 0 {
        return Err(Error::EmptySelection);
    }
    if model.n > crate::vertex_set::MAX_VERTICES {
        return Err(Error::TooManyVertices(model.n));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(model.seed);
    let density = model.edge_density.clamp(0.0, 1.0);
    let zero_rate = model.zero_rate.clamp(0.0, 1.0);
    let name = format!("random-{}-{}", model.seed, model.n);
    let mut last = None;
    for _ in 0..MAX_ATTEMPTS {
        let n = model.n;
        let mut pairs = Vec::new();
        for x in 0..n {
            for y in x + 1..n {
                if rng.gen_bool(density) {
                    pairs.push((x, y));
                }
            }
        }
        let labels: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
        let hasse = hasse_reduction(labels, &pairs)?;
        let order = Order::from_pairs(n, &pairs)?;
        let mut zeros = Vec::new();
        for x in 0..n {
            for y in order.down_set(x).iter() {
                if y != x && !hasse.has_arrow(x, y) && rng.gen_bool(zero_rate) {
                    zeros.push((x, y));
                }
            }
        }
        let q = IncidenceQuotient::from_poset(name.clone(), hasse, &zeros)?;
        if q.is_certified() {
            return Ok(q);
        }
        last = Some(q);
    }
    Ok(last.expect("at least one attempt"))
}
