//! Bernoulli numbers, exact.
//!
//! Computed by the defining recurrence `sum_{j=0}^{m} C(m+1, j) B_j = 0`
//! with `B_0 = 1` (so `B_1 = -1/2`). Values are cached behind a mutex; the
//! fill is idempotent, so concurrent callers from batched evaluations are
//! fine.

use std::sync::Mutex;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::rational::{rat_int, Rat};

static CACHE: Mutex<Vec<Rat>> = Mutex::new(Vec::new());

/// The m-th Bernoulli number `B_m`. Zero for odd `m > 1`.
pub fn bernoulli(m: u32) -> Rat {
    let mut cache = CACHE.lock().expect("bernoulli cache poisoned");
    if cache.is_empty() {
        cache.push(Rat::one());
    }
    while cache.len() <= m as usize {
        let n = cache.len();
        // B_n = -1/(n+1) * sum_{j=0}^{n-1} C(n+1, j) B_j
        let mut sum = Rat::zero();
        let mut binom = BigInt::one();
        for (j, b) in cache.iter().enumerate() {
            if !b.is_zero() {
                sum += Rat::from_integer(binom.clone()) * b;
            }
            binom = binom * BigInt::from(n + 1 - j) / BigInt::from(j + 1);
        }
        let value = -sum / rat_int(n as i64 + 1);
        cache.push(value);
    }
    cache[m as usize].clone()
}
