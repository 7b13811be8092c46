use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut r = BigInt::one();
    for i in 0..k {
        r = r * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    r
}

/// K_i(z) = Σ_j (-1)^j (q-1)^{i-j} q^j C(n-j, n-i) C(z, j), exactly.
pub fn krawtchouk(n: usize, q: usize, i: usize, z: usize) -> Result<BigInt> {
    if i > n || z > n {
        return Err(Error::Invalid(format!(
            "Krawtchouk index out of range: i = {i}, z = {z}, n = {n}"
        )));
    }
    if q < 2 {
        return Err(Error::Alphabet(q));
    }
    let (n, i, z) = (n as i64, i as i64, z as i64);
    let q1 = BigInt::from(q - 1);
    let qb = BigInt::from(q);
    let mut sum = BigInt::zero();
    for j in 0..=i {
        let term = num_traits::pow(q1.clone(), (i - j) as usize)
            * num_traits::pow(qb.clone(), j as usize)
            * binomial(n - j, n - i)
            * binomial(z, j);
        if j % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    Ok(sum)
}

/// Memoized K_i^{(n,q)}(j) for 0 <= i, j <= n.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KrawtchoukContext {
    n: usize,
    q: usize,
    values: Vec<Vec<BigInt>>,
}

impl KrawtchoukContext {
    pub fn new(n: usize, q: usize) -> Result<Self> {
        let values = (0..=n)
            .map(|i| (0..=n).map(|j| krawtchouk(n, q, i, j)).collect())
            .collect::<Result<_>>()?;
        Ok(KrawtchoukContext { n, q, values })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn get(&self, i: usize, j: usize) -> Result<&BigInt> {
        self.values
            .get(i)
            .and_then(|row| row.get(j))
            .ok_or_else(|| {
                Error::Invalid(format!(
                    "Krawtchouk index out of range: i = {i}, j = {j}, n = {}",
                    self.n
                ))
            })
    }

    pub(crate) fn at(&self, i: usize, j: usize) -> &BigInt {
        &self.values[i][j]
    }
}
