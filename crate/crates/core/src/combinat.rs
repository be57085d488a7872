use num_bigint::BigInt;
use num_traits::One;

/// `binom(n, k)`, zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::from(0u32);
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// The Catalan number `C_n = binom(2n, n) / (n + 1)`.
pub fn catalan(n: u64) -> BigInt {
    binomial(2 * n, n) / (n + 1)
}

/// `C_0, ..., C_n`.
pub fn catalan_prefix(n: usize) -> alloc::vec::Vec<BigInt> {
    (0..=n as u64).map(catalan).collect()
}
