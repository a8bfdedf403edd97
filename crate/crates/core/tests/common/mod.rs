#![allow(dead_code)]

use num_bigint::BigUint;
use num_traits::One;

use compfactors::Partition;

/// `p(n)` from Euler's pentagonal recurrence.
pub fn partition_count(n: usize) -> u64 {
    let mut p = vec![0i64; n + 1];
    p[0] = 1;
    for m in 1..=n {
        let mut k = 1i64;
        let mut total = 0i64;
        loop {
            let g1 = (k * (3 * k - 1) / 2) as usize;
            if g1 > m {
                break;
            }
            let sign = if k % 2 == 1 { 1 } else { -1 };
            total += sign * p[m - g1];
            let g2 = (k * (3 * k + 1) / 2) as usize;
            if g2 <= m {
                total += sign * p[m - g2];
            }
            k += 1;
        }
        p[m] = total;
    }
    p[n] as u64
}

pub fn factorial(n: usize) -> BigUint {
    (1..=n as u64).fold(BigUint::one(), |acc, i| acc * i)
}

fn hooks(lambda: &Partition) -> Vec<(usize, i64)> {
    let conj = lambda.conjugate();
    let mut out = Vec::new();
    for (i, &row) in lambda.parts().iter().enumerate() {
        for j in 0..row {
            let hook = row - j + conj.part(j) - i - 1;
            out.push((hook, j as i64 - i as i64));
        }
    }
    out
}

/// `f^λ = n! / ∏ hooks`.
pub fn hook_length_count(lambda: &Partition) -> BigUint {
    let prod = hooks(lambda).iter().fold(BigUint::one(), |acc, &(h, _)| acc * h);
    factorial(lambda.size()) / prod
}

/// `dim S_λ(C^N) = ∏ (N + content) / hook`.
pub fn schur_dimension(lambda: &Partition, n: u64) -> BigUint {
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for (h, c) in hooks(lambda) {
        let f = n as i64 + c;
        if f <= 0 {
            return BigUint::from(0u32);
        }
        num *= f as u64;
        den *= h;
    }
    num / den
}
