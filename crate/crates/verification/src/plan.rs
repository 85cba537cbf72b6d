use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Distinct rationals s0 = a/b in (1, 2) with 2 ≤ b ≤ 97, drawn from a
/// generator seeded by (seed, N). s0 > 1 keeps h, k and every ω_a nonzero.
pub fn eval_mode_plan(n: usize, samples: usize, seed: u64) -> Vec<BigRational> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_mul(1_000_003).wrapping_add(n as u64));
    let mut out: Vec<BigRational> = Vec::with_capacity(samples);
    while out.len() < samples {
        let b: i64 = rng.gen_range(2..=97);
        let a: i64 = rng.gen_range(b + 1..2 * b);
        let x = BigRational::new(BigInt::from(a), BigInt::from(b));
        if !out.contains(&x) {
            out.push(x);
        }
    }
    out
}
