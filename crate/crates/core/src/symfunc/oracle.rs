//! Direct evaluation of Hall–Littlewood polynomials in finitely many
//! variables by symmetrizing over the symmetric group, with exact rationals.
//! Independent of the Kostka–Foulkes route and used to cross-check it.

use itertools::Itertools;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::partition::Partition;

fn pow(x: &BigRational, k: usize) -> BigRational {
    (0..k).fold(BigRational::one(), |acc, _| acc * x)
}

/// `[m]_{q0}!` as an exact rational.
fn q_factorial_at(m: usize, q0: &BigRational) -> BigRational {
    let mut acc = BigRational::one();
    for j in 1..=m {
        let int: BigRational = (0..j).map(|e| pow(q0, e)).sum();
        acc *= int;
    }
    acc
}

/// `m_λ(x_1, …, x_k)`: sum over the distinct rearrangements of `λ` padded to `k`.
pub fn eval_monomial(lambda: &Partition, xs: &[BigRational]) -> BigRational {
    let k = xs.len();
    if lambda.len() > k {
        return BigRational::zero();
    }
    let exps: Vec<usize> = (1..=k).map(|i| lambda.part(i)).collect();
    exps.iter()
        .copied()
        .permutations(k)
        .unique()
        .map(|e| {
            xs.iter()
                .zip(&e)
                .fold(BigRational::one(), |acc, (x, &p)| acc * pow(x, p))
        })
        .sum()
}

/// `P_μ(x_1, …, x_k; q0)` from the symmetrization formula
/// `(1 / Π_{i≥0} [m_i]_{q0}!) Σ_w w(x^μ Π_{i<j} (x_i − q0 x_j)/(x_i − x_j))`,
/// where `m_0 = k − ℓ(μ)`.
pub fn hl_direct_oracle(
    mu: &Partition,
    xs: &[BigRational],
    q0: &BigRational,
) -> Result<BigRational> {
    let k = xs.len();
    if mu.len() > k {
        return Err(Error::Domain(format!(
            "need at least {} variables for {mu}, got {k}",
            mu.len()
        )));
    }
    for (a, b) in xs.iter().tuple_combinations() {
        if a == b {
            return Err(Error::Pole);
        }
    }
    let mut total = BigRational::zero();
    for w in (0..k).permutations(k) {
        let y: Vec<&BigRational> = w.iter().map(|&i| &xs[i]).collect();
        let mut term = BigRational::one();
        for (i, yi) in y.iter().enumerate() {
            term *= pow(yi, mu.part(i + 1));
        }
        for i in 0..k {
            for j in i + 1..k {
                term *= (y[i] - q0 * y[j]) / (y[i] - y[j]);
            }
        }
        total += term;
    }
    let mut norm = q_factorial_at(k - mu.len(), q0);
    for m in mu.multiplicities().into_values() {
        norm *= q_factorial_at(m, q0);
    }
    if norm.is_zero() {
        return Err(Error::Pole);
    }
    Ok(total / norm)
}
