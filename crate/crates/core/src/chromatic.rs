//! Chromatic quasisymmetric functions and unicellular LLT polynomials of
//! Dyck paths, computed directly from colorings and words.
//!
//! Coefficients are extracted one content at a time: for a composition `α`
//! we enumerate the words using color `t` exactly `α_t` times. For `X_γ` the
//! words must be proper colorings of the incomparability graph and carry
//! `q^{asc}`; for `LLT_γ` every word counts and carries `q^{inv}`.

use num_traits::Zero;
use serde::Serialize;

use crate::dyck::DyckPath;
use crate::error::{Error, Result};
use crate::partition::enumerate_partitions;
use crate::qseries::{q_int, QLaurent};
use crate::symfunc::{Basis, SymFunc};

#[derive(Clone, Copy, PartialEq, Eq)]
enum Statistic {
    /// Proper colorings; edges `{i<j}` with `κ(i) < κ(j)`.
    Ascents,
    /// All words; incomparable pairs `i<j` with `w_i > w_j`.
    Inversions,
}

/// Histogram of the statistic over words with the given content.
fn content_histogram(gamma: &DyckPath, content: &[usize], stat: Statistic) -> Vec<u64> {
    fn rec(
        gamma: &DyckPath,
        v: usize,
        remaining: &mut [usize],
        word: &mut Vec<usize>,
        acc: usize,
        stat: Statistic,
        hist: &mut Vec<u64>,
    ) {
        let n = gamma.n();
        if v > n {
            if hist.len() <= acc {
                hist.resize(acc + 1, 0);
            }
            hist[acc] += 1;
            return;
        }
        for color in 0..remaining.len() {
            if remaining[color] == 0 {
                continue;
            }
            let mut gain = 0;
            let mut ok = true;
            for u in 1..v {
                if !gamma.is_edge(u, v) {
                    continue;
                }
                let cu = word[u - 1];
                match stat {
                    Statistic::Ascents => {
                        if cu == color {
                            ok = false;
                            break;
                        }
                        if cu < color {
                            gain += 1;
                        }
                    }
                    Statistic::Inversions => {
                        if cu > color {
                            gain += 1;
                        }
                    }
                }
            }
            if !ok {
                continue;
            }
            remaining[color] -= 1;
            word.push(color);
            rec(gamma, v + 1, remaining, word, acc + gain, stat, hist);
            word.pop();
            remaining[color] += 1;
        }
    }
    let total: usize = content.iter().sum();
    if total != gamma.n() {
        return Vec::new();
    }
    let mut hist = Vec::new();
    let mut remaining = content.to_vec();
    rec(
        gamma,
        1,
        &mut remaining,
        &mut Vec::new(),
        0,
        stat,
        &mut hist,
    );
    hist
}

fn histogram_poly(hist: &[u64]) -> QLaurent {
    QLaurent::new(0, hist.iter().map(|&c| c as i64))
}

fn check_content(gamma: &DyckPath, alpha: &[usize]) -> Result<()> {
    let s: usize = alpha.iter().sum();
    if s != gamma.n() {
        return Err(Error::SizeMismatch {
            expected: gamma.n(),
            got: s,
        });
    }
    Ok(())
}

/// Coefficient of `x_1^{α_1} x_2^{α_2} ⋯` in `X_γ`, for any composition `α`.
pub fn monomial_coefficient_for_composition(gamma: &DyckPath, alpha: &[usize]) -> Result<QLaurent> {
    check_content(gamma, alpha)?;
    Ok(histogram_poly(&content_histogram(
        gamma,
        alpha,
        Statistic::Ascents,
    )))
}

/// Coefficient of `x_1^{α_1} x_2^{α_2} ⋯` in `LLT_γ`, for any composition `α`.
pub fn llt_coefficient_for_composition(gamma: &DyckPath, alpha: &[usize]) -> Result<QLaurent> {
    check_content(gamma, alpha)?;
    Ok(histogram_poly(&content_histogram(
        gamma,
        alpha,
        Statistic::Inversions,
    )))
}

fn expand(gamma: &DyckPath, stat: Statistic) -> SymFunc {
    let n = gamma.n();
    let terms = enumerate_partitions(n).into_iter().map(|alpha| {
        let c = histogram_poly(&content_histogram(gamma, alpha.parts(), stat));
        (alpha, c)
    });
    SymFunc::from_terms(n, Basis::Monomial, terms).expect("partitions of n")
}

/// `X_γ(x; q)` in the monomial basis.
pub fn chromatic_qsym(gamma: &DyckPath) -> SymFunc {
    expand(gamma, Statistic::Ascents)
}

/// `LLT_γ(x; q)` in the monomial basis.
pub fn llt_poly(gamma: &DyckPath) -> SymFunc {
    expand(gamma, Statistic::Inversions)
}

/// Both sides of the principal specialization `x_i = q^{i-1}`, `i ≤ α`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PrincipalSpecialization {
    /// `Σ_κ q^{asc(κ) + Σ_v (κ(v) - 1)}` over proper colorings `κ: [n] → [α]`.
    pub direct: QLaurent,
    /// `q^{area(γ)} Π_i [α - a_i(γ)]_q`.
    pub product: QLaurent,
}

pub fn principal_specialization(gamma: &DyckPath, alpha: usize) -> PrincipalSpecialization {
    PrincipalSpecialization {
        direct: principal_direct(gamma, alpha),
        product: principal_product(gamma, alpha),
    }
}

fn principal_direct(gamma: &DyckPath, alpha: usize) -> QLaurent {
    fn rec(
        gamma: &DyckPath,
        v: usize,
        alpha: usize,
        kappa: &mut Vec<usize>,
        acc: usize,
        hist: &mut Vec<u64>,
    ) {
        if v > gamma.n() {
            if hist.len() <= acc {
                hist.resize(acc + 1, 0);
            }
            hist[acc] += 1;
            return;
        }
        'color: for c in 0..alpha {
            let mut asc = 0;
            for u in 1..v {
                if gamma.is_edge(u, v) {
                    let cu = kappa[u - 1];
                    if cu == c {
                        continue 'color;
                    }
                    if cu < c {
                        asc += 1;
                    }
                }
            }
            kappa.push(c);
            rec(gamma, v + 1, alpha, kappa, acc + asc + c, hist);
            kappa.pop();
        }
    }
    let mut hist = Vec::new();
    rec(gamma, 1, alpha, &mut Vec::new(), 0, &mut hist);
    histogram_poly(&hist)
}

fn principal_product(gamma: &DyckPath, alpha: usize) -> QLaurent {
    // a_i grows by at most one per row from a_1 = 0, so a nonpositive
    // argument is always preceded by a factor [0]_q.
    let rows = gamma.rows();
    if rows.iter().any(|&a| a >= alpha) {
        return QLaurent::zero();
    }
    let prod: QLaurent = rows
        .iter()
        .map(|&a| q_int((alpha - a) as i64).expect("positive"))
        .product();
    if prod.is_zero() {
        return prod;
    }
    prod.shift(gamma.area() as i64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::Partition;
    use num_bigint::BigInt;

    fn d(h: &[usize]) -> DyckPath {
        DyckPath::from_heights(h).unwrap()
    }

    fn pt(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn poly(c: &[i64]) -> QLaurent {
        QLaurent::new(0, c.iter().copied())
    }

    #[test]
    fn chromatic_examples() {
        let x = chromatic_qsym(&d(&[2, 2]));
        assert_eq!(x.coeff(&pt(&[1, 1])), poly(&[1, 1]));
        assert!(x.coeff(&pt(&[2])).is_zero());
        assert_eq!(
            chromatic_qsym(&d(&[1])),
            SymFunc::basis_element(Basis::Monomial, pt(&[1]))
        );
        let x = chromatic_qsym(&d(&[2, 3, 3]));
        assert_eq!(x.coeff(&pt(&[2, 1])), QLaurent::q_pow(1));
    }

    #[test]
    fn composition_examples() {
        let g = d(&[2, 3, 3]);
        assert_eq!(
            monomial_coefficient_for_composition(&g, &[1, 2]).unwrap(),
            monomial_coefficient_for_composition(&g, &[2, 1]).unwrap()
        );
        assert!(monomial_coefficient_for_composition(&g, &[3])
            .unwrap()
            .is_zero());
        assert_eq!(
            monomial_coefficient_for_composition(&DyckPath::minimal(4), &[1, 1, 1, 1]).unwrap(),
            QLaurent::constant(24)
        );
        assert!(monomial_coefficient_for_composition(&g, &[1, 1]).is_err());
        // zero parts are colors that are never used
        assert_eq!(
            monomial_coefficient_for_composition(&g, &[2, 0, 1]).unwrap(),
            QLaurent::q_pow(1)
        );
    }

    #[test]
    fn llt_examples() {
        let l = llt_poly(&d(&[2, 2]));
        assert_eq!(l.coeff(&pt(&[1, 1])), poly(&[1, 1]));
        assert_eq!(l.coeff(&pt(&[2])), QLaurent::constant(1));
        assert_eq!(
            llt_poly(&d(&[1])),
            SymFunc::basis_element(Basis::Monomial, pt(&[1]))
        );
        // q = 1 forgets the statistic: multinomial counts
        let l = llt_poly(&d(&[2, 3, 3, 4]));
        assert_eq!(l.coeff(&pt(&[2, 1, 1])).eval_one(), BigInt::from(12));
        assert_eq!(l.coeff(&pt(&[1, 1, 1, 1])).eval_one(), BigInt::from(24));
    }

    #[test]
    fn principal_examples() {
        let g = d(&[2, 2]);
        let p = principal_specialization(&g, 0);
        assert!(p.direct.is_zero() && p.product.is_zero());
        let p = principal_specialization(&g, 2);
        assert_eq!(p.direct, QLaurent::new(1, [1, 1]));
        assert_eq!(p.product, p.direct);
        for n in 1..=5 {
            let g = DyckPath::complete(n);
            let p = principal_specialization(&g, n);
            let want: QLaurent = (1..=n).map(|i| q_int(i as i64).unwrap()).product();
            let want = want.shift((n * (n - 1) / 2) as i64);
            assert_eq!(p.direct, want);
            assert_eq!(p.product, want);
        }
    }
}
