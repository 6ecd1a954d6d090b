//! Property checks shared by the property tests and the acceptance runner.
//! Each returns `Err` with a description of the first failure.

#![allow(dead_code)]

use std::collections::BTreeSet;

use itertools::Itertools;
use num_bigint::BigInt;
use num_rational::BigRational;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use hallrook::chromatic::{
    chromatic_qsym, llt_coefficient_for_composition, monomial_coefficient_for_composition,
};
use hallrook::dyck::{enumerate_dyck, Cell, DyckPath};
use hallrook::partition::enumerate_partitions;
use hallrook::qseries::q_factorial;
use hallrook::rook::{
    enumerate_placements, extended_ranks, fc, hl_coefficient, r_polys, RookPlacement,
};
use hallrook::symfunc::oracle::hl_direct_oracle;
use hallrook::symfunc::{kf_poly, kostka_number};
use hallrook::{Basis, Partition, QLaurent, SymFunc};

pub type Check = Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// `q^{area} X_γ(q⁻¹) = X_γ`.
pub fn palindromicity(n_max: usize) -> Check {
    for n in 1..=n_max {
        for g in enumerate_dyck(n) {
            let x = chromatic_qsym(&g);
            let area = g.area() as i64;
            let flipped = x.map_coeffs(|c| c.invert_q().shift(area));
            ensure(flipped == x, || format!("not palindromic at {g}"))?;
        }
    }
    Ok(())
}

/// Coefficients of `x^α` depend only on the sorted `α`, for both `X_γ` and `LLT_γ`.
pub fn composition_symmetry(n_max: usize) -> Check {
    for n in 1..=n_max {
        for g in enumerate_dyck(n) {
            for lambda in enumerate_partitions(n) {
                let x0 = monomial_coefficient_for_composition(&g, lambda.parts())
                    .map_err(|e| e.to_string())?;
                let l0 = llt_coefficient_for_composition(&g, lambda.parts())
                    .map_err(|e| e.to_string())?;
                let perms: BTreeSet<Vec<usize>> = lambda
                    .parts()
                    .iter()
                    .copied()
                    .permutations(lambda.len())
                    .collect();
                for alpha in perms {
                    let x = monomial_coefficient_for_composition(&g, &alpha)
                        .map_err(|e| e.to_string())?;
                    let l =
                        llt_coefficient_for_composition(&g, &alpha).map_err(|e| e.to_string())?;
                    ensure(x == x0 && l == l0, || {
                        format!("{g}: {alpha:?} differs from {lambda}")
                    })?;
                }
            }
        }
    }
    Ok(())
}

/// Schur coefficients of `X_γ` are polynomials with nonnegative coefficients.
pub fn schur_positivity(n_max: usize) -> Check {
    for n in 1..=n_max {
        for g in enumerate_dyck(n) {
            let s = chromatic_qsym(&g).to_basis(Basis::Schur);
            for (lambda, c) in s.terms() {
                ensure(c.is_polynomial() && c.has_nonnegative_coeffs(), || {
                    format!("{g}: s{lambda} has coefficient {c}")
                })?;
            }
        }
    }
    Ok(())
}

/// The coefficient of `P_{(1^n)}` is `[n]_q!` for every `γ`.
pub fn hl_column_coefficient(n_max: usize) -> Check {
    for n in 1..=n_max {
        let want = q_factorial(n as i64).unwrap();
        for g in enumerate_dyck(n) {
            let c = hl_coefficient(&g, &Partition::column(n)).map_err(|e| e.to_string())?;
            ensure(c == want, || format!("{g}: got {c}"))?;
        }
    }
    Ok(())
}

/// `K_{λμ}(1) = K_{λμ}`, `K_{(n),μ}(q) = q^{n(μ)}` and `deg K_{λμ}(q) ≤ n(μ)`.
pub fn kostka_foulkes(n_max: usize) -> Check {
    for n in 1..=n_max {
        let parts = enumerate_partitions(n);
        for lambda in &parts {
            for mu in &parts {
                let kq = kf_poly(lambda, mu).map_err(|e| e.to_string())?;
                let k = kostka_number(lambda, mu).map_err(|e| e.to_string())?;
                ensure(kq.eval_one() == BigInt::from(k), || {
                    format!("K{lambda}{mu}(1) != {k}")
                })?;
                ensure(kq.max_exp().is_none_or(|d| d <= mu.nstat() as i64), || {
                    format!("deg K{lambda}{mu}(q) exceeds n(mu)")
                })?;
            }
            let row = Partition::new(vec![n]).unwrap();
            let kq = kf_poly(&row, lambda).map_err(|e| e.to_string())?;
            ensure(kq == QLaurent::q_pow(lambda.nstat() as i64), || {
                format!("K_(n),{lambda}(q) = {kq}")
            })?;
        }
    }
    Ok(())
}

fn random_rational(rng: &mut StdRng) -> BigRational {
    let num: i64 = rng.gen_range(-9..=9);
    let den: i64 = rng.gen_range(1..=7);
    BigRational::new(num.into(), den.into())
}

/// `P_μ` via `K(q)⁻¹` against the symmetrization oracle at random rational
/// points with distinct coordinates.
pub fn hl_oracle_agreement(size_max: usize, points: usize, seed: u64) -> Check {
    let mut rng = StdRng::seed_from_u64(seed);
    let vars = size_max.max(1);
    for _ in 0..points {
        let xs: Vec<BigRational> = loop {
            let xs: Vec<_> = (0..vars).map(|_| random_rational(&mut rng)).collect();
            if xs.iter().all_unique() {
                break xs;
            }
        };
        let q0 = random_rational(&mut rng);
        for n in 0..=size_max {
            for mu in enumerate_partitions(n) {
                let via_kf = SymFunc::basis_element(Basis::HlP, mu.clone())
                    .to_basis(Basis::Monomial)
                    .eval(&xs, &q0)
                    .map_err(|e| e.to_string())?;
                let direct = hl_direct_oracle(&mu, &xs, &q0).map_err(|e| e.to_string())?;
                ensure(via_kf == direct, || {
                    format!("P{mu} at xs={xs:?} q={q0}: {via_kf} vs {direct}")
                })?;
            }
        }
    }
    Ok(())
}

/// A rook of the extended placement: column, row (`n + 1` is the extended row), rank.
type ExtRook = (usize, usize, usize);

/// Builds `ext(P)` rook by rook: every chain `d_1 < … < d_ℓ` becomes
/// `u_1 = (d_1,d_1), u_2 = (d_1,d_2), …, u_{2ℓ} = (d_ℓ,n+1)` with `rank(u_t) = ⌊t/2⌋`.
pub fn literal_extension(n: usize, p: &RookPlacement) -> Vec<ExtRook> {
    let mut next = vec![None; n + 1];
    let mut has_prev = vec![false; n + 1];
    for &(i, j) in p.cells() {
        next[i] = Some(j);
        has_prev[j] = true;
    }
    let mut ext = Vec::new();
    for start in (1..=n).filter(|&d| !has_prev[d]) {
        let mut t = 1;
        let mut d = start;
        loop {
            ext.push((d, d, t / 2));
            t += 1;
            let up = next[d].unwrap_or(n + 1);
            ext.push((d, up, t / 2));
            t += 1;
            match next[d] {
                Some(e) => d = e,
                None => break,
            }
        }
    }
    ext
}

fn literal_free_cells(gamma: &DyckPath, ext: &[ExtRook]) -> Vec<Cell> {
    let n = gamma.n();
    let mut out = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            if !gamma.is_board_cell((i, j)) {
                continue;
            }
            let &(_, jp, a) = ext.iter().filter(|r| r.0 == i).max_by_key(|r| r.1).unwrap();
            let &(ip, _, b) = ext.iter().filter(|r| r.1 == j).min_by_key(|r| r.0).unwrap();
            let free = jp > j && ((i < ip && b <= a) || (ip < i && b < a));
            if free {
                out.push((i, j));
            }
        }
    }
    out
}

/// The position-based ranks agree with the literal extended placement, and
/// so do the free-cell counts.
pub fn rank_shortcut(n_max: usize) -> Check {
    for n in 1..=n_max {
        for g in enumerate_dyck(n) {
            for p in enumerate_placements(&g) {
                let ext = literal_extension(n, &p);
                let fast = extended_ranks(&p);
                for v in 1..=n {
                    let &(_, jp, a) = ext.iter().filter(|r| r.0 == v).max_by_key(|r| r.1).unwrap();
                    let &(ip, _, b) = ext.iter().filter(|r| r.1 == v).min_by_key(|r| r.0).unwrap();
                    ensure(
                        (
                            fast.col_rank(v),
                            fast.col_topmost_row(v),
                            fast.row_rank(v),
                            fast.row_leftmost_col(v),
                        ) == (a, jp, b, ip),
                        || format!("{g} {p:?}: ranks differ at {v}"),
                    )?;
                }
                let lit = literal_free_cells(&g, &ext).len();
                ensure(lit == fc(&g, &p), || {
                    format!("{g} {p:?}: fc {} vs {lit}", fc(&g, &p))
                })?;
            }
        }
    }
    Ok(())
}

/// Non-attacking subsets of the board by exhaustive bitmask search.
pub fn brute_force_placement_count(g: &DyckPath) -> usize {
    let n = g.n();
    let board: Vec<Cell> = (1..=n)
        .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
        .filter(|&c| g.is_board_cell(c))
        .collect();
    (0u64..1 << board.len())
        .filter(|mask| {
            let chosen: Vec<Cell> = (0..board.len())
                .filter(|b| mask >> b & 1 == 1)
                .map(|b| board[b])
                .collect();
            chosen.iter().map(|c| c.0).all_unique() && chosen.iter().map(|c| c.1).all_unique()
        })
        .count()
}

/// `Σ_μ r_{γ,μ}(1)` counts all rook placements.
pub fn placement_totals(n_max: usize) -> Check {
    for n in 0..=n_max {
        for g in enumerate_dyck(n) {
            let total: BigInt = r_polys(&g).values().map(QLaurent::eval_one).sum();
            let want = BigInt::from(brute_force_placement_count(&g));
            ensure(total == want, || format!("{g}: {total} vs {want}"))?;
        }
    }
    Ok(())
}

/// Every board cell is free for the empty placement.
pub fn empty_placement_free_cells(n_max: usize) -> Check {
    for n in 1..=n_max {
        for g in enumerate_dyck(n) {
            let want = n * (n - 1) / 2 - g.area();
            let got = fc(&g, &RookPlacement::empty(n));
            ensure(got == want, || {
                format!("{g}: fc(empty) = {got}, board has {want} cells")
            })?;
        }
    }
    Ok(())
}
