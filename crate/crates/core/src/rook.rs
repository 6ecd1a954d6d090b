//! Linked rook placements on the board above a Dyck path, their chain
//! decomposition and extended ranks, the free-cell statistic, and the
//! generating polynomials `r_{γ,μ}(q)`.
//!
//! A rook placement is an ordinary non-attacking placement; the links are
//! implied: rooks `(i, j)` and `(j, k)` belong to the same linked rook. Each
//! diagonal index `1..=n` lies on exactly one chain `d_1 < d_2 < … < d_ℓ`
//! whose consecutive entries are joined by rooks `(d_t, d_{t+1})`, and the
//! chain lengths sorted in decreasing order give the type of the placement.
//!
//! In the extended placement a chain of length `ℓ` becomes
//! `(d_1,d_1), (d_1,d_2), (d_2,d_2), …, (d_ℓ,d_ℓ), (d_ℓ,n+1)` with ranks
//! `0,1,1,2,…,ℓ-1,ℓ`. So the topmost extended rook of column `v` has rank
//! `pos(v)` and the leftmost extended rook of row `v` has rank `pos(v) - 1`,
//! where `pos` is the 1-based position of `v` on its chain.

use std::collections::BTreeMap;

use num_traits::Zero;
use serde::{Serialize, Serializer};

use crate::dyck::{Cell, DyckPath};
use crate::error::{Error, Result};
use crate::partition::{enumerate_partitions, Partition};
use crate::qseries::{q_factorial_product, QLaurent};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RookPlacement {
    n: usize,
    /// Sorted by column.
    cells: Vec<Cell>,
}

impl RookPlacement {
    /// Validates `cells` as a non-attacking placement on the board of `gamma`.
    pub fn new(gamma: &DyckPath, mut cells: Vec<Cell>) -> Result<Self> {
        let n = gamma.n();
        let mut col = vec![false; n + 1];
        let mut row = vec![false; n + 1];
        for &(i, j) in &cells {
            if !gamma.is_board_cell((i, j)) {
                return Err(Error::Domain(format!("cell ({i},{j}) is not on the board")));
            }
            if std::mem::replace(&mut col[i], true) {
                return Err(Error::Domain(format!("two rooks in column {i}")));
            }
            if std::mem::replace(&mut row[j], true) {
                return Err(Error::Domain(format!("two rooks in row {j}")));
            }
        }
        cells.sort_unstable();
        Ok(RookPlacement { n, cells })
    }

    pub fn empty(n: usize) -> Self {
        RookPlacement {
            n,
            cells: Vec::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn num_rooks(&self) -> usize {
        self.cells.len()
    }

    /// `succ[i] = Some(j)` when a rook sits at `(i, j)`; index 0 unused.
    fn successors(&self) -> Vec<Option<usize>> {
        let mut s = vec![None; self.n + 1];
        for &(i, j) in &self.cells {
            s[i] = Some(j);
        }
        s
    }

    fn predecessors(&self) -> Vec<Option<usize>> {
        let mut p = vec![None; self.n + 1];
        for &(i, j) in &self.cells {
            p[j] = Some(i);
        }
        p
    }

    pub fn chains(&self) -> ChainDecomposition {
        chain_decompose(self)
    }

    pub fn type_partition(&self) -> Partition {
        chain_decompose(self).type_partition
    }
}

impl Serialize for RookPlacement {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let pairs: Vec<[usize; 2]> = self.cells.iter().map(|&(i, j)| [i, j]).collect();
        pairs.serialize(s)
    }
}

/// Every non-attacking placement on the board of `gamma`, the empty one first.
///
/// Columns are filled left to right; each column either stays empty or takes
/// an unused row above the path.
pub fn enumerate_placements(gamma: &DyckPath) -> Vec<RookPlacement> {
    fn rec(
        gamma: &DyckPath,
        col: usize,
        used: &mut [bool],
        cur: &mut Vec<Cell>,
        out: &mut Vec<RookPlacement>,
    ) {
        let n = gamma.n();
        if col > n {
            out.push(RookPlacement {
                n,
                cells: cur.clone(),
            });
            return;
        }
        rec(gamma, col + 1, used, cur, out);
        for row in gamma.height(col) + 1..=n {
            if row <= col || used[row] {
                continue;
            }
            used[row] = true;
            cur.push((col, row));
            rec(gamma, col + 1, used, cur, out);
            cur.pop();
            used[row] = false;
        }
    }
    let mut out = Vec::new();
    let mut used = vec![false; gamma.n() + 1];
    rec(gamma, 1, &mut used, &mut Vec::new(), &mut out);
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainDecomposition {
    /// Chains ordered by their smallest element.
    pub chains: Vec<Vec<usize>>,
    /// `pos[v]` is the 1-based position of `v` on its chain; index 0 unused.
    pub pos: Vec<usize>,
    pub type_partition: Partition,
}

pub fn chain_decompose(p: &RookPlacement) -> ChainDecomposition {
    let n = p.n;
    let succ = p.successors();
    let pred = p.predecessors();
    let mut pos = vec![0; n + 1];
    let mut chains = Vec::new();
    for start in 1..=n {
        if pred[start].is_some() {
            continue;
        }
        let mut chain = vec![start];
        let mut v = start;
        while let Some(w) = succ[v] {
            chain.push(w);
            v = w;
        }
        for (k, &v) in chain.iter().enumerate() {
            pos[v] = k + 1;
        }
        chains.push(chain);
    }
    let lens: Vec<usize> = chains.iter().map(Vec::len).collect();
    ChainDecomposition {
        chains,
        pos,
        type_partition: Partition::from_composition(&lens),
    }
}

/// Ranks read off the extended placement.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtendedRanks {
    n: usize,
    col_rank: Vec<usize>,
    row_rank: Vec<usize>,
    row_leftmost_col: Vec<usize>,
    col_topmost_row: Vec<usize>,
}

impl ExtendedRanks {
    /// Rank `c_i` of the topmost extended rook in column `i`.
    pub fn col_rank(&self, i: usize) -> usize {
        self.col_rank[i]
    }

    /// Rank `r_j` of the leftmost extended rook in row `j`.
    pub fn row_rank(&self, j: usize) -> usize {
        self.row_rank[j]
    }

    /// Column `i'(j)` of the leftmost extended rook in row `j` (`j` itself if diagonal).
    pub fn row_leftmost_col(&self, j: usize) -> usize {
        self.row_leftmost_col[j]
    }

    /// Row `j'(i)` of the topmost extended rook in column `i` (`n + 1` if in the extended row).
    pub fn col_topmost_row(&self, i: usize) -> usize {
        self.col_topmost_row[i]
    }

    pub fn n(&self) -> usize {
        self.n
    }
}

pub fn extended_ranks(p: &RookPlacement) -> ExtendedRanks {
    let n = p.n;
    let chains = chain_decompose(p);
    let succ = p.successors();
    let pred = p.predecessors();
    let mut er = ExtendedRanks {
        n,
        col_rank: vec![0; n + 1],
        row_rank: vec![0; n + 1],
        row_leftmost_col: vec![0; n + 1],
        col_topmost_row: vec![0; n + 1],
    };
    for v in 1..=n {
        er.col_rank[v] = chains.pos[v];
        er.row_rank[v] = chains.pos[v] - 1;
        er.row_leftmost_col[v] = pred[v].unwrap_or(v);
        er.col_topmost_row[v] = succ[v].unwrap_or(n + 1);
    }
    er
}

/// Which free-cell rule to apply.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum FcRule {
    /// The column's topmost extended rook must lie strictly above the cell.
    #[default]
    Gated,
    /// The rank inequalities alone, without the position requirement. Kept so
    /// the verifier can show that this reading breaks the expansion.
    Ungated,
}

fn is_free(ranks: &ExtendedRanks, (i, j): Cell, rule: FcRule) -> bool {
    if rule == FcRule::Gated && ranks.col_topmost_row(i) <= j {
        return false;
    }
    let a = ranks.col_rank(i);
    let b = ranks.row_rank(j);
    let ip = ranks.row_leftmost_col(j);
    (i < ip && b <= a) || (ip < i && b < a)
}

pub fn free_cells_with(gamma: &DyckPath, p: &RookPlacement, rule: FcRule) -> Vec<Cell> {
    let ranks = extended_ranks(p);
    gamma
        .poset_cells()
        .into_iter()
        .filter(|&c| is_free(&ranks, c, rule))
        .collect()
}

pub fn free_cells(gamma: &DyckPath, p: &RookPlacement) -> Vec<Cell> {
    free_cells_with(gamma, p, FcRule::Gated)
}

/// `fc_γ(P)`
pub fn fc(gamma: &DyckPath, p: &RookPlacement) -> usize {
    free_cells(gamma, p).len()
}

/// A placement with its type and free-cell count.
#[derive(Clone, Debug, Serialize)]
pub struct WeightedPlacement {
    pub rooks: RookPlacement,
    #[serde(rename = "type")]
    pub type_partition: Partition,
    pub fc: usize,
}

pub fn weighted_placements(gamma: &DyckPath, rule: FcRule) -> Vec<WeightedPlacement> {
    enumerate_placements(gamma)
        .into_iter()
        .map(|p| WeightedPlacement {
            type_partition: p.type_partition(),
            fc: free_cells_with(gamma, &p, rule).len(),
            rooks: p,
        })
        .collect()
}

/// `r_{γ,μ}(q)` for every `μ ⊢ n` (zero entries included).
pub fn r_polys_with(gamma: &DyckPath, rule: FcRule) -> BTreeMap<Partition, QLaurent> {
    let mut out: BTreeMap<Partition, QLaurent> = enumerate_partitions(gamma.n())
        .into_iter()
        .map(|mu| (mu, QLaurent::zero()))
        .collect();
    for wp in weighted_placements(gamma, rule) {
        *out.get_mut(&wp.type_partition)
            .expect("type is a partition of n") += &QLaurent::q_pow(wp.fc as i64);
    }
    out
}

pub fn r_polys(gamma: &DyckPath) -> BTreeMap<Partition, QLaurent> {
    r_polys_with(gamma, FcRule::Gated)
}

/// `r_{γ,μ}(q) = Σ_{P ∈ LRP(γ,μ)} q^{fc(P)}`
pub fn r_poly(gamma: &DyckPath, mu: &Partition) -> Result<QLaurent> {
    check_size(gamma, mu)?;
    Ok(r_polys(gamma).remove(mu).unwrap_or_else(QLaurent::zero))
}

fn check_size(gamma: &DyckPath, mu: &Partition) -> Result<()> {
    if mu.size() != gamma.n() {
        return Err(Error::SizeMismatch {
            expected: gamma.n(),
            got: mu.size(),
        });
    }
    Ok(())
}

/// `q^{area(γ) - n(μ)} r · Π_i [m_i(μ)]_q!`, asserted to be a polynomial.
pub fn hl_coefficient_from(gamma: &DyckPath, mu: &Partition, r: &QLaurent) -> QLaurent {
    let shift = gamma.area() as i64 - mu.nstat() as i64;
    let c = &r.shift(shift) * &q_factorial_product(mu.multiplicities().into_values());
    assert!(
        c.is_polynomial(),
        "coefficient of P_{mu} for {gamma} has negative powers of q: {c}"
    );
    c
}

/// Coefficient of `P_μ` in `X_γ` predicted by the linked rook expansion.
pub fn hl_coefficient(gamma: &DyckPath, mu: &Partition) -> Result<QLaurent> {
    let r = r_poly(gamma, mu)?;
    Ok(hl_coefficient_from(gamma, mu, &r))
}

/// All predicted `P_μ` coefficients of `X_γ`, using the given free-cell rule.
pub fn hl_coefficients_with(gamma: &DyckPath, rule: FcRule) -> BTreeMap<Partition, QLaurent> {
    r_polys_with(gamma, rule)
        .into_iter()
        .map(|(mu, r)| {
            let c = hl_coefficient_from(gamma, &mu, &r);
            (mu, c)
        })
        .collect()
}

pub fn hl_coefficients(gamma: &DyckPath) -> BTreeMap<Partition, QLaurent> {
    hl_coefficients_with(gamma, FcRule::Gated)
}
