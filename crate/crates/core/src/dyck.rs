//! Dyck paths as column-height sequences.
//!
//! A path on `n` columns is stored as its heights `(m_1, …, m_n)`, non-decreasing
//! with `i ≤ m_i ≤ n`. Cells are written `(column, row)` with `column < row`.
//! The incomparability graph of the associated unit interval order has an
//! edge `{i, j}` for `i < j ≤ m_i`; the remaining pairs `j > m_i` form the
//! board on which rooks are placed.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// `(column, row)`, 1-based.
pub type Cell = (usize, usize);

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct DyckPath {
    heights: Vec<usize>,
}

impl DyckPath {
    pub fn from_heights(heights: &[usize]) -> Result<Self> {
        let n = heights.len();
        for (idx, &m) in heights.iter().enumerate() {
            let i = idx + 1;
            if m < i {
                return Err(Error::InvalidHeights(format!(
                    "index {i}: height {m} is below the diagonal (need m_{i} >= {i})"
                )));
            }
            if m > n {
                return Err(Error::InvalidHeights(format!(
                    "index {i}: height {m} exceeds n = {n}"
                )));
            }
            if idx > 0 && heights[idx - 1] > m {
                return Err(Error::InvalidHeights(format!(
                    "index {i}: heights decrease ({} > {m})",
                    heights[idx - 1]
                )));
            }
        }
        Ok(DyckPath {
            heights: heights.to_vec(),
        })
    }

    /// Heights `(1, 2, …, n)`: the graph with no edges.
    pub fn minimal(n: usize) -> Self {
        DyckPath {
            heights: (1..=n).collect(),
        }
    }

    /// `N^k E^k`: heights all equal to `k`, the complete graph.
    pub fn complete(k: usize) -> Self {
        DyckPath {
            heights: vec![k; k],
        }
    }

    pub fn heights(&self) -> &[usize] {
        &self.heights
    }

    pub fn n(&self) -> usize {
        self.heights.len()
    }

    /// `γ(i)`, 1-based, with `γ(0) = 0`.
    pub fn height(&self, i: usize) -> usize {
        if i == 0 {
            0
        } else {
            self.heights[i - 1]
        }
    }

    /// Whether `{i, j}` (in either order) is an edge of the incomparability graph.
    pub fn is_edge(&self, i: usize, j: usize) -> bool {
        let (a, b) = if i < j { (i, j) } else { (j, i) };
        a != b && b <= self.height(a)
    }

    /// Whether `(i, j)` with `i < j` lies on the rook board (above the path).
    pub fn is_board_cell(&self, (i, j): Cell) -> bool {
        i >= 1 && i < j && j <= self.n() && j > self.height(i)
    }

    /// `a_i = |{c < i : m_c ≥ i}|` for each row.
    pub fn rows(&self) -> Vec<usize> {
        (1..=self.n())
            .map(|i| (1..i).filter(|&c| self.height(c) >= i).count())
            .collect()
    }

    pub fn area(&self) -> usize {
        self.heights
            .iter()
            .enumerate()
            .map(|(idx, &m)| m - (idx + 1))
            .sum()
    }

    pub fn area_and_rows(&self) -> (usize, Vec<usize>) {
        (self.area(), self.rows())
    }

    /// Edges `{i, j}` as pairs `(i, j)` with `i < j ≤ m_i`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (1..=self.n())
            .flat_map(|i| (i + 1..=self.height(i)).map(move |j| (i, j)))
            .collect()
    }

    /// Board cells `(i, j)` with `i < j` and `j > m_i`, column-major.
    pub fn poset_cells(&self) -> Vec<Cell> {
        let n = self.n();
        (1..=n)
            .flat_map(|i| (self.height(i) + 1..=n).map(move |j| (i, j)))
            .collect()
    }

    pub fn relations(&self) -> (Vec<(usize, usize)>, Vec<Cell>) {
        (self.edges(), self.poset_cells())
    }

    /// `self + other`: `other` attached after `self`.
    pub fn concat(&self, other: &DyckPath) -> DyckPath {
        let shift = self.n();
        let mut heights = self.heights.clone();
        heights.extend(other.heights.iter().map(|m| m + shift));
        DyckPath { heights }
    }

    pub fn to_text(&self) -> String {
        if self.heights.is_empty() {
            "-".into()
        } else {
            self.heights
                .iter()
                .map(|m| m.to_string())
                .collect::<Vec<_>>()
                .join(",")
        }
    }
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.to_text())
    }
}

impl fmt::Debug for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DyckPath{self}")
    }
}

impl FromStr for DyckPath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "-" || s.is_empty() {
            return Ok(DyckPath::minimal(0));
        }
        let heights = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidHeights(format!("bad height {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        DyckPath::from_heights(&heights)
    }
}

impl<'de> Deserialize<'de> for DyckPath {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            heights: Vec<usize>,
        }
        let r = Repr::deserialize(d)?;
        DyckPath::from_heights(&r.heights).map_err(serde::de::Error::custom)
    }
}

/// All Dyck paths on `n` columns, heights in lexicographic order.
pub fn enumerate_dyck(n: usize) -> Vec<DyckPath> {
    fn rec(n: usize, cur: &mut Vec<usize>, out: &mut Vec<DyckPath>) {
        let i = cur.len() + 1;
        if i > n {
            out.push(DyckPath {
                heights: cur.clone(),
            });
            return;
        }
        let lo = cur.last().copied().unwrap_or(0).max(i);
        for m in lo..=n {
            cur.push(m);
            rec(n, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, &mut Vec::new(), &mut out);
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum TripleKind {
    #[serde(rename = "1")]
    One,
    #[serde(rename = "2")]
    Two,
}

/// Three paths related by a ±1 surgery at `position`, on which a function
/// obeying the modular law satisfies `(1+q) f(γ₁) = q f(γ₀) + f(γ₂)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModularTriple {
    pub gamma0: DyckPath,
    pub gamma1: DyckPath,
    pub gamma2: DyckPath,
    pub kind: TripleKind,
    pub position: usize,
}

impl ModularTriple {
    /// Builds the triple of the given kind around `gamma1`, if all conditions hold.
    pub fn around(gamma1: &DyckPath, kind: TripleKind, i: usize) -> Option<ModularTriple> {
        let n = gamma1.n();
        if i == 0 || i >= n {
            return None;
        }
        let g = |c: usize| gamma1.height(c);
        let mut h0 = gamma1.heights.clone();
        let mut h2 = gamma1.heights.clone();
        match kind {
            TripleKind::One => {
                if !(g(i - 1) < g(i) && g(i) < g(i + 1)) {
                    return None;
                }
                // γ₁(γ₁(i)) = γ₁(γ₁(i)+1) only makes sense for γ₁(i) + 1 ≤ n.
                let top = g(i);
                if top + 1 > n || g(top) != g(top + 1) {
                    return None;
                }
                h0[i - 1] = g(i).checked_sub(1)?;
                h2[i - 1] = g(i) + 1;
            }
            TripleKind::Two => {
                if g(i) + 1 != g(i + 1) {
                    return None;
                }
                if gamma1.heights.contains(&i) {
                    return None;
                }
                h2[i - 1] = g(i) + 1;
                h0[i] = g(i + 1) - 1;
            }
        }
        let gamma0 = DyckPath::from_heights(&h0).ok()?;
        let gamma2 = DyckPath::from_heights(&h2).ok()?;
        Some(ModularTriple {
            gamma0,
            gamma1: gamma1.clone(),
            gamma2,
            kind,
            position: i,
        })
    }

    /// Re-checks every defining condition literally against the three stored paths.
    pub fn is_valid(&self) -> bool {
        let n = self.gamma1.n();
        let i = self.position;
        if self.gamma0.n() != n || self.gamma2.n() != n || i == 0 || i >= n {
            return false;
        }
        let (g0, g1, g2) = (
            |c| self.gamma0.height(c),
            |c| self.gamma1.height(c),
            |c| self.gamma2.height(c),
        );
        match self.kind {
            TripleKind::One => {
                let c1 = g0(i) + 1 == g1(i)
                    && g1(i) + 1 == g2(i)
                    && g1(i - 1) < g1(i)
                    && g1(i) < g1(i + 1);
                let c2 = (1..=n)
                    .filter(|&j| j != i)
                    .all(|j| g0(j) == g1(j) && g1(j) == g2(j));
                let c3 = g1(i) < n && g1(g1(i)) == g1(g1(i) + 1);
                c1 && c2 && c3
            }
            TripleKind::Two => {
                let c1 = g1(i) + 1 == g1(i + 1)
                    && g0(i) == g1(i)
                    && g1(i) + 1 == g2(i)
                    && g0(i + 1) + 1 == g1(i + 1)
                    && g1(i + 1) == g2(i + 1);
                let c2 = (1..=n)
                    .filter(|&j| j != i && j != i + 1)
                    .all(|j| g0(j) == g1(j) && g1(j) == g2(j));
                let c3 = (1..=n).all(|j| g1(j) != i);
                c1 && c2 && c3
            }
        }
    }
}

/// Every modular triple on `n` columns, by scanning `γ₁ ∈ D_n`, both kinds and all positions.
pub fn modular_triples(n: usize) -> Vec<ModularTriple> {
    let mut out = Vec::new();
    for g1 in enumerate_dyck(n) {
        for kind in [TripleKind::One, TripleKind::Two] {
            for i in 1..n {
                if let Some(t) = ModularTriple::around(&g1, kind, i) {
                    debug_assert!(t.is_valid());
                    out.push(t);
                }
            }
        }
    }
    out
}
