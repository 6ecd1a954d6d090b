//! Semistandard tableaux, Kostka numbers, the charge statistic and
//! Kostka–Foulkes polynomials.

use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::qseries::QLaurent;

/// A filling in English notation: `rows[0]` is the top row.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Tableau {
    rows: Vec<Vec<usize>>,
}

impl Tableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Self {
        Tableau { rows }
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition::from_composition(&self.rows.iter().map(Vec::len).collect::<Vec<_>>())
    }

    /// Rows weakly increase, columns strictly increase, entries positive,
    /// and row lengths weakly decrease.
    pub fn is_semistandard(&self) -> bool {
        let rows = &self.rows;
        if rows.windows(2).any(|w| w[0].len() < w[1].len()) {
            return false;
        }
        for (r, row) in rows.iter().enumerate() {
            if row.contains(&0) || row.windows(2).any(|w| w[0] > w[1]) {
                return false;
            }
            if r > 0 && row.iter().zip(&rows[r - 1]).any(|(b, a)| b <= a) {
                return false;
            }
        }
        true
    }

    /// `wt(T)`: `wt[k-1]` is the number of entries equal to `k`.
    pub fn weight(&self) -> Vec<usize> {
        let max = self.rows.iter().flatten().copied().max().unwrap_or(0);
        let mut wt = vec![0; max];
        for &x in self.rows.iter().flatten() {
            wt[x - 1] += 1;
        }
        wt
    }

    /// Rows read left to right, from the bottom row up.
    pub fn reading_word(&self) -> Vec<usize> {
        self.rows.iter().rev().flatten().copied().collect()
    }

    pub fn charge(&self) -> usize {
        charge(&self.reading_word()).expect("reading word of an SSYT with partition weight")
    }
}

/// All SSYT of shape `lambda` and weight `mu`.
///
/// Letters are added one value at a time; the cells holding value `k` form a
/// horizontal strip of size `mu_k` on top of the shape filled so far.
pub fn ssyt_enumerate(lambda: &Partition, mu: &Partition) -> Result<Vec<Tableau>> {
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch {
            expected: lambda.size(),
            got: mu.size(),
        });
    }
    let mut out = Vec::new();
    let rows = vec![Vec::new(); lambda.len()];
    fill(lambda, mu.parts(), 1, rows, &mut out);
    Ok(out)
}

fn fill(
    lambda: &Partition,
    weight: &[usize],
    letter: usize,
    rows: Vec<Vec<usize>>,
    out: &mut Vec<Tableau>,
) {
    if letter > weight.len() {
        out.push(Tableau { rows });
        return;
    }
    let need = weight[letter - 1];
    let cur: Vec<usize> = rows.iter().map(Vec::len).collect();
    // Row r may grow up to min(λ_r, previous length of row r-1).
    let caps: Vec<usize> = (0..cur.len())
        .map(|r| {
            let above = if r == 0 { usize::MAX } else { cur[r - 1] };
            lambda.part(r + 1).min(above) - cur[r]
        })
        .collect();
    let mut adds = vec![0; cur.len()];
    strips(&caps, need, 0, &mut adds, &mut |adds| {
        let mut next = rows.clone();
        for (row, &a) in next.iter_mut().zip(adds) {
            row.extend(std::iter::repeat_n(letter, a));
        }
        fill(lambda, weight, letter + 1, next, out);
    });
}

fn strips(caps: &[usize], left: usize, r: usize, adds: &mut [usize], f: &mut impl FnMut(&[usize])) {
    if r == caps.len() {
        if left == 0 {
            f(adds);
        }
        return;
    }
    let room: usize = caps[r..].iter().sum();
    if room < left {
        return;
    }
    for a in 0..=caps[r].min(left) {
        adds[r] = a;
        strips(caps, left - a, r + 1, adds, f);
    }
    adds[r] = 0;
}

pub fn kostka_number(lambda: &Partition, mu: &Partition) -> Result<usize> {
    Ok(ssyt_enumerate(lambda, mu)?.len())
}

/// Lascoux–Schützenberger charge of a word whose content is a partition.
///
/// Standard subwords are extracted by scanning leftward (cyclically) for
/// `1, 2, 3, …`. Within a subword `1` gets index 0, and the index of `r+1`
/// is one more than that of `r` exactly when `r+1` sits to the right of `r`
/// (the scan wrapped around). Charge is the sum of all indices.
pub fn charge(word: &[usize]) -> Result<usize> {
    let max = word.iter().copied().max().unwrap_or(0);
    let mut content = vec![0usize; max];
    for &x in word {
        if x == 0 {
            return Err(Error::Domain("word letters must be positive".into()));
        }
        content[x - 1] += 1;
    }
    if content.windows(2).any(|w| w[0] < w[1]) || content.contains(&0) {
        return Err(Error::Domain(format!(
            "word content {content:?} is not a partition"
        )));
    }
    let len = word.len();
    let mut used = vec![false; len];
    let mut remaining = content;
    let mut total = 0;
    while remaining.first().is_some_and(|&c| c > 0) {
        let top = remaining.iter().take_while(|&&c| c > 0).count();
        // Position just right of the word's end, so the first scan starts at the last letter.
        let mut at = len;
        let mut index = 0;
        for r in 1..=top {
            let mut p = at;
            loop {
                if p == 0 {
                    p = len;
                }
                p -= 1;
                if !used[p] && word[p] == r {
                    break;
                }
            }
            if r > 1 && p > at {
                index += 1;
            }
            total += index;
            used[p] = true;
            remaining[r - 1] -= 1;
            at = p;
        }
    }
    Ok(total)
}

/// `K_{λμ}(q) = Σ_{T ∈ SSYT(λ,μ)} q^{charge(T)}`
pub fn kf_poly(lambda: &Partition, mu: &Partition) -> Result<QLaurent> {
    let mut acc = QLaurent::zero();
    for t in ssyt_enumerate(lambda, mu)? {
        acc += &QLaurent::q_pow(t.charge() as i64);
    }
    Ok(acc)
}
