//! Per-degree transition matrices between the monomial, Schur and
//! Hall–Littlewood P bases.
//!
//! Rows and columns follow [`enumerate_partitions`] (reverse lexicographic),
//! which makes every matrix here upper unitriangular.

use std::collections::HashMap;
use std::ops::{Mul, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::partition::{enumerate_partitions, Partition};
use crate::qseries::QLaurent;
use crate::symfunc::tableau::{kf_poly, kostka_number};

type Slot = Arc<OnceLock<Arc<TransitionCache>>>;

#[derive(Debug)]
pub struct TransitionCache {
    degree: usize,
    parts: Vec<Partition>,
    index: HashMap<Partition, usize>,
    /// `kostka[λ][μ] = K_{λμ}`: `s_λ = Σ_μ K_{λμ} m_μ`.
    kostka: Vec<Vec<BigInt>>,
    kostka_inv: Vec<Vec<BigInt>>,
    /// `kf[λ][μ] = K_{λμ}(q)`: `s_λ = Σ_μ K_{λμ}(q) P_μ`.
    kf: Vec<Vec<QLaurent>>,
    kf_inv: Vec<Vec<QLaurent>>,
}

impl TransitionCache {
    pub fn build(degree: usize) -> Result<Self> {
        let parts = enumerate_partitions(degree);
        let index = parts
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, p)| (p, i))
            .collect();
        let mut kostka = Vec::with_capacity(parts.len());
        let mut kf = Vec::with_capacity(parts.len());
        for lambda in &parts {
            let mut krow = Vec::with_capacity(parts.len());
            let mut kfrow = Vec::with_capacity(parts.len());
            for mu in &parts {
                krow.push(BigInt::from(kostka_number(lambda, mu)?));
                kfrow.push(kf_poly(lambda, mu)?);
            }
            kostka.push(krow);
            kf.push(kfrow);
        }
        let kostka_inv = unitriangular_inverse(&kostka)?;
        let kf_inv = unitriangular_inverse(&kf)?;
        Ok(TransitionCache {
            degree,
            parts,
            index,
            kostka,
            kostka_inv,
            kf,
            kf_inv,
        })
    }

    /// Shared instance for `degree`, built at most once per process.
    pub fn get(degree: usize) -> Arc<TransitionCache> {
        static SLOTS: OnceLock<Mutex<HashMap<usize, Slot>>> = OnceLock::new();
        let slot = {
            let mut map = SLOTS
                .get_or_init(Default::default)
                .lock()
                .expect("transition cache lock poisoned");
            map.entry(degree).or_default().clone()
        };
        slot.get_or_init(|| {
            Arc::new(TransitionCache::build(degree).expect("transition matrices are unitriangular"))
        })
        .clone()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn partitions(&self) -> &[Partition] {
        &self.parts
    }

    pub fn index_of(&self, p: &Partition) -> Option<usize> {
        self.index.get(p).copied()
    }

    fn idx(&self, p: &Partition) -> usize {
        self.index_of(p)
            .unwrap_or_else(|| panic!("{p} is not a partition of {}", self.degree))
    }

    pub fn kostka(&self, lambda: &Partition, mu: &Partition) -> &BigInt {
        &self.kostka[self.idx(lambda)][self.idx(mu)]
    }

    pub fn kostka_inv(&self, lambda: &Partition, mu: &Partition) -> &BigInt {
        &self.kostka_inv[self.idx(lambda)][self.idx(mu)]
    }

    pub fn kf(&self, lambda: &Partition, mu: &Partition) -> &QLaurent {
        &self.kf[self.idx(lambda)][self.idx(mu)]
    }

    pub fn kf_inv(&self, lambda: &Partition, mu: &Partition) -> &QLaurent {
        &self.kf_inv[self.idx(lambda)][self.idx(mu)]
    }

    pub(crate) fn kostka_rows(&self) -> &[Vec<BigInt>] {
        &self.kostka
    }

    pub(crate) fn kostka_inv_rows(&self) -> &[Vec<BigInt>] {
        &self.kostka_inv
    }

    pub(crate) fn kf_rows(&self) -> &[Vec<QLaurent>] {
        &self.kf
    }

    pub(crate) fn kf_inv_rows(&self) -> &[Vec<QLaurent>] {
        &self.kf_inv
    }
}

/// Inverse of an upper unitriangular matrix by back-substitution; no division
/// is ever performed, so the inverse stays over the same ring.
pub fn unitriangular_inverse<T>(m: &[Vec<T>]) -> Result<Vec<Vec<T>>>
where
    T: Clone + Zero + One + PartialEq,
    for<'a> &'a T: Mul<&'a T, Output = T> + Sub<&'a T, Output = T>,
{
    let n = m.len();
    for (i, row) in m.iter().enumerate() {
        if row.len() != n {
            return Err(Error::Domain("matrix is not square".into()));
        }
        if !row[i].is_one() {
            return Err(Error::Domain(format!("diagonal entry {i} is not 1")));
        }
        if row[..i].iter().any(|x| !x.is_zero()) {
            return Err(Error::Domain(format!(
                "row {i} has entries below the diagonal"
            )));
        }
    }
    let mut inv = vec![vec![T::zero(); n]; n];
    for i in 0..n {
        inv[i][i] = T::one();
        for j in i + 1..n {
            let mut acc = T::zero();
            for k in i..j {
                if inv[i][k].is_zero() || m[k][j].is_zero() {
                    continue;
                }
                acc = &acc - &(&inv[i][k] * &m[k][j]);
            }
            inv[i][j] = acc;
        }
    }
    Ok(inv)
}
