//! Homogeneous symmetric functions with coefficients in `Z[q, q⁻¹]`.
//!
//! A [`SymFunc`] is a finite combination of basis elements indexed by the
//! partitions of its degree. Three bases are supported: monomial `m_λ`, Schur
//! `s_λ` and Hall–Littlewood `P_λ(x; q)`. Hall–Littlewood functions are never
//! represented symbolically; they exist only through the Kostka–Foulkes
//! transition matrix `s_λ = Σ_μ K_{λμ}(q) P_μ` and its exact inverse.

pub mod oracle;
pub mod tableau;
pub mod transition;

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::qseries::QLaurent;

pub use tableau::{charge, kf_poly, kostka_number, ssyt_enumerate, Tableau};
pub use transition::TransitionCache;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Basis {
    Monomial,
    Schur,
    HlP,
}

impl Basis {
    pub fn symbol(self) -> &'static str {
        match self {
            Basis::Monomial => "m",
            Basis::Schur => "s",
            Basis::HlP => "P",
        }
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct SymFunc {
    degree: usize,
    basis: Basis,
    coeffs: BTreeMap<Partition, QLaurent>,
}

impl SymFunc {
    pub fn zero(degree: usize, basis: Basis) -> Self {
        SymFunc {
            degree,
            basis,
            coeffs: BTreeMap::new(),
        }
    }

    /// The constant `1` of degree 0.
    pub fn unit() -> Self {
        Self::basis_element(Basis::Monomial, Partition::empty())
    }

    pub fn basis_element(basis: Basis, lambda: Partition) -> Self {
        let degree = lambda.size();
        let mut coeffs = BTreeMap::new();
        coeffs.insert(lambda, QLaurent::one());
        SymFunc {
            degree,
            basis,
            coeffs,
        }
    }

    /// Collects terms, summing repeated keys and dropping zeros.
    pub fn from_terms(
        degree: usize,
        basis: Basis,
        terms: impl IntoIterator<Item = (Partition, QLaurent)>,
    ) -> Result<Self> {
        let mut f = SymFunc::zero(degree, basis);
        for (lambda, c) in terms {
            if lambda.size() != degree {
                return Err(Error::SizeMismatch {
                    expected: degree,
                    got: lambda.size(),
                });
            }
            f.add_term(lambda, &c);
        }
        Ok(f)
    }

    fn add_term(&mut self, lambda: Partition, c: &QLaurent) {
        if c.is_zero() {
            return;
        }
        match self.coeffs.entry(lambda) {
            Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn coeff(&self, lambda: &Partition) -> QLaurent {
        self.coeffs
            .get(lambda)
            .cloned()
            .unwrap_or_else(QLaurent::zero)
    }

    /// Nonzero terms in reverse lexicographic order of the index.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &QLaurent)> {
        self.coeffs.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn scale(&self, c: &QLaurent) -> SymFunc {
        let mut out = SymFunc::zero(self.degree, self.basis);
        for (l, v) in &self.coeffs {
            out.add_term(l.clone(), &(v * c));
        }
        out
    }

    /// Applies `f` to every coefficient.
    pub fn map_coeffs(&self, f: impl Fn(&QLaurent) -> QLaurent) -> SymFunc {
        let mut out = SymFunc::zero(self.degree, self.basis);
        for (l, v) in &self.coeffs {
            out.add_term(l.clone(), &f(v));
        }
        out
    }

    /// `q ↦ q⁻¹` in every coefficient.
    pub fn invert_q(&self) -> SymFunc {
        self.map_coeffs(QLaurent::invert_q)
    }

    fn same_space(&self, other: &SymFunc) -> Result<()> {
        if self.degree != other.degree {
            return Err(Error::SizeMismatch {
                expected: self.degree,
                got: other.degree,
            });
        }
        if self.basis != other.basis {
            return Err(Error::Basis(format!(
                "cannot combine {:?} with {:?} without conversion",
                self.basis, other.basis
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &SymFunc) -> Result<SymFunc> {
        self.same_space(other)?;
        let mut out = self.clone();
        for (l, v) in &other.coeffs {
            out.add_term(l.clone(), v);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &SymFunc) -> Result<SymFunc> {
        self.add(&other.scale(&QLaurent::constant(-1)))
    }

    /// Change of basis through the Schur basis.
    pub fn to_basis(&self, target: Basis) -> SymFunc {
        if self.basis == target {
            return self.clone();
        }
        let cache = TransitionCache::get(self.degree);
        let schur = match self.basis {
            Basis::Schur => self.clone(),
            Basis::Monomial => monomial_to_schur(self, &cache),
            Basis::HlP => hlp_to_schur(self, &cache),
        };
        match target {
            Basis::Schur => schur,
            Basis::Monomial => schur_to_monomial(&schur, &cache),
            Basis::HlP => schur_to_hlp_with(&schur, &cache),
        }
    }

    /// Exact value at `x = xs` (finitely many variables) and `q = q0`.
    pub fn eval(&self, xs: &[BigRational], q0: &BigRational) -> Result<BigRational> {
        let m = self.to_basis(Basis::Monomial);
        let mut acc = BigRational::zero();
        for (lambda, c) in m.terms() {
            acc += c.eval(q0)? * oracle::eval_monomial(lambda, xs);
        }
        Ok(acc)
    }
}

fn convert_rows<C>(
    f: &SymFunc,
    cache: &TransitionCache,
    target: Basis,
    matrix: &[Vec<C>],
    mul: impl Fn(&QLaurent, &C) -> Option<QLaurent>,
) -> SymFunc {
    // Treats the coefficients as a row vector and multiplies by `matrix`.
    let parts = cache.partitions();
    let mut out = SymFunc::zero(f.degree, target);
    for (lambda, c) in &f.coeffs {
        let i = cache.index_of(lambda).expect("partition of the degree");
        for (j, entry) in matrix[i].iter().enumerate() {
            if let Some(t) = mul(c, entry) {
                out.add_term(parts[j].clone(), &t);
            }
        }
    }
    out
}

fn times_int(c: &QLaurent, k: &num_bigint::BigInt) -> Option<QLaurent> {
    (!k.is_zero()).then(|| c.scale(k))
}

fn times_poly(c: &QLaurent, k: &QLaurent) -> Option<QLaurent> {
    (!k.is_zero()).then(|| c * k)
}

fn monomial_to_schur(f: &SymFunc, cache: &TransitionCache) -> SymFunc {
    convert_rows(f, cache, Basis::Schur, cache.kostka_inv_rows(), times_int)
}

fn schur_to_monomial(f: &SymFunc, cache: &TransitionCache) -> SymFunc {
    convert_rows(f, cache, Basis::Monomial, cache.kostka_rows(), times_int)
}

fn schur_to_hlp_with(f: &SymFunc, cache: &TransitionCache) -> SymFunc {
    convert_rows(f, cache, Basis::HlP, cache.kf_rows(), times_poly)
}

fn hlp_to_schur(f: &SymFunc, cache: &TransitionCache) -> SymFunc {
    convert_rows(f, cache, Basis::Schur, cache.kf_inv_rows(), times_poly)
}

fn require(f: &SymFunc, basis: Basis) -> Result<()> {
    if f.basis != basis {
        return Err(Error::Basis(format!(
            "expected {basis:?} basis, got {:?}",
            f.basis
        )));
    }
    Ok(())
}

/// Monomial to Schur via the inverse Kostka matrix.
pub fn to_schur(f: &SymFunc) -> Result<SymFunc> {
    require(f, Basis::Monomial)?;
    Ok(f.to_basis(Basis::Schur))
}

/// Schur to monomial via the Kostka matrix.
pub fn to_monomial(f: &SymFunc) -> Result<SymFunc> {
    require(f, Basis::Schur)?;
    Ok(f.to_basis(Basis::Monomial))
}

/// Schur to Hall–Littlewood P: `coeff(P_μ) = Σ_λ coeff(s_λ) K_{λμ}(q)`.
pub fn schur_to_hlp(f: &SymFunc) -> Result<SymFunc> {
    require(f, Basis::Schur)?;
    Ok(f.to_basis(Basis::HlP))
}

/// `ω`: moves the coefficient of `s_λ` to `s_{λ'}`.
pub fn omega_schur(f: &SymFunc) -> Result<SymFunc> {
    require(f, Basis::Schur)?;
    SymFunc::from_terms(
        f.degree,
        Basis::Schur,
        f.coeffs.iter().map(|(l, c)| (l.conjugate(), c.clone())),
    )
}

/// `H_μ = Σ_λ K_{λμ}(q) s_λ`, or with `transformed`,
/// `H̃_μ = Σ_λ q^{n(μ)} K_{λμ}(q⁻¹) s_λ`.
pub fn modified_hl(mu: &Partition, transformed: bool) -> SymFunc {
    let cache = TransitionCache::get(mu.size());
    let shift = mu.nstat() as i64;
    let terms = cache.partitions().iter().map(|lambda| {
        let k = cache.kf(lambda, mu);
        let c = if transformed {
            k.invert_q().shift(shift)
        } else {
            k.clone()
        };
        (lambda.clone(), c)
    });
    SymFunc::from_terms(mu.size(), Basis::Schur, terms).expect("partitions of |μ|")
}

/// Product of two symmetric functions, returned in the monomial basis.
///
/// The coefficient of `m_ν` is the coefficient of the power product
/// `x_1^{ν_1} ⋯ x_ℓ^{ν_ℓ}` in the product of the explicit expansions of
/// both factors: a sum over all splittings `ν = a + b` of the exponent
/// vector into nonnegative vectors, each contributing
/// `[m_{sort a}] f · [m_{sort b}] g`.
pub fn multiply(f: &SymFunc, g: &SymFunc) -> SymFunc {
    let f = f.to_basis(Basis::Monomial);
    let g = g.to_basis(Basis::Monomial);
    let (n1, n2) = (f.degree, g.degree);
    let degree = n1 + n2;
    let mut out = SymFunc::zero(degree, Basis::Monomial);
    for nu in crate::partition::enumerate_partitions(degree) {
        let mut acc = QLaurent::zero();
        let mut a = vec![0; nu.len()];
        splits(nu.parts(), 0, n1, &mut a, &mut |a| {
            let b: Vec<usize> = nu.parts().iter().zip(a).map(|(v, x)| v - x).collect();
            let fa = f.coeffs.get(&Partition::from_composition(a));
            let gb = g.coeffs.get(&Partition::from_composition(&b));
            if let (Some(x), Some(y)) = (fa, gb) {
                acc += &(x * y);
            }
        });
        out.add_term(nu, &acc);
    }
    debug_assert!(out.degree == degree);
    out
}

fn splits(nu: &[usize], r: usize, left: usize, a: &mut [usize], f: &mut impl FnMut(&[usize])) {
    if r == nu.len() {
        if left == 0 {
            f(a);
        }
        return;
    }
    let room: usize = nu[r..].iter().sum();
    if room < left {
        return;
    }
    for x in 0..=nu[r].min(left) {
        a[r] = x;
        splits(nu, r + 1, left - x, a, f);
    }
    a[r] = 0;
}

/// `e_k = m_{(1^k)}`
pub fn elementary(k: usize) -> SymFunc {
    SymFunc::basis_element(Basis::Monomial, Partition::column(k))
}

impl fmt::Display for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let sym = self.basis.symbol();
        for (i, (l, c)) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if c.is_one() {
                write!(f, "{sym}{l}")?;
            } else {
                write!(f, "({c}){sym}{l}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SymFunc[deg {}] {self}", self.degree)
    }
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    part: Partition,
    poly: QLaurent,
}

#[derive(Serialize, Deserialize)]
struct SymFuncRepr {
    degree: usize,
    basis: Basis,
    coeffs: Vec<TermRepr>,
}

impl Serialize for SymFunc {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        SymFuncRepr {
            degree: self.degree,
            basis: self.basis,
            coeffs: self
                .coeffs
                .iter()
                .map(|(l, c)| TermRepr {
                    part: l.clone(),
                    poly: c.clone(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for SymFunc {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = SymFuncRepr::deserialize(d)?;
        SymFunc::from_terms(
            r.degree,
            r.basis,
            r.coeffs.into_iter().map(|t| (t.part, t.poly)),
        )
        .map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::enumerate_partitions;

    fn pt(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn m(l: &[usize]) -> SymFunc {
        SymFunc::basis_element(Basis::Monomial, pt(l))
    }

    fn s(l: &[usize]) -> SymFunc {
        SymFunc::basis_element(Basis::Schur, pt(l))
    }

    fn c(v: i64) -> QLaurent {
        QLaurent::constant(v)
    }

    #[test]
    fn schur_monomial_examples() {
        assert_eq!(to_monomial(&s(&[1, 1, 1])).unwrap(), m(&[1, 1, 1]));
        let want = SymFunc::from_terms(
            3,
            Basis::Monomial,
            [(pt(&[2, 1]), c(1)), (pt(&[1, 1, 1]), c(2))],
        )
        .unwrap();
        assert_eq!(to_monomial(&s(&[2, 1])).unwrap(), want);
        for n in 0..=6 {
            for l in enumerate_partitions(n) {
                let sl = SymFunc::basis_element(Basis::Schur, l);
                assert_eq!(to_schur(&to_monomial(&sl).unwrap()).unwrap(), sl);
            }
        }
        assert!(to_schur(&s(&[1])).is_err());
    }

    #[test]
    fn hall_littlewood_examples() {
        let l = pt(&[2, 1]);
        let got = schur_to_hlp(&s(&[2, 1])).unwrap();
        let cache = TransitionCache::get(3);
        for mu in enumerate_partitions(3) {
            assert_eq!(got.coeff(&mu), cache.kf(&l, &mu).clone());
        }
        for n in 1..=6 {
            let p = SymFunc::basis_element(Basis::HlP, Partition::column(n));
            assert_eq!(p.to_basis(Basis::Monomial), elementary(n));
        }
        let p2 = SymFunc::basis_element(Basis::HlP, pt(&[2])).to_basis(Basis::Monomial);
        assert_eq!(p2.coeff(&pt(&[2])), c(1));
        assert_eq!(p2.coeff(&pt(&[1, 1])), QLaurent::new(0, [1, -1]));
    }

    #[test]
    fn omega_examples() {
        assert_eq!(omega_schur(&s(&[2, 1])).unwrap(), s(&[2, 1]));
        assert_eq!(omega_schur(&s(&[3])).unwrap(), s(&[1, 1, 1]));
        assert!(omega_schur(&m(&[3])).is_err());
    }

    #[test]
    fn modified_hl_examples() {
        for n in 1..=5 {
            let h = modified_hl(&Partition::column(n), false);
            assert_eq!(h.coeff(&Partition::column(n)), c(1));
            for mu in enumerate_partitions(n) {
                let h = modified_hl(&mu, false);
                assert_eq!(h.coeff(&pt(&[n])), QLaurent::q_pow(mu.nstat() as i64));
                let ht = modified_hl(&mu, true);
                let via = h.invert_q().scale(&QLaurent::q_pow(mu.nstat() as i64));
                assert_eq!(ht, via);
                assert!(ht.terms().all(|(_, v)| v.is_polynomial()));
            }
        }
    }

    #[test]
    fn multiply_examples() {
        let want = SymFunc::from_terms(2, Basis::Monomial, [(pt(&[2]), c(1)), (pt(&[1, 1]), c(2))])
            .unwrap();
        assert_eq!(multiply(&m(&[1]), &m(&[1])), want);
        let f = s(&[2, 1]).to_basis(Basis::Monomial);
        assert_eq!(multiply(&f, &SymFunc::unit()), f);
        assert_eq!(multiply(&SymFunc::unit(), &f), f);
        let want = SymFunc::from_terms(
            3,
            Basis::Monomial,
            [(pt(&[2, 1]), c(1)), (pt(&[1, 1, 1]), c(3))],
        )
        .unwrap();
        assert_eq!(multiply(&elementary(2), &elementary(1)), want);
    }

    #[test]
    fn schur_products_match_pieri() {
        // s_1 * s_{(2,1)} = s_{(3,1)} + s_{(2,2)} + s_{(2,1,1)}
        let got = multiply(&s(&[1]), &s(&[2, 1])).to_basis(Basis::Schur);
        let want = SymFunc::from_terms(
            4,
            Basis::Schur,
            [
                (pt(&[3, 1]), c(1)),
                (pt(&[2, 2]), c(1)),
                (pt(&[2, 1, 1]), c(1)),
            ],
        )
        .unwrap();
        assert_eq!(got, want);
    }

    #[test]
    fn add_requires_same_space() {
        assert!(m(&[1]).add(&s(&[1])).is_err());
        assert!(m(&[1]).add(&m(&[2])).is_err());
        let z = m(&[2]).sub(&m(&[2])).unwrap();
        assert!(z.is_zero());
    }

    #[test]
    fn json_schema() {
        let f = SymFunc::from_terms(
            2,
            Basis::Schur,
            [(pt(&[2]), c(1)), (pt(&[1, 1]), QLaurent::q_pow(1))],
        )
        .unwrap();
        let j = serde_json::to_string(&f).unwrap();
        assert_eq!(
            j,
            r#"{"degree":2,"basis":"schur","coeffs":[{"part":[2],"poly":{"min_exp":0,"coeffs":[1]}},{"part":[1,1],"poly":{"min_exp":1,"coeffs":[1]}}]}"#
        );
        let back: SymFunc = serde_json::from_str(&j).unwrap();
        assert_eq!(back, f);
        let hl = SymFunc::basis_element(Basis::HlP, pt(&[1]));
        assert!(serde_json::to_string(&hl)
            .unwrap()
            .contains(r#""basis":"hl_p""#));
    }
}
