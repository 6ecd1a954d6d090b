//! Executable identity checks. Each check compares two exactly computed
//! values and reports either `verified` or a counterexample carrying both
//! sides.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::chromatic::{chromatic_qsym, llt_poly, principal_specialization};
use crate::dyck::{enumerate_dyck, modular_triples, DyckPath, ModularTriple};
use crate::error::{Error, Result};
use crate::partition::{enumerate_partitions, Partition};
use crate::qseries::{q_binomial, q_factorial, q_falling, QLaurent};
use crate::rook::{hl_coefficients_with, r_polys, FcRule};
use crate::symfunc::{elementary, modified_hl, multiply, omega_schur, Basis, SymFunc};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Identity {
    /// Hall–Littlewood expansion of `X_γ` through `r_{γ,μ}`.
    Main,
    /// Modular law, on `r_{γ,μ}` and on `X_γ`.
    Modular,
    /// Multiplicativity under `γ ↦ γ + N^k E^k`.
    Mult,
    /// Both Hall–Littlewood expansions of `LLT_γ`.
    Llt,
    /// Principal specialization and the falling-factorial refinement.
    Principal,
    /// Monomial expansion of `X_γ` at `q = 1`.
    Xm,
}

impl Identity {
    pub const ALL: [Identity; 6] = [
        Identity::Main,
        Identity::Modular,
        Identity::Mult,
        Identity::Llt,
        Identity::Principal,
        Identity::Xm,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Identity::Main => "main",
            Identity::Modular => "modular",
            Identity::Mult => "mult",
            Identity::Llt => "llt",
            Identity::Principal => "principal",
            Identity::Xm => "xm",
        }
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Identity {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Identity::ALL
            .into_iter()
            .find(|i| i.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown identity {s:?}")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Verified,
    Counterexample,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub identity: Identity,
    pub instance: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub lhs: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub rhs: Option<Value>,
}

impl CheckReport {
    fn compare<T: PartialEq + Serialize>(
        identity: Identity,
        instance: String,
        lhs: &T,
        rhs: &T,
    ) -> Self {
        if lhs == rhs {
            CheckReport {
                identity,
                instance,
                status: Status::Verified,
                lhs: None,
                rhs: None,
            }
        } else {
            CheckReport {
                identity,
                instance,
                status: Status::Counterexample,
                lhs: Some(serde_json::to_value(lhs).expect("serializable")),
                rhs: Some(serde_json::to_value(rhs).expect("serializable")),
            }
        }
    }

    pub fn is_verified(&self) -> bool {
        self.status == Status::Verified
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = match self.status {
            Status::Verified => "verified",
            Status::Counterexample => "COUNTEREXAMPLE",
        };
        write!(
            f,
            "{:<10} {:<15} {}",
            self.identity.name(),
            status,
            self.instance
        )?;
        if let (Some(l), Some(r)) = (&self.lhs, &self.rhs) {
            write!(f, "\n    lhs: {l}\n    rhs: {r}")?;
        }
        Ok(())
    }
}

/// Keys a coefficient map by partition text so it serializes as a JSON object.
fn keyed(map: &BTreeMap<Partition, QLaurent>) -> BTreeMap<String, String> {
    map.iter()
        .filter(|(_, v)| !v.is_zero())
        .map(|(k, v)| (k.to_string(), v.to_string()))
        .collect()
}

/// `Y_γ = Σ_μ q^{area-n(μ)} r_{γ,μ} Π[m_i(μ)]_q! P_μ` in the P basis.
pub fn rook_expansion(gamma: &DyckPath, rule: FcRule) -> SymFunc {
    SymFunc::from_terms(gamma.n(), Basis::HlP, hl_coefficients_with(gamma, rule))
        .expect("partitions of n")
}

pub fn check_main(gamma: &DyckPath) -> CheckReport {
    check_main_with(gamma, FcRule::Gated)
}

/// `X_γ` (from colorings) against the linked rook expansion, coefficient by
/// coefficient in the Hall–Littlewood basis.
pub fn check_main_with(gamma: &DyckPath, rule: FcRule) -> CheckReport {
    let x = chromatic_qsym(gamma).to_basis(Basis::HlP);
    let y = rook_expansion(gamma, rule);
    CheckReport::compare(Identity::Main, format!("gamma={gamma}"), &x, &y)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ModularLevel {
    /// `(1+q) r_{γ₁,μ} = r_{γ₀,μ} + q r_{γ₂,μ}` for every `μ`.
    RPoly,
    /// `(1+q) X_{γ₁} = q X_{γ₀} + X_{γ₂}`.
    Chromatic,
}

fn triple_label(t: &ModularTriple) -> String {
    let kind = match t.kind {
        crate::dyck::TripleKind::One => 1,
        crate::dyck::TripleKind::Two => 2,
    };
    format!(
        "type=({kind},{}) gamma0={} gamma1={} gamma2={}",
        t.position, t.gamma0, t.gamma1, t.gamma2
    )
}

pub fn check_modular_triple(t: &ModularTriple, level: ModularLevel) -> CheckReport {
    let one_q = QLaurent::new(0, [1, 1]);
    let q = QLaurent::q_pow(1);
    match level {
        ModularLevel::RPoly => {
            let (r0, r1, r2) = (r_polys(&t.gamma0), r_polys(&t.gamma1), r_polys(&t.gamma2));
            let mut lhs = BTreeMap::new();
            let mut rhs = BTreeMap::new();
            for mu in enumerate_partitions(t.gamma1.n()) {
                lhs.insert(mu.clone(), &one_q * &r1[&mu]);
                rhs.insert(mu.clone(), &r0[&mu] + &(&q * &r2[&mu]));
            }
            CheckReport::compare(
                Identity::Modular,
                format!("level=r_poly {}", triple_label(t)),
                &keyed(&lhs),
                &keyed(&rhs),
            )
        }
        ModularLevel::Chromatic => {
            let x0 = chromatic_qsym(&t.gamma0);
            let x1 = chromatic_qsym(&t.gamma1);
            let x2 = chromatic_qsym(&t.gamma2);
            let lhs = x1.scale(&one_q);
            let rhs = x0.scale(&q).add(&x2).expect("same degree and basis");
            CheckReport::compare(
                Identity::Modular,
                format!("level=chromatic {}", triple_label(t)),
                &lhs,
                &rhs,
            )
        }
    }
}

pub fn check_modular(n: usize, level: ModularLevel) -> Vec<CheckReport> {
    modular_triples(n)
        .iter()
        .map(|t| check_modular_triple(t, level))
        .collect()
}

fn binom2(k: usize) -> i64 {
    (k * k.saturating_sub(1) / 2) as i64
}

/// Right-hand side of the rook-level multiplicativity identity for one `ν`.
fn multiplicativity_rhs(
    r: &BTreeMap<Partition, QLaurent>,
    n: usize,
    k: usize,
    nu: &Partition,
) -> QLaurent {
    let nu_c = nu.conjugate();
    let k_fact = q_factorial(k as i64).expect("k >= 0");
    let mut total = QLaurent::zero();
    for mu in enumerate_partitions(n) {
        if !nu.is_vertical_strip_over(&mu) {
            continue;
        }
        let rmu = &r[&mu];
        if rmu.is_zero() {
            continue;
        }
        let mu_c = mu.conjugate();
        let shift = nu.nstat() as i64 - mu.nstat() as i64 - binom2(k);
        let first = nu_c.part(1) - mu_c.part(1);
        let ratio = k_fact
            .div_exact(&q_factorial(first as i64).expect("nonnegative"))
            .expect("[k]! / [j]! with j <= k");
        let mut term = &rmu.shift(shift) * &ratio;
        for i in 1..=nu.part(1) {
            let m = mu.multiplicity(i) as i64;
            let take = nu_c.part(i + 1) as i64 - mu_c.part(i + 1) as i64;
            term = &term * &q_binomial(m, take).expect("vertical strip bounds");
        }
        total += &term;
    }
    total
}

/// Rook-level multiplicativity for every `ν ⊢ n + k`, then the function-level
/// product `Y_{γ+N^kE^k} = Y_γ · [k]_q! e_k`.
pub fn check_multiplicativity(gamma: &DyckPath, k: usize) -> Vec<CheckReport> {
    let n = gamma.n();
    let tilde = gamma.concat(&DyckPath::complete(k));
    let r = r_polys(gamma);
    let r_tilde = r_polys(&tilde);
    let mut out = Vec::new();
    for nu in enumerate_partitions(n + k) {
        let lhs = r_tilde[&nu].clone();
        let rhs = multiplicativity_rhs(&r, n, k, &nu);
        out.push(CheckReport::compare(
            Identity::Mult,
            format!("gamma={gamma} k={k} nu={nu}"),
            &lhs.to_string(),
            &rhs.to_string(),
        ));
    }
    let y_tilde = rook_expansion(&tilde, FcRule::Gated).to_basis(Basis::Monomial);
    let ek = elementary(k).scale(&q_factorial(k as i64).expect("k >= 0"));
    let product = multiply(&rook_expansion(gamma, FcRule::Gated), &ek);
    out.push(CheckReport::compare(
        Identity::Mult,
        format!("gamma={gamma} k={k} function-level"),
        &y_tilde,
        &product,
    ));
    out
}

/// `LLT_γ` in the Schur basis against both Hall–Littlewood forms, with the
/// factor `(1-q)^{n-ℓ(μ)}` (resp. `(1-q⁻¹)^{n-ℓ(μ)}`) inside the sum.
pub fn check_llt(gamma: &DyckPath) -> Vec<CheckReport> {
    let n = gamma.n();
    let llt = llt_poly(gamma).to_basis(Basis::Schur);
    let r = r_polys(gamma);
    let one_minus_q = QLaurent::new(0, [1, -1]);
    let one_minus_qinv = QLaurent::new(-1, [-1, 1]);
    let area = gamma.area() as i64;
    let mut first = SymFunc::zero(n, Basis::Schur);
    let mut second = SymFunc::zero(n, Basis::Schur);
    for (mu, rmu) in &r {
        if rmu.is_zero() {
            continue;
        }
        let e = (n - mu.len()) as u32;
        let c1 = &one_minus_q.pow(e) * &rmu.shift(area - mu.nstat() as i64);
        let h = omega_schur(&modified_hl(mu, false)).expect("Schur basis");
        first = first.add(&h.scale(&c1)).expect("same space");
        let c2 = &one_minus_qinv.pow(e) * &rmu.invert_q();
        second = second
            .add(&modified_hl(mu, true).scale(&c2))
            .expect("same space");
    }
    vec![
        CheckReport::compare(
            Identity::Llt,
            format!("gamma={gamma} form=omega-H"),
            &llt,
            &first,
        ),
        CheckReport::compare(
            Identity::Llt,
            format!("gamma={gamma} form=H-tilde"),
            &llt,
            &second,
        ),
    ]
}

#[derive(Serialize, PartialEq)]
struct PrincipalSides {
    falling: QLaurent,
    product: QLaurent,
}

/// Three-way equality for one `α`: direct coloring sum, the falling-factorial
/// sum over `r_{γ,μ}`, and the product formula.
pub fn check_principal_at(
    gamma: &DyckPath,
    r: &BTreeMap<Partition, QLaurent>,
    alpha: usize,
) -> CheckReport {
    let ps = principal_specialization(gamma, alpha);
    let falling: QLaurent = r
        .iter()
        .map(|(mu, rmu)| rmu * &q_falling(alpha, mu.len()))
        .sum::<QLaurent>()
        .shift(gamma.area() as i64);
    let instance = format!("gamma={gamma} alpha={alpha}");
    let ok = ps.direct == falling && falling == ps.product;
    let rhs = PrincipalSides {
        falling,
        product: ps.product.clone(),
    };
    if ok {
        CheckReport::compare(Identity::Principal, instance, &(), &())
    } else {
        CheckReport {
            identity: Identity::Principal,
            instance,
            status: Status::Counterexample,
            lhs: Some(serde_json::to_value(&ps.direct).expect("serializable")),
            rhs: Some(serde_json::to_value(&rhs).expect("serializable")),
        }
    }
}

pub fn check_principal(gamma: &DyckPath, alpha_max: usize) -> Vec<CheckReport> {
    let r = r_polys(gamma);
    (0..=alpha_max)
        .map(|alpha| check_principal_at(gamma, &r, alpha))
        .collect()
}

/// At `q = 1`: coefficient of `m_α` in `X_γ` equals `r_{γ,α}(1) Π_i m_i(α)!`.
pub fn check_q1_monomial(gamma: &DyckPath) -> CheckReport {
    let x = chromatic_qsym(gamma);
    let r = r_polys(gamma);
    let mut lhs = BTreeMap::new();
    let mut rhs = BTreeMap::new();
    for (alpha, ra) in &r {
        let fact: num_bigint::BigInt = alpha
            .multiplicities()
            .into_values()
            .map(|m| {
                (1..=m)
                    .map(num_bigint::BigInt::from)
                    .product::<num_bigint::BigInt>()
            })
            .product();
        lhs.insert(alpha.to_string(), x.coeff(alpha).eval_one().to_string());
        rhs.insert(alpha.to_string(), (ra.eval_one() * fact).to_string());
    }
    CheckReport::compare(Identity::Xm, format!("gamma={gamma}"), &lhs, &rhs)
}

/// One unit of sweep work.
#[derive(Clone, Debug)]
enum Task {
    Main(DyckPath),
    Modular(ModularTriple, ModularLevel),
    Mult(DyckPath, usize),
    Llt(DyckPath),
    Principal(DyckPath, usize),
    Xm(DyckPath),
}

impl Task {
    fn run(&self) -> Vec<CheckReport> {
        match self {
            Task::Main(g) => vec![check_main(g)],
            Task::Modular(t, level) => vec![check_modular_triple(t, *level)],
            Task::Mult(g, k) => check_multiplicativity(g, *k),
            Task::Llt(g) => check_llt(g),
            Task::Principal(g, a) => check_principal(g, *a),
            Task::Xm(g) => vec![check_q1_monomial(g)],
        }
    }
}

/// Sweep parameters beyond the size bound.
#[derive(Clone, Debug)]
pub struct SweepConfig {
    pub n_max: usize,
    pub identities: BTreeSet<Identity>,
    /// Values of `k` for the multiplicativity check.
    pub mult_k: Vec<usize>,
    /// Worker threads; `None` uses the global pool.
    pub jobs: Option<usize>,
}

impl SweepConfig {
    pub fn new(n_max: usize, identities: impl IntoIterator<Item = Identity>) -> Self {
        SweepConfig {
            n_max,
            identities: identities.into_iter().collect(),
            mult_k: vec![1, 2, 3],
            jobs: None,
        }
    }
}

fn tasks(cfg: &SweepConfig) -> Vec<Task> {
    let mut out = Vec::new();
    for n in 0..=cfg.n_max {
        let paths = enumerate_dyck(n);
        for &id in &cfg.identities {
            match id {
                Identity::Main => out.extend(paths.iter().cloned().map(Task::Main)),
                Identity::Modular => {
                    for level in [ModularLevel::RPoly, ModularLevel::Chromatic] {
                        out.extend(
                            modular_triples(n)
                                .into_iter()
                                .map(|t| Task::Modular(t, level)),
                        );
                    }
                }
                Identity::Mult => {
                    for g in &paths {
                        out.extend(cfg.mult_k.iter().map(|&k| Task::Mult(g.clone(), k)));
                    }
                }
                Identity::Llt => out.extend(paths.iter().cloned().map(Task::Llt)),
                Identity::Principal => {
                    out.extend(paths.iter().cloned().map(|g| Task::Principal(g, n + 2)))
                }
                Identity::Xm => out.extend(paths.iter().cloned().map(Task::Xm)),
            }
        }
    }
    out
}

/// Runs every selected identity over all `γ ∈ D_n`, `n ≤ n_max`.
///
/// Report order is fixed by `(n, identity, instance)` regardless of the
/// number of workers. Only the first counterexample of each identity keeps
/// its `lhs`/`rhs` payload.
pub fn sweep(cfg: &SweepConfig) -> Vec<CheckReport> {
    let work = tasks(cfg);
    let run = || -> Vec<CheckReport> { work.par_iter().flat_map_iter(Task::run).collect() };
    let mut reports = match cfg.jobs {
        Some(j) => rayon::ThreadPoolBuilder::new()
            .num_threads(j.max(1))
            .build()
            .expect("thread pool")
            .install(run),
        None => run(),
    };
    let mut seen = BTreeSet::new();
    for r in &mut reports {
        if r.status == Status::Counterexample && !seen.insert(r.identity) {
            r.lhs = None;
            r.rhs = None;
        }
    }
    reports
}

/// Convenience wrapper with default settings.
pub fn sweep_identities(n_max: usize, identities: &[Identity]) -> Vec<CheckReport> {
    sweep(&SweepConfig::new(n_max, identities.iter().copied()))
}

/// Summary counts per identity: `(verified, counterexamples)`.
pub fn tally(reports: &[CheckReport]) -> BTreeMap<Identity, (usize, usize)> {
    let mut out: BTreeMap<Identity, (usize, usize)> = BTreeMap::new();
    for r in reports {
        let e = out.entry(r.identity).or_default();
        if r.is_verified() {
            e.0 += 1;
        } else {
            e.1 += 1;
        }
    }
    out
}

/// `[n]_q!`-weighted `e_n`, i.e. `X` of the complete graph.
pub fn complete_graph_value(n: usize) -> SymFunc {
    elementary(n).scale(&q_factorial(n as i64).expect("n >= 0"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn d(h: &[usize]) -> DyckPath {
        DyckPath::from_heights(h).unwrap()
    }

    fn pt(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn main_examples() {
        let g = d(&[2, 2, 4, 4, 5]);
        assert!(check_main(&g).is_verified());
        let x = chromatic_qsym(&g).to_basis(Basis::HlP);
        assert_eq!(x.coeff(&pt(&[3, 2])), QLaurent::new(0, [1, 2, 1]));
        for n in 1..=5 {
            let g = DyckPath::complete(n);
            assert!(check_main(&g).is_verified());
            assert_eq!(chromatic_qsym(&g), complete_graph_value(n));
            let y = rook_expansion(&g, FcRule::Gated);
            assert_eq!(y.terms().count(), 1);
            assert_eq!(
                y.coeff(&Partition::column(n)),
                q_factorial(n as i64).unwrap()
            );
        }
        for g in enumerate_dyck(4) {
            assert!(check_main(&g).is_verified(), "{g}");
        }
    }

    #[test]
    fn ungated_free_cells_break_main() {
        let r = check_main_with(&d(&[2, 2, 4, 4, 5]), FcRule::Ungated);
        assert_eq!(r.status, Status::Counterexample);
        assert!(r.lhs.is_some() && r.rhs.is_some());
    }

    #[test]
    fn modular_examples() {
        let t = ModularTriple {
            gamma0: d(&[2, 2, 3]),
            gamma1: d(&[2, 3, 3]),
            gamma2: d(&[3, 3, 3]),
            kind: crate::dyck::TripleKind::Two,
            position: 1,
        };
        let one = Partition::column(3);
        assert_eq!(r_polys(&t.gamma1)[&one], QLaurent::q_pow(1));
        assert_eq!(r_polys(&t.gamma0)[&one], QLaurent::q_pow(2));
        assert_eq!(r_polys(&t.gamma2)[&one], QLaurent::one());
        assert!(check_modular_triple(&t, ModularLevel::RPoly).is_verified());
        assert!(check_modular_triple(&t, ModularLevel::Chromatic).is_verified());
        for n in 2..=4 {
            assert!(check_modular(n, ModularLevel::RPoly)
                .iter()
                .all(CheckReport::is_verified));
        }
    }

    #[test]
    fn multiplicativity_examples() {
        let g = d(&[1]);
        let r = r_polys(&g);
        assert_eq!(
            multiplicativity_rhs(&r, 1, 1, &pt(&[1, 1])),
            QLaurent::q_pow(1)
        );
        assert_eq!(multiplicativity_rhs(&r, 1, 1, &pt(&[2])), QLaurent::one());
        let tilde = r_polys(&d(&[1, 2]));
        assert_eq!(tilde[&pt(&[1, 1])], QLaurent::q_pow(1));
        assert_eq!(tilde[&pt(&[2])], QLaurent::one());
        assert!(check_multiplicativity(&g, 1)
            .iter()
            .all(CheckReport::is_verified));
    }

    #[test]
    fn llt_examples() {
        for h in [&[1][..], &[2, 2], &[2, 3, 3], &[2, 2, 3]] {
            assert!(
                check_llt(&d(h)).iter().all(CheckReport::is_verified),
                "{h:?}"
            );
        }
        let l = llt_poly(&d(&[2, 2])).to_basis(Basis::Schur);
        assert_eq!(l.coeff(&pt(&[2])), QLaurent::one());
        assert_eq!(l.coeff(&pt(&[1, 1])), QLaurent::q_pow(1));
    }

    #[test]
    fn principal_examples() {
        let reps = check_principal(&d(&[2, 2]), 4);
        assert_eq!(reps.len(), 5);
        assert!(reps.iter().all(CheckReport::is_verified));
    }

    #[test]
    fn sweep_examples() {
        let reps = sweep_identities(4, &[Identity::Main]);
        assert_eq!(reps.len(), 23);
        assert!(reps.iter().all(CheckReport::is_verified));
        assert!(sweep_identities(3, &Identity::ALL)
            .iter()
            .all(CheckReport::is_verified));
        assert!(sweep_identities(3, &[]).is_empty());
    }

    #[test]
    fn sweep_is_order_stable_across_worker_counts() {
        let mut cfg = SweepConfig::new(4, Identity::ALL);
        cfg.jobs = Some(1);
        let a = sweep(&cfg);
        cfg.jobs = Some(4);
        let b = sweep(&cfg);
        assert_eq!(a, b);
    }

    #[test]
    fn report_json() {
        let r = check_main(&d(&[1, 2]));
        let j = serde_json::to_string(&r).unwrap();
        assert_eq!(
            j,
            r#"{"identity":"main","instance":"gamma=(1,2)","status":"verified"}"#
        );
        let back: CheckReport = serde_json::from_str(&j).unwrap();
        assert_eq!(back, r);
        assert_eq!("llt".parse::<Identity>().unwrap(), Identity::Llt);
        assert!("nope".parse::<Identity>().is_err());
    }
}
