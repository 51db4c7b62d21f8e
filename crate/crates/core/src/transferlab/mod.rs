//! Singer transfer matrices, verdicts and the fixture verification suites.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::cohit::{kameko_matrix, CohitBasis};
use crate::f2linalg::{BitMatrix, BitVector};
use crate::glaction::{invariants_with, kameko_kernel_invariants, CoinvariantBasis, Group, RepChoice};
use crate::lambda::{Convention, HomologyBasis, Lambda, LambdaElement, LambdaMonomial};
use crate::polyspace::{pairing, DualElement, DualMonomial, Monomial, Polynomial};
use crate::steenrod::{is_annihilated, HitOptions};
use crate::Error;

pub mod fixtures;

/// The transfer on one bidegree, with dimensions, rank and witnesses.
#[derive(Clone, Debug)]
pub struct TransferReport {
    pub q: usize,
    pub n: u32,
    pub domain_dim: usize,
    pub codomain_dim: usize,
    pub rank: usize,
    pub mono: bool,
    pub epi: bool,
    pub iso: bool,
    /// Row `r`: homology coordinates of `psi` of representative `r`.
    pub matrix: BitMatrix,
    pub representatives: Vec<DualElement>,
    pub images: Vec<LambdaElement>,
}

/// Homology coordinates of `psi(θ)` for each `θ`, failing on a non-cycle.
pub fn transfer_classes(
    lambda: &Lambda,
    homology: &HomologyBasis,
    elements: &[DualElement],
) -> Result<(Vec<LambdaElement>, BitMatrix), Error> {
    let mut images = Vec::with_capacity(elements.len());
    let mut m = BitMatrix::new(homology.dim());
    for theta in elements {
        let z = lambda.psi(theta)?;
        m.push(homology.coordinates(lambda, &z)?);
        images.push(z);
    }
    Ok((images, m))
}

pub fn transfer_report(
    lambda: &Lambda,
    q: usize,
    n: u32,
    opts: HitOptions,
    choice: RepChoice,
) -> Result<TransferReport, Error> {
    let domain = CoinvariantBasis::new(q, n, opts, choice)?;
    let homology = lambda.homology(q, n)?;
    let representatives = domain.representatives().to_vec();
    let (images, matrix) = transfer_classes(lambda, &homology, &representatives)?;
    let rank = matrix.rank();
    let (domain_dim, codomain_dim) = (domain.dim(), homology.dim());
    Ok(TransferReport {
        q,
        n,
        domain_dim,
        codomain_dim,
        rank,
        mono: rank == domain_dim,
        epi: rank == codomain_dim,
        iso: rank == domain_dim && rank == codomain_dim,
        matrix,
        representatives,
        images,
    })
}

/// Matrix of `Tr_q` from the coinvariants to `Ext^{q,q+n}`.
pub fn transfer_matrix(q: usize, n: u32) -> Result<BitMatrix, Error> {
    Ok(verdict(q, n)?.matrix)
}

pub fn verdict(q: usize, n: u32) -> Result<TransferReport, Error> {
    let lambda = Lambda::new(Convention::LeftBounded);
    transfer_report(&lambda, q, n, HitOptions::default(), RepChoice::First)
}

/// One comparison inside a suite.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub label: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub name: &'static str,
    pub checks: Vec<Check>,
    /// Set when a resource cap stopped the suite early; the last check then records the cap.
    pub partial: bool,
}

impl SuiteReport {
    /// True when every executed check passed and the run was complete.
    #[must_use]
    pub fn passed(&self) -> bool {
        !self.partial && self.checks.iter().all(|c| c.passed)
    }

    /// True when a check that ran to completion failed. The failing entry
    /// recording a resource cap does not count.
    #[must_use]
    pub fn mismatched(&self) -> bool {
        let done = self.checks.len() - usize::from(self.partial);
        self.checks[..done].iter().any(|c| !c.passed)
    }
}

pub const SUITES: [&str; 8] = ["dlc1", "dlc2", "dlct", "dlc3", "dlct2", "remark26", "eq6", "exttables"];

struct Run {
    checks: Vec<Check>,
}

impl Run {
    fn check(&mut self, label: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.checks.push(Check { label: label.into(), passed, detail: detail.into() });
    }

    fn eq<T: PartialEq + core::fmt::Debug>(&mut self, label: impl Into<String>, got: T, want: T) {
        let passed = got == want;
        self.check(label, passed, format!("got {got:?}, expected {want:?}"));
    }
}

/// Runs a named suite. Unknown names are an error; a resource cap marks the report partial.
pub fn verify_suite(name: &str, opts: HitOptions) -> Result<SuiteReport, Error> {
    let name = *SUITES.iter().find(|s| **s == name).ok_or(Error::Invalid("unknown suite"))?;
    let mut run = Run { checks: Vec::new() };
    let lambda = Lambda::new(Convention::LeftBounded);
    let outcome = match name {
        "dlc1" => dlc1(&mut run, &lambda, opts),
        "dlc2" => dlc2(&mut run, &lambda, opts),
        "dlct" => dlct(&mut run, &lambda, opts),
        "dlc3" => dlc3(&mut run, opts),
        "dlct2" => dlct2(&mut run, &lambda, opts),
        "remark26" => remark26(&mut run, &lambda),
        "eq6" => eq6(&mut run, &lambda),
        _ => exttables(&mut run, &lambda),
    };
    let partial = match outcome {
        Ok(()) => false,
        Err(Error::ResourceCap { needed, cap }) => {
            run.check("resource cap", false, format!("stopped: needs {needed} columns, cap {cap}"));
            true
        }
        Err(e) => return Err(e),
    };
    Ok(SuiteReport { name, checks: run.checks, partial })
}

fn dual(rows: &[[u32; 4]]) -> DualElement {
    let n = rows[0].iter().sum();
    DualElement::from_terms(4, n, rows.iter().map(|r| DualMonomial::new(r).expect("four variables")))
        .expect("fixture is homogeneous")
}

fn lambda_el<const N: usize>(rows: &[[u32; N]]) -> LambdaElement {
    let degree = rows[0].iter().sum();
    LambdaElement::from_terms(N, degree, rows.iter().map(|r| LambdaMonomial::new(r))).expect("fixture is homogeneous")
}

fn monomial_set(rows: &[[u32; 4]]) -> Vec<Monomial> {
    let mut v: Vec<Monomial> = rows.iter().map(|r| Monomial::new(r).expect("four variables")).collect();
    v.sort_unstable();
    v
}

fn sorted(ms: &[Monomial]) -> Vec<Monomial> {
    let mut v = ms.to_vec();
    v.sort_unstable();
    v
}

/// `ζ_s = a_1^(0) (a^(2^{s+1}-1))^3` in degree `6·2^s - 3`: coinvariants 1, 0, 1 and `h_0 h_{s+1}^3`.
fn dlc1(run: &mut Run, lambda: &Lambda, opts: HitOptions) -> Result<(), Error> {
    let b9 = CohitBasis::new(4, 9, opts)?;
    run.eq("dim Q_9", b9.dim(), 46);
    run.eq("admissible basis of Q_9", sorted(b9.admissible()), monomial_set(&fixtures::ADMISSIBLE_9));
    for (s, want) in [(1u32, 1usize), (2, 0), (3, 1)] {
        let n = 6 * (1 << s) - 3;
        let co = CoinvariantBasis::new(4, n, opts, RepChoice::First)?;
        run.eq(format!("coinvariants dim, n = {n}"), co.dim(), want);
        let inv = invariants_with(4, n, Group::General, None, opts)?;
        run.eq(format!("GL invariants dim, n = {n}"), inv.dim(), want);
        let m = (1 << (s + 1)) - 1;
        let zeta = dual(&[[0, m, m, m]]);
        run.check(format!("zeta_{s} annihilated"), is_annihilated(&zeta), "");
        let raw = lambda.psi_raw(&zeta);
        run.eq(format!("psi(zeta_{s}) = λ_0 λ_{m}^3"), raw.clone(), lambda_el(&[[0, m, m, m]]));
        let h = lambda.homology(4, n)?;
        let class = h.coordinates(lambda, &raw)?;
        // h_0 h_2^3 = 0 = h_0 h_3^3, while h_0 h_4^3 = h_0 h_3^2 h_5 survives.
        run.eq(format!("[psi(zeta_{s})] nonzero"), !class.is_zero(), s >= 3);
        run.eq(format!("dim Ext^{{4,{}}}", n + 4), h.dim(), usize::from(s != 2));
    }
    let co = CoinvariantBasis::new(4, 9, opts, RepChoice::First)?;
    let inv = invariants_with(4, 9, Group::General, None, opts)?;
    let q14 = Polynomial::from_terms(
        4,
        9,
        fixtures::Q_SIGMA_9[3].iter().map(|&j| Monomial::new(&fixtures::ADMISSIBLE_9[j - 1]).expect("fixture")),
    )?;
    run.check("<[q_{1,4}], rep> = 1", co.dim() == 1 && pairing(&co.representatives()[0], &q14), "");
    let inv_class = inv.vectors.first().cloned().unwrap_or_else(|| BitVector::zeros(46));
    run.eq("invariant class is [q_{1,4}]", inv_class, b9.reduce(&q14));
    for n in [9, 21, 45] {
        let r = transfer_report(lambda, 4, n, opts, RepChoice::First)?;
        run.check(format!("Tr_4 iso, n = {n}"), r.iso, format!("rank {} of {}x{}", r.rank, r.domain_dim, r.codomain_dim));
    }
    Ok(())
}

/// Degree 17: the 44-term `ζ`, the `b` basis and `Tr_4[ζ] = e_0`.
fn dlc2(run: &mut Run, lambda: &Lambda, opts: HitOptions) -> Result<(), Error> {
    let b = CohitBasis::new(4, 17, opts)?;
    run.eq("dim Q_17", b.dim(), 87);
    run.eq("admissible basis of Q_17", sorted(b.admissible()), monomial_set(&fixtures::ADMISSIBLE_17));
    let zeta = dual(&fixtures::ZETA_17);
    run.check("zeta annihilated", is_annihilated(&zeta), format!("{} terms", zeta.len()));
    let co = CoinvariantBasis::new(4, 17, opts, RepChoice::First)?;
    run.eq("coinvariants dim", co.dim(), 1);
    run.eq("[zeta] generates", co.reduce(&zeta), BitVector::unit(co.dim().max(1), 0));
    let r = transfer_report(lambda, 4, 17, opts, RepChoice::First)?;
    run.check("Tr_4 iso, n = 17", r.iso, format!("rank {} of {}x{}", r.rank, r.domain_dim, r.codomain_dim));
    let z = lambda.psi(&zeta)?;
    let e0 = lambda_el(&fixtures::E0_BAR);
    run.check("psi(zeta) ~ e_0", lambda.classes_equal(&z, &e0)?, "");
    Ok(())
}

/// Degree 65 (`s = 1`, `t = 4`): `dim Q = 150`, coinvariants generated by one monomial.
fn dlct(run: &mut Run, lambda: &Lambda, opts: HitOptions) -> Result<(), Error> {
    let b = CohitBasis::new(4, 65, opts)?;
    run.eq("dim Q_65", b.dim(), 150);
    let co = CoinvariantBasis::new(4, 65, opts, RepChoice::First)?;
    run.eq("coinvariants dim, n = 65", co.dim(), 1);
    let zeta = dual(&[fixtures::ZETA_65]);
    run.check("a^(0)a^(3)a^(31)a^(31) annihilated", is_annihilated(&zeta), "");
    run.check("it generates", co.dim() == 1 && !co.reduce(&zeta).is_zero(), "");
    run.check("psi of it is a cycle", lambda.is_cycle(&lambda.psi_raw(&zeta))?, "");
    Ok(())
}

/// Kameko kernels in degrees `3·2^s - 2`, `s = 1, 2`: no invariants.
fn dlc3(run: &mut Run, opts: HitOptions) -> Result<(), Error> {
    for source in [4, 10] {
        let inv = kameko_kernel_invariants(4, source, opts)?;
        run.eq(format!("Ker invariants, n = {source}"), inv.dim(), 0);
    }
    let k = kameko_matrix(4, 0, opts)?;
    let mut kernel: Vec<Monomial> =
        k.kernel_representatives().iter().flat_map(|p| p.terms().copied().collect::<Vec<_>>()).collect();
    kernel.sort_unstable();
    run.eq("Kameko kernel basis, n = 4", kernel, monomial_set(&fixtures::KAMEKO_KERNEL_4));
    let k10 = kameko_matrix(4, 3, opts)?;
    run.eq("Kameko map onto Q_3", k10.rank(), k10.target.dim());
    Ok(())
}

/// Degree 64 (`s = 1`, `t = 5`): coinvariants generated by `ζ_{1,5}`.
fn dlct2(run: &mut Run, lambda: &Lambda, opts: HitOptions) -> Result<(), Error> {
    let co = CoinvariantBasis::new(4, 64, opts, RepChoice::First)?;
    run.eq("coinvariants dim, n = 64", co.dim(), 1);
    let zeta = dual(&[fixtures::ZETA_64]);
    run.check("zeta_{1,5} annihilated", is_annihilated(&zeta), "");
    run.check("[zeta_{1,5}] generates", co.dim() == 1 && !co.reduce(&zeta).is_zero(), "");
    let raw = lambda.psi_raw(&zeta);
    run.eq("psi(zeta_{1,5}) = λ_1 λ_1 λ_31^2", raw.clone(), lambda_el(&[[1, 1, 31, 31]]));
    run.check("psi(zeta_{1,5}) is a cycle", lambda.is_cycle(&raw)?, "");
    Ok(())
}

/// The four printed `psi_4` values and `[psi_4(ζ_1)] = h_1 c_0`.
fn remark26(run: &mut Run, lambda: &Lambda) -> Result<(), Error> {
    for (theta, printed) in fixtures::PSI_IDENTITIES {
        let got = lambda.psi(&dual(&[theta]))?;
        let want = lambda.adem_reduce(&lambda_el(printed))?;
        run.eq(format!("psi_4{theta:?}"), got, want);
    }
    let z = lambda.psi(&dual(&fixtures::ZETA_9))?;
    let h1c0 = lambda_el(&fixtures::H1C0);
    run.eq("psi_4(zeta_1) = λ_1 λ_3^2 λ_2", z.clone(), h1c0.clone());
    let h = lambda.homology(4, 9)?;
    run.check("[λ_1 λ_3^2 λ_2] nonzero", !h.coordinates(lambda, &h1c0)?.is_zero(), "");
    let c0 = lambda_el(&fixtures::C0);
    run.check("[λ_3^2 λ_2] nonzero", !lambda.homology(3, 8)?.coordinates(lambda, &c0)?.is_zero(), "");
    Ok(())
}

/// `psi_4(ζ) = e_0 + d(λ_3λ_5λ_10 + λ_3λ_12λ_3 + λ_4λ_7^2 + λ_0λ_11λ_7)`.
fn eq6(run: &mut Run, lambda: &Lambda) -> Result<(), Error> {
    let zeta = dual(&fixtures::ZETA_17);
    let raw = lambda.psi_raw(&zeta);
    let e0 = lambda_el(&fixtures::E0_BAR);
    run.check("psi(zeta) is a cycle", lambda.is_cycle(&raw)?, "");
    run.check("e_0 representative is a cycle", lambda.is_cycle(&e0)?, "");
    let lhs = lambda.adem_reduce(&raw.add(&e0))?;
    let rhs = lambda.differential(&lambda_el(&fixtures::E0_PREIMAGE))?;
    run.eq("psi(zeta) + e_0 = d(preimage)", lhs, rhs);
    run.check("[e_0] nonzero", !lambda.classes_equal(&e0, &LambdaElement::zero(4, 17))?, "");
    Ok(())
}

/// `Ext^1`, `Ext^2` census and the bidegrees quoted in the dimension arguments.
fn exttables(run: &mut Run, lambda: &Lambda) -> Result<(), Error> {
    let ext1: Vec<u32> = (0..=63).filter(|&n| lambda.ext_dim(1, n) == Ok(1)).collect();
    run.eq("Ext^1 nonzero degrees, n <= 63", ext1, (0..=6).map(|i| (1 << i) - 1).collect());
    let mut bad = Vec::new();
    for n in 0..=40u32 {
        let census = (0..7u32)
            .flat_map(|i| (i..7).map(move |j| (i, j)))
            .filter(|&(i, j)| j != i + 1 && (1u32 << i) + (1u32 << j) == n + 2)
            .count();
        if lambda.ext_dim(2, n)? != census {
            bad.push(n);
        }
    }
    run.eq("Ext^2 matches h_i h_j census, n <= 40", bad, Vec::new());
    run.eq("dim Ext^{4,13}", lambda.ext_dim(4, 9)?, 1);
    run.eq("dim Ext^{4,25}", lambda.ext_dim(4, 21)?, 0);
    run.eq("dim Ext^{4,21}", lambda.ext_dim(4, 17)?, 1);
    Ok(())
}

#[cfg(test)]
mod tests;
