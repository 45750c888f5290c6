//! Applications: tameness verdicts, monodromy-fibration-equivalence
//! certificates, and Thom-Sebastiani composition.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::euler::{
    oracle_total_milnor, total_milnor, FormulaPath, MilnorOptions, MilnorReport, MuValue, OracleMu,
};
use crate::poly::{decompose, Polynomial, Rat, WeightSystem};
use crate::wly::check_wly;

// ---------------------------------------------------------------------------
// tameness
// ---------------------------------------------------------------------------

/// A candidate non-tameness witness: sampled points of a sequence x(n) with
/// ||x(n)|| -> infinity along which the gradient is supposed to vanish.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessSequence {
    /// (n, x(n)) pairs, in increasing n.
    pub samples: Vec<(u64, Vec<Rat>)>,
}

impl WitnessSequence {
    /// Sample a parametrized sequence at the given indices.
    pub fn sample(ns: &[u64], point: impl Fn(u64) -> Vec<Rat>) -> WitnessSequence {
        WitnessSequence {
            samples: ns.iter().map(|&n| (n, point(n))).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TameStatus {
    Tame,
    CriterionNotMet,
    NotTame(WitnessSequence),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TamenessVerdict {
    pub status: TameStatus,
    pub reason: String,
}

/// Does Corollary 3.5 apply to the instance behind this report?  True when
/// k = 1 or the instance falls in one of the two cases of Theorem 3.3; the
/// mixed path of the remark after the theorem and any conjectural value are
/// excluded.
pub fn cor35_applicable(report: &MilnorReport) -> bool {
    match report.formula_path {
        // f_N itself is an isolated-singularity polynomial of type (w;N)
        FormulaPath::Isolated | FormulaPath::K1 | FormulaPath::Thm331 => true,
        FormulaPath::Thm332 => matches!(report.mu, MuValue::Finite(_)),
        FormulaPath::Mixed => false,
    }
}

/// Tameness by the criterion of Corollary 4.2: Corollary 3.5 applicability
/// together with N - k >= max(w_i).  The criterion can only affirm tameness;
/// a negative answer is CriterionNotMet, never NotTame.
pub fn tameness(report: &MilnorReport) -> TamenessVerdict {
    let dec = &report.wly.dec;
    let (n_deg, k) = (dec.degree, dec.gap);
    let w_max = dec.w.max();
    if !cor35_applicable(report) {
        return TamenessVerdict {
            status: TameStatus::CriterionNotMet,
            reason: format!(
                "Corollary 3.5 applicability not established (formula path {})",
                report.formula_path
            ),
        };
    }
    if n_deg - k < w_max {
        return TamenessVerdict {
            status: TameStatus::CriterionNotMet,
            reason: format!("N - k = {} < max(w) = {w_max}", n_deg - k),
        };
    }
    TamenessVerdict {
        status: TameStatus::Tame,
        reason: format!(
            "Corollary 3.5 applies and N - k = {} >= max(w) = {w_max}",
            n_deg - k
        ),
    }
}

/// Squared euclidean norm over the rationals (conjugation-free: sound for
/// rational points, where |z|^2 = z^2 coordinatewise).
fn norm_sq(point: &[Rat]) -> Rat {
    point.iter().map(|c| c * c).sum()
}

/// ||grad f(x)||^2 at a rational point, exactly.
pub fn gradient_norm_sq(f: &Polynomial, point: &[Rat]) -> Result<Rat> {
    let mut acc = Rat::zero();
    for p in f.gradient() {
        let v = p.eval(point)?;
        acc += &v * &v;
    }
    Ok(acc)
}

/// Validate a non-tameness witness against the polynomial of the report:
/// along the samples, ||x(n)||^2 must strictly increase while
/// ||grad f(x(n))||^2 strictly decreases towards 0 (all checks exact).
/// On success the verdict is NotTame carrying the witness; otherwise the
/// criterion verdict of `tameness` is returned unchanged.
pub fn tameness_with_witness(
    report: &MilnorReport,
    witness: &WitnessSequence,
) -> Result<TamenessVerdict> {
    let f = report.wly.dec.reconstruct();
    if witness.samples.len() < 2 {
        return Err(Error::Inconsistent(
            "a witness sequence needs at least two sample points".into(),
        ));
    }
    let mut prev: Option<(u64, Rat, Rat)> = None;
    for (n, x) in &witness.samples {
        let r = norm_sq(x);
        let g = gradient_norm_sq(&f, x)?;
        if let Some((pn, pr, pg)) = prev {
            if *n <= pn || r <= pr || g >= pg {
                return Ok(tameness(report));
            }
        }
        prev = Some((*n, r, g));
    }
    Ok(TamenessVerdict {
        status: TameStatus::NotTame(witness.clone()),
        reason: format!(
            "witness sequence: ||x(n)||^2 grows and ||grad f(x(n))||^2 \
             decays across n = {:?}",
            witness.samples.iter().map(|(n, _)| *n).collect::<Vec<_>>()
        ),
    })
}

/// Broughton's criterion sampled as a diagnostic: compare the Jacobian
/// quotient dimension of f with that of f + sum v_i x_i for a few small
/// rational v.  Agreement is evidence for tameness, not a proof.
#[derive(Debug, Clone)]
pub struct BroughtonEvidence {
    pub base: OracleMu,
    pub perturbed: Vec<(Vec<Rat>, OracleMu)>,
    pub consistent: bool,
}

pub fn broughton_diagnostic(f: &Polynomial, shifts: &[Vec<Rat>]) -> Result<BroughtonEvidence> {
    let np = f.nvars();
    let default_shifts: Vec<Vec<Rat>>;
    let shifts = if shifts.is_empty() {
        default_shifts = (0..np.min(3))
            .map(|i| {
                (0..np)
                    .map(|j| {
                        if i == j {
                            Rat::new(1.into(), (5 + 2 * i as i64).into())
                        } else {
                            Rat::zero()
                        }
                    })
                    .collect()
            })
            .collect();
        &default_shifts
    } else {
        shifts
    };
    let base = oracle_total_milnor(f)?;
    let mut perturbed = Vec::new();
    for v in shifts {
        if v.len() != np {
            return Err(Error::VarCountMismatch {
                expected: np,
                got: v.len(),
            });
        }
        let mut fv = f.clone();
        for (i, c) in v.iter().enumerate() {
            if !c.is_zero() {
                fv = fv.add(&Polynomial::term(
                    crate::poly::Monomial(
                        (0..np).map(|j| if i == j { 1 } else { 0 }).collect(),
                    ),
                    c.clone(),
                ));
            }
        }
        perturbed.push((v.clone(), oracle_total_milnor(&fv)?));
    }
    let consistent =
        base != OracleMu::Infinite && perturbed.iter().all(|(_, m)| *m == base);
    Ok(BroughtonEvidence {
        base,
        perturbed,
        consistent,
    })
}

// ---------------------------------------------------------------------------
// monodromy equivalence
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EquivalenceStrength {
    FiberHomotopy,
    Diffeomorphic,
}

#[derive(Debug, Clone)]
pub struct EquivalenceCertificate {
    pub equivalent: bool,
    pub strength: Option<EquivalenceStrength>,
    pub checks: Vec<(String, bool)>,
}

fn fail(checks: Vec<(String, bool)>) -> EquivalenceCertificate {
    EquivalenceCertificate {
        equivalent: false,
        strength: None,
        checks,
    }
}

/// Certify that the monodromy fibrations at infinity of f and h are
/// equivalent (Theorem 4.2): both WLY with identical (w; N; k), identical
/// top forms, and Corollary 3.5 applicability.  Strength is Diffeomorphic
/// for n != 2 and FiberHomotopy otherwise.  Failures are reported through
/// the named check list, never as errors.
pub fn monodromy_equivalence(
    f: &Polynomial,
    h: &Polynomial,
    w: &WeightSystem,
    opts: &MilnorOptions,
) -> EquivalenceCertificate {
    let mut checks: Vec<(String, bool)> = Vec::new();
    let (dec_f, dec_h) = match (decompose(f, w), decompose(h, w)) {
        (Ok(a), Ok(b)) => {
            checks.push(("both decompose with positive degree and gap".into(), true));
            (a, b)
        }
        _ => {
            checks.push(("both decompose with positive degree and gap".into(), false));
            return fail(checks);
        }
    };
    let same_nk = dec_f.degree == dec_h.degree && dec_f.gap == dec_h.gap;
    checks.push((
        format!(
            "same (N; k) = ({}; {})",
            dec_f.degree, dec_f.gap
        ),
        same_nk,
    ));
    if !same_nk {
        return fail(checks);
    }
    let same_top = dec_f.top() == dec_h.top();
    checks.push(("identical top forms".into(), same_top));
    if !same_top {
        return fail(checks);
    }
    let (wly_f, wly_h) = match (check_wly(&dec_f), check_wly(&dec_h)) {
        (Ok(a), Ok(b)) => (a, b),
        _ => {
            checks.push(("WLY analysis completes".into(), false));
            return fail(checks);
        }
    };
    checks.push(("f is WLY at infinity".into(), wly_f.is_wly));
    checks.push(("h is WLY at infinity".into(), wly_h.is_wly));
    if !wly_f.is_wly || !wly_h.is_wly {
        return fail(checks);
    }
    // mu depends only on the shared top form and k, so one report suffices
    let branches = if wly_f.sing_dim == 1 {
        match crate::branches::find_branches(dec_f.top(), w, &[], Default::default()) {
            Ok(b) => b,
            Err(_) => {
                checks.push(("branch analysis completes".into(), false));
                return fail(checks);
            }
        }
    } else {
        Vec::new()
    };
    let mut opts = opts.clone();
    opts.allow_conjectural = true;
    let applicable = match total_milnor(&wly_f, &branches, &opts) {
        Ok(report) => cor35_applicable(&report),
        Err(_) => false,
    };
    checks.push(("Corollary 3.5 applicability".into(), applicable));
    if !applicable {
        return fail(checks);
    }
    let n = w.len() - 1;
    EquivalenceCertificate {
        equivalent: true,
        strength: Some(if n != 2 {
            EquivalenceStrength::Diffeomorphic
        } else {
            EquivalenceStrength::FiberHomotopy
        }),
        checks,
    }
}

// ---------------------------------------------------------------------------
// Thom-Sebastiani
// ---------------------------------------------------------------------------

#[derive(Debug, Clone)]
pub struct TsReport {
    pub mu: MuValue,
    /// Generic fiber of the sum is a bouquet of spheres of this dimension.
    pub sphere_dim: usize,
    pub tame: bool,
    pub certificate: Vec<String>,
}

fn mu_product(a: &MuValue, b: &MuValue) -> MuValue {
    match (a, b) {
        (MuValue::Infinite, _) | (_, MuValue::Infinite) => MuValue::Infinite,
        (MuValue::Finite(x), MuValue::Finite(y)) => MuValue::Finite(x * y),
        (MuValue::Finite(x) | MuValue::Conjectural(x), MuValue::Finite(y) | MuValue::Conjectural(y)) => {
            MuValue::Conjectural(x * y)
        }
    }
}

/// Direct sum f(x) + h(y) on disjoint variable groups, with the variables
/// of h placed after those of f.
pub fn direct_sum(f: &Polynomial, h: &Polynomial) -> Polynomial {
    let mut fx = f.clone();
    for _ in 0..h.nvars() {
        fx = fx.extend_back();
    }
    let mut hy = h.clone();
    for _ in 0..f.nvars() {
        hy = hy.extend_front();
    }
    fx.add(&hy)
}

/// Thom-Sebastiani composition of two reports over disjoint variables:
/// mu multiplies, the generic fiber of the sum is a bouquet of
/// (n + m + 1)-spheres, tameness of both summands is inherited, and the
/// monodromy operators at infinity tensor.
pub fn thom_sebastiani(report_f: &MilnorReport, report_h: &MilnorReport) -> TsReport {
    let n = report_f.wly.dec.nvars - 1;
    let m = report_h.wly.dec.nvars - 1;
    let mu = mu_product(&report_f.mu, &report_h.mu);
    let tame = tameness(report_f).status == TameStatus::Tame
        && tameness(report_h).status == TameStatus::Tame;
    let mut certificate = vec![
        format!(
            "mu(f+h) = mu(f) mu(h) = {} * {} = {mu}",
            report_f.mu, report_h.mu
        ),
        format!("generic fiber of f+h ~ bouquet of {mu} spheres S^{}", n + m + 1),
        "M_inf(f+h) = M_inf(f) (x) M_inf(h)".into(),
        "f+h need not be WLY at infinity for any weights on the joined variables".into(),
    ];
    if tame {
        certificate.push("f and h are tame, hence so is f+h".into());
    }
    TsReport {
        mu,
        sphere_dim: n + m + 1,
        tame,
        certificate,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::euler::total_milnor;
    use crate::poly::{rat_int, Monomial};
    use num_bigint::BigInt;

    fn ws(v: &[u64]) -> WeightSystem {
        WeightSystem::new(v.to_vec()).unwrap()
    }

    fn p(terms: &[(&[u64], i64)], nvars: usize) -> Polynomial {
        let mut f = Polynomial::zero(nvars);
        for (e, c) in terms {
            f.add_term(Monomial(e.to_vec()), rat_int(*c));
        }
        f
    }

    fn report(f: &Polynomial, w: &WeightSystem) -> MilnorReport {
        let dec = decompose(f, w).unwrap();
        let analysis = check_wly(&dec).unwrap();
        assert!(analysis.is_wly);
        let branches = if analysis.sing_dim == 1 {
            crate::branches::find_branches(dec.top(), w, &[], Default::default()).unwrap()
        } else {
            vec![]
        };
        total_milnor(&analysis, &branches, &MilnorOptions::default()).unwrap()
    }

    // f1, f2 and h share the top form x1^3 + x1 x2 + x1 x3^2 + x3 x4^2
    // for w = (1,2,1,1), N = 3
    fn f1() -> Polynomial {
        p(
            &[
                (&[3, 0, 0, 0], 1),
                (&[1, 1, 0, 0], 1),
                (&[1, 0, 2, 0], 1),
                (&[0, 0, 1, 2], 1),
                (&[0, 1, 0, 0], 1),
            ],
            4,
        )
    }

    fn f2() -> Polynomial {
        p(
            &[
                (&[3, 0, 0, 0], 1),
                (&[1, 1, 0, 0], 1),
                (&[1, 0, 2, 0], 1),
                (&[0, 0, 1, 2], 1),
                (&[0, 0, 2, 0], 1),
            ],
            4,
        )
    }

    fn h() -> Polynomial {
        p(
            &[
                (&[3, 0, 0, 0], 1),
                (&[1, 1, 0, 0], 1),
                (&[1, 0, 2, 0], 1),
                (&[0, 0, 1, 2], 1),
                (&[0, 0, 1, 0], 1),
            ],
            4,
        )
    }

    #[test]
    fn f1_f2_tame() {
        let w = ws(&[1, 2, 1, 1]);
        for f in [f1(), f2()] {
            let r = report(&f, &w);
            assert_eq!(r.wly.dec.gap, 1);
            let v = tameness(&r);
            assert_eq!(v.status, TameStatus::Tame, "{}", v.reason);
        }
    }

    #[test]
    fn h_criterion_not_met() {
        let w = ws(&[1, 2, 1, 1]);
        let r = report(&h(), &w);
        assert_eq!(r.wly.dec.gap, 2);
        let v = tameness(&r);
        assert_eq!(v.status, TameStatus::CriterionNotMet);
        assert!(v.reason.contains("N - k = 1 < max(w) = 2"), "{}", v.reason);
    }

    #[test]
    fn usual_weights_tame() {
        // x1^2 x2 + x3^3 + x2, usual weights: tame for any gap
        let f = p(&[(&[2, 1, 0], 1), (&[0, 0, 3], 1), (&[0, 1, 0], 1)], 3);
        let r = report(&f, &ws(&[1, 1, 1]));
        assert_eq!(tameness(&r).status, TameStatus::Tame);
    }

    #[test]
    fn h_not_tame_with_witness() {
        // x(n) = (1/n^2, -n^4/4, -n^2/2, 0) drives grad h to 0 at infinity
        let w = ws(&[1, 2, 1, 1]);
        let r = report(&h(), &w);
        let seq = WitnessSequence::sample(&[10, 100, 1000], |n| {
            let n2 = BigInt::from(n) * BigInt::from(n);
            let n4 = &n2 * &n2;
            vec![
                Rat::new(1.into(), n2.clone()),
                Rat::new(-n4, 4.into()),
                Rat::new(-n2, 2.into()),
                Rat::zero(),
            ]
        });
        let v = tameness_with_witness(&r, &seq).unwrap();
        assert!(matches!(v.status, TameStatus::NotTame(_)), "{}", v.reason);
    }

    #[test]
    fn bogus_witness_rejected() {
        let w = ws(&[1, 2, 1, 1]);
        let r = report(&f1(), &w);
        // constant sequence: neither norm growth nor gradient decay
        let seq = WitnessSequence::sample(&[10, 100, 1000], |_| {
            vec![rat_int(1), rat_int(1), rat_int(1), rat_int(1)]
        });
        let v = tameness_with_witness(&r, &seq).unwrap();
        assert_eq!(v.status, TameStatus::Tame);
    }

    #[test]
    fn broughton_sampling() {
        let f = p(&[(&[2, 1, 0], 1), (&[0, 0, 3], 1), (&[0, 1, 0], 1)], 3);
        let ev = broughton_diagnostic(&f, &[]).unwrap();
        assert_eq!(ev.base, OracleMu::Finite(4));
        assert!(ev.consistent, "{:?}", ev.perturbed);
    }

    #[test]
    fn monodromy_f1_f2() {
        let w = ws(&[1, 2, 1, 1]);
        let cert = monodromy_equivalence(&f1(), &f2(), &w, &MilnorOptions::default());
        assert!(cert.equivalent, "{:?}", cert.checks);
        assert_eq!(cert.strength, Some(EquivalenceStrength::Diffeomorphic));
        // reflexive and symmetric
        assert!(monodromy_equivalence(&f1(), &f1(), &w, &MilnorOptions::default()).equivalent);
        assert!(monodromy_equivalence(&f2(), &f1(), &w, &MilnorOptions::default()).equivalent);
    }

    #[test]
    fn monodromy_rejections() {
        let w = ws(&[1, 2, 1, 1]);
        // different top form
        let g = p(
            &[(&[3, 0, 0, 0], 1), (&[0, 0, 3, 0], 1), (&[0, 0, 0, 3], 1), (&[0, 1, 0, 0], 1)],
            4,
        );
        let cert = monodromy_equivalence(&f1(), &g, &w, &MilnorOptions::default());
        assert!(!cert.equivalent);
        assert!(cert
            .checks
            .iter()
            .any(|(name, ok)| name == "identical top forms" && !ok));
        // same top form but different gap: f1 has k = 1, h has k = 2
        let cert = monodromy_equivalence(&f1(), &h(), &w, &MilnorOptions::default());
        assert!(!cert.equivalent);
        assert!(cert.checks.iter().any(|(name, ok)| name.starts_with("same (N; k)") && !ok));
    }

    #[test]
    fn thom_sebastiani_oracle() {
        let f = p(&[(&[2, 1, 0], 1), (&[0, 0, 3], 1), (&[0, 1, 0], 1)], 3);
        let r = report(&f, &ws(&[1, 1, 1]));
        assert_eq!(r.mu, MuValue::Finite(BigInt::from(4)));
        let ts = thom_sebastiani(&r, &r);
        assert_eq!(ts.mu, MuValue::Finite(BigInt::from(16)));
        assert_eq!(ts.sphere_dim, 5);
        assert!(ts.tame);
        let sum = direct_sum(&f, &f);
        assert_eq!(sum.nvars(), 6);
        assert_eq!(oracle_total_milnor(&sum).unwrap(), OracleMu::Finite(16));
        assert!(ts
            .certificate
            .iter()
            .any(|l| l.contains("M_inf(f+h) = M_inf(f) (x) M_inf(h)")));
    }

    #[test]
    fn thom_sebastiani_unit_factor() {
        // mu = 14 times mu = 1
        let f = p(&[(&[7, 1, 0], 1), (&[0, 0, 3], 1), (&[0, 1, 0], 1)], 3);
        let rf = report(&f, &ws(&[2, 1, 5]));
        assert_eq!(rf.mu, MuValue::Finite(BigInt::from(14)));
        let g = p(&[(&[2], 1), (&[1], 1)], 1);
        let rg = report(&g, &ws(&[1]));
        assert_eq!(rg.mu, MuValue::Finite(BigInt::from(1)));
        let ts = thom_sebastiani(&rf, &rg);
        assert_eq!(ts.mu, MuValue::Finite(BigInt::from(14)));
    }
}
