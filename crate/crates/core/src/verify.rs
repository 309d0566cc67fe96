//! Theorem checks over single configurations and parameter sweeps.
//!
//! Checks are data: each `CheckId` names one identity, `verify` evaluates all
//! of them exactly and returns a pass/fail ledger. A failing check carries
//! the exact residue (or the construction error) as its witness, so a report
//! never claims `Pass` on the strength of floating point.

use std::collections::BTreeSet;
use std::fmt;

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::config::{HagaCase, HagaConfig};
use crate::geom::{Circle, Line};
use crate::tritangent::hansen_relations;
use crate::{Error, Rat};

/// One check per verified statement.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Serialize)]
#[allow(non_camel_case_types)]
pub enum CheckId {
    P3_1_TANGENT,
    P3_1_EF,
    T3_2_HAGA,
    T4_1_RADII,
    T4_2_SUM,
    T4_2_PRODUCT,
    T4_3_BETA_TOUCH,
    SET_INEXCIRCLES,
    T5_1_RADIUS,
    T5_1_MIDPOINT,
    P6_1_FGDH,
    T6_2_R3R4,
    T6_2_A_SUM,
    T6_3_CONGRUENT,
    T2_2_HANSEN_AEF,
    T6_TANGENT_PERP,
}

impl CheckId {
    pub const ALL: [CheckId; 16] = [
        CheckId::P3_1_TANGENT,
        CheckId::P3_1_EF,
        CheckId::T3_2_HAGA,
        CheckId::T4_1_RADII,
        CheckId::T4_2_SUM,
        CheckId::T4_2_PRODUCT,
        CheckId::T4_3_BETA_TOUCH,
        CheckId::SET_INEXCIRCLES,
        CheckId::T5_1_RADIUS,
        CheckId::T5_1_MIDPOINT,
        CheckId::P6_1_FGDH,
        CheckId::T6_2_R3R4,
        CheckId::T6_2_A_SUM,
        CheckId::T6_3_CONGRUENT,
        CheckId::T2_2_HANSEN_AEF,
        CheckId::T6_TANGENT_PERP,
    ];

    /// Short human-readable statement of what the check asserts.
    pub fn description(self) -> &'static str {
        match self {
            CheckId::P3_1_TANGENT => "line B'E is tangent to delta",
            CheckId::P3_1_EF => "|EF| equals the per-case tangent-length formula",
            CheckId::T3_2_HAGA => "|AE|·|AF| = 2bc",
            CheckId::T4_1_RADII => "radii of alpha, beta, gamma equal a, b, c",
            CheckId::T4_2_SUM => "d is the per-case signed sum of a, b, c",
            CheckId::T4_2_PRODUCT => "a·d = b·c",
            CheckId::T4_3_BETA_TOUCH => "beta touches B'E at B'",
            CheckId::SET_INEXCIRCLES => "{alpha,beta,gamma,delta} are the tritangent circles of AEF",
            CheckId::T5_1_RADIUS => "2·r1 = |EF|",
            CheckId::T5_1_MIDPOINT => "eps1 touches EF at its midpoint",
            CheckId::P6_1_FGDH => "a = ±(|FG| − |DH|) per case",
            CheckId::T6_2_R3R4 => "r3 = r4",
            CheckId::T6_2_A_SUM => "a = r2 + r4",
            CheckId::T6_3_CONGRUENT => "eps5 and eps6 are congruent",
            CheckId::T2_2_HANSEN_AEF => "radius identities of AEF's tritangent circles",
            CheckId::T6_TANGENT_PERP => "common tangent of eps3, eps5 is perpendicular to AB",
        }
    }
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum CheckStatus {
    Pass,
    /// Carries the exact residue (or the construction error) as witness.
    Fail(String),
    NotApplicable(String),
}

impl CheckStatus {
    pub fn is_fail(&self) -> bool {
        matches!(self, CheckStatus::Fail(_))
    }

    pub fn is_pass(&self) -> bool {
        matches!(self, CheckStatus::Pass)
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CheckEntry {
    pub id: CheckId,
    pub status: CheckStatus,
}

impl Serialize for CheckEntry {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(None)?;
        map.serialize_entry("id", &self.id)?;
        match &self.status {
            CheckStatus::Pass => map.serialize_entry("status", "pass")?,
            CheckStatus::Fail(witness) => {
                map.serialize_entry("status", "fail")?;
                map.serialize_entry("witness", witness)?;
            }
            CheckStatus::NotApplicable(reason) => {
                map.serialize_entry("status", "not_applicable")?;
                map.serialize_entry("reason", reason)?;
            }
        }
        map.end()
    }
}

/// Pass/fail ledger for one configuration; every `CheckId` appears exactly
/// once, in `CheckId::ALL` order.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct VerificationReport {
    pub d: Rat,
    pub e: Rat,
    pub case: HagaCase,
    pub checks: Vec<CheckEntry>,
}

impl VerificationReport {
    pub fn status(&self, id: CheckId) -> &CheckStatus {
        &self.checks.iter().find(|c| c.id == id).expect("all ids present").status
    }

    pub fn has_fail(&self) -> bool {
        self.checks.iter().any(|c| c.status.is_fail())
    }

    pub fn pass_count(&self) -> usize {
        self.checks.iter().filter(|c| c.status.is_pass()).count()
    }

    pub fn fail_count(&self) -> usize {
        self.checks.iter().filter(|c| c.status.is_fail()).count()
    }
}

fn pass_iff_zero(residue: Rat) -> CheckStatus {
    if residue.is_zero() {
        CheckStatus::Pass
    } else {
        CheckStatus::Fail(residue.to_string())
    }
}

fn pass_iff_all_zero(residues: Vec<Rat>) -> CheckStatus {
    match residues.into_iter().find(|r| !r.is_zero()) {
        None => CheckStatus::Pass,
        Some(r) => CheckStatus::Fail(r.to_string()),
    }
}

/// Residue of the exact tangency identity between a line and a circle.
fn tangency_residue(l: &Line, c: &Circle) -> Rat {
    l.eval(&c.center).square() - c.radius.square() * l.normal_norm_sq()
}

fn check(cfg: &HagaConfig, id: CheckId) -> CheckStatus {
    if let Some(reason) = not_applicable_reason(cfg.case, id) {
        return CheckStatus::NotApplicable(reason);
    }
    match evaluate(cfg, id) {
        Ok(status) => status,
        Err(e) => CheckStatus::Fail(e.to_string()),
    }
}

fn not_applicable_reason(case: HagaCase, id: CheckId) -> Option<String> {
    if case == HagaCase::H2 && id != CheckId::P3_1_TANGENT {
        return Some("case h2: F does not exist".to_string());
    }
    if case.is_degenerate()
        && matches!(
            id,
            CheckId::SET_INEXCIRCLES | CheckId::T2_2_HANSEN_AEF | CheckId::T6_TANGENT_PERP
        )
    {
        return Some(format!("case {case}: triangle AEF is degenerate"));
    }
    None
}

fn evaluate(cfg: &HagaConfig, id: CheckId) -> Result<CheckStatus, Error> {
    match id {
        CheckId::P3_1_TANGENT => {
            let line = cfg.line_eb_prime()?;
            Ok(pass_iff_zero(tangency_residue(&line, &cfg.circle_delta())))
        }
        CheckId::P3_1_EF => {
            let ef = cfg.ef_length()?;
            if ef.is_negative() {
                return Ok(CheckStatus::Fail(ef.to_string()));
            }
            let residue = ef.square() - cfg.point_e.dist_sq(cfg.f()?);
            Ok(pass_iff_zero(residue))
        }
        CheckId::T3_2_HAGA => {
            let b = &cfg.len_b;
            let c = cfg.len_c()?;
            let ae_sq = cfg.point_a.dist_sq(&cfg.point_e);
            let af_sq = cfg.point_a.dist_sq(cfg.f()?);
            let residue = ae_sq * af_sq - Rat::from_int(4) * (b.square() * c.square());
            Ok(pass_iff_zero(residue))
        }
        CheckId::T4_1_RADII => {
            let residues = vec![
                &cfg.circle_alpha()?.radius - cfg.len_a()?,
                cfg.circle_beta()?.radius - &cfg.len_b,
                &cfg.circle_gamma()?.radius - cfg.len_c()?,
            ];
            Ok(pass_iff_all_zero(residues))
        }
        CheckId::T4_2_SUM => {
            let ids = cfg.length_identities()?;
            Ok(if ids.sum_ok {
                CheckStatus::Pass
            } else {
                CheckStatus::Fail("signed sum of a, b, c does not recover d".to_string())
            })
        }
        CheckId::T4_2_PRODUCT => {
            let residue = cfg.len_a()? * &cfg.d - &cfg.len_b * cfg.len_c()?;
            Ok(pass_iff_zero(residue))
        }
        CheckId::T4_3_BETA_TOUCH => {
            let beta = cfg.circle_beta()?;
            let line = cfg.line_eb_prime()?;
            Ok(pass_iff_all_zero(vec![
                beta.center.dist_sq(&cfg.b_prime) - beta.radius.square(),
                tangency_residue(&line, &beta),
            ]))
        }
        CheckId::SET_INEXCIRCLES => {
            let aef = cfg.triangle_aef()?;
            let named = [
                ("alpha", cfg.circle_alpha()?),
                ("beta", cfg.circle_beta()?),
                ("gamma", cfg.circle_gamma()?),
                ("delta", cfg.circle_delta()),
            ];
            for (i, (name, c)) in named.iter().enumerate() {
                if aef.kind_of(c).is_none() {
                    return Ok(CheckStatus::Fail(format!("{name} is not tritangent to AEF")));
                }
                for (other, c2) in &named[i + 1..] {
                    if c == c2 {
                        return Ok(CheckStatus::Fail(format!("{name} and {other} coincide")));
                    }
                }
            }
            Ok(CheckStatus::Pass)
        }
        CheckId::T5_1_RADIUS => {
            let eps1 = cfg.circle_eps1()?;
            let two_r1 = Rat::from_int(2) * eps1.radius;
            let residue = two_r1.square() - cfg.point_e.dist_sq(cfg.f()?);
            Ok(pass_iff_zero(residue))
        }
        CheckId::T5_1_MIDPOINT => {
            let eps1 = cfg.circle_eps1()?;
            let f = cfg.f()?;
            let line_ef = Line::through(&cfg.point_e, f)?;
            let touch = line_ef.foot_of_perpendicular(&eps1.center);
            let mid = cfg.point_e.midpoint(f);
            Ok(pass_iff_all_zero(vec![
                tangency_residue(&line_ef, &eps1),
                touch.dist_sq(&mid),
            ]))
        }
        CheckId::P6_1_FGDH => {
            let residue = cfg.fg_dh_relation()? - cfg.len_a()?;
            Ok(pass_iff_zero(residue))
        }
        CheckId::T6_2_R3R4 => {
            let [_, eps3, eps4, _, _] = cfg.circles_eps2_to_eps6()?;
            Ok(pass_iff_zero(eps3.radius - eps4.radius))
        }
        CheckId::T6_2_A_SUM => {
            let [eps2, _, eps4, _, _] = cfg.circles_eps2_to_eps6()?;
            Ok(pass_iff_zero(eps2.radius + eps4.radius - cfg.len_a()?))
        }
        CheckId::T6_3_CONGRUENT => {
            let [_, _, _, eps5, eps6] = cfg.circles_eps2_to_eps6()?;
            Ok(pass_iff_zero(eps5.radius - eps6.radius))
        }
        CheckId::T2_2_HANSEN_AEF => {
            let relations = hansen_relations(&cfg.triangle_aef()?);
            Ok(if relations.all() {
                CheckStatus::Pass
            } else {
                CheckStatus::Fail(format!("{relations:?}"))
            })
        }
        CheckId::T6_TANGENT_PERP => {
            let bfg = cfg.triangle_bfg()?;
            let [_, eps3, eps4, eps5, eps6] = cfg.circles_eps2_to_eps6()?;
            let k3 = bfg.kind_of(&eps3).ok_or(Error::NoSuchCircle)?;
            let k5 = bfg.kind_of(&eps5).ok_or(Error::NoSuchCircle)?;
            let tangent = bfg.common_tangent_perpendicular((k3, k5))?;
            let ab = cfg.line_ab();
            if !tangent.is_perpendicular_to(&ab) {
                return Ok(CheckStatus::Fail("tangent not perpendicular to AB".to_string()));
            }
            let mut left = [eps3.radius.clone(), eps5.radius.clone()];
            let mut right = [eps4.radius, eps6.radius];
            left.sort();
            right.sort();
            if left != right {
                return Ok(CheckStatus::Fail(format!(
                    "radius multisets differ: {{{}, {}}} vs {{{}, {}}}",
                    left[0], left[1], right[0], right[1]
                )));
            }
            Ok(pass_iff_all_zero(vec![
                tangency_residue(&tangent, &eps3),
                tangency_residue(&tangent, &eps5),
            ]))
        }
    }
}

/// Evaluates every check exactly. Failures are report entries, never panics;
/// the expected outcome for every valid configuration is all Pass or
/// NotApplicable.
pub fn verify(cfg: &HagaConfig) -> VerificationReport {
    VerificationReport {
        d: cfg.d.clone(),
        e: cfg.e.clone(),
        case: cfg.case,
        checks: CheckId::ALL
            .into_iter()
            .map(|id| CheckEntry {
                id,
                status: check(cfg, id),
            })
            .collect(),
    }
}

pub fn verify_at(d: &Rat, e: &Rat) -> Result<VerificationReport, Error> {
    Ok(verify(&HagaConfig::build(d.clone(), e.clone())?))
}

/// One report per e value, order-preserving. With the `parallel` feature the
/// grid is evaluated on the rayon thread pool; elements are independent.
pub fn sweep(d: &Rat, e_values: &[Rat]) -> Result<Vec<VerificationReport>, Error> {
    if !d.is_positive() {
        return Err(Error::InvalidSquare);
    }
    #[cfg(feature = "parallel")]
    {
        e_values.par_iter().map(|e| verify_at(d, e)).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        sweep_sequential(d, e_values)
    }
}

/// Sequential fallback with the same contract as `sweep`; always available
/// so the two code paths can be compared.
pub fn sweep_sequential(d: &Rat, e_values: &[Rat]) -> Result<Vec<VerificationReport>, Error> {
    if !d.is_positive() {
        return Err(Error::InvalidSquare);
    }
    e_values.iter().map(|e| verify_at(d, e)).collect()
}

/// The set of cases appearing in the reports.
pub fn case_coverage(reports: &[VerificationReport]) -> BTreeSet<HagaCase> {
    reports.iter().map(|r| r.case).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;

    #[test]
    fn worked_h1_instance_passes_everything() {
        let report = verify_at(&rat!(1), &rat!(3)).unwrap();
        assert_eq!(report.checks.len(), 16);
        assert_eq!(report.pass_count(), 16, "{report:#?}");
    }

    #[test]
    fn h2_marks_f_dependent_checks_not_applicable() {
        let report = verify_at(&rat!(1), &rat!(2)).unwrap();
        assert!(report.status(CheckId::P3_1_TANGENT).is_pass());
        assert_eq!(report.pass_count(), 1);
        assert!(!report.has_fail());
        match report.status(CheckId::T3_2_HAGA) {
            CheckStatus::NotApplicable(reason) => assert!(reason.contains("h2")),
            other => panic!("expected NotApplicable, got {other:?}"),
        }
    }

    #[test]
    fn degenerate_cases_pass_applicable_checks() {
        for e in [rat!(1), rat!(0)] {
            let report = verify_at(&rat!(1), &e).unwrap();
            assert!(!report.has_fail(), "{report:#?}");
            assert_eq!(report.pass_count(), 13);
        }
    }

    #[test]
    fn perturbed_b_prime_fails_tangency() {
        let mut cfg = HagaConfig::build(rat!(2), rat!(1)).unwrap();
        cfg.b_prime.x = cfg.b_prime.x.clone() + rat!(1, 1000);
        let report = verify(&cfg);
        assert!(report.status(CheckId::P3_1_TANGENT).is_fail());
        match report.status(CheckId::P3_1_TANGENT) {
            CheckStatus::Fail(witness) => {
                let w: Rat = witness.parse().unwrap();
                assert!(!w.is_zero());
            }
            _ => unreachable!(),
        }
    }

    #[test]
    fn reports_are_deterministic() {
        let r1 = verify_at(&rat!(3, 7), &rat!(22, 9)).unwrap();
        let r2 = verify_at(&rat!(3, 7), &rat!(22, 9)).unwrap();
        assert_eq!(
            serde_json::to_string(&r1).unwrap(),
            serde_json::to_string(&r2).unwrap()
        );
    }

    #[test]
    fn sweep_covers_all_cases() {
        let es: Vec<Rat> = [
            rat!(-3),
            rat!(-1, 2),
            rat!(0),
            rat!(1, 3),
            rat!(1, 2),
            rat!(1),
            rat!(3, 2),
            rat!(2),
            rat!(5, 2),
            rat!(3),
        ]
        .to_vec();
        let reports = sweep(&rat!(1), &es).unwrap();
        assert_eq!(reports.len(), 10);
        assert!(reports.iter().all(|r| !r.has_fail()));
        let coverage = case_coverage(&reports);
        assert_eq!(coverage.len(), 7);
        // order preserved
        assert_eq!(reports[0].e, rat!(-3));
        assert_eq!(reports[9].e, rat!(3));
        // sequential fallback agrees
        let seq = sweep_sequential(&rat!(1), &es).unwrap();
        assert_eq!(reports, seq);

        assert!(sweep(&rat!(1), &[]).unwrap().is_empty());
        assert!(case_coverage(&[]).is_empty());
        assert!(matches!(sweep(&rat!(0), &[rat!(1)]), Err(Error::InvalidSquare)));
    }

    #[test]
    fn round_trip_square_verifies() {
        // the side-6 square from the 3-4-5 triangle's inverse construction
        let reports = sweep(&rat!(6), &[rat!(3)]).unwrap();
        assert_eq!(reports[0].case, HagaCase::H5);
        assert!(!reports[0].has_fail());
    }

    #[test]
    fn report_json_shape() {
        let report = verify_at(&rat!(1), &rat!(2)).unwrap();
        let v = serde_json::to_value(&report).unwrap();
        assert_eq!(v["case"], "h2");
        assert_eq!(v["checks"][0]["id"], "P3_1_TANGENT");
        assert_eq!(v["checks"][0]["status"], "pass");
        assert_eq!(v["checks"][1]["status"], "not_applicable");
        assert!(v["checks"][1]["reason"].as_str().unwrap().contains("h2"));
    }
}
