//! Brute-force ground truth for the closed forms and classifications.
//!
//! Every tower matrix is built explicitly and its determinant computed by
//! elimination; root existence is decided by enumerating the image of
//! `y -> y^d` rather than by the exponent criterion, so the criterion itself
//! is under test.

use std::fmt::Write as _;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::det_theory::{classify, classify_v_stated_exceptions, det_tower_closed, CaseParams, Verdict};
use crate::error::Result;
use crate::field::{is_dth_power, primitive_root_of_unity, ElementRepr, Field, FieldElement, DEFAULT_MAX_Q};
use crate::generators::{gen_tower, gen_tower_with_root, Family, GeneratorId};
use crate::ntheory::{prime_divisors, primes_up_to};

/// Fields up to this order get the exhaustive power-image oracle; larger
/// ones fall back to the exponent criterion.
pub const EXHAUSTIVE_MAX_Q: u64 = 10_000;

/// Membership table of `{y^d : y ∈ F_q^*}`, indexed by canonical position.
pub fn power_image(field: &Field, d: u64) -> Vec<bool> {
    let mut image = vec![false; field.order() as usize];
    for y in field.units() {
        image[field.index_of(&y.pow(d)) as usize] = true;
    }
    image
}

pub fn is_dth_power_exhaustive(x: &FieldElement, d: u64) -> bool {
    !x.is_zero() && power_image(x.field(), d)[x.field().index_of(x) as usize]
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OracleMethod {
    Enumeration,
    Criterion,
}

/// One `(p, e, r, m, family)` case of a sweep.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseRecord {
    pub p: u64,
    pub e: u32,
    pub q: u64,
    pub r: u64,
    pub m: u32,
    pub d: u64,
    pub family: Family,
    pub det_formula: Option<ElementRepr>,
    /// Elimination determinant for each tower position `i = 1, 2, ..`.
    pub det_direct: Vec<ElementRepr>,
    pub verdict: Option<Verdict>,
    pub rule: Option<String>,
    pub witness: Option<ElementRepr>,
    pub oracle_root_exists: Option<bool>,
    pub oracle_method: Option<OracleMethod>,
    pub agree: bool,
    /// Verdict of the shorter `V` exception list; `None` for `U` and `W`.
    pub theorem2_literal_verdict: Option<Verdict>,
    pub theorem2_discrepancy: bool,
    pub error: Option<String>,
}

impl CaseRecord {
    fn skeleton(c: &CaseParams, family: Family) -> Self {
        Self {
            p: c.p(),
            e: c.e(),
            q: c.q(),
            r: c.r(),
            m: c.m(),
            d: c.d(),
            family,
            det_formula: None,
            det_direct: Vec::new(),
            verdict: None,
            rule: None,
            witness: None,
            oracle_root_exists: None,
            oracle_method: None,
            agree: false,
            theorem2_literal_verdict: None,
            theorem2_discrepancy: false,
            error: None,
        }
    }

    pub fn key(&self) -> (u64, u32, u64, u32, Family) {
        (self.p, self.e, self.r, self.m, self.family)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("case record JSON is always serialisable")
    }
}

/// Checks every tower matrix of one case against the closed form and the
/// classification against exhaustive root search.
pub fn verify_case(c: &CaseParams, family: Family) -> Result<CaseRecord> {
    let mut rec = CaseRecord::skeleton(c, family);
    let formula = det_tower_closed(family, c)?;
    let mut dets_agree = true;
    for i in family.tower_positions(c.m()) {
        let id = GeneratorId::new(c.field(), family, c.r(), c.m(), i)?;
        let direct = gen_tower(&id)?.det()?;
        dets_agree &= direct == formula;
        rec.det_direct.push(direct.repr());
    }
    rec.det_formula = Some(formula.repr());

    let class = classify(family, c)?;
    let (truth, method) = if c.q() <= EXHAUSTIVE_MAX_Q {
        (is_dth_power_exhaustive(&formula, c.d()), OracleMethod::Enumeration)
    } else {
        (is_dth_power(&formula, c.d())?, OracleMethod::Criterion)
    };
    let witness_ok = match &class.witness {
        Some(w) => w.pow(c.d()) == formula,
        None => class.verdict == Verdict::NoRoot,
    };
    let one_ok = class.verdict != Verdict::DeterminantIsOne || formula.is_one();

    rec.agree = dets_agree && class.verdict.has_root() == truth && witness_ok && one_ok;
    rec.verdict = Some(class.verdict);
    rec.rule = Some(class.rule.to_string());
    rec.witness = class.witness.as_ref().map(FieldElement::repr);
    rec.oracle_root_exists = Some(truth);
    rec.oracle_method = Some(method);
    if family == Family::V {
        let literal = classify_v_stated_exceptions(c);
        rec.theorem2_literal_verdict = Some(literal);
        rec.theorem2_discrepancy = literal.has_root() != truth;
    }
    Ok(rec)
}

/// Re-derives root existence with every primitive `r`-th root of unity in
/// place of the canonical one and checks the verdict does not move.
pub fn verdict_independent_of_root_choice(c: &CaseParams, family: Family) -> Result<bool> {
    let verdict = classify(family, c)?.verdict;
    let omega = primitive_root_of_unity(c.field(), c.r())?;
    let image = power_image(c.field(), c.d());
    for k in 1..c.r() {
        let alt = omega.pow(k);
        for i in family.tower_positions(c.m()) {
            let id = GeneratorId::new(c.field(), family, c.r(), c.m(), i)?;
            let det = gen_tower_with_root(&id, &alt)?.det()?;
            if image[c.field().index_of(&det) as usize] != verdict.has_root() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepSummary {
    pub cases: usize,
    pub agreements: usize,
    pub disagreements: usize,
    pub errors: usize,
    pub theorem2_discrepancies: usize,
    pub skipped_fields: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepReport {
    pub cases: Vec<CaseRecord>,
    pub summary: SweepSummary,
}

impl SweepReport {
    /// True when no case disagrees or errored. Discrepancies of the shorter
    /// `V` exception list are not failures.
    pub fn is_clean(&self) -> bool {
        self.summary.disagreements == 0 && self.summary.errors == 0
    }

    /// `(p, e, r, m)` of every `V` case where the shorter exception list is
    /// wrong, in sweep order.
    pub fn theorem2_discrepancies(&self) -> Vec<(u64, u32, u64, u32)> {
        self.cases
            .iter()
            .filter(|c| c.theorem2_discrepancy)
            .map(|c| (c.p, c.e, c.r, c.m))
            .collect()
    }

    /// One JSON object per line, in sweep order.
    pub fn to_jsonl(&self) -> String {
        self.cases.iter().map(|c| c.to_json() + "\n").collect()
    }

    pub fn summary_table(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{:<8} {:>6} {:>6} {:>6} {:>8}", "family", "cases", "agree", "errors", "t2-diff");
        for family in Family::ALL {
            let rows: Vec<_> = self.cases.iter().filter(|c| c.family == family).collect();
            let _ = writeln!(
                out,
                "{:<8} {:>6} {:>6} {:>6} {:>8}",
                family.to_string(),
                rows.len(),
                rows.iter().filter(|c| c.agree).count(),
                rows.iter().filter(|c| c.error.is_some()).count(),
                rows.iter().filter(|c| c.theorem2_discrepancy).count(),
            );
        }
        let s = &self.summary;
        let _ = writeln!(
            out,
            "total {} cases: {} agree, {} core disagreements, {} errors, {} theorem2-literal discrepancies",
            s.cases, s.agreements, s.disagreements, s.errors, s.theorem2_discrepancies
        );
        if s.skipped_fields > 0 {
            let _ = writeln!(out, "skipped {} fields above the size bound", s.skipped_fields);
        }
        out
    }
}

/// All primes `p <= p_max`, `1 <= e <= e_max`, primes `r | q - 1`,
/// `m >= 1` with `r^m <= d_max`, and every family valid for `m`.
pub fn sweep(p_max: u64, e_max: u32, d_max: u64) -> SweepReport {
    sweep_primes(&primes_up_to(p_max), e_max, d_max, DEFAULT_MAX_Q)
}

/// [`sweep`] over an explicit list of characteristics.
pub fn sweep_primes(primes: &[u64], e_max: u32, d_max: u64, max_q: u64) -> SweepReport {
    let mut primes = primes.to_vec();
    primes.sort_unstable();
    primes.dedup();

    let mut skipped_fields = 0;
    let mut todo: Vec<(CaseParams, Family)> = Vec::new();
    for &p in &primes {
        for e in 1..=e_max {
            let Ok(field) = Field::with_bound(p, e, max_q) else {
                skipped_fields += 1;
                continue;
            };
            for r in prime_divisors(field.unit_order()) {
                let mut m = 1;
                while r.checked_pow(m).is_some_and(|d| d <= d_max) {
                    let c = CaseParams::new(&field, r, m).expect("r divides q - 1 by construction");
                    for family in Family::ALL.into_iter().filter(|f| m >= f.min_m()) {
                        todo.push((c.clone(), family));
                    }
                    m += 1;
                }
            }
        }
    }

    let cases: Vec<CaseRecord> = todo
        .par_iter()
        .map(|(c, family)| {
            verify_case(c, *family).unwrap_or_else(|err| {
                let mut rec = CaseRecord::skeleton(c, *family);
                rec.error = Some(err.to_string());
                rec
            })
        })
        .collect();

    let summary = SweepSummary {
        cases: cases.len(),
        agreements: cases.iter().filter(|c| c.agree).count(),
        disagreements: cases.iter().filter(|c| !c.agree && c.error.is_none()).count(),
        errors: cases.iter().filter(|c| c.error.is_some()).count(),
        theorem2_discrepancies: cases.iter().filter(|c| c.theorem2_discrepancy).count(),
        skipped_fields,
    };
    SweepReport { cases, summary }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::make_field;

    fn case(p: u64, e: u32, r: u64, m: u32) -> CaseParams {
        CaseParams::new(&make_field(p, e).unwrap(), r, m).unwrap()
    }

    #[test]
    fn fourier_f7_r3() {
        let rec = verify_case(&case(7, 1, 3, 1), Family::V).unwrap();
        assert!(rec.agree);
        assert_eq!(rec.det_formula, Some(ElementRepr::Scalar(6)));
        assert_eq!(rec.det_direct, vec![ElementRepr::Scalar(6)]);
        assert_eq!(rec.oracle_root_exists, Some(true));
        assert!(!rec.theorem2_discrepancy);
    }

    #[test]
    fn fourier_f5_r2_flags_short_list() {
        let rec = verify_case(&case(5, 1, 2, 1), Family::V).unwrap();
        assert!(rec.agree);
        assert_eq!(rec.verdict, Some(Verdict::NoRoot));
        assert_eq!(rec.theorem2_literal_verdict, Some(Verdict::RootExists));
        assert!(rec.theorem2_discrepancy);
    }

    #[test]
    fn permutation_f7_r2_m2() {
        let rec = verify_case(&case(7, 1, 2, 2), Family::W).unwrap();
        assert!(rec.agree);
        assert_eq!(rec.verdict, Some(Verdict::NoRoot));
        assert_eq!(rec.oracle_root_exists, Some(false));
        assert_eq!(rec.theorem2_literal_verdict, None);
    }

    #[test]
    fn fourth_powers_mod_7() {
        let f7 = make_field(7, 1).unwrap();
        let image: Vec<u64> = (0..7).filter(|&k| power_image(&f7, 4)[k as usize]).collect();
        assert_eq!(image, vec![1, 2, 4]);
    }

    #[test]
    fn degenerate_sweeps() {
        let empty = sweep(2, 1, 2);
        assert!(empty.cases.is_empty());
        let tiny = sweep(3, 1, 2);
        let keys: Vec<_> = tiny.cases.iter().map(CaseRecord::key).collect();
        assert_eq!(keys, vec![(3, 1, 2, 1, Family::U), (3, 1, 2, 1, Family::V)]);
        assert!(tiny.is_clean());
    }

    #[test]
    fn sweep_order_is_lexicographic() {
        let report = sweep(7, 2, 16);
        let keys: Vec<_> = report.cases.iter().map(CaseRecord::key).collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
        assert!(report.is_clean(), "{}", report.summary_table());
    }

    #[test]
    fn oversize_fields_are_skipped() {
        let report = sweep_primes(&[3, 5], 2, 9, 10);
        assert_eq!(report.summary.skipped_fields, 1);
        assert!(report.cases.iter().all(|c| c.q <= 10));
    }

    #[test]
    fn jsonl_lines_parse_back() {
        let report = sweep(5, 1, 8);
        let lines: Vec<_> = report.to_jsonl().lines().map(str::to_owned).collect();
        assert_eq!(lines.len(), report.cases.len());
        for (line, rec) in lines.iter().zip(&report.cases) {
            let back: CaseRecord = serde_json::from_str(line).unwrap();
            assert_eq!(&back, rec);
        }
    }

    #[test]
    fn root_choice_invariance_small() {
        for (p, e, r, m) in [(7, 1, 3, 1), (13, 1, 3, 2), (11, 1, 5, 1), (5, 2, 3, 1)] {
            for family in Family::ALL.into_iter().filter(|f| m >= f.min_m()) {
                assert!(verdict_independent_of_root_choice(&case(p, e, r, m), family).unwrap());
            }
        }
    }
}
