//! End-to-end reproduction of the classification. One test runs every
//! criterion in order, prints a pass/fail line for each, and fails at the
//! end if any criterion failed.

mod support;

use std::time::{Duration, Instant};

use hecke_b2::analysis::{
    bernstein_words, burnside_irreducible, find_injection, find_surjection, kato, trace_vector,
    BaseRegime, RegimeKind,
};
use hecke_b2::catalog::Catalog;
use hecke_b2::driver::{classify, ram_correction, verify_catalog, Claim, FactorReport};
use hecke_b2::module::{induce, principal_series, weight_decomposition};
use hecke_b2::weyl::{Simple, WeylElem};
use hecke_b2::{Field, QCatalog, QCharacter, QModule, QParameters, Q};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use support::*;

type Criterion = (&'static str, fn() -> Outcome);

const RUN_BUDGET: Duration = Duration::from_secs(60);

/// One printed table row: character, P(χ), and (dim, calibrated) per factor.
type Row = (
    &'static str,
    &'static [&'static str],
    &'static [(usize, bool)],
);

const A: &[(usize, bool)] = &[(1, true), (1, true), (3, true), (3, true)];
const B_DEG: &[(usize, bool)] = &[(1, true), (1, true), (3, false), (3, false)];
const C: &[(usize, bool)] = &[(2, true), (2, true), (2, true), (2, true)];
const C_SPLIT: &[(usize, bool)] = &[
    (1, true),
    (1, true),
    (1, true),
    (1, true),
    (2, true),
    (2, true),
];
const NC: &[(usize, bool)] = &[(4, false), (4, false)];
const CAL: &[(usize, bool)] = &[(4, true), (4, true)];

const GENERIC: &[Row] = &[
    ("chi_a", &["a1", "a2"], A),
    ("chi_b", &["a1", "a2"], A),
    ("chi_c", &["a2", "2a1+a2"], C),
    ("chi_d1", &["a1", "a1+a2"], NC),
    ("chi_d2", &["a1"], NC),
    ("chi_d3", &["a2", "2a1+a2"], NC),
    ("chi_d4", &["a2"], NC),
    ("chi_d5", &["a2"], NC),
    ("chi_f", &["a2"], CAL),
    ("chi_g", &["a1"], CAL),
];

const P_EQ_Q: &[Row] = &[
    ("chi_a", &["a1", "a2"], A),
    ("chi_b", &["a1", "a2", "2a1+a2"], B_DEG),
    ("chi_c", &["a2", "2a1+a2"], C),
    ("chi_d1", &["a1", "a1+a2"], NC),
    ("chi_d4", &["a2"], NC),
    ("chi_d5", &["a2"], NC),
    ("chi_f", &["a2"], CAL),
    ("chi_g", &["a1"], CAL),
];

const P_EQ_Q2: &[Row] = &[
    ("chi_a", &["a1", "a2"], A),
    ("chi_b", &["a1", "a2", "a1+a2"], B_DEG),
    ("chi_c", &["a2", "2a1+a2"], C),
    ("chi_d2", &["a1"], NC),
    ("chi_d3", &["a2", "2a1+a2"], NC),
    ("chi_d5", &["a2"], NC),
    ("chi_f", &["a2"], CAL),
    ("chi_g", &["a1"], CAL),
];

const P2_EQ_NEG_Q2: &[Row] = &[
    ("chi_a", &["a1", "a2"], A),
    ("chi_c", &["a1", "a2", "2a1+a2"], C_SPLIT),
    ("chi_d1", &["a1", "a1+a2"], NC),
    ("chi_d2", &["a1"], NC),
    ("chi_d3", &["a2", "2a1+a2"], NC),
    ("chi_d4", &["a2"], NC),
    ("chi_d5", &["a2"], NC),
    ("chi_f", &["a2"], CAL),
    ("chi_g", &["a1"], CAL),
];

fn n(k: i64) -> Q {
    Q::from_int(k)
}

fn base_params(regime: BaseRegime) -> QParameters {
    let (p, q) = match regime {
        BaseRegime::Generic => (n(5), n(3)),
        BaseRegime::PEqQ => (n(3), n(3)),
        BaseRegime::PEqQ2 => (n(9), n(3)),
        BaseRegime::P2EqNegQ2 => (Q::from_parts(0, 1, 3, 1), n(3)),
    };
    QParameters::new(p, q).unwrap()
}

fn catalog(regime: BaseRegime) -> QCatalog {
    Catalog::new(&base_params(regime), regime, n(2), n(2)).unwrap()
}

const BASES: [BaseRegime; 4] = [
    BaseRegime::Generic,
    BaseRegime::PEqQ,
    BaseRegime::PEqQ2,
    BaseRegime::P2EqNegQ2,
];

struct Outcome {
    ok: bool,
    detail: String,
}

fn check(problems: &mut Vec<String>, cond: bool, what: impl FnOnce() -> String) {
    if !cond {
        problems.push(what());
    }
}

/// Every factor must be an identified irreducible, every row certified,
/// and the table data must agree with the printed row.
fn row_problems(report: &FactorReport<Q>, row: &Row) -> Vec<String> {
    let mut out = Vec::new();
    let name = row.0;
    let mut pchi = report.pchi_labels();
    pchi.sort();
    let mut want: Vec<&str> = row.1.to_vec();
    want.sort();
    if pchi != want {
        out.push(format!("{name}: P(chi) {pchi:?}, expected {want:?}"));
    }
    let mut shape: Vec<(usize, bool)> = report
        .factors
        .iter()
        .map(|f| (f.dim, f.calibrated))
        .collect();
    shape.sort();
    if shape != row.2 {
        out.push(format!("{name}: factors {shape:?}, expected {:?}", row.2));
    }
    if !report.certified {
        out.push(format!("{name}: not certified"));
    }
    for f in &report.factors {
        if !f.irreducible || f.label == "unlisted" {
            out.push(format!(
                "{name}: factor {} irreducible={}",
                f.label, f.irreducible
            ));
        }
    }
    out
}

fn table_run(regime: BaseRegime, rows: &[Row]) -> Outcome {
    let kind = RegimeKind::Base(regime);
    let start = Instant::now();
    let report = match classify(kind, &base_params(regime), &n(2), &n(2)) {
        Ok(r) => r,
        Err(e) => {
            return Outcome {
                ok: false,
                detail: format!("{kind}: {e}"),
            }
        }
    };
    let elapsed = start.elapsed();
    let mut problems = Vec::new();
    let names: Vec<&str> = report
        .rows
        .iter()
        .map(|r| r.report.character.as_str())
        .collect();
    let want: Vec<&str> = rows.iter().map(|r| r.0).collect();
    if names != want {
        problems.push(format!("rows {names:?}, expected {want:?}"));
    }
    for (r, row) in report.rows.iter().zip(rows) {
        problems.extend(row_problems(&r.report, row));
    }
    if elapsed > RUN_BUDGET {
        problems.push(format!("took {elapsed:.1?}"));
    }
    Outcome {
        ok: problems.is_empty(),
        detail: if problems.is_empty() {
            format!("{kind}: {} rows in {elapsed:.1?}", rows.len())
        } else {
            format!("{kind}: {}", problems.join("; "))
        },
    }
}

fn criterion_1() -> Outcome {
    table_run(BaseRegime::Generic, GENERIC)
}

fn criterion_2() -> Outcome {
    let runs = [
        table_run(BaseRegime::PEqQ, P_EQ_Q),
        table_run(BaseRegime::PEqQ2, P_EQ_Q2),
        table_run(BaseRegime::P2EqNegQ2, P2_EQ_NEG_Q2),
    ];
    Outcome {
        ok: runs.iter().all(|o| o.ok),
        detail: runs
            .iter()
            .map(|o| o.detail.as_str())
            .collect::<Vec<_>>()
            .join(" | "),
    }
}

fn criterion_3() -> Outcome {
    let mut problems = Vec::new();
    let mut details = Vec::new();
    for regime in BASES {
        let kind = RegimeKind::Base(regime);
        let start = Instant::now();
        let report = match verify_catalog(kind, &base_params(regime), &n(2), &n(2), None) {
            Ok(r) => r,
            Err(e) => {
                problems.push(format!("{kind}: {e}"));
                continue;
            }
        };
        let elapsed = start.elapsed();
        for e in report.entries.iter().filter(|e| !e.ok || !e.relations) {
            problems.push(format!("{kind} {}: {:?}", e.label, e));
        }
        check(&mut problems, elapsed <= RUN_BUDGET, || {
            format!("{kind} took {elapsed:.1?}")
        });
        if regime == BaseRegime::P2EqNegQ2 {
            for (label, want) in [
                ("U_c^3", ["onedim_4", "onedim_7"]),
                ("U_c^4", ["onedim_3", "onedim_8"]),
            ] {
                let entry = report.entries.iter().find(|e| e.label == label);
                let mut got: Vec<String> =
                    entry.map(|e| e.factor_labels.clone()).unwrap_or_default();
                got.sort();
                let reducible = entry.is_some_and(|e| {
                    e.claim == Claim::Reducible { into_one_dim: true } && !e.irreducible
                });
                check(&mut problems, reducible && got == want, || {
                    format!("{label}: factors {got:?}, expected {want:?}")
                });
            }
        }
        details.push(format!(
            "{kind}: {} entries in {elapsed:.1?}",
            report.entries.len()
        ));
    }
    Outcome {
        ok: problems.is_empty(),
        detail: if problems.is_empty() {
            details.join(" | ")
        } else {
            problems.join("; ")
        },
    }
}

/// `±p^a q^b` with small exponents, sometimes scaled off the lattice, so
/// both reducible and irreducible principal series occur.
fn random_value<R: Rng>(rng: &mut R) -> Q {
    let mut x = n(5).checked_pow(rng.gen_range(-1..=1)).unwrap()
        * &n(3).checked_pow(rng.gen_range(-2..=2)).unwrap();
    if rng.gen_bool(0.5) {
        x = -x;
    }
    if rng.gen_bool(0.3) {
        x = x * &n([2, 7, 11][rng.gen_range(0..3)]);
    }
    x
}

fn criterion_4() -> Outcome {
    let ps = base_params(BaseRegime::Generic);
    let mut rng = ChaCha8Rng::seed_from_u64(0x4b41_544f);
    let mut chars: Vec<QCharacter> = (0..50)
        .map(|_| QCharacter::new(random_value(&mut rng), random_value(&mut rng), &ps).unwrap())
        .collect();
    let cat = catalog(BaseRegime::Generic);
    chars.extend(
        cat.characters()
            .unwrap()
            .into_iter()
            .take(10)
            .map(|(_, c)| c),
    );
    let mut problems = Vec::new();
    let mut irreducible = 0;
    for chi in &chars {
        let burnside = burnside_irreducible(&principal_series(chi).unwrap()).0;
        let k = kato(chi);
        if burnside != k.irreducible {
            problems.push(format!(
                "{chi}: Burnside {burnside}, P(chi) = {:?}",
                k.labels()
            ));
        }
        irreducible += usize::from(burnside);
    }
    Outcome {
        ok: problems.is_empty(),
        detail: if problems.is_empty() {
            format!(
                "{} characters, {irreducible} irreducible, {} reducible",
                chars.len(),
                chars.len() - irreducible
            )
        } else {
            problems.join("; ")
        },
    }
}

fn criterion_5() -> Outcome {
    let mut problems = Vec::new();
    let mut count = 0;
    for regime in BASES {
        let cat = catalog(regime);
        let ps = cat.params().clone();
        for (name, chi) in cat.characters().unwrap() {
            for i in Simple::ALL {
                let qi = ps.of(i).clone();
                if chi.eval(i.coroot()) != qi.clone() * &qi {
                    continue;
                }
                count += 1;
                let (rho1, rho2) = lemma_reps(&chi, i);
                let m = principal_series(&chi).unwrap();
                let (ind1, ind2) = (induce(&rho1).unwrap(), induce(&rho2).unwrap());
                let surj = find_surjection(&m, &ind1).unwrap().is_some();
                let inj = find_injection(&ind2, &m).unwrap().is_some();
                if !(surj && inj && ind1.dim() + ind2.dim() == 8) {
                    problems.push(format!(
                        "{regime:?} {name} i={}: surjection {surj}, injection {inj}",
                        i.index()
                    ));
                }
            }
        }
    }
    Outcome {
        ok: problems.is_empty() && count > 0,
        detail: if problems.is_empty() {
            format!("{count} (character, i) pairs")
        } else {
            problems.join("; ")
        },
    }
}

fn criterion_6() -> Outcome {
    let mut problems = Vec::new();
    let mut count = 0;
    for regime in BASES {
        let cat = catalog(regime);
        for (name, chi) in cat.characters().unwrap() {
            let modules: Vec<QModule> = WeylElem::all()
                .map(|w| principal_series(&chi.act(w)).unwrap())
                .collect();
            let refs: Vec<&QModule> = modules.iter().collect();
            let words = bernstein_words(&refs);
            let base = trace_vector(&modules[0], &words);
            let same = modules.iter().all(|m| trace_vector(m, &words) == base);
            if !same {
                problems.push(format!("{regime:?} {name}"));
            }
            count += 1;
        }
    }
    Outcome {
        ok: problems.is_empty(),
        detail: if problems.is_empty() {
            format!("{count} characters x 8 Weyl elements")
        } else {
            problems.join("; ")
        },
    }
}

fn criterion_7() -> Outcome {
    let ps = base_params(BaseRegime::Generic);
    let values = [
        n(2),
        n(7),
        Q::from_parts(1, 2, 0, 1),
        n(-11),
        Q::from_parts(3, 1, 1, 1),
    ];
    let mut problems = Vec::new();
    for family in ["f", "g"] {
        for j in 1..=2 {
            let mut seen: Vec<Vec<((Q, Q), usize)>> = Vec::new();
            for x in &values {
                let (v, u) = if family == "f" {
                    (x.clone(), n(2))
                } else {
                    (n(2), x.clone())
                };
                let cat = match Catalog::new(&ps, BaseRegime::Generic, v, u) {
                    Ok(c) => c,
                    Err(e) => {
                        problems.push(format!("{family}({x}): {e}"));
                        continue;
                    }
                };
                let m = cat.module(&format!("Ind(rho_{j}^{family})")).unwrap();
                let wd = weight_decomposition(&m).unwrap();
                let irreducible = burnside_irreducible(&m).0;
                if m.dim() != 4 || !wd.is_calibrated() || !irreducible {
                    problems.push(format!("Ind(rho_{j}^{family}({x})): dim {}, calibrated {}, irreducible {irreducible}", m.dim(), wd.is_calibrated()));
                }
                let ms = wd.multiset();
                if seen.contains(&ms) {
                    problems.push(format!(
                        "Ind(rho_{j}^{family}({x})) repeats an earlier weight multiset"
                    ));
                }
                seen.push(ms);
            }
        }
    }
    Outcome {
        ok: problems.is_empty(),
        detail: if problems.is_empty() {
            format!(
                "{} values each of v and u, both induced halves",
                values.len()
            )
        } else {
            problems.join("; ")
        },
    }
}

fn criterion_8() -> Outcome {
    let start = Instant::now();
    let report = match ram_correction(&base_params(BaseRegime::PEqQ), &n(2), &n(2)) {
        Ok(r) => r,
        Err(e) => {
            return Outcome {
                ok: false,
                detail: e.to_string(),
            }
        }
    };
    let elapsed = start.elapsed();
    let mut problems = Vec::new();
    let d5 = report.rows.iter().find(|r| r.report.character == "chi_d5");
    match d5 {
        Some(r) => {
            let f = &r.report.factors;
            if !(f.len() == 2
                && f.iter()
                    .all(|x| x.dim == 4 && !x.calibrated && x.irreducible)
                && r.report.certified)
            {
                problems
                    .push("chi_d5 is not two non-calibrated irreducible 4-dim factors".to_string());
            }
        }
        None => problems.push("no chi_d5 row".to_string()),
    }
    let omitted: Vec<(&str, &Row)> = [
        "-chi_a", "-chi_b", "-chi_d1", "-chi_d4", "-chi_d5", "-chi_f",
    ]
    .into_iter()
    .map(|neg| (neg, P_EQ_Q.iter().find(|r| r.0 == &neg[1..]).unwrap()))
    .collect();
    for (neg, row) in omitted {
        match report.rows.iter().find(|r| r.report.character == neg) {
            Some(r) => problems.extend(
                row_problems(&r.report, row)
                    .into_iter()
                    .map(|p| format!("{neg} as {p}")),
            ),
            None => problems.push(format!("no {neg} row")),
        }
    }
    if elapsed > RUN_BUDGET {
        problems.push(format!("took {elapsed:.1?}"));
    }
    Outcome {
        ok: problems.is_empty(),
        detail: if problems.is_empty() {
            format!("chi_d5 plus 6 negated rows in {elapsed:.1?}")
        } else {
            problems.join("; ")
        },
    }
}

fn criterion_9() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let ps = base_params(BaseRegime::Generic);
    let mut problems = Vec::new();
    let assoc = (0..200)
        .filter(|_| {
            let (a, b, c) = (
                random_monomial(&mut rng, &ps),
                random_monomial(&mut rng, &ps),
                random_monomial(&mut rng, &ps),
            );
            !associative(&a, &b, &c)
        })
        .count();
    if assoc > 0 {
        problems.push(format!("{assoc} non-associative triples"));
    }
    let axioms = (0..200)
        .filter(|_| {
            let (a, b, c) = (
                random_nonzero(&mut rng),
                random_nonzero(&mut rng),
                random_nonzero(&mut rng),
            );
            !field_axioms(&a, &b, &c) || !field_axioms(&Q::from_int(0), &b, &c)
        })
        .count();
    if axioms > 0 {
        problems.push(format!("{axioms} field axiom failures"));
    }
    let mut modules = Vec::new();
    for _ in 0..20 {
        let chi = QCharacter::new(random_nonzero(&mut rng), random_nonzero(&mut rng), &ps).unwrap();
        if !restricts_to_regular(&chi) {
            problems.push(format!(
                "M{chi} does not restrict to the regular representation"
            ));
        }
        modules.push(principal_series(&chi).unwrap());
    }
    for regime in BASES {
        let cat = catalog(regime);
        for label in cat.labels() {
            if let Ok(m) = cat.module(&label) {
                modules.push(m);
            }
        }
    }
    let bad_x = modules.iter().filter(|m| !x_commute(m)).count();
    let bad_twist = modules.iter().filter(|m| !twist_round_trip(m)).count();
    if bad_x + bad_twist > 0 {
        problems.push(format!(
            "{bad_x} modules with non-commuting X, {bad_twist} failed twists"
        ));
    }
    Outcome {
        ok: problems.is_empty(),
        detail: if problems.is_empty() {
            format!(
                "200 associativity triples, 200 axiom triples, 20 restrictions, {} modules",
                modules.len()
            )
        } else {
            problems.join("; ")
        },
    }
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 9] = [
        ("generic table at (5,3)", criterion_1),
        ("degenerate tables at (3,3), (9,3), (3i,3)", criterion_2),
        ("catalog verification", criterion_3),
        ("Kato round trip", criterion_4),
        ("decomposition lemma sequences", criterion_5),
        ("W-invariance of trace vectors", criterion_6),
        ("one-parameter families", criterion_7),
        ("equal-parameter correction", criterion_8),
        ("property suites", criterion_9),
    ];
    let mut failed = Vec::new();
    for (k, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let verdict = if outcome.ok { "PASS" } else { "FAIL" };
        println!(
            "criterion {}: {verdict} {name} [{:.1?}] {}",
            k + 1,
            start.elapsed(),
            outcome.detail
        );
        if !outcome.ok {
            failed.push(k + 1);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
