//! The classification driver: composition factors of every principal series
//! in a regime, checked against the expected tables, plus verification of the
//! catalog and of the decomposition lemma.

use rayon::prelude::*;

use crate::analysis::{
    bernstein_words, burnside_irreducible, composition_factors, find_injection, find_surjection,
    identify_factor, kato, sum_traces, trace_vector, validate_regime, BaseRegime, RegimeKind,
    Transport,
};
use crate::catalog::{expected_table, Catalog, ExpectedRow, RAM_OMITTED_NEGATIONS};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::hecke::Parameters;
use crate::module::{
    induce, principal_series, reparametrize, twist_t2, weight_decomposition, Character, HModule,
    OneDimRep, WeightDecomposition,
};
use crate::weyl::{PositiveCoroot, Simple};

/// One composition factor.
#[derive(Clone, Debug)]
pub struct FactorInfo<F: Field> {
    pub label: String,
    pub dim: usize,
    pub calibrated: bool,
    pub irreducible: bool,
    /// `(weight, generalized multiplicity)`, sorted.
    pub weights: Vec<((F, F), usize)>,
    pub module: HModule<F>,
}

impl<F: Field> FactorInfo<F> {
    fn new(module: HModule<F>, label: String) -> Result<Self> {
        let wd = weight_decomposition(&module)?;
        Ok(FactorInfo {
            label,
            dim: module.dim(),
            calibrated: wd.is_calibrated(),
            irreducible: burnside_irreducible(&module).0,
            weights: wd.multiset(),
            module,
        })
    }
}

/// Composition factors of one principal series with their certificate.
#[derive(Clone, Debug)]
pub struct FactorReport<F: Field> {
    pub character: String,
    pub chi: Character<F>,
    pub pchi: Vec<PositiveCoroot>,
    pub factors: Vec<FactorInfo<F>>,
    /// Traces of `M(χ)` on the certifying word set.
    pub trace_vector: Vec<F>,
    /// Brauer–Nesbitt equality between `M(χ)` and the sum of the factors.
    pub certified: bool,
}

impl<F: Field> FactorReport<F> {
    pub fn pchi_labels(&self) -> Vec<&'static str> {
        self.pchi.iter().map(|c| c.label()).collect()
    }

    /// `(dim, calibrated)` per factor, sorted.
    pub fn shape(&self) -> Vec<(usize, bool)> {
        let mut s: Vec<(usize, bool)> =
            self.factors.iter().map(|f| (f.dim, f.calibrated)).collect();
        s.sort();
        s
    }
}

/// Traces of `m` on words spanning the image on `m` and all `parts`, and
/// whether they equal the summed traces of `parts`.
fn certify<F: Field>(m: &HModule<F>, parts: &[&HModule<F>]) -> (bool, Vec<F>) {
    let mut all = vec![m];
    all.extend_from_slice(parts);
    let ws = bernstein_words(&all);
    let lhs = trace_vector(m, &ws);
    let rhs: Vec<Vec<F>> = parts.iter().map(|p| trace_vector(p, &ws)).collect();
    let dims: usize = parts.iter().map(|p| p.dim()).sum();
    let ok = ws.closed && dims == m.dim() && sum_traces(&rhs).is_some_and(|r| r == lhs);
    (ok, lhs)
}

/// Decomposes `M(χ)`, labels its factors against `candidates` and
/// certifies the result.
pub fn analyze<F: Field>(
    name: &str,
    chi: &Character<F>,
    candidates: &[HModule<F>],
) -> Result<FactorReport<F>> {
    decompose(name, chi, candidates, true)
}

fn decompose<F: Field>(
    name: &str,
    chi: &Character<F>,
    candidates: &[HModule<F>],
    with_certificate: bool,
) -> Result<FactorReport<F>> {
    let m = principal_series(chi)?;
    let mut factors = Vec::new();
    for f in composition_factors(&m)? {
        let label = identify_factor(&f, candidates)?;
        factors.push(FactorInfo::new(f, label)?);
    }
    let parts: Vec<&HModule<F>> = factors.iter().map(|f| &f.module).collect();
    let (certified, trace_vector) = if with_certificate {
        certify(&m, &parts)
    } else {
        (false, Vec::new())
    };
    Ok(FactorReport {
        character: name.to_string(),
        chi: chi.clone(),
        pchi: kato(chi).pchi,
        factors,
        trace_vector,
        certified,
    })
}

/// A report row with the differences from the printed table.
#[derive(Clone, Debug)]
pub struct RowReport<F: Field> {
    pub report: FactorReport<F>,
    pub expected: Option<ExpectedRow>,
    pub mismatches: Vec<String>,
}

impl<F: Field> RowReport<F> {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

fn compare<F: Field>(report: &FactorReport<F>, expected: Option<&ExpectedRow>) -> Vec<String> {
    let mut out = Vec::new();
    if !report.certified {
        out.push("trace certificate failed".to_string());
    }
    for f in &report.factors {
        if !f.irreducible {
            out.push(format!("factor {} is not irreducible", f.label));
        }
        if f.label == crate::analysis::UNLISTED {
            out.push(format!(
                "a {}-dimensional factor matches no catalog entry",
                f.dim
            ));
        }
    }
    if let Some(exp) = expected {
        let mut want: Vec<&str> = exp.pchi.to_vec();
        want.sort();
        let mut got = report.pchi_labels();
        got.sort();
        if want != got {
            out.push(format!(
                "P(chi) is {{{}}}, expected {{{}}}",
                got.join(", "),
                want.join(", ")
            ));
        }
        let mut shape = exp.factors.to_vec();
        shape.sort();
        if shape != report.shape() {
            out.push(format!(
                "factors (dim, calibrated) are {:?}, expected {:?}",
                report.shape(),
                shape
            ));
        }
    }
    out
}

/// A full run over the rows of one regime.
#[derive(Clone, Debug)]
pub struct Classification<F: Field> {
    pub title: String,
    pub regime: RegimeKind,
    pub params: Parameters<F>,
    pub v: F,
    pub u: F,
    pub rows: Vec<RowReport<F>>,
}

impl<F: Field> Classification<F> {
    pub fn passed(&self) -> bool {
        self.rows.iter().all(RowReport::passed)
    }
}

/// Rejects parameters that do not realize the intended regime.
pub fn check_regime<F: Field>(params: &Parameters<F>, kind: RegimeKind) -> Result<()> {
    let regime = validate_regime(params, kind);
    if regime.accepted() {
        Ok(())
    } else {
        Err(Error::InvalidParameters(format!(
            "{params} does not realize regime {kind}: {}",
            regime.violations.join("; ")
        )))
    }
}

/// Base-regime parameters whose transport gives `params`.
pub fn base_params<F: Field>(params: &Parameters<F>, kind: RegimeKind) -> Result<Parameters<F>> {
    match kind.transport() {
        None => Ok(params.clone()),
        Some(t) => Parameters::new(t.unmap_p(params.p()), params.q().clone()),
    }
}

/// Carries a base-regime module to the transformed parameters.
pub fn transport_module<F: Field>(
    m: &HModule<F>,
    t: Transport,
    params: &Parameters<F>,
) -> Result<HModule<F>> {
    let moved = if t.twists() {
        let tw = twist_t2(m)?;
        let label = format!("twist({})", m.label());
        reparametrize(&tw, params)?.with_label(label)
    } else {
        reparametrize(m, params)?
    };
    Ok(moved)
}

/// Carries a one-dimensional subalgebra representation along with
/// [`transport_module`].
pub fn transport_rep<F: Field>(
    rho: &OneDimRep<F>,
    t: Transport,
    params: &Parameters<F>,
) -> Result<OneDimRep<F>> {
    let flip = t.twists() && rho.subalgebra() == Simple::S2;
    let value = if flip {
        -rho.t().clone()
    } else {
        rho.t().clone()
    };
    OneDimRep::new(
        rho.subalgebra(),
        rho.x1().clone(),
        rho.x2().clone(),
        value,
        params,
    )
}

fn transport_report<F: Field>(
    r: &FactorReport<F>,
    t: Transport,
    params: &Parameters<F>,
) -> Result<FactorReport<F>> {
    let (x1, x2) = r.chi.values();
    let chi = Character::new(x1, x2, params)?;
    let mut factors = Vec::new();
    for f in &r.factors {
        let m = transport_module(&f.module, t, params)?;
        let label = if t.twists() {
            format!("twist({})", f.label)
        } else {
            f.label.clone()
        };
        factors.push(FactorInfo::new(m, label)?);
    }
    // Certify against the principal series built directly at the new
    // parameters, not against a transported one.
    let m = principal_series(&chi)?;
    let parts: Vec<&HModule<F>> = factors.iter().map(|f| &f.module).collect();
    let (certified, trace_vector) = certify(&m, &parts);
    Ok(FactorReport {
        character: r.character.clone(),
        pchi: kato(&chi).pchi,
        chi,
        factors,
        trace_vector,
        certified,
    })
}

/// Reproduces the table of `kind` at `params` with family parameters `v, u`.
/// Transformed regimes are the transports of their base regime.
pub fn classify<F: Field>(
    kind: RegimeKind,
    params: &Parameters<F>,
    v: &F,
    u: &F,
) -> Result<Classification<F>> {
    check_regime(params, kind)?;
    let base = base_params(params, kind)?;
    let catalog = Catalog::new(&base, kind.base(), v.clone(), u.clone())?;
    let candidates = catalog.irreducibles()?;
    let table = expected_table(kind.base());
    let rows: Vec<Result<RowReport<F>>> = table
        .par_iter()
        .map(|row| {
            let chi = catalog.character(row.character)?;
            // transported rows are certified after transport
            let mut report =
                decompose(row.character, &chi, &candidates, kind.transport().is_none())?;
            if let Some(t) = kind.transport() {
                report = transport_report(&report, t, params)?;
            }
            let mismatches = compare(&report, Some(row));
            Ok(RowReport {
                report,
                expected: Some(row.clone()),
                mismatches,
            })
        })
        .collect();
    Ok(Classification {
        title: format!("classification, regime {kind}"),
        regime: kind,
        params: params.clone(),
        v: v.clone(),
        u: u.clone(),
        rows: rows.into_iter().collect::<Result<_>>()?,
    })
}

/// At `p = q`: the principal series of `χ_d(5)` and the negated characters
/// missing from the earlier equal-parameter list.
pub fn ram_correction<F: Field>(params: &Parameters<F>, v: &F, u: &F) -> Result<Classification<F>> {
    let kind = RegimeKind::Base(BaseRegime::PEqQ);
    check_regime(params, kind)?;
    let catalog = Catalog::new(params, BaseRegime::PEqQ, v.clone(), u.clone())?;
    let candidates = catalog.irreducibles()?;
    let table = expected_table(BaseRegime::PEqQ);
    let mut names = vec!["chi_d5"];
    names.extend(RAM_OMITTED_NEGATIONS);
    let rows: Vec<Result<RowReport<F>>> = names
        .par_iter()
        .map(|name| {
            let chi = catalog.character(name)?;
            // M(-χ) has the shape of M(χ): negating X preserves P(χ),
            // dimensions and calibration.
            let positive = name.trim_start_matches('-');
            let expected = table.iter().find(|r| r.character == positive).cloned();
            let report = analyze(name, &chi, &candidates)?;
            let mismatches = compare(&report, expected.as_ref());
            Ok(RowReport {
                report,
                expected,
                mismatches,
            })
        })
        .collect();
    Ok(Classification {
        title: "correction of the equal-parameter list".to_string(),
        regime: kind,
        params: params.clone(),
        v: v.clone(),
        u: u.clone(),
        rows: rows.into_iter().collect::<Result<_>>()?,
    })
}

/// What the classification asserts about a catalog module.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Claim {
    /// Irreducible, with the given calibration.
    Irreducible { calibrated: bool },
    /// Reducible; the composition factors are the listed one-dimensional
    /// representations when `into_one_dim` is set.
    Reducible { into_one_dim: bool },
    /// Irreducible and isomorphic to another entry.
    IsomorphicTo { label: String, calibrated: bool },
}

#[derive(Clone, Debug)]
pub struct EntryCheck {
    pub label: String,
    pub dim: usize,
    pub relations: bool,
    pub failures: Vec<String>,
    pub irreducible: bool,
    pub envelope_dim: usize,
    pub calibrated: Option<bool>,
    pub claim: Claim,
    pub factor_labels: Vec<String>,
    pub ok: bool,
}

/// The two halves of `M(χ)` when `χ(X^{αᵢ∨}) = qᵢ²`.
#[derive(Clone, Debug)]
pub struct SesCheck {
    pub character: String,
    pub subalgebra: u8,
    pub surjection: bool,
    pub injection: bool,
    pub dims: (usize, usize),
    pub ok: bool,
}

#[derive(Clone, Debug)]
pub struct CatalogReport<F: Field> {
    pub regime: RegimeKind,
    pub params: Parameters<F>,
    pub entries: Vec<EntryCheck>,
    pub ses: Vec<SesCheck>,
}

impl<F: Field> CatalogReport<F> {
    pub fn passed(&self) -> bool {
        self.entries.iter().all(|e| e.ok) && self.ses.iter().all(|s| s.ok)
    }
}

fn claims<F: Field>(catalog: &Catalog<F>) -> Vec<(String, Claim)> {
    let regime = catalog.regime();
    let irreducible: Vec<String> = catalog.irreducible_labels();
    let mut out = Vec::new();
    for label in catalog.labels() {
        if label.starts_with("rho_") {
            continue;
        }
        let claim = if label == "Ind(rho_1^d5)/printed" {
            Claim::IsomorphicTo {
                label: "Ind(rho_1^d5)".to_string(),
                calibrated: false,
            }
        } else if irreducible.contains(&label) {
            let calibrated = !(label.contains("^d")
                || (label.starts_with("U_b^") || label.starts_with("U_-b^"))
                    && regime != BaseRegime::Generic);
            Claim::Irreducible { calibrated }
        } else {
            let into_one_dim = label.starts_with("U_c^");
            Claim::Reducible { into_one_dim }
        };
        out.push((label, claim));
    }
    out
}

fn check_entry<F: Field>(
    label: &str,
    built: Result<HModule<F>>,
    claim: Claim,
    other: Option<HModule<F>>,
    candidates: &[HModule<F>],
) -> Result<EntryCheck> {
    let m = match built {
        Ok(m) => m,
        Err(Error::RelationsFailed(msg)) => {
            return Ok(EntryCheck {
                label: label.to_string(),
                dim: 0,
                relations: false,
                failures: vec![msg],
                irreducible: false,
                envelope_dim: 0,
                calibrated: None,
                claim,
                factor_labels: Vec::new(),
                ok: false,
            })
        }
        Err(e) => return Err(e),
    };
    let (irreducible, envelope_dim) = burnside_irreducible(&m);
    let calibrated = weight_decomposition(&m)?.is_calibrated();
    let mut factor_labels = Vec::new();
    let ok = match &claim {
        Claim::Irreducible { calibrated: c } => irreducible && calibrated == *c,
        Claim::IsomorphicTo { calibrated: c, .. } => {
            let other = other.ok_or_else(|| Error::UnknownLabel("comparison entry".into()))?;
            let iso = find_injection(&m, &other)?.is_some() && m.dim() == other.dim();
            irreducible && calibrated == *c && iso
        }
        Claim::Reducible { into_one_dim } => {
            if *into_one_dim {
                for f in composition_factors(&m)? {
                    factor_labels.push(identify_factor(&f, candidates)?);
                }
                !irreducible && factor_labels.iter().all(|l| l.contains("onedim_"))
            } else {
                !irreducible
            }
        }
    };
    Ok(EntryCheck {
        label: label.to_string(),
        dim: m.dim(),
        relations: true,
        failures: Vec::new(),
        irreducible,
        envelope_dim,
        calibrated: Some(calibrated),
        claim,
        factor_labels,
        ok,
    })
}

/// Perturbs `T₁[0][0]` by one, as a negative control.
fn corrupt<F: Field>(m: &HModule<F>) -> Result<HModule<F>> {
    let mut t1 = m.t1().clone();
    t1.set(0, 0, t1.get(0, 0).clone() + &F::one());
    HModule::new(
        m.label(),
        m.params(),
        t1,
        m.t2().clone(),
        m.x1().clone(),
        m.x2().clone(),
    )
}

fn ses_checks<F: Field>(catalog: &Catalog<F>, params: &Parameters<F>) -> Result<Vec<SesCheck>> {
    let rows: Vec<&str> = expected_table(catalog.regime())
        .iter()
        .map(|r| r.character)
        .collect();
    let mut jobs: Vec<(String, Character<F>, Simple)> = Vec::new();
    for (name, chi) in catalog.characters()? {
        if !rows.contains(&name.trim_start_matches('-')) {
            continue;
        }
        let (x1, x2) = chi.values();
        let chi = Character::new(x1, x2, params)?;
        for i in [Simple::S1, Simple::S2] {
            if chi.eval(i.coroot()) == params.of(i).square() {
                jobs.push((name.clone(), chi.clone(), i));
            }
        }
    }
    jobs.par_iter()
        .map(|(name, chi, i)| {
            let qi = params.of(*i).clone();
            let (x1, x2) = chi.values();
            let rho1 = OneDimRep::new(*i, x1, x2, qi.clone(), params)?;
            let (y1, y2) = chi.act(i.elem()).values();
            let rho2 = OneDimRep::new(*i, y1, y2, -qi.checked_inv().expect("nonzero"), params)?;
            let m = principal_series(chi)?;
            let ind1 = induce(&rho1)?;
            let ind2 = induce(&rho2)?;
            let surjection = find_surjection(&m, &ind1)?.is_some();
            let injection = find_injection(&ind2, &m)?.is_some();
            let dims = (ind1.dim(), ind2.dim());
            Ok(SesCheck {
                character: name.clone(),
                subalgebra: i.index(),
                surjection,
                injection,
                dims,
                ok: surjection && injection && dims.0 + dims.1 == m.dim(),
            })
        })
        .collect()
}

/// Relations, irreducibility and calibration of every catalog entry, and
/// the short exact sequences of the decomposition lemma. `corrupt_label`
/// perturbs one entry as a negative control.
pub fn verify_catalog<F: Field>(
    kind: RegimeKind,
    params: &Parameters<F>,
    v: &F,
    u: &F,
    corrupt_label: Option<&str>,
) -> Result<CatalogReport<F>> {
    check_regime(params, kind)?;
    let base = base_params(params, kind)?;
    let catalog = Catalog::new(&base, kind.base(), v.clone(), u.clone())?;
    if let Some(l) = corrupt_label {
        if !catalog.labels().iter().any(|x| x == l) {
            return Err(Error::UnknownLabel(l.to_string()));
        }
    }
    let move_to = |m: HModule<F>| -> Result<HModule<F>> {
        match kind.transport() {
            None => Ok(m),
            Some(t) => transport_module(&m, t, params),
        }
    };
    let candidates: Vec<HModule<F>> = catalog
        .irreducibles()?
        .into_iter()
        .map(&move_to)
        .collect::<Result<_>>()?;
    let mut entries = Vec::new();
    for label in catalog.labels().iter().filter(|l| l.starts_with("rho_")) {
        // one-dimensional subalgebra representations are checked for
        // compatibility when built
        let built = catalog.build(label);
        entries.push(EntryCheck {
            label: label.clone(),
            dim: 1,
            relations: built.is_ok(),
            failures: built
                .as_ref()
                .err()
                .map(|e| e.to_string())
                .into_iter()
                .collect(),
            irreducible: true,
            envelope_dim: 1,
            calibrated: Some(true),
            claim: Claim::Irreducible { calibrated: true },
            factor_labels: Vec::new(),
            ok: built.is_ok(),
        });
    }
    let module_checks: Vec<Result<EntryCheck>> = claims(&catalog)
        .into_par_iter()
        .map(|(label, claim)| {
            let mut built = catalog.module(&label).and_then(&move_to);
            if corrupt_label == Some(label.as_str()) {
                built = built.and_then(|m| corrupt(&m));
            }
            let other = match &claim {
                Claim::IsomorphicTo { label: other, .. } => {
                    Some(catalog.module(other).and_then(&move_to)?)
                }
                _ => None,
            };
            check_entry(&label, built, claim, other, &candidates)
        })
        .collect();
    for c in module_checks {
        entries.push(c?);
    }
    Ok(CatalogReport {
        regime: kind,
        params: params.clone(),
        entries,
        ses: ses_checks(&catalog, params)?,
    })
}

/// Weight spaces of `M(χ)` for a named character.
pub fn character_weights<F: Field>(
    kind: RegimeKind,
    params: &Parameters<F>,
    v: &F,
    u: &F,
    name: &str,
) -> Result<(Character<F>, WeightDecomposition<F>)> {
    check_regime(params, kind)?;
    let base = base_params(params, kind)?;
    let catalog = Catalog::new(&base, kind.base(), v.clone(), u.clone())?;
    let (x1, x2) = catalog.character(name)?.values();
    let chi = Character::new(x1, x2, params)?;
    let wd = weight_decomposition(&principal_series(&chi)?)?;
    Ok((chi, wd))
}
