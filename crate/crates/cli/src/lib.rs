//! Report builders behind the `kmk` binary.
//!
//! Every command produces a report that renders to JSON or TSV. Reports are
//! assembled in (g, k) order and contain only exact values or values computed
//! from a fixed seed, so the same arguments always give the same bytes.

use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt::Write as _;

use kmk_moments::algebra::rational::format_rational;
use kmk_moments::algebra::{expand_in_x, fine_structure_form, FineStructureForm, RationalFn};
use kmk_moments::ansatz::{check_chain_shape, operator_chain, y0_coefficient};
use kmk_moments::oracles::rooks::moment_polynomial_by_markings;
use kmk_moments::oracles::{moment_polynomial, word_moment, MomentPolynomial};
use kmk_moments::sampler::mc_moment;

pub use kmk_moments::sampler::DEFAULT_SEED;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Tsv,
}

pub trait Report {
    fn to_json(&self) -> String;
    fn to_tsv(&self) -> String;

    /// False when a check failed; the binary then exits with status 1.
    fn passed(&self) -> bool {
        true
    }

    fn render(&self, format: Format) -> String {
        match format {
            Format::Json => self.to_json(),
            Format::Tsv => self.to_tsv(),
        }
    }
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

/// Coefficients `theta_g(k)` for g = 1..=4.
pub const REFERENCE_THETA: [&[(u32, i64)]; 4] = [
    &[(2, 1)],
    &[(3, 1), (4, 14), (5, 15)],
    &[(4, 1), (5, 64), (6, 565), (7, 1122), (8, 630)],
    &[
        (5, 1),
        (6, 222),
        (7, 5820),
        (8, 42500),
        (9, 110670),
        (10, 118740),
        (11, 45045),
    ],
];

/// `Phi_0 ..= Phi_g_max` from one run of the operator chain.
pub fn phis(g_max: u32) -> Vec<RationalFn> {
    let mut out = vec![RationalFn::c()];
    out.extend(operator_chain(g_max).iter().skip(1).map(y0_coefficient));
    out
}

#[derive(Serialize)]
struct ClosedForm {
    num: String,
    den: String,
}

impl From<&RationalFn> for ClosedForm {
    fn from(f: &RationalFn) -> Self {
        ClosedForm {
            num: f.num().to_string(),
            den: f.den().to_string(),
        }
    }
}

#[derive(Serialize)]
struct ThetaRow {
    #[serde(flatten)]
    form: FineStructureForm,
    phi: ClosedForm,
}

pub struct ThetaReport {
    rows: Vec<ThetaRow>,
}

pub fn run_theta(g_max: u32) -> anyhow::Result<ThetaReport> {
    anyhow::ensure!(g_max >= 1, "g_max must be at least 1");
    let phis = phis(g_max);
    let rows = (1..=g_max)
        .map(|g| {
            let f = &phis[g as usize];
            Ok(ThetaRow {
                form: fine_structure_form(f, g)?,
                phi: f.into(),
            })
        })
        .collect::<anyhow::Result<_>>()?;
    Ok(ThetaReport { rows })
}

impl ThetaReport {
    pub fn forms(&self) -> impl Iterator<Item = &FineStructureForm> {
        self.rows.iter().map(|r| &r.form)
    }
}

impl Report for ThetaReport {
    fn to_json(&self) -> String {
        json(&self.rows)
    }

    fn to_tsv(&self) -> String {
        let mut s = String::from("g\tk\ttheta\n");
        for form in self.forms() {
            for (k, v) in form.theta() {
                writeln!(s, "{}\t{k}\t{}", form.g(), format_rational(v)).unwrap();
            }
        }
        s
    }
}

#[derive(Serialize)]
struct PhiRow {
    g: u32,
    #[serde(flatten)]
    phi: ClosedForm,
    /// `[x^{2k}] Phi_g` for k = 0..=k_max.
    series: BTreeMap<u32, String>,
}

pub struct PhiReport {
    rows: Vec<PhiRow>,
}

pub fn run_phi(g_max: u32, k_max: u32) -> anyhow::Result<PhiReport> {
    anyhow::ensure!(
        g_max >= 1 && k_max >= 1,
        "g_max and k_max must be at least 1"
    );
    let rows = phis(g_max)
        .iter()
        .enumerate()
        .map(|(g, f)| {
            let s = expand_in_x(f, 2 * k_max as usize)?;
            Ok(PhiRow {
                g: g as u32,
                phi: f.into(),
                series: (0..=k_max)
                    .map(|k| (k, format_rational(s.coeff(2 * k as usize))))
                    .collect(),
            })
        })
        .collect::<anyhow::Result<_>>()?;
    Ok(PhiReport { rows })
}

impl Report for PhiReport {
    fn to_json(&self) -> String {
        json(&self.rows)
    }

    fn to_tsv(&self) -> String {
        let mut s = String::from("g\tk\tcoefficient\n");
        for r in &self.rows {
            for (k, v) in &r.series {
                writeln!(s, "{}\t{k}\t{v}", r.g).unwrap();
            }
        }
        s
    }
}

pub struct MomentsReport {
    rows: Vec<MomentPolynomial>,
}

pub fn run_moments(k_max: u32) -> anyhow::Result<MomentsReport> {
    anyhow::ensure!(k_max >= 1, "k_max must be at least 1");
    Ok(MomentsReport {
        rows: (1..=k_max).map(moment_polynomial).collect(),
    })
}

impl MomentsReport {
    pub fn rows(&self) -> &[MomentPolynomial] {
        &self.rows
    }
}

impl Report for MomentsReport {
    fn to_json(&self) -> String {
        json(&self.rows)
    }

    fn to_tsv(&self) -> String {
        let mut cells: Vec<(u32, u32, u64)> = self
            .rows
            .iter()
            .flat_map(|m| m.counts.iter().map(move |(&g, &v)| (g, m.k, v)))
            .collect();
        cells.sort_unstable();
        let mut s = String::from("g\tk\tcount\n");
        for (g, k, v) in cells {
            writeln!(s, "{g}\t{k}\t{v}").unwrap();
        }
        s
    }
}

#[derive(Serialize)]
pub struct Check {
    pub name: String,
    pub g: Option<u32>,
    pub k: Option<u32>,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
}

#[derive(Serialize)]
pub struct VerifyReport {
    pub pass: bool,
    pub checks: Vec<Check>,
}

fn check(name: &str, g: Option<u32>, k: Option<u32>, expected: String, actual: String) -> Check {
    Check {
        name: name.into(),
        g,
        k,
        pass: expected == actual,
        expected,
        actual,
    }
}

fn theta_string(form: &FineStructureForm) -> String {
    let parts: Vec<String> = form
        .theta()
        .iter()
        .map(|(k, v)| format!("{k}:{}", format_rational(v)))
        .collect();
    format!("{{{}}}", parts.join(", "))
}

pub fn run_verify(g_max: u32, k_max: u32) -> anyhow::Result<VerifyReport> {
    anyhow::ensure!(
        g_max >= 1 && k_max >= 1,
        "g_max and k_max must be at least 1"
    );
    let mut checks = Vec::new();

    let chain = operator_chain(g_max);
    let mut phis = vec![RationalFn::c()];
    for (r, s) in chain.iter().enumerate().skip(1) {
        let g = r as u32;
        let violations = check_chain_shape(g, s);
        let actual = violations
            .first()
            .map_or("ok".to_string(), ToString::to_string);
        checks.push(check("ansatz shape", Some(g), None, "ok".into(), actual));

        let f = y0_coefficient(s);
        let form = fine_structure_form(&f, g)?;
        let range = FineStructureForm::theorem_range(g);
        let support: Vec<u32> = form.theta().keys().copied().collect();
        checks.push(check(
            "theta support",
            Some(g),
            None,
            format!("{:?}", range.collect::<Vec<_>>()),
            format!("{support:?}"),
        ));
        if let Some(reference) = REFERENCE_THETA.get(r - 1) {
            checks.push(check(
                "theta table",
                Some(g),
                None,
                theta_string(&FineStructureForm::from_ints(g, reference)),
                theta_string(&form),
            ));
        }
        phis.push(f);
    }

    let series = phis
        .iter()
        .map(|f| expand_in_x(f, 2 * k_max as usize))
        .collect::<Result<Vec<_>, _>>()?;
    for k in 1..=k_max {
        let rooks = moment_polynomial(k);
        let words = word_moment(k);
        let markings = moment_polynomial_by_markings(k);
        checks.push(check(
            "words = rooks",
            None,
            Some(k),
            rooks.to_string(),
            words.to_string(),
        ));
        checks.push(check(
            "markings = rooks",
            None,
            Some(k),
            rooks.to_string(),
            markings.to_string(),
        ));
        for (g, s) in series.iter().enumerate() {
            let g = g as u32;
            checks.push(check(
                "[x^2k] Phi_g = rook count",
                Some(g),
                Some(k),
                rooks.get(g).to_string(),
                format_rational(s.coeff(2 * k as usize)),
            ));
        }
    }

    checks.sort_by_key(|c| (c.g, c.k));
    Ok(VerifyReport {
        pass: checks.iter().all(|c| c.pass),
        checks,
    })
}

impl Report for VerifyReport {
    fn to_json(&self) -> String {
        json(self)
    }

    fn to_tsv(&self) -> String {
        let mut s = String::from("g\tk\tcheck\texpected\tactual\tpass\n");
        let opt = |v: Option<u32>| v.map_or("-".to_string(), |v| v.to_string());
        for c in &self.checks {
            writeln!(
                s,
                "{}\t{}\t{}\t{}\t{}\t{}",
                opt(c.g),
                opt(c.k),
                c.name,
                c.expected,
                c.actual,
                c.pass
            )
            .unwrap();
        }
        s
    }

    fn passed(&self) -> bool {
        self.pass
    }
}

#[derive(Serialize)]
pub struct SampleReport {
    pub n: u64,
    pub k: u32,
    pub trials: u64,
    pub seed: u64,
    pub estimate: f64,
    pub stderr: f64,
    pub predicted: String,
    pub z: f64,
}

/// Agreement threshold for `|z|`.
pub const Z_LIMIT: f64 = 4.0;

pub fn run_sample(n: u64, k: u32, trials: u64, seed: u64) -> anyhow::Result<SampleReport> {
    anyhow::ensure!(
        n >= 1 && k >= 1 && trials >= 1,
        "n, k and trials must be at least 1"
    );
    let est = mc_moment(n, k, trials, seed)?;
    let predicted = moment_polynomial(k).eval(n);
    let p = num_traits::ToPrimitive::to_f64(&predicted).expect("finite");
    let z = if est.stderr > 0.0 {
        (est.estimate - p) / est.stderr
    } else if est.estimate == p {
        0.0
    } else {
        f64::INFINITY.copysign(est.estimate - p)
    };
    Ok(SampleReport {
        n,
        k,
        trials,
        seed,
        estimate: est.estimate,
        stderr: est.stderr,
        predicted: format_rational(&predicted),
        z,
    })
}

impl Report for SampleReport {
    fn to_json(&self) -> String {
        json(self)
    }

    fn to_tsv(&self) -> String {
        format!(
            "n\tk\ttrials\tseed\testimate\tstderr\tpredicted\tz\n{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\n",
            self.n,
            self.k,
            self.trials,
            self.seed,
            self.estimate,
            self.stderr,
            self.predicted,
            self.z
        )
    }

    fn passed(&self) -> bool {
        self.z.abs() < Z_LIMIT
    }
}
