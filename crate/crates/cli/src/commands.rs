use std::fmt::Write as _;

use fusionlab_core::affinechar::{
    demazure_char, fusion_to_demazure, AffineWeight, Family, WeylWord,
};
use fusionlab_core::kostka::{
    kostka_polynomial, mixture_ansatz, orbit_size, supernomial_general, supernomial_star,
    type_a_fusion_char, Composition, Partition,
};
use fusionlab_core::stats::{
    asymptotic_params, closed_forms, clt_scan, concentration_ratio, conditional_mixing,
    demazure_expectation, dist_from_poly, galois_moments, lclt_scan, mixing_distribution,
    mixture_identity, restricted_mixture_identity, restricted_occupancy_check, MixState,
    RowOutcome, ScanFamily, ScanTable, ShapePattern,
};
use fusionlab_core::supernomial::{
    basic_specialization, central_string, fusion_char, supernomial_char, supernomial_coeff, ttilde,
    ttilde_all, AdmissionVector,
};
use fusionlab_core::{Error, RatPoly, Rational};
use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};
use serde_json::{json, Value};

use crate::args::{Command, FamilyArg, ScanArgs, StatsCommand, VerifyCommand, WordArg};
use crate::format::{
    matrix_json, qpoly_json, rational_json, rationals_json, ratpoly_json, row, scalar, Report,
};
use crate::words::parse_word;

pub enum Failure {
    Usage(String),
    Core(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl Failure {
    pub fn exit_code(&self) -> i32 {
        match self {
            Failure::Usage(_) | Failure::Core(Error::InvalidArgument(_)) => 2,
            Failure::Core(Error::ResourceCap { .. }) => 3,
            Failure::Core(Error::Verification(_)) => 1,
        }
    }

    pub fn message(&self) -> String {
        match self {
            Failure::Usage(msg) => msg.clone(),
            Failure::Core(e) => e.to_string(),
        }
    }
}

type Outcome = Result<Report, Failure>;

fn admission(l: &[i64]) -> Result<AdmissionVector, Failure> {
    Ok(AdmissionVector::new(l.to_vec())?)
}

fn weight(pair: (i64, i64)) -> Result<AffineWeight, Failure> {
    Ok(AffineWeight::new(pair.0, pair.1)?)
}

fn partition(parts: &[usize]) -> Result<Partition, Failure> {
    Ok(Partition::new(parts.to_vec())?)
}

fn word(arg: &WordArg) -> Result<WeylWord, Failure> {
    match (&arg.word, &arg.word_letters) {
        (Some(text), _) => parse_word(text).map_err(Failure::Usage),
        (None, Some(indices)) => Ok(WeylWord::from_indices(indices)?),
        (None, None) => Err(Failure::Usage("give --word or --word-letters".into())),
    }
}

fn strs<T: ToString>(v: &[T]) -> String {
    v.iter().map(T::to_string).collect::<Vec<_>>().join(",")
}

pub fn run(command: &Command) -> Outcome {
    match command {
        Command::Supernomial { l, a2 } => {
            let l = admission(&l.l)?;
            match a2 {
                Some(a2) => Ok(Report::poly(&supernomial_coeff(&l, *a2)?)),
                None => Ok(Report::char(&supernomial_char(&l)?)),
            }
        }
        Command::Ttilde { l, a } => {
            let l = admission(&l.l)?;
            match a {
                Some(a) => Ok(Report::poly(&ttilde(&l, *a)?)),
                None => Ok(all_strings(&ttilde_all(&l)?)),
            }
        }
        Command::FusionChar { l } => Ok(Report::char(&fusion_char(&admission(&l.l)?)?)),
        Command::BasicSpec { l } => Ok(Report::poly(&basic_specialization(&admission(&l.l)?)?)),
        Command::CentralString { l } => central(&admission(&l.l)?),
        Command::Demazure { word: w } => demazure(weight(w.weight)?, &word(w)?),
        Command::Verify { check } => match check {
            VerifyCommand::Prop { max_level, max_n } => verify_prop(*max_level, *max_n),
            VerifyCommand::Mixture { l } => verify_mixture(&admission(&l.l)?),
        },
        Command::Stats { stat } => stats(stat),
        Command::CltScan(args) => scan(args, false),
        Command::LcltScan(args) => scan(args, true),
        Command::Kostka { eta, mu } => Ok(Report::poly(&kostka_polynomial(
            &partition(eta)?,
            &partition(mu)?,
        )?)),
        Command::SupernomialGeneral { xi, mu, star } => {
            let (xi, mu) = (Composition::new(xi.clone()), partition(mu)?);
            let p = if *star {
                supernomial_star(&xi, &mu)?
            } else {
                supernomial_general(&xi, &mu)?
            };
            Ok(Report::poly(&p))
        }
        Command::TypeAChar { mu, rank } => type_a(&partition(mu)?, *rank),
        Command::MixtureAnsatz { mu, xi } => ansatz(&partition(mu)?, &Composition::new(xi.clone())),
    }
}

fn all_strings(strings: &[fusionlab_core::QPoly]) -> Report {
    let json = Value::Array(
        strings
            .iter()
            .enumerate()
            .map(|(a, p)| json!({"a": a, "poly": qpoly_json(p)}))
            .collect(),
    );
    let mut rows = Vec::new();
    let mut text = String::new();
    for (a, p) in strings.iter().enumerate() {
        let _ = writeln!(text, "a={a}: {p}");
        rows.extend(
            p.terms()
                .map(|(e, c)| vec![a.to_string(), e.to_string(), c.to_string()]),
        );
    }
    let mut r = Report::table(
        json,
        row(["a", "exponent", "coefficient"]),
        rows,
        String::new(),
    );
    r.text = text;
    r
}

fn central(l: &AdmissionVector) -> Outcome {
    let cs = central_string(l)?;
    let mut entries = Vec::new();
    let mut rows = Vec::new();
    let mut text = format!(
        "s = {}{}\ndegree bound = {}\n",
        cs.s,
        if cs.odd {
            " (odd l_m: both neighbouring strings)"
        } else {
            ""
        },
        cs.degree_bound
    );
    let mut passed = true;
    for e in &cs.strings {
        let within = e.within_bound(&cs.degree_bound);
        passed &= within;
        entries.push(json!({
            "a": e.a,
            "shift": e.shift,
            "raw": qpoly_json(&e.raw),
            "normalized": qpoly_json(&e.normalized),
            "literal": e.literal.as_ref().map(qpoly_json),
            "literal_is_polynomial": e.literal_is_polynomial(),
            "within_bound": within,
        }));
        rows.extend(e.normalized.terms().map(|(d, c)| {
            vec![
                e.a.to_string(),
                e.shift.to_string(),
                d.to_string(),
                c.to_string(),
            ]
        }));
        let _ = writeln!(text, "a={}: q^{} * ({})", e.a, e.shift, e.normalized);
        if e.literal_is_polynomial() == Some(false) {
            let _ = writeln!(
                text,
                "  q^(-l1 l_m / 2) normalization leaves negative exponents"
            );
        }
    }
    let json = json!({
        "s": cs.s,
        "odd": cs.odd,
        "degree_bound": rational_json(&cs.degree_bound),
        "strings": entries,
    });
    let mut r = Report::table(
        json,
        row(["a", "shift", "exponent", "coefficient"]),
        rows,
        String::new(),
    );
    r.text = text;
    r.passed = passed;
    Ok(r)
}

fn demazure(lambda: AffineWeight, w: &WeylWord) -> Outcome {
    let direct = demazure_char(w, lambda)?;
    let mut r = Report::char(&direct.poly);
    if !w.is_empty() && lambda.level() > 0 {
        let via = fusion_to_demazure(w, lambda)?;
        if via != direct {
            r.passed = false;
            r = r.note(format!(
                "{w} at {lambda}: transformed fusion character differs"
            ));
        }
    }
    Ok(r)
}

const FAMILIES: [Family; 4] = [
    Family::S1S0NS1,
    Family::S0S1N,
    Family::S1S0N,
    Family::S0S1S0N,
];

fn verify_prop(max_level: i64, max_n: i64) -> Outcome {
    if max_level < 0 || max_n < 0 {
        return Err(Failure::Usage(
            "--max-level and --max-N must be non-negative".into(),
        ));
    }
    let mut rows = Vec::new();
    let mut cases = Vec::new();
    let mut failures = 0;
    for level in 1..=max_level {
        for m in 0..=level {
            let lambda = AffineWeight::new(m, level - m)?;
            for f in FAMILIES {
                for k in 0..=max_n {
                    let Ok(w) = WeylWord::family(f, k) else {
                        continue;
                    };
                    let direct = demazure_char(&w, lambda)?;
                    let pass = fusion_to_demazure(&w, lambda)? == direct;
                    failures += usize::from(!pass);
                    rows.push(vec![
                        m.to_string(),
                        (level - m).to_string(),
                        w.to_string(),
                        direct.poly.len().to_string(),
                        pass.to_string(),
                    ]);
                    cases.push(
                        json!({"weight": [m, level - m], "word": w.to_string(), "pass": pass}),
                    );
                }
            }
        }
    }
    let total = cases.len();
    let json = json!({"cases": cases, "checked": total, "failures": failures});
    let preamble = format!("{total} cases, {failures} failures\n");
    let mut r = Report::table(
        json,
        row(["m", "n", "word", "terms", "pass"]),
        rows,
        preamble,
    );
    r.passed = failures == 0;
    Ok(r)
}

fn verify_mixture(l: &AdmissionVector) -> Outcome {
    let mut rows = Vec::new();
    let mut cases = Vec::new();
    let mut passed = true;
    let mut record = |a: Option<i64>, pass: bool, diffs: usize| {
        passed &= pass;
        let label = a.map_or("all".to_string(), |a| a.to_string());
        rows.push(vec![label.clone(), pass.to_string(), diffs.to_string()]);
        cases.push(json!({"a": a, "pass": pass, "differences": diffs}));
    };
    let r = mixture_identity(l)?;
    record(None, r.pass, r.differences.len());
    for a in 0..=l.lm() {
        let r = restricted_mixture_identity(l, a)?;
        record(Some(a), r.pass, r.differences.len());
    }
    let json = json!({"L": l.entries(), "cases": cases});
    let mut r = Report::table(json, row(["a", "pass", "differences"]), rows, String::new());
    r.passed = passed;
    Ok(r)
}

fn stats(stat: &StatsCommand) -> Outcome {
    match stat {
        StatsCommand::ClosedForms { l } => closed(&admission(&l.l)?),
        StatsCommand::Galois { m, n } => {
            let g = galois_moments(*m, *n)?;
            let exact = g.exact.as_ref();
            Ok(Report::record(vec![
                ("m", json!(g.m)),
                ("N", json!(g.n)),
                ("mean", rational_json(&g.mean)),
                ("variance", rational_json(&g.variance)),
                (
                    "exact_mean",
                    exact.map_or(Value::Null, |e| rational_json(&e.mean)),
                ),
                (
                    "exact_variance",
                    exact.map_or(Value::Null, |e| rational_json(&e.variance)),
                ),
            ]))
        }
        StatsCommand::Demazure { word: w } => {
            let lambda = weight(w.weight)?;
            let e = demazure_expectation(lambda.m, lambda.n, &word(w)?)?;
            Ok(Report::record(vec![
                ("decomposition", rational_json(&e.decomposition)),
                ("exact", rational_json(&e.exact)),
                (
                    "closed_form",
                    e.closed_form.as_ref().map_or(Value::Null, rational_json),
                ),
            ]))
        }
        StatsCommand::Concentration {
            weight: (m, n),
            n: steps,
        } => {
            let (ratio, limit) = concentration_ratio(*m, *n, *steps)?;
            let gap = (&ratio - &limit).abs();
            Ok(Report::record(vec![
                ("ratio", rational_json(&ratio)),
                ("ratio_approx", json!(approx(&ratio))),
                ("limit", rational_json(&limit)),
                ("gap_approx", json!(approx(&gap))),
            ]))
        }
        StatsCommand::Asymptotic { slope } => {
            let a = slope
                .iter()
                .map(|s| {
                    s.parse::<Rational>()
                        .map_err(|_| Failure::Usage(format!("bad rate '{s}'")))
                })
                .collect::<Result<Vec<_>, _>>()?;
            let p = asymptotic_params(&a)?;
            Ok(Report::record(vec![
                ("a", rationals_json(&p.a)),
                ("b", rationals_json(&p.b)),
                ("c", rationals_json(&p.c)),
                ("f", rationals_json(&p.f)),
                ("v", rational_json(&p.v)),
                ("sigma2", rational_json(&p.sigma2)),
                ("c_tail", rationals_json(&p.c_tail)),
                ("sigma_unrestricted", matrix_json(&p.sigma_unrestricted)),
                ("sigma_restricted", matrix_json(&p.sigma_restricted)),
                (
                    "limit_var_unrestricted",
                    rational_json(&p.limit_var_unrestricted),
                ),
                (
                    "limit_var_restricted",
                    rational_json(&p.limit_var_restricted),
                ),
            ]))
        }
        StatsCommand::Mixing { l, a } => {
            let l = admission(&l.l)?;
            let state = match a {
                Some(a) => conditional_mixing(&l, *a)?,
                None => mixing_distribution(&l)?,
            };
            Ok(mixing(&state))
        }
        StatsCommand::Occupancy { l, a } => {
            let r = restricted_occupancy_check(&admission(&l.l)?, *a)?;
            let mut report = Report::record(vec![
                ("m", json!(r.m)),
                ("N", json!(r.n)),
                ("a", json!(r.a)),
                ("mean", rationals_json(&r.mean)),
                ("cov", matrix_json(&r.cov)),
                ("sigma", matrix_json(&r.sigma)),
                ("gap", rational_json(&r.gap)),
                ("constraints_hold", json!(r.constraints_hold)),
            ]);
            report.passed = r.constraints_hold;
            Ok(report)
        }
    }
}

fn approx(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

fn closed(l: &AdmissionVector) -> Outcome {
    let cf = closed_forms(l);
    let exact = dist_from_poly(&basic_specialization(l)?)?.moments();
    let mut fields = vec![
        ("mean_J", rationals_json(&cf.mean_j)),
        ("var_J", rationals_json(&cf.var_j)),
        ("cov_J", matrix_json(&cf.cov_j)),
        ("mean_Y", rational_json(&cf.mean_y)),
        ("mean_Q", rational_json(&cf.mean_q)),
        ("mean_T", rational_json(&cf.mean_t)),
        ("mean_T_unrestricted", rational_json(&cf.mean_unr)),
        ("mean_S", rational_json(&cf.mean_s)),
        ("var_S", rational_json(&cf.var_s)),
        ("exact_mean_T", rational_json(&exact.mean)),
        ("exact_var_T", rational_json(&exact.variance)),
    ];
    let mut notes = Vec::new();
    if let Some(one) = &cf.one_component {
        fields.push((
            "one_component",
            json!({
                "mean_T": rational_json(&one.mean_t),
                "var_limit": rational_json(&one.var_limit),
                "sum_var_J_limit": rational_json(&one.sum_var_j_limit),
                "normal_approx": {
                    "central_mean_T": rational_json(&one.normal_approx.central_mean_t),
                    "mean_G": rational_json(&one.normal_approx.mean_g),
                    "var_G": rational_json(&one.normal_approx.var_g),
                    "var_M": rational_json(&one.normal_approx.var_m),
                },
            }),
        ));
        notes.push(
            "normal_approx values come from a Gaussian heuristic; only the N^2 term of \
             central_mean_T matches exact central means"
                .to_string(),
        );
    }
    if let Some(two) = &cf.two_component {
        fields.push((
            "two_component",
            json!({"k": two.k, "m": two.m, "mean_T": rational_json(&two.mean_t)}),
        ));
    }
    let mut r = Report::record(fields);
    r.passed = exact.mean == cf.mean_t && cf.mean_unr == cf.mean_t;
    if !r.passed {
        notes.push("closed-form mean differs from the exact mean".into());
    }
    r.notes = notes;
    Ok(r)
}

fn mixing(state: &MixState) -> Report {
    let (mean, cov) = state.j_moments();
    let rows: Vec<Vec<String>> = state
        .joint
        .iter()
        .map(|(j, p)| vec![strs(j), p.to_string()])
        .collect();
    let json = json!({
        "restricted_to": state.restricted_to,
        "law": state.joint.iter().map(|(j, p)| json!({"j": j, "p": rational_json(p)})).collect::<Vec<_>>(),
        "mean": rationals_json(&mean),
        "cov": matrix_json(&cov),
    });
    let preamble = format!("E(J) = ({})\n", strs(&mean));
    Report::table(json, row(["j", "probability"]), rows, preamble)
}

fn scan(args: &ScanArgs, local: bool) -> Outcome {
    let shape = ShapePattern::parse(&args.shape)?;
    let family = match args.family {
        FamilyArg::Basic => ScanFamily::Basic,
        FamilyArg::CentralString => ScanFamily::CentralString,
        FamilyArg::Galois => ScanFamily::Galois,
        FamilyArg::Demazure => {
            let pair = args
                .weight
                .ok_or_else(|| Failure::Usage("the demazure family needs --weight".into()))?;
            ScanFamily::Demazure(weight(pair)?)
        }
    };
    let table = if local {
        lclt_scan(family, &shape, &args.n)?
    } else {
        clt_scan(family, &shape, &args.n)?
    };
    let mut r = scan_report(&table);
    if local {
        r = r.note(
            "distance is sup_k |sqrt(2 pi) sigma P(k) - exp(-(k - mu)^2 / (2 sigma^2))|; \
             no threshold is asserted",
        );
    }
    Ok(r)
}

fn scan_report(t: &ScanTable) -> Report {
    let mut rows = Vec::new();
    let mut items = Vec::new();
    let mut passed = true;
    for r in &t.rows {
        let item = match &r.outcome {
            RowOutcome::Computed(v) => {
                passed &= v.mean_check != Some(false);
                json!({
                    "N": r.n,
                    "support": v.support,
                    "mean": rational_json(&v.mean),
                    "variance": rational_json(&v.variance),
                    "var_over_N3": v.var_over_n3.as_ref().map(|x| json!(approx(x))),
                    "distance": v.distance,
                    "mean_check": v.mean_check,
                    "skipped": Value::Null,
                })
            }
            RowOutcome::Skipped(why) => json!({
                "N": r.n, "support": null, "mean": null, "variance": null,
                "var_over_N3": null, "distance": null, "mean_check": null, "skipped": why,
            }),
        };
        rows.push(
            [
                "N",
                "support",
                "mean",
                "variance",
                "var_over_N3",
                "distance",
                "mean_check",
                "skipped",
            ]
            .iter()
            .map(|k| scalar(&item[*k]))
            .collect(),
        );
        items.push(item);
    }
    let statistic = match t.statistic {
        fusionlab_core::stats::ScanStatistic::Kolmogorov => "kolmogorov",
        fusionlab_core::stats::ScanStatistic::LocalGaussian => "local-gaussian",
    };
    let limit = t.limit_var_over_n3.as_ref();
    let json = json!({
        "family": t.family.to_string(),
        "shape": t.shape.to_string(),
        "statistic": statistic,
        "limit_var_over_N3": limit.map(rational_json),
        "rows": items,
    });
    let preamble = format!(
        "family {} shape {} statistic {}{}\n",
        t.family,
        t.shape,
        statistic,
        limit.map_or(String::new(), |l| format!(
            ", Var/N^3 -> {l} ~ {:.6}",
            approx(l)
        ))
    );
    let header = row([
        "N",
        "support",
        "mean",
        "variance",
        "var_over_N3",
        "distance",
        "mean_check",
        "skipped",
    ]);
    let mut r = Report::table(json, header, rows, preamble);
    r.passed = passed;
    r
}

fn type_a(mu: &Partition, rank: usize) -> Outcome {
    let t = type_a_fusion_char(mu, rank)?;
    let mut rows = Vec::new();
    let mut entries = Vec::new();
    let mut text = String::new();
    for (xi, p) in &t.strings {
        let orbit = orbit_size(xi, rank + 1);
        let _ = writeln!(text, "xi=({}) orbit {orbit}: {p}", strs(xi.parts()));
        rows.extend(
            p.terms()
                .map(|(e, c)| vec![strs(xi.parts()), e.to_string(), c.to_string()]),
        );
        entries.push(json!({"xi": xi.parts(), "orbit": orbit.to_string(), "poly": qpoly_json(p)}));
    }
    let basic = t.basic_specialization();
    let dim: BigInt = basic.eval_one();
    let _ = writeln!(text, "basic specialization: {basic}");
    let json = json!({
        "rank": rank,
        "strings": entries,
        "basic_specialization": qpoly_json(&basic),
        "dimension": dim.to_string(),
    });
    let mut r = Report::table(
        json,
        row(["xi", "exponent", "coefficient"]),
        rows,
        String::new(),
    );
    r.text = text;
    Ok(r)
}

fn ansatz(mu: &Partition, xi: &Composition) -> Outcome {
    let m = mixture_ansatz(mu, xi)?;
    let star = supernomial_star(xi, mu)?;
    let expected = RatPoly::from_ratio(&star, &star.eval_one())?;
    let matches = m.reconstruct() == expected;
    let mut rows = Vec::new();
    let mut entries = Vec::new();
    for (eta, w) in &m.weights {
        rows.push(vec![strs(eta.parts()), w.to_string()]);
        let component = m.components.get(eta).map_or(Value::Null, ratpoly_json);
        entries
            .push(json!({"eta": eta.parts(), "weight": rational_json(w), "component": component}));
    }
    let json = json!({
        "components": entries,
        "target": ratpoly_json(&expected),
        "reconstruction_matches": matches,
    });
    let preamble = format!("reconstruction matches S*/S*(1): {matches}\n");
    let mut r = Report::table(json, row(["eta", "weight"]), rows, preamble);
    r.passed = matches;
    Ok(r)
}
