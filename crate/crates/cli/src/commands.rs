use serde::Serialize;

use cmseq_core::analysis::{
    block_frequencies, block_label, check_mahler, named_instance, partial_sum_walk, simple_normality_stats,
    MahlerInstance, PeriodOutcome, PeriodSearch, Verdict,
};
use cmseq_core::constants::{
    affine_crosscheck, digits, liouville_prefix_mismatch, value, Definition, NamedConstant, PrefixMismatch,
};
use cmseq_core::exactnum::{format_rational, parse_rational, to_decimal_string, BigRational};
use cmseq_core::genfun::{
    direct_enclosure, eval_closed, functional_equation_residual, levels_for_precision, telescoping_residual,
    terms_for_precision,
};
use cmseq_core::polyalg::{divides, resultant_in_u, PolyInU};
use cmseq_core::seqcore::parse_sign;
use cmseq_core::{
    CharacterLike, Enclosure, Error, GenFunSpec, RatPoly, ResidueRule, Result, SequenceSpec, Sign,
};

use crate::args::*;
use crate::output::Output;

const DECIMALS: usize = 30;

pub fn run(cli: &Cli) -> Result<Output> {
    let prec = cli.precision;
    match &cli.command {
        Command::Seq(a) => seq(a),
        Command::Digits(a) => digits_cmd(a),
        Command::Eval(a) => eval(a, prec),
        Command::Residual(a) => residual(a, prec),
        Command::Constants(a) => constants(a, prec),
        Command::Mahler(a) => mahler(a),
        Command::Period(a) => period(a),
        Command::Stats(a) => stats(a),
        Command::Resultant(a) => resultant(a),
    }
}

fn sequence(s: &str) -> Result<SequenceSpec> {
    s.parse()
}

fn family_sequence(a: &FamilyArgs) -> Result<SequenceSpec> {
    match (a.family, &a.sequence) {
        (Some(FamilyName::G), _) => Ok(SequenceSpec::GaussianLiouville),
        (Some(FamilyName::T), _) => Ok(SequenceSpec::Mod3),
        (Some(FamilyName::F), _) => {
            let p = a.p.ok_or_else(|| Error::Domain("family F needs --p".into()))?;
            let rule = match a.rule {
                RuleName::Legendre => ResidueRule::Legendre,
                RuleName::Trivial => ResidueRule::Trivial,
            };
            Ok(SequenceSpec::CharacterLike(CharacterLike::new(p, parse_sign(&a.eps)?, rule)?))
        }
        (None, Some(s)) => sequence(s),
        (None, None) => Err(Error::Domain("one of --family or --sequence is required".into())),
    }
}

fn family_label(s: &SequenceSpec) -> String {
    GenFunSpec::new(*s).map(|g| g.name()).unwrap_or_else(|_| s.name())
}

fn point(z: &str) -> Result<BigRational> {
    parse_rational(z)
}

#[derive(Serialize)]
struct EnclosureRecord {
    family: String,
    z: String,
    route: &'static str,
    n_terms: u64,
    enclosure_lo: String,
    enclosure_hi: String,
    width_bits: Option<i64>,
    lo_decimal: String,
    hi_decimal: String,
}

impl EnclosureRecord {
    fn new(family: String, z: &BigRational, route: &'static str, n_terms: u64, e: &Enclosure) -> Self {
        EnclosureRecord {
            family,
            z: format_rational(z),
            route,
            n_terms,
            enclosure_lo: format_rational(e.lo()),
            enclosure_hi: format_rational(e.hi()),
            width_bits: e.width_bits(),
            lo_decimal: to_decimal_string(e.lo(), DECIMALS),
            hi_decimal: to_decimal_string(e.hi(), DECIMALS),
        }
    }

    fn row(&self) -> Vec<String> {
        vec![
            self.family.clone(),
            self.z.clone(),
            self.route.into(),
            self.n_terms.to_string(),
            self.enclosure_lo.clone(),
            self.enclosure_hi.clone(),
            self.width_bits.map_or(String::new(), |w| w.to_string()),
        ]
    }

    fn plain(&self) -> String {
        format!("{} {}: [{}, {}] (width 2^-{})", self.route, self.n_terms, self.lo_decimal, self.hi_decimal,
            self.width_bits.map_or("inf".into(), |w| w.to_string()))
    }
}

const ENCLOSURE_HEADER: [&str; 7] = ["family", "z", "route", "n_terms", "enclosure_lo", "enclosure_hi", "width_bits"];

#[derive(Serialize)]
struct BothRoutes {
    family: String,
    z: String,
    agree: bool,
    routes: Vec<EnclosureRecord>,
}

fn eval(a: &EvalArgs, prec: u64) -> Result<Output> {
    let seq = family_sequence(&a.family)?;
    let z = point(&a.z)?;
    let label = family_label(&seq);
    let mut records = Vec::new();
    let mut encs = Vec::new();
    if matches!(a.route, Route::Direct | Route::Both) {
        let n = match a.terms {
            Some(n) => n,
            None => terms_for_precision(&z, prec)?,
        };
        let e = direct_enclosure(&seq, &z, n)?;
        records.push(EnclosureRecord::new(label.clone(), &z, "direct", n, &e));
        encs.push(e);
    }
    if matches!(a.route, Route::Closed | Route::Both) {
        let spec = GenFunSpec::new(seq)?;
        let k = match a.levels {
            Some(k) => k,
            None => levels_for_precision(&spec, &z, prec)?,
        };
        let e = eval_closed(&spec, &z, k)?;
        records.push(EnclosureRecord::new(label.clone(), &z, "closed", u64::from(k), &e));
        encs.push(e);
    }
    let agree = encs.windows(2).all(|w| w[0].intersects(&w[1]));
    let rows = records.iter().map(EnclosureRecord::row).collect();
    let plain = records.iter().map(EnclosureRecord::plain).collect::<Vec<_>>().join("\n");
    let out = if records.len() == 1 {
        let r = records.pop().expect("one record");
        Output::new(r, ENCLOSURE_HEADER.to_vec(), rows, plain)
    } else {
        let both = BothRoutes { family: label, z: format_rational(&z), agree, routes: records };
        Output::new(both, ENCLOSURE_HEADER.to_vec(), rows, plain)
    };
    Ok(out.verified(agree))
}

#[derive(Serialize)]
struct ResidualRecord {
    family: String,
    z: String,
    kind: &'static str,
    m: Option<u32>,
    precision_bits: u64,
    enclosure_lo: String,
    enclosure_hi: String,
    width_bits: Option<i64>,
    contains_zero: bool,
}

fn residual(a: &ResidualArgs, prec: u64) -> Result<Output> {
    let spec = GenFunSpec::new(family_sequence(&a.family)?)?;
    let z = point(&a.z)?;
    let (kind, e) = match a.m {
        Some(m) => ("telescoping", telescoping_residual(&spec, &z, m, prec)?),
        None => ("functional_equation", functional_equation_residual(&spec, &z, prec)?),
    };
    let r = ResidualRecord {
        family: spec.name(),
        z: format_rational(&z),
        kind,
        m: a.m,
        precision_bits: prec,
        enclosure_lo: format_rational(e.lo()),
        enclosure_hi: format_rational(e.hi()),
        width_bits: e.width_bits(),
        contains_zero: e.contains_zero(),
    };
    let plain = format!(
        "{} residual of {} at z={}: {} 0",
        kind,
        r.family,
        r.z,
        if r.contains_zero { "contains" } else { "EXCLUDES" }
    );
    let row = vec![
        r.family.clone(),
        r.z.clone(),
        kind.into(),
        a.m.map_or(String::new(), |m| m.to_string()),
        prec.to_string(),
        r.enclosure_lo.clone(),
        r.enclosure_hi.clone(),
        r.width_bits.map_or(String::new(), |w| w.to_string()),
        r.contains_zero.to_string(),
    ];
    let ok = r.contains_zero;
    let header = vec!["family", "z", "kind", "m", "precision_bits", "enclosure_lo", "enclosure_hi", "width_bits", "contains_zero"];
    Ok(Output::new(r, header, vec![row], plain).verified(ok))
}

#[derive(Serialize)]
struct SeqRecord {
    sequence: String,
    n: u64,
    values: Vec<i8>,
    bits: String,
}

fn seq(a: &SeqArgs) -> Result<Output> {
    let spec = sequence(&a.sequence)?;
    let vals = spec.values(a.n)?;
    let rows = vals
        .iter()
        .enumerate()
        .map(|(i, s)| vec![(i + 1).to_string(), s.value().to_string(), s.bit().to_string()])
        .collect();
    let values: Vec<i8> = vals.iter().map(Sign::value).collect();
    let plain = values.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ");
    let r = SeqRecord { sequence: spec.name(), n: a.n, values, bits: vals.bit_string() };
    Ok(Output::new(r, vec!["n", "value", "bit"], rows, plain))
}

#[derive(Serialize)]
struct DigitsRecord {
    name: String,
    n_digits: usize,
    digits: String,
    binary: String,
    precision_bits: u64,
    lo: String,
    hi: String,
}

fn digits_cmd(a: &DigitsArgs) -> Result<Output> {
    let c: NamedConstant = a.constant.parse()?;
    let d = digits(&c, a.n)?;
    let prec = a.n as u64 + 16;
    let v = value(&c, prec)?;
    let r = DigitsRecord {
        name: c.name(),
        n_digits: a.n,
        binary: format!("0.{d}"),
        digits: d.clone(),
        precision_bits: prec,
        lo: format_rational(v.lo()),
        hi: format_rational(v.hi()),
    };
    let row = vec![r.name.clone(), a.n.to_string(), d.clone(), prec.to_string(), r.lo.clone(), r.hi.clone()];
    Ok(Output::new(r, vec!["name", "n_digits", "digits", "precision_bits", "lo", "hi"], vec![row], d))
}

#[derive(Serialize)]
struct ConstantRecord {
    name: String,
    kind: &'static str,
    definition: Definition,
    sequence: String,
    precision_bits: u64,
    lo: String,
    hi: String,
    lo_decimal: String,
    crosscheck_contains_zero: Option<bool>,
}

#[derive(Serialize)]
struct ConstantsReport {
    precision_bits: u64,
    constants: Vec<ConstantRecord>,
    liouville_prefix: PrefixMismatch,
}

fn constants(a: &ConstantsArgs, prec: u64) -> Result<Output> {
    let list = match &a.name {
        Some(n) => vec![n.parse::<NamedConstant>()?],
        None => NamedConstant::catalogue(),
    };
    let mut records = Vec::new();
    for c in list {
        let v = value(&c, prec)?;
        let cross = match affine_crosscheck(&c, prec) {
            Ok(e) => Some(e.contains_zero()),
            Err(Error::NotAvailable(_)) => None,
            Err(e) => return Err(e),
        };
        records.push(ConstantRecord {
            name: c.name(),
            kind: c.kind(),
            definition: c.definition(),
            sequence: c.sequence().name(),
            precision_bits: prec,
            lo: format_rational(v.lo()),
            hi: format_rational(v.hi()),
            lo_decimal: to_decimal_string(v.lo(), (prec as f64 * std::f64::consts::LOG10_2) as usize),
            crosscheck_contains_zero: cross,
        });
    }
    let ok = records.iter().all(|r| r.crosscheck_contains_zero != Some(false));
    let rows = records
        .iter()
        .map(|r| {
            vec![
                r.name.clone(),
                r.kind.into(),
                r.sequence.clone(),
                r.precision_bits.to_string(),
                r.lo.clone(),
                r.hi.clone(),
                r.lo_decimal.clone(),
                r.crosscheck_contains_zero.map_or(String::new(), |b| b.to_string()),
            ]
        })
        .collect();
    let plain = records.iter().map(|r| format!("{:<24} {}", r.name, r.lo_decimal)).collect::<Vec<_>>().join("\n");
    let header = vec!["name", "kind", "sequence", "precision_bits", "lo", "hi", "lo_decimal", "crosscheck_contains_zero"];
    let report = ConstantsReport { precision_bits: prec, constants: records, liouville_prefix: liouville_prefix_mismatch() };
    Ok(Output::new(report, header, rows, plain).verified(ok))
}

fn mahler(a: &MahlerArgs) -> Result<Output> {
    let alpha = point(&a.alpha)?;
    let inst = named_instance(&a.instance, alpha, a.p, parse_sign(&a.eps)?)?;
    let rep = check_mahler(&inst, a.kmax)?;
    let rows = rep
        .delta_values
        .iter()
        .map(|d| {
            vec![
                d.k.to_string(),
                format!("{:?}", d.certificate).to_lowercase(),
                d.nonzero.to_string(),
                d.value.clone().unwrap_or_default(),
            ]
        })
        .collect();
    let mut plain = format!(
        "{}: {} (Delta = {}, d = {}, m = {}, alpha = {})",
        rep.instance,
        if rep.passed { "PASS" } else { "FAIL" },
        rep.delta,
        rep.d,
        rep.m,
        rep.alpha
    );
    for c in &rep.conditions {
        let v = match c.verdict {
            Verdict::Pass => "pass",
            Verdict::Fail => "FAIL",
            Verdict::Skipped => "skipped",
        };
        plain.push_str(&format!("\n  {:?}: {v} ({})", c.condition, c.detail));
    }
    let ok = rep.passed;
    Ok(Output::new(rep, vec!["k", "certificate", "nonzero", "value"], rows, plain).verified(ok))
}

#[derive(Serialize)]
struct PeriodRecord {
    sequence: String,
    k: u64,
    m: u64,
    search_limit: u64,
    outcome: &'static str,
    n1: Option<u64>,
    n2: Option<u64>,
    f_n1: Option<Sign>,
    f_n2: Option<Sign>,
    method: Option<String>,
}

fn period(a: &PeriodArgs) -> Result<Output> {
    let spec = sequence(&a.sequence)?;
    let out = PeriodSearch::new(spec, a.limit)?.find(a.k, a.m)?;
    let mut r = PeriodRecord {
        sequence: spec.name(),
        k: a.k,
        m: a.m,
        search_limit: a.limit,
        outcome: "",
        n1: None,
        n2: None,
        f_n1: None,
        f_n2: None,
        method: None,
    };
    let plain = match out {
        PeriodOutcome::Found(w) => {
            r.outcome = "found";
            r.n1 = Some(w.n1);
            r.n2 = Some(w.n2);
            r.f_n1 = Some(w.f_n1);
            r.f_n2 = Some(w.f_n2);
            r.method = Some(format!("{:?}", w.method).to_lowercase());
            format!("f({}) = {}, f({}) = {}", w.n1, w.f_n1, w.n2, w.f_n2)
        }
        PeriodOutcome::NotFound { .. } => {
            r.outcome = "not_found";
            format!("no witness below {}", a.limit)
        }
        PeriodOutcome::NoNegativePrime { .. } => {
            r.outcome = "no_negative_prime";
            format!("f(q) = +1 for every prime q <= {}", a.limit)
        }
    };
    let opt = |x: Option<u64>| x.map_or(String::new(), |v| v.to_string());
    let row = vec![
        r.sequence.clone(),
        a.k.to_string(),
        a.m.to_string(),
        a.limit.to_string(),
        r.outcome.into(),
        opt(r.n1),
        opt(r.n2),
        r.f_n1.map_or(String::new(), |s| s.value().to_string()),
        r.f_n2.map_or(String::new(), |s| s.value().to_string()),
    ];
    let ok = r.outcome == "found";
    let header = vec!["sequence", "k", "m", "search_limit", "outcome", "n1", "n2", "f_n1", "f_n2"];
    Ok(Output::new(r, header, vec![row], plain).verified(ok))
}

#[derive(Serialize)]
struct StatsRecord {
    sequence: String,
    n: u64,
    plus_count: u64,
    plus_frequency: String,
    partial_sum_max: u64,
    partial_sum_at_n: i64,
}

#[derive(Serialize)]
struct BlockCount {
    block: String,
    count: u64,
}

#[derive(Serialize)]
struct BlocksRecord {
    sequence: String,
    n: u64,
    k: usize,
    windows: u64,
    blocks: Vec<BlockCount>,
}

#[derive(Serialize)]
struct WalkPoint {
    n: u64,
    partial_sum: i64,
}

#[derive(Serialize)]
struct WalkRecord {
    sequence: String,
    n: u64,
    stride: u64,
    walk: Vec<WalkPoint>,
}

fn stats(a: &StatsArgs) -> Result<Output> {
    let spec = sequence(&a.sequence)?;
    if let Some(k) = a.blocks {
        let counts = block_frequencies(&spec, a.n, k)?;
        let blocks: Vec<BlockCount> =
            counts.iter().enumerate().map(|(b, &count)| BlockCount { block: block_label(b, k), count }).collect();
        let rows = blocks.iter().map(|b| vec![b.block.clone(), b.count.to_string()]).collect();
        let plain = blocks.iter().map(|b| format!("{} {}", b.block, b.count)).collect::<Vec<_>>().join("\n");
        let r = BlocksRecord { sequence: spec.name(), n: a.n, k, windows: a.n - k as u64 + 1, blocks };
        return Ok(Output::new(r, vec!["block", "count"], rows, plain));
    }
    if let Some(stride) = a.walk {
        let walk: Vec<WalkPoint> =
            partial_sum_walk(&spec, a.n, stride)?.into_iter().map(|(n, partial_sum)| WalkPoint { n, partial_sum }).collect();
        let rows = walk.iter().map(|p| vec![p.n.to_string(), p.partial_sum.to_string()]).collect();
        let plain = walk.iter().map(|p| format!("{} {}", p.n, p.partial_sum)).collect::<Vec<_>>().join("\n");
        let r = WalkRecord { sequence: spec.name(), n: a.n, stride, walk };
        return Ok(Output::new(r, vec!["n", "partial_sum"], rows, plain));
    }
    let s = simple_normality_stats(&spec, a.n)?;
    let r = StatsRecord {
        sequence: spec.name(),
        n: s.n,
        plus_count: s.plus_count,
        plus_frequency: format_rational(&s.plus_frequency),
        partial_sum_max: s.partial_sum_max,
        partial_sum_at_n: s.partial_sum_at_n,
    };
    let row = vec![
        r.sequence.clone(),
        r.n.to_string(),
        r.plus_count.to_string(),
        r.plus_frequency.clone(),
        r.partial_sum_max.to_string(),
        r.partial_sum_at_n.to_string(),
    ];
    let plain = format!(
        "n = {}, +1 count = {} ({}), max |S(x)| = {}, S(N) = {}",
        r.n,
        r.plus_count,
        to_decimal_string(&s.plus_frequency, 6),
        r.partial_sum_max,
        r.partial_sum_at_n
    );
    let header = vec!["sequence", "n", "plus_count", "plus_frequency", "partial_sum_max", "partial_sum_at_n"];
    Ok(Output::new(r, header, vec![row], plain))
}

/// "c0,c1;c0,c1,c2" → Σ_j (Σ_i c_ij z^i) u^j.
fn parse_poly_in_u(s: &str) -> Result<PolyInU> {
    let coeffs = s
        .split(';')
        .map(|part| {
            let part = part.trim();
            if part.is_empty() {
                return Ok(RatPoly::zero());
            }
            part.split(',').map(|c| parse_rational(c.trim())).collect::<Result<Vec<_>>>().map(RatPoly::new)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(PolyInU::new(coeffs))
}

#[derive(Serialize)]
struct ResultantRecord {
    a: String,
    b: String,
    delta: String,
    delta_coeffs: Vec<String>,
    expected: Option<String>,
    matches_expected: Option<bool>,
}

fn resultant(a: &ResultantArgs) -> Result<Output> {
    let (pa, pb, expected) = match (&a.a, &a.b) {
        (Some(sa), Some(sb)) => (parse_poly_in_u(sa)?, parse_poly_in_u(sb)?, None),
        _ => {
            let spec = GenFunSpec::new(family_sequence(&a.family)?)?;
            let inst = MahlerInstance::for_genfun(&spec, BigRational::from_integer(0.into()));
            let expected = inst.b().coeff(0);
            (inst.a().clone(), inst.b().clone(), Some(expected))
        }
    };
    let delta = resultant_in_u(&pa, &pb)?;
    let matches = match &expected {
        Some(e) if delta.is_zero() => Some(e.is_zero()),
        Some(e) => Some(divides(e, &delta)? && divides(&delta, e)?),
        None => None,
    };
    let r = ResultantRecord {
        a: pa.to_string(),
        b: pb.to_string(),
        delta: delta.render("z"),
        delta_coeffs: delta.coeff_strings(),
        expected: expected.map(|e| e.render("z")),
        matches_expected: matches,
    };
    let row = vec![
        r.a.clone(),
        r.b.clone(),
        r.delta.clone(),
        r.expected.clone().unwrap_or_default(),
        r.matches_expected.map_or(String::new(), |b| b.to_string()),
    ];
    let plain = r.delta.clone();
    let ok = matches != Some(false);
    Ok(Output::new(r, vec!["a", "b", "delta", "expected", "matches_expected"], vec![row], plain).verified(ok))
}
