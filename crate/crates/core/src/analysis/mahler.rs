use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactnum::{bit_size, format_rational, BigRational, Enclosure};
use crate::genfun::GenFunSpec;
use crate::polyalg::{resultant_in_u, PolyInU, RatPoly};
use crate::seqcore::Sign;

/// Exact Δ values above this size are reported without the value.
const MAX_REPORTED_BITS: u64 = 1100;
/// Levels always evaluated exactly, when α^{d^k} stays below `EXACT_EVAL_BITS`.
const EXACT_LEVELS: u32 = 8;
const EXACT_EVAL_BITS: u64 = 4096;
/// Exact evaluation is abandoned past this size; only reachable for |α| = 1.
const MAX_EXACT_BITS: u64 = 1 << 24;

/// A functional equation X(z^d) = A(z, X(z)) / B(z, X(z)) with an evaluation point.
#[derive(Clone, Debug, PartialEq)]
pub struct MahlerInstance {
    name: String,
    a: PolyInU,
    b: PolyInU,
    d: u64,
    alpha: BigRational,
}

impl MahlerInstance {
    pub fn new(name: impl Into<String>, a: PolyInU, b: PolyInU, d: u64, alpha: BigRational) -> Result<Self> {
        if d < 2 {
            return Err(Error::domain("the base d must exceed 1"));
        }
        if a.is_zero() && b.is_zero() {
            return Err(Error::domain("A and B are both zero"));
        }
        Ok(MahlerInstance { name: name.into(), a, b, d, alpha })
    }

    /// The instance attached to a generating function: X(z^d) = s·(X(z) − kernel).
    pub fn for_genfun(spec: &GenFunSpec, alpha: BigRational) -> Self {
        // kernel = N/D with N, D ∈ ℚ[z]; A = s·(D·u − N), B = D.
        let (num, den) = match spec.family() {
            crate::Family::G => (RatPoly::from_ints(&[0, 1]), RatPoly::from_ints(&[1, 0, 1])),
            crate::Family::T => (RatPoly::from_ints(&[0, 1]), RatPoly::from_ints(&[1, 1, 1])),
            crate::Family::F => {
                let mut d = vec![0i64; spec.base() as usize + 1];
                d[0] = 1;
                d[spec.base() as usize] = -1;
                (spec.phi().expect("F carries Φ").clone(), RatPoly::from_ints(&d))
            }
        };
        let s = BigRational::from_integer(i64::from(spec.sign().value()).into());
        let a = PolyInU::new(vec![(-&num).scale(&s), den.scale(&s)]);
        let b = PolyInU::constant(den);
        MahlerInstance { name: spec.name(), a, b, d: spec.base(), alpha }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn a(&self) -> &PolyInU {
        &self.a
    }

    pub fn b(&self) -> &PolyInU {
        &self.b
    }

    pub fn d(&self) -> u64 {
        self.d
    }

    pub fn alpha(&self) -> &BigRational {
        &self.alpha
    }

    /// max(deg_u A, deg_u B).
    pub fn m(&self) -> usize {
        self.a.degree_u().unwrap_or(0).max(self.b.degree_u().unwrap_or(0))
    }

    /// Δ(z) = Res_u(A, B).
    pub fn delta(&self) -> Result<RatPoly> {
        resultant_in_u(&self.a, &self.b)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Condition {
    /// m < d.
    DegreeBelowBase,
    /// 0 < |α| < 1.
    AlphaInDisk,
    /// Δ(α^{d^k}) ≠ 0 for 0 ≤ k ≤ k_max.
    DeltaNonvanishing,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConditionResult {
    pub condition: Condition,
    pub verdict: Verdict,
    pub detail: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Certificate {
    /// Δ(α^{d^k}) computed exactly.
    Exact,
    /// |c_v| > |α|^{d^k}·Σ_{i>v}|c_i| with c_v the lowest nonzero coefficient.
    Dominance,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DeltaValue {
    pub k: u32,
    pub certificate: Certificate,
    pub nonzero: bool,
    /// Exact value when it is small enough to print.
    pub value: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MahlerReport {
    pub instance: String,
    pub a: String,
    pub b: String,
    pub d: u64,
    pub m: usize,
    pub alpha: String,
    pub delta: String,
    pub k_max: u32,
    pub conditions: Vec<ConditionResult>,
    /// One entry per k evaluated exactly, then one for the first k certified by dominance.
    pub delta_values: Vec<DeltaValue>,
    pub first_vanishing_k: Option<u32>,
    pub passed: bool,
}

impl MahlerReport {
    pub fn verdict(&self, c: Condition) -> Verdict {
        self.conditions.iter().find(|r| r.condition == c).map_or(Verdict::Skipped, |r| r.verdict)
    }
}

/// Exact certification of the three hypotheses for k = 0..=k_max.
pub fn check_mahler(inst: &MahlerInstance, k_max: u32) -> Result<MahlerReport> {
    let delta = inst.delta()?;
    let m = inst.m();
    let mut conditions = Vec::with_capacity(3);

    let deg_ok = (m as u64) < inst.d;
    conditions.push(ConditionResult {
        condition: Condition::DegreeBelowBase,
        verdict: if deg_ok { Verdict::Pass } else { Verdict::Fail },
        detail: format!("m = {m}, d = {}", inst.d),
    });

    let abs = inst.alpha.abs();
    let disk_ok = !abs.is_zero() && abs < BigRational::one();
    conditions.push(ConditionResult {
        condition: Condition::AlphaInDisk,
        verdict: if disk_ok { Verdict::Pass } else { Verdict::Fail },
        detail: format!("|alpha| = {}", format_rational(&abs)),
    });

    let mut delta_values = Vec::new();
    let mut first_vanishing_k = None;
    let nonvanishing = if abs > BigRational::one() {
        ConditionResult {
            condition: Condition::DeltaNonvanishing,
            verdict: Verdict::Skipped,
            detail: "alpha^(d^k) grows without bound".into(),
        }
    } else {
        let outcome = scan_delta(inst, &delta, k_max, &mut delta_values)?;
        first_vanishing_k = outcome;
        match outcome {
            None => ConditionResult {
                condition: Condition::DeltaNonvanishing,
                verdict: Verdict::Pass,
                detail: format!("Delta(alpha^(d^k)) != 0 for 0 <= k <= {k_max}"),
            },
            Some(k) => ConditionResult {
                condition: Condition::DeltaNonvanishing,
                verdict: Verdict::Fail,
                detail: format!("Delta(alpha^(d^{k})) = 0"),
            },
        }
    };
    conditions.push(nonvanishing);

    let passed = conditions.iter().all(|c| c.verdict == Verdict::Pass);
    Ok(MahlerReport {
        instance: inst.name.clone(),
        a: inst.a.to_string(),
        b: inst.b.to_string(),
        d: inst.d,
        m,
        alpha: format_rational(&inst.alpha),
        delta: delta.render("z"),
        k_max,
        conditions,
        delta_values,
        first_vanishing_k,
        passed,
    })
}

/// Returns the first k with Δ(α^{d^k}) = 0, if any.
fn scan_delta(inst: &MahlerInstance, delta: &RatPoly, k_max: u32, out: &mut Vec<DeltaValue>) -> Result<Option<u32>> {
    if delta.is_zero() {
        out.push(DeltaValue { k: 0, certificate: Certificate::Exact, nonzero: false, value: Some("0".into()) });
        return Ok(Some(0));
    }
    let coeffs = delta.coeffs();
    let v = coeffs.iter().position(|c| !c.is_zero()).expect("nonzero Δ");
    let lead = coeffs[v].abs();
    let rest: BigRational = coeffs[v + 1..].iter().map(|c| c.abs()).sum();
    let alpha_nonzero = !inst.alpha.is_zero();
    let d = u32::try_from(inst.d).map_err(|_| Error::domain("base d too large"))?;

    // x = α^{d^k} while exact evaluation is affordable.
    let mut x = Some(inst.alpha.clone());
    // r ≥ |α|^{d^k}, rounded upward once exact powers get large.
    let mut r = Enclosure::point(inst.alpha.abs());
    for k in 0..=k_max {
        if k > 0 {
            r = r.powi(d).tighten(256);
            x = x.filter(|x| bit_size(x).saturating_mul(u64::from(d)) <= MAX_EXACT_BITS).map(|x| num_traits::Pow::pow(&x, d));
        }
        let small = x.as_ref().is_some_and(|x| bit_size(x) <= EXACT_EVAL_BITS);
        let dominant = alpha_nonzero && r.hi() < &BigRational::one() && r.hi() * &rest < lead;
        if (k > EXACT_LEVELS || !small) && dominant {
            // r_k decreases in k, so the bound holds for every later level too.
            out.push(DeltaValue { k, certificate: Certificate::Dominance, nonzero: true, value: None });
            return Ok(None);
        }
        let Some(x) = &x else {
            return Err(Error::Resource(format!("alpha^(d^{k}) exceeds {MAX_EXACT_BITS} bits")));
        };
        let value = delta.evaluate(x);
        let nonzero = !value.is_zero();
        let printed = (bit_size(&value) <= MAX_REPORTED_BITS).then(|| format_rational(&value));
        out.push(DeltaValue { k, certificate: Certificate::Exact, nonzero, value: printed });
        if !nonzero {
            return Ok(Some(k));
        }
    }
    Ok(None)
}

/// Named instances: the three families at α and designed failures.
pub fn named_instance(name: &str, alpha: BigRational, p: u64, eps: Sign) -> Result<MahlerInstance> {
    use crate::seqcore::{CharacterLike, ResidueRule};
    let u = |c: &[i64]| RatPoly::from_ints(c);
    match name {
        "G" => Ok(MahlerInstance::for_genfun(&GenFunSpec::gaussian(), alpha)),
        "T" => Ok(MahlerInstance::for_genfun(&GenFunSpec::mod3(), alpha)),
        "F" => {
            let ch = CharacterLike::new(p, eps, ResidueRule::Legendre)?;
            Ok(MahlerInstance::for_genfun(&GenFunSpec::character_like(ch), alpha))
        }
        // Δ = 1 − 4z vanishes at (1/2)^2.
        "degenerate-vanishing" => MahlerInstance::new(
            name,
            PolyInU::new(vec![u(&[]), u(&[1])]),
            PolyInU::constant(u(&[1, -4])),
            2,
            alpha,
        ),
        // deg_u A = 2 = d.
        "degenerate-degree" => MahlerInstance::new(
            name,
            PolyInU::new(vec![u(&[0, -1]), u(&[]), u(&[1])]),
            PolyInU::constant(u(&[1])),
            2,
            alpha,
        ),
        _ => Err(Error::domain(format!("unknown Mahler instance '{name}'"))),
    }
}
