//! Verification suites behind `gammarat verify`. Each suite produces a list
//! of named checks; a failed check carries the first counterexample's exact
//! data so the report is self-contained.

use num_rational::BigRational;
use serde::Serialize;
use std::collections::BTreeMap;

use gammarat::exact::{int, rat};
use gammarat::numerics::PrecisionContext;
use gammarat::recurrences::{self, Builtin, SequenceWindow};
use gammarat::rodrigues::{
    self, orthogonality_tolerance, Interval, WeightIndex,
};
use gammarat::sequences::{
    check_euler_divisibility, check_integrality, euler_p, euler_q, p_psi, p_psi_triple,
    preset_sequences, Preset,
};
use gammarat::BigInt;

#[derive(Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub params: BTreeMap<String, String>,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
}

impl Check {
    fn pass(name: impl Into<String>, params: BTreeMap<String, String>) -> Self {
        Self { name: name.into(), params, passed: true, counterexample: None }
    }

    fn fail(
        name: impl Into<String>,
        params: BTreeMap<String, String>,
        detail: String,
    ) -> Self {
        Self { name: name.into(), params, passed: false, counterexample: Some(detail) }
    }
}

fn params_of(pairs: &[(&str, String)]) -> BTreeMap<String, String> {
    pairs.iter().map(|(k, v)| (k.to_string(), v.clone())).collect()
}

/// Closed-form `(p, q)` producer for a built-in recurrence's solution pair.
fn builtin_sequences(which: Builtin, a: Option<&BigRational>, n: u64) -> (BigRational, BigRational) {
    match which {
        Builtin::Aptekarev => (
            BigRational::from_integer(euler_p(n)),
            BigRational::from_integer(BigInt::from(euler_q(n))),
        ),
        Builtin::Cor1 => preset_sequences(Preset::Cor1, None, n).expect("no parameters"),
        Builtin::Cor2 => preset_sequences(Preset::Cor2, None, n).expect("no parameters"),
        Builtin::Cor3 => preset_sequences(Preset::Cor3, a, n).expect("validated by caller"),
    }
}

/// Residuals of both closed-form solution families over `[offset, n_max]`.
pub fn suite_recurrences(
    which: Builtin,
    a: Option<&BigRational>,
    n_max: i64,
) -> Result<Vec<Check>, String> {
    if matches!(which, Builtin::Cor3) {
        let a_val = a.ok_or_else(|| "recurrence cor3 requires --a".to_string())?;
        preset_sequences(Preset::Cor3, Some(a_val), 0).map_err(|e| e.to_string())?;
    }
    let spec = recurrences::builtin(which, a).map_err(|e| e.to_string())?;
    let top = spec.top_shift;
    let upto = n_max + top;
    let mut checks = Vec::new();
    for (family, pick) in [("p", 0usize), ("q", 1usize)] {
        let values: Vec<BigRational> = (0..=upto as u64)
            .map(|n| {
                let pair = builtin_sequences(which, a, n);
                if pick == 0 { pair.0 } else { pair.1 }
            })
            .collect();
        let window = SequenceWindow::new(0, values);
        let mut failure = None;
        for n in spec.offset..=n_max {
            let r = recurrences::residual(&spec, &window, n).map_err(|e| e.to_string())?;
            if r.numer() != &BigInt::from(0) {
                failure = Some(format!(
                    "residual at n={n} is {r}; window values f_{}..f_{} = {:?}",
                    n + top - 3,
                    n + top,
                    ((n + top - 3)..=(n + top))
                        .map(|i| window.get(i).unwrap().to_string())
                        .collect::<Vec<_>>()
                ));
                break;
            }
        }
        let params = params_of(&[
            ("which", spec.name.clone()),
            ("family", family.to_string()),
            ("range", format!("{}..={}", spec.offset, n_max)),
        ]);
        let name = format!("recurrence residual {} {family}", spec.name);
        checks.push(match failure {
            None => Check::pass(name, params),
            Some(detail) => Check::fail(name, params, detail),
        });
    }
    Ok(checks)
}

/// μ-scaled integrality of the polynomial family for one parameter pair.
pub fn suite_integrality(a1: &BigRational, a2: &BigRational, n_max: u64) -> Vec<Check> {
    let params = params_of(&[
        ("a1", a1.to_string()),
        ("a2", a2.to_string()),
        ("n_max", n_max.to_string()),
    ]);
    for n in 0..=n_max {
        let report = check_integrality(a1, a2, n);
        if !report.verdict {
            let bad: Vec<String> = report
                .quotients
                .iter()
                .enumerate()
                .filter(|(_, q)| !q.is_integer())
                .map(|(k, q)| format!("b^{k}: {q}"))
                .collect();
            return vec![Check::fail(
                "mu-scaled integrality",
                params,
                format!("n={n}, scale={}, non-integer quotients: {}", report.scale, bad.join(", ")),
            )];
        }
    }
    vec![Check::pass("mu-scaled integrality", params)]
}

/// `n! | q_n` and `(n!/D_n) | p_n` for the integer Euler pair.
pub fn suite_divisibility(n_max: u64) -> Vec<Check> {
    let params = params_of(&[("n_max", n_max.to_string())]);
    for n in 1..=n_max {
        let r = check_euler_divisibility(n);
        if !r.verdict {
            return vec![Check::fail(
                "euler divisibility",
                params,
                format!("n={n}: q_n={} p_n={}", euler_q(n), euler_p(n)),
            )];
        }
    }
    vec![Check::pass("euler divisibility", params)]
}

/// Γ-symbol expansion of the linear form for each `n <= n_max`.
pub fn suite_linear_form(
    a1: &BigRational,
    a2: &BigRational,
    b: &BigRational,
    n_max: u64,
) -> Result<Vec<Check>, String> {
    let params = params_of(&[
        ("a1", a1.to_string()),
        ("a2", a2.to_string()),
        ("b", b.to_string()),
        ("n_max", n_max.to_string()),
    ]);
    for n in 0..=n_max {
        let ok = rodrigues::verify_gamma_linear_form(a1, a2, b, n).map_err(|e| e.to_string())?;
        if !ok {
            let combo = rodrigues::gamma_linear_form(a1, a2, b, n).map_err(|e| e.to_string())?;
            return Ok(vec![Check::fail(
                "gamma linear form expansion",
                params,
                format!(
                    "n={n}: moment side gamma1={} gamma2={}, sequence side gamma1={} gamma2={}",
                    combo.gamma1,
                    combo.gamma2,
                    -gammarat::sequences::q_gamma(a2, a1, b, n),
                    gammarat::sequences::q_gamma(a1, a2, b, n),
                ),
            )]);
        }
    }
    Ok(vec![Check::pass("gamma linear form expansion", params)])
}

/// Moment identity `b^{2n+a2+1}/Γ(a2+1) ∫ x^{a2} Q_n e^{-bx} = q_n`.
pub fn suite_q_moment(
    a1: &BigRational,
    a2: &BigRational,
    b: &BigRational,
    n_max: u64,
) -> Result<Vec<Check>, String> {
    let params = params_of(&[
        ("a1", a1.to_string()),
        ("a2", a2.to_string()),
        ("b", b.to_string()),
        ("n_max", n_max.to_string()),
    ]);
    for n in 0..=n_max {
        let ok = rodrigues::verify_q_moment_identity(a1, a2, b, n).map_err(|e| e.to_string())?;
        if !ok {
            return Ok(vec![Check::fail(
                "q moment identity",
                params,
                format!("n={n}: moment sum and q_gamma disagree"),
            )]);
        }
    }
    Ok(vec![Check::pass("q moment identity", params)])
}

/// Logarithmic-moment expansion of the Euler remainder integral.
pub fn suite_euler_remainder(n_max: u64) -> Result<Vec<Check>, String> {
    let params = params_of(&[("n_max", n_max.to_string())]);
    for n in 0..=n_max {
        let ok = rodrigues::verify_euler_remainder(n).map_err(|e| e.to_string())?;
        if !ok {
            return Ok(vec![Check::fail(
                "euler remainder expansion",
                params,
                format!("n={n}: log-moment combo disagrees with (p_n, q_n)"),
            )]);
        }
    }
    Ok(vec![Check::pass("euler remainder expansion", params)])
}

/// Numerical orthogonality residuals over every `(interval, weight, ν)` with
/// `ν <= n-1`.
#[allow(clippy::too_many_arguments)]
pub fn suite_orthogonality(
    a1: &BigRational,
    a2: &BigRational,
    b: &BigRational,
    n: u64,
    precision: u32,
    tolerance_exp: Option<i64>,
) -> Result<Vec<Check>, String> {
    let ctx = PrecisionContext::new(precision);
    let tol = match tolerance_exp {
        None => orthogonality_tolerance(ctx),
        Some(e) => {
            let ten = int(10);
            let mut t = int(1);
            for _ in 0..e.unsigned_abs() {
                t *= &ten;
            }
            let r = if e >= 0 { t } else { t.recip() };
            gammarat::numerics::BigFloat::from_rational(&r, ctx.frac_bits())
        }
    };
    let mut checks = Vec::new();
    for nu in 0..n {
        for (jname, interval) in [("[0,1]", Interval::Unit), ("[1,inf)", Interval::Tail)] {
            for (kname, weight) in [("w1", WeightIndex::First), ("w2", WeightIndex::Second)] {
                let r = rodrigues::orthogonality_residual(
                    a1, a2, b, n, interval, weight, nu, ctx,
                )
                .map_err(|e| e.to_string())?;
                let params = params_of(&[
                    ("a1", a1.to_string()),
                    ("a2", a2.to_string()),
                    ("b", b.to_string()),
                    ("n", n.to_string()),
                    ("nu", nu.to_string()),
                    ("interval", jname.to_string()),
                    ("weight", kname.to_string()),
                ]);
                let name = format!("orthogonality residual nu={nu} {jname} {kname}");
                if r.abs() < tol {
                    checks.push(Check::pass(name, params));
                } else {
                    checks.push(Check::fail(
                        name,
                        params,
                        format!("residual {} exceeds tolerance {}", r, tol),
                    ));
                }
            }
        }
    }
    Ok(checks)
}

/// Compact vs. triple-sum numerator formulas over the standard sweep.
pub fn suite_psi_numerator_equivalence(n_max: u64) -> Vec<Check> {
    let a_set = [int(0), rat(1, 2), rat(-1, 2), rat(1, 3), rat(-3, 4)];
    let b_set = [int(1), int(2), rat(1, 2)];
    let mut checks = Vec::new();
    for a in &a_set {
        for b in &b_set {
            let params = params_of(&[
                ("a", a.to_string()),
                ("b", b.to_string()),
                ("n_max", n_max.to_string()),
            ]);
            let name = format!("psi numerator equivalence a={a} b={b}");
            let mut failure = None;
            for n in 0..=n_max {
                let compact = p_psi(a, b, n);
                let triple = p_psi_triple(a, b, n);
                if compact != triple {
                    failure = Some(format!("n={n}: compact={compact} triple={triple}"));
                    break;
                }
            }
            checks.push(match failure {
                None => Check::pass(name, params),
                Some(d) => Check::fail(name, params, d),
            });
        }
    }
    checks
}
