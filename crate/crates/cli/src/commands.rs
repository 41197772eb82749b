use std::fmt::Write as _;

use num_bigint::BigInt;
use num_integer::Integer;
use serde_json::{json, Value};

use s3bundle::berger::{berger_report, EXTRA_DEGREE_LIMIT};
use s3bundle::bundles::{enumerate_homotopy_types, homotopy_modulus, WilkensData};
use s3bundle::decide::{
    hopf_witness, theorem1_decide, theorem3_decide, theorem4_decide, wilkens_match, ComplexData,
    Status, Verdict,
};
use s3bundle::linkforms::{is_nondegenerate, is_standard, square_class_count, LinkingForm};
use s3bundle::Error;

use crate::envelope::{self, int, OutputEnvelope};

const PROV_STANDARD: &str = "standard linking form: lambda = ±tau^2 for a unit tau";
const PROV_JAMES_WHITEHEAD: &str =
    "James-Whitehead: M_{m,n} ~ M_{m',n} oriented iff m = ±m' mod gcd(n, 12)";
const PROV_WILKENS: &str = "Wilkens invariants (H^4, b, beta) with beta(M_{m,n}) = ±2m x_4";
const PROV_PL_REGIMES: &str = "PL classification decided for n odd and n = 2 * odd";
const PROV_THETA: &str = "homotopy criterion: Theta trivial and standard linking form";
const PROV_PRIME_POWER: &str = "n = p^k with p = 3 mod 4: every form standard up to sign";
const PROV_HOPF: &str = "Hopf invariant normalization m^2 lambda n + k n^2 = ±n";
const PROV_BERGER: &str = "Sp(2)/Sp(1): d4(y3) = (a^2+b^2) p1, d8(y7) = a^2 b^2 p1^2, weights (1, 3)";

/// What a subcommand produced: the envelope, its text rendering and the
/// process exit code.
pub struct Outcome {
    pub envelope: OutputEnvelope,
    pub text: String,
    pub exit: u8,
}

pub const EXIT_YES: u8 = 0;
pub const EXIT_NO: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

fn exit_for(status: Status) -> u8 {
    match status {
        Status::Yes => EXIT_YES,
        Status::No | Status::Indeterminate => EXIT_NO,
    }
}

fn require_positive(n: &BigInt) -> Result<(), Error> {
    if *n < BigInt::from(1) {
        Err(Error::InvalidModulus(n.clone()))
    } else {
        Ok(())
    }
}

pub fn pl_regime(n: &BigInt) -> &'static str {
    if n.is_odd() {
        "n odd"
    } else if (n % 4u32) == BigInt::from(2) {
        "n/2 odd"
    } else {
        "indeterminate (n ≡ 0 mod 4)"
    }
}

fn verdict_text(out: &mut String, label: &str, v: &Verdict) {
    let _ = writeln!(out, "{label}: {} ({})", v.status, v.reason);
    if let Some(w) = &v.witnesses.standard {
        let _ = writeln!(out, "  standard witness: tau = {}, sign = {}", w.tau.value(), w.sign);
    }
    if let Some(h) = &v.witnesses.hopf {
        let _ = writeln!(out, "  hopf witness: m = {}, k = {}, sign = {}", h.m, h.k, h.sign);
    }
    if !v.witnesses.bundles.is_empty() {
        let bs: Vec<String> = v.witnesses.bundles.iter().map(|b| b.to_string()).collect();
        let _ = writeln!(out, "  bundles: {}", bs.join(", "));
    }
    for note in &v.notes {
        let _ = writeln!(out, "  note: {note}");
    }
}

pub fn check_form(n: &BigInt, lambda: &BigInt) -> Result<Outcome, Error> {
    require_positive(n)?;
    let form = LinkingForm::new(n.clone(), lambda.clone())?;
    let nondegenerate = is_nondegenerate(&form);
    let witness = if nondegenerate { is_standard(&form)? } else { None };
    let classes = square_class_count(n)?;

    let result = json!({
        "nondegenerate": nondegenerate,
        "standard": witness.is_some(),
        "witness": envelope::standard_witness(&witness),
        "square_class_count": int(&classes),
    });
    let mut text = format!("form: {form}\nnondegenerate: {nondegenerate}\n");
    match &witness {
        Some(w) => {
            let _ = writeln!(text, "standard: yes (tau = {}, sign = {})", w.tau.value(), w.sign);
        }
        None => text.push_str("standard: no\n"),
    }
    let _ = writeln!(text, "square classes on Z_{n}: {classes}");

    Ok(Outcome {
        envelope: OutputEnvelope::new(
            "check-form",
            json!({ "n": int(n), "lambda": int(lambda) }),
            result,
            &[PROV_STANDARD],
        ),
        text,
        exit: if witness.is_some() { EXIT_YES } else { EXIT_NO },
    })
}

pub fn classify(n: &BigInt) -> Result<Outcome, Error> {
    require_positive(n)?;
    let g = homotopy_modulus(n);
    let reps = enumerate_homotopy_types(n)?;
    let regime = pl_regime(n);
    let pl_note = match regime {
        "n odd" => "Wilkens data determines the PL type; each homotopy type is one PL type",
        "n/2 odd" => "two PL types per Wilkens datum, both realized by M_{m,n} and M_{m+n/2,n}",
        _ => "PL classification not decided for n = 0 mod 4",
    };
    let ms: Vec<Value> = reps.iter().map(|b| int(b.m())).collect();
    let result = json!({
        "g": int(&g),
        "representatives": ms,
        "count": reps.len(),
        "pl_regime": regime,
        "pl_notes": pl_note,
    });
    let rep_text: Vec<String> = reps.iter().map(|b| b.m().to_string()).collect();
    let text = format!(
        "n = {n}, gcd(n, 12) = {g}\noriented homotopy types: {}\nrepresentatives m: {}\nPL regime: {regime}\n  {pl_note}\n",
        reps.len(),
        rep_text.join(", ")
    );
    Ok(Outcome {
        envelope: OutputEnvelope::new(
            "classify",
            json!({ "n": int(n) }),
            result,
            &[PROV_JAMES_WHITEHEAD, PROV_PL_REGIMES],
        ),
        text,
        exit: EXIT_YES,
    })
}

pub fn wilkens(n: &BigInt, lambda: &BigInt, beta: &BigInt) -> Result<Outcome, Error> {
    require_positive(n)?;
    let data = WilkensData::new(LinkingForm::new(n.clone(), lambda.clone())?, beta.clone())?;
    let matches = wilkens_match(&data)?;
    let verdict = theorem3_decide(&data)?;
    let result = json!({
        "matches": matches.iter().map(|b| int(b.m())).collect::<Vec<_>>(),
        "verdict": envelope::verdict(&verdict),
    });
    let ms: Vec<String> = matches.iter().map(|b| b.m().to_string()).collect();
    let mut text = format!(
        "Wilkens data: {}, beta = {} x\nmatching m: {}\n",
        data.form(),
        data.beta_coeff().value(),
        if ms.is_empty() { "none".to_string() } else { ms.join(", ") }
    );
    verdict_text(&mut text, "PL-homeomorphic to a bundle", &verdict);
    Ok(Outcome {
        envelope: OutputEnvelope::new(
            "match",
            json!({ "n": int(n), "lambda": int(lambda), "beta": int(beta) }),
            result,
            &[PROV_WILKENS, PROV_PL_REGIMES, PROV_STANDARD],
        ),
        text,
        exit: exit_for(verdict.status),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Theta {
    Trivial,
    Nontrivial,
    Unknown,
}

impl Theta {
    fn as_option(self) -> Option<bool> {
        match self {
            Theta::Trivial => Some(true),
            Theta::Nontrivial => Some(false),
            Theta::Unknown => None,
        }
    }

    fn name(self) -> &'static str {
        match self {
            Theta::Trivial => "trivial",
            Theta::Nontrivial => "nontrivial",
            Theta::Unknown => "unknown",
        }
    }
}

pub fn decide(n: &BigInt, lambda: &BigInt, theta: Theta, manifold: bool) -> Result<Outcome, Error> {
    require_positive(n)?;
    let x = ComplexData::new(LinkingForm::new(n.clone(), lambda.clone())?, theta.as_option(), manifold)?;
    let general = theorem1_decide(&x)?;
    let refined = theorem4_decide(&x)?;
    let result = json!({
        "verdict": envelope::verdict(&refined),
        "general": envelope::verdict(&general),
    });
    let mut text = format!("complex: {}, Theta {}, manifold: {manifold}\n", x.form(), theta.name());
    verdict_text(&mut text, "homotopy equivalent to a bundle", &refined);
    if refined.status != general.status {
        verdict_text(&mut text, "general criterion alone", &general);
    }
    Ok(Outcome {
        envelope: OutputEnvelope::new(
            "decide",
            json!({
                "n": int(n),
                "lambda": int(lambda),
                "theta": theta.name(),
                "manifold": manifold,
            }),
            result,
            &[PROV_THETA, PROV_PRIME_POWER, PROV_STANDARD, PROV_JAMES_WHITEHEAD],
        ),
        text,
        exit: exit_for(refined.status),
    })
}

pub fn hopf(n: &BigInt, lambda: &BigInt) -> Result<Outcome, Error> {
    require_positive(n)?;
    let form = LinkingForm::new(n.clone(), lambda.clone())?;
    let witness = hopf_witness(&form)?;
    let lift = form.lambda().value().clone();
    let holds = witness.as_ref().map(|w| w.holds(n, &lift));
    let result = json!({
        "witness": envelope::hopf_witness(&witness),
        "lambda_lift": int(&lift),
        "hopf_invariant": witness.as_ref().map(|w| int(&w.hopf_invariant(n, &lift))),
        "identity_holds": holds,
    });
    let text = match &witness {
        Some(w) => format!(
            "lambda = {lift} mod {n}\nm = {}, k = {}, sign = {}\n{}^2 * {lift} * {n} + ({}) * {n}^2 = {}\n",
            w.m,
            w.k,
            w.sign,
            w.m,
            w.k,
            w.hopf_invariant(n, &lift)
        ),
        None => format!("lambda = {lift} mod {n}\nno witness: linking form is not standard\n"),
    };
    Ok(Outcome {
        envelope: OutputEnvelope::new(
            "hopf-witness",
            json!({ "n": int(n), "lambda": int(lambda) }),
            result,
            &[PROV_HOPF, PROV_STANDARD],
        ),
        text,
        exit: if witness.is_some() { EXIT_YES } else { EXIT_NO },
    })
}

pub fn berger() -> Outcome {
    let r = berger_report();
    let (a, b) = r.weights.weights();
    let cohomology: serde_json::Map<String, Value> = r
        .cohomology
        .profile
        .degrees()
        .map(|(d, g)| (d.to_string(), Value::String(g.to_string())))
        .collect();
    let orientations: Vec<Value> = r
        .orientations
        .iter()
        .map(|o| {
            json!({
                "lambda": int(o.form.lambda().value()),
                "standard": o.witness.is_some(),
                "witness": envelope::standard_witness(&o.witness),
            })
        })
        .collect();
    let candidates: Vec<Value> = r
        .beta_candidates
        .iter()
        .map(|c| {
            json!({
                "beta_coeff": int(&c.beta_coeff),
                "bundles": c.bundles.iter().map(|b| int(b.m())).collect::<Vec<_>>(),
                "status": c.pl.status.to_string(),
            })
        })
        .collect();
    let result = json!({
        "weights": [int(a), int(b)],
        "pullback": {
            "p1_coeff": int(&r.cohomology.pullback.p1_coeff),
            "p2_coeff": int(&r.cohomology.pullback.p2_coeff),
        },
        "cohomology": cohomology,
        "n": int(&r.n),
        "orientations": orientations,
        "linking_standard": r.linking_standard,
        "homotopy": envelope::verdict(&r.homotopy),
        "homotopy_types": r.homotopy_types.iter().map(|b| int(b.m())).collect::<Vec<_>>(),
        "beta": "unknown",
        "beta_candidates": candidates,
        "pl_bundle": r.pl_bundle.to_string(),
    });

    let mut text = String::new();
    let _ = writeln!(text, "Berger space Sp(2)/Sp(1), torus weights ({a}, {b})");
    let _ = writeln!(
        text,
        "pullback: p1 -> {} p1, p2 -> {} p1^2",
        r.cohomology.pullback.p1_coeff, r.cohomology.pullback.p2_coeff
    );
    let _ = writeln!(text, "cohomology: {}", r.cohomology.profile);
    let _ = writeln!(
        text,
        "  nothing survives in degrees 8..={EXTRA_DEGREE_LIMIT}: {}",
        r.cohomology.is_sphere_bundle_like()
    );
    for o in &r.orientations {
        match &o.witness {
            Some(w) => {
                let _ = writeln!(
                    text,
                    "linking form lambda = {}: standard (tau = {}, sign = {})",
                    o.form.lambda().value(),
                    w.tau.value(),
                    w.sign
                );
            }
            None => {
                let _ = writeln!(text, "linking form lambda = {}: not standard", o.form.lambda().value());
            }
        }
    }
    verdict_text(&mut text, "homotopy equivalent to a bundle", &r.homotopy);
    let _ = writeln!(text, "spin class beta: unknown; PL candidates by beta:");
    for c in &r.beta_candidates {
        let ms: Vec<String> = c.bundles.iter().map(|b| b.m().to_string()).collect();
        let _ = writeln!(text, "  beta = {} x: m in {{{}}} ({})", c.beta_coeff, ms.join(", "), c.pl.status);
    }
    let _ = writeln!(text, "PL-homeomorphic to a bundle: {}", r.pl_bundle);

    Outcome {
        envelope: OutputEnvelope::new(
            "berger",
            json!({}),
            result,
            &[PROV_BERGER, PROV_THETA, PROV_WILKENS, PROV_PL_REGIMES, PROV_JAMES_WHITEHEAD],
        ),
        text,
        exit: exit_for(r.pl_bundle),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn regimes() {
        assert_eq!(pl_regime(&BigInt::from(1)), "n odd");
        assert_eq!(pl_regime(&BigInt::from(10)), "n/2 odd");
        assert_eq!(pl_regime(&BigInt::from(12)), "indeterminate (n ≡ 0 mod 4)");
    }

    #[test]
    fn check_form_payload() {
        let o = check_form(&BigInt::from(10), &BigInt::from(9)).unwrap();
        assert_eq!(o.exit, EXIT_YES);
        assert_eq!(o.envelope.result["witness"]["tau"], json!(3));
        assert_eq!(o.envelope.result["witness"]["sign"], json!(1));
        let o = check_form(&BigInt::from(10), &BigInt::from(4)).unwrap();
        assert_eq!(o.envelope.result["nondegenerate"], json!(false));
        assert_eq!(o.exit, EXIT_NO);
    }

    #[test]
    fn invalid_inputs_are_errors() {
        assert!(check_form(&BigInt::from(0), &BigInt::from(1)).is_err());
        assert!(classify(&BigInt::from(-3)).is_err());
        assert!(wilkens(&BigInt::from(10), &BigInt::from(1), &BigInt::from(3)).is_err());
        assert!(hopf(&BigInt::from(10), &BigInt::from(5)).is_err());
    }
}
