use std::ops::RangeInclusive;

use altsum_core::family::CertificateEntry;
use altsum_core::{
    alt_sum_naive, alt_sum_poly, brute_force_search, discover_families, prove_symbolic,
    search_structured, to_u_form, Degree, Error, ExactInt, FamilySpec, HalfInt, IdentityInstance,
    Parity, RhsForm, SearchConfig, SearchLimits, SearchMethod,
};
use num_traits::{Signed, Zero};
use serde_json::json;

use crate::output::Outcome;

pub type CmdResult = Result<Outcome, Error>;

/// Parses `A..B` (inclusive) or a single value `A`.
pub fn parse_range(text: &str) -> Result<RangeInclusive<u32>, String> {
    let bad = || format!("expected A..B, got {text:?}");
    let (lo, hi) = text.split_once("..").unwrap_or((text, text));
    let lo: u32 = lo.trim().parse().map_err(|_| bad())?;
    let hi: u32 = hi.trim().parse().map_err(|_| bad())?;
    if lo > hi {
        return Err(bad());
    }
    Ok(lo..=hi)
}

pub fn eval(x: &HalfInt, d: u32) -> CmdResult {
    let d = Degree::new(d)?;
    let naive = alt_sum_naive(x, d);
    let x_poly = alt_sum_poly(d).to_rat().eval(&x.to_ratio());
    let u = x.u();
    let u_form = to_u_form(d).eval_int(&u);
    let agree = naive == x_poly && naive == u_form;

    let mut out = Outcome::new(agree);
    out.payload(json!({
        "x": x.to_string(),
        "u": u.to_string(),
        "degree": d.get(),
        "naive": naive.to_string(),
        "x_poly": x_poly.to_string(),
        "u_form": u_form.to_string(),
        "agree": agree,
    }));
    out.line(format!("S_{d}({x}) = {naive}"));
    out.line(format!("  naive:   {naive}"));
    out.line(format!("  x-poly:  {x_poly}"));
    out.line(format!("  u-form:  {u_form}  (u = {u})"));
    if !agree {
        out.line("MISMATCH between evaluation routes");
    }
    Ok(out)
}

fn rhs_text(b: u32, exponents: &[u32], constant: &ExactInt) -> String {
    let mut sorted = exponents.to_vec();
    sorted.sort_unstable();
    let mut text = sorted
        .iter()
        .map(|e| format!("{b}^{e}"))
        .collect::<Vec<_>>()
        .join(" + ");
    if !constant.is_zero() {
        let sign = if constant.is_negative() { "-" } else { "+" };
        if text.is_empty() {
            text = constant.to_string();
        } else {
            text = format!("{text} {sign} {}", constant.abs());
        }
    } else if text.is_empty() {
        text = "0".into();
    }
    text
}

fn table_line(f: &FamilySpec, inst: &IdentityInstance) -> String {
    let mut line = format!(
        "k={}  x={}  S_{}(x) = {}",
        inst.k(),
        inst.x(),
        f.degree(),
        rhs_text(f.base(), inst.exponents(), f.constant())
    );
    if !inst.holds() {
        line.push_str(&format!(
            "   FAILS: lhs {} vs rhs {}",
            inst.lhs(),
            inst.rhs()
        ));
    }
    line
}

pub fn table(f: &FamilySpec, ks: RangeInclusive<u32>, relaxed: bool) -> CmdResult {
    let mut out = Outcome::new(true);
    for k in ks {
        let inst = if relaxed {
            f.instantiate_relaxed(k)?
        } else {
            f.instantiate(k)?
        };
        out.ok &= inst.holds();
        out.line(table_line(f, &inst));
        let mut payload = serde_json::to_value(&inst).expect("instances serialize");
        payload["family"] = json!(f.name());
        payload["line"] = json!(table_line(f, &inst));
        out.payload(payload);
    }
    Ok(out)
}

pub fn verify(f: &FamilySpec, k_max: u32) -> CmdResult {
    let report = f.verify_range(k_max)?;
    let mut out = Outcome::new(report.all_hold());
    out.line(format!(
        "{} [{}]: {} of {} instances hold for k = {}..{}",
        f.name(),
        f,
        report.holds,
        report.holds + report.fails,
        report.k_min,
        report.k_max
    ));
    if let Some(first) = report.failures.first() {
        out.line(format!(
            "first failure at k={}: lhs {} vs rhs {}",
            first.k(),
            first.lhs(),
            first.rhs()
        ));
    }
    out.payload(json!({ "family_spec": f.to_string(), "report": report }));
    Ok(out)
}

pub fn prove(f: &FamilySpec) -> CmdResult {
    let proof = prove_symbolic(f);
    let mut out = Outcome::new(proof.proven);
    out.line(format!("family {}: {}", f.name(), f));
    out.line(format!("u-form (u = 2x + 3): {}", proof.u_form));
    let b = f.base();
    for entry in &proof.certificate {
        out.line(match entry {
            CertificateEntry::Power { power, coeff, beta } => {
                let term = altsum_core::PowerTerm::new(*power, i64::from(*beta));
                format!("  c{power} = {coeff} = {b}^{beta} -> {b}^({term})")
            }
            CertificateEntry::Constant { value } => format!("  c0 = {value} -> constant {value}"),
        });
    }
    match &proof.failure_reason {
        None => out.line(format!("proven for all k >= {} (u = {b}^k)", f.k_min())),
        Some(reason) => out.line(format!("NOT proven: {reason}")),
    }
    out.payload(json!({ "family_spec": f.to_string(), "proof": proof }));
    Ok(out)
}

pub struct SearchArgs {
    pub d: u32,
    pub b: u32,
    pub rhs: RhsForm,
    pub n_max: u32,
    pub u_max: u64,
    pub parity: Parity,
    pub prune: bool,
    pub brute_force: bool,
}

pub fn search(args: &SearchArgs) -> CmdResult {
    let limits = SearchLimits::new(args.n_max, args.u_max, args.parity)?;
    let cfg = SearchConfig::new(args.d, args.b, args.rhs.clone(), limits)?.with_prune(args.prune);
    let report = if args.brute_force {
        brute_force_search(&cfg)?
    } else {
        search_structured(&cfg)?
    };

    let mut out = Outcome::new(report.all_verified());
    let method = match report.method {
        SearchMethod::Structured => "structured",
        SearchMethod::BruteForce => "brute-force",
    };
    out.line(format!(
        "S_{}(x) = {} over base {}: {} solution(s) [{method}, {} candidates, {} pruned]",
        report.d,
        report.rhs,
        report.b,
        report.solutions.len(),
        report.candidates,
        report.pruned
    ));
    out.line(format!("complete for {}", report.completeness));
    for s in &report.solutions {
        let exps = match s.exponents {
            altsum_core::Exponents::Two { m, n } => format!("m={m} n={n}"),
            altsum_core::Exponents::One { m } => format!("m={m}"),
        };
        let flag = if s.verified { "" } else { "  UNVERIFIED" };
        out.line(format!("u={}  x={}  {exps}{flag}", s.u, s.x));
    }
    out.payload(&report);
    Ok(out)
}

pub fn discover(
    degrees: RangeInclusive<u32>,
    bases: RangeInclusive<u32>,
    allow_const: bool,
) -> CmdResult {
    let found = discover_families(degrees, bases, allow_const)?;
    let mut out = Outcome::new(found.iter().all(|(_, p)| p.proven));
    out.line(format!(
        "{} famil{} found",
        found.len(),
        if found.len() == 1 { "y" } else { "ies" }
    ));
    let families: Vec<_> = found
        .iter()
        .map(|(f, proof)| {
            out.line(format!(
                "{f}    u-form {}    proven={}",
                proof.u_form, proof.proven
            ));
            json!({ "family": f, "family_spec": f.to_string(), "proof": proof })
        })
        .collect();
    out.payload(json!({ "families": families }));
    Ok(out)
}
