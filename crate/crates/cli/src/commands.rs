//! Subcommand bodies, generic over the working precision.

use clap::ValueEnum;
use lagsum_core::analyzer::CoefficientSource;
use lagsum_core::analyzer::{
    classify, transform_to_power_series, AnalyticityVerdict, CoefficientStatus, DecayClass, Method, PowerSeriesResult,
};
use lagsum_core::families::FamilyKind;
use lagsum_core::hypergeom::HypSeriesSpec;
use lagsum_core::seqtransform::summate;
use lagsum_core::{PrecisionContext, Real};
use serde_json::{json, Map, Value};

use crate::render::{aligned, csv, json_number, number};
use crate::series_file::{self, parse_number};
use crate::tables::{self, Table, Which};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Delta,
    #[value(name = "d", alias = "levin-d")]
    LevinD,
    Epsilon,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Delta => Method::Delta,
            MethodArg::LevinD => Method::LevinD,
            MethodArg::Epsilon => Method::Epsilon,
        }
    }
}

/// What a command printed and how the process should exit.
pub struct Output {
    pub text: String,
    pub code: u8,
}

impl Output {
    fn ok(text: String) -> Self {
        Self { text, code: 0 }
    }
}

fn table_text(t: &Table, format: Format) -> String {
    let header: Vec<&str> = t.header.iter().map(String::as_str).collect();
    match format {
        Format::Text => aligned(&header, &t.rows),
        Format::Csv => csv(&header, &t.rows),
        Format::Json => {
            let rows: Vec<Value> = t
                .rows
                .iter()
                .map(|row| {
                    let obj: Map<String, Value> = t
                        .header
                        .iter()
                        .zip(row)
                        .map(|(h, cell)| {
                            let v = if cell.is_empty() {
                                Value::Null
                            } else {
                                serde_json::from_str::<serde_json::Number>(cell)
                                    .map(Value::Number)
                                    .unwrap_or_else(|_| Value::String(cell.clone()))
                            };
                            (h.clone(), v)
                        })
                        .collect();
                    Value::Object(obj)
                })
                .collect();
            pretty(&Value::Array(rows))
        }
    }
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values always serialise");
    s.push('\n');
    s
}

pub fn table<T: Real>(which: Which, format: Option<Format>, ctx: &PrecisionContext) -> Result<Output, String> {
    let t = tables::build::<T>(which, ctx).map_err(|e| e.to_string())?;
    Ok(Output::ok(table_text(&t, format.unwrap_or(Format::Text))))
}

pub struct SumArgs {
    pub p: Option<usize>,
    pub num: Vec<String>,
    pub den: Vec<String>,
    pub z: String,
    pub nu: usize,
    pub method: MethodArg,
    pub terms: usize,
    pub beta: String,
}

pub fn sum<T: Real>(args: &SumArgs, format: Option<Format>, ctx: &PrecisionContext) -> Result<Output, String> {
    let p = args.p.unwrap_or(args.den.len());
    if args.den.len() != p || args.num.len() != p + 1 {
        return Err(format!(
            "--p {p} needs {} numerator and {p} denominator parameters, got {} and {}",
            p + 1,
            args.num.len(),
            args.den.len()
        ));
    }
    if args.terms == 0 {
        return Err("--terms must be at least 1".into());
    }
    let parse_all = |v: &[String]| v.iter().map(|x| parse_number::<T>(x)).collect::<Result<Vec<T>, String>>();
    let spec = HypSeriesSpec::new(parse_all(&args.num)?, parse_all(&args.den)?, parse_number(&args.z)?, args.nu)
        .map_err(|e| e.to_string())?;
    let beta: T = parse_number(&args.beta)?;
    let sums = spec.partial_sums(args.terms).map_err(|e| e.to_string())?;
    let r = summate(&sums, args.method.into(), beta, ctx).map_err(|e| e.to_string())?;
    let status = format!("{:?}", r.status);
    let text = match format.unwrap_or(Format::Text) {
        Format::Text => format!(
            "value      {}\nstatus     {status}\nstability  {}\norder      {}\n",
            number(r.value),
            number(r.stability),
            r.order_used
        ),
        Format::Csv => csv(
            &["value", "status", "stability", "order"],
            &[vec![number(r.value), status, number(r.stability), r.order_used.to_string()]],
        ),
        Format::Json => pretty(&json!({
            "value": json_number(r.value),
            "status": status,
            "stability": json_number(r.stability),
            "order": r.order_used,
        })),
    };
    Ok(Output::ok(text))
}

fn verdict_json(v: &AnalyticityVerdict) -> Value {
    let decay = match v.decay_class {
        DecayClass::Algebraic { exponent } => json!({"kind": "Algebraic", "exponent": json_number(exponent)}),
        DecayClass::Exponential { ratio } => json!({"kind": "Exponential", "ratio": json_number(ratio)}),
        DecayClass::Factorial { scale } => json!({"kind": "Factorial", "scale": json_number(scale)}),
        DecayClass::Undetermined => json!({"kind": "Undetermined"}),
    };
    json!({
        "sign_pattern": format!("{:?}", v.sign_pattern),
        "decay_class": decay,
        "regime": format!("{:?}", v.regime),
        "fit_residual": json_number(v.fit_residual),
    })
}

fn decay_text(d: DecayClass) -> String {
    match d {
        DecayClass::Algebraic { exponent } => format!("Algebraic (exponent {})", number(exponent)),
        DecayClass::Exponential { ratio } => format!("Exponential (ratio {})", number(ratio)),
        DecayClass::Factorial { scale } => format!("Factorial (scale {})", number(scale)),
        DecayClass::Undetermined => "Undetermined".into(),
    }
}

fn verdict_text(v: &AnalyticityVerdict) -> String {
    format!(
        "sign pattern  {:?}\ndecay         {}\nregime        {:?}\nfit residual  {}\n",
        v.sign_pattern,
        decay_text(v.decay_class),
        v.regime,
        number(v.fit_residual)
    )
}

fn verdict_csv(v: &AnalyticityVerdict) -> String {
    let (kind, parameter) = match v.decay_class {
        DecayClass::Algebraic { exponent } => ("Algebraic", number(exponent)),
        DecayClass::Exponential { ratio } => ("Exponential", number(ratio)),
        DecayClass::Factorial { scale } => ("Factorial", number(scale)),
        DecayClass::Undetermined => ("Undetermined", String::new()),
    };
    csv(
        &["sign_pattern", "decay_class", "decay_parameter", "regime", "fit_residual"],
        &[vec![
            format!("{:?}", v.sign_pattern),
            kind.into(),
            parameter,
            format!("{:?}", v.regime),
            number(v.fit_residual),
        ]],
    )
}

fn read(path: &str) -> Result<String, String> {
    std::fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))
}

pub fn classify_file<T: Real>(path: &str, format: Option<Format>, window: Option<usize>) -> Result<Output, String> {
    let file = series_file::parse::<T>(&read(path)?).map_err(|e| format!("{path}: {e}"))?;
    let v = classify(&file.series, window).map_err(|e| e.to_string())?;
    let text = match format.unwrap_or(Format::Json) {
        Format::Json => pretty(&verdict_json(&v)),
        Format::Text => verdict_text(&v),
        Format::Csv => verdict_csv(&v),
    };
    Ok(Output::ok(text))
}

pub struct TransformArgs {
    pub max_nu: usize,
    pub budget: usize,
    pub method: MethodArg,
}

fn gamma_rows<T: Real>(r: &PowerSeriesResult<T>) -> Vec<Vec<String>> {
    r.gammas
        .iter()
        .map(|g| vec![g.nu.to_string(), number(g.value), format!("{:?}", g.status), number(g.stability)])
        .collect()
}

pub fn transform_file<T: Real>(
    path: &str,
    args: &TransformArgs,
    format: Option<Format>,
    ctx: &PrecisionContext,
) -> Result<Output, String> {
    let file = series_file::parse::<T>(&read(path)?).map_err(|e| format!("{path}: {e}"))?;
    if let CoefficientSource::Family(f) = file.series.source() {
        if matches!(f.kind(), FamilyKind::ExpPower { .. }) {
            return Err("exp_power series can be classified but not transformed".into());
        }
    }
    let r = transform_to_power_series(&file.series, args.max_nu, args.budget, args.method.into(), ctx)
        .map_err(|e| e.to_string())?;
    let text = match format.unwrap_or(Format::Json) {
        Format::Json => {
            let gammas: Vec<Value> = r
                .gammas
                .iter()
                .map(|g| {
                    json!({
                        "nu": g.nu,
                        "value": json_number(g.value),
                        "status": format!("{:?}", g.status),
                        "stability": json_number(g.stability),
                    })
                })
                .collect();
            pretty(&json!({
                "verdict": r.verdict.as_ref().map(verdict_json),
                "gammas": gammas,
                "exists": r.exists,
            }))
        }
        Format::Csv => csv(&["nu", "value", "status", "stability"], &gamma_rows(&r)),
        Format::Text => {
            let mut s = aligned(&["nu", "value", "status", "stability"], &gamma_rows(&r));
            s.push('\n');
            match &r.verdict {
                Some(v) => s.push_str(&verdict_text(v)),
                None => s.push_str("verdict       unavailable\n"),
            }
            s.push_str(&format!("exists        {}\n", r.exists));
            s
        }
    };
    let failed = r.gammas.iter().any(|g| g.status == CoefficientStatus::Failed);
    Ok(Output { text, code: if failed { 2 } else { 0 } })
}
