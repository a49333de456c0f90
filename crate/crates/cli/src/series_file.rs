//! Laguerre coefficient files.
//!
//! Two JSON layouts are accepted:
//!
//! ```text
//! {"alpha": 0, "coefficients": [1, "-0.5", "1/3"], "truncated": false}
//! {"alpha": 0, "family": "alt_power", "params": {"rho": 0.5}}
//! ```
//!
//! Numbers may be JSON numbers, decimal strings or `"p/q"` strings; they are
//! parsed from their text so no precision is lost on the way in. An explicit
//! list is a finite sum unless `truncated` is true.

use lagsum_core::analyzer::LaguerreSeries;
use lagsum_core::families::CoefficientFamily;
use lagsum_core::laguerre::{FiniteLaguerreSum, LaguerreParams};
use lagsum_core::Real;
use serde_json::{Map, Value};

pub struct SeriesFile<T> {
    pub series: LaguerreSeries<T>,
}

pub fn parse_number<T: Real>(text: &str) -> Result<T, String> {
    let text = text.trim();
    let value = match text.split_once('/') {
        Some((p, q)) => {
            let p = T::parse_decimal(p.trim());
            let q = T::parse_decimal(q.trim());
            match (p, q) {
                (Some(p), Some(q)) if q != T::zero() => Some(p / q),
                _ => None,
            }
        }
        None => T::parse_decimal(text),
    };
    value.filter(|v| v.is_finite()).ok_or_else(|| format!("not a number: {text:?}"))
}

fn number<T: Real>(v: &Value, what: &str) -> Result<T, String> {
    match v {
        Value::Number(n) => parse_number(&n.to_string()),
        Value::String(s) => parse_number(s),
        _ => Err(format!("{what} must be a number")),
    }
    .map_err(|e| format!("{what}: {e}"))
}

fn list<T: Real>(v: &Value, what: &str) -> Result<Vec<T>, String> {
    let items = v.as_array().ok_or_else(|| format!("{what} must be a list"))?;
    items.iter().enumerate().map(|(i, x)| number(x, &format!("{what}[{i}]"))).collect()
}

fn param<T: Real>(params: &Map<String, Value>, key: &str) -> Result<T, String> {
    let v = params.get(key).ok_or_else(|| format!("missing parameter {key:?}"))?;
    number(v, key)
}

fn param_list<T: Real>(params: &Map<String, Value>, key: &str) -> Result<Vec<T>, String> {
    let v = params.get(key).ok_or_else(|| format!("missing parameter {key:?}"))?;
    list(v, key)
}

fn family<T: Real>(name: &str, params: &Map<String, Value>, alpha: T) -> Result<CoefficientFamily<T>, String> {
    let p = |k| param::<T>(params, k);
    let built = match name {
        "power" => CoefficientFamily::power(p("rho")?, alpha),
        "alt_power" => CoefficientFamily::alt_power(p("rho")?, alpha),
        "geometric" => CoefficientFamily::geometric(p("t")?, alpha),
        "geometric_power" => CoefficientFamily::geometric_power(p("rho")?, p("s")?, alpha),
        "factorial" => CoefficientFamily::factorial(p("s")?, alpha),
        "hyp_ratio" => CoefficientFamily::hyp_ratio(p("a")?, p("b")?, p("c")?, alpha),
        "hyp_ratio_general" => CoefficientFamily::hyp_ratio_general(
            param_list(params, "numerators")?,
            param_list(params, "denominators")?,
            alpha,
        ),
        "exp_power" => CoefficientFamily::exp_power(p("rho")?, p("u")?, alpha),
        other => return Err(format!("unknown family {other:?}")),
    };
    built.map_err(|e| format!("family {name}: {e}"))
}

pub fn parse<T: Real>(text: &str) -> Result<SeriesFile<T>, String> {
    let root: Value = serde_json::from_str(text).map_err(|e| format!("malformed JSON: {e}"))?;
    let obj = root.as_object().ok_or("the file must hold a JSON object")?;
    let alpha: T = number(obj.get("alpha").ok_or("missing \"alpha\"")?, "alpha")?;
    let params = LaguerreParams::new(alpha).map_err(|e| format!("alpha: {e}"))?;
    match (obj.get("coefficients"), obj.get("family")) {
        (Some(c), None) => {
            let coeffs = list::<T>(c, "coefficients")?;
            if coeffs.is_empty() {
                return Err("coefficients must not be empty".into());
            }
            let truncated = match obj.get("truncated") {
                None => false,
                Some(Value::Bool(b)) => *b,
                Some(_) => return Err("truncated must be true or false".into()),
            };
            let series = if truncated {
                LaguerreSeries::explicit(params, coeffs).map_err(|e| e.to_string())?
            } else {
                let sum = FiniteLaguerreSum::new(params, coeffs).map_err(|e| e.to_string())?;
                LaguerreSeries::finite(&sum)
            };
            Ok(SeriesFile { series })
        }
        (None, Some(name)) => {
            let name = name.as_str().ok_or("family must be a string")?;
            let empty = Map::new();
            let params = match obj.get("params") {
                None => &empty,
                Some(p) => p.as_object().ok_or("params must be an object")?,
            };
            let f = family(name, params, alpha)?;
            Ok(SeriesFile { series: LaguerreSeries::family(f) })
        }
        (Some(_), Some(_)) => Err("give either coefficients or a family, not both".into()),
        (None, None) => Err("missing \"coefficients\" or \"family\"".into()),
    }
}
