//! Advisory lookups against the OEIS search endpoint.
//!
//! Networking is off unless the caller passes `online = true`, and
//! `QEW_OFFLINE=1` disables it regardless. `QEW_OEIS_BASE_URL` replaces the
//! default host, which is how the tests point it at a local server.

use std::time::Duration;

use num_bigint::BigInt;
use serde_json::Value;

use crate::error::{Error, Result};

pub const DEFAULT_BASE_URL: &str = "https://oeis.org";
pub const MIN_LOOKUP_TERMS: usize = 6;

const RETRY_BACKOFF: Duration = Duration::from_millis(750);
const TIMEOUT: Duration = Duration::from_secs(20);

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OeisHit {
    pub id: String,
    pub name: String,
}

fn base_url() -> String {
    std::env::var("QEW_OEIS_BASE_URL")
        .ok()
        .filter(|s| !s.is_empty())
        .unwrap_or_else(|| DEFAULT_BASE_URL.to_string())
}

fn offline_forced() -> bool {
    std::env::var("QEW_OFFLINE").is_ok_and(|v| v == "1")
}

/// Sequences whose terms contain `prefix`, from the endpoint named by
/// `QEW_OEIS_BASE_URL` or the public one.
pub fn oeis_lookup(prefix: &[BigInt], online: bool) -> Result<Vec<OeisHit>> {
    oeis_lookup_at(&base_url(), prefix, online)
}

/// As [`oeis_lookup`] against an explicit base URL.
pub fn oeis_lookup_at(base: &str, prefix: &[BigInt], online: bool) -> Result<Vec<OeisHit>> {
    if offline_forced() {
        return Err(Error::Offline("QEW_OFFLINE=1 is set".into()));
    }
    if !online {
        return Err(Error::Offline("pass --online to query OEIS".into()));
    }
    if prefix.len() < MIN_LOOKUP_TERMS {
        return Err(Error::InvalidInput(format!(
            "an OEIS lookup needs at least {MIN_LOOKUP_TERMS} terms, got {}",
            prefix.len()
        )));
    }
    let terms: Vec<String> = prefix.iter().map(ToString::to_string).collect();
    let url = format!("{}/search", base.trim_end_matches('/'));
    let agent = ureq::AgentBuilder::new().timeout(TIMEOUT).build();
    let fetch = || {
        agent
            .get(&url)
            .query("q", &terms.join(","))
            .query("fmt", "json")
            .call()
            .map_err(Box::new)
    };
    let response = match fetch() {
        Ok(r) => r,
        Err(e) if retryable(&e) => {
            std::thread::sleep(RETRY_BACKOFF);
            fetch().map_err(describe)?
        }
        Err(e) => return Err(describe(e)),
    };
    let text = response
        .into_string()
        .map_err(|e| Error::Http(format!("unreadable response body: {e}")))?;
    let body: Value =
        serde_json::from_str(&text).map_err(|e| Error::Http(format!("response is not JSON: {e}")))?;
    parse_hits(&body)
}

fn retryable(e: &ureq::Error) -> bool {
    match e {
        ureq::Error::Status(code, _) => *code == 429 || *code >= 500,
        ureq::Error::Transport(_) => true,
    }
}

fn describe(e: Box<ureq::Error>) -> Error {
    match *e {
        ureq::Error::Status(code, _) => Error::Http(format!("status {code}")),
        ureq::Error::Transport(t) => Error::Http(t.to_string()),
    }
}

/// Accepts the current bare-array format, the older `{"results": [...]}`
/// wrapper, and `null` for no matches.
fn parse_hits(body: &Value) -> Result<Vec<OeisHit>> {
    let entries = match body {
        Value::Null => return Ok(Vec::new()),
        Value::Array(a) => a,
        Value::Object(o) => match o.get("results") {
            Some(Value::Array(a)) => a,
            Some(Value::Null) | None => return Ok(Vec::new()),
            Some(_) => return Err(Error::Http("'results' is not a list".into())),
        },
        _ => return Err(Error::Http("unexpected response shape".into())),
    };
    entries
        .iter()
        .map(|e| {
            let number = e
                .get("number")
                .and_then(Value::as_u64)
                .ok_or_else(|| Error::Http("result without a sequence number".into()))?;
            let name = e.get("name").and_then(Value::as_str).unwrap_or_default();
            Ok(OeisHit {
                id: format!("A{number:06}"),
                name: name.to_string(),
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn both_response_shapes() {
        let bare = json!([{"number": 1006, "name": "Motzkin numbers"}]);
        let wrapped = json!({"results": [{"number": 1006, "name": "Motzkin numbers"}]});
        let want = vec![OeisHit {
            id: "A001006".into(),
            name: "Motzkin numbers".into(),
        }];
        assert_eq!(parse_hits(&bare).unwrap(), want);
        assert_eq!(parse_hits(&wrapped).unwrap(), want);
        assert!(parse_hits(&Value::Null).unwrap().is_empty());
        assert!(parse_hits(&json!({"results": null})).unwrap().is_empty());
        assert!(parse_hits(&json!([{"name": "x"}])).is_err());
    }

    #[test]
    fn offline_by_default() {
        let terms: Vec<BigInt> = [1, 1, 2, 4, 9, 21].map(BigInt::from).to_vec();
        assert!(matches!(oeis_lookup(&terms, false), Err(Error::Offline(_))));
    }
}
