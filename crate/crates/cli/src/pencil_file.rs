//! Pencil files: `{"w": {...}, "wp": {...}, "field": {"prime": "p"}}` with string-valued entries.

use bertini_core::ring::{Domain, Scalar};
use bertini_core::verify::is_odd_prime;
use bertini_core::PencilSpec;
use serde_json::Value;

const KEYS: [&str; 7] = ["a1", "a2", "b1", "b2", "b3", "c1", "c2"];

fn block(doc: &Value, name: &str, domain: Domain) -> Result<[Scalar; 7], String> {
    let obj = doc.get(name).and_then(Value::as_object).ok_or_else(|| format!("missing object {name:?}"))?;
    if let Some(extra) = obj.keys().find(|k| !KEYS.contains(&k.as_str())) {
        return Err(format!("unknown key {extra:?} in {name:?}"));
    }
    let mut out = Vec::with_capacity(7);
    for key in KEYS {
        let text = match obj.get(key) {
            Some(Value::String(s)) => s,
            Some(_) => return Err(format!("{name}.{key} must be a string")),
            None => return Err(format!("missing {name}.{key}")),
        };
        let s = Scalar::parse_in(text, domain).map_err(|e| format!("{name}.{key}: {e}"))?;
        out.push(s);
    }
    Ok(out.try_into().expect("seven entries"))
}

fn field(doc: &Value) -> Result<Domain, String> {
    let Some(field) = doc.get("field") else {
        return Ok(Domain::Rational);
    };
    let prime = field
        .get("prime")
        .and_then(Value::as_str)
        .ok_or("field.prime must be a string")?
        .parse::<u64>()
        .map_err(|e| format!("field.prime: {e}"))?;
    if !is_odd_prime(prime) {
        return Err(format!("field.prime {prime} is not an odd prime"));
    }
    Ok(Domain::Prime(prime))
}

pub fn parse(text: &str) -> Result<PencilSpec, String> {
    let doc: Value = serde_json::from_str(text).map_err(|e| format!("invalid JSON: {e}"))?;
    let obj = doc.as_object().ok_or("pencil file must be a JSON object")?;
    if let Some(extra) = obj.keys().find(|k| !["w", "wp", "field"].contains(&k.as_str())) {
        return Err(format!("unknown top-level key {extra:?}"));
    }
    let domain = field(&doc)?;
    let w = block(&doc, "w", domain)?;
    let wp = block(&doc, "wp", domain)?;
    PencilSpec::concrete(&w, &wp).map_err(|e| e.to_string())
}

pub fn load(path: &std::path::Path) -> Result<PencilSpec, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    parse(&text)
}

#[cfg(test)]
mod tests {
    use super::*;
    use bertini_core::ring::Variable;

    const OK: &str = r#"{"w": {"a1": "1", "a2": "-2", "b1": "3/6", "b2": "0", "b3": "1", "c1": "4", "c2": "5"},
                         "wp": {"a1": "0", "a2": "1", "b1": "1", "b2": "1", "b3": "1", "c1": "1", "c2": "7/3"}}"#;

    #[test]
    fn reads_rationals_reduced() {
        let spec = parse(OK).unwrap();
        assert_eq!(spec.domain(), Domain::Rational);
        assert_eq!(spec.value(Variable::B1).unwrap().to_string(), "1/2");
        assert_eq!(spec.value(Variable::C2p).unwrap().to_string(), "7/3");
    }

    #[test]
    fn reads_residues() {
        let text = OK.replacen('{', r#"{"field": {"prime": "101"}, "#, 1);
        let spec = parse(&text).unwrap();
        assert_eq!(spec.domain(), Domain::Prime(101));
        assert_eq!(spec.value(Variable::A2).unwrap().to_string(), "99");
        assert_eq!(spec.value(Variable::B1).unwrap().to_string(), "51");
    }

    #[test]
    fn rejects_malformed_files() {
        assert!(parse(&OK.replace(r#""c2": "5""#, r#""c2": 5"#)).unwrap_err().contains("must be a string"));
        assert!(parse(&OK.replace(r#", "c2": "5""#, "")).unwrap_err().contains("missing w.c2"));
        assert!(parse(&OK.replace("\"b2\": \"0\"", "\"b9\": \"0\"")).unwrap_err().contains("unknown key"));
        assert!(parse(&OK.replacen('{', r#"{"field": {"prime": "100"}, "#, 1)).unwrap_err().contains("odd prime"));
        assert!(parse(&OK.replace("3/6", "3/0")).is_err());
        assert!(parse("[]").is_err());
    }
}
