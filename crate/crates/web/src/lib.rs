//! Browser bindings. Every function takes document text and returns a plain
//! text report; errors come back as `error: ...` lines rather than exceptions.

use std::fmt::Write as _;

use lsa_core::algebra::Algebra;
use lsa_core::catalog::{format_bindings, Bindings, Catalog};
use lsa_core::cocycle::phi;
use lsa_core::exact::{canonical_var, parse_scalar, Gq};
use lsa_core::format::{algebra_at, parse_document, Document, Payload};
use lsa_core::iso::search_lsa_iso;
use lsa_core::lie::classify3;
use lsa_core::props::{fingerprint, is_semisimple, is_simple};
use wasm_bindgen::prelude::wasm_bindgen;

fn report(a: &Algebra<Gq>) -> String {
    let mut out = String::new();
    if let Err(v) = a.check_left_symmetric() {
        let _ = writeln!(out, "not left-symmetric: {v}");
        return out;
    }
    out.push_str("left-symmetric\n");
    if a.dim() == 3 {
        if let Ok(c) = classify3(&a.commutator_lie()) {
            let _ = writeln!(out, "sub-adjacent Lie algebra: {c}");
        }
    }
    let fp = fingerprint(a);
    let simple = a.dim() == 3 && is_simple(a).unwrap_or(false);
    let semisimple = a.dim() == 3 && matches!(is_semisimple(a), Ok(Some(_)));
    for (name, set) in [
        ("associative", fp.associative),
        ("transitive", fp.transitive),
        ("novikov", fp.novikov),
        ("bisymmetric", fp.bisymmetric),
        ("simple", simple),
        ("semisimple", semisimple),
    ] {
        let _ = writeln!(out, "{name}: {}", if set { "yes" } else { "no" });
    }
    out
}

fn parse_params(text: &str) -> Result<Bindings, String> {
    let mut b = Bindings::new();
    for part in text.split(',').filter(|s| !s.trim().is_empty()) {
        let (k, v) = part.split_once('=').ok_or_else(|| format!("expected name=value, got `{part}`"))?;
        let v = parse_scalar(v).map_err(|e| e.to_string())?.as_constant().ok_or("parameter values must be constants")?;
        b.insert(canonical_var(k.trim()), v);
    }
    Ok(b)
}

fn or_error(r: Result<String, String>) -> String {
    r.unwrap_or_else(|e| format!("error: {e}\n"))
}

/// Left-symmetry, Lie class and subclass flags of an algebra document.
#[wasm_bindgen]
pub fn check_algebra(text: &str, params: &str) -> String {
    or_error((|| {
        let doc = parse_document(text).map_err(|e| e.to_string())?;
        let Payload::Algebra(a) = &doc.payload else {
            return Err(format!("expected an algebra document, got {}", doc.kind().name()));
        };
        let b = doc.bindings(&parse_params(params)?).map_err(|e| e.to_string())?;
        Ok(report(&algebra_at(a, &b).map_err(|e| e.to_string())?))
    })())
}

/// The algebra document of a cocycle document's product, followed by its report.
#[wasm_bindgen]
pub fn build_from_cocycle(text: &str, params: &str) -> String {
    or_error((|| {
        let doc = parse_document(text).map_err(|e| e.to_string())?;
        let Payload::Cocycle { lie, f, q } = &doc.payload else {
            return Err(format!("expected a cocycle document, got {}", doc.kind().name()));
        };
        let b = doc.bindings(&parse_params(params)?).map_err(|e| e.to_string())?;
        let c = lsa_core::format::cocycle_at(lie, f, q, &b).map_err(|e| e.to_string())?;
        let a = phi(&c).map_err(|e| e.to_string())?;
        Ok(format!("{}\n{}", Document::from_algebra(&a).emit(), report(&a)))
    })())
}

/// A catalog entry at the given parameters, with its report.
#[wasm_bindgen]
pub fn catalog_entry(id: &str, params: &str) -> String {
    or_error((|| {
        let cat = Catalog::embedded();
        let e = cat.lookup(id.trim()).map_err(|e| e.to_string())?;
        let b = e.complete(&parse_params(params)?).map_err(|e| e.to_string())?;
        let a = e.instantiate(&b).map_err(|e| e.to_string())?;
        let mut out = format!("# {} ", e.id);
        if !b.is_empty() {
            let _ = write!(out, "at {}", format_bindings(&b));
        }
        out.push('\n');
        out.push_str(&Document::from_algebra(&a).emit());
        out.push('\n');
        out.push_str(&report(&a));
        Ok(out)
    })())
}

/// Isomorphism verdict between two algebra documents.
#[wasm_bindgen]
pub fn compare_algebras(a: &str, b: &str) -> String {
    or_error((|| {
        let load = |t: &str| -> Result<Algebra<Gq>, String> {
            let doc = parse_document(t).map_err(|e| e.to_string())?;
            let Payload::Algebra(a) = &doc.payload else { return Err("expected algebra documents".into()) };
            algebra_at(a, &doc.bindings(&Bindings::new()).map_err(|e| e.to_string())?).map_err(|e| e.to_string())
        };
        Ok(format!("{}\n", search_lsa_iso(&load(a)?, &load(b)?)))
    })())
}

/// Ids of every catalog entry, one per line.
#[wasm_bindgen]
pub fn catalog_ids() -> String {
    Catalog::embedded().entries.iter().map(|e| format!("{}\n", e.id)).collect()
}
