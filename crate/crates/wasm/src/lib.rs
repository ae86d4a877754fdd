//! Browser bindings for three demo operations: the Dyck path bijection with
//! an SVG drawing, the Schröder word code, and a table of closed-form counts.
//!
//! Each `#[wasm_bindgen]` export wraps a plain function returning
//! `Result<String, String>` so the logic can be tested natively.

use std::fmt::Write;

use grassperm::grassmann::{
    count_bigrassmannian, count_grassmannian, count_involutions, count_union_with_inverse,
};
use grassperm::parity::{even_count, odd_count};
use grassperm::paths::{phi, phi_inverse, DyckPath, Step};
use grassperm::schroder::{alpha, bin_word, SchroderWord};
use grassperm::Permutation;
use wasm_bindgen::prelude::*;

const UNIT: usize = 24;
const MAX_TABLE_N: usize = 60;

/// Permutation of a Dyck path, or the path of a 321-avoiding permutation,
/// depending on which the input parses as.
pub fn convert(input: &str) -> Result<String, String> {
    let s = input.trim();
    if s.chars().next().is_some_and(|c| c.is_ascii_digit()) {
        let p: Permutation = s.parse().map_err(|e| format!("{e}"))?;
        phi_inverse(&p)
            .map(|d| d.to_string())
            .map_err(|e| format!("{e}"))
    } else {
        let d: DyckPath = s.parse().map_err(|e| format!("{e}"))?;
        Ok(phi(&d).to_string())
    }
}

/// SVG of the path for `input` (a path or a 321-avoiding permutation).
/// Peaks at even height are filled.
pub fn svg(input: &str) -> Result<String, String> {
    let s = input.trim();
    let path: DyckPath = if s.chars().next().is_some_and(|c| c.is_ascii_digit()) {
        convert(s)?.parse().map_err(|e| format!("{e}"))?
    } else {
        s.parse().map_err(|e| format!("{e}"))?
    };
    let steps = path.steps();
    let top = path.max_height().max(1);
    let width = (steps.len().max(1)) * UNIT + 2 * UNIT;
    let height = top * UNIT + 2 * UNIT;
    let point = |x: usize, y: usize| (UNIT + x * UNIT, UNIT + (top - y) * UNIT);
    let mut out = String::new();
    let _ = write!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {width} {height}" width="{width}" height="{height}">"#
    );
    let (x0, y0) = point(0, 0);
    let (x1, _) = point(steps.len(), 0);
    let _ = write!(
        out,
        r##"<line x1="{x0}" y1="{y0}" x2="{x1}" y2="{y0}" stroke="#bbb"/>"##
    );
    let mut h = 0usize;
    let mut pts = vec![point(0, 0)];
    let mut peaks = Vec::new();
    for (i, s) in steps.iter().enumerate() {
        match s {
            Step::Up => h += 1,
            Step::Down => {
                if i > 0 && steps[i - 1] == Step::Up {
                    peaks.push((i, h));
                }
                h -= 1;
            }
        }
        pts.push(point(i + 1, h));
    }
    let list: Vec<String> = pts.iter().map(|(x, y)| format!("{x},{y}")).collect();
    let _ = write!(
        out,
        r##"<polyline points="{}" fill="none" stroke="#246" stroke-width="2"/>"##,
        list.join(" ")
    );
    for (x, y) in peaks {
        let (cx, cy) = point(x, y);
        let fill = if y % 2 == 0 { "#c33" } else { "#fff" };
        let _ = write!(
            out,
            r##"<circle cx="{cx}" cy="{cy}" r="4" fill="{fill}" stroke="#c33"/>"##
        );
    }
    out.push_str("</svg>");
    Ok(out)
}

/// `bin(w)`, `alpha(w)`, and the decoded permutation, one per line.
pub fn schroder(word: &str) -> Result<String, String> {
    let w: SchroderWord = word.trim().parse().map_err(|e| format!("{e}"))?;
    let bits: String = bin_word(&w)
        .map_err(|e| format!("{e}"))?
        .iter()
        .map(|b| b.to_string())
        .collect();
    let code = alpha(&w).map_err(|e| format!("{e}"))?;
    let perm = code.decode().map_err(|e| format!("{e}"))?;
    Ok(format!("bin: {bits}\ncode: {code}\npermutation: {perm}"))
}

/// CSV of closed-form counts for `n = 1..=n_max`.
pub fn counts(n_max: usize) -> Result<String, String> {
    if n_max == 0 || n_max > MAX_TABLE_N {
        return Err(format!("n must lie in 1..={MAX_TABLE_N}"));
    }
    let mut out =
        String::from("n,grassmannian,bigrassmannian,union-inverse,involutions,odd,even\n");
    for n in 1..=n_max {
        let row = [
            count_grassmannian(n),
            count_bigrassmannian(n),
            count_union_with_inverse(n),
            count_involutions(n),
            odd_count(n),
            even_count(n),
        ]
        .into_iter()
        .map(|r| r.map(|v| v.to_string()))
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| format!("{e}"))?;
        let _ = writeln!(out, "{n},{}", row.join(","));
    }
    Ok(out)
}

#[wasm_bindgen(js_name = convert)]
pub fn convert_js(input: &str) -> Result<String, JsValue> {
    convert(input).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen(js_name = pathSvg)]
pub fn svg_js(input: &str) -> Result<String, JsValue> {
    svg(input).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen(js_name = schroder)]
pub fn schroder_js(word: &str) -> Result<String, JsValue> {
    schroder(word).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen(js_name = counts)]
pub fn counts_js(n_max: usize) -> Result<String, JsValue> {
    counts(n_max).map_err(|e| JsValue::from_str(&e))
}
