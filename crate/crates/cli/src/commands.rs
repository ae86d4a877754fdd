use std::io::Write;

use grassperm::grassmann::{
    count_bigrassmannian, count_descent_at, count_grassmannian, count_involutions,
    count_union_with_inverse, enumerate_involutions_with_cap, is_bigrassmannian, is_grassmannian,
    GrassmannianIter,
};
use grassperm::parity::{even_count, odd_count, psi_map, xi_map};
use grassperm::paths::{
    enumerate_dyck, enumerate_grassmannian_paths_with_cap, phi, phi_inverse, DyckPath, DYCK_CAP,
};
use grassperm::patterns::{
    contains_increasing, contains_pattern, count_avoiders_closed_form, enumerate_avoiders_with_cap,
    finite_class_count,
};
use grassperm::report::first_mismatch;
use grassperm::schroder::{
    alpha, alpha_inverse, bin_word, enumerate_schr_uudd_with_cap, SchroderWord,
};
use grassperm::tables::{table1, table2, TableRow};
use grassperm::verify::{
    self, avoiders_oracle, grassmannian_oracle, schroder_words_oracle, Target,
};
use grassperm::{CountReport, LehmerCode, Permutation};
use num_bigint::BigUint;
use serde::Serialize;

use crate::{
    CountArgs, CountFamily, CountFormat, Direction, EnumArgs, EnumFamily, ListFormat, MapArgs,
    TableArgs, TableFormat, VerifyArgs, WhichTable,
};

pub enum Failure {
    Mismatch(String),
    Input(String),
}

impl From<grassperm::Error> for Failure {
    fn from(e: grassperm::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Input(format!("write failed: {e}"))
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Failure::Input(format!("write failed: {e}"))
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Input(format!("write failed: {e}"))
    }
}

type Outcome = std::result::Result<(), Failure>;

fn input<T>(msg: impl Into<String>) -> std::result::Result<T, Failure> {
    Err(Failure::Input(msg.into()))
}

fn parse_pattern(pattern: &Option<String>) -> std::result::Result<Permutation, Failure> {
    match pattern {
        Some(s) => {
            let p: Permutation = s.parse()?;
            if p.is_empty() {
                return input("pattern must be non-empty");
            }
            Ok(p)
        }
        None => input("this family needs --pattern"),
    }
}

fn need_k(k: Option<usize>) -> std::result::Result<usize, Failure> {
    k.ok_or_else(|| Failure::Input("this family needs --k".into()))
}

pub fn enumerate(a: &EnumArgs, out: &mut impl Write) -> Outcome {
    let items: Vec<String> = match a.family {
        EnumFamily::Grassmannian => strings(GrassmannianIter::with_cap(a.n, a.cap)?),
        EnumFamily::Bigrassmannian => {
            strings(GrassmannianIter::with_cap(a.n, a.cap)?.filter(is_bigrassmannian))
        }
        EnumFamily::Involutions => strings(enumerate_involutions_with_cap(a.n, a.cap)?),
        EnumFamily::Avoiders => {
            let sigma = parse_pattern(&a.pattern)?;
            strings(enumerate_avoiders_with_cap(a.n, &sigma, a.cap)?)
        }
        EnumFamily::Dyck => strings(enumerate_grassmannian_paths_with_cap(a.n, a.cap)?),
        EnumFamily::DyckAll => {
            if a.n > a.cap.min(DYCK_CAP) {
                return input(format!(
                    "n = {} exceeds the Dyck path cap {}",
                    a.n,
                    a.cap.min(DYCK_CAP)
                ));
            }
            strings(enumerate_dyck(a.n)?)
        }
        EnumFamily::Schroder => strings(enumerate_schr_uudd_with_cap(a.n, a.cap)?),
    };
    match a.format {
        ListFormat::Lines => {
            for item in &items {
                writeln!(out, "{item}")?;
            }
        }
        ListFormat::Json => {
            serde_json::to_writer(&mut *out, &items)?;
            writeln!(out)?;
        }
    }
    eprintln!("count: {}", items.len());
    Ok(())
}

fn strings<T: ToString>(items: impl IntoIterator<Item = T>) -> Vec<String> {
    items.into_iter().map(|x| x.to_string()).collect()
}

/// Parses `7`, `1..10`, or `1..=10` as an inclusive range.
pub fn parse_range(s: &str) -> std::result::Result<(usize, usize), Failure> {
    let bad = || Failure::Input(format!("invalid size range {s:?}"));
    let (lo, hi) = match s.split_once("..") {
        Some((lo, hi)) => {
            let hi = hi.strip_prefix('=').unwrap_or(hi);
            (
                lo.trim().parse().map_err(|_| bad())?,
                hi.trim().parse().map_err(|_| bad())?,
            )
        }
        None => {
            let n = s.trim().parse().map_err(|_| bad())?;
            (n, n)
        }
    };
    if lo == 0 || lo > hi {
        return Err(bad());
    }
    Ok((lo, hi))
}

fn formula(a: &CountArgs, n: usize) -> std::result::Result<BigUint, Failure> {
    Ok(match a.family {
        CountFamily::Grassmannian => count_grassmannian(n)?,
        CountFamily::Bigrassmannian => count_bigrassmannian(n)?,
        CountFamily::UnionInverse => count_union_with_inverse(n)?,
        CountFamily::Involutions => count_involutions(n)?,
        CountFamily::Avoiders => count_avoiders_closed_form(n, &parse_pattern(&a.pattern)?)?,
        CountFamily::Increasing => {
            let k = need_k(a.k)?;
            // inside k <= n <= 2k-2 the count is a streaming scan of G_n
            if k >= 2 && n >= k && n < 2 * k - 1 && n > grassperm::grassmann::DEFAULT_CAP {
                return input(format!("n = {n} needs a scan beyond the enumeration cap"));
            }
            finite_class_count(n, k)?
        }
        CountFamily::DescentAt => count_descent_at(n, need_k(a.k)?)?,
        CountFamily::Odd => odd_count(n)?,
        CountFamily::Even => even_count(n)?,
        CountFamily::Schroder => count_avoiders_closed_form(n + 1, &"35124".parse()?)?,
    })
}

fn oracle_cap(a: &CountArgs) -> usize {
    a.cap.unwrap_or(match a.family {
        CountFamily::UnionInverse | CountFamily::Schroder => 12,
        _ => 20,
    })
}

fn oracle(a: &CountArgs, n: usize) -> std::result::Result<BigUint, Failure> {
    let g = || grassmannian_oracle(n);
    let count = |keep: &dyn Fn(&Permutation) -> bool| g().iter().filter(|q| keep(q)).count();
    let value = match a.family {
        CountFamily::Grassmannian => g().len(),
        CountFamily::Bigrassmannian => count(&|q| is_grassmannian(&q.inverse())),
        CountFamily::UnionInverse => avoiders_oracle(n, &["321".parse()?, "2143".parse()?]).len(),
        CountFamily::Involutions => count(&|q| q.is_involution()),
        CountFamily::Avoiders => {
            let sigma = parse_pattern(&a.pattern)?;
            count(&|q| !contains_pattern(q, &sigma))
        }
        CountFamily::Increasing => {
            let k = need_k(a.k)?;
            count(&|q| !contains_increasing(q, k))
        }
        CountFamily::DescentAt => {
            let k = need_k(a.k)?;
            count(&|q| q.descent_positions() == [k])
        }
        CountFamily::Odd => count(&|q| q.inversion_count() % 2 == 1),
        CountFamily::Even => count(&|q| q.inversion_count() % 2 == 0),
        CountFamily::Schroder => schroder_words_oracle(n)
            .iter()
            .filter(|w| !w.contains_uudd())
            .count(),
    };
    Ok(value.into())
}

pub fn count(a: &CountArgs, out: &mut impl Write) -> Outcome {
    let (lo, hi) = parse_range(&a.n)?;
    let cap = oracle_cap(a);
    let mut rows = Vec::with_capacity(hi - lo + 1);
    for n in lo..=hi {
        let f = formula(a, n)?;
        let o = if a.oracle && n <= cap {
            Some(oracle(a, n)?)
        } else {
            None
        };
        rows.push(CountReport::new(family_label(a), n, f, o));
    }
    match a.format {
        CountFormat::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record(["n", "formula", "oracle", "agree"])?;
            for r in &rows {
                let oracle = r.oracle.as_ref().map(|o| o.to_string()).unwrap_or_default();
                w.write_record([
                    r.n.to_string(),
                    r.formula.to_string(),
                    oracle,
                    r.agree.to_string(),
                ])?;
            }
            w.flush()?;
        }
        CountFormat::Json => {
            serde_json::to_writer(&mut *out, &rows)?;
            writeln!(out)?;
        }
        CountFormat::Bfile => {
            for r in &rows {
                writeln!(out, "{} {}", r.n, r.formula)?;
            }
        }
    }
    mismatch_check(&rows)
}

fn family_label(a: &CountArgs) -> String {
    let name = match a.family {
        CountFamily::Grassmannian => "grassmannian",
        CountFamily::Bigrassmannian => "bigrassmannian",
        CountFamily::UnionInverse => "union-inverse",
        CountFamily::Involutions => "involutions",
        CountFamily::Avoiders => "avoiders",
        CountFamily::Increasing => "increasing",
        CountFamily::DescentAt => "descent-at",
        CountFamily::Odd => "odd",
        CountFamily::Even => "even",
        CountFamily::Schroder => "schroder",
    };
    match (&a.pattern, a.k) {
        (Some(p), _) if matches!(a.family, CountFamily::Avoiders) => format!("{name} {p}"),
        (_, Some(k)) if matches!(a.family, CountFamily::Increasing | CountFamily::DescentAt) => {
            format!("{name} k={k}")
        }
        _ => name.to_string(),
    }
}

fn mismatch_check(rows: &[CountReport]) -> Outcome {
    match first_mismatch(rows) {
        Some(r) => Err(Failure::Mismatch(format!(
            "{} at n={}: formula {} but oracle {}",
            r.family,
            r.n,
            r.formula,
            r.oracle
                .as_ref()
                .map(|o| o.to_string())
                .unwrap_or_else(|| "-".into())
        ))),
        None => Ok(()),
    }
}

pub fn verify(a: &VerifyArgs, out: &mut impl Write) -> Outcome {
    let target: Target = a.target.parse()?;
    let mut bounds = target.default_bounds();
    if let Some(k) = a.kmin {
        bounds.k_min = k;
    }
    if let Some(k) = a.kmax {
        bounds.k_max = k;
    }
    if let Some(s) = a.max_size {
        bounds.max_size = s;
    }
    if let Some(n) = a.max_n {
        bounds.max_n = n;
    }
    let start = std::time::Instant::now();
    let rows = verify::run(target, bounds)?;
    match a.format {
        TableFormat::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record(["case", "n", "claim", "oracle", "agree"])?;
            for r in &rows {
                let oracle = r.oracle.as_ref().map(|o| o.to_string()).unwrap_or_default();
                w.write_record([
                    r.family.clone(),
                    r.n.to_string(),
                    r.formula.to_string(),
                    oracle,
                    r.agree.to_string(),
                ])?;
            }
            w.flush()?;
        }
        TableFormat::Json => {
            serde_json::to_writer(&mut *out, &rows)?;
            writeln!(out)?;
        }
    }
    eprintln!("{target}: {} cases in {:.2?}", rows.len(), start.elapsed());
    mismatch_check(&rows)
}

#[derive(Serialize)]
struct JsonRow {
    key: usize,
    values: Vec<String>,
}

pub fn table(a: &TableArgs, out: &mut impl Write) -> Outcome {
    let (rows, key): (Vec<TableRow>, &str) = match a.which {
        WhichTable::Table1 => (table1(a.kmax)?, "k"),
        WhichTable::Table2 => (table2(a.max_size)?, "size"),
    };
    match a.format {
        TableFormat::Csv => {
            let mut w = csv::WriterBuilder::new()
                .flexible(true)
                .from_writer(&mut *out);
            w.write_record([key, "values"])?;
            for r in &rows {
                let mut record = vec![r.key.to_string()];
                record.extend(r.values.iter().map(|v| v.to_string()));
                w.write_record(&record)?;
            }
            w.flush()?;
        }
        TableFormat::Json => {
            let json: Vec<JsonRow> = rows
                .iter()
                .map(|r| JsonRow {
                    key: r.key,
                    values: strings(&r.values),
                })
                .collect();
            serde_json::to_writer(&mut *out, &json)?;
            writeln!(out)?;
        }
    }
    Ok(())
}

pub fn map(a: &MapArgs, out: &mut impl Write) -> Outcome {
    let s = a.input.trim();
    let perm = || s.parse::<Permutation>();
    let word = || s.parse::<SchroderWord>();
    let code = || s.parse::<LehmerCode>();
    let result = match a.direction {
        Direction::Phi => phi(&s.parse::<DyckPath>()?).to_string(),
        Direction::PhiInverse => phi_inverse(&perm()?)?.to_string(),
        Direction::Alpha => alpha(&word()?)?.to_string(),
        Direction::AlphaInverse => alpha_inverse(&code()?)?.to_string(),
        Direction::Bin => bin_word(&word()?)?.iter().map(|b| b.to_string()).collect(),
        Direction::Lehmer => perm()?.lehmer_code().to_string(),
        Direction::LehmerDecode => code()?.decode()?.to_string(),
        Direction::Xi => xi_map(&perm()?)?.to_string(),
        Direction::Psi => psi_map(&perm()?)?.to_string(),
        Direction::Inverse => perm()?.inverse().to_string(),
        Direction::Rc => perm()?.reverse_complement().to_string(),
    };
    writeln!(out, "{result}")?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert!(matches!(parse_range("1..10"), Ok((1, 10))));
        assert!(matches!(parse_range("1..=4"), Ok((1, 4))));
        assert!(matches!(parse_range("7"), Ok((7, 7))));
        for bad in ["0..3", "5..2", "x", "1..", ""] {
            assert!(parse_range(bad).is_err(), "{bad}");
        }
    }
}
