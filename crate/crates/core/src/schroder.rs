//! Schröder words avoiding `UUDD` and the map `alpha` onto Lehmer codes of
//! 35124-avoiding Grassmannian permutations.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::grassmann::{check_cap, DEFAULT_CAP};
use crate::paths::parse_run_length;
use crate::permcore::LehmerCode;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    Up,
    Down,
    Level,
}

impl Letter {
    fn value(self) -> i64 {
        match self {
            Letter::Up => 1,
            Letter::Down => -1,
            Letter::Level => 0,
        }
    }

    fn symbol(self) -> char {
        match self {
            Letter::Up => 'U',
            Letter::Down => 'D',
            Letter::Level => 'H',
        }
    }
}

/// Word over `{U, D, H}` with non-negative prefix values and total value 0.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SchroderWord(Vec<Letter>);

impl SchroderWord {
    pub fn new(letters: Vec<Letter>) -> Result<Self> {
        let mut val = 0i64;
        for (i, l) in letters.iter().enumerate() {
            val += l.value();
            if val < 0 {
                return Err(Error::Parse(format!(
                    "prefix of length {} has negative value",
                    i + 1
                )));
            }
        }
        if val != 0 {
            return Err(Error::Parse(format!("word has value {val}, expected 0")));
        }
        Ok(SchroderWord(letters))
    }

    fn from_letters_unchecked(letters: Vec<Letter>) -> Self {
        debug_assert!(SchroderWord::new(letters.clone()).is_ok());
        SchroderWord(letters)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    /// `(#U + #D + 2 #H) / 2`.
    pub fn semilength(&self) -> usize {
        self.0
            .iter()
            .map(|l| if *l == Letter::Level { 2 } else { 1 })
            .sum::<usize>()
            / 2
    }

    pub fn up_count(&self) -> usize {
        self.0.iter().filter(|&&l| l == Letter::Up).count()
    }

    fn prefix_values(&self) -> impl Iterator<Item = i64> + '_ {
        self.0.iter().scan(0i64, |v, l| {
            *v += l.value();
            Some(*v)
        })
    }

    /// Member of `Schr_n(UUDD)`: every prefix value is 0 or 1 and there are
    /// at most two up-steps.
    pub fn is_restricted(&self) -> bool {
        self.up_count() <= 2 && self.prefix_values().all(|v| v <= 1)
    }

    /// Whether `U U D D` occurs as a (not necessarily consecutive) subsequence.
    pub fn contains_uudd(&self) -> bool {
        let target = [Letter::Up, Letter::Up, Letter::Down, Letter::Down];
        let mut next = 0;
        for &l in &self.0 {
            if next < target.len() && l == target[next] {
                next += 1;
            }
        }
        next == target.len()
    }
}

impl fmt::Display for SchroderWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.0 {
            write!(f, "{}", l.symbol())?;
        }
        Ok(())
    }
}

impl FromStr for SchroderWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let letters = parse_run_length(s, |c| match c {
            'U' | 'u' => Some(Letter::Up),
            'D' | 'd' => Some(Letter::Down),
            'H' | 'h' => Some(Letter::Level),
            _ => None,
        })?;
        SchroderWord::new(letters)
    }
}

fn level_run(len: usize) -> impl Iterator<Item = Letter> {
    std::iter::repeat_n(Letter::Level, len)
}

/// Builds `H^{runs[0]} U H^{runs[1]} D H^{runs[2]} U …` from level-run lengths.
fn from_level_runs(runs: &[usize]) -> SchroderWord {
    let mut letters = Vec::new();
    for (i, &len) in runs.iter().enumerate() {
        if i > 0 {
            letters.push(if i % 2 == 1 { Letter::Up } else { Letter::Down });
        }
        letters.extend(level_run(len));
    }
    SchroderWord::from_letters_unchecked(letters)
}

/// Weak compositions of `total` into `parts` parts, lexicographic.
fn compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    if parts == 1 {
        return vec![vec![total]];
    }
    (0..=total)
        .flat_map(|first| {
            compositions(total - first, parts - 1)
                .into_iter()
                .map(move |mut rest| {
                    rest.insert(0, first);
                    rest
                })
        })
        .collect()
}

/// `Schr_n(UUDD)`: `H^n`, then the one-up words `w1 U w2 D w3`, then the
/// two-up words `w1 U w2 D w3 U w4 D w5`, each `w_i` a run of `H`.
pub fn enumerate_schr_uudd(n: usize) -> Result<Vec<SchroderWord>> {
    enumerate_schr_uudd_with_cap(n, DEFAULT_CAP)
}

pub fn enumerate_schr_uudd_with_cap(n: usize, cap: usize) -> Result<Vec<SchroderWord>> {
    check_cap(n, cap)?;
    let mut out = vec![from_level_runs(&[n])];
    if n >= 1 {
        out.extend(compositions(n - 1, 3).iter().map(|c| from_level_runs(c)));
    }
    if n >= 2 {
        out.extend(compositions(n - 2, 5).iter().map(|c| from_level_runs(c)));
    }
    Ok(out)
}

fn require_restricted(w: &SchroderWord) -> Result<()> {
    if w.is_restricted() {
        Ok(())
    } else {
        Err(Error::Domain(format!("{w} is not in Schr(UUDD)")))
    }
}

/// Prefix values of a restricted word, one binary digit per letter.
pub fn bin_word(w: &SchroderWord) -> Result<Vec<u8>> {
    require_restricted(w)?;
    Ok(w.prefix_values().map(|v| v as u8).collect())
}

/// Lengths of maximal runs, starting with a (possibly empty) run of zeros.
fn binary_runs(bits: &[u8]) -> Vec<usize> {
    let mut runs = Vec::new();
    let mut current = 0u8;
    let mut len = 0;
    for &b in bits {
        if b == current {
            len += 1;
        } else {
            runs.push(len);
            current = b;
            len = 1;
        }
    }
    runs.push(len);
    runs
}

/// `alpha(w)`: all zeros for `H^n`, `bin(w)` for one up-step, and
/// `0^{i1} 1^{i2-1} (i3+1)^{i4} 0^{i3+i5}` when
/// `bin(w) = 0^{i1} 1^{i2} 0^{i3} 1^{i4} 0^{i5}`.
pub fn alpha(w: &SchroderWord) -> Result<LehmerCode> {
    let bits = bin_word(w)?;
    let n = w.semilength();
    let code = match w.up_count() {
        0 => vec![0; n + 1],
        1 => bits.iter().map(|&b| b as u32).collect(),
        _ => {
            let runs = binary_runs(&bits);
            let [i1, i2, i3, i4, i5] = runs[..] else {
                unreachable!("two up-steps give five runs, got {runs:?}");
            };
            let mut code = vec![0u32; i1];
            code.extend(std::iter::repeat_n(1, i2 - 1));
            code.extend(std::iter::repeat_n(i3 as u32 + 1, i4));
            code.extend(std::iter::repeat_n(0, i3 + i5));
            code
        }
    };
    Ok(LehmerCode(code))
}

/// Run parameters of a code `0^{j1} 1^{j2} m^{j3} 0^{j4}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CodeShape {
    AllZero {
        len: usize,
    },
    Runs {
        j1: usize,
        j2: usize,
        m: u32,
        j3: usize,
        j4: usize,
    },
}

/// Matches `0^{j1} 1^{j2} m^{j3} 0^{j4}` with `j4 > 0`, `m >= 2` and
/// `m <= j4` whenever the `m` block is present.
pub fn code_shape(c: &LehmerCode) -> Option<CodeShape> {
    let e = c.entries();
    if e.is_empty() {
        return None;
    }
    let run = |from: usize, value: u32| e[from..].iter().take_while(|&&x| x == value).count();
    let j1 = run(0, 0);
    if j1 == e.len() {
        return Some(CodeShape::AllZero { len: e.len() });
    }
    let j2 = run(j1, 1);
    let mut at = j1 + j2;
    let (m, j3) = match e.get(at) {
        Some(&v) if v >= 2 => (v, run(at, v)),
        _ => (0, 0),
    };
    at += j3;
    let j4 = run(at, 0);
    if at + j4 != e.len() || j4 == 0 {
        return None;
    }
    if j3 > 0 && m as usize > j4 {
        return None;
    }
    Some(CodeShape::Runs { j1, j2, m, j3, j4 })
}

pub fn is_35124_code(c: &LehmerCode) -> bool {
    code_shape(c).is_some()
}

/// Inverse of [`alpha`] on admissible codes of length `n + 1`.
pub fn alpha_inverse(c: &LehmerCode) -> Result<SchroderWord> {
    let shape =
        code_shape(c).ok_or_else(|| Error::Domain(format!("{c} is not an admissible code")))?;
    Ok(match shape {
        CodeShape::AllZero { len } => from_level_runs(&[len - 1]),
        CodeShape::Runs {
            j1, j2, j3: 0, j4, ..
        } => from_level_runs(&[j1, j2 - 1, j4 - 1]),
        CodeShape::Runs { j1, j2, m, j3, j4 } => {
            let m = m as usize;
            from_level_runs(&[j1, j2, m - 2, j3 - 1, j4 - m])
        }
    })
}
