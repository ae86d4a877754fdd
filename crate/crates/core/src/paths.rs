//! Dyck paths and the peak-greedy labelling `phi` onto 321-avoiding
//! permutations.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grassmann::{check_cap, DEFAULT_CAP};
use crate::patterns::contains_decreasing;
use crate::permcore::Permutation;

/// Largest semilength accepted when listing every Dyck path.
pub const DYCK_CAP: usize = 15;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Step {
    Up,
    Down,
}

impl Step {
    fn letter(self) -> char {
        match self {
            Step::Up => 'U',
            Step::Down => 'D',
        }
    }
}

/// A lattice path of up and down steps that starts and ends on the axis and
/// never goes below it.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct DyckPath(Vec<Step>);

impl DyckPath {
    pub fn new(steps: Vec<Step>) -> Result<Self> {
        let mut height = 0i64;
        for (i, s) in steps.iter().enumerate() {
            height += if *s == Step::Up { 1 } else { -1 };
            if height < 0 {
                return Err(Error::Parse(format!(
                    "path goes below the axis at step {}",
                    i + 1
                )));
            }
        }
        if height != 0 {
            return Err(Error::Parse(format!("path ends at height {height}")));
        }
        Ok(DyckPath(steps))
    }

    pub(crate) fn from_steps_unchecked(steps: Vec<Step>) -> Self {
        debug_assert!(DyckPath::new(steps.clone()).is_ok());
        DyckPath(steps)
    }

    /// `(UD)^n`.
    pub fn identity(n: usize) -> Self {
        DyckPath([Step::Up, Step::Down].repeat(n))
    }

    pub fn steps(&self) -> &[Step] {
        &self.0
    }

    pub fn semilength(&self) -> usize {
        self.0.len() / 2
    }

    /// Run-length form, e.g. `U^3D^3U^2D`.
    pub fn to_run_length(&self) -> String {
        let mut out = String::new();
        for (step, len) in runs(&self.0) {
            out.push(step.letter());
            if len > 1 {
                out.push_str(&format!("^{len}"));
            }
        }
        out
    }

    /// Heights reached by each step, starting after the first step.
    fn heights(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().scan(0usize, |h, s| {
            match s {
                Step::Up => *h += 1,
                Step::Down => *h -= 1,
            }
            Some(*h)
        })
    }

    pub fn max_height(&self) -> usize {
        self.heights().max().unwrap_or(0)
    }

    /// Maximal runs of two or more up-steps.
    pub fn long_ascent_count(&self) -> usize {
        runs(&self.0)
            .filter(|&(s, len)| s == Step::Up && len >= 2)
            .count()
    }

    /// Apex height of every peak `UD`, left to right.
    pub fn peak_heights(&self) -> Vec<usize> {
        let heights: Vec<usize> = self.heights().collect();
        self.0
            .windows(2)
            .enumerate()
            .filter(|(_, w)| w[0] == Step::Up && w[1] == Step::Down)
            .map(|(i, _)| heights[i])
            .collect()
    }

    pub fn peaks_at_even_height(&self) -> usize {
        self.peak_heights().iter().filter(|&&h| h % 2 == 0).count()
    }

    pub fn peaks_above_height_one(&self) -> usize {
        self.peak_heights().iter().filter(|&&h| h > 1).count()
    }

    /// True iff the path returns to the axis only at its end.
    pub fn is_primitive(&self) -> bool {
        let len = self.0.len();
        len > 0 && self.heights().take(len - 1).all(|h| h > 0)
    }
}

fn runs(steps: &[Step]) -> impl Iterator<Item = (Step, usize)> + '_ {
    steps.chunk_by(|a, b| a == b).map(|c| (c[0], c.len()))
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.0 {
            write!(f, "{}", s.letter())?;
        }
        Ok(())
    }
}

/// Accepts flat strings (`UUDD`) and run-length forms (`U3D3`, `U^3D^3`,
/// `U³D³`).
impl FromStr for DyckPath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let letters = parse_run_length(s, |c| match c {
            'U' | 'u' => Some(Step::Up),
            'D' | 'd' => Some(Step::Down),
            _ => None,
        })?;
        DyckPath::new(letters)
    }
}

/// Expands `letter exponent?` sequences; shared with Schröder words.
pub(crate) fn parse_run_length<T: Copy>(
    s: &str,
    letter: impl Fn(char) -> Option<T>,
) -> Result<Vec<T>> {
    let mut out = Vec::new();
    let mut chars = s.trim().chars().peekable();
    while let Some(c) = chars.next() {
        let item = letter(c).ok_or_else(|| Error::Parse(format!("unexpected character {c:?}")))?;
        if chars.peek() == Some(&'^') {
            chars.next();
        }
        let mut exponent: Option<usize> = None;
        while let Some(d) = chars.peek().and_then(|&c| digit_value(c)) {
            exponent = Some(exponent.unwrap_or(0) * 10 + d);
            chars.next();
        }
        let count = exponent.unwrap_or(1);
        out.extend(std::iter::repeat_n(item, count));
    }
    Ok(out)
}

fn digit_value(c: char) -> Option<usize> {
    const SUPERSCRIPTS: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
    c.to_digit(10)
        .map(|d| d as usize)
        .or_else(|| SUPERSCRIPTS.iter().position(|&s| s == c))
}

impl TryFrom<String> for DyckPath {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<DyckPath> for String {
    fn from(p: DyckPath) -> Self {
        p.to_string()
    }
}

/// Peak-greedy labelling.
///
/// Down-steps are numbered `1..=n` from left to right and each peak up-step
/// takes the number of the down-step right after it. The labels left over
/// go, in increasing order, to the remaining up-steps read from left to
/// right. The permutation is the sequence of up-step labels.
pub fn phi(path: &DyckPath) -> Permutation {
    let steps = path.steps();
    let n = path.semilength();
    let mut labels: Vec<Option<u32>> = Vec::with_capacity(n);
    let mut used = vec![false; n + 1];
    let mut downs = 0u32;
    for (i, s) in steps.iter().enumerate() {
        match s {
            Step::Up => labels.push(None),
            Step::Down => {
                downs += 1;
                if i > 0 && steps[i - 1] == Step::Up {
                    *labels.last_mut().expect("an up-step precedes") = Some(downs);
                    used[downs as usize] = true;
                }
            }
        }
    }
    let mut free = (1..=n as u32).filter(|&v| !used[v as usize]);
    let values = labels
        .into_iter()
        .map(|l| l.unwrap_or_else(|| free.next().expect("label count matches")))
        .collect();
    Permutation::from_vec_unchecked(values)
}

/// Inverse of [`phi`] on 321-avoiding permutations.
///
/// With right-to-left minima `p(i_1) < ⋯ < p(i_l)` cutting `p` into blocks
/// ending at each minimum, block `t` becomes `U^{|block|}` followed by
/// `D^{p(i_{t+1}) - p(i_t)}`, and the last block closes with
/// `D^{n + 1 - p(i_l)}`.
pub fn phi_inverse(p: &Permutation) -> Result<DyckPath> {
    if contains_decreasing(p, 3) {
        return Err(Error::Domain(format!("{p} contains the pattern 321")));
    }
    let values = p.values();
    let n = values.len();
    let mut minima = Vec::new();
    let mut running = u32::MAX;
    for (i, &v) in values.iter().enumerate().rev() {
        if v < running {
            running = v;
            minima.push(i);
        }
    }
    minima.reverse();
    let mut steps = Vec::with_capacity(2 * n);
    let mut start = 0;
    for (t, &pos) in minima.iter().enumerate() {
        let next = minima.get(t + 1).map_or(n as u32 + 1, |&q| values[q]);
        steps.extend(std::iter::repeat_n(Step::Up, pos + 1 - start));
        steps.extend(std::iter::repeat_n(
            Step::Down,
            (next - values[pos]) as usize,
        ));
        start = pos + 1;
    }
    DyckPath::new(steps)
}

/// At most one long ascent.
pub fn is_grassmannian_path(path: &DyckPath) -> bool {
    path.long_ascent_count() <= 1
}

/// The decomposition `(UD)^leading · core · (UD)^trailing` of a
/// non-identity Grassmannian path, where `core = U P D` is primitive and
/// only its first ascent is long.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrassmannianPathShape {
    pub leading: usize,
    pub core: DyckPath,
    pub trailing: usize,
}

pub fn grassmannian_path_shape(path: &DyckPath) -> Option<GrassmannianPathShape> {
    let steps = path.steps();
    let pair = [Step::Up, Step::Down];
    let mut lo = 0;
    let mut hi = steps.len();
    while hi - lo >= 2 && steps[lo..lo + 2] == pair {
        lo += 2;
    }
    while hi - lo >= 2 && steps[hi - 2..hi] == pair {
        hi -= 2;
    }
    if lo == hi {
        return None;
    }
    let core = DyckPath::from_steps_unchecked(steps[lo..hi].to_vec());
    if !core.is_primitive() || core.long_ascent_count() != 1 || steps[lo + 1] != Step::Up {
        return None;
    }
    Some(GrassmannianPathShape {
        leading: lo / 2,
        core,
        trailing: (steps.len() - hi) / 2,
    })
}

fn dyck_walk(
    n: usize,
    steps: &mut Vec<Step>,
    height: usize,
    ups: usize,
    allow: &mut impl FnMut(&[Step]) -> bool,
    f: &mut impl FnMut(&DyckPath),
) {
    if steps.len() == 2 * n {
        f(&DyckPath::from_steps_unchecked(steps.clone()));
        return;
    }
    if ups < n {
        steps.push(Step::Up);
        if allow(steps) {
            dyck_walk(n, steps, height + 1, ups + 1, allow, f);
        }
        steps.pop();
    }
    if height > 0 {
        steps.push(Step::Down);
        if allow(steps) {
            dyck_walk(n, steps, height - 1, ups, allow, f);
        }
        steps.pop();
    }
}

/// Every Dyck path of semilength `n`, up-steps ordered before down-steps.
pub fn for_each_dyck_path(n: usize, mut f: impl FnMut(&DyckPath)) {
    dyck_walk(
        n,
        &mut Vec::with_capacity(2 * n),
        0,
        0,
        &mut |_| true,
        &mut f,
    );
}

pub fn enumerate_dyck(n: usize) -> Result<Vec<DyckPath>> {
    check_cap(n, DYCK_CAP)?;
    let mut out = Vec::new();
    for_each_dyck_path(n, |p| out.push(p.clone()));
    Ok(out)
}

/// Grassmannian Dyck paths, generated directly by refusing a second long
/// ascent while walking.
pub fn for_each_grassmannian_path(n: usize, mut f: impl FnMut(&DyckPath)) {
    let mut allow = |steps: &[Step]| {
        // only the step just pushed can complete a new long ascent
        let len = steps.len();
        if len < 2 || steps[len - 1] != Step::Up || steps[len - 2] != Step::Up {
            return true;
        }
        if len >= 3 && steps[len - 3] == Step::Up {
            return true;
        }
        runs(&steps[..len - 2]).all(|(s, run)| s == Step::Down || run < 2)
    };
    dyck_walk(n, &mut Vec::with_capacity(2 * n), 0, 0, &mut allow, &mut f);
}

pub fn enumerate_grassmannian_paths(n: usize) -> Result<Vec<DyckPath>> {
    enumerate_grassmannian_paths_with_cap(n, DEFAULT_CAP)
}

pub fn enumerate_grassmannian_paths_with_cap(n: usize, cap: usize) -> Result<Vec<DyckPath>> {
    check_cap(n, cap)?;
    let mut out = Vec::new();
    for_each_grassmannian_path(n, |p| out.push(p.clone()));
    Ok(out)
}
