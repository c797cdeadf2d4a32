//! Shapes of minimal complexes: which `B_x(k)` sit in which homological degree.
//!
//! Only the graded multiplicities are modelled. Rouquier complexes of single permutations are
//! computed from Kazhdan-Lusztig polynomials; everything else comes from the fixture file.

use std::collections::BTreeMap;

use serde_json::{json, Map, Value};

use crate::cells::{distinguished_involutions, shape_of};
use crate::error::{Error, Result};
use crate::group::group;
use crate::hecke::{kl_mul, kl_table, std_mul, to_kl, Basis};
use crate::perm::Permutation;
use crate::tableau::{Partition, Tableau};
use crate::twist::{quasi_idempotent, TableauPath};
use crate::{BigHecke, Hecke, Laurent};

/// Largest rank accepted by [`ht_support_stats`].
pub const HT_STATS_MAX_RANK: usize = 6;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Summand {
    pub w: Permutation,
    pub shift: i32,
    pub mult: u64,
}

/// Graded multiset of indecomposables per homological degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexShape {
    n: usize,
    // degree -> (element index, shift) -> multiplicity
    degrees: BTreeMap<i32, BTreeMap<(u32, i32), u64>>,
}

impl ComplexShape {
    pub fn new(n: usize) -> Self {
        ComplexShape { n, degrees: BTreeMap::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.degrees.is_empty()
    }

    pub fn add(&mut self, degree: i32, w: &Permutation, shift: i32, mult: u64) -> Result<()> {
        if w.n() != self.n {
            return Err(Error::RankMismatch(self.n, w.n()));
        }
        if mult == 0 {
            return Ok(());
        }
        let idx = group(self.n).index_of(w);
        *self.degrees.entry(degree).or_default().entry((idx, shift)).or_insert(0) += mult;
        Ok(())
    }

    pub fn degrees(&self) -> impl Iterator<Item = i32> + '_ {
        self.degrees.keys().copied()
    }

    pub fn min_degree(&self) -> Option<i32> {
        self.degrees.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<i32> {
        self.degrees.keys().next_back().copied()
    }

    pub fn entries(&self, degree: i32) -> Vec<Summand> {
        let g = group(self.n);
        self.degrees
            .get(&degree)
            .map(|m| m.iter().map(|(&(i, shift), &mult)| Summand { w: g.elem(i).clone(), shift, mult }).collect())
            .unwrap_or_default()
    }

    /// Total number of indecomposable summands, with multiplicity.
    pub fn rank(&self) -> u64 {
        self.degrees.values().flat_map(|m| m.values()).sum()
    }

    /// Every summand sits in degree equal to its grading shift.
    pub fn is_perverse(&self) -> bool {
        self.degrees.iter().all(|(d, m)| m.keys().all(|&(_, shift)| shift == *d))
    }

    pub fn to_json(&self) -> Value {
        let g = group(self.n);
        let mut degrees = Map::new();
        for (d, m) in &self.degrees {
            let items: Vec<Value> = m.iter().map(|(&(i, shift), &mult)| json!([g.elem(i).name(), shift, mult])).collect();
            degrees.insert(d.to_string(), Value::Array(items));
        }
        json!({ "n": self.n, "degrees": degrees })
    }
}

/// Shape of the minimal Rouquier complex `F_w`: `B_x(i)` in degree `i`, with multiplicity the
/// coefficient of `v^i` in `h_{w0 w, w0 x}`.
pub fn rouquier_shape(w: &Permutation) -> Result<ComplexShape> {
    let n = w.n();
    let table = kl_table(n);
    let g = table.group();
    let wi = g.index_of(w);
    let lw = g.len(wi) as i32;
    let top = g.left_w0(wi);
    let mut shape = ComplexShape::new(n);
    for x in 0..g.order() as u32 {
        let h = table.h_idx(top, g.left_w0(x));
        for &(e, c) in h.terms() {
            if c < 0 {
                return Err(Error::Violation(format!(
                    "negative multiplicity {} for {} in degree {} of F_{}",
                    c,
                    g.elem(x).name(),
                    e,
                    w.name()
                )));
            }
            if (e - (lw - g.len(x) as i32)).rem_euclid(2) != 0 {
                return Err(Error::Violation(format!(
                    "{} appears in degree {} of F_{}, of the wrong parity",
                    g.elem(x).name(),
                    e,
                    w.name()
                )));
            }
            shape.add(e, g.elem(x), e, c as u64)?;
        }
    }
    Ok(shape)
}

/// `Σ (-1)^deg mult v^shift b_x`, in the KL basis.
pub fn euler_characteristic(shape: &ComplexShape) -> Hecke {
    let mut out = Hecke::zero(shape.n, Basis::Kl);
    for (d, m) in &shape.degrees {
        let sign = if d.rem_euclid(2) == 0 { 1 } else { -1 };
        for (&(i, shift), &mult) in m {
            out.add_term(i, &Laurent::monomial(shift, sign * mult as i64));
        }
    }
    out
}

/// Support of the half twist along one two-sided cell.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HtCellStat {
    pub lambda: Partition,
    /// Lowest homological degree holding a summand from the cell.
    pub min_degree: i32,
    /// The summands in that degree, as elements `w0 d`.
    pub bottom: Vec<Permutation>,
}

impl HtCellStat {
    pub fn to_json(&self) -> Value {
        json!({
            "lambda": self.lambda.to_json(),
            "min_degree": self.min_degree,
            "bottom": self.bottom.iter().map(|w| w.name()).collect::<Vec<_>>(),
        })
    }
}

/// Per cell: the lowest degree of `HT_n` meeting the cell is `c(λ)`, and the summands there
/// are `B_{w0 d}(c(λ))` for the distinguished involutions `d` of the transposed cell.
pub fn ht_support_stats(n: usize) -> Result<Vec<HtCellStat>> {
    if n > HT_STATS_MAX_RANK {
        return Err(Error::RankTooLarge(n, HT_STATS_MAX_RANK));
    }
    let g = group(n);
    let w0 = g.elem(g.longest()).clone();
    let shape = rouquier_shape(&w0)?;
    let mut stats = Vec::new();
    for lambda in Partition::all(n) {
        let in_cell: Vec<(i32, Summand)> = shape
            .degrees()
            .flat_map(|d| shape.entries(d).into_iter().map(move |s| (d, s)))
            .filter(|(_, s)| shape_of(&s.w) == lambda)
            .collect();
        let min_degree = in_cell
            .iter()
            .map(|(d, _)| *d)
            .min()
            .ok_or_else(|| Error::Violation(format!("HT_{} has no summand in cell {}", n, lambda)))?;
        let c = lambda.c() as i32;
        if min_degree != c {
            return Err(Error::Violation(format!("cell {} first meets HT_{} in degree {}, expected {}", lambda, n, min_degree, c)));
        }
        let mut bottom = Vec::new();
        for (_, s) in in_cell.iter().filter(|(d, _)| *d == c) {
            if s.shift != c || s.mult != 1 {
                return Err(Error::Violation(format!("unexpected summand {}({}) x{} in degree {}", s.w.name(), s.shift, s.mult, c)));
            }
            bottom.push(s.w.clone());
        }
        bottom.sort_by_key(|w| g.index_of(w));
        let mut expected: Vec<Permutation> = distinguished_involutions(n, &lambda.transpose())?
            .iter()
            .map(|d| w0.compose(d))
            .collect::<Result<_>>()?;
        expected.sort_by_key(|w| g.index_of(w));
        if bottom != expected {
            return Err(Error::Violation(format!(
                "degree {} summands of HT_{} in cell {} are [{}], expected [{}]",
                c,
                n,
                lambda,
                names(&bottom),
                names(&expected)
            )));
        }
        stats.push(HtCellStat { lambda, min_degree, bottom });
    }
    for a in &stats {
        for b in &stats {
            if a.lambda.dominance_lt(&b.lambda)? && a.min_degree >= b.min_degree {
                return Err(Error::Violation(format!(
                    "{} < {} but the first degrees are {} and {}",
                    a.lambda, b.lambda, a.min_degree, b.min_degree
                )));
            }
        }
    }
    Ok(stats)
}

fn names(ws: &[Permutation]) -> String {
    ws.iter().map(|w| w.name()).collect::<Vec<_>>().join(", ")
}

/// What a fixture's Euler characteristic is compared against.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Target {
    HalfTwist,
    FullTwist,
    HalfTwistTimes(Permutation),
    FullTwistTimes(Permutation),
    QuasiIdempotent(Tableau),
}

impl Target {
    fn parse(n: usize, text: &str) -> Result<Self> {
        let words: Vec<&str> = text.split_whitespace().collect();
        match words.as_slice() {
            ["ht"] => Ok(Target::HalfTwist),
            ["ft"] => Ok(Target::FullTwist),
            ["ht", "*", w] => Ok(Target::HalfTwistTimes(parse_word(n, w)?)),
            ["ft", "*", w] => Ok(Target::FullTwistTimes(parse_word(n, w)?)),
            ["k", t] => {
                let t = Tableau::parse(t)?;
                if t.size() != n {
                    return Err(Error::Parse(format!("tableau {} does not have {} boxes", t, n)));
                }
                Ok(Target::QuasiIdempotent(t))
            }
            _ => Err(Error::Parse(format!("unknown target '{}'", text))),
        }
    }

    /// The target as an element of the KL basis.
    pub fn evaluate(&self, n: usize) -> Result<BigHecke> {
        let w0 = Hecke::basis_element(&Permutation::longest(n), Basis::Standard);
        let ht = || to_kl(&w0);
        let ft = || -> Result<Hecke> { Ok(to_kl(&std_mul(&w0, &w0)?)) };
        let times = |a: Hecke, x: &Permutation| kl_mul(&a, &Hecke::basis_element(x, Basis::Kl));
        let out = match self {
            Target::HalfTwist => ht(),
            Target::FullTwist => ft()?,
            Target::HalfTwistTimes(x) => times(ht(), x)?,
            Target::FullTwistTimes(x) => times(ft()?, x)?,
            Target::QuasiIdempotent(t) => return quasi_idempotent(&TableauPath::from_tableau(t)),
        };
        Ok(out.convert())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fixture {
    pub name: String,
    pub target: Target,
    pub target_text: String,
    pub expect_match: bool,
    /// Element whose Rouquier complex this shape must be, if any.
    pub rouquier: Option<Permutation>,
    pub shape: ComplexShape,
}

const FIXTURE_DATA: &str = include_str!("../data/fixtures.txt");
const FIXTURE_FORMAT: u32 = 1;

fn parse_word(n: usize, w: &str) -> Result<Permutation> {
    if w == "1" {
        Ok(Permutation::identity(n))
    } else {
        Permutation::parse(n, w)
    }
}

fn parse_summand(n: usize, item: &str) -> Result<(Permutation, i32, u64)> {
    let bad = || Error::Parse(format!("bad summand '{}'", item));
    let (mult, rest) = match item.split_once('*') {
        Some((m, r)) => (m.parse::<u64>().map_err(|_| bad())?, r),
        None => (1, item),
    };
    let open = rest.find('(').ok_or_else(bad)?;
    let shift = rest[open + 1..].strip_suffix(')').ok_or_else(bad)?.parse::<i32>().map_err(|_| bad())?;
    Ok((parse_word(n, &rest[..open])?, shift, mult))
}

/// Parses the fixture file format described at the top of `data/fixtures.txt`.
pub fn parse_fixtures(text: &str) -> Result<Vec<Fixture>> {
    let mut out = Vec::new();
    let mut format = None;
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    while let Some((ln, line)) = lines.next() {
        let err = |m: &str| Error::Parse(format!("line {}: {}", ln, m));
        if let Some(v) = line.strip_prefix("format ") {
            let v: u32 = v.trim().parse().map_err(|_| err("bad format version"))?;
            if v != FIXTURE_FORMAT {
                return Err(err(&format!("unsupported format {}", v)));
            }
            format = Some(v);
            continue;
        }
        if format.is_none() {
            return Err(err("missing format line"));
        }
        let name = line.strip_prefix("fixture ").ok_or_else(|| err("expected 'fixture <name>'"))?.trim().to_string();
        let mut n = None;
        let mut target_text = None;
        let mut expect_match = true;
        let mut rouquier_text = None;
        let mut rows: Vec<(usize, i32, String)> = Vec::new();
        loop {
            let (ln, line) = lines.next().ok_or_else(|| Error::Parse(format!("fixture {} is not closed", name)))?;
            let err = |m: &str| Error::Parse(format!("line {}: {}", ln, m));
            if line == "end" {
                break;
            }
            if let Some((d, rest)) = line.split_once(':') {
                let d: i32 = d.trim().parse().map_err(|_| err("bad degree"))?;
                rows.push((ln, d, rest.to_string()));
                continue;
            }
            let (key, value) = line.split_once(' ').ok_or_else(|| err("expected 'key value'"))?;
            let value = value.trim();
            match key {
                "n" => n = Some(value.parse::<usize>().map_err(|_| err("bad rank"))?),
                "target" => target_text = Some(value.to_string()),
                "rouquier" => rouquier_text = Some(value.to_string()),
                "expect" => {
                    expect_match = match value {
                        "match" => true,
                        "mismatch" => false,
                        _ => return Err(err("expect must be match or mismatch")),
                    }
                }
                _ => return Err(err(&format!("unknown key '{}'", key))),
            }
        }
        let n = n.ok_or_else(|| Error::Parse(format!("fixture {} has no rank", name)))?;
        let target_text = target_text.ok_or_else(|| Error::Parse(format!("fixture {} has no target", name)))?;
        let target = Target::parse(n, &target_text)?;
        let rouquier = rouquier_text.map(|w| parse_word(n, &w)).transpose()?;
        let mut shape = ComplexShape::new(n);
        for (ln, d, rest) in rows {
            for item in rest.split_whitespace() {
                let (w, shift, mult) = parse_summand(n, item).map_err(|e| Error::Parse(format!("line {}: {}", ln, e)))?;
                shape.add(d, &w, shift, mult)?;
            }
        }
        out.push(Fixture { name, target, target_text, expect_match, rouquier, shape });
    }
    Ok(out)
}

/// The fixtures bundled with the crate.
pub fn fixtures() -> Vec<Fixture> {
    parse_fixtures(FIXTURE_DATA).expect("bundled fixture file parses")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixtureCheck {
    pub name: String,
    pub target: String,
    pub expect_match: bool,
    pub matched: bool,
}

impl FixtureCheck {
    pub fn as_expected(&self) -> bool {
        self.matched == self.expect_match
    }

    pub fn to_json(&self) -> Value {
        json!({ "name": self.name, "target": self.target, "expect_match": self.expect_match, "matched": self.matched })
    }
}

pub fn check_fixture(f: &Fixture) -> Result<FixtureCheck> {
    let n = f.shape.n();
    let euler: BigHecke = euler_characteristic(&f.shape).convert();
    let mut matched = euler == f.target.evaluate(n)?;
    if let Some(w) = &f.rouquier {
        matched &= rouquier_shape(w)? == f.shape;
    }
    Ok(FixtureCheck { name: f.name.clone(), target: f.target_text.clone(), expect_match: f.expect_match, matched })
}

/// Checks every bundled fixture; errors on the first outcome that differs from the recorded expectation.
pub fn fixture_euler_checks() -> Result<Vec<FixtureCheck>> {
    let mut out = Vec::new();
    for f in fixtures() {
        let c = check_fixture(&f)?;
        if !c.as_expected() {
            return Err(Error::Violation(format!(
                "fixture {}: Euler characteristic {} {}",
                c.name,
                if c.matched { "unexpectedly equals" } else { "differs from" },
                c.target
            )));
        }
        out.push(c);
    }
    Ok(out)
}
