//! Exact partition arithmetic for Jordan types of nilpotent orbits.
//!
//! A partition is stored run-length encoded as strictly decreasing
//! `(value, multiplicity)` pairs; every formula in this crate is expressed
//! in terms of the multiplicities `r_i`, so lookups are kept O(log k).
//!
//! Text form is comma-separated descending parts with optional exponents,
//! `"6^2,4^2"` being the same partition as `"6,6,4,4"`.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// The three classical families handled here.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Algebra {
    Sl,
    Sp,
    So,
}

impl Algebra {
    pub fn name(self) -> &'static str {
        match self {
            Algebra::Sl => "sl",
            Algebra::Sp => "sp",
            Algebra::So => "so",
        }
    }
}

impl fmt::Display for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algebra {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "sl" => Ok(Algebra::Sl),
            "sp" => Ok(Algebra::Sp),
            "so" => Ok(Algebra::So),
            other => Err(Error::InvalidOrbit(format!(
                "unknown algebra `{other}` (expected sl, sp or so)"
            ))),
        }
    }
}

/// Label distinguishing the two orbits of a very even so-partition.
///
/// `Induced` marks orbits produced mid-chain by an induction step whose
/// target happens to be very even: there is a unique orbit the source is
/// induced from, but the construction does not compute which of the two
/// labels it carries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum VeryEvenLabel {
    Plus,
    Minus,
    Induced,
}

/// A partition in canonical run-length form.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    /// `(value, multiplicity)` with values strictly decreasing, all >= 1.
    parts: Vec<(u64, u64)>,
}

impl Partition {
    /// The empty partition (ambient size 0). Never produced by the text
    /// parser; it occurs only as the base of degenerate induction chains.
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Canonicalize a raw list of parts.
    pub fn canonicalize(raw: &[u64]) -> Result<Self> {
        if raw.is_empty() {
            return Err(Error::InvalidPartition("empty part list".into()));
        }
        if raw.contains(&0) {
            return Err(Error::InvalidPartition("parts must be positive".into()));
        }
        let mut sorted = raw.to_vec();
        sorted.sort_unstable_by(|a, b| b.cmp(a));
        let mut parts: Vec<(u64, u64)> = Vec::new();
        for v in sorted {
            match parts.last_mut() {
                Some((value, mult)) if *value == v => *mult += 1,
                _ => parts.push((v, 1)),
            }
        }
        let p = Partition { parts };
        p.checked_sum()?;
        Ok(p)
    }

    /// The ambient size, or an error when it does not fit in a `u64`.
    fn checked_sum(&self) -> Result<u64> {
        let mut total: u64 = 0;
        for &(v, m) in &self.parts {
            let term = v
                .checked_mul(m)
                .ok_or_else(|| Error::InvalidPartition("partition size overflows".into()))?;
            total = total
                .checked_add(term)
                .ok_or_else(|| Error::InvalidPartition("partition size overflows".into()))?;
        }
        Ok(total)
    }

    /// Build from `(value, multiplicity)` pairs in any order; zero values and
    /// zero multiplicities are dropped, equal values merged. This is the
    /// constructor used by the induction rewrite rules.
    pub fn from_value_mults<I>(pairs: I) -> Self
    where
        I: IntoIterator<Item = (u64, u64)>,
    {
        let mut acc: Vec<(u64, u64)> = Vec::new();
        for (v, m) in pairs {
            if v == 0 || m == 0 {
                continue;
            }
            acc.push((v, m));
        }
        acc.sort_unstable_by_key(|&(v, _)| std::cmp::Reverse(v));
        let mut parts: Vec<(u64, u64)> = Vec::new();
        for (v, m) in acc {
            match parts.last_mut() {
                Some((value, mult)) if *value == v => *mult += m,
                _ => parts.push((v, m)),
            }
        }
        Partition { parts }
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Ambient size `m = sum(value * multiplicity)`.
    pub fn sum(&self) -> u64 {
        self.parts.iter().map(|(v, m)| v * m).sum()
    }

    /// Largest part `d`, if any.
    pub fn largest(&self) -> Option<u64> {
        self.parts.first().map(|(v, _)| *v)
    }

    /// Smallest part, if any.
    pub fn smallest(&self) -> Option<u64> {
        self.parts.last().map(|(v, _)| *v)
    }

    /// Multiplicity `r_i` of the value `i` (zero when `i` is not a member).
    pub fn multiplicity(&self, value: u64) -> u64 {
        self.parts
            .binary_search_by(|(v, _)| value.cmp(v))
            .map(|idx| self.parts[idx].1)
            .unwrap_or(0)
    }

    pub fn is_member(&self, value: u64) -> bool {
        self.multiplicity(value) > 0
    }

    /// Distinct members, descending.
    pub fn members(&self) -> impl Iterator<Item = u64> + '_ {
        self.parts.iter().map(|(v, _)| *v)
    }

    /// Run-length pairs, descending in value.
    pub fn pairs(&self) -> &[(u64, u64)] {
        &self.parts
    }

    /// All parts expanded to a flat descending list.
    pub fn flat(&self) -> Vec<u64> {
        let mut out = Vec::new();
        for &(v, m) in &self.parts {
            for _ in 0..m {
                out.push(v);
            }
        }
        out
    }

    /// Conjugate (transpose) partition, computed run by run: columns between
    /// consecutive distinct values all have the same height (the prefix sum
    /// of the multiplicities), so the dual comes out directly in run-length
    /// form without touching the Young diagram cell by cell.
    pub fn dual(&self) -> Partition {
        let mut out: Vec<(u64, u64)> = Vec::with_capacity(self.parts.len());
        let mut height = 0u64;
        for (idx, &(v, m)) in self.parts.iter().enumerate() {
            height += m;
            let next_v = self.parts.get(idx + 1).map(|&(w, _)| w).unwrap_or(0);
            out.push((height, v - next_v));
        }
        out.reverse();
        Partition { parts: out }
    }

    /// Members `i > 1` with `r_{i-1} = 0`, descending. These are the sites
    /// of both the codimension-2 singular loci and the induction steps.
    pub fn gap_members(&self) -> Vec<u64> {
        self.members()
            .filter(|&i| i > 1 && self.multiplicity(i - 1) == 0)
            .collect()
    }

    /// All members even.
    pub fn is_very_even(&self) -> bool {
        self.members().all(|v| v % 2 == 0)
    }

    /// Every odd member has multiplicity exactly 1. A very even partition is
    /// rather odd vacuously.
    pub fn is_rather_odd(&self) -> bool {
        self.parts.iter().all(|&(v, m)| v % 2 == 0 || m == 1)
    }

    /// The zero orbit `[1^m]` (or the empty partition).
    pub fn is_zero_type(&self) -> bool {
        self.parts.iter().all(|&(v, _)| v == 1)
    }

    /// Number of distinct odd members.
    pub fn count_odd(&self) -> u64 {
        self.members().filter(|v| v % 2 == 1).count() as u64
    }

    /// Number of distinct even members.
    pub fn count_even(&self) -> u64 {
        self.members().filter(|v| v % 2 == 0).count() as u64
    }

    /// `(a, b, gcd)` = (# distinct odd members, # distinct even members,
    /// gcd of all part values; 0 for the empty partition).
    pub fn counts(&self) -> (u64, u64, u64) {
        let gcd = self.members().fold(0u64, |acc, v| acc.gcd(&v));
        (self.count_odd(), self.count_even(), gcd)
    }

    /// Group the dual partition into constant blocks for the sl cover
    /// construction.
    ///
    /// Writing `g` for the gcd of the parts, the dual partition is always a
    /// concatenation of constant runs whose lengths are multiples of `g`;
    /// cutting it into consecutive runs of length exactly `g` yields the
    /// block values `i_1 >= ... >= i_r` with `sum(i_alpha) * g = m`. For a
    /// cover of degree `e | g` the flag then repeats each block `f = g / e`
    /// times at width `i_alpha * e`.
    pub fn sl_block_decomposition(&self, e: u64) -> Result<SlBlocks> {
        let (_, _, g) = self.counts();
        if g == 0 {
            return Err(Error::InvalidCoverDegree(
                "empty partition has no cover data".into(),
            ));
        }
        if e == 0 || g % e != 0 {
            return Err(Error::InvalidCoverDegree(format!(
                "degree {e} does not divide gcd {g} of the parts"
            )));
        }
        let f = g / e;
        // every run length of the dual is a multiple of g (it is a
        // difference of parts, all divisible by g), so cutting the dual into
        // consecutive runs of length g yields constant blocks
        let mut blocks = Vec::new();
        for &(value, mult) in self.dual().pairs() {
            debug_assert_eq!(mult % g, 0);
            for _ in 0..mult / g {
                blocks.push(value);
            }
        }
        Ok(SlBlocks { d: g, e, f, blocks })
    }

    fn fmt_text(&self) -> String {
        let mut out = String::new();
        for (idx, &(v, m)) in self.parts.iter().enumerate() {
            if idx > 0 {
                out.push(',');
            }
            if m == 1 {
                out.push_str(&v.to_string());
            } else {
                out.push_str(&format!("{v}^{m}"));
            }
        }
        out
    }

    /// Parse the text grammar `part := int | int '^' int`, comma-separated,
    /// non-increasing. Rejects the empty string; `parse_text_allow_empty`
    /// accepts it for round-tripping internally produced partitions.
    pub fn parse_text(s: &str) -> Result<Self> {
        if s.trim().is_empty() {
            return Err(Error::InvalidPartition("empty partition text".into()));
        }
        Self::parse_text_allow_empty(s)
    }

    pub fn parse_text_allow_empty(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let mut parts: Vec<(u64, u64)> = Vec::new();
        for token in s.split(',') {
            let token = token.trim();
            let (value, mult) = match token.split_once('^') {
                Some((v, m)) => (parse_int(v)?, parse_int(m)?),
                None => (parse_int(token)?, 1),
            };
            if value == 0 {
                return Err(Error::InvalidPartition(
                    "zero parts are not allowed; the zero orbit is [1^m]".into(),
                ));
            }
            if mult == 0 {
                return Err(Error::InvalidPartition("zero multiplicity".into()));
            }
            match parts.last_mut() {
                Some((prev, pm)) if *prev == value => {
                    *pm = pm.checked_add(mult).ok_or_else(|| {
                        Error::InvalidPartition("multiplicity overflows".into())
                    })?;
                }
                Some((prev, _)) if *prev < value => {
                    return Err(Error::InvalidPartition(format!(
                        "parts must be non-increasing ({} after {})",
                        value, *prev
                    )));
                }
                _ => parts.push((value, mult)),
            }
        }
        let p = Partition { parts };
        p.checked_sum()?;
        Ok(p)
    }
}

fn parse_int(s: &str) -> Result<u64> {
    s.trim()
        .parse::<u64>()
        .map_err(|_| Error::InvalidPartition(format!("bad integer `{s}`")))
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.fmt_text())
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Partition::parse_text(s)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.fmt_text())
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        Partition::parse_text_allow_empty(&s).map_err(serde::de::Error::custom)
    }
}

/// Dual-partition block data for the sl cover construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SlBlocks {
    /// gcd of the parts.
    pub d: u64,
    /// Chosen cover degree, `e | d`.
    pub e: u64,
    /// `d / e`: how many times each block repeats in the flag.
    pub f: u64,
    /// Block values `i_1 >= ... >= i_r`.
    pub blocks: Vec<u64>,
}

/// A nilpotent orbit named by its Jordan type.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct OrbitId {
    pub algebra: Algebra,
    pub size: u64,
    pub partition: Partition,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub very_even_label: Option<VeryEvenLabel>,
}

impl OrbitId {
    /// The ambient size is always inferred from the partition sum, so an
    /// inconsistent pair cannot be constructed. A very even so-partition
    /// names two orbits; unless a label is attached afterwards it defaults
    /// to Plus (the choice never affects any combinatorial output).
    pub fn new(algebra: Algebra, partition: Partition) -> Self {
        let size = partition.sum();
        let very_even_label = (algebra == Algebra::So
            && !partition.is_empty()
            && partition.is_very_even())
        .then_some(VeryEvenLabel::Plus);
        OrbitId {
            algebra,
            size,
            partition,
            very_even_label,
        }
    }

    /// Attach a +/- label; only meaningful for a very even so-partition.
    pub fn with_label(mut self, label: VeryEvenLabel) -> Result<Self> {
        if self.algebra != Algebra::So || !self.partition.is_very_even() {
            return Err(Error::InvalidOrbit(
                "a very-even label applies only to very even so-partitions".into(),
            ));
        }
        self.very_even_label = Some(label);
        Ok(self)
    }

    /// True iff the partition is the Jordan type of a nilpotent orbit of the
    /// stated algebra: any partition for sl; all odd members with even
    /// multiplicity for sp (this forces the size even); all even members
    /// with even multiplicity for so.
    pub fn validate_jordan_type(&self) -> bool {
        match self.algebra {
            Algebra::Sl => true,
            Algebra::Sp => self
                .partition
                .pairs()
                .iter()
                .all(|&(v, m)| v % 2 == 0 || m % 2 == 0),
            Algebra::So => self
                .partition
                .pairs()
                .iter()
                .all(|&(v, m)| v % 2 == 1 || m % 2 == 0),
        }
    }

    pub fn ensure_valid(&self) -> Result<()> {
        if self.validate_jordan_type() {
            Ok(())
        } else {
            Err(Error::InvalidOrbit(format!(
                "[{}] is not a Jordan type of a nilpotent {}({}) orbit",
                self.partition, self.algebra, self.size
            )))
        }
    }

    pub fn is_zero_orbit(&self) -> bool {
        self.partition.is_zero_type()
    }

    /// Conditions (i)/(ii)/(iii) of the ambient family; see
    /// [`ConditionReport`].
    pub fn conditions(&self) -> ConditionReport {
        conditions(self.algebra, &self.partition)
    }
}

impl fmt::Display for OrbitId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let label = match self.very_even_label {
            Some(VeryEvenLabel::Plus) => "+",
            Some(VeryEvenLabel::Minus) => "-",
            Some(VeryEvenLabel::Induced) => "~",
            None => "",
        };
        write!(f, "{}({}) [{}]{}", self.algebra, self.size, self.partition, label)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Condition {
    I,
    II,
    III,
}

/// Outcome of the three per-family conditions.
///
/// For sp: (i) every odd member has even multiplicity, (ii) every even
/// integer from 2 up to the largest even integer <= d is a member, (iii) no
/// even member has multiplicity 2.
///
/// For so: (i) every even member has even multiplicity, (ii) every odd
/// integer from 1 up to the largest odd integer <= d is a member, (iii)
/// adjacent members differ by at most 4, a difference of exactly 4 occurs
/// only between two odd members, and the smallest member is smaller than 4.
///
/// For sl the report is vacuously all-true.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConditionReport {
    pub cond_i: bool,
    pub cond_ii: bool,
    pub cond_iii: bool,
    pub witnesses: Vec<(Condition, u64)>,
}

impl ConditionReport {
    pub fn all(&self) -> bool {
        self.cond_i && self.cond_ii && self.cond_iii
    }
}

pub fn conditions(algebra: Algebra, p: &Partition) -> ConditionReport {
    let mut witnesses = Vec::new();
    let (cond_i, cond_ii, cond_iii) = match algebra {
        Algebra::Sl => (true, true, true),
        Algebra::Sp => {
            let mut i = true;
            let mut ii = true;
            let mut iii = true;
            for &(v, m) in p.pairs() {
                if v % 2 == 1 && m % 2 == 1 {
                    i = false;
                    witnesses.push((Condition::I, v));
                }
                if v % 2 == 0 && m == 2 {
                    iii = false;
                    witnesses.push((Condition::III, v));
                }
            }
            if let Some(d) = p.largest() {
                let top_even = if d % 2 == 0 { d } else { d - 1 };
                let mut want = 2;
                while want <= top_even {
                    if !p.is_member(want) {
                        ii = false;
                        witnesses.push((Condition::II, want));
                    }
                    want += 2;
                }
            }
            (i, ii, iii)
        }
        Algebra::So => {
            let mut i = true;
            let mut ii = true;
            let mut iii = true;
            for &(v, m) in p.pairs() {
                if v % 2 == 0 && m % 2 == 1 {
                    i = false;
                    witnesses.push((Condition::I, v));
                }
            }
            if let Some(d) = p.largest() {
                let top_odd = if d % 2 == 1 { d } else { d - 1 };
                let mut want = 1;
                while want <= top_odd {
                    if !p.is_member(want) {
                        ii = false;
                        witnesses.push((Condition::II, want));
                    }
                    want += 2;
                }
            }
            let members: Vec<u64> = p.members().collect();
            for pair in members.windows(2) {
                let (hi, lo) = (pair[0], pair[1]);
                let diff = hi - lo;
                if diff > 4 || (diff == 4 && (hi % 2 == 0 || lo % 2 == 0)) {
                    iii = false;
                    witnesses.push((Condition::III, hi));
                }
            }
            if let Some(s) = p.smallest() {
                if s >= 4 {
                    iii = false;
                    witnesses.push((Condition::III, s));
                }
            }
            (i, ii, iii)
        }
    };
    ConditionReport {
        cond_i,
        cond_ii,
        cond_iii,
        witnesses,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        Partition::parse_text(s).unwrap()
    }

    #[test]
    fn canonicalize_sorts_and_groups() {
        let got = Partition::canonicalize(&[4, 6, 4, 6]).unwrap();
        assert_eq!(got, p("6^2,4^2"));
        assert_eq!(Partition::canonicalize(&[2]).unwrap(), p("2"));
        assert_eq!(Partition::canonicalize(&[9, 6]).unwrap(), p("9,6"));
        assert!(Partition::canonicalize(&[]).is_err());
        assert!(Partition::canonicalize(&[3, 0]).is_err());
    }

    #[test]
    fn text_grammar_accepts_both_forms() {
        assert_eq!(p("6^2,4^2"), p("6,6,4,4"));
        assert_eq!(p("6^2,4^2").to_string(), "6^2,4^2");
        assert_eq!(p("3").to_string(), "3");
        assert!(Partition::parse_text("").is_err());
        assert!(Partition::parse_text("0").is_err());
        assert!(Partition::parse_text("4,6").is_err());
        assert!(Partition::parse_text("2^0").is_err());
        // adjacent equal tokens merge
        assert_eq!(p("3,3^2"), p("3^3"));
    }

    /// Independent transpose: count boxes per column of the Young diagram.
    fn naive_dual(q: &Partition) -> Partition {
        let flat = q.flat();
        let d = flat.first().copied().unwrap_or(0);
        let cols: Vec<u64> = (1..=d)
            .map(|h| flat.iter().filter(|&&x| x >= h).count() as u64)
            .collect();
        if cols.is_empty() {
            Partition::empty()
        } else {
            Partition::canonicalize(&cols).unwrap()
        }
    }

    #[test]
    fn dual_examples() {
        assert_eq!(p("9,6").dual(), p("2^6,1^3"));
        assert_eq!(p("1^5").dual(), p("5"));
        // frozen from the naive transpose oracle
        assert_eq!(naive_dual(&p("4,3^2,2,1^2")), p("6,4,3,1"));
        assert_eq!(p("4,3^2,2,1^2").dual(), p("6,4,3,1"));
    }

    #[test]
    fn dual_is_involutive_small() {
        for n in 1..=12u64 {
            for q in crate::scan::partitions_of(n) {
                assert_eq!(q.dual().dual(), q, "dual^2 != id at [{q}]");
            }
        }
    }

    #[test]
    fn dual_matches_naive_transpose_small() {
        for n in 1..=12u64 {
            for q in crate::scan::partitions_of(n) {
                assert_eq!(q.dual(), naive_dual(&q), "run-length dual differs at [{q}]");
            }
        }
    }

    #[test]
    fn oversized_input_is_rejected_cleanly() {
        assert!(Partition::parse_text("18446744073709551615^2").is_err());
        assert!(Partition::parse_text("3^18446744073709551615,3^18446744073709551615").is_err());
        // huge but representable values parse, and the run-length calculus
        // stays cheap on them
        let p = Partition::parse_text("1000000000000,1").unwrap();
        assert_eq!(p.dual().pairs().len(), 2);
        assert_eq!(p.dual().dual(), p);
    }

    #[test]
    fn gap_member_examples() {
        assert_eq!(p("10^2,7,5,4^2,2^2").gap_members(), vec![10, 7, 4, 2]);
        assert_eq!(p("1^6").gap_members(), Vec::<u64>::new());
        // scan of the definition: members i > 1 with r_{i-1} = 0
        assert_eq!(p("6^2,4^2").gap_members(), vec![6, 4]);
        assert_eq!(p("4,3^2,2,1^2").gap_members(), Vec::<u64>::new());
    }

    #[test]
    fn parity_predicates() {
        assert!(p("4^2,3,1").is_rather_odd());
        assert!(!p("4^2,3,1").is_very_even());
        assert!(p("2^4").is_very_even());
        assert!(p("2^4").is_rather_odd());
        assert!(!p("11^3,3^2,1").is_rather_odd());
    }

    #[test]
    fn counts_examples() {
        assert_eq!(p("6^2,4^2").counts().1, 2);
        assert_eq!(p("13^2,3,1").counts().0, 3);
        assert_eq!(p("9,6").counts().2, 3);
    }

    #[test]
    fn validate_jordan_types() {
        let sp = |s: &str| OrbitId::new(Algebra::Sp, p(s)).validate_jordan_type();
        let so = |s: &str| OrbitId::new(Algebra::So, p(s)).validate_jordan_type();
        let sl = |s: &str| OrbitId::new(Algebra::Sl, p(s)).validate_jordan_type();
        assert!(sp("6^2,4^2"));
        assert!(!sp("3,1"));
        assert!(so("15,8^2,3"));
        assert!(!so("2"));
        assert!(sl("3,1"));
        // sp validity forces even size
        assert!(!sp("3"));
    }

    #[test]
    fn condition_examples() {
        let r = conditions(Algebra::Sp, &p("4,3^2,2,1^2"));
        assert!(r.cond_i && r.cond_ii && r.cond_iii, "{r:?}");

        let r = conditions(Algebra::So, &p("11,8^2,7,3"));
        assert!(r.cond_i && r.cond_iii);
        assert!(!r.cond_ii);

        let r = conditions(Algebra::Sp, &p("8,4,2,1^2"));
        assert!(!r.cond_ii);
        assert!(r.witnesses.contains(&(Condition::II, 6)));

        // so-(iii): a gap of 4 between an even and an odd member cannot occur
        // (same parity), but a gap of 4 between evens fails
        let r = conditions(Algebra::So, &p("7,6^2,3^2"));
        assert!(r.cond_i && r.cond_iii);
        let r = conditions(Algebra::So, &p("6^2,2^2,1"));
        assert!(!r.cond_iii);
        // smallest member must be < 4
        let r = conditions(Algebra::So, &p("5,4^2"));
        assert!(!r.cond_iii);
    }

    #[test]
    fn witnesses_iff_false() {
        for n in 1..=10u64 {
            for q in crate::scan::partitions_of(n) {
                for alg in [Algebra::Sp, Algebra::So] {
                    let r = conditions(alg, &q);
                    let has = |c: Condition| r.witnesses.iter().any(|w| w.0 == c);
                    assert_eq!(!r.cond_i, has(Condition::I));
                    assert_eq!(!r.cond_ii, has(Condition::II));
                    assert_eq!(!r.cond_iii, has(Condition::III));
                }
            }
        }
    }

    #[test]
    fn sl_blocks_examples() {
        let b = p("9,6").sl_block_decomposition(3).unwrap();
        assert_eq!((b.d, b.f, b.blocks.clone()), (3, 1, vec![2, 2, 1]));

        let b = p("5").sl_block_decomposition(5).unwrap();
        assert_eq!((b.d, b.f, b.blocks.clone()), (5, 1, vec![1]));

        // trivial cover: same blocks, repeated f = 3 times in the flag
        let b = p("9,6").sl_block_decomposition(1).unwrap();
        assert_eq!((b.d, b.f, b.blocks.clone()), (3, 3, vec![2, 2, 1]));

        assert!(p("9,6").sl_block_decomposition(2).is_err());
    }

    #[test]
    fn block_sum_identity_small() {
        // sum(i_alpha) * gcd = m over every partition of n <= 12
        for n in 1..=12u64 {
            for q in crate::scan::partitions_of(n) {
                let (_, _, g) = q.counts();
                let b = q.sl_block_decomposition(g).unwrap();
                assert_eq!(b.blocks.iter().sum::<u64>() * g, q.sum());
                // every divisor is accepted
                for e in 1..=g {
                    if g % e == 0 {
                        assert!(q.sl_block_decomposition(e).is_ok());
                    }
                }
            }
        }
    }

    #[test]
    fn orbit_labels() {
        let o = OrbitId::new(Algebra::So, p("2^4"));
        assert!(o.with_label(VeryEvenLabel::Plus).is_ok());
        let o = OrbitId::new(Algebra::So, p("3,1"));
        assert!(o.with_label(VeryEvenLabel::Minus).is_err());
        let o = OrbitId::new(Algebra::Sp, p("2^4"));
        assert!(o.with_label(VeryEvenLabel::Plus).is_err());
    }
}
