//! Clique-cover index codes: construction, XOR encoding, decoding with side
//! information, and exhaustive or sampled verification.
//!
//! A code splits every message into `t` parts and sends one XOR per slot.
//! Slot contents are `(message, part)` pairs, both 0-based in memory and
//! 1-based in the text format:
//!
//! ```text
//! t 2
//! s 1:1 2:1
//! s 2:2 3:1
//! ```

use std::collections::BTreeMap;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::bounds::{b_fold_chromatic, canonical_partition, clique_cover_number};
use crate::error::{Error, Result};
use crate::graph::{bit, SideInfoGraph, VertexSet};
use crate::limits::Limits;
use crate::par::Exec;
use crate::rational::{self, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexCode {
    n: usize,
    t: usize,
    slots: Vec<Vec<(usize, usize)>>,
}

impl IndexCode {
    /// Builds a code, checking that every part of every message sits in
    /// exactly one slot.
    pub fn new(n: usize, t: usize, slots: Vec<Vec<(usize, usize)>>) -> Result<Self> {
        if n == 0 || t == 0 {
            return Err(Error::InvalidArgument("a code needs n >= 1 and t >= 1".into()));
        }
        let mut seen = vec![false; n * t];
        for slot in &slots {
            for &(m, p) in slot {
                if m >= n || p >= t {
                    return Err(Error::InvalidArgument(format!("part {}:{} out of range", m + 1, p + 1)));
                }
                if std::mem::replace(&mut seen[m * t + p], true) {
                    return Err(Error::InvalidArgument(format!("part {}:{} sent twice", m + 1, p + 1)));
                }
            }
        }
        if let Some(i) = seen.iter().position(|&s| !s) {
            return Err(Error::InvalidArgument(format!("part {}:{} never sent", i / t + 1, i % t + 1)));
        }
        Ok(IndexCode { n, t, slots })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn t(&self) -> usize {
        self.t
    }

    /// Number of transmitted bits per use.
    pub fn r(&self) -> usize {
        self.slots.len()
    }

    pub fn slots(&self) -> &[Vec<(usize, usize)>] {
        &self.slots
    }

    /// r / t.
    pub fn rate(&self) -> Rational {
        rational::ratio(self.r() as i64, self.t as i64)
    }

    /// `assignment()[m][p]` is the slot carrying part `p` of message `m`.
    pub fn assignment(&self) -> Vec<Vec<usize>> {
        let mut out = vec![vec![0; self.t]; self.n];
        for (s, slot) in self.slots.iter().enumerate() {
            for &(m, p) in slot {
                out[m][p] = s;
            }
        }
        out
    }

    /// Messages sharing slot `s`.
    pub fn slot_messages(&self, s: usize) -> u64 {
        self.slots[s].iter().fold(0, |acc, &(m, _)| acc | bit(m))
    }

    pub fn to_text(&self) -> String {
        self.to_string()
    }

    /// Parses the text format for an instance on `n` messages.
    pub fn parse(text: &str, n: usize) -> Result<Self> {
        let mut t = None;
        let mut slots = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let mut fields = line.split_whitespace();
            match fields.next() {
                Some("t") => {
                    if t.is_some() || !slots.is_empty() {
                        return Err(Error::parse(line_no, "'t' must appear once, before any slot"));
                    }
                    let value = fields
                        .next()
                        .and_then(|f| f.parse::<usize>().ok())
                        .filter(|&v| v > 0)
                        .ok_or_else(|| Error::parse(line_no, "expected 't <positive integer>'"))?;
                    if fields.next().is_some() {
                        return Err(Error::parse(line_no, "trailing tokens after 't'"));
                    }
                    t = Some(value);
                }
                Some("s") => {
                    if t.is_none() {
                        return Err(Error::parse(line_no, "slot before 't' header"));
                    }
                    let mut slot = Vec::new();
                    for f in fields {
                        let (m, p) = f
                            .split_once(':')
                            .and_then(|(m, p)| Some((m.parse::<usize>().ok()?, p.parse::<usize>().ok()?)))
                            .filter(|&(m, p)| m >= 1 && p >= 1)
                            .ok_or_else(|| Error::parse(line_no, format!("bad part '{f}', expected message:part")))?;
                        slot.push((m - 1, p - 1));
                    }
                    if slot.is_empty() {
                        return Err(Error::parse(line_no, "empty slot"));
                    }
                    slots.push(slot);
                }
                Some(other) => return Err(Error::parse(line_no, format!("unknown directive '{other}'"))),
                None => unreachable!("empty lines skipped"),
            }
        }
        let t = t.ok_or_else(|| Error::parse(1, "missing 't' header"))?;
        IndexCode::new(n, t, slots)
    }
}

impl fmt::Display for IndexCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "t {}", self.t)?;
        for slot in &self.slots {
            f.write_str("s")?;
            for &(m, p) in slot {
                write!(f, " {}:{}", m + 1, p + 1)?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

impl Serialize for IndexCode {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a> {
            n: usize,
            t: usize,
            r: usize,
            #[serde(serialize_with = "rational::serialize")]
            rate: &'a Rational,
            slots: Vec<Vec<(usize, usize)>>,
        }
        Repr {
            n: self.n,
            t: self.t,
            r: self.r(),
            rate: &self.rate(),
            slots: self
                .slots
                .iter()
                .map(|sl| sl.iter().map(|&(m, p)| (m + 1, p + 1)).collect())
                .collect(),
        }
        .serialize(s)
    }
}

/// One slot per clique of an optimal clique partition; t = 1.
pub fn build_clique_cover_code(g: &SideInfoGraph, limits: &Limits) -> Result<IndexCode> {
    let (_, parts) = clique_cover_number(g, limits)?;
    let slots = parts.iter().map(|c| c.iter().map(|m| (m, 0)).collect()).collect();
    IndexCode::new(g.n(), 1, slots)
}

/// One slot per clique of an optimal b-fold clique cover; part `p` of
/// message `m` goes to the `p`-th clique containing `m` in canonical order.
pub fn build_fractional_code(g: &SideInfoGraph, b: usize, limits: &Limits) -> Result<IndexCode> {
    if b == 0 {
        return Err(Error::InvalidArgument("fold count b must be positive".into()));
    }
    if b == 1 {
        return build_clique_cover_code(g, limits);
    }
    let coloring = b_fold_chromatic(&g.bidirectional_core().complement(), b, limits)?;
    let mut classes = vec![Vec::new(); coloring.colors_used];
    for (v, cs) in coloring.colors.iter().enumerate() {
        for &c in cs {
            classes[c].push(v);
        }
    }
    let cliques = canonical_partition(
        classes
            .into_iter()
            .filter(|c| !c.is_empty())
            .map(|c| VertexSet::new(c, g.n()))
            .collect::<Result<Vec<_>>>()?,
    );
    let mut next_part = vec![0usize; g.n()];
    let slots = cliques
        .iter()
        .map(|c| {
            c.iter()
                .map(|m| {
                    let p = next_part[m];
                    next_part[m] += 1;
                    (m, p)
                })
                .collect()
        })
        .collect();
    IndexCode::new(g.n(), b, slots)
}

/// n messages of t bits each.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MessageVector {
    t: usize,
    messages: Vec<Vec<bool>>,
}

impl MessageVector {
    pub fn new(messages: Vec<Vec<bool>>) -> Result<Self> {
        let t = messages.first().map_or(0, Vec::len);
        if messages.iter().any(|m| m.len() != t) {
            return Err(Error::DimensionMismatch("messages must share one length".into()));
        }
        Ok(MessageVector { t, messages })
    }

    /// Bit `m * t + p` of `index` is part `p` of message `m`.
    pub fn from_index(n: usize, t: usize, index: u64) -> Self {
        let messages = (0..n)
            .map(|m| (0..t).map(|p| (index >> (m * t + p)) & 1 == 1).collect())
            .collect();
        MessageVector { t, messages }
    }

    pub fn random<R: Rng + ?Sized>(n: usize, t: usize, rng: &mut R) -> Self {
        let messages = (0..n).map(|_| (0..t).map(|_| rng.gen()).collect()).collect();
        MessageVector { t, messages }
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn len(&self) -> usize {
        self.messages.len()
    }

    pub fn is_empty(&self) -> bool {
        self.messages.is_empty()
    }

    pub fn message(&self, m: usize) -> &[bool] {
        &self.messages[m]
    }
}

pub fn encode(code: &IndexCode, x: &MessageVector) -> Result<Vec<bool>> {
    if x.len() != code.n || x.t != code.t {
        return Err(Error::DimensionMismatch(format!(
            "code expects {} messages of {} bits, got {} of {}",
            code.n,
            code.t,
            x.len(),
            x.t
        )));
    }
    Ok(code
        .slots
        .iter()
        .map(|slot| slot.iter().fold(false, |acc, &(m, p)| acc ^ x.messages[m][p]))
        .collect())
}

/// Why a receiver could not decode.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DecodeFault {
    /// 1-based slot, receiver and message.
    pub slot: usize,
    pub receiver: usize,
    pub message: usize,
}

fn decode_with<F>(code: &IndexCode, j: usize, y: &[bool], known: F) -> std::result::Result<Vec<bool>, DecodeFault>
where
    F: Fn(usize, usize) -> Option<bool>,
{
    let mut out = vec![false; code.t];
    for (s, slot) in code.slots.iter().enumerate() {
        if !slot.iter().any(|&(m, _)| m == j) {
            continue;
        }
        let mut acc = y[s];
        let mut target = None;
        for &(m, p) in slot {
            if m == j && target.is_none() {
                target = Some(p);
                continue;
            }
            let fault = DecodeFault {
                slot: s + 1,
                receiver: j + 1,
                message: m + 1,
            };
            acc ^= if m == j { return Err(fault) } else { known(m, p).ok_or(fault)? };
        }
        out[target.expect("slot holds receiver's part")] = acc;
    }
    Ok(out)
}

/// Recovers message `j` from the transmission `y` and the values of the
/// messages in `side` (keyed by 0-based message index).
pub fn decode(code: &IndexCode, j: usize, y: &[bool], side: &BTreeMap<usize, Vec<bool>>) -> Result<Vec<bool>> {
    if j >= code.n {
        return Err(Error::VertexOutOfRange { vertex: j + 1, n: code.n });
    }
    if y.len() != code.r() {
        return Err(Error::DimensionMismatch(format!("expected {} transmitted bits, got {}", code.r(), y.len())));
    }
    if let Some((m, _)) = side.iter().find(|(_, v)| v.len() != code.t) {
        return Err(Error::DimensionMismatch(format!("side message {} has wrong length", m + 1)));
    }
    decode_with(code, j, y, |m, p| side.get(&m).map(|v| v[p])).map_err(|f| Error::MissingSideInformation {
        receiver: f.receiver,
        message: f.message,
    })
}

/// How many message vectors to test.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Trials {
    /// Exhaustive when t n <= 20, else this many seeded random vectors.
    Auto(u64),
    Random(u64),
    Exhaustive,
}

/// Largest t n for which every message vector is tried.
pub const EXHAUSTIVE_BITS: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DecodeFailure {
    pub case: u64,
    pub fault: Option<DecodeFault>,
    /// 1-based receiver that decoded a wrong value.
    pub wrong_receiver: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CodeVerdict {
    pub passed: bool,
    pub exhaustive: bool,
    pub cases: u64,
    pub seed: u64,
    /// 1-based slots whose messages do not form a clique of the graph.
    pub non_clique_slots: Vec<usize>,
    pub failure: Option<DecodeFailure>,
    pub notes: Vec<String>,
}

fn run_case(code: &IndexCode, side: &[u64], x: &MessageVector, case: u64) -> Option<DecodeFailure> {
    let y = encode(code, x).expect("dimensions fixed by construction");
    for (j, &mask) in side.iter().enumerate().take(code.n) {
        let known = |m: usize, p: usize| (mask & bit(m) != 0).then(|| x.messages[m][p]);
        match decode_with(code, j, &y, known) {
            Err(fault) => {
                return Some(DecodeFailure {
                    case,
                    fault: Some(fault),
                    wrong_receiver: None,
                })
            }
            Ok(v) if v != x.messages[j] => {
                return Some(DecodeFailure {
                    case,
                    fault: None,
                    wrong_receiver: Some(j + 1),
                })
            }
            Ok(_) => {}
        }
    }
    None
}

/// Checks the clique property of every slot and runs every receiver's
/// decoder against encoded message vectors.
pub fn verify_code(g: &SideInfoGraph, code: &IndexCode, trials: Trials, seed: u64, exec: Exec) -> CodeVerdict {
    let mut notes = Vec::new();
    if code.n != g.n() {
        notes.push(format!("code has {} messages, instance has {}", code.n, g.n()));
        return CodeVerdict {
            passed: false,
            exhaustive: false,
            cases: 0,
            seed,
            non_clique_slots: Vec::new(),
            failure: None,
            notes,
        };
    }
    let core = g.bidirectional_core();
    let non_clique_slots: Vec<usize> = (0..code.r())
        .filter(|&s| !core.is_clique(code.slot_messages(s)))
        .map(|s| s + 1)
        .collect();
    let bits = code.n * code.t;
    let (exhaustive, cases) = match trials {
        Trials::Exhaustive if bits < 64 => (true, 1u64 << bits),
        Trials::Auto(_) if bits <= EXHAUSTIVE_BITS => (true, 1u64 << bits),
        Trials::Auto(k) | Trials::Random(k) => (false, k),
        Trials::Exhaustive => {
            notes.push("too many message bits for exhaustive testing; nothing run".into());
            (true, 0)
        }
    };
    let side: Vec<u64> = (0..g.n()).map(|j| g.side_information_mask(j)).collect();
    let failure = exec
        .find_map_first(0..cases, |case| {
            let x = if exhaustive {
                MessageVector::from_index(code.n, code.t, case)
            } else {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                rng.set_stream(case);
                MessageVector::random(code.n, code.t, &mut rng)
            };
            run_case(code, &side, &x, case)
        })
        .map(|(_, f)| f);
    CodeVerdict {
        passed: non_clique_slots.is_empty() && failure.is_none() && cases > 0,
        exhaustive,
        cases,
        seed,
        non_clique_slots,
        failure,
        notes,
    }
}
