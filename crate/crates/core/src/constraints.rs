//! Code families, membership predicates, exact cardinality computation,
//! the prefix/period-check bijections, redundancy evaluation and
//! enumerative (rank/unrank) encoding into each codebook.
//!
//! Four families are supported:
//!
//! * `C1(n,1,t)` - words whose longest run is at most `t`,
//! * `C2(n,b,t)` - words whose longest period-`b` subvector is at most `t`,
//! * `C3(n,<=b,t)` - the intersection of `C2(n,l,t)` for all `l <= b`,
//! * `C3_VT(n,b,t,a)` - `C3` restricted to the Varshamov-Tenengolts class
//!   with weighted-sum residue `a` modulo `n+1`.
//!
//! Counting is exact over arbitrary-precision integers; floating point only
//! appears in the final logarithm of [`CodeSpec::redundancy`].

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::word::Word;

/// Largest period window the counting automaton tracks. Beyond this the
/// state space grows too fast to be useful; small-`n` counting falls back
/// to plain enumeration instead.
const MAX_WINDOW: usize = 8;

/// Node budget for [`CodebookIndex`] tables (per-position states summed).
const NODE_BUDGET: usize = 1 << 22;

/// Enumeration fallback bound for counting when the automaton window is
/// exceeded.
const ENUM_FALLBACK_N: usize = 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    C1,
    C2,
    C3,
    C3Vt,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::C1 => write!(f, "C1"),
            Family::C2 => write!(f, "C2"),
            Family::C3 => write!(f, "C3"),
            Family::C3Vt => write!(f, "C3_VT"),
        }
    }
}

/// A fully parameterised codebook.
///
/// The compact text form is `family:n[:b]:t[:a]`, e.g. `C1:9:3`,
/// `C2:9:2:4`, `C3:64:2:9`, `C3_VT:12:2:5:3`. `C1` has no `b` component
/// (its period is implicitly 1).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CodeSpec {
    family: Family,
    n: usize,
    b: usize,
    t: usize,
    a: usize,
}

impl CodeSpec {
    /// Run-length limited code: longest run at most `t`.
    pub fn c1(n: usize, t: usize) -> Result<Self> {
        Self::build(Family::C1, n, 1, t, 0)
    }

    /// Period-limited code: longest period-`b` subvector at most `t`.
    pub fn c2(n: usize, b: usize, t: usize) -> Result<Self> {
        Self::build(Family::C2, n, b, t, 0)
    }

    /// Intersection of the period-limited codes for every period `<= b`.
    pub fn c3(n: usize, b: usize, t: usize) -> Result<Self> {
        Self::build(Family::C3, n, b, t, 0)
    }

    /// `C3` further restricted to VT residue `a` modulo `n+1`.
    pub fn c3_vt(n: usize, b: usize, t: usize, a: usize) -> Result<Self> {
        Self::build(Family::C3Vt, n, b, t, a)
    }

    fn build(family: Family, n: usize, b: usize, t: usize, a: usize) -> Result<Self> {
        let spec = CodeSpec { family, n, b, t, a };
        spec.validate()?;
        Ok(spec)
    }

    fn validate(&self) -> Result<()> {
        if self.n < 1 {
            return Err(Error::Spec("code length must be >= 1".into()));
        }
        match self.family {
            Family::C1 => {
                if self.b != 1 {
                    return Err(Error::Spec("C1 fixes b = 1".into()));
                }
                if self.t < 1 || self.t > self.n {
                    return Err(Error::Spec(format!(
                        "C1 requires 1 <= t <= n, got t={} n={}",
                        self.t, self.n
                    )));
                }
            }
            Family::C2 | Family::C3 | Family::C3Vt => {
                if self.b < 1 || self.b > self.t || self.t > self.n {
                    return Err(Error::Spec(format!(
                        "{} requires 1 <= b <= t <= n, got b={} t={} n={}",
                        self.family, self.b, self.t, self.n
                    )));
                }
                if self.family == Family::C3Vt && self.a > self.n {
                    return Err(Error::Spec(format!(
                        "VT residue must lie in 0..=n, got a={} n={}",
                        self.a, self.n
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Burst/period parameter; 1 for `C1`.
    pub fn b(&self) -> usize {
        self.b
    }

    pub fn t(&self) -> usize {
        self.t
    }

    /// VT residue; only meaningful for `C3_VT`.
    pub fn a(&self) -> usize {
        self.a
    }

    /// Membership test by direct evaluation of the defining constraints.
    pub fn is_member(&self, u: &Word) -> Result<bool> {
        if u.len() != self.n {
            return Err(Error::Length {
                expected: self.n,
                actual: u.len(),
            });
        }
        let ok = match self.family {
            Family::C1 => u.longest_periodic(1)? <= self.t,
            Family::C2 => u.longest_periodic(self.b)? <= self.t,
            Family::C3 => self.periods_ok(u)?,
            Family::C3Vt => {
                self.periods_ok(u)? && vt_syndrome(u, self.n + 1) == self.a
            }
        };
        Ok(ok)
    }

    fn periods_ok(&self, u: &Word) -> Result<bool> {
        for ell in 1..=self.b {
            if u.longest_periodic(ell)? > self.t {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Exact codebook size.
    pub fn count(&self) -> Result<BigUint> {
        match self.family {
            Family::C1 => Ok(count_c1(self.n, self.t)),
            Family::C2 => Ok(count_c2(self.n, self.b, self.t)),
            Family::C3 | Family::C3Vt => {
                match Automaton::for_spec(self) {
                    Ok(aut) => Ok(aut.count()),
                    // Window too wide for the DP; fall back to enumeration
                    // while that is still feasible.
                    Err(err) => {
                        if self.n <= ENUM_FALLBACK_N {
                            self.count_by_enumeration()
                        } else {
                            Err(err)
                        }
                    }
                }
            }
        }
    }

    fn count_by_enumeration(&self) -> Result<BigUint> {
        let mut total = 0u64;
        for v in 0..1u64 << self.n {
            if self.is_member(&Word::from_uint(v, self.n))? {
                total += 1;
            }
        }
        Ok(BigUint::from(total))
    }

    /// Redundancy in bits: `n - log2(count)`.
    pub fn redundancy(&self) -> Result<f64> {
        let count = self.count()?;
        if count.is_zero() {
            return Err(Error::EmptyCode);
        }
        Ok(self.n as f64 - log2_biguint(&count))
    }
}

impl fmt::Display for CodeSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::C1 => write!(f, "C1:{}:{}", self.n, self.t),
            Family::C2 => write!(f, "C2:{}:{}:{}", self.n, self.b, self.t),
            Family::C3 => write!(f, "C3:{}:{}:{}", self.n, self.b, self.t),
            Family::C3Vt => write!(f, "C3_VT:{}:{}:{}:{}", self.n, self.b, self.t, self.a),
        }
    }
}

impl FromStr for CodeSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(':').collect();
        let bad = || Error::Parse(format!("invalid code spec {s:?}"));
        let num = |p: &str| p.parse::<usize>().map_err(|_| bad());
        match parts.as_slice() {
            ["C1", n, t] => CodeSpec::c1(num(n)?, num(t)?),
            ["C2", n, b, t] => CodeSpec::c2(num(n)?, num(b)?, num(t)?),
            ["C3", n, b, t] => CodeSpec::c3(num(n)?, num(b)?, num(t)?),
            ["C3_VT", n, b, t, a] => CodeSpec::c3_vt(num(n)?, num(b)?, num(t)?, num(a)?),
            _ => Err(bad()),
        }
    }
}

impl Serialize for CodeSpec {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for CodeSpec {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Weighted-sum residue `sum(i * u_i) mod modulus`, positions 1-indexed.
pub fn vt_syndrome(u: &Word, modulus: usize) -> usize {
    let mut acc = 0usize;
    for (idx, bit) in u.iter().enumerate() {
        if bit == 1 {
            acc = (acc + idx + 1) % modulus;
        }
    }
    acc
}

/// Number of compositions of each `0..=k_max` into parts from `1..=max_part`.
fn compositions(k_max: usize, max_part: usize) -> Vec<BigUint> {
    let mut f = vec![BigUint::zero(); k_max + 1];
    f[0] = BigUint::one();
    for k in 1..=k_max {
        let lo = k.saturating_sub(max_part);
        let mut acc = BigUint::zero();
        for fj in &f[lo..k] {
            acc += fj;
        }
        f[k] = acc;
    }
    f
}

/// `|C1(n,1,t)|` by dynamic programming over run-length compositions:
/// each run length lies in `1..=t` and the first symbol is free.
pub fn count_c1(n: usize, t: usize) -> BigUint {
    if n == 0 {
        return BigUint::one();
    }
    let f = compositions(n, t);
    2u32 * &f[n]
}

/// `|R(n,t)|`: words of length `n` whose longest run of zeros is at most
/// `t`. Equals `|C1(n+1,1,t+1)| / 2`.
pub fn count_zero_run_limited(n: usize, t: usize) -> BigUint {
    let f = compositions(n + 1, t + 1);
    f[n + 1].clone()
}

/// `|C2(n,b,t)| = 2^b * |R(n-b, t-b)|`.
fn count_c2(n: usize, b: usize, t: usize) -> BigUint {
    count_zero_run_limited(n - b, t - b) << b
}

/// Lower bound `2^n * (1 - n / 2^(t-b))` on `|C3(n,<=b,t)|`, evaluated
/// exactly. Requires `t > b`; the value may be negative (and then vacuous).
pub fn lower_bound_c3(n: usize, b: usize, t: usize) -> Result<BigInt> {
    if t <= b {
        return Err(Error::Spec(format!(
            "lower bound requires t > b, got t={t} b={b}"
        )));
    }
    let full = BigInt::one() << n;
    // t - b <= n - 1 whenever t <= n and b >= 1, so this stays integral.
    let penalty = BigInt::from(n) << (n - (t - b));
    Ok(full - penalty)
}

/// Decoding goal used to pick a recommended constraint length.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Goal {
    /// One deletion, two heads.
    SingleDeletion,
    /// One burst of exactly `b` deletions, two heads.
    ExactBurst,
    /// One burst of at most `b` deletions, two heads.
    AtMostBurst,
}

/// Smallest head distance / constraint length achieving the stated goal
/// with vanishing redundancy: `ceil(log2 n) + 1`, `+ b`, or `+ b + 1`.
pub fn recommended_t(n: usize, b: usize, goal: Goal) -> usize {
    let log = ceil_log2(n);
    match goal {
        Goal::SingleDeletion => log + 1,
        Goal::ExactBurst => log + b,
        Goal::AtMostBurst => log + b + 1,
    }
}

pub(crate) fn ceil_log2(n: usize) -> usize {
    if n <= 1 {
        0
    } else {
        (n - 1).ilog2() as usize + 1
    }
}

/// Splits a word into its length-`b` prefix and `b`-period check vector.
/// This is a bijection from `C2(n,b,t)` onto pairs (prefix, member of
/// `R(n-b,t-b)`); [`psi`] inverts it.
pub fn phi(u: &Word, b: usize) -> Result<(Word, Word)> {
    if u.len() <= b {
        return Err(Error::Period {
            period: b,
            len: u.len(),
        });
    }
    Ok((u.subword(1, b)?, u.period_check(b)?))
}

/// Inverse of [`phi`]: rebuilds the word whose first `b` symbols are
/// `prefix` and whose later symbols each differ from the one `b` places
/// earlier exactly where `check` has a one.
pub fn psi(prefix: &Word, check: &Word, b: usize) -> Result<Word> {
    if b < 1 || prefix.len() != b {
        return Err(Error::Length {
            expected: b,
            actual: prefix.len(),
        });
    }
    let mut bits: Vec<u8> = Vec::with_capacity(b + check.len());
    bits.extend(prefix.iter());
    for (k, c) in check.iter().enumerate() {
        bits.push(bits[k] ^ c);
    }
    Word::from_bits(&bits)
}

fn log2_biguint(c: &BigUint) -> f64 {
    let bits = c.bits();
    if bits <= 64 {
        (c.to_u64().expect("fits") as f64).log2()
    } else {
        let shift = bits - 64;
        let top = (c >> shift).to_u64().expect("top limb fits");
        (top as f64).log2() + shift as f64
    }
}

// ---------------------------------------------------------------------------
// Constraint automaton
// ---------------------------------------------------------------------------

/// One state of the left-to-right constraint scan: the trailing `window`
/// symbols, the longest periodic suffix per constrained period, and the
/// running VT residue when one is required.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
struct Node {
    /// Packed trailing symbols; bit `k-1` is the symbol `k` positions back.
    last: u32,
    /// How many symbols have been seen, saturating at the window size.
    filled: u8,
    /// Longest periodic suffix length per entry of `periods`.
    z: [u16; MAX_WINDOW],
    /// Weighted-sum residue, 0 when no VT constraint applies.
    syn: u32,
}

struct Automaton {
    n: usize,
    window: usize,
    periods: Vec<usize>,
    t: usize,
    /// `(modulus, residue)` for the VT constraint.
    vt: Option<(u32, u32)>,
}

impl Automaton {
    fn for_spec(spec: &CodeSpec) -> Result<Self> {
        let periods: Vec<usize> = match spec.family {
            Family::C1 => vec![1],
            Family::C2 => vec![spec.b],
            Family::C3 | Family::C3Vt => (1..=spec.b).collect(),
        };
        let window = *periods.iter().max().expect("non-empty");
        if window > MAX_WINDOW {
            return Err(Error::Spec(format!(
                "period window {window} exceeds the DP limit {MAX_WINDOW}"
            )));
        }
        if spec.t > u16::MAX as usize || spec.n >= u32::MAX as usize {
            return Err(Error::Spec("parameters too large for the DP".into()));
        }
        let vt = match spec.family {
            Family::C3Vt => Some(((spec.n + 1) as u32, spec.a as u32)),
            _ => None,
        };
        Ok(Automaton {
            n: spec.n,
            window,
            periods,
            t: spec.t,
            vt,
        })
    }

    fn start(&self) -> Node {
        Node {
            last: 0,
            filled: 0,
            z: [0; MAX_WINDOW],
            syn: 0,
        }
    }

    /// Appends symbol `x` as position `pos` (1-indexed). `None` when some
    /// periodic suffix would exceed `t`.
    fn step(&self, node: &Node, pos: usize, x: u8) -> Option<Node> {
        let mut z = node.z;
        for (idx, &ell) in self.periods.iter().enumerate() {
            let zl = if pos <= ell {
                pos as u16
            } else {
                let back = ((node.last >> (ell - 1)) & 1) as u8;
                if back == x {
                    node.z[idx] + 1
                } else {
                    ell as u16
                }
            };
            if zl as usize > self.t {
                return None;
            }
            z[idx] = zl;
        }
        let filled = (node.filled + 1).min(self.window as u8);
        let mask = (1u32 << self.window) - 1;
        let last = ((node.last << 1) | x as u32) & mask;
        let syn = match self.vt {
            Some((m, _)) => (node.syn + x as u32 * (pos as u32 % m)) % m,
            None => 0,
        };
        Some(Node {
            last,
            filled,
            z,
            syn,
        })
    }

    fn accepts(&self, node: &Node) -> bool {
        match self.vt {
            Some((_, a)) => node.syn == a,
            None => true,
        }
    }

    /// Exact number of accepted words of length `n`, by a rolling forward
    /// DP. Position-independent transitions (no VT residue) are compiled
    /// to a static table once the warmup window has been filled.
    fn count(&self) -> BigUint {
        if self.vt.is_some() || self.n <= self.window {
            return self.count_rolling_map();
        }

        // Warm up through the first `window` positions.
        let mut cur: Vec<(Node, BigUint)> = vec![(self.start(), BigUint::one())];
        for pos in 1..=self.window {
            cur = roll_map_step(self, &cur, pos);
        }

        // Past the window every position behaves identically; close the
        // reachable set and compile transitions.
        let mut index: HashMap<Node, usize> = HashMap::new();
        let mut nodes: Vec<Node> = Vec::new();
        let mut pending: Vec<Node> = Vec::new();
        for (node, _) in &cur {
            index.insert(*node, nodes.len());
            nodes.push(*node);
            pending.push(*node);
        }
        let probe_pos = self.window + 1;
        let mut trans: Vec<[i32; 2]> = Vec::new();
        let mut head = 0usize;
        while head < nodes.len() {
            let node = nodes[head];
            let mut row = [-1i32; 2];
            for x in 0..2u8 {
                if let Some(next) = self.step(&node, probe_pos, x) {
                    let id = *index.entry(next).or_insert_with(|| {
                        nodes.push(next);
                        nodes.len() - 1
                    });
                    row[x as usize] = id as i32;
                }
            }
            trans.push(row);
            head += 1;
            let _ = &pending;
        }

        let mut counts = vec![BigUint::zero(); nodes.len()];
        for (node, c) in cur {
            counts[index[&node]] = c;
        }
        let mut next = vec![BigUint::zero(); nodes.len()];
        for _pos in self.window + 1..=self.n {
            for v in next.iter_mut() {
                v.set_zero();
            }
            for (i, c) in counts.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                for x in 0..2 {
                    let tgt = trans[i][x];
                    if tgt >= 0 {
                        next[tgt as usize] += c;
                    }
                }
            }
            std::mem::swap(&mut counts, &mut next);
        }
        counts.into_iter().sum()
    }

    fn count_rolling_map(&self) -> BigUint {
        let mut cur: Vec<(Node, BigUint)> = vec![(self.start(), BigUint::one())];
        for pos in 1..=self.n {
            cur = roll_map_step(self, &cur, pos);
        }
        cur.into_iter()
            .filter(|(node, _)| self.accepts(node))
            .map(|(_, c)| c)
            .sum()
    }
}

fn roll_map_step(
    aut: &Automaton,
    cur: &[(Node, BigUint)],
    pos: usize,
) -> Vec<(Node, BigUint)> {
    let mut index: HashMap<Node, usize> = HashMap::new();
    let mut out: Vec<(Node, BigUint)> = Vec::new();
    for (node, c) in cur {
        for x in 0..2u8 {
            if let Some(next) = aut.step(node, pos, x) {
                match index.get(&next) {
                    Some(&i) => out[i].1 += c,
                    None => {
                        index.insert(next, out.len());
                        out.push((next, c.clone()));
                    }
                }
            }
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Enumerative coding
// ---------------------------------------------------------------------------

/// Position-indexed unrolling of the constraint automaton together with
/// suffix counts, supporting lexicographic rank/unrank in time polynomial
/// in `n`. Immutable after construction and safe to share.
pub struct CodebookIndex {
    spec: CodeSpec,
    /// `layers[p]` holds the states reachable after `p` symbols.
    trans: Vec<Vec<[i32; 2]>>,
    /// `comp[p][i]` counts accepted completions of length `n - p`.
    comp: Vec<Vec<BigUint>>,
}

impl CodebookIndex {
    pub fn new(spec: &CodeSpec) -> Result<Self> {
        let aut = Automaton::for_spec(spec)?;
        let n = aut.n;

        let mut layers: Vec<Vec<Node>> = Vec::with_capacity(n + 1);
        let mut trans: Vec<Vec<[i32; 2]>> = Vec::with_capacity(n);
        layers.push(vec![aut.start()]);
        let mut total_nodes = 1usize;
        for pos in 1..=n {
            let prev = &layers[pos - 1];
            let mut index: HashMap<Node, usize> = HashMap::new();
            let mut nodes: Vec<Node> = Vec::new();
            let mut rows: Vec<[i32; 2]> = Vec::with_capacity(prev.len());
            for node in prev {
                let mut row = [-1i32; 2];
                for x in 0..2u8 {
                    if let Some(next) = aut.step(node, pos, x) {
                        let id = *index.entry(next).or_insert_with(|| {
                            nodes.push(next);
                            nodes.len() - 1
                        });
                        row[x as usize] = id as i32;
                    }
                }
                rows.push(row);
            }
            total_nodes += nodes.len();
            if total_nodes > NODE_BUDGET {
                return Err(Error::TableBudget {
                    nodes: total_nodes as u128,
                    limit: NODE_BUDGET as u128,
                });
            }
            layers.push(nodes);
            trans.push(rows);
        }

        // Suffix counts, rightmost layer first.
        let mut comp: Vec<Vec<BigUint>> = vec![Vec::new(); n + 1];
        comp[n] = layers[n]
            .iter()
            .map(|node| {
                if aut.accepts(node) {
                    BigUint::one()
                } else {
                    BigUint::zero()
                }
            })
            .collect();
        for p in (0..n).rev() {
            let mut col = vec![BigUint::zero(); layers[p].len()];
            for (i, row) in trans[p].iter().enumerate() {
                for x in 0..2 {
                    let tgt = row[x];
                    if tgt >= 0 {
                        col[i] += &comp[p + 1][tgt as usize];
                    }
                }
            }
            comp[p] = col;
        }

        Ok(CodebookIndex {
            spec: spec.clone(),
            trans,
            comp,
        })
    }

    pub fn spec(&self) -> &CodeSpec {
        &self.spec
    }

    /// Codebook size; agrees with [`CodeSpec::count`].
    pub fn count(&self) -> &BigUint {
        &self.comp[0][0]
    }

    /// The `index`-th codeword in lexicographic order.
    pub fn unrank(&self, index: &BigUint) -> Result<Word> {
        if index >= self.count() {
            return Err(Error::IndexRange(format!(
                "index {index} >= codebook size {}",
                self.count()
            )));
        }
        let n = self.spec.n;
        let mut rem = index.clone();
        let mut state = 0usize;
        let mut bits = Vec::with_capacity(n);
        for p in 0..n {
            let row = &self.trans[p][state];
            let zero_count = if row[0] >= 0 {
                self.comp[p + 1][row[0] as usize].clone()
            } else {
                BigUint::zero()
            };
            if rem < zero_count {
                bits.push(0);
                state = row[0] as usize;
            } else {
                rem -= zero_count;
                bits.push(1);
                debug_assert!(row[1] >= 0);
                state = row[1] as usize;
            }
        }
        Word::from_bits(&bits)
    }

    /// Lexicographic rank of a codeword; inverse of [`Self::unrank`].
    pub fn rank(&self, u: &Word) -> Result<BigUint> {
        let n = self.spec.n;
        if u.len() != n {
            return Err(Error::Length {
                expected: n,
                actual: u.len(),
            });
        }
        let mut acc = BigUint::zero();
        let mut state = 0usize;
        for p in 0..n {
            let row = &self.trans[p][state];
            let x = u.as_bits()[p] as usize;
            if x == 1 && row[0] >= 0 {
                acc += &self.comp[p + 1][row[0] as usize];
            }
            if row[x] < 0 {
                return Err(Error::Membership(format!("{u} is not in {}", self.spec)));
            }
            state = row[x] as usize;
        }
        // The walk can end in a state that fails the acceptance condition
        // (VT residue); such words are not codewords either.
        if self.comp[n][state].is_zero() {
            return Err(Error::Membership(format!("{u} is not in {}", self.spec)));
        }
        Ok(acc)
    }
}

/// One-shot unrank; builds a fresh index, so prefer [`CodebookIndex`] when
/// encoding repeatedly.
pub fn unrank(spec: &CodeSpec, index: &BigUint) -> Result<Word> {
    CodebookIndex::new(spec)?.unrank(index)
}

/// One-shot rank; see [`unrank`].
pub fn rank(spec: &CodeSpec, u: &Word) -> Result<BigUint> {
    CodebookIndex::new(spec)?.rank(u)
}
