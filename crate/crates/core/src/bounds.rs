//! Closed-form extremal quantities: the Moore bound, Turán-type expansion
//! sizes and exponents for H-free graphs, and the degree bounds for graphs
//! avoiding every cycle length of a prescribed even sequence.
//!
//! All degree bounds are returned in natural-log space (the values
//! themselves overflow instantly); binary logarithms appear only inside
//! the tower sequence used by the iterated-logarithm bounds.

use num_bigint::BigUint;
use num_rational::Ratio;
use num_traits::{One, ToPrimitive, Zero};
use thiserror::Error;

use crate::graph::{CycleWitness, Graph};
use crate::spectrum::{cycle_spectrum, SpectrumOptions};

/// Member budget when a gap query has to scan a sequence with no closed
/// form.
pub const SEQUENCE_SCAN_BUDGET: u64 = 10_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BoundsError {
    #[error("value overflows the representable range: {0}")]
    Overflow(String),
    #[error("sequence scan exceeded its budget after {scanned} members")]
    ScanBudgetExceeded { scanned: u64 },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("sequence has no exponential-boundedness constant")]
    MissingConstant,
    #[error("{0} is not a member of the sequence")]
    NotAMember(BigUint),
    #[error("tower choice too shallow for this argument")]
    TooShallow,
}

/// Minimum possible order of a graph with minimum degree d and girth g.
pub fn moore_bound(d: u64, g: u64) -> Result<u128, BoundsError> {
    if d < 2 || g < 3 {
        return Err(BoundsError::Precondition(
            "moore bound needs d >= 2 and g >= 3".into(),
        ));
    }
    let k = (g - 1) / 2;
    let dd = d as u128;
    let mut acc: u128;
    if g % 2 == 1 {
        // 1 + d (1 + (d-1) + ... + (d-1)^{k-1})
        let mut geom: u128 = 0;
        let mut pow: u128 = 1;
        for _ in 0..k {
            geom = geom.saturating_add(pow);
            pow = pow.saturating_mul(dd - 1);
        }
        acc = 1u128.saturating_add(dd.saturating_mul(geom));
    } else {
        // 2 (1 + (d-1) + ... + (d-1)^k)
        let mut geom: u128 = 0;
        let mut pow: u128 = 1;
        for _ in 0..=k {
            geom = geom.saturating_add(pow);
            pow = pow.saturating_mul(dd - 1);
        }
        acc = geom.saturating_mul(2);
    }
    if acc == u128::MAX {
        acc = u128::MAX; // saturated; callers treat MAX as overflow
    }
    Ok(acc)
}

/// Degree threshold and guaranteed expansion size for graphs whose Turán
/// density obeys ex(n, H) <= a n^{2b}: minimum degree ceil(18 a d) forces
/// expansion on all sets of at most floor(d^{1/(2b-1)}) vertices.
pub fn turan_expansion_size(a: f64, b: f64, d: u64) -> Result<(u64, u64), BoundsError> {
    if !(a > 0.0) || !(b > 0.5 && b < 1.0) || d < 1 {
        return Err(BoundsError::Precondition(
            "need a > 0, 1/2 < b < 1, d >= 1".into(),
        ));
    }
    let min_degree = (18.0 * a * d as f64).ceil() as u64;
    let exponent = 1.0 / (2.0 * b - 1.0);
    let size = floor_pow(d as f64, exponent);
    Ok((min_degree, size))
}

/// d^e rounded down, snapping to the nearest integer when floating-point
/// error leaves the power within 1e-9 of one.
fn floor_pow(d: f64, e: f64) -> u64 {
    let p = d.powf(e);
    let r = p.round();
    if (p - r).abs() < 1e-9 * r.max(1.0) {
        r as u64
    } else {
        p.floor() as u64
    }
}

/// Forbidden-subgraph families with known Turán-type exponents.
#[derive(Debug, Clone, PartialEq)]
pub enum HFreeSpec {
    /// Bipartite H whose one color class has all degrees at most r;
    /// ex(n, H) = O(n^{2 - 1/r}), with the constant supplied by the caller.
    RHalfBounded { r: u64, coefficient: f64 },
    /// H = C_{2k}; ex(n, H) <= 8k n^{1 + 1/k}.
    EvenCycle { k: u64 },
    /// Any bipartite H with ex(n, H) <= c n^{2 - 1/t}.
    Generic { t: Ratio<u64>, coefficient: f64 },
}

impl HFreeSpec {
    pub fn r_half_bounded(r: u64, coefficient: f64) -> Result<Self, BoundsError> {
        if r < 2 || !(coefficient > 0.0) {
            return Err(BoundsError::Precondition(
                "r-half-bounded needs r >= 2 and a positive coefficient".into(),
            ));
        }
        Ok(HFreeSpec::RHalfBounded { r, coefficient })
    }

    pub fn even_cycle(k: u64) -> Result<Self, BoundsError> {
        if k < 2 {
            return Err(BoundsError::Precondition("even cycle needs k >= 2".into()));
        }
        Ok(HFreeSpec::EvenCycle { k })
    }

    pub fn generic(t: Ratio<u64>, coefficient: f64) -> Result<Self, BoundsError> {
        if t <= Ratio::one() || !(coefficient > 0.0) {
            return Err(BoundsError::Precondition(
                "generic spec needs t > 1 and a positive coefficient".into(),
            ));
        }
        Ok(HFreeSpec::Generic { t, coefficient })
    }
}

/// The exponent pair (t, t/(t-1)): an H-free graph of average degree d
/// carries on the order of d^{t/(t-1)} consecutive even cycle lengths.
pub fn hfree_exponents(h: &HFreeSpec) -> (Ratio<u64>, Ratio<u64>) {
    let t = match h {
        HFreeSpec::RHalfBounded { r, .. } => Ratio::from_integer(*r),
        HFreeSpec::EvenCycle { k } => Ratio::new(*k, *k - 1),
        HFreeSpec::Generic { t, .. } => *t,
    };
    let run = Ratio::new(*t.numer(), t.numer() - t.denom());
    (t, run)
}

/// The cited Turán-number upper bound at order n.
pub fn ex_bound(n: u64, h: &HFreeSpec) -> f64 {
    let nf = n as f64;
    match h {
        HFreeSpec::RHalfBounded { r, coefficient } => {
            coefficient * nf.powf(2.0 - 1.0 / *r as f64)
        }
        HFreeSpec::EvenCycle { k } => 8.0 * *k as f64 * nf.powf(1.0 + 1.0 / *k as f64),
        HFreeSpec::Generic { t, coefficient } => {
            let tf = *t.numer() as f64 / *t.denom() as f64;
            coefficient * nf.powf(2.0 - 1.0 / tf)
        }
    }
}

/// An infinite increasing sequence of positive even integers, given by an
/// enumerator and membership predicate; closed-form gap formulas are wired
/// in where the sequence admits one.
#[derive(Debug, Clone, PartialEq)]
pub struct SequenceSpec {
    name: String,
    kind: SequenceKind,
    /// A constant C > 1 with sigma(i) <= C sigma(i-1), when the sequence is
    /// exponentially bounded.
    pub exponential_constant: Option<f64>,
}

#[derive(Debug, Clone, PartialEq)]
enum SequenceKind {
    PowersOfTwo,
    Towers,
    TwicePrimes,
    EvenSquares,
    Custom(Vec<BigUint>),
}

impl SequenceSpec {
    /// 2, 4, 8, 16, ...
    pub fn powers_of_two() -> Self {
        SequenceSpec {
            name: "powers_of_two".into(),
            kind: SequenceKind::PowersOfTwo,
            exponential_constant: Some(2.0),
        }
    }

    /// 2, 4, 16, 65536, 2^65536: each member is 2 raised to the previous.
    /// Not exponentially bounded; members beyond the fifth are not
    /// representable and enumerate as an overflow error.
    pub fn towers() -> Self {
        SequenceSpec {
            name: "towers".into(),
            kind: SequenceKind::Towers,
            exponential_constant: None,
        }
    }

    /// 4, 6, 10, 14, 22, ...: twice the primes. Exponentially bounded with
    /// C = 2 (there is a prime between p and 2p).
    pub fn twice_primes() -> Self {
        SequenceSpec {
            name: "twice_primes".into(),
            kind: SequenceKind::TwicePrimes,
            exponential_constant: Some(2.0),
        }
    }

    /// 4, 16, 36, 64, ...: squares of the even integers, so every member
    /// is even. Ratios (j+1)^2/j^2 stay below 4.
    pub fn even_squares() -> Self {
        SequenceSpec {
            name: "even_squares".into(),
            kind: SequenceKind::EvenSquares,
            exponential_constant: Some(4.0),
        }
    }

    /// Explicit finite prefix of a sequence; queries beyond it error out.
    pub fn custom(
        name: &str,
        values: Vec<u64>,
        exponential_constant: Option<f64>,
    ) -> Result<Self, BoundsError> {
        if values.is_empty() {
            return Err(BoundsError::Precondition("empty custom sequence".into()));
        }
        for w in values.windows(2) {
            if w[1] <= w[0] {
                return Err(BoundsError::Precondition(
                    "custom sequence must be strictly increasing".into(),
                ));
            }
        }
        if values.iter().any(|&v| v == 0 || v % 2 != 0) {
            return Err(BoundsError::Precondition(
                "custom sequence members must be positive and even".into(),
            ));
        }
        Ok(SequenceSpec {
            name: name.into(),
            kind: SequenceKind::Custom(values.into_iter().map(BigUint::from).collect()),
            exponential_constant,
        })
    }

    pub fn by_name(name: &str) -> Option<Self> {
        match name {
            "powers_of_two" | "pow2" => Some(Self::powers_of_two()),
            "towers" | "tower" => Some(Self::towers()),
            "twice_primes" => Some(Self::twice_primes()),
            "even_squares" => Some(Self::even_squares()),
            _ => None,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// The i-th member, 1-based.
    pub fn enumerate(&self, i: usize) -> Result<BigUint, BoundsError> {
        if i == 0 {
            return Err(BoundsError::Precondition("enumeration is 1-based".into()));
        }
        match &self.kind {
            SequenceKind::PowersOfTwo => {
                if i > 1_000_000 {
                    return Err(BoundsError::Overflow(format!("2^{i}")));
                }
                Ok(BigUint::one() << i)
            }
            SequenceKind::Towers => {
                let mut v = BigUint::from(2u32);
                for _ in 1..i {
                    let bits = v
                        .to_u64()
                        .ok_or_else(|| BoundsError::Overflow("tower member".into()))?;
                    if bits > 1 << 20 {
                        return Err(BoundsError::Overflow(format!("2^{bits}")));
                    }
                    v = BigUint::one() << bits as usize;
                }
                Ok(v)
            }
            SequenceKind::TwicePrimes => {
                let p = nth_prime(i as u64)?;
                Ok(BigUint::from(2 * p))
            }
            SequenceKind::EvenSquares => {
                let j = BigUint::from(2u64 * i as u64);
                Ok(&j * &j)
            }
            SequenceKind::Custom(values) => values
                .get(i - 1)
                .cloned()
                .ok_or_else(|| BoundsError::Overflow("past the custom prefix".into())),
        }
    }

    pub fn is_member(&self, x: &BigUint) -> bool {
        if x.is_zero() || (x % 2u32) != BigUint::zero() {
            return false;
        }
        match &self.kind {
            SequenceKind::PowersOfTwo => (x & (x - 1u32)) == BigUint::zero(),
            SequenceKind::Towers => {
                let mut v = BigUint::from(2u32);
                loop {
                    if &v == x {
                        return true;
                    }
                    if &v > x {
                        return false;
                    }
                    match v.to_u64() {
                        Some(bits) if bits <= 1 << 20 => v = BigUint::one() << bits as usize,
                        _ => return false,
                    }
                }
            }
            SequenceKind::TwicePrimes => match (x / 2u32).to_u64() {
                Some(half) => is_prime_u64(half),
                None => false,
            },
            SequenceKind::EvenSquares => {
                let q = x / 4u32;
                if &(&q * 4u32) != x {
                    return false;
                }
                let r = q.sqrt();
                &r * &r == q
            }
            SequenceKind::Custom(values) => values.binary_search(x).is_ok(),
        }
    }

    /// Smallest member strictly greater than x, when representable.
    pub fn next_member_above(&self, x: &BigUint) -> Result<BigUint, BoundsError> {
        match &self.kind {
            SequenceKind::PowersOfTwo => {
                let bits = x.bits();
                if bits > 1 << 20 {
                    return Err(BoundsError::Overflow("next power of two".into()));
                }
                let mut v = BigUint::one() << bits.max(1) as usize;
                if &v <= x {
                    v <<= 1;
                }
                Ok(v)
            }
            SequenceKind::Towers => {
                let mut v = BigUint::from(2u32);
                loop {
                    if &v > x {
                        return Ok(v);
                    }
                    let bits = v
                        .to_u64()
                        .ok_or_else(|| BoundsError::Overflow("tower member".into()))?;
                    if bits > 1 << 20 {
                        return Err(BoundsError::Overflow(format!("2^{bits}")));
                    }
                    v = BigUint::one() << bits as usize;
                }
            }
            SequenceKind::TwicePrimes => {
                let half = (x / 2u32)
                    .to_u64()
                    .ok_or_else(|| BoundsError::Overflow("prime search range".into()))?;
                let p = next_prime_above(half)?;
                Ok(BigUint::from(2 * p))
            }
            SequenceKind::EvenSquares => {
                let q = x / 4u32;
                let j = q.sqrt() + 1u32;
                let even = 2u32 * &j;
                Ok(&even * &even / 4u32 * 4u32)
            }
            SequenceKind::Custom(values) => values
                .iter()
                .find(|v| *v > x)
                .cloned()
                .ok_or_else(|| BoundsError::Overflow("past the custom prefix".into())),
        }
    }

    /// Maximum gap between consecutive members among those at most `bound`
    /// (the gap at the second member onward). Uses a closed form when one
    /// exists, otherwise scans within the member budget.
    pub fn max_gap_below(&self, bound: &BigUint, budget: u64) -> Result<BigUint, BoundsError> {
        match &self.kind {
            SequenceKind::PowersOfTwo => {
                // Largest power of two <= bound; the gap ending there is
                // half of it.
                if bound < &BigUint::from(4u32) {
                    return Err(BoundsError::Precondition(
                        "no gap below the second member".into(),
                    ));
                }
                let bits = bound.bits();
                let mut top = BigUint::one() << (bits - 1) as usize;
                if &top > bound {
                    top >>= 1;
                }
                Ok(&top >> 1)
            }
            SequenceKind::EvenSquares => {
                // Member 4j^2 <= bound with the largest j; the gap ending
                // there is 4(2j - 1).
                let j = (bound / 4u32).sqrt();
                if j < BigUint::from(2u32) {
                    return Err(BoundsError::Precondition(
                        "no gap below the second member".into(),
                    ));
                }
                Ok(4u32 * (2u32 * &j - 1u32))
            }
            _ => {
                // Generic scan of members up to the bound.
                let mut prev = self.enumerate(1)?;
                if &prev > bound {
                    return Err(BoundsError::Precondition(
                        "no member at or below the bound".into(),
                    ));
                }
                let mut best = BigUint::zero();
                let mut scanned: u64 = 1;
                loop {
                    if scanned >= budget {
                        return Err(BoundsError::ScanBudgetExceeded { scanned });
                    }
                    let next = match self.next_member_above(&prev) {
                        Ok(v) => v,
                        Err(BoundsError::Overflow(_)) => break,
                        Err(e) => return Err(e),
                    };
                    if &next > bound {
                        break;
                    }
                    let gap = &next - &prev;
                    if gap > best {
                        best = gap;
                    }
                    prev = next;
                    scanned += 1;
                }
                if best.is_zero() {
                    return Err(BoundsError::Precondition(
                        "no gap below the second member".into(),
                    ));
                }
                Ok(best)
            }
        }
    }
}

/// A finite increasing choice of members of a sequence, with the implicit
/// value 1 at index 0.
#[derive(Debug, Clone, PartialEq)]
pub struct SubsequenceChoice {
    pub values: Vec<BigUint>,
}

impl SubsequenceChoice {
    pub fn new(values: Vec<BigUint>, sigma: &SequenceSpec) -> Result<Self, BoundsError> {
        if values.is_empty() {
            return Err(BoundsError::Precondition("empty subsequence".into()));
        }
        for w in values.windows(2) {
            if w[1] <= w[0] {
                return Err(BoundsError::Precondition(
                    "subsequence must be strictly increasing".into(),
                ));
            }
        }
        for v in &values {
            if !sigma.is_member(v) {
                return Err(BoundsError::NotAMember(v.clone()));
            }
        }
        Ok(SubsequenceChoice { values })
    }

    /// The standard tower choice 2, 4, 16, 65536, 2^65536 cut to `depth`.
    pub fn towers(depth: usize) -> Result<Self, BoundsError> {
        let spec = SequenceSpec::towers();
        let values: Result<Vec<BigUint>, BoundsError> =
            (1..=depth).map(|i| spec.enumerate(i)).collect();
        Ok(SubsequenceChoice { values: values? })
    }

    pub fn depth(&self) -> usize {
        self.values.len()
    }

    /// pi(i) with pi(0) = 1.
    pub fn value(&self, i: usize) -> BigUint {
        if i == 0 {
            BigUint::one()
        } else {
            self.values[i - 1].clone()
        }
    }
}

/// Natural log of a big integer, split as mantissa bits plus exponent.
pub fn ln_big(x: &BigUint) -> f64 {
    if let Some(v) = x.to_u64() {
        return (v as f64).ln();
    }
    let bits = x.bits();
    let shift = bits - 53;
    let top = (x >> shift as usize).to_u64().unwrap();
    (top as f64).ln() + shift as f64 * std::f64::consts::LN_2
}

fn big_to_f64(x: &BigUint) -> f64 {
    if x.bits() > 1024 {
        f64::INFINITY
    } else {
        x.to_f64().unwrap_or(f64::INFINITY)
    }
}

/// Maximum gap of `sigma` among members at most pi(i); the first index is
/// defined as pi(1) itself.
pub fn delta(
    sigma: &SequenceSpec,
    pi: &SubsequenceChoice,
    i: usize,
    budget: u64,
) -> Result<BigUint, BoundsError> {
    if i == 0 || i > pi.depth() {
        return Err(BoundsError::Precondition(
            "gap index out of the subsequence depth".into(),
        ));
    }
    if i == 1 {
        return Ok(pi.value(1));
    }
    sigma.max_gap_below(&pi.value(i), budget)
}

/// Term-by-term evaluation of the sigma-cycle-free degree bound.
#[derive(Debug, Clone)]
pub struct SigmaFreeBound {
    /// Natural log of the average-degree bound.
    pub exponent: f64,
    /// The constant term 6r followed by one gap term per index and the
    /// final 2 ln n / pi(r) term.
    pub terms: Vec<f64>,
    pub deltas: Vec<BigUint>,
}

/// Natural-log bound on the average degree of an n-vertex graph with no
/// cycle length in `sigma`: 6r plus the per-index gap terms
/// 2 ln delta(i) / pi(i-1) plus 2 ln n / pi(r).
pub fn sigma_free_exponent(
    sigma: &SequenceSpec,
    pi: &SubsequenceChoice,
    r: usize,
    n: &BigUint,
) -> Result<SigmaFreeBound, BoundsError> {
    if r == 0 || r > pi.depth() {
        return Err(BoundsError::Precondition(
            "depth r must lie within the subsequence".into(),
        ));
    }
    if n < &BigUint::from(2u32) {
        return Err(BoundsError::Precondition("need n >= 2".into()));
    }
    let mut terms = vec![6.0 * r as f64];
    let mut deltas = Vec::with_capacity(r);
    for i in 1..=r {
        let d = delta(sigma, pi, i, SEQUENCE_SCAN_BUDGET)?;
        let term = 2.0 * ln_big(&d) / big_to_f64(&pi.value(i - 1));
        terms.push(term);
        deltas.push(d);
    }
    terms.push(2.0 * ln_big(n) / big_to_f64(&pi.value(r)));
    Ok(SigmaFreeBound {
        exponent: terms.iter().sum(),
        terms,
        deltas,
    })
}

/// Heuristic minimization of the sigma-free exponent over subsequence
/// choices: the tower-style greedy choice (next member at least 2 to the
/// previous value) plus single-member perturbations, every prefix depth
/// considered. The result is an upper bound on the true infimum.
pub fn optimize_sigma_free_exponent(
    sigma: &SequenceSpec,
    n: &BigUint,
    perturbation_budget: u64,
) -> Result<(SubsequenceChoice, usize, f64), BoundsError> {
    let greedy = greedy_tower_choice(sigma, n, 64)?;
    let mut best: Option<(SubsequenceChoice, usize, f64)> = None;
    let consider = |choice: &SubsequenceChoice,
                        best: &mut Option<(SubsequenceChoice, usize, f64)>|
     -> Result<(), BoundsError> {
        for r in 1..=choice.depth() {
            match sigma_free_exponent(sigma, choice, r, n) {
                Ok(bound) => {
                    if best.as_ref().is_none_or(|(_, _, e)| bound.exponent < *e) {
                        *best = Some((choice.clone(), r, bound.exponent));
                    }
                }
                Err(BoundsError::ScanBudgetExceeded { .. }) | Err(BoundsError::Overflow(_)) => {}
                Err(e) => return Err(e),
            }
        }
        Ok(())
    };
    consider(&greedy, &mut best)?;

    let mut tried: u64 = 0;
    for idx in 0..greedy.depth() {
        if tried >= perturbation_budget {
            break;
        }
        // Nudge one member up to the next sequence member.
        if let Ok(up) = sigma.next_member_above(&greedy.values[idx]) {
            let mut vals = greedy.values.clone();
            vals[idx] = up;
            if vals.windows(2).all(|w| w[0] < w[1]) {
                if let Ok(choice) = SubsequenceChoice::new(vals, sigma) {
                    consider(&choice, &mut best)?;
                    tried += 1;
                }
            }
        }
        // And drop one member entirely.
        if greedy.depth() > 1 {
            let mut vals = greedy.values.clone();
            vals.remove(idx);
            if let Ok(choice) = SubsequenceChoice::new(vals, sigma) {
                consider(&choice, &mut best)?;
                tried += 1;
            }
        }
    }
    best.ok_or_else(|| BoundsError::Precondition("no evaluable subsequence choice".into()))
}

/// Greedy tower-style subsequence: the first member, then repeatedly the
/// smallest member at least 2^(previous), until the choice covers n or the
/// members stop being representable.
fn greedy_tower_choice(
    sigma: &SequenceSpec,
    n: &BigUint,
    max_depth: usize,
) -> Result<SubsequenceChoice, BoundsError> {
    let mut values = vec![sigma.enumerate(1)?];
    while values.last().unwrap() < n && values.len() < max_depth {
        let prev = values.last().unwrap();
        let Some(prev_u) = prev.to_u64() else { break };
        if prev_u > 1 << 20 {
            break;
        }
        let threshold = BigUint::one() << prev_u as usize;
        let next = match sigma.next_member_above(&(threshold - 1u32)) {
            Ok(v) => v,
            Err(BoundsError::Overflow(_)) => break,
            Err(e) => return Err(e),
        };
        if &next <= values.last().unwrap() {
            break;
        }
        values.push(next);
    }
    SubsequenceChoice::new(values, sigma)
}

/// Iterated-logarithm depth: the index i with pi(i-1) < n <= pi(i).
pub fn log_star(n: &BigUint, pi: &SubsequenceChoice) -> Result<usize, BoundsError> {
    if n < &BigUint::from(2u32) {
        return Err(BoundsError::Precondition("need n >= 2".into()));
    }
    for i in 1..=pi.depth() {
        if &pi.value(i - 1) < n && n <= &pi.value(i) {
            return Ok(i);
        }
    }
    Err(BoundsError::TooShallow)
}

/// The minimal coefficients a_i (in log space) satisfying the edge-bound
/// recurrence with equality: a_1 = 4 pi(1) and
/// a_i = 288 a_{i-1} delta(i)^{2/pi(i-1)}.
pub fn edge_bound_coefficients(
    pi: &SubsequenceChoice,
    deltas: &[BigUint],
    r: usize,
) -> Result<Vec<f64>, BoundsError> {
    if r == 0 || r > pi.depth() || deltas.len() < r {
        return Err(BoundsError::Precondition(
            "need one gap value per index up to r".into(),
        ));
    }
    let mut out = Vec::with_capacity(r);
    let mut ln_a = (4.0 * big_to_f64(&pi.value(1))).ln();
    out.push(ln_a);
    for i in 2..=r {
        ln_a += 288f64.ln() + 2.0 * ln_big(&deltas[i - 1]) / big_to_f64(&pi.value(i - 1));
        out.push(ln_a);
    }
    Ok(out)
}

#[derive(Debug, Clone)]
pub struct LogStarBound {
    /// Natural-log bound on the average degree: (6 + 2 ln 2C) log* n + 2.
    pub exponent: f64,
    pub log_star: usize,
    /// Greedy subsequence witnessing the tower growth condition
    /// 2^pi(i-1) <= pi(i) <= (2C)^pi(i-1), as far as it stays representable.
    pub greedy_pi: Vec<BigUint>,
    pub greedy_satisfies_growth: bool,
}

/// Degree bound for exponentially bounded sequences, linear in the
/// iterated logarithm of the order.
pub fn log_star_degree_exponent(
    sigma: &SequenceSpec,
    n: &BigUint,
) -> Result<LogStarBound, BoundsError> {
    let c = sigma.exponential_constant.ok_or(BoundsError::MissingConstant)?;
    if c <= 1.0 {
        return Err(BoundsError::Precondition(
            "exponential-boundedness constant must exceed 1".into(),
        ));
    }
    let towers = SubsequenceChoice::towers(5)?;
    let r = log_star(n, &towers)?;
    let exponent = (6.0 + 2.0 * (2.0 * c).ln()) * r as f64 + 2.0;

    let greedy = greedy_tower_choice(sigma, n, 40)?;
    let mut ok = true;
    for i in 1..greedy.values.len() {
        let prev = &greedy.values[i - 1];
        let cur = &greedy.values[i];
        let Some(prev_u) = prev.to_u64() else {
            break;
        };
        if prev_u > 1 << 20 {
            break;
        }
        let lower = BigUint::one() << prev_u as usize;
        // Upper growth bound in log space: ln pi(i) <= pi(i-1) ln(2C).
        let upper_ok = ln_big(cur) <= prev_u as f64 * (2.0 * c).ln() + 1e-9;
        if cur < &lower || !upper_ok {
            ok = false;
            break;
        }
    }
    Ok(LogStarBound {
        exponent,
        log_star: r,
        greedy_pi: greedy.values,
        greedy_satisfies_growth: ok,
    })
}

/// Natural log of the i-th member of the fast-growing avoider sequence
/// defined by ln sigma(i) = sigma(i-1) ln alpha(i) with sigma(0) = 2.
/// Representable only for tiny i; overflow is an error, never a silent
/// saturation.
pub fn fast_sigma_log(i: u32, ln_alpha: &dyn Fn(u32) -> f64) -> Result<f64, BoundsError> {
    if i == 0 {
        return Err(BoundsError::Precondition("index starts at 1".into()));
    }
    let mut sigma_prev = 2.0f64;
    let mut ln_sigma = 0.0;
    for k in 1..=i {
        let la = ln_alpha(k);
        let required = match 2f64.powf(2f64.powi(k as i32)) {
            x if x.is_finite() => x * std::f64::consts::LN_2,
            _ => return Err(BoundsError::Overflow("growth precondition check".into())),
        };
        if la + 1e-9 < required {
            return Err(BoundsError::Precondition(format!(
                "ln alpha({k}) = {la} is below the growth requirement {required}"
            )));
        }
        ln_sigma = sigma_prev * la;
        if !ln_sigma.is_finite() {
            return Err(BoundsError::Overflow(format!("ln sigma({k})")));
        }
        if k < i {
            if ln_sigma > 700.0 {
                return Err(BoundsError::Overflow(format!(
                    "sigma({k}) needed in the clear exceeds the float range"
                )));
            }
            sigma_prev = ln_sigma.exp();
        }
    }
    Ok(ln_sigma)
}

/// The standard doubly-exponential growth rate ln alpha(k) = 2^(2^k).
pub fn tower_alpha_log(k: u32) -> f64 {
    2f64.powf(2f64.powi(k as i32))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SigmaCycleCheck {
    /// No cycle length of the graph belongs to the sequence.
    Free,
    /// A cycle whose length is a sequence member.
    SigmaCycle(CycleWitness),
    /// The spectrum could not be computed exhaustively within budget.
    Unknown,
}

/// Does the graph avoid every cycle length in the sequence? Exhaustive by
/// construction; a budget overrun reports `Unknown`, never a silent answer.
pub fn sigma_cycle_free_check(
    g: &Graph,
    sigma: &SequenceSpec,
    opts: &SpectrumOptions,
) -> SigmaCycleCheck {
    let opts = SpectrumOptions {
        store_witnesses: true,
        ..opts.clone()
    };
    let spec = cycle_spectrum(g, &opts);
    if !spec.is_exhaustive() {
        return SigmaCycleCheck::Unknown;
    }
    for &len in spec.lengths() {
        if sigma.is_member(&BigUint::from(len)) {
            return SigmaCycleCheck::SigmaCycle(spec.witness(len).unwrap().clone());
        }
    }
    SigmaCycleCheck::Free
}

// Deterministic Miller-Rabin for u64 (the standard 12-witness set).
fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = mod_pow(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mod_mul(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn mod_mul(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn mod_pow(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mod_mul(acc, base, m);
        }
        base = mod_mul(base, base, m);
        exp >>= 1;
    }
    acc
}

fn nth_prime(i: u64) -> Result<u64, BoundsError> {
    let mut count = 0u64;
    let mut candidate = 1u64;
    while count < i {
        candidate = candidate
            .checked_add(1)
            .ok_or_else(|| BoundsError::Overflow("prime enumeration".into()))?;
        if is_prime_u64(candidate) {
            count += 1;
        }
        if candidate > 1 << 40 {
            return Err(BoundsError::Overflow("prime enumeration range".into()));
        }
    }
    Ok(candidate)
}

fn next_prime_above(x: u64) -> Result<u64, BoundsError> {
    let mut candidate = x
        .checked_add(1)
        .ok_or_else(|| BoundsError::Overflow("prime search".into()))?;
    loop {
        if is_prime_u64(candidate) {
            return Ok(candidate);
        }
        candidate = candidate
            .checked_add(1)
            .ok_or_else(|| BoundsError::Overflow("prime search".into()))?;
    }
}
