//! The partition move system and the accessibility order it generates.
//!
//! For gl/sl, one class can degenerate to another under one-parameter
//! conjugation limits exactly when the dominance order says so. For sp/o the
//! realizable degenerations are generated by a short list of local rewrites
//! of the partition ("moves"); the accessibility order is the reachability
//! closure of those moves, and it is strictly finer than dominance. This
//! module enumerates move successors, runs the closure, classifies blocked
//! pairs by an explicit obstruction, and emits Hasse diagrams of either
//! order.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use crate::algebra::{AlgebraKind, GroupTag};
use crate::error::{Error, Result};
use crate::partition::Partition;

/// One applied move, remembered by the part values it touched (0 stands for
/// a phantom part absent from the partition).
///
/// * `M1 { p, q }` merges parts p > q of equal parity into two halves
///   (p+q)/2, (p+q)/2.
/// * `M2 { a, m }` trades the big part a for a-2 while growing a pair of
///   m's into (m+1)'s.
/// * `M3 { n, c }` shrinks a pair of n's into (n-1)'s while growing the
///   part c to c+2.
/// * `M4 { n, m }` shrinks a pair of n's and grows a pair of m's.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum MoveKind {
    M1 { p: u32, q: u32 },
    M2 { a: u32, m: u32 },
    M3 { n: u32, c: u32 },
    M4 { n: u32, m: u32 },
}

impl fmt::Display for MoveKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MoveKind::M1 { p, q } => write!(f, "M1({p},{q})"),
            MoveKind::M2 { a, m } => write!(f, "M2({a},{m})"),
            MoveKind::M3 { n, c } => write!(f, "M3({n},{c})"),
            MoveKind::M4 { n, m } => write!(f, "M4({n},{m})"),
        }
    }
}

/// Three-valued answer for single-step reachability.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum TriState {
    Yes,
    No,
    Unknown,
}

impl fmt::Display for TriState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TriState::Yes => "Yes",
            TriState::No => "No",
            TriState::Unknown => "Unknown",
        })
    }
}

/// Why an ordered pair is not accessible.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Obstruction {
    NotDominated,
    DistinguishedTarget,
    DirectType5,
    NoMovePath,
}

impl fmt::Display for Obstruction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Obstruction::NotDominated => "NotDominated",
            Obstruction::DistinguishedTarget => "DistinguishedTarget",
            Obstruction::DirectType5 => "DirectType5",
            Obstruction::NoMovePath => "NoMovePath",
        })
    }
}

/// Single-step verdict together with a human-readable reason.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OneAccessVerdict {
    pub status: TriState,
    pub reason: String,
}

/// Everything the comparison front end reports about an ordered pair.
#[derive(Clone, Debug)]
pub struct AccessReport {
    pub kind: AlgebraKind,
    pub source: Partition,
    pub target: Partition,
    pub dominated: bool,
    pub accessible: bool,
    pub one_accessible: TriState,
    pub one_access_reason: String,
    pub obstruction: Option<Obstruction>,
    pub witness_chain: Option<Vec<(Partition, MoveKind)>>,
}

/// Which partial order a diagram describes.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum OrderChoice {
    Dominance,
    Accessibility,
}

impl OrderChoice {
    pub fn name(self) -> &'static str {
        match self {
            OrderChoice::Dominance => "dominance",
            OrderChoice::Accessibility => "accessibility",
        }
    }
}

impl FromStr for OrderChoice {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "dominance" => Ok(OrderChoice::Dominance),
            "accessibility" => Ok(OrderChoice::Accessibility),
            other => Err(Error::Parse(format!("unknown order {other:?}"))),
        }
    }
}

/// Hasse diagram of one of the two orders on all valid partitions of N.
#[derive(Clone, Debug)]
pub struct Diagram {
    pub kind: AlgebraKind,
    pub order: OrderChoice,
    /// All valid partitions, in enumeration (descending lexicographic) order.
    pub nodes: Vec<Partition>,
    /// Covering relations as (upper, lower) indices into `nodes`.
    pub edges: Vec<(usize, usize)>,
}

/// Pairs proven not to be reachable in a single step even though they are
/// reachable through a chain, keyed by (family, N, source, target).
const REGISTERED_NOT_ONE_ACCESSIBLE: &[(GroupTag, usize, &str, &str)] =
    &[(GroupTag::Sp, 8, "[6,1,1]", "[4,2,1,1]")];

/// All distinct valid partitions obtainable from `pi` by one move, each
/// strictly below `pi` in dominance, deduplicated (first generating move
/// wins) and sorted in descending lexicographic order.
pub fn move_successors(kind: AlgebraKind, pi: &Partition) -> Result<Vec<(Partition, MoveKind)>> {
    let tag = kind.tag();
    if tag != GroupTag::Sp && tag != GroupTag::O {
        return Err(Error::UnsupportedKind(format!(
            "{kind} has no move system; its accessibility order is dominance"
        )));
    }
    check_valid(kind, pi)?;

    let mut values: Vec<u32> = Vec::new();
    for &p in pi.parts() {
        if values.last() != Some(&p) {
            values.push(p);
        }
    }
    // A move may treat one missing part (or pair of parts) as zeros.
    let with_phantom: Vec<u32> = values.iter().copied().chain([0]).collect();

    let mut candidates: Vec<(Partition, MoveKind)> = Vec::new();
    let push = |parts: Option<Vec<u32>>, mv: MoveKind,
                candidates: &mut Vec<(Partition, MoveKind)>| {
        if let Some(parts) = parts {
            let cand = Partition::new(parts);
            if kind.is_valid_partition(&cand) && cand.dominance_lt(pi).unwrap_or(false) {
                candidates.push((cand, mv));
            }
        }
    };

    // M1: merge two parts of equal parity into equal halves.
    for &p in &values {
        if tag == GroupTag::Sp && p % 2 != 0 {
            continue;
        }
        if tag == GroupTag::O && p % 2 != 1 {
            continue;
        }
        let qs: Vec<u32> = match tag {
            GroupTag::Sp => with_phantom.iter().copied().filter(|&q| q < p && q % 2 == 0).collect(),
            _ => values.iter().copied().filter(|&q| q < p && q % 2 == 1).collect(),
        };
        for q in qs {
            let h = (p + q) / 2;
            push(
                replace(pi.parts(), &[p, q], &[h, h]),
                MoveKind::M1 { p, q },
                &mut candidates,
            );
        }
    }

    // M2: a big part loses 2, a (possibly phantom) pair of m's gains 1 each.
    for &a in &values {
        let parity_ok = match tag {
            GroupTag::Sp => a % 2 == 0,
            _ => a % 2 == 1 && a >= 3,
        };
        if !parity_ok {
            continue;
        }
        for &m in &with_phantom {
            push(
                replace(pi.parts(), &[a, m, m], &[a.saturating_sub(2), m + 1, m + 1]),
                MoveKind::M2 { a, m },
                &mut candidates,
            );
        }
    }

    // M3: a pair of n's loses 1 each, one part c of the right parity gains 2.
    for &n in &values {
        if pi.multiplicity(n) < 2 {
            continue;
        }
        let cs: Vec<u32> = match tag {
            GroupTag::Sp => with_phantom.iter().copied().filter(|&c| c % 2 == 0).collect(),
            _ => values.iter().copied().filter(|&c| c % 2 == 1).collect(),
        };
        for c in cs {
            push(
                replace(pi.parts(), &[n, n, c], &[n - 1, n - 1, c + 2]),
                MoveKind::M3 { n, c },
                &mut candidates,
            );
        }
    }

    // M4: a pair of n's loses 1 each, a (possibly phantom) pair of m's gains.
    for &n in &values {
        if pi.multiplicity(n) < 2 {
            continue;
        }
        for &m in &with_phantom {
            push(
                replace(pi.parts(), &[n, n, m, m], &[n - 1, n - 1, m + 1, m + 1]),
                MoveKind::M4 { n, m },
                &mut candidates,
            );
        }
    }

    let mut seen: HashSet<Partition> = HashSet::new();
    let mut out: Vec<(Partition, MoveKind)> = Vec::new();
    for (cand, mv) in candidates {
        if seen.insert(cand.clone()) {
            out.push((cand, mv));
        }
    }
    out.sort_by(|a, b| b.0.cmp(&a.0));
    Ok(out)
}

/// Remove the multiset `remove` from `parts` and append `add`; zeros in
/// either list are phantoms and are skipped. None if a removed part is not
/// available with sufficient multiplicity.
fn replace(parts: &[u32], remove: &[u32], add: &[u32]) -> Option<Vec<u32>> {
    let mut rest: Vec<u32> = parts.to_vec();
    for &r in remove {
        if r == 0 {
            continue;
        }
        let pos = rest.iter().position(|&p| p == r)?;
        rest.swap_remove(pos);
    }
    rest.extend(add.iter().copied().filter(|&a| a > 0));
    Some(rest)
}

/// Whether the class of `pi2` can be reached from the class of `pi1`:
/// by dominance for gl/sl, by move-closure reachability for sp/o.
/// Reflexive for all kinds.
pub fn accessible(kind: AlgebraKind, pi1: &Partition, pi2: &Partition) -> Result<bool> {
    check_pair(kind, pi1, pi2)?;
    match kind.tag() {
        GroupTag::Gl | GroupTag::Sl => pi2.dominance_le(pi1),
        GroupTag::Sp | GroupTag::O => Ok(accessible_with_chain(kind, pi1, pi2)?.is_some()),
    }
}

/// For sp/o: the move chain realizing accessibility, as a list of
/// (partition reached, move applied) steps from source to target; empty for
/// equal partitions, None when unreachable.
pub fn accessible_with_chain(
    kind: AlgebraKind,
    pi1: &Partition,
    pi2: &Partition,
) -> Result<Option<Vec<(Partition, MoveKind)>>> {
    check_pair(kind, pi1, pi2)?;
    if kind.tag() != GroupTag::Sp && kind.tag() != GroupTag::O {
        return Err(Error::UnsupportedKind(format!("{kind} has no move system")));
    }
    if pi1 == pi2 {
        return Ok(Some(Vec::new()));
    }
    // Breadth-first search gives a shortest chain; parents make it explicit.
    let mut parent: HashMap<Partition, (Partition, MoveKind)> = HashMap::new();
    let mut queue: VecDeque<Partition> = VecDeque::new();
    queue.push_back(pi1.clone());
    let mut seen: HashSet<Partition> = HashSet::new();
    seen.insert(pi1.clone());
    while let Some(current) = queue.pop_front() {
        for (next, mv) in move_successors(kind, &current)? {
            if !seen.insert(next.clone()) {
                continue;
            }
            parent.insert(next.clone(), (current.clone(), mv));
            if &next == pi2 {
                let mut chain = Vec::new();
                let mut at = next.clone();
                while &at != pi1 {
                    let (prev, mv) = parent[&at].clone();
                    chain.push((at, mv));
                    at = prev;
                }
                chain.reverse();
                return Ok(Some(chain));
            }
            queue.push_back(next);
        }
    }
    Ok(None)
}

/// Every partition reachable from `pi` (including itself), sorted in
/// descending lexicographic order.
pub fn accessible_set(kind: AlgebraKind, pi: &Partition) -> Result<Vec<Partition>> {
    check_valid(kind, pi)?;
    let mut seen: HashSet<Partition> = HashSet::new();
    let mut queue: VecDeque<Partition> = VecDeque::new();
    seen.insert(pi.clone());
    queue.push_back(pi.clone());
    while let Some(current) = queue.pop_front() {
        for (next, _) in move_successors(kind, &current)? {
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    let mut out: Vec<Partition> = seen.into_iter().collect();
    out.sort_by(|a, b| b.cmp(a));
    Ok(out)
}

/// A type-5 instance: the covering pair trades {a, d} for {a-2, d+2} with a
/// gap too wide for any realizable move. `d` may be 0 (phantom).
struct Type5Instance {
    phantom: bool,
}

fn direct_type5_instance(
    kind: AlgebraKind,
    pi1: &Partition,
    pi2: &Partition,
) -> Result<Option<Type5Instance>> {
    check_pair(kind, pi1, pi2)?;
    let tag = kind.tag();
    if tag != GroupTag::Sp && tag != GroupTag::O {
        return Ok(None);
    }
    if !is_covering_pair(kind, pi1, pi2) {
        return Ok(None);
    }
    let (removed, added) = multiset_diff(pi1.parts(), pi2.parts());
    let (a, d) = match (tag, removed.as_slice()) {
        (GroupTag::Sp, &[a]) => (a, 0),
        (GroupTag::Sp, &[a, d]) if a % 2 == 0 && d % 2 == 0 => (a, d),
        (GroupTag::O, &[a, d]) if a % 2 == 1 && d % 2 == 1 => (a, d),
        _ => return Ok(None),
    };
    if added != vec![a - 2, d + 2] && added != vec![d + 2, a - 2] {
        return Ok(None);
    }
    if a < d + 6 || a - 2 == d + 2 {
        return Ok(None);
    }
    Ok(Some(Type5Instance { phantom: d == 0 }))
}

/// Whether (pi1, pi2) is a dominance covering pair whose part exchange has
/// the blocked wide-gap shape {a, d} -> {a-2, d+2} with a >= d+6 (both parts
/// even for sp, both odd for o; d may be a phantom zero for sp).
pub fn is_direct_type5(kind: AlgebraKind, pi1: &Partition, pi2: &Partition) -> Result<bool> {
    Ok(direct_type5_instance(kind, pi1, pi2)?.is_some())
}

/// (pi1 \ pi2, pi2 \ pi1) as sorted-descending multisets.
fn multiset_diff(a: &[u32], b: &[u32]) -> (Vec<u32>, Vec<u32>) {
    let mut left: Vec<u32> = Vec::new();
    let mut right: Vec<u32> = b.to_vec();
    for &x in a {
        if let Some(pos) = right.iter().position(|&y| y == x) {
            right.remove(pos);
        } else {
            left.push(x);
        }
    }
    left.sort_unstable_by(|x, y| y.cmp(x));
    right.sort_unstable_by(|x, y| y.cmp(x));
    (left, right)
}

/// Covering pair in the dominance order restricted to valid partitions:
/// pi2 strictly below pi1 with no valid partition strictly between.
fn is_covering_pair(kind: AlgebraKind, pi1: &Partition, pi2: &Partition) -> bool {
    if !pi2.dominance_lt(pi1).unwrap_or(false) {
        return false;
    }
    !kind.enumerate_partitions().iter().any(|sigma| {
        sigma.dominance_lt(pi1).unwrap_or(false) && pi2.dominance_lt(sigma).unwrap_or(false)
    })
}

/// Single-step reachability verdict. Yes and No answers are backed by an
/// explicit witness construction, an obstruction, or a registered result;
/// everything else is reported as Unknown rather than guessed.
pub fn one_accessible_status(
    kind: AlgebraKind,
    pi1: &Partition,
    pi2: &Partition,
) -> Result<OneAccessVerdict> {
    check_pair(kind, pi1, pi2)?;
    let verdict = |status, reason: &str| OneAccessVerdict { status, reason: reason.to_string() };
    if pi1 == pi2 {
        return Ok(verdict(TriState::Yes, "equal partitions"));
    }
    if !pi2.dominance_le(pi1)? {
        return Ok(verdict(TriState::No, "target not dominated by source"));
    }
    match kind.tag() {
        GroupTag::Gl | GroupTag::Sl => {
            Ok(verdict(TriState::Yes, "dominance decides both relations"))
        }
        GroupTag::Sp | GroupTag::O => {
            if let Some(instance) = direct_type5_instance(kind, pi1, pi2)? {
                if !instance.phantom {
                    return Ok(verdict(
                        TriState::No,
                        "wide-gap two-part transfer has no realizable move",
                    ));
                }
            }
            if kind.is_distinguished(pi2)? {
                return Ok(verdict(
                    TriState::No,
                    "target is distinguished and is reachable only from itself",
                ));
            }
            if let Some((_, mv)) =
                move_successors(kind, pi1)?.into_iter().find(|(cand, _)| cand == pi2)
            {
                return Ok(verdict(TriState::Yes, &format!("single move {mv}")));
            }
            if direct_type5_instance(kind, pi1, pi2)?.is_some() {
                return Ok(verdict(
                    TriState::No,
                    "wide-gap two-part transfer has no realizable move",
                ));
            }
            let registered = REGISTERED_NOT_ONE_ACCESSIBLE.iter().any(|&(tag, n, src, tgt)| {
                tag == kind.tag()
                    && n == kind.dim()
                    && src.parse::<Partition>().unwrap() == *pi1
                    && tgt.parse::<Partition>().unwrap() == *pi2
            });
            if registered {
                return Ok(verdict(
                    TriState::No,
                    "registered impossibility: every candidate matrix has too few blocks",
                ));
            }
            Ok(verdict(TriState::Unknown, "no registered witness or obstruction applies"))
        }
    }
}

/// Full comparison of an ordered pair: dominance, accessibility with an
/// explicit move chain when one exists, the single-step verdict, and an
/// obstruction label when the pair is blocked.
pub fn access_report(kind: AlgebraKind, pi1: &Partition, pi2: &Partition) -> Result<AccessReport> {
    check_pair(kind, pi1, pi2)?;
    let dominated = pi2.dominance_le(pi1)?;
    let one = one_accessible_status(kind, pi1, pi2)?;
    let (accessible_now, chain) = match kind.tag() {
        GroupTag::Gl | GroupTag::Sl => (dominated, None),
        GroupTag::Sp | GroupTag::O => {
            let chain = accessible_with_chain(kind, pi1, pi2)?;
            (chain.is_some(), chain)
        }
    };
    let obstruction = if accessible_now {
        None
    } else if !dominated {
        Some(Obstruction::NotDominated)
    } else {
        match direct_type5_instance(kind, pi1, pi2)? {
            Some(Type5Instance { phantom: false }) => Some(Obstruction::DirectType5),
            _ if kind.is_distinguished(pi2)? && pi1 != pi2 => {
                Some(Obstruction::DistinguishedTarget)
            }
            Some(_) => Some(Obstruction::DirectType5),
            None => Some(Obstruction::NoMovePath),
        }
    };
    Ok(AccessReport {
        kind,
        source: pi1.clone(),
        target: pi2.clone(),
        dominated,
        accessible: accessible_now,
        one_accessible: one.status,
        one_access_reason: one.reason,
        obstruction,
        witness_chain: chain,
    })
}

/// Hasse diagram (covering relations) of the chosen order on all valid
/// partitions of N. Edges are (upper, lower) node indices, ordered by
/// (upper, lower) enumeration position.
pub fn hasse_diagram(kind: AlgebraKind, order: OrderChoice) -> Result<Diagram> {
    let nodes = kind.enumerate_partitions();
    let n = nodes.len();
    // le[i][j]: nodes[j] <= nodes[i] in the chosen order.
    let mut le = vec![vec![false; n]; n];
    match (order, kind.tag()) {
        (OrderChoice::Dominance, _) | (_, GroupTag::Gl | GroupTag::Sl) => {
            for i in 0..n {
                for j in 0..n {
                    le[i][j] = nodes[j].dominance_le(&nodes[i])?;
                }
            }
        }
        (OrderChoice::Accessibility, _) => {
            for i in 0..n {
                for below in accessible_set(kind, &nodes[i])? {
                    let j = nodes.iter().position(|p| p == &below).expect("closure stays valid");
                    le[i][j] = true;
                }
            }
        }
    }
    let mut edges = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i == j || !le[i][j] {
                continue;
            }
            let covered = !(0..n).any(|k| k != i && k != j && le[i][k] && le[k][j]);
            if covered {
                edges.push((i, j));
            }
        }
    }
    edges.sort_unstable();
    Ok(Diagram { kind, order, nodes, edges })
}

impl Diagram {
    /// Edges as partition pairs, in the diagram's deterministic order.
    pub fn edge_partitions(&self) -> Vec<(&Partition, &Partition)> {
        self.edges.iter().map(|&(i, j)| (&self.nodes[i], &self.nodes[j])).collect()
    }

    pub fn contains_edge(&self, upper: &Partition, lower: &Partition) -> bool {
        self.edge_partitions().iter().any(|&(u, l)| u == upper && l == lower)
    }

    /// The documented edge-list JSON schema.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "kind": self.kind.name(),
            "N": self.kind.dim(),
            "order": self.order.name(),
            "nodes": self.nodes.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
            "edges": self
                .edges
                .iter()
                .map(|&(i, j)| vec![self.nodes[i].to_string(), self.nodes[j].to_string()])
                .collect::<Vec<_>>(),
        })
    }
}

impl AccessReport {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "kind": self.kind.name(),
            "N": self.kind.dim(),
            "source": self.source.to_string(),
            "target": self.target.to_string(),
            "dominated": self.dominated,
            "accessible": self.accessible,
            "one_accessible": self.one_accessible.to_string(),
            "reason": self.one_access_reason,
            "obstruction": self.obstruction.map(|o| o.to_string()),
            "chain": self.witness_chain.as_ref().map(|chain| {
                chain
                    .iter()
                    .map(|(p, mv)| vec![p.to_string(), mv.to_string()])
                    .collect::<Vec<_>>()
            }),
        })
    }
}

fn check_valid(kind: AlgebraKind, pi: &Partition) -> Result<()> {
    if !kind.is_valid_partition(pi) {
        return Err(Error::InvalidPartition(format!("{pi} is not valid for {kind}")));
    }
    Ok(())
}

fn check_pair(kind: AlgebraKind, pi1: &Partition, pi2: &Partition) -> Result<()> {
    check_valid(kind, pi1)?;
    check_valid(kind, pi2)?;
    if pi1.size() != pi2.size() {
        return Err(Error::SizeMismatch(pi1.size() as usize, pi2.size() as usize));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn sp(n: usize) -> AlgebraKind {
        AlgebraKind::sp(n).unwrap()
    }

    fn o(n: usize) -> AlgebraKind {
        AlgebraKind::o(n).unwrap()
    }

    fn successor_partitions(kind: AlgebraKind, s: &str) -> Vec<Partition> {
        move_successors(kind, &part(s)).unwrap().into_iter().map(|(p, _)| p).collect()
    }

    #[test]
    fn successors_of_sp8_top_orbits() {
        let from_top = successor_partitions(sp(8), "[8]");
        assert!(from_top.contains(&part("[4,4]")));
        assert!(from_top.contains(&part("[6,1,1]")));
        assert!(!from_top.contains(&part("[6,2]")));

        let from_62 = successor_partitions(sp(8), "[6,2]");
        assert!(from_62.contains(&part("[4,4]")));
        assert!(from_62.contains(&part("[6,1,1]")));
    }

    #[test]
    fn successors_stay_strictly_below_and_valid() {
        for kind in [sp(8), sp(10), o(7), o(9)] {
            for pi in kind.enumerate_partitions() {
                for (succ, mv) in move_successors(kind, &pi).unwrap() {
                    assert!(kind.is_valid_partition(&succ), "{kind} {pi} -{mv}-> {succ}");
                    assert!(succ.dominance_lt(&pi).unwrap(), "{kind} {pi} -{mv}-> {succ}");
                    assert_eq!(succ.size(), pi.size());
                }
            }
        }
    }

    #[test]
    fn successors_sorted_and_distinct() {
        for pi in sp(12).enumerate_partitions() {
            let succ = move_successors(sp(12), &pi).unwrap();
            for w in succ.windows(2) {
                assert!(w[0].0 > w[1].0);
            }
        }
    }

    #[test]
    fn odd_orthogonal_merge() {
        let succ = successor_partitions(o(12), "[7,5]");
        assert!(succ.contains(&part("[6,6]")));
    }

    #[test]
    fn moves_rejected_for_gl() {
        assert!(matches!(
            move_successors(AlgebraKind::gl(6).unwrap(), &part("[6]")),
            Err(Error::UnsupportedKind(_))
        ));
    }

    #[test]
    fn accessibility_examples() {
        let gl6 = AlgebraKind::gl(6).unwrap();
        assert!(accessible(gl6, &part("[6]"), &part("[2,1,1,1,1]")).unwrap());
        assert!(!accessible(gl6, &part("[3,3]"), &part("[4,1,1]")).unwrap());
        assert!(!accessible(sp(6), &part("[6]"), &part("[4,2]")).unwrap());
        assert!(accessible(sp(8), &part("[6,2]"), &part("[4,2,2]")).unwrap());
        assert!(accessible(sp(8), &part("[6,2]"), &part("[6,2]")).unwrap());
    }

    #[test]
    fn chain_goes_through_the_middle_orbit() {
        let chain = accessible_with_chain(sp(8), &part("[6,2]"), &part("[4,2,2]"))
            .unwrap()
            .unwrap();
        assert_eq!(chain.len(), 2);
        assert_eq!(chain[0].0, part("[6,1,1]"));
        assert_eq!(chain[1].0, part("[4,2,2]"));
        assert_eq!(
            accessible_with_chain(sp(8), &part("[8]"), &part("[8]")).unwrap().unwrap(),
            vec![]
        );
        assert!(accessible_with_chain(sp(8), &part("[8]"), &part("[6,2]")).unwrap().is_none());
    }

    #[test]
    fn direct_type5_detection() {
        assert!(is_direct_type5(sp(10), &part("[8,2]"), &part("[6,4]")).unwrap());
        assert!(is_direct_type5(sp(8), &part("[8]"), &part("[6,2]")).unwrap());
        assert!(!is_direct_type5(sp(8), &part("[6,2]"), &part("[4,4]")).unwrap());
        assert!(!is_direct_type5(sp(8), &part("[6,2]"), &part("[4,2,2]")).unwrap());
        assert!(!is_direct_type5(sp(10), &part("[8,2]"), &part("[5,5]")).unwrap());
    }

    #[test]
    fn one_accessible_examples() {
        let no = one_accessible_status(sp(8), &part("[6,1,1]"), &part("[4,2,1,1]")).unwrap();
        assert_eq!(no.status, TriState::No);
        let yes = one_accessible_status(sp(8), &part("[6,1,1]"), &part("[4,2,2]")).unwrap();
        assert_eq!(yes.status, TriState::Yes);
        let gl4 = AlgebraKind::gl(4).unwrap();
        let coincide = one_accessible_status(gl4, &part("[3,1]"), &part("[2,2]")).unwrap();
        assert_eq!(coincide.status, TriState::Yes);
        let open = one_accessible_status(sp(8), &part("[6,2]"), &part("[4,2,2]")).unwrap();
        assert_eq!(open.status, TriState::Unknown);
        let refl = one_accessible_status(sp(8), &part("[8]"), &part("[8]")).unwrap();
        assert_eq!(refl.status, TriState::Yes);
    }

    #[test]
    fn report_obstruction_labels() {
        let r1 = access_report(sp(6), &part("[6]"), &part("[4,2]")).unwrap();
        assert!(r1.dominated && !r1.accessible);
        assert_eq!(r1.obstruction, Some(Obstruction::DistinguishedTarget));

        let r2 = access_report(sp(10), &part("[8,2]"), &part("[6,4]")).unwrap();
        assert!(r2.dominated && !r2.accessible);
        assert_eq!(r2.obstruction, Some(Obstruction::DirectType5));

        let r3 = access_report(sp(8), &part("[8]"), &part("[6,2]")).unwrap();
        assert_eq!(r3.obstruction, Some(Obstruction::DistinguishedTarget));

        let r4 = access_report(sp(8), &part("[8]"), &part("[4,4]")).unwrap();
        assert!(r4.accessible);
        assert_eq!(r4.obstruction, None);
        assert_eq!(r4.witness_chain.as_ref().unwrap().len(), 1);

        let r5 = access_report(sp(8), &part("[4,4]"), &part("[8]")).unwrap();
        assert!(!r5.dominated);
        assert_eq!(r5.obstruction, Some(Obstruction::NotDominated));
    }

    #[test]
    fn report_for_dominated_unreachable_non_covering() {
        // Dominated, not accessible, not distinguished, not a covering pair:
        // the residual label applies.
        let kinds = sp(12);
        for pi in kinds.enumerate_partitions() {
            for tgt in kinds.enumerate_partitions() {
                let r = access_report(kinds, &pi, &tgt).unwrap();
                if r.dominated
                    && !r.accessible
                    && !kinds.is_distinguished(&tgt).unwrap()
                    && !is_direct_type5(kinds, &pi, &tgt).unwrap()
                {
                    assert_eq!(r.obstruction, Some(Obstruction::NoMovePath));
                }
            }
        }
    }

    #[test]
    fn gl6_hasse_orders_coincide() {
        let gl6 = AlgebraKind::gl(6).unwrap();
        let dom = hasse_diagram(gl6, OrderChoice::Dominance).unwrap();
        let acc = hasse_diagram(gl6, OrderChoice::Accessibility).unwrap();
        assert_eq!(dom.nodes, acc.nodes);
        assert_eq!(dom.edges, acc.edges);
        assert_eq!(dom.edges.len(), 12);
    }

    #[test]
    fn sp8_hasse_upper_structure() {
        let acc = hasse_diagram(sp(8), OrderChoice::Accessibility).unwrap();
        assert!(acc.contains_edge(&part("[8]"), &part("[4,4]")));
        assert!(acc.contains_edge(&part("[8]"), &part("[6,1,1]")));
        assert!(acc.contains_edge(&part("[6,2]"), &part("[4,4]")));
        assert!(acc.contains_edge(&part("[6,2]"), &part("[6,1,1]")));
        assert!(!acc.contains_edge(&part("[8]"), &part("[6,2]")));

        let dom = hasse_diagram(sp(8), OrderChoice::Dominance).unwrap();
        assert!(dom.contains_edge(&part("[8]"), &part("[6,2]")));
        let top_edges: Vec<_> =
            dom.edge_partitions().into_iter().filter(|(u, _)| **u == part("[8]")).collect();
        assert_eq!(top_edges.len(), 1);
    }

    #[test]
    fn edge_list_json_schema() {
        let diagram = hasse_diagram(sp(8), OrderChoice::Accessibility).unwrap();
        let json = diagram.to_json();
        assert_eq!(json["kind"], "sp");
        assert_eq!(json["N"], 8);
        assert_eq!(json["order"], "accessibility");
        assert_eq!(json["nodes"].as_array().unwrap().len(), 14);
        let text = json.to_string();
        assert!(text.starts_with("{\"kind\":\"sp\",\"N\":8,\"order\":\"accessibility\""));
    }

    #[test]
    fn accessibility_is_a_partial_order_on_sp8() {
        let kind = sp(8);
        let nodes = kind.enumerate_partitions();
        let closure: Vec<Vec<Partition>> =
            nodes.iter().map(|p| accessible_set(kind, p).unwrap()).collect();
        for (i, a) in nodes.iter().enumerate() {
            assert!(closure[i].contains(a));
            for b in &closure[i] {
                let j = nodes.iter().position(|p| p == b).unwrap();
                for c in &closure[j] {
                    assert!(closure[i].contains(c), "{a} -> {b} -> {c} not transitive");
                }
                if a != b {
                    assert!(!closure[j].contains(a), "cycle {a} <-> {b}");
                }
            }
        }
    }

    #[test]
    fn invalid_inputs_error() {
        assert!(accessible(sp(8), &part("[5,3]"), &part("[4,4]")).is_err());
        assert!(accessible(sp(8), &part("[8]"), &part("[6]")).is_err());
        assert!(move_successors(sp(8), &part("[7,1]")).is_err());
    }
}
