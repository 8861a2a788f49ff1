//! A combinatorial model of knot cobordisms as sequences of Morse moves,
//! with Euler-characteristic bookkeeping, a counting-level normal form, and
//! the torsion-order bounds evaluated on top of it.
//!
//! Only move counts and the number of link components between moves are
//! modelled. Whether a self-band is orientable is declared by the user. The
//! normal form additionally places the surviving non-orientable band on the
//! original knot; that placement has no counting-level content and is not
//! represented.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::knots::{self, parse_knot, KnotExpr};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BandKind {
    Merge,
    Split,
    NonorientableSelf,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Move {
    Birth,
    Band(BandKind),
    Death,
}

impl Move {
    /// Change in the number of components.
    fn delta(self) -> i64 {
        match self {
            Move::Birth | Move::Band(BandKind::Split) => 1,
            Move::Death | Move::Band(BandKind::Merge) => -1,
            Move::Band(BandKind::NonorientableSelf) => 0,
        }
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Move::Birth => "birth",
            Move::Death => "death",
            Move::Band(BandKind::Merge) => "band merge",
            Move::Band(BandKind::Split) => "band split",
            Move::Band(BandKind::NonorientableSelf) => "band nonorientable",
        })
    }
}

impl FromStr for Move {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let words: Vec<&str> = s.split_whitespace().collect();
        match words.as_slice() {
            ["birth"] => Ok(Move::Birth),
            ["death"] => Ok(Move::Death),
            ["band", "merge"] => Ok(Move::Band(BandKind::Merge)),
            ["band", "split"] => Ok(Move::Band(BandKind::Split)),
            ["band", "nonorientable"] => Ok(Move::Band(BandKind::NonorientableSelf)),
            _ => Err(Error::invalid(format!("unknown move '{s}'"))),
        }
    }
}

/// Moves in order, with optional declared endpoints (metadata only).
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct MoveSequence {
    pub moves: Vec<Move>,
    pub source: Option<KnotExpr>,
    pub target: Option<KnotExpr>,
}

impl MoveSequence {
    pub fn new(moves: Vec<Move>) -> Self {
        Self {
            moves,
            source: None,
            target: None,
        }
    }

    pub fn with_endpoints(mut self, source: KnotExpr, target: KnotExpr) -> Self {
        self.source = Some(source);
        self.target = Some(target);
        self
    }

    /// Parses the line-oriented move-file format:
    ///
    /// ```text
    /// # comment
    /// from: T(3,4)
    /// to: U
    /// band nonorientable
    /// ```
    ///
    /// Lines starting with `#` are comments; move lines may also carry a
    /// trailing `# ...` comment. Header values are knot expressions, so `#`
    /// there means connected sum.
    pub fn parse_move_file(text: &str) -> Result<Self> {
        let mut seq = Self::default();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let at = |e: Error| match e {
                Error::InvalidInput(msg) => Error::invalid(format!("line {}: {msg}", lineno + 1)),
                Error::Syntax { pos, msg } => Error::invalid(format!(
                    "line {}: syntax error at position {pos}: {msg}",
                    lineno + 1
                )),
                other => other,
            };
            if let Some(rest) = line.strip_prefix("from:") {
                if seq.source.is_some() {
                    return Err(at(Error::invalid("duplicate 'from:' header")));
                }
                seq.source = Some(parse_knot(rest).map_err(at)?);
            } else if let Some(rest) = line.strip_prefix("to:") {
                if seq.target.is_some() {
                    return Err(at(Error::invalid("duplicate 'to:' header")));
                }
                seq.target = Some(parse_knot(rest).map_err(at)?);
            } else {
                let body = line.split('#').next().unwrap_or("").trim();
                seq.moves.push(body.parse().map_err(at)?);
            }
        }
        Ok(seq)
    }

    pub fn to_move_file(&self) -> String {
        let mut out = String::new();
        if let Some(s) = &self.source {
            out.push_str(&format!("from: {s}\n"));
        }
        if let Some(t) = &self.target {
            out.push_str(&format!("to: {t}\n"));
        }
        for m in &self.moves {
            out.push_str(&format!("{m}\n"));
        }
        out
    }
}

/// Component counts before the first move and after each move.
pub fn validate(s: &MoveSequence, start_components: u32) -> Result<Vec<u32>> {
    if start_components < 1 {
        return Err(Error::invalid(
            "a cobordism must start from at least one component",
        ));
    }
    let mut trace = Vec::with_capacity(s.moves.len() + 1);
    let mut count = start_components as i64;
    trace.push(start_components);
    for (idx, &mv) in s.moves.iter().enumerate() {
        if mv == Move::Band(BandKind::Merge) && count < 2 {
            return Err(Error::invalid(format!(
                "move {idx} ({mv}): a merge band needs two components, have {count}"
            )));
        }
        count += mv.delta();
        if count < 1 {
            return Err(Error::invalid(format!(
                "move {idx} ({mv}): component count below 1"
            )));
        }
        trace.push(count as u32);
    }
    Ok(trace)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CobordismStats {
    /// Births (local minima).
    pub m: u32,
    /// Bands (saddles).
    pub b: u32,
    /// Deaths (local maxima).
    pub big_m: u32,
    /// `m - b + M`.
    pub chi: i64,
    /// `-chi`, the non-orientable genus of a knot cobordism.
    pub gamma: i64,
    /// `|Σ| = max(m, M) - chi`.
    pub norm: i64,
    pub nonorientable: bool,
}

/// Counts for a sequence that starts and ends on a single component.
pub fn stats(s: &MoveSequence) -> Result<CobordismStats> {
    let trace = validate(s, 1)?;
    let end = *trace.last().expect("trace is nonempty");
    if end != 1 {
        return Err(Error::invalid(format!(
            "endpoints are not knots: the sequence ends with {end} components"
        )));
    }
    Ok(stats_unchecked(&s.moves))
}

fn stats_unchecked(moves: &[Move]) -> CobordismStats {
    let count = |pred: fn(&Move) -> bool| moves.iter().filter(|m| pred(m)).count() as u32;
    let m = count(|mv| *mv == Move::Birth);
    let big_m = count(|mv| *mv == Move::Death);
    let b = count(|mv| matches!(mv, Move::Band(_)));
    let chi = m as i64 - b as i64 + big_m as i64;
    CobordismStats {
        m,
        b,
        big_m,
        chi,
        gamma: -chi,
        norm: m.max(big_m) as i64 - chi,
        nonorientable: moves.contains(&Move::Band(BandKind::NonorientableSelf)),
    }
}

/// Reorders a non-orientable knot cobordism as: `m` births, `m` merge
/// bands, `b - (m + M + 1)` orientable bands, one non-orientable band, `M`
/// split bands, `M` deaths. Extra non-orientable bands become orientable
/// bands in the middle block, realized as alternating split/merge pairs
/// (the lexicographically first feasible choice). Counts `(m, b, M)` are
/// preserved; when no such arrangement exists this fails rather than
/// inventing moves.
pub fn normalize(s: &MoveSequence) -> Result<MoveSequence> {
    let st = stats(s)?;
    if !st.nonorientable {
        return Err(Error::NoNonorientableBand);
    }
    let middle = st.b as i64 - (st.m as i64 + st.big_m as i64 + 1);
    if middle < 0 {
        return Err(Error::invalid(format!(
            "no normal form: {} bands cannot cover {} births, {} deaths and a non-orientable band",
            st.b, st.m, st.big_m
        )));
    }
    if middle % 2 != 0 {
        return Err(Error::invalid(format!(
            "no normal form: {middle} orientable bands cannot return a knot to a knot"
        )));
    }
    let mut moves = Vec::with_capacity(s.moves.len());
    moves.extend(std::iter::repeat_n(Move::Birth, st.m as usize));
    moves.extend(std::iter::repeat_n(
        Move::Band(BandKind::Merge),
        st.m as usize,
    ));
    for _ in 0..middle / 2 {
        moves.push(Move::Band(BandKind::Split));
        moves.push(Move::Band(BandKind::Merge));
    }
    moves.push(Move::Band(BandKind::NonorientableSelf));
    moves.extend(std::iter::repeat_n(
        Move::Band(BandKind::Split),
        st.big_m as usize,
    ));
    moves.extend(std::iter::repeat_n(Move::Death, st.big_m as usize));
    let out = MoveSequence {
        moves,
        source: s.source.clone(),
        target: s.target.clone(),
    };
    let after =
        stats(&out).map_err(|e| Error::internal(format!("normal form is infeasible: {e}")))?;
    if (after.m, after.b, after.big_m) != (st.m, st.b, st.big_m) {
        return Err(Error::internal("normal form changed the move counts"));
    }
    Ok(out)
}

/// `max(Order(K₂), M) + γ(Σ)`, an upper bound on `Order(K₁)` for a
/// cobordism from `K₁` to `K₂`. Any torsion order can be fed in.
pub fn torsion_order_upper_bound(order_target: u32, st: &CobordismStats) -> i64 {
    (order_target.max(st.big_m) as i64) + st.gamma
}

/// Minimum number of local minima of a surface in the 4-ball with boundary
/// `k` and non-orientable genus `gamma`: `max(0, Order_U(k) - gamma + 1)`.
pub fn min_local_minima(k: &KnotExpr, gamma: u32) -> Result<u32> {
    let order = knots::order_u(k)? as i64;
    Ok((order - gamma as i64 + 1).max(0) as u32)
}

/// `|Order_U(K₁) - Order_U(K₂)|`, a lower bound on the refined unoriented
/// cobordism distance.
pub fn dur_lower_bound(k1: &KnotExpr, k2: &KnotExpr) -> Result<u32> {
    Ok(knots::order_u(k1)?.abs_diff(knots::order_u(k2)?))
}

/// `Order_U(K)`, a lower bound on the unoriented band-unlinking number.
pub fn ulb_lower_bound(k: &KnotExpr) -> Result<u32> {
    knots::order_u(k)
}

/// `|Order_U(K₁) - Order_U(K₂)| <= m + b + M`. A `false` means the declared
/// sequence cannot connect the two knots.
pub fn wong_bound_check(k1: &KnotExpr, k2: &KnotExpr, st: &CobordismStats) -> Result<bool> {
    let diff = dur_lower_bound(k1, k2)? as i64;
    Ok(diff <= st.m as i64 + st.b as i64 + st.big_m as i64)
}

/// `r - s` non-orientable bands from `T(2r-1, 2r)` to `T(2s-1, 2s)`.
pub fn batson_sequence(r: u32, s: u32) -> Result<MoveSequence> {
    if s < 1 || r <= s {
        return Err(Error::invalid(format!(
            "Batson sequence needs r > s >= 1, got r={r}, s={s}"
        )));
    }
    Ok(MoveSequence::new(vec![
        Move::Band(BandKind::NonorientableSelf);
        (r - s) as usize
    ])
    .with_endpoints(
        KnotExpr::torus(2 * r - 1, 2 * r),
        KnotExpr::torus(2 * s - 1, 2 * s),
    ))
}

/// A named bound value and where it comes from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bound {
    pub name: &'static str,
    /// `None` when the bound is suppressed.
    pub value: Option<i64>,
    pub provenance: &'static str,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BoundReport {
    pub bounds: Vec<Bound>,
    pub notes: Vec<String>,
}

impl BoundReport {
    pub fn get(&self, name: &str) -> Option<i64> {
        self.bounds
            .iter()
            .find(|b| b.name == name)
            .and_then(|b| b.value)
    }
}

/// Bounds for the family `K_{γ,m} = T(2r-1, 2r) # mirror(T(2s-1, 2s))`,
/// `r = γ + m`, `s = m`, measured against the unknot.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyReport {
    pub gamma: u32,
    pub m: u32,
    pub r: u32,
    pub s: u32,
    pub knot: KnotExpr,
    pub order_u: u32,
    pub gamma4_lower: i64,
    pub du_upper: i64,
    pub min_minima: u32,
    pub dur_lower: i64,
    /// Claimed from a ribbon disc that is not constructed here. Suppressed
    /// when it would fall below `dur_lower` (the `m = 1` case).
    pub dur_upper: Option<i64>,
    pub m1_boundary_case: bool,
}

impl FamilyReport {
    pub fn bound_report(&self) -> BoundReport {
        let mut notes = vec![format!(
            "d_u upper bound realized by {} non-orientable bands to T({},{}) # mirror(T({},{})), which is slice",
            self.r - self.s,
            2 * self.s - 1,
            2 * self.s,
            2 * self.s - 1,
            2 * self.s
        )];
        if self.m1_boundary_case {
            notes.push("m=1 boundary case: claimed d_u^r upper bound γ+2m-2 lies below the proven lower bound and is suppressed".into());
        }
        BoundReport {
            bounds: vec![
                Bound {
                    name: "order_u",
                    value: Some(self.order_u as i64),
                    provenance: "homology of the tensor complex",
                },
                Bound {
                    name: "gamma4_lower",
                    value: Some(self.gamma4_lower),
                    provenance: "υ - σ/2 lower bound",
                },
                Bound {
                    name: "du_upper",
                    value: Some(self.du_upper),
                    provenance: "Batson band sequence plus slice complement",
                },
                Bound {
                    name: "min_minima",
                    value: Some(self.min_minima as i64),
                    provenance: "torsion-order bound on local maxima of the punctured surface",
                },
                Bound {
                    name: "dur_lower",
                    value: Some(self.dur_lower),
                    provenance: "minimum local minima plus non-orientable genus",
                },
                Bound {
                    name: "dur_upper",
                    value: self.dur_upper,
                    provenance: "claimed, not constructed: ribbon disc with 2m-1 minima",
                },
            ],
            notes,
        }
    }
}

pub fn family_report(gamma: u32, m: u32) -> Result<FamilyReport> {
    if gamma < 1 || m < 1 {
        return Err(Error::invalid(format!(
            "family needs gamma >= 1 and m >= 1, got ({gamma}, {m})"
        )));
    }
    let (r, s) = (gamma + m, m);
    let knot = KnotExpr::family(gamma, m);
    let order_u = knots::order_u(&knot)?;
    let gamma4_lower = knots::gamma4_lower_bound(&knot)?;
    let du_upper = stats(&batson_sequence(r, s)?)?.gamma;
    if gamma4_lower != du_upper {
        return Err(Error::internal(format!(
            "γ₄ lower bound {gamma4_lower} differs from the band construction {du_upper}"
        )));
    }
    let min_minima = min_local_minima(&knot, gamma4_lower as u32)?;
    let dur_lower = min_minima as i64 + gamma4_lower;
    let claimed = gamma as i64 + 2 * m as i64 - 2;
    let m1_boundary_case = claimed < dur_lower;
    Ok(FamilyReport {
        gamma,
        m,
        r,
        s,
        knot,
        order_u,
        gamma4_lower,
        du_upper,
        min_minima,
        dur_lower,
        dur_upper: (!m1_boundary_case).then_some(claimed),
        m1_boundary_case,
    })
}

/// Everything computable from a move sequence and its declared endpoints.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CobordismReport {
    pub trace: Vec<u32>,
    pub stats: CobordismStats,
    /// `Err` carries the reason no normal form exists.
    pub normalized: std::result::Result<MoveSequence, String>,
    pub endpoints: Option<EndpointBounds>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EndpointBounds {
    pub source_order_u: u32,
    pub target_order_u: u32,
    pub torsion_order_upper_bound: i64,
    /// `Order_U(source) <= torsion_order_upper_bound`.
    pub bound_holds: bool,
    pub wong_bound_check: bool,
    pub dur_lower_bound: u32,
}

pub fn cobordism_report(s: &MoveSequence) -> Result<CobordismReport> {
    let trace = validate(s, 1)?;
    let st = stats(s)?;
    let normalized = match normalize(s) {
        Ok(n) => Ok(n),
        Err(e) if e.is_internal() => return Err(e),
        Err(e) => Err(e.to_string()),
    };
    let endpoints = match (&s.source, &s.target) {
        (Some(k1), Some(k2)) => {
            let o1 = knots::order_u(k1)?;
            let o2 = knots::order_u(k2)?;
            let bound = torsion_order_upper_bound(o2, &st);
            Some(EndpointBounds {
                source_order_u: o1,
                target_order_u: o2,
                torsion_order_upper_bound: bound,
                bound_holds: o1 as i64 <= bound,
                wong_bound_check: wong_bound_check(k1, k2, &st)?,
                dur_lower_bound: o1.abs_diff(o2),
            })
        }
        _ => None,
    };
    Ok(CobordismReport {
        trace,
        stats: st,
        normalized,
        endpoints,
    })
}
