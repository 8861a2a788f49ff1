//! A battery of end-to-end checks over the whole pipeline, run by the
//! `selftest` command.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cobordism::{self, BandKind, Move, MoveSequence};
use crate::error::Result;
use crate::fumod::{homology, smith_normal_form, torsion_order, FUMatrix, UPoly};
use crate::knots::{self, KnotExpr};
use crate::laurent::{self, GapSequence};
use crate::staircase::{mirror_complex, staircase_complex, tensor_complex};

/// Deliberate corruptions used to check that the battery can fail.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Fault {
    /// Swaps the first two entries of every closed-form gap sequence.
    CorruptGapFormula,
}

#[derive(Debug, Clone)]
pub struct BatteryConfig {
    /// Upper end of the `T(n, n+1)` range in the first two checks.
    pub max_n: u32,
    pub seed: u64,
    pub fault: Option<Fault>,
}

impl Default for BatteryConfig {
    fn default() -> Self {
        Self {
            max_n: 12,
            seed: 0x005e_ed0f_u64,
            fault: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CriterionOutcome {
    pub id: u32,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

pub const CRITERIA: [(u32, &str); 8] = [
    (1, "torsion order of T(n,n+1) is floor(n/2)"),
    (2, "gap sequence of T(n,n+1) matches the closed form"),
    (3, "connected sums take the max torsion order"),
    (4, "mirrors preserve torsion order"),
    (5, "signature and upsilon closed forms"),
    (6, "K(gamma,m) family bounds"),
    (7, "structural properties"),
    (8, "torsion bound is tight on Batson sequences"),
];

pub fn run_battery(cfg: &BatteryConfig) -> Vec<CriterionOutcome> {
    CRITERIA
        .iter()
        .map(|&(id, _)| run_criterion(id, cfg))
        .collect()
}

pub fn run_criterion(id: u32, cfg: &BatteryConfig) -> CriterionOutcome {
    let name = CRITERIA
        .iter()
        .find(|(i, _)| *i == id)
        .map(|(_, n)| *n)
        .unwrap_or("unknown criterion");
    let result = match id {
        1 => lemma_torsion_order(cfg),
        2 => gap_formula(cfg),
        3 => kunneth_max(),
        4 => mirror_invariance(),
        5 => closed_forms(),
        6 => family_bounds(),
        7 => structural(cfg),
        8 => batson_tightness(),
        _ => Ok(Err(format!("no criterion {id}"))),
    };
    let (passed, detail) = match result {
        Ok(Ok(detail)) => (true, detail),
        Ok(Err(why)) => (false, why),
        Err(e) => (false, e.to_string()),
    };
    CriterionOutcome {
        id,
        name,
        passed,
        detail,
    }
}

/// `Ok(Ok(summary))` on pass, `Ok(Err(reason))` on a failed comparison.
type Check = Result<std::result::Result<String, String>>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Ok(Err(format!($($msg)+)));
        }
    };
}

fn closed_form_gaps(n: u32, cfg: &BatteryConfig) -> Result<GapSequence> {
    let gaps = laurent::torus_gap_formula(n)?;
    match cfg.fault {
        Some(Fault::CorruptGapFormula) => {
            let mut v = gaps.as_slice().to_vec();
            v.swap(0, 1);
            GapSequence::new(v)
        }
        None => Ok(gaps),
    }
}

fn lemma_torsion_order(cfg: &BatteryConfig) -> Check {
    for n in 2..=cfg.max_n {
        let gaps = knots::torus_gaps(n, n + 1)?;
        let order = torsion_order(&homology(&staircase_complex(&gaps)?)?);
        ensure!(
            order == n / 2,
            "T({n},{}) has torsion order {order}, expected {}",
            n + 1,
            n / 2
        );
    }
    Ok(Ok(format!("2 <= n <= {}", cfg.max_n)))
}

fn gap_formula(cfg: &BatteryConfig) -> Check {
    for n in 2..=cfg.max_n {
        let computed = knots::torus_gaps(n, n + 1)?;
        let closed = closed_form_gaps(n, cfg)?;
        ensure!(
            computed == closed,
            "T({n},{}): computed gaps {:?} differ from closed form {:?}",
            n + 1,
            computed.as_slice(),
            closed.as_slice()
        );
    }
    Ok(Ok(format!("2 <= n <= {}", cfg.max_n)))
}

/// The 14 knots `T(n,n+1)` and their mirrors for `2 <= n <= 8`, with orders.
fn small_family() -> Vec<(KnotExpr, u32)> {
    (2..=8u32)
        .flat_map(|n| {
            let t = KnotExpr::torus(n, n + 1);
            [(t.clone(), n / 2), (t.mirror(), n / 2)]
        })
        .collect()
}

/// Twenty deterministic index pairs into [`small_family`].
pub fn kunneth_pairs() -> Vec<(usize, usize)> {
    (0..20)
        .map(|i| ((5 * i + 1) % 14, (3 * i + 4) % 14))
        .collect()
}

fn kunneth_max() -> Check {
    let fam = small_family();
    for (i, j) in kunneth_pairs() {
        let (a, oa) = &fam[i];
        let (b, ob) = &fam[j];
        let c = tensor_complex(&knots::complex_of(a)?, &knots::complex_of(b)?)?;
        let h = homology(&c)?;
        ensure!(h.free_rank == 1, "{a} # {b}: free rank {}", h.free_rank);
        let order = torsion_order(&h);
        ensure!(
            order == *oa.max(ob),
            "{a} # {b}: order {order}, expected {}",
            oa.max(ob)
        );
    }
    Ok(Ok("20 pairs".into()))
}

fn mirror_invariance() -> Check {
    for n in 2..=10u32 {
        let c = staircase_complex(&knots::torus_gaps(n, n + 1)?)?;
        let o = torsion_order(&homology(&c)?);
        let m = torsion_order(&homology(&mirror_complex(&c)?)?);
        ensure!(o == m, "T({n},{}): order {o}, mirror {m}", n + 1);
    }
    Ok(Ok("2 <= n <= 10".into()))
}

fn closed_forms() -> Check {
    for r in 2..=6i64 {
        let k = KnotExpr::torus(2 * r as u32 - 1, 2 * r as u32);
        let sigma = knots::signature(&k);
        ensure!(sigma == -2 * r * r + 2, "σ({k}) = {sigma}");
        let u = knots::upsilon(&k);
        ensure!(u == Some(-r * r + r), "υ({k}) = {u:?}");
        let g = knots::gamma4_lower_bound(&k)?;
        ensure!(g == r - 1, "υ - σ/2 for {k} is {g}");
    }
    let mut pairs = 0;
    for p in 1..=7u32 {
        for q in p + 1..=7 {
            if laurent::gcd(p as u64, q as u64) != 1 {
                continue;
            }
            let lattice = knots::torus_signature(p, q);
            let seifert = knots::seifert_signature(p, q);
            ensure!(
                lattice == seifert,
                "T({p},{q}): lattice {lattice}, Seifert {seifert}"
            );
            pairs += 1;
        }
    }
    Ok(Ok(format!("2 <= r <= 6, {pairs} signature cross-checks")))
}

fn family_bounds() -> Check {
    for gamma in 1..=4u32 {
        for m in 1..=4u32 {
            let k = KnotExpr::family(gamma, m);
            let direct = knots::order_u_direct(&k)?;
            ensure!(
                direct == gamma + m - 1,
                "Order_U({k}) = {direct} via homology"
            );
            let f = cobordism::family_report(gamma, m)?;
            ensure!(f.order_u == gamma + m - 1, "family order {}", f.order_u);
            ensure!(
                f.gamma4_lower == gamma as i64,
                "γ₄ lower {} for ({gamma},{m})",
                f.gamma4_lower
            );
            ensure!(
                f.min_minima == m,
                "min minima {} for ({gamma},{m})",
                f.min_minima
            );
            ensure!(
                f.dur_lower == (gamma + m) as i64,
                "d_u^r lower {} for ({gamma},{m})",
                f.dur_lower
            );
        }
    }
    Ok(Ok("1 <= γ, m <= 4".into()))
}

pub fn random_matrix(rng: &mut impl Rng, max_dim: usize, max_deg: usize) -> FUMatrix {
    let rows = rng.gen_range(1..=max_dim);
    let cols = rng.gen_range(1..=max_dim);
    let mut m = FUMatrix::zero(rows, cols);
    for r in 0..rows {
        for c in 0..cols {
            if rng.gen_bool(0.6) {
                let bits: u64 = rng.gen_range(0..(1u64 << (max_deg + 1)));
                m.set(
                    r,
                    c,
                    UPoly::from_exponents((0..=max_deg).filter(|i| bits >> i & 1 == 1)),
                );
            }
        }
    }
    m
}

/// A random move sequence from a knot back to a knot.
pub fn random_knot_cobordism(rng: &mut impl Rng, max_len: usize) -> MoveSequence {
    let mut moves = Vec::new();
    let mut count = 1u32;
    let len = rng.gen_range(0..=max_len);
    for _ in 0..len {
        let choices: &[Move] = if count >= 2 {
            &[
                Move::Birth,
                Move::Death,
                Move::Band(BandKind::Merge),
                Move::Band(BandKind::Split),
                Move::Band(BandKind::NonorientableSelf),
            ]
        } else {
            &[
                Move::Birth,
                Move::Band(BandKind::Split),
                Move::Band(BandKind::NonorientableSelf),
            ]
        };
        let mv = choices[rng.gen_range(0..choices.len())];
        count = match mv {
            Move::Birth | Move::Band(BandKind::Split) => count + 1,
            Move::Death | Move::Band(BandKind::Merge) => count - 1,
            Move::Band(BandKind::NonorientableSelf) => count,
        };
        moves.push(mv);
    }
    while count > 1 {
        moves.push(if rng.gen_bool(0.5) {
            Move::Death
        } else {
            Move::Band(BandKind::Merge)
        });
        count -= 1;
    }
    MoveSequence::new(moves)
}

fn structural(cfg: &BatteryConfig) -> Check {
    // ∂² = 0 and free rank 1 on every knot complex the battery builds.
    let fam = small_family();
    let mut complexes = 0;
    for (k, _) in &fam {
        let c = knots::complex_of(k)?;
        c.check_square_zero()?;
        ensure!(homology(&c)?.free_rank == 1, "{k}: free rank is not 1");
        complexes += 1;
    }
    for (i, j) in kunneth_pairs() {
        let c = knots::complex_of(&fam[i].0.clone().sum(fam[j].0.clone()))?;
        c.check_square_zero()?;
        ensure!(
            homology(&c)?.free_rank == 1,
            "pair ({i},{j}): free rank is not 1"
        );
        complexes += 1;
    }

    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    for trial in 0..200 {
        let m = random_matrix(&mut rng, 6, 4);
        let f = smith_normal_form(&m)?;
        let diag = f.left_transform.mul(&m)?.mul(&f.right_transform)?;
        ensure!(
            diag == f.diagonal(),
            "matrix {trial}: transforms do not diagonalize"
        );
        ensure!(
            f.invariant_factors.windows(2).all(|w| w[0].divides(&w[1])),
            "matrix {trial}: divisibility chain broken"
        );
        for t in [&f.left_transform, &f.right_transform] {
            ensure!(
                t.determinant_small() == Some(UPoly::one()),
                "matrix {trial}: transform not invertible"
            );
        }
    }

    for p in 1..=9i64 {
        for q in p + 1..=9 {
            if laurent::gcd(p as u64, q as u64) != 1 {
                continue;
            }
            let d = laurent::torus_alexander(p, q)?;
            ensure!(
                d.is_symmetric() && d.eval_at_one() == 1,
                "Δ of T({p},{q}) not normalized"
            );
        }
    }

    let mut normalized = 0;
    for trial in 0..100 {
        let s = random_knot_cobordism(&mut rng, 12);
        let st = cobordism::stats(&s)?;
        ensure!(
            st.chi == st.m as i64 - st.b as i64 + st.big_m as i64,
            "sequence {trial}: χ"
        );
        ensure!(st.gamma == -st.chi, "sequence {trial}: γ");
        ensure!(
            st.norm == st.m.max(st.big_m) as i64 - st.chi,
            "sequence {trial}: |Σ|"
        );
        if let Ok(n) = cobordism::normalize(&s) {
            let nst = cobordism::stats(&n)?;
            ensure!(
                (nst.m, nst.b, nst.big_m) == (st.m, st.b, st.big_m),
                "sequence {trial}: normalize changed counts"
            );
            normalized += 1;
        }
    }
    Ok(Ok(format!(
        "{complexes} complexes, 200 matrices, 100 move sequences ({normalized} normalized)"
    )))
}

fn batson_tightness() -> Check {
    for r in 2..=6u32 {
        for s in 1..r {
            let seq = cobordism::batson_sequence(r, s)?;
            let st = cobordism::stats(&seq)?;
            let target = knots::order_u(&KnotExpr::torus(2 * s - 1, 2 * s))?;
            let source = knots::order_u(&KnotExpr::torus(2 * r - 1, 2 * r))?;
            ensure!(
                st.gamma == (r - s) as i64,
                "γ of Batson({r},{s}) is {}",
                st.gamma
            );
            let bound = cobordism::torsion_order_upper_bound(target, &st);
            ensure!(
                source as u32 == r - 1,
                "Order_U(T({},{})) = {source}",
                2 * r - 1,
                2 * r
            );
            ensure!(
                bound == source as i64,
                "Batson({r},{s}): bound {bound}, order {source}"
            );
        }
    }
    Ok(Ok("1 <= s < r <= 6".into()))
}
