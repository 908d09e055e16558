//! Commuting-projector Hamiltonians built from cycle operators.
//!
//! Each term -O_L has eigenvalue -(-1)^<C, L> on the charge class [C], so
//! the spectrum is the weight distribution of the syndrome code
//! {(<C, L_i>)_i}. Small syndrome codes are enumerated directly; when the
//! syndrome code is large but its dual is small, the distribution comes
//! from the dual by the MacWilliams transform.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::codespace::{close_cycles, GraphicalCode};
use crate::error::{Error, Result};
use crate::f2::{BitVec, Subspace};
use crate::graph::EdgeVector;
use crate::pauli::{CycleFrame, PairingConvention, PauliString};

/// Largest subspace enumerated element by element.
pub const MAX_ENUM_DIM: usize = 26;
/// Largest qubit count for the exact-diagonalization oracle.
pub const MAX_ORACLE_QUBITS: usize = 12;

#[derive(Clone, Debug)]
pub struct HamiltonianSpec {
    pub code: GraphicalCode,
    pub terms: Vec<EdgeVector>,
}

impl HamiltonianSpec {
    /// Checks that every term lies in the cycle group and that the terms
    /// generate it.
    pub fn new(code: &GraphicalCode, terms: Vec<EdgeVector>) -> Result<Self> {
        let closed = close_cycles(&code.graph, &terms)?;
        if closed != code.cycle_group {
            return Err(Error::TermsMismatch);
        }
        Ok(HamiltonianSpec { code: code.clone(), terms })
    }

    /// One term per recorded generator of the code.
    pub fn from_code(code: &GraphicalCode) -> Result<Self> {
        Self::new(code, code.generators.clone())
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Level {
    pub energy: i64,
    pub degeneracy: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SpectrumMethod {
    Direct,
    MacWilliams,
    Oracle,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpectrumReport {
    pub qubits: usize,
    pub term_count: usize,
    pub levels: Vec<Level>,
    pub ground_energy: i64,
    pub ground_degeneracy: u64,
    /// `None` when the spectrum is a single level.
    pub gap: Option<i64>,
    pub method: SpectrumMethod,
}

impl SpectrumReport {
    fn from_levels(qubits: usize, term_count: usize, levels: BTreeMap<i64, u64>, method: SpectrumMethod) -> Self {
        let levels: Vec<Level> = levels
            .into_iter()
            .filter(|&(_, d)| d > 0)
            .map(|(energy, degeneracy)| Level { energy, degeneracy })
            .collect();
        let ground = levels[0];
        SpectrumReport {
            qubits,
            term_count,
            gap: levels.get(1).map(|l| l.energy - ground.energy),
            ground_energy: ground.energy,
            ground_degeneracy: ground.degeneracy,
            levels,
            method,
        }
    }

    /// Same spectrum, ignoring how it was obtained.
    pub fn same_levels(&self, other: &SpectrumReport) -> bool {
        self.qubits == other.qubits && self.levels == other.levels
    }
}

fn check_qubits(n: usize) -> Result<()> {
    if n > 63 {
        return Err(Error::TooLarge(format!("{n} qubits; degeneracies overflow 64 bits")));
    }
    Ok(())
}

/// Syndrome of a set of edges against every term.
fn syndrome(terms: &[EdgeVector], c: &EdgeVector) -> BitVec {
    BitVec::from_bools(&terms.iter().map(|t| t.dot(c)).collect::<Vec<_>>())
}

/// Weight distribution of a subspace of GF(2)^len by enumeration.
fn weights_direct(s: &Subspace, len: usize) -> Vec<u64> {
    let mut a = vec![0u64; len + 1];
    for v in s.elements() {
        a[v.weight()] += 1;
    }
    a
}

/// Krawtchouk value K_j(i) for length `len`.
fn krawtchouk(len: usize, j: usize, i: usize) -> i128 {
    let binom = |n: usize, k: usize| -> i128 {
        if k > n {
            return 0;
        }
        let mut b: i128 = 1;
        for t in 0..k.min(n - k) {
            b = b * (n - t) as i128 / (t + 1) as i128;
        }
        b
    };
    (0..=j.min(i))
        .map(|s| {
            let v = binom(i, s) * binom(len - i, j - s);
            if s % 2 == 0 {
                v
            } else {
                -v
            }
        })
        .sum()
}

/// Weight distribution of `dual`'s orthogonal complement via MacWilliams.
fn weights_macwilliams(dual: &Subspace, len: usize) -> Result<Vec<u64>> {
    if len > 96 {
        return Err(Error::TooLarge(format!("{len} terms exceed the exact MacWilliams range")));
    }
    let b = weights_direct(dual, len);
    let size = 1i128 << dual.dim();
    (0..=len)
        .map(|j| {
            let sum: i128 = (0..=len).filter(|&i| b[i] > 0).map(|i| b[i] as i128 * krawtchouk(len, j, i)).sum();
            debug_assert_eq!(sum % size, 0);
            u64::try_from(sum / size).map_err(|_| Error::TooLarge("weight count overflow".into()))
        })
        .collect()
}

/// Combinatorial spectrum over charge classes.
pub fn spectrum(h: &HamiltonianSpec) -> Result<SpectrumReport> {
    let n = h.code.n;
    check_qubits(n)?;
    let t = h.terms.len();
    if t == 0 {
        return Ok(SpectrumReport::from_levels(n, 0, BTreeMap::from([(0, 1u64 << n)]), SpectrumMethod::Direct));
    }
    let even = h.code.graph.even_space();
    let synd = Subspace::span(t, even.basis().iter().map(|c| syndrome(&h.terms, c)))?;
    let r = synd.dim();
    let (weights, method) = if r <= MAX_ENUM_DIM {
        (weights_direct(&synd, t), SpectrumMethod::Direct)
    } else if t - r <= MAX_ENUM_DIM {
        (weights_macwilliams(&synd.orthogonal_complement(), t)?, SpectrumMethod::MacWilliams)
    } else {
        return Err(Error::TooLarge(format!("syndrome code of dimension {r} in length {t}")));
    };
    let mult = 1u64 << (n - r);
    let levels = weights
        .iter()
        .enumerate()
        .map(|(w, &a)| (2 * w as i64 - t as i64, a * mult))
        .collect();
    Ok(SpectrumReport::from_levels(n, t, levels, method))
}

/// Sum of degeneracy * exp(-beta * energy).
pub fn partition_function(report: &SpectrumReport, beta: f64) -> f64 {
    report.levels.iter().map(|l| l.degeneracy as f64 * (-beta * l.energy as f64).exp()).sum()
}

#[derive(Clone, Debug, Serialize)]
pub struct GapTrend {
    /// (size, qubits, gap) per size parameter, in input order.
    pub points: Vec<(usize, usize, Option<i64>)>,
    pub constant: bool,
}

/// Gap of `build(size)` for every size; `constant` when all gaps agree.
pub fn gap_trend(sizes: &[usize], build: impl Fn(usize) -> Result<HamiltonianSpec>) -> Result<GapTrend> {
    let mut points = Vec::new();
    for &s in sizes {
        let rep = spectrum(&build(s)?)?;
        points.push((s, rep.qubits, rep.gap));
    }
    let constant = points.windows(2).all(|w| w[0].2 == w[1].2);
    Ok(GapTrend { points, constant })
}

/// Spectrum from the signed Pauli terms alone.
///
/// The terms commute, so they are simultaneously diagonal. Picking an
/// independent subset G_1..G_r, every term equals +-prod G_j over some
/// subset, and each of the 2^r sign patterns of the G_j labels an
/// eigenspace of dimension 2^(n-r).
pub fn exact_diag_oracle(h: &HamiltonianSpec, conv: &PairingConvention) -> Result<SpectrumReport> {
    let n = h.code.n;
    if n > MAX_ORACLE_QUBITS {
        return Err(Error::TooLarge(format!("oracle limited to {MAX_ORACLE_QUBITS} qubits, got {n}")));
    }
    let frame = CycleFrame::new(&h.code, conv);
    let ops: Vec<PauliString> = h.terms.iter().map(|l| frame.operator(l)).collect::<Result<_>>()?;
    oracle_from_paulis(n, &ops)
}

/// Oracle spectrum of -sum P for pairwise commuting Hermitian Paulis.
pub fn oracle_from_paulis(n: usize, ops: &[PauliString]) -> Result<SpectrumReport> {
    for (i, p) in ops.iter().enumerate() {
        if p.sign().is_none() {
            return Err(Error::BadPauli(p.to_string()));
        }
        if let Some(j) = ops[..i].iter().position(|q| !q.commutes_with(p)) {
            return Err(Error::NonCommuting(j, i));
        }
    }
    // reduced rows: pivot, operator, and the independent members it multiplies
    let mut independent: Vec<PauliString> = Vec::new();
    let mut rows: Vec<(usize, PauliString, Vec<bool>)> = Vec::new();
    let mut combos: Vec<Vec<bool>> = Vec::new();
    for p in ops {
        let mut cur = p.clone();
        let mut combo: Vec<bool> = vec![false; independent.len()];
        for (piv, row, c) in &rows {
            if cur.symplectic().get(*piv) {
                cur = cur.mul(row);
                for (x, &y) in combo.iter_mut().zip(c) {
                    *x ^= y;
                }
            }
        }
        match cur.symplectic().first_one() {
            None => combos.push(combo),
            Some(piv) => {
                let idx = independent.len();
                independent.push(p.clone());
                for (_, _, c) in rows.iter_mut() {
                    c.push(false);
                }
                let mut c = combo;
                c.push(true);
                rows.push((piv, cur, c.clone()));
                for c2 in combos.iter_mut() {
                    c2.push(false);
                }
                let mut own = vec![false; idx + 1];
                own[idx] = true;
                combos.push(own);
            }
        }
    }
    let r = independent.len();
    if r > 20 {
        return Err(Error::TooLarge(format!("{r} independent terms")));
    }
    // sign of each term relative to the ordered product of its subset
    let mut signed: Vec<(u32, bool)> = Vec::new();
    for (p, combo) in ops.iter().zip(&combos) {
        let mut prod = PauliString::identity(n);
        let mut mask = 0u32;
        for (j, _) in combo.iter().enumerate().filter(|(_, &b)| b) {
            prod = prod.mul(&independent[j]);
            mask |= 1 << j;
        }
        debug_assert_eq!(prod.symplectic(), p.symplectic());
        let negative = match (p.sign(), prod.sign()) {
            (Some(a), Some(b)) => a != b,
            _ => return Err(Error::MinusIdentity),
        };
        signed.push((mask, negative));
    }
    let mut levels = BTreeMap::new();
    for sigma in 0u32..(1 << r) {
        let e: i64 = signed
            .iter()
            .map(|&(mask, neg)| if ((sigma & mask).count_ones() % 2 == 1) ^ neg { 1 } else { -1 })
            .sum();
        *levels.entry(e).or_insert(0u64) += 1u64 << (n - r);
    }
    Ok(SpectrumReport::from_levels(n, ops.len(), levels, SpectrumMethod::Oracle))
}
