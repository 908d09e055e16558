//! Weights, essential lengths, code distance and the optimal-code
//! quantities of a graph.

use serde::Serialize;

use crate::codespace::{code_from_charges, GraphicalCode};
use crate::error::{Error, Result};
use crate::f2::{all_coset_distances, coset_search, min_generator_count, BitVec, QuotientCoords, Subspace};
use crate::graph::{EdgeVector, QuantizedGraph};
use crate::pauli::{min_weight_outside, PairingConvention, PauliString, StabilizerGroup};

/// Largest cycle-space dimension enumerated exhaustively.
pub const MAX_CYCLE_ENUM_DIM: usize = 26;
/// Largest class-space dimension searched exhaustively for k_Γ(D).
pub const MAX_EXACT_CLASS_DIM: usize = 20;

/// Least number of adjacent-edge pairs summing to `c`.
pub fn weight_w(g: &QuantizedGraph, c: &EdgeVector, budget: usize) -> Result<usize> {
    if !g.is_even(c) {
        return Err(Error::NotEven);
    }
    min_generator_count(c, &g.pair_generators(), &Subspace::zero(g.edge_count()), budget)
}

/// Least weight over the class of `c` modulo cuts.
pub fn bipartite_weight(g: &QuantizedGraph, c: &EdgeVector, budget: usize) -> Result<usize> {
    if !g.is_even(c) {
        return Err(Error::NotEven);
    }
    min_generator_count(c, &g.pair_generators(), &g.cut_space(), budget)
}

/// Gray-code walk over all combinations of `basis`, reporting the current
/// cycle, its coefficient mask and its essential length.
fn walk_cycles(g: &QuantizedGraph, basis: &[BitVec], mut f: impl FnMut(&BitVec, u64, usize)) {
    let dim = basis.len();
    assert!(dim <= MAX_CYCLE_ENUM_DIM);
    let lists: Vec<Vec<usize>> = basis.iter().map(|b| b.iter_ones().collect()).collect();
    let mut cur = g.empty_edge_set();
    let mut deg = vec![0u8; g.n()];
    let mut ess = 0usize;
    let mut mask = 0u64;
    f(&cur, 0, 0);
    for step in 1u64..1 << dim {
        let i = step.trailing_zeros() as usize;
        mask ^= 1 << i;
        for &e in &lists[i] {
            let adding = !cur.get(e);
            cur.flip(e);
            for h in g.edges()[e] {
                let d = &mut deg[h.vertex];
                if *d == 2 {
                    ess -= 1;
                }
                *d = if adding { *d + 1 } else { *d - 1 };
                if *d == 2 {
                    ess += 1;
                }
            }
        }
        f(&cur, mask, ess);
    }
}

fn check_closure(g: &QuantizedGraph, cycle_group: &Subspace) -> Result<()> {
    if cycle_group.ambient_dim() != g.edge_count() {
        return Err(Error::AmbientMismatch(cycle_group.ambient_dim(), g.edge_count()));
    }
    if !cycle_group.contains(&g.full_edge_set()) || !cycle_group.is_subspace_of(&g.cycle_space()) {
        return Err(Error::NotACycle);
    }
    Ok(())
}

/// ℓ of a closed cycle group: `value` is `None` when every cycle lies in
/// the group.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EllResult {
    pub value: Option<usize>,
    pub witness: Option<EdgeVector>,
    pub exact: bool,
}

/// Least essential length of a cycle outside `cycle_group`.
///
/// Up to cycle-space dimension 26 this enumerates every cycle. Beyond it the
/// search runs over cycle operators in order of Pauli weight, up to
/// `budget`.
pub fn ell_of_set(g: &QuantizedGraph, cycle_group: &Subspace, budget: usize) -> Result<EllResult> {
    check_closure(g, cycle_group)?;
    let cyc = g.cycle_space();
    let mut acc = cycle_group.clone();
    let mut basis: Vec<BitVec> = cyc.basis().iter().filter(|b| acc.insert((*b).clone())).cloned().collect();
    let m = basis.len();
    if m == 0 {
        return Ok(EllResult { value: None, witness: None, exact: true });
    }
    if cyc.dim() > MAX_CYCLE_ENUM_DIM {
        return ell_by_pauli_search(g, cycle_group, budget);
    }
    basis.extend(cycle_group.basis().iter().cloned());
    let outside = (1u64 << m) - 1;
    let mut best: Option<(usize, BitVec)> = None;
    walk_cycles(g, &basis, |l, mask, ess| {
        if mask & outside == 0 {
            return;
        }
        let better = match &best {
            None => true,
            Some((b, w)) => ess < *b || ess == *b && l < w,
        };
        if better {
            best = Some((ess, l.clone()));
        }
    });
    let (v, w) = best.expect("a cycle outside the group exists");
    Ok(EllResult { value: Some(v), witness: Some(w), exact: true })
}

fn ell_by_pauli_search(g: &QuantizedGraph, cycle_group: &Subspace, budget: usize) -> Result<EllResult> {
    let conv = PairingConvention::default();
    let image = |l: &BitVec| {
        let mut p = PauliString::identity(g.n());
        for v in 0..g.n() {
            p.set_letter(v, conv.letter_for_mask(g.charged_slots(l, v)));
        }
        p
    };
    let independent = |space: &Subspace| {
        let mut seen = Subspace::zero(2 * g.n());
        space.basis().iter().map(image).filter(|p| seen.insert(p.symplectic())).collect::<Vec<_>>()
    };
    let all = StabilizerGroup::new(g.n(), independent(&g.cycle_space()))?;
    let inside = StabilizerGroup::new(g.n(), independent(cycle_group))?;
    let p = min_weight_outside(&all, &inside, budget)?;
    // recover the cycle carrying this operator
    let mut rows: Vec<(BitVec, BitVec)> = Vec::new();
    for b in g.cycle_space().basis() {
        let mut v = image(b).symplectic();
        let mut c = b.clone();
        for (r, rc) in &rows {
            if v.get(r.first_one().expect("nonzero")) {
                v.xor_assign(r);
                c.xor_assign(rc);
            }
        }
        if let Some(piv) = v.first_one() {
            for (r, rc) in rows.iter_mut() {
                if r.get(piv) {
                    r.xor_assign(&v);
                    rc.xor_assign(&c);
                }
            }
            rows.push((v, c));
        }
    }
    let mut t = p.symplectic();
    let mut l = g.empty_edge_set();
    for (r, rc) in &rows {
        if t.get(r.first_one().expect("nonzero")) {
            t.xor_assign(r);
            l.xor_assign(rc);
        }
    }
    let ess = g.essential_length(&l)?;
    Ok(EllResult { value: Some(ess), witness: Some(l), exact: true })
}

/// ℓ(Γ): least essential length of a cycle other than 0 and 1_E.
pub fn essential_girth(g: &QuantizedGraph) -> Result<Option<usize>> {
    let trivial = Subspace::span(g.edge_count(), [g.full_edge_set()])?;
    Ok(ell_of_set(g, &trivial, g.n())?.value)
}

/// Charge classes of all edge subsets modulo cuts, in quotient coordinates.
pub struct ClassSpace {
    pub coords: QuotientCoords,
    pub generators: Vec<BitVec>,
}

impl ClassSpace {
    pub fn new(g: &QuantizedGraph) -> Result<Self> {
        Ok(ClassSpace { coords: QuotientCoords::new(&g.cut_space())?, generators: g.pair_generators() })
    }

    /// Parity checks (in quotient coordinates) cutting out `group`/cuts.
    fn annihilator(&self, group: &Subspace) -> Vec<u128> {
        let dim = self.coords.dim();
        let proj = Subspace::span(dim, group.basis().iter().map(|b| BitVec::from_mask(dim, self.coords.project(b))))
            .expect("uniform lengths");
        proj.orthogonal_complement().basis().iter().map(BitVec::to_mask).collect()
    }

    fn project_group(&self, group: &Subspace) -> Subspace {
        let dim = self.coords.dim();
        Subspace::span(dim, group.basis().iter().map(|b| BitVec::from_mask(dim, self.coords.project(b))))
            .expect("uniform lengths")
    }
}

/// w_b(𝒞): least bipartite weight over nontrivial classes of a group.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WbResult {
    pub value: Option<usize>,
    pub witness: Option<EdgeVector>,
}

pub fn group_bipartite_weight(g: &QuantizedGraph, charge_group: &Subspace, budget: usize) -> Result<WbResult> {
    let space = ClassSpace::new(g)?;
    let checks = space.annihilator(charge_group);
    let hit = coset_search(&space.coords, &space.generators, budget, |s| {
        s != 0 && checks.iter().all(|&h| (s & h).count_ones() % 2 == 0)
    });
    match hit {
        Ok(h) => Ok(WbResult { value: Some(h.depth), witness: Some(space.coords.lift(h.state)) }),
        Err(Error::NotFound) => Ok(WbResult { value: None, witness: None }),
        Err(e) => Err(e),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Graphical,
    Oracle,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DistanceReport {
    /// `None` when k = 0.
    pub d: Option<usize>,
    pub wb_part: Option<usize>,
    pub ell_part: Option<usize>,
    pub charge_witness: Option<EdgeVector>,
    pub cycle_witness: Option<EdgeVector>,
    pub method: Method,
    pub budget: usize,
}

/// d = min(w_b(𝒞), ℓ(𝓛)).
pub fn distance(code: &GraphicalCode, budget: usize) -> Result<DistanceReport> {
    let g = &code.graph;
    let wb = group_bipartite_weight(g, &code.charge_group, budget)?;
    let ell = ell_of_set(g, &code.cycle_group, budget)?;
    let d = match (wb.value, ell.value) {
        (Some(a), Some(b)) => Some(a.min(b)),
        (a, b) => a.or(b),
    };
    Ok(DistanceReport {
        d,
        wb_part: wb.value,
        ell_part: ell.value,
        charge_witness: wb.witness,
        cycle_witness: ell.witness,
        method: Method::Graphical,
        budget,
    })
}

/// Everything needed to evaluate 𝒞_D, 𝓛_D and 𝓘_D for every D at once.
pub struct ThresholdTables {
    graph: QuantizedGraph,
    space: ClassSpace,
    /// Bipartite weight of every class, indexed by quotient coordinates.
    class_weight: Vec<u8>,
    /// `by_length[e]` spans the cycles of essential length exactly e.
    by_length: Vec<Subspace>,
}

impl ThresholdTables {
    pub fn new(g: &QuantizedGraph) -> Result<Self> {
        let cyc = g.cycle_space();
        if cyc.dim() > MAX_CYCLE_ENUM_DIM {
            return Err(Error::TooLarge(format!("cycle space of dimension {}", cyc.dim())));
        }
        let space = ClassSpace::new(g)?;
        let class_weight = all_coset_distances(&space.coords, &space.generators)?;
        let mut by_length = vec![Subspace::zero(g.edge_count()); g.n() + 1];
        walk_cycles(g, cyc.basis(), |l, _, ess| {
            let s = &mut by_length[ess];
            if s.dim() < cyc.dim() {
                s.insert(l.clone());
            }
        });
        Ok(ThresholdTables { graph: g.clone(), space, class_weight, by_length })
    }

    /// span 𝓛_D of the cycles with essential length below D.
    pub fn short_cycles(&self, d: usize) -> Subspace {
        let mut s = Subspace::zero(self.graph.edge_count());
        for t in self.by_length.iter().take(d) {
            s = s.sum(t).expect("same ambient");
        }
        s
    }

    /// Membership in 𝒞_D.
    pub fn in_c(&self, c: &EdgeVector, d: usize) -> bool {
        self.class_weight[self.space.coords.project(c) as usize] as usize >= d
    }

    pub fn class_weight(&self, c: &EdgeVector) -> usize {
        self.class_weight[self.space.coords.project(c) as usize] as usize
    }

    /// 𝓛_D^⊥ ∩ 𝒜 in class coordinates, plus the good classes (w_b ≥ D)
    /// as integers over its basis.
    fn allowed(&self, d: usize) -> (Subspace, Vec<u32>) {
        let g = &self.graph;
        let perp = crate::codespace::perp_charges(g, &self.short_cycles(d));
        let a = self.space.project_group(&perp);
        let rows: Vec<u128> = a.basis().iter().map(BitVec::to_mask).collect();
        assert!(rows.len() < 32);
        let mut good = Vec::new();
        let mut cur = 0u128;
        for step in 1u32..1 << rows.len() {
            cur ^= rows[step.trailing_zeros() as usize];
            let gray = step ^ (step >> 1);
            if self.class_weight[cur as usize] as usize >= d {
                good.push(gray);
            }
        }
        good.sort_unstable();
        (a, good)
    }

    /// Representatives of the classes in 𝓘_D (nonzero classes only).
    pub fn isolated_classes(&self, d: usize) -> Vec<EdgeVector> {
        let (a, good) = self.allowed(d);
        good.iter().map(|&x| self.lift_combo(&a, x)).collect()
    }

    fn lift_combo(&self, a: &Subspace, x: u32) -> EdgeVector {
        let mut m = 0u128;
        for (i, r) in a.basis().iter().enumerate() {
            if x >> i & 1 == 1 {
                m ^= r.to_mask();
            }
        }
        self.space.coords.lift(m)
    }

    /// k_Γ(D) with a witness charge group (cuts included).
    pub fn optimal(&self, d: usize) -> OptimalAtD {
        let (a, good) = self.allowed(d);
        let exact = a.dim() <= MAX_EXACT_CLASS_DIM;
        let basis = if exact { best_subspace(&good) } else { greedy_subspace(&good) };
        let cut = self.graph.cut_space();
        let mut group = cut.clone();
        for &x in &basis {
            group.insert(self.lift_combo(&a, x));
        }
        OptimalAtD { d, k: basis.len(), exact, witness: group }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct OptimalAtD {
    pub d: usize,
    pub k: usize,
    /// False when the search fell back to a greedy lower bound.
    pub exact: bool,
    #[serde(serialize_with = "ser_basis")]
    pub witness: Subspace,
}

fn ser_basis<S: serde::Serializer>(s: &Subspace, ser: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = ser.serialize_seq(Some(s.dim()))?;
    for b in s.basis() {
        seq.serialize_element(b)?;
    }
    seq.end()
}

/// Largest subspace all of whose nonzero elements are in `good` (sorted).
/// Returns a basis.
fn best_subspace(good: &[u32]) -> Vec<u32> {
    // Each subspace is visited once, through its echelon basis: a new
    // vector's top bit becomes a pivot and later vectors must avoid every
    // pivot, so each one is the smallest element of its coset.
    fn dfs(cands: &[u32], chosen: &mut Vec<u32>, best: &mut Vec<u32>) {
        if chosen.len() > best.len() {
            *best = chosen.clone();
        }
        for (i, &v) in cands.iter().enumerate() {
            let top = 1u32 << (31 - v.leading_zeros());
            let rest: Vec<u32> = cands[i + 1..]
                .iter()
                .copied()
                .filter(|&u| u & top == 0 && cands.binary_search(&(u ^ v)).is_ok())
                .collect();
            // the rest holds one element per nonzero coset it could add, and
            // every added dimension brings a new top bit
            let by_size = (usize::BITS - 1 - (rest.len() + 1).leading_zeros()) as usize;
            let tops = rest.iter().fold(0u32, |m, &u| m | 1 << (31 - u.leading_zeros())).count_ones() as usize;
            let extra = by_size.min(tops);
            if chosen.len() + 1 + extra <= best.len() {
                continue;
            }
            chosen.push(v);
            dfs(&rest, chosen, best);
            chosen.pop();
        }
    }
    let mut best = Vec::new();
    dfs(good, &mut Vec::new(), &mut best);
    best
}

/// Greedy version of `best_subspace`: always takes the smallest candidate.
fn greedy_subspace(good: &[u32]) -> Vec<u32> {
    let mut cands = good.to_vec();
    let mut chosen = Vec::new();
    while let Some(&v) = cands.first() {
        chosen.push(v);
        cands = cands[1..].iter().copied().filter(|&u| cands.binary_search(&(u ^ v)).is_ok()).collect();
    }
    chosen
}

/// d(Γ): largest D with nonempty 𝓘_D (0 if none).
pub fn graph_code_distance(g: &QuantizedGraph) -> Result<usize> {
    let t = ThresholdTables::new(g)?;
    Ok(graph_code_distance_from(&t, g.n()))
}

fn graph_code_distance_from(t: &ThresholdTables, n: usize) -> usize {
    (1..=n).rev().find(|&d| !t.allowed(d).1.is_empty()).unwrap_or(0)
}

pub fn optimal_function(g: &QuantizedGraph, d: usize) -> Result<OptimalAtD> {
    Ok(ThresholdTables::new(g)?.optimal(d))
}

#[derive(Clone, Debug, Serialize)]
pub struct OptimalProfile {
    pub n: usize,
    pub code_distance: usize,
    /// k_Γ(D) for D = 1..=code_distance.
    pub values: Vec<usize>,
    /// The largest D for each distinct k, in increasing D.
    pub breakpoints: Vec<OptimalAtD>,
}

pub fn optimal_profile(g: &QuantizedGraph) -> Result<OptimalProfile> {
    let t = ThresholdTables::new(g)?;
    let dmax = graph_code_distance_from(&t, g.n());
    let all: Vec<OptimalAtD> = (1..=dmax).map(|d| t.optimal(d)).collect();
    let values = all.iter().map(|o| o.k).collect();
    let mut breakpoints: Vec<OptimalAtD> = Vec::new();
    for (i, o) in all.iter().enumerate() {
        if all.get(i + 1).map_or(true, |nx| nx.k != o.k) {
            breakpoints.push(o.clone());
        }
    }
    Ok(OptimalProfile { n: g.n(), code_distance: dmax, values, breakpoints })
}

/// Rebuilds the code of an optimal witness.
pub fn witness_code(g: &QuantizedGraph, o: &OptimalAtD) -> Result<GraphicalCode> {
    code_from_charges(g, o.witness.basis())
}

/// Σ_{j<d} C(n,j) 3^j, exactly when it fits.
fn gv_sum(n: usize, d: usize) -> Option<u128> {
    let mut term: u128 = 1;
    let mut sum: u128 = 0;
    for j in 0..d.min(n + 1) {
        sum = sum.checked_add(term)?;
        term = term.checked_mul(3 * (n - j) as u128)? / (j as u128 + 1);
    }
    Some(sum)
}

fn log2_gv_sum(n: usize, d: usize) -> f64 {
    if let Some(s) = gv_sum(n, d) {
        return (s as f64).log2();
    }
    // log-sum-exp over the terms
    let logs: Vec<f64> = (0..d.min(n + 1))
        .map(|j| ln_choose(n, j) + j as f64 * 3f64.ln())
        .collect();
    let m = logs.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    (m + logs.iter().map(|l| (l - m).exp()).sum::<f64>().ln()) / std::f64::consts::LN_2
}

fn ln_choose(n: usize, k: usize) -> f64 {
    (0..k).map(|i| ((n - i) as f64 / (i + 1) as f64).ln()).sum()
}

/// n - log2 Σ_{j<d} C(n,j) 3^j.
pub fn gv_bound(n: usize, d: usize) -> f64 {
    n as f64 - log2_gv_sum(n, d)
}

pub fn gv_bound_improved(n: usize, d: usize, s: usize) -> f64 {
    gv_bound(n, d) - s as f64
}

/// Exact test of k ≥ n - s - log2 Σ: equivalent to 2^(n-s-k) ≤ Σ.
pub fn meets_gv(k: usize, n: usize, d: usize, s: usize) -> bool {
    let need = n as i64 - s as i64 - k as i64;
    if need <= 0 {
        return true;
    }
    match gv_sum(n, d) {
        Some(sum) => need < 128 && (1u128 << need) <= sum,
        None => (need as f64) <= log2_gv_sum(n, d),
    }
}

/// Rounds to six decimals for reporting.
pub fn round6(x: f64) -> f64 {
    (x * 1e6).round() / 1e6
}
