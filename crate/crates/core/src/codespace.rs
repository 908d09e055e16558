//! Codes on a quantized graph, built from a set of cycles or a set of even
//! charge subsets, and the duality between the two descriptions.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::f2::{BitVec, Subspace};
use crate::graph::{EdgeVector, QuantizedGraph};

/// An even edge subset up to addition of cuts, stored by its canonical
/// (lexicographically least) representative.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ChargeClass {
    pub representative: EdgeVector,
}

impl ChargeClass {
    pub fn is_trivial(&self) -> bool {
        self.representative.is_zero()
    }
}

#[derive(Clone, Debug)]
pub struct GraphicalCode {
    pub graph: QuantizedGraph,
    /// Closed cycle group; always contains the full edge set.
    pub cycle_group: Subspace,
    /// Charges orthogonal to every cycle in `cycle_group`; contains all cuts.
    pub charge_group: Subspace,
    pub n: usize,
    pub k: usize,
    /// k class generators of charge_group modulo cuts.
    pub logical_class_reps: Vec<ChargeClass>,
    /// Cycles used as check-matrix rows.
    pub generators: Vec<EdgeVector>,
}

impl GraphicalCode {
    /// Iterates over all 2^k logical classes.
    pub fn logical_classes(&self) -> impl Iterator<Item = ChargeClass> + '_ {
        let cut = self.graph.cut_space();
        let span = Subspace::span(self.graph.edge_count(), self.logical_class_reps.iter().map(|c| c.representative.clone()))
            .expect("uniform lengths");
        let elems: Vec<BitVec> = span.elements().collect();
        elems.into_iter().map(move |e| ChargeClass { representative: cut.reduce(&e) })
    }
}

fn check_cycles(g: &QuantizedGraph, cycles: &[EdgeVector]) -> Result<()> {
    for l in cycles {
        if l.len() != g.edge_count() {
            return Err(Error::MixedLength { expected: g.edge_count(), found: l.len() });
        }
        if !g.is_cycle(l) {
            return Err(Error::NotACycle);
        }
    }
    Ok(())
}

/// Span of the cycles together with the full edge set.
pub fn close_cycles(g: &QuantizedGraph, cycles: &[EdgeVector]) -> Result<Subspace> {
    check_cycles(g, cycles)?;
    Subspace::span(g.edge_count(), cycles.iter().cloned().chain([g.full_edge_set()]))
}

/// Even subsets orthogonal to every cycle of the group.
pub fn perp_charges(g: &QuantizedGraph, cycle_group: &Subspace) -> Subspace {
    cycle_group
        .orthogonal_complement()
        .intersect(&g.even_space())
        .expect("same ambient")
}

/// Cycles orthogonal to every charge of the group.
pub fn perp_cycles(g: &QuantizedGraph, charge_group: &Subspace) -> Subspace {
    charge_group
        .orthogonal_complement()
        .intersect(&g.cycle_space())
        .expect("same ambient")
}

fn finish(g: &QuantizedGraph, cycle_group: Subspace, charge_group: Subspace, generators: Vec<EdgeVector>) -> GraphicalCode {
    let n = g.n();
    let cut = g.cut_space();
    let mut acc = cut.clone();
    let mut reps = Vec::new();
    for b in charge_group.basis() {
        if acc.insert(b.clone()) {
            reps.push(ChargeClass { representative: cut.reduce(b) });
        }
    }
    let k = n + 1 - cycle_group.dim();
    debug_assert_eq!(k, reps.len());
    GraphicalCode { graph: g.clone(), cycle_group, charge_group, n, k, logical_class_reps: reps, generators }
}

/// The code whose stabilizers are the cycle operators of `cycles`.
pub fn code_from_cycles(g: &QuantizedGraph, cycles: &[EdgeVector]) -> Result<GraphicalCode> {
    let closed = close_cycles(g, cycles)?;
    let charges = perp_charges(g, &closed);
    Ok(finish(g, closed, charges, cycles.to_vec()))
}

/// The code whose logical charges are generated by `charges` and the cuts.
pub fn code_from_charges(g: &QuantizedGraph, charges: &[EdgeVector]) -> Result<GraphicalCode> {
    for c in charges {
        if c.len() != g.edge_count() {
            return Err(Error::MixedLength { expected: g.edge_count(), found: c.len() });
        }
        if !g.is_even(c) {
            return Err(Error::NotEven);
        }
    }
    let group = g.cut_space().sum(&Subspace::span(g.edge_count(), charges.iter().cloned())?)?;
    let cycles = perp_cycles(g, &group);
    let generators = cycles.basis().to_vec();
    Ok(finish(g, cycles, group, generators))
}

/// Rows are the recorded generating cycles, columns the edges.
pub fn check_matrix(code: &GraphicalCode) -> Vec<BitVec> {
    code.generators.clone()
}

/// MacKay's alist text: a header line `cols rows`, the maximum column and
/// row weights, each column weight, each row weight, then the 1-based row
/// indices of every column and the 1-based column indices of every row.
/// Lists are not zero-padded.
pub fn to_alist(rows: &[BitVec], cols: usize) -> String {
    let col_sets: Vec<Vec<usize>> =
        (0..cols).map(|c| (0..rows.len()).filter(|&r| rows[r].get(c)).collect()).collect();
    let row_sets: Vec<Vec<usize>> = rows.iter().map(|r| r.iter_ones().collect()).collect();
    let join = |v: &[usize], plus: usize| v.iter().map(|x| (x + plus).to_string()).collect::<Vec<_>>().join(" ");
    let mut out = format!("{} {}\n", cols, rows.len());
    let max_c = col_sets.iter().map(Vec::len).max().unwrap_or(0);
    let max_r = row_sets.iter().map(Vec::len).max().unwrap_or(0);
    out += &format!("{max_c} {max_r}\n");
    out += &join(&col_sets.iter().map(Vec::len).collect::<Vec<_>>(), 0);
    out.push('\n');
    out += &join(&row_sets.iter().map(Vec::len).collect::<Vec<_>>(), 0);
    out.push('\n');
    for c in &col_sets {
        out += &join(c, 1);
        out.push('\n');
    }
    for r in &row_sets {
        out += &join(r, 1);
        out.push('\n');
    }
    out
}

/// Canonical class of an even subset modulo cuts.
pub fn classify(g: &QuantizedGraph, c: &EdgeVector) -> Result<ChargeClass> {
    if !g.is_even(c) {
        return Err(Error::NotEven);
    }
    Ok(ChargeClass { representative: g.cut_space().reduce(c) })
}

#[derive(Serialize)]
pub struct CodeReport {
    pub n: usize,
    pub k: usize,
    pub edge_order: Vec<[[usize; 2]; 2]>,
    pub cycle_basis: Vec<BitVec>,
    pub charge_basis: Vec<BitVec>,
    pub logical_class_reps: Vec<BitVec>,
    pub check_matrix: Vec<BitVec>,
}

pub fn code_report(code: &GraphicalCode) -> CodeReport {
    CodeReport {
        n: code.n,
        k: code.k,
        edge_order: code
            .graph
            .edges()
            .iter()
            .map(|[a, b]| [[a.vertex, a.slot], [b.vertex, b.slot]])
            .collect(),
        cycle_basis: code.cycle_group.basis().to_vec(),
        charge_basis: code.charge_group.basis().to_vec(),
        logical_class_reps: code.logical_class_reps.iter().map(|c| c.representative.clone()).collect(),
        check_matrix: check_matrix(code),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::random_quantized_graph;
    use crate::graph::tests::{doubled_triangle, k5};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn bits(s: &str) -> BitVec {
        BitVec::from_bools(&s.bytes().map(|b| b == b'1').collect::<Vec<_>>())
    }

    /// The four generating cycles of the five-qubit code.
    fn k5_cycles() -> Vec<BitVec> {
        // 1-based labels 2-4-3-5-2, rotated by one label per generator
        let g = k5();
        let find = |a: usize, b: usize| {
            g.edges()
                .iter()
                .position(|[x, y]| (x.vertex, y.vertex) == (a, b) || (x.vertex, y.vertex) == (b, a))
                .unwrap()
        };
        (0..5)
            .take(4)
            .map(|r| {
                let lab = |i: usize| (i + r) % 5;
                g.edge_set([find(lab(2), lab(4)), find(lab(4), lab(3)), find(lab(3), lab(5)), find(lab(5), lab(2))])
            })
            .collect()
    }

    #[test]
    fn five_qubit_code_dimensions() {
        let g = k5();
        let ls = k5_cycles();
        let closed = close_cycles(&g, &ls).unwrap();
        assert_eq!(closed.dim(), 5);
        let charges = perp_charges(&g, &closed);
        assert_eq!(charges.dim(), 5);
        assert_eq!(charges, g.cut_space().sum(&Subspace::span(10, [g.full_edge_set()]).unwrap()).unwrap());
        assert_eq!(perp_cycles(&g, &charges), closed);
        let code = code_from_cycles(&g, &ls).unwrap();
        assert_eq!((code.n, code.k), (5, 1));
        let classes: Vec<_> = code.logical_classes().collect();
        assert_eq!(classes.len(), 2);
        assert!(classes.contains(&classify(&g, &g.empty_edge_set()).unwrap()));
        assert!(classes.contains(&classify(&g, &g.full_edge_set()).unwrap()));
    }

    #[test]
    fn check_matrix_matches_the_printed_system() {
        let g = k5();
        let code = code_from_cycles(&g, &k5_cycles()).unwrap();
        let rows = check_matrix(&code);
        assert!(rows.iter().all(|r| r.weight() == 4));
        let kernel = Subspace::span(10, rows.iter().cloned()).unwrap().orthogonal_complement();
        assert_eq!(kernel.intersect(&g.even_space()).unwrap(), code.charge_group);
    }

    #[test]
    fn trivial_cases() {
        let g = k5();
        assert_eq!(close_cycles(&g, &[]).unwrap().dim(), 1);
        assert_eq!(perp_charges(&g, &close_cycles(&g, &[]).unwrap()), g.even_space());
        assert_eq!(perp_cycles(&g, &g.cut_space()), g.cycle_space());
        assert_eq!(code_from_cycles(&g, &[]).unwrap().k, 5);
        assert!(check_matrix(&code_from_cycles(&g, &[]).unwrap()).is_empty());
        assert_eq!(close_cycles(&g, &[g.edge_set([0])]).unwrap_err(), Error::NotACycle);
        assert_eq!(code_from_charges(&g, &[g.edge_set([0])]).unwrap_err(), Error::NotEven);
    }

    #[test]
    fn classify_examples() {
        let g = k5();
        assert!(classify(&g, &g.star(3)).unwrap().is_trivial());
        let c = g.edge_set([0, 1]);
        assert_eq!(classify(&g, &c).unwrap(), classify(&g, &c.xor(&g.star(4))).unwrap());
        assert_ne!(classify(&g, &g.empty_edge_set()).unwrap(), classify(&g, &g.full_edge_set()).unwrap());
    }

    #[test]
    fn alist_layout() {
        let rows = vec![bits("110"), bits("011")];
        assert_eq!(to_alist(&rows, 3), "3 2\n2 2\n1 2 1\n2 2\n1\n1 2\n2\n1 2\n2 3\n");
        assert_eq!(to_alist(&[], 2), "2 0\n0 0\n0 0\n\n\n\n");
    }

    #[test]
    fn random_codes_satisfy_duality_identities() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..60 {
            let n = rng.gen_range(1..=9);
            let g = random_quantized_graph(n, &mut rng);
            let cyc = g.cycle_space();
            let picks: Vec<BitVec> = (0..rng.gen_range(0..4))
                .map(|_| {
                    cyc.basis().iter().filter(|_| rng.gen_bool(0.5)).fold(g.empty_edge_set(), |a, b| a.xor(b))
                })
                .collect();
            let code = code_from_cycles(&g, &picks).unwrap();
            // both k expressions agree
            assert_eq!(code.k, code.charge_group.dim() + 1 - n);
            assert!(g.cut_space().is_subspace_of(&code.charge_group));
            for a in code.cycle_group.basis() {
                for b in code.charge_group.basis() {
                    assert!(!a.dot(b));
                }
            }
            // Galois round trip is idempotent
            let back = code_from_charges(&g, code.charge_group.basis()).unwrap();
            assert_eq!(back.cycle_group, code.cycle_group);
            assert_eq!(back.k, code.k);
            // nullspace of the check matrix inside even sets
            let rows = check_matrix(&code);
            let null = Subspace::span(g.edge_count(), rows).unwrap().orthogonal_complement();
            assert_eq!(null.intersect(&g.even_space()).unwrap(), code.charge_group);
            // classes of all even sets: 2^n
            assert_eq!(g.even_space().dim() - g.cut_space().dim(), n);
        }
    }

    #[test]
    fn doubled_triangle_closure() {
        let g = doubled_triangle();
        let twos: Vec<BitVec> = (0..3).map(|i| g.edge_set([2 * i, 2 * i + 1])).collect();
        let code = code_from_cycles(&g, &twos).unwrap();
        assert_eq!(code.k, 1);
    }
}
