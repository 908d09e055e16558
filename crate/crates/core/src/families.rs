//! Named code constructions with their published parameters.

use serde::Serialize;

use crate::cayley::{code_from_group, CayleyGraph, GroupSpec, Presentation, SparsityBounds};
use crate::codespace::{code_from_cycles, GraphicalCode};
use crate::error::{Error, Result};
use crate::graph::{EdgeVector, HalfEdge, QuantizedGraph};
use crate::pauli::{stabilizers, Letter, PairingConvention, PauliString, StabilizerGroup};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Expected {
    pub n: usize,
    pub k: usize,
    /// `None` where no value is published for this size.
    pub d: Option<usize>,
}

#[derive(Clone, Debug)]
pub struct FamilyInstance {
    pub name: String,
    pub param: Option<usize>,
    pub code: GraphicalCode,
    /// Letter assignment under which the cycle operators take the
    /// published form.
    pub convention: PairingConvention,
    pub expected: Expected,
    pub bounds: SparsityBounds,
    pub cayley: Option<(CayleyGraph, Presentation)>,
    pub note: &'static str,
}

pub const FAMILY_NAMES: [&str; 8] = ["shor-repetition", "shor-913", "five-one-three", "k5", "toric", "wen", "mobius", "klein"];

/// Looks a family up by name; `n` is required by the parametrised ones.
pub fn by_name(name: &str, n: Option<usize>) -> Result<FamilyInstance> {
    let need = || n.ok_or_else(|| Error::Parse(format!("family {name} needs --n")));
    match name {
        "shor-repetition" => shor_repetition(),
        "shor-913" => shor_913(),
        "five-one-three" => five_one_three(),
        "k5" => k5_direct(),
        "toric" => toric(need()?),
        "wen" => wen(need()?),
        "mobius" => mobius(need()?),
        "klein" => klein(need()?),
        other => Err(Error::Parse(format!("unknown family {other:?}; expected one of {}", FAMILY_NAMES.join(", ")))),
    }
}

fn from_group(
    name: &str,
    param: Option<usize>,
    spec: GroupSpec,
    relators: &[&str],
    convention: PairingConvention,
    expected: Expected,
    note: &'static str,
) -> Result<FamilyInstance> {
    let p = Presentation::new(relators)?;
    let (cg, code) = code_from_group(&spec, &p)?;
    Ok(FamilyInstance {
        name: name.into(),
        param,
        code,
        convention,
        expected,
        bounds: p.bounds(),
        cayley: Some((cg, p)),
        note,
    })
}

fn from_faces(
    name: &str,
    param: Option<usize>,
    graph: QuantizedGraph,
    faces: Vec<EdgeVector>,
    convention: PairingConvention,
    expected: Expected,
    note: &'static str,
) -> Result<FamilyInstance> {
    let r = faces.iter().map(EdgeVector::weight).max().unwrap_or(0);
    let code = code_from_cycles(&graph, &faces)?;
    Ok(FamilyInstance {
        name: name.into(),
        param,
        code,
        convention,
        expected,
        bounds: SparsityBounds { max_relator_length: r, relator_count: 2 },
        cayley: None,
        note,
    })
}

/// Z on the doubled-edge pairing; this turns the 2-cycles into ZZ checks.
fn z_on_doubled_edges() -> PairingConvention {
    PairingConvention { letters: [Letter::X, Letter::Z, Letter::Y] }
}

/// Three qubits on the doubled triangle, with the 2-cycles as checks.
pub fn shor_repetition() -> Result<FamilyInstance> {
    from_group(
        "shor-repetition",
        None,
        GroupSpec::cyclic(3, 1, 1),
        &["aB", "a^6"],
        z_on_doubled_edges(),
        Expected { n: 3, k: 1, d: Some(1) },
        "covering group Z6; the 2-cycles are contractible, the triangle is not",
    )
}

/// Qubit label (1-based) of the Shor grid position: column x, row y.
fn shor_label(x: usize, y: usize) -> usize {
    3 * x + y + 1
}

/// Nine qubits in three columns. Each column is a chain of two doubled
/// edges; the bottom row closes into an outer triangle and the top row
/// into an inner one. Slots: 0 lower-left, 1 upper-left, 2 upper-right,
/// 3 lower-right.
pub fn shor_913() -> Result<FamilyInstance> {
    let v = |x: usize, y: usize| shor_label(x % 3, y) - 1;
    let mut edges = Vec::new();
    let lens = |edges: &mut Vec<[HalfEdge; 2]>, x: usize, y: usize| {
        edges.push([HalfEdge::new(v(x, y), 1), HalfEdge::new(v(x, y + 1), 0)]);
        edges.push([HalfEdge::new(v(x, y), 2), HalfEdge::new(v(x, y + 1), 3)]);
    };
    for x in 0..3 {
        lens(&mut edges, x, 0);
        lens(&mut edges, x, 1);
    }
    for x in 0..3 {
        edges.push([HalfEdge::new(v(x, 0), 3), HalfEdge::new(v(x + 1, 0), 0)]);
    }
    for x in 0..3 {
        edges.push([HalfEdge::new(v(x, 2), 2), HalfEdge::new(v(x + 1, 2), 1)]);
    }
    let g = QuantizedGraph::new(9, edges)?;
    let mut faces: Vec<EdgeVector> = (0..6).map(|i| g.edge_set([2 * i, 2 * i + 1])).collect();
    // the regions between columns 0|1 and 1|2
    for x in 0..2 {
        let right = |y: usize| g.edge_at(v(x, y), 2);
        let left = |y: usize| g.edge_at(v(x + 1, y), 1);
        faces.push(g.edge_set([right(0), right(1), left(0), left(1), g.edge_at(v(x, 0), 3), g.edge_at(v(x, 2), 2)]));
    }
    from_faces(
        "shor-913",
        None,
        g,
        faces,
        PairingConvention::default(),
        Expected { n: 9, k: 1, d: Some(3) },
        "lens 2-cycles give XX checks, the two regions between columns give the six-qubit Z checks",
    )
}

/// The published stabilizers of the nine-qubit code (1-based labels).
pub fn shor_913_generators() -> Vec<PauliString> {
    use Letter::*;
    let mut out = Vec::new();
    for x in 0..3 {
        for y in 0..2 {
            out.push(PauliString::sparse(9, &[(shor_label(x, y) - 1, X), (shor_label(x, y + 1) - 1, X)]));
        }
    }
    for x in 0..2 {
        let q: Vec<(usize, Letter)> = (0..6).map(|i| (3 * x + i, Z)).collect();
        out.push(PauliString::sparse(9, &q));
    }
    out
}

/// The five-qubit code on K5 as a Cayley graph of Z5 (a = 1, b = 3),
/// contractible cycles taken from the double cover Z10.
pub fn five_one_three() -> Result<FamilyInstance> {
    from_group(
        "five-one-three",
        None,
        GroupSpec::cyclic(5, 1, 3),
        &["aaaB", "a^10"],
        PairingConvention { letters: [Letter::X, Letter::Y, Letter::Z] },
        Expected { n: 5, k: 1, d: Some(3) },
        "cycles of even length; qubit label i sits on element i mod 5",
    )
}

/// Paper labels 1..5 of the Cayley vertices 0..4.
pub fn five_qubit_label(vertex: usize) -> usize {
    if vertex == 0 {
        5
    } else {
        vertex
    }
}

/// The published generators X2Z3Z4X5 and its rotations, on Cayley
/// vertices (label i on vertex i mod 5).
pub fn five_qubit_generators() -> Vec<PauliString> {
    five_qubit_generators_on(|lab| lab % 5)
}

fn five_qubit_generators_on(place: impl Fn(usize) -> usize) -> Vec<PauliString> {
    use Letter::*;
    (0..4)
        .map(|r| {
            let lab = |i: usize| (i - 1 + r) % 5 + 1;
            PauliString::sparse(5, &[(place(lab(2)), X), (place(lab(3)), Z), (place(lab(4)), Z), (place(lab(5)), X)])
        })
        .collect()
}

/// K5 with vertex i-1 for label i and edges in the order
/// e12, e23, e34, e45, e51, e13, e24, e35, e41, e52. Slots follow the
/// Cayley layout. Generators are the cycles 2-4-3-5-2 and its rotations.
pub fn k5_direct() -> Result<FamilyInstance> {
    let v = |lab: usize| lab - 1;
    // (from, to) for a-edges (slot 0 -> slot 1) and b-edges (slot 2 -> slot 3)
    let a_edges = [(1, 2), (2, 3), (3, 4), (4, 5), (5, 1)];
    let b_edges = [(3, 1), (4, 2), (5, 3), (1, 4), (2, 5)];
    let mut edges = Vec::new();
    for (s, t) in a_edges {
        edges.push([HalfEdge::new(v(s), 0), HalfEdge::new(v(t), 1)]);
    }
    for (s, t) in b_edges {
        edges.push([HalfEdge::new(v(s), 2), HalfEdge::new(v(t), 3)]);
    }
    let g = QuantizedGraph::new(5, edges)?;
    let names = ["12", "23", "34", "45", "51", "13", "24", "35", "41", "52"];
    let edge = |a: usize, b: usize| {
        let (x, y) = (format!("{a}{b}"), format!("{b}{a}"));
        names.iter().position(|&nm| nm == x || nm == y).expect("K5 has every edge")
    };
    let cycles = (0..4)
        .map(|r| {
            let lab = |i: usize| (i - 1 + r) % 5 + 1;
            g.edge_set([edge(lab(2), lab(4)), edge(lab(4), lab(3)), edge(lab(3), lab(5)), edge(lab(5), lab(2))])
        })
        .collect();
    from_faces(
        "k5",
        None,
        g,
        cycles,
        PairingConvention { letters: [Letter::X, Letter::Y, Letter::Z] },
        Expected { n: 5, k: 1, d: Some(3) },
        "direct drawing of K5; vertex i-1 carries label i",
    )
}

/// The generators on the direct K5 graph (label i on vertex i-1).
pub fn k5_direct_generators() -> Vec<PauliString> {
    five_qubit_generators_on(|lab| lab - 1)
}

/// Toric code: the checkerboard subgroup of Z_{2n}^2 with a = (1,1),
/// b = (-1,1) and the commutator relator. 2n^2 qubits.
pub fn toric(n: usize) -> Result<FamilyInstance> {
    if n < 2 {
        return Err(Error::BadGroup("toric needs n >= 2".into()));
    }
    from_group(
        "toric",
        Some(n),
        GroupSpec::parity(&[2 * n, 2 * n], &[1, 1], &[-1, 1]),
        &["abAB"],
        PairingConvention { letters: [Letter::Y, Letter::Z, Letter::X] },
        Expected { n: 2 * n * n, k: 2, d: Some(n) },
        "qubit count 2n^2 (edges of the n x n periodic lattice)",
    )
}

/// Conjugates by a Hadamard on every qubit of odd x coordinate.
///
/// The Cayley drawing of the toric code places Z on the north/south
/// corners of each face and X on the east/west ones, so the raw group is
/// plaquette-type. Under this local Clifford it becomes the vertex/face
/// CSS form. Qubit q of `toric(n)` sits at x = q / n.
pub fn toric_css_form(n: usize) -> Result<StabilizerGroup> {
    let f = toric(n)?;
    let s = stabilizers(&f.code, &f.convention)?;
    let gens = s
        .generators()
        .iter()
        .map(|g| {
            let mut h = g.clone();
            for q in (0..f.code.n).filter(|q| (q / n) % 2 == 1) {
                let swapped = match h.letter(q) {
                    Letter::X => Letter::Z,
                    Letter::Z => Letter::X,
                    other => other,
                };
                h.set_letter(q, swapped);
            }
            h
        })
        .collect();
    StabilizerGroup::new(f.code.n, gens)
}

/// Wen's plaquette model: Z_n^2 with a = (1,0), b = (0,1).
pub fn wen(n: usize) -> Result<FamilyInstance> {
    if n < 2 {
        return Err(Error::BadGroup("wen needs n >= 2".into()));
    }
    from_group(
        "wen",
        Some(n),
        GroupSpec::product_of_cyclic(&[n, n], &[1, 0], &[0, 1]),
        &["abAB"],
        PairingConvention::default(),
        Expected { n: n * n, k: 2, d: Some(n) },
        "published k = 2 holds for even n only; odd n computes to k = 1, d = n",
    )
}

/// Index of the Möbius vertex (x, y), listed row by row from the bottom.
fn mobius_index(n: usize, x: usize, y: usize) -> usize {
    (1..y).map(|r| 2 * n - r).sum::<usize>() + x - 1
}

/// Staircase domain x, y >= 1, x + y <= 2n, threaded by 2n strands, each
/// closing up across the glued boundary. Qubit labels run row by row
/// from the bottom. Regions of even i+j are Z checks, odd ones X checks.
pub fn mobius(n: usize) -> Result<FamilyInstance> {
    if n < 2 {
        return Err(Error::BadGroup("mobius needs n >= 2".into()));
    }
    let m = 2 * n;
    let is_vertex = |x: usize, y: usize| x >= 1 && y >= 1 && x + y <= m;
    let idx = |x: usize, y: usize| mobius_index(n, x, y);
    let count = n * (m - 1);
    #[derive(Clone, Copy, PartialEq)]
    enum Dir {
        Down,
        Right,
        Up,
        Left,
    }
    // slot order chosen so the default convention gives the region letters
    let slot = |x: usize, y: usize, d: Dir| -> usize {
        if (x + y) % 2 == 1 {
            match d {
                Dir::Down => 0,
                Dir::Right => 1,
                Dir::Up => 2,
                Dir::Left => 3,
            }
        } else {
            match d {
                Dir::Right => 0,
                Dir::Up => 1,
                Dir::Left => 2,
                Dir::Down => 3,
            }
        }
    };
    // strand k: up column k, then left along row m+1-k, then back to the start
    let mut edges = Vec::new();
    for k in 1..=m {
        let mut seq: Vec<((usize, usize), bool)> = Vec::new(); // (vertex, on its vertical strand)
        for y in 1..=m - k {
            seq.push(((k, y), true));
        }
        for x in (1..k).rev() {
            seq.push(((x, m + 1 - k), false));
        }
        for i in 0..seq.len() {
            let ((x0, y0), v0) = seq[i];
            let ((x1, y1), v1) = seq[(i + 1) % seq.len()];
            let out = if v0 { Dir::Up } else { Dir::Left };
            let inn = if v1 { Dir::Down } else { Dir::Right };
            edges.push([
                HalfEdge::new(idx(x0, y0), slot(x0, y0, out)),
                HalfEdge::new(idx(x1, y1), slot(x1, y1, inn)),
            ]);
        }
    }
    let g = QuantizedGraph::new(count, edges)?;
    let at = |x: usize, y: usize, d: Dir| g.edge_at(idx(x, y), slot(x, y, d));
    let mut faces = Vec::new();
    for s in 0..m {
        for i in 1..m {
            let j = s as isize - i as isize;
            if j < 0 || i + j as usize > m - 1 {
                continue;
            }
            let j = j as usize;
            let mut set = Vec::new();
            let mut corner = |x: usize, y: usize, a: Dir, b: Dir| {
                if is_vertex(x, y) {
                    set.push(at(x, y, a));
                    set.push(at(x, y, b));
                }
            };
            corner(i, j, Dir::Right, Dir::Up);
            corner(i + 1, j, Dir::Left, Dir::Up);
            corner(i + 1, j + 1, Dir::Left, Dir::Down);
            corner(i, j + 1, Dir::Right, Dir::Down);
            if j == 0 {
                corner(1, m - i, Dir::Left, Dir::Up);
                corner(1, m + 1 - i, Dir::Left, Dir::Down);
            }
            set.sort_unstable();
            set.dedup();
            faces.push(g.edge_set(set));
        }
    }
    from_faces(
        "mobius",
        Some(n),
        g,
        faces,
        PairingConvention::default(),
        Expected { n: n * (m - 1), k: 1, d: Some(n) },
        "regions listed by i+j then i",
    )
}

/// Regions of mobius(2) in the published order a..f, as (i, j) squares.
pub const MOBIUS2_REGION_ORDER: [(usize, usize); 6] = [(2, 0), (1, 2), (3, 0), (1, 1), (1, 0), (2, 1)];

/// The six operators listed for mobius(2), with the fourth corrected to
/// Z1Z2Z4Z5 (the printed Z1Z2Z4Z6 anticommutes with X1X2X6).
pub fn mobius2_generators() -> Vec<PauliString> {
    ["XXIIIX", "IZZZIZ", "XIXXII", "ZZIZZI", "IXXIXI", "IIIXXX"]
        .iter()
        .map(|s| s.parse().expect("valid"))
        .collect()
}

/// The fourth operator exactly as printed.
pub fn mobius2_printed_d() -> PauliString {
    "ZZIZIZ".parse().expect("valid")
}

/// Diagonal lattice on the points of Z_{2n}^2 with even coordinate sum,
/// periodic in y and glued with a flip in x: (2n, y) is (0, -y). Faces are
/// the diamonds around odd points.
pub fn klein(n: usize) -> Result<FamilyInstance> {
    if n < 2 {
        return Err(Error::BadGroup("klein needs n >= 2".into()));
    }
    let m = 2 * n;
    let md = |v: isize| v.rem_euclid(m as isize) as usize;
    let idx = |x: usize, y: usize| (x * m + y) / 2;
    #[derive(Clone, Copy)]
    enum Dir {
        NE,
        SE,
        SW,
        NW,
    }
    let slot = |x: usize, d: Dir| -> usize {
        let odd = x % 2 == 1;
        match (odd, d) {
            (true, Dir::NE) => 0,
            (true, Dir::SE) => 1,
            (true, Dir::SW) => 2,
            (true, Dir::NW) => 3,
            (false, Dir::SE) => 0,
            (false, Dir::SW) => 1,
            (false, Dir::NW) => 2,
            (false, Dir::NE) => 3,
        }
    };
    // target of the NE / SE step from (x, y), and the slot it arrives in
    let step = |x: usize, y: usize, up: bool| -> ((usize, usize), Dir) {
        let dy: isize = if up { 1 } else { -1 };
        if x + 1 < m {
            ((x + 1, md(y as isize + dy)), if up { Dir::SW } else { Dir::NW })
        } else {
            ((0, md(-(y as isize + dy))), if up { Dir::NW } else { Dir::SW })
        }
    };
    let mut edges = Vec::new();
    let mut out_edge = vec![[0usize; 2]; m * m / 2];
    for x in 0..m {
        for y in (0..m).filter(|y| (x + y) % 2 == 0) {
            for (k, up) in [(0, true), (1, false)] {
                let ((tx, ty), arrive) = step(x, y, up);
                out_edge[idx(x, y)][k] = edges.len();
                edges.push([
                    HalfEdge::new(idx(x, y), slot(x, if up { Dir::NE } else { Dir::SE })),
                    HalfEdge::new(idx(tx, ty), slot(tx, arrive)),
                ]);
            }
        }
    }
    let g = QuantizedGraph::new(m * m / 2, edges)?;
    let ne = |x: usize, y: usize| out_edge[idx(x, y)][0];
    let se = |x: usize, y: usize| out_edge[idx(x, y)][1];
    let mut faces = Vec::new();
    for x in 0..m {
        for y in (0..m).filter(|y| (x + y) % 2 == 1) {
            let (b, t) = (md(y as isize - 1), md(y as isize + 1));
            let left = if x > 0 {
                [ne(x - 1, y), se(x - 1, y)]
            } else {
                // across the seam the left corner is (2n-1, -y), flipped
                let ly = md(-(y as isize));
                [se(m - 1, ly), ne(m - 1, ly)]
            };
            faces.push(g.edge_set([left[0], left[1], ne(x, b), se(x, t)]));
        }
    }
    from_faces(
        "klein",
        Some(n),
        g,
        faces,
        PairingConvention::default(),
        Expected { n: 2 * n * n, k: 2, d: Some(n) },
        "x-boundary glued with a flip; diamond faces only",
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::metrics::distance;
    use crate::pauli::{css_check, oracle_distance};

    fn params(f: &FamilyInstance) -> (usize, usize, Option<usize>) {
        (f.code.n, f.code.k, distance(&f.code, 8).unwrap().d)
    }

    #[test]
    fn small_families_match_expectations() {
        for f in [shor_repetition(), shor_913(), five_one_three(), k5_direct(), toric(2), mobius(2), klein(2)] {
            let f = f.unwrap();
            let e = f.expected;
            assert_eq!(params(&f), (e.n, e.k, e.d), "{}", f.name);
            let s = stabilizers(&f.code, &f.convention).unwrap();
            assert_eq!(oracle_distance(&s, 4).ok(), e.d, "{} oracle", f.name);
        }
    }

    #[test]
    fn published_generators() {
        let shor = shor_913().unwrap();
        let s = stabilizers(&shor.code, &shor.convention).unwrap();
        assert!(shor_913_generators().iter().all(|p| s.contains_unsigned(p)));
        assert!(css_check(&s).is_some());
        let logical = PauliString::sparse(9, &[(2, Letter::X), (5, Letter::X), (8, Letter::X)]);
        assert!(!s.contains_unsigned(&logical));
        assert!(s.generators().iter().all(|g| g.commutes_with(&logical)));

        let f = five_one_three().unwrap();
        let s = stabilizers(&f.code, &f.convention).unwrap();
        let t = StabilizerGroup::new(5, five_qubit_generators()).unwrap();
        assert!(s.same_group_mod_signs(&t));

        let m = mobius(2).unwrap();
        let s = stabilizers(&m.code, &m.convention).unwrap();
        let t = StabilizerGroup::new(6, mobius2_generators()).unwrap();
        assert!(s.same_group_mod_signs(&t));
        assert!(!mobius2_printed_d().commutes_with(&mobius2_generators()[0]));
        assert!(css_check(&s).is_some());
    }

    #[test]
    fn toric_is_css_after_sublattice_hadamard() {
        for n in 2..=3 {
            let f = toric(n).unwrap();
            for c in PairingConvention::all() {
                assert!(css_check(&stabilizers(&f.code, &c).unwrap()).is_none());
            }
            let css = css_check(&toric_css_form(n).unwrap()).expect("css");
            assert_eq!((css.x_type.len(), css.z_type.len()), (n * n - 1, n * n - 1));
        }
        let f = toric(3).unwrap();
        assert_eq!(params(&f), (18, 2, Some(3)));
    }

    #[test]
    fn wen_and_lookup() {
        for n in [2, 4] {
            let f = wen(n).unwrap();
            assert_eq!((f.code.n, f.code.k), (f.expected.n, f.expected.k), "wen({n})");
        }
        // odd tori: the plaquette model keeps a single logical qubit
        let f = wen(3).unwrap();
        assert_eq!((f.code.n, f.code.k, distance(&f.code, 8).unwrap().d), (9, 1, Some(3)));
        assert!(by_name("toric", None).is_err());
        assert!(by_name("nope", Some(2)).is_err());
        assert_eq!(by_name("klein", Some(2)).unwrap().code.n, 8);
    }
}
