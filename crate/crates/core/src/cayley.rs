//! Finite groups with two marked generators, their Cayley graphs, relator
//! words and the codes spanned by relation cycles.
//!
//! # Word grammar
//!
//! ```text
//! word  := item*
//! item  := atom ('^' digits)?
//! atom  := 'a' | 'b' | 'A' | 'B' | '(' word ')'
//! ```
//!
//! `A` and `B` are the inverses of `a` and `b`; whitespace is ignored.
//! `(ab)^3` is `ababab`.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::codespace::{code_from_cycles, GraphicalCode};
use crate::error::{Error, Result};
use crate::graph::{EdgeVector, HalfEdge, QuantizedGraph};

/// Shape of a finite group, without marked generators.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum GroupKind {
    Cyclic { n: usize },
    /// Direct product; elements are arrays with one entry per factor.
    Product { factors: Vec<GroupKind> },
    /// Tuples in Z_{m1} x ... x Z_{mk} with even coordinate sum. Every
    /// modulus must be even.
    ParitySubgroup { moduli: Vec<usize> },
    /// Multiplication table on 0..m; `mul[i][j] = i * j`.
    Table { mul: Vec<Vec<usize>> },
}

/// A group with its two marked generators, as read from a spec file such
/// as `{"type":"cyclic","n":5,"a":1,"b":3}`.
///
/// Element values: an integer for cyclic groups and tables (taken modulo
/// n for cyclic), an array of integers for parity subgroups, an array of
/// element values for products.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GroupSpec {
    #[serde(flatten)]
    pub kind: GroupKind,
    pub a: Value,
    pub b: Value,
}

impl GroupSpec {
    pub fn cyclic(n: usize, a: i64, b: i64) -> Self {
        GroupSpec { kind: GroupKind::Cyclic { n }, a: a.into(), b: b.into() }
    }

    pub fn parity(moduli: &[usize], a: &[i64], b: &[i64]) -> Self {
        GroupSpec { kind: GroupKind::ParitySubgroup { moduli: moduli.to_vec() }, a: a.into(), b: b.into() }
    }

    pub fn product_of_cyclic(moduli: &[usize], a: &[i64], b: &[i64]) -> Self {
        GroupSpec {
            kind: GroupKind::Product { factors: moduli.iter().map(|&n| GroupKind::Cyclic { n }).collect() },
            a: a.into(),
            b: b.into(),
        }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }
}

/// An explicit finite group: elements 0..order, a full multiplication
/// table, identity and inverses.
#[derive(Clone, Debug)]
pub struct FiniteGroup {
    labels: Vec<String>,
    mul: Vec<Vec<usize>>,
    identity: usize,
    inverse: Vec<usize>,
}

/// Concrete group elements before indexing.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum Elem {
    Int(usize),
    Tuple(Vec<Elem>),
}

impl Elem {
    fn label(&self) -> String {
        match self {
            Elem::Int(v) => v.to_string(),
            Elem::Tuple(v) => format!("({})", v.iter().map(Elem::label).collect::<Vec<_>>().join(",")),
        }
    }
}

fn bad(msg: impl Into<String>) -> Error {
    Error::BadGroup(msg.into())
}

fn validate_table(mul: &[Vec<usize>]) -> Result<()> {
    let m = mul.len();
    if m == 0 || mul.iter().any(|r| r.len() != m || r.iter().any(|&x| x >= m)) {
        return Err(bad("multiplication table must be square with entries in range"));
    }
    let e = (0..m).find(|&e| (0..m).all(|x| mul[e][x] == x && mul[x][e] == x)).ok_or_else(|| bad("no identity"))?;
    for x in 0..m {
        if !(0..m).any(|y| mul[x][y] == e && mul[y][x] == e) {
            return Err(bad(format!("element {x} has no inverse")));
        }
    }
    for x in 0..m {
        for y in 0..m {
            for z in 0..m {
                if mul[mul[x][y]][z] != mul[x][mul[y][z]] {
                    return Err(bad("table is not associative"));
                }
            }
        }
    }
    Ok(())
}

impl GroupKind {
    /// All elements in a fixed order.
    fn elements(&self) -> Result<Vec<Elem>> {
        Ok(match self {
            GroupKind::Cyclic { n } => {
                if *n == 0 {
                    return Err(bad("cyclic group of order 0"));
                }
                (0..*n).map(Elem::Int).collect()
            }
            GroupKind::Product { factors } => {
                if factors.is_empty() {
                    return Err(bad("empty product"));
                }
                let mut out = vec![Vec::new()];
                for f in factors {
                    let fe = f.elements()?;
                    out = out
                        .into_iter()
                        .flat_map(|p: Vec<Elem>| {
                            fe.iter().map(move |x| {
                                let mut q = p.clone();
                                q.push(x.clone());
                                q
                            })
                        })
                        .collect();
                }
                out.into_iter().map(Elem::Tuple).collect()
            }
            GroupKind::ParitySubgroup { moduli } => {
                if moduli.is_empty() || moduli.iter().any(|&m| m == 0 || m % 2 == 1) {
                    return Err(bad("parity subgroup needs even moduli"));
                }
                let mut out: Vec<Vec<usize>> = vec![Vec::new()];
                for &m in moduli {
                    out = out
                        .into_iter()
                        .flat_map(|p| {
                            (0..m).map(move |x| {
                                let mut q = p.clone();
                                q.push(x);
                                q
                            })
                        })
                        .collect();
                }
                out.into_iter()
                    .filter(|t| t.iter().sum::<usize>() % 2 == 0)
                    .map(|t| Elem::Tuple(t.into_iter().map(Elem::Int).collect()))
                    .collect()
            }
            GroupKind::Table { mul } => {
                validate_table(mul)?;
                (0..mul.len()).map(Elem::Int).collect()
            }
        })
    }

    fn mul(&self, x: &Elem, y: &Elem) -> Elem {
        match (self, x, y) {
            (GroupKind::Cyclic { n }, Elem::Int(a), Elem::Int(b)) => Elem::Int((a + b) % n),
            (GroupKind::Table { mul }, Elem::Int(a), Elem::Int(b)) => Elem::Int(mul[*a][*b]),
            (GroupKind::Product { factors }, Elem::Tuple(a), Elem::Tuple(b)) => {
                Elem::Tuple(factors.iter().zip(a.iter().zip(b)).map(|(f, (p, q))| f.mul(p, q)).collect())
            }
            (GroupKind::ParitySubgroup { moduli }, Elem::Tuple(a), Elem::Tuple(b)) => Elem::Tuple(
                moduli
                    .iter()
                    .zip(a.iter().zip(b))
                    .map(|(m, (p, q))| match (p, q) {
                        (Elem::Int(p), Elem::Int(q)) => Elem::Int((p + q) % m),
                        _ => unreachable!("parity tuples hold integers"),
                    })
                    .collect(),
            ),
            _ => unreachable!("element shape matches its group"),
        }
    }

    fn parse_elem(&self, v: &Value) -> Result<Elem> {
        let int = |v: &Value, m: usize| -> Result<usize> {
            let x = v.as_i64().ok_or_else(|| bad(format!("expected an integer, got {v}")))?;
            Ok(x.rem_euclid(m as i64) as usize)
        };
        match self {
            GroupKind::Cyclic { n } => Ok(Elem::Int(int(v, *n)?)),
            GroupKind::Table { mul } => {
                let x = v.as_u64().ok_or_else(|| bad(format!("expected an element index, got {v}")))? as usize;
                if x >= mul.len() {
                    return Err(bad(format!("element {x} out of range")));
                }
                Ok(Elem::Int(x))
            }
            GroupKind::Product { factors } => {
                let arr = v.as_array().filter(|a| a.len() == factors.len()).ok_or_else(|| bad(format!("expected {} components, got {v}", factors.len())))?;
                Ok(Elem::Tuple(factors.iter().zip(arr).map(|(f, x)| f.parse_elem(x)).collect::<Result<_>>()?))
            }
            GroupKind::ParitySubgroup { moduli } => {
                let arr = v.as_array().filter(|a| a.len() == moduli.len()).ok_or_else(|| bad(format!("expected {} components, got {v}", moduli.len())))?;
                let t: Vec<usize> = moduli.iter().zip(arr).map(|(&m, x)| int(x, m)).collect::<Result<_>>()?;
                if t.iter().sum::<usize>() % 2 == 1 {
                    return Err(bad(format!("{v} has odd coordinate sum")));
                }
                Ok(Elem::Tuple(t.into_iter().map(Elem::Int).collect()))
            }
        }
    }
}

impl FiniteGroup {
    fn build(kind: &GroupKind) -> Result<(Self, Vec<Elem>)> {
        let elems = kind.elements()?;
        let index = |e: &Elem| elems.binary_search(e).expect("closed under multiplication");
        // elements() lists tuples in lexicographic order, so binary search works
        debug_assert!(elems.windows(2).all(|w| w[0] < w[1]));
        let mul: Vec<Vec<usize>> =
            elems.iter().map(|x| elems.iter().map(|y| index(&kind.mul(x, y))).collect()).collect();
        let m = elems.len();
        let identity = (0..m).find(|&e| (0..m).all(|x| mul[e][x] == x)).expect("groups have an identity");
        let inverse = (0..m).map(|x| (0..m).find(|&y| mul[x][y] == identity).expect("inverse")).collect();
        let labels = elems.iter().map(Elem::label).collect();
        Ok((FiniteGroup { labels, mul, identity, inverse }, elems))
    }

    pub fn order(&self) -> usize {
        self.mul.len()
    }

    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.mul[x][y]
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn inverse(&self, x: usize) -> usize {
        self.inverse[x]
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }
}

/// One letter of a word: a generator or its inverse.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Gen {
    A,
    AInv,
    B,
    BInv,
}

/// Parses a word in the grammar above into letters.
pub fn parse_word(text: &str) -> Result<Vec<Gen>> {
    let chars: Vec<char> = text.chars().filter(|c| !c.is_whitespace()).collect();
    let err = |m: &str| Error::BadWord(text.to_string(), m.to_string());
    fn word(c: &[char], i: &mut usize, depth: usize, err: &dyn Fn(&str) -> Error) -> Result<Vec<Gen>> {
        let mut out = Vec::new();
        while *i < c.len() {
            let atom = match c[*i] {
                'a' => vec![Gen::A],
                'A' => vec![Gen::AInv],
                'b' => vec![Gen::B],
                'B' => vec![Gen::BInv],
                '(' => {
                    *i += 1;
                    let inner = word(c, i, depth + 1, err)?;
                    if *i >= c.len() || c[*i] != ')' {
                        return Err(err("unclosed parenthesis"));
                    }
                    inner
                }
                ')' if depth > 0 => return Ok(out),
                ch => return Err(err(&format!("unexpected character {ch:?}"))),
            };
            *i += 1;
            let mut reps = 1usize;
            if *i < c.len() && c[*i] == '^' {
                *i += 1;
                let start = *i;
                while *i < c.len() && c[*i].is_ascii_digit() {
                    *i += 1;
                }
                if start == *i {
                    return Err(err("exponent must be a non-negative integer"));
                }
                reps = c[start..*i].iter().collect::<String>().parse().map_err(|_| err("exponent too large"))?;
            }
            for _ in 0..reps {
                out.extend_from_slice(&atom);
            }
        }
        if depth > 0 {
            return Err(err("unclosed parenthesis"));
        }
        Ok(out)
    }
    let mut i = 0;
    word(&chars, &mut i, 0, &err)
}

/// Relator words of the covering group.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Presentation {
    pub relators: Vec<String>,
}

impl Presentation {
    pub fn new(relators: &[&str]) -> Result<Self> {
        let p = Presentation { relators: relators.iter().map(|s| s.to_string()).collect() };
        p.words()?;
        Ok(p)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let p: Presentation = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        p.words()?;
        Ok(p)
    }

    pub fn words(&self) -> Result<Vec<Vec<Gen>>> {
        self.relators.iter().map(|r| parse_word(r)).collect()
    }

    /// R: the longest relator, in letters.
    pub fn max_relator_length(&self) -> usize {
        self.words().map(|ws| ws.iter().map(Vec::len).max().unwrap_or(0)).unwrap_or(0)
    }

    pub fn relator_count(&self) -> usize {
        self.relators.len()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Curvature {
    Spherical,
    Flat,
    Hyperbolic,
}

/// Relators a^p, b^q, (ab)^r with the sign of 1/p + 1/q + 1/r - 1.
pub fn triangle_presentation(p: usize, q: usize, r: usize) -> Result<(Presentation, Curvature)> {
    if p < 2 || q < 2 || r < 2 {
        return Err(Error::BadWord(format!("({p},{q},{r})"), "exponents must be at least 2".into()));
    }
    let pres = Presentation::new(&[&format!("a^{p}"), &format!("b^{q}"), &format!("(ab)^{r}")])?;
    let lhs = q * r + p * r + p * q;
    let rhs = p * q * r;
    let curv = match lhs.cmp(&rhs) {
        std::cmp::Ordering::Greater => Curvature::Spherical,
        std::cmp::Ordering::Equal => Curvature::Flat,
        std::cmp::Ordering::Less => Curvature::Hyperbolic,
    };
    Ok((pres, curv))
}

/// A group with marked generators and its Cayley graph.
///
/// Vertex v is group element v. Edges are listed as all a-edges (g, ga) in
/// element order, then all b-edges (g, gb). Slots: 0 a-out, 1 a-in,
/// 2 b-out, 3 b-in.
#[derive(Clone, Debug)]
pub struct CayleyGraph {
    pub group: FiniteGroup,
    pub a: usize,
    pub b: usize,
    pub graph: QuantizedGraph,
}

impl CayleyGraph {
    fn a_edge(&self, g: usize) -> usize {
        g
    }

    fn b_edge(&self, g: usize) -> usize {
        self.group.order() + g
    }

    /// Evaluates a word starting from `start`.
    pub fn evaluate(&self, start: usize, word: &[Gen]) -> usize {
        let gr = &self.group;
        word.iter().fold(start, |g, &s| match s {
            Gen::A => gr.mul(g, self.a),
            Gen::AInv => gr.mul(g, gr.inverse(self.a)),
            Gen::B => gr.mul(g, self.b),
            Gen::BInv => gr.mul(g, gr.inverse(self.b)),
        })
    }

    /// Vertex permutation induced by left multiplication by `h`.
    pub fn left_translation(&self, h: usize) -> Vec<usize> {
        (0..self.group.order()).map(|g| self.group.mul(h, g)).collect()
    }
}

pub fn cayley_graph(spec: &GroupSpec) -> Result<CayleyGraph> {
    let (group, elems) = FiniteGroup::build(&spec.kind)?;
    let find = |v: &Value| -> Result<usize> {
        let e = spec.kind.parse_elem(v)?;
        Ok(elems.binary_search(&e).expect("parsed elements belong to the group"))
    };
    let (a, b) = (find(&spec.a)?, find(&spec.b)?);
    if a == group.identity() || b == group.identity() {
        return Err(Error::IdentityGenerator);
    }
    let m = group.order();
    let mut edges = Vec::with_capacity(2 * m);
    for g in 0..m {
        edges.push([HalfEdge::new(g, 0), HalfEdge::new(group.mul(g, a), 1)]);
    }
    for g in 0..m {
        edges.push([HalfEdge::new(g, 2), HalfEdge::new(group.mul(g, b), 3)]);
    }
    let graph = match QuantizedGraph::new(m, edges) {
        Ok(g) => g,
        Err(Error::NotConnected) => return Err(Error::NotGenerating),
        Err(e) => return Err(e),
    };
    Ok(CayleyGraph { group, a, b, graph })
}

/// The edges traversed by `word` from `start`, toggled (so backtracking
/// cancels).
pub fn relation_cycle(cg: &CayleyGraph, start: usize, word: &[Gen]) -> Result<EdgeVector> {
    let gr = &cg.group;
    let mut l = cg.graph.empty_edge_set();
    let mut g = start;
    for &s in word {
        match s {
            Gen::A => {
                l.flip(cg.a_edge(g));
                g = gr.mul(g, cg.a);
            }
            Gen::AInv => {
                g = gr.mul(g, gr.inverse(cg.a));
                l.flip(cg.a_edge(g));
            }
            Gen::B => {
                l.flip(cg.b_edge(g));
                g = gr.mul(g, cg.b);
            }
            Gen::BInv => {
                g = gr.mul(g, gr.inverse(cg.b));
                l.flip(cg.b_edge(g));
            }
        }
    }
    if g != start {
        return Err(Error::NotARelator(format!("{word:?}")));
    }
    Ok(l)
}

/// All relation cycles L(g, r), relator-major then element order, with
/// empty ones dropped.
pub fn local_cycles(cg: &CayleyGraph, p: &Presentation) -> Result<Vec<EdgeVector>> {
    let mut out = Vec::new();
    for (text, w) in p.relators.iter().zip(p.words()?) {
        if cg.evaluate(cg.group.identity(), &w) != cg.group.identity() {
            return Err(Error::NotARelator(text.clone()));
        }
        for g in 0..cg.group.order() {
            let l = relation_cycle(cg, g, &w)?;
            if !l.is_zero() {
                out.push(l);
            }
        }
    }
    Ok(out)
}

/// The code spanned by all relation cycles.
pub fn code_from_group(spec: &GroupSpec, p: &Presentation) -> Result<(CayleyGraph, GraphicalCode)> {
    let cg = cayley_graph(spec)?;
    let cycles = local_cycles(&cg, p)?;
    let code = code_from_cycles(&cg.graph, &cycles)?;
    Ok((cg, code))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LdpcReport {
    pub rows: usize,
    pub cols: usize,
    pub row_weight_max: usize,
    pub col_weight_max: usize,
    /// Largest fraction of ones in any row or column.
    pub density: f64,
    pub max_relator_length: usize,
    pub relator_count: usize,
}

/// The two numbers the sparsity bounds depend on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SparsityBounds {
    pub max_relator_length: usize,
    pub relator_count: usize,
}

impl Presentation {
    pub fn bounds(&self) -> SparsityBounds {
        SparsityBounds { max_relator_length: self.max_relator_length(), relator_count: self.relator_count() }
    }
}

/// Row and column statistics of a check matrix, checked against the
/// relator bounds.
pub fn ldpc_report(code: &GraphicalCode, p: &Presentation) -> Result<LdpcReport> {
    ldpc_report_with(code, p.bounds())
}

/// `ldpc_report` for codes whose generating cycles come from another
/// source (for example the faces of a drawn graph): `relator_count` then
/// bounds how many generators share an edge.
pub fn ldpc_report_with(code: &GraphicalCode, bounds: SparsityBounds) -> Result<LdpcReport> {
    let rows = crate::codespace::check_matrix(code);
    let cols = code.graph.edge_count();
    let row_weight_max = rows.iter().map(|r| r.weight()).max().unwrap_or(0);
    let col_weight_max = (0..cols).map(|c| rows.iter().filter(|r| r.get(c)).count()).max().unwrap_or(0);
    let r = bounds.max_relator_length;
    let count = bounds.relator_count;
    if row_weight_max > r {
        return Err(Error::BoundViolated(format!("row weight {row_weight_max} exceeds R = {r}")));
    }
    if col_weight_max > count * r {
        return Err(Error::BoundViolated(format!("column weight {col_weight_max} exceeds {count} * {r}")));
    }
    let density = if rows.is_empty() {
        0.0
    } else {
        (row_weight_max as f64 / cols as f64).max(col_weight_max as f64 / rows.len() as f64)
    };
    Ok(LdpcReport {
        rows: rows.len(),
        cols,
        row_weight_max,
        col_weight_max,
        density,
        max_relator_length: r,
        relator_count: count,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::f2::Subspace;

    fn toric_spec(n: usize) -> GroupSpec {
        GroupSpec::parity(&[2 * n, 2 * n], &[1, 1], &[-1, 1])
    }

    #[test]
    fn words_parse() {
        use Gen::*;
        assert_eq!(parse_word("ab AB").unwrap(), vec![A, B, AInv, BInv]);
        assert_eq!(parse_word("(ab)^2").unwrap(), vec![A, B, A, B]);
        assert_eq!(parse_word("a^3B").unwrap(), vec![A, A, A, BInv]);
        assert_eq!(parse_word("((a)^2b)^2").unwrap().len(), 6);
        assert_eq!(parse_word("a^0").unwrap(), vec![]);
        assert!(matches!(parse_word("(ab"), Err(Error::BadWord(..))));
        assert!(matches!(parse_word("ab)"), Err(Error::BadWord(..))));
        assert!(matches!(parse_word("ac"), Err(Error::BadWord(..))));
        assert!(matches!(parse_word("a^"), Err(Error::BadWord(..))));
    }

    #[test]
    fn cayley_examples() {
        let k5 = cayley_graph(&GroupSpec::cyclic(5, 1, 3)).unwrap();
        assert_eq!((k5.graph.n(), k5.graph.edge_count()), (5, 10));
        let simple = k5.graph.edges().iter().all(|[x, y]| x.vertex != y.vertex);
        assert!(simple);
        let mut pairs: Vec<(usize, usize)> =
            k5.graph.edges().iter().map(|[x, y]| (x.vertex.min(y.vertex), x.vertex.max(y.vertex))).collect();
        pairs.sort();
        pairs.dedup();
        assert_eq!(pairs.len(), 10, "every pair of vertices joined once");

        let rep = cayley_graph(&GroupSpec::cyclic(3, 1, 1)).unwrap();
        assert_eq!((rep.graph.n(), rep.graph.edge_count()), (3, 6));

        let toric = cayley_graph(&toric_spec(2)).unwrap();
        assert_eq!(toric.graph.n(), 8);

        assert_eq!(cayley_graph(&GroupSpec::cyclic(5, 0, 1)).unwrap_err(), Error::IdentityGenerator);
        assert_eq!(cayley_graph(&GroupSpec::cyclic(6, 2, 4)).unwrap_err(), Error::NotGenerating);
        // order-2 generator: doubled edges
        let z2 = cayley_graph(&GroupSpec::product_of_cyclic(&[2, 3], &[1, 0], &[0, 1])).unwrap();
        assert_eq!(z2.graph.n(), 6);
    }

    #[test]
    fn group_spec_json() {
        let s = GroupSpec::from_json(r#"{"type":"cyclic","n":5,"a":1,"b":3}"#).unwrap();
        assert_eq!(s, GroupSpec::cyclic(5, 1, 3));
        let t = GroupSpec::from_json(r#"{"type":"parity_subgroup","moduli":[4,4],"a":[1,1],"b":[-1,1]}"#).unwrap();
        assert_eq!(cayley_graph(&t).unwrap().graph.n(), 8);
        let tab = GroupSpec::from_json(r#"{"type":"table","mul":[[0,1,2],[1,2,0],[2,0,1]],"a":1,"b":2}"#).unwrap();
        assert_eq!(cayley_graph(&tab).unwrap().graph.n(), 3);
        let not_group = GroupSpec::from_json(r#"{"type":"table","mul":[[0,1],[1,1]],"a":1,"b":1}"#).unwrap();
        assert!(matches!(cayley_graph(&not_group), Err(Error::BadGroup(_))));
        let nested = GroupSpec::from_json(
            r#"{"type":"product","factors":[{"type":"cyclic","n":3},{"type":"product","factors":[{"type":"cyclic","n":2}]}],"a":[1,[0]],"b":[0,[1]]}"#,
        )
        .unwrap();
        assert_eq!(cayley_graph(&nested).unwrap().graph.n(), 6);
        assert!(matches!(GroupSpec::from_json("{"), Err(Error::Parse(_))));
        let odd = GroupSpec::parity(&[3, 3], &[1, 1], &[2, 0]);
        assert!(matches!(cayley_graph(&odd), Err(Error::BadGroup(_))));
    }

    #[test]
    fn relation_cycles() {
        let k5 = cayley_graph(&GroupSpec::cyclic(5, 1, 3)).unwrap();
        let pent = relation_cycle(&k5, 0, &parse_word("a^5").unwrap()).unwrap();
        assert_eq!(k5.graph.essential_length(&pent).unwrap(), 5);
        assert!(relation_cycle(&k5, 2, &parse_word("aA").unwrap()).unwrap().is_zero());
        assert!(matches!(relation_cycle(&k5, 0, &parse_word("ab").unwrap()), Err(Error::NotARelator(_))));
        let toric = cayley_graph(&toric_spec(3)).unwrap();
        let sq = relation_cycle(&toric, 0, &parse_word("abAB").unwrap()).unwrap();
        assert_eq!(sq.weight(), 4);
        assert_eq!(toric.graph.essential_length(&sq).unwrap(), 4);
    }

    #[test]
    fn five_qubit_code_from_double_cover() {
        let p = Presentation::new(&["aaaB", "a^10"]).unwrap();
        let (cg, code) = code_from_group(&GroupSpec::cyclic(5, 1, 3), &p).unwrap();
        assert_eq!((code.n, code.k), (5, 1));
        // the closure is exactly the even-length cycles
        let even_cycles = cg.graph.cycle_space().intersect(&cg.graph.even_space()).unwrap();
        assert_eq!(code.cycle_group, even_cycles);
        let rep = ldpc_report(&code, &p).unwrap();
        assert_eq!(rep.row_weight_max, 4);
        assert!(rep.col_weight_max <= 2 * 10);
    }

    #[test]
    fn toric_closures() {
        let p = Presentation::new(&["abAB"]).unwrap();
        let mut last_density = f64::INFINITY;
        for n in 2..=4 {
            let (_, code) = code_from_group(&toric_spec(n), &p).unwrap();
            assert_eq!(code.n, 2 * n * n);
            assert_eq!(code.cycle_group.dim(), 2 * n * n - 1);
            assert_eq!(code.k, 2);
            let rep = ldpc_report(&code, &p).unwrap();
            assert_eq!(rep.row_weight_max, 4);
            assert!(rep.density < last_density);
            last_density = rep.density;
        }
    }

    #[test]
    fn translation_invariance() {
        let p = Presentation::new(&["abAB"]).unwrap();
        let (cg, code) = code_from_group(&toric_spec(2), &p).unwrap();
        for h in 0..cg.group.order() {
            let perm = cg.left_translation(h);
            // edge e = (g, g s) goes to (hg, hg s): same generator, new source
            let m = cg.group.order();
            let edge_perm = |e: usize| if e < m { perm[e] } else { m + perm[e - m] };
            let moved = Subspace::span(
                code.graph.edge_count(),
                code.cycle_group.basis().iter().map(|l| code.graph.edge_set(l.iter_ones().map(edge_perm))),
            )
            .unwrap();
            assert_eq!(moved, code.cycle_group);
        }
    }

    #[test]
    fn triangle_groups() {
        let (p, c) = triangle_presentation(3, 3, 3).unwrap();
        assert_eq!(c, Curvature::Flat);
        assert_eq!(p.relators, vec!["a^3", "b^3", "(ab)^3"]);
        assert_eq!(p.max_relator_length(), 6);
        assert_eq!(triangle_presentation(2, 3, 7).unwrap().1, Curvature::Hyperbolic);
        assert_eq!(triangle_presentation(2, 2, 2).unwrap().1, Curvature::Spherical);
        assert!(triangle_presentation(1, 3, 3).is_err());
        // a finite quotient of the (3,3,3) group: Z3 x Z3 with a=(1,0), b=(0,1)
        let spec = GroupSpec::product_of_cyclic(&[3, 3], &[1, 0], &[0, 1]);
        let (_, code) = code_from_group(&spec, &p).unwrap();
        assert_eq!(code.n, 9);
        let wrong = GroupSpec::cyclic(4, 1, 1);
        assert!(matches!(code_from_group(&wrong, &p), Err(Error::NotARelator(_))));
        let spec = GroupSpec::product_of_cyclic(&[3, 3], &[1, 0], &[2, 0]);
        assert!(matches!(cayley_graph(&spec), Err(Error::NotGenerating)));
    }

    #[test]
    fn bad_relator_rejected() {
        let p = Presentation::new(&["ab"]).unwrap();
        assert!(matches!(code_from_group(&GroupSpec::cyclic(5, 1, 3), &p), Err(Error::NotARelator(_))));
        assert!(Presentation::from_json(r#"{"relators":["a(b"]}"#).is_err());
    }
}
