//! Pauli strings, cycle operators and stabilizer groups, plus brute-force
//! oracles that do not rely on the graph picture at all.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::codespace::{classify, ChargeClass, GraphicalCode};
use crate::error::{Error, Result};
use crate::f2::{BitVec, Subspace};
use crate::graph::{EdgeVector, QuantizedGraph};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    I,
    X,
    Y,
    Z,
}

impl Letter {
    pub fn from_xz(x: bool, z: bool) -> Letter {
        match (x, z) {
            (false, false) => Letter::I,
            (true, false) => Letter::X,
            (true, true) => Letter::Y,
            (false, true) => Letter::Z,
        }
    }

    pub fn xz(self) -> (bool, bool) {
        match self {
            Letter::I => (false, false),
            Letter::X => (true, false),
            Letter::Y => (true, true),
            Letter::Z => (false, true),
        }
    }

    pub fn to_char(self) -> char {
        match self {
            Letter::I => 'I',
            Letter::X => 'X',
            Letter::Y => 'Y',
            Letter::Z => 'Z',
        }
    }

    pub fn from_char(c: char) -> Option<Letter> {
        Some(match c {
            'I' => Letter::I,
            'X' => Letter::X,
            'Y' => Letter::Y,
            'Z' => Letter::Z,
            _ => return None,
        })
    }

    // position in the cycle X -> Y -> Z
    fn cyc(self) -> u8 {
        match self {
            Letter::I => 0,
            Letter::X => 1,
            Letter::Y => 2,
            Letter::Z => 3,
        }
    }

    /// Power of i picked up by the single-qubit product `self * other`.
    fn product_phase(self, other: Letter) -> u8 {
        let (a, b) = (self.cyc(), other.cyc());
        if a == 0 || b == 0 || a == b {
            0
        } else if b == a % 3 + 1 {
            1
        } else {
            3
        }
    }
}

/// i^phase times a tensor product of I, X, Y, Z.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PauliString {
    x: BitVec,
    z: BitVec,
    phase: u8,
}

impl PauliString {
    pub fn identity(n: usize) -> Self {
        PauliString { x: BitVec::zeros(n), z: BitVec::zeros(n), phase: 0 }
    }

    pub fn from_xz(x: BitVec, z: BitVec, negative: bool) -> Self {
        assert_eq!(x.len(), z.len());
        PauliString { x, z, phase: if negative { 2 } else { 0 } }
    }

    pub fn from_letters(letters: &[Letter]) -> Self {
        let mut p = PauliString::identity(letters.len());
        for (i, &l) in letters.iter().enumerate() {
            p.set_letter(i, l);
        }
        p
    }

    /// A string on `n` qubits with the given (qubit, letter) entries.
    pub fn sparse(n: usize, entries: &[(usize, Letter)]) -> Self {
        let mut p = PauliString::identity(n);
        for &(q, l) in entries {
            p.set_letter(q, l);
        }
        p
    }

    pub fn n(&self) -> usize {
        self.x.len()
    }

    pub fn x_bits(&self) -> &BitVec {
        &self.x
    }

    pub fn z_bits(&self) -> &BitVec {
        &self.z
    }

    pub fn letter(&self, q: usize) -> Letter {
        Letter::from_xz(self.x.get(q), self.z.get(q))
    }

    pub fn set_letter(&mut self, q: usize, l: Letter) {
        let (x, z) = l.xz();
        self.x.set(q, x);
        self.z.set(q, z);
    }

    /// Overall factor as a power of i.
    pub fn phase(&self) -> u8 {
        self.phase
    }

    /// +1 or -1; `None` for an anti-Hermitian string.
    pub fn sign(&self) -> Option<i8> {
        match self.phase {
            0 => Some(1),
            2 => Some(-1),
            _ => None,
        }
    }

    pub fn negated(&self) -> Self {
        PauliString { phase: (self.phase + 2) % 4, ..self.clone() }
    }

    pub fn unsigned(&self) -> Self {
        PauliString { phase: 0, ..self.clone() }
    }

    pub fn adjoint(&self) -> Self {
        PauliString { phase: (4 - self.phase) % 4, ..self.clone() }
    }

    pub fn weight(&self) -> usize {
        self.x.or(&self.z).weight()
    }

    pub fn is_identity(&self) -> bool {
        self.x.is_zero() && self.z.is_zero()
    }

    pub fn commutes_with(&self, other: &PauliString) -> bool {
        self.x.dot(&other.z) == self.z.dot(&other.x)
    }

    /// The operator product `self * other` with its phase.
    pub fn mul(&self, other: &PauliString) -> PauliString {
        assert_eq!(self.n(), other.n());
        let mut phase = self.phase + other.phase;
        for q in self.x.or(&self.z).and(&other.x.or(&other.z)).iter_ones() {
            phase += self.letter(q).product_phase(other.letter(q));
        }
        PauliString { x: self.x.xor(&other.x), z: self.z.xor(&other.z), phase: phase % 4 }
    }

    /// (x | z) as one vector of length 2n.
    pub fn symplectic(&self) -> BitVec {
        self.x.concat(&self.z)
    }

    fn masks(&self) -> (u64, u64) {
        (self.x.to_mask() as u64, self.z.to_mask() as u64)
    }
}

impl fmt::Display for PauliString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(["+", "+i", "-", "-i"][self.phase as usize])?;
        for q in 0..self.n() {
            write!(f, "{}", self.letter(q).to_char())?;
        }
        Ok(())
    }
}

impl fmt::Debug for PauliString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for PauliString {
    type Err = Error;

    /// Accepts an optional `+`, `-`, `+i` or `-i` prefix, then letters.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (phase, body) = if let Some(r) = s.strip_prefix("+i") {
            (1, r)
        } else if let Some(r) = s.strip_prefix("-i") {
            (3, r)
        } else if let Some(r) = s.strip_prefix('+') {
            (0, r)
        } else if let Some(r) = s.strip_prefix('-') {
            (2, r)
        } else {
            (0, s)
        };
        let letters = body
            .chars()
            .map(|c| Letter::from_char(c).ok_or_else(|| Error::BadPauli(s.to_string())))
            .collect::<Result<Vec<_>>>()?;
        if letters.is_empty() {
            return Err(Error::BadPauli(s.to_string()));
        }
        Ok(PauliString { phase, ..PauliString::from_letters(&letters) })
    }
}

impl Serialize for PauliString {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Which letter each of the three perfect pairings of slots {0,1,2,3}
/// stands for. Pairing 0 is {0,1}/{2,3}, pairing 1 is {0,2}/{1,3},
/// pairing 2 is {0,3}/{1,2}.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PairingConvention {
    pub letters: [Letter; 3],
}

impl Default for PairingConvention {
    fn default() -> Self {
        PairingConvention { letters: [Letter::Z, Letter::Y, Letter::X] }
    }
}

impl PairingConvention {
    pub fn new(letters: [Letter; 3]) -> Result<Self> {
        let mut sorted = letters;
        sorted.sort();
        if sorted != [Letter::X, Letter::Y, Letter::Z] {
            return Err(Error::Parse(format!("convention {letters:?} is not a bijection onto X, Y, Z")));
        }
        Ok(PairingConvention { letters })
    }

    /// All six bijections, ordered lexicographically by the letter triple
    /// with X < Y < Z. This is the order `convention_search` tries.
    pub fn all() -> Vec<PairingConvention> {
        use Letter::*;
        [[X, Y, Z], [X, Z, Y], [Y, X, Z], [Y, Z, X], [Z, X, Y], [Z, Y, X]]
            .into_iter()
            .map(|letters| PairingConvention { letters })
            .collect()
    }

    /// Pairing index of a two-slot mask.
    pub fn pairing_of(mask: u8) -> Option<usize> {
        match mask {
            0b0011 | 0b1100 => Some(0),
            0b0101 | 0b1010 => Some(1),
            0b1001 | 0b0110 => Some(2),
            _ => None,
        }
    }

    pub fn letter_for_mask(&self, mask: u8) -> Letter {
        Self::pairing_of(mask).map_or(Letter::I, |p| self.letters[p])
    }

    /// Slot partnered with slot 0 in the pairing assigned to `l`.
    fn partner_of_zero(&self, l: Letter) -> usize {
        1 + self.letters.iter().position(|&m| m == l).expect("bijection")
    }
}

impl fmt::Display for PairingConvention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in self.letters {
            write!(f, "{}", l.to_char())?;
        }
        Ok(())
    }
}

impl FromStr for PairingConvention {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let v: Vec<Letter> = s.trim().chars().filter_map(Letter::from_char).collect();
        if v.len() != 3 || s.trim().len() != 3 {
            return Err(Error::Parse(format!("convention must be three letters, got {s:?}")));
        }
        Self::new([v[0], v[1], v[2]])
    }
}

fn charged_set_to_pauli(g: &QuantizedGraph, l: &EdgeVector, conv: &PairingConvention) -> PauliString {
    let mut p = PauliString::identity(g.n());
    for v in 0..g.n() {
        p.set_letter(v, conv.letter_for_mask(g.charged_slots(l, v)));
    }
    p
}

/// The cycle operator of `l`, with sign +1.
pub fn cycle_to_pauli(g: &QuantizedGraph, l: &EdgeVector, conv: &PairingConvention) -> Result<PauliString> {
    if !g.is_cycle(l) {
        return Err(Error::NotACycle);
    }
    Ok(charged_set_to_pauli(g, l, conv))
}

/// Confirms that the cycle operator map has kernel exactly {0, 1_E}.
pub fn kernel_check(g: &QuantizedGraph, conv: &PairingConvention) -> Result<()> {
    if !charged_set_to_pauli(g, &g.full_edge_set(), conv).is_identity() {
        return Err(Error::KernelViolation("full edge set maps to a non-identity string".into()));
    }
    let cyc = g.cycle_space();
    let images = cyc.basis().iter().map(|l| charged_set_to_pauli(g, l, conv).symplectic());
    let rank = Subspace::span(2 * g.n(), images).expect("uniform lengths").dim();
    if rank + 1 != cyc.dim() {
        return Err(Error::KernelViolation(format!("rank {rank} on a cycle space of dimension {}", cyc.dim())));
    }
    Ok(())
}

/// Fixed frame for signing cycle operators of a closed cycle group: a basis
/// of a complement of 1_E inside the group, each mapped with sign +1. Any
/// other member is signed as the ordered product of the frame elements
/// summing to it (or to it plus 1_E), so dependent operators stay
/// consistent with the generators.
#[derive(Clone, Debug)]
pub struct CycleFrame {
    graph: QuantizedGraph,
    basis: Subspace,
    full: EdgeVector,
    images: Vec<PauliString>,
}

impl CycleFrame {
    pub fn new(code: &GraphicalCode, conv: &PairingConvention) -> Self {
        let g = &code.graph;
        let full = g.full_edge_set();
        let mut acc = Subspace::span(g.edge_count(), [full.clone()]).expect("uniform lengths");
        let mut picked = Vec::new();
        for b in code.cycle_group.basis() {
            if acc.insert(b.clone()) {
                picked.push(b.clone());
            }
        }
        let basis = Subspace::span(g.edge_count(), picked).expect("uniform lengths");
        let images = basis.basis().iter().map(|b| charged_set_to_pauli(g, b, conv)).collect();
        CycleFrame { graph: g.clone(), basis, full, images }
    }

    pub fn generators(&self) -> &[PauliString] {
        &self.images
    }

    pub fn cycles(&self) -> &[EdgeVector] {
        self.basis.basis()
    }

    /// Signed operator of a member of the cycle group.
    pub fn operator(&self, l: &EdgeVector) -> Result<PauliString> {
        let coeffs = self
            .basis
            .solve(l)
            .or_else(|| self.basis.solve(&l.xor(&self.full)))
            .ok_or(Error::NotACycle)?;
        let mut p = PauliString::identity(self.graph.n());
        for (img, _) in self.images.iter().zip(&coeffs).filter(|(_, &c)| c) {
            p = p.mul(img);
        }
        Ok(p)
    }
}

/// A commuting set of Hermitian Paulis not generating -I.
#[derive(Clone, Debug)]
pub struct StabilizerGroup {
    n: usize,
    generators: Vec<PauliString>,
    rows: Subspace,
}

impl StabilizerGroup {
    pub fn new(n: usize, generators: Vec<PauliString>) -> Result<Self> {
        for (i, g) in generators.iter().enumerate() {
            if g.n() != n {
                return Err(Error::MixedLength { expected: n, found: g.n() });
            }
            if g.sign().is_none() {
                return Err(Error::BadPauli(g.to_string()));
            }
            for (j, h) in generators.iter().enumerate().take(i) {
                if !g.commutes_with(h) {
                    return Err(Error::NonCommuting(j, i));
                }
            }
        }
        // phase-tracked elimination: a row reducing to the identity must
        // carry sign +1
        let mut reduced: Vec<(usize, PauliString)> = Vec::new();
        for g in &generators {
            let mut r = g.clone();
            for (p, row) in &reduced {
                if r.symplectic().get(*p) {
                    r = r.mul(row);
                }
            }
            match r.symplectic().first_one() {
                Some(p) => {
                    for (_, row) in reduced.iter_mut() {
                        if row.symplectic().get(p) {
                            *row = row.mul(&r);
                        }
                    }
                    reduced.push((p, r));
                }
                None if r.phase == 0 => {}
                None => return Err(Error::MinusIdentity),
            }
        }
        let rows = Subspace::span(2 * n, generators.iter().map(PauliString::symplectic))?;
        Ok(StabilizerGroup { n, generators, rows })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[PauliString] {
        &self.generators
    }

    pub fn rank(&self) -> usize {
        self.rows.dim()
    }

    /// Membership up to sign.
    pub fn contains_unsigned(&self, p: &PauliString) -> bool {
        self.rows.contains(&p.symplectic())
    }

    pub fn same_group_mod_signs(&self, other: &StabilizerGroup) -> bool {
        self.rows == other.rows
    }

    /// The group element with the same letters as `p`, with its sign.
    pub fn signed_member(&self, p: &PauliString) -> Option<PauliString> {
        let gens = Subspace::span(2 * self.n, self.generators.iter().map(PauliString::symplectic)).ok()?;
        gens.solve(&p.symplectic())?;
        // express through original generators by incremental elimination
        let mut basis: Vec<(BitVec, PauliString)> = Vec::new();
        for g in &self.generators {
            let mut v = g.symplectic();
            let mut prod = g.clone();
            for (b, bp) in &basis {
                if v.get(b.first_one().expect("nonzero")) {
                    v.xor_assign(b);
                    prod = prod.mul(bp);
                }
            }
            if let Some(piv) = v.first_one() {
                for (b, bp) in basis.iter_mut() {
                    if b.get(piv) {
                        b.xor_assign(&v);
                        *bp = bp.mul(&prod);
                    }
                }
                basis.push((v, prod));
            }
        }
        let mut target = p.symplectic();
        let mut out = PauliString::identity(self.n);
        for (b, bp) in &basis {
            if target.get(b.first_one().expect("nonzero")) {
                target.xor_assign(b);
                out = out.mul(bp);
            }
        }
        debug_assert!(target.is_zero());
        Some(out)
    }
}

/// The cycle operators of a basis of the closed cycle group (1_E removed),
/// each with sign +1.
pub fn stabilizers(code: &GraphicalCode, conv: &PairingConvention) -> Result<StabilizerGroup> {
    let frame = CycleFrame::new(code, conv);
    let s = StabilizerGroup::new(code.n, frame.generators().to_vec())?;
    if s.rank() + 1 != code.cycle_group.dim() {
        return Err(Error::KernelViolation(format!(
            "stabilizer rank {} for a cycle group of dimension {}",
            s.rank(),
            code.cycle_group.dim()
        )));
    }
    Ok(s)
}

/// Charge class of a Pauli: each letter contributes the slot pair through
/// slot 0 of the pairing carrying that letter.
pub fn pauli_to_charge_class(g: &QuantizedGraph, p: &PauliString, conv: &PairingConvention) -> Result<ChargeClass> {
    if p.n() != g.n() {
        return Err(Error::MixedLength { expected: g.n(), found: p.n() });
    }
    let mut c = g.empty_edge_set();
    for v in 0..g.n() {
        let l = p.letter(v);
        if l != Letter::I {
            c.xor_assign(&g.slot_pair_vector(v, 0, conv.partner_of_zero(l)));
        }
    }
    classify(g, &c)
}

/// Packed single-word view of a group for the enumeration oracles.
struct Packed {
    n: usize,
    gens: Vec<(u64, u64)>,
    /// Row-reduced generators as x | z << 64, keyed by highest bit.
    rref: Vec<u128>,
}

impl Packed {
    fn new(s: &StabilizerGroup) -> Result<Self> {
        if s.n > 64 {
            return Err(Error::TooLarge(format!("{} qubits exceeds the 64-qubit oracle limit", s.n)));
        }
        let gens: Vec<(u64, u64)> = s.generators.iter().map(PauliString::masks).collect();
        let mut rref: Vec<u128> = Vec::new();
        for &(x, z) in &gens {
            let mut v = x as u128 | (z as u128) << 64;
            for &r in &rref {
                v = v.min(v ^ r);
            }
            if v != 0 {
                rref.push(v);
                rref.sort_unstable_by(|a, b| b.cmp(a));
            }
        }
        Ok(Packed { n: s.n, gens, rref })
    }

    fn commutes_all(&self, x: u64, z: u64) -> bool {
        self.gens.iter().all(|&(gx, gz)| ((x & gz).count_ones() + (z & gx).count_ones()) % 2 == 0)
    }

    fn in_group(&self, x: u64, z: u64) -> bool {
        let mut v = x as u128 | (z as u128) << 64;
        for &r in &self.rref {
            v = v.min(v ^ r);
        }
        v == 0
    }

    /// Calls `f` on every Pauli of exactly weight `w` drawn from `alphabet`
    /// until it returns true.
    fn for_weight(&self, w: usize, alphabet: &[Letter], mut f: impl FnMut(u64, u64) -> bool) -> bool {
        let n = self.n;
        if w > n {
            return false;
        }
        if w == 0 {
            return f(0, 0);
        }
        let a = alphabet.len();
        let total = a.pow(w as u32);
        let mut support: u64 = if w == 64 { u64::MAX } else { (1u64 << w) - 1 };
        loop {
            let qubits: Vec<usize> = (0..n).filter(|&q| support >> q & 1 == 1).collect();
            for code in 0..total {
                let (mut x, mut z, mut c) = (0u64, 0u64, code);
                for &q in &qubits {
                    let (bx, bz) = alphabet[c % a].xz();
                    c /= a;
                    x |= (bx as u64) << q;
                    z |= (bz as u64) << q;
                }
                if f(x, z) {
                    return true;
                }
            }
            // next subset of the same size (Gosper)
            let t = support | (support - 1);
            if t == u64::MAX {
                return false;
            }
            let next = (t + 1) | (((!t & (t + 1)) - 1) >> (support.trailing_zeros() + 1));
            if n < 64 && next >> n != 0 {
                return false;
            }
            support = next;
        }
    }
}

fn unpack(n: usize, x: u64, z: u64) -> PauliString {
    PauliString::from_xz(BitVec::from_mask(n, x as u128), BitVec::from_mask(n, z as u128), false)
}

const FULL_ALPHABET: [Letter; 3] = [Letter::X, Letter::Y, Letter::Z];

/// Minimum weight of a Pauli that commutes with every generator but is not
/// in the group, by enumeration in order of weight up to `budget`.
pub fn oracle_distance(s: &StabilizerGroup, budget: usize) -> Result<usize> {
    oracle_logical(s, budget).map(|p| p.weight())
}

/// A minimum-weight nontrivial logical operator (first in enumeration order).
pub fn oracle_logical(s: &StabilizerGroup, budget: usize) -> Result<PauliString> {
    min_weight_outside(s, s, budget)
}

/// Least-weight Pauli commuting with every generator of `commutant_of`
/// but not in `outside` (up to sign), searched up to weight `budget`.
pub fn min_weight_outside(commutant_of: &StabilizerGroup, outside: &StabilizerGroup, budget: usize) -> Result<PauliString> {
    let s = commutant_of;
    if outside.n != s.n {
        return Err(Error::MixedLength { expected: s.n, found: outside.n });
    }
    let packed = Packed::new(s)?;
    let excluded = Packed::new(outside)?;
    for w in 1..=s.n.min(budget) {
        let mut hit = None;
        packed.for_weight(w, &FULL_ALPHABET, |x, z| {
            if packed.commutes_all(x, z) && !excluded.in_group(x, z) {
                hit = Some((x, z));
                true
            } else {
                false
            }
        });
        if let Some((x, z)) = hit {
            return Ok(unpack(s.n, x, z));
        }
    }
    if budget < s.n {
        Err(Error::BudgetExceeded { budget })
    } else {
        Err(Error::NotFound)
    }
}

/// The scalar C with P ι = C ι for P = E_p† E_q, when it exists.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KlScalar {
    /// P anticommutes with a generator: C = 0.
    Zero,
    /// P is a group element times i^k: C = i^k.
    Phase(u8),
    /// P acts as a nontrivial logical operator.
    NotScalar,
}

pub fn kl_scalar(s: &StabilizerGroup, ep: &PauliString, eq: &PauliString) -> KlScalar {
    let p = ep.adjoint().mul(eq);
    if s.generators.iter().any(|g| !g.commutes_with(&p)) {
        return KlScalar::Zero;
    }
    match s.signed_member(&p) {
        Some(g) => KlScalar::Phase((p.phase + 4 - g.phase) % 4),
        None => KlScalar::NotScalar,
    }
}

/// Checks the error-correction condition for all pairs of Pauli errors of
/// weight at most `t` whose letters come from `alphabet`. Returns the first
/// failing pair, if any.
pub fn knill_laflamme_check(
    s: &StabilizerGroup,
    t: usize,
    alphabet: &[Letter],
) -> Result<Option<(PauliString, PauliString)>> {
    let packed = Packed::new(s)?;
    let alphabet: Vec<Letter> = alphabet.iter().copied().filter(|&l| l != Letter::I).collect();
    let mut errors = Vec::new();
    for w in 0..=t.min(s.n) {
        packed.for_weight(w, &alphabet, |x, z| {
            errors.push((x, z));
            false
        });
    }
    for (i, &(x1, z1)) in errors.iter().enumerate() {
        for &(x2, z2) in &errors[i..] {
            let (x, z) = (x1 ^ x2, z1 ^ z2);
            if packed.commutes_all(x, z) && !packed.in_group(x, z) {
                return Ok(Some((unpack(s.n, x1, z1), unpack(s.n, x2, z2))));
            }
        }
    }
    Ok(None)
}

/// Generators split into all-X and all-Z parts.
#[derive(Clone, Debug, Serialize)]
pub struct CssPartition {
    pub x_type: Vec<PauliString>,
    pub z_type: Vec<PauliString>,
}

/// `Some` iff the group is generated by all-X and all-Z elements.
pub fn css_check(s: &StabilizerGroup) -> Option<CssPartition> {
    let n = s.n;
    let half = |upper: bool| {
        Subspace::span(2 * n, (0..n).map(|q| BitVec::from_indices(2 * n, [if upper { n + q } else { q }])))
            .expect("uniform lengths")
    };
    let xs = s.rows.intersect(&half(false)).expect("same ambient");
    let zs = s.rows.intersect(&half(true)).expect("same ambient");
    if xs.dim() + zs.dim() != s.rank() {
        return None;
    }
    let signed = |v: &BitVec| {
        let bare = PauliString::from_xz(
            BitVec::from_indices(n, v.iter_ones().filter(|&i| i < n)),
            BitVec::from_indices(n, v.iter_ones().filter(|&i| i >= n).map(|i| i - n)),
            false,
        );
        s.signed_member(&bare).expect("member")
    };
    Some(CssPartition {
        x_type: xs.basis().iter().map(signed).collect(),
        z_type: zs.basis().iter().map(signed).collect(),
    })
}

/// First convention, in `PairingConvention::all` order, whose stabilizer
/// group equals the target group up to signs.
pub fn convention_search(code: &GraphicalCode, target: &[PauliString]) -> Result<PairingConvention> {
    let want = Subspace::span(2 * code.n, target.iter().map(PauliString::symplectic))?;
    for conv in PairingConvention::all() {
        if let Ok(s) = stabilizers(code, &conv) {
            if s.rows == want {
                return Ok(conv);
            }
        }
    }
    Err(Error::NoConventionFound)
}

/// Generator rows (x part | z part) with qubit-support row weights and
/// per-column weights.
#[derive(Clone, Debug, Serialize)]
pub struct SymplecticMatrix {
    pub n: usize,
    pub rows: Vec<BitVec>,
    pub row_weights: Vec<usize>,
    pub column_weights: Vec<usize>,
}

pub fn symplectic_check_matrix(s: &StabilizerGroup) -> SymplecticMatrix {
    let rows: Vec<BitVec> = s.generators.iter().map(PauliString::symplectic).collect();
    let column_weights = (0..2 * s.n).map(|c| rows.iter().filter(|r| r.get(c)).count()).collect();
    SymplecticMatrix {
        n: s.n,
        row_weights: s.generators.iter().map(PauliString::weight).collect(),
        rows,
        column_weights,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codespace::code_from_cycles;
    use crate::graph::random_quantized_graph;
    use crate::graph::tests::{doubled_triangle, k5};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn p(s: &str) -> PauliString {
        s.parse().unwrap()
    }

    /// Labels 1..5 sit on vertices 1,2,3,4,0.
    fn five(entries: &[(usize, Letter)]) -> PauliString {
        PauliString::sparse(5, &entries.iter().map(|&(lab, l)| (lab % 5, l)).collect::<Vec<_>>())
    }

    fn five_qubit_targets() -> Vec<PauliString> {
        use Letter::*;
        (0..4)
            .map(|r| {
                let lab = |i: usize| (i - 1 + r) % 5 + 1;
                five(&[(lab(2), X), (lab(3), Z), (lab(4), Z), (lab(5), X)])
            })
            .collect()
    }

    fn five_qubit_code() -> GraphicalCode {
        let g = k5();
        let find = |a: usize, b: usize| {
            g.edges()
                .iter()
                .position(|[x, y]| (x.vertex, y.vertex) == (a, b) || (x.vertex, y.vertex) == (b, a))
                .unwrap()
        };
        let ls: Vec<_> = (0..4)
            .map(|r| {
                let lab = |i: usize| (i + r) % 5;
                g.edge_set([find(lab(2), lab(4)), find(lab(4), lab(3)), find(lab(3), lab(5)), find(lab(5), lab(2))])
            })
            .collect();
        code_from_cycles(&g, &ls).unwrap()
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(p("+IXZZX").to_string(), "+IXZZX");
        assert_eq!(p("XY").to_string(), "+XY");
        assert_eq!(p("-ZZ").sign(), Some(-1));
        assert_eq!(p("+iX").sign(), None);
        assert!(matches!("+XQ".parse::<PauliString>(), Err(Error::BadPauli(_))));
        assert!("".parse::<PauliString>().is_err());
        assert_eq!(p("XYZI").weight(), 3);
    }

    #[test]
    fn products_track_phase() {
        assert_eq!(p("X").mul(&p("Y")), p("+iZ"));
        assert_eq!(p("Y").mul(&p("X")), p("-iZ"));
        assert_eq!(p("XX").mul(&p("ZZ")), p("-YY"));
        assert_eq!(p("Y").mul(&p("Y")), p("I"));
        assert!(p("XX").commutes_with(&p("ZZ")));
        assert!(!p("XI").commutes_with(&p("ZI")));
    }

    #[test]
    fn conventions() {
        let all = PairingConvention::all();
        assert_eq!(all.len(), 6);
        assert!(all.contains(&PairingConvention::default()));
        assert_eq!("ZYX".parse::<PairingConvention>().unwrap(), PairingConvention::default());
        assert!("ZZX".parse::<PairingConvention>().is_err());
    }

    #[test]
    fn five_qubit_cycle_operators() {
        let code = five_qubit_code();
        let conv = convention_search(&code, &five_qubit_targets()).unwrap();
        let s = stabilizers(&code, &conv).unwrap();
        assert_eq!(s.rank(), 4);
        for (l, t) in code.generators.iter().zip(five_qubit_targets()) {
            assert_eq!(cycle_to_pauli(&code.graph, l, &conv).unwrap().unsigned(), t);
        }
        assert!(cycle_to_pauli(&code.graph, &code.graph.full_edge_set(), &conv).unwrap().is_identity());
        assert_eq!(oracle_distance(&s, 5).unwrap(), 3);
        assert_eq!(knill_laflamme_check(&s, 1, &FULL_ALPHABET).unwrap(), None);
        assert!(knill_laflamme_check(&s, 2, &FULL_ALPHABET).unwrap().is_some());
        assert!(css_check(&s).is_none());
        let m = symplectic_check_matrix(&s);
        assert_eq!((m.rows.len(), m.rows[0].len()), (4, 10));
        assert!(m.row_weights.iter().all(|&w| w == 4));
    }

    #[test]
    fn repetition_graph_needs_z_on_doubled_edges() {
        let g = doubled_triangle();
        let twos: Vec<_> = (0..2).map(|i| g.edge_set([2 * i, 2 * i + 1])).collect();
        let code = code_from_cycles(&g, &twos).unwrap();
        let target = [p("ZZI"), p("IZZ")];
        let conv = convention_search(&code, &target).unwrap();
        assert_eq!(conv.letters[1], Letter::Z);
        assert_eq!(cycle_to_pauli(&g, &twos[0], &conv).unwrap(), p("ZZI"));
        let s = stabilizers(&code, &conv).unwrap();
        assert_eq!(oracle_distance(&s, 3).unwrap(), 1);
        assert_eq!(knill_laflamme_check(&s, 1, &[Letter::X]).unwrap(), None);
        assert!(knill_laflamme_check(&s, 1, &FULL_ALPHABET).unwrap().is_some());
        assert!(css_check(&s).is_some());
        let bad = [p("XZI"), p("IZZ")];
        assert_eq!(convention_search(&code, &bad), Err(Error::NoConventionFound));
    }

    #[test]
    fn group_validation() {
        assert_eq!(StabilizerGroup::new(1, vec![p("X"), p("Z")]).unwrap_err(), Error::NonCommuting(0, 1));
        assert_eq!(StabilizerGroup::new(2, vec![p("XX"), p("-XX")]).unwrap_err(), Error::MinusIdentity);
        assert_eq!(
            StabilizerGroup::new(2, vec![p("XX"), p("ZZ"), p("YY")]).unwrap_err(),
            Error::MinusIdentity,
            "XX * ZZ = -YY"
        );
        assert!(StabilizerGroup::new(2, vec![p("XX"), p("ZZ"), p("-YY")]).is_ok());
        let s = StabilizerGroup::new(2, vec![]).unwrap();
        assert!(symplectic_check_matrix(&s).rows.is_empty());
    }

    #[test]
    fn kl_scalars() {
        let s = StabilizerGroup::new(3, vec![p("ZZI"), p("IZZ")]).unwrap();
        assert_eq!(kl_scalar(&s, &p("XII"), &p("XII")), KlScalar::Phase(0));
        assert_eq!(kl_scalar(&s, &p("XII"), &p("IXI")), KlScalar::Zero);
        assert_eq!(kl_scalar(&s, &p("IZI"), &p("IIZ")), KlScalar::Phase(0));
        assert_eq!(kl_scalar(&s, &p("III"), &p("-ZIZ")), KlScalar::Phase(2));
        assert_eq!(kl_scalar(&s, &p("ZII"), &p("III")), KlScalar::NotScalar);
    }

    #[test]
    fn charge_class_of_paulis() {
        let g = k5();
        let conv = PairingConvention::default();
        assert!(pauli_to_charge_class(&g, &PauliString::identity(5), &conv).unwrap().is_trivial());
        let x0 = PauliString::sparse(5, &[(0, Letter::X)]);
        assert_eq!(
            pauli_to_charge_class(&g, &x0, &conv).unwrap(),
            pauli_to_charge_class(&g, &x0.negated(), &conv).unwrap()
        );
        let pair = g.slot_pair_vector(0, 1, 2);
        assert_eq!(pauli_to_charge_class(&g, &x0, &conv).unwrap(), classify(&g, &pair).unwrap());
    }

    #[test]
    fn random_graph_properties() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..40 {
            let n = rng.gen_range(1..=10);
            let g = random_quantized_graph(n, &mut rng);
            let conv = PairingConvention::all()[rng.gen_range(0..6)];
            kernel_check(&g, &conv).unwrap();
            let cyc = g.cycle_space();
            let rand_cycle = |rng: &mut ChaCha8Rng| {
                cyc.basis().iter().filter(|_| rng.gen_bool(0.5)).fold(g.empty_edge_set(), |a, b| a.xor(b))
            };
            for _ in 0..10 {
                let (a, b) = (rand_cycle(&mut rng), rand_cycle(&mut rng));
                let (pa, pb) = (cycle_to_pauli(&g, &a, &conv).unwrap(), cycle_to_pauli(&g, &b, &conv).unwrap());
                assert!(pa.commutes_with(&pb));
                assert_eq!(pa.weight(), g.essential_length(&a).unwrap());
                // commutation with a charge's Pauli equals the pairing with the cycle
                let letters: Vec<Letter> = (0..n).map(|_| [Letter::I, Letter::X, Letter::Y, Letter::Z][rng.gen_range(0..4)]).collect();
                let q = PauliString::from_letters(&letters);
                let c = pauli_to_charge_class(&g, &q, &conv).unwrap();
                assert_eq!(q.commutes_with(&pa), !c.representative.dot(&a));
            }
        }
    }

    #[test]
    fn frame_signs_are_consistent() {
        let code = five_qubit_code();
        let conv = PairingConvention::default();
        let frame = CycleFrame::new(&code, &conv);
        let (a, b) = (&frame.cycles()[0], &frame.cycles()[1]);
        let prod = frame.operator(a).unwrap().mul(&frame.operator(b).unwrap());
        assert_eq!(frame.operator(&a.xor(b)).unwrap(), prod);
        assert_eq!(frame.operator(&code.graph.full_edge_set()).unwrap(), PauliString::identity(5));
    }
}
