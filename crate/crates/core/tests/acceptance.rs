//! Acceptance criteria. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any fails.

use std::time::{Duration, Instant};

use graphqec::cayley::ldpc_report_with;
use graphqec::codespace::{close_cycles, code_from_cycles, perp_charges, perp_cycles, GraphicalCode};
use graphqec::f2::BitVec;
use graphqec::families::*;
use graphqec::graph::{random_quantized_graph, EdgeVector, QuantizedGraph};
use graphqec::metrics::{
    distance, essential_girth, graph_code_distance, gv_bound, optimal_function, optimal_profile, witness_code,
};
use graphqec::model::{exact_diag_oracle, gap_trend, partition_function, spectrum, HamiltonianSpec};
use graphqec::pauli::{kernel_check, oracle_distance, stabilizers, PairingConvention, PauliString, StabilizerGroup};
use graphqec::Error;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn e2s(e: Error) -> String {
    e.to_string()
}

fn params(f: &FamilyInstance, budget: usize) -> Result<(usize, usize, Option<usize>), String> {
    Ok((f.code.n, f.code.k, distance(&f.code, budget).map_err(e2s)?.d))
}

fn group_of(f: &FamilyInstance) -> Result<StabilizerGroup, String> {
    stabilizers(&f.code, &f.convention).map_err(e2s)
}

/// 200 seeded random graphs with 1..=10 vertices.
fn random_suite() -> Vec<QuantizedGraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    (0..200).map(|_| random_quantized_graph(rng.gen_range(1..=10), &mut rng)).collect()
}

fn random_cycles(g: &QuantizedGraph, rng: &mut ChaCha8Rng) -> Vec<EdgeVector> {
    g.cycle_space().basis().iter().filter(|_| rng.gen_bool(0.5)).cloned().collect()
}

fn c1_five_qubit() -> Outcome {
    let paper_a = ["0010001101", "0001010110", "0000101011", "1000010101"];
    let direct = k5_direct().map_err(e2s)?;
    let cayley = five_one_three().map_err(e2s)?;
    for (f, gens) in [(&direct, k5_direct_generators()), (&cayley, five_qubit_generators())] {
        let p = params(f, 8)?;
        ensure(p == (5, 1, Some(3)), || format!("{}: (n,k,d) = {p:?}", f.name))?;
        let want = StabilizerGroup::new(5, gens).map_err(e2s)?;
        ensure(group_of(f)?.same_group_mod_signs(&want), || format!("{}: stabilizer group differs", f.name))?;
    }
    let rows: Vec<String> = direct.code.generators.iter().map(BitVec::to_string).collect();
    ensure(rows == paper_a, || format!("check matrix {rows:?}"))?;
    Ok("K5 direct and Cayley both (5,1,3); group and check matrix exact".into())
}

fn c2_shor() -> Outcome {
    use graphqec::pauli::Letter::Z;
    let rep = shor_repetition().map_err(e2s)?;
    ensure(rep.code.k == 1, || format!("repetition k = {}", rep.code.k))?;
    let want = StabilizerGroup::new(3, vec![PauliString::sparse(3, &[(0, Z), (1, Z)]), PauliString::sparse(3, &[(1, Z), (2, Z)])])
        .map_err(e2s)?;
    ensure(group_of(&rep)?.same_group_mod_signs(&want), || "repetition group differs from <Z1Z2, Z2Z3>".into())?;
    let shor = shor_913().map_err(e2s)?;
    let p = params(&shor, 8)?;
    ensure(p == (9, 1, Some(3)), || format!("shor (n,k,d) = {p:?}"))?;
    let s = group_of(&shor)?;
    let listed = shor_913_generators();
    ensure(listed.len() == 8 && listed.iter().all(|g| s.contains_unsigned(g)), || "a listed generator is missing".into())?;
    let od = oracle_distance(&s, 9).map_err(e2s)?;
    ensure(od == 3, || format!("oracle distance {od}"))?;
    Ok("repetition k=1 with <Z1Z2,Z2Z3>; [[9,1,3]] with all 8 generators, oracle d = 3".into())
}

fn c3_toric_wen() -> Outcome {
    let mut failures = Vec::new();
    for n in 2..=4 {
        for f in [toric(n).map_err(e2s)?, wen(n).map_err(e2s)?] {
            if f.code.k != 2 {
                failures.push(format!("{}({n}) has k = {}", f.name, f.code.k));
            }
            if n <= 3 {
                let d = distance(&f.code, 8).map_err(e2s)?.d;
                if d != Some(n) {
                    failures.push(format!("{}({n}) graphical d = {d:?}", f.name));
                }
                if f.name == "toric" {
                    let od = oracle_distance(&group_of(&f)?, 3).map_err(e2s)?;
                    if od != n {
                        failures.push(format!("toric({n}) oracle d = {od}"));
                    }
                }
            }
        }
    }
    if failures.is_empty() {
        Ok("toric and wen k=2 for n=2..4; d = n for n=2,3, oracle-confirmed on 8 and 18 qubits".into())
    } else {
        Err(failures.join("; "))
    }
}

fn c4_mobius() -> Outcome {
    let m2 = mobius(2).map_err(e2s)?;
    let p = params(&m2, 8)?;
    ensure(p == (6, 1, Some(2)), || format!("mobius(2) = {p:?}"))?;
    let listed = mobius2_generators();
    let want = StabilizerGroup::new(6, listed.clone()).map_err(e2s)?;
    ensure(group_of(&m2)?.same_group_mod_signs(&want), || "mobius(2) span differs from the listed operators".into())?;
    let rel = [0, 2, 4, 5].iter().fold(PauliString::identity(6), |acc, &i| acc.mul(&listed[i]));
    ensure(rel.unsigned().is_identity(), || "O_a O_c O_e O_f is not the identity".into())?;
    ensure(want.rank() == 5, || format!("rank {}", want.rank()))?;
    let m3 = mobius(3).map_err(e2s)?;
    let p = params(&m3, 8)?;
    ensure(p == (15, 1, Some(3)), || format!("mobius(3) = {p:?}"))?;
    let od = oracle_distance(&group_of(&m3)?, 3).map_err(e2s)?;
    ensure(od == 3, || format!("mobius(3) oracle d = {od}"))?;
    Ok("mobius(2) = (6,1,2) with the listed span (fourth operator read as Z1Z2Z4Z5); mobius(3) = (15,1,3)".into())
}

fn c5_klein() -> Outcome {
    let k2 = klein(2).map_err(e2s)?;
    let p = params(&k2, 8)?;
    ensure(p == (8, 2, Some(2)), || format!("klein(2) = {p:?}"))?;
    let od = oracle_distance(&group_of(&k2)?, 8).map_err(e2s)?;
    ensure(od == 2, || format!("klein(2) oracle d = {od}"))?;
    let k3 = klein(3).map_err(e2s)?;
    let p = params(&k3, 8)?;
    ensure(p == (18, 2, Some(3)), || format!("klein(3) = {p:?}"))?;
    let s3 = group_of(&k3)?;
    let below = oracle_distance(&s3, 2);
    ensure(matches!(below, Err(Error::BudgetExceeded { .. })), || format!("klein(3) has a logical of weight <= 2: {below:?}"))?;
    Ok("klein(2) = (8,2,2) exact by oracle; klein(3) = (18,2,3), oracle finds nothing below 3".into())
}

fn c6_duality(suite: &[QuantizedGraph]) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for (i, g) in suite.iter().enumerate() {
        let cyc = g.cycle_space();
        ensure(g.cut_space() == cyc.orthogonal_complement(), || format!("graph {i}: cuts != cycles^perp"))?;
        let closed = close_cycles(g, &random_cycles(g, &mut rng)).map_err(e2s)?;
        let charges = perp_charges(g, &closed);
        ensure(perp_cycles(g, &charges) == closed, || format!("graph {i}: cycle group round trip"))?;
        let mut group = g.cut_space();
        for b in g.even_space().basis() {
            if rng.gen_bool(0.5) {
                group.insert(b.clone());
            }
        }
        ensure(perp_charges(g, &perp_cycles(g, &group)) == group, || format!("graph {i}: charge group round trip"))?;
        let code = code_from_cycles(g, &closed.basis().to_vec()).map_err(e2s)?;
        let n = g.n();
        let k_cycles = n + 1 - code.cycle_group.dim();
        let k_charges = code.charge_group.dim() + 1 - n;
        ensure(code.k == k_cycles && k_cycles == k_charges, || format!("graph {i}: k {} vs {k_cycles} vs {k_charges}", code.k))?;
        for conv in PairingConvention::all() {
            kernel_check(g, &conv).map_err(|e| format!("graph {i} {conv}: {e}"))?;
        }
    }
    Ok(format!("{} graphs: duality, round trips, k formulas, kernel {{0, E}}", suite.len()))
}

fn agree(code: &GraphicalCode, conv: &PairingConvention, label: &str) -> Result<(), String> {
    let d = distance(code, 12).map_err(e2s)?.d;
    if code.k == 0 {
        return ensure(d.is_none(), || format!("{label}: k = 0 but d = {d:?}"));
    }
    let od = oracle_distance(&stabilizers(code, conv).map_err(e2s)?, code.n).map_err(e2s)?;
    ensure(d == Some(od), || format!("{label}: graphical {d:?} vs oracle {od}"))
}

fn c7_distance_oracle() -> Outcome {
    let fams = [
        shor_repetition(),
        shor_913(),
        five_one_three(),
        k5_direct(),
        toric(2),
        wen(2),
        wen(3),
        mobius(2),
        klein(2),
    ];
    let mut count = 0;
    for f in fams {
        let f = f.map_err(e2s)?;
        agree(&f.code, &f.convention, &f.name)?;
        count += 1;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for i in 0..100 {
        let g = random_quantized_graph(rng.gen_range(2..=8), &mut rng);
        let code = code_from_cycles(&g, &random_cycles(&g, &mut rng)).map_err(e2s)?;
        agree(&code, &PairingConvention::default(), &format!("random {i}"))?;
        count += 1;
    }
    Ok(format!("{count} codes: graphical distance equals oracle distance"))
}

fn c8_fundamental(suite: &[QuantizedGraph]) -> Outcome {
    let k5 = k5_direct().map_err(e2s)?.code.graph;
    let d = graph_code_distance(&k5).map_err(e2s)?;
    ensure(d == 3, || format!("d(K5) = {d}"))?;
    let k3 = optimal_function(&k5, 3).map_err(e2s)?.k;
    let k4 = optimal_function(&k5, 4).map_err(e2s)?.k;
    ensure((k3, k4) == (1, 0), || format!("k_K5(3) = {k3}, k_K5(4) = {k4}"))?;
    let mut witnesses = 0;
    for (i, g) in std::iter::once(&k5).chain(suite).enumerate() {
        let k1 = optimal_function(g, 1).map_err(e2s)?.k;
        ensure(k1 == g.n(), || format!("graph {i}: k(1) = {k1}, n = {}", g.n()))?;
        for o in optimal_profile(g).map_err(e2s)?.breakpoints.iter().filter(|o| o.k > 0) {
            let code = witness_code(g, o).map_err(e2s)?;
            ensure(code.k == o.k, || format!("graph {i}: witness k {} vs {}", code.k, o.k))?;
            let s = stabilizers(&code, &PairingConvention::default()).map_err(e2s)?;
            let od = oracle_distance(&s, g.n()).map_err(e2s)?;
            ensure(od >= o.d, || format!("graph {i}: witness at D = {} has oracle d = {od}", o.d))?;
            witnesses += 1;
        }
    }
    Ok(format!("d(K5)=3, k(3)=1, k(4)=0; k(1)=n on {} graphs; {witnesses} witnesses verified", suite.len() + 1))
}

fn c9_bounds(suite: &[QuantizedGraph]) -> Outcome {
    for n in 0..=30 {
        ensure(gv_bound(n, 1) == n as f64, || format!("gv_bound({n}, 1) = {}", gv_bound(n, 1)))?;
    }
    let v = gv_bound(5, 3);
    ensure((v - (5.0 - 106f64.log2())).abs() < 1e-6, || format!("gv_bound(5,3) = {v}"))?;
    let mut applicable = 0;
    for (i, g) in suite.iter().enumerate() {
        let Some(g0) = essential_girth(g).map_err(e2s)? else { continue };
        let bound = gv_bound(g.n(), g0);
        if bound < 1.0 {
            continue;
        }
        applicable += 1;
        let o = optimal_function(g, g0).map_err(e2s)?;
        ensure(o.k as f64 >= bound, || format!("graph {i}: k = {} below bound {bound:.3} at D = {g0}", o.k))?;
        let d = distance(&witness_code(g, &o).map_err(e2s)?, 12).map_err(e2s)?.d;
        ensure(d.is_some_and(|d| d >= g0), || format!("graph {i}: witness d = {d:?} < {g0}"))?;
    }
    Ok(format!("GV values exact; existence bound met on all {applicable} applicable graphs"))
}

fn c10_model() -> Outcome {
    let betas = [0.0, 0.5, 1.0];
    let check = |code: &GraphicalCode, conv: &PairingConvention, label: &str| -> Result<(), String> {
        let h = HamiltonianSpec::from_code(code).map_err(e2s)?;
        let s = spectrum(&h).map_err(e2s)?;
        let o = exact_diag_oracle(&h, conv).map_err(e2s)?;
        ensure(s.ground_degeneracy == 1 << code.k, || format!("{label}: ground degeneracy {}", s.ground_degeneracy))?;
        ensure(s.levels == o.levels, || format!("{label}: spectrum {:?} vs oracle {:?}", s.levels, o.levels))?;
        for b in betas {
            let (zs, zo) = (partition_function(&s, b), partition_function(&o, b));
            ensure(((zs - zo) / zo).abs() <= 1e-9, || format!("{label}: Z({b}) {zs} vs {zo}"))?;
        }
        ensure(partition_function(&s, 0.0) == (1u64 << code.n) as f64, || format!("{label}: Z(0) != 2^n"))
    };
    for f in [five_one_three(), k5_direct(), toric(2), mobius(2)] {
        let f = f.map_err(e2s)?;
        check(&f.code, &f.convention, &f.name)?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    for i in 0..50 {
        let g = random_quantized_graph(6, &mut rng);
        let code = code_from_cycles(&g, &random_cycles(&g, &mut rng)).map_err(e2s)?;
        check(&code, &PairingConvention::default(), &format!("random {i}"))?;
    }
    let trend = gap_trend(&[2, 3, 4], |n| HamiltonianSpec::from_code(&toric(n)?.code)).map_err(e2s)?;
    ensure(trend.constant, || format!("toric gaps {:?}", trend.points))?;
    Ok(format!("54 models match the oracle; toric gap {:?} for n = 2..4", trend.points[0].2))
}

fn c11_ldpc() -> Outcome {
    let mut densities = Vec::new();
    for n in 2..=6 {
        let f = toric(n).map_err(e2s)?;
        let r = ldpc_report_with(&f.code, f.bounds).map_err(e2s)?;
        ensure(r.row_weight_max == 4, || format!("toric({n}) row weight {}", r.row_weight_max))?;
        densities.push(r.density);
    }
    ensure(densities.windows(2).all(|w| w[1] < w[0]), || format!("densities {densities:?}"))?;
    let mut all = vec![shor_repetition(), shor_913(), five_one_three(), k5_direct()];
    all.extend((2..=4).map(wen));
    all.extend((2..=3).map(mobius));
    all.extend((2..=3).map(klein));
    let count = all.len() + 5;
    for f in all {
        let f = f.map_err(e2s)?;
        ldpc_report_with(&f.code, f.bounds).map_err(|e| format!("{}: {e}", f.name))?;
    }
    Ok(format!("toric row weight 4 and density decreasing for n = 2..6; bounds hold on {count} instances"))
}

fn main() {
    let suite = random_suite();
    let criteria: Vec<(&str, u64, Box<dyn Fn() -> Outcome + '_>)> = vec![
        ("[[5,1,3]] golden", 1, Box::new(c1_five_qubit)),
        ("Shor instances", 5, Box::new(c2_shor)),
        ("toric/Wen family", 60, Box::new(c3_toric_wen)),
        ("Mobius family", 60, Box::new(c4_mobius)),
        ("Klein family", 120, Box::new(c5_klein)),
        ("duality suite", 0, Box::new(|| c6_duality(&suite))),
        ("distance vs oracle", 0, Box::new(c7_distance_oracle)),
        ("fundamental theorems", 0, Box::new(|| c8_fundamental(&suite))),
        ("bounds", 0, Box::new(|| c9_bounds(&suite))),
        ("model", 120, Box::new(c10_model)),
        ("LDPC", 0, Box::new(c11_ldpc)),
    ];
    let mut failed = 0;
    for (i, (name, limit, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let mut outcome = run();
        let took = start.elapsed();
        if *limit > 0 && took > Duration::from_secs(*limit) && outcome.is_ok() {
            outcome = Err(format!("took {:.1} s, limit {limit} s", took.as_secs_f64()));
        }
        match outcome {
            Ok(detail) => println!("criterion {:>2} {name}: PASS ({:.2} s) {detail}", i + 1, took.as_secs_f64()),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} {name}: FAIL ({:.2} s) {why}", i + 1, took.as_secs_f64());
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
