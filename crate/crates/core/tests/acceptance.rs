//! Acceptance run: one PASS/FAIL line per criterion.
//!
//! Criterion 7 asks for |K| < 0.2·|Q| on a solid 5×5×5 block. K always
//! contains ∂Q, and on that block |∂Q| alone is 602 of 1331 cells, so the
//! bound cannot hold. The check is still run and reported as FAIL; the
//! process exits nonzero only if the set of failures differs from that.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use cubical_ring::atmodel::*;
use cubical_ring::cup::cochain_on_cell;
use cubical_ring::fixtures::*;
use cubical_ring::*;

const UNATTAINABLE: &[u8] = &[7];

type Criterion = (u8, &'static str, Duration, fn() -> Outcome);

struct Outcome {
    ok: bool,
    detail: String,
}

fn outcome(ok: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        ok,
        detail: detail.into(),
    }
}

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return outcome(false, format!($($msg)+));
        }
    };
}

fn torus_cup_product() -> Outcome {
    let (t, forest) = example_torus();
    let cx = t.chain();
    let m = match atmodel_boundary(cx, &forest) {
        Ok(m) => m,
        Err(e) => return outcome(false, e.to_string()),
    };
    ensure!(verify_atmodel(cx, &m).is_valid(), "model fails the axioms");
    let (b1, b2) = (t.edge(0, 2).unwrap(), t.edge(0, 4).unwrap());
    let c = t.square(&[0, 2, 4, 8]).unwrap();
    let h0: Vec<CellId> = m.generators(0).collect();
    let h1: Vec<CellId> = m.generators(1).collect();
    let h2: Vec<CellId> = m.generators(2).collect();
    ensure!(h0 == [t.vertex(0)], "H0 = {h0:?}");
    ensure!(h1 == [b1, b2], "H1 = {h1:?}");
    ensure!(h2.len() == 1, "H2 = {h2:?}");
    let counts = m.generator_counts();
    let oracle = betti_oracle(cx).unwrap();
    ensure!(
        oracle.triple() == (1, 2, 1) && Betti(counts) == oracle,
        "Betti {counts:?} vs {oracle}"
    );

    let product = cup_cubical(cx, &m, b1, b2).unwrap();
    ensure!(
        product == Chain::singleton(2, h2[0]),
        "(v0,v2) ⌣ (v0,v4) = {product}"
    );
    let on = |a: usize, b: usize, gen: CellId| m.f(t.edge(a, b).unwrap(), 1).contains(gen);
    let terms = [on(0, 2, b1), on(2, 8, b2), on(0, 4, b1), on(4, 8, b2)].map(u8::from);
    ensure!(terms == [1, 1, 0, 0], "evaluation terms on c: {terms:?}");
    ensure!(
        cochain_on_cell(cx, &m, CupKind::Cubical, b1, b2, c).unwrap(),
        "cup cocycle vanishes on c"
    );

    // the hand-written table model: f on every edge, validity, product
    let table = common::torus_table_model(&t);
    ensure!(
        verify_atmodel(cx, &table).is_valid(),
        "table model fails the axioms"
    );
    let edges = cx.cells_of_dim(1);
    let agree = edges
        .iter()
        .filter(|&&e| m.f(e, 1) == table.f(e, 1))
        .count();
    ensure!(
        agree == edges.len(),
        "f agrees with the table on {agree}/{} edges",
        edges.len()
    );
    ensure!(
        cup_cubical(cx, &table, b1, b2).unwrap() == Chain::singleton(2, c),
        "table model product differs"
    );
    let tie = if h2[0] == c { "c itself" } else { "tie-broken" };
    outcome(
        true,
        format!("H = (1,2,1), product = H2 generator ({tie}), terms 1·1 + 0·0, f matches table on 18/18 edges"),
    )
}

fn hollow_cube_generator() -> Outcome {
    let cube = hollow_cube();
    let cx = cube.chain();
    let m = atmodel_boundary(cx, &SpanningForest::bfs(cx).unwrap()).unwrap();
    ensure!(verify_atmodel(cx, &m).is_valid(), "model fails the axioms");
    ensure!(
        m.generator_counts() == [1, 0, 1, 0],
        "|H| = {:?}",
        m.generator_counts()
    );
    let top = m.generators(2).next().unwrap();
    ensure!(
        m.g(top, 2) == Chain::from_cells(2, cx.cells_of_dim(2)),
        "g(top) = {}",
        m.g(top, 2)
    );

    let dq = boundary_subcomplex(&[Point3::new(0, 0, 0)]).unwrap();
    let vm = atmodel_boundary(dq.chain(), &SpanningForest::bfs(dq.chain()).unwrap()).unwrap();
    ensure!(
        vm.generator_counts() == [1, 0, 1, 0],
        "voxel cube |H| = {:?}",
        vm.generator_counts()
    );
    let vtop = vm.generators(2).next().unwrap();
    ensure!(
        vm.g(vtop, 2).len() == 6,
        "voxel cube g(top) has {} squares",
        vm.g(vtop, 2).len()
    );
    let z0 = dq
        .chain()
        .vertices(vtop)
        .iter()
        .all(|&v| dq.cube(v).base.z == 0);
    outcome(
        true,
        format!("|H| = (1,0,1), g = all six squares, voxel generator on z = 0: {z0}"),
    )
}

fn ring_analysis(voxels: Vec<Point3>) -> Result<Analysis> {
    analyze_picture(&complement_picture(&Picture3D::fitting(&voxels)?, 1))
}

fn linked_rings_discriminated() -> Outcome {
    let budget = Duration::from_secs(10);
    let t = Instant::now();
    let unlinked = ring_analysis(unlinked_rings()).unwrap();
    let t_unlinked = t.elapsed();
    let t = Instant::now();
    let linked = ring_analysis(linked_rings()).unwrap();
    let t_linked = t.elapsed();
    ensure!(
        t_unlinked < budget && t_linked < budget,
        "took {t_unlinked:.2?} / {t_linked:.2?}"
    );
    ensure!(
        unlinked.betti().triple() == (1, 2, 2),
        "unlinked Betti {}",
        unlinked.betti()
    );
    ensure!(
        linked.betti().triple() == (1, 2, 2),
        "linked Betti {}",
        linked.betti()
    );
    ensure!(
        unlinked.cup.is_zero() && unlinked.cup.rank == 0,
        "unlinked rank {}",
        unlinked.cup.rank
    );
    ensure!(linked.cup.rank == 1, "linked rank {}", linked.cup.rank);
    let nonzero = linked.cup.nonzero_rows();
    ensure!(nonzero.len() == 1, "{} nonzero rows", nonzero.len());
    let (a, b) = nonzero[0];
    ensure!(a != b, "nonzero row is a square");
    let product = linked.cup.product(a, b).unwrap();
    ensure!(
        product == Chain::from_cells(2, linked.cup.h2.iter().copied()),
        "mixed product {product}"
    );
    outcome(
        true,
        format!("rank 0 vs 1, mixed row (1,1), {t_unlinked:.0?} / {t_linked:.0?}"),
    )
}

fn subdivision_equivalence() -> Outcome {
    let (t, forest) = example_torus();
    let m = atmodel_boundary(t.chain(), &forest).unwrap();
    let eq = equivalence_check_2d(t.chain(), &m, true).unwrap();
    ensure!(eq.holds(), "torus: {} mismatches", eq.mismatches.len());
    let mut comparisons = eq.comparisons;
    let samples = 60;
    for seed in 0..samples {
        let cx = common::random_square_complex(&mut common::rng(seed), 20);
        let m = atmodel_incremental(cx.chain()).unwrap();
        let eq = equivalence_check_2d(cx.chain(), &m, true).unwrap();
        ensure!(
            eq.mismatches.is_empty(),
            "seed {seed}: {} mismatches",
            eq.mismatches.len()
        );
        ensure!(
            eq.invalid_steps.is_empty(),
            "seed {seed}: invalid subdivision step"
        );
        comparisons += eq.comparisons;
    }
    outcome(
        true,
        format!(
            "torus + {samples} random complexes, {comparisons} products compared, 0 mismatches"
        ),
    )
}

/// Every model built for one voxel set, checked against the axioms and the
/// oracle. Returns the number of models checked.
fn check_voxels(v: &[Point3], subdivide: bool) -> std::result::Result<(usize, usize), String> {
    let a = analyze_voxels(v).map_err(|e| e.to_string())?;
    let inc_q = atmodel_incremental(a.q.chain()).map_err(|e| e.to_string())?;
    let inc_dq = atmodel_incremental(a.dq.chain()).map_err(|e| e.to_string())?;
    let models = [
        ("boundary model on ∂Q", a.dq.chain(), &a.boundary_model),
        ("extended model on K", a.k(), a.model()),
        ("incremental on Q", a.q.chain(), &inc_q),
        ("incremental on ∂Q", a.dq.chain(), &inc_dq),
    ];
    let mut oracle_checks = 0;
    for (name, cx, m) in models {
        let report = verify_atmodel(cx, m);
        if !report.is_valid() {
            return Err(format!(
                "{name}: {}",
                report.first_failure().unwrap().axiom.name()
            ));
        }
        let oracle = betti_oracle(cx).map_err(|e| e.to_string())?;
        if Betti(m.generator_counts()) != oracle {
            return Err(format!(
                "{name}: {:?} vs oracle {oracle}",
                m.generator_counts()
            ));
        }
        oracle_checks += 1;
    }
    let q_oracle = betti_oracle(a.q.chain()).map_err(|e| e.to_string())?;
    if a.betti() != q_oracle {
        return Err(format!("pipeline Betti {} vs oracle {q_oracle}", a.betti()));
    }
    let mut n = models.len();
    if subdivide {
        let eq = equivalence_check_2d(a.dq.chain(), &a.boundary_model, true)
            .map_err(|e| e.to_string())?;
        if !eq.invalid_steps.is_empty() {
            return Err(format!(
                "subdivision step {} invalid",
                eq.invalid_steps[0].0
            ));
        }
        if !eq.mismatches.is_empty() {
            return Err(format!(
                "{} cup mismatches after subdivision",
                eq.mismatches.len()
            ));
        }
        n += eq.subdivisions;
    }
    Ok((n, oracle_checks))
}

fn voxel_fixtures() -> Vec<(&'static str, Vec<Point3>)> {
    vec![
        ("single voxel", vec![Point3::new(0, 0, 0)]),
        ("hollow block", hollow_block()),
        ("solid torus", solid_torus()),
        ("2×2×2 block", block(2, 2, 2)),
        ("3×2×2 block", block(3, 2, 2)),
        ("5×5×5 block", block(5, 5, 5)),
        (
            "complement of a voxel",
            complement_picture(&Picture3D::fitting(&[Point3::new(0, 0, 0)]).unwrap(), 1)
                .foreground(),
        ),
        (
            "complement of the solid torus",
            complement_picture(&Picture3D::fitting(&solid_torus()).unwrap(), 1).foreground(),
        ),
    ]
}

const RANDOM_PICTURES: u64 = 120;

fn axiom_suite() -> Outcome {
    let mut models = 0;
    for (name, v) in voxel_fixtures() {
        match check_voxels(&v, true) {
            Ok((n, _)) => models += n,
            Err(e) => return outcome(false, format!("{name}: {e}")),
        }
    }
    for seed in 0..RANDOM_PICTURES {
        let v = common::random_nonempty_voxels(&mut common::rng(1000 + seed), 4);
        match check_voxels(&v, seed % 4 == 0) {
            Ok((n, _)) => models += n,
            Err(e) => return outcome(false, format!("random picture {seed}: {e}")),
        }
    }
    for seed in 0..20 {
        let cx = common::random_square_complex(&mut common::rng(seed), 20);
        let m = atmodel_incremental(cx.chain()).unwrap();
        let eq = equivalence_check_2d(cx.chain(), &m, true).unwrap();
        ensure!(
            eq.invalid_steps.is_empty(),
            "random complex {seed}: invalid subdivision"
        );
        models += eq.subdivisions;
    }
    outcome(
        true,
        format!(
            "{models} models over {} fixtures and {RANDOM_PICTURES} random pictures, 0 failures",
            voxel_fixtures().len()
        ),
    )
}

fn oracle_agreement() -> Outcome {
    let mut checks = 0;
    for (name, v) in voxel_fixtures() {
        match check_voxels(&v, false) {
            Ok((_, n)) => checks += n,
            Err(e) => return outcome(false, format!("{name}: {e}")),
        }
    }
    for seed in 0..RANDOM_PICTURES {
        let v = common::random_nonempty_voxels(&mut common::rng(1000 + seed), 4);
        match check_voxels(&v, false) {
            Ok((_, n)) => checks += n,
            Err(e) => return outcome(false, format!("random picture {seed}: {e}")),
        }
    }
    let mut ranks = 0;
    for (name, v) in voxel_fixtures() {
        let q = complex_from_voxels(&v).unwrap();
        let eq = equivalence_check_rank(q.chain()).unwrap();
        ensure!(
            eq.holds(),
            "{name}: cubical rank {} vs simplicial {}",
            eq.cubical.rank,
            eq.simplicial.rank
        );
        if components(&v) == 1 {
            let a = analyze_voxels(&v).unwrap();
            ensure!(
                a.cup.rank == eq.cubical.rank,
                "{name}: pipeline rank {}",
                a.cup.rank
            );
        }
        ranks += 1;
    }
    outcome(
        true,
        format!("{checks} Betti comparisons, {ranks} rank comparisons with K_Q"),
    )
}

fn components(v: &[Point3]) -> usize {
    foreground_components(&Picture3D::fitting(v).unwrap())
}

fn face_reduction_effect() -> Outcome {
    let a = analyze_voxels(&block(5, 5, 5)).unwrap();
    let (q, dq, k) = a.cell_counts();
    let preserved = a.betti() == betti_oracle(a.q.chain()).unwrap()
        && betti_oracle(a.k()).unwrap() == betti_oracle(a.q.chain()).unwrap();
    let ratio = k as f64 / q as f64;
    outcome(
        preserved && (k as f64) < 0.2 * q as f64,
        format!(
            "|Q| = {q}, |∂Q| = {dq}, |K| = {k}, |K|/|Q| = {ratio:.3}, Betti preserved: {preserved}"
        ),
    )
}

fn ring_chains() -> Outcome {
    let mut seen = Vec::new();
    for n in 2..=4 {
        let a = ring_analysis(ring_chain(n)).unwrap();
        let oracle = betti_oracle(a.q.chain()).unwrap();
        ensure!(
            a.betti() == oracle,
            "{n} rings: Betti {} vs oracle {oracle}",
            a.betti()
        );
        ensure!(oracle.triple() == (1, n, n), "{n} rings: oracle {oracle}");
        let eq = equivalence_check_rank(a.q.chain()).unwrap();
        ensure!(eq.holds(), "{n} rings: K_Q rank {}", eq.simplicial.rank);
        ensure!(
            a.cup.rank == eq.simplicial.rank && a.cup.rank == n - 1,
            "{n} rings: rank {} vs K_Q {}",
            a.cup.rank,
            eq.simplicial.rank
        );
        seen.push(format!("{n}: ({}, rank {})", oracle, a.cup.rank));
    }
    outcome(true, format!("ring chains {}", seen.join(", ")))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        (
            1,
            "torus cup product",
            Duration::from_secs(1),
            torus_cup_product,
        ),
        (
            2,
            "hollow cube generator",
            Duration::from_secs(1),
            hollow_cube_generator,
        ),
        (
            3,
            "linked rings discriminated",
            Duration::from_secs(20),
            linked_rings_discriminated,
        ),
        (
            4,
            "subdivision equivalence",
            Duration::from_secs(30),
            subdivision_equivalence,
        ),
        (
            5,
            "AT-model axiom suite",
            Duration::from_secs(60),
            axiom_suite,
        ),
        (
            6,
            "oracle agreement",
            Duration::from_secs(60),
            oracle_agreement,
        ),
        (
            7,
            "face reduction |K| < 0.2|Q|",
            Duration::from_secs(10),
            face_reduction_effect,
        ),
        (
            8,
            "ring chain complements",
            Duration::from_secs(60),
            ring_chains,
        ),
    ];
    let mut failed = Vec::new();
    for (id, title, budget, run) in criteria {
        let t = Instant::now();
        let mut o = run();
        let elapsed = t.elapsed();
        if elapsed > budget {
            o.ok = false;
            o.detail.push_str(&format!("; over budget {budget:?}"));
        }
        let verdict = if o.ok { "PASS" } else { "FAIL" };
        println!(
            "{verdict} criterion {id}: {title}: {} [{elapsed:.2?}]",
            o.detail
        );
        if !o.ok {
            failed.push(id);
        }
    }
    if failed == UNATTAINABLE {
        println!("failures match the known unattainable set {UNATTAINABLE:?}");
        ExitCode::SUCCESS
    } else {
        println!("unexpected failures {failed:?}, known unattainable {UNATTAINABLE:?}");
        ExitCode::FAILURE
    }
}
