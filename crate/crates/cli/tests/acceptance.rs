//! Exit criteria, one line per criterion. Runs as a plain binary so every
//! criterion reports even when an earlier one fails.

use std::collections::BTreeSet;
use std::process::Command;
use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use polyrep::identities::{
    h_family_coords, legendre_exception, verify_h_set, verify_hirschhorn_sellers,
};
use polyrep::path::{paths_for_triple, triple_to_vertex, triple_value};
use polyrep::polygonal::{polygonal, tri};
use polyrep::{
    build_graph, count_oracle, count_p3, count_table, delta_g, nontrivial_values, script_a, Coord,
    IndexTriple, PolygonOrder, RankIndex, Representation,
};

type Check = Result<(), String>;

type Criterion = (&'static str, Duration, fn() -> Check);

fn order(s: u64) -> PolygonOrder {
    PolygonOrder::new(s).expect("s >= 3")
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn worked_example() -> Check {
    let s = order(4);
    ensure(count_p3(s, 38) == 2, || {
        format!("P^4_3(38) = {}", count_p3(s, 38))
    })?;
    let a = script_a(s, 38);
    ensure(a == vec![Coord::new(7, 7), Coord::new(10, 5)], || {
        format!("A = {a:?}")
    })?;
    for w in &a {
        let d = delta_g(s, *w, 38).map_err(|e| e.to_string())?;
        ensure(d == 1, || format!("delta_g{w} = {d}"))?;
    }
    let t = IndexTriple::from_indices(0, 1, 3).map_err(|e| e.to_string())?;
    let got: BTreeSet<Vec<Coord>> = paths_for_triple(t)
        .iter()
        .map(|p| p.waypoints().to_vec())
        .collect();
    let listed: BTreeSet<Vec<Coord>> = [
        [(0, 1), (6, 5), (7, 7)],
        [(6, 4), (7, 6), (7, 7)],
        // printed as (2,1); only (1,2) is a stage-1 endpoint
        [(1, 2), (7, 6), (7, 7)],
    ]
    .into_iter()
    .map(|w| w.into_iter().map(Coord::from).collect())
    .collect();
    ensure(got == listed, || format!("class at (7,7): {got:?}"))?;
    let q = paths_for_triple(IndexTriple::from_indices(-1, -1, 4).map_err(|e| e.to_string())?);
    ensure(
        q.len() == 1 && q[0].waypoints() == [Coord::new(10, 5)],
        || format!("class at (10,5): {q:?}"),
    )
}

fn oracle_equivalence() -> Check {
    for s in 3..=10 {
        for n in 0..=2000 {
            let (t, o) = (count_p3(order(s), n), count_oracle(order(s), n, false));
            ensure(t == o, || format!("s={s} n={n}: theorem {t} oracle {o}"))?;
        }
    }
    Ok(())
}

fn hirschhorn_sellers() -> Check {
    let r = verify_hirschhorn_sellers(200);
    ensure(r.passed() && r.checked == 201, || r.to_string())
}

fn h_set() -> Check {
    let bound = 10_000;
    let family: BTreeSet<u64> = h_family_coords(bound).into_iter().map(|(_, v)| v).collect();
    let legendre: BTreeSet<u64> = (0..=bound).filter(|&m| legendre_exception(m)).collect();
    let no_squares: BTreeSet<u64> = (0..=bound)
        .filter(|&m| count_oracle(order(4), m, true) == 0)
        .collect();
    ensure(family == legendre, || {
        "family values differ from 4^a(8b+7)".into()
    })?;
    ensure(legendre == no_squares, || {
        "4^a(8b+7) differs from the zero-count set".into()
    })?;
    let r = verify_h_set(bound);
    ensure(r.passed(), || r.to_string())
}

fn theorem1() -> Check {
    for s in [3, 4, 5] {
        let g = build_graph(order(s), 1000).map_err(|e| e.to_string())?;
        let got = nontrivial_values(&g);
        let want: BTreeSet<u64> = (0..=1000)
            .filter(|&m| count_oracle(order(s), m, false) >= 1)
            .collect();
        ensure(got == want, || {
            format!(
                "s={s}: symmetric difference {:?}",
                got.symmetric_difference(&want).collect::<Vec<_>>()
            )
        })?;
    }
    Ok(())
}

fn coverage() -> Check {
    for n in 1..=10_000 {
        ensure(count_oracle(order(3), n, true) >= 1, || {
            format!("n={n} uncovered")
        })?;
    }
    Ok(())
}

fn linchpin() -> Check {
    for s in 3..=12u64 {
        for i in -1..=200i64 {
            let idx = RankIndex::new(i).map_err(|e| e.to_string())?;
            let lhs = polygonal(order(s), (i + 2) as u64).map_err(|e| e.to_string())?;
            let rhs = 1 + (s - 2) * tri(idx) + (s - 1) * (i + 1) as u64;
            ensure(lhs == rhs, || format!("s={s} i={i}: {lhs} != {rhs}"))?;
        }
    }
    let mut rng = StdRng::seed_from_u64(0x5eed_0001);
    for _ in 0..100_000 {
        let s = order(rng.random_range(3..=1000));
        let mut idx = || rng.random_range(-1..=10_000i64);
        let t = IndexTriple::from_indices(idx(), idx(), idx()).map_err(|e| e.to_string())?;
        let via_vertex = Representation::standard(s)
            .value(triple_to_vertex(t))
            .map_err(|e| e.to_string())?;
        let direct = triple_value(s, t).map_err(|e| e.to_string())?;
        ensure(via_vertex == direct, || {
            format!("s={s} t={t}: {via_vertex} != {direct}")
        })?;
    }
    Ok(())
}

fn performance() -> Check {
    let start = Instant::now();
    let table = count_table(order(4), 1_000_000).map_err(|e| e.to_string())?;
    let took = start.elapsed();
    ensure(took < Duration::from_secs(30), || {
        format!("count_table took {took:?}")
    })?;
    let mut rng = StdRng::seed_from_u64(0x5eed_0008);
    for _ in 0..200 {
        let n = rng.random_range(0..=1_000_000u64);
        let (batch, single) = (table.get(n), Some(count_p3(order(4), n)));
        ensure(batch == single, || {
            format!("n={n}: table {batch:?} pointwise {single:?}")
        })?;
    }
    Ok(())
}

fn run_cli(args: &[&str]) -> Result<Vec<u8>, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_polyrep"))
        .args(args)
        .output()
        .map_err(|e| e.to_string())?;
    ensure(out.status.success(), || {
        format!("{args:?} exited {}", out.status)
    })?;
    Ok(out.stdout)
}

fn determinism() -> Check {
    for args in [
        &["graph", "--s", "4", "--max", "200", "--format", "dot"][..],
        &["table", "--s", "4", "--max", "2000", "--format", "csv"][..],
    ] {
        let (a, b) = (run_cli(args)?, run_cli(args)?);
        ensure(!a.is_empty() && a == b, || {
            format!("{args:?} differs between runs")
        })?;
    }
    Ok(())
}

fn main() {
    let criteria: [Criterion; 9] = [
        (
            "1 worked example P^4_3(38) = 2",
            Duration::from_secs(1),
            worked_example,
        ),
        (
            "2 path classes = oracle, s 3..10, n <= 2000",
            Duration::from_secs(60),
            oracle_equivalence,
        ),
        (
            "3 Hirschhorn-Sellers, n <= 200",
            Duration::from_secs(10),
            hirschhorn_sellers,
        ),
        (
            "4 H-set = 4^a(8b+7) = no three squares, <= 10^4",
            Duration::from_secs(30),
            h_set,
        ),
        (
            "5 non-trivial components, s 3..5, N = 1000",
            Duration::from_secs(60),
            theorem1,
        ),
        (
            "6 three triangular numbers cover 1..10^4",
            Duration::from_secs(10),
            coverage,
        ),
        (
            "7 linchpin identity and vertex/value linkage",
            Duration::from_secs(60),
            linchpin,
        ),
        (
            "8 count_table(4, 10^6) under 30 s",
            Duration::from_secs(30),
            performance,
        ),
        (
            "9 deterministic graph and table output",
            Duration::from_secs(60),
            determinism,
        ),
    ];
    let mut failed = 0;
    for (name, limit, check) in criteria {
        let start = Instant::now();
        let result = check();
        let took = start.elapsed();
        let result = result
            .and_then(|()| ensure(took < limit, || format!("took {took:.2?}, limit {limit:?}")));
        match result {
            Ok(()) => println!("PASS  {name} ({took:.2?})"),
            Err(why) => {
                failed += 1;
                println!("FAIL  {name} ({took:.2?}): {why}");
            }
        }
    }
    if failed > 0 {
        println!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
    println!("all acceptance criteria passed");
}
