//! End-to-end acceptance checks for the whole toolkit.  Each test covers
//! one criterion and prints a single summary line.

use std::collections::{BTreeMap, BTreeSet};
use std::time::Instant;

use num_bigint::BigInt;
use ortaquin::jdt::TlMove;
use ortaquin::jdt::{
    double_skew, ojdt_direct, ojdt_slide, ojdt_slide_horizontal, TlColumn, TlSkew,
};
use ortaquin::subsets::{left_side_sets, right_side_sets, subsets_of};
use ortaquin::{
    enumerate_quasistandard, enumerate_tableaux, format_tableau, lecouvey_from, lecouvey_split,
    lecouvey_to, parse_document, parse_tableau, push, spin_columns, unpush, weyl_dim, Cell, Entry,
    LetterSet, Shape, SkewTableau, Tableau,
};

fn report(label: &str, ok: bool) {
    println!("check {}: {}", label, if ok { "pass" } else { "FAIL" });
    assert!(ok, "check {} failed", label);
}

fn worked_example() -> Tableau {
    parse_tableau("n 5\ncol 1 2 0 -2\ncol 1 3 -1\ncol 2 0\n").unwrap()
}

/// Shapes used by the exhaustive checks: every rank-2 shape with at most
/// four columns and every rank-3 shape with at most two.
fn shape_pool() -> Vec<Shape> {
    let mut out = Vec::new();
    for a1 in 0..=4u32 {
        for a2 in 0..=4 - a1 {
            out.push(Shape::new(2, vec![a1, a2]).unwrap());
        }
    }
    for a1 in 0..=2u32 {
        for a2 in 0..=2 - a1 {
            for a3 in 0..=2 - a1 - a2 {
                out.push(Shape::new(3, vec![a1, a2, a3]).unwrap());
            }
        }
    }
    out
}

#[test]
fn check_1_push_and_unpush_on_the_worked_example() {
    let start = Instant::now();
    let t = worked_example();
    let dble: Vec<Vec<i32>> = t
        .dble()
        .columns()
        .iter()
        .map(|c| c.entries().iter().map(|e| e.raw()).collect())
        .collect();
    let dble_ok = dble
        == vec![
            vec![1, 2, 5, -3],
            vec![1, 3, -5, -2],
            vec![1, 3, -2],
            vec![2, 3, -1],
            vec![2, 5],
            vec![2, -5],
        ];
    let (u, trace) = push(&t).unwrap();
    let u_ok = format_tableau(&u) == "n 5\ncol 1 3 0 -2\ncol 2 0 -1\n"
        && u.shape() == Shape::parse("0,0,1,1,0").unwrap()
        && u.is_quasistandard()
        && trace.removals.len() == 1
        && trace.removals[0].height == 2
        && trace.removals[0].passes.len() == 2;
    let back_ok = unpush(&u, &t.shape()).unwrap() == t;
    let fast = start.elapsed().as_secs_f64() < 1.0;
    report(
        "1 (push and unpush round trip on the worked example)",
        dble_ok && u_ok && back_ok && fast,
    );
}

#[test]
fn check_2_column_presentation_conversion() {
    let n = 3;
    let e = |r: i32| Entry::new(r, n).unwrap();
    let lit = [e(3), Entry::zero(), e(-3)];
    let col = lecouvey_from(n, &lit).unwrap();
    let raws = |v: &[Entry]| v.iter().map(|x| x.raw()).collect::<Vec<_>>();
    let back_ok = raws(&col.entries()) == vec![2, 0, -2]
        && col.i() == LetterSet::from_iter([2usize])
        && col.k() == LetterSet::from_iter([1usize]);
    let (l, r) = lecouvey_split(n, &lit).unwrap();
    let split_ok = raws(&l) == vec![1, 2, -3] && raws(&r) == vec![3, -2, -1];
    let there = lecouvey_to(&col);
    let round_ok = raws(&there) == vec![3, 0, -3];
    report(
        "2 (column presentation conversion and split)",
        back_ok && split_ok && round_ok,
    );
}

#[test]
fn check_3_counts_match_the_dimension_formula() {
    let start = Instant::now();
    let mut ok = true;
    for shape in shape_pool() {
        let count = enumerate_tableaux(&shape).unwrap().len();
        let dim = weyl_dim(&shape);
        if BigInt::from(count) != dim {
            eprintln!("shape {}: {} tableaux vs dimension {}", shape, count, dim);
            ok = false;
        }
    }
    let fast = start.elapsed().as_secs_f64() < 300.0;
    report("3 (tableau counts match the dimension formula)", ok && fast);
}

#[test]
fn check_4_push_restricts_to_a_bijection() {
    let mut ok = true;
    for shape in shape_pool() {
        let all = enumerate_tableaux(&shape).unwrap();
        let mut image: BTreeMap<String, Vec<String>> = BTreeMap::new();
        let mut seen = BTreeSet::new();
        for t in &all {
            let (u, _) = push(t).unwrap();
            if !u.is_quasistandard() || !u.shape().leq(&shape) {
                eprintln!("push left the target set at shape {}", shape);
                ok = false;
            }
            let key = format_tableau(&u);
            if !seen.insert(key.clone()) {
                eprintln!("push is not injective at shape {}", shape);
                ok = false;
            }
            image.entry(u.shape().to_string()).or_default().push(key);
            let back = unpush(&u, &shape).unwrap();
            if back != *t {
                eprintln!("unpush does not invert push at shape {}", shape);
                ok = false;
            }
        }
        // the image is exactly the union of the quasistandard sets of the
        // dominated shapes, and unpush hits every member
        for mu in shape.dominated() {
            let quasi = enumerate_quasistandard(&mu).unwrap();
            let got: BTreeSet<String> = image
                .remove(&mu.to_string())
                .unwrap_or_default()
                .into_iter()
                .collect();
            let want: BTreeSet<String> = quasi.iter().map(format_tableau).collect();
            if got != want {
                eprintln!(
                    "image mismatch at shape {} piece {}: {} vs {}",
                    shape,
                    mu,
                    got.len(),
                    want.len()
                );
                ok = false;
            }
            for u in &quasi {
                let t = unpush(u, &shape).unwrap();
                let (again, _) = push(&t).unwrap();
                if again != *u {
                    eprintln!("push does not invert unpush at shape {}", shape);
                    ok = false;
                }
            }
        }
        if !image.is_empty() {
            eprintln!("image contains unexpected shapes at {}", shape);
            ok = false;
        }
    }
    report("4 (push is a bijection onto the quasistandard pieces)", ok);
}

#[test]
fn check_5_slide_trace_on_the_worked_skew_example() {
    let doc = parse_document("n 3\ncol skip=1 * 3\ncol 1 0 -3\n").unwrap();
    let (slid, trace) = ojdt_slide(&doc.skew).unwrap();
    let final_ok = slid
        == parse_document("n 3\ncol skip=1 3 0\ncol 1 -3\n")
            .unwrap()
            .skew
        && trace.exit == (3, 1);
    let layouts: Vec<Vec<(usize, Vec<Option<i32>>)>> =
        trace.doubles.iter().map(TlSkew::layout).collect();
    let want: Vec<Vec<(usize, Vec<Option<i32>>)>> = vec![
        // initial double
        vec![
            (1, vec![None, Some(3)]),
            (1, vec![None, Some(3)]),
            (0, vec![Some(1), Some(2), Some(-3)]),
            (0, vec![Some(1), Some(-3), Some(-2)]),
        ],
        // right star crosses into the third column
        vec![
            (1, vec![None, Some(3)]),
            (1, vec![Some(2), Some(3)]),
            (0, vec![Some(1), None, Some(-3)]),
            (0, vec![Some(1), Some(-3), Some(-2)]),
        ],
        // right star drops one row
        vec![
            (1, vec![None, Some(3)]),
            (1, vec![Some(2), Some(3)]),
            (0, vec![Some(1), Some(-3), None]),
            (0, vec![Some(1), Some(-3), Some(-2)]),
        ],
        // right star crosses into the fourth column (barred move)
        vec![
            (1, vec![None, Some(3)]),
            (1, vec![Some(2), Some(3)]),
            (0, vec![Some(1), Some(-3), Some(-2)]),
            (0, vec![Some(1), Some(-3), None]),
        ],
        // right star exits
        vec![
            (1, vec![None, Some(3)]),
            (1, vec![Some(2), Some(3)]),
            (0, vec![Some(1), Some(-3), Some(-2)]),
            (0, vec![Some(1), Some(-3)]),
        ],
        // left star crosses into the second column
        vec![
            (1, vec![Some(2), Some(3)]),
            (1, vec![None, Some(3)]),
            (0, vec![Some(1), Some(-3), Some(-2)]),
            (0, vec![Some(1), Some(-3)]),
        ],
        // left star drops one row
        vec![
            (1, vec![Some(2), Some(3)]),
            (1, vec![Some(3), None]),
            (0, vec![Some(1), Some(-3), Some(-2)]),
            (0, vec![Some(1), Some(-3)]),
        ],
        // left star crosses into the third column (barred move)
        vec![
            (1, vec![Some(2), Some(3)]),
            (1, vec![Some(3), Some(-2)]),
            (0, vec![Some(1), Some(-3), None]),
            (0, vec![Some(1), Some(-3)]),
        ],
        // left star exits
        vec![
            (1, vec![Some(2), Some(3)]),
            (1, vec![Some(3), Some(-2)]),
            (0, vec![Some(1), Some(-3)]),
            (0, vec![Some(1), Some(-3)]),
        ],
    ];
    let trace_ok = layouts == want;
    if !trace_ok {
        for l in &layouts {
            eprintln!("{:?}", l);
        }
    }
    report(
        "5 (doubled slide trace on the worked skew example)",
        final_ok && trace_ok,
    );
}

#[test]
fn check_6_direct_moves_match_the_doubled_slides() {
    let mut ok = true;
    let mut instances = 0usize;
    for shape in shape_pool() {
        for t in enumerate_tableaux(&shape).unwrap() {
            let (_, trace) = push(&t).unwrap();
            for rem in &trace.removals {
                for pass in &rem.passes {
                    instances += 1;
                    // the hole only travels along one row
                    for side in &pass.slide.steps {
                        let rows: BTreeSet<usize> = side.iter().map(|s| s.row).collect();
                        if rows.len() > 1 || side.iter().any(|s| s.mv == TlMove::Down) {
                            eprintln!("non-horizontal pass at shape {}", shape);
                            ok = false;
                        }
                    }
                    // the direct one-row form agrees with the doubled slide
                    let (via_double, _) = ojdt_slide_horizontal(&pass.start).unwrap();
                    match ojdt_direct(&pass.start) {
                        Ok((direct, exit)) => {
                            if direct != via_double || exit != pass.exit {
                                eprintln!("direct slide mismatch at shape {}", shape);
                                ok = false;
                            }
                        }
                        Err(e) => {
                            eprintln!("direct slide error at shape {}: {}", shape, e);
                            ok = false;
                        }
                    }
                }
            }
        }
    }
    report(
        &format!(
            "6 (direct one-row slides match the doubled slides on {} instances)",
            instances
        ),
        ok && instances > 0,
    );
}

fn rotate_double(t: &TlSkew) -> TlSkew {
    let height = t.cols.iter().map(TlColumn::bottom).max().unwrap_or(0);
    TlSkew {
        n: t.n,
        cols: t
            .cols
            .iter()
            .rev()
            .map(|c| TlColumn {
                offset: height - c.bottom(),
                cells: c
                    .cells
                    .iter()
                    .rev()
                    .map(|cell| match cell {
                        Cell::Star => Cell::Star,
                        Cell::Entry(e) => Cell::Entry(e.bar_swap()),
                    })
                    .collect(),
            })
            .collect(),
    }
}

#[test]
fn check_7_rotation_commutes_with_doubling() {
    let mut ok = true;
    for shape in shape_pool() {
        for t in enumerate_tableaux(&shape).unwrap() {
            let skew = SkewTableau::from_tableau(&t);
            if skew.sigma().sigma() != skew {
                eprintln!("rotation is not an involution at shape {}", shape);
                ok = false;
            }
            let (d, _) = double_skew(&skew).unwrap();
            let (ds, _) = double_skew(&skew.sigma()).unwrap();
            if ds != rotate_double(&d) {
                eprintln!("doubling does not commute with rotation at shape {}", shape);
                ok = false;
            }
        }
    }
    report("7 (rotation commutes with doubling and is involutive)", ok);
}

#[test]
fn check_8_side_sets_against_brute_force() {
    let start = Instant::now();
    let mut ok = true;
    let universe = LetterSet::interval(8);
    let mut xs = Vec::new();
    for k in 0..=8 {
        xs.extend(subsets_of(universe, k));
    }
    for &x in &xs {
        let mut subs = Vec::new();
        for k in 0..=x.len() {
            subs.extend(subsets_of(x, k));
        }
        for &s in &subs {
            // the greedy smallest right-side set is the elementwise
            // minimum of the brute-force family
            let family = right_side_sets(x, s);
            let brute = family
                .iter()
                .copied()
                .find(|j| family.iter().all(|o| elementwise_leq(*j, *o)));
            if ortaquin::right_delta(x, s) != brute {
                eprintln!("smallest right-side set mismatch for {:?} in {:?}", s, x);
                ok = false;
            }
            // and dually for the greatest left-side set
            let family = left_side_sets(x, s);
            let brute = family
                .iter()
                .copied()
                .find(|i| family.iter().all(|o| elementwise_leq(*o, *i)));
            if ortaquin::left_gamma(x, s) != brute {
                eprintln!("greatest left-side set mismatch for {:?} in {:?}", s, x);
                ok = false;
            }
        }
    }
    // spot values on X = [1,10]
    let x = LetterSet::interval(10);
    let set = |v: &[usize]| LetterSet::from_iter(v.iter().copied());
    let golden = ortaquin::left_gamma(x, set(&[2, 6])) == Some(set(&[1, 5]))
        && ortaquin::left_gamma(x, set(&[1, 3])).is_none()
        && ortaquin::right_delta(x, set(&[2, 6])) == Some(set(&[3, 7]));
    let fast = start.elapsed().as_secs_f64() < 60.0;
    report(
        "8 (side-set recursions agree with brute force)",
        ok && golden && fast,
    );
}

fn elementwise_leq(a: LetterSet, b: LetterSet) -> bool {
    a.len() == b.len() && a.iter().zip(b.iter()).all(|(x, y)| x <= y)
}

#[test]
fn check_9_spin_column_count() {
    let mut ok = true;
    for n in 1..=5usize {
        if spin_columns(n).len() != 1 << n {
            eprintln!("wrong spin column count at rank {}", n);
            ok = false;
        }
    }
    for n in 1..=10usize {
        let mut a = vec![0u32; n];
        a[n - 1] = 1;
        let shape = Shape::new(n, a).unwrap();
        if weyl_dim(&shape) != BigInt::from(1u64 << n) {
            eprintln!("wrong spin dimension at rank {}", n);
            ok = false;
        }
    }
    report("9 (spin columns count two to the rank)", ok);
}
