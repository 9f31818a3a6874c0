//! One line per acceptance criterion, each with its own tolerance.

use std::process::Command;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use wqo::kernel::derive::{derive_full_presentation, Shortened};
use wqo::kernel::{self, canonize_down};
use wqo::oracle::{self, Budget, Status};
use wqo::sequences::higman;
use wqo::termlang::{eval, parse_query, parse_type};
use wqo::transformers::naturals_up_to;
use wqo::{Atom, Element, Presentation, UpSet};
use wqo_cli::coverability::{coverability, forward_search, PetriNet};

type Outcome = Result<String, String>;

fn eval_text(ty: &str, expr: &str) -> String {
    let t = parse_type(ty).unwrap();
    let q = parse_query(expr, &t).unwrap();
    eval(&t.presentation().unwrap(), &q).unwrap().to_string()
}

fn expect(got: String, want: &str, what: &str) -> Result<(), String> {
    if got == want {
        Ok(())
    } else {
        Err(format!("{what}: got `{got}`, want `{want}`"))
    }
}

fn within(limit: Duration, start: Instant) -> Result<(), String> {
    let t = start.elapsed();
    if t <= limit {
        Ok(())
    } else {
        Err(format!("took {t:?}, limit {limit:?}"))
    }
}

fn plane_goldens() -> Outcome {
    let start = Instant::now();
    let n2 = "Prod(Nat,Nat)";
    let u = "up((3,5)) | up((4,3)) | up((5,1)) | up((6,0))";
    let v = "up((0,6)) | up((6,5)) | up((8,4)) | up((9,3)) | up((10,1)) | up((11,0))";
    expect(
        eval_text(n2, &format!("{u} | {v}")),
        "up((0,6)) | up((3,5)) | up((4,3)) | up((5,1)) | up((6,0))",
        "union",
    )?;
    expect(
        eval_text(n2, &format!("({u}) & ({v})")),
        "up((3,6)) | up((6,5)) | up((8,4)) | up((9,3)) | up((10,1)) | up((11,0))",
        "intersection",
    )?;
    expect(
        eval_text(n2, &format!("comp({u})")),
        "dw((2,omega)) | dw((3,4)) | dw((4,2)) | dw((5,0))",
        "complement of U",
    )?;
    expect(
        eval_text(n2, "comp(dw((2,3)))"),
        "up((0,4)) | up((3,0))",
        "complement of dw((2,3))",
    )?;
    expect(
        eval_text(n2, &format!("in((3,5), {u})")),
        "true",
        "membership",
    )?;
    expect(
        eval_text(n2, &format!("in((5,0), {u})")),
        "false",
        "membership",
    )?;
    expect(
        eval_text(n2, &format!("in((7,4), {v})")),
        "false",
        "membership",
    )?;
    within(Duration::from_secs(1), start)?;
    Ok(format!("{:?}", start.elapsed()))
}

fn subword_goldens() -> Outcome {
    let start = Instant::now();
    let ty = "Star(Fin{a,b,c})";
    expect(
        eval_text(ty, "in([b,a,c,a,b,a,b], up([a,b,b,a]))"),
        "false",
        "abba embedding",
    )?;
    let listed = "up([a,b,c,a]) | up([a,c,b,a]) | up([a,c,a,b]) | up([c,a,b])";
    let meet = "up([a,b]) & up([c,a])";
    expect(
        eval_text(ty, &format!("subset({meet}, {listed})")),
        "true",
        "meet inside listed",
    )?;
    expect(
        eval_text(ty, &format!("subset({listed}, {meet})")),
        "true",
        "listed inside meet",
    )?;
    expect(
        eval_text(ty, meet),
        "up([a,b,c,a]) | up([a,c,b,a]) | up([c,a,b])",
        "canonical meet",
    )?;
    expect(
        eval_text(ty, "comp(up([b,a]) | up([c]))"),
        "star(dw(a)).star(dw(b))",
        "complement",
    )?;
    within(Duration::from_secs(1), start)?;
    Ok(format!("{:?}", start.elapsed()))
}

fn random_product(rng: &mut ChaCha8Rng, base: &Presentation, syms: &[&str]) -> Vec<Atom> {
    let letter = |k: usize| base.principal(&Element::sym(syms[k]));
    (0..rng.gen_range(0..=4))
        .map(|_| {
            if rng.gen_bool(0.5) {
                let ks: Vec<usize> = (0..syms.len()).filter(|_| rng.gen_bool(0.5)).collect();
                let ks = if ks.is_empty() {
                    vec![rng.gen_range(0..syms.len())]
                } else {
                    ks
                };
                Atom::Star(canonize_down(&**base, ks.into_iter().map(letter).collect()))
            } else {
                Atom::One(letter(rng.gen_range(0..syms.len())))
            }
        })
        .collect()
}

/// `p` with a redundant atom inserted, which denotes the same ideal.
fn padded(rng: &mut ChaCha8Rng, p: &[Atom]) -> Vec<Atom> {
    let stars: Vec<usize> = (0..p.len())
        .filter(|&k| matches!(p[k], Atom::Star(_)))
        .collect();
    let mut q = p.to_vec();
    if let Some(&k) = stars.get(rng.gen_range(0..stars.len().max(1))) {
        let Atom::Star(d) = &p[k] else { unreachable!() };
        let inside = Atom::One(d.ideals[rng.gen_range(0..d.ideals.len())].clone());
        q.insert(k + rng.gen_range(0..=1), inside);
    }
    q
}

fn reduced_uniqueness() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let alphabets: [&[&str]; 3] = [&["a"], &["a", "b"], &["a", "b", "c"]];
    let mut equal_pairs = 0;
    for round in 0..1000 {
        let syms = alphabets[round % 3];
        let base = parse_type(&format!("Fin{{{}}}", syms.join(",")))
            .unwrap()
            .presentation()
            .unwrap();
        let (h, _) = higman(base.clone());
        let p = random_product(&mut rng, &base, syms);
        let q = if rng.gen_bool(0.5) {
            padded(&mut rng, &p)
        } else {
            random_product(&mut rng, &base, syms)
        };
        let mutual = h.product_leq(&p, &q) && h.product_leq(&q, &p);
        equal_pairs += mutual as usize;
        if (h.reduce(p.clone()) == h.reduce(q.clone())) != mutual {
            return Err(format!("pair {round}: {p:?} and {q:?}"));
        }
    }
    Ok(format!("1000 pairs, {equal_pairs} equivalent"))
}

fn oracle_suite() -> Outcome {
    let start = Instant::now();
    let b = Budget::new(60, 60);
    let mut spaces: Vec<(String, Presentation, Budget)> = [
        "Prod(Nat,Nat)",
        "Star(Fin{a,b,c})",
        "Pset(Nat)",
        "Stutter(Nat)",
        "Conj(Fin{a,b})",
        "Sum(Nat,Fin{a,b})",
        "LexSum(Fin{a,b | a<b},Nat)",
        "Sum(LexSum(Nat,Fin{a}),Prod(Fin{a,b},Nat))",
        "Ord[w^2]",
        "Ord[w^w+1]",
        "Pset(Fin{a,b,c | a<b})",
    ]
    .iter()
    .map(|ty| {
        (
            ty.to_string(),
            parse_type(ty).unwrap().presentation().unwrap(),
            b,
        )
    })
    .collect();
    let small = Budget::new(24, 24);
    for ty in ["Star(Prod(Nat,Nat))", "Mset(Fin{a,b})"] {
        spaces.push((
            ty.to_string(),
            parse_type(ty).unwrap().presentation().unwrap(),
            small,
        ));
    }
    spaces.push((
        "induced {0..5} of Nat".to_string(),
        naturals_up_to(5).into_presentation(),
        b,
    ));
    let mut undecided = Vec::new();
    for (name, p, budget) in &spaces {
        let r = oracle::check_presentation(p, budget, 17).map_err(|e| e.to_string())?;
        if let Some(f) = r.failures().next() {
            return Err(format!(
                "{name}: {} {}",
                f.check,
                f.detail.clone().unwrap_or_default()
            ));
        }
        let n = r
            .checks
            .iter()
            .filter(|c| c.status == Status::Inconclusive)
            .count();
        if n > 0 {
            undecided.push(format!("{name}: {n}"));
        }
    }
    within(Duration::from_secs(300), start)?;
    Ok(format!(
        "{} types in {:?}; inconclusive checks {}",
        spaces.len(),
        start.elapsed(),
        if undecided.is_empty() {
            "none".to_string()
        } else {
            undecided.join(", ")
        }
    ))
}

fn derived_agreement() -> Outcome {
    for ty in ["Nat", "Fin{a,b,c}", "Prod(Nat,Nat)"] {
        let p = parse_type(ty).unwrap().presentation().unwrap();
        let d = derive_full_presentation(Shortened(p.clone())).map_err(|e| e.to_string())?;
        let m = oracle::compare(&p, &d, &Budget::new(60, 60), 500, 5).map_err(|e| e.to_string())?;
        if let Some(first) = m.first() {
            return Err(format!("{ty}: {} mismatches, first {first}", m.len()));
        }
    }
    Ok("3 spaces, 500 calls each, no mismatch".to_string())
}

/// Minimal words above both `aⁿ` and `bⁿ`, by exhaustive search.
fn minimal_shuffles(n: usize) -> usize {
    let count = |w: &[u8], c: u8| w.iter().filter(|&&x| x == c).count();
    let above: Vec<Vec<u8>> = (0..=2 * n)
        .flat_map(|len| {
            (0..1u32 << len).map(move |bits| {
                (0..len)
                    .map(|k| if bits >> k & 1 == 1 { b'b' } else { b'a' })
                    .collect::<Vec<u8>>()
            })
        })
        .filter(|w| count(w, b'a') >= n && count(w, b'b') >= n)
        .collect();
    let embeds = |u: &[u8], v: &[u8]| {
        let mut it = v.iter();
        u.iter().all(|x| it.any(|y| y == x))
    };
    above
        .iter()
        .filter(|w| !above.iter().any(|v| v.len() < w.len() && embeds(v, w)))
        .count()
}

fn best_of(p: &Presentation, b: &Budget, runs: usize) -> Duration {
    (0..runs)
        .map(|_| {
            let start = Instant::now();
            let r = oracle::check_presentation(p, b, 3).unwrap();
            assert!(r.passed());
            start.elapsed()
        })
        .min()
        .unwrap()
}

fn complexity_witnesses() -> Outcome {
    let base = parse_type("Fin{a,b}").unwrap().presentation().unwrap();
    let (h, _) = higman(base);
    for (n, frozen) in [(1, 2), (2, 6), (3, 20), (4, 70)] {
        let a = Element::word(&"a".repeat(n));
        let b = Element::word(&"b".repeat(n));
        let got = kernel::intersect_up(&*h, &UpSet::new(vec![a]), &UpSet::new(vec![b]))
            .generators
            .len();
        let brute = minimal_shuffles(n);
        if got != frozen || brute != frozen {
            return Err(format!(
                "n = {n}: computed {got}, exhaustive {brute}, expected {frozen}"
            ));
        }
    }
    let b = Budget::new(60, 60);
    let nat = parse_type("Nat").unwrap().presentation().unwrap();
    let prod = parse_type("Prod(Nat,Nat)").unwrap().presentation().unwrap();
    let (t_nat, t_prod) = (best_of(&nat, &b, 5), best_of(&prod, &b, 5));
    let ratio = t_prod.as_secs_f64() / (2.0 * t_nat.as_secs_f64());
    if ratio > 4.0 {
        return Err(format!(
            "product suite {t_prod:?} is {ratio:.2}x its components"
        ));
    }
    Ok(format!(
        "counts 2, 6, 20, 70; product/components runtime {ratio:.2}x"
    ))
}

fn net(file: &str) -> PetriNet {
    let path = format!("{}/nets/{file}", env!("CARGO_MANIFEST_DIR"));
    PetriNet::from_json(&std::fs::read_to_string(path).unwrap()).unwrap()
}

fn coverability_demo() -> Outcome {
    let mut notes = Vec::new();
    for (file, init, target, want) in [
        ("doubling.json", [1, 0], [3, 0], true),
        ("swap.json", [1, 0], [1, 1], false),
    ] {
        let start = Instant::now();
        let n = net(file);
        let c = coverability(&n, &init, &target).map_err(|e| e.to_string())?;
        let witness = forward_search(&n, &init, &target, 6);
        if c.coverable != witness.is_some() || c.coverable != want {
            return Err(format!(
                "{file}: backward {}, forward {witness:?}",
                c.coverable
            ));
        }
        let space = n.state_space();
        if n.step(&space, &c.basis) != c.basis {
            return Err(format!("{file}: basis {} not closed", c.basis));
        }
        within(Duration::from_secs(1), start)?;
        notes.push(format!("{file} {} in {:?}", c.coverable, start.elapsed()));
    }
    Ok(notes.join(", "))
}

fn run_cli(args: &[&str]) -> (Option<i32>, Vec<u8>) {
    let out = Command::new(env!("CARGO_BIN_EXE_wqo"))
        .args(args)
        .output()
        .unwrap();
    (out.status.code(), out.stdout)
}

fn determinism() -> Outcome {
    let nets = format!("{}/nets/doubling.json", env!("CARGO_MANIFEST_DIR"));
    let commands: Vec<Vec<&str>> = vec![
        vec![
            "check",
            "--type",
            "Star(Fin{a,b})",
            "--budget",
            "30",
            "--seed",
            "9",
        ],
        vec![
            "--json",
            "check",
            "--type",
            "Prod(Nat,Nat)",
            "--budget",
            "40",
            "--seed",
            "9",
        ],
        vec![
            "eval",
            "--type",
            "Star(Fin{a,b,c})",
            "--expr",
            "comp(up([a,b]) & up([c,a]))",
        ],
        vec!["enum", "--type", "Mset(Fin{a,b})", "--budget", "20"],
        vec!["cover", "--net", &nets, "--init", "1,0", "--target", "3,0"],
    ];
    for args in &commands {
        let (first, second) = (run_cli(args), run_cli(args));
        if first != second || first.0 != Some(0) {
            return Err(format!(
                "`wqo {}` differs between runs or failed",
                args.join(" ")
            ));
        }
    }
    let seeded = |s: u64| {
        let p = parse_type("Conj(Fin{a,b})")
            .unwrap()
            .presentation()
            .unwrap();
        oracle::check_presentation(&p, &Budget::new(30, 30), s)
            .unwrap()
            .to_json_lines()
    };
    if seeded(4) != seeded(4) {
        return Err("oracle report differs for one seed".to_string());
    }
    Ok(format!(
        "{} commands repeated byte for byte",
        commands.len()
    ))
}

type Criterion = (&'static str, fn() -> Outcome);

#[test]
fn acceptance() {
    let criteria: [Criterion; 8] = [
        ("1 plane goldens", plane_goldens),
        ("2 subword goldens", subword_goldens),
        ("3 reduced products are unique", reduced_uniqueness),
        ("4 oracle agreement", oracle_suite),
        ("5 derived presentations agree", derived_agreement),
        ("6 complexity witnesses", complexity_witnesses),
        ("7 coverability", coverability_demo),
        ("8 determinism", determinism),
    ];
    let mut failed = Vec::new();
    for (name, check) in criteria {
        match check() {
            Ok(note) => println!("PASS {name}: {note}"),
            Err(why) => {
                println!("FAIL {name}: {why}");
                failed.push(name);
            }
        }
    }
    // an oracle that misses a corrupted complement would make criterion 4 vacuous
    let broken = oracle::with_broken_complement(
        parse_type("Prod(Nat,Nat)").unwrap().presentation().unwrap(),
    );
    let r = oracle::check_presentation(&broken, &Budget::new(40, 40), 1).unwrap();
    assert_eq!(r.status_of("complement/extensional"), Some(Status::Fail));
    assert!(failed.is_empty(), "failed: {failed:?}");
}
