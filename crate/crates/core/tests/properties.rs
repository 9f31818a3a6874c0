use proptest::prelude::*;
use proptest::sample::Index;

use wqo::base::{cnf_leq, Cnf};
use wqo::kernel::derive::{derive_full_presentation, Shortened};
use wqo::kernel::{self, canonize_down, canonize_up, ClosedSet, Presentation};
use wqo::oracle::{self, Budget};
use wqo::sequences::{conjugacy, higman, stuttering};
use wqo::termlang::{parse_ideal, parse_type, parse_value, TypeExpr};
use wqo::transformers::naturals_up_to;
use wqo::{Atom, DownSet, Element, Ideal, UpSet, Wqo};

fn space(ty: &str) -> (TypeExpr, Presentation) {
    let t = parse_type(ty).unwrap();
    let p = t.presentation().unwrap();
    (t, p)
}

fn universe(p: &Presentation, n: usize) -> Vec<Element> {
    oracle::enumerate_space(&**p, &Budget::new(n, n)).unwrap()
}

fn pick(xs: &[Element], ix: &[Index]) -> Vec<Element> {
    ix.iter().map(|i| i.get(xs).clone()).collect()
}

fn ext(p: &Presentation, s: &ClosedSet, u: &[Element]) -> Vec<Element> {
    oracle::extension_of(&**p, s, u)
}

const SPACES: [&str; 4] = [
    "Prod(Nat,Nat)",
    "Star(Fin{a,b})",
    "Pset(Nat)",
    "Sum(Nat,Fin{a,b})",
];

fn up_sets() -> impl Strategy<Value = (usize, Vec<Index>, Vec<Index>)> {
    (
        0..SPACES.len(),
        prop::collection::vec(any::<Index>(), 0..4),
        prop::collection::vec(any::<Index>(), 0..4),
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn canonize_is_idempotent_and_keeps_denotation((k, a, _) in up_sets()) {
        let (_, p) = space(SPACES[k]);
        let u = universe(&p, 40);
        let raw = pick(&u, &a);
        let c = canonize_up(&*p, raw.clone());
        prop_assert_eq!(canonize_up(&*p, c.generators.clone()), c.clone());
        let raw_ext: Vec<Element> =
            u.iter().filter(|x| raw.iter().any(|g| p.leq(g, x))).cloned().collect();
        prop_assert_eq!(ext(&p, &ClosedSet::Up(c), &u), raw_ext);
    }

    #[test]
    fn canonical_forms_are_unique((k, a, b) in up_sets()) {
        let (_, p) = space(SPACES[k]);
        let u = universe(&p, 40);
        let s = ClosedSet::Up(canonize_up(&*p, pick(&u, &a)));
        let t = ClosedSet::Up(canonize_up(&*p, pick(&u, &b)));
        let same = kernel::subset(&*p, &s, &t).unwrap() && kernel::subset(&*p, &t, &s).unwrap();
        prop_assert_eq!(same, s == t);
        prop_assert_eq!(same, s.to_string() == t.to_string());
    }

    #[test]
    fn complement_is_an_involution((k, a, _) in up_sets()) {
        let (_, p) = space(SPACES[k]);
        let u = universe(&p, 40);
        let s = ClosedSet::Up(canonize_up(&*p, pick(&u, &a)));
        let c = kernel::complement(&*p, &s).unwrap();
        prop_assert_eq!(kernel::complement(&*p, &c).unwrap(), s.clone());
        let cc = kernel::complement(&*p, &kernel::complement(&*p, &c).unwrap()).unwrap();
        prop_assert_eq!(cc, c);
    }

    #[test]
    fn union_and_intersection_laws((k, a, b) in up_sets()) {
        let (_, p) = space(SPACES[k]);
        let w = &*p;
        let u = universe(&p, 40);
        let s = ClosedSet::Up(canonize_up(w, pick(&u, &a)));
        let t = ClosedSet::Up(canonize_up(w, pick(&u, &b)));
        let st = kernel::union(w, &s, &t).unwrap();
        prop_assert_eq!(&st, &kernel::union(w, &t, &s).unwrap());
        prop_assert_eq!(&kernel::union(w, &s, &s).unwrap(), &s);
        let meet = kernel::intersect(w, &s, &t).unwrap();
        prop_assert_eq!(&meet, &kernel::intersect(w, &t, &s).unwrap());
        prop_assert_eq!(&kernel::intersect(w, &s, &st).unwrap(), &s);
        prop_assert_eq!(&kernel::union(w, &s, &meet).unwrap(), &s);
        // De Morgan, on both polarities
        let (cs, ct) = (kernel::complement(w, &s).unwrap(), kernel::complement(w, &t).unwrap());
        prop_assert_eq!(kernel::complement(w, &st).unwrap(), kernel::intersect(w, &cs, &ct).unwrap());
        prop_assert_eq!(kernel::complement(w, &meet).unwrap(), kernel::union(w, &cs, &ct).unwrap());
        let both = kernel::intersect(w, &cs, &ct).unwrap();
        prop_assert_eq!(ext(&p, &both, &u), u.iter().filter(|x| !ext(&p, &st, &u).contains(x)).cloned().collect::<Vec<_>>());
    }

    #[test]
    fn member_and_subset_agree_with_extensions((k, a, b) in up_sets()) {
        let (_, p) = space(SPACES[k]);
        let w = &*p;
        let u = universe(&p, 40);
        let s = kernel::complement(w, &ClosedSet::Up(canonize_up(w, pick(&u, &a)))).unwrap();
        let t = kernel::complement(w, &ClosedSet::Up(canonize_up(w, pick(&u, &b)))).unwrap();
        let es = ext(&p, &s, &u);
        for x in &u {
            prop_assert_eq!(kernel::member(w, &s, x).unwrap(), es.contains(x));
        }
        if kernel::subset(w, &s, &t).unwrap() {
            let et = ext(&p, &t, &u);
            prop_assert!(es.iter().all(|x| et.contains(x)));
        }
    }

    #[test]
    fn derived_presentation_agrees(seed in any::<u64>(), k in 0..3usize) {
        let (_, p) = space(["Nat", "Fin{a,b,c | a<b}", "Prod(Nat,Nat)"][k]);
        let d = derive_full_presentation(Shortened(p.clone())).unwrap();
        let m = oracle::compare(&p, &d, &Budget::new(40, 40), 70, seed).unwrap();
        prop_assert!(m.is_empty(), "{:?}", m);
    }

    #[test]
    fn ordinal_comparison_is_a_total_order(a in 0usize..40, b in 0usize..40, c in 0usize..40) {
        let all: Vec<Cnf> = (1..=6).flat_map(Cnf::of_size).collect();
        let (x, y, z) = (&all[a % all.len()], &all[b % all.len()], &all[c % all.len()]);
        prop_assert!(cnf_leq(x, y) || cnf_leq(y, x));
        prop_assert_eq!(cnf_leq(x, y) && cnf_leq(y, x), x == y);
        if cnf_leq(x, y) && cnf_leq(y, z) {
            prop_assert!(cnf_leq(x, z));
        }
    }
}

fn letters(syms: &str) -> Presentation {
    space(&format!(
        "Fin{{{}}}",
        syms.chars().map(String::from).collect::<Vec<_>>().join(",")
    ))
    .1
}

fn word(s: &str) -> Element {
    Element::word(s)
}

fn atom_strategy(syms: &'static str) -> impl Strategy<Value = (bool, Vec<usize>)> {
    (
        any::<bool>(),
        prop::collection::vec(0..syms.len(), 1..=syms.len()),
    )
}

fn build_product(base: &Presentation, syms: &str, shape: &[(bool, Vec<usize>)]) -> Vec<Atom> {
    let letter = |k: usize| base.principal(&Element::sym(&syms[k..=k]));
    shape
        .iter()
        .map(|(star, ks)| {
            if *star {
                Atom::Star(canonize_down(
                    &**base,
                    ks.iter().map(|&k| letter(k)).collect(),
                ))
            } else {
                Atom::One(letter(ks[0]))
            }
        })
        .collect()
}

fn words_up_to(syms: &str, len: usize) -> Vec<Element> {
    let mut out = vec![String::new()];
    let mut frontier = vec![String::new()];
    for _ in 0..len {
        frontier = frontier
            .iter()
            .flat_map(|w| syms.chars().map(move |c| format!("{w}{c}")))
            .collect();
        out.extend(frontier.iter().cloned());
    }
    out.iter().map(|w| word(w)).collect()
}

fn products() -> impl Strategy<Value = Vec<(bool, Vec<usize>)>> {
    prop::collection::vec(atom_strategy("abc"), 0..5)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn reduced_products_are_unique(p in products(), q in products()) {
        let base = letters("abc");
        let (h, _) = higman(base.clone());
        let (p, q) = (build_product(&base, "abc", &p), build_product(&base, "abc", &q));
        let equal = h.product_leq(&p, &q) && h.product_leq(&q, &p);
        prop_assert_eq!(h.reduce(p) == h.reduce(q), equal);
    }

    #[test]
    fn product_inclusion_agrees_with_words(p in products(), q in products()) {
        let base = letters("abc");
        let (h, hp) = higman(base.clone());
        let (p, q) = (build_product(&base, "abc", &p), build_product(&base, "abc", &q));
        let (ip, iq) = (Ideal::Product(p.clone()), Ideal::Product(q.clone()));
        let inside = words_up_to("abc", 5).iter().all(|x| {
            let px = hp.principal(x);
            !hp.ideal_leq(&px, &ip) || hp.ideal_leq(&px, &iq)
        });
        // words of length five are enough to separate products of four atoms
        prop_assert_eq!(h.product_leq(&p, &q), inside);
    }

    #[test]
    fn complementing_a_product_twice_recovers_it(p in products()) {
        let base = letters("abc");
        let (h, hp) = higman(base.clone());
        let d = canonize_down(&*hp, vec![Ideal::Product(h.reduce(build_product(&base, "abc", &p)))]);
        let back = kernel::complement_up(&*hp, &kernel::complement_down(&*hp, &d));
        prop_assert_eq!(back, d);
    }
}

fn embeds_somehow(u: &[Element], v: &[Element], leq: &dyn Fn(&Element, &Element) -> bool) -> bool {
    // exhaustive search over injective maps that respect the order of neither
    fn go(
        u: &[Element],
        v: &[Element],
        used: &mut Vec<bool>,
        leq: &dyn Fn(&Element, &Element) -> bool,
    ) -> bool {
        let Some((x, rest)) = u.split_first() else {
            return true;
        };
        (0..v.len()).any(|k| {
            if used[k] || !leq(x, &v[k]) {
                return false;
            }
            used[k] = true;
            let ok = go(rest, v, used, leq);
            used[k] = false;
            ok
        })
    }
    go(u, v, &mut vec![false; v.len()], leq)
}

fn stutter_brute(u: &[Element], v: &[Element], leq: &dyn Fn(&Element, &Element) -> bool) -> bool {
    // positions may repeat but never decrease
    fn go(
        u: &[Element],
        v: &[Element],
        from: usize,
        leq: &dyn Fn(&Element, &Element) -> bool,
    ) -> bool {
        let Some((x, rest)) = u.split_first() else {
            return true;
        };
        (from..v.len()).any(|k| leq(x, &v[k]) && go(rest, v, k, leq))
    }
    go(u, v, 0, leq)
}

fn seq(x: &Element) -> &[Element] {
    match x {
        Element::Seq(xs) | Element::Bag(xs) => xs,
        _ => panic!("not a sequence"),
    }
}

#[test]
fn multiset_embedding_matches_permutations() {
    for syms in ["ab", "abc"] {
        let (_, p) = space(&format!(
            "Mset(Fin{{{}}})",
            syms.chars().map(String::from).collect::<Vec<_>>().join(",")
        ));
        let bags = universe(&p, 200);
        let bags: Vec<&Element> = bags.iter().filter(|b| seq(b).len() <= 4).collect();
        for x in &bags {
            for y in &bags {
                let brute = embeds_somehow(seq(x), seq(y), &|a, b| a == b);
                assert_eq!(p.leq(x, y), brute, "{x} vs {y}");
            }
        }
    }
}

#[test]
fn stuttering_matches_its_definition() {
    for ty in ["Nat", "Fin{a,b}"] {
        let (_, base) = space(ty);
        let st = stuttering(base.clone()).into_presentation();
        let words = universe(&st, 120);
        for x in &words {
            for y in &words {
                let brute = stutter_brute(seq(x), seq(y), &|a, b| base.leq(a, b));
                assert_eq!(st.leq(x, y), brute, "{x} vs {y}");
            }
        }
    }
}

#[test]
fn conjugacy_matches_its_definition() {
    let base = letters("ab");
    let (h, _) = higman(base.clone());
    let cj = conjugacy(base).into_presentation();
    let words = universe(&cj, 120);
    for x in &words {
        for y in &words {
            let xs = seq(x);
            let brute = (0..xs.len().max(1)).any(|r| {
                let mut rot = xs.to_vec();
                rot.rotate_left(r.min(xs.len()));
                h.embeds(&rot, seq(y))
            });
            assert_eq!(cj.leq(x, y), brute, "{x} vs {y}");
        }
    }
}

#[test]
fn quotient_meet_agrees_with_extension_meet() {
    let cj = conjugacy(letters("ab"));
    let words = words_up_to("ab", 3);
    let ideals: Vec<Ideal> = words
        .iter()
        .flat_map(|x| cj.complement_filter(x).ideals)
        .chain(words.iter().map(|x| cj.principal(x)))
        .collect();
    for i in &ideals {
        for j in &ideals {
            let one = cj.intersect_ideals(i, j);
            let two = cj.intersect_closed_ideals(i, j);
            assert!(
                kernel::subset_down(&cj, &one, &two) && kernel::subset_down(&cj, &two, &one),
                "{i} ∩ {j}: {one} vs {two}"
            );
        }
    }
}

#[test]
fn hoare_order_is_inclusion_of_principal_ideals() {
    let (_, p) = space("Pset(Nat)");
    let sets = universe(&p, 60);
    let members = |x: &Element| seq_set(x).to_vec();
    for s in &sets {
        for t in &sets {
            let hoare = members(s).iter().all(|a| members(t).iter().any(|b| a <= b));
            let d = DownSet::new(vec![p.principal(t)]);
            assert_eq!(kernel::member_down(&*p, &d, s), hoare, "{s} vs {t}");
        }
    }
}

fn seq_set(x: &Element) -> &[Element] {
    match x {
        Element::Set(xs) => xs,
        _ => panic!("not a set"),
    }
}

#[test]
fn adherence_is_decided_exactly() {
    let y = naturals_up_to(5);
    for n in 0..10u64 {
        let i = Ideal::Nat(wqo::NatIdeal::Finite(n));
        assert_eq!(y.ideal(i).is_ok(), n <= 5, "dw({n})");
    }
    assert!(y.ideal(Ideal::Nat(wqo::NatIdeal::Omega)).is_err());
}

#[test]
fn finite_orders_agree_exactly() {
    for ty in [
        "Fin{a,b,c}",
        "Fin{a,b,c,d | a<b,b<c,a<d}",
        "Fin{a,b | a<b,b<a}",
    ] {
        let (_, p) = space(ty);
        let u = universe(&p, 100);
        let r = oracle::check_over(&p, &u, &u, 11);
        assert!(r.passed(), "{}", r.to_text());
        assert!(
            r.checks.iter().all(|c| c.status == oracle::Status::Pass),
            "{}",
            r.to_text()
        );
    }
}

#[test]
fn enumeration_is_deterministic() {
    for ty in SPACES {
        let t = parse_type(ty).unwrap();
        let b = Budget::new(50, 50);
        assert_eq!(
            oracle::enumerate(&t, &b).unwrap(),
            oracle::enumerate(&t, &b).unwrap()
        );
    }
}

fn type_strategy() -> impl Strategy<Value = TypeExpr> {
    let leaf = prop_oneof![
        Just("Nat"),
        Just("Fin{a,b}"),
        Just("Fin{a,b,c | a<b}"),
        Just("Ord[w^2+1]"),
    ]
    .prop_map(|s| parse_type(s).unwrap());
    leaf.prop_recursive(3, 12, 2, |inner| {
        let b = |t: TypeExpr| Box::new(t);
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(move |(x, y)| TypeExpr::Sum(b(x), b(y))),
            (inner.clone(), inner.clone()).prop_map(move |(x, y)| TypeExpr::LexSum(b(x), b(y))),
            (inner.clone(), inner.clone()).prop_map(move |(x, y)| TypeExpr::Prod(b(x), b(y))),
            inner.clone().prop_map(move |x| TypeExpr::Star(b(x))),
            inner.clone().prop_map(move |x| TypeExpr::Stutter(b(x))),
            inner.clone().prop_map(move |x| TypeExpr::Conj(b(x))),
            inner.clone().prop_map(move |x| TypeExpr::Pset(b(x))),
            inner.prop_map(move |x| TypeExpr::Mset(b(x))),
        ]
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn values_round_trip_through_text(t in type_strategy(), ix in prop::collection::vec(any::<Index>(), 1..6)) {
        prop_assert_eq!(parse_type(&t.to_string()).unwrap(), t.clone());
        let p = t.presentation().unwrap();
        let u = oracle::enumerate_space(&*p, &Budget::new(30, 6)).unwrap();
        prop_assume!(!u.is_empty());
        let mut ideals = p.ideal_decomposition().ideals;
        for x in pick(&u, &ix) {
            prop_assert_eq!(parse_value(&x.to_string(), &t).unwrap(), x.clone());
            ideals.push(p.principal(&x));
        }
        ideals.extend(p.complement_filter(&u[u.len() / 2]).ideals);
        for i in ideals {
            prop_assert_eq!(parse_ideal(&i.to_string(), &t).unwrap(), i);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn normal_forms_pick_one_element_per_class(t in type_strategy()) {
        let p = t.presentation().unwrap();
        let u = oracle::enumerate_space(&*p, &Budget::new(40, 7)).unwrap();
        for x in &u {
            let nx = p.normal_form(x);
            prop_assert!(p.leq(x, &nx) && p.leq(&nx, x), "{} vs {}", x, nx);
            prop_assert!(p.check_element(&nx).is_ok());
            for y in &u {
                let same = p.leq(x, y) && p.leq(y, x);
                prop_assert_eq!(same, nx == p.normal_form(y), "{} vs {}", x, y);
            }
        }
    }
}

#[test]
fn up_set_rendering_is_a_function_of_denotation() {
    let (_, p) = space("Star(Fin{a,b})");
    let a = canonize_up(&*p, vec![word("ab"), word("ba"), word("aab")]);
    let b = canonize_up(&*p, vec![word("ba"), word("ab")]);
    assert_eq!(a.to_string(), b.to_string());
    assert_eq!(
        UpSet::new(vec![word("ab"), word("ba")]).to_string(),
        "up([a,b]) | up([b,a])"
    );
}
