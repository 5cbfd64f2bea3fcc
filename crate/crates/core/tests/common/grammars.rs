//! Random descriptor families for the law and oracle suites.

use invsyn::cassette1::{
    char1, compose1, digit1, identity1, iso_l1, lit1, pair_l1, satisfy1, Descriptor1,
};
use invsyn::cassette2::{
    char2, choice2, compose2, digit2, fail2, identity2, lit2, many, pair_l2, prism_l2, satisfy2,
    Descriptor2,
};
use invsyn::stacked::{
    char_d, digit_d, letter_d, linear, lit_d, many_d, prism_l_d, Alternative, Choice, Descr,
    IxMonad, Linear, Res,
};
use invsyn::values::{adt_prism, identity_iso};
use invsyn::{CharClass, Stack, Value};
use rand::Rng;

pub fn probe_input(rng: &mut impl Rng) -> String {
    let len = rng.gen_range(0..7);
    (0..len)
        .map(|_| ['a', 'b', '1', '7', 'z', ' '][rng.gen_range(0..6)])
        .collect()
}

pub fn probe_value(rng: &mut impl Rng, depth: u32) -> Value {
    match rng.gen_range(0..if depth == 0 { 3 } else { 6 }) {
        0 => Value::Char(['a', 'b', '1', 'z'][rng.gen_range(0..4)]),
        1 => Value::Int(rng.gen_range(0..12)),
        2 => Value::list([]),
        3 => Value::pair(probe_value(rng, depth - 1), probe_value(rng, depth - 1)),
        4 => Value::adt("K", [probe_value(rng, depth - 1)]),
        _ => Value::list((0..rng.gen_range(1..4)).map(|_| Value::Char('b'))),
    }
}

pub fn probe_stack(rng: &mut impl Rng) -> Stack {
    let n = rng.gen_range(0..4);
    Stack::from_top((0..n).map(|_| probe_value(rng, 2)).collect::<Vec<_>>())
}

pub fn tier1_leaf(rng: &mut impl Rng) -> Descriptor1 {
    match rng.gen_range(0..8) {
        0 => satisfy1(CharClass::digit()),
        1 => satisfy1(CharClass::ascii_letter()),
        2 => lit1(["a", "ab", "1", ""][rng.gen_range(0..4)]),
        3 => identity1(),
        4 => char1(),
        5 => digit1(),
        6 => iso_l1(identity_iso()),
        _ => pair_l1(),
    }
}

pub fn tier1(rng: &mut impl Rng, depth: u32) -> Descriptor1 {
    if depth == 0 || rng.gen_bool(0.3) {
        tier1_leaf(rng)
    } else {
        compose1(&tier1(rng, depth - 1), &tier1(rng, depth - 1))
    }
}

pub fn tier2(rng: &mut impl Rng, depth: u32) -> Descriptor2 {
    if depth == 0 || rng.gen_bool(0.3) {
        return match rng.gen_range(0..9) {
            0 => satisfy2(CharClass::digit()),
            1 => satisfy2(CharClass::ascii_letter()),
            2 => satisfy2(CharClass::eq('a')),
            3 => lit2(["a", "ab", "1", ""][rng.gen_range(0..4)]),
            4 => identity2(),
            5 => fail2(),
            6 => digit2(),
            7 => char2(),
            _ => many(&satisfy2(CharClass::eq('b'))),
        };
    }
    let a = tier2(rng, depth - 1);
    let b = tier2(rng, depth - 1);
    match rng.gen_range(0..6) {
        0 | 1 => compose2(&a, &b),
        2 | 3 => choice2(&a, &b),
        4 => compose2(&pair_l2(), &compose2(&a, &b)),
        _ => compose2(&prism_l2(adt_prism("K", 1)), &a),
    }
}

/// Leaves shared by both stacked variants.
fn stacked_leaf<M: Descr>(rng: &mut impl Rng) -> M {
    match rng.gen_range(0..8) {
        0 => char_d(),
        1 => letter_d(),
        2 => digit_d(),
        3 => lit_d(["a", "ab", "1", ""][rng.gen_range(0..4)]),
        4 => M::ret(Res::Val(Value::Int(rng.gen_range(0..3)))),
        5 => M::push_value(Value::Char('a')),
        6 => M::discard(),
        _ => M::satisfy(CharClass::eq('b')),
    }
}

pub fn linear_action(rng: &mut impl Rng, depth: u32) -> Linear {
    if depth == 0 || rng.gen_bool(0.3) {
        return stacked_leaf(rng);
    }
    let a = linear_action(rng, depth - 1);
    let b = linear_action(rng, depth - 1);
    match rng.gen_range(0..3) {
        0 => a.then(b),
        1 => a.skip(b),
        _ => linear::curry_stack::<Linear>().then(a).skip(b),
    }
}

pub fn choice_action(rng: &mut impl Rng, depth: u32) -> Choice {
    if depth == 0 || rng.gen_bool(0.3) {
        return match rng.gen_range(0..10) {
            8 => Choice::empty(),
            9 => many_d(Choice::satisfy(CharClass::eq('b'))),
            _ => stacked_leaf(rng),
        };
    }
    let a = choice_action(rng, depth - 1);
    let b = choice_action(rng, depth - 1);
    match rng.gen_range(0..5) {
        0 => a.then(b),
        1 => a.skip(b),
        2 | 3 => a.alt(b),
        _ => prism_l_d::<Choice>(adt_prism("K", 1)).ap(a),
    }
}

/// A deterministic continuation for bind laws: which action runs next
/// depends on the result it receives.
pub fn continuation<M: Descr>(seed: u64) -> impl Fn(Res) -> M + Send + Sync + Clone + 'static {
    move |x: Res| {
        let key = format!("{x:?}");
        let h = key
            .bytes()
            .fold(seed, |h, b| h.wrapping_mul(31).wrapping_add(b as u64));
        let tag = M::ret(Res::Val(Value::text(format!("{}:{key}", h % 7))));
        match h % 4 {
            0 => lit_d::<M>("a").then(tag),
            1 => M::satisfy(CharClass::digit()).then(tag),
            2 => tag,
            _ => M::discard().then(tag),
        }
    }
}

/// Observation of a choice action: its parse on every probe input and its
/// print on every probe stack.
pub type ChoiceObs = Vec<String>;

pub fn observe_choice(d: &Choice, inputs: &[String], stacks: &[Stack]) -> ChoiceObs {
    let mut obs = Vec::new();
    for input in inputs {
        obs.push(format!("{:?}", d.1.run(input, 0)));
    }
    for s in stacks {
        obs.push(format!(
            "{:?}",
            invsyn::stacked::run_print_choice(d, s.clone())
        ));
    }
    obs
}

pub fn observe_linear(d: &Linear, inputs: &[String], stacks: &[Stack]) -> Vec<String> {
    let mut obs = Vec::new();
    for input in inputs {
        obs.push(format!("{:?}", d.1.run(input, 0)));
    }
    for s in stacks {
        obs.push(format!(
            "{:?}",
            invsyn::stacked::run_print_linear(d, s.clone())
        ));
    }
    obs
}

/// A grammar small enough to enumerate derivations by brute force.
#[derive(Debug, Clone)]
pub enum Gram {
    Eps,
    Fail,
    Lit(String),
    Sat(char),
    Seq(Box<Gram>, Box<Gram>),
    Alt(Box<Gram>, Box<Gram>),
    /// Greedy repetition of a single char class.
    Many(char),
}

impl Gram {
    /// End offsets of every derivation from `i`, in the order a left-biased
    /// backtracking parser finds them.
    pub fn ends(&self, s: &[char], i: usize) -> Vec<usize> {
        match self {
            Gram::Eps => vec![i],
            Gram::Fail => vec![],
            Gram::Lit(l) => {
                let l: Vec<char> = l.chars().collect();
                if s[i..].starts_with(&l) {
                    vec![i + l.len()]
                } else {
                    vec![]
                }
            }
            Gram::Sat(c) => {
                if s.get(i).is_some_and(|x| class_test(*c, *x)) {
                    vec![i + 1]
                } else {
                    vec![]
                }
            }
            Gram::Seq(a, b) => a
                .ends(s, i)
                .into_iter()
                .flat_map(|j| b.ends(s, j))
                .collect(),
            Gram::Alt(a, b) => {
                let mut v = a.ends(s, i);
                v.extend(b.ends(s, i));
                v
            }
            Gram::Many(c) => {
                let mut v = Vec::new();
                if s.get(i).is_some_and(|x| class_test(*c, *x)) {
                    v.extend(Gram::Many(*c).ends(s, i + 1));
                }
                v.push(i);
                v
            }
        }
    }

    pub fn descriptor(&self) -> Descriptor2 {
        match self {
            Gram::Eps => identity2(),
            Gram::Fail => fail2(),
            Gram::Lit(l) => lit2(l),
            Gram::Sat(c) => satisfy2(class_of(*c)),
            Gram::Seq(a, b) => compose2(&a.descriptor(), &b.descriptor()),
            Gram::Alt(a, b) => choice2(&a.descriptor(), &b.descriptor()),
            Gram::Many(c) => many(&satisfy2(class_of(*c))),
        }
    }
}

/// `'d'` stands for any digit, `'.'` for any char, other chars for
/// themselves.
fn class_test(c: char, x: char) -> bool {
    match c {
        'd' => x.is_ascii_digit(),
        '.' => true,
        c => c == x,
    }
}

fn class_of(c: char) -> CharClass {
    match c {
        'd' => CharClass::digit(),
        '.' => CharClass::any(),
        c => CharClass::eq(c),
    }
}

pub fn random_gram(rng: &mut impl Rng, depth: u32) -> Gram {
    let classes = ['a', 'b', 'd', '.'];
    if depth == 0 || rng.gen_bool(0.25) {
        return match rng.gen_range(0..6) {
            0 => Gram::Eps,
            1 => Gram::Fail,
            2 => Gram::Lit(["a", "ab", "b", "1"][rng.gen_range(0..4)].to_owned()),
            3 | 4 => Gram::Sat(classes[rng.gen_range(0..4)]),
            _ => Gram::Many(classes[rng.gen_range(0..4)]),
        };
    }
    let a = Box::new(random_gram(rng, depth - 1));
    let b = Box::new(random_gram(rng, depth - 1));
    if rng.gen_bool(0.5) {
        Gram::Seq(a, b)
    } else {
        Gram::Alt(a, b)
    }
}

pub fn gram_input(rng: &mut impl Rng, max_len: usize) -> String {
    let len = rng.gen_range(0..=max_len);
    (0..len)
        .map(|_| ['a', 'b', '1', 'x'][rng.gen_range(0..4)])
        .collect()
}
