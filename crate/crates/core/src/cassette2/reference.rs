//! A direct transcription of the two-continuation equations, used as an
//! oracle for the machine.
//!
//! Every primitive hands its success continuation a restoring failure
//! continuation that undoes its own stack effect; choice hands the first
//! alternative a failure continuation that reruns the second one on the
//! original input. The final success continuation records the result and
//! then fails on purpose, so the run enumerates every derivation.

use std::cell::RefCell;
use std::rc::Rc;

use super::descriptor::{Descriptor2, Lead, Node};
use crate::error::Violation;
use crate::values::{pair_split, Frame, Stack, Value};

type Res = Result<(), Violation>;
type PFail = Rc<dyn Fn(String, Stack) -> Res>;
type PK = Rc<dyn Fn(PFail, String, Stack) -> Res>;
type QFail = Rc<dyn Fn(usize, Stack) -> Res>;
type QK = Rc<dyn Fn(QFail, usize, Stack) -> Res>;

fn resolve(d: &Descriptor2) -> Option<Descriptor2> {
    match &*d.0 {
        Node::Delay(make) => Some(make()),
        Node::Defer(cell, make) => Some(cell.get_or_init(|| make()).clone()),
        Node::Rec(body) => Some(body.clone()),
        Node::Knot(weak) => Some(Descriptor2(weak.upgrade().expect("alive"))),
        _ => None,
    }
}

fn drop_n(stack: Stack, n: usize) -> Stack {
    (0..n).fold(stack, |s, _| {
        s.pop().expect("restoring a stack we pushed").1
    })
}

fn pr(d: &Descriptor2, k: PK) -> PK {
    if resolve(d).is_some() {
        let d = d.clone();
        return Rc::new(move |fl, s, st| pr(&resolve(&d).unwrap(), k.clone())(fl, s, st));
    }
    match &*d.0 {
        Node::Identity => k,
        Node::Fail => Rc::new(|fl: PFail, s, st| fl(s, st)),
        Node::Compose(a, b) => pr(a, pr(b, k)),
        Node::Choice(a, b) => {
            let ka = pr(a, k.clone());
            let kb = pr(b, k);
            Rc::new(move |fl: PFail, s: String, st| {
                let kb = kb.clone();
                let s0 = s.clone();
                ka(
                    Rc::new(move |_, st2| kb(fl.clone(), s0.clone(), st2)),
                    s,
                    st,
                )
            })
        }
        Node::Satisfy(class) => {
            let class = class.clone();
            Rc::new(move |fl: PFail, s: String, st: Stack| {
                let (c, rest) = st.clone().pop_char(&format!("satisfy {}", class.name()))?;
                if class.test(c) {
                    let undo: PFail =
                        Rc::new(move |s2, st2: Stack| fl(s2, st2.push(Value::Char(c))));
                    k(undo, format!("{s}{c}"), rest)
                } else {
                    fl(s, st)
                }
            })
        }
        Node::Lit(lit) => {
            let lit = lit.clone();
            Rc::new(move |fl, s, st| k(fl, format!("{s}{lit}"), st))
        }
        Node::LitUnit(lit) => {
            let lit = lit.clone();
            Rc::new(move |fl: PFail, s, st: Stack| {
                let (v, rest) = st.pop_value("lit'")?;
                assert_eq!(v, Value::Unit, "test grammars keep lit' well typed");
                let undo: PFail = Rc::new(move |s2, st2: Stack| fl(s2, st2.push(Value::Unit)));
                k(undo, format!("{s}{lit}"), rest)
            })
        }
        Node::Lead(lead) => {
            let lead = lead.clone();
            Rc::new(move |fl: PFail, s, st: Stack| {
                let (t, rest) = st.clone().pop_value("lead")?;
                let parts = match &lead {
                    Lead::Prism(p) => match p.preview(&t) {
                        Some(parts) => parts,
                        None => return fl(s, st),
                    },
                    Lead::Iso(iso) => match iso.to(t.clone()) {
                        Ok(w) => vec![w],
                        Err(Violation::Domain { .. }) => return fl(s, st),
                        Err(e) => return Err(e),
                    },
                    Lead::Pair => pair_split(t.clone())?.to_vec(),
                };
                let n = parts.len();
                let undo: PFail = Rc::new(move |s2, st2| fl(s2, drop_n(st2, n).push(t.clone())));
                k(undo, s, rest.push_all_top_first(parts))
            })
        }
        _ => unreachable!(),
    }
}

fn pa(d: &Descriptor2, input: Rc<str>, k: QK) -> QK {
    if resolve(d).is_some() {
        let d = d.clone();
        return Rc::new(move |fl, pos, u| {
            pa(&resolve(&d).unwrap(), input.clone(), k.clone())(fl, pos, u)
        });
    }
    let restore = |fl: QFail, u: Stack| -> QFail { Rc::new(move |p2, _| fl(p2, u.clone())) };
    match &*d.0 {
        Node::Identity => k,
        Node::Fail => Rc::new(|fl: QFail, pos, u| fl(pos, u)),
        Node::Compose(a, b) => pa(a, input.clone(), pa(b, input, k)),
        Node::Choice(a, b) => {
            let ka = pa(a, input.clone(), k.clone());
            let kb = pa(b, input, k);
            Rc::new(move |fl: QFail, pos, u| {
                let kb = kb.clone();
                ka(Rc::new(move |_, u2| kb(fl.clone(), pos, u2)), pos, u)
            })
        }
        Node::Satisfy(class) => {
            let class = class.clone();
            Rc::new(
                move |fl: QFail, pos, u: Stack| match input[pos..].chars().next() {
                    Some(c) if class.test(c) => match u.deliver(Value::Char(c)) {
                        Ok(u2) => k(restore(fl, u), pos + c.len_utf8(), u2),
                        Err(Violation::Domain { .. }) => fl(pos, u),
                        Err(e) => Err(e),
                    },
                    _ => fl(pos, u),
                },
            )
        }
        Node::Lit(lit) | Node::LitUnit(lit) => {
            let unit = matches!(&*d.0, Node::LitUnit(_));
            let lit = lit.clone();
            Rc::new(move |fl: QFail, pos, u: Stack| {
                if !input[pos..].starts_with(&*lit) {
                    return fl(pos, u);
                }
                let u2 = if unit {
                    u.deliver(Value::Unit)?
                } else {
                    u.clone()
                };
                k(restore(fl, u), pos + lit.len(), u2)
            })
        }
        Node::Lead(lead) => {
            let lead = lead.clone();
            Rc::new(move |fl: QFail, pos, u: Stack| {
                let frame = match &lead {
                    Lead::Prism(p) => Frame::for_prism(p),
                    Lead::Iso(iso) => Frame::for_iso(iso),
                    Lead::Pair => Frame::for_pair(),
                };
                match u.open(frame) {
                    Ok(u2) => k(restore(fl, u), pos, u2),
                    Err(Violation::Domain { .. }) => fl(pos, u),
                    Err(e) => Err(e),
                }
            })
        }
        _ => unreachable!(),
    }
}

/// Successful print runs; only the first one unless `all`.
pub(crate) fn print_runs(
    d: &Descriptor2,
    stack: Stack,
    all: bool,
) -> Result<Vec<(String, Stack)>, Violation> {
    let found = Rc::new(RefCell::new(Vec::new()));
    let sink = found.clone();
    let done: PK = Rc::new(move |fl, s, st| {
        sink.borrow_mut().push((s.clone(), st.clone()));
        if all {
            fl(s, st)
        } else {
            Ok(())
        }
    });
    pr(d, done)(Rc::new(|_, _| Ok(())), String::new(), stack)?;
    let out = found.borrow().clone();
    Ok(out)
}

pub(crate) fn parse_all(
    d: &Descriptor2,
    input: &str,
    stack: Stack,
) -> Result<Vec<(usize, Stack)>, Violation> {
    let found = Rc::new(RefCell::new(Vec::new()));
    let sink = found.clone();
    let done: QK = Rc::new(move |fl, pos, u: Stack| {
        sink.borrow_mut().push((pos, u.clone()));
        fl(pos, u)
    });
    pa(d, input.into(), done)(Rc::new(|_, _| Ok(())), 0, stack)?;
    let out = found.borrow().clone();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    use super::*;
    use crate::cassette2::*;
    use crate::chars::CharClass;
    use crate::values::{adt_prism, digit_iso};

    fn machine_print_all(d: &Descriptor2, stack: Stack) -> Result<Vec<(String, Stack)>, Violation> {
        // the machine's print track only reports the first success
        run_print(d, stack).map(|o| o.success().into_iter().collect())
    }

    fn random_descriptor(rng: &mut ChaCha8Rng, depth: u32) -> Descriptor2 {
        let leaf = depth == 0 || rng.gen_bool(0.3);
        if leaf {
            match rng.gen_range(0..9) {
                0 => satisfy2(CharClass::digit()),
                1 => satisfy2(CharClass::ascii_letter()),
                2 => satisfy2(CharClass::eq('a')),
                3 => lit2(["a", "ab", "1", ""][rng.gen_range(0..4)]),
                4 => identity2(),
                5 => fail2(),
                6 => digit2(),
                7 => char2(),
                _ => many(&satisfy2(CharClass::eq('b'))),
            }
        } else {
            let a = random_descriptor(rng, depth - 1);
            let b = random_descriptor(rng, depth - 1);
            match rng.gen_range(0..6) {
                0 | 1 => compose2(&a, &b),
                2 | 3 => choice2(&a, &b),
                4 => compose2(&pair_l2(), &compose2(&a, &b)),
                _ => compose2(&prism_l2(adt_prism("K", 1)), &a),
            }
        }
    }

    fn random_input(rng: &mut ChaCha8Rng) -> String {
        let len = rng.gen_range(0..7);
        (0..len)
            .map(|_| ['a', 'b', '1', '7', 'z'][rng.gen_range(0..5)])
            .collect()
    }

    fn random_value(rng: &mut ChaCha8Rng, depth: u32) -> Value {
        match rng.gen_range(0..if depth == 0 { 3 } else { 6 }) {
            0 => Value::Char(['a', 'b', '1', 'z'][rng.gen_range(0..4)]),
            1 => Value::Int(rng.gen_range(0..12)),
            2 => Value::list([]),
            3 => Value::pair(random_value(rng, depth - 1), random_value(rng, depth - 1)),
            4 => Value::adt("K", [random_value(rng, depth - 1)]),
            _ => Value::list((0..rng.gen_range(1..4)).map(|_| Value::Char('b'))),
        }
    }

    #[test]
    fn machine_parse_matches_the_equations() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..300 {
            let d = random_descriptor(&mut rng, 3);
            for _ in 0..10 {
                let input = random_input(&mut rng);
                let expected = parse_all(&d, &input, Stack::new());
                let got = run_parse_all(&d, &input, Stack::new(), usize::MAX);
                match (&expected, &got) {
                    (Ok(e), Ok(g)) => assert_eq!(e, g, "{d:?} on {input:?}"),
                    (Err(_), Err(_)) => {}
                    _ => panic!("{d:?} on {input:?}: {expected:?} vs {got:?}"),
                }
            }
        }
    }

    #[test]
    fn machine_print_matches_the_equations() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..300 {
            let d = random_descriptor(&mut rng, 3);
            for _ in 0..10 {
                let n = rng.gen_range(0..4);
                let stack = Stack::from_top((0..n).map(|_| random_value(&mut rng, 2)));
                let expected = print_runs(&d, stack.clone(), false);
                let got = machine_print_all(&d, stack.clone());
                match (&expected, &got) {
                    (Ok(e), Ok(g)) => assert_eq!(e, g, "{d:?} on {stack:?}"),
                    (Err(_), Err(_)) => {}
                    _ => panic!("{d:?} on {stack:?}: {expected:?} vs {got:?}"),
                }
            }
        }
    }

    #[test]
    fn backtracking_reparses_the_first_char() {
        let d = choice2(&compose2(&char2(), &lit2("!")), &char2());
        let expected = parse_all(&d, "a?", Stack::new()).unwrap();
        assert_eq!(expected, vec![(1, Stack::from_top([Value::Char('a')]))]);
        assert_eq!(parse2(&d, "a?").unwrap(), Some(Value::Char('a')));
    }

    #[test]
    fn digit_iso_failure_is_recoverable_in_both() {
        let d = choice2(&iso_l2(digit_iso()), &identity2());
        let stack = Stack::from_top([Value::Int(12)]);
        assert_eq!(print_runs(&d, stack.clone(), true).unwrap()[0].1, stack);
        assert_eq!(
            run_print(&d, stack.clone()).unwrap().success().unwrap().1,
            stack
        );
    }
}
