//! ASCII pretty-printer whose output re-parses to the same tree.

use mtl_core::{Formula, Interval};

/// Binding strength; larger binds tighter.
fn level(f: &Formula) -> u8 {
    match f {
        Formula::Or(..) => 0,
        Formula::And(..) => 1,
        Formula::Implies(..) => 2,
        Formula::Until(..) | Formula::Since(..) | Formula::WeakUntil(..) => 3,
        Formula::Not(_)
        | Formula::Eventually(..)
        | Formula::PastEventually(..)
        | Formula::Always(..)
        | Formula::Historically(..)
        | Formula::WeakEventually(..)
        | Formula::WeakAlways(..)
        | Formula::Next(_) => 4,
        Formula::True | Formula::False | Formula::Atom(_) => 5,
    }
}

/// Prints `f` with explicit intervals on every timed operator.
pub fn print_formula(f: &Formula) -> String {
    let mut out = String::new();
    write_formula(f, &mut out);
    out
}

fn write_child(f: &Formula, min_level: u8, out: &mut String) {
    if level(f) < min_level {
        out.push('(');
        write_formula(f, out);
        out.push(')');
    } else {
        write_formula(f, out);
    }
}

fn write_binary(a: &Formula, op: &str, b: &Formula, own: u8, out: &mut String) {
    write_child(a, own + 1, out);
    out.push(' ');
    out.push_str(op);
    out.push(' ');
    write_child(b, own, out);
}

fn write_temporal(a: &Formula, op: &str, i: Option<&Interval>, b: &Formula, out: &mut String) {
    write_child(a, 4, out);
    out.push(' ');
    out.push_str(op);
    if let Some(i) = i {
        out.push_str(&i.to_string());
    }
    out.push(' ');
    write_child(b, 4, out);
}

fn write_unary(op: &str, i: Option<&Interval>, body: &Formula, out: &mut String) {
    out.push_str(op);
    if let Some(i) = i {
        out.push_str(&i.to_string());
    }
    if op != "!" {
        out.push(' ');
    }
    write_child(body, 4, out);
}

fn write_formula(f: &Formula, out: &mut String) {
    match f {
        Formula::True => out.push_str("true"),
        Formula::False => out.push_str("false"),
        Formula::Atom(p) => out.push_str(p),
        Formula::Not(a) => write_unary("!", None, a, out),
        Formula::Or(a, b) => write_binary(a, "|", b, 0, out),
        Formula::And(a, b) => write_binary(a, "&", b, 1, out),
        Formula::Implies(a, b) => write_binary(a, "->", b, 2, out),
        Formula::Until(i, a, b) => write_temporal(a, "U", Some(i), b, out),
        Formula::Since(i, a, b) => write_temporal(a, "S", Some(i), b, out),
        Formula::WeakUntil(a, b) => write_temporal(a, "Uw", None, b, out),
        Formula::Eventually(i, a) => write_unary("F", Some(i), a, out),
        Formula::PastEventually(i, a) => write_unary("P", Some(i), a, out),
        Formula::Always(i, a) => write_unary("G", Some(i), a, out),
        Formula::Historically(i, a) => write_unary("H", Some(i), a, out),
        Formula::WeakEventually(i, a) => write_unary("Fw", Some(i), a, out),
        Formula::WeakAlways(i, a) => write_unary("Gw", Some(i), a, out),
        Formula::Next(a) => write_unary("O", None, a, out),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse_formula;
    use mtl_core::formula::*;
    use proptest::prelude::*;

    #[test]
    fn explicit_intervals() {
        assert_eq!(print_formula(&atom("a")), "a");
        assert_eq!(
            print_formula(&until(Interval::full(), Formula::True, atom("b"))),
            "true U[0,inf) b"
        );
        let f = parse_formula("a U[0,3] (c S (P[0,1] d))").unwrap();
        assert_eq!(print_formula(&f), "a U[0,3] (c S[0,inf) P[0,1] d)");
        assert_eq!(parse_formula(&print_formula(&f)).unwrap(), f);
    }

    #[test]
    fn associativity_is_preserved() {
        let left = and(and(atom("a"), atom("b")), atom("c"));
        assert_eq!(print_formula(&left), "(a & b) & c");
        assert_eq!(parse_formula(&print_formula(&left)).unwrap(), left);
        let nested = not(next(or(atom("a"), atom("b"))));
        assert_eq!(parse_formula(&print_formula(&nested)).unwrap(), nested);
    }

    fn arb_interval() -> impl Strategy<Value = Interval> {
        (0u64..5, 0u64..4, any::<bool>(), any::<bool>(), any::<bool>()).prop_map(|(l, w, lc, rc, inf)| {
            if inf {
                Interval::new(l, None, lc, false).unwrap()
            } else if w == 0 {
                Interval::point(l)
            } else {
                Interval::new(l, Some(l + w), lc, rc).unwrap()
            }
        })
    }

    pub(crate) fn arb_formula() -> impl Strategy<Value = Formula> {
        let leaf = prop_oneof![
            Just(Formula::True),
            Just(Formula::False),
            prop::sample::select(vec!["a", "b", "c", "x_1"]).prop_map(atom),
        ];
        leaf.prop_recursive(5, 40, 2, |inner| {
            prop_oneof![
                inner.clone().prop_map(not),
                inner.clone().prop_map(next),
                (inner.clone(), inner.clone()).prop_map(|(a, b)| and(a, b)),
                (inner.clone(), inner.clone()).prop_map(|(a, b)| or(a, b)),
                (inner.clone(), inner.clone()).prop_map(|(a, b)| implies(a, b)),
                (inner.clone(), inner.clone()).prop_map(|(a, b)| weak_until(a, b)),
                (arb_interval(), inner.clone(), inner.clone()).prop_map(|(i, a, b)| until(i, a, b)),
                (arb_interval(), inner.clone(), inner.clone()).prop_map(|(i, a, b)| since(i, a, b)),
                (arb_interval(), inner.clone()).prop_map(|(i, a)| eventually(i, a)),
                (arb_interval(), inner.clone()).prop_map(|(i, a)| past_eventually(i, a)),
                (arb_interval(), inner.clone()).prop_map(|(i, a)| always(i, a)),
                (arb_interval(), inner.clone()).prop_map(|(i, a)| historically(i, a)),
                (arb_interval(), inner.clone()).prop_map(|(i, a)| weak_eventually(i, a)),
                (arb_interval(), inner).prop_map(|(i, a)| weak_always(i, a)),
            ]
        })
    }

    proptest! {
        #[test]
        fn print_parse_round_trip(f in arb_formula()) {
            let text = print_formula(&f);
            prop_assert_eq!(parse_formula(&text).unwrap(), f);
        }

        #[test]
        fn parser_is_total_on_bytes(bytes in prop::collection::vec(any::<u8>(), 0..40)) {
            let text = String::from_utf8_lossy(&bytes);
            let _ = parse_formula(&text);
        }

        #[test]
        fn parser_is_total_on_token_soup(
            toks in prop::collection::vec(
                prop::sample::select(vec!["a", "U", "S", "F", "(", ")", "[", "]", "0", "1", ",", "inf", "!", "&", "|", "->", "Uw", "O", "true"]),
                0..20,
            )
        ) {
            let text = toks.join(" ");
            if let Err(e) = parse_formula(&text) {
                prop_assert!(e.span.start <= e.span.end && e.span.end <= text.len());
            }
        }
    }
}
