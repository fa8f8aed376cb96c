use std::collections::BTreeSet;

use mtl_core::formula::{
    always, and, and_all, atom, eventually, iff, implies, last_point, not, or, until, weak_always, weak_eventually,
    weak_until,
};
use mtl_core::{Formula, FreshNames, Interval, Prop};
use mtl_normal_forms::{act, onf, since_constraints, FreshProp, TemporalDefinition};

use crate::error::OsError;

/// Group names of the marking conjunction, in emission order.
pub const MARK_GROUPS: [&str; 9] = [
    "MARK_b",
    "MARK_first",
    "MARK_c",
    "MARK_last",
    "MARK_jk",
    "MARK_beg_end",
    "MARK_not_b",
    "MARK_c_b",
    "MARK_l0",
];

/// The definition being eliminated: `□ʷ(b ↔ ⋄̄_I a)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OsParams {
    pub a: Prop,
    pub b: Prop,
    pub interval: Interval,
}

impl OsParams {
    pub fn lower(&self) -> u64 {
        self.interval.lower()
    }

    pub fn upper(&self) -> u64 {
        self.interval.upper().expect("bounded interval")
    }
}

/// Fresh propositions of one bounded elimination.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OsFresh {
    pub bs: Prop,
    pub be: Prop,
    pub beg: Prop,
    pub end: Prop,
    pub c: Prop,
    pub cbs: Prop,
    pub cbe: Prop,
    /// Auxiliary witness for the untimed Since inside `MARK_jk`.
    pub sjk: Prop,
}

impl OsFresh {
    fn issue(owner: &str, fresh: &mut FreshNames) -> Self {
        Self {
            bs: fresh.derived("bs", owner),
            be: fresh.derived("be", owner),
            beg: fresh.derived("beg", owner),
            end: fresh.derived("end", owner),
            c: fresh.derived("c", owner),
            cbs: fresh.derived("cbs", owner),
            cbe: fresh.derived("cbe", owner),
            sjk: fresh.derived("sjk", owner),
        }
    }

    /// `(name, role)` pairs in a fixed order.
    pub fn roles(&self) -> [(&Prop, &'static str); 8] {
        [
            (&self.bs, "bs"),
            (&self.be, "be"),
            (&self.beg, "beg"),
            (&self.end, "end"),
            (&self.c, "c"),
            (&self.cbs, "cbs"),
            (&self.cbe, "cbe"),
            (&self.sjk, "sjk"),
        ]
    }

    pub fn set(&self) -> BTreeSet<Prop> {
        self.roles().iter().map(|(p, _)| (*p).clone()).collect()
    }
}

/// Result of eliminating one bounded past definition.
///
/// `mark` is `ONF_{Σ_i}` of the conjunction of `groups`, where `Σ_i = Σ ∪ W ∪ X_i`.
#[derive(Clone, Debug)]
pub struct OsEliminationOutput {
    pub mark: Formula,
    pub groups: Vec<(String, Formula)>,
    pub fresh: OsFresh,
    pub params: OsParams,
    pub sigma: BTreeSet<Prop>,
    pub sigma_i: BTreeSet<Prop>,
}

impl OsEliminationOutput {
    pub fn fresh_set(&self) -> BTreeSet<Prop> {
        self.fresh.set()
    }

    pub fn fresh_props(&self) -> Vec<FreshProp> {
        self.fresh
            .roles()
            .iter()
            .map(|(name, role)| FreshProp { name: (*name).clone(), role: role.to_string(), owner: self.params.b.clone() })
            .collect()
    }

    /// The marking formula with the named group left out, or the full one for `None`.
    pub fn assemble(&self, drop: Option<&str>) -> Formula {
        let kept = self.groups.iter().filter(|(n, _)| Some(n.as_str()) != drop).map(|(_, g)| g.clone());
        onf(&and_all(kept), &self.sigma_i).expect("Σ_i contains Σ")
    }

    pub fn group(&self, name: &str) -> Option<&Formula> {
        self.groups.iter().find(|(n, _)| n == name).map(|(_, g)| g)
    }
}

fn iv(l: u64, u: u64, lc: bool, rc: bool) -> Interval {
    Interval::new(l, Some(u), lc, rc).expect("nonempty interval")
}

fn g(f: Formula) -> Formula {
    weak_always(Interval::full(), f)
}

/// Replaces `□ʷ(b ↔ ⋄̄_⟨l,u⟩ a)` by a marking conjunction over fresh propositions.
///
/// Consecutive action points `j < k` holding `a` whose gap leaves a window where `b`
/// must fail are marked `b_s` at `j` and `b_e` at `k`. The window starts at `beg`
/// (time `τ_j + u`) and ends at `end` (time `τ_k + l`). The points are placed on the
/// timeline with the help of an integer grid marked `c`, with `c_{b_s}` and `c_{b_e}`
/// recording which unit cells hold a window start or end.
///
/// `W` is the set of flattening witnesses; `Σ_i = Σ ∪ W ∪ X_i` frames the output.
pub fn elim_bounded_past_os(
    def: &TemporalDefinition,
    sigma: &BTreeSet<Prop>,
    witnesses: &BTreeSet<Prop>,
    fresh: &mut FreshNames,
) -> Result<OsEliminationOutput, OsError> {
    let (i, a) = def.as_past_eventually().ok_or_else(|| OsError::NotPastEventuality(def.witness.clone()))?;
    if i.is_unbounded() {
        return Err(OsError::UnboundedInterval(i.to_string()));
    }
    if i.is_punctual() {
        return Err(OsError::PunctualInterval(i.to_string()));
    }
    let act = act(sigma).map_err(|_| OsError::EmptyAlphabet)?;
    let params = OsParams { a: a.clone(), b: def.witness.clone(), interval: i.clone() };
    let x = OsFresh::issue(&def.witness, fresh);
    let groups = mark_groups(&params, &x, &act);
    let mut sigma_i: BTreeSet<Prop> = sigma.union(witnesses).cloned().collect();
    sigma_i.insert(def.witness.clone());
    sigma_i.extend(x.set());
    let mark = onf(&and_all(groups.iter().map(|(_, f)| f.clone())), &sigma_i)?;
    Ok(OsEliminationOutput { mark, groups, fresh: x, params, sigma: sigma.clone(), sigma_i })
}

fn mark_groups(p: &OsParams, x: &OsFresh, act: &Formula) -> Vec<(String, Formula)> {
    let i = &p.interval;
    let (l, u) = (p.lower(), p.upper());
    let (lc, rc) = (i.left_closed(), i.right_closed());
    let a = atom(p.a.clone());
    let b = atom(p.b.clone());
    let [bs, be, beg, end, c, cbs, cbe, r] =
        [&x.bs, &x.be, &x.beg, &x.end, &x.c, &x.cbs, &x.cbe, &x.sjk].map(|n| atom(n.clone()));
    let big_a = and(a.clone(), act.clone());
    let nb = implies(act.clone(), not(b.clone()));
    let na = implies(act.clone(), not(a));
    let full = Interval::full;

    let mut out: Vec<(String, Formula)> = Vec::new();
    let mut push = |name: &str, f: Formula| out.push((name.to_string(), f));

    push("MARK_b", g(implies(big_a.clone(), always(i.clone(), implies(act.clone(), b.clone())))));

    let first_tail = if l == 0 { nb.clone() } else { weak_always(iv(0, l, true, !lc), nb.clone()) };
    let pre_first = and(not(big_a.clone()), nb.clone());
    push(
        "MARK_first",
        or(g(pre_first.clone()), weak_until(pre_first, and(big_a.clone(), first_tail))),
    );

    push(
        "MARK_c",
        and(
            c.clone(),
            g(implies(
                c.clone(),
                or(
                    weak_eventually(iv(0, 1, true, false), last_point()),
                    and(always(iv(0, 1, false, false), not(c.clone())), eventually(iv(0, 1, false, true), c.clone())),
                ),
            )),
        ),
    );

    let after_last = Interval::new(u, None, !rc, false).expect("right-open unbounded interval");
    push("MARK_last", g(implies(always(full(), na.clone()), always(after_last, nb.clone()))));

    let gap = Interval::new(u - l, None, !lc && !rc, false).expect("right-open unbounded interval");
    push(
        "MARK_jk",
        and_all([
            g(iff(bs.clone(), and(big_a.clone(), until(gap, na.clone(), big_a.clone())))),
            g(iff(be.clone(), and(big_a.clone(), r.clone()))),
            since_constraints(&r, &na, &and(bs.clone(), act.clone())),
        ]),
    );

    let to_end = |k: u64| weak_eventually(iv(0, k, true, false), last_point());
    let beg_rule = g(implies(
        bs.clone(),
        and(
            always(iv(u - 1, u, false, false), not(beg.clone())),
            or(
                to_end(u),
                and(eventually(iv(u, u + 1, true, false), beg.clone()), always(iv(u, u + 1, false, false), not(beg.clone()))),
            ),
        ),
    ));
    let end_rule = if l == 0 {
        g(and(iff(be.clone(), end.clone()), implies(be.clone(), nb.clone())))
    } else {
        g(implies(
            be.clone(),
            and(
                always(iv(l - 1, l, false, false), not(end.clone())),
                or(
                    to_end(l),
                    and(
                        eventually(iv(l - 1, l, false, true), end.clone()),
                        always(iv(l, l + 1, false, false), not(end.clone())),
                    ),
                ),
            ),
        ))
    };
    push("MARK_beg_end", and(beg_rule, end_rule));

    let stay = and(not(end.clone()), nb.clone());
    let stop = if lc { end.clone() } else { and(end.clone(), nb.clone()) };
    let window = if rc {
        or(always(full(), stay.clone()), until(full(), stay, stop))
    } else {
        or(g(stay.clone()), weak_until(stay, stop))
    };
    push("MARK_not_b", g(implies(beg.clone(), window)));

    let cell = iv(0, 1, true, false);
    push(
        "MARK_c_b",
        and_all([
            g(iff(cbs.clone(), and(c.clone(), weak_eventually(cell.clone(), bs.clone())))),
            g(iff(cbe.clone(), and(c.clone(), weak_eventually(cell, be.clone())))),
            g(implies(and(c.clone(), not(cbs.clone())), weak_always(iv(u, u + 1, true, false), not(beg.clone())))),
            g(implies(and(c.clone(), not(cbe.clone())), weak_always(iv(l, l + 1, true, false), not(end.clone())))),
            weak_always(iv(0, u, true, false), and(not(beg), not(end))),
        ]),
    );

    if l == 0 && lc && !rc {
        let closed_u = iv(0, u, true, true);
        push(
            "MARK_l0",
            g(implies(
                and_all([big_a.clone(), always(iv(0, u, true, false), na), eventually(closed_u.clone(), big_a.clone())]),
                eventually(closed_u, and(big_a, nb)),
            )),
        );
    }
    out
}
