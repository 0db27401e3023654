//! Brute-force verification of the axiom systems, the Λ★ equations, the
//! translations between the logics and the algebraizability witnesses.
//!
//! Schemas are checked with their metavariables as fresh atoms, which covers
//! every instance because evaluation is compositional.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{consequence, is_valid, Countermodel, Matrix};
use crate::chain::Chain;
use crate::error::Error;
use crate::formula::{self as fm, F};
use crate::structure::StarChain;
use crate::synth::Definitions;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub item: String,
    pub params: String,
    pub countermodel: Option<Countermodel>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub checked: usize,
    pub failures: Vec<Failure>,
}

impl Report {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }

    fn record(&mut self, item: &str, params: String, cm: Option<Countermodel>) {
        self.checked += 1;
        if let Some(cm) = cm {
            self.failures.push(Failure {
                item: item.to_string(),
                params,
                countermodel: Some(cm),
            });
        }
    }

    pub(crate) fn expect(&mut self, item: &str, params: String, holds: bool) {
        self.checked += 1;
        if !holds {
            self.failures.push(Failure {
                item: item.to_string(),
                params,
                countermodel: None,
            });
        }
    }

    pub fn merge(&mut self, other: Report) {
        self.checked += other.checked;
        self.failures.extend(other.failures);
    }
}

/// Derived connectives of Λ*_{n+1,i} as formula builders.
struct Lang {
    defs: Definitions,
    i: usize,
    n: usize,
}

impl Lang {
    fn new(m: Matrix) -> Self {
        Lang {
            defs: Definitions::for_chain(&m.chain()),
            i: m.i as usize,
            n: m.n as usize,
        }
    }

    fn d(&self, a: usize, f: &F) -> F {
        self.defs.delta(a, f)
    }

    fn chi(&self, a: usize, f: &F) -> F {
        self.defs.chi(a, f)
    }

    fn imp(&self, a: &F, b: &F) -> F {
        fm::join(&fm::neg(&self.d(self.i, a)), b)
    }

    fn iff(&self, a: &F, b: &F) -> F {
        fm::meet(&self.imp(a, b), &self.imp(b, a))
    }

    /// `*a` on numerators.
    fn sq(&self, a: usize) -> usize {
        (2 * a).saturating_sub(self.n)
    }
}

fn atoms() -> (F, F, F) {
    (fm::var(0), fm::var(1), fm::var(2))
}

fn fr(a: usize, n: usize) -> String {
    format!("{a}/{n}")
}

fn valid(m: Matrix, f: &F) -> Option<Countermodel> {
    is_valid(m, f).expect("schemas use at most three atoms")
}

/// CPL schemas, (Ax1)–(Ax12) for all parameters, and soundness of (MP).
pub fn check_hilbert_axioms(m: Matrix) -> Report {
    let l = Lang::new(m);
    let (al, be, ga) = atoms();
    let n = l.n;
    let mut r = Report::default();
    let imp = |a: &F, b: &F| l.imp(a, b);
    let iff = |a: &F, b: &F| l.iff(a, b);
    let cpl = [
        ("CPL1", imp(&al, &fm::join(&al, &be))),
        ("CPL2", imp(&al, &fm::join(&be, &al))),
        (
            "CPL3",
            imp(
                &imp(&al, &ga),
                &imp(&imp(&be, &ga), &imp(&fm::join(&al, &be), &ga)),
            ),
        ),
        ("CPL4", imp(&al, &imp(&be, &al))),
        (
            "CPL5",
            imp(&imp(&al, &be), &imp(&imp(&be, &ga), &imp(&al, &ga))),
        ),
        ("CPL6", fm::join(&al, &imp(&al, &be))),
        (
            "Ax1",
            imp(&iff(&al, &be), &iff(&fm::neg(&al), &fm::neg(&be))),
        ),
        ("Ax2", iff(&fm::neg(&fm::neg(&al)), &al)),
        ("Ax3", imp(&fm::neg(&fm::join(&al, &be)), &fm::neg(&al))),
        (
            "Ax4",
            imp(
                &fm::neg(&al),
                &imp(&fm::neg(&be), &fm::neg(&fm::join(&al, &be))),
            ),
        ),
        ("Ax10", imp(&l.d(l.i, &al), &al)),
    ];
    for (name, f) in &cpl {
        r.record(name, String::new(), valid(m, f));
    }
    for a in 0..=n {
        let p = fr(a, n);
        // Δ_0 is the constant 1, so a = 0 is excluded.
        for b in (0..=n).filter(|_| a > 0) {
            let f = iff(&l.d(a, &l.d(b, &al)), &l.d(b, &al));
            r.record("Ax5", format!("a={p} b={}", fr(b, n)), valid(m, &f));
        }
        let da = l.d(a, &al);
        r.record("Ax6", p.clone(), valid(m, &fm::join(&da, &fm::neg(&da))));
        let f = iff(
            &l.d(a, &fm::join(&al, &be)),
            &fm::join(&l.d(a, &al), &l.d(a, &be)),
        );
        r.record("Ax8", p.clone(), valid(m, &f));
        let f = imp(&l.d(a, &al), &l.d(l.sq(a), &fm::star(&al)));
        r.record("Ax11", p.clone(), valid(m, &f));
        if a < n {
            let f = imp(&l.d(a + 1, &al), &l.d(a, &al));
            r.record("Ax7", p.clone(), valid(m, &f));
            let f = iff(&l.d(n - a, &fm::neg(&al)), &fm::neg(&l.d(a + 1, &al)));
            r.record("Ax9", p.clone(), valid(m, &f));
            let f = imp(&l.d(l.sq(a) + 1, &fm::star(&al)), &l.d(a + 1, &al));
            r.record("Ax12", p, valid(m, &f));
        }
    }
    let mp = consequence(m, &[&al, &imp(&al, &be)], &be).unwrap();
    r.record("MP", String::new(), mp);
    r
}

/// Items (i)–(xvi) of the list of derived theorems, for all parameters.
pub fn check_lemma_theorems(m: Matrix) -> Report {
    let l = Lang::new(m);
    let (al, be, _) = atoms();
    let n = l.n;
    let mut r = Report::default();
    let imp = |a: &F, b: &F| l.imp(a, b);
    let iff = |a: &F, b: &F| l.iff(a, b);
    let neg = fm::neg;
    let f = fm::meet(&al, &neg(&l.d(l.i, &al)));
    r.record("vi", String::new(), valid(m, &imp(&f, &be)));
    r.record("v", String::new(), valid(m, &imp(&al, &l.d(l.i, &al))));
    let all_chi = fm::join_all((0..=n).map(|a| l.chi(a, &al))).unwrap();
    r.record("viii", String::new(), valid(m, &all_chi));
    for a in 0..=n {
        let p = fr(a, n);
        let da = l.d(a, &al);
        r.record("i", p.clone(), valid(m, &imp(&da, &imp(&neg(&da), &be))));
        let f = iff(&da, &l.d(a, &neg(&neg(&al))));
        r.record("iv", p.clone(), valid(m, &f));
        let f = imp(
            &l.chi(a, &fm::join(&al, &be)),
            &fm::join(&l.chi(a, &al), &l.chi(a, &be)),
        );
        r.record("vii", p.clone(), valid(m, &f));
        let f = iff(&l.chi(a, &al), &l.chi(n - a, &neg(&al)));
        r.record("xii", p.clone(), valid(m, &f));
        let f = imp(&l.chi(a, &al), &l.chi(l.sq(a), &fm::star(&al)));
        r.record("xiii", p.clone(), valid(m, &f));
        let bigger = fm::join_all((a..=n).map(|b| l.chi(b, &al))).unwrap();
        r.record("xv", p.clone(), valid(m, &iff(&da, &bigger)));
        if a < n {
            let up = l.d(a + 1, &al);
            let down = l.d(n - a, &neg(&al));
            r.record("ii", p.clone(), valid(m, &imp(&up, &imp(&down, &be))));
            r.record("iii", p.clone(), valid(m, &fm::join(&up, &down)));
        }
        for b in 0..=n {
            let q = format!("a={p} b={}", fr(b, n));
            if a != b {
                let f = imp(&fm::meet(&l.chi(a, &al), &l.chi(b, &al)), &be);
                r.record("ix", q.clone(), valid(m, &f));
            }
            let db = l.d(b, &be);
            let f = iff(&imp(&da, &db), &imp(&neg(&db), &neg(&da)));
            r.record("x", q.clone(), valid(m, &f));
            let f = imp(
                &fm::meet(&l.chi(a, &al), &l.chi(b, &be)),
                &l.chi(a.max(b), &fm::join(&al, &be)),
            );
            r.record("xi", q.clone(), valid(m, &f));
            let db_at_a = if a >= b { n } else { 0 };
            let f = imp(&l.chi(a, &al), &l.chi(db_at_a, &l.d(b, &al)));
            r.record("xiv", q.clone(), valid(m, &f));
            if b >= a {
                r.record("xvi", q, valid(m, &imp(&l.d(b, &al), &da)));
            }
        }
    }
    r
}

/// `★α ⇒_c α` and `(α ⇒_c β) → (★α ⇒_c ★β)`.
pub fn check_crisp_monotonicity(m: Matrix) -> Report {
    let l = Lang::new(m);
    let (al, be, _) = atoms();
    let mut r = Report::default();
    let sa = fm::star(&al);
    let f = l.defs.crisp_imp(&sa, &al);
    r.record("star-decreasing", String::new(), valid(m, &f));
    let f = l.imp(
        &l.defs.crisp_imp(&al, &be),
        &l.defs.crisp_imp(&sa, &fm::star(&be)),
    );
    r.record("star-monotone", String::new(), valid(m, &f));
    r
}

/// (Eq1)–(Eq9) on Ł*_{n+1}.
pub fn check_lambda_equations(chain: &Chain) -> Report {
    check_lambda_equations_on(chain, chain)
}

/// (Eq1)–(Eq9) on an arbitrary star chain of the same size as `chain`,
/// with Δ_a the terms synthesized on Ł*_{n+1} evaluated with the
/// structure's own ★ and ∼.
pub fn check_lambda_equations_on(chain: &Chain, s: &impl StarChain) -> Report {
    assert_eq!(s.len(), chain.len(), "structure must have n+1 elements");
    let defs = Definitions::for_chain(chain);
    let n = chain.n() as usize;
    let top = s.top();
    let d = |a: usize, x: usize| defs.delta_term(a).eval(s, x);
    let imp = |x: usize, y: usize| s.goedel_imp(x, y);
    let sq = |a: usize| (2 * a).saturating_sub(n);
    let mut r = Report::default();
    for x in 0..=n {
        let p = |a: usize| format!("a={} x={}", fr(a, n), fr(x, n));
        r.expect(
            "Eq1",
            format!("x={}", fr(x, n)),
            d(n, x) == s.delta(x) && d(0, x) == top,
        );
        for a in 0..=n {
            // Δ_0 is the constant 1 by (Eq1), so a = 0 is excluded.
            for b in (0..=n).filter(|_| a > 0) {
                r.expect(
                    "Eq2",
                    format!("a={} b={} x={}", fr(a, n), fr(b, n), fr(x, n)),
                    d(a, d(b, x)) == d(b, x),
                );
            }
            r.expect("Eq3", p(a), d(a, x).max(s.inv(d(a, x))) == top);
            r.expect("Eq8", p(a), imp(d(a, x), d(sq(a), s.star(x))) == top);
            if a < n {
                r.expect("Eq4", p(a), imp(d(a + 1, x), d(a, x)) == top);
                r.expect(
                    "Eq6",
                    p(a),
                    imp(d(n - a, s.inv(x)), s.inv(d(a + 1, x))) == top,
                );
                r.expect(
                    "Eq9",
                    p(a),
                    imp(d(sq(a) + 1, s.star(x)), d(a + 1, x)) == top,
                );
            }
            for y in 0..=n {
                r.expect(
                    "Eq5",
                    format!("a={} x={} y={}", fr(a, n), fr(x, n), fr(y, n)),
                    d(a, x.max(y)) == d(a, x).max(d(a, y)),
                );
            }
        }
        for y in 0..=n {
            r.expect(
                "Eq7",
                format!("x={} y={}", fr(x, n), fr(y, n)),
                imp(s.delta(imp(x, y)), imp(s.star(x), s.star(y))) == top,
            );
        }
    }
    r
}

/// Premises and conclusion.
pub type Sample = (Vec<F>, F);

fn random_formula(rng: &mut ChaCha8Rng, depth: usize, vars: usize) -> F {
    if depth == 0 || rng.gen_bool(0.25) {
        return match rng.gen_range(0..10) {
            0 => fm::zero(),
            1 => fm::one(),
            _ => fm::var(rng.gen_range(0..vars)),
        };
    }
    match rng.gen_range(0..3) {
        0 => fm::neg(&random_formula(rng, depth - 1, vars)),
        1 => fm::star(&random_formula(rng, depth - 1, vars)),
        _ => fm::join(
            &random_formula(rng, depth - 1, vars),
            &random_formula(rng, depth - 1, vars),
        ),
    }
}

/// `count` random pairs (Γ, φ) with up to two premises.
pub fn random_sample(seed: u64, count: usize, depth: usize, vars: usize) -> Vec<Sample> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let k = rng.gen_range(0..=2);
            let premises = (0..k)
                .map(|_| random_formula(&mut rng, depth, vars))
                .collect();
            (premises, random_formula(&mut rng, depth, vars))
        })
        .collect()
}

fn entails(m: Matrix, premises: &[F], f: &F) -> Result<bool, Error> {
    let refs: Vec<&fm::Formula> = premises.iter().map(|p| p.as_ref()).collect();
    Ok(consequence(m, &refs, f)?.is_none())
}

/// The translations τ_1(φ) = Δ_1 φ and τ_{i,2}(φ) = Δ_{i/n} φ between
/// Λ*_{n+1} and Λ*_{n+1,i}, on every sampled pair.
pub fn check_translations(n: u32, i: u32, sample: &[Sample]) -> Result<Report, Error> {
    let full = Matrix::new(n, n)?;
    let mi = Matrix::new(n, i)?;
    let defs = Definitions::for_chain(&full.chain());
    let (n, i) = (n as usize, i as usize);
    let t1 = |f: &F| defs.delta(n, f);
    let t2 = |f: &F| defs.delta(i, f);
    let mut r = Report::default();
    for (k, (gamma, phi)) in sample.iter().enumerate() {
        let g1: Vec<F> = gamma.iter().map(t1).collect();
        let g2: Vec<F> = gamma.iter().map(t2).collect();
        let p = format!("sample {k}: {} ⊨ {phi}", gamma.len());
        let left = entails(full, gamma, phi)?;
        r.expect("tau1", p.clone(), left == entails(mi, &g1, &t1(phi))?);
        let left = entails(mi, gamma, phi)?;
        r.expect("tau2", p.clone(), left == entails(full, &g2, &t2(phi))?);
        let back = t2(&t1(phi));
        let round =
            entails(full, std::slice::from_ref(phi), &back)? && entails(full, &[back], phi)?;
        r.expect("roundtrip-full", p.clone(), round);
        let back = t1(&t2(phi));
        let round = entails(mi, std::slice::from_ref(phi), &back)? && entails(mi, &[back], phi)?;
        r.expect("roundtrip-i", p, round);
    }
    Ok(r)
}

/// The witnesses Θ(p,q) = {p ≈ q}, δ(p) = p, ε(p) = Δ_0 p for Λ*_{n+1},
/// with `x ≈ y = Δ_1((x ⇒_G y) ∧ (y ⇒_G x))`.
pub fn check_algebraizability(n: u32) -> Result<Report, Error> {
    let m = Matrix::new(n, n)?;
    let chain = m.chain();
    let defs = Definitions::for_chain(&chain);
    let top = n as usize;
    let approx = |x: &F, y: &F| {
        defs.delta(
            top,
            &fm::meet(&defs.goedel_imp(x, y), &defs.goedel_imp(y, x)),
        )
    };
    let (p, q, s) = atoms();
    let t = fm::var(3);
    let mut r = Report::default();
    let th = approx(&p, &q);
    let mut exact = true;
    for x in 0..=top {
        for y in 0..=top {
            exact &= (th.eval_on(&chain, &[x, y]) == top) == (x == y);
        }
    }
    r.expect("theta-is-equality", String::new(), exact);
    let cons = |prem: &[&F], f: &F| -> Result<Option<Countermodel>, Error> {
        let refs: Vec<&fm::Formula> = prem.iter().map(|x| x.as_ref()).collect();
        consequence(m, &refs, f)
    };
    r.record("i", String::new(), cons(&[], &approx(&p, &p))?);
    r.record("ii", String::new(), cons(&[&th], &approx(&q, &p))?);
    r.record(
        "iii",
        String::new(),
        cons(&[&th, &approx(&q, &s)], &approx(&p, &s))?,
    );
    r.record(
        "iv-neg",
        String::new(),
        cons(&[&th], &approx(&fm::neg(&p), &fm::neg(&q)))?,
    );
    r.record(
        "iv-star",
        String::new(),
        cons(&[&th], &approx(&fm::star(&p), &fm::star(&q)))?,
    );
    let f = approx(&fm::join(&p, &s), &fm::join(&q, &t));
    r.record("iv-join", String::new(), cons(&[&th, &approx(&s, &t)], &f)?);
    let de = approx(&p, &defs.delta(0, &p));
    r.record("v-to", String::new(), cons(&[&p], &de)?);
    r.record("v-from", String::new(), cons(&[&de], &p)?);
    Ok(r)
}
