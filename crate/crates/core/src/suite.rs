//! Verification suites: every executable identity of the library run as a
//! named check, collected into a stable, machine-readable report.

use std::cell::OnceCell;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::adjoint::{ad_orbit_span, bar_locally_finite_decomposition, transfer_check, twisted_vanishing_probe};
use crate::algebra::{Algebra, Element};
use crate::error::{Error, Result};
use crate::hc_center::{
    anticentral_certificate, even_torus_invariant_check, evaluate, minuscule_product, scasimir_height, solve_central,
    upsilon, AntiCentralSolution, Character, CentralSolution,
};
use crate::hopf::{hopf_axiom_check, hopf_multiplicativity_check, super_axiom_check, super_multiplicativity_check};
use crate::scalars::Scalar;
use crate::verma::{
    annihilation_criterion, annihilates_window, predicted_scasimir_spectrum, scasimir_spectrum,
    VermaModule,
};
use crate::weights::{sign_identity, GammaElement, Weight, WeylElement};
use crate::zhang::{bar_e, bar_f, bar_k, bar_relations_verify, in_bar, psi, psi_sign_check};

const SEED: u64 = 0x5eed_0f_05;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckRecord {
    pub id: String,
    pub anchor: String,
    pub status: Status,
    pub witness: String,
    pub millis: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub rank: usize,
    pub height: usize,
    pub checks: Vec<CheckRecord>,
    /// Set when the memoization budget ran out; later checks are skipped.
    pub aborted: bool,
}

impl VerificationReport {
    pub fn failures(&self) -> usize {
        self.checks.iter().filter(|c| c.status == Status::Fail).count()
    }

    /// 0 all pass, 1 some failure, 3 resource abort.
    pub fn exit_code(&self) -> i32 {
        if self.aborted {
            3
        } else if self.failures() > 0 {
            1
        } else {
            0
        }
    }

    /// One tab-separated line per check. Timings are optional so that reports
    /// can be compared byte for byte.
    pub fn to_tsv(&self, timings: bool) -> String {
        let mut out = String::from("suite\tcheck\tanchor\tstatus\twitness");
        if timings {
            out.push_str("\tms");
        }
        out.push('\n');
        for c in &self.checks {
            let witness = c.witness.replace(['\t', '\n'], " ");
            out.push_str(&format!("{}\t{}\t{}\t{}\t{}", self.suite, c.id, c.anchor, c.status, witness));
            if timings {
                out.push_str(&format!("\t{}", c.millis));
            }
            out.push('\n');
        }
        if self.aborted {
            out.push_str(&format!("{}\t-\t-\taborted\tmemoization budget exhausted\n", self.suite));
        }
        out
    }

    pub fn to_json(&self, timings: bool) -> String {
        let mut v = serde_json::to_value(self).expect("report serializes");
        if !timings {
            if let Some(checks) = v["checks"].as_array_mut() {
                for c in checks {
                    c.as_object_mut().map(|o| o.remove("millis"));
                }
            }
        }
        serde_json::to_string_pretty(&v).expect("report serializes")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SuiteName {
    All,
    Gradations,
    Hopf,
    Zhang,
    Adjoint,
    Center,
    Verma,
    BarRelations,
}

impl SuiteName {
    pub const ALL: [SuiteName; 8] = [
        SuiteName::All,
        SuiteName::Gradations,
        SuiteName::Hopf,
        SuiteName::Zhang,
        SuiteName::Adjoint,
        SuiteName::Center,
        SuiteName::Verma,
        SuiteName::BarRelations,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            SuiteName::All => "all",
            SuiteName::Gradations => "gradations",
            SuiteName::Hopf => "hopf",
            SuiteName::Zhang => "zhang",
            SuiteName::Adjoint => "adjoint",
            SuiteName::Center => "center",
            SuiteName::Verma => "verma",
            SuiteName::BarRelations => "bar-relations",
        }
    }
}

impl fmt::Display for SuiteName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SuiteName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|n| n.as_str() == s)
            .ok_or_else(|| Error::Range(format!("unknown suite {s:?}")))
    }
}

type Outcome = Result<(bool, String)>;

struct Check<'a> {
    id: &'static str,
    anchor: &'static str,
    run: Box<dyn Fn(&Ctx) -> Outcome + 'a>,
}

/// Shared state for one run: the algebra plus lazily solved central elements.
struct Ctx<'a> {
    alg: &'a Algebra,
    height: usize,
    casimir: OnceCell<Result<CentralSolution>>,
    scasimir: OnceCell<Result<AntiCentralSolution>>,
}

/// Marker error turned into a `skipped` status.
fn skip<T>(why: impl Into<String>) -> Result<T> {
    Err(Error::Precondition(format!("skip: {}", why.into())))
}

impl Ctx<'_> {
    fn rank(&self) -> usize {
        self.alg.rank()
    }

    fn casimir(&self) -> Result<&CentralSolution> {
        let need = scasimir_height(self.rank());
        if self.height < need {
            return skip(format!("window for z_(w_l) needs height {need}"));
        }
        self.casimir
            .get_or_init(|| solve_central(self.alg, &self.alg.roots().fundamental(self.rank()), need))
            .as_ref()
            .map_err(Clone::clone)
    }

    fn scasimir(&self) -> Result<&AntiCentralSolution> {
        let central = self.casimir()?;
        self.scasimir
            .get_or_init(|| {
                let xi = self.alg.xi(GammaElement::w_l(self.rank()))?;
                let element = self.alg.mul(&xi, &central.element);
                let certified = anticentral_certificate(self.alg, &element)?;
                Ok(AntiCentralSolution { element, central: central.clone(), certified })
            })
            .as_ref()
            .map_err(Clone::clone)
    }

    /// Verma truncation height used for module checks.
    fn verma_height(&self) -> usize {
        self.height.min(if self.rank() == 1 { 4 } else { 2 })
    }
}

/// `E_i`, `F_i`, `K_{±β_i}`, `K_{α_i}` and `ξ_{β_i}` for every `i`.
pub fn generators(alg: &Algebra) -> Result<Vec<Element>> {
    let l = alg.rank();
    let mut g = Vec::new();
    for i in 1..=l {
        g.push(alg.e(i)?);
        g.push(alg.f(i)?);
        g.push(alg.k(&Weight::beta_basis(l, i))?);
        g.push(alg.k(&-&Weight::beta_basis(l, i))?);
        g.push(alg.k_alpha(i, 1)?);
        g.push(alg.xi(GammaElement::from_mask(1 << (i - 1), l))?);
    }
    Ok(g)
}

/// Generators of Ū: `e_i`, `f_i` and `k_{±β_i}`.
pub fn bar_generators(alg: &Algebra) -> Result<Vec<Element>> {
    let l = alg.rank();
    let mut g = Vec::new();
    for i in 1..=l {
        g.push(bar_e(alg, i)?);
        g.push(bar_f(alg, i)?);
        g.push(bar_k(alg, &Weight::beta_basis(l, i))?);
        g.push(bar_k(alg, &-&Weight::beta_basis(l, i))?);
    }
    Ok(g)
}

/// Product of one or two random generators.
fn random_word(gens: &[Element], alg: &Algebra, rng: &mut ChaCha8Rng) -> Element {
    let a = gens.choose(rng).expect("nonempty");
    if rng.gen_bool(0.5) {
        a.clone()
    } else {
        alg.mul(a, gens.choose(rng).expect("nonempty"))
    }
}

fn all_of<T: fmt::Display>(items: impl IntoIterator<Item = T>, mut ok: impl FnMut(&T) -> Result<bool>) -> Outcome {
    let mut n = 0;
    for x in items {
        n += 1;
        if !ok(&x)? {
            return Ok((false, format!("counterexample: {x}")));
        }
    }
    Ok((true, format!("{n} cases")))
}

fn alpha_grid(alg: &Algebra) -> Vec<Weight> {
    let l = alg.rank();
    let mut out = vec![Weight::zero(l)];
    for i in 1..=l {
        let a = alg.roots().simple_root(i);
        let a = &a;
        out = out.into_iter().flat_map(|w| (0..3).map(move |c| &w + &a.scale(c))).collect();
    }
    out
}

struct Pair(Element, Element);

impl fmt::Display for Pair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.0, self.1)
    }
}

fn relation_outcome(checks: Vec<crate::algebra::RelationCheck>) -> Outcome {
    let n = checks.len();
    match checks.into_iter().find(|c| !c.holds) {
        Some(c) => Ok((false, format!("fails: {}", c.label))),
        None => Ok((true, format!("{n} relations"))),
    }
}

fn gradation_checks<'a>() -> Vec<Check<'a>> {
    vec![
        Check {
            id: "sign-identity",
            anchor: "parity sign identity (ν,η(ν')) + (η(ν),ν') + (ν,ν') = |ν||ν'|",
            run: Box::new(|c| {
                let grid = alpha_grid(c.alg);
                let pairs: Vec<(Weight, Weight)> =
                    grid.iter().flat_map(|a| grid.iter().map(move |b| (a.clone(), b.clone()))).collect();
                let n = pairs.len();
                for (a, b) in pairs {
                    if !sign_identity(&a, &b)?.holds() {
                        return Ok((false, format!("counterexample: ({a}, {b})")));
                    }
                }
                Ok((true, format!("{n} pairs")))
            }),
        },
        Check {
            id: "defining-relations",
            anchor: "defining relations of the extended algebra",
            run: Box::new(|c| relation_outcome(c.alg.defining_relations_verify()?)),
        },
        Check {
            id: "bigrade",
            anchor: "μ-grading equals δ-grading shifted by η(ν)",
            run: Box::new(|c| {
                let gens = generators(c.alg)?;
                let mut rng = ChaCha8Rng::seed_from_u64(SEED);
                let mut words = gens.clone();
                words.extend((0..100).map(|_| random_word(&gens, c.alg, &mut rng)));
                all_of(words, |x| Ok(c.alg.bigrade_check(x)))
            }),
        },
        Check {
            id: "weyl-dot-action",
            anchor: "dot action is a group action",
            run: Box::new(|c| {
                let roots = c.alg.roots();
                let group = roots.weyl_group();
                let lam = Weight::from_twice(&(1..=c.rank() as i32).map(|i| 2 * i + 1).collect::<Vec<_>>());
                let mut n = 0;
                for w in &group {
                    for u in WeylElement::generators(c.rank()) {
                        n += 1;
                        let lhs = roots.dot_action(&w.compose(&u), &lam);
                        let rhs = roots.dot_action(w, &roots.dot_action(&u, &lam));
                        if lhs != rhs {
                            return Ok((false, format!("counterexample: w = {w}, s = {u}")));
                        }
                    }
                }
                Ok((true, format!("{n} products on λ = {lam}")))
            }),
        },
    ]
}

fn hopf_checks<'a>() -> Vec<Check<'a>> {
    fn axioms(c: &Ctx, sup: bool, random: bool) -> Outcome {
        let gens = if sup { bar_generators(c.alg)? } else { generators(c.alg)? };
        let words: Vec<Element> = if random {
            let mut rng = ChaCha8Rng::seed_from_u64(SEED + sup as u64);
            (0..100).map(|_| random_word(&gens, c.alg, &mut rng)).collect()
        } else {
            gens
        };
        let n = words.len();
        for x in words {
            let r = if sup { super_axiom_check(c.alg, &x) } else { hopf_axiom_check(c.alg, &x) };
            if let Err(law) = r {
                return Ok((false, format!("{law} fails on {x}")));
            }
        }
        Ok((true, format!("{n} elements")))
    }
    fn mult(c: &Ctx, sup: bool) -> Outcome {
        let gens = if sup { bar_generators(c.alg)? } else { generators(c.alg)? };
        let mut rng = ChaCha8Rng::seed_from_u64(SEED + 2 + sup as u64);
        for _ in 0..100 {
            let x = random_word(&gens, c.alg, &mut rng);
            let y = random_word(&gens, c.alg, &mut rng);
            let r = if sup {
                super_multiplicativity_check(c.alg, &x, &y)
            } else {
                hopf_multiplicativity_check(c.alg, &x, &y)
            };
            if let Err(law) = r {
                return Ok((false, format!("{law} fails on ({x}, {y})")));
            }
        }
        Ok((true, "100 pairs".into()))
    }
    vec![
        Check {
            id: "hopf-axioms-generators",
            anchor: "counit, coassociativity and antipode laws of (Δ, S, ε)",
            run: Box::new(|c| axioms(c, false, false)),
        },
        Check {
            id: "hopf-axioms-random",
            anchor: "counit, coassociativity and antipode laws of (Δ, S, ε)",
            run: Box::new(|c| axioms(c, false, true)),
        },
        Check {
            id: "hopf-multiplicativity",
            anchor: "Δ is an algebra map and S an anti-algebra map",
            run: Box::new(|c| mult(c, false)),
        },
        Check {
            id: "super-axioms-generators",
            anchor: "super Hopf laws of (Δ̄, S̄, ε) on Ū",
            run: Box::new(|c| axioms(c, true, false)),
        },
        Check {
            id: "super-axioms-random",
            anchor: "super Hopf laws of (Δ̄, S̄, ε) on Ū",
            run: Box::new(|c| axioms(c, true, true)),
        },
        Check {
            id: "super-multiplicativity",
            anchor: "Koszul-signed multiplicativity of Δ̄ and S̄",
            run: Box::new(|c| mult(c, true)),
        },
    ]
}

fn bar_relation_check<'a>() -> Check<'a> {
    Check {
        id: "bar-relations",
        anchor: "Ū satisfies the relations of U_{-q}(osp(1,2l))",
        run: Box::new(|c| relation_outcome(bar_relations_verify(c.alg)?)),
    }
}

fn zhang_checks<'a>() -> Vec<Check<'a>> {
    vec![
        Check {
            id: "psi-involution",
            anchor: "Ψ is an involution",
            run: Box::new(|c| {
                let alg = c.alg;
                let l = c.rank();
                let h = c.height.min(4);
                let mut tori = vec![vec![0; l]];
                tori.extend((0..l).map(|i| (0..l).map(|j| (i == j) as i32).collect()));
                let mut n = 0;
                for lf in 0..=h {
                    for u in alg.standard_words_of_length(lf) {
                        for le in 0..=h - lf {
                            for w in alg.standard_words_of_length(le) {
                                for t in &tori {
                                    for g in 0..1u32 << l {
                                        let x = alg.from_letters(&u, t, GammaElement::from_mask(g, l), &w);
                                        n += 1;
                                        if psi(alg, &psi(alg, &x)) != x {
                                            return Ok((false, format!("counterexample: {x}")));
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
                Ok((true, format!("{n} normal words to height {h}")))
            }),
        },
        Check {
            id: "psi-sign-law",
            anchor: "Ψ(ab) = (-1)^{(ν(a),μ(b))} Ψ(a)Ψ(b)",
            run: Box::new(|c| {
                let gens = generators(c.alg)?;
                let mut rng = ChaCha8Rng::seed_from_u64(SEED + 4);
                let pairs: Vec<Pair> = (0..200)
                    .map(|_| Pair(random_word(&gens, c.alg, &mut rng), random_word(&gens, c.alg, &mut rng)))
                    .collect();
                all_of(pairs, |p| psi_sign_check(c.alg, &p.0, &p.1))
            }),
        },
        Check {
            id: "bar-generators",
            anchor: "Ψ carries U onto Ū",
            run: Box::new(|c| {
                let gens = bar_generators(c.alg)?;
                let mut rng = ChaCha8Rng::seed_from_u64(SEED + 5);
                let mut xs = gens.clone();
                xs.extend((0..50).map(|_| random_word(&gens, c.alg, &mut rng)));
                all_of(xs, |x| Ok(in_bar(c.alg, x)))
            }),
        },
        bar_relation_check(),
    ]
}

fn adjoint_checks<'a>() -> Vec<Check<'a>> {
    vec![
        Check {
            id: "transfer-generators",
            anchor: "transfer of ad_λ to sad with the exact sign t",
            run: Box::new(|c| {
                let l = c.rank();
                let gens = generators(c.alg)?;
                let mut n = 0;
                for lam in [GammaElement::zero(l), GammaElement::w_l(l)] {
                    for a in &gens {
                        for x in &gens {
                            n += 1;
                            if !transfer_check(c.alg, a, x, lam)? {
                                return Ok((false, format!("counterexample: a = {a}, x = {x}, λ = {lam}")));
                            }
                        }
                    }
                }
                Ok((true, format!("{n} triples")))
            }),
        },
        Check {
            id: "transfer-random",
            anchor: "transfer of ad_λ to sad with the exact sign t",
            run: Box::new(|c| {
                let l = c.rank();
                let gens = generators(c.alg)?;
                let mut rng = ChaCha8Rng::seed_from_u64(SEED + 6);
                for _ in 0..100 {
                    let a = random_word(&gens, c.alg, &mut rng);
                    let x = random_word(&gens, c.alg, &mut rng);
                    let lam = if rng.gen_bool(0.5) { GammaElement::w_l(l) } else { GammaElement::zero(l) };
                    if !transfer_check(c.alg, &a, &x, lam)? {
                        return Ok((false, format!("counterexample: a = {a}, x = {x}, λ = {lam}")));
                    }
                }
                Ok((true, "100 pairs".into()))
            }),
        },
        Check {
            id: "twisted-vanishing",
            anchor: "ad_λ-locally finite part vanishes for λ ≠ 0",
            run: Box::new(|c| {
                let h = c.height.min(3);
                let ok = twisted_vanishing_probe(c.alg, GammaElement::w_l(c.rank()), h)?;
                Ok((ok, format!("window height {h}")))
            }),
        },
        Check {
            id: "orbit-w_l",
            anchor: "ad-orbit of K_{-w_l} is finite dimensional",
            run: Box::new(|c| {
                let need = scasimir_height(c.rank());
                if c.height < need {
                    return skip(format!("orbit closes at height {need}"));
                }
                let o = ad_orbit_span(c.alg, &c.alg.roots().fundamental(c.rank()), need)?;
                Ok((o.stabilized, format!("dimension {}", o.dim())))
            }),
        },
        Check {
            id: "bar-decomposition",
            anchor: "δ-split of the orbit is stable under sad and sad'",
            run: Box::new(|c| {
                let need = scasimir_height(c.rank());
                if c.height < need {
                    return skip(format!("orbit closes at height {need}"));
                }
                let d = bar_locally_finite_decomposition(c.alg, &c.alg.roots().fundamental(c.rank()), need)?;
                Ok((d.closed && d.stabilized && d.n0.is_empty(), format!("parts {} + {}", d.n0.len(), d.n1.len())))
            }),
        },
    ]
}

fn center_checks<'a>() -> Vec<Check<'a>> {
    vec![
        Check {
            id: "casimir-w_l",
            anchor: "central element z_{w_l} from the commutant of the generators",
            run: Box::new(|c| {
                let z = c.casimir()?;
                Ok((z.certified, format!("window {}, kernel {}", z.window, z.kernel_dim)))
            }),
        },
        Check {
            id: "hc-product-formula",
            anchor: "Υ(z_{w_l}) = Π_i (q^{-(ρ,β_i)} K_{-β_i} + q^{(ρ,β_i)} K_{β_i})",
            run: Box::new(|c| {
                let ups = upsilon(&c.casimir()?.element);
                let expect = minuscule_product(c.alg);
                Ok((ups == expect, format!("{} torus terms", expect.len())))
            }),
        },
        Check {
            id: "casimir-2w_1",
            anchor: "central element z_{2w_1} in rank one",
            run: Box::new(|c| {
                if c.rank() != 1 {
                    return skip("rank one only");
                }
                if c.height < 4 {
                    return skip("window closes at height 4");
                }
                let z1 = &c.casimir()?.element;
                let z = solve_central(c.alg, &Weight::from_twice(&[4]), 4)?;
                let expect = &c.alg.mul(z1, z1) - &c.alg.one();
                Ok((z.certified && z.element == expect, format!("kernel {}, equals z_(w_1)^2 - 1", z.kernel_dim)))
            }),
        },
        Check {
            id: "scasimir-anticommutes",
            anchor: "ξ_{w_l} z_{w_l} anticommutes with e_l, f_l and commutes with the even generators",
            run: Box::new(|c| {
                let s = c.scasimir()?;
                Ok((s.certified, format!("{} terms", s.element.len())))
            }),
        },
        Check {
            id: "even-torus-invariance",
            anchor: "Υ of a central element is dot-invariant and even",
            run: Box::new(|c| {
                let mut solved = vec![upsilon(&c.casimir()?.element)];
                if c.rank() == 1 && c.height >= 4 {
                    solved.push(upsilon(&solve_central(c.alg, &Weight::from_twice(&[4]), 4)?.element));
                }
                let n = solved.len();
                Ok((solved.iter().all(|x| even_torus_invariant_check(c.alg, x)), format!("{n} solved elements")))
            }),
        },
    ]
}

/// Character with `Λ(K_{β_i}) = values[i]`.
fn character(values: Vec<Scalar>, theta: GammaElement) -> Result<Character> {
    Character::new(values, theta)
}

fn random_character(l: usize, rng: &mut ChaCha8Rng) -> Result<Character> {
    let values = (0..l)
        .map(|_| Scalar::v_pow(rng.gen_range(-7..=7)) * Scalar::sign(rng.gen_bool(0.5)))
        .collect();
    character(values, GammaElement::from_mask(rng.gen_range(0..1u32 << l), l))
}

/// `±i q^{-(ρ,β_i)}` in slot `i`, a generic value elsewhere.
fn degenerate_character(alg: &Algebra, i: usize, minus: bool, theta: GammaElement) -> Result<Character> {
    let l = alg.rank();
    let t = alg.roots().rho().twice()[i - 1] as i64;
    let values = (1..=l)
        .map(|j| {
            if j == i {
                Scalar::imaginary_unit() * Scalar::v_pow(-t) * Scalar::sign(minus)
            } else {
                Scalar::v_pow(3)
            }
        })
        .collect();
    character(values, theta)
}

fn verma_checks<'a>() -> Vec<Check<'a>> {
    vec![
        Check {
            id: "scasimir-spectrum",
            anchor: "sCasimir acts on M(Λ) by ±θ(w_l) Λ(Υ(z_{w_l}))",
            run: Box::new(|c| {
                let sc = &c.scasimir()?.element;
                let z = &c.casimir()?.element;
                let mut rng = ChaCha8Rng::seed_from_u64(SEED + 7);
                for _ in 0..20 {
                    let chi = random_character(c.rank(), &mut rng)?;
                    let m = VermaModule::build(c.alg, chi, c.verma_height(), false)?;
                    let got = scasimir_spectrum(c.alg, &m, sc)?;
                    if got != predicted_scasimir_spectrum(&m, z, c.rank()) {
                        return Ok((false, format!("mismatch at Λ = {}", m.character())));
                    }
                }
                Ok((true, format!("20 characters, module height {}", c.verma_height())))
            }),
        },
        Check {
            id: "criterion-coherence",
            anchor: "annihilation criterion fails exactly when the sCasimir spectrum vanishes",
            run: Box::new(|c| {
                let l = c.rank();
                let sc = &c.scasimir()?.element;
                let mut chars = Vec::new();
                for i in 1..=l {
                    for minus in [false, true] {
                        chars.push(degenerate_character(c.alg, i, minus, GammaElement::zero(l))?);
                    }
                }
                let mut rng = ChaCha8Rng::seed_from_u64(SEED + 8);
                for _ in 0..6 {
                    chars.push(random_character(l, &mut rng)?);
                }
                let n = chars.len();
                for chi in chars {
                    let m = VermaModule::build(c.alg, chi.clone(), c.verma_height(), false)?;
                    let (e, o) = scasimir_spectrum(c.alg, &m, sc)?;
                    if annihilation_criterion(c.alg, &chi) == (e.is_zero() && o.is_zero()) {
                        return Ok((false, format!("incoherent at Λ = {chi}")));
                    }
                }
                Ok((true, format!("{n} characters")))
            }),
        },
        Check {
            id: "degenerate-annihilation",
            anchor: "ξ z_{w_1} annihilates M(Λ,θ) at the degenerate characters",
            run: Box::new(|c| {
                let sc = &c.scasimir()?.element;
                let l = c.rank();
                let h = if l == 1 { c.height.min(6) } else { c.verma_height() };
                let mut n = 0;
                for minus in [false, true] {
                    for theta in [GammaElement::zero(l), GammaElement::w_l(l)] {
                        let chi = degenerate_character(c.alg, l, minus, theta)?;
                        n += 1;
                        if annihilation_criterion(c.alg, &chi) || !annihilates_window(c.alg, sc, &chi, h)? {
                            return Ok((false, format!("nonzero action at Λ = {chi}")));
                        }
                    }
                }
                Ok((true, format!("{n} modules, height {h}")))
            }),
        },
        Check {
            id: "singular-vectors",
            anchor: "one singular line at the dot-reflected weight with shifted θ",
            run: Box::new(|c| {
                if c.rank() != 1 {
                    return skip("rank one only");
                }
                let alg = c.alg;
                let s = WeylElement::simple_reflection(1, 1);
                let h = c.height.max(3);
                for n in 1..=3i32 {
                    let lam = Weight::from_twice(&[n - 1]);
                    let m = VermaModule::build(alg, Character::linear(&lam, GammaElement::zero(1))?, h, false)?;
                    let found = m.singular_vectors(alg, &Weight::from_beta(&[n]))?;
                    let expect = Character::linear(&alg.roots().dot_action(&s, &lam), GammaElement::from_mask(n as u32 % 2, 1))?;
                    if found.len() != 1 || found[0].character != expect {
                        return Ok((false, format!("n = {n}: {} singular lines", found.len())));
                    }
                }
                Ok((true, "n = 1, 2, 3".into()))
            }),
        },
        Check {
            id: "central-scalar-action",
            anchor: "z_{w_l} acts on M(Λ) by Λ(Υ(z_{w_l}))",
            run: Box::new(|c| {
                let z = &c.casimir()?.element;
                let mut rng = ChaCha8Rng::seed_from_u64(SEED + 9);
                for _ in 0..5 {
                    let chi = random_character(c.rank(), &mut rng)?;
                    let m = VermaModule::build(c.alg, chi.clone(), c.verma_height(), false)?;
                    let a = m.scalar_action(c.alg, z);
                    let expect = Some(evaluate(&upsilon(z), &chi));
                    if !a.holds || a.even != expect || a.odd != expect {
                        return Ok((false, format!("mismatch at Λ = {chi}")));
                    }
                }
                Ok((true, "5 characters".into()))
            }),
        },
        Check {
            id: "odd-nondegeneracy",
            anchor: "E_l K_{-w_l} is nonzero on both graded components",
            run: Box::new(|c| {
                let mut rng = ChaCha8Rng::seed_from_u64(SEED + 10);
                let chi = random_character(c.rank(), &mut rng)?;
                let m = VermaModule::build(c.alg, chi, c.verma_height(), false)?;
                Ok((m.odd_nondegeneracy_probe(c.alg)?, format!("module dimension {}", m.dim())))
            }),
        },
    ]
}

fn checks_for<'a>(name: SuiteName) -> Vec<Check<'a>> {
    match name {
        SuiteName::All => {
            let mut v = gradation_checks();
            v.extend(hopf_checks());
            v.extend(zhang_checks());
            v.extend(adjoint_checks());
            v.extend(center_checks());
            v.extend(verma_checks());
            v
        }
        SuiteName::Gradations => gradation_checks(),
        SuiteName::Hopf => hopf_checks(),
        SuiteName::Zhang => zhang_checks(),
        SuiteName::Adjoint => adjoint_checks(),
        SuiteName::Center => center_checks(),
        SuiteName::Verma => verma_checks(),
        SuiteName::BarRelations => vec![bar_relation_check()],
    }
}

/// Maximum rank accepted by [`run_suite`].
pub const MAX_RANK: usize = 3;

/// Runs the named suite in declared order. If the algebra's memoization
/// budget runs out, the remaining checks are reported as skipped and the
/// report is marked aborted.
pub fn run_suite(alg: &Algebra, name: SuiteName, height: usize) -> Result<VerificationReport> {
    if alg.rank() > MAX_RANK {
        return Err(Error::Range(format!("suites run for rank at most {MAX_RANK}")));
    }
    let ctx = Ctx { alg, height, casimir: OnceCell::new(), scasimir: OnceCell::new() };
    let mut report =
        VerificationReport { suite: name.to_string(), rank: alg.rank(), height, checks: Vec::new(), aborted: false };
    for check in checks_for(name) {
        if report.aborted {
            report.checks.push(CheckRecord {
                id: check.id.into(),
                anchor: check.anchor.into(),
                status: Status::Skipped,
                witness: "not run after resource abort".into(),
                millis: 0,
            });
            continue;
        }
        let t = Instant::now();
        let outcome = (check.run)(&ctx);
        let millis = t.elapsed().as_millis() as u64;
        let (status, witness) = match outcome {
            Ok((true, w)) => (Status::Pass, w),
            Ok((false, w)) => (Status::Fail, w),
            Err(Error::Precondition(m)) if m.starts_with("skip: ") => (Status::Skipped, m[6..].to_string()),
            Err(e) => (Status::Fail, format!("error: {e}")),
        };
        report.checks.push(CheckRecord { id: check.id.into(), anchor: check.anchor.into(), status, witness, millis });
        if alg.budget_exhausted() {
            report.aborted = true;
        }
    }
    Ok(report)
}
