//! Property suites over generated instances.
//!
//! Each suite checks one algebraic statement about the star order (or the
//! ring structure under it) on `cfg.trials` independent instances, with exact
//! equality everywhere. Trial `k` draws from its own generator stream, so the
//! report is the same whether trials run sequentially or on the rayon pool.
//!
//! ```
//! use rickart::harness::Suite;
//!
//! // one suite per statement, names unique and round-tripping
//! assert_eq!(Suite::ALL.len(), 16);
//! for s in Suite::ALL {
//!     assert_eq!(s.name().parse::<Suite>().unwrap(), s);
//!     assert!(!s.statement().is_empty());
//!     assert!(s.default_trials() > 0);
//! }
//! let mut names: Vec<_> = Suite::ALL.iter().map(|s| s.name()).collect();
//! names.sort();
//! names.dedup();
//! assert_eq!(names.len(), 16);
//! ```

use std::fmt;
use std::str::FromStr;

use rand::Rng;
use serde::Serialize;

use crate::gen::{GenConfig, Generator};
use crate::lattice::{projector_of, range_of};
use crate::linalg::{
    col_space, full_rank_factorization, is_moore_penrose_inverse, null_space, pinv, rank, row_space, Matrix,
};
use crate::order::{
    coherent_join, glb_set, is_coherent, join_bounded, least_upper_bound, lub_bounded_set, meet, meet_bounded,
    star_minus,
};
use crate::ring::{
    commutant_contains, kx_contains, left_proj, right_ann, right_proj, star_orthogonal, Projection,
};
use crate::star::{
    left_star_leq, maximality_check, right_star_leq, rp_monotonicity_check, star_leq, star_leq_certificate,
    star_leq_hermitian,
};
use crate::Error;

/// Lower and upper bounds sampled per instance when certifying meets and joins.
pub const BOUND_SAMPLES: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(into = "&'static str")]
pub enum Suite {
    Penrose,
    RickartAxiom,
    AnnihilatorProperties,
    CommutantLattice,
    StarOrderDefinitions,
    StarOrderCharacterizations,
    RightProjectionMonotone,
    StarOrderBasics,
    BoundedMeetJoin,
    BoundedCorollaries,
    Coherence,
    GeneralMeet,
    GlbSet,
    StarMinus,
    Hermitian,
    ProjectionLattice,
}

impl Suite {
    pub const ALL: [Suite; 16] = [
        Suite::Penrose,
        Suite::RickartAxiom,
        Suite::AnnihilatorProperties,
        Suite::CommutantLattice,
        Suite::StarOrderDefinitions,
        Suite::StarOrderCharacterizations,
        Suite::RightProjectionMonotone,
        Suite::StarOrderBasics,
        Suite::BoundedMeetJoin,
        Suite::BoundedCorollaries,
        Suite::Coherence,
        Suite::GeneralMeet,
        Suite::GlbSet,
        Suite::StarMinus,
        Suite::Hermitian,
        Suite::ProjectionLattice,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Penrose => "penrose",
            Suite::RickartAxiom => "rickart-axioms",
            Suite::AnnihilatorProperties => "list2",
            Suite::CommutantLattice => "c-latt",
            Suite::StarOrderDefinitions => "star-order-equiv",
            Suite::StarOrderCharacterizations => "cle-equiv",
            Suite::RightProjectionMonotone => "rp-monotone",
            Suite::StarOrderBasics => "list1",
            Suite::BoundedMeetJoin => "bounded-meet-join",
            Suite::BoundedCorollaries => "cor-after-meetjoin",
            Suite::Coherence => "coherence",
            Suite::GeneralMeet => "general-meet",
            Suite::GlbSet => "glb-set",
            Suite::StarMinus => "star-minus",
            Suite::Hermitian => "hermitian",
            Suite::ProjectionLattice => "proj-lattice",
        }
    }

    /// The statement the suite checks.
    pub fn statement(self) -> &'static str {
        match self {
            Suite::Penrose => "pinv satisfies the four Penrose equations; A = F G is a full-rank factorization",
            Suite::RickartAxiom => "x y = 0 iff x' y = y; 0' = 1; the involution is proper; the four forms of x ⊥ y agree",
            Suite::AnnihilatorProperties => {
                "a a' = 0 = a' a*; a a'' = a = (a*)'' a; ab = 0 iff a''b = 0; a ⊥ b iff (a*)''b = 0 = b a''; \
                 a'' ∈ K_a; (a''b)'' = (ab)'' ≤ b''; e ≤ a'' implies (ae)'' = e; {e : ae = 0} = [0, a']"
            }
            Suite::CommutantLattice => "C(x) contains 0, 1 and is closed under e', e ∨ f, e ∧ f",
            Suite::StarOrderDefinitions => {
                "the four defining condition pairs agree; x ⩽* y iff x* ⩽* y*; the one-sided factorization \
                 conditions agree; star order implies left- and right-star; partial-order axioms on chains"
            }
            Suite::StarOrderCharacterizations => {
                "a ⩽* b iff b = a + c with c ⊥ a iff b a'' = a = (a*)'' b iff f b = a = b e iff \
                 (a = b a'' and a'' ∈ K_b) iff (a = b a'' and a* b ∈ S); comparable pairs have b' ≤ a', a'' ≤ b''"
            }
            Suite::RightProjectionMonotone => "a ⩽* b implies b' ≤ a' and a'' ≤ b''",
            Suite::StarOrderBasics => {
                "0 is least; star order on P is the projection order; a ∈ P iff a ⩽* 1; invertibles are maximal; \
                 e ≤ f, e ∈ K_x implies x e ⩽* x f; K_x = {e : x e ⩽* x}; a ⊥ b gives meet 0 and join a + b"
            }
            Suite::BoundedMeetJoin => {
                "for a, b ⩽* x: x(a'' ∧ b'') is the meet and x(a'' ∨ b'') the join, independent of x"
            }
            Suite::BoundedCorollaries => {
                "for bounded pairs (a ∨ b)'' = a'' ∨ b'', (a ∧ b)'' = a'' ∧ b'', a(a'' ∧ b'') = a ∧ b = b(a'' ∧ b''); \
                 segments [0, x] are sublattices; bounded sets have joins x ⋁ a''"
            }
            Suite::Coherence => {
                "coherent iff (bounded, a'' ∈ K_b, b'' ∈ K_a) iff a + b a' = a ∨ b = b + a b' iff \
                 (a b'' = a ∧ b = b a'' and a ∨ b = a b' + a ∧ b + b a')"
            }
            Suite::GeneralMeet => {
                "every pair has a meet a m = b m where m is the greatest element of L_{a,b} = {u'' : u ⩽* a, b}"
            }
            Suite::GlbSet => "finite nonempty sets have greatest lower bounds, independent of fold order",
            Suite::StarMinus => {
                "x ∖ y = x (x ∧ y)' satisfies x - (x ∖ y) ⩽* y, antitonicity in y, x ∖ y = x - y for y ⩽* x, \
                 and (x ∧ y) + (x ∖ y) = x"
            }
            Suite::Hermitian => {
                "on self-adjoint pairs the order is a^2 = ab and a = b a'' iff a = a'' b iff a = b e iff a = f b; \
                 bounded meets and joins of self-adjoint triples are self-adjoint"
            }
            Suite::ProjectionLattice => {
                "projections form an orthomodular lattice: orthomodular law, De Morgan, e f ∈ P iff ef = fe, \
                 e + f ∈ P iff ef = 0, intervals [0, g] with relative complement g - e"
            }
        }
    }

    /// Trial count used when none is given.
    pub fn default_trials(self) -> usize {
        match self {
            Suite::Penrose | Suite::StarOrderDefinitions | Suite::ProjectionLattice => 1000,
            Suite::CommutantLattice | Suite::Coherence => 300,
            Suite::GlbSet => 200,
            _ => 500,
        }
    }
}

impl From<Suite> for &'static str {
    fn from(s: Suite) -> Self {
        s.name()
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        Suite::ALL.into_iter().find(|x| x.name() == s).ok_or_else(|| Error::UnknownSuite(s.to_string()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub trial: u64,
    pub property: String,
    /// JSON object with the matrices involved.
    pub counterexample: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub trials: usize,
    pub failures: Vec<Failure>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

pub type BoundedOp = fn(&Matrix, &Matrix, &Matrix) -> Result<Matrix, Error>;

/// Implementations under test for the bounded meet and join; swapped out in
/// mutation tests to confirm the suites can fail.
#[derive(Clone, Copy)]
pub struct SuiteOps {
    pub meet_bounded: BoundedOp,
    pub join_bounded: BoundedOp,
}

impl Default for SuiteOps {
    fn default() -> Self {
        SuiteOps { meet_bounded, join_bounded }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Execution {
    /// Parallel when the `parallel` feature is on.
    #[default]
    Auto,
    Sequential,
    Parallel,
}

pub fn run_suite(name: &str, cfg: &GenConfig) -> Result<SuiteReport, Error> {
    cfg.validate()?;
    let suite: Suite = name.parse()?;
    Ok(run_suite_with(suite, cfg, SuiteOps::default(), Execution::Auto))
}

pub fn run_suite_with(suite: Suite, cfg: &GenConfig, ops: SuiteOps, exec: Execution) -> SuiteReport {
    let run = |trial: u64| -> Option<Failure> {
        let mut t = Trial { gen: Generator::for_trial(cfg, trial), ops, cfg };
        t.run(suite).err().map(|v| Failure { trial, property: v.property.to_string(), counterexample: v.detail })
    };
    let trials = cfg.trials as u64;
    let mut failures: Vec<Failure> = match exec {
        Execution::Sequential => (0..trials).filter_map(run).collect(),
        Execution::Auto | Execution::Parallel => run_parallel(trials, run),
    };
    failures.sort_by_key(|f| f.trial);
    SuiteReport { suite, trials: cfg.trials, failures }
}

#[cfg(feature = "parallel")]
fn run_parallel(trials: u64, run: impl Fn(u64) -> Option<Failure> + Sync + Send) -> Vec<Failure> {
    use rayon::prelude::*;
    (0..trials).into_par_iter().filter_map(run).collect()
}

#[cfg(not(feature = "parallel"))]
fn run_parallel(trials: u64, run: impl Fn(u64) -> Option<Failure>) -> Vec<Failure> {
    (0..trials).filter_map(run).collect()
}

struct Violation {
    property: &'static str,
    detail: String,
}

type Check = Result<(), Violation>;

fn witness(items: &[(&str, &Matrix)]) -> String {
    let map: serde_json::Map<String, serde_json::Value> = items
        .iter()
        .map(|(k, m)| (k.to_string(), serde_json::to_value(m).expect("matrix serializes")))
        .collect();
    serde_json::Value::Object(map).to_string()
}

macro_rules! ensure {
    ($cond:expr, $prop:literal, $($name:ident),+ $(,)?) => {
        if !$cond {
            return Err(Violation {
                property: $prop,
                detail: witness(&[$((stringify!($name), &$name)),+]),
            });
        }
    };
}

fn p(e: &Projection) -> &Matrix {
    e.matrix()
}

struct Trial<'a> {
    gen: Generator,
    ops: SuiteOps,
    cfg: &'a GenConfig,
}

impl Trial<'_> {
    fn run(&mut self, suite: Suite) -> Check {
        match suite {
            Suite::Penrose => self.penrose(),
            Suite::RickartAxiom => self.rickart_axiom(),
            Suite::AnnihilatorProperties => self.annihilator_properties(),
            Suite::CommutantLattice => self.commutant_lattice(),
            Suite::StarOrderDefinitions => self.star_order_definitions(),
            Suite::StarOrderCharacterizations => self.star_order_characterizations(),
            Suite::RightProjectionMonotone => self.right_projection_monotone(),
            Suite::StarOrderBasics => self.star_order_basics(),
            Suite::BoundedMeetJoin => self.bounded_meet_join(),
            Suite::BoundedCorollaries => self.bounded_corollaries(),
            Suite::Coherence => self.coherence(),
            Suite::GeneralMeet => self.general_meet(),
            Suite::GlbSet => self.glb_set(),
            Suite::StarMinus => self.star_minus(),
            Suite::Hermitian => self.hermitian(),
            Suite::ProjectionLattice => self.projection_lattice(),
        }
    }

    fn coin(&mut self) -> bool {
        self.gen.rng().gen_bool(0.5)
    }

    /// Matrix annihilated by `x` on the left, built from a kernel basis.
    fn in_kernel_of(&mut self, x: &Matrix) -> Matrix {
        let kernel = null_space(x).basis_columns();
        let coeffs = self.gen.dense(kernel.cols(), x.cols());
        &kernel * &coeffs
    }

    fn penrose(&mut self) -> Check {
        let n = self.gen.dim();
        let m = if self.coin() { n } else { self.gen.rng().gen_range(1..=self.cfg.dim.max(1)) };
        let a = self.gen.rect(m, n);
        let ap = pinv(&a);
        let aapa = &(&a * &ap) * &a;
        let apaap = &(&ap * &a) * &ap;
        let aap = &a * &ap;
        let apa = &ap * &a;
        ensure!(aapa == a, "penrose-1", a, ap);
        ensure!(apaap == ap, "penrose-2", a, ap);
        ensure!(aap.is_self_adjoint(), "penrose-3", a, ap);
        ensure!(apa.is_self_adjoint(), "penrose-4", a, ap);
        ensure!(is_moore_penrose_inverse(&a, &ap), "penrose-predicate", a, ap);
        let (f, g) = full_rank_factorization(&a);
        let r = rank(&a);
        let fg = f.try_mul(&g).expect("conformable");
        ensure!(fg == a && f.cols() == r && g.rows() == r && rank(&f) == r && rank(&g) == r, "full-rank-factorization", a, f, g);
        ensure!(
            row_space(&a).dim() == r && col_space(&a).dim() == r && null_space(&a).dim() + r == a.cols(),
            "rank-nullity",
            a
        );
        Ok(())
    }

    fn rickart_axiom(&mut self) -> Check {
        let n = self.gen.dim();
        let x = self.gen.matrix(n);
        let y = if self.coin() { self.in_kernel_of(&x) } else { self.gen.matrix(n) };
        let xa = right_ann(&x);
        let xy = &x * &y;
        let ay = p(&xa) * &y;
        ensure!(xy.is_zero() == (ay == y), "annihilator-axiom", x, y);
        let xpx = &pinv(&x) * &x;
        let xxp = &x * &pinv(&x);
        ensure!(right_proj(&x).matrix() == &xpx && left_proj(&x).matrix() == &xxp, "projections-via-pinv", x);
        let zero = Matrix::zeros(n, n);
        ensure!(right_ann(&zero) == Projection::identity(n), "unit-is-zero-prime", zero);
        let xsx = &x.adjoint() * &x;
        ensure!(xsx.is_zero() == x.is_zero(), "proper-involution", x);
        ensure!(star_orthogonal(&x, &x) == x.is_zero(), "self-orthogonal-only-zero", x);

        let w = if self.coin() { self.gen.orthogonal_to(&x) } else { self.gen.matrix(n) };
        let (xs, ws) = (x.adjoint(), w.adjoint());
        let forms = [
            (&x * &ws).is_zero() && (&xs * &w).is_zero(),
            (&w * &xs).is_zero() && (&xs * &w).is_zero(),
            (&w * &xs).is_zero() && (&ws * &x).is_zero(),
            (&x * &ws).is_zero() && (&ws * &x).is_zero(),
        ];
        ensure!(forms.iter().all(|&f| f == forms[0]), "orthogonality-forms", x, w);
        ensure!(star_orthogonal(&x, &w) == star_orthogonal(&xs, &ws), "orthogonality-adjoint", x, w);
        Ok(())
    }

    fn annihilator_properties(&mut self) -> Check {
        let n = self.gen.dim();
        let a = self.gen.matrix(n);
        let (aa, app, lp) = (right_ann(&a), right_proj(&a), left_proj(&a));
        let a_aa = &a * p(&aa);
        let aa_as = p(&aa) * &a.adjoint();
        ensure!(a_aa.is_zero() && aa_as.is_zero(), "list2-a", a);
        let a_app = &a * p(&app);
        let lp_a = p(&lp) * &a;
        ensure!(a_app == a && lp_a == a, "list2-b", a);

        let b = if self.coin() { self.in_kernel_of(&a) } else { self.gen.matrix(n) };
        let ab = &a * &b;
        let app_b = p(&app) * &b;
        ensure!(ab.is_zero() == app_b.is_zero(), "list2-c", a, b);

        let c = if self.coin() { self.gen.orthogonal_to(&a) } else { self.gen.matrix(n) };
        let lp_c = p(&lp) * &c;
        let c_app = &c * p(&app);
        ensure!(star_orthogonal(&a, &c) == (lp_c.is_zero() && c_app.is_zero()), "list2-d", a, c);
        ensure!(kx_contains(&a, &app), "list2-e", a);

        let lhs = right_proj(&(p(&app) * &b));
        let mid = right_proj(&ab);
        let bpp = right_proj(&b);
        ensure!(lhs == mid && mid.leq(&bpp), "list2-f", a, b);

        let e = self.gen.sub_projection(&app);
        let ae = &a * p(&e);
        ensure!(right_proj(&ae) == e, "list2-g", a, ae);

        let f = if self.coin() { self.gen.sub_projection(&aa) } else { self.gen.projection(n) };
        let af = &a * p(&f);
        ensure!(af.is_zero() == f.leq(&aa), "list2-h", a, af);
        Ok(())
    }

    fn commutant_lattice(&mut self) -> Check {
        let n = self.gen.dim();
        let frame = self.gen.frame(n, false);
        let x = frame.x.clone();
        let se = self.gen.selection(&frame, true, true);
        let sf = self.gen.selection(&frame, true, true);
        let (e, f) = (frame.lift(&se), frame.lift(&sf));
        let (em, fm) = (p(&e).clone(), p(&f).clone());
        ensure!(commutant_contains(&x, &e) && commutant_contains(&x, &f), "generator-commutant", x, em, fm);
        ensure!(
            commutant_contains(&x, &Projection::zero(n)) && commutant_contains(&x, &Projection::identity(n)),
            "c-latt-bounds",
            x
        );
        ensure!(commutant_contains(&x, &e.ortho()), "c-latt-ortho", x, em);
        ensure!(commutant_contains(&x, &e.join(&f)), "c-latt-join", x, em, fm);
        ensure!(commutant_contains(&x, &e.meet(&f)), "c-latt-meet", x, em, fm);
        Ok(())
    }

    fn pair(&mut self, n: usize) -> (Matrix, Matrix) {
        match self.gen.rng().gen_range(0..4) {
            0 | 1 => self.gen.comparable_pair(n),
            2 => (self.gen.matrix(n), self.gen.matrix(n)),
            _ => {
                let (a, b) = self.gen.comparable_pair(n);
                (b, a)
            }
        }
    }

    fn exists_right_factor(&mut self, a: &Matrix, b: &Matrix) -> bool {
        let n = a.cols();
        let candidates = [right_proj(a), projector_of(&col_space(&(&pinv(b) * a))), self.gen.projection(n)];
        candidates.iter().any(|e| b * p(e) == *a)
    }

    fn exists_left_factor(&mut self, a: &Matrix, b: &Matrix) -> bool {
        let n = a.rows();
        let candidates = [left_proj(a), projector_of(&col_space(&(a * &pinv(b)).adjoint())), self.gen.projection(n)];
        candidates.iter().any(|f| p(f) * b == *a)
    }

    fn star_order_definitions(&mut self) -> Check {
        let n = self.gen.dim();
        let (a, b) = self.pair(n);
        let (ad, bd) = (a.adjoint(), b.adjoint());
        let (asa, aas) = (&ad * &a, &a * &ad);
        let pairs = [
            asa == &ad * &b && aas == &b * &ad,
            asa == &bd * &a && aas == &a * &bd,
            asa == &ad * &b && aas == &a * &bd,
            asa == &bd * &a && aas == &b * &ad,
        ];
        let leq = star_leq(&a, &b);
        ensure!(pairs.iter().all(|&c| c == leq), "definition-pairs", a, b);
        ensure!(leq == star_leq(&ad, &bd), "adjoint-invariance", a, b);

        // one-sided blocks: right factorization and left factorization
        let c = &b - &a;
        let block1 = [aas == &b * &ad, (&c * &ad).is_zero(), &b * p(&right_proj(&a)) == a, self.exists_right_factor(&a, &b)];
        ensure!(block1.iter().all(|&x| x == block1[0]), "one-sided-right", a, b);
        let block2 =
            [asa == &ad * &b, (&ad * &c).is_zero(), p(&left_proj(&a)) * &b == a, self.exists_left_factor(&a, &b)];
        ensure!(block2.iter().all(|&x| x == block2[0]), "one-sided-left", a, b);
        if leq {
            ensure!(left_star_leq(&a, &b) && right_star_leq(&a, &b), "star-implies-one-sided", a, b);
        }

        let chain = self.gen.chain(n);
        let leq: Vec<Vec<bool>> = chain.iter().map(|x| chain.iter().map(|y| star_leq(x, y)).collect()).collect();
        for (i, x) in chain.iter().enumerate() {
            ensure!(leq[i][i], "reflexive", x);
            for (j, y) in chain.iter().enumerate() {
                if i < j {
                    ensure!(leq[i][j], "chain-order", x, y);
                }
                if leq[i][j] && leq[j][i] {
                    ensure!(x == y, "antisymmetric", x, y);
                }
                for (k, z) in chain.iter().enumerate() {
                    if leq[i][j] && leq[j][k] {
                        ensure!(leq[i][k], "transitive", x, y, z);
                    }
                }
            }
        }
        Ok(())
    }

    fn characterizations(&mut self, a: &Matrix, b: &Matrix) -> Check {
        let (a, b) = (a.clone(), b.clone());
        let app = right_proj(&a);
        let c = &b - &a;
        let items = [
            star_leq(&a, &b),
            star_orthogonal(&c, &a),
            &b * p(&app) == a && p(&left_proj(&a)) * &b == a,
            self.exists_right_factor(&a, &b) && self.exists_left_factor(&a, &b),
            &b * p(&app) == a && kx_contains(&b, &app),
            &b * p(&app) == a && (&a.adjoint() * &b).is_self_adjoint(),
        ];
        ensure!(items.iter().all(|&x| x == items[0]), "characterizations-agree", a, b);
        let cert = star_leq_certificate(&a, &b).map_err(|e| Violation { property: "certificate", detail: e.to_string() })?;
        ensure!(cert.is_some() == items[0], "certificate", a, b);
        if items[0] {
            ensure!(right_ann(&b).leq(&right_ann(&a)) && app.leq(&right_proj(&b)), "monotone", a, b);
        }
        Ok(())
    }

    fn star_order_characterizations(&mut self) -> Check {
        let n = self.gen.dim();
        let (a, b) = self.gen.comparable_pair(n);
        ensure!(star_leq(&a, &b), "generator-comparable", a, b);
        self.characterizations(&a, &b)?;
        let (a, b) = (self.gen.matrix(n), self.gen.matrix(n));
        self.characterizations(&a, &b)
    }

    fn right_projection_monotone(&mut self) -> Check {
        let n = self.gen.dim();
        let (a, b) = self.gen.comparable_pair(n);
        ensure!(rp_monotonicity_check(&a, &b).unwrap_or(false), "rp-monotone", a, b);
        let [c0, c1, c2, c3] = self.gen.chain(n);
        for (x, y) in [(&c0, &c1), (&c1, &c2), (&c0, &c3)] {
            let (x, y) = (x.clone(), y.clone());
            ensure!(rp_monotonicity_check(&x, &y).unwrap_or(false), "rp-monotone-chain", x, y);
        }
        Ok(())
    }

    fn star_order_basics(&mut self) -> Check {
        let n = self.gen.dim();
        let b = self.gen.matrix(n);
        let zero = Matrix::zeros(n, n);
        ensure!(star_leq(&zero, &b), "list1-a", b);

        let e = self.gen.projection(n);
        let f = if self.coin() { self.gen.super_projection(&e) } else { self.gen.projection(n) };
        let (em, fm) = (p(&e).clone(), p(&f).clone());
        ensure!(star_leq(&em, &fm) == e.leq(&f), "list1-b", em, fm);

        let one = Matrix::identity(n);
        let cand = match self.gen.rng().gen_range(0..3) {
            0 => em.clone(),
            1 => self.gen.self_adjoint(n),
            _ => self.gen.matrix(n),
        };
        ensure!(cand.is_projection() == star_leq(&cand, &one), "list1-c", cand);

        let inv = self.gen.invertible(n);
        let small = GenConfig { trials: 3, seed: self.gen.rng().gen(), ..self.cfg.clone() };
        ensure!(maximality_check(&inv, &small).unwrap_or(false), "list1-d", inv);
        let z = self.gen.matrix(n);
        if star_leq(&one, &z) {
            ensure!(z == one, "list1-d-unit", z);
        }

        let frame = self.gen.frame(n, false);
        let x = frame.x.clone();
        let top = self.gen.selection(&frame, true, false);
        let sub = self.gen.sub_selection(&frame, &top, true, false);
        let ke = frame.lift(&sub);
        let above = self.gen.super_projection(&ke);
        let (xe, xf) = (&x * p(&ke), &x * p(&above));
        ensure!(star_leq(&xe, &xf), "list1-e", x, xe, xf);

        for g in [frame.lift(&top), self.gen.projection(n)] {
            let xg = &x * p(&g);
            ensure!(kx_contains(&x, &g) == star_leq(&xg, &x), "list1-f", x, xg);
        }

        let a = self.gen.matrix(n);
        let c = self.gen.orthogonal_to(&a);
        let s = &a + &c;
        let m = meet(&a, &c).meet;
        ensure!(m.is_zero(), "list1-g-meet", a, c);
        let lub = least_upper_bound(&a, &c).map(|j| j.join);
        ensure!(lub.as_ref() == Some(&s), "list1-g-join", a, c);
        let jb = join_bounded(&a, &c, &s).ok();
        let mb = meet_bounded(&a, &c, &s).ok();
        ensure!(jb.as_ref() == Some(&s) && mb.is_some_and(|m| m.is_zero()), "list1-g-bounded", a, c);
        Ok(())
    }

    fn bounded_meet_join(&mut self) -> Check {
        let n = self.gen.dim();
        let fine = self.coin() || self.coin();
        let inst = self.gen.bounded_pair(n, fine);
        let (a, b, x, y) = (inst.a.clone(), inst.b.clone(), inst.x.clone(), inst.y.clone());
        let op_err = |e: Error| Violation { property: "bounded-precondition", detail: e.to_string() };
        let mx = (self.ops.meet_bounded)(&a, &b, &x).map_err(op_err)?;
        let my = (self.ops.meet_bounded)(&a, &b, &y).map_err(op_err)?;
        let jx = (self.ops.join_bounded)(&a, &b, &x).map_err(op_err)?;
        let jy = (self.ops.join_bounded)(&a, &b, &y).map_err(op_err)?;
        ensure!(mx == my, "meet-bound-independent", a, b, x, y);
        ensure!(jx == jy, "join-bound-independent", a, b, x, y);
        ensure!(star_leq(&mx, &a) && star_leq(&mx, &b), "meet-is-lower-bound", a, b, x, mx);
        ensure!(star_leq(&a, &jx) && star_leq(&b, &jx), "join-is-upper-bound", a, b, x, jx);
        for _ in 0..BOUND_SAMPLES {
            let u = inst.lower_bound(&mut self.gen);
            ensure!(star_leq(&u, &a) && star_leq(&u, &b), "generator-lower-bound", a, b, u);
            ensure!(star_leq(&u, &mx), "meet-is-greatest", a, b, x, u, mx);
            let z = inst.upper_bound(&mut self.gen);
            ensure!(star_leq(&a, &z) && star_leq(&b, &z), "generator-upper-bound", a, b, z);
            ensure!(star_leq(&jx, &z), "join-is-least", a, b, x, z, jx);
        }
        let lub = least_upper_bound(&a, &b).map(|j| j.join);
        ensure!(lub.as_ref() == Some(&jx), "join-matches-glued-bound", a, b, jx);
        let (app, bpp) = (right_proj(&a), right_proj(&b));
        let meet_p = app.meet(&bpp);
        ensure!(right_proj(&jx) == app.join(&bpp), "join-right-projection", a, b, jx);
        ensure!(right_proj(&mx) == meet_p, "meet-right-projection", a, b, mx);
        let (am, bm) = (&a * p(&meet_p), &b * p(&meet_p));
        ensure!(am == mx && bm == mx, "meet-from-either-side", a, b, mx);
        Ok(())
    }

    fn bounded_corollaries(&mut self) -> Check {
        let n = self.gen.dim();
        let fine = self.coin();
        let inst = self.gen.bounded_pair(n, fine);
        let (a, b, x) = (inst.a.clone(), inst.b.clone(), inst.x.clone());
        let join = join_bounded(&a, &b, &x).expect("generated bound");
        let mb = meet_bounded(&a, &b, &x).expect("generated bound");
        let (app, bpp) = (right_proj(&a), right_proj(&b));
        let meet_p = app.meet(&bpp);
        ensure!(right_proj(&join) == app.join(&bpp), "cor-join-projection", a, b, join);
        ensure!(right_proj(&mb) == meet_p, "cor-meet-projection", a, b, mb);
        let (am, bm) = (&a * p(&meet_p), &b * p(&meet_p));
        ensure!(am == mb && bm == mb, "cor-meet-sides", a, b, mb);

        // meets and joins inside [0, x] are the global ones
        let u = inst.lower_bound(&mut self.gen);
        let below_e = self.gen.sub_selection(&inst.frame, &inst.e, true, false);
        let v = &x * p(&inst.frame.lift(&below_e));
        let ju = join_bounded(&u, &v, &x).expect("segment elements");
        let mu = meet_bounded(&u, &v, &x).expect("segment elements");
        let gj = least_upper_bound(&u, &v).map(|j| j.join);
        let gm = meet(&u, &v).meet;
        ensure!(gj.as_ref() == Some(&ju), "segment-join-global", u, v, x, ju);
        ensure!(gm == mu, "segment-meet-global", u, v, x, mu);

        // bounded sets: x ⋁ a'' is the least upper bound
        let set = [a.clone(), b.clone(), u.clone()];
        let lub = lub_bounded_set(&set, &x).expect("bounded set");
        ensure!(lub == join, "set-join-pairwise", a, b, u, x, lub);
        let glb = glb_set(&set).expect("nonempty");
        let all_p = app.meet(&bpp).meet(&right_proj(&u));
        let baer_meet = &x * p(&all_p);
        ensure!(glb == baer_meet, "set-meet-bounded", a, b, u, x, glb);
        Ok(())
    }

    fn coherence_items(&mut self, a: &Matrix, b: &Matrix) -> [bool; 4] {
        let (app, bpp) = (right_proj(a), right_proj(b));
        let (aa, ba) = (right_ann(a), right_ann(b));
        let lub = least_upper_bound(a, b).map(|j| j.join);
        let m = meet(a, b).meet;
        let left = a + &(b * p(&aa));
        let right = b + &(a * p(&ba));
        let item_b = lub.is_some() && kx_contains(b, &app) && kx_contains(a, &bpp);
        let item_c = lub.as_ref().is_some_and(|j| *j == left && *j == right);
        let decomposition = &(&(a * p(&ba)) + &m) + &(b * p(&aa));
        let item_d = lub.as_ref().is_some_and(|j| *j == decomposition)
            && a * p(&bpp) == m
            && b * p(&app) == m;
        [is_coherent(a, b), item_b, item_c, item_d]
    }

    fn coherence(&mut self) -> Check {
        let n = self.gen.dim();
        let inst = self.gen.bounded_pair(n, false);
        let (a, b, x) = (inst.a.clone(), inst.b.clone(), inst.x.clone());
        ensure!(is_coherent(&a, &b), "generator-coherent", a, b);
        let items = self.coherence_items(&a, &b);
        ensure!(items.iter().all(|&i| i), "coherent-items", a, b);
        let cj = coherent_join(&a, &b).map(|j| j.join).ok();
        let jb = join_bounded(&a, &b, &x).ok();
        ensure!(cj.is_some() && cj == jb, "coherent-join-formula", a, b, x);
        let m = meet(&a, &b).meet;
        let sum = &(&a + &b) - &m;
        ensure!(cj.as_ref() == Some(&sum), "join-is-sum-minus-meet", a, b, m);

        // a bounded pair that is not coherent fails every item, in particular (b)
        let inst = self.gen.non_coherent_pair(n);
        let (a, b, x) = (inst.a, inst.b, inst.x);
        ensure!(star_leq(&a, &x) && star_leq(&b, &x), "generator-bounded", a, b, x);
        ensure!(!is_coherent(&a, &b), "generator-non-coherent", a, b);
        let items = self.coherence_items(&a, &b);
        ensure!(items.iter().all(|&i| !i), "non-coherent-items", a, b);
        Ok(())
    }

    fn general_meet(&mut self) -> Check {
        let n = self.gen.dim();
        let kind = self.gen.rng().gen_range(0..3);
        let mut lowers: Vec<Matrix> = Vec::with_capacity(BOUND_SAMPLES);
        let (a, b, bound) = match kind {
            0 => {
                let (a, b) = (self.gen.matrix(n), self.gen.matrix(n));
                for _ in 0..BOUND_SAMPLES {
                    // a h is below a for h ∈ K_a; keep it only when also below b
                    let h = self.gen.projection(n);
                    let u = &a * p(&h);
                    lowers.push(if star_leq(&u, &a) && star_leq(&u, &b) { u } else { Matrix::zeros(n, n) });
                }
                (a, b, None)
            }
            1 => {
                let inst = self.gen.common_part_pair(n);
                for _ in 0..BOUND_SAMPLES {
                    lowers.push(inst.lower_bound(&mut self.gen));
                }
                (inst.a, inst.b, None)
            }
            _ => {
                let fine = self.coin();
                let inst = self.gen.bounded_pair(n, fine);
                for _ in 0..BOUND_SAMPLES {
                    lowers.push(inst.lower_bound(&mut self.gen));
                }
                (inst.a, inst.b, Some(inst.x))
            }
        };
        let r = meet(&a, &b);
        let (mt, m) = (r.meet.clone(), r.m.clone());
        let mm = p(&m).clone();
        ensure!(star_leq(&mt, &a) && star_leq(&mt, &b), "meet-lower-bound", a, b, mt);
        let (am, bm) = (&a * &mm, &b * &mm);
        ensure!(am == mt && bm == mt, "meet-either-side", a, b, mm);
        ensure!(right_proj(&mt) == m, "meet-right-projection", a, b, mt);
        let under = right_proj(&a).meet(&right_proj(&b)).meet(&right_ann(&(&a - &b)));
        ensure!(kx_contains(&a, &m) && kx_contains(&b, &m) && m.leq(&under), "m-in-l-ab", a, b, mm);
        for u in lowers {
            ensure!(star_leq(&u, &a) && star_leq(&u, &b), "generator-lower-bound", a, b, u);
            ensure!(star_leq(&u, &mt), "meet-is-greatest", a, b, u, mt);
            ensure!(right_proj(&u).leq(&m), "m-is-greatest-in-l-ab", a, b, u, mm);
        }
        let swapped = meet(&b, &a).meet;
        ensure!(swapped == mt, "meet-commutative", a, b);
        if let Some(x) = bound {
            let mb = meet_bounded(&a, &b, &x).expect("generated bound");
            ensure!(mb == mt, "meet-equals-bounded-meet", a, b, x, mt, mb);
        }
        Ok(())
    }

    fn glb_set(&mut self) -> Check {
        let n = self.gen.dim();
        let mut lowers = Vec::new();
        let (set, bound): ([Matrix; 3], Option<Matrix>) = match self.gen.rng().gen_range(0..3) {
            0 => ([self.gen.matrix(n), self.gen.matrix(n), self.gen.matrix(n)], None),
            1 => {
                let inst = self.gen.common_part_pair(n);
                let r = self.gen.orthogonal_to(&inst.c);
                let third = &inst.c + &r;
                for _ in 0..BOUND_SAMPLES {
                    lowers.push(inst.lower_bound(&mut self.gen));
                }
                ([inst.a, inst.b, third], None)
            }
            _ => {
                let frame = self.gen.frame(n, false);
                let sels: Vec<_> = (0..3).map(|_| self.gen.selection(&frame, true, false)).collect();
                let common = sels[0].meet(&sels[1]).meet(&sels[2]);
                for _ in 0..BOUND_SAMPLES {
                    let g = self.gen.sub_selection(&frame, &common, true, false);
                    lowers.push(&frame.x * p(&frame.lift(&g)));
                }
                let set = [0, 1, 2].map(|i| &frame.x * p(&frame.lift(&sels[i])));
                (set, Some(frame.x.clone()))
            }
        };
        let [a, b, c] = set.clone();
        let g = glb_set(&set).expect("nonempty");
        for perm in [[0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]] {
            let other = glb_set(&perm.map(|i| set[i].clone())).expect("nonempty");
            ensure!(other == g, "fold-order-independent", a, b, c);
        }
        for s in &set {
            ensure!(star_leq(&g, s), "glb-lower-bound", a, b, c, g);
        }
        for u in lowers {
            ensure!(star_leq(&u, &a) && star_leq(&u, &b) && star_leq(&u, &c), "generator-lower-bound", a, b, c, u);
            ensure!(star_leq(&u, &g), "glb-greatest", a, b, c, u, g);
        }
        if let Some(x) = bound {
            let all = right_proj(&a).meet(&right_proj(&b)).meet(&right_proj(&c));
            let expect = &x * p(&all);
            ensure!(g == expect, "glb-bounded-formula", a, b, c, x, g);
        }
        Ok(())
    }

    fn star_minus(&mut self) -> Check {
        let n = self.gen.dim();
        let (x, y) = match self.gen.rng().gen_range(0..4) {
            0 => (self.gen.matrix(n), self.gen.matrix(n)),
            1 => {
                let inst = self.gen.common_part_pair(n);
                (inst.a, inst.b)
            }
            2 => {
                let inst = self.gen.bounded_pair(n, true);
                (inst.a, inst.b)
            }
            _ => {
                let (a, b) = self.gen.comparable_pair(n);
                (b, a)
            }
        };
        let d = star_minus(&x, &y);
        let m = meet(&x, &y).meet;
        let rest = &x - &d;
        ensure!(star_leq(&rest, &y), "minus-a", x, y, d);
        ensure!(rest == m, "minus-recovers-meet", x, y, d, m);
        let rebuilt = &m + &d;
        ensure!(rebuilt == x, "meet-plus-minus", x, y, d, m);
        if star_leq(&y, &x) {
            let diff = &x - &y;
            ensure!(d == diff, "minus-c", x, y, d);
        }
        let zero = Matrix::zeros(n, n);
        let x0 = star_minus(&x, &zero);
        ensure!(x0 == x, "minus-zero", x);
        ensure!(star_minus(&x, &x).is_zero(), "minus-self", x);

        let [c0, c1, c2, c3] = self.gen.chain(n);
        let z = match self.gen.rng().gen_range(0..3) {
            0 => c2,
            1 => c3,
            _ => self.gen.matrix(n),
        };
        let (z1, z2) = (star_minus(&z, &c0), star_minus(&z, &c1));
        ensure!(star_leq(&z2, &z1), "minus-b", z, c0, c1, z1, z2);
        Ok(())
    }

    fn hermitian(&mut self) -> Check {
        let n = self.gen.dim();
        let (a, b) = match self.gen.rng().gen_range(0..3) {
            0 => {
                let inst = self.gen.hermitian_bounded_pair(n);
                (inst.a, inst.x)
            }
            1 => {
                let a = self.gen.self_adjoint(n);
                let w = self.gen.self_adjoint_orthogonal_to(&a);
                let b = &a + &w;
                (a, b)
            }
            _ => (self.gen.self_adjoint(n), self.gen.self_adjoint(n)),
        };
        ensure!(a.is_self_adjoint() && b.is_self_adjoint(), "generator-self-adjoint", a, b);
        let app = right_proj(&a);
        let c = &b - &a;
        let items = [
            star_leq(&a, &b),
            star_leq_hermitian(&a, &b).unwrap_or(false),
            c.is_self_adjoint() && star_orthogonal(&c, &a),
            &b * p(&app) == a,
            p(&app) * &b == a,
            self.exists_right_factor(&a, &b),
            self.exists_left_factor(&a, &b),
        ];
        ensure!(items.iter().all(|&i| i == items[0]), "hermitian-equivalences", a, b);
        if items[0] {
            let (l, r) = (p(&app) * &b, &b * p(&app));
            ensure!(l == r && l.is_self_adjoint(), "hermitian-projection-commutes", a, b);
        }

        let inst = self.gen.hermitian_bounded_pair(n);
        let (a, b, x) = (inst.a, inst.b, inst.x);
        let mb = meet_bounded(&a, &b, &x).expect("generated bound");
        let jb = join_bounded(&a, &b, &x).expect("generated bound");
        ensure!(mb.is_self_adjoint() && jb.is_self_adjoint(), "hermitian-closure", a, b, x, mb, jb);
        let set_join = lub_bounded_set(&[a.clone(), b.clone()], &x).expect("generated bound");
        ensure!(set_join.is_self_adjoint(), "hermitian-set-closure", a, b, x);
        let m = meet(&a, &b).meet;
        ensure!(m == mb, "hermitian-meet-agrees", a, b, x);
        Ok(())
    }

    fn projection_lattice(&mut self) -> Check {
        let n = self.gen.dim();
        let e = self.gen.projection(n);
        let f = match self.gen.rng().gen_range(0..4) {
            0 => self.gen.projection(n),
            1 => self.gen.super_projection(&e),
            2 => self.gen.sub_projection(&e.ortho()),
            _ => {
                // commuting pair: e ∨ something built from pieces of e and e'
                let inner = self.gen.sub_projection(&e);
                let outer = self.gen.sub_projection(&e.ortho());
                inner.join(&outer)
            }
        };
        let (em, fm) = (p(&e).clone(), p(&f).clone());
        let (ef, fe) = (&em * &fm, &fm * &em);
        ensure!((ef == em) == (fe == em), "order-two-forms", em, fm);
        ensure!(
            Projection::zero(n).leq(&e) && e.leq(&Projection::identity(n)),
            "bounded-by-zero-and-one",
            em
        );
        if e.leq(&f) {
            let rebuilt = e.join(&f.meet(&e.ortho()));
            ensure!(rebuilt == f, "orthomodular", em, fm);
        }
        ensure!(e.join(&f).ortho() == e.ortho().meet(&f.ortho()), "de-morgan-join", em, fm);
        ensure!(e.meet(&f).ortho() == e.ortho().join(&f.ortho()), "de-morgan-meet", em, fm);
        ensure!(ef.is_projection() == (ef == fe), "product-projection-iff-commute", em, fm);
        if ef == fe {
            ensure!(p(&e.meet(&f)) == &ef, "commuting-meet-is-product", em, fm);
        }
        let sum = &em + &fm;
        ensure!(sum.is_projection() == ef.is_zero(), "sum-projection-iff-orthogonal", em, fm);
        if ef.is_zero() {
            ensure!(p(&e.join(&f)) == &sum, "orthogonal-join-is-sum", em, fm);
        }
        let jm = e.join(&f);
        let mm = e.meet(&f);
        ensure!(e.leq(&jm) && f.leq(&jm) && mm.leq(&e) && mm.leq(&f), "lattice-bounds", em, fm);

        let g = self.gen.super_projection(&jm);
        let gm = p(&g).clone();
        ensure!(e.leq(&g) && f.leq(&g) && jm.leq(&g), "interval-closure", em, fm, gm);
        let rel = g.meet(&e.ortho());
        let diff = &gm - &em;
        ensure!(p(&rel) == &diff, "relative-complement", em, gm);
        ensure!(range_of(&rel) == range_of(&g).intersect(&range_of(&e).orthocomplement()).expect("same size"), "relative-range", em, gm);
        Ok(())
    }
}

/// Runs every suite; `trials` overrides the per-suite default when set.
pub fn run_all(cfg: &GenConfig, trials: Option<usize>, exec: Execution) -> Vec<SuiteReport> {
    Suite::ALL
        .iter()
        .map(|&s| {
            let cfg = GenConfig { trials: trials.unwrap_or(s.default_trials()), ..cfg.clone() };
            run_suite_with(s, &cfg, SuiteOps::default(), exec)
        })
        .collect()
}
