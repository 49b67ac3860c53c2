//! Deterministic random instances.
//!
//! Every trial owns a ChaCha stream keyed by `(seed, trial)`, so any trial
//! can be replayed on its own and trials can run in any order.
//!
//! Projections commuting with `x*x` are built structurally: `x` is
//! block-diagonal in a frame given by an exact unitary `U`, and projections
//! are assembled block by block. Blocks on which `x*x` is a scalar multiple of
//! the identity accept arbitrary sub-projections, which is where
//! non-commuting members of `K_x` come from.

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::lattice::{projector_of, range_of};
use crate::linalg::{col_space, rank, Matrix, Scalar};
use crate::ring::{left_ann, right_ann, Projection};
use crate::Error;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenConfig {
    /// Largest matrix dimension drawn; trials use sizes in `2..=dim`.
    pub dim: usize,
    /// Cap on numerator and denominator magnitudes of random entries.
    pub entry_bound: u32,
    pub seed: u64,
    pub trials: usize,
}

impl Default for GenConfig {
    fn default() -> Self {
        GenConfig { dim: 6, entry_bound: 4, seed: 0, trials: 100 }
    }
}

impl GenConfig {
    pub fn validate(&self) -> Result<(), Error> {
        if self.dim == 0 || self.entry_bound == 0 || self.trials == 0 {
            return Err(Error::precondition("dim, entry_bound and trials must be positive"));
        }
        Ok(())
    }
}

/// Random `cfg.dim x cfg.dim` matrix from the config's seed.
pub fn gen_matrix(cfg: &GenConfig) -> Matrix {
    Generator::new(cfg).matrix(cfg.dim)
}

pub fn gen_projection(cfg: &GenConfig) -> Projection {
    Generator::new(cfg).projection(cfg.dim)
}

pub fn gen_self_adjoint(cfg: &GenConfig) -> Matrix {
    Generator::new(cfg).self_adjoint(cfg.dim)
}

pub struct Generator {
    rng: ChaCha8Rng,
    max_dim: usize,
    bound: i64,
}

impl Generator {
    pub fn new(cfg: &GenConfig) -> Self {
        Generator::for_trial(cfg, 0)
    }

    pub fn for_trial(cfg: &GenConfig, trial: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
        rng.set_stream(trial);
        Generator { rng, max_dim: cfg.dim.max(1), bound: i64::from(cfg.entry_bound.max(1)) }
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    /// A dimension in `2..=dim` (or `dim` itself when `dim < 2`).
    pub fn dim(&mut self) -> usize {
        let lo = self.max_dim.min(2);
        self.rng.gen_range(lo..=self.max_dim)
    }

    fn ratio(&mut self) -> BigRational {
        let num = self.rng.gen_range(-self.bound..=self.bound);
        let den = self.rng.gen_range(1..=self.bound);
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }

    pub fn real_scalar(&mut self) -> Scalar {
        Scalar::from(self.ratio())
    }

    pub fn scalar(&mut self) -> Scalar {
        let re = self.ratio();
        let im = if self.rng.gen_bool(0.5) { self.ratio() } else { BigRational::default() };
        Scalar::new(re, im)
    }

    pub fn nonzero_scalar(&mut self) -> Scalar {
        loop {
            let s = self.scalar();
            if !s.is_zero() {
                return s;
            }
        }
    }

    /// Dense-ish random matrix; about a quarter of the entries are zero.
    pub fn dense(&mut self, rows: usize, cols: usize) -> Matrix {
        Matrix::from_fn(rows, cols, |_, _| if self.rng.gen_bool(0.25) { Scalar::zero() } else { self.scalar() })
    }

    /// Product of random `rows x r` and `r x cols` factors, so rank at most `r`.
    pub fn low_rank(&mut self, rows: usize, cols: usize, r: usize) -> Matrix {
        let left = self.dense(rows, r);
        let right = self.dense(r, cols);
        left.try_mul(&right).expect("conformable factors")
    }

    /// Random matrix of random shape-limited rank.
    pub fn rect(&mut self, rows: usize, cols: usize) -> Matrix {
        if self.rng.gen_bool(0.5) {
            self.dense(rows, cols)
        } else {
            let r = self.rng.gen_range(0..=rows.min(cols));
            self.low_rank(rows, cols, r)
        }
    }

    pub fn matrix(&mut self, n: usize) -> Matrix {
        self.rect(n, n)
    }

    pub fn invertible(&mut self, n: usize) -> Matrix {
        loop {
            let m = self.dense(n, n);
            if rank(&m) == n {
                return m;
            }
        }
    }

    pub fn self_adjoint(&mut self, n: usize) -> Matrix {
        let m = self.matrix(n);
        &m + &m.adjoint()
    }

    /// Projector onto a random subspace of `range(within)`.
    pub fn sub_projection(&mut self, within: &Projection) -> Projection {
        let basis = range_of(within).basis_columns();
        let k = basis.cols();
        if k == 0 {
            return within.clone();
        }
        let keep = self.rng.gen_range(0..=k);
        let coeffs = self.dense(k, keep);
        projector_of(&col_space(&(&basis * &coeffs)))
    }

    /// Projector onto `range(below)` plus a random subspace.
    pub fn super_projection(&mut self, below: &Projection) -> Projection {
        let n = below.dim();
        let extra = self.rng.gen_range(0..=n);
        let span = below.matrix().hstack(&self.dense(n, extra)).expect("same rows");
        projector_of(&col_space(&span))
    }

    pub fn projection(&mut self, n: usize) -> Projection {
        self.sub_projection(&Projection::identity(n))
    }

    /// Signed permutation with phases `i^k`, optionally followed by a
    /// Pythagorean rotation on one coordinate pair.
    pub fn unitary(&mut self, n: usize) -> Matrix {
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(&mut self.rng);
        let phases = [Scalar::one(), Scalar::i(), Scalar::from_int(-1), -Scalar::i()];
        let mut u = Matrix::zeros(n, n);
        for (j, &p) in perm.iter().enumerate() {
            let phase = phases[self.rng.gen_range(0..4)].clone();
            u = u.with_block(p, j, &Matrix::diag(&[phase]));
        }
        if n >= 2 && self.rng.gen_bool(0.5) {
            let (c, s) = [(3, 4), (4, 3), (5, 12)][self.rng.gen_range(0..3)];
            let h = if c == 5 { 13 } else { 5 };
            let c = Scalar::from_ratio(c, h);
            let s = Scalar::from_ratio(s, h);
            let p = self.rng.gen_range(0..n);
            let q = (p + self.rng.gen_range(1..n)) % n;
            let (sp, sq) = if self.rng.gen_bool(0.5) { (-&s, s) } else { (&Scalar::i() * &s, &Scalar::i() * &s) };
            let mut rot = Matrix::identity(n);
            rot = rot.with_block(p, p, &Matrix::diag(std::slice::from_ref(&c)));
            rot = rot.with_block(q, q, &Matrix::diag(&[c]));
            rot = rot.with_block(p, q, &Matrix::diag(&[sp]));
            rot = rot.with_block(q, p, &Matrix::diag(&[sq]));
            u = &rot * &u;
        }
        debug_assert_eq!(&u * &u.adjoint(), Matrix::identity(n));
        u
    }

    /// A matrix `w` with `w ⊥ a`: `(I - a a†) R (I - a†a)` for random `R`.
    pub fn orthogonal_to(&mut self, a: &Matrix) -> Matrix {
        let r = self.rect(a.rows(), a.cols());
        &(left_ann(a).matrix() * &r) * right_ann(a).matrix()
    }

    /// Self-adjoint `w ⊥ a` for self-adjoint `a`.
    pub fn self_adjoint_orthogonal_to(&mut self, a: &Matrix) -> Matrix {
        let r = self.self_adjoint(a.rows());
        let p = right_ann(a);
        &(p.matrix() * &r) * p.matrix()
    }

    pub fn frame(&mut self, n: usize, hermitian: bool) -> Frame {
        let mut blocks = Vec::new();
        let mut start = 0;
        while start < n {
            let size = self.rng.gen_range(1..=(n - start).min(3));
            let roll = self.rng.gen_range(0..10);
            let kind = match roll {
                0..=3 => BlockKind::Generic,
                4..=5 => BlockKind::Scalar,
                6..=7 if !hermitian => BlockKind::ScaledUnitary,
                6..=7 => BlockKind::Generic,
                _ => BlockKind::Zero,
            };
            let core = match kind {
                BlockKind::Generic if hermitian => self.self_adjoint(size),
                BlockKind::Generic => self.matrix(size),
                BlockKind::Scalar => {
                    let c = if hermitian { self.real_scalar() } else { self.scalar() };
                    Matrix::identity(size).scale(&c)
                }
                BlockKind::ScaledUnitary => {
                    let c = self.nonzero_scalar();
                    self.unitary(size).scale(&c)
                }
                BlockKind::Zero => Matrix::zeros(size, size),
            };
            blocks.push(Block { start, size, kind, core });
            start += size;
        }
        let unitary = self.unitary(n);
        let inner = blocks.iter().fold(Matrix::zeros(n, n), |acc, b| acc.with_block(b.start, b.start, &b.core));
        let x = &(&unitary * &inner) * &unitary.adjoint();
        Frame { n, unitary, blocks, x }
    }

    /// Blockwise projection: `0` or `1` on every block, plus (when `fine`) a
    /// random sub-projection on blocks that allow it.
    pub fn selection(&mut self, frame: &Frame, fine: bool, commute_with_x: bool) -> BlockProjection {
        let within = frame.blocks.iter().map(|b| Projection::identity(b.size)).collect();
        self.sub_selection(frame, &BlockProjection(within), fine, commute_with_x)
    }

    /// Random blockwise projection below `of`.
    pub fn sub_selection(
        &mut self,
        frame: &Frame,
        of: &BlockProjection,
        fine: bool,
        commute_with_x: bool,
    ) -> BlockProjection {
        let parts = frame
            .blocks
            .iter()
            .zip(&of.0)
            .map(|(b, e)| {
                if fine && b.kind.allows_sub_projections(commute_with_x) && self.rng.gen_bool(0.6) {
                    self.sub_projection(e)
                } else if self.rng.gen_bool(0.5) {
                    e.clone()
                } else {
                    Projection::zero(b.size)
                }
            })
            .collect();
        BlockProjection(parts)
    }

    /// Random blockwise projection above `of`.
    pub fn super_selection(
        &mut self,
        frame: &Frame,
        of: &BlockProjection,
        fine: bool,
        commute_with_x: bool,
    ) -> BlockProjection {
        let parts = frame
            .blocks
            .iter()
            .zip(&of.0)
            .map(|(b, e)| {
                if fine && b.kind.allows_sub_projections(commute_with_x) {
                    self.super_projection(e)
                } else if self.rng.gen_bool(0.5) || !e.matrix().is_zero() {
                    Projection::identity(b.size)
                } else {
                    e.clone()
                }
            })
            .collect();
        BlockProjection(parts)
    }

    /// Pair `a = x e`, `b = x f` below `x`, with a second bound `y = x + w`, `w ⊥ x`.
    ///
    /// With `fine = false` the selections are unions of blocks, so `e`, `f`
    /// commute with `x` and the pair is coherent.
    pub fn bounded_pair(&mut self, n: usize, fine: bool) -> BoundedInstance {
        let frame = self.frame(n, false);
        let e = self.selection(&frame, fine, false);
        let f = self.selection(&frame, fine, false);
        let w = self.orthogonal_to(&frame.x);
        BoundedInstance::assemble(frame, e, f, w, false)
    }

    /// Bounded pair that is never coherent (`n ≥ 2`): on one scalar-like block
    /// of size at least two, `e` and `f` are distinct, non-orthogonal lines.
    pub fn non_coherent_pair(&mut self, n: usize) -> BoundedInstance {
        assert!(n >= 2, "non-coherent pairs need n >= 2");
        loop {
            let frame = self.frame(n, false);
            let Some(k) = frame.blocks.iter().position(|b| {
                b.size >= 2 && matches!(b.kind, BlockKind::Scalar | BlockKind::ScaledUnitary) && !b.core.is_zero()
            }) else {
                continue;
            };
            let size = frame.blocks[k].size;
            let (l1, l2) = loop {
                let (v1, v2) = (self.dense(size, 1), self.dense(size, 1));
                if v1.is_zero() || v2.is_zero() {
                    continue;
                }
                let (l1, l2) = (projector_of(&col_space(&v1)), projector_of(&col_space(&v2)));
                if !l1.commutes_with(&l2) {
                    break (l1, l2);
                }
            };
            let mut e = self.selection(&frame, true, false);
            let mut f = self.selection(&frame, true, false);
            e.0[k] = l1;
            f.0[k] = l2;
            let w = self.orthogonal_to(&frame.x);
            return BoundedInstance::assemble(frame, e, f, w, false);
        }
    }

    /// Self-adjoint triple `a, b ⩽* x`, all in the Hermitian part.
    pub fn hermitian_bounded_pair(&mut self, n: usize) -> BoundedInstance {
        let frame = self.frame(n, true);
        let e = self.selection(&frame, true, true);
        let f = self.selection(&frame, true, true);
        let w = self.self_adjoint_orthogonal_to(&frame.x);
        BoundedInstance::assemble(frame, e, f, w, true)
    }

    /// `a = c + p`, `b = c + q` with `c = x g` and `p, q ⊥ c`; `c` is a common
    /// lower bound but the pair usually has no upper bound.
    pub fn common_part_pair(&mut self, n: usize) -> CommonPartInstance {
        let frame = self.frame(n, false);
        let g = self.selection(&frame, true, false);
        let c = &frame.x * frame.lift(&g).matrix();
        let p = self.orthogonal_to(&c);
        let q = self.orthogonal_to(&c);
        CommonPartInstance { a: &c + &p, b: &c + &q, c, frame, g }
    }

    /// Comparable pair `a ⩽* b`, built either as `x e ⩽* x` or as `a ⩽* a + c`, `c ⊥ a`.
    pub fn comparable_pair(&mut self, n: usize) -> (Matrix, Matrix) {
        if self.rng.gen_bool(0.5) {
            let frame = self.frame(n, false);
            let e = self.selection(&frame, true, false);
            (&frame.x * frame.lift(&e).matrix(), frame.x)
        } else {
            let a = self.matrix(n);
            let c = self.orthogonal_to(&a);
            let b = &a + &c;
            (a, b)
        }
    }

    /// Chain `c0 ⩽* c1 ⩽* c2 ⩽* c3`.
    pub fn chain(&mut self, n: usize) -> [Matrix; 4] {
        let frame = self.frame(n, false);
        let top = self.selection(&frame, true, false);
        let mid = self.sub_selection(&frame, &top, true, false);
        let low = self.sub_selection(&frame, &mid, true, false);
        let x = &frame.x;
        let c2 = x * frame.lift(&top).matrix();
        let c1 = x * frame.lift(&mid).matrix();
        let c0 = x * frame.lift(&low).matrix();
        let c3 = &c2 + &self.orthogonal_to(&c2);
        [c0, c1, c2, c3]
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BlockKind {
    Generic,
    /// `c I`
    Scalar,
    /// `c V` with `V` unitary; `x*x` is scalar here but `x` is not.
    ScaledUnitary,
    Zero,
}

impl BlockKind {
    fn allows_sub_projections(self, commute_with_x: bool) -> bool {
        match self {
            BlockKind::Scalar | BlockKind::Zero => true,
            BlockKind::ScaledUnitary => !commute_with_x,
            BlockKind::Generic => false,
        }
    }
}

#[derive(Clone, Debug)]
pub struct Block {
    pub start: usize,
    pub size: usize,
    pub kind: BlockKind,
    pub core: Matrix,
}

/// `x = U diag(blocks) U*`.
#[derive(Clone, Debug)]
pub struct Frame {
    pub n: usize,
    pub unitary: Matrix,
    pub blocks: Vec<Block>,
    pub x: Matrix,
}

/// One projection per frame block.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockProjection(pub Vec<Projection>);

impl BlockProjection {
    pub fn meet(&self, other: &BlockProjection) -> BlockProjection {
        BlockProjection(self.0.iter().zip(&other.0).map(|(e, f)| e.meet(f)).collect())
    }

    pub fn join(&self, other: &BlockProjection) -> BlockProjection {
        BlockProjection(self.0.iter().zip(&other.0).map(|(e, f)| e.join(f)).collect())
    }
}

impl Frame {
    /// `U diag(parts) U*`.
    pub fn lift(&self, p: &BlockProjection) -> Projection {
        let inner = self
            .blocks
            .iter()
            .zip(&p.0)
            .fold(Matrix::zeros(self.n, self.n), |acc, (b, e)| acc.with_block(b.start, b.start, e.matrix()));
        Projection::trusted(&(&self.unitary * &inner) * &self.unitary.adjoint())
    }
}

#[derive(Clone, Debug)]
pub struct BoundedInstance {
    pub frame: Frame,
    pub e: BlockProjection,
    pub f: BlockProjection,
    pub a: Matrix,
    pub b: Matrix,
    pub x: Matrix,
    /// Second upper bound; equals `x` when `x` has no room for an orthogonal summand.
    pub y: Matrix,
    hermitian: bool,
}

impl BoundedInstance {
    fn assemble(frame: Frame, e: BlockProjection, f: BlockProjection, w: Matrix, hermitian: bool) -> Self {
        let x = frame.x.clone();
        let a = &x * frame.lift(&e).matrix();
        let b = &x * frame.lift(&f).matrix();
        let y = &x + &w;
        BoundedInstance { frame, e, f, a, b, x, y, hermitian }
    }

    /// A common lower bound `x g` with `g ≤ e ∧ f` blockwise and `g ∈ K_x`.
    pub fn lower_bound(&self, gen: &mut Generator) -> Matrix {
        let g = gen.sub_selection(&self.frame, &self.e.meet(&self.f), true, self.hermitian);
        &self.x * self.frame.lift(&g).matrix()
    }

    /// A common upper bound `x h + w` with `h ≥ e ∨ f` blockwise and `w ⊥ x h`.
    pub fn upper_bound(&self, gen: &mut Generator) -> Matrix {
        let h = gen.super_selection(&self.frame, &self.e.join(&self.f), true, self.hermitian);
        let z = &self.x * self.frame.lift(&h).matrix();
        let w = if self.hermitian { gen.self_adjoint_orthogonal_to(&z) } else { gen.orthogonal_to(&z) };
        &z + &w
    }
}

#[derive(Clone, Debug)]
pub struct CommonPartInstance {
    pub frame: Frame,
    pub g: BlockProjection,
    pub c: Matrix,
    pub a: Matrix,
    pub b: Matrix,
}

impl CommonPartInstance {
    /// `x g'` for a blockwise `g' ≤ g`; always below `c`, hence below `a` and `b`.
    pub fn lower_bound(&self, gen: &mut Generator) -> Matrix {
        let g = gen.sub_selection(&self.frame, &self.g, true, false);
        &self.frame.x * self.frame.lift(&g).matrix()
    }
}
